//! The operator calculus on tuple states: liftings `R_ij`, transpositions
//! `P_ij`, the cyclic shift ω, the generators `S_i` and the monodromy maps
//! `T_i`, together with exact verifiers for the relations among them.
//!
//! Composition convention throughout: in a displayed product of operators the
//! rightmost factor acts first. Indices are 1-based and taken modulo n with n
//! standing in for 0.

use crate::error::{Result, YbError};
use crate::maps::YbMap;
use crate::state::{kind_mismatch, Site, TupleState};

fn check_kind(map: &dyn YbMap, x: &Site) -> Result<()> {
    if let Some(kind) = map.kind() {
        if x.kind() != kind {
            return Err(kind_mismatch(kind, x.kind()));
        }
    }
    Ok(())
}

/// Applies the two-site map itself.
pub fn apply_r(map: &dyn YbMap, x: &Site, y: &Site) -> Result<(Site, Site)> {
    check_kind(map, x)?;
    check_kind(map, y)?;
    map.apply(x, y)
}

/// Lifting of R to the i-th and j-th factors: slot i receives `f(s_i, s_j)`
/// and slot j receives `g(s_i, s_j)`, for either ordering of i and j.
pub fn apply_rij(map: &dyn YbMap, s: &TupleState, i: usize, j: usize) -> Result<TupleState> {
    if i == j {
        return Err(YbError::IndexOutOfRange { index: i, n: s.n() });
    }
    let (f, g) = apply_r(map, s.site(i)?, s.site(j)?)?;
    let mut out = s.clone();
    out.set_site(i, f);
    out.set_site(j, g);
    Ok(out)
}

/// Transposition of slots i and j.
pub fn apply_p(s: &TupleState, i: usize, j: usize) -> Result<TupleState> {
    let a = s.site(i)?.clone();
    let b = s.site(j)?.clone();
    let mut out = s.clone();
    out.set_site(i, b);
    out.set_site(j, a);
    Ok(out)
}

/// The cyclic shift ω = P_{1n} P_{1,n-1} … P_{12}.
pub fn apply_omega(s: &TupleState) -> TupleState {
    let mut out = s.clone();
    for k in 2..=s.n() {
        out = apply_p(&out, 1, k).expect("indices in range");
    }
    out
}

/// Wraps a 1-based index into 1..=n.
fn wrap(idx: usize, n: usize) -> usize {
    let m = idx % n;
    if m == 0 {
        n
    } else {
        m
    }
}

/// The affine Weyl generator `S_i = P_{i,i+1} R_{i,i+1}` (i+1 taken mod n).
pub fn apply_si(map: &dyn YbMap, s: &TupleState, i: usize) -> Result<TupleState> {
    let n = s.n();
    let i = wrap(i, n);
    let j = wrap(i + 1, n);
    let after_r = apply_rij(map, s, i, j)?;
    apply_p(&after_r, i, j)
}

/// The monodromy map `T_i = R_{i,i+n-1} R_{i,i+n-2} … R_{i,i+1}`.
pub fn apply_ti(map: &dyn YbMap, s: &TupleState, i: usize) -> Result<TupleState> {
    let n = s.n();
    if n < 2 {
        return Err(YbError::IndexOutOfRange { index: i, n });
    }
    let i = wrap(i, n);
    let mut out = s.clone();
    for k in 1..n {
        let j = wrap(i + k, n);
        out = apply_rij(map, &out, i, j).map_err(|e| match e {
            YbError::Singular(msg) => {
                YbError::Singular(format!("factor R_{{{i},{j}}} of T_{i}: {msg}"))
            }
            other => other,
        })?;
    }
    Ok(out)
}

/// The Yang-Baxter relation `R_12 R_13 R_23 = R_23 R_13 R_12` on a triple.
pub fn check_yb(map: &dyn YbMap, triple: &TupleState) -> Result<bool> {
    if triple.n() != 3 {
        return Err(YbError::IndexOutOfRange {
            index: 3,
            n: triple.n(),
        });
    }
    let lhs = apply_rij(map, &apply_rij(map, &apply_rij(map, triple, 2, 3)?, 1, 3)?, 1, 2)?;
    let rhs = apply_rij(map, &apply_rij(map, &apply_rij(map, triple, 1, 2)?, 1, 3)?, 2, 3)?;
    Ok(lhs == rhs)
}

/// Reversibility `R_21 R = Id` on a pair.
pub fn check_reversibility(map: &dyn YbMap, pair: &TupleState) -> Result<bool> {
    if pair.n() != 2 {
        return Err(YbError::IndexOutOfRange {
            index: 2,
            n: pair.n(),
        });
    }
    let forward = apply_rij(map, pair, 1, 2)?;
    let back = apply_rij(map, &forward, 2, 1)?;
    Ok(back == *pair)
}

/// Commutativity of two monodromy maps: `T_i T_j = T_j T_i`.
pub fn check_commutativity(map: &dyn YbMap, s: &TupleState, i: usize, j: usize) -> Result<bool> {
    let ij = apply_ti(map, &apply_ti(map, s, j)?, i)?;
    let ji = apply_ti(map, &apply_ti(map, s, i)?, j)?;
    Ok(ij == ji)
}

/// The product identity `T_1 T_2 … T_n = Id`.
pub fn check_product_identity(map: &dyn YbMap, s: &TupleState) -> Result<bool> {
    let mut out = s.clone();
    for i in (1..=s.n()).rev() {
        out = apply_ti(map, &out, i)?;
    }
    Ok(out == *s)
}

/// The braid relation `S_i S_{i+1} S_i = S_{i+1} S_i S_{i+1}` with affine
/// index wrapping.
pub fn check_braid(map: &dyn YbMap, s: &TupleState, i: usize) -> Result<bool> {
    let n = s.n();
    let i1 = wrap(i, n);
    let i2 = wrap(i + 1, n);
    let lhs = apply_si(map, &apply_si(map, &apply_si(map, s, i1)?, i2)?, i1)?;
    let rhs = apply_si(map, &apply_si(map, &apply_si(map, s, i2)?, i1)?, i2)?;
    Ok(lhs == rhs)
}

/// The involution `S_i^2 = Id`.
pub fn check_involution(map: &dyn YbMap, s: &TupleState, i: usize) -> Result<bool> {
    let twice = apply_si(map, &apply_si(map, s, i)?, i)?;
    Ok(twice == *s)
}

/// Result of sampling the converse of the commutativity theorem: reversibility
/// at n = 2 together with commutativity at n = 3 certify a reversible
/// Yang-Baxter map on the sampled set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyVerdict {
    pub pairs_pass: usize,
    pub pairs_fail: usize,
    pub pairs_skipped: usize,
    pub triples_pass: usize,
    pub triples_fail: usize,
    pub triples_skipped: usize,
    pub consistent: bool,
}

pub fn yb_from_monodromy(
    map: &dyn YbMap,
    pairs: &[TupleState],
    triples: &[TupleState],
) -> Result<MonodromyVerdict> {
    let mut v = MonodromyVerdict {
        pairs_pass: 0,
        pairs_fail: 0,
        pairs_skipped: 0,
        triples_pass: 0,
        triples_fail: 0,
        triples_skipped: 0,
        consistent: true,
    };
    for p in pairs {
        match check_product_identity(map, p) {
            Ok(true) => v.pairs_pass += 1,
            Ok(false) => v.pairs_fail += 1,
            Err(YbError::Singular(_)) => v.pairs_skipped += 1,
            Err(e) => return Err(e),
        }
    }
    for t in triples {
        match check_commutativity(map, t, 1, 2) {
            Ok(true) => v.triples_pass += 1,
            Ok(false) => v.triples_fail += 1,
            Err(YbError::Singular(_)) => v.triples_skipped += 1,
            Err(e) => return Err(e),
        }
    }
    v.consistent = v.pairs_fail == 0 && v.triples_fail == 0;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rint};
    use crate::maps::{AdlerMap, IdentityMap, PermutationMap, SumLeftMap};
    use crate::state::parse_state;

    fn scalars(vals: &[i64]) -> TupleState {
        TupleState::new(vals.iter().map(|&v| Site::scalar(rint(v))).collect()).unwrap()
    }

    #[test]
    fn r21_on_pair() {
        // R_21(x,y) = (g(y,x), f(y,x)); for sumleft f = x+y, g = y:
        // R_21(x,y) = (x, y+x)
        let s = scalars(&[1, 2]);
        let out = apply_rij(&SumLeftMap, &s, 2, 1).unwrap();
        assert_eq!(out, scalars(&[1, 3]));
    }

    #[test]
    fn r21_equals_prp() {
        let map = AdlerMap;
        let s = parse_state("(1,3; 2,1)").unwrap();
        let via_rij = apply_rij(&map, &s, 2, 1).unwrap();
        let prp = apply_p(
            &apply_rij(&map, &apply_p(&s, 1, 2).unwrap(), 1, 2).unwrap(),
            1,
            2,
        )
        .unwrap();
        assert_eq!(via_rij, prp);
    }

    #[test]
    fn r13_leaves_middle_slot() {
        let s = scalars(&[1, 2, 3]);
        let out = apply_rij(&SumLeftMap, &s, 1, 3).unwrap();
        assert_eq!(out, scalars(&[4, 2, 3]));
    }

    #[test]
    fn omega_cycles() {
        let s = scalars(&[1, 2, 3]);
        assert_eq!(apply_omega(&s), scalars(&[3, 1, 2]));
        for n in [3usize, 4, 5] {
            let s = scalars(&(0..n as i64).collect::<Vec<_>>());
            let mut t = s.clone();
            for _ in 0..n {
                t = apply_omega(&t);
            }
            assert_eq!(t, s);
        }
    }

    #[test]
    fn si_of_permutation_is_identity() {
        let s = scalars(&[1, 2, 3]);
        for i in 1..=3 {
            assert_eq!(apply_si(&PermutationMap, &s, i).unwrap(), s);
        }
    }

    #[test]
    fn s1_of_adler_fixture() {
        let s = parse_state("(1,3; 2,1)").unwrap();
        let out = apply_si(&AdlerMap, &s, 1).unwrap();
        let d1 = out.site(1).unwrap().as_dressing().unwrap();
        let d2 = out.site(2).unwrap().as_dressing().unwrap();
        assert_eq!((d1.f.clone(), d1.beta.clone()), (rat(5, 3), rint(1)));
        assert_eq!((d2.f.clone(), d2.beta.clone()), (rat(4, 3), rint(3)));
    }

    #[test]
    fn t_specializations_at_n2() {
        let map = AdlerMap;
        let s = parse_state("(1,3; 2,1)").unwrap();
        assert_eq!(
            apply_ti(&map, &s, 1).unwrap(),
            apply_rij(&map, &s, 1, 2).unwrap()
        );
        assert_eq!(
            apply_ti(&map, &s, 2).unwrap(),
            apply_rij(&map, &s, 2, 1).unwrap()
        );
    }

    #[test]
    fn t1_at_n3_is_r13_r12() {
        let map = AdlerMap;
        let s = parse_state("(1,3; 2,1; 1,2)").unwrap();
        let expected = apply_rij(&map, &apply_rij(&map, &s, 1, 2).unwrap(), 1, 3).unwrap();
        assert_eq!(apply_ti(&map, &s, 1).unwrap(), expected);
    }

    #[test]
    fn permutation_satisfies_everything() {
        let t = scalars(&[1, 2, 3]);
        assert!(check_yb(&PermutationMap, &t).unwrap());
        assert!(check_reversibility(&PermutationMap, &scalars(&[1, 2])).unwrap());
        assert!(check_braid(&PermutationMap, &t, 1).unwrap());
        assert!(check_product_identity(&PermutationMap, &t).unwrap());
    }

    #[test]
    fn sumleft_fails_yb_on_counterexample() {
        // LHS gives (4,2,1), RHS gives (3,2,1)
        let t = scalars(&[1, 1, 1]);
        assert!(!check_yb(&SumLeftMap, &t).unwrap());
        let lhs = apply_rij(
            &SumLeftMap,
            &apply_rij(&SumLeftMap, &apply_rij(&SumLeftMap, &t, 2, 3).unwrap(), 1, 3).unwrap(),
            1,
            2,
        )
        .unwrap();
        let rhs = apply_rij(
            &SumLeftMap,
            &apply_rij(&SumLeftMap, &apply_rij(&SumLeftMap, &t, 1, 2).unwrap(), 1, 3).unwrap(),
            2,
            3,
        )
        .unwrap();
        assert_eq!(lhs, scalars(&[4, 2, 1]));
        assert_eq!(rhs, scalars(&[3, 2, 1]));
    }

    #[test]
    fn adler_yb_and_reversibility_fixture() {
        let t = parse_state("(1,3; 2,1; 1,2)").unwrap();
        assert!(check_yb(&AdlerMap, &t).unwrap());
        let p = parse_state("(1,3; 2,1)").unwrap();
        assert!(check_reversibility(&AdlerMap, &p).unwrap());
    }

    #[test]
    fn commutativity_with_equal_indices() {
        let t = parse_state("(1,3; 2,1; 1,2)").unwrap();
        assert!(check_commutativity(&AdlerMap, &t, 2, 2).unwrap());
    }

    #[test]
    fn monodromy_verdicts() {
        let pairs = vec![scalars(&[1, 2]), scalars(&[3, 4])];
        let triples = vec![scalars(&[1, 1, 1])];
        let bad = yb_from_monodromy(&SumLeftMap, &pairs, &triples).unwrap();
        assert!(!bad.consistent);
        assert!(bad.triples_fail > 0);
        let good = yb_from_monodromy(&IdentityMap, &pairs, &triples).unwrap();
        assert!(good.consistent);
    }
}
