//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line. Every check is exact over rationals; the only tolerance
//! anywhere is "zero failures".
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use ybmaps::algebra::poly::Poly;
use ybmaps::algebra::ratfun::{ratfun_eq, RatFun};
use ybmaps::algebra::rational::{rat, rint};
use ybmaps::cli::{Cli, ResultDocument};
use ybmaps::dynamics::{conservation_report, height_series, iterate};
use ybmaps::lax::{refactor_check, refactor_solve_dressing, spectral_invariants, LaxFamily};
use ybmaps::maps::{
    adler_r, by_name, kdv_r, lyubashenko_yb_iff_commute, AdlerMap, KdvMap, LyubashenkoPair,
    SumLeftMap, YbMap,
};
use ybmaps::sample::Sampler;
use ybmaps::state::{parse_state, DressingSite, Site, SiteKind, TupleState};
use ybmaps::yb::{
    apply_rij, check_braid, check_commutativity, check_involution, check_product_identity,
    check_reversibility, check_yb, yb_from_monodromy,
};
use ybmaps::YbError;

struct Tally {
    pass: usize,
    fail: usize,
    skipped: usize,
}

/// Runs `check` over `samples` seeded random tuples, skipping singular ones.
fn tally(
    map: &dyn YbMap,
    kind: SiteKind,
    n: usize,
    d: usize,
    samples: usize,
    seed: u64,
    check: impl Fn(&dyn YbMap, &TupleState) -> ybmaps::Result<bool>,
) -> Tally {
    let mut sampler = Sampler::new(seed);
    let mut t = Tally {
        pass: 0,
        fail: 0,
        skipped: 0,
    };
    for _ in 0..samples {
        let state = sampler.tuple(kind, n, d).expect("sampling");
        match check(map, &state) {
            Ok(true) => t.pass += 1,
            Ok(false) => t.fail += 1,
            Err(YbError::Singular(_)) => t.skipped += 1,
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
    t
}

fn report(criterion: &str, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_yang_baxter_identity() {
    let adler = tally(&AdlerMap, SiteKind::Dressing, 3, 2, 1000, 101, |m, s| {
        check_yb(m, s)
    });
    report(
        "1a [Adler Yang-Baxter, 1000 triples]",
        adler.fail == 0,
        &format!("pass={} skip={}", adler.pass, adler.skipped),
    );
    for (d, seed) in [(2usize, 102u64), (3, 103)] {
        let t = tally(&KdvMap, SiteKind::Kdv, 3, d, 500, seed, |m, s| check_yb(m, s));
        report(
            &format!("1b [KdV Yang-Baxter, d={d}, 500 triples]"),
            t.fail == 0,
            &format!("pass={} skip={}", t.pass, t.skipped),
        );
    }
}

#[test]
fn criterion_2_reversibility() {
    let adler = tally(&AdlerMap, SiteKind::Dressing, 2, 2, 1000, 201, |m, s| {
        check_reversibility(m, s)
    });
    report(
        "2a [Adler reversibility, 1000 pairs]",
        adler.fail == 0,
        &format!("pass={} skip={}", adler.pass, adler.skipped),
    );
    let kdv = tally(&KdvMap, SiteKind::Kdv, 2, 2, 1000, 202, |m, s| {
        check_reversibility(m, s)
    });
    report(
        "2b [KdV reversibility, 1000 pairs]",
        kdv.fail == 0,
        &format!("pass={} skip={}", kdv.pass, kdv.skipped),
    );
}

#[test]
fn criterion_3_monodromy_commutativity_and_product() {
    let configs: &[(&dyn YbMap, SiteKind, usize, usize)] = &[
        (&AdlerMap, SiteKind::Dressing, 3, 2),
        (&AdlerMap, SiteKind::Dressing, 4, 2),
        (&AdlerMap, SiteKind::Dressing, 5, 2),
        (&KdvMap, SiteKind::Kdv, 3, 2),
    ];
    for &(map, kind, n, d) in configs {
        let comm = tally(map, kind, n, d, 100, 300 + n as u64, |m, s| {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if !check_commutativity(m, s, i, j)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        });
        report(
            &format!("3a [{} n={n}: T_i T_j = T_j T_i, all pairs, 100 samples]", map.name()),
            comm.fail == 0,
            &format!("pass={} skip={}", comm.pass, comm.skipped),
        );
        let prod = tally(map, kind, n, d, 100, 300 + n as u64, |m, s| {
            check_product_identity(m, s)
        });
        report(
            &format!("3b [{} n={n}: T_1…T_n = Id, 100 samples]", map.name()),
            prod.fail == 0,
            &format!("pass={} skip={}", prod.pass, prod.skipped),
        );
    }
}

#[test]
fn criterion_4_braid_and_involution() {
    for n in [3usize, 4, 5] {
        let inv = tally(&AdlerMap, SiteKind::Dressing, n, 2, 100, 400 + n as u64, |m, s| {
            for i in 1..=n {
                if !check_involution(m, s, i)? {
                    return Ok(false);
                }
            }
            Ok(true)
        });
        report(
            &format!("4a [Adler n={n}: S_i^2 = Id, all affine i, 100 samples]"),
            inv.fail == 0,
            &format!("pass={} skip={}", inv.pass, inv.skipped),
        );
        let braid = tally(&AdlerMap, SiteKind::Dressing, n, 2, 100, 450 + n as u64, |m, s| {
            for i in 1..=n {
                if !check_braid(m, s, i)? {
                    return Ok(false);
                }
            }
            Ok(true)
        });
        report(
            &format!("4b [Adler n={n}: braid relation, all affine i, 100 samples]"),
            braid.fail == 0,
            &format!("pass={} skip={}", braid.pass, braid.skipped),
        );
    }
}

#[test]
fn criterion_5_spectral_conservation() {
    let configs: &[(&dyn YbMap, LaxFamily, &str)] = &[
        (&AdlerMap, LaxFamily::Dressing, "(1,3; 2,1; 1,2)"),
        (&AdlerMap, LaxFamily::Dressing, "(1,3; 2,1; 1,2; 1/2,5)"),
        (&KdvMap, LaxFamily::Kdv, "([1,0],[1,1],2; [0,1],[1,1],1; [1,1],[1,2],3)"),
    ];
    for (map, family, literal) in configs {
        let start = parse_state(literal).unwrap();
        let orbit = iterate(*map, &start, 1, 100);
        let full = orbit.truncated_at.is_none() && orbit.states.len() == 101;
        let rep = conservation_report(*family, &orbit).unwrap();
        report(
            &format!(
                "5a [{} {} n={}: invariants over 100 iterations of T_1]",
                map.name(),
                family.name(),
                start.n()
            ),
            full && rep.conserved && rep.first_divergence.is_none(),
            &format!(
                "steps={} conserved={} first_divergence={:?}",
                orbit.states.len() - 1,
                rep.conserved,
                rep.first_divergence
            ),
        );
    }
    // negative control: perturb one state and expect the flag at that step
    let start = parse_state("(1,3; 2,1; 1,2)").unwrap();
    let mut orbit = iterate(&AdlerMap, &start, 1, 10);
    orbit.states[7] = parse_state("(11,3; 2,1; 1,2)").unwrap();
    let rep = conservation_report(LaxFamily::Dressing, &orbit).unwrap();
    report(
        "5b [negative control: perturbed orbit flagged at the perturbed step]",
        !rep.conserved && rep.first_divergence == Some(7),
        &format!("first_divergence={:?}", rep.first_divergence),
    );
}

#[test]
fn criterion_6_refactorization() {
    let mut sampler = Sampler::new(601);
    let mut fail = 0;
    let mut skip = 0;
    for _ in 0..500 {
        let t = sampler.tuple(SiteKind::Dressing, 2, 2).unwrap();
        match refactor_check(LaxFamily::Dressing, &AdlerMap, t.site(1).unwrap(), t.site(2).unwrap())
        {
            Ok(true) => {}
            Ok(false) => fail += 1,
            Err(YbError::Singular(_)) => skip += 1,
            Err(e) => panic!("{e}"),
        }
    }
    report(
        "6a [dressing + Adler refactorization, 500 samples]",
        fail == 0,
        &format!("fail={fail} skip={skip}"),
    );

    for (d, seed) in [(2usize, 602u64), (3, 603)] {
        let mut sampler = Sampler::new(seed);
        let mut fail = 0;
        let mut skip = 0;
        for _ in 0..200 {
            let t = sampler.tuple(SiteKind::Kdv, 2, d).unwrap();
            match refactor_check(LaxFamily::Kdv, &KdvMap, t.site(1).unwrap(), t.site(2).unwrap()) {
                Ok(true) => {}
                Ok(false) => fail += 1,
                Err(YbError::Singular(_)) => skip += 1,
                Err(e) => panic!("{e}"),
            }
        }
        report(
            &format!("6b [KdV refactorization, d={d}, 200 samples]"),
            fail == 0,
            &format!("fail={fail} skip={skip}"),
        );
    }

    // refactor_solve_dressing reproduces adler_r
    let mut sampler = Sampler::new(604);
    let mut fail = 0;
    let mut skip = 0;
    for _ in 0..500 {
        let t = sampler.tuple(SiteKind::Dressing, 2, 2).unwrap();
        let x = t.site(1).unwrap().as_dressing().unwrap().clone();
        let y = t.site(2).unwrap().as_dressing().unwrap().clone();
        let swapped = ybmaps::lax::dressing_a(&y)
            .mat_mul(&ybmaps::lax::dressing_a(&x))
            .unwrap();
        match (
            refactor_solve_dressing(&swapped, &x.beta, &y.beta),
            adler_r(&x, &y),
        ) {
            (Ok(solved), Ok(mapped)) => {
                if solved != mapped {
                    fail += 1;
                }
            }
            (Err(YbError::NotFactorizable(_)), Err(YbError::Singular(_))) => skip += 1,
            (a, b) => panic!("inconsistent outcomes: {a:?} vs {b:?}"),
        }
    }
    report(
        "6c [refactor_solve_dressing reproduces the Adler map, 500 samples]",
        fail == 0,
        &format!("fail={fail} skip={skip}"),
    );
}

#[test]
fn criterion_7_worked_fixtures() {
    let (a, b) = adler_r(
        &DressingSite {
            f: rint(1),
            beta: rint(3),
        },
        &DressingSite {
            f: rint(2),
            beta: rint(1),
        },
    )
    .unwrap();
    let adler_ok = a.f == rat(4, 3) && a.beta == rint(3) && b.f == rat(5, 3) && b.beta == rint(1);
    report("7a [Adler (1,3;2,1) -> (4/3,3; 5/3,1)]", adler_ok, "exact");

    let s = parse_state("([1,0],[1,1],2; [0,1],[1,1],1)").unwrap();
    let (k1, k2) = kdv_r(s.site(1).unwrap().as_kdv().unwrap(), s.site(2).unwrap().as_kdv().unwrap())
        .unwrap();
    let kdv_ok = k1.xi() == [rint(1), rint(2)]
        && k1.eta() == [rint(3), rint(3)]
        && k2.xi() == [rint(-4), rint(1)]
        && k2.eta() == [rint(-3), rint(-3)];
    report("7b [KdV d=2 fixture representatives]", kdv_ok, "exact");

    let inv = spectral_invariants(LaxFamily::Dressing, &parse_state("(1,3; 2,1)").unwrap()).unwrap();
    let trace = RatFun::from_poly(Poly::from_coeffs(vec![rint(13), rint(-2)]));
    let det = RatFun::from_poly(Poly::from_coeffs(vec![rint(3), rint(-4), rint(1)]));
    let mono_ok = ratfun_eq(&inv.char_poly.trace(), &trace)
        && ratfun_eq(inv.char_poly.determinant(), &det);
    report(
        "7c [monodromy trace 13-2z and determinant (z-3)(z-1)]",
        mono_ok,
        "exact",
    );
}

#[test]
fn criterion_8_falsification_suite() {
    let triple =
        TupleState::new(vec![Site::scalar(rint(1)), Site::scalar(rint(1)), Site::scalar(rint(1))])
            .unwrap();
    let lhs = apply_rij(
        &SumLeftMap,
        &apply_rij(&SumLeftMap, &apply_rij(&SumLeftMap, &triple, 2, 3).unwrap(), 1, 3).unwrap(),
        1,
        2,
    )
    .unwrap();
    let rhs = apply_rij(
        &SumLeftMap,
        &apply_rij(&SumLeftMap, &apply_rij(&SumLeftMap, &triple, 1, 2).unwrap(), 1, 3).unwrap(),
        2,
        3,
    )
    .unwrap();
    let expected_l =
        TupleState::new(vec![Site::scalar(rint(4)), Site::scalar(rint(1)), Site::scalar(rint(1))]);
    let sumleft_ok = !check_yb(&SumLeftMap, &triple).unwrap()
        && lhs.to_string() == "(4; 2; 1)"
        && rhs.to_string() == "(3; 2; 1)";
    drop(expected_l);
    report(
        "8a [sumleft fails Yang-Baxter on (1,1,1) with LHS (4,2,1) vs RHS (3,2,1)]",
        sumleft_ok,
        &format!("lhs={lhs} rhs={rhs}"),
    );

    let mono = |k: usize| {
        let mut c = vec![rint(0); k + 1];
        c[k] = rint(1);
        RatFun::from_poly(Poly::from_coeffs(c))
    };
    let shift = RatFun::from_poly(Poly::from_coeffs(vec![rint(1), rint(1)]));
    let mut sampler = Sampler::new(801);
    let triples: Vec<TupleState> = (0..20)
        .map(|_| sampler.tuple(SiteKind::Scalar, 3, 2).unwrap())
        .collect();
    let bad = lyubashenko_yb_iff_commute(
        &LyubashenkoPair::new(shift, mono(2)).unwrap(),
        &triples,
    )
    .unwrap();
    let good = lyubashenko_yb_iff_commute(
        &LyubashenkoPair::new(mono(2), mono(3)).unwrap(),
        &triples,
    )
    .unwrap();
    report(
        "8b [Lyubashenko (z+1, z^2) fails YB; (z^2, z^3) passes on all triples]",
        !bad.maps_commute && bad.yb_fail > 0 && bad.consistent
            && good.maps_commute && good.yb_fail == 0 && good.consistent,
        &format!(
            "bad: fail={} consistent={}; good: pass={} consistent={}",
            bad.yb_fail, bad.consistent, good.yb_pass, good.consistent
        ),
    );

    let mut sampler = Sampler::new(802);
    let pairs: Vec<TupleState> = (0..20)
        .map(|_| sampler.tuple(SiteKind::Scalar, 2, 2).unwrap())
        .collect();
    let verdict_bad = yb_from_monodromy(&SumLeftMap, &pairs, &triples).unwrap();
    let adler_map = by_name("adler").unwrap();
    let mut sampler = Sampler::new(803);
    let dpairs: Vec<TupleState> = (0..20)
        .map(|_| sampler.tuple(SiteKind::Dressing, 2, 2).unwrap())
        .collect();
    let dtriples: Vec<TupleState> = (0..20)
        .map(|_| sampler.tuple(SiteKind::Dressing, 3, 2).unwrap())
        .collect();
    let verdict_good = yb_from_monodromy(adler_map.as_ref(), &dpairs, &dtriples).unwrap();
    report(
        "8c [yb_from_monodromy verdicts match]",
        !verdict_bad.consistent && verdict_bad.triples_fail > 0 && verdict_good.consistent,
        &format!(
            "sumleft triples_fail={}, adler consistent={}",
            verdict_bad.triples_fail, verdict_good.consistent
        ),
    );
}

#[test]
fn criterion_9_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_ybmaps");
    let args = [
        "verify",
        "--map",
        "adler",
        "--relation",
        "yang-baxter",
        "--samples",
        "50",
        "--seed",
        "7",
        "--no-timestamp",
    ];
    let run = || {
        std::process::Command::new(bin)
            .args(args)
            .output()
            .expect("spawn ybmaps")
    };
    let first = run();
    let second = run();
    report(
        "9 [identical seeded CLI runs are byte-identical]",
        first.status.success() && first.stdout == second.stdout && !first.stdout.is_empty(),
        &format!("bytes={}", first.stdout.len()),
    );
}

#[test]
fn criterion_10_entropy_diagnostic() {
    let started = std::time::Instant::now();
    let start = parse_state("(1,3; 2,1; 1,2)").unwrap();
    let orbit = iterate(&AdlerMap, &start, 1, 200);
    let series = height_series(&orbit);
    let elapsed = started.elapsed();
    report(
        "10 [Adler n=3, 200 steps under a minute with finite heights]",
        orbit.truncated_at.is_none()
            && series.heights.len() == 201
            && series.heights.iter().all(|&h| h >= 1)
            && elapsed.as_secs() < 60,
        &format!(
            "elapsed={elapsed:?} final_height={} log_slope={:?}",
            series.heights.last().unwrap(),
            series.log_slope
        ),
    );
}

// keep the CLI types linked so the doc-level determinism contract stays
// type-checked from this suite as well
#[allow(dead_code)]
fn _doc_types(_: &Cli, _: &ResultDocument) {}
