//! Matrix families over the spectral variable, monodromy matrices and their
//! characteristic-polynomial invariants, and the refactorization identity
//! behind the built-in maps.

use crate::algebra::rational::RatExt;

use crate::algebra::matrix::{CharPoly, LaxMatrix};
use crate::algebra::poly::Poly;
use crate::algebra::ratfun::RatFun;
use crate::algebra::rational::Rational;
use crate::error::{Result, YbError};
use crate::maps::{projector_of, YbMap};
use crate::state::{kind_mismatch, DressingSite, KdvSite, Site, SiteKind, TupleState};

/// The built-in matrix families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaxFamily {
    /// 2×2 polynomial family of the dressing chain.
    Dressing,
    /// `I + 2λ/(ζ−λ) P` with a rank-1 projector; one simple pole at ζ = λ.
    Kdv,
}

impl LaxFamily {
    pub fn name(&self) -> &str {
        match self {
            LaxFamily::Dressing => "dressing",
            LaxFamily::Kdv => "kdv",
        }
    }

    pub fn kind(&self) -> SiteKind {
        match self {
            LaxFamily::Dressing => SiteKind::Dressing,
            LaxFamily::Kdv => SiteKind::Kdv,
        }
    }

    pub fn build(&self, site: &Site) -> Result<LaxMatrix> {
        match self {
            LaxFamily::Dressing => Ok(dressing_a(site.as_dressing()?)),
            LaxFamily::Kdv => kdv_a(site.as_kdv()?),
        }
    }

    /// Poles in the spectral variable contributed by one site, as the linear
    /// factors of the clearing polynomial.
    fn clearing_factor(&self, site: &Site) -> Result<Poly> {
        match self {
            LaxFamily::Dressing => Ok(Poly::one()),
            LaxFamily::Kdv => {
                let lam = &site.as_kdv()?.lambda;
                // ζ - λ
                Ok(Poly::from_coeffs(vec![-lam.clone(), Rational::one()]))
            }
        }
    }
}

pub fn family_by_name(name: &str) -> Option<LaxFamily> {
    match name {
        "dressing" => Some(LaxFamily::Dressing),
        "kdv" => Some(LaxFamily::Kdv),
        _ => None,
    }
}

/// The dressing-chain matrix `[[f, 1], [f² + β − ζ, f]]`.
pub fn dressing_a(s: &DressingSite) -> LaxMatrix {
    let f = RatFun::constant(s.f.clone());
    let corner = RatFun::from_poly(Poly::from_coeffs(vec![
        &s.f * &s.f + &s.beta,
        -Rational::one(),
    ]));
    LaxMatrix::from_rows(vec![
        vec![f.clone(), RatFun::one()],
        vec![corner, f],
    ])
    .expect("square")
}

/// The soliton matrix `I + 2λ/(ζ−λ) P` with `P = ξ⊗η/(ξ,η)`.
pub fn kdv_a(s: &KdvSite) -> Result<LaxMatrix> {
    let p = projector_of(s);
    // 2λ/(ζ - λ)
    let coeff = RatFun::new(
        Poly::constant(Rational::from(2) * &s.lambda),
        Poly::from_coeffs(vec![-s.lambda.clone(), Rational::one()]),
    )?;
    LaxMatrix::identity(s.d()).add(&p.scale(&coeff))
}

/// The ordered product `M = A(x_n) A(x_{n-1}) … A(x_1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyMatrix {
    pub matrix: LaxMatrix,
    pub factor_count: usize,
}

pub fn monodromy(family: LaxFamily, s: &TupleState) -> Result<MonodromyMatrix> {
    if s.kind() != family.kind() {
        return Err(kind_mismatch(family.kind(), s.kind()));
    }
    let mut m = family.build(s.site(s.n())?)?;
    for i in (1..s.n()).rev() {
        m = m.mat_mul(&family.build(s.site(i)?)?)?;
    }
    Ok(MonodromyMatrix {
        matrix: m,
        factor_count: s.n(),
    })
}

/// Checks the refactorization identity `A(x̃) A(ỹ) = A(y) A(x)` for
/// `(x̃, ỹ) = R(x, y)`, exactly as matrices of rational functions.
pub fn refactor_check(family: LaxFamily, map: &dyn YbMap, x: &Site, y: &Site) -> Result<bool> {
    let (xt, yt) = map.apply(x, y)?;
    let lhs = family.build(&xt)?.mat_mul(&family.build(&yt)?)?;
    let rhs = family.build(y)?.mat_mul(&family.build(x)?)?;
    Ok(lhs == rhs)
}

/// Closed-form refactorization for the dressing family: splits a product of
/// two dressing matrices with known parameters back into its factors.
///
/// With `l = A(f̃1, β1) A(f̃2, β2)` the (1,2)-entry is `f̃1 + f̃2` and the
/// constant term of the (1,1)-entry is `f̃1 f̃2 + f̃2² + β2`, which determines
/// both unknowns linearly once the sum is nonzero.
pub fn refactor_solve_dressing(
    l: &LaxMatrix,
    beta1: &Rational,
    beta2: &Rational,
) -> Result<(DressingSite, DressingSite)> {
    if l.dim() != 2 {
        return Err(YbError::DimensionMismatch(l.dim(), 2));
    }
    let s_entry = l.get(0, 1);
    if !s_entry.is_polynomial() || s_entry.num().degree().is_some_and(|d| d > 0) {
        return Err(YbError::NotFactorizable(
            "(1,2)-entry is not constant in the spectral variable".into(),
        ));
    }
    let sum = s_entry.num().coeff(0);
    if sum.is_zero() {
        return Err(YbError::NotFactorizable("f1 + f2 = 0".into()));
    }
    let c = l.get(0, 0).num().coeff(0); // constant term of l_11
    let f2 = (&c - beta2) / &sum;
    let f1 = &sum - &f2;
    let out1 = DressingSite {
        f: f1,
        beta: beta1.clone(),
    };
    let out2 = DressingSite {
        f: f2,
        beta: beta2.clone(),
    };
    let check = dressing_a(&out1).mat_mul(&dressing_a(&out2))?;
    if &check != l {
        return Err(YbError::NotFactorizable("residual mismatch".into()));
    }
    Ok((out1, out2))
}

/// Characteristic-polynomial invariants of the monodromy matrix. For
/// families with poles the matrix is cleared by the product of its pole
/// factors first; the clearing polynomial is itself conserved (the multiset
/// of velocities is) and reported alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralInvariants {
    pub char_poly: CharPoly,
    pub clearing_factor: Poly,
}

pub fn spectral_invariants(family: LaxFamily, s: &TupleState) -> Result<SpectralInvariants> {
    let m = monodromy(family, s)?;
    let mut clearing = Poly::one();
    for i in 1..=s.n() {
        clearing = clearing.mul(&family.clearing_factor(s.site(i)?)?);
    }
    let cleared = if clearing == Poly::one() {
        m.matrix
    } else {
        m.matrix.scale(&RatFun::from_poly(clearing.clone()))
    };
    Ok(SpectralInvariants {
        char_poly: cleared.char_poly()?,
        clearing_factor: clearing,
    })
}
