//! Square matrices over the field of rational functions in the spectral
//! variable, plus exact characteristic polynomials.

use std::fmt;

use crate::algebra::rational::RatExt;

use super::ratfun::RatFun;
use super::rational::Rational;
use crate::error::{Result, YbError};

/// Largest dimension `char_poly` accepts.
pub const CHAR_POLY_DIM_BOUND: usize = 6;

/// A d×d matrix of rational functions of the spectral variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxMatrix {
    dim: usize,
    entries: Vec<RatFun>, // row-major
}

impl LaxMatrix {
    pub fn from_rows(rows: Vec<Vec<RatFun>>) -> Result<Self> {
        let dim = rows.len();
        for row in &rows {
            if row.len() != dim {
                return Err(YbError::DimensionMismatch(row.len(), dim));
            }
        }
        Ok(LaxMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![RatFun::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = RatFun::one();
        }
        LaxMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &RatFun {
        &self.entries[row * self.dim + col]
    }

    pub fn mat_mul(&self, other: &LaxMatrix) -> Result<LaxMatrix> {
        if self.dim != other.dim {
            return Err(YbError::DimensionMismatch(self.dim, other.dim));
        }
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = RatFun::zero();
                for k in 0..d {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(LaxMatrix { dim: d, entries })
    }

    pub fn scale(&self, factor: &RatFun) -> LaxMatrix {
        LaxMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.mul(factor)).collect(),
        }
    }

    pub fn add(&self, other: &LaxMatrix) -> Result<LaxMatrix> {
        if self.dim != other.dim {
            return Err(YbError::DimensionMismatch(self.dim, other.dim));
        }
        Ok(LaxMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn trace(&self) -> RatFun {
        let mut acc = RatFun::zero();
        for i in 0..self.dim {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Determinant by cofactor expansion (small dimensions only).
    pub fn det(&self) -> RatFun {
        det_rec(&self.entries, self.dim)
    }

    /// Coefficients of `det(M - λI)` as rational functions of the spectral
    /// variable. Direct expansion up to dimension 4, trace-power recurrence
    /// beyond, rejecting dimensions above [`CHAR_POLY_DIM_BOUND`].
    pub fn char_poly(&self) -> Result<CharPoly> {
        if self.dim > CHAR_POLY_DIM_BOUND {
            return Err(YbError::DimensionBound {
                dim: self.dim,
                bound: CHAR_POLY_DIM_BOUND,
            });
        }
        if self.dim <= 4 {
            Ok(self.char_poly_direct())
        } else {
            self.char_poly_faddeev()
        }
    }

    fn char_poly_direct(&self) -> CharPoly {
        // entries of M - λI as degree-≤1 polynomials in λ over RatFun
        let d = self.dim;
        let lam: Vec<Vec<LamPoly>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut p = vec![self.get(i, j).clone()];
                        if i == j {
                            p.push(RatFun::constant(-Rational::one()));
                        }
                        LamPoly(p)
                    })
                    .collect()
            })
            .collect();
        let flat: Vec<LamPoly> = lam.into_iter().flatten().collect();
        let mut det = lam_det_rec(&flat, d);
        det.0.resize(d + 1, RatFun::zero());
        CharPoly { coeffs: det.0 }
    }

    /// Faddeev-LeVerrier over the fraction field: computes det(λI - M) and
    /// flips the sign for odd dimension.
    fn char_poly_faddeev(&self) -> Result<CharPoly> {
        let d = self.dim;
        let mut coeffs = vec![RatFun::zero(); d + 1];
        coeffs[d] = RatFun::one();
        let mut n = self.clone();
        for k in 1..=d {
            let c = n
                .trace()
                .scale(&(-Rational::one() / Rational::from(k as u64)));
            coeffs[d - k] = c.clone();
            if k < d {
                let shifted = n.add(&LaxMatrix::identity(d).scale(&c))?;
                n = self.mat_mul(&shifted)?;
            }
        }
        if d % 2 == 1 {
            for c in &mut coeffs {
                *c = c.neg();
            }
        }
        Ok(CharPoly { coeffs })
    }
}

fn minor(entries: &[RatFun], dim: usize, skip_col: usize) -> Vec<RatFun> {
    let mut out = Vec::with_capacity((dim - 1) * (dim - 1));
    for row in 1..dim {
        for col in 0..dim {
            if col != skip_col {
                out.push(entries[row * dim + col].clone());
            }
        }
    }
    out
}

fn det_rec(entries: &[RatFun], dim: usize) -> RatFun {
    match dim {
        0 => RatFun::one(),
        1 => entries[0].clone(),
        _ => {
            let mut acc = RatFun::zero();
            for col in 0..dim {
                if entries[col].is_zero() {
                    continue;
                }
                let sub = det_rec(&minor(entries, dim, col), dim - 1);
                let term = entries[col].mul(&sub);
                acc = if col % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Polynomial in the eigenvalue variable with RatFun coefficients,
/// lowest degree first. Internal to the direct char-poly expansion.
#[derive(Debug, Clone)]
struct LamPoly(Vec<RatFun>);

impl LamPoly {
    fn zero() -> Self {
        LamPoly(Vec::new())
    }

    fn add(&self, other: &LamPoly) -> LamPoly {
        let n = self.0.len().max(other.0.len());
        let z = RatFun::zero();
        LamPoly(
            (0..n)
                .map(|k| {
                    self.0
                        .get(k)
                        .unwrap_or(&z)
                        .add(other.0.get(k).unwrap_or(&z))
                })
                .collect(),
        )
    }

    fn sub(&self, other: &LamPoly) -> LamPoly {
        self.add(&LamPoly(other.0.iter().map(RatFun::neg).collect()))
    }

    fn mul(&self, other: &LamPoly) -> LamPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return LamPoly::zero();
        }
        let mut out = vec![RatFun::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        LamPoly(out)
    }
}

fn lam_minor(entries: &[LamPoly], dim: usize, skip_col: usize) -> Vec<LamPoly> {
    let mut out = Vec::with_capacity((dim - 1) * (dim - 1));
    for row in 1..dim {
        for col in 0..dim {
            if col != skip_col {
                out.push(entries[row * dim + col].clone());
            }
        }
    }
    out
}

fn lam_det_rec(entries: &[LamPoly], dim: usize) -> LamPoly {
    match dim {
        0 => LamPoly(vec![RatFun::one()]),
        1 => entries[0].clone(),
        _ => {
            let mut acc = LamPoly::zero();
            for col in 0..dim {
                let sub = lam_det_rec(&lam_minor(entries, dim, col), dim - 1);
                let term = entries[col].mul(&sub);
                acc = if col % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Coefficients of the characteristic polynomial `det(M - λI)`, the conserved
/// quantities of the monodromy dynamics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<RatFun>,
}

impl CharPoly {
    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    /// Degree of the matrix this came from.
    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `det(M)`: the constant coefficient.
    pub fn determinant(&self) -> &RatFun {
        &self.coeffs[0]
    }

    /// `tr(M)`, recovered from the subleading coefficient.
    pub fn trace(&self) -> RatFun {
        let d = self.dim();
        let sign = if d % 2 == 0 { -Rational::one() } else { Rational::one() };
        self.coeffs[d - 1].scale(&sign)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("({c})*lam^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
