//! Phase-space points: a site is an element of the underlying set together
//! with its spectral parameter, and dynamics acts on homogeneous tuples of
//! sites.

use std::fmt;

use crate::algebra::rational::RatExt;

use crate::algebra::rational::{bit_length, parse_rational, Rational};
use crate::error::{Result, YbError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SiteKind {
    Dressing,
    Kdv,
    Scalar,
}

impl fmt::Display for SiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SiteKind::Dressing => "dressing",
            SiteKind::Kdv => "kdv",
            SiteKind::Scalar => "scalar",
        };
        write!(f, "{s}")
    }
}

/// Dressing-chain site: a field value with its chain parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DressingSite {
    pub f: Rational,
    pub beta: Rational,
}

/// Matrix-KdV soliton polarization data: a vector/covector representative
/// pair and the soliton velocity. The pairing (ξ,η) must not vanish.
///
/// Equality is projective: the physical state is the projector
/// `P = ξ⊗η/(ξ,η)`, so representatives that differ by nonzero scalings of
/// ξ and η describe the same site.
#[derive(Debug, Clone, Eq)]
pub struct KdvSite {
    xi: Vec<Rational>,
    eta: Vec<Rational>,
    pub lambda: Rational,
}

impl KdvSite {
    pub fn new(xi: Vec<Rational>, eta: Vec<Rational>, lambda: Rational) -> Result<Self> {
        if xi.is_empty() || xi.len() != eta.len() {
            return Err(YbError::DimensionMismatch(xi.len(), eta.len()));
        }
        let s = KdvSite { xi, eta, lambda };
        if s.pairing().is_zero() {
            return Err(YbError::Singular("(xi, eta) = 0".into()));
        }
        Ok(s)
    }

    pub fn d(&self) -> usize {
        self.xi.len()
    }

    pub fn xi(&self) -> &[Rational] {
        &self.xi
    }

    pub fn eta(&self) -> &[Rational] {
        &self.eta
    }

    /// Canonical pairing (ξ, η).
    pub fn pairing(&self) -> Rational {
        pairing(&self.xi, &self.eta)
    }
}

impl PartialEq for KdvSite {
    fn eq(&self, other: &Self) -> bool {
        self.lambda == other.lambda
            && proportional(&self.xi, &other.xi)
            && proportional(&self.eta, &other.eta)
    }
}

/// True iff the two nonzero vectors differ by a scalar factor.
fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| {
            (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i])
        })
        && a.iter().zip(b).all(|(x, y)| x.is_zero() == y.is_zero())
}

/// Canonical pairing of a vector with a covector.
pub fn pairing(xi: &[Rational], eta: &[Rational]) -> Rational {
    xi.iter().zip(eta).map(|(a, b)| a * b).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Site {
    Dressing(DressingSite),
    Kdv(KdvSite),
    Scalar(Rational),
}

impl Site {
    pub fn kind(&self) -> SiteKind {
        match self {
            Site::Dressing(_) => SiteKind::Dressing,
            Site::Kdv(_) => SiteKind::Kdv,
            Site::Scalar(_) => SiteKind::Scalar,
        }
    }

    pub fn dressing(f: Rational, beta: Rational) -> Self {
        Site::Dressing(DressingSite { f, beta })
    }

    pub fn scalar(x: Rational) -> Self {
        Site::Scalar(x)
    }

    pub fn as_dressing(&self) -> Result<&DressingSite> {
        match self {
            Site::Dressing(s) => Ok(s),
            other => Err(kind_mismatch(SiteKind::Dressing, other.kind())),
        }
    }

    pub fn as_kdv(&self) -> Result<&KdvSite> {
        match self {
            Site::Kdv(s) => Ok(s),
            other => Err(kind_mismatch(SiteKind::Kdv, other.kind())),
        }
    }

    pub fn as_scalar(&self) -> Result<&Rational> {
        match self {
            Site::Scalar(x) => Ok(x),
            other => Err(kind_mismatch(SiteKind::Scalar, other.kind())),
        }
    }

    /// Maximum bit length over all rational components.
    pub fn height(&self) -> u64 {
        match self {
            Site::Dressing(s) => bit_length(&s.f).max(bit_length(&s.beta)),
            Site::Kdv(s) => s
                .xi
                .iter()
                .chain(&s.eta)
                .chain(std::iter::once(&s.lambda))
                .map(bit_length)
                .max()
                .unwrap_or(1),
            Site::Scalar(x) => bit_length(x),
        }
    }
}

pub fn kind_mismatch(expected: SiteKind, got: SiteKind) -> YbError {
    YbError::KindMismatch {
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Dressing(s) => write!(f, "{},{}", s.f, s.beta),
            Site::Kdv(s) => {
                let list = |v: &[Rational]| {
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                write!(f, "[{}],[{}],{}", list(&s.xi), list(&s.eta), s.lambda)
            }
            Site::Scalar(x) => write!(f, "{x}"),
        }
    }
}

/// An ordered homogeneous tuple of sites, the phase space of the monodromy
/// dynamics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleState {
    sites: Vec<Site>,
}

impl TupleState {
    pub fn new(sites: Vec<Site>) -> Result<Self> {
        if sites.is_empty() {
            return Err(YbError::Parse("empty tuple state".into()));
        }
        let kind = sites[0].kind();
        for s in &sites[1..] {
            if s.kind() != kind {
                return Err(kind_mismatch(kind, s.kind()));
            }
        }
        Ok(TupleState { sites })
    }

    pub fn n(&self) -> usize {
        self.sites.len()
    }

    pub fn kind(&self) -> SiteKind {
        self.sites[0].kind()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    /// 1-based access, matching the index conventions of the operator
    /// calculus.
    pub fn site(&self, i: usize) -> Result<&Site> {
        if i == 0 || i > self.sites.len() {
            return Err(YbError::IndexOutOfRange {
                index: i,
                n: self.sites.len(),
            });
        }
        Ok(&self.sites[i - 1])
    }

    pub(crate) fn set_site(&mut self, i: usize, site: Site) {
        self.sites[i - 1] = site;
    }

    pub fn height(&self) -> u64 {
        self.sites.iter().map(Site::height).max().unwrap_or(1)
    }
}

impl fmt::Display for TupleState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sites.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join("; "))
    }
}

/// Parses the CLI state literal syntax: parenthesized, semicolon-separated
/// sites with comma-separated fields, e.g. `"(1,3; 2,1)"` for a dressing
/// pair or `"([1,0],[1,1],2; [0,1],[1,1],1)"` for KdV sites.
pub fn parse_state(input: &str) -> Result<TupleState> {
    let trimmed = input.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| YbError::Parse(format!("state literal must be parenthesized: {input:?}")))?;
    let mut sites = Vec::new();
    for part in split_top_level(inner, ';') {
        sites.push(parse_site(part.trim())?);
    }
    TupleState::new(sites)
}

fn parse_site(part: &str) -> Result<Site> {
    if part.contains('[') {
        // kdv: [xi],[eta],lambda
        let fields = split_top_level(part, ',');
        if fields.len() != 3 {
            return Err(YbError::Parse(format!("kdv site needs [xi],[eta],lambda: {part:?}")));
        }
        let xi = parse_vector(fields[0].trim())?;
        let eta = parse_vector(fields[1].trim())?;
        let lambda = parse_rational(fields[2])?;
        Ok(Site::Kdv(KdvSite::new(xi, eta, lambda)?))
    } else {
        let fields: Vec<&str> = part.split(',').collect();
        match fields.len() {
            1 => Ok(Site::scalar(parse_rational(fields[0])?)),
            2 => Ok(Site::dressing(
                parse_rational(fields[0])?,
                parse_rational(fields[1])?,
            )),
            _ => Err(YbError::Parse(format!("bad site literal: {part:?}"))),
        }
    }
}

fn parse_vector(s: &str) -> Result<Vec<Rational>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| YbError::Parse(format!("vector literal must be bracketed: {s:?}")))?;
    inner.split(',').map(parse_rational).collect()
}

/// Splits on `sep` ignoring separators nested inside brackets.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}
