//! Random-variable models with exact rational raw moments, and the
//! degenerate moments `E[(Y)_{n,λ}]` derived from them.
//!
//! A model is written in a small grammar shared by the CLI and config
//! files:
//!
//! ```text
//! point:1   point:3/2   bernoulli:1/2   binomial:5:1/3
//! poisson:2/3   geometric:1/4   finite:{1:1/3,2:2/3}
//! ```
//!
//! `geometric:p` is the number of trials up to and including the first
//! success, supported on `{1, 2, …}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{binomial, factorial, render_rational, MPoly, Rational, TruncSeries, Var};
use crate::bell::deg_falling;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RvError {
    #[error("invalid token `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("invalid parameter for {model}: {reason}")]
    Parameter { model: &'static str, reason: String },
}

fn parse_err(token: &str, reason: impl Into<String>) -> RvError {
    RvError::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

/// The distribution family and its exact parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RvKind {
    Point(Rational),
    /// Atoms `(value, probability)`, in the order given.
    Finite(Vec<(Rational, Rational)>),
    Bernoulli(Rational),
    Binomial(u32, Rational),
    Poisson(Rational),
    Geometric(Rational),
}

/// Write-once memo of moments for one model instance.
#[derive(Debug, Default)]
pub struct MomentCache {
    raw: RwLock<Vec<Rational>>,
    deg: RwLock<HashMap<usize, MPoly>>,
    joint: RwLock<HashMap<(usize, usize), MPoly>>,
}

/// A random variable `Y` given by its exact raw moments.
#[derive(Debug)]
pub struct RandomVariable {
    kind: RvKind,
    cache: MomentCache,
}

impl Clone for RandomVariable {
    fn clone(&self) -> Self {
        Self::from_kind_unchecked(self.kind.clone())
    }
}

impl PartialEq for RandomVariable {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for RandomVariable {}

fn in_unit_interval(p: &Rational, allow_zero: bool) -> bool {
    let lower_ok = if allow_zero { !p.is_negative() } else { p.is_positive() };
    lower_ok && *p <= Rational::one()
}

impl RandomVariable {
    fn from_kind_unchecked(kind: RvKind) -> Self {
        Self {
            kind,
            cache: MomentCache::default(),
        }
    }

    pub fn new(kind: RvKind) -> Result<Self, RvError> {
        let bad = |model, reason: &str| {
            Err(RvError::Parameter {
                model,
                reason: reason.to_string(),
            })
        };
        match &kind {
            RvKind::Point(_) => {}
            RvKind::Finite(atoms) => {
                if atoms.is_empty() {
                    return bad("finite", "support is empty");
                }
                if atoms.iter().any(|(_, p)| !p.is_positive()) {
                    return bad("finite", "probabilities must be positive");
                }
                let total: Rational = atoms.iter().map(|(_, p)| p.clone()).sum();
                if !total.is_one() {
                    return bad("finite", &format!("probabilities sum to {}", render_rational(&total)));
                }
                for (i, (v, _)) in atoms.iter().enumerate() {
                    if atoms[..i].iter().any(|(w, _)| w == v) {
                        return bad("finite", &format!("duplicate atom {}", render_rational(v)));
                    }
                }
            }
            RvKind::Bernoulli(p) => {
                if !in_unit_interval(p, false) {
                    return bad("bernoulli", "p must satisfy 0 < p <= 1");
                }
            }
            RvKind::Binomial(_, p) => {
                if !in_unit_interval(p, true) {
                    return bad("binomial", "p must satisfy 0 <= p <= 1");
                }
            }
            RvKind::Poisson(alpha) => {
                if !alpha.is_positive() {
                    return bad("poisson", "rate must be positive");
                }
            }
            RvKind::Geometric(p) => {
                if !in_unit_interval(p, false) {
                    return bad("geometric", "p must satisfy 0 < p <= 1");
                }
            }
        }
        Ok(Self::from_kind_unchecked(kind))
    }

    pub fn point(c: Rational) -> Self {
        Self::from_kind_unchecked(RvKind::Point(c))
    }

    pub fn kind(&self) -> &RvKind {
        &self.kind
    }

    /// The models used by the verification grids.
    pub fn standard_suite() -> Vec<RandomVariable> {
        ["point:1", "point:3/2", "bernoulli:1/2", "finite:{1:1/3,2:2/3}", "poisson:1", "geometric:1/2"]
            .iter()
            .map(|s| s.parse().expect("standard suite specs are valid"))
            .collect()
    }

    /// True for models with negative atoms, which the identity grids accept
    /// but which fall outside the positive-support cases usually studied.
    pub fn has_negative_support(&self) -> bool {
        match &self.kind {
            RvKind::Point(c) => c.is_negative(),
            RvKind::Finite(atoms) => atoms.iter().any(|(v, _)| v.is_negative()),
            _ => false,
        }
    }

    /// Exact raw moment `E[Y^m]`.
    pub fn raw_moment(&self, m: usize) -> Rational {
        if let Some(v) = self.cache.raw.read().unwrap().get(m) {
            return v.clone();
        }
        let mut raw = self.cache.raw.write().unwrap();
        while raw.len() <= m {
            let next = self.compute_raw(raw.len());
            raw.push(next);
        }
        raw[m].clone()
    }

    fn compute_raw(&self, m: usize) -> Rational {
        let pow = |v: &Rational| num_traits::pow(v.clone(), m);
        match &self.kind {
            RvKind::Point(c) => pow(c),
            RvKind::Finite(atoms) => atoms.iter().map(|(v, p)| pow(v) * p).sum(),
            RvKind::Bernoulli(p) => {
                if m == 0 {
                    Rational::one()
                } else {
                    p.clone()
                }
            }
            RvKind::Binomial(trials, p) => {
                let q = Rational::one() - p;
                (0..=*trials as usize)
                    .map(|i| {
                        let weight = Rational::from_integer(binomial(*trials as i64, i))
                            * num_traits::pow(p.clone(), i)
                            * num_traits::pow(q.clone(), *trials as usize - i);
                        weight * pow(&Rational::from_integer(BigInt::from(i)))
                    })
                    .sum()
            }
            // Touchard: E[Y^m] = Σ_k S(m,k) α^k, since E[(Y)_k] = α^k
            RvKind::Poisson(alpha) => from_factorial_moments(m, |k| num_traits::pow(alpha.clone(), k)),
            // E[(Y)_k] = k! (1-p)^{k-1} / p^k for k >= 1
            RvKind::Geometric(p) => from_factorial_moments(m, |k| {
                if k == 0 {
                    return Rational::one();
                }
                let q = Rational::one() - p;
                Rational::from_integer(factorial(k)) * num_traits::pow(q, k - 1)
                    / num_traits::pow(p.clone(), k)
            }),
        }
    }

    /// Replaces every `x^p` in `poly` by `E[Y^p]`.
    pub fn expect_in_x(&self, poly: &MPoly) -> MPoly {
        poly.coefficients_in(Var::X)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| c.scale(&self.raw_moment(p)))
            .sum()
    }

    /// Degenerate moment `E[(Y)_{n,λ}]`, a polynomial in `λ`.
    pub fn deg_moment(&self, n: usize) -> MPoly {
        if let Some(v) = self.cache.deg.read().unwrap().get(&n) {
            return v.clone();
        }
        let value = self.expect_in_x(&deg_falling(&MPoly::x(), n));
        self.cache.deg.write().unwrap().entry(n).or_insert(value).clone()
    }

    /// `E[(Y)_{j,λ} (Y)_{l,λ}]`.
    pub fn joint_deg_moment(&self, j: usize, l: usize) -> MPoly {
        let key = (j.min(l), j.max(l));
        if let Some(v) = self.cache.joint.read().unwrap().get(&key) {
            return v.clone();
        }
        let x = MPoly::x();
        let value = self.expect_in_x(&(deg_falling(&x, key.0) * deg_falling(&x, key.1)));
        self.cache.joint.write().unwrap().entry(key).or_insert(value).clone()
    }

    /// `E[e_λ^Y(t)]` truncated at `t^order`: coefficients `E[(Y)_{n,λ}]/n!`.
    pub fn egf_truncated(&self, order: usize) -> TruncSeries {
        TruncSeries::from_egf(order, |n| self.deg_moment(n))
    }
}

/// `E[Y^m] = Σ_k S(m,k) E[(Y)_k]` with classical Stirling numbers.
fn from_factorial_moments(m: usize, factorial_moment: impl Fn(usize) -> Rational) -> Rational {
    stirling2_row(m)
        .into_iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(k, s)| Rational::from_integer(s) * factorial_moment(k))
        .sum()
}

/// Row `m` of the classical Stirling numbers of the second kind via
/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
fn stirling2_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 1..=m {
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let stay = if k < n { &row[k] * BigInt::from(k) } else { BigInt::zero() };
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

fn parse_rational(token: &str) -> Result<Rational, RvError> {
    let t = token.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, b),
        None => (t, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| parse_err(token, "not a rational number"))?;
    let den: BigInt = den.trim().parse().map_err(|_| parse_err(token, "not a rational number"))?;
    if den.is_zero() {
        return Err(parse_err(token, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

impl FromStr for RandomVariable {
    type Err = RvError;

    fn from_str(s: &str) -> Result<Self, RvError> {
        let s = s.trim();
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| parse_err(s, "expected `<distribution>:<parameters>`"))?;
        let kind = match name {
            "point" => RvKind::Point(parse_rational(rest)?),
            "bernoulli" => RvKind::Bernoulli(parse_rational(rest)?),
            "poisson" => RvKind::Poisson(parse_rational(rest)?),
            "geometric" => RvKind::Geometric(parse_rational(rest)?),
            "binomial" => {
                let (n, p) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(rest, "expected `<trials>:<p>`"))?;
                let trials: u32 = n.trim().parse().map_err(|_| parse_err(n, "not a trial count"))?;
                RvKind::Binomial(trials, parse_rational(p)?)
            }
            "finite" => {
                let body = rest
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| parse_err(rest, "expected `{value:prob,...}`"))?;
                let mut atoms = Vec::new();
                for atom in body.split(',').filter(|a| !a.trim().is_empty()) {
                    let (v, p) = atom
                        .split_once(':')
                        .ok_or_else(|| parse_err(atom, "expected `value:prob`"))?;
                    atoms.push((parse_rational(v)?, parse_rational(p)?));
                }
                RvKind::Finite(atoms)
            }
            other => return Err(parse_err(other, "unknown distribution")),
        };
        RandomVariable::new(kind)
    }
}

impl fmt::Display for RandomVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RvKind::Point(c) => write!(f, "point:{}", render_rational(c)),
            RvKind::Bernoulli(p) => write!(f, "bernoulli:{}", render_rational(p)),
            RvKind::Binomial(n, p) => write!(f, "binomial:{}:{}", n, render_rational(p)),
            RvKind::Poisson(a) => write!(f, "poisson:{}", render_rational(a)),
            RvKind::Geometric(p) => write!(f, "geometric:{}", render_rational(p)),
            RvKind::Finite(atoms) => {
                let body: Vec<String> = atoms
                    .iter()
                    .map(|(v, p)| format!("{}:{}", render_rational(v), render_rational(p)))
                    .collect();
                write!(f, "finite:{{{}}}", body.join(","))
            }
        }
    }
}
