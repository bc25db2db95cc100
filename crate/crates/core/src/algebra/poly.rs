//! Sparse polynomials over the rationals in the three indeterminates
//! `λ`, `y` and `x`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;

/// The indeterminates of the polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    /// The degeneracy parameter.
    Lambda,
    /// The Bell variable.
    Y,
    /// The falling-factorial base.
    X,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Lambda, Var::Y, Var::X];

    fn index(self) -> usize {
        match self {
            Var::Lambda => 0,
            Var::Y => 1,
            Var::X => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Lambda => "λ",
            Var::Y => "y",
            Var::X => "x",
        }
    }
}

/// Exponent vector indexed by [`Var`]: `[λ, y, x]`.
pub type Exponents = [u32; 3];

/// A polynomial in `λ`, `y`, `x` with exact rational coefficients.
///
/// Zero coefficients are never stored, so two equal polynomials are
/// structurally equal.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::monomial(Rational::one(), e)
    }

    pub fn lambda() -> Self {
        Self::var(Var::Lambda)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn monomial(c: Rational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).is_some_and(One::is_one)
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    /// Highest exponent of `v` over all terms (0 for the zero polynomial).
    pub fn degree(&self, v: Var) -> u32 {
        let i = v.index();
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Splits the polynomial by powers of `v`: entry `p` holds the
    /// coefficient of `v^p` (a polynomial free of `v`).
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let i = v.index();
        let mut out = vec![MPoly::zero(); self.degree(v) as usize + 1];
        if self.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            let mut rest = *e;
            let p = rest[i] as usize;
            rest[i] = 0;
            out[p].add_term(rest, c.clone());
        }
        out
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `v^p`.
    pub fn shift(&self, v: Var, p: u32) -> MPoly {
        let i = v.index();
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e[i] += p;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution of variables by polynomials.
    pub fn substitute(&self, bindings: &HashMap<Var, MPoly>) -> MPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(Var, u32), MPoly> = HashMap::new();
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut kept = [0u32; 3];
            let mut factor = MPoly::one();
            for v in Var::ALL {
                let p = e[v.index()];
                match bindings.get(&v) {
                    Some(b) if p > 0 => {
                        let pw = powers.entry((v, p)).or_insert_with(|| b.pow(p));
                        factor = &factor * &*pw;
                    }
                    Some(_) => {}
                    None => kept[v.index()] = p,
                }
            }
            out += &(&factor * &MPoly::monomial(c.clone(), kept));
        }
        out
    }

    /// Substitutes a single variable by a rational value.
    pub fn eval_var(&self, v: Var, value: &Rational) -> MPoly {
        let mut b = HashMap::new();
        b.insert(v, MPoly::constant(value.clone()));
        self.substitute(&b)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::from_int(c)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -self.clone()
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl MulAssign<&MPoly> for MPoly {
    fn mul_assign(&mut self, rhs: &MPoly) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(mut self, rhs: MPoly) -> MPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(mut self, rhs: &MPoly) -> MPoly {
                self.$assign(rhs);
                self
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<MPoly> for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Mul<&MPoly> for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        &self * rhs
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::one(), |acc, p| acc * p)
    }
}

pub fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn render_power(v: Var, p: u32) -> Option<String> {
    match p {
        0 => None,
        1 => Some(v.symbol().to_string()),
        _ => Some(format!("{}^{}", v.symbol(), p)),
    }
}

/// Renders `|c|·body` without sign; `body` may be empty.
fn render_magnitude(c: &Rational, body: &str) -> String {
    let mag = c.abs();
    match (mag.is_one(), body.is_empty()) {
        (_, true) => render_rational(&mag),
        (true, false) => body.to_string(),
        (false, false) => format!("{}·{}", render_rational(&mag), body),
    }
}

/// Signed rendering of a polynomial in λ alone, ascending in λ.
fn render_lambda_poly(terms: &[(u32, Rational)]) -> String {
    let mut s = String::new();
    for (i, (d, c)) in terms.iter().enumerate() {
        let body = render_power(Var::Lambda, *d).unwrap_or_default();
        let mag = render_magnitude(c, &body);
        if i == 0 {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        s.push_str(&mag);
    }
    s
}

/// Canonical text form.
///
/// Terms are grouped by their `(y, x)` monomial in descending order of
/// `y`-degree then `x`-degree. Each group's coefficient is a polynomial in
/// `λ` listed in ascending powers and parenthesized when it has more than
/// one term, e.g. `y^2 + (1 - λ)·y`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut groups: BTreeMap<Reverse<(u32, u32)>, Vec<(u32, Rational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            groups
                .entry(Reverse((e[1], e[2])))
                .or_default()
                .push((e[0], c.clone()));
        }
        let mut out = String::new();
        for (gi, (Reverse((py, px)), mut lam)) in groups.into_iter().enumerate() {
            lam.sort_by_key(|(d, _)| *d);
            let mono: Vec<String> = [render_power(Var::Y, py), render_power(Var::X, px)]
                .into_iter()
                .flatten()
                .collect();
            let mono = mono.join("·");
            let (negative, text) = if mono.is_empty() {
                // constant group: printed bare, its own signs carried inline
                let first_neg = lam[0].1.is_negative();
                let mut t = render_lambda_poly(&lam);
                if first_neg {
                    t.remove(0);
                }
                (first_neg, t)
            } else if lam.len() == 1 {
                let (d, c) = &lam[0];
                let body: Vec<String> = [render_power(Var::Lambda, *d), Some(mono)]
                    .into_iter()
                    .flatten()
                    .collect();
                (c.is_negative(), render_magnitude(c, &body.join("·")))
            } else {
                (false, format!("({})·{}", render_lambda_poly(&lam), mono))
            };
            if gi == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&text);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn two_term_product() {
        let x = MPoly::x();
        let l = MPoly::lambda();
        let p = &(&x - &l) * &x;
        let expected = x.pow(2) - &l * &x;
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x^2 - λ·x");
    }

    #[test]
    fn additive_identity() {
        let p = MPoly::y().pow(3) + MPoly::lambda();
        assert_eq!(&p + &MPoly::zero(), p);
    }

    #[test]
    fn difference_of_squares() {
        let y = MPoly::y();
        let p = (&y + &MPoly::one()) * (&y - &MPoly::one());
        assert_eq!(p, y.pow(2) - MPoly::one());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = MPoly::lambda() - MPoly::lambda();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
        assert_eq!(p, MPoly::zero());
    }

    #[test]
    fn degrees() {
        let p = MPoly::lambda().pow(3) * MPoly::y() + MPoly::x().pow(2);
        assert_eq!(p.degree(Var::Lambda), 3);
        assert_eq!(p.degree(Var::Y), 1);
        assert_eq!(p.degree(Var::X), 2);
        assert_eq!(MPoly::zero().degree(Var::X), 0);
    }

    #[test]
    fn lambda_to_zero() {
        let x = MPoly::x();
        let p = x.pow(2) - MPoly::lambda() * &x;
        assert_eq!(p.eval_var(Var::Lambda, &q(0, 1)), x.pow(2));
    }

    #[test]
    fn y_to_one_sums_coefficients() {
        let p = MPoly::y().pow(2).scale(&q(3, 1)) + MPoly::y().scale(&q(1, 2)) + MPoly::from_int(4);
        assert_eq!(p.eval_var(Var::Y, &q(1, 1)).as_constant(), Some(q(15, 2)));
    }

    #[test]
    fn vanishing_factor() {
        let x = MPoly::x();
        let l = MPoly::lambda();
        let p = &x * &(&x - &l) * (&x - &l.scale(&q(2, 1)));
        let mut b = HashMap::new();
        b.insert(Var::X, MPoly::from_int(2));
        b.insert(Var::Lambda, MPoly::from_int(1));
        assert!(p.substitute(&b).is_zero());
    }

    #[test]
    fn substitution_is_simultaneous() {
        // swap x and y
        let p = MPoly::x().pow(2) + MPoly::y();
        let mut b = HashMap::new();
        b.insert(Var::X, MPoly::y());
        b.insert(Var::Y, MPoly::x());
        assert_eq!(p.substitute(&b), MPoly::y().pow(2) + MPoly::x());
    }

    #[test]
    fn rendering() {
        let y = MPoly::y();
        let l = MPoly::lambda();
        let p = y.pow(2) + (MPoly::one() - &l) * &y;
        assert_eq!(p.to_string(), "y^2 + (1 - λ)·y");
        assert_eq!((MPoly::one() - &l).to_string(), "1 - λ");
        assert_eq!((-&l).to_string(), "-λ");
        assert_eq!(MPoly::constant(q(-3, 4)).to_string(), "-3/4");
        assert_eq!(MPoly::zero().to_string(), "0");
        let p = y.scale(&q(-2, 1)) * &l + MPoly::from_int(5) - l.pow(2).scale(&q(1, 3));
        assert_eq!(p.to_string(), "-2·λ·y + 5 - 1/3·λ^2");
        let p = (l.pow(2) - MPoly::one()) * &y * MPoly::x();
        assert_eq!(p.to_string(), "(-1 + λ^2)·y·x");
    }
}
