//! Truncated power series in a formal variable with [`MPoly`] coefficients.

use super::{factorial, AlgebraError, MPoly, Rational};

/// `Σ_{n=0..order} coeffs[n] t^n`, all arithmetic truncated at `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<MPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![MPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = MPoly::one();
        s
    }

    /// Builds a series from its coefficients; missing ones are zero, extra
    /// ones beyond `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = MPoly>) -> Self {
        let mut s = Self::zero(order);
        for (n, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[n] = c;
        }
        s
    }

    /// Builds `Σ a_n t^n / n!` from the exponential-style coefficients `a_n`.
    pub fn from_egf(order: usize, f: impl Fn(usize) -> MPoly) -> Self {
        Self::from_coeffs(
            order,
            (0..=order).map(|n| f(n).scale(&Rational::from_integer(factorial(n)).recip())),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`.
    ///
    /// Panics if `n` exceeds the truncation order: such a coefficient is
    /// not determined by the truncated series.
    pub fn coeff(&self, n: usize) -> &MPoly {
        assert!(
            n <= self.order(),
            "read of t^{n} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    /// `n! · [t^n]`, the exponential-style coefficient.
    pub fn egf_coeff(&self, n: usize) -> MPoly {
        self.coeff(n).scale(&Rational::from_integer(factorial(n)))
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.order() != other.order() {
            return Err(AlgebraError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale(&self, p: &MPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring; `self^0` is the constant series 1.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("orders agree");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("orders agree");
            }
        }
        acc
    }

    /// `exp(self)` for a series without constant term, via
    /// `n·g_n = Σ_{k=1..n} k·f_k·g_{n-k}`.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::NonZeroConstantTerm);
        }
        let order = self.order();
        let mut g = Self::one(order);
        for n in 1..=order {
            let mut acc = MPoly::zero();
            for k in 1..=n {
                let f = &self.coeffs[k];
                if f.is_zero() || g.coeffs[n - k].is_zero() {
                    continue;
                }
                acc += &(f * &g.coeffs[n - k]).scale(&Rational::from_integer(k.into()));
            }
            g.coeffs[n] = acc.scale(&Rational::from_integer(n.into()).recip());
        }
        Ok(g)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(order: usize, ints: &[i64]) -> TruncSeries {
        TruncSeries::from_coeffs(order, ints.iter().map(|&c| MPoly::from_int(c)))
    }

    #[test]
    fn square_of_one_plus_t() {
        let s = series(3, &[1, 1]);
        assert_eq!(s.pow(2), series(3, &[1, 2, 1, 0]));
        assert_eq!(s.mul(&s).unwrap(), s.pow(2));
    }

    #[test]
    fn zeroth_power_is_one() {
        let s = series(4, &[3, -1, 7]);
        assert_eq!(s.pow(0), TruncSeries::one(4));
    }

    #[test]
    fn powers_past_order_vanish() {
        let t = series(2, &[0, 1]);
        assert!(t.pow(3).is_zero());
    }

    #[test]
    fn mismatched_orders() {
        let a = series(2, &[1]);
        let b = series(3, &[1]);
        assert_eq!(
            a.mul(&b),
            Err(AlgebraError::OrderMismatch { left: 2, right: 3 })
        );
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn exp_of_t_is_exponential() {
        let t = series(5, &[0, 1]);
        let e = t.exp().unwrap();
        for n in 0..=5 {
            assert!(e.egf_coeff(n).is_one());
        }
        assert_eq!(series(2, &[1]).exp(), Err(AlgebraError::NonZeroConstantTerm));
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn reading_past_order_panics() {
        let s = series(2, &[1]);
        let _ = s.coeff(3);
    }
}
