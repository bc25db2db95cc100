//! Probabilistic degenerate Stirling numbers and Bell / `r`-Bell
//! polynomials associated with a random variable `Y`, and the mixed
//! expectations over partial sums `S_k = Y_1 + … + Y_k` of independent
//! copies of `Y`.

use crate::algebra::{binomial, factorial, multinomial, weak_compositions, MPoly, Rational, TruncSeries};
use crate::bell::{deg_exp_series, deg_falling, in_bell_variable};
use crate::moments::RandomVariable;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProbError {
    #[error("expected {k} parts, got {len}")]
    PartsLength { k: usize, len: usize },
    #[error("parts must be positive, got {0:?}")]
    NonPositivePart(Vec<usize>),
}

fn inv_factorial(k: usize) -> Rational {
    Rational::from_integer(factorial(k)).recip()
}

/// `E[e_λ^Y(t)] − 1` truncated at `t^order`.
fn egf_minus_one(rv: &RandomVariable, order: usize) -> TruncSeries {
    rv.egf_truncated(order)
        .sub(&TruncSeries::one(order))
        .expect("same order")
}

/// Row `n` of `{n k}_{Y,λ}`, `k = 0..=n`, from `n!/k!·[t^n](E[e_λ^Y(t)] − 1)^k`.
pub fn prob_stirling2_deg_row(rv: &RandomVariable, n: usize) -> Vec<MPoly> {
    let f = egf_minus_one(rv, n);
    let mut power = TruncSeries::one(n);
    let mut row = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k > 0 {
            power = power.mul(&f).expect("same order");
        }
        row.push(power.egf_coeff(n).scale(&inv_factorial(k)));
    }
    row
}

/// Probabilistic degenerate Stirling number `{n k}_{Y,λ}`.
pub fn prob_stirling2_deg(rv: &RandomVariable, n: usize, k: usize) -> MPoly {
    if k > n {
        return MPoly::zero();
    }
    let f = egf_minus_one(rv, n);
    f.pow(k as u32).egf_coeff(n).scale(&inv_factorial(k))
}

/// `E[(S_l)_{n,λ}] = n!·[t^n] E[e_λ^Y(t)]^l`.
pub fn partial_sum_deg_moment(rv: &RandomVariable, l: usize, n: usize) -> MPoly {
    rv.egf_truncated(n).pow(l as u32).egf_coeff(n)
}

/// `{n k}_{Y,λ}` as the alternating sum
/// `(1/k!) Σ_l C(k,l) (−1)^{k−l} E[(S_l)_{n,λ}]`.
pub fn prob_stirling2_deg_alternating(rv: &RandomVariable, n: usize, k: usize) -> MPoly {
    let sum: MPoly = (0..=k)
        .map(|l| {
            let sign = if (k - l).is_multiple_of(2) { 1 } else { -1 };
            let c = Rational::from_integer(binomial(k as i64, l) * sign);
            partial_sum_deg_moment(rv, l, n).scale(&c)
        })
        .sum();
    sum.scale(&inv_factorial(k))
}

/// Probabilistic degenerate Bell polynomial `φ^Y_{n,λ}(y) = Σ_k {n k}_{Y,λ} y^k`.
pub fn prob_bell_deg(rv: &RandomVariable, n: usize) -> MPoly {
    in_bell_variable(&prob_stirling2_deg_row(rv, n))
}

/// `exp(y(E[e_λ^Y(t)] − 1))` truncated at `t^order`.
pub fn prob_bell_series(rv: &RandomVariable, order: usize) -> TruncSeries {
    egf_minus_one(rv, order)
        .scale(&MPoly::y())
        .exp()
        .expect("zero constant term")
}

/// `φ^Y_{n,λ}(y)` extracted from its exponential generating function.
pub fn prob_bell_deg_via_exp(rv: &RandomVariable, n: usize) -> MPoly {
    prob_bell_series(rv, n).egf_coeff(n)
}

/// Probabilistic degenerate `r`-Stirling number `{n+r k+r}^Y_{r,λ}`:
/// `n!/k!·[t^n] (E[e_λ^Y(t)] − 1)^k e_λ^r(t)`.
pub fn prob_stirling2_r_deg(rv: &RandomVariable, n: usize, k: usize, r: u32) -> MPoly {
    assert!(r >= 1, "r-Stirling numbers require r >= 1");
    if k > n {
        return MPoly::zero();
    }
    let er = deg_exp_series(&MPoly::from_int(r as i64), n);
    egf_minus_one(rv, n)
        .pow(k as u32)
        .mul(&er)
        .expect("same order")
        .egf_coeff(n)
        .scale(&inv_factorial(k))
}

/// `exp(y(E[e_λ^Y(t)] − 1))·e_λ^r(t)` truncated at `t^order`.
pub fn prob_bell_r_series(rv: &RandomVariable, order: usize, r: u32) -> TruncSeries {
    assert!(r >= 1, "r-Bell polynomials require r >= 1");
    prob_bell_series(rv, order)
        .mul(&deg_exp_series(&MPoly::from_int(r as i64), order))
        .expect("same order")
}

/// Probabilistic degenerate `r`-Bell polynomial `φ^{(r,Y)}_{n,λ}(y)`.
pub fn prob_bell_r_deg(rv: &RandomVariable, n: usize, r: u32) -> MPoly {
    prob_bell_r_series(rv, n, r).egf_coeff(n)
}

/// Right-hand side of `φ^Y_{n+1,λ}(y) = y Σ_k C(n,k) E[(Y)_{k+1,λ}] φ^Y_{n−k,λ}(y)`.
pub fn prob_bell_recurrence_rhs(rv: &RandomVariable, n: usize) -> MPoly {
    let series = prob_bell_series(rv, n);
    let sum: MPoly = (0..=n)
        .map(|k| {
            let c = Rational::from_integer(binomial(n as i64, k));
            (&rv.deg_moment(k + 1) * &series.egf_coeff(n - k)).scale(&c)
        })
        .sum();
    &sum * &MPoly::y()
}

/// Checks the first-order recurrence for `φ^Y_{n+1,λ}` as an exact identity.
pub fn prob_bell_recurrence_check(rv: &RandomVariable, n: usize) -> bool {
    prob_bell_deg(rv, n + 1) == prob_bell_recurrence_rhs(rv, n)
}

/// Parameters of `E[(S_k − nλ)_{j,λ} Π_i (Y_i)_{l_i,λ}]`.
#[derive(Debug, Clone)]
pub struct MixedExpectationSpec<'a> {
    rv: &'a RandomVariable,
    parts: Vec<usize>,
    shift_n: usize,
    j: usize,
}

impl<'a> MixedExpectationSpec<'a> {
    /// `k` copies with per-copy orders `parts` (all positive, exactly `k` of
    /// them), shift `−shift_n·λ` and falling-factorial order `j`.
    pub fn new(
        rv: &'a RandomVariable,
        k: usize,
        parts: Vec<usize>,
        shift_n: usize,
        j: usize,
    ) -> Result<Self, ProbError> {
        if parts.len() != k {
            return Err(ProbError::PartsLength { k, len: parts.len() });
        }
        if parts.contains(&0) {
            return Err(ProbError::NonPositivePart(parts));
        }
        Ok(Self { rv, parts, shift_n, j })
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Σ parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// `E[(S_k − nλ)_{j,λ} Π_i (Y_i)_{l_i,λ}]`.
///
/// Uses `e_λ^{a+b}(x) = e_λ^a(x) e_λ^b(x)`: the quantity is `j!·[x^j]` of
/// `Π_i A_{l_i}(x) · (1+λx)^{−n}` with
/// `A_l(x) = Σ_m E[(Y)_{m,λ}(Y)_{l,λ}] x^m/m!`.
pub fn sk_mixed_expectation(spec: &MixedExpectationSpec<'_>) -> MPoly {
    let order = spec.j;
    let lambda = MPoly::lambda();
    let shift = TruncSeries::from_coeffs(
        order,
        (0..=order).map(|i| {
            lambda
                .pow(i as u32)
                .scale(&Rational::from_integer(binomial(-(spec.shift_n as i64), i)))
        }),
    );
    spec.parts
        .iter()
        .map(|&l| TruncSeries::from_egf(order, |m| spec.rv.joint_deg_moment(m, l)))
        .fold(shift, |acc, a| acc.mul(&a).expect("same order"))
        .egf_coeff(order)
}

/// The same expectation by direct expansion: `(x − nλ)_{j,λ}` is expanded in
/// powers of `x`, each `S_k^p` by the multinomial theorem, and independence
/// splits the result into per-copy moments `E[Y^a (Y)_{l,λ}]`.
pub fn sk_mixed_expectation_direct(spec: &MixedExpectationSpec<'_>) -> MPoly {
    let x = MPoly::x();
    let shifted = &x - &MPoly::lambda().scale(&Rational::from_integer(spec.shift_n.into()));
    let outer = deg_falling(&shifted, spec.j);
    let falls: Vec<MPoly> = spec.parts.iter().map(|&l| deg_falling(&x, l)).collect();
    let per_copy = |a: usize, i: usize| spec.rv.expect_in_x(&(x.pow(a as u32) * &falls[i]));
    outer
        .coefficients_in(crate::algebra::Var::X)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| {
            let moment: MPoly = weak_compositions(p, spec.k())
                .iter()
                .map(|a| {
                    let weight = Rational::from_integer(multinomial(p, a));
                    a.iter()
                        .enumerate()
                        .map(|(i, &ai)| per_copy(ai, i))
                        .product::<MPoly>()
                        .scale(&weight)
                })
                .sum();
            &c * &moment
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::bell::{bell_deg, bell_r_deg, stirling2_deg, stirling2_r_deg};

    fn rv(s: &str) -> RandomVariable {
        s.parse().unwrap()
    }

    #[test]
    fn point_one_gives_degenerate_stirling() {
        let one = rv("point:1");
        for n in 0..6 {
            for k in 0..=n {
                assert_eq!(prob_stirling2_deg(&one, n, k), stirling2_deg(n, k));
            }
        }
    }

    #[test]
    fn zero_blocks() {
        let b = rv("bernoulli:1/2");
        assert!(prob_stirling2_deg(&b, 0, 0).is_one());
        for n in 1..5 {
            assert!(prob_stirling2_deg(&b, n, 0).is_zero());
        }
        assert!(prob_stirling2_deg(&b, 2, 3).is_zero());
    }

    #[test]
    fn alternating_sum_matches_bernoulli() {
        let b = rv("bernoulli:1/2");
        for n in 0..=5 {
            for k in 0..=n {
                assert_eq!(prob_stirling2_deg(&b, n, k), prob_stirling2_deg_alternating(&b, n, k));
            }
        }
    }

    #[test]
    fn low_bell_values() {
        let f = rv("finite:{1:1/3,2:2/3}");
        assert!(prob_bell_deg(&f, 0).is_one());
        assert_eq!(prob_bell_deg(&f, 1), MPoly::y().scale(&rat(5, 3)));
        let one = rv("point:1");
        for n in 0..6 {
            assert_eq!(prob_bell_deg(&one, n), bell_deg(n));
        }
        for n in 0..6 {
            assert_eq!(prob_bell_deg(&f, n), prob_bell_deg_via_exp(&f, n));
        }
    }

    #[test]
    fn mixed_expectation_contract() {
        let b = rv("bernoulli:1/2");
        assert_eq!(
            MixedExpectationSpec::new(&b, 2, vec![1], 0, 0).unwrap_err(),
            ProbError::PartsLength { k: 2, len: 1 }
        );
        assert!(matches!(
            MixedExpectationSpec::new(&b, 2, vec![1, 0], 0, 0),
            Err(ProbError::NonPositivePart(_))
        ));
    }

    #[test]
    fn mixed_expectation_without_copies() {
        let g = rv("geometric:1/2");
        for n in 0..4 {
            for j in 0..5 {
                let spec = MixedExpectationSpec::new(&g, 0, vec![], n, j).unwrap();
                let base = MPoly::lambda().scale(&rat(-(n as i64), 1));
                assert_eq!(sk_mixed_expectation(&spec), deg_falling(&base, j));
                assert_eq!(sk_mixed_expectation_direct(&spec), deg_falling(&base, j));
            }
        }
    }

    #[test]
    fn mixed_expectation_point_one() {
        let one = rv("point:1");
        let ones = |l| deg_falling(&MPoly::one(), l);
        for (parts, n, j) in [(vec![1, 2], 3, 2), (vec![3], 3, 4), (vec![1, 1, 1], 3, 3), (vec![2, 2], 4, 1)] {
            let k = parts.len();
            let expected: MPoly = parts.iter().map(|&l| ones(l)).product::<MPoly>()
                * deg_falling(&(MPoly::from_int(k as i64) - MPoly::lambda().scale(&rat(n, 1))), j);
            let spec = MixedExpectationSpec::new(&one, k, parts, n as usize, j).unwrap();
            assert_eq!(sk_mixed_expectation(&spec), expected);
        }
    }

    #[test]
    fn r_family_reductions() {
        let one = rv("point:1");
        let b = rv("bernoulli:1/2");
        for r in 1..=3 {
            for n in 0..5 {
                assert_eq!(prob_bell_r_deg(&one, n, r), bell_r_deg(n, r));
                assert_eq!(
                    prob_stirling2_r_deg(&b, n, 0, r),
                    deg_falling(&MPoly::from_int(r as i64), n)
                );
                assert_eq!(prob_stirling2_r_deg(&b, n, n, r), prob_stirling2_deg(&b, n, n));
                for k in 0..=n {
                    assert_eq!(prob_stirling2_r_deg(&one, n, k, r), stirling2_r_deg(n, k, r));
                }
            }
            assert!(prob_bell_r_deg(&b, 0, r).is_one());
        }
    }

    #[test]
    fn recurrence_small_cases() {
        for s in ["point:1", "poisson:1", "bernoulli:1/2"] {
            let v = rv(s);
            for n in 0..4 {
                assert!(prob_bell_recurrence_check(&v, n), "{s} n={n}");
            }
        }
        let f = rv("finite:{1:1/3,2:2/3}");
        assert_eq!(prob_bell_recurrence_rhs(&f, 0), MPoly::y().scale(&rat(5, 3)));
    }
}
