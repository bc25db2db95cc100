//! Degenerate falling factorials, degenerate Stirling numbers of the second
//! kind, degenerate Bell polynomials and their `r`-variants.

use crate::algebra::{binomial, compositions, factorial, multinomial, MPoly, Rational, TruncSeries, Var};

/// `(base)_{n,λ} = base·(base − λ)⋯(base − (n−1)λ)`, with `(base)_{0,λ} = 1`.
pub fn deg_falling(base: &MPoly, n: usize) -> MPoly {
    let lambda = MPoly::lambda();
    (0..n)
        .map(|i| base - &lambda.scale(&Rational::from_integer(i.into())))
        .product()
}

/// Classical falling factorial `(base)_n`.
pub fn falling(base: &MPoly, n: usize) -> MPoly {
    (0..n).map(|i| base - &MPoly::from_int(i as i64)).product()
}

/// The degenerate exponential `e_λ^{base}(t)` truncated at `t^order`.
pub fn deg_exp_series(base: &MPoly, order: usize) -> TruncSeries {
    TruncSeries::from_egf(order, |n| deg_falling(base, n))
}

/// Rewrites a polynomial in `x` (coefficients in `λ`, `y`) in the classical
/// falling-factorial basis: returns `c` with `p = Σ_k c[k]·(x)_k`.
pub fn falling_basis_coefficients(p: &MPoly) -> Vec<MPoly> {
    let degree = p.degree(Var::X) as usize;
    let x = MPoly::x();
    let basis: Vec<MPoly> = (0..=degree).map(|k| falling(&x, k)).collect();
    let mut rest = p.clone();
    let mut out = vec![MPoly::zero(); degree + 1];
    for k in (0..=degree).rev() {
        let lead = rest.coefficients_in(Var::X).into_iter().nth(k).unwrap_or_default();
        if lead.is_zero() {
            continue;
        }
        rest -= &(&lead * &basis[k]);
        out[k] = lead;
    }
    debug_assert!(rest.is_zero());
    out
}

/// Row `n` of `{n k}_λ` for `k = 0..=n`, by converting `(x)_{n,λ}` to the
/// falling-factorial basis.
pub fn stirling2_deg_row(n: usize) -> Vec<MPoly> {
    let mut row = falling_basis_coefficients(&deg_falling(&MPoly::x(), n));
    row.resize(n + 1, MPoly::zero());
    row
}

/// Degenerate Stirling number of the second kind `{n k}_λ`.
pub fn stirling2_deg(n: usize, k: usize) -> MPoly {
    if k > n {
        return MPoly::zero();
    }
    stirling2_deg_row(n).swap_remove(k)
}

/// `{n k}_λ = (1/k!) Σ_{l_1+…+l_k=n, l_i≥1} C(n; l_1..l_k) Π (1)_{l_i,λ}`.
///
/// Exponential in `n`; used to cross-check [`stirling2_deg`].
pub fn stirling2_deg_via_compositions(n: usize, k: usize) -> MPoly {
    let one = MPoly::one();
    let ones: Vec<MPoly> = (0..=n).map(|l| deg_falling(&one, l)).collect();
    let sum: MPoly = compositions(n, k)
        .iter()
        .map(|parts| {
            let weight = Rational::from_integer(multinomial(n, parts));
            parts.iter().map(|&l| ones[l].clone()).product::<MPoly>().scale(&weight)
        })
        .sum();
    sum.scale(&Rational::from_integer(factorial(k)).recip())
}

/// Degenerate Bell polynomial `φ_{n,λ}(y) = Σ_k {n k}_λ y^k`.
pub fn bell_deg(n: usize) -> MPoly {
    in_bell_variable(&stirling2_deg_row(n))
}

/// `Σ_k row[k]·y^k`.
pub(crate) fn in_bell_variable(row: &[MPoly]) -> MPoly {
    row.iter()
        .enumerate()
        .map(|(k, c)| c.shift(Var::Y, k as u32))
        .sum()
}

/// `Σ_{l=k..n} C(n,l) {l k}_λ (r)_{n−l,λ}`; meaningful for every `r ≥ 0`.
fn r_decomposition(n: usize, k: usize, r: u32, rows: &[Vec<MPoly>]) -> MPoly {
    let r = MPoly::from_int(r as i64);
    (k..=n)
        .map(|l| {
            (&rows[l][k] * &deg_falling(&r, n - l))
                .scale(&Rational::from_integer(binomial(n as i64, n - l)))
        })
        .sum()
}

fn stirling_rows(n: usize) -> Vec<Vec<MPoly>> {
    (0..=n).map(stirling2_deg_row).collect()
}

/// Degenerate `r`-Stirling number `{n+r k+r}_{r,λ}`, from its decomposition
/// into ordinary degenerate Stirling numbers and `(r)_{m,λ}`.
///
/// Panics if `r == 0`.
pub fn stirling2_r_deg(n: usize, k: usize, r: u32) -> MPoly {
    assert!(r >= 1, "r-Stirling numbers require r >= 1");
    if k > n {
        return MPoly::zero();
    }
    r_decomposition(n, k, r, &stirling_rows(n))
}

/// `{n+r k+r}_{r,λ}` as the coefficient of `(x)_k` in `(x+r)_{n,λ}`.
pub fn stirling2_r_deg_via_basis(n: usize, k: usize, r: u32) -> MPoly {
    assert!(r >= 1, "r-Stirling numbers require r >= 1");
    let shifted = &MPoly::x() + &MPoly::from_int(r as i64);
    falling_basis_coefficients(&deg_falling(&shifted, n))
        .into_iter()
        .nth(k)
        .unwrap_or_default()
}

/// Degenerate `r`-Bell polynomial `φ^{(r)}_{n,λ}(y)`.
pub fn bell_r_deg(n: usize, r: u32) -> MPoly {
    RStirlingTableDeg::new(n, r).bell(n)
}

/// Memoized table of `{n k}_λ` for `n ≤ max_n`, immutable once built.
#[derive(Debug, Clone)]
pub struct StirlingTableDeg {
    rows: Vec<Vec<MPoly>>,
}

impl StirlingTableDeg {
    pub fn new(max_n: usize) -> Self {
        Self {
            rows: stirling_rows(max_n),
        }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> MPoly {
        if k > n {
            return MPoly::zero();
        }
        self.rows[n][k].clone()
    }

    pub fn row(&self, n: usize) -> &[MPoly] {
        &self.rows[n]
    }

    pub fn bell(&self, n: usize) -> MPoly {
        in_bell_variable(&self.rows[n])
    }
}

/// Memoized table of `{n+r k+r}_{r,λ}` for one `r` and `n ≤ max_n`.
#[derive(Debug, Clone)]
pub struct RStirlingTableDeg {
    r: u32,
    rows: Vec<Vec<MPoly>>,
}

impl RStirlingTableDeg {
    pub fn new(max_n: usize, r: u32) -> Self {
        assert!(r >= 1, "r-Stirling numbers require r >= 1");
        Self::with_r(&StirlingTableDeg::new(max_n), r)
    }

    /// Builds the table from an ordinary table; `r = 0` is allowed here and
    /// reproduces the ordinary numbers.
    pub fn with_r(base: &StirlingTableDeg, r: u32) -> Self {
        let rows = (0..=base.max_n())
            .map(|n| (0..=n).map(|k| r_decomposition(n, k, r, &base.rows)).collect())
            .collect();
        Self { r, rows }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn get(&self, n: usize, k: usize) -> MPoly {
        if k > n {
            return MPoly::zero();
        }
        self.rows[n][k].clone()
    }

    pub fn row(&self, n: usize) -> &[MPoly] {
        &self.rows[n]
    }

    pub fn bell(&self, n: usize) -> MPoly {
        in_bell_variable(&self.rows[n])
    }
}

/// Classical (non-degenerate) Stirling and Bell numbers counted by
/// enumerating set partitions as restricted growth strings.
pub mod classical {
    use num_bigint::BigInt;

    use crate::algebra::{MPoly, Rational, Var};

    /// `counts[k]` is the number of partitions of an `n`-set into `k`
    /// blocks.
    pub fn partition_block_counts(n: usize) -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        if n == 0 {
            counts[0] = 1;
            return counts;
        }
        // a[i] is the block of element i; a[0] = 0 and a[i] <= 1 + max(a[..i])
        let mut a = vec![0usize; n];
        let mut maxes = vec![0usize; n];
        loop {
            counts[maxes[n - 1] + 1] += 1;
            let mut i = n - 1;
            while i > 0 && a[i] > maxes[i - 1] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            a[i] += 1;
            maxes[i] = maxes[i - 1].max(a[i]);
            for j in i + 1..n {
                a[j] = 0;
                maxes[j] = maxes[i];
            }
        }
        counts
    }

    pub fn stirling2(n: usize, k: usize) -> u64 {
        partition_block_counts(n).get(k).copied().unwrap_or(0)
    }

    pub fn bell_number(n: usize) -> u64 {
        partition_block_counts(n).iter().sum()
    }

    /// `φ_n(y) = Σ_k S(n,k) y^k`.
    pub fn bell_poly(n: usize) -> MPoly {
        partition_block_counts(n)
            .into_iter()
            .enumerate()
            .map(|(k, c)| MPoly::constant(Rational::from_integer(BigInt::from(c))).shift(Var::Y, k as u32))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn lam() -> MPoly {
        MPoly::lambda()
    }

    #[test]
    fn falling_factorials() {
        let x = MPoly::x();
        assert!(deg_falling(&x, 0).is_one());
        assert_eq!(deg_falling(&x, 2), x.pow(2) - &lam() * &x);
        let expected = x.pow(3) - (lam() * x.pow(2)).scale(&rat(3, 1))
            + (lam().pow(2) * &x).scale(&rat(2, 1));
        assert_eq!(deg_falling(&x, 3), expected);
    }

    #[test]
    fn low_stirling_values() {
        for n in 0..7 {
            assert!(stirling2_deg(n, n).is_one());
        }
        assert_eq!(stirling2_deg(2, 1), MPoly::one() - lam());
        assert!(stirling2_deg(3, 0).is_zero());
        assert!(stirling2_deg(0, 0).is_one());
        assert!(stirling2_deg(2, 5).is_zero());
        let s42 = stirling2_deg(4, 2).eval_var(Var::Lambda, &rat(0, 1));
        assert_eq!(s42.as_constant(), Some(rat(7, 1)));
    }

    #[test]
    fn composition_formula_edge_cases() {
        for n in 0..6 {
            assert!(stirling2_deg_via_compositions(n, n).is_one());
        }
        for n in 1..6 {
            assert_eq!(stirling2_deg_via_compositions(n, 1), deg_falling(&MPoly::one(), n));
        }
        assert!(stirling2_deg_via_compositions(3, 0).is_zero());
    }

    #[test]
    fn low_bell_values() {
        assert!(bell_deg(0).is_one());
        assert_eq!(bell_deg(2).to_string(), "y^2 + (1 - λ)·y");
        let b4 = bell_deg(4).eval_var(Var::Lambda, &rat(0, 1)).eval_var(Var::Y, &rat(1, 1));
        assert_eq!(b4.as_constant(), Some(rat(15, 1)));
    }

    #[test]
    fn r_stirling_values() {
        for r in 1..4 {
            for n in 0..5 {
                assert!(stirling2_r_deg(n, n, r).is_one());
            }
            assert_eq!(stirling2_r_deg(1, 0, r), MPoly::from_int(r as i64));
        }
        let v = stirling2_r_deg(2, 1, 1).eval_var(Var::Lambda, &rat(0, 1));
        assert_eq!(v.as_constant(), Some(rat(3, 1)));
    }

    #[test]
    fn r_bell_values() {
        for r in 1..4 {
            assert!(bell_r_deg(0, r).is_one());
            assert_eq!(bell_r_deg(1, r), MPoly::y() + MPoly::from_int(r as i64));
        }
        // classical r=1 oracle from S(l,k) by enumeration: Σ_k Σ_l C(2,l) S(l,k)
        let oracle: u64 = (0..=2)
            .flat_map(|k| (k..=2).map(move |l| [1, 2, 1][l] * classical::stirling2(l, k)))
            .sum();
        assert_eq!(oracle, 5);
        let v = bell_r_deg(2, 1).eval_var(Var::Lambda, &rat(0, 1)).eval_var(Var::Y, &rat(1, 1));
        assert_eq!(v.as_constant(), Some(rat(oracle as i64, 1)));
    }

    #[test]
    fn r_zero_table_is_ordinary_table() {
        let base = StirlingTableDeg::new(6);
        let r0 = RStirlingTableDeg::with_r(&base, 0);
        for n in 0..=6 {
            assert_eq!(r0.row(n), base.row(n));
        }
    }

    #[test]
    fn tables_agree_with_free_functions() {
        let t = StirlingTableDeg::new(5);
        let rt = RStirlingTableDeg::new(5, 2);
        for n in 0..=5 {
            assert_eq!(t.bell(n), bell_deg(n));
            assert_eq!(rt.bell(n), bell_r_deg(n, 2));
            for k in 0..=n + 1 {
                assert_eq!(t.get(n, k), stirling2_deg(n, k));
                assert_eq!(rt.get(n, k), stirling2_r_deg(n, k, 2));
            }
        }
    }

    #[test]
    fn partition_enumeration() {
        let bells: Vec<u64> = (0..8).map(classical::bell_number).collect();
        assert_eq!(bells, [1, 1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(classical::partition_block_counts(4), [0, 1, 7, 6, 1]);
        assert_eq!(classical::stirling2(0, 0), 1);
        assert_eq!(classical::stirling2(3, 5), 0);
    }

    #[test]
    #[should_panic(expected = "r >= 1")]
    fn r_zero_rejected() {
        stirling2_r_deg(2, 1, 0);
    }
}
