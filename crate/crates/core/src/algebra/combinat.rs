//! Factorials, binomial and multinomial coefficients, and integer
//! compositions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Generalized binomial coefficient `C(n, k) = n(n-1)…(n-k+1)/k!`; `n` may
/// be negative.
pub fn binomial(n: i64, k: usize) -> BigInt {
    if n >= 0 && k as i64 > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(n - i);
    }
    num / factorial(k)
}

/// `n! / (p_1! ⋯ p_k!)`.
///
/// Panics if the parts do not sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    assert_eq!(total, n, "multinomial parts {parts:?} do not sum to {n}");
    parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p))
}

/// All compositions of `n` into exactly `k` positive parts, in
/// lexicographic order. `compositions(0, 0)` is the single empty tuple.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    if n < k {
        return out;
    }
    let mut current = Vec::with_capacity(k);
    fill(n, k, 1, &mut current, &mut out);
    out
}

/// All `k`-tuples of nonnegative integers summing to `n`, lexicographic.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = Vec::with_capacity(k);
    fill(n, k, 0, &mut current, &mut out);
    out
}

fn fill(remaining: usize, slots: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if slots == 1 {
        if remaining >= min {
            cur.push(remaining);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    let reserve = min * (slots - 1);
    if remaining < reserve + min {
        return;
    }
    for first in min..=remaining - reserve {
        cur.push(first);
        fill(remaining - first, slots - 1, min, cur, out);
        cur.pop();
    }
}
