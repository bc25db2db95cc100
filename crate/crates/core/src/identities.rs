//! Exact verification of the Spivey-type identities and the structural
//! relations behind them.
//!
//! Every check builds both sides as [`MPoly`] values and compares their
//! canonical renderings, so a report is equal only when the two sides are
//! the same polynomial in `λ` and `y`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, compositions, factorial, multinomial, rat, MPoly, Rational, Var};
use crate::bell::{
    classical, deg_falling, falling_basis_coefficients, stirling2_deg_via_compositions,
    RStirlingTableDeg, StirlingTableDeg,
};
use crate::moments::RandomVariable;
use crate::prob_bell::{
    prob_bell_deg, prob_bell_r_deg, prob_bell_recurrence_rhs, sk_mixed_expectation,
    MixedExpectationSpec,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
/// Report identifiers; the serialized names are a stable interface.
pub enum IdentityId {
    /// Probabilistic degenerate Spivey relation.
    #[serde(rename = "THM21")]
    ProbSpivey,
    /// The probabilistic relation at `y = 1`.
    #[serde(rename = "COR22")]
    ProbSpiveyAtOne,
    /// Probabilistic degenerate r-Bell Spivey relation.
    #[serde(rename = "THM23")]
    ProbRSpivey,
    /// Degenerate r-Bell Spivey relation.
    #[serde(rename = "COR24")]
    RSpivey,
    /// Degenerate Spivey relation.
    #[serde(rename = "EQ1")]
    DegSpivey,
    #[serde(rename = "GOULD_QUAINTANCE")]
    GouldQuaintance,
    #[serde(rename = "SPIVEY")]
    Spivey,
    /// r-Stirling numbers from binomial sums of ordinary ones.
    #[serde(rename = "EQ27")]
    RStirlingDecomposition,
    #[serde(rename = "COMPOSITION_FORMULA")]
    CompositionFormula,
    /// Recurrence of the probabilistic Bell polynomials.
    #[serde(rename = "RECURRENCE_14")]
    ProbBellRecurrence,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::ProbSpivey,
        IdentityId::ProbSpiveyAtOne,
        IdentityId::ProbRSpivey,
        IdentityId::RSpivey,
        IdentityId::DegSpivey,
        IdentityId::GouldQuaintance,
        IdentityId::Spivey,
        IdentityId::RStirlingDecomposition,
        IdentityId::CompositionFormula,
        IdentityId::ProbBellRecurrence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::ProbSpivey => "THM21",
            IdentityId::ProbSpiveyAtOne => "COR22",
            IdentityId::ProbRSpivey => "THM23",
            IdentityId::RSpivey => "COR24",
            IdentityId::DegSpivey => "EQ1",
            IdentityId::GouldQuaintance => "GOULD_QUAINTANCE",
            IdentityId::Spivey => "SPIVEY",
            IdentityId::RStirlingDecomposition => "EQ27",
            IdentityId::CompositionFormula => "COMPOSITION_FORMULA",
            IdentityId::ProbBellRecurrence => "RECURRENCE_14",
        }
    }

    /// Whether the identity is checked per random-variable model.
    pub fn uses_rv(self) -> bool {
        matches!(
            self,
            IdentityId::ProbSpivey | IdentityId::ProbSpiveyAtOne | IdentityId::ProbRSpivey | IdentityId::ProbBellRecurrence
        )
    }

    pub fn uses_r(self) -> bool {
        matches!(self, IdentityId::ProbRSpivey | IdentityId::RSpivey | IdentityId::RStirlingDecomposition)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    /// Accepts the report id (`THM21`), its lowercase form, or the
    /// descriptive name (`prob-spivey`, `gould-quaintance`).
    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        let alias = match norm.as_str() {
            "COMPOSITION" => "COMPOSITION_FORMULA",
            "RECURRENCE" | "RECURRENCE14" | "PROB_BELL_RECURRENCE" => "RECURRENCE_14",
            "GQ" => "GOULD_QUAINTANCE",
            "PROB_SPIVEY" => "THM21",
            "PROB_SPIVEY_AT_ONE" => "COR22",
            "PROB_R_SPIVEY" => "THM23",
            "R_SPIVEY" => "COR24",
            "DEG_SPIVEY" => "EQ1",
            "R_STIRLING_DECOMPOSITION" => "EQ27",
            other => other,
        };
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == alias)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// Index parameters of one verification cell; unused ones are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rv: Option<String>,
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: IdentityId,
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    /// Wall time of the check; kept out of serialized reports so report
    /// files stay byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

const NEGATIVE_SUPPORT_NOTE: &str = "random variable has negative atoms; outside the positive-support worked cases";

impl VerificationReport {
    fn compare(identity_id: IdentityId, params: Params, lhs: &MPoly, rhs: &MPoly, started: Instant) -> Self {
        let lhs = lhs.to_string();
        let rhs = rhs.to_string();
        let equal = lhs == rhs;
        Self {
            identity_id,
            params,
            lhs,
            rhs,
            equal,
            elapsed: started.elapsed(),
            note: None,
        }
    }

    fn with_rv_note(mut self, rv: &RandomVariable) -> Self {
        if rv.has_negative_support() {
            self.note = Some(NEGATIVE_SUPPORT_NOTE.to_string());
        }
        self
    }

    /// Orders reports by identity, then parameters.
    pub fn sort_key(&self) -> (IdentityId, &Params) {
        (self.identity_id, &self.params)
    }
}

fn inv_factorial(k: usize) -> Rational {
    Rational::from_integer(factorial(k)).recip()
}

fn int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

fn y_to_one(p: &MPoly) -> MPoly {
    p.eval_var(Var::Y, &rat(1, 1))
}

fn lambda_to_zero(p: &MPoly) -> MPoly {
    p.eval_var(Var::Lambda, &rat(0, 1))
}

/// `Σ_{l_1+…+l_k=weight} C(weight; l) E[(S_k − shift·λ)_{j,λ} Π (Y_i)_{l_i,λ}]`
/// over compositions into positive parts.
fn composition_sum(rv: &RandomVariable, weight: usize, k: usize, shift: usize, j: usize) -> MPoly {
    compositions(weight, k)
        .into_iter()
        .map(|parts| {
            let c = int(multinomial(weight, &parts));
            let spec = MixedExpectationSpec::new(rv, k, parts, shift, j).expect("valid composition");
            sk_mixed_expectation(&spec).scale(&c)
        })
        .sum()
}

/// The `(k, m)` summands of the right-hand side of the probabilistic
/// Spivey relation for `φ^Y_{l+n,λ}(y)`.
pub fn prob_spivey_terms(rv: &RandomVariable, n: usize, l: usize) -> BTreeMap<(usize, usize), MPoly> {
    let bells: Vec<MPoly> = (0..=l).map(|m| prob_bell_deg(rv, m)).collect();
    prob_spivey_terms_with(rv, n, l, &bells)
}

/// Right-hand side of the probabilistic Spivey relation given precomputed
/// `bells[m] = φ^Y_{m,λ}(y)` for `m ≤ l`: evaluates `φ^Y_{l+n,λ}(y)` from
/// lower-index values.
pub fn spivey_from_lower(rv: &RandomVariable, n: usize, l: usize, bells: &[MPoly]) -> MPoly {
    prob_spivey_terms_with(rv, n, l, bells).into_values().sum()
}

fn prob_spivey_terms_with(
    rv: &RandomVariable,
    n: usize,
    l: usize,
    bells: &[MPoly],
) -> BTreeMap<(usize, usize), MPoly> {
    assert!(bells.len() > l, "need φ_m for all m <= {l}");
    let mut terms = BTreeMap::new();
    for k in 0..=n {
        for m in 0..=l {
            let coeff = int(binomial(l as i64, m)) * inv_factorial(k);
            let inner = composition_sum(rv, n, k, n, l - m);
            let term = (&inner * &bells[m]).shift(Var::Y, k as u32).scale(&coeff);
            terms.insert((k, m), term);
        }
    }
    terms
}

/// The `(k, m)` summands `C(l,m) {n k}_λ (k − nλ)_{l−m,λ} y^k φ_{m,λ}(y)` of
/// the degenerate Spivey relation.
pub fn deg_spivey_terms(n: usize, l: usize) -> BTreeMap<(usize, usize), MPoly> {
    let table = StirlingTableDeg::new(n.max(l));
    let lambda = MPoly::lambda();
    let mut terms = BTreeMap::new();
    for k in 0..=n {
        let base = MPoly::from_int(k as i64) - lambda.scale(&rat(n as i64, 1));
        for m in 0..=l {
            let term = (&table.get(n, k) * &deg_falling(&base, l - m) * table.bell(m))
                .shift(Var::Y, k as u32)
                .scale(&int(binomial(l as i64, m)));
            terms.insert((k, m), term);
        }
    }
    terms
}

fn prob_spivey_sides(rv: &RandomVariable, n: usize, l: usize) -> (MPoly, MPoly) {
    let lhs = prob_bell_deg(rv, l + n);
    let rhs = prob_spivey_terms(rv, n, l).into_values().sum();
    (lhs, rhs)
}

fn rv_params(rv: &RandomVariable) -> Option<String> {
    Some(rv.to_string())
}

/// Probabilistic Spivey relation for `φ^Y_{l+n,λ}(y)`.
pub fn verify_prob_spivey(rv: &RandomVariable, n: usize, l: usize) -> VerificationReport {
    let started = Instant::now();
    let (lhs, rhs) = prob_spivey_sides(rv, n, l);
    let params = Params { n: Some(n), l: Some(l), rv: rv_params(rv), ..Params::default() };
    VerificationReport::compare(IdentityId::ProbSpivey, params, &lhs, &rhs, started).with_rv_note(rv)
}

/// The same relation for the probabilistic degenerate Bell numbers (`y = 1`).
pub fn verify_prob_spivey_at_one(rv: &RandomVariable, n: usize, l: usize) -> VerificationReport {
    let started = Instant::now();
    let (lhs, rhs) = prob_spivey_sides(rv, n, l);
    let params = Params { n: Some(n), l: Some(l), rv: rv_params(rv), ..Params::default() };
    VerificationReport::compare(IdentityId::ProbSpiveyAtOne, params, &y_to_one(&lhs), &y_to_one(&rhs), started)
        .with_rv_note(rv)
}

/// Degenerate Spivey relation `φ_{l+n,λ}(y) = Σ C(l,m){n k}_λ(k−nλ)_{l−m,λ} y^k φ_{m,λ}(y)`.
pub fn verify_deg_spivey(n: usize, l: usize) -> VerificationReport {
    let started = Instant::now();
    let lhs = StirlingTableDeg::new(l + n).bell(l + n);
    let rhs: MPoly = deg_spivey_terms(n, l).into_values().sum();
    let params = Params { n: Some(n), l: Some(l), ..Params::default() };
    VerificationReport::compare(IdentityId::DegSpivey, params, &lhs, &rhs, started)
}

/// True when every `(k, m)` summand of the probabilistic relation at
/// `Y = 1` equals the matching summand of the degenerate relation.
pub fn deg_spivey_termwise_agrees(n: usize, l: usize) -> bool {
    prob_spivey_terms(&RandomVariable::point(rat(1, 1)), n, l) == deg_spivey_terms(n, l)
}

/// The λ = 0 form `Σ_k Σ_m C(l,m) S(n,k) k^{l−m} y^k φ_m(y)` built from the
/// engine's degenerate values at `λ = 0`, with `0^0 = 1`.
pub fn gould_quaintance_rhs(n: usize, l: usize) -> MPoly {
    let table = StirlingTableDeg::new(n.max(l));
    let mut out = MPoly::zero();
    for k in 0..=n {
        let s = lambda_to_zero(&table.get(n, k));
        for m in 0..=l {
            let power = num_traits::pow(rat(k as i64, 1), l - m);
            let term = (&s * &lambda_to_zero(&table.bell(m)))
                .shift(Var::Y, k as u32)
                .scale(&(int(binomial(l as i64, m)) * power));
            out += &term;
        }
    }
    out
}

/// Gould–Quaintance form against Bell polynomials from set-partition
/// enumeration.
pub fn verify_gould_quaintance(n: usize, l: usize) -> VerificationReport {
    let started = Instant::now();
    let lhs = classical::bell_poly(l + n);
    let rhs = gould_quaintance_rhs(n, l);
    let params = Params { n: Some(n), l: Some(l), ..Params::default() };
    VerificationReport::compare(IdentityId::GouldQuaintance, params, &lhs, &rhs, started)
}

/// Spivey's relation against Bell numbers from set-partition enumeration.
pub fn verify_spivey(n: usize, l: usize) -> VerificationReport {
    let started = Instant::now();
    let lhs = MPoly::constant(int(classical::bell_number(l + n).into()));
    let rhs = y_to_one(&gould_quaintance_rhs(n, l));
    let params = Params { n: Some(n), l: Some(l), ..Params::default() };
    VerificationReport::compare(IdentityId::Spivey, params, &lhs, &rhs, started)
}

/// Both classical limits: `[Gould–Quaintance, Spivey]`.
pub fn verify_classical_limits(n: usize, l: usize) -> [VerificationReport; 2] {
    [verify_gould_quaintance(n, l), verify_spivey(n, l)]
}

/// Right-hand side of the probabilistic Spivey relation for
/// `φ^{(r,Y)}_{j+n,λ}(y)`.
pub fn prob_r_spivey_rhs(rv: &RandomVariable, n: usize, j: usize, r: u32) -> MPoly {
    let bells: Vec<MPoly> = (0..=j).map(|m| prob_bell_r_deg(rv, m, r)).collect();
    let rr = MPoly::from_int(r as i64);
    let mut out = MPoly::zero();
    for l in 0..=n {
        let outer = deg_falling(&rr, n - l).scale(&int(binomial(n as i64, l)));
        for k in 0..=l {
            for m in 0..=j {
                let inner = composition_sum(rv, l, k, n, j - m);
                if inner.is_zero() {
                    continue;
                }
                let c = int(binomial(j as i64, m)) * inv_factorial(k);
                let term = (&outer * &inner * &bells[m]).shift(Var::Y, k as u32).scale(&c);
                out += &term;
            }
        }
    }
    out
}

/// Probabilistic Spivey relation for the `r`-Bell polynomials.
pub fn verify_prob_r_spivey(rv: &RandomVariable, n: usize, j: usize, r: u32) -> VerificationReport {
    assert!(r >= 1, "r-Bell polynomials require r >= 1");
    let started = Instant::now();
    let lhs = prob_bell_r_deg(rv, j + n, r);
    let rhs = prob_r_spivey_rhs(rv, n, j, r);
    let params = Params { n: Some(n), j: Some(j), r: Some(r), rv: rv_params(rv), ..Params::default() };
    VerificationReport::compare(IdentityId::ProbRSpivey, params, &lhs, &rhs, started).with_rv_note(rv)
}

/// `Σ_k Σ_m {n+r k+r}_{r,λ} C(j,m) (k−nλ)_{j−m,λ} y^k φ^{(r)}_{m,λ}(y)`.
pub fn r_spivey_rhs(n: usize, j: usize, r: u32) -> MPoly {
    let table = RStirlingTableDeg::new(n.max(j), r);
    let lambda = MPoly::lambda();
    let mut out = MPoly::zero();
    for k in 0..=n {
        let base = MPoly::from_int(k as i64) - lambda.scale(&rat(n as i64, 1));
        for m in 0..=j {
            let term = (&table.get(n, k) * &deg_falling(&base, j - m) * table.bell(m))
                .shift(Var::Y, k as u32)
                .scale(&int(binomial(j as i64, m)));
            out += &term;
        }
    }
    out
}

/// Degenerate `r`-Bell Spivey relation.
pub fn verify_r_spivey(n: usize, j: usize, r: u32) -> VerificationReport {
    assert!(r >= 1, "r-Bell polynomials require r >= 1");
    let started = Instant::now();
    let lhs = RStirlingTableDeg::new(j + n, r).bell(j + n);
    let rhs = r_spivey_rhs(n, j, r);
    let params = Params { n: Some(n), j: Some(j), r: Some(r), ..Params::default() };
    VerificationReport::compare(IdentityId::RSpivey, params, &lhs, &rhs, started)
}

/// `{n+r k+r}_{r,λ}` from the decomposition sum against the coefficient of
/// `(x)_k` in `(x+r)_{n,λ}`.
pub fn verify_r_stirling_decomposition(n: usize, k: usize, r: u32) -> VerificationReport {
    assert!(r >= 1, "r-Stirling numbers require r >= 1");
    let started = Instant::now();
    let lhs = RStirlingTableDeg::new(n, r).get(n, k);
    let shifted = MPoly::x() + MPoly::from_int(r as i64);
    let rhs = falling_basis_coefficients(&deg_falling(&shifted, n))
        .into_iter()
        .nth(k)
        .unwrap_or_default();
    let params = Params { n: Some(n), k: Some(k), r: Some(r), ..Params::default() };
    VerificationReport::compare(IdentityId::RStirlingDecomposition, params, &lhs, &rhs, started)
}

/// `{n k}_λ` by basis conversion against the composition-sum formula.
pub fn verify_composition_formula(n: usize, k: usize) -> VerificationReport {
    let started = Instant::now();
    let lhs = StirlingTableDeg::new(n).get(n, k);
    let rhs = stirling2_deg_via_compositions(n, k);
    let params = Params { n: Some(n), k: Some(k), ..Params::default() };
    VerificationReport::compare(IdentityId::CompositionFormula, params, &lhs, &rhs, started)
}

/// First-order recurrence for `φ^Y_{n+1,λ}(y)`.
pub fn verify_recurrence(rv: &RandomVariable, n: usize) -> VerificationReport {
    let started = Instant::now();
    let lhs = prob_bell_deg(rv, n + 1);
    let rhs = prob_bell_recurrence_rhs(rv, n);
    let params = Params { n: Some(n), rv: rv_params(rv), ..Params::default() };
    VerificationReport::compare(IdentityId::ProbBellRecurrence, params, &lhs, &rhs, started).with_rv_note(rv)
}

/// Batch of the structural checks: the `r`-Stirling decomposition for
/// `n ≤ n_max`, `1 ≤ r ≤ r_max`; the composition formula for `n ≤ n_max`;
/// and the first-order recurrence for each model with `n + 1 ≤ n_max`.
pub fn verify_structural(n_max: usize, r_max: u32, rvs: &[RandomVariable]) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        for n in 0..=n_max {
            for k in 0..=n {
                out.push(verify_r_stirling_decomposition(n, k, r));
            }
        }
    }
    for n in 0..=n_max {
        for k in 0..=n {
            out.push(verify_composition_formula(n, k));
        }
    }
    for rv in rvs {
        for n in 0..n_max {
            out.push(verify_recurrence(rv, n));
        }
    }
    out
}

/// Bounds of a verification grid.
#[derive(Debug, Clone, Serialize)]
pub struct GridBounds {
    /// Bound on the sum of the two Spivey indices (`n + l` or `n + j`) and
    /// on `n` for the structural checks.
    pub sum_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_max: Option<usize>,
    pub r_values: Vec<u32>,
}

impl Default for GridBounds {
    fn default() -> Self {
        Self {
            sum_max: 6,
            n_max: None,
            l_max: None,
            j_max: None,
            r_values: vec![1, 2, 3],
        }
    }
}

/// One independent cell of a verification grid.
#[derive(Debug, Clone)]
pub struct Cell {
    pub identity: IdentityId,
    pub n: usize,
    /// `l` for the Bell relations, `j` for the `r`-Bell relations, `k` for
    /// the Stirling checks.
    pub second: usize,
    pub r: u32,
    pub rv: Option<Arc<RandomVariable>>,
}

impl Cell {
    pub fn run(&self) -> VerificationReport {
        let rv = || self.rv.as_deref().expect("cell needs a random variable");
        let (n, s, r) = (self.n, self.second, self.r);
        match self.identity {
            IdentityId::ProbSpivey => verify_prob_spivey(rv(), n, s),
            IdentityId::ProbSpiveyAtOne => verify_prob_spivey_at_one(rv(), n, s),
            IdentityId::ProbRSpivey => verify_prob_r_spivey(rv(), n, s, r),
            IdentityId::RSpivey => verify_r_spivey(n, s, r),
            IdentityId::DegSpivey => verify_deg_spivey(n, s),
            IdentityId::GouldQuaintance => verify_gould_quaintance(n, s),
            IdentityId::Spivey => verify_spivey(n, s),
            IdentityId::RStirlingDecomposition => verify_r_stirling_decomposition(n, s, r),
            IdentityId::CompositionFormula => verify_composition_formula(n, s),
            IdentityId::ProbBellRecurrence => verify_recurrence(rv(), n),
        }
    }
}

/// Enumerates the cells of `identity` within `bounds`.
pub fn grid_cells(identity: IdentityId, bounds: &GridBounds, rvs: &[Arc<RandomVariable>]) -> Vec<Cell> {
    let n_cap = bounds.n_max.unwrap_or(usize::MAX);
    let second_cap = match identity {
        IdentityId::ProbRSpivey | IdentityId::RSpivey => bounds.j_max,
        _ => bounds.l_max,
    }
    .unwrap_or(usize::MAX);
    let pairs: Vec<(usize, usize)> = match identity {
        IdentityId::RStirlingDecomposition | IdentityId::CompositionFormula => (0..=bounds.sum_max.min(n_cap))
            .flat_map(|n| (0..=n).map(move |k| (n, k)))
            .collect(),
        IdentityId::ProbBellRecurrence => (0..bounds.sum_max.min(n_cap.saturating_add(1)))
            .map(|n| (n, 0))
            .collect(),
        _ => (0..=bounds.sum_max.min(n_cap))
            .flat_map(|n| (0..=bounds.sum_max - n).filter(|&s| s <= second_cap).map(move |s| (n, s)))
            .collect(),
    };
    let r_values: Vec<u32> = if identity.uses_r() { bounds.r_values.clone() } else { vec![0] };
    let rv_values: Vec<Option<Arc<RandomVariable>>> = if identity.uses_rv() {
        rvs.iter().cloned().map(Some).collect()
    } else {
        vec![None]
    };
    let mut cells = Vec::new();
    for rv in &rv_values {
        for &r in &r_values {
            for &(n, second) in &pairs {
                cells.push(Cell { identity, n, second, r, rv: rv.clone() });
            }
        }
    }
    cells
}

/// Counts of checked cells and failures.
pub fn summarize(reports: &[VerificationReport]) -> (usize, usize) {
    (reports.len(), reports.iter().filter(|r| !r.equal).count())
}
