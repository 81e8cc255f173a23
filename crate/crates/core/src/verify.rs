//! Named verification suites that pit each closed form against its oracle
//! or identity over a parameter grid.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::balls::{
    circular_indel_ball_size, circular_string, deletion_ball, indel_ball, insertion_ball, insertion_ball_size,
};
use crate::binom::binomial;
use crate::channel::ChannelModel;
use crate::error::{Error, Result};
use crate::formulas::{
    central_alternating_identity, head_mismatch_recursion, indel_lower_bound, length_recursion, n_minus_binary_vt,
    n_minus_binary_vt_recursive, n_minus_uncoded, n_plus, n_plus_binary, n_plus_equal, n_plus_levenshtein,
    shifted_alternating_identity, FormulaParams,
};
use crate::oracle::{oracle_common_supersequences, oracle_n_minus, Budget, NPlusProfile};
use crate::vt::{family_size_bound, generate_worst_pairs, Generation, VtCode};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    OracleNplus,
    Recursions,
    Identities,
    Corollaries,
    VtPairs,
    Circular,
    Deletion,
    ChannelExample,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::OracleNplus,
        Suite::Recursions,
        Suite::Identities,
        Suite::Corollaries,
        Suite::VtPairs,
        Suite::Circular,
        Suite::Deletion,
        Suite::ChannelExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleNplus => "oracle-nplus",
            Suite::Recursions => "recursions",
            Suite::Identities => "identities",
            Suite::Corollaries => "corollaries",
            Suite::VtPairs => "vt-pairs",
            Suite::Circular => "circular",
            Suite::Deletion => "deletion",
            Suite::ChannelExample => "channel-example",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            Error::Parse(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The oracle refused to run; nothing was falsified.
    BudgetExceeded(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.outcome == Outcome::Pass).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.iter().filter(|c| matches!(c.outcome, Outcome::Fail(_))).count()
    }

    pub fn budget_exceeded(&self) -> usize {
        self.cases.iter().filter(|c| matches!(c.outcome, Outcome::BudgetExceeded(_))).count()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0 && self.budget_exceeded() == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub budget: Budget,
    /// Restricts the VT pair suite to one length.
    pub n: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: Budget::from_env(), n: None }
    }
}

/// A named check; `Ok(None)` passes, `Ok(Some(why))` fails.
struct Case {
    name: String,
    check: Box<dyn Fn() -> Result<Option<String>> + Send + Sync>,
}

fn case(name: impl Into<String>, check: impl Fn() -> Result<Option<String>> + Send + Sync + 'static) -> Case {
    Case { name: name.into(), check: Box::new(check) }
}

fn expect_eq<T: PartialEq + fmt::Display>(lhs: T, rhs: T) -> Result<Option<String>> {
    Ok((lhs != rhs).then(|| format!("{lhs} != {rhs}")))
}

fn all_pass(failures: Vec<String>) -> Result<Option<String>> {
    Ok((!failures.is_empty()).then(|| failures.join("; ")))
}

/// Runs every case of `suite`, in parallel, reporting in canonical order.
/// `progress` receives each finished case name.
pub fn run_suite(suite: Suite, opts: &VerifyOptions, progress: &(dyn Fn(&str) + Sync)) -> SuiteReport {
    let cases = match suite {
        Suite::OracleNplus => oracle_nplus_cases(opts.budget),
        Suite::Recursions => recursion_cases(),
        Suite::Identities => identity_cases(),
        Suite::Corollaries => corollary_cases(),
        Suite::VtPairs => vt_pair_cases(opts),
        Suite::Circular => circular_cases(),
        Suite::Deletion => deletion_cases(opts.budget),
        Suite::ChannelExample => channel_cases(),
    };
    let cases = cases
        .into_par_iter()
        .map(|c| {
            let outcome = match (c.check)() {
                Ok(None) => Outcome::Pass,
                Ok(Some(why)) => Outcome::Fail(why),
                Err(e @ Error::Budget { .. }) => Outcome::BudgetExceeded(e.to_string()),
                Err(e) => Outcome::Fail(e.to_string()),
            };
            progress(&c.name);
            CaseResult { name: c.name, outcome }
        })
        .collect();
    SuiteReport { suite, cases }
}

/// The formula/oracle grid: binary with `n <= 7, t <= 3`, ternary with
/// `n <= 4, t <= 2`.
pub fn oracle_grid() -> Vec<(u64, u64, u64, u32)> {
    let mut grid = Vec::new();
    for (q, n_max, t_max) in [(2u32, 7u64, 3u64), (3, 4, 2)] {
        for n in 1..=n_max {
            for t in 0..=t_max {
                for k in 0..=t {
                    grid.push((n, t, k, q));
                }
            }
        }
    }
    grid
}

fn oracle_nplus_cases(budget: Budget) -> Vec<Case> {
    oracle_grid()
        .into_iter()
        .map(|(n, t, k, q)| {
            case(format!("n={n} t={t} k={k} q={q}"), move || {
                let profile = NPlusProfile::compute(n, t, k, q, budget)?;
                let mut failures = Vec::new();
                for l in 0..=k.min(n) {
                    let params = FormulaParams::new(n, t, k, l, q)?;
                    let formula = n_plus(&params)?;
                    let oracle = profile.for_l(l)?;
                    if formula != oracle.value {
                        failures.push(format!("l={l}: formula {formula} vs oracle {}", oracle.value));
                    }
                    let x = Word::repeat(0, (n + t - k) as usize);
                    let y = Word::new([vec![1; l as usize], vec![0; (n - l) as usize]].concat());
                    let witness = oracle_common_supersequences(&x, &y, k as usize, t as usize, q as u8)?;
                    if witness != formula {
                        failures.push(format!("l={l}: extremal pair reaches {witness}, formula {formula}"));
                    }
                }
                if k < n {
                    let beyond = profile.for_l(k + 1)?;
                    if beyond.value != BigUint::ZERO {
                        failures.push(format!("l=k+1 gives {} instead of 0", beyond.value));
                    }
                }
                all_pass(failures)
            })
        })
        .collect()
}

/// `(n, t, k, l, q)` with `n in [2,20]`, `1 <= l <= k <= t <= 6`, `q in {2,3,4}`.
pub fn recursion_grid() -> Vec<(i64, i64, i64, i64, i64)> {
    let mut grid = Vec::new();
    for q in 2..=4 {
        for n in 2..=20 {
            for t in 1..=6 {
                for k in 1..=t {
                    for l in 1..=k {
                        grid.push((n, t, k, l, q));
                    }
                }
            }
        }
    }
    grid
}

fn recursion_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    for q in 2..=4i64 {
        cases.push(case(format!("length recursion q={q}"), move || {
            let failures = recursion_grid()
                .into_iter()
                .filter(|g| g.4 == q)
                .filter_map(|(n, t, k, l, q)| {
                    let (a, b) = length_recursion(n, t, k, l, q);
                    (a != b).then(|| format!("({n},{t},{k},{l}): {a} != {b}"))
                })
                .collect();
            all_pass(failures)
        }));
        cases.push(case(format!("head-mismatch recursion q={q}"), move || {
            let failures = recursion_grid()
                .into_iter()
                .filter(|g| g.4 == q)
                .filter_map(|(n, t, k, l, q)| {
                    let (a, b) = head_mismatch_recursion(n, t, k, l, q);
                    (a != b).then(|| format!("({n},{t},{k},{l}): {a} != {b}"))
                })
                .collect();
            all_pass(failures)
        }));
    }
    cases
}

fn identity_cases() -> Vec<Case> {
    let mut cases: Vec<Case> = (0..=30u64)
        .map(|m| {
            case(format!("central m={m}"), move || {
                let (a, b) = central_alternating_identity(m);
                expect_eq(a, b)
            })
        })
        .collect();
    for n in 0..=10u64 {
        cases.push(case(format!("shifted n={n}"), move || {
            let mut failures = Vec::new();
            for m in 0..=10u64 {
                for t in 0..=10u64 {
                    for j in 0..=10u64 {
                        if t + j < m {
                            continue;
                        }
                        let (a, b) = shifted_alternating_identity(n, m, t, j);
                        if a != b {
                            failures.push(format!("m={m} t={t} j={j}: {a} != {b}"));
                        }
                    }
                }
            }
            all_pass(failures)
        }));
    }
    cases
}

fn corollary_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    for q in 2..=4u32 {
        cases.push(case(format!("levenshtein form q={q}"), move || {
            let mut failures = Vec::new();
            for n in 1..=20u64 {
                for t in 1..=8u64 {
                    let (a, b) = (n_plus_equal(n, t, 1, q)?, n_plus_levenshtein(n, t, q));
                    if a != b {
                        failures.push(format!("n={n} t={t}: {a} != {b}"));
                    }
                }
            }
            all_pass(failures)
        }));
        cases.push(case(format!("l=0 is the ball size q={q}"), move || {
            let mut failures = Vec::new();
            for n in 1..=20u64 {
                for t in 0..=8u64 {
                    let (a, b) = (n_plus_equal(n, t, 0, q)?, insertion_ball_size(n, t, q));
                    if a != b {
                        failures.push(format!("n={n} t={t}: {a} != {b}"));
                    }
                }
            }
            all_pass(failures)
        }));
        cases.push(case(format!("l=k boundary and monotonicity q={q}"), move || {
            let mut failures = Vec::new();
            for (n, t, k, _, _) in recursion_grid().into_iter().filter(|g| g.3 == 1 && g.4 == 2) {
                let (n, t, k) = (n as u64, t as u64, k as u64);
                let at = |l| n_plus(&FormulaParams::new(n, t, k, l, q)?);
                if k <= n {
                    let edge = at(k)?;
                    if edge != binomial(t + k, k) {
                        failures.push(format!("({n},{t},{k},l=k): {edge} != C(t+k,k)"));
                    }
                }
                for l in 1..=k.min(n) {
                    if at(l)? > at(l - 1)? {
                        failures.push(format!("({n},{t},{k}): increases from l={} to l={l}", l - 1));
                    }
                }
            }
            all_pass(failures)
        }));
    }
    cases.push(case("binary form", || {
        let mut failures = Vec::new();
        for (n, t, k, l, _) in recursion_grid().into_iter().filter(|g| g.4 == 2) {
            let (n, t, k, l) = (n as u64, t as u64, k as u64, l as u64);
            if l > n {
                continue;
            }
            let (a, b) = (n_plus_binary(n, t, k, l)?, n_plus(&FormulaParams::new(n, t, k, l, 2)?)?);
            if a != b {
                failures.push(format!("({n},{t},{k},{l}): {a} != {b}"));
            }
        }
        all_pass(failures)
    }));
    cases
}

fn vt_pair_cases(opts: &VerifyOptions) -> Vec<Case> {
    let lengths: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => (7..=10).collect(),
    };
    let budget = opts.budget;
    let mut cases = Vec::new();
    for n in lengths {
        for a in 0..=n {
            for t in [2usize, 3] {
                cases.push(case(format!("n={n} a={a} t={t}"), move || {
                    let code = VtCode::new(n, a)?;
                    let ball = insertion_ball_size(n as u64, t as u64, 2);
                    let pairs = crate::vt::family_size(n)?;
                    let work = pairs.clone() * ball;
                    budget.check(u128::try_from(&work).unwrap_or(u128::MAX))?;
                    let family = generate_worst_pairs(code, t, Generation::Exhaustive { limit: None })?;
                    let target = family.intersection()?;
                    let mut failures = Vec::new();
                    for p in &family.pairs {
                        let got = oracle_common_supersequences(&p.first, &p.second, t, t, 2)?;
                        if got != target {
                            failures.push(format!("({}, {}) share {got}, expected {target}", p.first, p.second));
                        }
                    }
                    let size = BigUint::from(family.pairs.len());
                    if size < family_size_bound(n) {
                        failures.push(format!("family size {size} below the bound {}", family_size_bound(n)));
                    }
                    all_pass(failures)
                }));
            }
        }
    }
    cases
}

/// Points at which the indel lower bound is checked against enumeration.
pub const INDEL_POINTS: [(u64, u64); 3] = [(6, 1), (8, 1), (8, 2)];

/// `|I_t(D_t(C_n)) ∩ I_t(D_t(C'_n))|` for the two alternating words.
pub fn alternating_indel_overlap(n: usize, t: usize) -> Result<BigUint> {
    let a = indel_ball(&circular_string(n, 0), t, 2)?;
    let b = indel_ball(&circular_string(n, 1), t, 2)?;
    Ok(BigUint::from(a.intersection(&b).count()))
}

fn circular_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    for t in 1..=2usize {
        for n in 2 * t..=12 {
            cases.push(case(format!("indel ball size n={n} t={t}"), move || {
                for leading in 0..2 {
                    let got = indel_ball(&circular_string(n, leading), t, 2)?.len();
                    let want = circular_indel_ball_size(n as u64, t as u64);
                    if BigUint::from(got) != want {
                        return Ok(Some(format!("leading {leading}: {got} != {want}")));
                    }
                }
                Ok(None)
            }));
            cases.push(case(format!("deletion ball is an insertion ball n={n} t={t}"), move || {
                for leading in 0..2 {
                    let del = deletion_ball(&circular_string(n, leading), t)?;
                    let ins = insertion_ball(&circular_string(n - 2 * t, leading), t, 2);
                    if del != ins {
                        return Ok(Some(format!("leading {leading}: sets differ")));
                    }
                }
                Ok(None)
            }));
        }
    }
    for (n, t) in INDEL_POINTS {
        cases.push(case(format!("indel lower bound n={n} t={t}"), move || {
            expect_eq(indel_lower_bound(n, t)?, alternating_indel_overlap(n as usize, t as usize)?)
        }));
    }
    cases
}

fn deletion_cases(budget: Budget) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 2..=8u64 {
        for t in 1..=3u64.min(n) {
            cases.push(case(format!("uncoded n={n} t={t}"), move || {
                expect_eq(n_minus_uncoded(n, t, 2)?, oracle_n_minus(n, t, 2, 0, budget)?.value)
            }));
        }
    }
    for (n, t) in [(10u64, 3u64), (12, 3)] {
        cases.push(case(format!("distance-4 recursion n={n} t={t}"), move || {
            expect_eq(n_minus_binary_vt(n, t)?, n_minus_binary_vt_recursive(n, t)?)
        }));
        cases.push(case(format!("distance-4 oracle n={n} t={t}"), move || {
            expect_eq(n_minus_binary_vt(n, t)?, oracle_n_minus(n, t, 2, 4, budget)?.value)
        }));
    }
    cases
}

fn channel_cases() -> Vec<Case> {
    let model = || ChannelModel::new(0.3, 500, 2, 2);
    vec![
        case("E1/E2 = 10.74 +- 0.01", move || {
            let r = model()?.expected_ratio(1, 2)?;
            Ok(((r - 10.74).abs() > 0.01).then(|| format!("got {r}")))
        }),
        case("E0/E2 = 1.61e3 +- 1%", move || {
            let r = model()?.expected_ratio(0, 2)?;
            Ok(((r / 1.61e3 - 1.0).abs() > 0.01).then(|| format!("got {r}")))
        }),
        case("E3/E2 = 8.6 +- 0.05", move || {
            let r = model()?.expected_ratio(3, 2)?;
            Ok(((r - 8.6).abs() > 0.05).then(|| format!("got {r}")))
        }),
        case("T2 = 7", move || expect_eq(model()?.threshold(2), BigUint::from(7u32))),
        case("argmin E_i over i <= 10 is 2", move || expect_eq(model()?.optimal_output_length(10)?.0, 2)),
    ]
}
