//! The probabilistic insertion channel: a Markov chain that, before emitting
//! each source symbol, inserts uniform random symbols with probability `p`.
//!
//! Probabilities are handled in the log domain; `(1-p)^n` underflows for
//! the source lengths of interest long before the ratios do.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};
use statrs::function::factorial::ln_binomial;

use crate::binom::binomial;
use crate::error::{domain, Result};
use crate::formulas::{ln_big, n_plus_equal};
use crate::vt::{vt_decode, VtCode};
use crate::word::Word;

/// Tail mass below which infinite sums over insertion counts stop.
pub const TAIL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelModel {
    /// Insertion probability at each step, in `[0, 1)`.
    pub p: f64,
    /// Source length.
    pub n: usize,
    pub q: u8,
    /// Half the minimum edit distance of the code in use.
    pub l: usize,
}

impl ChannelModel {
    pub fn new(p: f64, n: usize, q: u8, l: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&p) {
            return Err(domain(format!("insertion probability p={p} must lie in [0, 1)")));
        }
        if n == 0 {
            return Err(domain("source length must be at least 1"));
        }
        if q < 2 {
            return Err(domain("alphabet size must be at least 2"));
        }
        if l == 0 {
            return Err(domain("distance parameter l must be at least 1"));
        }
        Ok(ChannelModel { p, n, q, l })
    }

    /// `ln p_i`, or `-inf` when `p_i = 0`.
    pub fn ln_p_insertions(&self, i: usize) -> f64 {
        let n = self.n as u64;
        let base = n as f64 * (-self.p).ln_1p();
        if i == 0 {
            return base;
        }
        if self.p == 0.0 {
            return f64::NEG_INFINITY;
        }
        let i64_ = i as u64;
        let terms: Vec<f64> = (1..=n.min(i64_)).map(|r| ln_binomial(n, r) + ln_binomial(i64_ - 1, r - 1)).collect();
        let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lse = max + terms.iter().map(|v| (v - max).exp()).sum::<f64>().ln();
        lse + i as f64 * self.p.ln() + base
    }

    /// Probability that an output carries exactly `i` insertions:
    /// `sum_{r=1}^{min(n,i)} C(n,r) C(i-1,r-1) p^i (1-p)^n`.
    pub fn p_insertions(&self, i: usize) -> f64 {
        self.ln_p_insertions(i).exp()
    }

    /// Distinct outputs of length `n+i` needed to reconstruct: one below
    /// `l` (the decoder suffices), `N+_q(n, i, l) + 1` from `l` on.
    pub fn threshold(&self, i: usize) -> BigUint {
        if i < self.l {
            return BigUint::one();
        }
        n_plus_equal(self.n as u64, i as u64, self.l as u64, u32::from(self.q)).expect("i >= l >= 1 and n >= 1")
            + BigUint::one()
    }

    /// `ln E_i = ln T_i - ln p_i`.
    pub fn ln_expected_transmissions(&self, i: usize) -> Result<f64> {
        let lp = self.ln_p_insertions(i);
        if lp == f64::NEG_INFINITY {
            return Err(domain(format!("p_{i} = 0, so E_{i} is undefined")));
        }
        Ok(ln_big(&self.threshold(i)) - lp)
    }

    /// `E_i = T_i / p_i`; may be `inf` when only the logarithm is finite.
    pub fn expected_transmissions(&self, i: usize) -> Result<f64> {
        self.ln_expected_transmissions(i).map(f64::exp)
    }

    /// `E_i / E_j` computed from the log difference.
    pub fn expected_ratio(&self, i: usize, j: usize) -> Result<f64> {
        Ok((self.ln_expected_transmissions(i)? - self.ln_expected_transmissions(j)?).exp())
    }

    /// The `i` in `[0, i_max]` minimizing `E_i`, ties to the smaller `i`,
    /// with `ln E_i`.
    pub fn optimal_output_length(&self, i_max: usize) -> Result<(usize, f64)> {
        if i_max < self.l {
            return Err(domain(format!("search bound i_max={i_max} must be at least l={}", self.l)));
        }
        let mut best: Option<(usize, f64)> = None;
        for i in 0..=i_max {
            if let Ok(v) = self.ln_expected_transmissions(i) {
                if best.is_none_or(|(_, b)| v < b) {
                    best = Some((i, v));
                }
            }
        }
        best.ok_or_else(|| domain("no output length in range has positive probability"))
    }

    /// Partial sums of `p_i` until the geometric tail bound drops below
    /// `tolerance`.
    pub fn normalization(&self, tolerance: f64) -> Normalization {
        let mut sum = 0.0;
        let mut i = 0;
        loop {
            sum += self.p_insertions(i);
            // From i on, p_{j+1}/p_j = p (n+j)/(j+1) is decreasing in j, so
            // the tail after i is at most p_{i+1} / (1 - ratio).
            let ratio = self.p * (self.n + i + 1) as f64 / (i + 2) as f64;
            if ratio < 1.0 {
                let tail = self.p_insertions(i + 1) / (1.0 - ratio);
                if tail < tolerance {
                    return Normalization { terms: i + 1, partial_sum: sum, tail_bound: tail };
                }
            }
            i += 1;
        }
    }

    /// Rows `(i, p_i, T_i, E_i)` for `i` in `[0, i_max]`.
    pub fn table(&self, i_max: usize) -> Vec<ChannelRow> {
        (0..=i_max)
            .map(|i| {
                let ln_p = self.ln_p_insertions(i);
                let threshold = self.threshold(i);
                let ln_e = self.ln_expected_transmissions(i).ok();
                ChannelRow { i, p_i: ln_p.exp(), ln_p_i: ln_p, threshold, e_i: ln_e.map(f64::exp), ln_e_i: ln_e }
            })
            .collect()
    }

    /// `p (n - l + 1) > l C(2l, l)`, the rule of thumb for preferring
    /// reconstruction at length `n + l` over decoding a shorter output.
    pub fn reconstruction_heuristic(&self) -> bool {
        let rhs = self.l as f64 * ln_big(&binomial(2 * self.l as u64, self.l as u64)).exp();
        self.p * (self.n as f64 - self.l as f64 + 1.0) > rhs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Normalization {
    pub terms: usize,
    pub partial_sum: f64,
    pub tail_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelRow {
    pub i: usize,
    pub p_i: f64,
    pub ln_p_i: f64,
    pub threshold: BigUint,
    pub e_i: Option<f64>,
    pub ln_e_i: Option<f64>,
}

pub const TABLE_CSV_HEADER: &str = "i,p_i,T_i,E_i";

impl ChannelRow {
    pub fn csv(&self) -> String {
        let e = self.e_i.map_or_else(|| "inf".to_string(), |e| format!("{e:e}"));
        format!("{},{:e},{},{}", self.i, self.p_i, self.threshold, e)
    }
}

/// Random stream for run `run` of a batch seeded with `seed`.
pub fn run_rng(seed: u64, run: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(run);
    rng
}

/// One pass of `x` through the channel.
pub fn sample_output<R: Rng>(x: &Word, model: &ChannelModel, rng: &mut R) -> Word {
    let mut out = Vec::with_capacity(x.len() + x.len() / 2);
    for &s in x.symbols() {
        while model.p > 0.0 && rng.gen::<f64>() < model.p {
            out.push(rng.gen_range(0..model.q));
        }
        out.push(s);
    }
    Word::new(out)
}

/// Seeded convenience wrapper around [`sample_output`].
pub fn sample_output_seeded(x: &Word, model: &ChannelModel, seed: u64) -> Word {
    sample_output(x, model, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DuplicateMode {
    /// Every output counts, as if all outputs were distinct.
    AssumeDistinct,
    /// Repeated outputs of the same length are dropped and tallied.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Event {
    /// An output with fewer than `l` insertions was decoded directly.
    Decode { insertions: usize, decoded: Word },
    /// Outputs with `insertions` insertions reached the threshold.
    Reconstruct { insertions: usize, traces: Vec<Word> },
    /// The transmission cap was hit first.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub seed: u64,
    pub run: u64,
    pub transmissions: usize,
    /// Outputs counted toward each insertion count.
    pub counts: BTreeMap<usize, usize>,
    /// Outputs dropped as repeats (strict mode only).
    pub duplicates: usize,
    pub event: Event,
}

/// Transmits `x` until one output can be decoded or some output length has
/// collected its threshold number of traces.
pub fn simulate_until_resolvable(
    x: &Word,
    code: VtCode,
    model: &ChannelModel,
    seed: u64,
    run: u64,
    mode: DuplicateMode,
    max_transmissions: usize,
) -> Result<Transcript> {
    if !code.contains(x) {
        return Err(domain(format!("{x} is not a codeword of {code}")));
    }
    if model.n != code.n || model.q != 2 {
        return Err(domain("channel model must be binary with the code's length"));
    }
    if model.l > 2 {
        return Err(domain("a VT code has minimum distance 4, so l is at most 2"));
    }
    let mut rng = run_rng(seed, run);
    let mut outputs: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    let mut seen: BTreeMap<usize, BTreeSet<Word>> = BTreeMap::new();
    let mut thresholds: BTreeMap<usize, BigUint> = BTreeMap::new();
    let mut duplicates = 0;
    let mut event = Event::Exhausted;
    let mut transmissions = 0;

    while transmissions < max_transmissions {
        transmissions += 1;
        let y = sample_output(x, model, &mut rng);
        let i = y.len() - model.n;
        if i < model.l {
            let decoded = if i <= 1 { vt_decode(&y, code)? } else { y.clone() };
            outputs.entry(i).or_default().push(y);
            event = Event::Decode { insertions: i, decoded };
            break;
        }
        if mode == DuplicateMode::Strict && !seen.entry(i).or_default().insert(y.clone()) {
            duplicates += 1;
            continue;
        }
        let bucket = outputs.entry(i).or_default();
        bucket.push(y);
        let need = thresholds.entry(i).or_insert_with(|| model.threshold(i));
        if BigUint::from(bucket.len()) >= *need {
            event = Event::Reconstruct { insertions: i, traces: bucket.clone() };
            break;
        }
    }
    let counts = outputs.iter().map(|(&i, v)| (i, v.len())).collect();
    Ok(Transcript { seed, run, transmissions, counts, duplicates, event })
}

/// Bounds on the probability that a run ends in reconstruction rather than
/// decoding, treating outputs as distinct.
///
/// Reconstruction happens if some class `c >= l` collects `T_c` outputs
/// before any decodable output arrives; for one class that has probability
/// `(p_c / (p_c + d))^{T_c}` with `d = sum_{i<l} p_i`. The lower bound is
/// the class `l` term, the upper bound the union over classes.
pub fn reconstruction_race_bounds(model: &ChannelModel) -> (f64, f64) {
    let d: f64 = (0..model.l).map(|i| model.p_insertions(i)).sum();
    let term = |c: usize| {
        let pc = model.p_insertions(c);
        if pc == 0.0 {
            return 0.0;
        }
        let tc = ln_big(&model.threshold(c));
        (tc.exp() * (pc / (pc + d)).ln()).exp()
    };
    let lower = term(model.l);
    let mut upper = lower;
    let mut c = model.l + 1;
    loop {
        let v = term(c);
        upper += v;
        if (v < 1e-15 && model.p_insertions(c) < 1e-15) || c > model.l + 10_000 {
            break;
        }
        c += 1;
    }
    (lower, upper.min(1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChiSquareReport {
    pub samples: usize,
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub critical_value: f64,
    pub passed: bool,
}

/// Insertion counts of `samples` channel outputs, drawn in parallel chunks
/// with per-chunk streams of `seed`.
pub fn insertion_histogram(model: &ChannelModel, samples: usize, seed: u64) -> BTreeMap<usize, usize> {
    let x = Word::repeat(0, model.n);
    let chunk = 1000usize;
    (0..samples.div_ceil(chunk))
        .into_par_iter()
        .map(|r| {
            let mut rng = run_rng(seed, r as u64);
            let mut hist = BTreeMap::new();
            for _ in 0..chunk.min(samples - r * chunk) {
                *hist.entry(sample_output(&x, model, &mut rng).len() - model.n).or_insert(0usize) += 1;
            }
            hist
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// Goodness of fit of an insertion-count histogram against `p_i` at
/// significance `alpha`. Consecutive counts are pooled until each bin
/// expects at least 5 outputs; the last bin absorbs the tail.
pub fn chi_square_fit(model: &ChannelModel, observed: &BTreeMap<usize, usize>, alpha: f64) -> Result<ChiSquareReport> {
    let samples: usize = observed.values().sum();
    if samples == 0 {
        return Err(domain("need at least one sample"));
    }
    let total = samples as f64;
    let terms = model.normalization(TAIL_TOLERANCE).terms;
    // (first count in bin, expected outputs)
    let mut bins: Vec<(usize, f64)> = Vec::new();
    let mut open: Option<(usize, f64)> = None;
    for i in 0..terms {
        let (start, e) = open.take().unwrap_or((i, 0.0));
        let e = e + model.p_insertions(i) * total;
        if e >= 5.0 {
            bins.push((start, e));
        } else {
            open = Some((start, e));
        }
    }
    let covered: f64 = bins.iter().map(|b| b.1).sum::<f64>() + open.map_or(0.0, |o| o.1);
    let leftover = open.map_or(0.0, |o| o.1) + (total - covered).max(0.0);
    match bins.last_mut() {
        Some(last) => last.1 += leftover,
        None => return Err(domain("expected counts too small to bin")),
    }
    let df = bins.len() - 1;
    if df == 0 {
        return Err(domain("all mass falls in one bin; nothing to test"));
    }

    let mut statistic = 0.0;
    for (idx, &(start, e)) in bins.iter().enumerate() {
        let o: usize = match bins.get(idx + 1) {
            Some(&(next, _)) => observed.range(start..next).map(|(_, v)| v).sum(),
            None => observed.range(start..).map(|(_, v)| v).sum(),
        };
        statistic += (o as f64 - e).powi(2) / e;
    }
    let critical_value = ChiSquared::new(df as f64).map_err(|e| domain(e.to_string()))?.inverse_cdf(1.0 - alpha);
    Ok(ChiSquareReport {
        samples,
        statistic,
        degrees_of_freedom: df,
        critical_value,
        passed: statistic <= critical_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Budget;
    use crate::reconstruct::{reconstruct_exact, subsequence_contains, TracePool};
    use crate::vt::vt_enumerate;
    use proptest::prelude::*;

    fn example() -> ChannelModel {
        ChannelModel::new(0.3, 500, 2, 2).unwrap()
    }

    /// Negative binomial mass `C(n+i-1, i) p^i (1-p)^n`, evaluated exactly
    /// in rational arithmetic for a rational `p`.
    fn neg_binomial(n: u64, i: u64, p_num: u64, p_den: u64) -> f64 {
        let c = binomial(n + i - 1, i);
        let num = c
            * num_traits::pow(BigUint::from(p_num), i as usize)
            * num_traits::pow(BigUint::from(p_den - p_num), n as usize);
        let den = num_traits::pow(BigUint::from(p_den), (n + i) as usize);
        (ln_big(&num) - ln_big(&den)).exp()
    }

    #[test]
    fn model_validation() {
        assert!(ChannelModel::new(1.0, 5, 2, 1).is_err());
        assert!(ChannelModel::new(-0.1, 5, 2, 1).is_err());
        assert!(ChannelModel::new(0.5, 0, 2, 1).is_err());
        assert!(ChannelModel::new(0.5, 5, 1, 1).is_err());
        assert!(ChannelModel::new(0.5, 5, 2, 0).is_err());
    }

    #[test]
    fn insertion_probabilities_match_negative_binomial() {
        for (n, num, den) in [(1u64, 1u64, 2u64), (5, 3, 10), (20, 1, 10), (500, 3, 10)] {
            let m = ChannelModel::new(num as f64 / den as f64, n as usize, 2, 1).unwrap();
            for i in [0u64, 1, 2, 3, 10, 50, 200] {
                let want = neg_binomial(n, i, num, den);
                let got = m.p_insertions(i as usize);
                assert!((got - want).abs() <= 1e-9 * want.max(1e-300), "n={n} i={i}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn probability_examples() {
        let m = ChannelModel::new(0.0, 7, 2, 1).unwrap();
        assert_eq!(m.p_insertions(0), 1.0);
        assert_eq!(m.p_insertions(3), 0.0);
        let r = example().p_insertions(2) / example().p_insertions(1);
        assert!((r - 75.15).abs() < 1e-9, "{r}");
    }

    #[test]
    fn normalization_reaches_one() {
        for n in [1usize, 10, 100, 500, 1000] {
            for p in [0.0, 0.1, 0.3, 0.5, 0.9] {
                let norm = ChannelModel::new(p, n, 2, 1).unwrap().normalization(TAIL_TOLERANCE);
                assert!(norm.partial_sum >= 1.0 - 1e-9, "n={n} p={p}: {norm:?}");
                assert!(norm.partial_sum <= 1.0 + 1e-9);
            }
        }
    }

    #[test]
    fn thresholds() {
        let m = example();
        assert_eq!(m.threshold(0), BigUint::one());
        assert_eq!(m.threshold(1), BigUint::one());
        assert_eq!(m.threshold(2), BigUint::from(7u32));
        assert_eq!(m.threshold(3), BigUint::from(3009u32));
    }

    #[test]
    fn worked_example_ratios() {
        let m = example();
        assert!((m.expected_ratio(1, 2).unwrap() - 10.74).abs() <= 0.01);
        assert!((m.expected_ratio(0, 2).unwrap() / 1.61e3 - 1.0).abs() <= 0.01);
        assert!((m.expected_ratio(3, 2).unwrap() - 8.6).abs() <= 0.05);
        assert_eq!(m.optimal_output_length(10).unwrap().0, 2);
    }

    #[test]
    fn expected_transmissions_grow_after_three() {
        // E_i keeps increasing from i = 3 on at the worked example.
        let m = example();
        let e: Vec<f64> = (3..=40).map(|i| m.ln_expected_transmissions(i).unwrap()).collect();
        assert!(e.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn clean_channel() {
        let m = ChannelModel::new(0.0, 6, 2, 2).unwrap();
        assert_eq!(m.optimal_output_length(5).unwrap().0, 0);
        assert!(m.expected_transmissions(1).is_err());
        let tiny = ChannelModel::new(1e-6, 6, 2, 2).unwrap();
        assert_eq!(tiny.optimal_output_length(5).unwrap().0, 0);
        let x: Word = "011010".parse().unwrap();
        assert_eq!(sample_output_seeded(&x, &m, 5), x);
    }

    #[test]
    fn heuristic_predicts_reconstruction_preference() {
        // The rule of thumb drops the +1 in T_l, so it misfires just above
        // its boundary when l = 1. Those are the only misses on this grid.
        let mut misses = Vec::new();
        let mut hits = 0;
        for n in [20usize, 50, 100, 300, 500] {
            for l in 1..=3usize {
                for p in [0.01, 0.05, 0.1, 0.2, 0.3, 0.5] {
                    let m = ChannelModel::new(p, n, 2, l).unwrap();
                    if !m.reconstruction_heuristic() {
                        continue;
                    }
                    let el = m.ln_expected_transmissions(l).unwrap();
                    // Strict, with slack for exact ties such as E_1 = E_0 at np = 3.
                    if (0..l).all(|i| el < m.ln_expected_transmissions(i).unwrap() - 1e-9) {
                        hits += 1;
                    } else {
                        misses.push((n, l, p));
                    }
                }
            }
        }
        assert_eq!(misses, vec![(50, 1, 0.05), (300, 1, 0.01)]);
        assert_eq!(hits, 43);
    }

    #[test]
    fn table_rows() {
        let rows = example().table(3);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[2].threshold, BigUint::from(7u32));
        assert!(rows[3].csv().starts_with("3,"));
    }

    #[test]
    fn sampler_is_reproducible() {
        let m = ChannelModel::new(0.3, 20, 3, 1).unwrap();
        let x: Word = "01201201201201201201".parse().unwrap();
        assert_eq!(sample_output_seeded(&x, &m, 11), sample_output_seeded(&x, &m, 11));
        let a = sample_output(&x, &m, &mut run_rng(4, 0));
        let b = sample_output(&x, &m, &mut run_rng(4, 1));
        assert_ne!(a, b);
    }

    #[test]
    fn chi_square_small() {
        let m = ChannelModel::new(0.3, 20, 2, 1).unwrap();
        let hist = insertion_histogram(&m, 20_000, 1);
        assert_eq!(hist.values().sum::<usize>(), 20_000);
        let r = chi_square_fit(&m, &hist, 0.001).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.degrees_of_freedom >= 5);
        let wrong = ChannelModel::new(0.35, 20, 2, 1).unwrap();
        assert!(!chi_square_fit(&wrong, &hist, 0.001).unwrap().passed);
    }

    #[test]
    fn simulation_events() {
        let code = VtCode::new(8, 7).unwrap();
        let x: Word = "10011100".parse().unwrap();
        let clean = ChannelModel::new(0.0, 8, 2, 2).unwrap();
        let t = simulate_until_resolvable(&x, code, &clean, 1, 0, DuplicateMode::AssumeDistinct, 100).unwrap();
        assert_eq!(t.transmissions, 1);
        assert_eq!(t.event, Event::Decode { insertions: 0, decoded: x.clone() });

        let noisy = ChannelModel::new(0.3, 8, 2, 2).unwrap();
        let candidates = vt_enumerate(code, Budget::DEFAULT).unwrap();
        for run in 0..40 {
            let t = simulate_until_resolvable(&x, code, &noisy, 77, run, DuplicateMode::Strict, 10_000).unwrap();
            match t.event {
                Event::Decode { decoded, .. } => assert_eq!(decoded, x),
                Event::Reconstruct { traces, .. } => {
                    let pool = TracePool::new(8, traces).unwrap();
                    let r = reconstruct_exact(&pool, candidates.iter().cloned(), 2).unwrap();
                    assert_eq!(r.unique(), Some(&x));
                }
                Event::Exhausted => panic!("run {run} did not resolve"),
            }
        }
        assert!(simulate_until_resolvable(&"10011101".parse().unwrap(), code, &noisy, 0, 0, DuplicateMode::Strict, 5)
            .is_err());
    }

    #[test]
    fn race_bounds_are_ordered() {
        let m = ChannelModel::new(0.3, 30, 2, 2).unwrap();
        let (lo, hi) = reconstruction_race_bounds(&m);
        assert!(0.0 < lo && lo <= hi && hi <= 1.0, "{lo} {hi}");
    }

    proptest! {
        #[test]
        fn outputs_contain_the_source(seed in any::<u64>(), p in 0.0f64..0.9, q in 2u8..4) {
            let m = ChannelModel::new(p, 12, q, 1).unwrap();
            let x = Word::from_index(seed % 4096, 12, 2);
            let y = sample_output_seeded(&x, &m, seed);
            prop_assert!(y.len() >= 12);
            prop_assert!(subsequence_contains(&x, &y));
        }
    }
}
