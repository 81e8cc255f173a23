use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trace_recon::formulas::{head_mismatch_recursion, length_recursion, n_plus_formula};
use trace_recon::oracle::oracle_common_supersequences;
use trace_recon::reconstruct::{subsequence_contains, TracePool};
use trace_recon::vt::{random_codeword, vt_decode};
use trace_recon::{edit_distance, insertion_ball, n_plus, n_plus_equal, reconstruct_exact, FormulaParams, VtCode, Word};

fn word(max_len: usize, q: u8) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..q, 0..=max_len).prop_map(Word::new)
}

fn fixed_word(len: usize, q: u8) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..q, len).prop_map(Word::new)
}

/// `(n, t, k, l)` with `t >= k >= l`.
fn params(max_n: u64, max_t: u64) -> impl Strategy<Value = (u64, u64, u64, u64)> {
    (1..=max_n, 0..=max_t)
        .prop_flat_map(|(n, t)| (Just(n), Just(t), 0..=t))
        .prop_flat_map(|(n, t, k)| (Just(n), Just(t), Just(k), 0..=k.min(n)))
}

proptest! {
    #[test]
    fn n_plus_non_increasing_in_distance((n, t, k, l) in params(60, 20), q in 2u32..5) {
        prop_assume!(l < k && l < n);
        let here = n_plus(&FormulaParams::new(n, t, k, l, q).unwrap()).unwrap();
        let next = n_plus(&FormulaParams::new(n, t, k, l + 1, q).unwrap()).unwrap();
        prop_assert!(next <= here, "{next} > {here}");
    }

    #[test]
    fn recursions_hold_beyond_the_grid((n, t, k, l) in params(60, 14), q in 2i64..6) {
        prop_assume!(n >= 2 && l >= 1);
        let (n, t, k, l) = (n as i64, t as i64, k as i64, l as i64);
        let (a, b) = length_recursion(n, t, k, l, q);
        prop_assert_eq!(a, b);
        let (a, b) = head_mismatch_recursion(n, t, k, l, q);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn formula_is_a_nonnegative_integer((n, t, k, l) in params(200, 40), q in 2i64..8) {
        let v = n_plus_formula(n as i64, t as i64, k as i64, l as i64, q);
        prop_assert!(v >= BigInt::from(0));
    }

    #[test]
    fn extremal_pair_attains_the_formula((n, t, k, l) in params(6, 3), q in 2u8..4) {
        prop_assume!(n + t - k <= 7);
        let x = Word::repeat(0, (n + t - k) as usize);
        let y = Word::new([vec![1; l as usize], vec![0; (n - l) as usize]].concat());
        let shared = oracle_common_supersequences(&x, &y, k as usize, t as usize, q).unwrap();
        prop_assert_eq!(shared, n_plus(&FormulaParams::new(n, t, k, l, u32::from(q)).unwrap()).unwrap());
    }

    #[test]
    fn no_pair_beats_the_bound(x in fixed_word(6, 2), y in fixed_word(6, 2), t in 1usize..=3) {
        prop_assume!(x != y);
        let l = (edit_distance(&x, &y) / 2) as u64;
        let shared = insertion_ball(&x, t, 2).intersection(&insertion_ball(&y, t, 2)).count();
        let bound = n_plus_equal(6, t as u64, l.min(t as u64), 2).unwrap();
        prop_assert!(BigUint::from(shared) <= bound);
    }

    #[test]
    fn containment_is_subsequence_order(x in word(6, 3), y in word(8, 3)) {
        let lcs = (x.len() + y.len() - edit_distance(&x, &y)) / 2;
        prop_assert_eq!(subsequence_contains(&x, &y), lcs == x.len());
    }

    #[test]
    fn vt_decoder_corrects_one_edit(n in 7usize..80, a_frac in 0.0f64..1.0, seed in any::<u64>(), pos_frac in 0.0f64..1.0, kind in 0u8..3) {
        let a = ((n + 1) as f64 * a_frac) as usize % (n + 1);
        let code = VtCode::new(n, a).unwrap();
        let x = random_codeword(code, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(code.contains(&x));
        let mut v = x.symbols().to_vec();
        match kind {
            0 => { v.remove(((n as f64) * pos_frac) as usize % n); }
            s => v.insert(((n + 1) as f64 * pos_frac) as usize % (n + 1), s - 1),
        }
        prop_assert_eq!(vt_decode(&Word::new(v), code).unwrap(), x);
    }

    #[test]
    fn single_trace_pool_keeps_its_sources(x in fixed_word(5, 2), extra in word(3, 2), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let trace = trace_recon::reconstruct::random_supersequence(&x, extra.len(), 2, &mut rng);
        let pool = TracePool::new(5, [trace.clone()]).unwrap();
        let all: Vec<Word> = trace_recon::word::all_words(5, 2).collect();
        let r = reconstruct_exact(&pool, all, 2).unwrap();
        match r {
            trace_recon::Reconstruction::Unique(w) => prop_assert_eq!(w, x),
            trace_recon::Reconstruction::Ambiguous(rep) => {
                prop_assert!(rep.consistent.contains(&x));
                prop_assert!(rep.consistent.iter().all(|c| subsequence_contains(c, &trace)));
            }
        }
    }
}
