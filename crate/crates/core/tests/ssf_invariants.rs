//! SSF invariants: monotonicity in both arguments, the bridge between
//! `Σ^{≤k}` separation and k-abelian partitions, the `x w* y w* z` pair
//! family, and exhaustive cross-checks of the minimality searches.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ssf_core::kabelian::{equivalent, partition};
use ssf_core::ssf::{
    default_universe, enumerate_inclusion_minimal, half_main_pair, is_ssf, size_minimal,
    FiniteLanguage, SsfCandidate, DEFAULT_PAIR_CAP, DEFAULT_UNIVERSE_CAP, DEFAULT_WORD_CAP,
};
use ssf_core::word::{all_words_up_to, commute, Alphabet, Word};

fn ab() -> Arc<Alphabet> {
    Alphabet::new(['a', 'b']).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &Arc<Alphabet>, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    let symbols: String = (0..len)
        .map(|_| alphabet.symbols()[rng.random_range(0..alphabet.len())])
        .collect();
    Word::parse(alphabet, &symbols).unwrap()
}

fn random_language(rng: &mut ChaCha8Rng, max_words: usize, max_len: usize) -> FiniteLanguage {
    let alphabet = ab();
    let count = rng.random_range(1..=max_words);
    let words: Vec<Word> = (0..count)
        .map(|_| random_word(rng, &alphabet, max_len))
        .collect();
    FiniteLanguage::new(&alphabet, words).unwrap()
}

fn subset_candidate(
    rng: &mut ChaCha8Rng,
    base: &SsfCandidate,
    keep_probability: f64,
) -> SsfCandidate {
    SsfCandidate::new(
        base.alphabet(),
        base.iter()
            .filter(|_| rng.random_bool(keep_probability))
            .cloned(),
    )
    .unwrap()
}

#[test]
fn separation_is_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let alphabet = ab();
    for _ in 0..200 {
        let l = random_language(&mut rng, 8, 6);
        let x = default_universe(&l);
        assert!(is_ssf(&x, &l), "the full universe always separates");

        // shrinking the language preserves separation
        let sub = FiniteLanguage::new(
            &alphabet,
            l.iter().filter(|_| rng.random_bool(0.5)).cloned(),
        )
        .unwrap();
        assert!(is_ssf(&x, &sub));

        // growing the candidate set preserves separation
        let mut extended: BTreeSet<Word> = x.iter().cloned().collect();
        extended.insert(random_word(&mut rng, &alphabet, 8));
        let y = SsfCandidate::new(&alphabet, extended).unwrap();
        assert!(is_ssf(&y, &l));

        // and the same holds from any separating subset of the universe
        let candidate = subset_candidate(&mut rng, &x, 0.7);
        if is_ssf(&candidate, &l) {
            assert!(is_ssf(&candidate, &sub));
        }
    }
}

#[test]
fn sigma_up_to_k_separates_iff_classes_are_singletons() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let alphabet = ab();
    for _ in 0..150 {
        let l = random_language(&mut rng, 8, 7);
        let words: Vec<Word> = l.iter().cloned().collect();
        for k in 1..=4usize {
            let sigma =
                SsfCandidate::new(&alphabet, all_words_up_to(&alphabet, k)).unwrap();
            let separated = is_ssf(&sigma, &l);
            let singletons = partition(&words, k).iter().all(|class| class.len() == 1);
            assert_eq!(separated, singletons, "k={k} L={words:?}");
        }
    }
}

#[test]
fn pair_family_lands_inside_the_pattern() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let alphabet = ab();
    let mut produced = 0;
    while produced < 200 {
        let x = random_word(&mut rng, &alphabet, 4);
        let w = random_word(&mut rng, &alphabet, 4);
        let y = random_word(&mut rng, &alphabet, 4);
        let z = random_word(&mut rng, &alphabet, 4);
        if commute(&w, &y) {
            continue;
        }
        produced += 1;
        for k in 1..=5usize {
            let (first, second) = half_main_pair(&x, &w, &y, &z, k).unwrap();
            assert_ne!(first, second);
            assert!(equivalent(&first, &second, k), "k={k} x={x} w={w} y={y} z={z}");
            // both words match x w^i y w^j z for explicit exponents
            let rebuild = |i: usize, j: usize| {
                x.concat(&w.pow(i)).concat(&y).concat(&w.pow(j)).concat(&z)
            };
            assert_eq!(first, rebuild(k, k - 1));
            assert_eq!(second, rebuild(k - 1, k));
        }
    }
}

#[test]
fn left_concatenation_preserves_equivalence() {
    // u ≡_k v with u, v ∈ L gives wu ≡_k wv in wL
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    let alphabet = ab();
    for _ in 0..300 {
        let k = rng.random_range(1..=4usize);
        let seed_w = random_word(&mut rng, &alphabet, 3);
        let seed_y = random_word(&mut rng, &alphabet, 3);
        if commute(&seed_w, &seed_y) {
            continue;
        }
        let (u, v) = half_main_pair(
            &Word::empty(&alphabet),
            &seed_w,
            &seed_y,
            &Word::empty(&alphabet),
            k,
        )
        .unwrap();
        let prefix = random_word(&mut rng, &alphabet, 5);
        assert!(equivalent(&prefix.concat(&u), &prefix.concat(&v), k));
    }
}

/// Brute force: all subsets of the universe, filtered to separating sets.
fn all_separating_masks(l: &FiniteLanguage, universe: &[Word]) -> Vec<u32> {
    let alphabet = l.alphabet();
    (0u32..1 << universe.len())
        .filter(|mask| {
            let x = SsfCandidate::new(
                alphabet,
                universe
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, w)| w.clone()),
            )
            .unwrap();
            is_ssf(&x, l)
        })
        .collect()
}

#[test]
fn size_minimal_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..40 {
        let l = random_language(&mut rng, 6, 4);
        let full = default_universe(&l);
        if full.len() > 12 {
            continue;
        }
        let universe: Vec<Word> = full.iter().cloned().collect();
        let best_mask_size = all_separating_masks(&l, &universe)
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .expect("full universe separates");
        let found = size_minimal(&l, &full, DEFAULT_WORD_CAP, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(found.len(), best_mask_size, "L={:?}", l.words());
        assert!(is_ssf(&found, &l));
    }
}

#[test]
fn enumeration_yields_exactly_the_minimal_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    for _ in 0..30 {
        let l = random_language(&mut rng, 5, 3);
        let full = default_universe(&l);
        if full.len() > 12 {
            continue;
        }
        let universe: Vec<Word> = full.iter().cloned().collect();
        let separating = all_separating_masks(&l, &universe);
        let minimal_masks: BTreeSet<u32> = separating
            .iter()
            .copied()
            .filter(|&m| {
                !separating
                    .iter()
                    .any(|&other| other != m && other & m == other)
            })
            .collect();

        let enumerated =
            enumerate_inclusion_minimal(&l, &full, DEFAULT_UNIVERSE_CAP).unwrap();
        let enumerated_masks: BTreeSet<u32> = enumerated
            .iter()
            .map(|set| {
                universe
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| set.contains(w))
                    .map(|(i, _)| 1u32 << i)
                    .sum()
            })
            .collect();
        assert_eq!(enumerated_masks, minimal_masks, "L={:?}", l.words());

        // every returned set separates and loses that on any removal
        for set in &enumerated {
            assert!(is_ssf(set, &l));
            for leave_out in set.iter() {
                let smaller = SsfCandidate::new(
                    set.alphabet(),
                    set.iter().filter(|f| *f != leave_out).cloned(),
                )
                .unwrap();
                assert!(!is_ssf(&smaller, &l));
            }
        }
    }
}
