//! k-abelian equivalence invariants: the splitting identity, congruence,
//! prefix/suffix cancellation, refinement across k, and agreement with the
//! definitional count-comparison oracle.

use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ssf_core::kabelian::equivalent;
use ssf_core::ssf::half_main_pair;
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

fn random_nonempty(rng: &mut ChaCha8Rng, alphabet: &Arc<Alphabet>, max_len: usize) -> Word {
    loop {
        let w = random_word(rng, alphabet, max_len);
        if !w.is_empty() {
            return w;
        }
    }
}

fn random_word_exact(rng: &mut ChaCha8Rng, alphabet: &Arc<Alphabet>, len: usize) -> Word {
    let symbols: String = (0..len)
        .map(|_| alphabet.symbols()[rng.random_range(0..alphabet.len())])
        .collect();
    Word::parse(alphabet, &symbols).unwrap()
}

/// A random k-abelian equivalent pair built from a noncommuting quadruple.
fn random_equivalent_pair(rng: &mut ChaCha8Rng, k: usize) -> (Word, Word) {
    let alphabet = ab();
    loop {
        let x = random_word(rng, &alphabet, 3);
        let w = random_nonempty(rng, &alphabet, 3);
        let y = random_nonempty(rng, &alphabet, 3);
        let z = random_word(rng, &alphabet, 3);
        if commute(&w, &y) {
            continue;
        }
        return half_main_pair(&x, &w, &y, &z, k).unwrap();
    }
}

/// Definitional oracle: equal counts for every factor of length at most k.
fn equivalent_oracle(u: &Word, v: &Word, k: usize) -> bool {
    all_words_up_to(u.alphabet(), k)
        .iter()
        .all(|x| u.count_occurrences(x).unwrap() == v.count_occurrences(x).unwrap())
}

#[test]
fn splitting_identity_random() {
    // |uvw|_x = |uv|_x + |vw|_x whenever |v| = k - 1 and |x| = k
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..300 {
        let k = rng.random_range(1..=4usize);
        let u = random_word(&mut rng, &alphabet, 8);
        let v = random_word_exact(&mut rng, &alphabet, k - 1);
        let w = random_word(&mut rng, &alphabet, 8);
        let uv = u.concat(&v);
        let vw = v.concat(&w);
        let uvw = u.concat(&v).concat(&w);
        for x in all_words_up_to(&alphabet, k)
            .iter()
            .filter(|x| x.len() == k)
        {
            assert_eq!(
                uvw.count_occurrences(x).unwrap(),
                uv.count_occurrences(x).unwrap() + vw.count_occurrences(x).unwrap(),
                "u={u} v={v} w={w} x={x}"
            );
        }
    }
}

#[test]
fn congruence_on_generated_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..1000 {
        let k = rng.random_range(1..=4usize);
        let (u, u2) = random_equivalent_pair(&mut rng, k);
        let (v, v2) = random_equivalent_pair(&mut rng, k);
        assert!(equivalent(&u, &u2, k));
        assert!(equivalent(&v, &v2, k));
        assert!(
            equivalent(&u.concat(&v), &u2.concat(&v2), k),
            "k={k} u={u} u'={u2} v={v} v'={v2}"
        );
    }
}

#[test]
fn prefix_and_suffix_cancellation() {
    // wu ≡_{k+|w|} wv implies u ≡_k v; built from (k + m)-equivalent pairs
    // sharing their length-(k + m - 1) prefix
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..400 {
        let k = rng.random_range(1..=3usize);
        let m = rng.random_range(0..=3usize);
        let (full_u, full_v) = random_equivalent_pair(&mut rng, k + m);
        if full_u.len() < m || full_v.len() < m {
            continue;
        }
        // the pair shares its prefix of length k + m - 1 >= m
        assert_eq!(full_u.prefix(m), full_v.prefix(m));
        let u = full_u.suffix(full_u.len() - m);
        let v = full_v.suffix(full_v.len() - m);
        assert!(equivalent(&u, &v, k), "k={k} m={m} u={u} v={v}");

        // dually for suffixes
        assert_eq!(full_u.suffix(m), full_v.suffix(m));
        let u = full_u.prefix(full_u.len() - m);
        let v = full_v.prefix(full_v.len() - m);
        assert!(equivalent(&u, &v, k), "suffix case k={k} m={m}");
    }
}

#[test]
fn matches_definitional_oracle_random() {
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..1000 {
        let k = rng.random_range(1..=4usize);
        let u = random_word(&mut rng, &alphabet, 10);
        let v = random_word(&mut rng, &alphabet, 10);
        assert_eq!(
            equivalent(&u, &v, k),
            equivalent_oracle(&u, &v, k),
            "k={k} u={u} v={v}"
        );
    }
}

#[test]
fn higher_k_refines_lower_k() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..500 {
        let k = rng.random_range(1..=4usize);
        let (u, v) = random_equivalent_pair(&mut rng, k + 1);
        assert!(equivalent(&u, &v, k + 1));
        assert!(equivalent(&u, &v, k), "k={k} u={u} v={v}");
    }
}

proptest! {
    #[test]
    fn equivalence_is_reflexive_and_symmetric(u in "[ab]{0,12}", v in "[ab]{0,12}", k in 1usize..=4) {
        let alphabet = ab();
        let u = Word::parse(&alphabet, &u).unwrap();
        let v = Word::parse(&alphabet, &v).unwrap();
        prop_assert!(equivalent(&u, &u, k));
        prop_assert_eq!(equivalent(&u, &v, k), equivalent(&v, &u, k));
    }
}
