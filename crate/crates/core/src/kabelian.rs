//! k-abelian equivalence: signatures, partitions, and growth functions.
//!
//! Two words are k-abelian equivalent when every factor of length at most k
//! occurs equally often in both. For words of length at least k − 1 this is
//! the same as sharing the prefix of length k − 1 and having equal counts
//! for every factor of length exactly k, which is what [`KSignature`]
//! canonicalizes.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::word::Word;

/// Canonical invariant of a k-abelian equivalence class: two words are
/// k-abelian equivalent iff their signatures are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KSignature {
    k: usize,
    form: SignatureForm,
}

/// Words shorter than k − 1 are only equivalent to themselves, so they are
/// their own signature. Longer words are captured by the prefix of length
/// k − 1 plus the counts of all length-k factors (only nonzero counts are
/// stored; the total length pins the count mass).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignatureForm {
    ShortWord(Word),
    Long {
        prefix: Word,
        counts: BTreeMap<Word, usize>,
        total_length: usize,
    },
}

impl KSignature {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn form(&self) -> &SignatureForm {
        &self.form
    }
}

/// The k-abelian signature of `w`.
pub fn signature(w: &Word, k: usize) -> KSignature {
    assert!(k >= 1, "k-abelian equivalence needs k >= 1");
    if w.len() + 1 < k {
        return KSignature {
            k,
            form: SignatureForm::ShortWord(w.clone()),
        };
    }
    let mut counts: BTreeMap<Word, usize> = BTreeMap::new();
    if w.len() >= k {
        for start in 0..=w.len() - k {
            *counts.entry(w.factor(start, start + k)).or_insert(0) += 1;
        }
    }
    KSignature {
        k,
        form: SignatureForm::Long {
            prefix: w.prefix(k - 1),
            counts,
            total_length: w.len(),
        },
    }
}

/// Whether `u` and `v` are k-abelian equivalent.
pub fn equivalent(u: &Word, v: &Word, k: usize) -> bool {
    signature(u, k) == signature(v, k)
}

/// Groups `words` into k-abelian equivalence classes. Classes and their
/// members are ordered by shortlex on the smallest member, so the output is
/// reproducible.
pub fn partition(words: &[Word], k: usize) -> Vec<Vec<Word>> {
    let mut buckets: HashMap<KSignature, BTreeSet<Word>> = HashMap::new();
    for word in words {
        buckets
            .entry(signature(word, k))
            .or_default()
            .insert(word.clone());
    }
    let mut classes: Vec<Vec<Word>> = buckets
        .into_values()
        .map(|set| set.into_iter().collect())
        .collect();
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    classes
}

/// `|L ∩ Σⁿ|`: the number of words of length `n` in `L`.
pub fn growth(language: &BTreeSet<Word>, n: usize) -> usize {
    language.iter().filter(|w| w.len() == n).count()
}

/// The number of k-abelian equivalence classes of `L ∩ Σⁿ`.
pub fn kgrowth(language: &BTreeSet<Word>, k: usize, n: usize) -> usize {
    let mut sigs = std::collections::HashSet::new();
    for word in language.iter().filter(|w| w.len() == n) {
        sigs.insert(signature(word, k));
    }
    sigs.len()
}

/// Growth table mapping each length to a count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GrowthTable {
    pub entries: BTreeMap<usize, usize>,
}

impl GrowthTable {
    /// Tabulates `growth` for n in `0..=max_n`.
    pub fn of_language(language: &BTreeSet<Word>, max_n: usize) -> Self {
        let entries = (0..=max_n).map(|n| (n, growth(language, n))).collect();
        GrowthTable { entries }
    }

    /// Tabulates `kgrowth` for n in `0..=max_n`.
    pub fn of_language_kabelian(language: &BTreeSet<Word>, k: usize, max_n: usize) -> Self {
        let entries = (0..=max_n)
            .map(|n| (n, kgrowth(language, k, n)))
            .collect();
        GrowthTable { entries }
    }
}
