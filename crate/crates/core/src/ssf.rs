//! Separating sets of factors for finite languages.
//!
//! A candidate set `X` separates a language `L` when all distinct `u, v ∈ L`
//! satisfy `|u|_x ≠ |v|_x` for some `x ∈ X`. Besides verification this
//! module constructs the one-word-removed trivial SSF, shrinks a given SSF
//! to an inclusion-minimal one, enumerates all inclusion-minimal SSFs inside
//! a universe, and finds a size-minimal SSF exactly by branch and bound over
//! the induced hitting-set instance (elements: unordered pairs of `L`; sets:
//! the candidates that distinguish a pair).

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use crate::error::Error;
use crate::kabelian;
use crate::word::{commute, Alphabet, Word};
use crate::Result;

/// Default cap on the candidate universe for exhaustive enumeration.
pub const DEFAULT_UNIVERSE_CAP: usize = 20;
/// Default caps for the size-minimal search instance.
pub const DEFAULT_WORD_CAP: usize = 40;
pub const DEFAULT_PAIR_CAP: usize = 5000;

/// A finite set of words over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLanguage {
    alphabet: Arc<Alphabet>,
    words: BTreeSet<Word>,
}

impl FiniteLanguage {
    pub fn new(alphabet: &Arc<Alphabet>, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for word in words {
            if word.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch);
            }
            set.insert(word);
        }
        Ok(FiniteLanguage {
            alphabet: Arc::clone(alphabet),
            words: set,
        })
    }

    pub fn parse(alphabet: &Arc<Alphabet>, texts: &[&str]) -> Result<Self> {
        let words: Result<Vec<Word>> = texts.iter().map(|t| Word::parse(alphabet, t)).collect();
        Self::new(alphabet, words?)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }
}

/// A candidate separating set of factors; may contain ε.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsfCandidate {
    alphabet: Arc<Alphabet>,
    factors: BTreeSet<Word>,
}

impl PartialOrd for SsfCandidate {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SsfCandidate {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.factors.cmp(&other.factors)
    }
}

impl SsfCandidate {
    pub fn new(alphabet: &Arc<Alphabet>, factors: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for factor in factors {
            if factor.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch);
            }
            set.insert(factor);
        }
        Ok(SsfCandidate {
            alphabet: Arc::clone(alphabet),
            factors: set,
        })
    }

    pub fn parse(alphabet: &Arc<Alphabet>, texts: &[&str]) -> Result<Self> {
        let factors: Result<Vec<Word>> = texts.iter().map(|t| Word::parse(alphabet, t)).collect();
        Self::new(alphabet, factors?)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn factors(&self) -> &BTreeSet<Word> {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.factors.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.factors.iter()
    }
}

/// The occurrence-count profile of one word against a fixed ordering of the
/// candidate set (sorted shortlex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProfileVector {
    pub word: Word,
    pub counts: Vec<usize>,
}

/// Builds the profile of `word` over the candidates of `x` in sorted order.
pub fn profile_vector(word: &Word, x: &SsfCandidate) -> ProfileVector {
    ProfileVector {
        word: word.clone(),
        counts: x.iter().map(|f| count_in(word, f)).collect(),
    }
}

/// `|host|_x` where `x` may come from a different alphabet; a factor with a
/// symbol foreign to the host's alphabet occurs zero times.
fn count_in(host: &Word, x: &Word) -> usize {
    if host.alphabet() == x.alphabet() {
        return host.count_occurrences(x).expect("alphabets equal");
    }
    if x.is_empty() {
        return host.len() + 1;
    }
    let translated: Option<Vec<u32>> = x.chars().map(|c| host.alphabet().index_of(c)).collect();
    let Some(t) = translated else { return 0 };
    if t.len() > host.len() {
        return 0;
    }
    (0..=host.len() - t.len())
        .filter(|&i| host.indices()[i..i + t.len()] == t[..])
        .count()
}

/// Whether `x` is an SSF of `l`.
pub fn is_ssf(x: &SsfCandidate, l: &FiniteLanguage) -> bool {
    ssf_counterexample(x, l).is_none()
}

/// `None` when `x` separates `l`; otherwise the smallest violating pair
/// (ordered by shortlex on the first, then the second member).
pub fn ssf_counterexample(x: &SsfCandidate, l: &FiniteLanguage) -> Option<(Word, Word)> {
    let mut buckets: HashMap<Vec<usize>, Vec<&Word>> = HashMap::new();
    for word in l.iter() {
        let counts: Vec<usize> = x.iter().map(|f| count_in(word, f)).collect();
        buckets.entry(counts).or_default().push(word);
    }
    buckets
        .into_values()
        .filter(|members| members.len() >= 2)
        .map(|members| (members[0].clone(), members[1].clone()))
        .min()
}

/// `L` minus one shortest word (lexicographically least among the shortest)
/// is always a proper subset of `L` that separates it.
pub fn trivial_ssf(l: &FiniteLanguage) -> Result<SsfCandidate> {
    let removed = l.iter().next().cloned().ok_or(Error::EmptyLanguage)?;
    SsfCandidate::new(l.alphabet(), l.iter().filter(|w| **w != removed).cloned())
}

/// Shrinks an SSF to an inclusion-minimal one by attempting removals in
/// (length descending, lex descending) order, so short factors are kept.
pub fn inclusion_minimalize(x: &SsfCandidate, l: &FiniteLanguage) -> Result<SsfCandidate> {
    if !is_ssf(x, l) {
        return Err(Error::NotSeparating);
    }
    let candidates: Vec<Word> = x.iter().cloned().collect();
    let words: Vec<&Word> = l.iter().collect();
    // counts[i][j] = |words[i]|_{candidates[j]}
    let counts: Vec<Vec<usize>> = words
        .iter()
        .map(|w| candidates.iter().map(|f| count_in(w, f)).collect())
        .collect();
    let mut kept: Vec<bool> = vec![true; candidates.len()];
    for j in (0..candidates.len()).rev() {
        kept[j] = false;
        let mut seen = HashSet::new();
        let separates = counts.iter().all(|row| {
            let projected: Vec<usize> = (0..candidates.len())
                .filter(|&c| kept[c])
                .map(|c| row[c])
                .collect();
            seen.insert(projected)
        });
        if !separates {
            kept[j] = true;
        }
    }
    SsfCandidate::new(
        l.alphabet(),
        candidates
            .into_iter()
            .enumerate()
            .filter(|(j, _)| kept[*j])
            .map(|(_, f)| f),
    )
}

/// `{ε}` together with every factor of every word of `l`. Any factor absent
/// from all of `l` has an all-zero profile and separates nothing, so this
/// universe is complete for minimality questions.
pub fn default_universe(l: &FiniteLanguage) -> SsfCandidate {
    let mut factors = BTreeSet::new();
    factors.insert(Word::empty(l.alphabet()));
    for word in l.iter() {
        factors.extend(word.factors_up_to(word.len()));
    }
    SsfCandidate {
        alphabet: Arc::clone(l.alphabet()),
        factors,
    }
}

/// The hitting-set view: one element per unordered pair of distinct words of
/// `l`, each hit by the candidate indices that distinguish the pair.
struct HittingInstance {
    candidates: Vec<Word>,
    /// For each pair, the candidate indices with differing counts.
    pair_hitters: Vec<Vec<u32>>,
    /// For each candidate, the pair indices it distinguishes.
    candidate_covers: Vec<Vec<u32>>,
}

impl HittingInstance {
    fn build(l: &FiniteLanguage, universe: &SsfCandidate) -> Result<Self> {
        let candidates: Vec<Word> = universe.iter().cloned().collect();
        let words: Vec<&Word> = l.iter().collect();
        let counts: Vec<Vec<usize>> = words
            .iter()
            .map(|w| candidates.iter().map(|f| count_in(w, f)).collect())
            .collect();
        let mut pair_hitters = Vec::new();
        let mut candidate_covers = vec![Vec::new(); candidates.len()];
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let hitters: Vec<u32> = (0..candidates.len())
                    .filter(|&c| counts[i][c] != counts[j][c])
                    .map(|c| c as u32)
                    .collect();
                if hitters.is_empty() {
                    return Err(Error::NotSeparating);
                }
                let pair_idx = pair_hitters.len() as u32;
                for &c in &hitters {
                    candidate_covers[c as usize].push(pair_idx);
                }
                pair_hitters.push(hitters);
            }
        }
        Ok(HittingInstance {
            candidates,
            pair_hitters,
            candidate_covers,
        })
    }

    fn pair_count(&self) -> usize {
        self.pair_hitters.len()
    }

    fn uncovered_after(&self, chosen: &[u32]) -> Vec<u32> {
        let mut covered = vec![false; self.pair_count()];
        for &c in chosen {
            for &p in &self.candidate_covers[c as usize] {
                covered[p as usize] = true;
            }
        }
        (0..self.pair_count() as u32)
            .filter(|&p| !covered[p as usize])
            .collect()
    }

    /// The uncovered pair with the fewest hitters.
    fn tightest_pair(&self, uncovered: &[u32]) -> u32 {
        *uncovered
            .iter()
            .min_by_key(|&&p| self.pair_hitters[p as usize].len())
            .expect("nonempty uncovered set")
    }
}

/// All inclusion-minimal SSFs of `l` contained in `universe`. Exhaustive;
/// `cap` bounds the universe size (default [`DEFAULT_UNIVERSE_CAP`]).
pub fn enumerate_inclusion_minimal(
    l: &FiniteLanguage,
    universe: &SsfCandidate,
    cap: usize,
) -> Result<Vec<SsfCandidate>> {
    if universe.len() > cap {
        return Err(Error::UniverseTooLarge {
            size: universe.len(),
            cap,
        });
    }
    let instance = HittingInstance::build(l, universe)?;
    let m = instance.candidates.len();

    // Hitting sets found by branching on an uncovered pair. The uncovered
    // pairs are a function of the chosen mask, so masks can be memoized.
    let mut hitting_sets: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut visited: HashSet<u64> = HashSet::new();
    let mut stack: Vec<u64> = vec![0];
    while let Some(mask) = stack.pop() {
        if !visited.insert(mask) {
            continue;
        }
        let chosen: Vec<u32> = (0..m as u32).filter(|c| mask >> c & 1 == 1).collect();
        let uncovered = instance.uncovered_after(&chosen);
        if uncovered.is_empty() {
            hitting_sets.insert(chosen);
            continue;
        }
        let pair = instance.tightest_pair(&uncovered);
        for &c in &instance.pair_hitters[pair as usize] {
            stack.push(mask | 1 << c);
        }
    }

    // keep only the inclusion-minimal sets
    let sets: Vec<Vec<u32>> = hitting_sets.into_iter().collect();
    let minimal: Vec<&Vec<u32>> = sets
        .iter()
        .filter(|s| {
            !sets
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|c| s.contains(c)))
        })
        .collect();

    let mut out: Vec<SsfCandidate> = minimal
        .into_iter()
        .map(|s| SsfCandidate {
            alphabet: Arc::clone(l.alphabet()),
            factors: s
                .iter()
                .map(|&c| instance.candidates[c as usize].clone())
                .collect(),
        })
        .collect();
    out.sort_by(|a, b| {
        let av: Vec<&Word> = a.iter().collect();
        let bv: Vec<&Word> = b.iter().collect();
        av.cmp(&bv)
    });
    Ok(out)
}

/// A size-minimal SSF of `l` among subsets of `universe`: exact minimum
/// hitting set by branch and bound, with a greedy upper bound and unit
/// propagation on pairs hit by a single candidate. Ties are broken by the
/// (length, lex) order of the sorted members.
pub fn size_minimal(
    l: &FiniteLanguage,
    universe: &SsfCandidate,
    word_cap: usize,
    pair_cap: usize,
) -> Result<SsfCandidate> {
    let pair_estimate = l.len().saturating_mul(l.len().saturating_sub(1)) / 2;
    if l.len() > word_cap || pair_estimate > pair_cap {
        return Err(Error::InstanceTooLarge {
            words: l.len(),
            pairs: pair_estimate,
            word_cap,
            pair_cap,
        });
    }
    let instance = HittingInstance::build(l, universe)?;
    let m = instance.candidates.len();

    // unit propagation: a pair with one hitter forces that candidate
    let mut forced: BTreeSet<u32> = BTreeSet::new();
    loop {
        let chosen: Vec<u32> = forced.iter().copied().collect();
        let uncovered = instance.uncovered_after(&chosen);
        let unit = uncovered
            .iter()
            .find(|&&p| instance.pair_hitters[p as usize].len() == 1);
        match unit {
            Some(&p) => {
                forced.insert(instance.pair_hitters[p as usize][0]);
            }
            None => break,
        }
    }
    let forced: Vec<u32> = forced.into_iter().collect();

    // greedy upper bound: repeatedly take the candidate covering the most
    // uncovered pairs
    let mut greedy = forced.clone();
    loop {
        let uncovered = instance.uncovered_after(&greedy);
        if uncovered.is_empty() {
            break;
        }
        let uncovered_set: HashSet<u32> = uncovered.iter().copied().collect();
        let best = (0..m as u32)
            .filter(|c| !greedy.contains(c))
            .max_by_key(|&c| {
                instance.candidate_covers[c as usize]
                    .iter()
                    .filter(|p| uncovered_set.contains(p))
                    .count()
            })
            .expect("some candidate covers an uncovered pair");
        greedy.push(best);
    }
    let mut best_size = greedy.len();

    // branch and bound for the exact minimum size
    fn bnb(instance: &HittingInstance, chosen: &mut Vec<u32>, best_size: &mut usize) {
        let uncovered = instance.uncovered_after(chosen);
        if uncovered.is_empty() {
            *best_size = (*best_size).min(chosen.len());
            return;
        }
        if chosen.len() + 1 > *best_size {
            return;
        }
        let pair = instance.tightest_pair(&uncovered);
        let hitters = instance.pair_hitters[pair as usize].clone();
        for c in hitters {
            if chosen.contains(&c) {
                continue;
            }
            chosen.push(c);
            bnb(instance, chosen, best_size);
            chosen.pop();
        }
    }
    let mut work = forced.clone();
    bnb(&instance, &mut work, &mut best_size);

    // second pass: the lexicographically least solution of the optimal size,
    // comparing sorted member sequences under shortlex
    fn completable(
        instance: &HittingInstance,
        chosen: &[u32],
        min_next: u32,
        budget: usize,
    ) -> bool {
        let uncovered = instance.uncovered_after(chosen);
        if uncovered.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let pair = instance.tightest_pair(&uncovered);
        instance.pair_hitters[pair as usize]
            .iter()
            .filter(|&&c| c >= min_next)
            .any(|&c| {
                let mut next = chosen.to_vec();
                next.push(c);
                completable(instance, &next, c + 1, budget - 1)
            })
    }
    let mut solution: Vec<u32> = Vec::new();
    let mut min_next = 0u32;
    while !instance.uncovered_after(&solution).is_empty() {
        let budget = best_size - solution.len();
        let c = (min_next..m as u32)
            .find(|&c| {
                let mut trial = solution.clone();
                trial.push(c);
                completable(&instance, &trial, c + 1, budget - 1)
            })
            .expect("an optimal solution exists");
        solution.push(c);
        min_next = c + 1;
    }

    SsfCandidate::new(
        l.alphabet(),
        solution
            .into_iter()
            .map(|c| instance.candidates[c as usize].clone()),
    )
}

/// Result of looking for a common primitive root of a finite language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommonRoot {
    /// `L ⊆ {ε}`: every word is a common root.
    Unconstrained,
    /// The primitive `p` with `L ⊆ p*`.
    Root(Word),
    /// No single word has all of `L` among its powers.
    None,
}

/// Finds the primitive `p` with `L ⊆ p*` when it exists. `L*` has a finite
/// SSF exactly when this does not return [`CommonRoot::None`].
pub fn common_root(l: &FiniteLanguage) -> CommonRoot {
    let Some(first) = l.iter().find(|w| !w.is_empty()) else {
        return CommonRoot::Unconstrained;
    };
    let p = first.primitive_root().expect("nonempty");
    let all_powers = l
        .iter()
        .all(|w| w.is_empty() || (w.len() % p.len() == 0 && p.pow(w.len() / p.len()) == *w));
    if all_powers {
        CommonRoot::Root(p)
    } else {
        CommonRoot::None
    }
}

/// `X ∪ F ∪ {ε}`: if `X` separates `L`, this separates `L ∪ F`.
pub fn union_with_finite_ssf(x: &SsfCandidate, f: &FiniteLanguage) -> SsfCandidate {
    let mut factors = x.factors.clone();
    factors.extend(f.iter().cloned());
    factors.insert(Word::empty(x.alphabet()));
    SsfCandidate {
        alphabet: Arc::clone(x.alphabet()),
        factors,
    }
}

/// The pair `(x wᵏ y w^{k−1} z, x w^{k−1} y wᵏ z)`: distinct, k-abelian
/// equivalent members of `x w* y w* z`. Requires `wy ≠ yw`.
pub fn half_main_pair(x: &Word, w: &Word, y: &Word, z: &Word, k: usize) -> Result<(Word, Word)> {
    assert!(k >= 1, "half_main_pair needs k >= 1");
    if commute(w, y) {
        return Err(Error::CommutingWitness {
            w: w.to_string(),
            y: y.to_string(),
        });
    }
    let first = x
        .concat(&w.pow(k))
        .concat(y)
        .concat(&w.pow(k - 1))
        .concat(z);
    let second = x
        .concat(&w.pow(k - 1))
        .concat(y)
        .concat(&w.pow(k))
        .concat(z);
    debug_assert!(first != second);
    debug_assert!(kabelian::equivalent(&first, &second, k));
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::all_words_up_to;

    fn ab() -> Arc<Alphabet> {
        Alphabet::new(['a', 'b']).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(&ab(), text).unwrap()
    }

    fn lang(texts: &[&str]) -> FiniteLanguage {
        FiniteLanguage::parse(&ab(), texts).unwrap()
    }

    fn cand(texts: &[&str]) -> SsfCandidate {
        SsfCandidate::parse(&ab(), texts).unwrap()
    }

    fn sigma_square() -> FiniteLanguage {
        lang(&["aa", "ab", "ba", "bb"])
    }

    #[test]
    fn verification_examples() {
        assert!(is_ssf(&cand(&["a", "ab"]), &sigma_square()));
        assert!(is_ssf(&cand(&[""]), &lang(&["", "a", "aa", "aaa"])));
        assert_eq!(
            ssf_counterexample(&cand(&["a"]), &lang(&["ab", "ba"])),
            Some((w("ab"), w("ba")))
        );
    }

    #[test]
    fn counterexample_is_smallest_pair() {
        // ε only separates lengths; among the collisions of Σ² the smallest
        // pair by (first, second) is (aa, ab)
        let l = sigma_square();
        let x = cand(&[""]);
        assert_eq!(ssf_counterexample(&x, &l), Some((w("aa"), w("ab"))));
    }

    #[test]
    fn trivial_removal() {
        let alpha = Alphabet::new(['a', 'b', 'c', 'd', 'e', 'f']).unwrap();
        let l = FiniteLanguage::parse(&alpha, &["ac", "ad", "be", "bf"]).unwrap();
        let x = trivial_ssf(&l).unwrap();
        let expect = SsfCandidate::parse(&alpha, &["ad", "be", "bf"]).unwrap();
        assert_eq!(x, expect);
        assert!(is_ssf(&x, &l));

        assert!(trivial_ssf(&lang(&[""])).unwrap().is_empty());
        assert_eq!(trivial_ssf(&lang(&["a", "aa"])).unwrap(), cand(&["aa"]));
        assert_eq!(
            trivial_ssf(&FiniteLanguage::new(&ab(), []).unwrap()).unwrap_err(),
            Error::EmptyLanguage
        );
    }

    #[test]
    fn minimalize_sigma_square() {
        let universe = SsfCandidate::new(&ab(), all_words_up_to(&ab(), 2)).unwrap();
        let minimal = inclusion_minimalize(&universe, &sigma_square()).unwrap();
        assert_eq!(minimal, cand(&["a", "ab"]));
    }

    #[test]
    fn minimalize_edge_cases() {
        let l = lang(&["", "a", "aa"]);
        assert_eq!(
            inclusion_minimalize(&cand(&["a"]), &l).unwrap(),
            cand(&["a"])
        );
        // removal order tries a before ε; removing a keeps an SSF ({ε}
        // separates by length), so the trace ends at {ε}
        assert_eq!(
            inclusion_minimalize(&cand(&["", "a"]), &l).unwrap(),
            cand(&[""])
        );
        assert_eq!(
            inclusion_minimalize(&cand(&["a"]), &lang(&["ab", "ba"])).unwrap_err(),
            Error::NotSeparating
        );
    }

    #[test]
    fn minimalize_output_is_minimal() {
        let l = sigma_square();
        let universe = default_universe(&l);
        let minimal = inclusion_minimalize(&universe, &l).unwrap();
        assert!(is_ssf(&minimal, &l));
        for leave_out in minimal.iter() {
            let smaller =
                SsfCandidate::new(&ab(), minimal.iter().filter(|f| *f != leave_out).cloned())
                    .unwrap();
            assert!(!is_ssf(&smaller, &l), "removable: {leave_out}");
        }
    }

    #[test]
    fn enumerate_sigma_square_eight_sets() {
        let l = sigma_square();
        let universe = default_universe(&l);
        let sets = enumerate_inclusion_minimal(&l, &universe, DEFAULT_UNIVERSE_CAP).unwrap();
        let expect: Vec<SsfCandidate> = [
            vec!["a", "ab"],
            vec!["a", "ba"],
            vec!["b", "ab"],
            vec!["b", "ba"],
            vec!["aa", "ab", "ba"],
            vec!["aa", "ab", "bb"],
            vec!["aa", "ba", "bb"],
            vec!["ab", "ba", "bb"],
        ]
        .iter()
        .map(|texts| cand(texts))
        .collect();
        let as_set: BTreeSet<&SsfCandidate> = sets.iter().collect();
        let expect_set: BTreeSet<&SsfCandidate> = expect.iter().collect();
        assert_eq!(as_set, expect_set);
        assert_eq!(sets.len(), 8);
    }

    #[test]
    fn enumerate_a_star_slice() {
        let l = lang(&["", "a", "aa", "aaa", "aaaa", "aaaaa"]);
        let universe = cand(&["", "a"]);
        let sets = enumerate_inclusion_minimal(&l, &universe, DEFAULT_UNIVERSE_CAP).unwrap();
        assert_eq!(sets, vec![cand(&[""]), cand(&["a"])]);
    }

    #[test]
    fn enumerate_singleton_language() {
        let l = lang(&["ab"]);
        let universe = default_universe(&l);
        let sets = enumerate_inclusion_minimal(&l, &universe, DEFAULT_UNIVERSE_CAP).unwrap();
        assert_eq!(sets, vec![SsfCandidate::new(&ab(), []).unwrap()]);
    }

    #[test]
    fn enumerate_rejects_oversized_universe() {
        let l = sigma_square();
        let universe = default_universe(&l);
        assert!(matches!(
            enumerate_inclusion_minimal(&l, &universe, 3),
            Err(Error::UniverseTooLarge { .. })
        ));
    }

    #[test]
    fn size_minimal_guessing_language() {
        let alpha = Alphabet::new(['a', 'b', 'c', 'd', 'e', 'f']).unwrap();
        let l = FiniteLanguage::parse(&alpha, &["ac", "ad", "be", "bf"]).unwrap();
        let universe = default_universe(&l);
        let best = size_minimal(&l, &universe, DEFAULT_WORD_CAP, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(best.len(), 3);
        assert!(is_ssf(&best, &l));
        // the (length, lex) tie-break lands on the canonical answer
        let expect = SsfCandidate::parse(&alpha, &["a", "c", "e"]).unwrap();
        assert_eq!(best, expect);
    }

    #[test]
    fn size_minimal_sigma_square() {
        let l = sigma_square();
        let universe = default_universe(&l);
        let best = size_minimal(&l, &universe, DEFAULT_WORD_CAP, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(best.len(), 2);
        assert!(is_ssf(&best, &l));
    }

    #[test]
    fn size_minimal_singleton() {
        let l = lang(&["ab"]);
        let universe = default_universe(&l);
        let best = size_minimal(&l, &universe, DEFAULT_WORD_CAP, DEFAULT_PAIR_CAP).unwrap();
        assert!(best.is_empty());
    }

    #[test]
    fn size_minimal_respects_caps() {
        let l = sigma_square();
        let universe = default_universe(&l);
        assert!(matches!(
            size_minimal(&l, &universe, 2, DEFAULT_PAIR_CAP),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn default_universe_examples() {
        assert_eq!(default_universe(&lang(&["ab"])), cand(&["", "a", "b", "ab"]));
        assert_eq!(
            default_universe(&FiniteLanguage::new(&ab(), []).unwrap()),
            cand(&[""])
        );
        assert_eq!(
            default_universe(&lang(&["aa", "b"])),
            cand(&["", "a", "b", "aa"])
        );
    }

    #[test]
    fn common_roots() {
        assert_eq!(
            common_root(&lang(&["ab", "abab"])),
            CommonRoot::Root(w("ab"))
        );
        assert_eq!(common_root(&lang(&["ab", "ba"])), CommonRoot::None);
        assert_eq!(common_root(&lang(&[""])), CommonRoot::Unconstrained);
        assert_eq!(
            common_root(&FiniteLanguage::new(&ab(), []).unwrap()),
            CommonRoot::Unconstrained
        );
        // ε mixed in is harmless
        assert_eq!(
            common_root(&lang(&["", "aa", "aaa"])),
            CommonRoot::Root(w("a"))
        );
    }

    #[test]
    fn union_examples() {
        assert_eq!(
            union_with_finite_ssf(&cand(&["a"]), &lang(&["bb"])),
            cand(&["a", "bb", ""])
        );
        assert_eq!(
            union_with_finite_ssf(
                &SsfCandidate::new(&ab(), []).unwrap(),
                &FiniteLanguage::new(&ab(), []).unwrap()
            ),
            cand(&[""])
        );
        assert_eq!(
            union_with_finite_ssf(&cand(&[""]), &lang(&["ab"])),
            cand(&["", "ab"])
        );
    }

    #[test]
    fn half_main_pair_examples() {
        let (u, v) = half_main_pair(&w(""), &w("a"), &w("b"), &w(""), 1).unwrap();
        assert_eq!((u.clone(), v.clone()), (w("ab"), w("ba")));
        assert!(kabelian::equivalent(&u, &v, 1));

        let (u, v) = half_main_pair(&w(""), &w("a"), &w("b"), &w(""), 2).unwrap();
        assert_eq!((u.clone(), v.clone()), (w("aaba"), w("abaa")));
        assert!(kabelian::equivalent(&u, &v, 2));

        assert!(matches!(
            half_main_pair(&w(""), &w("a"), &w("aa"), &w(""), 2),
            Err(Error::CommutingWitness { .. })
        ));
    }

    #[test]
    fn profile_vector_shape() {
        let x = cand(&["a", "ab"]);
        let p = profile_vector(&w("aabab"), &x);
        assert_eq!(p.counts, vec![3, 2]);
        assert_eq!(p.counts.len(), x.len());
    }

    #[test]
    fn foreign_factor_counts_zero() {
        let other = Alphabet::new(['c']).unwrap();
        let x = SsfCandidate::new(&other, [Word::parse(&other, "c").unwrap()]).unwrap();
        let p = profile_vector(&w("aabab"), &x);
        assert_eq!(p.counts, vec![0]);
    }
}
