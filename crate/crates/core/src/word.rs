//! Exact word combinatorics: alphabets, words, occurrences, primitive and
//! Lyndon roots, Fine–Wilf thresholds, and maximal power runs.
//!
//! Words are finite sequences over an explicitly ordered alphabet. The
//! alphabet order drives every lexicographic comparison; `Word`'s `Ord` is
//! length-then-lex ("shortlex"), which is the tie-breaking order used across
//! the crate.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::Result;

/// A finite ordered alphabet. The construction order of the symbols is the
/// total order used by all lexicographic operations.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<char>,
    index: HashMap<char, u32>,
}

impl Alphabet {
    /// Builds an alphabet from symbols in the given order.
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Arc<Self>> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, &c) in symbols.iter().enumerate() {
            if index.insert(c, i as u32).is_some() {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        Ok(Arc::new(Alphabet { symbols, index }))
    }

    /// Alphabet consisting of the distinct characters of `text` in sorted
    /// order. This is the default for word literals.
    pub fn sorted_from_text(text: &str) -> Result<Arc<Self>> {
        let set: BTreeSet<char> = text.chars().collect();
        Self::new(set)
    }

    /// Alphabet consisting of the distinct characters of the given texts in
    /// first-seen order. This is the default for corpora.
    pub fn discovery_order<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<Arc<Self>> {
        let mut seen = BTreeSet::new();
        let mut symbols = Vec::new();
        for t in texts {
            for c in t.chars() {
                if seen.insert(c) {
                    symbols.push(c);
                }
            }
        }
        Self::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one symbol
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, c: char) -> Option<u32> {
        self.index.get(&c).copied()
    }

    pub fn symbol(&self, i: u32) -> char {
        self.symbols[i as usize]
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A finite word over an [`Alphabet`]. Internally a vector of symbol
/// indices, so comparisons follow the alphabet order directly.
#[derive(Debug, Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    symbols: Vec<u32>,
}

impl Word {
    /// The empty word ε.
    pub fn empty(alphabet: &Arc<Alphabet>) -> Self {
        Word {
            alphabet: Arc::clone(alphabet),
            symbols: Vec::new(),
        }
    }

    /// Parses `text` as a word over `alphabet`.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.chars().count());
        for c in text.chars() {
            match alphabet.index_of(c) {
                Some(i) => symbols.push(i),
                None => return Err(Error::UnknownSymbol(c)),
            }
        }
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            symbols,
        })
    }

    pub(crate) fn from_indices(alphabet: &Arc<Alphabet>, symbols: Vec<u32>) -> Self {
        debug_assert!(symbols.iter().all(|&i| (i as usize) < alphabet.len()));
        Word {
            alphabet: Arc::clone(alphabet),
            symbols,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol indices into the alphabet.
    pub fn indices(&self) -> &[u32] {
        &self.symbols
    }

    pub fn chars(&self) -> impl Iterator<Item = char> + '_ {
        self.symbols.iter().map(|&i| self.alphabet.symbol(i))
    }

    /// The factor `self[start..end]`.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word {
            alphabet: Arc::clone(&self.alphabet),
            symbols: self.symbols[start..end].to_vec(),
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.factor(0, n.min(self.len()))
    }

    pub fn suffix(&self, n: usize) -> Word {
        self.factor(self.len() - n.min(self.len()), self.len())
    }

    /// Concatenation. Panics if the alphabets differ; callers that accept
    /// foreign input must check alphabets first.
    pub fn concat(&self, other: &Word) -> Word {
        assert!(
            same_alphabet(&self.alphabet, &other.alphabet),
            "concat over different alphabets"
        );
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word {
            alphabet: Arc::clone(&self.alphabet),
            symbols,
        }
    }

    /// The power `self^n` (with `w^0 = ε`).
    pub fn pow(&self, n: usize) -> Word {
        let mut symbols = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            symbols.extend_from_slice(&self.symbols);
        }
        Word {
            alphabet: Arc::clone(&self.alphabet),
            symbols,
        }
    }

    /// The conjugate obtained by rotating `i` positions to the left.
    pub fn rotate_left(&self, i: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let i = i % self.len();
        let mut symbols = Vec::with_capacity(self.len());
        symbols.extend_from_slice(&self.symbols[i..]);
        symbols.extend_from_slice(&self.symbols[..i]);
        Word {
            alphabet: Arc::clone(&self.alphabet),
            symbols,
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.len() <= other.len() && other.symbols[..self.len()] == self.symbols[..]
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        self.len() <= other.len() && other.symbols[other.len() - self.len()..] == self.symbols[..]
    }

    /// Number of occurrences of `x` in `self`, written `|w|_x`. The empty
    /// factor occurs `|w| + 1` times, once per cut position.
    pub fn count_occurrences(&self, x: &Word) -> Result<usize> {
        if !same_alphabet(&self.alphabet, &x.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.count_unchecked(x))
    }

    fn count_unchecked(&self, x: &Word) -> usize {
        if x.is_empty() {
            return self.len() + 1;
        }
        if x.len() > self.len() {
            return 0;
        }
        (0..=self.len() - x.len())
            .filter(|&i| self.symbols[i..i + x.len()] == x.symbols[..])
            .count()
    }

    /// Whether `x` occurs in `self` as a factor.
    pub fn contains_factor(&self, x: &Word) -> bool {
        if x.is_empty() {
            return true;
        }
        if x.len() > self.len() {
            return false;
        }
        (0..=self.len() - x.len()).any(|i| self.symbols[i..i + x.len()] == x.symbols[..])
    }

    /// The unique primitive `p` with `self ∈ p⁺`.
    pub fn primitive_root(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.len();
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            if (d..n).all(|i| self.symbols[i] == self.symbols[i - d]) {
                return Ok(self.prefix(d));
            }
        }
        unreachable!("d = n always matches")
    }

    /// A nonempty word is primitive if it is not a power of a shorter word.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.primitive_root()?.len() == self.len())
    }

    /// The lexicographically least conjugate of the primitive root.
    pub fn lyndon_root(&self) -> Result<Word> {
        let p = self.primitive_root()?;
        Ok((0..p.len())
            .map(|i| p.rotate_left(i))
            .min_by(|a, b| a.symbols.cmp(&b.symbols))
            .expect("nonempty conjugacy class"))
    }

    /// All distinct factors of length at most `max_len`, including ε.
    pub fn factors_up_to(&self, max_len: usize) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        out.insert(Word::empty(&self.alphabet));
        for len in 1..=max_len.min(self.len()) {
            for start in 0..=self.len() - len {
                out.insert(self.factor(start, start + len));
            }
        }
        out
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols && same_alphabet(&self.alphabet, &other.alphabet)
    }
}

impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Shortlex: length first, then the alphabet order position-wise.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert!(same_alphabet(&self.alphabet, &other.alphabet));
        self.len()
            .cmp(&other.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for c in self.chars() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Whether `uv = vu`. For nonempty words this is equivalent to having the
/// same primitive root.
pub fn commute(u: &Word, v: &Word) -> bool {
    u.concat(v) == v.concat(u)
}

/// The Fine–Wilf length `|u| + |v| − gcd(|u|, |v|)`: if `u^ω` and `v^ω`
/// share a prefix this long, `u` and `v` are powers of a common word.
pub fn fine_wilf_threshold(u: &Word, v: &Word) -> Result<usize> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(u.len() + v.len() - gcd(u.len(), v.len()))
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// One occurrence of a factor in a host word: the triple
/// `(pre, factor, post)` with `pre · factor · post = host`. Stored as a
/// position and length; equality is positional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    host: Word,
    start: usize,
    len: usize,
}

impl Occurrence {
    pub fn new(host: Word, start: usize, len: usize) -> Result<Self> {
        if start + len > host.len() {
            return Err(Error::OccurrenceOutOfBounds {
                start,
                len,
                host_len: host.len(),
            });
        }
        Ok(Occurrence { host, start, len })
    }

    pub fn host(&self) -> &Word {
        &self.host
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn pre(&self) -> Word {
        self.host.factor(0, self.start)
    }

    pub fn factor(&self) -> Word {
        self.host.factor(self.start, self.end())
    }

    pub fn post(&self) -> Word {
        self.host.factor(self.end(), self.host.len())
    }

    /// Overlap length of two occurrences in the same host:
    /// `min(end₁, end₂) − max(start₁, start₂)` when positive.
    pub fn overlap(&self, other: &Occurrence) -> Result<Option<usize>> {
        if self.host != other.host {
            return Err(Error::HostMismatch);
        }
        let lo = self.start.max(other.start);
        let hi = self.end().min(other.end());
        Ok(if hi > lo { Some(hi - lo) } else { None })
    }

    /// Whether `self` is contained in `other`: `|pre| ≥ |pre'|` and
    /// `|post| ≥ |post'|`.
    pub fn is_contained_in(&self, other: &Occurrence) -> Result<bool> {
        if self.host != other.host {
            return Err(Error::HostMismatch);
        }
        Ok(self.start >= other.start && self.end() <= other.end())
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.pre(), self.factor(), self.post())
    }
}

/// All maximal `p⁺`-occurrences in `w` of exponent at least `min_exp`,
/// ordered by starting position. Two `p⁺`-occurrences overlapping by `|p|`
/// or more always land in the same maximal one, so maximal runs are the
/// chains of `p`-matches spaced exactly `|p|` apart.
pub fn maximal_power_occurrences(w: &Word, p: &Word, min_exp: usize) -> Result<Vec<Occurrence>> {
    if !p.is_primitive()? {
        return Err(Error::NotPrimitive(p.to_string()));
    }
    let min_exp = min_exp.max(1);
    let plen = p.len();
    let n = w.len();
    let matches: Vec<bool> = (0..n)
        .map(|i| i + plen <= n && w.indices()[i..i + plen] == p.indices()[..])
        .collect();
    let mut out = Vec::new();
    for i in 0..n {
        if !matches[i] || (i >= plen && matches[i - plen]) {
            continue;
        }
        // chain start: extend right in steps of |p|
        let mut j = i;
        while j + plen < n && matches[j + plen] {
            j += plen;
        }
        let exp = (j - i) / plen + 1;
        if exp >= min_exp {
            out.push(Occurrence::new(w.clone(), i, exp * plen).expect("in bounds"));
        }
    }
    Ok(out)
}

/// All words over `alphabet` of length at most `max_len`, in shortlex order.
pub fn all_words_up_to(alphabet: &Arc<Alphabet>, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty(alphabet)];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &layer {
            for s in 0..alphabet.len() as u32 {
                let mut v: Vec<u32> = prefix.clone();
                v.push(s);
                out.push(Word::from_indices(alphabet, v.clone()));
                next.push(v);
            }
        }
        layer = next;
    }
    out
}
