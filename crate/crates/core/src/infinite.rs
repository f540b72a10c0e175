//! Infinite words: canonical ultimately periodic forms, the separating k
//! for `u v^ω`, factor and k-abelian complexity, and search for k-abelian
//! equivalent factor pairs.
//!
//! For a canonical `u v^ω`, no two distinct factors are `(|uv| + 1)`-abelian
//! equivalent, so the k-abelian complexity agrees with the factor
//! complexity from that k on. Aperiodic words have equivalent factor pairs
//! for every k; the search finds them by signature bucketing over
//! prefix-derived factor sets.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::Error;
use crate::kabelian::{signature, KSignature};
use crate::word::{Alphabet, Word};
use crate::Result;

/// Prefix length used to approximate factor sets of morphic words.
pub const DEFAULT_MORPHIC_PREFIX: usize = 1 << 14;

/// An ultimately periodic word `u v^ω` in canonical form: `v` primitive and
/// not a suffix of `u`, with the eventual period minimal and the preperiod
/// shortest. Construct via [`canonicalize`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPWord {
    preperiod: Word,
    period: Word,
}

impl UPWord {
    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.period.alphabet()
    }

    /// First `n` symbols of `u v^ω`.
    pub fn prefix(&self, n: usize) -> Word {
        let mut symbols = Vec::with_capacity(n);
        symbols.extend_from_slice(self.preperiod.indices());
        symbols.truncate(n);
        while symbols.len() < n {
            let take = (n - symbols.len()).min(self.period.len());
            symbols.extend_from_slice(&self.period.indices()[..take]);
        }
        Word::from_indices(self.period.alphabet(), symbols)
    }
}

impl std::fmt::Display for UPWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.preperiod.is_empty() {
            write!(f, "({})^ω", self.period)
        } else {
            write!(f, "{}({})^ω", self.preperiod, self.period)
        }
    }
}

/// Canonicalizes `(u, v)` to the unique pair denoting the same infinite
/// word with minimal period, then minimal preperiod. Works on an explicit
/// prefix of length `|u| + 3|v|`: a candidate period q is an eventual
/// period exactly when all its mismatches sit in front of the v-periodic
/// zone, because mismatches inside the zone repeat modulo `|v|`.
pub fn canonicalize(u: &Word, v: &Word) -> Result<UPWord> {
    if v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let total = u.len() + 3 * v.len();
    let mut symbols = Vec::with_capacity(total);
    symbols.extend_from_slice(u.indices());
    while symbols.len() < total {
        let take = (total - symbols.len()).min(v.len());
        symbols.extend_from_slice(&v.indices()[..take]);
    }
    for q in 1..=v.len() {
        let last_mismatch = (0..total - q).rev().find(|&i| symbols[i] != symbols[i + q]);
        let valid = match last_mismatch {
            None => true,
            Some(i) => i < u.len(),
        };
        if valid {
            let r = last_mismatch.map_or(0, |i| i + 1);
            let alphabet = v.alphabet();
            return Ok(UPWord {
                preperiod: Word::from_indices(alphabet, symbols[..r].to_vec()),
                period: Word::from_indices(alphabet, symbols[r..r + q].to_vec()),
            });
        }
    }
    unreachable!("q = |v| is always an eventual period")
}

/// `|u| + |v| + 1` for a canonical `u v^ω`: no two distinct factors of the
/// word are k-abelian equivalent for this k.
pub fn separating_k(word: &UPWord) -> usize {
    word.preperiod.len() + word.period.len() + 1
}

/// A prefix generator: an ultimately periodic word or the coded fixed
/// point of a prolongable morphism. Morphic prefixes are memoized.
pub struct WordSource {
    alphabet: Arc<Alphabet>,
    kind: SourceKind,
}

enum SourceKind {
    Periodic(UPWord),
    Morphic {
        /// Rule right-hand sides, indexed by internal symbol.
        rules: Vec<Vec<u32>>,
        /// Internal symbol to output symbol index.
        coding: Vec<u32>,
        cache: Mutex<Vec<u32>>,
    },
}

impl WordSource {
    pub fn periodic(word: UPWord) -> WordSource {
        WordSource {
            alphabet: Arc::clone(word.alphabet()),
            kind: SourceKind::Periodic(word),
        }
    }

    /// A morphic source: `rules` maps each internal symbol to its image;
    /// the fixed point starts from `seed` and is projected through
    /// `coding`. The morphism must be prolongable: `σ(seed)` starts with
    /// `seed` and has length at least two, and every image is nonempty.
    pub fn morphic(
        internal: &Arc<Alphabet>,
        rules_by_symbol: &[(char, &str)],
        coding_pairs: Option<&[(char, char)]>,
        seed: char,
    ) -> Result<WordSource> {
        let seed_idx = internal
            .index_of(seed)
            .ok_or(Error::UnknownSymbol(seed))?;
        let mut rules: Vec<Vec<u32>> = vec![Vec::new(); internal.len()];
        for &(c, image) in rules_by_symbol {
            let idx = internal.index_of(c).ok_or(Error::UnknownSymbol(c))?;
            let image_idx: Result<Vec<u32>> = image
                .chars()
                .map(|g| internal.index_of(g).ok_or(Error::UnknownSymbol(g)))
                .collect();
            rules[idx as usize] = image_idx?;
        }
        if rules.iter().any(|r| r.is_empty()) {
            return Err(Error::NonProlongable(seed));
        }
        let seed_image = &rules[seed_idx as usize];
        if seed_image[0] != seed_idx || seed_image.len() < 2 {
            return Err(Error::NonProlongable(seed));
        }
        let (alphabet, coding) = match coding_pairs {
            None => (
                Arc::clone(internal),
                (0..internal.len() as u32).collect::<Vec<u32>>(),
            ),
            Some(pairs) => {
                let mut images: Vec<char> = vec!['\0'; internal.len()];
                for &(from, to) in pairs {
                    let idx = internal.index_of(from).ok_or(Error::UnknownSymbol(from))?;
                    images[idx as usize] = to;
                }
                if images.iter().any(|&c| c == '\0') {
                    return Err(Error::Parse("coding misses a symbol".into()));
                }
                let mut out_symbols: Vec<char> = Vec::new();
                for &c in &images {
                    if !out_symbols.contains(&c) {
                        out_symbols.push(c);
                    }
                }
                let output = Alphabet::new(out_symbols)?;
                let coding = images
                    .iter()
                    .map(|&c| output.index_of(c).expect("image symbol"))
                    .collect();
                (output, coding)
            }
        };
        Ok(WordSource {
            alphabet,
            kind: SourceKind::Morphic {
                rules,
                coding,
                cache: Mutex::new(vec![seed_idx]),
            },
        })
    }

    /// The Thue–Morse word: a → ab, b → ba.
    pub fn thue_morse() -> WordSource {
        let alpha = Alphabet::new(['a', 'b']).expect("fixed alphabet");
        Self::morphic(&alpha, &[('a', "ab"), ('b', "ba")], None, 'a').expect("prolongable")
    }

    /// The Fibonacci word: a → ab, b → a.
    pub fn fibonacci() -> WordSource {
        let alpha = Alphabet::new(['a', 'b']).expect("fixed alphabet");
        Self::morphic(&alpha, &[('a', "ab"), ('b', "a")], None, 'a').expect("prolongable")
    }

    /// Parses a morphism spec like `a>ab,b>ba seed=a coding=identity`;
    /// the coding may also list pairs, `coding=a:x,b:y`.
    pub fn parse_morphic(spec: &str) -> Result<WordSource> {
        let mut rule_pairs: Vec<(char, String)> = Vec::new();
        let mut seed: Option<char> = None;
        let mut coding_text: Option<String> = None;
        for token in spec.split_whitespace() {
            if let Some(rest) = token.strip_prefix("seed=") {
                let mut chars = rest.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => seed = Some(c),
                    _ => return Err(Error::Parse(format!("bad seed '{rest}'"))),
                }
            } else if let Some(rest) = token.strip_prefix("coding=") {
                coding_text = Some(rest.to_string());
            } else if token.contains('>') {
                for rule in token.split(',') {
                    let Some((lhs, rhs)) = rule.split_once('>') else {
                        return Err(Error::Parse(format!("bad rule '{rule}'")));
                    };
                    let mut chars = lhs.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => rule_pairs.push((c, rhs.to_string())),
                        _ => return Err(Error::Parse(format!("bad rule '{rule}'"))),
                    }
                }
            } else {
                return Err(Error::Parse(format!("unrecognized token '{token}'")));
            }
        }
        if rule_pairs.is_empty() {
            return Err(Error::Parse("no morphism rules".into()));
        }
        let seed = seed.unwrap_or(rule_pairs[0].0);
        let internal = Alphabet::new(rule_pairs.iter().map(|(c, _)| *c))?;
        let coding_pairs: Option<Vec<(char, char)>> = match coding_text.as_deref() {
            None | Some("identity") => None,
            Some(text) => {
                let pairs: Result<Vec<(char, char)>> = text
                    .split(',')
                    .map(|pair| {
                        let Some((from, to)) = pair.split_once(':') else {
                            return Err(Error::Parse(format!("bad coding pair '{pair}'")));
                        };
                        let (mut fc, mut tc) = (from.chars(), to.chars());
                        match (fc.next(), fc.next(), tc.next(), tc.next()) {
                            (Some(f), None, Some(t), None) => Ok((f, t)),
                            _ => Err(Error::Parse(format!("bad coding pair '{pair}'"))),
                        }
                    })
                    .collect();
                Some(pairs?)
            }
        };
        let rules_ref: Vec<(char, &str)> = rule_pairs
            .iter()
            .map(|(c, s)| (*c, s.as_str()))
            .collect();
        Self::morphic(&internal, &rules_ref, coding_pairs.as_deref(), seed)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Whether factor sets derived from this source are exact (ultimately
    /// periodic sources) or prefix approximations (morphic sources).
    pub fn is_exact(&self) -> bool {
        matches!(self.kind, SourceKind::Periodic(_))
    }

    pub fn as_periodic(&self) -> Option<&UPWord> {
        match &self.kind {
            SourceKind::Periodic(word) => Some(word),
            SourceKind::Morphic { .. } => None,
        }
    }

    /// First `n` symbols; consistent across calls.
    pub fn prefix(&self, n: usize) -> Word {
        match &self.kind {
            SourceKind::Periodic(word) => word.prefix(n),
            SourceKind::Morphic { rules, coding, cache } => {
                let mut expansion = cache.lock().expect("cache lock");
                while expansion.len() < n {
                    let mut next = Vec::with_capacity(expansion.len() * 2);
                    for &s in expansion.iter() {
                        next.extend_from_slice(&rules[s as usize]);
                    }
                    *expansion = next;
                }
                let symbols = expansion[..n].iter().map(|&s| coding[s as usize]).collect();
                Word::from_indices(&self.alphabet, symbols)
            }
        }
    }
}

/// The factors of length `n`, with an exactness marker. Exact for
/// ultimately periodic sources (every length-n factor occurs within the
/// prefix of length `|u| + |v| + n − 1`); a lower approximation from a
/// prefix of [`DEFAULT_MORPHIC_PREFIX`] symbols for morphic sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    pub factors: BTreeSet<Word>,
    pub exact: bool,
}

pub fn factor_set(src: &WordSource, n: usize) -> FactorSet {
    factor_set_with_prefix(src, n, DEFAULT_MORPHIC_PREFIX)
}

pub fn factor_set_with_prefix(src: &WordSource, n: usize, morphic_prefix: usize) -> FactorSet {
    let (prefix, exact) = match &src.kind {
        SourceKind::Periodic(word) => {
            let len = if n == 0 {
                0
            } else {
                word.preperiod.len() + word.period.len() + n - 1
            };
            (src.prefix(len), true)
        }
        SourceKind::Morphic { .. } => (src.prefix(morphic_prefix.max(n)), false),
    };
    let mut factors = BTreeSet::new();
    if n == 0 {
        factors.insert(Word::empty(&src.alphabet));
    } else {
        for start in 0..prefix.len().saturating_sub(n - 1) {
            factors.insert(prefix.factor(start, start + n));
        }
    }
    FactorSet { factors, exact }
}

/// The number of length-n factors.
pub fn complexity(src: &WordSource, n: usize) -> usize {
    factor_set(src, n).factors.len()
}

/// The number of k-abelian classes of length-n factors.
pub fn kcomplexity(src: &WordSource, k: usize, n: usize) -> usize {
    let set = factor_set(src, n);
    let signatures: std::collections::HashSet<KSignature> = set
        .factors
        .iter()
        .map(|factor| signature(factor, k))
        .collect();
    signatures.len()
}

/// Searches lengths `1..=n_max` for two distinct k-abelian equivalent
/// factors; returns the smallest length and there the lexicographically
/// least pair. For a canonical periodic source and `k ≥ separating_k`,
/// always `None`.
pub fn find_equivalent_pair(
    src: &WordSource,
    k: usize,
    n_max: usize,
) -> Option<(Word, Word, usize)> {
    for n in 1..=n_max {
        let set = factor_set(src, n);
        let mut buckets: HashMap<KSignature, Vec<&Word>> = HashMap::new();
        for factor in &set.factors {
            buckets.entry(signature(factor, k)).or_default().push(factor);
        }
        let best = buckets
            .into_values()
            .filter(|members| members.len() >= 2)
            .map(|members| (members[0].clone(), members[1].clone()))
            .min();
        if let Some((x, y)) = best {
            return Some((x, y, n));
        }
    }
    None
}

/// Factor and k-abelian complexities tabulated over `0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub rows: BTreeMap<usize, ComplexityRow>,
    /// False when the rows are prefix approximations (morphic source).
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityRow {
    pub complexity: usize,
    pub kabelian: BTreeMap<usize, usize>,
}

pub fn complexity_profile(src: &WordSource, ks: &[usize], max_n: usize) -> ComplexityProfile {
    let mut rows = BTreeMap::new();
    for n in 0..=max_n {
        let total = complexity(src, n);
        let kabelian: BTreeMap<usize, usize> = ks
            .iter()
            .map(|&k| (k, kcomplexity(src, k, n)))
            .collect();
        debug_assert!(kabelian.values().all(|&c| c <= total));
        rows.insert(
            n,
            ComplexityRow {
                complexity: total,
                kabelian,
            },
        );
    }
    ComplexityProfile {
        rows,
        exact: src.is_exact(),
    }
}
