//! Bounded regular expressions `u₀ v₁* u₁ ⋯ vₙ* uₙ` (unions of terms), the
//! (n, k, P) parameters guaranteeing that k-abelian equivalent members are
//! equal, and desk-scale verification of the three conditions behind the
//! parameters.
//!
//! Text form: terms separated by `;`; within a term, `(word)*` is a starred
//! block, a `*` after a bare symbol stars that symbol, `()` is ε, and
//! whitespace is ignored.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::Error;
use crate::ssf::FiniteLanguage;
use crate::word::{maximal_power_occurrences, Alphabet, Word};
use crate::Result;

/// One term `u₀ v₁* u₁ ⋯ vₙ* uₙ`: a head followed by (starred, plain)
/// blocks. Every starred word is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedTerm {
    head: Word,
    stars: Vec<(Word, Word)>,
}

impl BoundedTerm {
    pub fn new(head: Word, stars: Vec<(Word, Word)>) -> Result<Self> {
        if stars.iter().any(|(v, _)| v.is_empty()) {
            return Err(Error::EmptyWord);
        }
        Ok(BoundedTerm { head, stars })
    }

    pub fn head(&self) -> &Word {
        &self.head
    }

    /// The `(vⱼ, uⱼ)` blocks following the head.
    pub fn stars(&self) -> &[(Word, Word)] {
        &self.stars
    }

    /// Word length with every starred block repeated `reps` times.
    fn length_with_exponent(&self, reps: usize) -> usize {
        self.head.len()
            + self
                .stars
                .iter()
                .map(|(v, u)| v.len() * reps + u.len())
                .sum::<usize>()
    }
}

/// A finite union of bounded terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedExpr {
    alphabet: Arc<Alphabet>,
    terms: Vec<BoundedTerm>,
}

impl BoundedExpr {
    pub fn new(alphabet: &Arc<Alphabet>, terms: Vec<BoundedTerm>) -> Self {
        BoundedExpr {
            alphabet: Arc::clone(alphabet),
            terms,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> &[BoundedTerm] {
        &self.terms
    }

    /// Parses the `;`-separated text form.
    pub fn parse(text: &str, alphabet: &Arc<Alphabet>) -> Result<Self> {
        let terms: Result<Vec<BoundedTerm>> = text
            .split(';')
            .map(|chunk| parse_term(chunk, alphabet))
            .collect();
        Ok(BoundedExpr::new(alphabet, terms?))
    }

    /// True when no term has a starred block, so the expression denotes a
    /// finite language (the set of heads).
    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.stars.is_empty())
    }
}

enum Segment {
    Plain(Vec<u32>),
    Starred(Vec<u32>),
}

fn parse_term(text: &str, alphabet: &Arc<Alphabet>) -> Result<BoundedTerm> {
    let mut segments: Vec<Segment> = Vec::new();
    let mut pending: Vec<u32> = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        match c {
            '(' => {
                let mut group: Vec<u32> = Vec::new();
                loop {
                    match chars.next() {
                        Some(')') => break,
                        Some(g) if g.is_whitespace() => continue,
                        Some(g) => match alphabet.index_of(g) {
                            Some(i) => group.push(i),
                            None if g == '(' || g == '*' || g == ';' => {
                                return Err(Error::Parse(format!(
                                    "'{g}' not allowed inside a group"
                                )))
                            }
                            None => return Err(Error::UnknownSymbol(g)),
                        },
                        None => {
                            return Err(Error::Parse(
                                "unbalanced parentheses: missing ')'".into(),
                            ))
                        }
                    }
                }
                if chars.peek() == Some(&'*') {
                    chars.next();
                    if group.is_empty() {
                        return Err(Error::Parse("'()*' stars the empty word".into()));
                    }
                    if !pending.is_empty() {
                        segments.push(Segment::Plain(std::mem::take(&mut pending)));
                    }
                    segments.push(Segment::Starred(group));
                } else {
                    pending.extend(group);
                }
            }
            ')' => return Err(Error::Parse("unbalanced parentheses: stray ')'".into())),
            '*' => return Err(Error::Parse("stray operator '*'".into())),
            _ => match alphabet.index_of(c) {
                Some(i) => {
                    if chars.peek() == Some(&'*') {
                        chars.next();
                        if !pending.is_empty() {
                            segments.push(Segment::Plain(std::mem::take(&mut pending)));
                        }
                        segments.push(Segment::Starred(vec![i]));
                    } else {
                        pending.push(i);
                    }
                }
                None => return Err(Error::UnknownSymbol(c)),
            },
        }
    }
    if !pending.is_empty() {
        segments.push(Segment::Plain(pending));
    }
    if segments.is_empty() && text.trim().is_empty() && !text.contains("()") {
        return Err(Error::Parse("empty term".into()));
    }

    // fold segments into head + (starred, plain) blocks
    let mut head: Vec<u32> = Vec::new();
    let mut stars: Vec<(Word, Word)> = Vec::new();
    for segment in segments {
        match segment {
            Segment::Plain(p) => match stars.last_mut() {
                None => head.extend(p),
                Some((_, u)) => {
                    let mut extended = u.indices().to_vec();
                    extended.extend(p);
                    *u = Word::from_indices(alphabet, extended);
                }
            },
            Segment::Starred(v) => {
                stars.push((
                    Word::from_indices(alphabet, v),
                    Word::empty(alphabet),
                ));
            }
        }
    }
    BoundedTerm::new(Word::from_indices(alphabet, head), stars)
}

/// The parameters of a bounded expression: a finite set of Lyndon words `P`
/// plus thresholds `n` and `k` such that distinct members of the language
/// are never k-abelian equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NkpParameters {
    pub n: usize,
    pub k: usize,
    pub lyndon_roots: BTreeSet<Word>,
}

/// Computes (n, k, P). A starless expression gets `P = ∅` and
/// `n = k = max length + 1`; otherwise `P` collects the Lyndon roots of all
/// starred words, `n` doubles the maximal single-repetition term length,
/// and `k` is the maximal term length with every star repeated `n + 2`
/// times.
pub fn nkp_parameters(expr: &BoundedExpr) -> NkpParameters {
    if expr.is_finite() {
        let max_len = expr
            .terms()
            .iter()
            .map(|t| t.head().len())
            .max()
            .unwrap_or(0);
        return NkpParameters {
            n: max_len + 1,
            k: max_len + 1,
            lyndon_roots: BTreeSet::new(),
        };
    }
    let lyndon_roots: BTreeSet<Word> = expr
        .terms()
        .iter()
        .flat_map(|t| t.stars().iter())
        .map(|(v, _)| v.lyndon_root().expect("starred words are nonempty"))
        .collect();
    let n = 2 * expr
        .terms()
        .iter()
        .map(|t| t.length_with_exponent(1))
        .max()
        .unwrap_or(0);
    let k = expr
        .terms()
        .iter()
        .map(|t| t.length_with_exponent(n + 2))
        .max()
        .unwrap_or(0);
    NkpParameters {
        n,
        k,
        lyndon_roots,
    }
}

/// All words of the expression of length at most `maxlen` (each star
/// exponent is bounded by `maxlen`, which the length bound subsumes).
pub fn bexpr_enumerate(expr: &BoundedExpr, maxlen: usize) -> FiniteLanguage {
    let mut out: BTreeSet<Word> = BTreeSet::new();
    for term in expr.terms() {
        let mut stack: Vec<(usize, Word)> = vec![(0, term.head().clone())];
        while let Some((idx, current)) = stack.pop() {
            if current.len() > maxlen {
                continue;
            }
            if idx == term.stars().len() {
                out.insert(current);
                continue;
            }
            let (v, u) = &term.stars()[idx];
            let mut repeated = current;
            loop {
                let with_u = repeated.concat(u);
                if with_u.len() <= maxlen {
                    stack.push((idx + 1, with_u));
                }
                repeated = repeated.concat(v);
                if repeated.len() > maxlen {
                    break;
                }
            }
        }
    }
    FiniteLanguage::new(expr.alphabet(), out).expect("one alphabet throughout")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition1 {
    Pass,
    /// Distinct roots `p ≠ q` share a factor of length `n`.
    CommonFactor { p: Word, q: Word, factor: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition2 {
    Pass,
    /// Some word has two maximal `p^{≥n}`-occurrences, explained by two
    /// same-root stars of one term: the language then contains a subset of
    /// the form `x (pᵐ)* y (pᵐ)* z`.
    SubsetForm {
        term: usize,
        first_star: usize,
        second_star: usize,
        root: Word,
    },
    /// Two maximal occurrences with no explaining star pair (only possible
    /// with tampered parameters).
    Violation { word: Word, root: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition3 {
    Pass,
    /// A factor of length `k` without any `p^{n+1}` inside.
    Violation { word: Word, factor: Word },
}

/// Desk-scale verification report for the three parameter conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NkpReport {
    pub condition1: Condition1,
    pub condition2: Condition2,
    pub condition3: Condition3,
}

impl NkpReport {
    /// All three conditions hold with no flags.
    pub fn all_pass(&self) -> bool {
        self.condition1 == Condition1::Pass
            && self.condition2 == Condition2::Pass
            && self.condition3 == Condition3::Pass
    }

    /// The disjunctive reading: a flagged subset form still satisfies the
    /// second condition.
    pub fn satisfied(&self) -> bool {
        self.condition1 == Condition1::Pass
            && !matches!(self.condition2, Condition2::Violation { .. })
            && self.condition3 == Condition3::Pass
    }
}

/// Checks the three conditions on all words of length at most `len_cap`.
pub fn check_nkp_conditions(
    expr: &BoundedExpr,
    params: &NkpParameters,
    len_cap: usize,
) -> NkpReport {
    let words = bexpr_enumerate(expr, len_cap);
    NkpReport {
        condition1: check_condition1(params, len_cap),
        condition2: check_condition2(expr, params, &words),
        condition3: check_condition3(params, &words),
    }
}

/// Factors of length `n` of arbitrary powers of `p` (stable once the power
/// is `n + |p|` long), capped at powers of total length `len_cap`.
fn power_factors(p: &Word, n: usize, len_cap: usize) -> BTreeSet<Word> {
    let wanted = (n + p.len()).div_ceil(p.len());
    let reps = wanted.min(len_cap / p.len());
    let power = p.pow(reps);
    let mut out = BTreeSet::new();
    if power.len() >= n {
        for start in 0..=power.len() - n {
            out.insert(power.factor(start, start + n));
        }
    }
    out
}

fn check_condition1(params: &NkpParameters, len_cap: usize) -> Condition1 {
    let roots: Vec<&Word> = params.lyndon_roots.iter().collect();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let fi = power_factors(roots[i], params.n, len_cap);
            let fj = power_factors(roots[j], params.n, len_cap);
            if let Some(factor) = fi.intersection(&fj).next() {
                return Condition1::CommonFactor {
                    p: roots[i].clone(),
                    q: roots[j].clone(),
                    factor: factor.clone(),
                };
            }
        }
    }
    Condition1::Pass
}

fn check_condition2(
    expr: &BoundedExpr,
    params: &NkpParameters,
    words: &FiniteLanguage,
) -> Condition2 {
    for word in words.iter() {
        for root in &params.lyndon_roots {
            let occs = maximal_power_occurrences(word, root, params.n)
                .expect("Lyndon roots are primitive");
            if occs.len() < 2 {
                continue;
            }
            // explain by a same-root star pair of one term
            for (ti, term) in expr.terms().iter().enumerate() {
                let star_roots: Vec<Word> = term
                    .stars()
                    .iter()
                    .map(|(v, _)| v.lyndon_root().expect("nonempty"))
                    .collect();
                for a in 0..star_roots.len() {
                    for b in a + 1..star_roots.len() {
                        if star_roots[a] == *root && star_roots[b] == *root {
                            return Condition2::SubsetForm {
                                term: ti,
                                first_star: a,
                                second_star: b,
                                root: root.clone(),
                            };
                        }
                    }
                }
            }
            return Condition2::Violation {
                word: word.clone(),
                root: root.clone(),
            };
        }
    }
    Condition2::Pass
}

fn check_condition3(params: &NkpParameters, words: &FiniteLanguage) -> Condition3 {
    let k = params.k;
    // any factor of length >= k contains one of length exactly k, so
    // checking the length-k windows covers them all
    let powers: Vec<Word> = params
        .lyndon_roots
        .iter()
        .map(|p| p.pow(params.n + 1))
        .collect();
    for word in words.iter() {
        if word.len() < k {
            continue;
        }
        // next_hit[i]: earliest end of a power occurrence starting at or
        // after i, per power word
        let mut window_ok = vec![false; word.len() - k + 1];
        for power in &powers {
            if power.len() > word.len() {
                continue;
            }
            let mut next_start = usize::MAX;
            for i in (0..=word.len() - power.len()).rev() {
                if word.factor(i, i + power.len()) == *power {
                    next_start = i;
                }
                if next_start != usize::MAX && i < window_ok.len() {
                    if next_start + power.len() <= i + k {
                        window_ok[i] = true;
                    }
                }
            }
        }
        if let Some(i) = window_ok.iter().position(|ok| !ok) {
            return Condition3::Violation {
                word: word.clone(),
                factor: word.factor(i, i + k),
            };
        }
    }
    Condition3::Pass
}
