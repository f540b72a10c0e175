//! Deterministic automata: compilation from regex, canonical minimization,
//! loop and path languages, shortest accepted words, and `⊆ p*` tests.
//!
//! Every public [`Dfa`] is complete (a dead state absorbs), minimal, and
//! canonically numbered by breadth-first discovery from the start state in
//! alphabet order. Two `Dfa`s over the same alphabet therefore compare equal
//! exactly when they recognize the same language. "Live" states are the
//! reachable and co-reachable ones.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;
use std::sync::Arc;

use crate::error::Error;
use crate::word::{Alphabet, Word};
use crate::Result;

use super::ast::{RegexAst, RegexNode};

/// Index of a DFA state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub usize);

/// Complete, minimal, trim-annotated deterministic automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Arc<Alphabet>,
    /// `transitions[s][c]` is the successor of state `s` on symbol index `c`.
    transitions: Vec<Vec<usize>>,
    start: usize,
    accepting: Vec<bool>,
    /// Co-reachability flags; all states are reachable after normalization.
    live: Vec<bool>,
}

/// Unnormalized automaton produced by construction steps.
struct RawDfa {
    alphabet: Arc<Alphabet>,
    transitions: Vec<Vec<usize>>,
    start: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn start(&self) -> StateId {
        StateId(self.start)
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q.0]
    }

    pub fn is_live(&self, q: StateId) -> bool {
        self.live[q.0]
    }

    pub fn live_states(&self) -> Vec<StateId> {
        (0..self.state_count())
            .filter(|&s| self.live[s])
            .map(StateId)
            .collect()
    }

    pub fn live_state_count(&self) -> usize {
        self.live.iter().filter(|&&l| l).count()
    }

    fn step(&self, s: usize, c: u32) -> usize {
        self.transitions[s][c as usize]
    }

    /// Runs the automaton on `w` from state `q`.
    pub fn run_from(&self, q: StateId, w: &Word) -> Result<StateId> {
        if q.0 >= self.state_count() {
            return Err(Error::InvalidState(q.0));
        }
        let mut s = q.0;
        for c in w.chars() {
            match self.alphabet.index_of(c) {
                Some(i) => s = self.step(s, i),
                None => return Err(Error::UnknownSymbol(c)),
            }
        }
        Ok(StateId(s))
    }

    /// Whether `w` is in the language. Words carrying symbols outside this
    /// automaton's alphabet are never members.
    pub fn accepts(&self, w: &Word) -> bool {
        let mut s = self.start;
        for c in w.chars() {
            match self.alphabet.index_of(c) {
                Some(i) => s = self.step(s, i),
                None => return false,
            }
        }
        self.accepting[s]
    }

    /// Shortest accepted word, lexicographically least among equals; with
    /// `require_nonempty`, the shortest accepted word of length one or more.
    pub fn shortest_word(&self, require_nonempty: bool) -> Option<Word> {
        bfs_word(
            &self.alphabet,
            self.start,
            |&s, c| self.step(s, c),
            |&s| self.accepting[s],
            require_nonempty,
        )
    }

    fn check_live(&self, q: StateId) -> Result<()> {
        if q.0 >= self.state_count() {
            return Err(Error::InvalidState(q.0));
        }
        if !self.live[q.0] {
            return Err(Error::DeadState(q.0));
        }
        Ok(())
    }

    /// The language `{w : δ(q1, w) = q1 and δ(q2, w) = q2}`, as a canonical
    /// DFA. Built by running the pair `(q1, q2)` in the product of the
    /// automaton with itself and accepting exactly at `(q1, q2)`.
    pub fn loop_language(&self, q1: StateId, q2: StateId) -> Result<Dfa> {
        self.check_live(q1)?;
        self.check_live(q2)?;
        let raw = self.pair_product_raw(q1.0, q2.0);
        Ok(normalize(raw))
    }

    /// The language `{y : δ(q1, y) = q2}`, as a canonical DFA.
    pub fn path_language(&self, q1: StateId, q2: StateId) -> Result<Dfa> {
        self.check_live(q1)?;
        self.check_live(q2)?;
        let mut accepting = vec![false; self.state_count()];
        accepting[q2.0] = true;
        let raw = RawDfa {
            alphabet: Arc::clone(&self.alphabet),
            transitions: self.transitions.clone(),
            start: q1.0,
            accepting,
        };
        Ok(normalize(raw))
    }

    /// Whether every accepted word is a power of the primitive word `p`
    /// (ε counts as `p⁰`). Decided by emptiness of the product with the
    /// complement of the cyclic `p*` recognizer.
    pub fn subset_of_pstar(&self, p: &Word) -> Result<bool> {
        if !p.is_primitive()? {
            return Err(Error::NotPrimitive(p.to_string()));
        }
        let Some(track) = self.translate(p) else {
            // p uses foreign symbols, so only ε of this language can lie in p*
            return Ok(self.shortest_word(true).is_none());
        };
        let cyc = CyclicPstar::new(track);
        let counterexample = bfs_word(
            &self.alphabet,
            (self.start, 0usize),
            |&(s, m), c| (self.step(s, c), cyc.step(m, c)),
            |&(s, m)| self.accepting[s] && !cyc.accepting(m),
            false,
        );
        Ok(counterexample.is_none())
    }

    fn translate(&self, w: &Word) -> Option<Vec<u32>> {
        w.chars().map(|c| self.alphabet.index_of(c)).collect()
    }

    fn pair_product_raw(&self, q1: usize, q2: usize) -> RawDfa {
        let n = self.state_count();
        let key = |a: usize, b: usize| a * n + b;
        let mut ids: HashMap<usize, usize> = HashMap::new();
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut queue = VecDeque::new();
        ids.insert(key(q1, q2), 0);
        order.push((q1, q2));
        queue.push_back((q1, q2));
        let mut transitions: Vec<Vec<usize>> = Vec::new();
        while let Some((a, b)) = queue.pop_front() {
            let mut row = Vec::with_capacity(self.alphabet.len());
            for c in 0..self.alphabet.len() as u32 {
                let next = (self.step(a, c), self.step(b, c));
                let id = *ids.entry(key(next.0, next.1)).or_insert_with(|| {
                    order.push(next);
                    queue.push_back(next);
                    order.len() - 1
                });
                row.push(id);
            }
            transitions.push(row);
        }
        let accepting = order.iter().map(|&(a, b)| a == q1 && b == q2).collect();
        RawDfa {
            alphabet: Arc::clone(&self.alphabet),
            transitions,
            start: 0,
            accepting,
        }
    }

    // Internal searches used by the finite-SSF decision; they avoid building
    // and minimizing intermediate automata.

    /// Shortest nonempty word looping at both `q1` and `q2`.
    pub(crate) fn loop_shortest_nonempty(&self, q1: StateId, q2: StateId) -> Option<Word> {
        bfs_word(
            &self.alphabet,
            (q1.0, q2.0),
            |&(a, b), c| (self.step(a, c), self.step(b, c)),
            |&(a, b)| a == q1.0 && b == q2.0,
            true,
        )
    }

    /// Whether every word looping at both `q1` and `q2` is a power of `p`
    /// (`p` given as symbol indices of this alphabet).
    pub(crate) fn loop_outside_pstar(&self, q1: StateId, q2: StateId, p: &Word) -> Option<Word> {
        let track = self.translate(p).expect("p built from this alphabet");
        let cyc = CyclicPstar::new(track);
        bfs_word(
            &self.alphabet,
            (q1.0, q2.0, 0usize),
            |&(a, b, m), c| (self.step(a, c), self.step(b, c), cyc.step(m, c)),
            |&(a, b, m)| a == q1.0 && b == q2.0 && !cyc.accepting(m),
            false,
        )
    }

    /// Shortest word from `q1` to `q2`.
    pub(crate) fn path_shortest(
        &self,
        q1: StateId,
        q2: StateId,
        require_nonempty: bool,
    ) -> Option<Word> {
        bfs_word(
            &self.alphabet,
            q1.0,
            |&s, c| self.step(s, c),
            |&s| s == q2.0,
            require_nonempty,
        )
    }

    /// Shortest word from `q1` to `q2` that is not a power of `p`.
    pub(crate) fn path_outside_pstar(&self, q1: StateId, q2: StateId, p: &Word) -> Option<Word> {
        let track = self.translate(p).expect("p built from this alphabet");
        let cyc = CyclicPstar::new(track);
        bfs_word(
            &self.alphabet,
            (q1.0, 0usize),
            |&(s, m), c| (self.step(s, c), cyc.step(m, c)),
            |&(s, m)| s == q2.0 && !cyc.accepting(m),
            false,
        )
    }

    /// Shortest word from the start state to `q`.
    pub(crate) fn shortest_to(&self, q: StateId) -> Option<Word> {
        self.path_shortest(self.start(), q, false)
    }

    /// Shortest word from `q` into an accepting state.
    pub(crate) fn shortest_from_to_accepting(&self, q: StateId) -> Option<Word> {
        bfs_word(
            &self.alphabet,
            q.0,
            |&s, c| self.step(s, c),
            |&s| self.accepting[s],
            false,
        )
    }
}

/// Cyclic recognizer of `p*`: states are positions in `p` plus an absorbing
/// dead state; only position 0 accepts.
struct CyclicPstar {
    symbols: Vec<u32>,
}

impl CyclicPstar {
    fn new(symbols: Vec<u32>) -> Self {
        debug_assert!(!symbols.is_empty());
        CyclicPstar { symbols }
    }

    /// States `0..len` are positions, `len` is dead.
    fn step(&self, s: usize, c: u32) -> usize {
        let len = self.symbols.len();
        if s < len && self.symbols[s] == c {
            (s + 1) % len
        } else {
            len
        }
    }

    fn accepting(&self, s: usize) -> bool {
        s == 0
    }
}

/// Breadth-first search for the shortest (then lexicographically least)
/// word from `start` to an accepting state of an implicit deterministic
/// graph. With `require_nonempty`, acceptance at distance zero is ignored;
/// the search state carries a "moved" bit so the start configuration stays
/// distinct from any re-entry into it.
fn bfs_word<S, F, A>(
    alphabet: &Arc<Alphabet>,
    start: S,
    mut step: F,
    mut accept: A,
    require_nonempty: bool,
) -> Option<Word>
where
    S: Eq + Hash + Clone,
    F: FnMut(&S, u32) -> S,
    A: FnMut(&S) -> bool,
{
    let mut hit = |s: &S, moved: bool| accept(s) && (moved || !require_nonempty);
    let root: (S, bool) = (start, false);
    if hit(&root.0, false) {
        return Some(Word::empty(alphabet));
    }
    let mut parents: HashMap<(S, bool), ((S, bool), u32)> = HashMap::new();
    let mut queue: VecDeque<(S, bool)> = VecDeque::from([root.clone()]);
    while let Some(node) = queue.pop_front() {
        for c in 0..alphabet.len() as u32 {
            let next = (step(&node.0, c), true);
            if parents.contains_key(&next) {
                continue;
            }
            parents.insert(next.clone(), (node.clone(), c));
            if hit(&next.0, true) {
                let mut symbols = Vec::new();
                let mut cursor = next;
                while let Some((prev, sym)) = parents.get(&cursor) {
                    symbols.push(*sym);
                    cursor = prev.clone();
                }
                symbols.reverse();
                return Some(Word::from_indices(alphabet, symbols));
            }
            queue.push_back(next);
        }
    }
    None
}

/// Compiles a regex to its canonical DFA: Thompson construction, subset
/// construction, Moore minimization, breadth-first renumbering.
pub fn compile(ast: &RegexAst) -> Dfa {
    let nfa = Nfa::build(ast.root(), ast.alphabet().len() as u32);
    let raw = nfa.determinize(ast.alphabet());
    normalize(raw)
}

struct Nfa {
    eps: Vec<Vec<usize>>,
    sym: Vec<Vec<(u32, usize)>>,
    start: usize,
    accept: usize,
}

impl Nfa {
    fn build(root: &RegexNode, _alphabet_len: u32) -> Nfa {
        let mut nfa = Nfa {
            eps: Vec::new(),
            sym: Vec::new(),
            start: 0,
            accept: 0,
        };
        let (start, accept) = nfa.node(root);
        nfa.start = start;
        nfa.accept = accept;
        nfa
    }

    fn fresh(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.sym.push(Vec::new());
        self.eps.len() - 1
    }

    fn node(&mut self, node: &RegexNode) -> (usize, usize) {
        match node {
            RegexNode::EmptySet => (self.fresh(), self.fresh()),
            RegexNode::Epsilon => {
                let s = self.fresh();
                let t = self.fresh();
                self.eps[s].push(t);
                (s, t)
            }
            RegexNode::Symbol(c) => {
                let s = self.fresh();
                let t = self.fresh();
                self.sym[s].push((*c, t));
                (s, t)
            }
            RegexNode::Union(a, b) => {
                let (sa, ta) = self.node(a);
                let (sb, tb) = self.node(b);
                let s = self.fresh();
                let t = self.fresh();
                self.eps[s].push(sa);
                self.eps[s].push(sb);
                self.eps[ta].push(t);
                self.eps[tb].push(t);
                (s, t)
            }
            RegexNode::Concat(a, b) => {
                let (sa, ta) = self.node(a);
                let (sb, tb) = self.node(b);
                self.eps[ta].push(sb);
                (sa, tb)
            }
            RegexNode::Star(a) => {
                let (sa, ta) = self.node(a);
                let s = self.fresh();
                let t = self.fresh();
                self.eps[s].push(sa);
                self.eps[s].push(t);
                self.eps[ta].push(sa);
                self.eps[ta].push(t);
                (s, t)
            }
        }
    }

    fn closure(&self, set: &mut Vec<usize>) {
        let mut seen: Vec<bool> = vec![false; self.eps.len()];
        for &s in set.iter() {
            seen[s] = true;
        }
        let mut stack: Vec<usize> = set.clone();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if !seen[t] {
                    seen[t] = true;
                    set.push(t);
                    stack.push(t);
                }
            }
        }
        set.sort_unstable();
    }

    fn determinize(&self, alphabet: &Arc<Alphabet>) -> RawDfa {
        let mut start_set = vec![self.start];
        self.closure(&mut start_set);
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut order: Vec<Vec<usize>> = Vec::new();
        ids.insert(start_set.clone(), 0);
        order.push(start_set);
        let mut queue = VecDeque::from([0usize]);
        let mut transitions: Vec<Vec<usize>> = Vec::new();
        while let Some(id) = queue.pop_front() {
            let set = order[id].clone();
            let mut row = Vec::with_capacity(alphabet.len());
            for c in 0..alphabet.len() as u32 {
                let mut next: Vec<usize> = Vec::new();
                for &s in &set {
                    for &(label, t) in &self.sym[s] {
                        if label == c && !next.contains(&t) {
                            next.push(t);
                        }
                    }
                }
                self.closure(&mut next);
                let next_id = *ids.entry(next.clone()).or_insert_with(|| {
                    order.push(next);
                    queue.push_back(order.len() - 1);
                    order.len() - 1
                });
                row.push(next_id);
            }
            if transitions.len() <= id {
                transitions.resize(id + 1, Vec::new());
            }
            transitions[id] = row;
        }
        let accepting = order
            .iter()
            .map(|set| set.binary_search(&self.accept).is_ok())
            .collect();
        RawDfa {
            alphabet: Arc::clone(alphabet),
            transitions,
            start: 0,
            accepting,
        }
    }
}

/// Reachability restriction, Moore minimization, canonical renumbering, and
/// co-reachability annotation.
fn normalize(raw: RawDfa) -> Dfa {
    let alpha_len = raw.alphabet.len();

    // restrict to reachable states
    let mut reach_order: Vec<usize> = vec![raw.start];
    let mut reach_id: HashMap<usize, usize> = HashMap::from([(raw.start, 0)]);
    let mut head = 0;
    while head < reach_order.len() {
        let s = reach_order[head];
        head += 1;
        for c in 0..alpha_len {
            let t = raw.transitions[s][c];
            if !reach_id.contains_key(&t) {
                reach_id.insert(t, reach_order.len());
                reach_order.push(t);
            }
        }
    }
    let n = reach_order.len();
    let trans: Vec<Vec<usize>> = reach_order
        .iter()
        .map(|&s| {
            (0..alpha_len)
                .map(|c| reach_id[&raw.transitions[s][c]])
                .collect()
        })
        .collect();
    let accepting: Vec<bool> = reach_order.iter().map(|&s| raw.accepting[s]).collect();

    // Moore partition refinement
    let mut class: Vec<usize> = accepting.iter().map(|&a| a as usize).collect();
    loop {
        let mut next_ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut next: Vec<usize> = Vec::with_capacity(n);
        for s in 0..n {
            let sig = (
                class[s],
                (0..alpha_len).map(|c| class[trans[s][c]]).collect::<Vec<_>>(),
            );
            let fresh = next_ids.len();
            let id = *next_ids.entry(sig).or_insert(fresh);
            next.push(id);
        }
        if next == class {
            break;
        }
        class = next;
    }

    // quotient, renumbered by BFS from the start class in symbol order
    let start_class = class[0];
    let mut bfs_id: HashMap<usize, usize> = HashMap::from([(start_class, 0)]);
    let mut bfs_order: Vec<usize> = vec![start_class];
    // one representative per class
    let mut rep: HashMap<usize, usize> = HashMap::new();
    for s in 0..n {
        rep.entry(class[s]).or_insert(s);
    }
    let mut head = 0;
    while head < bfs_order.len() {
        let cl = bfs_order[head];
        head += 1;
        let r = rep[&cl];
        for c in 0..alpha_len {
            let target = class[trans[r][c]];
            if !bfs_id.contains_key(&target) {
                bfs_id.insert(target, bfs_order.len());
                bfs_order.push(target);
            }
        }
    }
    let m = bfs_order.len();
    let mut transitions: Vec<Vec<usize>> = vec![vec![0; alpha_len]; m];
    let mut accept_flags: Vec<bool> = vec![false; m];
    for (idx, &cl) in bfs_order.iter().enumerate() {
        let r = rep[&cl];
        accept_flags[idx] = accepting[r];
        for c in 0..alpha_len {
            transitions[idx][c] = bfs_id[&class[trans[r][c]]];
        }
    }

    // co-reachability for live flags
    let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); m];
    for s in 0..m {
        for c in 0..alpha_len {
            reverse[transitions[s][c]].push(s);
        }
    }
    let mut live = accept_flags.clone();
    let mut stack: Vec<usize> = (0..m).filter(|&s| live[s]).collect();
    while let Some(s) = stack.pop() {
        for &p in &reverse[s] {
            if !live[p] {
                live[p] = true;
                stack.push(p);
            }
        }
    }

    Dfa {
        alphabet: raw.alphabet,
        transitions,
        start: 0,
        accepting: accept_flags,
        live,
    }
}
