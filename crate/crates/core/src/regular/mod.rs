//! Regular languages: regex parsing and compilation, the finite-SSF
//! decision with witness extraction, boundedness, and the (n, k, P)
//! parameters of bounded expressions.
//!
//! A regular language has a finite separating set of factors exactly when
//! it has no subset of the form `x w* y w* z` with `wy ≠ yw`. The decision
//! procedure scans every ordered pair of live states `(q1, q2)`: with
//! `W = {w : δ(q1,w) = q1, δ(q2,w) = q2}` and `Y = {y : δ(q1,y) = q2}`, a
//! pair is harmless when `W` has no nonempty word, or `Y` is empty, or both
//! `W` and `Y` are powers of the primitive root `p` of `W`'s shortest
//! nonempty member (the only way every `w ∈ W` can commute with every
//! `y ∈ Y`, since a nonempty word cannot commute with words of two distinct
//! primitive roots). Any failing pair pumps into such a subset, and the
//! witness is extracted from shortest words.

mod ast;
mod bounded;
mod dfa;

pub use ast::{parse_regex, RegexAst, RegexNode};
pub use bounded::{
    bexpr_enumerate, check_nkp_conditions, nkp_parameters, BoundedExpr, BoundedTerm, Condition1,
    Condition2, Condition3, NkpParameters, NkpReport,
};
pub use dfa::{compile, Dfa, StateId};

use crate::error::Error;
use crate::word::{commute, Word};
use crate::Result;

/// A quadruple certifying that a language has no finite SSF: the language
/// contains `x w* y w* z` and `wy ≠ yw`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    x: Word,
    w: Word,
    y: Word,
    z: Word,
}

impl Witness {
    pub fn new(x: Word, w: Word, y: Word, z: Word) -> Result<Self> {
        if commute(&w, &y) {
            return Err(Error::CommutingWitness {
                w: w.to_string(),
                y: y.to_string(),
            });
        }
        Ok(Witness { x, w, y, z })
    }

    pub fn x(&self) -> &Word {
        &self.x
    }

    pub fn w(&self) -> &Word {
        &self.w
    }

    pub fn y(&self) -> &Word {
        &self.y
    }

    pub fn z(&self) -> &Word {
        &self.z
    }

    /// The word `x wⁱ y wʲ z`.
    pub fn pumped(&self, i: usize, j: usize) -> Word {
        self.x
            .concat(&self.w.pow(i))
            .concat(&self.y)
            .concat(&self.w.pow(j))
            .concat(&self.z)
    }
}

/// Outcome of the finite-SSF decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteSsf {
    /// The language has a finite SSF.
    Yes,
    /// No finite SSF; the witness spans a subset `x w* y w* z` with
    /// `wy ≠ yw`.
    No(Witness),
}

impl FiniteSsf {
    pub fn is_yes(&self) -> bool {
        matches!(self, FiniteSsf::Yes)
    }
}

/// Decides whether the language of `dfa` has a finite SSF; on `No` the
/// returned witness satisfies `x wⁱ y wʲ z ∈ L` for all `i, j ≥ 0`.
pub fn decide_finite_ssf(dfa: &Dfa) -> FiniteSsf {
    let live = dfa.live_states();
    for &q1 in &live {
        for &q2 in &live {
            let Some(shortest_loop) = dfa.loop_shortest_nonempty(q1, q2) else {
                continue; // W has no nonempty word
            };
            if dfa.path_shortest(q1, q2, false).is_none() {
                continue; // Y is empty
            }
            let root = shortest_loop.primitive_root().expect("nonempty");
            let loop_escape = dfa.loop_outside_pstar(q1, q2, &root);
            let path_escape = dfa.path_outside_pstar(q1, q2, &root);
            if loop_escape.is_none() && path_escape.is_none() {
                continue; // all of W and Y commute through the root p
            }
            let x = dfa.shortest_to(q1).expect("q1 is reachable");
            let z = dfa
                .shortest_from_to_accepting(q2)
                .expect("q2 is co-reachable");
            // Pick (w, y) noncommuting: a path word outside p* cannot
            // commute with the root-p loop word; otherwise a loop word
            // outside p* cannot commute with any nonempty path word.
            let (w, y) = match path_escape {
                Some(y) => (shortest_loop, y),
                None => {
                    let w = loop_escape.expect("some side escapes p*");
                    let y = dfa
                        .path_shortest(q1, q2, true)
                        .expect("Y has a nonempty word: for q1 = q2 it contains W");
                    (w, y)
                }
            };
            let witness = Witness::new(x, w, y, z).expect("escape pair cannot commute");
            debug_assert!(verify_witness(
                dfa,
                &witness.x,
                &witness.w,
                &witness.y,
                &witness.z,
                2
            ));
            return FiniteSsf::No(witness);
        }
    }
    FiniteSsf::Yes
}

/// Checks `wy ≠ yw` and membership of `x wⁱ y wʲ z` for all
/// `0 ≤ i, j ≤ imax`.
pub fn verify_witness(dfa: &Dfa, x: &Word, w: &Word, y: &Word, z: &Word, imax: usize) -> bool {
    if commute(w, y) {
        return false;
    }
    for i in 0..=imax {
        for j in 0..=imax {
            let word = x.concat(&w.pow(i)).concat(y).concat(&w.pow(j)).concat(z);
            if !dfa.accepts(&word) {
                return false;
            }
        }
    }
    true
}

/// Whether the language is bounded (a subset of some `v₁* ⋯ vₙ*`): true
/// exactly when the loop language at every live state is commutative, i.e.
/// contained in `p*` for the root `p` of its shortest nonempty member.
pub fn is_bounded(dfa: &Dfa) -> bool {
    dfa.live_states().into_iter().all(|q| {
        match dfa.loop_shortest_nonempty(q, q) {
            None => true, // acyclic at q
            Some(shortest) => {
                let root = shortest.primitive_root().expect("nonempty");
                dfa.loop_outside_pstar(q, q, &root).is_none()
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;
    use std::sync::Arc;

    fn ab() -> Arc<Alphabet> {
        Alphabet::new(['a', 'b']).unwrap()
    }

    fn dfa(pattern: &str) -> Dfa {
        compile(&parse_regex(pattern, &ab()).unwrap())
    }

    fn w(text: &str) -> Word {
        Word::parse(&ab(), text).unwrap()
    }

    #[test]
    fn decision_for_section_five_examples() {
        // K = a*(abab)*ba(ba)* has no finite SSF
        let k = dfa("a*(abab)*ba(ba)*");
        match decide_finite_ssf(&k) {
            FiniteSsf::No(wit) => {
                assert!(verify_witness(&k, wit.x(), wit.w(), wit.y(), wit.z(), 3));
            }
            FiniteSsf::Yes => panic!("K must not have a finite SSF"),
        }

        // L = a*(abab)*aba(ba)* has one
        let l = dfa("a*(abab)*aba(ba)*");
        assert_eq!(decide_finite_ssf(&l), FiniteSsf::Yes);
    }

    #[test]
    fn decision_for_one_b_between_a_runs() {
        let d = dfa("a*ba*");
        match decide_finite_ssf(&d) {
            FiniteSsf::No(wit) => {
                assert_eq!(
                    (wit.x(), wit.w(), wit.y(), wit.z()),
                    (&w(""), &w("a"), &w("b"), &w(""))
                );
                assert!(verify_witness(&d, wit.x(), wit.w(), wit.y(), wit.z(), 3));
            }
            FiniteSsf::Yes => panic!("a*ba* must not have a finite SSF"),
        }
    }

    #[test]
    fn trivial_languages_have_finite_ssfs() {
        assert!(decide_finite_ssf(&dfa("#")).is_yes());
        assert!(decide_finite_ssf(&dfa("()")).is_yes());
        assert!(decide_finite_ssf(&dfa("a*")).is_yes());
        assert!(decide_finite_ssf(&dfa("abba|bb")).is_yes());
        assert!(decide_finite_ssf(&dfa("(ab)*")).is_yes());
        assert!(decide_finite_ssf(&dfa("a*b*")).is_yes());
    }

    #[test]
    fn verify_witness_cases() {
        let d = dfa("a*ba*");
        assert!(verify_witness(&d, &w(""), &w("a"), &w("b"), &w(""), 3));
        assert!(!verify_witness(
            &dfa("a*"),
            &w(""),
            &w("a"),
            &w("b"),
            &w(""),
            3
        ));
        // commuting pair certifies nothing
        assert!(!verify_witness(&d, &w(""), &w("a"), &w("aa"), &w(""), 3));
    }

    #[test]
    fn witness_type_rejects_commuting_pairs() {
        assert!(matches!(
            Witness::new(w(""), w("ab"), w("abab"), w("")),
            Err(Error::CommutingWitness { .. })
        ));
        let wit = Witness::new(w("a"), w("ab"), w("b"), w("")).unwrap();
        assert_eq!(wit.pumped(2, 1), w("aababbab"));
    }

    #[test]
    fn boundedness_examples() {
        assert!(is_bounded(&dfa("a*b*")));
        assert!(!is_bounded(&dfa("(a|b)*")));
        assert!(is_bounded(&dfa("ab|ba|bb"))); // finite: acyclic live part
        assert!(is_bounded(&dfa("a*(abab)*aba(ba)*")));
        assert!(is_bounded(&dfa("a*(abab)*ba(ba)*")));
        assert!(!is_bounded(&dfa("(ab|b)*")));
    }

    #[test]
    fn unbounded_implies_no_finite_ssf() {
        for pattern in ["(a|b)*", "(ab|b)*", "(a|bb)*ab"] {
            let d = dfa(pattern);
            assert!(!is_bounded(&d), "{pattern}");
            assert!(!decide_finite_ssf(&d).is_yes(), "{pattern}");
        }
    }
}
