//! Regular expression syntax tree and parser.
//!
//! Syntax: bare symbols, `|` for union, juxtaposition for concatenation,
//! `*` for Kleene star, parentheses for grouping, `()` for ε and `#` for
//! the empty set. Whitespace is ignored. `**` collapses to `*`.

use std::str::Chars;
use std::sync::Arc;

use crate::error::Error;
use crate::word::Alphabet;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegexNode {
    EmptySet,
    Epsilon,
    Symbol(u32),
    Union(Box<RegexNode>, Box<RegexNode>),
    Concat(Box<RegexNode>, Box<RegexNode>),
    Star(Box<RegexNode>),
}

/// A parsed regular expression over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegexAst {
    alphabet: Arc<Alphabet>,
    root: RegexNode,
}

impl RegexAst {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn root(&self) -> &RegexNode {
        &self.root
    }
}

/// Parses `text` into a [`RegexAst`] over `alphabet`.
pub fn parse_regex(text: &str, alphabet: &Arc<Alphabet>) -> Result<RegexAst> {
    let mut parser = Parser {
        chars: text.chars(),
        peeked: None,
        alphabet,
    };
    let root = parser.union()?;
    match parser.peek() {
        None => Ok(RegexAst {
            alphabet: Arc::clone(alphabet),
            root,
        }),
        Some(')') => Err(Error::Parse("unbalanced parentheses: stray ')'".into())),
        Some(c) => Err(Error::Parse(format!("unexpected '{c}'"))),
    }
}

struct Parser<'a> {
    chars: Chars<'a>,
    peeked: Option<char>,
    alphabet: &'a Arc<Alphabet>,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<char> {
        loop {
            if self.peeked.is_none() {
                self.peeked = self.chars.next();
            }
            match self.peeked {
                Some(c) if c.is_whitespace() => self.peeked = None,
                other => return other,
            }
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.peeked = None;
        c
    }

    fn union(&mut self) -> Result<RegexNode> {
        let mut node = self.concat()?;
        while self.peek() == Some('|') {
            self.bump();
            let rhs = self.concat()?;
            node = RegexNode::Union(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn concat(&mut self) -> Result<RegexNode> {
        let mut parts = Vec::new();
        while matches!(self.peek(), Some(c) if c != '|' && c != ')') {
            parts.push(self.postfix()?);
        }
        let mut iter = parts.into_iter();
        match iter.next() {
            Some(first) => Ok(iter.fold(first, |acc, next| {
                RegexNode::Concat(Box::new(acc), Box::new(next))
            })),
            None => match self.peek() {
                Some(c) => Err(Error::Parse(format!("stray operator '{c}'"))),
                None => Err(Error::Parse("empty expression".into())),
            },
        }
    }

    fn postfix(&mut self) -> Result<RegexNode> {
        let mut node = self.atom()?;
        while self.peek() == Some('*') {
            self.bump();
            if !matches!(node, RegexNode::Star(_)) {
                node = RegexNode::Star(Box::new(node));
            }
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<RegexNode> {
        match self.bump() {
            Some('(') => {
                if self.peek() == Some(')') {
                    self.bump();
                    return Ok(RegexNode::Epsilon);
                }
                let inner = self.union()?;
                match self.bump() {
                    Some(')') => Ok(inner),
                    _ => Err(Error::Parse("unbalanced parentheses: missing ')'".into())),
                }
            }
            Some('#') => Ok(RegexNode::EmptySet),
            Some('*') => Err(Error::Parse("stray operator '*'".into())),
            Some('|') => Err(Error::Parse("stray operator '|'".into())),
            Some(c) => match self.alphabet.index_of(c) {
                Some(i) => Ok(RegexNode::Symbol(i)),
                None => Err(Error::UnknownSymbol(c)),
            },
            None => Err(Error::Parse("empty expression".into())),
        }
    }
}
