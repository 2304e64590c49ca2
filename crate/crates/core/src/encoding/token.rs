use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::automata::{Nfa, RunWord, Symbol, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TokenKind {
    Threshold,
    LeftVertex,
    RightVertex,
}

/// One factor of an encoding: `>1^k$`, `>a^i#` or `>a^i$`.
///
/// Vertex indices are machine integers; thresholds may be astronomically
/// large and are kept in arbitrary precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Threshold(BigUint),
    LeftVertex(usize),
    RightVertex(usize),
}

impl Token {
    pub fn threshold(k: u64) -> Token {
        Token::Threshold(BigUint::from(k))
    }

    pub fn kind(&self) -> TokenKind {
        match self {
            Token::Threshold(_) => TokenKind::Threshold,
            Token::LeftVertex(_) => TokenKind::LeftVertex,
            Token::RightVertex(_) => TokenKind::RightVertex,
        }
    }

    /// Vertex index of a vertex token.
    pub fn index(&self) -> Option<usize> {
        match self {
            Token::LeftVertex(i) | Token::RightVertex(i) => Some(*i),
            Token::Threshold(_) => None,
        }
    }

    pub fn len(&self) -> BigUint {
        match self {
            Token::Threshold(k) => k + 2u32,
            Token::LeftVertex(i) | Token::RightVertex(i) => BigUint::from(*i + 2),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_runs(&self) -> RunWord {
        let mut w = RunWord::new();
        w.push(Symbol::Start, BigUint::one());
        match self {
            Token::Threshold(k) => {
                w.push(Symbol::One, k.clone());
                w.push(Symbol::Dollar, BigUint::one());
            }
            Token::LeftVertex(i) => {
                w.push(Symbol::A, BigUint::from(*i));
                w.push(Symbol::Hash, BigUint::one());
            }
            Token::RightVertex(i) => {
                w.push(Symbol::A, BigUint::from(*i));
                w.push(Symbol::Dollar, BigUint::one());
            }
        }
        w
    }

    /// Plain word, unless the token is longer than `limit`.
    pub fn to_word(&self, limit: usize) -> Option<Word> {
        self.to_runs().to_word(limit)
    }

    /// Shortlex order of the underlying words.
    pub fn shortlex_cmp(&self, other: &Token) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // Equal lengths: '#' < '$' < '1' < 'a' after the shared '>'.
            let key = |t: &Token| match t {
                Token::Threshold(k) if k.is_zero() => 1,
                Token::Threshold(_) => 2,
                Token::LeftVertex(0) => 0,
                Token::RightVertex(0) => 1,
                Token::LeftVertex(_) | Token::RightVertex(_) => 3,
            };
            key(self).cmp(&key(other)).then_with(|| match (self, other) {
                (Token::LeftVertex(_), Token::RightVertex(_)) => std::cmp::Ordering::Less,
                (Token::RightVertex(_), Token::LeftVertex(_)) => std::cmp::Ordering::Greater,
                _ => std::cmp::Ordering::Equal,
            })
        })
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_runs())
    }
}

/// Recognizer for `Enc`; state 2 is the hub reached after every complete
/// threshold or edge factor.
pub fn enc_nfa() -> Nfa {
    use Symbol::*;
    Nfa::new(
        6,
        0,
        [2],
        [(0, Start, 1), (1, One, 1), (1, Dollar, 2), (2, Start, 3), (3, A, 3), (3, Hash, 4), (4, Start, 5), (5, A, 5), (5, Dollar, 2)],
    )
    .expect("valid")
}

pub fn tokenize(w: &Word) -> Result<Vec<Token>> {
    tokenize_runs(&w.to_runs())
}

/// Splits a word of `Enc` into its tokens. Error positions count symbols
/// from 0 and saturate for astronomically long words.
pub fn tokenize_runs(w: &RunWord) -> Result<Vec<Token>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Phase {
        Start,
        Body,
    }
    let mut tokens = Vec::new();
    let mut expected = TokenKind::Threshold;
    let mut phase = Phase::Start;
    let mut count = BigUint::zero();
    let mut pos = BigUint::zero();
    let err = |pos: &BigUint, message: String| Error::NotInEnc { position: pos.to_usize().unwrap_or(usize::MAX), message };
    for (sym, n) in w.runs() {
        let body_sym = if expected == TokenKind::Threshold { Symbol::One } else { Symbol::A };
        if phase == Phase::Body && *sym == body_sym {
            count += n;
            pos += n;
            continue;
        }
        let reps = n.to_usize().unwrap_or(usize::MAX);
        for _ in 0..reps {
            match (phase, sym) {
                (Phase::Start, Symbol::Start) => {
                    phase = Phase::Body;
                    count = BigUint::zero();
                }
                (Phase::Start, _) => return Err(err(&pos, format!("expected '>' but found '{sym}'"))),
                (Phase::Body, Symbol::Dollar) if expected != TokenKind::LeftVertex => {
                    let tok = if expected == TokenKind::Threshold {
                        Token::Threshold(std::mem::take(&mut count))
                    } else {
                        Token::RightVertex(index(&count).ok_or_else(|| err(&pos, "vertex index too large".into()))?)
                    };
                    tokens.push(tok);
                    expected = TokenKind::LeftVertex;
                    phase = Phase::Start;
                }
                (Phase::Body, Symbol::Hash) if expected == TokenKind::LeftVertex => {
                    tokens.push(Token::LeftVertex(index(&count).ok_or_else(|| err(&pos, "vertex index too large".into()))?));
                    expected = TokenKind::RightVertex;
                    phase = Phase::Start;
                }
                (Phase::Body, _) => {
                    let want = match expected {
                        TokenKind::Threshold => "'1' or '$'",
                        TokenKind::LeftVertex => "'a' or '#'",
                        TokenKind::RightVertex => "'a' or '$'",
                    };
                    return Err(err(&pos, format!("expected {want} but found '{sym}'")));
                }
            }
            pos += 1u32;
        }
    }
    if phase == Phase::Body || expected != TokenKind::LeftVertex {
        let what = if tokens.is_empty() && phase == Phase::Start { "empty word" } else { "word ends inside a token or edge factor" };
        return Err(err(&pos, what.into()));
    }
    Ok(tokens)
}

fn index(count: &BigUint) -> Option<usize> {
    count.to_usize()
}

pub fn serialize_tokens(tokens: &[Token]) -> RunWord {
    let mut w = RunWord::new();
    for t in tokens {
        w.push_word(&t.to_runs());
    }
    w
}
