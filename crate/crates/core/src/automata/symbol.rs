use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// One letter of the encoding alphabet.
///
/// The derived order is the ASCII order of the serialized forms
/// (`#` < `$` < `1` < `>` < `a`), which is also the tie-break order used by
/// shortlex enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Hash,
    Dollar,
    One,
    Start,
    A,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [Symbol::Hash, Symbol::Dollar, Symbol::One, Symbol::Start, Symbol::A];

    pub fn as_char(self) -> char {
        match self {
            Symbol::Hash => '#',
            Symbol::Dollar => '$',
            Symbol::One => '1',
            Symbol::Start => '>',
            Symbol::A => 'a',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            '#' => Some(Symbol::Hash),
            '$' => Some(Symbol::Dollar),
            '1' => Some(Symbol::One),
            '>' => Some(Symbol::Start),
            'a' => Some(Symbol::A),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word, stored symbol by symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// `w[i..j]` with the 1-based inclusive convention.
    pub fn factor(&self, i: usize, j: usize) -> Word {
        if i == 0 || i > j || j > self.0.len() {
            return Word::new();
        }
        Word(self.0[i - 1..j].to_vec())
    }

    pub fn to_runs(&self) -> RunWord {
        RunWord::from_symbols(&self.0)
    }

    /// Shortlex comparison: shorter words first, then symbol by symbol.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Symbol::from_char(c).ok_or_else(|| Error::WordSyntax {
                    position: i,
                    message: format!("unexpected character {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

/// A word stored as maximal runs of equal symbols with arbitrary-precision
/// lengths.
///
/// Threshold tokens picked for upper-bound problems can be far too long to
/// materialize; this is the form witnesses travel in. The text syntax is the
/// plain word syntax plus an optional repetition count after a symbol:
/// `>1{70000}$>a#>aa$` denotes a threshold token with 70000 ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RunWord {
    runs: Vec<(Symbol, BigUint)>,
}

/// Runs up to this length are printed literally.
const LITERAL_RUN: u32 = 16;

impl RunWord {
    pub fn new() -> Self {
        RunWord { runs: Vec::new() }
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        let mut w = RunWord::new();
        for &s in symbols {
            w.push(s, BigUint::one());
        }
        w
    }

    pub fn push(&mut self, symbol: Symbol, count: BigUint) {
        if count.is_zero() {
            return;
        }
        match self.runs.last_mut() {
            Some((last, n)) if *last == symbol => *n += count,
            _ => self.runs.push((symbol, count)),
        }
    }

    pub fn push_word(&mut self, other: &RunWord) {
        for (s, n) in &other.runs {
            self.push(*s, n.clone());
        }
    }

    pub fn runs(&self) -> &[(Symbol, BigUint)] {
        &self.runs
    }

    pub fn len(&self) -> BigUint {
        self.runs.iter().map(|(_, n)| n).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Expands into a plain word when the total length is at most `limit`.
    pub fn to_word(&self, limit: usize) -> Option<Word> {
        let total = self.len().to_usize()?;
        if total > limit {
            return None;
        }
        let mut out = Vec::with_capacity(total);
        for (s, n) in &self.runs {
            let n = n.to_usize()?;
            out.extend(std::iter::repeat(*s).take(n));
        }
        Some(Word(out))
    }
}

impl FromStr for RunWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<RunWord> {
        let chars: Vec<char> = s.chars().collect();
        let mut out = RunWord::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let sym = Symbol::from_char(c).ok_or_else(|| Error::WordSyntax {
                position: i,
                message: format!("unexpected character {c:?}"),
            })?;
            i += 1;
            if i < chars.len() && chars[i] == '{' {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start || end >= chars.len() || chars[end] != '}' {
                    return Err(Error::WordSyntax {
                        position: i,
                        message: "malformed repetition count".into(),
                    });
                }
                let digits: String = chars[start..end].iter().collect();
                let n: BigUint = digits.parse().map_err(|_| Error::WordSyntax {
                    position: start,
                    message: "malformed repetition count".into(),
                })?;
                out.push(sym, n);
                i = end + 1;
            } else {
                out.push(sym, BigUint::one());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RunWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, n) in &self.runs {
            match n.to_u32() {
                Some(k) if k <= LITERAL_RUN => {
                    for _ in 0..k {
                        write!(f, "{s}")?;
                    }
                }
                _ => write!(f, "{s}{{{n}}}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_order_matches_ascii() {
        let mut chars: Vec<char> = Symbol::ALL.iter().map(|s| s.as_char()).collect();
        let sorted = {
            let mut c = chars.clone();
            c.sort();
            c
        };
        assert_eq!(chars, sorted);
        chars.dedup();
        assert_eq!(chars.len(), 5);
        for s in Symbol::ALL {
            assert_eq!(Symbol::from_char(s.as_char()), Some(s));
        }
    }

    #[test]
    fn word_parse_and_display() {
        let w: Word = ">1$>a#>aa$".parse().unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(w.to_string(), ">1$>a#>aa$");
        assert!(matches!("ab".parse::<Word>(), Err(Error::WordSyntax { position: 1, .. })));
        assert_eq!(w.factor(2, 3).to_string(), "1$");
    }

    #[test]
    fn run_words() {
        let w: RunWord = ">1{40}$>a#".parse().unwrap();
        assert_eq!(w.len(), BigUint::from(45u32));
        assert_eq!(w.to_string(), ">1{40}$>a#");
        let lit: RunWord = ">111$".parse().unwrap();
        assert_eq!(lit.to_string(), ">111$");
        assert_eq!(lit, ">1{3}$".parse().unwrap());
        assert!(">1{}$".parse::<RunWord>().is_err());
        assert_eq!(w.to_word(10), None);
        assert_eq!(w.to_word(100).unwrap().len(), 45);
    }
}
