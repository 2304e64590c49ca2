use super::nfa::{Nfa, StateSet};
use super::symbol::{Symbol, Word};

/// Accepted words in shortlex order, starting at a minimum length.
///
/// Finite languages yield finitely many items. For infinite languages the
/// iterator never ends, but each call returns after finitely many steps.
pub struct ShortlexIter<'a> {
    nfa: &'a Nfa,
    /// `exact[r]`: states with an accepting path of exactly `r` symbols.
    exact: Vec<StateSet>,
    max_len: Option<usize>,
    len: usize,
    word: Vec<Symbol>,
    stack: Vec<(StateSet, usize)>,
    fresh_length: bool,
}

impl<'a> ShortlexIter<'a> {
    pub fn new(nfa: &'a Nfa) -> Self {
        Self::starting_at(nfa, 0)
    }

    pub fn starting_at(nfa: &'a Nfa, min_len: usize) -> Self {
        let empty = nfa.is_empty();
        ShortlexIter {
            nfa,
            exact: vec![nfa.final_set()],
            max_len: if nfa.is_finite() { nfa.max_word_len() } else { None },
            len: if empty { usize::MAX } else { min_len },
            word: Vec::new(),
            stack: Vec::new(),
            fresh_length: true,
        }
    }

    fn exact(&mut self, r: usize) -> &StateSet {
        while self.exact.len() <= r {
            let next = self.nfa.step_back_any(self.exact.last().expect("nonempty"));
            self.exact.push(next);
        }
        &self.exact[r]
    }

    fn viable(&mut self, set: &StateSet, remaining: usize) -> bool {
        set.intersects(self.exact(remaining))
    }

    /// Next accepted word of length `self.len` after the current DFS position.
    fn advance_within_length(&mut self) -> Option<Word> {
        if self.fresh_length {
            self.fresh_length = false;
            let start = self.nfa.initial_set();
            if !self.viable(&start, self.len) {
                return None;
            }
            self.word.clear();
            if self.len == 0 {
                self.stack.clear();
                return Some(Word::new());
            }
            self.stack = vec![(start, 0)];
        }
        while let Some((set, next)) = self.stack.pop() {
            if self.word.len() == self.len {
                // A complete word was returned last time; backtrack.
                self.word.pop();
                continue;
            }
            if next >= Symbol::ALL.len() {
                self.word.pop();
                continue;
            }
            self.stack.push((set.clone(), next + 1));
            let sym = Symbol::ALL[next];
            let succ = self.nfa.step(&set, sym);
            let remaining = self.len - self.word.len() - 1;
            if succ.is_empty() || !self.viable(&succ, remaining) {
                continue;
            }
            self.word.push(sym);
            self.stack.push((succ, 0));
            if remaining == 0 {
                return Some(Word(self.word.clone()));
            }
        }
        None
    }
}

impl Iterator for ShortlexIter<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if self.len == usize::MAX {
                return None;
            }
            if let Some(m) = self.max_len {
                if self.len > m {
                    return None;
                }
            }
            if let Some(w) = self.advance_within_length() {
                return Some(w);
            }
            self.len += 1;
            self.fresh_length = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile_regex;

    fn words(p: &str, min: usize, take: usize) -> Vec<String> {
        let m = compile_regex(p).unwrap();
        ShortlexIter::starting_at(&m, min).take(take).map(|w| w.to_string()).collect()
    }

    #[test]
    fn finite_language_in_order() {
        assert_eq!(words("a|$|#a|>", 0, 100), vec!["$", ">", "a", "#a"]);
        assert_eq!(words("a|$|#a|>", 2, 100), vec!["#a"]);
    }

    #[test]
    fn infinite_language_with_minimum() {
        assert_eq!(words(">1*$", 0, 3), vec![">$", ">1$", ">11$"]);
        assert_eq!(words(">1*$", 5, 2), vec![">111$", ">1111$"]);
        assert_eq!(words("(aa)*", 1, 2), vec!["aa", "aaaa"]);
    }

    #[test]
    fn empty_language() {
        assert!(words("a", 0, 10).len() == 1);
        let m = crate::automata::Nfa::empty();
        assert_eq!(ShortlexIter::new(&m).count(), 0);
    }

    #[test]
    fn empty_word_first() {
        assert_eq!(words("a*", 0, 3), vec!["", "a", "aa"]);
    }
}
