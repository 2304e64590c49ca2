use std::collections::BTreeMap;

use crate::automata::{Nfa, RunWord, StateId, StateSet, Symbol, Word};
use crate::error::{Error, Result};

use super::token::{tokenize_runs, Token};

/// Kind of token that can be read starting from a state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StateClass {
    Threshold,
    LeftVertex,
    RightVertex,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateClasses {
    classes: Vec<StateClass>,
}

impl StateClasses {
    pub fn class(&self, q: StateId) -> StateClass {
        self.classes[q]
    }

    pub fn states(&self, class: StateClass) -> Vec<StateId> {
        (0..self.classes.len()).filter(|&q| self.classes[q] == class).collect()
    }

    pub fn all(&self) -> &[StateClass] {
        &self.classes
    }
}

/// States reachable from `from` by `>a*`.
fn after_stem(m: &Nfa, from: &StateSet) -> StateSet {
    let mut set = m.step(from, Symbol::Start);
    loop {
        let mut next = set.clone();
        next.union_with(&m.step(&set, Symbol::A));
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Labels every state of a trimmed automaton over `Enc` with the kind of
/// token that starts there. Final states count as left-vertex states.
pub fn classify_states(m: &Nfa) -> Result<StateClasses> {
    let n = m.num_states();
    let mut classes = Vec::with_capacity(n);
    for q in 0..n {
        let single = StateSet::singleton(n, q);
        let opened = m.step(&single, Symbol::Start);
        let stem = after_stem(m, &single);
        let left = !m.step(&stem, Symbol::Hash).is_empty();
        let right = !m.step(&stem, Symbol::Dollar).is_empty();
        let ones = !m.step(&opened, Symbol::One).is_empty();
        let class = if q == m.initial() {
            if left || m.is_final(q) {
                return Err(Error::Invariant(format!("initial state {q} can start a non-threshold token")));
            }
            StateClass::Threshold
        } else {
            if ones {
                return Err(Error::Invariant(format!("state {q} can read a threshold token")));
            }
            match (left || m.is_final(q), right) {
                (true, true) => {
                    return Err(Error::Invariant(format!("state {q} can start both left and right vertex tokens")))
                }
                (true, false) => StateClass::LeftVertex,
                (false, true) => StateClass::RightVertex,
                (false, false) => StateClass::Empty,
            }
        };
        classes.push(class);
    }
    Ok(StateClasses { classes })
}

/// Tokens of a word with an accepting state sequence at token boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub tokens: Vec<Token>,
    /// `states[i]` is the state before `tokens[i]`; one longer than `tokens`.
    pub states: Vec<StateId>,
}

impl Factorization {
    /// `(p, q)` state pairs around each token.
    pub fn pairs(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        self.states.windows(2).map(|w| (w[0], w[1]))
    }
}

pub fn characteristic_factorization(m: &Nfa, w: &Word) -> Result<Factorization> {
    characteristic_factorization_runs(m, &w.to_runs())
}

/// Returns the lexicographically smallest accepting state sequence at token
/// boundaries.
pub fn characteristic_factorization_runs(m: &Nfa, w: &RunWord) -> Result<Factorization> {
    let tokens = tokenize_runs(w)?;
    let n = m.num_states();
    let words: Vec<RunWord> = tokens.iter().map(Token::to_runs).collect();
    // step[i][p]: states reachable from p by reading token i
    let step: Vec<Vec<StateSet>> =
        words.iter().map(|t| (0..n).map(|p| m.run_runs(&StateSet::singleton(n, p), t)).collect()).collect();
    let mut viable = vec![m.final_set()];
    for i in (0..tokens.len()).rev() {
        let next = viable.last().expect("nonempty");
        let mut prev = StateSet::empty(n);
        for p in 0..n {
            if step[i][p].intersects(next) {
                prev.insert(p);
            }
        }
        viable.push(prev);
    }
    viable.reverse();
    if !viable[0].contains(m.initial()) {
        return Err(Error::NotAccepted);
    }
    let mut states = vec![m.initial()];
    for i in 0..tokens.len() {
        let cur = *states.last().expect("nonempty");
        let q = step[i][cur].iter().find(|&q| viable[i + 1].contains(q)).ok_or_else(|| {
            Error::Invariant("backward viability lost during forward pass".into())
        })?;
        states.push(q);
    }
    Ok(Factorization { tokens, states })
}

/// Largest number of vertex tokens read between the same pair of states,
/// over the pairs whose token set is infinite.
pub fn sigma_w(f: &Factorization, infinite: impl Fn(StateId, StateId) -> bool) -> usize {
    let mut counts: BTreeMap<(StateId, StateId), usize> = BTreeMap::new();
    for (p, q) in f.pairs().skip(1) {
        if infinite(p, q) {
            *counts.entry((p, q)).or_default() += 1;
        }
    }
    counts.into_values().max().unwrap_or(0)
}
