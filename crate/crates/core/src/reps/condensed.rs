use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::automata::{Nfa, RunWord, StateId, StateSet, Symbol};
use crate::encoding::{tokenize_runs, Token};

use super::rep_function::RepFunction;

/// `M_rep`: one transition per nonempty entry of the representative
/// function, labelled by the id of that entry's token set.
#[derive(Clone, Debug)]
pub struct CondensedAutomaton {
    base: Nfa,
    edges: Vec<(StateId, usize, StateId)>,
    substitution: Vec<Vec<Token>>,
}

pub fn build_condensed(m: &Nfa, rep: &RepFunction) -> CondensedAutomaton {
    let mut edges = Vec::new();
    let mut substitution = Vec::new();
    for ((p, q), toks) in rep.iter() {
        edges.push((p, substitution.len(), q));
        substitution.push(toks.to_vec());
    }
    CondensedAutomaton { base: m.clone(), edges, substitution }
}

impl CondensedAutomaton {
    pub fn base(&self) -> &Nfa {
        &self.base
    }

    pub fn edges(&self) -> &[(StateId, usize, StateId)] {
        &self.edges
    }

    pub fn substitution(&self, id: usize) -> &[Token] {
        &self.substitution[id]
    }

    /// Membership in `L(M̂)`. Words of `Enc` factor uniquely into tokens, so
    /// this is a token-level simulation over the condensed edges.
    pub fn contains_runs(&self, w: &RunWord) -> bool {
        let Ok(tokens) = tokenize_runs(w) else { return false };
        self.accepts_tokens(&tokens)
    }

    pub fn accepts_tokens(&self, tokens: &[Token]) -> bool {
        let n = self.base.num_states();
        let mut set = self.base.initial_set();
        for t in tokens {
            let mut next = StateSet::empty(n);
            for &(p, id, q) in &self.edges {
                if set.contains(p) && self.substitution[id].contains(t) {
                    next.insert(q);
                }
            }
            if next.is_empty() {
                return false;
            }
            set = next;
        }
        set.intersects(&self.base.final_set())
    }

    /// `M̂` as an ordinary automaton, each token spelled out as a chain of
    /// fresh states. `None` when some token is longer than `max_token_len`.
    pub fn expanded_nfa(&self, max_token_len: usize) -> Option<Nfa> {
        let mut num_states = self.base.num_states();
        let mut transitions: Vec<(StateId, Symbol, StateId)> = Vec::new();
        for &(p, id, q) in &self.edges {
            for t in &self.substitution[id] {
                let w = t.to_word(max_token_len)?;
                let syms = w.symbols();
                let mut cur = p;
                for (i, &s) in syms.iter().enumerate() {
                    let next = if i + 1 == syms.len() {
                        q
                    } else {
                        num_states += 1;
                        num_states - 1
                    };
                    transitions.push((cur, s, next));
                    cur = next;
                }
            }
        }
        Some(
            Nfa::new(num_states, self.base.initial(), self.base.finals().iter().copied(), transitions)
                .expect("fresh states are in range"),
        )
    }
}

/// `ℓ = |Q|² · (m+2) · m · 2n + n` for `m` distinct edge factors and token
/// length bound `n`.
pub fn core_length_formula(num_states: usize, edge_factors: usize, max_len: &BigUint) -> BigUint {
    let q2 = BigUint::from(num_states * num_states);
    let m = BigUint::from(edge_factors);
    &q2 * (&m + 2u32) * &m * 2u32 * max_len + max_len
}

/// Edge factors available in `rep`: a left token of some `rep(p, q)`
/// followed by a right token of some `rep(q, r)`.
pub fn edge_factors(rep: &RepFunction) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for ((_, q), toks) in rep.iter() {
        for l in toks.iter().filter_map(|t| match t {
            Token::LeftVertex(i) => Some(*i),
            _ => None,
        }) {
            for ((q2, _), toks2) in rep.iter() {
                if q2 != q {
                    continue;
                }
                for t in toks2 {
                    if let Token::RightVertex(j) = t {
                        out.insert((l, *j));
                    }
                }
            }
        }
    }
    out
}

pub fn core_length_bound(num_states: usize, rep: &RepFunction) -> BigUint {
    let n = rep.tokens().map(Token::len).max().unwrap_or_default();
    let n = if rep.is_empty() { BigUint::default() } else { n };
    core_length_formula(num_states, edge_factors(rep).len(), &n)
}

/// The bound as a machine integer when it fits.
pub fn core_length_bound_usize(num_states: usize, rep: &RepFunction) -> Option<usize> {
    core_length_bound(num_states, rep).to_usize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile_regex;

    #[test]
    fn length_formula_examples() {
        assert_eq!(core_length_formula(2, 1, &5u32.into()), BigUint::from(125u32));
        assert_eq!(core_length_formula(3, 2, &4u32.into()), BigUint::from(580u32));
        assert_eq!(core_length_bound(4, &RepFunction::new()), BigUint::default());
    }

    #[test]
    fn figure_edge_pair() {
        // Two condensed edges q_i -> q_{i+3} -> q_{i+8} on a 9-state skeleton.
        let m = Nfa::new(9, 0, [8], []).unwrap();
        let mut rep = RepFunction::new();
        for t in [Token::LeftVertex(1), Token::LeftVertex(4)] {
            rep.insert(0, 3, t);
        }
        for t in [Token::RightVertex(4), Token::RightVertex(5)] {
            rep.insert(3, 8, t);
        }
        let c = build_condensed(&m, &rep);
        assert_eq!(c.edges(), &[(0, 0, 3), (3, 1, 8)]);
        assert_eq!(c.substitution(0), &[Token::LeftVertex(1), Token::LeftVertex(4)]);
        assert_eq!(edge_factors(&rep).len(), 4);
        let exp = c.expanded_nfa(100).unwrap();
        for w in [">a#>aaaa$", ">aaaa#>aaaaa$"] {
            assert!(exp.contains(&w.parse().unwrap()));
        }
        assert!(!exp.contains(&">a#>a$".parse().unwrap()));
    }

    #[test]
    fn chain_with_singletons_is_one_word() {
        let m = compile_regex(">1$>a#>aa$").unwrap();
        let ts = super::super::TokenSets::new(&m);
        let rep = super::super::pick_threshold(&ts, &0u32.into()).union(&super::super::pick_merge(
            &ts,
            super::super::MergeScope::Both,
        ));
        let c = build_condensed(&m, &rep);
        let exp = c.expanded_nfa(100).unwrap();
        let words: Vec<_> = crate::automata::ShortlexIter::new(&exp).collect();
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].to_string(), ">1$>a#>aa$");
        let empty = build_condensed(&m, &RepFunction::new());
        assert!(empty.edges().is_empty());
    }
}
