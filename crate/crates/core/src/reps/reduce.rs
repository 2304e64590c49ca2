use crate::automata::{Nfa, RunWord, Word};
use crate::encoding::{characteristic_factorization_runs, serialize_tokens};
use crate::error::Result;

/// Cuts loops between repeated states in front of left tokens until every
/// such state occurs once. The result has at most `2|Q| - 1` tokens, stays in
/// `L(m)`, keeps the threshold, and decodes to a subgraph of the original.
pub fn reduce_by_deletion(m: &Nfa, w: &Word) -> Result<Word> {
    let reduced = reduce_by_deletion_runs(m, &w.to_runs())?;
    Ok(reduced.to_word(w.len()).expect("reduction never lengthens"))
}

pub fn reduce_by_deletion_runs(m: &Nfa, w: &RunWord) -> Result<RunWord> {
    let f = characteristic_factorization_runs(m, w)?;
    let mut tokens = f.tokens;
    let mut states = f.states;
    // Boundary positions are the even indices 1, 3, 5, ... of `states`.
    loop {
        let boundaries: Vec<usize> = (1..states.len()).step_by(2).collect();
        let repeat = boundaries.iter().enumerate().find_map(|(bi, &b)| {
            boundaries[..bi].iter().find(|&&a| states[a] == states[b]).map(|&a| (a, b))
        });
        let Some((a, b)) = repeat else { break };
        tokens.drain(a..b);
        states.drain(a..b);
    }
    Ok(serialize_tokens(&tokens))
}
