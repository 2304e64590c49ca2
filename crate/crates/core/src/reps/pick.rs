use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use crate::automata::{StateId, StateSet};
use crate::encoding::Token;

use super::index_set::IndexSet;
use super::rep_function::RepFunction;
use super::token_sets::TokenSets;

/// For every `p`: all of `K[q0, p]` when finite, else its smallest token of
/// length at least `k`.
pub fn pick_threshold(ts: &TokenSets, k: &BigUint) -> RepFunction {
    let mut rep = RepFunction::new();
    let q0 = ts.initial();
    let min_ones = if *k >= BigUint::from(2u32) { k - 2u32 } else { BigUint::from(0u32) };
    for p in 0..ts.num_states() {
        let set = ts.k(p);
        match set.members() {
            Some(all) => all.into_iter().for_each(|j| rep.insert(q0, p, Token::Threshold(j.into()))),
            None => {
                let j = set.first_at_least(&min_ones).expect("infinite set has large members");
                rep.insert(q0, p, Token::Threshold(j));
            }
        }
    }
    rep
}

/// Which vertex tokens take part in a merge pick.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MergeScope {
    /// Left and right tokens share one vertex space.
    Both,
    /// Left tokens only (red vertices).
    Left,
    /// Right tokens only (blue vertices).
    Right,
}

/// `pick_merge^G` on stem sets.
///
/// Writes `S(i)` for the set of pairs whose stem set contains `i`. Stem `x`
/// is picked for `(p, q)` iff `(p, q) ∈ S(x)` and `x` is the least `y` with
/// `S(y) ⊇ S(x)`; this is exactly the set of minima of the intersections
/// over all subsets of pairs containing `(p, q)`.
pub fn pick_merge_stems(sets: &[((StateId, StateId), IndexSet)]) -> BTreeMap<(StateId, StateId), Vec<usize>> {
    let pre = sets.iter().map(|(_, s)| s.preperiod()).max().unwrap_or(0);
    let per = sets.iter().map(|(_, s)| s.period()).fold(1, lcm);
    let mut firsts: Vec<(usize, StateSet)> = Vec::new();
    let mut seen: BTreeSet<StateSet> = BTreeSet::new();
    for i in 0..pre + per {
        let mut ty = StateSet::empty(sets.len());
        for (idx, (_, s)) in sets.iter().enumerate() {
            if s.contains(i) {
                ty.insert(idx);
            }
        }
        if !ty.is_empty() && seen.insert(ty.clone()) {
            firsts.push((i, ty));
        }
    }
    let mut out: BTreeMap<(StateId, StateId), Vec<usize>> = BTreeMap::new();
    for (j, (x, ty)) in firsts.iter().enumerate() {
        if firsts[..j].iter().any(|(_, earlier)| ty.is_subset(earlier)) {
            continue;
        }
        for idx in ty.iter() {
            out.entry(sets[idx].0).or_default().push(*x);
        }
    }
    out
}

/// `pick_merge` on the vertex-token sets restricted to `scope`.
pub fn pick_merge(ts: &TokenSets, scope: MergeScope) -> RepFunction {
    let stem_set = |p, q| match scope {
        MergeScope::Both => ts.stems(p, q).clone(),
        MergeScope::Left => ts.left(p, q).clone(),
        MergeScope::Right => ts.right(p, q).clone(),
    };
    let sets: Vec<((StateId, StateId), IndexSet)> = ts
        .v_pairs()
        .into_iter()
        .map(|(p, q)| ((p, q), stem_set(p, q)))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    let mut rep = RepFunction::new();
    for ((p, q), stems) in pick_merge_stems(&sets) {
        for x in stems {
            if scope != MergeScope::Right && ts.left(p, q).contains(x) {
                rep.insert(p, q, Token::LeftVertex(x));
            }
            if scope != MergeScope::Left && ts.right(p, q).contains(x) {
                rep.insert(p, q, Token::RightVertex(x));
            }
        }
    }
    rep
}

/// Finite vertex-token sets are copied; each infinite set, in lexicographic
/// pair order, contributes its `s` shortlex-first tokens of length at least
/// `t` whose stems occur in no finite set and in no earlier pick.
pub fn pick_separate(ts: &TokenSets, s: usize, t: usize) -> RepFunction {
    let pairs = ts.v_pairs();
    let mut excluded: BTreeSet<usize> = BTreeSet::new();
    for &(p, q) in &pairs {
        if let Some(stems) = ts.stems(p, q).members() {
            excluded.extend(stems);
        }
    }
    let min_stem = t.saturating_sub(2);
    let mut rep = RepFunction::new();
    for (p, q) in pairs {
        if ts.v_is_finite(p, q) {
            ts.v_tokens(p, q).for_each(|tok| rep.insert(p, q, tok));
            continue;
        }
        let picked: Vec<Token> = ts
            .v_tokens(p, q)
            .filter(|tok| {
                let i = tok.index().expect("vertex token");
                i >= min_stem && !excluded.contains(&i)
            })
            .take(s)
            .collect();
        for tok in picked {
            excluded.insert(tok.index().expect("vertex token"));
            rep.insert(p, q, tok);
        }
    }
    rep
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(members: &[usize]) -> IndexSet {
        IndexSet::finite(members)
    }

    /// States p=1, q=2, r=3 with the initial state 0 and no thresholds.
    fn worked_example() -> TokenSets {
        let n = 4;
        let e = IndexSet::empty();
        let mut left = vec![vec![e.clone(); n]; n];
        let mut right = vec![vec![e.clone(); n]; n];
        left[1][2] = set(&[1, 2]);
        right[2][3] = set(&[2, 3]);
        TokenSets::from_parts(n, 0, vec![e; n], left, right)
    }

    #[test]
    fn merge_worked_example() {
        let ts = worked_example();
        let rep = pick_merge(&ts, MergeScope::Both);
        assert_eq!(rep.get(1, 2), &[Token::LeftVertex(1), Token::LeftVertex(2)]);
        assert_eq!(rep.get(2, 3), &[Token::RightVertex(2)]);
        assert_eq!(rep.num_tokens(), 3);
    }

    #[test]
    fn merge_single_and_empty() {
        let n = 3;
        let e = IndexSet::empty();
        let mut left = vec![vec![e.clone(); n]; n];
        left[1][2] = set(&[1]);
        let ts = TokenSets::from_parts(n, 0, vec![e.clone(); n], left, vec![vec![e.clone(); n]; n]);
        assert_eq!(pick_merge(&ts, MergeScope::Both).get(1, 2), &[Token::LeftVertex(1)]);
        let none = TokenSets::from_parts(n, 0, vec![e.clone(); n], vec![vec![e.clone(); n]; n], vec![vec![e; n]; n]);
        assert!(pick_merge(&none, MergeScope::Both).is_empty());
    }

    #[test]
    fn threshold_examples() {
        let n = 2;
        let e = IndexSet::empty();
        let all = IndexSet::new(vec![true], 0, 1);
        let ts = TokenSets::from_parts(n, 0, vec![e.clone(), all], vec![vec![e.clone(); n]; n], vec![vec![e.clone(); n]; n]);
        assert_eq!(pick_threshold(&ts, &5u32.into()).get(0, 1), &[Token::threshold(3)]);
        assert_eq!(pick_threshold(&ts, &0u32.into()).get(0, 1), &[Token::threshold(0)]);
        let fin = TokenSets::from_parts(n, 0, vec![e.clone(), set(&[0, 1])], vec![vec![e.clone(); n]; n], vec![vec![e; n]; n]);
        assert_eq!(pick_threshold(&fin, &40u32.into()).get(0, 1), &[Token::threshold(0), Token::threshold(1)]);
    }

    #[test]
    fn separate_examples() {
        let n = 4;
        let e = IndexSet::empty();
        // >aa*$ : stems 1, 2, 3, ...
        let plus = IndexSet::new(vec![false, true], 1, 1);
        let mut right = vec![vec![e.clone(); n]; n];
        right[1][2] = plus.clone();
        right[2][3] = plus;
        let mut left = vec![vec![e.clone(); n]; n];
        left[3][1] = set(&[5]);
        let ts = TokenSets::from_parts(n, 0, vec![e; n], left, right);
        let rep = pick_separate(&ts, 2, 3);
        assert_eq!(rep.get(1, 2), &[Token::RightVertex(1), Token::RightVertex(2)]);
        assert_eq!(rep.get(2, 3), &[Token::RightVertex(3), Token::RightVertex(4)]);
        assert_eq!(rep.get(3, 1), &[Token::LeftVertex(5)]);
        let wide = pick_separate(&ts, 4, 3);
        assert_eq!(wide.get(2, 3), &[Token::RightVertex(6), Token::RightVertex(7), Token::RightVertex(8), Token::RightVertex(9)]);
    }
}
