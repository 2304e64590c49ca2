use crate::automata::{compile_regex, Nfa, StateId, StateSet, Symbol, UnaryOrbit};
use crate::encoding::Token;

use super::index_set::IndexSet;

/// The token languages of an automaton over `Enc`, stored as eventually
/// periodic sets of block lengths.
///
/// `k(p)` holds the `j` with `>1^j$` in `L(M[q0, p])`; `left(p, q)` and
/// `right(p, q)` hold the `i` with `>a^i#` and `>a^i$` in `L(M[p, q])`. The
/// initial state only ever reads the threshold token, so vertex sets starting
/// there are empty even when `>$` would match both shapes.
#[derive(Clone, Debug)]
pub struct TokenSets {
    num_states: usize,
    initial: StateId,
    k: Vec<IndexSet>,
    left: Vec<Vec<IndexSet>>,
    right: Vec<Vec<IndexSet>>,
    stems: Vec<Vec<IndexSet>>,
}

fn orbit_sets(m: &Nfa, p: StateId, body: Symbol, ends: &[Symbol]) -> Vec<IndexSet> {
    let n = m.num_states();
    let opened = m.step(&StateSet::singleton(n, p), Symbol::Start);
    let orbit = UnaryOrbit::new(m, opened, body);
    let after: Vec<StateSet> = orbit
        .sets()
        .iter()
        .map(|s| {
            let mut out = StateSet::empty(n);
            for &e in ends {
                out.union_with(&m.step(s, e));
            }
            out
        })
        .collect();
    (0..n)
        .map(|q| IndexSet::new(after.iter().map(|s| s.contains(q)).collect(), orbit.preperiod(), orbit.period()))
        .collect()
}

impl TokenSets {
    pub fn new(m: &Nfa) -> TokenSets {
        let n = m.num_states();
        let q0 = m.initial();
        let k = orbit_sets(m, q0, Symbol::One, &[Symbol::Dollar]);
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        let mut stems = Vec::with_capacity(n);
        for p in 0..n {
            if p == q0 {
                left.push(vec![IndexSet::empty(); n]);
                right.push(vec![IndexSet::empty(); n]);
                stems.push(vec![IndexSet::empty(); n]);
                continue;
            }
            left.push(orbit_sets(m, p, Symbol::A, &[Symbol::Hash]));
            right.push(orbit_sets(m, p, Symbol::A, &[Symbol::Dollar]));
            stems.push(orbit_sets(m, p, Symbol::A, &[Symbol::Hash, Symbol::Dollar]));
        }
        TokenSets { num_states: n, initial: q0, k, left, right, stems }
    }

    /// Assembles token sets directly; `stems` is derived. Used for worked
    /// examples that are stated at the level of sets.
    pub fn from_parts(
        num_states: usize,
        initial: StateId,
        k: Vec<IndexSet>,
        left: Vec<Vec<IndexSet>>,
        right: Vec<Vec<IndexSet>>,
    ) -> TokenSets {
        let stems = (0..num_states)
            .map(|p| (0..num_states).map(|q| union(&left[p][q], &right[p][q])).collect())
            .collect();
        TokenSets { num_states, initial, k, left, right, stems }
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn k(&self, p: StateId) -> &IndexSet {
        &self.k[p]
    }

    pub fn left(&self, p: StateId, q: StateId) -> &IndexSet {
        &self.left[p][q]
    }

    pub fn right(&self, p: StateId, q: StateId) -> &IndexSet {
        &self.right[p][q]
    }

    /// Stems of `V^G[p, q]`: the `i` with `>a^i` in `V[p, q] / 1`.
    pub fn stems(&self, p: StateId, q: StateId) -> &IndexSet {
        &self.stems[p][q]
    }

    pub fn v_is_empty(&self, p: StateId, q: StateId) -> bool {
        self.stems[p][q].is_empty()
    }

    pub fn v_is_finite(&self, p: StateId, q: StateId) -> bool {
        self.left[p][q].is_finite() && self.right[p][q].is_finite()
    }

    /// Tokens of `V[p, q]` in shortlex order; unbounded for infinite sets.
    pub fn v_tokens(&self, p: StateId, q: StateId) -> impl Iterator<Item = Token> + '_ {
        let (l, r) = (&self.left[p][q], &self.right[p][q]);
        self.stems[p][q].iter().flat_map(move |i| {
            let a = l.contains(i).then_some(Token::LeftVertex(i));
            let b = r.contains(i).then_some(Token::RightVertex(i));
            a.into_iter().chain(b)
        })
    }

    /// Whether a token lies in `K[q0, q]` (thresholds) or `V[p, q]`.
    pub fn contains(&self, p: StateId, q: StateId, t: &Token) -> bool {
        match t {
            Token::Threshold(j) => p == self.initial && self.k[q].contains_big(j),
            Token::LeftVertex(i) => self.left[p][q].contains(*i),
            Token::RightVertex(i) => self.right[p][q].contains(*i),
        }
    }

    /// State pairs with a nonempty vertex-token set, in lexicographic order.
    pub fn v_pairs(&self) -> Vec<(StateId, StateId)> {
        let n = self.num_states;
        (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).filter(|&(p, q)| !self.v_is_empty(p, q)).collect()
    }
}

fn union(a: &IndexSet, b: &IndexSet) -> IndexSet {
    let pre = a.preperiod().max(b.preperiod());
    let per = lcm(a.period(), b.period());
    let flags = (0..pre + per).map(|i| a.contains(i) || b.contains(i)).collect();
    IndexSet::new(flags, pre, per)
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

/// `K[q0, p] = L(M[q0, p]) ∩ L(>1*$)` as an automaton.
pub fn k_nfa(m: &Nfa, p: StateId) -> Nfa {
    let thr = compile_regex(">1*$").expect("fixed pattern");
    m.sub_automaton(m.initial(), p).expect("state of m").intersect(&thr)
}

/// `V[p, q] = L(M[p, q]) ∩ L(>a*(#|$))` as an automaton, empty for `p = q0`.
pub fn v_nfa(m: &Nfa, p: StateId, q: StateId) -> Nfa {
    if p == m.initial() {
        return Nfa::empty();
    }
    let vtok = compile_regex(">a*(#|$)").expect("fixed pattern");
    m.sub_automaton(p, q).expect("state of m").intersect(&vtok)
}

/// `V^G[p, q] = V[p, q] / 1`.
pub fn vg_nfa(m: &Nfa, p: StateId, q: StateId) -> Nfa {
    v_nfa(m, p, q).strip_suffix(1)
}
