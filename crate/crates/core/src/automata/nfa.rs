use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::symbol::{RunWord, Symbol, Word};
use super::unary::UnaryOrbit;
use crate::error::{Error, Result};

pub type StateId = usize;

/// Right operands of [`Nfa::is_subset`] above this many states are refused.
pub const DEFAULT_DETERMINIZATION_BOUND: usize = 12;

/// A set of states as a fixed-width bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    bits: Vec<u64>,
}

impl StateSet {
    pub fn empty(n: usize) -> Self {
        StateSet { bits: vec![0; n.div_ceil(64).max(1)] }
    }

    pub fn singleton(n: usize, q: StateId) -> Self {
        let mut s = StateSet::empty(n);
        s.insert(q);
        s
    }

    pub fn insert(&mut self, q: StateId) -> bool {
        let (w, b) = (q / 64, q % 64);
        let fresh = self.bits[w] & (1 << b) == 0;
        self.bits[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, q: StateId) -> bool {
        self.bits.get(q / 64).is_some_and(|w| w & (1 << (q % 64)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word & (1u64 << b) != 0).map(move |b| w * 64 + b)
        })
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Epsilon-free nondeterministic automaton with states `0..n`.
///
/// Values are immutable; every operation builds a fresh automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    num_states: usize,
    initial: StateId,
    finals: BTreeSet<StateId>,
    transitions: BTreeSet<(StateId, Symbol, StateId)>,
    out: Vec<Vec<(Symbol, StateId)>>,
    inc: Vec<Vec<(Symbol, StateId)>>,
}

/// Serialized form: `{"states": n, "initial": 0, "finals": [..], "transitions": [[src, "a", dst], ..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NfaJson {
    pub states: usize,
    pub initial: StateId,
    pub finals: Vec<StateId>,
    pub transitions: Vec<(StateId, String, StateId)>,
}

impl Nfa {
    pub fn new(
        num_states: usize,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
    ) -> Result<Nfa> {
        if num_states == 0 {
            return Err(Error::InvalidAutomaton("an automaton needs at least one state".into()));
        }
        let check = |q: StateId| if q < num_states { Ok(q) } else { Err(Error::UnknownState(q)) };
        check(initial)?;
        let finals = finals.into_iter().map(check).collect::<Result<BTreeSet<_>>>()?;
        let transitions = transitions
            .into_iter()
            .map(|(p, s, q)| Ok((check(p)?, s, check(q)?)))
            .collect::<Result<BTreeSet<_>>>()?;
        let mut out = vec![Vec::new(); num_states];
        let mut inc = vec![Vec::new(); num_states];
        for &(p, s, q) in &transitions {
            out[p].push((s, q));
            inc[q].push((s, p));
        }
        Ok(Nfa { num_states, initial, finals, transitions, out, inc })
    }

    /// The automaton with the empty language: one non-accepting state.
    pub fn empty() -> Nfa {
        Nfa::new(1, 0, [], []).expect("valid")
    }

    /// Chain automaton accepting exactly `word`.
    pub fn from_word(word: &Word) -> Nfa {
        let n = word.len();
        let transitions = word.symbols().iter().enumerate().map(|(i, &s)| (i, s, i + 1));
        Nfa::new(n + 1, 0, [n], transitions).expect("valid")
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        self.transitions.iter().copied()
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    /// Outgoing transitions of `q`, ordered by symbol then target.
    pub fn successors(&self, q: StateId) -> &[(Symbol, StateId)] {
        &self.out[q]
    }

    pub fn predecessors(&self, q: StateId) -> &[(Symbol, StateId)] {
        &self.inc[q]
    }

    pub fn final_set(&self) -> StateSet {
        let mut s = StateSet::empty(self.num_states);
        for &q in &self.finals {
            s.insert(q);
        }
        s
    }

    pub fn initial_set(&self) -> StateSet {
        StateSet::singleton(self.num_states, self.initial)
    }

    pub fn step(&self, from: &StateSet, sym: Symbol) -> StateSet {
        let mut next = StateSet::empty(self.num_states);
        for p in from.iter() {
            for &(s, q) in &self.out[p] {
                if s == sym {
                    next.insert(q);
                }
            }
        }
        next
    }

    /// All predecessors of `to` over any symbol.
    pub fn step_back_any(&self, to: &StateSet) -> StateSet {
        let mut prev = StateSet::empty(self.num_states);
        for q in to.iter() {
            for &(_, p) in &self.inc[q] {
                prev.insert(p);
            }
        }
        prev
    }

    pub fn run(&self, from: &StateSet, word: &[Symbol]) -> StateSet {
        word.iter().fold(from.clone(), |set, &s| self.step(&set, s))
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.run(&self.initial_set(), word.symbols()).intersects(&self.final_set())
    }

    /// Membership for run-length words; long runs are jumped over using the
    /// eventual periodicity of the state-set sequence under a fixed symbol.
    pub fn accepts_runs(&self, word: &RunWord) -> bool {
        self.run_runs(&self.initial_set(), word).intersects(&self.final_set())
    }

    /// [`Nfa::run`] for run-length words.
    pub fn run_runs(&self, from: &StateSet, word: &RunWord) -> StateSet {
        let mut set = from.clone();
        for (sym, count) in word.runs() {
            if set.is_empty() {
                break;
            }
            set = self.step_power(&set, *sym, count);
        }
        set
    }

    fn step_power(&self, from: &StateSet, sym: Symbol, count: &BigUint) -> StateSet {
        if let Some(c) = count.to_usize().filter(|c| *c <= 64) {
            return (0..c).fold(from.clone(), |s, _| self.step(&s, sym));
        }
        UnaryOrbit::new(self, from.clone(), sym).at(count).clone()
    }

    fn forward_reachable(&self) -> StateSet {
        let mut seen = self.initial_set();
        let mut queue = VecDeque::from([self.initial]);
        while let Some(p) = queue.pop_front() {
            for &(_, q) in &self.out[p] {
                if seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        seen
    }

    fn backward_reachable(&self) -> StateSet {
        let mut seen = self.final_set();
        let mut queue: VecDeque<StateId> = self.finals.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            for &(_, p) in &self.inc[q] {
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// Restricts to states that are reachable and co-reachable, renumbering
    /// in increasing order of the old ids. An empty language yields
    /// [`Nfa::empty`].
    pub fn trim(&self) -> Nfa {
        let fwd = self.forward_reachable();
        let bwd = self.backward_reachable();
        let keep: Vec<StateId> = (0..self.num_states).filter(|&q| fwd.contains(q) && bwd.contains(q)).collect();
        if !keep.contains(&self.initial) {
            return Nfa::empty();
        }
        let mut map = vec![usize::MAX; self.num_states];
        for (i, &q) in keep.iter().enumerate() {
            map[q] = i;
        }
        let finals = self.finals.iter().filter(|q| map[**q] != usize::MAX).map(|q| map[*q]);
        let transitions = self
            .transitions
            .iter()
            .filter(|(p, _, q)| map[*p] != usize::MAX && map[*q] != usize::MAX)
            .map(|&(p, s, q)| (map[p], s, map[q]));
        Nfa::new(keep.len(), map[self.initial], finals, transitions).expect("renumbering is valid")
    }

    pub fn is_trim(&self) -> bool {
        let fwd = self.forward_reachable();
        let bwd = self.backward_reachable();
        (0..self.num_states).all(|q| fwd.contains(q) && bwd.contains(q))
    }

    /// Product automaton for `L(self) ∩ L(other)`, trimmed.
    pub fn intersect(&self, other: &Nfa) -> Nfa {
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut order = vec![(self.initial, other.initial)];
        index.insert((self.initial, other.initial), 0);
        let mut transitions = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let (p, q) = order[i];
            for &(s, p2) in &self.out[p] {
                for &(t, q2) in &other.out[q] {
                    if s != t {
                        continue;
                    }
                    let next = *index.entry((p2, q2)).or_insert_with(|| {
                        order.push((p2, q2));
                        order.len() - 1
                    });
                    transitions.push((i, s, next));
                }
            }
            i += 1;
        }
        let finals = order
            .iter()
            .enumerate()
            .filter(|(_, (p, q))| self.is_final(*p) && other.is_final(*q))
            .map(|(i, _)| i);
        Nfa::new(order.len(), 0, finals, transitions).expect("product is valid").trim()
    }

    /// `M[p, q]`: same transitions, initial `p`, single final `q`.
    pub fn sub_automaton(&self, p: StateId, q: StateId) -> Result<Nfa> {
        for s in [p, q] {
            if s >= self.num_states {
                return Err(Error::UnknownState(s));
            }
        }
        Ok(Nfa {
            num_states: self.num_states,
            initial: p,
            finals: BTreeSet::from([q]),
            transitions: self.transitions.clone(),
            out: self.out.clone(),
            inc: self.inc.clone(),
        })
    }

    /// Same structure with a different final-state set.
    pub fn with_finals(&self, finals: impl IntoIterator<Item = StateId>) -> Result<Nfa> {
        Nfa::new(self.num_states, self.initial, finals, self.transitions.iter().copied())
    }

    pub fn is_empty(&self) -> bool {
        !self.forward_reachable().intersects(&self.final_set())
    }

    /// True iff the language is finite, i.e. the trimmed automaton is acyclic.
    pub fn is_finite(&self) -> bool {
        let t = self.trim();
        if t.finals.is_empty() {
            return true;
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut color = vec![0u8; t.num_states];
        for root in 0..t.num_states {
            if color[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            color[root] = 1;
            while let Some((p, i)) = stack.pop() {
                if i < t.out[p].len() {
                    stack.push((p, i + 1));
                    let q = t.out[p][i].1;
                    match color[q] {
                        0 => {
                            color[q] = 1;
                            stack.push((q, 0));
                        }
                        1 => return false,
                        _ => {}
                    }
                } else {
                    color[p] = 2;
                }
            }
        }
        true
    }

    /// Length of the longest accepted word, `None` for infinite or empty languages.
    pub fn max_word_len(&self) -> Option<usize> {
        if self.is_empty() || !self.is_finite() {
            return None;
        }
        let t = self.trim();
        let mut memo: Vec<Option<usize>> = vec![None; t.num_states];
        fn longest(t: &Nfa, q: StateId, memo: &mut Vec<Option<usize>>) -> usize {
            if let Some(v) = memo[q] {
                return v;
            }
            let v = t.out[q].iter().map(|&(_, r)| 1 + longest(t, r, memo)).max().unwrap_or(0);
            memo[q] = Some(v);
            v
        }
        Some(longest(&t, t.initial, &mut memo))
    }

    /// `L / k`: words that become accepted after appending some `k` symbols.
    pub fn strip_suffix(&self, k: usize) -> Nfa {
        let mut target = self.final_set();
        for _ in 0..k {
            target = self.step_back_any(&target);
        }
        Nfa::new(self.num_states, self.initial, target.iter(), self.transitions.iter().copied())
            .expect("same states")
            .trim()
    }

    /// Decides `L(self) ⊆ L(other)` by exploring the product of `self` with the
    /// subset construction of `other`. Refuses `other` above `bound` states.
    pub fn is_subset(&self, other: &Nfa, bound: usize) -> Result<bool> {
        if other.num_states > bound {
            return Err(Error::DeterminizationBound { states: other.num_states, bound });
        }
        let other_finals = other.final_set();
        let start = (self.initial, other.initial_set());
        let mut seen: HashSet<(StateId, StateSet)> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some((p, set)) = queue.pop_front() {
            if self.is_final(p) && !set.intersects(&other_finals) {
                return Ok(false);
            }
            for &(s, p2) in &self.out[p] {
                let next = (p2, other.step(&set, s));
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(true)
    }

    pub fn accepts_empty_word(&self) -> bool {
        self.is_final(self.initial)
    }

    pub fn to_json(&self) -> NfaJson {
        NfaJson {
            states: self.num_states,
            initial: self.initial,
            finals: self.finals.iter().copied().collect(),
            transitions: self.transitions.iter().map(|&(p, s, q)| (p, s.to_string(), q)).collect(),
        }
    }

    pub fn from_json(json: &NfaJson) -> Result<Nfa> {
        let transitions = json
            .transitions
            .iter()
            .map(|(p, s, q)| {
                let mut chars = s.chars();
                match (chars.next().and_then(Symbol::from_char), chars.next()) {
                    (Some(sym), None) => Ok((*p, sym, *q)),
                    _ => Err(Error::InvalidAutomaton(format!("bad transition symbol {s:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Nfa::new(json.states, json.initial, json.finals.iter().copied(), transitions)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Nfa> {
        let json: NfaJson = serde_json::from_str(s)?;
        Nfa::from_json(&json)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile_regex;

    fn re(p: &str) -> Nfa {
        compile_regex(p).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn intersect_examples() {
        let m = re(">1*$").intersect(&re(">11*$"));
        assert!(!m.contains(&w(">$")));
        assert!(m.contains(&w(">1$")));
        assert!(m.contains(&w(">11$")));
        let eps = re("a*").intersect(&re("$*"));
        assert!(eps.contains(&Word::new()));
        assert!(!eps.contains(&w("a")));
        assert!(eps.is_finite());
        assert_eq!(eps.max_word_len(), Some(0));
    }

    #[test]
    fn trim_examples() {
        // 0 -a-> 1 (final), 2 unreachable, 0 -$-> 3 dead end
        let m = Nfa::new(4, 0, [1], [(0, Symbol::A, 1), (2, Symbol::A, 1), (0, Symbol::Dollar, 3)]).unwrap();
        let t = m.trim();
        assert_eq!(t.num_states(), 2);
        assert!(t.contains(&w("a")));
        assert_eq!(t.trim(), t);
        let dead = Nfa::new(2, 0, [], [(0, Symbol::A, 1)]).unwrap().trim();
        assert_eq!(dead, Nfa::empty());
        assert!(dead.is_empty());
    }

    #[test]
    fn sub_automaton_examples() {
        let m = re(">1*$");
        let union: Vec<Nfa> = m.finals().iter().map(|&q| m.sub_automaton(m.initial(), q).unwrap()).collect();
        for word in [">$", ">1$", ">1111$", ">", "$"] {
            let any = union.iter().any(|s| s.contains(&w(word)));
            assert_eq!(any, m.contains(&w(word)));
        }
        let chain = Nfa::from_word(&w(">$"));
        let loopless = chain.sub_automaton(1, 1).unwrap();
        assert!(loopless.contains(&Word::new()));
        assert!(loopless.is_finite());
        assert_eq!(loopless.trim().num_states(), 1);
        assert!(chain.sub_automaton(2, 0).unwrap().is_empty());
        assert!(matches!(chain.sub_automaton(0, 9), Err(Error::UnknownState(9))));
    }

    #[test]
    fn emptiness_and_finiteness() {
        assert!(!re(">1*$").is_empty());
        assert!(!re(">1*$").is_finite());
        assert!(re(">1$").is_finite());
        assert!(Nfa::new(2, 0, [1], []).unwrap().is_empty());
    }

    #[test]
    fn strip_suffix_examples() {
        let s = re(">a*#").strip_suffix(1);
        for word in [">", ">a", ">aaa"] {
            assert!(s.contains(&w(word)));
        }
        assert!(!s.contains(&w(">a#")));
        let s2 = re(">1$").strip_suffix(2);
        assert!(s2.contains(&w(">")));
        assert!(!s2.contains(&w(">1")));
        assert!(re(">$").strip_suffix(3).is_empty());
    }

    #[test]
    fn subset_examples() {
        assert!(re(">1$").is_subset(&re(">1*$"), 12).unwrap());
        assert!(!re(">1*$").is_subset(&re(">1$"), 12).unwrap());
        let big = Nfa::from_word(&w(">aaaaaaaaaaaaaa$"));
        assert!(matches!(re(">$").is_subset(&big, 12), Err(Error::DeterminizationBound { .. })));
    }

    #[test]
    fn run_membership_jumps_long_runs() {
        let m = re(">(11)*1$");
        let odd: RunWord = ">1{1000001}$".parse().unwrap();
        let even: RunWord = ">1{1000000}$".parse().unwrap();
        assert!(m.accepts_runs(&odd));
        assert!(!m.accepts_runs(&even));
        let huge: RunWord = format!(">1{{{}}}$", BigUint::from(2u32).pow(200) + 1u32).parse().unwrap();
        assert!(m.accepts_runs(&huge));
    }

    #[test]
    fn json_round_trip_and_errors() {
        let m = re(">1*$(>a#>aa$)*");
        let back = Nfa::from_json_str(&m.to_json_string()).unwrap();
        assert_eq!(back, m);
        let bad = r#"{"states":2,"initial":0,"finals":[1],"transitions":[[0,"b",1]]}"#;
        assert!(Nfa::from_json_str(bad).is_err());
        let oob = r#"{"states":2,"initial":0,"finals":[3],"transitions":[]}"#;
        assert!(matches!(Nfa::from_json_str(oob), Err(Error::UnknownState(3))));
    }
}
