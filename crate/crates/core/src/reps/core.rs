use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;

use crate::automata::{Nfa, RunWord, StateId, StateSet};
use crate::encoding::{serialize_tokens, GraphInstance, RedBlueInstance, Token};
use crate::error::{Error, Result};
use crate::graphs::{Graph, RedBlueGraph};

use super::rep_function::RepFunction;

/// How edge factors are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Interpretation {
    /// One vertex space; `i != j` gives the edge `{i, j}`.
    Simple,
    /// Left stems are red, right stems are blue.
    RedBlue,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoded {
    Simple(Graph),
    RedBlue(RedBlueGraph),
}

impl Decoded {
    fn empty(interp: Interpretation) -> Decoded {
        match interp {
            Interpretation::Simple => Decoded::Simple(Graph::new()),
            Interpretation::RedBlue => Decoded::RedBlue(RedBlueGraph::new()),
        }
    }

    fn add_factor(&mut self, i: usize, j: usize) {
        match self {
            Decoded::Simple(g) => {
                g.add_vertex(i);
                g.add_vertex(j);
                if i != j {
                    g.add_edge(i, j).expect("endpoints exist");
                }
            }
            Decoded::RedBlue(g) => {
                g.add_edge(i, j);
            }
        }
    }

    fn uses(&self, space: Space, x: usize) -> bool {
        match (self, space) {
            (Decoded::Simple(g), _) => g.has_vertex(x),
            (Decoded::RedBlue(g), Space::Left) => g.red().contains(&x),
            (Decoded::RedBlue(g), _) => g.blue().contains(&x),
        }
    }

    pub fn with_k(&self, k: BigUint) -> Instance {
        match self {
            Decoded::Simple(g) => Instance::Simple(GraphInstance { graph: g.clone(), k }),
            Decoded::RedBlue(g) => Instance::RedBlue(RedBlueInstance { graph: g.clone(), k }),
        }
    }
}

/// A decoded instance under either interpretation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Instance {
    Simple(GraphInstance),
    RedBlue(RedBlueInstance),
}

impl Instance {
    pub fn k(&self) -> &BigUint {
        match self {
            Instance::Simple(i) => &i.k,
            Instance::RedBlue(i) => &i.k,
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            Instance::Simple(i) => i.to_json_value(),
            Instance::RedBlue(i) => i.to_json_value(),
        }
    }
}

/// One instance of the core with the token path that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreEntry {
    pub instance: Instance,
    pub tokens: Vec<Token>,
    /// States at token boundaries, one longer than `tokens`.
    pub path: Vec<StateId>,
}

impl CoreEntry {
    pub fn witness(&self) -> RunWord {
        serialize_tokens(&self.tokens)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteCore {
    pub entries: Vec<CoreEntry>,
}

impl FiniteCore {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn instances(&self) -> BTreeSet<Instance> {
        self.entries.iter().map(|e| e.instance.clone()).collect()
    }

    /// `[{"graph": {...}, "k": N, "witness": "..."}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|e| {
                    let mut graph = e.instance.to_json_value();
                    let k = graph.as_object_mut().and_then(|o| o.remove("k")).unwrap_or_default();
                    serde_json::json!({"graph": graph, "k": k, "witness": e.witness().to_string()})
                })
                .collect(),
        )
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub interpretation: Interpretation,
    /// Only follow paths whose states before left tokens (and at the end)
    /// are pairwise distinct.
    pub distinct_left_boundaries: bool,
    /// Treat stems that occur in exactly the same table entries as
    /// interchangeable and open a fresh one only in increasing order.
    pub symmetry: bool,
    pub max_nodes: u64,
}

impl SearchOptions {
    pub fn exhaustive(interpretation: Interpretation, max_nodes: u64) -> Self {
        SearchOptions { interpretation, distinct_left_boundaries: false, symmetry: false, max_nodes }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Visit {
    Continue,
    Stop,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub instances: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Space {
    Shared,
    Left,
    Right,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    state: StateId,
    threshold: Option<BigUint>,
    pending: Option<usize>,
    decoded: Decoded,
    boundaries: Option<StateSet>,
}

struct Node {
    key: Key,
    parent: Option<usize>,
    token: Option<Token>,
}

/// Interchangeable stems, grouped by the set of table entries they occur in.
struct Symmetry {
    classes: BTreeMap<(Space, usize), Vec<usize>>,
}

impl Symmetry {
    fn new(rep: &RepFunction, interp: Interpretation) -> Symmetry {
        let mut sig: BTreeMap<(Space, usize), BTreeSet<(StateId, StateId, bool)>> = BTreeMap::new();
        for ((p, q), toks) in rep.iter() {
            for t in toks {
                let (space, x, left) = match (t, interp) {
                    (Token::LeftVertex(i), Interpretation::Simple) => (Space::Shared, *i, true),
                    (Token::RightVertex(i), Interpretation::Simple) => (Space::Shared, *i, false),
                    (Token::LeftVertex(i), Interpretation::RedBlue) => (Space::Left, *i, true),
                    (Token::RightVertex(i), Interpretation::RedBlue) => (Space::Right, *i, false),
                    (Token::Threshold(_), _) => continue,
                };
                sig.entry((space, x)).or_default().insert((p, q, left));
            }
        }
        let mut groups: BTreeMap<(Space, BTreeSet<(StateId, StateId, bool)>), Vec<usize>> = BTreeMap::new();
        for ((space, x), s) in &sig {
            groups.entry((*space, s.clone())).or_default().push(*x);
        }
        let mut classes = BTreeMap::new();
        for ((space, _), members) in groups {
            for &x in &members {
                classes.insert((space, x), members.clone());
            }
        }
        Symmetry { classes }
    }

    fn allows(&self, space: Space, x: usize, used: impl Fn(usize) -> bool) -> bool {
        if used(x) {
            return true;
        }
        let members = &self.classes[&(space, x)];
        members.iter().find(|&&y| !used(y)) == Some(&x)
    }
}

/// Breadth-first search over configurations of `M_rep`: state, threshold,
/// pending left stem and the graph decoded so far. Each new decoded
/// instance is passed to `visit` together with a fewest-token witness.
pub fn search_core(
    m: &Nfa,
    rep: &RepFunction,
    opts: &SearchOptions,
    mut visit: impl FnMut(&CoreEntry) -> Result<Visit>,
) -> Result<SearchStats> {
    let n = m.num_states();
    let mut out: Vec<Vec<(StateId, &[Token])>> = vec![Vec::new(); n];
    for ((p, q), toks) in rep.iter() {
        out[p].push((q, toks));
    }
    let symmetry = opts.symmetry.then(|| Symmetry::new(rep, opts.interpretation));
    let start = Key {
        state: m.initial(),
        threshold: None,
        pending: None,
        decoded: Decoded::empty(opts.interpretation),
        boundaries: opts.distinct_left_boundaries.then(|| StateSet::empty(n)),
    };
    let mut nodes = vec![Node { key: start.clone(), parent: None, token: None }];
    let mut seen: HashSet<Key> = HashSet::from([start]);
    let mut reported: HashSet<Instance> = HashSet::new();
    let mut queue = VecDeque::from([0usize]);
    let mut stats = SearchStats::default();
    while let Some(idx) = queue.pop_front() {
        stats.nodes += 1;
        if stats.nodes > opts.max_nodes {
            return Err(Error::SearchLimit { limit: opts.max_nodes });
        }
        let key = nodes[idx].key.clone();
        if m.is_final(key.state) && key.pending.is_none() {
            if let Some(k) = &key.threshold {
                let instance = key.decoded.with_k(k.clone());
                if reported.insert(instance.clone()) {
                    stats.instances += 1;
                    let (tokens, path) = trace(&nodes, idx);
                    if visit(&CoreEntry { instance, tokens, path })? == Visit::Stop {
                        return Ok(stats);
                    }
                }
            }
        }
        for &(q, toks) in &out[key.state] {
            for t in toks {
                let Some(next) = advance(&key, q, t, opts, symmetry.as_ref()) else { continue };
                if seen.insert(next.clone()) {
                    nodes.push(Node { key: next, parent: Some(idx), token: Some(t.clone()) });
                    queue.push_back(nodes.len() - 1);
                }
            }
        }
    }
    Ok(stats)
}

fn advance(key: &Key, q: StateId, t: &Token, opts: &SearchOptions, sym: Option<&Symmetry>) -> Option<Key> {
    let mut next = key.clone();
    next.state = q;
    let shared = opts.interpretation == Interpretation::Simple;
    match (t, &key.threshold, key.pending) {
        (Token::Threshold(k), None, None) => next.threshold = Some(k.clone()),
        (Token::LeftVertex(i), Some(_), None) => {
            let space = if shared { Space::Shared } else { Space::Left };
            if let Some(s) = sym {
                if !s.allows(space, *i, |y| key.decoded.uses(space, y)) {
                    return None;
                }
            }
            next.pending = Some(*i);
        }
        (Token::RightVertex(j), Some(_), Some(i)) => {
            let space = if shared { Space::Shared } else { Space::Right };
            if let Some(s) = sym {
                let used = |y| key.decoded.uses(space, y) || (shared && y == i);
                if !s.allows(space, *j, used) {
                    return None;
                }
            }
            next.pending = None;
            next.decoded.add_factor(i, *j);
        }
        _ => return None,
    }
    if next.pending.is_none() {
        if let Some(b) = &mut next.boundaries {
            if !b.insert(q) {
                return None;
            }
        }
    }
    Some(next)
}

fn trace(nodes: &[Node], mut idx: usize) -> (Vec<Token>, Vec<StateId>) {
    let mut tokens = Vec::new();
    let mut path = vec![nodes[idx].key.state];
    while let Some(parent) = nodes[idx].parent {
        tokens.push(nodes[idx].token.clone().expect("non-root node has a token"));
        path.push(nodes[parent].key.state);
        idx = parent;
    }
    tokens.reverse();
    path.reverse();
    (tokens, path)
}

/// The exact finite core `decode(L(M̂))`.
pub fn finite_core(m: &Nfa, rep: &RepFunction, interp: Interpretation, max_nodes: u64) -> Result<FiniteCore> {
    let mut entries = Vec::new();
    search_core(m, rep, &SearchOptions::exhaustive(interp, max_nodes), |e| {
        entries.push(e.clone());
        Ok(Visit::Continue)
    })?;
    Ok(FiniteCore { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile_regex;
    use crate::reps::{pick_merge, pick_threshold, MergeScope, TokenSets};

    fn core_of(pat: &str) -> FiniteCore {
        let m = compile_regex(pat).unwrap();
        let ts = TokenSets::new(&m);
        let rep = pick_threshold(&ts, &0u32.into()).union(&pick_merge(&ts, MergeScope::Both));
        finite_core(&m, &rep, Interpretation::Simple, 100_000).unwrap()
    }

    #[test]
    fn single_word_core() {
        let core = core_of(">1$>a#>aa$");
        assert_eq!(core.len(), 1);
        assert_eq!(core.entries[0].instance, Instance::Simple(GraphInstance::new(Graph::complete(2), 1u32)));
        assert_eq!(core.entries[0].witness().to_string(), ">1$>a#>aa$");
    }

    #[test]
    fn repetition_adds_nothing() {
        let core = core_of(">$(>a#>aa$)*");
        let expected: BTreeSet<Instance> = [
            Instance::Simple(GraphInstance::new(Graph::new(), 0u32)),
            Instance::Simple(GraphInstance::new(Graph::complete(2), 0u32)),
        ]
        .into();
        assert_eq!(core.instances(), expected);
    }

    #[test]
    fn empty_language_core() {
        let m = Nfa::empty();
        let core = finite_core(&m, &RepFunction::new(), Interpretation::Simple, 10).unwrap();
        assert!(core.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let m = compile_regex(">$(>a#>aa$)*").unwrap();
        let ts = TokenSets::new(&m);
        let rep = pick_threshold(&ts, &0u32.into()).union(&pick_merge(&ts, MergeScope::Both));
        assert!(matches!(finite_core(&m, &rep, Interpretation::Simple, 2), Err(Error::SearchLimit { limit: 2 })));
    }
}
