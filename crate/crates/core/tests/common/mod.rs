#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use intreg::automata::{Nfa, StateId, Symbol, Word};
use intreg::graphs::{Graph, RedBlueGraph, Vertex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Parses `"0>1 111 1$2 |2"`: transitions `p c q` with single-digit states,
/// final states after `|`, initial state 0.
pub fn nfa(text: &str) -> Nfa {
    let (trans, finals) = text.split_once('|').expect("finals after |");
    let digit = |c: char| c.to_digit(10).expect("state digit") as StateId;
    let mut transitions = Vec::new();
    let mut max = 0;
    for t in trans.split_whitespace() {
        let cs: Vec<char> = t.chars().collect();
        assert_eq!(cs.len(), 3, "bad transition {t}");
        let (p, q) = (digit(cs[0]), digit(cs[2]));
        max = max.max(p).max(q);
        transitions.push((p, Symbol::from_char(cs[1]).expect("symbol"), q));
    }
    let finals: Vec<StateId> = finals.split_whitespace().map(|f| digit(f.chars().next().unwrap())).collect();
    max = finals.iter().copied().fold(max, usize::max);
    Nfa::new(max + 1, 0, finals, transitions).expect("valid automaton")
}

/// Hand-built automata of at most six states.
pub const SUITE: &[(&str, &str)] = &[
    ("sigma-star", "0>0 010 0$0 0a0 0#0 |0"),
    ("enc", "0>1 111 1$2 2>3 3a3 3#4 4>5 5a5 5$2 |2"),
    ("k-zero", "0>1 1$2 2>2 2a2 2#2 2$2 |2"),
    ("k-odd", "0>1 112 211 2$3 3>3 3a3 3#3 3$3 |3"),
    ("k-even", "0>1 112 211 1$3 3>3 3a3 3#3 3$3 |3"),
    ("k-exactly-one", "0>1 112 2$3 3>3 3a3 3#3 3$3 |3"),
    ("k-at-least-two", "0>1 112 213 313 3$4 4>4 4a4 4#4 4$4 |4"),
    ("k-mod-three", "0>1 112 213 311 1$4 4>4 4a4 4#4 4$4 |4"),
    ("k-zero-or-two", "0>1 1$3 112 214 4$3 3>3 3a3 3#3 3$3 |3"),
    ("stems-even", "0>1 111 1$2 2>3 3a4 4a3 3#2 3$2 |2"),
    ("stems-odd", "0>1 111 1$2 2>3 3a4 4a3 4#2 4$2 |2"),
    ("bipartite", "0>1 111 1$2 2>3 3a4 4a3 3#5 5>3 4$2 |2"),
    ("reverse-bipartite", "0>1 111 1$2 2>3 3a4 4a3 4#5 5>3 3$2 |2"),
    ("odd-graphs", "0>1 111 1$2 2>3 3a4 4a3 4#5 5>3 4$2 |2"),
    ("stems-at-most-two", "0>1 111 1$2 2>3 3a4 4a5 3#2 3$2 4#2 4$2 5#2 5$2 |2"),
    ("stems-at-least-two", "0>1 111 1$2 2>3 3a4 4a5 5a5 5#2 5$2 |2"),
    ("stems-zero", "0>1 111 1$2 2>3 3#2 3$2 |2"),
    ("k2-family", "0>0 010 0$1 1>1 1a2 2#3 3>3 3a4 4a5 5$1 |1"),
    ("stems-one-two", "0>0 010 0$1 1>1 1a2 2a3 2#1 2$1 3#1 3$1 |1"),
    ("stems-one-to-three", "0>0 010 0$1 1>1 1a2 2a3 3a4 2#1 2$1 3#1 3$1 4#1 4$1 |1"),
    ("single-edge", "0>0 010 0$1 1>1 1a2 2a3 2#1 3$1 |1"),
    ("positive-stems", "0>0 010 0$1 1>1 1a2 2a2 2#1 2$1 |1"),
    ("any-graph-k-zero", "0>0 0$1 1>1 1a1 1#1 1$1 |1"),
    ("even-factor-count", "0>1 111 1$2 2>3 3>3 3a3 3#3 3$4 4>4 4a4 4#4 4$2 |2"),
    ("at-most-one-factor", "0>1 111 1$2 2>3 3>3 3a3 3#3 3$4 |2 4"),
    ("exactly-three-dollars", "0>0 010 0a0 0#0 0$1 1>1 111 1a1 1#1 1$2 2>2 212 2a2 2#2 2$3 3>3 313 3a3 3#3 |3"),
    ("star-at-one", "0>0 010 0$1 1>1 1a2 2#3 3>3 3a3 3$1 |1"),
    ("star-at-zero", "0>0 010 0$1 1>2 2#3 3>3 3a3 3$1 |1"),
    ("star-at-one-reversed", "0>1 111 1$2 2>3 3a4 4#5 5>5 5a5 5$2 |2"),
    ("mixed-junk", "0>1 1a1 111 1#2 1$2 2>1 |2"),
    ("left-only", "0>1 111 1$2 2>3 3a3 3#2 |2"),
    ("threshold-only", "0>1 111 1$2 |2"),
    ("empty", "0a0 |0"),
    ("k0-enc", "0>1 1$2 2>3 3a3 3#4 4>5 5a5 5$2 |2"),
    ("k0-k2-family", "0>0 0$1 1>1 1a2 2#3 3>3 3a4 4a5 5$1 |1"),
    ("k0-single-edge", "0>0 0$1 1>1 1a2 2a3 2#1 3$1 |1"),
    ("k0-stems-one-two", "0>0 0$1 1>1 1a2 2a3 2#1 2$1 3#1 3$1 |1"),
    ("k0-positive-stems", "0>0 0$1 1>1 1a2 2a2 2#1 2$1 |1"),
    ("k0-stems-odd", "0>1 1$2 2>3 3a4 4a3 4#2 4$2 |2"),
    ("k0-bipartite", "0>1 1$2 2>3 3a4 4a3 3#5 5>3 4$2 |2"),
    ("k0-stems-zero-one", "0>1 1$2 2>3 3a4 3#2 3$2 4#2 4$2 |2"),
    ("k0-star-at-zero", "0>0 0$1 1>2 2#3 3>3 3a3 3$1 |1"),
    ("k1-star-at-one", "0>0 011 1$2 2>2 2a3 3#4 4>4 4a4 4$2 |2"),
    ("k0-nonempty-k2", "0>0 0$1 0a2 1>1 1a2 2#3 3>3 3a4 4a5 5$0 |0"),
    ("k0-nonempty-odd", "0>1 1$2 2>3 3a4 4a3 4#2 4$5 5>3 |5"),
    ("k0-nonempty-enc", "0>1 0>3 1$2 2>3 3a3 3#4 4>5 5a5 5$0 |0"),
];

pub fn suite() -> Vec<(&'static str, Nfa)> {
    SUITE.iter().map(|&(name, text)| (name, nfa(text))).collect()
}

/// Random automaton on `n` states; every transition is present with
/// probability `p`, start-symbol self-loops with probability `p_start`.
pub fn random_nfa(rng: &mut impl Rng, n: usize, p: f64, p_start: f64) -> Nfa {
    let mut transitions = Vec::new();
    for a in 0..n {
        for s in Symbol::ALL {
            for b in 0..n {
                let prob = if s == Symbol::Start && a == b { p_start } else { p };
                if rng.gen_bool(prob) {
                    transitions.push((a, s, b));
                }
            }
        }
    }
    let finals: Vec<StateId> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    Nfa::new(n, 0, finals, transitions).expect("valid automaton")
}

/// Random graph on vertices `1..=n` with `n` drawn from `1..=max_n`.
pub fn random_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.8);
    let mut g = Graph::new();
    for v in 1..=n {
        g.add_vertex(v);
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_red_blue(rng: &mut impl Rng, max_n: usize) -> RedBlueGraph {
    let r = rng.gen_range(1..max_n);
    let b = rng.gen_range(1..=max_n - r);
    let p = rng.gen_range(0.2..0.8);
    let mut edges = Vec::new();
    for x in 1..=r {
        for y in 1..=b {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    RedBlueGraph::from_parts(1..=r, 1..=b, edges)
}

fn subsets(vs: &[Vertex]) -> impl Iterator<Item = BTreeSet<Vertex>> + '_ {
    (0u32..1 << vs.len()).map(move |mask| (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect())
}

pub fn min_vertex_cover(g: &Graph) -> usize {
    let vs: Vec<Vertex> = g.vertices().iter().copied().collect();
    subsets(&vs)
        .filter(|s| g.edges().iter().all(|(u, v)| s.contains(u) || s.contains(v)))
        .map(|s| s.len())
        .min()
        .expect("all vertices form a cover")
}

pub fn max_independent_set(g: &Graph) -> usize {
    let vs: Vec<Vertex> = g.vertices().iter().copied().collect();
    subsets(&vs)
        .filter(|s| g.edges().iter().all(|(u, v)| !(s.contains(u) && s.contains(v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Fewest red vertices dominating all blue ones; `None` if impossible.
pub fn min_red_blue_dominating(g: &RedBlueGraph) -> Option<usize> {
    let reds: Vec<Vertex> = g.red().iter().copied().collect();
    subsets(&reds)
        .filter(|s| g.blue().iter().all(|b| g.edges().iter().any(|(r, b2)| b2 == b && s.contains(r))))
        .map(|s| s.len())
        .min()
}

/// Random word of `L(m)` for a trimmed `m`: a random walk of at least
/// `min_len` symbols completed by a shortest path to a final state.
pub fn random_word(m: &Nfa, rng: &mut impl Rng, min_len: usize) -> Option<Word> {
    if m.is_empty() {
        return None;
    }
    let n = m.num_states();
    let mut dist = vec![usize::MAX; n];
    let mut queue: VecDeque<StateId> = m.finals().iter().copied().collect();
    for &f in m.finals() {
        dist[f] = 0;
    }
    while let Some(q) = queue.pop_front() {
        for &(_, p) in m.predecessors(q) {
            if dist[p] == usize::MAX {
                dist[p] = dist[q] + 1;
                queue.push_back(p);
            }
        }
    }
    let mut word = Vec::new();
    let mut q = m.initial();
    while word.len() < min_len && !m.successors(q).is_empty() {
        let succ = m.successors(q);
        let (s, next) = succ[rng.gen_range(0..succ.len())];
        word.push(s);
        q = next;
    }
    while dist[q] > 0 {
        let &(s, next) = m.successors(q).iter().find(|&&(_, r)| dist[r] + 1 == dist[q])?;
        word.push(s);
        q = next;
    }
    Some(Word::from(word))
}
