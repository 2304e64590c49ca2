use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::encoding::{GraphInstance, RedBlueInstance};
use crate::graphs::{Graph, RbVertex, RedBlueGraph, Vertex};

use super::registry::{ProblemKind, ProblemSpec};

/// Evidence for a positive verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A vertex set whose meaning depends on the problem: the chosen set for
    /// cover, domination and packing problems, the removed set for deletion
    /// problems, one side for cuts.
    Vertices(Vec<Vertex>),
    /// An edge set: kept edges for subgraph problems, removed edges for
    /// deletion and cut problems.
    Edges(Vec<(Vertex, Vertex)>),
    Coloring(BTreeMap<Vertex, usize>),
    Partition(Vec<Vec<Vertex>>),
    EdgeColoring(BTreeMap<(Vertex, Vertex), usize>),
    RedBlue(Vec<RbVertex>),
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        match self {
            Certificate::Vertices(vs) => json!(vs),
            Certificate::Edges(es) => json!(es),
            Certificate::Coloring(c) => json!(c.iter().map(|(v, c)| [*v, *c]).collect::<Vec<_>>()),
            Certificate::Partition(p) => json!(p),
            Certificate::EdgeColoring(c) => json!(c.iter().map(|((u, v), c)| [*u, *v, *c]).collect::<Vec<_>>()),
            Certificate::RedBlue(vs) => json!(vs
                .iter()
                .map(|x| match x {
                    RbVertex::Red(v) => format!("r{v}"),
                    RbVertex::Blue(v) => format!("b{v}"),
                })
                .collect::<Vec<_>>()),
        }
    }
}

fn at_most(len: usize, k: &BigUint) -> bool {
    BigUint::from(len) <= *k
}

fn at_least(len: usize, k: &BigUint) -> bool {
    BigUint::from(len) >= *k
}

fn vertex_set(g: &Graph, vs: &[Vertex]) -> Option<BTreeSet<Vertex>> {
    let set: BTreeSet<Vertex> = vs.iter().copied().collect();
    (set.len() == vs.len() && set.iter().all(|v| g.has_vertex(*v))).then_some(set)
}

fn edge_set(g: &Graph, es: &[(Vertex, Vertex)]) -> Option<BTreeSet<(Vertex, Vertex)>> {
    let set: BTreeSet<(Vertex, Vertex)> = es.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    (set.len() == es.len() && set.iter().all(|&(u, v)| g.has_edge(u, v))).then_some(set)
}

fn without_vertices(g: &Graph, removed: &BTreeSet<Vertex>) -> Graph {
    let keep: BTreeSet<Vertex> = g.vertices().difference(removed).copied().collect();
    g.induced(&keep)
}

fn without_edges(g: &Graph, removed: &BTreeSet<(Vertex, Vertex)>) -> Graph {
    let edges = g.edges().difference(removed).copied();
    Graph::from_parts(g.vertices().iter().copied(), edges).expect("subgraph of a simple graph")
}

fn has_cycle(g: &Graph) -> bool {
    let mut seen = BTreeSet::new();
    for &root in g.vertices() {
        if seen.contains(&root) {
            continue;
        }
        let mut stack = vec![(root, None)];
        seen.insert(root);
        while let Some((v, parent)) = stack.pop() {
            for w in g.neighbors(v) {
                if Some(w) == parent {
                    continue;
                }
                if !seen.insert(w) {
                    return true;
                }
                stack.push((w, Some(v)));
            }
        }
    }
    false
}

fn proper(g: &Graph, coloring: &BTreeMap<Vertex, usize>) -> bool {
    g.vertices().iter().all(|v| coloring.contains_key(v)) && g.edges().iter().all(|(u, v)| coloring[u] != coloring[v])
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = BTreeMap::new();
    for &root in g.vertices() {
        if side.contains_key(&root) {
            continue;
        }
        side.insert(root, false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                match side.get(&w) {
                    Some(s) if *s == side[&v] => return false,
                    Some(_) => {}
                    None => {
                        side.insert(w, !side[&v]);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    true
}

fn closed(g: &Graph, v: Vertex) -> BTreeSet<Vertex> {
    let mut n = g.neighbors(v);
    n.insert(v);
    n
}

fn dominates_within(g: &Graph, set: &BTreeSet<Vertex>, radius: usize) -> bool {
    g.vertices().iter().all(|&v| distances(g, v).iter().any(|(w, d)| *d <= radius && set.contains(w)))
}

fn distances(g: &Graph, from: Vertex) -> BTreeMap<Vertex, usize> {
    let mut dist = BTreeMap::from([(from, 0)]);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if !dist.contains_key(&w) {
                dist.insert(w, dist[&v] + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn partition_ok(g: &Graph, parts: &[Vec<Vertex>], k: &BigUint, part_ok: impl Fn(&Graph) -> bool) -> bool {
    let all: Vec<Vertex> = parts.iter().flatten().copied().collect();
    let Some(set) = vertex_set(g, &all) else { return false };
    set.len() == g.num_vertices()
        && parts.iter().all(|p| !p.is_empty())
        && at_most(parts.len(), k)
        && parts.iter().all(|p| part_ok(&g.induced(&p.iter().copied().collect())))
}

/// Checks a certificate against a simple-graph instance using only the
/// problem definition.
pub fn verify_certificate(spec: &ProblemSpec, inst: &GraphInstance, cert: &Certificate) -> bool {
    let g = &inst.graph;
    let k = &inst.k;
    use Certificate as C;
    use ProblemKind as K;
    match (spec.kind, cert) {
        (K::VertexCover, C::Vertices(vs)) => vertex_set(g, vs).is_some_and(|s| {
            at_most(s.len(), k) && g.edges().iter().all(|(u, v)| s.contains(u) || s.contains(v))
        }),
        (K::ConnectedVertexCover, C::Vertices(vs)) => vertex_set(g, vs).is_some_and(|s| {
            at_most(s.len(), k)
                && g.edges().iter().all(|(u, v)| s.contains(u) || s.contains(v))
                && g.induced(&s).is_connected()
        }),
        (K::DominatingSet, C::Vertices(vs)) => {
            vertex_set(g, vs).is_some_and(|s| at_most(s.len(), k) && dominates_within(g, &s, 1))
        }
        (K::RDominatingSet(r), C::Vertices(vs)) => {
            vertex_set(g, vs).is_some_and(|s| at_most(s.len(), k) && dominates_within(g, &s, r))
        }
        (K::ConnectedDominatingSet, C::Vertices(vs)) => vertex_set(g, vs).is_some_and(|s| {
            at_most(s.len(), k) && dominates_within(g, &s, 1) && g.induced(&s).is_connected()
        }),
        (K::Radius, C::Vertices(vs)) => match vs.as_slice() {
            [c] if g.has_vertex(*c) => {
                let d = distances(g, *c);
                d.len() == g.num_vertices() && d.values().all(|x| BigUint::from(*x) <= *k)
            }
            _ => false,
        },
        (K::NearlyConnected, C::Vertices(vs)) => {
            vertex_set(g, vs).is_some_and(|s| at_most(s.len(), k) && without_vertices(g, &s).is_connected())
        }
        (K::PartitionIntoConnectedComponents, C::Partition(p)) => partition_ok(g, p, k, Graph::is_connected),
        (K::AcyclicInducedSubgraph, C::Vertices(vs)) => {
            vertex_set(g, vs).is_some_and(|s| at_least(s.len(), k) && !has_cycle(&g.induced(&s)))
        }
        (K::AcyclicSubgraph, C::Edges(es)) => edge_set(g, es).is_some_and(|s| {
            let removed: BTreeSet<_> = g.edges().difference(&s).copied().collect();
            at_least(s.len(), k) && !has_cycle(&without_edges(g, &removed))
        }),
        (K::BipartiteInducedSubgraph, C::Vertices(vs)) => {
            vertex_set(g, vs).is_some_and(|s| at_least(s.len(), k) && is_bipartite(&g.induced(&s)))
        }
        (K::BipartiteSubgraph, C::Edges(es)) => edge_set(g, es).is_some_and(|s| {
            let removed: BTreeSet<_> = g.edges().difference(&s).copied().collect();
            at_least(s.len(), k) && is_bipartite(&without_edges(g, &removed))
        }),
        (K::MaxCut, C::Vertices(vs)) => vertex_set(g, vs).is_some_and(|s| {
            let cut = g.edges().iter().filter(|(u, v)| s.contains(u) != s.contains(v)).count();
            at_least(cut, k)
        }),
        (K::IndependentSet, C::Vertices(vs)) => vertex_set(g, vs)
            .is_some_and(|s| at_least(s.len(), k) && g.edges().iter().all(|(u, v)| !(s.contains(u) && s.contains(v)))),
        (K::IrredundantSet, C::Vertices(vs)) => vertex_set(g, vs).is_some_and(|s| {
            at_least(s.len(), k)
                && s.iter().all(|&v| closed(g, v).into_iter().any(|u| closed(g, u).intersection(&s).eq([&v])))
        }),
        (K::Nonblocker, C::Vertices(vs)) => vertex_set(g, vs).is_some_and(|s| {
            dominates_within(g, &s, 1) && at_least(g.num_vertices() - s.len(), k)
        }),
        (K::SmallVertexDegree, C::Vertices(vs)) => match vs.as_slice() {
            [v] => g.has_vertex(*v) && BigUint::from(g.degree(*v)) <= k + 1u32,
            _ => false,
        },
        (K::Bipartiteness, C::Coloring(c)) | (K::FixedColoring(2), C::Coloring(c)) => {
            proper(g, c) && c.values().all(|x| *x < 2)
        }
        (K::FixedColoring(q), C::Coloring(c)) => proper(g, c) && c.values().all(|x| *x < q),
        (K::Coloring, C::Coloring(c)) => {
            proper(g, c) && c.values().all(|x| BigUint::from(*x) < *k) && c.len() == g.num_vertices()
        }
        (K::EdgeBipartization, C::Edges(es)) => {
            edge_set(g, es).is_some_and(|s| at_most(s.len(), k) && is_bipartite(&without_edges(g, &s)))
        }
        (K::FeedbackEdgeSet, C::Edges(es)) => {
            edge_set(g, es).is_some_and(|s| at_most(s.len(), k) && !has_cycle(&without_edges(g, &s)))
        }
        (K::FeedbackVertexSet, C::Vertices(vs)) => {
            vertex_set(g, vs).is_some_and(|s| at_most(s.len(), k) && !has_cycle(&without_vertices(g, &s)))
        }
        (K::OddCycleTransversal, C::Vertices(vs)) => {
            vertex_set(g, vs).is_some_and(|s| at_most(s.len(), k) && is_bipartite(&without_vertices(g, &s)))
        }
        (K::PartitionIntoForests, C::Partition(p)) => partition_ok(g, p, k, |h| !has_cycle(h)),
        (K::MonochromaticTriangle, C::EdgeColoring(c)) => {
            let complete = g.edges().iter().all(|e| c.get(e).is_some_and(|x| *x < 2)) && c.len() == g.num_edges();
            complete
                && g.edges().iter().all(|&(u, v)| {
                    g.neighbors(u).intersection(&g.neighbors(v)).all(|&w| {
                        let e = |a: Vertex, b: Vertex| c[&(a.min(b), a.max(b))];
                        !(e(u, v) == e(u, w) && e(u, v) == e(v, w))
                    })
                })
        }
        (K::MinCut, C::Edges(es)) => edge_set(g, es).is_some_and(|s| {
            k.to_usize() != Some(0) && at_most(s.len(), k) && !without_edges(g, &s).is_connected()
        }),
        _ => false,
    }
}

/// Checks a red-blue certificate: the listed vertices must dominate the
/// other color class within the budget `k`.
pub fn verify_red_blue_certificate(spec: &ProblemSpec, inst: &RedBlueInstance, cert: &Certificate) -> bool {
    let Certificate::RedBlue(chosen) = cert else { return false };
    let g: &RedBlueGraph = &inst.graph;
    let picks_red = match spec.kind {
        ProblemKind::RedBlueDominatingSet | ProblemKind::HittingSet => true,
        ProblemKind::SetCover => false,
        _ => return false,
    };
    let set: BTreeSet<RbVertex> = chosen.iter().copied().collect();
    let right_color = set.iter().all(|x| matches!(x, RbVertex::Red(_)) == picks_red && g.contains(*x));
    let targets: Vec<RbVertex> = if picks_red {
        g.blue().iter().map(|b| RbVertex::Blue(*b)).collect()
    } else {
        g.red().iter().map(|r| RbVertex::Red(*r)).collect()
    };
    right_color
        && set.len() == chosen.len()
        && at_most(set.len(), &inst.k)
        && targets.iter().all(|t| g.neighbors(*t).iter().any(|x| set.contains(x)))
}
