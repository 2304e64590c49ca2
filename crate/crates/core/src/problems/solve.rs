use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::encoding::{GraphInstance, RedBlueInstance};
use crate::error::{Error, Result};
use crate::graphs::{DenseGraph, RbVertex, Vertex};
use crate::reps::Instance;

use super::budget::Budget;
use super::certificate::Certificate;
use super::registry::{Case, ProblemKind, ProblemSpec};
use super::solvers::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub positive: bool,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    fn yes(certificate: Certificate) -> Self {
        Verdict { positive: true, certificate: Some(certificate) }
    }

    fn bare(positive: bool) -> Self {
        Verdict { positive, certificate: None }
    }

    fn from_option<T>(found: Option<T>, cert: impl FnOnce(T) -> Certificate) -> Self {
        match found {
            Some(x) => Verdict::yes(cert(x)),
            None => Verdict::bare(false),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "positive": self.positive,
            "certificate": self.certificate.as_ref().map(Certificate::to_json),
        })
    }
}

/// Solves a simple-graph instance with the default search budget.
pub fn solve(spec: &ProblemSpec, inst: &GraphInstance) -> Result<Verdict> {
    solve_graph(spec, inst, &mut Budget::default())
}

/// Solves a red-blue instance with the default search budget.
pub fn solve_red_blue(spec: &ProblemSpec, inst: &RedBlueInstance) -> Result<Verdict> {
    solve_rb(spec, inst, &mut Budget::default())
}

/// Solves either kind of instance with a budget of `limit` search steps.
pub fn solve_instance(spec: &ProblemSpec, inst: &Instance, limit: u64) -> Result<Verdict> {
    let mut budget = Budget::new(limit);
    match inst {
        Instance::Simple(g) => solve_graph(spec, g, &mut budget),
        Instance::RedBlue(g) => solve_rb(spec, g, &mut budget),
    }
}

fn mismatch(spec: &ProblemSpec, what: &str) -> Error {
    Error::InvalidOperation(format!("problem `{}` does not take a {what} instance", spec.name))
}

fn solve_graph(spec: &ProblemSpec, inst: &GraphInstance, budget: &mut Budget) -> Result<Verdict> {
    if spec.require_supported()? == Case::RedBlueA {
        return Err(mismatch(spec, "simple-graph"));
    }
    let d = DenseGraph::new(&inst.graph)?;
    let (n, m) = (d.n(), d.edges().len());
    // Every problem saturates once k exceeds the instance size.
    let k = inst.k.to_usize().unwrap_or(usize::MAX).min(n + m + 1);
    let all = d.all();
    let vs = |mask: u64| Certificate::Vertices(d.ids_of(mask));
    let es = |idx: &mut dyn Iterator<Item = usize>| {
        Certificate::Edges(idx.map(|e| d.edges()[e]).map(|(i, j)| (d.id(i), d.id(j))).collect())
    };
    let parts = |masks: Vec<u64>| Certificate::Partition(masks.into_iter().map(|p| d.ids_of(p)).collect());
    let coloring = |class: &dyn Fn(usize) -> usize| {
        Certificate::Coloring((0..n).map(|i| (d.id(i), class(i))).collect::<BTreeMap<Vertex, usize>>())
    };
    let closed = closed_neighborhoods(&d);
    let forest = |s: u64| d.acyclic_within(s);
    let bipartite = |s: u64| two_coloring(&d, s).is_some();

    use ProblemKind as K;
    Ok(match spec.kind {
        K::Connectedness => Verdict::bare(d.connected_within(all)),
        K::Emptiness => Verdict::bare(m == 0),
        K::Forest => Verdict::bare(d.acyclic_within(all)),
        K::VertexCover => Verdict::from_option(vertex_cover(&d, k, budget)?, vs),
        K::ConnectedVertexCover => {
            let touched = d.edges().iter().fold(0u64, |acc, (i, j)| acc | 1 << i | 1 << j);
            let comps = components(&d, touched);
            if comps.len() > 1 {
                Verdict::bare(false)
            } else if k >= n {
                Verdict::yes(vs(comps.first().copied().unwrap_or(0)))
            } else {
                let covers = |s: u64| d.edges().iter().all(|(i, j)| s >> i & 1 == 1 || s >> j & 1 == 1);
                let ok = |s: u64| covers(s) && d.connected_within(s);
                smallest_subset(n, k, &ok, budget)?.map_or(Verdict::bare(false), |s| Verdict::yes(vs(s)))
            }
        }
        K::DominatingSet => Verdict::from_option(set_cover(all, &closed, k, budget)?, |c| vs(mask(&c))),
        K::RDominatingSet(r) => {
            let ball = balls(&d, r);
            Verdict::from_option(set_cover(all, &ball, k, budget)?, |c| vs(mask(&c)))
        }
        K::ConnectedDominatingSet => {
            if !d.connected_within(all) {
                Verdict::bare(false)
            } else if k >= n {
                Verdict::yes(vs(all))
            } else {
                let ok = |s: u64| d.connected_within(s) && bits(s).fold(0u64, |acc, i| acc | closed[i]) == all;
                smallest_subset(n, k, &ok, budget)?.map_or(Verdict::bare(false), |s| Verdict::yes(vs(s)))
            }
        }
        K::Diameter => {
            let ok = (0..n).all(|i| distances(&d, i).iter().all(|x| x.is_some_and(|x| x <= k)));
            Verdict::bare(ok)
        }
        K::Radius => {
            let center = (0..n).find(|&i| distances(&d, i).iter().all(|x| x.is_some_and(|x| x <= k)));
            Verdict::from_option(center, |c| vs(1 << c))
        }
        K::NearlyConnected => {
            let largest = components(&d, all).into_iter().rev().max_by_key(|c| c.count_ones()).unwrap_or(0);
            let removed = all & !largest;
            if removed.count_ones() as usize <= k {
                Verdict::yes(vs(removed))
            } else {
                Verdict::bare(false)
            }
        }
        K::PartitionIntoConnectedComponents => {
            let comps = components(&d, all);
            if comps.len() <= k {
                Verdict::yes(parts(comps))
            } else {
                Verdict::bare(false)
            }
        }
        K::AcyclicInducedSubgraph => Verdict::from_option(hereditary_at_least(&d, k, &forest, budget)?, vs),
        K::AcyclicSubgraph => {
            let kept = spanning_forest(&d);
            if kept.len() >= k {
                Verdict::yes(es(&mut kept.into_iter()))
            } else {
                Verdict::bare(false)
            }
        }
        K::BipartiteInducedSubgraph => Verdict::from_option(hereditary_at_least(&d, k, &bipartite, budget)?, vs),
        K::BipartiteSubgraph => Verdict::from_option(cut_at_least(&d, k, budget)?, |side| {
            es(&mut crossing(&d, side, true).into_iter())
        }),
        K::MaxCut => Verdict::from_option(cut_at_least(&d, k, budget)?, vs),
        K::IndependentSet => {
            let best = max_independent_set(&d, budget)?;
            if best.count_ones() as usize >= k {
                Verdict::yes(vs(best))
            } else {
                Verdict::bare(false)
            }
        }
        K::IrredundantSet => {
            let ok = |s: u64| irredundant(&closed, s);
            Verdict::from_option(hereditary_at_least(&d, k, &ok, budget)?, vs)
        }
        K::Nonblocker => {
            if k > n {
                Verdict::bare(false)
            } else {
                Verdict::from_option(set_cover(all, &closed, n - k, budget)?, |c| vs(mask(&c)))
            }
        }
        K::SmallVertexDegree => {
            let v = (0..n).find(|&i| d.adj(i).count_ones() as usize <= k.saturating_add(1));
            Verdict::from_option(v, |i| vs(1 << i))
        }
        K::Bipartiteness => {
            Verdict::from_option(two_coloring(&d, all), |side| coloring(&|i| (side >> i & 1) as usize))
        }
        K::Coloring => color_with(&d, k, budget, &coloring)?,
        K::FixedColoring(q) => color_with(&d, q, budget, &coloring)?,
        K::EdgeBipartization => {
            let target = m.saturating_sub(k);
            Verdict::from_option(cut_at_least(&d, target, budget)?, |side| {
                es(&mut crossing(&d, side, false).into_iter())
            })
        }
        K::FeedbackEdgeSet => {
            let kept = spanning_forest(&d);
            if m - kept.len() <= k {
                Verdict::yes(es(&mut (0..m).filter(|e| !kept.contains(e))))
            } else {
                Verdict::bare(false)
            }
        }
        K::FeedbackVertexSet => {
            let found = hereditary_at_least(&d, n.saturating_sub(k), &forest, budget)?;
            Verdict::from_option(found, |s| vs(all & !s))
        }
        K::OddCycleTransversal => {
            let found = hereditary_at_least(&d, n.saturating_sub(k), &bipartite, budget)?;
            Verdict::from_option(found, |s| vs(all & !s))
        }
        K::PartitionIntoForests => Verdict::from_option(partition_into(n, k, &forest, budget)?, parts),
        K::MonochromaticTriangle => Verdict::from_option(triangle_free_edge_coloring(&d, budget)?, |colors| {
            Certificate::EdgeColoring(
                d.edges().iter().zip(colors).map(|(&(i, j), c)| ((d.id(i), d.id(j)), c as usize)).collect(),
            )
        }),
        K::MinCut => {
            if k == 0 {
                Verdict::bare(false)
            } else {
                Verdict::from_option(small_cut(&d, k, budget)?, |side| es(&mut crossing(&d, side, true).into_iter()))
            }
        }
        K::RedBlueDominatingSet | K::HittingSet | K::SetCover => return Err(mismatch(spec, "simple-graph")),
        K::LargeVertexDegree | K::Tree | K::PathCover(_) | K::MaxLeafSpanningTree => {
            return Err(Error::Invariant(format!("unsupported problem `{}` reached a solver", spec.name)))
        }
    })
}

fn mask(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |acc, i| acc | 1 << i)
}

/// Indices of a spanning forest's edges in `d.edges()` order.
fn spanning_forest(d: &DenseGraph) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..d.n()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut kept = Vec::new();
    for (e, &(i, j)) in d.edges().iter().enumerate() {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a] = b;
            kept.push(e);
        }
    }
    kept
}

/// Edge indices crossing (or, with `across = false`, not crossing) `side`.
fn crossing(d: &DenseGraph, side: u64, across: bool) -> Vec<usize> {
    (0..d.edges().len())
        .filter(|&e| {
            let (i, j) = d.edges()[e];
            ((side >> i & 1) != (side >> j & 1)) == across
        })
        .collect()
}

/// The first subset of smallest size at most `k` accepted by `ok`.
fn smallest_subset(n: usize, k: usize, ok: &dyn Fn(u64) -> bool, budget: &mut Budget) -> Result<Option<u64>> {
    for size in 0..=k.min(n) {
        if let Some(s) = first_subset_of_size(n, size, ok, budget)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn color_with(
    d: &DenseGraph,
    colors: usize,
    budget: &mut Budget,
    coloring: &dyn Fn(&dyn Fn(usize) -> usize) -> Certificate,
) -> Result<Verdict> {
    let independent = |s: u64| bits(s).all(|i| d.adj(i) & s == 0);
    let found = partition_into(d.n(), colors.min(d.n()), &independent, budget)?;
    Ok(Verdict::from_option(found, |classes| {
        coloring(&|i| classes.iter().position(|c| c >> i & 1 == 1).expect("every vertex is colored"))
    }))
}

fn solve_rb(spec: &ProblemSpec, inst: &RedBlueInstance, budget: &mut Budget) -> Result<Verdict> {
    if spec.require_supported()? != Case::RedBlueA {
        return Err(mismatch(spec, "red-blue"));
    }
    let swap = spec.kind == ProblemKind::SetCover;
    let g = if swap { inst.graph.swap_colors() } else { inst.graph.clone() };
    let red: Vec<Vertex> = g.red().iter().copied().collect();
    let blue: Vec<Vertex> = g.blue().iter().copied().collect();
    if blue.len() > DenseGraph::MAX_VERTICES {
        return Err(Error::InvalidOperation(format!(
            "{} vertices to dominate, solvers accept at most {}",
            blue.len(),
            DenseGraph::MAX_VERTICES
        )));
    }
    let pos = |b: Vertex| blue.binary_search(&b).expect("blue endpoint");
    let covers: Vec<u64> = red
        .iter()
        .map(|&r| g.edges().iter().filter(|e| e.0 == r).fold(0u64, |acc, e| acc | 1 << pos(e.1)))
        .collect();
    let universe = if blue.len() == 64 { u64::MAX } else { (1u64 << blue.len()) - 1 };
    let k = inst.k.to_usize().unwrap_or(usize::MAX).min(red.len());
    let found = set_cover(universe, &covers, k, budget)?;
    Ok(Verdict::from_option(found, |chosen| {
        Certificate::RedBlue(
            chosen
                .into_iter()
                .map(|i| if swap { RbVertex::Blue(red[i]) } else { RbVertex::Red(red[i]) })
                .collect(),
        )
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{Graph, RedBlueGraph};
    use crate::problems::{lookup, verify_certificate, verify_red_blue_certificate};

    fn run(name: &str, g: &Graph, k: u32) -> Verdict {
        let spec = lookup(name).unwrap();
        let inst = GraphInstance::new(g.clone(), k);
        let v = solve(spec, &inst).unwrap();
        if let Some(c) = &v.certificate {
            assert!(verify_certificate(spec, &inst, c), "{name} {c:?}");
        }
        v
    }

    #[test]
    fn vertex_cover_on_triangle() {
        let t = Graph::complete(3);
        assert!(!run("vertex-cover", &t, 1).positive);
        let v = run("vertex-cover", &t, 2);
        assert_eq!(v.certificate, Some(Certificate::Vertices(vec![1, 2])));
    }

    #[test]
    fn independent_set_on_triangle() {
        let t = Graph::complete(3);
        assert!(run("independent-set", &t, 1).positive);
        assert!(!run("independent-set", &t, 2).positive);
    }

    #[test]
    fn emptiness_and_bipartiteness() {
        let edgeless = Graph::from_parts([1, 2, 3], []).unwrap();
        for k in [0, 1, 7] {
            assert!(run("emptiness", &edgeless, k).positive);
        }
        assert!(!run("bipartiteness", &Graph::cycle(5), 0).positive);
        assert!(run("bipartiteness", &Graph::cycle(6), 0).positive);
    }

    #[test]
    fn colorings() {
        let t = Graph::complete(3);
        assert!(!run("2-coloring", &t, 0).positive);
        assert!(run("3-coloring", &t, 0).positive);
        assert!(!run("coloring", &t, 2).positive);
        assert!(run("coloring", &t, 3).positive);
        assert!(run("coloring", &Graph::new(), 0).positive);
        assert!(!run("coloring", &Graph::from_parts([1], []).unwrap(), 0).positive);
    }

    #[test]
    fn mincut_needs_positive_k() {
        let two = Graph::from_parts([1, 2], []).unwrap();
        assert!(!run("mincut", &two, 0).positive);
        assert!(run("mincut", &two, 1).positive);
        assert!(!run("mincut", &Graph::complete(4), 2).positive);
        assert!(run("mincut", &Graph::complete(4), 3).positive);
        assert!(!run("mincut", &Graph::from_parts([1], []).unwrap(), 5).positive);
    }

    #[test]
    fn distance_problems() {
        let p = Graph::path(5);
        assert!(run("diameter", &p, 4).positive);
        assert!(!run("diameter", &p, 3).positive);
        assert!(run("radius", &p, 2).positive);
        assert!(!run("radius", &p, 1).positive);
        let split = Graph::from_parts([1, 2], []).unwrap();
        assert!(!run("diameter", &split, 100).positive);
        assert!(run("2-dominating-set", &p, 1).positive);
        assert!(!run("2-dominating-set", &Graph::path(6), 1).positive);
    }

    #[test]
    fn deletion_problems() {
        let k4 = Graph::complete(4);
        assert!(!run("feedback-vertex-set", &k4, 1).positive);
        assert!(run("feedback-vertex-set", &k4, 2).positive);
        assert!(!run("feedback-edge-set", &k4, 2).positive);
        assert!(run("feedback-edge-set", &k4, 3).positive);
        assert!(!run("odd-cycle-transversal", &k4, 1).positive);
        assert!(run("odd-cycle-transversal", &k4, 2).positive);
        assert!(!run("edge-bipartization", &k4, 1).positive);
        assert!(run("edge-bipartization", &k4, 2).positive);
        assert!(!run("partition-into-forests", &k4, 1).positive);
        assert!(run("partition-into-forests", &k4, 2).positive);
    }

    #[test]
    fn lower_bound_problems_on_paths() {
        let p = Graph::path(4);
        assert!(run("maxcut", &p, 3).positive);
        assert!(!run("maxcut", &p, 4).positive);
        assert!(run("nonblocker", &p, 2).positive);
        assert!(!run("nonblocker", &p, 3).positive);
        assert!(run("irredundant-set", &p, 2).positive);
        assert!(run("acyclic-induced-subgraph", &Graph::complete(4), 2).positive);
        assert!(!run("acyclic-induced-subgraph", &Graph::complete(4), 3).positive);
        assert!(run("small-vertex-degree", &Graph::complete(4), 2).positive);
        assert!(!run("small-vertex-degree", &Graph::complete(4), 1).positive);
    }

    #[test]
    fn monochromatic_triangle() {
        assert!(run("monochromatic-triangle", &Graph::complete(5), 0).positive);
        assert!(!run("monochromatic-triangle", &Graph::complete(6), 0).positive);
    }

    #[test]
    fn red_blue_examples() {
        let g = RedBlueGraph::from_parts([1, 2], [1], [(1, 1), (2, 1)]);
        let rbds = lookup("rbds").unwrap();
        let yes = solve_red_blue(rbds, &RedBlueInstance::new(g.clone(), 1u32)).unwrap();
        assert!(yes.positive);
        assert!(verify_red_blue_certificate(rbds, &RedBlueInstance::new(g.clone(), 1u32), yes.certificate.as_ref().unwrap()));
        assert!(!solve_red_blue(rbds, &RedBlueInstance::new(g.clone(), 0u32)).unwrap().positive);
        let sc = lookup("set-cover").unwrap();
        for k in 0u32..3 {
            let direct = solve_red_blue(sc, &RedBlueInstance::new(g.clone(), k)).unwrap().positive;
            let swapped = solve_red_blue(rbds, &RedBlueInstance::new(g.swap_colors(), k)).unwrap().positive;
            assert_eq!(direct, swapped);
        }
    }

    #[test]
    fn kind_mismatch_and_budget() {
        let g = GraphInstance::new(Graph::complete(3), 1u32);
        assert!(solve(lookup("rbds").unwrap(), &g).is_err());
        assert!(matches!(solve(lookup("tree").unwrap(), &g), Err(Error::Unsupported { .. })));
        let big = Instance::Simple(GraphInstance::new(Graph::complete(12), 8u32));
        assert!(matches!(
            solve_instance(lookup("vertex-cover").unwrap(), &big, 3),
            Err(Error::SearchLimit { limit: 3 })
        ));
    }
}
