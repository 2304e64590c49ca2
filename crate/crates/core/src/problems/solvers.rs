//! Exact search routines over [`DenseGraph`] bitmasks. Sets are `u64` masks
//! of vertex positions; callers translate back to vertex ids.

use crate::error::Result;
use crate::graphs::DenseGraph;

use super::budget::Budget;

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            i
        })
    })
}

fn ones(mask: u64) -> usize {
    mask.count_ones() as usize
}

pub(crate) fn closed_neighborhoods(d: &DenseGraph) -> Vec<u64> {
    (0..d.n()).map(|i| d.adj(i) | 1 << i).collect()
}

/// Ball of radius `r` around every vertex.
pub(crate) fn balls(d: &DenseGraph, r: usize) -> Vec<u64> {
    (0..d.n())
        .map(|i| {
            let mut ball = 1u64 << i;
            for _ in 0..r {
                ball |= bits(ball).fold(0, |acc, j| acc | d.adj(j));
            }
            ball
        })
        .collect()
}

/// BFS distances from `i`; `None` for unreachable positions.
pub(crate) fn distances(d: &DenseGraph, i: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; d.n()];
    dist[i] = Some(0);
    let mut frontier = 1u64 << i;
    let mut seen = frontier;
    let mut level = 0;
    while frontier != 0 {
        level += 1;
        let next = bits(frontier).fold(0, |acc, j| acc | d.adj(j)) & !seen;
        for j in bits(next) {
            dist[j] = Some(level);
        }
        seen |= next;
        frontier = next;
    }
    dist
}

pub(crate) fn components(d: &DenseGraph, mask: u64) -> Vec<u64> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let mut seen = rest & rest.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = d.adj(i) & mask & !seen;
            seen |= new;
            frontier |= new;
        }
        rest &= !seen;
        out.push(seen);
    }
    out
}

/// A proper 2-coloring of the subgraph induced by `mask` as the mask of
/// color-1 vertices.
pub(crate) fn two_coloring(d: &DenseGraph, mask: u64) -> Option<u64> {
    let mut side = 0u64;
    for comp in components(d, mask) {
        let root = comp.trailing_zeros() as usize;
        let mut assigned = 1u64 << root;
        let mut frontier = assigned;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = d.adj(i) & mask;
            let same = if side >> i & 1 == 1 { side } else { !side };
            if nb & assigned & same != 0 {
                return None;
            }
            let new = nb & !assigned;
            if side >> i & 1 == 0 {
                side |= new;
            }
            assigned |= new;
            frontier |= new;
        }
    }
    Some(side)
}

/// Chooses at most `k` of `covers` whose union contains `universe`.
/// Branches on the lowest uncovered element.
pub(crate) fn set_cover(universe: u64, covers: &[u64], k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    fn go(
        uncovered: u64,
        covers: &[u64],
        k: usize,
        widest: usize,
        chosen: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if uncovered == 0 {
            return Ok(true);
        }
        if k == 0 || ones(uncovered) > k * widest {
            return Ok(false);
        }
        let e = uncovered.trailing_zeros();
        for (i, c) in covers.iter().enumerate() {
            if c >> e & 1 == 1 {
                chosen.push(i);
                if go(uncovered & !c, covers, k - 1, widest, chosen, budget)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }
    let widest = covers.iter().map(|c| ones(c & universe)).max().unwrap_or(0);
    let mut chosen = Vec::new();
    Ok(go(universe, covers, k, widest, &mut chosen, budget)?.then_some(chosen))
}

/// A vertex cover of size at most `k`, branching on uncovered edges.
pub(crate) fn vertex_cover(d: &DenseGraph, k: usize, budget: &mut Budget) -> Result<Option<u64>> {
    fn go(d: &DenseGraph, set: u64, k: usize, budget: &mut Budget) -> Result<Option<u64>> {
        budget.tick()?;
        let open = d.edges().iter().find(|(i, j)| set >> i & 1 == 0 && set >> j & 1 == 0);
        let Some(&(i, j)) = open else { return Ok(Some(set)) };
        if k == 0 {
            return Ok(None);
        }
        if let Some(s) = go(d, set | 1 << i, k - 1, budget)? {
            return Ok(Some(s));
        }
        go(d, set | 1 << j, k - 1, budget)
    }
    go(d, 0, k, budget)
}

/// A maximum independent set.
pub(crate) fn max_independent_set(d: &DenseGraph, budget: &mut Budget) -> Result<u64> {
    fn go(d: &DenseGraph, avail: u64, budget: &mut Budget) -> Result<u64> {
        budget.tick()?;
        if avail == 0 {
            return Ok(0);
        }
        let v = avail.trailing_zeros() as usize;
        let nb = d.adj(v) & avail;
        if nb == 0 {
            return Ok(1 << v | go(d, avail & !(1 << v), budget)?);
        }
        let with = 1 << v | go(d, avail & !(1 << v) & !nb, budget)?;
        let without = go(d, avail & !(1 << v), budget)?;
        Ok(if ones(with) >= ones(without) { with } else { without })
    }
    go(d, d.all(), budget)
}

/// A set of at least `target` vertices satisfying the hereditary predicate
/// `ok`, found by include-first search with a counting bound.
pub(crate) fn hereditary_at_least(
    d: &DenseGraph,
    target: usize,
    ok: &dyn Fn(u64) -> bool,
    budget: &mut Budget,
) -> Result<Option<u64>> {
    fn go(
        n: usize,
        i: usize,
        set: u64,
        target: usize,
        ok: &dyn Fn(u64) -> bool,
        budget: &mut Budget,
    ) -> Result<Option<u64>> {
        budget.tick()?;
        if ones(set) >= target {
            return Ok(Some(set));
        }
        if i == n || ones(set) + (n - i) < target {
            return Ok(None);
        }
        let with = set | 1 << i;
        if ok(with) {
            if let Some(s) = go(n, i + 1, with, target, ok, budget)? {
                return Ok(Some(s));
            }
        }
        go(n, i + 1, set, target, ok, budget)
    }
    if target > d.n() {
        return Ok(None);
    }
    go(d.n(), 0, 0, target, ok, budget)
}

fn cut_size(d: &DenseGraph, side: u64) -> usize {
    d.edges().iter().filter(|(i, j)| (side >> i & 1) != (side >> j & 1)).count()
}

/// A side of a cut with at least `target` crossing edges.
pub(crate) fn cut_at_least(d: &DenseGraph, target: usize, budget: &mut Budget) -> Result<Option<u64>> {
    let n = d.n();
    let mut side = 0u64;
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..n {
            budget.tick()?;
            let flipped = side ^ 1 << i;
            if cut_size(d, flipped) > cut_size(d, side) {
                side = flipped;
                improved = true;
            }
        }
    }
    if cut_size(d, side) >= target {
        return Ok(Some(side));
    }
    if target > d.edges().len() || n < 2 {
        return Ok(None);
    }
    for s in 0..1u64 << (n - 1) {
        budget.tick()?;
        let side = s << 1;
        if cut_size(d, side) >= target {
            return Ok(Some(side));
        }
    }
    Ok(None)
}

/// A nonempty proper vertex subset with at most `k` crossing edges, for a
/// graph with at least two vertices.
pub(crate) fn small_cut(d: &DenseGraph, k: usize, budget: &mut Budget) -> Result<Option<u64>> {
    let n = d.n();
    if n < 2 {
        return Ok(None);
    }
    if let Some(i) = (0..n).find(|&i| ones(d.adj(i)) <= k) {
        return Ok(Some(1 << i));
    }
    for s in 1..1u64 << (n - 1) {
        budget.tick()?;
        let side = s << 1;
        if cut_size(d, side) <= k {
            return Ok(Some(side));
        }
    }
    Ok(None)
}

/// Assigns each vertex one of `classes` classes so that every class
/// satisfies the hereditary predicate `ok`. Returns the class masks.
pub(crate) fn partition_into(
    n: usize,
    classes: usize,
    ok: &dyn Fn(u64) -> bool,
    budget: &mut Budget,
) -> Result<Option<Vec<u64>>> {
    fn go(
        n: usize,
        i: usize,
        classes: usize,
        parts: &mut Vec<u64>,
        ok: &dyn Fn(u64) -> bool,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if i == n {
            return Ok(true);
        }
        for c in 0..parts.len() {
            let with = parts[c] | 1 << i;
            if ok(with) {
                let old = std::mem::replace(&mut parts[c], with);
                if go(n, i + 1, classes, parts, ok, budget)? {
                    return Ok(true);
                }
                parts[c] = old;
            }
        }
        if parts.len() < classes && ok(1 << i) {
            parts.push(1 << i);
            if go(n, i + 1, classes, parts, ok, budget)? {
                return Ok(true);
            }
            parts.pop();
        }
        Ok(false)
    }
    let mut parts = Vec::new();
    Ok(go(n, 0, classes, &mut parts, ok, budget)?.then_some(parts))
}

/// Vertex subsets of size `size` in colexicographic order, stopping at the
/// first one accepted by `ok`.
pub(crate) fn first_subset_of_size(
    n: usize,
    size: usize,
    ok: &dyn Fn(u64) -> bool,
    budget: &mut Budget,
) -> Result<Option<u64>> {
    if size > n {
        return Ok(None);
    }
    if size == 0 {
        return Ok(ok(0).then_some(0));
    }
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s: u64 = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
    loop {
        budget.tick()?;
        if ok(s) {
            return Ok(Some(s));
        }
        // Gosper's hack: next subset with the same popcount.
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            return Ok(None);
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s > limit {
            return Ok(None);
        }
    }
}

/// A 2-coloring of the edges (indexed as in `d.edges()`) with no
/// monochromatic triangle, as the mask of color-1 edge indices.
pub(crate) fn triangle_free_edge_coloring(d: &DenseGraph, budget: &mut Budget) -> Result<Option<Vec<bool>>> {
    let edges = d.edges();
    let index = |i: usize, j: usize| edges.iter().position(|&(a, b)| (a, b) == (i.min(j), i.max(j)));
    // For each edge, the triangles it closes with two earlier edges.
    let mut closing: Vec<Vec<(usize, usize)>> = vec![Vec::new(); edges.len()];
    for (e, &(i, j)) in edges.iter().enumerate() {
        for w in bits(d.adj(i) & d.adj(j)) {
            let (a, b) = (index(i, w).expect("edge"), index(j, w).expect("edge"));
            if a < e && b < e {
                closing[e].push((a, b));
            }
        }
    }
    fn go(e: usize, colors: &mut Vec<bool>, closing: &[Vec<(usize, usize)>], budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if e == closing.len() {
            return Ok(true);
        }
        for c in [false, true] {
            if closing[e].iter().all(|&(a, b)| !(colors[a] == c && colors[b] == c)) {
                colors.push(c);
                if go(e + 1, colors, closing, budget)? {
                    return Ok(true);
                }
                colors.pop();
            }
        }
        Ok(false)
    }
    let mut colors = Vec::with_capacity(edges.len());
    Ok(go(0, &mut colors, &closing, budget)?.then_some(colors))
}

/// Whether `set` is irredundant: every member has a private vertex in its
/// closed neighborhood.
pub(crate) fn irredundant(closed: &[u64], set: u64) -> bool {
    bits(set).all(|v| bits(closed[v]).any(|u| closed[u] & set == 1 << v))
}
