use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// `W_k(G)`: layer `m` (1..=k) adds vertex `i + m·n` joined to `i + (m−1)·n`.
pub fn whisker(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::ParameterOutOfRange("whisker depth must be at least 1".into()));
    }
    let n = g.n();
    let mut edges: BTreeSet<(usize, usize)> = g.edges().collect();
    for m in 1..=k {
        for i in 1..=n {
            edges.insert((i + (m - 1) * n, i + m * n));
        }
    }
    Ok(Graph::from_parts_unchecked((k + 1) * n, edges))
}

/// `W*_k(G)`: `W_k(G)` plus vertex `(k+1)·n + 1` joined to the outermost layer.
pub fn star_whisker(g: &Graph, k: usize) -> Result<Graph> {
    let n = g.n();
    let w = whisker(g, k)?;
    let centre = (k + 1) * n + 1;
    let mut edges: BTreeSet<(usize, usize)> = w.edges().collect();
    for i in 1..=n {
        edges.insert((k * n + i, centre));
    }
    Ok(Graph::from_parts_unchecked(centre, edges))
}

/// `W*_k(K_n)` for `n >= 3`.
pub fn star_whisker_complete(n: usize, k: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange(format!("W*(K_n) needs n >= 3, got {n}")));
    }
    star_whisker(&Graph::complete(n)?, k)
}

/// Disjoint union in list order, joining the last vertex of each component to
/// the first vertex of the next.
pub fn bridge(gs: &[Graph]) -> Result<Graph> {
    let Some(first) = gs.first() else {
        return Err(Error::InvalidGraph("bridge of an empty list".into()));
    };
    if gs.iter().any(|g| g.n() != first.n()) {
        log::warn!("bridging graphs of unequal order; reflexivity is not guaranteed");
    }
    let mut edges = BTreeSet::new();
    let mut offset = 0;
    for (j, g) in gs.iter().enumerate() {
        if j > 0 {
            edges.insert((offset, offset + 1));
        }
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Ok(Graph::from_parts_unchecked(offset, edges))
}
