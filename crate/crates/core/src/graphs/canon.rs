//! Canonical labeling by equitable refinement and individualization, and
//! isomorphism-free enumeration of small connected graphs.
//!
//! Adjacency is kept as one bit row per vertex, so orders up to 64 work,
//! but the search tree has no automorphism pruning and is only meant for
//! graphs of about a dozen vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Largest order accepted by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// A canonical relabeling: `labeling[v]` is the new 0-based position of old
/// vertex `v` (0-based), and `key` packs the relabeled upper triangle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub key: Vec<u64>,
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    /// Hex string of the key, stable across runs.
    pub fn key_hex(&self) -> String {
        let mut s = format!("{}:", self.n);
        for word in &self.key {
            s.push_str(&format!("{word:016x}"));
        }
        s
    }
}

fn adjacency(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }
    adj
}

fn pack(adj: &[u64], order: &[usize]) -> Vec<u64> {
    // order[p] = old vertex at new position p
    let n = order.len();
    let mut key = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]] >> order[j] & 1 == 1 {
                key[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    key
}

fn refine(adj: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut s = 0;
    while s < cells.len() {
        let mask: u64 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut buckets: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                buckets.entry((adj[v] & mask).count_ones()).or_default().push(v);
            }
            next.extend(buckets.into_values());
        }
        if next.len() != cells.len() {
            cells = next;
            s = 0;
        } else {
            s += 1;
        }
    }
    cells
}

fn search(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let key = pack(adj, &order);
        if best.as_ref().is_none_or(|(k, _)| key > *k) {
            *best = Some((key, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells[..target].to_vec();
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(adj, next, best);
    }
}

fn canonical_bits(adj: &[u64]) -> CanonicalForm {
    let n = adj.len();
    let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, row) in adj.iter().enumerate() {
        by_degree.entry(row.count_ones()).or_default().push(v);
    }
    let mut best = None;
    search(adj, by_degree.into_values().collect(), &mut best);
    let (key, order) = best.expect("at least one leaf");
    let mut labeling = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        labeling[v] = p;
    }
    CanonicalForm { n, key, labeling }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.n() > 64 {
        return Err(Error::ParameterOutOfRange(format!(
            "canonical form supports at most 64 vertices, got {}",
            g.n()
        )));
    }
    Ok(canonical_bits(&adjacency(g)))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.key == canonical_form(b)?.key)
}

fn relabeled(adj: &[u64], labeling: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; adj.len()];
    for (u, row) in adj.iter().enumerate() {
        for v in 0..adj.len() {
            if row >> v & 1 == 1 {
                out[labeling[u]] |= 1 << labeling[v];
            }
        }
    }
    out
}

fn bits_connected(adj: &[u64]) -> bool {
    let full = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == full
}

fn bits_to_graph(adj: &[u64]) -> Graph {
    let n = adj.len();
    let edges: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| adj[u] >> v & 1 == 1)
                .map(move |v| (u + 1, v + 1))
        })
        .collect();
    Graph::from_parts_unchecked(n, edges)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::ParameterOutOfRange(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Canonical adjacency rows of every isomorphism class on `n` vertices,
/// connected or not, grown one vertex at a time.
pub fn enumerate_all_classes(n: usize) -> Result<Vec<Vec<u64>>> {
    check_order(n)?;
    let mut classes: Vec<Vec<u64>> = vec![vec![0]];
    for m in 2..=n {
        let mut seen: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
        for base in &classes {
            for nbhd in 0u64..1 << (m - 1) {
                let mut adj = base.clone();
                for (v, row) in adj.iter_mut().enumerate() {
                    *row |= (nbhd >> v & 1) << (m - 1);
                }
                adj.push(nbhd);
                let c = canonical_bits(&adj);
                seen.entry(c.key).or_insert_with(|| relabeled(&adj, &c.labeling));
            }
        }
        classes = seen.into_values().collect();
    }
    Ok(classes)
}

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices, sorted by canonical key.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_all_classes(n)?
        .iter()
        .filter(|adj| bits_connected(adj))
        .map(|adj| bits_to_graph(adj))
        .collect())
}

/// Every connected labeled graph on `n` vertices, in edge-subset order.
pub fn enumerate_connected_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_order(n)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok((0u64..1 << pairs.len()).filter_map(move |mask| {
        let mut adj = vec![0u64; n];
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        bits_connected(&adj).then(|| bits_to_graph(&adj))
    }))
}
