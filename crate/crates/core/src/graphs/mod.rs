//! Simple connected graphs on the vertex set `{1, ..., n}`.
//!
//! Labels are 1-based everywhere in the public interface. The whisker, star
//! and bridge constructions place new vertices at fixed labels, which the
//! closed-form `Λ` descriptions in [`crate::families`] rely on.

mod canon;
mod ops;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmat::{determinant, IntMatrix};

pub use canon::{
    canonical_form, enumerate_all_classes, enumerate_connected, enumerate_connected_labeled, is_isomorphic,
    CanonicalForm, MAX_ENUMERATION_ORDER,
};
pub use ops::{bridge, star_whisker, star_whisker_complete, whisker};
pub use parse::{parse_construct, parse_edge_list};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// A simple connected graph. Edges are unordered pairs of labels in `1..=n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} outside vertex set 1..={n}"
                )));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("repeated edge {{{u}, {v}}}")));
            }
        }
        let g = Graph { n, edges: set };
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Degree matrix minus adjacency matrix.
    pub fn laplacian(&self) -> IntMatrix {
        let n = self.n;
        let mut m = IntMatrix::zeros(n, n).expect("n >= 1");
        for &(u, v) in &self.edges {
            let (i, j) = (u - 1, v - 1);
            m.set(i, j, BigInt::from(-1));
            m.set(j, i, BigInt::from(-1));
        }
        for i in 0..n {
            m.set(i, i, BigInt::from(self.degree(i + 1)));
        }
        m
    }

    /// Number of spanning trees: the (1,1) cofactor of the Laplacian.
    pub fn spanning_tree_count(&self) -> BigInt {
        if self.n == 1 {
            return BigInt::from(1);
        }
        let l = self.laplacian();
        let keep: Vec<usize> = (1..self.n).collect();
        let reduced =
            IntMatrix::from_fn(self.n - 1, self.n - 1, |i, j| l.get(keep[i], keep[j]).clone()).expect("n >= 2");
        let t = determinant(&reduced).expect("square");
        debug_assert!(!t.is_zero());
        t
    }

    /// The image of this graph under `v ↦ sigma[v - 1]` (1-based images).
    pub fn permuted(&self, sigma: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n + 1];
        if sigma.len() != self.n
            || sigma
                .iter()
                .any(|&s| s == 0 || s > self.n || std::mem::replace(&mut seen[s], true))
        {
            return Err(Error::InvalidGraph("not a permutation of the vertex set".into()));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (sigma[u - 1], sigma[v - 1])))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::ParameterOutOfRange(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (1..=n).map(|i| (i, i % n + 1)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::ParameterOutOfRange(format!(
                "complete graph needs n >= 2, got {n}"
            )));
        }
        Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::ParameterOutOfRange(format!("path needs n >= 2, got {n}")));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// Star with centre `n` and leaves `1..n`.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::ParameterOutOfRange(format!("star needs n >= 2, got {n}")));
        }
        Graph::new(n, (1..n).map(|i| (i, n)))
    }

    /// Tree decoded from a Prüfer sequence of length `n - 2` over `1..=n`.
    pub fn from_prufer(seq: &[usize]) -> Result<Graph> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&a| a == 0 || a > n) {
            return Err(Error::ParameterOutOfRange(format!(
                "Prüfer entry {bad} outside 1..={n}"
            )));
        }
        let mut degree = vec![1usize; n + 1];
        for &a in seq {
            degree[a] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &a in seq {
            let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf always exists");
            edges.push((leaf, a));
            degree[leaf] = 0;
            degree[a] -= 1;
        }
        let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        Graph::new(n, edges)
    }

    /// The edge-list file representation.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub(crate) fn from_parts_unchecked(n: usize, edges: BTreeSet<(usize, usize)>) -> Graph {
        Graph { n, edges }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "G(n={}; {})", self.n, edges.join(" "))
    }
}
