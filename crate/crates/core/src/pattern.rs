//! Zero patterns and the clique number `ω(A)`.
//!
//! `ω(A)` is the largest order of a principal submatrix of `A` without
//! off-diagonal zeros. Both `a_ij` and `a_ji` must be nonzero for the pair to
//! appear together in such a submatrix, so `ω(A)` is the clique number of the
//! graph joining `i ~ j` iff `a_ij ≠ 0` and `a_ji ≠ 0`.

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, UnitVector};

/// Largest order accepted by [`omega_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 20;

/// Fixed-size set of vertex indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, other: &Bitset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + bit)
            })
        })
    }
}

impl std::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on `0..n` with bitset neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    n: usize,
    rows: Vec<Bitset>,
}

impl PatternGraph {
    pub fn edgeless(n: usize) -> Self {
        assert!(n >= 1, "graph order must be at least 1");
        PatternGraph {
            n,
            rows: vec![Bitset::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::edgeless(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "self-loops are not allowed");
        self.rows[i].insert(j);
        self.rows[j].insert(i);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.rows[i].remove(j);
        self.rows[j].remove(i);
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> &Bitset {
        &self.rows[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Bitset::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| self.rows[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(k, &u)| vertices[k + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Symmetric 0/1 adjacency matrix of the graph.
    pub fn to_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::adjacency(self.n, &self.edges())
    }
}

/// Graph joining `i ≠ j` when both `|a_ij| > tol` and `|a_ji| > tol`.
pub fn extract_pattern(a: &ComplexMatrix, tol: f64) -> PatternGraph {
    let n = a.n();
    let mut g = PatternGraph::edgeless(n);
    for i in 0..n {
        for j in i + 1..n {
            if a.get(i, j).norm() > tol && a.get(j, i).norm() > tol {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Exact clique number. Always at least 1.
pub fn omega_exact(g: &PatternGraph) -> usize {
    max_clique(g).len()
}

/// A maximum clique, found by branch and bound with greedy-coloring bounds.
///
/// Candidates start in reverse degeneracy order; each node colors its
/// candidate set greedily and branches from the highest color down, pruning
/// when the current clique plus the color count cannot beat the incumbent.
pub fn max_clique(g: &PatternGraph) -> Vec<usize> {
    let mut order = degeneracy_order(g);
    order.reverse();
    let mut search = CliqueSearch {
        g,
        current: Vec::with_capacity(g.n()),
        best: vec![0],
    };
    search.expand(order);
    let mut best = search.best;
    best.sort_unstable();
    best
}

/// Vertices in the order they are peeled off by repeatedly removing a
/// minimum-degree vertex (lowest index among ties).
pub fn degeneracy_order(g: &PatternGraph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    order
}

struct CliqueSearch<'a> {
    g: &'a PatternGraph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, candidates: Vec<usize>) {
        let (order, colors) = color_sort(self.g, &candidates);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next: Vec<usize> = order[..idx]
                .iter()
                .copied()
                .filter(|&u| self.g.has_edge(v, u))
                .collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best.clone_from(&self.current);
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
        }
    }
}

/// Greedy sequential coloring. Returns the vertices grouped by color class and
/// the (1-based) color of each position, nondecreasing.
fn color_sort(g: &PatternGraph, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<(Bitset, Vec<usize>)> = Vec::new();
    for &v in candidates {
        let nbrs = g.neighbors(v);
        match classes.iter_mut().find(|(members, _)| members.is_disjoint(nbrs)) {
            Some((members, list)) => {
                members.insert(v);
                list.push(v);
            }
            None => {
                let mut members = Bitset::new(g.n());
                members.insert(v);
                classes.push((members, vec![v]));
            }
        }
    }
    let mut order = Vec::with_capacity(candidates.len());
    let mut colors = Vec::with_capacity(candidates.len());
    for (k, (_, list)) in classes.into_iter().enumerate() {
        colors.extend(std::iter::repeat_n(k + 1, list.len()));
        order.extend(list);
    }
    (order, colors)
}

/// Clique number by checking every vertex subset. Only for `n ≤ 20`.
pub fn omega_bruteforce(g: &PatternGraph) -> Result<usize> {
    let n = g.n();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::OracleSizeLimit(format!(
            "brute-force clique number needs n <= {BRUTEFORCE_LIMIT}, got {n}"
        )));
    }
    let masks: Vec<u32> = (0..n)
        .map(|i| (0..n).filter(|&j| g.has_edge(i, j)).fold(0u32, |m, j| m | 1 << j))
        .collect();
    let mut best = 1;
    for subset in 1u32..(1u32 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let is_clique = (0..n)
            .filter(|&i| subset >> i & 1 == 1)
            .all(|i| subset & !(1 << i) & !masks[i] == 0);
        if is_clique {
            best = size;
        }
    }
    Ok(best)
}

/// `Σ |y_i|² |y_j|²` over ordered pairs `i ≠ j` with `|a_ij| > tol`.
pub fn pattern_mass(a: &ComplexMatrix, y: &UnitVector, tol: f64) -> Result<f64> {
    let n = a.n();
    if y.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: y.len(),
        });
    }
    let w: Vec<f64> = y.coords().iter().map(|z| z.norm_sqr()).collect();
    let mut mass = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j && a.get(i, j).norm() > tol {
                mass += w[i] * w[j];
            }
        }
    }
    Ok(mass)
}
