//! Simple loop-free graphs of order at most 32 with bitset adjacency.

mod canon;
mod census;
mod graph6;
mod named;

use std::fmt;

pub use canon::{
    automorphism_count, canonical_code, canonical_code_exhaustive, canonical_form,
    canonical_order, is_isomorphic, CanonicalCode,
};
pub use census::{census, census_upto, enumerate_graphs, enumerate_trees};
pub use graph6::{parse_graph6, read_census, write_census, write_graph6};
pub use named::{make_named, parse_named, Family};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 32;

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A set of vertices of some host graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple graph on vertices `0..n`, `n <= 32`.
///
/// Row `v` of the adjacency array is the neighbour bitmask of `v`. Rows are
/// symmetric, loop-free, and carry no bits at or above `n`; every
/// constructor enforces this, so equality of `Graph` values is equality of
/// labeled graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    /// The order-0 graph.
    pub const fn null() -> Self {
        Graph {
            n: 0,
            adj: [0; MAX_ORDER],
        }
    }

    /// The edge-less graph `E_n`.
    pub fn edgeless(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mask = full_mask(n);
        let mut g = Graph::edgeless(n)?;
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::argument(format!("row {u} has bits outside 0..{n}")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::argument(format!("loop at vertex {u}")));
            }
            g.adj[u] = row;
        }
        for u in 0..n {
            for v in VertexSet(g.adj[u]).iter() {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(Error::argument(format!("asymmetric pair ({u},{v})")));
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !full_mask(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows().iter().all(|&r| r == 0)
    }

    pub fn is_complete(&self) -> bool {
        let m = full_mask(self.n);
        (0..self.n).all(|v| self.adj[v] == m & !(1 << v))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = *self;
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n || u == v {
            Err(Error::argument(format!(
                "invalid vertex pair ({u},{v}) for order {}",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    /// Contracts the edge (or non-edge) `uv`: `v` is merged into `u`, parallel
    /// edges collapse, and the remaining vertices keep their relative order.
    pub fn contract(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = *self;
        let merged = (g.adj[u] | g.adj[v]) & !(1 << u) & !(1 << v);
        g.adj[u] = merged;
        for w in VertexSet(merged).iter() {
            g.adj[w] |= 1 << u;
        }
        let keep = full_mask(self.n) & !(1 << v);
        Ok(g.induced_mask(keep))
    }

    /// Induced subgraph on `s`, relabelled `0..|s|` preserving vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Self> {
        if s.bits() & !full_mask(self.n) != 0 {
            return Err(Error::argument(format!(
                "vertex set {s:?} not contained in 0..{}",
                self.n
            )));
        }
        Ok(self.induced_mask(s.bits()))
    }

    pub(crate) fn induced_mask(&self, mask: u32) -> Self {
        let mut g = Graph::null();
        let verts: Vec<usize> = VertexSet(mask).iter().collect();
        g.n = verts.len();
        for (i, &v) in verts.iter().enumerate() {
            g.adj[i] = compress(self.adj[v] & mask, mask);
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::capacity("order of disjoint union", n, MAX_ORDER));
        }
        let mut g = *self;
        g.n = n;
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let m = full_mask(self.n);
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & m & !(1 << v);
        }
        g
    }

    /// Maximal connected vertex sets, sorted by minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(full_mask(self.n))
            .into_iter()
            .map(VertexSet)
            .collect()
    }

    /// Components of the subgraph induced by `mask`, as masks of the host.
    pub(crate) fn components_within(&self, mask: u32) -> Vec<u32> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.reach(rest.trailing_zeros() as usize, mask);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Vertices reachable from `v` inside `mask`.
    pub(crate) fn reach(&self, v: usize, mask: u32) -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for w in VertexSet(frontier).iter() {
                next |= self.adj[w];
            }
            next &= mask & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, full_mask(self.n)) == full_mask(self.n)
    }

    /// Number of edges of the subgraph induced by `mask`.
    pub(crate) fn edges_within(&self, mask: u32) -> usize {
        VertexSet(mask)
            .iter()
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::argument("permutation length differs from order"));
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::argument("not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut g = Graph::null();
        g.n = self.n;
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                g.adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(g)
    }

    /// Relabels so that position `i` holds old vertex `order[i]`.
    pub(crate) fn reorder(&self, order: &[usize]) -> Self {
        let mut pos = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::null();
        g.n = self.n;
        for (i, &v) in order.iter().enumerate() {
            let mut row = 0u32;
            for w in VertexSet(self.adj[v]).iter() {
                row |= 1 << pos[w];
            }
            g.adj[i] = row;
        }
        g
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::capacity("graph order", n, MAX_ORDER))
    } else {
        Ok(())
    }
}

/// Packs the bits of `x` selected by `mask` into the low bits (software pext).
#[inline]
pub(crate) fn compress(x: u32, mask: u32) -> u32 {
    let mut out = 0u32;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let b = m.trailing_zeros();
        out |= (x >> b & 1) << i;
        i += 1;
        m &= m - 1;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {})", self.n, write_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}
