//! Canonical forms.
//!
//! The canonical labelling is computed recursively: a disconnected graph is
//! labelled component by component (components sorted by their own canonical
//! code), a graph whose complement is disconnected is labelled through the
//! complement, and everything else goes through an individualisation /
//! refinement search over equitable ordered partitions. The search keeps the
//! leaf with the smallest graph6 string, and prunes sibling branches that lie
//! in one orbit of the automorphisms discovered so far that fix the current
//! individualised prefix.

use std::fmt;

use super::graph6::graph6_bytes;
use super::{full_mask, Graph, VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Isomorphism-class identifier: the graph6 bytes of the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical form's graph6 string.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn to_graph(&self) -> Graph {
        super::parse_graph6(self.as_graph6()).expect("canonical codes are valid graph6")
    }

    pub fn from_graph6(s: &str) -> Result<Self> {
        Ok(canonical_code(&super::parse_graph6(s)?))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_graph6())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode(graph6_bytes(&canonical_form(g)))
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.reorder(&canonical_order(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_code(g) == canonical_code(h)
}

/// Canonical vertex order: position `i` of the canonical form is vertex
/// `order[i]` of `g`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let comps = g.components_within(full_mask(n));
    if comps.len() > 1 {
        let mut labelled: Vec<(Vec<u8>, Vec<usize>)> = comps
            .into_iter()
            .map(|mask| {
                let verts: Vec<usize> = VertexSet::from_bits(mask).iter().collect();
                let sub = g.induced_mask(mask);
                let order = canonical_order(&sub);
                let code = graph6_bytes(&sub.reorder(&order));
                (code, order.into_iter().map(|i| verts[i]).collect())
            })
            .collect();
        labelled.sort_by(|a, b| a.0.cmp(&b.0));
        return labelled.into_iter().flat_map(|(_, o)| o).collect();
    }
    let co = g.complement();
    if !co.is_connected() {
        return canonical_order(&co);
    }
    Search::new(g).run()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    /// Discovered automorphisms as vertex maps.
    automorphisms: Vec<Vec<usize>>,
}

type Cells = Vec<Vec<usize>>;

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<usize> {
        let cells = refine(self.g, vec![(0..self.g.order()).collect()]);
        self.descend(cells, &mut Vec::new());
        self.best.expect("search visits at least one leaf").1
    }

    fn descend(&mut self, cells: Cells, path: &mut Vec<usize>) {
        let n = self.g.order();
        if cells.len() == n {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        }
        let (idx, target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, c)| (i, c.clone()))
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() {
                let orbit_rep = self.orbits(path);
                if explored.iter().any(|&u| orbit_rep[u] == orbit_rep[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&w| w != v).collect();
            child[idx] = vec![v];
            child.insert(idx + 1, rest);
            let child = refine(self.g, child);
            path.push(v);
            self.descend(child, path);
            path.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let code = graph6_bytes(&self.g.reorder(&order));
        match &self.best {
            None => self.best = Some((code, order)),
            Some((best_code, best_order)) => match code.cmp(best_code) {
                std::cmp::Ordering::Less => self.best = Some((code, order)),
                std::cmp::Ordering::Equal => {
                    let mut map = vec![0; self.g.order()];
                    for (i, &v) in order.iter().enumerate() {
                        map[v] = best_order[i];
                    }
                    if map.iter().enumerate().any(|(i, &j)| i != j) {
                        self.automorphisms.push(map);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbit representatives under the known automorphisms fixing `path`.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.automorphisms {
            if path.iter().any(|&v| a[v] != v) {
                continue;
            }
            for (v, &w) in a.iter().enumerate() {
                let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
                if rv != rw {
                    parent[rv.max(rw)] = rv.min(rw);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

/// Refines an ordered partition to the coarsest equitable refinement.
///
/// Cells are split by the number of neighbours in a splitter cell; the
/// fragments replace the cell in increasing order of that count. The result
/// depends only on the graph structure and the input partition, so it
/// commutes with relabelling.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    'outer: loop {
        for s in 0..cells.len() {
            let smask: u32 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.rows()[v] & smask).count_ones(), v))
                    .collect();
                keyed.sort_by_key(|&(k, _)| k);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if next.len() > 0 && keyed.len() != next.last().unwrap().len() {
                    split = true;
                }
            }
            if split {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

/// Canonical code by brute force over all `n!` relabellings.
///
/// This is the minimum graph6 string over all permutations, which is a
/// different normal form from [`canonical_code`]; it is used to cross-check
/// the refinement search.
pub fn canonical_code_exhaustive(g: &Graph, limit: usize) -> Result<CanonicalCode> {
    let n = g.order();
    if n > limit {
        return Err(Error::capacity("order for exhaustive canonicalization", n, limit));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = graph6_bytes(&g.reorder(&order));
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            let code = graph6_bytes(&g.reorder(&order));
            if code < best {
                best = code;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalCode(best))
}

/// Size of the automorphism group, by backtracking over degree-compatible
/// partial maps.
pub fn automorphism_count(g: &Graph) -> u128 {
    let n = g.order();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut image = [usize::MAX; MAX_ORDER];
    fn go(g: &Graph, deg: &[usize], v: usize, used: u32, image: &mut [usize; MAX_ORDER]) -> u128 {
        let n = g.order();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used >> w & 1 == 1 || deg[w] != deg[v] {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
                image[v] = w;
                total += go(g, deg, v + 1, used | 1 << w, image);
            }
        }
        total
    }
    go(g, &deg, 0, 0, &mut image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use crate::graph::{make_named, Family};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn named(f: Family, p: &[usize]) -> Graph {
        make_named(f, p).unwrap()
    }

    #[test]
    fn relabelled_cycle_has_same_code() {
        let c4 = named(Family::Cycle, &[4]);
        // (0 2 1 3) as a cycle: 0->2, 2->1, 1->3, 3->0
        let perm = [2, 3, 1, 0];
        assert_eq!(canonical_code(&c4), canonical_code(&c4.relabel(&perm).unwrap()));
    }

    #[test]
    fn order_four_trees_differ() {
        let p4 = named(Family::Path, &[4]);
        let star = named(Family::CompleteBipartite, &[1, 3]);
        assert_ne!(canonical_code(&p4), canonical_code(&star));
    }

    #[test]
    fn order_four_labelled_census_has_eleven_classes() {
        let mut codes = std::collections::BTreeSet::new();
        let mut oracle = std::collections::BTreeSet::new();
        for bits in 0u32..64 {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..4 {
                for u in 0..v {
                    if bits >> k & 1 == 1 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(4, &edges).unwrap();
            codes.insert(canonical_code(&g));
            oracle.insert(canonical_code_exhaustive(&g, 12).unwrap());
        }
        assert_eq!(oracle.len(), 11);
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn symmetric_graphs_at_order_32() {
        // these exercise the component, complement and pruned-search paths
        let graphs = [
            Graph::edgeless(32).unwrap(),
            named(Family::Complete, &[32]),
            named(Family::Cycle, &[32]),
            named(Family::CycleUnion, &[8, 4]),
            named(Family::CompleteBipartite, &[16, 16]),
            hypercube(5),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for g in graphs {
            let mut perm: Vec<usize> = (0..32).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(canonical_code(&g), canonical_code(&h), "{g:?}");
        }
    }

    fn hypercube(d: usize) -> Graph {
        let n = 1 << d;
        let mut edges = Vec::new();
        for v in 0..n {
            for b in 0..d {
                let w = v ^ (1 << b);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&named(Family::Cycle, &[5])), 10);
        assert_eq!(automorphism_count(&named(Family::Complete, &[5])), 120);
        assert_eq!(automorphism_count(&named(Family::Path, &[4])), 2);
        assert_eq!(automorphism_count(&hypercube(3)), 48);
        assert_eq!(automorphism_count(&Graph::null()), 1);
    }

    #[test]
    fn exhaustive_limit() {
        let g = Graph::edgeless(13).unwrap();
        assert!(canonical_code_exhaustive(&g, 12).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn code_is_invariant_under_permutation(g in arb_graph(8), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(canonical_code(&g), canonical_code(&h));
            prop_assert!(is_isomorphic(&canonical_form(&g), &g));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn agrees_with_exhaustive_oracle(g in arb_graph(7), h in arb_graph(7)) {
            let fast = canonical_code(&g) == canonical_code(&h);
            let slow = canonical_code_exhaustive(&g, 12).unwrap()
                == canonical_code_exhaustive(&h, 12).unwrap();
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn sparse_graphs_up_to_32(g in arb_graph(32), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        }
    }
}
