//! Unlabeled graph census by vertex augmentation.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use super::{canonical_code, CanonicalCode, Graph};
use crate::error::Result;
use crate::limits::{Limits, MAX_ENUMERATION};

static CENSUS: [OnceLock<Arc<Vec<Graph>>>; MAX_ENUMERATION + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION + 1];

/// One representative per isomorphism class of order `n`, sorted by
/// canonical code. Representatives are the canonical forms themselves.
pub fn enumerate_graphs(n: usize, limits: &Limits) -> Result<Vec<Graph>> {
    Ok(census(n, limits)?.as_ref().clone())
}

/// Shared, cached version of [`enumerate_graphs`].
pub fn census(n: usize, limits: &Limits) -> Result<Arc<Vec<Graph>>> {
    Limits::check("census order", n, limits.enumeration.min(MAX_ENUMERATION))?;
    Ok(cached(n))
}

fn cached(n: usize) -> Arc<Vec<Graph>> {
    CENSUS[n].get_or_init(|| Arc::new(generate(n))).clone()
}

fn generate(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::null()];
    }
    let smaller = cached(n - 1);
    let codes: BTreeSet<CanonicalCode> = smaller
        .par_iter()
        .flat_map_iter(|g| {
            (0u32..1 << (n - 1)).map(move |nbrs| {
                let mut rows: Vec<u32> = g.rows().to_vec();
                for (u, row) in rows.iter_mut().enumerate() {
                    *row |= (nbrs >> u & 1) << (n - 1);
                }
                rows.push(nbrs);
                canonical_code(&Graph::from_rows(&rows).expect("augmentation is symmetric"))
            })
        })
        .collect();
    codes.iter().map(CanonicalCode::to_graph).collect()
}

/// All census graphs of orders `1..=max_n`, in order of increasing order.
pub fn census_upto(max_n: usize, limits: &Limits) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(census(n, limits)?.iter().copied());
    }
    Ok(out)
}

/// Trees of order `n`, one per isomorphism class.
pub fn enumerate_trees(n: usize, limits: &Limits) -> Result<Vec<Graph>> {
    Ok(census(n, limits)?
        .iter()
        .filter(|g| g.size() + 1 == n && g.is_connected())
        .copied()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_code_exhaustive;
    use crate::Error;

    fn labelled_class_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let mut set = BTreeSet::new();
        for bits in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            set.insert(canonical_code_exhaustive(&Graph::from_edges(n, &edges).unwrap(), 12).unwrap());
        }
        set.len()
    }

    #[test]
    fn census_matches_labelled_brute_force() {
        let limits = Limits::default();
        for n in 0..=5 {
            assert_eq!(
                enumerate_graphs(n, &limits).unwrap().len(),
                labelled_class_count(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn known_counts() {
        let limits = Limits::default();
        let counts: Vec<usize> = (0..=8)
            .map(|n| enumerate_graphs(n, &limits).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044, 12346]);
    }

    #[test]
    fn tree_counts() {
        let limits = Limits::default();
        let counts: Vec<usize> = (1..=8)
            .map(|n| enumerate_trees(n, &limits).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn sorted_and_canonical() {
        let graphs = enumerate_graphs(5, &Limits::default()).unwrap();
        let codes: Vec<_> = graphs.iter().map(canonical_code).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted);
        for (g, c) in graphs.iter().zip(&codes) {
            assert_eq!(&c.to_graph(), g);
        }
    }

    #[test]
    fn limit_is_enforced() {
        let limits = Limits {
            enumeration: 3,
            ..Limits::default()
        };
        assert!(matches!(enumerate_graphs(4, &limits), Err(Error::Capacity { .. })));
        assert_eq!(enumerate_graphs(3, &limits).unwrap().len(), 4);
    }
}
