//! Chromatic, subset-counting and matching polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::MonoPoly;
use crate::error::Result;
use crate::graph::{canonical_code, full_mask, CanonicalCode, Graph};
use crate::limits::Limits;
use crate::properties::Property;

/// Chromatic polynomial by deletion-contraction.
///
/// Sparse graphs delete and contract an edge; dense ones add and contract a
/// non-edge (`P(G) = P(G + e) + P(G / e)`). Components multiply, and
/// intermediate graphs are memoised on canonical codes for the duration of
/// one call.
pub fn chromatic_dc(g: &Graph) -> Result<MonoPoly> {
    Limits::check("chromatic order", g.order(), Limits::default().chromatic)?;
    let mut memo = HashMap::new();
    Ok(chromatic(g, &mut memo))
}

fn chromatic(g: &Graph, memo: &mut HashMap<CanonicalCode, MonoPoly>) -> MonoPoly {
    let n = g.order();
    if g.is_edgeless() {
        return MonoPoly::monomial(n);
    }
    if g.is_complete() {
        return (0..n as i64).fold(MonoPoly::one(), |acc, j| {
            acc.mul(&MonoPoly::from_i64(&[-j, 1]))
        });
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return comps.iter().fold(MonoPoly::one(), |acc, c| {
            acc.mul(&chromatic(&g.induced_mask(c.bits()), memo))
        });
    }
    let code = canonical_code(g);
    if let Some(p) = memo.get(&code) {
        return p.clone();
    }
    let result = if 4 * g.size() > n * (n - 1) {
        let (u, v) = first_non_edge(g);
        let plus = chromatic(&g.with_edge(u, v).expect("valid pair"), memo);
        let merged = chromatic(&g.contract(u, v).expect("valid pair"), memo);
        plus.add(&merged)
    } else {
        // an edge at a vertex of maximum degree shrinks the graph fastest
        let u = (0..n).max_by_key(|&v| g.degree(v)).expect("non-empty");
        let v = g.neighbours(u).min().expect("has an edge");
        let minus = chromatic(&g.without_edge(u, v).expect("valid pair"), memo);
        let merged = chromatic(&g.contract(u, v).expect("valid pair"), memo);
        minus.sub(&merged)
    };
    memo.insert(code, result.clone());
    result
}

fn first_non_edge(g: &Graph) -> (usize, usize) {
    let n = g.order();
    (0..n)
        .find_map(|u| {
            let missing = full_mask(n) & !g.rows()[u] & !(1 << u);
            (missing != 0).then(|| (u, missing.trailing_zeros() as usize))
        })
        .expect("not complete")
}

fn counts_to_poly(counts: &[u64]) -> MonoPoly {
    MonoPoly::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// Independent sets of `g[mask]` by size, the empty set included.
fn independent_set_counts(g: &Graph, mask: u32, memo: &mut HashMap<u32, Vec<u64>>) -> Vec<u64> {
    if mask == 0 {
        return vec![1];
    }
    if let Some(c) = memo.get(&mask) {
        return c.clone();
    }
    let v = mask.trailing_zeros() as usize;
    let without = independent_set_counts(g, mask & !(1 << v), memo);
    let with = independent_set_counts(g, mask & !(1 << v) & !g.rows()[v], memo);
    let mut out = vec![0u64; without.len().max(with.len() + 1)];
    for (i, c) in without.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in with.iter().enumerate() {
        out[i + 1] += c;
    }
    memo.insert(mask, out.clone());
    out
}

/// Coefficient of `x^i` counts the `i`-sets `S` with `g[S]` in `p`. The
/// empty set counts exactly when the null graph belongs to `p`.
pub fn subset_generating(g: &Graph, p: &Property) -> Result<MonoPoly> {
    let n = g.order();
    Limits::check("subset scan order", n, Limits::default().subset)?;
    let mut counts = match p {
        Property::Edgeless => independent_set_counts(g, full_mask(n), &mut HashMap::new()),
        Property::Cliques => {
            independent_set_counts(&g.complement(), full_mask(n), &mut HashMap::new())
        }
        _ => (0u32..=full_mask(n))
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut acc, s| {
                    if s != 0 && p.contains_mask(g, s) {
                        acc[s.count_ones() as usize] += 1;
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            ),
    };
    counts[0] = u64::from(p.contains_null());
    Ok(counts_to_poly(&counts))
}

/// Independent sets by size, the empty set included.
pub fn independence_poly(g: &Graph) -> Result<MonoPoly> {
    subset_generating(g, &Property::Edgeless)
}

/// Cliques by size, the empty clique included, so that the clique polynomial
/// of the complement equals the independence polynomial.
pub fn clique_poly(g: &Graph) -> Result<MonoPoly> {
    Ok(subset_generating(g, &Property::Cliques)?.add(&MonoPoly::one()))
}

/// Dominating sets by size.
pub fn domination_poly(g: &Graph) -> Result<MonoPoly> {
    let n = g.order();
    Limits::check("subset scan order", n, Limits::default().subset)?;
    let closed: Vec<u32> = (0..n).map(|v| g.rows()[v] | 1 << v).collect();
    // settled[i]: vertices whose closed neighbourhood lies inside 0..i, so
    // their domination is fixed once the first i choices are made
    let settled: Vec<u32> = (0..=n)
        .map(|i| {
            (0..n)
                .filter(|&v| closed[v] & !full_mask(i) == 0)
                .fold(0, |acc, v| acc | 1 << v)
        })
        .collect();
    let mut counts = vec![0u64; n + 1];
    dominate(&closed, &settled, 0, 0, 0, &mut counts);
    Ok(counts_to_poly(&counts))
}

fn dominate(closed: &[u32], settled: &[u32], i: usize, dominated: u32, size: usize, counts: &mut [u64]) {
    if settled[i] & !dominated != 0 {
        return;
    }
    if i == closed.len() {
        counts[size] += 1;
        return;
    }
    dominate(closed, settled, i + 1, dominated, size, counts);
    dominate(closed, settled, i + 1, dominated | closed[i], size + 1, counts);
}

/// Returns `(M, mu)`: the matching generating polynomial
/// `sum m_i x^i` and the matching defect polynomial
/// `sum (-1)^i m_i x^(n - 2i)`.
pub fn matching_polys(g: &Graph) -> Result<(MonoPoly, MonoPoly)> {
    let n = g.order();
    Limits::check("matching order", n, Limits::default().subset)?;
    let m = matching_counts(g, full_mask(n), &mut HashMap::new());
    let mut mu = vec![BigInt::zero(); n + 1];
    for (i, &c) in m.iter().enumerate() {
        let c = BigInt::from(c);
        mu[n - 2 * i] = if i % 2 == 0 { c } else { -c };
    }
    Ok((counts_to_poly(&m), MonoPoly::new(mu)))
}

/// `m(U) = m(U - v) + x * sum over neighbours w of v in U of m(U - v - w)`.
fn matching_counts(g: &Graph, mask: u32, memo: &mut HashMap<u32, Vec<u64>>) -> Vec<u64> {
    if mask.count_ones() < 2 {
        return vec![1];
    }
    if let Some(c) = memo.get(&mask) {
        return c.clone();
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut out = matching_counts(g, rest, memo);
    let mut nbrs = g.rows()[v] & rest;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros();
        nbrs &= nbrs - 1;
        let sub = matching_counts(g, rest & !(1 << w), memo);
        if out.len() < sub.len() + 1 {
            out.resize(sub.len() + 1, 0);
        }
        for (i, c) in sub.iter().enumerate() {
            out[i + 1] += c;
        }
    }
    memo.insert(mask, out.clone());
    out
}
