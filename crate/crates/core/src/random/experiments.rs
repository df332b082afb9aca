//! The Monte-Carlo experiments. Trials run in parallel and are merged in
//! trial order.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::{
    ratio_string, sample_gnp, sample_gnp_sparse, trial_rng, sample_with, ExperimentReport,
    GnpParams, SparseGraph,
};
use crate::error::{Error, Result};
use crate::graph::{canonical_code, full_mask, Graph, VertexSet};
use crate::limits::Limits;
use crate::mates::{Fingerprint, Invariant, PolyValue};
use crate::properties::Property;

const THRESHOLD_NOTE: &str =
    "acceptance thresholds on this estimate are calibration choices, not derived bounds";

/// Vertex sets inducing an `r`-cycle, as bitmasks.
pub fn induced_cycles(g: &Graph, r: usize) -> Vec<u32> {
    let n = g.order();
    let mut out = Vec::new();
    if r < 3 || r > n {
        return out;
    }
    let rows = g.rows();
    // paths start at their lowest vertex; the second vertex is below the last
    // so each cycle is listed once
    fn extend(rows: &[u32], r: usize, path: &mut Vec<usize>, used: u32, out: &mut Vec<u32>) {
        let start = path[0];
        let last = *path.last().expect("non-empty");
        if path.len() == r {
            if rows[last] >> start & 1 == 1 && path[1] < last {
                let induced = path.iter().all(|&v| (rows[v] & used).count_ones() == 2);
                if induced {
                    out.push(used);
                }
            }
            return;
        }
        let mut next = rows[last] & !used & !full_mask(start + 1);
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            // an induced cycle has no chords back into the path
            let inner = used & !(1 << last) & !(1 << start);
            if rows[w] & inner != 0 {
                continue;
            }
            path.push(w);
            extend(rows, r, path, used | 1 << w, out);
            path.pop();
        }
    }
    for s in 0..n {
        let mut path = vec![s];
        extend(rows, r, &mut path, 1 << s, &mut out);
    }
    out
}

/// Whether the partition count polynomial of disjoint unions of `r`-cycles
/// is identically zero, i.e. no exact cover of `V(g)` by induced `r`-cycles.
pub fn fr_vanishes(g: &Graph, r: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return false;
    }
    if n % r != 0 {
        return true;
    }
    let cycles = induced_cycles(g, r);
    let mut by_vertex: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &c in &cycles {
        for v in VertexSet::from_bits(c).iter() {
            by_vertex[v].push(c);
        }
    }
    !cover(&by_vertex, full_mask(n), 0)
}

/// Exact cover search, branching on the uncovered vertex with the fewest
/// compatible cycles.
fn cover(by_vertex: &[Vec<u32>], all: u32, covered: u32) -> bool {
    if covered == all {
        return true;
    }
    let mut best: Option<(usize, usize)> = None;
    for v in VertexSet::from_bits(all & !covered).iter() {
        let k = by_vertex[v].iter().filter(|&&c| c & covered == 0).count();
        if k == 0 {
            return false;
        }
        if best.is_none_or(|(_, b)| k < b) {
            best = Some((v, k));
        }
    }
    let (v, _) = best.expect("something is uncovered");
    by_vertex[v]
        .iter()
        .filter(|&&c| c & covered == 0)
        .any(|&c| cover(by_vertex, all, covered | c))
}

/// Fraction of samples whose disjoint-`r`-cycle partition polynomial is
/// identically zero. Orders not divisible by `r` return rate 1 without
/// sampling.
pub fn fr_vanishing_rate(r: usize, params: &GnpParams) -> Result<ExperimentReport> {
    fr_vanishing_rate_impl(r, params, false)
}

fn fr_vanishing_rate_impl(r: usize, params: &GnpParams, force_sampling: bool) -> Result<ExperimentReport> {
    if r < 3 {
        return Err(Error::argument(format!("cycle length must be at least 3, got {r}")));
    }
    if params.n > crate::graph::MAX_ORDER {
        return Err(Error::capacity("graph order", params.n, crate::graph::MAX_ORDER));
    }
    if params.n % r != 0 && !force_sampling {
        let mut rep = ExperimentReport::new("fr-vanish", params, params.trials, params.trials);
        rep.params.insert("r".into(), r.into());
        rep.notes.push(format!("order not divisible by {r}: vanishes for every graph, no samples drawn"));
        rep.stats.insert("sampled".into(), 0.into());
        return Ok(rep);
    }
    let outcomes: Vec<(bool, usize)> = (0..params.trials)
        .into_par_iter()
        .map(|t| {
            let g = sample_gnp(params, t)?;
            Ok((fr_vanishes(&g, r), induced_cycles(&g, r).len()))
        })
        .collect::<Result<_>>()?;
    let successes = outcomes.iter().filter(|o| o.0).count() as u64;
    let cycles: usize = outcomes.iter().map(|o| o.1).sum();
    let mut rep = ExperimentReport::new("fr-vanish", params, successes, params.trials);
    rep.params.insert("r".into(), r.into());
    rep.notes.push(THRESHOLD_NOTE.into());
    rep.stats.insert("sampled".into(), params.trials.into());
    rep.stats.insert("induced_cycles_total".into(), cycles.into());
    Ok(rep)
}

/// Whether two `r`-cycles (not necessarily induced) share exactly one vertex.
pub fn has_two_cycles_sharing_one_vertex(g: &SparseGraph, r: usize) -> bool {
    let n = g.order();
    if r < 3 {
        return false;
    }
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    for s in 0..n {
        let mut path = vec![s as u32];
        cycles_from(g, r, &mut path, &mut cycles);
    }
    for (i, c) in cycles.iter().enumerate() {
        for &v in c {
            through[v as usize].push(i);
        }
    }
    for ids in &through {
        for (a, &i) in ids.iter().enumerate() {
            for &j in &ids[a + 1..] {
                let shared = cycles[i].iter().filter(|v| cycles[j].contains(v)).count();
                if shared == 1 {
                    return true;
                }
            }
        }
    }
    false
}

/// Simple `r`-cycles starting at their lowest vertex, listed once each.
fn cycles_from(g: &SparseGraph, r: usize, path: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let start = path[0];
    let last = *path.last().expect("non-empty");
    if path.len() == r {
        if path[1] < last && g.has_edge(last as usize, start as usize) {
            let mut c = path.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    for &w in g.neighbours(last as usize) {
        if w > start && !path.contains(&w) {
            path.push(w);
            cycles_from(g, r, path, out);
            path.pop();
        }
    }
}

/// For each order, the fraction of `G(n, d/n)` samples containing two
/// `r`-cycles that share exactly one vertex.
pub fn two_cycle_incidence_rate(
    r: usize,
    params: &GnpParams,
    orders: &[usize],
) -> Result<Vec<ExperimentReport>> {
    if r < 3 {
        return Err(Error::argument(format!("cycle length must be at least 3, got {r}")));
    }
    orders
        .iter()
        .map(|&n| {
            let p = params.with_order(n)?;
            let hits: Vec<bool> = (0..p.trials)
                .into_par_iter()
                .map(|t| Ok(has_two_cycles_sharing_one_vertex(&sample_gnp_sparse(&p, t)?, r)))
                .collect::<Result<_>>()?;
            let successes = hits.iter().filter(|&&h| h).count() as u64;
            let mut rep = ExperimentReport::new("two-cycles", &p, successes, p.trials);
            rep.params.insert("r".into(), r.into());
            rep.notes.push(THRESHOLD_NOTE.into());
            Ok(rep)
        })
        .collect()
}

/// Whether every block of the partition induces a triangle-free graph.
pub fn triangle_free_blocks(g: &Graph, blocks: &[u32]) -> bool {
    blocks.iter().all(|&b| {
        VertexSet::from_bits(b).iter().all(|v| {
            let nb = g.rows()[v] & b;
            VertexSet::from_bits(nb).iter().all(|w| g.rows()[w] & nb == 0)
        })
    })
}

/// A uniformly random partition of `0..n` into blocks of size `r`.
fn random_equal_partition(n: usize, r: usize, rng: &mut impl rand::Rng) -> Vec<u32> {
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    verts
        .chunks(r)
        .map(|c| c.iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect()
}

fn check_block_shape(r: usize, n: usize) -> Result<()> {
    if r < 3 || n % r != 0 {
        return Err(Error::argument(format!(
            "need r >= 3 dividing n, got r={r}, n={n}"
        )));
    }
    if n > crate::graph::MAX_ORDER {
        return Err(Error::capacity("graph order", n, crate::graph::MAX_ORDER));
    }
    Ok(())
}

/// Fraction of (graph, partition) samples in which every block of a random
/// partition into blocks of size `r` is triangle-free.
///
/// `stats.graphs_all_partitions_free` counts the graphs for which all
/// sampled partitions had this property.
pub fn triangle_in_blocks_rate(
    r: usize,
    params: &GnpParams,
    partitions_per_graph: u64,
) -> Result<ExperimentReport> {
    check_block_shape(r, params.n)?;
    let p = params.p.at(params.n)?;
    let per_graph: Vec<u64> = (0..params.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(params.seed, t);
            let g = sample_with(params.n, p, &mut rng).to_graph().expect("order checked");
            (0..partitions_per_graph)
                .filter(|_| triangle_free_blocks(&g, &random_equal_partition(params.n, r, &mut rng)))
                .count() as u64
        })
        .collect();
    Ok(block_report(r, params, partitions_per_graph, &per_graph))
}

/// The same statistic for a fixed control graph, with `params.trials`
/// repetitions (the graph is not resampled).
pub fn triangle_in_blocks_rate_on(
    g: &Graph,
    r: usize,
    params: &GnpParams,
    partitions_per_graph: u64,
) -> Result<ExperimentReport> {
    check_block_shape(r, g.order())?;
    let per_graph: Vec<u64> = (0..params.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(params.seed, t);
            (0..partitions_per_graph)
                .filter(|_| triangle_free_blocks(g, &random_equal_partition(g.order(), r, &mut rng)))
                .count() as u64
        })
        .collect();
    let mut rep = block_report(r, params, partitions_per_graph, &per_graph);
    rep.experiment = "triangle-blocks-control".into();
    rep.params.insert("graph".into(), crate::graph::write_graph6(g).into());
    Ok(rep)
}

fn block_report(r: usize, params: &GnpParams, parts: u64, per_graph: &[u64]) -> ExperimentReport {
    let successes: u64 = per_graph.iter().sum();
    let mut rep = ExperimentReport::new("triangle-blocks", params, successes, params.trials * parts);
    rep.params.insert("r".into(), r.into());
    rep.params.insert("partitions_per_graph".into(), parts.into());
    rep.notes.push("success: every block of the sampled partition is triangle-free".into());
    rep.notes.push(THRESHOLD_NOTE.into());
    let all_free = per_graph.iter().filter(|&&k| k == parts).count();
    rep.stats.insert("graphs_all_partitions_free".into(), all_free.into());
    rep.stats.insert("graphs".into(), params.trials.into());
    rep
}

/// Fraction of sampled non-isomorphic pairs with equal fingerprints.
///
/// `stats.zero_polynomials` counts samples whose invariant is identically
/// zero; such graphs always have mates.
pub fn collision_rate(inv: &Invariant, params: &GnpParams, limits: &Limits) -> Result<ExperimentReport> {
    let samples: Vec<(Graph, PolyValue)> = (0..params.trials)
        .into_par_iter()
        .map(|t| {
            let g = sample_gnp(params, t)?;
            Ok((g, evaluate_fast(inv, &g, limits)?))
        })
        .collect::<Result<_>>()?;
    let id = inv.id();
    let keyed: Vec<(crate::graph::CanonicalCode, Fingerprint)> = samples
        .iter()
        .map(|(g, v)| (canonical_code(g), Fingerprint::new(&id, v)))
        .collect();
    let (mut pairs, mut equal) = (0u64, 0u64);
    for (i, a) in keyed.iter().enumerate() {
        for b in &keyed[i + 1..] {
            if a.0 != b.0 {
                pairs += 1;
                if a.1 == b.1 {
                    equal += 1;
                }
            }
        }
    }
    let zero = samples
        .iter()
        .filter(|(_, v)| v.to_monomial().is_zero())
        .count();
    let distinct: BTreeSet<_> = keyed.iter().map(|k| &k.0).collect();
    let mut rep = ExperimentReport::new("collision", params, equal, pairs);
    rep.params.insert("invariant".into(), id.into());
    rep.notes.push("trials counts non-isomorphic sample pairs".into());
    rep.stats.insert("zero_polynomials".into(), zero.into());
    rep.stats.insert("samples".into(), params.trials.into());
    rep.stats.insert("distinct_samples".into(), distinct.len().into());
    rep.stats.insert(
        "zero_fraction".into(),
        ratio_string(&num_rational::Ratio::new(zero as u64, params.trials)).into(),
    );
    Ok(rep)
}

/// Skips the full count when a disjoint-cycle-union polynomial is known to
/// vanish.
fn evaluate_fast(inv: &Invariant, g: &Graph, limits: &Limits) -> Result<PolyValue> {
    if let Invariant::Harary(Property::DisjointUnionsOf(h)) = inv {
        let c = h.graph();
        let r = c.order();
        let is_cycle = r >= 3 && c.size() == r && c.is_connected() && c.max_degree() == 2;
        if is_cycle && fr_vanishes(g, r) {
            let zeros = vec![num_bigint::BigUint::default(); g.order() + 1];
            return Ok(PolyValue::Falling(crate::polynomials::FFPoly::new(zeros)));
        }
    }
    inv.evaluate(g, limits)
}

/// Maximum degree over the trials. The estimate is the mean maximum degree.
pub fn max_degree_profile(params: &GnpParams) -> Result<ExperimentReport> {
    let mut degrees: Vec<u64> = (0..params.trials)
        .into_par_iter()
        .map(|t| Ok(sample_gnp_sparse(params, t)?.max_degree() as u64))
        .collect::<Result<_>>()?;
    let total: u64 = degrees.iter().sum();
    degrees.sort_unstable();
    let mut rep = ExperimentReport::new("max-degree", params, total, params.trials);
    rep.notes.push("estimate is the mean maximum degree".into());
    rep.stats.insert("min".into(), degrees[0].into());
    rep.stats.insert("median".into(), degrees[(degrees.len() - 1) / 2].into());
    rep.stats.insert("max".into(), degrees[degrees.len() - 1].into());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{census_upto, make_named, Family};
    use crate::polynomials::harary_counts;
    use crate::random::{parse_ratio, EdgeProbability};
    use num_rational::Ratio;
    use serde_json::Value;

    fn named(f: Family, p: &[usize]) -> Graph {
        make_named(f, p).unwrap()
    }

    fn gnp(n: usize, p: &str, seed: u64, trials: u64) -> GnpParams {
        GnpParams::new(n, EdgeProbability::Constant(parse_ratio(p).unwrap()), seed, trials).unwrap()
    }

    /// Induced `r`-cycles by testing every `r`-subset.
    fn oracle_cycles(g: &Graph, r: usize) -> Vec<u32> {
        (0..=full_mask(g.order()))
            .filter(|s: &u32| {
                s.count_ones() as usize == r
                    && VertexSet::from_bits(*s).iter().all(|v| (g.rows()[v] & s).count_ones() == 2)
                    && g.components_within(*s).len() == 1
            })
            .collect()
    }

    #[test]
    fn induced_cycles_match_subset_scan() {
        for g in census_upto(7, &Limits::default()).unwrap() {
            for r in 3..=6 {
                let mut got = induced_cycles(&g, r);
                got.sort_unstable();
                assert_eq!(got, oracle_cycles(&g, r), "{g:?} r={r}");
            }
        }
    }

    #[test]
    fn vanishing_matches_partition_counts() {
        for g in census_upto(8, &Limits::default()).unwrap() {
            for r in [3, 4] {
                if g.order() < r {
                    continue;
                }
                let p = Property::disjoint_unions_of(named(Family::Cycle, &[r])).unwrap();
                let zero = harary_counts(&g, &p).unwrap().is_zero();
                assert_eq!(fr_vanishes(&g, r), zero, "{g:?} r={r}");
            }
        }
    }

    #[test]
    fn cycle_union_control_does_not_vanish() {
        assert!(!fr_vanishes(&named(Family::CycleUnion, &[6, 4]), 4));
        assert!(fr_vanishes(&named(Family::Complete, &[24]), 4));
    }

    #[test]
    fn fast_path_agrees_with_sampling() {
        for n in [7, 10, 23] {
            let p = gnp(n, "1/2", 3, 40);
            let fast = fr_vanishing_rate(4, &p).unwrap();
            let slow = fr_vanishing_rate_impl(4, &p, true).unwrap();
            assert_eq!(fast.rate(), Ratio::from_integer(1));
            assert_eq!(fast.rate(), slow.rate());
            assert_eq!(fast.estimate, "1/1");
            assert_eq!(fast.stats["sampled"], Value::from(0));
        }
    }

    #[test]
    fn two_cycle_detector() {
        let bowtie = SparseGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(has_two_cycles_sharing_one_vertex(&bowtie, 3));
        let k4 = SparseGraph::from(&named(Family::Complete, &[4]));
        // triangles in K4 pairwise share two vertices
        assert!(!has_two_cycles_sharing_one_vertex(&k4, 3));
        let two_squares = SparseGraph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 3)],
        )
        .unwrap();
        assert!(has_two_cycles_sharing_one_vertex(&two_squares, 4));
        assert!(!has_two_cycles_sharing_one_vertex(&two_squares, 3));
        let p = GnpParams::new(500, EdgeProbability::AverageDegree(Ratio::from_integer(0)), 1, 20).unwrap();
        let reps = two_cycle_incidence_rate(3, &p, &[50, 500]).unwrap();
        assert!(reps.iter().all(|r| r.successes == 0));
    }

    #[test]
    fn triangle_block_controls() {
        let p = gnp(12, "1/2", 5, 10);
        let k = triangle_in_blocks_rate_on(&named(Family::Complete, &[12]), 3, &p, 5).unwrap();
        assert_eq!(k.successes, 0);
        let e = triangle_in_blocks_rate_on(&Graph::edgeless(12).unwrap(), 4, &p, 5).unwrap();
        assert_eq!(e.rate(), Ratio::from_integer(1));
        assert!(triangle_in_blocks_rate(5, &p, 1).is_err());
    }

    #[test]
    fn collision_examples() {
        let p = gnp(6, "1/2", 11, 30);
        let all = collision_rate(&Invariant::Harary(Property::AllGraphs), &p, &Limits::default()).unwrap();
        assert!(all.trials > 0);
        assert_eq!(all.successes, all.trials);
        let chrom = collision_rate(&Invariant::Chromatic, &p, &Limits::default()).unwrap();
        assert!(chrom.successes <= chrom.trials);
    }

    #[test]
    fn max_degree_examples() {
        let full = max_degree_profile(&gnp(300, "1", 1, 3)).unwrap();
        assert_eq!(full.stats["median"], Value::from(299));
        let half = max_degree_profile(&gnp(1000, "1/2", 2, 5)).unwrap();
        let median = half.stats["median"].as_u64().unwrap() as f64;
        let n = 1000f64;
        assert!(median > n / 2.0 - 3.0 * (n * n.ln()).sqrt());
    }

    #[test]
    fn reports_are_reproducible() {
        let p = gnp(12, "1/2", 99, 60);
        let a = serde_json::to_string(&fr_vanishing_rate(4, &p).unwrap()).unwrap();
        let b = serde_json::to_string(&fr_vanishing_rate(4, &p).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
