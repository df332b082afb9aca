//! Mate classes: graphs grouped by equal polynomial invariants.
//!
//! Two graphs are mates under an invariant when the invariant's polynomials
//! agree coefficient by coefficient. A graph with no mates in the scanned
//! set is unique there. All results are relative to the finite set that was
//! scanned; nothing here certifies a statement about all graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{canonical_code, census, write_graph6, CanonicalCode, Graph};
use crate::limits::Limits;
use crate::polynomials::{
    characteristic_poly, chromatic_dc, clique_poly, domination_poly, harary_counts_with,
    independence_poly, laplacian_poly, matching_polys, subset_generating, FFPoly, MonoPoly,
};
use crate::properties::Property;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invariant {
    Chromatic,
    /// Partition counts for a property, in the falling-factorial basis.
    Harary(Property),
    Independence,
    Clique,
    Domination,
    /// Generating matching polynomial `sum m_i x^i`.
    Matching,
    /// Matching defect polynomial `sum (-1)^i m_i x^(n-2i)`.
    MatchingDefect,
    Characteristic,
    Laplacian,
    /// Induced subgraphs in a property, counted by size.
    SubsetGenerating(Property),
}

/// Names accepted by [`Invariant::parse`].
pub const INVARIANT_NAMES: &[&str] = &[
    "chromatic", "harary", "ind", "clique", "dom", "matching", "mu", "char", "lap", "subset",
];

impl Invariant {
    /// `harary` and `subset` need a property; the others reject one.
    pub fn parse(name: &str, property: Option<Property>) -> Result<Self> {
        let needs = matches!(name, "harary" | "subset");
        match (needs, property) {
            (true, None) => {
                return Err(Error::argument(format!("invariant `{name}` needs a property")))
            }
            (false, Some(_)) => {
                return Err(Error::argument(format!(
                    "invariant `{name}` does not take a property"
                )))
            }
            (true, Some(p)) => {
                return Ok(if name == "harary" {
                    Invariant::Harary(p)
                } else {
                    Invariant::SubsetGenerating(p)
                })
            }
            (false, None) => {}
        }
        Ok(match name {
            "chromatic" => Invariant::Chromatic,
            "ind" | "independence" => Invariant::Independence,
            "clique" => Invariant::Clique,
            "dom" | "domination" => Invariant::Domination,
            "matching" => Invariant::Matching,
            "mu" | "matching-defect" => Invariant::MatchingDefect,
            "char" | "characteristic" => Invariant::Characteristic,
            "lap" | "laplacian" => Invariant::Laplacian,
            other => {
                return Err(Error::argument(format!(
                    "unknown invariant `{other}`; expected one of {}",
                    INVARIANT_NAMES.join(", ")
                )))
            }
        })
    }

    pub fn id(&self) -> String {
        match self {
            Invariant::Chromatic => "chromatic".into(),
            Invariant::Harary(p) => format!("harary:{p}"),
            Invariant::Independence => "ind".into(),
            Invariant::Clique => "clique".into(),
            Invariant::Domination => "dom".into(),
            Invariant::Matching => "matching".into(),
            Invariant::MatchingDefect => "mu".into(),
            Invariant::Characteristic => "char".into(),
            Invariant::Laplacian => "lap".into(),
            Invariant::SubsetGenerating(p) => format!("subset:{p}"),
        }
    }

    pub fn evaluate(&self, g: &Graph, limits: &Limits) -> Result<PolyValue> {
        Ok(match self {
            Invariant::Harary(p) => PolyValue::Falling(harary_counts_with(g, p, limits)?),
            Invariant::Chromatic => PolyValue::Monomial(chromatic_dc(g)?),
            Invariant::Independence => PolyValue::Monomial(independence_poly(g)?),
            Invariant::Clique => PolyValue::Monomial(clique_poly(g)?),
            Invariant::Domination => PolyValue::Monomial(domination_poly(g)?),
            Invariant::Matching => PolyValue::Monomial(matching_polys(g)?.0),
            Invariant::MatchingDefect => PolyValue::Monomial(matching_polys(g)?.1),
            Invariant::Characteristic => PolyValue::Monomial(characteristic_poly(g)?),
            Invariant::Laplacian => PolyValue::Monomial(laplacian_poly(g)?),
            Invariant::SubsetGenerating(p) => PolyValue::Monomial(subset_generating(g, p)?),
        })
    }

    pub fn fingerprint(&self, g: &Graph, limits: &Limits) -> Result<Fingerprint> {
        Ok(Fingerprint::new(&self.id(), &self.evaluate(g, limits)?))
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// A computed invariant in its natural basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PolyValue {
    Falling(FFPoly),
    Monomial(MonoPoly),
}

impl PolyValue {
    /// Monomial coefficients, converting from the falling basis if needed.
    pub fn to_monomial(&self) -> MonoPoly {
        match self {
            PolyValue::Falling(p) => p.to_monomial(),
            PolyValue::Monomial(p) => p.clone(),
        }
    }

    pub fn value_at(&self, x: &BigInt) -> BigInt {
        self.to_monomial().evaluate(x)
    }

    /// Signed coefficients with trailing zeros removed.
    fn trimmed_coeffs(&self) -> Vec<BigInt> {
        match self {
            PolyValue::Falling(p) => {
                let mut c: Vec<BigInt> = p.coeffs().iter().cloned().map(BigInt::from).collect();
                while c.last().is_some_and(Zero::is_zero) {
                    c.pop();
                }
                c
            }
            PolyValue::Monomial(p) => p.coeffs().to_vec(),
        }
    }
}

impl fmt::Display for PolyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyValue::Falling(p) => write!(f, "{p}"),
            PolyValue::Monomial(p) => write!(f, "{p}"),
        }
    }
}

/// Invariant id followed by the exact coefficients. Equal fingerprints mean
/// equal invariant and equal polynomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint(Vec<u8>);

impl Fingerprint {
    /// Layout: id bytes, `0`, then per coefficient a sign byte, a 4-byte
    /// big-endian length and the big-endian magnitude.
    pub fn new(id: &str, value: &PolyValue) -> Self {
        let mut bytes = id.as_bytes().to_vec();
        bytes.push(0);
        for c in value.trimmed_coeffs() {
            let (sign, mag) = c.to_bytes_be();
            bytes.push(match sign {
                Sign::Minus => 2,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            });
            let mag = if sign == Sign::NoSign { Vec::new() } else { mag };
            bytes.extend_from_slice(&(mag.len() as u32).to_be_bytes());
            bytes.extend_from_slice(&mag);
        }
        Fingerprint(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl Serialize for Fingerprint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MateClass {
    pub fingerprint: Fingerprint,
    #[serde(serialize_with = "codes_as_graph6")]
    pub graphs: Vec<CanonicalCode>,
}

fn codes_as_graph6<S: Serializer>(codes: &[CanonicalCode], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(codes.iter().map(|c| c.as_graph6()))
}

#[derive(Debug, Clone, Serialize)]
pub struct MateClassification {
    /// Common order of the inputs, `None` for mixed orders.
    pub n: Option<usize>,
    pub invariant: String,
    pub classes: Vec<MateClass>,
    pub unique_count: usize,
    pub total: usize,
}

impl MateClassification {
    pub fn index(&self) -> Ratio<usize> {
        if self.total == 0 {
            Ratio::zero()
        } else {
            Ratio::new(self.unique_count, self.total)
        }
    }

    pub fn unique(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.classes
            .iter()
            .filter(|c| c.graphs.len() == 1)
            .map(|c| &c.graphs[0])
    }

    /// Fingerprint of the class holding `g`, if present.
    pub fn class_of(&self, g: &Graph) -> Option<&MateClass> {
        let code = canonical_code(g);
        self.classes.iter().find(|c| c.graphs.contains(&code))
    }

    pub const CSV_HEADER: &'static str = "n,total,classes,unique,index";

    pub fn csv_row(&self) -> String {
        let n = self.n.map(|n| n.to_string()).unwrap_or_default();
        format!(
            "{n},{},{},{},{}",
            self.total,
            self.classes.len(),
            self.unique_count,
            self.index()
        )
    }
}

/// Groups `graphs` by fingerprint. Isomorphic inputs are merged first;
/// classes are ordered by fingerprint bytes and members by canonical code.
pub fn classify(graphs: &[Graph], inv: &Invariant, limits: &Limits) -> Result<MateClassification> {
    let codes: BTreeSet<CanonicalCode> = graphs.par_iter().map(canonical_code).collect();
    let codes: Vec<CanonicalCode> = codes.into_iter().collect();
    let prints: Vec<Fingerprint> = codes
        .par_iter()
        .map(|c| inv.fingerprint(&c.to_graph(), limits))
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<Fingerprint, Vec<CanonicalCode>> = BTreeMap::new();
    for (code, fp) in codes.iter().zip(prints) {
        groups.entry(fp).or_default().push(code.clone());
    }
    let classes: Vec<MateClass> = groups
        .into_iter()
        .map(|(fingerprint, graphs)| MateClass { fingerprint, graphs })
        .collect();
    let orders: BTreeSet<usize> = codes.iter().map(|c| c.as_bytes()[0] as usize - 63).collect();
    Ok(MateClassification {
        n: if orders.len() == 1 { orders.first().copied() } else { None },
        invariant: inv.id(),
        unique_count: classes.iter().filter(|c| c.graphs.len() == 1).count(),
        total: codes.len(),
        classes,
    })
}

/// Census graphs of order `n` without mates among graphs of order `n`,
/// optionally restricted to members of `domain`.
pub fn unique_graphs(
    n: usize,
    inv: &Invariant,
    domain: Option<&Property>,
    limits: &Limits,
) -> Result<Vec<Graph>> {
    let c = classify(&domain_census(n, domain, limits)?, inv, limits)?;
    Ok(c.unique().map(CanonicalCode::to_graph).collect())
}

/// `unique / total` over the order-`n` census (or its members of `domain`).
pub fn distinguishability_index(
    n: usize,
    inv: &Invariant,
    domain: Option<&Property>,
    limits: &Limits,
) -> Result<Ratio<usize>> {
    Ok(classify(&domain_census(n, domain, limits)?, inv, limits)?.index())
}

fn domain_census(n: usize, domain: Option<&Property>, limits: &Limits) -> Result<Vec<Graph>> {
    let all = census(n, limits)?;
    Ok(match domain {
        Some(p) => all.iter().filter(|g| p.contains(g)).copied().collect(),
        None => all.to_vec(),
    })
}

/// Census graphs of the given orders that are mates of `g` but not
/// isomorphic to it.
pub fn mates_of(
    g: &Graph,
    orders: &[usize],
    inv: &Invariant,
    limits: &Limits,
) -> Result<Vec<Graph>> {
    let target = inv.fingerprint(g, limits)?;
    let code = canonical_code(g);
    let mut out = Vec::new();
    for &n in orders {
        let found: Vec<Graph> = census(n, limits)?
            .par_iter()
            .filter(|h| canonical_code(h) != code)
            .map(|h| Ok((*h, inv.fingerprint(h, limits)? == target)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter_map(|(h, hit)| hit.then_some(h))
            .collect();
        out.extend(found);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equivalent,
    /// The second invariant separates strictly more pairs.
    FirstBelowSecond,
    SecondBelowFirst,
    Incomparable,
}

#[derive(Debug, Clone, Serialize)]
pub struct DpComparison {
    pub verdict: Verdict,
    /// Mates under the first invariant that the second separates.
    #[serde(serialize_with = "pair_as_graph6")]
    pub first_not_second: Option<(Graph, Graph)>,
    /// Mates under the second invariant that the first separates.
    #[serde(serialize_with = "pair_as_graph6")]
    pub second_not_first: Option<(Graph, Graph)>,
    /// Largest order in the compared set.
    pub checked_up_to: usize,
}

fn pair_as_graph6<S: Serializer>(
    pair: &Option<(Graph, Graph)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    pair.map(|(a, b)| [write_graph6(&a), write_graph6(&b)]).serialize(s)
}

/// Compares distinguishing power on a finite set of graphs.
///
/// The first invariant is below the second on the set when every pair of
/// mates under the second is also a pair of mates under the first.
pub fn compare_dp(
    inv1: &Invariant,
    inv2: &Invariant,
    graphs: &[Graph],
    limits: &Limits,
) -> Result<DpComparison> {
    let codes: BTreeSet<CanonicalCode> = graphs.par_iter().map(canonical_code).collect();
    let codes: Vec<CanonicalCode> = codes.into_iter().collect();
    let prints: Vec<(Fingerprint, Fingerprint)> = codes
        .par_iter()
        .map(|c| {
            let g = c.to_graph();
            Ok((inv1.fingerprint(&g, limits)?, inv2.fingerprint(&g, limits)?))
        })
        .collect::<Result<_>>()?;
    let split = |key: fn(&(Fingerprint, Fingerprint)) -> &Fingerprint,
                 other: fn(&(Fingerprint, Fingerprint)) -> &Fingerprint|
     -> Option<(Graph, Graph)> {
        let mut first_in_class: BTreeMap<&Fingerprint, usize> = BTreeMap::new();
        for (i, fp) in prints.iter().enumerate() {
            match first_in_class.get(key(fp)) {
                Some(&j) if other(&prints[j]) != other(fp) => {
                    return Some((codes[j].to_graph(), codes[i].to_graph()));
                }
                Some(_) => {}
                None => {
                    first_in_class.insert(key(fp), i);
                }
            }
        }
        None
    };
    let first_not_second = split(|p| &p.0, |p| &p.1);
    let second_not_first = split(|p| &p.1, |p| &p.0);
    let verdict = match (&first_not_second, &second_not_first) {
        (None, None) => Verdict::Equivalent,
        (Some(_), None) => Verdict::FirstBelowSecond,
        (None, Some(_)) => Verdict::SecondBelowFirst,
        (Some(_), Some(_)) => Verdict::Incomparable,
    };
    Ok(DpComparison {
        verdict,
        first_not_second,
        second_not_first,
        checked_up_to: codes
            .iter()
            .map(|c| c.as_bytes()[0] as usize - 63)
            .max()
            .unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{census_upto, enumerate_trees, is_isomorphic, make_named, Family};
    use crate::polynomials::stirling2;
    use crate::properties::is_hereditary_upto;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn named(f: Family, p: &[usize]) -> Graph {
        make_named(f, p).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn trees_are_chromatic_mates() {
        let trees = enumerate_trees(5, &limits()).unwrap();
        let c = classify(&trees, &Invariant::Chromatic, &limits()).unwrap();
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].graphs.len(), 3);
        assert_eq!(c.unique_count, 0);
    }

    #[test]
    fn all_graphs_property_has_one_class_per_order() {
        let graphs = census_upto(5, &limits()).unwrap();
        let inv = Invariant::Harary(Property::AllGraphs);
        let c = classify(&graphs, &inv, &limits()).unwrap();
        assert_eq!(c.classes.len(), 5);
        assert_eq!(c.n, None);
        assert_eq!(unique_graphs(4, &inv, None, &limits()).unwrap(), vec![]);
        assert_eq!(distinguishability_index(4, &inv, None, &limits()).unwrap(), Ratio::zero());
    }

    #[test]
    fn single_graph_is_its_own_class() {
        let g = named(Family::Cycle, &[5]);
        let c = classify(&[g], &Invariant::Characteristic, &limits()).unwrap();
        assert_eq!((c.classes.len(), c.unique_count, c.total), (1, 1, 1));
        assert_eq!(c.n, Some(5));
        for inv in [Invariant::Chromatic, Invariant::Independence, Invariant::Laplacian] {
            assert_eq!(unique_graphs(1, &inv, None, &limits()).unwrap().len(), 1);
            assert_eq!(distinguishability_index(1, &inv, None, &limits()).unwrap(), Ratio::from_integer(1));
        }
    }

    #[test]
    fn chromatic_uniqueness_examples() {
        let unique = unique_graphs(4, &Invariant::Chromatic, None, &limits()).unwrap();
        for g in [named(Family::Cycle, &[4]), named(Family::Complete, &[4])] {
            assert!(unique.iter().any(|u| is_isomorphic(u, &g)));
        }
        let idx = distinguishability_index(5, &Invariant::Chromatic, None, &limits()).unwrap();
        assert!(idx > Ratio::zero() && idx < Ratio::from_integer(1), "{idx}");
    }

    #[test]
    fn mates_of_examples() {
        let inv = Invariant::Chromatic;
        assert!(mates_of(&named(Family::Cycle, &[5]), &[5], &inv, &limits()).unwrap().is_empty());
        let m = mates_of(&named(Family::Path, &[5]), &[5], &inv, &limits()).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|t| t.size() == 4 && t.is_connected()));
        let m = mates_of(&named(Family::Cycle, &[6]), &[6], &Invariant::Independence, &limits()).unwrap();
        assert!(m.iter().any(|g| is_isomorphic(g, &named(Family::TriangleTail, &[6]))));
    }

    #[test]
    fn classification_ignores_input_order_and_labels() {
        let mut graphs: Vec<Graph> = census_upto(5, &limits()).unwrap();
        let a = classify(&graphs, &Invariant::Independence, &limits()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        graphs.shuffle(&mut rng);
        let relabelled: Vec<Graph> = graphs
            .iter()
            .map(|g| {
                let mut p: Vec<usize> = (0..g.order()).collect();
                p.shuffle(&mut rng);
                g.relabel(&p).unwrap()
            })
            .collect();
        let b = classify(&relabelled, &Invariant::Independence, &limits()).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let sizes: usize = a.classes.iter().map(|c| c.graphs.len()).sum();
        assert_eq!(sizes, a.total);
    }

    #[test]
    fn fingerprints_separate_invariants() {
        let g = named(Family::Cycle, &[4]);
        // IND(C4) = M(C4) as polynomials, but the fingerprints differ
        let ind = Invariant::Independence.evaluate(&g, &limits()).unwrap();
        let m = Invariant::Matching.evaluate(&g, &limits()).unwrap();
        assert_eq!(ind, m);
        assert_ne!(
            Invariant::Independence.fingerprint(&g, &limits()).unwrap(),
            Invariant::Matching.fingerprint(&g, &limits()).unwrap()
        );
    }

    #[test]
    fn hereditary_members_are_mates() {
        for p in [
            Property::Edgeless,
            Property::Cliques,
            Property::induced_free(named(Family::Path, &[3])),
            Property::induced_free(named(Family::Cycle, &[3])),
        ] {
            assert!(is_hereditary_upto(&p, 6, &limits()).unwrap().holds);
            for n in 1..=6 {
                let members: Vec<Graph> = crate::properties::members(&p, n, &limits()).unwrap();
                let h = classify(&members, &Invariant::Harary(p.clone()), &limits()).unwrap();
                let f = classify(&members, &Invariant::SubsetGenerating(p.clone()), &limits()).unwrap();
                assert!(h.classes.len() <= 1 && f.classes.len() <= 1, "{p} n={n}");
                if let Some(g) = members.first() {
                    let counts = harary_counts_with(g, &p, &limits()).unwrap();
                    for i in 0..=n {
                        assert_eq!(counts.coeffs()[i], stirling2(n, i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn complete_graphs_and_odd_paths_are_independence_unique() {
        for n in 1..=7 {
            let unique = unique_graphs(n, &Invariant::Independence, None, &limits()).unwrap();
            assert!(unique.iter().any(|g| is_isomorphic(g, &named(Family::Complete, &[n]))), "K{n}");
            if n % 2 == 1 {
                assert!(unique.iter().any(|g| is_isomorphic(g, &named(Family::Path, &[n]))), "P{n}");
            }
        }
    }

    #[test]
    fn compare_examples() {
        let graphs = census_upto(5, &limits()).unwrap();
        let same = compare_dp(&Invariant::Chromatic, &Invariant::Chromatic, &graphs, &limits()).unwrap();
        assert_eq!(same.verdict, Verdict::Equivalent);
        assert_eq!(same.checked_up_to, 5);

        // P5 and K1,4 are chromatic mates; the explicit property {P5} separates them
        let g = named(Family::CompleteBipartite, &[1, 4]);
        let h = named(Family::Path, &[5]);
        let gg = g.disjoint_union(&g).unwrap();
        let ph = Invariant::Harary(Property::explicit(&[h]));
        let r = compare_dp(&ph, &Invariant::Chromatic, &[g, h, gg], &limits()).unwrap();
        assert_eq!(r.verdict, Verdict::Incomparable);
        let (a, b) = r.second_not_first.unwrap();
        assert!(is_isomorphic(&a, &g) && is_isomorphic(&b, &h) || is_isomorphic(&a, &h) && is_isomorphic(&b, &g));
        let (a, b) = r.first_not_second.unwrap();
        let orders = [a.order(), b.order()];
        assert!(orders.contains(&5) && orders.contains(&10));
    }

    #[test]
    fn refinement_is_transitive_on_census() {
        let graphs = census_upto(6, &limits()).unwrap();
        let invs = [
            Invariant::Harary(Property::AllGraphs),
            Invariant::Chromatic,
            Invariant::Independence,
            Invariant::Matching,
            Invariant::Characteristic,
        ];
        let below = |a: &Invariant, b: &Invariant| {
            let r = compare_dp(a, b, &graphs, &limits()).unwrap();
            matches!(r.verdict, Verdict::Equivalent | Verdict::FirstBelowSecond)
        };
        for a in &invs {
            for b in &invs {
                for c in &invs {
                    if below(a, b) && below(b, c) {
                        assert!(below(a, c), "{a} {b} {c}");
                    }
                }
            }
        }
        assert!(below(&invs[0], &invs[1]));
    }
}
