//! Graph properties with decidable membership.
//!
//! A [`Property`] is a tree of constructors (edge-less graphs, cliques,
//! `H`-free graphs, disjoint unions of copies of `H`, order sets, explicit
//! finite sets and boolean combinations). Membership is always
//! isomorphism-invariant. Closure properties (heredity, the Compton-Gessel
//! conditions) can only be checked up to a bounded order; the reports say
//! which bound was used.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    automorphism_count, canonical_code, census, full_mask, parse_named, write_graph6,
    CanonicalCode, Graph, VertexSet,
};
use crate::limits::Limits;

/// A fixed pattern graph together with the invariants used for fast
/// rejection.
#[derive(Clone)]
pub struct Pattern {
    graph: Graph,
    code: CanonicalCode,
    edges: usize,
    degrees: Vec<usize>,
}

impl Pattern {
    pub fn new(graph: Graph) -> Self {
        Pattern {
            code: canonical_code(&graph),
            edges: graph.size(),
            degrees: graph.degree_sequence(),
            graph,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Whether `g[mask]` is isomorphic to the pattern.
    fn matches_mask(&self, g: &Graph, mask: u32) -> bool {
        if mask.count_ones() as usize != self.order() || g.edges_within(mask) != self.edges {
            return false;
        }
        let mut degs: Vec<usize> = VertexSet::from_bits(mask)
            .iter()
            .map(|v| (g.rows()[v] & mask).count_ones() as usize)
            .collect();
        degs.sort_unstable();
        degs == self.degrees && canonical_code(&g.induced_mask(mask)) == self.code
    }

    /// `g[mask]` is a cycle when the pattern is one; used to skip
    /// canonicalisation for the common `DU(C_r)` case.
    fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.edges == self.order() && self.degrees.iter().all(|&d| d == 2) && self.graph.is_connected()
    }
}

impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}

impl Eq for Pattern {}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", write_graph6(&self.graph))
    }
}

/// A set of positive integers, used for order-restricted properties.
///
/// Order 0 is never a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSet {
    Finite(BTreeSet<usize>),
    /// `{ n >= 1 : n = residue (mod modulus) }`.
    Residue { residue: usize, modulus: usize },
    AllPositive,
}

impl OrderSet {
    pub fn finite<I: IntoIterator<Item = usize>>(items: I) -> Self {
        OrderSet::Finite(items.into_iter().filter(|&n| n > 0).collect())
    }

    pub fn residue(residue: usize, modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::argument("residue class needs a positive modulus"));
        }
        Ok(OrderSet::Residue {
            residue: residue % modulus,
            modulus,
        })
    }

    pub fn contains(&self, n: usize) -> bool {
        n > 0
            && match self {
                OrderSet::Finite(s) => s.contains(&n),
                OrderSet::Residue { residue, modulus } => n % modulus == *residue,
                OrderSet::AllPositive => true,
            }
    }
}

impl fmt::Display for OrderSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSet::Finite(s) => {
                f.write_str("(order-in")?;
                for n in s {
                    write!(f, " {n}")?;
                }
                f.write_str(")")
            }
            OrderSet::Residue { residue, modulus } => {
                write!(f, "(order-mod {residue} {modulus})")
            }
            OrderSet::AllPositive => f.write_str("(order-mod 0 1)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Property {
    Edgeless,
    /// Complete graphs of order at least one.
    Cliques,
    AllGraphs,
    Empty,
    /// Every connected component has at most `t` vertices.
    ComponentOrderAtMost(usize),
    /// Non-empty disjoint unions of copies of a connected pattern.
    DisjointUnionsOf(Pattern),
    /// No induced subgraph isomorphic to the pattern.
    InducedFree(Pattern),
    /// Order lies in the given set of positive integers.
    OrderIn(OrderSet),
    ExplicitSet(BTreeSet<CanonicalCode>),
    Union(Box<Property>, Box<Property>),
    Intersection(Box<Property>, Box<Property>),
    Not(Box<Property>),
}

impl Property {
    pub fn disjoint_unions_of(h: Graph) -> Result<Self> {
        if h.order() == 0 || !h.is_connected() {
            return Err(Error::argument(
                "disjoint-union pattern must be a non-empty connected graph",
            ));
        }
        Ok(Property::DisjointUnionsOf(Pattern::new(h)))
    }

    pub fn induced_free(h: Graph) -> Self {
        Property::InducedFree(Pattern::new(h))
    }

    pub fn order_in(set: OrderSet) -> Self {
        Property::OrderIn(set)
    }

    pub fn explicit<'a, I: IntoIterator<Item = &'a Graph>>(graphs: I) -> Self {
        Property::ExplicitSet(graphs.into_iter().map(canonical_code).collect())
    }

    pub fn union(a: Property, b: Property) -> Self {
        Property::Union(Box::new(a), Box::new(b))
    }

    pub fn intersection(a: Property, b: Property) -> Self {
        Property::Intersection(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(p: Property) -> Self {
        Property::Not(Box::new(p))
    }

    /// Flagged as trivial: empty, all graphs, or an explicit finite set.
    /// Composite properties are never flagged, even if semantically trivial.
    pub fn is_trivial(&self) -> bool {
        matches!(
            self,
            Property::Empty | Property::AllGraphs | Property::ExplicitSet(_)
        )
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.contains_mask(g, full_mask(g.order()))
    }

    /// Membership of the induced subgraph `g[mask]`.
    pub fn contains_mask(&self, g: &Graph, mask: u32) -> bool {
        let k = mask.count_ones() as usize;
        match self {
            Property::Edgeless => VertexSet::from_bits(mask)
                .iter()
                .all(|v| g.rows()[v] & mask == 0),
            Property::Cliques => {
                k >= 1
                    && VertexSet::from_bits(mask)
                        .iter()
                        .all(|v| g.rows()[v] & mask == mask & !(1 << v))
            }
            Property::AllGraphs => true,
            Property::Empty => false,
            Property::ComponentOrderAtMost(t) => g
                .components_within(mask)
                .iter()
                .all(|c| c.count_ones() as usize <= *t),
            Property::DisjointUnionsOf(h) => {
                let t = h.order();
                if k == 0 || k % t != 0 {
                    return false;
                }
                if h.is_cycle() {
                    if VertexSet::from_bits(mask)
                        .iter()
                        .any(|v| (g.rows()[v] & mask).count_ones() != 2)
                    {
                        return false;
                    }
                    return g
                        .components_within(mask)
                        .iter()
                        .all(|c| c.count_ones() as usize == t);
                }
                g.components_within(mask)
                    .iter()
                    .all(|&c| h.matches_mask(g, c))
            }
            Property::InducedFree(h) => !contains_induced(g, mask, h),
            Property::OrderIn(set) => set.contains(k),
            Property::ExplicitSet(codes) => {
                codes.iter().any(|c| c.as_bytes()[0] as usize == k + 63)
                    && codes.contains(&canonical_code(&g.induced_mask(mask)))
            }
            Property::Union(a, b) => a.contains_mask(g, mask) || b.contains_mask(g, mask),
            Property::Intersection(a, b) => {
                a.contains_mask(g, mask) && b.contains_mask(g, mask)
            }
            Property::Not(a) => !a.contains_mask(g, mask),
        }
    }

    pub fn contains_null(&self) -> bool {
        self.contains(&Graph::null())
    }
}

/// Whether some subset of `mask` induces a copy of `h`.
fn contains_induced(g: &Graph, mask: u32, h: &Pattern) -> bool {
    let t = h.order();
    let k = mask.count_ones() as usize;
    if t == 0 {
        return true;
    }
    if t > k {
        return false;
    }
    let max_deg = *h.degrees.last().unwrap_or(&0);
    let min_deg = h.degrees[0];
    // vertices whose degree inside `mask` is below the pattern's minimum
    // can still occur; only the global edge budget prunes
    let _ = min_deg;
    let verts: Vec<usize> = VertexSet::from_bits(mask).iter().collect();
    // Gosper's hack over t-subsets of the k positions
    let mut sel: u64 = (1u64 << t) - 1;
    let limit = 1u64 << k;
    while sel < limit {
        let mut sub = 0u32;
        let mut s = sel;
        while s != 0 {
            sub |= 1 << verts[s.trailing_zeros() as usize];
            s &= s - 1;
        }
        if VertexSet::from_bits(sub)
            .iter()
            .all(|v| (g.rows()[v] & sub).count_ones() as usize <= max_deg)
            && h.matches_mask(g, sub)
        {
            return true;
        }
        let c = sel & sel.wrapping_neg();
        let r = sel + c;
        sel = (((r ^ sel) >> 2) / c) | r;
    }
    false
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Edgeless => f.write_str("edgeless"),
            Property::Cliques => f.write_str("cliques"),
            Property::AllGraphs => f.write_str("all"),
            Property::Empty => f.write_str("empty"),
            Property::ComponentOrderAtMost(t) => write!(f, "(mcc {t})"),
            Property::DisjointUnionsOf(h) => write!(f, "(du {})", write_graph6(&h.graph)),
            Property::InducedFree(h) => write!(f, "(induced-free {})", write_graph6(&h.graph)),
            Property::OrderIn(s) => write!(f, "{s}"),
            Property::ExplicitSet(codes) => {
                f.write_str("(explicit")?;
                for c in codes {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
            Property::Union(a, b) => write!(f, "(union {a} {b})"),
            Property::Intersection(a, b) => write!(f, "(intersection {a} {b})"),
            Property::Not(a) => write!(f, "(not {a})"),
        }
    }
}

// ---------------------------------------------------------------------------
// s-expression parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Sexp {
    Atom(String, usize),
    List(Vec<Sexp>, usize),
}

impl Sexp {
    fn offset(&self) -> usize {
        match self {
            Sexp::Atom(_, o) | Sexp::List(_, o) => *o,
        }
    }
}

fn tokenize(text: &str) -> Result<Sexp> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let expr = parse_sexp(bytes, &mut pos)?;
    skip_ws(bytes, &mut pos);
    if pos != bytes.len() {
        return Err(Error::parse(pos, "trailing input after property expression"));
    }
    Ok(expr)
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_sexp(bytes: &[u8], pos: &mut usize) -> Result<Sexp> {
    skip_ws(bytes, pos);
    let start = *pos;
    match bytes.get(*pos) {
        None => Err(Error::parse(start, "unexpected end of input")),
        Some(b')') => Err(Error::parse(start, "unexpected `)`")),
        Some(b'(') => {
            *pos += 1;
            let mut items = Vec::new();
            loop {
                skip_ws(bytes, pos);
                match bytes.get(*pos) {
                    None => return Err(Error::parse(*pos, "unclosed `(`")),
                    Some(b')') => {
                        *pos += 1;
                        return Ok(Sexp::List(items, start));
                    }
                    _ => items.push(parse_sexp(bytes, pos)?),
                }
            }
        }
        Some(_) => {
            while *pos < bytes.len()
                && !bytes[*pos].is_ascii_whitespace()
                && bytes[*pos] != b'('
                && bytes[*pos] != b')'
            {
                *pos += 1;
            }
            let atom = String::from_utf8_lossy(&bytes[start..*pos]).into_owned();
            Ok(Sexp::Atom(atom, start))
        }
    }
}

fn graph_arg(e: &Sexp) -> Result<Graph> {
    match e {
        Sexp::Atom(s, o) => parse_named(s).map_err(|err| relocate(err, *o)),
        Sexp::List(items, o) => {
            let words: Vec<String> = items
                .iter()
                .map(|i| match i {
                    Sexp::Atom(s, _) => Ok(s.clone()),
                    Sexp::List(_, o2) => Err(Error::parse(*o2, "nested list in graph argument")),
                })
                .collect::<Result<_>>()?;
            parse_named(&words.join(" ")).map_err(|err| relocate(err, *o))
        }
    }
}

fn relocate(err: Error, offset: usize) -> Error {
    match err {
        Error::Parse { offset: inner, message } => Error::Parse {
            offset: offset + inner,
            message,
        },
        other => other,
    }
}

fn int_arg(e: &Sexp) -> Result<usize> {
    match e {
        Sexp::Atom(s, o) => s
            .parse()
            .map_err(|_| Error::parse(*o, format!("expected a non-negative integer, got `{s}`"))),
        Sexp::List(_, o) => Err(Error::parse(*o, "expected an integer")),
    }
}

fn build(e: &Sexp) -> Result<Property> {
    match e {
        Sexp::Atom(s, o) => match s.as_str() {
            "edgeless" => Ok(Property::Edgeless),
            "cliques" => Ok(Property::Cliques),
            "all" => Ok(Property::AllGraphs),
            "empty" => Ok(Property::Empty),
            _ => Err(Error::parse(*o, format!("unknown property `{s}`"))),
        },
        Sexp::List(items, o) => {
            let Some(Sexp::Atom(head, _)) = items.first() else {
                return Err(Error::parse(*o, "expected an operator after `(`"));
            };
            let args = &items[1..];
            let arity = |n: usize| -> Result<()> {
                if args.len() != n {
                    Err(Error::parse(
                        *o,
                        format!("`{head}` takes {n} argument(s), got {}", args.len()),
                    ))
                } else {
                    Ok(())
                }
            };
            match head.as_str() {
                "mcc" => {
                    arity(1)?;
                    Ok(Property::ComponentOrderAtMost(int_arg(&args[0])?))
                }
                "du" => {
                    arity(1)?;
                    Property::disjoint_unions_of(graph_arg(&args[0])?)
                        .map_err(|err| Error::parse(args[0].offset(), err.to_string()))
                }
                "induced-free" => {
                    arity(1)?;
                    Ok(Property::induced_free(graph_arg(&args[0])?))
                }
                "order-in" => Ok(Property::OrderIn(OrderSet::finite(
                    args.iter().map(int_arg).collect::<Result<Vec<_>>>()?,
                ))),
                "order-mod" => {
                    arity(2)?;
                    let m = int_arg(&args[1])?;
                    OrderSet::residue(int_arg(&args[0])?, m)
                        .map(Property::OrderIn)
                        .map_err(|err| Error::parse(args[1].offset(), err.to_string()))
                }
                "explicit" => {
                    let graphs = args.iter().map(graph_arg).collect::<Result<Vec<_>>>()?;
                    Ok(Property::explicit(&graphs))
                }
                "union" | "intersection" => {
                    if args.len() < 2 {
                        return Err(Error::parse(*o, format!("`{head}` needs at least 2 arguments")));
                    }
                    let mut parts = args.iter().map(build);
                    let mut acc = parts.next().unwrap()?;
                    for p in parts {
                        acc = if head == "union" {
                            Property::union(acc, p?)
                        } else {
                            Property::intersection(acc, p?)
                        };
                    }
                    Ok(acc)
                }
                "not" => {
                    arity(1)?;
                    Ok(Property::not(build(&args[0])?))
                }
                _ => Err(Error::parse(*o + 1, format!("unknown operator `{head}`"))),
            }
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    /// Grammar:
    ///
    /// ```text
    /// prop  := edgeless | cliques | all | empty
    ///        | (mcc t) | (du G) | (induced-free G)
    ///        | (order-in n ...) | (order-mod r m)
    ///        | (explicit G ...)
    ///        | (union prop prop ...) | (intersection prop prop ...) | (not prop)
    /// G     := K5 | E3 | C4 | P4 | D6 | K1,3 | C4+C4 | (mc m r) | <graph6>
    /// ```
    fn from_str(s: &str) -> Result<Self> {
        build(&tokenize(s)?)
    }
}

// ---------------------------------------------------------------------------
// bounded closure checks and speeds
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub holds: bool,
    /// `(G, H)` violating the closure condition.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<(Graph, Graph)>,
    pub checked_up_to: usize,
    /// Which condition failed, when one did.
    pub failed: Option<String>,
}

fn serialize_witness<S: serde::Serializer>(
    w: &Option<(Graph, Graph)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    w.map(|(a, b)| [write_graph6(&a), write_graph6(&b)])
        .serialize(s)
}

impl ClosureReport {
    fn holds(nmax: usize) -> Self {
        ClosureReport {
            holds: true,
            witness: None,
            checked_up_to: nmax,
            failed: None,
        }
    }

    fn fails(nmax: usize, a: Graph, b: Graph, why: &str) -> Self {
        ClosureReport {
            holds: false,
            witness: Some((a, b)),
            checked_up_to: nmax,
            failed: Some(why.to_string()),
        }
    }
}

/// Members of `p` among the census graphs of order `n`.
pub fn members(p: &Property, n: usize, limits: &Limits) -> Result<Vec<Graph>> {
    Ok(census(n, limits)?
        .par_iter()
        .filter(|g| p.contains(g))
        .copied()
        .collect())
}

/// Closed under (non-empty) induced subgraphs, checked on all members of
/// order `<= nmax`. Single-vertex deletions suffice, since every induced
/// subgraph is reached by a chain of them through members of smaller order.
pub fn is_hereditary_upto(p: &Property, nmax: usize, limits: &Limits) -> Result<ClosureReport> {
    Limits::check("closure check order", nmax, limits.enumeration)?;
    for n in 2..=nmax {
        let witness = members(p, n, limits)?.into_iter().find_map(|g| {
            (0..n).find_map(|v| {
                let sub = g.induced_mask(full_mask(n) & !(1 << v));
                (!p.contains(&sub)).then_some((g, sub))
            })
        });
        if let Some((g, sub)) = witness {
            return Ok(ClosureReport::fails(nmax, g, sub, "induced subgraph"));
        }
    }
    Ok(ClosureReport::holds(nmax))
}

/// Closed under disjoint unions and under taking connected components,
/// checked on members of order `<= nmax` (unions only when the result has
/// order `<= nmax`).
pub fn is_compton_gessel_upto(
    p: &Property,
    nmax: usize,
    limits: &Limits,
) -> Result<ClosureReport> {
    Limits::check("closure check order", nmax, limits.enumeration)?;
    let by_order: Vec<Vec<Graph>> = (0..=nmax)
        .map(|n| members(p, n, limits))
        .collect::<Result<_>>()?;
    for (n, ms) in by_order.iter().enumerate() {
        for g in ms {
            for c in g.connected_components() {
                let comp = g.induced_mask(c.bits());
                if !p.contains(&comp) {
                    return Ok(ClosureReport::fails(nmax, *g, comp, "connected component"));
                }
            }
        }
        for a in 1..=n / 2 {
            let b = n - a;
            for g in &by_order[a] {
                for h in &by_order[b] {
                    let u = g.disjoint_union(h)?;
                    if !p.contains(&u) {
                        return Ok(ClosureReport::fails(nmax, *g, *h, "disjoint union"));
                    }
                }
            }
        }
    }
    Ok(ClosureReport::holds(nmax))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Speed {
    #[serde(serialize_with = "crate::polynomials::serialize_biguint")]
    pub labeled: BigUint,
    #[serde(serialize_with = "crate::polynomials::serialize_biguint")]
    pub unlabeled: BigUint,
}

/// Labeled and unlabeled number of members of order `n`.
///
/// For `n <= 5` the labeled count comes from scanning all labeled graphs;
/// above that it is `sum n!/|Aut(G)|` over the unlabeled members.
pub fn speed(p: &Property, n: usize, limits: &Limits) -> Result<Speed> {
    let ms = members(p, n, limits)?;
    let unlabeled = BigUint::from(ms.len());
    let labeled = if n <= 5 {
        labeled_speed_direct(p, n)
    } else {
        labeled_speed_by_automorphisms(&ms)
    };
    Ok(Speed { labeled, unlabeled })
}

pub(crate) fn labeled_speed_direct(p: &Property, n: usize) -> BigUint {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let count = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter(|bits| {
            let mut rows = vec![0u32; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
            }
            p.contains(&Graph::from_rows(&rows).expect("symmetric"))
        })
        .count();
    BigUint::from(count)
}

pub(crate) fn labeled_speed_by_automorphisms(ms: &[Graph]) -> BigUint {
    ms.iter()
        .map(|g| {
            let fact: BigUint = (1..=g.order()).map(BigUint::from).product();
            fact / BigUint::from(automorphism_count(g))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use crate::graph::{census_upto, make_named, Family};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn named(f: Family, p: &[usize]) -> Graph {
        make_named(f, p).unwrap()
    }

    fn c3() -> Graph {
        named(Family::Cycle, &[3])
    }

    fn builtins() -> Vec<Property> {
        vec![
            Property::Edgeless,
            Property::Cliques,
            Property::AllGraphs,
            Property::Empty,
            Property::ComponentOrderAtMost(2),
            Property::disjoint_unions_of(c3()).unwrap(),
            Property::induced_free(named(Family::Path, &[3])),
            Property::OrderIn(OrderSet::finite([2, 4])),
            Property::OrderIn(OrderSet::residue(0, 3).unwrap()),
            Property::explicit(&[named(Family::Cycle, &[4]), named(Family::Path, &[3])]),
            Property::disjoint_unions_of(named(Family::Path, &[3])).unwrap(),
            Property::induced_free(named(Family::CompleteBipartite, &[1, 3])),
        ]
    }

    #[test]
    fn membership_examples() {
        assert!(Property::Edgeless.contains(&Graph::edgeless(5).unwrap()));
        let du = Property::disjoint_unions_of(c3()).unwrap();
        assert!(du.contains(&named(Family::CycleUnion, &[2, 3])));
        assert!(!du.contains(&named(Family::Cycle, &[4])));
        assert!(!du.contains(&Graph::null()));
        assert!(!Property::Cliques.contains(&Graph::null()));
        assert!(Property::Edgeless.contains_null());
        assert!(Property::AllGraphs.contains_null());
    }

    #[test]
    fn k2_free_is_edgeless_and_mcc1_is_edgeless() {
        let k2_free = Property::induced_free(named(Family::Complete, &[2]));
        for g in census_upto(5, &Limits::default()).unwrap() {
            assert_eq!(k2_free.contains(&g), Property::Edgeless.contains(&g));
            assert_eq!(
                Property::ComponentOrderAtMost(1).contains(&g),
                Property::Edgeless.contains(&g)
            );
        }
    }

    #[test]
    fn boolean_laws_on_census() {
        let props = builtins();
        let graphs = census_upto(5, &Limits::default()).unwrap();
        for a in &props {
            for b in &props {
                let u = Property::union(a.clone(), b.clone());
                let i = Property::intersection(a.clone(), b.clone());
                let de_morgan = Property::not(Property::union(
                    Property::not(a.clone()),
                    Property::not(b.clone()),
                ));
                for g in &graphs {
                    let (x, y) = (a.contains(g), b.contains(g));
                    assert_eq!(u.contains(g), x || y);
                    assert_eq!(i.contains(g), x && y);
                    assert_eq!(de_morgan.contains(g), x && y);
                }
            }
        }
    }

    #[test]
    fn hereditary_examples() {
        let limits = Limits::default();
        assert!(is_hereditary_upto(&Property::Edgeless, 6, &limits).unwrap().holds);
        let r = is_hereditary_upto(&Property::disjoint_unions_of(c3()).unwrap(), 6, &limits)
            .unwrap();
        assert!(!r.holds);
        let (g, sub) = r.witness.unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&c3()));
        assert_eq!(canonical_code(&sub), canonical_code(&named(Family::Path, &[2])));
        let single = Property::explicit(&[named(Family::Cycle, &[4])]);
        assert!(!is_hereditary_upto(&single, 5, &limits).unwrap().holds);
        for p in [
            Property::Cliques,
            Property::induced_free(named(Family::Path, &[3])),
            Property::ComponentOrderAtMost(2),
        ] {
            let r = is_hereditary_upto(&p, 6, &limits).unwrap();
            assert!(r.holds, "{p}");
            // every induced subgraph of a member is a member, directly
            for n in 1..=6 {
                for g in members(&p, n, &limits).unwrap() {
                    for s in 1..(1u32 << n) {
                        assert!(p.contains(&g.induced_mask(s)), "{p} {g:?} {s:b}");
                    }
                }
            }
        }
        assert!(is_hereditary_upto(&Property::Edgeless, 9, &limits).is_err());
    }

    #[test]
    fn compton_gessel_examples() {
        let limits = Limits::default();
        assert!(is_compton_gessel_upto(&Property::Edgeless, 6, &limits).unwrap().holds);
        assert!(
            is_compton_gessel_upto(&Property::disjoint_unions_of(c3()).unwrap(), 6, &limits)
                .unwrap()
                .holds
        );
        let r = is_compton_gessel_upto(&Property::explicit(&[c3()]), 6, &limits).unwrap();
        assert!(!r.holds);
        assert_eq!(r.failed.as_deref(), Some("disjoint union"));
        let r = is_compton_gessel_upto(&Property::OrderIn(OrderSet::finite([2])), 4, &limits)
            .unwrap();
        assert_eq!(r.failed.as_deref(), Some("connected component"));
    }

    #[test]
    fn speed_examples() {
        let limits = Limits::default();
        let s = speed(&Property::AllGraphs, 4, &limits).unwrap();
        assert_eq!((s.labeled, s.unlabeled), (BigUint::from(64u32), BigUint::from(11u32)));
        for n in 1..=7 {
            let s = speed(&Property::Edgeless, n, &limits).unwrap();
            assert_eq!((s.labeled, s.unlabeled), (BigUint::from(1u32), BigUint::from(1u32)));
        }
        let s = speed(&Property::Cliques, 5, &limits).unwrap();
        assert_eq!((s.labeled, s.unlabeled), (BigUint::from(1u32), BigUint::from(1u32)));
        // 2^C(7,2) labeled graphs in total
        let s = speed(&Property::AllGraphs, 7, &limits).unwrap();
        assert_eq!(s.labeled, BigUint::from(1u64 << 21));
        assert_eq!(s.unlabeled, BigUint::from(1044u32));
    }

    #[test]
    fn labeled_speed_routes_agree() {
        let limits = Limits::default();
        for p in builtins() {
            for n in 1..=5 {
                let ms = members(&p, n, &limits).unwrap();
                assert_eq!(
                    labeled_speed_direct(&p, n),
                    labeled_speed_by_automorphisms(&ms),
                    "{p} n={n}"
                );
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "edgeless",
            "(induced-free C5)",
            "(du C4)",
            "(mcc 2)",
            "(order-in 3 6 9)",
            "(order-mod 1 2)",
            "(union edgeless cliques)",
            "(intersection cliques (not (order-in 1)))",
            "(explicit D?{ C4)",
            "(du (mc 1 4))",
        ] {
            let p: Property = text.parse().unwrap();
            let again: Property = p.to_string().parse().unwrap();
            assert_eq!(p, again, "{text}");
        }
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = |s: &str| match s.parse::<Property>() {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected parse error for {s}, got {other:?}"),
        };
        assert_eq!(err("(mcc"), 4);
        assert_eq!(err("(bogus 1)"), 1);
        assert_eq!(err("edgeless )"), 9);
        assert_eq!(err("(du P3+P3)"), 4);
        assert_eq!(err("(mcc x)"), 5);
        assert_eq!(err("wat"), 0);
    }

    proptest! {
        #[test]
        fn membership_is_isomorphism_invariant(g in arb_graph(8), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let h = g.relabel(&perm).unwrap();
            for p in builtins() {
                prop_assert_eq!(p.contains(&g), p.contains(&h), "{}", p);
            }
        }
    }
}
