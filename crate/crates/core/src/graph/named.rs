//! Named graph families and the short textual names used on the command line.

use super::{parse_graph6, Graph, MAX_ORDER};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_n`, one parameter.
    Complete,
    /// `E_n`, one parameter.
    Empty,
    /// `C_n`, one parameter, `n >= 3`.
    Cycle,
    /// `P_n` on `n` vertices, one parameter.
    Path,
    /// `D_n`: a triangle with a pendant path, `n` vertices in total, `n >= 3`.
    TriangleTail,
    /// `mC_r`: `m` disjoint `r`-cycles, parameters `(m, r)`.
    CycleUnion,
    /// `D_{r,m}`, parameters `(r, m)`; the same graph as `mC_r`.
    CycleUnionRm,
    /// `K_{a,b}`, parameters `(a, b)`.
    CompleteBipartite,
}

pub fn make_named(family: Family, params: &[usize]) -> Result<Graph> {
    let arity = match family {
        Family::CycleUnion | Family::CycleUnionRm | Family::CompleteBipartite => 2,
        _ => 1,
    };
    if params.len() != arity {
        return Err(Error::argument(format!(
            "{family:?} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let check = |n: usize| -> Result<usize> {
        if n > MAX_ORDER {
            Err(Error::capacity("graph order", n, MAX_ORDER))
        } else {
            Ok(n)
        }
    };
    match family {
        Family::Complete => {
            let n = check(params[0])?;
            let edges: Vec<_> = (0..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)
        }
        Family::Empty => Graph::edgeless(check(params[0])?),
        Family::Path => {
            let n = check(params[0])?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle => {
            let n = check(params[0])?;
            if n < 3 {
                return Err(Error::argument(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, &cycle_edges(0, n))
        }
        Family::TriangleTail => {
            let n = check(params[0])?;
            if n < 3 {
                return Err(Error::argument(format!(
                    "triangle with tail needs n >= 3, got {n}"
                )));
            }
            let mut edges = vec![(0, 1), (1, 2), (0, 2)];
            edges.extend((3..n).map(|v| (v - 1, v)));
            Graph::from_edges(n, &edges)
        }
        Family::CycleUnion | Family::CycleUnionRm => {
            let (m, r) = if family == Family::CycleUnion {
                (params[0], params[1])
            } else {
                (params[1], params[0])
            };
            if r < 3 || m < 1 {
                return Err(Error::argument(format!(
                    "cycle union needs r >= 3 and m >= 1, got m={m}, r={r}"
                )));
            }
            let n = check(m.saturating_mul(r))?;
            let edges: Vec<_> = (0..m).flat_map(|i| cycle_edges(i * r, r)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            let n = check(a + b)?;
            let edges: Vec<_> = (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)
        }
    }
}

fn cycle_edges(offset: usize, r: usize) -> Vec<(usize, usize)> {
    (0..r).map(|i| (offset + i, offset + (i + 1) % r)).collect()
}

/// Parses a short graph name or a graph6 string.
///
/// Accepted names: `K5`, `E3`, `C4`, `P4`, `D6` (triangle with tail),
/// `K1,3` (complete bipartite), `mc 2 3` (two disjoint triangles) and
/// `+`-joined disjoint unions such as `C4+C4`. Anything else is tried as
/// graph6.
pub fn parse_named(text: &str) -> Result<Graph> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("mc ").or_else(|| t.strip_prefix("mC ")) {
        let nums: Vec<usize> = rest
            .split_whitespace()
            .map(|s| s.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(3, format!("bad cycle-union parameters in `{t}`")))?;
        return make_named(Family::CycleUnion, &nums);
    }
    if t.contains('+') {
        let mut acc = Graph::null();
        for part in t.split('+') {
            acc = acc.disjoint_union(&parse_named(part)?)?;
        }
        return Ok(acc);
    }
    if let Some(g) = parse_family_token(t)? {
        return Ok(g);
    }
    parse_graph6(t)
}

fn parse_family_token(t: &str) -> Result<Option<Graph>> {
    let mut chars = t.chars();
    let Some(head) = chars.next() else {
        return Err(Error::parse(0, "empty graph name"));
    };
    let rest = chars.as_str();
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit() || c == ',') {
        return Ok(None);
    }
    let nums: Vec<usize> = match rest.split(',').map(|s| s.parse()).collect() {
        Ok(v) => v,
        Err(_) => return Ok(None),
    };
    let family = match (head, nums.len()) {
        ('K', 1) => Family::Complete,
        ('K', 2) => Family::CompleteBipartite,
        ('E', 1) => Family::Empty,
        ('C', 1) => Family::Cycle,
        ('P', 1) => Family::Path,
        ('D', 1) => Family::TriangleTail,
        _ => return Ok(None),
    };
    make_named(family, &nums).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        let k3 = make_named(Family::Complete, &[3]).unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        let d4 = make_named(Family::TriangleTail, &[4]).unwrap();
        assert_eq!((d4.order(), d4.size()), (4, 4));
        let two = make_named(Family::CycleUnion, &[2, 3]).unwrap();
        assert_eq!((two.order(), two.size()), (6, 6));
        assert_eq!(two.connected_components().len(), 2);
        assert_eq!(make_named(Family::CycleUnionRm, &[3, 2]).unwrap(), two);
    }

    #[test]
    fn invalid_parameters() {
        assert!(make_named(Family::Cycle, &[2]).is_err());
        assert!(make_named(Family::TriangleTail, &[2]).is_err());
        assert!(make_named(Family::CycleUnion, &[11, 3]).is_err());
        assert!(make_named(Family::CycleUnionRm, &[2, 1]).is_err());
        assert!(make_named(Family::Complete, &[33]).is_err());
        assert!(make_named(Family::Complete, &[1, 2]).is_err());
    }

    #[test]
    fn parses_names() {
        assert_eq!(parse_named("K3").unwrap().size(), 3);
        assert_eq!(parse_named("K1,3").unwrap().degree_sequence(), vec![1, 1, 1, 3]);
        assert_eq!(parse_named("mc 2 3").unwrap().order(), 6);
        assert_eq!(parse_named("C4+C4").unwrap().order(), 8);
        assert_eq!(parse_named("D?{").unwrap().size(), 4);
        assert!(parse_named("C2").is_err());
        assert!(parse_named("Q7").is_err());
    }
}
