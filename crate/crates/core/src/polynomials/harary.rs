//! Partition counts `h_i`: partitions of `V(G)` into `i` blocks, each
//! inducing a member of the property.
//!
//! Counting runs a subset recursion instead of listing partitions: the block
//! holding the lowest remaining vertex is chosen first, so
//! `f(U) = sum over member blocks B, min(U) in B, of f(U \ B)` with `f`
//! tracked per block count and memoised on `U`.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::FFPoly;
use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph};
use crate::limits::Limits;
use crate::properties::Property;

/// Search steps allowed on the large-order route for disjoint unions.
const COPY_ROUTE_BUDGET: u64 = 50_000_000;

pub fn harary_counts(g: &Graph, p: &Property) -> Result<FFPoly> {
    harary_counts_with(g, p, &Limits::default())
}

/// Partition counts with explicit limits.
///
/// Orders above `limits.partition` are accepted only for disjoint unions of
/// a fixed connected pattern, where blocks are assembled from induced copies.
pub fn harary_counts_with(g: &Graph, p: &Property, limits: &Limits) -> Result<FFPoly> {
    let n = g.order();
    if n == 0 {
        return Ok(FFPoly::new(vec![BigUint::from(1u32)]));
    }
    let counts = if n <= limits.partition {
        let mut c = Counter::new(g, Blocks::Generic(p, MemberMemo::new(n)));
        c.count(full_mask(n))?
    } else if let Property::DisjointUnionsOf(h) = p {
        let t = h.order();
        if n % t != 0 {
            vec![0; n + 1]
        } else {
            let copies = induced_copies(g, p, t)?;
            let mut c = Counter::new(g, Blocks::Copies(copies));
            c.count(full_mask(n))?
        }
    } else {
        return Err(Error::capacity("partition enumeration order", n, limits.partition));
    };
    let mut coeffs: Vec<BigUint> = counts.into_iter().map(BigUint::from).collect();
    coeffs.resize(n + 1, BigUint::default());
    Ok(FFPoly::new(coeffs))
}

/// `c_i = i! h_i`.
pub fn coloring_counts(h: &FFPoly) -> Vec<BigUint> {
    let mut fact = BigUint::from(1u32);
    h.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i > 0 {
                fact *= BigUint::from(i);
            }
            c * &fact
        })
        .collect()
}

struct MemberMemo {
    dense: Vec<u8>,
    sparse: HashMap<u32, bool>,
}

impl MemberMemo {
    fn new(n: usize) -> Self {
        MemberMemo {
            dense: if n <= 20 { vec![0; 1 << n] } else { Vec::new() },
            sparse: HashMap::new(),
        }
    }

    fn get(&mut self, p: &Property, g: &Graph, mask: u32) -> bool {
        if let Some(slot) = self.dense.get_mut(mask as usize) {
            if *slot == 0 {
                *slot = if p.contains_mask(g, mask) { 1 } else { 2 };
            }
            *slot == 1
        } else {
            *self
                .sparse
                .entry(mask)
                .or_insert_with(|| p.contains_mask(g, mask))
        }
    }
}

/// One induced copy of the pattern, with its closed neighbourhood.
#[derive(Clone, Copy)]
struct Piece {
    mask: u32,
    closed: u32,
}

enum Blocks<'a> {
    Generic(&'a Property, MemberMemo),
    /// Copies grouped by their lowest vertex.
    Copies(Vec<Vec<Piece>>),
}

struct Counter<'a> {
    g: &'a Graph,
    blocks: Blocks<'a>,
    memo: HashMap<u32, Vec<u128>>,
    steps: u64,
}

impl<'a> Counter<'a> {
    fn new(g: &'a Graph, blocks: Blocks<'a>) -> Self {
        Counter {
            g,
            blocks,
            memo: HashMap::new(),
            steps: 0,
        }
    }

    /// Index `i` of the result counts partitions of `u` into `i` blocks.
    /// Counts never exceed Bell(32) < 2^127.
    fn count(&mut self, u: u32) -> Result<Vec<u128>> {
        if u == 0 {
            return Ok(vec![1]);
        }
        if let Some(r) = self.memo.get(&u) {
            return Ok(r.clone());
        }
        let low = u & u.wrapping_neg();
        let mut res = vec![0u128; u.count_ones() as usize + 1];
        for b in self.blocks_of(u, low)? {
            let rest = self.count(u & !b)?;
            for (i, c) in rest.iter().enumerate() {
                res[i + 1] += c;
            }
        }
        self.memo.insert(u, res.clone());
        Ok(res)
    }

    /// Member blocks `b` with `low <= b <= u`.
    fn blocks_of(&mut self, u: u32, low: u32) -> Result<Vec<u32>> {
        let g = self.g;
        match &mut self.blocks {
            Blocks::Generic(p, memo) => {
                let rest = u & !low;
                let mut out = Vec::new();
                let mut sub = rest;
                loop {
                    let b = sub | low;
                    if memo.get(p, g, b) {
                        out.push(b);
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                Ok(out)
            }
            Blocks::Copies(by_min) => {
                let mut out = Vec::new();
                let v = low.trailing_zeros() as usize;
                for c in &by_min[v] {
                    if c.mask & !u == 0 {
                        extend_block(by_min, u, c.mask, c.closed, v + 1, &mut out, &mut self.steps)?;
                    }
                }
                Ok(out)
            }
        }
    }
}

/// Adds further copies with lowest vertex `>= from`, disjoint from and
/// non-adjacent to the block so far.
fn extend_block(
    by_min: &[Vec<Piece>],
    u: u32,
    block: u32,
    closed: u32,
    from: usize,
    out: &mut Vec<u32>,
    steps: &mut u64,
) -> Result<()> {
    *steps += 1;
    if *steps > COPY_ROUTE_BUDGET {
        return Err(Error::capacity(
            "disjoint-union partition search steps",
            *steps as usize,
            COPY_ROUTE_BUDGET as usize,
        ));
    }
    out.push(block);
    for (w, copies) in by_min.iter().enumerate().skip(from) {
        if u >> w & 1 == 0 || closed >> w & 1 == 1 {
            continue;
        }
        for c in copies {
            if c.mask & !u == 0 && c.mask & closed == 0 {
                extend_block(by_min, u, block | c.mask, closed | c.closed, w + 1, out, steps)?;
            }
        }
    }
    Ok(())
}

fn induced_copies(g: &Graph, p: &Property, t: usize) -> Result<Vec<Vec<Piece>>> {
    let n = g.order();
    let mut by_min = vec![Vec::new(); n];
    let mut seen = 0u64;
    // connected vertex sets grown from their lowest vertex; each extension
    // only adds exclusive neighbours, so every set is produced once
    for v in 0..n {
        let above = !full_mask(v + 1);
        let start = 1u32 << v;
        let mut stack = vec![(start, start | g.rows()[v], g.rows()[v] & above)];
        let mut found: Vec<u32> = Vec::new();
        while let Some((set, closed, mut ext)) = stack.pop() {
            seen += 1;
            if seen > COPY_ROUTE_BUDGET {
                return Err(Error::capacity(
                    "induced copy search steps",
                    seen as usize,
                    COPY_ROUTE_BUDGET as usize,
                ));
            }
            if set.count_ones() as usize == t {
                if p.contains_mask(g, set) {
                    found.push(set);
                }
                continue;
            }
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                let exclusive = g.rows()[w] & !closed & above;
                stack.push((set | 1 << w, closed | g.rows()[w], ext | exclusive));
            }
        }
        found.sort_unstable();
        found.dedup();
        by_min[v] = found
            .into_iter()
            .map(|mask| Piece {
                mask,
                closed: crate::graph::VertexSet::from_bits(mask)
                    .iter()
                    .fold(mask, |acc, x| acc | g.rows()[x]),
            })
            .collect();
    }
    Ok(by_min)
}
