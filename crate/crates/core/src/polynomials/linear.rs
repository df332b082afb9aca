//! Characteristic polynomials of the adjacency and Laplacian matrices.
//!
//! Faddeev-LeVerrier over big integers: with `M_0 = 0`, `c_n = 1`,
//! `M_k = A M_(k-1) + c_(n-k+1) I` and `c_(n-k) = -tr(A M_k) / k`. The
//! division is exact because every `c_i` is an integer.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::MonoPoly;
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;

pub fn characteristic_poly(g: &Graph) -> Result<MonoPoly> {
    Limits::check("spectral order", g.order(), Limits::default().spectral)?;
    Ok(char_poly(&adjacency(g)))
}

/// Characteristic polynomial of `D - A`.
pub fn laplacian_poly(g: &Graph) -> Result<MonoPoly> {
    Limits::check("spectral order", g.order(), Limits::default().spectral)?;
    let mut m = adjacency(g);
    for (v, row) in m.iter_mut().enumerate() {
        for x in row.iter_mut() {
            *x = -&*x;
        }
        row[v] = BigInt::from(g.degree(v));
    }
    Ok(char_poly(&m))
}

fn adjacency(g: &Graph) -> Vec<Vec<BigInt>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| BigInt::from(u8::from(g.has_edge(u, v)))).collect())
        .collect()
}

fn char_poly(a: &[Vec<BigInt>]) -> MonoPoly {
    let n = a.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_(k-1) + c_(n-k+1) I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        c[n - k] = -trace / BigInt::from(k);
    }
    MonoPoly::new(c)
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}
