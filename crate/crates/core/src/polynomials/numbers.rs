//! Stirling numbers and falling factorials.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::properties::OrderSet;

const STIRLING_MAX: usize = 64;

fn stirling2_table() -> &'static Vec<Vec<BigUint>> {
    static TABLE: OnceLock<Vec<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![vec![BigUint::zero(); STIRLING_MAX + 1]; STIRLING_MAX + 1];
        t[0][0] = BigUint::one();
        for n in 1..=STIRLING_MAX {
            for k in 1..=n {
                t[n][k] = BigUint::from(k) * &t[n - 1][k] + &t[n - 1][k - 1];
            }
        }
        t
    })
}

/// Stirling numbers of the second kind, `0 <= k <= n <= 64`.
pub fn stirling2(n: usize, k: usize) -> Result<BigUint> {
    if n > STIRLING_MAX {
        return Err(Error::capacity("stirling2 order", n, STIRLING_MAX));
    }
    if k > n {
        return Err(Error::argument(format!("stirling2 needs k <= n, got k={k}, n={n}")));
    }
    Ok(stirling2_table()[n][k].clone())
}

/// Signed Stirling numbers of the first kind: `k_(n) = sum_j s(n,j) k^j`.
pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    static TABLE: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut t = vec![vec![BigInt::zero(); STIRLING_MAX + 2]; STIRLING_MAX + 1];
        t[0][0] = BigInt::one();
        for n in 1..=STIRLING_MAX {
            for k in 1..=n {
                t[n][k] = &t[n - 1][k - 1] - BigInt::from(n - 1) * &t[n - 1][k];
            }
        }
        t
    });
    if k > n {
        return BigInt::zero();
    }
    if n <= STIRLING_MAX {
        return t[n][k].clone();
    }
    // outside the table: expand directly
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, c) in row.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * BigInt::from(m);
        }
        row = next;
    }
    row[k].clone()
}

/// Partitions of an `n`-set into `k` blocks whose sizes all lie in `sizes`.
pub fn restricted_stirling2(sizes: &OrderSet, n: usize, k: usize) -> Result<BigUint> {
    const LIMIT: usize = 32;
    if n > LIMIT {
        return Err(Error::capacity("restricted stirling order", n, LIMIT));
    }
    if k > n {
        return Err(Error::argument(format!(
            "restricted stirling needs k <= n, got k={k}, n={n}"
        )));
    }
    let binom = binomials(n);
    // r[m][j]: partitions of an m-set into j admissible blocks
    let mut r = vec![vec![BigUint::zero(); k + 1]; n + 1];
    r[0][0] = BigUint::one();
    for m in 1..=n {
        for j in 1..=k.min(m) {
            // the block holding the first element has size s
            let mut acc = BigUint::zero();
            for s in (1..=m).filter(|&s| sizes.contains(s)) {
                acc += &binom[m - 1][s - 1] * &r[m - s][j - 1];
            }
            r[m][j] = acc;
        }
    }
    Ok(r[n][k].clone())
}

pub(crate) fn binomials(n: usize) -> Vec<Vec<BigUint>> {
    let mut b = vec![vec![BigUint::zero(); n + 1]; n + 1];
    for i in 0..=n {
        b[i][0] = BigUint::one();
        for j in 1..=i {
            b[i][j] = &b[i - 1][j - 1] + if j < i { b[i - 1][j].clone() } else { BigUint::zero() };
        }
    }
    b
}

/// `k (k-1) ... (k-i+1)`; zero once a factor reaches zero.
pub fn falling_factorial(k: &BigUint, i: usize) -> BigUint {
    let mut acc = BigUint::one();
    for j in 0..i {
        let j = BigUint::from(j);
        if &j >= k {
            return BigUint::zero();
        }
        acc *= k - j;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::SetPartitions;

    fn b(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Counts `k`-block partitions with admissible block sizes by enumeration.
    fn oracle_restricted(sizes: &OrderSet, n: usize, k: usize) -> u64 {
        SetPartitions::new(n)
            .filter(|p| p.len() == k && p.iter().all(|b| sizes.contains(b.count_ones() as usize)))
            .count() as u64
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(3, 2).unwrap(), b(3));
        assert_eq!(stirling2(4, 2).unwrap(), b(7));
        for n in 0..=64 {
            assert_eq!(stirling2(n, n).unwrap(), b(1));
        }
        assert!(stirling2(65, 1).is_err());
        assert!(stirling2(3, 4).is_err());
    }

    #[test]
    fn stirling2_matches_enumeration() {
        for n in 0..=8 {
            for k in 0..=n {
                let count = SetPartitions::new(n).filter(|p| p.len() == k).count() as u64;
                assert_eq!(stirling2(n, k).unwrap(), b(count), "S({n},{k})");
            }
        }
    }

    #[test]
    fn restricted_examples() {
        let all = OrderSet::AllPositive;
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(restricted_stirling2(&all, n, k).unwrap(), stirling2(n, k).unwrap());
            }
        }
        let ones = OrderSet::finite([1]);
        for n in 0..=8 {
            for k in 0..=n {
                let want = if k == n { 1 } else { 0 };
                assert_eq!(restricted_stirling2(&ones, n, k).unwrap(), b(want));
            }
        }
        assert_eq!(restricted_stirling2(&OrderSet::finite([2]), 4, 2).unwrap(), b(3));
    }

    #[test]
    fn restricted_matches_enumeration() {
        for sizes in [
            OrderSet::finite([2]),
            OrderSet::finite([3]),
            OrderSet::finite([1, 2]),
            OrderSet::residue(0, 3).unwrap(),
            OrderSet::residue(1, 2).unwrap(),
        ] {
            for n in 0..=9 {
                for k in 0..=n {
                    assert_eq!(
                        restricted_stirling2(&sizes, n, k).unwrap(),
                        b(oracle_restricted(&sizes, n, k)),
                        "{sizes} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&b(5), 3), b(60));
        assert_eq!(falling_factorial(&b(7), 0), b(1));
        assert_eq!(falling_factorial(&b(0), 0), b(1));
        assert_eq!(falling_factorial(&b(3), 4), b(0));
    }

    #[test]
    fn stirling1_expands_falling_factorials() {
        for n in 0..=10 {
            for k in 0u64..=12 {
                let poly: BigInt = (0..=n)
                    .map(|j| stirling1_signed(n, j) * BigInt::from(k).pow(j as u32))
                    .sum();
                assert_eq!(poly, BigInt::from(falling_factorial(&b(k), n)));
            }
        }
        assert_eq!(stirling1_signed(70, 70), BigInt::one());
        assert_eq!(stirling1_signed(66, 65), -BigInt::from(66 * 65 / 2));
    }
}
