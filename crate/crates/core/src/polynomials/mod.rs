//! Exact graph polynomials.
//!
//! Two representations are used. [`FFPoly`] stores non-negative
//! coefficients in the falling-factorial basis `k_(i) = k(k-1)...(k-i+1)`;
//! it is the natural home of partition counts. [`MonoPoly`] stores signed
//! coefficients in the monomial basis. All arithmetic is arbitrary
//! precision.

mod classic;
mod harary;
mod linear;
mod numbers;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use classic::{
    chromatic_dc, clique_poly, domination_poly, independence_poly, matching_polys,
    subset_generating,
};
pub use harary::{coloring_counts, harary_counts, harary_counts_with};
pub use linear::{characteristic_poly, laplacian_poly};
pub use numbers::{falling_factorial, restricted_stirling2, stirling1_signed, stirling2};

/// Coefficients `h_0..h_n` in the falling-factorial basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FFPoly {
    coeffs: Vec<BigUint>,
}

impl FFPoly {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        FFPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `sum_i h_i k_(i)`. Terms with `i > k` vanish on their own.
    pub fn evaluate(&self, k: &BigUint) -> BigUint {
        evaluate_ff(self, k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_monomial(&self) -> MonoPoly {
        ff_to_monomial(self)
    }
}

/// Signed coefficients in the monomial basis, trimmed so the last one is
/// non-zero (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonoPoly {
    coeffs: Vec<BigInt>,
}

impl MonoPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        MonoPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        MonoPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        MonoPoly::default()
    }

    pub fn one() -> Self {
        MonoPoly::from_i64(&[1])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        MonoPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &MonoPoly) -> MonoPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        MonoPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &MonoPoly) -> MonoPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        MonoPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &MonoPoly) -> MonoPoly {
        if self.is_zero() || other.is_zero() {
            return MonoPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        MonoPoly::new(out)
    }
}

impl fmt::Display for MonoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for FFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    format!("k_({i})")
                } else {
                    format!("{c}*k_({i})")
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    basis: String,
    coeffs: Vec<String>,
}

impl Serialize for FFPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            basis: "falling".into(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl Serialize for MonoPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            basis: "monomial".into(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

fn parse_coeffs<T: std::str::FromStr, E: serde::de::Error>(
    json: &PolyJson,
    basis: &str,
) -> std::result::Result<Vec<T>, E> {
    if json.basis != basis {
        return Err(E::custom(format!(
            "expected basis `{basis}`, got `{}`",
            json.basis
        )));
    }
    json.coeffs
        .iter()
        .map(|c| c.parse().map_err(|_| E::custom(format!("bad coefficient `{c}`"))))
        .collect()
}

impl<'de> Deserialize<'de> for FFPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PolyJson::deserialize(d)?;
        Ok(FFPoly::new(parse_coeffs(&json, "falling")?))
    }
}

impl<'de> Deserialize<'de> for MonoPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PolyJson::deserialize(d)?;
        Ok(MonoPoly::new(parse_coeffs(&json, "monomial")?))
    }
}

/// Serializes a big integer as a decimal string.
pub fn serialize_biguint<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn evaluate_ff(p: &FFPoly, k: &BigUint) -> BigUint {
    p.coeffs
        .iter()
        .enumerate()
        .map(|(i, h)| h * falling_factorial(k, i))
        .sum()
}

/// Basis change through `k_(i) = sum_j s(i,j) k^j`.
pub fn ff_to_monomial(p: &FFPoly) -> MonoPoly {
    let n = p.coeffs.len();
    let mut out = vec![BigInt::zero(); n];
    for (i, h) in p.coeffs.iter().enumerate() {
        if h.is_zero() {
            continue;
        }
        let h = BigInt::from(h.clone());
        for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
            *slot += &h * stirling1_signed(i, j);
        }
    }
    MonoPoly::new(out)
}

/// A value at 1 outside `{0, 1}` rules out being a Harary polynomial.
pub fn not_harary_witness(value_at_one: &BigInt) -> bool {
    !(value_at_one.is_zero() || value_at_one.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_monomial() {
        assert_eq!(MonoPoly::from_i64(&[0, 2, -3, 1]).to_string(), "x^3 - 3x^2 + 2x");
        assert_eq!(MonoPoly::from_i64(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(MonoPoly::from_i64(&[0, 0, -1]).to_string(), "-x^2");
        assert_eq!(MonoPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let p = FFPoly::new(vec![0u32.into(), 1u32.into(), 3u32.into(), 1u32.into()]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"basis":"falling","coeffs":["0","1","3","1"]}"#);
        assert_eq!(serde_json::from_str::<FFPoly>(&s).unwrap(), p);
        let m = MonoPoly::from_i64(&[-1, 0, 1]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"basis":"monomial","coeffs":["-1","0","1"]}"#);
        assert_eq!(serde_json::from_str::<MonoPoly>(&s).unwrap(), m);
        assert!(serde_json::from_str::<FFPoly>(&s).is_err());
    }

    #[test]
    fn basis_change_examples() {
        let k2 = FFPoly::new(vec![0u32.into(), 0u32.into(), 1u32.into()]);
        assert_eq!(ff_to_monomial(&k2), MonoPoly::from_i64(&[0, -1, 1]));
        assert_eq!(ff_to_monomial(&FFPoly::new(vec![1u32.into()])), MonoPoly::one());
    }

    #[test]
    fn basis_change_agrees_pointwise() {
        let p = FFPoly::new([3u32, 0, 5, 7, 1, 2].iter().map(|&c| c.into()).collect());
        let m = ff_to_monomial(&p);
        for k in 0u32..12 {
            assert_eq!(BigInt::from(evaluate_ff(&p, &k.into())), m.evaluate(&k.into()));
        }
    }

    #[test]
    fn not_harary_examples() {
        assert!(not_harary_witness(&BigInt::from(-3)));
        assert!(not_harary_witness(&BigInt::from(7)));
        assert!(!not_harary_witness(&BigInt::from(0)));
        assert!(!not_harary_witness(&BigInt::from(1)));
    }

    #[test]
    fn arithmetic() {
        let a = MonoPoly::from_i64(&[1, 1]);
        let b = MonoPoly::from_i64(&[-1, 1]);
        assert_eq!(a.mul(&b), MonoPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(a.sub(&a), MonoPoly::zero());
        assert_eq!(a.add(&b), MonoPoly::from_i64(&[0, 2]));
        assert_eq!(MonoPoly::monomial(3).degree(), Some(3));
    }
}
