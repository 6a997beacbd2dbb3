//! Rank-2 lattice primitives: primitive vectors, determinants and
//! orientation-preserving basis changes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector `(a, b)` of the lattice `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticeVector {
    pub a: i64,
    pub b: i64,
}

impl LatticeVector {
    pub const E1: LatticeVector = LatticeVector { a: 1, b: 0 };
    pub const E2: LatticeVector = LatticeVector { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        LatticeVector { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True iff `gcd(|a|, |b|) = 1`.
    pub fn is_primitive(&self) -> bool {
        gcd_u64(self.a.unsigned_abs(), self.b.unsigned_abs()) == 1
    }

    /// Position in the counterclockwise order starting at the positive x-axis.
    /// Only meaningful for nonzero vectors.
    pub(crate) fn half_plane(&self) -> u8 {
        if self.b > 0 || (self.b == 0 && self.a > 0) {
            0
        } else {
            1
        }
    }

    /// Exact comparison of polar angles in `[0, 2π)`.
    pub(crate) fn angle_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.half_plane().cmp(&other.half_plane()).then_with(|| det2(other, self).cmp(&BigInt::from(0)))
    }
}

impl From<[i64; 2]> for LatticeVector {
    fn from([a, b]: [i64; 2]) -> Self {
        LatticeVector { a, b }
    }
}

impl From<LatticeVector> for [i64; 2] {
    fn from(v: LatticeVector) -> Self {
        [v.a, v.b]
    }
}

impl From<(i64, i64)> for LatticeVector {
    fn from((a, b): (i64, i64)) -> Self {
        LatticeVector { a, b }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub(crate) fn gcd_u64(x: u64, y: u64) -> u64 {
    x.gcd(&y)
}

/// Splits `v` into `(v0, k)` with `v = k * v0`, `v0` primitive and `k >= 1`.
pub fn primitivize(v: LatticeVector) -> Result<(LatticeVector, u64)> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let k = gcd_u64(v.a.unsigned_abs(), v.b.unsigned_abs());
    // k divides |a| and |b|, so the quotients fit unless v = k * (±1, 0) with
    // a = i64::MIN, where k = 2^63 and the quotient is ±1 again.
    let div = |x: i64| -> i64 { (x as i128 / k as i128) as i64 };
    Ok((LatticeVector::new(div(v.a), div(v.b)), k))
}

/// Same as [`primitivize`] for vectors computed in wider arithmetic.
pub(crate) fn primitivize_wide(a: i128, b: i128) -> Result<(LatticeVector, u128)> {
    if a == 0 && b == 0 {
        return Err(Error::ZeroVector);
    }
    let k = a.unsigned_abs().gcd(&b.unsigned_abs());
    let a0 = i64::try_from(a / k as i128).map_err(|_| Error::Overflow)?;
    let b0 = i64::try_from(b / k as i128).map_err(|_| Error::Overflow)?;
    Ok((LatticeVector::new(a0, b0), k))
}

/// `u.a * v.b - v.a * u.b`, exact.
pub fn det2(u: &LatticeVector, v: &LatticeVector) -> BigInt {
    BigInt::from(u.a as i128 * v.b as i128) - BigInt::from(v.a as i128 * u.b as i128)
}

/// An integer 2x2 matrix of determinant +1 acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularMap {
    pub m11: i64,
    pub m12: i64,
    pub m21: i64,
    pub m22: i64,
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap { m11: 1, m12: 0, m21: 0, m22: 1 };

    /// Builds a map from its rows, rejecting anything whose determinant is not +1.
    pub fn from_rows(r1: [i64; 2], r2: [i64; 2]) -> Result<Self> {
        let map = UnimodularMap { m11: r1[0], m12: r1[1], m21: r2[0], m22: r2[1] };
        if map.determinant() != BigInt::from(1) {
            return Err(Error::InvalidParameter(format!("map with rows {r1:?}, {r2:?} does not have determinant +1")));
        }
        Ok(map)
    }

    pub fn determinant(&self) -> BigInt {
        BigInt::from(self.m11 as i128 * self.m22 as i128) - BigInt::from(self.m12 as i128 * self.m21 as i128)
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.m11, self.m12], [self.m21, self.m22]]
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        let row = |x: i64, y: i64| -> Result<i64> {
            let r = x as i128 * v.a as i128 + y as i128 * v.b as i128;
            i64::try_from(r).map_err(|_| Error::Overflow)
        };
        Ok(LatticeVector::new(row(self.m11, self.m12)?, row(self.m21, self.m22)?))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &UnimodularMap) -> Result<UnimodularMap> {
        let c1 = self.apply(&LatticeVector::new(other.m11, other.m21))?;
        let c2 = self.apply(&LatticeVector::new(other.m12, other.m22))?;
        Ok(UnimodularMap { m11: c1.a, m12: c2.a, m21: c1.b, m22: c2.b })
    }
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

/// Returns the determinant-one map sending the primitive vector `v` to `(1, 0)`.
///
/// Rows are `(x, y)` and `(-b, a)` where `x*a + y*b = 1`. Among all Bézout
/// pairs the one with the smallest `|x|` is used (ties toward `x >= 0`), and
/// when `x` is forced (`b = 0`) the smallest `|y|`.
pub fn unimodular_to_e1(v: LatticeVector) -> Result<UnimodularMap> {
    if !v.is_primitive() {
        return Err(Error::NotPrimitiveVector(v.a, v.b));
    }
    let (a, b) = (v.a as i128, v.b as i128);
    let egcd = a.extended_gcd(&b);
    // extended_gcd may return gcd = -1 for negative inputs.
    let (mut x, mut y) = if egcd.gcd < 0 { (-egcd.x, -egcd.y) } else { (egcd.x, egcd.y) };
    debug_assert_eq!(x * a + y * b, 1);
    if b != 0 {
        // General solution: (x + t*b, y - t*a).
        let m = b.abs();
        let mut xr = x.rem_euclid(m);
        if 2 * xr > m {
            xr -= m;
        }
        let t = (xr - x) / b;
        x = xr;
        y -= t * a;
    } else {
        y = 0;
    }
    let x = i64::try_from(x).map_err(|_| Error::Overflow)?;
    let y = i64::try_from(y).map_err(|_| Error::Overflow)?;
    let m21 = v.b.checked_neg().ok_or(Error::Overflow)?;
    Ok(UnimodularMap { m11: x, m12: y, m21, m22: v.a })
}
