//! Complete two-dimensional fans.
//!
//! A fan is stored as its counterclockwise list of primitive ray generators
//! `λ_1, …, λ_{n+2}`. Every public operation addresses rays by their 1-based
//! label, with cyclic successor `λ_{n+3} = λ_1`. The last two rays play a
//! special role: the basis of divisor classes is formed by rays `1..=n`, and
//! a fan is *normalized* when ray `n+1` is `(1, 0)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{det2, unimodular_to_e1, LatticeVector, UnimodularMap};
use crate::matrix::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fan {
    rays: Vec<LatticeVector>,
}

/// Validates a counterclockwise ray list and builds a [`Fan`].
///
/// Checks, in order: at least three rays, primitivity, distinctness, strict
/// counterclockwise turning between cyclic neighbours, and winding number one.
pub fn validate_fan(rays: Vec<LatticeVector>) -> Result<Fan> {
    if rays.len() < 3 {
        return Err(Error::TooFewRays(rays.len()));
    }
    for (i, r) in rays.iter().enumerate() {
        if !r.is_primitive() {
            return Err(Error::NotPrimitive(i + 1));
        }
    }
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if rays[i] == rays[j] {
                return Err(Error::DuplicateRay(i + 1, j + 1));
            }
        }
    }
    let len = rays.len();
    for i in 0..len {
        let next = (i + 1) % len;
        if !det2(&rays[i], &rays[next]).is_positive() {
            return Err(Error::NotCounterclockwise(i + 1, next + 1));
        }
    }
    // Every step turns by an angle in (0, π), so the total turn is 2π times the
    // number of steps that wrap past the positive x-axis.
    let winding = (0..len).filter(|&i| rays[(i + 1) % len].angle_cmp(&rays[i]).is_lt()).count();
    if winding != 1 {
        return Err(Error::NotComplete(winding));
    }
    Ok(Fan { rays })
}

impl Fan {
    pub fn new(rays: impl IntoIterator<Item = impl Into<LatticeVector>>) -> Result<Self> {
        validate_fan(rays.into_iter().map(Into::into).collect())
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn into_rays(self) -> Vec<LatticeVector> {
        self.rays
    }

    /// Number of rays, `n + 2`.
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    /// Never true; fans have at least three rays.
    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    /// Size `n` of the divisor basis (all rays except the last two).
    pub fn basis_len(&self) -> usize {
        self.rays.len() - 2
    }

    pub(crate) fn check_label(&self, label: usize) -> Result<()> {
        if label == 0 || label > self.len() {
            return Err(Error::IndexOutOfRange { label, len: self.len() });
        }
        Ok(())
    }

    /// Ray with the given 1-based label.
    pub fn ray(&self, label: usize) -> Result<LatticeVector> {
        self.check_label(label)?;
        Ok(self.rays[label - 1])
    }

    /// Ray with a 1-based label taken cyclically, so `0` is the last ray and
    /// `len + 1` is the first.
    pub(crate) fn ray_cyclic(&self, label: isize) -> LatticeVector {
        let len = self.len() as isize;
        self.rays[(label - 1).rem_euclid(len) as usize]
    }

    /// True iff the two labels are cyclic neighbours.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let len = self.len();
        i != j && (j == i % len + 1 || i == j % len + 1)
    }

    /// Multiplicity of the cone `σ_i` spanned by rays `i` and `i+1`.
    pub fn multiplicity(&self, label: usize) -> Result<BigInt> {
        self.check_label(label)?;
        Ok(self.cone_mult(label as isize))
    }

    pub(crate) fn cone_mult(&self, label: isize) -> BigInt {
        det2(&self.ray_cyclic(label), &self.ray_cyclic(label + 1))
    }

    pub fn multiplicities(&self) -> Vec<BigInt> {
        (1..=self.len() as isize).map(|i| self.cone_mult(i)).collect()
    }

    /// Wall relation among rays `i-1`, `i`, `i+1`.
    pub fn wall_relation(&self, label: usize) -> Result<WallRelation> {
        self.check_label(label)?;
        let i = label as isize;
        let (prev, mid, next) = (self.ray_cyclic(i - 1), self.ray_cyclic(i), self.ray_cyclic(i + 1));
        let c_prev = det2(&mid, &next);
        let c_mid = -det2(&prev, &next);
        let c_next = det2(&prev, &mid);
        let g = c_prev.gcd(&c_mid).gcd(&c_next);
        // c_prev > 0 already by the counterclockwise invariant
        Ok(WallRelation { c_prev: c_prev / &g, c_mid: c_mid / &g, c_next: c_next / &g })
    }

    pub fn is_smooth_cone(&self, label: usize) -> Result<bool> {
        Ok(self.multiplicity(label)?.is_one())
    }

    pub fn has_smooth_vertex(&self) -> bool {
        (1..=self.len() as isize).any(|i| self.cone_mult(i).is_one())
    }

    /// True iff ray `n+1` is `(1, 0)`.
    pub fn is_normalized(&self) -> bool {
        self.rays[self.len() - 2] == LatticeVector::E1
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized)
        }
    }

    /// Ray `n+2` of a normalized fan, whose second coordinate is positive.
    pub(crate) fn last_ray(&self) -> LatticeVector {
        self.rays[self.len() - 1]
    }

    /// Applies a determinant-one map to every ray.
    pub fn transform(&self, map: &UnimodularMap) -> Result<Fan> {
        let rays = self.rays.iter().map(|r| map.apply(r)).collect::<Result<Vec<_>>>()?;
        // Orientation-preserving unimodular maps keep all invariants.
        debug_assert!(validate_fan(rays.clone()).is_ok());
        Ok(Fan { rays })
    }

    /// Cyclic relabeling so that the ray currently labeled `shift + 1` becomes
    /// ray 1.
    pub fn rotate_labels(&self, shift: usize) -> Fan {
        let mut rays = self.rays.clone();
        rays.rotate_left(shift % self.len());
        Fan { rays }
    }

    /// Relabels cyclically so that `pivot` becomes ray `n+1`, then changes
    /// lattice basis so that ray becomes `(1, 0)`.
    pub fn normalize(&self, pivot: usize) -> Result<Normalized> {
        self.check_label(pivot)?;
        let len = self.len();
        let shift = (pivot + len - (len - 1)) % len;
        let map = unimodular_to_e1(self.rays[pivot - 1])?;
        let fan = self.rotate_labels(shift).transform(&map)?;
        debug_assert!(fan.is_normalized());
        Ok(Normalized { fan, map, shift })
    }

    /// Normalizes with the input's own ray `n+1` as pivot.
    pub fn normalize_default(&self) -> Result<Normalized> {
        self.normalize(self.len() - 1)
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// Result of [`Fan::normalize`]: new ray `k` is `map` applied to old ray
/// `k + shift` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub fan: Fan,
    pub map: UnimodularMap,
    pub shift: usize,
}

/// Integer relation `c_prev·λ_{i-1} + c_mid·λ_i + c_next·λ_{i+1} = 0`, reduced
/// to coprime coefficients with `c_prev > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WallRelation {
    pub c_prev: BigInt,
    pub c_mid: BigInt,
    pub c_next: BigInt,
}

impl WallRelation {
    pub fn new(c_prev: impl Into<BigInt>, c_mid: impl Into<BigInt>, c_next: impl Into<BigInt>) -> Self {
        WallRelation { c_prev: c_prev.into(), c_mid: c_mid.into(), c_next: c_next.into() }
    }

    /// Multiplies every coefficient by `k`, without renormalizing.
    pub fn scaled(&self, k: &BigInt) -> WallRelation {
        WallRelation { c_prev: &self.c_prev * k, c_mid: &self.c_mid * k, c_next: &self.c_next * k }
    }

    /// True iff the relation holds for the three given rays.
    pub fn holds_for(&self, prev: &LatticeVector, mid: &LatticeVector, next: &LatticeVector) -> bool {
        let comb = |p: i64, m: i64, n: i64| {
            &self.c_prev * BigInt::from(p) + &self.c_mid * BigInt::from(m) + &self.c_next * BigInt::from(n)
        };
        comb(prev.a, mid.a, next.a).is_zero() && comb(prev.b, mid.b, next.b).is_zero()
    }

    /// Self-intersection `c / (c' · mult(σ'))` of the middle divisor, given
    /// the multiplicity of the cone spanned by the previous and middle rays.
    pub fn self_intersection_via_prev(&self, mult_prev: &BigInt) -> Rational {
        Rational::new(self.c_mid.clone(), &self.c_prev * mult_prev)
    }

    /// Self-intersection `c / (c'' · mult(σ''))`, using the cone spanned by the
    /// middle and next rays.
    pub fn self_intersection_via_next(&self, mult_next: &BigInt) -> Rational {
        Rational::new(self.c_mid.clone(), &self.c_next * mult_next)
    }
}

impl fmt::Display for WallRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c_prev, self.c_mid, self.c_next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;

    pub(crate) fn example_fan() -> Fan {
        Fan::new([(-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1)]).unwrap()
    }

    fn v(a: i64, b: i64) -> LatticeVector {
        LatticeVector::new(a, b)
    }

    #[test]
    fn validate_examples() {
        assert!(Fan::new([(-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1)]).is_ok());
        assert!(Fan::new([(1, 0), (0, 1), (-1, -1)]).is_ok());
        assert!(Fan::new([(0, 1), (-1, -1), (1, 0)]).is_ok());
        assert_eq!(Fan::new([(1, 0), (2, 0), (0, 1)]), Err(Error::NotPrimitive(2)));
    }

    #[test]
    fn validate_errors() {
        assert_eq!(Fan::new([(1, 0), (0, 1)]), Err(Error::TooFewRays(2)));
        assert_eq!(Fan::new([(0, 0), (0, 1), (-1, -1)]), Err(Error::NotPrimitive(1)));
        assert_eq!(Fan::new([(1, 0), (0, 1), (1, 0), (-1, -1)]), Err(Error::DuplicateRay(1, 3)));
        // clockwise P^2
        assert_eq!(Fan::new([(1, 0), (-1, -1), (0, 1)]), Err(Error::NotCounterclockwise(1, 2)));
        // opposite rays: det = 0
        assert_eq!(Fan::new([(1, 0), (-1, 0), (0, -1)]), Err(Error::NotCounterclockwise(1, 2)));
        // two full turns, every step counterclockwise
        let twice = [(1, 0), (0, 1), (-1, -1), (1, 0)];
        assert!(Fan::new(twice).is_err());
        let twice = [(1, 0), (-1, 1), (-1, -2), (2, 1), (-1, 2), (-1, -1)];
        assert_eq!(Fan::new(twice), Err(Error::NotComplete(2)));
    }

    #[test]
    fn multiplicity_examples() {
        let f = example_fan();
        assert_eq!(f.multiplicity(1).unwrap(), BigInt::from(4));
        assert_eq!(f.multiplicity(4).unwrap(), BigInt::from(1));
        assert_eq!(f.multiplicity(2).unwrap(), BigInt::from(5));
        let all: Vec<BigInt> = [4, 5, 2, 1, 2].into_iter().map(BigInt::from).collect();
        assert_eq!(f.multiplicities(), all);
        assert!(matches!(f.multiplicity(6), Err(Error::IndexOutOfRange { label: 6, len: 5 })));
        assert!(f.multiplicity(0).is_err());
    }

    #[test]
    fn wall_relation_examples() {
        let f = example_fan();
        assert_eq!(f.wall_relation(1).unwrap(), WallRelation::new(2, -1, 1));
        assert_eq!(f.wall_relation(2).unwrap(), WallRelation::new(5, -3, 4));
        assert_eq!(f.wall_relation(3).unwrap(), WallRelation::new(2, -1, 5));
        let p1p1 = Fan::new([(-1, 0), (0, -1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(p1p1.wall_relation(1).unwrap(), WallRelation::new(1, 0, 1));
        assert!(f.wall_relation(9).is_err());
    }

    #[test]
    fn wall_relation_scaling_leaves_self_intersection() {
        let f = example_fan();
        let w = f.wall_relation(2).unwrap();
        let m = f.multiplicity(1).unwrap();
        for k in [-7i64, -1, 2, 13] {
            let s = w.scaled(&BigInt::from(k));
            assert!(s.holds_for(&f.rays()[0], &f.rays()[1], &f.rays()[2]));
            assert_eq!(s.self_intersection_via_prev(&m), rat(-3, 20));
        }
    }

    #[test]
    fn normalize_examples() {
        let f = example_fan();
        let n = f.normalize(4).unwrap();
        assert_eq!((n.fan, n.map, n.shift), (f.clone(), UnimodularMap::IDENTITY, 0));

        let p2 = Fan::new([(0, -1), (1, 1), (-1, 0)]).unwrap();
        let n = p2.normalize(3).unwrap();
        assert_eq!(n.fan.rays(), &[v(-1, -1), v(1, 0), v(0, 1)]);
        assert_eq!(n.map.rows(), [[-1, 0], [0, -1]]);
        assert_eq!(n.shift, 1);

        let n = p2.normalize(1).unwrap();
        assert!(n.fan.is_normalized());
        assert_eq!(n.fan.ray(2).unwrap(), n.map.apply(&p2.rays()[0]).unwrap());
        assert!(p2.normalize(4).is_err());
    }

    #[test]
    fn smooth_vertex_examples() {
        assert!(example_fan().has_smooth_vertex());
        assert!(example_fan().is_smooth_cone(4).unwrap());
        assert!(!example_fan().is_smooth_cone(3).unwrap());
        let singular = Fan::new([(1, 2), (-1, 0), (1, -2)]).unwrap();
        let mults: Vec<BigInt> = [2, 2, 4].into_iter().map(BigInt::from).collect();
        assert_eq!(singular.multiplicities(), mults);
        assert!(!singular.has_smooth_vertex());
        assert!(Fan::new([(1, 0), (0, 1), (-1, -1)]).unwrap().has_smooth_vertex());
    }

    #[test]
    fn adjacency_is_cyclic() {
        let f = example_fan();
        assert!(f.adjacent(1, 2) && f.adjacent(5, 1) && f.adjacent(1, 5));
        assert!(!f.adjacent(1, 3) && !f.adjacent(2, 2));
    }
}
