//! Cellular cup products of a toric surface and their relation to divisor
//! classes.
//!
//! All functions here expect a normalized fan (ray `n+1` equal to `(1, 0)`),
//! so ray `n+2 = (a, b)` has `b > 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::chow::LinearForm;
use crate::error::{Error, Result};
use crate::fan::{validate_fan, Fan};
use crate::lattice::{primitivize_wide, LatticeVector};
use crate::matrix::{int, mat_inverse, mat_mul, Rational, RationalMatrix};

/// Symmetric `n x n` matrix of cup products `u_i ∪ u_j = c_ij v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupMatrix {
    pub matrix: RationalMatrix,
}

impl CupMatrix {
    pub fn into_inner(self) -> RationalMatrix {
        self.matrix
    }
}

impl From<CupMatrix> for RationalMatrix {
    fn from(c: CupMatrix) -> Self {
        c.matrix
    }
}

/// `c_ij = b_j (a_i b_{n+2} - a_{n+2} b_i) / b_{n+2}` for `i <= j`, symmetric.
pub fn cup_matrix(fan: &Fan) -> Result<CupMatrix> {
    fan.require_normalized()?;
    let n = fan.basis_len();
    let last = fan.last_ray();
    let (a_last, b_last) = (BigInt::from(last.a), BigInt::from(last.b));
    let rays = fan.rays();
    let entry = |i: usize, j: usize| -> Rational {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let (ri, rj) = (rays[lo], rays[hi]);
        let twist = BigInt::from(ri.a) * &b_last - &a_last * BigInt::from(ri.b);
        Rational::new(BigInt::from(rj.b) * twist, b_last.clone())
    };
    Ok(CupMatrix { matrix: RationalMatrix::from_fn(n, n, entry) })
}

/// `c_ij = a_i b_j` for `i <= j`; valid when rays `n+1, n+2` are `(1,0), (0,1)`.
pub fn cup_matrix_smooth(fan: &Fan) -> Result<CupMatrix> {
    fan.require_normalized()?;
    if fan.last_ray() != LatticeVector::E2 {
        return Err(Error::SmoothVertexRequired);
    }
    let rays = fan.rays();
    let entry = |i: usize, j: usize| {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        int(rays[lo].a as i128 * rays[hi].b as i128)
    };
    let n = fan.basis_len();
    Ok(CupMatrix { matrix: RationalMatrix::from_fn(n, n, entry) })
}

/// `g_i = gcd(|a_i b_{n+2}|, |a_{n+2} b_i|)` for a basis ray `i`.
pub fn g_factor(fan: &Fan, label: usize) -> Result<BigInt> {
    fan.require_normalized()?;
    if label == 0 || label > fan.basis_len() {
        return Err(Error::IndexOutOfRange { label, len: fan.basis_len() });
    }
    let ray = fan.rays()[label - 1];
    let last = fan.last_ray();
    let x = BigInt::from(ray.a as i128 * last.b as i128);
    let y = BigInt::from(last.a as i128 * ray.b as i128);
    Ok(x.gcd(&y))
}

/// The rescaling `κ(x, y) = (b x - a y, a y)` with `(a, b)` ray `n+2`.
fn kappa(last: LatticeVector, v: LatticeVector) -> (i128, i128) {
    let (a, b) = (last.a as i128, last.b as i128);
    (b * v.a as i128 - a * v.b as i128, a * v.b as i128)
}

/// Fan spanned by the primitivized images `κ(λ_i)`. Its last two rays are
/// `(1, 0)` and `(0, 1)`.
///
/// When ray `n+2` is already `(0, 1)` the input is returned unchanged. A
/// negative first coordinate on ray `n+2` makes `κ` orientation-reversing and
/// is rejected.
pub fn kappa_fan(fan: &Fan) -> Result<Fan> {
    fan.require_normalized()?;
    let last = fan.last_ray();
    if last.a == 0 {
        return Ok(fan.clone());
    }
    if last.a < 0 {
        return Err(Error::UnsupportedOrientation(last.a));
    }
    let rays = fan
        .rays()
        .iter()
        .map(|&r| {
            let (x, y) = kappa(last, r);
            Ok(primitivize_wide(x, y)?.0)
        })
        .collect::<Result<Vec<_>>>()?;
    validate_fan(rays)
}

/// Cup matrix assembled through the κ-rescaled fan:
/// `c_ij = g_i g_j a'_i b'_j / (a_{n+2} b_{n+2})` for `i <= j`.
pub fn cup_matrix_via_kappa(fan: &Fan) -> Result<CupMatrix> {
    let image = kappa_fan(fan)?;
    let last = fan.last_ray();
    if last.a == 0 {
        return cup_matrix_smooth(&image);
    }
    let n = fan.basis_len();
    let g = (1..=n).map(|i| g_factor(fan, i)).collect::<Result<Vec<_>>>()?;
    let scale = BigInt::from(last.a as i128 * last.b as i128);
    let rays = image.rays();
    let entry = |i: usize, j: usize| {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let numer = &g[lo] * &g[hi] * BigInt::from(rays[lo].a) * BigInt::from(rays[hi].b);
        Rational::new(numer, scale.clone())
    };
    Ok(CupMatrix { matrix: RationalMatrix::from_fn(n, n, entry) })
}

/// The image of the cellular class `u_i` in the quotient ring: row `i` of the
/// cup matrix, padded with zeros on labels `n+1` and `n+2`.
pub fn phi_u(fan: &Fan, label: usize) -> Result<LinearForm> {
    let n = fan.basis_len();
    if label == 0 || label > n {
        return Err(Error::IndexOutOfRange { label, len: n });
    }
    let cup = cup_matrix(fan)?.matrix;
    let mut coefficients = cup.row(label - 1).to_vec();
    coefficients.extend([Rational::zero(), Rational::zero()]);
    Ok(LinearForm::new(coefficients))
}

/// Change of basis between the cellular basis `u_i` and the Poincaré dual
/// basis of the divisors `D(ρ_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    /// Row `i` expresses `u_i` over the Poincaré duals of `D(ρ_1..ρ_n)`.
    pub cellular_in_pd: RationalMatrix,
    /// Row `i` expresses the Poincaré dual of `D(ρ_i)` over `u_1..u_n`.
    pub pd_in_cellular: RationalMatrix,
}

pub fn basis_change(fan: &Fan) -> Result<BasisChange> {
    let cellular_in_pd = cup_matrix(fan)?.matrix;
    let pd_in_cellular = mat_inverse(&cellular_in_pd)?;
    debug_assert!(mat_mul(&cellular_in_pd, &pd_in_cellular)?.is_identity());
    Ok(BasisChange { cellular_in_pd, pd_in_cellular })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::intersection_matrix;
    use crate::matrix::rat;

    fn example_fan() -> Fan {
        Fan::new([(-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1)]).unwrap()
    }

    fn skew() -> Fan {
        Fan::new([(-1, 0), (0, -1), (1, 0), (1, 2)]).unwrap()
    }

    fn p1p1() -> Fan {
        Fan::new([(-1, 0), (0, -1), (1, 0), (0, 1)]).unwrap()
    }

    fn p2() -> Fan {
        Fan::new([(-1, -1), (1, 0), (0, 1)]).unwrap()
    }

    fn example_cup() -> RationalMatrix {
        RationalMatrix::from_integers(&[&[-2, 2, 4], &[2, 2, 4], &[4, 4, -2]]).unwrap()
    }

    #[test]
    fn cup_matrix_examples() {
        assert_eq!(cup_matrix(&example_fan()).unwrap().matrix, example_cup());
        let expected = RationalMatrix::from_ratios(&[&[(0, 1), (1, 1)], &[(1, 1), (-1, 2)]]).unwrap();
        assert_eq!(cup_matrix(&skew()).unwrap().matrix, expected);
        let p112 = Fan::new([(-1, -2), (1, 0), (0, 1)]).unwrap();
        assert_eq!(cup_matrix(&p112).unwrap().matrix, RationalMatrix::from_integers(&[&[2]]).unwrap());
        let unnormalized = Fan::new([(1, 0), (0, 1), (-1, -1)]).unwrap();
        assert_eq!(cup_matrix(&unnormalized), Err(Error::NotNormalized));
    }

    #[test]
    fn smooth_cup_matrix_examples() {
        assert_eq!(cup_matrix_smooth(&example_fan()).unwrap().matrix, example_cup());
        assert_eq!(cup_matrix_smooth(&p2()).unwrap().matrix, RationalMatrix::from_integers(&[&[1]]).unwrap());
        let swap = RationalMatrix::from_integers(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(cup_matrix_smooth(&p1p1()).unwrap().matrix, swap);
        assert_eq!(cup_matrix_smooth(&skew()), Err(Error::SmoothVertexRequired));
    }

    #[test]
    fn g_factor_examples() {
        assert_eq!(g_factor(&example_fan(), 1).unwrap(), BigInt::from(2));
        assert_eq!(g_factor(&skew(), 2).unwrap(), BigInt::from(1));
        // ray (1, 1) against last ray (2, 3): gcd(|1*3|, |2*1|) = 1
        let f = Fan::new([(-1, 1), (-1, -1), (1, -1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g_factor(&f, 1).unwrap(), BigInt::from(1));
        // equal products: ray (2, 3) against last ray (2, 3)
        let f = Fan::new([(-1, 0), (-1, -1), (2, -3), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g_factor(&f, 3).unwrap(), BigInt::from(6));
        assert!(g_factor(&f, 4).is_err());
    }

    #[test]
    fn kappa_fan_examples() {
        let image = kappa_fan(&skew()).unwrap();
        let expected = Fan::new([(-1, 0), (1, -1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(image, expected);
        assert_eq!(kappa_fan(&example_fan()).unwrap(), example_fan());
        let flipped = Fan::new([(0, -1), (1, 0), (-1, 2)]).unwrap();
        assert_eq!(kappa_fan(&flipped), Err(Error::UnsupportedOrientation(-1)));
    }

    #[test]
    fn kappa_route_matches_closed_form() {
        let f = Fan::new([(-1, 1), (-1, -1), (1, -1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(cup_matrix_via_kappa(&f).unwrap(), cup_matrix(&f).unwrap());
        assert_eq!(cup_matrix_via_kappa(&skew()).unwrap(), cup_matrix(&skew()).unwrap());
        assert_eq!(cup_matrix_via_kappa(&example_fan()).unwrap(), cup_matrix(&example_fan()).unwrap());
    }

    #[test]
    fn phi_u_examples() {
        let row = phi_u(&example_fan(), 1).unwrap();
        assert_eq!(row, LinearForm::from_integers(&[-2, 2, 4, 0, 0]));
        assert_eq!(phi_u(&p1p1(), 1).unwrap(), LinearForm::from_integers(&[0, 1, 0, 0]));
        assert!(phi_u(&example_fan(), 4).is_err());
        assert!(phi_u(&example_fan(), 0).is_err());
    }

    #[test]
    fn basis_change_examples() {
        let bc = basis_change(&example_fan()).unwrap();
        assert_eq!(bc.cellular_in_pd, example_cup());
        assert_eq!(bc.pd_in_cellular, intersection_matrix(&example_fan()).unwrap());
        let bc = basis_change(&p2()).unwrap();
        assert_eq!(bc.cellular_in_pd, RationalMatrix::from_integers(&[&[1]]).unwrap());
        assert_eq!(bc.pd_in_cellular, RationalMatrix::from_integers(&[&[1]]).unwrap());
        let bc = basis_change(&p1p1()).unwrap();
        let swap = RationalMatrix::from_integers(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!((bc.cellular_in_pd, bc.pd_in_cellular), (swap.clone(), swap));
    }

    #[test]
    fn phi_u_pairs_like_the_cup_product() {
        // Φ(u_i)·Φ(u_j) reduces to c_ij [V].
        let f = example_fan();
        let cup = cup_matrix(&f).unwrap().matrix;
        for i in 1..=3 {
            for j in 1..=3 {
                let value = phi_u(&f, i).unwrap().pair(&phi_u(&f, j).unwrap(), &f).unwrap();
                assert_eq!(value, cup[(i - 1, j - 1)]);
            }
        }
        assert_eq!(cup_matrix(&skew()).unwrap().matrix[(1, 1)], rat(-1, 2));
    }
}
