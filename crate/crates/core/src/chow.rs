//! Rational Chow ring of a toric surface.
//!
//! Every degree-2 class is a rational multiple of the common class `[V]` of
//! the torus-fixed points, and all values below are those multiples.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::matrix::{int, Rational, RationalMatrix};

/// `[D(ρ_i)]·[D(ρ_j)]` as a multiple of `[V]`. Labels are 1-based.
pub fn intersection_number(fan: &Fan, i: usize, j: usize) -> Result<Rational> {
    fan.check_label(i)?;
    fan.check_label(j)?;
    let len = fan.len();
    if j == i % len + 1 {
        Ok(Rational::new(BigInt::from(1), fan.cone_mult(i as isize)))
    } else if i == j % len + 1 {
        Ok(Rational::new(BigInt::from(1), fan.cone_mult(j as isize)))
    } else if i == j {
        let wall = fan.wall_relation(i)?;
        Ok(wall.self_intersection_via_prev(&fan.cone_mult(i as isize - 1)))
    } else {
        Ok(Rational::zero())
    }
}

/// The `n x n` intersection product matrix over the divisors of rays `1..=n`.
pub fn intersection_matrix(fan: &Fan) -> Result<RationalMatrix> {
    Ok(intersection_table(fan)?.basis_matrix)
}

/// Intersection numbers of all `n+2` divisors, together with the basis block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTable {
    pub full: RationalMatrix,
    pub basis_matrix: RationalMatrix,
}

pub fn intersection_table(fan: &Fan) -> Result<IntersectionTable> {
    let len = fan.len();
    let mut full = RationalMatrix::zeros(len, len);
    for i in 0..len {
        for j in i..len {
            let m = intersection_number(fan, i + 1, j + 1)?;
            full[(j, i)] = m.clone();
            full[(i, j)] = m;
        }
    }
    let n = fan.basis_len();
    let basis_matrix = full.block(n, n)?;
    Ok(IntersectionTable { full, basis_matrix })
}

/// Quotient-ring presentation `Q[x_1..x_{n+2}] / (linear forms + monomials)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChowPresentation {
    /// Coefficients of `Σ a_i x_i` and `Σ b_i x_i`.
    pub linear_forms: [Vec<i64>; 2],
    /// Pairs `(i, j)`, `i < j`, of non-neighbouring rays; `x_i x_j = 0`.
    pub nonadjacent_pairs: Vec<(usize, usize)>,
}

pub fn presentation(fan: &Fan) -> ChowPresentation {
    let a = fan.rays().iter().map(|r| r.a).collect();
    let b = fan.rays().iter().map(|r| r.b).collect();
    let len = fan.len();
    let nonadjacent_pairs =
        (1..=len).flat_map(|i| (i + 1..=len).map(move |j| (i, j))).filter(|&(i, j)| !fan.adjacent(i, j)).collect();
    ChowPresentation { linear_forms: [a, b], nonadjacent_pairs }
}

/// A degree-1 class `Σ q_i x_i`, coefficients indexed by ray label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        LinearForm { coefficients }
    }

    pub fn zero(len: usize) -> Self {
        LinearForm { coefficients: vec![Rational::zero(); len] }
    }

    /// Unit vector `x_label`.
    pub fn unit(len: usize, label: usize) -> Self {
        let mut f = Self::zero(len);
        f.coefficients[label - 1] = int(1);
        f
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        LinearForm { coefficients: coefficients.iter().map(|&c| int(c)).collect() }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `x_label` (1-based).
    pub fn coefficient(&self, label: usize) -> &Rational {
        &self.coefficients[label - 1]
    }

    /// Degree-2 class of `self · other` as a multiple of `[V]`.
    pub fn pair(&self, other: &LinearForm, fan: &Fan) -> Result<Rational> {
        reduce_quadratic(fan, &outer(self, other))
    }
}

/// Coefficient array of the product of two linear forms.
fn outer(f: &LinearForm, g: &LinearForm) -> RationalMatrix {
    RationalMatrix::from_fn(f.len(), g.len(), |i, j| &f.coefficients[i] * &g.coefficients[j])
}

/// Writes `x_{n+1}` and `x_{n+2}` in terms of `x_1..x_n` using the two linear
/// relations. Both returned forms vanish on labels `n+1` and `n+2`.
pub fn express_dropped_divisors(fan: &Fan) -> Result<(LinearForm, LinearForm)> {
    fan.require_normalized()?;
    let n = fan.basis_len();
    let last = fan.last_ray();
    // With λ_{n+1} = (1, 0) the relations read
    //   x_{n+1} + a x_{n+2} + Σ a_k x_k = 0,   b x_{n+2} + Σ b_k x_k = 0.
    let (a, b) = (BigInt::from(last.a), BigInt::from(last.b));
    let mut first = LinearForm::zero(n + 2);
    let mut second = LinearForm::zero(n + 2);
    for (k, ray) in fan.rays()[..n].iter().enumerate() {
        let x_last = Rational::new(-BigInt::from(ray.b), b.clone());
        first.coefficients[k] = int(-ray.a) - &x_last * &a;
        second.coefficients[k] = x_last;
    }
    Ok((first, second))
}

/// Value of the class `Σ_{i,j} q_ij x_i x_j` as a multiple of `[V]`.
/// `q` is indexed by `(label - 1, label - 1)` and need not be symmetric.
pub fn reduce_quadratic(fan: &Fan, q: &RationalMatrix) -> Result<Rational> {
    let len = fan.len();
    if q.rows() != len || q.cols() != len {
        return Err(Error::Shape(format!("quadratic form is {}x{}, fan has {len} rays", q.rows(), q.cols())));
    }
    let table = intersection_table(fan)?.full;
    let mut total = Rational::zero();
    for i in 0..len {
        for j in 0..len {
            if !q[(i, j)].is_zero() && !table[(i, j)].is_zero() {
                total += &q[(i, j)] * &table[(i, j)];
            }
        }
    }
    Ok(total)
}
