//! Lattice polygons and their normal fans.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{validate_fan, Fan};
use crate::lattice::{det2, primitivize, LatticeVector};

use num_traits::Signed;

/// A convex lattice polygon with vertices listed counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Polygon {
    vertices: Vec<LatticeVector>,
}

impl Polygon {
    pub fn new(vertices: impl IntoIterator<Item = impl Into<LatticeVector>>) -> Result<Self> {
        let vertices: Vec<LatticeVector> = vertices.into_iter().map(Into::into).collect();
        let len = vertices.len();
        if len < 3 {
            return Err(Error::TooFewVertices(len));
        }
        for i in 0..len {
            for j in i + 1..len {
                if vertices[i] == vertices[j] {
                    return Err(Error::RepeatedVertex(i + 1, j + 1));
                }
            }
        }
        let polygon = Polygon { vertices };
        let edges = polygon.edges()?;
        for i in 0..len {
            // turn at vertex i+1, between edge i and edge i+1
            let turn = det2(&edges[i], &edges[(i + 1) % len]);
            let vertex = (i + 1) % len + 1;
            if turn.sign() == num_bigint::Sign::NoSign {
                return Err(Error::DegeneratePolygon(vertex));
            }
            if turn.is_negative() {
                return Err(Error::NotConvex(vertex));
            }
        }
        Ok(polygon)
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    /// Edge vectors `v_{i+1} - v_i`, cyclically.
    fn edges(&self) -> Result<Vec<LatticeVector>> {
        let len = self.vertices.len();
        (0..len)
            .map(|i| {
                let (p, q) = (self.vertices[i], self.vertices[(i + 1) % len]);
                let da = q.a.checked_sub(p.a).ok_or(Error::Overflow)?;
                let db = q.b.checked_sub(p.b).ok_or(Error::Overflow)?;
                Ok(LatticeVector::new(da, db))
            })
            .collect()
    }

    /// Translates every vertex by `offset`.
    pub fn translated(&self, offset: LatticeVector) -> Result<Polygon> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                Ok(LatticeVector::new(
                    v.a.checked_add(offset.a).ok_or(Error::Overflow)?,
                    v.b.checked_add(offset.b).ok_or(Error::Overflow)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polygon { vertices })
    }
}

/// Primitive outward normals of the edges, in edge order. Edge `i` runs from
/// vertex `i` to vertex `i+1`, and its normal becomes ray `i`.
pub fn normal_fan(polygon: &Polygon) -> Result<Fan> {
    let rays = polygon
        .edges()?
        .into_iter()
        .map(|d| {
            let outward = LatticeVector::new(d.b, d.a.checked_neg().ok_or(Error::Overflow)?);
            Ok(primitivize(outward)?.0)
        })
        .collect::<Result<Vec<_>>>()?;
    // A star-shaped (self-overlapping) vertex list turns counterclockwise at
    // every vertex but winds more than once; validation rejects it here.
    validate_fan(rays)
}
