#![allow(dead_code)]

use toric_cohomology::duality::trial_fan;
use toric_cohomology::{kappa_fan, normal_fan, Fan, Polygon};

pub const EXAMPLE_RAYS: [(i64, i64); 5] = [(-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1)];

/// Hand-picked complete fans, not necessarily normalized.
pub fn base_fans() -> Vec<Fan> {
    let mut fans: Vec<Fan> = [
        &EXAMPLE_RAYS[..],
        &[(-1, -1), (1, 0), (0, 1)],
        &[(-1, 0), (0, -1), (1, 0), (0, 1)],
        &[(-1, -2), (1, 0), (0, 1)],
        &[(-1, 0), (0, -1), (1, 0), (1, 2)],
        &[(-1, 1), (-1, -1), (1, -1), (1, 0), (2, 3)],
        &[(-1, 0), (-1, -1), (2, -3), (1, 0), (2, 3)],
        &[(0, -1), (1, 0), (-1, 2)],
        &[(1, 0), (0, 1), (-1, -1)],
        &[(3, 1), (-1, 4), (-5, -2), (2, -7)],
        &[(1, 1), (-1, 1), (-1, -1), (1, -1)],
        &[(1, 0), (2, 1), (1, 1), (1, 2), (0, 1), (-1, 3), (-1, 0), (-3, -1), (0, -1), (5, -4)],
    ]
    .iter()
    .map(|rays| Fan::new(rays.iter().copied()).unwrap())
    .collect();
    for a in [-3, 0, 1, 2, 5] {
        fans.push(Fan::new([(-1, a), (0, -1), (1, 0), (0, 1)]).unwrap());
    }
    let polygons: [&[(i64, i64)]; 4] = [
        &[(0, 0), (1, 0), (1, 1), (0, 1)],
        &[(0, 0), (2, 0), (0, 1)],
        &[(1, 0), (2, 1), (1, 2), (-1, 2), (-2, 0), (-1, -1)],
        &[(0, 0), (4, 1), (3, 3), (-1, 2)],
    ];
    for v in polygons {
        fans.push(normal_fan(&Polygon::new(v.iter().copied()).unwrap()).unwrap());
    }
    fans
}

/// Every base fan normalized at every pivot, the κ-images of those that
/// admit one, and a fixed batch of random normalized fans.
pub fn suite_fans() -> Vec<Fan> {
    let mut suite = Vec::new();
    for fan in base_fans() {
        for pivot in 1..=fan.len() {
            let normalized = fan.normalize(pivot).unwrap().fan;
            if let Ok(image) = kappa_fan(&normalized) {
                suite.push(image);
            }
            suite.push(normalized);
        }
    }
    for index in 0..150 {
        let (_, fan) = trial_fan(2024, index, (3, 14), 30).unwrap();
        if let Ok(image) = kappa_fan(&fan) {
            suite.push(image);
        }
        suite.push(fan);
    }
    suite
}
