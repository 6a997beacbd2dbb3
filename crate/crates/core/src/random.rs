//! Seeded generation of random complete fans.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fan::{validate_fan, Fan};
use crate::lattice::{det2, LatticeVector};

use num_traits::Signed;

/// Configurations tried before giving up.
pub const MAX_ATTEMPTS: usize = 10_000;

/// Largest accepted coordinate bound.
pub const MAX_COORD_BOUND: i64 = 1 << 40;

/// SplitMix64 finalizer. Used to derive independent per-trial seeds.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draws a normalized complete fan with `ray_count` rays.
///
/// Distinct primitive vectors with coordinates in `[-coord_bound, coord_bound]`
/// are sampled, sorted by angle, and rejected unless they leave no gap of
/// angle `π` or more. A uniformly chosen ray is then moved to label `n+1` and
/// mapped to `(1, 0)`, so coordinates of the result may exceed the bound.
pub fn random_complete_fan(ray_count: usize, coord_bound: i64, seed: u64) -> Result<Fan> {
    if ray_count < 3 {
        return Err(Error::InvalidParameter(format!("ray count {ray_count} is below 3")));
    }
    if !(1..=MAX_COORD_BOUND).contains(&coord_bound) {
        return Err(Error::InvalidParameter(format!("coordinate bound {coord_bound} outside 1..={MAX_COORD_BOUND}")));
    }
    if !enough_primitive_vectors(ray_count, coord_bound) {
        return Err(Error::GenerationFailed(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_draws = 100 * ray_count + 1_000;
    for _ in 0..MAX_ATTEMPTS {
        let Some(mut rays) = sample_rays(&mut rng, ray_count, coord_bound, max_draws) else {
            continue;
        };
        rays.sort_by(|u, w| u.angle_cmp(w));
        let complete = (0..ray_count).all(|i| det2(&rays[i], &rays[(i + 1) % ray_count]).is_positive());
        if !complete {
            continue;
        }
        let fan = validate_fan(rays)?;
        let pivot = rng.gen_range(1..=ray_count);
        return Ok(fan.normalize(pivot)?.fan);
    }
    Err(Error::GenerationFailed(MAX_ATTEMPTS))
}

/// The box `[-B, B]^2` holds at least `8B` primitive vectors (those with a
/// coordinate equal to ±1); below that the count is computed exactly.
fn enough_primitive_vectors(count: usize, bound: i64) -> bool {
    if count as u128 <= 8 * bound as u128 {
        return true;
    }
    let mut found = 0usize;
    for a in -bound..=bound {
        for b in -bound..=bound {
            if LatticeVector::new(a, b).is_primitive() {
                found += 1;
            }
        }
    }
    found >= count
}

fn sample_rays(rng: &mut ChaCha8Rng, count: usize, bound: i64, max_draws: usize) -> Option<Vec<LatticeVector>> {
    let mut rays: Vec<LatticeVector> = Vec::with_capacity(count);
    for _ in 0..max_draws {
        if rays.len() == count {
            break;
        }
        let v = LatticeVector::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if v.is_primitive() && !rays.contains(&v) {
            rays.push(v);
        }
    }
    // order of insertion should not bias which rays survive a retry
    rays.shuffle(rng);
    (rays.len() == count).then_some(rays)
}
