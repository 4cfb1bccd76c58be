//! Seeded random rational polytopes.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::{Point, Rational, VPolytope};

pub const SEED_VAR: &str = "EHRHART_SEED";
const DEFAULT_SEED: u64 = 0x5eed;
const MAX_DENOMINATOR: i64 = 64;

/// The seed in `EHRHART_SEED`, or a fixed default when unset or unparsable.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn random_coordinate(rng: &mut impl Rng, radius: &Rational) -> Rational {
    let q = rng.gen_range(1..=MAX_DENOMINATOR);
    let limit = (radius * Rational::from_integer(BigInt::from(q)))
        .floor()
        .to_integer();
    let limit: i64 = limit.try_into().expect("radius fits in i64");
    Rational::new(BigInt::from(rng.gen_range(-limit..=limit)), BigInt::from(q))
}

/// Hull of `points` random points in `[-radius, radius]^dim` with
/// denominators at most 64; degenerate draws are redrawn.
pub fn random_polytope(
    rng: &mut impl Rng,
    dim: usize,
    points: usize,
    radius: &Rational,
) -> VPolytope {
    loop {
        let pts = (0..points)
            .map(|_| Point::new((0..dim).map(|_| random_coordinate(rng, radius)).collect()))
            .collect();
        if let Ok(p) = VPolytope::from_points(pts) {
            return p;
        }
    }
}

/// Endless stream of random polytopes whose dimension and point count are
/// drawn from the given ranges.
pub struct RandomPolytopes {
    rng: ChaCha8Rng,
    dims: (usize, usize),
    extra_points: usize,
    radius: Rational,
}

impl RandomPolytopes {
    /// Dimensions in `dims.0..=dims.1`; between `dim + 1` and
    /// `dim + 1 + extra_points` points each.
    pub fn new(seed: u64, dims: (usize, usize), extra_points: usize, radius: Rational) -> Self {
        RandomPolytopes {
            rng: ChaCha8Rng::seed_from_u64(seed),
            dims,
            extra_points,
            radius,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

impl Iterator for RandomPolytopes {
    type Item = VPolytope;

    fn next(&mut self) -> Option<VPolytope> {
        let dim = self.rng.gen_range(self.dims.0..=self.dims.1);
        let points = dim + 1 + self.rng.gen_range(0..=self.extra_points);
        Some(random_polytope(&mut self.rng, dim, points, &self.radius))
    }
}
