//! Deterministic random field configurations for the oracle sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::units::{ScaledParameters, Scaling};

/// Sampling box in laboratory units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleBox {
    pub e_max_vcm: f64,
    pub b_max_tesla: f64,
    pub theta_min: f64,
    pub theta_max: f64,
}

impl Default for SampleBox {
    fn default() -> Self {
        Self {
            e_max_vcm: 5000.0,
            b_max_tesla: 0.3,
            theta_min: 0.0,
            theta_max: std::f64::consts::PI,
        }
    }
}

/// `n` configurations drawn uniformly from `bx`, reproducible from `seed`.
pub fn random_configs(scaling: &Scaling, bx: &SampleBox, n: usize, seed: u64) -> Vec<ScaledParameters> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let e = rng.gen_range(0.0..=bx.e_max_vcm);
            let b = rng.gen_range(0.0..=bx.b_max_tesla);
            let t = rng.gen_range(bx.theta_min..=bx.theta_max);
            scaling.scaled(e, b, t)
        })
        .collect()
}
