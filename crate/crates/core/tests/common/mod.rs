#![allow(dead_code)]

use bjsym::sampling::SampleConfig;
use bjsym::spaces::catalog::catalog;
use bjsym::{AnySpace, NormedSpace, Rational, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn qv(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(n, d)| q(n, d)).collect()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&n| q(n, 1)).collect()
}

/// Random nonzero rational vector with small numerators and denominators.
pub fn rational_vec(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..dim)
            .map(|_| q(rng.gen_range(-12..=12), rng.gen_range(1..=6)))
            .collect();
        if v.iter().any(|x| *x != q(0, 1)) {
            return v;
        }
    }
}

pub fn float_vec(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if v.iter().map(|x| x * x).sum::<f64>() > 1e-4 {
            return v;
        }
    }
}

pub fn unit_rational<N: NormedSpace<Rational> + ?Sized>(space: &N, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let v = rational_vec(rng, space.dim());
    let n = space.norm(&v);
    v.iter().map(|x| x / &n).collect()
}

pub fn unit_float(space: &dyn NormedSpace<f64>, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let v = float_vec(rng, space.dim());
    let n = space.norm_f64(&v);
    v.iter().map(|x| x / n).collect()
}

pub const EXACT_SPACES: [&str; 5] = ["linf2", "linf3", "l1-2", "decagon", "fig9-hexagon"];
pub const POLYGONS: [&str; 7] = [
    "regular-polygon-4",
    "regular-polygon-6",
    "regular-polygon-8",
    "regular-polygon-10",
    "regular-polygon-12",
    "regular-polygon-14",
    "regular-polygon-16",
];

pub fn space(name: &str) -> AnySpace {
    catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn exact(name: &str) -> std::sync::Arc<bjsym::ExactPolytope> {
    match space(name) {
        AnySpace::Exact(p) => p,
        AnySpace::Float(_) => panic!("{name} is not exact"),
    }
}

pub fn float(name: &str) -> std::sync::Arc<dyn NormedSpace<f64>> {
    match space(name) {
        AnySpace::Float(s) => s,
        AnySpace::Exact(_) => panic!("{name} is exact"),
    }
}

pub fn fast() -> SampleConfig {
    SampleConfig {
        samples: 512,
        refine: 2,
        ..SampleConfig::default()
    }
}
