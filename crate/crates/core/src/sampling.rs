use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Seeded sampling parameters. Coordinates are drawn uniformly from `[-half_width, half_width]`.
///
/// Draws land on the dyadic grid `2^-20 Z` (for boxes up to `2^32`), so sums and
/// low-degree products of sampled coordinates are exact in `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    pub half_width: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self { seed: 0, count: 1000, half_width: 3.0 }
    }
}

impl SampleConfig {
    pub fn new(seed: u64, count: usize, half_width: f64) -> Result<Self> {
        if count == 0 {
            return Err(Error::input("sample count must be at least 1"));
        }
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::input("sampling box must be finite and positive"));
        }
        Ok(Self { seed, count, half_width })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_count(mut self, count: usize) -> Self {
        self.count = count.max(1);
        self
    }

    pub fn sampler(&self) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(self.seed), half_width: self.half_width }
    }
}

const GRID: f64 = 1048576.0;
const GRID_LIMIT: f64 = 4294967296.0;

/// Deterministic stream of coordinates and elements.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    half_width: f64,
}

impl Sampler {
    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    fn grid_steps(&self) -> Option<i64> {
        (self.half_width <= GRID_LIMIT).then(|| (self.half_width * GRID).floor() as i64)
    }

    pub fn coord<S: Scalar>(&mut self) -> S {
        match self.grid_steps() {
            Some(n) if n > 0 => S::lit(self.rng.gen_range(-n..=n) as f64 / GRID),
            _ => S::lit(self.rng.gen_range(-self.half_width..=self.half_width)),
        }
    }

    /// Uniform draw from `(0, half_width]`.
    pub fn positive<S: Scalar>(&mut self) -> S {
        match self.grid_steps() {
            Some(n) if n > 0 => S::lit(self.rng.gen_range(1..=n) as f64 / GRID),
            _ => {
                let u: f64 = self.rng.gen_range(0.0..1.0);
                S::lit((1.0 - u) * self.half_width)
            }
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn element<S: Scalar>(&mut self, dim: usize) -> Element<S> {
        Element::from_iter((0..dim).map(|_| self.coord::<S>()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let cfg = SampleConfig::default().with_seed(42);
        let a: Vec<Element<f64>> = {
            let mut s = cfg.sampler();
            (0..10).map(|_| s.element(3)).collect()
        };
        let b: Vec<Element<f64>> = {
            let mut s = cfg.sampler();
            (0..10).map(|_| s.element(3)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().flat_map(|e| e.coords().iter()).all(|c| c.abs() <= 3.0));
    }

    #[test]
    fn positive_draws() {
        let mut s = SampleConfig::default().sampler();
        for _ in 0..1000 {
            let p: f64 = s.positive();
            assert!(p > 0.0 && p <= 3.0);
        }
    }

    #[test]
    fn draws_are_dyadic() {
        let mut s = SampleConfig::default().sampler();
        for _ in 0..100 {
            let c: f64 = s.coord();
            assert_eq!((c * GRID).fract(), 0.0);
        }
    }

    #[test]
    fn huge_box_is_continuous() {
        let mut s = SampleConfig::new(1, 1, 1e300).unwrap().sampler();
        let c: f64 = s.coord();
        assert!(c.abs() <= 1e300);
    }

    #[test]
    fn validates() {
        assert!(SampleConfig::new(0, 0, 3.0).is_err());
        assert!(SampleConfig::new(0, 5, f64::INFINITY).is_err());
    }
}
