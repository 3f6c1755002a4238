use std::ops::Index;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub(crate) type Coords<S> = SmallVec<[S; 3]>;

/// A point in a group chart, one coordinate per chart axis.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Element<S: Scalar> {
    coords: Coords<S>,
}

impl<S: Scalar> Element<S> {
    pub fn new(coords: impl IntoIterator<Item = S>) -> Self {
        Self { coords: coords.into_iter().collect() }
    }

    pub fn from_slice(coords: &[S]) -> Self {
        Self { coords: SmallVec::from_slice(coords) }
    }

    /// Builds from `f64` literals.
    pub fn from_f64(coords: &[f64]) -> Self {
        Self::new(coords.iter().map(|&c| S::lit(c)))
    }

    pub fn zeros(dim: usize) -> Self {
        Self { coords: SmallVec::from_elem(S::zero(), dim) }
    }

    /// Unit-free basis vector `value * e_index`.
    pub fn axis(dim: usize, index: usize, value: S) -> Self {
        let mut e = Self::zeros(dim);
        e.coords[index] = value;
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn coords_mut(&mut self) -> &mut [S] {
        &mut self.coords
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coords.iter().map(|c| c.to_f64_lossy()).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    /// Checks the dimension and that every coordinate is finite.
    pub fn validate(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.dim() });
        }
        match self.coords.iter().position(|c| !c.is_finite()) {
            Some(index) => Err(Error::NonFinite { index }),
            None => Ok(()),
        }
    }

    /// Sup-norm distance.
    pub fn max_abs_diff(&self, other: &Self) -> S {
        self.coords.iter().zip(&other.coords).fold(S::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }

    pub fn max_abs(&self) -> S {
        self.coords.iter().fold(S::zero(), |m, &a| m.max(a.abs()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &S> {
        self.coords.iter()
    }

    /// Gathers the coordinates at `indices`.
    pub fn select(&self, indices: &[usize]) -> Self {
        Self::new(indices.iter().map(|&i| self.coords[i]))
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().chain(other.coords.iter()).copied())
    }
}

impl<S: Scalar> FromIterator<S> for Element<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl<S: Scalar> Index<usize> for Element<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.coords[i]
    }
}

impl<S: Scalar> From<Vec<S>> for Element<S> {
    fn from(v: Vec<S>) -> Self {
        Self::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let e = Element::<f64>::from_f64(&[1.0, 2.0]);
        assert!(e.validate(2).is_ok());
        assert_eq!(e.validate(3), Err(Error::DimensionMismatch { expected: 3, found: 2 }));
        let bad = Element::<f64>::from_f64(&[1.0, f64::NAN]);
        assert_eq!(bad.validate(2), Err(Error::NonFinite { index: 1 }));
    }

    #[test]
    fn distances() {
        let a = Element::<f64>::from_f64(&[1.0, -2.0, 3.0]);
        let b = Element::<f64>::from_f64(&[1.5, -2.0, 0.0]);
        assert_eq!(a.max_abs_diff(&b), 3.0);
        assert_eq!(a.max_abs(), 3.0);
        assert_eq!(a.select(&[2, 0]).coords(), &[3.0, 1.0]);
    }
}
