use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Mixed absolute/relative comparison policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<S> {
    pub abs_tol: S,
    pub rel_tol: S,
}

impl<S: Scalar> Default for Tolerance<S> {
    fn default() -> Self {
        Self { abs_tol: S::lit(1e-9), rel_tol: S::lit(1e-9) }
    }
}

impl<S: Scalar> Tolerance<S> {
    pub fn new(abs_tol: S, rel_tol: S) -> Result<Self> {
        if !(abs_tol > S::zero() && rel_tol > S::zero()) || !abs_tol.is_finite() || !rel_tol.is_finite() {
            return Err(Error::input("tolerances must be finite and strictly positive"));
        }
        Ok(Self { abs_tol, rel_tol })
    }

    /// Allowed deviation between `u` and `v`.
    pub fn bound(&self, u: S, v: S) -> S {
        self.abs_tol + self.rel_tol * u.abs().max(v.abs())
    }

    pub fn close(&self, u: S, v: S) -> bool {
        (u - v).abs() <= self.bound(u, v)
    }

    /// `|u - v|` divided by the allowed deviation; at most 1 when the pair passes.
    pub fn ratio(&self, u: S, v: S) -> S {
        (u - v).abs() / self.bound(u, v)
    }

    pub fn close_slices(&self, a: &[S], b: &[S]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(&u, &v)| self.close(u, v))
    }

    /// Worst coordinate ratio between two vectors of equal length.
    pub fn worst_ratio(&self, a: &[S], b: &[S]) -> S {
        a.iter().zip(b).fold(S::zero(), |m, (&u, &v)| m.max(self.ratio(u, v)))
    }

    pub fn is_zero(&self, u: S) -> bool {
        u.abs() <= self.abs_tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_bound() {
        let t = Tolerance::<f64>::default();
        assert!(t.close(1e9, 1e9 + 0.5));
        assert!(!t.close(1.0, 1.0 + 1e-8));
        assert!(t.close(0.0, 5e-10));
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(Tolerance::new(0.0, 1e-9).is_err());
        assert!(Tolerance::new(1e-9, -1.0).is_err());
        assert!(Tolerance::new(1e-9, f64::NAN).is_err());
    }
}
