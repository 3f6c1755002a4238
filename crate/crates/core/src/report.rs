use serde::Serialize;

use crate::element::Element;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// Running maximum of a residual over samples.
///
/// `worst_ratio` is the residual divided by the tolerance bound, so a check
/// passes exactly when it stays at or below 1. `worst_at` holds the sample
/// inputs that produced the worst ratio.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct Residual {
    pub max_abs: f64,
    pub worst_ratio: f64,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_at: Option<Vec<Vec<f64>>>,
}

impl Residual {
    /// Records a vector comparison under the mixed tolerance policy.
    pub fn record<S: Scalar>(&mut self, lhs: &[S], rhs: &[S], tol: &Tolerance<S>, at: &[&Element<S>]) -> bool {
        let mut abs = S::zero();
        let mut ratio = S::zero();
        for (&u, &v) in lhs.iter().zip(rhs) {
            abs = abs.max((u - v).abs());
            ratio = ratio.max(tol.ratio(u, v));
        }
        if lhs.len() != rhs.len() {
            ratio = S::infinity();
            abs = S::infinity();
        }
        self.push(abs.to_f64_lossy(), ratio.to_f64_lossy(), at)
    }

    /// Records a quantity that should vanish; only the absolute tolerance applies.
    pub fn record_zero<S: Scalar>(&mut self, value: &[S], tol: &Tolerance<S>, at: &[&Element<S>]) -> bool {
        let abs = value.iter().fold(S::zero(), |m, v| m.max(v.abs()));
        self.push(abs.to_f64_lossy(), (abs / tol.abs_tol).to_f64_lossy(), at)
    }

    fn push<S: Scalar>(&mut self, abs: f64, ratio: f64, at: &[&Element<S>]) -> bool {
        self.count += 1;
        self.max_abs = self.max_abs.max(abs);
        let ratio = if ratio.is_nan() { f64::INFINITY } else { ratio };
        if ratio > self.worst_ratio {
            self.worst_ratio = ratio;
            if ratio > 1.0 {
                self.worst_at = Some(at.iter().map(|e| e.to_f64_vec()).collect());
            }
        }
        ratio <= 1.0
    }

    pub fn passes(&self) -> bool {
        self.worst_ratio <= 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracks_worst_location() {
        let tol = Tolerance::<f64>::default();
        let mut r = Residual::default();
        let a = Element::from_f64(&[1.0]);
        let b = Element::from_f64(&[2.0]);
        assert!(r.record(&[1.0], &[1.0], &tol, &[&a]));
        assert!(r.passes() && r.worst_at.is_none());
        assert!(!r.record(&[1.0], &[1.5], &tol, &[&b]));
        assert!(!r.passes());
        assert_eq!(r.worst_at, Some(vec![vec![2.0]]));
        assert_eq!(r.max_abs, 0.5);
        assert_eq!(r.count, 2);
    }

    #[test]
    fn zero_uses_absolute_only() {
        let tol = Tolerance::<f64>::default();
        let mut r = Residual::default();
        assert!(!r.record_zero(&[1e-8], &tol, &[]));
    }
}
