//! Exponential actions of a group chart on an additive module.
//!
//! Every supported action scales module coordinate `i` by `e^{<row_i, g>}` for a
//! fixed exponent row, so the action is always a positive diagonal scaling.

use smallvec::SmallVec;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::GroupLaw;
use crate::linalg::Matrix;
use crate::order::LexOrder;
use crate::report::Residual;
use crate::sampling::SampleConfig;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, PartialEq)]
pub enum ExpAction<S> {
    /// `a -> e^{<c, g>} a` on a one-dimensional module.
    Character(Vec<S>),
    /// `(u, v) -> (e^{c t} u, e^{d t} v)` for a one-dimensional acting chart `t`.
    Diagonal(S, S),
    /// `a -> e^{c y} a` for the acting chart `(x, y)`.
    AffineOnSemidirect(S),
}

impl<S: Scalar> ExpAction<S> {
    /// Trivial action matching the given chart sizes, if one of the kinds fits.
    pub fn trivial(acting_dim: usize, module_dim: usize) -> Result<Self> {
        match module_dim {
            1 => Ok(ExpAction::Character(vec![S::zero(); acting_dim])),
            2 if acting_dim == 1 => Ok(ExpAction::Diagonal(S::zero(), S::zero())),
            _ => Err(Error::input(format!("no action kind acts from dimension {acting_dim} on dimension {module_dim}"))),
        }
    }

    /// Parses the `kind`/`coeffs` pair.
    pub fn from_kind(kind: &str, coeffs: &[S]) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::input("action coefficients must be finite"));
        }
        match (kind, coeffs.len()) {
            ("character", 1..=2) => Ok(ExpAction::Character(coeffs.to_vec())),
            ("diagonal", 2) => Ok(ExpAction::Diagonal(coeffs[0], coeffs[1])),
            ("affine_on_semidirect", 1) => Ok(ExpAction::AffineOnSemidirect(coeffs[0])),
            ("character" | "diagonal" | "affine_on_semidirect", n) => {
                Err(Error::input(format!("action kind {kind} does not take {n} coefficients")))
            }
            _ => Err(Error::input(format!("unknown action kind {kind:?}"))),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ExpAction::Character(_) => "character",
            ExpAction::Diagonal(..) => "diagonal",
            ExpAction::AffineOnSemidirect(_) => "affine_on_semidirect",
        }
    }

    pub fn coeffs(&self) -> Vec<S> {
        match self {
            ExpAction::Character(c) => c.clone(),
            ExpAction::Diagonal(c, d) => vec![*c, *d],
            ExpAction::AffineOnSemidirect(c) => vec![*c],
        }
    }

    pub fn acting_dim(&self) -> usize {
        match self {
            ExpAction::Character(c) => c.len(),
            ExpAction::Diagonal(..) => 1,
            ExpAction::AffineOnSemidirect(_) => 2,
        }
    }

    pub fn module_dim(&self) -> usize {
        match self {
            ExpAction::Diagonal(..) => 2,
            _ => 1,
        }
    }

    /// One exponent row per module coordinate, each over the acting chart.
    pub fn exponent_rows(&self) -> Vec<Vec<S>> {
        match self {
            ExpAction::Character(c) => vec![c.clone()],
            ExpAction::Diagonal(c, d) => vec![vec![*c], vec![*d]],
            ExpAction::AffineOnSemidirect(c) => vec![vec![S::zero(), *c]],
        }
    }

    pub fn is_nontrivial(&self) -> bool {
        self.coeffs().iter().any(|&c| c != S::zero())
    }

    /// Logarithms of the scaling factors at `g`.
    pub fn exponents(&self, g: &[S]) -> SmallVec<[S; 3]> {
        match self {
            ExpAction::Character(c) => {
                SmallVec::from_elem(c.iter().zip(g).fold(S::zero(), |acc, (&ci, &gi)| acc + ci * gi), 1)
            }
            ExpAction::Diagonal(c, d) => SmallVec::from_slice(&[*c * g[0], *d * g[0]]),
            ExpAction::AffineOnSemidirect(c) => SmallVec::from_elem(*c * g[1], 1),
        }
    }

    pub fn act_raw(&self, g: &[S], n: &[S]) -> Element<S> {
        self.exponents(g).iter().zip(n).map(|(&e, &v)| e.exp() * v).collect()
    }

    pub fn act(&self, g: &Element<S>, n: &Element<S>) -> Result<Element<S>> {
        g.validate(self.acting_dim())?;
        n.validate(self.module_dim())?;
        Ok(self.act_raw(g.coords(), n.coords()))
    }

    /// Sampled residual of `gamma(g h)(n) = gamma(g)(gamma(h)(n))` over `acting`.
    pub fn homomorphism_residual(&self, acting: &GroupLaw<S>, cfg: &SampleConfig, tol: &Tolerance<S>) -> Residual {
        let mut res = Residual::default();
        let mut s = cfg.sampler();
        for _ in 0..cfg.count {
            let g = s.element::<S>(acting.dim());
            let h = s.element::<S>(acting.dim());
            let n = s.element::<S>(self.module_dim());
            let lhs = self.act_raw(acting.mul_raw(g.coords(), h.coords()).coords(), n.coords());
            let rhs = self.act_raw(g.coords(), self.act_raw(h.coords(), n.coords()).coords());
            if lhs.is_finite() && rhs.is_finite() {
                res.record(lhs.coords(), rhs.coords(), tol, &[&g, &h, &n]);
            }
        }
        res
    }

    /// Sampled check that every `gamma(g)` is strictly monotone for `order` on the module.
    pub fn preserves_order(&self, order: &LexOrder, cfg: &SampleConfig) -> bool {
        let mut s = cfg.sampler();
        (0..cfg.count).all(|_| {
            let g = s.element::<S>(self.acting_dim());
            let (lo, hi) = order.sample_pair::<S>(&mut s);
            let a = self.act_raw(g.coords(), lo.coords());
            let b = self.act_raw(g.coords(), hi.coords());
            !(a.is_finite() && b.is_finite()) || order.compare_raw(a.coords(), b.coords()).is_lt()
        })
    }
}

/// Rewrites a nontrivial character `e^{<c, x>}` as the standard character
/// `e^{x_1}` precomposed with an invertible linear map `psi`.
///
/// `psi` has `c` as its first row followed by the standard basis rows that
/// skip the column of the first nonzero entry of `c`.
pub fn standardize_action<S: Scalar>(action: &ExpAction<S>) -> Result<(ExpAction<S>, Matrix<S>)> {
    let c = match action {
        ExpAction::Character(c) => c,
        other => return Err(Error::domain(format!("standardization applies to characters, got {}", other.kind()))),
    };
    let pivot = c
        .iter()
        .position(|&v| v != S::zero())
        .ok_or_else(|| Error::domain("trivial action has no standard form"))?;
    let n = c.len();
    let mut rows = vec![c.clone()];
    for j in (0..n).filter(|&j| j != pivot) {
        let mut r = vec![S::zero(); n];
        r[j] = S::one();
        rows.push(r);
    }
    let psi = Matrix::from_rows(&rows)?;
    if psi.det() == S::zero() || psi.inverse().is_none() {
        return Err(Error::domain("standardizing map is singular"));
    }
    let mut standard = vec![S::zero(); n];
    standard[0] = S::one();
    Ok((ExpAction::Character(standard), psi))
}

/// One observation of an action: acting element, module element, image.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionSample<S: Scalar> {
    pub g: Element<S>,
    pub n: Element<S>,
    pub image: Element<S>,
}

/// Per-channel exponent fit.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentFit<S> {
    /// One exponent row per module coordinate.
    pub channels: Vec<Vec<S>>,
    /// Largest absolute log-ratio residual of the fit.
    pub residual: S,
}

/// Least-squares recovery of the exponent rows from observations.
pub fn infer_exponents<S: Scalar>(samples: &[ActionSample<S>]) -> Result<ExponentFit<S>> {
    let first = samples.first().ok_or_else(|| Error::domain("no samples"))?;
    let (gd, nd) = (first.g.dim(), first.n.dim());
    for s in samples {
        s.g.validate(gd)?;
        s.n.validate(nd)?;
        s.image.validate(nd)?;
    }
    let mut channels = Vec::with_capacity(nd);
    let mut residual = S::zero();
    for ch in 0..nd {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for s in samples.iter().filter(|s| s.n[ch] != S::zero()) {
            let ratio = s.image[ch] / s.n[ch];
            if ratio <= S::zero() {
                return Err(Error::domain("observed scaling is not positive"));
            }
            rows.push(s.g.coords().to_vec());
            rhs.push(ratio.ln());
        }
        if rows.len() < gd {
            return Err(Error::domain("rank-deficient sample set"));
        }
        let a = Matrix::from_rows(&rows)?;
        let c = a.least_squares(&rhs)?;
        let fitted = a.mul_vec(&c);
        residual = fitted.iter().zip(&rhs).fold(residual, |m, (&u, &v)| m.max((u - v).abs()));
        channels.push(c);
    }
    Ok(ExponentFit { channels, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(v: &[f64]) -> Element<f64> {
        Element::from_f64(v)
    }

    #[test]
    fn act_examples() {
        let chi = ExpAction::Character(vec![1.0, 0.0]);
        let out = chi.act(&e(&[2f64.ln(), 7.0]), &e(&[3.0])).unwrap();
        assert!((out[0] - 6.0).abs() < 1e-12);
        let aff = ExpAction::AffineOnSemidirect(1.0);
        let out = aff.act(&e(&[5.0, 3f64.ln()]), &e(&[2.0])).unwrap();
        assert!((out[0] - 6.0).abs() < 1e-12);
        for a in [chi, aff, ExpAction::Diagonal(2.0, -1.0)] {
            let n = Element::from_f64(&vec![1.5; a.module_dim()]);
            assert_eq!(a.act(&Element::zeros(a.acting_dim()), &n).unwrap(), n);
        }
    }

    #[test]
    fn act_checks_dimensions() {
        let chi = ExpAction::Character(vec![1.0, 0.0]);
        assert!(matches!(chi.act(&e(&[1.0]), &e(&[1.0])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn nontriviality() {
        assert!(!ExpAction::Character(vec![0.0, 0.0]).is_nontrivial());
        assert!(ExpAction::Character(vec![2.0, -1.0]).is_nontrivial());
        assert!(!ExpAction::<f64>::Diagonal(0.0, 0.0).is_nontrivial());
    }

    #[test]
    fn standardize_examples() {
        let (std, psi) = standardize_action(&ExpAction::Character(vec![3.0, 0.0])).unwrap();
        assert_eq!(std, ExpAction::Character(vec![1.0, 0.0]));
        assert_eq!(psi, Matrix::diag(&[3.0, 1.0]));
        let (_, psi) = standardize_action(&ExpAction::Character(vec![1.0, 0.0])).unwrap();
        assert!(psi.is_identity());
        let (_, psi) = standardize_action(&ExpAction::Character(vec![2.0, 5.0])).unwrap();
        assert_eq!(psi.to_rows(), vec![vec![2.0, 5.0], vec![0.0, 1.0]]);
        let (_, psi) = standardize_action(&ExpAction::Character(vec![0.0, -4.0])).unwrap();
        assert_eq!(psi.to_rows(), vec![vec![0.0, -4.0], vec![1.0, 0.0]]);
        assert!(matches!(standardize_action(&ExpAction::Character(vec![0.0, 0.0])), Err(Error::Domain(_))));
        assert!(matches!(standardize_action(&ExpAction::Diagonal(1.0, 1.0)), Err(Error::Domain(_))));
    }

    fn observe(action: &ExpAction<f64>, count: usize, seed: u64) -> Vec<ActionSample<f64>> {
        let mut s = SampleConfig::default().with_seed(seed).sampler();
        (0..count)
            .map(|_| {
                let g = s.element(action.acting_dim());
                let n = s.element(action.module_dim());
                let image = action.act_raw(g.coords(), n.coords());
                ActionSample { g, n, image }
            })
            .collect()
    }

    #[test]
    fn infer_round_trips() {
        let fit = infer_exponents(&observe(&ExpAction::Character(vec![1.0, 0.0]), 50, 1)).unwrap();
        assert!((fit.channels[0][0] - 1.0).abs() < 1e-9 && fit.channels[0][1].abs() < 1e-9);
        assert!(fit.residual < 1e-9);
        let fit = infer_exponents(&observe(&ExpAction::Character(vec![0.0, 0.0, 0.0]), 50, 2)).unwrap();
        assert!(fit.channels[0].iter().all(|c| c.abs() < 1e-9));
        let fit = infer_exponents(&observe(&ExpAction::Diagonal(2.0, 1.0), 50, 3)).unwrap();
        assert!((fit.channels[0][0] - 2.0).abs() < 1e-9);
        assert!((fit.channels[1][0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn infer_skips_zero_module_samples() {
        let mut obs = observe(&ExpAction::Character(vec![0.5]), 10, 4);
        obs.push(ActionSample { g: e(&[1.0]), n: e(&[0.0]), image: e(&[0.0]) });
        let fit = infer_exponents(&obs).unwrap();
        assert!((fit.channels[0][0] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn infer_rejects_rank_deficient() {
        let obs: Vec<_> = (1..5)
            .map(|i| {
                let g = e(&[i as f64, 0.0]);
                let n = e(&[1.0]);
                ActionSample { image: ExpAction::Character(vec![1.0, 1.0]).act_raw(g.coords(), n.coords()), g, n }
            })
            .collect();
        assert!(matches!(infer_exponents(&obs), Err(Error::Domain(_))));
    }

    #[test]
    fn homomorphism_on_natural_charts() {
        let tol = Tolerance::default();
        let cfg = SampleConfig::default();
        assert!(ExpAction::Character(vec![2.0, -1.0]).homomorphism_residual(&GroupLaw::Additive(2), &cfg, &tol).passes());
        assert!(ExpAction::Diagonal(1.0, -2.0).homomorphism_residual(&GroupLaw::Additive(1), &cfg, &tol).passes());
        assert!(ExpAction::AffineOnSemidirect(1.5).homomorphism_residual(&GroupLaw::SemidirectRR(1.0), &cfg, &tol).passes());
        assert!(!ExpAction::Character(vec![1.0, 0.0]).homomorphism_residual(&GroupLaw::SemidirectRR(1.0), &cfg, &tol).passes());
    }

    proptest! {
        #[test]
        fn standardize_factors_action(c0 in -3.0f64..3.0, c1 in -3.0f64..3.0, x0 in -3.0f64..3.0, x1 in -3.0f64..3.0, n in -3.0f64..3.0) {
            let action = ExpAction::Character(vec![c0, c1]);
            prop_assume!(action.is_nontrivial());
            let (std, psi) = standardize_action(&action).unwrap();
            let lhs = action.act_raw(&[x0, x1], &[n]);
            let rhs = std.act_raw(&psi.mul_vec(&[x0, x1]), &[n]);
            prop_assert!(Tolerance::default().close_slices(lhs.coords(), rhs.coords()));
            prop_assert!(psi.det().abs() > 0.0);
        }

        #[test]
        fn scalings_are_positive(c in -3.0f64..3.0, d in -3.0f64..3.0, t in -3.0f64..3.0, u in -3.0f64..3.0, v in -3.0f64..3.0) {
            let a = ExpAction::Diagonal(c, d);
            let lo = a.act_raw(&[t], &[u, v]);
            let hi = a.act_raw(&[t], &[u + 1.0, v + 1.0]);
            prop_assert!(lo[0] < hi[0] && lo[1] < hi[1]);
        }
    }
}
