//! Cochains with values in an exponential module, the coboundary operator,
//! and group laws built from 2-cocycles.

mod cocycles;
mod extension;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub use cocycles::{g3_cocycle, g3_cocycle_on, heis_cocycle, heis_cocycle_on, zero_cocycle, CocycleTag};
pub use extension::{extension_from_cocycle, extension_from_cocycle_with, ordered_extension, Extension};

use crate::action::ExpAction;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::GroupLaw;
use crate::report::Residual;
use crate::sampling::SampleConfig;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// An additive module `R^m` with an exponential action of `acting`.
#[derive(Debug, Clone, PartialEq)]
pub struct GModule<S: Scalar> {
    acting: GroupLaw<S>,
    action: ExpAction<S>,
}

impl<S: Scalar> GModule<S> {
    /// Validates chart sizes and samples the homomorphism condition.
    pub fn new(acting: GroupLaw<S>, action: ExpAction<S>) -> Result<Self> {
        acting.validate()?;
        if action.acting_dim() != acting.dim() {
            return Err(Error::DimensionMismatch { expected: acting.dim(), found: action.acting_dim() });
        }
        let cfg = SampleConfig { seed: 0x6d6f64, count: 128, half_width: 2.0 };
        let res = action.homomorphism_residual(&acting, &cfg, &Tolerance::default());
        if !res.passes() {
            return Err(Error::domain(format!(
                "{} action {:?} is not a homomorphism on {:?} (residual {:e})",
                action.kind(),
                action.coeffs(),
                acting,
                res.max_abs
            )));
        }
        Ok(Self { acting, action })
    }

    /// `R^2` acting trivially on `R`.
    pub fn trivial_plane() -> Self {
        Self { acting: GroupLaw::Additive(2), action: ExpAction::Character(vec![S::zero(); 2]) }
    }

    /// `SemidirectRR(1)` acting on `R` by `e^{y}`.
    pub fn affine_line() -> Self {
        Self { acting: GroupLaw::SemidirectRR(S::one()), action: ExpAction::AffineOnSemidirect(S::one()) }
    }

    pub fn acting(&self) -> &GroupLaw<S> {
        &self.acting
    }

    pub fn action(&self) -> &ExpAction<S> {
        &self.action
    }

    pub fn module_dim(&self) -> usize {
        self.action.module_dim()
    }

    /// The module as a group.
    pub fn module_law(&self) -> GroupLaw<S> {
        GroupLaw::Additive(self.module_dim())
    }
}

type CochainFn<S> = dyn Fn(&[Element<S>]) -> Element<S> + Send + Sync;

/// A degree-`n` function from `H^n` to the module.
#[derive(Clone)]
pub struct Cochain<S: Scalar> {
    degree: usize,
    module: GModule<S>,
    eval: Arc<CochainFn<S>>,
    tag: Option<CocycleTag<S>>,
}

impl<S: Scalar> Cochain<S> {
    pub fn new<F>(module: GModule<S>, degree: usize, f: F) -> Self
    where
        F: Fn(&[Element<S>]) -> Element<S> + Send + Sync + 'static,
    {
        Self { degree, module, eval: Arc::new(f), tag: None }
    }

    /// Degree-0 cochain with value `m`.
    pub fn constant(module: GModule<S>, m: Element<S>) -> Result<Self> {
        m.validate(module.module_dim())?;
        Ok(Self::new(module, 0, move |_| m.clone()))
    }

    pub(crate) fn tagged(mut self, tag: CocycleTag<S>) -> Self {
        self.tag = Some(tag);
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> &GModule<S> {
        &self.module
    }

    pub fn tag(&self) -> Option<&CocycleTag<S>> {
        self.tag.as_ref()
    }

    /// Evaluates at `degree` group elements.
    pub fn eval(&self, args: &[Element<S>]) -> Result<Element<S>> {
        if args.len() != self.degree {
            return Err(Error::input(format!("degree-{} cochain given {} arguments", self.degree, args.len())));
        }
        for a in args {
            a.validate(self.module.acting.dim())?;
        }
        Ok(self.eval_raw(args))
    }

    pub fn eval_raw(&self, args: &[Element<S>]) -> Element<S> {
        (self.eval)(args)
    }

    /// Pointwise sum with another cochain of the same degree and module.
    pub fn add(&self, other: &Cochain<S>) -> Result<Self> {
        if self.degree != other.degree || self.module != other.module {
            return Err(Error::input("cochains differ in degree or module"));
        }
        let (a, b) = (self.clone(), other.clone());
        Ok(Self::new(self.module.clone(), self.degree, move |gs| {
            let (u, v) = (a.eval_raw(gs), b.eval_raw(gs));
            u.iter().zip(v.iter()).map(|(&x, &y)| x + y).collect()
        }))
    }
}

impl<S: Scalar> fmt::Debug for Cochain<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cochain")
            .field("degree", &self.degree)
            .field("module", &self.module)
            .field("tag", &self.tag)
            .finish()
    }
}

/// The coboundary `delta f`:
/// `delta f(g_1..g_{n+1}) = g_1 . f(g_2..g_{n+1}) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{n+1} f(g_1..g_n)`.
pub fn coboundary<S: Scalar>(f: &Cochain<S>) -> Cochain<S> {
    let n = f.degree;
    let inner = f.clone();
    Cochain::new(f.module.clone(), n + 1, move |gs| {
        let module = &inner.module;
        let law = &module.acting;
        let mut acc: Vec<S> = module.action.act_raw(gs[0].coords(), inner.eval_raw(&gs[1..]).coords()).coords().to_vec();
        let mut merged: Vec<Element<S>> = Vec::with_capacity(n);
        for i in 1..=n {
            merged.clear();
            merged.extend_from_slice(&gs[..i - 1]);
            merged.push(law.mul_raw(gs[i - 1].coords(), gs[i].coords()));
            merged.extend_from_slice(&gs[i + 1..]);
            let term = inner.eval_raw(&merged);
            let sign = if i % 2 == 0 { S::one() } else { -S::one() };
            for (a, &t) in acc.iter_mut().zip(term.iter()) {
                *a = *a + sign * t;
            }
        }
        let last = inner.eval_raw(&gs[..n]);
        let sign = if (n + 1).is_multiple_of(2) { S::one() } else { -S::one() };
        for (a, &t) in acc.iter_mut().zip(last.iter()) {
            *a = *a + sign * t;
        }
        Element::new(acc)
    })
}

/// Sampled sup-norm of `delta f` over tuples of `degree + 1` elements.
pub fn coboundary_check<S: Scalar>(f: &Cochain<S>, cfg: &SampleConfig, tol: &Tolerance<S>) -> Residual {
    let df = coboundary(f);
    let dim = f.module.acting.dim();
    let mut s = cfg.sampler();
    let mut res = Residual::default();
    for _ in 0..cfg.count {
        let args: Vec<Element<S>> = (0..df.degree).map(|_| s.element(dim)).collect();
        let v = df.eval_raw(&args);
        if v.is_finite() {
            let refs: Vec<&Element<S>> = args.iter().collect();
            res.record_zero(v.coords(), tol, &refs);
        }
    }
    res
}

/// Largest `|delta f|` over sampled triples; `f` is a cocycle when this is within tolerance.
pub fn cocycle_residual<S: Scalar>(f: &Cochain<S>, cfg: &SampleConfig) -> Result<S> {
    if f.degree != 2 {
        return Err(Error::input(format!("cocycle residual needs degree 2, got {}", f.degree)));
    }
    Ok(S::lit(coboundary_check(f, cfg, &Tolerance::default()).max_abs))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoboundaryReport {
    pub residual: Residual,
    pub pass: bool,
}

/// Checks `delta g = f` on sampled pairs.
pub fn verify_coboundary_witness<S: Scalar>(
    f: &Cochain<S>,
    g: &Cochain<S>,
    cfg: &SampleConfig,
    tol: &Tolerance<S>,
) -> Result<CoboundaryReport> {
    if f.degree != 2 || g.degree != 1 {
        return Err(Error::input("expected a degree-2 cochain and a degree-1 witness"));
    }
    if f.module != g.module {
        return Err(Error::input("cochains live in different modules"));
    }
    let dg = coboundary(g);
    let dim = f.module.acting.dim();
    let mut s = cfg.sampler();
    let mut residual = Residual::default();
    for _ in 0..cfg.count {
        let args = [s.element::<S>(dim), s.element::<S>(dim)];
        let (lhs, rhs) = (dg.eval_raw(&args), f.eval_raw(&args));
        if lhs.is_finite() && rhs.is_finite() {
            residual.record(lhs.coords(), rhs.coords(), tol, &[&args[0], &args[1]]);
        }
    }
    let pass = residual.passes() && residual.count > 0;
    Ok(CoboundaryReport { residual, pass })
}
