use std::fmt;
use std::sync::Arc;

use super::{coboundary_check, Cochain, CocycleTag, GModule};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::GroupLaw;
use crate::order::{LexOrder, OrderedGroupSpec};
use crate::sampling::SampleConfig;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// Group law on `H x N` built from a 2-cochain:
/// `(h, a) (h', a') = (h h', a + h.a' + f(h, h'))`.
///
/// Coordinates are the acting-group chart followed by the module chart. When
/// `f(e, e) = m != 0` the cochain is replaced by the cohomologous
/// `f(g, h) - g.m`, so that the all-zeros element is the identity.
pub struct Extension<S: Scalar> {
    cocycle: Cochain<S>,
    shift: Option<Element<S>>,
}

impl<S: Scalar> Extension<S> {
    /// Builds the law without checking the cocycle condition.
    pub fn unchecked(cocycle: Cochain<S>) -> Result<Self> {
        if cocycle.degree() != 2 {
            return Err(Error::input(format!("extension needs a degree-2 cochain, got degree {}", cocycle.degree())));
        }
        let module = cocycle.module();
        if module.acting().dim() + module.module_dim() > 3 {
            return Err(Error::input("extension dimension exceeds 3"));
        }
        let e = module.acting().identity();
        let m = cocycle.eval_raw(&[e.clone(), e]);
        if !m.is_finite() {
            return Err(Error::domain("cochain is not finite at the identity"));
        }
        let nonzero = m.iter().any(|&v| v != S::zero());
        let shift = nonzero.then_some(m);
        Ok(Self { cocycle, shift })
    }

    pub fn cocycle(&self) -> &Cochain<S> {
        &self.cocycle
    }

    pub fn module(&self) -> &GModule<S> {
        self.cocycle.module()
    }

    pub fn tag(&self) -> Option<&CocycleTag<S>> {
        self.cocycle.tag()
    }

    /// Value of `f(e, e)` removed by normalization, if nonzero.
    pub fn shift(&self) -> Option<&Element<S>> {
        self.shift.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.module().acting().dim() + self.module().module_dim()
    }

    pub fn is_additive(&self) -> bool {
        self.module().acting().is_additive()
            && !self.module().action().is_nontrivial()
            && matches!(self.tag(), Some(CocycleTag::Zero))
    }

    pub(crate) fn same_construction(&self, other: &Self) -> bool {
        self.tag().is_some() && self.tag() == other.tag() && self.module() == other.module() && self.shift == other.shift
    }

    /// Normalized cochain value at `(g, h)`.
    fn f(&self, g: &[S], h: &[S]) -> Element<S> {
        let v = self.cocycle.eval_raw(&[Element::from_slice(g), Element::from_slice(h)]);
        match &self.shift {
            None => v,
            Some(m) => {
                let gm = self.module().action().act_raw(g, m.coords());
                v.iter().zip(gm.iter()).map(|(&a, &b)| a - b).collect()
            }
        }
    }

    pub(crate) fn mul(&self, a: &[S], b: &[S]) -> Element<S> {
        let module = self.module();
        let hd = module.acting().dim();
        let (h1, x1) = a.split_at(hd);
        let (h2, x2) = b.split_at(hd);
        let h = module.acting().mul_raw(h1, h2);
        let moved = module.action().act_raw(h1, x2);
        let f = self.f(h1, h2);
        let x: Element<S> = x1.iter().zip(moved.iter()).zip(f.iter()).map(|((&p, &q), &r)| p + q + r).collect();
        h.concat(&x)
    }

    pub(crate) fn inv(&self, a: &[S]) -> Element<S> {
        let module = self.module();
        let hd = module.acting().dim();
        let (h, x) = a.split_at(hd);
        let hinv = module.acting().inv_raw(h);
        let f = self.f(h, hinv.coords());
        let t: Vec<S> = x.iter().zip(f.iter()).map(|(&p, &q)| -(p + q)).collect();
        let b = module.action().act_raw(hinv.coords(), &t);
        hinv.concat(&b)
    }
}

impl<S: Scalar> fmt::Debug for Extension<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Extension")
            .field("acting", self.module().acting())
            .field("action", self.module().action())
            .field("tag", &self.tag())
            .field("shift", &self.shift)
            .finish()
    }
}

fn default_check() -> SampleConfig {
    SampleConfig { seed: 0x636f63, count: 256, half_width: 3.0 }
}

/// Builds the extension law after checking the cocycle condition on a default sample.
pub fn extension_from_cocycle<S: Scalar>(f: &Cochain<S>) -> Result<GroupLaw<S>> {
    extension_from_cocycle_with(f, &default_check(), &Tolerance::default())
}

pub fn extension_from_cocycle_with<S: Scalar>(
    f: &Cochain<S>,
    cfg: &SampleConfig,
    tol: &Tolerance<S>,
) -> Result<GroupLaw<S>> {
    if f.degree() != 2 {
        return Err(Error::input(format!("extension needs a degree-2 cochain, got degree {}", f.degree())));
    }
    let res = coboundary_check(f, cfg, tol);
    if !res.passes() {
        return Err(Error::domain(format!("cochain is not a cocycle: residual {:e}", res.max_abs)));
    }
    Ok(GroupLaw::FromCocycle(Arc::new(Extension::unchecked(f.clone())?)))
}

/// Extension law ordered lexicographically with the acting group's coordinates
/// above the module's.
pub fn ordered_extension<S: Scalar>(
    f: &Cochain<S>,
    acting_order: &LexOrder,
    module_order: &LexOrder,
) -> Result<OrderedGroupSpec<S>> {
    let module = f.module();
    let hd = module.acting().dim();
    if acting_order.dim() != hd {
        return Err(Error::DimensionMismatch { expected: hd, found: acting_order.dim() });
    }
    if module_order.dim() != module.module_dim() {
        return Err(Error::DimensionMismatch { expected: module.module_dim(), found: module_order.dim() });
    }
    if !module.action().preserves_order(module_order, &default_check()) {
        return Err(Error::domain("action does not preserve the module order"));
    }
    let law = extension_from_cocycle(f)?;
    let sig: Vec<usize> = acting_order
        .significance()
        .iter()
        .copied()
        .chain(module_order.significance().iter().map(|&i| i + hd))
        .collect();
    OrderedGroupSpec::new(law, LexOrder::new(sig)?)
}
