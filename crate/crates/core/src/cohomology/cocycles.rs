use super::{Cochain, GModule};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Names of the standard 2-cocycles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CocycleTag<S> {
    /// `c (x_1 y_2 - y_1 x_2)` on `R^2` with trivial action.
    Heis { c: S },
    /// `k y_2 z_1 e^{z_1}` on the affine group `(y, z)`.
    G3 { k: S },
    Zero,
}

/// `heis_cocycle(c)((x1, y1), (x2, y2)) = c (x1 y2 - y1 x2)` on the trivial plane module.
pub fn heis_cocycle<S: Scalar>(c: S) -> Cochain<S> {
    heis_cocycle_on(GModule::trivial_plane(), c).expect("plane module fits")
}

pub fn heis_cocycle_on<S: Scalar>(module: GModule<S>, c: S) -> Result<Cochain<S>> {
    if module.acting().dim() != 2 || module.module_dim() != 1 {
        return Err(Error::input("heis cocycle needs a two-dimensional acting group and a line module"));
    }
    Ok(Cochain::new(module, 2, move |gs| {
        let (g, h) = (&gs[0], &gs[1]);
        Element::new([c * (g[0] * h[1] - g[1] * h[0])])
    })
    .tagged(CocycleTag::Heis { c }))
}

/// `g3_cocycle(k)((y1, z1), (y2, z2)) = k y2 z1 e^{z1}` on the affine-line module.
pub fn g3_cocycle<S: Scalar>(k: S) -> Cochain<S> {
    g3_cocycle_on(GModule::affine_line(), k).expect("affine module fits")
}

pub fn g3_cocycle_on<S: Scalar>(module: GModule<S>, k: S) -> Result<Cochain<S>> {
    if module.acting().dim() != 2 || module.module_dim() != 1 {
        return Err(Error::input("g3 cocycle needs a two-dimensional acting group and a line module"));
    }
    Ok(Cochain::new(module, 2, move |gs| {
        let (g, h) = (&gs[0], &gs[1]);
        Element::new([k * h[0] * g[1] * g[1].exp()])
    })
    .tagged(CocycleTag::G3 { k }))
}

/// The zero 2-cochain.
pub fn zero_cocycle<S: Scalar>(module: GModule<S>) -> Cochain<S> {
    let m = module.module_dim();
    Cochain::new(module, 2, move |_| Element::zeros(m)).tagged(CocycleTag::Zero)
}
