use crate::element::Element;
use crate::error::Result;
use crate::scalar::Scalar;

/// Chart change from the upper-triangular chart to the Heisenberg chart:
/// `(x, y, z) -> (x, y, z - x y / 2)`.
pub fn sut3_to_heis<S: Scalar>(a: &Element<S>) -> Result<Element<S>> {
    a.validate(3)?;
    Ok(sut3_to_heis_raw(a.coords()))
}

/// Inverse of [`sut3_to_heis`].
pub fn heis_to_sut3<S: Scalar>(a: &Element<S>) -> Result<Element<S>> {
    a.validate(3)?;
    Ok(heis_to_sut3_raw(a.coords()))
}

pub(crate) fn sut3_to_heis_raw<S: Scalar>(a: &[S]) -> Element<S> {
    Element::new([a[0], a[1], a[2] - S::lit(0.5) * a[0] * a[1]])
}

pub(crate) fn heis_to_sut3_raw<S: Scalar>(a: &[S]) -> Element<S> {
    Element::new([a[0], a[1], a[2] + S::lit(0.5) * a[0] * a[1]])
}
