use crate::element::Element;
use crate::group::GroupLaw;
use crate::scalar::Scalar;

/// The homomorphism `w -> h_z(w)` from `R` into `KCd(d, 1)` through the point
/// with acted coordinates `(x, y)` and acting coordinate `z`:
///
/// `h_z(w) = (w z, (e^{d z w} - 1)/(e^{d z} - 1) x, (e^{z w} - 1)/(e^{z} - 1) y)`,
/// where each ratio is replaced by `w` when its exponent vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneParameterSubgroup<S> {
    pub x: S,
    pub y: S,
    pub z: S,
    pub d: S,
}

fn ratio<S: Scalar>(w: S, s: S) -> S {
    if s == S::zero() {
        w
    } else {
        (s * w).exp_m1() / s.exp_m1()
    }
}

impl<S: Scalar> OneParameterSubgroup<S> {
    pub fn new(x: S, y: S, z: S, d: S) -> Self {
        Self { x, y, z, d }
    }

    /// Target law, `KCd(d, 1)`.
    pub fn law(&self) -> GroupLaw<S> {
        GroupLaw::KCd(self.d, S::one())
    }

    pub fn at(&self, w: S) -> Element<S> {
        Element::new([w * self.z, ratio(w, self.d * self.z) * self.x, ratio(w, self.z) * self.y])
    }
}
