//! Closed-form group laws on flattened coordinate charts.
//!
//! Chart conventions (all coordinates flattened to a vector):
//! - `Additive(n)`: `(x_1, .., x_n)` with coordinatewise addition.
//! - `SemidirectRR(c)`: `(x, y)`, where `y` acts on `x` by `e^{c y}`.
//! - `Ec(c)`: `(x, y, z)` for `((x, y), z)`, `z` central.
//! - `Sut3`: `(x, y, z)` for the matrix `[[1, x, z], [0, 1, y], [0, 0, 1]]`.
//! - `GCd(c, d)`: `(x, y, z)`, `(x, y)` acts on `z` by `e^{c x + d y}`.
//! - `KCd(c, d)`: `(x, y, z)`, `x` acts on `y` by `e^{c x}` and on `z` by `e^{d x}`.
//! - `Tk(k)`: `(x, y, z)` for `(x, (y, z))`.
//! - `Product(a, b)`: coordinates of `a` followed by those of `b`.
//! - `FromCocycle`: acting-group coordinates followed by module coordinates.

mod axioms;
pub(crate) mod heis;

use std::fmt;
use std::sync::Arc;

pub use axioms::{check_group_axioms, AxiomReport};
pub use heis::{heis_to_sut3, sut3_to_heis};

use crate::cohomology::Extension;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A parametric group law.
#[derive(Clone)]
pub enum GroupLaw<S: Scalar> {
    Additive(usize),
    SemidirectRR(S),
    Ec(S),
    Sut3,
    GCd(S, S),
    KCd(S, S),
    Tk(S),
    Product(Box<GroupLaw<S>>, Box<GroupLaw<S>>),
    FromCocycle(Arc<Extension<S>>),
}

impl<S: Scalar> GroupLaw<S> {
    /// The Heisenberg chart, `Ec(1/2)`.
    pub fn heis() -> Self {
        GroupLaw::Ec(S::lit(0.5))
    }

    /// `Tk(1)`.
    pub fn g3() -> Self {
        GroupLaw::Tk(S::one())
    }

    pub fn additive(n: usize) -> Result<Self> {
        if (1..=3).contains(&n) {
            Ok(GroupLaw::Additive(n))
        } else {
            Err(Error::input(format!("additive dimension must be 1..3, got {n}")))
        }
    }

    pub fn product(a: GroupLaw<S>, b: GroupLaw<S>) -> Result<Self> {
        let law = GroupLaw::Product(Box::new(a), Box::new(b));
        law.validate()?;
        Ok(law)
    }

    /// Checks dimension bounds and that all parameters are finite.
    pub fn validate(&self) -> Result<()> {
        let finite = |ps: &[S]| {
            if ps.iter().all(|p| p.is_finite()) {
                Ok(())
            } else {
                Err(Error::input("group-law parameters must be finite"))
            }
        };
        match self {
            GroupLaw::Additive(n) => {
                if !(1..=3).contains(n) {
                    return Err(Error::input(format!("additive dimension must be 1..3, got {n}")));
                }
            }
            GroupLaw::SemidirectRR(c) | GroupLaw::Ec(c) | GroupLaw::Tk(c) => finite(&[*c])?,
            GroupLaw::GCd(c, d) | GroupLaw::KCd(c, d) => finite(&[*c, *d])?,
            GroupLaw::Sut3 => {}
            GroupLaw::Product(a, b) => {
                a.validate()?;
                b.validate()?;
                if a.dim() + b.dim() > 3 {
                    return Err(Error::input("product dimension exceeds 3"));
                }
            }
            GroupLaw::FromCocycle(ext) => {
                if ext.dim() > 3 {
                    return Err(Error::input("extension dimension exceeds 3"));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        match self {
            GroupLaw::Additive(n) => *n,
            GroupLaw::SemidirectRR(_) => 2,
            GroupLaw::Ec(_) | GroupLaw::Sut3 | GroupLaw::GCd(..) | GroupLaw::KCd(..) | GroupLaw::Tk(_) => 3,
            GroupLaw::Product(a, b) => a.dim() + b.dim(),
            GroupLaw::FromCocycle(ext) => ext.dim(),
        }
    }

    /// JSON family name.
    pub fn family(&self) -> &'static str {
        match self {
            GroupLaw::Additive(_) => "additive",
            GroupLaw::SemidirectRR(_) => "semidirect_rr",
            GroupLaw::Ec(_) => "e_c",
            GroupLaw::Sut3 => "sut3",
            GroupLaw::GCd(..) => "g_cd",
            GroupLaw::KCd(..) => "k_cd",
            GroupLaw::Tk(_) => "t_k",
            GroupLaw::Product(..) => "product",
            GroupLaw::FromCocycle(_) => "from_cocycle",
        }
    }

    pub fn identity(&self) -> Element<S> {
        Element::zeros(self.dim())
    }

    /// True when the law is literally coordinatewise addition.
    pub fn is_additive(&self) -> bool {
        let z = S::zero();
        match self {
            GroupLaw::Additive(_) => true,
            GroupLaw::SemidirectRR(c) | GroupLaw::Ec(c) => *c == z,
            GroupLaw::GCd(c, d) | GroupLaw::KCd(c, d) => *c == z && *d == z,
            GroupLaw::Sut3 | GroupLaw::Tk(_) => false,
            GroupLaw::Product(a, b) => a.is_additive() && b.is_additive(),
            GroupLaw::FromCocycle(ext) => ext.is_additive(),
        }
    }

    /// Product without input validation. Slices must have length `dim()`.
    pub fn mul_raw(&self, a: &[S], b: &[S]) -> Element<S> {
        match self {
            GroupLaw::Additive(_) => a.iter().zip(b).map(|(&u, &v)| u + v).collect(),
            GroupLaw::SemidirectRR(c) => {
                Element::new([a[0] + (*c * a[1]).exp() * b[0], a[1] + b[1]])
            }
            GroupLaw::Ec(c) => Element::new([
                a[0] + b[0],
                a[1] + b[1],
                a[2] + b[2] + *c * (a[0] * b[1] - a[1] * b[0]),
            ]),
            GroupLaw::Sut3 => Element::new([a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]]),
            GroupLaw::GCd(c, d) => Element::new([
                a[0] + b[0],
                a[1] + b[1],
                a[2] + (*c * a[0] + *d * a[1]).exp() * b[2],
            ]),
            GroupLaw::KCd(c, d) => Element::new([
                a[0] + b[0],
                a[1] + (*c * a[0]).exp() * b[1],
                a[2] + (*d * a[0]).exp() * b[2],
            ]),
            GroupLaw::Tk(k) => {
                let ez = a[2].exp();
                Element::new([
                    a[0] + b[0] * ez + *k * b[1] * a[2] * ez,
                    a[1] + b[1] * ez,
                    a[2] + b[2],
                ])
            }
            GroupLaw::Product(l, r) => {
                let n = l.dim();
                l.mul_raw(&a[..n], &b[..n]).concat(&r.mul_raw(&a[n..], &b[n..]))
            }
            GroupLaw::FromCocycle(ext) => ext.mul(a, b),
        }
    }

    /// Closed-form inverse without input validation.
    pub fn inv_raw(&self, a: &[S]) -> Element<S> {
        match self {
            GroupLaw::Additive(_) | GroupLaw::Ec(_) => a.iter().map(|&u| -u).collect(),
            GroupLaw::SemidirectRR(c) => Element::new([-(-*c * a[1]).exp() * a[0], -a[1]]),
            GroupLaw::Sut3 => Element::new([-a[0], -a[1], a[0] * a[1] - a[2]]),
            GroupLaw::GCd(c, d) => Element::new([-a[0], -a[1], -(-(*c * a[0] + *d * a[1])).exp() * a[2]]),
            GroupLaw::KCd(c, d) => {
                Element::new([-a[0], -(-*c * a[0]).exp() * a[1], -(-*d * a[0]).exp() * a[2]])
            }
            GroupLaw::Tk(k) => {
                let emz = (-a[2]).exp();
                Element::new([(*k * a[1] * a[2] - a[0]) * emz, -a[1] * emz, -a[2]])
            }
            GroupLaw::Product(l, r) => {
                let n = l.dim();
                l.inv_raw(&a[..n]).concat(&r.inv_raw(&a[n..]))
            }
            GroupLaw::FromCocycle(ext) => ext.inv(a),
        }
    }

    fn check(&self, a: &Element<S>) -> Result<()> {
        a.validate(self.dim())
    }

    /// `a * b`.
    pub fn multiply(&self, a: &Element<S>, b: &Element<S>) -> Result<Element<S>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a.coords(), b.coords()))
    }

    /// `a^{-1}`.
    pub fn invert(&self, a: &Element<S>) -> Result<Element<S>> {
        self.check(a)?;
        Ok(self.inv_raw(a.coords()))
    }

    /// `g h g^{-1}`.
    pub fn conjugate(&self, g: &Element<S>, h: &Element<S>) -> Result<Element<S>> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.conj_raw(g.coords(), h.coords()))
    }

    /// `g h g^{-1} h^{-1}`.
    pub fn commutator(&self, g: &Element<S>, h: &Element<S>) -> Result<Element<S>> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.comm_raw(g.coords(), h.coords()))
    }

    pub fn conj_raw(&self, g: &[S], h: &[S]) -> Element<S> {
        let gh = self.mul_raw(g, h);
        self.mul_raw(gh.coords(), self.inv_raw(g).coords())
    }

    pub fn comm_raw(&self, g: &[S], h: &[S]) -> Element<S> {
        let ghg = self.conj_raw(g, h);
        self.mul_raw(ghg.coords(), self.inv_raw(h).coords())
    }
}

impl<S: Scalar> PartialEq for GroupLaw<S> {
    fn eq(&self, other: &Self) -> bool {
        use GroupLaw::*;
        match (self, other) {
            (Additive(a), Additive(b)) => a == b,
            (SemidirectRR(a), SemidirectRR(b)) | (Ec(a), Ec(b)) | (Tk(a), Tk(b)) => a == b,
            (Sut3, Sut3) => true,
            (GCd(a, b), GCd(c, d)) | (KCd(a, b), KCd(c, d)) => a == c && b == d,
            (Product(a, b), Product(c, d)) => a == c && b == d,
            (FromCocycle(a), FromCocycle(b)) => Arc::ptr_eq(a, b) || a.same_construction(b),
            _ => false,
        }
    }
}

impl<S: Scalar> fmt::Debug for GroupLaw<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLaw::Additive(n) => write!(f, "Additive({n})"),
            GroupLaw::SemidirectRR(c) => write!(f, "SemidirectRR({c})"),
            GroupLaw::Ec(c) => write!(f, "Ec({c})"),
            GroupLaw::Sut3 => write!(f, "Sut3"),
            GroupLaw::GCd(c, d) => write!(f, "GCd({c}, {d})"),
            GroupLaw::KCd(c, d) => write!(f, "KCd({c}, {d})"),
            GroupLaw::Tk(k) => write!(f, "Tk({k})"),
            GroupLaw::Product(a, b) => write!(f, "Product({a:?}, {b:?})"),
            GroupLaw::FromCocycle(ext) => write!(f, "FromCocycle({ext:?})"),
        }
    }
}
