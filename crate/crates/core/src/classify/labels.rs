use std::collections::BTreeMap;

use crate::group::GroupLaw;
use crate::order::LexOrder;
use crate::scalar::Scalar;

/// Canonical class names. Ordered classes come first; `Aff`, `Heis`,
/// `ProdAff`, `Sd2` and `G3` are the unordered group-level classes, and
/// `R`, `R2Abelian`, `R3` serve both levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassLabel<S> {
    R,
    R2Abelian,
    AffPlus,
    AffMinus,
    R3,
    EPlus,
    EMinus,
    /// Acting coordinate, then central line, then acted line (`G_{s,0}`).
    ProdAffOrderYzx(i8),
    /// Central line on top (`G_{0,s}`).
    ProdAffOrderZyx(i8),
    /// Affine plane on top, central line last.
    ProdAffOrderYxz(i8),
    KPlus(S),
    KMinus(S),
    TPlus,
    TMinus,
    Aff,
    Heis,
    ProdAff,
    Sd2(S),
    G3,
}

impl<S: Scalar> ClassLabel<S> {
    pub fn name(&self) -> &'static str {
        match self {
            ClassLabel::R => "R",
            ClassLabel::R2Abelian => "R2_abelian",
            ClassLabel::AffPlus => "Aff_plus",
            ClassLabel::AffMinus => "Aff_minus",
            ClassLabel::R3 => "R3",
            ClassLabel::EPlus => "E_plus",
            ClassLabel::EMinus => "E_minus",
            ClassLabel::ProdAffOrderYzx(_) => "ProdAff_order_yzx",
            ClassLabel::ProdAffOrderZyx(_) => "ProdAff_order_zyx",
            ClassLabel::ProdAffOrderYxz(_) => "ProdAff_order_yxz",
            ClassLabel::KPlus(_) => "K_plus",
            ClassLabel::KMinus(_) => "K_minus",
            ClassLabel::TPlus => "T_plus",
            ClassLabel::TMinus => "T_minus",
            ClassLabel::Aff => "Aff",
            ClassLabel::Heis => "Heis",
            ClassLabel::ProdAff => "ProdAff",
            ClassLabel::Sd2(_) => "SD2",
            ClassLabel::G3 => "G3",
        }
    }

    pub fn params(&self) -> BTreeMap<String, f64> {
        let mut m = BTreeMap::new();
        match self {
            ClassLabel::ProdAffOrderYzx(s) | ClassLabel::ProdAffOrderZyx(s) | ClassLabel::ProdAffOrderYxz(s) => {
                m.insert("sign".into(), f64::from(*s));
            }
            ClassLabel::KPlus(f) | ClassLabel::KMinus(f) => {
                m.insert("f".into(), f.to_f64_lossy());
            }
            ClassLabel::Sd2(c) => {
                m.insert("c".into(), c.to_f64_lossy());
            }
            _ => {}
        }
        m
    }

    /// Conventional name of the class in the classification literature.
    pub fn alias(&self) -> Option<String> {
        let sgn = |s: i8| if s > 0 { "1" } else { "-1" };
        Some(match self {
            ClassLabel::AffPlus => "R x|_1 R".into(),
            ClassLabel::AffMinus => "R x|_-1 R".into(),
            ClassLabel::EPlus => "E_1".into(),
            ClassLabel::EMinus => "E_-1".into(),
            ClassLabel::ProdAffOrderYzx(s) => format!("G_{{{},0}}", sgn(*s)),
            ClassLabel::ProdAffOrderZyx(s) => format!("G_{{0,{}}}", sgn(*s)),
            ClassLabel::ProdAffOrderYxz(s) => format!("(R x|_{} R) x R", sgn(*s)),
            ClassLabel::KPlus(f) => format!("K_{{1,{f}}}"),
            ClassLabel::KMinus(f) => format!("K_{{-1,{f}}}"),
            ClassLabel::TPlus => "T_1".into(),
            ClassLabel::TMinus => "T_-1".into(),
            ClassLabel::Heis => "G_Heis".into(),
            ClassLabel::ProdAff => "(R x| R) x R".into(),
            ClassLabel::Sd2(c) => format!("R^2 x|_tau_{c} R"),
            ClassLabel::G3 => "G_3".into(),
            _ => return None,
        })
    }

    /// True for labels produced by the ordered classifier.
    pub fn is_ordered(&self) -> bool {
        !matches!(self, ClassLabel::Aff | ClassLabel::Heis | ClassLabel::ProdAff | ClassLabel::Sd2(_) | ClassLabel::G3)
    }

    /// Canonical law and order of the class.
    pub fn realize(&self) -> CanonicalClass<S> {
        let one = S::one();
        let sgn = |s: i8| if s > 0 { one } else { -one };
        let std3 = LexOrder::standard(3);
        let (law, order) = match *self {
            ClassLabel::R => (GroupLaw::Additive(1), LexOrder::standard(1)),
            ClassLabel::R2Abelian => (GroupLaw::Additive(2), LexOrder::reverse(2)),
            ClassLabel::AffPlus | ClassLabel::Aff => (GroupLaw::SemidirectRR(one), LexOrder::reverse(2)),
            ClassLabel::AffMinus => (GroupLaw::SemidirectRR(-one), LexOrder::reverse(2)),
            ClassLabel::R3 => (GroupLaw::Additive(3), std3),
            ClassLabel::EPlus => (GroupLaw::Ec(one), std3),
            ClassLabel::EMinus => (GroupLaw::Ec(-one), std3),
            ClassLabel::ProdAffOrderYzx(s) => (GroupLaw::GCd(sgn(s), S::zero()), std3),
            ClassLabel::ProdAffOrderZyx(s) => (GroupLaw::GCd(S::zero(), sgn(s)), std3),
            ClassLabel::ProdAffOrderYxz(s) => (prod_aff(sgn(s)), yxz()),
            ClassLabel::ProdAff => (prod_aff(one), yxz()),
            ClassLabel::KPlus(f) => (GroupLaw::KCd(one, f), std3),
            ClassLabel::KMinus(f) => (GroupLaw::KCd(-one, f), std3),
            ClassLabel::TPlus | ClassLabel::G3 => (GroupLaw::Tk(one), LexOrder::reverse(3)),
            ClassLabel::TMinus => (GroupLaw::Tk(-one), LexOrder::reverse(3)),
            ClassLabel::Heis => (GroupLaw::heis(), std3),
            ClassLabel::Sd2(c) => (GroupLaw::KCd(c, one), std3),
        };
        CanonicalClass { label: *self, law, order }
    }
}

fn prod_aff<S: Scalar>(c: S) -> GroupLaw<S> {
    GroupLaw::Product(Box::new(GroupLaw::SemidirectRR(c)), Box::new(GroupLaw::Additive(1)))
}

fn yxz() -> LexOrder {
    LexOrder::new(vec![1, 0, 2]).expect("valid permutation")
}

/// A label with its canonical realization.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalClass<S: Scalar> {
    pub label: ClassLabel<S>,
    pub law: GroupLaw<S>,
    pub order: LexOrder,
}
