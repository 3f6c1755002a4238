//! Reduction of every supported law to a primitive family, and the
//! per-family canonical rules at group and ordered level.

use super::labels::ClassLabel;
use super::witness::CoordinateMap;
use crate::cohomology::CocycleTag;
use crate::error::{Error, Result};
use crate::group::GroupLaw;
use crate::linalg::Matrix;
use crate::order::LexOrder;
use crate::scalar::Scalar;

/// A coordinate change to an equal or simpler law. `perm` is set when the map
/// is a pure coordinate permutation, so orders can be relabelled.
pub(crate) struct Reduction<S: Scalar> {
    pub map: CoordinateMap<S>,
    pub law: GroupLaw<S>,
    pub perm: Option<Vec<usize>>,
}

impl<S: Scalar> Reduction<S> {
    fn same(law: GroupLaw<S>) -> Self {
        let d = law.dim();
        Self { map: CoordinateMap::identity(d), law, perm: None }
    }

    fn permuted(perm: &[usize], law: GroupLaw<S>) -> Self {
        Self { map: CoordinateMap::permutation(perm), law, perm: Some(perm.to_vec()) }
    }
}

enum Block<S> {
    Additive(usize),
    Affine(S),
}

fn flatten<S: Scalar>(law: &GroupLaw<S>, out: &mut Vec<Block<S>>) -> Result<()> {
    match law {
        l if l.is_additive() => out.push(Block::Additive(l.dim())),
        GroupLaw::SemidirectRR(c) => out.push(Block::Affine(*c)),
        GroupLaw::Product(a, b) => {
            flatten(a, out)?;
            flatten(b, out)?;
        }
        other => return Err(Error::domain(format!("unsupported product factor {other:?}"))),
    }
    Ok(())
}

/// One simplification step, or `None` for primitive laws.
pub(crate) fn simplify<S: Scalar>(law: &GroupLaw<S>) -> Result<Option<Reduction<S>>> {
    let zero = S::zero();
    if law.is_additive() && !matches!(law, GroupLaw::Additive(_)) {
        return Ok(Some(Reduction::same(GroupLaw::Additive(law.dim()))));
    }
    Ok(Some(match law {
        GroupLaw::Sut3 => Reduction { map: CoordinateMap::sut3_to_heis(), law: GroupLaw::heis(), perm: None },
        GroupLaw::KCd(c, d) if *c == zero => Reduction::same(GroupLaw::GCd(*d, zero)),
        GroupLaw::KCd(c, d) if *d == zero => Reduction::permuted(&[0, 2, 1], GroupLaw::GCd(*c, zero)),
        GroupLaw::Tk(k) if *k == zero => Reduction::permuted(&[2, 1, 0], GroupLaw::KCd(S::one(), S::one())),
        GroupLaw::Product(..) => {
            let mut blocks = Vec::new();
            flatten(law, &mut blocks)?;
            let mut offset = 0;
            let mut affine = None;
            let mut lines = Vec::new();
            for b in &blocks {
                match b {
                    Block::Additive(n) => {
                        lines.extend(offset..offset + n);
                        offset += n;
                    }
                    Block::Affine(c) => {
                        if affine.is_some() {
                            return Err(Error::domain("product has two affine factors"));
                        }
                        affine = Some((*c, offset));
                        offset += 2;
                    }
                }
            }
            match affine {
                None => Reduction::same(GroupLaw::Additive(offset)),
                Some((c, px)) if offset == 3 => Reduction::permuted(&[px + 1, px, lines[0]], GroupLaw::KCd(c, zero)),
                Some(_) => return Err(Error::domain("unsupported product shape")),
            }
        }
        GroupLaw::FromCocycle(ext) => {
            if ext.shift().is_some() {
                return Err(Error::domain("normalized cocycle has no canonical family"));
            }
            let module = ext.module();
            let acting = module.acting();
            let rows = module.action().exponent_rows();
            let trivial = !module.action().is_nontrivial();
            let hd = acting.dim();
            let md = module.module_dim();
            match ext.tag() {
                None => return Err(Error::domain("untagged cochain cannot be classified")),
                Some(CocycleTag::Heis { c }) if acting.is_additive() && hd == 2 && trivial => {
                    Reduction::same(GroupLaw::Ec(*c))
                }
                Some(CocycleTag::G3 { k })
                    if *acting == GroupLaw::SemidirectRR(S::one()) && rows == vec![vec![zero, S::one()]] =>
                {
                    Reduction::permuted(&[2, 0, 1], GroupLaw::Tk(*k))
                }
                Some(CocycleTag::Zero) if acting.is_additive() => match (hd, md) {
                    (1, 1) => Reduction::permuted(&[1, 0], GroupLaw::SemidirectRR(rows[0][0])),
                    (2, 1) => Reduction::same(GroupLaw::GCd(rows[0][0], rows[0][1])),
                    (1, 2) => Reduction::same(GroupLaw::KCd(rows[0][0], rows[1][0])),
                    _ => return Err(Error::domain("unsupported split extension shape")),
                },
                Some(CocycleTag::Zero) => match acting {
                    GroupLaw::SemidirectRR(ch) if md == 1 && rows[0][0] == zero => {
                        Reduction::permuted(&[1, 0, 2], GroupLaw::KCd(*ch, rows[0][1]))
                    }
                    _ => return Err(Error::domain("unsupported split extension")),
                },
                Some(tag) => return Err(Error::domain(format!("cocycle {tag:?} on this module has no canonical family"))),
            }
        }
        _ => return Ok(None),
    }))
}

/// Group-level rule for a primitive law.
pub(crate) fn group_rule<S: Scalar>(law: &GroupLaw<S>) -> Result<(ClassLabel<S>, CoordinateMap<S>)> {
    let one = S::one();
    let zero = S::zero();
    Ok(match law {
        GroupLaw::Additive(1) => (ClassLabel::R, CoordinateMap::identity(1)),
        GroupLaw::Additive(2) => (ClassLabel::R2Abelian, CoordinateMap::identity(2)),
        GroupLaw::Additive(3) => (ClassLabel::R3, CoordinateMap::identity(3)),
        GroupLaw::SemidirectRR(c) => (ClassLabel::Aff, CoordinateMap::diag(&[one, *c])),
        GroupLaw::Ec(c) => (ClassLabel::Heis, CoordinateMap::diag(&[one, one, one / (S::lit(2.0) * *c)])),
        GroupLaw::GCd(c, d) => {
            let n = if *d != zero { [one, zero, zero] } else { [zero, one, zero] };
            let m = Matrix::from_rows(&[vec![zero, zero, one], vec![*c, *d, zero], n.to_vec()])?;
            (ClassLabel::ProdAff, CoordinateMap::linear(m)?)
        }
        GroupLaw::KCd(c, d) if c.abs() <= d.abs() => (ClassLabel::Sd2(*c / *d), CoordinateMap::diag(&[*d, one, one])),
        GroupLaw::KCd(c, d) => {
            let m = Matrix::from_rows(&[vec![*c, zero, zero], vec![zero, zero, one], vec![zero, one, zero]])?;
            (ClassLabel::Sd2(*d / *c), CoordinateMap::linear(m)?)
        }
        GroupLaw::Tk(k) => (ClassLabel::G3, CoordinateMap::diag(&[one / *k, one, one])),
        other => return Err(Error::domain(format!("no canonical form for {other:?}"))),
    })
}

pub(crate) enum OrderedStep<S: Scalar> {
    Done(ClassLabel<S>, CoordinateMap<S>),
    /// Permute coordinates and continue with the new law.
    Permute(Vec<usize>, GroupLaw<S>),
}

fn canonical_additive_order(n: usize) -> LexOrder {
    if n == 2 {
        LexOrder::reverse(2)
    } else {
        LexOrder::standard(n)
    }
}

fn unsupported<S: Scalar>(law: &GroupLaw<S>, order: &LexOrder) -> Error {
    Error::domain(format!("order {:?} is not bi-invariant for {law:?}", order.significance()))
}

/// Ordered rule for a primitive law.
pub(crate) fn ordered_rule<S: Scalar>(law: &GroupLaw<S>, order: &LexOrder) -> Result<OrderedStep<S>> {
    let one = S::one();
    let zero = S::zero();
    let sig = order.significance();
    let sign = |v: S| v.sign_i8();
    Ok(match law {
        GroupLaw::Additive(n) => {
            let canon = canonical_additive_order(*n);
            let mut perm = vec![0; *n];
            for (r, &c) in canon.significance().iter().enumerate() {
                perm[c] = sig[r];
            }
            let label = [ClassLabel::R, ClassLabel::R2Abelian, ClassLabel::R3][n - 1];
            OrderedStep::Done(label, CoordinateMap::permutation(&perm))
        }
        GroupLaw::SemidirectRR(c) if sig == [1, 0] => {
            let label = if *c > zero { ClassLabel::AffPlus } else { ClassLabel::AffMinus };
            OrderedStep::Done(label, CoordinateMap::diag(&[one, c.abs()]))
        }
        GroupLaw::Ec(c) if sig == [0, 1, 2] => {
            let label = if *c > zero { ClassLabel::EPlus } else { ClassLabel::EMinus };
            OrderedStep::Done(label, CoordinateMap::diag(&[c.abs(), one, one]))
        }
        GroupLaw::Ec(c) if sig == [1, 0, 2] => OrderedStep::Permute(vec![1, 0, 2], GroupLaw::Ec(-*c)),
        GroupLaw::GCd(c, d) if sig == [0, 1, 2] => {
            if *d == zero {
                OrderedStep::Done(ClassLabel::ProdAffOrderYzx(sign(*c)), CoordinateMap::diag(&[c.abs(), one, one]))
            } else {
                let s = if *d > zero { one } else { -one };
                let m = Matrix::from_rows(&[vec![one, zero, zero], vec![s * *c, s * *d, zero], vec![zero, zero, one]])?;
                OrderedStep::Done(ClassLabel::ProdAffOrderZyx(sign(*d)), CoordinateMap::linear(m)?)
            }
        }
        GroupLaw::GCd(c, d) if sig == [1, 0, 2] || sig == [1, 2, 0] => {
            OrderedStep::Permute(vec![1, 0, 2], GroupLaw::GCd(*d, *c))
        }
        GroupLaw::GCd(c, d) if sig == [0, 2, 1] && *d == zero => {
            let m = Matrix::from_rows(&[vec![zero, zero, one], vec![c.abs(), zero, zero], vec![zero, one, zero]])?;
            OrderedStep::Done(ClassLabel::ProdAffOrderYxz(sign(*c)), CoordinateMap::linear(m)?)
        }
        GroupLaw::KCd(c, d) if sig == [0, 1, 2] => {
            let f = *d / c.abs();
            let label = if *c > zero { ClassLabel::KPlus(f) } else { ClassLabel::KMinus(f) };
            OrderedStep::Done(label, CoordinateMap::diag(&[c.abs(), one, one]))
        }
        GroupLaw::KCd(c, d) if sig == [0, 2, 1] => OrderedStep::Permute(vec![0, 2, 1], GroupLaw::KCd(*d, *c)),
        GroupLaw::Tk(k) if sig == [2, 1, 0] => {
            let label = if *k > zero { ClassLabel::TPlus } else { ClassLabel::TMinus };
            OrderedStep::Done(label, CoordinateMap::diag(&[one / k.abs(), one, one]))
        }
        GroupLaw::SemidirectRR(_) | GroupLaw::Ec(_) | GroupLaw::GCd(..) | GroupLaw::KCd(..) | GroupLaw::Tk(_) => {
            return Err(unsupported(law, order))
        }
        other => return Err(Error::domain(format!("no canonical form for {other:?}"))),
    })
}
