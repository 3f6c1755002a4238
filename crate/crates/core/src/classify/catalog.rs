use super::labels::{CanonicalClass, ClassLabel};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Representative parameters listed for the one-parameter `K` families.
pub const K_FAMILY_SAMPLES: [f64; 3] = [1.0, 2.0, -0.5];

/// The canonical ordered classes in dimension `dim`. The `K` families are
/// represented by [`K_FAMILY_SAMPLES`].
pub fn enumerate_canonical<S: Scalar>(dim: usize) -> Result<Vec<CanonicalClass<S>>> {
    let labels: Vec<ClassLabel<S>> = match dim {
        1 => vec![ClassLabel::R],
        2 => vec![ClassLabel::R2Abelian, ClassLabel::AffPlus, ClassLabel::AffMinus],
        3 => {
            let mut v = vec![ClassLabel::R3, ClassLabel::EPlus, ClassLabel::EMinus];
            for s in [1, -1] {
                v.push(ClassLabel::ProdAffOrderZyx(s));
            }
            for s in [1, -1] {
                v.push(ClassLabel::ProdAffOrderYzx(s));
            }
            for s in [1, -1] {
                v.push(ClassLabel::ProdAffOrderYxz(s));
            }
            v.extend(K_FAMILY_SAMPLES.iter().map(|&f| ClassLabel::KPlus(S::lit(f))));
            v.extend(K_FAMILY_SAMPLES.iter().map(|&f| ClassLabel::KMinus(S::lit(f))));
            v.push(ClassLabel::TPlus);
            v.push(ClassLabel::TMinus);
            v
        }
        _ => return Err(Error::input(format!("catalog covers dimensions 1..3, got {dim}"))),
    };
    Ok(labels.iter().map(ClassLabel::realize).collect())
}

/// Whether two canonical labels name different ordered classes.
///
/// Within a `K` family with a fixed sign, distinct parameters are distinct
/// classes even though no sampled invariant tells them apart.
pub fn catalog_distinct<S: Scalar>(a: &ClassLabel<S>, b: &ClassLabel<S>) -> bool {
    a != b
}
