//! Canonical classes with verified coordinate witnesses, separating
//! invariants, the canonical catalog and the one-parameter subgroups of the
//! `KCd(d, 1)` family.

mod catalog;
mod curve;
mod invariants;
mod labels;
mod rules;
mod witness;

pub use catalog::{catalog_distinct, enumerate_canonical};
pub use curve::OneParameterSubgroup;
pub use invariants::{separating_invariant, Direction, Evidence, Invariant, Outcome, Separation};
pub use labels::{CanonicalClass, ClassLabel};
pub use witness::{verify_witness, CoordinateMap, IsoWitness, MapStep, OrderCheck, WitnessFlags, WitnessReport};

use crate::error::{Error, Result};
use crate::group::GroupLaw;
use crate::order::{check_translation_invariance, LexOrder, OrderedGroupSpec};
use crate::sampling::SampleConfig;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

const MAX_STEPS: usize = 8;

/// Result of classification: the class, the witness from the input chart to
/// the canonical chart, and the verification report behind the witness flags.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification<S: Scalar> {
    pub class: CanonicalClass<S>,
    pub witness: IsoWitness<S>,
    pub report: WitnessReport,
}

impl<S: Scalar> Classification<S> {
    pub fn label(&self) -> ClassLabel<S> {
        self.class.label
    }

    pub fn verified(&self) -> bool {
        self.witness.flags.group_verified
            && (self.witness.flags.order_pair.is_none() || self.witness.flags.order_verified)
    }
}

fn verification_config() -> SampleConfig {
    SampleConfig::default()
}

/// Group-level class of `law`, verified on the default sample.
pub fn classify_group<S: Scalar>(law: &GroupLaw<S>) -> Result<Classification<S>> {
    classify_group_with(law, &verification_config(), &Tolerance::default())
}

pub fn classify_group_with<S: Scalar>(
    law: &GroupLaw<S>,
    cfg: &SampleConfig,
    tol: &Tolerance<S>,
) -> Result<Classification<S>> {
    law.validate()?;
    let mut cur = law.clone();
    let mut map = CoordinateMap::identity(law.dim());
    for _ in 0..MAX_STEPS {
        match rules::simplify(&cur)? {
            Some(r) => {
                map = map.then(&r.map);
                cur = r.law;
            }
            None => break,
        }
    }
    let (label, last) = rules::group_rule(&cur)?;
    let class = label.realize();
    let witness = IsoWitness::new(law.clone(), class.law.clone(), map.then(&last), None)?;
    let (witness, report) = witness.verified(cfg, tol);
    Ok(Classification { class, witness, report })
}

/// Ordered class of `(law, order)`, verified on the default sample.
pub fn classify_ordered<S: Scalar>(law: &GroupLaw<S>, order: &LexOrder) -> Result<Classification<S>> {
    classify_ordered_with(law, order, &verification_config(), &Tolerance::default())
}

pub fn classify_ordered_with<S: Scalar>(
    law: &GroupLaw<S>,
    order: &LexOrder,
    cfg: &SampleConfig,
    tol: &Tolerance<S>,
) -> Result<Classification<S>> {
    law.validate()?;
    let spec = OrderedGroupSpec::new(law.clone(), order.clone())?;
    let check = check_translation_invariance(&spec, &cfg.with_count(cfg.count.min(512)));
    if !check.pass {
        let cx = check.left.counterexample.as_ref().or(check.right.counterexample.as_ref());
        let side = if check.left.pass { "right" } else { "left" };
        return Err(Error::domain(format!(
            "order {:?} is not bi-invariant for {law:?}: {side} translation fails at {}",
            order.significance(),
            serde_json::to_string(&cx).unwrap_or_default()
        )));
    }
    let mut cur = law.clone();
    let mut cur_order = order.clone();
    let mut map = CoordinateMap::identity(law.dim());
    for _ in 0..MAX_STEPS {
        if let Some(r) = rules::simplify(&cur)? {
            map = map.then(&r.map);
            if let Some(p) = &r.perm {
                cur_order = cur_order.relabel(p);
            }
            cur = r.law;
            continue;
        }
        match rules::ordered_rule(&cur, &cur_order)? {
            rules::OrderedStep::Done(label, last) => {
                let class = label.realize();
                let pair = Some((order.clone(), class.order.clone()));
                let witness = IsoWitness::new(law.clone(), class.law.clone(), map.then(&last), pair)?;
                let (witness, report) = witness.verified(cfg, tol);
                return Ok(Classification { class, witness, report });
            }
            rules::OrderedStep::Permute(p, next) => {
                map = map.then(&CoordinateMap::permutation(&p));
                cur_order = cur_order.relabel(&p);
                cur = next;
            }
        }
    }
    Err(Error::domain(format!("classification of {law:?} did not terminate")))
}

#[cfg(test)]
mod tests;
