use serde::Serialize;

use super::GroupLaw;
use crate::report::Residual;
use crate::sampling::SampleConfig;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// Sampled check of associativity, identity and inverse laws.
///
/// Samples whose intermediate values overflow are counted in `overflowed`
/// and left out of the residuals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub samples: usize,
    pub associativity: Residual,
    pub identity: Residual,
    pub inverse: Residual,
    pub overflowed: usize,
    pub pass: bool,
}

pub fn check_group_axioms<S: Scalar>(law: &GroupLaw<S>, cfg: &SampleConfig, tol: &Tolerance<S>) -> AxiomReport {
    let dim = law.dim();
    let e = law.identity();
    let mut sampler = cfg.sampler();
    let mut assoc = Residual::default();
    let mut ident = Residual::default();
    let mut inv = Residual::default();
    let mut overflowed = 0;
    for _ in 0..cfg.count {
        let a = sampler.element::<S>(dim);
        let b = sampler.element::<S>(dim);
        let c = sampler.element::<S>(dim);
        let ab_c = law.mul_raw(law.mul_raw(a.coords(), b.coords()).coords(), c.coords());
        let a_bc = law.mul_raw(a.coords(), law.mul_raw(b.coords(), c.coords()).coords());
        let ae = law.mul_raw(a.coords(), e.coords());
        let ea = law.mul_raw(e.coords(), a.coords());
        let ainv = law.inv_raw(a.coords());
        let right = law.mul_raw(a.coords(), ainv.coords());
        let left = law.mul_raw(ainv.coords(), a.coords());
        if ![&ab_c, &a_bc, &ainv, &right, &left].iter().all(|x| x.is_finite()) {
            overflowed += 1;
            continue;
        }
        assoc.record(ab_c.coords(), a_bc.coords(), tol, &[&a, &b, &c]);
        ident.record(ae.coords(), a.coords(), tol, &[&a]);
        ident.record(ea.coords(), a.coords(), tol, &[&a]);
        inv.record(right.coords(), e.coords(), tol, &[&a]);
        inv.record(left.coords(), e.coords(), tol, &[&a]);
    }
    let pass = assoc.passes() && ident.passes() && inv.passes() && assoc.count > 0;
    AxiomReport { samples: cfg.count, associativity: assoc, identity: ident, inverse: inv, overflowed, pass }
}
