use serde::Serialize;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::heis::{heis_to_sut3_raw, sut3_to_heis_raw};
use crate::group::GroupLaw;
use crate::linalg::Matrix;
use crate::order::{Counterexample, LexOrder};
use crate::report::Residual;
use crate::sampling::SampleConfig;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// One stage of a coordinate map.
#[derive(Debug, Clone, PartialEq)]
pub enum MapStep<S> {
    Linear { matrix: Matrix<S>, inverse: Matrix<S> },
    Sut3ToHeis,
    HeisToSut3,
}

impl<S: Scalar> MapStep<S> {
    fn apply(&self, v: &[S]) -> Element<S> {
        match self {
            MapStep::Linear { matrix, .. } => Element::new(matrix.mul_vec(v)),
            MapStep::Sut3ToHeis => sut3_to_heis_raw(v),
            MapStep::HeisToSut3 => heis_to_sut3_raw(v),
        }
    }

    fn inverse(&self) -> Self {
        match self {
            MapStep::Linear { matrix, inverse } => MapStep::Linear { matrix: inverse.clone(), inverse: matrix.clone() },
            MapStep::Sut3ToHeis => MapStep::HeisToSut3,
            MapStep::HeisToSut3 => MapStep::Sut3ToHeis,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MapStep::Linear { .. } => "linear",
            MapStep::Sut3ToHeis => "sut3_to_heis",
            MapStep::HeisToSut3 => "heis_to_sut3",
        }
    }
}

/// Composite coordinate map: linear steps and the Heisenberg chart change.
///
/// Adjacent linear steps are multiplied together and exact identities dropped,
/// so an empty step list is the identity map.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateMap<S> {
    dim: usize,
    steps: Vec<MapStep<S>>,
}

impl<S: Scalar> CoordinateMap<S> {
    pub fn identity(dim: usize) -> Self {
        Self { dim, steps: Vec::new() }
    }

    pub fn linear(matrix: Matrix<S>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::input("coordinate map must be square"));
        }
        let inverse = matrix.inverse().ok_or_else(|| Error::domain("coordinate map is singular"))?;
        Ok(Self::linear_with_inverse(matrix, inverse))
    }

    /// Linear map with a known exact inverse.
    pub fn linear_with_inverse(matrix: Matrix<S>, inverse: Matrix<S>) -> Self {
        let dim = matrix.rows();
        let mut m = Self::identity(dim);
        m.push(MapStep::Linear { matrix, inverse });
        m
    }

    pub fn diag(entries: &[S]) -> Self {
        let inv: Vec<S> = entries.iter().map(|&d| S::one() / d).collect();
        Self::linear_with_inverse(Matrix::diag(entries), Matrix::diag(&inv))
    }

    /// New coordinate `i` is old coordinate `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let p = Matrix::permutation(perm);
        Self::linear_with_inverse(p.clone(), p.transpose())
    }

    pub fn sut3_to_heis() -> Self {
        Self { dim: 3, steps: vec![MapStep::Sut3ToHeis] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[MapStep<S>] {
        &self.steps
    }

    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }

    fn push(&mut self, step: MapStep<S>) {
        let merged = match (self.steps.last(), &step) {
            (Some(MapStep::Linear { matrix: a, inverse: ai }), MapStep::Linear { matrix: b, inverse: bi }) => {
                Some(MapStep::Linear { matrix: b.mul(a), inverse: ai.mul(bi) })
            }
            (Some(MapStep::Sut3ToHeis), MapStep::HeisToSut3) | (Some(MapStep::HeisToSut3), MapStep::Sut3ToHeis) => {
                self.steps.pop();
                return;
            }
            _ => None,
        };
        let step = match merged {
            Some(m) => {
                self.steps.pop();
                m
            }
            None => step,
        };
        if let MapStep::Linear { matrix, .. } = &step {
            if matrix.is_identity() {
                return;
            }
        }
        self.steps.push(step);
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Self) -> Self {
        let mut out = self.clone();
        for s in &next.steps {
            out.push(s.clone());
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::identity(self.dim);
        for s in self.steps.iter().rev() {
            out.push(s.inverse());
        }
        out
    }

    pub fn apply_raw(&self, v: &[S]) -> Element<S> {
        let mut cur = Element::from_slice(v);
        for s in &self.steps {
            cur = s.apply(cur.coords());
        }
        cur
    }

    pub fn apply(&self, v: &Element<S>) -> Result<Element<S>> {
        v.validate(self.dim)?;
        Ok(self.apply_raw(v.coords()))
    }

    /// Product of the linear stages; the full map when no chart change is present.
    pub fn linear_part(&self) -> Matrix<S> {
        self.steps.iter().fold(Matrix::identity(self.dim), |acc, s| match s {
            MapStep::Linear { matrix, .. } => matrix.mul(&acc),
            _ => acc,
        })
    }

    pub fn is_linear(&self) -> bool {
        self.steps.iter().all(|s| matches!(s, MapStep::Linear { .. }))
    }

    /// Exact invertibility of every linear stage, with the stored inverse checked to `tol`.
    pub fn is_invertible(&self, tol: &Tolerance<S>) -> bool {
        self.steps.iter().all(|s| match s {
            MapStep::Linear { matrix, inverse } => {
                matrix.det() != S::zero()
                    && matrix.mul(inverse).max_abs_diff(&Matrix::identity(self.dim)) <= tol.abs_tol
            }
            _ => true,
        })
    }

    /// Adds `delta` to one entry of the first linear stage.
    pub fn with_linear_entry(&self, row: usize, col: usize, delta: S) -> Result<Self> {
        let mut out = self.clone();
        let step = out
            .steps
            .iter_mut()
            .find(|s| matches!(s, MapStep::Linear { .. }))
            .ok_or_else(|| Error::input("map has no linear stage"))?;
        if let MapStep::Linear { matrix, inverse } = step {
            matrix[(row, col)] = matrix[(row, col)] + delta;
            *inverse = matrix.inverse().ok_or_else(|| Error::domain("perturbed map is singular"))?;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessFlags {
    pub group_verified: bool,
    pub order_verified: bool,
    pub order_pair: Option<(LexOrder, LexOrder)>,
}

/// A coordinate map claimed to be an isomorphism `source -> target`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoWitness<S: Scalar> {
    pub source: GroupLaw<S>,
    pub target: GroupLaw<S>,
    pub map: CoordinateMap<S>,
    pub flags: WitnessFlags,
}

impl<S: Scalar> IsoWitness<S> {
    pub fn new(
        source: GroupLaw<S>,
        target: GroupLaw<S>,
        map: CoordinateMap<S>,
        order_pair: Option<(LexOrder, LexOrder)>,
    ) -> Result<Self> {
        let d = source.dim();
        if target.dim() != d || map.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: target.dim().max(map.dim()) });
        }
        if let Some((a, b)) = &order_pair {
            if a.dim() != d || b.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: a.dim().max(b.dim()) });
            }
        }
        Ok(Self { source, target, map, flags: WitnessFlags { group_verified: false, order_verified: false, order_pair } })
    }

    /// Overall linear part of the map.
    pub fn matrix(&self) -> Matrix<S> {
        self.map.linear_part()
    }

    /// Runs [`verify_witness`] and records the outcome in the flags.
    pub fn verified(mut self, cfg: &SampleConfig, tol: &Tolerance<S>) -> (Self, WitnessReport) {
        let report = verify_witness(&self, cfg, tol);
        self.flags.group_verified = report.group_pass();
        self.flags.order_verified = report.order.as_ref().is_some_and(|o| o.pass) && self.flags.group_verified;
        (self, report)
    }

    /// `self` followed by `next`; flags are reset.
    pub fn compose(&self, next: &IsoWitness<S>) -> Result<Self> {
        if self.target != next.source {
            return Err(Error::input("witness target and source differ"));
        }
        let order_pair = match (&self.flags.order_pair, &next.flags.order_pair) {
            (Some((a, b)), Some((c, d))) if b == c => Some((a.clone(), d.clone())),
            _ => None,
        };
        Self::new(self.source.clone(), next.target.clone(), self.map.then(&next.map), order_pair)
    }

    /// The inverse map `target -> source`; flags are reset.
    pub fn inverse(&self) -> Self {
        Self {
            source: self.target.clone(),
            target: self.source.clone(),
            map: self.map.inverse(),
            flags: WitnessFlags {
                group_verified: false,
                order_verified: false,
                order_pair: self.flags.order_pair.as_ref().map(|(a, b)| (b.clone(), a.clone())),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderCheck {
    pub pass: bool,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub invertible: bool,
    /// `phi(a b)` against `phi(a) phi(b)`.
    pub homomorphism: Residual,
    /// `phi^{-1}(phi(a))` against `a`.
    pub round_trip: Residual,
    pub order: Option<OrderCheck>,
    pub overflowed: usize,
    pub pass: bool,
}

impl WitnessReport {
    pub fn group_pass(&self) -> bool {
        self.invertible && self.homomorphism.passes() && self.round_trip.passes() && self.homomorphism.count > 0
    }
}

/// Sampled homomorphism, round-trip and (when an order pair is attached) monotonicity check.
pub fn verify_witness<S: Scalar>(w: &IsoWitness<S>, cfg: &SampleConfig, tol: &Tolerance<S>) -> WitnessReport {
    let d = w.source.dim();
    let inv = w.map.inverse();
    let mut s = cfg.sampler();
    let mut hom = Residual::default();
    let mut rt = Residual::default();
    let mut overflowed = 0;
    for _ in 0..cfg.count {
        let a = s.element::<S>(d);
        let b = s.element::<S>(d);
        let lhs = w.map.apply_raw(w.source.mul_raw(a.coords(), b.coords()).coords());
        let (fa, fb) = (w.map.apply_raw(a.coords()), w.map.apply_raw(b.coords()));
        let rhs = w.target.mul_raw(fa.coords(), fb.coords());
        let back = inv.apply_raw(fa.coords());
        if !(lhs.is_finite() && rhs.is_finite() && back.is_finite()) {
            overflowed += 1;
            continue;
        }
        hom.record(lhs.coords(), rhs.coords(), tol, &[&a, &b]);
        rt.record(back.coords(), a.coords(), tol, &[&a]);
    }
    let order = w.flags.order_pair.as_ref().map(|(src, dst)| {
        let mut check = OrderCheck { pass: true, checked: 0, counterexample: None };
        for _ in 0..cfg.count {
            let (lo, hi) = src.sample_pair::<S>(&mut s);
            let (flo, fhi) = (w.map.apply_raw(lo.coords()), w.map.apply_raw(hi.coords()));
            check.checked += 1;
            if !dst.compare_raw(flo.coords(), fhi.coords()).is_lt() && check.pass {
                check.pass = false;
                check.counterexample = Some(Counterexample {
                    g: Vec::new(),
                    h: lo.to_f64_vec(),
                    h_prime: hi.to_f64_vec(),
                    image_h: flo.to_f64_vec(),
                    image_h_prime: fhi.to_f64_vec(),
                });
            }
        }
        check
    });
    let invertible = w.map.is_invertible(tol);
    let mut report = WitnessReport { invertible, homomorphism: hom, round_trip: rt, order, overflowed, pass: false };
    report.pass = report.group_pass() && report.order.as_ref().is_none_or(|o| o.pass);
    report
}
