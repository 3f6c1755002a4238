use serde::Serialize;

use crate::element::Element;
use crate::order::OrderedGroupSpec;
use crate::sampling::{SampleConfig, Sampler};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Dimension,
    /// Is the convex subgroup on the two least significant coordinates abelian?
    AbelianConvexPlane,
    /// Sign of the least significant coordinate of `[g, h]` for positive `g`
    /// and `h` positive on the middle coordinate only.
    CommutatorSign,
    /// Whether conjugation by a positive top-layer element moves each lower
    /// layer up, down or not at all.
    ConjugationDirection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Expanding,
    Contracting,
    Fixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Dimension(usize),
    Abelian(bool),
    Sign(i8),
    Directions(Vec<Direction>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence {
    pub invariant: Invariant,
    /// Outcomes on the first sample.
    pub left: Outcome,
    pub right: Outcome,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Separation {
    Separated(Evidence),
    NotSeparated,
}

impl Separation {
    pub fn invariant(&self) -> Option<Invariant> {
        match self {
            Separation::Separated(e) => Some(e.invariant),
            Separation::NotSeparated => None,
        }
    }
}

/// Shared random draws, indexed by significance rank rather than chart position.
struct Draw<S: Scalar> {
    free: [S; 6],
    positive: [S; 3],
}

impl<S: Scalar> Draw<S> {
    fn sample(s: &mut Sampler) -> Self {
        let mut nonzero = || loop {
            let v: S = s.coord();
            if v != S::zero() {
                return v;
            }
        };
        let free = [nonzero(), nonzero(), nonzero(), nonzero(), nonzero(), nonzero()];
        let positive = [s.positive(), s.positive(), s.positive()];
        Self { free, positive }
    }
}

fn place<S: Scalar>(sig: &[usize], values: &[(usize, S)]) -> Element<S> {
    let mut e = Element::zeros(sig.len());
    for &(rank, v) in values {
        e.coords_mut()[sig[rank]] = v;
    }
    e
}

fn outcome<S: Scalar>(inv: Invariant, spec: &OrderedGroupSpec<S>, d: &Draw<S>, tol: &Tolerance<S>) -> Option<Outcome> {
    let law = &spec.law;
    let sig = spec.order.significance();
    let n = sig.len();
    match inv {
        Invariant::Dimension => Some(Outcome::Dimension(n)),
        Invariant::AbelianConvexPlane if n >= 2 => {
            let u = place(sig, &[(n - 2, d.free[0]), (n - 1, d.free[1])]);
            let v = place(sig, &[(n - 2, d.free[2]), (n - 1, d.free[3])]);
            let uv = law.mul_raw(u.coords(), v.coords());
            let vu = law.mul_raw(v.coords(), u.coords());
            Some(Outcome::Abelian(tol.close_slices(uv.coords(), vu.coords())))
        }
        Invariant::CommutatorSign if n == 3 => {
            let g = place(sig, &[(0, d.positive[0]), (1, d.free[0]), (2, d.free[1])]);
            let h = place(sig, &[(1, d.positive[1])]);
            let c = law.comm_raw(g.coords(), h.coords())[sig[2]];
            Some(Outcome::Sign(if tol.is_zero(c) { 0 } else { c.sign_i8() }))
        }
        Invariant::ConjugationDirection if n >= 2 => {
            let g = place(sig, &[(0, d.positive[0])]);
            let dirs = (1..n)
                .map(|j| {
                    let h = place(sig, &[(j, d.positive[j])]);
                    let c = law.conj_raw(g.coords(), h.coords());
                    sig.iter()
                        .find(|&&i| !tol.close(c[i], h[i]))
                        .map_or(Direction::Fixed, |&i| if c[i] > h[i] { Direction::Expanding } else { Direction::Contracting })
                })
                .collect();
            Some(Outcome::Directions(dirs))
        }
        _ => None,
    }
}

/// Tries the invariants in order and returns the first whose outcomes differ
/// between `a` and `b` on every sample.
pub fn separating_invariant<S: Scalar>(
    a: &OrderedGroupSpec<S>,
    b: &OrderedGroupSpec<S>,
    cfg: &SampleConfig,
    tol: &Tolerance<S>,
) -> Separation {
    if a.law.dim() != b.law.dim() {
        return Separation::Separated(Evidence {
            invariant: Invariant::Dimension,
            left: Outcome::Dimension(a.law.dim()),
            right: Outcome::Dimension(b.law.dim()),
            samples: 0,
        });
    }
    let mut s = cfg.sampler();
    let draws: Vec<Draw<S>> = (0..cfg.count).map(|_| Draw::sample(&mut s)).collect();
    for inv in [Invariant::AbelianConvexPlane, Invariant::CommutatorSign, Invariant::ConjugationDirection] {
        let mut first = None;
        let separated = draws.iter().all(|d| match (outcome(inv, a, d, tol), outcome(inv, b, d, tol)) {
            (Some(x), Some(y)) if x != y => {
                first.get_or_insert((x, y));
                true
            }
            _ => false,
        });
        if separated {
            if let Some((left, right)) = first {
                return Separation::Separated(Evidence { invariant: inv, left, right, samples: draws.len() });
            }
        }
    }
    Separation::NotSeparated
}
