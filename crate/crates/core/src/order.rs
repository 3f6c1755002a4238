//! Lexicographic orders on charts and sampled ordered-group checks.

use std::cmp::Ordering;

use serde::Serialize;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::GroupLaw;
use crate::report::Residual;
use crate::sampling::{SampleConfig, Sampler};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// Lexicographic order given by a significance permutation, most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LexOrder {
    significance: Vec<usize>,
}

impl LexOrder {
    pub fn new(significance: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; significance.len()];
        for &i in &significance {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::input(format!("{significance:?} is not a permutation")));
            }
        }
        if significance.is_empty() {
            return Err(Error::input("empty order"));
        }
        Ok(Self { significance })
    }

    /// Coordinates in chart order, first most significant.
    pub fn standard(dim: usize) -> Self {
        Self { significance: (0..dim).collect() }
    }

    /// Coordinates in reverse chart order, last most significant.
    pub fn reverse(dim: usize) -> Self {
        Self { significance: (0..dim).rev().collect() }
    }

    pub fn significance(&self) -> &[usize] {
        &self.significance
    }

    pub fn dim(&self) -> usize {
        self.significance.len()
    }

    /// Exact lexicographic comparison.
    pub fn compare<S: Scalar>(&self, a: &Element<S>, b: &Element<S>) -> Result<Ordering> {
        if a.dim() != self.dim() || b.dim() != self.dim() {
            let found = if a.dim() != self.dim() { a.dim() } else { b.dim() };
            return Err(Error::DimensionMismatch { expected: self.dim(), found });
        }
        Ok(self.compare_raw(a.coords(), b.coords()))
    }

    pub fn compare_raw<S: Scalar>(&self, a: &[S], b: &[S]) -> Ordering {
        compare_along(&self.significance, a, b)
    }

    /// The same order after renaming coordinates by `perm`, where the new
    /// coordinate `i` is the old coordinate `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut inv = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        Self { significance: self.significance.iter().map(|&s| inv[s]).collect() }
    }

    /// Significance order restricted to `coords`.
    pub fn restricted(&self, coords: &[usize]) -> Vec<usize> {
        self.significance.iter().copied().filter(|s| coords.contains(s)).collect()
    }

    /// The `k` least significant coordinates.
    pub fn bottom(&self, k: usize) -> Vec<usize> {
        self.significance[self.dim() - k..].to_vec()
    }

    /// Random pair `lo < hi` that agrees on a random number of leading coordinates.
    pub fn sample_pair<S: Scalar>(&self, s: &mut Sampler) -> (Element<S>, Element<S>) {
        sample_pair_along(&self.significance, self.dim(), s)
    }
}

pub(crate) fn compare_along<S: Scalar>(significance: &[usize], a: &[S], b: &[S]) -> Ordering {
    for &i in significance {
        match a[i].partial_cmp(&b[i]) {
            Some(Ordering::Equal) => continue,
            Some(o) => return o,
            None => return Ordering::Equal,
        }
    }
    Ordering::Equal
}

/// Draws `lo < hi` supported on the coordinates in `significance` (others zero).
pub(crate) fn sample_pair_along<S: Scalar>(significance: &[usize], dim: usize, s: &mut Sampler) -> (Element<S>, Element<S>) {
    let mut a = Element::<S>::zeros(dim);
    for &i in significance {
        a.coords_mut()[i] = s.coord();
    }
    let level = s.index(significance.len());
    let mut b = a.clone();
    for &i in &significance[level..] {
        b.coords_mut()[i] = s.coord();
    }
    let pivot = significance[level];
    while b[pivot] == a[pivot] {
        b.coords_mut()[pivot] = s.coord();
    }
    if compare_along(significance, a.coords(), b.coords()).is_gt() {
        (b, a)
    } else {
        (a, b)
    }
}

/// A group law together with a lexicographic order on its chart.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedGroupSpec<S: Scalar> {
    pub law: GroupLaw<S>,
    pub order: LexOrder,
}

impl<S: Scalar> OrderedGroupSpec<S> {
    pub fn new(law: GroupLaw<S>, order: LexOrder) -> Result<Self> {
        if law.dim() != order.dim() {
            return Err(Error::DimensionMismatch { expected: law.dim(), found: order.dim() });
        }
        Ok(Self { law, order })
    }
}

/// A sampled violation of `h < h'  =>  g h < g h'` (or the right-hand version).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub g: Vec<f64>,
    pub h: Vec<f64>,
    pub h_prime: Vec<f64>,
    pub image_h: Vec<f64>,
    pub image_h_prime: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SideReport {
    pub pass: bool,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl SideReport {
    fn new() -> Self {
        Self { pass: true, checked: 0, counterexample: None }
    }

    fn observe<S: Scalar>(&mut self, ok: bool, g: &Element<S>, h: &Element<S>, hp: &Element<S>, ih: &Element<S>, ihp: &Element<S>) {
        self.checked += 1;
        if !ok && self.pass {
            self.pass = false;
            self.counterexample = Some(Counterexample {
                g: g.to_f64_vec(),
                h: h.to_f64_vec(),
                h_prime: hp.to_f64_vec(),
                image_h: ih.to_f64_vec(),
                image_h_prime: ihp.to_f64_vec(),
            });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TranslationReport {
    pub left: SideReport,
    pub right: SideReport,
    pub overflowed: usize,
    pub pass: bool,
}

/// Images of `h < h'` under left and right translation by `g`.
#[derive(Debug, Clone, PartialEq)]
pub struct TranslationOutcome<S: Scalar> {
    pub left: (Element<S>, Element<S>),
    pub right: (Element<S>, Element<S>),
}

impl<S: Scalar> TranslationOutcome<S> {
    pub fn left_ordering(&self, order: &LexOrder) -> Ordering {
        order.compare_raw(self.left.0.coords(), self.left.1.coords())
    }

    pub fn right_ordering(&self, order: &LexOrder) -> Ordering {
        order.compare_raw(self.right.0.coords(), self.right.1.coords())
    }
}

pub fn translation_outcome<S: Scalar>(
    spec: &OrderedGroupSpec<S>,
    g: &Element<S>,
    h: &Element<S>,
    h_prime: &Element<S>,
) -> Result<TranslationOutcome<S>> {
    let law = &spec.law;
    Ok(TranslationOutcome {
        left: (law.multiply(g, h)?, law.multiply(g, h_prime)?),
        right: (law.multiply(h, g)?, law.multiply(h_prime, g)?),
    })
}

/// Sampled bi-invariance check; each side is reported separately.
pub fn check_translation_invariance<S: Scalar>(spec: &OrderedGroupSpec<S>, cfg: &SampleConfig) -> TranslationReport {
    let (law, order) = (&spec.law, &spec.order);
    let mut s = cfg.sampler();
    let mut left = SideReport::new();
    let mut right = SideReport::new();
    let mut overflowed = 0;
    for _ in 0..cfg.count {
        let g = s.element::<S>(law.dim());
        let (h, hp) = order.sample_pair::<S>(&mut s);
        let gh = law.mul_raw(g.coords(), h.coords());
        let ghp = law.mul_raw(g.coords(), hp.coords());
        let hg = law.mul_raw(h.coords(), g.coords());
        let hpg = law.mul_raw(hp.coords(), g.coords());
        if ![&gh, &ghp, &hg, &hpg].iter().all(|e| e.is_finite()) {
            overflowed += 1;
            continue;
        }
        left.observe(order.compare_raw(gh.coords(), ghp.coords()).is_lt(), &g, &h, &hp, &gh, &ghp);
        right.observe(order.compare_raw(hg.coords(), hpg.coords()).is_lt(), &g, &h, &hp, &hg, &hpg);
    }
    let pass = left.pass && right.pass && left.checked > 0;
    TranslationReport { left, right, overflowed, pass }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjugationReport {
    pub pass: bool,
    pub checked: usize,
    /// Largest coordinate outside the normal set produced by conjugation.
    pub leakage: Residual,
    pub counterexample: Option<Counterexample>,
}

/// Sampled check that conjugation preserves the order restricted to `normal`.
///
/// Returns an input error when the coordinate subgroup on `normal` is not
/// closed under multiplication.
pub fn check_conjugation_order_preserving<S: Scalar>(
    spec: &OrderedGroupSpec<S>,
    normal: &[usize],
    cfg: &SampleConfig,
    tol: &Tolerance<S>,
) -> Result<ConjugationReport> {
    let (law, order) = (&spec.law, &spec.order);
    let dim = law.dim();
    let mut sorted = normal.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() || sorted.len() != normal.len() || sorted.iter().any(|&i| i >= dim) {
        return Err(Error::input(format!("invalid normal coordinate set {normal:?}")));
    }
    let outside: Vec<usize> = (0..dim).filter(|i| !sorted.contains(i)).collect();
    let sig = order.restricted(&sorted);
    let mut s = cfg.sampler();
    for _ in 0..cfg.count.min(256) {
        let (a, b) = sample_pair_along::<S>(&sig, dim, &mut s);
        for p in [law.mul_raw(a.coords(), b.coords()), law.inv_raw(a.coords())] {
            if p.is_finite() && outside.iter().any(|&i| !tol.is_zero(p[i])) {
                return Err(Error::input(format!("coordinates {normal:?} are not closed under the law")));
            }
        }
    }
    let mut report = SideReport::new();
    let mut leakage = Residual::default();
    for _ in 0..cfg.count {
        let g = s.element::<S>(dim);
        let (n1, n2) = sample_pair_along::<S>(&sig, dim, &mut s);
        let c1 = law.conj_raw(g.coords(), n1.coords());
        let c2 = law.conj_raw(g.coords(), n2.coords());
        if !(c1.is_finite() && c2.is_finite()) {
            continue;
        }
        leakage.record_zero(c1.select(&outside).coords(), tol, &[&g, &n1]);
        leakage.record_zero(c2.select(&outside).coords(), tol, &[&g, &n2]);
        report.observe(compare_along(&sig, c1.coords(), c2.coords()).is_lt(), &g, &n1, &n2, &c1, &c2);
    }
    Ok(ConjugationReport {
        pass: report.pass && leakage.passes() && report.checked > 0,
        checked: report.checked,
        leakage,
        counterexample: report.counterexample,
    })
}
