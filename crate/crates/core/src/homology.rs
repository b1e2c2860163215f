//! Homology of finite windows of fixed winding and bounded weight.
//!
//! The differential preserves winding and never increases weight, so every
//! window spans a subcomplex. On F00, F02 and the insular part of F22 it
//! preserves weight exactly, so windows are direct summands and windowed
//! homology is the homology of the full complex in that range. On F11 and
//! the traversing part of F22 windows are only subcomplexes; their homology
//! is reported per window and compared with limiting values separately.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::diagrams::{ClosedMonomial, Complex, Element, Generator, HalfInt, OpenTag};
use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVector};
use crate::open::{diff_generator, SummandId};
use crate::predict::{self, Prediction};

/// A filter selecting a direct summand (or, for `cd`, a quotient) of a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    /// F02 diagrams whose arc has a positive subscript.
    APlus,
    /// F02 diagrams whose arc has a negative subscript.
    AMinus,
    /// One of the summands of F22. `CD` is the quotient of F22 by its
    /// insular subcomplex: traversing generators, with the insular terms of
    /// their differential dropped.
    F22(SummandId),
}

impl Summand {
    pub fn name(self) -> &'static str {
        match self {
            Summand::APlus => "a+",
            Summand::AMinus => "a-",
            Summand::F22(id) => id.name(),
        }
    }

    fn complex(self) -> Complex {
        match self {
            Summand::APlus | Summand::AMinus => Complex::F02,
            Summand::F22(_) => Complex::F22,
        }
    }

    /// True when every arc `a_h` in the summand has `h > 0`, so an a-degree
    /// cap selects a subcomplex.
    fn is_a_plus(self) -> bool {
        matches!(
            self,
            Summand::APlus | Summand::F22(SummandId::APBP) | Summand::F22(SummandId::APBM)
        )
    }

    fn admits(self, tag: OpenTag) -> bool {
        let pos = |h: HalfInt| h > HalfInt::ZERO;
        match (self, tag) {
            (Summand::APlus, OpenTag::ArcA(h)) => pos(h),
            (Summand::AMinus, OpenTag::ArcA(h)) => !pos(h),
            (Summand::F22(SummandId::CD), OpenTag::Traversing(..)) => true,
            (Summand::F22(id), OpenTag::Insular(i, j)) => {
                let got = match (pos(i), pos(j)) {
                    (true, true) => SummandId::APBP,
                    (true, false) => SummandId::APBM,
                    (false, true) => SummandId::AMBP,
                    (false, false) => SummandId::AMBM,
                };
                got == id
            }
            _ => false,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Summand {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        if s == "a+" {
            return Ok(Summand::APlus);
        }
        if s == "a-" {
            return Ok(Summand::AMinus);
        }
        SummandId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .map(Summand::F22)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown summand {s:?} (expected a+, a-, a+b+, a+b-, a-b+, a-b- or cd)"),
            })
    }
}

/// A finite window of one complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruncationSpec {
    pub complex: Complex,
    pub winding: HalfInt,
    pub max_weight: HalfInt,
    pub summand: Option<Summand>,
    /// Keep only arcs `a_h` with `h` at most this value.
    pub max_a_degree: Option<HalfInt>,
}

impl TruncationSpec {
    pub fn new(complex: Complex, winding: HalfInt, max_weight: HalfInt) -> Self {
        Self {
            complex,
            winding,
            max_weight,
            summand: None,
            max_a_degree: None,
        }
    }

    pub fn with_summand(mut self, summand: Summand) -> Self {
        self.summand = Some(summand);
        self
    }

    pub fn with_max_a_degree(mut self, cap: HalfInt) -> Self {
        self.max_a_degree = Some(cap);
        self
    }

    pub fn with_max_weight(mut self, max_weight: HalfInt) -> Self {
        self.max_weight = max_weight;
        self
    }

    /// Rejects filter combinations that do not select a subcomplex.
    pub fn validate(&self) -> Result<()> {
        if let Some(s) = self.summand {
            if s.complex() != self.complex {
                return Err(Error::InvalidSpec(format!(
                    "summand {s} does not belong to {}",
                    self.complex
                )));
            }
        }
        if let Some(cap) = self.max_a_degree {
            if !self.summand.is_some_and(Summand::is_a_plus) {
                return Err(Error::InvalidSpec(
                    "an a-degree cap needs one of the summands a+, a+b+ or a+b-".into(),
                ));
            }
            if cap <= HalfInt::ZERO {
                return Err(Error::InvalidSpec(format!("a-degree cap {cap} must be positive")));
            }
        }
        Ok(())
    }

    fn admits_tag(&self, tag: OpenTag) -> bool {
        if let Some(s) = self.summand {
            if !s.admits(tag) {
                return false;
            }
        }
        match (self.max_a_degree, tag) {
            (Some(cap), OpenTag::ArcA(h) | OpenTag::Insular(h, _)) => h <= cap,
            _ => true,
        }
    }

    fn is_quotient(&self) -> bool {
        self.summand == Some(Summand::F22(SummandId::CD))
    }
}

impl fmt::Display for TruncationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} w={} M<={}", self.complex, self.winding, self.max_weight)?;
        if let Some(s) = self.summand {
            write!(f, " {s}")?;
        }
        if let Some(cap) = self.max_a_degree {
            write!(f, " a<={cap}")?;
        }
        Ok(())
    }
}

/// All closed monomials of the given winding and weight at most `max_weight`.
pub fn closed_monomials(winding: i64, max_weight: i64) -> Vec<ClosedMonomial> {
    fn rec(
        subs: &[i64],
        rem: i64,
        need: i64,
        cur: &mut Vec<(i64, u32)>,
        out: &mut Vec<ClosedMonomial>,
    ) {
        if need.abs() > rem {
            return;
        }
        match subs.split_first() {
            Some((&k, rest)) if k.abs() <= rem => {
                for e in 0..=(rem / k.abs()) {
                    if e > 0 {
                        cur.push((k, e as u32));
                    }
                    rec(rest, rem - e * k.abs(), need - e * k, cur, out);
                    if e > 0 {
                        cur.pop();
                    }
                }
            }
            _ => {
                if need == 0 {
                    out.push(ClosedMonomial::from_pairs(cur.iter().copied()));
                }
            }
        }
    }
    if max_weight < 0 {
        return Vec::new();
    }
    let subs: Vec<i64> = (1..=max_weight).flat_map(|k| [k, -k]).collect();
    let mut out = Vec::new();
    rec(&subs, max_weight, winding, &mut Vec::new(), &mut out);
    out
}

fn open_tags(spec: &TruncationSpec) -> Vec<OpenTag> {
    let m = spec.max_weight.floor();
    let halves = |bound: HalfInt| -> Vec<HalfInt> {
        let d = bound.doubled();
        (-d..=d).filter(|v| v % 2 != 0).map(HalfInt::from_doubled).collect()
    };
    let tags: Vec<OpenTag> = match spec.complex {
        Complex::F00 => vec![OpenTag::Empty],
        Complex::F11 => (-m..=m).map(OpenTag::ArcC).collect(),
        Complex::F02 => halves(spec.max_weight).into_iter().map(OpenTag::ArcA).collect(),
        Complex::F22 => {
            let mut tags = Vec::new();
            for i in halves(spec.max_weight) {
                for j in halves(spec.max_weight - i.abs()) {
                    tags.push(OpenTag::Insular(i, j));
                }
            }
            for c in -m..=m {
                let r = m - c.abs();
                for d in -r..=r {
                    tags.push(OpenTag::Traversing(c, d));
                }
            }
            tags
        }
    };
    tags.into_iter()
        .filter(|&t| t.weight() <= spec.max_weight && spec.admits_tag(t))
        .collect()
}

/// Sort key of window bases: weight, then number of closed curves, then the
/// canonical generator order.
pub fn basis_key(g: &Generator) -> (HalfInt, u32, &Generator) {
    (g.weight(), g.monomial().degree(), g)
}

/// The generators of a window, sorted by [`basis_key`].
pub fn enumerate_basis(spec: &TruncationSpec) -> Result<Vec<Generator>> {
    spec.validate()?;
    let mut out = Vec::new();
    for tag in open_tags(spec) {
        let Some(w) = (spec.winding - tag.winding()).to_int() else {
            continue;
        };
        let budget = (spec.max_weight - tag.weight()).floor();
        for m in closed_monomials(w, budget) {
            out.push(Generator::new(tag, m));
        }
    }
    out.sort_by(|a, b| basis_key(a).cmp(&basis_key(b)));
    Ok(out)
}

/// The differential as seen inside a window: for the `cd` quotient the
/// insular terms are dropped.
pub fn window_diff(spec: &TruncationSpec, g: &Generator) -> Element {
    let d = diff_generator(g);
    if spec.is_quotient() {
        d.filter(|t| matches!(t.tag(), OpenTag::Traversing(..)))
    } else {
        d
    }
}

/// An enumerated window with coordinate maps.
pub struct Window {
    spec: TruncationSpec,
    basis: Vec<Generator>,
    index: HashMap<Generator, usize>,
}

impl Window {
    pub fn new(spec: &TruncationSpec) -> Result<Self> {
        let basis = enumerate_basis(spec)?;
        Ok(Self::from_basis(*spec, basis))
    }

    fn from_basis(spec: TruncationSpec, basis: Vec<Generator>) -> Self {
        let index = basis.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        Self { spec, basis, index }
    }

    pub fn spec(&self) -> &TruncationSpec {
        &self.spec
    }

    pub fn basis(&self) -> &[Generator] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `e`, or `None` if some term lies outside the window.
    pub fn coords(&self, e: &Element) -> Option<BitVector> {
        let idx: Option<Vec<usize>> = e.terms().map(|g| self.index.get(g).copied()).collect();
        Some(BitVector::from_support(self.len(), idx?))
    }

    pub fn element(&self, v: &BitVector) -> Element {
        let mut out = Element::zero(self.spec.complex);
        for i in v.ones() {
            out.toggle(self.basis[i].clone());
        }
        out
    }

    fn column_supports(&self) -> Result<Vec<Vec<usize>>> {
        self.basis
            .iter()
            .map(|g| {
                let d = window_diff(&self.spec, g);
                d.terms()
                    .map(|t| {
                        self.index.get(t).copied().ok_or_else(|| {
                            Error::Internal(format!(
                                "differential of {g} leaves the window {} via {t}",
                                self.spec
                            ))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Matrix of the differential; column `c` is the image of `basis[c]`.
    pub fn boundary_matrix(&self) -> Result<BitMatrix> {
        Ok(BitMatrix::from_column_supports(self.len(), &self.column_supports()?))
    }
}

pub fn boundary_matrix(spec: &TruncationSpec) -> Result<BitMatrix> {
    Window::new(spec)?.boundary_matrix()
}

/// Dimensions of one window's homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub spec: TruncationSpec,
    pub dim_space: usize,
    pub dim_kernel: usize,
    pub dim_image: usize,
    pub dim_homology: usize,
    pub predicted: Option<Prediction>,
    /// Cycles whose classes form a basis of the window's homology.
    pub basis_reps: Option<Vec<Element>>,
}

impl HomologyReport {
    pub fn predicted_dim(&self) -> Option<usize> {
        self.predicted.map(|p| p.dim)
    }

    /// True when a prediction exists and is meant to hold in this window.
    pub fn matches_window_prediction(&self) -> Option<bool> {
        self.predicted
            .filter(|p| p.scope == predict::Scope::Window)
            .map(|p| p.dim == self.dim_homology)
    }
}

fn report(window: &Window, d: &BitMatrix, reps: Option<Vec<Element>>) -> HomologyReport {
    let n = window.len();
    let r = gf2::rank(d);
    HomologyReport {
        spec: window.spec,
        dim_space: n,
        dim_kernel: n - r,
        dim_image: r,
        dim_homology: n - 2 * r,
        predicted: predict::prediction(&window.spec),
        basis_reps: reps,
    }
}

pub fn homology_dim(spec: &TruncationSpec) -> Result<HomologyReport> {
    let w = Window::new(spec)?;
    let d = w.boundary_matrix()?;
    Ok(report(&w, &d, None))
}

/// Like [`homology_dim`], also choosing cycles that represent a basis of
/// homology: kernel vectors independent of the image, taken greedily.
pub fn homology_with_representatives(spec: &TruncationSpec) -> Result<HomologyReport> {
    let w = Window::new(spec)?;
    let d = w.boundary_matrix()?;
    let kernel = gf2::kernel_basis(&d);
    let image_cols = d.cols();
    let mut columns: Vec<Vec<usize>> = (0..image_cols).map(|c| d.column(c).ones().collect()).collect();
    columns.extend(kernel.iter().map(|v| v.ones().collect()));
    let stacked = BitMatrix::from_column_supports(w.len(), &columns);
    let reps = gf2::pivot_columns(&stacked)
        .into_iter()
        .filter(|&c| c >= image_cols)
        .map(|c| w.element(&kernel[c - image_cols]))
        .collect();
    Ok(report(&w, &d, Some(reps)))
}

/// Homology of the exact-weight slice of a window. Errors when the
/// differential does not preserve weight on it.
pub fn slice_homology_dim(spec: &TruncationSpec, weight: HalfInt) -> Result<usize> {
    let basis = enumerate_basis(spec)?
        .into_iter()
        .filter(|g| g.weight() == weight)
        .collect();
    let w = Window::from_basis(*spec, basis);
    let d = w.boundary_matrix()?;
    Ok(w.len() - 2 * gf2::rank(&d))
}

pub fn is_cycle(e: &Element) -> bool {
    crate::open::diff(e).is_zero()
}

/// Searches for `u` with `∂u = e` among diagrams of weight at most
/// `max_weight`. `None` means no witness exists in that window; it says
/// nothing about heavier witnesses.
pub fn is_boundary(e: &Element, max_weight: HalfInt) -> Result<Option<Element>> {
    let Some(w) = e.homogeneous_winding()? else {
        return Ok(Some(Element::zero(e.complex())));
    };
    let window = Window::new(&TruncationSpec::new(e.complex(), w, max_weight))?;
    let Some(target) = window.coords(e) else {
        return Ok(None);
    };
    let d = window.boundary_matrix()?;
    Ok(gf2::solve(&d, &target)?.map(|u| window.element(&u)))
}

/// Splits an element by winding.
pub fn split_by_winding(e: &Element) -> BTreeMap<HalfInt, Element> {
    let mut out: BTreeMap<HalfInt, Element> = BTreeMap::new();
    for g in e.terms() {
        out.entry(g.winding())
            .or_insert_with(|| Element::zero(e.complex()))
            .toggle(g.clone());
    }
    out
}

/// Solves `target = Σ standard[i] + ∂g` inside the window spanned by
/// `basis`. Returns the indices of the standard elements used and `g`, or
/// `None` if `target` is not of that form.
pub(crate) fn split_standard(
    spec: &TruncationSpec,
    basis: &[Generator],
    standard: &[Element],
    target: &Element,
) -> Result<Option<(Vec<usize>, Element)>> {
    let window = Window::from_basis(*spec, basis.to_vec());
    let Some(t) = window.coords(target) else {
        return Ok(None);
    };
    let mut columns = Vec::with_capacity(standard.len() + window.len());
    for s in standard {
        let v = window
            .coords(s)
            .ok_or_else(|| Error::Internal(format!("standard element {s} is outside {}", spec)))?;
        columns.push(v.ones().collect::<Vec<_>>());
    }
    columns.extend(window.column_supports()?);
    let a = BitMatrix::from_column_supports(window.len(), &columns);
    let Some(x) = gf2::solve(&a, &t)? else {
        return Ok(None);
    };
    let chosen: Vec<usize> = x.ones().filter(|&i| i < standard.len()).collect();
    let mut g = Element::zero(spec.complex);
    for i in x.ones().filter(|&i| i >= standard.len()) {
        g.toggle(window.basis[i - standard.len()].clone());
    }
    Ok(Some((chosen, g)))
}

/// One row of a stabilization scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub report: HomologyReport,
    /// True on the longest suffix of the scan whose dimensions all equal the
    /// prediction. Always false when there is no prediction.
    pub stable: bool,
}

/// Computes the window homology for each weight bound in turn.
pub fn stabilization_scan(base: &TruncationSpec, weights: &[HalfInt]) -> Result<Vec<ScanRow>> {
    let reports = weights
        .iter()
        .map(|&m| homology_dim(&base.with_max_weight(m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(mark_stable(reports))
}

/// Flags the longest suffix on which computed and predicted dimensions agree.
pub fn mark_stable(reports: Vec<HomologyReport>) -> Vec<ScanRow> {
    let agrees = |r: &HomologyReport| r.predicted_dim() == Some(r.dim_homology);
    let suffix = reports.iter().rev().take_while(|r| agrees(r)).count();
    let start = reports.len() - suffix;
    reports
        .into_iter()
        .enumerate()
        .map(|(i, report)| ScanRow {
            report,
            stable: i >= start,
        })
        .collect()
}
