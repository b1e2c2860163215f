//! Named batches of identity and dimension checks over finite windows.
//!
//! Every check is exhaustive over the generators it names. A suite takes a
//! weight bound `m`; F22 checks use `m - 2` and Y checks use grade `m`.

use std::fmt;
use std::str::FromStr;

use crate::closed::{decay, diff_x, fusion, is_clean_pos, is_clean_total};
use crate::diagrams::{ClosedMonomial, Complex, Element, Generator, HalfInt, OpenTag};
use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix};
use crate::homology::{self, closed_monomials, Summand, TruncationSpec, Window};
use crate::open::{
    closeoff_plus, diagonal_sum, diff, diff_e, disc_incl, disc_proj, e_homology_dim, glue_both, iota,
    reduce_f02_plus, reduce_pm, reduce_pp, s_n, source_alpha_star, summand_classify, EElement,
    SummandId,
};
use crate::predict::{self, Scope};
use crate::ymodel::{alpha_y, alpha_y_star, diff_y, homotopy_index, level_of, Level, YElement, YMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    D2,
    Commutators,
    Weyl,
    Sources,
    ChainMaps,
    StandardForms,
    Dims,
    Nonvanishing,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::D2,
        Suite::Commutators,
        Suite::Weyl,
        Suite::Sources,
        Suite::ChainMaps,
        Suite::StandardForms,
        Suite::Dims,
        Suite::Nonvanishing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::D2 => "d2",
            Suite::Commutators => "commutators",
            Suite::Weyl => "weyl",
            Suite::Sources => "sources",
            Suite::ChainMaps => "chainmaps",
            Suite::StandardForms => "standardforms",
            Suite::Dims => "dims",
            Suite::Nonvanishing => "nonvanishing",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown suite {s:?}"),
            })
    }
}

/// The outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} {}: {}", self.name, self.detail)
    }
}

/// Collects failures for one check, keeping the first few for the report.
struct Tally {
    name: String,
    total: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            total: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 3 {
                self.examples.push(what());
            }
        }
    }

    fn error(&mut self, e: Error) {
        self.record(false, || format!("error: {e}"));
    }

    fn finish(self) -> Check {
        let detail = if self.failures == 0 {
            format!("{} cases", self.total)
        } else {
            format!(
                "{} of {} cases failed, e.g. {}",
                self.failures,
                self.total,
                self.examples.join("; ")
            )
        };
        Check {
            name: self.name,
            passed: self.failures == 0,
            detail,
        }
    }
}

fn single(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

/// Runs a suite with weight bound `m`.
pub fn run(suite: Suite, m: i64) -> Vec<Check> {
    match suite {
        Suite::D2 => d2(m),
        Suite::Commutators => commutators(m),
        Suite::Weyl => weyl(m),
        Suite::Sources => sources(m),
        Suite::ChainMaps => chain_maps(m),
        Suite::StandardForms => standard_forms(m),
        Suite::Dims => dims(m),
        Suite::Nonvanishing => nonvanishing(m),
        Suite::All => Suite::EACH.into_iter().flat_map(|s| run(s, m)).collect(),
    }
}

fn f22_bound(m: i64) -> i64 {
    (m - 2).max(0)
}

/// Every generator of `complex` with weight at most `m`.
pub fn all_generators(complex: Complex, m: i64) -> Vec<Generator> {
    let windings: Vec<HalfInt> = match complex {
        Complex::F02 => (-m..m + 1).map(|k| HalfInt::from_doubled(2 * k - 1)).collect(),
        _ => (-m..=m).map(HalfInt::from_int).collect(),
    };
    windings
        .into_iter()
        .flat_map(|w| {
            homology::enumerate_basis(&TruncationSpec::new(complex, w, HalfInt::from_int(m)))
                .expect("unfiltered windows are valid")
        })
        .collect()
}

fn complex_bound(c: Complex, m: i64) -> i64 {
    if c == Complex::F22 {
        f22_bound(m)
    } else {
        m
    }
}

fn d2(m: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for c in Complex::ALL {
        let mut t = Tally::new(format!("d2 {c}"));
        for g in all_generators(c, complex_bound(c, m)) {
            let dg = diff(&g.clone().into());
            let ok = diff(&dg).is_zero()
                && dg.terms().all(|s| s.winding() == g.winding() && s.weight() <= g.weight());
            t.record(ok, || g.to_string());
        }
        out.push(t.finish());
    }
    let mut t = Tally::new("d2 y");
    for d in 0..=m.max(0) as u64 {
        for y in YMonomial::of_grade(d) {
            let ok = diff_y(&diff_y(&y.clone().into())).is_zero();
            t.record(ok, || y.to_string());
        }
    }
    out.push(t.finish());
    out
}

fn y_monomials(max_grade: i64) -> Vec<YMonomial> {
    (0..=max_grade.max(0) as u64).flat_map(YMonomial::of_grade).collect()
}

fn decay_indices() -> Vec<(i64, u32)> {
    [-5, -3, -1, 1, 3, 5]
        .into_iter()
        .flat_map(|j| (1..=3).map(move |k| (j, k)))
        .collect()
}

fn all_closed(m: i64) -> Vec<ClosedMonomial> {
    (-m..=m).flat_map(|w| closed_monomials(w, m)).collect()
}

fn commutators(m: i64) -> Vec<Check> {
    let mut y = Tally::new("commutators y");
    for mono in y_monomials(m) {
        let e: YElement = mono.clone().into();
        for i in 1..=5usize {
            for j in (1..=5usize).filter(|&j| j != i) {
                let mut c = alpha_y_star(i, &alpha_y(j, &e));
                c.add_assign(&alpha_y(j, &alpha_y_star(i, &e)));
                y.record(c.is_zero(), || format!("[a*{i}, a{j}] on {mono}"));
            }
            let mut c = alpha_y(i, &alpha_y_star(i, &e));
            c.add_assign(&alpha_y_star(i, &alpha_y(i, &e)));
            let unit = mono.exponent(i - 1) >= 2 || mono.exponent(i) % 2 == 1;
            let want = if unit { e.clone() } else { YElement::zero() };
            y.record(c == want, || format!("[a{i}, a*{i}] on {mono}"));
        }
    }

    let mut x = Tally::new("commutators x");
    let mut sum = Tally::new("decay sum is the differential");
    let ops = decay_indices();
    for mono in all_closed(m) {
        let e = Element::monomial(mono.clone());
        for &(j, k) in &ops {
            for &(j2, k2) in &ops {
                let mut c = fusion(j, k, &decay(j2, k2, &e));
                c.add_assign(&decay(j2, k2, &fusion(j, k, &e)));
                let low = j << (k - 1);
                let unit = (j, k) == (j2, k2)
                    && (mono.exponent(low) >= 2 || mono.exponent(2 * low) % 2 == 1);
                let want = if unit { e.clone() } else { Element::zero(Complex::F00) };
                x.record(c == want, || format!("[({j},{k}), ({j2},{k2})*] on {e}"));
            }
        }
        let mut total = Element::zero(Complex::F00);
        for (k, _) in mono.iter().filter(|(k, _)| k % 2 == 0) {
            let (j, p) = crate::closed::odd_decompose(k).expect("nonzero");
            total.add_assign(&decay(j, p, &e));
        }
        sum.record(total == diff_x(&e), || e.to_string());
    }
    vec![y.finish(), x.finish(), sum.finish()]
}

fn weyl(m: i64) -> Vec<Check> {
    let mut levels = Tally::new("levels are preserved");
    let mut kills = Tally::new("decay kills lower levels");
    let mut homotopy = Tally::new("level homotopy");
    for mono in y_monomials(m) {
        let level = level_of(&mono);
        let e: YElement = mono.clone().into();
        let de = diff_y(&e);
        levels.record(de.terms().all(|t| level_of(t) == level), || mono.to_string());
        if let Level::Finite(i) = level {
            for j in 0..=i {
                kills.record(alpha_y(j, &e).is_zero(), || format!("a{j} on {mono}"));
            }
        }
        if let Some(k) = homotopy_index(level) {
            let mut h = diff_y(&alpha_y_star(k, &e));
            h.add_assign(&alpha_y_star(k, &de));
            homotopy.record(h == e, || mono.to_string());
        }
    }
    let mut hy = Tally::new("H(Y) by grade");
    for d in 0..=m.max(0) as u64 {
        let basis = YMonomial::of_grade(d);
        let cols: Vec<Vec<usize>> = basis
            .iter()
            .map(|b| {
                diff_y(&b.clone().into())
                    .terms()
                    .map(|t| basis.iter().position(|x| x == t).expect("grade is preserved"))
                    .collect()
            })
            .collect();
        let r = gf2::rank(&BitMatrix::from_column_supports(basis.len(), &cols));
        let dim = basis.len() - 2 * r;
        let want = usize::from(d <= 1);
        hy.record(dim == want, || format!("grade {d}: dim {dim}"));
    }
    vec![levels.finish(), kills.finish(), homotopy.finish(), hy.finish()]
}

fn sources(m: i64) -> Vec<Check> {
    let mut t = Tally::new("source homotopy");
    for g in all_generators(Complex::F11, m) {
        let e: Element = g.clone().into();
        for i in [-3, -1, 1, 3] {
            let r = source_alpha_star(i, &diff(&e)).and_then(|a| {
                let mut h = diff(&source_alpha_star(i, &e)?);
                h.add_assign(&a);
                Ok(h)
            });
            match r {
                Ok(h) => t.record(h == e, || format!("i={i} on {g}")),
                Err(err) => t.error(err),
            }
        }
    }
    // Windows of F11 are subcomplexes but not summands, so a window may
    // carry classes near its weight bound. Each must die two steps later.
    let mut scan = Tally::new("F11 window classes die in larger windows");
    for w in -4..=4 {
        let spec = TruncationSpec::new(Complex::F11, HalfInt::from_int(w), HalfInt::from_int(m));
        match homology::homology_with_representatives(&spec) {
            Ok(r) => {
                for rep in r.basis_reps.unwrap_or_default() {
                    let dies = homology::is_boundary(&rep, HalfInt::from_int(m + 2));
                    scan.record(matches!(dies, Ok(Some(_))), || format!("w={w}: {rep}"));
                }
                scan.record(true, String::new);
            }
            Err(err) => scan.error(err),
        }
    }
    vec![t.finish(), scan.finish()]
}

fn chain_maps(m: i64) -> Vec<Check> {
    let b = f22_bound(m);
    let f22 = all_generators(Complex::F22, b);
    let mut sigma = Tally::new("diagonal sums commute with d");
    let mut proj = Tally::new("disc projection commutes with d");
    let mut glue = Tally::new("gluing commutes with d");
    for g in &f22 {
        let e: Element = g.clone().into();
        let de = diff(&e);
        for n in -6..=6 {
            let ok = match (diagonal_sum(n, &de), diagonal_sum(n, &e)) {
                (Ok(l), Ok(r)) => l == diff_x(&r),
                _ => false,
            };
            sigma.record(ok, || format!("n={n} on {g}"));
        }
        let ok = match (disc_proj(&de), disc_proj(&e)) {
            (Ok(l), Ok(r)) => l == diff_e(r),
            _ => false,
        };
        proj.record(ok, || g.to_string());
        if summand_classify(g) == Ok(SummandId::APBM) {
            let ok = match (glue_both(&de), glue_both(&e)) {
                (Ok(l), Ok(r)) => l == diff_x(&r),
                _ => false,
            };
            glue.record(ok, || g.to_string());
        }
    }

    let mut close = Tally::new("closing off commutes with d");
    for g in all_generators(Complex::F02, m) {
        if !matches!(g.tag(), OpenTag::ArcA(h) if h > HalfInt::ZERO) {
            continue;
        }
        let e: Element = g.clone().into();
        let ok = match (closeoff_plus(&diff(&e)), closeoff_plus(&e)) {
            (Ok(l), Ok(r)) => l == diff_x(&r),
            _ => false,
        };
        close.record(ok, || g.to_string());
    }

    let mut inv = Tally::new("iota is an involutive chain map");
    for c in Complex::ALL {
        for g in all_generators(c, complex_bound(c, m)) {
            let e: Element = g.clone().into();
            let ok = iota(&diff(&e)) == diff(&iota(&e)) && iota(&iota(&e)) == e;
            inv.record(ok, || g.to_string());
        }
    }

    let mut disc = Tally::new("disc inclusion");
    for e in EElement::all() {
        let ok = diff(&disc_incl(e)) == disc_incl(diff_e(e)) && disc_proj(&disc_incl(e)) == Ok(e);
        disc.record(ok, || e.to_string());
    }

    let mut bracket = Tally::new("traversing brackets are diagonals");
    for i in -4..=4 {
        for j in -4..=4 {
            let g = Generator::new(OpenTag::Traversing(i, j), ClosedMonomial::one());
            let ins = diff(&g.into()).filter(|t| matches!(t.tag(), OpenTag::Insular(..)));
            bracket.record(ins == s_n(i + j), || format!("c{i} d{j}"));
        }
    }

    let mut rel = Tally::new("x1 s_n relation");
    for n in 1..=8 {
        rel.record(diff(&x1_sn_primitive(n)) == x1_sn_sum(n), || format!("n={n}"));
    }

    let mut facts = Tally::new("traversing boundary facts");
    for i in -3..=3 {
        for j in -3..=3 {
            let lhs = traversing(&[(i, j, &[]), (i + 2, j - 2, &[])]);
            let u = traversing(&[(i, j - 1, &[1]), (i + 1, j - 2, &[1])]);
            facts.record(diff(&u) == lhs, || format!("c{i} d{j}"));
            let n = i + j;
            if n % 2 != 0 {
                let lhs = traversing(&[(0, n, &[]), (n, 0, &[])]);
                facts.record(diff(&traversing(&[(0, 0, &[n])])) == lhs, || format!("x{n}"));
            }
        }
    }

    vec![
        sigma.finish(),
        proj.finish(),
        glue.finish(),
        close.finish(),
        inv.finish(),
        disc.finish(),
        bracket.finish(),
        rel.finish(),
        facts.finish(),
    ]
}

/// `Σ c_i d_j x^e` over the listed triples.
pub fn traversing(terms: &[(i64, i64, &[i64])]) -> Element {
    let mut out = Element::zero(Complex::F22);
    for &(i, j, xs) in terms {
        let m = ClosedMonomial::from_pairs(xs.iter().map(|&k| (k, 1)));
        out.toggle(Generator::new(OpenTag::Traversing(i, j), m));
    }
    out
}

/// `Σ a_{1/2+2m} b_{n+1/2-2m}` over the terms with both subscripts positive.
pub fn x1_sn_primitive(n: i64) -> Element {
    let mut out = Element::zero(Complex::F22);
    for k in (0..).map(|m| 4 * m + 1).take_while(|&k| k <= 2 * n + 1) {
        let a = HalfInt::from_doubled(k);
        let b = HalfInt::from_int(n + 1) - a;
        out.toggle(Generator::new(OpenTag::Insular(a, b), ClosedMonomial::one()));
    }
    out
}

/// `x_1 s_n + x_3 s_{n-2} + x_5 s_{n-4} + …` while the diagonal index is
/// positive.
pub fn x1_sn_sum(n: i64) -> Element {
    let mut out = Element::zero(Complex::F22);
    for t in (0..).take_while(|t| n - 2 * t > 0) {
        out.add_assign(&s_n(n - 2 * t).mul_var(2 * t + 1, 1));
    }
    out
}

/// Planted standard forms: each standard cycle plus the boundary of a
/// basis generator, then the sum of all standard cycles at once.
fn standard_forms(m: i64) -> Vec<Check> {
    let b = f22_bound(m);
    let hb = HalfInt::from_int(b);

    let mut f02 = Tally::new("reduce A+ (x) X");
    for w in -2..=2 {
        let spec = TruncationSpec::new(Complex::F02, HalfInt::HALF + w, hb).with_summand(Summand::APlus);
        let qs: Vec<_> = closed_monomials(w, b - 1).into_iter().filter(is_clean_pos).collect();
        let standard = |q: &ClosedMonomial| -> Element { Generator::new(OpenTag::ArcA(HalfInt::HALF), q.clone()).into() };
        plant(&mut f02, &spec, &qs, standard, |f| reduce_f02_plus(f, hb).map(|(p, _)| p), monomial_sum);
    }

    let mut pm = Tally::new("reduce A+ (x) X (x) B-");
    for w in -2..=2 {
        let spec = TruncationSpec::new(Complex::F22, HalfInt::from_int(w), hb)
            .with_summand(Summand::F22(SummandId::APBM));
        let ps: Vec<_> = closed_monomials(w, b - 1).into_iter().filter(is_clean_total).collect();
        let tag = OpenTag::Insular(HalfInt::HALF, -HalfInt::HALF);
        let standard = |p: &ClosedMonomial| -> Element { Generator::new(tag, p.clone()).into() };
        plant(&mut pm, &spec, &ps, standard, |f| reduce_pm(f, hb).map(|(p, _)| p), monomial_sum);
    }

    let mut pp = Tally::new("reduce A+ (x) X (x) B+");
    let cap = hb - HalfInt::HALF;
    for w in 1..=b.min(5) {
        let spec = TruncationSpec::new(Complex::F22, HalfInt::from_int(w), hb)
            .with_summand(Summand::F22(SummandId::APBP))
            .with_max_a_degree(cap);
        let mut labels = Vec::new();
        for i in 1..=b {
            for q in closed_monomials(w - i, b - i).into_iter().filter(is_clean_pos) {
                labels.push((i, q));
            }
        }
        let standard = |(i, q): &(i64, ClosedMonomial)| s_n(*i).mul_closed(q);
        let reduce = |f: &Element| reduce_pp(f, cap, hb);
        let normalize = |labels: &[&(i64, ClosedMonomial)]| {
            let mut map = std::collections::BTreeMap::<i64, Element>::new();
            for (i, q) in labels {
                map.entry(*i)
                    .or_insert_with(|| Element::zero(Complex::F00))
                    .toggle(Generator::closed(q.clone()));
            }
            map.retain(|_, e| !e.is_zero());
            map
        };
        plant(&mut pp, &spec, &labels, standard, |f| reduce(f).map(|(q, _)| q), normalize);
    }
    vec![f02.finish(), pm.finish(), pp.finish()]
}

fn monomial_sum(qs: &[&ClosedMonomial]) -> Element {
    let mut out = Element::zero(Complex::F00);
    for q in qs {
        out.toggle(Generator::closed((*q).clone()));
    }
    out
}

fn plant<L, R: PartialEq + fmt::Debug>(
    t: &mut Tally,
    spec: &TruncationSpec,
    labels: &[L],
    standard: impl Fn(&L) -> Element,
    reduce: impl Fn(&Element) -> Result<R>,
    expected: impl Fn(&[&L]) -> R,
) {
    let basis = match homology::enumerate_basis(spec) {
        Ok(b) => b,
        Err(e) => return t.error(e),
    };
    let mut cases: Vec<Vec<&L>> = labels.iter().map(|l| vec![l]).collect();
    cases.push(labels.iter().collect());
    for (n, chosen) in cases.into_iter().enumerate() {
        let mut f = Element::zero(spec.complex);
        for l in &chosen {
            f.add_assign(&standard(l));
        }
        if let Some(g) = basis.get((n * 7) % basis.len().max(1)) {
            f.add_assign(&diff(&g.clone().into()));
        }
        match reduce(&f) {
            Ok(got) => {
                let want = expected(&chosen);
                t.record(got == want, || format!("{f}: got {got:?}, want {want:?}"));
            }
            Err(e) => t.error(e),
        }
    }
}

/// Windows compared with their predicted dimensions, together with the
/// `d² = 0` check on each boundary matrix.
fn dims(m: i64) -> Vec<Check> {
    let b = f22_bound(m);
    let mut specs = Vec::new();
    for w in -m.min(8)..=m.min(8) {
        specs.push(TruncationSpec::new(Complex::F00, HalfInt::from_int(w), HalfInt::from_int(m)));
    }
    for w in (-9..=9).step_by(2).map(HalfInt::from_doubled) {
        for s in [Summand::APlus, Summand::AMinus] {
            specs.push(TruncationSpec::new(Complex::F02, w, HalfInt::from_int(m)).with_summand(s));
        }
    }
    for w in -6..=6 {
        for id in [SummandId::APBP, SummandId::APBM, SummandId::AMBP, SummandId::AMBM] {
            specs.push(
                TruncationSpec::new(Complex::F22, HalfInt::from_int(w), HalfInt::from_int(b)).with_summand(Summand::F22(id)),
            );
        }
        for cap in [1, 3, 5] {
            specs.push(
                TruncationSpec::new(Complex::F22, HalfInt::from_int(w), HalfInt::from_int(b))
                    .with_summand(Summand::F22(SummandId::APBP))
                    .with_max_a_degree(HalfInt::from_doubled(cap)),
            );
        }
    }

    let mut agree = Tally::new("window dimensions match predictions");
    let mut square = Tally::new("boundary matrices square to zero");
    let mut slices = Tally::new("windows split into weight slices");
    for spec in &specs {
        let result = Window::new(spec).and_then(|w| {
            let d = w.boundary_matrix()?;
            Ok((w.len(), d))
        });
        let (n, d) = match result {
            Ok(x) => x,
            Err(e) => {
                agree.error(e);
                continue;
            }
        };
        square.record(d.mul(&d).map(|p| p.is_zero()).unwrap_or(false), || spec.to_string());
        let dim = n - 2 * gf2::rank(&d);
        match predict::prediction(spec) {
            Some(p) if p.scope == Scope::Window => {
                agree.record(dim == p.dim, || format!("{spec}: computed {dim}, predicted {}", p.dim))
            }
            _ => agree.record(false, || format!("{spec}: no prediction")),
        }
        if spec.max_a_degree.is_none() {
            let steps = spec.max_weight.doubled();
            let total: Result<usize> = (0..=steps)
                .map(|k| homology::slice_homology_dim(spec, HalfInt::from_doubled(k)))
                .sum();
            slices.record(total == Ok(dim), || format!("{spec}: {total:?} vs {dim}"));
        }
    }
    vec![agree.finish(), square.finish(), slices.finish()]
}

/// The cycle `c_0 d_0 x_3 + (c_2 d_0 + c_1 d_1 + c_0 d_2) x_1 + a_{3/2} b_{3/2}`.
pub fn detected_cycle() -> Element {
    let mut e = traversing(&[(0, 0, &[3]), (2, 0, &[1]), (1, 1, &[1]), (0, 2, &[1])]);
    let h = HalfInt::from_doubled(3);
    e.toggle(Generator::new(OpenTag::Insular(h, h), ClosedMonomial::one()));
    e
}

fn nonvanishing(m: i64) -> Vec<Check> {
    let hm = HalfInt::from_int(m);
    let mut out = vec![single("H(E) has dimension 4", e_homology_dim() == 4, format!("dim {}", e_homology_dim()))];

    let mut diag = Tally::new("c_n d_-n survive");
    for n in -3..=3 {
        let e = traversing(&[(n, -n, &[])]);
        let proj = disc_proj(&e);
        diag.record(homology::is_cycle(&e), || format!("c{n} d{} is not a cycle", -n));
        diag.record(proj.as_ref().is_ok_and(|p| p.is_nonzero_in_homology()), || {
            format!("disc projection of c{n} d{} is {proj:?}", -n)
        });
        let sigma = diagonal_sum(0, &e);
        let ok = sigma.as_ref().is_ok_and(|s| *s == Element::one())
            && homology::is_boundary(&Element::one(), hm) == Ok(None);
        diag.record(ok, || format!("diagonal sum of c{n} d{}", -n));
    }
    out.push(diag.finish());

    let e = traversing(&[(1, 0, &[-1])]);
    let mut want = traversing(&[(0, 0, &[]), (1, -1, &[])]);
    let half = HalfInt::HALF;
    want.toggle(Generator::new(OpenTag::Insular(half, half), ClosedMonomial::var(-1)));
    out.push(single("d(c1 d0 x-1)", diff(&e) == want, format!("{}", diff(&e))));

    let e = detected_cycle();
    let mut t = Tally::new("diagonal sums detect a cycle invisible to the disc");
    t.record(homology::is_cycle(&e), || format!("{e} is not a cycle"));
    t.record(disc_proj(&e) == Ok(EElement::ZERO), || "disc projection is nonzero".into());
    for (n, x) in [(0, 3), (2, 1)] {
        let s = diagonal_sum(n, &e);
        let want = Element::monomial(ClosedMonomial::var(x));
        t.record(s.as_ref() == Ok(&want), || format!("sigma_{n} = {s:?}"));
        t.record(homology::is_boundary(&want, hm) == Ok(None), || format!("x{x} bounds"));
    }
    out.push(t.finish());
    out
}
