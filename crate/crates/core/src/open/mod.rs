//! Differentials of the open-string complexes F11, F02 and F22.

mod disc;
mod operators;
mod reduce;

pub use disc::{diff_e, disc_incl, disc_proj, e_homology_dim, EElement, EGen};
pub use operators::{
    closeoff_plus, diagonal_sum, glue_both, iota, source_alpha, source_alpha_star, summand_classify,
    SummandId,
};
pub use reduce::{reduce_f02_plus, reduce_pm, reduce_pp};

use crate::closed::diff_monomial;
use crate::diagrams::{ClosedMonomial, Complex, Element, Generator, HalfInt, OpenTag};

/// Splittings `h = k + l` with `k ∈ ℤ + ½`, `l` a nonzero integer, and `k`, `l`
/// of the same sign as `h`. These index the self-intersection resolutions of
/// the boundary-parallel arc `a_h`.
fn arc_splits(h: HalfInt) -> impl Iterator<Item = (HalfInt, i64)> {
    // |h| = n + ½ gives n splittings.
    let n = h.abs().floor();
    let sign = h.signum();
    (1..=n).map(move |l| (h - sign * l, sign * l))
}

/// The differential of a single generator.
pub fn diff_generator(g: &Generator) -> Element {
    let mut out = Element::zero(g.complex());
    let m = g.monomial();
    for q in diff_monomial(m) {
        out.toggle(g.with_monomial(q));
    }
    match g.tag() {
        OpenTag::Empty => {}
        OpenTag::ArcC(n) => {
            for (i, q) in odd_removals(m) {
                out.toggle(Generator::new(OpenTag::ArcC(n + i), q));
            }
        }
        OpenTag::ArcA(h) => {
            for (k, l) in arc_splits(h) {
                out.toggle(Generator::new(OpenTag::ArcA(k), m.times_var(l, 1)));
            }
        }
        OpenTag::Insular(i, j) => {
            for (k, l) in arc_splits(i) {
                out.toggle(Generator::new(OpenTag::Insular(k, j), m.times_var(l, 1)));
            }
            for (k, l) in arc_splits(j) {
                out.toggle(Generator::new(OpenTag::Insular(i, k), m.times_var(l, 1)));
            }
        }
        OpenTag::Traversing(i, j) => {
            for t in s_n(i + j).terms() {
                out.toggle(t.with_monomial(m.clone()));
            }
            for (k, q) in odd_removals(m) {
                out.toggle(Generator::new(OpenTag::Traversing(i + k, j), q.clone()));
                out.toggle(Generator::new(OpenTag::Traversing(i, j + k), q));
            }
        }
    }
    out
}

/// `(k, x^e / x_k)` for every odd `k` whose exponent is odd: the crossings
/// of an arc with the closed curves that survive mod 2.
fn odd_removals(m: &ClosedMonomial) -> Vec<(i64, ClosedMonomial)> {
    m.iter()
        .filter(|&(k, e)| k % 2 != 0 && e % 2 == 1)
        .map(|(k, _)| (k, m.div_var(k, 1).expect("positive exponent")))
        .collect()
}

/// The differential on any of the four complexes.
pub fn diff(e: &Element) -> Element {
    e.map_linear(e.complex(), diff_generator)
}

/// An arc crossing the annulus: `c_i` from the outer to the inner boundary,
/// or `d_j` the other way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arc {
    C(i64),
    D(i64),
}

/// The Goldman bracket of an arc with the closed curve `x_k`: `k·c_{i+k}`
/// (resp. `k·d_{j+k}`) mod 2, so `None` when `k` is even.
pub fn bracket_open_closed(arc: Arc, k: i64) -> Option<Arc> {
    if k % 2 == 0 {
        return None;
    }
    Some(match arc {
        Arc::C(i) => Arc::C(i + k),
        Arc::D(j) => Arc::D(j + k),
    })
}

/// `s_n = Σ a_k b_l` over `k + l = n` with `k, l` of the sign of `n`.
/// It has `|n|` terms and `s_0 = 0`.
pub fn s_n(n: i64) -> Element {
    let mut out = Element::zero(Complex::F22);
    let sign = n.signum();
    for t in 0..n.abs() {
        let k = HalfInt::from_doubled(sign * (2 * t + 1));
        let l = HalfInt::from_int(n) - k;
        out.toggle(Generator::new(OpenTag::Insular(k, l), ClosedMonomial::one()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse_element;

    fn p(text: &str, c: Complex) -> Element {
        parse_element(text, c).unwrap()
    }

    #[test]
    fn differential_examples() {
        assert_eq!(
            diff(&p("a(5/2)", Complex::F02)),
            p("a(3/2)*x(1) + a(1/2)*x(2)", Complex::F02)
        );
        assert_eq!(
            diff(&p("c(1)*d(0)*x(-1)", Complex::F22)),
            p("c(0)*d(0) + c(1)*d(-1) + a(1/2)*b(1/2)*x(-1)", Complex::F22)
        );
        assert_eq!(diff(&p("c(0)*x(1)", Complex::F11)), p("c(1)", Complex::F11));
        assert!(diff(&p("c(2)*d(-2)", Complex::F22)).is_zero());
        assert!(diff(&p("a(1/2)", Complex::F02)).is_zero());
        assert!(diff(&p("a(-1/2)", Complex::F02)).is_zero());
        assert_eq!(diff(&p("x(4)", Complex::F00)), p("x(2)^2", Complex::F00));
        assert_eq!(
            diff(&p("a(-5/2)", Complex::F02)),
            p("a(-3/2)*x(-1) + a(-1/2)*x(-2)", Complex::F02)
        );
    }

    #[test]
    fn insular_differential_is_leibniz() {
        assert_eq!(
            diff(&p("a(3/2)*b(-3/2)*x(2)", Complex::F22)),
            p(
                "a(1/2)*b(-3/2)*x(1)*x(2) + a(3/2)*b(-1/2)*x(-1)*x(2) + a(3/2)*b(-3/2)*x(1)^2",
                Complex::F22
            )
        );
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket_open_closed(Arc::C(0), 1), Some(Arc::C(1)));
        assert_eq!(bracket_open_closed(Arc::C(0), 2), None);
        assert_eq!(bracket_open_closed(Arc::D(1), -3), Some(Arc::D(-2)));
    }

    #[test]
    fn s_n_examples() {
        assert_eq!(s_n(1), p("a(1/2)*b(1/2)", Complex::F22));
        assert!(s_n(0).is_zero());
        assert_eq!(s_n(-2), p("a(-1/2)*b(-3/2) + a(-3/2)*b(-1/2)", Complex::F22));
        for n in -6..=6i64 {
            assert_eq!(s_n(n).len() as i64, n.abs());
        }
    }
}
