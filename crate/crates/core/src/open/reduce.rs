//! Standard forms for cycles of the open-string complexes: each cycle is a
//! unique combination of standard cycles plus a boundary.

use std::collections::BTreeMap;

use crate::closed::{is_clean_pos, is_clean_total};
use crate::diagrams::{Complex, Element, Generator, HalfInt, OpenTag};
use crate::error::{Error, Result};
use crate::homology::{self, closed_monomials, Summand, TruncationSpec};
use crate::open::{diff, s_n, SummandId};

/// Writes `f` as a sum of standard elements plus a boundary, one winding at
/// a time. `standards` lists, for a window, the standard elements inside it
/// together with the label reported for each.
fn reduce_with<K: Clone>(
    f: &Element,
    complex: Complex,
    bound: HalfInt,
    spec_for: impl Fn(HalfInt) -> TruncationSpec,
    standards: impl Fn(&TruncationSpec) -> Vec<(K, Element)>,
) -> Result<(Vec<K>, Element)> {
    if f.complex() != complex {
        return Err(Error::ComplexMismatch {
            expected: complex,
            found: f.complex(),
        });
    }
    if !diff(f).is_zero() {
        return Err(Error::NotACycle);
    }
    if f.max_weight().is_some_and(|w| w > bound) {
        return Err(Error::InvalidSpec(format!("a term of {f} is heavier than {bound}")));
    }
    let mut labels = Vec::new();
    let mut g = Element::zero(complex);
    for (w, part) in homology::split_by_winding(f) {
        let spec = spec_for(w);
        let basis = homology::enumerate_basis(&spec)?;
        if let Some(t) = part.terms().find(|t| {
            basis
                .binary_search_by(|b| homology::basis_key(b).cmp(&homology::basis_key(t)))
                .is_err()
        }) {
            return Err(Error::InvalidSpec(format!("{t} lies outside {spec}")));
        }
        let (keys, elems): (Vec<K>, Vec<Element>) = standards(&spec).into_iter().unzip();
        let (chosen, witness) = homology::split_standard(&spec, &basis, &elems, &part)?
            .ok_or_else(|| Error::Internal(format!("{part} has no standard form in {spec}")))?;
        labels.extend(chosen.into_iter().map(|i| keys[i].clone()));
        g.add_assign(&witness);
    }
    Ok((labels, g))
}

fn sum_f00(parts: impl IntoIterator<Item = Element>) -> Element {
    let mut out = Element::zero(Complex::F00);
    for p in parts {
        out.add_assign(&p);
    }
    out
}

/// Writes a cycle `f` of A+ ⊗ X as `a_{1/2} p + ∂g` with `p` positively
/// clean. `p` is unique.
pub fn reduce_f02_plus(f: &Element, bound: HalfInt) -> Result<(Element, Element)> {
    let (ps, g) = reduce_with(
        f,
        Complex::F02,
        bound,
        |w| TruncationSpec::new(Complex::F02, w, bound).with_summand(Summand::APlus),
        |spec| {
            let Some(w) = (spec.winding - HalfInt::HALF).to_int() else {
                return Vec::new();
            };
            closed_monomials(w, (bound - HalfInt::HALF).floor())
                .into_iter()
                .filter(is_clean_pos)
                .map(|q| {
                    let std = Generator::new(OpenTag::ArcA(HalfInt::HALF), q.clone()).into();
                    (Element::monomial(q), std)
                })
                .collect()
        },
    )?;
    Ok((sum_f00(ps), g))
}

/// Writes a cycle `f` of A+ ⊗ X ⊗ B+ as `Σ s_i q_i + ∂g` with each `q_i`
/// positively clean, working among diagrams with a-subscripts at most
/// `a_bound`. Only nonzero `q_i` are returned.
pub fn reduce_pp(
    f: &Element,
    a_bound: HalfInt,
    bound: HalfInt,
) -> Result<(BTreeMap<i64, Element>, Element)> {
    let (terms, g) = reduce_with(
        f,
        Complex::F22,
        bound,
        |w| {
            TruncationSpec::new(Complex::F22, w, bound)
                .with_summand(Summand::F22(SummandId::APBP))
                .with_max_a_degree(a_bound)
        },
        |spec| {
            let Some(w) = spec.winding.to_int() else {
                return Vec::new();
            };
            let mut out = Vec::new();
            for i in (1..=bound.floor()).filter(|&i| HalfInt::from_int(i) - HalfInt::HALF <= a_bound) {
                for q in closed_monomials(w - i, bound.floor() - i) {
                    if is_clean_pos(&q) {
                        out.push(((i, q.clone()), s_n(i).mul_closed(&q)));
                    }
                }
            }
            out
        },
    )?;
    let mut qs: BTreeMap<i64, Element> = BTreeMap::new();
    for (i, q) in terms {
        qs.entry(i)
            .or_insert_with(|| Element::zero(Complex::F00))
            .toggle(Generator::closed(q));
    }
    Ok((qs, g))
}

/// Writes a cycle `f` of A+ ⊗ X ⊗ B- as `a_{1/2} b_{-1/2} p + ∂g` with `p`
/// totally clean. `p` is unique.
pub fn reduce_pm(f: &Element, bound: HalfInt) -> Result<(Element, Element)> {
    let (ps, g) = reduce_with(
        f,
        Complex::F22,
        bound,
        |w| TruncationSpec::new(Complex::F22, w, bound).with_summand(Summand::F22(SummandId::APBM)),
        |spec| {
            let Some(w) = spec.winding.to_int() else {
                return Vec::new();
            };
            let tag = OpenTag::Insular(HalfInt::HALF, -HalfInt::HALF);
            closed_monomials(w, bound.floor() - 1)
                .into_iter()
                .filter(is_clean_total)
                .map(|p| (Element::monomial(p.clone()), Generator::new(tag, p).into()))
                .collect()
        },
    )?;
    Ok((sum_f00(ps), g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse_element;

    fn hi(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    fn f02(t: &str) -> Element {
        parse_element(t, Complex::F02).unwrap()
    }

    fn f22(t: &str) -> Element {
        parse_element(t, Complex::F22).unwrap()
    }

    fn f00(t: &str) -> Element {
        parse_element(t, Complex::F00).unwrap()
    }

    fn check(f: &Element, standard: &Element, g: &Element) {
        let mut back = standard.clone();
        back.add_assign(&diff(g));
        assert_eq!(&back, f);
    }

    #[test]
    fn f02_examples() {
        let (p, g) = reduce_f02_plus(&f02("a(1/2)*x(3)"), hi(4)).unwrap();
        assert_eq!((p, g), (f00("x(3)"), Element::zero(Complex::F02)));

        let f = f02("a(3/2)*x(1) + a(1/2)*x(2)");
        let (p, g) = reduce_f02_plus(&f, HalfInt::from_doubled(5)).unwrap();
        assert!(p.is_zero());
        check(&f, &Element::zero(Complex::F02), &g);
        assert_eq!(diff(&f02("a(5/2)")), f);

        let f = f02("a(1/2)*x(1)*x(-1)");
        let (p, g) = reduce_f02_plus(&f, HalfInt::from_doubled(5)).unwrap();
        assert!(p.is_zero());
        check(&f, &Element::zero(Complex::F02), &g);
        assert_eq!(diff(&f02("a(3/2)*x(-1)")), f);
    }

    #[test]
    fn pp_examples() {
        let (q, g) = reduce_pp(&s_n(2), HalfInt::from_doubled(7), hi(6)).unwrap();
        assert_eq!(q, BTreeMap::from([(2, f00("1"))]));
        assert!(g.is_zero());

        let f = s_n(3).mul_var(1, 1);
        let mut f = f;
        f.add_assign(&s_n(1).mul_var(3, 1));
        let (q, g) = reduce_pp(&f, HalfInt::from_doubled(9), hi(8)).unwrap();
        assert!(q.is_empty());
        check(&f, &Element::zero(Complex::F22), &g);
        assert_eq!(diff(&f22("a(1/2)*b(7/2) + a(5/2)*b(3/2)")), f);

        let f = s_n(1).mul_var(-1, 1);
        let (q, g) = reduce_pp(&f, HalfInt::from_doubled(5), hi(4)).unwrap();
        assert_eq!(q, BTreeMap::from([(1, f00("x(-1)"))]));
        assert!(g.is_zero());
    }

    #[test]
    fn pm_examples() {
        let (p, g) = reduce_pm(&f22("a(1/2)*b(-1/2)*x(3)"), hi(6)).unwrap();
        assert_eq!((p, g.is_zero()), (f00("x(3)"), true));

        let f = f22("a(1/2)*b(-1/2)*x(1)*x(-1)");
        let (p, g) = reduce_pm(&f, hi(6)).unwrap();
        assert!(p.is_zero());
        check(&f, &Element::zero(Complex::F22), &g);

        let f = diff(&f22("a(3/2)*b(-1/2)*x(-1)"));
        let (p, g) = reduce_pm(&f, hi(4)).unwrap();
        assert!(p.is_zero());
        check(&f, &Element::zero(Complex::F22), &g);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(reduce_f02_plus(&f02("a(5/2)"), hi(4)), Err(Error::NotACycle));
        assert!(matches!(
            reduce_f02_plus(&f02("a(-1/2)"), hi(4)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            reduce_pm(&f22("a(1/2)*b(1/2)"), hi(4)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            reduce_pp(&f02("a(1/2)"), hi(1), hi(4)),
            Err(Error::ComplexMismatch { .. })
        ));
    }
}
