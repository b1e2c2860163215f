//! Operators on the open-string complexes and chain maps into X.

use std::fmt;

use crate::diagrams::{ClosedMonomial, Complex, Element, Generator, HalfInt, OpenTag};
use crate::error::{Error, Result};

fn require(e: &Element, complex: Complex) -> Result<()> {
    if e.complex() != complex {
        return Err(Error::ComplexMismatch {
            expected: complex,
            found: e.complex(),
        });
    }
    Ok(())
}

fn arc_c(g: &Generator) -> i64 {
    match g.tag() {
        OpenTag::ArcC(n) => n,
        other => unreachable!("F11 generator with tag {other:?}"),
    }
}

/// `α_(j,0)(c_n x^e) = e_j c_{n+j} x^e / x_j`. Panics unless `j` is odd.
pub fn source_alpha(j: i64, e: &Element) -> Result<Element> {
    assert!(j % 2 != 0, "source operators are indexed by odd j, got {j}");
    require(e, Complex::F11)?;
    Ok(e.map_terms(|g| {
        let m = g.monomial();
        (m.exponent(j) % 2 == 1).then(|| {
            Generator::new(OpenTag::ArcC(arc_c(g) + j), m.div_var(j, 1).expect("positive"))
        })
    }))
}

/// `α*_(j,0)(c_n x^e) = c_{n-j} x_j x^e`. Panics unless `j` is odd.
pub fn source_alpha_star(j: i64, e: &Element) -> Result<Element> {
    assert!(j % 2 != 0, "source operators are indexed by odd j, got {j}");
    require(e, Complex::F11)?;
    Ok(e.map_terms(|g| {
        Some(Generator::new(
            OpenTag::ArcC(arc_c(g) - j),
            g.monomial().times_var(j, 1),
        ))
    }))
}

/// Negates every subscript of every string.
pub fn iota(e: &Element) -> Element {
    e.map_terms(|g| Some(Generator::new(g.tag().negated(), g.monomial().negated())))
}

/// `σ_n`: the sum of the closed parts of the traversing terms `c_i d_j p`
/// with `i + j = n`. Insular terms are ignored.
pub fn diagonal_sum(n: i64, e: &Element) -> Result<Element> {
    require(e, Complex::F22)?;
    let mut out = Element::zero(Complex::F00);
    for g in e.terms() {
        if let OpenTag::Traversing(i, j) = g.tag() {
            if i + j == n {
                out.toggle(Generator::closed(g.monomial().clone()));
            }
        }
    }
    Ok(out)
}

/// Closes off the arc of a positive F02 diagram: `a_{n-½} p ↦ x_n p`.
pub fn closeoff_plus(e: &Element) -> Result<Element> {
    require(e, Complex::F02)?;
    let mut out = Element::zero(Complex::F00);
    for g in e.terms() {
        match g.tag() {
            OpenTag::ArcA(h) if h > HalfInt::ZERO => {
                let n = (h + HalfInt::HALF).to_int().expect("half-odd subscript");
                out.toggle(Generator::closed(g.monomial().times_var(n, 1)));
            }
            _ => {
                return Err(Error::Unsupported {
                    op: "closeoff_plus",
                    generator: g.to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// Glues both insular arcs into closed curves on A₊⊗X⊗B₋:
/// `a_{i-½} b_{-j+½} p ↦ x_i x_{-j} p`.
pub fn glue_both(e: &Element) -> Result<Element> {
    require(e, Complex::F22)?;
    let mut out = Element::zero(Complex::F00);
    for g in e.terms() {
        match g.tag() {
            OpenTag::Insular(i, j) if i > HalfInt::ZERO && j < HalfInt::ZERO => {
                let a = (i + HalfInt::HALF).to_int().expect("half-odd subscript");
                let b = (j - HalfInt::HALF).to_int().expect("half-odd subscript");
                let m = g.monomial().mul(&ClosedMonomial::from_pairs([(a, 1), (b, 1)]));
                out.toggle(Generator::closed(m));
            }
            _ => {
                return Err(Error::Unsupported {
                    op: "glue_both",
                    generator: g.to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// The summands of F22: four insular ones split by the signs of the a and
/// b subscripts, and the traversing part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SummandId {
    /// A₊⊗X⊗B₊
    APBP,
    /// A₊⊗X⊗B₋
    APBM,
    /// A₋⊗X⊗B₊
    AMBP,
    /// A₋⊗X⊗B₋
    AMBM,
    /// C⊗X⊗D
    CD,
}

impl SummandId {
    pub const ALL: [SummandId; 5] = [
        SummandId::APBP,
        SummandId::APBM,
        SummandId::AMBP,
        SummandId::AMBM,
        SummandId::CD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SummandId::APBP => "a+b+",
            SummandId::APBM => "a+b-",
            SummandId::AMBP => "a-b+",
            SummandId::AMBM => "a-b-",
            SummandId::CD => "cd",
        }
    }

    /// The summand ι maps this one onto.
    pub fn mirror(self) -> SummandId {
        match self {
            SummandId::APBP => SummandId::AMBM,
            SummandId::APBM => SummandId::AMBP,
            SummandId::AMBP => SummandId::APBM,
            SummandId::AMBM => SummandId::APBP,
            SummandId::CD => SummandId::CD,
        }
    }
}

impl fmt::Display for SummandId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which summand of F22 a generator belongs to.
pub fn summand_classify(g: &Generator) -> Result<SummandId> {
    match g.tag() {
        OpenTag::Traversing(..) => Ok(SummandId::CD),
        OpenTag::Insular(i, j) => Ok(match (i > HalfInt::ZERO, j > HalfInt::ZERO) {
            (true, true) => SummandId::APBP,
            (true, false) => SummandId::APBM,
            (false, true) => SummandId::AMBP,
            (false, false) => SummandId::AMBM,
        }),
        _ => Err(Error::Unsupported {
            op: "summand_classify",
            generator: g.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{parse_element, parse_generator};
    use crate::open::{diff, s_n};

    fn p(text: &str, c: Complex) -> Element {
        parse_element(text, c).unwrap()
    }

    #[test]
    fn source_operator_examples() {
        assert_eq!(
            source_alpha_star(1, &p("c(0)", Complex::F11)).unwrap(),
            p("c(-1)*x(1)", Complex::F11)
        );
        assert_eq!(
            source_alpha(1, &p("c(0)*x(1)*x(2)", Complex::F11)).unwrap(),
            p("c(1)*x(2)", Complex::F11)
        );
        assert!(source_alpha(3, &p("c(0)*x(1)", Complex::F11)).unwrap().is_zero());
        assert!(source_alpha(1, &p("x(1)", Complex::F00)).is_err());
    }

    #[test]
    fn iota_examples() {
        let e = p("a(1/2)*b(3/2)*x(-2)", Complex::F22);
        assert_eq!(iota(&e), p("a(-1/2)*b(-3/2)*x(2)", Complex::F22));
        assert_eq!(iota(&iota(&e)), e);
        assert_eq!(iota(&s_n(2)), s_n(-2));
    }

    #[test]
    fn diagonal_sum_examples() {
        assert_eq!(diagonal_sum(0, &p("c(2)*d(-2)", Complex::F22)).unwrap(), Element::one());
        assert!(diagonal_sum(3, &p("c(1)*d(2)*x(1) + c(0)*d(3)*x(1)", Complex::F22))
            .unwrap()
            .is_zero());
        assert_eq!(
            diagonal_sum(1, &p("c(0)*d(1)*x(-1)", Complex::F22)).unwrap(),
            p("x(-1)", Complex::F00)
        );
        assert!(diagonal_sum(1, &s_n(1)).unwrap().is_zero());
    }

    #[test]
    fn closeoff_examples() {
        assert_eq!(closeoff_plus(&p("a(1/2)", Complex::F02)).unwrap(), p("x(1)", Complex::F00));
        assert_eq!(
            closeoff_plus(&p("a(5/2)*x(-1)", Complex::F02)).unwrap(),
            p("x(3)*x(-1)", Complex::F00)
        );
        let d = diff(&p("a(5/2)", Complex::F02));
        assert!(closeoff_plus(&d).unwrap().is_zero());
        assert!(closeoff_plus(&p("a(-1/2)", Complex::F02)).is_err());
    }

    #[test]
    fn glue_examples() {
        assert_eq!(
            glue_both(&p("a(1/2)*b(-1/2)", Complex::F22)).unwrap(),
            p("x(1)*x(-1)", Complex::F00)
        );
        assert_eq!(
            glue_both(&p("a(3/2)*b(-1/2)*x(5)", Complex::F22)).unwrap(),
            p("x(2)*x(5)*x(-1)", Complex::F00)
        );
        assert!(matches!(
            glue_both(&p("a(1/2)*b(1/2)", Complex::F22)),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        let g = |t: &str| parse_generator(t, Complex::F22).unwrap();
        assert_eq!(summand_classify(&g("a(1/2)*b(-3/2)")).unwrap(), SummandId::APBM);
        assert_eq!(summand_classify(&g("c(5)*d(-1)*x(2)")).unwrap(), SummandId::CD);
        assert_eq!(summand_classify(&g("a(-1/2)*b(-1/2)*x(3)")).unwrap(), SummandId::AMBM);
        assert!(summand_classify(&parse_generator("c(0)", Complex::F11).unwrap()).is_err());
    }
}
