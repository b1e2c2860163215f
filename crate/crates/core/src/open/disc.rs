//! The six-generator disc complex E with `∂U = B + T₀ + T₁`, and the chain
//! maps between it and F22.

use std::fmt;

use crate::diagrams::{ClosedMonomial, Complex, Element, Generator, HalfInt, OpenTag};
use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EGen {
    APlus,
    AMinus,
    B,
    T0,
    T1,
    U,
}

impl EGen {
    pub const ALL: [EGen; 6] = [EGen::APlus, EGen::AMinus, EGen::B, EGen::T0, EGen::T1, EGen::U];

    fn bit(self) -> u8 {
        1 << self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            EGen::APlus => "A+",
            EGen::AMinus => "A-",
            EGen::B => "B",
            EGen::T0 => "T0",
            EGen::T1 => "T1",
            EGen::U => "U",
        }
    }
}

/// A ℤ₂-combination of the generators of E, one bit per generator.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EElement(u8);

impl EElement {
    pub const ZERO: EElement = EElement(0);

    pub fn from_bits(bits: u8) -> Self {
        assert!(bits < 64, "E has six generators");
        EElement(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, g: EGen) -> bool {
        self.0 & g.bit() != 0
    }

    pub fn terms(self) -> impl Iterator<Item = EGen> {
        EGen::ALL.into_iter().filter(move |g| self.contains(*g))
    }

    /// All 64 elements of E.
    pub fn all() -> impl Iterator<Item = EElement> {
        (0u8..64).map(EElement)
    }

    pub fn is_cycle(self) -> bool {
        diff_e(self).is_zero()
    }

    /// Coordinates of a cycle's class in H(E) with respect to the basis
    /// `[A₊], [A₋], [T₀], [T₁]`, using `[B] = [T₀] + [T₁]`. `None` for
    /// non-cycles.
    pub fn homology_class(self) -> Option<[bool; 4]> {
        if !self.is_cycle() {
            return None;
        }
        let b = self.contains(EGen::B);
        Some([
            self.contains(EGen::APlus),
            self.contains(EGen::AMinus),
            self.contains(EGen::T0) ^ b,
            self.contains(EGen::T1) ^ b,
        ])
    }

    /// True for a cycle whose homology class is nonzero.
    pub fn is_nonzero_in_homology(self) -> bool {
        self.homology_class().is_some_and(|c| c.iter().any(|&b| b))
    }
}

impl From<EGen> for EElement {
    fn from(g: EGen) -> Self {
        EElement(g.bit())
    }
}

impl std::ops::Add for EElement {
    type Output = EElement;

    // Addition over Z2 is XOR of the generator sets.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: EElement) -> EElement {
        EElement(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for EElement {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: EElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for EElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EElement({self})")
    }
}

impl fmt::Display for EElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names: Vec<&str> = self.terms().map(EGen::name).collect();
        f.write_str(&names.join(" + "))
    }
}

pub fn diff_e(e: EElement) -> EElement {
    if e.contains(EGen::U) {
        EElement::from(EGen::B) + EGen::T0.into() + EGen::T1.into()
    } else {
        EElement::ZERO
    }
}

/// Dimension of H(E), computed by elimination.
pub fn e_homology_dim() -> usize {
    let columns: Vec<Vec<usize>> = EGen::ALL
        .iter()
        .map(|&g| diff_e(g.into()).terms().map(|t| t as usize).collect())
        .collect();
    let d = BitMatrix::from_column_supports(6, &columns);
    let r = gf2::rank(&d);
    (6 - r) - r
}

fn half(d: i64) -> HalfInt {
    HalfInt::from_doubled(d)
}

fn embed(g: EGen) -> Generator {
    let one = ClosedMonomial::one;
    match g {
        EGen::APlus => Generator::new(OpenTag::Insular(half(1), half(-1)), one()),
        EGen::AMinus => Generator::new(OpenTag::Insular(half(-1), half(1)), one()),
        EGen::B => Generator::new(OpenTag::Insular(half(1), half(1)), ClosedMonomial::var(-1)),
        EGen::T0 => Generator::new(OpenTag::Traversing(0, 0), one()),
        EGen::T1 => Generator::new(OpenTag::Traversing(-1, 1), one()),
        EGen::U => Generator::new(OpenTag::Traversing(0, 1), ClosedMonomial::var(-1)),
    }
}

/// The inclusion E → F22 that glues the disc diagrams into the annulus.
pub fn disc_incl(e: EElement) -> Element {
    let mut out = Element::zero(Complex::F22);
    for g in e.terms() {
        out.toggle(embed(g));
    }
    out
}

/// True when `m` is exactly the single curve `x_k`.
fn is_single(m: &ClosedMonomial, k: i64) -> bool {
    k != 0 && m.support_len() == 1 && m.degree() == 1 && m.exponent(k) == 1
}

fn project(g: &Generator) -> Option<EGen> {
    let m = g.monomial();
    match g.tag() {
        OpenTag::Insular(i, j) => {
            if m.is_one() && i == half(1) && j == half(-1) {
                Some(EGen::APlus)
            } else if m.is_one() && i == half(-1) && j == half(1) {
                Some(EGen::AMinus)
            } else if i.signum() == j.signum() {
                let n = (i + j).to_int().expect("sum of two half-odd values");
                is_single(m, -n).then_some(EGen::B)
            } else {
                None
            }
        }
        OpenTag::Traversing(i, j) => {
            let n = i + j;
            if n == 0 && m.is_one() {
                Some(if i % 2 == 0 { EGen::T0 } else { EGen::T1 })
            } else if n % 2 != 0 && is_single(m, -n) {
                Some(EGen::U)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// The projection F22 → E.
pub fn disc_proj(e: &Element) -> Result<EElement> {
    if e.complex() != Complex::F22 {
        return Err(Error::ComplexMismatch {
            expected: Complex::F22,
            found: e.complex(),
        });
    }
    let mut out = EElement::ZERO;
    for g in e.terms() {
        if let Some(t) = project(g) {
            out += t.into();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse_element;
    use crate::open::diff;

    fn proj(text: &str) -> EElement {
        disc_proj(&parse_element(text, Complex::F22).unwrap()).unwrap()
    }

    #[test]
    fn projection_examples() {
        assert_eq!(proj("c(0)*d(0)"), EGen::T0.into());
        assert_eq!(proj("a(3/2)*b(1/2)*x(-2)"), EGen::B.into());
        assert_eq!(proj("c(0)*d(0)*x(1)"), EElement::ZERO);
        assert_eq!(proj("c(0)*d(1)*x(-1)"), EGen::U.into());
        assert_eq!(proj("c(2)*d(-2)"), EGen::T0.into());
        assert_eq!(proj("c(-3)*d(3)"), EGen::T1.into());
        assert_eq!(proj("a(1/2)*b(-1/2)*x(3)"), EElement::ZERO);
        assert_eq!(proj("a(-1/2)*b(-3/2)*x(2)"), EGen::B.into());
        assert_eq!(proj("a(1/2)*b(-3/2)*x(1)"), EElement::ZERO);
        assert_eq!(proj("c(1)*d(1)*x(-2)"), EElement::ZERO);
    }

    #[test]
    fn e_complex() {
        assert_eq!(diff_e(EGen::U.into()), EElement::from_bits(0b011100));
        assert_eq!(e_homology_dim(), 4);
        for e in EElement::all() {
            assert_eq!(disc_proj(&disc_incl(e)).unwrap(), e);
            assert!(diff_e(diff_e(e)).is_zero());
            assert_eq!(diff(&disc_incl(e)), disc_incl(diff_e(e)));
        }
        assert!(EElement::from(EGen::T0).is_nonzero_in_homology());
        let boundary = diff_e(EGen::U.into());
        assert!(boundary.is_cycle() && !boundary.is_nonzero_in_homology());
        assert_eq!(EElement::from(EGen::U).homology_class(), None);
    }

    #[test]
    fn display() {
        assert_eq!(EElement::from_bits(0b100101).to_string(), "A+ + B + U");
        assert_eq!(EElement::ZERO.to_string(), "0");
    }
}
