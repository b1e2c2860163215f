use std::collections::BTreeSet;

use super::{ClosedMonomial, Complex, Generator, HalfInt};
use crate::error::{Error, Result};

/// A finite ℤ₂-linear combination of generators of one complex.
///
/// Terms are stored as a set: adding a generator that is already present
/// removes it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    complex: Complex,
    terms: BTreeSet<Generator>,
}

impl Element {
    pub fn zero(complex: Complex) -> Self {
        Self {
            complex,
            terms: BTreeSet::new(),
        }
    }

    pub fn from_generator(g: Generator) -> Self {
        let mut e = Self::zero(g.complex());
        e.terms.insert(g);
        e
    }

    /// Sums the given generators mod 2. Every generator must belong to `complex`.
    pub fn from_generators(complex: Complex, gens: impl IntoIterator<Item = Generator>) -> Result<Self> {
        let mut e = Self::zero(complex);
        for g in gens {
            if g.complex() != complex {
                return Err(Error::ComplexMismatch {
                    expected: complex,
                    found: g.complex(),
                });
            }
            e.toggle(g);
        }
        Ok(e)
    }

    /// The F00 element `x^m`.
    pub fn monomial(m: ClosedMonomial) -> Self {
        Self::from_generator(Generator::closed(m))
    }

    /// The F00 unit `1`.
    pub fn one() -> Self {
        Self::monomial(ClosedMonomial::one())
    }

    pub fn complex(&self) -> Complex {
        self.complex
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.terms.contains(g)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = &Generator> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = Generator> {
        self.terms.into_iter()
    }

    /// Adds one generator mod 2. Panics if it belongs to another complex.
    pub fn toggle(&mut self, g: Generator) {
        assert_eq!(g.complex(), self.complex, "generator {g:?} added to a {} element", self.complex);
        if !self.terms.remove(&g) {
            self.terms.insert(g);
        }
    }

    /// In-place sum. Panics on a complex mismatch; see [`Element::add`] for
    /// the checked form.
    pub fn add_assign(&mut self, other: &Element) {
        assert_eq!(self.complex, other.complex, "adding elements of different complexes");
        for g in &other.terms {
            self.toggle(g.clone());
        }
    }

    /// The symmetric difference of the two term sets.
    pub fn add(&self, other: &Element) -> Result<Element> {
        if self.complex != other.complex {
            return Err(Error::ComplexMismatch {
                expected: self.complex,
                found: other.complex,
            });
        }
        let terms = self.terms.symmetric_difference(&other.terms).cloned().collect();
        Ok(Element {
            complex: self.complex,
            terms,
        })
    }

    /// Multiplies every term's closed part by `m`.
    pub fn mul_closed(&self, m: &ClosedMonomial) -> Element {
        self.map_terms(|g| Some(g.with_monomial(g.monomial().mul(m))))
    }

    /// Multiplies by `x_k^e`. A factor `x_0` is a contractible loop, so the
    /// result is zero.
    pub fn mul_var(&self, k: i64, e: u32) -> Element {
        if k == 0 && e > 0 {
            return Element::zero(self.complex);
        }
        self.map_terms(|g| Some(g.with_monomial(g.monomial().times_var(k, e))))
    }

    /// Applies a per-generator map and sums the results mod 2. The map must
    /// preserve the complex.
    pub fn map_terms(&self, mut f: impl FnMut(&Generator) -> Option<Generator>) -> Element {
        let mut out = Element::zero(self.complex);
        for g in &self.terms {
            if let Some(h) = f(g) {
                out.toggle(h);
            }
        }
        out
    }

    /// Applies a linear map given on generators.
    pub fn map_linear(&self, target: Complex, mut f: impl FnMut(&Generator) -> Element) -> Element {
        let mut out = Element::zero(target);
        for g in &self.terms {
            out.add_assign(&f(g));
        }
        out
    }

    /// The single winding shared by all terms, if there is one. The zero
    /// element has no winding.
    pub fn homogeneous_winding(&self) -> Result<Option<HalfInt>> {
        let mut it = self.terms.iter().map(Generator::winding);
        let Some(w) = it.next() else {
            return Ok(None);
        };
        if it.all(|v| v == w) {
            Ok(Some(w))
        } else {
            Err(Error::MixedWinding)
        }
    }

    pub fn max_weight(&self) -> Option<HalfInt> {
        self.terms.iter().map(Generator::weight).max()
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Generator) -> bool) -> Element {
        Element {
            complex: self.complex,
            terms: self.terms.iter().filter(|g| keep(g)).cloned().collect(),
        }
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Element::from_generator(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::OpenTag;

    fn trav(m: i64, n: i64) -> Generator {
        Generator::new(OpenTag::Traversing(m, n), ClosedMonomial::one())
    }

    #[test]
    fn addition_is_symmetric_difference() {
        let e = Element::from(trav(0, 0));
        assert!(e.add(&e).unwrap().is_zero());
        assert_eq!(e.add(&Element::zero(Complex::F22)).unwrap(), e);
        let f = Element::from_generators(Complex::F22, [trav(0, 0), trav(1, -1)]).unwrap();
        assert_eq!(e.add(&f).unwrap(), Element::from(trav(1, -1)));
    }

    #[test]
    fn addition_rejects_mixed_complexes() {
        let e = Element::from(trav(0, 0));
        let err = e.add(&Element::one()).unwrap_err();
        assert!(matches!(err, Error::ComplexMismatch { .. }));
    }

    #[test]
    fn module_action() {
        let a = Element::from(Generator::new(OpenTag::ArcA(HalfInt::HALF), ClosedMonomial::one()));
        let ax = a.mul_var(1, 1);
        assert_eq!(
            ax,
            Element::from(Generator::new(OpenTag::ArcA(HalfInt::HALF), ClosedMonomial::var(1)))
        );
        let c = Element::from(Generator::new(OpenTag::ArcC(0), ClosedMonomial::one()));
        assert!(c.mul_var(0, 1).is_zero());
        let x1 = Element::monomial(ClosedMonomial::var(1));
        assert_eq!(x1.mul_var(1, 1), Element::monomial(ClosedMonomial::var_pow(1, 2)));
        assert_eq!(x1.mul_closed(&ClosedMonomial::var(1)), x1.mul_var(1, 1));
    }

    #[test]
    fn winding_homogeneity() {
        assert_eq!(Element::zero(Complex::F00).homogeneous_winding().unwrap(), None);
        let e = Element::from_generators(Complex::F22, [trav(0, 0), trav(1, 0)]).unwrap();
        assert_eq!(e.homogeneous_winding(), Err(Error::MixedWinding));
    }
}
