//! The model algebra Y = ℤ₂[y_0, y_1, …] with `∂y_i = y_{i-1}²` and
//! `∂y_0 = 0`, graded by `Σ e_i 2^i`. Each factor X_j of X (the variables
//! `x_{j·2^k}`, `j` odd) is a copy of Y under `x_{j·2^k} ↦ y_k`.

use std::collections::BTreeSet;
use std::fmt;

use crate::diagrams::{ClosedMonomial, Element};

/// A monomial `∏ y_i^{e_i}`, stored densely with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YMonomial {
    exps: Vec<u32>,
}

impl YMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self { exps }
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Self {
        let mut exps = Vec::new();
        for &(i, e) in pairs {
            if exps.len() <= i {
                exps.resize(i + 1, 0);
            }
            exps[i] += e;
        }
        Self::new(exps)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    /// `Σ e_i 2^i`.
    pub fn grade(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| u64::from(e) << i)
            .sum()
    }

    /// Exponent vector, without trailing zeros.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    fn adjust(&self, i: usize, delta: i64) -> Option<YMonomial> {
        let e = i64::from(self.exponent(i)) + delta;
        if e < 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        if exps.len() <= i {
            exps.resize(i + 1, 0);
        }
        exps[i] = e as u32;
        Some(YMonomial::new(exps))
    }

    /// The image `x_{j}^{e_0} x_{2j}^{e_1} x_{4j}^{e_2} …` in the factor X_j of X.
    pub fn to_closed(&self, j: i64) -> ClosedMonomial {
        assert!(j % 2 != 0, "X_j is indexed by odd j");
        ClosedMonomial::from_pairs(self.exps.iter().enumerate().map(|(i, &e)| (j << i, e)))
    }

    /// All monomials of the given grade, in canonical order.
    pub fn of_grade(d: u64) -> Vec<YMonomial> {
        fn rec(i: usize, rest: u64, exps: &mut Vec<u32>, out: &mut Vec<YMonomial>) {
            if rest == 0 {
                out.push(YMonomial::new(exps.clone()));
                return;
            }
            // `rest` is a multiple of 2^i; e_i must leave a multiple of 2^{i+1}.
            let units = rest >> i;
            for e in (units % 2..=units).step_by(2) {
                exps.push(e as u32);
                rec(i + 1, rest - (e << i), exps, out);
                exps.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, d, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("y{i}") } else { format!("y{i}^{e}") })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A ℤ₂-combination of Y monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YElement {
    terms: BTreeSet<YMonomial>,
}

impl YElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, m: YMonomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &YElement) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &YMonomial> + '_ {
        self.terms.iter()
    }

    fn map_linear(&self, f: impl Fn(&YMonomial) -> YElement) -> YElement {
        let mut out = YElement::zero();
        for m in &self.terms {
            out.add_assign(&f(m));
        }
        out
    }

    /// Image in the factor X_j of X.
    pub fn to_closed(&self, j: i64) -> Element {
        let mut out = Element::zero(crate::Complex::F00);
        for m in &self.terms {
            out.toggle(crate::Generator::closed(m.to_closed(j)));
        }
        out
    }
}

impl From<YMonomial> for YElement {
    fn from(m: YMonomial) -> Self {
        let mut e = YElement::zero();
        e.toggle(m);
        e
    }
}

impl fmt::Display for YElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn alpha_monomial(k: usize, m: &YMonomial) -> Option<YMonomial> {
    if k == 0 || m.exponent(k).is_multiple_of(2) {
        return None;
    }
    m.adjust(k, -1).and_then(|m| m.adjust(k - 1, 2))
}

fn alpha_star_monomial(k: usize, m: &YMonomial) -> Option<YMonomial> {
    if k == 0 || m.exponent(k - 1) < 2 {
        return None;
    }
    m.adjust(k - 1, -2).and_then(|m| m.adjust(k, 1))
}

/// The decay operator `α_k`, the derivation `y_k ↦ y_{k-1}²`; `α_0 = 0`.
pub fn alpha_y(k: usize, e: &YElement) -> YElement {
    e.map_linear(|m| alpha_monomial(k, m).map(YElement::from).unwrap_or_default())
}

/// The fusion operator `α*_k`, multiplication by `y_{k-1}^{-2} y_k` where
/// defined and 0 otherwise; `α*_0 = 0`.
pub fn alpha_y_star(k: usize, e: &YElement) -> YElement {
    e.map_linear(|m| alpha_star_monomial(k, m).map(YElement::from).unwrap_or_default())
}

/// `∂ = Σ_k α_k`.
pub fn diff_y(e: &YElement) -> YElement {
    e.map_linear(|m| {
        let mut out = YElement::zero();
        for k in 1..m.exponents().len() {
            if let Some(t) = alpha_monomial(k, m) {
                out.toggle(t);
            }
        }
        out
    })
}

/// Position of a monomial in the Weyl hierarchy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(i) => write!(f, "{i}"),
            Level::Infinite => f.write_str("inf"),
        }
    }
}

/// Level 0: `e_0 ≥ 2` or `e_1` odd. Level `i ≥ 1`: `e_0 ≤ 1`,
/// `e_1 = … = e_{i-1} = 0`, `e_i` even, and (`e_i ≥ 2` or `e_{i+1}` odd).
/// Level ∞: the monomials `1` and `y_0`.
pub fn level_of(m: &YMonomial) -> Level {
    if m.exponent(0) >= 2 || m.exponent(1) % 2 == 1 {
        return Level::Finite(0);
    }
    match (1..m.exponents().len()).find(|&j| m.exponent(j) > 0) {
        None => Level::Infinite,
        Some(j) if m.exponent(j).is_multiple_of(2) => Level::Finite(j),
        Some(j) => Level::Finite(j - 1),
    }
}

/// The fusion operator that contracts the given level to zero, if any.
pub fn homotopy_index(level: Level) -> Option<usize> {
    match level {
        Level::Finite(i) => Some(i + 1),
        Level::Infinite => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(pairs: &[(usize, u32)]) -> YElement {
        YMonomial::from_pairs(pairs).into()
    }

    #[test]
    fn differential_examples() {
        assert_eq!(diff_y(&y(&[(1, 1)])), y(&[(0, 2)]));
        assert_eq!(diff_y(&y(&[(0, 1), (1, 1)])), y(&[(0, 3)]));
        assert!(diff_y(&y(&[(0, 1)])).is_zero());
        assert!(diff_y(&y(&[(1, 2)])).is_zero());
    }

    #[test]
    fn operator_examples() {
        assert_eq!(alpha_y_star(1, &y(&[(0, 2)])), y(&[(1, 1)]));
        assert!(alpha_y_star(1, &y(&[(0, 1)])).is_zero());
        assert!(alpha_y_star(0, &y(&[(0, 2)])).is_zero());
        assert!(alpha_y(0, &y(&[(0, 2)])).is_zero());
        assert_eq!(alpha_y(2, &y(&[(2, 3)])), y(&[(1, 2), (2, 2)]));
    }

    #[test]
    fn level_examples() {
        let lv = |pairs: &[(usize, u32)]| level_of(&YMonomial::from_pairs(pairs));
        assert_eq!(lv(&[(0, 2)]), Level::Finite(0));
        assert_eq!(lv(&[(0, 1)]), Level::Infinite);
        assert_eq!(lv(&[]), Level::Infinite);
        assert_eq!(lv(&[(2, 2)]), Level::Finite(2));
        assert_eq!(lv(&[(0, 1), (3, 1)]), Level::Finite(2));
        assert_eq!(lv(&[(1, 1)]), Level::Finite(0));
    }

    #[test]
    fn grade_enumeration() {
        let counts: Vec<usize> = (0..8).map(|d| YMonomial::of_grade(d).len()).collect();
        // Binary partitions of d.
        assert_eq!(counts, vec![1, 1, 2, 2, 4, 4, 6, 6]);
        for d in 0..12 {
            for m in YMonomial::of_grade(d) {
                assert_eq!(m.grade(), d);
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(YMonomial::from_pairs(&[(0, 3), (2, 1)]).to_string(), "y0^3*y2");
        assert_eq!(YElement::zero().to_string(), "0");
    }
}
