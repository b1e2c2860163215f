//! Predicted homology dimensions, by counting the expected basis classes.

use std::fmt;

use crate::diagrams::{Complex, HalfInt};
use crate::homology::{Summand, TruncationSpec};
use crate::open::SummandId;

/// The homology statements with a counting formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// H(X) has the fermionic monomials as a basis.
    Fermionic,
    /// H(F11) vanishes.
    SourceVanishing,
    /// H(A+ ⊗ X) has basis a_{1/2} q, q positively clean; mirrored for A-.
    ArcClean,
    /// H(A+ ⊗ X ⊗ B+) has basis s_i q, i ≥ 1, q positively clean.
    DiagonalClean,
    /// H(A+ ⊗ X ⊗ B-) has basis a_{1/2} b_{-1/2} p, p totally clean.
    GluedClean,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Fermionic => "fermionic",
            Theorem::SourceVanishing => "source-vanishing",
            Theorem::ArcClean => "arc-clean",
            Theorem::DiagonalClean => "diagonal-clean",
            Theorem::GluedClean => "glued-clean",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether a prediction holds window by window or only in the limit of
/// large weight bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    Window,
    Limit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prediction {
    pub dim: usize,
    pub scope: Scope,
}

/// The statement that covers a window, if any.
pub fn theorem_for(spec: &TruncationSpec) -> Option<Theorem> {
    use SummandId::*;
    match (spec.complex, spec.summand) {
        (Complex::F00, None) => Some(Theorem::Fermionic),
        (Complex::F11, None) => Some(Theorem::SourceVanishing),
        (Complex::F02, _) => Some(Theorem::ArcClean),
        (Complex::F22, Some(Summand::F22(APBP | AMBM))) => Some(Theorem::DiagonalClean),
        (Complex::F22, Some(Summand::F22(APBM | AMBP))) => Some(Theorem::GluedClean),
        _ => None,
    }
}

/// The predicted dimension of the window's homology under `theorem`, or
/// `None` when the statement does not give a count for this window.
pub fn predicted_dim(theorem: Theorem, spec: &TruncationSpec) -> Option<Prediction> {
    if theorem_for(spec) != Some(theorem) || spec.validate().is_err() {
        return None;
    }
    let w = spec.winding;
    let m = spec.max_weight;
    let window = |dim| Some(Prediction { dim, scope: Scope::Window });
    match theorem {
        Theorem::Fermionic => window(fermionic_count(w, m, &[])),
        Theorem::SourceVanishing => Some(Prediction { dim: 0, scope: Scope::Limit }),
        Theorem::ArcClean => {
            if spec.max_a_degree.is_some() {
                return None;
            }
            let plus = arc_plus(w, m);
            let minus = arc_plus(-w, m);
            window(match spec.summand {
                Some(Summand::APlus) => plus,
                Some(Summand::AMinus) => minus,
                _ => plus + minus,
            })
        }
        Theorem::DiagonalClean => match spec.summand {
            Some(Summand::F22(SummandId::APBP)) => window(diagonal_plus(w, m, spec.max_a_degree)),
            _ => window(diagonal_plus(-w, m, None)),
        },
        Theorem::GluedClean => {
            if spec.max_a_degree.is_some() {
                return None;
            }
            let w = match spec.summand {
                Some(Summand::F22(SummandId::APBM)) => w,
                _ => -w,
            };
            window(fermionic_count(w, m - HalfInt::from_int(1), &[1, -1]))
        }
    }
}

/// [`predicted_dim`] for whichever statement covers the window.
pub fn prediction(spec: &TruncationSpec) -> Option<Prediction> {
    predicted_dim(theorem_for(spec)?, spec)
}

/// a_{1/2} q with q positively clean.
fn arc_plus(w: HalfInt, m: HalfInt) -> usize {
    fermionic_count(w - HalfInt::HALF, m - HalfInt::HALF, &[1])
}

/// s_i q with q positively clean; `s_i` has weight `i` and top a-subscript
/// `i - 1/2`.
fn diagonal_plus(w: HalfInt, m: HalfInt, cap: Option<HalfInt>) -> usize {
    (1..=m.floor())
        .filter(|&i| cap.is_none_or(|c| HalfInt::from_int(i) - HalfInt::HALF <= c))
        .map(|i| fermionic_count(w - i, m - i, &[1]))
        .sum()
}

/// Number of products of distinct odd-subscript variables, none in
/// `excluded`, with the given winding and weight at most `max_weight`.
pub fn fermionic_count(winding: HalfInt, max_weight: HalfInt, excluded: &[i64]) -> usize {
    fn rec(odds: &[i64], rem: i64, need: i64) -> usize {
        if need.abs() > rem {
            return 0;
        }
        match odds.split_first() {
            None => usize::from(need == 0),
            Some((&k, rest)) => {
                let skip = rec(rest, rem, need);
                let take = if k.abs() <= rem { rec(rest, rem - k.abs(), need - k) } else { 0 };
                skip + take
            }
        }
    }
    let (Some(w), m) = (winding.to_int(), max_weight.floor()) else {
        return 0;
    };
    if m < 0 {
        return 0;
    }
    let odds: Vec<i64> = (1..=m)
        .step_by(2)
        .flat_map(|k| [k, -k])
        .filter(|k| !excluded.contains(k))
        .collect();
    rec(&odds, m, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hi(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    #[test]
    fn examples() {
        let f00 = |w, m| prediction(&TruncationSpec::new(Complex::F00, hi(w), hi(m))).unwrap().dim;
        assert_eq!(f00(0, 2), 2);
        assert_eq!(f00(4, 4), 1);
        let spec = TruncationSpec::new(Complex::F22, hi(0), hi(1)).with_summand(Summand::F22(SummandId::APBM));
        assert_eq!(prediction(&spec).unwrap().dim, 1);
    }

    #[test]
    fn mismatch_gives_none() {
        let spec = TruncationSpec::new(Complex::F00, hi(0), hi(2));
        assert_eq!(predicted_dim(Theorem::ArcClean, &spec), None);
        let cd = TruncationSpec::new(Complex::F22, hi(0), hi(2)).with_summand(Summand::F22(SummandId::CD));
        assert_eq!(prediction(&cd), None);
        assert_eq!(prediction(&TruncationSpec::new(Complex::F22, hi(0), hi(2))), None);
    }

    #[test]
    fn source_vanishing_is_a_limit_statement() {
        let p = prediction(&TruncationSpec::new(Complex::F11, hi(0), hi(0))).unwrap();
        assert_eq!(p, Prediction { dim: 0, scope: Scope::Limit });
    }

    #[test]
    fn small_counts() {
        // 1 and x1x-1; x3x-3 needs weight 6.
        assert_eq!(fermionic_count(hi(0), hi(4), &[]), 2);
        assert_eq!(fermionic_count(hi(0), hi(6), &[]), 3);
        assert_eq!(fermionic_count(HalfInt::HALF, hi(4), &[]), 0);
        assert_eq!(arc_plus(HalfInt::HALF, HalfInt::from_doubled(5)), 1);
        // s_1, s_1 x3x-3, s_2 x-1, s_4 x-3.
        assert_eq!(diagonal_plus(hi(1), hi(7), None), 4);
        assert_eq!(diagonal_plus(hi(2), hi(2), Some(HalfInt::HALF)), 0);
    }
}
