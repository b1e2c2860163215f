//! The closed-string algebra X = ℤ₂[x_k : k ≠ 0] with `∂x_{2k} = x_k²` and
//! `∂x_{2k+1} = 0`. Its homology is carried by the fermionic monomials.

use crate::diagrams::{ClosedMonomial, Complex, Element, HalfInt};
use crate::error::{Error, Result};
use crate::homology::{self, TruncationSpec};

/// Terms of `∂x^e` in X.
pub fn diff_monomial(m: &ClosedMonomial) -> Vec<ClosedMonomial> {
    m.iter()
        .filter(|&(k, e)| k % 2 == 0 && e % 2 == 1)
        .map(|(k, _)| {
            m.div_var(k, 1)
                .expect("exponent is positive")
                .times_var(k / 2, 2)
        })
        .collect()
}

/// The differential of X applied to the closed part of every term.
///
/// On F00 this is the full differential; on the other complexes it is the
/// `p ↦ s·∂p` part that ignores the open strings.
pub fn diff_x(e: &Element) -> Element {
    e.map_linear(e.complex(), |g| {
        let mut out = Element::zero(g.complex());
        for m in diff_monomial(g.monomial()) {
            out.toggle(g.with_monomial(m));
        }
        out
    })
}

/// Writes `n = j·2^k` with `j` odd.
pub fn odd_decompose(n: i64) -> Result<(i64, u32)> {
    if n == 0 {
        return Err(Error::ZeroSubscript);
    }
    let k = n.trailing_zeros();
    Ok((n >> k, k))
}

fn decay_fusion_index(j: i64, k: u32) -> (i64, i64) {
    assert!(j % 2 != 0, "decay and fusion are indexed by odd j, got {j}");
    assert!(k >= 1, "decay and fusion need k >= 1");
    let low = j << (k - 1);
    (low, low * 2)
}

/// The decay operator `α_(j,k)`: the derivation sending `x_{j·2^k}` to
/// `x_{j·2^{k-1}}²` and every other variable to 0.
///
/// Acts on the closed part of each term. Panics unless `j` is odd and `k ≥ 1`.
pub fn decay(j: i64, k: u32, e: &Element) -> Element {
    let (low, high) = decay_fusion_index(j, k);
    e.map_terms(|g| {
        let m = g.monomial();
        (m.exponent(high) % 2 == 1)
            .then(|| g.with_monomial(m.div_var(high, 1).expect("positive").times_var(low, 2)))
    })
}

/// The fusion operator `α*_(j,k)`: multiplication by `x_{j·2^{k-1}}^{-2} x_{j·2^k}`
/// when the exponent of `x_{j·2^{k-1}}` is at least 2, and 0 otherwise.
///
/// Panics unless `j` is odd and `k ≥ 1`.
pub fn fusion(j: i64, k: u32, e: &Element) -> Element {
    let (low, high) = decay_fusion_index(j, k);
    e.map_terms(|g| {
        let m = g.monomial();
        m.div_var(low, 2).map(|q| g.with_monomial(q.times_var(high, 1)))
    })
}

/// Distinct odd subscripts, each with exponent 1. The empty monomial counts.
pub fn is_fermionic(m: &ClosedMonomial) -> bool {
    m.iter().all(|(k, e)| k % 2 != 0 && e == 1)
}

/// Fermionic without `x_1`.
pub fn is_clean_pos(m: &ClosedMonomial) -> bool {
    is_fermionic(m) && m.exponent(1) == 0
}

/// Fermionic without `x_{-1}`.
pub fn is_clean_neg(m: &ClosedMonomial) -> bool {
    is_fermionic(m) && m.exponent(-1) == 0
}

/// Fermionic without `x_1` or `x_{-1}`.
pub fn is_clean_total(m: &ClosedMonomial) -> bool {
    is_clean_pos(m) && m.exponent(-1) == 0
}

fn check_f00(p: &Element) -> Result<()> {
    if p.complex() != Complex::F00 {
        return Err(Error::ComplexMismatch {
            expected: Complex::F00,
            found: p.complex(),
        });
    }
    Ok(())
}

/// Splits a cycle of X as `p = r + ∂u` with `r` fermionic.
///
/// `r` is unique; `u` is the solver's choice inside the window of weight
/// at most `bound`. Every term of `p` must have weight at most `bound`.
pub fn fermionic_rep(p: &Element, bound: HalfInt) -> Result<(Element, Element)> {
    check_f00(p)?;
    if !diff_x(p).is_zero() {
        return Err(Error::NotACycle);
    }
    if p.max_weight().is_some_and(|w| w > bound) {
        return Err(Error::InvalidSpec(format!("a term of {p} is heavier than {bound}")));
    }
    let mut r = Element::zero(Complex::F00);
    let mut u = Element::zero(Complex::F00);
    for (w, part) in homology::split_by_winding(p) {
        let spec = TruncationSpec::new(Complex::F00, w, bound);
        let basis = homology::enumerate_basis(&spec)?;
        let standard: Vec<Element> = basis
            .iter()
            .filter(|g| is_fermionic(g.monomial()))
            .map(|g| Element::from(g.clone()))
            .collect();
        let (chosen, witness) = homology::split_standard(&spec, &basis, &standard, &part)?
            .ok_or_else(|| Error::Internal(format!("cycle {part} has no fermionic representative")))?;
        for i in chosen {
            r.add_assign(&standard[i]);
        }
        u.add_assign(&witness);
    }
    Ok((r, u))
}
