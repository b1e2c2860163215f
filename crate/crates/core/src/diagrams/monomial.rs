use std::collections::BTreeMap;

/// A product of closed curves `∏ x_k^{e_k}` over nonzero subscripts `k`.
///
/// The subscript 0 (a contractible loop) is never stored; multiplying by
/// `x_0` is handled by [`crate::Element::mul_var`], which returns zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClosedMonomial {
    exps: BTreeMap<i64, u32>,
}

impl ClosedMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `x_k^e`. Panics when `k == 0`.
    pub fn var_pow(k: i64, e: u32) -> Self {
        let mut m = Self::one();
        m.mul_var(k, e);
        m
    }

    pub fn var(k: i64) -> Self {
        Self::var_pow(k, 1)
    }

    /// Builds a monomial from `(subscript, exponent)` pairs; repeated
    /// subscripts accumulate. Panics on a zero subscript.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u32)>) -> Self {
        let mut m = Self::one();
        for (k, e) in pairs {
            m.mul_var(k, e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, k: i64) -> u32 {
        self.exps.get(&k).copied().unwrap_or(0)
    }

    /// `(subscript, exponent)` pairs in ascending subscript order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.exps.iter().map(|(&k, &e)| (k, e))
    }

    /// Number of distinct variables.
    pub fn support_len(&self) -> usize {
        self.exps.len()
    }

    /// Total number of closed curves, counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn winding(&self) -> i64 {
        self.iter().map(|(k, e)| k * i64::from(e)).sum()
    }

    pub fn weight(&self) -> i64 {
        self.iter().map(|(k, e)| k.abs() * i64::from(e)).sum()
    }

    /// Multiplies in place by `x_k^e`. Panics when `k == 0` and `e > 0`.
    pub fn mul_var(&mut self, k: i64, e: u32) {
        if e == 0 {
            return;
        }
        assert!(k != 0, "x_0 cannot be stored in a monomial");
        *self.exps.entry(k).or_insert(0) += e;
    }

    pub fn times_var(&self, k: i64, e: u32) -> Self {
        let mut m = self.clone();
        m.mul_var(k, e);
        m
    }

    /// Divides by `x_k^e`, or returns `None` when the exponent is too small.
    pub fn div_var(&self, k: i64, e: u32) -> Option<Self> {
        let have = self.exponent(k);
        if have < e {
            return None;
        }
        let mut m = self.clone();
        if have == e {
            m.exps.remove(&k);
        } else if e > 0 {
            m.exps.insert(k, have - e);
        }
        Some(m)
    }

    pub fn mul(&self, other: &ClosedMonomial) -> Self {
        let mut m = self.clone();
        for (k, e) in other.iter() {
            m.mul_var(k, e);
        }
        m
    }

    /// Replaces every `x_k` by `x_{-k}`.
    pub fn negated(&self) -> Self {
        Self {
            exps: self.exps.iter().map(|(&k, &e)| (-k, e)).collect(),
        }
    }
}
