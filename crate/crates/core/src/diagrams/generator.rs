use std::fmt;
use std::str::FromStr;

use super::{ClosedMonomial, HalfInt};
use crate::error::Error;

/// Which marked annulus a diagram lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Complex {
    /// No marked points.
    F00,
    /// One marked point on each boundary component.
    F11,
    /// Two marked points on one boundary component.
    F02,
    /// Two marked points on each boundary component.
    F22,
}

impl Complex {
    pub const ALL: [Complex; 4] = [Complex::F00, Complex::F11, Complex::F02, Complex::F22];

    pub fn name(self) -> &'static str {
        match self {
            Complex::F00 => "f00",
            Complex::F11 => "f11",
            Complex::F02 => "f02",
            Complex::F22 => "f22",
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Complex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "f00" => Ok(Complex::F00),
            "f11" => Ok(Complex::F11),
            "f02" => Ok(Complex::F02),
            "f22" => Ok(Complex::F22),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown complex {s:?} (expected f00, f11, f02 or f22)"),
            }),
        }
    }
}

/// The open strings of a diagram.
///
/// Variant order fixes the canonical term order of serialized elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpenTag {
    Empty,
    /// The arc `c_n` of F11.
    ArcC(i64),
    /// The arc `a_h` of F02, `h ∈ ℤ + ½`.
    ArcA(HalfInt),
    /// The traversing pair `c_m d_n` of F22.
    Traversing(i64, i64),
    /// The insular pair `a_i b_j` of F22, `i, j ∈ ℤ + ½`.
    Insular(HalfInt, HalfInt),
}

impl OpenTag {
    pub fn complex(self) -> Complex {
        match self {
            OpenTag::Empty => Complex::F00,
            OpenTag::ArcC(_) => Complex::F11,
            OpenTag::ArcA(_) => Complex::F02,
            OpenTag::Traversing(..) | OpenTag::Insular(..) => Complex::F22,
        }
    }

    pub fn winding(self) -> HalfInt {
        match self {
            OpenTag::Empty => HalfInt::ZERO,
            OpenTag::ArcC(n) => HalfInt::from_int(n),
            OpenTag::ArcA(h) => h,
            OpenTag::Traversing(m, n) => HalfInt::from_int(m + n),
            OpenTag::Insular(i, j) => i + j,
        }
    }

    pub fn weight(self) -> HalfInt {
        match self {
            OpenTag::Empty => HalfInt::ZERO,
            OpenTag::ArcC(n) => HalfInt::from_int(n.abs()),
            OpenTag::ArcA(h) => h.abs(),
            OpenTag::Traversing(m, n) => HalfInt::from_int(m.abs() + n.abs()),
            OpenTag::Insular(i, j) => i.abs() + j.abs(),
        }
    }

    /// Negates every subscript.
    pub fn negated(self) -> Self {
        match self {
            OpenTag::Empty => OpenTag::Empty,
            OpenTag::ArcC(n) => OpenTag::ArcC(-n),
            OpenTag::ArcA(h) => OpenTag::ArcA(-h),
            OpenTag::Traversing(m, n) => OpenTag::Traversing(-m, -n),
            OpenTag::Insular(i, j) => OpenTag::Insular(-i, -j),
        }
    }

    fn is_valid(self) -> bool {
        match self {
            OpenTag::ArcA(h) => h.is_half_odd(),
            OpenTag::Insular(i, j) => i.is_half_odd() && j.is_half_odd(),
            _ => true,
        }
    }
}

/// One basis string diagram: open strings together with closed curves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    tag: OpenTag,
    closed: ClosedMonomial,
}

impl Generator {
    /// Panics if an a/b subscript is not in ℤ + ½.
    pub fn new(tag: OpenTag, closed: ClosedMonomial) -> Self {
        assert!(tag.is_valid(), "a/b subscripts must lie in Z + 1/2: {tag:?}");
        Self { tag, closed }
    }

    pub fn closed(closed: ClosedMonomial) -> Self {
        Self::new(OpenTag::Empty, closed)
    }

    pub fn tag(&self) -> OpenTag {
        self.tag
    }

    pub fn monomial(&self) -> &ClosedMonomial {
        &self.closed
    }

    pub fn complex(&self) -> Complex {
        self.tag.complex()
    }

    pub fn with_monomial(&self, closed: ClosedMonomial) -> Self {
        Self { tag: self.tag, closed }
    }

    pub fn with_tag(&self, tag: OpenTag) -> Self {
        Self::new(tag, self.closed.clone())
    }

    pub fn winding(&self) -> HalfInt {
        self.tag.winding() + self.closed.winding()
    }

    pub fn weight(&self) -> HalfInt {
        self.tag.weight() + self.closed.weight()
    }
}
