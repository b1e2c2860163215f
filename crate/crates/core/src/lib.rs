//! String chain complexes of marked annuli over ℤ₂.
//!
//! Diagrams are built from closed curves `x_k` and open strings `a_h`,
//! `b_h`, `c_n`, `d_n`. Homology is computed on finite winding/weight
//! windows by elimination over GF(2).

pub mod closed;
pub mod diagrams;
pub mod error;
pub mod gf2;
pub mod homology;
pub mod open;
pub mod predict;
pub mod verify;
pub mod ymodel;

pub use diagrams::{parse_element, parse_generator, ClosedMonomial, Complex, Element, Generator, HalfInt, OpenTag};
pub use error::{Error, Result};
pub use homology::{HomologyReport, Summand, TruncationSpec};
