//! String diagrams on marked annuli and their ℤ₂ combinations.

mod element;
mod generator;
mod half_int;
mod monomial;
mod text;

pub use element::Element;
pub use generator::{Complex, Generator, OpenTag};
pub use half_int::HalfInt;
pub use monomial::ClosedMonomial;
pub use text::{parse_element, parse_generator};
