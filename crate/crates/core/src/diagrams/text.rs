//! Canonical text form of generators and elements, and its parser.
//!
//! ```text
//! element := term ('+' term)*
//! term    := factor ('*' factor)*
//! factor  := '1' | '0' | atom ('^' nat)?
//! atom    := sym '(' sub ')'        sym ∈ {x, a, b, c, d}
//! sub     := int | int '/' '2'
//! ```
//! Whitespace is ignored. A generator prints as its open strings followed
//! by `x(k)^e` factors in ascending subscript order, e.g.
//! `a(1/2)*b(-3/2)*x(-1)^2*x(3)`.

use std::fmt;

use super::{ClosedMonomial, Complex, Element, Generator, HalfInt, OpenTag};
use crate::error::{Error, Result};

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = match self.tag() {
            OpenTag::Empty => vec![],
            OpenTag::ArcC(n) => vec![format!("c({n})")],
            OpenTag::ArcA(h) => vec![format!("a({h})")],
            OpenTag::Traversing(m, n) => vec![format!("c({m})"), format!("d({n})")],
            OpenTag::Insular(i, j) => vec![format!("a({i})"), format!("b({j})")],
        };
        for (k, e) in self.monomial().iter() {
            parts.push(if e == 1 {
                format!("x({k})")
            } else {
                format!("x({k})^{e}")
            });
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, g) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Parses an element of `complex` and returns it in canonical form.
pub fn parse_element(text: &str, complex: Complex) -> Result<Element> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut out = Element::zero(complex);
    loop {
        let start = p.skip_ws();
        let term = p.term()?;
        if let Some(g) = term.into_generator(complex, start)? {
            out.toggle(g);
        }
        match p.peek() {
            Some(b'+') => p.pos += 1,
            None => return Ok(out),
            Some(c) => return Err(p.error(format!("expected '+' or end of input, found {:?}", c as char))),
        }
    }
}

/// Parses a single generator; the text must reduce to exactly one term.
pub fn parse_generator(text: &str, complex: Complex) -> Result<Generator> {
    let e = parse_element(text, complex)?;
    let mut terms = e.into_terms();
    match (terms.next(), terms.next()) {
        (Some(g), None) => Ok(g),
        _ => Err(Error::Parse {
            pos: 0,
            msg: format!("{text:?} is not a single generator"),
        }),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Default)]
struct Term {
    a: Vec<(HalfInt, usize)>,
    b: Vec<(HalfInt, usize)>,
    c: Vec<(i64, usize)>,
    d: Vec<(i64, usize)>,
    closed: Vec<(i64, u32)>,
    zero: bool,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) -> usize {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.pos
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += 1;
                Ok(())
            }
            Some(found) => Err(self.error(format!("expected {:?}, found {:?}", c as char, found as char))),
            None => Err(self.error(format!("expected {:?}, found end of input", c as char))),
        }
    }

    fn digits(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("number {s} out of range"),
        })
    }

    fn int(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.digits()?;
        Ok(if neg { -n } else { n })
    }

    fn subscript(&mut self) -> Result<HalfInt> {
        let n = self.int()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.skip_ws();
            let d = self.digits()?;
            if d != 2 {
                return Err(Error::Parse {
                    pos: at,
                    msg: "the only allowed denominator is 2".into(),
                });
            }
            Ok(HalfInt::from_doubled(n))
        } else {
            Ok(HalfInt::from_int(n))
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = Term::default();
        loop {
            self.factor(&mut t)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(t);
            }
        }
    }

    fn factor(&mut self, t: &mut Term) -> Result<()> {
        let at = self.skip_ws();
        let Some(sym) = self.peek() else {
            return Err(self.error("expected a factor, found end of input"));
        };
        match sym {
            b'1' | b'0' => {
                self.pos += 1;
                if matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "only the constants 0 and 1 may appear as factors".into(),
                    });
                }
                if sym == b'0' {
                    t.zero = true;
                }
                return Ok(());
            }
            b'x' | b'a' | b'b' | b'c' | b'd' => self.pos += 1,
            other => {
                return Err(self.error(format!("expected one of x, a, b, c, d, found {:?}", other as char)));
            }
        }
        self.expect(b'(')?;
        let sub_at = self.skip_ws();
        let sub = self.subscript()?;
        self.expect(b')')?;
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            let e_at = self.skip_ws();
            let e = self.digits()?;
            if e < 1 || e > i64::from(u32::MAX) {
                return Err(Error::Parse {
                    pos: e_at,
                    msg: "exponents must be positive".into(),
                });
            }
            e as u32
        } else {
            1
        };
        let integral = |s: HalfInt| {
            s.to_int().ok_or_else(|| Error::Parse {
                pos: sub_at,
                msg: format!("{} takes an integer subscript, found {s}", sym as char),
            })
        };
        let half_odd = |s: HalfInt| {
            if s.is_half_odd() {
                Ok(s)
            } else {
                Err(Error::Parse {
                    pos: sub_at,
                    msg: format!("{} takes a subscript in Z + 1/2, found {s}", sym as char),
                })
            }
        };
        if sym != b'x' && exp != 1 {
            return Err(Error::Parse {
                pos: at,
                msg: format!("open string {} cannot be raised to a power", sym as char),
            });
        }
        match sym {
            b'x' => {
                let k = integral(sub)?;
                if k == 0 {
                    t.zero = true;
                } else {
                    t.closed.push((k, exp));
                }
            }
            b'a' => t.a.push((half_odd(sub)?, at)),
            b'b' => t.b.push((half_odd(sub)?, at)),
            b'c' => t.c.push((integral(sub)?, at)),
            b'd' => t.d.push((integral(sub)?, at)),
            _ => unreachable!(),
        }
        Ok(())
    }
}

impl Term {
    fn into_generator(self, complex: Complex, start: usize) -> Result<Option<Generator>> {
        let counts = (self.a.len(), self.b.len(), self.c.len(), self.d.len());
        // A bare `0` is the zero of every complex.
        if self.zero && counts == (0, 0, 0, 0) {
            return Ok(None);
        }
        let tag = match (complex, counts) {
            (Complex::F00, (0, 0, 0, 0)) => OpenTag::Empty,
            (Complex::F11, (0, 0, 1, 0)) => OpenTag::ArcC(self.c[0].0),
            (Complex::F02, (1, 0, 0, 0)) => OpenTag::ArcA(self.a[0].0),
            (Complex::F22, (1, 1, 0, 0)) => OpenTag::Insular(self.a[0].0, self.b[0].0),
            (Complex::F22, (0, 0, 1, 1)) => OpenTag::Traversing(self.c[0].0, self.d[0].0),
            _ => {
                let wanted = match complex {
                    Complex::F00 => "no open strings",
                    Complex::F11 => "exactly one c",
                    Complex::F02 => "exactly one a",
                    Complex::F22 => "either one a and one b, or one c and one d",
                };
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("a term of {complex} must contain {wanted}"),
                });
            }
        };
        if self.zero {
            return Ok(None);
        }
        Ok(Some(Generator::new(tag, ClosedMonomial::from_pairs(self.closed))))
    }
}
