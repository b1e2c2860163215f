//! Half-integer values and inclusive ranges on the command line: `3`,
//! `-5/2`, `0..8`, `1/2..9/2`.

use annulus_core::HalfInt;

/// One value or an inclusive range stepped by 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfRange {
    pub start: HalfInt,
    pub end: HalfInt,
}

impl HalfRange {
    pub fn values(&self) -> Vec<HalfInt> {
        let mut out = Vec::new();
        let mut v = self.start;
        while v <= self.end {
            out.push(v);
            v = v + 1;
        }
        out
    }
}

pub fn parse_half_range(s: &str) -> Result<HalfRange, String> {
    let parse = |t: &str| t.trim().parse::<HalfInt>().map_err(|e| format!("{t:?}: {e}"));
    let (start, end) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if end < start {
        return Err(format!("empty range {s:?}"));
    }
    if (end - start).to_int().is_none() {
        return Err(format!("range {s:?} mixes integers and halves"));
    }
    Ok(HalfRange { start, end })
}
