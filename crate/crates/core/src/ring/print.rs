use std::fmt;

use num_traits::{One, Signed};

use super::class::{MotivicClass, Term};
use super::HalfInt;

pub(crate) fn lefschetz_factor(p: HalfInt) -> Option<String> {
    match p.twice() {
        0 => None,
        2 => Some("L".to_string()),
        t if t % 2 == 0 => Some(format!("L^{{{}}}", t / 2)),
        t => Some(format!("L^{{{t}/2}}")),
    }
}

fn factors(term: &Term) -> Vec<String> {
    let mut out = Vec::new();
    out.extend(lefschetz_factor(term.lpow()));
    for (k, e) in term.atoms() {
        for _ in 0..*e {
            out.push(format!("[{}]", k.name));
        }
    }
    for u in term.units() {
        out.push(format!("U({u})"));
    }
    out
}

/// Canonical text: terms in canonical order, joined by ` + ` / ` - `,
/// factors joined by `*`. The zero class prints as `0`.
impl fmt::Display for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (term, coeff)) in self.terms().enumerate() {
            let negative = coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            let fs = factors(term);
            if fs.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&fs.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", fs.join("*"))?;
            }
        }
        Ok(())
    }
}
