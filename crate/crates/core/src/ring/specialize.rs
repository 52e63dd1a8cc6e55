//! Ring homomorphisms out of the motivic ring: the Euler characteristic
//! (`L^{1/2} ↦ -1`) and a one-variable weight polynomial (`L^{1/2} ↦ q^{1/2}`).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::class::MotivicClass;
use super::table::AtomTable;
use super::{HalfInt, RingError};

pub fn euler_specialize(x: &MotivicClass, table: &AtomTable) -> Result<BigInt, RingError> {
    let mut total = BigInt::zero();
    for (term, coeff) in x.terms() {
        let mut value = coeff.clone();
        if term.lpow().twice() % 2 != 0 {
            value = -value;
        }
        for (key, e) in term.atoms() {
            let euler = table
                .atom(&key.name)
                .and_then(|a| a.euler)
                .ok_or_else(|| RingError::MissingEuler(key.name.clone()))?;
            value *= BigInt::from(euler).pow(*e);
        }
        for u in term.units() {
            let g = table.bundle(u).ok_or_else(|| RingError::UnknownUnit(u.clone()))?;
            if g.euler_sign < 0 {
                value = -value;
            }
        }
        total += value;
    }
    Ok(total)
}

/// A Laurent polynomial in `q^{1/2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightPolynomial {
    coeffs: BTreeMap<HalfInt, BigInt>,
}

impl WeightPolynomial {
    pub fn monomial(exp: HalfInt, coeff: BigInt) -> Self {
        let mut p = Self::default();
        p.add_monomial(exp, coeff);
        p
    }

    fn add_monomial(&mut self, exp: HalfInt, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: HalfInt) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<HalfInt, BigInt> {
        &self.coeffs
    }

    pub fn mul(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = WeightPolynomial::default();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                out.add_monomial(*a + *b, ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_monomial(*e, c.clone());
        }
        out
    }
}

/// Highest power first: `q^{3/2} - 2*q + 1`.
impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (exp, coeff)) in self.coeffs.iter().rev().enumerate() {
            let sign = if coeff.is_negative() { "-" } else { "+" };
            if i == 0 {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = coeff.abs();
            let var = match exp.twice() {
                0 => None,
                2 => Some("q".to_string()),
                t if t % 2 == 0 => Some(format!("q^{{{}}}", t / 2)),
                t => Some(format!("q^{{{t}/2}}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

pub fn weight_specialize(x: &MotivicClass, table: &AtomTable) -> Result<WeightPolynomial, RingError> {
    let mut total = WeightPolynomial::default();
    for (term, coeff) in x.terms() {
        if let Some(u) = term.units().iter().next() {
            return Err(RingError::UnitPresent(u.clone()));
        }
        if let Some(k) = term.monodromic_atom() {
            return Err(RingError::MonodromicAtom(k.name.clone()));
        }
        let mut value = WeightPolynomial::monomial(term.lpow(), coeff.clone());
        for (key, e) in term.atoms() {
            let poly = table
                .atom(&key.name)
                .and_then(|a| a.poincare)
                .ok_or_else(|| RingError::MissingPoincare(key.name.clone()))?;
            let mut p = WeightPolynomial::default();
            for (exp, c) in poly {
                p.add_monomial(HalfInt::from_int(exp), BigInt::from(c));
            }
            for _ in 0..*e {
                value = value.mul(&p);
            }
        }
        total = total.add(&value);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse;

    fn table() -> AtomTable {
        AtomTable::from_json(
            r#"{"atoms":[{"name":"C","euler":-2,"poincare":{"1":1,"0":-2,"-1":0}},
                         {"name":"NoData"}],
                "bundles":[{"name":"g","euler_sign":-1},{"name":"h"}]}"#,
        )
        .unwrap()
    }

    fn e(s: &str) -> Result<BigInt, RingError> {
        let t = table();
        euler_specialize(&parse(s, &t).unwrap(), &t)
    }

    fn w(s: &str) -> Result<WeightPolynomial, RingError> {
        let t = table();
        weight_specialize(&parse(s, &t).unwrap(), &t)
    }

    #[test]
    fn euler_values() {
        assert_eq!(e("L").unwrap(), BigInt::from(1));
        assert_eq!(e("L^{1/2}").unwrap(), BigInt::from(-1));
        assert_eq!(e("L^{-3/2}").unwrap(), BigInt::from(-1));
        assert_eq!(e("[C]*[C]*L").unwrap(), BigInt::from(4));
        assert_eq!(e("U(g)").unwrap(), BigInt::from(-1));
        assert_eq!(e("U(h)").unwrap(), BigInt::from(1));
        assert_eq!(e("0").unwrap(), BigInt::from(0));
        assert!(matches!(e("[NoData]"), Err(RingError::MissingEuler(_))));
    }

    #[test]
    fn reduced_milnor_fibre_euler() {
        // PT - MU(n): n points minus one
        for n in 2..=12 {
            assert_eq!(e(&format!("1 - [MU{n}]")).unwrap(), BigInt::from(1 - n as i64));
        }
    }

    #[test]
    fn weight_values() {
        assert_eq!(w("L").unwrap().to_string(), "q");
        assert_eq!(w("L - 1").unwrap().to_string(), "q - 1");
        assert_eq!(w("[GM]").unwrap().to_string(), "q - 1");
        assert_eq!(w("L^{3/2} - 2*L^{-1/2}").unwrap().to_string(), "q^{3/2} - 2*q^{-1/2}");
        assert_eq!(w("[C]*L^{1/2}").unwrap().to_string(), "q^{3/2} - 2*q^{1/2}");
        assert!(matches!(w("[MU2]"), Err(RingError::MonodromicAtom(_))));
        assert!(matches!(w("U(h)"), Err(RingError::UnitPresent(_))));
        assert!(matches!(w("[NoData]"), Err(RingError::MissingPoincare(_))));
        assert_eq!(w("0").unwrap().to_string(), "0");
    }
}
