//! Power series in `T` with motivic coefficients, truncated at a fixed order.

use crate::ring::{MotivicClass, RingError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Coefficient of `T^i` at index `i`, for `i = 0..=order`.
    coeffs: Vec<MotivicClass>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![MotivicClass::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = MotivicClass::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `Σ_{k ≥ first} x^k T^{k·step}`.
    ///
    /// `first = 0` gives `1/(1 - x T^step)`, `first = 1` gives
    /// `x T^step/(1 - x T^step)`.
    pub fn geometric(x: &MotivicClass, step: usize, first: u32, order: usize) -> Result<Self, RingError> {
        assert!(step > 0, "geometric series needs a positive step");
        let mut s = Self::zero(order);
        let mut power = x.smash_pow(first)?;
        let mut k = first as usize;
        while k * step <= order {
            s.coeffs[k * step] = power.clone();
            power = power.smash(x)?;
            k += 1;
        }
        Ok(s)
    }

    pub fn coeff(&self, i: usize) -> &MotivicClass {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<MotivicClass> {
        self.coeffs
    }

    pub fn scale(&self, c: &MotivicClass) -> Result<Self, RingError> {
        let coeffs = self.coeffs.iter().map(|a| c.smash(a)).collect::<Result<_, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), other.order());
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, RingError> {
        assert_eq!(self.order(), other.order());
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a.smash(b)?;
                let slot = &mut out.coeffs[i + j];
                *slot = std::mem::take(slot) + prod;
            }
        }
        Ok(out)
    }
}
