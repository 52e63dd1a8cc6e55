//! Motivic integration over simple-normal-crossing resolution data.
//!
//! A model lists the components `E_i` of the special fibre with their
//! multiplicities `N_i` and the orders `μ_i` of the gauge form along them,
//! together with the classes `[Ẽ_J°]` of the Galois covers of the open
//! strata. Everything here is a closed formula over that data:
//!
//! - the degree-`m` integral
//!   `L^{-d} Σ_J (L-1)^{|J|-1} [Ẽ_J°] Σ_{k_i ≥ 1, Σ k_i N_i = m} L^{-Σ k_i μ_i}`,
//! - the volume Poincaré series
//!   `L^{-d} Σ_J (L-1)^{|J|-1} [Ẽ_J°] Π_{i∈J} L^{-μ_i}T^{N_i} / (1 - L^{-μ_i}T^{N_i})`,
//! - its negated limit at `T = ∞` (the motivic volume),
//! - the nearby cycle `Σ_J (1-L)^{|J|-1} [Ẽ_J°]` and the vanishing cycle
//!   `L^{-dim U/2} ⊙ ([U] - nearby)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

use crate::ring::{parse, AtomTable, HalfInt, MotivicClass, RingError};
use crate::series::TruncatedSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SncError {
    #[error("relative dimension must be at least 1")]
    BadReldim,
    #[error("duplicate component id {0}")]
    DuplicateComponent(String),
    #[error("component {0} has multiplicity 0")]
    ZeroMultiplicity(String),
    #[error("stratum refers to undeclared component {0}")]
    UnknownComponent(String),
    #[error("stratum keyed by the empty set")]
    EmptyStratum,
    #[error("stratum {0} is given twice")]
    DuplicateStratum(String),
    #[error("the vanishing cycle needs an ambient class")]
    MissingAmbient,
    #[error("model file: {0}")]
    Json(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SncComponent {
    pub id: String,
    /// `N_i`.
    pub mult: u32,
    /// `μ_i`, the order of the gauge form along the component.
    pub order: i64,
}

/// The ambient class `[U]` restricted to the critical locus, with `dim U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    pub class: MotivicClass,
    pub dim: u32,
}

pub type Stratum = BTreeSet<String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SncModel {
    pub reldim: u32,
    pub components: Vec<SncComponent>,
    /// Missing strata are empty (class 0).
    pub strata: BTreeMap<Stratum, MotivicClass>,
    pub ambient: Option<Ambient>,
}

fn stratum_label(j: &Stratum) -> String {
    format!("{{{}}}", j.iter().cloned().collect::<Vec<_>>().join(","))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    reldim: i64,
    #[serde(default)]
    ambient: Option<RawAmbient>,
    components: Vec<RawComponent>,
    #[serde(default)]
    strata: Vec<RawStratum>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAmbient {
    expr: String,
    #[serde(rename = "dimU")]
    dim_u: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    id: String,
    #[serde(rename = "N")]
    mult: u32,
    mu: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStratum {
    #[serde(rename = "J")]
    j: Vec<String>,
    class: String,
}

impl SncModel {
    pub fn new(reldim: u32) -> Self {
        SncModel { reldim, components: Vec::new(), strata: BTreeMap::new(), ambient: None }
    }

    pub fn with_component(mut self, id: &str, mult: u32, order: i64) -> Self {
        self.components.push(SncComponent { id: id.to_string(), mult, order });
        self
    }

    /// Adds `class` to the stratum `J` (so repeated calls accumulate).
    pub fn with_stratum<S: AsRef<str>>(mut self, j: &[S], class: MotivicClass) -> Self {
        let key: Stratum = j.iter().map(|s| s.as_ref().to_string()).collect();
        let slot = self.strata.entry(key).or_default();
        *slot = std::mem::take(slot) + class;
        self
    }

    pub fn with_ambient(mut self, class: MotivicClass, dim: u32) -> Self {
        self.ambient = Some(Ambient { class, dim });
        self
    }

    /// One component `x = 0` of multiplicity `n` and the Milnor fibre of
    /// `x^n` at the origin: `[Ẽ_1°] = [μ_n]` over a point of `A^1`.
    pub fn x_power(n: u32) -> Self {
        SncModel::new(1)
            .with_component("E1", n, 0)
            .with_stratum(&["E1"], MotivicClass::mu(n))
            .with_ambient(MotivicClass::one(), 1)
    }

    pub fn from_json(text: &str, table: &AtomTable) -> Result<Self, SncError> {
        let raw: RawModel = serde_json::from_str(text).map_err(|e| SncError::Json(e.to_string()))?;
        if raw.reldim < 1 {
            return Err(SncError::BadReldim);
        }
        let mut model = SncModel::new(u32::try_from(raw.reldim).map_err(|_| SncError::BadReldim)?);
        for c in raw.components {
            model.components.push(SncComponent { id: c.id, mult: c.mult, order: c.mu });
        }
        for s in raw.strata {
            let key: Stratum = s.j.iter().cloned().collect();
            if key.len() != s.j.len() {
                return Err(SncError::Json(format!("stratum {} repeats a component", stratum_label(&key))));
            }
            let class = parse(&s.class, table)?;
            if model.strata.contains_key(&key) {
                return Err(SncError::DuplicateStratum(stratum_label(&key)));
            }
            model.strata.insert(key, class);
        }
        if let Some(a) = raw.ambient {
            model.ambient = Some(Ambient { class: parse(&a.expr, table)?, dim: a.dim_u });
        }
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<(), SncError> {
        if self.reldim < 1 {
            return Err(SncError::BadReldim);
        }
        let mut ids = BTreeSet::new();
        for c in &self.components {
            if !ids.insert(c.id.as_str()) {
                return Err(SncError::DuplicateComponent(c.id.clone()));
            }
            if c.mult == 0 {
                return Err(SncError::ZeroMultiplicity(c.id.clone()));
            }
        }
        for j in self.strata.keys() {
            if j.is_empty() {
                return Err(SncError::EmptyStratum);
            }
            if let Some(bad) = j.iter().find(|id| !ids.contains(id.as_str())) {
                return Err(SncError::UnknownComponent(bad.clone()));
            }
        }
        Ok(())
    }

    fn component(&self, id: &str) -> &SncComponent {
        self.components.iter().find(|c| c.id == id).expect("validated model")
    }

    /// `(μ_i, N_i)` for each `i ∈ J`, in id order.
    fn factors(&self, j: &Stratum) -> Vec<(i64, u32)> {
        j.iter()
            .map(|id| {
                let c = self.component(id);
                (c.order, c.mult)
            })
            .collect()
    }

    /// The per-degree integral for ramification degree `m >= 1`.
    pub fn integral(&self, m: u32) -> Result<MotivicClass, SncError> {
        self.validate()?;
        let mut total = MotivicClass::zero();
        for (j, class) in &self.strata {
            let factors = self.factors(j);
            let inner = weighted_compositions(&factors, m);
            if inner.is_zero() {
                continue;
            }
            let coeff = MotivicClass::gm().smash_pow(j.len() as u32 - 1)?.smash(class)?;
            total = total + coeff.smash(&inner)?;
        }
        Ok(total.twist(HalfInt::from_int(-i64::from(self.reldim))))
    }

    pub fn volume_series(&self) -> Result<VolumeSeries, SncError> {
        self.validate()?;
        let mut summands = Vec::new();
        for (j, class) in &self.strata {
            if class.is_zero() {
                continue;
            }
            let coefficient = MotivicClass::gm()
                .smash_pow(j.len() as u32 - 1)?
                .smash(class)?
                .twist(HalfInt::from_int(-i64::from(self.reldim)));
            summands.push(SeriesSummand { stratum: j.clone(), coefficient, factors: self.factors(j) });
        }
        Ok(VolumeSeries { reldim: self.reldim, summands })
    }

    /// `-lim_{T→∞}` of the volume series, taken factor by factor.
    pub fn motivic_volume(&self) -> Result<MotivicClass, SncError> {
        Ok(-self.volume_series()?.limit_at_infinity())
    }

    pub fn nearby_cycle(&self) -> Result<MotivicClass, SncError> {
        self.validate()?;
        let mut total = MotivicClass::zero();
        for (j, class) in &self.strata {
            total = total + MotivicClass::one_minus_l().smash_pow(j.len() as u32 - 1)?.smash(class)?;
        }
        Ok(total)
    }

    /// `L^{-dim U/2} ⊙ ([U] - nearby)` at the critical value 0.
    pub fn vanishing_cycle(&self) -> Result<MotivicClass, SncError> {
        let ambient = self.ambient.as_ref().ok_or(SncError::MissingAmbient)?;
        let diff = &ambient.class - &self.nearby_cycle()?;
        Ok(diff.twist(HalfInt::from_twice(-i64::from(ambient.dim))))
    }
}

/// `Σ_{k_i ≥ 1, Σ k_i N_i = m} L^{-Σ k_i μ_i}` by exhaustive search.
fn weighted_compositions(factors: &[(i64, u32)], m: u32) -> MotivicClass {
    fn go(factors: &[(i64, u32)], remaining: u32, exponent: i64, out: &mut MotivicClass) {
        let Some((&(mu, n), rest)) = factors.split_first() else {
            if remaining == 0 {
                *out = std::mem::take(out) + MotivicClass::lefschetz(HalfInt::from_int(-exponent));
            }
            return;
        };
        // every later factor needs at least one copy of its N
        let reserved: u32 = rest.iter().map(|&(_, n)| n).sum();
        let mut k = 1;
        while k * n + reserved <= remaining {
            go(rest, remaining - k * n, exponent + i64::from(k) * mu, out);
            k += 1;
        }
    }
    let mut out = MotivicClass::zero();
    go(factors, m, 0, &mut out);
    out
}

/// `coefficient · Π (L^{-μ}T^{N}) / (1 - L^{-μ}T^{N})` over `factors = [(μ, N)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSummand {
    pub stratum: Stratum,
    pub coefficient: MotivicClass,
    pub factors: Vec<(i64, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeSeries {
    pub reldim: u32,
    pub summands: Vec<SeriesSummand>,
}

impl VolumeSeries {
    /// Coefficients of `T^0..=T^order` (the constant term is always 0).
    pub fn expand(&self, order: usize) -> Result<Vec<MotivicClass>, RingError> {
        let mut total = TruncatedSeries::zero(order);
        for s in &self.summands {
            let mut prod = TruncatedSeries::one(order);
            for &(mu, n) in &s.factors {
                let x = MotivicClass::lefschetz(HalfInt::from_int(-mu));
                prod = prod.mul(&TruncatedSeries::geometric(&x, n as usize, 1, order)?)?;
            }
            total = total.add(&prod.scale(&s.coefficient)?);
        }
        Ok(total.into_coeffs())
    }

    /// Each factor `xT^N/(1 - xT^N)` tends to `-1` as `T → ∞`.
    pub fn limit_at_infinity(&self) -> MotivicClass {
        self.summands
            .iter()
            .map(|s| if s.factors.len() % 2 == 0 { s.coefficient.clone() } else { -s.coefficient.clone() })
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }
}

impl fmt::Display for VolumeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", s.coefficient)?;
            for &(mu, n) in &s.factors {
                let x = MotivicClass::lefschetz(HalfInt::from_int(-mu));
                let t = if n == 1 { "T".to_string() } else { format!("T^{n}") };
                let x = if x == MotivicClass::one() { String::new() } else { format!("{x}*") };
                write!(f, "*{x}{t}/(1 - {x}{t})")?;
            }
        }
        Ok(())
    }
}

/// Motivic volume of a polydisc piece with `open_dims` open and
/// `closed_dims` closed unit-disc directions: closed balls have volume 1
/// and an open ball of dimension `a` has volume `L^{-a}`.
pub fn piece_volume(open_dims: u32, _closed_dims: u32) -> MotivicClass {
    MotivicClass::lefschetz(HalfInt::from_int(-i64::from(open_dims)))
}

/// The motivic volume of an annulus, which is zero.
pub fn annulus_volume() -> MotivicClass {
    MotivicClass::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::euler_specialize;
    use num_bigint::BigInt;

    fn l(twice: i64) -> MotivicClass {
        MotivicClass::lefschetz_half(twice)
    }

    #[test]
    fn validation() {
        let ok = SncModel::new(1).with_component("E1", 1, 0).with_stratum(&["E1"], MotivicClass::one());
        assert!(ok.validate().is_ok());
        let unknown = SncModel::new(1).with_component("E1", 1, 0).with_stratum(&["E2"], MotivicClass::one());
        assert_eq!(unknown.validate(), Err(SncError::UnknownComponent("E2".into())));
        let empty = SncModel::new(1).with_component("E1", 1, 0).with_stratum::<&str>(&[], MotivicClass::one());
        assert_eq!(empty.validate(), Err(SncError::EmptyStratum));
        assert_eq!(SncModel::new(0).validate(), Err(SncError::BadReldim));
        let dup = SncModel::new(1).with_component("E1", 1, 0).with_component("E1", 2, 0);
        assert_eq!(dup.validate(), Err(SncError::DuplicateComponent("E1".into())));
        let zero = SncModel::new(1).with_component("E1", 0, 0);
        assert_eq!(zero.validate(), Err(SncError::ZeroMultiplicity("E1".into())));
    }

    #[test]
    fn integral_examples() {
        let c = MotivicClass::mu(3);
        let m = SncModel::new(1).with_component("E1", 1, 0).with_stratum(&["E1"], c.clone());
        assert_eq!(m.integral(3).unwrap(), c.twist(HalfInt::from_int(-1)));
        let m2 = SncModel::new(1).with_component("E1", 2, 0).with_stratum(&["E1"], c);
        for odd in [1, 3, 5, 7] {
            assert!(m2.integral(odd).unwrap().is_zero());
        }
    }

    #[test]
    fn integral_two_components() {
        // J = {a,b}, N = (1,2), μ = (1,0), m = 5: (k_a,k_b) ∈ {(1,2),(3,1)}
        // inner = L^{-1} + L^{-3}; coefficient (L-1)·1; reldim 2.
        let m = SncModel::new(2)
            .with_component("a", 1, 1)
            .with_component("b", 2, 0)
            .with_stratum(&["a", "b"], MotivicClass::one());
        let expected = MotivicClass::gm().smash(&(l(-2) + l(-6))).unwrap().twist(HalfInt::from_int(-2));
        assert_eq!(m.integral(5).unwrap(), expected);
        assert!(m.integral(2).unwrap().is_zero());
    }

    #[test]
    fn series_examples() {
        assert!(SncModel::new(1).with_component("E1", 1, 0).volume_series().unwrap().is_zero());
        let s = SncModel::new(3).with_component("E1", 4, -2).with_stratum(&["E1"], MotivicClass::mu(4));
        let vs = s.volume_series().unwrap();
        assert_eq!(vs.summands.len(), 1);
        assert_eq!(vs.summands[0].coefficient, MotivicClass::mu(4).twist(HalfInt::from_int(-3)));
        assert_eq!(vs.summands[0].factors, vec![(-2, 4)]);
        assert_eq!(vs.to_string(), "(L^{-3}*[MU4])*L^{2}*T^4/(1 - L^{2}*T^4)");

        let unit = SncModel::new(1).with_component("E1", 1, 0).with_stratum(&["E1"], MotivicClass::one());
        let vs = unit.volume_series().unwrap();
        // coefficient L^{-1}; single geometric factor with ratio 1
        for c in &vs.expand(6).unwrap()[1..] {
            assert_eq!(c, &l(-2));
        }
        assert!(vs.expand(6).unwrap()[0].is_zero());
    }

    #[test]
    fn zero_series_expands_to_zero() {
        let vs = VolumeSeries { reldim: 1, summands: vec![] };
        assert!(vs.expand(5).unwrap().iter().all(MotivicClass::is_zero));
    }

    #[test]
    fn volume_examples() {
        assert!(SncModel::new(1).motivic_volume().unwrap().is_zero());
        let c = MotivicClass::mu(5) + l(3);
        let m = SncModel::new(2).with_component("E1", 3, 1).with_stratum(&["E1"], c.clone());
        assert_eq!(m.motivic_volume().unwrap(), c.twist(HalfInt::from_int(-2)));
    }

    #[test]
    fn nearby_examples() {
        for n in 2..=6 {
            assert_eq!(SncModel::x_power(n).nearby_cycle().unwrap(), MotivicClass::mu(n));
        }
        assert!(SncModel::new(2).nearby_cycle().unwrap().is_zero());
        let two = SncModel::new(1)
            .with_component("a", 2, 0)
            .with_component("b", 3, 0)
            .with_stratum(&["a"], MotivicClass::mu(2))
            .with_stratum(&["b"], MotivicClass::mu(3));
        assert_eq!(two.nearby_cycle().unwrap(), MotivicClass::mu(2) + MotivicClass::mu(3));
    }

    #[test]
    fn vanishing_examples() {
        let table = AtomTable::new();
        for n in 2..=6u32 {
            let v = SncModel::x_power(n).vanishing_cycle().unwrap();
            assert_eq!(v, (MotivicClass::one() - MotivicClass::mu(n)).twist(HalfInt::from_twice(-1)));
            assert_eq!(euler_specialize(&v, &table).unwrap(), BigInt::from(n - 1));
        }
        // f ≡ 0 on smooth U: no strata
        let u = MotivicClass::lefschetz(HalfInt::from_int(3));
        let flat = SncModel::new(3).with_ambient(u.clone(), 3);
        assert_eq!(flat.vanishing_cycle().unwrap(), u.twist(HalfInt::from_twice(-3)));
        assert_eq!(SncModel::new(1).vanishing_cycle(), Err(SncError::MissingAmbient));
    }

    #[test]
    fn x_squared_vanishing_cycle_is_upsilon_of_double_cover() {
        let v = SncModel::x_power(2).vanishing_cycle().unwrap();
        let upsilon = crate::ring::upsilon_from_cover(&MotivicClass::one(), &MotivicClass::mu(2));
        assert_eq!(v, upsilon);
        assert_eq!(v.rewrite_mu2(), MotivicClass::one());
        let table = AtomTable::new().with_bundle("g", 1);
        let ug = crate::ring::upsilon(&table, "g", &MotivicClass::one()).unwrap();
        assert_eq!(euler_specialize(&ug, &table).unwrap(), euler_specialize(&v, &table).unwrap());
    }

    #[test]
    fn ball_and_annulus_volumes() {
        assert_eq!(piece_volume(0, 4), MotivicClass::one());
        assert_eq!(piece_volume(3, 0), l(-6));
        assert_eq!(piece_volume(2, 5), l(-4));
        let x = l(1) + MotivicClass::mu(2);
        assert_eq!(&x + &annulus_volume(), x);
        assert_eq!(euler_specialize(&annulus_volume(), &AtomTable::new()).unwrap(), BigInt::from(0));
    }

    #[test]
    fn json_model() {
        let table = AtomTable::new();
        let text = r#"{"reldim":1,"ambient":{"expr":"1","dimU":1},
                       "components":[{"id":"E1","N":3,"mu":0}],
                       "strata":[{"J":["E1"],"class":"[MU3]"}]}"#;
        let m = SncModel::from_json(text, &table).unwrap();
        assert_eq!(m, SncModel::x_power(3));
        let bad = r#"{"reldim":1,"components":[{"id":"E1","N":3,"mu":0}],"strata":[{"J":["E9"],"class":"1"}]}"#;
        assert_eq!(SncModel::from_json(bad, &table), Err(SncError::UnknownComponent("E9".into())));
        let empty = r#"{"reldim":1,"components":[],"strata":[{"J":[],"class":"1"}]}"#;
        assert_eq!(SncModel::from_json(empty, &table), Err(SncError::EmptyStratum));
        let reldim0 = r#"{"reldim":0,"components":[]}"#;
        assert_eq!(SncModel::from_json(reldim0, &table), Err(SncError::BadReldim));
        let badexpr = r#"{"reldim":1,"components":[{"id":"E1","N":1,"mu":0}],"strata":[{"J":["E1"],"class":"[Q]"}]}"#;
        assert!(matches!(SncModel::from_json(badexpr, &table), Err(SncError::Ring(_))));
    }
}
