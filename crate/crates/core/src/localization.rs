//! Virtual indices and the torus-localization sum over fixed strata.

use serde::Deserialize;
use thiserror::Error;

use crate::ring::{parse, AtomTable, HalfInt, MotivicClass, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalizationError {
    /// Zero-weight tangent directions: the fixed point is not isolated.
    #[error("non-generic action: zero weight at tangent position(s) {0:?}")]
    NonGenericAction(Vec<usize>),
    #[error("strata file: {0}")]
    Json(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedStratum {
    pub name: String,
    pub motive: MotivicClass,
    pub index: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStratum {
    name: String,
    index: i64,
    motive: String,
}

/// Parses `[{"name","index","motive":"<expression>"}]`.
pub fn strata_from_json(text: &str, table: &AtomTable) -> Result<Vec<FixedStratum>, LocalizationError> {
    let raw: Vec<RawStratum> = serde_json::from_str(text).map_err(|e| LocalizationError::Json(e.to_string()))?;
    raw.into_iter()
        .map(|r| Ok(FixedStratum { name: r.name, motive: parse(&r.motive, table)?, index: r.index }))
        .collect()
}

/// `dim T_+ - dim T_-` for the given tangent weights.
pub fn virtual_index(weights: &[i64]) -> Result<i64, LocalizationError> {
    let zeros: Vec<usize> = weights.iter().enumerate().filter(|(_, w)| **w == 0).map(|(i, _)| i).collect();
    if !zeros.is_empty() {
        return Err(LocalizationError::NonGenericAction(zeros));
    }
    Ok(weights.iter().map(|w| w.signum()).sum())
}

/// `Σ_i L^{-ind_i/2} ⊙ motive_i`.
pub fn localize(strata: &[FixedStratum]) -> MotivicClass {
    strata.iter().map(|s| s.motive.twist(HalfInt::from_twice(-s.index))).sum()
}

/// The isolated-point case: `Σ_P L^{-ind_P/2}`.
pub fn isolated_sum(indices: &[i64]) -> MotivicClass {
    indices.iter().map(|&i| MotivicClass::lefschetz(HalfInt::from_twice(-i))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(index: i64) -> FixedStratum {
        FixedStratum { name: format!("p{index}"), motive: MotivicClass::one(), index }
    }

    #[test]
    fn indices() {
        assert_eq!(virtual_index(&[1, 2, 3]), Ok(3));
        assert_eq!(virtual_index(&[1, -1]), Ok(0));
        assert_eq!(virtual_index(&[-1, -1, -1]), Ok(-3));
        assert_eq!(virtual_index(&[]), Ok(0));
        assert_eq!(virtual_index(&[4, 0, -2, 0]), Err(LocalizationError::NonGenericAction(vec![1, 3])));
    }

    #[test]
    fn localize_examples() {
        let x = MotivicClass::mu(3) + MotivicClass::lefschetz_half(-5);
        let trivial = FixedStratum { name: "X".into(), motive: x.clone(), index: 0 };
        assert_eq!(localize(&[trivial]), x);
        assert!(localize(&[]).is_zero());
        assert_eq!(
            localize(&[point(-3), point(1)]),
            MotivicClass::lefschetz_half(3) + MotivicClass::lefschetz_half(-1)
        );
    }

    #[test]
    fn isolated_examples() {
        assert!(isolated_sum(&[]).is_zero());
        assert_eq!(isolated_sum(&[0, 0]), MotivicClass::integer(2));
        assert_eq!(isolated_sum(&[-3]), MotivicClass::lefschetz_half(3));
    }

    #[test]
    fn json_strata() {
        let table = AtomTable::new();
        let s = strata_from_json(r#"[{"name":"a","index":-3,"motive":"1"},{"name":"b","index":2,"motive":"[MU2]"}]"#, &table)
            .unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(localize(&s).to_string(), "L^{3/2} + L^{-1}*[MU2]");
        assert!(matches!(strata_from_json("[{}]", &table), Err(LocalizationError::Json(_))));
        assert!(matches!(
            strata_from_json(r#"[{"name":"a","index":0,"motive":"[Z]"}]"#, &table),
            Err(LocalizationError::Ring(RingError::UnknownAtom(_)))
        ));
    }
}
