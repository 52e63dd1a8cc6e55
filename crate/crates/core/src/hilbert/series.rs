use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::partition::{check_bound, enumerate_plane_partitions, PlanePartition};
use super::tangent::{tangent_character, Weight, WeightSplit};
use super::HilbertError;
use crate::ring::{euler_specialize, AtomTable, HalfInt, MotivicClass};
use crate::series::TruncatedSeries;

/// Coefficients of `T^0..=T^order` in
/// `Π_{m≥1} Π_{k=0}^{m-1} (1 - L^{k+2-m/2} T^m)^{-1}`.
pub fn bbs_series(order: usize) -> Vec<MotivicClass> {
    let mut z = TruncatedSeries::one(order);
    for m in 1..=order {
        for k in 0..m {
            let twice = 2 * k as i64 + 4 - m as i64;
            let factor = TruncatedSeries::geometric(&MotivicClass::lefschetz_half(twice), m, 0, order)
                .expect("Lefschetz powers always multiply");
            z = z.mul(&factor).expect("Lefschetz powers always multiply");
        }
    }
    z.into_coeffs()
}

/// Splits of the tangent characters of every partition of size `n`, in
/// enumeration order. Per-partition work runs in parallel.
fn splits(n: usize, subgroup: Weight) -> Result<Vec<(PlanePartition, u32, WeightSplit)>, HilbertError> {
    let parts = enumerate_plane_partitions(n)?;
    let results: Vec<Result<_, HilbertError>> = parts
        .into_par_iter()
        .map(|p| {
            let ch = tangent_character(&p)?;
            let split = ch.split(subgroup);
            Ok((p, ch.dimension(), split))
        })
        .collect();
    results.into_iter().collect()
}

/// Coefficients of `T^0..=T^order` in `Σ_n Σ_{|P|=n} L^{-ind(P)/2} T^n`.
pub fn conjecture_series(order: usize, subgroup: Weight) -> Result<Vec<MotivicClass>, HilbertError> {
    check_bound(order)?;
    (0..=order)
        .map(|n| {
            let mut total = MotivicClass::zero();
            for (p, _, split) in splits(n, subgroup)? {
                if !split.is_generic() {
                    return Err(HilbertError::NonGenericAction {
                        partition: p.to_string(),
                        weights: split.zero.iter().map(|(w, _)| *w).collect(),
                    });
                }
                total = total + MotivicClass::lefschetz(HalfInt::from_twice(-split.index()));
            }
            Ok(total)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Equal,
    EulerEqual,
    Differs,
    NonGeneric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompareStatus {
    AllEqual,
    EulerEqualOnly,
    Differs,
    NonGeneric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub partition: String,
    pub tangent_dim: u32,
    pub positive: u32,
    pub negative: u32,
    /// Tangent directions with zero pairing, counted with multiplicity.
    pub zero: u32,
    /// `None` when the subgroup is not generic at this point.
    pub index: Option<i64>,
    /// `(-1)^index`.
    pub sign: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRow {
    pub n: usize,
    pub bbs: String,
    pub bbs_euler: i64,
    pub conjecture: Option<String>,
    pub conjecture_euler: Option<i64>,
    /// `Σ_{|P|=n} (-1)^{ind(P)}`, summed from the per-partition records.
    pub signed_partition_sum: Option<i64>,
    /// How many partitions satisfy `(-1)^{ind(P)} = (-1)^n`.
    pub sign_matches: usize,
    pub partitions: Vec<PartitionRecord>,
    pub status: RowStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub order: usize,
    pub weights: Weight,
    pub rows: Vec<CompareRow>,
    pub status: CompareStatus,
}

fn to_i64(x: num_bigint::BigInt) -> i64 {
    i64::try_from(x).expect("Euler values at desk scale fit in i64")
}

/// Side-by-side comparison of the product formula with the fixed-point sum.
///
/// Unlike [`conjecture_series`], a non-generic subgroup does not abort: the
/// affected rows are marked [`RowStatus::NonGeneric`] and keep their
/// per-partition records.
pub fn compare(order: usize, subgroup: Weight) -> Result<CompareReport, HilbertError> {
    check_bound(order)?;
    let table = AtomTable::new();
    let bbs = bbs_series(order);
    let mut rows = Vec::with_capacity(order + 1);
    for (n, bbs_coeff) in bbs.iter().enumerate() {
        let bbs_euler = to_i64(euler_specialize(bbs_coeff, &table).expect("pure Lefschetz"));
        let mut records = Vec::new();
        let mut conjecture = Some(MotivicClass::zero());
        for (p, dim, split) in splits(n, subgroup)? {
            let zero: u32 = split.zero.iter().map(|(_, m)| m).sum();
            let index = split.is_generic().then(|| split.index());
            match (&mut conjecture, index) {
                (Some(total), Some(ind)) => {
                    *total = std::mem::take(total) + MotivicClass::lefschetz(HalfInt::from_twice(-ind));
                }
                _ => conjecture = None,
            }
            records.push(PartitionRecord {
                partition: p.to_string(),
                tangent_dim: dim,
                positive: split.positive,
                negative: split.negative,
                zero,
                index,
                sign: index.map(|i| if i % 2 == 0 { 1 } else { -1 }),
            });
        }
        let parity = if n % 2 == 0 { 1 } else { -1 };
        let sign_matches = records.iter().filter(|r| r.sign == Some(parity)).count();
        let signed_partition_sum = records.iter().map(|r| r.sign).sum::<Option<i64>>();
        let conjecture_euler =
            conjecture.as_ref().map(|c| to_i64(euler_specialize(c, &table).expect("pure Lefschetz")));
        let status = match (&conjecture, conjecture_euler) {
            (None, _) => RowStatus::NonGeneric,
            (Some(c), _) if c == bbs_coeff => RowStatus::Equal,
            (_, Some(e)) if e == bbs_euler => RowStatus::EulerEqual,
            _ => RowStatus::Differs,
        };
        rows.push(CompareRow {
            n,
            bbs: bbs_coeff.to_string(),
            bbs_euler,
            conjecture: conjecture.map(|c| c.to_string()),
            conjecture_euler,
            signed_partition_sum,
            sign_matches,
            partitions: records,
            status,
        });
    }
    let status = if rows.iter().any(|r| r.status == RowStatus::NonGeneric) {
        CompareStatus::NonGeneric
    } else if rows.iter().all(|r| r.status == RowStatus::Equal) {
        CompareStatus::AllEqual
    } else if rows.iter().all(|r| matches!(r.status, RowStatus::Equal | RowStatus::EulerEqual)) {
        CompareStatus::EulerEqualOnly
    } else {
        CompareStatus::Differs
    };
    Ok(CompareReport { order, weights: subgroup, rows, status })
}
