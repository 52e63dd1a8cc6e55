//! Torus characters of `Hom_S(I, S/I)` at monomial ideals.
//!
//! For a weight `w ∈ Z^3`, a homogeneous homomorphism of degree `w` sends each
//! minimal generator `x^g` to `c_g · x^{g+w}`, where the coefficient is forced
//! to vanish unless `g + w` is a box. The pairwise syzygies
//! `(lcm/x^g)·φ(x^g) = (lcm/x^h)·φ(x^h)` then reduce to `c_g = c_h` whenever
//! `lcm(g,h) + w` is a box (both sides are multiples of `x^{lcm+w}`), with the
//! absent side read as 0. The weight-`w` piece has dimension
//! `#free coefficients - rank(constraints)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::partition::{check_bound, PlanePartition};
use super::HilbertError;
use crate::linalg::rank;

pub type Weight = [i64; 3];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TangentCharacter {
    pub weights: BTreeMap<Weight, u32>,
}

/// How a character splits under a one-parameter subgroup `(a,b,c)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightSplit {
    pub positive: u32,
    pub negative: u32,
    /// Weights with zero pairing, with multiplicity.
    pub zero: Vec<(Weight, u32)>,
}

impl WeightSplit {
    pub fn is_generic(&self) -> bool {
        self.zero.is_empty()
    }

    pub fn index(&self) -> i64 {
        i64::from(self.positive) - i64::from(self.negative)
    }
}

impl TangentCharacter {
    pub fn dimension(&self) -> u32 {
        self.weights.values().sum()
    }

    pub fn split(&self, subgroup: Weight) -> WeightSplit {
        let mut s = WeightSplit::default();
        for (w, &mult) in &self.weights {
            let pairing: i64 = w.iter().zip(subgroup).map(|(x, y)| x * y).sum();
            match pairing.signum() {
                1 => s.positive += mult,
                -1 => s.negative += mult,
                _ => s.zero.push((*w, mult)),
            }
        }
        s
    }
}

fn add(a: [u32; 3], w: Weight) -> Weight {
    [i64::from(a[0]) + w[0], i64::from(a[1]) + w[1], i64::from(a[2]) + w[2]]
}

pub fn tangent_character(p: &PlanePartition) -> Result<TangentCharacter, HilbertError> {
    check_bound(p.size())?;
    let gens = p.ideal_generators();
    let candidates: BTreeSet<Weight> = p
        .boxes()
        .iter()
        .flat_map(|b| {
            gens.iter().map(move |g| {
                [i64::from(b[0]) - i64::from(g[0]), i64::from(b[1]) - i64::from(g[1]), i64::from(b[2]) - i64::from(g[2])]
            })
        })
        .collect();

    let mut weights = BTreeMap::new();
    for w in candidates {
        // column index of each generator whose image can be nonzero
        let mut column = vec![None; gens.len()];
        let mut free = 0usize;
        for (i, g) in gens.iter().enumerate() {
            if p.contains_signed(&add(*g, w)) {
                column[i] = Some(free);
                free += 1;
            }
        }
        if free == 0 {
            continue;
        }
        let mut rows = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if column[i].is_none() && column[j].is_none() {
                    continue;
                }
                let (g, h) = (gens[i], gens[j]);
                let lcm = [g[0].max(h[0]), g[1].max(h[1]), g[2].max(h[2])];
                if !p.contains_signed(&add(lcm, w)) {
                    continue;
                }
                let mut row = vec![BigInt::from(0); free];
                if let Some(c) = column[i] {
                    row[c] += 1;
                }
                if let Some(c) = column[j] {
                    row[c] -= 1;
                }
                rows.push(row);
            }
        }
        let dim = free - rank(rows);
        if dim > 0 {
            weights.insert(w, dim as u32);
        }
    }
    Ok(TangentCharacter { weights })
}

/// `dim T_+ - dim T_-` at the fixed point `p` under the subgroup `(a,b,c)`.
pub fn index_of(p: &PlanePartition, subgroup: Weight) -> Result<i64, HilbertError> {
    let split = tangent_character(p)?.split(subgroup);
    if !split.is_generic() {
        return Err(HilbertError::NonGenericAction {
            partition: p.to_string(),
            weights: split.zero.iter().map(|(w, _)| *w).collect(),
        });
    }
    Ok(split.index())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::enumerate_plane_partitions;

    fn point() -> PlanePartition {
        PlanePartition::from_heights(&[vec![1]]).unwrap()
    }

    #[test]
    fn maximal_ideal() {
        let ch = tangent_character(&point()).unwrap();
        let expected = BTreeMap::from([([-1, 0, 0], 1), ([0, -1, 0], 1), ([0, 0, -1], 1)]);
        assert_eq!(ch.weights, expected);
        assert_eq!(ch.dimension(), 3);
    }

    #[test]
    fn empty_partition_has_zero_tangent_space() {
        assert_eq!(tangent_character(&PlanePartition::empty()).unwrap().dimension(), 0);
    }

    #[test]
    fn point_indices() {
        assert_eq!(index_of(&point(), [1, 1, 1]), Ok(-3));
        assert_eq!(index_of(&point(), [1, 1, -2]), Ok(-1));
        assert_eq!(index_of(&point(), [-1, -1, -1]), Ok(3));
    }

    #[test]
    fn zero_pairing_is_rejected() {
        assert!(matches!(
            index_of(&point(), [0, 1, 1]),
            Err(HilbertError::NonGenericAction { ref weights, .. }) if weights == &vec![[-1, 0, 0]]
        ));
        // (x^2, y, z): φ(y) = x has weight (1,-1,0), killed by the diagonal subgroup
        let two = PlanePartition::from_heights(&[vec![1], vec![1]]).unwrap();
        assert!(matches!(index_of(&two, [1, 1, 1]), Err(HilbertError::NonGenericAction { .. })));
    }

    #[test]
    fn smooth_range_dimensions() {
        for n in 0..=3 {
            for p in enumerate_plane_partitions(n).unwrap() {
                assert_eq!(tangent_character(&p).unwrap().dimension(), 3 * n as u32, "{p}");
            }
        }
    }
}
