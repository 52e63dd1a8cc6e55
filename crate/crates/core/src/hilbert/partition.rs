use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::HilbertError;

pub type Exponent = [u32; 3];

/// Environment variable overriding the default partition-size bound.
pub const SIZE_BOUND_ENV: &str = "MOTIVIC_MAX_PARTITION_SIZE";
pub const DEFAULT_SIZE_BOUND: usize = 12;

/// The configured bound on `|P|`: [`SIZE_BOUND_ENV`] if set and valid,
/// otherwise [`DEFAULT_SIZE_BOUND`].
pub fn size_bound() -> usize {
    std::env::var(SIZE_BOUND_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_BOUND)
}

pub(crate) fn check_bound(n: usize) -> Result<(), HilbertError> {
    let bound = size_bound();
    if n > bound {
        return Err(HilbertError::BoundExceeded { n, bound });
    }
    Ok(())
}

/// A finite downward-closed set of boxes in `Z^3_{≥0}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePartition {
    boxes: BTreeSet<Exponent>,
}

impl PlanePartition {
    pub fn empty() -> Self {
        PlanePartition { boxes: BTreeSet::new() }
    }

    /// Fails if `boxes` is not downward closed.
    pub fn from_boxes(boxes: impl IntoIterator<Item = Exponent>) -> Result<Self, HilbertError> {
        let boxes: BTreeSet<Exponent> = boxes.into_iter().collect();
        for b in &boxes {
            for axis in 0..3 {
                if b[axis] > 0 {
                    let mut below = *b;
                    below[axis] -= 1;
                    if !boxes.contains(&below) {
                        return Err(HilbertError::NotDownwardClosed(*b));
                    }
                }
            }
        }
        Ok(PlanePartition { boxes })
    }

    /// From a height matrix: `heights[i][j]` boxes stacked over `(i, j)`.
    pub fn from_heights(heights: &[Vec<u32>]) -> Result<Self, HilbertError> {
        let boxes = heights
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().enumerate().flat_map(move |(j, &h)| (0..h).map(move |k| [i as u32, j as u32, k]))
            })
            .collect::<Vec<_>>();
        Self::from_boxes(boxes)
    }

    pub fn boxes(&self) -> &BTreeSet<Exponent> {
        &self.boxes
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.boxes.contains(e)
    }

    /// Whether the signed exponent is a box.
    pub fn contains_signed(&self, e: &[i64; 3]) -> bool {
        if e.iter().any(|&c| c < 0) {
            return false;
        }
        self.boxes.contains(&[e[0] as u32, e[1] as u32, e[2] as u32])
    }

    /// Height matrix with trailing zeros trimmed.
    pub fn heights(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for b in &self.boxes {
            let (i, j) = (b[0] as usize, b[1] as usize);
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            if rows[i].len() <= j {
                rows[i].resize(j + 1, 0);
            }
            rows[i][j] += 1;
        }
        rows
    }

    /// Permutes coordinate axes: box `b` goes to `c` with `c[perm[a]] = b[a]`.
    pub fn permute_axes(&self, perm: [usize; 3]) -> PlanePartition {
        let boxes = self
            .boxes
            .iter()
            .map(|b| {
                let mut c = [0; 3];
                for a in 0..3 {
                    c[perm[a]] = b[a];
                }
                c
            })
            .collect();
        PlanePartition { boxes }
    }

    /// Minimal monomial generators of the ideal whose standard monomials are
    /// the boxes, in increasing order.
    pub fn ideal_generators(&self) -> Vec<Exponent> {
        let n = self.size() as u32;
        let mut gens = Vec::new();
        for a in 0..=n {
            for b in 0..=n {
                for c in 0..=n {
                    let g = [a, b, c];
                    if self.contains(&g) {
                        continue;
                    }
                    let minimal = (0..3).all(|axis| {
                        if g[axis] == 0 {
                            return true;
                        }
                        let mut below = g;
                        below[axis] -= 1;
                        self.contains(&below)
                    });
                    if minimal {
                        gens.push(g);
                    }
                }
            }
        }
        gens.sort();
        gens
    }
}

/// Rows of the height matrix separated by `/`, entries by `,`: `[2,1/1]`.
impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .heights()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

/// The monomial ideal `I ⊂ k[x,y,z]` of finite colength attached to a
/// plane partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub partition: PlanePartition,
    pub generators: Vec<Exponent>,
    pub colength: usize,
}

impl From<&PlanePartition> for MonomialIdeal {
    fn from(p: &PlanePartition) -> Self {
        MonomialIdeal { partition: p.clone(), generators: p.ideal_generators(), colength: p.size() }
    }
}

impl MonomialIdeal {
    pub fn contains(&self, e: &Exponent) -> bool {
        !self.partition.contains(e)
    }
}

/// All plane partitions of size exactly `n`, generated as height matrices
/// whose rows and columns are weakly decreasing.
pub fn enumerate_plane_partitions(n: usize) -> Result<Vec<PlanePartition>, HilbertError> {
    check_bound(n)?;
    let mut out = Vec::new();
    let mut current: Vec<Vec<u32>> = Vec::new();
    next_row(None, n as u32, &mut current, &mut out);
    Ok(out
        .into_iter()
        .map(|h| PlanePartition::from_heights(&h).expect("height matrices are downward closed"))
        .collect())
}

fn next_row(above: Option<&[u32]>, remaining: u32, current: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    let mut rows = Vec::new();
    let mut row = Vec::new();
    rows_under(above, remaining, &mut row, &mut rows);
    for r in rows {
        let used: u32 = r.iter().sum();
        current.push(r);
        let last = current.last().expect("just pushed").clone();
        next_row(Some(&last), remaining - used, current, out);
        current.pop();
    }
}

/// Nonempty weakly decreasing rows bounded entrywise by `above` with sum at
/// most `budget`.
fn rows_under(above: Option<&[u32]>, budget: u32, row: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if !row.is_empty() {
        out.push(row.clone());
    }
    let j = row.len();
    let cap_above = match above {
        Some(a) if j >= a.len() => return,
        Some(a) => a[j],
        None => budget,
    };
    let cap_left = row.last().copied().unwrap_or(u32::MAX);
    let cap = cap_above.min(cap_left).min(budget);
    for h in 1..=cap {
        row.push(h);
        rows_under(above, budget - h, row, out);
        row.pop();
    }
}

/// Coefficients of `q^1..=q^order` in `Π_{m≥1} (1 - q^m)^{-m}`.
pub fn macmahon_counts(order: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); order + 1];
    series[0] = BigInt::from(1);
    for m in 1..=order {
        // multiply by 1/(1 - q^m), m times
        for _ in 0..m {
            for i in m..=order {
                let prev = series[i - m].clone();
                series[i] += prev;
            }
        }
    }
    series.into_iter().skip(1).collect()
}
