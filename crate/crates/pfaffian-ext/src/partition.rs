//! Partitions, dominant weights and exact Weyl dimensions.
//!
//! Everything downstream (invariant ideals, Ext decompositions, cohomology
//! tables) is indexed by integer partitions and GL(n) dominant weights.
//! Partitions are value types normalized to carry no trailing zeros, so
//! `(2,1)` and `(2,1,0)` are the same value; the nominal number of parts is
//! always supplied contextually. All dimension arithmetic is exact
//! (`num_bigint`), since Weyl dimensions overflow `u64` already for modest
//! weights.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Ambient setup: the size `n` of the skew-symmetric matrices. Partitions
/// indexing irreducibles of the coordinate ring have at most `m = floor(n/2)`
/// parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Context {
    n: usize,
}

impl Context {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidContext(format!("need n >= 2, got {n}")));
        }
        Ok(Context { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m = floor(n/2)`.
    pub fn m(&self) -> usize {
        self.n / 2
    }

    /// Number of variables of the coordinate ring, `binom(n,2)`.
    pub fn num_vars(&self) -> i64 {
        let n = self.n as i64;
        n * (n - 1) / 2
    }
}

/// A partition: weakly decreasing non-negative integers, stored without
/// trailing zeros.
///
/// The derived `Ord` is lexicographic (used for deterministic iteration
/// order); the containment partial order of Young diagrams is [`Partition::fits_in`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: impl Into<Vec<i64>>) -> Result<Self> {
        let mut parts = parts.into();
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.last().is_some_and(|&p| p < 0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be non-negative, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Nonzero parts, in weakly decreasing order.
    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 1-based, zero beyond the stored parts.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    /// Sum of all parts.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Height of the `j`-th column of the Young diagram (1-based), i.e. the
    /// `j`-th part of the conjugate partition.
    pub fn column_height(&self, j: usize) -> i64 {
        if j == 0 {
            return self.0.len() as i64;
        }
        self.0.iter().filter(|&&p| p >= j as i64).count() as i64
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols as usize).map(|j| self.column_height(j)).collect();
        Partition(parts)
    }

    /// The first `c` columns of the diagram: part-wise `min(p, c)`.
    pub fn truncate_columns(&self, c: i64) -> Partition {
        debug_assert!(c >= 0);
        Partition(
            self.0
                .iter()
                .map(|&p| p.min(c))
                .take_while(|&p| p > 0)
                .collect(),
        )
    }

    /// Repeat every part twice: `(z1,z2,...)` becomes `(z1,z1,z2,z2,...)`.
    /// The result has even column lengths.
    pub fn double(&self) -> Partition {
        Partition(self.0.iter().flat_map(|&p| [p, p]).collect())
    }

    /// Containment of Young diagrams: true iff `self[i] <= other[i]` for all i.
    pub fn fits_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Pad with zeros to a dominant weight of the given length.
    pub fn to_weight(&self, len: usize) -> Result<DominantWeight> {
        if self.0.len() > len {
            return Err(Error::InvalidWeight(format!(
                "partition {self} has more than {len} parts"
            )));
        }
        let mut entries = self.0.clone();
        entries.resize(len, 0);
        DominantWeight::new(entries)
    }
}

impl fmt::Display for Partition {
    /// Text format: comma-separated parts; the empty partition is the empty
    /// string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A dominant GL weight: weakly decreasing integers of a fixed length
/// (entries may be negative).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: impl Into<Vec<i64>>) -> Result<Self> {
        let entries = entries.into();
        for w in entries.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidWeight(format!(
                    "entries must be weakly decreasing, got {entries:?}"
                )));
            }
        }
        Ok(DominantWeight(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All partitions with at most `max_parts` parts, each part at most
/// `part_bound`, and total size at most `size_bound` when given. Each
/// partition is produced exactly once.
pub fn enumerate_partitions(
    max_parts: usize,
    part_bound: i64,
    size_bound: Option<i64>,
) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec_partitions(max_parts, part_bound, size_bound, &mut stack, &mut out);
    out
}

fn rec_partitions(
    max_parts: usize,
    part_bound: i64,
    size_bound: Option<i64>,
    stack: &mut Vec<i64>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition(stack.clone()));
    if stack.len() == max_parts {
        return;
    }
    let used: i64 = stack.iter().sum();
    let mut hi = stack.last().copied().unwrap_or(part_bound);
    if let Some(bound) = size_bound {
        hi = hi.min(bound - used);
    }
    for next in 1..=hi {
        stack.push(next);
        rec_partitions(max_parts, part_bound, size_bound, stack, out);
        stack.pop();
    }
}

/// Partitions of exactly the given size, within the stated bounds.
pub fn partitions_of_size(max_parts: usize, part_bound: i64, size: i64) -> Vec<Partition> {
    enumerate_partitions(max_parts, part_bound, Some(size))
        .into_iter()
        .filter(|p| p.size() == size)
        .collect()
}

/// `x choose 2`, as a plain integer.
pub(crate) fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Exact binomial coefficient.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// The binomial polynomial `m (m-1) ... (m-k+1) / k!` evaluated at any
/// integer `m` (negative arguments included).
pub fn binomial_poly(m: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= m - i;
        den *= i + 1;
    }
    num / den
}

/// Dimension of the degree-`d` piece of a polynomial ring in `vars` variables.
pub fn sym_dimension(vars: i64, d: i64) -> BigInt {
    binomial(vars + d - 1, d)
}

/// Dimension of the irreducible GL(len) representation of highest weight
/// `lambda`, by the Weyl dimension formula
/// `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn weyl_dimension(lambda: &DominantWeight) -> BigInt {
    let v = lambda.entries();
    let n = v.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= v[i] - v[j] + (j as i64 - i as i64);
            den *= j as i64 - i as i64;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 1, 0]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(p(&[4, 3, 1]).truncate_columns(2), p(&[2, 2, 1]));
        assert_eq!(p(&[4, 3, 1]).truncate_columns(0), Partition::empty());
        assert_eq!(p(&[4, 3, 1]).truncate_columns(9), p(&[4, 3, 1]));
    }

    #[test]
    fn double_examples() {
        assert_eq!(p(&[2, 1]).double(), p(&[2, 2, 1, 1]));
        assert_eq!(Partition::empty().double(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).double(), p(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn containment_examples() {
        assert!(p(&[1, 1]).fits_in(&p(&[2, 1, 1])));
        assert!(!p(&[2]).fits_in(&p(&[1, 1])));
        assert!(Partition::empty().fits_in(&p(&[3, 1])));
        assert!(Partition::empty().fits_in(&Partition::empty()));
    }

    #[test]
    fn trailing_zeros_normalized() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[2, 1]).part(3), 0);
        assert_eq!(p(&[2, 1]).part(1), 2);
    }

    #[test]
    fn enumerate_examples() {
        let set = |ps: Vec<Partition>| {
            let mut v = ps;
            v.sort();
            v
        };
        assert_eq!(
            set(enumerate_partitions(2, 1, None)),
            set(vec![Partition::empty(), p(&[1]), p(&[1, 1])])
        );
        assert_eq!(
            set(enumerate_partitions(1, 3, None)),
            set(vec![Partition::empty(), p(&[1]), p(&[2]), p(&[3])])
        );
        assert_eq!(
            set(enumerate_partitions(3, 2, Some(2))),
            set(vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])])
        );
    }

    #[test]
    fn binomial_poly_at_negative_arguments() {
        assert_eq!(binomial_poly(-2, 3), BigInt::from(-4));
        assert_eq!(binomial_poly(5, 2), BigInt::from(10));
        assert_eq!(binomial_poly(-1, 0), BigInt::one());
        assert_eq!(binomial_poly(2, 4), BigInt::from(0));
    }

    #[test]
    fn weyl_dimension_examples() {
        for n in 2..=8usize {
            let mut vector = vec![0; n];
            vector[0] = 1;
            assert_eq!(
                weyl_dimension(&DominantWeight::new(vector).unwrap()),
                BigInt::from(n)
            );

            let mut ext2 = vec![0; n];
            ext2[0] = 1;
            ext2[1] = 1;
            assert_eq!(
                weyl_dimension(&DominantWeight::new(ext2).unwrap()),
                BigInt::from(n * (n - 1) / 2)
            );

            let det_power = DominantWeight::new(vec![5; n]).unwrap();
            assert_eq!(weyl_dimension(&det_power), BigInt::one());
        }
    }

    #[test]
    fn weyl_dimension_skew_example() {
        // dim S_(2,2,0,0,0,0) C^6 = 105 and dim of wedge^4 C^6 = 15; together
        // they exhaust the degree-2 piece of the coordinate ring for n = 6.
        let w22 = DominantWeight::new(vec![2, 2, 0, 0, 0, 0]).unwrap();
        let w1111 = DominantWeight::new(vec![1, 1, 1, 1, 0, 0]).unwrap();
        assert_eq!(weyl_dimension(&w22), BigInt::from(105));
        assert_eq!(weyl_dimension(&w1111), BigInt::from(15));
        assert_eq!(sym_dimension(15, 2), BigInt::from(120));
    }

    #[test]
    fn cauchy_degree_dimensions() {
        // The doubled-partition decomposition of the coordinate ring must
        // reproduce the dimension of each graded piece.
        for n in 2..=6usize {
            let ctx = Context::new(n).unwrap();
            for d in 0..=6i64 {
                let total: BigInt = partitions_of_size(ctx.m(), d, d)
                    .iter()
                    .map(|z| weyl_dimension(&z.double().to_weight(n).unwrap()))
                    .sum();
                assert_eq!(total, sym_dimension(ctx.num_vars(), d), "n={n} d={d}");
            }
        }
    }
}
