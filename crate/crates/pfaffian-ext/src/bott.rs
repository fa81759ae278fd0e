//! Borel–Weil–Bott evaluation on Grassmannians, used as an independent
//! oracle for the closed-form Ext decompositions.
//!
//! For a two-block weight `(alpha, beta)` on the tautological quotient and
//! sub-bundle of the Grassmannian of `r`-dimensional quotients, the algorithm
//! adds `rho = (n-1, ..., 0)` to the concatenated weight; a repeated entry
//! means all cohomology vanishes, otherwise sorting yields the unique
//! nonvanishing degree (the inversion count) and the dominant weight of the
//! resulting dual irreducible.
//!
//! The subquotient Ext modules are then assembled bundle-weight by
//! bundle-weight: the sub-bundle weight is pinned by the label, the quotient
//! weight runs over all dominant paired weights bounded by `z_1 + n - 2l`,
//! and the cohomological degree is re-indexed into an Ext index. Since the
//! quotient weights are unbounded below, the enumeration is driven by the
//! requested degree window, which pins the total size of each candidate
//! weight.

use crate::error::{Error, Result};
use crate::partition::{choose2, Context, DominantWeight};
use crate::subquotient::{DegreeWindow, ExtDecomposition, SubquotLabel};

/// A two-block weight on the Grassmannian of `r`-dimensional quotients of an
/// `n`-dimensional space: `alpha` lives on the quotient bundle (length `r`),
/// `beta` on the sub-bundle (length `n - r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottInput {
    pub alpha: DominantWeight,
    pub beta: DominantWeight,
    pub n: usize,
    pub r: usize,
}

impl BottInput {
    pub fn new(alpha: DominantWeight, beta: DominantWeight, n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(Error::OutOfRange(format!("need r <= n, got r={r}, n={n}")));
        }
        if alpha.len() != r || beta.len() != n - r {
            return Err(Error::InvalidWeight(format!(
                "block lengths must be ({r}, {}), got ({}, {})",
                n - r,
                alpha.len(),
                beta.len()
            )));
        }
        Ok(BottInput { alpha, beta, n, r })
    }
}

/// Outcome of one Bott evaluation: either all cohomology vanishes, or exactly
/// one degree `q` carries the dual irreducible of highest weight `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottResult {
    Zero,
    Cohomology { q: i64, lambda: DominantWeight },
}

/// Runs Bott's algorithm on a two-block weight.
pub fn bott_evaluate(input: &BottInput) -> BottResult {
    let n = input.n;
    let mut shifted: Vec<i64> = Vec::with_capacity(n);
    for (i, &g) in input
        .alpha
        .entries()
        .iter()
        .chain(input.beta.entries())
        .enumerate()
    {
        // rho_i = n - i for 1-based i.
        shifted.push(g + (n - 1 - i) as i64);
    }

    let mut q = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            if shifted[i] == shifted[j] {
                return BottResult::Zero;
            }
            if shifted[i] < shifted[j] {
                q += 1;
            }
        }
    }

    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let lambda: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &s)| s - (n - 1 - i) as i64)
        .collect();
    BottResult::Cohomology {
        q,
        lambda: DominantWeight::new(lambda).expect("sorted strict entries give a dominant weight"),
    }
}

/// Ext decomposition of a subquotient computed through the Grassmannian
/// oracle, truncated to the degree window.
///
/// `beta` is the doubled partition shifted by `n - 1` beyond row `2l`; the
/// quotient-bundle weights are the paired dominant weights `(a_1, a_1, ...,
/// a_l, a_l)` with `a_1 <= z_1 + n - 2l`. A term found in cohomological
/// degree `q` lands in Ext index `binom(n,2) - binom(2l,2) - q` and internal
/// degree `-(|alpha| + |beta|)/2`.
pub fn ext_via_bott(
    label: &SubquotLabel,
    ctx: &Context,
    window: &DegreeWindow,
) -> Result<ExtDecomposition> {
    let n = ctx.n();
    let l = label.l();
    let mut out = ExtDecomposition::new();
    if window.is_empty() {
        return Ok(out);
    }

    let w = label.doubled_padded(ctx);
    let beta: Vec<i64> = (2 * l..n).map(|i| w[i] + n as i64 - 1).collect();
    let beta_size: i64 = beta.iter().sum();
    let beta = DominantWeight::new(beta)?;
    let a_max = label.z().part(1) + n as i64 - 2 * l as i64;
    let index_base = choose2(n as i64) - choose2(2 * l as i64);

    let (size_lo, size_hi) = window.size_range();
    for size in size_lo..=size_hi {
        let alpha_size = size - beta_size;
        if alpha_size % 2 != 0 {
            continue;
        }
        for halves in decreasing_tuples(l, a_max, alpha_size / 2) {
            let alpha: Vec<i64> = halves.iter().flat_map(|&a| [a, a]).collect();
            let input = BottInput::new(DominantWeight::new(alpha)?, beta.clone(), n, 2 * l)?;
            if let BottResult::Cohomology { q, lambda } = bott_evaluate(&input) {
                debug_assert_eq!(lambda.size(), size);
                out.add_term(index_base - q, lambda, 1);
            }
        }
    }
    Ok(out)
}

/// Weakly decreasing integer `len`-tuples with first entry at most `bound`
/// and the given sum. Entries may be negative, but the sum and bound pin a
/// finite set.
fn decreasing_tuples(len: usize, bound: i64, sum: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    rec_tuples(len, bound, sum, &mut cur, &mut out);
    out
}

fn rec_tuples(len: usize, bound: i64, remaining: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == len {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let slots_left = (len - cur.len()) as i64;
    // Each remaining entry is at most `bound`, so feasibility forces the next
    // entry at least ceil(remaining / slots_left).
    let lo = num_ceil_div(remaining, slots_left);
    for v in (lo..=bound).rev() {
        cur.push(v);
        rec_tuples(len, v, remaining - v, cur, out);
        cur.pop();
    }
}

fn num_ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::subquotient::ext_closed_form;

    fn weight(entries: &[i64]) -> DominantWeight {
        DominantWeight::new(entries.to_vec()).unwrap()
    }

    fn evaluate(alpha: &[i64], beta: &[i64], n: usize) -> BottResult {
        let input = BottInput::new(weight(alpha), weight(beta), n, alpha.len()).unwrap();
        bott_evaluate(&input)
    }

    #[test]
    fn bott_structure_sheaf() {
        assert_eq!(
            evaluate(&[0, 0], &[0, 0, 0, 0], 6),
            BottResult::Cohomology {
                q: 0,
                lambda: weight(&[0, 0, 0, 0, 0, 0])
            }
        );
    }

    #[test]
    fn bott_top_twist() {
        assert_eq!(
            evaluate(&[-1, -1], &[5, 5, 5, 5], 6),
            BottResult::Cohomology {
                q: 8,
                lambda: weight(&[3, 3, 3, 3, 3, 3])
            }
        );
    }

    #[test]
    fn bott_repeated_entry_vanishes() {
        assert_eq!(evaluate(&[0, 0], &[1, 0], 4), BottResult::Zero);
    }

    #[test]
    fn bott_preserves_size_and_bounds_degree() {
        for (alpha, beta, n) in [
            (vec![2, 2], vec![7, 7, 5, 5], 6),
            (vec![-3, -3], vec![6, 6, 6, 5], 6),
            (vec![1, 1, 0, 0], vec![8, 8, 6], 7),
        ] {
            let r = alpha.len();
            let total: i64 = alpha.iter().chain(beta.iter()).sum();
            match evaluate(&alpha, &beta, n) {
                BottResult::Zero => {}
                BottResult::Cohomology { q, lambda } => {
                    assert_eq!(lambda.size(), total);
                    assert!(q <= (r * (n - r)) as i64);
                }
            }
        }
    }

    #[test]
    fn oracle_reproduces_grassmannian_example() {
        let ctx = Context::new(6).unwrap();
        let window = DegreeWindow::new(-9, 0);
        let label = SubquotLabel::new(Partition::empty(), 1, &ctx).unwrap();
        let dec = ext_via_bott(&label, &ctx, &window).unwrap();
        // All terms sit in Ext^6 and are (3,3,3,3,a,a) with a <= 3, truncated
        // by the window on the degree -6-a.
        assert_eq!(dec.indices(), vec![6]);
        for (j, degree, lambda, mult) in dec.iter() {
            assert_eq!(j, 6);
            assert_eq!(mult, 1);
            let e = lambda.entries();
            assert_eq!(&e[..4], &[3, 3, 3, 3]);
            assert_eq!(e[4], e[5]);
            assert!(e[4] <= 3);
            assert_eq!(degree, -6 - e[4]);
        }
        assert_eq!(dec.num_terms(), 10); // a runs over -6..=3
        assert_eq!(dec, ext_closed_form(&label, &ctx, &window));
    }

    #[test]
    fn oracle_finds_top_ext_terms() {
        let ctx = Context::new(6).unwrap();

        let label = SubquotLabel::new(Partition::new(vec![1, 1, 1]).unwrap(), 0, &ctx).unwrap();
        let dec = ext_via_bott(&label, &ctx, &DegreeWindow::new(-18, -18)).unwrap();
        assert_eq!(dec.multiplicity(15, &weight(&[6, 6, 6, 6, 6, 6])), 1);
        assert_eq!(dec.num_terms(), 1);

        let label = SubquotLabel::new(Partition::new(vec![1, 1]).unwrap(), 0, &ctx).unwrap();
        let dec = ext_via_bott(&label, &ctx, &DegreeWindow::new(-17, -17)).unwrap();
        assert_eq!(dec.multiplicity(15, &weight(&[6, 6, 6, 6, 5, 5])), 1);
        assert_eq!(dec.num_terms(), 1);
    }
}
