//! Filtration subquotients and their Ext decompositions in closed form.
//!
//! The quotient ring by an invariant ideal carries an equivariant filtration
//! whose factors are spans of irreducibles indexed by partitions that agree
//! with a base partition `z` beyond row `l`. This module computes, for such a
//! factor, the full GL-decomposition of its Ext modules into the dual
//! irreducibles `S_lambda W*` together with their internal degrees, and its
//! Castelnuovo–Mumford regularity.
//!
//! The combinatorial engine is the *weight family*: for every admissible
//! vector `t` a constraint system on dominant weights of length `n` whose
//! solutions are exactly the weights occurring in `Ext^j` at the index
//! `j = binom(n,2) - binom(2l,2) - 2|t|`. A family pins down `n - 2l` entries,
//! forces the remaining ones into equal adjacent pairs, and leaves the pair
//! values free subject to dominance; the trailing pairs are unbounded below,
//! which is why Ext modules decompose into infinitely many irreducibles and
//! every enumeration takes an explicit degree window.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{choose2, weyl_dimension, Context, DominantWeight, Partition};

/// Label `(z, l)` of a filtration subquotient.
///
/// Valid labels have `0 <= l <= m-1` and `z_1 = ... = z_{l+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubquotLabel {
    z: Partition,
    l: usize,
}

impl SubquotLabel {
    pub fn new(z: Partition, l: usize, ctx: &Context) -> Result<Self> {
        if l + 1 > ctx.m() {
            return Err(Error::InvalidLabel(format!(
                "l = {l} out of range for m = {}",
                ctx.m()
            )));
        }
        if z.len() > ctx.m() {
            return Err(Error::InvalidLabel(format!(
                "partition ({z}) has more than m = {} parts",
                ctx.m()
            )));
        }
        if z.part(1) != z.part(l + 1) {
            return Err(Error::InvalidLabel(format!(
                "first {} parts of ({z}) must be equal",
                l + 1
            )));
        }
        Ok(SubquotLabel { z, l })
    }

    pub fn z(&self) -> &Partition {
        &self.z
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// The doubled partition padded to a length-`n` vector (1-based access via
    /// index arithmetic on the callers' side).
    pub(crate) fn doubled_padded(&self, ctx: &Context) -> Vec<i64> {
        let mut w: Vec<i64> = self.z.double().parts().to_vec();
        w.resize(ctx.n(), 0);
        w
    }
}

impl fmt::Debug for SubquotLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J(({}), {})", self.z, self.l)
    }
}

/// Admissible `t`-vector for a label: `t_1 = l`, weakly decreasing,
/// non-negative, with consecutive differences dominated by the differences of
/// the doubled partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TVector(Vec<i64>);

impl TVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn last(&self) -> i64 {
        *self.0.last().expect("t-vector is never empty")
    }
}

/// All admissible `t`-vectors of a label. The first entry is pinned to `l`,
/// so the set is finite.
pub fn t_vectors(label: &SubquotLabel, ctx: &Context) -> Vec<TVector> {
    let n = ctx.n();
    let l = label.l;
    let len = n - 2 * l;
    let w = label.doubled_padded(ctx);
    let mut out = Vec::new();
    let mut cur = vec![label.l as i64];
    rec_t(&w, 2 * l, len, &mut cur, &mut out);
    out
}

fn rec_t(w: &[i64], offset: usize, len: usize, cur: &mut Vec<i64>, out: &mut Vec<TVector>) {
    if cur.len() == len {
        out.push(TVector(cur.clone()));
        return;
    }
    let i = cur.len(); // choosing t_{i+1}, 1-based position i+1
    let prev = cur[i - 1];
    // w_{2l+i} - w_{2l+i+1} >= 2 t_i - 2 t_{i+1}
    let diff = w[offset + i - 1] - w[offset + i];
    let lo = (prev - diff / 2).max(0);
    for v in lo..=prev {
        cur.push(v);
        rec_t(w, offset, len, cur, out);
        cur.pop();
    }
}

/// Cohomological index at which the terms of a given `t`-vector live:
/// `binom(n,2) - binom(2l,2) - 2|t|`.
pub fn ext_index(t: &TVector, l: usize, ctx: &Context) -> i64 {
    choose2(ctx.n() as i64) - choose2(2 * l as i64) - 2 * t.sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Fixed(i64),
    Free(usize),
}

/// One maximal block of adjacent free pairs inside a weight family, bounded
/// above by the nearest pinned entry and below by the next one (`None` when
/// the block reaches the end of the weight, i.e. the values are unbounded
/// below).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeRun {
    pub pairs: usize,
    pub upper: i64,
    pub lower: Option<i64>,
}

/// The constraint system describing all weights contributed by one `t`-vector.
#[derive(Clone, Debug)]
pub struct WeightFamily {
    slots: Vec<Slot>,
    /// Free variables in position order; variable `v` occupies two adjacent
    /// slots and contributes `2v` to the size of the weight.
    positional_vars: Vec<usize>,
    runs: Vec<FreeRun>,
    fixed_sum: i64,
    num_vars: usize,
}

/// Builds the weight family of `(label, t)`.
///
/// Entry `2l+i-2t_i` is pinned to `w_{2l+i} + n - 1 - 2t_i` (with `w` the
/// doubled partition); the remaining entries pair up, consecutive pairs below
/// `n - 2t_last` and mirrored pairs at the top. The structural claims
/// (pinned entries never clash, every free slot is half of exactly one
/// adjacent pair) are asserted during construction.
pub fn weight_family(label: &SubquotLabel, t: &TVector, ctx: &Context) -> WeightFamily {
    let n = ctx.n();
    let l = label.l;
    let len = n - 2 * l;
    let w = label.doubled_padded(ctx);
    let te = t.entries();
    assert_eq!(te.len(), len, "t-vector length mismatch");
    assert_eq!(te[0], l as i64, "t_1 must equal l");

    let mut slots: Vec<Option<Slot>> = vec![None; n];
    for i in 1..=len {
        let pos = (2 * l as i64 + i as i64 - 2 * te[i - 1]) as usize;
        let val = w[2 * l + i - 1] + n as i64 - 1 - 2 * te[i - 1];
        assert!(
            slots[pos - 1].is_none(),
            "pinned entries must occupy distinct positions"
        );
        slots[pos - 1] = Some(Slot::Fixed(val));
    }

    let t_last = t.last();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut two_i = 2i64;
    while two_i < n as i64 - 2 * t_last {
        pairs.push((two_i as usize - 1, two_i as usize));
        two_i += 2;
    }
    for i in 0..t_last {
        let hi = (n as i64 - 2 * i) as usize;
        pairs.push((hi - 1, hi));
    }

    let mut num_vars = 0usize;
    for &(a, b) in &pairs {
        let (a, b) = (a - 1, b - 1);
        match (slots[a], slots[b]) {
            (Some(Slot::Fixed(x)), Some(Slot::Fixed(y))) => {
                assert_eq!(x, y, "pinned pair must agree");
            }
            (Some(Slot::Fixed(x)), None) => slots[b] = Some(Slot::Fixed(x)),
            (None, Some(Slot::Fixed(y))) => slots[a] = Some(Slot::Fixed(y)),
            (None, None) => {
                slots[a] = Some(Slot::Free(num_vars));
                slots[b] = Some(Slot::Free(num_vars));
                num_vars += 1;
            }
            _ => unreachable!("pair constraints are disjoint"),
        }
    }

    let slots: Vec<Slot> = slots
        .into_iter()
        .map(|s| s.expect("every weight entry is pinned or paired"))
        .collect();

    // Collect free runs in position order.
    let mut runs = Vec::new();
    let mut positional_vars = Vec::new();
    let mut fixed_sum = 0i64;
    let mut idx = 0usize;
    while idx < slots.len() {
        match slots[idx] {
            Slot::Fixed(v) => {
                fixed_sum += v;
                idx += 1;
            }
            Slot::Free(_) => {
                assert!(idx > 0, "the first entry is always pinned");
                let upper = match slots[idx - 1] {
                    Slot::Fixed(v) => v,
                    Slot::Free(_) => unreachable!("runs are scanned as a whole"),
                };
                let start = idx;
                while idx < slots.len() && matches!(slots[idx], Slot::Free(_)) {
                    let Slot::Free(v) = slots[idx] else {
                        unreachable!()
                    };
                    assert_eq!(slots[idx + 1], Slot::Free(v), "free pairs are adjacent");
                    positional_vars.push(v);
                    idx += 2;
                }
                let lower = if idx < slots.len() {
                    match slots[idx] {
                        Slot::Fixed(v) => Some(v),
                        Slot::Free(_) => unreachable!(),
                    }
                } else {
                    None
                };
                runs.push(FreeRun {
                    pairs: (idx - start) / 2,
                    upper,
                    lower,
                });
            }
        }
    }
    assert_eq!(positional_vars.len(), num_vars);
    // Only the final run may be unbounded below.
    for (i, run) in runs.iter().enumerate() {
        assert!(run.lower.is_some() || i + 1 == runs.len());
    }

    WeightFamily {
        slots,
        positional_vars,
        runs,
        fixed_sum,
        num_vars,
    }
}

impl WeightFamily {
    /// Pinned positions (1-based) and their values.
    pub fn fixed_entries(&self) -> Vec<(usize, i64)> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match s {
                Slot::Fixed(v) => Some((i + 1, *v)),
                Slot::Free(_) => None,
            })
            .collect()
    }

    pub fn runs(&self) -> &[FreeRun] {
        &self.runs
    }

    pub fn num_free_pairs(&self) -> usize {
        self.num_vars
    }

    /// Sum of the pinned entries.
    pub fn fixed_sum(&self) -> i64 {
        self.fixed_sum
    }

    /// The weight of maximal size in the family (every free pair at its upper
    /// bound).
    pub fn max_weight(&self) -> DominantWeight {
        let mut values = vec![0i64; self.num_vars];
        let mut pos = 0usize;
        for run in &self.runs {
            for _ in 0..run.pairs {
                values[self.positional_vars[pos]] = run.upper;
                pos += 1;
            }
        }
        self.materialize(&values)
    }

    /// Minimal size over the family, when it exists (no trailing unbounded
    /// run).
    pub fn min_size(&self) -> Option<i64> {
        let mut total = self.fixed_sum;
        for run in &self.runs {
            total += 2 * run.pairs as i64 * run.lower?;
        }
        Some(total)
    }

    /// All weights of the family with size in `[size_lo, size_hi]`.
    pub fn enumerate(&self, size_lo: i64, size_hi: i64) -> Vec<DominantWeight> {
        let mut out = Vec::new();
        if size_lo > size_hi {
            return out;
        }
        let mut values = vec![0i64; self.num_vars];
        self.rec_enumerate(
            0,
            0,
            self.fixed_sum,
            size_lo,
            size_hi,
            &mut values,
            &mut out,
        );
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn rec_enumerate(
        &self,
        run_idx: usize,
        var_in_run: usize,
        acc: i64,
        size_lo: i64,
        size_hi: i64,
        values: &mut Vec<i64>,
        out: &mut Vec<DominantWeight>,
    ) {
        if run_idx == self.runs.len() {
            if acc >= size_lo && acc <= size_hi {
                out.push(self.materialize(values));
            }
            return;
        }
        let run = &self.runs[run_idx];
        if var_in_run == run.pairs {
            self.rec_enumerate(run_idx + 1, 0, acc, size_lo, size_hi, values, out);
            return;
        }
        let pos = self.position_of(run_idx, var_in_run);
        let hi = if var_in_run == 0 {
            run.upper
        } else {
            values[self.positional_vars[pos - 1]]
        };
        let lo = match run.lower {
            Some(lower) => lower,
            None => {
                // Remaining pairs (this one included) all lie in this final
                // run and are bounded by the current choice, so feasibility
                // of reaching size_lo pins a lower bound.
                let remaining = (run.pairs - var_in_run) as i64;
                ceil_div(size_lo - acc, 2 * remaining)
            }
        };
        for v in (lo..=hi).rev() {
            values[self.positional_vars[pos]] = v;
            self.rec_enumerate(
                run_idx,
                var_in_run + 1,
                acc + 2 * v,
                size_lo,
                size_hi,
                values,
                out,
            );
        }
    }

    fn position_of(&self, run_idx: usize, var_in_run: usize) -> usize {
        self.runs[..run_idx].iter().map(|r| r.pairs).sum::<usize>() + var_in_run
    }

    fn materialize(&self, values: &[i64]) -> DominantWeight {
        let entries: Vec<i64> = self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Fixed(v) => *v,
                Slot::Free(var) => values[*var],
            })
            .collect();
        DominantWeight::new(entries).expect("weight families produce dominant weights")
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

/// Inclusive window of internal degrees. Ext decompositions live in degrees
/// unbounded above, so every enumeration is truncated to such a window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeWindow {
    pub lo: i64,
    pub hi: i64,
}

impl DegreeWindow {
    pub fn new(lo: i64, hi: i64) -> Self {
        DegreeWindow { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, degree: i64) -> bool {
        degree >= self.lo && degree <= self.hi
    }

    /// The size range `|lambda| in [-2 hi, -2 lo]` corresponding to the degree
    /// range (degree is `-|lambda|/2`).
    pub fn size_range(&self) -> (i64, i64) {
        (-2 * self.hi, -2 * self.lo)
    }
}

impl FromStr for DegreeWindow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("expected lo..hi, got {s:?}")))?;
        let lo = lo
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad window bound {lo:?}")))?;
        let hi = hi
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad window bound {hi:?}")))?;
        Ok(DegreeWindow::new(lo, hi))
    }
}

/// A GL-decomposition of Ext modules: a multiset of `(j, lambda, degree)`
/// terms. Distinct `t`-vectors can in principle contribute the same weight at
/// the same index, so terms carry multiplicities.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExtDecomposition {
    terms: BTreeMap<(i64, i64, DominantWeight), u64>,
}

/// Flat record form of one term, used for JSON output. Records are ordered by
/// `(j, degree, lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtRecord {
    pub j: i64,
    pub lambda: Vec<i64>,
    pub degree: i64,
    pub mult: u64,
}

impl ExtDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, j: i64, lambda: DominantWeight, mult: u64) {
        let size = lambda.size();
        assert!(size % 2 == 0, "weights in Ext have even size");
        let degree = -size / 2;
        *self.terms.entry((j, degree, lambda)).or_insert(0) += mult;
    }

    pub fn merge(&mut self, other: &ExtDecomposition) {
        for ((j, degree, lambda), mult) in &other.terms {
            *self.terms.entry((*j, *degree, lambda.clone())).or_insert(0) += mult;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, &DominantWeight, u64)> {
        self.terms
            .iter()
            .map(|((j, degree, lambda), mult)| (*j, *degree, lambda, *mult))
    }

    /// The cohomological indices carrying at least one term.
    pub fn indices(&self) -> Vec<i64> {
        let mut js: Vec<i64> = self.terms.keys().map(|(j, _, _)| *j).collect();
        js.dedup();
        js
    }

    /// Multiplicity of a specific term.
    pub fn multiplicity(&self, j: i64, lambda: &DominantWeight) -> u64 {
        let degree = -lambda.size() / 2;
        self.terms
            .get(&(j, degree, lambda.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// `max(-degree - j)` over all terms; `None` when empty.
    pub fn max_reg(&self) -> Option<i64> {
        self.terms.keys().map(|(j, degree, _)| -degree - j).max()
    }

    /// Total dimension of the terms sitting at one `(j, degree)` slot.
    pub fn dimension_at(&self, j: i64, degree: i64) -> BigInt {
        self.terms
            .iter()
            .filter(|((tj, td, _), _)| *tj == j && *td == degree)
            .map(|((_, _, lambda), mult)| weyl_dimension(lambda) * *mult)
            .sum()
    }

    pub fn records(&self) -> Vec<ExtRecord> {
        self.terms
            .iter()
            .map(|((j, degree, lambda), mult)| ExtRecord {
                j: *j,
                lambda: lambda.entries().to_vec(),
                degree: *degree,
                mult: *mult,
            })
            .collect()
    }
}

impl fmt::Debug for ExtDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.records()).finish()
    }
}

/// Closed-form Ext decomposition of a subquotient, truncated to the window:
/// the union over admissible `t` of the weight family solutions with
/// `-|lambda|/2` inside the window, each filed under `ext_index(t)`.
pub fn ext_closed_form(
    label: &SubquotLabel,
    ctx: &Context,
    window: &DegreeWindow,
) -> ExtDecomposition {
    let mut out = ExtDecomposition::new();
    if window.is_empty() {
        return out;
    }
    let (size_lo, size_hi) = window.size_range();
    for t in t_vectors(label, ctx) {
        let j = ext_index(&t, label.l, ctx);
        let family = weight_family(label, &t, ctx);
        for lambda in family.enumerate(size_lo, size_hi) {
            out.add_term(j, lambda, 1);
        }
    }
    out
}

/// Castelnuovo–Mumford regularity of a subquotient, in closed form: the
/// maximum over admissible `t` of
/// `sum_{i>l} z_i + l(z_1 - 1) + |t| - f(z, t)`,
/// where `f` penalizes slack between the diagram differences and `2t`
/// differences.
pub fn reg_subquotient(label: &SubquotLabel, ctx: &Context) -> i64 {
    let n = ctx.n();
    let m = ctx.m();
    let l = label.l as i64;
    let z = label.z();
    let w = label.doubled_padded(ctx);
    let tail_sum: i64 = (label.l + 1..=m).map(|i| z.part(i)).sum();

    t_vectors(label, ctx)
        .iter()
        .map(|t| {
            let te = t.entries();
            let len = n - 2 * label.l;
            let mut penalty = 0i64;
            for i in 1..len {
                let diff = w[2 * label.l + i - 1] - w[2 * label.l + i];
                penalty += te[i] * (diff - (2 * te[i - 1] - 2 * te[i]));
            }
            tail_sum + l * (z.part(1) - 1) + t.sum() - penalty
        })
        .max()
        .expect("every label admits at least one t-vector")
}

/// Dimension of the degree-`degree` piece of the subquotient: the Weyl
/// dimensions of the doubled partitions `y >= z` that agree with `z` beyond
/// row `l` and have size `degree`.
pub fn subquotient_hilbert_dim(label: &SubquotLabel, degree: i64, ctx: &Context) -> BigInt {
    let z = label.z();
    let l = label.l;
    let tail: i64 = (l + 1..=ctx.m()).map(|i| z.part(i)).sum();
    let head_sum = degree - tail;
    let dim_of = |y: &Partition| weyl_dimension(&y.double().to_weight(ctx.n()).expect("2m <= n"));
    if l == 0 {
        return if degree == z.size() {
            dim_of(z)
        } else {
            BigInt::zero()
        };
    }
    let mut total = BigInt::zero();
    let mut head = Vec::with_capacity(l);
    rec_heads(l, z.part(1), head_sum, &mut head, &mut |head: &[i64]| {
        let mut parts = head.to_vec();
        for i in l + 1..=ctx.m() {
            parts.push(z.part(i));
        }
        total += dim_of(&Partition::new(parts).expect("heads dominate the tail"));
    });
    total
}

/// Weakly decreasing `len`-tuples with entries at least `floor` and the given
/// sum, fed to the callback.
fn rec_heads(len: usize, floor: i64, sum: i64, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if len == 0 {
        if sum == 0 {
            f(cur);
        }
        return;
    }
    let hi = sum - (len as i64 - 1) * floor;
    let lo = {
        // first entry is the largest, so it must cover its share
        let l = len as i64;
        ((sum + l - 1).div_euclid(l)).max(floor)
    };
    let hi = match cur.last() {
        Some(&prev) => hi.min(prev),
        None => hi,
    };
    for v in lo..=hi {
        cur.push(v);
        rec_heads(len - 1, floor, sum - v, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> Context {
        Context::new(n).unwrap()
    }

    fn label(z: &[i64], l: usize, n: usize) -> SubquotLabel {
        SubquotLabel::new(Partition::new(z.to_vec()).unwrap(), l, &ctx(n)).unwrap()
    }

    fn tv(entries: &[i64]) -> TVector {
        TVector(entries.to_vec())
    }

    fn weight(entries: &[i64]) -> DominantWeight {
        DominantWeight::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn t_vector_examples() {
        assert_eq!(
            t_vectors(&label(&[], 1, 6), &ctx(6)),
            vec![tv(&[1, 1, 1, 1])]
        );
        assert_eq!(
            t_vectors(&label(&[1, 1], 1, 6), &ctx(6)),
            vec![tv(&[1, 1, 1, 1])]
        );
        assert_eq!(
            t_vectors(&label(&[], 0, 6), &ctx(6)),
            vec![tv(&[0, 0, 0, 0, 0, 0])]
        );
    }

    #[test]
    fn ext_index_examples() {
        assert_eq!(ext_index(&tv(&[1, 1, 1, 1]), 1, &ctx(6)), 6);
        assert_eq!(ext_index(&tv(&[0, 0, 0, 0, 0, 0]), 0, &ctx(6)), 15);
        assert_eq!(ext_index(&tv(&[1, 1, 1, 1, 1]), 1, &ctx(7)), 10);
    }

    #[test]
    fn weight_family_structure_examples() {
        // Pinned (3,3,3,3) with one trailing free pair bounded by 3.
        let lb = label(&[], 1, 6);
        let fam = weight_family(&lb, &tv(&[1, 1, 1, 1]), &ctx(6));
        assert_eq!(fam.fixed_entries(), vec![(1, 3), (2, 3), (3, 3), (4, 3)]);
        assert_eq!(
            fam.runs(),
            &[FreeRun {
                pairs: 1,
                upper: 3,
                lower: None
            }]
        );

        // (4,4,3,3,a,a), a <= 3.
        let lb = label(&[1, 1], 1, 6);
        let fam = weight_family(&lb, &tv(&[1, 1, 1, 1]), &ctx(6));
        assert_eq!(fam.fixed_entries(), vec![(1, 4), (2, 4), (3, 3), (4, 3)]);
        assert_eq!(
            fam.runs(),
            &[FreeRun {
                pairs: 1,
                upper: 3,
                lower: None
            }]
        );

        // Single weight (6,6,6,6,6,6).
        let lb = label(&[1, 1, 1], 0, 6);
        let fam = weight_family(&lb, &tv(&[0, 0, 0, 0, 0, 0]), &ctx(6));
        assert_eq!(fam.num_free_pairs(), 0);
        assert_eq!(fam.max_weight(), weight(&[6, 6, 6, 6, 6, 6]));
        assert_eq!(fam.min_size(), Some(36));
    }

    #[test]
    fn ext_closed_form_examples() {
        let c6 = ctx(6);

        let dec = ext_closed_form(&label(&[], 1, 6), &c6, &DegreeWindow::new(-9, -6));
        let expected: Vec<(i64, Vec<i64>)> = vec![
            (6, vec![3, 3, 3, 3, 3, 3]),
            (6, vec![3, 3, 3, 3, 2, 2]),
            (6, vec![3, 3, 3, 3, 1, 1]),
            (6, vec![3, 3, 3, 3, 0, 0]),
        ];
        let got: Vec<(i64, Vec<i64>)> = dec
            .iter()
            .map(|(j, _, lambda, _)| (j, lambda.entries().to_vec()))
            .collect();
        assert_eq!(got, expected);

        let dec = ext_closed_form(&label(&[1, 1], 0, 6), &c6, &DegreeWindow::new(-17, -17));
        assert_eq!(dec.num_terms(), 1);
        assert_eq!(dec.multiplicity(15, &weight(&[6, 6, 6, 6, 5, 5])), 1);

        let dec = ext_closed_form(&label(&[2, 2], 1, 6), &c6, &DegreeWindow::new(0, -1));
        assert!(dec.is_empty());
    }

    #[test]
    fn reg_subquotient_examples() {
        assert_eq!(reg_subquotient(&label(&[], 1, 6), &ctx(6)), 3);
        assert_eq!(reg_subquotient(&label(&[1, 1], 1, 6), &ctx(6)), 4);
        assert_eq!(reg_subquotient(&label(&[1, 1, 1], 0, 6), &ctx(6)), 3);
    }

    #[test]
    fn reg_matches_windowed_terms() {
        // reg = max(-degree - j) over the terms, provided the window reaches
        // the maximizing weight of every t-vector.
        let c7 = ctx(7);
        for (z, l) in [
            (vec![], 0),
            (vec![], 1),
            (vec![1, 1], 1),
            (vec![2, 1, 1], 0),
        ] {
            let lb = SubquotLabel::new(Partition::new(z).unwrap(), l, &c7).unwrap();
            let max_size = t_vectors(&lb, &c7)
                .iter()
                .map(|t| weight_family(&lb, t, &c7).max_weight().size())
                .max()
                .unwrap();
            let window = DegreeWindow::new(-max_size / 2 - 1, max_size / 2 + 1);
            let dec = ext_closed_form(&lb, &c7, &window);
            assert_eq!(dec.max_reg(), Some(reg_subquotient(&lb, &c7)));
        }
    }

    #[test]
    fn parity_of_indices_is_constant_per_label() {
        for n in [6usize, 7] {
            let c = ctx(n);
            for l in 0..c.m() {
                let lb = SubquotLabel::new(Partition::empty(), l, &c).unwrap();
                let parity = (choose2(n as i64) - choose2(2 * l as i64)).rem_euclid(2);
                for t in t_vectors(&lb, &c) {
                    assert_eq!(ext_index(&t, l, &c).rem_euclid(2), parity);
                }
            }
        }
    }

    #[test]
    fn forced_equal_pairs_in_t_vectors() {
        let c7 = ctx(7);
        let lb = label(&[2, 1, 1], 0, 7);
        for t in t_vectors(&lb, &c7) {
            let e = t.entries();
            for i in 0..(e.len() / 2) {
                assert_eq!(e[2 * i], e[2 * i + 1]);
            }
        }
    }

    #[test]
    fn window_parsing() {
        let w: DegreeWindow = "-18..-6".parse().unwrap();
        assert_eq!(w, DegreeWindow::new(-18, -6));
        assert!("nonsense".parse::<DegreeWindow>().is_err());
    }
}
