//! Invariant ideals: canonical antichain form, the standard families
//! (powers, symbolic powers, saturations of Pfaffian ideals), membership,
//! Hilbert functions, and the label sets indexing the filtration of the
//! quotient ring.
//!
//! An invariant ideal is determined by the set of partitions indexing its
//! minimal irreducible generators; two generator sets define the same ideal
//! iff they have the same antichain of minimal elements, so [`IdealSpec`]
//! always stores that antichain.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{
    enumerate_partitions, partitions_of_size, sym_dimension, weyl_dimension, Context, Partition,
};
use crate::subquotient::SubquotLabel;

/// A GL-invariant ideal in canonical form: the matrix context plus the
/// antichain of minimal generator partitions.
///
/// The zero ideal has no generators; the unit ideal is generated by the empty
/// partition.
#[derive(Clone, PartialEq, Eq)]
pub struct IdealSpec {
    ctx: Context,
    gens: Vec<Partition>,
}

impl IdealSpec {
    /// Canonicalizes a set of generators: deduplicates and removes every
    /// partition that contains another generator.
    pub fn normalize(ctx: &Context, gens: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let set: BTreeSet<Partition> = gens.into_iter().collect();
        for g in &set {
            if g.len() > ctx.m() {
                return Err(Error::OutOfRange(format!(
                    "generator ({g}) has more than m = {} parts",
                    ctx.m()
                )));
            }
        }
        let gens: Vec<Partition> = set
            .iter()
            .filter(|y| !set.iter().any(|x| x != *y && x.fits_in(y)))
            .cloned()
            .collect();
        Ok(IdealSpec { ctx: *ctx, gens })
    }

    pub fn zero(ctx: &Context) -> Self {
        IdealSpec {
            ctx: *ctx,
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Context) -> Self {
        IdealSpec {
            ctx: *ctx,
            gens: vec![Partition::empty()],
        }
    }

    /// The basic ideal of a single partition.
    pub fn basic(x: Partition, ctx: &Context) -> Result<Self> {
        Self::normalize(ctx, [x])
    }

    /// The Pfaffian ideal of size `2k`, generated by the single partition
    /// `(1^k)`.
    pub fn pfaffian(k: usize, ctx: &Context) -> Result<Self> {
        check_k(k, ctx)?;
        Self::normalize(ctx, [Partition::new(vec![1; k])?])
    }

    /// The `d`-th power of the `2k`-Pfaffian ideal: generators are the
    /// partitions of size `k d` with parts at most `d`.
    pub fn pfaffian_power(k: usize, d: i64, ctx: &Context) -> Result<Self> {
        check_k_d(k, d, ctx)?;
        let gens = partitions_of_size(ctx.m(), d, k as i64 * d);
        Self::normalize(ctx, gens)
    }

    /// The `d`-th symbolic power of the `2k`-Pfaffian ideal: generators have
    /// their first `k` parts equal and parts `k..=m` summing to `d`.
    pub fn pfaffian_symbolic(k: usize, d: i64, ctx: &Context) -> Result<Self> {
        check_k_d(k, d, ctx)?;
        let m = ctx.m();
        let mut gens = Vec::new();
        for e in 1..=d {
            for tail in enumerate_partitions(m - k, e, Some(d - e)) {
                if e + tail.size() == d {
                    let mut parts = vec![e; k];
                    parts.extend_from_slice(tail.parts());
                    gens.push(Partition::new(parts)?);
                }
            }
        }
        Self::normalize(ctx, gens)
    }

    /// Saturation of the `d`-th power with respect to the irrelevant maximal
    /// ideal: each power generator is cut down to its columns of height at
    /// least two.
    pub fn pfaffian_power_saturation(k: usize, d: i64, ctx: &Context) -> Result<Self> {
        check_k_d(k, d, ctx)?;
        let power = Self::pfaffian_power(k, d, ctx)?;
        let mut gens = Vec::new();
        for x in power.gens() {
            for c in 0..=x.part(1) {
                if (c == 0 || x.column_height(c as usize) > 1)
                    && x.column_height(c as usize + 1) <= 1
                {
                    gens.push(x.truncate_columns(c));
                }
            }
        }
        Self::normalize(ctx, gens)
    }

    /// Parses the ideal mini-language:
    /// `gens:2,2;2,1,1` | `pfaff:2k` | `pow:2k:d` | `sym:2k:d` | `sat:2k:d`.
    pub fn parse(spec: &str, ctx: &Context) -> Result<Self> {
        let (scheme, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad ideal spec {spec:?}")))?;
        match scheme {
            "gens" => {
                let gens = rest
                    .split(';')
                    .map(|s| s.parse::<Partition>())
                    .collect::<Result<Vec<_>>>()?;
                Self::normalize(ctx, gens)
            }
            "pfaff" => Self::pfaffian(parse_2k(rest, ctx)?, ctx),
            "pow" | "sym" | "sat" => {
                let (two_k, d) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected {scheme}:2k:d, got {spec:?}")))?;
                let k = parse_2k(two_k, ctx)?;
                let d: i64 = d
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {d:?}")))?;
                match scheme {
                    "pow" => Self::pfaffian_power(k, d, ctx),
                    "sym" => Self::pfaffian_symbolic(k, d, ctx),
                    _ => Self::pfaffian_power_saturation(k, d, ctx),
                }
            }
            _ => Err(Error::Parse(format!("unknown ideal scheme {scheme:?}"))),
        }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    /// Minimal generators, lexicographically sorted.
    pub fn gens(&self) -> &[Partition] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// True iff the irreducible indexed by `y` lies in the ideal, i.e. some
    /// generator fits inside `y`.
    pub fn contains_rep(&self, y: &Partition) -> bool {
        self.gens.iter().any(|x| x.fits_in(y))
    }

    /// True iff `other` is contained in `self` as an ideal (every generator
    /// of `other` lies in `self`).
    pub fn contains_ideal(&self, other: &IdealSpec) -> bool {
        debug_assert_eq!(self.ctx, other.ctx);
        other.gens.iter().all(|y| self.contains_rep(y))
    }

    /// Dimension of the degree-`degree` piece of the ideal, as a sum of Weyl
    /// dimensions over the doubled partitions it contains.
    pub fn hilbert_dim(&self, degree: i64) -> BigInt {
        if degree < 0 {
            return BigInt::zero();
        }
        partitions_of_size(self.ctx.m(), degree, degree)
            .iter()
            .filter(|y| self.contains_rep(y))
            .map(|y| weyl_dimension(&y.double().to_weight(self.ctx.n()).expect("2m <= n")))
            .sum()
    }

    /// Dimension of the degree-`degree` piece of the quotient ring.
    pub fn quotient_hilbert_dim(&self, degree: i64) -> BigInt {
        if degree < 0 {
            return BigInt::zero();
        }
        sym_dimension(self.ctx.num_vars(), degree) - self.hilbert_dim(degree)
    }

    /// The set of subquotient labels whose Ext modules assemble the Ext of
    /// the quotient ring.
    pub fn z_set(&self) -> Result<ZSet> {
        z_set_of_generators(&self.gens, &self.ctx)
    }
}

/// Label set of a generator set, evaluated verbatim (no canonicalization of
/// the generators; the separation statements are phrased for raw sets, and
/// the result agrees with [`IdealSpec::z_set`] on antichains).
///
/// A pair `(z, l)` with `c = z_1` qualifies iff some generator `x` satisfies
/// `x(c) <= z` and has column `c+1` of height at most `l+1`, and every
/// generator satisfying that has the height exactly `l+1`. Candidates are
/// bounded: `c` is below the largest generator part, and `z` has first part
/// `c`, so at most `m` parts each at most `c`.
pub fn z_set_of_generators(gens: &[Partition], ctx: &Context) -> Result<ZSet> {
    let m = ctx.m();
    let mut labels = BTreeSet::new();
    let c_max = gens.iter().map(|x| x.part(1)).max().unwrap_or(0) - 1;
    for c in 0..=c_max {
        for tail in enumerate_partitions(m.saturating_sub(1), c, None) {
            let mut parts = vec![c];
            parts.extend_from_slice(tail.parts());
            let z = Partition::new(parts)?;
            for l in 0..m {
                let sat = |x: &&Partition| {
                    x.truncate_columns(c).fits_in(&z)
                        && x.column_height(c as usize + 1) <= (l + 1) as i64
                };
                if gens.iter().any(|x| sat(&x))
                    && gens
                        .iter()
                        .filter(sat)
                        .all(|x| x.column_height(c as usize + 1) == (l + 1) as i64)
                {
                    labels.insert(SubquotLabel::new(z.clone(), l, ctx)?);
                }
            }
        }
    }
    Ok(ZSet { labels })
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens:")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealSpec(n={}, {})", self.ctx.n(), self)
    }
}

/// True iff `y` indexes an irreducible of the ideal generated by the strict
/// successors of `(z, l)`: `y >= z` with at least one strict growth below
/// row `l`.
pub fn in_succ(z: &Partition, l: usize, y: &Partition, ctx: &Context) -> bool {
    z.fits_in(y) && (l + 1..=ctx.m()).any(|i| y.part(i) > z.part(i))
}

fn check_k(k: usize, ctx: &Context) -> Result<()> {
    if k < 1 || k > ctx.m() {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= m = {}, got k = {k}",
            ctx.m()
        )));
    }
    Ok(())
}

fn check_k_d(k: usize, d: i64, ctx: &Context) -> Result<()> {
    check_k(k, ctx)?;
    if d < 1 {
        return Err(Error::OutOfRange(format!("need d >= 1, got d = {d}")));
    }
    Ok(())
}

fn parse_2k(s: &str, ctx: &Context) -> Result<usize> {
    let two_k: i64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad Pfaffian size {s:?}")))?;
    if two_k < 2 || two_k % 2 != 0 {
        return Err(Error::OutOfRange(format!(
            "Pfaffian size must be even and >= 2, got {two_k}"
        )));
    }
    let k = (two_k / 2) as usize;
    check_k(k, ctx)?;
    Ok(k)
}

/// A finite set of subquotient labels.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct ZSet {
    labels: BTreeSet<SubquotLabel>,
}

impl ZSet {
    pub fn from_labels(labels: impl IntoIterator<Item = SubquotLabel>) -> Self {
        ZSet {
            labels: labels.into_iter().collect(),
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &SubquotLabel> {
        self.labels.iter()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, label: &SubquotLabel) -> bool {
        self.labels.contains(label)
    }

    pub fn is_subset(&self, other: &ZSet) -> bool {
        self.labels.is_subset(&other.labels)
    }

    pub fn difference(&self, other: &ZSet) -> ZSet {
        ZSet {
            labels: self.labels.difference(&other.labels).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &ZSet) -> ZSet {
        ZSet {
            labels: self.labels.intersection(&other.labels).cloned().collect(),
        }
    }
}

/// Closed form of the label set of a Pfaffian power: pairs `(z, l)` with
/// `0 <= l <= k-1`, `z_1 = ... = z_{l+1} <= d-1` and
/// `|z| + (d - z_1) l + 1 <= k d <= |z| + (d - z_1)(l + 1)`.
pub fn z_set_power_closed(k: usize, d: i64, ctx: &Context) -> Result<ZSet> {
    check_k_d(k, d, ctx)?;
    let mut labels = BTreeSet::new();
    for z in enumerate_partitions(ctx.m(), d - 1, None) {
        for l in 0..k {
            if z.part(1) != z.part(l + 1) {
                continue;
            }
            let slack = d - z.part(1);
            let lo = z.size() + slack * l as i64 + 1;
            let hi = z.size() + slack * (l as i64 + 1);
            if lo <= k as i64 * d && k as i64 * d <= hi {
                labels.insert(SubquotLabel::new(z.clone(), l, ctx)?);
            }
        }
    }
    Ok(ZSet { labels })
}

/// Closed form of the label set of a symbolic Pfaffian power: pairs
/// `(z, k-1)` with `z_1 = ... = z_k` and `z_k + ... + z_m <= d-1`.
pub fn z_set_symbolic_closed(k: usize, d: i64, ctx: &Context) -> Result<ZSet> {
    check_k_d(k, d, ctx)?;
    let m = ctx.m();
    let mut labels = BTreeSet::new();
    for z in enumerate_partitions(m, d - 1, None) {
        if z.part(1) != z.part(k) {
            continue;
        }
        let tail: i64 = (k..=m).map(|i| z.part(i)).sum();
        if tail < d {
            labels.insert(SubquotLabel::new(z.clone(), k - 1, ctx)?);
        }
    }
    Ok(ZSet { labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> Context {
        Context::new(n).unwrap()
    }

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn gens_of(ideal: &IdealSpec) -> Vec<Partition> {
        ideal.gens().to_vec()
    }

    #[test]
    fn normalize_examples() {
        let c = ctx(6);
        let i = IdealSpec::normalize(&c, [p(&[1, 1]), p(&[2, 1])]).unwrap();
        assert_eq!(gens_of(&i), vec![p(&[1, 1])]);

        let i = IdealSpec::normalize(&c, [p(&[2, 2]), p(&[2, 1, 1])]).unwrap();
        assert_eq!(gens_of(&i), vec![p(&[2, 1, 1]), p(&[2, 2])]);

        let i = IdealSpec::normalize(&c, []).unwrap();
        assert!(i.is_zero());
    }

    #[test]
    fn pfaffian_power_examples() {
        let c = ctx(6);
        assert_eq!(
            gens_of(&IdealSpec::pfaffian_power(2, 2, &c).unwrap()),
            vec![p(&[2, 1, 1]), p(&[2, 2])]
        );
        assert_eq!(
            gens_of(&IdealSpec::pfaffian_power(2, 1, &c).unwrap()),
            vec![p(&[1, 1])]
        );
        assert_eq!(
            gens_of(&IdealSpec::pfaffian_power(3, 1, &c).unwrap()),
            vec![p(&[1, 1, 1])]
        );
    }

    #[test]
    fn pfaffian_symbolic_examples() {
        let c = ctx(6);
        assert_eq!(
            gens_of(&IdealSpec::pfaffian_symbolic(2, 2, &c).unwrap()),
            vec![p(&[1, 1, 1]), p(&[2, 2])]
        );
        assert_eq!(
            gens_of(&IdealSpec::pfaffian_symbolic(3, 1, &c).unwrap()),
            vec![p(&[1, 1, 1])]
        );
        assert_eq!(
            gens_of(&IdealSpec::pfaffian_symbolic(2, 1, &c).unwrap()),
            vec![p(&[1, 1])]
        );
    }

    #[test]
    fn saturation_examples() {
        let c = ctx(6);
        // Principal-ideal powers are saturated.
        for d in 1..=4 {
            assert_eq!(
                IdealSpec::pfaffian_power_saturation(3, d, &c).unwrap(),
                IdealSpec::pfaffian_power(3, d, &c).unwrap()
            );
        }
        assert_eq!(
            gens_of(&IdealSpec::pfaffian_power_saturation(2, 1, &c).unwrap()),
            vec![p(&[1, 1])]
        );
        // Power and symbolic power sandwich the saturation.
        let sat = IdealSpec::pfaffian_power_saturation(2, 2, &c).unwrap();
        let pow = IdealSpec::pfaffian_power(2, 2, &c).unwrap();
        let sym = IdealSpec::pfaffian_symbolic(2, 2, &c).unwrap();
        assert!(sat.contains_ideal(&pow));
        assert!(sym.contains_ideal(&sat));
    }

    #[test]
    fn succ_examples() {
        let c = ctx(6);
        assert!(in_succ(&Partition::empty(), 1, &p(&[1, 1]), &c));
        assert!(!in_succ(&p(&[1, 1]), 1, &p(&[2, 1]), &c));
        assert!(in_succ(&p(&[1, 1]), 1, &p(&[1, 1, 1]), &c));
    }

    #[test]
    fn membership_examples() {
        let c = ctx(6);
        let i4 = IdealSpec::pfaffian(2, &c).unwrap();
        assert!(i4.contains_rep(&p(&[2, 1])));
        let i4sq = IdealSpec::pfaffian_power(2, 2, &c).unwrap();
        assert!(!i4sq.contains_rep(&p(&[2, 1])));
    }

    #[test]
    fn hilbert_examples() {
        let c = ctx(6);
        assert_eq!(IdealSpec::zero(&c).hilbert_dim(3), BigInt::zero());
        for d in 0..=4 {
            assert_eq!(
                IdealSpec::unit(&c).hilbert_dim(d),
                sym_dimension(c.num_vars(), d)
            );
        }
        let i4 = IdealSpec::pfaffian(2, &c).unwrap();
        assert_eq!(i4.hilbert_dim(2), BigInt::from(15));
        assert_eq!(i4.quotient_hilbert_dim(2), BigInt::from(105));
    }

    #[test]
    fn z_set_examples() {
        let c = ctx(6);
        let zl = |z: &[i64], l: usize| SubquotLabel::new(p(z), l, &c).unwrap();

        let i = IdealSpec::basic(p(&[2, 1]), &c).unwrap();
        assert_eq!(
            i.z_set().unwrap(),
            ZSet::from_labels([zl(&[], 1), zl(&[1, 1], 0), zl(&[1, 1, 1], 0)])
        );

        let i = IdealSpec::pfaffian_power(2, 2, &c).unwrap();
        assert_eq!(
            i.z_set().unwrap(),
            ZSet::from_labels([zl(&[], 1), zl(&[1, 1], 1), zl(&[1, 1, 1], 0)])
        );

        let i = IdealSpec::pfaffian(2, &c).unwrap();
        assert_eq!(i.z_set().unwrap(), ZSet::from_labels([zl(&[], 1)]));

        assert!(IdealSpec::zero(&c).z_set().unwrap().is_empty());
        assert!(IdealSpec::unit(&c).z_set().unwrap().is_empty());
    }

    #[test]
    fn z_set_closed_forms_match_direct_route() {
        for n in 4..=7usize {
            let c = ctx(n);
            for k in 1..=c.m() {
                for d in 1..=4i64 {
                    let pow = IdealSpec::pfaffian_power(k, d, &c).unwrap();
                    assert_eq!(
                        z_set_power_closed(k, d, &c).unwrap(),
                        pow.z_set().unwrap(),
                        "power n={n} k={k} d={d}"
                    );
                    let sym = IdealSpec::pfaffian_symbolic(k, d, &c).unwrap();
                    assert_eq!(
                        z_set_symbolic_closed(k, d, &c).unwrap(),
                        sym.z_set().unwrap(),
                        "symbolic n={n} k={k} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn symbolic_label_set_for_square_of_i4() {
        // Both routes agree on the label set of the symbolic square.
        let c = ctx(6);
        let zl = |z: &[i64], l: usize| SubquotLabel::new(p(z), l, &c).unwrap();
        assert_eq!(
            z_set_symbolic_closed(2, 2, &c).unwrap(),
            ZSet::from_labels([zl(&[], 1), zl(&[1, 1], 1)])
        );
    }

    #[test]
    fn symbolic_label_set_at_exponent_one_is_a_singleton() {
        // d = 1 forces z = 0, leaving the single label (0, k-1).
        for n in 4..=8usize {
            let c = ctx(n);
            for k in 1..=c.m() {
                let zset = z_set_symbolic_closed(k, 1, &c).unwrap();
                assert_eq!(
                    zset,
                    ZSet::from_labels([SubquotLabel::new(Partition::empty(), k - 1, &c).unwrap()])
                );
            }
        }
    }

    #[test]
    fn parse_mini_language() {
        let c = ctx(6);
        assert_eq!(
            IdealSpec::parse("gens:2,2;2,1,1", &c).unwrap(),
            IdealSpec::pfaffian_power(2, 2, &c).unwrap()
        );
        assert_eq!(
            IdealSpec::parse("pfaff:4", &c).unwrap(),
            IdealSpec::pfaffian(2, &c).unwrap()
        );
        assert_eq!(
            IdealSpec::parse("pow:4:2", &c).unwrap(),
            IdealSpec::pfaffian_power(2, 2, &c).unwrap()
        );
        assert!(IdealSpec::parse("gens:", &c).unwrap().is_unit());
        assert!(matches!(
            IdealSpec::parse("pfaff:5", &c),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            IdealSpec::parse("pow:4", &c),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            IdealSpec::parse("nope:1", &c),
            Err(Error::Parse(_))
        ));
    }
}
