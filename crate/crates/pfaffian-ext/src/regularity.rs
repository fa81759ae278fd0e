//! Castelnuovo–Mumford regularity: the general route through the filtration
//! labels, plus closed forms for basic ideals and for (symbolic, saturated)
//! powers of Pfaffian ideals, and the linear-resolution classifications.
//!
//! The closed power formulas are deliberately partial: they return `None`
//! outside the proven cases instead of extrapolating (regularity genuinely
//! exceeds the linear value `dk` for small exponents), and callers fall back
//! to the exact filtration route.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::{IdealSpec, ZSet};
use crate::optimization::{PowerVariant, RValue};
use crate::partition::{Context, Partition};
use crate::subquotient::reg_subquotient;

/// Regularity of the quotient ring by a proper nonzero invariant ideal: the
/// maximum of the subquotient regularities over the filtration labels.
pub fn reg_quotient(ideal: &IdealSpec) -> Result<i64> {
    if ideal.is_zero() {
        return Err(Error::Domain(
            "regularity of the zero ideal is undefined".into(),
        ));
    }
    if ideal.is_unit() {
        return Err(Error::Domain(
            "regularity of the unit ideal is undefined".into(),
        ));
    }
    match reg_of_labels(&ideal.z_set()?, ideal.ctx()) {
        RValue::Finite(v) => Ok(v),
        RValue::NegInfinity => Err(Error::Domain(
            "proper nonzero ideal with empty filtration".into(),
        )),
    }
}

/// `reg(I) = reg(S/I) + 1`.
pub fn reg_ideal(ideal: &IdealSpec) -> Result<i64> {
    Ok(reg_quotient(ideal)? + 1)
}

/// Maximum subquotient regularity over a label set; minus infinity when the
/// set is empty (quotient by the unit ideal).
pub fn reg_of_labels(zset: &ZSet, ctx: &Context) -> RValue {
    zset.labels()
        .map(|label| RValue::Finite(reg_subquotient(label, ctx)))
        .max()
        .unwrap_or(RValue::NegInfinity)
}

/// The piecewise regularity kernel for odd `n`:
/// `(m - l)(2l + c) + l(c - 1)` when `c > 2l`, or `c < 2l` with `c` odd;
/// `(m - l)(2l + c) + c(l - 1/2)` when `c <= 2l` with `c` even.
/// The half-integer branch is evaluated with doubled numerators and an
/// integrality assertion.
pub fn b_function(l: i64, n: i64, c: i64) -> i64 {
    let m = n / 2;
    if c > 2 * l || (c < 2 * l && c % 2 == 1) {
        (m - l) * (2 * l + c) + l * (c - 1)
    } else {
        let twice = 2 * (m - l) * (2 * l + c) + c * (2 * l - 1);
        assert!(twice % 2 == 0, "b-function must be an integer");
        twice / 2
    }
}

/// Regularity of the basic ideal of a nonempty partition, in closed form: a
/// maximum over the column cuts `0 <= c <= x_1 - 1`, with the even and odd
/// `n` cases differing in the kernel.
pub fn reg_basic(x: &Partition, ctx: &Context) -> Result<i64> {
    if x.is_empty() {
        return Err(Error::Domain(
            "the basic ideal of the empty partition is the unit ideal".into(),
        ));
    }
    if x.len() > ctx.m() {
        return Err(Error::OutOfRange(format!(
            "partition ({x}) has more than m = {} parts",
            ctx.m()
        )));
    }
    let n = ctx.n() as i64;
    let m = ctx.m() as i64;
    Ok((0..x.part(1))
        .map(|c| {
            let h = x.column_height(c as usize + 1);
            if n % 2 == 0 {
                (n - 2 * h + 1) * (h - 1) + c * m + 1
            } else {
                b_function(h - 1, n, c) + 1
            }
        })
        .max()
        .expect("nonempty partition has a first column"))
}

/// Closed-form regularity of a power of the `2k`-Pfaffian ideal (value for
/// the ideal, not the quotient), or `None` when the parameters fall outside
/// the proven cases.
///
/// For `k = 1` the saturation of the power of the irrelevant ideal is the
/// unit ideal, so no value is returned for that variant.
pub fn reg_power_closed(
    k: usize,
    d: i64,
    ctx: &Context,
    variant: PowerVariant,
) -> Result<Option<i64>> {
    if k < 1 || k > ctx.m() {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= m = {}, got k = {k}",
            ctx.m()
        )));
    }
    if d < 1 {
        return Err(Error::OutOfRange(format!("need d >= 1, got d = {d}")));
    }
    let n = ctx.n() as i64;
    let kk = k as i64;
    let two_k = 2 * kk;

    if two_k == 2 {
        // Powers of the irrelevant ideal; the saturation is the unit ideal,
        // so no regularity is reported for that variant.
        return Ok(match variant {
            PowerVariant::Ordinary | PowerVariant::Symbolic => Some(d),
            PowerVariant::Saturated => None,
        });
    }
    if two_k == n {
        // Powers of the principal top-Pfaffian ideal; all variants coincide.
        return Ok(Some(d * kk));
    }
    if two_k == n - 1 {
        // Sub-maximal Pfaffians; all variants coincide. For odd d below
        // n - 2 the quotient regularity is dk - 1 + (n - d - 2)/2, e.g. the
        // classical codimension-three case n = 5, d = 1 with its
        // 0 -> S(-5) -> S(-3)^5 -> S(-2)^5 resolution and reg(I) = 3.
        return Ok(Some(if d % 2 == 1 && d < n - 2 {
            d * kk + (n - d - 2) / 2
        } else {
            d * kk
        }));
    }
    if two_k <= n - 2 && ((n % 2 == 0 && d >= n - 2) || (n % 2 == 1 && d >= n - 3)) {
        let excess = if kk % 2 == 0 {
            kk * (kk / 2 - 1)
        } else {
            (kk - 1) * (kk - 1) / 2
        };
        return Ok(match variant {
            PowerVariant::Symbolic => Some(d * kk),
            PowerVariant::Ordinary | PowerVariant::Saturated => Some(d * kk + excess),
        });
    }
    Ok(None)
}

/// Whether the `d`-th power of the `2k`-Pfaffian ideal has a linear minimal
/// free resolution.
pub fn has_linear_resolution_power(k: usize, d: i64, ctx: &Context) -> Result<bool> {
    if k < 1 || k > ctx.m() {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= m = {}, got k = {k}",
            ctx.m()
        )));
    }
    if d < 1 {
        return Err(Error::OutOfRange(format!("need d >= 1, got d = {d}")));
    }
    let n = ctx.n() as i64;
    let two_k = 2 * k as i64;
    Ok(two_k == 2
        || two_k == n
        || (two_k == n - 1 && (d % 2 == 0 || d >= n - 3))
        || (n % 2 == 0 && two_k == 4 && d >= n - 2)
        || (n % 2 == 1 && two_k == 4 && d >= n - 3))
}

/// Whether the basic ideal of a nonempty partition has a linear minimal free
/// resolution; a shape test on the conjugate partition.
pub fn has_linear_resolution_basic(x: &Partition, ctx: &Context) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::Domain(
            "the basic ideal of the empty partition is the unit ideal".into(),
        ));
    }
    if x.len() > ctx.m() {
        return Err(Error::OutOfRange(format!(
            "partition ({x}) has more than m = {} parts",
            ctx.m()
        )));
    }
    let n = ctx.n() as i64;
    let m = ctx.m() as i64;
    let conj = x.conjugate();
    let parts = conj.parts();

    // Parse the conjugate as (m^k) or (m^k, 1); for m = 1 both readings of an
    // all-ones shape are admissible and either may certify linearity.
    let mut shapes: Vec<(i64, i64)> = Vec::new();
    let rect = parts.iter().take_while(|&&p| p == m).count();
    if rect == parts.len() {
        shapes.push((rect as i64, 0));
        if m == 1 && rect >= 1 {
            shapes.push((rect as i64 - 1, 1));
        }
    } else if rect + 1 == parts.len() && parts[rect] == 1 {
        shapes.push((rect as i64, 1));
    }

    Ok(shapes.iter().any(|&(k, ones)| {
        if n % 2 == 0 {
            true // any (m^k, 1^l) with l in {0,1}
        } else if ones == 0 {
            k >= n - 2 || (k % 2 == 0 && k <= n - 3)
        } else {
            k >= n - 5 || (k % 2 == 0 && k <= n - 7)
        }
    }))
}

/// Common degree of the minimal generators, when there is one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorDegree {
    Degree(i64),
    Mixed,
}

/// The generation degree of a nonzero invariant ideal: the size shared by
/// all minimal generators, or `Mixed` (linear-resolution predicates only
/// apply to the single-degree case).
pub fn generator_degree(ideal: &IdealSpec) -> Result<GeneratorDegree> {
    if ideal.is_zero() {
        return Err(Error::Domain("the zero ideal has no generators".into()));
    }
    let sizes: BTreeSet<i64> = ideal.gens().iter().map(|g| g.size()).collect();
    Ok(if sizes.len() == 1 {
        GeneratorDegree::Degree(*sizes.first().expect("nonempty"))
    } else {
        GeneratorDegree::Mixed
    })
}
