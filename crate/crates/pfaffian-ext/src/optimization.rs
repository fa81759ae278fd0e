//! The combinatorial optimization behind the regularity of Pfaffian powers.
//!
//! For even `q` and `0 <= q < 2k <= n`, the quantity `R_{q,k,n,d}` is the
//! maximum of an explicit objective over a finite set of partition pairs
//! `(y, u)`. Regularity of ordinary, saturated and symbolic powers is a
//! maximum of `R` values over ranges of `q`, so an exhaustive evaluation of
//! `R` provides an independent route to every power-regularity formula. The
//! closed forms cover the large-exponent and maximal-Pfaffian cases and are
//! cross-checked against brute force by the verification suites.

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Context};

/// Parameters `(q, k, n, d)` of one optimization instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OptInstance {
    pub q: i64,
    pub k: i64,
    pub n: i64,
    pub d: i64,
}

impl OptInstance {
    pub fn new(q: i64, k: i64, n: i64, d: i64) -> Result<Self> {
        if q % 2 != 0 || q < 0 {
            return Err(Error::OutOfRange(format!("q must be even >= 0, got {q}")));
        }
        if !(q < 2 * k && 2 * k <= n) {
            return Err(Error::OutOfRange(format!(
                "need q < 2k <= n, got q={q}, k={k}, n={n}"
            )));
        }
        if d < 1 {
            return Err(Error::OutOfRange(format!("need d >= 1, got {d}")));
        }
        Ok(OptInstance { q, k, n, d })
    }
}

/// A feasible pair: `y` has `n - q` parts with even column lengths, `u` has
/// `n - q` even parts with `u_1 = q`, `|y| <= d(2k-q) - 2`,
/// `|y| - 2 y_1 >= d(2k-q-2)` and `y_i - y_{i+1} >= u_i - u_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairYU {
    pub y: Vec<i64>,
    pub u: Vec<i64>,
}

impl PairYU {
    pub fn y_size(&self) -> i64 {
        self.y.iter().sum()
    }

    pub fn u_size(&self) -> i64 {
        self.u.iter().sum()
    }
}

/// All feasible pairs of an instance. `y` runs over doubled partitions with
/// parts at most `d - 1` (forced by the two size constraints), `u` is then
/// filled in step by step under the difference constraints.
pub fn enumerate_yu(inst: &OptInstance) -> Vec<PairYU> {
    let OptInstance { q, k, n, d } = *inst;
    let len = (n - q) as usize;
    let y_max = d * (2 * k - q) - 2;
    let y_min_slack = d * (2 * k - q - 2);
    let mut out = Vec::new();

    for w in enumerate_partitions(len / 2, d - 1, Some(y_max / 2)) {
        let mut y: Vec<i64> = w.double().parts().to_vec();
        y.resize(len, 0);
        let y_size: i64 = y.iter().sum();
        if y_size > y_max || y_size - 2 * y[0] < y_min_slack {
            continue;
        }
        let mut u = vec![q];
        rec_u(&y, len, &mut u, &mut out);
    }
    out
}

fn rec_u(y: &[i64], len: usize, u: &mut Vec<i64>, out: &mut Vec<PairYU>) {
    if u.len() == len {
        out.push(PairYU {
            y: y.to_vec(),
            u: u.clone(),
        });
        return;
    }
    let i = u.len();
    let prev = u[i - 1];
    let lo = (prev - (y[i - 1] - y[i])).max(0);
    let mut v = if lo % 2 == 0 { lo } else { lo + 1 };
    while v <= prev {
        u.push(v);
        rec_u(y, len, u, out);
        u.pop();
        v += 2;
    }
}

/// The objective
/// `|y|/2 + |u|/2 + q(y_1 - 1)/2 - sum u_{i+1}/2 ((y_i - y_{i+1}) - (u_i - u_{i+1}))`,
/// evaluated as an exact half-integer with an integrality assertion (validity
/// of the pair guarantees an even numerator; a failure flags an enumeration
/// bug).
pub fn g_value(inst: &OptInstance, pair: &PairYU) -> i64 {
    let q = inst.q;
    let y = &pair.y;
    let u = &pair.u;
    let mut twice = pair.y_size() + pair.u_size() + q * (y[0] - 1);
    for i in 0..y.len() - 1 {
        twice -= u[i + 1] * ((y[i] - y[i + 1]) - (u[i] - u[i + 1]));
    }
    assert!(twice % 2 == 0, "objective must be an integer");
    twice / 2
}

/// Value of the optimization: an integer, or minus infinity on an empty
/// feasible set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RValue {
    NegInfinity,
    Finite(i64),
}

impl RValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            RValue::NegInfinity => None,
            RValue::Finite(v) => Some(v),
        }
    }
}

impl std::fmt::Display for RValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RValue::NegInfinity => write!(f, "-inf"),
            RValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Exhaustive evaluation of `R`.
pub fn r_bruteforce(inst: &OptInstance) -> RValue {
    enumerate_yu(inst)
        .iter()
        .map(|p| RValue::Finite(g_value(inst, p)))
        .max()
        .unwrap_or(RValue::NegInfinity)
}

/// Brute-force maximum together with every pair attaining it.
pub fn r_bruteforce_argmax(inst: &OptInstance) -> (RValue, Vec<PairYU>) {
    let pairs = enumerate_yu(inst);
    let best = pairs
        .iter()
        .map(|p| g_value(inst, p))
        .max()
        .map(RValue::Finite)
        .unwrap_or(RValue::NegInfinity);
    let argmax = pairs
        .into_iter()
        .filter(|p| RValue::Finite(g_value(inst, p)) == best)
        .collect();
    (best, argmax)
}

/// Closed-form value of `R` on the covered cases, `None` elsewhere.
///
/// Covered: the maximal-Pfaffian cases (`2k = n` for even `n`, `2k = n - 1`
/// for odd `n`, all `d`), and `2k <= n - 2` with `d >= n - 2` (`n` even) or
/// `d >= n - 3` (`n` odd), where `R = dk - 1 + q(k - q/2 - 1)`.
pub fn r_closed(inst: &OptInstance) -> Option<RValue> {
    let OptInstance { q, k, n, d } = *inst;
    if n % 2 == 0 && 2 * k == n {
        return Some(if q == n - 2 {
            RValue::Finite(n * d / 2 - 1)
        } else {
            RValue::NegInfinity
        });
    }
    if n % 2 == 1 && 2 * k == n - 1 {
        return Some(if q == n - 3 {
            RValue::Finite(if d % 2 == 1 && d < n - 2 {
                d * (n - 1) / 2 + (n - d - 4) / 2
            } else {
                d * (n - 1) / 2 - 1
            })
        } else {
            RValue::NegInfinity
        });
    }
    if 2 * k <= n - 2 && ((n % 2 == 0 && d >= n - 2) || (n % 2 == 1 && d >= n - 3)) {
        return Some(RValue::Finite(d * k - 1 + q * (2 * k - q - 2) / 2));
    }
    None
}

/// Which power of a Pfaffian ideal is being considered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerVariant {
    Ordinary,
    Saturated,
    Symbolic,
}

impl PowerVariant {
    pub const ALL: [PowerVariant; 3] = [
        PowerVariant::Ordinary,
        PowerVariant::Saturated,
        PowerVariant::Symbolic,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PowerVariant::Ordinary => "ordinary",
            PowerVariant::Saturated => "saturated",
            PowerVariant::Symbolic => "symbolic",
        }
    }
}

/// Regularity of the quotient by a power of the `2k`-Pfaffian ideal through
/// the optimization route: the maximum of brute-force `R` over the variant's
/// `q`-range (all even `q <= 2k-2` for ordinary powers, even `2 <= q` for
/// saturations, `q = 2k-2` alone for symbolic powers). Add one for the
/// regularity of the ideal.
pub fn reg_power_via_r(k: usize, d: i64, ctx: &Context, variant: PowerVariant) -> Result<RValue> {
    if k < 1 || k > ctx.m() {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= m = {}, got k = {k}",
            ctx.m()
        )));
    }
    if d < 1 {
        return Err(Error::OutOfRange(format!("need d >= 1, got d = {d}")));
    }
    let two_k = 2 * k as i64;
    let q_lo = match variant {
        PowerVariant::Ordinary => 0,
        PowerVariant::Saturated => 2,
        PowerVariant::Symbolic => two_k - 2,
    };
    let mut best = RValue::NegInfinity;
    let mut q = q_lo;
    while q <= two_k - 2 {
        let inst = OptInstance::new(q, k as i64, ctx.n() as i64, d)?;
        best = best.max(r_bruteforce(&inst));
        q += 2;
    }
    Ok(best)
}
