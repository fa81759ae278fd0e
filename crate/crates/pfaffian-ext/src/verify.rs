//! Exhaustive cross-validation sweeps: every closed form in the library is
//! checked against an independent route (Grassmannian cohomology oracle,
//! brute-force optimization, Weyl-dimension bookkeeping) over desk-scale
//! parameter ranges. The CLI `selftest` command and the acceptance test
//! suite both run these.

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::kodaira_verify;
use crate::error::Result;
use crate::ext_maps::{
    disjointness_check, ext_map_analysis, ext_of_quotient, verify_injectivity_powers,
};
use crate::ideal::IdealSpec;
use crate::optimization::{
    r_bruteforce, r_bruteforce_argmax, r_closed, reg_power_via_r, OptInstance, PowerVariant, RValue,
};
use crate::partition::{
    enumerate_partitions, partitions_of_size, sym_dimension, weyl_dimension, Context, Partition,
};
use crate::regularity::{
    b_function, has_linear_resolution_basic, has_linear_resolution_power, reg_basic, reg_ideal,
    reg_of_labels, reg_power_closed, reg_quotient,
};
use crate::subquotient::{
    ext_closed_form, reg_subquotient, subquotient_hilbert_dim, DegreeWindow, ExtDecomposition,
    SubquotLabel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Quick,
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str, cases: usize, mut failures: Vec<String>) -> Self {
        failures.sort();
        failures.truncate(20);
        SuiteReport {
            name: name.to_string(),
            cases,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfTestReport {
    pub scale: String,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

/// Runs the cross-validation suites at the requested scale.
pub fn run_selftest(scale: Scale) -> SelfTestReport {
    let suites = match scale {
        Scale::Quick => vec![
            golden_grassmannian(),
            spot_value_checks(),
            bott_vs_closed(7, 3, Some(20)),
            optimization_oracle(6, 4),
            triple_route_regularity(6, 4),
            hilbert_conservation(5, 4, 2),
            injectivity_sweep(6, 3),
        ],
        Scale::Full => vec![
            golden_grassmannian(),
            spot_value_checks(),
            bott_vs_closed(7, 3, None),
            optimization_oracle(8, 8),
            triple_route_regularity(8, 8),
            hilbert_conservation(6, 6, 2),
            kodaira_exhaustive(7, 3),
            euler_characteristic_duality(6, 2),
            label_set_closed_forms(8, 6),
            injectivity_sweep(8, 6),
            linear_resolution_sweep(9, 4),
            disjointness_sweep(7, 2),
            regularity_properties(8),
        ],
    };
    SelfTestReport {
        scale: match scale {
            Scale::Quick => "quick".into(),
            Scale::Full => "full".into(),
        },
        passed: suites.iter().all(|s| s.passed()),
        suites,
    }
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

/// All valid subquotient labels with `2 <= n <= n_max` and `z_1 <= z1_max`.
pub fn all_labels(n_max: usize, z1_max: i64) -> Vec<(Context, SubquotLabel)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        for z in enumerate_partitions(ctx.m(), z1_max, None) {
            for l in 0..ctx.m() {
                if z.part(1) == z.part(l + 1) {
                    out.push((
                        ctx,
                        SubquotLabel::new(z.clone(), l, &ctx).expect("valid label"),
                    ));
                }
            }
        }
    }
    out
}

/// All nonempty antichains of partitions with at most `m` parts, each at most
/// `part_bound`.
pub fn invariant_ideals(ctx: &Context, part_bound: i64) -> Vec<IdealSpec> {
    let elements: Vec<Partition> = enumerate_partitions(ctx.m(), part_bound, None)
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect();
    let mut chosen: Vec<Partition> = Vec::new();
    let mut out = Vec::new();
    rec_antichains(ctx, &elements, 0, &mut chosen, &mut out);
    out
}

fn rec_antichains(
    ctx: &Context,
    elements: &[Partition],
    idx: usize,
    chosen: &mut Vec<Partition>,
    out: &mut Vec<IdealSpec>,
) {
    if idx == elements.len() {
        if !chosen.is_empty() {
            out.push(IdealSpec::normalize(ctx, chosen.iter().cloned()).expect("valid generators"));
        }
        return;
    }
    rec_antichains(ctx, elements, idx + 1, chosen, out);
    let cand = &elements[idx];
    if chosen.iter().all(|p| !p.fits_in(cand) && !cand.fits_in(p)) {
        chosen.push(cand.clone());
        rec_antichains(ctx, elements, idx + 1, chosen, out);
        chosen.pop();
    }
}

fn frozen(records: &[(i64, &[i64])]) -> ExtDecomposition {
    let mut dec = ExtDecomposition::new();
    for (j, lambda) in records {
        dec.add_term(
            *j,
            crate::partition::DominantWeight::new(lambda.to_vec()).expect("dominant"),
            1,
        );
    }
    dec
}

/// The worked rank-4 example on 6x6 matrices: both Ext tables over the
/// window [-18, -6], the induced-map analysis, and the regularity values.
pub fn golden_grassmannian() -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    let mut run = || -> Result<()> {
        let ctx = Context::new(6)?;
        let window = DegreeWindow::new(-18, -6);
        let basic = IdealSpec::parse("gens:2,1", &ctx)?;
        let square = IdealSpec::parse("pow:4:2", &ctx)?;

        let basic_expected = frozen(&[
            (6, &[3, 3, 3, 3, 0, 0]),
            (6, &[3, 3, 3, 3, 1, 1]),
            (6, &[3, 3, 3, 3, 2, 2]),
            (6, &[3, 3, 3, 3, 3, 3]),
            (15, &[6, 6, 6, 6, 5, 5]),
            (15, &[6, 6, 6, 6, 6, 6]),
        ]);
        let square_expected = frozen(&[
            (6, &[3, 3, 3, 3, 0, 0]),
            (6, &[3, 3, 3, 3, 1, 1]),
            (6, &[3, 3, 3, 3, 2, 2]),
            (6, &[3, 3, 3, 3, 3, 3]),
            (6, &[4, 4, 3, 3, -1, -1]),
            (6, &[4, 4, 3, 3, 0, 0]),
            (6, &[4, 4, 3, 3, 1, 1]),
            (6, &[4, 4, 3, 3, 2, 2]),
            (6, &[4, 4, 3, 3, 3, 3]),
            (15, &[6, 6, 6, 6, 6, 6]),
        ]);

        check(
            &mut failures,
            ext_of_quotient(&basic, &window)? == basic_expected,
            || "ext table of gens:2,1 deviates from the frozen table".into(),
        );
        check(
            &mut failures,
            ext_of_quotient(&square, &window)? == square_expected,
            || "ext table of pow:4:2 deviates from the frozen table".into(),
        );

        let analysis = ext_map_analysis(&basic, &square, &window)?;
        check(
            &mut failures,
            analysis.kernel == frozen(&[(15, &[6, 6, 6, 6, 5, 5])]),
            || "kernel of the induced map deviates".into(),
        );
        check(
            &mut failures,
            analysis.cokernel
                == frozen(&[
                    (6, &[4, 4, 3, 3, -1, -1]),
                    (6, &[4, 4, 3, 3, 0, 0]),
                    (6, &[4, 4, 3, 3, 1, 1]),
                    (6, &[4, 4, 3, 3, 2, 2]),
                    (6, &[4, 4, 3, 3, 3, 3]),
                ]),
            || "cokernel of the induced map deviates".into(),
        );
        check(
            &mut failures,
            analysis.image
                == frozen(&[
                    (6, &[3, 3, 3, 3, 0, 0]),
                    (6, &[3, 3, 3, 3, 1, 1]),
                    (6, &[3, 3, 3, 3, 2, 2]),
                    (6, &[3, 3, 3, 3, 3, 3]),
                    (15, &[6, 6, 6, 6, 6, 6]),
                ]),
            || "image of the induced map deviates".into(),
        );

        check(&mut failures, reg_quotient(&square)? == 4, || {
            "reg of the quotient by pow:4:2 should be 4".into()
        });
        check(
            &mut failures,
            reg_quotient(&IdealSpec::parse("pfaff:4", &ctx)?)? == 3,
            || "reg of the quotient by pfaff:4 should be 3".into(),
        );
        check(&mut failures, reg_quotient(&basic)? == 3, || {
            "reg of the quotient by gens:2,1 should be 3".into()
        });

        let sub_regs = [
            (vec![], 1, 3i64),
            (vec![1, 1], 1, 4),
            (vec![1, 1, 1], 0, 3),
            (vec![1, 1], 0, 2),
        ];
        for (z, l, expected) in sub_regs {
            let label = SubquotLabel::new(Partition::new(z)?, l, &ctx)?;
            check(
                &mut failures,
                reg_subquotient(&label, &ctx) == expected,
                || format!("reg of subquotient {label:?} should be {expected}"),
            );
        }
        Ok(())
    };
    cases += 11;
    if let Err(e) = run() {
        failures.push(format!("setup failed: {e}"));
    }
    SuiteReport::new("golden-grassmannian", cases, failures)
}

/// Closed-form spot values of power regularity on both parities.
pub fn spot_value_checks() -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    let mut spot = |n: usize, k: usize, d: i64, variant: PowerVariant, expected: i64| {
        cases += 1;
        let ctx = Context::new(n).expect("n >= 2");
        let closed = reg_power_closed(k, d, &ctx, variant).expect("in range");
        let ideal = match variant {
            PowerVariant::Ordinary => IdealSpec::pfaffian_power(k, d, &ctx),
            PowerVariant::Saturated => IdealSpec::pfaffian_power_saturation(k, d, &ctx),
            PowerVariant::Symbolic => IdealSpec::pfaffian_symbolic(k, d, &ctx),
        }
        .expect("in range");
        let direct = reg_ideal(&ideal).expect("proper nonzero");
        let via_r = reg_power_via_r(k, d, &ctx, variant).expect("in range");
        check(
            &mut failures,
            closed == Some(expected) && direct == expected && via_r == RValue::Finite(expected - 1),
            || {
                format!(
                    "n={n} 2k={} d={d} {}: closed {closed:?}, direct {direct}, R-route {via_r}, expected {expected}",
                    2 * k,
                    variant.label()
                )
            },
        );
    };
    spot(8, 2, 6, PowerVariant::Symbolic, 12);
    spot(8, 2, 6, PowerVariant::Ordinary, 12);
    spot(8, 2, 6, PowerVariant::Saturated, 12);
    // Sub-maximal odd case n = 7, d = 3: the quotient regularity is 9, so
    // the ideal regularity is 10.
    spot(7, 3, 3, PowerVariant::Ordinary, 10);
    spot(7, 3, 3, PowerVariant::Symbolic, 10);
    spot(6, 1, 4, PowerVariant::Ordinary, 4);
    spot(6, 3, 5, PowerVariant::Ordinary, 15);
    spot(5, 2, 1, PowerVariant::Ordinary, 3);
    cases += 1;
    let ctx = Context::new(7).expect("n >= 2");
    let quotient =
        reg_quotient(&IdealSpec::pfaffian_power(3, 3, &ctx).expect("in range")).expect("proper");
    check(&mut failures, quotient == 9, || {
        format!("n=7 2k=6 d=3: quotient regularity {quotient}, expected 9")
    });
    SuiteReport::new("closed-form-spot-values", cases, failures)
}

/// Grassmannian-cohomology oracle against the closed form, term for term.
pub fn bott_vs_closed(n_max: usize, z1_max: i64, limit: Option<usize>) -> SuiteReport {
    let mut labels = all_labels(n_max, z1_max);
    if let Some(limit) = limit {
        let step = (labels.len() / limit).max(1);
        labels = labels.into_iter().step_by(step).take(limit).collect();
    }
    let window = DegreeWindow::new(-20, 20);
    let cases = labels.len();
    let failures: Vec<String> = labels
        .par_iter()
        .filter_map(|(ctx, label)| {
            let closed = ext_closed_form(label, ctx, &window);
            match crate::bott::ext_via_bott(label, ctx, &window) {
                Ok(oracle) if oracle == closed => None,
                Ok(_) => Some(format!(
                    "n={} label {label:?}: oracle and closed form disagree",
                    ctx.n()
                )),
                Err(e) => Some(format!("n={} label {label:?}: oracle failed: {e}", ctx.n())),
            }
        })
        .collect();
    SuiteReport::new("bott-oracle-vs-closed-form", cases, failures)
}

/// Brute-force optimization against the closed forms and the lower-bound
/// witnesses.
pub fn optimization_oracle(n_max: i64, d_max: i64) -> SuiteReport {
    let mut instances = Vec::new();
    for n in 2..=n_max {
        for k in 1..=(n / 2) {
            let mut q = 0;
            while q < 2 * k {
                for d in 1..=d_max {
                    instances.push(OptInstance::new(q, k, n, d).expect("valid instance"));
                }
                q += 2;
            }
        }
    }
    let cases = instances.len();
    let failures: Vec<String> = instances
        .par_iter()
        .flat_map_iter(|inst| {
            let mut local = Vec::new();
            let brute = r_bruteforce(inst);
            if let Some(closed) = r_closed(inst) {
                check(&mut local, closed == brute, || {
                    format!("{inst:?}: closed {closed} but brute force {brute}")
                });
                // At the optimum of a covered nonempty instance some argmax
                // pair has maximal y-size d(2k-q)-2 (checked away from the
                // odd submaximal case, which is covered by its own formula).
                let in_size_cases = (2 * inst.k <= inst.n - 2
                    && ((inst.n % 2 == 0 && inst.d >= inst.n - 2)
                        || (inst.n % 2 == 1 && inst.d >= inst.n - 3)))
                    || (inst.n % 2 == 0 && 2 * inst.k == inst.n && inst.q == inst.n - 2);
                if in_size_cases && brute != RValue::NegInfinity {
                    let (_, argmax) = r_bruteforce_argmax(inst);
                    let target = inst.d * (2 * inst.k - inst.q) - 2;
                    check(
                        &mut local,
                        argmax.iter().any(|p| p.y_size() == target),
                        || format!("{inst:?}: no argmax pair of maximal y-size {target}"),
                    );
                }
            }
            // Lower bounds on the brute-force value.
            if 2 * inst.k <= inst.n - 2 && inst.d >= inst.n - 3 {
                let bound = inst.d * inst.k - 1 + inst.q * (2 * inst.k - inst.q - 2) / 2;
                check(&mut local, brute >= RValue::Finite(bound), || {
                    format!("{inst:?}: brute force {brute} below witness bound {bound}")
                });
            }
            if 2 < 2 * inst.k
                && 2 * inst.k <= inst.n - 2
                && inst.d <= inst.n - 4
                && inst.q == 2 * inst.k - 2
            {
                check(&mut local, brute >= RValue::Finite(inst.d * inst.k), || {
                    format!("{inst:?}: symbolic-range value {brute} below dk")
                });
            }
            // The q = 2k-4 witness needs k >= 3: its value is dk + 2k - 5,
            // and indeed R_{0,2,6,3} = 5 < dk = 6.
            if inst.n % 2 == 0
                && inst.k >= 3
                && 2 * inst.k <= inst.n - 2
                && inst.d == inst.n - 3
                && inst.q == 2 * inst.k - 4
            {
                check(&mut local, brute >= RValue::Finite(inst.d * inst.k), || {
                    format!("{inst:?}: even-size bound {brute} below dk")
                });
            }
            local
        })
        .collect();
    SuiteReport::new("optimization-brute-force-vs-closed", cases, failures)
}

/// Power regularity through all three routes: closed form (where covered),
/// filtration labels, and the optimization maxima.
pub fn triple_route_regularity(n_max: usize, d_max: i64) -> SuiteReport {
    let mut combos = Vec::new();
    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        for k in 1..=ctx.m() {
            for d in 1..=d_max {
                for variant in PowerVariant::ALL {
                    combos.push((ctx, k, d, variant));
                }
            }
        }
    }
    let cases = combos.len();
    let failures: Vec<String> = combos
        .par_iter()
        .flat_map_iter(|&(ctx, k, d, variant)| {
            let mut local = Vec::new();
            let tag = || format!("n={} 2k={} d={d} {}", ctx.n(), 2 * k, variant.label());
            let ideal = match variant {
                PowerVariant::Ordinary => IdealSpec::pfaffian_power(k, d, &ctx),
                PowerVariant::Saturated => IdealSpec::pfaffian_power_saturation(k, d, &ctx),
                PowerVariant::Symbolic => IdealSpec::pfaffian_symbolic(k, d, &ctx),
            }
            .expect("in range");
            let z_route = if ideal.is_unit() {
                RValue::NegInfinity
            } else {
                match ideal.z_set() {
                    Ok(zset) => reg_of_labels(&zset, &ctx),
                    Err(e) => {
                        local.push(format!("{}: label set failed: {e}", tag()));
                        return local;
                    }
                }
            };
            let r_route = reg_power_via_r(k, d, &ctx, variant).expect("in range");
            check(&mut local, z_route == r_route, || {
                format!(
                    "{}: filtration route {z_route} vs optimization route {r_route}",
                    tag()
                )
            });
            if let Some(closed) = reg_power_closed(k, d, &ctx, variant).expect("in range") {
                check(&mut local, z_route == RValue::Finite(closed - 1), || {
                    format!(
                        "{}: closed ideal reg {closed} vs filtration {z_route}",
                        tag()
                    )
                });
            }
            local
        })
        .collect();
    SuiteReport::new("triple-route-power-regularity", cases, failures)
}

/// Graded dimension bookkeeping: the filtration pieces of every small
/// invariant ideal add up to the quotient dimensions, and the doubled
/// partitions exhaust each graded piece of the ring.
pub fn hilbert_conservation(n_max: usize, deg_max: i64, part_bound: i64) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        for degree in 0..=deg_max {
            cases += 1;
            let total: num_bigint::BigInt = partitions_of_size(ctx.m(), degree, degree)
                .iter()
                .map(|z| weyl_dimension(&z.double().to_weight(ctx.n()).expect("2m <= n")))
                .sum();
            check(
                &mut failures,
                total == sym_dimension(ctx.num_vars(), degree),
                || format!("n={n} degree={degree}: graded piece of the ring miscounted"),
            );
        }
        let ideals = invariant_ideals(&ctx, part_bound);
        cases += ideals.len();
        let local: Vec<String> = ideals
            .par_iter()
            .flat_map_iter(|ideal| {
                let mut bad = Vec::new();
                let zset = match ideal.z_set() {
                    Ok(z) => z,
                    Err(e) => {
                        bad.push(format!("n={n} {ideal}: label set failed: {e}"));
                        return bad;
                    }
                };
                for degree in 0..=deg_max {
                    let filtration: num_bigint::BigInt = zset
                        .labels()
                        .map(|label| subquotient_hilbert_dim(label, degree, &ctx))
                        .sum();
                    if filtration != ideal.quotient_hilbert_dim(degree) {
                        bad.push(format!(
                            "n={n} {ideal} degree={degree}: filtration pieces do not add up"
                        ));
                    }
                }
                bad
            })
            .collect();
        failures.extend(local);
    }
    SuiteReport::new("hilbert-conservation", cases, failures)
}

/// The vanishing verifier passes on every enumerated invariant ideal.
pub fn kodaira_exhaustive(n_max: usize, part_bound: i64) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        let ideals = invariant_ideals(&ctx, part_bound);
        cases += ideals.len();
        let local: Vec<String> = ideals
            .par_iter()
            .filter_map(|ideal| match kodaira_verify(ideal) {
                Ok(report) if report.pass => None,
                Ok(report) => Some(format!(
                    "n={n} {ideal}: {}",
                    report.counterexamples.join("; ")
                )),
                Err(e) => Some(format!("n={n} {ideal}: verification failed: {e}")),
            })
            .collect();
        failures.extend(local);
    }
    SuiteReport::new("kodaira-vanishing", cases, failures)
}

/// The closed-form label sets of powers and symbolic powers against the
/// direct enumeration from the ideal generators.
pub fn label_set_closed_forms(n_max: usize, d_max: i64) -> SuiteReport {
    let mut combos = Vec::new();
    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        for k in 1..=ctx.m() {
            for d in 1..=d_max {
                combos.push((ctx, k, d));
            }
        }
    }
    let cases = combos.len();
    let failures: Vec<String> = combos
        .par_iter()
        .flat_map_iter(|&(ctx, k, d)| {
            let mut local = Vec::new();
            let run = |local: &mut Vec<String>| -> Result<()> {
                let closed = crate::ideal::z_set_power_closed(k, d, &ctx)?;
                let direct = IdealSpec::pfaffian_power(k, d, &ctx)?.z_set()?;
                check(local, closed == direct, || {
                    format!("n={} 2k={} d={d}: power label sets differ", ctx.n(), 2 * k)
                });
                let closed = crate::ideal::z_set_symbolic_closed(k, d, &ctx)?;
                let direct = IdealSpec::pfaffian_symbolic(k, d, &ctx)?.z_set()?;
                check(local, closed == direct, || {
                    format!(
                        "n={} 2k={} d={d}: symbolic label sets differ",
                        ctx.n(),
                        2 * k
                    )
                });
                Ok(())
            };
            if let Err(e) = run(&mut local) {
                local.push(format!("n={} 2k={} d={d}: {e}", ctx.n(), 2 * k));
            }
            local
        })
        .collect();
    SuiteReport::new("label-set-closed-forms", cases, failures)
}

/// Label-set inclusions behind the injectivity of the canonical maps out of
/// symbolic powers.
pub fn injectivity_sweep(n_max: usize, d_max: i64) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        for k in 1..=ctx.m() {
            for d in 1..=d_max {
                cases += 1;
                match verify_injectivity_powers(k, d, &ctx) {
                    Ok(report) if report.passed() => {}
                    Ok(_) => failures.push(format!("n={n} 2k={} d={d}: inclusion fails", 2 * k)),
                    Err(e) => failures.push(format!("n={n} 2k={} d={d}: {e}", 2 * k)),
                }
            }
        }
    }
    SuiteReport::new("symbolic-power-injectivity", cases, failures)
}

/// Linear-resolution predicates against the direct regularity test.
pub fn linear_resolution_sweep(n_max: usize, x1_max: i64) -> SuiteReport {
    let mut jobs: Vec<(Context, Option<Partition>, usize, i64)> = Vec::new();
    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        for x in enumerate_partitions(ctx.m(), x1_max, None) {
            if !x.is_empty() {
                jobs.push((ctx, Some(x), 0, 0));
            }
        }
        for k in 1..=ctx.m() {
            for d in 1..=n as i64 {
                jobs.push((ctx, None, k, d));
            }
        }
    }
    let cases = jobs.len();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(ctx, basic, k, d)| match basic {
            Some(x) => {
                let predicted = has_linear_resolution_basic(x, ctx).expect("nonempty");
                let ideal = IdealSpec::basic(x.clone(), ctx).expect("fits");
                let direct = reg_ideal(&ideal).expect("proper") == x.size();
                (predicted != direct).then(|| {
                    format!(
                        "n={} basic ({x}): predicate {predicted} but direct test {direct}",
                        ctx.n()
                    )
                })
            }
            None => {
                let predicted = has_linear_resolution_power(*k, *d, ctx).expect("in range");
                let ideal = IdealSpec::pfaffian_power(*k, *d, ctx).expect("in range");
                let direct = reg_ideal(&ideal).expect("proper") == *k as i64 * d;
                (predicted != direct).then(|| {
                    format!(
                        "n={} 2k={} d={d}: predicate {predicted} but direct test {direct}",
                        ctx.n(),
                        2 * k
                    )
                })
            }
        })
        .collect();
    SuiteReport::new("linear-resolution-classification", cases, failures)
}

/// Windowed separation of irreducibles between a subquotient and its
/// rectangle-set companions.
pub fn disjointness_sweep(n_max: usize, z1_max: i64) -> SuiteReport {
    let labels = all_labels(n_max, z1_max);
    let window = DegreeWindow::new(-20, 20);
    let cases = labels.len();
    let failures: Vec<String> = labels
        .par_iter()
        .filter_map(
            |(ctx, label)| match disjointness_check(label, ctx, &window) {
                Ok(report) if report.passed() => None,
                Ok(_) => Some(format!("n={} label {label:?}: shared irreducible", ctx.n())),
                Err(e) => Some(format!("n={} label {label:?}: {e}", ctx.n())),
            },
        )
        .collect();
    SuiteReport::new("irreducible-separation", cases, failures)
}

/// Graded Euler characteristics: for every small invariant ideal and sample
/// degree `r`, the alternating sum of Ext dimensions in internal degree
/// `-D - r` equals `(-1)^D (dim (S/I)_r - P(r))`, where `D` is the number of
/// variables and `P` is the Hilbert polynomial of the quotient interpolated
/// from degrees above the regularity. This ties the full Ext pipeline
/// (labels, weight families, degrees, multiplicities) to plain dimension
/// counting through local duality.
pub fn euler_characteristic_duality(n_max: usize, part_bound: i64) -> SuiteReport {
    use num_bigint::BigInt;
    use num_traits::Zero;

    let mut jobs = Vec::new();
    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        for ideal in invariant_ideals(&ctx, part_bound) {
            if !ideal.is_unit() {
                jobs.push((ctx, ideal));
            }
        }
    }
    let cases = jobs.len();
    let failures: Vec<String> = jobs
        .par_iter()
        .flat_map_iter(|(ctx, ideal)| {
            let mut local = Vec::new();
            let d_vars = ctx.num_vars();
            let regularity = match reg_quotient(ideal) {
                Ok(r) => r,
                Err(e) => {
                    local.push(format!("n={} {ideal}: {e}", ctx.n()));
                    return local;
                }
            };

            // Newton interpolation of the Hilbert polynomial from D+1 values
            // past the regularity, where function and polynomial agree.
            let r0 = regularity + 1;
            let mut diffs: Vec<BigInt> = (0..=d_vars)
                .map(|i| ideal.quotient_hilbert_dim(r0 + i))
                .collect();
            for level in 1..diffs.len() {
                for i in (level..diffs.len()).rev() {
                    let prev = diffs[i - 1].clone();
                    diffs[i] -= prev;
                }
            }
            let poly_at = |r: i64| -> BigInt {
                diffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * crate::partition::binomial_poly(r - r0, k))
                    .sum()
            };

            for r in [-4, -2, -1, 0, 1, regularity.max(0), regularity + 2] {
                let lhs = ideal.quotient_hilbert_dim(r) - poly_at(r);
                let degree = -d_vars - r;
                let dec = match ext_of_quotient(ideal, &DegreeWindow::new(degree, degree)) {
                    Ok(dec) => dec,
                    Err(e) => {
                        local.push(format!("n={} {ideal}: {e}", ctx.n()));
                        return local;
                    }
                };
                let mut rhs = BigInt::zero();
                for (j, deg, lambda, mult) in dec.iter() {
                    debug_assert_eq!(deg, degree);
                    let term = weyl_dimension(lambda) * mult;
                    if j % 2 == 0 {
                        rhs += term;
                    } else {
                        rhs -= term;
                    }
                }
                if d_vars % 2 == 1 {
                    rhs = -rhs;
                }
                check(&mut local, lhs == rhs, || {
                    format!(
                        "n={} {ideal} r={r}: hilbert defect {lhs} vs ext alternating sum {rhs}",
                        ctx.n()
                    )
                });
            }
            local
        })
        .collect();
    SuiteReport::new("euler-characteristic-duality", cases, failures)
}

/// Assorted regularity identities: the closed basic formula against the
/// filtration route, rectangle maximality, the power monotonicity chain, and
/// strict lower bounds outside the linear range.
pub fn regularity_properties(n_max: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;

    for n in 2..=n_max {
        let ctx = Context::new(n).expect("n >= 2");
        let m = ctx.m();

        for x in enumerate_partitions(m, 3, None) {
            if x.is_empty() {
                continue;
            }
            cases += 1;
            let closed = reg_basic(&x, &ctx).expect("nonempty");
            let direct = reg_ideal(&IdealSpec::basic(x.clone(), &ctx).expect("fits"))
                .expect("proper nonzero");
            check(&mut failures, closed == direct, || {
                format!("n={n} basic ({x}): closed {closed} vs filtration {direct}")
            });
        }

        // Among labels with prescribed equal first parts, the full rectangle
        // maximizes subquotient regularity, with an explicit value.
        for l in 0..m {
            for c in 0..=3i64 {
                cases += 1;
                let expected = if n % 2 == 0 {
                    (n as i64 - 2 * l as i64 - 1) * l as i64 + c * m as i64
                } else {
                    b_function(l as i64, n as i64, c)
                };
                let mut best = i64::MIN;
                let mut rect_value = None;
                for tail in enumerate_partitions(m - l - 1, c, None) {
                    let mut parts = vec![c; l + 1];
                    parts.extend_from_slice(tail.parts());
                    let z = Partition::new(parts).expect("partition");
                    let is_rect = z == Partition::new(vec![c; m]).expect("rectangle");
                    let label = SubquotLabel::new(z, l, &ctx).expect("valid");
                    let value = reg_subquotient(&label, &ctx);
                    best = best.max(value);
                    if is_rect {
                        rect_value = Some(value);
                    }
                }
                check(
                    &mut failures,
                    rect_value == Some(expected) && best == expected,
                    || {
                        format!(
                            "n={n} l={l} c={c}: rectangle value {rect_value:?}, max {best}, expected {expected}"
                        )
                    },
                );
            }
        }

        for k in 1..=m {
            for d in 1..=6i64 {
                cases += 1;
                let reg_of = |variant: PowerVariant| -> Option<i64> {
                    let ideal = match variant {
                        PowerVariant::Ordinary => IdealSpec::pfaffian_power(k, d, &ctx),
                        PowerVariant::Saturated => IdealSpec::pfaffian_power_saturation(k, d, &ctx),
                        PowerVariant::Symbolic => IdealSpec::pfaffian_symbolic(k, d, &ctx),
                    }
                    .expect("in range");
                    if ideal.is_unit() {
                        None
                    } else {
                        Some(reg_ideal(&ideal).expect("proper nonzero"))
                    }
                };
                let pow = reg_of(PowerVariant::Ordinary).expect("power is proper");
                let sat = reg_of(PowerVariant::Saturated);
                let sym = reg_of(PowerVariant::Symbolic).expect("symbolic is proper");
                if let Some(sat) = sat {
                    check(&mut failures, pow >= sat && sat >= sym, || {
                        format!(
                            "n={n} 2k={} d={d}: chain {pow} >= {sat} >= {sym} fails",
                            2 * k
                        )
                    });
                }

                let two_k = 2 * k as i64;
                let nn = n as i64;
                if 2 < two_k && two_k <= nn - 2 {
                    if d <= nn - 4 {
                        check(&mut failures, sym > d * k as i64, || {
                            format!("n={n} 2k={two_k} d={d}: symbolic reg {sym} not above dk")
                        });
                    }
                    let outside_linear = (nn % 2 == 0 && d < nn - 2) || (nn % 2 == 1 && d < nn - 3);
                    if outside_linear {
                        let sat = sat.expect("k >= 2 saturation is proper");
                        check(&mut failures, sat > d * k as i64 && pow >= sat, || {
                            format!("n={n} 2k={two_k} d={d}: saturated reg {sat} not above dk")
                        });
                    }
                }
            }
        }
    }
    SuiteReport::new("regularity-identities", cases, failures)
}
