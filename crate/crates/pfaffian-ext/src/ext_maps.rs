//! Ext modules of quotients by invariant ideals, and the induced maps for
//! nested ideals.
//!
//! The Ext of a quotient is the direct sum of the subquotient Ext modules
//! over the ideal's filtration labels. For nested ideals the induced map in
//! each cohomological index has kernel, image and cokernel given by the
//! label-set differences and intersection, so map analysis is set algebra on
//! labels followed by windowed term assembly.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{
    z_set_of_generators, z_set_power_closed, z_set_symbolic_closed, IdealSpec, ZSet,
};
use crate::partition::{Context, DominantWeight, Partition};
use crate::subquotient::{ext_closed_form, DegreeWindow, ExtDecomposition, SubquotLabel};

/// Full Ext decomposition of the quotient by a proper nonzero ideal,
/// truncated to the window: the disjoint union over the filtration labels.
pub fn ext_of_quotient(ideal: &IdealSpec, window: &DegreeWindow) -> Result<ExtDecomposition> {
    if ideal.is_unit() {
        return Err(Error::Domain(
            "the quotient by the unit ideal is zero".into(),
        ));
    }
    if ideal.is_zero() {
        return Err(Error::Domain(
            "the quotient by the zero ideal is free".into(),
        ));
    }
    let mut out = ExtDecomposition::new();
    for label in ideal.z_set()?.labels() {
        out.merge(&ext_closed_form(label, ideal.ctx(), window));
    }
    Ok(out)
}

/// Kernel, image and cokernel of the induced Ext maps for an inclusion of
/// ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtMapAnalysis {
    pub kernel: ExtDecomposition,
    pub image: ExtDecomposition,
    pub cokernel: ExtDecomposition,
}

/// Analyzes the maps `Ext^j(S/larger, S) -> Ext^j(S/smaller, S)` induced by
/// an inclusion `smaller` inside `larger` (checked combinatorially on the
/// generators). Kernel terms come from labels of `larger` only, image terms
/// from shared labels, cokernel terms from labels of `smaller` only.
pub fn ext_map_analysis(
    larger: &IdealSpec,
    smaller: &IdealSpec,
    window: &DegreeWindow,
) -> Result<ExtMapAnalysis> {
    if larger.ctx() != smaller.ctx() {
        return Err(Error::Domain("ideals live in different rings".into()));
    }
    if !larger.contains_ideal(smaller) {
        return Err(Error::Domain(format!(
            "inclusion violation: {smaller} is not contained in {larger}"
        )));
    }
    if larger.is_unit() || smaller.is_zero() {
        return Err(Error::Domain(
            "map analysis requires proper nonzero ideals".into(),
        ));
    }
    let z_larger = larger.z_set()?;
    let z_smaller = smaller.z_set()?;
    let assemble = |labels: &ZSet| {
        let mut out = ExtDecomposition::new();
        for label in labels.labels() {
            out.merge(&ext_closed_form(label, larger.ctx(), window));
        }
        out
    };
    Ok(ExtMapAnalysis {
        kernel: assemble(&z_larger.difference(&z_smaller)),
        image: assemble(&z_larger.intersection(&z_smaller)),
        cokernel: assemble(&z_smaller.difference(&z_larger)),
    })
}

/// Injectivity data for the canonical maps out of the Ext of a symbolic
/// power: into the ordinary power and into the next symbolic power. Both
/// kernels vanish because the label sets are nested, which the report
/// records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub n: usize,
    pub k: usize,
    pub d: i64,
    pub symbolic_labels: usize,
    pub power_labels: usize,
    pub symbolic_in_power: bool,
    pub symbolic_in_next_symbolic: bool,
    pub kernel_to_power_empty: bool,
    pub kernel_to_next_symbolic_empty: bool,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.symbolic_in_power
            && self.symbolic_in_next_symbolic
            && self.kernel_to_power_empty
            && self.kernel_to_next_symbolic_empty
    }
}

pub fn verify_injectivity_powers(k: usize, d: i64, ctx: &Context) -> Result<InjectivityReport> {
    let z_sym = z_set_symbolic_closed(k, d, ctx)?;
    let z_pow = z_set_power_closed(k, d, ctx)?;
    let z_sym_next = z_set_symbolic_closed(k, d + 1, ctx)?;

    debug_assert!(IdealSpec::pfaffian_symbolic(k, d, ctx)?
        .contains_ideal(&IdealSpec::pfaffian_power(k, d, ctx)?));
    debug_assert!(IdealSpec::pfaffian_symbolic(k, d, ctx)?
        .contains_ideal(&IdealSpec::pfaffian_symbolic(k, d + 1, ctx)?));

    Ok(InjectivityReport {
        n: ctx.n(),
        k,
        d,
        symbolic_labels: z_sym.len(),
        power_labels: z_pow.len(),
        symbolic_in_power: z_sym.is_subset(&z_pow),
        symbolic_in_next_symbolic: z_sym.is_subset(&z_sym_next),
        kernel_to_power_empty: z_sym.difference(&z_pow).is_empty(),
        kernel_to_next_symbolic_empty: z_sym.difference(&z_sym_next).is_empty(),
    })
}

/// The rectangles attached to a label: the `(l+1)`-row rectangle one column
/// wider than `z`, together with one rectangle per strict descent of `z`
/// below row `l+1`.
pub fn rectangle_set(label: &SubquotLabel, ctx: &Context) -> Vec<Partition> {
    let z = label.z();
    let l = label.l();
    let mut out =
        vec![Partition::new(vec![z.part(1) + 1; l + 1]).expect("rectangles are partitions")];
    for i in l + 2..=ctx.m() {
        if z.part(i - 1) > z.part(i) {
            out.push(Partition::new(vec![z.part(i) + 1; i]).expect("rectangles are partitions"));
        }
    }
    out
}

/// Separation data for one label: terms of its Ext modules share no
/// irreducibles with the Ext of the rectangle-set labels at adjacent
/// indices, nor with the Ext of the deeper-rectangle quotient at equal
/// indices. Checked exhaustively inside the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointnessReport {
    pub z: Vec<i64>,
    pub l: usize,
    pub window: DegreeWindow,
    pub adjacent_labels: usize,
    pub adjacent_disjoint: bool,
    pub equal_labels: usize,
    pub equal_disjoint: bool,
}

impl DisjointnessReport {
    pub fn passed(&self) -> bool {
        self.adjacent_disjoint && self.equal_disjoint
    }
}

pub fn disjointness_check(
    label: &SubquotLabel,
    ctx: &Context,
    window: &DegreeWindow,
) -> Result<DisjointnessReport> {
    let base: BTreeSet<(i64, DominantWeight)> = ext_closed_form(label, ctx, window)
        .iter()
        .map(|(j, _, lambda, _)| (j, lambda.clone()))
        .collect();

    // Adjacent indices: labels of the rectangle set together with z itself.
    let mut gens = rectangle_set(label, ctx);
    gens.push(label.z().clone());
    let adjacent = z_set_of_generators(&gens, ctx)?;
    let mut adjacent_disjoint = true;
    for other in adjacent.labels() {
        let dec = ext_closed_form(other, ctx, window);
        if dec
            .iter()
            .any(|(j, _, lambda, _)| base.contains(&(j - 1, lambda.clone())))
        {
            adjacent_disjoint = false;
        }
    }

    // Equal indices: labels of the rectangles strictly below row l+1.
    let deeper: Vec<Partition> = (label.l() + 2..=ctx.m())
        .map(|i| Partition::new(vec![label.z().part(i) + 1; i]).expect("rectangle"))
        .collect();
    let equal = z_set_of_generators(&deeper, ctx)?;
    let mut equal_disjoint = true;
    for other in equal.labels() {
        let dec = ext_closed_form(other, ctx, window);
        if dec
            .iter()
            .any(|(j, _, lambda, _)| base.contains(&(j, lambda.clone())))
        {
            equal_disjoint = false;
        }
    }

    Ok(DisjointnessReport {
        z: label.z().parts().to_vec(),
        l: label.l(),
        window: *window,
        adjacent_labels: adjacent.len(),
        adjacent_disjoint,
        equal_labels: equal.len(),
        equal_disjoint,
    })
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

    fn weight(entries: &[i64]) -> DominantWeight {
        DominantWeight::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn ext_of_quotient_for_pfaffian_square() {
        let c = ctx(6);
        let ideal = IdealSpec::pfaffian_power(2, 2, &c).unwrap();
        let dec = ext_of_quotient(&ideal, &DegreeWindow::new(-18, -6)).unwrap();
        assert_eq!(dec.indices(), vec![6, 15]);
        // Ext^6: four terms from the rank-two locus plus five from the
        // deeper subquotient; Ext^15: the single top term.
        assert_eq!(dec.multiplicity(6, &weight(&[3, 3, 3, 3, 0, 0])), 1);
        assert_eq!(dec.multiplicity(6, &weight(&[4, 4, 3, 3, -1, -1])), 1);
        assert_eq!(dec.multiplicity(15, &weight(&[6, 6, 6, 6, 6, 6])), 1);
        assert_eq!(dec.multiplicity(15, &weight(&[6, 6, 6, 6, 5, 5])), 0);
        assert_eq!(dec.num_terms(), 10);
    }

    #[test]
    fn ext_of_quotient_rejects_degenerate_ideals() {
        let c = ctx(6);
        let w = DegreeWindow::new(-6, 0);
        assert!(ext_of_quotient(&IdealSpec::unit(&c), &w).is_err());
        assert!(ext_of_quotient(&IdealSpec::zero(&c), &w).is_err());
    }

    #[test]
    fn map_analysis_grassmannian_example() {
        let c = ctx(6);
        let larger = IdealSpec::basic(p(&[2, 1]), &c).unwrap();
        let smaller = IdealSpec::pfaffian_power(2, 2, &c).unwrap();
        let window = DegreeWindow::new(-18, -6);
        let analysis = ext_map_analysis(&larger, &smaller, &window).unwrap();

        // Kernel lives only in the top index.
        assert_eq!(analysis.kernel.indices(), vec![15]);
        assert_eq!(
            analysis
                .kernel
                .multiplicity(15, &weight(&[6, 6, 6, 6, 5, 5])),
            1
        );
        // The top map is surjective: no cokernel in index 15.
        assert_eq!(analysis.cokernel.indices(), vec![6]);
        assert_eq!(
            analysis
                .cokernel
                .multiplicity(6, &weight(&[4, 4, 3, 3, 3, 3])),
            1
        );

        // Set algebra consistency with the two endpoint decompositions.
        let mut left = analysis.kernel.clone();
        left.merge(&analysis.image);
        assert_eq!(left, ext_of_quotient(&larger, &window).unwrap());
        let mut right = analysis.image.clone();
        right.merge(&analysis.cokernel);
        assert_eq!(right, ext_of_quotient(&smaller, &window).unwrap());
    }

    #[test]
    fn map_analysis_identity_and_violations() {
        let c = ctx(6);
        let ideal = IdealSpec::pfaffian_power(2, 2, &c).unwrap();
        let window = DegreeWindow::new(-18, -6);
        let analysis = ext_map_analysis(&ideal, &ideal, &window).unwrap();
        assert!(analysis.kernel.is_empty());
        assert!(analysis.cokernel.is_empty());
        assert_eq!(analysis.image, ext_of_quotient(&ideal, &window).unwrap());

        let larger = IdealSpec::basic(p(&[2, 1]), &c).unwrap();
        assert!(ext_map_analysis(&ideal, &larger, &window).is_err());
    }

    #[test]
    fn injectivity_examples() {
        assert!(verify_injectivity_powers(2, 2, &ctx(6)).unwrap().passed());
        assert!(verify_injectivity_powers(3, 4, &ctx(8)).unwrap().passed());
        for d in 1..=4 {
            assert!(verify_injectivity_powers(3, d, &ctx(6)).unwrap().passed());
        }
    }

    #[test]
    fn rectangle_set_examples() {
        let c = ctx(6);
        let label = SubquotLabel::new(p(&[2, 1, 1]), 0, &c).unwrap();
        assert_eq!(rectangle_set(&label, &c), vec![p(&[3]), p(&[2, 2])]);
        let label = SubquotLabel::new(Partition::empty(), 1, &c).unwrap();
        assert_eq!(rectangle_set(&label, &c), vec![p(&[1, 1])]);
    }

    #[test]
    fn disjointness_examples() {
        let window = DegreeWindow::new(-20, 20);
        for (n, z, l) in [
            (6usize, vec![], 1usize),
            (6, vec![1, 1], 1),
            (7, vec![1, 1, 1], 2),
        ] {
            let c = ctx(n);
            let label = SubquotLabel::new(Partition::new(z).unwrap(), l, &c).unwrap();
            let report = disjointness_check(&label, &c, &window).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }
}
