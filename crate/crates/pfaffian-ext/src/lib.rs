//! Equivariant Ext modules, Castelnuovo–Mumford regularity and sheaf
//! cohomology for GL-invariant ideals in the coordinate ring of `n x n`
//! skew-symmetric matrices.
//!
//! Invariant ideals are indexed by antichains of partitions with at most
//! `floor(n/2)` parts; powers, symbolic powers and saturations of Pfaffian
//! ideals are special families. The quotient by such an ideal carries an
//! equivariant filtration with combinatorially labelled factors, and the Ext
//! modules of the factors decompose into explicit infinite families of
//! irreducibles. From those decompositions the crate derives regularity,
//! linear-resolution classifications, kernels and cokernels of induced Ext
//! maps for nested ideals, and sheaf-cohomology tables of the corresponding
//! thickenings via graded local duality.
//!
//! Every closed formula here is cross-checked by an independent route: a
//! Borel–Weil–Bott oracle on Grassmannians for the Ext decompositions, a
//! brute-force combinatorial optimization for power regularity, and exact
//! Weyl-dimension bookkeeping for the filtrations (see [`verify`]).

pub mod bott;
pub mod cohomology;
pub mod error;
pub mod ext_maps;
pub mod ideal;
pub mod optimization;
pub mod partition;
pub mod regularity;
pub mod subquotient;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::{IdealSpec, ZSet};
pub use partition::{Context, DominantWeight, Partition};
pub use subquotient::{DegreeWindow, ExtDecomposition, SubquotLabel};
