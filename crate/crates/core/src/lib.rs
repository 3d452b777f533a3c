//! Exact verification engine for colored overpartition identities:
//! truncated multivariate q-series, difference-condition partition families,
//! staircase bijections, and a registry of identities checked to finite bounds.

pub mod combinatorics;
pub mod identities;
pub mod qfactory;
pub mod series;
pub mod staircase;

pub use combinatorics::{
    Color, ColoredPart, CountTable, DifferenceMatrix, FamilyId, FamilySpec, JaggedOverpartition, ProductSideId,
    Stats, UncoloredOverpartition,
};
pub use identities::{CaseId, IdentityCase, Profile, Report, Verdict, VerifyBounds};
pub use series::{AbdPoly, Bounds, Comparison, DilationRule, Monomial, Series, SeriesError, WeightFloor, ZWindow};
pub use staircase::{AuditVariant, ComponentQuadruple, StaircaseSelection, Variant};
