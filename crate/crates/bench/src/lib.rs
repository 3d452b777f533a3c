//! Inputs shared by the engine benchmarks.

use capparelli_core::combinatorics::{enumerate_family, FamilyId, JaggedOverpartition};
use capparelli_core::staircase::{decompose_levels, ComponentQuadruple};

/// Every member of the aag family up to `max_n` with at most
/// `k` parts, paired with its level decomposition.
pub fn level_inputs(max_n: u32, k: u32) -> Vec<(JaggedOverpartition, ComponentQuadruple)> {
    let spec = FamilyId::Aag.spec();
    (0..=max_n)
        .flat_map(|n| enumerate_family(&spec, n, Some(k)).expect("aag needs no k bound"))
        .map(|l| {
            let c = decompose_levels(&l).expect("aag members decompose");
            (l, c)
        })
        .collect()
}
