//! Gamma-regular elements and sequences, gamma-depth, componentwise
//! linearity and the invariants built on them.

mod audit;
mod basic;
mod cwl;
mod depth;
mod invariants;
mod regular;

pub use audit::{splitting_audit, AuditItem, SplittingReport};
pub use basic::{
    alpha, alpha_hilbert, annihilator_dims, beta1, cmod, cmod_component, component, generated_submodule,
    local_cohomology_zero, reduce_mod_linear, socle, truncate_ge, Alpha, Subquotient,
};
pub use cwl::{is_componentwise_linear, is_submodule_componentwise_linear, CwlDegree, CwlReport};
pub use depth::{gamma_depth, gamma_depth_from, DepthWitness, STEP_BUDGET};
pub use invariants::{
    cd_invariant, cd_report, default_delta_cap, delta_invariant, retry_seed, submodule_as_module, verify_main_theorem,
    CdReport, DeltaOutcome, MainTheoremReport,
};
pub use regular::{
    default_scan_bound, is_gamma_regular, is_gamma_sequence, is_hat_gamma_regular, is_m_full, is_strongly_m_full,
    m_full_conditions, Criteria, GammaCertificate, HatGammaReport, MFullConditions, SequenceCheck,
};
