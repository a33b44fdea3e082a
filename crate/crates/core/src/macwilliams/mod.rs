//! MacWilliams-type identities for codes under pomset block metrics.

pub mod chain;
pub mod field;
pub mod fourier;
pub mod probe;
pub mod report;
pub mod sum;

pub use chain::{chain_coefficients, chain_dual_enumerator, lee_chain_dual_enumerator, lw_term, ChainCoefficients};
pub use field::{
    classification_sets, classify_block_dim2, field_dim2_dual_enumerator, is_prime, orbit_class, orbit_sum,
    printed_rule_class, ClassSets, DimTwoClass,
};
pub use fourier::fourier_dual_enumerator;
pub use probe::{macwilliams_probe, macwilliams_probe_exhaustive, ProbeReport, ProbeWitness};
pub use report::{
    auto_method, brute_force_dual_enumerator, predict_dual_enumerator, verify_identity, IdentityReport, Method, Verdict,
};
pub use sum::{composition_dual_enumerator, sum_dual_enumerator, Composition, SumPart};
