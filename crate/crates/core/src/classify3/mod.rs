//! Three-qubit classification.
//!
//! Pure states in canonical form are sorted into GHZ subclasses with
//! self-referential witnesses; arbitrary states are sorted into SLOCC
//! classes by thresholding the SPA-PT spectrum of each single-qubit cut.

pub mod canonical;
pub mod slocc;
pub mod witnesses;

pub use canonical::{
    canonical_state, correlation_tensors, lu_invariants, subclass_fidelities, CanonicalThreeQubit,
    CorrelationTensor, LuInvariants, Subclass,
};
pub use slocc::{
    ghz_w_lambda_min, ghz_w_mixture_analysis, ghz_w_q_forms, slocc_classify, slocc_classify_with,
    slocc_decide, GhzWMixtureReport, MixtureLabel, SloccOutcome, SloccVerdict, SLOCC_THRESHOLD,
};
pub use witnesses::{
    classify_ghz_subclass, ghz_witness_expectation, ghz_witness_operator, ghz_witness_operator_for,
    ghz_witness_value, maximal_slice, pauli_operators, superposition_example, SubclassReport,
    Witness, WitnessReading,
};
