//! Slope stability of decomposable parabolic Higgs bundles and `Sp(2n, R)` Toledo invariants.
//!
//! Stability is decided on coordinate subbundles only. A destabilising coordinate subbundle
//! always destabilises. The converse can fail when several summands map into the same target,
//! because the kernel of the Higgs field is then not a coordinate subbundle. For monomial
//! patterns kernels and images stay coordinate and the Milnor–Wood argument goes through.

mod filtration;
mod hitchin;
mod model;
mod sp;

pub use filtration::{
    alpha_pairing, alpha_stability_check_gl, pardeg_of_reduction_gl, relative_degree, sp_filtration_degree,
    sp_support_membership, AlphaCheck, CoordinateFiltration, SupportCheck, WeightedFiltration,
};
pub use hitchin::{hitchin_model, hitchin_sp_triple, hitchin_summands};
pub use model::{
    invariant_subsets, stability_verdict, DecomposableHiggsModel, ModelSpec, StabilityVerdict, Verdict, MAX_SUMMANDS,
};
pub use sp::{general_mw_interval, is_maximal, milnor_wood_bound, toledo, SpTripleModel, SpTripleSpec};
