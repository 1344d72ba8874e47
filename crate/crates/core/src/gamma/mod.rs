//! Complex gamma-type kernels: complete and log gamma, incomplete gamma on the
//! principal sheet and its continuation, Pochhammer symbols.

mod complete;
mod continuation;
mod incomplete;
mod pochhammer;

pub use complete::{gamma, ln_gamma, rgamma};
pub use continuation::{continue_lower, continue_upper, continue_upper_scaled, BranchIndex};
pub use incomplete::{
    incomplete_pair, lower_incomplete, upper_incomplete, upper_incomplete_eval, upper_incomplete_scaled, GammaPair,
    KernelEval, KernelMethod, CF_MAX_ITER,
};
pub use pochhammer::{pochhammer, pochhammer_vanishes};
