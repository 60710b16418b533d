//! Normal CDF, growth-formula parameters, the estimator sums and the
//! bound checks on non-primitive classes.

mod bounds;
mod clt;
mod estimate;
mod normal;

pub use bounds::{
    check_lemma71, check_lemma72, primitive_ratio_series, reciprocal_class_counts,
    PowerBoundReport, SquareBoundReport,
};
pub use clt::{alphabet_moments, clt_params, CltParams};
pub use estimate::{
    estimate_count, estimate_count_with, log_sum_exp, modular_closed_form, modular_log10,
    render_decimal, Boundary, EstimateValue, Term,
};
pub use normal::{log_phi_cdf, phi_cdf, phi_pdf, MILLS_CUTOFF};
