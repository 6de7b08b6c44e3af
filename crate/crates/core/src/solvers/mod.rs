//! Exact solvers on tractable classes and the approximation subroutines the
//! EPA algorithms build on.

mod cograph;
mod cover;
mod forest;
mod fvs;
mod lp;
mod matching;

pub use cograph::{wvc_cluster, wvc_cograph};
pub use cover::{cvc_savage, vc_2approx};
pub use forest::wvc_forest;
pub use fvs::fvs_2approx;
pub use lp::{lp_half_integral_vc, HalfIntegralLP, HalfValue};
pub use matching::{max_matching, Matching};
