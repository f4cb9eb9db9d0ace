//! Verifiers assembling the arithmetic layers into exact identity checks.

mod classical;
mod eigen;
mod headline;
pub mod lemmas;
mod report;

pub use classical::{
    fermat_l_polynomial, fermat_point_count, fermat_zeta, verify_carlitz, verify_sp_squares,
    verify_wuwang,
};
pub use eigen::verify_eigen_lemmas;
pub use headline::{
    scan_sun_conjecture, verify_corollary, verify_thm1, verify_thm2, verify_thm2_all,
    verify_thm2_for,
};
pub use report::{sort_reports, ExactValue, Report, Status};
