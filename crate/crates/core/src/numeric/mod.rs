//! Root finding, minimization and quadrature shared by every module.

pub mod fit;
pub mod quadrature;
pub mod roots;

pub use fit::log_log_slope;
pub use quadrature::{integrate, integrate_to_infinity, integrate_triangles, Integral, Tolerance};
pub use roots::{bisect, golden_section, linspace, newton_bisect, scan_minimize, sign_changes, Minimum, Root};
