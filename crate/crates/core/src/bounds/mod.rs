//! Verification of the effective inequalities behind the counting bounds:
//! pairwise products on the unit circle, the discriminant leading
//! coefficient, polynomial sublevel measures, the orbit-count bound
//! functions, partition growth scans, Fekete point optimization on [0, 1],
//! and unit/Euler-factor ingredients.
//!
//! This is the only module where floating point is allowed. Numeric kernels
//! are generic over the scalar and run at double-double precision
//! ([`crate::Wide`], ~106-bit significand) in the public entry points, with
//! exact integer arithmetic wherever a compared quantity is integral.

mod circle;
mod exponent;
mod fekete;
mod leading;
mod partition_bounds;
mod stark;
mod sublevel;

pub use circle::{circle_product_search, CircleSearchResult, UnitCirclePoints};
pub use exponent::{exponent_audit, ExponentAudit, ExponentComponent};
pub use fekete::{fekete_diameter, FeketeConfiguration};
pub use leading::{disc_leading_coeff, expected_leading_coeff};
pub use partition_bounds::{
    bound_f, bound_g, hardy_ramanujan_scan, orbit_bound_grid_check, GrowthScan,
    OrbitGridOutcome, OrbitGridViolation,
};
pub use stark::{unit_euler_checks, UnitEulerRecord};
pub use sublevel::{sublevel_measure, sublevel_report, MeasureEstimate, SublevelReport};

/// Floating-point scalar for the numeric kernels. `f64` and [`crate::Wide`]
/// both qualify; entry points default to the wide type.
pub trait Real: num_traits::Float + std::fmt::Debug {
    fn pi() -> Self;
    fn ln2() -> Self;
    /// Exact embedding of an f64.
    fn of(v: f64) -> Self;
    /// Rounded projection back to f64.
    fn approx(self) -> f64;
}

impl Real for f64 {
    fn pi() -> Self {
        std::f64::consts::PI
    }

    fn ln2() -> Self {
        std::f64::consts::LN_2
    }

    fn of(v: f64) -> Self {
        v
    }

    fn approx(self) -> f64 {
        self
    }
}

impl Real for crate::Wide {
    fn pi() -> Self {
        twofloat::consts::PI
    }

    fn ln2() -> Self {
        twofloat::consts::LN_2
    }

    fn of(v: f64) -> Self {
        crate::Wide::from(v)
    }

    fn approx(self) -> f64 {
        f64::from(self)
    }
}
