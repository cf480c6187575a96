//! Numerical tools for the classes `U`, `P`, `M`, `N` of normalized
//! analytic functions defined by the differential inequalities
//!
//! ```text
//! |f'(z) (z/f(z))^2 - 1|                      <= 1   (U)
//! |(z/f(z))''|                                <= 2   (P)
//! |z^2 (z/f(z))'' + f'(z) (z/f(z))^2 - 1|     <= 1   (M)
//! |-z^3 (z/f(z))''' + f'(z) (z/f(z))^2 - 1|   <= 1   (N)
//! ```
//!
//! Functions are carried through `phi = z/f` as truncated complex power
//! series ([`series`]). [`functionals`] evaluates the four expressions,
//! [`classes`] judges membership and starlikeness, [`means`] forms
//! harmonic means `2fg/(f+g)`, and [`families`] holds the example
//! families with their closed-form boundary expressions.

pub mod classes;
pub mod cli;
pub mod emit;
pub mod error;
pub mod families;
pub mod functionals;
pub mod means;
pub mod numfmt;
pub mod quadrature;
pub mod search;
pub mod series;
pub mod source;
pub mod zeta;

pub use classes::{
    check_membership, class_radius, coefficient_criterion, starlike_scan, MembershipReport, StarlikeReport,
    Verdict,
};
pub use error::{Error, Result};
pub use families::{build, Family, FamilySpec};
pub use functionals::{
    functional_eval_direct, functional_series, sup_on_circle, FunctionalKind, NormalizedFunction, ScanReport,
};
pub use means::{harmonic_mean, verify_closure, MeanResult};
pub use series::ComplexSeries;
pub use source::FunctionSource;
pub use zeta::zeta_constant;
