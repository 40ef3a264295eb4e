//! Knot input data: Alexander polynomial, Seifert matrix and signatures,
//! `V`/`H` profiles and the record tying them together.

mod alexander;
mod cyclotomic;
mod data;
mod interval;
mod seifert;
mod signature;
mod vh;

pub use alexander::{second_derivative_at_one, torsion_coefficients, AlexanderPoly};
pub use data::{KnotData, ReducedSummand};
pub use seifert::{alexander_from_seifert, SeifertMatrix};
pub use signature::{
    sigma_total, sigma_total_with, signature_function, signature_function_with, signature_inertia_with, Inertia,
    PrecisionLadder, DEFAULT_START_BITS, MAX_BITS, PRECISION_ENV,
};
pub use vh::{validate_vh, vh_from_lspace_knot, VHProfile, VhDiagnostics};
