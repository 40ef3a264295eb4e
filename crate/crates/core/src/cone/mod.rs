//! Truncated mapping cones for rational surgery, their homology, and the
//! closed-form correction terms and reduced groups they are checked against.

mod complex;
mod formula;
pub mod gf2;
mod layout;

pub use complex::{build_cone, cone_homology, cone_homology_unchecked, Cone, ConeSpec, GenKind, Generator, Side};
pub use formula::{
    d_surgery, d_surgery_profile, d_surgery_signed, euler_char_red, hf_red, hf_red_total_rank, Determination,
};
pub use layout::{check_homogeneous, Layout};

use num_integer::Integer;

use crate::arith::Rational;

/// `HF⁺` of one Spin^c structure: a tower starting at `tower_bottom` plus
/// finitely many reduced generators, as `(grading, rank)` in increasing
/// grading.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedModule {
    pub tower_bottom: Option<Rational>,
    pub reduced: Vec<(Rational, usize)>,
}

impl GradedModule {
    pub fn reduced_rank(&self) -> usize {
        self.reduced.iter().map(|(_, r)| r).sum()
    }

    /// `Σ ±rank`, `+` when the grading differs from `reference` by an even
    /// integer.
    pub fn euler_characteristic(&self, reference: &Rational) -> i64 {
        self.reduced
            .iter()
            .map(|(g, r)| {
                let diff = g - reference;
                debug_assert!(diff.is_integer());
                if diff.numer().is_even() {
                    *r as i64
                } else {
                    -(*r as i64)
                }
            })
            .sum()
    }
}
