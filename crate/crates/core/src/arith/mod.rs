//! Exact integer and rational arithmetic: slopes, negative continued
//! fractions, the sawtooth function and Dedekind sums.

mod contfrac;
mod dedekind;
mod rational;
mod slope;

pub use contfrac::{neg_cont_frac, NegContFrac};
pub use dedekind::{dedekind_sum, dedekind_sum_cf, is_cosmetic_residue, mod_inverse, sawtooth};
pub use rational::{ParseRationalError, Rational};
pub use slope::{reduce_slope, Slope};
