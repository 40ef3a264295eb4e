//! Slot bookkeeping for the truncated cone: which `A⁺_k` sits in slot `s`,
//! which slots survive truncation, and the relative gradings of the tower
//! bottoms.

use num_integer::Integer;

use crate::arith::Slope;
use crate::error::{Error, Result};
use crate::knot::VHProfile;

/// Surgery coefficient `P/Q` with `P > 0` and the sign carried by `Q`,
/// together with a Spin^c index and slot window `[-S, S]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layout {
    pub p: i64,
    pub q: i64,
    pub i: i64,
    pub s: i64,
}

impl Layout {
    /// Layout for `slope` with the smallest admissible window for genus `g`.
    pub fn minimal(slope: Slope, i: i64, g: usize) -> Result<Self> {
        let mut l = Self::with_window(slope, i, 1)?;
        while !l.window_ok(g) {
            l.s += 1;
        }
        Ok(l)
    }

    pub fn with_window(slope: Slope, i: i64, s: i64) -> Result<Self> {
        if slope.is_infinite() || slope.is_zero() {
            return Err(Error::OutOfRange(format!("slope {slope} has no finite cone")));
        }
        let (p, q) = slope.lens_form();
        if !(0..p).contains(&i) {
            return Err(Error::OutOfRange(format!("Spin^c index {i} outside [0, {}]", p - 1)));
        }
        Ok(Layout { p, q, i, s })
    }

    pub fn positive(&self) -> bool {
        self.q > 0
    }

    /// `k_s = ⌊(i + P s) / Q⌋`.
    pub fn k(&self, s: i64) -> i64 {
        Integer::div_floor(&(self.i as i128 + self.p as i128 * s as i128), &(self.q as i128)) as i64
    }

    /// Beyond the window every `A` slot must map isomorphically onto a
    /// neighbouring `B` slot.
    pub fn window_ok(&self, g: usize) -> bool {
        let g = g as i64;
        if self.s < 1 {
            return false;
        }
        if self.positive() {
            self.k(self.s + 1) >= g && self.k(-self.s - 1) <= -g
        } else {
            self.k(self.s + 1) <= -g && self.k(-self.s - 1) >= g
        }
    }

    pub fn a_slots(&self) -> std::ops::RangeInclusive<i64> {
        -self.s..=self.s
    }

    pub fn b_slots(&self) -> std::ops::RangeInclusive<i64> {
        if self.positive() {
            -self.s + 1..=self.s
        } else {
            -self.s..=self.s + 1
        }
    }

    pub fn has_b(&self, s: i64) -> bool {
        self.b_slots().contains(&s)
    }

    /// Relative grading of the bottom of `B_s`; `β_{s+1} = β_s + 2 k_s`.
    pub fn beta(&self, s: i64) -> i64 {
        let base = if self.positive() { -1 } else { 0 };
        if s >= 0 {
            base + 2 * (0..s).map(|t| self.k(t)).sum::<i64>()
        } else {
            base - 2 * (s..0).map(|t| self.k(t)).sum::<i64>()
        }
    }

    /// Relative grading of the bottom of the tower in `A_s`.
    pub fn alpha(&self, s: i64, vh: &VHProfile) -> i64 {
        self.beta(s) - 2 * vh.v(self.k(s)) + 1
    }

    pub fn widened(&self) -> Layout {
        Layout { s: self.s + 1, ..*self }
    }
}

/// `H_k - V_k = k` across the genus window, which makes both maps out of
/// `A_s` homogeneous of the same degree.
pub fn check_homogeneous(vh: &VHProfile) -> Result<()> {
    let g = vh.genus() as i64;
    for k in -g..=g {
        if vh.h(k) - vh.v(k) != k {
            return Err(Error::NonHomogeneous(format!(
                "H_{k} - V_{k} = {} but the gradings need {k}",
                vh.h(k) - vh.v(k)
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slope(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn slots_for_five_halves() {
        let l = Layout::minimal(slope(5, 2), 3, 0).unwrap();
        assert_eq!((l.p, l.q), (5, 2));
        assert_eq!(l.k(0), 1);
        assert_eq!(l.k(-1), -1);
        assert_eq!(l.s, 1);
        assert_eq!(l.b_slots(), 0..=1);
    }

    #[test]
    fn negative_slope_flips_order() {
        let l = Layout::minimal(slope(-3, 1), 0, 2).unwrap();
        assert!(!l.positive());
        assert!(l.k(1) < l.k(0));
        assert!(l.window_ok(2));
        assert_eq!(l.b_slots(), -l.s..=l.s + 1);
    }

    #[test]
    fn beta_recursion() {
        let l = Layout::with_window(slope(1, 1), 0, 3).unwrap();
        for s in -3..3 {
            assert_eq!(l.beta(s + 1), l.beta(s) + 2 * l.k(s));
        }
        assert_eq!(l.beta(0), -1);
    }

    #[test]
    fn homogeneity() {
        check_homogeneous(&VHProfile::from_v(vec![2, 1, 0]).unwrap()).unwrap();
        let bad = VHProfile::with_explicit(vec![0, 0], Some(vec![2]), None).unwrap();
        assert!(check_homogeneous(&bad).is_err());
    }

    #[test]
    fn rejects_degenerate_slopes() {
        assert!(Layout::minimal(Slope::infinity(), 0, 1).is_err());
        assert!(Layout::minimal(slope(0, 1), 0, 1).is_err());
        assert!(Layout::minimal(slope(3, 1), 3, 1).is_err());
    }
}
