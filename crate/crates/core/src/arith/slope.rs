use std::fmt;

use num_integer::Integer;

use super::Rational;
use crate::error::{Error, Result};

/// A reduced surgery slope `p/q`, with `q > 0`, or `(1, 0)` for the
/// meridian slope `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

/// Reduces `(p, q)` to a canonical [`Slope`]. Rejects `(0, 0)`.
pub fn reduce_slope(p: i64, q: i64) -> Result<Slope> {
    if p == 0 && q == 0 {
        return Err(Error::DegenerateSlope);
    }
    if q == 0 {
        return Ok(Slope { p: 1, q: 0 });
    }
    let g = p.gcd(&q);
    let (mut p, mut q) = (p / g, q / g);
    if q < 0 {
        p = -p;
        q = -q;
    }
    Ok(Slope { p, q })
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        reduce_slope(p, q)
    }

    pub fn infinity() -> Self {
        Slope { p: 1, q: 0 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0
    }

    pub fn is_positive(&self) -> bool {
        self.q > 0 && self.p > 0
    }

    pub fn is_negative(&self) -> bool {
        self.q > 0 && self.p < 0
    }

    /// `(|p|, sign(p)·q)`: the lens-space form with a positive numerator and
    /// the sign carried by the denominator. `∞` gives `(1, 0)`.
    pub fn lens_form(&self) -> (i64, i64) {
        if self.q == 0 {
            (1, 0)
        } else if self.p < 0 {
            (-self.p, -self.q)
        } else {
            (self.p, self.q)
        }
    }

    /// The opposite slope `-p/q`.
    pub fn opposite(&self) -> Slope {
        if self.q == 0 {
            *self
        } else {
            Slope { p: -self.p, q: self.q }
        }
    }

    /// Order of `H_1` of the surgered manifold.
    pub fn h1_order(&self) -> u64 {
        self.p.unsigned_abs()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.q == 0 {
            None
        } else {
            Some(Rational::new(self.p as i128, self.q as i128))
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_reduction() {
        let s = reduce_slope(6, 4).unwrap();
        assert_eq!((s.p(), s.q()), (3, 2));
    }

    #[test]
    fn sign_normalisation() {
        let s = reduce_slope(3, -2).unwrap();
        assert_eq!((s.p(), s.q()), (-3, 2));
        assert_eq!(s.lens_form(), (3, -2));
        let s = reduce_slope(-3, -2).unwrap();
        assert_eq!((s.p(), s.q()), (3, 2));
    }

    #[test]
    fn infinity_slope() {
        let s = reduce_slope(5, 0).unwrap();
        assert!(s.is_infinite());
        assert_eq!(s, Slope::infinity());
        assert_eq!(reduce_slope(-5, 0).unwrap(), Slope::infinity());
    }

    #[test]
    fn zero_zero_rejected() {
        assert!(matches!(reduce_slope(0, 0), Err(Error::DegenerateSlope)));
    }

    #[test]
    fn zero_slope() {
        let s = reduce_slope(0, -7).unwrap();
        assert!(s.is_zero());
        assert_eq!((s.p(), s.q()), (0, 1));
    }
}
