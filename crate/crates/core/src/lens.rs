//! Correction terms, Casson–Walker and total Casson–Gordon invariants of lens
//! spaces. `L(p, q)` is `p/q` surgery on the unknot.
//!
//! The correction terms come from the recursion
//!
//! ```text
//! d(L(p,q), i) = ((2i + 1 - p - q)² - pq) / (4pq) - d(L(q, r), j)
//! ```
//!
//! with `r = p mod q`, `j = i mod q` and `d(S³) = 0`. The index `i` fixed by
//! this recursion is the labelling every other module anchors to.

use num_integer::Integer;

use crate::arith::{dedekind_sum, Rational};
use crate::error::{Error, Result};

/// `L(p, q)` with `p >= 1` and `q` reduced into `[1, p)` (`p = 1` is `S³`,
/// stored with `q = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::OutOfRange(format!("lens space needs p >= 1, got {p}")));
        }
        if p == 1 {
            return Ok(LensSpace { p: 1, q: 0 });
        }
        if q.gcd(&p) != 1 {
            return Err(Error::NotCoprime { a: p, b: q });
        }
        Ok(LensSpace { p, q: q.rem_euclid(p) })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `-L(p, q) = L(p, p - q)`.
    pub fn reversed(&self) -> LensSpace {
        if self.p == 1 {
            *self
        } else {
            LensSpace { p: self.p, q: self.p - self.q }
        }
    }

    fn check_index(&self, i: i64) -> Result<()> {
        if (0..self.p).contains(&i) {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!(
                "Spin^c index {i} outside [0, {}] for L({}, {})",
                self.p - 1,
                self.p,
                self.q
            )))
        }
    }
}

fn d_rec(p: i64, q: i64, i: i64) -> Rational {
    if p == 1 {
        return Rational::zero();
    }
    let (p, q, i) = (p as i128, q as i128, i as i128);
    let num = (2 * i + 1 - p - q).pow(2) - p * q;
    let term = Rational::new(num, 4 * p * q);
    term - d_rec(q as i64, (p % q) as i64, (i % q) as i64)
}

/// `d(L(p, q), i)`.
pub fn d_lens(lens: &LensSpace, i: i64) -> Result<Rational> {
    lens.check_index(i)?;
    Ok(d_rec(lens.p, lens.q, i))
}

/// All correction terms, indexed by `i`.
pub fn d_lens_all(lens: &LensSpace) -> Vec<Rational> {
    if lens.p == 1 {
        return vec![Rational::zero()];
    }
    // one level of the recursion shared across all i
    let inner = d_lens_all(&LensSpace { p: lens.q, q: lens.p % lens.q });
    let (p, q) = (lens.p as i128, lens.q as i128);
    (0..p)
        .map(|i| {
            let num = (2 * i + 1 - p - q).pow(2) - p * q;
            Rational::new(num, 4 * p * q) - &inner[(i % q) as usize]
        })
        .collect()
}

/// `λ(L(p, q)) = -s(q, p) / 2` (Casson–Walker normalisation with
/// `λ(S³_{+1}(right trefoil)) = 1`).
pub fn lambda_lens(lens: &LensSpace) -> Rational {
    if lens.p == 1 {
        return Rational::zero();
    }
    let s = dedekind_sum(lens.q, lens.p).expect("lens space is coprime");
    -s / Rational::integer(2)
}

/// `τ(L(p, q)) = -4p · s(q, p)`.
pub fn tau_lens(lens: &LensSpace) -> Rational {
    if lens.p == 1 {
        return Rational::zero();
    }
    let s = dedekind_sum(lens.q, lens.p).expect("lens space is coprime");
    Rational::integer(-4 * lens.p as i128) * s
}

/// Sorted copy, for comparisons that ignore the Spin^c labelling.
pub fn multiset(values: &[Rational]) -> Vec<Rational> {
    let mut v = values.to_vec();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens(p: i64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn sphere() {
        assert_eq!(d_lens(&lens(1, 1), 0).unwrap(), Rational::zero());
        assert_eq!(d_lens_all(&lens(1, 1)), vec![Rational::zero()]);
    }

    #[test]
    fn l21_and_l31() {
        assert_eq!(multiset(&d_lens_all(&lens(2, 1))), vec![Rational::new(-1, 4), Rational::new(1, 4)]);
        assert_eq!(
            multiset(&d_lens_all(&lens(3, 1))),
            vec![Rational::new(-1, 6), Rational::new(-1, 6), Rational::new(1, 2)]
        );
        let sum: Rational = d_lens_all(&lens(3, 1)).iter().sum();
        assert_eq!(sum, Rational::new(1, 6));
    }

    #[test]
    fn all_matches_pointwise() {
        for (p, q) in [(7, 3), (11, 4), (13, 5), (12, 7)] {
            let l = lens(p, q);
            let all = d_lens_all(&l);
            for i in 0..p {
                assert_eq!(all[i as usize], d_lens(&l, i).unwrap());
            }
        }
    }

    #[test]
    fn lambda_and_tau_examples() {
        assert_eq!(lambda_lens(&lens(2, 1)), Rational::zero());
        assert_eq!(lambda_lens(&lens(3, 1)), Rational::new(-1, 36));
        assert_eq!(lambda_lens(&lens(5, 2)), Rational::zero());
        assert_eq!(tau_lens(&lens(2, 1)), Rational::zero());
        assert_eq!(tau_lens(&lens(3, 1)), Rational::new(-2, 3));
        assert_eq!(tau_lens(&lens(5, 2)), Rational::zero());
    }

    #[test]
    fn negative_q_canonicalised() {
        let l = lens(5, -2);
        assert_eq!(l.q(), 3);
        assert_eq!(lambda_lens(&l), -lambda_lens(&lens(5, 2)));
    }

    #[test]
    fn index_out_of_range() {
        assert!(d_lens(&lens(3, 1), 3).is_err());
        assert!(d_lens(&lens(3, 1), -1).is_err());
        assert!(LensSpace::new(4, 2).is_err());
        assert!(LensSpace::new(0, 1).is_err());
    }
}
