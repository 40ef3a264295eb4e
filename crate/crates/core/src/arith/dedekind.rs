//! Sawtooth function, Dedekind sums by direct summation and by the negative
//! continued fraction formula, and the modular helpers they need.

use num_integer::Integer;

use super::{neg_cont_frac, Rational};
use crate::error::{Error, Result};

/// `((x))`: `x - floor(x) - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x - x.floor() - Rational::new(1, 2)
    }
}

/// `s(q, p) = sign(p) · Σ_{k=1}^{|p|-1} ((k/p))((kq/p))`.
///
/// `q` is first reduced mod `|p|`, so negative `q` is accepted.
pub fn dedekind_sum(q: i64, p: i64) -> Result<Rational> {
    if p == 0 {
        return Err(Error::OutOfRange("dedekind_sum needs p != 0".into()));
    }
    if q.gcd(&p) != 1 {
        return Err(Error::NotCoprime { a: q, b: p });
    }
    let m = p.unsigned_abs() as i128;
    let q = (q as i128).rem_euclid(m);
    // ((k/m)) = (2k - m)/(2m) for 0 < k < m, likewise for kq mod m (never 0)
    let mut acc: i128 = 0;
    for k in 1..m {
        let r = (k * q) % m;
        acc += (2 * k - m) * (2 * r - m);
    }
    let s = Rational::new(acc, 4 * m * m);
    Ok(if p < 0 { -s } else { s })
}

/// `s(q, p) = (1/12)(q/p + q'/p + Σ (a_i - 3))` where `p/q = [a_1, ..., a_n]`
/// and `q q' ≡ 1 (mod p)`. Requires `0 < q < p`.
pub fn dedekind_sum_cf(q: i64, p: i64) -> Result<Rational> {
    if !(0 < q && q < p) {
        return Err(Error::OutOfRange(format!("continued-fraction route needs 0 < q < p, got q={q}, p={p}")));
    }
    let cf = neg_cont_frac(p, q)?;
    let q_inv = mod_inverse(q, p)?;
    let tail: i128 = cf.terms().iter().map(|&a| (a - 3) as i128).sum();
    let inner = Rational::new((q + q_inv) as i128, p as i128) + Rational::integer(tail);
    Ok(inner / Rational::integer(12))
}

/// The unique `0 < q' <= p` with `q q' ≡ 1 (mod p)` (so `p = 1` gives `1`).
pub fn mod_inverse(q: i64, p: i64) -> Result<i64> {
    if p < 1 {
        return Err(Error::OutOfRange(format!("modulus must be >= 1, got {p}")));
    }
    let ext = (q as i128).rem_euclid(p as i128).extended_gcd(&(p as i128));
    if ext.gcd != 1 {
        return Err(Error::NotCoprime { a: q, b: p });
    }
    let inv = ext.x.rem_euclid(p as i128);
    Ok(if inv == 0 { p } else { inv as i64 })
}

/// `q² ≡ -1 (mod p)`.
pub fn is_cosmetic_residue(p: i64, q: i64) -> bool {
    let p = p as i128;
    if p == 0 {
        return false;
    }
    let q = q as i128;
    (q * q + 1).rem_euclid(p.abs()) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sum_via_sawtooth(q: i64, p: i64) -> Rational {
        (1..p)
            .map(|k| {
                sawtooth(&Rational::new(k as i128, p as i128)) * sawtooth(&Rational::new((k * q) as i128, p as i128))
            })
            .sum()
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&Rational::new(1, 2)), Rational::zero());
        assert_eq!(sawtooth(&Rational::integer(3)), Rational::zero());
        assert_eq!(sawtooth(&Rational::new(-1, 4)), Rational::new(1, 4));
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(dedekind_sum(1, 2).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum(1, 3).unwrap(), Rational::new(1, 18));
        assert_eq!(dedekind_sum(2, 5).unwrap(), Rational::zero());
    }

    #[test]
    fn integer_numerators_match_literal_sawtooth_sum() {
        for p in 2..40 {
            for q in 1..p {
                if q.gcd(&p) == 1 {
                    assert_eq!(dedekind_sum(q, p).unwrap(), sum_via_sawtooth(q, p), "s({q},{p})");
                }
            }
        }
    }

    #[test]
    fn negative_modulus_flips_sign() {
        assert_eq!(dedekind_sum(1, -3).unwrap(), Rational::new(-1, 18));
    }

    #[test]
    fn negative_q_is_reduced() {
        assert_eq!(dedekind_sum(-1, 3).unwrap(), dedekind_sum(2, 3).unwrap());
        assert_eq!(dedekind_sum(-1, 3).unwrap(), Rational::new(-1, 18));
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(matches!(dedekind_sum(2, 4), Err(Error::NotCoprime { .. })));
        assert!(dedekind_sum(1, 0).is_err());
    }

    #[test]
    fn cf_examples() {
        assert_eq!(dedekind_sum_cf(1, 3).unwrap(), Rational::new(1, 18));
        assert_eq!(dedekind_sum_cf(2, 5).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum_cf(1, 2).unwrap(), Rational::zero());
        assert!(dedekind_sum_cf(3, 3).is_err());
        assert!(dedekind_sum_cf(0, 3).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(2, 5).unwrap(), 3);
        assert_eq!(mod_inverse(1, 7).unwrap(), 1);
        assert_eq!(mod_inverse(5, 13).unwrap(), 8);
        assert_eq!(mod_inverse(3, 1).unwrap(), 1);
        assert_eq!(mod_inverse(-2, 5).unwrap(), 2);
        assert!(mod_inverse(2, 4).is_err());
    }

    #[test]
    fn residues() {
        assert!(is_cosmetic_residue(5, 2));
        assert!(!is_cosmetic_residue(3, 1));
        assert!(is_cosmetic_residue(1, 7));
        assert!(is_cosmetic_residue(13, 5));
        assert!(is_cosmetic_residue(2, 1));
    }
}
