//! Fixed-point ball arithmetic: a value is `(mid ± err) / 2^bits` with every
//! rounding error folded into `err`, so signs read off a ball are certified.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct Ball {
    mid: BigInt,
    err: BigInt,
    bits: u32,
}

fn shr_ceil(x: &BigInt, bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    (x + &one - 1u32).div_floor(&one)
}

impl Ball {
    pub fn int(n: i64, bits: u32) -> Ball {
        Ball { mid: BigInt::from(n) << bits, err: BigInt::zero(), bits }
    }

    /// `1/n` for `n >= 1`.
    pub fn recip(n: u64, bits: u32) -> Ball {
        let one = BigInt::one() << bits;
        Ball { mid: one / n, err: BigInt::one(), bits }
    }

    pub fn add(&self, o: &Ball) -> Ball {
        Ball { mid: &self.mid + &o.mid, err: &self.err + &o.err, bits: self.bits }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        Ball { mid: &self.mid - &o.mid, err: &self.err + &o.err, bits: self.bits }
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        let mid = (&self.mid * &o.mid) >> self.bits;
        let spread = self.mid.abs() * &o.err + o.mid.abs() * &self.err + &self.err * &o.err;
        Ball { mid, err: shr_ceil(&spread, self.bits) + 1u32, bits: self.bits }
    }

    pub fn mul_int(&self, k: &BigInt) -> Ball {
        Ball { mid: &self.mid * k, err: &self.err * k.abs(), bits: self.bits }
    }

    pub fn div_int(&self, k: u64) -> Ball {
        Ball { mid: self.mid.div_floor(&BigInt::from(k)), err: &self.err / k + 1u32, bits: self.bits }
    }

    /// Upper bound on `|value| · 2^bits`.
    pub fn magnitude(&self) -> BigInt {
        self.mid.abs() + &self.err
    }

    /// `Some(sign)` when the ball excludes zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.mid.abs() > self.err {
            Some(self.mid.sign().cmp_zero())
        } else {
            None
        }
    }

    /// Widen by `|other|` (used for series tails).
    pub fn widen(&self, bound: &BigInt) -> Ball {
        Ball { mid: self.mid.clone(), err: &self.err + bound, bits: self.bits }
    }

    #[cfg(test)]
    fn to_f64(&self) -> f64 {
        let scale = 2f64.powi(self.bits as i32);
        let m: f64 = self.mid.to_string().parse().unwrap_or(f64::NAN);
        m / scale
    }
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

/// `atan(1/n)` for integer `n >= 2`, alternating series with tail bound.
fn atan_recip(n: u64, bits: u32) -> Ball {
    let n2 = BigInt::from(n) * n;
    let mut power = Ball::recip(n, bits);
    let mut sum = Ball::int(0, bits);
    let mut k: u64 = 0;
    loop {
        let term = power.div_int(2 * k + 1);
        if term.magnitude() <= BigInt::one() {
            return sum.widen(&term.magnitude());
        }
        sum = if k.is_multiple_of(2) { sum.add(&term) } else { sum.sub(&term) };
        power = Ball { mid: power.mid.div_floor(&n2), err: &power.err / &n2 + 1u32, bits };
        k += 1;
    }
}

/// π by Machin's formula.
pub fn pi(bits: u32) -> Ball {
    let a = atan_recip(5, bits).mul_int(&BigInt::from(16));
    let b = atan_recip(239, bits).mul_int(&BigInt::from(4));
    a.sub(&b)
}

/// `cos(2π a / m)`.
pub fn cos_two_pi_frac(a: i64, m: u64, bits: u32) -> Ball {
    let mm = m as i64;
    let mut a = a.rem_euclid(mm);
    if 2 * a > mm {
        a = mm - a;
    }
    // θ ∈ [0, π]
    let theta = pi(bits).mul_int(&BigInt::from(2 * a)).div_int(m);
    let theta2 = theta.mul(&theta);
    let mut term = Ball::int(1, bits);
    let mut sum = Ball::int(0, bits);
    let mut k: u64 = 0;
    loop {
        // for θ ≤ π the terms decrease from k = 1 on, so the first
        // negligible term bounds the remainder
        if k >= 1 && term.magnitude() <= BigInt::one() {
            return sum.widen(&term.magnitude());
        }
        sum = if k.is_multiple_of(2) { sum.add(&term) } else { sum.sub(&term) };
        k += 1;
        term = term.mul(&theta2).div_int((2 * k - 1) * (2 * k));
    }
}
