//! The ring `Z[ξ] = Z[x]/Φ_m(x)` in the power basis `1, ξ, ..., ξ^{φ(m)-1}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Integer coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_poly(m: u64) -> Vec<BigInt> {
    assert!(m >= 1);
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_poly(d));
        }
    }
    num
}

/// Exact quotient of `a` by the monic polynomial `b` (remainder must be 0).
fn div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

#[derive(Clone, Debug)]
pub struct CycloRing {
    m: u64,
    phi: Vec<BigInt>,
}

pub type CycloElem = Vec<BigInt>;

impl CycloRing {
    pub fn new(m: u64) -> Self {
        CycloRing { m, phi: cyclotomic_poly(m) }
    }

    /// `φ(m)`, the rank of the ring over `Z`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> CycloElem {
        vec![BigInt::zero(); self.degree()]
    }

    pub fn int(&self, n: i64) -> CycloElem {
        let mut e = self.zero();
        e[0] = BigInt::from(n);
        e
    }

    fn reduce(&self, mut raw: Vec<BigInt>) -> CycloElem {
        let d = self.degree();
        for i in (d..raw.len()).rev() {
            let c = std::mem::take(&mut raw[i]);
            if c.is_zero() {
                continue;
            }
            // x^i = x^{i-d} · x^d and x^d = -Σ_{j<d} φ_j x^j
            for j in 0..d {
                raw[i - d + j] -= &c * &self.phi[j];
            }
        }
        raw.truncate(d);
        raw.resize(d, BigInt::zero());
        raw
    }

    /// `ξ^j` for any integer `j`.
    pub fn xi_pow(&self, j: i64) -> CycloElem {
        let e = j.mod_floor(&(self.m as i64)) as usize;
        let mut raw = vec![BigInt::zero(); e.max(self.degree()) + 1];
        raw[e] = BigInt::one();
        self.reduce(raw)
    }

    pub fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &CycloElem, k: &BigInt) -> CycloElem {
        a.iter().map(|x| x * k).collect()
    }

    pub fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        let d = self.degree();
        let mut raw = vec![BigInt::zero(); 2 * d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        self.reduce(raw)
    }

    /// Division by an integer known to divide every coordinate.
    pub fn div_exact(&self, a: &CycloElem, k: i64) -> CycloElem {
        let k = BigInt::from(k);
        a.iter()
            .map(|x| {
                let (q, r) = x.div_rem(&k);
                assert!(r.is_zero(), "inexact division in Z[ξ]");
                q
            })
            .collect()
    }

    /// Complex conjugation, `ξ ↦ ξ^{-1}`.
    pub fn conj(&self, a: &CycloElem) -> CycloElem {
        let mut out = self.zero();
        for (j, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = self.add(&out, &self.scale(&self.xi_pow(-(j as i64)), c));
            }
        }
        out
    }

    pub fn is_zero(&self, a: &CycloElem) -> bool {
        a.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(ints(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(ints(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).len() - 1, 48);
    }

    #[test]
    fn xi_has_order_m() {
        for m in [2u64, 3, 5, 6, 12, 15] {
            let r = CycloRing::new(m);
            assert_eq!(r.xi_pow(m as i64), r.int(1));
            let prod = r.mul(&r.xi_pow(3), &r.xi_pow(-3));
            assert_eq!(prod, r.int(1));
            // 1 + ξ + ... + ξ^{m-1} = 0 for m > 1
            let mut s = r.zero();
            for j in 0..m as i64 {
                s = r.add(&s, &r.xi_pow(j));
            }
            assert!(r.is_zero(&s));
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        let r = CycloRing::new(12);
        let a = r.add(&r.xi_pow(1), &r.scale(&r.xi_pow(5), &BigInt::from(3)));
        assert_eq!(r.conj(&r.conj(&a)), a);
        // ξ + ξ̄ is real
        let t = r.add(&r.xi_pow(1), &r.xi_pow(-1));
        assert_eq!(r.conj(&t), t);
    }
}
