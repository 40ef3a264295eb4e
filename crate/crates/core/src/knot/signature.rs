//! Generalised (Tristram–Levine) signatures of a Seifert matrix at roots of
//! unity.
//!
//! `A(ξ) = (1 - ξ̄)A + (1 - ξ)Aᵀ` is built exactly over `Z[ξ]`, its
//! characteristic polynomial is computed exactly, and only the signs of the
//! (real) coefficients are evaluated numerically, on certified balls. Since a
//! Hermitian matrix has real-rooted characteristic polynomial, Descartes'
//! rule of signs then gives the inertia exactly, including zero eigenvalues
//! at roots of the Alexander polynomial.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::cyclotomic::{CycloElem, CycloRing};
use super::interval::{cos_two_pi_frac, Ball};
use super::SeifertMatrix;
use crate::error::{Error, Result};

pub const PRECISION_ENV: &str = "SURGERY_GATE_PRECISION";
pub const DEFAULT_START_BITS: u32 = 128;
pub const MAX_BITS: u32 = 1024;

/// Working precisions tried in turn, doubling from `start` up to `max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionLadder {
    pub start: u32,
    pub max: u32,
}

impl Default for PrecisionLadder {
    fn default() -> Self {
        PrecisionLadder { start: DEFAULT_START_BITS, max: MAX_BITS }
    }
}

impl PrecisionLadder {
    /// Honours `SURGERY_GATE_PRECISION` for the starting rung.
    pub fn from_env() -> Self {
        let start = std::env::var(PRECISION_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u32>().ok())
            .filter(|&b| b >= 16)
            .unwrap_or(DEFAULT_START_BITS);
        PrecisionLadder { start, max: MAX_BITS.max(start) }
    }

    pub fn rungs(&self) -> impl Iterator<Item = u32> {
        let max = self.max;
        std::iter::successors(Some(self.start), move |&b| b.checked_mul(2).filter(|&n| n <= max))
    }
}

/// Numbers of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// `det(λI - M)` coefficients `c_0..c_n` (with `c_n = 1`) by Faddeev–LeVerrier.
fn char_poly(ring: &CycloRing, m: &[Vec<CycloElem>]) -> Vec<CycloElem> {
    let n = m.len();
    let mut coeffs = vec![ring.zero(); n + 1];
    coeffs[n] = ring.int(1);
    // mk = M · M_{k-1} + c_{n-k+1} I, starting from M_0 = 0
    let mut mk: Vec<Vec<CycloElem>> = vec![vec![ring.zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(ring, m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = ring.add(&row[i], &coeffs[n - k + 1]);
        }
        mk = next;
        let am = mat_mul(ring, m, &mk);
        let mut tr = ring.zero();
        for (i, row) in am.iter().enumerate() {
            tr = ring.add(&tr, &row[i]);
        }
        let c = ring.div_exact(&tr, k as i64);
        coeffs[n - k] = ring.scale(&c, &BigInt::from(-1));
    }
    coeffs
}

fn mat_mul(ring: &CycloRing, a: &[Vec<CycloElem>], b: &[Vec<CycloElem>]) -> Vec<Vec<CycloElem>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = ring.zero();
                    for k in 0..n {
                        if !ring.is_zero(&a[i][k]) && !ring.is_zero(&b[k][j]) {
                            acc = ring.add(&acc, &ring.mul(&a[i][k], &b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Certified sign of a real element of `Z[ξ]`, `ξ = e^{2πi·r/m}`.
fn real_sign(c: &CycloElem, r: i64, m: u64, ladder: &PrecisionLadder) -> Option<Ordering> {
    for bits in ladder.rungs() {
        let mut acc = Ball::int(0, bits);
        for (j, cj) in c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            acc = acc.add(&cos_two_pi_frac(j as i64 * r, m, bits).mul_int(cj));
        }
        if let Some(s) = acc.sign() {
            return Some(s);
        }
    }
    None
}

fn sign_changes(signs: &[Ordering]) -> usize {
    signs.iter().filter(|s| **s != Ordering::Equal).collect::<Vec<_>>().windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia of `A(ξ)` at `ξ = e^{2πi r/p}` using an explicit ladder.
pub fn signature_inertia_with(a: &SeifertMatrix, r: i64, p: i64, ladder: &PrecisionLadder) -> Result<Inertia> {
    if p < 2 || !(1..p).contains(&r) {
        return Err(Error::OutOfRange(format!("signature needs 1 <= r <= p-1, got r={r}, p={p}")));
    }
    let n = a.size();
    if n == 0 {
        return Ok(Inertia { positive: 0, negative: 0, zero: 0 });
    }
    let g = r.gcd(&p);
    let (r0, m) = (r / g, (p / g) as u64);
    // ξ is the class of x in Z[x]/Φ_m, evaluated at e^{2πi r0/m}
    let ring = CycloRing::new(m);
    let one_minus_xi = ring.sub(&ring.int(1), &ring.xi_pow(1));
    let one_minus_xibar = ring.sub(&ring.int(1), &ring.xi_pow(-1));
    let mat: Vec<Vec<CycloElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = ring.scale(&one_minus_xibar, &BigInt::from(a.get(i, j)));
                    let y = ring.scale(&one_minus_xi, &BigInt::from(a.get(j, i)));
                    ring.add(&x, &y)
                })
                .collect()
        })
        .collect();
    let coeffs = char_poly(&ring, &mat);
    let mut signs = Vec::with_capacity(n + 1);
    for c in &coeffs {
        debug_assert_eq!(&ring.conj(c), c, "Hermitian characteristic polynomial must be real");
        if ring.is_zero(c) {
            signs.push(Ordering::Equal);
        } else {
            let s = real_sign(c, r0, m, ladder).ok_or(Error::NearSingular { r, p, bits: ladder.max })?;
            signs.push(s);
        }
    }
    let zero = signs.iter().position(|s| *s != Ordering::Equal).unwrap_or(n);
    let positive = sign_changes(&signs);
    let flipped: Vec<Ordering> =
        signs.iter().enumerate().map(|(k, s)| if k % 2 == 1 { s.reverse() } else { *s }).collect();
    let negative = sign_changes(&flipped);
    if positive + negative + zero != n {
        return Err(Error::NearSingular { r, p, bits: ladder.max });
    }
    Ok(Inertia { positive, negative, zero })
}

/// `σ_K(e^{2πi r/p})` with the ladder taken from the environment.
pub fn signature_function(a: &SeifertMatrix, r: i64, p: i64) -> Result<i64> {
    signature_function_with(a, r, p, &PrecisionLadder::from_env())
}

pub fn signature_function_with(a: &SeifertMatrix, r: i64, p: i64, ladder: &PrecisionLadder) -> Result<i64> {
    Ok(signature_inertia_with(a, r, p, ladder)?.signature())
}

/// `σ(K, p) = Σ_{r=1}^{p-1} σ_K(e^{2πi r/p})`.
pub fn sigma_total(a: &SeifertMatrix, p: i64) -> Result<i64> {
    sigma_total_with(a, p, &PrecisionLadder::from_env())
}

pub fn sigma_total_with(a: &SeifertMatrix, p: i64, ladder: &PrecisionLadder) -> Result<i64> {
    if p < 1 {
        return Err(Error::OutOfRange(format!("sigma_total needs p >= 1, got {p}")));
    }
    // σ(ξ) = σ(ξ̄): pair r with p - r
    let mut total = 0;
    for r in 1..p {
        if 2 * r > p {
            break;
        }
        let s = signature_function_with(a, r, p, ladder)?;
        total += if 2 * r == p { s } else { 2 * s };
    }
    Ok(total)
}
