use crate::error::{Error, Result};

/// Symmetrised Alexander polynomial `Δ(t) = a_0 + Σ_{k≥1} a_k (t^k + t^{-k})`,
/// stored as `[a_0, a_1, ..., a_g]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderPoly {
    coeffs: Vec<i64>,
}

impl AlexanderPoly {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidAlexander("empty coefficient list".into()));
        }
        if coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            return Err(Error::InvalidAlexander("top coefficient a_g is zero".into()));
        }
        let value: i128 = coeffs[0] as i128 + 2 * coeffs[1..].iter().map(|&a| a as i128).sum::<i128>();
        if value != 1 {
            return Err(Error::InvalidAlexander(format!("normalization: Δ(1) = {value}, expected 1")));
        }
        Ok(AlexanderPoly { coeffs })
    }

    pub fn unknot() -> Self {
        AlexanderPoly { coeffs: vec![1] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Degree of the symmetric polynomial (a lower bound for the genus).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k` for any integer `k`.
    pub fn coeff(&self, k: i64) -> i64 {
        self.coeffs.get(k.unsigned_abs() as usize).copied().unwrap_or(0)
    }

    /// Coefficients of `t^{-g}, ..., t^g`.
    pub fn laurent_coeffs(&self) -> Vec<i64> {
        let g = self.degree() as i64;
        (-g..=g).map(|k| self.coeff(k)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs == [1]
    }

    /// `Δ''(1) = 2 Σ_{k≥1} k² a_k`, computed from the coefficients.
    pub fn second_derivative_at_one(&self) -> i64 {
        let s: i128 = self.coeffs.iter().enumerate().skip(1).map(|(k, &a)| (k as i128).pow(2) * a as i128).sum();
        (2 * s) as i64
    }

    /// `t_k = Σ_{j≥1} j · a_{k+j}` for `k = 0..g-1`.
    pub fn torsion_coefficients(&self) -> Vec<i64> {
        let g = self.degree();
        (0..g).map(|k| (1..=g - k).map(|j| j as i64 * self.coeffs[k + j]).sum()).collect()
    }
}

/// `Δ''(1)`.
pub fn second_derivative_at_one(delta: &AlexanderPoly) -> i64 {
    delta.second_derivative_at_one()
}

/// Torsion coefficients `t_0, ..., t_{g-1}`.
pub fn torsion_coefficients(delta: &AlexanderPoly) -> Vec<i64> {
    delta.torsion_coefficients()
}
