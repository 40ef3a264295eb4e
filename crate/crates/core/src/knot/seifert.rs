use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlexanderPoly;
use crate::error::{Error, Result};

/// Square integer Seifert matrix (row-major). The empty matrix is the unknot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSeifert(format!("matrix is not square ({n} rows)")));
        }
        Ok(SeifertMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn empty() -> Self {
        SeifertMatrix { n: 0, entries: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> SeifertMatrix {
        let n = self.n;
        let entries = (0..n * n).map(|idx| self.get(idx % n, idx / n)).collect();
        SeifertMatrix { n, entries }
    }

    /// Seifert matrix of the mirror image, `-Aᵀ`.
    pub fn mirror(&self) -> SeifertMatrix {
        let t = self.transpose();
        SeifertMatrix { n: t.n, entries: t.entries.into_iter().map(|x| -x).collect() }
    }
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Coefficients (low to high) of the unique polynomial of degree `<= n`
/// through `(x, ys[x])` for `x = 0..=n`.
fn interpolate(ys: &[BigInt]) -> Vec<BigRational> {
    let n = ys.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for (j, yj) in ys.iter().enumerate() {
        // basis polynomial Π_{m≠j} (x - m)/(j - m)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for m in 0..n {
            if m == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigRational::from_integer(BigInt::from(m));
            }
            basis = next;
            denom *= BigInt::from(j as i64 - m as i64);
        }
        let scale = BigRational::new(yj.clone(), denom);
        for (d, c) in basis.into_iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    coeffs
}

/// `Δ(t) ≐ det(t^{1/2} A - t^{-1/2} Aᵀ)`, symmetrised and normalised so that
/// `Δ(1) = 1`.
pub fn alexander_from_seifert(a: &SeifertMatrix) -> Result<AlexanderPoly> {
    let n = a.size();
    if n == 0 {
        return Ok(AlexanderPoly::unknot());
    }
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|t| {
            let m = (0..n).map(|i| (0..n).map(|j| BigInt::from(t * a.get(i, j) - a.get(j, i))).collect()).collect();
            bareiss_det(m)
        })
        .collect();
    let poly = interpolate(&values);
    let mut ints = Vec::with_capacity(poly.len());
    for c in &poly {
        if !c.is_integer() {
            return Err(Error::InvalidSeifert("non-integral determinant polynomial".into()));
        }
        ints.push(c.to_integer());
    }
    let lo = ints.iter().position(|c| !c.is_zero());
    let hi = ints.iter().rposition(|c| !c.is_zero());
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Error::InvalidSeifert("det(tA - Aᵀ) vanishes identically".into()));
    };
    if (hi - lo) % 2 != 0 {
        return Err(Error::InvalidSeifert("determinant polynomial has odd span".into()));
    }
    let centre = (lo + hi) / 2;
    let g = (hi - lo) / 2;
    let mut coeffs: Vec<BigInt> = (0..=g).map(|k| ints[centre + k].clone()).collect();
    if (0..=g).any(|k| ints[centre - k] != ints[centre + k]) {
        return Err(Error::InvalidSeifert("determinant polynomial is not symmetric".into()));
    }
    let at_one: BigInt = &coeffs[0] + BigInt::from(2) * coeffs[1..].iter().sum::<BigInt>();
    if at_one.abs() != BigInt::one() {
        return Err(Error::InvalidSeifert(format!("normalization: |Δ(1)| = {}, cannot be made 1", at_one.abs())));
    }
    if at_one.is_negative() {
        coeffs.iter_mut().for_each(|c| *c = -c.clone());
    }
    let coeffs = coeffs
        .into_iter()
        .map(|c| c.to_i64().ok_or_else(|| Error::InvalidSeifert("coefficient overflow".into())))
        .collect::<Result<Vec<_>>>()?;
    AlexanderPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let a = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        let d = alexander_from_seifert(&a).unwrap();
        assert_eq!(d.coeffs(), &[-1, 1]);
        assert_eq!(d.second_derivative_at_one(), 2);
        assert_eq!(d.torsion_coefficients(), vec![1]);
    }

    #[test]
    fn unknot() {
        assert_eq!(alexander_from_seifert(&SeifertMatrix::empty()).unwrap(), AlexanderPoly::unknot());
    }

    #[test]
    fn figure_eight() {
        let a = SeifertMatrix::new(vec![vec![-1, 1], vec![0, 1]]).unwrap();
        assert_eq!(alexander_from_seifert(&a).unwrap().coeffs(), &[3, -1]);
    }

    #[test]
    fn mirror_has_same_polynomial() {
        let a = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(alexander_from_seifert(&a.mirror()).unwrap(), alexander_from_seifert(&a).unwrap());
    }

    #[test]
    fn degenerate_leading_terms() {
        // det(tA - Aᵀ) = t, still the unknot
        let a = SeifertMatrix::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(alexander_from_seifert(&a).unwrap(), AlexanderPoly::unknot());
    }

    #[test]
    fn invalid_matrices() {
        assert!(SeifertMatrix::new(vec![vec![1, 2]]).is_err());
        // odd size: A - Aᵀ is singular
        let odd = SeifertMatrix::new(vec![vec![1]]).unwrap();
        assert!(alexander_from_seifert(&odd).is_err());
        // symmetric 2x2 with det(A - Aᵀ) = 0
        let bad = SeifertMatrix::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(alexander_from_seifert(&bad).is_err());
    }

    #[test]
    fn genus_two_block_sum() {
        // trefoil ⊕ figure-eight: Δ = (t - 1 + t⁻¹)(-t + 3 - t⁻¹)
        let a = SeifertMatrix::new(vec![vec![-1, 1, 0, 0], vec![0, -1, 0, 0], vec![0, 0, -1, 1], vec![0, 0, 0, 1]])
            .unwrap();
        assert_eq!(alexander_from_seifert(&a).unwrap().coeffs(), &[-5, 4, -1]);
    }
}
