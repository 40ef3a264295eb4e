//! Casson–Walker and total Casson–Gordon invariants of surgeries on knots in
//! `S³`, normalised so that `λ(S³_{+1}(right trefoil)) = 1`.

use crate::arith::{Rational, Slope};
use crate::error::{Error, Result};
use crate::knot::{sigma_total, KnotData, SeifertMatrix};
use crate::lens::{lambda_lens, tau_lens, LensSpace};

/// `λ(Y_{p/q}(K)) = λ(Y) + λ(L(p,q)) + (q/2p) Δ''(1)`, for a knot in a
/// homology sphere `Y`.
fn casson_walker_in(lambda_y: &Rational, knot: &KnotData, slope: Slope) -> Result<Rational> {
    if slope.is_zero() || slope.is_infinite() {
        return Err(Error::OutOfRange(format!("slope {slope} does not give a rational homology sphere")));
    }
    let (p, q) = slope.lens_form();
    let lens = LensSpace::new(p, q)?;
    let correction = Rational::new(q as i128 * knot.alexander.second_derivative_at_one() as i128, 2 * p as i128);
    Ok(lambda_y + &lambda_lens(&lens) + correction)
}

/// `λ(S³_{p/q}(K))`.
pub fn casson_walker(knot: &KnotData, slope: Slope) -> Result<Rational> {
    casson_walker_in(&Rational::zero(), knot, slope)
}

/// `τ(S³_{p/q}(K)) = τ(L(p,q)) - σ(K, p)` for `p >= 1`.
pub fn casson_gordon(knot: &KnotData, slope: Slope) -> Result<Rational> {
    if !slope.is_positive() {
        return Err(Error::OutOfRange(format!("Casson–Gordon formula needs p >= 1, got {slope}")));
    }
    let empty = SeifertMatrix::empty();
    let seifert = match &knot.seifert {
        Some(a) => a,
        None if knot.is_trivial() => &empty,
        None => return Err(Error::MissingSeifert(knot.name.clone())),
    };
    let lens = LensSpace::new(slope.p(), slope.q())?;
    let sigma = sigma_total(seifert, slope.p())?;
    Ok(tau_lens(&lens) - Rational::integer(sigma as i128))
}

/// `|H_1| · λ = Σ_s (χ(HF_red(s)) - d(s)/2)`.
pub fn rustamov_identity_check(
    lambda: &Rational,
    d_list: &[Rational],
    chi_list: &[i64],
    h1_order: usize,
) -> Result<bool> {
    if d_list.len() != h1_order || chi_list.len() != h1_order {
        return Err(Error::LengthMismatch(format!(
            "{} correction terms and {} Euler characteristics for |H_1| = {h1_order}",
            d_list.len(),
            chi_list.len()
        )));
    }
    let rhs: Rational =
        d_list.iter().zip(chi_list).map(|(d, &chi)| Rational::integer(chi as i128) - d / &Rational::integer(2)).sum();
    Ok(Rational::integer(h1_order as i128) * lambda == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{AlexanderPoly, VHProfile};
    use crate::lens::d_lens_all;

    fn slope(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn trefoil() -> KnotData {
        let mut k =
            KnotData::new("3_1", AlexanderPoly::new(vec![-1, 1]).unwrap(), 1, VHProfile::from_v(vec![1, 0]).unwrap());
        k.seifert = Some(SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap());
        k
    }

    fn figure_eight() -> KnotData {
        KnotData::new("4_1", AlexanderPoly::new(vec![3, -1]).unwrap(), 0, VHProfile::from_v(vec![0, 0]).unwrap())
    }

    #[test]
    fn casson_walker_values() {
        assert_eq!(casson_walker(&trefoil(), slope(1, 1)).unwrap(), Rational::one());
        assert_eq!(casson_walker(&figure_eight(), slope(1, 2)).unwrap(), Rational::integer(-2));
        let u = KnotData::unknot();
        assert_eq!(casson_walker(&u, slope(3, 1)).unwrap(), lambda_lens(&LensSpace::new(3, 1).unwrap()));
        assert_eq!(casson_walker(&u, slope(-7, 3)).unwrap(), -casson_walker(&u, slope(7, 3)).unwrap());
        assert!(casson_walker(&u, slope(0, 1)).is_err());
    }

    #[test]
    fn casson_gordon_values() {
        assert_eq!(casson_gordon(&trefoil(), slope(3, 1)).unwrap(), Rational::new(10, 3));
        assert_eq!(casson_gordon(&trefoil(), slope(2, 1)).unwrap(), Rational::integer(2));
        assert_eq!(casson_gordon(&KnotData::unknot(), slope(3, 1)).unwrap(), Rational::new(-2, 3));
        assert!(matches!(casson_gordon(&figure_eight(), slope(3, 1)), Err(Error::MissingSeifert(_))));
    }

    #[test]
    fn rustamov_examples() {
        let lens = LensSpace::new(7, 3).unwrap();
        let d = d_lens_all(&lens);
        assert!(rustamov_identity_check(&lambda_lens(&lens), &d, &[0; 7], 7).unwrap());
        assert!(rustamov_identity_check(&Rational::one(), &[Rational::integer(-2)], &[0], 1).unwrap());
        assert!(!rustamov_identity_check(&Rational::one(), &[Rational::integer(-2)], &[1], 1).unwrap());
        assert!(rustamov_identity_check(&Rational::one(), &[], &[0], 1).is_err());
    }
}
