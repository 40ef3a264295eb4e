//! Closed forms: correction terms from `V`/`H`, and the reduced groups read
//! straight off the `A_{k,red}` summands when `V_0 = H_0 = 0`.

use std::collections::BTreeMap;

use super::complex::{cone_homology, ConeSpec};
use super::layout::{check_homogeneous, Layout};
use super::GradedModule;
use crate::arith::{Rational, Slope};
use crate::error::{Error, Result};
use crate::knot::{KnotData, VHProfile};
use crate::lens::{d_lens, LensSpace};

/// A value, or the reason it cannot be decided from the available inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Determination<T> {
    Known(T),
    Indeterminate(String),
}

impl<T> Determination<T> {
    pub fn known(self) -> Option<T> {
        match self {
            Determination::Known(t) => Some(t),
            Determination::Indeterminate(_) => None,
        }
    }
}

/// `d(L(p,q), i) - 2 max(V_{⌊i/q⌋}, H_{⌊(i-p)/q⌋})` for `p, q > 0`.
pub fn d_surgery_profile(vh: &VHProfile, p: i64, q: i64, i: i64) -> Result<Rational> {
    if p < 1 || q < 1 {
        return Err(Error::OutOfRange(format!("closed form needs p, q > 0, got {p}/{q}")));
    }
    let lens = LensSpace::new(p, q)?;
    let base = d_lens(&lens, i)?;
    let v = vh.v(i.div_euclid(q));
    let h = vh.h((i - p).div_euclid(q));
    Ok(base - Rational::integer(2 * v.max(h) as i128))
}

/// Correction term of a positive surgery.
pub fn d_surgery(knot: &KnotData, slope: Slope, i: i64) -> Result<Rational> {
    if !slope.is_positive() {
        return Err(Error::OutOfRange(format!("d_surgery needs a positive slope, got {slope}")));
    }
    d_surgery_profile(&knot.vh, slope.p(), slope.q(), i)
}

/// Correction term for either sign of slope. Negative slopes use
/// `S³_{-p/q}(K) = -S³_{p/q}(mirror K)` with index `i ↦ p - 1 - i`, which
/// needs the mirror profile.
pub fn d_surgery_signed(knot: &KnotData, slope: Slope, i: i64) -> Result<Determination<Rational>> {
    if slope.is_positive() {
        return d_surgery(knot, slope, i).map(Determination::Known);
    }
    if !slope.is_negative() {
        return Err(Error::OutOfRange(format!("slope {slope} is not a rational homology sphere surgery")));
    }
    let p = -slope.p();
    if !(0..p).contains(&i) {
        return Err(Error::OutOfRange(format!("Spin^c index {i} outside [0, {}]", p - 1)));
    }
    if knot.is_trivial() {
        return Ok(Determination::Known(-d_surgery_profile(&knot.vh, p, slope.q(), p - 1 - i)?));
    }
    match &knot.mirror_vh {
        Some(m) => Ok(Determination::Known(-d_surgery_profile(m, p, slope.q(), p - 1 - i)?)),
        None => Ok(Determination::Indeterminate(format!("{}: no mirror V profile for slope {slope}", knot.name))),
    }
}

fn require_v0_zero(knot: &KnotData) -> Result<()> {
    if knot.vh.v(0) != 0 || knot.vh.h(0) != 0 {
        return Err(Error::HypothesisFailed(format!(
            "{}: V_0 = {}, H_0 = {}; the reduced-group formula needs both zero",
            knot.name,
            knot.vh.v(0),
            knot.vh.h(0)
        )));
    }
    Ok(())
}

/// `⊕_s A_{k_s, red}` placed at the cone gradings.
pub fn hf_red(knot: &KnotData, slope: Slope, i: i64) -> Result<GradedModule> {
    require_v0_zero(knot)?;
    check_homogeneous(&knot.vh)?;
    let layout = Layout::minimal(slope, i, knot.genus())?;
    let anchor = d_lens(&LensSpace::new(layout.p, layout.q)?, i)?;
    if !layout.positive() {
        let direct = cone_homology(&ConeSpec::new(knot, slope, i)?)?;
        if direct.tower_bottom.as_ref() != Some(&anchor) {
            return Err(Error::HypothesisFailed(format!(
                "{}: d(S³_{slope}, {i}) differs from the lens-space value",
                knot.name
            )));
        }
    }
    let mut ranks: BTreeMap<Rational, usize> = BTreeMap::new();
    for s in layout.a_slots() {
        let alpha = layout.alpha(s, &knot.vh);
        for r in knot.reduced_at(layout.k(s)) {
            for l in &r.local_gradings {
                let g = Rational::integer((alpha + l) as i128) + &anchor;
                *ranks.entry(g).or_default() += 1;
            }
        }
    }
    Ok(GradedModule { tower_bottom: None, reduced: ranks.into_iter().collect() })
}

/// `|q| · C` with `C = Σ_k rank A_{k,red}`.
pub fn hf_red_total_rank(knot: &KnotData, slope: Slope) -> Result<usize> {
    require_v0_zero(knot)?;
    if slope.is_infinite() || slope.is_zero() {
        return Err(Error::OutOfRange(format!("slope {slope} is not a rational homology sphere surgery")));
    }
    Ok(slope.q() as usize * knot.reduced_total_rank())
}

/// `χ(HF_red)` relative to the tower parity, from the direct cone.
pub fn euler_char_red(knot: &KnotData, slope: Slope, i: i64) -> Result<i64> {
    let h = cone_homology(&ConeSpec::new(knot, slope, i)?)?;
    let d = h.tower_bottom.clone().expect("cone homology always has a tower");
    Ok(h.euler_characteristic(&d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{AlexanderPoly, ReducedSummand};

    fn slope(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn trefoil() -> KnotData {
        KnotData::new("3_1", AlexanderPoly::new(vec![-1, 1]).unwrap(), 1, VHProfile::from_v(vec![1, 0]).unwrap())
    }

    fn figure_eight() -> KnotData {
        let mut k =
            KnotData::new("4_1", AlexanderPoly::new(vec![3, -1]).unwrap(), 0, VHProfile::from_v(vec![0, 0]).unwrap());
        k.reduced = vec![ReducedSummand::new(0, vec![-1])];
        k.mirror_vh = Some(k.vh.clone());
        k
    }

    #[test]
    fn trefoil_values() {
        let t = trefoil();
        assert_eq!(d_surgery(&t, slope(1, 1), 0).unwrap(), Rational::integer(-2));
        assert_eq!(d_surgery(&t, slope(2, 1), 0).unwrap(), Rational::new(-7, 4));
        assert_eq!(d_surgery(&t, slope(2, 1), 1).unwrap(), Rational::new(-1, 4));
        assert!(d_surgery(&t, slope(-1, 1), 0).is_err());
    }

    #[test]
    fn signed_values() {
        let u = KnotData::unknot();
        let lens = LensSpace::new(5, 2).unwrap();
        let mut got: Vec<Rational> =
            (0..5).map(|i| d_surgery_signed(&u, slope(-5, 2), i).unwrap().known().unwrap()).collect();
        let mut want: Vec<Rational> = (0..5).map(|i| -d_lens(&lens, i).unwrap()).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(d_surgery_signed(&figure_eight(), slope(-1, 1), 0).unwrap(), Determination::Known(Rational::zero()));
        assert!(matches!(d_surgery_signed(&trefoil(), slope(-1, 1), 0).unwrap(), Determination::Indeterminate(_)));
    }

    #[test]
    fn figure_eight_reduced() {
        let k = figure_eight();
        let h = hf_red(&k, slope(1, 1), 0).unwrap();
        assert_eq!(h.reduced_rank(), 1);
        assert_eq!(hf_red_total_rank(&k, slope(1, 1)).unwrap(), 1);
        assert_eq!(hf_red_total_rank(&k, slope(7, 3)).unwrap(), 3);
        let total: usize = (0..7).map(|i| hf_red(&k, slope(7, 3), i).unwrap().reduced_rank()).sum();
        assert_eq!(total, 3);
        assert_eq!(euler_char_red(&k, slope(1, 1), 0).unwrap(), -1);
        assert_eq!(hf_red(&k, slope(-1, 1), 0).unwrap().reduced_rank(), 1);
    }

    #[test]
    fn formula_needs_v0_zero() {
        assert!(matches!(hf_red(&trefoil(), slope(1, 1), 0), Err(Error::HypothesisFailed(_))));
        assert!(hf_red_total_rank(&trefoil(), slope(1, 1)).is_err());
        assert!(hf_red(&KnotData::unknot(), slope(3, 2), 1).unwrap().reduced.is_empty());
    }

    #[test]
    fn trefoil_half_surgery_has_reduced_part() {
        let t = trefoil();
        let total: i64 = (0..1).map(|i| euler_char_red(&t, slope(1, 2), i).unwrap()).sum();
        assert_eq!(total, 1);
    }
}
