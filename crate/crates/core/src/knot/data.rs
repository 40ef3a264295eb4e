use std::collections::BTreeMap;

use super::{alexander_from_seifert, validate_vh, AlexanderPoly, SeifertMatrix, VHProfile};
use crate::error::{Error, Result};

/// Reduced part `A_{k,red}` of `A⁺_k`: `rank` generators at the given
/// gradings relative to the bottom of the tower of `A⁺_k`.
///
/// By default every generator is killed by `U` and by both maps to `B⁺`. The
/// optional flags send generator `j` to the bottom of the target tower.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedSummand {
    pub k: i64,
    pub rank: usize,
    pub local_gradings: Vec<i64>,
    pub v_maps: Option<Vec<bool>>,
    pub h_maps: Option<Vec<bool>>,
}

impl ReducedSummand {
    pub fn new(k: i64, local_gradings: Vec<i64>) -> Self {
        ReducedSummand { k, rank: local_gradings.len(), local_gradings, v_maps: None, h_maps: None }
    }

    pub fn v_map(&self, j: usize) -> bool {
        self.v_maps.as_ref().is_some_and(|m| m[j])
    }

    pub fn h_map(&self, j: usize) -> bool {
        self.h_maps.as_ref().is_some_and(|m| m[j])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotData {
    pub name: String,
    pub alexander: AlexanderPoly,
    pub tau: i64,
    pub vh: VHProfile,
    pub reduced: Vec<ReducedSummand>,
    pub seifert: Option<SeifertMatrix>,
    pub mirror_vh: Option<VHProfile>,
}

impl KnotData {
    /// Record with only the tower data (no reduced part, Seifert matrix or
    /// mirror profile).
    pub fn new(name: impl Into<String>, alexander: AlexanderPoly, tau: i64, vh: VHProfile) -> Self {
        KnotData { name: name.into(), alexander, tau, vh, reduced: Vec::new(), seifert: None, mirror_vh: None }
    }

    pub fn unknot() -> Self {
        KnotData::new("unknot", AlexanderPoly::unknot(), 0, VHProfile::trivial(0))
    }

    pub fn genus(&self) -> usize {
        self.vh.genus()
    }

    pub fn is_trivial(&self) -> bool {
        self.alexander.is_trivial() && self.genus() == 0 && self.reduced.is_empty()
    }

    /// `C = Σ_k rank A_{k,red}`.
    pub fn reduced_total_rank(&self) -> usize {
        self.reduced.iter().map(|r| r.rank).sum()
    }

    /// Generators of `A_{k,red}` as local gradings with their summand.
    pub fn reduced_at(&self, k: i64) -> impl Iterator<Item = &ReducedSummand> {
        self.reduced.iter().filter(move |r| r.k == k)
    }

    fn violation(&self, msg: impl Into<String>) -> Error {
        Error::Validation { knot: self.name.clone(), violation: msg.into() }
    }

    /// Checks every record-level invariant; the first breach is returned.
    pub fn validate(&self) -> Result<()> {
        if self.name.trim().is_empty() {
            return Err(self.violation("empty name"));
        }
        let g = self.genus() as i64;
        if self.alexander.degree() as i64 > g {
            return Err(self.violation(format!("Alexander degree {} exceeds genus {g}", self.alexander.degree())));
        }
        let diag = validate_vh(&self.vh);
        if let Some(v) = diag.violations.first() {
            return Err(self.violation(v.clone()));
        }
        if let Some(m) = &self.mirror_vh {
            if m.genus() != self.genus() {
                return Err(self.violation("mirror_V has a different genus"));
            }
            if let Some(v) = validate_vh(m).violations.first() {
                return Err(self.violation(format!("mirror: {v}")));
            }
        }
        let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
        for r in &self.reduced {
            if r.rank == 0 {
                return Err(self.violation(format!("reduced summand at k={} has rank 0", r.k)));
            }
            if r.local_gradings.len() != r.rank {
                return Err(self.violation(format!(
                    "reduced summand at k={} lists {} gradings for rank {}",
                    r.k,
                    r.local_gradings.len(),
                    r.rank
                )));
            }
            for (label, maps) in [("v_maps", &r.v_maps), ("h_maps", &r.h_maps)] {
                if maps.as_ref().is_some_and(|m| m.len() != r.rank) {
                    return Err(self.violation(format!("{label} at k={} has wrong length", r.k)));
                }
            }
            if r.k.abs() >= g {
                return Err(self.violation(format!("reduced summand at k={} but |k| >= g = {g}", r.k)));
            }
            *ranks.entry(r.k).or_default() += r.rank;
        }
        for (&k, &r) in &ranks {
            if ranks.get(&-k).copied().unwrap_or(0) != r {
                return Err(self.violation(format!("reduced rank at k={k} differs from k={}", -k)));
            }
        }
        if let Some(a) = &self.seifert {
            let derived = alexander_from_seifert(a).map_err(|e| self.violation(e.to_string()))?;
            if derived != self.alexander {
                return Err(self.violation(format!(
                    "Seifert matrix gives Alexander coefficients {:?}, record has {:?}",
                    derived.coeffs(),
                    self.alexander.coeffs()
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_eight() -> KnotData {
        let mut k =
            KnotData::new("4_1", AlexanderPoly::new(vec![3, -1]).unwrap(), 0, VHProfile::from_v(vec![0, 0]).unwrap());
        k.reduced = vec![ReducedSummand::new(0, vec![-1])];
        k.seifert = Some(SeifertMatrix::new(vec![vec![-1, 1], vec![0, 1]]).unwrap());
        k.mirror_vh = Some(k.vh.clone());
        k
    }

    #[test]
    fn valid_records() {
        figure_eight().validate().unwrap();
        KnotData::unknot().validate().unwrap();
        assert!(KnotData::unknot().is_trivial());
        assert!(!figure_eight().is_trivial());
        assert_eq!(figure_eight().reduced_total_rank(), 1);
    }

    #[test]
    fn asymmetric_reduced_ranks() {
        let mut k = figure_eight();
        k.vh = VHProfile::from_v(vec![0, 0, 0]).unwrap();
        k.mirror_vh = None;
        k.seifert = None;
        k.reduced.push(ReducedSummand::new(1, vec![0]));
        assert!(matches!(k.validate(), Err(Error::Validation { .. })));
        k.reduced.push(ReducedSummand::new(-1, vec![0]));
        k.validate().unwrap();
    }

    #[test]
    fn seifert_mismatch() {
        let mut k = figure_eight();
        k.seifert = Some(SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap());
        let err = k.validate().unwrap_err().to_string();
        assert!(err.contains("Seifert"), "{err}");
    }

    #[test]
    fn reduced_outside_genus() {
        let mut k = figure_eight();
        k.reduced = vec![ReducedSummand::new(1, vec![0]), ReducedSummand::new(-1, vec![0])];
        assert!(k.validate().is_err());
    }
}
