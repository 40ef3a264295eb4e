//! The integers `V_k`, `H_k` describing how the vertical and horizontal maps
//! act on the towers of `A⁺_k`.

use super::AlexanderPoly;
use crate::error::{Error, Result};

/// `V_k` for `-g <= k <= g` and `H_k` for `-g <= k <= g`, extended outside
/// the window by the forced tails (`V_k = 0` for `k >= g`, `H_k = 0` for
/// `k <= -g`, slope one on the other side).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VHProfile {
    genus: usize,
    /// `V_0, ..., V_g`
    v_pos: Vec<i64>,
    /// `V_{-1}, ..., V_{-g}`
    v_neg: Vec<i64>,
    /// `H_{-g}, ..., H_g`
    h: Vec<i64>,
}

impl VHProfile {
    /// Profile from `V_0..V_g` with the default extension `V_{-k} = V_k + k`
    /// and `H_k = V_{-k}`.
    pub fn from_v(v: Vec<i64>) -> Result<Self> {
        Self::with_explicit(v, None, None)
    }

    /// Lengths are checked here; monotonicity, tails and symmetry are left to
    /// [`validate_vh`].
    pub fn with_explicit(v: Vec<i64>, v_neg: Option<Vec<i64>>, h: Option<Vec<i64>>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::LengthMismatch("V needs at least V_0".into()));
        }
        let genus = v.len() - 1;
        let v_neg = match v_neg {
            Some(n) if n.len() != genus => {
                return Err(Error::LengthMismatch(format!("V_neg has {} entries, expected {genus}", n.len())))
            }
            Some(n) => n,
            None => (1..=genus).map(|k| v[k] + k as i64).collect(),
        };
        let h = match h {
            Some(h) if h.len() != 2 * genus + 1 => {
                return Err(Error::LengthMismatch(format!("H has {} entries, expected {}", h.len(), 2 * genus + 1)))
            }
            Some(h) => h,
            None => {
                let g = genus as i64;
                (-g..=g)
                    .map(|k| {
                        let j = -k;
                        if j >= 0 {
                            v[j as usize]
                        } else {
                            v_neg[(-j - 1) as usize]
                        }
                    })
                    .collect()
            }
        };
        Ok(VHProfile { genus, v_pos: v, v_neg, h })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    fn g(&self) -> i64 {
        self.genus as i64
    }

    /// `V_k` for any integer `k`.
    pub fn v(&self, k: i64) -> i64 {
        let g = self.g();
        if k > g {
            0
        } else if k >= 0 {
            self.v_pos[k as usize]
        } else if k >= -g {
            self.v_neg[(-k - 1) as usize]
        } else {
            self.v(-g) + (-g - k)
        }
    }

    /// `H_k` for any integer `k`.
    pub fn h(&self, k: i64) -> i64 {
        let g = self.g();
        if k < -g {
            0
        } else if k <= g {
            self.h[(k + g) as usize]
        } else {
            self.h(g) + (k - g)
        }
    }

    pub fn v_nonneg(&self) -> &[i64] {
        &self.v_pos
    }

    pub fn v_negative(&self) -> &[i64] {
        &self.v_neg
    }

    pub fn h_window(&self) -> &[i64] {
        &self.h
    }

    pub fn v0(&self) -> i64 {
        self.v_pos[0]
    }

    pub fn max_v(&self) -> i64 {
        self.v_pos.iter().chain(&self.v_neg).copied().max().unwrap_or(0)
    }

    pub fn max_h(&self) -> i64 {
        self.h.iter().copied().max().unwrap_or(0)
    }

    /// True when `V_neg` and `H` are the defaults implied by `V_0..V_g`.
    pub fn has_default_extension(&self) -> bool {
        Self::from_v(self.v_pos.clone()).map(|d| d == *self).unwrap_or(false)
    }

    /// The profile with all `V_k = 0` up to genus `g`.
    pub fn trivial(genus: usize) -> Self {
        Self::from_v(vec![0; genus + 1]).expect("nonempty")
    }
}

/// Outcome of [`validate_vh`]: hard violations and advisory warnings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VhDiagnostics {
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
}

impl VhDiagnostics {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_vh(vh: &VHProfile) -> VhDiagnostics {
    let mut out = VhDiagnostics::default();
    let g = vh.g();
    for k in -g..=g {
        if vh.v(k) < 0 || vh.h(k) < 0 {
            out.violations.push(format!("negative value at k={k}"));
        }
    }
    for k in -g..g {
        if vh.v(k) < vh.v(k + 1) {
            out.violations.push(format!("monotonicity: V_{k} < V_{}", k + 1));
        }
        if vh.h(k) > vh.h(k + 1) {
            out.violations.push(format!("monotonicity: H_{k} > H_{}", k + 1));
        }
    }
    if vh.v(g) != 0 {
        out.violations.push(format!("tail: V_{g} = {} but V_k = 0 for k >= g", vh.v(g)));
    }
    if vh.h(-g) != 0 {
        out.violations.push(format!("tail: H_{} = {} but H_k = 0 for k <= -g", -g, vh.h(-g)));
    }
    if vh.h(0) != vh.v(0) {
        out.violations.push(format!("H_0 ≠ V_0 ({} vs {})", vh.h(0), vh.v(0)));
    }
    for k in (-g..=g).filter(|&k| k != 0) {
        if vh.h(k) != vh.v(-k) {
            out.violations.push(format!("H_{k} ≠ V_{} ({} vs {})", -k, vh.h(k), vh.v(-k)));
        }
    }
    for k in -g..g {
        let step = vh.v(k) - vh.v(k + 1);
        if !(0..=1).contains(&step) {
            out.warnings.push(format!("step V_{k} - V_{} = {step} outside {{0, 1}}", k + 1));
        }
    }
    for k in -g..=g {
        if vh.h(k) - vh.v(k) != k {
            out.warnings.push(format!("H_{k} - V_{k} = {} ≠ {k}", vh.h(k) - vh.v(k)));
        }
    }
    out
}

/// For an L-space knot `V_k = t_k` (`k >= 0`), with the torsion coefficients
/// of `Δ`.
pub fn vh_from_lspace_knot(delta: &AlexanderPoly) -> Result<VHProfile> {
    let t = delta.torsion_coefficients();
    if let Some(k) = t.iter().position(|&x| x < 0) {
        return Err(Error::NotLSpaceKnot(format!("t_{k} = {} < 0", t[k])));
    }
    if let Some(k) = t.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::NotLSpaceKnot(format!("t_{k} < t_{}", k + 1)));
    }
    let mut v = t;
    v.push(0);
    VHProfile::from_v(v)
}
