//! Necessary conditions for a knot to admit purely cosmetic surgeries
//! `S³_{p/q}(K) ≅ S³_{-p/q}(K)`, and the candidate slopes that survive them.
//!
//! A `NotObstructed` verdict only means every Heegaard Floer and classical
//! condition implemented here passes; it never asserts that a cosmetic pair
//! exists.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{is_cosmetic_residue, Rational, Slope};
use crate::cone::{d_surgery, d_surgery_signed, euler_char_red, Determination};
use crate::error::{Error, Result};
use crate::knot::KnotData;
use crate::lens::{d_lens_all, multiset, LensSpace};

/// The slope pair `(p/q, -p/q)`, with `q² ≡ -1 (mod p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlopePair {
    pub p: i64,
    pub q: i64,
}

impl SlopePair {
    pub fn positive(&self) -> Slope {
        Slope::new(self.p, self.q).expect("coprime")
    }

    pub fn negative(&self) -> Slope {
        Slope::new(-self.p, self.q).expect("coprime")
    }
}

impl fmt::Display for SlopePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}/{}", self.p, self.q)
    }
}

/// All admissible pairs with `1 <= p <= p_max` and `1 <= q <= q_max`, sorted.
/// For `p >= 2` the numerator runs over residues `1 <= q < p`; for `p = 1`
/// every `q` is admissible.
pub fn enumerate_candidate_pairs(p_max: i64, q_max: i64) -> Vec<SlopePair> {
    let mut out = Vec::new();
    for p in 1..=p_max {
        let q_top = if p == 1 { q_max } else { q_max.min(p - 1) };
        for q in 1..=q_top {
            if p.gcd(&q) == 1 && is_cosmetic_residue(p, q) {
                out.push(SlopePair { p, q });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Passed => "passed",
            CheckStatus::Failed => "failed",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub witness: BTreeMap<String, String>,
}

impl Check {
    fn new(name: impl Into<String>, status: CheckStatus) -> Self {
        Check { name: name.into(), status, witness: BTreeMap::new() }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.witness.insert(key.to_string(), value.to_string());
        self
    }

    fn passed_if(name: impl Into<String>, ok: bool) -> Self {
        Check::new(name, if ok { CheckStatus::Passed } else { CheckStatus::Failed })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Obstructed { reason: String },
    NotObstructed { candidates: Vec<SlopePair> },
    Indeterminate { missing: Vec<String> },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Obstructed { .. } => "Obstructed",
            Verdict::NotObstructed { .. } => "NotObstructed",
            Verdict::Indeterminate { .. } => "Indeterminate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosmeticReport {
    pub knot_name: String,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
}

fn fmt_list(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|r| r.to_fraction_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// `V_0 = 0` forces `ν(K) <= 0`, and with `ν ∈ {τ, τ + 1}` also `τ <= 0`.
pub fn nu_gate(knot: &KnotData) -> Check {
    let v0 = knot.vh.v(0);
    if v0 != 0 {
        return Check::new("nu_bound", CheckStatus::Skipped).with("V_0", v0).with("note", "hypothesis V_0 = 0 not met");
    }
    Check::passed_if("nu_bound", knot.tau <= 0).with("V_0", 0).with("tau", knot.tau)
}

fn pair_checks(knot: &KnotData, pair: SlopePair) -> Result<Vec<Check>> {
    let pos = pair.positive();
    let neg = pair.negative();
    let lens = multiset(&d_lens_all(&LensSpace::new(pair.p, pair.q)?));
    let mut checks = Vec::new();

    let surgery: Vec<Rational> = (0..pair.p).map(|i| d_surgery(knot, pos, i)).collect::<Result<_>>()?;
    let surgery = multiset(&surgery);
    checks.push(
        Check::passed_if(format!("d_multiset[{pos}]"), surgery == lens)
            .with("surgery", fmt_list(&surgery))
            .with("lens", fmt_list(&lens)),
    );

    let mut opposite = Vec::new();
    let mut missing = None;
    for i in 0..pair.p {
        match d_surgery_signed(knot, neg, i)? {
            Determination::Known(d) => opposite.push(d),
            Determination::Indeterminate(why) => {
                missing = Some(why);
                break;
            }
        }
    }
    let negated = multiset(&lens.iter().map(|d| -d).collect::<Vec<_>>());
    checks.push(match missing {
        Some(why) => Check::new(format!("d_multiset[{neg}]"), CheckStatus::Skipped).with("missing", why),
        None => {
            let opposite = multiset(&opposite);
            Check::passed_if(format!("d_multiset[{neg}]"), opposite == negated)
                .with("surgery", fmt_list(&opposite))
                .with("negated_lens", fmt_list(&negated))
        }
    });

    let mut chi = 0i64;
    for i in 0..pair.p {
        chi += euler_char_red(knot, pos, i)?;
    }
    checks.push(Check::passed_if(format!("euler_char_sum[{pos}]"), chi == 0).with("sum", chi));
    Ok(checks)
}

/// Runs the gate for one knot over all candidate pairs within the bounds.
pub fn check_knot(knot: &KnotData, p_max: i64, q_max: i64) -> Result<CosmeticReport> {
    if knot.is_trivial() {
        return Err(Error::TrivialKnot(knot.name.clone()));
    }
    if p_max < 1 || q_max < 1 {
        return Err(Error::OutOfRange(format!("bounds must be >= 1, got {p_max}, {q_max}")));
    }
    let mut checks = vec![
        Check::passed_if("tau_zero", knot.tau == 0).with("tau", knot.tau),
        Check::passed_if("alexander_second_derivative_zero", knot.alexander.second_derivative_at_one() == 0)
            .with("value", knot.alexander.second_derivative_at_one()),
        Check::passed_if("v0_zero", knot.vh.v(0) == 0).with("V_0", knot.vh.v(0)),
        match &knot.mirror_vh {
            Some(m) => Check::passed_if("mirror_v0_zero", m.v(0) == 0).with("V_0", m.v(0)),
            None => Check::new("mirror_v0_zero", CheckStatus::Skipped).with("missing", "mirror_V"),
        },
        nu_gate(knot),
    ];

    let pairs = enumerate_candidate_pairs(p_max, q_max);
    let per_pair: Vec<Vec<Check>> = pairs.par_iter().map(|&pair| pair_checks(knot, pair)).collect::<Result<_>>()?;
    let survivors: Vec<SlopePair> = pairs
        .iter()
        .zip(&per_pair)
        .filter(|(_, cs)| cs.iter().all(|c| c.status != CheckStatus::Failed))
        .map(|(&p, _)| p)
        .collect();
    checks.extend(per_pair.into_iter().flatten());

    let global_failure = checks
        .iter()
        .take(5)
        .find(|c| c.status == CheckStatus::Failed)
        .map(|c| format!("{} failed ({})", c.name, witness_summary(c)));
    let verdict = if let Some(reason) = global_failure {
        Verdict::Obstructed { reason }
    } else if survivors.is_empty() {
        Verdict::Obstructed { reason: format!("every candidate pair with p <= {p_max}, q <= {q_max} fails") }
    } else {
        let missing: Vec<String> = checks
            .iter()
            .filter(|c| c.status == CheckStatus::Skipped && c.name != "nu_bound")
            .map(|c| c.name.clone())
            .collect();
        if missing.is_empty() {
            Verdict::NotObstructed { candidates: survivors }
        } else {
            Verdict::Indeterminate { missing }
        }
    };
    Ok(CosmeticReport { knot_name: knot.name.clone(), verdict, checks })
}

fn witness_summary(c: &Check) -> String {
    c.witness.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
}

/// Reports for several knots, computed in parallel, in input order.
pub fn check_knots(knots: &[KnotData], p_max: i64, q_max: i64) -> Vec<Result<CosmeticReport>> {
    knots.par_iter().map(|k| check_knot(k, p_max, q_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{AlexanderPoly, ReducedSummand, VHProfile};

    fn pairs(v: &[(i64, i64)]) -> Vec<SlopePair> {
        v.iter().map(|&(p, q)| SlopePair { p, q }).collect()
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_candidate_pairs(5, 3), pairs(&[(1, 1), (1, 2), (1, 3), (2, 1), (5, 2), (5, 3)]));
        let big = enumerate_candidate_pairs(13, 8);
        assert!(big.contains(&SlopePair { p: 13, q: 5 }));
        assert!(big.contains(&SlopePair { p: 13, q: 8 }));
        assert!(enumerate_candidate_pairs(20, 20).iter().all(|s| s.p != 3 && s.p != 4));
    }

    fn trefoil() -> KnotData {
        KnotData::new("3_1", AlexanderPoly::new(vec![-1, 1]).unwrap(), 1, VHProfile::from_v(vec![1, 0]).unwrap())
    }

    fn nine_44() -> KnotData {
        let mut k = KnotData::new(
            "9_44",
            AlexanderPoly::new(vec![7, -4, 1]).unwrap(),
            0,
            VHProfile::from_v(vec![0, 0, 0]).unwrap(),
        );
        k.reduced = vec![
            ReducedSummand::new(-1, vec![0]),
            ReducedSummand::new(0, vec![-1, -1]),
            ReducedSummand::new(1, vec![0]),
        ];
        k.mirror_vh = Some(k.vh.clone());
        k
    }

    #[test]
    fn trefoil_is_obstructed() {
        let r = check_knot(&trefoil(), 5, 5).unwrap();
        match &r.verdict {
            Verdict::Obstructed { reason } => assert!(reason.starts_with("tau_zero"), "{reason}"),
            v => panic!("unexpected {v:?}"),
        }
        let d2 = r.checks.iter().find(|c| c.name == "alexander_second_derivative_zero").unwrap();
        assert_eq!(d2.status, CheckStatus::Failed);
        assert_eq!(nu_gate(&trefoil()).status, CheckStatus::Skipped);
    }

    #[test]
    fn nine_44_survives() {
        let r = check_knot(&nine_44(), 10, 10).unwrap();
        match &r.verdict {
            Verdict::NotObstructed { candidates } => {
                assert!(candidates.contains(&SlopePair { p: 1, q: 1 }));
            }
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn missing_mirror_is_indeterminate_not_obstructed() {
        let mut k = nine_44();
        k.mirror_vh = None;
        let r = check_knot(&k, 5, 3).unwrap();
        assert!(matches!(r.verdict, Verdict::Indeterminate { .. }));
        assert!(r.checks.iter().any(|c| c.name == "mirror_v0_zero" && c.status == CheckStatus::Skipped));
    }

    #[test]
    fn nu_inconsistency() {
        let mut k = nine_44();
        k.tau = 1;
        assert_eq!(nu_gate(&k).status, CheckStatus::Failed);
        assert_eq!(nu_gate(&nine_44()).status, CheckStatus::Passed);
    }

    #[test]
    fn unknot_rejected() {
        assert!(matches!(check_knot(&KnotData::unknot(), 5, 5), Err(Error::TrivialKnot(_))));
    }
}
