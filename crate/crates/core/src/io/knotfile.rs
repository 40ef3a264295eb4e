//! JSON knot tables.
//!
//! ```json
//! {"format": 1, "knots": [{"name": "3_1", "alexander": [-1, 1], "tau": 1,
//!   "genus": 1, "V": [1, 0], "seifert": [[-1, 1], [0, -1]]}]}
//! ```
//!
//! `V` lists `V_0..V_g`; `V_neg` (`V_{-1}..V_{-g}`) and `H` (`H_{-g}..H_g`)
//! default to the symmetric extension and are omitted on output when they
//! match it.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{AlexanderPoly, KnotData, ReducedSummand, SeifertMatrix, VHProfile};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    format: u32,
    knots: Vec<KnotRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KnotRepr {
    name: String,
    alexander: Vec<i64>,
    tau: i64,
    genus: usize,
    #[serde(rename = "V")]
    v: Vec<i64>,
    #[serde(rename = "V_neg", default, skip_serializing_if = "Option::is_none")]
    v_neg: Option<Vec<i64>>,
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    h: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    reduced: Vec<ReducedRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seifert: Option<Vec<Vec<i64>>>,
    #[serde(rename = "mirror_V", default, skip_serializing_if = "Option::is_none")]
    mirror_v: Option<Vec<i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReducedRepr {
    k: i64,
    rank: usize,
    local_gradings: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v_maps: Option<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h_maps: Option<Vec<bool>>,
}

fn invalid(name: &str, e: impl ToString) -> Error {
    Error::Validation { knot: name.to_string(), violation: e.to_string() }
}

impl KnotRepr {
    fn into_knot(self) -> Result<KnotData> {
        let name = self.name;
        let alexander = AlexanderPoly::new(self.alexander).map_err(|e| invalid(&name, e))?;
        if self.v.len() != self.genus + 1 {
            return Err(invalid(
                &name,
                format!("V has {} entries but genus {} needs {}", self.v.len(), self.genus, self.genus + 1),
            ));
        }
        let vh = VHProfile::with_explicit(self.v, self.v_neg, self.h).map_err(|e| invalid(&name, e))?;
        let mirror_vh = match self.mirror_v {
            Some(m) => Some(VHProfile::from_v(m).map_err(|e| invalid(&name, format!("mirror: {e}")))?),
            None => None,
        };
        let seifert = match self.seifert {
            Some(rows) => Some(SeifertMatrix::new(rows).map_err(|e| invalid(&name, e))?),
            None => None,
        };
        let reduced = self
            .reduced
            .into_iter()
            .map(|r| ReducedSummand {
                k: r.k,
                rank: r.rank,
                local_gradings: r.local_gradings,
                v_maps: r.v_maps,
                h_maps: r.h_maps,
            })
            .collect();
        let knot = KnotData { name, alexander, tau: self.tau, vh, reduced, seifert, mirror_vh };
        knot.validate()?;
        Ok(knot)
    }

    fn from_knot(k: &KnotData) -> Self {
        let default_ext = k.vh.has_default_extension();
        KnotRepr {
            name: k.name.clone(),
            alexander: k.alexander.coeffs().to_vec(),
            tau: k.tau,
            genus: k.genus(),
            v: k.vh.v_nonneg().to_vec(),
            v_neg: (!default_ext).then(|| k.vh.v_negative().to_vec()),
            h: (!default_ext).then(|| k.vh.h_window().to_vec()),
            reduced: k
                .reduced
                .iter()
                .map(|r| ReducedRepr {
                    k: r.k,
                    rank: r.rank,
                    local_gradings: r.local_gradings.clone(),
                    v_maps: r.v_maps.clone(),
                    h_maps: r.h_maps.clone(),
                })
                .collect(),
            seifert: k.seifert.as_ref().map(|a| a.rows()),
            mirror_v: k.mirror_vh.as_ref().map(|m| m.v_nonneg().to_vec()),
        }
    }
}

/// Parses and validates a knot table held in memory.
pub fn parse_knot_str(text: &str) -> Result<Vec<KnotData>> {
    let file: FileRepr = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.format != FORMAT_VERSION {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("unsupported format {}, expected {FORMAT_VERSION}", file.format),
        });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(file.knots.len());
    for repr in file.knots {
        if !seen.insert(repr.name.clone()) {
            return Err(Error::DuplicateName(repr.name));
        }
        out.push(repr.into_knot()?);
    }
    Ok(out)
}

pub fn parse_knot_file(path: impl AsRef<Path>) -> Result<Vec<KnotData>> {
    parse_knot_str(&std::fs::read_to_string(path)?)
}

/// Inverse of [`parse_knot_str`]. Mirror profiles are written as their
/// `V_0..V_g` only.
pub fn serialize_knot_file(knots: &[KnotData]) -> String {
    let file = FileRepr { format: FORMAT_VERSION, knots: knots.iter().map(KnotRepr::from_knot).collect() };
    let mut s = serde_json::to_string_pretty(&file).expect("knot tables always serialise");
    s.push('\n');
    s
}

pub fn find_knot<'a>(knots: &'a [KnotData], name: &str) -> Result<&'a KnotData> {
    knots.iter().find(|k| k.name == name).ok_or_else(|| Error::UnknownKnot(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{"format": 1, "knots": [
        {"name": "3_1", "alexander": [-1, 1], "tau": 1, "genus": 1, "V": [1, 0],
         "seifert": [[-1, 1], [0, -1]]},
        {"name": "4_1", "alexander": [3, -1], "tau": 0, "genus": 1, "V": [0, 0],
         "reduced": [{"k": 0, "rank": 1, "local_gradings": [-1]}], "mirror_V": [0, 0]}
    ]}"#;

    #[test]
    fn parse_and_round_trip() {
        let knots = parse_knot_str(SMALL).unwrap();
        assert_eq!(knots.len(), 2);
        assert_eq!(knots[1].reduced_total_rank(), 1);
        let again = parse_knot_str(&serialize_knot_file(&knots)).unwrap();
        assert_eq!(again, knots);
        assert!(find_knot(&knots, "5_2").is_err());
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_knot_str("{\"format\": 1,\n \"knots\": [}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_knot_str(r#"{"format": 1, "knots": [], "x": 1}"#), Err(Error::Parse { .. })));
    }

    #[test]
    fn h0_breach_rejected() {
        let text = r#"{"format": 1, "knots": [{"name": "bad", "alexander": [-1, 1], "tau": 1,
            "genus": 1, "V": [1, 0], "V_neg": [1], "H": [0, 0, 1]}]}"#;
        let err = parse_knot_str(text).unwrap_err().to_string();
        assert!(err.contains("H_0 ≠ V_0"), "{err}");
    }

    #[test]
    fn normalization_rejected() {
        let text = r#"{"format": 1, "knots": [{"name": "bad", "alexander": [1, 1], "tau": 0,
            "genus": 1, "V": [0, 0]}]}"#;
        let err = parse_knot_str(text).unwrap_err().to_string();
        assert!(err.contains("normalization"), "{err}");
    }

    #[test]
    fn duplicates_rejected() {
        let text = r#"{"format": 1, "knots": [
            {"name": "a", "alexander": [1], "tau": 0, "genus": 0, "V": [0]},
            {"name": "a", "alexander": [1], "tau": 0, "genus": 0, "V": [0]}]}"#;
        assert!(matches!(parse_knot_str(text), Err(Error::DuplicateName(_))));
    }
}
