//! Serializable reports, JSON with sorted keys, and Graphviz export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cd::CdResult;
use crate::error::Result;
use crate::theorems::{Outcome, Verdict};

/// Version string mixed into cache keys and reports.
pub const ENGINE_VERSION: &str = concat!("cdlat-", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub order: usize,
    pub elements: Vec<usize>,
    pub generators: Vec<usize>,
    pub is_normal: bool,
    /// `null` when the member is not subnormal.
    pub defect: Option<usize>,
    pub is_centrally_large: bool,
    /// Index of `C_G(U)` in the member list.
    pub centralizer: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub engine_version: String,
    pub spec: String,
    pub order: usize,
    pub max_measure: String,
    pub subgroups_enumerated: usize,
    pub members: Vec<MemberReport>,
    /// `[lower, upper]` member indices for each cover.
    pub hasse_edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn from_result(spec: &str, result: &CdResult) -> Report {
        Report {
            engine_version: ENGINE_VERSION.to_string(),
            spec: spec.to_string(),
            order: result.ambient.order(),
            max_measure: result.max_measure.to_string(),
            subgroups_enumerated: result.subgroups_enumerated,
            members: result
                .members
                .iter()
                .map(|m| MemberReport {
                    order: m.subgroup.order(),
                    elements: m.subgroup.elements(),
                    generators: m.subgroup.generators().to_vec(),
                    is_normal: m.is_normal,
                    defect: m.defect,
                    is_centrally_large: m.centrally_large,
                    centralizer: m.centralizer,
                })
                .collect(),
            hasse_edges: result.hasse_edges.iter().map(|&(a, b)| [a, b]).collect(),
            verdicts: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        to_sorted_json(self)
    }

    pub fn from_json(text: &str) -> Result<Report> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cd {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, m) in self.members.iter().enumerate() {
            let mut label = format!("o={}", m.order);
            if m.is_normal || m.is_centrally_large {
                label.push(' ');
            }
            if m.is_normal {
                label.push_str("[N]");
            }
            if m.is_centrally_large {
                label.push_str("[CL]");
            }
            let _ = writeln!(out, "  m{i} [label=\"{label}\"];");
        }
        for [a, b] in &self.hasse_edges {
            let _ = writeln!(out, "  m{a} -> m{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// DOT rendering of a lattice computation.
pub fn export_dot(result: &CdResult) -> String {
    Report::from_result("", result).to_dot()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(verdicts: &[Verdict]) -> Summary {
        let mut s = Summary::default();
        for v in verdicts {
            match v.outcome {
                Outcome::Passed => s.passed += 1,
                Outcome::Failed => s.failed += 1,
                Outcome::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

/// Output of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub engine_version: String,
    pub summary: Summary,
    pub verdicts: Vec<Verdict>,
}

impl VerifyReport {
    pub fn new(verdicts: Vec<Verdict>) -> VerifyReport {
        VerifyReport { engine_version: ENGINE_VERSION.to_string(), summary: Summary::of(&verdicts), verdicts }
    }

    pub fn all_ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> Result<String> {
        to_sorted_json(self)
    }
}

/// Pretty JSON with object keys in lexicographic order.
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json::Map is a BTreeMap without the preserve_order feature
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cd::cd_lattice;
    use crate::spec::GroupSpec;
    use crate::subgroup::Limits;

    fn report(spec: &str) -> Report {
        let g = GroupSpec::parse(spec).unwrap().build(&Limits::default()).unwrap();
        Report::from_result(spec, &cd_lattice(&g, &Limits::default()).unwrap())
    }

    #[test]
    fn s3_dot() {
        let dot = report("S3").to_dot();
        assert!(dot.contains("m0 [label=\"o=3 [N][CL]\"];"), "{dot}");
        assert_eq!(dot.matches("label=").count(), 1);
        assert!(!dot.contains("->"));
    }

    #[test]
    fn d8_dot_edges() {
        let r = report("D8");
        let dot = r.to_dot();
        assert_eq!(dot.matches("->").count(), 6);
        assert!(dot.contains("o=8 [N]"));
    }

    #[test]
    fn json_keys_sorted_and_round_trip() {
        let r = report("S4");
        let text = r.to_json().unwrap();
        let engine = text.find("\"engine_version\"").unwrap();
        let spec = text.find("\"spec\"").unwrap();
        let max = text.find("\"max_measure\"").unwrap();
        assert!(engine < max && max < spec);
        assert_eq!(Report::from_json(&text).unwrap(), r);
        assert_eq!(r.max_measure, "24");
        assert_eq!(r.members.len(), 2);
    }
}
