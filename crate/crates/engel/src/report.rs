//! Verification reports: an algebra summary and an ordered claim list,
//! rendered as JSON or as plain text. Rendering is deterministic; timings
//! only appear when they were recorded.

use std::fmt::Write as _;

use engel_core::{Field, QuotientAlgebra};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Exploratory,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Exploratory => "EXPLORATORY",
        }
    }
}

/// Evidence for a failed identity: the arguments, the nonzero value and its
/// coordinates in the basis. Claims that compare a computed object against
/// a fixed one carry the computed value and the expected one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub args: Vec<String>,
    pub value: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coordinates: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub statement: String,
    pub anchor: String,
    pub expected: Status,
    pub status: Status,
    /// Whether the observed status is the expected one; always true for
    /// exploratory claims.
    pub matches: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    /// What was observed, for exploratory claims.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observed: Option<Status>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub generators: Vec<String>,
    pub characteristic: u64,
    pub outside_theorem_hypotheses: bool,
    pub dimension: usize,
    pub graded_dims: Vec<usize>,
    pub nilpotency_degree: usize,
}

impl AlgebraSummary {
    pub fn of<K: Field>(alg: &QuotientAlgebra<K>) -> Self {
        AlgebraSummary {
            generators: alg.generators().to_vec(),
            characteristic: alg.field().characteristic(),
            outside_theorem_hypotheses: alg.presentation().outside_theorem_hypotheses(),
            dimension: alg.dim(),
            graded_dims: alg.graded_dims(),
            nilpotency_degree: alg.nilpotency_degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub algebra: AlgebraSummary,
    pub claims: Vec<ClaimRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl VerificationReport {
    pub fn new(algebra: AlgebraSummary) -> Self {
        VerificationReport {
            algebra,
            claims: Vec::new(),
        }
    }

    /// Every non-exploratory claim came out as expected.
    pub fn all_match(&self) -> bool {
        self.claims.iter().all(|c| c.matches)
    }

    /// Ids are unique and every failure carries a witness.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut ids: Vec<&str> = self.claims.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(format!("claim id `{}` appears twice", w[0]));
        }
        if let Some(c) = self
            .claims
            .iter()
            .find(|c| c.status == Status::Fail && c.witness.is_none())
        {
            return Err(format!("claim `{}` fails without a witness", c.id));
        }
        Ok(())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let a = &self.algebra;
        let mut out = String::new();
        let _ = writeln!(out, "generators: {}", a.generators.join(", "));
        let _ = write!(out, "characteristic: {}", a.characteristic);
        if a.outside_theorem_hypotheses {
            out.push_str(" (outside the hypotheses of the counterexample; exploratory)");
        }
        out.push('\n');
        let dims: Vec<String> = a.graded_dims.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "dimension: {} (graded {})", a.dimension, dims.join(", "));
        let _ = writeln!(out, "nilpotency degree: {}", a.nilpotency_degree);
        if self.claims.is_empty() {
            return out;
        }
        out.push('\n');
        for c in &self.claims {
            let mark = if c.matches { "ok" } else { "MISMATCH" };
            let _ = write!(out, "{:<11} {:<8} {}", c.status.label(), mark, c.id);
            if c.expected != c.status && c.expected != Status::Exploratory {
                let _ = write!(out, " (expected {})", c.expected.label());
            }
            if let Some(o) = c.observed {
                let _ = write!(out, " (observed {})", o.label());
            }
            if let Some(t) = c.timing_ms {
                let _ = write!(out, " [{t} ms]");
            }
            out.push('\n');
            let _ = writeln!(out, "    {}", c.statement);
            let _ = writeln!(out, "    see: {}", c.anchor);
            if let Some(w) = &c.witness {
                if !w.args.is_empty() {
                    let _ = writeln!(out, "    witness: ({})", w.args.join(", "));
                }
                let _ = writeln!(out, "    value: {}", w.value);
                if let Some(e) = &w.expected {
                    let _ = writeln!(out, "    expected: {e}");
                }
                if !w.coordinates.is_empty() {
                    let _ = writeln!(out, "    coordinates: [{}]", w.coordinates.join(", "));
                }
            }
        }
        let matched = self.claims.iter().filter(|c| c.matches).count();
        let _ = writeln!(out, "\n{matched}/{} claims as expected", self.claims.len());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary() -> AlgebraSummary {
        AlgebraSummary {
            generators: vec!["x".into(), "y".into()],
            characteristic: 0,
            outside_theorem_hypotheses: false,
            dimension: 26,
            graded_dims: vec![2, 3, 5, 6, 6, 3, 1],
            nilpotency_degree: 8,
        }
    }

    fn claim(id: &str, status: Status, witness: Option<WitnessRecord>) -> ClaimRecord {
        ClaimRecord {
            id: id.into(),
            statement: "s".into(),
            anchor: "a".into(),
            expected: status,
            status,
            matches: true,
            witness,
            observed: None,
            timing_ms: None,
        }
    }

    #[test]
    fn empty_report_has_summary_only() {
        let r = VerificationReport::new(summary());
        let json: serde_json::Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(json["claims"].as_array().unwrap().len(), 0);
        assert_eq!(json["algebra"]["dimension"], 26);
        assert!(!r.render(Format::Text).contains("claims as expected"));
    }

    #[test]
    fn failures_show_coordinates() {
        let mut r = VerificationReport::new(summary());
        let w = WitnessRecord {
            args: vec!["x".into(), "y".into()],
            value: "6*y^2*x*y*x*y^2".into(),
            coordinates: vec!["0".into(), "6".into()],
            expected: None,
        };
        r.claims.push(claim("g", Status::Fail, Some(w)));
        let text = r.render(Format::Text);
        assert!(text.contains("coordinates: [0, 6]"));
        assert!(r.render(Format::Json).contains("\"coordinates\""));
        assert!(r.check_invariants().is_ok());
    }

    #[test]
    fn invariants() {
        let mut r = VerificationReport::new(summary());
        r.claims.push(claim("a", Status::Fail, None));
        assert!(r.check_invariants().is_err());
        r.claims[0].status = Status::Pass;
        r.claims.push(claim("a", Status::Pass, None));
        assert!(r.check_invariants().is_err());
    }

    #[test]
    fn rendering_is_deterministic_and_parseable() {
        let mut r = VerificationReport::new(summary());
        r.claims.push(claim("a", Status::Pass, None));
        assert_eq!(r.render(Format::Json), r.clone().render(Format::Json));
        let back: VerificationReport = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(back, r);
        assert!(!r.render(Format::Json).contains("timing"));
    }
}
