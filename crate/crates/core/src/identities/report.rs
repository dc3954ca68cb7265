use serde_json::{json, Value};

use super::IdentityId;
use crate::algebra::{Element, SuperAlgebra};
use crate::exactmath::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

/// Left side minus right side of an identity at one tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    Element(Element),
    Operator(Matrix),
}

impl Defect {
    pub fn is_zero(&self) -> bool {
        match self {
            Defect::Element(e) => e.is_zero(),
            Defect::Operator(m) => m.is_zero(),
        }
    }

    pub fn as_element(&self) -> Option<&Element> {
        match self {
            Defect::Element(e) => Some(e),
            Defect::Operator(_) => None,
        }
    }

    pub fn as_operator(&self) -> Option<&Matrix> {
        match self {
            Defect::Operator(m) => Some(m),
            Defect::Element(_) => None,
        }
    }

    pub fn to_json(&self, labels: &[String]) -> Value {
        match self {
            Defect::Element(e) => json!({
                "kind": "element",
                "coords": e.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "text": e.render(labels),
            }),
            Defect::Operator(m) => json!({
                "kind": "operator",
                "rows": matrix_json(m),
            }),
        }
    }
}

pub(crate) fn matrix_json(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|c| c.to_string()).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub counterexample: Option<Vec<usize>>,
    pub defect: Option<Defect>,
    pub warnings: Vec<String>,
}

impl IdentityReport {
    pub(crate) fn pass(identity: IdentityId) -> Self {
        IdentityReport { identity, counterexample: None, defect: None, warnings: Vec::new() }
    }

    pub fn verdict(&self) -> Verdict {
        if self.defect.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn to_json(&self, a: &SuperAlgebra) -> Value {
        let labels = a.basis_labels();
        let mut v = json!({
            "identity": self.identity.name(),
            "verdict": self.verdict().as_str(),
        });
        if let Some(t) = &self.counterexample {
            v["counterexample"] = json!(t);
            v["counterexample_labels"] = json!(t.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>());
        }
        if let Some(d) = &self.defect {
            v["defect"] = d.to_json(&labels);
        }
        if !self.warnings.is_empty() {
            v["warnings"] = json!(self.warnings);
        }
        v
    }
}
