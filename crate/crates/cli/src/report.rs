use serde_json::{json, Value};

use tpalg_core::catalog::{CatalogEntry, Claim};
use tpalg_core::structure::{self, SimplicityOptions, SimplicityReport, Strategy};
use tpalg_core::witt::WindowReport;
use tpalg_core::{Matrix, Product, SuperAlgebra, Subspace};

pub fn algebra_header(a: &SuperAlgebra) -> Value {
    json!({
        "name": a.name(),
        "field": a.field().to_string(),
        "dim": a.dim(),
        "parity": a.parity(),
    })
}

pub fn matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

pub fn subspace(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": matrix(s.basis()) })
}

fn series(list: &[Subspace]) -> Value {
    Value::Array(list.iter().map(subspace).collect())
}

pub fn which_name(which: Option<Product>) -> &'static str {
    which.map_or("tp", Product::name)
}

pub fn simplicity(r: &SimplicityReport) -> Value {
    let mut v = json!({
        "verdict": r.verdict.as_str(),
        "strategy": r.strategy.name(),
        "work": r.work,
    });
    if let Some(w) = r.verdict.witness() {
        v["witness"] = subspace(w);
    }
    v
}

pub fn structure(a: &SuperAlgebra, strategy: Strategy, opts: &SimplicityOptions) -> Value {
    let s = structure::series(a);
    let mut simple = serde_json::Map::new();
    for which in [None, Some(Product::Circ), Some(Product::Bracket)] {
        let v = match structure::is_simple(a, which, strategy, opts) {
            Ok(r) => simplicity(&r),
            Err(e) => json!({ "verdict": "INDETERMINATE", "error": e.to_string() }),
        };
        simple.insert(which_name(which).to_string(), v);
    }
    let labels = a.basis_labels();
    json!({
        "algebra": algebra_header(a),
        "center_circ": subspace(&s.center_circ),
        "center_bracket": subspace(&s.center_bracket),
        "annihilator": subspace(&s.annihilator),
        "derived_series": series(&s.derived_series),
        "lower_central_series": series(&s.lower_central_series),
        "circ_powers": series(&s.circ_powers),
        "radical": s.radical.as_ref().map(subspace),
        "radical_series": s.radical_series.as_deref().map(series),
        "unit": s.unit.as_ref().map(|u| u.render(&labels)),
        "perfect_circ": s.perfect_circ,
        "perfect_bracket": s.perfect_bracket,
        "solvable": s.solvable(),
        "nilpotent_circ": s.nilpotent_circ(),
        "nilpotent_bracket": s.nilpotent_bracket(),
        "simplicity": simple,
    })
}

pub fn entry(e: &CatalogEntry) -> Value {
    json!({
        "key": e.key,
        "params": e.params,
        "default": e.default_spec,
        "description": e.description,
    })
}

pub fn claim(c: &Claim) -> Value {
    json!({
        "claim": c.name,
        "expected": c.value.to_json(),
        "provenance": c.provenance.as_str(),
        "validated_by": c.validated_by(),
    })
}

pub fn window(r: &WindowReport) -> Value {
    let mut v = json!({
        "identity": r.identity.name(),
        "verdict": if r.passed() { "PASS" } else { "FAIL" },
        "window": [r.lo, r.hi],
        "triples_checked": r.triples_checked,
    });
    if let Some(t) = r.counterexample {
        v["counterexample"] = json!(t);
    }
    if let Some(d) = &r.defect {
        v["defect"] = json!(d.to_string());
    }
    v
}
