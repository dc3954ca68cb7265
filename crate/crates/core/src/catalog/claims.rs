//! Machine-checkable expectations for catalog instances.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{Product, SuperAlgebra};
use crate::error::{Error, Result};
use crate::halfderiv;
use crate::identities::{self, IdentityId};
use crate::kantor;
use crate::structure::{self, SimplicityOptions, Strategy};

use super::{get, parse_spec};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Stated for this instance in the published source.
    Published,
    /// Immediate from the definitions.
    Trivial,
    /// Computed by hand from the structure constants.
    Derived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Published => "published",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimValue {
    Bool(bool),
    Count(usize),
    Dims(Vec<usize>),
    Text(String),
}

impl ClaimValue {
    pub fn to_json(&self) -> Value {
        match self {
            ClaimValue::Bool(b) => json!(b),
            ClaimValue::Count(n) => json!(n),
            ClaimValue::Dims(d) => json!(d),
            ClaimValue::Text(t) => json!(t),
        }
    }
}

impl fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub name: &'static str,
    pub value: ClaimValue,
    pub provenance: Provenance,
}

impl Claim {
    /// The library operation that computes the claimed value.
    pub fn validated_by(&self) -> &'static str {
        validator(self.name).unwrap_or("unknown")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub actual: ClaimValue,
}

impl ClaimOutcome {
    pub fn holds(&self) -> bool {
        self.claim.value == self.actual
    }

    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim.name,
            "expected": self.claim.value.to_json(),
            "actual": self.actual.to_json(),
            "provenance": self.claim.provenance.as_str(),
            "validated_by": self.claim.validated_by(),
            "holds": self.holds(),
        })
    }
}

fn validator(name: &str) -> Option<&'static str> {
    Some(match name {
        "is_tp" => "identities::is_tp",
        "derived_identities" => "identities::check_many",
        "tp_simple" | "bracket_simple" => "structure::is_simple",
        "halfder_bracket_dim" => "halfderiv::half_derivations",
        "derived_series_dims" => "structure::derived_series",
        "lower_central_dims" => "structure::lower_central_series",
        "circ_power_dims" => "structure::circ_powers",
        "unit" => "structure::unit",
        "nilpotent_circ" => "structure::circ_powers",
        "nilpotent_bracket" => "structure::lower_central_series",
        "radical_series_dims" => "structure::radical",
        "kantor_jordan" => "kantor::kantor_double",
        "kantor_simple" => "kantor::kantor_double",
        "kantor_obstruction_is_ideal" => "kantor::double_simplicity_obstruction",
        "lie_double_jacobi" => "kantor::lie_double",
        "lie_double_jacobi_defect_at_e3s" => "kantor::lie_double",
        _ => return None,
    })
}

fn dims(series: &[crate::exactmath::Subspace]) -> ClaimValue {
    ClaimValue::Dims(series.iter().map(|s| s.dim()).collect())
}

fn simple(a: &SuperAlgebra, which: Option<Product>) -> Result<ClaimValue> {
    let report = structure::is_simple(a, which, Strategy::Auto, &SimplicityOptions::default())?;
    match report.verdict {
        structure::SimplicityVerdict::Indeterminate => Err(Error::Budget("simplicity test was inconclusive".into())),
        v => Ok(ClaimValue::Bool(v.is_simple())),
    }
}

/// Computes the value of a named claim on `a`.
pub fn evaluate(a: &SuperAlgebra, name: &str) -> Result<ClaimValue> {
    Ok(match name {
        "is_tp" => ClaimValue::Bool(identities::is_tp(a)),
        "derived_identities" => {
            let ids: Vec<IdentityId> = IdentityId::DERIVED.iter().chain(&IdentityId::OPERATOR_RELATIONS).copied().collect();
            ClaimValue::Bool(identities::check_many(a, &ids).iter().all(|r| r.passed()))
        }
        "tp_simple" => simple(a, None)?,
        "bracket_simple" => simple(a, Some(Product::Bracket))?,
        "halfder_bracket_dim" => ClaimValue::Count(halfderiv::half_derivations(a, Product::Bracket, 0)?.dim()),
        "derived_series_dims" => dims(&structure::derived_series(a)),
        "lower_central_dims" => dims(&structure::lower_central_series(a, Product::Bracket)),
        "circ_power_dims" => dims(&structure::circ_powers(a)),
        "unit" => ClaimValue::Text(match structure::unit(a) {
            Some(u) => u.render(&a.basis_labels()),
            None => "none".into(),
        }),
        "nilpotent_circ" => ClaimValue::Bool(structure::circ_powers(a).last().is_some_and(|s| s.is_zero())),
        "nilpotent_bracket" => {
            ClaimValue::Bool(structure::lower_central_series(a, Product::Bracket).last().is_some_and(|s| s.is_zero()))
        }
        "radical_series_dims" => dims(&structure::derived_series_of(a, &structure::radical(a)?)),
        "kantor_jordan" => ClaimValue::Bool(identities::check(&kantor::kantor_double(a), IdentityId::JordanSuper).passed()),
        "kantor_simple" => simple(&kantor::kantor_double(a), Some(Product::Circ))?,
        "kantor_obstruction_is_ideal" => {
            ClaimValue::Bool(kantor::double_simplicity_obstruction(a).is_some_and(|o| o.is_ideal))
        }
        "lie_double_jacobi" => {
            ClaimValue::Bool(identities::check(&kantor::lie_double(a)?, IdentityId::JacobiSuper).passed())
        }
        "lie_double_jacobi_defect_at_e3s" => {
            let d = kantor::lie_double(a)?;
            let s = d.layout().expect("doubles carry a layout").starred[2];
            let defect = identities::defect(&d, IdentityId::JacobiSuper, &[s, s, s])?;
            let e = defect.as_element().expect("Jacobi is element-valued");
            ClaimValue::Text(e.render(&d.basis_labels()))
        }
        other => return Err(Error::UnknownKey(format!("claim {other}"))),
    })
}

fn claim(name: &'static str, value: ClaimValue, provenance: Provenance) -> Claim {
    Claim { name, value, provenance }
}

use ClaimValue::{Bool, Count, Dims, Text};
use Provenance::{Derived, Published, Trivial};

/// The expected claims for a catalog spec string.
pub fn expected(spec: &str) -> Result<Vec<Claim>> {
    let a = get(spec)?;
    let (key, _) = parse_spec(spec)?;
    let mut out = Vec::new();
    match key.as_str() {
        "sl2" => {
            let char3 = a.field() == crate::exactmath::FieldSpec::Prime(3);
            out.push(claim("is_tp", Bool(true), Trivial));
            let halfder = if char3 { claim("halfder_bracket_dim", Count(5), Derived) } else { claim("halfder_bracket_dim", Count(1), Published) };
            out.push(halfder);
            out.push(claim("derived_series_dims", Dims(vec![3]), Trivial));
            if a.field().is_finite() {
                out.push(claim("bracket_simple", Bool(true), Trivial));
            }
        }
        "tp_sl2_gf3" => {
            let (_, args) = parse_spec(a.name())?;
            let alpha: i64 = args[0].parse().expect("canonical name");
            let beta: i64 = args[1].parse().expect("canonical name");
            let tp = alpha * beta == 0;
            out.push(claim("is_tp", Bool(tp), Published));
            out.push(claim("halfder_bracket_dim", Count(5), Derived));
            out.push(claim("bracket_simple", Bool(true), Published));
            if tp {
                out.push(claim("tp_simple", Bool(true), Published));
                out.push(claim("derived_identities", Bool(true), Derived));
                out.push(claim("kantor_jordan", Bool(true), Published));
                out.push(claim("kantor_simple", Bool(false), Published));
                out.push(claim("kantor_obstruction_is_ideal", Bool(true), Published));
                let powers = match (alpha, beta) {
                    (0, 0) => vec![3, 0],
                    _ => vec![3, 1, 0],
                };
                out.push(claim("circ_power_dims", Dims(powers), Derived));
                out.push(claim("nilpotent_circ", Bool(true), Derived));
            }
        }
        "solvable3_q" => {
            out.push(claim("is_tp", Bool(true), Published));
            out.push(claim("derived_identities", Bool(true), Derived));
            out.push(claim("derived_series_dims", Dims(vec![3, 2, 0]), Derived));
            out.push(claim("lower_central_dims", Dims(vec![3, 2]), Derived));
            out.push(claim("nilpotent_bracket", Bool(false), Published));
            out.push(claim("unit", Text("e3".into()), Published));
            out.push(claim("nilpotent_circ", Bool(false), Published));
            out.push(claim("radical_series_dims", Dims(vec![3, 2, 0]), Derived));
            out.push(claim("kantor_jordan", Bool(true), Published));
        }
        "nonlie_remark_q" => {
            out.push(claim("is_tp", Bool(true), Published));
            out.push(claim("lie_double_jacobi", Bool(false), Published));
            out.push(claim("lie_double_jacobi_defect_at_e3s", Text("-3*e1s - 3*e2s".into()), Published));
            out.push(claim("kantor_jordan", Bool(true), Published));
        }
        "grassmann1_q" => {
            out.push(claim("is_tp", Bool(true), Trivial));
            out.push(claim("derived_identities", Bool(true), Trivial));
            out.push(claim("unit", Text("e1".into()), Trivial));
            out.push(claim("kantor_jordan", Bool(true), Published));
        }
        "radical_demo_q" => {
            out.push(claim("is_tp", Bool(true), Derived));
            out.push(claim("derived_identities", Bool(true), Derived));
            out.push(claim("derived_series_dims", Dims(vec![6, 5, 3]), Derived));
            out.push(claim("radical_series_dims", Dims(vec![3, 2, 0]), Derived));
            out.push(claim("kantor_jordan", Bool(true), Published));
        }
        "witt_trunc3_q" => {
            out.push(claim("is_tp", Bool(true), Derived));
            out.push(claim("derived_identities", Bool(true), Derived));
            out.push(claim("unit", Text("e1".into()), Trivial));
            out.push(claim("kantor_jordan", Bool(true), Published));
        }
        "weighted_grassmann2_q" => {
            out.push(claim("is_tp", Bool(true), Derived));
            out.push(claim("derived_identities", Bool(true), Derived));
            out.push(claim("unit", Text("e1".into()), Trivial));
            out.push(claim("kantor_jordan", Bool(true), Published));
        }
        "poisson2_q" => {
            out.push(claim("is_tp", Bool(true), Trivial));
            out.push(claim("lie_double_jacobi", Bool(true), Derived));
            out.push(claim("kantor_jordan", Bool(true), Published));
        }
        "abelian_unital_q" => {
            out.push(claim("is_tp", Bool(true), Trivial));
            out.push(claim("unit", Text("e1".into()), Trivial));
        }
        "zero" => {
            out.push(claim("is_tp", Bool(true), Trivial));
            out.push(claim("unit", Text(if a.dim() == 0 { "0" } else { "none" }.into()), Trivial));
            if a.field().is_finite() {
                out.push(claim("tp_simple", Bool(false), Trivial));
            }
        }
        other => return Err(Error::UnknownKey(other.to_string())),
    }
    Ok(out)
}

/// Evaluates every expected claim of `spec`.
pub fn verify(spec: &str) -> Result<Vec<ClaimOutcome>> {
    let a = get(spec)?;
    expected(spec)?
        .into_iter()
        .map(|claim| Ok(ClaimOutcome { actual: evaluate(&a, claim.name)?, claim }))
        .collect()
}
