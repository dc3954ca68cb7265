//! Built-in algebras.
//!
//! Basis vectors `e1..en` are stored at indices `0..n-1`. Entries are
//! addressed by a spec string: a bare key (`solvable3_q`) or a key with
//! arguments (`tp_sl2_gf3(1,0)`, `sl2(Q)`, `zero(3,GF5)`).

mod claims;

pub use claims::{evaluate, expected, verify, Claim, ClaimOutcome, ClaimValue, Provenance};

use crate::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: &'static str,
    /// Accepted arguments, empty when the key takes none.
    pub params: &'static str,
    /// Instance returned for the bare key.
    pub default_spec: &'static str,
    pub description: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        key: "sl2",
        params: "field",
        default_spec: "sl2(GF3)",
        description: "sl2 with {e1,e2}=e3, {e3,e1}=2e1, {e3,e2}=-2e2 and zero product",
    },
    CatalogEntry {
        key: "tp_sl2_gf3",
        params: "alpha,beta in 0..3",
        default_spec: "tp_sl2_gf3(1,0)",
        description: "sl2 over GF(3) with e1∘e1 = alpha e2, e2∘e2 = beta e1",
    },
    CatalogEntry {
        key: "solvable3_q",
        params: "",
        default_spec: "solvable3_q",
        description: "{e1,e3}=e1, {e2,e3}=e2; e1∘e3=e1, e2∘e3=e2, e3∘e3=e3",
    },
    CatalogEntry {
        key: "nonlie_remark_q",
        params: "",
        default_spec: "nonlie_remark_q",
        description: "e3∘e3=e1, {e1,e3}=e1+e2; its Lie double is not a Lie superalgebra",
    },
    CatalogEntry {
        key: "grassmann1_q",
        params: "",
        default_spec: "grassmann1_q",
        description: "Grassmann algebra on one odd generator, zero bracket",
    },
    CatalogEntry {
        key: "radical_demo_q",
        params: "",
        default_spec: "radical_demo_q",
        description: "sl2(Q) with zero product, plus solvable3_q",
    },
    CatalogEntry {
        key: "witt_trunc3_q",
        params: "",
        default_spec: "witt_trunc3_q",
        description: "Q[t]/(t^3) with {t^a,t^b}=(a-b)t^(a+b)",
    },
    CatalogEntry {
        key: "weighted_grassmann2_q",
        params: "",
        default_spec: "weighted_grassmann2_q",
        description: "Grassmann algebra on two odd generators of weights 1, 2 with {m,m'}=(w-w')mm'",
    },
    CatalogEntry {
        key: "poisson2_q",
        params: "",
        default_spec: "poisson2_q",
        description: "Q[t]/(t^2) with zero bracket",
    },
    CatalogEntry {
        key: "abelian_unital_q",
        params: "",
        default_spec: "abelian_unital_q",
        description: "one-dimensional, e1∘e1=e1, zero bracket",
    },
    CatalogEntry {
        key: "zero",
        params: "n,field",
        default_spec: "zero(2,Q)",
        description: "both products zero",
    },
];

pub fn list() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(key: &str) -> Result<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.key == key).ok_or_else(|| Error::UnknownKey(key.to_string()))
}

/// Splits `key(a,b)` into the key and its trimmed arguments.
pub fn parse_spec(spec: &str) -> Result<(String, Vec<String>)> {
    let spec = spec.trim();
    match spec.split_once('(') {
        None => Ok((spec.to_string(), Vec::new())),
        Some((key, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {spec:?}")))?;
            let args = inner.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            Ok((key.trim().to_string(), args))
        }
    }
}

/// The instance a spec string describes, with its canonical spec as name.
pub fn get(spec: &str) -> Result<SuperAlgebra> {
    let (key, args) = parse_spec(spec)?;
    let entry = entry(&key)?;
    if args.is_empty() && entry.default_spec != entry.key {
        return get(entry.default_spec);
    }
    let no_args = || -> Result<()> {
        if args.is_empty() {
            Ok(())
        } else {
            Err(Error::Input(format!("{key} takes no arguments")))
        }
    };
    match entry.key {
        "sl2" => {
            let [f] = args.as_slice() else {
                return Err(Error::Input("sl2 takes one field argument".into()));
            };
            Ok(sl2(f.parse()?))
        }
        "tp_sl2_gf3" => {
            let [a, b] = args.as_slice() else {
                return Err(Error::Input("tp_sl2_gf3 takes two arguments".into()));
            };
            let parse = |s: &String| s.parse::<i64>().map_err(|_| Error::Parse(format!("bad parameter {s:?}")));
            tp_sl2_gf3(parse(a)?, parse(b)?)
        }
        "zero" => {
            let [n, f] = args.as_slice() else {
                return Err(Error::Input("zero takes a dimension and a field".into()));
            };
            let n = n.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension {n:?}")))?;
            Ok(zero(n, f.parse()?))
        }
        "solvable3_q" => no_args().map(|_| solvable3_q()),
        "nonlie_remark_q" => no_args().map(|_| nonlie_remark_q()),
        "grassmann1_q" => no_args().map(|_| grassmann1_q()),
        "radical_demo_q" => no_args().map(|_| radical_demo_q()),
        "witt_trunc3_q" => no_args().map(|_| witt_trunc3_q()),
        "weighted_grassmann2_q" => no_args().map(|_| weighted_grassmann2_q()),
        "poisson2_q" => no_args().map(|_| poisson2_q()),
        "abelian_unital_q" => no_args().map(|_| abelian_unital_q()),
        other => Err(Error::UnknownKey(other.to_string())),
    }
}

fn short_field(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => "Q".into(),
        FieldSpec::Prime(p) => format!("GF{p}"),
    }
}

fn sl2_builder(name: String, f: FieldSpec) -> crate::algebra::AlgebraBuilder {
    SuperAlgebra::builder(name, f, vec![0; 3])
        .bracket_skew(0, 1, 2, 1)
        .bracket_skew(2, 0, 0, 2)
        .bracket_skew(2, 1, 1, -2)
}

pub fn sl2(field: FieldSpec) -> SuperAlgebra {
    sl2_builder(format!("sl2({})", short_field(field)), field).build().expect("valid table")
}

/// sl2 over GF(3) with `e1∘e1 = αe2`, `e2∘e2 = βe1`. The parameters are
/// residues and must lie in `0..3`.
pub fn tp_sl2_gf3(alpha: i64, beta: i64) -> Result<SuperAlgebra> {
    if !(0..3).contains(&alpha) || !(0..3).contains(&beta) {
        return Err(Error::Input(format!("parameters ({alpha},{beta}) must lie in 0..3")));
    }
    let f = FieldSpec::Prime(3);
    sl2_builder(format!("tp_sl2_gf3({alpha},{beta})"), f)
        .circ_sym(0, 0, 1, alpha)
        .circ_sym(1, 1, 0, beta)
        .build()
}

pub fn solvable3_q() -> SuperAlgebra {
    SuperAlgebra::builder("solvable3_q", FieldSpec::Rationals, vec![0; 3])
        .bracket_skew(0, 2, 0, 1)
        .bracket_skew(1, 2, 1, 1)
        .circ_sym(0, 2, 0, 1)
        .circ_sym(1, 2, 1, 1)
        .circ_sym(2, 2, 2, 1)
        .build()
        .expect("valid table")
}

pub fn nonlie_remark_q() -> SuperAlgebra {
    SuperAlgebra::builder("nonlie_remark_q", FieldSpec::Rationals, vec![0; 3])
        .circ_sym(2, 2, 0, 1)
        .bracket_skew(0, 2, 0, 1)
        .bracket_skew(0, 2, 1, 1)
        .build()
        .expect("valid table")
}

/// Basis `1, ξ` with `ξ` odd.
pub fn grassmann1_q() -> SuperAlgebra {
    SuperAlgebra::builder("grassmann1_q", FieldSpec::Rationals, vec![0, 1])
        .circ_sym(0, 0, 0, 1)
        .circ_sym(0, 1, 1, 1)
        .build()
        .expect("valid table")
}

/// Indices `0..3` carry sl2(Q) with zero product, `3..6` carry solvable3_q.
pub fn radical_demo_q() -> SuperAlgebra {
    sl2(FieldSpec::Rationals)
        .direct_sum(&solvable3_q())
        .expect("same field")
        .with_name("radical_demo_q")
}

/// Basis `1, t, t²`.
pub fn witt_trunc3_q() -> SuperAlgebra {
    SuperAlgebra::builder("witt_trunc3_q", FieldSpec::Rationals, vec![0; 3])
        .circ_sym(0, 0, 0, 1)
        .circ_sym(0, 1, 1, 1)
        .circ_sym(0, 2, 2, 1)
        .circ_sym(1, 1, 2, 1)
        .bracket_skew(0, 1, 1, -1)
        .bracket_skew(0, 2, 2, -2)
        .build()
        .expect("valid table")
}

/// Basis `1, ξ1, ξ2, ξ1ξ2` with odd generators of weights 1 and 2.
pub fn weighted_grassmann2_q() -> SuperAlgebra {
    SuperAlgebra::builder("weighted_grassmann2_q", FieldSpec::Rationals, vec![0, 1, 1, 0])
        .circ_sym(0, 0, 0, 1)
        .circ_sym(0, 1, 1, 1)
        .circ_sym(0, 2, 2, 1)
        .circ_sym(0, 3, 3, 1)
        .circ_sym(1, 2, 3, 1)
        .bracket_skew(0, 1, 1, -1)
        .bracket_skew(0, 2, 2, -2)
        .bracket_skew(0, 3, 3, -3)
        .bracket_skew(1, 2, 3, -1)
        .build()
        .expect("valid table")
}

/// Basis `1, t`.
pub fn poisson2_q() -> SuperAlgebra {
    SuperAlgebra::builder("poisson2_q", FieldSpec::Rationals, vec![0, 0])
        .circ_sym(0, 0, 0, 1)
        .circ_sym(0, 1, 1, 1)
        .build()
        .expect("valid table")
}

pub fn abelian_unital_q() -> SuperAlgebra {
    SuperAlgebra::builder("abelian_unital_q", FieldSpec::Rationals, vec![0])
        .circ_sym(0, 0, 0, 1)
        .build()
        .expect("valid table")
}

pub fn zero(n: usize, field: FieldSpec) -> SuperAlgebra {
    SuperAlgebra::builder(format!("zero({n},{})", short_field(field)), field, vec![0; n])
        .build()
        .expect("empty tables")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Product;

    fn entries(a: &SuperAlgebra, which: Product) -> Vec<(usize, usize, usize, i64)> {
        a.table(which)
            .map(|(i, j, k, c)| {
                let r = c.as_rational().expect("rational table").to_integer();
                (i, j, k, r.try_into().unwrap())
            })
            .collect()
    }

    #[test]
    fn every_entry_builds_and_validates() {
        for e in list() {
            let a = get(e.key).unwrap();
            assert!(a.validate().is_ok(), "{}", e.key);
            assert_eq!(a.name(), e.default_spec);
            assert_eq!(get(e.default_spec).unwrap(), a);
        }
    }

    #[test]
    fn solvable3_tables() {
        let a = solvable3_q();
        assert_eq!(entries(&a, Product::Bracket), vec![(0, 2, 0, 1), (1, 2, 1, 1), (2, 0, 0, -1), (2, 1, 1, -1)]);
        assert_eq!(entries(&a, Product::Circ).len(), 5);
    }

    #[test]
    fn nonlie_tables() {
        let a = nonlie_remark_q();
        assert_eq!(entries(&a, Product::Circ), vec![(2, 2, 0, 1)]);
        assert_eq!(
            entries(&a, Product::Bracket),
            vec![(0, 2, 0, 1), (0, 2, 1, 1), (2, 0, 0, -1), (2, 0, 1, -1)]
        );
    }

    #[test]
    fn parameters_are_checked() {
        assert!(matches!(tp_sl2_gf3(3, 0), Err(Error::Input(_))));
        assert!(matches!(get("tp_sl2_gf3(1)"), Err(Error::Input(_))));
        assert!(matches!(get("nope"), Err(Error::UnknownKey(_))));
        assert!(matches!(get("sl2(GF2)"), Err(Error::Field(_))));
        assert!(get("solvable3_q(1)").is_err());
        assert_eq!(get("sl2(GF(3))").unwrap(), get("sl2").unwrap());
        assert_eq!(get("zero(3,GF5)").unwrap().dim(), 3);
    }

    #[test]
    fn radical_demo_is_a_direct_sum() {
        let a = radical_demo_q();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.coefficient(Product::Bracket, 3, 5, 3), FieldSpec::Rationals.one());
        assert_eq!(a.coefficient(Product::Bracket, 0, 1, 2), FieldSpec::Rationals.one());
        assert!(!a.has_product(Product::Circ) || a.table(Product::Circ).all(|(i, _, _, _)| i >= 3));
    }
}
