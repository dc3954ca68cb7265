//! `tpalg`: JSON reports on two-product (super)algebras.
//!
//! Exit codes: 0 when every requested check passes, 1 when an identity or
//! claim fails (the report is still printed), 2 on input or usage errors.

mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tpalg_core::catalog;
use tpalg_core::halfderiv;
use tpalg_core::identities;
use tpalg_core::kantor;
use tpalg_core::structure::{self, SimplicityOptions, Strategy};
use tpalg_core::witt::{self, ZAlgebraSpec, ZElement};
use tpalg_core::{Error, IdentityId, Product, SuperAlgebra};

#[derive(Parser)]
#[command(name = "tpalg", version, about = "Exact checks for transposed Poisson and Jordan superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities on every basis tuple.
    Check {
        /// Algebra file, or a catalog spec such as `tp_sl2_gf3(1,0)`.
        input: String,
        /// Comma-separated identity names, or one of `all`, `tp`, `derived`, `operator`.
        #[arg(long, default_value = "all")]
        identities: String,
        /// Also report the defect at this basis tuple, given as labels or
        /// indices, e.g. `e3s,e3s,e3s`.
        #[arg(long)]
        at: Option<String>,
    },
    /// Basis of the space of ½-(super)derivations.
    Halfder {
        input: String,
        #[arg(long, value_enum, default_value_t = ProductArg::Bracket)]
        product: ProductArg,
        #[arg(long, default_value_t = 0)]
        parity: u8,
    },
    /// Build the Kantor or Lie double.
    Double {
        input: String,
        #[arg(long, value_enum, default_value_t = DoubleArg::Kantor)]
        kind: DoubleArg,
        /// Write the double here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Simplicity verdict with a witness ideal when one is found.
    Simple {
        input: String,
        #[arg(long, value_enum, default_value_t = SimpleProductArg::Both)]
        product: SimpleProductArg,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Centers, series, radical, unit and simplicity.
    Structure {
        input: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Window checks on a mutation of the Witt algebra.
    Witt {
        /// Mutation element as `k:coeff` pairs, e.g. `0:1,1:2`.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-3..3")]
        window: String,
        /// Comma-separated subset of `assoc`, `jacobi`, `leibniz`, or `tp`.
        #[arg(long, default_value = "tp")]
        identities: String,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { spec: String },
    Export {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the expected claims of the given specs, or of every default.
    Verify { specs: Vec<String> },
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of nonzero vectors the exhaustive search enumerates.
    #[arg(long, default_value_t = SimplicityOptions::default().bound)]
    bound: u64,
}

impl SearchArgs {
    fn options(&self) -> SimplicityOptions {
        SimplicityOptions { bound: self.bound, seed: self.seed, ..SimplicityOptions::default() }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductArg {
    Circ,
    Bracket,
}

impl From<ProductArg> for Product {
    fn from(p: ProductArg) -> Product {
        match p {
            ProductArg::Circ => Product::Circ,
            ProductArg::Bracket => Product::Bracket,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SimpleProductArg {
    Both,
    Circ,
    Bracket,
}

#[derive(Clone, Copy, ValueEnum)]
enum DoubleArg {
    Kantor,
    Lie,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Meataxe,
    Auto,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::Meataxe => Strategy::Meataxe,
            StrategyArg::Auto => Strategy::Auto,
        }
    }
}

/// A finished report and whether every requested check passed.
struct Outcome {
    report: Value,
    ok: bool,
}

impl Outcome {
    fn info(report: Value) -> Self {
        Outcome { report, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.report).expect("json values serialize");
            if let Err(e) = writeln!(std::io::stdout(), "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("tpalg: {e}");
                    return ExitCode::from(2);
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("tpalg: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Check { input, identities, at } => check(&load(&input)?, &parse_identities(&identities)?, at.as_deref()),
        Command::Halfder { input, product, parity } => {
            let a = load(&input)?;
            let space = halfderiv::half_derivations(&a, product.into(), parity)?;
            let basis = space.basis();
            Ok(Outcome::info(json!({
                "algebra": report::algebra_header(&a),
                "product": Product::from(product).name(),
                "parity": parity,
                "dim": basis.len(),
                "basis": basis.iter().map(report::matrix).collect::<Vec<_>>(),
            })))
        }
        Command::Double { input, kind, output } => {
            let a = load(&input)?;
            let d = match kind {
                DoubleArg::Kantor => kantor::kantor_double(&a),
                DoubleArg::Lie => kantor::lie_double(&a)?,
            };
            emit_algebra(&d, output.as_deref())
        }
        Command::Simple { input, product, search } => {
            let a = load(&input)?;
            let which = match product {
                SimpleProductArg::Both => None,
                SimpleProductArg::Circ => Some(Product::Circ),
                SimpleProductArg::Bracket => Some(Product::Bracket),
            };
            let r = structure::is_simple(&a, which, search.strategy.into(), &search.options())?;
            let mut v = report::simplicity(&r);
            v["algebra"] = report::algebra_header(&a);
            v["product"] = json!(report::which_name(which));
            Ok(Outcome::info(v))
        }
        Command::Structure { input, search } => {
            let a = load(&input)?;
            Ok(Outcome::info(report::structure(&a, search.strategy.into(), &search.options())))
        }
        Command::Catalog { action } => run_catalog(action),
        Command::Witt { q, window, identities } => run_witt(&q, &window, &identities),
    }
}

fn run_catalog(action: CatalogAction) -> Result<Outcome, Error> {
    match action {
        CatalogAction::List => Ok(Outcome::info(Value::Array(catalog::list().iter().map(report::entry).collect()))),
        CatalogAction::Show { spec } => {
            let a = catalog::get(&spec)?;
            let (key, _) = catalog::parse_spec(&spec)?;
            let claims = catalog::expected(a.name())?;
            Ok(Outcome::info(json!({
                "entry": report::entry(catalog::entry(&key)?),
                "algebra": serde_json::from_str::<Value>(&a.to_json())?,
                "claims": claims.iter().map(report::claim).collect::<Vec<_>>(),
            })))
        }
        CatalogAction::Export { spec, output } => emit_algebra(&catalog::get(&spec)?, output.as_deref()),
        CatalogAction::Verify { specs } => {
            let specs: Vec<String> = if specs.is_empty() {
                catalog::list().iter().map(|e| e.default_spec.to_string()).collect()
            } else {
                specs
            };
            let mut ok = true;
            let mut results = Vec::new();
            for spec in &specs {
                let outcomes = catalog::verify(spec)?;
                let holds = outcomes.iter().all(|o| o.holds());
                ok &= holds;
                results.push(json!({
                    "spec": catalog::get(spec)?.name(),
                    "holds": holds,
                    "claims": outcomes.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
                }));
            }
            Ok(Outcome { report: json!({ "all_hold": ok, "results": results }), ok })
        }
    }
}

fn run_witt(q: &str, window: &str, ids: &str) -> Result<Outcome, Error> {
    let q = ZElement::parse(q)?;
    let (lo, hi) = parse_window(window)?;
    let ids: Vec<IdentityId> = if ids.trim().eq_ignore_ascii_case("tp") {
        IdentityId::TP_AXIOMS.to_vec()
    } else {
        parse_identities(ids)?
    };
    let spec = ZAlgebraSpec::witt(q.clone());
    let mut reports = Vec::new();
    let mut ok = true;
    for id in ids {
        let r = witt::window_check(&spec, id, lo, hi)?;
        ok &= r.passed();
        reports.push(report::window(&r));
    }
    let inverse = witt::laurent_invertible(&q)?;
    let unit = witt::unit_in_window(&spec, lo, hi)?;
    let agree = inverse == unit;
    ok &= agree;
    Ok(Outcome {
        report: json!({
            "q": q.to_string(),
            "window": [lo, hi],
            "evidence_only": true,
            "reports": reports,
            "laurent_inverse": inverse.map(|z| z.to_string()),
            "unit_in_window": unit.map(|z| z.to_string()),
            "invertible_iff_unital": agree,
        }),
        ok,
    })
}

fn check(a: &SuperAlgebra, ids: &[IdentityId], at: Option<&str>) -> Result<Outcome, Error> {
    let reports = identities::check_many(a, ids);
    let ok = reports.iter().all(|r| r.passed());
    let mut v = json!({
        "algebra": report::algebra_header(a),
        "all_pass": ok,
        "reports": reports.iter().map(|r| r.to_json(a)).collect::<Vec<_>>(),
    });
    if let Some(at) = at {
        let tuple = parse_tuple(a, at)?;
        let labels = a.basis_labels();
        let mut defects = Vec::new();
        for &id in ids.iter().filter(|id| id.arity() == tuple.len()) {
            let d = identities::defect(a, id, &tuple)?;
            defects.push(json!({ "identity": id.name(), "is_zero": d.is_zero(), "defect": d.to_json(&labels) }));
        }
        if defects.is_empty() {
            return Err(Error::Input(format!("no requested identity takes {} arguments", tuple.len())));
        }
        v["at"] = json!({ "tuple": tuple, "defects": defects });
    }
    Ok(Outcome { report: v, ok })
}

fn parse_tuple(a: &SuperAlgebra, text: &str) -> Result<Vec<usize>, Error> {
    let labels = a.basis_labels();
    text.split(',')
        .map(|s| {
            let s = s.trim();
            labels
                .iter()
                .position(|l| l == s)
                .or_else(|| s.parse().ok().filter(|&i: &usize| i < a.dim()))
                .ok_or_else(|| Error::Input(format!("unknown basis vector {s:?}")))
        })
        .collect()
}

fn emit_algebra(a: &SuperAlgebra, output: Option<&Path>) -> Result<Outcome, Error> {
    let value: Value = serde_json::from_str(&a.to_json())?;
    match output {
        Some(path) => {
            a.save(path)?;
            Ok(Outcome::info(json!({
                "algebra": report::algebra_header(a),
                "written": path.display().to_string(),
            })))
        }
        None => Ok(Outcome::info(value)),
    }
}

/// An existing file is read as an algebra file; anything else is looked up
/// in the catalog.
fn load(input: &str) -> Result<SuperAlgebra, Error> {
    let path = Path::new(input);
    if path.exists() {
        return SuperAlgebra::load(path);
    }
    catalog::get(input).map_err(|e| match e {
        Error::UnknownKey(_) | Error::Parse(_) => Error::Input(format!("{input}: no such file or catalog entry")),
        other => other,
    })
}

fn parse_identities(text: &str) -> Result<Vec<IdentityId>, Error> {
    let group = match text.trim().to_ascii_lowercase().as_str() {
        "all" => Some(IdentityId::ALL.to_vec()),
        "tp" => Some(IdentityId::TP_AXIOMS.to_vec()),
        "derived" => Some(IdentityId::DERIVED.to_vec()),
        "operator" => Some(IdentityId::OPERATOR_RELATIONS.to_vec()),
        _ => None,
    };
    if let Some(ids) = group {
        return Ok(ids);
    }
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| IdentityId::from_name(s).ok_or_else(|| Error::Input(format!("unknown identity {:?}", s.trim()))))
        .collect::<Result<Vec<_>, _>>()
        .and_then(|ids| if ids.is_empty() { Err(Error::Input("no identities requested".into())) } else { Ok(ids) })
}

fn parse_window(text: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Input(format!("window {text:?} is not of the form lo..hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}
