//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use tpalg_core::catalog;
use tpalg_core::halfderiv;
use tpalg_core::identities::{self, IdentityId};
use tpalg_core::kantor;
use tpalg_core::structure::{self, IdealKind, SimplicityOptions, SimplicityVerdict, Strategy};
use tpalg_core::witt::{self, ZAlgebraSpec, ZElement};
use tpalg_core::{Element, FieldSpec, Matrix, Product, Subspace};

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn within(&mut self, start: Instant, limit: Duration, what: &str) {
        let took = start.elapsed();
        self.note(format!("{what} took {took:.2?}"));
        self.check(took < limit, format!("{what} took {took:.2?}, limit {limit:.0?}"));
    }
}

fn f3() -> FieldSpec {
    FieldSpec::Prime(3)
}

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn halfder_gf3() -> Outcome {
    let mut o = Outcome::new();
    let s = halfderiv::half_derivations(&catalog::sl2(f3()), Product::Bracket, 0).unwrap();
    let family = |l: i64, m: i64, n: i64| Matrix::from_i64(f3(), &[&[l, n, 0], &[m, l, 0], &[0, 0, l]]).vectorize();
    let expected = Subspace::span(f3(), 9, vec![family(1, 0, 0), family(0, 1, 0), family(0, 0, 1)]).unwrap();
    o.note(format!("computed dimension {}", s.dim()));
    o.check(expected.is_subspace_of(&s.space).unwrap(), "parametric family not contained in the computed space");
    o.check(s.dim() == 3, format!("dimension {} ≠ 3", s.dim()));
    o.check(s.space == expected, "computed space differs from the parametric family");
    o
}

fn halfder_q() -> Outcome {
    let mut o = Outcome::new();
    let s = halfderiv::half_derivations(&catalog::sl2(q()), Product::Bracket, 0).unwrap();
    o.check(s.dim() == 1, format!("dimension {} ≠ 1", s.dim()));
    o.check(s.basis() == vec![Matrix::identity(q(), 3)], "space is not spanned by the identity");
    o
}

fn tp_family() -> Outcome {
    let mut o = Outcome::new();
    let mut passing = 0;
    for alpha in 0..3 {
        for beta in 0..3 {
            let tp = identities::is_tp(&catalog::tp_sl2_gf3(alpha, beta).unwrap());
            passing += usize::from(tp);
            o.check(tp == (alpha * beta == 0), format!("({alpha},{beta}): is_tp = {tp}"));
        }
    }
    o.check(passing == 5, format!("{passing} pairs pass, expected 5"));
    o
}

fn simplicity_p10() -> Outcome {
    let mut o = Outcome::new();
    let p = catalog::tp_sl2_gf3(1, 0).unwrap();
    let opts = SimplicityOptions::default();
    let start = Instant::now();
    let tp = structure::is_simple(&p, None, Strategy::Exhaustive, &opts).unwrap();
    let br = structure::is_simple(&p, Some(Product::Bracket), Strategy::Exhaustive, &opts).unwrap();
    o.within(start, Duration::from_secs(1), "exhaustive search");
    o.note(format!("{} lines covering the {} nonzero vectors", tp.work, 3u64.pow(3) - 1));
    o.check(tp.verdict.is_simple(), format!("TP verdict {}", tp.verdict.as_str()));
    o.check(br.verdict.is_simple(), format!("bracket verdict {}", br.verdict.as_str()));
    o
}

fn kantor_p10() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let p = catalog::tp_sl2_gf3(1, 0).unwrap();
    let j = kantor::kantor_double(&p);
    o.check(identities::check(&j, IdentityId::JordanSuper).passed(), "JORDAN_SUPER fails");
    let ann = structure::annihilator(&j);
    let e3 = Subspace::coordinate(f3(), 6, &[2]);
    o.note(format!("annihilator has dimension {}", ann.dim()));
    o.check(e3.is_subspace_of(&ann).unwrap(), "e3 does not annihilate the double");
    o.check(ann == e3, format!("annihilator has dimension {}, not span{{e3}}", ann.dim()));
    let r = structure::is_simple(&j, Some(Product::Circ), Strategy::Exhaustive, &SimplicityOptions::default()).unwrap();
    match &r.verdict {
        SimplicityVerdict::NotSimple { witness: Some(w) } => {
            o.check(structure::is_ideal(&j, w, IdealKind::Circ), "witness is not a proper ideal")
        }
        v => o.check(false, format!("double verdict {}", v.as_str())),
    }
    match kantor::double_simplicity_obstruction(&p) {
        Some(ob) => o.check(ob.is_ideal, "P ⊕ (P∘P)ˢ is not an ideal"),
        None => o.check(false, "P∘P = P, no obstruction"),
    }
    o.within(start, Duration::from_secs(5), "double checks");
    o
}

fn lie_double_defect() -> Outcome {
    let mut o = Outcome::new();
    let d = kantor::lie_double(&catalog::nonlie_remark_q()).unwrap();
    let s = d.layout().unwrap().starred[2];
    let defect = identities::defect(&d, IdentityId::JacobiSuper, &[s, s, s]).unwrap();
    let expected = Element::from_i64(q(), &[0, 0, 0, -3, -3, 0]);
    let got = defect.as_element().unwrap();
    o.note(format!("defect {}", got.render(&d.basis_labels())));
    o.check(got == &expected, "defect differs from -3(e1+e2)ˢ");
    o.check(!identities::check(&d, IdentityId::JacobiSuper).passed(), "Jacobi check passes");
    o
}

fn solvable3() -> Outcome {
    let mut o = Outcome::new();
    let a = catalog::solvable3_q();
    o.check(identities::is_tp(&a), "TP axioms fail");
    let s = structure::series(&a);
    let dims: Vec<usize> = s.derived_series.iter().map(Subspace::dim).collect();
    o.check(dims == [3, 2, 0], format!("derived series {dims:?}"));
    o.check(!s.nilpotent_bracket(), "lower central series reaches 0");
    o.check(s.perfect_circ && s.unit == Some(Element::from_i64(q(), &[0, 0, 1])), "∘ is not unital with unit e3");
    o
}

fn radical_demo() -> Outcome {
    let mut o = Outcome::new();
    let a = catalog::radical_demo_q();
    let r = structure::radical(&a).unwrap();
    o.check(r == Subspace::coordinate(q(), 6, &[3, 4, 5]), "radical is not the solvable summand");
    let series = structure::derived_series_of(&a, &r);
    for (i, ri) in series.iter().enumerate().take(2) {
        o.check(structure::is_ideal(&a, ri, IdealKind::Tp), format!("R^({i}) is not a TP ideal"));
    }
    o.check(series.get(2).is_some_and(Subspace::is_zero), "R^(2) ≠ 0");
    let pp = structure::product_span(&a, Product::Circ);
    o.check(pp.is_subspace_of(&r).unwrap(), "P∘P ⊄ R");
    o
}

fn witt_windows() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let qs = [ZElement::from_pairs(&[(0, 1)]), ZElement::from_pairs(&[(0, 1), (1, 1)]), ZElement::from_pairs(&[(1, 2)])];
    for qv in qs {
        let spec = ZAlgebraSpec::witt(qv.clone());
        for id in [IdentityId::AssocCirc, IdentityId::JacobiSuper, IdentityId::TpLeibnizSuper] {
            let r = witt::window_check(&spec, id, -3, 3).unwrap();
            o.check(r.passed() && r.triples_checked == 343, format!("q = {qv}: {id} fails"));
        }
        let inv = witt::laurent_invertible(&qv).unwrap();
        let unit = witt::unit_in_window(&spec, -3, 3).unwrap();
        o.check(inv.is_some() == unit.is_some(), format!("q = {qv}: invertibility and unit existence disagree"));
    }
    o.within(start, Duration::from_secs(2), "window checks");
    o
}

fn tp_catalog() -> Vec<tpalg_core::SuperAlgebra> {
    let mut specs: Vec<String> = catalog::list().iter().map(|e| e.default_spec.to_string()).collect();
    specs.extend(["tp_sl2_gf3(0,0)", "tp_sl2_gf3(2,0)", "tp_sl2_gf3(0,1)", "tp_sl2_gf3(0,2)", "sl2(Q)"].map(String::from));
    specs.iter().map(|s| catalog::get(s).unwrap()).filter(identities::is_tp).collect()
}

fn property_suite() -> Outcome {
    let mut o = Outcome::new();
    let ids: Vec<IdentityId> = IdentityId::DERIVED.iter().chain(&IdentityId::OPERATOR_RELATIONS).copied().collect();
    let algebras = tp_catalog();
    o.note(format!("{} TP algebras", algebras.len()));
    for a in &algebras {
        for r in identities::check_many(a, &ids) {
            o.check(r.passed(), format!("{}: {} fails at {:?}", a.name(), r.identity, r.counterexample));
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let d = structure::distinguished_derivation(a, &a.basis_element(x), &a.basis_element(y)).unwrap();
                o.check(structure::is_derivation(a, Product::Circ, &d), format!("{}: D(e{}, e{}) is not a derivation", a.name(), x + 1, y + 1));
            }
        }
    }
    o
}

fn meataxe_oracle() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = common::rng(2024);
    let opts = SimplicityOptions::default();
    let (mut conclusive, mut inconclusive, mut simple) = (0, 0, 0);
    for i in 0..200u64 {
        let n = 1 + (i % 4) as usize;
        let a = common::random_algebra(&mut rng, f3(), n, i % 3 == 0, 0.3);
        let ex = structure::is_simple(&a, None, Strategy::Exhaustive, &opts).unwrap().verdict;
        let mx = structure::is_simple(&a, None, Strategy::Meataxe, &SimplicityOptions { seed: i, ..opts }).unwrap().verdict;
        if mx == SimplicityVerdict::Indeterminate {
            inconclusive += 1;
            continue;
        }
        conclusive += 1;
        simple += usize::from(ex.is_simple());
        o.check(mx.is_simple() == ex.is_simple(), format!("algebra {i}: MEATAXE {} vs EXHAUSTIVE {}", mx.as_str(), ex.as_str()));
    }
    let rate = inconclusive as f64 / 200.0;
    o.note(format!("{conclusive} conclusive, {simple} simple, inconclusive rate {:.1}%", rate * 100.0));
    o.check(rate < 0.05, format!("inconclusive rate {:.1}%", rate * 100.0));
    o
}

fn nilpotent_circ() -> Outcome {
    let mut o = Outcome::new();
    let p = catalog::tp_sl2_gf3(1, 0).unwrap();
    let dims: Vec<usize> = structure::circ_powers(&p).iter().map(Subspace::dim).collect();
    o.check(dims == [3, 1, 0], format!("circ powers {dims:?}"));
    o.check(structure::product_span(&p, Product::Bracket).is_full(), "bracket is not perfect");
    let a = catalog::radical_demo_q();
    let powers = structure::circ_powers(&a);
    let radical_series = structure::derived_series_of(&a, &structure::radical(&a).unwrap());
    let last = radical_series.len() - 1;
    for n in 1..=last + 1 {
        let k = (1usize << n) + 1;
        let rn = &radical_series[n.min(last)];
        let pk = structure::circ_power(&powers, k);
        o.check(pk.is_subspace_of(rn).unwrap(), format!("P^{k} (dim {}) ⊄ R^({n}) (dim {})", pk.dim(), rn.dim()));
    }
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("half-derivations of sl2 over GF(3)", halfder_gf3),
        ("half-derivations of sl2 over Q", halfder_q),
        ("TP axioms on the nine sl2 structures", tp_family),
        ("simplicity of the (1,0) structure", simplicity_p10),
        ("Kantor double of the (1,0) structure", kantor_p10),
        ("Lie double Jacobi defect", lie_double_defect),
        ("solvable3_q series", solvable3),
        ("radical_demo_q radical", radical_demo),
        ("Witt windows", witt_windows),
        ("derived identities on catalog TP algebras", property_suite),
        ("MEATAXE against EXHAUSTIVE", meataxe_oracle),
        ("nilpotent ∘ and power containments", nilpotent_circ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut detail = o.notes.clone();
        detail.extend(o.failures.iter().cloned());
        println!("criterion {:>2} {verdict}: {name}{}", i + 1, if detail.is_empty() { String::new() } else { format!(" [{}]", detail.join("; ")) });
        failed += usize::from(!o.failures.is_empty());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
