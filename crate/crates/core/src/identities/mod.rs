//! Multilinear identities of transposed Poisson (super)algebras, the Jordan
//! superidentity, and the operator relations between `P_a` and `Q_a`.
//!
//! Every identity is evaluated as (left side − right side) by direct
//! structure-constant contraction on basis tuples. Tuples are scanned in
//! lexicographic order and the first nonzero defect is reported.

mod report;

use std::fmt;

pub use report::{Defect, IdentityReport, Verdict};

use crate::algebra::{sign_flip, Element, Product, SuperAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    AssocCirc,
    JacobiSuper,
    TpLeibnizSuper,
    PropEq1,
    PropEq2,
    PropEq3,
    PropEq4,
    PropEq5,
    PropEq6,
    JordanSuper,
    RelPq1,
    RelPq2,
    RelPq3,
    RelPq4,
    Rel2_1,
    Rel2_2,
    Rel2_3,
    Rel2_4,
    Rel2_5,
    Rel2_6,
}

use IdentityId::*;

impl IdentityId {
    pub const ALL: [IdentityId; 20] = [
        AssocCirc, JacobiSuper, TpLeibnizSuper, PropEq1, PropEq2, PropEq3, PropEq4, PropEq5, PropEq6, JordanSuper,
        RelPq1, RelPq2, RelPq3, RelPq4, Rel2_1, Rel2_2, Rel2_3, Rel2_4, Rel2_5, Rel2_6,
    ];

    pub const TP_AXIOMS: [IdentityId; 3] = [AssocCirc, JacobiSuper, TpLeibnizSuper];

    pub const DERIVED: [IdentityId; 6] = [PropEq1, PropEq2, PropEq3, PropEq4, PropEq5, PropEq6];

    pub const OPERATOR_RELATIONS: [IdentityId; 10] =
        [RelPq1, RelPq2, RelPq3, RelPq4, Rel2_1, Rel2_2, Rel2_3, Rel2_4, Rel2_5, Rel2_6];

    pub fn name(self) -> &'static str {
        match self {
            AssocCirc => "ASSOC_CIRC",
            JacobiSuper => "JACOBI_SUPER",
            TpLeibnizSuper => "TP_LEIBNIZ_SUPER",
            PropEq1 => "PROPEQ1",
            PropEq2 => "PROPEQ2",
            PropEq3 => "PROPEQ3",
            PropEq4 => "PROPEQ4",
            PropEq5 => "PROPEQ5",
            PropEq6 => "PROPEQ6",
            JordanSuper => "JORDAN_SUPER",
            RelPq1 => "REL_PQ1",
            RelPq2 => "REL_PQ2",
            RelPq3 => "REL_PQ3",
            RelPq4 => "REL_PQ4",
            Rel2_1 => "REL2_1",
            Rel2_2 => "REL2_2",
            Rel2_3 => "REL2_3",
            Rel2_4 => "REL2_4",
            Rel2_5 => "REL2_5",
            Rel2_6 => "REL2_6",
        }
    }

    /// Accepts the canonical names case-insensitively, plus the short aliases
    /// `assoc`, `jacobi`, `leibniz` and `jordan`.
    pub fn from_name(s: &str) -> Option<IdentityId> {
        let up = s.trim().to_ascii_uppercase();
        let alias = match up.as_str() {
            "ASSOC" => Some(AssocCirc),
            "JACOBI" => Some(JacobiSuper),
            "LEIBNIZ" => Some(TpLeibnizSuper),
            "JORDAN" => Some(JordanSuper),
            _ => None,
        };
        alias.or_else(|| IdentityId::ALL.into_iter().find(|id| id.name() == up))
    }

    pub fn arity(self) -> usize {
        match self {
            RelPq1 | RelPq2 | RelPq3 | Rel2_1 => 2,
            PropEq2 | PropEq3 | PropEq4 | PropEq5 | PropEq6 => 4,
            _ => 3,
        }
    }

    pub fn is_operator_valued(self) -> bool {
        matches!(self, JordanSuper) || IdentityId::OPERATOR_RELATIONS.contains(&self)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs one identity over every basis tuple of its arity.
pub fn check(a: &SuperAlgebra, id: IdentityId) -> IdentityReport {
    let mut report = IdentityReport::pass(id);
    if id == JordanSuper && a.has_product(Product::Bracket) {
        report.warnings.push("bracket table ignored: the Jordan superidentity uses the circ product only".into());
    }
    let n = a.dim();
    let k = id.arity();
    let mut tuple = vec![0usize; k];
    if n == 0 {
        return report;
    }
    let ev = Evaluator::new(a);
    loop {
        let d = ev.eval_basis(id, &tuple);
        if !d.is_zero() {
            report.counterexample = Some(tuple);
            report.defect = Some(d);
            return report;
        }
        if !advance(&mut tuple, n) {
            return report;
        }
    }
}

/// Odometer step in lexicographic order; false once exhausted.
pub(crate) fn advance(tuple: &mut [usize], n: usize) -> bool {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

pub fn check_many(a: &SuperAlgebra, ids: &[IdentityId]) -> Vec<IdentityReport> {
    ids.iter().map(|&id| check(a, id)).collect()
}

/// ASSOC_CIRC, JACOBI_SUPER and TP_LEIBNIZ_SUPER; the algebra is transposed
/// Poisson iff all three pass.
pub fn check_tp_axioms(a: &SuperAlgebra) -> Vec<IdentityReport> {
    check_many(a, &IdentityId::TP_AXIOMS)
}

pub fn is_tp(a: &SuperAlgebra) -> bool {
    check_tp_axioms(a).iter().all(IdentityReport::passed)
}

pub fn check_operator_relations(a: &SuperAlgebra) -> Vec<IdentityReport> {
    check_many(a, &IdentityId::OPERATOR_RELATIONS)
}

/// Defect at a tuple of basis indices.
pub fn defect(a: &SuperAlgebra, id: IdentityId, tuple: &[usize]) -> Result<Defect> {
    if tuple.len() != id.arity() {
        return Err(Error::Input(format!("{id} takes {} arguments, got {}", id.arity(), tuple.len())));
    }
    if let Some(&i) = tuple.iter().find(|&&i| i >= a.dim()) {
        return Err(Error::Input(format!("basis index {i} out of range for dimension {}", a.dim())));
    }
    Ok(Evaluator::new(a).eval_basis(id, tuple))
}

/// Defect at arbitrary homogeneous elements.
pub fn defect_at(a: &SuperAlgebra, id: IdentityId, args: &[Element]) -> Result<Defect> {
    if args.len() != id.arity() {
        return Err(Error::Input(format!("{id} takes {} arguments, got {}", id.arity(), args.len())));
    }
    let mut parities = Vec::with_capacity(args.len());
    for x in args {
        if x.dim() != a.dim() {
            return Err(Error::Dimension(format!("element of length {} in algebra of dimension {}", x.dim(), a.dim())));
        }
        if x.field() != a.field() {
            return Err(Error::FieldMismatch { expected: a.field(), found: x.field() });
        }
        parities.push(a.element_parity(x).ok_or_else(|| Error::Parity("identity argument is not homogeneous".into()))?);
    }
    Ok(Evaluator::new(a).eval(id, args, &parities))
}

/// The Jordan superidentity at a basis triple, evaluated column by column
/// from element products rather than from left-multiplication matrices.
pub fn jordan_defect_elementwise(a: &SuperAlgebra, x: usize, y: usize, z: usize) -> Matrix {
    let n = a.dim();
    let f = a.field();
    let par = |i: usize| a.parity_of_basis(i);
    let e = |i: usize| a.basis_element(i);
    let m = |u: &Element, v: &Element| a.mul(Product::Circ, u, v);
    let mut cols = Vec::with_capacity(n);
    for w in 0..n {
        let ew = e(w);
        let mut col = Element::zero(f, n);
        for (u, v, t) in [(x, y, z), (y, z, x), (z, x, y)] {
            // (-1)^{ut} [L_{uv}, L_t] applied to w
            let uv = m(&e(u), &e(v));
            let first = m(&uv, &m(&e(t), &ew));
            let second = m(&e(t), &m(&uv, &ew));
            let bracket_sign = sign_flip((par(u) + par(v)) % 2, par(t));
            let term = first.sub(&second.signed(bracket_sign));
            col = col.add(&term.signed(sign_flip(par(u), par(t))));
        }
        cols.push(col.into_coords());
    }
    Matrix::from_columns(f, n, &cols)
}

struct Evaluator<'a> {
    a: &'a SuperAlgebra,
}

impl<'a> Evaluator<'a> {
    fn new(a: &'a SuperAlgebra) -> Self {
        Evaluator { a }
    }

    fn eval_basis(&self, id: IdentityId, tuple: &[usize]) -> Defect {
        let args: Vec<Element> = tuple.iter().map(|&i| self.a.basis_element(i)).collect();
        let par: Vec<u8> = tuple.iter().map(|&i| self.a.parity_of_basis(i)).collect();
        self.eval(id, &args, &par)
    }

    fn c(&self, x: &Element, y: &Element) -> Element {
        self.a.mul(Product::Circ, x, y)
    }

    fn b(&self, x: &Element, y: &Element) -> Element {
        self.a.mul(Product::Bracket, x, y)
    }

    fn p(&self, x: &Element) -> Matrix {
        self.a.left_op(Product::Circ, x)
    }

    fn q(&self, x: &Element) -> Matrix {
        self.a.left_op(Product::Bracket, x)
    }

    fn zero_el(&self) -> Element {
        self.a.zero_element()
    }

    fn zero_op(&self) -> Matrix {
        Matrix::zeros(self.a.field(), self.a.dim(), self.a.dim())
    }

    /// Σ ±k·v over `(k, negate, v)` terms.
    fn lin(&self, terms: Vec<(i64, bool, Element)>) -> Element {
        let mut acc = self.zero_el();
        for (k, neg, v) in terms {
            acc.add_scaled(&self.a.field().from_i64(k).signed(neg), &v);
        }
        acc
    }

    fn lin_op(&self, terms: Vec<(i64, bool, Matrix)>) -> Matrix {
        let mut acc = self.zero_op();
        for (k, neg, m) in terms {
            acc.add_scaled(&self.a.field().from_i64(k).signed(neg), &m);
        }
        acc
    }

    /// Graded commutator `AB - (-1)^{|A||B|} BA`.
    fn gbr(&self, x: &Matrix, px: u8, y: &Matrix, py: u8) -> Matrix {
        x.mul(y).sub(&y.mul(x).scale(&self.a.field().one().signed(sign_flip(px, py))))
    }

    fn eval(&self, id: IdentityId, args: &[Element], par: &[u8]) -> Defect {
        let s = sign_flip;
        match id {
            AssocCirc => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                Defect::Element(self.c(&self.c(x, y), z).sub(&self.c(x, &self.c(y, z))))
            }
            JacobiSuper => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let (px, py, pz) = (par[0], par[1], par[2]);
                Defect::Element(self.lin(vec![
                    (1, s(px, pz), self.b(&self.b(x, y), z)),
                    (1, s(py, px), self.b(&self.b(y, z), x)),
                    (1, s(pz, py), self.b(&self.b(z, x), y)),
                ]))
            }
            TpLeibnizSuper => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let (px, py) = (par[0], par[1]);
                Defect::Element(self.lin(vec![
                    (2, false, self.c(x, &self.b(y, z))),
                    (-1, false, self.b(&self.c(x, y), z)),
                    (-1, s(px, py), self.b(y, &self.c(x, z))),
                ]))
            }
            PropEq1 => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let (px, py, pz) = (par[0], par[1], par[2]);
                Defect::Element(self.lin(vec![
                    (1, s(px, pz), self.c(x, &self.b(y, z))),
                    (1, s(py, px), self.c(y, &self.b(z, x))),
                    (1, s(pz, py), self.c(z, &self.b(x, y))),
                ]))
            }
            PropEq2 | PropEq3 | PropEq4 => {
                let (x, y, z, h) = (&args[0], &args[1], &args[2], &args[3]);
                let (px, py, pz) = (par[0], par[1], par[2]);
                let term = |u: &Element, v: &Element, w: &Element| match id {
                    PropEq2 => self.b(&self.c(h, &self.b(u, v)), w),
                    PropEq3 => self.b(&self.c(h, u), &self.b(v, w)),
                    _ => self.c(&self.b(h, u), &self.b(v, w)),
                };
                Defect::Element(self.lin(vec![
                    (1, s(px, pz), term(x, y, z)),
                    (1, s(py, px), term(y, z, x)),
                    (1, s(pz, py), term(z, x, y)),
                ]))
            }
            PropEq5 => {
                let (x, u, v, y) = (&args[0], &args[1], &args[2], &args[3]);
                let (px, pu, pv) = (par[0], par[1], par[2]);
                Defect::Element(self.lin(vec![
                    (1, false, self.b(&self.c(x, u), &self.c(v, y))),
                    (1, s(pu, pv), self.b(&self.c(x, v), &self.c(u, y))),
                    (-2, s(pu, px) ^ s(pv, px), self.c(&self.c(u, v), &self.b(x, y))),
                ]))
            }
            PropEq6 => {
                let (x, y, u, v) = (&args[0], &args[1], &args[2], &args[3]);
                let (px, py, pu, pv) = (par[0], par[1], par[2], par[3]);
                Defect::Element(self.lin(vec![
                    (1, s(pv, px) ^ s(py, pu), self.c(x, &self.b(u, &self.c(y, v)))),
                    (1, s(pv, pu) ^ s(pv, py), self.c(v, &self.b(&self.c(x, y), u))),
                    (1, s(px, pu) ^ s(px, py), self.c(&self.c(y, u), &self.b(v, x))),
                ]))
            }
            JordanSuper => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let (px, py, pz) = (par[0], par[1], par[2]);
                let l = |e: &Element| self.p(e);
                let term = |u: &Element, pu: u8, v: &Element, pv: u8, w: &Element, pw: u8| {
                    self.gbr(&l(&self.c(u, v)), (pu + pv) % 2, &l(w), pw)
                };
                Defect::Operator(self.lin_op(vec![
                    (1, s(px, pz), term(x, px, y, py, z, pz)),
                    (1, s(py, px), term(y, py, z, pz, x, px)),
                    (1, s(pz, py), term(z, pz, x, px, y, py)),
                ]))
            }
            RelPq1 => {
                let (x, y) = (&args[0], &args[1]);
                Defect::Operator(self.gbr(&self.p(x), par[0], &self.p(y), par[1]))
            }
            RelPq2 => {
                let (x, y) = (&args[0], &args[1]);
                Defect::Operator(self.gbr(&self.q(x), par[0], &self.q(y), par[1]).sub(&self.q(&self.b(x, y))))
            }
            RelPq3 => {
                let (x, y) = (&args[0], &args[1]);
                let (px, py) = (par[0], par[1]);
                Defect::Operator(self.lin_op(vec![
                    (1, false, self.q(&self.c(x, y))),
                    (1, s(px, py), self.q(y).mul(&self.p(x))),
                    (-2, false, self.p(x).mul(&self.q(y))),
                ]))
            }
            RelPq4 => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let (px, py, pz) = (par[0], par[1], par[2]);
                Defect::Operator(self.lin_op(vec![
                    (1, s(px, pz), self.q(&self.c(&self.b(x, y), z))),
                    (1, s(py, px), self.q(&self.c(&self.b(y, z), x))),
                    (1, s(pz, py), self.q(&self.c(&self.b(z, x), y))),
                ]))
            }
            Rel2_1 => {
                let (x, y) = (&args[0], &args[1]);
                let (px, py) = (par[0], par[1]);
                Defect::Operator(self.lin_op(vec![
                    (1, false, self.p(x).mul(&self.q(y))),
                    (-1, s(px, py), self.p(y).mul(&self.q(x))),
                    (1, false, self.p(&self.b(x, y))),
                ]))
            }
            Rel2_2 | Rel2_3 | Rel2_4 => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let (px, py, pz) = (par[0], par[1], par[2]);
                // (sign, term) per cyclic slot; REL2_2 carries its signs as listed
                let term = |u: &Element, v: &Element, w: &Element| match id {
                    Rel2_2 => self.q(w).mul(&self.p(&self.b(u, v))),
                    Rel2_3 => self.q(&self.b(u, v)).mul(&self.p(w)),
                    _ => self.p(&self.b(u, v)).mul(&self.q(w)),
                };
                let signs = match id {
                    Rel2_2 => [s(pz, py), s(px, pz), s(py, px)],
                    _ => [s(px, pz), s(py, px), s(pz, py)],
                };
                Defect::Operator(self.lin_op(vec![
                    (1, signs[0], term(x, y, z)),
                    (1, signs[1], term(y, z, x)),
                    (1, signs[2], term(z, x, y)),
                ]))
            }
            Rel2_5 => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let (px, py, pz) = (par[0], par[1], par[2]);
                let first = self.lin_op(vec![
                    (1, false, self.q(&self.c(x, y)).mul(&self.p(z))),
                    (-1, s(pz, px) ^ s(pz, py), self.q(&self.c(z, x)).mul(&self.p(y))),
                    (-2, false, self.p(&self.c(x, &self.b(y, z)))),
                ]);
                if !first.is_zero() {
                    return Defect::Operator(first);
                }
                Defect::Operator(self.lin_op(vec![
                    (1, s(py, px), self.q(&self.c(y, z)).mul(&self.p(x))),
                    (1, s(pz, py), self.q(&self.c(z, x)).mul(&self.p(y))),
                    (-2, s(px, pz), self.p(&self.c(x, y)).mul(&self.q(z))),
                ]))
            }
            Rel2_6 => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let (px, py, pz) = (par[0], par[1], par[2]);
                Defect::Operator(self.lin_op(vec![
                    (1, s(pz, py) ^ s(pz, px), self.p(z).mul(&self.q(&self.c(x, y)))),
                    (-1, s(py, px), self.p(y).mul(&self.q(&self.c(x, z)))),
                    (-1, false, self.p(&self.c(x, &self.b(y, z)))),
                ]))
            }
        }
    }
}
