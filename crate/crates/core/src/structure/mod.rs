//! Ideals, quasi-ideals, centers, derived and power series, the Killing-form
//! radical, units, and simplicity testing.

mod simple;

pub use simple::{is_simple, find_proper_closure, SimplicityOptions, SimplicityReport, SimplicityVerdict, Strategy};

use crate::algebra::{Element, Product, SuperAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Matrix, Scalar, SpanBuilder, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    /// Closed under both products.
    Tp,
    Circ,
    Bracket,
    /// `P I ⊆ I` and `{P, I} P ⊆ I`.
    Quasi,
    /// `{P, I} ⊆ I` and `{P I, P} ⊆ I`.
    TransposedQuasi,
}

impl IdealKind {
    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Tp => "TP_IDEAL",
            IdealKind::Circ => "CIRC_IDEAL",
            IdealKind::Bracket => "BRACKET_IDEAL",
            IdealKind::Quasi => "QUASI_IDEAL",
            IdealKind::TransposedQuasi => "TRANSPOSED_QUASI_IDEAL",
        }
    }
}

/// The linear maps a subspace of the given kind must be invariant under.
/// Zero maps are dropped.
pub fn closure_operators(a: &SuperAlgebra, kind: IdealKind) -> Vec<Matrix> {
    let n = a.dim();
    let sided = |which: Product| -> Vec<Matrix> {
        if !a.has_product(which) {
            return Vec::new();
        }
        (0..n).flat_map(|i| [a.basis_left_operator(which, i), a.basis_right_operator(which, i)]).collect()
    };
    let ops: Vec<Matrix> = match kind {
        IdealKind::Circ => sided(Product::Circ),
        IdealKind::Bracket => sided(Product::Bracket),
        IdealKind::Tp => [sided(Product::Circ), sided(Product::Bracket)].concat(),
        IdealKind::Quasi => {
            let p: Vec<Matrix> = (0..n).map(|i| a.basis_left_operator(Product::Circ, i)).collect();
            let q: Vec<Matrix> = (0..n).map(|i| a.basis_left_operator(Product::Bracket, i)).collect();
            let mut ops = p.clone();
            for qa in &q {
                for pb in &p {
                    ops.push(pb.mul(qa));
                }
            }
            ops
        }
        IdealKind::TransposedQuasi => {
            let p: Vec<Matrix> = (0..n).map(|i| a.basis_left_operator(Product::Circ, i)).collect();
            let r: Vec<Matrix> = (0..n).map(|i| a.basis_right_operator(Product::Bracket, i)).collect();
            let mut ops: Vec<Matrix> = (0..n).map(|i| a.basis_left_operator(Product::Bracket, i)).collect();
            for pa in &p {
                for rb in &r {
                    ops.push(rb.mul(pa));
                }
            }
            ops
        }
    };
    ops.into_iter().filter(|m| !m.is_zero()).collect()
}

/// Least subspace containing `seeds` and invariant under `ops`.
pub fn closure_under(field: FieldSpec, n: usize, ops: &[Matrix], seeds: &[Vec<Scalar>]) -> Subspace {
    let mut span = SpanBuilder::new(field, n);
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for s in seeds {
        if span.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if span.dim() == n {
            break;
        }
        for op in ops {
            let w = op.mul_vec(&v);
            if span.insert(&w) {
                queue.push(w);
            }
        }
    }
    span.into_subspace()
}

fn check_ambient(a: &SuperAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::Dimension(format!("subspace of F^{} in algebra of dimension {}", s.ambient_dim(), a.dim())));
    }
    if s.field() != a.field() {
        return Err(Error::FieldMismatch { expected: a.field(), found: s.field() });
    }
    Ok(())
}

pub fn ideal_closure(a: &SuperAlgebra, s: &Subspace, kind: IdealKind) -> Result<Subspace> {
    check_ambient(a, s)?;
    Ok(closure_under(a.field(), a.dim(), &closure_operators(a, kind), &s.basis_vectors()))
}

/// Invariance of `s` under the operators of `kind`, with no properness
/// requirement.
pub fn is_closed(a: &SuperAlgebra, s: &Subspace, kind: IdealKind) -> bool {
    if s.ambient_dim() != a.dim() || s.field() != a.field() {
        return false;
    }
    let ops = closure_operators(a, kind);
    s.basis_vectors().iter().all(|v| ops.iter().all(|op| s.contains(&op.mul_vec(v)).expect("same ambient")))
}

/// Nonzero, not the whole algebra.
pub fn is_proper(s: &Subspace) -> bool {
    !s.is_zero() && !s.is_full()
}

/// A proper subspace closed under the operations of `kind`.
pub fn is_ideal(a: &SuperAlgebra, s: &Subspace, kind: IdealKind) -> bool {
    is_proper(s) && is_closed(a, s, kind)
}

pub fn is_quasi_ideal(a: &SuperAlgebra, s: &Subspace) -> bool {
    is_ideal(a, s, IdealKind::Quasi)
}

pub fn is_transposed_quasi_ideal(a: &SuperAlgebra, s: &Subspace) -> bool {
    is_ideal(a, s, IdealKind::TransposedQuasi)
}

/// Span of all `u·v` with `u ∈ left`, `v ∈ right`.
pub fn product_of(a: &SuperAlgebra, which: Product, left: &Subspace, right: &Subspace) -> Subspace {
    let f = a.field();
    let n = a.dim();
    let mut span = SpanBuilder::new(f, n);
    let lv = left.basis_vectors();
    let rv = right.basis_vectors();
    for u in &lv {
        let u = Element::new(f, u.clone());
        for v in &rv {
            let w = a.mul(which, &u, &Element::new(f, v.clone()));
            span.insert(w.coords());
        }
    }
    span.into_subspace()
}

/// `A·A`: span of all basis products.
pub fn product_span(a: &SuperAlgebra, which: Product) -> Subspace {
    let mut span = SpanBuilder::new(a.field(), a.dim());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            span.insert(a.mul_basis(which, i, j).coords());
        }
    }
    span.into_subspace()
}

fn full(a: &SuperAlgebra) -> Subspace {
    Subspace::full(a.field(), a.dim())
}

/// `I, {I,I}, {{I,I},{I,I}}, …` up to the first repeated term.
pub fn derived_series_of(a: &SuperAlgebra, start: &Subspace) -> Vec<Subspace> {
    let mut out = vec![start.clone()];
    loop {
        let last = out.last().expect("nonempty");
        let next = product_of(a, Product::Bracket, last, last);
        if &next == last {
            return out;
        }
        out.push(next);
    }
}

pub fn derived_series(a: &SuperAlgebra) -> Vec<Subspace> {
    derived_series_of(a, &full(a))
}

/// `P, P·P, (P·P)·P, …` up to the first repeated term.
pub fn lower_central_series(a: &SuperAlgebra, which: Product) -> Vec<Subspace> {
    let all = full(a);
    let mut out = vec![all.clone()];
    loop {
        let last = out.last().expect("nonempty");
        let next = product_of(a, which, last, &all);
        if &next == last {
            return out;
        }
        out.push(next);
    }
}

/// `P^1 = P`, `P^k = P^{k-1}∘P`, up to the first repeated term.
pub fn circ_powers(a: &SuperAlgebra) -> Vec<Subspace> {
    lower_central_series(a, Product::Circ)
}

/// `P^k` for any `k ≥ 1`, reading past the end of a stabilised series.
pub fn circ_power(powers: &[Subspace], k: usize) -> &Subspace {
    assert!(k >= 1, "powers start at P^1");
    &powers[(k - 1).min(powers.len() - 1)]
}

/// `{x : x·A = A·x = 0}` for one product.
pub fn center(a: &SuperAlgebra, which: Product) -> Subspace {
    kernel_of_stack(a, &[which])
}

/// `{x : x∘A = A∘x = {x,A} = {A,x} = 0}`.
pub fn annihilator(a: &SuperAlgebra) -> Subspace {
    kernel_of_stack(a, &[Product::Circ, Product::Bracket])
}

fn kernel_of_stack(a: &SuperAlgebra, products: &[Product]) -> Subspace {
    let n = a.dim();
    let mut parts = Vec::new();
    for &which in products {
        for j in 0..n {
            parts.push(a.basis_right_operator(which, j));
            parts.push(a.basis_left_operator(which, j));
        }
    }
    Matrix::vstack(a.field(), n, &parts).kernel()
}

/// The two-sided unit of `∘`, if one exists.
pub fn unit(a: &SuperAlgebra) -> Option<Element> {
    let n = a.dim();
    let f = a.field();
    // unknown u; rows: (u∘e_i)_k - δ_ik and (e_i∘u)_k - δ_ik
    let mut m = Matrix::zeros(f, 2 * n * n, n);
    let mut rhs = vec![f.zero(); 2 * n * n];
    for i in 0..n {
        for t in 0..n {
            for (k, c) in a.basis_product(Product::Circ, t, i) {
                m[(i * n + k, t)] = c.clone();
            }
            for (k, c) in a.basis_product(Product::Circ, i, t) {
                m[(n * n + i * n + k, t)] = c.clone();
            }
        }
        rhs[i * n + i] = f.one();
        rhs[n * n + i * n + i] = f.one();
    }
    m.solve(&rhs).map(|u| Element::new(f, u))
}

fn require_char_zero_ungraded(a: &SuperAlgebra, what: &str) -> Result<()> {
    if a.field().is_finite() {
        return Err(Error::Unsupported(format!("{what} needs characteristic 0, field is {}", a.field())));
    }
    if a.is_graded() {
        return Err(Error::Unsupported(format!("{what} is only implemented for ungraded algebras")));
    }
    Ok(())
}

/// Gram matrix of `κ(x, y) = tr(Q_x Q_y)` in the standard basis.
pub fn killing_form(a: &SuperAlgebra) -> Result<Matrix> {
    require_char_zero_ungraded(a, "the Killing form")?;
    let n = a.dim();
    let q: Vec<Matrix> = (0..n).map(|i| a.basis_left_operator(Product::Bracket, i)).collect();
    let mut k = Matrix::zeros(a.field(), n, n);
    for i in 0..n {
        for j in i..n {
            let t = q[i].mul(&q[j]).trace();
            k[(i, j)] = t.clone();
            k[(j, i)] = t;
        }
    }
    Ok(k)
}

/// Solvable radical of the bracket, `{x : κ(x, y) = 0 for all y ∈ {P,P}}`.
pub fn radical(a: &SuperAlgebra) -> Result<Subspace> {
    let k = killing_form(a)?;
    let derived = product_span(a, Product::Bracket);
    if derived.is_zero() {
        return Ok(full(a));
    }
    Ok(derived.basis().mul(&k).kernel())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSummary {
    pub center_circ: Subspace,
    pub center_bracket: Subspace,
    pub annihilator: Subspace,
    pub derived_series: Vec<Subspace>,
    pub lower_central_series: Vec<Subspace>,
    pub circ_powers: Vec<Subspace>,
    /// `None` over prime fields and for graded algebras.
    pub radical: Option<Subspace>,
    /// Derived series of the radical, `R^(0), R^(1), …`.
    pub radical_series: Option<Vec<Subspace>>,
    pub unit: Option<Element>,
    pub perfect_circ: bool,
    pub perfect_bracket: bool,
}

impl StructureSummary {
    pub fn solvable(&self) -> bool {
        self.derived_series.last().is_some_and(Subspace::is_zero)
    }

    pub fn nilpotent_bracket(&self) -> bool {
        self.lower_central_series.last().is_some_and(Subspace::is_zero)
    }

    pub fn nilpotent_circ(&self) -> bool {
        self.circ_powers.last().is_some_and(Subspace::is_zero)
    }
}

pub fn series(a: &SuperAlgebra) -> StructureSummary {
    let radical = radical(a).ok();
    let radical_series = radical.as_ref().map(|r| derived_series_of(a, r));
    StructureSummary {
        center_circ: center(a, Product::Circ),
        center_bracket: center(a, Product::Bracket),
        annihilator: annihilator(a),
        derived_series: derived_series(a),
        lower_central_series: lower_central_series(a, Product::Bracket),
        circ_powers: circ_powers(a),
        radical,
        radical_series,
        unit: unit(a),
        perfect_circ: product_span(a, Product::Circ).is_full(),
        perfect_bracket: product_span(a, Product::Bracket).is_full(),
    }
}

/// Matrix of `D_{xy}(a) = {a∘x, y} - a∘{x,y}`.
pub fn distinguished_derivation(a: &SuperAlgebra, x: &Element, y: &Element) -> Result<Matrix> {
    for e in [x, y] {
        if e.dim() != a.dim() {
            return Err(Error::Dimension(format!("element of length {} in algebra of dimension {}", e.dim(), a.dim())));
        }
    }
    let xy = a.mul(Product::Bracket, x, y);
    let cols: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|j| {
            let ej = a.basis_element(j);
            let first = a.mul(Product::Bracket, &a.mul(Product::Circ, &ej, x), y);
            first.sub(&a.mul(Product::Circ, &ej, &xy)).into_coords()
        })
        .collect();
    Ok(Matrix::from_columns(a.field(), a.dim(), &cols))
}

/// First basis pair `(i, j)` where `D(e_i e_j) ≠ D(e_i) e_j + e_i D(e_j)`.
pub fn derivation_failure(a: &SuperAlgebra, which: Product, d: &Matrix) -> Option<(usize, usize)> {
    let f = a.field();
    let apply = |e: &Element| Element::new(f, d.mul_vec(e.coords()));
    for i in 0..a.dim() {
        let ei = a.basis_element(i);
        let dei = apply(&ei);
        for j in 0..a.dim() {
            let ej = a.basis_element(j);
            let lhs = apply(&a.mul(which, &ei, &ej));
            let rhs = a.mul(which, &dei, &ej).add(&a.mul(which, &ei, &apply(&ej)));
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_derivation(a: &SuperAlgebra, which: Product, d: &Matrix) -> bool {
    derivation_failure(a, which, d).is_none()
}
