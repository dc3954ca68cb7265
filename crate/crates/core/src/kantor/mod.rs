//! Kantor doubles and Lie doubles of dot-bracket (super)algebras.
//!
//! The double lives on `P ⊕ Pˢ`: index `i` is the plain copy of `e_i` and
//! `n + i` its starred copy, whose parity is flipped.

use serde::{Deserialize, Serialize};

use crate::algebra::{Product, SuperAlgebra, TableEntry};
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Subspace};
use crate::structure::{self, IdealKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DoubleKind {
    Kantor,
    Lie,
}

/// Index bookkeeping for a double, stored in the file's `layout` block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleLayout {
    pub kind: DoubleKind,
    pub source_dim: usize,
    /// `plain[i]` is the index of `e_i` in the double.
    pub plain: Vec<usize>,
    /// `starred[i]` is the index of `e_iˢ` in the double.
    pub starred: Vec<usize>,
}

impl DoubleLayout {
    pub fn new(kind: DoubleKind, n: usize) -> Self {
        DoubleLayout { kind, source_dim: n, plain: (0..n).collect(), starred: (n..2 * n).collect() }
    }
}

/// The Kantor double `J(P)` with product `*`, stored in the circ table:
///
/// `x*y = x∘y`, `xˢ*y = (x∘y)ˢ`, `x*yˢ = (-1)^{|x|}(x∘y)ˢ`,
/// `xˢ*yˢ = (-1)^{|x|}{x,y}`.
pub fn kantor_double(p: &SuperAlgebra) -> SuperAlgebra {
    let n = p.dim();
    let mut parity = p.parity().to_vec();
    parity.extend(p.parity().iter().map(|&q| 1 - q));
    let mut star: Vec<TableEntry> = Vec::new();
    for (i, j, k, c) in p.table(Product::Circ) {
        let odd_x = p.parity_of_basis(i) == 1;
        star.push((i, j, k, c.clone()));
        star.push((n + i, j, n + k, c.clone()));
        star.push((i, n + j, n + k, c.signed(odd_x)));
    }
    for (i, j, k, c) in p.table(Product::Bracket) {
        let odd_x = p.parity_of_basis(i) == 1;
        star.push((n + i, n + j, k, c.signed(odd_x)));
    }
    SuperAlgebra::new(format!("kantor_double({})", p.name()), p.field(), parity, star, Vec::new())
        .expect("double tables are in range and distinct")
        .with_layout(DoubleLayout::new(DoubleKind::Kantor, n))
}

/// The Lie double on `P ⊕ Pˢ` of an ungraded algebra, stored in the bracket
/// table: `[a,b] = {a,b}`, `[aˢ,b] = [a,bˢ] = {a,b}ˢ`, `[aˢ,bˢ] = a∘b`.
pub fn lie_double(p: &SuperAlgebra) -> Result<SuperAlgebra> {
    if p.is_graded() {
        return Err(Error::Unsupported("the Lie double is only defined for ungraded algebras".into()));
    }
    let n = p.dim();
    let parity = [vec![0u8; n], vec![1u8; n]].concat();
    let mut br: Vec<TableEntry> = Vec::new();
    for (i, j, k, c) in p.table(Product::Bracket) {
        br.push((i, j, k, c.clone()));
        br.push((n + i, j, n + k, c.clone()));
        br.push((i, n + j, n + k, c));
    }
    for (i, j, k, c) in p.table(Product::Circ) {
        br.push((n + i, n + j, k, c));
    }
    Ok(SuperAlgebra::new(format!("lie_double({})", p.name()), p.field(), parity, Vec::new(), br)?
        .with_layout(DoubleLayout::new(DoubleKind::Lie, n)))
}

/// Embeds a subspace of `P` into the plain or starred copy of the double.
pub fn embed(s: &Subspace, starred: bool) -> Subspace {
    let n = s.ambient_dim();
    let f = s.field();
    let off = if starred { n } else { 0 };
    let vectors = s
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let mut w = vec![f.zero(); 2 * n];
            for (i, c) in v.into_iter().enumerate() {
                w[off + i] = c;
            }
            w
        })
        .collect();
    Subspace::span(f, 2 * n, vectors).expect("embedded vectors have length 2n")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    /// `P ⊕ (P∘P)ˢ` inside the double.
    pub subspace: Subspace,
    pub is_ideal: bool,
}

/// When `P∘P ≠ P`, the subspace `P ⊕ (P∘P)ˢ` of the Kantor double, with a
/// check that it is an ideal of `J(P)`. `None` when `∘` is perfect.
pub fn double_simplicity_obstruction(p: &SuperAlgebra) -> Option<Obstruction> {
    let square = structure::product_span(p, Product::Circ);
    if square.is_full() {
        return None;
    }
    let full = Subspace::full(p.field(), p.dim());
    let subspace = embed(&full, false).sum(&embed(&square, true)).expect("same ambient");
    let double = kantor_double(p);
    let is_ideal = structure::is_ideal(&double, &subspace, IdealKind::Tp);
    Some(Obstruction { subspace, is_ideal })
}

/// `L_a` on the double for a basis vector `a` of `P`, assembled from the
/// blocks `[[P_a, 0], [0, ±P_a]]`.
pub fn block_left_plain(p: &SuperAlgebra, a: usize) -> Matrix {
    let pa = p.basis_left_operator(Product::Circ, a);
    let odd = p.parity_of_basis(a) == 1;
    let minus = p.field().one().signed(odd);
    blocks(&pa, None, None, Some(&pa.scale(&minus)))
}

/// `L_{aˢ}` on the double: `[[0, ±Q_a], [P_a, 0]]`.
pub fn block_left_starred(p: &SuperAlgebra, a: usize) -> Matrix {
    let pa = p.basis_left_operator(Product::Circ, a);
    let qa = p.basis_left_operator(Product::Bracket, a);
    let odd = p.parity_of_basis(a) == 1;
    let minus = p.field().one().signed(odd);
    let zero = Matrix::zeros(p.field(), p.dim(), p.dim());
    blocks(&zero, Some(&qa.scale(&minus)), Some(&pa), None)
}

fn blocks(tl: &Matrix, tr: Option<&Matrix>, bl: Option<&Matrix>, br: Option<&Matrix>) -> Matrix {
    let n = tl.rows();
    let mut m = Matrix::zeros(tl.field(), 2 * n, 2 * n);
    for (block, (ro, co)) in [(Some(tl), (0, 0)), (tr, (0, n)), (bl, (n, 0)), (br, (n, n))] {
        if let Some(b) = block {
            for i in 0..n {
                for j in 0..n {
                    m[(ro + i, co + j)] = b[(i, j)].clone();
                }
            }
        }
    }
    m
}
