//! ½-(super)derivations and brute-force searches for transposed Poisson
//! structures on a fixed bracket.
//!
//! An operator `D` of parity `p` is a ½-superderivation of a product `·` when
//! `2D(x·y) = D(x)·y + (-1)^{p|x|} x·D(y)` for homogeneous `x, y`, and maps
//! degree `d` into degree `d + p`.

use crate::algebra::{sign_flip, Element, Product, SuperAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Scalar, Subspace};
use crate::identities;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfDerivationSpace {
    pub which: Product,
    pub parity: u8,
    /// Dimension of the algebra.
    pub n: usize,
    /// Row-major vectorizations of the operators, as a canonical subspace of
    /// `F^{n²}`.
    pub space: Subspace,
}

impl HalfDerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Canonical basis operators.
    pub fn basis(&self) -> Vec<Matrix> {
        let n = self.n;
        self.space
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::from_vectorized(self.space.field(), n, n, v))
            .collect()
    }

    pub fn contains(&self, d: &Matrix) -> bool {
        self.space.contains(&d.vectorize()).unwrap_or(false)
    }
}

/// Solves the `n³`-equation linear system in the `n²` entries of `D`.
/// Unknown `r·n + c` is `D[r][c]`, the `e_r`-coefficient of `D(e_c)`.
pub fn half_derivations(a: &SuperAlgebra, which: Product, parity: u8) -> Result<HalfDerivationSpace> {
    if parity > 1 {
        return Err(Error::Input(format!("operator parity {parity} is not 0 or 1")));
    }
    let n = a.dim();
    let f = a.field();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        let sign = sign_flip(parity, a.parity_of_basis(i));
        for j in 0..n {
            let mut eq = vec![vec![f.zero(); n * n]; n];
            // 2 D(e_i e_j)
            for (m, c) in a.basis_product(which, i, j) {
                let two_c = &f.from_i64(2) * c;
                for (k, row) in eq.iter_mut().enumerate() {
                    row[var(k, *m)] = &row[var(k, *m)] + &two_c;
                }
            }
            // - D(e_i) e_j
            for r in 0..n {
                for (k, c) in a.basis_product(which, r, j) {
                    eq[*k][var(r, i)] = &eq[*k][var(r, i)] - c;
                }
            }
            // - (±) e_i D(e_j)
            for r in 0..n {
                for (k, c) in a.basis_product(which, i, r) {
                    let c = c.clone().signed(sign);
                    eq[*k][var(r, j)] = &eq[*k][var(r, j)] - &c;
                }
            }
            rows.extend(eq.into_iter().filter(|row| row.iter().any(|s| !s.is_zero())));
        }
    }
    for r in 0..n {
        for c in 0..n {
            if a.parity_of_basis(r) != (a.parity_of_basis(c) + parity) % 2 {
                let mut row = vec![f.zero(); n * n];
                row[var(r, c)] = f.one();
                rows.push(row);
            }
        }
    }
    let space = if rows.is_empty() {
        Subspace::full(f, n * n)
    } else {
        Matrix::from_rows(f, rows)?.kernel()
    };
    Ok(HalfDerivationSpace { which, parity, n, space })
}

/// Direct check of the defining law on all basis pairs, including the parity
/// condition on `D`.
pub fn is_half_derivation(a: &SuperAlgebra, which: Product, parity: u8, d: &Matrix) -> bool {
    let n = a.dim();
    if d.rows() != n || d.cols() != n {
        return false;
    }
    let homogeneous = (0..n).all(|r| {
        (0..n).all(|c| d[(r, c)].is_zero() || a.parity_of_basis(r) == (a.parity_of_basis(c) + parity) % 2)
    });
    if !homogeneous {
        return false;
    }
    let f = a.field();
    let apply = |e: &Element| Element::new(f, d.mul_vec(e.coords()));
    let two = f.from_i64(2);
    (0..n).all(|i| {
        let ei = a.basis_element(i);
        let sign = sign_flip(parity, a.parity_of_basis(i));
        (0..n).all(|j| {
            let ej = a.basis_element(j);
            let lhs = apply(&a.mul(which, &ei, &ej)).scale(&two);
            let rhs = a.mul(which, &apply(&ei), &ej).add(&a.mul(which, &ei, &apply(&ej)).signed(sign));
            lhs == rhs
        })
    })
}

/// Whether every left multiplication `P_a` by a basis vector is a
/// ½-superderivation of the bracket of parity `|a|`.
pub fn scalar_half_derivations_check(a: &SuperAlgebra) -> Result<bool> {
    let mut spaces: [Option<HalfDerivationSpace>; 2] = [None, None];
    for i in 0..a.dim() {
        let p = a.parity_of_basis(i);
        if spaces[p as usize].is_none() {
            spaces[p as usize] = Some(half_derivations(a, Product::Bracket, p)?);
        }
        let space = spaces[p as usize].as_ref().expect("filled above");
        if !space.contains(&a.basis_left_operator(Product::Circ, i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A commutative-product pattern with unknown coefficients: each entry sets
/// `e_i ∘ e_j` (and the supersymmetric partner) to `slot value · e_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CircTemplate {
    pub slots: usize,
    pub entries: Vec<(usize, usize, usize, usize)>,
}

pub const DEFAULT_SLOT_LIMIT: usize = 6;

/// Every assignment of field elements to the template slots (in
/// lexicographic order of residues) for which the bracket of `lie` together
/// with the resulting product passes the transposed Poisson axioms.
pub fn brute_force_tp_family(lie: &SuperAlgebra, template: &CircTemplate, slot_limit: usize) -> Result<Vec<Vec<Scalar>>> {
    let f = lie.field();
    let Some(p) = f.order() else {
        return Err(Error::Unsupported("brute-force search needs a finite field".into()));
    };
    if template.slots > slot_limit {
        return Err(Error::Budget(format!("{} slots exceed the limit of {slot_limit}", template.slots)));
    }
    if let Some(&(_, _, _, s)) = template.entries.iter().find(|e| e.3 >= template.slots) {
        return Err(Error::Input(format!("template refers to slot {s} of {}", template.slots)));
    }
    let elems = f.elements();
    let mut digits = vec![0usize; template.slots];
    let mut found = Vec::new();
    loop {
        let values: Vec<Scalar> = digits.iter().map(|&d| elems[d].clone()).collect();
        let mut b = SuperAlgebra::builder(lie.name(), f, lie.parity().to_vec());
        for (i, j, k, c) in lie.table(Product::Bracket) {
            b = b.bracket(i, j, k, c);
        }
        for &(i, j, k, s) in &template.entries {
            b = b.circ_sym_scalar(i, j, k, values[s].clone());
        }
        let candidate = b.build()?;
        if identities::is_tp(&candidate) {
            found.push(values);
        }
        if !identities::advance(&mut digits, p as usize) {
            return Ok(found);
        }
    }
}
