//! Slice helpers for coordinate vectors.

use super::scalar::{FieldSpec, Scalar};

pub fn zeros(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `v += c * w`
pub fn add_scaled(v: &mut [Scalar], c: &Scalar, w: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in v.iter_mut().zip(w) {
        if !b.is_zero() {
            *a = &*a + &(c * b);
        }
    }
}

/// `v -= c * w`
pub fn sub_scaled(v: &mut [Scalar], c: &Scalar, w: &[Scalar]) {
    add_scaled(v, &-c, w);
}

pub fn scale_in_place(v: &mut [Scalar], c: &Scalar) {
    for a in v.iter_mut() {
        *a = &*a * c;
    }
}
