//! Index bookkeeping for tensor products of based spaces.
//!
//! Composite indices are row-major: for factors of dims `[d0, d1, ..., dk]`
//! the tuple `(i0, i1, ..., ik)` has index `((i0 * d1 + i1) * d2 + i2) ...`.

use super::{Accumulator, LinMap, Vector};

pub fn flatten(idx: &[usize], dims: &[usize]) -> usize {
    debug_assert_eq!(idx.len(), dims.len());
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

pub fn unflatten(mut i: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (k, &d) in dims.iter().enumerate().rev() {
        out[k] = i % d;
        i /= d;
    }
    out
}

/// Coordinates of `a ⊗ b`, where `b` lives in a space of dim `db`.
pub fn tensor_vec(a: &Vector, b: &Vector, db: usize) -> Vector {
    let mut entries = Vec::with_capacity(a.nnz() * b.nnz());
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            entries.push((i * db + j, x * y));
        }
    }
    Vector::from_sorted_unchecked(entries)
}

pub fn tensor_all(parts: &[&Vector], dims: &[usize]) -> Vector {
    let mut acc = parts[0].clone();
    for (p, d) in parts[1..].iter().zip(&dims[1..]) {
        acc = tensor_vec(&acc, p, *d);
    }
    acc
}

/// Applies `map` to tensor leg `leg` of `v`, whose factor dims are `dims`.
pub fn apply_leg(v: &Vector, dims: &[usize], leg: usize, map: &LinMap) -> Vector {
    debug_assert_eq!(dims[leg], map.domain().dim());
    let mut out_dims = dims.to_vec();
    out_dims[leg] = map.codomain().dim();
    let total: usize = out_dims.iter().product();
    let mut acc = Accumulator::new(total);
    for (i, c) in v.iter() {
        let mut idx = unflatten(i, dims);
        for (j, d) in map.column(idx[leg]).iter() {
            idx[leg] = j;
            acc.add_product(flatten(&idx, &out_dims), c, d);
        }
    }
    acc.finish()
}

/// Reorders tensor legs: output leg `k` is input leg `perm[k]`.
pub fn permute(v: &Vector, dims: &[usize], perm: &[usize]) -> Vector {
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    v.map_indices(|i| {
        let idx = unflatten(i, dims);
        let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        flatten(&out, &out_dims)
    })
}

/// `v` viewed in the space with an extra leg inserted at `leg`, filled with `w`.
pub fn insert_leg(v: &Vector, dims: &[usize], leg: usize, w: &Vector, dw: usize) -> Vector {
    let mut out_dims = dims.to_vec();
    out_dims.insert(leg, dw);
    let total: usize = out_dims.iter().product();
    let mut acc = Accumulator::new(total);
    for (i, c) in v.iter() {
        let mut idx = unflatten(i, dims);
        idx.insert(leg, 0);
        for (j, d) in w.iter() {
            idx[leg] = j;
            acc.add_product(flatten(&idx, &out_dims), c, d);
        }
    }
    acc.finish()
}
