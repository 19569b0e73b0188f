//! Exact row reduction.
//!
//! Rows are sparse vectors whose pivot is their *largest* nonzero index. A fully
//! reduced basis under that convention is unique for a given row space, so the
//! dense and sparse paths below agree bit for bit.

use super::{Field, Scalar, Vector};

/// Incrementally maintained echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<Option<Vector>>,
    rank: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Echelon {
        Echelon {
            rows: vec![None; dim],
            rank: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows[i].is_some()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        while let Some((i, c)) = v.last() {
            match &self.rows[i] {
                Some(row) => {
                    let c = -c;
                    v = v.add_scaled(row, &c);
                }
                None => {
                    let inv = c.inv().unwrap();
                    self.rows[i] = Some(v.scale(&inv));
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &Vector) -> Vector {
        self.reduce_below(v.clone(), usize::MAX)
    }

    fn reduce_below(&self, mut v: Vector, mut bound: usize) -> Vector {
        loop {
            let hit = v
                .iter()
                .rev()
                .filter(|(i, _)| *i < bound)
                .find(|(i, _)| self.rows[*i].is_some())
                .map(|(i, c)| (i, -c));
            match hit {
                Some((i, c)) => {
                    v = v.add_scaled(self.rows[i].as_ref().unwrap(), &c);
                    bound = i;
                }
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Fully reduced rows keyed by pivot, in increasing pivot order.
    pub fn into_rref(mut self) -> Vec<(usize, Vector)> {
        let pivots: Vec<usize> = (0..self.rows.len()).filter(|&i| self.rows[i].is_some()).collect();
        for &p in &pivots {
            let row = self.rows[p].take().unwrap();
            let reduced = self.reduce_below(row, p);
            self.rows[p] = Some(reduced);
        }
        pivots
            .into_iter()
            .map(|p| (p, self.rows[p].take().unwrap()))
            .collect()
    }
}

pub fn rank(vectors: &[Vector], dim: usize) -> usize {
    let mut e = Echelon::new(dim);
    for v in vectors {
        e.insert(v.clone());
    }
    e.rank()
}

/// Dense Gauss–Jordan elimination with rightmost pivots. Returns the same
/// fully reduced rows as `Echelon::into_rref`.
pub fn dense_rref(vectors: &[Vector], dim: usize, field: Field) -> Vec<(usize, Vector)> {
    let mut m: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.to_dense(dim, field)).collect();
    let mut top = 0;
    let mut pivots = Vec::new();
    for col in (0..dim).rev() {
        if top == m.len() {
            break;
        }
        let Some(r) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, r);
        let inv = m[top][col].inv().unwrap();
        for x in m[top].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != top && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..dim {
                    if !m[top][k].is_zero() {
                        let d = &m[top][k] * &f;
                        m[r][k] = &m[r][k] - &d;
                    }
                }
            }
        }
        pivots.push((col, top));
        top += 1;
    }
    let mut out: Vec<(usize, Vector)> = pivots
        .into_iter()
        .map(|(col, r)| (col, Vector::from_dense(&m[r])))
        .collect();
    out.sort_by_key(|(p, _)| *p);
    out
}

/// Solves `Σ x_j cols[j] = b` exactly.
///
/// Each column is tagged with its own unit vector in extra low coordinates, so
/// after elimination the tag part of the remainder records the solution.
pub struct Solver {
    offset: usize,
    echelon: Echelon,
    rank: usize,
}

impl Solver {
    pub fn new(cols: &[Vector], codim: usize) -> Solver {
        let n = cols.len();
        let mut echelon = Echelon::new(n + codim);
        let mut rank = 0;
        for (j, c) in cols.iter().enumerate() {
            let field = match c.iter().next() {
                Some((_, x)) => x.field(),
                None => continue,
            };
            let mut terms: Vec<(usize, Scalar)> = vec![(j, field.one())];
            terms.extend(c.iter().map(|(i, x)| (i + n, x.clone())));
            let ext = Vector::from_sorted_unchecked(terms);
            let reduced = echelon.reduce(&ext);
            if reduced.max_index().map(|m| m >= n).unwrap_or(false) {
                echelon.insert(reduced);
                rank += 1;
            }
        }
        Solver {
            offset: n,
            echelon,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        let n = self.offset;
        let ext = b.map_indices(|i| i + n);
        let rem = self.echelon.reduce(&ext);
        if rem.max_index().map(|m| m >= n).unwrap_or(false) {
            return None;
        }
        Some(rem.neg())
    }
}
