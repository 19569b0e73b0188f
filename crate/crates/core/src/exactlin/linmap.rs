use super::{reduce, tensor, Accumulator, Space, Vector};
use crate::error::{Error, Result};

/// Linear map between based spaces, stored column by column: column `i` is the
/// image of basis vector `i`. Equality of maps is exact equality of matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    domain: Space,
    codomain: Space,
    cols: Vec<Vector>,
}

impl LinMap {
    pub fn new(domain: Space, codomain: Space, cols: Vec<Vector>) -> Result<LinMap> {
        if cols.len() != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} columns for a domain of dim {}",
                cols.len(),
                domain.dim()
            )));
        }
        for (i, c) in cols.iter().enumerate() {
            if let Some(m) = c.max_index() {
                if m >= codomain.dim() {
                    return Err(Error::DimensionMismatch(format!(
                        "column {i} has coordinate {m} outside codomain of dim {}",
                        codomain.dim()
                    )));
                }
            }
        }
        Ok(LinMap { domain, codomain, cols })
    }

    pub fn from_fn(domain: &Space, codomain: &Space, f: impl FnMut(usize) -> Vector) -> LinMap {
        let cols: Vec<Vector> = (0..domain.dim()).map(f).collect();
        LinMap::new(domain.clone(), codomain.clone(), cols).expect("column outside codomain")
    }

    /// `from_fn` with columns computed in parallel; the result is identical.
    pub fn par_from_fn(domain: &Space, codomain: &Space, f: impl Fn(usize) -> Vector + Sync + Send) -> LinMap {
        use rayon::prelude::*;
        let cols: Vec<Vector> = (0..domain.dim()).into_par_iter().map(f).collect();
        LinMap::new(domain.clone(), codomain.clone(), cols).expect("column outside codomain")
    }

    pub fn identity(space: &Space) -> LinMap {
        let f = space.field();
        LinMap::from_fn(space, space, |i| Vector::unit(i, f))
    }

    pub fn zero(domain: &Space, codomain: &Space) -> LinMap {
        LinMap::from_fn(domain, codomain, |_| Vector::zero())
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn column(&self, i: usize) -> &Vector {
        &self.cols[i]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        match v.nnz() {
            0 => Vector::zero(),
            1 => {
                let (i, c) = v.iter().next().unwrap();
                self.cols[i].scale(c)
            }
            _ => {
                let mut acc = Accumulator::new(self.codomain.dim());
                for (i, c) in v.iter() {
                    acc.add_scaled(&self.cols[i], c);
                }
                acc.finish()
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(other.codomain.dim(), self.domain.dim(), "composition dimension mismatch");
        LinMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    /// Kronecker product `self ⊗ other` under the row-major convention.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        let db = other.codomain.dim();
        let mut cols = Vec::with_capacity(self.cols.len() * other.cols.len());
        for a in &self.cols {
            for b in &other.cols {
                cols.push(tensor::tensor_vec(a, b, db));
            }
        }
        LinMap {
            domain: self.domain.tensor(&other.domain),
            codomain: self.codomain.tensor(&other.codomain),
            cols,
        }
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        LinMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.domain.dim() == self.codomain.dim()
            && self.cols.iter().enumerate().all(|(i, c)| {
                c.nnz() == 1 && c.get(i).map(|x| x.is_one()).unwrap_or(false)
            })
    }

    /// Same matrix, relabelled spaces (dimensions must agree).
    pub fn with_spaces(&self, domain: &Space, codomain: &Space) -> LinMap {
        assert_eq!(domain.dim(), self.domain.dim());
        assert_eq!(codomain.dim(), self.codomain.dim());
        LinMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            cols: self.cols.clone(),
        }
    }

    /// First column where the two matrices differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<(usize, Vector, Vector)> {
        self.cols
            .iter()
            .zip(&other.cols)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i, a.clone(), b.clone()))
    }

    pub fn rank(&self) -> usize {
        reduce::rank(&self.cols, self.codomain.dim())
    }

    /// Exact two-sided inverse, if one exists.
    pub fn inverse(&self) -> Option<LinMap> {
        if self.domain.dim() != self.codomain.dim() {
            return None;
        }
        let field = self.domain.field();
        let solver = reduce::Solver::new(&self.cols, self.codomain.dim());
        if solver.rank() != self.domain.dim() {
            return None;
        }
        let cols: Option<Vec<Vector>> = (0..self.codomain.dim())
            .map(|i| solver.solve(&Vector::unit(i, field)))
            .collect();
        let inv = LinMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            cols: cols?,
        };
        (inv.compose(self).is_identity() && self.compose(&inv).is_identity()).then_some(inv)
    }

    /// Copy with `delta` added to the matrix entry (row `row`, column `col`).
    pub fn perturbed(&self, col: usize, row: usize, delta: &super::Scalar) -> LinMap {
        let mut out = self.clone();
        out.cols[col] = out.cols[col].add_scaled(&Vector::unit(row, delta.field()), delta);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn inverse_of_upper_triangular() {
        let q = Field::Rationals;
        let s = Space::numbered(q, "e", 3);
        let m = LinMap::from_fn(&s, &s, |i| {
            Vector::from_terms((0..=i).map(|j| (j, q.from_i64((i + j + 1) as i64))))
        });
        let inv = m.inverse().unwrap();
        assert!(inv.compose(&m).is_identity());
        assert!(m.compose(&inv).is_identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let q = Field::Rationals;
        let s = Space::numbered(q, "e", 2);
        let m = LinMap::from_fn(&s, &s, |_| Vector::from_terms([(0, q.one()), (1, q.one())]));
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
    }
}
