use crate::error::{Error, Result};
use crate::exactlin::reduce::Solver;
use crate::exactlin::{tensor, Accumulator, Field, LinMap, Space, Vector};
use crate::report::{leg_labels, Check, Report};

/// Unital algebra given by structure constants: `mult` sends `e_i ⊗ e_j` to
/// `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub space: Space,
    pub mult: LinMap,
    pub unit: Vector,
}

impl AlgebraData {
    pub fn new(space: Space, mult: LinMap, unit: Vector) -> Result<AlgebraData> {
        let n = space.dim();
        if mult.domain().dim() != n * n || mult.codomain().dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "multiplication is {}→{}, expected {}→{n}",
                mult.domain().dim(),
                mult.codomain().dim(),
                n * n
            )));
        }
        if unit.max_index().is_some_and(|m| m >= n) {
            return Err(Error::DimensionMismatch("unit outside the algebra".into()));
        }
        let mult = mult.with_spaces(&space.tensor(&space), &space);
        Ok(AlgebraData { space, mult, unit })
    }

    /// Builds the multiplication from a basis product table.
    pub fn from_table(space: Space, unit: Vector, table: impl Fn(usize, usize) -> Vector) -> Result<AlgebraData> {
        let n = space.dim();
        let mult = LinMap::from_fn(&space.tensor(&space), &space, |k| table(k / n, k % n));
        AlgebraData::new(space, mult, unit)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn one(&self) -> &Vector {
        &self.unit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        self.mult.column(i * self.dim() + j)
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let n = self.dim();
        if a.nnz() == 1 && b.nnz() == 1 {
            let (i, x) = a.iter().next().unwrap();
            let (j, y) = b.iter().next().unwrap();
            return self.mul_basis(i, j).scale(&(x * y));
        }
        let mut acc = Accumulator::new(n);
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(self.mul_basis(i, j), &(x * y));
            }
        }
        acc.finish()
    }

    pub fn mul_all(&self, factors: &[&Vector]) -> Vector {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// `v ↦ u v`.
    pub fn left_mult(&self, u: &Vector) -> LinMap {
        let f = self.field();
        LinMap::from_fn(&self.space, &self.space, |j| self.mul(u, &Vector::unit(j, f)))
    }

    /// `v ↦ v u`.
    pub fn right_mult(&self, u: &Vector) -> LinMap {
        let f = self.field();
        LinMap::from_fn(&self.space, &self.space, |j| self.mul(&Vector::unit(j, f), u))
    }

    /// Same space, product `a ·op b = b · a`.
    pub fn opposite(&self) -> AlgebraData {
        let n = self.dim();
        let mult = LinMap::from_fn(self.mult.domain(), &self.space, |k| self.mul_basis(k % n, k / n).clone());
        AlgebraData {
            space: self.space.clone(),
            mult,
            unit: self.unit.clone(),
        }
    }

    /// The tensor product algebra with componentwise multiplication.
    pub fn tensor(&self, other: &AlgebraData) -> AlgebraData {
        let (n, m) = (self.dim(), other.dim());
        let space = self.space.tensor(&other.space);
        let nm = n * m;
        let mult = LinMap::from_fn(&space.tensor(&space), &space, |k| {
            let (x, y) = (k / nm, k % nm);
            tensor::tensor_vec(self.mul_basis(x / m, y / m), other.mul_basis(x % m, y % m), m)
        });
        let unit = tensor::tensor_vec(&self.unit, &other.unit, m);
        AlgebraData { space, mult, unit }
    }

    /// Structure constants of `φ⁻¹ ∘ μ ∘ (φ ⊗ φ)` for a linear isomorphism `φ`
    /// onto this algebra.
    pub fn transport(&self, phi: &LinMap, phi_inv: &LinMap) -> AlgebraData {
        let n = self.dim();
        let space = phi.domain().clone();
        let mult = LinMap::from_fn(&space.tensor(&space), &space, |k| {
            phi_inv.apply(&self.mul(phi.column(k / n), phi.column(k % n)))
        });
        AlgebraData {
            unit: phi_inv.apply(&self.unit),
            space,
            mult,
        }
    }
}

/// Associativity on every basis triple and the two-sided unit law on every
/// basis element.
pub fn check_algebra(alg: &AlgebraData) -> Report {
    let mut r = Report::new("algebra");
    let n = alg.dim();
    let f = alg.field();
    let s3 = Space::tensor_all(&[alg.space.clone(), alg.space.clone(), alg.space.clone()]);
    let lhs = LinMap::par_from_fn(&s3, &alg.space, |t| {
        let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
        alg.mul(alg.mul_basis(i, j), &Vector::unit(k, f))
    });
    let rhs = LinMap::par_from_fn(&s3, &alg.space, |t| {
        let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
        alg.mul(&Vector::unit(i, f), alg.mul_basis(j, k))
    });
    r.push(Check::maps_equal("associativity", &lhs, &rhs, |t| leg_labels(&s3, t)));
    let id = LinMap::identity(&alg.space);
    let left = alg.left_mult(&alg.unit);
    let right = alg.right_mult(&alg.unit);
    let mut unit = Check::maps_equal("unit", &left, &id, |t| vec!["1".into(), alg.space.label(t)]);
    if unit.passed {
        unit = Check::maps_equal("unit", &right, &id, |t| vec![alg.space.label(t), "1".into()]);
    }
    r.push(unit);
    r
}

/// Two-sided inverse of `u`, found by solving `u v = 1` and checking `v u = 1`.
pub fn invert_in_algebra(alg: &AlgebraData, u: &Vector) -> Result<Vector> {
    invert_by(alg.dim(), alg.field(), alg.one(), u, |a, b| alg.mul(a, b))
}

pub(crate) fn invert_by(
    dim: usize,
    field: Field,
    one: &Vector,
    u: &Vector,
    mul: impl Fn(&Vector, &Vector) -> Vector,
) -> Result<Vector> {
    let cols: Vec<Vector> = (0..dim).map(|j| mul(u, &Vector::unit(j, field))).collect();
    let solver = Solver::new(&cols, dim);
    let v = solver
        .solve(one)
        .ok_or_else(|| Error::NotInvertible("no right inverse exists".into()))?;
    if &mul(&v, u) != one || &mul(u, &v) != one {
        return Err(Error::NotInvertible("right inverse is not two-sided".into()));
    }
    Ok(v)
}

/// `A^{⊗legs}` with componentwise products, evaluated lazily.
#[derive(Clone, Debug)]
pub struct TensorPower<'a> {
    pub alg: &'a AlgebraData,
    pub legs: usize,
    dims: Vec<usize>,
    space: Space,
}

impl<'a> TensorPower<'a> {
    pub fn new(alg: &'a AlgebraData, legs: usize) -> TensorPower<'a> {
        assert!(legs >= 1);
        TensorPower {
            alg,
            legs,
            dims: vec![alg.dim(); legs],
            space: Space::tensor_all(&vec![alg.space.clone(); legs]),
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn one(&self) -> Vector {
        let ones: Vec<&Vector> = vec![&self.alg.unit; self.legs];
        tensor::tensor_all(&ones, &self.dims)
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        if self.legs == 1 {
            return self.alg.mul(x, y);
        }
        let total = self.space.dim();
        let mut acc = Accumulator::new(total);
        for (i, a) in x.iter() {
            let ii = tensor::unflatten(i, &self.dims);
            for (j, b) in y.iter() {
                let jj = tensor::unflatten(j, &self.dims);
                let parts: Vec<&Vector> = ii.iter().zip(&jj).map(|(&p, &q)| self.alg.mul_basis(p, q)).collect();
                if parts.iter().any(|p| p.is_zero()) {
                    continue;
                }
                let prod = tensor::tensor_all(&parts, &self.dims);
                acc.add_scaled(&prod, &(a * b));
            }
        }
        acc.finish()
    }

    pub fn mul_all(&self, factors: &[&Vector]) -> Vector {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn invert(&self, u: &Vector) -> Result<Vector> {
        invert_by(self.space.dim(), self.alg.field(), &self.one(), u, |a, b| self.mul(a, b))
    }

    /// `v` placed in leg `leg`, with `1` in every other leg.
    pub fn embed(&self, leg: usize, v: &Vector) -> Vector {
        let parts: Vec<&Vector> = (0..self.legs).map(|k| if k == leg { v } else { &self.alg.unit }).collect();
        tensor::tensor_all(&parts, &self.dims)
    }

    /// An element of `A^{⊗2}` placed in legs `(a, b)` (in that order), with
    /// `1` elsewhere. Requires `a != b`.
    pub fn embed_pair(&self, a: usize, b: usize, v: &Vector) -> Vector {
        assert!(a != b && a < self.legs && b < self.legs);
        let n = self.alg.dim();
        let mut acc = Accumulator::new(self.space.dim());
        let unit = &self.alg.unit;
        for (k, c) in v.iter() {
            let (p, q) = (k / n, k % n);
            let (pv, qv) = (Vector::unit(p, self.alg.field()), Vector::unit(q, self.alg.field()));
            let parts: Vec<&Vector> = (0..self.legs)
                .map(|l| if l == a { &pv } else if l == b { &qv } else { unit })
                .collect();
            acc.add_scaled(&tensor::tensor_all(&parts, &self.dims), c);
        }
        acc.finish()
    }
}
