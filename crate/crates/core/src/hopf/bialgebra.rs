use super::{check_algebra, check_coalgebra, AlgebraData, CoalgebraData, TensorPower};
use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap, Scalar, Space, Vector};
use crate::report::{leg_labels, Check, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
}

impl BialgebraData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData) -> Result<BialgebraData> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dim {}, coalgebra has dim {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch(
                algebra.field().descriptor(),
                coalgebra.field().descriptor(),
            ));
        }
        let coalgebra = CoalgebraData::new(algebra.space.clone(), coalgebra.comult, coalgebra.counit)?;
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn space(&self) -> &Space {
        &self.algebra.space
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn one(&self) -> &Vector {
        &self.algebra.unit
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn delta(&self, v: &Vector) -> Vector {
        self.coalgebra.delta(v)
    }

    pub fn eps(&self, v: &Vector) -> Scalar {
        self.coalgebra.eps(v)
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::unit(i, self.field())
    }

    /// `H⊗H` with componentwise product.
    pub fn square(&self) -> TensorPower<'_> {
        TensorPower::new(&self.algebra, 2)
    }

    pub fn cube(&self) -> TensorPower<'_> {
        TensorPower::new(&self.algebra, 3)
    }

    /// Same algebra, comultiplication replaced.
    pub fn with_comult(&self, comult: LinMap) -> BialgebraData {
        BialgebraData {
            algebra: self.algebra.clone(),
            coalgebra: CoalgebraData {
                space: self.coalgebra.space.clone(),
                comult: comult.with_spaces(self.space(), &self.space().tensor(self.space())),
                counit: self.coalgebra.counit.clone(),
            },
        }
    }
}

/// The seven bialgebra axioms, each on every basis tuple.
pub fn check_bialgebra(b: &BialgebraData) -> Report {
    let mut r = Report::new("bialgebra");
    r.absorb("", check_algebra(&b.algebra));
    r.absorb("", check_coalgebra(&b.coalgebra));
    let n = b.dim();
    let sq = b.square();
    let s2 = b.space().tensor(b.space());
    let lhs = LinMap::par_from_fn(&s2, &s2, |k| b.delta(b.algebra.mul_basis(k / n, k % n)));
    let rhs = LinMap::par_from_fn(&s2, &s2, |k| {
        sq.mul(b.coalgebra.comult.column(k / n), b.coalgebra.comult.column(k % n))
    });
    r.push(Check::maps_equal("Δ multiplicative", &lhs, &rhs, |k| leg_labels(&s2, k)));
    r.push(Check::vectors_equal("Δ unital", vec!["1".into()], &s2, &b.delta(b.one()), &sq.one()));
    let f = b.field();
    let mut eps = Check::pass("ε algebra map");
    'outer: for i in 0..n {
        for j in 0..n {
            let l = b.eps(b.algebra.mul_basis(i, j));
            let rr = &b.coalgebra.eps_basis(i) * &b.coalgebra.eps_basis(j);
            if l != rr {
                eps = Check::with_witness(
                    "ε algebra map",
                    crate::report::Witness {
                        at: vec![b.space().label(i), b.space().label(j)],
                        lhs: l.to_string(),
                        rhs: rr.to_string(),
                    },
                );
                break 'outer;
            }
        }
    }
    if eps.passed && b.eps(b.one()) != f.one() {
        eps = Check::fail("ε algebra map", format!("ε(1) = {}", b.eps(b.one())));
    }
    r.push(eps);
    r
}
