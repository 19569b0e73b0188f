use crate::error::{Error, Result};
use crate::exactlin::{tensor, Field, LinMap, Scalar, Space, Vector};
use crate::report::{Check, Report};

/// Counital coalgebra: `comult` sends `e_i` to `Δ(e_i) ∈ C⊗C`, `counit` maps
/// into the one-dimensional space of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    pub space: Space,
    pub comult: LinMap,
    pub counit: LinMap,
}

impl CoalgebraData {
    pub fn new(space: Space, comult: LinMap, counit: LinMap) -> Result<CoalgebraData> {
        let n = space.dim();
        if comult.domain().dim() != n || comult.codomain().dim() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication is {}→{}, expected {n}→{}",
                comult.domain().dim(),
                comult.codomain().dim(),
                n * n
            )));
        }
        if counit.domain().dim() != n || counit.codomain().dim() != 1 {
            return Err(Error::DimensionMismatch("counit must map to the scalars".into()));
        }
        let f = space.field();
        let comult = comult.with_spaces(&space, &space.tensor(&space));
        let counit = counit.with_spaces(&space, &Space::scalars(f));
        Ok(CoalgebraData { space, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn delta(&self, v: &Vector) -> Vector {
        self.comult.apply(v)
    }

    pub fn eps(&self, v: &Vector) -> Scalar {
        self.counit.apply(v).coeff(0, self.field())
    }

    pub fn eps_basis(&self, i: usize) -> Scalar {
        self.counit.column(i).coeff(0, self.field())
    }

    /// Same counit, comultiplication followed by the flip.
    pub fn co_opposite(&self) -> CoalgebraData {
        let n = self.dim();
        let comult = LinMap::from_fn(&self.space, self.comult.codomain(), |i| {
            tensor::permute(self.comult.column(i), &[n, n], &[1, 0])
        });
        CoalgebraData {
            space: self.space.clone(),
            comult,
            counit: self.counit.clone(),
        }
    }

    /// `(Δ⊗id)∘Δ` as a map `C → C⊗C⊗C`.
    pub fn delta2_left(&self) -> LinMap {
        let n = self.dim();
        let s3 = Space::tensor_all(&[self.space.clone(), self.space.clone(), self.space.clone()]);
        LinMap::from_fn(&self.space, &s3, |i| tensor::apply_leg(self.comult.column(i), &[n, n], 0, &self.comult))
    }

    /// `(id⊗Δ)∘Δ` as a map `C → C⊗C⊗C`.
    pub fn delta2_right(&self) -> LinMap {
        let n = self.dim();
        let s3 = Space::tensor_all(&[self.space.clone(), self.space.clone(), self.space.clone()]);
        LinMap::from_fn(&self.space, &s3, |i| tensor::apply_leg(self.comult.column(i), &[n, n], 1, &self.comult))
    }
}

/// Coassociativity and the two counit laws on every basis element.
pub fn check_coalgebra(c: &CoalgebraData) -> Report {
    let mut r = Report::new("coalgebra");
    let n = c.dim();
    let at = |i: usize| vec![c.space.label(i)];
    r.push(Check::maps_equal("coassociativity", &c.delta2_left(), &c.delta2_right(), at));
    let id = LinMap::identity(&c.space);
    let left = LinMap::from_fn(&c.space, &c.space, |i| tensor::apply_leg(c.comult.column(i), &[n, n], 0, &c.counit));
    let right = LinMap::from_fn(&c.space, &c.space, |i| tensor::apply_leg(c.comult.column(i), &[n, n], 1, &c.counit));
    let mut counit = Check::maps_equal("counit", &left, &id, at);
    if counit.passed {
        counit = Check::maps_equal("counit", &right, &id, at);
    }
    r.push(counit);
    r
}
