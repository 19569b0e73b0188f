use super::GroupPresentation;
use crate::error::{Error, Result};
use crate::exactlin::{tensor, Field, LinMap, Space, Vector};
use crate::hopf::{check_bialgebra, check_hopf, AlgebraData, BialgebraData, CoalgebraData, HopfData};
use crate::report::Report;

/// Runs the bialgebra and Hopf checks, refusing anything that fails.
pub fn certify_hopf(mut hd: HopfData, subject: &str) -> Result<HopfData> {
    let mut r = Report::new(subject);
    r.absorb("", check_bialgebra(&hd.bialgebra));
    r.absorb("", check_hopf(&mut hd));
    r.into_result()?;
    Ok(hd)
}

/// `k[G]` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupPresentation, field: Field) -> Result<HopfData> {
    let n = g.order();
    let space = Space::new(field, g.labels.iter().cloned())?;
    let algebra = AlgebraData::from_table(space.clone(), Vector::unit(g.identity, field), |a, b| {
        Vector::unit(g.mul(a, b), field)
    })?;
    let s2 = space.tensor(&space);
    let comult = LinMap::from_fn(&space, &s2, |a| Vector::unit(a * n + a, field));
    let counit = LinMap::from_fn(&space, &Space::scalars(field), |_| Vector::unit(0, field));
    let coalgebra = CoalgebraData::new(space.clone(), comult, counit)?;
    let antipode = LinMap::from_fn(&space, &space, |a| Vector::unit(g.inv(a), field));
    let hd = HopfData::new(BialgebraData::new(algebra, coalgebra)?, antipode);
    certify_hopf(hd, "group algebra")
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler_h4(field: Field) -> Result<HopfData> {
    if field.characteristic() == 2 {
        return Err(Error::Invalid("Sweedler's algebra needs characteristic ≠ 2".into()));
    }
    let space = Space::new(field, ["1", "g", "x", "gx"])?;
    // basis index = a + 2b for g^a x^b
    let split = |i: usize| (i % 2, i / 2);
    let algebra = AlgebraData::from_table(space.clone(), Vector::unit(0, field), |i, j| {
        let ((a, b), (c, d)) = (split(i), split(j));
        if b + d >= 2 {
            return Vector::zero();
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        Vector::term((a + c) % 2 + 2 * (b + d), field.from_i64(sign))
    })?;
    let one = field.one();
    let t = |a: usize, b: usize| (a * 4 + b, one.clone());
    let comult_cols = vec![
        Vector::from_terms([t(0, 0)]),
        Vector::from_terms([t(1, 1)]),
        Vector::from_terms([t(2, 0), t(1, 2)]),
        Vector::from_terms([t(3, 1), t(0, 3)]),
    ];
    let s2 = space.tensor(&space);
    let comult = LinMap::new(space.clone(), s2, comult_cols)?;
    let counit = LinMap::from_fn(&space, &Space::scalars(field), |i| {
        if i < 2 {
            Vector::unit(0, field)
        } else {
            Vector::zero()
        }
    });
    let coalgebra = CoalgebraData::new(space.clone(), comult, counit)?;
    let antipode = LinMap::new(
        space.clone(),
        space.clone(),
        vec![
            Vector::unit(0, field),
            Vector::unit(1, field),
            Vector::term(3, field.from_i64(-1)),
            Vector::unit(2, field),
        ],
    )?;
    let hd = HopfData::new(BialgebraData::new(algebra, coalgebra)?, antipode);
    certify_hopf(hd, "Sweedler H4")
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial_hopf(field: Field) -> HopfData {
    let g = GroupPresentation::cyclic(1);
    group_algebra(&g, field).expect("trivial group algebra certifies")
}

/// Element `Σ c_i e_i ⊗ e_j` from labelled terms, for tests and fixtures.
pub fn tensor_terms(space: &Space, terms: &[(&str, &str, i64)]) -> Vector {
    let n = space.dim();
    let f = space.field();
    Vector::from_terms(terms.iter().map(|(a, b, c)| {
        let i = space.index_of(a).unwrap_or_else(|| panic!("unknown label {a}"));
        let j = space.index_of(b).unwrap_or_else(|| panic!("unknown label {b}"));
        (tensor::flatten(&[i, j], &[n, n]), f.from_i64(*c))
    }))
}
