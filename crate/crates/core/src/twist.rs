//! Drinfeld twists: the cocycle conditions, inversion, twisted coproducts.

use crate::error::{Error, Result};
use crate::exactlin::{tensor, LinMap, Vector};
use crate::hopf::{check_bialgebra, BialgebraData};
use crate::report::{Check, Report};
use crate::yd::{check_module, ModuleData};

/// An invertible counital 2-cocycle `F ∈ H⊗H` together with `F⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub host: BialgebraData,
    pub f: Vector,
    pub finv: Vector,
}

impl Twist {
    /// Certifies `f` with `check_twist`.
    pub fn new(host: &BialgebraData, f: Vector) -> Result<Twist> {
        let (report, finv) = twist_report(host, &f);
        report.into_result()?;
        Ok(Twist {
            host: host.clone(),
            f,
            finv: finv.expect("certified twist is invertible"),
        })
    }

    pub fn trivial(host: &BialgebraData) -> Twist {
        let one = host.square().one();
        Twist {
            host: host.clone(),
            f: one.clone(),
            finv: one,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.f == self.host.square().one()
    }

    /// `F` split into `(leg1, leg2, coefficient)` basis terms.
    pub fn terms(&self) -> Vec<(usize, usize, crate::exactlin::Scalar)> {
        split_terms(&self.f, self.host.dim())
    }

    pub fn inv_terms(&self) -> Vec<(usize, usize, crate::exactlin::Scalar)> {
        split_terms(&self.finv, self.host.dim())
    }
}

pub(crate) fn split_terms(v: &Vector, n: usize) -> Vec<(usize, usize, crate::exactlin::Scalar)> {
    v.iter().map(|(k, c)| (k / n, k % n, c.clone())).collect()
}

/// `(Δ⊗id)X` for `X ∈ H⊗H`.
pub fn delta_left(h: &BialgebraData, x: &Vector) -> Vector {
    let n = h.dim();
    tensor::apply_leg(x, &[n, n], 0, &h.coalgebra.comult)
}

/// `(id⊗Δ)X` for `X ∈ H⊗H`.
pub fn delta_right(h: &BialgebraData, x: &Vector) -> Vector {
    let n = h.dim();
    tensor::apply_leg(x, &[n, n], 1, &h.coalgebra.comult)
}

fn counit_leg(h: &BialgebraData, x: &Vector, leg: usize) -> Vector {
    let n = h.dim();
    tensor::apply_leg(x, &[n, n], leg, &h.coalgebra.counit)
}

pub fn invert_twist(h: &BialgebraData, f: &Vector) -> Result<Vector> {
    h.square()
        .invert(f)
        .map_err(|e| Error::NotInvertible(format!("twist: {e}")))
}

/// Invertibility, counitality of `F` and `F⁻¹`, and all four cocycle
/// conditions, each reported separately.
pub fn check_twist(h: &BialgebraData, f: &Vector) -> Report {
    twist_report(h, f).0
}

fn twist_report(h: &BialgebraData, f: &Vector) -> (Report, Option<Vector>) {
    let mut r = Report::new("twist");
    let n = h.dim();
    if f.max_index().is_some_and(|m| m >= n * n) {
        r.push(Check::fail("element of H⊗H", "coordinates outside H⊗H"));
        return (r, None);
    }
    let finv = match invert_twist(h, f) {
        Ok(v) => {
            r.push(Check::pass("invertible"));
            v
        }
        Err(e) => {
            r.push(Check::fail("invertible", e.to_string()));
            return (r, None);
        }
    };
    let one = h.one().clone();
    for (name, x) in [("counital F", f), ("counital F⁻¹", &finv)] {
        let mut c = Check::vectors_equal(name, vec!["ε⊗id".into()], h.space(), &counit_leg(h, x, 0), &one);
        if c.passed {
            c = Check::vectors_equal(name, vec!["id⊗ε".into()], h.space(), &counit_leg(h, x, 1), &one);
        }
        r.push(c);
    }
    let cube = h.cube();
    let s3 = cube.space().clone();
    let f1 = cube.embed_pair(0, 1, f);
    let f2 = cube.embed_pair(1, 2, f);
    let g1 = cube.embed_pair(0, 1, &finv);
    let g2 = cube.embed_pair(1, 2, &finv);
    let (df_l, df_r) = (delta_left(h, f), delta_right(h, f));
    let (dg_l, dg_r) = (delta_left(h, &finv), delta_right(h, &finv));
    let conditions = [
        ("cocycle (F⊗1)(Δ⊗id)F = (1⊗F)(id⊗Δ)F", cube.mul(&f1, &df_l), cube.mul(&f2, &df_r)),
        (
            "cocycle ((id⊗Δ)F⁻¹)(1⊗F⁻¹) = ((Δ⊗id)F⁻¹)(F⁻¹⊗1)",
            cube.mul(&dg_r, &g2),
            cube.mul(&dg_l, &g1),
        ),
        (
            "mixed cocycle (F⁻¹⊗1)(1⊗F) = ((Δ⊗id)F)((id⊗Δ)F⁻¹)",
            cube.mul(&g1, &f2),
            cube.mul(&df_l, &dg_r),
        ),
        (
            "mixed cocycle (1⊗F⁻¹)(F⊗1) = ((id⊗Δ)F)((Δ⊗id)F⁻¹)",
            cube.mul(&g2, &f1),
            cube.mul(&df_r, &dg_l),
        ),
    ];
    for (name, lhs, rhs) in conditions {
        r.push(Check::vectors_equal(name, vec![], &s3, &lhs, &rhs));
    }
    (r, Some(finv))
}

/// `X Δ(·) Y` as a comultiplication.
pub(crate) fn conjugated_comult(h: &BialgebraData, x: &Vector, y: &Vector) -> LinMap {
    let sq = h.square();
    let s2 = h.space().tensor(h.space());
    LinMap::from_fn(h.space(), &s2, |i| sq.mul_all(&[x, h.coalgebra.comult.column(i), y]))
}

/// `H^F`: same algebra, `Δ^F(h) = F Δ(h) F⁻¹`, same counit; certified.
pub fn twist_bialgebra(h: &BialgebraData, t: &Twist) -> Result<BialgebraData> {
    let hf = h.with_comult(conjugated_comult(h, &t.f, &t.finv));
    let mut r = Report::new("twisted bialgebra");
    r.absorb("", check_bialgebra(&hf));
    r.into_result()?;
    Ok(hf)
}

/// `F⁻¹` as a twist of `H^F`; twisting `H^F` by it gives back `H`.
pub fn inverse_twist(t: &Twist) -> Result<Twist> {
    let hf = twist_bialgebra(&t.host, t)?;
    Twist::new(&hf, t.finv.clone())
}

/// Action of `X = Σ X¹⊗X² ∈ H⊗H` on `M⊗N`, `m⊗n ↦ Σ X¹▷m ⊗ X²▷n`.
pub fn act_pair(x: &Vector, m: &ModuleData, n: &ModuleData) -> LinMap {
    let nh = m.host.dim();
    let (dm, dn) = (m.space.dim(), n.space.dim());
    let space = m.space.tensor(&n.space);
    let terms = split_terms(x, nh);
    LinMap::from_fn(&space, &space, |k| {
        let (i, j) = (k / dn, k % dn);
        let mut acc = crate::exactlin::Accumulator::new(dm * dn);
        for (a, b, c) in &terms {
            let p = tensor::tensor_vec(m.act_basis(*a, i), n.act_basis(*b, j), dn);
            acc.add_scaled(&p, c);
        }
        acc.finish()
    })
}

/// `M_F ⊗^F N_F`: the space `M⊗N` with `h ↦ Δ^F(h)` acting diagonally, as an
/// `H^F`-module.
pub fn twisted_tensor_action(t: &Twist, m: &ModuleData, n: &ModuleData) -> Result<ModuleData> {
    let hf = twist_bialgebra(&t.host, t)?;
    let space = m.space.tensor(&n.space);
    let hm = hf.space().tensor(&space);
    let dmn = space.dim();
    let per_h: Vec<LinMap> = (0..hf.dim())
        .map(|i| act_pair(hf.coalgebra.comult.column(i), m, n))
        .collect();
    let action = LinMap::from_fn(&hm, &space, |k| per_h[k / dmn].column(k % dmn).clone());
    let out = ModuleData::new(&hf, space, action)?;
    check_module(&out).into_result()?;
    Ok(out)
}
