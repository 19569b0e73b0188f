use super::{check_comodule, ComoduleData, ModuleData};
use crate::error::Result;
use crate::exactlin::{tensor, Accumulator, LinMap, Vector};
use crate::hopf::{delta_op, BialgebraData};
use crate::report::{Check, Report};
use crate::twist::{delta_left, delta_right, split_terms};

/// Universal R-element with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub host: BialgebraData,
    pub r: Vector,
    pub rinv: Vector,
}

impl RMatrix {
    /// Certifies `r` with `check_rmatrix`.
    pub fn new(host: &BialgebraData, r: Vector) -> Result<RMatrix> {
        check_rmatrix(host, &r).into_result()?;
        let rinv = host.square().invert(&r)?;
        Ok(RMatrix {
            host: host.clone(),
            r,
            rinv,
        })
    }
}

/// Invertibility, the two hexagon identities and `RΔ(h) = Δ^op(h)R` for every
/// basis `h`.
pub fn check_rmatrix(h: &BialgebraData, r: &Vector) -> Report {
    let mut rep = Report::new("R-matrix");
    let sq = h.square();
    match sq.invert(r) {
        Ok(_) => rep.push(Check::pass("invertible")),
        Err(e) => rep.push(Check::fail("invertible", e.to_string())),
    };
    let cube = h.cube();
    let s3 = cube.space().clone();
    let r12 = cube.embed_pair(0, 1, r);
    let r13 = cube.embed_pair(0, 2, r);
    let r23 = cube.embed_pair(1, 2, r);
    rep.push(Check::vectors_equal(
        "hexagon (Δ⊗id)R = R₁₃R₂₃",
        vec![],
        &s3,
        &delta_left(h, r),
        &cube.mul(&r13, &r23),
    ));
    rep.push(Check::vectors_equal(
        "hexagon (id⊗Δ)R = R₁₃R₁₂",
        vec![],
        &s3,
        &delta_right(h, r),
        &cube.mul(&r13, &r12),
    ));
    let s2 = sq.space().clone();
    let mut c = Check::pass("RΔ(h) = Δ^op(h)R");
    for i in 0..h.dim() {
        let e = h.basis(i);
        let lhs = sq.mul(r, &h.delta(&e));
        let rhs = sq.mul(&delta_op(h, &e), r);
        c = Check::vectors_equal("RΔ(h) = Δ^op(h)R", vec![h.space().label(i)], &s2, &lhs, &rhs);
        if !c.passed {
            break;
        }
    }
    rep.push(c);
    rep
}

/// `a ↦ Σ (R₂▷a) ⊗ R₁`; certified as a comodule.
pub fn coaction_from_r(rm: &RMatrix, m: &ModuleData) -> Result<ComoduleData> {
    let h = &rm.host;
    let nh = h.dim();
    let dm = m.dim();
    let terms = split_terms(&rm.r, nh);
    let mh = m.space.tensor(h.space());
    let coaction = LinMap::from_fn(&m.space, &mh, |i| {
        let mut acc = Accumulator::new(dm * nh);
        for (p, q, c) in &terms {
            acc.add_scaled(&tensor::tensor_vec(m.act_basis(*q, i), &h.basis(*p), nh), c);
        }
        acc.finish()
    });
    let out = ComoduleData::new(h, m.space.clone(), coaction)?;
    check_comodule(&out).into_result()?;
    Ok(out)
}

/// `m⊗n ↦ Σ (R₂▷n) ⊗ (R₁▷m)`.
pub fn r_braiding(rm: &RMatrix, m: &ModuleData, n: &ModuleData) -> LinMap {
    let nh = rm.host.dim();
    let (dm, dn) = (m.dim(), n.dim());
    let terms = split_terms(&rm.r, nh);
    let source = m.space.tensor(&n.space);
    let target = n.space.tensor(&m.space);
    LinMap::from_fn(&source, &target, |k| {
        let (i, j) = (k / dn, k % dn);
        let mut acc = Accumulator::new(dn * dm);
        for (p, q, c) in &terms {
            acc.add_scaled(&tensor::tensor_vec(n.act_basis(*q, j), m.act_basis(*p, i), dm), c);
        }
        acc.finish()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{bicharacter_structures, conjugation_yd, group_algebra, tensor_terms, GroupPresentation};
    use crate::exactlin::{Field, Space};
    use crate::yd::{check_yd, prebraid_map, YDModule};

    fn z2() -> BialgebraData {
        group_algebra(&GroupPresentation::cyclic(2), Field::Rationals).unwrap().bialgebra
    }

    fn sign_rep(h: &BialgebraData) -> ModuleData {
        let f = h.field();
        let sp = Space::new(f, ["v"]).unwrap();
        let action = LinMap::from_fn(&h.space().tensor(&sp), &sp, |k| Vector::term(0, f.from_i64(if k == 0 { 1 } else { -1 })));
        ModuleData::new(h, sp, action).unwrap()
    }

    #[test]
    fn unit_r_is_triangular() {
        let h = z2();
        assert!(check_rmatrix(&h, &h.square().one()).passed());
    }

    #[test]
    fn z2_nontrivial_r_passes() {
        let h = z2();
        let f = h.field();
        let r = tensor_terms(h.space(), &[("1", "1", 1), ("1", "g", 1), ("g", "1", 1), ("g", "g", -1)])
            .scale(&f.ratio(1, 2).unwrap());
        assert!(check_rmatrix(&h, &r).passed());
        // matches the bicharacter construction for M = [[1]]
        let (_, rm) = bicharacter_structures(&GroupPresentation::cyclic(2), &h, &[vec![1]]).unwrap();
        assert_eq!(rm.unwrap().r, r);
    }

    #[test]
    fn one_tensor_g_fails_hexagon() {
        let h = z2();
        let r = tensor_terms(h.space(), &[("1", "g", 1)]);
        let rep = check_rmatrix(&h, &r);
        assert!(rep.check("invertible").unwrap().passed);
        assert!(!rep.check("hexagon (Δ⊗id)R = R₁₃R₂₃").unwrap().passed);
    }

    #[test]
    fn unit_r_gives_trivial_coaction() {
        let h = z2();
        let rm = RMatrix::new(&h, h.square().one()).unwrap();
        let reg = ModuleData::regular(&h);
        let c = coaction_from_r(&rm, &reg).unwrap();
        for i in 0..2 {
            assert_eq!(c.coaction.column(i), &Vector::unit(i * 2, h.field()));
        }
    }

    #[test]
    fn sign_representation_gets_coaction_v_tensor_g() {
        let h = z2();
        let f = h.field();
        let r = tensor_terms(h.space(), &[("1", "1", 1), ("1", "g", 1), ("g", "1", 1), ("g", "g", -1)])
            .scale(&f.ratio(1, 2).unwrap());
        let rm = RMatrix::new(&h, r).unwrap();
        let m = sign_rep(&h);
        let c = coaction_from_r(&rm, &m).unwrap();
        assert_eq!(c.coaction.column(0), &Vector::unit(1, f));
        let y = YDModule::new(m, c).unwrap();
        assert!(check_yd(&y).passed());
    }

    #[test]
    fn prebraid_matches_r_formula() {
        let h = z2();
        let f = h.field();
        let r = tensor_terms(h.space(), &[("1", "1", 1), ("1", "g", 1), ("g", "1", 1), ("g", "g", -1)])
            .scale(&f.ratio(1, 2).unwrap());
        let rm = RMatrix::new(&h, r).unwrap();
        let reg = ModuleData::regular(&h);
        let sign = sign_rep(&h);
        let m = YDModule::new(reg.clone(), coaction_from_r(&rm, &reg).unwrap()).unwrap();
        let n = YDModule::new(sign.clone(), coaction_from_r(&rm, &sign).unwrap()).unwrap();
        assert_eq!(prebraid_map(&m, &n), r_braiding(&rm, &reg, &sign));
        assert_eq!(prebraid_map(&n, &m), r_braiding(&rm, &sign, &reg));
    }

    #[test]
    fn unit_r_coaction_differs_from_conjugation_coaction() {
        let g = GroupPresentation::symmetric3();
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        let conj = conjugation_yd(&g, &h).unwrap();
        let rm = RMatrix::new(&h, h.square().one()).unwrap();
        let c = coaction_from_r(&rm, &conj.yd.module).unwrap();
        assert_ne!(c.coaction, conj.yd.comodule.coaction);
    }
}
