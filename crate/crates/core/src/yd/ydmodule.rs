use super::{check_comodule, check_module, ComoduleData, ModuleData};
use crate::error::{Error, Result};
use crate::exactlin::{tensor, Accumulator, LinMap, Space, Vector};
use crate::hopf::BialgebraData;
use crate::report::{leg_labels, Check, Report};

/// Left module and right comodule on the same space over the same host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    pub module: ModuleData,
    pub comodule: ComoduleData,
}

impl YDModule {
    pub fn new(module: ModuleData, comodule: ComoduleData) -> Result<YDModule> {
        if module.space.dim() != comodule.space.dim() {
            return Err(Error::DimensionMismatch("action and coaction on different spaces".into()));
        }
        if module.host != comodule.host {
            return Err(Error::Invalid("action and coaction over different hosts".into()));
        }
        let comodule = ComoduleData::new(&module.host, module.space.clone(), comodule.coaction)?;
        Ok(YDModule { module, comodule })
    }

    /// Builds and certifies with `check_yd`.
    pub fn certified(module: ModuleData, comodule: ComoduleData) -> Result<YDModule> {
        let m = YDModule::new(module, comodule)?;
        check_yd(&m).into_result()?;
        Ok(m)
    }

    pub fn host(&self) -> &BialgebraData {
        &self.module.host
    }

    pub fn space(&self) -> &Space {
        &self.module.space
    }

    pub fn dim(&self) -> usize {
        self.module.space.dim()
    }

    /// The one-dimensional unit object: trivial action and coaction.
    pub fn unit_object(host: &BialgebraData) -> YDModule {
        let k = Space::scalars(host.field());
        YDModule {
            module: ModuleData::trivial(host, k.clone()),
            comodule: ComoduleData::trivial(host, k),
        }
    }
}

/// `(h₁▷m₀) ⊗ h₂m₁ = (h₂▷m)₀ ⊗ (h₂▷m)₁h₁` as maps `H⊗M → M⊗H`.
pub fn yd_condition_sides(y: &YDModule) -> (LinMap, LinMap) {
    let h = y.host();
    let (nh, dm) = (h.dim(), y.dim());
    let f = h.field();
    let hm = h.space().tensor(y.space());
    let mh = y.space().tensor(h.space());
    let lhs = LinMap::par_from_fn(&hm, &mh, |k| {
        let (hi, mi) = (k / dm, k % dm);
        let mut acc = Accumulator::new(dm * nh);
        for (d, c) in h.coalgebra.comult.column(hi).iter() {
            let (h1, h2) = (d / nh, d % nh);
            for (r, e) in y.comodule.coaction.column(mi).iter() {
                let (m0, m1) = (r / nh, r % nh);
                let left = y.module.act_basis(h1, m0);
                let right = h.algebra.mul_basis(h2, m1);
                acc.add_scaled(&tensor::tensor_vec(left, right, nh), &(c * e));
            }
        }
        acc.finish()
    });
    let rhs = LinMap::par_from_fn(&hm, &mh, |k| {
        let (hi, mi) = (k / dm, k % dm);
        let mut acc = Accumulator::new(dm * nh);
        for (d, c) in h.coalgebra.comult.column(hi).iter() {
            let (h1, h2) = (d / nh, d % nh);
            let moved = y.comodule.coact(y.module.act_basis(h2, mi));
            let h1v = Vector::unit(h1, f);
            for (r, e) in moved.iter() {
                let (x0, x1) = (r / nh, r % nh);
                let right = h.mul(&Vector::unit(x1, f), &h1v);
                acc.add_scaled(&tensor::tensor_vec(&Vector::unit(x0, f), &right, nh), &(c * e));
            }
        }
        acc.finish()
    });
    (lhs, rhs)
}

/// The Yetter–Drinfeld compatibility on every basis pair `(h, m)`.
pub fn check_yd_condition(y: &YDModule) -> Check {
    let (lhs, rhs) = yd_condition_sides(y);
    Check::maps_equal("YD condition", &lhs, &rhs, |k| leg_labels(lhs.domain(), k))
}

/// Module axioms, comodule axioms and the YD condition.
pub fn check_yd(y: &YDModule) -> Report {
    let mut r = Report::new("YD module");
    r.absorb("", check_module(&y.module));
    r.absorb("", check_comodule(&y.comodule));
    r.push(check_yd_condition(y));
    r
}

fn same_host(m: &YDModule, n: &YDModule) -> Result<()> {
    if m.host() != n.host() {
        return Err(Error::Invalid("YD modules over different hosts".into()));
    }
    Ok(())
}

/// Diagonal action on `M⊗N` through `Δ`.
pub fn diagonal_action(m: &ModuleData, n: &ModuleData) -> ModuleData {
    let h = &m.host;
    let space = m.space.tensor(&n.space);
    let hm = h.space().tensor(&space);
    let dmn = space.dim();
    let per_h: Vec<LinMap> = (0..h.dim())
        .map(|i| crate::twist::act_pair(h.coalgebra.comult.column(i), m, n))
        .collect();
    let action = LinMap::from_fn(&hm, &space, |k| per_h[k / dmn].column(k % dmn).clone());
    ModuleData::new(h, space, action).unwrap()
}

/// `m⊗n ↦ (m₀⊗n₀) ⊗ n₁m₁`.
pub fn tensor_coaction(m: &ComoduleData, n: &ComoduleData) -> ComoduleData {
    let h = &m.host;
    let nh = h.dim();
    let (dm, dn) = (m.dim(), n.dim());
    let space = m.space.tensor(&n.space);
    let target = space.tensor(h.space());
    let coaction = LinMap::from_fn(&space, &target, |k| {
        let (i, j) = (k / dn, k % dn);
        let mut acc = Accumulator::new(dm * dn * nh);
        for (r, c) in m.coaction.column(i).iter() {
            let (m0, m1) = (r / nh, r % nh);
            for (s, d) in n.coaction.column(j).iter() {
                let (n0, n1) = (s / nh, s % nh);
                let base = (m0 * dn + n0) * nh;
                for (t, e) in h.algebra.mul_basis(n1, m1).iter() {
                    acc.add_term(base + t, &(c * d) * e);
                }
            }
        }
        acc.finish()
    });
    ComoduleData::new(h, space, coaction).unwrap()
}

/// `M⊗N` with diagonal action and coaction `m⊗n ↦ m₀⊗n₀⊗n₁m₁`; certified.
pub fn yd_tensor(m: &YDModule, n: &YDModule) -> Result<YDModule> {
    same_host(m, n)?;
    let out = YDModule {
        module: diagonal_action(&m.module, &n.module),
        comodule: tensor_coaction(&m.comodule, &n.comodule),
    };
    check_yd(&out).into_result()?;
    Ok(out)
}

/// `σ_{M,N}: m⊗n ↦ n₀ ⊗ (n₁▷m)`.
pub fn prebraid_map(m: &YDModule, n: &YDModule) -> LinMap {
    let h = m.host();
    let nh = h.dim();
    let (dm, dn) = (m.dim(), n.dim());
    let f = h.field();
    let source = m.space().tensor(n.space());
    let target = n.space().tensor(m.space());
    LinMap::from_fn(&source, &target, |k| {
        let (i, j) = (k / dn, k % dn);
        let mut acc = Accumulator::new(dn * dm);
        for (s, d) in n.comodule.coaction.column(j).iter() {
            let (n0, n1) = (s / nh, s % nh);
            let moved = m.module.act_basis(n1, i);
            acc.add_scaled(&tensor::tensor_vec(&Vector::unit(n0, f), moved, dm), d);
        }
        acc.finish()
    })
}

/// Module- and comodule-morphism identities for `phi: M → N`.
pub fn check_yd_morphism(name: &str, phi: &LinMap, m: &YDModule, n: &YDModule) -> Report {
    let mut r = Report::new(name);
    let h = m.host();
    let (nh, dm) = (h.dim(), m.dim());
    let hm = h.space().tensor(m.space());
    let lhs = LinMap::from_fn(&hm, n.space(), |k| phi.apply(m.module.action.column(k)));
    let rhs = LinMap::from_fn(&hm, n.space(), |k| {
        n.module.act(&Vector::unit(k / dm, h.field()), phi.column(k % dm))
    });
    r.push(Check::maps_equal(format!("{name} module morphism"), &lhs, &rhs, |k| leg_labels(&hm, k)));
    let nh_space = n.space().tensor(h.space());
    let phi_id = LinMap::from_fn(m.comodule.coaction.codomain(), &nh_space, |k| {
        tensor::tensor_vec(phi.column(k / nh), &Vector::unit(k % nh, h.field()), nh)
    });
    let lhs = phi_id.compose(&m.comodule.coaction);
    let rhs = n.comodule.coaction.compose(phi);
    r.push(Check::maps_equal(format!("{name} comodule morphism"), &lhs, &rhs, |k| {
        vec![m.space().label(k)]
    }));
    r
}

/// `σ_{M,N}` verified as a morphism `M⊗N → N⊗M` of YD modules.
pub fn prebraid(m: &YDModule, n: &YDModule) -> Result<LinMap> {
    same_host(m, n)?;
    let sigma = prebraid_map(m, n);
    let mn = yd_tensor(m, n)?;
    let nm = yd_tensor(n, m)?;
    check_yd_morphism("prebraiding", &sigma, &mn, &nm).into_result()?;
    Ok(sigma)
}

/// Reports whether `σ_{M,N}` is invertible (never required).
pub fn prebraid_is_invertible(sigma: &LinMap) -> bool {
    sigma.inverse().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{conjugation_yd, group_algebra, GroupPresentation};
    use crate::exactlin::Field;

    fn s3() -> (GroupPresentation, BialgebraData, YDModule) {
        let g = GroupPresentation::symmetric3();
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        let a = conjugation_yd(&g, &h).unwrap();
        (g, h, a.yd)
    }

    #[test]
    fn conjugation_module_satisfies_yd() {
        let (_, _, m) = s3();
        assert!(check_yd(&m).passed());
    }

    #[test]
    fn trivial_structures_satisfy_yd() {
        let (_, h, _) = s3();
        let sp = Space::numbered(h.field(), "m", 3);
        let m = YDModule::certified(ModuleData::trivial(&h, sp.clone()), ComoduleData::trivial(&h, sp)).unwrap();
        assert!(check_yd(&m).passed());
    }

    #[test]
    fn coaction_without_inverse_still_satisfies_yd_on_grouplikes() {
        // both sides of the YD condition at h, g are hgh⁻¹ ⊗ hg
        let (g, h, m) = s3();
        let f = h.field();
        let coaction = LinMap::from_fn(m.space(), &m.space().tensor(h.space()), |x| Vector::unit(x * 6 + x, f));
        let bad = YDModule::new(m.module.clone(), ComoduleData::new(&h, m.space().clone(), coaction).unwrap()).unwrap();
        assert!(check_yd_condition(&bad).passed);
        let (lhs, _) = yd_condition_sides(&bad);
        let t = g.index_of("(12)").unwrap();
        let c3 = g.index_of("(123)").unwrap();
        let conj = g.mul(g.mul(t, c3), g.inv(t));
        assert_eq!(lhs.column(t * 6 + c3), &Vector::unit(conj * 6 + g.mul(t, c3), f));
        // it is not a YD algebra: ρ(ab) = ab⊗ab but a₀b₀⊗b₁a₁ = ab⊗ba
        let alg = crate::yd::YDAlgebra::new(bad, h.algebra.mult.clone(), h.one().clone()).unwrap();
        let r = crate::yd::check_yd_algebra(&alg);
        assert!(!r.check("comodule algebra ρ(ab) = a₀b₀⊗b₁a₁").unwrap().passed);
        assert!(!crate::yd::check_braided_commutative(&alg).passed());
    }

    #[test]
    fn tensoring_with_unit_object_keeps_coordinates() {
        let (_, h, m) = s3();
        let u = YDModule::unit_object(&h);
        let mu = yd_tensor(&m, &u).unwrap();
        assert_eq!(mu.module.action.columns(), m.module.action.columns());
        assert_eq!(mu.comodule.coaction.columns(), m.comodule.coaction.columns());
    }

    #[test]
    fn conjugation_tensor_square_has_reversed_coaction_leg() {
        let (g, h, m) = s3();
        let mm = yd_tensor(&m, &m).unwrap();
        let f = h.field();
        for a in 0..6 {
            for b in 0..6 {
                // a⊗b ↦ a⊗b⊗b⁻¹a⁻¹
                let leg = g.mul(g.inv(b), g.inv(a));
                let expected = Vector::unit((a * 6 + b) * 6 + leg, f);
                assert_eq!(mm.comodule.coaction.column(a * 6 + b), &expected);
            }
        }
    }

    #[test]
    fn trivial_coactions_tensor_trivially() {
        let (_, h, _) = s3();
        let f = h.field();
        let a = Space::numbered(f, "a", 2);
        let b = Space::numbered(f, "b", 3);
        let m = YDModule::new(ModuleData::trivial(&h, a.clone()), ComoduleData::trivial(&h, a)).unwrap();
        let n = YDModule::new(ModuleData::trivial(&h, b.clone()), ComoduleData::trivial(&h, b)).unwrap();
        let mn = yd_tensor(&m, &n).unwrap();
        for k in 0..6 {
            assert_eq!(mn.comodule.coaction.column(k), &Vector::unit(k * 6, f));
        }
    }

    #[test]
    fn prebraid_with_trivial_coaction_is_flip() {
        let (_, h, m) = s3();
        let b = Space::numbered(h.field(), "b", 2);
        let n = YDModule::new(ModuleData::trivial(&h, b.clone()), ComoduleData::trivial(&h, b)).unwrap();
        let sigma = prebraid(&m, &n).unwrap();
        for i in 0..6 {
            for j in 0..2 {
                assert_eq!(sigma.column(i * 2 + j), &Vector::unit(j * 6 + i, h.field()));
            }
        }
    }

    #[test]
    fn conjugation_prebraid_moves_by_inverse_conjugation() {
        let (g, h, m) = s3();
        let sigma = prebraid(&m, &m).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                let moved = g.mul(g.mul(g.inv(y), x), y);
                assert_eq!(sigma.column(x * 6 + y), &Vector::unit(y * 6 + moved, h.field()));
            }
        }
        assert!(prebraid_is_invertible(&sigma));
    }

    #[test]
    fn tensor_product_is_strictly_associative() {
        let (_, _, m) = s3();
        let left = yd_tensor(&yd_tensor(&m, &m).unwrap(), &m).unwrap();
        let right = yd_tensor(&m, &yd_tensor(&m, &m).unwrap()).unwrap();
        assert_eq!(left.comodule.coaction.columns(), right.comodule.coaction.columns());
        assert_eq!(left.module.action.columns(), right.module.action.columns());
    }
}
