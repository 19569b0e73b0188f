use crate::error::{Error, Result};
use crate::exactlin::{tensor, Accumulator, LinMap, Space, Vector};
use crate::hopf::{check_algebra, AlgebraData, BialgebraData};
use crate::report::{leg_labels, Check, Report};
use crate::twist::{act_pair, Twist};
use crate::yd::{ModuleData, YDAlgebra};

/// `A♯H` on the space `A⊗H` with `(a♯h)(b♯k) = a(h₁▷b)♯h₂k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashAlgebra {
    pub a: YDAlgebra,
    pub host: BialgebraData,
    pub algebra: AlgebraData,
}

impl SmashAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn space(&self) -> &Space {
        &self.algebra.space
    }

    /// `a ↦ a♯1`.
    pub fn embed_base(&self) -> LinMap {
        let nh = self.host.dim();
        LinMap::from_fn(self.a.space(), self.space(), |i| {
            tensor::tensor_vec(&Vector::unit(i, self.host.field()), self.host.one(), nh)
        })
    }

    /// `h ↦ 1♯h`.
    pub fn embed_host(&self) -> LinMap {
        let nh = self.host.dim();
        LinMap::from_fn(self.host.space(), self.space(), |p| {
            tensor::tensor_vec(&self.a.unit, &Vector::unit(p, self.host.field()), nh)
        })
    }
}

pub(crate) fn smash_unchecked(a: &YDAlgebra) -> SmashAlgebra {
    let h = a.host();
    let (d, nh) = (a.dim(), h.dim());
    let space = a.space().tensor(h.space());
    let n = d * nh;
    let base = a.algebra();
    let mult = LinMap::par_from_fn(&space.tensor(&space), &space, |k| {
        let (x, y) = (k / n, k % n);
        let (i, p) = (x / nh, x % nh);
        let (j, q) = (y / nh, y % nh);
        let mut acc = Accumulator::new(n);
        for (t, c) in h.coalgebra.comult.column(p).iter() {
            let (h1, h2) = (t / nh, t % nh);
            let left = base.mul(&Vector::unit(i, h.field()), a.yd.module.act_basis(h1, j));
            let right = h.algebra.mul_basis(h2, q);
            acc.add_scaled(&tensor::tensor_vec(&left, right, nh), c);
        }
        acc.finish()
    });
    let unit = tensor::tensor_vec(&a.unit, h.one(), nh);
    SmashAlgebra {
        a: a.clone(),
        host: h.clone(),
        algebra: AlgebraData { space, mult, unit },
    }
}

/// Builds `A♯H` and certifies it with `check_smash`.
pub fn smash_product(a: &YDAlgebra, h: &BialgebraData) -> Result<SmashAlgebra> {
    if a.host() != h {
        return Err(Error::Invalid("A is a module algebra over a different bialgebra".into()));
    }
    let s = smash_unchecked(a);
    check_smash(&s).into_result()?;
    Ok(s)
}

/// Associativity and unit on all basis elements, and the two embeddings
/// `a ↦ a♯1`, `h ↦ 1♯h` being unital algebra maps.
pub fn check_smash(s: &SmashAlgebra) -> Report {
    let mut r = Report::new("smash product");
    r.absorb("", check_algebra(&s.algebra));
    let base = s.a.algebra();
    r.absorb("A → A♯H", check_embedding(&base, &s.algebra, &s.embed_base()));
    r.absorb("H → A♯H", check_embedding(&s.host.algebra, &s.algebra, &s.embed_host()));
    r
}

fn check_embedding(src: &AlgebraData, dst: &AlgebraData, phi: &LinMap) -> Report {
    let mut r = Report::new("embedding");
    let n = src.dim();
    let ss = src.space.tensor(&src.space);
    let lhs = LinMap::from_fn(&ss, &dst.space, |k| phi.apply(src.mult.column(k)));
    let rhs = LinMap::from_fn(&ss, &dst.space, |k| dst.mul(phi.column(k / n), phi.column(k % n)));
    r.push(Check::maps_equal("multiplicative", &lhs, &rhs, |k| leg_labels(&ss, k)));
    r.push(Check::vectors_equal("unital", vec!["1".into()], &dst.space, &phi.apply(&src.unit), &dst.unit));
    r
}

/// `ζ_{A,H}: a♯^F h ↦ (F̄¹▷a)♯F̄²h` from `A_F♯H^F` to `A♯H`.
pub fn zeta_smash_map(a: &YDAlgebra, t: &Twist) -> LinMap {
    act_pair(&t.finv, &a.yd.module, &ModuleData::regular(&t.host))
}

/// `ζ_{A,H}` certified as a unital algebra isomorphism `A_F♯H^F → A♯H`.
pub fn zeta_smash_iso(a: &YDAlgebra, h: &BialgebraData, t: &Twist) -> Result<LinMap> {
    if a.host() != h || &t.host != h {
        return Err(Error::Invalid("A, H and the twist must share the bialgebra".into()));
    }
    let hf = crate::yd::twisted_host(t);
    let af = crate::yd::twisted_algebra_over(a, t, &hf);
    let (left, right) = (smash_unchecked(&af), smash_unchecked(a));
    let zeta = zeta_smash_map(a, t);
    check_algebra_iso("ζ_{A,H}", &zeta, &left.algebra, &right.algebra).into_result()?;
    Ok(zeta)
}

/// Multiplicative on all basis pairs, unital, invertible.
pub(crate) fn check_algebra_iso(name: &str, phi: &LinMap, src: &AlgebraData, dst: &AlgebraData) -> Report {
    let mut r = Report::new(name);
    let n = src.dim();
    let ss = src.space.tensor(&src.space);
    let lhs = LinMap::par_from_fn(&ss, &dst.space, |k| phi.apply(src.mult.column(k)));
    let rhs = LinMap::par_from_fn(&ss, &dst.space, |k| dst.mul(phi.column(k / n), phi.column(k % n)));
    r.push(Check::maps_equal(format!("{name} multiplicative"), &lhs, &rhs, |k| leg_labels(&ss, k)));
    r.push(Check::vectors_equal(
        format!("{name} unital"),
        vec!["1".into()],
        &dst.space,
        &phi.apply(&src.unit),
        &dst.unit,
    ));
    r.push(Check::from_bool(
        format!("{name} invertible"),
        phi.inverse().is_some(),
        "singular linear map",
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{adjoint_yd, coboundary_twist, conjugation_yd, group_algebra, sweedler_h4, GroupPresentation};
    use crate::exactlin::Field;
    use crate::yd::trivial_yd_algebra;

    #[test]
    fn smash_with_the_ground_field_is_the_host() {
        let hd = sweedler_h4(Field::Rationals).unwrap();
        let h = &hd.bialgebra;
        let s = smash_product(&trivial_yd_algebra(h), h).unwrap();
        assert!((0..16).all(|k| s.algebra.mult.column(k) == h.algebra.mult.column(k)));
        assert_eq!(s.algebra.unit, h.algebra.unit);
    }

    #[test]
    fn smash_on_s3_conjugation() {
        let g = GroupPresentation::symmetric3();
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        let a = conjugation_yd(&g, &h).unwrap();
        let s = smash_product(&a, &h).unwrap();
        assert_eq!(s.dim(), 36);
        let f = h.field();
        // (1♯g)(x♯1) = gxg⁻¹♯g
        for p in 0..6 {
            for x in 0..6 {
                let lhs = s.algebra.mul(s.embed_host().column(p), s.embed_base().column(x));
                let c = g.mul(g.mul(p, x), g.inv(p));
                assert_eq!(lhs, Vector::unit(c * 6 + p, f));
            }
        }
    }

    #[test]
    fn smash_refuses_foreign_host() {
        let hd = sweedler_h4(Field::Rationals).unwrap();
        let a = adjoint_yd(&hd).unwrap();
        let other = group_algebra(&GroupPresentation::cyclic(4), Field::Rationals).unwrap().bialgebra;
        assert!(smash_product(&a, &other).is_err());
    }

    #[test]
    fn zeta_is_an_algebra_isomorphism_for_sweedler() {
        let hd = sweedler_h4(Field::Rationals).unwrap();
        let h = &hd.bialgebra;
        let a = adjoint_yd(&hd).unwrap();
        let t = coboundary_twist(h, &h.one().add(&h.basis(2))).unwrap();
        let zeta = zeta_smash_iso(&a, h, &t).unwrap();
        assert_eq!(zeta.domain().dim(), 16);
        assert!(!zeta.is_identity());
    }
}
