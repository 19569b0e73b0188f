use super::GroupPresentation;
use crate::error::{Error, Result};
use crate::exactlin::{tensor, Accumulator, LinMap, Space, Vector};
use crate::hopf::{BialgebraData, HopfData};
use crate::report::Report;
use crate::yd::{
    check_braided_commutative, check_yd_algebra, ComoduleData, ModuleData, YDAlgebra, YDModule,
};

/// Refuses YD algebras that fail the YD-algebra axioms or braided
/// commutativity.
pub fn certify_braided(a: YDAlgebra, subject: &str) -> Result<YDAlgebra> {
    let mut r = Report::new(subject);
    r.absorb("", check_yd_algebra(&a));
    r.absorb("", check_braided_commutative(&a));
    r.into_result()?;
    Ok(a)
}

fn check_group_host(g: &GroupPresentation, host: &BialgebraData) -> Result<()> {
    let n = g.order();
    if host.dim() != n || (0..n).any(|a| (0..n).any(|b| host.algebra.mul_basis(a, b) != &host.basis(g.mul(a, b)))) {
        return Err(Error::Invalid("host is not the group algebra of this group".into()));
    }
    Ok(())
}

/// `k[G]` with `h▷g = hgh⁻¹` and `ρ(g) = g⊗g⁻¹`.
pub fn conjugation_yd(g: &GroupPresentation, host: &BialgebraData) -> Result<YDAlgebra> {
    check_group_host(g, host)?;
    let n = g.order();
    let f = host.field();
    let space = host.space().clone();
    let hm = host.space().tensor(&space);
    let action = LinMap::from_fn(&hm, &space, |k| {
        let (h, x) = (k / n, k % n);
        Vector::unit(g.mul(g.mul(h, x), g.inv(h)), f)
    });
    let coaction = LinMap::from_fn(&space, &space.tensor(host.space()), |x| Vector::unit(x * n + g.inv(x), f));
    let yd = YDModule::new(
        ModuleData::new(host, space.clone(), action)?,
        ComoduleData::new(host, space.clone(), coaction)?,
    )?;
    let a = YDAlgebra::new(yd, host.algebra.mult.clone(), host.one().clone())?;
    certify_braided(a, "conjugation YD algebra")
}

/// `H` with `h▷a = h₁ a S(h₂)` and `ρ(a) = a₂ ⊗ S⁻¹(a₁)`.
pub fn adjoint_yd(hd: &HopfData) -> Result<YDAlgebra> {
    let sinv = hd
        .antipode_inverse
        .as_ref()
        .ok_or_else(|| Error::Invalid("adjoint YD algebra needs S⁻¹; run check_hopf first".into()))?;
    let host = &hd.bialgebra;
    let n = host.dim();
    let space = host.space().clone();
    let hm = space.tensor(&space);
    let action = LinMap::from_fn(&hm, &space, |k| {
        let (h, a) = (k / n, k % n);
        let mut acc = Accumulator::new(n);
        for (d, c) in host.coalgebra.comult.column(h).iter() {
            let (h1, h2) = (d / n, d % n);
            let p = host.algebra.mul_all(&[&host.basis(h1), &host.basis(a), hd.antipode.column(h2)]);
            acc.add_scaled(&p, c);
        }
        acc.finish()
    });
    let coaction = LinMap::from_fn(&space, &hm, |a| {
        let d = host.coalgebra.comult.column(a);
        let flipped = tensor::permute(d, &[n, n], &[1, 0]);
        tensor::apply_leg(&flipped, &[n, n], 1, sinv)
    });
    let yd = YDModule::new(
        ModuleData::new(host, space.clone(), action)?,
        ComoduleData::new(host, space.clone(), coaction)?,
    )?;
    let a = YDAlgebra::new(yd, host.algebra.mult.clone(), host.one().clone())?;
    certify_braided(a, "adjoint YD algebra")
}

/// For `G = (Z_2)^k`: the algebra `k[G]` on basis `a_b` graded by characters,
/// `g_c ▷ a_b = (−1)^{c·b} a_b`, with trivial coaction. Twisting by a
/// bicharacter turns it into a twisted group algebra.
pub fn character_graded_yd(g: &GroupPresentation, host: &BialgebraData) -> Result<YDAlgebra> {
    check_group_host(g, host)?;
    let n = g.order();
    if !n.is_power_of_two() || (0..n).any(|a| (0..n).any(|b| g.mul(a, b) != a ^ b)) {
        return Err(Error::Invalid("character grading needs (Z2)^k with XOR indexing".into()));
    }
    let f = host.field();
    let space = Space::new(f, g.labels.iter().map(|l| format!("a[{l}]")))?;
    let hm = host.space().tensor(&space);
    let action = LinMap::from_fn(&hm, &space, |k| {
        let (c, b) = (k / n, k % n);
        let s = if (c & b).count_ones() % 2 == 0 { 1 } else { -1 };
        Vector::term(b, f.from_i64(s))
    });
    let mult = LinMap::from_fn(&space.tensor(&space), &space, |k| Vector::unit((k / n) ^ (k % n), f));
    let yd = YDModule::new(
        ModuleData::new(host, space.clone(), action)?,
        ComoduleData::trivial(host, space.clone()),
    )?;
    let a = YDAlgebra::new(yd, mult, Vector::unit(0, f))?;
    certify_braided(a, "character-graded YD algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_algebra, sweedler_h4};
    use crate::exactlin::Field;

    #[test]
    fn conjugation_on_s3_matches_group_formulas() {
        let g = GroupPresentation::symmetric3();
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        let a = conjugation_yd(&g, &h).unwrap();
        let f = h.field();
        for x in 0..6 {
            assert_eq!(a.coact(&Vector::unit(x, f)), Vector::unit(x * 6 + g.inv(x), f));
            for y in 0..6 {
                let c = g.mul(g.mul(x, y), g.inv(x));
                assert_eq!(a.yd.module.act_basis(x, y), &Vector::unit(c, f));
            }
        }
    }

    #[test]
    fn conjugation_refuses_foreign_host() {
        let g = GroupPresentation::symmetric3();
        let h = group_algebra(&GroupPresentation::cyclic(6), Field::Rationals).unwrap().bialgebra;
        assert!(conjugation_yd(&g, &h).is_err());
    }

    #[test]
    fn adjoint_on_sweedler_certifies() {
        let hd = sweedler_h4(Field::Rationals).unwrap();
        let a = adjoint_yd(&hd).unwrap();
        let h = &hd.bialgebra;
        // g▷x = gxg⁻¹ = −x
        assert_eq!(a.act(&h.basis(1), &h.basis(2)), h.basis(2).neg());
        let mut no_inverse = hd.clone();
        no_inverse.antipode_inverse = None;
        assert!(adjoint_yd(&no_inverse).is_err());
    }

    #[test]
    fn adjoint_on_group_algebra_is_conjugation() {
        let g = GroupPresentation::symmetric3();
        let hd = group_algebra(&g, Field::Rationals).unwrap();
        let adj = adjoint_yd(&hd).unwrap();
        let conj = conjugation_yd(&g, &hd.bialgebra).unwrap();
        assert_eq!(adj, conj);
    }

    #[test]
    fn character_graded_needs_xor_presentation() {
        let g = GroupPresentation::cyclic(4);
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        assert!(character_graded_yd(&g, &h).is_err());
        let k = GroupPresentation::elementary_abelian_2(2);
        let hk = group_algebra(&k, Field::Rationals).unwrap().bialgebra;
        let a = character_graded_yd(&k, &hk).unwrap();
        assert_eq!(a.dim(), 4);
    }
}
