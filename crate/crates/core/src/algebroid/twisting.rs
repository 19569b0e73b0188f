use super::bialgebroid::{check_coassociative, scalar_extension_unchecked, Bialgebroid};
use super::smash::{check_algebra_iso, smash_unchecked, zeta_smash_map};
use crate::error::{Error, Result};
use crate::exactlin::{tensor, LinMap, Scalar, Vector};
use crate::hopf::{check_algebra, AlgebraData};
use crate::report::{leg_labels, Check, Report};
use crate::twist::Twist;
use crate::yd::{twisted_algebra_over, twisted_host, YDAlgebra};

/// Bialgebroid 2-cocycle `𝒢 ∈ 𝓗⊗_A𝓗` and its inverse, held as
/// representatives in `𝓗⊗𝓗`.
#[derive(Clone, Debug)]
pub struct BialgebroidCocycle {
    pub host: Bialgebroid,
    pub g: Vector,
    pub ginv: Vector,
}

/// `𝒢 = (1♯F̄¹)⊗_A(1♯F̄²)` with inverse `(1♯F¹)⊗(1♯F²)`.
pub fn induced_cocycle(b: &Bialgebroid, t: &Twist) -> Result<BialgebroidCocycle> {
    let emb = b
        .host_embedding
        .as_ref()
        .ok_or_else(|| Error::Invalid("induced cocycles need a scalar-extension bialgebroid".into()))?;
    let nh = t.host.dim();
    if emb.domain().dim() != nh {
        return Err(Error::DimensionMismatch("twist lives on a different bialgebra".into()));
    }
    let foreign = (0..nh).any(|i| {
        (0..nh).any(|j| emb.apply(t.host.algebra.mul_basis(i, j)) != b.total.mul(emb.column(i), emb.column(j)))
    });
    if foreign {
        return Err(Error::Invalid("twist lives on a different bialgebra".into()));
    }
    let lift = |x: &Vector| {
        let v = tensor::apply_leg(x, &[nh, nh], 0, emb);
        tensor::apply_leg(&v, &[b.dim(), nh], 1, emb)
    };
    Ok(BialgebroidCocycle {
        host: b.clone(),
        g: lift(&t.finv),
        ginv: lift(&t.f),
    })
}

/// `A^𝒢` with `a∗b = (𝒢¹▶a)(𝒢²▶b)`, and the maps
/// `s^𝒢(a) = s(𝒢¹▶a)𝒢²`, `t^𝒢(a) = t(𝒢²▶a)𝒢¹`.
#[derive(Clone, Debug)]
pub struct TwistedBase {
    pub algebra: AlgebraData,
    pub source: LinMap,
    pub target: LinMap,
}

fn split(v: &Vector, n: usize) -> Vec<(usize, usize, Scalar)> {
    v.iter().map(|(k, c)| (k / n, k % n, c.clone())).collect()
}

pub(crate) fn twisted_base_unchecked(c: &BialgebroidCocycle) -> TwistedBase {
    let b = &c.host;
    let n = b.dim();
    let f = b.total.field();
    let base = &b.base;
    let g = split(&c.g, n);
    let tri = |x: usize, a: &Vector| b.blacktriangle(&Vector::unit(x, f), a);
    let d = base.dim();
    let mult = LinMap::par_from_fn(base.mult.domain(), &base.space, |k| {
        let (ai, aj) = (Vector::unit(k / d, f), Vector::unit(k % d, f));
        let mut out = Vector::zero();
        for (x, y, coef) in &g {
            out = out.add_scaled(&base.mul(&tri(*x, &ai), &tri(*y, &aj)), coef);
        }
        out
    });
    let source = LinMap::from_fn(&base.space, &b.total.space, |i| {
        let a = Vector::unit(i, f);
        let mut out = Vector::zero();
        for (x, y, coef) in &g {
            let v = b.total.mul(&b.source.apply(&tri(*x, &a)), &Vector::unit(*y, f));
            out = out.add_scaled(&v, coef);
        }
        out
    });
    let target = LinMap::from_fn(&base.space, &b.total.space, |i| {
        let a = Vector::unit(i, f);
        let mut out = Vector::zero();
        for (x, y, coef) in &g {
            let v = b.total.mul(&b.target.apply(&tri(*y, &a)), &Vector::unit(*x, f));
            out = out.add_scaled(&v, coef);
        }
        out
    });
    TwistedBase {
        algebra: AlgebraData {
            space: base.space.clone(),
            mult,
            unit: base.unit.clone(),
        },
        source,
        target,
    }
}

/// `A^𝒢` certified: associative and unital, `s^𝒢` an algebra map, `t^𝒢` an
/// anti-algebra map.
pub fn twist_base(c: &BialgebroidCocycle) -> Result<TwistedBase> {
    let tb = twisted_base_unchecked(c);
    check_twisted_base(&tb, &c.host.total).into_result()?;
    Ok(tb)
}

pub fn check_twisted_base(tb: &TwistedBase, total: &AlgebraData) -> Report {
    let mut r = Report::new("twisted base");
    r.absorb("A^𝒢", check_algebra(&tb.algebra));
    let base = &tb.algebra;
    let d = base.dim();
    let aa = base.space.tensor(&base.space);
    let (s, t) = (&tb.source, &tb.target);
    let lhs = LinMap::from_fn(&aa, &total.space, |k| s.apply(base.mult.column(k)));
    let rhs = LinMap::from_fn(&aa, &total.space, |k| total.mul(s.column(k / d), s.column(k % d)));
    r.push(Check::maps_equal("s^𝒢(a∗b) = s^𝒢(a)s^𝒢(b)", &lhs, &rhs, |k| leg_labels(&aa, k)));
    let lhs = LinMap::from_fn(&aa, &total.space, |k| t.apply(base.mult.column(k)));
    let rhs = LinMap::from_fn(&aa, &total.space, |k| total.mul(t.column(k % d), t.column(k / d)));
    r.push(Check::maps_equal("t^𝒢(a∗b) = t^𝒢(b)t^𝒢(a)", &lhs, &rhs, |k| leg_labels(&aa, k)));
    r
}

pub(crate) fn twisted_bialgebroid_unchecked(c: &BialgebroidCocycle, tb: &TwistedBase) -> Result<Bialgebroid> {
    let b = &c.host;
    let sq = b.square();
    let hh = b.comult.codomain().clone();
    let comult = LinMap::par_from_fn(&b.total.space, &hh, |x| sq.mul_all(&[&c.ginv, b.comult.column(x), &c.g]));
    let mut out = Bialgebroid::new(
        b.total.clone(),
        tb.algebra.clone(),
        tb.source.clone(),
        tb.target.clone(),
        comult,
        b.counit.clone(),
    )?;
    out.host_embedding = b.host_embedding.clone();
    Ok(out)
}

/// `𝓗^𝒢` over `A^𝒢`: `Δ^𝒢(x) = 𝒢⁻¹Δ(x)𝒢`, same counit; certified with
/// `check_bialgebroid`.
pub fn twist_bialgebroid(c: &BialgebroidCocycle) -> Result<Bialgebroid> {
    let tb = twist_base(c)?;
    let out = twisted_bialgebroid_unchecked(c, &tb)?;
    super::check_bialgebroid(&out).into_result()?;
    Ok(out)
}

/// Counitality through `▶`, the two inverse identities each in its own
/// quotient, the twisted base axioms and coassociativity of `Δ^𝒢`.
pub fn check_cocycle(c: &BialgebroidCocycle) -> Report {
    let mut r = Report::new("bialgebroid cocycle");
    let b = &c.host;
    let n = b.dim();
    let f = b.total.field();
    let sq = b.square();
    let one_one = sq.one();
    let one = &b.total.unit;
    let base_one = &b.base.unit;
    let counital = |src: &LinMap, tgt: &LinMap, tri: &dyn Fn(&Vector) -> Vector, v: &Vector| {
        let mut left = Vector::zero();
        let mut right = Vector::zero();
        for (x, y, coef) in split(v, n) {
            let (ex, ey) = (Vector::unit(x, f), Vector::unit(y, f));
            let sl = b.total.mul(&src.apply(&tri(&ex)), &ey);
            let tr = b.total.mul(&tgt.apply(&tri(&ey)), &ex);
            left = left.add_scaled(&sl, &coef);
            right = right.add_scaled(&tr, &coef);
        }
        (left, right)
    };
    let tri = |h: &Vector| b.blacktriangle(h, base_one);
    let (l, rt) = counital(&b.source, &b.target, &tri, &c.g);
    r.push(Check::vectors_equal("𝒢 counital s(𝒢¹▶1)𝒢² = 1", vec![], &b.total.space, &l, one));
    r.push(Check::vectors_equal("𝒢 counital t(𝒢²▶1)𝒢¹ = 1", vec![], &b.total.space, &rt, one));
    r.push(Check::vectors_equal(
        "𝒢𝒢⁻¹ = 1⊗_A 1",
        vec![],
        &b.balanced.quotient,
        &b.balanced.project(&sq.mul(&c.g, &c.ginv)),
        &b.balanced.project(&one_one),
    ));

    let tb = twisted_base_unchecked(c);
    r.absorb("", check_twisted_base(&tb, &b.total));
    let twisted = match twisted_bialgebroid_unchecked(c, &tb) {
        Ok(t) => t,
        Err(e) => {
            r.push(Check::fail("twisted balanced tensor", e.to_string()));
            return r;
        }
    };
    r.push(Check::vectors_equal(
        "𝒢⁻¹𝒢 = 1⊗_{A^𝒢} 1",
        vec![],
        &twisted.balanced.quotient,
        &twisted.balanced.project(&sq.mul(&c.ginv, &c.g)),
        &twisted.balanced.project(&one_one),
    ));
    let tri_g = |h: &Vector| twisted.blacktriangle(h, base_one);
    let (l, rt) = counital(&twisted.source, &twisted.target, &tri_g, &c.ginv);
    r.push(Check::vectors_equal("𝒢⁻¹ counital s^𝒢(𝒢⁻¹¹▶1)𝒢⁻¹² = 1", vec![], &b.total.space, &l, one));
    r.push(Check::vectors_equal("𝒢⁻¹ counital t^𝒢(𝒢⁻¹²▶1)𝒢⁻¹¹ = 1", vec![], &b.total.space, &rt, one));
    let mut co = check_coassociative(&twisted);
    co.name = "Δ^𝒢 coassociative".into();
    r.push(co);
    r
}

/// The isomorphism between the scalar extension of `(A_F, H^F)` and the
/// `𝒢`-twist of the scalar extension of `(A, H)`, in five groups: base
/// multiplications coincide, `ζ_{A,H}` is an algebra isomorphism, it
/// intertwines sources and targets, counits, and coproducts (compared in
/// `𝓗^𝒢⊗_{A^𝒢}𝓗^𝒢`).
pub fn check_main_theorem(a: &YDAlgebra, t: &Twist) -> Report {
    let mut r = Report::new("twisted scalar extension");
    if a.host() != &t.host {
        r.push(Check::fail("inputs", "A and the twist live on different bialgebras"));
        return r;
    }
    let hf = twisted_host(t);
    let af = twisted_algebra_over(a, t, &hf);
    let left = match scalar_extension_unchecked(&af) {
        Ok(b) => b,
        Err(e) => {
            r.push(Check::fail("scalar extension of (A_F, H^F)", e.to_string()));
            return r;
        }
    };
    let right = match scalar_extension_unchecked(a)
        .and_then(|b| induced_cocycle(&b, t))
        .and_then(|c| {
            let tb = twisted_base_unchecked(&c);
            twisted_bialgebroid_unchecked(&c, &tb)
        }) {
        Ok(b) => b,
        Err(e) => {
            r.push(Check::fail("𝒢-twist of the scalar extension of (A, H)", e.to_string()));
            return r;
        }
    };
    let f = a.host().field();
    let aa = a.space().tensor(a.space());
    r.push(Check::maps_equal("base: a∗b = a·_F b", &right.base.mult, &af.mult, |k| leg_labels(&aa, k)));
    r.push(Check::vectors_equal(
        "base: units agree",
        vec!["1".into()],
        a.space(),
        &right.base.unit,
        &af.unit,
    ));

    let zeta = zeta_smash_map(a, t);
    let smash_f = smash_unchecked(&af);
    r.absorb("algebra", check_algebra_iso("ζ", &zeta, &smash_f.algebra, &right.total));

    let total = &right.total.space;
    let lhs = zeta.compose(&left.source);
    r.push(Check::maps_equal("source: ζ∘s^F = s^𝒢", &lhs, &right.source, |k| vec![a.space().label(k)]));
    let lhs = zeta.compose(&left.target);
    r.push(Check::maps_equal("target: ζ∘t^F = t^𝒢", &lhs, &right.target, |k| vec![a.space().label(k)]));

    let lhs = right.counit.compose(&zeta);
    r.push(Check::maps_equal("counit: ε∘ζ = ε^F", &lhs, &left.counit, |k| leg_labels(total, k)));

    let n = right.dim();
    let q = &right.balanced.quotient;
    let lhs = LinMap::par_from_fn(&left.total.space, q, |y| {
        let v = tensor::apply_leg(left.comult.column(y), &[n, n], 0, &zeta);
        right.balanced.project(&tensor::apply_leg(&v, &[n, n], 1, &zeta))
    });
    let rhs = LinMap::par_from_fn(&left.total.space, q, |y| right.delta_class(zeta.column(y)));
    r.push(Check::maps_equal("coproduct: (ζ⊗ζ)∘Δ^F = Δ^𝒢∘ζ", &lhs, &rhs, |k| leg_labels(total, k)));
    let _ = f;
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{check_bialgebroid, scalar_extension};
    use crate::catalog::{
        adjoint_yd, bicharacter_structures, coboundary_twist, conjugation_yd, group_algebra, sweedler_h4,
        GroupPresentation,
    };
    use crate::exactlin::Field;

    fn klein_instance() -> (Twist, YDAlgebra) {
        let g = GroupPresentation::elementary_abelian_2(2);
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        let (t, _) = bicharacter_structures(&g, &h, &[vec![1, 1], vec![0, 1]]).unwrap();
        let a = conjugation_yd(&g, &h).unwrap();
        (t, a)
    }

    fn sweedler_instance() -> (Twist, YDAlgebra) {
        let hd = sweedler_h4(Field::Rationals).unwrap();
        let h = &hd.bialgebra;
        let t = coboundary_twist(h, &h.one().add(&h.basis(2))).unwrap();
        (t, adjoint_yd(&hd).unwrap())
    }

    fn s3_instance() -> (Twist, YDAlgebra) {
        let g = GroupPresentation::symmetric3();
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        let f = h.field();
        let u = h.one().scale(&f.from_i64(2)).sub(&h.basis(g.index_of("(12)").unwrap()));
        let t = coboundary_twist(&h, &u).unwrap();
        (t, conjugation_yd(&g, &h).unwrap())
    }

    fn cocycle_of(t: &Twist, a: &YDAlgebra) -> BialgebroidCocycle {
        let b = scalar_extension(a, &t.host).unwrap();
        induced_cocycle(&b, t).unwrap()
    }

    #[test]
    fn induced_cocycle_conditions_hold() {
        for (t, a) in [klein_instance(), sweedler_instance()] {
            let r = check_cocycle(&cocycle_of(&t, &a));
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn twisted_base_is_the_twisted_yd_product() {
        let (t, a) = sweedler_instance();
        let c = cocycle_of(&t, &a);
        let tb = twist_base(&c).unwrap();
        let hf = twisted_host(&t);
        let af = twisted_algebra_over(&a, &t, &hf);
        assert_eq!(tb.algebra.mult, af.mult);
    }

    #[test]
    fn sweedler_twist_deforms_the_coproduct() {
        let (t, a) = sweedler_instance();
        let c = cocycle_of(&t, &a);
        let twisted = twist_bialgebroid(&c).unwrap();
        assert_ne!(twisted.comult, c.host.comult);
        assert!(check_bialgebroid(&twisted).passed());
    }

    #[test]
    fn trivial_twist_is_the_identity() {
        let (t, a) = sweedler_instance();
        let c = cocycle_of(&Twist::trivial(&t.host), &a);
        let twisted = twist_bialgebroid(&c).unwrap();
        assert_eq!(twisted.base.mult, c.host.base.mult);
        assert_eq!(twisted.source, c.host.source);
        assert_eq!(twisted.target, c.host.target);
        assert_eq!(twisted.comult, c.host.comult);
    }

    #[test]
    fn main_theorem_on_klein_and_sweedler() {
        for (t, a) in [klein_instance(), sweedler_instance()] {
            let r = check_main_theorem(&a, &t);
            assert!(r.passed(), "{r}");
            assert_eq!(r.checks.len(), 9, "{r}");
        }
    }

    #[test]
    fn main_theorem_on_s3() {
        let (t, a) = s3_instance();
        let r = check_main_theorem(&a, &t);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn cocycle_from_a_different_host_is_refused() {
        let (t, _) = klein_instance();
        let (_, a) = sweedler_instance();
        let b = scalar_extension(&a, a.host()).unwrap();
        assert!(induced_cocycle(&b, &t).is_err());
        assert!(!check_main_theorem(&a, &t).passed());
    }
}
