use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::balanced::BalancedTensor;
use super::smash::smash_unchecked;
use crate::error::{Error, Result};
use crate::exactlin::reduce::Echelon;
use crate::exactlin::{tensor, LinMap, Space, Vector};
use crate::hopf::{AlgebraData, BialgebraData, TensorPower};
use crate::report::{leg_labels, Check, Report};
use crate::yd::{check_braided_commutative, YDAlgebra};

/// Left bialgebroid `(𝓗, s, t, Δ, ε)` over the base `A`. The coproduct is
/// stored on representatives in `𝓗⊗𝓗`; classes live in `balanced`.
#[derive(Clone, Debug)]
pub struct Bialgebroid {
    pub total: AlgebraData,
    pub base: AlgebraData,
    pub source: LinMap,
    pub target: LinMap,
    pub comult: LinMap,
    pub counit: LinMap,
    pub balanced: BalancedTensor,
    /// `h ↦ 1♯h` for scalar extensions.
    pub host_embedding: Option<LinMap>,
}

impl Bialgebroid {
    pub fn new(
        total: AlgebraData,
        base: AlgebraData,
        source: LinMap,
        target: LinMap,
        comult: LinMap,
        counit: LinMap,
    ) -> Result<Bialgebroid> {
        let (n, d) = (total.dim(), base.dim());
        if comult.domain().dim() != n || comult.codomain().dim() != n * n {
            return Err(Error::DimensionMismatch("Δ must map 𝓗 into 𝓗⊗𝓗".into()));
        }
        if counit.domain().dim() != n || counit.codomain().dim() != d {
            return Err(Error::DimensionMismatch("ε must map 𝓗 into A".into()));
        }
        let balanced = BalancedTensor::new(&total, &source, &target)?;
        let hh = total.space.tensor(&total.space);
        Ok(Bialgebroid {
            comult: comult.with_spaces(&total.space, &hh),
            counit: counit.with_spaces(&total.space, &base.space),
            source: source.with_spaces(&base.space, &total.space),
            target: target.with_spaces(&base.space, &total.space),
            total,
            base,
            balanced,
            host_embedding: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn square(&self) -> TensorPower<'_> {
        TensorPower::new(&self.total, 2)
    }

    /// Representative of `Δ(h)`.
    pub fn delta(&self, h: &Vector) -> Vector {
        self.comult.apply(h)
    }

    /// Class of `Δ(h)` in `𝓗⊗_A𝓗`.
    pub fn delta_class(&self, h: &Vector) -> Vector {
        self.balanced.project(&self.delta(h))
    }

    /// `h ▶ a = ε(h s(a))`.
    pub fn blacktriangle(&self, h: &Vector, a: &Vector) -> Vector {
        self.counit.apply(&self.total.mul(h, &self.source.apply(a)))
    }

    /// The same total algebra and coproduct representatives with new
    /// structure maps (used for mutation and corruption tests).
    pub fn with_target(&self, target: LinMap) -> Result<Bialgebroid> {
        let mut b = Bialgebroid::new(
            self.total.clone(),
            self.base.clone(),
            self.source.clone(),
            target,
            self.comult.clone(),
            self.counit.clone(),
        )?;
        b.host_embedding = self.host_embedding.clone();
        Ok(b)
    }
}

pub fn blacktriangle(b: &Bialgebroid, h: &Vector, a: &Vector) -> Vector {
    b.blacktriangle(h, a)
}

/// The scalar extension without axiom checks.
pub fn scalar_extension_unchecked(a: &YDAlgebra) -> Result<Bialgebroid> {
    let h = a.host();
    let f = h.field();
    let nh = h.dim();
    let smash = smash_unchecked(a);
    let n = smash.dim();
    let total = smash.algebra.clone();
    let source = smash.embed_base();
    let target = a.yd.comodule.coaction.with_spaces(a.space(), &total.space);
    let hh = total.space.tensor(&total.space);
    let comult = LinMap::from_fn(&total.space, &hh, |x| {
        let (i, p) = (x / nh, x % nh);
        let mut out = Vec::new();
        for (t, c) in h.coalgebra.comult.column(p).iter() {
            let left = Vector::unit(i * nh + t / nh, f);
            let right = tensor::tensor_vec(&a.unit, &Vector::unit(t % nh, f), nh);
            out.push(tensor::tensor_vec(&left, &right, n).scale(c));
        }
        out.iter().fold(Vector::zero(), |acc, v| acc.add(v))
    });
    let counit = LinMap::from_fn(&total.space, a.space(), |x| {
        Vector::unit(x / nh, f).scale(&h.coalgebra.eps_basis(x % nh))
    });
    let mut b = Bialgebroid::new(total, a.algebra(), source, target, comult, counit)?;
    b.host_embedding = Some(smash.embed_host());
    Ok(b)
}

/// `A♯H` with `s(a) = a♯1`, `t(a) = a₀♯a₁`, `Δ(a♯h) = (a♯h₁)⊗_A(1♯h₂)`,
/// `ε(a♯h) = aε(h)`; refuses non-braided-commutative `A` and certifies the
/// result with `check_bialgebroid`.
pub fn scalar_extension(a: &YDAlgebra, h: &BialgebraData) -> Result<Bialgebroid> {
    if a.host() != h {
        return Err(Error::Invalid("A is a YD algebra over a different bialgebra".into()));
    }
    check_braided_commutative(a).into_result()?;
    let b = scalar_extension_unchecked(a)?;
    check_bialgebroid(&b).into_result()?;
    Ok(b)
}

/// Sampling parameters for the representative-independence check.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for CheckOptions {
    fn default() -> CheckOptions {
        CheckOptions { seed: 0, samples: 8 }
    }
}

pub fn check_bialgebroid(b: &Bialgebroid) -> Report {
    check_bialgebroid_with(b, CheckOptions::default())
}

/// The eight axiom groups: (1) `s` algebra map, (2) `t` anti-algebra map,
/// (3) `s(A)` and `t(A)` commute, (4) `Δ` and `ε` are `A`-bimodule maps,
/// (5) coassociativity in `𝓗⊗_A𝓗⊗_A𝓗`, (6) Takeuchi condition, (7) `Δ`
/// multiplicative and unital, (8) counit laws.
pub fn check_bialgebroid_with(b: &Bialgebroid, opts: CheckOptions) -> Report {
    let mut r = Report::new("bialgebroid");
    let (n, d) = (b.dim(), b.base.dim());
    let f = b.total.field();
    let base = &b.base;
    let total = &b.total;
    let aa = base.space.tensor(&base.space);
    let ah = base.space.tensor(&total.space);
    let q = &b.balanced.quotient;
    let (s, t) = (&b.source, &b.target);
    let unit_a = |i: usize| Vector::unit(i, f);

    let lhs = LinMap::from_fn(&aa, &total.space, |k| s.apply(base.mult.column(k)));
    let rhs = LinMap::from_fn(&aa, &total.space, |k| total.mul(s.column(k / d), s.column(k % d)));
    r.push(Check::maps_equal("(1) s(ab) = s(a)s(b)", &lhs, &rhs, |k| leg_labels(&aa, k)));
    r.push(Check::vectors_equal("(1) s(1) = 1", vec!["1".into()], &total.space, &s.apply(&base.unit), &total.unit));

    let lhs = LinMap::from_fn(&aa, &total.space, |k| t.apply(base.mult.column(k)));
    let rhs = LinMap::from_fn(&aa, &total.space, |k| total.mul(t.column(k % d), t.column(k / d)));
    r.push(Check::maps_equal("(2) t(ab) = t(b)t(a)", &lhs, &rhs, |k| leg_labels(&aa, k)));
    r.push(Check::vectors_equal("(2) t(1) = 1", vec!["1".into()], &total.space, &t.apply(&base.unit), &total.unit));

    let lhs = LinMap::from_fn(&aa, &total.space, |k| total.mul(s.column(k / d), t.column(k % d)));
    let rhs = LinMap::from_fn(&aa, &total.space, |k| total.mul(t.column(k % d), s.column(k / d)));
    r.push(Check::maps_equal("(3) s(a)t(b) = t(b)s(a)", &lhs, &rhs, |k| leg_labels(&aa, k)));

    let sq = b.square();
    let one = total.unit.clone();
    let left_by = |x: &Vector, y: &Vector, v: &Vector| sq.mul(&tensor::tensor_vec(x, y, n), v);
    let lhs = LinMap::par_from_fn(&ah, q, |k| b.delta_class(&total.mul(s.column(k / n), &unit_a(k % n))));
    let rhs = LinMap::par_from_fn(&ah, q, |k| {
        b.balanced.project(&left_by(s.column(k / n), &one, b.comult.column(k % n)))
    });
    r.push(Check::maps_equal("(4) Δ(s(a)h) = s(a)·Δ(h)", &lhs, &rhs, |k| leg_labels(&ah, k)));
    let lhs = LinMap::par_from_fn(&ah, q, |k| b.delta_class(&total.mul(t.column(k / n), &unit_a(k % n))));
    let rhs = LinMap::par_from_fn(&ah, q, |k| {
        b.balanced.project(&left_by(&one, t.column(k / n), b.comult.column(k % n)))
    });
    r.push(Check::maps_equal("(4) Δ(t(a)h) = Δ(h)·a", &lhs, &rhs, |k| leg_labels(&ah, k)));
    let lhs = LinMap::from_fn(&ah, &base.space, |k| b.counit.apply(&total.mul(s.column(k / n), &unit_a(k % n))));
    let rhs = LinMap::from_fn(&ah, &base.space, |k| base.mul(&unit_a(k / n), b.counit.column(k % n)));
    r.push(Check::maps_equal("(4) ε(s(a)h) = aε(h)", &lhs, &rhs, |k| leg_labels(&ah, k)));
    let lhs = LinMap::from_fn(&ah, &base.space, |k| b.counit.apply(&total.mul(t.column(k / n), &unit_a(k % n))));
    let rhs = LinMap::from_fn(&ah, &base.space, |k| base.mul(b.counit.column(k % n), &unit_a(k / n)));
    r.push(Check::maps_equal("(4) ε(t(a)h) = ε(h)a", &lhs, &rhs, |k| leg_labels(&ah, k)));

    r.push(check_coassociative(b));

    let ha = total.space.tensor(&base.space);
    let lhs = LinMap::par_from_fn(&ha, q, |k| {
        let tv = tensor::tensor_vec(t.column(k % d), &one, n);
        b.balanced.project(&sq.mul(b.comult.column(k / d), &tv))
    });
    let rhs = LinMap::par_from_fn(&ha, q, |k| {
        let sv = tensor::tensor_vec(&one, s.column(k % d), n);
        b.balanced.project(&sq.mul(b.comult.column(k / d), &sv))
    });
    let takeuchi = Check::maps_equal("(6) Δ(h)(t(a)⊗1) = Δ(h)(1⊗s(a))", &lhs, &rhs, |k| leg_labels(&ha, k));
    let takeuchi_ok = takeuchi.passed;
    r.push(takeuchi);

    r.push(Check::vectors_equal(
        "(7) Δ(1) = 1⊗_A 1",
        vec!["1".into()],
        q,
        &b.delta_class(&total.unit),
        &b.balanced.project(&sq.one()),
    ));
    if takeuchi_ok {
        r.push(check_multiplicative(b));
        r.push(check_representative_independence(b, opts));
    } else {
        r.push(Check::fail("(7) Δ(xh) = Δ(x)Δ(h)", "not well defined: Takeuchi condition fails"));
    }

    r.push(Check::vectors_equal("(8) ε(1) = 1", vec!["1".into()], &base.space, &b.counit.apply(&total.unit), &base.unit));
    let id = LinMap::identity(&total.space);
    let lhs = LinMap::from_fn(&total.space, &total.space, |h| {
        pair_map(b.comult.column(h), n, |x, y| total.mul(&s.apply(b.counit.column(x)), &unit_a(y)))
    });
    r.push(Check::maps_equal("(8) s(ε(h₁))h₂ = h", &lhs, &id, |k| vec![total.space.label(k)]));
    let lhs = LinMap::from_fn(&total.space, &total.space, |h| {
        pair_map(b.comult.column(h), n, |x, y| total.mul(&t.apply(b.counit.column(y)), &unit_a(x)))
    });
    r.push(Check::maps_equal("(8) t(ε(h₂))h₁ = h", &lhs, &id, |k| vec![total.space.label(k)]));
    let hh = total.space.tensor(&total.space);
    let mid = LinMap::par_from_fn(&hh, &base.space, |k| b.counit.apply(total.mult.column(k)));
    let via_s = LinMap::par_from_fn(&hh, &base.space, |k| {
        b.counit.apply(&total.mul(&unit_a(k / n), &s.apply(b.counit.column(k % n))))
    });
    let via_t = LinMap::par_from_fn(&hh, &base.space, |k| {
        b.counit.apply(&total.mul(&unit_a(k / n), &t.apply(b.counit.column(k % n))))
    });
    r.push(Check::maps_equal("(8) ε(h s(ε(k))) = ε(hk)", &via_s, &mid, |k| leg_labels(&hh, k)));
    r.push(Check::maps_equal("(8) ε(h t(ε(k))) = ε(hk)", &via_t, &mid, |k| leg_labels(&hh, k)));
    r
}

pub(crate) fn check_coassociative(b: &Bialgebroid) -> Check {
    let n = b.dim();
    let total = &b.total;
    let triple = b.balanced.triple_space();
    let lhs = LinMap::par_from_fn(&total.space, &triple, |h| {
        b.balanced.project3(&tensor::apply_leg(b.comult.column(h), &[n, n], 0, &b.comult))
    });
    let rhs = LinMap::par_from_fn(&total.space, &triple, |h| {
        b.balanced.project3(&tensor::apply_leg(b.comult.column(h), &[n, n], 1, &b.comult))
    });
    Check::maps_equal("(5) (Δ⊗id)Δ = (id⊗Δ)Δ", &lhs, &rhs, |k| vec![total.space.label(k)])
}

/// `Σ c φ(x, y)` over the terms `c x⊗y` of `v ∈ 𝓗⊗𝓗`.
fn pair_map(v: &Vector, n: usize, phi: impl Fn(usize, usize) -> Vector) -> Vector {
    let mut out = Vector::zero();
    for (k, c) in v.iter() {
        out = out.add_scaled(&phi(k / n, k % n), c);
    }
    out
}

/// `Δ(xh) = Δ(x)Δ(h)` for `x` in a generating set of `𝓗` and every basis
/// `h`; with `Δ(1) = 1⊗1` and the Takeuchi condition this gives
/// multiplicativity on all of `𝓗`.
fn check_multiplicative(b: &Bialgebroid) -> Check {
    let n = b.dim();
    let f = b.total.field();
    let sq = b.square();
    let mut candidates: Vec<Vector> = b.source.columns().to_vec();
    candidates.extend((0..n).map(|i| Vector::unit(i, f)));
    let gens = algebra_generators(&b.total, &candidates);
    let g = gens.len();
    let dom = Space::numbered(f, "x", g).tensor(&b.total.space);
    let q = &b.balanced.quotient;
    let lhs = LinMap::par_from_fn(&dom, q, |k| {
        let h = Vector::unit(k % n, f);
        b.delta_class(&b.total.mul(&gens[k / n], &h))
    });
    let rhs = LinMap::par_from_fn(&dom, q, |k| {
        b.balanced.project(&sq.mul(&b.delta(&gens[k / n]), b.comult.column(k % n)))
    });
    let name = "(7) Δ(xh) = Δ(x)Δ(h)";
    let mut c = Check::maps_equal(name, &lhs, &rhs, |k| {
        vec![gens[k / n].display(&b.total.space), b.total.space.label(k % n)]
    });
    if c.passed {
        c = c.with_detail(format!("{g} algebra generators × {n} basis elements"));
    }
    c
}

/// Greedy generating set drawn from `candidates`: a candidate is kept when it
/// lies outside the subalgebra generated by the ones kept so far.
pub fn algebra_generators(alg: &AlgebraData, candidates: &[Vector]) -> Vec<Vector> {
    let n = alg.dim();
    let mut gens: Vec<Vector> = Vec::new();
    let mut span = closure(alg, &gens);
    for c in candidates {
        if span.rank() == n {
            break;
        }
        if !span.contains(c) {
            gens.push(c.clone());
            span = closure(alg, &gens);
        }
    }
    gens
}

fn closure(alg: &AlgebraData, gens: &[Vector]) -> Echelon {
    let mut ech = Echelon::new(alg.dim());
    let mut words = vec![alg.unit.clone()];
    ech.insert(alg.unit.clone());
    let mut i = 0;
    while i < words.len() {
        for g in gens {
            let w = alg.mul(g, &words[i]);
            if ech.insert(w.clone()) {
                words.push(w);
            }
        }
        i += 1;
    }
    ech
}

/// `Δ(x)Δ(h)` computed from two randomly perturbed representatives agrees with
/// the product of the stored representatives, for `samples` random pairs.
pub fn check_representative_independence(b: &Bialgebroid, opts: CheckOptions) -> Check {
    let n = b.dim();
    let d = b.base.dim();
    let f = b.total.field();
    let sq = b.square();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let random_relation = |rng: &mut ChaCha8Rng| {
        let mut v = Vector::zero();
        for _ in 0..3 {
            let (a, x, y) = (rng.gen_range(0..d), rng.gen_range(0..n), rng.gen_range(0..n));
            let c = f.from_i64(rng.gen_range(-3..=3));
            let lhs = tensor::tensor_vec(&b.total.mul(b.target.column(a), &Vector::unit(x, f)), &Vector::unit(y, f), n);
            let rhs = tensor::tensor_vec(&Vector::unit(x, f), &b.total.mul(b.source.column(a), &Vector::unit(y, f)), n);
            v = v.add_scaled(&lhs.sub(&rhs), &c);
        }
        v
    };
    let name = "(7) products independent of representatives";
    for _ in 0..opts.samples {
        let (x, h) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let r1 = random_relation(&mut rng);
        let r2 = random_relation(&mut rng);
        let (dx, dh) = (b.comult.column(x), b.comult.column(h));
        let plain = b.balanced.project(&sq.mul(dx, dh));
        let moved = b.balanced.project(&sq.mul(&dx.add(&r1), &dh.add(&r2)));
        if plain != moved {
            return Check::vectors_equal(
                name,
                vec![b.total.space.label(x), b.total.space.label(h)],
                &b.balanced.quotient,
                &plain,
                &moved,
            )
            .with_detail(format!("seed {}", opts.seed));
        }
    }
    Check::pass(name).with_detail(format!("{} samples, seed {}", opts.samples, opts.seed))
}
