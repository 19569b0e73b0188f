use super::{check_yd, diagonal_action, prebraid_map, tensor_coaction, ComoduleData, ModuleData, YDModule};
use crate::error::{Error, Result};
use crate::exactlin::{tensor, LinMap, Space, Vector};
use crate::hopf::{check_algebra, AlgebraData, BialgebraData};
use crate::report::{leg_labels, Check, Report};

/// Monoid in the YD category: an `H`-module algebra and `H^op`-comodule
/// algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDAlgebra {
    pub yd: YDModule,
    pub mult: LinMap,
    pub unit: Vector,
}

impl YDAlgebra {
    pub fn new(yd: YDModule, mult: LinMap, unit: Vector) -> Result<YDAlgebra> {
        let alg = AlgebraData::new(yd.space().clone(), mult, unit)?;
        Ok(YDAlgebra {
            yd,
            mult: alg.mult,
            unit: alg.unit,
        })
    }

    /// Builds and certifies with `check_yd_algebra`.
    pub fn certified(yd: YDModule, mult: LinMap, unit: Vector) -> Result<YDAlgebra> {
        let a = YDAlgebra::new(yd, mult, unit)?;
        check_yd_algebra(&a).into_result()?;
        Ok(a)
    }

    pub fn algebra(&self) -> AlgebraData {
        AlgebraData {
            space: self.yd.space().clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn host(&self) -> &BialgebraData {
        self.yd.host()
    }

    pub fn space(&self) -> &Space {
        self.yd.space()
    }

    pub fn dim(&self) -> usize {
        self.yd.dim()
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let n = self.dim();
        let mut acc = crate::exactlin::Accumulator::new(n);
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(self.mult.column(i * n + j), &(x * y));
            }
        }
        acc.finish()
    }

    pub fn act(&self, h: &Vector, a: &Vector) -> Vector {
        self.yd.module.act(h, a)
    }

    pub fn coact(&self, a: &Vector) -> Vector {
        self.yd.comodule.coact(a)
    }
}

/// The ground field as a YD algebra with trivial action and coaction.
pub fn trivial_yd_algebra(host: &BialgebraData) -> YDAlgebra {
    let f = host.field();
    let k = Space::scalars(f);
    let yd = YDModule {
        module: ModuleData::trivial(host, k.clone()),
        comodule: ComoduleData::trivial(host, k.clone()),
    };
    let mult = LinMap::from_fn(&k.tensor(&k), &k, |_| Vector::unit(0, f));
    YDAlgebra::new(yd, mult, Vector::unit(0, f)).unwrap()
}

/// YD module axioms, algebra axioms, module-algebra and `H^op`-comodule-algebra
/// compatibilities.
pub fn check_yd_algebra(a: &YDAlgebra) -> Report {
    let mut r = Report::new("YD algebra");
    r.absorb("", check_yd(&a.yd));
    r.absorb("", check_algebra(&a.algebra()));
    let h = a.host();
    let (nh, n) = (h.dim(), a.dim());
    let f = h.field();
    let aa = a.space().tensor(a.space());
    let haa = h.space().tensor(&aa);
    let diag = diagonal_action(&a.yd.module, &a.yd.module);
    let lhs = LinMap::par_from_fn(&haa, a.space(), |k| {
        let (hi, ab) = (k / (n * n), k % (n * n));
        a.act(&Vector::unit(hi, f), a.mult.column(ab))
    });
    let rhs = LinMap::par_from_fn(&haa, a.space(), |k| a.mul_flat(diag.action.column(k)));
    r.push(Check::maps_equal("module algebra h▷(ab) = (h₁▷a)(h₂▷b)", &lhs, &rhs, |k| leg_labels(&haa, k)));
    let lhs = LinMap::from_fn(h.space(), a.space(), |hi| a.act(&Vector::unit(hi, f), &a.unit));
    let rhs = LinMap::from_fn(h.space(), a.space(), |hi| a.unit.scale(&h.coalgebra.eps_basis(hi)));
    r.push(Check::maps_equal("module algebra h▷1 = ε(h)1", &lhs, &rhs, |k| vec![h.space().label(k)]));
    let rho_aa = tensor_coaction(&a.yd.comodule, &a.yd.comodule);
    let ah = a.space().tensor(h.space());
    let lhs = LinMap::from_fn(&aa, &ah, |k| a.coact(a.mult.column(k)));
    let rhs = LinMap::from_fn(&aa, &ah, |k| {
        tensor::apply_leg(rho_aa.coaction.column(k), &[n * n, nh], 0, &a.mult)
    });
    r.push(Check::maps_equal("comodule algebra ρ(ab) = a₀b₀⊗b₁a₁", &lhs, &rhs, |k| leg_labels(&aa, k)));
    let one_one = tensor::tensor_vec(&a.unit, h.one(), nh);
    r.push(Check::vectors_equal("comodule algebra ρ(1) = 1⊗1", vec!["1".into()], &ah, &a.coact(&a.unit), &one_one));
    r
}

impl YDAlgebra {
    /// Product applied to an element of `A⊗A`.
    pub fn mul_flat(&self, x: &Vector) -> Vector {
        self.mult.apply(x)
    }
}

/// `Σ b₀·(b₁▷a) = a·b` on every basis pair, i.e. `μ∘σ_{A,A} = μ`.
pub fn check_braided_commutative(a: &YDAlgebra) -> Report {
    let mut r = Report::new("braided commutativity");
    let sigma = prebraid_map(&a.yd, &a.yd);
    let lhs = a.mult.compose(&sigma);
    let aa = a.space().tensor(a.space());
    r.push(Check::maps_equal("b₀(b₁▷a) = ab", &lhs, &a.mult, |k| leg_labels(&aa, k)));
    r
}

/// Same structure maps viewed over another host with the same algebra.
pub fn rehost(a: &YDAlgebra, host: &BialgebraData) -> Result<YDAlgebra> {
    if host.algebra != a.host().algebra {
        return Err(Error::Invalid("rehosting requires the same algebra".into()));
    }
    Ok(YDAlgebra {
        yd: YDModule {
            module: a.yd.module.with_host(host),
            comodule: a.yd.comodule.with_host(host),
        },
        mult: a.mult.clone(),
        unit: a.unit.clone(),
    })
}
