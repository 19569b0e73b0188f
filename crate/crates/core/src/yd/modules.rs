use crate::error::{Error, Result};
use crate::exactlin::{tensor, Accumulator, LinMap, Space, Vector};
use crate::hopf::BialgebraData;
use crate::report::{leg_labels, Check, Report};

/// Left module: `action` sends `e_h ⊗ e_m` to `h ▷ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub host: BialgebraData,
    pub space: Space,
    pub action: LinMap,
}

impl ModuleData {
    pub fn new(host: &BialgebraData, space: Space, action: LinMap) -> Result<ModuleData> {
        let (nh, dm) = (host.dim(), space.dim());
        if action.domain().dim() != nh * dm || action.codomain().dim() != dm {
            return Err(Error::DimensionMismatch(format!(
                "action is {}→{}, expected {}→{dm}",
                action.domain().dim(),
                action.codomain().dim(),
                nh * dm
            )));
        }
        let action = action.with_spaces(&host.space().tensor(&space), &space);
        Ok(ModuleData {
            host: host.clone(),
            space,
            action,
        })
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(host: &BialgebraData) -> ModuleData {
        ModuleData::new(host, host.space().clone(), host.algebra.mult.clone()).unwrap()
    }

    /// `h ▷ m = ε(h) m`.
    pub fn trivial(host: &BialgebraData, space: Space) -> ModuleData {
        let dm = space.dim();
        let hm = host.space().tensor(&space);
        let action = LinMap::from_fn(&hm, &space, |k| {
            Vector::unit(k % dm, host.field()).scale(&host.coalgebra.eps_basis(k / dm))
        });
        ModuleData::new(host, space, action).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn act_basis(&self, h: usize, m: usize) -> &Vector {
        self.action.column(h * self.space.dim() + m)
    }

    pub fn act(&self, h: &Vector, m: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.dim());
        for (i, x) in h.iter() {
            for (j, y) in m.iter() {
                acc.add_scaled(self.act_basis(i, j), &(x * y));
            }
        }
        acc.finish()
    }

    /// `m ↦ h ▷ m`.
    pub fn act_map(&self, h: &Vector) -> LinMap {
        let f = self.host.field();
        LinMap::from_fn(&self.space, &self.space, |j| self.act(h, &Vector::unit(j, f)))
    }

    /// Same action viewed over another host with the same algebra.
    pub fn with_host(&self, host: &BialgebraData) -> ModuleData {
        ModuleData {
            host: host.clone(),
            space: self.space.clone(),
            action: self.action.clone(),
        }
    }
}

/// `(hk)▷m = h▷(k▷m)` on every basis triple and `1▷m = m`.
pub fn check_module(m: &ModuleData) -> Report {
    let mut r = Report::new("module");
    let (nh, dm) = (m.host.dim(), m.dim());
    let f = m.host.field();
    let s3 = Space::tensor_all(&[m.host.space().clone(), m.host.space().clone(), m.space.clone()]);
    let lhs = LinMap::from_fn(&s3, &m.space, |t| {
        let (i, j, k) = (t / (nh * dm), (t / dm) % nh, t % dm);
        m.act(m.host.algebra.mul_basis(i, j), &Vector::unit(k, f))
    });
    let rhs = LinMap::from_fn(&s3, &m.space, |t| {
        let (i, j, k) = (t / (nh * dm), (t / dm) % nh, t % dm);
        m.act(&Vector::unit(i, f), m.act_basis(j, k))
    });
    r.push(Check::maps_equal("action associative", &lhs, &rhs, |t| leg_labels(&s3, t)));
    let unit = m.act_map(m.host.one());
    r.push(Check::maps_equal("action unital", &unit, &LinMap::identity(&m.space), |t| {
        vec!["1".into(), m.space.label(t)]
    }));
    r
}

/// Right comodule: `coaction` sends `e_m` to `ρ(m) = Σ m₀ ⊗ m₁ ∈ M⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleData {
    pub host: BialgebraData,
    pub space: Space,
    pub coaction: LinMap,
}

impl ComoduleData {
    pub fn new(host: &BialgebraData, space: Space, coaction: LinMap) -> Result<ComoduleData> {
        let (nh, dm) = (host.dim(), space.dim());
        if coaction.domain().dim() != dm || coaction.codomain().dim() != dm * nh {
            return Err(Error::DimensionMismatch(format!(
                "coaction is {}→{}, expected {dm}→{}",
                coaction.domain().dim(),
                coaction.codomain().dim(),
                dm * nh
            )));
        }
        let coaction = coaction.with_spaces(&space, &space.tensor(host.space()));
        Ok(ComoduleData {
            host: host.clone(),
            space,
            coaction,
        })
    }

    /// `m ↦ m ⊗ 1`.
    pub fn trivial(host: &BialgebraData, space: Space) -> ComoduleData {
        let nh = host.dim();
        let mh = space.tensor(host.space());
        let coaction = LinMap::from_fn(&space, &mh, |i| tensor::tensor_vec(&Vector::unit(i, host.field()), host.one(), nh));
        ComoduleData::new(host, space, coaction).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn coact(&self, m: &Vector) -> Vector {
        self.coaction.apply(m)
    }

    pub fn with_host(&self, host: &BialgebraData) -> ComoduleData {
        ComoduleData {
            host: host.clone(),
            space: self.space.clone(),
            coaction: self.coaction.clone(),
        }
    }
}

/// `(ρ⊗id)ρ = (id⊗Δ)ρ` and `(id⊗ε)ρ = id` on every basis element.
pub fn check_comodule(c: &ComoduleData) -> Report {
    let mut r = Report::new("comodule");
    let (nh, dm) = (c.host.dim(), c.dim());
    let mhh = Space::tensor_all(&[c.space.clone(), c.host.space().clone(), c.host.space().clone()]);
    let lhs = LinMap::from_fn(&c.space, &mhh, |i| tensor::apply_leg(c.coaction.column(i), &[dm, nh], 0, &c.coaction));
    let rhs = LinMap::from_fn(&c.space, &mhh, |i| {
        tensor::apply_leg(c.coaction.column(i), &[dm, nh], 1, &c.host.coalgebra.comult)
    });
    let at = |i: usize| vec![c.space.label(i)];
    r.push(Check::maps_equal("coaction coassociative", &lhs, &rhs, at));
    let counit = LinMap::from_fn(&c.space, &c.space, |i| {
        tensor::apply_leg(c.coaction.column(i), &[dm, nh], 1, &c.host.coalgebra.counit)
    });
    r.push(Check::maps_equal("coaction counital", &counit, &LinMap::identity(&c.space), at));
    r
}
