use crate::error::{Error, Result};
use crate::exactlin::reduce::{Echelon, Solver};
use crate::exactlin::{tensor, Accumulator, LinMap, QuotientSpace, ReductionPath, Scalar, Space, Vector};
use crate::hopf::AlgebraData;
use crate::report::{Check, Report};

/// `𝓗⊗_A𝓗`: the quotient of `𝓗⊗𝓗` by `t(a)x⊗y − x⊗s(a)y`.
///
/// When `𝓗` is free as a left `A`-module through `s` on a basis `n_k`, every
/// class has a unique representative `Σ x_k ⊗ n_k`, so the quotient is
/// `𝓗 ⊗ k^m` with projection `x ⊗ Σ s(c_k)n_k ↦ Σ t(c_k)x ⊗ k`. That map is
/// well defined when `s` is multiplicative and `t` anti-multiplicative; the
/// explicit relation quotient (`generic`) is kept as an independent route.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    pub ambient: Space,
    pub quotient: Space,
    pub project: LinMap,
    pub free_basis: Vec<usize>,
    total_dim: usize,
    base_dim: usize,
    /// Per basis `y` of `𝓗`: `(i, k, λ)` with `y = Σ λ s(a_i) n_k`.
    decompose: Vec<Vec<(usize, usize, Scalar)>>,
    /// Left multiplication by `t(a_i)`.
    target_left: Vec<LinMap>,
    source: LinMap,
    target: LinMap,
    total_space: Space,
}

impl BalancedTensor {
    pub fn new(total: &AlgebraData, source: &LinMap, target: &LinMap) -> Result<BalancedTensor> {
        let n = total.dim();
        let d = source.domain().dim();
        if source.codomain().dim() != n || target.codomain().dim() != n || target.domain().dim() != d {
            return Err(Error::DimensionMismatch("source and target must map A into 𝓗".into()));
        }
        if d == 0 || n % d != 0 {
            return Err(Error::Invalid(format!("dim 𝓗 = {n} is not a multiple of dim A = {d}")));
        }
        let f = total.field();
        let s_left: Vec<LinMap> = (0..d).map(|i| total.left_mult(source.column(i))).collect();
        let mut ech = Echelon::new(n);
        let mut free_basis = Vec::new();
        for j in 0..n {
            if ech.rank() == n {
                break;
            }
            let mut trial = ech.clone();
            let block: Vec<&Vector> = s_left.iter().map(|l| l.column(j)).collect();
            if block.iter().all(|v| trial.insert((*v).clone())) {
                ech = trial;
                free_basis.push(j);
            }
        }
        if ech.rank() != n {
            return Err(Error::Invalid(format!(
                "𝓗 is not free as a left A-module through s on basis vectors (rank {} of {n})",
                ech.rank()
            )));
        }
        let m = free_basis.len();
        // column k*d + i is s(a_i) n_k
        let cols: Vec<Vector> = (0..m)
            .flat_map(|k| s_left.iter().map(|l| l.column(free_basis[k]).clone()).collect::<Vec<_>>())
            .collect();
        let solver = Solver::new(&cols, n);
        let decompose: Vec<Vec<(usize, usize, Scalar)>> = (0..n)
            .map(|y| {
                let sol = solver.solve(&Vector::unit(y, f)).expect("free basis spans 𝓗");
                sol.iter().map(|(c, l)| (c % d, c / d, l.clone())).collect()
            })
            .collect();
        let target_left: Vec<LinMap> = (0..d).map(|i| total.left_mult(target.column(i))).collect();
        let ambient = total.space.tensor(&total.space);
        let labels = (0..n * m).map(|q| {
            format!("{}⊗_A{}", total.space.label(q / m), total.space.label(free_basis[q % m]))
        });
        let quotient = Space::new(f, labels)?;
        let mut out = BalancedTensor {
            ambient: ambient.clone(),
            quotient: quotient.clone(),
            project: LinMap::zero(&ambient, &quotient),
            free_basis,
            total_dim: n,
            base_dim: d,
            decompose,
            target_left,
            source: source.clone(),
            target: target.clone(),
            total_space: total.space.clone(),
        };
        let project = LinMap::par_from_fn(&ambient, &quotient, |k| out.project_basis_pair(k / n, k % n));
        out.project = project;
        Ok(out)
    }

    fn project_basis_pair(&self, x: usize, y: usize) -> Vector {
        let m = self.free_basis.len();
        let mut acc = Accumulator::new(self.total_dim * m);
        for (i, k, l) in &self.decompose[y] {
            for (x2, c) in self.target_left[*i].column(x).iter() {
                acc.add_product(x2 * m + k, l, c);
            }
        }
        acc.finish()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Rank `m` of `𝓗` as a free left `A`-module.
    pub fn rank(&self) -> usize {
        self.free_basis.len()
    }

    /// Class of an element of `𝓗⊗𝓗`.
    pub fn project(&self, v: &Vector) -> Vector {
        self.project.apply(v)
    }

    /// Canonical representative `Σ x ⊗ n_k` of a class.
    pub fn representative(&self, q: &Vector) -> Vector {
        let m = self.rank();
        let n = self.total_dim;
        Vector::from_terms(q.iter().map(|(i, c)| (i / m * n + self.free_basis[i % m], c.clone())))
    }

    /// `𝓗⊗_A𝓗⊗_A𝓗`, identified with `𝓗 ⊗ k^m ⊗ k^m`.
    pub fn triple_space(&self) -> Space {
        let m = self.rank();
        let labels = (0..self.dim() * m).map(|q| {
            format!("{}⊗_A{}", self.quotient.label(q / m), self.total_space.label(self.free_basis[q % m]))
        });
        Space::new(self.quotient.field(), labels).expect("labels are distinct")
    }

    /// Class of an element of `𝓗⊗𝓗⊗𝓗`: the third leg is reduced first, then
    /// the first two. Well defined once `s(A)` and `t(A)` commute.
    pub fn project3(&self, v: &Vector) -> Vector {
        let n = self.total_dim;
        let m = self.rank();
        let mut acc = Accumulator::new(self.dim() * m);
        for (idx, c) in v.iter() {
            let (x, y, z) = (idx / (n * n), (idx / n) % n, idx % n);
            for (i, k, l) in &self.decompose[z] {
                let cl = c * l;
                for (y2, e) in self.target_left[*i].column(y).iter() {
                    let ce = &cl * e;
                    for (q, p) in self.project.column(x * n + y2).iter() {
                        acc.add_product(q * m + k, &ce, p);
                    }
                }
            }
        }
        acc.finish()
    }

    /// The spanning relations `t(a)x⊗y − x⊗s(a)y` over basis `a, x, y`.
    pub fn relations(&self, total: &AlgebraData) -> Vec<Vector> {
        let n = self.total_dim;
        let f = total.field();
        let mut out = Vec::with_capacity(self.base_dim * n * n);
        for i in 0..self.base_dim {
            let tl = &self.target_left[i];
            let sl = total.left_mult(self.source.column(i));
            for x in 0..n {
                for y in 0..n {
                    let lhs = tensor::tensor_vec(tl.column(x), &Vector::unit(y, f), n);
                    let rhs = tensor::tensor_vec(&Vector::unit(x, f), sl.column(y), n);
                    let r = lhs.sub(&rhs);
                    if !r.is_zero() {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    /// The quotient by the explicit relation span, by row reduction.
    pub fn generic(&self, total: &AlgebraData, path: ReductionPath) -> QuotientSpace {
        QuotientSpace::from_vectors(&self.ambient, self.relations(total), path)
    }

    pub fn source(&self) -> &LinMap {
        &self.source
    }

    pub fn target(&self) -> &LinMap {
        &self.target
    }
}

/// Cross-checks the structured quotient against the explicit one: equal
/// dimensions, every relation projects to zero, and the projection is onto.
/// Together these force equal kernels.
pub fn check_balanced_routes(b: &BalancedTensor, total: &AlgebraData) -> Report {
    let mut r = Report::new("balanced tensor");
    let generic = b.generic(total, ReductionPath::Auto);
    r.push(Check::from_bool(
        "dimension agrees with relation quotient",
        generic.dim() == b.dim(),
        format!("structured {} vs relation quotient {}", b.dim(), generic.dim()),
    ));
    let bad = b.relations(total).iter().position(|v| !b.project(v).is_zero());
    r.push(Check::from_bool(
        "projection kills every relation",
        bad.is_none(),
        format!("relation #{} survives", bad.unwrap_or(0)),
    ));
    r.push(Check::from_bool(
        "projection is onto",
        b.project.rank() == b.dim(),
        "rank deficient",
    ));
    r
}
