//! Independent dense evaluation over `BigRational` for the acceptance
//! checks. Structure constants are read out of the library objects once;
//! every product, coproduct and rank below is recomputed here without the
//! library's tensor, reduction or checking code.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use twistcheck::exactlin::{LinMap, Vector};
use twistcheck::hopf::BialgebraData;
use twistcheck::yd::YDAlgebra;

pub type Q = BigRational;
/// Sparse element of a tensor power, keyed by the multi-index of basis legs.
pub type Elem = BTreeMap<Vec<usize>, Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn to_q(s: &impl ToString) -> Q {
    Q::from_str(&s.to_string()).expect("rational scalar")
}

fn vector(v: &Vector) -> Vec<(usize, Q)> {
    v.iter().map(|(i, c)| (i, to_q(c))).collect()
}

fn push(out: &mut Elem, key: Vec<usize>, c: Q) {
    let e = out.entry(key).or_insert_with(Q::zero);
    *e += c;
}

fn clean(mut e: Elem) -> Elem {
    e.retain(|_, c| !c.is_zero());
    e
}

/// Dense structure constants of a finite-dimensional algebra, with optional
/// coalgebra data.
pub struct Dense {
    pub n: usize,
    /// `mult[i][j]` = terms of `e_i e_j`.
    pub mult: Vec<Vec<Vec<(usize, Q)>>>,
    pub unit: Vec<(usize, Q)>,
    /// `comult[i]` = terms `((j, k), c)` of `Δ(e_i)`.
    pub comult: Vec<Vec<((usize, usize), Q)>>,
    pub counit: Vec<Q>,
}

impl Dense {
    pub fn from_bialgebra(h: &BialgebraData) -> Dense {
        let n = h.dim();
        Dense {
            n,
            mult: (0..n).map(|i| (0..n).map(|j| vector(h.algebra.mul_basis(i, j))).collect()).collect(),
            unit: vector(&h.algebra.unit),
            comult: (0..n)
                .map(|i| vector(h.coalgebra.comult.column(i)).into_iter().map(|(t, c)| ((t / n, t % n), c)).collect())
                .collect(),
            counit: (0..n).map(|i| to_q(&h.coalgebra.eps_basis(i))).collect(),
        }
    }

    pub fn from_algebra(mult: &LinMap, unit: &Vector) -> Dense {
        let n = unit_dim(mult);
        Dense {
            n,
            mult: (0..n).map(|i| (0..n).map(|j| vector(mult.column(i * n + j))).collect()).collect(),
            unit: vector(unit),
            comult: Vec::new(),
            counit: Vec::new(),
        }
    }

    pub fn one(&self, legs: usize) -> Elem {
        let mut out: Elem = [(Vec::new(), Q::one())].into_iter().collect();
        for l in 0..legs {
            out = self.insert_one(&out, l);
        }
        out
    }

    /// Legwise product in the tensor power.
    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::new();
        for (kx, a) in x {
            for (ky, b) in y {
                let mut partial: Vec<(Vec<usize>, Q)> = vec![(Vec::new(), a * b)];
                for (i, j) in kx.iter().zip(ky) {
                    let mut next = Vec::new();
                    for (key, c) in &partial {
                        for (k, d) in &self.mult[*i][*j] {
                            let mut key = key.clone();
                            key.push(*k);
                            next.push((key, c * d));
                        }
                    }
                    partial = next;
                }
                for (key, c) in partial {
                    push(&mut out, key, c);
                }
            }
        }
        clean(out)
    }

    /// Applies `Δ` to leg `leg`.
    pub fn delta_leg(&self, x: &Elem, leg: usize) -> Elem {
        let mut out = Elem::new();
        for (k, c) in x {
            for ((a, b), d) in &self.comult[k[leg]] {
                let mut key = k[..leg].to_vec();
                key.extend([*a, *b]);
                key.extend_from_slice(&k[leg + 1..]);
                push(&mut out, key, c * d);
            }
        }
        clean(out)
    }

    /// Applies `ε` to leg `leg`.
    pub fn eps_leg(&self, x: &Elem, leg: usize) -> Elem {
        let mut out = Elem::new();
        for (k, c) in x {
            let mut key = k.clone();
            let i = key.remove(leg);
            push(&mut out, key, c * &self.counit[i]);
        }
        clean(out)
    }

    /// Inserts the unit as a new leg at position `pos`.
    pub fn insert_one(&self, x: &Elem, pos: usize) -> Elem {
        let mut out = Elem::new();
        for (k, c) in x {
            for (u, d) in &self.unit {
                let mut key = k.clone();
                key.insert(pos, *u);
                push(&mut out, key, c * d);
            }
        }
        clean(out)
    }
}

fn unit_dim(mult: &LinMap) -> usize {
    mult.codomain().dim()
}

pub fn pair_elem(v: &Vector, n: usize) -> Elem {
    clean(vector(v).into_iter().map(|(k, c)| (vec![k / n, k % n], c)).collect())
}

pub fn single_elem(v: &Vector) -> Elem {
    clean(vector(v).into_iter().map(|(k, c)| (vec![k], c)).collect())
}

/// Conjunction of the two-sided inverse, the four cocycle identities and
/// counitality of `F` and `F⁻¹`, evaluated densely. Returns the first
/// identity that fails.
pub fn twist_conditions(h: &Dense, f: &Elem, finv: &Elem) -> Result<(), &'static str> {
    let one2 = h.one(2);
    if h.mul(f, finv) != one2 || h.mul(finv, f) != one2 {
        return Err("F F⁻¹ = 1⊗1");
    }
    let f12 = h.insert_one(f, 2);
    let f23 = h.insert_one(f, 0);
    let lhs = h.mul(&f12, &h.delta_leg(f, 0));
    let rhs = h.mul(&f23, &h.delta_leg(f, 1));
    if lhs != rhs {
        return Err("(F⊗1)(Δ⊗id)F = (1⊗F)(id⊗Δ)F");
    }
    let g12 = h.insert_one(finv, 2);
    let g23 = h.insert_one(finv, 0);
    if h.mul(&h.delta_leg(finv, 1), &g23) != h.mul(&h.delta_leg(finv, 0), &g12) {
        return Err("((id⊗Δ)F⁻¹)(1⊗F⁻¹) = ((Δ⊗id)F⁻¹)(F⁻¹⊗1)");
    }
    if h.mul(&g12, &f23) != h.mul(&h.delta_leg(f, 0), &h.delta_leg(finv, 1)) {
        return Err("(F⁻¹⊗1)(1⊗F) = ((Δ⊗id)F)((id⊗Δ)F⁻¹)");
    }
    if h.mul(&g23, &f12) != h.mul(&h.delta_leg(f, 1), &h.delta_leg(finv, 0)) {
        return Err("(1⊗F⁻¹)(F⊗1) = ((id⊗Δ)F)((Δ⊗id)F⁻¹)");
    }
    let one1 = h.one(1);
    for (x, what) in [(f, "F"), (finv, "F⁻¹")] {
        if h.eps_leg(x, 0) != one1 || h.eps_leg(x, 1) != one1 {
            return Err(if what == "F" { "counital F" } else { "counital F⁻¹" });
        }
    }
    Ok(())
}

/// `(a♯h)(b♯k) = a(h₁▷b)♯h₂k`, returned as `mult[(i,p)][(j,q)]` over the
/// flattened index `i·dim H + p`.
pub fn smash_mult(a: &YDAlgebra, h: &Dense) -> Vec<Vec<BTreeMap<usize, Q>>> {
    let d = a.dim();
    let nh = h.n;
    let am = Dense::from_algebra(&a.mult, &a.unit);
    let act = |x: usize, b: usize| vector(a.yd.module.act_basis(x, b));
    let n = d * nh;
    let mut out = vec![vec![BTreeMap::new(); n]; n];
    for i in 0..d {
        for p in 0..nh {
            for j in 0..d {
                for qq in 0..nh {
                    let cell = &mut out[i * nh + p][j * nh + qq];
                    for ((h1, h2), c) in &h.comult[p] {
                        for (b2, e) in act(*h1, j) {
                            for (ab, f) in &am.mult[i][b2] {
                                for (hk, g) in &h.mult[*h2][qq] {
                                    let v = c * &e * f * g;
                                    *cell.entry(ab * nh + hk).or_insert_with(Q::zero) += v;
                                }
                            }
                        }
                    }
                    cell.retain(|_, v: &mut Q| !v.is_zero());
                }
            }
        }
    }
    out
}

/// Rank of a family of sparse rows by elimination on the smallest column.
pub fn rank(rows: impl IntoIterator<Item = BTreeMap<usize, Q>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Q>> = BTreeMap::new();
    for mut row in rows {
        loop {
            row.retain(|_, c| !c.is_zero());
            let Some((&col, lead)) = row.iter().next() else { break };
            match pivots.get(&col) {
                Some(p) => {
                    let factor = lead / &p[&col];
                    for (k, v) in p {
                        let e = row.entry(*k).or_insert_with(Q::zero);
                        *e -= &factor * v;
                    }
                }
                None => {
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}
