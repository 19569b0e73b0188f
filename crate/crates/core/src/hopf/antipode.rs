use super::BialgebraData;
use crate::exactlin::{tensor, Accumulator, LinMap, Vector};
use crate::report::{Check, Report, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub bialgebra: BialgebraData,
    pub antipode: LinMap,
    pub antipode_inverse: Option<LinMap>,
}

impl HopfData {
    pub fn new(bialgebra: BialgebraData, antipode: LinMap) -> HopfData {
        let s = bialgebra.space().clone();
        HopfData {
            antipode: antipode.with_spaces(&s, &s),
            bialgebra,
            antipode_inverse: None,
        }
    }

    pub fn s(&self, v: &Vector) -> Vector {
        self.antipode.apply(v)
    }

    /// Panics if `S⁻¹` has not been computed; run `check_hopf` first.
    pub fn s_inv(&self, v: &Vector) -> Vector {
        self.antipode_inverse.as_ref().expect("antipode inverse not computed").apply(v)
    }
}

/// `Σ f(x₁) x₂` or `Σ x₁ f(x₂)` over `Δ(e_i)`, for the antipode axioms.
fn convolve(h: &BialgebraData, s: &LinMap, i: usize, left: bool) -> Vector {
    let n = h.dim();
    let mut acc = Accumulator::new(n);
    for (k, c) in h.coalgebra.comult.column(i).iter() {
        let (a, b) = (k / n, k % n);
        let p = if left {
            h.mul(s.column(a), &h.basis(b))
        } else {
            h.mul(&h.basis(a), s.column(b))
        };
        acc.add_scaled(&p, c);
    }
    acc.finish()
}

/// Antipode axioms on every basis element, then invertibility of `S`. A
/// missing `S⁻¹` is computed and stored; a supplied one is verified.
pub fn check_hopf(hd: &mut HopfData) -> Report {
    let mut r = Report::new("hopf");
    let h = &hd.bialgebra;
    let n = h.dim();
    for (name, left) in [("antipode m(S⊗id)Δ = ηε", true), ("antipode m(id⊗S)Δ = ηε", false)] {
        let mut check = Check::pass(name);
        for i in 0..n {
            let lhs = convolve(h, &hd.antipode, i, left);
            let rhs = h.one().scale(&h.coalgebra.eps_basis(i));
            if lhs != rhs {
                check = Check::with_witness(
                    name,
                    Witness {
                        at: vec![h.space().label(i)],
                        lhs: lhs.display(h.space()),
                        rhs: rhs.display(h.space()),
                    },
                )
                .with_detail(format!("antipode axiom fails at basis element {}", h.space().label(i)));
                break;
            }
        }
        r.push(check);
    }
    let inv = match &hd.antipode_inverse {
        Some(given) => {
            let ok = given.compose(&hd.antipode).is_identity() && hd.antipode.compose(given).is_identity();
            r.push(Check::from_bool("antipode invertible", ok, "supplied S⁻¹ is not a two-sided inverse"));
            None
        }
        None => {
            let inv = hd.antipode.inverse();
            r.push(Check::from_bool("antipode invertible", inv.is_some(), "antipode not invertible"));
            inv
        }
    };
    if inv.is_some() {
        hd.antipode_inverse = inv;
    }
    r
}

/// Antipode order: smallest `k ≤ max` with `S^k = id`.
pub fn antipode_order(hd: &HopfData, max: usize) -> Option<usize> {
    let mut p = hd.antipode.clone();
    for k in 1..=max {
        if p.is_identity() {
            return Some(k);
        }
        p = hd.antipode.compose(&p);
    }
    None
}

/// `Δ^op` applied to a basis element, i.e. `Δ` followed by the flip.
pub fn delta_op(h: &BialgebraData, v: &Vector) -> Vector {
    let n = h.dim();
    tensor::permute(&h.delta(v), &[n, n], &[1, 0])
}
