use super::GroupPresentation;
use crate::error::{Error, Result};
use crate::exactlin::{tensor, Field, Scalar, Vector};
use crate::hopf::{invert_in_algebra, BialgebraData};
use crate::twist::Twist;
use crate::yd::{check_rmatrix, RMatrix};

/// `(Z_2)^k` check: index bit masks multiply by XOR.
fn elementary_rank(g: &GroupPresentation) -> Result<usize> {
    let n = g.order();
    if !n.is_power_of_two() {
        return Err(Error::Invalid("bicharacter twists need an elementary abelian 2-group".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if g.mul(a, b) != a ^ b {
                return Err(Error::Invalid(
                    "group must be presented as (Z2)^k with XOR indexing, as built by elementary_abelian_2".into(),
                ));
            }
        }
    }
    Ok(n.trailing_zeros() as usize)
}

fn sign(field: Field, bits: u32) -> Scalar {
    field.from_i64(if bits % 2 == 0 { 1 } else { -1 })
}

/// Character idempotents `e_a = (1/|G|) Σ_b χ_a(g_b⁻¹) g_b` with
/// `χ_a(g_b) = (−1)^{a·b}`.
pub fn character_idempotents(g: &GroupPresentation, field: Field) -> Result<Vec<Vector>> {
    elementary_rank(g)?;
    let n = g.order();
    if field.characteristic() == 2 {
        return Err(Error::Invalid("|G| must be invertible in the field".into()));
    }
    let inv_n = field.from_i64(n as i64).inv().unwrap();
    Ok((0..n)
        .map(|a| {
            Vector::from_terms((0..n).map(|b| (b, &sign(field, (a & g.inv(b)).count_ones()) * &inv_n)))
        })
        .collect())
}

/// `β(χ_a, χ_b) = (−1)^{aᵀ M b}` for a binary `k×k` matrix `M`.
pub fn bicharacter_value(matrix: &[Vec<u8>], a: usize, b: usize) -> u32 {
    let mut s = 0u32;
    for (i, row) in matrix.iter().enumerate() {
        for (j, &m) in row.iter().enumerate() {
            s += (m as u32 & 1) * (a >> i & 1) as u32 * (b >> j & 1) as u32;
        }
    }
    s
}

/// `Σ β(χ_a, χ_b) e_a ⊗ e_b`, certified as a twist; the same element is also
/// returned as an R-matrix when `check_rmatrix` accepts it.
pub fn bicharacter_structures(
    g: &GroupPresentation,
    host: &BialgebraData,
    matrix: &[Vec<u8>],
) -> Result<(Twist, Option<RMatrix>)> {
    let k = elementary_rank(g)?;
    if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
        return Err(Error::Invalid(format!("bicharacter matrix must be {k}×{k}")));
    }
    if host.dim() != g.order() {
        return Err(Error::DimensionMismatch("host is not the group algebra of this group".into()));
    }
    let field = host.field();
    let idem = character_idempotents(g, field)?;
    let n = g.order();
    let mut f = Vector::zero();
    for a in 0..n {
        for b in 0..n {
            let beta = sign(field, bicharacter_value(matrix, a, b));
            f = f.add_scaled(&tensor::tensor_vec(&idem[a], &idem[b], n), &beta);
        }
    }
    let twist = Twist::new(host, f.clone())?;
    let r = if check_rmatrix(host, &f).passed() {
        Some(RMatrix::new(host, f)?)
    } else {
        None
    };
    Ok((twist, r))
}

/// `F = (u⊗u)Δ(u⁻¹)` for invertible `u` with `ε(u) = 1`; certified.
pub fn coboundary_twist(host: &BialgebraData, u: &Vector) -> Result<Twist> {
    let field = host.field();
    if host.eps(u) != field.one() {
        return Err(Error::Invalid(format!("coboundary needs ε(u) = 1, got {}", host.eps(u))));
    }
    let uinv = invert_in_algebra(&host.algebra, u)?;
    let n = host.dim();
    let uu = tensor::tensor_vec(u, u, n);
    let f = host.square().mul(&uu, &host.delta(&uinv));
    Twist::new(host, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_algebra, sweedler_h4};

    #[test]
    fn idempotents_are_orthogonal_and_complete() {
        let g = GroupPresentation::elementary_abelian_2(2);
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        let e = character_idempotents(&g, Field::Rationals).unwrap();
        let mut sum = Vector::zero();
        for a in 0..4 {
            for b in 0..4 {
                let p = h.mul(&e[a], &e[b]);
                assert_eq!(p, if a == b { e[a].clone() } else { Vector::zero() });
            }
            sum = sum.add(&e[a]);
        }
        assert_eq!(&sum, h.one());
    }

    #[test]
    fn bicharacter_value_is_bilinear() {
        let m = vec![vec![1, 0], vec![1, 1]];
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let lhs = bicharacter_value(&m, a ^ c, b) % 2;
                    let rhs = (bicharacter_value(&m, a, b) + bicharacter_value(&m, c, b)) % 2;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn bicharacter_twists_on_abelian_groups_are_r_matrices() {
        let g = GroupPresentation::elementary_abelian_2(2);
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        // every bicharacter twist on an abelian group is also an R-matrix
        let (_, r) = bicharacter_structures(&g, &h, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(r.is_some());
        assert!(bicharacter_structures(&g, &h, &[vec![1]]).is_err());
    }

    #[test]
    fn coboundary_requires_counit_one() {
        let h = sweedler_h4(Field::Rationals).unwrap().bialgebra;
        let u = h.one().scale(&h.field().from_i64(2));
        assert!(coboundary_twist(&h, &u).is_err());
        let x = h.basis(2);
        assert!(coboundary_twist(&h, &x).is_err());
    }

    #[test]
    fn coboundary_of_unit_is_trivial() {
        let h = sweedler_h4(Field::Rationals).unwrap().bialgebra;
        let t = coboundary_twist(&h, h.one()).unwrap();
        assert!(t.is_trivial());
    }
}
