use super::reduce::{dense_rref, Echelon};
use super::{Element, LinMap, Space, Vector};
use crate::error::{Error, Result};

/// Ambient spaces up to this dimension are reduced with the dense path.
pub const DENSE_QUOTIENT_MAX_DIM: usize = 48;

/// Quotient of a based space by the span of a list of relations.
///
/// The quotient basis is the set of non-pivot ambient coordinates (pivots are
/// rightmost, so the kept coordinates are the lexicographically earliest
/// independent ones) and `section` sends each quotient basis vector to its
/// ambient basis vector.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    pub ambient: Space,
    pub quotient: Space,
    pub relations: Vec<Vector>,
    pub project: LinMap,
    pub section: LinMap,
    free: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionPath {
    Auto,
    Dense,
    Sparse,
}

pub fn quotient_space(ambient: &Space, relations: &[Element]) -> Result<QuotientSpace> {
    for (k, r) in relations.iter().enumerate() {
        if r.space.dim() != ambient.dim() {
            return Err(Error::DimensionMismatch(format!(
                "relation {k} lives in a space of dim {}, ambient has dim {}",
                r.space.dim(),
                ambient.dim()
            )));
        }
    }
    let rels: Vec<Vector> = relations.iter().map(|r| r.coords.clone()).collect();
    Ok(QuotientSpace::from_vectors(ambient, rels, ReductionPath::Auto))
}

impl QuotientSpace {
    pub fn from_vectors(ambient: &Space, relations: Vec<Vector>, path: ReductionPath) -> QuotientSpace {
        let n = ambient.dim();
        let field = ambient.field();
        let dense = match path {
            ReductionPath::Dense => true,
            ReductionPath::Sparse => false,
            ReductionPath::Auto => n <= DENSE_QUOTIENT_MAX_DIM,
        };
        let rref = if dense {
            dense_rref(&relations, n, field)
        } else {
            let mut e = Echelon::new(n);
            for r in &relations {
                e.insert(r.clone());
            }
            e.into_rref()
        };
        let mut pivot_row: Vec<Option<usize>> = vec![None; n];
        for (k, (p, _)) in rref.iter().enumerate() {
            pivot_row[*p] = Some(k);
        }
        let free: Vec<usize> = (0..n).filter(|&i| pivot_row[i].is_none()).collect();
        let mut position = vec![usize::MAX; n];
        for (k, &f) in free.iter().enumerate() {
            position[f] = k;
        }
        let quotient = Space::new(field, free.iter().map(|&f| ambient.label(f)))
            .expect("ambient labels are distinct");
        let project_cols: Vec<Vector> = (0..n)
            .map(|j| match pivot_row[j] {
                None => Vector::unit(position[j], field),
                Some(k) => {
                    // row = e_j + Σ c_f e_f over free f, so e_j ≡ -Σ c_f e_f
                    let row = &rref[k].1;
                    let terms: Vec<_> = row
                        .iter()
                        .filter(|(i, _)| *i != j)
                        .map(|(i, c)| (position[i], -c))
                        .collect();
                    Vector::from_terms(terms)
                }
            })
            .collect();
        let project = LinMap::new(ambient.clone(), quotient.clone(), project_cols).unwrap();
        let section = LinMap::from_fn(&quotient, ambient, |k| Vector::unit(free[k], field));
        QuotientSpace {
            ambient: ambient.clone(),
            quotient,
            relations,
            project,
            section,
            free,
        }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Ambient coordinates kept as the quotient basis.
    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }

    pub fn project_vec(&self, v: &Vector) -> Vector {
        self.project.apply(v)
    }

    pub fn section_vec(&self, v: &Vector) -> Vector {
        self.section.apply(v)
    }

    /// project ∘ section = id and project kills every relation.
    pub fn verify(&self) -> bool {
        self.project.compose(&self.section).is_identity()
            && self.relations.iter().all(|r| self.project.apply(r).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{Field, Scalar};
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        Field::Rationals.from_i64(n)
    }

    #[test]
    fn no_relations_is_identity() {
        let s = Space::numbered(Field::Rationals, "e", 4);
        let qs = quotient_space(&s, &[]).unwrap();
        assert_eq!(qs.dim(), 4);
        assert!(qs.project.is_identity());
    }

    #[test]
    fn single_relation_identifies_basis_vectors() {
        let s = Space::numbered(Field::Rationals, "e", 2);
        let r = Element::new(s.clone(), Vector::from_terms([(0, q(1)), (1, q(-1))])).unwrap();
        let qs = quotient_space(&s, &[r]).unwrap();
        assert_eq!(qs.dim(), 1);
        assert_eq!(qs.project.column(0), qs.project.column(1));
        assert_eq!(qs.free_coordinates(), &[0]);
        assert!(qs.verify());
    }

    #[test]
    fn mismatched_relation_rejected() {
        let s = Space::numbered(Field::Rationals, "e", 2);
        let t = Space::numbered(Field::Rationals, "f", 3);
        assert!(quotient_space(&s, &[Element::basis(&t, 0)]).is_err());
    }

    proptest! {
        #[test]
        fn quotient_invariants(rows in proptest::collection::vec(proptest::collection::vec(-2i64..3, 7), 0..8)) {
            let s = Space::numbered(Field::Rationals, "e", 7);
            let rels: Vec<Vector> = rows.iter()
                .map(|r| Vector::from_terms(r.iter().enumerate().map(|(i, c)| (i, q(*c)))))
                .collect();
            let dense = QuotientSpace::from_vectors(&s, rels.clone(), ReductionPath::Dense);
            let sparse = QuotientSpace::from_vectors(&s, rels.clone(), ReductionPath::Sparse);
            prop_assert!(dense.verify());
            prop_assert_eq!(&dense.project, &sparse.project);
            prop_assert_eq!(dense.dim(), 7 - crate::exactlin::reduce::rank(&rels, 7));
            // section ∘ project is a projector whose kernel is the relation span
            let sp = dense.section.compose(&dense.project);
            for r in &rels {
                prop_assert!(sp.apply(r).is_zero());
            }
        }
    }
}
