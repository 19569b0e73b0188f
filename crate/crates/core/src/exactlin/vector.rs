use std::collections::BTreeMap;
use std::fmt;

use super::{Field, Scalar, Space};
use crate::error::{Error, Result};

/// Accumulators for spaces up to this dimension use a dense buffer; larger
/// ones use an ordered map. Both produce identical canonical vectors.
pub const DENSE_ACCUMULATOR_MAX_DIM: usize = 4096;

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
///
/// The canonical form makes structural equality the same as mathematical
/// equality, which is what every identity check relies on.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector {
    entries: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { entries: Vec::new() }
    }

    pub fn unit(i: usize, field: Field) -> Vector {
        Vector {
            entries: vec![(i, field.one())],
        }
    }

    pub fn term(i: usize, c: Scalar) -> Vector {
        if c.is_zero() {
            Vector::zero()
        } else {
            Vector { entries: vec![(i, c)] }
        }
    }

    /// Sums the given terms, merging repeated indices.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Vector {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in terms {
            match map.get_mut(&i) {
                Some(v) => *v = &*v + &c,
                None => {
                    map.insert(i, c);
                }
            }
        }
        Vector {
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_dense(coords: &[Scalar]) -> Vector {
        Vector {
            entries: coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, &Scalar)> + ExactSizeIterator + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    /// Coefficient at `i`, zero when absent.
    pub fn coeff(&self, i: usize, field: Field) -> Scalar {
        self.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn last(&self) -> Option<(usize, &Scalar)> {
        self.entries.last().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// `self + c * other`, by a linear merge.
    pub fn add_scaled(&self, other: &Vector, c: &Scalar) -> Vector {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let mut s = x.clone();
                        s.add_product(y, c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Vector { entries: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(other, &c.field().one()),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(other, &-c.field().one()),
        }
    }

    /// Renumbers coordinates; `f` must be injective on the support.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Vector {
        let mut entries: Vec<(usize, Scalar)> =
            self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect();
        entries.sort_by_key(|(i, _)| *i);
        Vector { entries }
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Vector {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        Vector { entries }
    }

    /// Pretty form using the labels of `space`.
    pub fn display(&self, space: &Space) -> String {
        if self.entries.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (i, c)) in self.entries.iter().enumerate() {
            let label = space.label(*i);
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                s.push_str(&label);
            } else {
                s.push_str(&format!("{mag}*{label}"));
            }
        }
        s
    }
}

/// Builds a vector from many scattered terms.
pub enum Accumulator {
    Dense { slots: Vec<Option<Scalar>>, touched: Vec<usize> },
    Sparse(BTreeMap<usize, Scalar>),
}

impl Accumulator {
    pub fn new(dim: usize) -> Accumulator {
        if dim <= DENSE_ACCUMULATOR_MAX_DIM {
            Accumulator::dense(dim)
        } else {
            Accumulator::sparse()
        }
    }

    pub fn dense(dim: usize) -> Accumulator {
        Accumulator::Dense {
            slots: vec![None; dim],
            touched: Vec::new(),
        }
    }

    pub fn sparse() -> Accumulator {
        Accumulator::Sparse(BTreeMap::new())
    }

    pub fn add_term(&mut self, i: usize, c: Scalar) {
        match self {
            Accumulator::Dense { slots, touched } => match &mut slots[i] {
                Some(v) => *v = &*v + &c,
                slot @ None => {
                    *slot = Some(c);
                    touched.push(i);
                }
            },
            Accumulator::Sparse(map) => match map.get_mut(&i) {
                Some(v) => *v = &*v + &c,
                None => {
                    map.insert(i, c);
                }
            },
        }
    }

    pub fn add_product(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        self.add_term(i, a * b);
    }

    pub fn add_scaled(&mut self, v: &Vector, c: &Scalar) {
        if c.is_one() {
            for (i, x) in v.iter() {
                self.add_term(i, x.clone());
            }
        } else {
            for (i, x) in v.iter() {
                self.add_term(i, x * c);
            }
        }
    }

    pub fn finish(self) -> Vector {
        match self {
            Accumulator::Dense { mut slots, mut touched } => {
                touched.sort_unstable();
                let entries = touched
                    .into_iter()
                    .filter_map(|i| slots[i].take().filter(|c| !c.is_zero()).map(|c| (i, c)))
                    .collect();
                Vector { entries }
            }
            Accumulator::Sparse(map) => Vector {
                entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            },
        }
    }
}

/// A vector together with the space it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub space: Space,
    pub coords: Vector,
}

impl Element {
    pub fn new(space: Space, coords: Vector) -> Result<Element> {
        if let Some(m) = coords.max_index() {
            if m >= space.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "coordinate {m} outside a space of dim {}",
                    space.dim()
                )));
            }
        }
        Ok(Element { space, coords })
    }

    pub fn basis(space: &Space, i: usize) -> Element {
        Element {
            coords: Vector::unit(i, space.field()),
            space: space.clone(),
        }
    }

    pub fn zero(space: &Space) -> Element {
        Element {
            space: space.clone(),
            coords: Vector::zero(),
        }
    }

    pub fn tensor(&self, other: &Element) -> Element {
        Element {
            space: self.space.tensor(&other.space),
            coords: super::tensor::tensor_vec(&self.coords, &other.coords, other.space.dim()),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coords.display(&self.space))
    }
}
