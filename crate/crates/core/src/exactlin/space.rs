use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::Field;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
enum Shape {
    Basis(Vec<String>),
    /// Flattened factor list; composite index is row-major (leftmost factor slowest).
    Tensor(Vec<Space>),
}

/// A finite-dimensional vector space with a named basis.
#[derive(Clone, Debug)]
pub struct Space {
    field: Field,
    dim: usize,
    shape: Arc<Shape>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Space) -> bool {
        self.dim == other.dim
            && self.field == other.field
            && (Arc::ptr_eq(&self.shape, &other.shape) || self.shape == other.shape)
    }
}

impl Eq for Space {}

impl Space {
    pub fn new<S: Into<String>>(field: Field, labels: impl IntoIterator<Item = S>) -> Result<Space> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Invalid(format!("duplicate basis label `{l}`")));
            }
        }
        Ok(Space {
            field,
            dim: labels.len(),
            shape: Arc::new(Shape::Basis(labels)),
        })
    }

    /// Basis `prefix0, prefix1, ...`.
    pub fn numbered(field: Field, prefix: &str, dim: usize) -> Space {
        Space::new(field, (0..dim).map(|i| format!("{prefix}{i}"))).unwrap()
    }

    /// The ground field as a one-dimensional space.
    pub fn scalars(field: Field) -> Space {
        Space::new(field, ["1"]).unwrap()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self, other: &Space) -> Space {
        Space::tensor_all(&[self.clone(), other.clone()])
    }

    pub fn tensor_all(spaces: &[Space]) -> Space {
        assert!(!spaces.is_empty(), "empty tensor product");
        let field = spaces[0].field;
        let mut factors = Vec::new();
        for s in spaces {
            assert_eq!(s.field, field, "tensor product across fields");
            match &*s.shape {
                Shape::Basis(_) => factors.push(s.clone()),
                Shape::Tensor(fs) => factors.extend(fs.iter().cloned()),
            }
        }
        if factors.len() == 1 {
            return factors.pop().unwrap();
        }
        let dim = factors.iter().map(|f| f.dim).product();
        Space {
            field,
            dim,
            shape: Arc::new(Shape::Tensor(factors)),
        }
    }

    /// Tensor factors (a basic space is its own single factor).
    pub fn factors(&self) -> Vec<Space> {
        match &*self.shape {
            Shape::Basis(_) => vec![self.clone()],
            Shape::Tensor(fs) => fs.clone(),
        }
    }

    pub fn label(&self, i: usize) -> String {
        assert!(i < self.dim, "basis index {i} out of range for dim {}", self.dim);
        match &*self.shape {
            Shape::Basis(ls) => ls[i].clone(),
            Shape::Tensor(fs) => {
                let dims: Vec<usize> = fs.iter().map(|f| f.dim).collect();
                let idx = super::tensor::unflatten(i, &dims);
                idx.iter()
                    .zip(fs)
                    .map(|(&k, f)| f.label(k))
                    .collect::<Vec<_>>()
                    .join("⊗")
            }
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim).map(|i| self.label(i)).collect()
    }

    /// Index of a basis label; only meaningful on basic spaces.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &*self.shape {
            Shape::Basis(ls) => ls.iter().position(|l| l == label),
            Shape::Tensor(_) => (0..self.dim).find(|&i| self.label(i) == label),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.shape {
            Shape::Basis(ls) => write!(f, "<{}>", ls.join(", ")),
            Shape::Tensor(fs) => {
                let parts: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", parts.join("⊗"))
            }
        }
    }
}
