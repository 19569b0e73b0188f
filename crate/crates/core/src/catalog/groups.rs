use crate::error::{Error, Result};

/// Finite group by its multiplication table; `table[a][b]` is the index of `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub identity: usize,
}

impl GroupPresentation {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<GroupPresentation> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Invalid("empty group".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return Err(Error::Invalid(format!("group table must be {n}×{n} with entries below {n}")));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!(
                            "group table not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Invalid("group table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::Invalid(format!("{} has no inverse", labels[a])))?;
            inverse.push(inv);
        }
        Ok(GroupPresentation {
            labels,
            table,
            inverse,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// `Z_n` with elements `1, g, g^2, ...`.
    pub fn cyclic(n: usize) -> GroupPresentation {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupPresentation::from_table(labels, table).unwrap()
    }

    /// `(Z_2)^k`; index bit `j` is the exponent of generator `j`, and
    /// generators are named `a, b, c, ...`.
    pub fn elementary_abelian_2(k: usize) -> GroupPresentation {
        assert!(k <= 26, "at most 26 generators");
        let n = 1usize << k;
        let labels = (0..n)
            .map(|m| {
                if m == 0 {
                    "1".to_string()
                } else {
                    (0..k).filter(|j| m >> j & 1 == 1).map(|j| (b'a' + j as u8) as char).collect()
                }
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| a ^ b).collect()).collect();
        GroupPresentation::from_table(labels, table).unwrap()
    }

    /// `S_3` acting on `{1,2,3}`, composed right to left: `(στ)(x) = σ(τ(x))`.
    pub fn symmetric3() -> GroupPresentation {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
        let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let (s, t) = (perms[a], perms[b]);
                        find([s[t[0]], s[t[1]], s[t[2]]])
                    })
                    .collect()
            })
            .collect();
        GroupPresentation::from_table(labels.iter().map(|s| s.to_string()).collect(), table).unwrap()
    }

    /// Direct product; `(g, h)` has index `g * |H| + h`.
    pub fn product(g: &GroupPresentation, h: &GroupPresentation) -> GroupPresentation {
        let m = h.order();
        let n = g.order() * m;
        let labels = (0..n).map(|i| format!("({},{})", g.labels[i / m], h.labels[i % m])).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m)).collect())
            .collect();
        GroupPresentation::from_table(labels, table).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_with_expected_products() {
        let g = GroupPresentation::symmetric3();
        assert!(!g.is_abelian());
        let (t12, t13, c) = (1, 2, 4);
        // (12)(13): 1→3→3, 3→1→2, 2→2→1, i.e. (132)
        assert_eq!(g.labels[g.mul(t12, t13)], "(132)");
        assert_eq!(g.inv(c), 5);
    }

    #[test]
    fn bad_table_rejected() {
        let labels = vec!["1".to_string(), "g".to_string()];
        assert!(GroupPresentation::from_table(labels, vec![vec![0, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn klein_four_labels() {
        let g = GroupPresentation::elementary_abelian_2(2);
        assert_eq!(g.labels, ["1", "a", "b", "ab"]);
        assert!(g.is_abelian());
        assert_eq!(GroupPresentation::product(&GroupPresentation::cyclic(2), &GroupPresentation::cyclic(3)).order(), 6);
    }
}
