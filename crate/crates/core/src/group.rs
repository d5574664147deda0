//! Finite groups given by multiplication tables.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("product {a}*{b} = {value} is out of range")]
    OutOfRange { a: usize, b: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("group has no elements")]
    Empty,
}

/// A finite group on `0..order`, stored as a dense multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FinGroup {
    /// Builds a group from a row-major table, checking every group axiom.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != order * order {
            return Err(GroupError::TableSize {
                expected: order * order,
                found: table.len(),
            });
        }
        for a in 0..order {
            for b in 0..order {
                let v = table[a * order + b];
                if v >= order {
                    return Err(GroupError::OutOfRange { a, b, value: v });
                }
            }
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverses.push(inv);
        }
        Ok(Self {
            name: name.into(),
            order,
            table,
            identity,
            inverses,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Z/n with elements `0..n` under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::from_table(format!("Z{n}"), n, table).expect("cyclic table is a group")
    }

    /// The symmetric group on three letters. Element 0 is the identity,
    /// 1 and 2 are the 3-cycles, 3..6 are the transpositions.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = Vec::with_capacity(36);
        for a in &perms {
            for b in &perms {
                // apply a, then b
                table.push(index([b[a[0]], b[a[1]], b[a[2]]]));
            }
        }
        Self::from_table("S3", 6, table).expect("S3 table is a group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_homomorphism_to(&self, target: &FinGroup, map: &[usize]) -> bool {
        map.len() == self.order
            && map.iter().all(|&v| v < target.order)
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }

    /// Parses the short names used by generator directives: `Z<n>`, `S3`, `1`.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "1" | "trivial" => Some(Self::trivial()),
            "S3" => Some(Self::symmetric3()),
            _ => {
                let n: usize = name.strip_prefix('Z')?.parse().ok()?;
                (n > 0).then(|| Self::cyclic(n))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_group() {
        let g = FinGroup::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.identity(), 0);
        for t in 3..6 {
            assert_eq!(g.inv(t), t);
        }
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn rejects_non_group() {
        // {1, s} with s*s = s
        let err = FinGroup::from_table("M", 2, vec![0, 1, 1, 1]).unwrap_err();
        assert_eq!(err, GroupError::NoInverse(1));
    }

    #[test]
    fn parses_names() {
        assert_eq!(FinGroup::by_name("Z4").unwrap().order(), 4);
        assert_eq!(FinGroup::by_name("S3").unwrap().order(), 6);
        assert_eq!(FinGroup::by_name("1").unwrap().order(), 1);
        assert!(FinGroup::by_name("Z0").is_none());
        assert!(FinGroup::by_name("Q8").is_none());
    }
}
