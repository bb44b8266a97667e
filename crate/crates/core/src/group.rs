//! Grading groups: free abelian groups `Z^r` and cyclic groups `Z/m`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Group {
    FreeAbelian { rank: usize },
    Cyclic { order: u32 },
}

/// Group elements are integer vectors (length 1 residues for cyclic groups).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElem(pub Vec<i64>);

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Group {
    pub fn trivial() -> Self {
        Group::FreeAbelian { rank: 0 }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Group::FreeAbelian { rank: 0 } | Group::Cyclic { order: 1 })
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Group::FreeAbelian { rank } => *rank == 0,
            Group::Cyclic { .. } => true,
        }
    }

    fn width(&self) -> usize {
        match self {
            Group::FreeAbelian { rank } => *rank,
            Group::Cyclic { .. } => 1,
        }
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem(vec![0; self.width()])
    }

    pub fn normalize(&self, mut e: GroupElem) -> GroupElem {
        if let Group::Cyclic { order } = self {
            for c in &mut e.0 {
                *c = c.rem_euclid(*order as i64);
            }
        }
        e
    }

    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElem> {
        if coords.len() != self.width() {
            return Err(Error::Schema(format!(
                "group element {coords:?} has {} coordinates, expected {}",
                coords.len(),
                self.width()
            )));
        }
        Ok(self.normalize(GroupElem(coords)))
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.normalize(GroupElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect()))
    }

    pub fn neg(&self, a: &GroupElem) -> GroupElem {
        self.normalize(GroupElem(a.0.iter().map(|x| -x).collect()))
    }

    pub fn sub(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.add(a, &self.neg(b))
    }

    pub fn is_identity(&self, a: &GroupElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    /// All elements for a finite group.
    pub fn elements(&self) -> Option<Vec<GroupElem>> {
        match self {
            Group::FreeAbelian { rank: 0 } => Some(vec![self.identity()]),
            Group::FreeAbelian { .. } => None,
            Group::Cyclic { order } => Some((0..*order as i64).map(|k| GroupElem(vec![k])).collect()),
        }
    }
}

/// A finite truncation box of the grading group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub group: Group,
    /// Box half-width per coordinate; ignored for cyclic groups.
    pub half_width: i64,
    elements: Vec<GroupElem>,
}

impl Window {
    /// `[-w..w]^r` for `Z^r`; every residue for `Z/m`.
    pub fn symmetric(group: Group, half_width: i64) -> Result<Self> {
        if half_width < 0 {
            return Err(Error::InvalidArgument("window half-width must be non-negative".into()));
        }
        let elements = match group.elements() {
            Some(all) => all,
            None => {
                let Group::FreeAbelian { rank } = group else { unreachable!() };
                let mut acc = vec![Vec::new()];
                for _ in 0..rank {
                    acc = acc
                        .into_iter()
                        .flat_map(|p: Vec<i64>| {
                            (-half_width..=half_width).map(move |c| {
                                let mut q = p.clone();
                                q.push(c);
                                q
                            })
                        })
                        .collect();
                }
                acc.into_iter().map(GroupElem).collect()
            }
        };
        Ok(Self { group, half_width, elements })
    }

    pub fn elements(&self) -> &[GroupElem] {
        &self.elements
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        match self.group {
            Group::Cyclic { .. } => true,
            Group::FreeAbelian { .. } => g.0.iter().all(|c| c.abs() <= self.half_width),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_arithmetic_wraps() {
        let g = Group::Cyclic { order: 3 };
        let a = g.element(vec![2]).unwrap();
        assert_eq!(g.add(&a, &a), GroupElem(vec![1]));
        assert_eq!(g.neg(&a), GroupElem(vec![1]));
        assert!(g.element(vec![1, 2]).is_err());
    }

    #[test]
    fn window_is_symmetric_and_contains_identity() {
        let g = Group::FreeAbelian { rank: 2 };
        let w = Window::symmetric(g, 1).unwrap();
        assert_eq!(w.len(), 9);
        for e in w.elements() {
            assert!(w.contains(&g.neg(e)));
        }
        assert!(w.contains(&g.identity()));
        assert_eq!(Window::symmetric(Group::trivial(), 5).unwrap().len(), 1);
    }
}
