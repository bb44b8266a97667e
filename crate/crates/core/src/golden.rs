//! Small named algebras used throughout the tests and the suite.

use crate::error::Result;
use crate::field::Field;
use crate::group::Group;
use crate::presentation::{GradedQuiverPresentation, RawArrow, RawPresentation, RawTerm};

fn arrow(id: &str, src: &str, tgt: &str, weight: Vec<i64>) -> RawArrow {
    RawArrow { id: id.into(), src: src.into(), tgt: tgt.into(), weight }
}

fn zero_path(path: &[String]) -> Vec<RawTerm> {
    vec![RawTerm { coeff: "1".into(), path: path.to_vec() }]
}

fn build<F: Field>(field: F, mut raw: RawPresentation) -> Result<GradedQuiverPresentation<F>> {
    raw.field = field.spec();
    GradedQuiverPresentation::from_raw(field, &raw)
}

/// Cyclic quiver on `m` vertices with every path of length `len` set to zero,
/// graded by `Z` with all arrows of weight 1 (the Nakayama algebra `N(m, len)`).
pub fn nakayama<F: Field>(field: F, m: usize, len: usize) -> Result<GradedQuiverPresentation<F>> {
    let vertices: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
    let arrows: Vec<RawArrow> =
        (1..=m).map(|i| arrow(&format!("a{i}"), &i.to_string(), &(i % m + 1).to_string(), vec![1])).collect();
    let relations = (0..m)
        .map(|start| {
            let path: Vec<String> = (0..len).map(|k| format!("a{}", (start + k) % m + 1)).collect();
            zero_path(&path)
        })
        .collect();
    build(
        field.clone(),
        RawPresentation {
            field: field.spec(),
            group: Group::FreeAbelian { rank: 1 },
            vertices,
            arrows,
            relations,
            nilbound: len,
        },
    )
}

/// `k[x]/(x^len)` with `x` of weight 1.
pub fn truncated_loop<F: Field>(field: F, len: usize) -> Result<GradedQuiverPresentation<F>> {
    build(
        field.clone(),
        RawPresentation {
            field: field.spec(),
            group: Group::FreeAbelian { rank: 1 },
            vertices: vec!["1".into()],
            arrows: vec![arrow("x", "1", "1", vec![1])],
            relations: vec![zero_path(&vec!["x".to_string(); len])],
            nilbound: len,
        },
    )
}

/// Linearly oriented `A_n` (`1 -> 2 -> ... -> n`), trivially graded.
pub fn linear_a<F: Field>(field: F, n: usize) -> Result<GradedQuiverPresentation<F>> {
    let arrows = (1..n).map(|i| arrow(&format!("b{i}"), &i.to_string(), &(i + 1).to_string(), vec![])).collect();
    build(
        field.clone(),
        RawPresentation {
            field: field.spec(),
            group: Group::trivial(),
            vertices: (1..=n).map(|i| i.to_string()).collect(),
            arrows,
            relations: vec![],
            nilbound: n.saturating_sub(1),
        },
    )
}

/// Auslander algebra of `k[x]/(x^2)`: `1 -a-> 2 -b-> 1` with `ab = 0`.
pub fn auslander_dual_numbers<F: Field>(field: F) -> Result<GradedQuiverPresentation<F>> {
    build(
        field.clone(),
        RawPresentation {
            field: field.spec(),
            group: Group::trivial(),
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![arrow("a", "1", "2", vec![]), arrow("b", "2", "1", vec![])],
            relations: vec![zero_path(&["a".into(), "b".into()])],
            nilbound: 3,
        },
    )
}

/// Two parallel arrows `1 => 2`.
pub fn kronecker<F: Field>(field: F) -> Result<GradedQuiverPresentation<F>> {
    build(
        field.clone(),
        RawPresentation {
            field: field.spec(),
            group: Group::FreeAbelian { rank: 1 },
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![arrow("a", "1", "2", vec![1]), arrow("b", "1", "2", vec![1])],
            relations: vec![],
            nilbound: 1,
        },
    )
}

/// `n` isolated vertices.
pub fn semisimple<F: Field>(field: F, n: usize) -> Result<GradedQuiverPresentation<F>> {
    build(
        field.clone(),
        RawPresentation {
            field: field.spec(),
            group: Group::trivial(),
            vertices: (1..=n).map(|i| i.to_string()).collect(),
            arrows: vec![],
            relations: vec![],
            nilbound: 0,
        },
    )
}

/// Cyclic quiver on `m` vertices with radical square zero, trivially graded.
pub fn cyclic_rad2<F: Field>(field: F, m: usize) -> Result<GradedQuiverPresentation<F>> {
    let p = nakayama(field, m, 2)?;
    Ok(p.forget_grading())
}
