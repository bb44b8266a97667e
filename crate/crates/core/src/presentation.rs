//! Graded quiver presentations and their JSON input schema.
//!
//! A presentation encodes the base algebra `kQ/I` together with a grading
//! of the arrows by a group; the grading determines the Galois covering.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Path, QuiverArrow, Relation, Term};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::group::{Group, GroupElem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawArrow {
    pub id: String,
    pub src: String,
    pub tgt: String,
    pub weight: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTerm {
    pub coeff: String,
    pub path: Vec<String>,
}

/// The JSON document accepted by `load_presentation`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPresentation {
    pub field: FieldSpec,
    pub group: Group,
    pub vertices: Vec<String>,
    pub arrows: Vec<RawArrow>,
    pub relations: Vec<Vec<RawTerm>>,
    pub nilbound: usize,
}

#[derive(Debug, Clone)]
pub struct GradedArrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
    pub weight: GroupElem,
}

/// A validated finite quiver with homogeneous admissible relations and a
/// grading of its arrows.
#[derive(Debug, Clone)]
pub struct GradedQuiverPresentation<F: Field> {
    field: F,
    group: Group,
    vertices: Vec<String>,
    arrows: Vec<GradedArrow>,
    relations: Vec<Relation<F::Elem>>,
    nilbound: usize,
    algebra: Arc<Algebra<F>>,
}

/// A presentation over whichever field the document named.
#[derive(Debug, Clone)]
pub enum AnyPresentation {
    Prime(GradedQuiverPresentation<PrimeField>),
    Rational(GradedQuiverPresentation<Rationals>),
}

/// Parses and validates a JSON presentation.
pub fn load_presentation(document: &str) -> Result<AnyPresentation> {
    let raw: RawPresentation = serde_json::from_str(document).map_err(|e| Error::Schema(e.to_string()))?;
    match raw.field {
        FieldSpec::Prime { p } => {
            let field = PrimeField::new(p)?;
            Ok(AnyPresentation::Prime(GradedQuiverPresentation::from_raw(field, &raw)?))
        }
        FieldSpec::Rationals => Ok(AnyPresentation::Rational(GradedQuiverPresentation::from_raw(Rationals, &raw)?)),
    }
}

impl<F: Field> GradedQuiverPresentation<F> {
    pub fn from_raw(field: F, raw: &RawPresentation) -> Result<Self> {
        if raw.field != field.spec() {
            return Err(Error::Schema(format!("document field {} does not match {}", raw.field, field.spec())));
        }
        let vindex = |name: &str| {
            raw.vertices.iter().position(|v| v == name).ok_or_else(|| Error::Schema(format!("unknown vertex {name:?}")))
        };
        let mut arrows = Vec::new();
        for a in &raw.arrows {
            arrows.push(GradedArrow {
                id: a.id.clone(),
                src: vindex(&a.src)?,
                tgt: vindex(&a.tgt)?,
                weight: raw.group.element(a.weight.clone())?,
            });
        }
        let aindex = |name: &str| {
            raw.arrows.iter().position(|a| a.id == name).ok_or_else(|| Error::Schema(format!("unknown arrow {name:?}")))
        };
        let mut relations = Vec::new();
        for rel in &raw.relations {
            let mut terms = Vec::new();
            for t in rel {
                let path = t.path.iter().map(|a| aindex(a)).collect::<Result<Path>>()?;
                terms.push(Term { coeff: field.parse(&t.coeff)?, path });
            }
            relations.push(Relation { terms });
        }
        Self::new(field, raw.group, raw.vertices.clone(), arrows, relations, raw.nilbound)
    }

    pub fn new(
        field: F,
        group: Group,
        vertices: Vec<String>,
        arrows: Vec<GradedArrow>,
        relations: Vec<Relation<F::Elem>>,
        nilbound: usize,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::Schema(format!("duplicate vertex {v:?}")));
            }
        }
        let mut seen = HashSet::new();
        for a in &arrows {
            if !seen.insert(&a.id) {
                return Err(Error::Schema(format!("duplicate arrow {:?}", a.id)));
            }
            if a.src >= vertices.len() || a.tgt >= vertices.len() {
                return Err(Error::Schema(format!("arrow {:?} has an unknown endpoint", a.id)));
            }
            group.element(a.weight.0.clone())?;
        }
        let mut cleaned = Vec::new();
        for (ri, rel) in relations.into_iter().enumerate() {
            let terms: Vec<Term<F::Elem>> = rel.terms.into_iter().filter(|t| !field.is_zero(&t.coeff)).collect();
            let mut ends = None;
            let mut weight: Option<GroupElem> = None;
            for t in &terms {
                if t.path.is_empty() {
                    return Err(Error::NotAdmissible { relation: ri });
                }
                for w in t.path.windows(2) {
                    if arrows[w[0]].tgt != arrows[w[1]].src {
                        return Err(Error::Schema(format!(
                            "relation {ri}: arrows {:?} and {:?} do not compose",
                            arrows[w[0]].id, arrows[w[1]].id
                        )));
                    }
                }
                let e = (arrows[t.path[0]].src, arrows[*t.path.last().unwrap()].tgt);
                match ends {
                    None => ends = Some(e),
                    Some(prev) if prev != e => {
                        return Err(Error::InhomogeneousRelation {
                            relation: ri,
                            detail: "paths with different endpoints".into(),
                        })
                    }
                    _ => {}
                }
                let w = t.path.iter().fold(group.identity(), |acc, &a| group.add(&acc, &arrows[a].weight));
                match &weight {
                    None => weight = Some(w),
                    Some(prev) if *prev != w => {
                        return Err(Error::InhomogeneousRelation {
                            relation: ri,
                            detail: format!("weights {prev} and {w}"),
                        })
                    }
                    _ => {}
                }
                if t.path.len() < 2 {
                    return Err(Error::NotAdmissible { relation: ri });
                }
            }
            if !terms.is_empty() {
                cleaned.push(Relation { terms });
            }
        }
        let qarrows = arrows.iter().map(|a| QuiverArrow { name: a.id.clone(), src: a.src, tgt: a.tgt }).collect();
        let algebra = Algebra::new(field.clone(), vertices.clone(), qarrows, cleaned.clone(), nilbound)?;
        Ok(Self { field, group, vertices, arrows, relations: cleaned, nilbound, algebra: Arc::new(algebra) })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[GradedArrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation<F::Elem>] {
        &self.relations
    }

    pub fn nilbound(&self) -> usize {
        self.nilbound
    }

    /// The base algebra `kQ/I`.
    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn path_weight(&self, p: &Path) -> GroupElem {
        p.iter().fold(self.group.identity(), |acc, &a| self.group.add(&acc, &self.arrows[a].weight))
    }

    /// Basis of the path space from `x` to `y` modulo relations.
    pub fn path_basis(&self, x: usize, y: usize) -> &[Path] {
        self.algebra.path_basis(x, y)
    }

    /// At most one arrow between any ordered pair of vertices.
    pub fn is_square_free(&self) -> bool {
        let mut seen = HashSet::new();
        self.arrows.iter().all(|a| seen.insert((a.src, a.tgt)))
    }

    /// The same quiver and relations graded by the trivial group.
    pub fn forget_grading(&self) -> Self {
        let group = Group::trivial();
        let arrows = self.arrows.iter().map(|a| GradedArrow { weight: group.identity(), ..a.clone() }).collect();
        Self { group, arrows, ..self.clone() }
    }

    pub fn to_raw(&self) -> RawPresentation {
        RawPresentation {
            field: self.field.spec(),
            group: self.group,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| RawArrow {
                    id: a.id.clone(),
                    src: self.vertices[a.src].clone(),
                    tgt: self.vertices[a.tgt].clone(),
                    weight: a.weight.0.clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|t| RawTerm {
                            coeff: t.coeff.to_string(),
                            path: t.path.iter().map(|&a| self.arrows[a].id.clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
            nilbound: self.nilbound,
        }
    }
}

impl AnyPresentation {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyPresentation::Prime(p) => p.field().spec(),
            AnyPresentation::Rational(p) => p.field().spec(),
        }
    }
}
