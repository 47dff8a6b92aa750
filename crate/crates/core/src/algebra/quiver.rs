//! Quivers, paths and presentations by relations.
//!
//! Convention used everywhere in this crate: an arrow `a: u -> v` acts on
//! a representation as a map `M_u -> M_v`, and a path is written as the
//! sequence of arrows in the order they are traversed. In the algebra the
//! product `x * y` means "first `y`, then `x`", so the traversal `[a, b]`
//! is the algebra element `b * a`.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::MalformedQuiver(format!("duplicate vertex label '{v}'")));
            }
        }
        let mut names = HashSet::new();
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::MalformedQuiver(format!(
                    "arrow '{}' has an endpoint outside the vertex list",
                    a.name
                )));
            }
            if !names.insert(a.name.as_str()) {
                return Err(Error::MalformedQuiver(format!("duplicate arrow name '{}'", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// All paths of exactly `len` arrows in degree-lexicographic order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut layer: Vec<Path> = (0..self.num_vertices()).map(Path::trivial).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &layer {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path { source: p.source, target: a.target, arrows });
                    }
                }
            }
            layer = next;
        }
        layer
    }

    /// All paths with fewer than `bound` arrows, degree-lexicographic.
    pub fn paths_below(&self, bound: usize) -> Vec<Path> {
        (0..bound).flat_map(|l| self.paths_of_length(l)).collect()
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }

    /// Same vertices, every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }
}

/// A path as a traversal sequence. Trivial paths have no arrows and equal
/// source and target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Option<Self> {
        let first = *arrows.first()?;
        let mut at = quiver.arrows[first].source;
        for &a in &arrows {
            if quiver.arrows[a].source != at {
                return None;
            }
            at = quiver.arrows[a].target;
        }
        Some(Path { source: quiver.arrows[first].source, target: at, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `then`, if the endpoints match.
    pub fn then(&self, then: &Path) -> Option<Path> {
        if self.target != then.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        Some(Path { source: self.source, target: then.target, arrows })
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F::Elem, Path)>,
}

impl<F: Field> Relation<F> {
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.first().map(|(_, p)| (p.source, p.target))
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn format(&self, field: &F, quiver: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(c, p)| {
                let label = quiver.path_label(p);
                if field.is_one(c) {
                    label
                } else {
                    format!("{}*{}", field.format(c), label)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A quiver with relations over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPresentation<F: Field> {
    pub field: F,
    pub quiver: Quiver,
    pub relations: Vec<Relation<F>>,
}

impl<F: Field> AlgebraPresentation<F> {
    pub fn new(field: F, quiver: Quiver, relations: Vec<Relation<F>>) -> Result<Self> {
        let pres = AlgebraPresentation { field, quiver, relations };
        pres.validate()?;
        Ok(pres)
    }

    /// Checks that relations are nonempty, homogeneous in (source, target)
    /// and built from paths of length at least two.
    pub fn validate(&self) -> Result<()> {
        for (ri, rel) in self.relations.iter().enumerate() {
            let Some((s, t)) = rel.endpoints() else {
                return Err(Error::MalformedRelation(format!("relation {ri} has no terms")));
            };
            for (_, p) in &rel.terms {
                if Path::from_arrows(&self.quiver, p.arrows.clone()).as_ref() != Some(p) {
                    return Err(Error::MalformedRelation(format!(
                        "relation {ri}: '{}' is not a path",
                        self.quiver.path_label(p)
                    )));
                }
                if (p.source, p.target) != (s, t) {
                    return Err(Error::MalformedRelation(format!(
                        "relation {ri} mixes paths with different endpoints"
                    )));
                }
                if p.len() < 2 {
                    return Err(Error::MalformedRelation(format!(
                        "relation {ri}: path '{}' is shorter than two arrows",
                        self.quiver.path_label(p)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds a presentation from labels: arrows as `(name, source, target)`
    /// and relations as lists of `(integer coefficient, arrow names)`.
    pub fn from_labels(
        field: F,
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[Vec<(i64, Vec<&str>)>],
    ) -> Result<Self> {
        let vertex = |l: &str| {
            vertices
                .iter()
                .position(|v| *v == l)
                .ok_or_else(|| Error::MalformedQuiver(format!("unknown vertex '{l}'")))
        };
        let mut arrow_list = Vec::new();
        for (name, s, t) in arrows {
            arrow_list.push(Arrow { name: name.to_string(), source: vertex(s)?, target: vertex(t)? });
        }
        let quiver = Quiver::new(vertices.iter().map(|v| v.to_string()).collect(), arrow_list)?;
        let mut rels = Vec::new();
        for rel in relations {
            let mut terms = Vec::new();
            for (c, names) in rel {
                let idx = names
                    .iter()
                    .map(|n| quiver.arrow_index(n).ok_or_else(|| Error::MalformedRelation(format!("unknown arrow '{n}'"))))
                    .collect::<Result<Vec<_>>>()?;
                let path = Path::from_arrows(&quiver, idx)
                    .ok_or_else(|| Error::MalformedRelation(format!("'{}' is not a path", names.join("."))))?;
                terms.push((field.from_int(*c), path));
            }
            rels.push(Relation { terms });
        }
        Self::new(field, quiver, rels)
    }

    pub fn format_relations(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.format(&self.field, &self.quiver)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle() -> Quiver {
        Quiver::new(
            vec!["o".into(), "c".into()],
            vec![
                Arrow { name: "a".into(), source: 0, target: 1 },
                Arrow { name: "b".into(), source: 1, target: 0 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_endpoint() {
        let err = Quiver::new(vec!["x".into()], vec![Arrow { name: "f".into(), source: 0, target: 3 }]);
        assert!(matches!(err, Err(Error::MalformedQuiver(m)) if m.contains("'f'")));
    }

    #[test]
    fn path_enumeration_is_ordered() {
        let q = cycle();
        let paths = q.paths_below(3);
        let labels: Vec<String> = paths.iter().map(|p| q.path_label(p)).collect();
        assert_eq!(labels, vec!["e_o", "e_c", "a", "b", "a.b", "b.a"]);
        let mut sorted = paths.clone();
        sorted.sort();
        assert_eq!(sorted, paths);
    }
}
