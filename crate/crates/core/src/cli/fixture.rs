//! Fixture documents: a field, a quiver, relations, a stratification and an
//! optional block of expected results.

use std::collections::BTreeMap;
use std::path::Path as FsPath;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{realize, Algebra, AlgebraPresentation, Arrow, Path, Quiver, Relation, StratifiedAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub field: FieldSpec,
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    pub strata: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: Coefficient,
    pub path: Vec<String>,
}

/// An integer or a fraction written as `"num/den"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// Per simple (vertex label): dimension vector and length of its cover.
    #[serde(default)]
    pub covers: BTreeMap<String, ExpectedCover>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedCover {
    pub dims: Vec<usize>,
    pub length: usize,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

impl FixtureFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| parse_err(path.display().to_string(), format!("cannot read fixture: {e}")))?;
        Self::parse(&text).map_err(|e| match e {
            Error::Parse { location, message } => {
                Error::Parse { location: format!("{}: {location}", path.display()), message }
            }
            other => other,
        })
    }

    /// The same fixture over a different prime field.
    pub fn with_field(&self, spec: FieldSpec) -> Self {
        FixtureFile { field: spec, ..self.clone() }
    }

    fn coefficient<F: Field>(field: &F, c: &Coefficient, at: &str) -> Result<F::Elem> {
        match c {
            Coefficient::Int(n) => Ok(field.from_int(*n)),
            Coefficient::Text(s) => {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (s.trim(), "1"),
                };
                let num: i64 = num.parse().map_err(|_| parse_err(at, format!("bad coefficient '{s}'")))?;
                let den: i64 = den.parse().map_err(|_| parse_err(at, format!("bad coefficient '{s}'")))?;
                field
                    .from_ratio(num, den)
                    .ok_or_else(|| parse_err(at, format!("coefficient '{s}' has a vanishing denominator")))
            }
        }
    }

    /// Builds the presentation over `field` (whose spec must match, see
    /// [`FixtureFile::with_field`]).
    pub fn presentation<F: Field>(&self, field: &F) -> Result<AlgebraPresentation<F>> {
        let vertex = |label: &str, at: String| {
            self.quiver
                .vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| parse_err(at, format!("unknown vertex '{label}'")))
        };
        let mut arrows = Vec::new();
        for (i, a) in self.quiver.arrows.iter().enumerate() {
            let at = format!("quiver.arrows[{i}] ('{}')", a.name);
            arrows.push(Arrow {
                name: a.name.clone(),
                source: vertex(&a.source, format!("{at}.source"))?,
                target: vertex(&a.target, format!("{at}.target"))?,
            });
        }
        let quiver = Quiver::new(self.quiver.vertices.clone(), arrows)
            .map_err(|e| parse_err("quiver", e.to_string()))?;
        let mut relations = Vec::new();
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut terms = Vec::new();
            for (ti, t) in rel.iter().enumerate() {
                let at = format!("relations[{ri}][{ti}]");
                let idx = t
                    .path
                    .iter()
                    .map(|n| quiver.arrow_index(n).ok_or_else(|| parse_err(&at, format!("unknown arrow '{n}'"))))
                    .collect::<Result<Vec<_>>>()?;
                let path = Path::from_arrows(&quiver, idx)
                    .ok_or_else(|| parse_err(&at, format!("'{}' is not a composable path", t.path.join("."))))?;
                let c = Self::coefficient(field, &t.coeff, &at)?;
                if !field.is_zero(&c) {
                    terms.push((c, path));
                }
            }
            if !terms.is_empty() {
                relations.push(Relation { terms });
            }
        }
        AlgebraPresentation::new(field.clone(), quiver, relations)
    }

    pub fn strata_indices(&self) -> Result<Vec<Vec<usize>>> {
        self.strata
            .iter()
            .enumerate()
            .map(|(si, s)| {
                s.iter()
                    .map(|l| {
                        self.quiver
                            .vertices
                            .iter()
                            .position(|v| v == l)
                            .ok_or_else(|| parse_err(format!("strata[{si}]"), format!("unknown vertex '{l}'")))
                    })
                    .collect()
            })
            .collect()
    }

    /// Realizes and validates the fixture.
    pub fn build<F: Field>(&self, field: &F) -> Result<(Arc<Algebra<F>>, StratifiedAlgebra<F>)> {
        if field.spec() != self.field {
            return Err(parse_err("field", format!("fixture declares {} but {} was requested", self.field, field.spec())));
        }
        let pres = self.presentation(field)?;
        let alg = Arc::new(realize(&pres)?);
        let strat = StratifiedAlgebra::new(alg.clone(), self.strata_indices()?)
            .map_err(|e| parse_err("strata", e.to_string()))?;
        Ok((alg, strat))
    }
}

/// The fixture corpus shipped with the crate.
pub mod corpus {
    use super::FixtureFile;

    pub const F1: &str = include_str!("../../../../fixtures/f1_field.json");
    pub const F2: &str = include_str!("../../../../fixtures/f2_a2.json");
    pub const F2_DEGENERATE: &str = include_str!("../../../../fixtures/f2_degenerate.json");
    pub const F3: &str = include_str!("../../../../fixtures/f3_cp1.json");
    pub const F4: &str = include_str!("../../../../fixtures/f4_loop.json");
    pub const F5: &str = include_str!("../../../../fixtures/f5_chain.json");

    /// Looks a built-in fixture up by name (`F1` .. `F5`, `F2-degenerate`).
    pub fn get(name: &str) -> Option<FixtureFile> {
        let text = match name {
            "F1" => F1,
            "F2" => F2,
            "F2-degenerate" => F2_DEGENERATE,
            "F3" => F3,
            "F4" => F4,
            "F5" => F5,
            _ => return None,
        };
        Some(FixtureFile::parse(text).expect("built-in fixtures parse"))
    }

    pub fn names() -> [&'static str; 6] {
        ["F1", "F2", "F2-degenerate", "F3", "F4", "F5"]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;

    #[test]
    fn builtin_dimensions() {
        let f5 = PrimeField::new(5).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let (a, _) = corpus::get("F2").unwrap().build(&f5).unwrap();
        assert_eq!(a.dim(), 3);
        let (a, _) = corpus::get("F3").unwrap().build(&f2).unwrap();
        assert_eq!(a.dim(), 5);
        let (a, _) = corpus::get("F4").unwrap().build(&f2).unwrap();
        assert_eq!(a.dim(), 11);
        let f3 = PrimeField::new(3).unwrap();
        let (a, _) = corpus::get("F5").unwrap().build(&f3).unwrap();
        assert_eq!(a.dim(), 10);
    }

    #[test]
    fn bad_arrow_endpoint_is_named() {
        let text = corpus::F2.replace("\"target\": \"2\"", "\"target\": \"7\"");
        let fx = FixtureFile::parse(&text).unwrap();
        let err = fx.build(&PrimeField::new(5).unwrap()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("'a'") && msg.contains("unknown vertex '7'"), "{msg}");
    }

    #[test]
    fn syntax_error_reports_line() {
        let err = FixtureFile::parse("{\n  \"name\": \"x\",\n  oops }").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }
}
