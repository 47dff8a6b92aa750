//! Reports: plain serializable records plus a text rendering. Nothing
//! time-dependent goes in here, so identical runs give identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub fixture: String,
    pub field: String,
    pub budget: u64,
    pub oracle: bool,
    pub algebra: AlgebraSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covers: Option<CoversSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub present: Option<PresentSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext_quiver: Option<ExtQuiverSection>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub loewy_length: usize,
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub strata: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverLine {
    pub simple: String,
    pub dims: Vec<usize>,
    pub length: usize,
    pub composition_factors: Vec<String>,
    pub hom_table: Vec<usize>,
    pub ext_table: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepLine {
    pub depth: usize,
    pub simple: String,
    pub b_dims: Vec<usize>,
    /// `(open simple, multiplicity)` in `P`.
    pub p_summands: Vec<(String, usize)>,
    pub p_dims: Vec<usize>,
    /// Lengths of the quotients of `P` passing the surjectivity test.
    pub passing_lengths: Vec<usize>,
    pub q_dims: Vec<usize>,
    pub unique_up_to_iso: bool,
    pub q_matches_formula: bool,
    pub stratifying: bool,
    pub work: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CoversSection {
    pub covers: Vec<CoverLine>,
    pub steps: Vec<StepLine>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PresentSection {
    pub generator: Vec<(String, Vec<usize>)>,
    pub repeated: Vec<String>,
    pub endo_dim: usize,
    pub gabriel_arrows: Vec<String>,
    pub gabriel_relations: Vec<String>,
    pub recovered_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockLine {
    pub source: String,
    pub target: String,
    pub ext2_dim: usize,
    pub pairs: Vec<String>,
    pub yoneda_kernel: Vec<Vec<String>>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ExtQuiverSection {
    pub arrows: Vec<String>,
    pub blocks: Vec<BlockLine>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "{} {} over {} (budget {}, oracle {})", self.command, self.fixture, self.field, self.budget, if self.oracle { "on" } else { "off" });
        let a = &self.algebra;
        let _ = writeln!(w, "algebra: dim {}, Loewy length {}", a.dim, a.loewy_length);
        let _ = writeln!(w, "  vertices: {}", list(&a.vertices));
        for x in &a.arrows {
            let _ = writeln!(w, "  arrow {x}");
        }
        for r in &a.relations {
            let _ = writeln!(w, "  relation {r} = 0");
        }
        let strata: Vec<String> = a.strata.iter().map(|s| format!("{{{}}}", s.join(","))).collect();
        let _ = writeln!(w, "  strata (closed first): {}", strata.join(" "));
        if let Some(c) = &self.covers {
            let _ = writeln!(w, "covers:");
            for l in &c.covers {
                let _ = writeln!(
                    w,
                    "  P({}): dims [{}] length {} factors [{}] hom [{}] ext [{}]",
                    l.simple,
                    list(&l.dims),
                    l.length,
                    l.composition_factors.join(" "),
                    list(&l.hom_table),
                    list(&l.ext_table)
                );
            }
            for s in &c.steps {
                let p: Vec<String> = s.p_summands.iter().map(|(v, m)| format!("{v}^{m}")).collect();
                let _ = writeln!(
                    w,
                    "  depth {} closed {}: B [{}] P = {} [{}] passing lengths [{}] Q [{}] unique {} formula {} stratifying {} work {}",
                    s.depth,
                    s.simple,
                    list(&s.b_dims),
                    if p.is_empty() { "0".to_string() } else { p.join("+") },
                    list(&s.p_dims),
                    list(&s.passing_lengths),
                    list(&s.q_dims),
                    s.unique_up_to_iso,
                    s.q_matches_formula,
                    s.stratifying,
                    s.work
                );
            }
        }
        if let Some(p) = &self.present {
            let _ = writeln!(w, "presentation:");
            for (l, d) in &p.generator {
                let _ = writeln!(w, "  summand P({l}): dims [{}]", list(d));
            }
            if !p.repeated.is_empty() {
                let _ = writeln!(w, "  repeated summands dropped: {}", p.repeated.join(" "));
            }
            let _ = writeln!(w, "  End(G): dim {}", p.endo_dim);
            for x in &p.gabriel_arrows {
                let _ = writeln!(w, "  arrow {x}");
            }
            for r in &p.gabriel_relations {
                let _ = writeln!(w, "  relation {r} = 0");
            }
            let _ = writeln!(w, "  recovered algebra: dim {}", p.recovered_dim);
        }
        if let Some(e) = &self.ext_quiver {
            let _ = writeln!(w, "ext quiver:");
            for x in &e.arrows {
                let _ = writeln!(w, "  arrow {x}");
            }
            for b in &e.blocks {
                let _ = writeln!(
                    w,
                    "  {} -> {}: pairs [{}] Ext2 {} kernel {} relations [{}]",
                    b.source,
                    b.target,
                    b.pairs.join(" "),
                    b.ext2_dim,
                    b.yoneda_kernel.len(),
                    b.relations.join("; ")
                );
            }
        }
        let _ = writeln!(w, "checks:");
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(w, "  {mark} {}", c.name);
            } else {
                let _ = writeln!(w, "  {mark} {}: {}", c.name, c.detail);
            }
        }
        out
    }
}
