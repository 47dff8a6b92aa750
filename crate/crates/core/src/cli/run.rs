//! The four pipelines behind the command line.

use std::sync::Arc;

use crate::algebra::{realize, Algebra, StratifiedAlgebra};
use crate::covers::{construct_all_covers, GlueState};
use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, PrimeField, Rationals};
use crate::modcat::{composition_series, is_isomorphic, projective, simples, Module};
use crate::presentation::{
    endomorphism_algebra, ext_quiver_with_quadratic_relations, gabriel_presentation, projective_generator, recover,
};
use crate::recollement::RecollementDatum;

use super::fixture::FixtureFile;
use super::report::{
    AlgebraSummary, BlockLine, Check, CoverLine, CoversSection, ExtQuiverSection, PresentSection, Report, StepLine,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Covers,
    Present,
    ExtQuiver,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Covers => "covers",
            Command::Present => "present",
            Command::ExtQuiver => "extquiver",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub budget: u64,
    pub oracle: bool,
    /// Replaces the fixture's field by `F_p`.
    pub prime: Option<u64>,
}

pub fn run(command: Command, fixture: &FixtureFile, opts: &Options) -> Result<Report> {
    let spec = match opts.prime {
        Some(p) => FieldSpec::PrimeField { p },
        None => fixture.field,
    };
    let fixture = fixture.with_field(spec);
    match spec {
        FieldSpec::PrimeField { p } => {
            let f = PrimeField::new(p).ok_or(Error::NonPrimeField(p))?;
            run_over(command, &fixture, &f, opts)
        }
        FieldSpec::Rationals => run_over(command, &fixture, &Rationals, opts),
    }
}

fn run_over<F: Field>(command: Command, fx: &FixtureFile, field: &F, opts: &Options) -> Result<Report> {
    let (a, sa) = fx.build(field)?;
    let mut report = Report {
        command: command.name().into(),
        fixture: fx.name.clone(),
        field: field.spec().to_string(),
        budget: opts.budget,
        oracle: opts.oracle,
        algebra: summarize(&a, &sa),
        ..Report::default()
    };
    if let Some(d) = fx.expected.as_ref().and_then(|e| e.dim) {
        report.checks.push(Check::new("expected dimension", d == a.dim(), format!("{} against {d}", a.dim())));
    }
    match command {
        Command::Covers => {
            let state = construct_all_covers(&sa, opts.budget)?;
            covers_section(&mut report, fx, &a, &state, opts)?;
        }
        Command::Present => {
            let state = construct_all_covers(&sa, opts.budget)?;
            present_section(&mut report, &state)?;
        }
        Command::ExtQuiver => ext_section(&mut report, &a)?,
        Command::Check => {
            report.checks.push(Check::new("multiplication is associative", a.is_associative(), ""));
            recollement_checks(&mut report, &a, &sa)?;
            let again = realize(&gabriel_presentation(&a))?;
            report.checks.push(Check::new("presentation round trip", again.block_dims() == a.block_dims(), ""));
            let state = construct_all_covers(&sa, opts.budget)?;
            covers_section(&mut report, fx, &a, &state, opts)?;
            present_section(&mut report, &state)?;
            ext_section(&mut report, &a)?;
        }
    }
    Ok(report)
}

fn summarize<F: Field>(a: &Algebra<F>, sa: &StratifiedAlgebra<F>) -> AlgebraSummary {
    let q = a.quiver();
    AlgebraSummary {
        dim: a.dim(),
        loewy_length: a.loewy_length(),
        vertices: q.vertices.clone(),
        arrows: q.arrows.iter().map(|x| format!("{}: {} -> {}", x.name, q.vertices[x.source], q.vertices[x.target])).collect(),
        relations: a.presentation().format_relations(),
        strata: sa.strata.iter().map(|s| s.iter().map(|&v| q.vertices[v].clone()).collect()).collect(),
    }
}

fn labels<F: Field>(a: &Algebra<F>, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| a.vertex_label(v).to_string()).collect()
}

fn covers_section<F: Field>(
    report: &mut Report,
    fx: &FixtureFile,
    a: &Arc<Algebra<F>>,
    state: &GlueState<F>,
    opts: &Options,
) -> Result<()> {
    let mut section = CoversSection::default();
    for c in state.covers() {
        let s = c.summary();
        section.covers.push(CoverLine {
            simple: s.simple.clone(),
            dims: s.dims.clone(),
            length: s.length,
            composition_factors: labels(a, &composition_series(&c.module)),
            hom_table: s.hom_table.clone(),
            ext_table: s.ext_table.clone(),
        });
        let verified = c.verify();
        report.checks.push(Check::new(
            format!("certificate {}", c.label),
            verified.is_ok(),
            verified.err().map(|e| e.to_string()).unwrap_or_default(),
        ));
        if opts.oracle {
            let iso = is_isomorphic(&c.module, &projective(a, c.vertex))?.is_some();
            report.checks.push(Check::new(format!("oracle {}", c.label), iso, "compared with the direct projective"));
        }
        if let Some(e) = fx.expected.as_ref().and_then(|e| e.covers.get(&c.label)) {
            let ok = e.dims == s.dims && e.length == s.length;
            report.checks.push(Check::new(format!("expected {}", c.label), ok, ""));
        }
    }
    for (level, step) in state.closed_steps() {
        let la = &level.algebra;
        let name = |v: usize| la.vertex_label(v).to_string();
        let stratifying = match &level.datum {
            Some(d) => d.is_stratifying()?,
            None => true,
        };
        section.steps.push(StepLine {
            depth: level.depth,
            simple: name(step.vertex),
            b_dims: step.b.dims().to_vec(),
            p_summands: step.p.summands.iter().map(|&(v, m)| (name(v), m)).collect(),
            p_dims: step.p.module.dims().to_vec(),
            passing_lengths: step.search.candidates.iter().filter(|c| c.passed() && c.length > 0).map(|c| c.length).collect(),
            q_dims: step.search.q.dims().to_vec(),
            unique_up_to_iso: step.search.unique_up_to_iso,
            q_matches_formula: step.remark_holds,
            stratifying,
            work: step.search.work,
        });
        let at = format!("{} at depth {}", name(step.vertex), level.depth);
        report.checks.push(Check::new(format!("kernel formula {at}"), step.remark_holds, ""));
        report.checks.push(Check::new(format!("maximal quotient unique {at}"), step.search.unique_up_to_iso, ""));
    }
    report.covers = Some(section);
    Ok(())
}

fn present_section<F: Field>(report: &mut Report, state: &GlueState<F>) -> Result<()> {
    let g = projective_generator(state.covers())?;
    let end = endomorphism_algebra(&g)?;
    let gab = gabriel_presentation(&end.algebra);
    let q = &gab.quiver;
    let recovered = recover(&g, &end);
    report.checks.push(Check::new(
        "recovery",
        recovered.is_ok(),
        recovered.as_ref().err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    report.present = Some(PresentSection {
        generator: g.summands.iter().map(|s| (s.label.clone(), s.module.dims().to_vec())).collect(),
        repeated: g.repeated.clone(),
        endo_dim: end.algebra.dim(),
        gabriel_arrows: q.arrows.iter().map(|x| format!("{}: {} -> {}", x.name, q.vertices[x.source], q.vertices[x.target])).collect(),
        gabriel_relations: gab.format_relations(),
        recovered_dim: recovered.map(|r| r.realized.dim()).unwrap_or(0),
    });
    Ok(())
}

fn ext_section<F: Field>(report: &mut Report, a: &Arc<Algebra<F>>) -> Result<()> {
    let eq = ext_quiver_with_quadratic_relations(a)?;
    let q = &eq.quiver;
    let n = a.num_vertices();
    let mut consistent = true;
    for i in 0..n {
        for j in 0..n {
            let ext = q.arrows.iter().filter(|x| x.source == i && x.target == j).count();
            let gab = a.quiver().arrows.iter().filter(|x| x.source == i && x.target == j).count();
            consistent &= ext == gab;
        }
    }
    report.checks.push(Check::new("Ext^1 arrows match the presentation", consistent, ""));
    let blocks = eq
        .blocks
        .iter()
        .map(|b| BlockLine {
            source: a.vertex_label(b.source).into(),
            target: a.vertex_label(b.target).into(),
            ext2_dim: b.ext2_dim,
            pairs: b.pairs.iter().map(|p| format!("{}.{}", q.arrows[p.first].name, q.arrows[p.second].name)).collect(),
            yoneda_kernel: b.yoneda_kernel.clone(),
            relations: b.relation_text.clone(),
        })
        .collect();
    report.ext_quiver = Some(ExtQuiverSection {
        arrows: q.arrows.iter().map(|x| format!("{}: {} -> {}", x.name, q.vertices[x.source], q.vertices[x.target])).collect(),
        blocks,
    });
    Ok(())
}

/// The recollement identities on simples and projectives, for every open
/// set in the stratification's chain.
fn recollement_checks<F: Field>(report: &mut Report, a: &Arc<Algebra<F>>, sa: &StratifiedAlgebra<F>) -> Result<()> {
    let iso = |x: &Module<F>, y: &Module<F>| -> Result<bool> { Ok(is_isomorphic(x, y)?.is_some()) };
    let chain = sa.open_chain();
    for open in &chain[1..chain.len() - 1] {
        let d = RecollementDatum::new(a.clone(), open)?;
        let mut failures = Vec::new();
        let mut tests: Vec<Module<F>> = simples(&d.corner);
        tests.extend((0..d.corner.num_vertices()).map(|v| projective(&d.corner, v)));
        for n in &tests {
            if !iso(&d.j_upper_star(&d.j_lower_shriek(n)?.0)?, n)? {
                failures.push("j^* j_!");
            }
            if !iso(&d.j_upper_star(&d.j_lower_star(n)?)?, n)? {
                failures.push("j^* j_*");
            }
        }
        let mut tests: Vec<Module<F>> = simples(&d.quotient);
        tests.extend((0..d.quotient.num_vertices()).map(|v| projective(&d.quotient, v)));
        for t in &tests {
            let pushed = d.i_lower_star(t)?;
            if !iso(&d.i_upper_star(&pushed)?.0, t)? {
                failures.push("i^* i_*");
            }
            if !iso(&d.i_upper_shriek(&pushed)?.0, t)? {
                failures.push("i^! i_*");
            }
            if !d.j_upper_star(&pushed)?.is_zero() {
                failures.push("j^* i_*");
            }
        }
        failures.dedup();
        report.checks.push(Check::new(
            format!("recollement identities, open {{{}}}", labels(a, open).join(",")),
            failures.is_empty(),
            failures.join(" "),
        ));
    }
    Ok(())
}
