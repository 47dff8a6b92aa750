//! Covers by induction on the strata. At each level the first stratum is
//! closed; covers of the open simples come from the corner algebra and are
//! extended by zero, and each closed simple `L` gets its cover as an
//! extension `0 -> Q -> P_L -> B_L -> 0` where `Q` is a quotient of a sum of
//! open covers, found by search.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Algebra, StratifiedAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::modcat::{
    enumerate_quotients, is_isomorphic, projective, ExtClass, ExtSpace, HomSpace, Module, ModuleMorphism, Syzygy,
};
use crate::recollement::{RecollementDatum, Transport};

use super::certificate::CoverCertificate;

/// Default work cap for quotient and class enumeration.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// `P = sum over open vertices M of P_M^{mult}`.
#[derive(Clone, Debug)]
pub struct AssembledP<F: Field> {
    pub module: Module<F>,
    /// `(open vertex, multiplicity)` in summand order.
    pub summands: Vec<(usize, usize)>,
}

/// Outcome of testing one quotient of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub dims: Vec<usize>,
    pub length: usize,
    /// Passed the dimension prefilter.
    pub prefiltered: bool,
    /// Number of classes inducing isomorphisms (zero if rejected).
    pub valid_classes: u64,
}

impl Candidate {
    pub fn passed(&self) -> bool {
        self.valid_classes > 0
    }
}

#[derive(Clone, Debug)]
pub struct QSearch<F: Field> {
    pub candidates: Vec<Candidate>,
    pub q: Module<F>,
    pub projection: ModuleMorphism<F>,
    pub space: ExtSpace<F>,
    pub epsilon: ExtClass<F>,
    /// Every maximal-length passing quotient is isomorphic to `q`.
    pub unique_up_to_iso: bool,
    pub work: u64,
}

impl<F: Field> QSearch<F> {
    pub fn selected(&self) -> &Candidate {
        self.candidates.iter().find(|c| c.passed()).expect("a candidate passed")
    }
}

/// Everything computed for one closed simple.
#[derive(Clone, Debug)]
pub struct ClosedStep<F: Field> {
    /// Vertex of the level algebra.
    pub vertex: usize,
    pub b: Module<F>,
    pub p: AssembledP<F>,
    pub search: QSearch<F>,
    pub cover: CoverCertificate<F>,
    /// `Q ~ j_! j^* P_L`.
    pub remark_holds: bool,
}

/// One level of the recursion: the algebra on the union of the remaining
/// strata.
#[derive(Clone, Debug)]
pub struct Level<F: Field> {
    pub depth: usize,
    pub algebra: Arc<Algebra<F>>,
    /// Level vertex -> vertex of the top algebra.
    pub vertex_map: Vec<usize>,
    pub strata: Vec<Vec<usize>>,
    /// `None` for the single-stratum base case.
    pub datum: Option<RecollementDatum<F>>,
    pub closed_steps: Vec<ClosedStep<F>>,
    /// Certificates over this level's algebra, indexed by level vertex.
    pub covers: Vec<CoverCertificate<F>>,
}

/// The finished construction: certificates for all simples and the
/// per-level records.
#[derive(Clone, Debug)]
pub struct GlueState<F: Field> {
    pub stratified: StratifiedAlgebra<F>,
    /// Outermost level first.
    pub levels: Vec<Level<F>>,
    pub budget: u64,
}

impl<F: Field> GlueState<F> {
    pub fn covers(&self) -> &[CoverCertificate<F>] {
        &self.levels[0].covers
    }

    pub fn cover_map(&self) -> BTreeMap<String, &CoverCertificate<F>> {
        self.covers().iter().map(|c| (c.label.clone(), c)).collect()
    }

    pub fn closed_steps(&self) -> impl Iterator<Item = (&Level<F>, &ClosedStep<F>)> {
        self.levels.iter().flat_map(|l| l.closed_steps.iter().map(move |s| (l, s)))
    }
}

/// `i_*` of the projective cover of `L` over the closed algebra.
pub fn build_b<F: Field>(datum: &RecollementDatum<F>, vertex: usize) -> Result<Module<F>> {
    let t = datum.closed.iter().position(|&v| v == vertex).ok_or_else(|| {
        Error::Verification(format!("'{}' is not supported on the closed stratum", datum.algebra.vertex_label(vertex)))
    })?;
    datum.i_lower_star(&projective(&datum.quotient, t))
}

/// `sum_M P_M^{dim Ext^1(B, S_M)}` over the open vertices `M`.
pub fn assemble_p<F: Field>(
    datum: &RecollementDatum<F>,
    b: &Module<F>,
    open_covers: &BTreeMap<usize, CoverCertificate<F>>,
) -> Result<AssembledP<F>> {
    let syz = Arc::new(Syzygy::new(b));
    let mut parts = Vec::new();
    let mut summands = Vec::new();
    for &m in &datum.open {
        let mult = ExtSpace::with_syzygy(syz.clone(), &Module::simple(&datum.algebra, m))?.dim();
        let cover = open_covers
            .get(&m)
            .ok_or_else(|| Error::MissingCover(datum.algebra.vertex_label(m).to_string()))?;
        summands.push((m, mult));
        parts.extend(std::iter::repeat(cover.module.clone()).take(mult));
    }
    Ok(AssembledP { module: Module::direct_sum_all(&datum.algebra, &parts)?, summands })
}

/// All coordinate vectors of `F_q^d` in lexicographic order.
fn all_vectors<F: Field>(field: &F, d: usize) -> impl Iterator<Item = Vec<F::Elem>> + '_ {
    let q = field.size().unwrap_or(0);
    let total = if d == 0 { 1 } else { q.checked_pow(d as u32).unwrap_or(u64::MAX) };
    (0..total).map(move |idx| {
        let mut rest = idx;
        let mut v = vec![field.zero(); d];
        for slot in v.iter_mut().rev() {
            *slot = field.element(rest % q);
            rest /= q;
        }
        v
    })
}

/// For each open simple, the matrix of `phi -> phi_* eps` on
/// `Hom(Q, S_N) -> Ext^1(B, S_N)` must be invertible.
struct PushTest<F: Field> {
    homs: Vec<HomSpace<F>>,
    targets: Vec<ExtSpace<F>>,
}

impl<F: Field> PushTest<F> {
    fn accepts(&self, eps: &ExtClass<F>) -> Result<bool> {
        for (hom, target) in self.homs.iter().zip(&self.targets) {
            let field = target.target.field();
            let cols = hom.basis.iter().map(|phi| target.push(phi, eps)).collect::<Result<Vec<_>>>()?;
            let m = Mat::from_columns(field, target.dim(), &cols);
            if m.rank() != target.dim() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Searches the quotients of `P` for the largest `Q` with a class `eps`
/// in `Ext^1(B, Q)` pushing forward to isomorphisms onto `Ext^1(B, S_N)`.
pub fn find_q_epsilon<F: Field>(
    datum: &RecollementDatum<F>,
    p: &Module<F>,
    b: &Module<F>,
    budget: u64,
) -> Result<QSearch<F>> {
    let field = p.field();
    let syz = Arc::new(Syzygy::new(b));
    let open_simples: Vec<Module<F>> = datum.open.iter().map(|&m| Module::simple(&datum.algebra, m)).collect();
    let targets = open_simples
        .iter()
        .map(|s| ExtSpace::with_syzygy(syz.clone(), s))
        .collect::<Result<Vec<_>>>()?;
    let quotients: Vec<(Module<F>, ModuleMorphism<F>)> = if p.is_zero() {
        vec![(p.clone(), ModuleMorphism::identity(p))]
    } else {
        let lattice = enumerate_quotients(p, budget)?;
        lattice.quotients().map(|q| (q.module, q.projection)).collect()
    };
    let mut work: u64 = 0;
    let mut candidates = Vec::new();
    let mut passing: Vec<(Module<F>, ModuleMorphism<F>, ExtSpace<F>, ExtClass<F>)> = Vec::new();
    for (q, proj) in quotients {
        let homs = open_simples.iter().map(|s| HomSpace::new(&q, s)).collect::<Result<Vec<_>>>()?;
        let prefiltered = homs.iter().zip(&targets).all(|(h, t)| h.dim() == t.dim());
        let mut valid = 0u64;
        let mut first = None;
        let space = ExtSpace::with_syzygy(syz.clone(), &q)?;
        if prefiltered {
            if space.dim() > 0 && field.size().is_none() {
                return Err(Error::EnumerationUnsupported);
            }
            let test = PushTest { homs, targets: targets.clone() };
            for coords in all_vectors(field, space.dim()) {
                work += 1;
                if work > budget {
                    return Err(Error::BudgetExceeded { what: "extension class search".into(), budget });
                }
                let eps = space.class(&coords);
                if test.accepts(&eps)? {
                    valid += 1;
                    first.get_or_insert(eps);
                }
            }
        }
        candidates.push(Candidate { dims: q.dims().to_vec(), length: q.dim(), prefiltered, valid_classes: valid });
        if let Some(eps) = first {
            passing.push((q, proj, space, eps));
        }
    }
    let Some(best) = passing.first().map(|x| x.0.dim()) else {
        return Err(Error::Verification("no quotient satisfies the pushforward condition".into()));
    };
    let maximal: Vec<&Module<F>> = passing.iter().filter(|x| x.0.dim() == best).map(|x| &x.0).collect();
    let mut unique_up_to_iso = true;
    for other in &maximal[1..] {
        unique_up_to_iso &= is_isomorphic(maximal[0], other)?.is_some();
    }
    let (q, projection, space, epsilon) = passing.swap_remove(0);
    Ok(QSearch { candidates, q, projection, space, epsilon, unique_up_to_iso, work })
}

/// The middle term of the extension of `B` by `Q` given by `eps`.
pub fn extend_to_cover<F: Field>(search: &QSearch<F>, vertex: usize) -> Result<CoverCertificate<F>> {
    let seq = search.space.realize(&search.epsilon)?;
    if !seq.is_short_exact() {
        return Err(Error::Verification("realized extension is not short exact".into()));
    }
    CoverCertificate::new(seq.middle, vertex)
}

/// `Q ~ j_!(j^* P_L)`.
pub fn check_remark_q<F: Field>(datum: &RecollementDatum<F>, step_q: &Module<F>, cover: &Module<F>) -> Result<bool> {
    let restricted = datum.j_upper_star(cover)?;
    let (extended, _) = datum.j_lower_shriek(&restricted)?;
    Ok(is_isomorphic(step_q, &extended)?.is_some())
}

fn build_levels<F: Field>(
    algebra: Arc<Algebra<F>>,
    strata: Vec<Vec<usize>>,
    vertex_map: Vec<usize>,
    depth: usize,
    budget: u64,
    out: &mut Vec<Level<F>>,
) -> Result<Vec<CoverCertificate<F>>> {
    let n = algebra.num_vertices();
    if strata.len() <= 1 {
        let covers = (0..n)
            .map(|v| CoverCertificate::new(projective(&algebra, v), v))
            .collect::<Result<Vec<_>>>()?;
        out.push(Level { depth, algebra, vertex_map, strata, datum: None, closed_steps: Vec::new(), covers: covers.clone() });
        return Ok(covers);
    }
    let mut open: Vec<usize> = strata[1..].iter().flatten().copied().collect();
    open.sort_unstable();
    let datum = RecollementDatum::new(algebra.clone(), &open)?;
    let corner_strata: Vec<Vec<usize>> = strata[1..]
        .iter()
        .map(|s| s.iter().map(|v| open.iter().position(|u| u == v).expect("open")).collect())
        .collect();
    let corner_map: Vec<usize> = open.iter().map(|&u| vertex_map[u]).collect();
    let slot = out.len();
    out.push(Level {
        depth,
        algebra: algebra.clone(),
        vertex_map: vertex_map.clone(),
        strata: strata.clone(),
        datum: None,
        closed_steps: Vec::new(),
        covers: Vec::new(),
    });
    let corner_covers = build_levels(datum.corner.clone(), corner_strata, corner_map, depth + 1, budget, out)?;
    let mut open_covers = BTreeMap::new();
    for cert in &corner_covers {
        let lifted = datum.transport_cover(Transport::OpenExtend, cert)?;
        open_covers.insert(lifted.vertex, lifted);
    }
    let mut steps = Vec::new();
    for &l in &strata[0] {
        let b = build_b(&datum, l)?;
        let p = assemble_p(&datum, &b, &open_covers)?;
        let search = find_q_epsilon(&datum, &p.module, &b, budget)?;
        let cover = extend_to_cover(&search, l)?;
        let remark_holds = check_remark_q(&datum, &search.q, &cover.module)?;
        steps.push(ClosedStep { vertex: l, b, p, search, cover, remark_holds });
    }
    let mut covers: Vec<Option<CoverCertificate<F>>> = vec![None; n];
    for (v, c) in open_covers {
        covers[v] = Some(c);
    }
    for s in &steps {
        covers[s.vertex] = Some(s.cover.clone());
    }
    let covers: Vec<CoverCertificate<F>> = covers
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::MissingCover(algebra.vertex_label(v).to_string())))
        .collect::<Result<_>>()?;
    let level = &mut out[slot];
    level.datum = Some(datum);
    level.closed_steps = steps;
    level.covers = covers.clone();
    Ok(covers)
}

/// Builds a verified cover for every simple of the stratified algebra.
pub fn construct_all_covers<F: Field>(sa: &StratifiedAlgebra<F>, budget: u64) -> Result<GlueState<F>> {
    let mut levels = Vec::new();
    let n = sa.algebra.num_vertices();
    build_levels(sa.algebra.clone(), sa.strata.clone(), (0..n).collect(), 0, budget, &mut levels)?;
    for level in &levels {
        for c in &level.covers {
            c.verify()?;
        }
    }
    Ok(GlueState { stratified: sa.clone(), levels, budget })
}
