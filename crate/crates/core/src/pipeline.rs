//! From an order-isomorphism between abelian-subalgebra fragments to the
//! Jordan map that induces it.
//!
//! The chain of maps is `f` (fragments) → `g` (finite part) → `h` (Boolean
//! projection algebras) → `j` (all Boolean subalgebras of the generated
//! lattices) → `k` (lattice isomorphism) → `F` (linear extension).

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use log::{info, warn};
use thiserror::Error;

use crate::jordan::{spectral_extend, JordanError, JordanMap, ProjMapFragment, Report};
use crate::matalg::{
    generated_projection_lattice, parse_algebra_file, projection_oml, AbelianFragment, AlgElement, AlgebraFile,
    FinDimAlgebra, MatalgError, PartitionOfUnity, Span, SpectralElement,
};
use crate::oml::{BsubPoset, Oml, OmlError};
use crate::poset::{extend_iso_via_ideals, OrderIso, PosetError};
use crate::reconstruct::{certify_unique, has_4element_block, reconstruct_oml_isos, BsubIso, OmlIso, ReconstructError};

pub const DEFAULT_MAX_LATTICE: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error(transparent)]
    Matalg(#[from] MatalgError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Reconstruct(#[from] ReconstructError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Oml(#[from] OmlError),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error(
        "ambiguous reconstruction: {count} lattice isomorphisms are compatible; the uniqueness theorem \
         requires lattices without any 4-element blocks"
    )]
    AmbiguousReconstruction { count: usize, candidates: Vec<String> },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, PipelineError>;

/// Two coarsening-closed fragments and an order-isomorphism `f` between
/// their inclusion posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremInstance {
    source: AbelianFragment,
    target: AbelianFragment,
    f: OrderIso,
}

impl TheoremInstance {
    pub fn new(source: AbelianFragment, target: AbelianFragment, f: OrderIso) -> Result<Self> {
        let invalid = |m: String| PipelineError::InvalidInstance(m);
        if f.source != source.fragment_poset() {
            return Err(invalid("f is not defined on the source fragment poset".into()));
        }
        if f.target != target.fragment_poset() {
            return Err(invalid("f does not land in the target fragment poset".into()));
        }
        for (side, frag) in [("source", &source), ("target", &target)] {
            if let Some((name, q)) = frag.missing_coarsening() {
                return Err(invalid(format!(
                    "{side} fragment is not closed under coarsening: `{name}` has a coarsening with {} atoms missing",
                    q.len()
                )));
            }
        }
        let t = f.source.index_of(source.trivial_name()).expect("trivial entry");
        if f.target.name(f.apply(t)) != target.trivial_name() {
            return Err(invalid("f does not map the trivial subalgebra to the trivial subalgebra".into()));
        }
        Ok(TheoremInstance { source, target, f })
    }

    /// `f` given as `(source name, target name)` pairs.
    pub fn from_names(source: AbelianFragment, target: AbelianFragment, pairs: &[(String, String)]) -> Result<Self> {
        let f = OrderIso::from_names(source.fragment_poset(), target.fragment_poset(), pairs)?;
        Self::new(source, target, f)
    }

    /// The instance whose `f` is induced by `g` on `fragment`.
    pub fn induced(g: &JordanMap, fragment: &AbelianFragment) -> Result<Self> {
        let induced = crate::jordan::induced_subalgebra_map(g, fragment)?;
        Self::new(fragment.clone(), induced.image, induced.iso)
    }

    pub fn source(&self) -> &AbelianFragment {
        &self.source
    }

    pub fn target(&self) -> &AbelianFragment {
        &self.target
    }

    pub fn f(&self) -> &OrderIso {
        &self.f
    }

    /// `f(S)` for the source entry named `name`.
    pub fn image_of(&self, name: &str) -> Option<(&str, &PartitionOfUnity)> {
        let t = self.f.apply_name(name)?;
        Some((t, self.target.get(t)?))
    }

    /// Instance format: both algebras inline between `begin source` /
    /// `end source` and `begin target` / `end target`, then `fmap` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (side, frag) in [("source", &self.source), ("target", &self.target)] {
            let mut file = AlgebraFile::new(frag.algebra().clone());
            file.partitions = frag.entries().to_vec();
            let _ = writeln!(out, "begin {side}");
            out.push_str(&file.to_text());
            let _ = writeln!(out, "end {side}");
        }
        for (name, _) in self.source.entries() {
            let _ = writeln!(out, "fmap {name} {}", self.f.apply_name(name).expect("total"));
        }
        out
    }

    /// Reads the instance format. Either side may instead be given as
    /// `source PATH` / `target PATH`, relative to `base`; all partitions of
    /// the referenced algebra file form the fragment.
    pub fn parse(text: &str, base: Option<&Path>) -> Result<Self> {
        let perr = |line: usize, msg: String| PipelineError::Parse { line, msg };
        let mut sides: [Option<AlgebraFile>; 2] = [None, None];
        let mut block: Option<(usize, usize, String)> = None;
        let mut fmap = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let no = no + 1;
            if let Some((side, start, buf)) = block.as_mut() {
                if raw.trim() == format!("end {}", side_name(*side)) {
                    let file = parse_algebra_file(buf).map_err(|e| match e {
                        MatalgError::Parse { line, msg } => perr(*start + line, msg),
                        other => perr(*start, other.to_string()),
                    })?;
                    sides[*side] = Some(file);
                    block = None;
                } else {
                    buf.push_str(raw);
                    buf.push('\n');
                }
                continue;
            }
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["begin", s] => {
                    let side = side_index(s).ok_or_else(|| perr(no, format!("unknown side `{s}`")))?;
                    block = Some((side, no, String::new()));
                }
                [s @ ("source" | "target"), path] => {
                    let side = side_index(s).expect("matched");
                    let path = resolve(base, path);
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| PipelineError::Io { path: path.display().to_string(), msg: e.to_string() })?;
                    let file = parse_algebra_file(&text)
                        .map_err(|e| PipelineError::Io { path: path.display().to_string(), msg: e.to_string() })?;
                    sides[side] = Some(file);
                }
                ["fmap", a, b] => fmap.push((a.to_string(), b.to_string())),
                _ => return Err(perr(no, format!("unexpected `{line}`"))),
            }
        }
        if let Some((side, start, _)) = block {
            return Err(perr(start, format!("missing `end {}`", side_name(side))));
        }
        let [Some(s), Some(t)] = sides else {
            return Err(perr(0, "both `source` and `target` algebras are required".into()));
        };
        let frag = |f: AlgebraFile| AbelianFragment::new(&f.algebra, f.partitions);
        Self::from_names(frag(s)?, frag(t)?, &fmap)
    }
}

fn side_name(i: usize) -> &'static str {
    ["source", "target"][i]
}

fn side_index(s: &str) -> Option<usize> {
    match s {
        "source" => Some(0),
        "target" => Some(1),
        _ => None,
    }
}

fn resolve(base: Option<&Path>, path: &str) -> PathBuf {
    match base {
        Some(b) if Path::new(path).is_relative() => b.join(path),
        _ => PathBuf::from(path),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Cap on the size of each generated projection lattice.
    pub max_lattice: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { max_lattice: DEFAULT_MAX_LATTICE }
    }
}

/// The finite orthomodular lattice generated by a fragment's projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionLattice {
    pub projections: Vec<AlgElement>,
    pub oml: Oml,
    pub bsub: BsubPoset,
}

impl ProjectionLattice {
    pub fn generate(fragment: &AbelianFragment, max_size: usize) -> Result<Self> {
        let projections = generated_projection_lattice(&fragment.projections(), max_size)?;
        let oml = projection_oml(&projections)?;
        let bsub = oml.boolean_subalgebras();
        Ok(ProjectionLattice { projections, oml, bsub })
    }

    pub fn index_of(&self, p: &AlgElement) -> Option<usize> {
        self.projections.binary_search(p).ok()
    }

    /// Position in `BSub` of the Boolean algebra `Ψ(S)`.
    pub fn position_of(&self, p: &PartitionOfUnity) -> Result<usize> {
        let members = p
            .psi_project()
            .iter()
            .map(|x| self.index_of(x).ok_or_else(|| MatalgError::NotProjection(x.to_string())))
            .collect::<std::result::Result<BTreeSet<usize>, _>>()?;
        self.bsub
            .position(&members)
            .ok_or_else(|| PipelineError::InvalidInstance("Ψ-image is not a Boolean subalgebra".into()))
    }
}

/// Everything computed up to the reconstruction of lattice isomorphisms.
#[derive(Clone, Debug)]
pub struct Stages {
    pub steps: Vec<String>,
    pub source: ProjectionLattice,
    pub target: ProjectionLattice,
    /// `(i, j)`: the `i`-th source entry's Ψ-image is `BSub` element `j` on
    /// the source side and maps to `BSub` element `h(j)` on the target side.
    pub h: Vec<(usize, usize)>,
    pub j: BsubIso,
    pub candidates: Vec<OmlIso>,
}

impl Stages {
    fn log(&mut self, msg: String) {
        info!("{msg}");
        self.steps.push(msg);
    }

    /// `ψ_k` on every generated projection.
    pub fn projection_map(&self, k: &OmlIso) -> Result<ProjMapFragment> {
        let pairs = self
            .source
            .projections
            .iter()
            .enumerate()
            .map(|(x, p)| (p.clone(), self.target.projections[k.apply(x)].clone()))
            .collect();
        let (sa, ta) = (self.source.projections[0].algebra(), self.target.projections[0].algebra());
        Ok(ProjMapFragment::new(&sa, &ta, pairs)?)
    }

    pub fn describe(&self, k: &OmlIso) -> String {
        k.describe(&self.source.oml, &self.target.oml)
    }
}

/// Runs `f → g → h → j → k` and returns every compatible `k`.
pub fn run_stages(t: &TheoremInstance, opts: PipelineOptions) -> Result<Stages> {
    let mut steps = Vec::new();
    let mut log = |m: String| {
        info!("{m}");
        steps.push(m);
    };
    for (side, a) in [("source", t.source.algebra()), ("target", t.target.algebra())] {
        if !a.is_type_i2_free() {
            warn!("{side} algebra {:?} has a 2x2 summand; continuing", a.summand_dims());
            log(format!("warning: {side} algebra {:?} has a 2x2 summand", a.summand_dims()));
        }
    }

    let fp = t.source.fragment_poset();
    let finite = fp.finite_part();
    let finite_image: Vec<usize> = finite.iter().map(|&x| t.f.apply(x)).collect();
    let g = OrderIso::new(
        fp.induced(&finite),
        t.target.fragment_poset().induced(&finite_image),
        (0..finite.len()).collect(),
    )?;
    log(format!("g: restriction of f to {} finite subalgebras (all of them)", g.source.len()));

    let source = ProjectionLattice::generate(&t.source, opts.max_lattice)?;
    let target = ProjectionLattice::generate(&t.target, opts.max_lattice)?;
    log(format!(
        "lattices: {} and {} projections, {} and {} Boolean subalgebras",
        source.oml.len(),
        target.oml.len(),
        source.bsub.len(),
        target.bsub.len()
    ));

    let mut h = Vec::with_capacity(t.source.len());
    for (i, (name, p)) in t.source.entries().iter().enumerate() {
        let (_, q) = t.image_of(name).expect("f is total");
        h.push((i, (source.position_of(p)?, target.position_of(q)?)));
    }
    let mut f_p: Vec<usize> = h.iter().map(|&(_, (a, _))| a).collect();
    f_p.sort_unstable();
    f_p.dedup();
    if f_p.len() != h.len() {
        return Err(PipelineError::InvalidInstance("distinct entries have equal Ψ-images".into()));
    }
    let image_of = |a: usize| h.iter().find(|&&(_, (x, _))| x == a).map(|&(_, (_, b))| b).expect("in F_P");
    let f_q: Vec<usize> = f_p.iter().map(|&a| image_of(a)).collect();
    let mu = OrderIso::new(source.bsub.poset.induced(&f_p), target.bsub.poset.induced(&f_q), (0..f_p.len()).collect())?;
    log(format!("h: transported {} fragment entries along Ψ", h.len()));

    let j_iso = extend_iso_via_ideals(&mu, &source.bsub.poset, &target.bsub.poset)?;
    log(format!("j: extended h from {} of {} Boolean subalgebras via ideals", f_p.len(), source.bsub.len()));
    let j = BsubIso::with_posets(
        source.oml.clone(),
        target.oml.clone(),
        source.bsub.clone(),
        target.bsub.clone(),
        j_iso.map().to_vec(),
    )?;

    let small_blocks = has_4element_block(&source.oml) || has_4element_block(&target.oml);
    let candidates = if small_blocks {
        log("k: a lattice has a 4-element block; enumerating all compatible isomorphisms".into());
        reconstruct_oml_isos(&j)?
    } else {
        vec![certify_unique(&j)?]
    };
    log(format!("k: {} compatible lattice isomorphism(s)", candidates.len()));

    Ok(Stages { steps, source, target, h: h.into_iter().map(|(_, pair)| pair).collect(), j, candidates })
}

/// Spectral elements `Σ i·pᵢ`, one per fragment entry.
pub fn fragment_spectral_elements(fragment: &AbelianFragment) -> Vec<SpectralElement> {
    fragment.entries().iter().map(|(_, p)| SpectralElement::labelled(p)).collect()
}

/// The Jordan map extending the lattice isomorphism `k`.
pub fn extend_candidate(t: &TheoremInstance, stages: &Stages, k: &OmlIso) -> Result<JordanMap> {
    let psi = stages.projection_map(k)?;
    Ok(spectral_extend(&psi, &fragment_spectral_elements(&t.source))?)
}

/// Result of a successful run.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub stages: Stages,
    pub k: OmlIso,
    pub map: JordanMap,
}

impl PipelineRun {
    pub fn steps(&self) -> &[String] {
        &self.stages.steps
    }
}

/// Reconstructs the unique Jordan map `F` with `f(S) = F[S]`.
pub fn run_pipeline(t: &TheoremInstance, opts: PipelineOptions) -> Result<PipelineRun> {
    let mut stages = run_stages(t, opts)?;
    if stages.candidates.len() != 1 {
        return Err(PipelineError::AmbiguousReconstruction {
            count: stages.candidates.len(),
            candidates: stages.candidates.iter().map(|k| stages.describe(k)).collect(),
        });
    }
    let k = stages.candidates[0].clone();
    let map = extend_candidate(t, &stages, &k)?;
    stages.log(format!("F: linear extension on a span of dimension {}", map.domain().dim()));
    Ok(PipelineRun { stages, k, map })
}

/// One compatible `k` and its extension, if the extension is consistent.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub k: OmlIso,
    pub description: String,
    pub map: std::result::Result<JordanMap, JordanError>,
}

/// Every compatible `k` with its Jordan extension, for inspecting ambiguous
/// instances.
pub fn diagnostic_candidates(t: &TheoremInstance, opts: PipelineOptions) -> Result<(Stages, Vec<Candidate>)> {
    let stages = run_stages(t, opts)?;
    let out = stages
        .candidates
        .iter()
        .map(|k| Candidate {
            k: k.clone(),
            description: stages.describe(k),
            map: extend_candidate(t, &stages, k).map_err(|e| match e {
                PipelineError::Jordan(j) => j,
                other => JordanError::SpanInconsistent(other.to_string()),
            }),
        })
        .collect();
    Ok((stages, out))
}

/// Checks, for every source entry `S`, that `F` maps the projections of `S`
/// onto those of `f(S)`, that `F` maps the atoms of `S` to a partition of
/// unity, and that the generated subalgebras agree.
pub fn verify_claims(t: &TheoremInstance, map: &JordanMap) -> Report {
    let mut claim1 = None;
    let mut claim2 = None;
    let mut claim3 = None;
    for (name, p) in t.source.entries() {
        let (tname, q) = t.image_of(name).expect("f is total");
        let images: Option<BTreeSet<AlgElement>> = p.psi_project().iter().map(|x| map.apply(x)).collect();
        let expected: BTreeSet<AlgElement> = q.psi_project().into_iter().collect();
        if images.as_ref() != Some(&expected) {
            claim1.get_or_insert_with(|| format!("S = {name}, f(S) = {tname}"));
        }
        let atoms: Option<Vec<AlgElement>> = p.atoms().iter().map(|x| map.apply(x)).collect();
        let partition = atoms.as_ref().map(|a| PartitionOfUnity::new(map.target(), a.clone()));
        if !matches!(partition, Some(Ok(_))) {
            claim2.get_or_insert_with(|| format!("S = {name}"));
        }
        let same = atoms.is_some_and(|a| Span::of(map.target(), &a).same_as(&q.span()));
        if !same {
            claim3.get_or_insert_with(|| format!("S = {name}, f(S) = {tname}"));
        }
    }
    let mut report = Report::default();
    report.push("claim 1: projections of f(S) = F[S] ∩ Proj N", claim1);
    report.push("claim 2: F[S] is an abelian subalgebra", claim2);
    report.push("claim 3: f(S) = F[S]", claim3);
    report
}

/// Checks that exactly one `k` was found and that values of `F` on the
/// fragment span are determined by its values on projections.
pub fn verify_uniqueness(t: &TheoremInstance, stages: &Stages, map: &JordanMap) -> Report {
    let mut report = Report::default();
    let a = match stages.candidates.len() {
        1 => None,
        n => Some(format!(
            "{n} candidates: {}",
            stages.candidates.iter().map(|k| format!("[{}]", stages.describe(k))).collect::<Vec<_>>().join(" ")
        )),
    };
    report.push("unique lattice isomorphism", a);
    let projections = t.source.projections();
    let proj_span = Span::of(t.source.algebra(), &projections);
    let b = if !map.domain().same_as(&proj_span) {
        Some(format!("domain has dimension {}, projections span {}", map.domain().dim(), proj_span.dim()))
    } else {
        let values: Vec<AlgElement> =
            fragment_spectral_elements(&t.source).iter().map(SpectralElement::value).collect();
        let from_projections: Vec<(AlgElement, AlgElement)> =
            projections.iter().filter_map(|p| map.apply(p).map(|y| (p.clone(), y))).collect();
        match JordanMap::from_images(t.source.algebra(), t.target.algebra(), &from_projections) {
            Ok(other) if other.agrees_with_on(map, &values) => None,
            Ok(_) => Some("a map agreeing on projections differs on a spectral element".into()),
            Err(e) => Some(e.to_string()),
        }
    };
    report.push("determined by projections on the span", b);
    report
}

impl fmt::Display for PipelineRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Algebras, fragments and maps used by the examples and tests.
pub mod instances {
    use super::*;
    use crate::matalg::{GaussScalar, Matrix};

    /// Atoms `e_ii` of every summand.
    pub fn diagonal_partition(alg: &FinDimAlgebra) -> PartitionOfUnity {
        let mut atoms = Vec::new();
        for (s, &n) in alg.summand_dims().iter().enumerate() {
            for i in 0..n {
                atoms.push(alg.unit(s, i, i));
            }
        }
        PartitionOfUnity::new(alg, atoms).expect("diagonal units partition the identity")
    }

    /// `v vᵀ*` for `v = (3/5, 4i/5)` in the first two coordinates of the
    /// first summand, its complement there, and the remaining diagonal units.
    pub fn rotated_partition(alg: &FinDimAlgebra) -> PartitionOfUnity {
        let dims = alg.summand_dims();
        assert!(dims[0] >= 2, "first summand must have size at least 2");
        let c = |re: i64, im: i64| GaussScalar::complex((re, 25), (im, 25));
        let mut v1 = alg.zero();
        let mut v2 = alg.zero();
        let place = |x: &mut AlgElement, m: [[GaussScalar; 2]; 2]| {
            *x = x.map_blocks(|s, b| {
                let mut b = b.clone();
                if s == 0 {
                    for (i, row) in m.iter().enumerate() {
                        for (j, e) in row.iter().enumerate() {
                            b.set(i, j, e.clone());
                        }
                    }
                }
                b
            });
        };
        place(&mut v1, [[c(9, 0), c(0, -12)], [c(0, 12), c(16, 0)]]);
        place(&mut v2, [[c(16, 0), c(0, 12)], [c(0, -12), c(9, 0)]]);
        let mut atoms = vec![v1, v2];
        for (s, &n) in dims.iter().enumerate() {
            for i in if s == 0 { 2 } else { 0 }..n {
                atoms.push(alg.unit(s, i, i));
            }
        }
        PartitionOfUnity::new(alg, atoms).expect("rotated atoms partition the identity")
    }

    /// Coarsening closure of the diagonal and the rotated partition.
    pub fn diagonal_plus_rotated(alg: &FinDimAlgebra) -> AbelianFragment {
        AbelianFragment::coarsening_closure(
            alg,
            &[("diag".into(), diagonal_partition(alg)), ("rot".into(), rotated_partition(alg))],
        )
        .expect("valid seeds")
    }

    /// Coarsening closure of the diagonal partition alone.
    pub fn diagonal_fragment(alg: &FinDimAlgebra) -> AbelianFragment {
        AbelianFragment::coarsening_closure(alg, &[("diag".into(), diagonal_partition(alg))]).expect("valid seed")
    }

    /// The fragment containing only the trivial partition.
    pub fn trivial_fragment(alg: &FinDimAlgebra) -> AbelianFragment {
        AbelianFragment::new(alg, vec![("trivial".into(), PartitionOfUnity::trivial(alg))]).expect("trivial")
    }

    /// Block-diagonal element with `m` in the top-left corner of summand 0
    /// and the identity elsewhere.
    pub fn corner(alg: &FinDimAlgebra, m: &Matrix) -> AlgElement {
        alg.identity().map_blocks(|s, b| {
            let mut b = b.clone();
            if s == 0 {
                for i in 0..m.size() {
                    for j in 0..m.size() {
                        b.set(i, j, m.get(i, j).clone());
                    }
                }
            }
            b
        })
    }

    /// `(1/5)[[3,4],[-4,3]]` in the corner.
    pub fn rotation(alg: &FinDimAlgebra) -> AlgElement {
        corner(alg, &Matrix::from_ints(5, &[&[3, 4], &[-4, 3]]))
    }

    /// The cyclic permutation `e₁ → e₂ → … → e₁` of summand 0.
    pub fn cyclic_permutation(alg: &FinDimAlgebra) -> AlgElement {
        let n = alg.summand_dims()[0];
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.set((i + 1) % n, i, GaussScalar::one());
        }
        corner(alg, &m)
    }

    /// The four maps of the round-trip examples, by name.
    pub fn named_maps(alg: &FinDimAlgebra) -> Vec<(&'static str, JordanMap)> {
        let ad = |u: &AlgElement| JordanMap::ad(alg, u).expect("unitary");
        let rot = ad(&rotation(alg));
        vec![
            ("permutation", ad(&cyclic_permutation(alg))),
            ("rotation", rot.clone()),
            ("transpose", JordanMap::transpose(alg)),
            ("transpose-rotation", rot.then(&JordanMap::transpose(alg)).expect("total")),
        ]
    }

    /// `f` induced by `g` on the diagonal-plus-rotated fragment.
    pub fn round_trip(alg: &FinDimAlgebra, g: &JordanMap) -> TheoremInstance {
        TheoremInstance::induced(g, &diagonal_plus_rotated(alg)).expect("g is a Jordan automorphism")
    }

    /// The 2×2 instance with identity `f`; its lattice is `MO(2)`.
    pub fn two_by_two_counterexample() -> TheoremInstance {
        let alg = FinDimAlgebra::new(vec![2]).expect("valid dims");
        round_trip(&alg, &JordanMap::identity(&alg))
    }
}

#[cfg(test)]
mod tests {
    use super::instances::*;
    use super::*;

    #[test]
    fn permutation_round_trip_on_m3() {
        let alg = FinDimAlgebra::new(vec![3]).unwrap();
        let g = JordanMap::ad(&alg, &cyclic_permutation(&alg)).unwrap();
        let t = round_trip(&alg, &g);
        let run = run_pipeline(&t, PipelineOptions::default()).unwrap();
        assert_eq!(run.stages.source.oml.len(), 12);
        assert!(run.map.agrees_with_on(&g, &run.map.domain_basis()));
        assert!(verify_claims(&t, &run.map).passed());
        assert!(verify_uniqueness(&t, &run.stages, &run.map).passed());
    }

    #[test]
    fn two_by_two_is_ambiguous() {
        let t = two_by_two_counterexample();
        match run_pipeline(&t, PipelineOptions::default()) {
            Err(PipelineError::AmbiguousReconstruction { count, candidates }) => {
                assert_eq!(count, 4);
                assert_eq!(candidates.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        let (_, cands) = diagnostic_candidates(&t, PipelineOptions::default()).unwrap();
        assert_eq!(cands.len(), 4);
        assert!(cands.iter().all(|c| c.map.is_ok()));
    }

    #[test]
    fn trivial_fragments_pass() {
        let alg = FinDimAlgebra::new(vec![3]).unwrap();
        let frag = trivial_fragment(&alg);
        let t = TheoremInstance::induced(&JordanMap::identity(&alg), &frag).unwrap();
        let run = run_pipeline(&t, PipelineOptions::default()).unwrap();
        assert!(verify_claims(&t, &run.map).passed());
        assert!(verify_uniqueness(&t, &run.stages, &run.map).passed());
    }

    #[test]
    fn tampered_map_fails_claim_one() {
        let alg = FinDimAlgebra::new(vec![3]).unwrap();
        let t = round_trip(&alg, &JordanMap::identity(&alg));
        let run = run_pipeline(&t, PipelineOptions::default()).unwrap();
        let d = diagonal_partition(&alg);
        let (a, b) = (&d.atoms()[0], &d.atoms()[1]);
        // swap the images of e1 and e2 on an independent set of projections
        let mut span = Span::empty(&alg);
        let basis: Vec<AlgElement> =
            [a.clone(), b.clone()].into_iter().chain(t.source().projections()).filter(|p| span.insert(p)).collect();
        let swapped: Vec<(AlgElement, AlgElement)> = basis
            .iter()
            .map(|p| {
                let y = if p == a {
                    b.clone()
                } else if p == b {
                    a.clone()
                } else {
                    run.map.apply(p).unwrap()
                };
                (p.clone(), y)
            })
            .collect();
        let tampered = JordanMap::from_images(&alg, &alg, &swapped).unwrap();
        let report = verify_claims(&t, &tampered);
        assert!(!report.checks[0].passed);
    }

    #[test]
    fn instance_text_round_trip() {
        let alg = FinDimAlgebra::new(vec![3, 1]).unwrap();
        let t = round_trip(&alg, &JordanMap::transpose(&alg));
        let text = t.to_text();
        assert_eq!(TheoremInstance::parse(&text, None).unwrap(), t);
    }

    #[test]
    fn invalid_instances() {
        let alg = FinDimAlgebra::new(vec![3]).unwrap();
        let partial = AbelianFragment::new(
            &alg,
            vec![("t".into(), PartitionOfUnity::trivial(&alg)), ("d".into(), diagonal_partition(&alg))],
        )
        .unwrap();
        let err = TheoremInstance::induced(&JordanMap::identity(&alg), &partial).unwrap_err();
        assert!(matches!(err, PipelineError::InvalidInstance(_)));
        assert!(matches!(
            TheoremInstance::parse("begin source\nsummands: [1]\n", None),
            Err(PipelineError::Parse { line: 1, .. })
        ));
        assert!(matches!(TheoremInstance::parse("source /nonexistent/a.txt\n", None), Err(PipelineError::Io { .. })));
    }
}
