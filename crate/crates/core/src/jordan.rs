//! Maps between projection fragments, their linear extension to Jordan maps,
//! and the splitting of a Jordan isomorphism into multiplicative and
//! anti-multiplicative parts.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::matalg::format::parse_element;
use crate::matalg::{
    jordan_product, AbelianFragment, AlgElement, FinDimAlgebra, GaussScalar, LinearMap, MatalgError, PartitionOfUnity,
    Span, SpectralElement,
};
use crate::poset::{OrderIso, PosetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JordanError {
    #[error(transparent)]
    Matalg(#[from] MatalgError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("projection {0} is not in the domain of the map")]
    UncoveredProjection(String),
    #[error("images are inconsistent with linear relations in the source: {0}")]
    SpanInconsistent(String),
    #[error("map is not a projection-fragment isomorphism: {0}")]
    InvalidFragmentMap(String),
    #[error("summand {0} is neither multiplicative nor anti-multiplicative")]
    NeitherIsoNorAnti(usize),
    #[error("matrix unit {0} is outside the domain of the map")]
    MissingMatrixUnit(String),
    #[error("image of partition `{0}` is not a partition of unity")]
    ImageNotPartition(String),
    #[error("element is not unitary")]
    NotUnitary,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, JordanError>;

/// A finite map of projections `ψ` that preserves complements, order and
/// distinctness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMapFragment {
    source: FinDimAlgebra,
    target: FinDimAlgebra,
    pairs: BTreeMap<AlgElement, AlgElement>,
}

impl ProjMapFragment {
    pub fn new(source: &FinDimAlgebra, target: &FinDimAlgebra, pairs: Vec<(AlgElement, AlgElement)>) -> Result<Self> {
        let bad = |m: String| JordanError::InvalidFragmentMap(m);
        let mut map = BTreeMap::new();
        for (p, q) in pairs {
            if !source.contains(&p) || !target.contains(&q) {
                return Err(MatalgError::ParentMismatch.into());
            }
            if !p.is_projection() {
                return Err(MatalgError::NotProjection(p.to_string()).into());
            }
            if !q.is_projection() {
                return Err(MatalgError::NotProjection(q.to_string()).into());
            }
            if let Some(prev) = map.insert(p.clone(), q.clone()) {
                if prev != q {
                    return Err(bad(format!("{p} has two images")));
                }
            }
        }
        let one_s = source.identity();
        let one_t = target.identity();
        for (p, q) in &map {
            match map.get(&(&one_s - p)) {
                Some(c) if *c == &one_t - q => {}
                _ => return Err(bad(format!("complement of {p} is not mapped to the complement of its image"))),
            }
        }
        let entries: Vec<(&AlgElement, &AlgElement)> = map.iter().collect();
        for (i, (p1, q1)) in entries.iter().enumerate() {
            for (p2, q2) in &entries[i + 1..] {
                if q1 == q2 {
                    return Err(bad(format!("{p1} and {p2} have the same image")));
                }
                let le = |a: &AlgElement, b: &AlgElement| &(a * b) == a;
                if le(p1, p2) != le(q1, q2) || le(p2, p1) != le(q2, q1) {
                    return Err(bad(format!("order between {p1} and {p2} is not preserved")));
                }
            }
        }
        Ok(ProjMapFragment { source: source.clone(), target: target.clone(), pairs: map })
    }

    /// Applies `f` to `domain` and its complements.
    pub fn from_fn(
        source: &FinDimAlgebra,
        target: &FinDimAlgebra,
        domain: &[AlgElement],
        f: impl Fn(&AlgElement) -> AlgElement,
    ) -> Result<Self> {
        let one = source.identity();
        let pairs = domain
            .iter()
            .flat_map(|p| [p.clone(), &one - p])
            .map(|p| {
                let q = f(&p);
                (p, q)
            })
            .collect();
        Self::new(source, target, pairs)
    }

    pub fn source(&self) -> &FinDimAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FinDimAlgebra {
        &self.target
    }

    pub fn get(&self, p: &AlgElement) -> Option<&AlgElement> {
        self.pairs.get(p)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&AlgElement, &AlgElement)> {
        self.pairs.iter()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Exchange format: `source:`/`target:` headers and one
    /// `proj NAME SRC -> DST` line per pair, in domain order.
    pub fn to_text(&self) -> String {
        let dims = |a: &FinDimAlgebra| a.summand_dims().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        let mut out = format!("source: [{}]\ntarget: [{}]\n", dims(&self.source), dims(&self.target));
        for (i, (p, q)) in self.pairs.iter().enumerate() {
            out.push_str(&format!("proj p{i} {p} -> {q}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let perr = |line: usize, msg: String| JordanError::Parse { line, msg };
        let mut source = None;
        let mut target = None;
        let mut pairs = Vec::new();
        let dims = |s: &str| -> Option<Vec<usize>> {
            let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
            inner.split(',').map(|d| d.trim().parse().ok()).collect()
        };
        for (no, raw) in text.lines().enumerate() {
            let no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            for (key, slot) in [("source:", &mut source), ("target:", &mut target)] {
                if let Some(rest) = line.strip_prefix(key) {
                    let d = dims(rest).ok_or_else(|| perr(no, format!("expected `{key} [n1, ...]`")))?;
                    *slot = Some(FinDimAlgebra::new(d).map_err(|e| perr(no, e.to_string()))?);
                }
            }
            if line.starts_with("source:") || line.starts_with("target:") {
                continue;
            }
            let rest = line.strip_prefix("proj ").ok_or_else(|| perr(no, format!("unexpected `{line}`")))?;
            let (s, t) = (source.as_ref(), target.as_ref());
            let (Some(s), Some(t)) = (s, t) else {
                return Err(perr(no, "`source:` and `target:` must come first".into()));
            };
            let (_, body) =
                rest.trim().split_once(char::is_whitespace).ok_or_else(|| perr(no, "missing name".into()))?;
            let (lhs, rhs) = body.split_once("->").ok_or_else(|| perr(no, "expected `->`".into()))?;
            let p = parse_element(s, lhs).map_err(|m| perr(no, m))?;
            let q = parse_element(t, rhs).map_err(|m| perr(no, m))?;
            pairs.push((p, q));
        }
        let (Some(s), Some(t)) = (source, target) else {
            return Err(perr(0, "missing `source:` or `target:` line".into()));
        };
        Self::new(&s, &t, pairs)
    }
}

/// A linear map given by images of a spanning set of its domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanMap {
    map: LinearMap,
}

impl JordanMap {
    /// Builds the map from generator images, rejecting inconsistent data.
    pub fn from_images(
        source: &FinDimAlgebra,
        target: &FinDimAlgebra,
        pairs: &[(AlgElement, AlgElement)],
    ) -> Result<Self> {
        let mut map = LinearMap::new(source, target);
        for (x, y) in pairs {
            map.insert(x, y).map_err(|e| match e {
                MatalgError::InconsistentLinearData(m) => JordanError::SpanInconsistent(m),
                other => other.into(),
            })?;
        }
        Ok(JordanMap { map })
    }

    /// The map defined on all of `source` by its values on matrix units.
    pub fn from_fn(
        source: &FinDimAlgebra,
        target: &FinDimAlgebra,
        f: impl Fn(&AlgElement) -> AlgElement,
    ) -> Result<Self> {
        let pairs: Vec<_> = source
            .matrix_units()
            .into_iter()
            .map(|e| {
                let y = f(&e);
                (e, y)
            })
            .collect();
        Self::from_images(source, target, &pairs)
    }

    pub fn identity(a: &FinDimAlgebra) -> Self {
        Self::from_fn(a, a, Clone::clone).expect("identity is consistent")
    }

    pub fn transpose(a: &FinDimAlgebra) -> Self {
        Self::from_fn(a, a, AlgElement::transpose).expect("transpose is consistent")
    }

    /// `x ↦ u x u*` for a unitary `u`.
    pub fn ad(a: &FinDimAlgebra, u: &AlgElement) -> Result<Self> {
        if !a.contains(u) || u * &u.adjoint() != a.identity() {
            return Err(JordanError::NotUnitary);
        }
        let us = u.adjoint();
        Self::from_fn(a, a, |x| &(u * x) * &us)
    }

    pub fn source(&self) -> &FinDimAlgebra {
        self.map.source()
    }

    pub fn target(&self) -> &FinDimAlgebra {
        self.map.target()
    }

    pub fn apply(&self, x: &AlgElement) -> Option<AlgElement> {
        self.map.apply(x)
    }

    pub fn domain(&self) -> Span {
        self.map.domain()
    }

    pub fn domain_basis(&self) -> Vec<AlgElement> {
        self.map.domain_basis()
    }

    /// `other ∘ self` on the domain of `self`.
    pub fn then(&self, other: &JordanMap) -> Result<JordanMap> {
        let pairs = self
            .domain_basis()
            .into_iter()
            .map(|x| {
                let y = self.apply(&x).expect("basis element is in the domain");
                let z = other.apply(&y).ok_or_else(|| JordanError::UncoveredProjection(y.to_string()))?;
                Ok((x, z))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(self.source(), other.target(), &pairs)
    }

    /// Both maps are defined and equal on every element of `xs`.
    pub fn agrees_with_on(&self, other: &JordanMap, xs: &[AlgElement]) -> bool {
        xs.iter().all(|x| matches!((self.apply(x), other.apply(x)), (Some(a), Some(b)) if a == b))
    }
}

/// `Σλᵢpᵢ ↦ Σλᵢψ(pᵢ)`, extended linearly from all projections of `psi` and
/// the given spectral elements.
pub fn spectral_extend(psi: &ProjMapFragment, inputs: &[SpectralElement]) -> Result<JordanMap> {
    let mut pairs: Vec<(AlgElement, AlgElement)> = psi.pairs().map(|(p, q)| (p.clone(), q.clone())).collect();
    for s in inputs {
        let mut image = psi.target().zero();
        for (l, p) in s.pairs() {
            let q = psi.get(p).ok_or_else(|| JordanError::UncoveredProjection(p.to_string()))?;
            image = &image + &q.scale(&GaussScalar::real(l.clone()));
        }
        pairs.push((s.value(), image));
    }
    let phi = JordanMap::from_images(psi.source(), psi.target(), &pairs)?;
    for b in phi.domain_basis() {
        let lhs = phi.apply(&b.adjoint());
        let rhs = phi.apply(&b).map(|y| y.adjoint());
        if lhs.is_none() || lhs != rhs {
            return Err(JordanError::SpanInconsistent(format!("adjoint not preserved at {b}")));
        }
    }
    Ok(phi)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub property: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match &self.witness {
            Some(w) => write!(f, "{status} {}: {w}", self.property),
            None => write!(f, "{status} {}", self.property),
        }
    }
}

/// Outcome of a list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, property: impl Into<String>, witness: Option<String>) {
        self.checks.push(Check { property: property.into(), passed: witness.is_none(), witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, property: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.property == property)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Checks unit, linearity, adjoints and the Jordan product on `samples`.
pub fn verify_jordan(phi: &JordanMap, samples: &[(AlgElement, AlgElement)]) -> Report {
    let mut report = Report::default();
    let one = phi.source().identity();
    let unit = match phi.apply(&one) {
        Some(y) if y == phi.target().identity() => None,
        Some(y) => Some(format!("1 -> {y}")),
        None => Some("1 is outside the domain".to_string()),
    };
    report.push("unit", unit);

    let c = GaussScalar::complex((2, 1), (1, 3));
    let mut linear = None;
    let mut star = None;
    let mut jordan = None;
    for (a, b) in samples {
        let (Some(fa), Some(fb)) = (phi.apply(a), phi.apply(b)) else {
            linear.get_or_insert_with(|| format!("sample ({a}, {b}) is outside the domain"));
            continue;
        };
        let sum_ok = phi.apply(&(a + b)) == Some(&fa + &fb);
        let scale_ok = phi.apply(&a.scale(&c)) == Some(fa.scale(&c));
        if !(sum_ok && scale_ok) {
            linear.get_or_insert_with(|| format!("({a}, {b})"));
        }
        for (x, fx) in [(a, &fa), (b, &fb)] {
            if phi.apply(&x.adjoint()) != Some(fx.adjoint()) {
                star.get_or_insert_with(|| x.to_string());
            }
        }
        let ab = jordan_product(a, b).expect("same parent");
        let fab = jordan_product(&fa, &fb).expect("same parent");
        match phi.apply(&ab) {
            Some(y) if y == fab => {}
            Some(_) => {
                jordan.get_or_insert_with(|| format!("({a}, {b})"));
            }
            None => {
                jordan.get_or_insert_with(|| format!("({a}, {b}): product is outside the domain"));
            }
        }
    }
    report.push("linear", linear);
    report.push("adjoint", star);
    report.push("jordan", jordan);
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummandKind {
    Iso,
    Anti,
}

impl fmt::Display for SummandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SummandKind::Iso => "iso",
            SummandKind::Anti => "anti",
        })
    }
}

/// Central projections `P₁`, `P₂` with `P₁ + P₂ = 1` on which the map is
/// multiplicative, respectively anti-multiplicative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanDecomposition {
    pub p1: AlgElement,
    pub p2: AlgElement,
    pub labels: Vec<SummandKind>,
}

/// Splits `phi` summand by summand using products of matrix units. Summands
/// of size 1 are labelled [`SummandKind::Iso`].
pub fn decompose_jordan(phi: &JordanMap) -> Result<JordanDecomposition> {
    let alg = phi.source().clone();
    let mut p1 = alg.zero();
    let mut p2 = alg.zero();
    let mut labels = Vec::new();
    for (s, &n) in alg.summand_dims().iter().enumerate() {
        let units: Vec<(AlgElement, AlgElement)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let e = alg.unit(s, i, j);
                let img =
                    phi.apply(&e).ok_or_else(|| JordanError::MissingMatrixUnit(format!("e{i}{j} in summand {s}")))?;
                Ok((e, img))
            })
            .collect::<Result<_>>()?;
        let kind = if n == 1 {
            SummandKind::Iso
        } else {
            let image = |x: &AlgElement| phi.apply(x).expect("summand is in the domain");
            let mut mult = true;
            let mut anti = true;
            for (a, fa) in &units {
                for (b, fb) in &units {
                    let fab = image(&(a * b));
                    mult &= fab == fa * fb;
                    anti &= fab == fb * fa;
                }
            }
            match (mult, anti) {
                (true, _) => SummandKind::Iso,
                (false, true) => SummandKind::Anti,
                (false, false) => return Err(JordanError::NeitherIsoNorAnti(s)),
            }
        };
        let c = alg.central_projection(s);
        match kind {
            SummandKind::Iso => p1 = &p1 + &c,
            SummandKind::Anti => p2 = &p2 + &c,
        }
        labels.push(kind);
    }
    Ok(JordanDecomposition { p1, p2, labels })
}

/// The image of a fragment under a Jordan map with the same entry names, and
/// the order-isomorphism it induces between the two fragment posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub image: AbelianFragment,
    pub iso: OrderIso,
}

/// Maps each partition of `fragment` atomwise through `g`.
pub fn induced_subalgebra_map(g: &JordanMap, fragment: &AbelianFragment) -> Result<InducedMap> {
    let mut entries = Vec::with_capacity(fragment.len());
    for (name, p) in fragment.entries() {
        let atoms = p
            .atoms()
            .iter()
            .map(|a| g.apply(a).ok_or_else(|| JordanError::ImageNotPartition(name.clone())))
            .collect::<Result<Vec<_>>>()?;
        let q = PartitionOfUnity::new(g.target(), atoms).map_err(|_| JordanError::ImageNotPartition(name.clone()))?;
        entries.push((name.clone(), q));
    }
    let image = AbelianFragment::new(g.target(), entries)?;
    let source = fragment.fragment_poset();
    let target = image.fragment_poset();
    let map: Vec<usize> = (0..source.len()).collect();
    let iso = OrderIso::new(source, target, map)?;
    Ok(InducedMap { image, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matalg::Matrix;

    fn m3() -> FinDimAlgebra {
        FinDimAlgebra::new(vec![3]).unwrap()
    }

    fn diag(alg: &FinDimAlgebra, d: &[i64]) -> AlgElement {
        alg.element(vec![Matrix::diag(&d.iter().map(|&x| GaussScalar::int(x)).collect::<Vec<_>>())]).unwrap()
    }

    fn swap12(alg: &FinDimAlgebra) -> AlgElement {
        alg.element(vec![Matrix::from_ints(1, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])]).unwrap()
    }

    fn diagonal_partition(alg: &FinDimAlgebra) -> PartitionOfUnity {
        PartitionOfUnity::new(alg, vec![diag(alg, &[1, 0, 0]), diag(alg, &[0, 1, 0]), diag(alg, &[0, 0, 1])]).unwrap()
    }

    #[test]
    fn permutation_extension() {
        let alg = m3();
        let g = JordanMap::ad(&alg, &swap12(&alg)).unwrap();
        let domain = diagonal_partition(&alg).psi_project();
        let psi = ProjMapFragment::from_fn(&alg, &alg, &domain, |p| g.apply(p).unwrap()).unwrap();
        let s = spectral_decompose_diag(&alg, &[2, 3, 3]);
        let phi = spectral_extend(&psi, std::slice::from_ref(&s)).unwrap();
        assert_eq!(phi.apply(&s.value()).unwrap(), diag(&alg, &[3, 2, 3]));
    }

    fn spectral_decompose_diag(alg: &FinDimAlgebra, d: &[i64]) -> SpectralElement {
        crate::matalg::spectral_decompose(&diag(alg, d)).unwrap()
    }

    #[test]
    fn rotation_extension() {
        let alg = FinDimAlgebra::new(vec![2]).unwrap();
        let u = alg.element(vec![Matrix::from_ints(5, &[&[3, 4], &[-4, 3]])]).unwrap();
        let g = JordanMap::ad(&alg, &u).unwrap();
        let p = alg.unit(0, 0, 0);
        let psi = ProjMapFragment::from_fn(&alg, &alg, &[p], |x| g.apply(x).unwrap()).unwrap();
        let a = alg.element(vec![Matrix::from_ints(1, &[&[2, 0], &[0, 3]])]).unwrap();
        let s = crate::matalg::spectral_decompose(&a).unwrap();
        let phi = spectral_extend(&psi, &[s]).unwrap();
        let expected = alg.element(vec![Matrix::from_ints(25, &[&[66, 12], &[12, 59]])]).unwrap();
        assert_eq!(phi.apply(&a).unwrap(), expected);
    }

    #[test]
    fn uncovered_and_inconsistent() {
        let alg = m3();
        let e1 = diag(&alg, &[1, 0, 0]);
        let psi = ProjMapFragment::from_fn(&alg, &alg, &[e1], Clone::clone).unwrap();
        let s = spectral_decompose_diag(&alg, &[1, 2, 3]);
        assert!(matches!(spectral_extend(&psi, &[s]), Err(JordanError::UncoveredProjection(_))));
        let bad = JordanMap::from_images(&alg, &alg, &[(alg.identity(), alg.identity()), (alg.identity(), alg.zero())]);
        assert!(matches!(bad, Err(JordanError::SpanInconsistent(_))));
    }

    #[test]
    fn fragment_map_validation() {
        let alg = m3();
        let e1 = diag(&alg, &[1, 0, 0]);
        let e2 = diag(&alg, &[0, 1, 0]);
        let one = alg.identity();
        let no_complement = ProjMapFragment::new(&alg, &alg, vec![(e1.clone(), e1.clone())]);
        assert!(matches!(no_complement, Err(JordanError::InvalidFragmentMap(_))));
        let wrong_order = ProjMapFragment::new(
            &alg,
            &alg,
            vec![
                (e1.clone(), e1.clone()),
                (&one - &e1, &one - &e1),
                (&e1 + &e2, e2.clone()),
                (&one - &(&e1 + &e2), &one - &e2),
            ],
        );
        assert!(matches!(wrong_order, Err(JordanError::InvalidFragmentMap(_))));
    }

    #[test]
    fn exchange_round_trip() {
        let alg = m3();
        let g = JordanMap::transpose(&alg);
        let r = alg
            .element(vec![Matrix::from_rows(vec![
                vec![GaussScalar::ratio(9, 25), GaussScalar::complex((0, 1), (-12, 25)), GaussScalar::zero()],
                vec![GaussScalar::complex((0, 1), (12, 25)), GaussScalar::ratio(16, 25), GaussScalar::zero()],
                vec![GaussScalar::zero(), GaussScalar::zero(), GaussScalar::zero()],
            ])])
            .unwrap();
        let psi = ProjMapFragment::from_fn(&alg, &alg, &[r], |x| g.apply(x).unwrap()).unwrap();
        let text = psi.to_text();
        assert!(text.starts_with("source: [3]\ntarget: [3]\nproj p0 "));
        assert_eq!(ProjMapFragment::parse(&text).unwrap(), psi);
        assert!(matches!(ProjMapFragment::parse("source: [3]\nproj x [1]\n"), Err(JordanError::Parse { line: 2, .. })));
    }

    fn rational_pairs(alg: &FinDimAlgebra) -> Vec<(AlgElement, AlgElement)> {
        let units = alg.matrix_units();
        let mut out = Vec::new();
        for (k, a) in units.iter().enumerate() {
            let b = &units[(k * 5 + 2) % units.len()];
            out.push((a.scale(&GaussScalar::complex((k as i64 + 1, 3), (1, 2))), b + &a.adjoint()));
        }
        out
    }

    #[test]
    fn verify_reports() {
        let alg = m3();
        let samples = rational_pairs(&alg);
        assert!(verify_jordan(&JordanMap::transpose(&alg), &samples).passed());
        let u = alg.element(vec![Matrix::from_ints(5, &[&[3, 4, 0], &[-4, 3, 0], &[0, 0, 5]])]).unwrap();
        assert!(verify_jordan(&JordanMap::ad(&alg, &u).unwrap(), &samples).passed());
        let double = JordanMap::from_fn(&alg, &alg, |x| x.scale(&GaussScalar::int(2))).unwrap();
        let r = verify_jordan(&double, &samples);
        assert!(!r.get("unit").unwrap().passed);
        assert!(!r.get("jordan").unwrap().passed);
        assert!(r.get("linear").unwrap().passed);
        assert!(r.to_string().contains("FAIL unit: 1 -> "));
    }

    #[test]
    fn decomposition() {
        let alg = m3();
        let d = decompose_jordan(&JordanMap::identity(&alg)).unwrap();
        assert_eq!((d.p1.clone(), d.p2.clone()), (alg.identity(), alg.zero()));
        let d = decompose_jordan(&JordanMap::transpose(&alg)).unwrap();
        assert_eq!((d.p1, d.p2), (alg.zero(), alg.identity()));
        let two = FinDimAlgebra::new(vec![3, 3]).unwrap();
        let mixed =
            JordanMap::from_fn(&two, &two, |x| x.map_blocks(|s, b| if s == 0 { b.clone() } else { b.transpose() }))
                .unwrap();
        let d = decompose_jordan(&mixed).unwrap();
        assert_eq!(d.labels, vec![SummandKind::Iso, SummandKind::Anti]);
        assert_eq!(d.p1, two.central_projection(0));
        assert_eq!(d.p2, two.central_projection(1));
        let one = FinDimAlgebra::new(vec![1]).unwrap();
        assert_eq!(decompose_jordan(&JordanMap::transpose(&one)).unwrap().labels, vec![SummandKind::Iso]);
    }

    #[test]
    fn decomposition_needs_matrix_units() {
        let alg = m3();
        let psi = ProjMapFragment::from_fn(&alg, &alg, &diagonal_partition(&alg).psi_project(), Clone::clone).unwrap();
        let phi = spectral_extend(&psi, &[]).unwrap();
        assert!(matches!(decompose_jordan(&phi), Err(JordanError::MissingMatrixUnit(_))));
    }

    #[test]
    fn neither_iso_nor_anti() {
        let alg = FinDimAlgebra::new(vec![2]).unwrap();
        let double = JordanMap::from_fn(&alg, &alg, |x| x.scale(&GaussScalar::int(2))).unwrap();
        assert_eq!(decompose_jordan(&double), Err(JordanError::NeitherIsoNorAnti(0)));
    }

    #[test]
    fn induced_maps() {
        let alg = m3();
        let frag = AbelianFragment::coarsening_closure(&alg, &[("d".into(), diagonal_partition(&alg))]).unwrap();
        let id = induced_subalgebra_map(&JordanMap::identity(&alg), &frag).unwrap();
        assert_eq!(id.image, frag);
        let g = JordanMap::ad(&alg, &swap12(&alg)).unwrap();
        let induced = induced_subalgebra_map(&g, &frag).unwrap();
        // the permutation exchanges {e1+e3, e2} and {e1, e2+e3}
        let part = |a: &[i64]| {
            let x = diag(&alg, a);
            PartitionOfUnity::new(&alg, vec![x.clone(), &alg.identity() - &x]).unwrap()
        };
        let name_of = |q: &PartitionOfUnity| frag.entries().iter().find(|(_, p)| p == q).unwrap().0.clone();
        assert_eq!(induced.image.get(&name_of(&part(&[0, 1, 0]))), Some(&part(&[1, 0, 0])));
        assert_eq!(induced.image.get(&name_of(&part(&[0, 0, 1]))), Some(&part(&[0, 0, 1])));
    }
}
