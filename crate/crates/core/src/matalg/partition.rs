//! Partitions of unity and finite fragments of the abelian-subalgebra poset.
//!
//! A finite-dimensional abelian *-subalgebra is the span of its minimal
//! projections, which form a partition of unity; the subalgebra is the image
//! of `(λ₁,…,λₖ) ↦ Σ λᵢ pᵢ` and its projections are the subset sums of the
//! atoms. Subalgebras are represented here by their atoms only.

use std::collections::{BTreeMap, BTreeSet};

use super::algebra::{AlgElement, FinDimAlgebra};
use super::linear::Span;
use super::scalar::GaussScalar;
use super::{MatalgError, Result};
use crate::poset::Poset;

/// Nonzero, pairwise orthogonal projections summing to the identity. Atoms
/// are stored in canonical (sorted) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionOfUnity {
    atoms: Vec<AlgElement>,
}

impl PartitionOfUnity {
    pub fn new(algebra: &FinDimAlgebra, mut atoms: Vec<AlgElement>) -> Result<Self> {
        for (i, p) in atoms.iter().enumerate() {
            if !algebra.contains(p) {
                return Err(MatalgError::ParentMismatch);
            }
            if !p.is_projection() {
                return Err(MatalgError::NotProjection(p.to_string()));
            }
            if p.is_zero() {
                return Err(MatalgError::ZeroAtom);
            }
            for q in &atoms[..i] {
                if !(p * q).is_zero() {
                    return Err(MatalgError::NotOrthogonal(q.to_string(), p.to_string()));
                }
            }
        }
        let sum = atoms.iter().fold(algebra.zero(), |acc, p| &acc + p);
        if sum != algebra.identity() {
            return Err(MatalgError::NotUnity);
        }
        atoms.sort();
        Ok(PartitionOfUnity { atoms })
    }

    pub fn trivial(algebra: &FinDimAlgebra) -> Self {
        PartitionOfUnity { atoms: vec![algebra.identity()] }
    }

    pub fn atoms(&self) -> &[AlgElement] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.atoms.len() == 1
    }

    pub fn algebra(&self) -> FinDimAlgebra {
        self.atoms[0].algebra()
    }

    /// `Σ λᵢ pᵢ` over the canonical atom order.
    pub fn lambda_embed(&self, coeffs: &[GaussScalar]) -> Result<AlgElement> {
        if coeffs.len() != self.atoms.len() {
            return Err(MatalgError::ArityMismatch { expected: self.atoms.len(), got: coeffs.len() });
        }
        let alg = self.algebra();
        Ok(self.atoms.iter().zip(coeffs).fold(alg.zero(), |acc, (p, c)| &acc + &p.scale(c)))
    }

    /// All `2^k` projections of the generated subalgebra, sorted.
    pub fn psi_project(&self) -> Vec<AlgElement> {
        let alg = self.algebra();
        let k = self.atoms.len();
        let mut out: Vec<AlgElement> = (0u64..(1u64 << k))
            .map(|mask| (0..k).filter(|b| mask >> b & 1 == 1).fold(alg.zero(), |acc, b| &acc + &self.atoms[b]))
            .collect();
        out.sort();
        out
    }

    /// The generated subalgebra as a linear span.
    pub fn span(&self) -> Span {
        Span::of(&self.algebra(), &self.atoms)
    }

    /// Inclusion of generated subalgebras: every atom of `self` is a sum of
    /// atoms of `finer`.
    pub fn is_coarsening_of(&self, finer: &PartitionOfUnity) -> bool {
        let alg = self.algebra();
        self.atoms.iter().all(|p| {
            let below = finer.atoms.iter().filter(|q| &(p * *q) == *q).fold(alg.zero(), |acc, q| &acc + q);
            &below == p
        })
    }

    /// Merges atoms according to `groups` (indices into the canonical order).
    pub fn merge(&self, groups: &[Vec<usize>]) -> PartitionOfUnity {
        let alg = self.algebra();
        let mut atoms: Vec<AlgElement> =
            groups.iter().map(|g| g.iter().fold(alg.zero(), |acc, &i| &acc + &self.atoms[i])).collect();
        atoms.sort();
        PartitionOfUnity { atoms }
    }

    /// Every coarsening (one per set partition of the atoms), including
    /// `self` and the trivial partition.
    pub fn coarsenings(&self) -> Vec<(Vec<Vec<usize>>, PartitionOfUnity)> {
        set_partitions(self.atoms.len())
            .into_iter()
            .map(|g| {
                let p = self.merge(&g);
                (g, p)
            })
            .collect()
    }
}

/// All set partitions of `{0..n}` as restricted-growth strings turned into
/// groups.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let mut groups: Vec<Vec<usize>> = vec![Vec::new(); max];
            for (e, &l) in labels.iter().enumerate() {
                groups[l].push(e);
            }
            out.push(groups);
            return;
        }
        for l in 0..=max {
            labels.push(l);
            rec(i + 1, n, labels, max.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// A finite set of named abelian subalgebras of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianFragment {
    algebra: FinDimAlgebra,
    entries: Vec<(String, PartitionOfUnity)>,
}

impl AbelianFragment {
    pub fn new(algebra: &FinDimAlgebra, entries: Vec<(String, PartitionOfUnity)>) -> Result<Self> {
        let mut names = BTreeSet::new();
        let mut seen: BTreeMap<&PartitionOfUnity, &str> = BTreeMap::new();
        for (name, p) in &entries {
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(MatalgError::InvalidName(name.clone()));
            }
            if !names.insert(name.as_str()) {
                return Err(MatalgError::DuplicateName(name.clone()));
            }
            if p.algebra() != *algebra {
                return Err(MatalgError::ParentMismatch);
            }
            if let Some(other) = seen.insert(p, name) {
                return Err(MatalgError::DuplicatePartition(other.to_string(), name.clone()));
            }
        }
        if !entries.iter().any(|(_, p)| p.is_trivial()) {
            return Err(MatalgError::MissingTrivial);
        }
        Ok(AbelianFragment { algebra: algebra.clone(), entries })
    }

    /// The fragment generated by `seeds` and all their coarsenings. Names of
    /// generated partitions are `<seed>:<groups>`, e.g. `d:0+1|2`.
    pub fn coarsening_closure(algebra: &FinDimAlgebra, seeds: &[(String, PartitionOfUnity)]) -> Result<Self> {
        let mut entries: Vec<(String, PartitionOfUnity)> = Vec::new();
        let mut seen: BTreeSet<PartitionOfUnity> = BTreeSet::new();
        let trivial = PartitionOfUnity::trivial(algebra);
        for (name, p) in seeds {
            if seen.insert(p.clone()) {
                entries.push((name.clone(), p.clone()));
            }
        }
        if seen.insert(trivial.clone()) {
            entries.push(("trivial".to_string(), trivial));
        }
        for (name, p) in seeds {
            for (groups, q) in p.coarsenings() {
                if seen.insert(q.clone()) {
                    let label: Vec<String> =
                        groups.iter().map(|g| g.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("+")).collect();
                    entries.push((format!("{name}:{}", label.join("|")), q));
                }
            }
        }
        Self::new(algebra, entries)
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn entries(&self) -> &[(String, PartitionOfUnity)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&PartitionOfUnity> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn position(&self, p: &PartitionOfUnity) -> Option<usize> {
        self.entries.iter().position(|(_, q)| q == p)
    }

    pub fn trivial_name(&self) -> &str {
        &self.entries.iter().find(|(_, p)| p.is_trivial()).expect("validated").0
    }

    /// Returns the first coarsening of a member that is missing, if any.
    pub fn missing_coarsening(&self) -> Option<(String, PartitionOfUnity)> {
        for (name, p) in &self.entries {
            for (_, q) in p.coarsenings() {
                if self.position(&q).is_none() {
                    return Some((name.clone(), q));
                }
            }
        }
        None
    }

    pub fn is_coarsening_closed(&self) -> bool {
        self.missing_coarsening().is_none()
    }

    /// Inclusion poset of the generated subalgebras.
    pub fn fragment_poset(&self) -> Poset {
        let names: Vec<String> = self.entries.iter().map(|(n, _)| n.clone()).collect();
        let leq = self
            .entries
            .iter()
            .map(|(_, p)| self.entries.iter().map(|(_, q)| p.is_coarsening_of(q)).collect())
            .collect();
        Poset::from_relation(names, leq).expect("subalgebra inclusion is a partial order")
    }

    /// Every projection appearing in some member, sorted and deduplicated.
    pub fn projections(&self) -> Vec<AlgElement> {
        let set: BTreeSet<AlgElement> = self.entries.iter().flat_map(|(_, p)| p.psi_project()).collect();
        set.into_iter().collect()
    }
}
