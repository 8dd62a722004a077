//! Finite orthomodular lattices.
//!
//! An [`Oml`] is validated once at construction (lattice, orthocomplement,
//! orthomodular law) and then carries precomputed meet and join tables.
//! Boolean subalgebras are generated from orthogonal decompositions of the
//! top element; blocks are the maximal ones.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::poset::{content_lines, write_poset_body, Poset, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmlError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("no least and greatest element")]
    NoBounds,
    #[error("`{0}` and `{1}` have no {2}")]
    NotLattice(String, String, &'static str),
    #[error("orthocomplement is not defined on every element (missing `{0}`)")]
    OrthoIncomplete(String),
    #[error("orthocomplement is not involutive at `{0}`")]
    OrthoNotInvolutive(String),
    #[error("orthocomplement does not reverse `{0}` <= `{1}`")]
    OrthoNotOrderReversing(String, String),
    #[error("`{0}'` is not a complement of `{0}`")]
    NotComplement(String),
    #[error("orthomodular law fails for `{0}` <= `{1}`")]
    OrthomodularityFails(String, String),
    #[error("invalid Greechie diagram: {0}")]
    InvalidDiagram(String),
    #[error("pasting is not an orthomodular lattice: {0}")]
    PastingNotOml(String),
    #[error("unknown standard lattice `{0}`")]
    UnknownName(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, OmlError>;

/// A validated finite orthomodular lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Oml {
    order: Poset,
    ortho: Vec<usize>,
    bottom: usize,
    top: usize,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl Oml {
    /// Checks every orthomodular-lattice axiom exhaustively.
    pub fn verify(order: Poset, ortho: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let minimal = order.minimal_elements();
        let maximal = order.maximal_elements();
        if n == 0 || minimal.len() != 1 || maximal.len() != 1 {
            return Err(OmlError::NoBounds);
        }
        let (bottom, top) = (minimal[0], maximal[0]);
        let name = |i: usize| order.name(i).to_string();
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let m = order.meet(a, b).ok_or_else(|| OmlError::NotLattice(name(a), name(b), "meet"))?;
                let j = order.join(a, b).ok_or_else(|| OmlError::NotLattice(name(a), name(b), "join"))?;
                meet[a][b] = m;
                meet[b][a] = m;
                join[a][b] = j;
                join[b][a] = j;
            }
        }
        if ortho.len() != n {
            return Err(OmlError::OrthoIncomplete(name(ortho.len().min(n.saturating_sub(1)))));
        }
        if let Some(i) = ortho.iter().position(|&o| o >= n) {
            return Err(OmlError::OrthoIncomplete(name(i)));
        }
        for x in 0..n {
            if ortho[ortho[x]] != x {
                return Err(OmlError::OrthoNotInvolutive(name(x)));
            }
            if meet[x][ortho[x]] != bottom || join[x][ortho[x]] != top {
                return Err(OmlError::NotComplement(name(x)));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if order.leq(x, y) {
                    if !order.leq(ortho[y], ortho[x]) {
                        return Err(OmlError::OrthoNotOrderReversing(name(x), name(y)));
                    }
                    if join[x][meet[y][ortho[x]]] != y {
                        return Err(OmlError::OrthomodularityFails(name(x), name(y)));
                    }
                }
            }
        }
        Ok(Oml { order, ortho, bottom, top, meet, join })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn name(&self, x: usize) -> &str {
        self.order.name(x)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.order.index_of(name)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn ortho(&self, x: usize) -> usize {
        self.ortho[x]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.leq(a, self.ortho[b])
    }

    /// `a = (a ∧ b) ∨ (a ∧ b')`.
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.join(self.meet(a, b), self.meet(a, self.ortho[b])) == a
    }

    pub fn is_boolean(&self) -> bool {
        let all: BTreeSet<usize> = (0..self.len()).collect();
        self.is_distributive_on(&all)
    }

    fn is_distributive_on(&self, members: &BTreeSet<usize>) -> bool {
        members.iter().all(|&x| {
            members.iter().all(|&y| {
                members.iter().all(|&z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z)))
            })
        })
    }

    /// Whether `members` is a Boolean subalgebra: contains the bounds, closed
    /// under the operations, and distributive.
    pub fn is_boolean_subalgebra(&self, members: &BTreeSet<usize>) -> bool {
        members.contains(&self.bottom)
            && members.contains(&self.top)
            && members.iter().all(|&x| members.contains(&self.ortho[x]))
            && members.iter().all(|&x| {
                members.iter().all(|&y| members.contains(&self.join(x, y)) && members.contains(&self.meet(x, y)))
            })
            && self.is_distributive_on(members)
    }

    /// Whether `k` is an isomorphism of orthomodular lattices `self → other`.
    pub fn is_iso(&self, other: &Oml, k: &[usize]) -> bool {
        if k.len() != self.len() || other.len() != self.len() {
            return false;
        }
        let mut seen = vec![false; other.len()];
        for &y in k {
            if y >= other.len() || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        (0..self.len()).all(|x| {
            k[self.ortho[x]] == other.ortho[k[x]] && (0..self.len()).all(|y| self.leq(x, y) == other.leq(k[x], k[y]))
        })
    }

    /// Every Boolean subalgebra, ordered by inclusion.
    pub fn boolean_subalgebras(&self) -> BsubPoset {
        let mut found: BTreeMap<BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
        let mut chosen = Vec::new();
        self.partitions_rec(0, self.bottom, &mut chosen, &mut found);
        let mut subs: Vec<BooleanSubalgebra> = found
            .into_iter()
            .map(|(members, atoms)| {
                debug_assert!(self.is_boolean_subalgebra(&members));
                BooleanSubalgebra { members, atoms }
            })
            .collect();
        subs.sort_by(|a, b| (a.len(), &a.members).cmp(&(b.len(), &b.members)));
        let names: Vec<String> = subs.iter().map(|s| s.label(self)).collect();
        let n = subs.len();
        let leq = (0..n).map(|i| (0..n).map(|j| subs[i].members.is_subset(&subs[j].members)).collect()).collect();
        let poset = Poset::from_relation(names, leq).expect("inclusion is a partial order");
        BsubPoset { poset, subalgebras: subs }
    }

    /// Extends `chosen` (pairwise orthogonal, nonzero, increasing indices)
    /// towards an orthogonal decomposition of top.
    fn partitions_rec(
        &self,
        start: usize,
        acc: usize,
        chosen: &mut Vec<usize>,
        found: &mut BTreeMap<BTreeSet<usize>, Vec<usize>>,
    ) {
        if acc == self.top {
            let mut members = BTreeSet::new();
            for mask in 0u64..(1u64 << chosen.len()) {
                let mut j = self.bottom;
                for (bit, &c) in chosen.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        j = self.join(j, c);
                    }
                }
                members.insert(j);
            }
            found.entry(members).or_insert_with(|| chosen.clone());
            return;
        }
        let rest = self.ortho[acc];
        for x in start..self.len() {
            if x != self.bottom && self.leq(x, rest) {
                chosen.push(x);
                self.partitions_rec(x + 1, self.join(acc, x), chosen, found);
                chosen.pop();
            }
        }
    }

    pub fn blocks(&self) -> Vec<BooleanSubalgebra> {
        let bsub = self.boolean_subalgebras();
        bsub.poset.maximal_elements().into_iter().map(|i| bsub.subalgebras[i].clone()).collect()
    }

    /// `ortho x y` lines appended to the poset text format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        write_poset_body(&self.order, &mut s);
        for x in 0..self.len() {
            if x <= self.ortho[x] {
                let _ = writeln!(s, "ortho {} {}", self.name(x), self.name(self.ortho[x]));
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut elements: Vec<String> = Vec::new();
        let mut pairs: Vec<(String, String)> = Vec::new();
        let mut ortho_pairs: Vec<(usize, String, String)> = Vec::new();
        for (line, toks) in content_lines(text) {
            match (toks[0], toks.len()) {
                ("elements", _) => elements.extend(toks[1..].iter().map(|t| t.to_string())),
                ("le", 3) => pairs.push((toks[1].to_string(), toks[2].to_string())),
                ("ortho", 3) => ortho_pairs.push((line, toks[1].to_string(), toks[2].to_string())),
                _ => return Err(OmlError::Parse { line, msg: format!("unexpected `{}` line", toks[0]) }),
            }
        }
        let order = Poset::new(&elements, &pairs)?;
        let mut ortho = vec![usize::MAX; order.len()];
        for (line, a, b) in ortho_pairs {
            let lookup = |s: &str| {
                order.index_of(s).ok_or_else(|| OmlError::Parse { line, msg: format!("unknown element `{s}`") })
            };
            let (ia, ib) = (lookup(&a)?, lookup(&b)?);
            for (x, y) in [(ia, ib), (ib, ia)] {
                if ortho[x] != usize::MAX && ortho[x] != y {
                    return Err(OmlError::OrthoNotInvolutive(order.name(x).to_string()));
                }
                ortho[x] = y;
            }
        }
        if let Some(x) = ortho.iter().position(|&o| o == usize::MAX) {
            return Err(OmlError::OrthoIncomplete(order.name(x).to_string()));
        }
        Oml::verify(order, ortho)
    }
}

/// A Boolean subalgebra given by its member set and atoms (indices into the
/// parent lattice).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BooleanSubalgebra {
    pub members: BTreeSet<usize>,
    pub atoms: Vec<usize>,
}

impl BooleanSubalgebra {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    /// `{m1,m2,...}` with members in lattice index order.
    pub fn label(&self, parent: &Oml) -> String {
        let names: Vec<&str> = self.members.iter().map(|&m| parent.name(m)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// The poset of Boolean subalgebras; poset element `i` is `subalgebras[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsubPoset {
    pub poset: Poset,
    pub subalgebras: Vec<BooleanSubalgebra>,
}

impl BsubPoset {
    pub fn len(&self) -> usize {
        self.subalgebras.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subalgebras.is_empty()
    }

    pub fn position(&self, members: &BTreeSet<usize>) -> Option<usize> {
        self.subalgebras.iter().position(|s| &s.members == members)
    }

    pub fn trivial(&self) -> usize {
        0
    }
}

/// Atoms and blocks of a Greechie diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreechieDiagram {
    atoms: Vec<String>,
    blocks: Vec<Vec<String>>,
}

impl GreechieDiagram {
    pub fn new(atoms: Vec<String>, blocks: Vec<Vec<String>>) -> Result<Self> {
        let known: BTreeSet<&String> = atoms.iter().collect();
        if known.len() != atoms.len() {
            return Err(OmlError::InvalidDiagram("duplicate atom".into()));
        }
        for b in &blocks {
            if b.len() < 2 {
                return Err(OmlError::InvalidDiagram(format!("block {b:?} has fewer than 2 atoms")));
            }
            let set: BTreeSet<&String> = b.iter().collect();
            if set.len() != b.len() {
                return Err(OmlError::InvalidDiagram(format!("block {b:?} repeats an atom")));
            }
            if let Some(a) = b.iter().find(|a| !known.contains(a)) {
                return Err(OmlError::InvalidDiagram(format!("unknown atom `{a}`")));
            }
        }
        for a in &atoms {
            if !blocks.iter().any(|b| b.contains(a)) {
                return Err(OmlError::InvalidDiagram(format!("atom `{a}` is in no block")));
            }
        }
        for (i, b) in blocks.iter().enumerate() {
            for c in &blocks[i + 1..] {
                let shared = b.iter().filter(|a| c.contains(a)).count();
                if shared > 1 || (shared == b.len() && b.len() == c.len()) {
                    return Err(OmlError::InvalidDiagram(format!("blocks {b:?} and {c:?} share {shared} atoms")));
                }
            }
        }
        Ok(GreechieDiagram { atoms, blocks })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn blocks(&self) -> &[Vec<String>] {
        &self.blocks
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut atoms = Vec::new();
        let mut blocks = Vec::new();
        for (line, toks) in content_lines(text) {
            match toks[0] {
                "atoms" => atoms.extend(toks[1..].iter().map(|t| t.to_string())),
                "block" => blocks.push(toks[1..].iter().map(|t| t.to_string()).collect()),
                other => return Err(OmlError::Parse { line, msg: format!("unexpected `{other}` line") }),
            }
        }
        Self::new(atoms, blocks)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("atoms {}\n", self.atoms.join(" "));
        for b in &self.blocks {
            let _ = writeln!(s, "block {}", b.join(" "));
        }
        s
    }

    /// Pastes one Boolean algebra per block, identifying elements with equal
    /// atom sets or equal complementary atom sets, then validates the result.
    pub fn paste(&self) -> Result<Oml> {
        // nodes: (block, subset mask)
        let mut nodes: Vec<(usize, u64)> = Vec::new();
        for (b, atoms) in self.blocks.iter().enumerate() {
            if atoms.len() > 20 {
                return Err(OmlError::InvalidDiagram("block too large".into()));
            }
            for mask in 0..(1u64 << atoms.len()) {
                nodes.push((b, mask));
            }
        }
        let atom_set = |b: usize, mask: u64| -> BTreeSet<&str> {
            self.blocks[b].iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, a)| a.as_str()).collect()
        };
        let full = |b: usize| (1u64 << self.blocks[b].len()) - 1;
        let mut uf = UnionFind::new(nodes.len());
        let mut by_set: BTreeMap<BTreeSet<&str>, usize> = BTreeMap::new();
        let mut by_complement: BTreeMap<BTreeSet<&str>, usize> = BTreeMap::new();
        for (id, &(b, mask)) in nodes.iter().enumerate() {
            let set = atom_set(b, mask);
            let comp = atom_set(b, full(b) & !mask);
            if let Some(&other) = by_set.get(&set) {
                uf.union(id, other);
            } else {
                by_set.insert(set, id);
            }
            if let Some(&other) = by_complement.get(&comp) {
                uf.union(id, other);
            } else {
                by_complement.insert(comp, id);
            }
        }
        // classes in first-seen order, then renamed and sorted below
        let mut class_of = vec![usize::MAX; nodes.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut root_class: BTreeMap<usize, usize> = BTreeMap::new();
        for id in 0..nodes.len() {
            let r = uf.find(id);
            let c = *root_class.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of[id] = c;
            classes[c].push(id);
        }
        let node_id = |b: usize, mask: u64| -> usize {
            let offset: usize = self.blocks[..b].iter().map(|a| 1usize << a.len()).sum();
            offset + mask as usize
        };
        for class in &classes {
            let mut per_block: BTreeMap<usize, u64> = BTreeMap::new();
            for &id in class {
                let (b, mask) = nodes[id];
                if let Some(prev) = per_block.insert(b, mask) {
                    return Err(OmlError::PastingNotOml(format!(
                        "distinct elements {:?} and {:?} of one block are identified",
                        atom_set(b, prev),
                        atom_set(b, mask)
                    )));
                }
            }
        }
        // names and a deterministic element order
        let mut keyed: Vec<((usize, String), usize)> = classes
            .iter()
            .enumerate()
            .map(|(c, members)| {
                let (b0, m0) = nodes[members[0]];
                let (size, name) = if m0 == 0 {
                    (0, "0".to_string())
                } else if m0 == full(b0) {
                    (usize::MAX, "1".to_string())
                } else {
                    let mut best: Option<(usize, String)> = None;
                    for &id in members {
                        let (b, mask) = nodes[id];
                        let set = atom_set(b, mask);
                        let comp = atom_set(b, full(b) & !mask);
                        let cand = if set.len() == 1 {
                            (1, set.into_iter().next().unwrap().to_string())
                        } else if comp.len() == 1 {
                            (2, format!("{}'", comp.into_iter().next().unwrap()))
                        } else {
                            (set.len() + 1, set.into_iter().collect::<Vec<_>>().join("+"))
                        };
                        if best.as_ref().is_none_or(|b| cand < *b) {
                            best = Some(cand);
                        }
                    }
                    best.unwrap()
                };
                ((size, name), c)
            })
            .collect();
        keyed.sort();
        let mut position = vec![0; classes.len()];
        for (pos, (_, c)) in keyed.iter().enumerate() {
            position[*c] = pos;
        }
        let names: Vec<String> = keyed.iter().map(|((_, n), _)| n.clone()).collect();
        let mut seen_names = BTreeSet::new();
        for n in &names {
            if !seen_names.insert(n) {
                return Err(OmlError::PastingNotOml(format!("two elements are both named `{n}`")));
            }
        }
        let n = classes.len();
        let mut leq = vec![vec![false; n]; n];
        let mut ortho = vec![usize::MAX; n];
        for (b, atoms) in self.blocks.iter().enumerate() {
            let f = (1u64 << atoms.len()) - 1;
            for s in 0..=f {
                let cs = position[class_of[node_id(b, s)]];
                let co = position[class_of[node_id(b, f & !s)]];
                if ortho[cs] != usize::MAX && ortho[cs] != co {
                    return Err(OmlError::PastingNotOml(format!("`{}` receives two orthocomplements", names[cs])));
                }
                ortho[cs] = co;
                for t in 0..=f {
                    if s & t == s {
                        leq[cs][position[class_of[node_id(b, t)]]] = true;
                    }
                }
            }
        }
        let order = Poset::from_relation(names, leq).map_err(|e| OmlError::PastingNotOml(e.to_string()))?;
        Oml::verify(order, ortho).map_err(|e| OmlError::PastingNotOml(e.to_string()))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// The standard families: `boolean` (n atoms), `mo` (n four-element blocks
/// glued at bounds) and `horizontal_sum_b8` (n eight-element blocks glued at
/// bounds).
pub fn standard(name: &str, n: usize) -> Result<Oml> {
    let atoms_per_block = match name {
        "boolean" => {
            if n == 0 {
                return Err(OmlError::InvalidDiagram("boolean(0) has no atoms".into()));
            }
            if n == 1 {
                let order = Poset::new(&["0", "1"], &[("0", "1")])?;
                return Oml::verify(order, vec![1, 0]);
            }
            let atoms: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
            return GreechieDiagram::new(atoms.clone(), vec![atoms])?.paste();
        }
        "mo" => 2,
        "horizontal_sum_b8" => 3,
        other => return Err(OmlError::UnknownName(other.to_string())),
    };
    if n == 0 {
        return Err(OmlError::InvalidDiagram(format!("{name}(0) has no blocks")));
    }
    let letters = ["a", "b", "c"];
    let blocks: Vec<Vec<String>> =
        (1..=n).map(|i| letters[..atoms_per_block].iter().map(|l| format!("{l}{i}")).collect()).collect();
    let atoms = blocks.concat();
    GreechieDiagram::new(atoms, blocks)?.paste()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn greechie(blocks: &[&[&str]]) -> GreechieDiagram {
        let mut atoms: Vec<String> = Vec::new();
        for b in blocks {
            for a in *b {
                if !atoms.iter().any(|x| x == a) {
                    atoms.push(a.to_string());
                }
            }
        }
        let blocks = blocks.iter().map(|b| b.iter().map(|a| a.to_string()).collect()).collect();
        GreechieDiagram::new(atoms, blocks).unwrap()
    }

    #[test]
    fn two_element_algebra() {
        let b1 = standard("boolean", 1).unwrap();
        assert_eq!(b1.len(), 2);
        assert!(b1.is_boolean());
    }

    #[test]
    fn mo2_is_valid_and_not_distributive() {
        let mo2 = standard("mo", 2).unwrap();
        assert_eq!(mo2.len(), 6);
        assert!(!mo2.is_boolean());
    }

    #[test]
    fn pentagon_rejected_for_every_involution() {
        // 0 < a < b < 1, 0 < c < 1
        let order =
            Poset::new(&["0", "a", "b", "c", "1"], &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
                .unwrap();
        let mut tried = 0;
        let n: usize = 5;
        for code in 0..n.pow(n as u32) {
            let ortho: Vec<usize> = (0..n).map(|i| code / n.pow(i as u32) % n).collect();
            if (0..n).all(|i| ortho[ortho[i]] == i) {
                tried += 1;
                assert!(Oml::verify(order.clone(), ortho).is_err());
            }
        }
        assert!(tried > 0);
    }

    #[test]
    fn orthomodularity_witness() {
        // benzene ring O6: two chains 0<a<b<1, 0<b'<a'<1
        let order = Poset::new(
            &["0", "a", "b", "a'", "b'", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "b'"), ("b'", "a'"), ("a'", "1")],
        )
        .unwrap();
        let ortho = vec![5, 3, 4, 1, 2, 0];
        assert_eq!(Oml::verify(order, ortho), Err(OmlError::OrthomodularityFails("a".into(), "b".into())));
    }

    #[test]
    fn commutation() {
        let b8 = standard("boolean", 3).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert!(b8.commutes(a, b));
            }
        }
        let mo2 = standard("mo", 2).unwrap();
        let a = mo2.index_of("a1").unwrap();
        let b = mo2.index_of("a2").unwrap();
        assert!(!mo2.commutes(a, b));
        assert!(mo2.commutes(a, mo2.ortho(a)));
    }

    #[test]
    fn blocks_of_standard_lattices() {
        assert_eq!(standard("boolean", 3).unwrap().blocks().len(), 1);
        let mo2 = standard("mo", 2).unwrap();
        let blocks = mo2.blocks();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 4));
        let hs = standard("horizontal_sum_b8", 2).unwrap();
        let blocks = hs.blocks();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 8));
    }

    #[test]
    fn bsub_counts() {
        assert_eq!(standard("boolean", 3).unwrap().boolean_subalgebras().len(), 5);
        assert_eq!(standard("boolean", 4).unwrap().boolean_subalgebras().len(), 15);
        for n in 1..=4 {
            assert_eq!(standard("mo", n).unwrap().boolean_subalgebras().len(), 1 + n);
        }
    }

    #[test]
    fn greechie_pastings() {
        let b8 = greechie(&[&["a", "b", "c"]]).paste().unwrap();
        assert_eq!(b8.len(), 8);
        assert!(b8.is_boolean());
        let mo2 = greechie(&[&["a", "b"], &["c", "d"]]).paste().unwrap();
        assert_eq!(mo2.len(), 6);
        // two 8-element blocks sharing the atom c share {0, c, c', 1}
        let two = greechie(&[&["a", "b", "c"], &["c", "d", "e"]]).paste().unwrap();
        assert_eq!(two.len(), 12);
        assert_eq!(two.blocks().len(), 2);
    }

    #[test]
    fn greechie_loop_of_order_three_is_rejected() {
        let d = greechie(&[&["a", "b", "c"], &["c", "d", "e"], &["e", "f", "a"]]);
        assert!(matches!(d.paste(), Err(OmlError::PastingNotOml(_))));
    }

    #[test]
    fn greechie_invalid() {
        let atoms = vec!["a".to_string(), "b".to_string()];
        assert!(GreechieDiagram::new(atoms.clone(), vec![vec!["a".into()]]).is_err());
        assert!(GreechieDiagram::new(atoms, vec![vec!["a".into(), "z".into()]]).is_err());
    }

    #[test]
    fn standard_sizes() {
        assert_eq!(standard("mo", 2).unwrap().len(), 6);
        assert_eq!(standard("horizontal_sum_b8", 2).unwrap().len(), 14);
        assert_eq!(standard("boolean", 4).unwrap().len(), 16);
        assert_eq!(standard("nope", 1), Err(OmlError::UnknownName("nope".into())));
    }

    #[test]
    fn text_round_trip() {
        for l in [standard("mo", 3).unwrap(), standard("boolean", 3).unwrap()] {
            assert_eq!(Oml::parse(&l.to_text()).unwrap(), l);
        }
        let d = greechie(&[&["a", "b", "c"], &["c", "d", "e"]]);
        assert_eq!(GreechieDiagram::parse(&d.to_text()).unwrap(), d);
    }
}
