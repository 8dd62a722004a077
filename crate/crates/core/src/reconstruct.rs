//! Recovering lattice isomorphisms from isomorphisms of Boolean-subalgebra
//! posets.
//!
//! Given `j : BSub(L) → BSub(M)`, every `x ∉ {0, 1}` lies in the four-element
//! subalgebra `{0, x, x', 1}`, whose image pins `k(x)` down to one of two
//! elements. The search picks one orientation per complementary pair and
//! propagates joins inside the larger subalgebras; every complete assignment is
//! then checked against the defining condition `k[D] = j(D)` for all `D`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::oml::{standard, BsubPoset, GreechieDiagram, Oml, OmlError};
use crate::poset::{content_lines, OrderIso, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error(transparent)]
    Oml(#[from] OmlError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("no lattice isomorphism induces the given map")]
    NoSolution,
    #[error("map does not respect subalgebra sizes: {0}")]
    InconsistentLevels(String),
    #[error("hypothesis violated: {0} has a 4-element block")]
    HypothesisViolated(&'static str),
    #[error("expected a unique lattice isomorphism, found {count}: {witnesses:?}")]
    UniquenessFailed { count: usize, witnesses: Vec<String> },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, ReconstructError>;

/// An order-isomorphism between the Boolean-subalgebra posets of two
/// orthomodular lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsubIso {
    left: Oml,
    right: Oml,
    left_bsub: BsubPoset,
    right_bsub: BsubPoset,
    map: OrderIso,
}

impl BsubIso {
    /// `map[i]` is the index in `BSub(right)` of the image of subalgebra `i`
    /// of `BSub(left)`.
    pub fn new(left: Oml, right: Oml, map: Vec<usize>) -> Result<Self> {
        let left_bsub = left.boolean_subalgebras();
        let right_bsub = right.boolean_subalgebras();
        Self::with_posets(left, right, left_bsub, right_bsub, map)
    }

    pub fn with_posets(
        left: Oml,
        right: Oml,
        left_bsub: BsubPoset,
        right_bsub: BsubPoset,
        map: Vec<usize>,
    ) -> Result<Self> {
        let map = OrderIso::new(left_bsub.poset.clone(), right_bsub.poset.clone(), map)?;
        if map.apply(left_bsub.trivial()) != right_bsub.trivial() {
            return Err(ReconstructError::InconsistentLevels("trivial subalgebra not fixed".into()));
        }
        for (i, d) in left_bsub.subalgebras.iter().enumerate() {
            let img = &right_bsub.subalgebras[map.apply(i)];
            if (d.len() == 4) != (img.len() == 4) {
                return Err(ReconstructError::InconsistentLevels(format!(
                    "{} maps to {}",
                    d.label(&left),
                    img.label(&right)
                )));
            }
        }
        Ok(BsubIso { left, right, left_bsub, right_bsub, map })
    }

    pub fn identity(l: &Oml) -> Self {
        let bsub = l.boolean_subalgebras();
        let map = (0..bsub.len()).collect();
        Self::with_posets(l.clone(), l.clone(), bsub.clone(), bsub, map).expect("identity is an iso")
    }

    /// The map `D ↦ k[D]` induced by a lattice isomorphism `k`.
    pub fn induced_by(left: &Oml, right: &Oml, k: &[usize]) -> Result<Self> {
        if !left.is_iso(right, k) {
            return Err(ReconstructError::NoSolution);
        }
        let left_bsub = left.boolean_subalgebras();
        let right_bsub = right.boolean_subalgebras();
        let map = left_bsub
            .subalgebras
            .iter()
            .map(|d| {
                let img: BTreeSet<usize> = d.members.iter().map(|&x| k[x]).collect();
                right_bsub.position(&img).ok_or(ReconstructError::NoSolution)
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::with_posets(left.clone(), right.clone(), left_bsub, right_bsub, map)
    }

    pub fn left(&self) -> &Oml {
        &self.left
    }

    pub fn right(&self) -> &Oml {
        &self.right
    }

    pub fn left_bsub(&self) -> &BsubPoset {
        &self.left_bsub
    }

    pub fn right_bsub(&self) -> &BsubPoset {
        &self.right_bsub
    }

    pub fn map(&self) -> &OrderIso {
        &self.map
    }

    /// Exchange format: both lattices inline, then `sub` and `map` lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (side, l) in [("left", &self.left), ("right", &self.right)] {
            let _ = writeln!(s, "begin {side}");
            s.push_str(&l.to_text());
            let _ = writeln!(s, "end {side}");
        }
        for (prefix, l, b) in [("L", &self.left, &self.left_bsub), ("R", &self.right, &self.right_bsub)] {
            for (i, d) in b.subalgebras.iter().enumerate() {
                let names: Vec<&str> = d.members.iter().map(|&m| l.name(m)).collect();
                let _ = writeln!(s, "sub {prefix}{i} = {{{}}}", names.join(","));
            }
        }
        for i in 0..self.left_bsub.len() {
            let _ = writeln!(s, "map L{i} R{}", self.map.apply(i));
        }
        s
    }

    /// Parses the exchange format. Lattices are given inline between
    /// `begin left` / `end left` (and likewise `right`), or by a line
    /// `left standard <name> <n>` or `left file <path>` (relative to `base`).
    pub fn parse(text: &str, base: Option<&Path>) -> Result<Self> {
        let mut sides: BTreeMap<&str, Oml> = BTreeMap::new();
        let mut subs: BTreeMap<String, (usize, Vec<String>)> = BTreeMap::new();
        let mut maps: Vec<(usize, String, String)> = Vec::new();
        let mut inline: Option<(&str, usize, String)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
            if let Some((side, start, buf)) = inline.as_mut() {
                if toks.len() == 2 && toks[0] == "end" && toks[1] == *side {
                    let l = parse_oml_any(buf)
                        .map_err(|e| ReconstructError::Parse { line: *start, msg: format!("{side} lattice: {e}") })?;
                    sides.insert(side, l);
                    inline = None;
                } else {
                    buf.push_str(raw);
                    buf.push('\n');
                }
                continue;
            }
            if toks.is_empty() {
                continue;
            }
            let side = |t: &str| match t {
                "left" => Some("left"),
                "right" => Some("right"),
                _ => None,
            };
            match toks.as_slice() {
                ["begin", s] if side(s).is_some() => inline = Some((side(s).unwrap(), line, String::new())),
                [s, "standard", name, n] if side(s).is_some() => {
                    let n: usize =
                        n.parse().map_err(|_| ReconstructError::Parse { line, msg: format!("bad size `{n}`") })?;
                    sides.insert(side(s).unwrap(), standard(name, n)?);
                }
                [s, "file", path] if side(s).is_some() => {
                    let path = base.map_or_else(|| Path::new(path).to_path_buf(), |b| b.join(path));
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| ReconstructError::Parse { line, msg: format!("{}: {e}", path.display()) })?;
                    sides.insert(side(s).unwrap(), parse_oml_any(&text)?);
                }
                ["sub", id, "=", rest @ ..] => {
                    let body = rest.concat();
                    let inner = body
                        .strip_prefix('{')
                        .and_then(|b| b.strip_suffix('}'))
                        .ok_or_else(|| ReconstructError::Parse { line, msg: "expected `{...}`".into() })?;
                    let members = inner.split(',').filter(|m| !m.is_empty()).map(str::to_string).collect();
                    subs.insert(id.to_string(), (line, members));
                }
                ["map", a, b] => maps.push((line, a.to_string(), b.to_string())),
                _ => return Err(ReconstructError::Parse { line, msg: format!("unexpected `{}`", toks[0]) }),
            }
        }
        if let Some((side, line, _)) = inline {
            return Err(ReconstructError::Parse { line, msg: format!("unterminated `begin {side}`") });
        }
        let (Some(left), Some(right)) = (sides.remove("left"), sides.remove("right")) else {
            return Err(ReconstructError::Parse { line: 0, msg: "both lattices must be given".into() });
        };
        let left_bsub = left.boolean_subalgebras();
        let right_bsub = right.boolean_subalgebras();
        let resolve = |line: usize, id: &str, l: &Oml, b: &BsubPoset| -> Result<usize> {
            let (_, names) = subs
                .get(id)
                .ok_or_else(|| ReconstructError::Parse { line, msg: format!("unknown subalgebra `{id}`") })?;
            let members = names
                .iter()
                .map(|n| {
                    l.index_of(n).ok_or_else(|| ReconstructError::Parse { line, msg: format!("unknown element `{n}`") })
                })
                .collect::<Result<BTreeSet<usize>>>()?;
            b.position(&members)
                .ok_or_else(|| ReconstructError::Parse { line, msg: format!("`{id}` is not a Boolean subalgebra") })
        };
        let mut map = vec![usize::MAX; left_bsub.len()];
        for (line, a, b) in &maps {
            let ia = resolve(*line, a, &left, &left_bsub)?;
            let ib = resolve(*line, b, &right, &right_bsub)?;
            map[ia] = ib;
        }
        if let Some(i) = map.iter().position(|&m| m == usize::MAX) {
            return Err(ReconstructError::Parse {
                line: 0,
                msg: format!("subalgebra {} is unmapped", left_bsub.subalgebras[i].label(&left)),
            });
        }
        Self::with_posets(left, right, left_bsub, right_bsub, map)
    }
}

/// Parses either the lattice text format or the Greechie format.
pub fn parse_oml_any(text: &str) -> std::result::Result<Oml, OmlError> {
    let greechie = content_lines(text).any(|(_, t)| t[0] == "atoms" || t[0] == "block");
    if greechie {
        GreechieDiagram::parse(text)?.paste()
    } else {
        Oml::parse(text)
    }
}

/// A lattice isomorphism as an index map `left → right`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OmlIso {
    pub map: Vec<usize>,
}

impl OmlIso {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// `x->k(x)` pairs for the non-trivial elements.
    pub fn describe(&self, left: &Oml, right: &Oml) -> String {
        let parts: Vec<String> = (0..self.map.len())
            .filter(|&x| x != left.bottom() && x != left.top())
            .map(|x| format!("{}->{}", left.name(x), right.name(self.map[x])))
            .collect();
        parts.join(" ")
    }
}

pub fn has_4element_block(l: &Oml) -> bool {
    l.blocks().iter().any(|b| b.len() == 4)
}

/// Every lattice isomorphism `k` with `k[D] = j(D)` for all Boolean
/// subalgebras `D`, sorted by index map.
pub fn reconstruct_oml_isos(j: &BsubIso) -> Result<Vec<OmlIso>> {
    let (l, m) = (&j.left, &j.right);
    if l.len() != m.len() {
        return Err(ReconstructError::NoSolution);
    }
    let n = l.len();
    let mut k = vec![usize::MAX; n];
    k[l.bottom()] = m.bottom();
    k[l.top()] = m.top();

    // two admissible images per element
    let mut options: Vec<[usize; 2]> = vec![[usize::MAX; 2]; n];
    for x in 0..n {
        if x == l.bottom() || x == l.top() {
            continue;
        }
        let d: BTreeSet<usize> = [l.bottom(), x, l.ortho(x), l.top()].into_iter().collect();
        let di = j.left_bsub.position(&d).ok_or_else(|| {
            ReconstructError::InconsistentLevels(format!("{{0,{},{}',1}} missing", l.name(x), l.name(x)))
        })?;
        let img = &j.right_bsub.subalgebras[j.map.apply(di)];
        let rest: Vec<usize> = img.members.iter().copied().filter(|&y| y != m.bottom() && y != m.top()).collect();
        if rest.len() != 2 {
            return Err(ReconstructError::InconsistentLevels(format!(
                "{} maps to {}",
                j.left_bsub.subalgebras[di].label(l),
                img.label(m)
            )));
        }
        options[x] = [rest[0], rest[1]];
    }

    // subalgebras with more than four elements, per element
    let big: Vec<usize> = (0..j.left_bsub.len()).filter(|&i| j.left_bsub.subalgebras[i].len() > 4).collect();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &i in &big {
        for &x in &j.left_bsub.subalgebras[i].members {
            containing[x].push(i);
        }
    }

    // one variable per complementary pair, canonical representative first
    let mut reps: Vec<usize> =
        (0..n).filter(|&x| x != l.bottom() && x != l.top() && l.name(x) < l.name(l.ortho(x))).collect();
    let occurrences = |x: usize| j.left_bsub.subalgebras.iter().filter(|d| d.contains(x)).count();
    reps.sort_by(|&a, &b| occurrences(b).cmp(&occurrences(a)).then_with(|| l.name(a).cmp(l.name(b))));

    let ctx = SearchCtx { j, options: &options, containing: &containing };
    let mut used = vec![false; n];
    used[m.bottom()] = true;
    used[m.top()] = true;
    let mut found = Vec::new();
    ctx.search(&reps, 0, &mut k, &mut used, &mut found);
    found.sort();
    found.dedup();
    if found.is_empty() {
        return Err(ReconstructError::NoSolution);
    }
    Ok(found)
}

struct SearchCtx<'a> {
    j: &'a BsubIso,
    options: &'a [[usize; 2]],
    containing: &'a [Vec<usize>],
}

impl SearchCtx<'_> {
    fn search(&self, reps: &[usize], pos: usize, k: &mut Vec<usize>, used: &mut Vec<bool>, found: &mut Vec<OmlIso>) {
        let Some(&x) = reps.get(pos) else {
            if self.accepts(k) {
                found.push(OmlIso { map: k.clone() });
            }
            return;
        };
        if k[x] != usize::MAX {
            self.search(reps, pos + 1, k, used, found);
            return;
        }
        let mut opts = self.options[x];
        let m = &self.j.right;
        opts.sort_by(|&a, &b| m.name(a).cmp(m.name(b)));
        for y in opts {
            let (saved_k, saved_used) = (k.clone(), used.clone());
            if self.assign(x, y, k, used) {
                self.search(reps, pos + 1, k, used, found);
            }
            *k = saved_k;
            *used = saved_used;
        }
    }

    /// Sets `k(x) = y` (and the complement), then closes under joins inside
    /// the larger subalgebras. Returns false on a contradiction.
    fn assign(&self, x: usize, y: usize, k: &mut [usize], used: &mut [bool]) -> bool {
        let (l, m) = (&self.j.left, &self.j.right);
        let mut queue = VecDeque::new();
        if !self.set(x, y, k, used, &mut queue) {
            return false;
        }
        while let Some(a) = queue.pop_front() {
            for &d in &self.containing[a] {
                for &b in &self.j.left_bsub.subalgebras[d].members {
                    if k[b] == usize::MAX {
                        continue;
                    }
                    let z = l.join(a, b);
                    let expect = m.join(k[a], k[b]);
                    if k[z] == usize::MAX {
                        if !self.set(z, expect, k, used, &mut queue) {
                            return false;
                        }
                    } else if k[z] != expect {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn set(&self, x: usize, y: usize, k: &mut [usize], used: &mut [bool], queue: &mut VecDeque<usize>) -> bool {
        let (l, m) = (&self.j.left, &self.j.right);
        if !self.options[x].contains(&y) {
            return false;
        }
        let (xc, yc) = (l.ortho(x), m.ortho(y));
        if used[y] || used[yc] {
            return false;
        }
        k[x] = y;
        k[xc] = yc;
        used[y] = true;
        used[yc] = true;
        queue.push_back(x);
        queue.push_back(xc);
        true
    }

    fn accepts(&self, k: &[usize]) -> bool {
        let j = self.j;
        j.left.is_iso(&j.right, k)
            && j.left_bsub.subalgebras.iter().enumerate().all(|(i, d)| {
                let img: BTreeSet<usize> = d.members.iter().map(|&x| k[x]).collect();
                img == j.right_bsub.subalgebras[j.map.apply(i)].members
            })
    }
}

/// Reconstructs the lattice isomorphism and insists it is unique; both
/// lattices must be free of 4-element blocks.
pub fn certify_unique(j: &BsubIso) -> Result<OmlIso> {
    if has_4element_block(&j.left) {
        return Err(ReconstructError::HypothesisViolated("left lattice"));
    }
    if has_4element_block(&j.right) {
        return Err(ReconstructError::HypothesisViolated("right lattice"));
    }
    let mut sols = reconstruct_oml_isos(j)?;
    if sols.len() != 1 {
        return Err(ReconstructError::UniquenessFailed {
            count: sols.len(),
            witnesses: sols.iter().map(|k| k.describe(&j.left, &j.right)).collect(),
        });
    }
    Ok(sols.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut out);
        out
    }

    fn permute(perm: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        if i == perm.len() {
            out.push(perm.clone());
            return;
        }
        for s in i..perm.len() {
            perm.swap(i, s);
            permute(perm, i + 1, out);
            perm.swap(i, s);
        }
    }

    #[test]
    fn four_element_block_detection() {
        assert!(has_4element_block(&standard("mo", 2).unwrap()));
        assert!(!has_4element_block(&standard("horizontal_sum_b8", 2).unwrap()));
        assert!(!has_4element_block(&standard("boolean", 1).unwrap()));
    }

    #[test]
    fn mo2_identity_has_four_reconstructions() {
        let l = standard("mo", 2).unwrap();
        let j = BsubIso::identity(&l);
        let sols = reconstruct_oml_isos(&j).unwrap();
        assert_eq!(sols.len(), 4);
        // all 6! bijections, filtered by the defining condition
        let bsub = l.boolean_subalgebras();
        let brute: Vec<Vec<usize>> = all_permutations(6)
            .into_iter()
            .filter(|k| {
                l.is_iso(&l, k)
                    && bsub.subalgebras.iter().all(|d| {
                        let img: BTreeSet<usize> = d.members.iter().map(|&x| k[x]).collect();
                        img == d.members
                    })
            })
            .collect();
        let ours: Vec<Vec<usize>> = sols.into_iter().map(|k| k.map).collect();
        assert_eq!(ours, brute);
    }

    #[test]
    fn rigid_cases() {
        for l in [standard("horizontal_sum_b8", 2).unwrap(), standard("boolean", 3).unwrap()] {
            let sols = reconstruct_oml_isos(&BsubIso::identity(&l)).unwrap();
            assert_eq!(sols.len(), 1);
            assert!(sols[0].is_identity());
        }
    }

    #[test]
    fn certify() {
        for l in [standard("horizontal_sum_b8", 2).unwrap(), standard("boolean", 4).unwrap()] {
            assert!(certify_unique(&BsubIso::identity(&l)).unwrap().is_identity());
        }
        let mo3 = standard("mo", 3).unwrap();
        assert_eq!(certify_unique(&BsubIso::identity(&mo3)), Err(ReconstructError::HypothesisViolated("left lattice")));
    }

    #[test]
    fn every_bsub_automorphism_is_induced_without_small_blocks() {
        let l = standard("horizontal_sum_b8", 2).unwrap();
        let bsub = l.boolean_subalgebras();
        let isos = crate::poset::enumerate_order_isos(&bsub.poset, &bsub.poset);
        let mut induced = 0;
        for iso in &isos {
            let j = BsubIso::with_posets(l.clone(), l.clone(), bsub.clone(), bsub.clone(), iso.map().to_vec()).unwrap();
            match reconstruct_oml_isos(&j) {
                Ok(s) => {
                    assert_eq!(s.len(), 1);
                    induced += 1;
                }
                Err(e) => assert_eq!(e, ReconstructError::NoSolution),
            }
        }
        // S3 wr S2
        assert_eq!(induced, 72);
        assert_eq!(isos.len(), 72);
    }

    #[test]
    fn exchange_format_round_trip() {
        let l = standard("mo", 2).unwrap();
        let j = BsubIso::identity(&l);
        let text = j.to_text();
        assert_eq!(BsubIso::parse(&text, None).unwrap(), j);
        let short = "left standard mo 2\nright standard mo 2\nsub A = {0,1}\nsub B = {0,1}\nmap A B\n";
        assert!(matches!(BsubIso::parse(short, None), Err(ReconstructError::Parse { .. })));
    }
}
