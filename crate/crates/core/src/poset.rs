//! Finite posets, order-isomorphisms, ideals, and the extension of an
//! isomorphism between generating subposets to the whole poset.
//!
//! Elements carry string names; internally everything is index based and the
//! order is stored as a full relation matrix after reflexive-transitive
//! closure. Joins are least upper bounds and may fail to exist, since the
//! posets of interest (Boolean-subalgebra posets) are not lattices in general.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order relation has a cycle: `{0}` <= `{1}` <= `{0}`")]
    Cycle(String, String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not an order-isomorphism: {0}")]
    NotIso(String),
    #[error("`{0}` is not the join of an ideal of the generating subposet")]
    NotGenerated(String),
    #[error("join of {0} does not exist")]
    JoinMissing(String),
    #[error("extension is not unique: a second extension differs at `{0}`")]
    NotUnique(String),
}

pub type Result<T> = std::result::Result<T, PosetError>;

/// A finite partial order on named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds a poset from elements and generating `x <= y` pairs, closing the
    /// relation reflexively and transitively and rejecting cycles.
    pub fn new<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let mut names = Vec::with_capacity(elements.len());
        let mut index = BTreeMap::new();
        for e in elements {
            let e = e.as_ref().to_string();
            if index.insert(e.clone(), names.len()).is_some() {
                return Err(PosetError::DuplicateElement(e));
            }
            names.push(e);
        }
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            let ia = *index.get(a.as_ref()).ok_or_else(|| PosetError::UnknownElement(a.as_ref().to_string()))?;
            let ib = *index.get(b.as_ref()).ok_or_else(|| PosetError::UnknownElement(b.as_ref().to_string()))?;
            leq[ia][ib] = true;
        }
        Self::from_relation(names, leq)
    }

    /// Builds a poset from a (not necessarily closed) relation matrix.
    pub fn from_relation(names: Vec<String>, mut leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(PosetError::DuplicateElement(name.clone()));
            }
        }
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i][j] && leq[j][i] {
                    return Err(PosetError::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }
        Ok(Poset { names, index, leq })
    }

    pub fn empty() -> Self {
        Poset { names: Vec::new(), index: BTreeMap::new(), leq: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq[y][x]).collect()
    }

    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq[x][y]).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !(0..self.len()).any(|y| self.lt(y, x))).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !(0..self.len()).any(|y| self.lt(x, y))).collect()
    }

    /// Least upper bound of an arbitrary subset; the empty subset's join is
    /// the least element when there is one.
    pub fn join_of(&self, set: &[usize]) -> Option<usize> {
        let uppers: Vec<usize> = (0..self.len()).filter(|&u| set.iter().all(|&s| self.leq[s][u])).collect();
        uppers.iter().copied().find(|&u| uppers.iter().all(|&v| self.leq[u][v]))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join_of(&[a, b])
    }

    pub fn meet_of(&self, set: &[usize]) -> Option<usize> {
        let lowers: Vec<usize> = (0..self.len()).filter(|&l| set.iter().all(|&s| self.leq[l][s])).collect();
        lowers.iter().copied().find(|&l| lowers.iter().all(|&v| self.leq[v][l]))
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet_of(&[a, b])
    }

    /// The Hasse diagram: pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The subposet on `subset`, keeping names and the inherited order.
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let names = subset.iter().map(|&i| self.names[i].clone()).collect();
        let leq = subset.iter().map(|&i| subset.iter().map(|&j| self.leq[i][j]).collect()).collect();
        Poset::from_relation(names, leq).expect("induced subposet of a valid poset")
    }

    /// Elements with a finite principal downset. Every element of a finite
    /// poset qualifies; the operation exists so that callers mirroring a
    /// restriction to "finite" members can perform it explicitly.
    pub fn finite_part(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    /// `(downset size, upset size, lower covers, upper covers)` per element.
    fn signatures(&self) -> Vec<(usize, usize, usize, usize)> {
        let covers = self.covers();
        (0..self.len())
            .map(|x| {
                let lower = covers.iter().filter(|c| c.1 == x).count();
                let upper = covers.iter().filter(|c| c.0 == x).count();
                (self.down_set(x).len(), self.up_set(x).len(), lower, upper)
            })
            .collect()
    }

    /// All ideals: downsets in which any two members have a join that is
    /// again a member. The empty set is included.
    pub fn ideals(&self) -> Vec<Ideal> {
        let n = self.len();
        // process elements so that everything below x comes before x
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (self.down_set(x).len(), x));
        let mut out = Vec::new();
        let mut chosen = vec![false; n];
        self.downsets_rec(&order, 0, &mut chosen, &mut out);
        let mut ideals: Vec<Ideal> =
            out.into_iter().filter(|set| Ideal::is_ideal(self, set)).map(|members| Ideal { members }).collect();
        ideals.sort();
        ideals
    }

    fn downsets_rec(&self, order: &[usize], pos: usize, chosen: &mut Vec<bool>, out: &mut Vec<BTreeSet<usize>>) {
        if pos == order.len() {
            out.push((0..self.len()).filter(|&i| chosen[i]).collect());
            return;
        }
        let x = order[pos];
        self.downsets_rec(order, pos + 1, chosen, out);
        if (0..self.len()).all(|y| !self.lt(y, x) || chosen[y]) {
            chosen[x] = true;
            self.downsets_rec(order, pos + 1, chosen, out);
            chosen[x] = false;
        }
    }

    /// Line-oriented text form: one `elements` line then one `le x y` line
    /// per cover pair.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        write_poset_body(self, &mut s);
        s
    }

    /// Graphviz rendering of the Hasse diagram with nodes in index order.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{graph_name}\" {{");
        let _ = writeln!(s, "  rankdir=BT;");
        for (i, name) in self.names.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", name.replace('"', "\\\""));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn write_poset_body(p: &Poset, s: &mut String) {
    s.push_str("elements");
    for name in &p.names {
        s.push(' ');
        s.push_str(name);
    }
    s.push('\n');
    for (a, b) in p.covers() {
        let _ = writeln!(s, "le {} {}", p.names[a], p.names[b]);
    }
}

/// Tokenized non-empty, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

/// Parses the poset text format (`elements ...`, `le x y`, `#` comments).
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut elements: Vec<String> = Vec::new();
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (line, toks) in content_lines(text) {
        match toks[0] {
            "elements" => elements.extend(toks[1..].iter().map(|t| t.to_string())),
            "le" if toks.len() == 3 => pairs.push((toks[1].to_string(), toks[2].to_string())),
            other => return Err(PosetError::Parse { line, msg: format!("unexpected `{other}` line") }),
        }
    }
    Poset::new(&elements, &pairs)
}

/// A downset closed under the joins of its pairs. Members are indices into
/// the poset the ideal was computed from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ideal {
    pub members: BTreeSet<usize>,
}

impl Ideal {
    pub fn new(parent: &Poset, members: BTreeSet<usize>) -> Option<Self> {
        Self::is_ideal(parent, &members).then_some(Ideal { members })
    }

    pub fn is_ideal(parent: &Poset, members: &BTreeSet<usize>) -> bool {
        let down_closed = members.iter().all(|&x| (0..parent.len()).all(|y| !parent.leq(y, x) || members.contains(&y)));
        down_closed
            && members
                .iter()
                .all(|&a| members.iter().all(|&b| matches!(parent.join(a, b), Some(j) if members.contains(&j))))
    }

    /// The principal-downset trace `x↓ ∩ sub`, as a set of parent indices.
    pub fn principal_trace(parent: &Poset, x: usize, sub: &[usize]) -> BTreeSet<usize> {
        sub.iter().copied().filter(|&z| parent.leq(z, x)).collect()
    }
}

/// An order-isomorphism between two posets, stored as an index map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderIso {
    pub source: Poset,
    pub target: Poset,
    map: Vec<usize>,
}

impl OrderIso {
    pub fn new(source: Poset, target: Poset, map: Vec<usize>) -> Result<Self> {
        check_iso(&source, &target, &map)?;
        Ok(OrderIso { source, target, map })
    }

    /// Builds the isomorphism from name pairs `(source name, target name)`.
    pub fn from_names<S: AsRef<str>>(source: Poset, target: Poset, pairs: &[(S, S)]) -> Result<Self> {
        let mut map = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            let ia = source.index_of(a.as_ref()).ok_or_else(|| PosetError::UnknownElement(a.as_ref().to_string()))?;
            let ib = target.index_of(b.as_ref()).ok_or_else(|| PosetError::UnknownElement(b.as_ref().to_string()))?;
            map[ia] = ib;
        }
        if let Some(i) = map.iter().position(|&m| m == usize::MAX) {
            return Err(PosetError::NotIso(format!("`{}` is unmapped", source.name(i))));
        }
        Self::new(source, target, map)
    }

    pub fn identity(p: &Poset) -> Self {
        OrderIso { source: p.clone(), target: p.clone(), map: (0..p.len()).collect() }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn apply_name(&self, name: &str) -> Option<&str> {
        self.source.index_of(name).map(|i| self.target.name(self.map[i]))
    }

    pub fn inverse(&self) -> OrderIso {
        let mut inv = vec![0; self.map.len()];
        for (i, &m) in self.map.iter().enumerate() {
            inv[m] = i;
        }
        OrderIso { source: self.target.clone(), target: self.source.clone(), map: inv }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &OrderIso) -> Result<OrderIso> {
        if other.source != self.target {
            return Err(PosetError::NotIso("composition across different posets".into()));
        }
        let map = self.map.iter().map(|&m| other.map[m]).collect();
        Ok(OrderIso { source: self.source.clone(), target: other.target.clone(), map })
    }

    pub fn image_ideal(&self, ideal: &Ideal) -> Ideal {
        Ideal { members: ideal.members.iter().map(|&m| self.map[m]).collect() }
    }
}

fn check_iso(p: &Poset, q: &Poset, map: &[usize]) -> Result<()> {
    if p.len() != q.len() || map.len() != p.len() {
        return Err(PosetError::NotIso(format!("sizes differ ({} vs {}, map {})", p.len(), q.len(), map.len())));
    }
    let mut seen = vec![false; q.len()];
    for &m in map {
        if m >= q.len() || std::mem::replace(&mut seen[m], true) {
            return Err(PosetError::NotIso("map is not a bijection".into()));
        }
    }
    for a in 0..p.len() {
        for b in 0..p.len() {
            if p.leq(a, b) != q.leq(map[a], map[b]) {
                return Err(PosetError::NotIso(format!(
                    "order between `{}` and `{}` is not preserved",
                    p.name(a),
                    p.name(b)
                )));
            }
        }
    }
    Ok(())
}

/// Every order-isomorphism `p → q`, sorted by index map.
pub fn enumerate_order_isos(p: &Poset, q: &Poset) -> Vec<OrderIso> {
    enumerate_order_isos_extending(p, q, &[])
}

/// Every order-isomorphism `p → q` agreeing with the fixed `(x, y)` pairs.
pub fn enumerate_order_isos_extending(p: &Poset, q: &Poset, fixed: &[(usize, usize)]) -> Vec<OrderIso> {
    if p.len() != q.len() {
        return Vec::new();
    }
    let sig_p = p.signatures();
    let sig_q = q.signatures();
    let mut sp = sig_p.clone();
    let mut sq = sig_q.clone();
    sp.sort();
    sq.sort();
    if sp != sq {
        return Vec::new();
    }
    let n = p.len();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(x, y) in fixed {
        if sig_p[x] != sig_q[y] || used[y] || (assign[x] != usize::MAX && assign[x] != y) {
            return Vec::new();
        }
        assign[x] = y;
        used[y] = true;
    }
    // bottom-up order keeps comparabilities with earlier choices dense
    let mut order: Vec<usize> = (0..n).filter(|&x| assign[x] == usize::MAX).collect();
    order.sort_by_key(|&x| (sig_p[x].0, std::cmp::Reverse(sig_p[x].1), x));
    let candidates: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| sig_q[y] == sig_p[x]).collect()).collect();
    let mut found = Vec::new();
    iso_search(p, q, &order, 0, &candidates, &mut assign, &mut used, &mut found);
    found.sort();
    found.into_iter().map(|map| OrderIso { source: p.clone(), target: q.clone(), map }).collect()
}

#[allow(clippy::too_many_arguments)]
fn iso_search(
    p: &Poset,
    q: &Poset,
    order: &[usize],
    pos: usize,
    candidates: &[Vec<usize>],
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
) {
    if pos == order.len() {
        if check_iso(p, q, assign).is_ok() {
            found.push(assign.clone());
        }
        return;
    }
    let x = order[pos];
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = (0..p.len()).all(|u| {
            let mu = assign[u];
            mu == usize::MAX || (p.leq(u, x) == q.leq(mu, y) && p.leq(x, u) == q.leq(y, mu))
        });
        if !consistent {
            continue;
        }
        assign[x] = y;
        used[y] = true;
        iso_search(p, q, order, pos + 1, candidates, assign, used, found);
        assign[x] = usize::MAX;
        used[y] = false;
    }
}

/// Extends an isomorphism between generating subposets to all of `p → q`.
///
/// `mu.source` and `mu.target` must be subposets of `p` and `q` (matched by
/// element name). Each `x` of `p` must be the join of `x↓ ∩ F_P`; its image is
/// the join in `q` of the `mu`-image of that ideal. The result is checked to
/// be an order-isomorphism restricting to `mu`, and to be the only such one.
pub fn extend_iso_via_ideals(mu: &OrderIso, p: &Poset, q: &Poset) -> Result<OrderIso> {
    let f_p = resolve_subposet(&mu.source, p)?;
    let f_q = resolve_subposet(&mu.target, q)?;
    for (sq, tq) in [(&f_p, p), (&f_q, q)] {
        for x in 0..tq.len() {
            let trace: Vec<usize> = Ideal::principal_trace(tq, x, sq).into_iter().collect();
            if tq.join_of(&trace) != Some(x) {
                return Err(PosetError::NotGenerated(tq.name(x).to_string()));
            }
        }
    }
    let mut map = Vec::with_capacity(p.len());
    for x in 0..p.len() {
        // positions in mu.source are positions in f_p
        let image: Vec<usize> =
            f_p.iter().enumerate().filter(|&(_, &z)| p.leq(z, x)).map(|(pos, _)| f_q[mu.map[pos]]).collect();
        let j = q.join_of(&image).ok_or_else(|| {
            let names: Vec<&str> = image.iter().map(|&i| q.name(i)).collect();
            PosetError::JoinMissing(format!("{{{}}}", names.join(",")))
        })?;
        map.push(j);
    }
    let ext = OrderIso::new(p.clone(), q.clone(), map)?;
    for (pos, &z) in f_p.iter().enumerate() {
        if ext.map[z] != f_q[mu.map[pos]] {
            return Err(PosetError::NotIso(format!("extension moves `{}`", p.name(z))));
        }
    }
    let fixed: Vec<(usize, usize)> = f_p.iter().enumerate().map(|(pos, &z)| (z, f_q[mu.map[pos]])).collect();
    for other in enumerate_order_isos_extending(p, q, &fixed) {
        if let Some(x) = (0..p.len()).find(|&x| other.map[x] != ext.map[x]) {
            return Err(PosetError::NotUnique(p.name(x).to_string()));
        }
    }
    Ok(ext)
}

/// Indices in `whole` of the elements of `sub`, checking the order agrees.
fn resolve_subposet(sub: &Poset, whole: &Poset) -> Result<Vec<usize>> {
    let idx = sub
        .names()
        .iter()
        .map(|n| whole.index_of(n).ok_or_else(|| PosetError::UnknownElement(n.clone())))
        .collect::<Result<Vec<usize>>>()?;
    for a in 0..sub.len() {
        for b in 0..sub.len() {
            if sub.leq(a, b) != whole.leq(idx[a], idx[b]) {
                return Err(PosetError::NotIso(format!(
                    "subposet order differs at `{}`, `{}`",
                    sub.name(a),
                    sub.name(b)
                )));
            }
        }
    }
    Ok(idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let pairs: Vec<(String, String)> = (1..n).map(|i| (names[i - 1].clone(), names[i].clone())).collect();
        Poset::new(&names, &pairs).unwrap()
    }

    fn antichain(n: usize) -> Poset {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        Poset::new::<String>(&names, &[]).unwrap()
    }

    #[test]
    fn singleton_and_transitivity() {
        let p = Poset::new(&["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        let c = Poset::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(c.leq(0, 2));
        assert!(!c.leq(2, 0));
    }

    #[test]
    fn rejects_cycles_and_duplicates() {
        assert!(matches!(Poset::new(&["a", "b"], &[("a", "b"), ("b", "a")]), Err(PosetError::Cycle(..))));
        assert_eq!(Poset::new::<&str>(&["a", "a"], &[]), Err(PosetError::DuplicateElement("a".into())));
        assert!(matches!(Poset::new(&["a"], &[("a", "z")]), Err(PosetError::UnknownElement(_))));
    }

    #[test]
    fn finite_part_is_everything() {
        assert_eq!(chain(3).finite_part(), vec![0, 1, 2]);
        assert!(Poset::empty().finite_part().is_empty());
    }

    #[test]
    fn iso_counts() {
        assert_eq!(enumerate_order_isos(&chain(2), &chain(2)).len(), 1);
        assert_eq!(enumerate_order_isos(&antichain(2), &antichain(2)).len(), 2);
        assert!(enumerate_order_isos(&chain(2), &antichain(2)).is_empty());
        // bottom below two incomparable tops
        let v = Poset::new(&["t", "a", "b"], &[("t", "a"), ("t", "b")]).unwrap();
        assert_eq!(enumerate_order_isos(&v, &v).len(), 2);
    }

    #[test]
    fn ideals_of_small_posets() {
        let sets = |p: &Poset| -> Vec<Vec<usize>> {
            p.ideals().into_iter().map(|i| i.members.into_iter().collect()).collect()
        };
        assert_eq!(sets(&chain(2)), vec![vec![], vec![0], vec![0, 1]]);
        assert_eq!(sets(&antichain(2)), vec![vec![], vec![0], vec![1]]);
        assert_eq!(chain(3).ideals().len(), 4);
    }

    #[test]
    fn extension_identity_on_full_subposet() {
        let p = chain(3);
        let mu = OrderIso::identity(&p);
        let ext = extend_iso_via_ideals(&mu, &p, &p).unwrap();
        assert_eq!(ext.map(), &[0, 1, 2]);
    }

    #[test]
    fn extension_not_generated() {
        let p = Poset::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let sub = p.induced(&[0, 2]);
        let mu = OrderIso::identity(&sub);
        assert_eq!(extend_iso_via_ideals(&mu, &p, &p), Err(PosetError::NotGenerated("b".into())));
    }

    #[test]
    fn extension_from_proper_generating_subposet() {
        // a, b below their join j; generated by {a, b} together with an
        // explicit bottom
        let p = Poset::new(&["z", "a", "b", "j"], &[("z", "a"), ("z", "b"), ("a", "j"), ("b", "j")]).unwrap();
        let sub = p.induced(&[0, 1, 2]);
        let swap = OrderIso::from_names(sub.clone(), sub, &[("z", "z"), ("a", "b"), ("b", "a")]).unwrap();
        let ext = extend_iso_via_ideals(&swap, &p, &p).unwrap();
        assert_eq!(ext.map(), &[0, 2, 1, 3]);
    }

    #[test]
    fn text_round_trip() {
        let p = Poset::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        assert_eq!(parse_poset(&p.to_text()).unwrap(), p);
        let parsed = parse_poset("# header\nelements a b\nle a b # tail\n").unwrap();
        assert!(parsed.leq(0, 1));
        assert!(matches!(parse_poset("elements a\nfoo\n"), Err(PosetError::Parse { line: 2, .. })));
    }

    #[test]
    fn dot_is_sorted_hasse() {
        let dot = chain(3).to_dot("c");
        assert!(dot.contains("n0 -> n1;"));
        assert!(!dot.contains("n0 -> n2;"));
    }
}
