//! Brute-force oracles shared by the integration tests. None of these call
//! into the search code they are compared against.

#![allow(dead_code)]

use std::collections::BTreeSet;

use absub::matalg::{AlgElement, FinDimAlgebra, GaussScalar, PartitionOfUnity};
use absub::oml::Oml;

/// Restricted growth strings of length `n`: `rgs[i]` is the block of `i`.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max + usize::from(!prefix.is_empty()) {
            if prefix.is_empty() && b > 0 {
                break;
            }
            prefix.push(b);
            go(prefix, n, max.max(b), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        go(&mut Vec::new(), n, 0, &mut out);
    }
    out
}

/// Number of set partitions of an `n`-element set, by enumeration.
pub fn bell(n: usize) -> usize {
    restricted_growth_strings(n).len()
}

/// `fine` refines `coarse` when elements sharing a block of `fine` share one
/// in `coarse`.
pub fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    (0..fine.len()).all(|i| (0..fine.len()).all(|j| fine[i] != fine[j] || coarse[i] == coarse[j]))
}

/// Order and orthocomplement preserved in both directions.
pub fn is_lattice_iso(a: &Oml, b: &Oml, k: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n || k.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in k {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..n).all(|x| k[a.ortho(x)] == b.ortho(k[x]) && (0..n).all(|y| a.leq(x, y) == b.leq(k[x], k[y])))
}

/// All lattice isomorphisms `a → b`, by backtracking over partial bijections
/// with the order and complement checked at each step.
pub fn lattice_isos_backtracking(a: &Oml, b: &Oml) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut out = Vec::new();
    if b.len() != n {
        return out;
    }
    fn go(a: &Oml, b: &Oml, k: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let x = k.len();
        if x == a.len() {
            if is_lattice_iso(a, b, k) {
                out.push(k.clone());
            }
            return;
        }
        for y in 0..a.len() {
            if used[y] {
                continue;
            }
            let ok = (0..x).all(|z| a.leq(x, z) == b.leq(y, k[z]) && a.leq(z, x) == b.leq(k[z], y))
                && (a.ortho(x) >= x || k[a.ortho(x)] == b.ortho(y));
            if ok {
                k.push(y);
                used[y] = true;
                go(a, b, k, used, out);
                used[y] = false;
                k.pop();
            }
        }
    }
    go(a, b, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Boolean subalgebras of `l`: subsets closed under complement, meet and
/// join whose elements pairwise commute. Enumerates unions of `{x, x'}`
/// pairs, so it is only meant for small lattices.
pub fn boolean_subalgebras(l: &Oml) -> Vec<BTreeSet<usize>> {
    let pairs: Vec<(usize, usize)> =
        (0..l.len()).filter(|&x| x < l.ortho(x) && x != l.bottom()).map(|x| (x, l.ortho(x))).collect();
    assert!(pairs.len() < 20, "lattice too large for subset enumeration");
    let commute = |x: usize, y: usize| x == l.join(l.meet(x, y), l.meet(x, l.ortho(y)));
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut s: BTreeSet<usize> = [l.bottom(), l.top()].into();
        for (i, &(x, y)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(x);
                s.insert(y);
            }
        }
        let closed = s
            .iter()
            .all(|&x| s.iter().all(|&y| s.contains(&l.meet(x, y)) && s.contains(&l.join(x, y)) && commute(x, y)));
        if closed {
            out.push(s);
        }
    }
    out
}

/// `k` maps every member of `subs` onto itself.
pub fn fixes_all(k: &[usize], subs: &[BTreeSet<usize>]) -> bool {
    subs.iter().all(|s| &s.iter().map(|&x| k[x]).collect::<BTreeSet<_>>() == s)
}

/// All sums of subsets of the atoms, the empty sum included.
pub fn subset_sums(p: &PartitionOfUnity) -> BTreeSet<AlgElement> {
    let atoms = p.atoms();
    let alg = p.algebra();
    (0u32..1 << atoms.len())
        .map(|mask| {
            atoms.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(alg.zero(), |acc, (_, a)| &acc + a)
        })
        .collect()
}

/// `(ab + ba)/2` computed entry by entry.
pub fn jordan_entrywise(a: &AlgElement, b: &AlgElement) -> AlgElement {
    let half = GaussScalar::ratio(1, 2);
    a.map_blocks(|s, x| {
        let y = b.block(s);
        let n = x.size();
        let mut out = x.clone();
        for i in 0..n {
            for j in 0..n {
                let mut acc = GaussScalar::zero();
                for t in 0..n {
                    acc = &acc + &(&(x.get(i, t) * y.get(t, j)) + &(y.get(i, t) * x.get(t, j)));
                }
                out.set(i, j, &acc * &half);
            }
        }
        out
    })
}

/// `Σ (tr(p x) / tr(p)) p` over the atoms. Fixes exactly the elements of the
/// atom span.
pub fn compress_to_atoms(alg: &FinDimAlgebra, atoms: &[AlgElement], x: &AlgElement) -> AlgElement {
    let trace = |y: &AlgElement| y.blocks().iter().fold(GaussScalar::zero(), |acc, b| &acc + &b.trace());
    atoms.iter().fold(alg.zero(), |acc, p| {
        let c = &trace(&(p * x)) * &trace(p).inv().expect("nonzero atom");
        &acc + &p.scale(&c)
    })
}
