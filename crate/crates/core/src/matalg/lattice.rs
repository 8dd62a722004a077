//! The lattice of projections generated by a finite set, with exact meets
//! computed as range intersections.

use std::collections::BTreeSet;

use super::algebra::{AlgElement, Matrix};
use super::linear::{invert, nullspace};
use super::scalar::GaussScalar;
use super::{MatalgError, Result};
use crate::oml::Oml;
use crate::poset::Poset;

/// Orthogonal projection onto the span of `vectors` in `C^n`.
fn range_projection(n: usize, vectors: &[Vec<GaussScalar>]) -> Matrix {
    let k = vectors.len();
    if k == 0 {
        return Matrix::zeros(n);
    }
    let gram: Vec<Vec<GaussScalar>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| (0..n).fold(GaussScalar::zero(), |acc, i| acc + &(vectors[a][i].conj() * &vectors[b][i])))
                .collect()
        })
        .collect();
    let g = invert(&gram).expect("independent vectors have an invertible Gram matrix");
    let mut p = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut s = GaussScalar::zero();
            for (a, row) in g.iter().enumerate() {
                for (b, gab) in row.iter().enumerate() {
                    if !gab.is_zero() {
                        s = s + &(&(&vectors[a][i] * gab) * &vectors[b][j].conj());
                    }
                }
            }
            p.set(i, j, s);
        }
    }
    p
}

/// `p ∧ q`: the projection onto `ran p ∩ ran q`.
pub fn projection_meet(p: &AlgElement, q: &AlgElement) -> Result<AlgElement> {
    if !p.same_parent(q) {
        return Err(MatalgError::ParentMismatch);
    }
    Ok(p.map_blocks(|s, pb| {
        let n = pb.size();
        let id = Matrix::identity(n);
        let cp = &id - pb;
        let cq = &id - q.block(s);
        let eqs: Vec<Vec<GaussScalar>> = (0..n)
            .flat_map(|i| {
                [(0..n).map(|j| cp.get(i, j).clone()).collect(), (0..n).map(|j| cq.get(i, j).clone()).collect()]
            })
            .collect();
        range_projection(n, &nullspace(&eqs, n))
    }))
}

/// `p ∨ q = (p⊥ ∧ q⊥)⊥`.
pub fn projection_join(p: &AlgElement, q: &AlgElement) -> Result<AlgElement> {
    let one = p.algebra().identity();
    let m = projection_meet(&(&one - p), &(&one - q))?;
    Ok(&one - &m)
}

/// Closes `generators ∪ {0, 1}` under complements, meets and joins. Fails
/// once more than `max_size` projections appear.
pub fn generated_projection_lattice(generators: &[AlgElement], max_size: usize) -> Result<Vec<AlgElement>> {
    let first = generators.first().ok_or(MatalgError::ParentMismatch)?;
    let alg = first.algebra();
    let one = alg.identity();
    let mut set: BTreeSet<AlgElement> = BTreeSet::new();
    set.insert(alg.zero());
    set.insert(one.clone());
    for g in generators {
        if !alg.contains(g) {
            return Err(MatalgError::ParentMismatch);
        }
        if !g.is_projection() {
            return Err(MatalgError::NotProjection(g.to_string()));
        }
        set.insert(g.clone());
        set.insert(&one - g);
    }
    if set.len() > max_size {
        return Err(MatalgError::LatticeTooLarge(max_size));
    }
    let mut list: Vec<AlgElement> = set.iter().cloned().collect();
    let mut done = 0;
    while done < list.len() {
        let x = list[done].clone();
        for yi in 0..=done {
            let y = list[yi].clone();
            let m = projection_meet(&x, &y)?;
            let c = &one - &m;
            let j = projection_join(&x, &y)?;
            let cj = &one - &j;
            for z in [m, c, j, cj] {
                if set.insert(z.clone()) {
                    list.push(z);
                    if list.len() > max_size {
                        return Err(MatalgError::LatticeTooLarge(max_size));
                    }
                }
            }
        }
        done += 1;
    }
    Ok(set.into_iter().collect())
}

/// A closed set of projections as an orthomodular lattice. Elements are named
/// `0`, `1`, and `p{i}` by their position in `projs`.
pub fn projection_oml(projs: &[AlgElement]) -> Result<Oml> {
    let names: Vec<String> = projs
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if p.is_zero() {
                "0".to_string()
            } else if *p == p.algebra().identity() {
                "1".to_string()
            } else {
                format!("p{i}")
            }
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, p) in projs.iter().enumerate() {
        for (j, q) in projs.iter().enumerate() {
            if i != j && &(p * q) == p {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    let order = Poset::new(&names, &pairs).map_err(crate::oml::OmlError::from)?;
    let mut ortho = Vec::with_capacity(projs.len());
    for p in projs {
        let c = &p.algebra().identity() - p;
        let k = projs.iter().position(|x| *x == c).ok_or(MatalgError::NotComplementClosed)?;
        ortho.push(k);
    }
    Ok(Oml::verify(order, ortho)?)
}
