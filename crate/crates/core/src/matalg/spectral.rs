//! Spectral forms of self-adjoint elements with rational spectrum.
//!
//! No numerical eigensolver is used: characteristic polynomials are computed
//! exactly, their roots are found among rational candidates, and the spectral
//! projections are Lagrange interpolation polynomials in the element.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::algebra::{AlgElement, FinDimAlgebra, Matrix};
use super::partition::PartitionOfUnity;
use super::scalar::GaussScalar;
use super::{MatalgError, Result};

/// `Σ λᵢ pᵢ` with distinct real rational `λᵢ` over a partition of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralElement {
    pairs: Vec<(BigRational, AlgElement)>,
    partition: PartitionOfUnity,
}

impl SpectralElement {
    pub fn new(algebra: &FinDimAlgebra, mut pairs: Vec<(BigRational, AlgElement)>) -> Result<Self> {
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(MatalgError::RepeatedEigenvalue);
        }
        let partition = PartitionOfUnity::new(algebra, pairs.iter().map(|(_, p)| p.clone()).collect())?;
        Ok(SpectralElement { pairs, partition })
    }

    /// Eigenvalues `1, 2, …, k` attached to the atoms of `p` in canonical
    /// order; a convenient generic element of the subalgebra.
    pub fn labelled(p: &PartitionOfUnity) -> Self {
        let pairs = p
            .atoms()
            .iter()
            .enumerate()
            .map(|(i, a)| (BigRational::from_integer(BigInt::from(i as i64 + 1)), a.clone()))
            .collect();
        SpectralElement { pairs, partition: p.clone() }
    }

    pub fn pairs(&self) -> &[(BigRational, AlgElement)] {
        &self.pairs
    }

    pub fn partition(&self) -> &PartitionOfUnity {
        &self.partition
    }

    pub fn value(&self) -> AlgElement {
        let alg = self.partition.algebra();
        self.pairs.iter().fold(alg.zero(), |acc, (l, p)| &acc + &p.scale(&GaussScalar::real(l.clone())))
    }
}

/// Characteristic polynomial `det(x·1 − m)`, coefficients from the constant
/// term up (Faddeev–LeVerrier).
pub fn char_poly(m: &Matrix) -> Vec<GaussScalar> {
    let n = m.size();
    let mut c = vec![GaussScalar::zero(); n + 1];
    c[n] = GaussScalar::one();
    let mut acc = Matrix::zeros(n);
    let id = Matrix::identity(n);
    for k in 1..=n {
        acc = &(m * &acc) + &id.scale(&c[n - k + 1]);
        let t = (m * &acc).trace();
        c[n - k] = -(t / GaussScalar::int(k as i64));
    }
    c
}

fn eval(poly: &[BigRational], x: &BigRational) -> BigRational {
    poly.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Divides by `(x − r)`; `r` must be a root.
fn deflate(poly: &[BigRational], r: &BigRational) -> Vec<BigRational> {
    let n = poly.len() - 1;
    let mut q = vec![BigRational::zero(); n];
    let mut carry = BigRational::zero();
    for i in (0..n).rev() {
        carry = &poly[i + 1] + &carry * r;
        q[i] = carry.clone();
    }
    q
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u128()?;
    if n > 1u128 << 80 {
        return None;
    }
    let mut out = Vec::new();
    let mut d: u128 = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots with multiplicity of a polynomial given low-to-high.
pub fn rational_roots(poly: &[BigRational]) -> Result<Vec<(BigRational, usize)>> {
    let mut p: Vec<BigRational> = poly.to_vec();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut roots: Vec<(BigRational, usize)> = Vec::new();
    let mut zero_mult = 0;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((BigRational::zero(), zero_mult));
    }
    if p.len() <= 1 {
        return Ok(roots);
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let nums = divisors(&ints[0]).ok_or(MatalgError::NonRationalSpectrum)?;
    let dens = divisors(ints.last().unwrap()).ok_or(MatalgError::NonRationalSpectrum)?;
    let mut candidates: Vec<BigRational> = Vec::new();
    for a in &nums {
        for b in &dens {
            let r = BigRational::new(a.clone(), b.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        let mut mult = 0;
        while p.len() > 1 && eval(&p, &r).is_zero() {
            p = deflate(&p, &r);
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort();
    Ok(roots)
}

/// Spectral form of a self-adjoint element whose eigenvalues are rational.
pub fn spectral_decompose(a: &AlgElement) -> Result<SpectralElement> {
    if !a.is_self_adjoint() {
        return Err(MatalgError::NotSelfAdjoint);
    }
    let alg = a.algebra();
    let mut eigen: Vec<BigRational> = Vec::new();
    for block in a.blocks() {
        let poly = char_poly(block);
        if !poly.iter().all(GaussScalar::is_real) {
            return Err(MatalgError::NotSelfAdjoint);
        }
        let real: Vec<BigRational> = poly.iter().map(|c| c.re().clone()).collect();
        let roots = rational_roots(&real)?;
        if roots.iter().map(|r| r.1).sum::<usize>() != block.size() {
            return Err(MatalgError::NonRationalSpectrum);
        }
        eigen.extend(roots.into_iter().map(|r| r.0));
    }
    eigen.sort();
    eigen.dedup();
    let id = alg.identity();
    let pairs = eigen
        .iter()
        .map(|li| {
            let p = eigen.iter().filter(|lj| *lj != li).fold(id.clone(), |acc, lj| {
                let shifted = a - &id.scale(&GaussScalar::real(lj.clone()));
                let denom = GaussScalar::real((li - lj).recip());
                (&acc * &shifted).scale(&denom)
            });
            (li.clone(), p)
        })
        .collect();
    SpectralElement::new(&alg, pairs)
}

/// Atoms (minimal projections) of the unital algebra generated by a set of
/// pairwise commuting elements closed under adjoints.
pub fn atoms_of_abelian(algebra: &FinDimAlgebra, basis: &[AlgElement]) -> Result<PartitionOfUnity> {
    let mut gens: Vec<AlgElement> = Vec::new();
    for b in basis {
        if !algebra.contains(b) {
            return Err(MatalgError::ParentMismatch);
        }
        gens.push(b.clone());
        gens.push(b.adjoint());
    }
    for (i, x) in gens.iter().enumerate() {
        if gens[..i].iter().any(|y| !x.commutes_with(y)) {
            return Err(MatalgError::NotAbelian);
        }
    }
    let half = GaussScalar::ratio(1, 2);
    let minus_half_i = GaussScalar::complex((0, 1), (-1, 2));
    let mut atoms = vec![algebra.identity()];
    for b in basis {
        let bs = b.adjoint();
        for h in [(b + &bs).scale(&half), (b - &bs).scale(&minus_half_i)] {
            let spec = spectral_decompose(&h)?;
            atoms = atoms
                .iter()
                .flat_map(|p| spec.pairs().iter().map(move |(_, q)| p * q))
                .filter(|r| !r.is_zero())
                .collect();
        }
    }
    PartitionOfUnity::new(algebra, atoms)
}
