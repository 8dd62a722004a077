//! Exact linear algebra over Gaussian rationals: reduced row-echelon spans,
//! null spaces, linear maps given by generator images, and commutants.

use super::algebra::{AlgElement, FinDimAlgebra, Matrix};
use super::scalar::GaussScalar;
use super::{MatalgError, Result};

type Vector = Vec<GaussScalar>;

/// Subtracts `row` scaled so that `v[pivot]` becomes zero.
fn eliminate(v: &mut [GaussScalar], row: &[GaussScalar], pivot: usize) {
    if v[pivot].is_zero() {
        return;
    }
    let c = v[pivot].clone();
    for (x, r) in v.iter_mut().zip(row) {
        if !r.is_zero() {
            *x = &*x - &(&c * r);
        }
    }
}

/// A subspace of an algebra, kept in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    algebra: FinDimAlgebra,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn empty(algebra: &FinDimAlgebra) -> Self {
        Span { algebra: algebra.clone(), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn of<'a>(algebra: &FinDimAlgebra, elements: impl IntoIterator<Item = &'a AlgElement>) -> Self {
        let mut s = Self::empty(algebra);
        for e in elements {
            s.insert(e);
        }
        s
    }

    pub fn whole(algebra: &FinDimAlgebra) -> Self {
        Self::of(algebra, &algebra.matrix_units())
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut Vector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            eliminate(v, row, p);
        }
    }

    /// Adds `x`; returns whether the dimension grew.
    pub fn insert(&mut self, x: &AlgElement) -> bool {
        let mut v = x.coords();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for c in v.iter_mut() {
            *c = &*c * &inv;
        }
        for row in self.rows.iter_mut() {
            eliminate(row, &v, p);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, x: &AlgElement) -> bool {
        let mut v = x.coords();
        self.reduce(&mut v);
        v.iter().all(GaussScalar::is_zero)
    }

    pub fn basis(&self) -> Vec<AlgElement> {
        self.rows.iter().map(|r| self.algebra.from_coords(r)).collect()
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.basis().iter().all(|b| other.contains(b))
    }

    /// Equality of subspaces; the reduced form is canonical, so this is
    /// equality of the echelon rows.
    pub fn same_as(&self, other: &Span) -> bool {
        self.algebra == other.algebra && self.rows == other.rows
    }

    /// Whether the subspace is closed under multiplication.
    pub fn is_closed_under_products(&self) -> bool {
        let b = self.basis();
        b.iter().all(|x| b.iter().all(|y| self.contains(&(x * y))))
    }
}

/// Basis of `{x : A x = 0}` for a dense system with `cols` unknowns.
pub fn nullspace(equations: &[Vector], cols: usize) -> Vec<Vector> {
    let mut rows: Vec<Vector> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for eq in equations {
        let mut v = eq.clone();
        for (row, &p) in rows.iter().zip(&pivots) {
            eliminate(&mut v, row, p);
        }
        let Some(p) = v.iter().position(|c| !c.is_zero()) else { continue };
        let inv = v[p].inv().expect("nonzero pivot");
        for c in v.iter_mut() {
            *c = &*c * &inv;
        }
        for row in rows.iter_mut() {
            eliminate(row, &v, p);
        }
        rows.push(v);
        pivots.push(p);
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![GaussScalar::zero(); cols];
            x[f] = GaussScalar::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                x[p] = -&row[f];
            }
            x
        })
        .collect()
}

/// Inverse of a dense square matrix, or `None` when singular.
pub fn invert(m: &[Vector]) -> Option<Vec<Vector>> {
    let n = m.len();
    let mut a: Vec<Vector> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { GaussScalar::one() } else { GaussScalar::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].inv()?;
        for c in a[col].iter_mut() {
            *c = &*c * &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col {
                eliminate(row, &prow, col);
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `{x ∈ A : xs = sx for all s ∈ S}`, the commutant relative to `A`.
pub fn commutant(algebra: &FinDimAlgebra, set: &[AlgElement]) -> Span {
    let units = algebra.matrix_units();
    let d = units.len();
    let mut equations: Vec<Vector> = Vec::new();
    for s in set {
        let columns: Vec<Vector> = units.iter().map(|e| (&(e * s) - &(s * e)).coords()).collect();
        for r in 0..d {
            equations.push(columns.iter().map(|c| c[r].clone()).collect());
        }
    }
    let basis: Vec<AlgElement> = nullspace(&equations, d).iter().map(|v| algebra.from_coords(v)).collect();
    Span::of(algebra, &basis)
}

/// `S''`, with both commutants taken among all operators on the space the
/// summands act on, so the result is the unital *-algebra generated by `S`
/// rather than that algebra joined with the center of `A`.
pub fn double_commutant(algebra: &FinDimAlgebra, set: &[AlgElement]) -> Span {
    let dims = algebra.summand_dims();
    let n: usize = dims.iter().sum();
    let ambient = FinDimAlgebra::new(vec![n]).expect("positive size");
    let embed = |x: &AlgElement| {
        let mut m = Matrix::zeros(n);
        let mut off = 0;
        for b in x.blocks() {
            for i in 0..b.size() {
                for j in 0..b.size() {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.size();
        }
        ambient.element(vec![m]).expect("one block")
    };
    let restrict = |y: &AlgElement| {
        let m = y.block(0);
        let mut off = 0;
        let blocks = dims
            .iter()
            .map(|&d| {
                let mut b = Matrix::zeros(d);
                for i in 0..d {
                    for j in 0..d {
                        b.set(i, j, m.get(off + i, off + j).clone());
                    }
                }
                off += d;
                b
            })
            .collect();
        algebra.element(blocks).expect("summand shapes")
    };
    let embedded: Vec<AlgElement> = set.iter().map(embed).collect();
    let inner = commutant(&ambient, &commutant(&ambient, &embedded).basis());
    let basis: Vec<AlgElement> = inner.basis().iter().map(restrict).collect();
    Span::of(algebra, &basis)
}

/// The unital *-subalgebra generated by `set`, by closing a span under
/// adjoints and products.
pub fn generated_algebra(algebra: &FinDimAlgebra, set: &[AlgElement]) -> Span {
    let mut span = Span::empty(algebra);
    span.insert(&algebra.identity());
    for s in set {
        span.insert(s);
        span.insert(&s.adjoint());
    }
    loop {
        let basis = span.basis();
        let mut grew = false;
        for x in &basis {
            for y in &basis {
                grew |= span.insert(&(x * y));
            }
        }
        if !grew {
            return span;
        }
    }
}

/// A linear map defined by images of generators and extended by linearity to
/// their span. Construction fails when the generators satisfy a linear
/// relation their images do not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    source: FinDimAlgebra,
    target: FinDimAlgebra,
    // (domain row in echelon form, image of that row)
    rows: Vec<(Vector, Vector)>,
    pivots: Vec<usize>,
}

impl LinearMap {
    pub fn new(source: &FinDimAlgebra, target: &FinDimAlgebra) -> Self {
        LinearMap { source: source.clone(), target: target.clone(), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_pairs(
        source: &FinDimAlgebra,
        target: &FinDimAlgebra,
        pairs: &[(AlgElement, AlgElement)],
    ) -> Result<Self> {
        let mut m = Self::new(source, target);
        for (x, y) in pairs {
            m.insert(x, y)?;
        }
        Ok(m)
    }

    pub fn source(&self) -> &FinDimAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FinDimAlgebra {
        &self.target
    }

    fn reduce(&self, v: &mut Vector, w: &mut Vector) {
        for ((row, img), &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            eliminate(v, row, p);
            for (x, r) in w.iter_mut().zip(img) {
                if !r.is_zero() {
                    *x = &*x - &(&c * r);
                }
            }
        }
    }

    /// Records `x ↦ y`.
    pub fn insert(&mut self, x: &AlgElement, y: &AlgElement) -> Result<()> {
        if !self.source.contains(x) || !self.target.contains(y) {
            return Err(MatalgError::ParentMismatch);
        }
        let mut v = x.coords();
        let mut w = y.coords();
        self.reduce(&mut v, &mut w);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            if w.iter().all(GaussScalar::is_zero) {
                return Ok(());
            }
            return Err(MatalgError::InconsistentLinearData(x.to_string()));
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for c in v.iter_mut().chain(w.iter_mut()) {
            *c = &*c * &inv;
        }
        for (row, img) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            eliminate(row, &v, p);
            for (a, b) in img.iter_mut().zip(&w) {
                if !b.is_zero() {
                    *a = &*a - &(&c * b);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, (v, w));
        Ok(())
    }

    /// The image of `x`, or `None` when `x` is outside the domain span.
    pub fn apply(&self, x: &AlgElement) -> Option<AlgElement> {
        if !self.source.contains(x) {
            return None;
        }
        let mut v = x.coords();
        let mut w = vec![GaussScalar::zero(); self.target.dim()];
        self.reduce(&mut v, &mut w);
        if !v.iter().all(GaussScalar::is_zero) {
            return None;
        }
        // reduce subtracted the images; negate back
        Some(self.target.from_coords(&w.iter().map(|c| -c).collect::<Vec<_>>()))
    }

    pub fn domain(&self) -> Span {
        Span::of(&self.source, &self.domain_basis())
    }

    pub fn domain_basis(&self) -> Vec<AlgElement> {
        self.rows.iter().map(|(r, _)| self.source.from_coords(r)).collect()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}
