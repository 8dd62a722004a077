use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::GaussScalar;
use super::{MatalgError, Result};

/// A square matrix over Gaussian rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    data: Vec<GaussScalar>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![GaussScalar::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = GaussScalar::one();
        }
        m
    }

    /// The matrix unit `e_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.data[i * n + j] = GaussScalar::one();
        m
    }

    pub fn diag(entries: &[GaussScalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<GaussScalar>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, data: rows.into_iter().flatten().collect() }
    }

    /// Integer entries scaled by `1/den`.
    pub fn from_ints(den: i64, rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| GaussScalar::ratio(x, den)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussScalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussScalar) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[GaussScalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussScalar::is_zero)
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        m
    }

    pub fn scale(&self, c: &GaussScalar) -> Self {
        Matrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn trace(&self) -> GaussScalar {
        (0..self.n).fold(GaussScalar::zero(), |acc, i| acc + &self.data[i * self.n + i])
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        Matrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        Matrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] = &out.data[i * n + j] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    /// `[a, b; c, d]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.n + j])?;
            }
        }
        f.write_str("]")
    }
}

/// A direct sum of full matrix rings `M_{n1} ⊕ ... ⊕ M_{ns}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinDimAlgebra {
    dims: Vec<usize>,
}

impl FinDimAlgebra {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(MatalgError::InvalidDims(dims));
        }
        Ok(FinDimAlgebra { dims })
    }

    pub fn summand_dims(&self) -> &[usize] {
        &self.dims
    }

    /// Complex dimension `Σ nᵢ²`.
    pub fn dim(&self) -> usize {
        self.dims.iter().map(|n| n * n).sum()
    }

    /// No summand is a 2×2 matrix ring.
    pub fn is_type_i2_free(&self) -> bool {
        !self.dims.contains(&2)
    }

    pub fn identity(&self) -> AlgElement {
        AlgElement { blocks: self.dims.iter().map(|&n| Matrix::identity(n)).collect() }
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement { blocks: self.dims.iter().map(|&n| Matrix::zeros(n)).collect() }
    }

    /// `e_ij` placed in summand `s`.
    pub fn unit(&self, s: usize, i: usize, j: usize) -> AlgElement {
        let mut z = self.zero();
        z.blocks[s] = Matrix::unit(self.dims[s], i, j);
        z
    }

    /// The standard basis: matrix units of every summand, in coordinate order.
    pub fn matrix_units(&self) -> Vec<AlgElement> {
        let mut out = Vec::with_capacity(self.dim());
        for (s, &n) in self.dims.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    out.push(self.unit(s, i, j));
                }
            }
        }
        out
    }

    /// The identity of summand `s` (a minimal central projection).
    pub fn central_projection(&self, s: usize) -> AlgElement {
        let mut z = self.zero();
        z.blocks[s] = Matrix::identity(self.dims[s]);
        z
    }

    pub fn element(&self, blocks: Vec<Matrix>) -> Result<AlgElement> {
        let shapes: Vec<usize> = blocks.iter().map(Matrix::size).collect();
        if shapes != self.dims {
            return Err(MatalgError::ParentMismatch);
        }
        Ok(AlgElement { blocks })
    }

    pub fn from_coords(&self, coords: &[GaussScalar]) -> AlgElement {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut at = 0;
        let blocks = self
            .dims
            .iter()
            .map(|&n| {
                let data = coords[at..at + n * n].to_vec();
                at += n * n;
                Matrix { n, data }
            })
            .collect();
        AlgElement { blocks }
    }

    pub fn contains(&self, x: &AlgElement) -> bool {
        x.dims() == self.dims
    }
}

/// An element of a [`FinDimAlgebra`], one square block per summand. The
/// parent algebra is determined by the block sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElement {
    blocks: Vec<Matrix>,
}

impl AlgElement {
    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, s: usize) -> &Matrix {
        &self.blocks[s]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(Matrix::size).collect()
    }

    pub fn algebra(&self) -> FinDimAlgebra {
        FinDimAlgebra { dims: self.dims() }
    }

    pub fn same_parent(&self, other: &AlgElement) -> bool {
        self.blocks.len() == other.blocks.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a.size() == b.size())
    }

    pub fn coords(&self) -> Vec<GaussScalar> {
        self.blocks.iter().flat_map(|b| b.data.iter().cloned()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn adjoint(&self) -> Self {
        AlgElement { blocks: self.blocks.iter().map(Matrix::adjoint).collect() }
    }

    pub fn transpose(&self) -> Self {
        AlgElement { blocks: self.blocks.iter().map(Matrix::transpose).collect() }
    }

    pub fn scale(&self, c: &GaussScalar) -> Self {
        AlgElement { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.adjoint() == *self
    }

    /// `p = p* = p²`, exactly.
    pub fn is_projection(&self) -> bool {
        self.is_self_adjoint() && &(self * self) == self
    }

    pub fn commutes_with(&self, other: &AlgElement) -> bool {
        self * other == other * self
    }

    pub fn checked_mul(&self, other: &AlgElement) -> Result<AlgElement> {
        if !self.same_parent(other) {
            return Err(MatalgError::ParentMismatch);
        }
        Ok(self * other)
    }

    /// Applies `f` blockwise.
    pub fn map_blocks(&self, f: impl Fn(usize, &Matrix) -> Matrix) -> Self {
        AlgElement { blocks: self.blocks.iter().enumerate().map(|(s, b)| f(s, b)).collect() }
    }
}

/// `a∘b = ½(ab + ba)`.
pub fn jordan_product(a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
    if !a.same_parent(b) {
        return Err(MatalgError::ParentMismatch);
    }
    Ok((&(a * b) + &(b * a)).scale(&GaussScalar::ratio(1, 2)))
}

macro_rules! blockwise {
    ($tr:ident $m:ident) => {
        impl $tr<&AlgElement> for &AlgElement {
            type Output = AlgElement;
            /// Panics if the operands live in different algebras.
            fn $m(self, rhs: &AlgElement) -> AlgElement {
                assert!(self.same_parent(rhs), "parent algebra mismatch");
                AlgElement { blocks: self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a.$m(b)).collect() }
            }
        }
        impl $tr<AlgElement> for AlgElement {
            type Output = AlgElement;
            fn $m(self, rhs: AlgElement) -> AlgElement {
                (&self).$m(&rhs)
            }
        }
    };
}
blockwise!(Add add);
blockwise!(Sub sub);
blockwise!(Mul mul);

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.scale(&GaussScalar::int(-1))
    }
}

impl fmt::Display for AlgElement {
    /// Blocks separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}
