//! Exact integer linear algebra: lattice vectors, dense integer matrices,
//! Smith normal form with tracked unimodular transforms, saturated spans,
//! and small rational solvers.
//!
//! All scalars are arbitrary-precision (`BigInt` / `BigRational`); nothing
//! in this module can overflow.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A point of a lattice `Z^rank`, with coordinate-wise equality.
///
/// The same type serves both the lattice `N` of one-parameter subgroups and
/// its dual `M` of characters; the pairing between them is [`LatticeVector::pairing`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        assert!(!coords.is_empty(), "lattice vectors have positive rank");
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![BigInt::zero(); rank])
    }

    /// The standard basis vector `e_i` (zero-based index).
    pub fn unit(rank: usize, i: usize) -> Self {
        assert!(i < rank);
        let mut coords = vec![BigInt::zero(); rank];
        coords[i] = BigInt::one();
        Self::new(coords)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The perfect pairing `⟨·,·⟩ : M × N → Z`, realized as the dot product
    /// of coordinate vectors.
    pub fn pairing(&self, other: &LatticeVector) -> Result<BigInt> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Sum of two vectors of the same rank.
    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in add");
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in sub");
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> LatticeVector {
        Self::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        Self::new(self.coords.iter().map(|c| c * k).collect())
    }

    /// Greatest common divisor of the coordinates (nonnegative; zero only for
    /// the zero vector).
    pub fn content(&self) -> BigInt {
        self.coords
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the coordinate gcd, leaving the unique primitive lattice
    /// point on the same ray.
    pub fn primitivize(&self) -> Result<LatticeVector> {
        let g = self.content();
        if g.is_zero() {
            return Err(Error::DegenerateInput("cannot primitivize the zero vector"));
        }
        Ok(Self::new(self.coords.iter().map(|c| c / &g).collect()))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Componentwise `a ≤ b`. With `a`, `b` pairing vectors against the rays of a
/// cone, this is exactly semigroup divisibility of the underlying points.
pub(crate) fn componentwise_le(a: &[BigInt], b: &[BigInt]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A dense row-major matrix over `Z`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        IntegerMatrix {
            nrows,
            ncols,
            entries: vec![BigInt::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds the matrix whose rows are the given vectors.
    pub fn from_rows(rows: &[LatticeVector]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, LatticeVector::rank);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.rank(), ncols, "ragged rows");
            entries.extend(r.coords().iter().cloned());
        }
        IntegerMatrix { nrows, ncols, entries }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[LatticeVector]) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, LatticeVector::rank);
        let mut m = Self::zero(nrows, ncols);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.rank(), nrows, "ragged columns");
            for i in 0..nrows {
                m.set(i, j, c.get(i).clone());
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let vecs: Vec<LatticeVector> = rows.iter().map(|r| LatticeVector::from_i64(r)).collect();
        Self::from_rows(&vecs)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> LatticeVector {
        LatticeVector::new(self.entries[i * self.ncols..(i + 1) * self.ncols].to_vec())
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector::new((0..self.nrows).map(|i| self.at(i, j).clone()).collect())
    }

    pub fn rows(&self) -> Vec<LatticeVector> {
        (0..self.nrows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = Self::zero(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for j in 0..other.ncols {
                let mut acc = BigInt::zero();
                for k in 0..self.ncols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Matrix-vector product (vector as a column).
    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        assert_eq!(self.ncols, v.rank(), "dimension mismatch in apply");
        LatticeVector::new(
            (0..self.nrows)
                .map(|i| (0..self.ncols).map(|j| self.at(i, j) * v.get(j)).sum())
                .collect(),
        )
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.nrows, self.ncols, "determinant of a non-square matrix");
        let n = self.nrows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    /// Rank over `Q`, computed as the number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        smith_normal_form(self).nonzero_count()
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.nrows {
            write!(f, "  [")?;
            for j in 0..self.ncols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `left · original · right = diag`, with all four
/// unimodular transforms retained so cokernel classes can be lifted.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    /// Diagonal of the normal form: nonnegative invariant factors, each
    /// dividing the next, padded with zeros to length `min(nrows, ncols)`.
    pub diag: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
    /// Inverse of `left` (also unimodular).
    pub left_inv: IntegerMatrix,
    /// Inverse of `right`.
    pub right_inv: IntegerMatrix,
    pub original: IntegerMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero invariant factors = rank of the matrix.
    pub fn nonzero_count(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

struct SnfState {
    a: IntegerMatrix,
    left: IntegerMatrix,
    left_inv: IntegerMatrix,
    right: IntegerMatrix,
    right_inv: IntegerMatrix,
}

impl SnfState {
    // A ← E·A with E adding q × row k to row i; transforms kept in sync.
    fn row_add(&mut self, i: usize, k: usize, q: &BigInt) {
        for j in 0..self.a.ncols() {
            let v = self.a.at(i, j) + q * self.a.at(k, j);
            self.a.set(i, j, v);
        }
        for j in 0..self.left.ncols() {
            let v = self.left.at(i, j) + q * self.left.at(k, j);
            self.left.set(i, j, v);
        }
        // left_inv ← left_inv · E^{-1}: col k ← col k − q · col i
        for r in 0..self.left_inv.nrows() {
            let v = self.left_inv.at(r, k) - q * self.left_inv.at(r, i);
            self.left_inv.set(r, k, v);
        }
    }

    fn col_add(&mut self, j: usize, k: usize, q: &BigInt) {
        for i in 0..self.a.nrows() {
            let v = self.a.at(i, j) + q * self.a.at(i, k);
            self.a.set(i, j, v);
        }
        for i in 0..self.right.nrows() {
            let v = self.right.at(i, j) + q * self.right.at(i, k);
            self.right.set(i, j, v);
        }
        // right_inv ← F^{-1} · right_inv: row k ← row k − q · row j
        for c in 0..self.right_inv.ncols() {
            let v = self.right_inv.at(k, c) - q * self.right_inv.at(j, c);
            self.right_inv.set(k, c, v);
        }
    }

    fn row_swap(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.a.ncols() {
            let (x, y) = (self.a.at(i, j).clone(), self.a.at(k, j).clone());
            self.a.set(i, j, y);
            self.a.set(k, j, x);
        }
        for j in 0..self.left.ncols() {
            let (x, y) = (self.left.at(i, j).clone(), self.left.at(k, j).clone());
            self.left.set(i, j, y);
            self.left.set(k, j, x);
        }
        for r in 0..self.left_inv.nrows() {
            let (x, y) = (self.left_inv.at(r, i).clone(), self.left_inv.at(r, k).clone());
            self.left_inv.set(r, i, y);
            self.left_inv.set(r, k, x);
        }
    }

    fn col_swap(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.a.nrows() {
            let (x, y) = (self.a.at(i, j).clone(), self.a.at(i, k).clone());
            self.a.set(i, j, y);
            self.a.set(i, k, x);
        }
        for i in 0..self.right.nrows() {
            let (x, y) = (self.right.at(i, j).clone(), self.right.at(i, k).clone());
            self.right.set(i, j, y);
            self.right.set(i, k, x);
        }
        for c in 0..self.right_inv.ncols() {
            let (x, y) = (self.right_inv.at(j, c).clone(), self.right_inv.at(k, c).clone());
            self.right_inv.set(j, c, y);
            self.right_inv.set(k, c, x);
        }
    }

    fn row_negate(&mut self, i: usize) {
        for j in 0..self.a.ncols() {
            let v = -self.a.at(i, j);
            self.a.set(i, j, v);
        }
        for j in 0..self.left.ncols() {
            let v = -self.left.at(i, j);
            self.left.set(i, j, v);
        }
        for r in 0..self.left_inv.nrows() {
            let v = -self.left_inv.at(r, i);
            self.left_inv.set(r, i, v);
        }
    }
}

/// Smith normal form over `Z` by minimal-pivot reduction.
///
/// Pivots are chosen with minimal absolute value to keep intermediate entries
/// small; the divisibility chain is enforced before moving past each pivot.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (nr, nc) = (a.nrows(), a.ncols());
    let mut st = SnfState {
        a: a.clone(),
        left: IntegerMatrix::identity(nr),
        left_inv: IntegerMatrix::identity(nr),
        right: IntegerMatrix::identity(nc),
        right_inv: IntegerMatrix::identity(nc),
    };

    let steps = nr.min(nc);
    for k in 0..steps {
        'pivot: loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in k..nr {
                for j in k..nc {
                    if st.a.at(i, j).is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => st.a.at(i, j).abs() < st.a.at(bi, bj).abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot; // trailing block is zero
            };
            st.row_swap(k, pi);
            st.col_swap(k, pj);

            let mut clean = true;
            for i in k + 1..nr {
                if !st.a.at(i, k).is_zero() {
                    let q = -(st.a.at(i, k) / st.a.at(k, k));
                    st.row_add(i, k, &q);
                    if !st.a.at(i, k).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..nc {
                if !st.a.at(k, j).is_zero() {
                    let q = -(st.a.at(k, j) / st.a.at(k, k));
                    st.col_add(j, k, &q);
                    if !st.a.at(k, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot; // residues left; a smaller pivot now exists
            }
            // Enforce the divisibility chain: pull in any entry the pivot
            // does not divide and restart the reduction at this step.
            let mut fixed = true;
            'divcheck: for i in k + 1..nr {
                for j in k + 1..nc {
                    if !(st.a.at(i, j) % st.a.at(k, k)).is_zero() {
                        st.row_add(k, i, &BigInt::one());
                        fixed = false;
                        break 'divcheck;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }
        if st.a.at(k, k).is_negative() {
            st.row_negate(k);
        }
    }

    let diag: Vec<BigInt> = (0..steps).map(|k| st.a.at(k, k).clone()).collect();
    SmithDecomposition {
        diag,
        left: st.left,
        right: st.right,
        left_inv: st.left_inv,
        right_inv: st.right_inv,
        original: a.clone(),
    }
}

/// Lattice basis of `(R-span of the input vectors) ∩ Z^ambient_rank`.
///
/// Returns the basis and the rank of the span. Every input vector is an
/// integer combination of the basis, and the basis generates the full
/// saturated lattice, not merely the sublattice the inputs generate.
pub fn saturate_span(
    vectors: &[LatticeVector],
    ambient_rank: usize,
) -> (Vec<LatticeVector>, usize) {
    if vectors.is_empty() {
        return (Vec::new(), 0);
    }
    for v in vectors {
        assert_eq!(v.rank(), ambient_rank, "vector rank differs from ambient rank");
    }
    let a = IntegerMatrix::from_rows(vectors);
    let snf = smith_normal_form(&a);
    let r = snf.nonzero_count();
    // With L·A·R = D, the row space of A over R equals the row space of
    // D·R^{-1}, so the saturation is spanned over Z by the first r rows of
    // R^{-1}. Rows of a unimodular matrix are primitive and form a basis.
    let basis = (0..r).map(|i| snf.right_inv.row(i)).collect();
    (basis, r)
}

/// Basis for the right integer kernel `{x : A·x = 0}`: the trailing columns
/// of `right` in the Smith decomposition.
pub fn kernel_basis(a: &IntegerMatrix) -> Vec<LatticeVector> {
    let snf = smith_normal_form(a);
    let r = snf.nonzero_count();
    (r..a.ncols()).map(|j| snf.right.column(j)).collect()
}

/// Solves the square rational system `A·x = b` by Gaussian elimination.
/// Returns `None` when `A` is singular.
pub(crate) fn solve_square_rational(
    a: &IntegerMatrix,
    b: &[BigRational],
) -> Option<Vec<BigRational>> {
    let n = a.nrows();
    assert_eq!(a.ncols(), n);
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(a.at(i, j).clone()))
                .chain(core::iter::once(b[i].clone()))
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, pivot_row);
        let pivot = m[k][k].clone();
        for j in k..=n {
            m[k][j] = &m[k][j] / &pivot;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k].clone();
                for j in k..=n {
                    let v = &m[i][j] - &f * &m[k][j];
                    m[i][j] = v;
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

/// Expresses `v` as a rational combination of the columns of `basis`
/// (which must have full column rank), or `None` if `v` is outside the span.
pub(crate) fn express_in_column_span(
    basis: &IntegerMatrix,
    v: &LatticeVector,
) -> Option<Vec<BigRational>> {
    let (n, d) = (basis.nrows(), basis.ncols());
    assert_eq!(v.rank(), n);
    if d == 0 {
        return v.is_zero().then(Vec::new);
    }
    // Solve the normal equations Bᵀ·B·x = Bᵀ·v (Bᵀ·B is invertible because
    // B has full column rank), then verify B·x = v exactly.
    let bt = basis.transpose();
    let btb = bt.mul(basis);
    let rhs: Vec<BigRational> = (0..d)
        .map(|i| BigRational::from_integer(bt.row(i).pairing(v).expect("rank checked")))
        .collect();
    let x = solve_square_rational(&btb, &rhs)?;
    for i in 0..n {
        let mut acc = BigRational::zero();
        for (j, xj) in x.iter().enumerate() {
            acc += BigRational::from_integer(basis.at(i, j).clone()) * xj;
        }
        if acc != BigRational::from_integer(v.get(i).clone()) {
            return None;
        }
    }
    Some(x)
}

/// Like [`express_in_column_span`] but requires the coefficients to be
/// integers, returning the integral coordinate vector.
pub(crate) fn express_in_lattice_basis(
    basis: &IntegerMatrix,
    v: &LatticeVector,
) -> Option<LatticeVector> {
    let x = express_in_column_span(basis, v)?;
    let mut coords = Vec::with_capacity(x.len());
    for c in &x {
        if !c.is_integer() {
            return None;
        }
        coords.push(c.to_integer());
    }
    if coords.is_empty() {
        return None;
    }
    Some(LatticeVector::new(coords))
}

/// Deterministic ordering helper: degree first (when supplied), then lex.
pub(crate) fn lex_cmp(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    a.coords().cmp(b.coords())
}
