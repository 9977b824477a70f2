//! Exact rational scalars and sparse Gaussian elimination.
//!
//! Every "this space is zero" or "these spaces agree" verdict elsewhere in the
//! crate bottoms out here, so nothing in this module ever touches floating
//! point. Matrices are stored row-sparse; elimination walks the columns left to
//! right and, among the candidate rows for a column, picks the one with the
//! fewest nonzeros as pivot. The result is the unique reduced row-echelon form,
//! so all derived bases are deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num / den`. Panics if `den == 0`; use [`rat_arith`] for checked
/// division.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic with an explicit error for division by zero.
pub fn rat_arith(a: &Rational, b: &Rational, op: RatOp) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

type SparseRow = Vec<(usize, Rational)>;

/// Row-sparse matrix over the rationals. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    /// Matrix with `cols` columns and no rows yet; grow it with [`push_row`].
    ///
    /// [`push_row`]: SparseMatrix::push_row
    pub fn with_cols(cols: usize) -> Self {
        Self::new(0, cols)
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.data[row].get(&col).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sets an entry; setting zero removes it.
    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        if value.is_zero() {
            self.data[row].remove(&col);
        } else {
            self.data[row].insert(col, value);
        }
    }

    /// Adds `value` to an entry, dropping it if the sum cancels.
    pub fn add_to(&mut self, row: usize, col: usize, value: &Rational) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        let slot = self.data[row].entry(col).or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            self.data[row].remove(&col);
        }
    }

    /// Appends a row given as (column, value) pairs. Repeated columns are
    /// summed. All-zero rows are kept so row indices stay meaningful.
    pub fn push_row<I>(&mut self, entries: I) -> usize
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut row = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column {c} out of bounds ({})", self.cols);
            let slot = row.entry(c).or_insert_with(Rational::zero);
            *slot += v;
        }
        row.retain(|_, v: &mut Rational| !v.is_zero());
        self.data.push(row);
        self.rows += 1;
        self.rows - 1
    }

    pub fn row_entries(&self, row: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.data[row].iter().map(|(&c, v)| (c, v))
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|row| row.iter().fold(Rational::zero(), |acc, (&c, v)| acc + v * &x[c]))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Reduced row-echelon form of the matrix.
    pub fn rref(&self) -> Rref {
        let rows = self
            .data
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.iter().map(|(&c, v)| (c, v.clone())).collect())
            .collect();
        eliminate(rows, self.cols)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, nnz={})", self.rows, self.cols, self.nnz())
    }
}

/// Reduced row-echelon form: one row per pivot, leading entry 1, pivot
/// columns cleared everywhere else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub cols: usize,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<(usize, Rational)>>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Basis of the kernel. Each vector has a 1 in exactly one free column and
    /// 0 in the others, with free columns in increasing order.
    pub fn kernel(&self) -> SubspaceBasis {
        let free = self.free_columns();
        let mut free_pos = vec![usize::MAX; self.cols];
        for (k, &f) in free.iter().enumerate() {
            free_pos[f] = k;
        }
        let mut vectors = vec![vec![Rational::zero(); self.cols]; free.len()];
        for (k, &f) in free.iter().enumerate() {
            vectors[k][f] = Rational::one();
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (c, v) in row {
                if *c != p {
                    vectors[free_pos[*c]][p] = -v.clone();
                }
            }
        }
        SubspaceBasis {
            ambient: self.cols,
            vectors,
        }
    }
}

fn leading(row: &SparseRow) -> usize {
    row[0].0
}

/// `target -= factor * source`, both sorted by column.
fn axpy(target: &SparseRow, factor: &Rational, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let take_t = j >= source.len() || (i < target.len() && target[i].0 < source[j].0);
        let take_s = i >= target.len() || (j < source.len() && source[j].0 < target[i].0);
        if take_t {
            out.push(target[i].clone());
            i += 1;
        } else if take_s {
            out.push((source[j].0, -(factor * &source[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - factor * &source[j].1;
            if !v.is_zero() {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn eliminate(mut active: Vec<SparseRow>, cols: usize) -> Rref {
    let mut pivot_rows: Vec<SparseRow> = Vec::new();
    let mut pivots = Vec::new();

    active.retain(|r| !r.is_empty());
    while !active.is_empty() {
        let col = active.iter().map(leading).min().expect("non-empty");
        // Among rows led by `col`, the sparsest one becomes the pivot.
        let (pi, _) = active
            .iter()
            .enumerate()
            .filter(|(_, r)| leading(r) == col)
            .min_by_key(|(_, r)| r.len())
            .expect("some row has this leading column");
        let mut pivot = active.swap_remove(pi);
        let inv = pivot[0].1.recip();
        for e in pivot.iter_mut() {
            e.1 *= &inv;
        }

        let mut next = Vec::with_capacity(active.len());
        for row in active.drain(..) {
            if leading(&row) == col {
                let factor = row[0].1.clone();
                let reduced = axpy(&row, &factor, &pivot);
                if !reduced.is_empty() {
                    next.push(reduced);
                }
            } else {
                next.push(row);
            }
        }
        active = next;
        pivots.push(col);
        pivot_rows.push(pivot);
    }

    // Back substitution, last pivot first.
    for k in (0..pivot_rows.len()).rev() {
        let col = pivots[k];
        let (above, rest) = pivot_rows.split_at_mut(k);
        let pivot = &rest[0];
        for row in above.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&col, |e| e.0) {
                let factor = row[pos].1.clone();
                *row = axpy(row, &factor, pivot);
            }
        }
    }

    Rref {
        cols,
        pivots,
        rows: pivot_rows,
    }
}

/// Kernel of `m`, see [`Rref::kernel`] for the basis convention.
pub fn nullspace(m: &SparseMatrix) -> SubspaceBasis {
    m.rref().kernel()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// A particular solution plus a basis of the homogeneous solutions.
    Solved {
        particular: Vec<Rational>,
        kernel: SubspaceBasis,
    },
    Inconsistent,
}

impl Solution {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Solution::Solved { .. })
    }
}

/// Solves `m x = rhs` exactly.
pub fn solve(m: &SparseMatrix, rhs: &[Rational]) -> Result<Solution> {
    if rhs.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: rhs.len(),
        });
    }
    let n = m.cols();
    let rows = (0..m.rows())
        .map(|i| {
            let mut r: SparseRow = m.row_entries(i).map(|(c, v)| (c, v.clone())).collect();
            if !rhs[i].is_zero() {
                r.push((n, rhs[i].clone()));
            }
            r
        })
        .collect();
    let aug = eliminate(rows, n + 1);
    if aug.pivots.last() == Some(&n) {
        return Ok(Solution::Inconsistent);
    }
    let mut particular = vec![Rational::zero(); n];
    for (row, &p) in aug.rows.iter().zip(&aug.pivots) {
        if let Some((c, v)) = row.last() {
            if *c == n {
                particular[p] = v.clone();
            }
        }
    }
    // Kernel of the coefficient part: drop the augmented column.
    let coeff = Rref {
        cols: n,
        pivots: aug.pivots.clone(),
        rows: aug
            .rows
            .into_iter()
            .map(|r| r.into_iter().filter(|(c, _)| *c < n).collect())
            .collect(),
    };
    Ok(Solution::Solved {
        particular,
        kernel: coeff.kernel(),
    })
}

/// A list of linearly independent vectors in a fixed ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<Rational>>,
}

impl SubspaceBasis {
    /// Spans `vectors`, reduced to row-echelon canonical form.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut m = SparseMatrix::with_cols(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector has wrong ambient dimension");
            m.push_row(v.iter().cloned().enumerate());
        }
        Self::from_rref(&m.rref())
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            vectors: Vec::new(),
        }
    }

    fn from_rref(r: &Rref) -> Self {
        let vectors = r
            .rows
            .iter()
            .map(|row| {
                let mut v = vec![Rational::zero(); r.cols];
                for (c, x) in row {
                    v[*c] = x.clone();
                }
                v
            })
            .collect();
        Self {
            ambient: r.cols,
            vectors,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    /// The reduced row-echelon basis of the same subspace.
    pub fn canonical(&self) -> Self {
        Self::span(self.ambient, &self.vectors)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut all = self.vectors.clone();
        all.push(v.to_vec());
        rank_of(self.ambient, &all) == self.dim()
    }
}

fn rank_of(ambient: usize, vectors: &[Vec<Rational>]) -> usize {
    let mut m = SparseMatrix::with_cols(ambient);
    for v in vectors {
        m.push_row(v.iter().cloned().enumerate());
    }
    m.rank()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    Equal,
    AInB,
    BInA,
    Incomparable,
}

/// Classifies how two subspaces of the same ambient space sit relative to
/// each other, using rank(a), rank(b) and rank(a ∪ b).
pub fn subspace_equal(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<Containment> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch {
            expected: a.ambient,
            found: b.ambient,
        });
    }
    let mut joint = a.vectors.clone();
    joint.extend(b.vectors.iter().cloned());
    let r = rank_of(a.ambient, &joint);
    let (ra, rb) = (a.dim(), b.dim());
    Ok(match (r == ra, r == rb) {
        (true, true) => Containment::Equal,
        (false, true) => Containment::AInB,
        (true, false) => Containment::BInA,
        (false, false) => Containment::Incomparable,
    })
}

/// Human-readable rational: `3`, `-1/2`.
pub fn fmt_rat(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}
