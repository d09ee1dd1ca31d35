//! The cellular chain complex of a real partial flag manifold.
//!
//! Cells in degree `d` are the minimal coset representatives of length `d`;
//! the boundary matrix entry `(row w', col w)` is the incidence coefficient
//! `c(w, w')`, nonzero only when `w` covers `w'` inside the representative
//! set with an even transposition gap.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::bruhat::covered_list;
use crate::coeff::{detail_from_codes, value_of};
use crate::perm::{
    code, enumerate_min_reps_bounded, is_minimal_representative, Permutation, ThetaSet,
};
use crate::{Error, Result};

/// Sparse integer matrix keyed by `(row, column)`; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl SparseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        *self.entries.get(&(row, col)).unwrap_or(&0)
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.cols, "index out of shape");
        if value == 0 {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: i64) {
        let v = self.entry(row, col) + value;
        self.set(row, col, v);
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    /// Nonzero entries of one row.
    pub fn iter_row(&self, row: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.entries
            .range((row, 0)..=(row, usize::MAX))
            .map(|(&(_, c), &v)| (c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = SparseIntMatrix::zero(self.rows, other.cols);
        for (&(i, k), &a) in &self.entries {
            for (j, b) in other.iter_row(k) {
                out.add_to(i, j, a * b);
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for (&(r, c), &v) in &self.entries {
            m[r][c] = v;
        }
        m
    }
}

/// A formal integer combination of cells of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    coeffs: BTreeMap<Permutation, i64>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a chain from terms, dropping zero coefficients; all cells must
    /// have length equal to `degree`.
    pub fn from_terms(degree: usize, terms: &[(Permutation, i64)]) -> Result<Self> {
        let mut chain = Chain::zero(degree);
        for (w, c) in terms {
            chain.add_term(w, *c)?;
        }
        Ok(chain)
    }

    pub fn add_term(&mut self, w: &Permutation, coeff: i64) -> Result<()> {
        if w.length() != self.degree {
            return Err(Error::Domain(format!(
                "cell {w} has length {} but the chain degree is {}",
                w.length(),
                self.degree
            )));
        }
        let v = self.coeffs.get(w).copied().unwrap_or(0) + coeff;
        if v == 0 {
            self.coeffs.remove(w);
        } else {
            self.coeffs.insert(w.clone(), v);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, i64)> + '_ {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self + scale · other` (same degree required).
    pub fn add_scaled(&self, other: &Chain, scale: i64) -> Result<Chain> {
        if self.degree != other.degree {
            return Err(Error::Domain(format!(
                "degree mismatch: {} vs {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, scale * c)?;
        }
        Ok(out)
    }
}

/// The chain complex of `F_Θ`, possibly truncated above some degree.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    n: usize,
    theta: ThetaSet,
    /// `cells[d]` = degree-`d` cells in (length, lex) order, `d ≤ built_dim`.
    cells: Vec<Vec<Permutation>>,
    /// `position[d][w]` = column index of `w` within degree `d`.
    position: Vec<HashMap<Permutation, usize>>,
    /// `boundaries[d]` = matrix of `∂_d` (shape `#cells_{d−1} × #cells_d`)
    /// for `1 ≤ d ≤ built_dim`; index 0 holds the empty `0 × #cells_0` map.
    boundaries: Vec<SparseIntMatrix>,
    /// Dimension of the manifold (top cell length), even when truncated.
    manifold_dim: usize,
}

impl ChainComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> &ThetaSet {
        &self.theta
    }

    /// Dimension of the underlying manifold.
    pub fn dim(&self) -> usize {
        self.manifold_dim
    }

    /// Highest degree whose cells and boundary are materialized.
    pub fn built_dim(&self) -> usize {
        self.cells.len() - 1
    }

    /// True when no truncation was applied.
    pub fn is_complete(&self) -> bool {
        self.built_dim() == self.manifold_dim
    }

    pub fn cells(&self, d: usize) -> &[Permutation] {
        if d < self.cells.len() {
            &self.cells[d]
        } else {
            &[]
        }
    }

    pub fn cell_count(&self, d: usize) -> usize {
        self.cells(d).len()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Boundary matrix `∂_d` for `1 ≤ d ≤ built_dim`.
    pub fn boundary(&self, d: usize) -> Result<&SparseIntMatrix> {
        if d == 0 || d > self.built_dim() {
            return Err(Error::IndexRange(format!(
                "boundary degree {d} outside 1..={}",
                self.built_dim()
            )));
        }
        Ok(&self.boundaries[d])
    }

    /// Column index of `w` within its degree, if `w` is a cell.
    pub fn position_of(&self, w: &Permutation) -> Option<usize> {
        self.position.get(w.length())?.get(w).copied()
    }
}

/// Dimension of `F_Θ`: inversions of the longest minimal representative,
/// `C(n,2) − Σ_blocks C(b,2)`.
pub fn manifold_dim(n: usize, theta: &ThetaSet) -> usize {
    let pairs = n * (n - 1) / 2;
    let fixed: usize = theta.blocks().iter().map(|&b| b * (b - 1) / 2).sum();
    pairs - fixed
}

/// Builds the full chain complex for `(n, Θ)`.
pub fn build_complex(n: usize, theta: &ThetaSet) -> ChainComplex {
    build_complex_truncated(n, theta, usize::MAX)
}

/// Builds the chain complex with cells and boundaries only up to degree
/// `max_degree` (inclusive). Homology at degree `d` needs `max_degree ≥ d+1`.
pub fn build_complex_truncated(n: usize, theta: &ThetaSet, max_degree: usize) -> ChainComplex {
    assert_eq!(n, theta.n(), "rank mismatch");
    let dim = manifold_dim(n, theta);
    let built = dim.min(max_degree);
    let reps = enumerate_min_reps_bounded(n, theta, built);

    let mut cells: Vec<Vec<Permutation>> = vec![Vec::new(); built + 1];
    for w in reps {
        cells[w.length()].push(w);
    }
    let position: Vec<HashMap<Permutation, usize>> = cells
        .iter()
        .map(|layer| {
            layer
                .iter()
                .enumerate()
                .map(|(idx, w)| (w.clone(), idx))
                .collect()
        })
        .collect();

    let mut boundaries = Vec::with_capacity(built + 1);
    boundaries.push(SparseIntMatrix::zero(0, cells[0].len()));
    for d in 1..=built {
        let mut m = SparseIntMatrix::zero(cells[d - 1].len(), cells[d].len());
        for (col, w) in cells[d].iter().enumerate() {
            let cw = code(w);
            for pair in covered_list(w) {
                if (pair.j - pair.i) % 2 != 0 {
                    continue;
                }
                let Some(&row) = position[d - 1].get(&pair.w_prime) else {
                    continue;
                };
                let detail = detail_from_codes(&cw, &code(&pair.w_prime), pair.i, pair.j);
                let v = value_of(&detail);
                if v != 0 {
                    m.add_to(row, col, v);
                }
            }
        }
        boundaries.push(m);
    }

    ChainComplex {
        n,
        theta: theta.clone(),
        cells,
        position,
        boundaries,
        manifold_dim: dim,
    }
}

/// Boundary of a single cell, computed without assembling the complex: the
/// sum of `c(w, w')` over covers `w ⋗ w'` that remain minimal
/// representatives for Θ.
pub fn cell_boundary(w: &Permutation, theta: &ThetaSet) -> Result<Chain> {
    if !is_minimal_representative(w, theta) {
        return Err(Error::Domain(format!(
            "{w} is not a minimal representative for {theta}"
        )));
    }
    let mut out = Chain::zero(w.length().saturating_sub(1));
    if w.length() == 0 {
        return Ok(out);
    }
    let cw = code(w);
    for pair in covered_list(w) {
        if (pair.j - pair.i) % 2 != 0 {
            continue;
        }
        if !is_minimal_representative(&pair.w_prime, theta) {
            continue;
        }
        let detail = detail_from_codes(&cw, &code(&pair.w_prime), pair.i, pair.j);
        let v = value_of(&detail);
        if v != 0 {
            out.add_term(&pair.w_prime, v)?;
        }
    }
    Ok(out)
}

/// Linear extension of the boundary to a chain; a degree-0 chain maps to the
/// zero chain.
pub fn boundary_of(chain: &Chain, cx: &ChainComplex) -> Result<Chain> {
    let d = chain.degree();
    if d == 0 {
        return Ok(Chain::zero(0));
    }
    if d > cx.built_dim() {
        return Err(Error::IndexRange(format!(
            "chain degree {d} exceeds built degree {}",
            cx.built_dim()
        )));
    }
    let m = cx.boundary(d)?;
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    for (w, c) in chain.terms() {
        let col = cx.position_of(w).ok_or_else(|| {
            Error::Domain(format!("{w} is not a cell of the complex in degree {d}"))
        })?;
        for (r, ccol, v) in m.iter() {
            if ccol == col {
                *acc.entry(r).or_insert(0) += c * v;
            }
        }
    }
    let mut out = Chain::zero(d - 1);
    for (r, v) in acc {
        if v != 0 {
            out.add_term(&cx.cells(d - 1)[r], v)?;
        }
    }
    Ok(out)
}

/// True iff `∂_{d} · ∂_{d+1} = 0` for every materialized consecutive pair.
pub fn verify_dd_zero(cx: &ChainComplex) -> bool {
    (2..=cx.built_dim()).all(|d| cx.boundaries[d - 1].mul(&cx.boundaries[d]).is_zero())
}
