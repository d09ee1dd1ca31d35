//! Exact integer Smith normal form and homology-group extraction.
//!
//! The elimination runs on `i64` with checked arithmetic and transparently
//! falls back to arbitrary precision on overflow, so results are always
//! exact. With the smallest-magnitude pivot strategy and boundary entries of
//! `±2`, the fallback is never expected to trigger in practice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

use crate::complex::{ChainComplex, SparseIntMatrix};
use crate::{Error, Result};

/// Diagonal of the Smith normal form: nonnegative, divisibility-chained,
/// zeros trailing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

/// One homology group `H_d ≅ ℤ^betti ⊕ ℤ/f_1 ⊕ …` with invariant factors
/// `f_i > 1`, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    pub torsion_factors: Vec<BigInt>,
}

trait Elim: Integer + Signed + Clone + CheckedAdd + CheckedSub + CheckedMul {}
impl<T: Integer + Signed + Clone + CheckedAdd + CheckedSub + CheckedMul> Elim for T {}

fn find_pivot<T: Elim>(m: &[Vec<T>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in m.iter().enumerate().skip(t) {
        for (c, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.as_ref().is_none_or(|&(br, bc)| v.abs() < m[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

fn swap_cols<T>(m: &mut [Vec<T>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// `row_r ← row_r − q · row_t`; `None` on overflow.
fn row_axpy<T: Elim>(m: &mut [Vec<T>], r: usize, t: usize, q: &T) -> Option<()> {
    for c in 0..m[r].len() {
        let prod = q.checked_mul(&m[t][c])?;
        m[r][c] = m[r][c].checked_sub(&prod)?;
    }
    Some(())
}

/// `col_c ← col_c − q · col_t`; `None` on overflow.
fn col_axpy<T: Elim>(m: &mut [Vec<T>], c: usize, t: usize, q: &T) -> Option<()> {
    for row in m.iter_mut() {
        let prod = q.checked_mul(&row[t])?;
        row[c] = row[c].checked_sub(&prod)?;
    }
    Some(())
}

/// Diagonalizes `m` in place by row/column operations and returns the
/// diagonal (signs unnormalized, no divisibility chain yet); `None` on
/// overflow.
fn diagonalize<T: Elim>(m: &mut [Vec<T>]) -> Option<Vec<T>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let k = rows.min(cols);
    let mut t = 0;
    while t < k {
        let Some((pr, pc)) = find_pivot(m, t) else { break };
        m.swap(t, pr);
        swap_cols(m, t, pc);
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if !m[r][t].is_zero() {
                    let q = m[r][t].div_rem(&m[t][t]).0;
                    row_axpy(m, r, t, &q)?;
                    dirty |= !m[r][t].is_zero();
                }
            }
            for c in t + 1..cols {
                if !m[t][c].is_zero() {
                    let q = m[t][c].div_rem(&m[t][t]).0;
                    col_axpy(m, c, t, &q)?;
                    dirty |= !m[t][c].is_zero();
                }
            }
            if !dirty {
                break;
            }
            // A remainder smaller than the pivot appeared; promote it.
            let (pr, pc) = find_pivot(m, t).expect("dirty submatrix has a nonzero entry");
            m.swap(t, pr);
            swap_cols(m, t, pc);
        }
        t += 1;
    }
    Some((0..k).map(|i| m[i][i].abs()).collect())
}

/// Enforces `d_1 | d_2 | …` on a diagonal by repeated adjacent gcd/lcm
/// replacement (valid on a diagonal matrix); `None` on overflow.
fn chain_fixup<T: Elim>(diag: &mut [T]) -> Option<()> {
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    // Zeros already trail: elimination stops at the first all-zero submatrix.
    debug_assert!(diag[..nonzero].iter().all(|d| !d.is_zero()));
    loop {
        let mut changed = false;
        for i in 1..nonzero {
            if !diag[i].is_multiple_of(&diag[i - 1]) {
                let g = diag[i - 1].gcd(&diag[i]);
                let l = (diag[i - 1].clone() / g.clone()).checked_mul(&diag[i])?;
                diag[i - 1] = g;
                diag[i] = l;
                changed = true;
            }
        }
        if !changed {
            return Some(());
        }
    }
}

fn snf_loose<T: Elim>(mut m: Vec<Vec<T>>) -> Option<Vec<T>> {
    let mut diag = diagonalize(&mut m)?;
    if !diag.is_empty() {
        chain_fixup(&mut diag)?;
    }
    Some(diag)
}

/// Smith normal form of an integer matrix, as dense rows.
pub fn smith_normal_form_dense(m: &[Vec<i64>]) -> SmithDecomposition {
    let diagonal: Vec<BigInt> = match snf_loose(m.to_vec()) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => {
            let big: Vec<Vec<BigInt>> = m
                .iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            snf_loose(big).expect("BigInt elimination cannot overflow")
        }
    };
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    SmithDecomposition { diagonal, rank }
}

/// Smith normal form of a sparse matrix.
pub fn smith_normal_form(m: &SparseIntMatrix) -> SmithDecomposition {
    smith_normal_form_dense(&m.to_dense())
}

/// Diagonalization `U · M · V = D` over arbitrary precision, with invertible
/// `U`, `V`. `D` is diagonal with nonnegative entries (no divisibility
/// chain); enough for image-membership tests.
pub struct DiagonalizedMap {
    pub u: Vec<Vec<BigInt>>,
    pub diag: Vec<BigInt>,
    pub v: Vec<Vec<BigInt>>,
    pub rank: usize,
    rows: usize,
}

pub fn diagonalize_with_transforms(m: &SparseIntMatrix) -> DiagonalizedMap {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = m
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = identity(rows);
    let mut v: Vec<Vec<BigInt>> = identity(cols);

    let k = rows.min(cols);
    let mut t = 0;
    while t < k {
        let Some((pr, pc)) = find_pivot(&a, t) else { break };
        a.swap(t, pr);
        u.swap(t, pr);
        swap_cols(&mut a, t, pc);
        swap_cols(&mut v, t, pc);
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if !a[r][t].is_zero() {
                    let q = a[r][t].div_rem(&a[t][t]).0;
                    row_axpy(&mut a, r, t, &q).unwrap();
                    row_axpy(&mut u, r, t, &q).unwrap();
                    dirty |= !a[r][t].is_zero();
                }
            }
            for c in t + 1..cols {
                if !a[t][c].is_zero() {
                    let q = a[t][c].div_rem(&a[t][t]).0;
                    col_axpy(&mut a, c, t, &q).unwrap();
                    col_axpy(&mut v, c, t, &q).unwrap();
                    dirty |= !a[t][c].is_zero();
                }
            }
            if !dirty {
                break;
            }
            let (pr, pc) = find_pivot(&a, t).expect("dirty submatrix has a nonzero entry");
            a.swap(t, pr);
            u.swap(t, pr);
            swap_cols(&mut a, t, pc);
            swap_cols(&mut v, t, pc);
        }
        if a[t][t].is_negative() {
            for x in &mut u[t] {
                *x = -std::mem::take(x);
            }
            a[t][t] = -std::mem::take(&mut a[t][t]);
        }
        t += 1;
    }
    let diag: Vec<BigInt> = (0..k).map(|i| a[i][i].clone()).collect();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    DiagonalizedMap {
        u,
        diag,
        v,
        rank,
        rows,
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

impl DiagonalizedMap {
    /// True iff `y` lies in the integer column span of the original matrix:
    /// with `z = U·y`, requires `d_i | z_i` below the rank and `z_i = 0`
    /// at and above it.
    pub fn image_contains(&self, y: &[BigInt]) -> bool {
        assert_eq!(y.len(), self.rows, "vector length mismatch");
        for (i, urow) in self.u.iter().enumerate() {
            let zi: BigInt = urow.iter().zip(y).map(|(a, b)| a * b).sum();
            if i < self.rank {
                if !zi.is_multiple_of(&self.diag[i]) {
                    return false;
                }
            } else if !zi.is_zero() {
                return false;
            }
        }
        true
    }
}

/// Ranks and torsion for every degree of a complete complex. Fails with an
/// integrity error if `∂∘∂ ≠ 0` (which would signal a coefficient bug).
pub fn homology(cx: &ChainComplex) -> Result<Vec<HomologyGroup>> {
    if !cx.is_complete() {
        return Err(Error::Domain(format!(
            "complex truncated at degree {} < dimension {}; use homology_at",
            cx.built_dim(),
            cx.dim()
        )));
    }
    if !crate::complex::verify_dd_zero(cx) {
        return Err(Error::Integrity("∂∘∂ ≠ 0".into()));
    }
    let dim = cx.dim();
    let snfs: Vec<SmithDecomposition> = (1..=dim)
        .map(|d| smith_normal_form(cx.boundary(d).expect("built degree")))
        .collect();
    let rank = |d: usize| -> usize {
        if d == 0 || d > dim {
            0
        } else {
            snfs[d - 1].rank
        }
    };
    Ok((0..=dim)
        .map(|d| {
            let betti = cx.cell_count(d) - rank(d) - rank(d + 1);
            let torsion_factors = if d < dim {
                torsion_of(&snfs[d])
            } else {
                Vec::new()
            };
            HomologyGroup {
                degree: d,
                betti,
                torsion_factors,
            }
        })
        .collect())
}

/// `H_d` of a complex truncated at degree ≥ `d+1` (also valid when
/// `d = dim`, where `∂_{d+1} = 0`).
pub fn homology_at(cx: &ChainComplex, d: usize) -> Result<HomologyGroup> {
    let need = (d + 1).min(cx.dim());
    if cx.built_dim() < need {
        return Err(Error::Domain(format!(
            "homology at degree {d} needs the complex built through degree {need}, have {}",
            cx.built_dim()
        )));
    }
    if d > cx.dim() {
        return Ok(HomologyGroup {
            degree: d,
            betti: 0,
            torsion_factors: Vec::new(),
        });
    }
    let rank_d = if d == 0 {
        0
    } else {
        smith_normal_form(cx.boundary(d)?).rank
    };
    let (rank_up, torsion_factors) = if d < cx.dim() {
        let s = smith_normal_form(cx.boundary(d + 1)?);
        let t = torsion_of(&s);
        (s.rank, t)
    } else {
        (0, Vec::new())
    };
    Ok(HomologyGroup {
        degree: d,
        betti: cx.cell_count(d) - rank_d - rank_up,
        torsion_factors,
    })
}

fn torsion_of(s: &SmithDecomposition) -> Vec<BigInt> {
    s.diagonal
        .iter()
        .filter(|d| !d.is_zero() && d.to_i64() != Some(1))
        .cloned()
        .collect()
}
