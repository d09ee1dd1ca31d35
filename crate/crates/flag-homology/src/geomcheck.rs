//! Floating-point certification of the geometric facts behind the boundary
//! degree bookkeeping: the rotation one-parameter subgroups attached to the
//! simple roots, their long-range commutation, and the quarter-turn braid
//! identities together with their diagonal sign relation.
//!
//! The generator `A_i = E_{i,i+1} − E_{i+1,i}` exponentiates in closed form
//! to a plane rotation, so no general matrix exponential is needed. This
//! module is verification-only: no floating value feeds the exact integer
//! pipeline.

use crate::{Error, Result};

/// Dense square matrix of floats, row-major, 0-based indexing.
#[derive(Clone, Debug)]
pub struct Mat {
    n: usize,
    a: Vec<f64>,
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut m = Mat {
            n,
            a: vec![0.0; n * n],
        };
        for d in 0..n {
            m.a[d * n + d] = 1.0;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.a[r * self.n + c]
    }

    fn set(&mut self, r: usize, c: usize, v: f64) {
        self.a[r * self.n + c] = v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Mat {
            n,
            a: vec![0.0; n * n],
        };
        for r in 0..n {
            for m in 0..n {
                let v = self.a[r * n + m];
                if v == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out.a[r * n + c] += v * other.a[m * n + c];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat {
            n,
            a: vec![0.0; n * n],
        };
        for r in 0..n {
            for c in 0..n {
                out.a[c * n + r] = self.a[r * n + c];
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.a
            .iter()
            .zip(&other.a)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

/// `exp(t·A_i)`: the identity outside the 2×2 block at rows/columns
/// `i, i+1` (1-based), with block `[[cos t, sin t], [−sin t, cos t]]`.
/// Orthogonal with determinant 1.
pub fn rot(n: usize, i: usize, t: f64) -> Mat {
    assert!((1..n).contains(&i), "root index {i} outside 1..{n}");
    let mut m = Mat::identity(n);
    let (r, c) = (i - 1, i); // 0-based block corner
    m.set(r, r, t.cos());
    m.set(r, c, t.sin());
    m.set(c, r, -t.sin());
    m.set(c, c, t.cos());
    m
}

fn sample_angles(samples: usize) -> impl Iterator<Item = f64> {
    let step = std::f64::consts::PI / (samples as f64 + 1.0);
    (1..=samples).map(move |k| k as f64 * step)
}

/// Max deviation of `rot(n,i,s)·rot(n,j,t) − rot(n,j,t)·rot(n,i,s)` over a
/// sample grid; the generators commute exactly when `|i−j| ≥ 2`.
pub fn check_commutation(n: usize, i: usize, j: usize, samples: usize) -> Result<f64> {
    if !(1..n).contains(&i) || !(1..n).contains(&j) {
        return Err(Error::IndexRange(format!(
            "root indices ({i},{j}) outside 1..{n}"
        )));
    }
    if i.abs_diff(j) < 2 {
        return Err(Error::Domain(format!(
            "commutation needs |i−j| ≥ 2, got ({i},{j})"
        )));
    }
    if samples == 0 {
        return Err(Error::Domain("samples must be ≥ 1".to_string()));
    }
    let mut dev: f64 = 0.0;
    for s in sample_angles(samples) {
        for t in sample_angles(samples) {
            let a = rot(n, i, s);
            let b = rot(n, j, t);
            dev = dev.max(a.mul(&b).max_abs_diff(&b.mul(&a)));
        }
    }
    Ok(dev)
}

/// Maximum deviations of the four quarter-turn braid identities and the
/// diagonal relation they imply, over sampled angles `t ∈ (0,π)`.
#[derive(Clone, Copy, Debug)]
pub struct BraidReport {
    /// `R_i(t)·Q = Q·R_{i+1}(t)` with `Q = R_{i+1}(π/2)·R_i(π/2)`: a
    /// rotation slides through the double quarter-turn left to right.
    pub max_dev_slide_right: f64,
    /// `P·R_i(t) = R_{i+1}(t)·P` with `P = R_i(π/2)·R_{i+1}(π/2)`.
    pub max_dev_slide_left: f64,
    /// `R_i(π/2)·R_{i+1}(t)·R_i(π/2)` against its closed 3×3 block
    /// `[[−cos t, 0, sin t], [0, −1, 0], [sin t, 0, cos t]]`.
    pub max_dev_conjugate_next: f64,
    /// `R_{i+1}(π/2)·R_i(−t)·R_{i+1}(π/2)` against its closed 3×3 block
    /// `[[cos t, 0, −sin t], [0, −1, 0], [−sin t, 0, −cos t]]`.
    pub max_dev_conjugate_prev: f64,
    /// The two conjugates differ by `diag(…, −1, 1, −1, …)` with `−1` at
    /// positions `i` and `i+2`.
    pub max_dev_diagonal: f64,
}

impl BraidReport {
    pub fn max(&self) -> f64 {
        self.max_dev_slide_right
            .max(self.max_dev_slide_left)
            .max(self.max_dev_conjugate_next)
            .max(self.max_dev_conjugate_prev)
            .max(self.max_dev_diagonal)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

/// Embeds a 3×3 block at rows/columns `i, i+1, i+2` (1-based) of the
/// identity.
fn embed3(n: usize, i: usize, block: [[f64; 3]; 3]) -> Mat {
    let mut m = Mat::identity(n);
    for (br, row) in block.iter().enumerate() {
        for (bc, &v) in row.iter().enumerate() {
            m.set(i - 1 + br, i - 1 + bc, v);
        }
    }
    m
}

/// Checks the four braid identities for adjacent generators `A_i, A_{i+1}`
/// and their diagonal corollary, reporting max deviations over `samples`
/// angles in `(0,π)`.
pub fn check_braid_identities(n: usize, i: usize, samples: usize) -> Result<BraidReport> {
    if i == 0 || i + 2 > n {
        return Err(Error::IndexRange(format!(
            "adjacent pair (A_{i}, A_{}) needs i ≤ n−2 with n = {n}",
            i + 1
        )));
    }
    if samples == 0 {
        return Err(Error::Domain("samples must be ≥ 1".to_string()));
    }
    let quarter = std::f64::consts::FRAC_PI_2;
    let qi = rot(n, i, quarter);
    let qn = rot(n, i + 1, quarter);
    let q = qn.mul(&qi);
    let p = qi.mul(&qn);
    let mut report = BraidReport {
        max_dev_slide_right: 0.0,
        max_dev_slide_left: 0.0,
        max_dev_conjugate_next: 0.0,
        max_dev_conjugate_prev: 0.0,
        max_dev_diagonal: 0.0,
    };
    let diagonal = {
        let mut d = Mat::identity(n);
        d.set(i - 1, i - 1, -1.0);
        d.set(i + 1, i + 1, -1.0);
        d
    };
    for t in sample_angles(samples) {
        let ri = rot(n, i, t);
        let rn = rot(n, i + 1, t);
        let (c, s) = (t.cos(), t.sin());

        report.max_dev_slide_right = report
            .max_dev_slide_right
            .max(ri.mul(&q).max_abs_diff(&q.mul(&rn)));
        report.max_dev_slide_left = report
            .max_dev_slide_left
            .max(p.mul(&ri).max_abs_diff(&rn.mul(&p)));

        let conj_next = qi.mul(&rn).mul(&qi);
        let next_closed = embed3(n, i, [[-c, 0.0, s], [0.0, -1.0, 0.0], [s, 0.0, c]]);
        report.max_dev_conjugate_next = report
            .max_dev_conjugate_next
            .max(conj_next.max_abs_diff(&next_closed));

        let conj_prev = qn.mul(&rot(n, i, -t)).mul(&qn);
        let prev_closed = embed3(n, i, [[c, 0.0, -s], [0.0, -1.0, 0.0], [-s, 0.0, -c]]);
        report.max_dev_conjugate_prev = report
            .max_dev_conjugate_prev
            .max(conj_prev.max_abs_diff(&prev_closed));

        // Both conjugates are orthogonal, so the inverse is the transpose.
        let rel = conj_prev.transpose().mul(&conj_next);
        report.max_dev_diagonal = report.max_dev_diagonal.max(rel.max_abs_diff(&diagonal));
    }
    Ok(report)
}

/// Sign of a signed permutation: the permutation's parity times the product
/// of the coordinate signs.
fn signed_permutation_det(perm: &[usize], signs: &[i64]) -> i64 {
    debug_assert_eq!(perm.len(), signs.len());
    let mut inversions = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    let parity = if inversions.is_multiple_of(2) { 1 } else { -1 };
    parity * signs.iter().product::<i64>()
}

/// Determinant of the coordinate change from a commutation move: positions
/// `k, k+1` (1-based) of a length-`len` tuple swap. Always −1.
pub fn commutation_map_det(len: usize, k: usize) -> Result<i64> {
    if k == 0 || k + 1 > len {
        return Err(Error::IndexRange(format!(
            "swap position {k} outside 1..={}",
            len.saturating_sub(1)
        )));
    }
    let mut perm: Vec<usize> = (0..len).collect();
    perm.swap(k - 1, k);
    Ok(signed_permutation_det(&perm, &vec![1; len]))
}

/// Determinant of the coordinate change from a braid move:
/// `(t_k, t_{k+1}, t_{k+2}) ↦ (t_{k+2}, −t_{k+1}, t_k)`. Always +1.
pub fn braid_map_det(len: usize, k: usize) -> Result<i64> {
    if k == 0 || k + 2 > len {
        return Err(Error::IndexRange(format!(
            "braid position {k} outside 1..={}",
            len.saturating_sub(2)
        )));
    }
    let mut perm: Vec<usize> = (0..len).collect();
    perm.swap(k - 1, k + 1);
    let mut signs = vec![1i64; len];
    signs[k] = -1;
    Ok(signed_permutation_det(&perm, &signs))
}
