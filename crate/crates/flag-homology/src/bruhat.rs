//! Bruhat-order machinery: the extended matrix `M_{i,j}`, covering tests in
//! both one-line and Lehmer-code form, and cover enumeration.
//!
//! `w` covers `w'` when `ℓ(w) = ℓ(w') + 1` and `w = w'·(i,j)` for a
//! transposition swapping positions `i < j`, which happens exactly when
//! `w'(i) < w'(j)` and no intermediate position `k ∈ (i,j)` has
//! `w'(i) < w'(k) < w'(j)`.

use crate::perm::{LehmerCode, Permutation};
use crate::{Error, Result};

/// A covering relation `w ⋗ w'` together with the transposition positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringPair {
    pub w: Permutation,
    pub w_prime: Permutation,
    /// 1-based positions with `i < j`; swapping them in `w'` yields `w`.
    pub i: usize,
    pub j: usize,
}

/// Extended-matrix entry `M_{i,j}(w) = #{k : i < k < j, w(k) < w(i)}` for
/// `1 ≤ i < j ≤ n+1`. In particular `M_{i,i+1} = 0` and `M_{i,n+1} = α_i`.
pub fn ext_matrix(w: &Permutation, i: usize, j: usize) -> Result<usize> {
    let n = w.n();
    if i < 1 || i >= j || j > n + 1 {
        return Err(Error::IndexRange(format!(
            "ext_matrix needs 1 ≤ i < j ≤ n+1, got i={i}, j={j}, n={n}"
        )));
    }
    let wi = w.at(i);
    Ok((i + 1..j).filter(|&k| w.at(k) < wi).count())
}

/// [`ext_matrix`] computed from the code alone, via the recursion
/// `M_{i,i+1} = 0`, `M_{i,k+1} = M_{i,k} + [α_k + M_{i,k} < α_i]`
/// (the bracket tests `α_k < α_i − M_{i,k}` without underflow; `α_n = 0`).
pub fn ext_matrix_rec(c: &LehmerCode, i: usize, j: usize) -> Result<usize> {
    let n = c.n();
    if i < 1 || i >= j || j > n + 1 {
        return Err(Error::IndexRange(format!(
            "ext_matrix_rec needs 1 ≤ i < j ≤ n+1, got i={i}, j={j}, n={n}"
        )));
    }
    let ai = c.alpha_at(i);
    let mut m = 0usize;
    for k in i + 1..j {
        if c.alpha_at(k) + m < ai {
            m += 1;
        }
    }
    Ok(m)
}

/// If `w` covers `w'`, returns the transposition positions `(i, j)`; `None`
/// otherwise.
pub fn covering_transposition(w: &Permutation, w_prime: &Permutation) -> Option<(usize, usize)> {
    debug_assert_eq!(w.n(), w_prime.n());
    let n = w.n();
    let diff: Vec<usize> = (1..=n).filter(|&p| w.at(p) != w_prime.at(p)).collect();
    let [i, j] = diff[..] else { return None };
    if w.at(i) != w_prime.at(j) || w.at(j) != w_prime.at(i) {
        return None;
    }
    if w_prime.at(i) >= w_prime.at(j) {
        return None;
    }
    let (lo, hi) = (w_prime.at(i), w_prime.at(j));
    if (i + 1..j).any(|k| lo < w_prime.at(k) && w_prime.at(k) < hi) {
        return None;
    }
    Some((i, j))
}

/// Code-based covering test: returns `(i, j)` iff the codes stand in the
/// covering relation, characterized by
///
/// * (a1) `α'_i ≤ α_i − 1`,
/// * (a2) `α'_j = α_j + α_i − α'_i − 1`,
/// * (a3) `α'_k = α_k` for `k ∉ {i, j}`,
/// * (a4) `M_{i,j}(α) = M_{i,j}(α') = α'_i − α_j`,
///
/// with the convention `α_n = α'_n = 0` (so `j = n` is allowed). When the
/// codes differ in two entries those fix `(i, j)`; when they differ in one
/// entry (forcing `α_i = α'_i + 1`) every `j ∈ (i, n]` is tried against (a4).
pub fn covering_by_code(a: &LehmerCode, a_prime: &LehmerCode) -> Option<(usize, usize)> {
    debug_assert_eq!(a.n(), a_prime.n());
    let n = a.n();
    let diff: Vec<usize> = (1..n).filter(|&k| a.alpha_at(k) != a_prime.alpha_at(k)).collect();

    let check = |i: usize, j: usize| -> bool {
        let (ai, api) = (a.alpha_at(i), a_prime.alpha_at(i));
        let (aj, apj) = (a.alpha_at(j), a_prime.alpha_at(j));
        if api + 1 > ai {
            return false; // (a1)
        }
        if apj + api + 1 != aj + ai {
            return false; // (a2)
        }
        if api < aj {
            return false; // (a4) target would be negative
        }
        let target = api - aj;
        ext_matrix_rec(a, i, j).is_ok_and(|m| m == target)
            && ext_matrix_rec(a_prime, i, j).is_ok_and(|m| m == target)
    };

    match diff[..] {
        [i, j] => {
            // i must be the strictly decreasing entry, j the increasing one.
            if a_prime.alpha_at(i) < a.alpha_at(i)
                && a_prime.alpha_at(j) > a.alpha_at(j)
                && check(i, j)
            {
                Some((i, j))
            } else {
                None
            }
        }
        [i] => {
            if a_prime.alpha_at(i) + 1 != a.alpha_at(i) {
                return None; // (a2) forces α_i = α'_i + 1 when only i differs
            }
            (i + 1..=n).find(|&j| check(i, j)).map(|j| (i, j))
        }
        _ => None,
    }
}

/// All covers `w ⋗ w'` below `w`, ordered by the transposition `(i, j)`.
pub fn covered_list(w: &Permutation) -> Vec<CoveringPair> {
    let n = w.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if w.at(i) <= w.at(j) {
                continue;
            }
            let (lo, hi) = (w.at(j), w.at(i));
            if (i + 1..j).any(|k| lo < w.at(k) && w.at(k) < hi) {
                continue;
            }
            out.push(CoveringPair {
                w: w.clone(),
                w_prime: w.swap_positions(i, j),
                i,
                j,
            });
        }
    }
    out
}
