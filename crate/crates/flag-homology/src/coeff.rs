//! The closed-form incidence coefficient `c(w, w')` for a covering pair
//! `w ⋗ w'` with transposition positions `(i, j)`:
//!
//! ```text
//! c(w, w') = (−1)^I · deg · (1 + (−1)^{j−i})
//! I        = (Σ_{k=1}^{i} α_k) − α'_i
//! deg      = (−1)^{(α_i − α'_i − 1) · Σ_{l=i}^{j−1} α'_l}
//! ```
//!
//! where `α`, `α'` are the Lehmer codes of `w`, `w'`. The coefficient is `0`
//! for non-covering pairs and whenever `j − i` is odd, and `±2` otherwise.
//!
//! `I` locates the letter of the row-reading word of `w` whose deletion
//! leaves a reduced word for `w'`; `deg` is the sign picked up when carrying
//! that word to the row-reading word of `w'` by commutations and braid
//! moves, and equals `(−1)^{#commutations}`.

use crate::bruhat::covering_transposition;
use crate::perm::{code, LehmerCode, Permutation};
use crate::{Error, Result};

/// Factorization data of a nontrivial coefficient evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffDetail {
    /// Transposition positions, `i < j`.
    pub i: usize,
    pub j: usize,
    /// 1-based letter index `I` deleted from the row-reading word of `w`.
    pub removal_index: usize,
    /// `deg ∈ {+1, −1}`.
    pub degree_sign: i64,
    /// `1 + (−1)^{j−i} ∈ {0, 2}`.
    pub parity_factor: i64,
}

/// Result of [`boundary_coefficient`]: `value ∈ {0, +2, −2}`, with the
/// factorization present exactly when the pair is a covering pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCoefficient {
    pub value: i64,
    pub detail: Option<CoeffDetail>,
}

/// Closed-form counts of the moves needed to carry the letter-deleted
/// row-reading word of `w` to the row-reading word of `w'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveCount {
    pub braids: i64,
    pub commutations: i64,
}

fn require_cover(
    w: &Permutation,
    w_prime: &Permutation,
    i: usize,
    j: usize,
) -> Result<(LehmerCode, LehmerCode)> {
    match covering_transposition(w, w_prime) {
        Some(pos) if pos == (i, j) => Ok((code(w), code(w_prime))),
        Some(pos) => Err(Error::Domain(format!(
            "{w} covers {w_prime} via {pos:?}, not ({i},{j})"
        ))),
        None => Err(Error::Domain(format!("{w} does not cover {w_prime}"))),
    }
}

/// `I = (Σ_{k=1}^{i} α_k) − α'_i`: the row-reading word of `w` minus its
/// `I`-th letter is a reduced word for `w'`.
pub fn removal_index(w: &Permutation, w_prime: &Permutation, i: usize, j: usize) -> Result<usize> {
    let (a, ap) = require_cover(w, w_prime, i, j)?;
    Ok(removal_index_from_codes(&a, &ap, i))
}

fn removal_index_from_codes(a: &LehmerCode, ap: &LehmerCode, i: usize) -> usize {
    let prefix: usize = (1..=i).map(|k| a.alpha_at(k)).sum();
    prefix - ap.alpha_at(i)
}

/// `deg = (−1)^{(α_i − α'_i − 1) · Σ_{l=i}^{j−1} α'_l}`.
pub fn degree_sign(w: &Permutation, w_prime: &Permutation, i: usize, j: usize) -> Result<i64> {
    let (a, ap) = require_cover(w, w_prime, i, j)?;
    Ok(degree_sign_from_codes(&a, &ap, i, j))
}

fn degree_sign_from_codes(a: &LehmerCode, ap: &LehmerCode, i: usize, j: usize) -> i64 {
    let drop = a.alpha_at(i) - ap.alpha_at(i) - 1;
    let span: usize = (i..j).map(|l| ap.alpha_at(l)).sum();
    if (drop * span).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn detail_from_codes(
    a: &LehmerCode,
    ap: &LehmerCode,
    i: usize,
    j: usize,
) -> CoeffDetail {
    CoeffDetail {
        i,
        j,
        removal_index: removal_index_from_codes(a, ap, i),
        degree_sign: degree_sign_from_codes(a, ap, i, j),
        parity_factor: if (j - i).is_multiple_of(2) { 2 } else { 0 },
    }
}

pub(crate) fn value_of(detail: &CoeffDetail) -> i64 {
    let removal_sign = if detail.removal_index.is_multiple_of(2) {
        1
    } else {
        -1
    };
    removal_sign * detail.degree_sign * detail.parity_factor
}

/// The incidence coefficient `c(w, w')`; `value = 0` (with no detail) when
/// `w` does not cover `w'`.
pub fn boundary_coefficient(w: &Permutation, w_prime: &Permutation) -> BoundaryCoefficient {
    match covering_transposition(w, w_prime) {
        None => BoundaryCoefficient {
            value: 0,
            detail: None,
        },
        Some((i, j)) => {
            let detail = detail_from_codes(&code(w), &code(w_prime), i, j);
            BoundaryCoefficient {
                value: value_of(&detail),
                detail: Some(detail),
            }
        }
    }
}

/// Move counts for a covering pair:
///
/// ```text
/// braids       = (α_i − α'_i − 1) · (j − i − 1 + α_j − α'_i)
/// commutations = (α_i − α'_i − 1) · ((Σ_{k=i}^{j−1} α'_k) − 2(j − i − 1 + α_j − α'_i))
/// ```
///
/// Both vanish when `α_i = α'_i + 1`, and `(−1)^{commutations}` equals the
/// degree sign.
pub fn move_counts(w: &Permutation, w_prime: &Permutation) -> Result<MoveCount> {
    let (i, j) = covering_transposition(w, w_prime)
        .ok_or_else(|| Error::Domain(format!("{w} does not cover {w_prime}")))?;
    let (a, ap) = (code(w), code(w_prime));
    let drop = (a.alpha_at(i) - ap.alpha_at(i) - 1) as i64;
    let width = (j as i64 - i as i64 - 1) + a.alpha_at(j) as i64 - ap.alpha_at(i) as i64;
    let span: i64 = (i..j).map(|l| ap.alpha_at(l) as i64).sum();
    Ok(MoveCount {
        braids: drop * width,
        commutations: drop * (span - 2 * width),
    })
}
