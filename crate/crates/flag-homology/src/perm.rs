//! Symmetric-group combinatorics: one-line permutations, Lehmer codes, code
//! spectra, minimal coset representatives, Young-diagram splitting, and
//! row-reading reduced decompositions.
//!
//! Conventions used throughout the crate:
//!
//! * One-line words, positions, simple-reflection indices, and code indices
//!   are 1-based in every public signature; values are stored 0-based
//!   internally.
//! * The Lehmer code of `w` is `α_i = #{k > i : w(k) < w(i)}`, a sequence of
//!   `n-1` entries with `0 ≤ α_i ≤ n-i`.
//! * A descent of `w` at position `i` means `w(i) > w(i+1)`, equivalently
//!   `α_i > α_{i+1}` (with `α_n = 0`).
//! * `evaluate_word` applies letters left to right, each letter `s_j`
//!   swapping positions `j, j+1` of the running one-line word.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation `w(1) … w(n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    /// `word[p] = w(p+1) - 1`; always a permutation of `0..n`.
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its 1-based one-line word.
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line word".into()));
        }
        let mut seen = vec![false; n];
        for &v in one_line {
            if v < 1 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            word: one_line.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` for a 1-based position `i ∈ [1, n]`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] + 1
    }

    /// The 1-based one-line word.
    pub fn one_line(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v + 1).collect()
    }

    /// Number of inversions, i.e. the Coxeter length ℓ(w).
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.word.len() {
            for k in i + 1..self.word.len() {
                if self.word[k] < self.word[i] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// 1-based positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(p, &v)| p == v)
    }

    /// New permutation with 1-based positions `i` and `j` swapped.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, j - 1);
        Self { word }
    }

    /// All of S_n in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, word: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if word.len() == n {
                out.push(Permutation { word: word.clone() });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    word.push(v);
                    rec(n, word, used, out);
                    word.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut word, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.word.iter().map(|&v| (v + 1).to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// The Lehmer code `(α_1, …, α_{n-1})` of a permutation of `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LehmerCode {
    n: usize,
    /// `alpha[i-1] = α_i`; length `n-1`.
    alpha: Vec<usize>,
}

impl LehmerCode {
    /// Builds a code for rank `n`. Shorter slices are padded with trailing
    /// zeros (codes are often written with trailing zeros omitted).
    pub fn new(n: usize, alpha: &[usize]) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidCode("rank must be at least 1".into()));
        }
        if alpha.len() > n.saturating_sub(1) {
            return Err(Error::InvalidCode(format!(
                "{} entries exceed rank {n} (max {})",
                alpha.len(),
                n - 1
            )));
        }
        let mut full = alpha.to_vec();
        full.resize(n - 1, 0);
        for (idx, &a) in full.iter().enumerate() {
            let i = idx + 1;
            if a > n - i {
                return Err(Error::InvalidCode(format!(
                    "α_{i} = {a} exceeds bound {}",
                    n - i
                )));
            }
        }
        Ok(Self { n, alpha: full })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The full `n-1` entries.
    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// `α_i` for 1-based `i ∈ [1, n]`, with the convention `α_n = 0`.
    pub fn alpha_at(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        if i == self.n {
            0
        } else {
            self.alpha[i - 1]
        }
    }

    /// Sum of entries; equals ℓ of the encoded permutation.
    pub fn length(&self) -> usize {
        self.alpha.iter().sum()
    }

    /// 1-based indices `i` with `α_i > α_{i+1}` (taking `α_n = 0`); these are
    /// exactly the descent positions of the encoded permutation.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n)
            .filter(|&i| self.alpha_at(i) > self.alpha_at(i + 1))
            .collect()
    }
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.alpha.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

impl fmt::Debug for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lehmer code of `w`: `α_i = #{k > i : w(k) < w(i)}`.
pub fn code(w: &Permutation) -> LehmerCode {
    let n = w.n();
    let mut alpha = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut c = 0;
        for k in i + 1..=n {
            if w.at(k) < w.at(i) {
                c += 1;
            }
        }
        alpha.push(c);
    }
    LehmerCode { n, alpha }
}

/// Inverse of [`code`]: `w(i)` is the `(α_i + 1)`-th smallest value not yet
/// used.
pub fn decode(c: &LehmerCode) -> Permutation {
    let n = c.n;
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut word = Vec::with_capacity(n);
    for i in 1..=n {
        let a = c.alpha_at(i);
        word.push(remaining.remove(a));
    }
    Permutation { word }
}

/// The code spectrum `⟨b_1, …, b_ℓ⟩`: a weakly increasing list containing
/// each index `i` with multiplicity `α_i`. It names a cell by the rows of its
/// Young-diagram boxes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeSpectrum {
    n: usize,
    entries: Vec<usize>,
}

impl CodeSpectrum {
    /// Builds a spectrum for rank `n`; entries must be weakly increasing and
    /// the implied code must satisfy the `α_i ≤ n-i` bounds.
    pub fn new(n: usize, entries: &[usize]) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidSpectrum("rank must be at least 1".into()));
        }
        if entries.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::InvalidSpectrum(
                "entries must be weakly increasing".into(),
            ));
        }
        let mut counts = vec![0usize; n]; // counts[i-1] = multiplicity of i
        for &b in entries {
            if b < 1 || b > n - 1 {
                return Err(Error::InvalidSpectrum(format!(
                    "entry {b} outside 1..={}",
                    n - 1
                )));
            }
            counts[b - 1] += 1;
        }
        for i in 1..n {
            if counts[i - 1] > n - i {
                return Err(Error::InvalidSpectrum(format!(
                    "index {i} has multiplicity {} exceeding bound {}",
                    counts[i - 1],
                    n - i
                )));
            }
        }
        Ok(Self {
            n,
            entries: entries.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Weight (number of entries) = length of the encoded permutation.
    pub fn weight(&self) -> usize {
        self.entries.len()
    }
}

impl fmt::Display for CodeSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|b| b.to_string()).collect();
        write!(f, "<{}>", strs.join(","))
    }
}

impl fmt::Debug for CodeSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Spectrum of a code: index `i` repeated `α_i` times, in increasing order.
pub fn spectrum(c: &LehmerCode) -> CodeSpectrum {
    let mut entries = Vec::with_capacity(c.length());
    for i in 1..c.n {
        entries.extend(std::iter::repeat_n(i, c.alpha_at(i)));
    }
    CodeSpectrum { n: c.n, entries }
}

/// Inverse of [`spectrum`]: multiplicities become code entries.
pub fn spectrum_to_code(s: &CodeSpectrum) -> LehmerCode {
    let mut alpha = vec![0usize; s.n - 1];
    for &b in &s.entries {
        alpha[b - 1] += 1;
    }
    LehmerCode { n: s.n, alpha }
}

/// The minimal representative whose code spectrum is `entries` (1-based row
/// indices, weakly increasing).
pub fn spectrum_cell(n: usize, entries: &[usize]) -> Result<Permutation> {
    Ok(decode(&spectrum_to_code(&CodeSpectrum::new(n, entries)?)))
}

/// A subset Θ of the simple roots `{a_1, …, a_{n-1}}`, identified by index.
///
/// The complement (the "k-set") lists the allowed descent positions of the
/// minimal coset representatives, equivalently the flag type
/// `F(k_1, k_2-k_1, …, n-k_r)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaSet {
    n: usize,
    theta: BTreeSet<usize>,
}

impl ThetaSet {
    pub fn new(n: usize, theta: &[usize]) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidTheta("rank must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for &i in theta {
            if i < 1 || i > n - 1 {
                return Err(Error::InvalidTheta(format!(
                    "root index {i} outside 1..={}",
                    n - 1
                )));
            }
            if !set.insert(i) {
                return Err(Error::InvalidTheta(format!("root index {i} repeated")));
            }
        }
        Ok(Self { n, theta: set })
    }

    /// Θ = ∅ (the maximal flag manifold).
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            theta: BTreeSet::new(),
        }
    }

    /// Θ = Σ, the full simple-root set (a point).
    pub fn full(n: usize) -> Self {
        Self {
            n,
            theta: (1..n).collect(),
        }
    }

    /// Builds Θ from its complement k-set.
    pub fn from_k(n: usize, k: &[usize]) -> Result<Self> {
        let ks = Self::new(n, k)?; // validates range and distinctness
        let theta: Vec<usize> = (1..n).filter(|i| !ks.theta.contains(i)).collect();
        Self::new(n, &theta)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.theta.contains(&i)
    }

    /// |Θ|.
    pub fn size(&self) -> usize {
        self.theta.len()
    }

    /// The members of Θ in increasing order.
    pub fn members(&self) -> Vec<usize> {
        self.theta.iter().copied().collect()
    }

    /// The sorted complement `{1, …, n-1} ∖ Θ` (allowed descent positions).
    pub fn k_set(&self) -> Vec<usize> {
        (1..self.n).filter(|i| !self.theta.contains(i)).collect()
    }

    /// Block sizes `(k_1, k_2-k_1, …, n-k_r)` of the flag type; `[n]` when
    /// the k-set is empty.
    pub fn blocks(&self) -> Vec<usize> {
        let ks = self.k_set();
        let mut blocks = Vec::with_capacity(ks.len() + 1);
        let mut prev = 0;
        for k in ks {
            blocks.push(k - prev);
            prev = k;
        }
        blocks.push(self.n - prev);
        blocks
    }

    /// Indicator `𝟙^Θ_i` as an integer (requires `1 ≤ i ≤ n-1`).
    pub fn ind(&self, i: usize) -> i64 {
        debug_assert!((1..self.n).contains(&i));
        i64::from(self.theta.contains(&i))
    }

    /// Complementary indicator `𝟙^{Θ'}_i = 1 - 𝟙^Θ_i`.
    pub fn ind_c(&self, i: usize) -> i64 {
        1 - self.ind(i)
    }

    /// All `2^{n-1}` subsets, ordered by bitmask over `{1, …, n-1}`.
    pub fn all(n: usize) -> Vec<ThetaSet> {
        let bits = n - 1;
        (0u32..(1 << bits))
            .map(|mask| {
                let theta: BTreeSet<usize> =
                    (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                ThetaSet { n, theta }
            })
            .collect()
    }
}

impl fmt::Display for ThetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.theta.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", strs.join(","))
    }
}

impl fmt::Debug for ThetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta{self}")
    }
}

/// A word in the simple reflections `s_1, …, s_{n-1}` (1-based indices).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with the 1-based `idx`-th letter deleted.
    pub fn delete(&self, idx: usize) -> ReducedWord {
        let mut letters = self.letters.clone();
        letters.remove(idx - 1);
        ReducedWord { letters }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let strs: Vec<String> = self.letters.iter().map(|j| format!("s{j}")).collect();
        write!(f, "{}", strs.join(" "))
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// True iff every descent of `w` lies in the k-set of `th` (no descent at a
/// position in Θ).
pub fn is_minimal_representative(w: &Permutation, th: &ThetaSet) -> bool {
    debug_assert_eq!(w.n(), th.n());
    (1..w.n()).all(|i| !(th.contains(i) && w.at(i) > w.at(i + 1)))
}

/// All minimal representatives for Θ, sorted by (length, lexicographic
/// one-line word).
pub fn enumerate_min_reps(n: usize, th: &ThetaSet) -> Vec<Permutation> {
    enumerate_min_reps_bounded(n, th, usize::MAX)
}

/// Minimal representatives of length at most `max_len`, sorted by (length,
/// lexicographic one-line word). Enumeration runs over constrained Lehmer
/// codes: `α_i ≤ α_{i+1}` is forced for every `i ∈ Θ` (with `α_n = 0`).
pub fn enumerate_min_reps_bounded(n: usize, th: &ThetaSet, max_len: usize) -> Vec<Permutation> {
    debug_assert_eq!(n, th.n());
    let mut out = Vec::new();
    // Build codes right to left so the α_{i+1} constraint is known.
    let mut alpha = vec![0usize; n - 1];
    fn rec(
        n: usize,
        th: &ThetaSet,
        max_len: usize,
        i: usize, // current 1-based index, filled from n-1 down to 1
        suffix_sum: usize,
        alpha: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if i == 0 {
            let c = LehmerCode {
                n,
                alpha: alpha.clone(),
            };
            out.push(decode(&c));
            return;
        }
        let next = if i == n - 1 { 0 } else { alpha[i] }; // α_{i+1}
        let mut hi = n - i;
        if th.contains(i) {
            hi = hi.min(next);
        }
        for a in 0..=hi {
            if suffix_sum + a > max_len {
                break;
            }
            alpha[i - 1] = a;
            rec(n, th, max_len, i - 1, suffix_sum + a, alpha, out);
        }
        alpha[i - 1] = 0;
    }
    if n == 1 {
        return vec![Permutation::identity(1)];
    }
    rec(n, th, max_len, n - 1, 0, &mut alpha, &mut out);
    out.sort_by_key(|w| (w.length(), w.one_line()));
    out
}

/// Splits the code of a minimal representative along the k-set into the
/// per-block columns of its Young diagram. The `j`-th block
/// `(α_{k_{j-1}+1}, …, α_{k_j})` is weakly increasing and fits the rectangle
/// `(k_j - k_{j-1}) × (n - k_j)`; a non-minimal representative fails the
/// monotonicity and yields a domain error.
pub fn split_code(c: &LehmerCode, th: &ThetaSet) -> Result<Vec<Vec<usize>>> {
    debug_assert_eq!(c.n(), th.n());
    let n = c.n();
    let ks = th.k_set();
    let mut blocks = Vec::with_capacity(ks.len());
    let mut prev = 0usize;
    for &k in &ks {
        let block: Vec<usize> = (prev + 1..=k).map(|i| c.alpha_at(i)).collect();
        blocks.push(block);
        prev = k;
    }
    // Trailing segment (indices above the last k) must be identically zero
    // and within-block monotonicity must hold, else w is not minimal.
    for i in prev + 1..n {
        if c.alpha_at(i) != 0 {
            return Err(Error::Domain(format!(
                "code {c} is not a minimal representative for {th}: α_{i} ≠ 0 above the last descent position"
            )));
        }
    }
    for (bi, block) in blocks.iter().enumerate() {
        if block.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::Domain(format!(
                "code {c} is not a minimal representative for {th}: block {} not weakly increasing",
                bi + 1
            )));
        }
        // Fits the rectangle: parts bounded by n - k_j (automatic from the
        // code bounds, asserted defensively).
        let kj = ks[bi];
        debug_assert!(block.iter().all(|&a| a <= n - kj));
    }
    Ok(blocks)
}

/// The row-reading reduced word of `w`: the concatenation over `i = 1, …,
/// n-1` of `s_{α_i+i-1} s_{α_i+i-2} ⋯ s_{i+1} s_i` (empty when `α_i = 0`).
pub fn row_reading(w: &Permutation) -> ReducedWord {
    let c = code(w);
    let mut letters = Vec::with_capacity(c.length());
    for i in 1..c.n() {
        let a = c.alpha_at(i);
        letters.extend((i..i + a).rev());
    }
    ReducedWord { letters }
}

/// Applies the letters left to right, each `s_j` swapping positions `j, j+1`
/// of the running one-line word (starting from the identity).
pub fn evaluate_word(word: &ReducedWord, n: usize) -> Permutation {
    let mut w = Permutation::identity(n);
    for &j in word.letters() {
        assert!(
            (1..n).contains(&j),
            "letter s{j} out of range for rank {n}"
        );
        w.word.swap(j - 1, j);
    }
    w
}

/// True iff the word is reduced: evaluating it yields a permutation whose
/// length equals the word length.
pub fn is_reduced(word: &ReducedWord, n: usize) -> bool {
    evaluate_word(word, n).length() == word.len()
}

/// Projection to the minimal representative of the coset `w·W_Θ`: sorts each
/// k-block of the one-line word ascending. Idempotent.
pub fn project(w: &Permutation, th: &ThetaSet) -> Permutation {
    debug_assert_eq!(w.n(), th.n());
    let mut word = w.word.clone();
    let mut prev = 0usize;
    let mut ks = th.k_set();
    ks.push(th.n());
    for k in ks {
        word[prev..k].sort_unstable();
        prev = k;
    }
    Permutation { word }
}
