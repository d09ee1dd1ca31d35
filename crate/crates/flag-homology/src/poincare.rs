//! Closed-form Poincaré polynomials of real partial flag manifolds: the
//! mod-2 polynomial `P(t)` (a t-multinomial over the flag block sizes), the
//! integral free part `FP(t)`, and the torsion generating polynomial
//! `TP(t) = (P(t) − FP(t))/(1+t)`, together with the block quantity `L(Θ)`.

use std::fmt;

use crate::perm::ThetaSet;
use crate::{Error, Result};

/// Dense integer polynomial; index = degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    c: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self { c: vec![1] }
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut c = coeffs.to_vec();
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { c }
    }

    /// `coeff · t^degree`.
    pub fn monomial(coeff: i64, degree: usize) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        let mut c = vec![0; degree + 1];
        c[degree] = coeff;
        Self { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.c.get(degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.c
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut c = vec![0i64; self.c.len().max(other.c.len())];
        for (i, v) in c.iter_mut().enumerate() {
            *v = self.coeff(i) + other.coeff(i);
        }
        IntPoly::from_coeffs(&c)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut c = vec![0i64; self.c.len().max(other.c.len())];
        for (i, v) in c.iter_mut().enumerate() {
            *v = self.coeff(i) - other.coeff(i);
        }
        IntPoly::from_coeffs(&c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![0i128; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] += a as i128 * b as i128;
            }
        }
        let narrowed: Vec<i64> = c
            .into_iter()
            .map(|v| i64::try_from(v).expect("polynomial coefficient overflow"))
            .collect();
        IntPoly::from_coeffs(&narrowed)
    }

    /// Exact division; errors when the divisor is zero or a nonzero
    /// remainder survives.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::Domain("polynomial division by zero".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let mut rem = self.c.clone();
        let dd = divisor.c.len() - 1;
        let lead = *divisor.c.last().expect("nonzero divisor");
        if rem.len() < divisor.c.len() {
            return Err(Error::Integrity("nonzero polynomial remainder".into()));
        }
        let mut q = vec![0i64; rem.len() - dd];
        for k in (0..q.len()).rev() {
            let top = rem[k + dd];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(Error::Integrity("nonzero polynomial remainder".into()));
            }
            let f = top / lead;
            q[k] = f;
            for (i, &dc) in divisor.c.iter().enumerate() {
                rem[k + i] -= f * dc;
            }
        }
        if rem.iter().any(|&v| v != 0) {
            return Err(Error::Integrity("nonzero polynomial remainder".into()));
        }
        Ok(IntPoly::from_coeffs(&q))
    }

    /// Substitutes `t → t^step`.
    pub fn stretch(&self, step: usize) -> IntPoly {
        assert!(step >= 1);
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![0i64; (self.c.len() - 1) * step + 1];
        for (i, &a) in self.c.iter().enumerate() {
            c[i * step] = a;
        }
        IntPoly::from_coeffs(&c)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.c.iter().rev().fold(0i64, |acc, &a| acc * x + a)
    }

    /// Sum of coefficients, `p(1)`.
    pub fn coeff_sum(&self) -> i64 {
        self.eval(1)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if first {
                if a < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if a < 0 { " - " } else { " + " })?;
            }
            let m = a.unsigned_abs();
            match d {
                0 => write!(f, "{m}")?,
                _ => {
                    if m != 1 {
                        write!(f, "{m}")?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(m)_t! = Π_{j=1}^{m} (1 + t + ⋯ + t^{j−1})`; empty product for `m ≤ 1`.
pub fn t_factorial(m: usize) -> IntPoly {
    let mut p = IntPoly::one();
    for j in 2..=m {
        p = p.mul(&IntPoly::from_coeffs(&vec![1; j]));
    }
    p
}

/// t-multinomial `binom(Σ parts; parts)_t`, then `t → t^step`. Parts equal
/// to zero contribute trivially. The division is exact; a surviving
/// remainder is reported as an integrity error.
pub fn t_multinomial(parts: &[usize], step: usize) -> Result<IntPoly> {
    let total: usize = parts.iter().sum();
    let mut p = t_factorial(total);
    for &part in parts {
        p = p.exact_div(&t_factorial(part))?;
    }
    Ok(p.stretch(step))
}

/// `L(Θ) = Σ_blocks ⌊block/2⌋` over the flag block sizes of Θ.
pub fn big_l(n: usize, theta: &ThetaSet) -> usize {
    debug_assert_eq!(n, theta.n());
    theta.blocks().iter().map(|b| b / 2).sum()
}

/// Mod-2 Poincaré polynomial: the t-multinomial over the block sizes. Its
/// degree-d coefficient counts the d-cells.
pub fn mod2_poincare(n: usize, theta: &ThetaSet) -> IntPoly {
    debug_assert_eq!(n, theta.n());
    t_multinomial(&theta.blocks(), 1).expect("block multinomial division is exact")
}

/// Free (integral) Poincaré polynomial:
///
/// ```text
/// FP = binom(L; ⌊b₁/2⌋, …)_{t⁴} · Π_{i=L}^{⌊(n−1)/2⌋−1} (1 + t^{4i+3})     n odd or L = n/2,
/// FP = (same) · (1 + t^{n−1})                                              n even and L ≠ n/2.
/// ```
pub fn free_poincare(n: usize, theta: &ThetaSet) -> IntPoly {
    debug_assert_eq!(n, theta.n());
    let l = big_l(n, theta);
    let half_parts: Vec<usize> = theta.blocks().iter().map(|b| b / 2).collect();
    let mut p = t_multinomial(&half_parts, 4).expect("half-block multinomial division is exact");
    for i in l..(n - 1) / 2 {
        p = p.mul(&IntPoly::from_coeffs(&[1]).add(&IntPoly::monomial(1, 4 * i + 3)));
    }
    if n.is_multiple_of(2) && l != n / 2 {
        p = p.mul(&IntPoly::one().add(&IntPoly::monomial(1, n - 1)));
    }
    p
}

/// Torsion generating polynomial `TP(t) = (P(t) − FP(t)) / (1 + t)`; its
/// degree-d coefficient counts the ℤ₂ summands of `H_d`. The division is
/// exact; a surviving remainder is an integrity error.
pub fn torsion_poincare(n: usize, theta: &ThetaSet) -> Result<IntPoly> {
    let p = mod2_poincare(n, theta);
    let fp = free_poincare(n, theta);
    p.sub(&fp).exact_div(&IntPoly::from_coeffs(&[1, 1]))
}
