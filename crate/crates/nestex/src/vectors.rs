//! Exact integer face-vector algebra: the f ↔ h binomial transform,
//! g and complementary vectors, Macaulay's M-vector criterion, and the
//! flawless / strongly flawless inequalities.

use thiserror::Error;

pub type Int = i64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VectorError {
    #[error("sequence must be nonnegative (entry {index} is {value})")]
    NonNegativeRequired { index: usize, value: Int },
    #[error("polynomial is zero")]
    ZeroPolynomial,
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// `h_j = Σ_i (−1)^{j−i} C(d−i, j−i) f_i` with `d = len(f) − 1`.
pub fn h_from_f(f: &[Int]) -> Vec<Int> {
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let c = binomial(d - i, j - i);
                    let s = if (j - i) % 2 == 0 { 1 } else { -1 };
                    s * c * f[i as usize]
                })
                .sum()
        })
        .collect()
}

/// Inverse transform: `f_j = Σ_i C(d−i, j−i) h_i`.
pub fn f_from_h(h: &[Int]) -> Vec<Int> {
    let d = h.len() as i64 - 1;
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| binomial(d - i, j - i) * h[i as usize])
                .sum()
        })
        .collect()
}

/// `(h_0, h_1 − h_0, …, h_⌊d/2⌋ − h_⌊d/2⌋−1)`.
pub fn g_vector(h: &[Int]) -> Vec<Int> {
    let d = h.len() - 1;
    (0..=d / 2)
        .map(|i| if i == 0 { h[0] } else { h[i] - h[i - 1] })
        .collect()
}

/// `(h_d − h_0, h_{d−1} − h_1, …)` down to the middle.
pub fn complementary_vector(h: &[Int]) -> Vec<Int> {
    let d = h.len() - 1;
    (0..=d / 2).map(|i| h[d - i] - h[i]).collect()
}

fn require_nonnegative(v: &[Int]) -> Result<(), VectorError> {
    for (index, &value) in v.iter().enumerate() {
        if value < 0 {
            return Err(VectorError::NonNegativeRequired { index, value });
        }
    }
    Ok(())
}

/// `h_i ≤ h_{d−i}` for `i ≤ ⌊d/2⌋`.
pub fn is_flawless(v: &[Int]) -> Result<bool, VectorError> {
    require_nonnegative(v)?;
    if v.is_empty() {
        return Ok(true);
    }
    let d = v.len() - 1;
    Ok((0..=d / 2).all(|i| v[i] <= v[d - i]))
}

/// Flawless plus a weakly increasing lower half.
pub fn is_strongly_flawless(v: &[Int]) -> Result<bool, VectorError> {
    require_nonnegative(v)?;
    if v.is_empty() {
        return Ok(true);
    }
    let d = v.len() - 1;
    let monotone = (1..=d / 2).all(|i| v[i - 1] <= v[i]);
    Ok(monotone && is_flawless(v)?)
}

/// Macaulay's criterion: the sequence counts faces of some multicomplex.
pub fn is_m_vector(v: &[Int]) -> Result<bool, VectorError> {
    require_nonnegative(v)?;
    if v.is_empty() {
        return Ok(true);
    }
    if v[0] != 1 {
        // a multicomplex has exactly one empty face
        return Ok(false);
    }
    for i in 1..v.len() - 1 {
        if v[i] == 0 {
            if v[i + 1..].iter().any(|&x| x != 0) {
                return Ok(false);
            }
            break;
        }
        if v[i + 1] > macaulay_bound(v[i], i as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a^{⟨i⟩}`: write `a` in its i-th Macaulay (binomial) representation and
/// bump every binomial.
fn macaulay_bound(a: Int, i: i64) -> Int {
    debug_assert!(a > 0 && i > 0);
    let mut rest = a;
    let mut level = i;
    let mut bound: i64 = 0;
    while rest > 0 && level > 0 {
        // the largest n with C(n, level) ≤ rest
        let mut n = level;
        while binomial(n + 1, level) <= rest {
            n += 1;
        }
        rest -= binomial(n, level);
        bound += binomial(n + 1, level + 1);
        level -= 1;
    }
    bound
}

/// A polynomial with exact integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<Int>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> IntPoly {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        IntPoly(coeffs)
    }

    pub fn zero() -> IntPoly {
        IntPoly(vec![0])
    }

    pub fn one() -> IntPoly {
        IntPoly(vec![1])
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0]
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Int {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![0; self.0.len().max(other.0.len())];
        for (i, item) in out.iter_mut().enumerate() {
            *item = self.coeff(i) + other.coeff(i);
        }
        IntPoly::new(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn add_term(&mut self, degree: usize, value: Int) {
        if self.0.len() <= degree {
            self.0.resize(degree + 1, 0);
        }
        self.0[degree] += value;
    }

    pub fn eval(&self, x: Int) -> Int {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// Ascending display: `c0 + c1 t + c2 t^2 + …`.
    pub fn ascending_string(&self, var: &str) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| term_string(c, k, var))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Descending display matching printed tables: `c_d t^d + … + c0`.
    pub fn descending_string(&self, var: &str) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| term_string(c, k, var))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

fn term_string(c: Int, k: usize, var: &str) -> String {
    match (k, c) {
        (0, _) => c.to_string(),
        (1, 1) => var.to_string(),
        (1, _) => format!("{c}{var}"),
        (_, 1) => format!("{var}^{k}"),
        _ => format!("{c}{var}^{k}"),
    }
}
