//! Exact matrix and polynomial arithmetic over `BigInt` / `BigRational`.
//!
//! Everything downstream (determinants, the asymmetry matrix
//! `S = C (C^T)^{-1}`, characteristic polynomials) is computed without
//! floating point.  Determinants use fraction-free Bareiss elimination;
//! characteristic polynomials use the Faddeev–LeVerrier recurrence.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(Error::DimensionMismatch(row.len(), n));
            }
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_usize(rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &Vec<Vec<BigInt>> {
        &self.entries
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        IntMatrix {
            n,
            entries: (0..n)
                .map(|j| (0..n).map(|i| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Conjugate by the permutation: entry `(i, j)` of the result is entry
    /// `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> IntMatrix {
        let n = self.n;
        IntMatrix {
            n,
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| self.entries[perm[i]][perm[j]].clone())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
                .collect(),
        }
    }

    /// Determinant by fraction-free Bareiss elimination: every division is
    /// exact, so the whole computation stays in `BigInt`.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Vec<BigRational>>,
}

impl RatMatrix {
    pub fn identity(n: usize) -> RatMatrix {
        RatMatrix {
            n,
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                BigRational::one()
                            } else {
                                BigRational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut out = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += &self.entries[i][k] * &other.entries[k][j];
                }
            }
        }
        Ok(RatMatrix { n, entries: out })
    }

    /// Gauss–Jordan inverse; `Err(SingularCartan)` when not invertible.
    pub fn inverse(&self) -> Result<RatMatrix> {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut inv = RatMatrix::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::SingularCartan)?;
            m.swap(col, pivot);
            inv.swap(col, pivot);
            let p = m[col][col].clone();
            for j in 0..n {
                m[col][j] /= &p;
                inv[col][j] /= &p;
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for j in 0..n {
                    let a = &f * &m[col][j];
                    m[r][j] -= a;
                    let b = &f * &inv[col][j];
                    inv[r][j] -= b;
                }
            }
        }
        Ok(RatMatrix { n, entries: inv })
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).map(|i| self.entries[i][i].clone()).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|x| x.denom().is_one() || x.is_zero())
    }

    pub fn to_integer(&self) -> Result<IntMatrix> {
        if !self.is_integral() {
            return Err(Error::NonIntegralAsymmetry);
        }
        Ok(IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|x| x.to_integer()).collect())
                .collect(),
        })
    }

    /// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier
    /// recurrence.  Returned with ascending rational coefficients.
    pub fn charpoly(&self) -> Vec<BigRational> {
        let n = self.n;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = RatMatrix::identity(n);
        for k in 1..=n {
            m = self.mul(&m).unwrap();
            let c = -m.trace() / BigRational::from(BigInt::from(k as i64));
            for i in 0..n {
                m.entries[i][i] += &c;
            }
            coeffs[n - k] = c;
        }
        coeffs
    }
}

/// Integer polynomial with ascending coefficients (`coeffs[k]` is the
/// coefficient of `x^k`).  Trailing zeros are trimmed, except that the
/// zero polynomial keeps one zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Content: gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| num::integer::gcd(g, c.abs()))
    }

    /// Split into `(c, monic-content part)` where `c = content * sign of
    /// the leading coefficient`, so `self = c * primitive`.
    pub fn factored(&self) -> (BigInt, IntPolynomial) {
        let mut c = self.content();
        if c.is_zero() {
            return (BigInt::zero(), IntPolynomial::new(vec![BigInt::zero()]));
        }
        if self.coeffs.last().unwrap().is_negative() {
            c = -c;
        }
        let prim = IntPolynomial::new(self.coeffs.iter().map(|a| a / &c).collect());
        (c, prim)
    }

    fn term_string(k: usize, c: &BigInt, first: bool) -> String {
        let mag = c.abs();
        let sign = if c.is_negative() {
            if first {
                "-"
            } else {
                " - "
            }
        } else if first {
            ""
        } else {
            " + "
        };
        let body = match k {
            0 => format!("{mag}"),
            _ => {
                let x = if k == 1 {
                    "x".to_string()
                } else {
                    format!("x^{k}")
                };
                if mag.is_one() {
                    x
                } else {
                    format!("{mag}{x}")
                }
            }
        };
        format!("{sign}{body}")
    }

    /// Human-readable descending-degree form, e.g. `x^3 - 2x + 1`.
    pub fn expanded_string(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            out.push_str(&Self::term_string(k, c, first));
            first = false;
        }
        if first {
            out.push('0');
        }
        out
    }

    /// Content-factored form, e.g. `2(x^6 - x^4 + 2x^3 - x^2 + 1)`.
    pub fn factored_string(&self) -> String {
        let (c, prim) = self.factored();
        if c.is_zero() {
            return "0".to_string();
        }
        if c.is_one() {
            prim.expanded_string()
        } else {
            format!("{c}({})", prim.expanded_string())
        }
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.factored_string())
    }
}

/// Asymmetry matrix `S = C (C^T)^{-1}` together with its integrality.
pub fn asymmetry(c: &IntMatrix) -> Result<(RatMatrix, bool)> {
    let ct_inv = c.transpose().to_rational().inverse()?;
    let s = c.to_rational().mul(&ct_inv)?;
    let integral = s.is_integral();
    Ok((s, integral))
}

/// Trace of the asymmetry matrix (an integer whenever `S` is integral,
/// and in general a rational whose value we require to be integral).
pub fn asymmetry_trace(c: &IntMatrix) -> Result<BigInt> {
    let (s, _) = asymmetry(c)?;
    let t = s.trace();
    if !t.denom().is_one() {
        return Err(Error::NonIntegralAsymmetry);
    }
    Ok(t.to_integer())
}

/// Associated polynomial `det(C) * charpoly(S)`; integral because
/// `det(C) * det(xI - S) = det(x C^T - C)` up to the sign of `det(C^T)`.
pub fn associated_polynomial(c: &IntMatrix) -> Result<IntPolynomial> {
    let det = c.determinant();
    if det.is_zero() {
        return Err(Error::SingularCartan);
    }
    let (s, _) = asymmetry(c)?;
    let cp = s.charpoly();
    let mut coeffs = Vec::with_capacity(cp.len());
    for x in cp {
        let v = x * BigRational::from(det.clone());
        if !v.denom().is_one() {
            return Err(Error::NonIntegralAsymmetry);
        }
        coeffs.push(v.to_integer());
    }
    Ok(IntPolynomial::new(coeffs))
}
