//! Truncated power series with exact integer coefficients.

use std::fmt;

use crate::error::{Error, Result};

/// `c_0 + c_1 t + ... + c_N t^N`, everything above `t^N` discarded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPowerSeries {
    coeffs: Vec<i128>,
}

impl IntegerPowerSeries {
    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: vec![0; degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(degree, 0, 1)
    }

    pub fn monomial(degree: usize, power: usize, coeff: i128) -> Self {
        let mut s = Self::zero(degree);
        if power <= degree {
            s.coeffs[power] = coeff;
        }
        s
    }

    /// Truncates or zero-pads `coeffs` to degree `degree`.
    pub fn from_coeffs(degree: usize, coeffs: &[i128]) -> Self {
        let mut s = Self::zero(degree);
        for (c, &x) in s.coeffs.iter_mut().zip(coeffs) {
            *c = x;
        }
        s
    }

    /// `1 / (1 - c t^k)`.
    pub fn geometric(degree: usize, k: usize, c: i128) -> Result<Self> {
        let mut s = Self::zero(degree);
        let mut pow: i128 = 1;
        for (idx, slot) in (0..=degree).step_by(k.max(1)).enumerate() {
            if k == 0 && idx > 0 {
                break;
            }
            s.coeffs[slot] = pow;
            pow = pow.checked_mul(c).ok_or(Error::Overflow(slot))?;
        }
        Ok(s)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> i128 {
        self.coeffs.get(n).copied().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (n, (a, b)) in out.coeffs.iter_mut().zip(&other.coeffs).enumerate() {
            *a = a.checked_add(*b).ok_or(Error::Overflow(n))?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (n, (a, b)) in out.coeffs.iter_mut().zip(&other.coeffs).enumerate() {
            *a = a.checked_sub(*b).ok_or(Error::Overflow(n))?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let degree = self.degree().min(other.degree());
        let mut out = Self::zero(degree);
        for (i, &a) in self.coeffs.iter().enumerate().take(degree + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(degree + 1 - i) {
                let term = a.checked_mul(b).ok_or(Error::Overflow(i + j))?;
                out.coeffs[i + j] = out.coeffs[i + j].checked_add(term).ok_or(Error::Overflow(i + j))?;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be a unit (±1).
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::BadConstantTerm);
        }
        let degree = self.degree();
        let mut out = Self::zero(degree);
        out.coeffs[0] = c0;
        for n in 1..=degree {
            let mut acc: i128 = 0;
            for k in 1..=n {
                let term = self.coeffs[k]
                    .checked_mul(out.coeffs[n - k])
                    .ok_or(Error::Overflow(n))?;
                acc = acc.checked_add(term).ok_or(Error::Overflow(n))?;
            }
            out.coeffs[n] = -acc * c0;
        }
        Ok(out)
    }

    /// Multiplies in place by `1 + t^k + t^2k + ...`, `times` times.
    pub(crate) fn mul_geometric_pow(&mut self, k: usize, times: u128) -> Result<()> {
        for _ in 0..times {
            for n in k..self.coeffs.len() {
                self.coeffs[n] = self.coeffs[n]
                    .checked_add(self.coeffs[n - k])
                    .ok_or(Error::Overflow(n))?;
            }
        }
        Ok(())
    }

    /// Multiplies in place by `(1 - t^k)`, `times` times.
    pub(crate) fn mul_one_minus_pow(&mut self, k: usize, times: u128) -> Result<()> {
        for _ in 0..times {
            for n in (k..self.coeffs.len()).rev() {
                self.coeffs[n] = self.coeffs[n]
                    .checked_sub(self.coeffs[n - k])
                    .ok_or(Error::Overflow(n))?;
            }
        }
        Ok(())
    }

    /// Checks every coefficient is nonnegative.
    pub fn check_nonnegative(&self) -> Result<()> {
        match self.coeffs.iter().position(|&c| c < 0) {
            Some(degree) => Err(Error::BadCoefficient {
                degree,
                value: self.coeffs[degree],
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for IntegerPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{sign}")?;
            if !first {
                write!(f, " ")?;
            }
            let a = c.unsigned_abs();
            match (n, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{n}")?,
                _ => write!(f, "{a}t^{n}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}
