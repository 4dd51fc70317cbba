use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Dense univariate polynomial with integer coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: &BigInt) -> Self {
        Self::new(vec![-root, BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `p(x - shift)`.
    pub fn shift(&self, shift: &BigInt) -> Self {
        let step = Self::linear(shift);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(&step).add(&Self::constant(c.clone()))
        })
    }

    /// Polynomial long division over the integers. Every quotient step must be
    /// an exact integer division, otherwise `InexactDivision` is returned.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::InexactDivision("division by the zero polynomial".into()))?
            .clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "({self}) / ({divisor}): leading term not divisible"
                )));
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!(
                "({self}) / ({divisor}) leaves remainder {r}"
            )))
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Characteristic polynomial `det(x·I - m)`.
    ///
    /// Evaluates the determinant at `x = 0..=n` and interpolates in the
    /// binomial (Newton forward-difference) basis. The k-th forward
    /// difference of an integer polynomial is divisible by `k!`; that
    /// division is checked to be exact.
    pub fn char_poly(m: &IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut diffs = (0..=n)
            .map(|x| m.neg().add_scalar_identity(&BigInt::from(x))?.determinant())
            .collect::<Result<Vec<_>>>()?;
        // Forward differences in place: diffs[k] becomes Δ^k f(0).
        for k in 1..=n {
            for i in (k..=n).rev() {
                diffs[i] = &diffs[i] - &diffs[i - 1];
            }
        }
        let mut result = Self::zero();
        let mut falling = Self::constant(BigInt::one());
        let mut factorial = BigInt::one();
        for (k, delta) in diffs.iter().enumerate() {
            if k > 0 {
                factorial *= k;
                falling = falling.mul(&Self::linear(&BigInt::from(k - 1)));
            }
            let (b, r) = delta.div_rem(&factorial);
            assert!(r.is_zero(), "forward difference not divisible by {k}!");
            result = result.add(&falling.mul(&Self::constant(b)));
        }
        debug_assert_eq!(result.degree(), Some(n));
        debug_assert!(result.leading().is_some_and(One::is_one));
        Ok(result)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn char_poly_examples() {
        let l_c3 = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(IntPoly::char_poly(&l_c3).unwrap(), p(&[0, 9, -6, 1]));
        assert_eq!(
            IntPoly::char_poly(&IntMatrix::zeros(2, 2)).unwrap(),
            p(&[0, 0, 1])
        );
        let l_p2 = IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]);
        assert_eq!(IntPoly::char_poly(&l_p2).unwrap(), p(&[0, -2, 1]));
        assert_eq!(
            IntPoly::char_poly(&IntMatrix::zeros(0, 0)).unwrap(),
            p(&[1])
        );
    }

    #[test]
    fn char_poly_rejects_rectangular() {
        assert!(matches!(
            IntPoly::char_poly(&IntMatrix::zeros(1, 2)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn evaluation() {
        let chi_c3 = p(&[0, 9, -6, 1]);
        assert_eq!(chi_c3.eval(&BigInt::from(-1)), BigInt::from(-16));
        assert_eq!(p(&[0, -2, 1]).eval(&BigInt::from(-1)), BigInt::from(3));
        assert_eq!(p(&[7, 3, 5]).eval(&BigInt::zero()), BigInt::from(7));
    }

    #[test]
    fn shift_and_division() {
        // (x-1)^2 shifted by 1 is (x-2)^2
        assert_eq!(p(&[1, -2, 1]).shift(&BigInt::from(1)), p(&[4, -4, 1]));
        let q = p(&[0, 9, -6, 1]).div_exact(&p(&[-3, 1])).unwrap();
        assert_eq!(q, p(&[0, -3, 1]));
        assert!(matches!(
            p(&[1, 0, 1]).div_exact(&p(&[-1, 1])),
            Err(Error::InexactDivision(_))
        ));
        assert!(matches!(
            p(&[1, 1]).div_rem(&p(&[0, 2])),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 9, -6, 1]).to_string(), "x^3 - 6x^2 + 9x");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
