use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Integer Laurent polynomial `Σ c_e z^e`, `e` possibly negative.
///
/// Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, c.into());
        p
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    /// `z^s + z^-s`.
    pub fn symmetric_pair(s: i64) -> Self {
        Self::from_terms(&[(s, 1), (-s, 1)])
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        let slot = self.coeffs.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Highest minus lowest exponent; 0 for constants and the zero polynomial.
    pub fn span(&self) -> usize {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize,
            _ => 0,
        }
    }

    /// Lowest and highest coefficients are both 1.
    pub fn is_bimonic(&self) -> bool {
        match (
            self.coeffs.values().next(),
            self.coeffs.values().next_back(),
        ) {
            (Some(lo), Some(hi)) => lo.is_one() && hi.is_one(),
            _ => false,
        }
    }

    /// Flips the sign when both extreme coefficients are `-1`. Negation does
    /// not change the cokernel of the associated operator.
    pub fn normalized(&self) -> Self {
        let lo = self.coeffs.values().next();
        let hi = self.coeffs.values().next_back();
        let minus_one = -BigInt::one();
        if lo == Some(&minus_one) && hi == Some(&minus_one) {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Evaluates at the cyclic shift `T_n` (`T_n e_j = e_{j-1}`, i.e. the
    /// circulant `circ(0, 1, 0, ..., 0)`), giving an `n × n` circulant matrix.
    pub fn at_cyclic_shift(&self, n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        let modulus = n as i64;
        for (e, c) in self.terms() {
            let shift = e.rem_euclid(modulus) as usize;
            for i in 0..n {
                m[(i, (i + shift) % n)] += c;
            }
        }
        m
    }

    /// Companion matrix of a bimonic polynomial
    /// `z^p (1 + a_1 z + ... + a_{s-1} z^{s-1} + z^s)`: identity block in the
    /// upper right and last row `(-1, -a_1, ..., -a_{s-1})`. Its determinant
    /// is `±1`.
    pub fn companion(&self) -> Result<IntMatrix> {
        if !self.is_bimonic() || self.span() == 0 {
            return Err(Error::NotBimonic(self.to_string()));
        }
        let s = self.span();
        let p = self.min_exponent().expect("nonzero");
        let mut a = IntMatrix::zeros(s, s);
        for i in 0..s - 1 {
            a[(i, i + 1)] = BigInt::one();
        }
        for j in 0..s {
            a[(s - 1, j)] = -self.coeff(p + j as i64);
        }
        Ok(a)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{e}")?,
            }
        }
        Ok(())
    }
}
