use std::fmt;
use std::ops::Mul;

use serde::Serialize;

/// Polynomial in `q` with nonnegative integer coefficients; `coeffs[k]` is
/// the coefficient of `q^k`. Trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    /// `[k]_q = 1 + q + … + q^{k-1}`.
    pub fn q_integer(k: usize) -> Self {
        QPolynomial::new(vec![1; k])
    }

    /// `[n]_q [n-1]_q ⋯ [1]_q`.
    pub fn q_factorial(n: usize) -> Self {
        (1..=n).fold(QPolynomial::one(), |acc, k| {
            &acc * &QPolynomial::q_integer(k)
        })
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return QPolynomial::default();
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert_eq!(QPolynomial::q_factorial(1).coeffs(), &[1]);
        assert_eq!(QPolynomial::q_factorial(3).coeffs(), &[1, 2, 2, 1]);
        assert_eq!(QPolynomial::q_factorial(0), QPolynomial::one());
        let f8 = QPolynomial::q_factorial(8);
        assert_eq!(f8.degree(), Some(28));
        assert_eq!(f8.total(), 40320);
    }

    #[test]
    fn display() {
        assert_eq!(
            QPolynomial::q_factorial(3).to_string(),
            "1 + 2q + 2q^2 + q^3"
        );
        assert_eq!(QPolynomial::new(vec![0, 0]).to_string(), "0");
    }
}
