//! Insertion codes and the statistic-transferring bijection.
//!
//! Building `π ∈ S_n` by inserting `2, 3, …, n` through one insertion scheme
//! records a label `c_k ∈ {0, …, k-1}` at each size `k`. Both schemes obey the
//! same increment rule (the q-statistic grows by `c_k`, the t-statistic by one
//! exactly when `c_k` exceeds the current t-statistic plus `r - 1`), so
//! decoding an r-maj code through the r-level Denert scheme carries
//! `(rdes, rmaj)` onto `(exc_r, den_r)`.
//!
//! The insertion maps need `r < k`. For the sizes `k ≤ r` both statistics
//! degenerate and the chain uses a direct step instead: for the r-maj scheme
//! and for the Denert scheme with `r > k` the new letter is placed with
//! exactly `c` letters to its right (both statistics equal `inv` there); for
//! the Denert scheme at `k = r` the letter `r` goes to position `c`, or to the
//! end when `c = 0`, which makes position `c` the only r-level excedance
//! place.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::insertion;
use crate::labeling::Scheme;
use crate::word::Permutation;

/// Labels `c_2, …, c_n` consumed while building a permutation of size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct InsertionCode {
    pub scheme: Scheme,
    pub r: usize,
    /// `values[k - 2]` is `c_k`.
    pub values: Vec<usize>,
}

impl InsertionCode {
    pub fn new(scheme: Scheme, r: usize, values: Vec<usize>) -> Result<Self> {
        check_scheme(scheme)?;
        check_r(r)?;
        for (idx, &v) in values.iter().enumerate() {
            let k = idx + 2;
            if v >= k {
                return Err(Error::CodeOutOfBounds {
                    index: k,
                    value: v,
                    max: k - 1,
                });
            }
        }
        Ok(InsertionCode { scheme, r, values })
    }

    /// Size of the encoded permutation.
    pub fn n(&self) -> usize {
        self.values.len() + 1
    }

    /// `(t, q)` predicted by the increment rule: for the r-maj scheme this is
    /// `(rdes, rmaj)` of the decoded permutation, for the Denert scheme
    /// `(exc_r, den_r)`.
    pub fn predicted_stats(&self) -> (usize, usize) {
        let mut t = 0;
        for &c in &self.values {
            if c + 1 > t + self.r {
                t += 1;
            }
        }
        (t, self.values.iter().sum())
    }

    /// Parse a comma-separated list of labels.
    pub fn parse_values(s: &str) -> Result<Vec<usize>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse()
                    .map_err(|e: std::num::ParseIntError| Error::Parse {
                        token: t.to_string(),
                        reason: e.to_string(),
                    })
            })
            .collect()
    }
}

impl fmt::Display for InsertionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn check_scheme(scheme: Scheme) -> Result<()> {
    match scheme {
        Scheme::Rmaj | Scheme::Rden => Ok(()),
        Scheme::Den => Err(Error::Unknown {
            what: "code scheme (expected rmaj or rden)",
            value: scheme.to_string(),
        }),
    }
}

fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::LevelOutOfRange {
            r,
            n: 0,
            requirement: "r >= 1",
        });
    }
    Ok(())
}

/// Insert `k = π.n() + 1` with label `c`.
fn grow(scheme: Scheme, pi: &Permutation, c: usize, r: usize) -> Result<Permutation> {
    let k = pi.n() + 1;
    if r < k {
        return match scheme {
            Scheme::Rmaj => insertion::phi_maj(pi, c, r),
            _ => insertion::phi_den(pi, c, r).map(|(t, _)| t),
        };
    }
    let position = match scheme {
        Scheme::Rden if r == k && c > 0 => c,
        _ => k - c,
    };
    let mut out = pi.to_vec();
    out.insert(position - 1, k as u32);
    Ok(Permutation::from_vec_unchecked(out))
}

/// Remove the largest letter, returning the label it was inserted with.
fn shrink(scheme: Scheme, tau: &Permutation, r: usize) -> Result<(Permutation, usize)> {
    let k = tau.n();
    if r < k {
        let res = match scheme {
            Scheme::Rmaj => insertion::phi_maj_inverse(tau, r)?,
            _ => insertion::phi_den_inverse(tau, r)?,
        };
        return Ok((res.pi, res.c));
    }
    let position = tau.iter().position(|&l| l as usize == k).unwrap() + 1;
    let c = match scheme {
        Scheme::Rden if r == k => {
            if position == k {
                0
            } else {
                position
            }
        }
        _ => k - position,
    };
    let mut rest = tau.to_vec();
    rest.remove(position - 1);
    Ok((Permutation::from_vec_unchecked(rest), c))
}

/// Peel `π` down to the singleton, recording the labels.
pub fn encode(pi: &Permutation, scheme: Scheme, r: usize) -> Result<InsertionCode> {
    check_scheme(scheme)?;
    check_r(r)?;
    if pi.n() == 0 {
        return Err(Error::CodeLength {
            found: 0,
            expected: 1,
        });
    }
    let mut values = vec![0; pi.n() - 1];
    let mut cur = pi.clone();
    while cur.n() > 1 {
        let k = cur.n();
        let (prev, c) = shrink(scheme, &cur, r)?;
        values[k - 2] = c;
        cur = prev;
    }
    Ok(InsertionCode { scheme, r, values })
}

/// Rebuild the permutation from its labels.
pub fn decode(code: &InsertionCode) -> Result<Permutation> {
    let code = InsertionCode::new(code.scheme, code.r, code.values.clone())?;
    let mut cur = Permutation::identity(1);
    for &c in &code.values {
        cur = grow(code.scheme, &cur, c, code.r)?;
    }
    Ok(cur)
}

/// `Ψ_r`: sends `(rdes, rmaj)` to `(exc_r, den_r)` pointwise, bijectively on
/// `S_n`. For `r > n` it is the identity.
pub fn transfer_bijection(pi: &Permutation, r: usize) -> Result<Permutation> {
    let code = encode(pi, Scheme::Rmaj, r)?;
    decode(&InsertionCode {
        scheme: Scheme::Rden,
        ..code
    })
}

/// `Ψ_r^{-1}`.
pub fn transfer_inverse(tau: &Permutation, r: usize) -> Result<Permutation> {
    let code = encode(tau, Scheme::Rden, r)?;
    decode(&InsertionCode {
        scheme: Scheme::Rmaj,
        ..code
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn last_label_of_running_example() {
        let code = encode(&p("47539(10)8216"), Scheme::Rmaj, 2).unwrap();
        assert_eq!(*code.values.last().unwrap(), 7);
        assert_eq!(code.n(), 10);
    }

    #[test]
    fn identity_has_zero_code() {
        for r in 1..=7 {
            for scheme in [Scheme::Rmaj, Scheme::Rden] {
                let code = encode(&Permutation::identity(6), scheme, r).unwrap();
                assert_eq!(code.values, vec![0; 5]);
                assert_eq!(decode(&code).unwrap(), Permutation::identity(6));
            }
        }
    }

    #[test]
    fn round_trip_rden() {
        let pi = p("475398216");
        let code = encode(&pi, Scheme::Rden, 5).unwrap();
        assert_eq!(decode(&code).unwrap(), pi);
        assert_eq!(
            code.predicted_stats(),
            (stats::exc_r(&pi, 5), stats::den_r(&pi, 5))
        );
    }

    #[test]
    fn singleton() {
        let one = Permutation::identity(1);
        assert_eq!(transfer_bijection(&one, 1).unwrap(), one);
        assert!(encode(&one, Scheme::Rmaj, 3).unwrap().values.is_empty());
    }

    #[test]
    fn boundary_level_equal_to_n() {
        // at r = n the chain still carries rmaj = inv onto den_n
        let pi = p("231");
        let t = transfer_bijection(&pi, 3).unwrap();
        assert_eq!(stats::den_r(&t, 3), stats::rmaj(&pi, 3));
        assert_eq!(transfer_inverse(&t, 3).unwrap(), pi);
    }

    #[test]
    fn beyond_n_is_identity() {
        let pi = p("3142");
        assert_eq!(transfer_bijection(&pi, 5).unwrap(), pi);
        assert_eq!(transfer_bijection(&pi, 9).unwrap(), pi);
    }

    #[test]
    fn code_errors() {
        assert_eq!(
            InsertionCode::new(Scheme::Rmaj, 1, vec![1, 3]),
            Err(Error::CodeOutOfBounds {
                index: 3,
                value: 3,
                max: 2
            })
        );
        assert!(InsertionCode::new(Scheme::Den, 1, vec![]).is_err());
        assert!(InsertionCode::new(Scheme::Rmaj, 0, vec![]).is_err());
        assert_eq!(
            InsertionCode::parse_values("0, 1,2").unwrap(),
            vec![0, 1, 2]
        );
        assert!(InsertionCode::parse_values("0,x").is_err());
    }
}
