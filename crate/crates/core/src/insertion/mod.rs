//! Insertion bijections `S_{n-1} × {0, …, n-1} → S_n` and their inverses.
//!
//! * [`phi_maj`]: insert `n` at a space of the r-maj-labeling; adds `c` to
//!   `rmaj`.
//! * [`phi_han`]: Han's insertion driven by the den-labeling; adds `c` to
//!   `den`.
//! * [`alpha`], [`beta`]: the two maps covering labels that point before an
//!   index `x < r`.
//! * [`phi_den`]: dispatches to the three above by the r-level-den-labeling;
//!   adds `c` to `den_r`.

mod han;
mod level;
mod maj;
mod trace;

use serde::Serialize;

pub use han::{phi_han, phi_han_inverse};
pub use level::{alpha, alpha_inverse, beta, beta_inverse};
pub use maj::{phi_maj, phi_maj_inverse};
pub use trace::{Substitution, TraceStep, TRACE_VERSION};

use crate::error::{Error, Result};
use crate::labeling::{self, Scheme};
use crate::stats::{self, LevelClass};
use crate::word::Permutation;
use trace::Trace;

/// Which branch of the r-level insertion produced a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum InsertionCase {
    /// `c = 0`: the new maximum is appended.
    Append,
    /// Han's insertion before index `x ≥ r`, inserting `letter`.
    Han { x: usize, letter: u32 },
    /// Label before an index `x < r` with `π_x ≥ r`.
    Alpha { x: usize },
    /// Label before an index `x < r` with `π_x < r`.
    Beta { x: usize },
}

impl InsertionCase {
    pub fn name(&self) -> &'static str {
        match self {
            InsertionCase::Append => "append",
            InsertionCase::Han { .. } => "han",
            InsertionCase::Alpha { .. } => "alpha",
            InsertionCase::Beta { .. } => "beta",
        }
    }
}

/// `(π, c)` recovered from an image permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InversionResult {
    pub pi: Permutation,
    pub c: usize,
    /// `None` for the r-maj scheme, which has a single branch.
    pub case: Option<InsertionCase>,
}

pub(crate) fn check_label(c: usize, n: usize) -> Result<()> {
    if c >= n {
        return Err(Error::LabelOutOfRange { c, max: n - 1 });
    }
    Ok(())
}

/// The r-level Denert insertion: `exc_r` grows by one exactly when
/// `c > exc_r(π) + r - 1`, and `den_r` grows by `c`.
pub fn phi_den(pi: &Permutation, c: usize, r: usize) -> Result<(Permutation, InsertionCase)> {
    phi_den_traced(pi, c, r, &mut Trace::off())
}

pub(crate) fn phi_den_traced(
    pi: &Permutation,
    c: usize,
    r: usize,
    trace: &mut Trace,
) -> Result<(Permutation, InsertionCase)> {
    let n = pi.n() + 1;
    labeling::check_level(r, n)?;
    check_label(c, n)?;
    if c == 0 {
        return han::phi_han_traced(pi, 0, trace);
    }
    let x = labeling::rden_labeling(pi, r)?.space_of_label(c)?;
    if x >= r {
        debug_assert_eq!(labeling::den_labeling(pi).label_of_space(x), c);
        han::phi_han_traced(pi, c, trace)
    } else if pi.at(x) as usize >= r {
        level::alpha_traced(pi, c, r, trace)
    } else {
        level::beta_traced(pi, c, r, trace)
    }
}

/// Inverse of [`phi_den`], dispatching on whether `τ` has an r-level
/// grande-fixed place and on whether `r` is an r-level excedance place.
pub fn phi_den_inverse(tau: &Permutation, r: usize) -> Result<InversionResult> {
    labeling::check_level(r, tau.n())?;
    match stats::level_class(tau, r) {
        LevelClass::GrandeFixed => {
            let mut res = phi_han_inverse(tau)?;
            let c = stats::den_r(tau, r)
                .checked_sub(stats::den_r(&res.pi, r))
                .ok_or_else(|| Error::WrongCase {
                    map: "phi_den_inverse",
                    detail: format!("den_r decreased on {}", tau.compact()),
                })?;
            debug_assert_eq!(c, res.c);
            res.c = c;
            Ok(res)
        }
        LevelClass::Star => alpha_inverse(tau, r),
        LevelClass::NonStar => beta_inverse(tau, r),
    }
}

/// Forward insertion through any scheme, recording every intermediate word.
///
/// `r` is ignored for [`Scheme::Den`].
pub fn insert_traced(
    scheme: Scheme,
    pi: &Permutation,
    c: usize,
    r: usize,
) -> Result<(Permutation, Option<InsertionCase>, Vec<TraceStep>)> {
    let mut trace = Trace::on();
    let (tau, case) = match scheme {
        Scheme::Rmaj => (maj::phi_maj_traced(pi, c, r, &mut trace)?, None),
        Scheme::Den => {
            let (t, case) = han::phi_han_traced(pi, c, &mut trace)?;
            (t, Some(case))
        }
        Scheme::Rden => {
            let (t, case) = phi_den_traced(pi, c, r, &mut trace)?;
            (t, Some(case))
        }
    };
    Ok((tau, case, trace.into_steps()))
}

/// Forward insertion through any scheme. `r` is ignored for [`Scheme::Den`].
pub fn insert(
    scheme: Scheme,
    pi: &Permutation,
    c: usize,
    r: usize,
) -> Result<(Permutation, Option<InsertionCase>)> {
    match scheme {
        Scheme::Rmaj => Ok((phi_maj(pi, c, r)?, None)),
        Scheme::Den => phi_han(pi, c).map(|(t, case)| (t, Some(case))),
        Scheme::Rden => phi_den(pi, c, r).map(|(t, case)| (t, Some(case))),
    }
}

/// Inverse insertion through any scheme. `r` is ignored for [`Scheme::Den`].
pub fn invert(scheme: Scheme, tau: &Permutation, r: usize) -> Result<InversionResult> {
    match scheme {
        Scheme::Rmaj => phi_maj_inverse(tau, r),
        Scheme::Den => phi_han_inverse(tau),
        Scheme::Rden => phi_den_inverse(tau, r),
    }
}

/// Simultaneous letter substitution.
pub(crate) fn rename(word: &mut [u32], pairs: &[(u32, u32)]) {
    for l in word.iter_mut() {
        if let Some(&(_, to)) = pairs.iter().find(|p| p.0 == *l) {
            *l = to;
        }
    }
}

/// Pairs `chain[j] → chain[j + 1]` for `j ≥ from`.
pub(crate) fn shift_pairs(chain: &[u32], from: usize) -> Vec<(u32, u32)> {
    chain[from..].windows(2).map(|p| (p[0], p[1])).collect()
}
