use super::trace::{Substitution, Trace};
use super::{check_label, InversionResult};
use crate::error::{Error, Result};
use crate::labeling;
use crate::stats;
use crate::word::Permutation;

/// Rawlings' insertion: put `n` into the space labeled `c` by the
/// r-maj-labeling of `π ∈ S_{n-1}`.
pub fn phi_maj(pi: &Permutation, c: usize, r: usize) -> Result<Permutation> {
    phi_maj_traced(pi, c, r, &mut Trace::off())
}

pub(crate) fn phi_maj_traced(
    pi: &Permutation,
    c: usize,
    r: usize,
    trace: &mut Trace,
) -> Result<Permutation> {
    let n = pi.n() + 1;
    let lab = labeling::rmaj_labeling(pi, r)?;
    check_label(c, n)?;
    let space = lab.space_of_label(c)?;
    let mut out = pi.to_vec();
    out.insert(space - 1, n as u32);
    trace.record(
        || format!("insert {n} at the space labeled {c}"),
        pi,
        &out,
        || {
            vec![Substitution::Insert {
                position: space,
                letter: n as u32,
            }]
        },
    );
    Ok(Permutation::from_vec_unchecked(out))
}

/// Remove `n` from `τ`; the label of the vacated space is `rmaj(τ) - rmaj(π)`.
pub fn phi_maj_inverse(tau: &Permutation, r: usize) -> Result<InversionResult> {
    let n = tau.n();
    labeling::check_level(r, n)?;
    let at = tau.iter().position(|&l| l as usize == n).unwrap();
    let mut rest = tau.to_vec();
    rest.remove(at);
    let pi = Permutation::from_vec_unchecked(rest);
    let c = stats::rmaj(tau, r)
        .checked_sub(stats::rmaj(&pi, r))
        .ok_or_else(|| Error::WrongCase {
            map: "phi_maj_inverse",
            detail: format!("rmaj decreased on {}", tau.compact()),
        })?;
    debug_assert_eq!(
        labeling::rmaj_labeling(&pi, r)
            .unwrap()
            .label_of_space(at + 1),
        c
    );
    Ok(InversionResult { pi, c, case: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn running_example() {
        let pi = p("475398216");
        let tau = phi_maj(&pi, 7, 2).unwrap();
        assert_eq!(tau.compact(), "47539(10)8216");
        let back = phi_maj_inverse(&tau, 2).unwrap();
        assert_eq!((back.pi, back.c), (pi, 7));
    }

    #[test]
    fn label_zero_appends() {
        let pi = p("3142");
        let tau = phi_maj(&pi, 0, 2).unwrap();
        assert_eq!(tau, p("31425"));
        assert_eq!(stats::rmaj(&tau, 2), stats::rmaj(&pi, 2));
        assert_eq!(phi_maj_inverse(&tau, 2).unwrap().c, 0);
    }

    #[test]
    fn small_case() {
        let tau = phi_maj(&p("21"), 2, 1).unwrap();
        assert_eq!(tau, p("321"));
        assert_eq!(stats::maj(&tau), 3);
        let tau = phi_maj(&p("21"), 1, 1).unwrap();
        assert_eq!(tau, p("231"));
        assert_eq!(stats::maj(&tau), 2);
    }

    #[test]
    fn errors() {
        assert!(phi_maj(&p("21"), 3, 1).is_err());
        assert!(phi_maj(&p("21"), 1, 3).is_err());
        assert!(phi_maj_inverse(&p("21"), 2).is_err());
    }
}
