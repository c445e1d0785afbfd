//! The two maps that handle labels sitting before an index `x < r`.

use super::trace::{renames, Substitution, Trace};
use super::{check_label, rename, shift_pairs, InsertionCase, InversionResult};
use crate::error::{Error, Result};
use crate::labeling;
use crate::stats::{self, LevelClass};
use crate::word::Permutation;

/// Common prefix of both maps: locate `x`, the r-level excedance chain
/// `e_1 < … < e_s < e_{s+1} = n`, and `σ` (each `e_j` replaced by `e_{j+1}`).
struct Prepared {
    x: usize,
    chain: Vec<u32>,
    sigma: Vec<u32>,
}

fn prepare(
    map: &'static str,
    pi: &Permutation,
    c: usize,
    r: usize,
    trace: &mut Trace,
) -> Result<Prepared> {
    let n = pi.n() + 1;
    labeling::check_level(r, n)?;
    check_label(c, n)?;
    let wrong = |detail: String| Error::WrongCase { map, detail };
    if c == 0 {
        return Err(wrong("label 0 appends".into()));
    }
    let x = labeling::rden_labeling(pi, r)?.space_of_label(c)?;
    if x >= r {
        return Err(wrong(format!("label {c} sits before index {x} >= r")));
    }
    let mut chain = stats::level_excedance_letters(pi, r);
    chain.push(n as u32);
    let pairs = shift_pairs(&chain, 0);
    let mut sigma = pi.to_vec();
    rename(&mut sigma, &pairs);
    trace.record(
        || "replace each r-level excedance letter e_j by e_{j+1}, with e_{s+1} = n".into(),
        pi,
        &sigma,
        || renames(&pairs),
    );
    Ok(Prepared { x, chain, sigma })
}

/// Overwrite `σ_x` by `e_1`, push the letters at `targets[y..]` one step
/// right along `targets`, and reinsert the displaced last one before
/// position `r`. All reads come from the unmodified `σ`.
fn cascade(
    sigma: &[u32],
    targets: &[usize],
    y: usize,
    e1: u32,
    r: usize,
) -> (Vec<u32>, Vec<Substitution>) {
    let mut out = sigma.to_vec();
    let mut subs = vec![Substitution::Overwrite {
        position: targets[y],
        from: sigma[targets[y] - 1],
        to: e1,
    }];
    out[targets[y] - 1] = e1;
    for j in y + 1..targets.len() {
        let from = sigma[targets[j] - 1];
        let to = sigma[targets[j - 1] - 1];
        out[targets[j] - 1] = to;
        subs.push(Substitution::Overwrite {
            position: targets[j],
            from,
            to,
        });
    }
    let last = sigma[*targets.last().unwrap() - 1];
    out.insert(r - 1, last);
    subs.push(Substitution::Insert {
        position: r,
        letter: last,
    });
    (out, subs)
}

/// Label `c` points before an index `x` with `x < r ≤ π_x`. The image has
/// no r-level grande-fixed place and has an r-level excedance at `r`;
/// `exc_r` grows by one and `den_r` by `c`.
pub fn alpha(pi: &Permutation, c: usize, r: usize) -> Result<Permutation> {
    alpha_traced(pi, c, r, &mut Trace::off()).map(|(t, _)| t)
}

pub(crate) fn alpha_traced(
    pi: &Permutation,
    c: usize,
    r: usize,
    trace: &mut Trace,
) -> Result<(Permutation, InsertionCase)> {
    let Prepared { x, chain, sigma } = prepare("alpha", pi, c, r, trace)?;
    let (a, _) = stats::ab_sets(pi, r);
    let y = a
        .iter()
        .position(|&i| i == x)
        .ok_or_else(|| Error::WrongCase {
            map: "alpha",
            detail: format!("index {x} is not in A(π)"),
        })?;
    let (out, subs) = cascade(&sigma, &a, y, chain[0], r);
    trace.record(
        || format!("place e_1 at index {x}, shift along A(π), insert before position {r}"),
        &sigma,
        &out,
        || subs,
    );
    Ok((
        Permutation::from_vec_unchecked(out),
        InsertionCase::Alpha { x },
    ))
}

/// Label `c` points before an index `x < r` with `π_x < r`. The image has no
/// r-level grande-fixed place and no r-level excedance at `r`; `exc_r` is
/// unchanged and `den_r` grows by `c`.
pub fn beta(pi: &Permutation, c: usize, r: usize) -> Result<Permutation> {
    beta_traced(pi, c, r, &mut Trace::off()).map(|(t, _)| t)
}

pub(crate) fn beta_traced(
    pi: &Permutation,
    c: usize,
    r: usize,
    trace: &mut Trace,
) -> Result<(Permutation, InsertionCase)> {
    let Prepared { x, chain, sigma } = prepare("beta", pi, c, r, trace)?;
    let (_, b) = stats::ab_sets(pi, r);
    let y = b
        .iter()
        .position(|&i| i == x)
        .ok_or_else(|| Error::WrongCase {
            map: "beta",
            detail: format!("index {x} is not in B(π)"),
        })?;
    let (sigma2, subs) = cascade(&sigma, &b, y, chain[0], r);
    trace.record(
        || format!("place e_1 at index {x}, shift along B(π), insert before position {r}"),
        &sigma,
        &sigma2,
        || subs,
    );

    // Rotate the r-level excedance letters left of position r: the smallest
    // takes the largest value, every other one takes its predecessor.
    let left = left_level_letters(&sigma2, r);
    let mut pairs: Vec<(u32, u32)> = left.windows(2).map(|p| (p[1], p[0])).collect();
    if let (Some(&first), Some(&last)) = (left.first(), left.last()) {
        pairs.push((first, last));
    }
    let mut out = sigma2.clone();
    rename(&mut out, &pairs);
    trace.record(
        || format!("rotate the r-level excedance letters left of position {r}"),
        &sigma2,
        &out,
        || renames(&pairs),
    );
    Ok((
        Permutation::from_vec_unchecked(out),
        InsertionCase::Beta { x },
    ))
}

/// Increasing r-level excedance letters at positions `< r`.
fn left_level_letters(w: &[u32], r: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (1..r.min(w.len() + 1))
        .filter(|&i| stats::is_level_excedance_place(w, i, r))
        .map(|i| w[i - 1])
        .collect();
    out.sort_unstable();
    out
}

/// Undo the first step: the r-level excedance letters `g_1 < … < g_h` of
/// `σ` become `g_0 < g_1 < … < g_{h-1}`.
fn unshift(sigma: &mut [u32], g0: u32, r: usize) {
    let g = stats::level_excedance_letters(sigma, r);
    let mut pairs = Vec::with_capacity(g.len());
    let mut prev = g0;
    for &l in &g {
        pairs.push((l, prev));
        prev = l;
    }
    rename(sigma, &pairs);
}

fn finish(
    map: &'static str,
    tau: &Permutation,
    sigma: Vec<u32>,
    r: usize,
    case: InsertionCase,
) -> Result<InversionResult> {
    let pi = Permutation::new(sigma).map_err(|e| Error::WrongCase {
        map,
        detail: e.to_string(),
    })?;
    let c = stats::den_r(tau, r)
        .checked_sub(stats::den_r(&pi, r))
        .ok_or_else(|| Error::WrongCase {
            map,
            detail: format!("den_r decreased on {}", tau.compact()),
        })?;
    #[cfg(debug_assertions)]
    if let InsertionCase::Alpha { x } | InsertionCase::Beta { x } = case {
        let lab = labeling::rden_labeling(&pi, r).unwrap();
        debug_assert_eq!(lab.label_of_space(x), c, "{map} on {}", tau.compact());
    }
    Ok(InversionResult {
        pi,
        c,
        case: Some(case),
    })
}

fn require_class(map: &'static str, tau: &Permutation, r: usize, want: LevelClass) -> Result<()> {
    labeling::check_level(r, tau.n())?;
    let got = stats::level_class(tau, r);
    if got != want {
        return Err(Error::WrongCase {
            map,
            detail: format!("{} is in class {got:?}, expected {want:?}", tau.compact()),
        });
    }
    Ok(())
}

/// Recover `(π, c)` from an image of [`alpha`].
pub fn alpha_inverse(tau: &Permutation, r: usize) -> Result<InversionResult> {
    require_class("alpha_inverse", tau, r, LevelClass::Star)?;
    let places = stats::r_excedance(tau, r).places;
    // position of the smallest r-level excedance letter
    let w = *places.iter().min_by_key(|&&i| tau.at(i)).unwrap();
    if w > r {
        return Err(Error::WrongCase {
            map: "alpha_inverse",
            detail: format!("smallest r-level excedance letter sits right of {r}"),
        });
    }
    let run: Vec<usize> = places.into_iter().filter(|&i| i >= w && i <= r).collect();
    let mut sigma = tau.to_vec();
    for k in 1..run.len() {
        sigma[run[k - 1] - 1] = tau.at(run[k]);
    }
    sigma.remove(r - 1);
    unshift(&mut sigma, tau.at(w), r);
    finish(
        "alpha_inverse",
        tau,
        sigma,
        r,
        InsertionCase::Alpha { x: w },
    )
}

/// Recover `(π, c)` from an image of [`beta`].
pub fn beta_inverse(tau: &Permutation, r: usize) -> Result<InversionResult> {
    require_class("beta_inverse", tau, r, LevelClass::NonStar)?;
    let left = left_level_letters(tau, r);
    let (&smallest, &greatest) = match (left.first(), left.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::WrongCase {
                map: "beta_inverse",
                detail: format!("no r-level excedance left of position {r}"),
            })
        }
    };
    let w = tau.iter().position(|&l| l == greatest).unwrap() + 1;

    // undo the rotation
    let mut pairs: Vec<(u32, u32)> = left.windows(2).map(|p| (p[0], p[1])).collect();
    pairs.push((greatest, smallest));
    let mut sigma2 = tau.to_vec();
    rename(&mut sigma2, &pairs);

    // undo the cascade along the non-excedance places in (w, r]
    let run: Vec<usize> = (w + 1..=r)
        .filter(|&i| !stats::is_level_excedance_place(&sigma2, i, r))
        .collect();
    let mut sigma = sigma2.clone();
    let mut prev = w;
    for &i in &run {
        sigma[prev - 1] = sigma2[i - 1];
        prev = i;
    }
    sigma.remove(r - 1);
    unshift(&mut sigma, sigma2[w - 1], r);
    finish("beta_inverse", tau, sigma, r, InsertionCase::Beta { x: w })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_running_example() {
        let pi = p("836295417");
        let tau = alpha(&pi, 6, 5).unwrap();
        assert_eq!(tau.compact(), "63928(10)5417");
        assert_eq!(stats::den_r(&pi, 5), 16);
        assert_eq!(stats::den_r(&tau, 5), 22);
        assert_eq!(stats::exc_r(&tau, 5), 2);
        let back = alpha_inverse(&tau, 5).unwrap();
        assert_eq!((back.pi, back.c), (pi, 6));
    }

    #[test]
    fn beta_running_example() {
        let pi = p("836295417");
        let tau = beta(&pi, 4, 5).unwrap();
        assert_eq!(tau.compact(), "89632(10)5417");
        assert_eq!(stats::den_r(&tau, 5), 20);
        assert_eq!(stats::exc_r(&tau, 5), 1);
        assert_eq!(left_level_letters(&tau, 5), vec![6, 8, 9]);
        let back = beta_inverse(&tau, 5).unwrap();
        assert_eq!((back.pi, back.c), (pi, 4));
        assert_eq!(back.case, Some(InsertionCase::Beta { x: 2 }));
    }

    #[test]
    fn wrong_branch_is_an_error() {
        let pi = p("836295417");
        // label 4 is a B-space, label 6 an A-space, label 8 a Han space
        assert!(matches!(alpha(&pi, 4, 5), Err(Error::WrongCase { .. })));
        assert!(matches!(beta(&pi, 6, 5), Err(Error::WrongCase { .. })));
        assert!(matches!(alpha(&pi, 8, 5), Err(Error::WrongCase { .. })));
        assert!(matches!(beta(&pi, 0, 5), Err(Error::WrongCase { .. })));
        assert!(alpha_inverse(&p("89632(10)5417"), 5).is_err());
        assert!(beta_inverse(&p("63928(10)5417"), 5).is_err());
        assert!(beta_inverse(&p("93826(10)5417"), 5).is_err());
    }
}
