use std::str::FromStr;

use super::distribution::{check_params, guard, tabulate, JointDistribution, StatPair};
use super::enumerate::{factorial, rank_lex, Enumerator};
use super::qpoly::QPolynomial;
use super::{Probe, VerificationReport};
use crate::error::{Error, Result};
use crate::insertion::{self, InsertionCase};
use crate::labeling;
use crate::stats;
use crate::transfer;
use crate::word::{text_string, Permutation, Word};

/// Groups of identities selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    All,
    Equidist,
    Macmahon,
    Denert,
    Boundary,
    Lemmas,
    Transfer,
    Examples,
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Identity::All,
            "equidist" => Identity::Equidist,
            "macmahon" => Identity::Macmahon,
            "denert" => Identity::Denert,
            "boundary" => Identity::Boundary,
            "lemmas" => Identity::Lemmas,
            "transfer" => Identity::Transfer,
            "examples" => Identity::Examples,
            _ => {
                return Err(Error::Unknown {
                    what: "identity",
                    value: s.to_string(),
                })
            }
        })
    }
}

/// Run one group (or all) of identities for `n ≤ n_max`, `r ≤ r_max`.
pub fn check_all(
    identity: Identity,
    enumerator: &Enumerator,
    n_max: usize,
    r_max: usize,
    max_n: usize,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let all = identity == Identity::All;
    if all || identity == Identity::Examples {
        out.push(check_worked_examples());
    }
    if all || identity == Identity::Equidist {
        out.extend(check_equidistribution(enumerator, n_max, r_max, max_n)?);
    }
    if all || identity == Identity::Macmahon {
        out.extend(check_macmahon(enumerator, n_max, max_n)?);
    }
    if all || identity == Identity::Denert {
        out.extend(check_denert(enumerator, n_max, max_n)?);
    }
    if all || identity == Identity::Boundary {
        out.extend(check_boundary(enumerator, n_max, max_n)?);
    }
    if all || identity == Identity::Lemmas {
        guard(n_max, max_n)?;
        out.extend(super::check_lemma_contracts(n_max));
    }
    if all || identity == Identity::Transfer {
        out.extend(check_transfer(enumerator, n_max, r_max, max_n)?);
    }
    Ok(out)
}

/// First permutation (lexicographic) on which `f` holds.
fn first_where(n: usize, f: impl Fn(&[u32]) -> bool) -> Option<Vec<u32>> {
    super::all_permutations(n)
        .find(|p| f(p))
        .map(Permutation::into_letters)
}

fn describe_difference(
    lhs: &JointDistribution,
    rhs: &JointDistribution,
    witness: impl Fn((usize, usize)) -> Option<Vec<u32>>,
) -> Option<String> {
    let (key, x, y) = lhs.differences(rhs).into_iter().next()?;
    let w = witness(key)
        .map(|p| text_string(&p))
        .unwrap_or_else(|| "none".into());
    Some(format!(
        "coefficient of t^{}q^{}: {} has {x}, {} has {y}; first permutation with this value: {w}",
        key.0, key.1, lhs.pair, rhs.pair
    ))
}

/// `(rdes, rmaj)` and `(exc_r, den_r)` have the same joint distribution.
pub fn check_equidistribution(
    enumerator: &Enumerator,
    n_max: usize,
    r_max: usize,
    max_n: usize,
) -> Result<Vec<VerificationReport>> {
    guard(n_max, max_n)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        for r in 1..=r_max {
            check_params(n, r)?;
            let mut probe = Probe::start();
            let [lhs, rhs] = tabulate(enumerator, n, |p| {
                [StatPair::RdesRmaj.eval(p, r), StatPair::ExcrDenr.eval(p, r)]
            });
            let lhs = wrap(n, r, StatPair::RdesRmaj, lhs.into_map());
            let rhs = wrap(n, r, StatPair::ExcrDenr, rhs.into_map());
            probe.examined = factorial(n);
            if let Some(msg) = describe_difference(&lhs, &rhs, |key| {
                first_where(n, |p| {
                    StatPair::RdesRmaj.eval(p, r) == key || StatPair::ExcrDenr.eval(p, r) == key
                })
            }) {
                probe.fail(|| msg);
            }
            out.push(probe.finish("equidistribution", n, Some(r)));
        }
    }
    Ok(out)
}

fn wrap(
    n: usize,
    r: usize,
    pair: StatPair,
    counts: std::collections::BTreeMap<(usize, usize), u64>,
) -> JointDistribution {
    JointDistribution { n, r, pair, counts }
}

/// `Σ q^inv = Σ q^maj = [n]_q!`.
pub fn check_macmahon(
    enumerator: &Enumerator,
    n_max: usize,
    max_n: usize,
) -> Result<Vec<VerificationReport>> {
    guard(n_max, max_n)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut probe = Probe::start();
        let [inv, maj] = tabulate(enumerator, n, |p| [(0, stats::inv(p)), (0, stats::maj(p))]);
        let inv = wrap(n, 1, StatPair::DesMaj, inv.into_map()).q_marginal();
        let maj = wrap(n, 1, StatPair::DesMaj, maj.into_map()).q_marginal();
        let product = QPolynomial::q_factorial(n);
        probe.examined = factorial(n);
        probe.check(inv == product, || {
            format!("sum of q^inv = {inv}, but [n]_q! = {product}")
        });
        probe.check(maj == product, || {
            format!("sum of q^maj = {maj}, but [n]_q! = {product}")
        });
        out.push(probe.finish("macmahon", n, None));
    }
    Ok(out)
}

/// `(des, maj)` and `(exc, den)` have the same joint distribution.
pub fn check_denert(
    enumerator: &Enumerator,
    n_max: usize,
    max_n: usize,
) -> Result<Vec<VerificationReport>> {
    guard(n_max, max_n)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut probe = Probe::start();
        let [lhs, rhs] = tabulate(enumerator, n, |p| {
            [StatPair::DesMaj.eval(p, 1), StatPair::ExcDen.eval(p, 1)]
        });
        let lhs = wrap(n, 1, StatPair::DesMaj, lhs.into_map());
        let rhs = wrap(n, 1, StatPair::ExcDen, rhs.into_map());
        probe.examined = factorial(n);
        if let Some(msg) = describe_difference(&lhs, &rhs, |key| {
            first_where(n, |p| {
                StatPair::DesMaj.eval(p, 1) == key || StatPair::ExcDen.eval(p, 1) == key
            })
        }) {
            probe.fail(|| msg);
        }
        out.push(probe.finish("denert", n, None));
    }
    Ok(out)
}

/// Earliest (by lexicographic rank) permutation satisfying `bad`.
fn first_bad(
    enumerator: &Enumerator,
    n: usize,
    bad: impl Fn(&[u32]) -> bool + Sync,
) -> Option<Vec<u32>> {
    enumerator
        .fold(
            n,
            || None::<(u64, Vec<u32>)>,
            |acc, p| {
                if acc.is_none() && bad(p) {
                    *acc = Some((rank_lex(p), p.to_vec()));
                }
            },
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                (x, y) => x.or(y),
            },
        )
        .map(|(_, p)| p)
}

/// `den_r = inv` pointwise once `r > n`; at `r = n` only the distributions
/// agree, and the first pointwise witness is reported as a note.
pub fn check_boundary(
    enumerator: &Enumerator,
    n_max: usize,
    max_n: usize,
) -> Result<Vec<VerificationReport>> {
    guard(n_max, max_n)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut probe = Probe::start();
        let r = n + 1;
        let bad = first_bad(enumerator, n, |p| stats::den_r(p, r) != stats::inv(p));
        probe.examined = factorial(n);
        if let Some(p) = bad {
            probe.fail(|| {
                format!(
                    "{}: den_{r}={} but inv={}",
                    text_string(&p),
                    stats::den_r(&p, r),
                    stats::inv(&p)
                )
            });
        }
        out.push(probe.finish("den-r-equals-inv-pointwise", n, Some(r)));

        let mut probe = Probe::start();
        let r = n;
        let [den, inv] = tabulate(enumerator, n, |p| {
            [(0, stats::den_r(p, r)), (0, stats::inv(p))]
        });
        let den = wrap(n, r, StatPair::ExcrDenr, den.into_map()).q_marginal();
        let inv = wrap(n, r, StatPair::ExcrDenr, inv.into_map()).q_marginal();
        probe.examined = factorial(n);
        probe.check(den == inv, || {
            format!("sum of q^den_{r} = {den}, sum of q^inv = {inv}")
        });
        if let Some(p) = first_bad(enumerator, n, |p| stats::den_r(p, r) != stats::inv(p)) {
            probe.note(format!(
                "pointwise equality fails at r=n: {} has den_{r}={}, inv={}",
                text_string(&p),
                stats::den_r(&p, r),
                stats::inv(&p)
            ));
        }
        out.push(probe.finish("den-n-equidistributed-with-inv", n, Some(r)));
    }
    Ok(out)
}

/// `Ψ_r` carries `(rdes, rmaj)` to `(exc_r, den_r)` pointwise and is a
/// bijection on `S_n`, with [`transfer::transfer_inverse`] as its inverse.
pub fn check_transfer(
    enumerator: &Enumerator,
    n_max: usize,
    r_max: usize,
    max_n: usize,
) -> Result<Vec<VerificationReport>> {
    guard(n_max, max_n)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        for r in 1..=r_max {
            let mut probe = Probe::start();
            let total = factorial(n) as usize;
            let (seen, failure) = enumerator.fold(
                n,
                || (vec![false; total], None::<(u64, String)>),
                |(seen, failure), p| {
                    let pi = Permutation::from_vec_unchecked(p.to_vec());
                    let msg = transfer_failure(&pi, r, seen);
                    if let (None, Some(m)) = (&failure, msg) {
                        *failure = Some((rank_lex(p), m));
                    }
                },
                |(mut sa, fa), (sb, fb)| {
                    let mut dup = None;
                    for (k, (x, y)) in sa.iter_mut().zip(sb).enumerate() {
                        if *x && y && dup.is_none() {
                            dup = Some((u64::MAX, format!("image rank {k} hit twice")));
                        }
                        *x |= y;
                    }
                    let f = match (fa, fb) {
                        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                        (x, y) => x.or(y),
                    };
                    (sa, f.or(dup))
                },
            );
            probe.examined = total as u64;
            if let Some((_, m)) = failure {
                probe.fail(|| m);
            }
            let hit = seen.iter().filter(|&&b| b).count();
            probe.check(hit == total, || {
                format!("image has {hit} of {total} permutations")
            });
            out.push(probe.finish("transfer", n, Some(r)));
        }
    }
    Ok(out)
}

fn transfer_failure(pi: &Permutation, r: usize, seen: &mut [bool]) -> Option<String> {
    let tau = match transfer::transfer_bijection(pi, r) {
        Ok(t) => t,
        Err(e) => return Some(format!("{}: {e}", pi)),
    };
    let k = rank_lex(&tau) as usize;
    if std::mem::replace(&mut seen[k], true) {
        return Some(format!("{} maps onto an image hit twice", pi));
    }
    let before = StatPair::RdesRmaj.eval(pi, r);
    let after = StatPair::ExcrDenr.eval(&tau, r);
    if before != after {
        return Some(format!(
            "{} -> {}: (rdes, rmaj)={before:?} but (exc_r, den_r)={after:?}",
            pi, tau
        ));
    }
    match transfer::transfer_inverse(&tau, r) {
        Ok(back) if back == *pi => None,
        Ok(back) => Some(format!("{} -> {} -> {}", pi, tau, back)),
        Err(e) => Some(format!("inverse on {}: {e}", tau)),
    }
}

/// Every worked value quoted with the definitions, reproduced exactly.
pub fn check_worked_examples() -> VerificationReport {
    let mut probe = Probe::start();
    for (name, ok) in worked_examples() {
        probe.examined += 1;
        probe.check(ok, || format!("worked example `{name}` does not reproduce"));
    }
    probe.finish("worked-examples", 10, None)
}

fn p(s: &str) -> Permutation {
    s.parse().expect("worked example literal")
}

fn w(s: &str) -> Word {
    s.parse().expect("worked example literal")
}

pub(crate) fn worked_examples() -> Vec<(&'static str, bool)> {
    let run = p("475398216");
    let han = p("836295417");
    let gf = stats::grande_fixed_places(&w("816259437"));
    let gf3 = stats::r_grande_fixed_places(&w("436259817"), 3);
    let lev = stats::r_excedance(&run, 5);
    let compact = |r: crate::error::Result<Permutation>| r.map(|t| t.compact()).unwrap_or_default();
    vec![
        (
            "Des(475398216)",
            stats::descent_set(&run) == [2, 3, 5, 6, 7],
        ),
        (
            "des/maj(475398216) = 5/23",
            (stats::des(&run), stats::maj(&run)) == (5, 23),
        ),
        (
            "Excp(475398216)",
            stats::excedance_places(&run) == [1, 2, 3, 5, 6],
        ),
        ("den(475398216) = 22", stats::den(&run) == 22),
        (
            "rDes_2(475398216)",
            stats::r_descent_set(&run, 2) == [2, 3, 6],
        ),
        ("rmaj_2(475398216) = 16", stats::rmaj(&run, 2) == 16),
        ("Excp_5(475398216)", lev.places == [2, 3, 5, 6]),
        ("Excl_5(475398216)", lev.letters == [5, 7, 8, 9]),
        ("den_5(475398216) = 24", stats::den_r(&run, 5) == 24),
        ("exc_5(475398216) = 2", stats::exc_r(&run, 5) == 2),
        (
            "grande-fixed places of 816259437",
            gf.contains(&3) && gf.contains(&5) && !gf.contains(&1) && !gf.contains(&6),
        ),
        (
            "3-level grande-fixed places of 436259817",
            gf3.contains(&5) && gf3.contains(&7) && !gf3.contains(&3) && !gf3.contains(&6),
        ),
        (
            "2-maj-labeling of 475398216",
            labeling::rmaj_labeling(&run, 2).map(|l| l.labels).ok()
                == Some(vec![5, 6, 4, 3, 2, 7, 1, 8, 9, 0]),
        ),
        (
            "S(475398216) for r=2",
            labeling::s_set(&run, 2) == [2, 3, 5, 9],
        ),
        (
            "den-labeling of 836295417",
            labeling::den_labeling(&han).labels == [5, 6, 4, 7, 8, 3, 9, 2, 1, 0],
        ),
        (
            "insertion letters of 836295417",
            labeling::den_labeling(&han).insertion_letters
                == Some(vec![3, 3, 3, 6, 6, 6, 8, 8, 9, 10]),
        ),
        (
            "5-level-den-labeling of 836295417",
            labeling::rden_labeling(&han, 5).map(|l| l.labels).ok()
                == Some(vec![6, 4, 7, 5, 8, 3, 9, 2, 1, 0]),
        ),
        (
            "phi^maj_{2,10}(475398216, 7)",
            compact(insertion::phi_maj(&run, 7, 2)) == "47539(10)8216",
        ),
        (
            "phi_10(836295417, 8)",
            compact(insertion::phi_han(&han, 8).map(|t| t.0)) == "93826(10)5417",
        ),
        (
            "alpha_{5,10}(836295417, 6)",
            compact(insertion::alpha(&han, 6, 5)) == "63928(10)5417",
        ),
        (
            "beta_{5,10}(836295417, 4)",
            compact(insertion::beta(&han, 4, 5)) == "89632(10)5417",
        ),
        (
            "phi^den_{5,10}(836295417, 8) takes the Han branch",
            insertion::phi_den(&han, 8, 5)
                .ok()
                .map(|(t, c)| (t.compact(), c))
                == Some((
                    "93826(10)5417".into(),
                    InsertionCase::Han { x: 5, letter: 6 },
                )),
        ),
    ]
}
