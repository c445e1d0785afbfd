use super::enumerate::{all_permutations, factorial, rank_lex};
use super::{Probe, VerificationReport};
use crate::insertion::{self, InsertionCase};
use crate::stats::{self, LevelClass};
use crate::word::Permutation;

/// Images seen so far, indexed by lexicographic rank.
struct Image {
    seen: Vec<bool>,
    size: usize,
}

impl Image {
    fn new(n: usize) -> Self {
        Image {
            seen: vec![false; factorial(n) as usize],
            size: 0,
        }
    }

    /// False if `tau` was already hit.
    fn hit(&mut self, tau: &[u32]) -> bool {
        let k = rank_lex(tau) as usize;
        if self.seen[k] {
            return false;
        }
        self.seen[k] = true;
        self.size += 1;
        true
    }
}

fn show(pi: &Permutation, c: usize, tau: &Permutation) -> String {
    format!("({}, {c}) -> {}", pi, tau)
}

/// Every insertion-map contract, exhaustively for `2 ≤ n ≤ n_max` and
/// `1 ≤ r < n`.
pub fn check_lemma_contracts(n_max: usize) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.push(han_contract(n));
        for r in 1..n {
            out.push(rawlings_contract(n, r));
            out.extend(level_contracts(n, r));
        }
    }
    out
}

fn rawlings_contract(n: usize, r: usize) -> VerificationReport {
    let mut probe = Probe::start();
    let mut image = Image::new(n);
    for pi in all_permutations(n - 1) {
        let (t, q) = (stats::rdes(&pi, r), stats::rmaj(&pi, r));
        for c in 0..n {
            probe.examined += 1;
            let tau = match insertion::phi_maj(&pi, c, r) {
                Ok(tau) => tau,
                Err(e) => {
                    probe.fail(|| format!("({}, {c}): {e}", pi));
                    continue;
                }
            };
            let jump = usize::from(c + 1 > t + r);
            probe.check(stats::rmaj(&tau, r) == q + c, || {
                format!("{}: rmaj does not grow by c", show(&pi, c, &tau))
            });
            probe.check(stats::rdes(&tau, r) == t + jump, || {
                format!("{}: rdes jump rule broken", show(&pi, c, &tau))
            });
            probe.check(image.hit(&tau), || {
                format!("{}: image hit twice", show(&pi, c, &tau))
            });
            let back = insertion::phi_maj_inverse(&tau, r);
            probe.check(matches!(&back, Ok(b) if b.pi == pi && b.c == c), || {
                format!("{}: inverse gives {back:?}", show(&pi, c, &tau))
            });
        }
    }
    probe.check(image.size as u64 == factorial(n), || {
        format!("image has {} of {} permutations", image.size, factorial(n))
    });
    probe.finish("rawlings-insertion", n, Some(r))
}

fn han_contract(n: usize) -> VerificationReport {
    let mut probe = Probe::start();
    let mut image = Image::new(n);
    for pi in all_permutations(n - 1) {
        let (e, d) = (stats::exc(&pi), stats::den(&pi));
        for c in 0..n {
            probe.examined += 1;
            let (tau, case) = match insertion::phi_han(&pi, c) {
                Ok(v) => v,
                Err(e) => {
                    probe.fail(|| format!("({}, {c}): {e}", pi));
                    continue;
                }
            };
            probe.check(stats::den(&tau) == d + c, || {
                format!("{}: den does not grow by c", show(&pi, c, &tau))
            });
            probe.check(stats::exc(&tau) == e + usize::from(c > e), || {
                format!("{}: exc jump rule broken", show(&pi, c, &tau))
            });
            let target = match case {
                InsertionCase::Han { x, .. } => x,
                _ => n,
            };
            probe.check(
                stats::greatest_grande_fixed_place(&tau) == Some(target),
                || {
                    format!(
                        "{}: greatest grande-fixed place is not {target}",
                        show(&pi, c, &tau)
                    )
                },
            );
            probe.check(image.hit(&tau), || {
                format!("{}: image hit twice", show(&pi, c, &tau))
            });
            let back = insertion::phi_han_inverse(&tau);
            probe.check(matches!(&back, Ok(b) if b.pi == pi && b.c == c), || {
                format!("{}: inverse gives {back:?}", show(&pi, c, &tau))
            });
        }
    }
    probe.check(image.size as u64 == factorial(n), || {
        format!("image has {} of {} permutations", image.size, factorial(n))
    });
    probe.finish("han-insertion", n, None)
}

/// One branch of the r-level insertion: its probe and its image.
struct Branch {
    probe: Probe,
    image: Image,
    class: LevelClass,
}

impl Branch {
    fn new(n: usize, class: LevelClass) -> Self {
        Branch {
            probe: Probe::start(),
            image: Image::new(n),
            class,
        }
    }
}

fn level_contracts(n: usize, r: usize) -> Vec<VerificationReport> {
    let names = ["han-branch", "alpha", "beta"];
    let mut branches = [
        Branch::new(n, LevelClass::GrandeFixed),
        Branch::new(n, LevelClass::Star),
        Branch::new(n, LevelClass::NonStar),
    ];
    let mut whole = Probe::start();
    let mut image = Image::new(n);
    for pi in all_permutations(n - 1) {
        let (e, d) = (stats::exc_r(&pi, r), stats::den_r(&pi, r));
        let mut level = stats::level_excedance_letters(&pi, r);
        level.push(n as u32);
        for c in 0..n {
            whole.examined += 1;
            let (tau, case) = match insertion::phi_den(&pi, c, r) {
                Ok(v) => v,
                Err(e) => {
                    whole.fail(|| format!("({}, {c}): {e}", pi));
                    continue;
                }
            };
            let k = match case {
                InsertionCase::Append | InsertionCase::Han { .. } => 0,
                InsertionCase::Alpha { .. } => 1,
                InsertionCase::Beta { .. } => 2,
            };
            let b = &mut branches[k];
            b.probe.examined += 1;
            let tag = || show(&pi, c, &tau);
            let (e2, d2) = (stats::exc_r(&tau, r), stats::den_r(&tau, r));
            let jump = usize::from(c + 1 > e + r);
            b.probe.check(d2 == d + c, || {
                format!("{}: den_r does not grow by c", tag())
            });
            b.probe.check(e2 == e + jump, || {
                format!("{}: exc_r jump rule broken", tag())
            });
            match k {
                1 => b
                    .probe
                    .check(jump == 1, || format!("{}: alpha must raise exc_r", tag())),
                2 => b
                    .probe
                    .check(jump == 0, || format!("{}: beta must keep exc_r", tag())),
                _ => {}
            }
            let class = stats::level_class(&tau, r);
            b.probe.check(class == b.class, || {
                format!("{}: lands in {class:?}, expected {:?}", tag(), b.class)
            });
            if k > 0 {
                b.probe
                    .check(stats::level_excedance_letters(&tau, r) == level, || {
                        format!(
                            "{}: r-level excedance letters are not those of π plus n",
                            tag()
                        )
                    });
            }
            b.probe
                .check(b.image.hit(&tau), || format!("{}: image hit twice", tag()));
            image.hit(&tau);
            let back = insertion::phi_den_inverse(&tau, r);
            b.probe.check(
                matches!(&back, Ok(v) if v.pi == pi && v.c == c && v.case == Some(case)),
                || format!("{}: inverse gives {back:?}", tag()),
            );
        }
    }

    let mut classes = [0u64; 3];
    for tau in all_permutations(n) {
        classes[match stats::level_class(&tau, r) {
            LevelClass::GrandeFixed => 0,
            LevelClass::Star => 1,
            LevelClass::NonStar => 2,
        }] += 1;
        let back = insertion::phi_den_inverse(&tau, r);
        let ok = match &back {
            Ok(v) => insertion::phi_den(&v.pi, v.c, r).map(|t| t.0).ok() == Some(tau.clone()),
            Err(_) => false,
        };
        whole.check(ok, || {
            format!("{}: inverse then forward gives {back:?}", tau)
        });
    }
    let sizes: Vec<u64> = branches.iter().map(|b| b.image.size as u64).collect();
    whole.check(sizes == classes, || {
        format!("branch images {sizes:?} differ from class sizes {classes:?}")
    });
    whole.check(image.size as u64 == factorial(n), || {
        format!("image has {} of {} permutations", image.size, factorial(n))
    });
    whole.check(classes.iter().sum::<u64>() == factorial(n), || {
        format!("class sizes {classes:?} do not sum to n!")
    });
    whole.note(format!(
        "branch sizes han {}, alpha {}, beta {}",
        sizes[0], sizes[1], sizes[2]
    ));

    let mut out: Vec<VerificationReport> = branches
        .into_iter()
        .zip(names)
        .map(|(b, name)| b.probe.finish(name, n, Some(r)))
        .collect();
    out.push(whole.finish("phi-den", n, Some(r)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contracts_hold_to_five() {
        let reports = check_lemma_contracts(5);
        // han once per n, then four level reports and rawlings per (n, r)
        assert_eq!(reports.len(), 4 + 5 * (1 + 2 + 3 + 4));
        for r in &reports {
            assert!(r.passed, "{}", r.line());
        }
    }
}
