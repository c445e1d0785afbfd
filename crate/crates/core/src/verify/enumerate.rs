//! Lexicographic enumeration of `S_n`, split into contiguous rank ranges for
//! parallel workers.

use std::ops::Range;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::word::Permutation;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographic rank of a permutation of `1..=n`.
pub fn rank_lex(p: &[u32]) -> u64 {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_after = p[i + 1..].iter().filter(|&&l| l < p[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller_after;
    }
    rank
}

/// Permutation of `1..=n` with lexicographic rank `rank`.
pub fn unrank_lex(n: usize, mut rank: u64) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Advance to the lexicographic successor; `false` once the last
/// permutation has been reached.
pub fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Visit every permutation whose rank lies in `ranks`, in order.
pub fn for_each_in_range(n: usize, ranks: Range<u64>, mut visit: impl FnMut(&[u32])) {
    if ranks.is_empty() {
        return;
    }
    let mut p = unrank_lex(n, ranks.start);
    visit(&p);
    for _ in ranks.start + 1..ranks.end {
        next_permutation(&mut p);
        visit(&p);
    }
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some((1..=n as u32).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(cur))
    })
}

/// Split `0..total` into at most `parts` contiguous, nonempty ranges.
pub fn split_ranks(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    (0..parts)
        .map(|k| (total * k / parts)..(total * (k + 1) / parts))
        .filter(|r| !r.is_empty())
        .collect()
}

/// Runs folds over `S_n` on a fixed number of worker threads. Each worker
/// owns its accumulator; results are merged once at the end.
pub struct Enumerator {
    threads: usize,
    pool: Option<ThreadPool>,
}

/// Below this many permutations a fold runs on the calling thread.
const PARALLEL_THRESHOLD: u64 = 720;

impl Enumerator {
    pub fn new(threads: usize) -> Self {
        let threads = threads.max(1);
        let pool = (threads > 1).then(|| {
            ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("failed to start worker threads")
        });
        Enumerator { threads, pool }
    }

    pub fn single_threaded() -> Self {
        Enumerator::new(1)
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    pub fn fold<A, I, V, M>(&self, n: usize, init: I, visit: V, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync,
        V: Fn(&mut A, &[u32]) + Sync,
        M: Fn(A, A) -> A + Sync,
    {
        let total = factorial(n);
        let run = |ranks: Range<u64>| {
            let mut acc = init();
            for_each_in_range(n, ranks, |p| visit(&mut acc, p));
            acc
        };
        match &self.pool {
            Some(pool) if total >= PARALLEL_THRESHOLD => {
                let ranges = split_ranks(total, self.threads * 4);
                pool.install(|| ranges.into_par_iter().map(run).reduce(&init, &merge))
            }
            _ => run(0..total),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_unrank_inverse() {
        for n in 0..=6 {
            let mut count = 0;
            for (k, p) in all_permutations(n).enumerate() {
                assert_eq!(rank_lex(&p), k as u64);
                assert_eq!(unrank_lex(n, k as u64), p.to_vec());
                count += 1;
            }
            assert_eq!(count, factorial(n));
        }
    }

    #[test]
    fn ranges_cover_everything() {
        let r = split_ranks(10, 4);
        assert_eq!(r, vec![0..2, 2..5, 5..7, 7..10]);
        assert_eq!(split_ranks(3, 8).len(), 3);
        assert_eq!(split_ranks(1, 8), vec![0..1]);
    }

    #[test]
    fn parallel_fold_matches_sequential() {
        let sum = |e: &Enumerator| {
            e.fold(
                7,
                || 0u64,
                |acc, p| *acc += rank_lex(p) * p[0] as u64,
                |a, b| a + b,
            )
        };
        assert_eq!(sum(&Enumerator::new(1)), sum(&Enumerator::new(3)));
    }
}
