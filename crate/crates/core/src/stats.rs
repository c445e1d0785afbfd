//! Permutation statistics.
//!
//! Every function here is positional and works on any word of distinct
//! letters (the intermediate words of the insertion maps live on letter sets
//! such as `[n] \ {e}`), with 1-based positions. The empty word has all
//! statistics zero.

use serde::Serialize;
use smallvec::SmallVec;

type Buf = SmallVec<[u32; 24]>;

/// Positions `i` with `w_i > w_{i+1}`.
pub fn descent_set(w: &[u32]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn des(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn maj(w: &[u32]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).sum()
}

/// All pairs `(i, j)`, `i < j`, with `w_i > w_j`. Quadratic scan.
pub fn inversion_set(w: &[u32]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

/// Number of inversions, by merge sort.
pub fn inv(w: &[u32]) -> usize {
    if w.len() < 2 {
        return 0;
    }
    let mut a: Buf = SmallVec::from_slice(w);
    let mut scratch: Buf = SmallVec::from_elem(0, w.len());
    sort_counting(&mut a, &mut scratch)
}

fn sort_counting(a: &mut [u32], scratch: &mut [u32]) -> usize {
    let n = a.len();
    if n <= 8 {
        let mut count = 0;
        for i in 1..n {
            let x = a[i];
            let mut j = i;
            while j > 0 && a[j - 1] > x {
                a[j] = a[j - 1];
                j -= 1;
            }
            a[j] = x;
            count += i - j;
        }
        return count;
    }
    let mid = n / 2;
    let mut count = {
        let (lo, hi) = a.split_at_mut(mid);
        let (slo, shi) = scratch.split_at_mut(mid);
        sort_counting(lo, slo) + sort_counting(hi, shi)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if a[i] <= a[j] {
            scratch[k] = a[i];
            i += 1;
        } else {
            scratch[k] = a[j];
            count += mid - i;
            j += 1;
        }
        k += 1;
    }
    scratch[k..k + mid - i].copy_from_slice(&a[i..mid]);
    k += mid - i;
    scratch[k..k + n - j].copy_from_slice(&a[j..n]);
    a.copy_from_slice(&scratch[..n]);
    count
}

/// Positions `i` with `w_i > i`.
pub fn excedance_places(w: &[u32]) -> Vec<usize> {
    (1..=w.len()).filter(|&i| w[i - 1] as usize > i).collect()
}

/// Letters at excedance places, in increasing order.
pub fn excedance_letters(w: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=w.len())
        .filter(|&i| w[i - 1] as usize > i)
        .map(|i| w[i - 1])
        .collect();
    out.sort_unstable();
    out
}

pub fn exc(w: &[u32]) -> usize {
    (1..=w.len()).filter(|&i| w[i - 1] as usize > i).count()
}

/// Denert's statistic: excedance places summed, plus inversions inside the
/// excedance subword and inside the non-excedance subword.
pub fn den(w: &[u32]) -> usize {
    split_den(w, |i, l| l as usize > i)
}

fn split_den(w: &[u32], is_exc: impl Fn(usize, u32) -> bool) -> usize {
    let mut places = 0;
    let mut hi: Buf = SmallVec::new();
    let mut lo: Buf = SmallVec::new();
    for (k, &l) in w.iter().enumerate() {
        if is_exc(k + 1, l) {
            places += k + 1;
            hi.push(l);
        } else {
            lo.push(l);
        }
    }
    places + inv(&hi) + inv(&lo)
}

/// Positions `i` with `w_i ≥ w_{i+1} + r`.
pub fn r_descent_set(w: &[u32], r: usize) -> Vec<usize> {
    (1..w.len())
        .filter(|&i| w[i - 1] as usize >= w[i] as usize + r)
        .collect()
}

pub fn rdes(w: &[u32], r: usize) -> usize {
    w.windows(2)
        .filter(|p| p[0] as usize >= p[1] as usize + r)
        .count()
}

/// Inversions `(i, j)` whose letters differ by less than `r`.
pub fn r_inversion_set(w: &[u32], r: usize) -> Vec<(usize, usize)> {
    inversion_set(w)
        .into_iter()
        .filter(|&(i, j)| (w[i - 1] as usize) < w[j - 1] as usize + r)
        .collect()
}

fn r_inv_count(w: &[u32], r: usize) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] && (w[i] as usize) < w[j] as usize + r {
                count += 1;
            }
        }
    }
    count
}

/// Rawlings' r-major index: r-descent positions summed plus r-inversions.
pub fn rmaj(w: &[u32], r: usize) -> usize {
    let places: usize = (1..w.len())
        .filter(|&i| w[i - 1] as usize >= w[i] as usize + r)
        .sum();
    places + r_inv_count(w, r)
}

#[inline]
fn is_level_exc(i: usize, letter: u32, r: usize) -> bool {
    let l = letter as usize;
    l > i && l >= r
}

/// r-level excedance data of a word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelExcedance {
    /// Positions `i` with `w_i > i` and `w_i ≥ r`.
    pub places: Vec<usize>,
    /// The letters at those places, increasing.
    pub letters: Vec<u32>,
    /// All other positions.
    pub non_places: Vec<usize>,
}

pub fn r_excedance(w: &[u32], r: usize) -> LevelExcedance {
    let (places, non_places): (Vec<usize>, Vec<usize>) =
        (1..=w.len()).partition(|&i| is_level_exc(i, w[i - 1], r));
    let mut letters: Vec<u32> = places.iter().map(|&i| w[i - 1]).collect();
    letters.sort_unstable();
    LevelExcedance {
        places,
        letters,
        non_places,
    }
}

/// Increasing list of r-level excedance letters.
pub fn level_excedance_letters(w: &[u32], r: usize) -> Vec<u32> {
    let mut out: Vec<u32> = w
        .iter()
        .enumerate()
        .filter(|&(k, &l)| is_level_exc(k + 1, l, r))
        .map(|(_, &l)| l)
        .collect();
    out.sort_unstable();
    out
}

pub fn is_level_excedance_place(w: &[u32], i: usize, r: usize) -> bool {
    i >= 1 && i <= w.len() && is_level_exc(i, w[i - 1], r)
}

/// r-level Denert statistic.
pub fn den_r(w: &[u32], r: usize) -> usize {
    split_den(w, |i, l| is_level_exc(i, l, r))
}

/// `|{i : w_i > i ≥ r}|`.
pub fn exc_r(w: &[u32], r: usize) -> usize {
    (r.max(1)..=w.len())
        .filter(|&i| w[i - 1] as usize > i)
        .count()
}

fn grande_test(w: &[u32], i: usize, blockers: &[u32]) -> bool {
    let l = w[i - 1] as usize;
    if l == i {
        return true;
    }
    l > i && !blockers.iter().any(|&e| (i..l).contains(&(e as usize)))
}

/// Positions that are fixed, or are excedances `w_i > i` with no excedance
/// letter in `[i, w_i)`.
pub fn grande_fixed_places(w: &[u32]) -> Vec<usize> {
    let blockers = excedance_letters(w);
    (1..=w.len())
        .filter(|&i| grande_test(w, i, &blockers))
        .collect()
}

pub fn greatest_grande_fixed_place(w: &[u32]) -> Option<usize> {
    let blockers = excedance_letters(w);
    (1..=w.len()).rev().find(|&i| grande_test(w, i, &blockers))
}

/// Grande-fixed places `i ≥ r`, tested against r-level excedance letters.
pub fn r_grande_fixed_places(w: &[u32], r: usize) -> Vec<usize> {
    let blockers = level_excedance_letters(w, r);
    (r.max(1)..=w.len())
        .filter(|&i| grande_test(w, i, &blockers))
        .collect()
}

/// Positions `i < r` split by whether `w_i ≥ r` (first set) or `w_i < r`.
pub fn ab_sets(w: &[u32], r: usize) -> (Vec<usize>, Vec<usize>) {
    let upto = r.saturating_sub(1).min(w.len());
    (1..=upto).partition(|&i| w[i - 1] as usize >= r)
}

/// Where a permutation of size `n > r` sits in the trichotomy that splits the
/// image of the r-level insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LevelClass {
    /// Has an r-level grande-fixed place.
    GrandeFixed,
    /// No r-level grande-fixed place, and `r` is an r-level excedance place.
    Star,
    /// No r-level grande-fixed place, and `r` is not an r-level excedance place.
    NonStar,
}

pub fn level_class(w: &[u32], r: usize) -> LevelClass {
    if !r_grande_fixed_places(w, r).is_empty() {
        LevelClass::GrandeFixed
    } else if is_level_excedance_place(w, r, r) {
        LevelClass::Star
    } else {
        LevelClass::NonStar
    }
}

/// All statistics of one word at a fixed level `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StatVector {
    pub des: usize,
    pub maj: usize,
    pub inv: usize,
    pub exc: usize,
    pub den: usize,
    pub rdes: usize,
    pub rmaj: usize,
    pub excr: usize,
    pub denr: usize,
}

impl StatVector {
    pub fn new(w: &[u32], r: usize) -> Self {
        StatVector {
            des: des(w),
            maj: maj(w),
            inv: inv(w),
            exc: exc(w),
            den: den(w),
            rdes: rdes(w, r),
            rmaj: rmaj(w, r),
            excr: exc_r(w, r),
            denr: den_r(w, r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<u32> {
        s.parse::<crate::Word>().unwrap().into_letters()
    }

    #[test]
    fn descents_of_running_example() {
        let p = w("475398216");
        assert_eq!(descent_set(&p), vec![2, 3, 5, 6, 7]);
        assert_eq!((des(&p), maj(&p)), (5, 23));
        assert_eq!(descent_set(&w("12345")), Vec::<usize>::new());
        assert_eq!(maj(&w("54321")), 10);
        assert_eq!(descent_set(&w("54321")), vec![1, 2, 3, 4]);
    }

    #[test]
    fn inversions() {
        assert_eq!(inv(&w("475398216")), 21);
        assert_eq!(inversion_set(&w("475398216")).len(), 21);
        assert_eq!(inversion_set(&w("231")), vec![(1, 3), (2, 3)]);
        assert_eq!(inv(&w("123456789")), 0);
        // long enough to reach the merge path
        let long: Vec<u32> = (1..=30).rev().collect();
        assert_eq!(inv(&long), 435);
    }

    #[test]
    fn excedances_and_den() {
        let p = w("475398216");
        assert_eq!(excedance_places(&p), vec![1, 2, 3, 5, 6]);
        assert_eq!(exc(&p), 5);
        assert_eq!(den(&p), 22);
        assert_eq!(den(&w("321")), 2);
        assert_eq!(excedance_letters(&w("836295417")), vec![3, 6, 8, 9]);
    }

    #[test]
    fn level_statistics() {
        let p = w("475398216");
        assert_eq!(r_descent_set(&p, 2), vec![2, 3, 6]);
        assert_eq!(
            r_inversion_set(&p, 2),
            vec![(1, 4), (2, 9), (4, 7), (5, 6), (7, 8)]
        );
        assert_eq!(rmaj(&p, 2), 16);
        let e = r_excedance(&p, 5);
        assert_eq!(e.places, vec![2, 3, 5, 6]);
        assert_eq!(e.letters, vec![5, 7, 8, 9]);
        assert_eq!(e.non_places, vec![1, 4, 7, 8, 9]);
        assert_eq!(den_r(&p, 5), 24);
        assert_eq!(exc_r(&p, 5), 2);
        assert_eq!(exc_r(&w("836295417"), 5), 1);
        assert_eq!(level_excedance_letters(&w("836295417"), 5), vec![6, 8, 9]);
        assert_eq!((den_r(&w("231"), 3), inv(&w("231"))), (3, 2));
    }

    #[test]
    fn grande_fixed() {
        let g = grande_fixed_places(&w("816259437"));
        assert!(g.contains(&3) && g.contains(&5));
        assert!(!g.contains(&1) && !g.contains(&6));
        assert_eq!(grande_fixed_places(&w("12345")), vec![1, 2, 3, 4, 5]);
        assert_eq!(greatest_grande_fixed_place(&w("93826(10)5417")), Some(5));

        let g3 = r_grande_fixed_places(&w("436259817"), 3);
        assert!(g3.contains(&5) && g3.contains(&7));
        assert!(!g3.contains(&3) && !g3.contains(&6));
        assert_eq!(r_grande_fixed_places(&w("123456"), 3), vec![3, 4, 5, 6]);
        assert!(r_grande_fixed_places(&w("63928(10)5417"), 5).is_empty());
    }

    #[test]
    fn a_and_b_sets() {
        assert_eq!(ab_sets(&w("836295417"), 5), (vec![1, 3], vec![2, 4]));
        assert_eq!(ab_sets(&w("836295417"), 1), (vec![], vec![]));
        assert_eq!(ab_sets(&w("475398216"), 5), (vec![2, 3], vec![1, 4]));
        // r beyond the word: B truncated at the last position
        assert_eq!(ab_sets(&w("21"), 7), (vec![], vec![1, 2]));
    }

    #[test]
    fn empty_word_is_all_zero() {
        let e: [u32; 0] = [];
        let s = StatVector::new(&e, 3);
        assert_eq!(s, StatVector::new(&e, 1));
        assert_eq!(s.des + s.maj + s.inv + s.exc + s.den + s.rmaj + s.denr, 0);
        assert!(grande_fixed_places(&e).is_empty());
        assert_eq!(ab_sets(&e, 4), (vec![], vec![]));
    }

    #[test]
    fn level_classes() {
        assert_eq!(level_class(&w("63928(10)5417"), 5), LevelClass::Star);
        assert_eq!(level_class(&w("89632(10)5417"), 5), LevelClass::NonStar);
        assert_eq!(level_class(&w("93826(10)5417"), 5), LevelClass::GrandeFixed);
    }
}
