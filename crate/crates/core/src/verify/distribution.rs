use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::enumerate::Enumerator;
use super::qpoly::QPolynomial;
use crate::error::{Error, Result};
use crate::stats;

/// Default enumeration guard.
pub const DEFAULT_MAX_N: usize = 10;

/// A (t-statistic, q-statistic) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatPair {
    RdesRmaj,
    ExcrDenr,
    DesMaj,
    ExcDen,
}

impl StatPair {
    pub const ALL: [StatPair; 4] = [
        StatPair::RdesRmaj,
        StatPair::ExcrDenr,
        StatPair::DesMaj,
        StatPair::ExcDen,
    ];

    #[inline]
    pub fn eval(self, w: &[u32], r: usize) -> (usize, usize) {
        match self {
            StatPair::RdesRmaj => (stats::rdes(w, r), stats::rmaj(w, r)),
            StatPair::ExcrDenr => (stats::exc_r(w, r), stats::den_r(w, r)),
            StatPair::DesMaj => (stats::des(w), stats::maj(w)),
            StatPair::ExcDen => (stats::exc(w), stats::den(w)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StatPair::RdesRmaj => "rdes-rmaj",
            StatPair::ExcrDenr => "excr-denr",
            StatPair::DesMaj => "des-maj",
            StatPair::ExcDen => "exc-den",
        }
    }
}

impl fmt::Display for StatPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatPair::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "statistic pair",
                value: s.to_string(),
            })
    }
}

/// Dense accumulation table for `(a, b)` with `a ≤ n`, `b ≤ C(n, 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct DenseCounts {
    width: usize,
    cells: Vec<u64>,
}

impl DenseCounts {
    pub fn new(n: usize) -> Self {
        let width = n * n.saturating_sub(1) / 2 + 1;
        DenseCounts {
            width,
            cells: vec![0; width * (n + 1)],
        }
    }

    #[inline]
    pub fn add(&mut self, (a, b): (usize, usize)) {
        assert!(b < self.width, "q-statistic {b} above C(n,2)");
        self.cells[a * self.width + b] += 1;
    }

    pub fn merge(mut self, other: DenseCounts) -> Self {
        for (x, y) in self.cells.iter_mut().zip(other.cells) {
            *x += y;
        }
        self
    }

    pub fn into_map(self) -> BTreeMap<(usize, usize), u64> {
        let width = self.width;
        self.cells
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(k, c)| ((k / width, k % width), c))
            .collect()
    }
}

/// Coefficient table of `Σ_{π ∈ S_n} t^a q^b` for one statistic pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointDistribution {
    pub n: usize,
    pub r: usize,
    pub pair: StatPair,
    #[serde(serialize_with = "serialize_entries")]
    pub counts: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize)]
struct Entry {
    a: usize,
    b: usize,
    count: u64,
}

fn serialize_entries<S: Serializer>(
    counts: &BTreeMap<(usize, usize), u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(counts.len()))?;
    for (&(a, b), &count) in counts {
        seq.serialize_element(&Entry { a, b, count })?;
    }
    seq.end()
}

impl JointDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Add another partial table for the same `(n, r, pair)`.
    pub fn merge(mut self, other: &JointDistribution) -> Self {
        for (&k, &v) in &other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self
    }

    /// Coefficients of `t^a` after setting `q = 1`.
    pub fn t_marginal(&self) -> Vec<u64> {
        let mut out = vec![0; self.n.max(1)];
        for (&(a, _), &c) in &self.counts {
            if a >= out.len() {
                out.resize(a + 1, 0);
            }
            out[a] += c;
        }
        out
    }

    /// The polynomial obtained by setting `t = 1`.
    pub fn q_marginal(&self) -> QPolynomial {
        let mut out = Vec::new();
        for (&(_, b), &c) in &self.counts {
            if b >= out.len() {
                out.resize(b + 1, 0);
            }
            out[b] += c;
        }
        QPolynomial::new(out)
    }

    /// Keys whose counts differ, in increasing order, with both counts.
    pub fn differences(&self, other: &JointDistribution) -> Vec<((usize, usize), u64, u64)> {
        let keys: std::collections::BTreeSet<_> = self
            .counts
            .keys()
            .chain(other.counts.keys())
            .copied()
            .collect();
        keys.into_iter()
            .filter_map(|k| {
                let x = self.counts.get(&k).copied().unwrap_or(0);
                let y = other.counts.get(&k).copied().unwrap_or(0);
                (x != y).then_some((k, x, y))
            })
            .collect()
    }

    /// CSV with header `a,b,count`, rows sorted by `(a, b)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,count\n");
        for (&(a, b), &c) in &self.counts {
            out.push_str(&format!("{a},{b},{c}\n"));
        }
        out
    }
}

pub(crate) fn guard(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::SizeGuard { n, max: max_n });
    }
    Ok(())
}

pub(crate) fn check_params(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::LevelOutOfRange {
            r,
            n,
            requirement: "n >= 1 and r >= 1",
        });
    }
    Ok(())
}

/// Tabulate several statistic pairs over `S_n` in one pass.
pub(crate) fn tabulate<const K: usize>(
    enumerator: &Enumerator,
    n: usize,
    f: impl Fn(&[u32]) -> [(usize, usize); K] + Sync,
) -> [DenseCounts; K] {
    enumerator.fold(
        n,
        || std::array::from_fn(|_| DenseCounts::new(n)),
        |acc, p| {
            for (table, v) in acc.iter_mut().zip(f(p)) {
                table.add(v);
            }
        },
        |a, b| {
            let mut b = b.into_iter();
            a.map(|t| t.merge(b.next().unwrap()))
        },
    )
}

/// Exact joint distribution of `pair` over `S_n` at level `r`.
pub fn joint_distribution(
    enumerator: &Enumerator,
    n: usize,
    r: usize,
    pair: StatPair,
    max_n: usize,
) -> Result<JointDistribution> {
    check_params(n, r)?;
    guard(n, max_n)?;
    let [table] = tabulate(enumerator, n, |p| [pair.eval(p, r)]);
    Ok(JointDistribution {
        n,
        r,
        pair,
        counts: table.into_map(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(n: usize, r: usize, pair: StatPair) -> JointDistribution {
        joint_distribution(&Enumerator::single_threaded(), n, r, pair, DEFAULT_MAX_N).unwrap()
    }

    #[test]
    fn s3_des_maj() {
        // 123:(0,0) 132:(1,2) 213:(1,1) 231:(1,2) 312:(1,1) 321:(2,3)
        let expected: BTreeMap<_, _> = [((0, 0), 1), ((1, 1), 2), ((1, 2), 2), ((2, 3), 1)].into();
        assert_eq!(dist(3, 1, StatPair::DesMaj).counts, expected);
        assert_eq!(dist(3, 1, StatPair::ExcDen).counts, expected);
    }

    #[test]
    fn singleton() {
        for pair in StatPair::ALL {
            let d = dist(1, 4, pair);
            assert_eq!(d.counts, [((0, 0), 1)].into());
        }
    }

    #[test]
    fn guard_and_params() {
        let e = Enumerator::single_threaded();
        assert_eq!(
            joint_distribution(&e, 11, 1, StatPair::DesMaj, DEFAULT_MAX_N),
            Err(Error::SizeGuard { n: 11, max: 10 })
        );
        assert!(joint_distribution(&e, 3, 0, StatPair::DesMaj, 10).is_err());
        assert!(joint_distribution(&e, 0, 1, StatPair::DesMaj, 10).is_err());
    }

    #[test]
    fn csv_layout() {
        let csv = dist(3, 1, StatPair::DesMaj).to_csv();
        assert_eq!(csv, "a,b,count\n0,0,1\n1,1,2\n1,2,2\n2,3,1\n");
    }

    #[test]
    fn pair_names_round_trip() {
        for p in StatPair::ALL {
            assert_eq!(p.name().parse::<StatPair>().unwrap(), p);
        }
        assert!("inv-maj".parse::<StatPair>().is_err());
    }
}
