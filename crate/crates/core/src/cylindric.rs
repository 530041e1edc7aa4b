//! Profiles, cylindric partitions and the brute-force enumerator.
//!
//! The enumerator walks rows one part at a time and prunes with the defining
//! inequalities directly. It shares no code with the slice machinery, which
//! makes it usable as an independent check on everything built from slices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::qseries::Series;

/// A composition `c = (c_1, ..., c_r)` of the level `ℓ ≥ 1`. Zero parts are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Profile(Vec<u32>);

impl Profile {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidProfile("rank must be at least 1".into()));
        }
        if parts.iter().all(|&c| c == 0) {
            return Err(Error::InvalidProfile("level must be at least 1".into()));
        }
        Ok(Profile(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn level(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `t = r + ℓ`, the period of the Borodin product.
    pub fn period(&self) -> u32 {
        self.rank() as u32 + self.level()
    }

    /// `c_i` with 1-based `i`.
    pub fn c(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `s(i, j) = c_i + ... + c_j` (1-based, inclusive); zero when `i > j`.
    pub fn partial_sum(&self, i: usize, j: usize) -> u32 {
        if i > j {
            return 0;
        }
        self.0[i - 1..j].iter().sum()
    }

    /// `S(c) = (c_2, ..., c_r, c_1)`.
    pub fn cyclic_shift(&self) -> Profile {
        let mut parts = self.0.clone();
        parts.rotate_left(1);
        Profile(parts)
    }

    /// Every profile of rank `r ≥ 1` and level `ℓ ≥ 1` with `r + ℓ ≤ max_period`,
    /// ordered by rank, then level, then lexicographically.
    pub fn all_up_to_period(max_period: u32) -> Vec<Profile> {
        let mut out = Vec::new();
        for rank in 1..max_period {
            for level in 1..=max_period - rank {
                let mut parts = Vec::with_capacity(rank as usize);
                compositions(rank as usize, level, &mut parts, &mut out);
            }
        }
        out
    }
}

fn compositions(len: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Profile>) {
    if prefix.len() + 1 == len {
        prefix.push(remaining);
        out.push(Profile(prefix.clone()));
        prefix.pop();
        return;
    }
    for first in (0..=remaining).rev() {
        prefix.push(first);
        compositions(len, remaining - first, prefix, out);
        prefix.pop();
    }
}

impl TryFrom<Vec<u32>> for Profile {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Profile::new(parts)
    }
}

impl From<Profile> for Vec<u32> {
    fn from(p: Profile) -> Self {
        p.0
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// Parses `"2,1"`; surrounding parentheses are tolerated.
impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidProfile(format!("`{s}` is not a list of nonnegative integers")))
            })
            .collect::<Result<Vec<_>>>()?;
        Profile::new(parts)
    }
}

pub(crate) fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Why a candidate failed validation. Rows and positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("expected {expected} rows, got {got}")]
    RowCount { expected: usize, got: usize },

    #[error("row {row} has nonpositive part {value} at position {index}")]
    NonPositivePart { row: usize, index: usize, value: i64 },

    #[error("row {row} increases at position {index}")]
    NonMonotone { row: usize, index: usize },

    #[error(
        "λ^({upper_row})_{upper_index} = {upper_value} < λ^({lower_row})_{lower_index} = {lower_value}"
    )]
    Inequality {
        upper_row: usize,
        upper_index: usize,
        upper_value: u32,
        lower_row: usize,
        lower_index: usize,
        lower_value: u32,
    },
}

/// A validated cylindric partition. Rows never carry zero parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct CylindricPartition {
    profile: Profile,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    profile: Profile,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<RawPartition> for CylindricPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        validate(&raw.profile, &raw.rows)
    }
}

impl From<CylindricPartition> for RawPartition {
    fn from(p: CylindricPartition) -> Self {
        RawPartition {
            profile: p.profile,
            rows: p
                .rows
                .into_iter()
                .map(|r| r.into_iter().map(i64::from).collect())
                .collect(),
        }
    }
}

fn entry(row: &[u32], index: usize) -> u32 {
    // 1-based; out of range reads as zero
    row.get(index - 1).copied().unwrap_or(0)
}

/// Checks the candidate rows against the definition and returns the canonical
/// value (trailing zeros stripped), or the first violation found.
pub fn validate(profile: &Profile, rows: &[Vec<i64>]) -> Result<CylindricPartition> {
    let r = profile.rank();
    if rows.len() != r {
        return Err(Violation::RowCount {
            expected: r,
            got: rows.len(),
        }
        .into());
    }
    let mut canonical = Vec::with_capacity(r);
    for (i, row) in rows.iter().enumerate() {
        let mut end = row.len();
        while end > 0 && row[end - 1] == 0 {
            end -= 1;
        }
        let row = &row[..end];
        for (j, &v) in row.iter().enumerate() {
            if v < 0 {
                return Err(Violation::NonPositivePart {
                    row: i + 1,
                    index: j + 1,
                    value: v,
                }
                .into());
            }
            if j > 0 && v > row[j - 1] {
                return Err(Violation::NonMonotone {
                    row: i + 1,
                    index: j + 1,
                }
                .into());
            }
        }
        canonical.push(
            row.iter()
                .map(|&v| u32::try_from(v).expect("checked positive"))
                .collect::<Vec<u32>>(),
        );
    }
    check_inequalities(profile, &canonical)?;
    Ok(CylindricPartition {
        profile: profile.clone(),
        rows: canonical,
    })
}

fn check_inequalities(profile: &Profile, rows: &[Vec<u32>]) -> std::result::Result<(), Violation> {
    let r = profile.rank();
    for i in 1..=r {
        // pair (i, i+1) with the cyclic wrap (r, 1)
        let lower_row = if i == r { 1 } else { i + 1 };
        let shift = profile.c(lower_row) as usize;
        let upper = &rows[i - 1];
        let lower = &rows[lower_row - 1];
        for lower_index in (shift + 1)..=lower.len().max(shift) {
            let j = lower_index - shift;
            let upper_value = entry(upper, j);
            let lower_value = entry(lower, lower_index);
            if upper_value < lower_value {
                return Err(Violation::Inequality {
                    upper_row: i,
                    upper_index: j,
                    upper_value,
                    lower_row,
                    lower_index,
                    lower_value,
                });
            }
        }
    }
    Ok(())
}

impl CylindricPartition {
    pub(crate) fn from_rows_unchecked(profile: Profile, rows: Vec<Vec<u32>>) -> Self {
        CylindricPartition { profile, rows }
    }

    pub fn empty(profile: Profile) -> Self {
        let rows = vec![Vec::new(); profile.rank()];
        CylindricPartition { profile, rows }
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `|Λ|`, the sum of all parts.
    pub fn size(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| u64::from(v)).sum()
    }

    /// `max(Λ)`, zero for the empty partition.
    pub fn max_part(&self) -> u32 {
        self.rows.iter().filter_map(|r| r.first().copied()).max().unwrap_or(0)
    }

    /// `(size, max)`.
    pub fn statistics(&self) -> (u64, u32) {
        (self.size(), self.max_part())
    }
}

impl fmt::Display for CylindricPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("({})", join(r))).collect();
        write!(f, "({}) with c={}", rows.join(","), self.profile)
    }
}

/// Counts `T[m][n]` of cylindric partitions with largest part `m` and size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedTable {
    profile: Profile,
    order: usize,
    counts: Vec<Vec<u64>>,
}

impl RefinedTable {
    pub fn new(profile: Profile, order: usize) -> Self {
        RefinedTable {
            profile,
            order,
            counts: vec![vec![0; order + 1]; order + 1],
        }
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Count for `max = m`, `size = n`.
    pub fn get(&self, m: usize, n: usize) -> u64 {
        self.counts[m][n]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.counts
    }

    /// Coefficients of `F_c(1, q)` up to the order.
    pub fn marginal(&self) -> Series {
        Series::from_integers(
            (0..=self.order).map(|n| BigInt::from(self.counts.iter().map(|row| row[n]).sum::<u64>())),
        )
    }

    /// CSV lines `max,size,count` for the nonzero entries, header included.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("max,size,count\n");
        for (m, row) in self.counts.iter().enumerate() {
            for (n, &count) in row.iter().enumerate() {
                if count != 0 {
                    out.push_str(&format!("{m},{n},{count}\n"));
                }
            }
        }
        out
    }
}

/// Calls `visit` once for every cylindric partition with profile `profile`
/// and size at most `order`.
pub fn for_each_partition<F>(profile: &Profile, order: usize, mut visit: F)
where
    F: FnMut(&CylindricPartition),
{
    let mut search = Search {
        profile,
        rows: vec![Vec::new(); profile.rank()],
        visit: &mut |rows: &[Vec<u32>]| {
            let p = CylindricPartition::from_rows_unchecked(profile.clone(), rows.to_vec());
            visit(&p);
        },
    };
    search.row(0, order as u32);
}

struct Search<'a> {
    profile: &'a Profile,
    rows: Vec<Vec<u32>>,
    visit: &'a mut dyn FnMut(&[Vec<u32>]),
}

impl Search<'_> {
    fn row(&mut self, k: usize, budget: u32) {
        if k == self.rows.len() {
            (self.visit)(&self.rows);
            return;
        }
        self.part(k, budget);
    }

    /// Upper bound for the next part of row `k` imposed by row `k - 1`.
    fn upper(&self, k: usize, pos: usize) -> u32 {
        if k == 0 {
            return u32::MAX;
        }
        let shift = self.profile.parts()[k] as usize;
        if pos <= shift {
            u32::MAX
        } else {
            entry(&self.rows[k - 1], pos - shift)
        }
    }

    /// Lower bound on position `pos` of the last row, imposed by the first row.
    fn lower(&self, k: usize, pos: usize) -> u32 {
        let r = self.rows.len();
        if r == 1 || k != r - 1 {
            return 0;
        }
        entry(&self.rows[0], pos + self.profile.parts()[0] as usize)
    }

    /// Sum of the lower bounds from position `pos` to the end of the last row.
    fn pending_lower(&self, k: usize, pos: usize) -> u32 {
        let r = self.rows.len();
        if r == 1 || k != r - 1 {
            return 0;
        }
        let shift = self.profile.parts()[0] as usize;
        self.rows[0].iter().skip(pos - 1 + shift).sum()
    }

    fn part(&mut self, k: usize, budget: u32) {
        let pos = self.rows[k].len() + 1;
        // the row may stop here only if no lower bound forces another part
        if self.lower(k, pos) == 0 {
            self.row(k + 1, budget);
        }
        let prev = self.rows[k].last().copied().unwrap_or(u32::MAX);
        let hi = prev.min(self.upper(k, pos)).min(budget);
        let lo = self.lower(k, pos).max(1);
        let rest_lower = self.pending_lower(k, pos + 1);
        for v in lo..=hi {
            if v + rest_lower > budget {
                break;
            }
            self.rows[k].push(v);
            self.part(k, budget - v);
            self.rows[k].pop();
        }
    }
}

/// Exhaustive count of cylindric partitions of size at most `order`, refined by
/// largest part.
pub fn enumerate(profile: &Profile, order: usize) -> RefinedTable {
    let mut table = RefinedTable::new(profile.clone(), order);
    for_each_partition(profile, order, |p| {
        let (size, max) = p.statistics();
        table.counts[max as usize][size as usize] += 1;
    });
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(parts: &[u32]) -> Profile {
        Profile::new(parts.to_vec()).unwrap()
    }

    fn rows(r: &[&[i64]]) -> Vec<Vec<i64>> {
        r.iter().map(|x| x.to_vec()).collect()
    }

    #[test]
    fn profile_basics() {
        let c = profile(&[2, 1]);
        assert_eq!((c.rank(), c.level(), c.period()), (2, 3, 5));
        assert_eq!(c.partial_sum(1, 2), 3);
        assert_eq!(c.partial_sum(2, 1), 0);
        assert!(Profile::new(vec![0, 0]).is_err());
        assert!(Profile::new(vec![]).is_err());
        assert_eq!("2,0,1".parse::<Profile>().unwrap(), profile(&[2, 0, 1]));
        assert!("2,-1".parse::<Profile>().is_err());
        assert_eq!(c.to_string(), "(2,1)");
    }

    #[test]
    fn cyclic_shift_examples() {
        assert_eq!(profile(&[2, 1]).cyclic_shift(), profile(&[1, 2]));
        assert_eq!(profile(&[1, 1]).cyclic_shift(), profile(&[1, 1]));
        let c = profile(&[3, 0, 1, 2]);
        let mut s = c.clone();
        for _ in 0..c.rank() {
            s = s.cyclic_shift();
        }
        assert_eq!(s, c);
    }

    #[test]
    fn profiles_up_to_period() {
        let all = Profile::all_up_to_period(4);
        // rank 1: (1),(2),(3); rank 2: (1,0),(0,1),(2,0),(1,1),(0,2); rank 3: (1,0,0),(0,1,0),(0,0,1)
        assert_eq!(all.len(), 11);
        assert!(all.iter().all(|p| p.period() <= 4));
    }

    #[test]
    fn validate_examples() {
        let three_rows = validate(&profile(&[1, 1, 1]), &rows(&[&[5, 4], &[8, 2], &[7, 5, 1]])).unwrap();
        assert_eq!(three_rows.statistics(), (32, 8));
        let two_rows = validate(&profile(&[2, 1]), &rows(&[&[2, 2, 1], &[3]])).unwrap();
        assert_eq!(two_rows.statistics(), (8, 3));
        let bad = validate(&profile(&[1, 1]), &rows(&[&[1, 1], &[]]));
        assert_eq!(
            bad,
            Err(Error::InvalidPartition(Violation::Inequality {
                upper_row: 2,
                upper_index: 1,
                upper_value: 0,
                lower_row: 1,
                lower_index: 2,
                lower_value: 1,
            }))
        );
    }

    #[test]
    fn validate_reports_each_error_kind() {
        let c = profile(&[1, 1]);
        assert!(matches!(
            validate(&c, &rows(&[&[1, 2], &[]])),
            Err(Error::InvalidPartition(Violation::NonMonotone { row: 1, index: 2 }))
        ));
        assert!(matches!(
            validate(&c, &rows(&[&[1, -1], &[]])),
            Err(Error::InvalidPartition(Violation::NonPositivePart { row: 1, index: 2, value: -1 }))
        ));
        assert!(matches!(
            validate(&c, &rows(&[&[1]])),
            Err(Error::InvalidPartition(Violation::RowCount { expected: 2, got: 1 }))
        ));
        // trailing zeros are padding, not parts
        let p = validate(&c, &rows(&[&[1, 0, 0], &[1]])).unwrap();
        assert_eq!(p.rows(), &[vec![1], vec![1]]);
    }

    #[test]
    fn statistics_of_empty() {
        let e = CylindricPartition::empty(profile(&[1, 1]));
        assert_eq!(e.statistics(), (0, 0));
    }

    /// Generates every tuple of partitions with total size at most `order`,
    /// with no pruning, and keeps the ones `validate` accepts.
    fn unpruned(profile: &Profile, order: usize) -> Vec<Vec<Vec<u32>>> {
        fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=n.min(max)).rev() {
                for mut rest in partitions(n - first, first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        let all_rows: Vec<Vec<u32>> = (0..=order as u32).flat_map(|n| partitions(n, n)).collect();
        let mut tuples: Vec<Vec<Vec<u32>>> = vec![vec![]];
        for _ in 0..profile.rank() {
            let mut next = Vec::new();
            for t in &tuples {
                let used: u32 = t.iter().flatten().sum();
                for row in &all_rows {
                    if used + row.iter().sum::<u32>() <= order as u32 {
                        let mut t2 = t.clone();
                        t2.push(row.clone());
                        next.push(t2);
                    }
                }
            }
            tuples = next;
        }
        tuples
            .into_iter()
            .filter(|t| {
                let raw: Vec<Vec<i64>> = t.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
                validate(profile, &raw).is_ok()
            })
            .collect()
    }

    #[test]
    fn enumerate_hand_examples() {
        let c = profile(&[1, 1]);
        let t3 = enumerate(&c, 3);
        assert_eq!(t3.marginal().to_i64s().unwrap(), vec![1, 2, 3, 6]);
        let t2 = enumerate(&c, 2);
        assert_eq!(t2.get(1, 2), 1);
        assert_eq!(t2.get(2, 2), 2);
        for p in [profile(&[1, 1]), profile(&[2, 1]), profile(&[1, 0, 1, 0])] {
            let t0 = enumerate(&p, 0);
            assert_eq!(t0.rows(), &[vec![1]]);
        }
    }

    #[test]
    fn enumerate_matches_unpruned_generation() {
        for c in [profile(&[1, 1]), profile(&[2, 0]), profile(&[0, 2]), profile(&[2, 1]), profile(&[1, 0, 1])] {
            let order = 6;
            let mut seen = Vec::new();
            for_each_partition(&c, order, |p| seen.push(p.rows().to_vec()));
            let mut expected = unpruned(&c, order);
            seen.sort();
            expected.sort();
            assert_eq!(seen, expected, "profile {c}");
        }
    }

    #[test]
    fn refined_table_shape() {
        let t = enumerate(&profile(&[2, 1]), 8);
        for n in 1..=8 {
            assert_eq!(t.get(0, n), 0);
            for m in n + 1..=8 {
                assert_eq!(t.get(m, n), 0);
            }
        }
        assert_eq!(t.get(0, 0), 1);
    }

    #[test]
    fn rank_one_is_the_partition_function() {
        let t = enumerate(&profile(&[3]), 10);
        assert_eq!(t.marginal().to_i64s().unwrap(), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn csv_output() {
        let t = enumerate(&profile(&[1, 1]), 2);
        assert_eq!(t.to_csv(), "max,size,count\n0,0,1\n1,1,2\n1,2,1\n2,2,2\n");
    }

    #[test]
    fn json_round_trip() {
        let json = r#"{"profile":[2,1],"rows":[[2,2,1],[3]]}"#;
        let p: CylindricPartition = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), json);
        assert!(serde_json::from_str::<CylindricPartition>(r#"{"profile":[1,1],"rows":[[1,1],[]]}"#).is_err());
        assert!(serde_json::from_str::<CylindricPartition>(r#"{"profile":[0,0],"rows":[[],[]]}"#).is_err());
    }
}
