//! Integer partitions and the statistics indexed by them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qt::{MonomialLetter, MonomialSum};

/// Weakly decreasing sequence of positive integers (zeros are never stored).
///
/// The derived `Ord` is lexicographic on parts; lists returned by this crate
/// are sorted the other way, largest first within each size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Cell of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Box {
    pub row: usize,
    pub col: usize,
}

impl Box {
    pub fn new(row: usize, col: usize) -> Self {
        Box { row, col }
    }
}

impl Partition {
    /// Validate a weakly decreasing list; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sort arbitrary nonnegative parts into a partition.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_multiset(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n` (the caller ensures `n >= len`).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// Whether `μ ⊆ self` as diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn contains_box(&self, s: Box) -> bool {
        s.row >= 1 && s.col >= 1 && self.part(s.row) >= s.col
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = Box> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Box::new(i + 1, j)))
    }

    /// Multiplicity of each part size: entry `k` counts parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }
}

/// How [`combine`] merges two partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// Partwise addition.
    Sum,
    /// Multiset union of parts.
    Union,
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn combine(lambda: &Partition, mu: &Partition, mode: CombineMode) -> Partition {
    match mode {
        CombineMode::Sum => {
            let n = lambda.len().max(mu.len());
            Partition((1..=n).map(|i| lambda.part(i) + mu.part(i)).collect())
        }
        CombineMode::Union => {
            let mut v = lambda.0.clone();
            v.extend_from_slice(&mu.0);
            Partition::from_multiset(v)
        }
    }
}

/// With `μ` the complement of `λ` in the `n × m` box, test
/// `(λ + δ_n) ∪ (μ' + δ_m) = δ_{n+m}` where `δ_k = (k-1, ..., 1, 0)` and all
/// zeros are kept.
pub fn staircase_complement_check(lambda: &Partition, n: usize, m: usize) -> Result<bool> {
    if lambda.len() > n || lambda.part(1) > m {
        return Err(Error::OutOfRange(format!("{lambda} does not fit in a {n}x{m} box")));
    }
    let lam = lambda.padded(n);
    let mu = Partition::from_multiset((0..n).map(|i| m - lam[n - 1 - i]).collect());
    let mu_c = mu.conjugate().padded(m);
    let mut all: Vec<usize> = lam.iter().enumerate().map(|(i, &p)| p + (n - 1 - i)).collect();
    all.extend(mu_c.iter().enumerate().map(|(i, &p)| p + (m - 1 - i)));
    all.sort_unstable_by(|a, b| b.cmp(a));
    let delta: Vec<usize> = (0..n + m).rev().collect();
    Ok(all == delta)
}

/// Orientation of a strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    /// At most one box per column.
    Horizontal,
    /// At most one box per row.
    Vertical,
}

/// Whether the strip is added to or removed from the given partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripDirection {
    Add,
    Remove,
}

/// All partitions differing from `mu` by a strip of `r` boxes, largest first.
pub fn strips(mu: &Partition, kind: StripKind, direction: StripDirection, r: usize) -> Vec<Partition> {
    let mut out = match kind {
        StripKind::Horizontal => horizontal(mu, direction, r),
        StripKind::Vertical => horizontal(&mu.conjugate(), direction, r).iter().map(Partition::conjugate).collect(),
    };
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn horizontal(mu: &Partition, direction: StripDirection, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    match direction {
        StripDirection::Add => {
            // λ_i ranges over [μ_i, μ_{i-1}], with λ_1 unbounded above
            let n = mu.len() + 1;
            fn rec(mu: &Partition, i: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
                if i > n {
                    if left == 0 {
                        out.push(Partition::from_multiset(cur.clone()));
                    }
                    return;
                }
                let lo = mu.part(i);
                let hi = if i == 1 { lo + left } else { mu.part(i - 1).min(lo + left) };
                for v in lo..=hi {
                    cur.push(v);
                    rec(mu, i + 1, n, left - (v - lo), cur, out);
                    cur.pop();
                }
            }
            rec(mu, 1, n, r, &mut cur, &mut out);
        }
        StripDirection::Remove => {
            // λ_i ranges over [μ_{i+1}, μ_i]
            let n = mu.len();
            fn rec(mu: &Partition, i: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
                if i > n {
                    if left == 0 {
                        out.push(Partition::from_multiset(cur.clone()));
                    }
                    return;
                }
                let hi = mu.part(i);
                let lo = mu.part(i + 1).max(hi.saturating_sub(left));
                for v in lo..=hi {
                    cur.push(v);
                    rec(mu, i + 1, n, left - (hi - v), cur, out);
                    cur.pop();
                }
            }
            rec(mu, 1, n, r, &mut cur, &mut out);
        }
    }
    out
}

/// Whether `λ/μ` is a horizontal strip (`μ ⊆ λ` assumed).
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (2..=lambda.len()).all(|i| lambda.part(i) <= mu.part(i - 1))
}

/// Whether `λ/μ` is a vertical strip.
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (1..=lambda.len()).all(|i| lambda.part(i) <= mu.part(i) + 1)
}

/// Arm and leg of `s` in `λ`; `(0, 0)` for boxes outside the diagram.
pub fn arm_leg(lambda: &Partition, s: Box) -> (usize, usize) {
    if !lambda.contains_box(s) {
        return (0, 0);
    }
    let arm = lambda.part(s.row) - s.col;
    let leg = lambda.0.iter().skip(s.row).take_while(|&&p| p >= s.col).count();
    (arm, leg)
}

fn arm_leg_letter(lambda: &Partition, s: Box, mult: i64) -> MonomialLetter {
    let (a, l) = arm_leg(lambda, s);
    MonomialLetter::new(a as i32, l as i32, false, mult)
}

/// `B_λ(q,t) = Σ_{s∈λ} q^{a(s)} t^{l(s)}`.
pub fn b_stat(lambda: &Partition) -> MonomialSum {
    MonomialSum::from_letters(lambda.boxes().map(|s| arm_leg_letter(lambda, s, 1)))
}

/// The four signed strip statistics of `λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripStats {
    pub c: MonomialSum,
    pub r: MonomialSum,
    pub c_tilde: MonomialSum,
    pub r_tilde: MonomialSum,
}

/// Column and row statistics of `λ/μ`: `C` and `R` run over boxes of `λ` in
/// columns (rows) longer than those of `μ`, `C̃` and `R̃` over the columns
/// (rows) of equal length. Each box contributes its `λ` arm/leg monomial minus
/// its `μ` arm/leg monomial when it lies in `μ`.
pub fn strip_stats(lambda: &Partition, mu: &Partition) -> Result<StripStats> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained(mu.to_string(), lambda.to_string()));
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let mut st = StripStats {
        c: MonomialSum::empty(),
        r: MonomialSum::empty(),
        c_tilde: MonomialSum::empty(),
        r_tilde: MonomialSum::empty(),
    };
    for s in lambda.boxes() {
        let mut terms = vec![arm_leg_letter(lambda, s, 1)];
        if mu.contains_box(s) {
            terms.push(arm_leg_letter(mu, s, -1));
        }
        let col_longer = lc.part(s.col) > mc.part(s.col);
        let row_longer = lambda.part(s.row) > mu.part(s.row);
        for &l in &terms {
            if col_longer { st.c.push(l) } else { st.c_tilde.push(l) }
            if row_longer { st.r.push(l) } else { st.r_tilde.push(l) }
        }
    }
    Ok(st)
}

/// Dominance order `μ ≤ λ` on partitions of the same size.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size(), lambda.size()));
    }
    let (mut a, mut b) = (0, 0);
    for i in 1..=mu.len().max(lambda.len()) {
        a += mu.part(i);
        b += lambda.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partitions of `n`, largest first in lexicographic order, optionally with at
/// most `max_parts` parts and/or distinct parts.
pub fn enumerate(n: usize, max_parts: Option<usize>, distinct: bool) -> Vec<Partition> {
    fn rec(left: usize, cap: usize, slots: usize, distinct: bool, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            let next_cap = if distinct { p - 1 } else { p };
            rec(left - p, next_cap, slots - 1, distinct, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts.unwrap_or(n), distinct, &mut Vec::new(), &mut out);
    out
}

/// All partitions of sizes `0..=n`, grouped by size.
pub fn enumerate_upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|k| enumerate(k, None, false)).collect()
}
