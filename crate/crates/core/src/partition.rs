//! Partitions, compositions and the ribbon statistics built on them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are trimmed, so `Partition::new(vec![2, 1, 0])` equals
/// `Partition::new(vec![2, 1])`.
///
/// ```
/// use tabsieve::Partition;
/// let p: Partition = "4,4,2".parse().unwrap();
/// assert_eq!(p.conjugate().to_string(), "3,3,2,2");
/// assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
/// ```
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The partition `(c, c, ..., c)` with `rows` parts.
    pub fn rectangle(c: usize, rows: usize) -> Self {
        Partition::from_sorted(vec![c; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    pub fn v_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// True when `self / inner` has at most one cell per column.
    pub fn is_horizontal_strip(&self, inner: &Partition) -> Result<bool> {
        if !self.contains(inner) {
            return Err(Error::NotContained {
                outer: self.clone(),
                inner: inner.clone(),
            });
        }
        Ok((1..=self.len()).all(|i| inner.part(i) >= self.part(i + 1)))
    }

    /// All positive parts equal.
    pub fn is_rectangular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Cells of `self / inner` in row-major order.
    pub fn skew_cells<'a>(&'a self, inner: &'a Partition) -> impl Iterator<Item = Cell> + 'a {
        self.cells().filter(move |c| c.col > inner.part(c.row))
    }

    pub fn hook_length(&self, c: Cell) -> usize {
        let arm = self.part(c.row) - c.col;
        let leg = (c.row + 1..).take_while(|&r| self.part(r) >= c.col).count();
        arm + leg + 1
    }

    /// Corners that can be deleted leaving a partition.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// Cells that can be added leaving a partition.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i) < self.part(i - 1))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    pub fn with_cell_added(&self, c: Cell) -> Result<Partition> {
        if !self.addable_cells().contains(&c) {
            return Err(Error::NotAddable(c));
        }
        let mut parts = self.0.clone();
        if c.row > parts.len() {
            parts.push(1);
        } else {
            parts[c.row - 1] += 1;
        }
        Ok(Partition(parts))
    }

    pub fn with_cell_removed(&self, c: Cell) -> Result<Partition> {
        if !self.removable_cells().contains(&c) {
            return Err(Error::NotInsideCorner(c));
        }
        let mut parts = self.0.clone();
        parts[c.row - 1] -= 1;
        Ok(Partition::from_sorted(parts))
    }

    /// Every r-ribbon whose removal leaves a partition, paired with that partition.
    pub fn removable_ribbons(&self, r: usize) -> Vec<(Partition, Ribbon)> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for c in self.cells() {
            if self.hook_length(c) != r {
                continue;
            }
            let bottom = conj.part(c.col);
            let mut parts = self.0.clone();
            for t in c.row..bottom {
                parts[t - 1] = self.part(t + 1) - 1;
            }
            parts[bottom - 1] = c.col - 1;
            let smaller = Partition::from_sorted(parts);
            let ribbon = Ribbon::from_cells(self.skew_cells(&smaller).collect());
            out.push((smaller, ribbon));
        }
        out
    }

    /// Every r-ribbon that can be added, paired with the enlarged partition.
    ///
    /// Computed by sliding beads r steps on the abacus.
    pub fn addable_ribbons(&self, r: usize) -> Vec<(Partition, Ribbon)> {
        if r == 0 {
            return Vec::new();
        }
        let beads = self.len() + r;
        let beta = self.beta_numbers(beads);
        let occupied: BTreeSet<usize> = beta.iter().copied().collect();
        let mut out = Vec::new();
        for (idx, &b) in beta.iter().enumerate() {
            if occupied.contains(&(b + r)) {
                continue;
            }
            let mut moved = beta.clone();
            moved[idx] = b + r;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let bigger = Partition::from_beta(&moved);
            let ribbon = Ribbon::from_cells(bigger.skew_cells(self).collect());
            out.push((bigger, ribbon));
        }
        out.sort();
        out
    }

    /// `β_i = p_i + (count − i)` for `i = 1..=count`, strictly decreasing.
    pub fn beta_numbers(&self, count: usize) -> Vec<usize> {
        assert!(count >= self.len(), "too few beads for {self}");
        (1..=count).map(|i| self.part(i) + count - i).collect()
    }

    fn from_beta(beta: &[usize]) -> Partition {
        let count = beta.len();
        Partition::from_sorted(
            beta.iter()
                .enumerate()
                .map(|(i, &b)| b - (count - 1 - i))
                .collect(),
        )
    }

    pub fn r_core(&self, r: usize) -> Partition {
        assert!(r >= 1, "ribbon size must be positive");
        let mut cur = self.clone();
        while let Some((next, _)) = cur.removable_ribbons(r).into_iter().next() {
            cur = next;
        }
        cur
    }

    fn require_empty_core(&self, r: usize) -> Result<()> {
        let core = self.r_core(r);
        if core.is_empty() {
            Ok(())
        } else {
            Err(Error::NonEmptyCore {
                shape: self.clone(),
                r,
                core,
            })
        }
    }

    /// The r-quotient, components ordered by abacus runner residue.
    ///
    /// ```
    /// use tabsieve::Partition;
    /// let q = Partition::new(vec![2, 2]).unwrap().r_quotient(2).unwrap();
    /// assert_eq!(q, vec![Partition::new(vec![1]).unwrap(); 2]);
    /// ```
    pub fn r_quotient(&self, r: usize) -> Result<Vec<Partition>> {
        if r == 0 {
            return Err(Error::InvalidParameter("ribbon size must be positive".into()));
        }
        self.require_empty_core(r)?;
        let beads = self.len().div_ceil(r) * r;
        let per_runner = beads / r;
        let beta = self.beta_numbers(beads);
        let mut out = Vec::with_capacity(r);
        for runner in 0..r {
            let pos: Vec<usize> = beta
                .iter()
                .filter(|&&b| b % r == runner)
                .map(|&b| b / r)
                .collect();
            debug_assert_eq!(pos.len(), per_runner);
            let parts = pos
                .iter()
                .enumerate()
                .map(|(t, &q)| q - (per_runner - 1 - t))
                .collect();
            out.push(Partition::from_sorted(parts));
        }
        Ok(out)
    }

    /// `(−1)^{Σ(ht − 1)}` over an r-ribbon tiling.
    pub fn r_sign(&self, r: usize) -> Result<i64> {
        if r == 0 {
            return Err(Error::InvalidParameter("ribbon size must be positive".into()));
        }
        let mut cur = self.clone();
        let mut parity = 0;
        while let Some((next, ribbon)) = cur.removable_ribbons(r).into_iter().next() {
            parity += ribbon.height() - 1;
            cur = next;
        }
        if !cur.is_empty() {
            return Err(Error::NonEmptyCore {
                shape: self.clone(),
                r,
                core: cur,
            });
        }
        Ok(if parity % 2 == 0 { 1 } else { -1 })
    }

    /// Parts padded with zeros to exactly `count` entries.
    pub fn padded(&self, count: usize) -> Result<Vec<usize>> {
        if self.len() > count {
            return Err(Error::TooManyParts {
                what: "partition",
                found: self.len(),
                max: count,
            });
        }
        let mut v = self.0.clone();
        v.resize(count, 0);
        Ok(v)
    }

    /// Each part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }
}

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

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// A sequence of nonnegative integers where the length matters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiplicity of letter `i` (1-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `μ` padded to `m` entries.
    pub fn from_partition(p: &Partition, m: usize) -> Result<Self> {
        Ok(Composition(p.padded(m)?))
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Composition) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    pub fn repeat(&self, n: usize) -> Self {
        Composition(self.0.repeat(n))
    }

    /// Cyclic shift sending letter `i` to `i + 1` and the last letter to 1.
    pub fn rotate_right(&self) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_right(1);
        }
        Composition(v)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_parts(s)?))
    }
}

/// A set of cells forming a connected skew shape without a 2×2 block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ribbon {
    cells: Vec<Cell>,
}

impl Ribbon {
    /// Sorts the cells row-major. Panics if they do not form a ribbon.
    pub fn from_cells(mut cells: Vec<Cell>) -> Self {
        cells.sort();
        assert!(is_ribbon(&cells), "cells {cells:?} are not a ribbon");
        Ribbon { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Number of rows the ribbon meets.
    pub fn height(&self) -> usize {
        let top = self.cells.first().map_or(0, |c| c.row);
        let bottom = self.cells.last().map_or(0, |c| c.row);
        if self.cells.is_empty() {
            0
        } else {
            bottom - top + 1
        }
    }

    /// Rightmost cell of the top row.
    pub fn head(&self) -> Cell {
        let top = self.cells[0].row;
        *self.cells.iter().filter(|c| c.row == top).last().unwrap()
    }

    /// Leftmost cell of the bottom row.
    pub fn tail(&self) -> Cell {
        let bottom = self.cells.last().unwrap().row;
        *self.cells.iter().find(|c| c.row == bottom).unwrap()
    }

    pub fn leftmost_col(&self) -> usize {
        self.cells.iter().map(|c| c.col).min().unwrap_or(0)
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }
}

/// Nonempty, edge-connected, no 2×2 square.
pub fn is_ribbon(cells: &[Cell]) -> bool {
    if cells.is_empty() {
        return false;
    }
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    if set.len() != cells.len() {
        return false;
    }
    for c in &set {
        let square = [
            Cell::new(c.row, c.col + 1),
            Cell::new(c.row + 1, c.col),
            Cell::new(c.row + 1, c.col + 1),
        ];
        if square.iter().all(|d| set.contains(d)) {
            return false;
        }
    }
    let mut seen = BTreeSet::new();
    let mut stack = vec![cells[0]];
    while let Some(c) = stack.pop() {
        if !seen.insert(c) {
            continue;
        }
        let mut nbrs = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
        if c.row > 1 {
            nbrs.push(Cell::new(c.row - 1, c.col));
        }
        if c.col > 1 {
            nbrs.push(Cell::new(c.row, c.col - 1));
        }
        stack.extend(nbrs.into_iter().filter(|d| set.contains(d)));
    }
    seen.len() == set.len()
}

/// Partitions of `n` in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// Partitions of `n` with at most `max_parts` parts, each at most `max_part`,
/// in lexicographically decreasing order.
pub fn partitions_bounded(n: usize, max_parts: usize, max_part: usize) -> Vec<Partition> {
    fn go(
        rest: usize,
        max_parts: usize,
        max_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_parts == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, max_parts - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_parts, max_part, &mut Vec::new(), &mut out);
    out
}
