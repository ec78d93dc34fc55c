//! Semistandard skew tableaux, reading words and enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Composition, Partition};

pub type Word = Vec<u32>;

/// A filling of `outer / inner` by positive integers.
///
/// Rows are stored at full outer length with `0` marking inner cells.
/// Ordering compares shapes first, then entries row by row.
///
/// ```
/// use tabsieve::SkewTableau;
/// let t: SkewTableau = ".,1/1,2".parse().unwrap();
/// assert_eq!(t.outer().to_string(), "2,2");
/// assert_eq!(t.inner().to_string(), "1");
/// assert_eq!(t.reading_word(), vec![1, 2, 1]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    /// Checks shape, placement of zeros and semistandardness.
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        if rows.len() != outer.len() {
            return Err(Error::NotSemistandard(format!(
                "{} rows given for shape {outer}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != outer.part(i + 1) {
                return Err(Error::NotSemistandard(format!("row {} has wrong length", i + 1)));
            }
            let k = inner.part(i + 1);
            if row[..k].iter().any(|&x| x != 0) || row[k..].iter().any(|&x| x == 0) {
                return Err(Error::NotSemistandard(format!(
                    "row {} mixes inner and filled cells",
                    i + 1
                )));
            }
        }
        let t = SkewTableau { outer, inner, rows };
        t.check_semistandard()?;
        Ok(t)
    }

    pub(crate) fn from_parts_unchecked(
        outer: Partition,
        inner: Partition,
        rows: Vec<Vec<u32>>,
    ) -> Self {
        let t = SkewTableau { outer, inner, rows };
        debug_assert!(t.check_semistandard().is_ok(), "{t}");
        t
    }

    /// Straight-shape tableau from its rows.
    pub fn straight(rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        SkewTableau::new(outer, Partition::empty(), rows)
    }

    pub fn empty() -> Self {
        SkewTableau {
            outer: Partition::empty(),
            inner: Partition::empty(),
            rows: Vec::new(),
        }
    }

    /// Fills every cell of `outer / inner` with `value`.
    pub fn constant(outer: &Partition, inner: &Partition, value: u32) -> Self {
        let rows = (1..=outer.len())
            .map(|i| {
                let mut row = vec![0; outer.part(i)];
                row[inner.part(i)..].fill(value);
                row
            })
            .collect();
        SkewTableau::from_parts_unchecked(outer.clone(), inner.clone(), rows)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Entry at a filled cell.
    pub fn get(&self, c: Cell) -> Option<u32> {
        if c.row == 0 || c.col == 0 {
            return None;
        }
        match self.rows.get(c.row - 1)?.get(c.col - 1) {
            Some(&0) | None => None,
            Some(&x) => Some(x),
        }
    }

    /// Filled cells in row-major order with their entries.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(move |(j, &x)| (Cell::new(i + 1, j + 1), x))
        })
    }

    /// Columns left to right, each bottom to top.
    pub fn reading_word(&self) -> Word {
        let mut w = Vec::with_capacity(self.size());
        for col in 0..self.outer.part(1) {
            for row in self.rows.iter().rev() {
                if let Some(&x) = row.get(col) {
                    if x != 0 {
                        w.push(x);
                    }
                }
            }
        }
        w
    }

    pub fn content(&self, alphabet: usize) -> Result<Composition> {
        let mut c = vec![0usize; alphabet];
        for (_, x) in self.entries() {
            let idx = x as usize;
            if idx > alphabet {
                return Err(Error::EntryOutOfRange {
                    entry: x,
                    bound: alphabet,
                });
            }
            c[idx - 1] += 1;
        }
        Ok(Composition::new(c))
    }

    pub fn check_entries(&self, alphabet: usize) -> Result<()> {
        self.content(alphabet).map(|_| ())
    }

    fn check_semistandard(&self) -> Result<()> {
        for (c, x) in self.entries() {
            if let Some(left) = self.get(Cell::new(c.row, c.col - 1)) {
                if left > x {
                    return Err(Error::NotSemistandard(format!("row decreases at {c}")));
                }
            }
            if c.row > 1 {
                if let Some(up) = self.get(Cell::new(c.row - 1, c.col)) {
                    if up >= x {
                        return Err(Error::NotSemistandard(format!(
                            "column not strict at {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The subtableau on entries in `lo..=hi`, entries unchanged.
    ///
    /// Its shape is the shape of entries `≤ hi` over the shape of entries `< lo`
    /// (inner cells of `self` count as entries below every letter).
    pub fn sub_range(&self, lo: u32, hi: u32) -> SkewTableau {
        let shape_upto = |bound: u32| -> Vec<usize> {
            self.rows
                .iter()
                .map(|row| row.iter().take_while(|&&x| x <= bound).count())
                .collect()
        };
        let outer = Partition::from_sorted(shape_upto(hi));
        let inner = Partition::from_sorted(shape_upto(lo.saturating_sub(1)));
        let rows = self
            .rows
            .iter()
            .take(outer.len())
            .enumerate()
            .map(|(i, row)| {
                row[..outer.part(i + 1)]
                    .iter()
                    .map(|&x| if x < lo { 0 } else { x })
                    .collect()
            })
            .collect();
        SkewTableau::from_parts_unchecked(outer, inner, rows)
    }

    /// Keeps entries `≤ max`.
    pub fn restrict(&self, max: u32) -> SkewTableau {
        let mut t = self.sub_range(1, max);
        t.inner = self.inner.clone();
        t
    }

    /// Applies `f` to every filled entry.
    pub fn map_entries(&self, f: impl Fn(u32) -> u32) -> SkewTableau {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&x| if x == 0 { 0 } else { f(x) }).collect())
            .collect();
        SkewTableau::from_parts_unchecked(self.outer.clone(), self.inner.clone(), rows)
    }

    pub(crate) fn into_parts(self) -> (Partition, Partition, Vec<Vec<u32>>) {
        (self.outer, self.inner, self.rows)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("-");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, &x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                if x == 0 {
                    f.write_str(".")?;
                } else {
                    write!(f, "{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for SkewTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(SkewTableau::empty());
        }
        let mut rows = Vec::new();
        let mut inner = Vec::new();
        for line in s.split('/') {
            let mut row = Vec::new();
            for tok in line.split(',') {
                let tok = tok.trim();
                if tok == "." {
                    row.push(0);
                } else {
                    let x: u32 = tok
                        .parse()
                        .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
                    if x == 0 {
                        return Err(Error::Parse("entries must be positive".into()));
                    }
                    row.push(x);
                }
            }
            inner.push(row.iter().take_while(|&&x| x == 0).count());
            rows.push(row);
        }
        let outer = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::Parse(e.to_string()))?;
        let inner = Partition::new(inner).map_err(|e| Error::Parse(e.to_string()))?;
        SkewTableau::new(outer, inner, rows)
    }
}

/// Tests each pair `(i, i+1)` with `lo ≤ i < hi`.
///
/// Yamanouchi: every suffix has at least as many `i` as `i+1`, so no `e_i` applies.
/// Anti-Yamanouchi: every prefix has at most as many `i` as `i+1`, so no `f_i` applies.
///
/// ```
/// use tabsieve::is_yamanouchi;
/// assert!(is_yamanouchi(&[2, 1, 1], 1, 2, false));
/// assert!(!is_yamanouchi(&[2, 1, 2], 1, 2, false));
/// assert!(is_yamanouchi(&[2, 2, 1], 1, 2, true));
/// assert!(!is_yamanouchi(&[1, 2, 2], 1, 2, true));
/// ```
pub fn is_yamanouchi(w: &[u32], lo: u32, hi: u32, anti: bool) -> bool {
    if hi <= lo {
        return true;
    }
    let width = (hi - lo + 1) as usize;
    let mut counts = vec![0usize; width];
    let letters = w.iter().filter(|&&x| lo <= x && x <= hi).map(|&x| (x - lo) as usize);
    if anti {
        for k in letters {
            counts[k] += 1;
            if k + 1 < width && counts[k] > counts[k + 1] {
                return false;
            }
        }
    } else {
        for k in letters.rev() {
            counts[k] += 1;
            if k > 0 && counts[k] > counts[k - 1] {
                return false;
            }
        }
    }
    true
}

/// Backtracking over `outer / inner` in row-major order, smallest entry first.
///
/// With `content = Some(c)` entries run over `1..=c.len()` with multiplicities `c`;
/// otherwise over `1..=alphabet` freely.
fn enumerate_fillings(
    outer: &Partition,
    inner: &Partition,
    alphabet: usize,
    content: Option<&[usize]>,
    out: &mut Vec<SkewTableau>,
) {
    let cells: Vec<Cell> = outer.skew_cells(inner).collect();
    let mut rows: Vec<Vec<u32>> = (1..=outer.len()).map(|i| vec![0; outer.part(i)]).collect();
    let mut remaining: Vec<usize> = match content {
        Some(c) => c.to_vec(),
        None => vec![usize::MAX; alphabet],
    };

    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        cells: &[Cell],
        inner: &Partition,
        outer: &Partition,
        rows: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<usize>,
        out: &mut Vec<SkewTableau>,
    ) {
        let Some(&c) = cells.get(idx) else {
            out.push(SkewTableau {
                outer: outer.clone(),
                inner: inner.clone(),
                rows: rows.clone(),
            });
            return;
        };
        let (r, col) = (c.row - 1, c.col - 1);
        let mut lo = 1u32;
        if col > 0 && rows[r][col - 1] != 0 {
            lo = lo.max(rows[r][col - 1]);
        }
        if r > 0 && rows[r - 1][col] != 0 {
            lo = lo.max(rows[r - 1][col] + 1);
        }
        for v in lo..=remaining.len() as u32 {
            let slot = (v - 1) as usize;
            if remaining[slot] == 0 {
                continue;
            }
            remaining[slot] -= 1;
            rows[r][col] = v;
            go(idx + 1, cells, inner, outer, rows, remaining, out);
            rows[r][col] = 0;
            remaining[slot] += 1;
        }
    }

    go(0, &cells, inner, outer, &mut rows, &mut remaining, out);
}

/// All semistandard fillings of `outer / inner` with the given content.
///
/// ```
/// use tabsieve::{enumerate_ssyt, Composition, Partition};
/// let shape: Partition = "2,1".parse().unwrap();
/// let ts = enumerate_ssyt(&shape, &Partition::empty(), &Composition::new(vec![1, 1, 1])).unwrap();
/// let shown: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
/// assert_eq!(shown, ["1,2/3", "1,3/2"]);
/// ```
pub fn enumerate_ssyt(
    outer: &Partition,
    inner: &Partition,
    content: &Composition,
) -> Result<Vec<SkewTableau>> {
    if !outer.contains(inner) {
        return Err(Error::NotContained {
            outer: outer.clone(),
            inner: inner.clone(),
        });
    }
    let cells = outer.size() - inner.size();
    if cells != content.size() {
        return Err(Error::WeightMismatch {
            expected: cells,
            found: content.size(),
        });
    }
    let mut out = Vec::new();
    enumerate_fillings(outer, inner, content.len(), Some(content.parts()), &mut out);
    Ok(out)
}

/// All semistandard fillings of `outer / inner` with entries in `1..=alphabet`.
pub fn enumerate_ssyt_bounded(
    outer: &Partition,
    inner: &Partition,
    alphabet: usize,
) -> Result<Vec<SkewTableau>> {
    if !outer.contains(inner) {
        return Err(Error::NotContained {
            outer: outer.clone(),
            inner: inner.clone(),
        });
    }
    let mut out = Vec::new();
    enumerate_fillings(outer, inner, alphabet, None, &mut out);
    Ok(out)
}

/// Keeps the tableaux whose reading word is Yamanouchi over `1..=max entry`.
pub fn lr_filter(ts: Vec<SkewTableau>) -> Vec<SkewTableau> {
    ts.into_iter()
        .filter(|t| is_yamanouchi(&t.reading_word(), 1, t.max_entry().max(1), false))
        .collect()
}
