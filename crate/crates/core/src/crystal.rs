//! Type A crystal operators on tableaux and the block decompositions used for
//! evacuation and promotion.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jdt::rectify;
use crate::tableau::SkewTableau;

fn check_index(i: usize, s: usize) -> Result<()> {
    if i == 0 || i >= s {
        Err(Error::IndexOutOfRange { i, s })
    } else {
        Ok(())
    }
}

/// Per column: (#i, #(i+1)).
fn column_counts(t: &SkewTableau, i: u32) -> Vec<(i64, i64)> {
    let width = t.outer().part(1);
    let mut counts = vec![(0i64, 0i64); width];
    for (c, x) in t.entries() {
        if x == i {
            counts[c.col - 1].0 += 1;
        } else if x == i + 1 {
            counts[c.col - 1].1 += 1;
        }
    }
    counts
}

fn replace_in_column(t: &SkewTableau, col: usize, from: u32, to: u32) -> SkewTableau {
    let (outer, inner, mut rows) = t.clone().into_parts();
    let row = rows
        .iter_mut()
        .find(|r| r.get(col) == Some(&from))
        .expect("column holds the letter");
    row[col] = to;
    SkewTableau::from_parts_unchecked(outer, inner, rows)
}

/// Raising operator `e_i` on tableaux with entries in `1..=s`; `None` when it vanishes.
///
/// ```
/// use tabsieve::{crystal, SkewTableau};
/// let t: SkewTableau = "2,2".parse().unwrap();
/// let up = crystal::apply_e(&t, 1, 2).unwrap().unwrap();
/// assert_eq!(up.to_string(), "1,2");
/// assert_eq!(crystal::apply_e(&up, 1, 2).unwrap().unwrap().to_string(), "1,1");
/// ```
pub fn apply_e(t: &SkewTableau, i: usize, s: usize) -> Result<Option<SkewTableau>> {
    check_index(i, s)?;
    let counts = column_counts(t, i as u32);
    let mut h = 0i64;
    let mut best: Option<(i64, usize)> = None;
    for j in (0..counts.len()).rev() {
        h += counts[j].1 - counts[j].0;
        if h > 0 && best.map_or(true, |(b, _)| h > b) {
            best = Some((h, j));
        }
    }
    Ok(best.map(|(_, j)| replace_in_column(t, j, i as u32 + 1, i as u32)))
}

/// Lowering operator `f_i`; `None` when it vanishes.
pub fn apply_f(t: &SkewTableau, i: usize, s: usize) -> Result<Option<SkewTableau>> {
    check_index(i, s)?;
    let counts = column_counts(t, i as u32);
    let mut k = 0i64;
    let mut best: Option<(i64, usize)> = None;
    for (j, &(a, b)) in counts.iter().enumerate() {
        k += a - b;
        if k > 0 && best.map_or(true, |(m, _)| k > m) {
            best = Some((k, j));
        }
    }
    Ok(best.map(|(_, j)| replace_in_column(t, j, i as u32, i as u32 + 1)))
}

/// `(ε_i, φ_i)`: how many times `e_i` and `f_i` can be applied.
pub fn string_lengths(t: &SkewTableau, i: usize, s: usize) -> Result<(usize, usize)> {
    check_index(i, s)?;
    let mut eps = 0;
    let mut cur = t.clone();
    while let Some(next) = apply_e(&cur, i, s)? {
        eps += 1;
        cur = next;
    }
    let mut phi = 0;
    let mut cur = t.clone();
    while let Some(next) = apply_f(&cur, i, s)? {
        phi += 1;
        cur = next;
    }
    Ok((eps, phi))
}

/// A set of crystal indices in `1..s`.
///
/// Indices in `flipped` use `f_i` as their raising operator, as happens for the
/// first block when splitting for evacuation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrystalIndexSet {
    s: usize,
    indices: BTreeSet<usize>,
    flipped: BTreeSet<usize>,
}

impl CrystalIndexSet {
    pub fn new(s: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        for &i in &indices {
            check_index(i, s)?;
        }
        Ok(CrystalIndexSet {
            s,
            indices,
            flipped: BTreeSet::new(),
        })
    }

    pub fn empty(s: usize) -> Self {
        CrystalIndexSet {
            s,
            indices: BTreeSet::new(),
            flipped: BTreeSet::new(),
        }
    }

    /// `{1, ..., s−1}`.
    pub fn full(s: usize) -> Self {
        CrystalIndexSet {
            s,
            indices: (1..s).collect(),
            flipped: BTreeSet::new(),
        }
    }

    /// `⋃_k {km+1, ..., km+m−1}` inside the alphabet `1..=mn`.
    pub fn blocks(m: usize, n: usize) -> Self {
        let indices = (0..n)
            .flat_map(|k| k * m + 1..(k + 1) * m)
            .collect();
        CrystalIndexSet {
            s: m * n,
            indices,
            flipped: BTreeSet::new(),
        }
    }

    /// Two blocks of size `m` where the first block is raised by `f`.
    pub fn evacuation_blocks(m: usize) -> Self {
        let mut set = CrystalIndexSet::blocks(m, 2);
        set.flipped = (1..m).collect();
        set
    }

    pub fn alphabet(&self) -> usize {
        self.s
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn is_flipped(&self, i: usize) -> bool {
        self.flipped.contains(&i)
    }

    fn raise(&self, t: &SkewTableau, i: usize) -> Result<Option<SkewTableau>> {
        if self.is_flipped(i) {
            apply_f(t, i, self.s)
        } else {
            apply_e(t, i, self.s)
        }
    }

    fn lower(&self, t: &SkewTableau, i: usize) -> Result<Option<SkewTableau>> {
        if self.is_flipped(i) {
            apply_e(t, i, self.s)
        } else {
            apply_f(t, i, self.s)
        }
    }
}

/// Every raising operator in `set` vanishes at `t`.
pub fn is_highest_weight(t: &SkewTableau, set: &CrystalIndexSet) -> bool {
    set.indices()
        .all(|i| set.raise(t, i).expect("index checked").is_none())
}

/// Every lowering operator in `set` vanishes at `t`.
pub fn is_lowest_weight(t: &SkewTableau, set: &CrystalIndexSet) -> bool {
    set.indices()
        .all(|i| set.lower(t, i).expect("index checked").is_none())
}

/// Connected component of `t` under the operators indexed by `set`.
pub fn component_of(t: &SkewTableau, set: &CrystalIndexSet) -> BTreeSet<SkewTableau> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    seen.insert(t.clone());
    while let Some(cur) = queue.pop_front() {
        for i in set.indices() {
            for next in [
                apply_e(&cur, i, set.s).expect("index checked"),
                apply_f(&cur, i, set.s).expect("index checked"),
            ]
            .into_iter()
            .flatten()
            {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// The blocks of a tableau on `1..=mn`, each reduced to entries `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitTuple {
    pub blocks: Vec<SkewTableau>,
}

/// Splits `t` into the subtableaux on `km+1..=(k+1)m`, shifted down and rectified.
///
/// ```
/// use tabsieve::{crystal, SkewTableau};
/// let t: SkewTableau = "1,1/2,2".parse().unwrap();
/// let split = crystal::split_blocks(&t, 1, 2).unwrap();
/// let shown: Vec<String> = split.blocks.iter().map(|b| b.to_string()).collect();
/// assert_eq!(shown, ["1,1", "1,1"]);
/// ```
pub fn split_blocks(t: &SkewTableau, m: usize, n: usize) -> Result<SplitTuple> {
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("block size and count must be positive".into()));
    }
    t.check_entries(m * n)?;
    let blocks = (0..n)
        .map(|k| {
            let lo = (k * m) as u32;
            let sub = t.sub_range(lo + 1, lo + m as u32).map_entries(|x| x - lo);
            rectify(&sub)
        })
        .collect();
    Ok(SplitTuple { blocks })
}
