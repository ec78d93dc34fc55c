//! Semistandard ribbon tableaux and domino reading words.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Composition, Partition, Ribbon};
use crate::tableau::{is_yamanouchi, Word};

/// A tiling of a Young diagram by r-ribbons, one entry per ribbon.
///
/// Ribbons are kept sorted by their cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RibbonTableau {
    shape: Partition,
    r: usize,
    ribbons: Vec<(Ribbon, u32)>,
}

impl RibbonTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn ribbon_size(&self) -> usize {
        self.r
    }

    pub fn ribbons(&self) -> &[(Ribbon, u32)] {
        &self.ribbons
    }

    /// The tiling without entries.
    pub fn tiling(&self) -> Vec<Ribbon> {
        self.ribbons.iter().map(|(rb, _)| rb.clone()).collect()
    }

    pub fn content(&self, alphabet: usize) -> Composition {
        let mut c = vec![0; alphabet];
        for &(_, x) in &self.ribbons {
            c[x as usize - 1] += 1;
        }
        Composition::new(c)
    }

    /// `(−1)^{Σ(ht − 1)}` of the tiling.
    pub fn spin_sign(&self) -> i64 {
        let parity: usize = self.ribbons.iter().map(|(rb, _)| rb.height() - 1).sum();
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn entry_at(&self) -> BTreeMap<Cell, (usize, u32)> {
        let mut map = BTreeMap::new();
        for (idx, (rb, x)) in self.ribbons.iter().enumerate() {
            for &c in rb.cells() {
                map.insert(c, (idx, *x));
            }
        }
        map
    }
}

impl fmt::Display for RibbonTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ribbons.is_empty() {
            return f.write_str("-");
        }
        for (k, (rb, x)) in self.ribbons.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            for c in rb.cells() {
                write!(f, "{c}")?;
            }
            write!(f, ":{x}")?;
        }
        Ok(())
    }
}

type State = (Partition, Vec<(Ribbon, u32)>);

/// No ribbon of entry `x` has its head directly below another cell of entry `x`.
fn is_horizontal_ribbon_strip(ribbons: &[(Ribbon, u32)], x: u32) -> bool {
    let cells: BTreeSet<Cell> = ribbons
        .iter()
        .filter(|(_, y)| *y == x)
        .flat_map(|(rb, _)| rb.cells().iter().copied())
        .collect();
    ribbons.iter().filter(|(_, y)| *y == x).all(|(rb, _)| {
        let head = rb.head();
        head.row == 1 || !cells.contains(&Cell::new(head.row - 1, head.col))
    })
}

/// All semistandard r-ribbon tableaux of the given shape and content, sorted.
///
/// ```
/// use tabsieve::{ribbon, Composition, Partition};
/// let shape: Partition = "2,2".parse().unwrap();
/// let ts = ribbon::enumerate_ribbon_tableaux(&shape, 2, &Composition::new(vec![1, 1])).unwrap();
/// assert_eq!(ts.len(), 2);
/// ```
pub fn enumerate_ribbon_tableaux(
    shape: &Partition,
    r: usize,
    content: &Composition,
) -> Result<Vec<RibbonTableau>> {
    if r == 0 {
        return Err(Error::InvalidParameter("ribbon size must be positive".into()));
    }
    let core = shape.r_core(r);
    if !core.is_empty() {
        return Err(Error::NonEmptyCore {
            shape: shape.clone(),
            r,
            core,
        });
    }
    if r * content.size() != shape.size() {
        return Err(Error::WeightMismatch {
            expected: shape.size(),
            found: r * content.size(),
        });
    }
    let mut level: BTreeSet<State> = BTreeSet::from([(Partition::empty(), Vec::new())]);
    for (idx, &count) in content.parts().iter().enumerate() {
        let x = idx as u32 + 1;
        for _ in 0..count {
            let mut next = BTreeSet::new();
            for (p, ribs) in &level {
                for (bigger, rb) in p.addable_ribbons(r) {
                    if !shape.contains(&bigger) {
                        continue;
                    }
                    let mut ribs = ribs.clone();
                    let pos = ribs.partition_point(|(other, _)| *other < rb);
                    ribs.insert(pos, (rb, x));
                    next.insert((bigger, ribs));
                }
            }
            level = next;
        }
        level.retain(|(_, ribs)| is_horizontal_ribbon_strip(ribs, x));
    }
    Ok(level
        .into_iter()
        .filter(|(p, _)| p == shape)
        .map(|(p, ribbons)| RibbonTableau {
            shape: p,
            r,
            ribbons,
        })
        .collect())
}

/// Columns left to right, bottom to top, each domino read where first met.
pub fn domino_reading_word(d: &RibbonTableau) -> Result<Word> {
    if d.r != 2 {
        return Err(Error::InvalidParameter(format!(
            "reading words need dominoes, got {}-ribbons",
            d.r
        )));
    }
    let at = d.entry_at();
    let mut seen = BTreeSet::new();
    let mut word = Vec::with_capacity(d.ribbons.len());
    for col in 1..=d.shape.part(1) {
        for row in (1..=d.shape.len()).rev() {
            if let Some(&(idx, x)) = at.get(&Cell::new(row, col)) {
                if seen.insert(idx) {
                    word.push(x);
                }
            }
        }
    }
    Ok(word)
}

/// Domino tableaux whose reading word is Yamanouchi.
pub fn enumerate_yamanouchi_domino(
    shape: &Partition,
    content: &Composition,
) -> Result<Vec<RibbonTableau>> {
    let top = content.len().max(1) as u32;
    let all = enumerate_ribbon_tableaux(shape, 2, content)?;
    let mut out = Vec::new();
    for d in all {
        if is_yamanouchi(&domino_reading_word(&d)?, 1, top, false) {
            out.push(d);
        }
    }
    Ok(out)
}
