//! Jeu de taquin slides and the dynamics built from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::tableau::SkewTableau;

/// Where a forward slide started, the cells the hole visited and the cell it left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideTrace {
    pub start: Cell,
    pub path: Vec<Cell>,
    pub vacated: Cell,
}

/// Cells of `inner` whose removal leaves a partition.
pub fn inside_corners(t: &SkewTableau) -> Vec<Cell> {
    t.inner().removable_cells()
}

/// One forward slide into the inside corner `corner`.
///
/// ```
/// use tabsieve::{jdt, Cell, SkewTableau};
/// let t: SkewTableau = ".,1/1,2".parse().unwrap();
/// let (u, trace) = jdt::slide(&t, Cell::new(1, 1)).unwrap();
/// assert_eq!(u.to_string(), "1,1/2");
/// assert_eq!(trace.vacated, Cell::new(2, 2));
/// ```
pub fn slide(t: &SkewTableau, corner: Cell) -> Result<(SkewTableau, SlideTrace)> {
    if !inside_corners(t).contains(&corner) {
        return Err(Error::NotInsideCorner(corner));
    }
    let (outer, inner, mut rows) = t.clone().into_parts();
    let (mut r, mut c) = (corner.row - 1, corner.col - 1);
    let mut path = vec![corner];
    loop {
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
        let right = rows[r].get(c + 1).copied();
        let down = match (below, right) {
            (Some(b), Some(a)) => b <= a,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if down {
            rows[r][c] = rows[r + 1][c];
            r += 1;
        } else {
            rows[r][c] = rows[r][c + 1];
            c += 1;
        }
        path.push(Cell::new(r + 1, c + 1));
    }
    rows[r].pop();
    if rows[r].is_empty() {
        rows.pop();
    }
    let vacated = Cell::new(r + 1, c + 1);
    let outer = outer.with_cell_removed(vacated)?;
    let inner = inner.with_cell_removed(corner)?;
    let u = SkewTableau::from_parts_unchecked(outer, inner, rows);
    Ok((
        u,
        SlideTrace {
            start: corner,
            path,
            vacated,
        },
    ))
}

/// Inverse slide starting from a cell addable to the outer shape.
///
/// ```
/// use tabsieve::{jdt, Cell, SkewTableau};
/// let t: SkewTableau = "1".parse().unwrap();
/// let u = jdt::reverse_slide(&t, Cell::new(1, 2)).unwrap();
/// assert_eq!(u.to_string(), ".,1");
/// ```
pub fn reverse_slide(t: &SkewTableau, cell: Cell) -> Result<SkewTableau> {
    if !t.outer().addable_cells().contains(&cell) {
        return Err(Error::NotAddable(cell));
    }
    let (outer, inner, mut rows) = t.clone().into_parts();
    let outer = outer.with_cell_added(cell)?;
    if cell.row > rows.len() {
        rows.push(Vec::new());
    }
    rows[cell.row - 1].push(0);
    let (mut r, mut c) = (cell.row - 1, cell.col - 1);
    loop {
        let above = if r > 0 && c >= inner.part(r) {
            Some(rows[r - 1][c])
        } else {
            None
        };
        let left = if c > 0 && c > inner.part(r + 1) {
            Some(rows[r][c - 1])
        } else {
            None
        };
        let up = match (above, left) {
            (Some(a), Some(l)) => a >= l,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if up {
            rows[r][c] = rows[r - 1][c];
            r -= 1;
        } else {
            rows[r][c] = rows[r][c - 1];
            c -= 1;
        }
        rows[r][c] = 0;
    }
    let inner = inner.with_cell_added(Cell::new(r + 1, c + 1))?;
    Ok(SkewTableau::from_parts_unchecked(outer, inner, rows))
}

/// Slides into the inside corner of the lowest nonempty inner row until straight.
pub fn rectify(t: &SkewTableau) -> SkewTableau {
    let mut cur = t.clone();
    while !cur.inner().is_empty() {
        let r = cur.inner().len();
        let corner = Cell::new(r, cur.inner().part(r));
        cur = slide(&cur, corner).expect("lowest inner corner").0;
    }
    cur
}

fn check_straight(t: &SkewTableau, s: usize) -> Result<()> {
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    t.check_entries(s)
}

/// Removes the 1s, decrements, rectifies and refills the vacated strip with `s`.
///
/// ```
/// use tabsieve::{jdt, SkewTableau};
/// let t: SkewTableau = "1,2/3,4".parse().unwrap();
/// assert_eq!(jdt::demote(&t, 4).unwrap().to_string(), "1,3/2,4");
/// ```
pub fn demote(t: &SkewTableau, s: usize) -> Result<SkewTableau> {
    check_straight(t, s)?;
    let kappa = t.outer().clone();
    let ones = t.rows().first().map_or(0, |r| r.iter().take_while(|&&x| x == 1).count());
    let (_, _, rows) = t.clone().into_parts();
    let rows = rows
        .into_iter()
        .map(|row| row.into_iter().map(|x| if x == 1 { 0 } else { x - 1 }).collect())
        .collect();
    let skew = SkewTableau::from_parts_unchecked(
        kappa.clone(),
        Partition::new(vec![ones]).expect("single row"),
        rows,
    );
    let rect = rectify(&skew);
    let (nu, _, mut rows) = rect.into_parts();
    rows.resize(kappa.len(), Vec::new());
    for (i, row) in rows.iter_mut().enumerate() {
        row.resize(kappa.part(i + 1), s as u32);
    }
    debug_assert!(kappa.is_horizontal_strip(&nu).unwrap());
    Ok(SkewTableau::from_parts_unchecked(kappa, Partition::empty(), rows))
}

/// The inverse of [`demote`], built from reverse slides.
///
/// ```
/// use tabsieve::{jdt, SkewTableau};
/// let t: SkewTableau = "1,3/2,4".parse().unwrap();
/// assert_eq!(jdt::promote(&t, 4).unwrap().to_string(), "1,2/3,4");
/// ```
pub fn promote(t: &SkewTableau, s: usize) -> Result<SkewTableau> {
    check_straight(t, s)?;
    let kappa = t.outer().clone();
    let top = s as u32;
    let mut cur = t.restrict(top.saturating_sub(1));
    let mut strip: Vec<Cell> = kappa.skew_cells(cur.outer()).collect();
    strip.sort_by_key(|c| c.col);
    for cell in strip {
        cur = reverse_slide(&cur, cell)?;
    }
    debug_assert!(cur.inner().len() <= 1);
    let (outer, _, rows) = cur.into_parts();
    let rows = rows
        .into_iter()
        .map(|row| row.into_iter().map(|x| x + 1).collect())
        .collect();
    Ok(SkewTableau::from_parts_unchecked(outer, Partition::empty(), rows))
}

/// The Schützenberger involution from the chain of shapes of iterated demotions.
///
/// ```
/// use tabsieve::{jdt, SkewTableau};
/// let t: SkewTableau = "1,2/3".parse().unwrap();
/// assert_eq!(jdt::evacuate(&t, 3).unwrap().to_string(), "1,3/2");
/// ```
pub fn evacuate(t: &SkewTableau, s: usize) -> Result<SkewTableau> {
    check_straight(t, s)?;
    let kappa = t.outer().clone();
    let mut chain = vec![Partition::empty(); s + 1];
    let mut cur = t.clone();
    for i in (1..=s).rev() {
        cur = cur.restrict(i as u32);
        chain[i] = cur.outer().clone();
        cur = demote(&cur, i)?;
    }
    let mut rows: Vec<Vec<u32>> = (1..=kappa.len()).map(|r| vec![0; kappa.part(r)]).collect();
    for i in 1..=s {
        for c in chain[i].skew_cells(&chain[i - 1]) {
            rows[c.row - 1][c.col - 1] = i as u32;
        }
    }
    Ok(SkewTableau::from_parts_unchecked(kappa, Partition::empty(), rows))
}
