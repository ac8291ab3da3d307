//! Shapes: unshifted/shifted, straight/skew Ferrers diagrams in absolute
//! coordinates, plus cell masks and the four neighbour relations.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A cell of a diagram, in 1-based absolute coordinates.
///
/// Shifted shapes use absolute columns as well: row `i` of a shifted shape
/// starts at column `i`, so "above" is always a plain `(row - 1, col)`
/// lookup regardless of the shape family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// One of the four neighbour directions used by the sliding moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Right,
    Below,
    Left,
    Above,
}

impl Dir {
    /// The cell one step in this direction, in absolute coordinates.
    /// Returns `None` when it would leave the positive quadrant.
    fn step(self, c: Cell) -> Option<Cell> {
        match self {
            Dir::Right => Some(Cell::new(c.row, c.col + 1)),
            Dir::Below => Some(Cell::new(c.row + 1, c.col)),
            Dir::Left => (c.col > 1).then(|| Cell::new(c.row, c.col - 1)),
            Dir::Above => (c.row > 1).then(|| Cell::new(c.row - 1, c.col)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("{0} is not a partition: parts must be weakly decreasing and non-negative")]
    NotPartition(String),
    #[error("shifted shapes need strictly decreasing positive parts, got {0}")]
    NotStrict(String),
    #[error("inner part {inner} exceeds outer part {outer} in row {row}")]
    InnerExceeds { row: usize, inner: u32, outer: u32 },
    #[error("cell {0} is outside the shape")]
    CellOutside(Cell),
    #[error("cell {0} is not in the mask")]
    NotInMask(Cell),
    #[error("cannot parse shape spec `{0}`: expected OUTER[/INNER][:shifted]")]
    BadSpec(String),
}

/// A (possibly skew, possibly shifted) diagram: the set of cells between an
/// inner and an outer partition.
///
/// Membership in absolute coordinates:
/// * unshifted: `(i,j)` is a cell iff `inner[i] < j <= outer[i]`,
/// * shifted:   `(i,j)` is a cell iff `i + inner[i] <= j <= i + outer[i] - 1`
///   (row `i` is indented by `i - 1` columns).
///
/// Values are immutable once constructed; clones share nothing mutable and
/// can be sent freely across threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    outer: Vec<u32>,
    inner: Vec<u32>,
    shifted: bool,
    cells: Vec<Cell>,
    // Neighbour tables indexed by cell index; None = not a member cell.
    right: Vec<Option<usize>>,
    below: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

fn is_weakly_decreasing(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

fn positive_parts_strict(parts: &[u32]) -> bool {
    parts
        .windows(2)
        .all(|w| w[1] == 0 || w[0] > w[1])
}

impl Shape {
    /// Validates and builds a shape. `inner` may be shorter than `outer`;
    /// it is padded with zeros. Trailing empty rows are dropped, so two
    /// specs describing the same cell set compare equal.
    pub fn new(outer: &[u32], inner: &[u32], shifted: bool) -> Result<Shape, ShapeError> {
        if !is_weakly_decreasing(outer) {
            return Err(ShapeError::NotPartition(format!("{outer:?}")));
        }
        if !is_weakly_decreasing(inner) {
            return Err(ShapeError::NotPartition(format!("{inner:?}")));
        }
        if shifted {
            if !positive_parts_strict(outer) {
                return Err(ShapeError::NotStrict(format!("{outer:?}")));
            }
            if !positive_parts_strict(inner) {
                return Err(ShapeError::NotStrict(format!("{inner:?}")));
            }
        }
        for (row, &part) in inner.iter().enumerate() {
            let outer_part = outer.get(row).copied().unwrap_or(0);
            if part > outer_part {
                return Err(ShapeError::InnerExceeds {
                    row: row + 1,
                    inner: part,
                    outer: outer_part,
                });
            }
        }

        let mut outer = outer.to_vec();
        let mut inner = inner.to_vec();
        inner.resize(outer.len(), 0);
        while outer.last() == Some(&0) {
            outer.pop();
            inner.pop();
        }

        let mut cells = Vec::new();
        for (i, (&mu, &la)) in outer.iter().zip(&inner).enumerate() {
            let row = (i + 1) as u32;
            let (lo, hi) = if shifted {
                (row + la, row + mu - 1) // empty when la == mu
            } else {
                (la + 1, mu)
            };
            for col in lo..=hi {
                cells.push(Cell::new(row, col));
            }
        }

        let lookup = |c: Cell| cells.binary_search(&c).ok();
        let table = |dir: Dir| -> Vec<Option<usize>> {
            cells
                .iter()
                .map(|&c| dir.step(c).and_then(lookup))
                .collect()
        };
        Ok(Shape {
            right: table(Dir::Right),
            below: table(Dir::Below),
            left: table(Dir::Left),
            above: table(Dir::Above),
            outer,
            inner,
            shifted,
            cells,
        })
    }

    /// Outer partition, with trailing zero rows removed.
    pub fn outer(&self) -> &[u32] {
        &self.outer
    }

    /// Inner partition, zero-padded to the outer partition's length.
    pub fn inner(&self) -> &[u32] {
        &self.inner
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    /// True when the inner partition is empty.
    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&p| p == 0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Number of rows (trailing empty rows trimmed).
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Width of the bounding grid, i.e. the largest occupied column.
    pub fn grid_cols(&self) -> u32 {
        self.cells.iter().map(|c| c.col).max().unwrap_or(0)
    }

    /// All member cells in row-major order (strictly increasing in
    /// `(row, col)`).
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cell_index(c).is_some()
    }

    /// Index of a cell in `cells()` order.
    pub fn cell_index(&self, c: Cell) -> Option<usize> {
        self.cells.binary_search(&c).ok()
    }

    /// The neighbouring member cell in the given direction, or `None` if
    /// that grid position is not part of the shape.
    pub fn neighbor(&self, c: Cell, dir: Dir) -> Result<Option<Cell>, ShapeError> {
        let idx = self.cell_index(c).ok_or(ShapeError::CellOutside(c))?;
        Ok(self.neighbor_idx(idx, dir).map(|i| self.cells[i]))
    }

    pub(crate) fn neighbor_idx(&self, idx: usize, dir: Dir) -> Option<usize> {
        match dir {
            Dir::Right => self.right[idx],
            Dir::Below => self.below[idx],
            Dir::Left => self.left[idx],
            Dir::Above => self.above[idx],
        }
    }
}

/// Renders the canonical spec string, `OUTER[/INNER][:shifted]`.
impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |parts: &[u32]| {
            parts
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.outer.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", join(&self.outer))?;
        }
        let inner: Vec<u32> = {
            let mut v = self.inner.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        if !inner.is_empty() {
            write!(f, "/{}", join(&inner))?;
        }
        if self.shifted {
            write!(f, ":shifted")?;
        }
        Ok(())
    }
}

/// Parses the spec grammar `OUTER[/INNER][:shifted]`, e.g.
/// `6,5,4,2/5,3:shifted` or `3,3,2`.
impl FromStr for Shape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Shape, ShapeError> {
        let bad = || ShapeError::BadSpec(s.to_string());
        let (body, shifted) = match s.split_once(':') {
            Some((body, "shifted")) => (body, true),
            Some(_) => return Err(bad()),
            None => (s, false),
        };
        let (outer_text, inner_text) = match body.split_once('/') {
            Some((o, i)) => (o, Some(i)),
            None => (body, None),
        };
        let parse_parts = |text: &str| -> Result<Vec<u32>, ShapeError> {
            text.split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
                .collect()
        };
        let outer = parse_parts(outer_text)?;
        let inner = match inner_text {
            Some(t) => parse_parts(t)?,
            None => Vec::new(),
        };
        Shape::new(&outer, &inner, shifted)
    }
}

/// A subset of a shape's cells, used to restrict backward slides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mask {
    shape: Shape,
    included: Vec<bool>,
}

impl Mask {
    /// The mask containing every cell of the shape.
    pub fn full(shape: &Shape) -> Mask {
        Mask {
            shape: shape.clone(),
            included: vec![true; shape.size()],
        }
    }

    /// Keeps only the cells satisfying the predicate.
    pub fn restrict(&self, pred: impl Fn(Cell) -> bool) -> Mask {
        let included = self
            .shape
            .cells()
            .iter()
            .zip(&self.included)
            .map(|(&c, &inc)| inc && pred(c))
            .collect();
        Mask {
            shape: self.shape.clone(),
            included,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.shape
            .cell_index(c)
            .is_some_and(|i| self.included[i])
    }

    pub(crate) fn contains_idx(&self, idx: usize) -> bool {
        self.included[idx]
    }

    pub(crate) fn flags(&self) -> &[bool] {
        &self.included
    }

    /// Member cells of the mask, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.shape
            .cells()
            .iter()
            .zip(&self.included)
            .filter_map(|(&c, &inc)| inc.then_some(c))
    }

    pub fn len(&self) -> usize {
        self.included.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.included.contains(&true)
    }

    /// Like [`Shape::neighbor`], additionally requiring both cells to be in
    /// the mask.
    pub fn neighbor(&self, c: Cell, dir: Dir) -> Result<Option<Cell>, ShapeError> {
        let idx = self
            .shape
            .cell_index(c)
            .ok_or(ShapeError::CellOutside(c))?;
        if !self.included[idx] {
            return Err(ShapeError::NotInMask(c));
        }
        Ok(self
            .shape
            .neighbor_idx(idx, dir)
            .filter(|&i| self.included[i])
            .map(|i| self.shape.cells()[i]))
    }
}
