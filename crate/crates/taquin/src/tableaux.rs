//! Fillings of shapes (tabloids), standard tableaux, their enumeration and
//! ordering, the entry-relabelling action of permutations, canonical slide
//! orders, and hook products.

use std::fmt;

use thiserror::Error;

use crate::shape::{Cell, Dir, Shape};

/// Shapes above this size are refused by [`enumerate_standard`] unless the
/// caller opts in explicitly.
pub const ENUMERATION_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauxError {
    #[error("entries must be a bijection onto 1..={expected}")]
    NotBijective { expected: usize },
    #[error("expected {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("shape has {size} cells, above the cap of {cap}; pass an explicit cap to override")]
    TooLarge { size: usize, cap: usize },
    #[error("filling is not in the given universe")]
    NotFound,
    #[error("{0}")]
    Unsupported(String),
    #[error("the produced labelling is not a standard tableau")]
    NotStandard,
    #[error("hook product overflows u64")]
    Overflow,
}

/// A tabloid: a bijective filling of a shape's cells with `1..=n`.
///
/// Entries are stored in the shape's row-major cell order, so the entry
/// vector coincides with the reading word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Shape,
    entries: Vec<u32>,
}

impl Filling {
    /// Builds a filling from entries listed in row-major cell order.
    pub fn new(shape: Shape, entries: Vec<u32>) -> Result<Filling, TableauxError> {
        let n = shape.size();
        if entries.len() != n {
            return Err(TableauxError::WrongLength {
                expected: n,
                got: entries.len(),
            });
        }
        let mut seen = vec![false; n];
        for &e in &entries {
            let ok = e >= 1 && (e as usize) <= n && !seen[e as usize - 1];
            if !ok {
                return Err(TableauxError::NotBijective { expected: n });
            }
            seen[e as usize - 1] = true;
        }
        Ok(Filling { shape, entries })
    }

    pub(crate) fn from_raw(shape: Shape, entries: Vec<u32>) -> Filling {
        debug_assert!(Filling::new(shape.clone(), entries.clone()).is_ok());
        Filling { shape, entries }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Number of cells / entries.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entries in row-major cell order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [u32] {
        &mut self.entries
    }

    pub fn entry_at(&self, c: Cell) -> Option<u32> {
        self.shape.cell_index(c).map(|i| self.entries[i])
    }

    /// The cell holding a given entry.
    pub fn cell_of(&self, entry: u32) -> Option<Cell> {
        self.position_of(entry).map(|i| self.shape.cells()[i])
    }

    pub(crate) fn position_of(&self, entry: u32) -> Option<usize> {
        self.entries.iter().position(|&e| e == entry)
    }

    /// True iff entries strictly increase along rows and down columns,
    /// comparing member cells only.
    pub fn is_standard(&self) -> bool {
        (0..self.entries.len()).all(|i| {
            [Dir::Right, Dir::Below].iter().all(|&dir| {
                self.shape
                    .neighbor_idx(i, dir)
                    .is_none_or(|j| self.entries[j] > self.entries[i])
            })
        })
    }

    /// The permutation read off rowwise, top to bottom and left to right.
    pub fn reading_word(&self) -> Permutation {
        Permutation {
            word: self.entries.clone(),
        }
    }

    /// Replaces every entry `e` by `p(e)`.
    pub fn apply_permutation(&self, p: &Permutation) -> Result<Filling, TableauxError> {
        if p.len() != self.size() {
            return Err(TableauxError::WrongLength {
                expected: self.size(),
                got: p.len(),
            });
        }
        let entries = self.entries.iter().map(|&e| p.apply(e)).collect();
        Ok(Filling {
            shape: self.shape.clone(),
            entries,
        })
    }
}

/// A permutation of `{1..n}` as a word: position `i` holds the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn from_word(word: Vec<u32>) -> Result<Permutation, TableauxError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            let ok = v >= 1 && (v as usize) <= n && !seen[v as usize - 1];
            if !ok {
                return Err(TableauxError::NotBijective { expected: n });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// The image of `v` (1-based).
    pub fn apply(&self, v: u32) -> u32 {
        self.word[v as usize - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = (i + 1) as u32;
        }
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All standard fillings of the shape, sorted by reading word.
///
/// Entries `1..=n` are placed one at a time; a cell is eligible once its
/// left and above member neighbours are filled, which makes every completed
/// placement standard by construction.
pub fn enumerate_standard(shape: &Shape) -> Result<Vec<Filling>, TableauxError> {
    enumerate_standard_with_cap(shape, Some(ENUMERATION_CAP))
}

/// As [`enumerate_standard`], with an explicit cap (`None` = unlimited).
pub fn enumerate_standard_with_cap(
    shape: &Shape,
    cap: Option<usize>,
) -> Result<Vec<Filling>, TableauxError> {
    let n = shape.size();
    if let Some(cap) = cap {
        if n > cap {
            return Err(TableauxError::TooLarge { size: n, cap });
        }
    }

    let mut out = Vec::new();
    let mut entries = vec![0u32; n];
    fn place(shape: &Shape, entries: &mut Vec<u32>, value: u32, out: &mut Vec<Filling>) {
        let n = entries.len() as u32;
        if value > n {
            out.push(Filling::from_raw(shape.clone(), entries.clone()));
            return;
        }
        for i in 0..entries.len() {
            if entries[i] != 0 {
                continue;
            }
            let ready = [Dir::Left, Dir::Above].iter().all(|&dir| {
                shape
                    .neighbor_idx(i, dir)
                    .is_none_or(|j| entries[j] != 0)
            });
            if ready {
                entries[i] = value;
                place(shape, entries, value + 1, out);
                entries[i] = 0;
            }
        }
    }
    place(shape, &mut entries, 1, &mut out);
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    Ok(out)
}

/// 0-based rank of `f` in a universe sorted by reading word.
pub fn lex_index(f: &Filling, universe: &[Filling]) -> Result<usize, TableauxError> {
    universe
        .binary_search_by(|probe| probe.entries().cmp(f.entries()))
        .map_err(|_| TableauxError::NotFound)
}

/// The two slide orders with a known constant-fibre property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalOrder {
    /// Labels run down each column, columns left to right. Defined for
    /// unshifted shapes only.
    NpsColumn,
    /// Labels run along rows, `1..=n` in row-major order, so the slides are
    /// performed bottom row first and right to left within each row.
    RowwiseBottomUpRightLeft,
}

/// Builds the order tableau of the given kind for this shape.
pub fn canonical_order(shape: &Shape, kind: CanonicalOrder) -> Result<Filling, TableauxError> {
    let n = shape.size();
    let entries = match kind {
        CanonicalOrder::NpsColumn => {
            if shape.is_shifted() {
                return Err(TableauxError::Unsupported(
                    "the column order is defined for unshifted shapes only".into(),
                ));
            }
            let mut order: Vec<usize> = (0..n).collect();
            let cells = shape.cells();
            order.sort_by_key(|&i| (cells[i].col, cells[i].row));
            let mut entries = vec![0u32; n];
            for (label, idx) in order.into_iter().enumerate() {
                entries[idx] = (label + 1) as u32;
            }
            entries
        }
        CanonicalOrder::RowwiseBottomUpRightLeft => (1..=n as u32).collect(),
    };
    let filling = Filling::from_raw(shape.clone(), entries);
    if !filling.is_standard() {
        return Err(TableauxError::NotStandard);
    }
    Ok(filling)
}

/// Product of `arm + leg + 1` over all cells of an unshifted straight shape.
pub fn hook_product(shape: &Shape) -> Result<u64, TableauxError> {
    if shape.is_shifted() || !shape.is_straight() {
        return Err(TableauxError::Unsupported(
            "hook products are defined for unshifted straight shapes only".into(),
        ));
    }
    let outer = shape.outer();
    let mut product: u128 = 1;
    for (i, &mu) in outer.iter().enumerate() {
        for j in 1..=mu {
            let arm = (mu - j) as u128;
            let leg = outer[i + 1..].iter().filter(|&&m| m >= j).count() as u128;
            product *= arm + leg + 1;
        }
    }
    u64::try_from(product).map_err(|_| TableauxError::Overflow)
}
