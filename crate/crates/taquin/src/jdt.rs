//! The sliding engine: forward and backward jeu de taquin, the modified jeu
//! de taquin driven by an order tableau, and the paired operations that
//! replay every transposition onto a companion filling.

use thiserror::Error;

use crate::shape::{Cell, Dir, Mask, Shape};
use crate::tableaux::Filling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JdtError {
    #[error("cell {0} is outside the shape")]
    CellOutside(Cell),
    #[error("cell {0} is not in the mask")]
    NotInMask(Cell),
    #[error("fillings have different shapes")]
    ShapeMismatch,
    #[error("the order filling is not a standard tableau")]
    NotStandard,
    #[error("label {0} is out of range")]
    InvalidLabel(u32),
}

/// The ordered list of adjacent transpositions performed by one slide run.
///
/// Replaying a transcript onto another filling of the same shape is the one
/// mechanism behind "perform the transpositions simultaneously": every
/// paired operation goes through [`Transcript::replay`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transcript {
    moves: Vec<(Cell, Cell)>,
}

impl Transcript {
    fn from_indices(shape: &Shape, moves: &[(usize, usize)]) -> Transcript {
        let cells = shape.cells();
        Transcript {
            moves: moves.iter().map(|&(a, b)| (cells[a], cells[b])).collect(),
        }
    }

    /// The swaps in execution order, each a pair of adjacent member cells.
    pub fn moves(&self) -> &[(Cell, Cell)] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Applies the recorded swaps, in order, to a filling of the same shape.
    pub fn replay(&self, f: &Filling) -> Result<Filling, JdtError> {
        let mut out = f.clone();
        self.replay_in_place(&mut out)?;
        Ok(out)
    }

    pub(crate) fn replay_in_place(&self, f: &mut Filling) -> Result<(), JdtError> {
        let shape = f.shape().clone();
        for &(a, b) in &self.moves {
            let i = shape.cell_index(a).ok_or(JdtError::CellOutside(a))?;
            let j = shape.cell_index(b).ok_or(JdtError::CellOutside(b))?;
            f.entries_mut().swap(i, j);
        }
        Ok(())
    }
}

/// A pair of fillings of the same shape, moved in lockstep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedState {
    first: Filling,
    second: Filling,
}

impl PairedState {
    pub fn new(first: Filling, second: Filling) -> Result<PairedState, JdtError> {
        if first.shape() != second.shape() {
            return Err(JdtError::ShapeMismatch);
        }
        Ok(PairedState { first, second })
    }

    pub fn first(&self) -> &Filling {
        &self.first
    }

    pub fn second(&self) -> &Filling {
        &self.second
    }

    pub fn into_parts(self) -> (Filling, Filling) {
        (self.first, self.second)
    }

    /// Exchanges the two components.
    pub fn switch(self) -> PairedState {
        PairedState {
            first: self.second,
            second: self.first,
        }
    }
}

// --- raw index-based kernels -------------------------------------------
//
// Hot paths (the count-matrix sweeps) run on bare entry slices; the public
// operations wrap these with validation and transcripts.

/// Slides the entry at `pos` right/down while it exceeds the smaller of its
/// right and below neighbours (missing neighbours count as infinite).
pub(crate) fn fjdt_raw(
    shape: &Shape,
    entries: &mut [u32],
    mut pos: usize,
    mut moves: Option<&mut Vec<(usize, usize)>>,
) {
    loop {
        let e = entries[pos];
        let right = shape.neighbor_idx(pos, Dir::Right);
        let below = shape.neighbor_idx(pos, Dir::Below);
        let target = match (right, below) {
            (None, None) => None,
            (Some(r), None) => (entries[r] < e).then_some(r),
            (None, Some(b)) => (entries[b] < e).then_some(b),
            (Some(r), Some(b)) => {
                // Entries are distinct, so the minimum is unique.
                debug_assert_ne!(entries[r], entries[b]);
                let m = if entries[r] < entries[b] { r } else { b };
                (entries[m] < e).then_some(m)
            }
        };
        match target {
            Some(t) => {
                entries.swap(pos, t);
                if let Some(ref mut mv) = moves {
                    mv.push((pos, t));
                }
                pos = t;
            }
            None => return,
        }
    }
}

/// Slides the entry at `pos` left/up, always exchanging with the larger of
/// the left and above neighbours inside the mask (missing neighbours count
/// as zero), until neither exists.
pub(crate) fn bjdt_raw(
    shape: &Shape,
    entries: &mut [u32],
    mut pos: usize,
    in_mask: &[bool],
    mut moves: Option<&mut Vec<(usize, usize)>>,
) {
    loop {
        let left = shape
            .neighbor_idx(pos, Dir::Left)
            .filter(|&i| in_mask[i]);
        let above = shape
            .neighbor_idx(pos, Dir::Above)
            .filter(|&i| in_mask[i]);
        let target = match (left, above) {
            (None, None) => None,
            (Some(l), None) => Some(l),
            (None, Some(a)) => Some(a),
            (Some(l), Some(a)) => {
                debug_assert_ne!(entries[l], entries[a]);
                Some(if entries[l] > entries[a] { l } else { a })
            }
        };
        match target {
            Some(t) => {
                entries.swap(pos, t);
                if let Some(ref mut mv) = moves {
                    mv.push((pos, t));
                }
                pos = t;
            }
            None => return,
        }
    }
}

/// Runs the whole modified jeu de taquin on a bare entry slice:
/// one forward slide per label, largest label first.
pub(crate) fn mj_raw(shape: &Shape, entries: &mut [u32], cell_of_label: &[usize]) {
    for &start in cell_of_label.iter().rev() {
        fjdt_raw(shape, entries, start, None);
    }
}

/// Positions of labels `1..=n` in an order tableau.
pub(crate) fn label_positions(order: &Filling) -> Vec<usize> {
    let mut cell_of_label = vec![0usize; order.size()];
    for (idx, &label) in order.entries().iter().enumerate() {
        cell_of_label[label as usize - 1] = idx;
    }
    cell_of_label
}

// --- public operations ---------------------------------------------------

/// Forward jeu de taquin with the entry at `start`: repeatedly exchange it
/// with the smaller of its right and below neighbours while it is larger,
/// treating cells outside the shape as infinite.
pub fn forward_jdt(t: &Filling, start: Cell) -> Result<(Filling, Transcript), JdtError> {
    let pos = t
        .shape()
        .cell_index(start)
        .ok_or(JdtError::CellOutside(start))?;
    let mut out = t.clone();
    let mut moves = Vec::new();
    fjdt_raw(t.shape(), out.entries_mut(), pos, Some(&mut moves));
    let transcript = Transcript::from_indices(t.shape(), &moves);
    Ok((out, transcript))
}

/// Backward jeu de taquin with the entry at `start`, restricted to `mask`:
/// repeatedly exchange it with the larger of its left and above neighbours
/// inside the mask (cells outside count as zero) until neither exists.
pub fn backward_jdt(
    t: &Filling,
    start: Cell,
    mask: &Mask,
) -> Result<(Filling, Transcript), JdtError> {
    if mask.shape() != t.shape() {
        return Err(JdtError::ShapeMismatch);
    }
    let pos = t
        .shape()
        .cell_index(start)
        .ok_or(JdtError::CellOutside(start))?;
    if !mask.contains_idx(pos) {
        return Err(JdtError::NotInMask(start));
    }
    let mut out = t.clone();
    let mut moves = Vec::new();
    bjdt_raw(t.shape(), out.entries_mut(), pos, mask.flags(), Some(&mut moves));
    let transcript = Transcript::from_indices(t.shape(), &moves);
    Ok((out, transcript))
}

/// Modified jeu de taquin of `t` with respect to the order tableau `s`:
/// forward slides are performed from the cells of `s` in decreasing label
/// order, largest label first.
pub fn modified_jdt(t: &Filling, s: &Filling) -> Result<Filling, JdtError> {
    if t.shape() != s.shape() {
        return Err(JdtError::ShapeMismatch);
    }
    let mut out = t.clone();
    mj_raw(t.shape(), out.entries_mut(), &label_positions(s));
    Ok(out)
}

/// One slide pass of a modified jeu de taquin run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MjPass {
    /// The label whose cell the pass started from.
    pub label: u32,
    pub start: Cell,
    pub transcript: Transcript,
    /// The filling after this pass.
    pub after: Filling,
}

/// A fully recorded modified jeu de taquin run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MjTrace {
    /// All `n` passes, in execution order (decreasing label).
    pub passes: Vec<MjPass>,
    pub result: Filling,
}

impl MjTrace {
    /// The fillings after each pass that moved something. The last one, if
    /// any, equals the final result.
    pub fn changed_states(&self) -> Vec<&Filling> {
        self.passes
            .iter()
            .filter(|p| !p.transcript.is_empty())
            .map(|p| &p.after)
            .collect()
    }
}

/// [`modified_jdt`] with every pass recorded.
pub fn modified_jdt_traced(t: &Filling, s: &Filling) -> Result<MjTrace, JdtError> {
    if t.shape() != s.shape() {
        return Err(JdtError::ShapeMismatch);
    }
    let shape = t.shape().clone();
    let cell_of_label = label_positions(s);
    let mut current = t.clone();
    let mut passes = Vec::with_capacity(current.size());
    for label in (1..=current.size() as u32).rev() {
        let start_idx = cell_of_label[label as usize - 1];
        let mut moves = Vec::new();
        fjdt_raw(&shape, current.entries_mut(), start_idx, Some(&mut moves));
        passes.push(MjPass {
            label,
            start: shape.cells()[start_idx],
            transcript: Transcript::from_indices(&shape, &moves),
            after: current.clone(),
        });
    }
    Ok(MjTrace {
        passes,
        result: current,
    })
}

fn check_pair(st: &PairedState) -> Result<(), JdtError> {
    if st.first.shape() != st.second.shape() {
        return Err(JdtError::ShapeMismatch);
    }
    Ok(())
}

fn check_label(label: u32, n: usize) -> Result<(), JdtError> {
    if label == 0 || label as usize > n {
        return Err(JdtError::InvalidLabel(label));
    }
    Ok(())
}

fn step_up_inner(label: u32, st: &PairedState) -> Result<(PairedState, Transcript), JdtError> {
    check_pair(st)?;
    check_label(label, st.first.size())?;
    let shape = st.first.shape().clone();
    let start = st
        .second
        .position_of(label)
        .expect("bijective filling holds every label");
    let mut first = st.first.clone();
    let mut moves = Vec::new();
    fjdt_raw(&shape, first.entries_mut(), start, Some(&mut moves));
    let transcript = Transcript::from_indices(&shape, &moves);
    let mut second = st.second.clone();
    transcript.replay_in_place(&mut second)?;
    Ok((PairedState { first, second }, transcript))
}

fn step_down_inner(label: u32, st: &PairedState) -> Result<(PairedState, Transcript), JdtError> {
    check_pair(st)?;
    check_label(label, st.first.size())?;
    let shape = st.first.shape().clone();
    let start = st
        .first
        .position_of(label)
        .expect("bijective filling holds every label");
    let in_mask: Vec<bool> = st.first.entries().iter().map(|&e| e >= label).collect();
    let mut second = st.second.clone();
    let mut moves = Vec::new();
    bjdt_raw(&shape, second.entries_mut(), start, &in_mask, Some(&mut moves));
    let transcript = Transcript::from_indices(&shape, &moves);
    let mut first = st.first.clone();
    transcript.replay_in_place(&mut first)?;
    Ok((PairedState { first, second }, transcript))
}

/// The elementary upward step: a forward slide on the first filling from
/// the cell labelled `label` in the second, replayed onto the second.
pub fn step_up(label: u32, st: &PairedState) -> Result<PairedState, JdtError> {
    step_up_inner(label, st).map(|(st, _)| st)
}

/// The elementary downward step: a backward slide on the second filling,
/// started from the cell holding `label` in the first and restricted to the
/// cells whose first-filling entries are `>= label`, replayed onto the
/// first.
pub fn step_down(label: u32, st: &PairedState) -> Result<PairedState, JdtError> {
    step_down_inner(label, st).map(|(st, _)| st)
}

/// A recorded pass of a paired run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedPass {
    pub label: u32,
    pub transcript: Transcript,
    /// The pair after this pass, before the final switch.
    pub after: PairedState,
}

/// A fully recorded paired run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedTrace {
    pub passes: Vec<PairedPass>,
    /// The final pair, with the components switched.
    pub result: PairedState,
}

impl PairedTrace {
    /// The pairs after each pass that moved something (in pre-switch
    /// component order).
    pub fn changed_states(&self) -> Vec<&PairedState> {
        self.passes
            .iter()
            .filter(|p| !p.transcript.is_empty())
            .map(|p| &p.after)
            .collect()
    }
}

/// The forward paired operation: upward steps for labels `n` down to `1`,
/// then a switch. The second component of the result is the modified jeu de
/// taquin of `t`, the first is the image of `s` under the same
/// transpositions.
pub fn fj(t: &Filling, s: &Filling) -> Result<PairedState, JdtError> {
    fj_traced(t, s).map(|tr| tr.result)
}

/// [`fj`] with every pass recorded.
pub fn fj_traced(t: &Filling, s: &Filling) -> Result<PairedTrace, JdtError> {
    if !s.is_standard() {
        return Err(JdtError::NotStandard);
    }
    let mut state = PairedState::new(t.clone(), s.clone())?;
    let n = t.size() as u32;
    let mut passes = Vec::with_capacity(n as usize);
    for label in (1..=n).rev() {
        let (next, transcript) = step_up_inner(label, &state)?;
        state = next;
        passes.push(PairedPass {
            label,
            transcript,
            after: state.clone(),
        });
    }
    Ok(PairedTrace {
        passes,
        result: state.switch(),
    })
}

/// The backward paired operation, inverse to [`fj`]: downward steps for
/// labels `1` up to `n`, then a switch. Requires the second input to be
/// standard; the second component of the result is standard by
/// construction.
pub fn bj(s1: &Filling, t1: &Filling) -> Result<PairedState, JdtError> {
    bj_traced(s1, t1).map(|tr| tr.result)
}

/// [`bj`] with every pass recorded.
pub fn bj_traced(s1: &Filling, t1: &Filling) -> Result<PairedTrace, JdtError> {
    if !t1.is_standard() {
        return Err(JdtError::NotStandard);
    }
    let mut state = PairedState::new(s1.clone(), t1.clone())?;
    let n = s1.size() as u32;
    let mut passes = Vec::with_capacity(n as usize);
    for label in 1..=n {
        let (next, transcript) = step_down_inner(label, &state)?;
        state = next;
        passes.push(PairedPass {
            label,
            transcript,
            after: state.clone(),
        });
    }
    Ok(PairedTrace {
        passes,
        result: state.switch(),
    })
}
