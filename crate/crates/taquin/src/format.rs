//! Text formats: filling grids, the digit rendering of count matrices, and
//! JSON/CSV serializers.

use serde_json::json;
use thiserror::Error;

use crate::analysis::CountMatrix;
use crate::shape::{Cell, Shape};
use crate::tableaux::{Filling, TableauxError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("expected {expected} grid rows, got {got}")]
    WrongRowCount { expected: usize, got: usize },
    #[error("row {row}: expected {expected} tokens, got {got}")]
    WrongTokenCount { row: usize, expected: usize, got: usize },
    #[error("grid position {0} disagrees with the shape: member cells need an entry, others `.`")]
    MemberMismatch(Cell),
    #[error("cannot read `{token}` at {cell} as an entry")]
    BadToken { cell: Cell, token: String },
    #[error(transparent)]
    Tableaux(#[from] TableauxError),
    #[error("digit rendering supports at most 9 distinct values, found {0}")]
    TooManyValues(usize),
}

/// Renders a filling as one line per bounding-grid row: entries for member
/// cells, `.` elsewhere, space-separated. The empty shape renders as an
/// empty string.
pub fn render_filling(f: &Filling) -> String {
    let shape = f.shape();
    let cols = shape.grid_cols();
    let mut lines = Vec::with_capacity(shape.rows());
    for row in 1..=shape.rows() as u32 {
        let tokens: Vec<String> = (1..=cols)
            .map(|col| match f.entry_at(Cell::new(row, col)) {
                Some(e) => e.to_string(),
                None => ".".to_string(),
            })
            .collect();
        lines.push(tokens.join(" "));
    }
    lines.join("\n")
}

/// Parses the grid format produced by [`render_filling`]. The grid must
/// match the shape's member cells exactly and the entries must form a
/// bijection onto `1..=n`.
pub fn parse_filling(text: &str, shape: &Shape) -> Result<Filling, FormatError> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.len() != shape.rows() {
        return Err(FormatError::WrongRowCount {
            expected: shape.rows(),
            got: lines.len(),
        });
    }
    let cols = shape.grid_cols() as usize;
    let mut entries = vec![0u32; shape.size()];
    for (r, line) in lines.iter().enumerate() {
        let row = (r + 1) as u32;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != cols {
            return Err(FormatError::WrongTokenCount {
                row: r + 1,
                expected: cols,
                got: tokens.len(),
            });
        }
        for (c, token) in tokens.iter().enumerate() {
            let cell = Cell::new(row, (c + 1) as u32);
            match (shape.cell_index(cell), *token) {
                (None, ".") => {}
                (None, _) | (Some(_), ".") => return Err(FormatError::MemberMismatch(cell)),
                (Some(idx), tok) => {
                    entries[idx] = tok.parse().map_err(|_| FormatError::BadToken {
                        cell,
                        token: tok.to_string(),
                    })?;
                }
            }
        }
    }
    Ok(Filling::new(shape.clone(), entries)?)
}

/// Order-preserving map from the distinct values of a matrix to the digits
/// `'1'..='9'`, assigned in ascending value order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitLegend {
    values: Vec<u64>,
}

impl DigitLegend {
    pub fn for_matrix(matrix: &CountMatrix) -> Result<DigitLegend, FormatError> {
        let values = matrix.distinct_values();
        if values.len() > 9 {
            return Err(FormatError::TooManyValues(values.len()));
        }
        Ok(DigitLegend { values })
    }

    pub fn digit_for(&self, value: u64) -> Option<char> {
        self.values
            .iter()
            .position(|&v| v == value)
            .map(|i| char::from(b'1' + i as u8))
    }

    /// `(digit, value)` pairs in digit order.
    pub fn entries(&self) -> impl Iterator<Item = (char, u64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (char::from(b'1' + i as u8), v))
    }
}

/// The digit rows of a matrix, one string per row.
pub fn digit_rows(matrix: &CountMatrix) -> Result<Vec<String>, FormatError> {
    let legend = DigitLegend::for_matrix(matrix)?;
    Ok(matrix
        .counts()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| legend.digit_for(v).expect("value is in the legend"))
                .collect()
        })
        .collect())
}

/// Digit rendering of a whole matrix: the digit block, a blank line, and a
/// legend line per value.
pub fn render_digit_matrix(matrix: &CountMatrix) -> Result<String, FormatError> {
    let legend = DigitLegend::for_matrix(matrix)?;
    let mut out = digit_rows(matrix)?.join("\n");
    out.push_str("\n\n");
    for (digit, value) in legend.entries() {
        out.push_str(&format!("{digit} = {value}\n"));
    }
    Ok(out)
}

/// JSON form: shape spec, ordering note, reading words, and the counts.
pub fn matrix_to_json(matrix: &CountMatrix) -> serde_json::Value {
    json!({
        "shape": matrix.shape().to_string(),
        "order": "lex-reading-word",
        "tableaux": matrix
            .tableaux()
            .iter()
            .map(|t| t.reading_word().word().to_vec())
            .collect::<Vec<_>>(),
        "matrix": matrix.counts(),
    })
}

/// Plain CSV: one line per row, counts comma-separated.
pub fn matrix_to_csv(matrix: &CountMatrix) -> String {
    matrix
        .counts()
        .iter()
        .map(|row| {
            row.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{a_matrix, MatrixOptions};

    fn shape(spec: &str) -> Shape {
        spec.parse().unwrap()
    }

    const R_GRID: &str = "\
. . . . . 8
. . . . 3 6
. . 9 5 1 4
. . . 2 7 .";

    #[test]
    fn renders_the_running_example() {
        let shp = shape("6,5,4,2/5,3:shifted");
        let r = Filling::new(shp, vec![8, 3, 6, 9, 5, 1, 4, 2, 7]).unwrap();
        assert_eq!(render_filling(&r), R_GRID);
    }

    #[test]
    fn parse_render_round_trip() {
        let shp = shape("6,5,4,2/5,3:shifted");
        let r = parse_filling(R_GRID, &shp).unwrap();
        assert_eq!(r.entries(), &[8, 3, 6, 9, 5, 1, 4, 2, 7]);
        assert_eq!(render_filling(&r), R_GRID);

        let straight = shape("3,3,2");
        let text = "1 4 7\n2 5 8\n3 6 .";
        let f = parse_filling(text, &straight).unwrap();
        assert_eq!(render_filling(&f), text);
    }

    #[test]
    fn parse_rejects_malformed_grids() {
        let shp = shape("2,1");
        assert!(matches!(
            parse_filling("1 2", &shp),
            Err(FormatError::WrongRowCount { expected: 2, got: 1 })
        ));
        assert!(matches!(
            parse_filling("1 2\n3", &shp),
            Err(FormatError::WrongTokenCount { row: 2, .. })
        ));
        assert!(matches!(
            parse_filling("1 2\n3 4", &shp),
            Err(FormatError::MemberMismatch(_))
        ));
        assert!(matches!(
            parse_filling("1 2\n. 3", &shp),
            Err(FormatError::MemberMismatch(_))
        ));
        assert!(matches!(
            parse_filling("1 x\n3 .", &shp),
            Err(FormatError::BadToken { .. })
        ));
        // Duplicate entry: bijection violated.
        assert!(matches!(
            parse_filling("1 3\n3 .", &shp),
            Err(FormatError::Tableaux(TableauxError::NotBijective { .. }))
        ));
    }

    #[test]
    fn empty_shape_round_trip() {
        let shp = shape("0");
        let empty = Filling::new(shp.clone(), vec![]).unwrap();
        assert_eq!(render_filling(&empty), "");
        assert_eq!(parse_filling("", &shp).unwrap(), empty);
    }

    #[test]
    fn digit_rendering_of_tiny_matrices() {
        let m = a_matrix(&shape("2,1"), &MatrixOptions::default()).unwrap();
        assert_eq!(digit_rows(&m).unwrap(), vec!["11", "11"]);
        let rendered = render_digit_matrix(&m).unwrap();
        assert_eq!(rendered, "11\n11\n\n1 = 3\n");

        let one = a_matrix(&shape("1"), &MatrixOptions::default()).unwrap();
        assert_eq!(render_digit_matrix(&one).unwrap(), "1\n\n1 = 1\n");
    }

    #[test]
    fn json_and_csv_forms() {
        let m = a_matrix(&shape("2,1"), &MatrixOptions::default()).unwrap();
        let v = matrix_to_json(&m);
        assert_eq!(v["shape"], "2,1");
        assert_eq!(v["order"], "lex-reading-word");
        assert_eq!(v["tableaux"][0], json!([1, 2, 3]));
        assert_eq!(v["matrix"], json!([[3, 3], [3, 3]]));
        assert_eq!(matrix_to_csv(&m), "3,3\n3,3");
    }
}
