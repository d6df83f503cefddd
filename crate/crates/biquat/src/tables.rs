//! Rendered reference tables: the 8×8 basis multiplication grid and the
//! grade-signature grid, both generated from `basis_product` so they cannot
//! drift from the arithmetic.

use crate::biquaternion::{basis_product, BasisElement};
use crate::geom::{grades_of_product, Grade, GradeSet};

/// One cell of the basis table, e.g. `"k"` or `"-jI"`.
pub fn basis_cell(row: BasisElement, col: BasisElement) -> String {
    let (sign, e) = basis_product(row, col);
    if sign < 0 {
        format!("-{}", e.symbol())
    } else {
        e.symbol().to_string()
    }
}

/// The full 8×8 multiplication grid, rows = left factor, with a header row
/// and row labels.
pub fn render_basis_table() -> String {
    let mut out = String::new();
    out.push_str(&format!("{:>4}", ""));
    for col in BasisElement::ALL {
        out.push_str(&format!("{:>5}", col.symbol()));
    }
    out.push('\n');
    for row in BasisElement::ALL {
        out.push_str(&format!("{:>4}", row.symbol()));
        for col in BasisElement::ALL {
            out.push_str(&format!("{:>5}", basis_cell(row, col)));
        }
        out.push('\n');
    }
    out
}

/// Grade-signature table computed by exhaustive expansion, indexed by
/// `Grade::ALL` order for rows (left factor) and columns.
pub fn derived_grade_table() -> [[GradeSet; 4]; 4] {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| grades_of_product(Grade::ALL[r], Grade::ALL[c]))
    })
}

/// The grade-signature table as it is conventionally printed. It disagrees
/// with the derived table in the (B, V) and (V, B) cells.
pub fn conventional_grade_table() -> [[GradeSet; 4]; 4] {
    use Grade::{Bivector as B, Pseudoscalar as P, Scalar as S, Vector as V};
    let g = |grades: &[Grade]| GradeSet::of(grades);
    [
        [g(&[S]), g(&[B]), g(&[V]), g(&[P])],
        [g(&[B]), g(&[S, B]), g(&[P, B]), g(&[V])],
        [g(&[V]), g(&[P, B]), g(&[S, B]), g(&[B])],
        [g(&[P]), g(&[V]), g(&[B]), g(&[S])],
    ]
}

/// Cells where the derived table and the conventional one disagree:
/// `(row grade, column grade, derived, conventional)`.
pub fn grade_table_discrepancies() -> Vec<(Grade, Grade, GradeSet, GradeSet)> {
    let derived = derived_grade_table();
    let conventional = conventional_grade_table();
    let mut out = Vec::new();
    for (r, row_grade) in Grade::ALL.into_iter().enumerate() {
        for (c, col_grade) in Grade::ALL.into_iter().enumerate() {
            if derived[r][c] != conventional[r][c] {
                out.push((row_grade, col_grade, derived[r][c], conventional[r][c]));
            }
        }
    }
    out
}

/// A basis pair of the given grades whose product lands in a grade the
/// conventional table does not claim.
fn discrepancy_witness(row: Grade, col: Grade, conventional: GradeSet) -> Option<String> {
    for a in BasisElement::ALL.into_iter().filter(|e| e.grade() == row) {
        for b in BasisElement::ALL.into_iter().filter(|e| e.grade() == col) {
            let (_, e) = basis_product(a, b);
            if !conventional.contains(e.grade()) {
                return Some(format!(
                    "{}·{} = {}, which has grade {}",
                    a.symbol(),
                    b.symbol(),
                    basis_cell(a, b),
                    e.grade()
                ));
            }
        }
    }
    None
}

/// The derived grade grid, followed by one note per cell where the
/// conventional presentation differs.
pub fn render_grade_table() -> String {
    let table = derived_grade_table();
    let mut out = String::new();
    out.push_str(&format!("{:>2}", ""));
    for col in Grade::ALL {
        out.push_str(&format!("{:>6}", col.letter()));
    }
    out.push('\n');
    for (r, row) in Grade::ALL.into_iter().enumerate() {
        out.push_str(&format!("{:>2}", row.letter()));
        for c in 0..4 {
            out.push_str(&format!("{:>6}", table[r][c].to_string()));
        }
        out.push('\n');
    }
    for (row, col, derived, conventional) in grade_table_discrepancies() {
        out.push_str(&format!(
            "note: the ({row}, {col}) entry is {derived} by exhaustive expansion of the basis \
             products; this table is conventionally printed with {conventional} there",
        ));
        if let Some(witness) = discrepancy_witness(row, col, conventional) {
            out.push_str(&format!(" (counterexample: {witness})"));
        }
        out.push('\n');
    }
    out
}
