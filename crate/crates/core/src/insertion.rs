//! Schensted row insertion, insertion tableaux, Knuth equivalence, column
//! insertion and the column product `C * S`.

use crate::error::{Error, Result};
use crate::shape::Cell;
use crate::tableau::Tableau;
use crate::word::Word;

/// Row-inserts `m` into rows given top-down; returns the row index that grew.
pub fn row_insert(rows: &mut Vec<Vec<u32>>, m: u32) -> usize {
    let mut carry = m;
    for (y, row) in rows.iter_mut().enumerate() {
        // Bump the leftmost entry strictly greater than the carried value.
        let pos = row.partition_point(|&v| v <= carry);
        if pos == row.len() {
            row.push(carry);
            return y;
        }
        carry = std::mem::replace(&mut row[pos], carry);
    }
    rows.push(vec![carry]);
    rows.len() - 1
}

/// `m → T`: inserts `m` into a semistandard tableau of partition shape.
pub fn schensted_insert(m: u32, t: &Tableau) -> Result<Tableau> {
    t.require_shape()?;
    let mut rows = t.rows();
    row_insert(&mut rows, m);
    Ok(Tableau::from_rows(&rows))
}

/// The insertion tableau of a word: `w_k → (⋯ → (w_1 → ∅))`.
pub fn insertion_rows(letters: &[u32]) -> Vec<Vec<u32>> {
    let mut rows = Vec::new();
    for &l in letters {
        row_insert(&mut rows, l);
    }
    rows
}

pub fn insertion_tableau(w: &Word) -> Tableau {
    Tableau::from_rows(&insertion_rows(w.letters()))
}

/// Knuth equivalence, decided by comparing insertion tableaux.
pub fn knuth_equivalent(w1: &Word, w2: &Word) -> bool {
    w1.len() == w2.len() && insertion_rows(w1.letters()) == insertion_rows(w2.letters())
}

/// Column-inserts `m` into columns given left to right (each top-down):
/// `m` bumps the smallest entry `≥ m` of the first column into the next
/// column, and so on until an entry lands at the bottom of a column.
pub fn column_insert(columns: &mut Vec<Vec<u32>>, m: u32) {
    let mut carry = m;
    for col in columns.iter_mut() {
        let pos = col.partition_point(|&v| v < carry);
        if pos == col.len() {
            col.push(carry);
            return;
        }
        carry = std::mem::replace(&mut col[pos], carry);
    }
    columns.push(vec![carry]);
}

fn to_columns(t: &Tableau) -> Vec<Vec<u32>> {
    (1..=t.width()).map(|x| t.column_entries(x)).collect()
}

fn from_columns(columns: &[Vec<u32>]) -> Tableau {
    Tableau::from_cells(
        columns
            .iter()
            .enumerate()
            .flat_map(|(i, col)| col.iter().enumerate().map(move |(j, &v)| (Cell::new(i + 1, j + 1), v))),
    )
}

/// Column insertion of `m` into a semistandard tableau of partition shape.
pub fn column_insert_into(m: u32, t: &Tableau) -> Result<Tableau> {
    t.require_shape()?;
    let mut columns = to_columns(t);
    column_insert(&mut columns, m);
    Ok(from_columns(&columns))
}

/// `C * S = C(1,l) → (⋯ → (C(1,1) → S))`: column-inserts the entries of the
/// single column `C` into `S`, top entry first. The result is the insertion
/// tableau of `w_r(C) · w_r(S)`.
pub fn column_star(c: &Tableau, s: &Tableau) -> Result<Tableau> {
    if c.cells().any(|cell| cell.x != 1) {
        return Err(Error::NotSingleColumn);
    }
    if !c.is_empty() && c.shape().is_none() {
        return Err(Error::NotSingleColumn);
    }
    s.require_shape()?;
    let mut columns = to_columns(s);
    for v in c.column_entries(1) {
        column_insert(&mut columns, v);
    }
    Ok(from_columns(&columns))
}
