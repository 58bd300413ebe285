//! Tableaux on arbitrary finite supports, reading words and the symplectic
//! condition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{Cell, Diagram, Partition};
use crate::word::Word;

/// A filling of a finite set of cells by positive integers.
///
/// The support need not be a Young diagram: restrictions and skew shapes are
/// represented by simply omitting cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    entries: BTreeMap<Cell, u32>,
}

impl Tableau {
    pub fn new() -> Self {
        Tableau::default()
    }

    /// Rows listed top-down, each left-justified at column 1.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.as_ref().iter().enumerate() {
                entries.insert(Cell::new(j + 1, i + 1), v);
            }
        }
        Tableau { entries }
    }

    /// A single column, entries top-down.
    pub fn column(entries: &[u32]) -> Self {
        let rows: Vec<[u32; 1]> = entries.iter().map(|&v| [v]).collect();
        Tableau::from_rows(&rows)
    }

    pub fn from_cells(cells: impl IntoIterator<Item = (Cell, u32)>) -> Self {
        Tableau { entries: cells.into_iter().collect() }
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.entries.get(&cell).copied()
    }

    pub fn set(&mut self, cell: Cell, value: u32) {
        self.entries.insert(cell, value);
    }

    pub fn remove(&mut self, cell: Cell) -> Option<u32> {
        self.entries.remove(&cell)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.entries.contains_key(&cell)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (Cell, u32)> + '_ {
        self.entries.iter().map(|(&c, &v)| (c, v))
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.entries.keys().copied()
    }

    pub fn support(&self) -> Diagram {
        self.cells().collect()
    }

    /// The partition whose Young diagram is the support, if there is one.
    pub fn shape(&self) -> Option<Partition> {
        self.support().as_partition()
    }

    pub fn require_shape(&self) -> Result<Partition> {
        self.shape().ok_or(Error::NotPartitionShape)
    }

    /// Number of rows touched by the support (the largest row index).
    pub fn height(&self) -> usize {
        self.cells().map(|c| c.y).max().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.cells().map(|c| c.x).max().unwrap_or(0)
    }

    /// `T[m]`, the number of cells holding `m`.
    pub fn count_entry(&self, m: u32) -> usize {
        self.entries.values().filter(|&&v| v == m).count()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.entries.values().copied().max()
    }

    pub fn min_entry(&self) -> Option<u32> {
        self.entries.values().copied().min()
    }

    /// Entries of row `y`, left to right.
    pub fn row(&self, y: usize) -> Vec<u32> {
        self.iter().filter(|(c, _)| c.y == y).map(|(_, v)| v).collect()
    }

    /// Entries of column `x`, top to bottom.
    pub fn column_entries(&self, x: usize) -> Vec<u32> {
        self.iter().filter(|(c, _)| c.x == x).map(|(_, v)| v).collect()
    }

    /// Rows top-down (cells of each row left to right, gaps ignored).
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rows = vec![Vec::new(); self.height()];
        for (c, v) in self.iter() {
            rows[c.y - 1].push(v);
        }
        rows
    }

    /// Applies `f` to every entry, keeping the support.
    pub fn map_entries(&self, mut f: impl FnMut(u32) -> u32) -> Tableau {
        Tableau { entries: self.entries.iter().map(|(&c, &v)| (c, f(v))).collect() }
    }

    /// Keeps only the cells whose entry satisfies `keep`.
    pub fn filter_entries(&self, mut keep: impl FnMut(u32) -> bool) -> Tableau {
        Tableau { entries: self.entries.iter().filter(|(_, &v)| keep(v)).map(|(&c, &v)| (c, v)).collect() }
    }

    /// Keeps only the cells satisfying `keep`.
    pub fn filter_cells(&self, mut keep: impl FnMut(Cell) -> bool) -> Tableau {
        Tableau { entries: self.entries.iter().filter(|(&c, _)| keep(c)).map(|(&c, &v)| (c, v)).collect() }
    }

    /// Rows weakly increase and columns strictly increase wherever adjacent
    /// cells are both present.
    pub fn is_semistandard(&self) -> bool {
        self.iter().all(|(c, v)| {
            self.get(c.right()).is_none_or(|r| v <= r) && self.get(c.below()).is_none_or(|b| v < b)
        })
    }

    /// Semistandard with entries in `[1, m]`.
    pub fn is_semistandard_within(&self, m: u32) -> bool {
        self.is_semistandard() && self.entries.values().all(|&v| (1..=m).contains(&v))
    }

    /// Partition shape, semistandard, and `T(1,y) ≥ 2y − 1` on every row.
    pub fn is_symplectic(&self) -> bool {
        self.shape().is_some()
            && self.is_semistandard()
            && self.column_entries(1).iter().enumerate().all(|(i, &v)| v as usize > 2 * i)
    }

    fn check_rows_contiguous(&self) -> Result<()> {
        let mut last: Option<Cell> = None;
        for c in self.cells() {
            if let Some(p) = last {
                if p.y == c.y && p.x + 1 != c.x {
                    return Err(Error::NonContiguousRow(c.y));
                }
            }
            last = Some(c);
        }
        Ok(())
    }

    fn columns(&self) -> BTreeMap<usize, Vec<(usize, u32)>> {
        let mut cols: BTreeMap<usize, Vec<(usize, u32)>> = BTreeMap::new();
        for (c, v) in self.iter() {
            cols.entry(c.x).or_default().push((c.y, v));
        }
        cols
    }

    /// Reads rows bottom to top, each row left to right.
    pub fn row_word(&self) -> Result<Word> {
        self.check_rows_contiguous()?;
        let mut letters = Vec::with_capacity(self.len());
        for row in self.rows().iter().rev() {
            letters.extend_from_slice(row);
        }
        Ok(Word(letters))
    }

    /// Reads columns right to left, each column top to bottom.
    pub fn inverse_column_word(&self) -> Result<Word> {
        let cols = self.columns();
        let mut letters = Vec::with_capacity(self.len());
        for (&x, col) in cols.iter().rev() {
            if col.windows(2).any(|w| w[0].0 + 1 != w[1].0) {
                return Err(Error::NonContiguousColumn(x));
            }
            letters.extend(col.iter().map(|&(_, v)| v));
        }
        Ok(Word(letters))
    }

    /// Every cell shifted `dx` columns to the left (cells that would leave
    /// the quadrant are an error).
    pub fn shift_left(&self, dx: usize) -> Result<Tableau> {
        let mut entries = BTreeMap::new();
        for (c, v) in self.iter() {
            if c.x <= dx {
                return Err(Error::MalformedSupport(format!("cell {c} cannot shift left by {dx}")));
            }
            entries.insert(Cell::new(c.x - dx, c.y), v);
        }
        Ok(Tableau { entries })
    }

    /// Plain-text rendering: rows top-down, entries space-separated, absent
    /// cells left of a row's last cell shown as `.`.
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        for y in 1..=self.height() {
            let width = self.cells().filter(|c| c.y == y).map(|c| c.x).max().unwrap_or(0);
            let line: Vec<String> = (1..=width)
                .map(|x| self.get(Cell::new(x, y)).map_or_else(|| ".".to_string(), |v| v.to_string()))
                .collect();
            lines.push(line.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for Tableau {
    /// The compact `"1,2;2,3;4"` syntax; absent cells print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.height())
            .map(|y| {
                let width = self.cells().filter(|c| c.y == y).map(|c| c.x).max().unwrap_or(0);
                (1..=width)
                    .map(|x| self.get(Cell::new(x, y)).map_or_else(|| ".".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows separated by `;`, entries by `,`; `.` marks an absent cell.
    /// The empty string (or `∅`) is the empty tableau.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut entries = BTreeMap::new();
        if s.is_empty() || s == "∅" {
            return Ok(Tableau { entries });
        }
        for (i, row) in s.split(';').enumerate() {
            let row = row.trim();
            if row.is_empty() {
                continue;
            }
            for (j, tok) in row.split(',').enumerate() {
                let tok = tok.trim();
                if tok == "." {
                    continue;
                }
                let v: u32 = tok.parse().map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))?;
                if v == 0 {
                    return Err(Error::Parse("entries must be positive".into()));
                }
                entries.insert(Cell::new(j + 1, i + 1), v);
            }
        }
        Ok(Tableau { entries })
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Vec<u32>,
    rows: Vec<Vec<Option<u32>>>,
}

impl Serialize for Tableau {
    /// `{"shape": [row extents], "rows": [[entries or null]]}`.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Option<u32>>> = (1..=self.height())
            .map(|y| {
                let width = self.cells().filter(|c| c.y == y).map(|c| c.x).max().unwrap_or(0);
                (1..=width).map(|x| self.get(Cell::new(x, y))).collect()
            })
            .collect();
        let shape = rows.iter().map(|r| r.len() as u32).collect();
        TableauRepr { shape, rows }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(deserializer)?;
        let mut entries = BTreeMap::new();
        for (i, row) in repr.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if let Some(v) = v {
                    entries.insert(Cell::new(j + 1, i + 1), *v);
                }
            }
        }
        Ok(Tableau { entries })
    }
}
