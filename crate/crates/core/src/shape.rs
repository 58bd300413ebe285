//! Partitions, cells and diagrams.
//!
//! Cells use `(x, y)` = (column, row) coordinates, both starting at 1, with
//! row 1 at the top. Cells order row-major (by `y`, then `x`), which makes
//! iterating a [`Diagram`] walk each row left to right, top row first.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. Trailing zeros are never
/// stored, so `(2,1)` and `(2,1,0)` compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// `ϖ_l`: a single column of length `l`.
    pub fn column(l: usize) -> Self {
        Partition(vec![1; l])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `y` (1-based); zero past the end.
    pub fn part(&self, y: usize) -> u32 {
        if y == 0 {
            return 0;
        }
        self.0.get(y - 1).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ⊃ other` in the containment order of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && (1..=other.length()).all(|y| self.part(y) >= other.part(y))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        let parts = (1..=width as u32)
            .map(|x| self.0.iter().filter(|&&p| p >= x).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Cells of the Young diagram.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len as usize).map(move |x| Cell::new(x, i + 1)))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad part {p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A box of a diagram: column `x`, row `y`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub const fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }

    pub fn right(self) -> Cell {
        Cell::new(self.x + 1, self.y)
    }

    pub fn below(self) -> Cell {
        Cell::new(self.x, self.y + 1)
    }

    pub fn left(self) -> Option<Cell> {
        (self.x > 1).then(|| Cell::new(self.x - 1, self.y))
    }

    pub fn above(self) -> Option<Cell> {
        (self.y > 1).then(|| Cell::new(self.x, self.y - 1))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A finite set of cells.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagram(BTreeSet<Cell>);

impl Diagram {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        Diagram(cells.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.0.contains(&cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().copied()
    }

    /// The partition whose Young diagram this is, if any.
    pub fn as_partition(&self) -> Option<Partition> {
        let rows = self.0.iter().map(|c| c.y).max().unwrap_or(0);
        let mut parts = vec![0u32; rows];
        for c in &self.0 {
            parts[c.y - 1] += 1;
        }
        let lambda = Partition::new(parts).ok()?;
        (lambda.length() == rows && lambda.cells().eq(self.0.iter().copied())).then_some(lambda)
    }
}

impl FromIterator<Cell> for Diagram {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Diagram::new(iter)
    }
}

/// `D(λ)`.
pub fn young_diagram(lambda: &Partition) -> Diagram {
    lambda.cells().collect()
}

/// True iff `μ ⊂ λ` and `λ/μ` has at most one cell in each row.
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (1..=lambda.length()).all(|y| lambda.part(y) - mu.part(y) <= 1)
}

/// Every partition with `|λ| ≤ max_size` and `ℓ(λ) ≤ max_length`, ordered by
/// size and then reverse-lexicographically within a size.
pub fn enumerate_partitions(max_size: u32, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        let mut current = Vec::new();
        partitions_of(size, size, max_length, &mut current, &mut out);
    }
    out
}

fn partitions_of(remaining: u32, max_part: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        partitions_of(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}

/// All partitions whose diagram fits inside `outer`.
pub fn partitions_inside(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    inside(outer, 1, u32::MAX, &mut current, &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
    out
}

fn inside(outer: &Partition, y: usize, bound: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition(current.clone()));
    if y > outer.length() {
        return;
    }
    for part in 1..=outer.part(y).min(bound) {
        current.push(part);
        inside(outer, y + 1, part, current, out);
        current.pop();
    }
}
