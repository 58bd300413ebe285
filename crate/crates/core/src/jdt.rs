//! Jeu-de-taquin slides on arbitrary supports, range restriction and
//! rectification.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

/// Moves the entry at `start` outward until it has no neighbour to the right
/// or below, returning the cell where it stops.
///
/// At each step the travelling entry trades places with the smaller of its
/// right and lower neighbours; when they are equal it moves down, which is
/// what keeps columns strict.
fn slide_out(t: &mut Tableau, start: Cell) -> Cell {
    let mut at = start;
    loop {
        let right = t.get(at.right());
        let below = t.get(at.below());
        let next = match (right, below) {
            (None, None) => return at,
            (Some(_), None) => at.right(),
            (None, Some(_)) => at.below(),
            (Some(r), Some(b)) => {
                if r < b {
                    at.right()
                } else {
                    at.below()
                }
            }
        };
        let moving = t.get(at).expect("travelling cell is in the support");
        let neighbour = t.get(next).expect("neighbour is in the support");
        t.set(at, neighbour);
        t.set(next, moving);
        at = next;
    }
}

/// Moves the entry at `start` inward until it has no neighbour to the left
/// or above, returning the cell where it stops. This undoes [`slide_out`].
fn slide_in(t: &mut Tableau, start: Cell) -> Cell {
    let mut at = start;
    loop {
        let left = at.left().and_then(|c| t.get(c).map(|v| (c, v)));
        let above = at.above().and_then(|c| t.get(c).map(|v| (c, v)));
        let next = match (left, above) {
            (None, None) => return at,
            (Some((c, _)), None) | (None, Some((c, _))) => c,
            (Some((l, lv)), Some((u, uv))) => {
                if lv > uv {
                    l
                } else {
                    u
                }
            }
        };
        let moving = t.get(at).expect("travelling cell is in the support");
        let neighbour = t.get(next).expect("neighbour is in the support");
        t.set(at, neighbour);
        t.set(next, moving);
        at = next;
    }
}

/// The jeu-de-taquin slide of the box at `start`: the support and the
/// multiset of entries are unchanged, and the entry at `start` travels to
/// the outer boundary of the support.
pub fn jdt_slide(t: &Tableau, start: Cell) -> Result<Tableau> {
    if !t.contains(start) {
        return Err(Error::OutsideSupport(start));
    }
    let mut out = t.clone();
    slide_out(&mut out, start);
    Ok(out)
}

/// The reverse slide: the entry at `start` travels to the inner boundary of
/// the support, always trading with the larger of its left and upper
/// neighbours (upward on ties).
pub fn jdt_reverse_slide(t: &Tableau, start: Cell) -> Result<Tableau> {
    if !t.contains(start) {
        return Err(Error::OutsideSupport(start));
    }
    let mut out = t.clone();
    slide_in(&mut out, start);
    Ok(out)
}

pub(crate) fn slide_out_in_place(t: &mut Tableau, start: Cell) -> Cell {
    slide_out(t, start)
}

pub(crate) fn slide_in_in_place(t: &mut Tableau, start: Cell) -> Cell {
    slide_in(t, start)
}

/// A tableau together with a set of holes `•` interleaved with its cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SkewTableau {
    pub entries: Tableau,
    pub holes: BTreeSet<Cell>,
}

impl SkewTableau {
    pub fn new(entries: Tableau, holes: BTreeSet<Cell>) -> Self {
        SkewTableau { entries, holes }
    }

    /// Treats every cell of the smallest Young diagram containing `entries`
    /// that `entries` leaves empty as a hole.
    pub fn with_gaps_as_holes(entries: Tableau) -> Self {
        let outer = enclosing_partition(entries.cells());
        let holes = outer.cells().filter(|c| !entries.contains(*c)).collect();
        SkewTableau { entries, holes }
    }

    /// Plain-text rendering in the style of [`Tableau::render`], with holes
    /// shown as `•`.
    pub fn render(&self) -> String {
        let height = self.entries.cells().chain(self.holes.iter().copied()).map(|c| c.y).max().unwrap_or(0);
        let mut lines = Vec::with_capacity(height);
        for y in 1..=height {
            let width = self
                .entries
                .cells()
                .chain(self.holes.iter().copied())
                .filter(|c| c.y == y)
                .map(|c| c.x)
                .max()
                .unwrap_or(0);
            let row: Vec<String> = (1..=width)
                .map(|x| {
                    let c = Cell::new(x, y);
                    match self.entries.get(c) {
                        Some(v) => v.to_string(),
                        None if self.holes.contains(&c) => "•".to_string(),
                        None => ".".to_string(),
                    }
                })
                .collect();
            lines.push(row.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The smallest partition whose diagram contains `cells`.
fn enclosing_partition(cells: impl Iterator<Item = Cell>) -> Partition {
    let mut widths: Vec<u32> = Vec::new();
    for c in cells {
        if widths.len() < c.y {
            widths.resize(c.y, 0);
        }
        widths[c.y - 1] = widths[c.y - 1].max(c.x as u32);
    }
    for y in (0..widths.len().saturating_sub(1)).rev() {
        widths[y] = widths[y].max(widths[y + 1]);
    }
    Partition::new(widths).expect("suffix maxima are weakly decreasing")
}

fn check_interval(bounds: [u32; 4]) -> Result<()> {
    if bounds[0] == 0 || bounds.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInterval(bounds.to_vec()));
    }
    Ok(())
}

/// `T|_{a,b;c,d}`: the boxes of `T` whose entries lie in `[a, b] ∪ [c, d]`,
/// with every other box of the enclosing Young diagram marked as a hole.
pub fn restrict(t: &Tableau, a: u32, b: u32, c: u32, d: u32) -> Result<SkewTableau> {
    check_interval([a, b, c, d])?;
    let kept = t.filter_entries(|v| (a..=b).contains(&v) || (c..=d).contains(&v));
    Ok(SkewTableau::with_gaps_as_holes(kept))
}

/// Checks that the support splits as `(λ¹ ∖ λ²) ⊔ λ³` with the holes
/// filling `λ² ∖ λ³`.
fn validate_skew(skew: &SkewTableau) -> Result<()> {
    let entries = &skew.entries;
    if let Some(&c) = skew.holes.iter().find(|c| entries.contains(**c)) {
        return Err(Error::MalformedSupport(format!("cell {c} is both a hole and an entry")));
    }
    let all = || entries.cells().chain(skew.holes.iter().copied());
    let outer = enclosing_partition(all());
    if outer.size() as usize != entries.len() + skew.holes.len() {
        return Err(Error::MalformedSupport("support is not a Young diagram once holes are added".into()));
    }
    let middle = enclosing_partition(skew.holes.iter().copied());
    let inner_ok = middle.cells().all(|c| {
        skew.holes.contains(&c) || (c.left().is_none_or(|l| !skew.holes.contains(&l)) && c.above().is_none_or(|u| !skew.holes.contains(&u)))
    });
    if !inner_ok {
        return Err(Error::MalformedSupport("the filled cells inside the holes do not form a Young diagram".into()));
    }
    Ok(())
}

/// The holes that may be slid next: those with no other hole directly to
/// the right or below.
pub fn inside_corners(holes: &BTreeSet<Cell>) -> Vec<Cell> {
    holes.iter().copied().filter(|c| !holes.contains(&c.right()) && !holes.contains(&c.below())).collect()
}

/// `Rect(T)`, sliding inside corners in the order chosen by `pick`, which
/// receives the current corners in row-major order and returns an index.
pub fn rect_with(skew: &SkewTableau, mut pick: impl FnMut(&[Cell]) -> usize) -> Result<Tableau> {
    validate_skew(skew)?;
    let mut t = skew.entries.clone();
    let mut holes = skew.holes.clone();
    while !holes.is_empty() {
        let corners = inside_corners(&holes);
        let chosen = corners[pick(&corners)];
        holes.remove(&chosen);
        // The hole's value is never compared: its neighbours always hold
        // entries, and it is dropped once it reaches the boundary.
        t.set(chosen, 0);
        let end = slide_out(&mut t, chosen);
        t.remove(end);
    }
    Ok(t)
}

/// `Rect(T)`: slide the holes out, topmost then leftmost inside corner
/// first, and delete them.
pub fn rect(skew: &SkewTableau) -> Result<Tableau> {
    rect_with(skew, |_| 0)
}

/// `Res_{a,b;c,d}(T) = Rect(T|_{a,b;c,d})`.
///
/// When the kept boxes below `b` and the removed band `(b, c)` are both
/// present, the rectification of the restricted tableau depends on the
/// order of the slides. The holes are then slid in the order of the entries
/// of `T` they replaced, largest first and rightmost first among equals,
/// which is the order in which promotion moves those entries out. On every
/// other support all orders agree.
pub fn res(t: &Tableau, a: u32, b: u32, c: u32, d: u32) -> Result<Tableau> {
    let skew = restrict(t, a, b, c, d)?;
    let key = |c: Cell| (t.get(c), c.x);
    rect_with(&skew, |corners| {
        (0..corners.len()).max_by_key(|&i| key(corners[i])).expect("a non-empty hole set has an inside corner")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn slide_examples() {
        assert_eq!(jdt_slide(&t("5"), Cell::new(1, 1)).unwrap(), t("5"));
        // Smaller neighbour wins: the travelling 9 goes right past the 5.
        assert_eq!(jdt_slide(&t("9,5;6"), Cell::new(1, 1)).unwrap(), t("5,9;6"));
        // Equal neighbours: the traveller goes down.
        assert_eq!(jdt_slide(&t("9,3;3"), Cell::new(1, 1)).unwrap(), t("3,3;9"));
        assert_eq!(jdt_slide(&t("1"), Cell::new(2, 1)), Err(Error::OutsideSupport(Cell::new(2, 1))));
    }

    #[test]
    fn reverse_slide_undoes_slide() {
        let s = t("9,2,4;3,5;6");
        let mut moved = s.clone();
        let end = slide_out(&mut moved, Cell::new(1, 1));
        assert_eq!(moved, t("2,4,9;3,5;6"));
        assert_eq!(jdt_reverse_slide(&moved, end).unwrap(), s);
    }

    #[test]
    fn restriction_example() {
        let s = t("1,2,2,3;4,5,6;6,6");
        let r = restrict(&s, 1, 2, 5, 6).unwrap();
        assert_eq!(r.entries, t("1,2,2;.,5,6;6,6"));
        assert_eq!(r.holes, BTreeSet::from([Cell::new(1, 2)]));
        assert_eq!(r.render(), "1 2 2\n• 5 6\n6 6");
        assert_eq!(restrict(&s, 1, 6, 6, 6).unwrap().entries, s);
        assert!(restrict(&s, 7, 7, 7, 7).unwrap().entries.is_empty());
        assert!(restrict(&s, 3, 2, 5, 6).is_err());
    }

    #[test]
    fn rectification_example() {
        let s = t("1,2,2,3;4,5,6;6,6");
        assert_eq!(res(&s, 1, 2, 5, 6).unwrap(), t("1,2,2;5,6,6;6"));
        assert_eq!(res(&s, 1, 6, 6, 6).unwrap(), s);
        assert_eq!(rect(&SkewTableau::with_gaps_as_holes(s.clone())).unwrap(), s);
        let only_holes = SkewTableau::new(Tableau::new(), [Cell::new(1, 1), Cell::new(2, 1)].into());
        assert_eq!(rect(&only_holes).unwrap(), Tableau::new());
    }

    #[test]
    fn skew_shape_rectifies() {
        // Entries ≥ 3 of a tableau form a skew shape whose holes are a
        // Young diagram.
        let s = t("1,2,3;2,4;5");
        assert_eq!(res(&s, 3, 5, 5, 5).unwrap(), t("3;4;5"));
    }

    #[test]
    fn slide_order_matters_with_kept_inner_boxes() {
        // The kept 1 sits inside the hole band, so the two corners give
        // different tableaux.
        let skew = restrict(&t("1,2;3,4"), 1, 1, 4, 4).unwrap();
        assert_eq!(rect_with(&skew, |_| 0).unwrap(), t("1,4"));
        assert_eq!(rect_with(&skew, |cs| cs.len() - 1).unwrap(), t("1;4"));
        // The replaced 3 slides before the replaced 2.
        assert_eq!(res(&t("1,2;3,4"), 1, 1, 4, 4).unwrap(), t("1;4"));
        // Equal replaced entries: the rightmost slides first.
        assert_eq!(res(&t("1,2;2,4"), 1, 1, 4, 4).unwrap(), t("1,4"));
    }

    #[test]
    fn malformed_supports_are_rejected() {
        // Filled cells strictly inside two layers of holes.
        let s = t("1,2,3,4;2,3,4;5");
        assert!(matches!(res(&s, 2, 2, 4, 5), Err(Error::MalformedSupport(_))));
        let overlapping = SkewTableau::new(t("1"), [Cell::new(1, 1)].into());
        assert!(matches!(rect(&overlapping), Err(Error::MalformedSupport(_))));
        let gap = SkewTableau::new(t("1,.,2"), BTreeSet::new());
        assert!(matches!(rect(&gap), Err(Error::MalformedSupport(_))));
    }
}
