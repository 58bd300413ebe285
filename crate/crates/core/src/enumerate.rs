//! Exhaustive enumeration of semistandard tableaux.

use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

/// All semistandard tableaux of shape `λ` with entries in `[1, m]`,
/// ordered lexicographically by their column reading sequence (columns left
/// to right, each top to bottom).
pub fn enumerate_ssyt(lambda: &Partition, m: u32) -> Vec<Tableau> {
    let cells: Vec<Cell> = column_order(lambda);
    let mut out = Vec::new();
    let mut filling: Vec<u32> = Vec::with_capacity(cells.len());
    let index = |c: Cell, cells: &[Cell]| cells.iter().position(|&d| d == c);
    // Precompute, for each position, the positions of the cell above and the
    // cell to the left (both earlier in column order).
    let above: Vec<Option<usize>> = cells.iter().map(|c| c.above().and_then(|a| index(a, &cells))).collect();
    let left: Vec<Option<usize>> = cells.iter().map(|c| c.left().and_then(|l| index(l, &cells))).collect();
    fill(&cells, &above, &left, m, &mut filling, &mut out);
    out
}

fn column_order(lambda: &Partition) -> Vec<Cell> {
    let conj = lambda.conjugate();
    conj.parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &h)| (1..=h as usize).map(move |y| Cell::new(i + 1, y)))
        .collect()
}

fn fill(
    cells: &[Cell],
    above: &[Option<usize>],
    left: &[Option<usize>],
    m: u32,
    filling: &mut Vec<u32>,
    out: &mut Vec<Tableau>,
) {
    let k = filling.len();
    if k == cells.len() {
        out.push(Tableau::from_cells(cells.iter().copied().zip(filling.iter().copied())));
        return;
    }
    let lo_above = above[k].map_or(1, |a| filling[a] + 1);
    let lo_left = left[k].map_or(1, |l| filling[l]);
    // Leave room for the strictly increasing remainder of this column.
    let below_in_column = cells[k + 1..].iter().take_while(|c| c.x == cells[k].x).count() as u32;
    let hi = m.saturating_sub(below_in_column);
    for v in lo_above.max(lo_left)..=hi {
        filling.push(v);
        fill(cells, above, left, m, filling, out);
        filling.pop();
    }
}

/// Number of semistandard tableaux of shape `λ` over `[1, m]`, by the
/// hook-content formula.
pub fn ssyt_count(lambda: &Partition, m: u32) -> u64 {
    let conj = lambda.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for c in lambda.cells() {
        let content = m as i64 + c.x as i64 - c.y as i64;
        if content <= 0 {
            return 0;
        }
        let hook = lambda.part(c.y) as usize - c.x + conj.part(c.x) as usize - c.y + 1;
        num *= content as u128;
        den *= hook as u128;
    }
    (num / den) as u64
}

/// All symplectic (King) tableaux of shape `μ` over `[1, 2n]`.
pub fn enumerate_symplectic(mu: &Partition, n: usize) -> Vec<Tableau> {
    enumerate_ssyt(mu, 2 * n as u32).into_iter().filter(Tableau::is_symplectic).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::enumerate_partitions;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Brute force: every filling of the shape by `[1, m]`, filtered.
    fn brute_force(lambda: &Partition, m: u32) -> BTreeSet<Tableau> {
        let cells: Vec<Cell> = lambda.cells().collect();
        let mut out = BTreeSet::new();
        let mut values = vec![1u32; cells.len()];
        loop {
            let t = Tableau::from_cells(cells.iter().copied().zip(values.iter().copied()));
            if t.is_semistandard() {
                out.insert(t);
            }
            let mut i = 0;
            while i < values.len() && values[i] == m {
                values[i] = 1;
                i += 1;
            }
            if i == values.len() {
                return out;
            }
            values[i] += 1;
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ssyt(&p("1"), 4).len(), 4);
        assert_eq!(enumerate_ssyt(&p("1,1"), 4).len(), 6);
        assert_eq!(enumerate_ssyt(&p("2,1"), 3).len(), 8);
        assert_eq!(enumerate_ssyt(&Partition::empty(), 3), vec![Tableau::new()]);
        assert!(enumerate_ssyt(&p("1,1,1"), 2).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for lambda in enumerate_partitions(5, 5) {
            for m in 1..=4 {
                if (m as usize).pow(lambda.size()) > 200_000 {
                    continue;
                }
                let listed = enumerate_ssyt(&lambda, m);
                let set: BTreeSet<Tableau> = listed.iter().cloned().collect();
                assert_eq!(set.len(), listed.len(), "duplicates for {lambda} m={m}");
                assert_eq!(set, brute_force(&lambda, m), "{lambda} m={m}");
            }
        }
    }

    #[test]
    fn enumeration_matches_hook_content() {
        for n in 1..=3u32 {
            for lambda in enumerate_partitions(8, 2 * n as usize) {
                assert_eq!(enumerate_ssyt(&lambda, 2 * n).len() as u64, ssyt_count(&lambda, 2 * n), "{lambda}");
            }
        }
    }

    #[test]
    fn column_reading_order_is_lexicographic() {
        let listed = enumerate_ssyt(&p("2,2,1"), 4);
        let keys: Vec<Vec<u32>> = listed
            .iter()
            .map(|t| (1..=2).flat_map(|x| t.column_entries(x)).collect())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn symplectic_tableaux_are_semistandard() {
        for lambda in enumerate_partitions(5, 3) {
            for t in enumerate_symplectic(&lambda, 3) {
                assert!(t.is_semistandard());
            }
        }
        assert_eq!(enumerate_symplectic(&p("1"), 2).len(), 4);
    }
}
