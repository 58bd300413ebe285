//! The type-AII reduction algorithms: `rem`, `red`, `suc`, the pair
//! `(P^AII, Q^AII)`, the correspondence `LR^AII`, and k-highest/k-lowest
//! weight detection.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::crystal::Rank;
use crate::enumerate::{enumerate_ssyt, enumerate_symplectic};
use crate::error::{Error, Result};
use crate::insertion::column_star;
use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

/// Entries removed from a column by `red`; they come in adjacent
/// (odd, even) pairs.
pub type RemovalSet = BTreeSet<u32>;

fn column_of(c: &Tableau) -> Result<Vec<u32>> {
    if c.cells().any(|cell| cell.x != 1) || c.shape().is_none() {
        return Err(Error::NotSingleColumn);
    }
    Ok(c.column_entries(1))
}

/// `rem` of a column given top-down, computed over prefix lengths.
pub fn rem_entries(column: &[u32]) -> RemovalSet {
    // by_len[l] = rem of the top l entries.
    let mut by_len: Vec<RemovalSet> = vec![RemovalSet::new(); column.len().max(1) + 1];
    for l in 2..=column.len() {
        let (lower, upper) = (column[l - 2], column[l - 1]);
        let inner = &by_len[l - 2];
        let removable =
            upper % 2 == 0 && upper - 1 == lower && (upper as usize) + inner.len() + 1 < 2 * l;
        by_len[l] = if removable {
            let mut set = inner.clone();
            set.insert(lower);
            set.insert(upper);
            set
        } else {
            by_len[l - 1].clone()
        };
    }
    by_len.swap_remove(column.len())
}

/// `rem(C)` for a single-column tableau.
pub fn rem(c: &Tableau) -> Result<RemovalSet> {
    Ok(rem_entries(&column_of(c)?))
}

/// `red(C)`: the column with the entries of `rem(C)` removed.
pub fn red(c: &Tableau) -> Result<Tableau> {
    let column = column_of(c)?;
    let removed = rem_entries(&column);
    let kept: Vec<u32> = column.into_iter().filter(|v| !removed.contains(v)).collect();
    Ok(Tableau::column(&kept))
}

/// `suc(S) = red(S₁) * S_{≥2}`.
pub fn suc(s: &Tableau) -> Result<Tableau> {
    s.require_shape()?;
    let first = Tableau::column(&s.column_entries(1));
    let rest = s.filter_cells(|c| c.x >= 2).shift_left(1)?;
    column_star(&red(&first)?, &rest)
}

/// A recording tableau: cell ↦ the step at which `suc` removed it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RecordingTableau(Tableau);

impl RecordingTableau {
    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    /// Number of `suc` steps recorded.
    pub fn steps(&self) -> u32 {
        self.0.max_entry().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(cell, step)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.0.iter()
    }
}

impl Serialize for RecordingTableau {
    /// `[{"box": [x, y], "step": j}, …]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            #[serde(rename = "box")]
            cell: [usize; 2],
            step: u32,
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (c, j) in self.0.iter() {
            seq.serialize_element(&Entry { cell: [c.x, c.y], step: j })?;
        }
        seq.end()
    }
}

/// `(P^AII(S), Q^AII(S))`.
pub fn lr_aii(s: &Tableau) -> Result<(Tableau, RecordingTableau)> {
    let mut current = s.clone();
    current.require_shape()?;
    let mut recording = Tableau::new();
    // Each non-trivial step removes at least one box.
    for step in 1..=s.len() as u32 + 1 {
        let next = suc(&current)?;
        if next == current {
            return Ok((current, RecordingTableau(recording)));
        }
        let kept: BTreeSet<Cell> = next.cells().collect();
        for c in current.cells().filter(|c| !kept.contains(c)) {
            recording.set(c, step);
        }
        current = next;
    }
    unreachable!("suc failed to stabilise within |λ| + 1 steps")
}

/// `P^AII(S)`.
pub fn p_aii(s: &Tableau) -> Result<Tableau> {
    Ok(lr_aii(s)?.0)
}

/// `Q^AII(S)`.
pub fn q_aii(s: &Tableau) -> Result<RecordingTableau> {
    Ok(lr_aii(s)?.1)
}

/// `P^AII_{a,b}`: shift entries down by `a − 1`, reduce, shift back.
pub fn p_aii_range(t: &Tableau, a: u32, b: u32) -> Result<Tableau> {
    if a == 0 || b < a {
        return Err(Error::InvalidInterval(vec![a, b]));
    }
    if (b - a + 1) % 2 == 1 {
        return Err(Error::OddInterval(a, b));
    }
    if let Some((_, v)) = t.iter().find(|&(_, v)| v < a || v > b) {
        return Err(Error::EntryOutOfRange { entry: v, lo: a, hi: b });
    }
    let shifted = t.map_entries(|v| v - (a - 1));
    Ok(p_aii(&shifted)?.map_entries(|v| v + (a - 1)))
}

/// The staircase tableau of shape `μ` with row `y` constantly `a_y`
/// (`highest`) or `b_y` (lowest).
pub fn staircase(mu: &Partition, rank: Rank, highest: bool) -> Result<Tableau> {
    if mu.length() > rank.n() {
        return Err(Error::InvalidInterval(mu.parts().to_vec()));
    }
    let (a, b) = rank.ab_sequences();
    let fill = if highest { a } else { b };
    let rows: Vec<Vec<u32>> = (1..=mu.length()).map(|y| vec![fill[y - 1]; mu.part(y) as usize]).collect();
    Ok(Tableau::from_rows(&rows))
}

fn is_constant_staircase(p: &Tableau, fill: &[u32]) -> bool {
    p.height() <= fill.len() && p.iter().all(|(c, v)| v == fill[c.y - 1])
}

/// `P^AII(T)` has row `y` filled with `a_y` throughout.
pub fn is_k_highest(t: &Tableau, rank: Rank) -> Result<bool> {
    rank.check_entries(t)?;
    Ok(is_constant_staircase(&p_aii(t)?, &rank.ab_sequences().0))
}

/// `P^AII(T)` has row `y` filled with `b_y` throughout.
pub fn is_k_lowest(t: &Tableau, rank: Rank) -> Result<bool> {
    rank.check_entries(t)?;
    Ok(is_constant_staircase(&p_aii(t)?, &rank.ab_sequences().1))
}

/// Every `T ∈ SST_{2n}(λ)` grouped by the shape of `P^AII(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrDecomposition {
    pub lambda: Partition,
    pub rank: Rank,
    pub classes: BTreeMap<Partition, Vec<(Tableau, RecordingTableau)>>,
}

/// Per-class summary used by reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LrClassSummary {
    pub mu: Partition,
    pub symplectic_count: usize,
    pub recording_count: usize,
    pub members: usize,
}

impl LrDecomposition {
    /// `(#SpT_{2n}(μ), #Rec_{2n}(λ/μ), class size)` per shape `μ`.
    pub fn summary(&self) -> Vec<LrClassSummary> {
        self.classes
            .iter()
            .map(|(mu, pairs)| {
                let recs: BTreeSet<&RecordingTableau> = pairs.iter().map(|(_, q)| q).collect();
                LrClassSummary {
                    mu: mu.clone(),
                    symplectic_count: enumerate_symplectic(mu, self.rank.n()).len(),
                    recording_count: recs.len(),
                    members: pairs.len(),
                }
            })
            .collect()
    }

    /// Checks that `S ↦ (P, Q)` is a bijection onto
    /// `⊔_μ SpT_{2n}(μ) × Rec_{2n}(λ/μ)`: every `P` is symplectic of shape
    /// `μ`, no pair repeats, and each class has exactly
    /// `#SpT_{2n}(μ) · #Rec_{2n}(λ/μ)` members.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let mut seen = BTreeSet::new();
        let mut total = 0usize;
        for (mu, pairs) in &self.classes {
            for (p, q) in pairs {
                if !p.is_symplectic() || p.shape().as_ref() != Some(mu) {
                    return Err(format!("P = {p} is not a symplectic tableau of shape {mu}"));
                }
                if !seen.insert((p, q)) {
                    return Err(format!("pair (P = {p}, Q = {}) occurs twice", q.as_tableau()));
                }
            }
            total += pairs.len();
        }
        let expected: usize = self.summary().iter().map(|s| s.symplectic_count * s.recording_count).sum();
        if expected != total {
            return Err(format!("Σ #SpT·#Rec = {expected} but #SST = {total}"));
        }
        Ok(())
    }
}

/// Runs `LR^AII` over all of `SST_{2n}(λ)`.
pub fn lr_aii_partition(lambda: &Partition, rank: Rank) -> Result<LrDecomposition> {
    if lambda.length() > rank.m() as usize {
        return Err(Error::InvalidInterval(lambda.parts().to_vec()));
    }
    let mut classes: BTreeMap<Partition, Vec<(Tableau, RecordingTableau)>> = BTreeMap::new();
    for t in enumerate_ssyt(lambda, rank.m()) {
        let (p, q) = lr_aii(&t)?;
        let mu = p.require_shape()?;
        classes.entry(mu).or_default().push((p, q));
    }
    Ok(LrDecomposition { lambda: lambda.clone(), rank, classes })
}
