//! Kashiwara operators on words, tableaux and tensor products, together with
//! the weight maps and the ĝ-dominance test for tableau paths.
//!
//! Tensor products follow the convention in which `b₁ ⊗ b₂` corresponds to the
//! concatenated word `b₁ · b₂`: `ẽ_i` acts on the left factor iff
//! `ε_i(b₁) > φ_i(b₂)`, and `f̃_i` acts on the left factor iff
//! `ε_i(b₁) ≥ φ_i(b₂)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::Cell;
use crate::tableau::Tableau;
use crate::word::Word;

/// The rank parameter `n ≥ 2`; letters live in `[1, 2n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        Ok(Rank(n))
    }

    pub fn n(self) -> usize {
        self.0
    }

    /// Alphabet size `2n`.
    pub fn m(self) -> u32 {
        2 * self.0 as u32
    }

    /// `ī = 2n − i + 1`.
    pub fn bar(self, i: u32) -> u32 {
        self.m() + 1 - i
    }

    /// Checks `1 ≤ i ≤ 2n − 1`.
    pub fn check_index(self, i: usize) -> Result<()> {
        let max = 2 * self.0 - 1;
        if i == 0 || i > max {
            return Err(Error::BadCrystalIndex { index: i, max });
        }
        Ok(())
    }

    pub fn check_entries(self, t: &Tableau) -> Result<()> {
        match t.iter().find(|&(_, v)| v > self.m()) {
            Some((_, v)) => Err(Error::EntryOutOfRange { entry: v, lo: 1, hi: self.m() }),
            None => Ok(()),
        }
    }

    /// `a_k = 2k − (1 + (−1)^k)/2` and `b_k = 2k − (1 + (−1)^{k+1})/2`.
    pub fn ab_sequences(self) -> (Vec<u32>, Vec<u32>) {
        let a = (1..=self.0 as u32).map(|k| if k % 2 == 0 { 2 * k - 1 } else { 2 * k }).collect();
        let b = (1..=self.0 as u32).map(|k| if k % 2 == 0 { 2 * k } else { 2 * k - 1 }).collect();
        (a, b)
    }
}

/// An integer weight; the producing function fixes which basis the
/// coordinates refer to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpWeight(pub Vec<i32>);

impl SpWeight {
    pub fn zero(n: usize) -> Self {
        SpWeight(vec![0; n])
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    /// `m₁ ≥ m₂ ≥ … ≥ m_n ≥ 0`.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().is_none_or(|&v| v >= 0)
    }

    /// The partition with these parts, if the weight is dominant.
    pub fn to_partition(&self) -> Option<crate::shape::Partition> {
        if !self.is_dominant() {
            return None;
        }
        crate::shape::Partition::new(self.0.iter().map(|&v| v as u32).collect()).ok()
    }

    /// A partition padded with zeros to length `n`.
    pub fn from_partition(mu: &crate::shape::Partition, n: usize) -> Self {
        SpWeight((1..=n).map(|y| mu.part(y) as i32).collect())
    }
}

impl fmt::Display for SpWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", coords.join(","))
    }
}

/// `wt(T) = Σ T[i] ε_i` in `gl_{2n}` coordinates.
pub fn wt_gl(t: &Tableau, rank: Rank) -> Vec<i32> {
    (1..=rank.m()).map(|i| t.count_entry(i) as i32).collect()
}

/// ĝ-weight: coordinate `i` is `T[i] − T[ī]`.
pub fn wt_ghat(t: &Tableau, rank: Rank) -> SpWeight {
    let gl = wt_gl(t, rank);
    let m = rank.m() as usize;
    SpWeight((0..rank.n()).map(|i| gl[i] - gl[m - 1 - i]).collect())
}

/// k-weight: coordinate `k` is `T[a_k] − T[b_k]`.
pub fn wt_k(t: &Tableau, rank: Rank) -> SpWeight {
    let (a, b) = rank.ab_sequences();
    SpWeight(a.iter().zip(&b).map(|(&ak, &bk)| t.count_entry(ak) as i32 - t.count_entry(bk) as i32).collect())
}

/// The ĝ-weight contributed by a single letter.
fn letter_ghat(letter: u32, rank: Rank) -> (usize, i32) {
    let n = rank.n() as u32;
    if letter <= n {
        (letter as usize - 1, 1)
    } else {
        (rank.bar(letter) as usize - 1, -1)
    }
}

/// Outcome of walking the prefixes of a tableau's inverse column word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceWalk {
    /// Accumulated ĝ-weight after each prefix (prefix lengths 1, 2, …).
    pub prefixes: Vec<SpWeight>,
    /// Length of the first prefix leaving the dominant chamber, if any.
    pub failing_prefix: Option<usize>,
}

impl DominanceWalk {
    pub fn is_dominant(&self) -> bool {
        self.failing_prefix.is_none()
    }
}

pub fn ghat_walk(t: &Tableau, rank: Rank) -> Result<DominanceWalk> {
    let word = t.inverse_column_word()?;
    let mut current = SpWeight::zero(rank.n());
    let mut prefixes = Vec::with_capacity(word.len());
    let mut failing_prefix = None;
    for (k, &l) in word.letters().iter().enumerate() {
        if l == 0 || l > rank.m() {
            return Err(Error::EntryOutOfRange { entry: l, lo: 1, hi: rank.m() });
        }
        let (i, s) = letter_ghat(l, rank);
        current.0[i] += s;
        if failing_prefix.is_none() && !current.is_dominant() {
            failing_prefix = Some(k + 1);
        }
        prefixes.push(current.clone());
    }
    Ok(DominanceWalk { prefixes, failing_prefix })
}

/// True iff every prefix of the inverse column word has dominant ĝ-weight.
pub fn is_ghat_dominant(t: &Tableau, rank: Rank) -> Result<bool> {
    let word = t.inverse_column_word()?;
    let mut current = vec![0i32; rank.n()];
    for &l in word.letters() {
        if l == 0 || l > rank.m() {
            return Err(Error::EntryOutOfRange { entry: l, lo: 1, hi: rank.m() });
        }
        let (i, s) = letter_ghat(l, rank);
        current[i] += s;
        let ok = match s {
            // Raising coordinate i can only break m_{i-1} ≥ m_i.
            1 => i == 0 || current[i - 1] >= current[i],
            // Lowering coordinate i can only break m_i ≥ m_{i+1} or m_n ≥ 0.
            _ => if i + 1 < current.len() { current[i] >= current[i + 1] } else { current[i] >= 0 },
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The piecewise-linear path of a tableau evaluated at `t ∈ [0, 1]`: the
/// word's letters are traversed at uniform speed, one per `1/N` interval.
pub fn ghat_path_point(word: &Word, rank: Rank, t: f64) -> Vec<f64> {
    let n_letters = word.len();
    let mut point = vec![0.0; rank.n()];
    if n_letters == 0 {
        return point;
    }
    let scaled = t.clamp(0.0, 1.0) * n_letters as f64;
    for (k, &l) in word.letters().iter().enumerate() {
        let portion = (scaled - k as f64).clamp(0.0, 1.0);
        if portion == 0.0 {
            break;
        }
        let (i, s) = letter_ghat(l, rank);
        point[i] += s as f64 * portion;
    }
    point
}

/// Kashiwara operators with string functions.
pub trait Crystal: Sized + Clone {
    fn e(&self, i: usize) -> Option<Self>;
    fn f(&self, i: usize) -> Option<Self>;
    fn eps(&self, i: usize) -> usize;
    fn phi(&self, i: usize) -> usize;

    /// `ẽ_i^{ε_i(b)} b`.
    fn e_max(&self, i: usize) -> Self {
        let mut b = self.clone();
        while let Some(next) = b.e(i) {
            b = next;
        }
        b
    }

    /// `f̃_i^{φ_i(b)} b`.
    fn f_max(&self, i: usize) -> Self {
        let mut b = self.clone();
        while let Some(next) = b.f(i) {
            b = next;
        }
        b
    }
}

/// Positions of letters `i` (left unmatched) and `i+1` (right unmatched)
/// that survive cancelling every `i+1 … i` pair.
fn signature(letters: &[u32], i: usize) -> (Vec<usize>, Vec<usize>) {
    let (lo, hi) = (i as u32, i as u32 + 1);
    let mut open_hi = Vec::new();
    let mut free_lo = Vec::new();
    for (pos, &l) in letters.iter().enumerate() {
        if l == hi {
            open_hi.push(pos);
        } else if l == lo && open_hi.pop().is_none() {
            free_lo.push(pos);
        }
    }
    (free_lo, open_hi)
}

fn word_e(letters: &[u32], i: usize) -> Option<usize> {
    signature(letters, i).1.first().copied()
}

fn word_f(letters: &[u32], i: usize) -> Option<usize> {
    signature(letters, i).0.last().copied()
}

impl Crystal for Word {
    fn e(&self, i: usize) -> Option<Self> {
        let pos = word_e(&self.0, i)?;
        let mut letters = self.0.clone();
        letters[pos] -= 1;
        Some(Word(letters))
    }

    fn f(&self, i: usize) -> Option<Self> {
        let pos = word_f(&self.0, i)?;
        let mut letters = self.0.clone();
        letters[pos] += 1;
        Some(Word(letters))
    }

    fn eps(&self, i: usize) -> usize {
        signature(&self.0, i).1.len()
    }

    fn phi(&self, i: usize) -> usize {
        signature(&self.0, i).0.len()
    }
}

/// Cells in row-word order: rows bottom to top, each left to right.
fn row_word_cells(t: &Tableau) -> Vec<(Cell, u32)> {
    let mut cells: Vec<(Cell, u32)> = t.iter().collect();
    cells.sort_by_key(|&(c, _)| (std::cmp::Reverse(c.y), c.x));
    cells
}

fn tableau_step(t: &Tableau, i: usize, raise: bool) -> Option<Tableau> {
    let cells = row_word_cells(t);
    let letters: Vec<u32> = cells.iter().map(|&(_, v)| v).collect();
    let pos = if raise { word_e(&letters, i)? } else { word_f(&letters, i)? };
    let (cell, v) = cells[pos];
    let mut out = t.clone();
    out.set(cell, if raise { v - 1 } else { v + 1 });
    Some(out)
}

impl Crystal for Tableau {
    fn e(&self, i: usize) -> Option<Self> {
        tableau_step(self, i, true)
    }

    fn f(&self, i: usize) -> Option<Self> {
        tableau_step(self, i, false)
    }

    fn eps(&self, i: usize) -> usize {
        let letters: Vec<u32> = row_word_cells(self).iter().map(|&(_, v)| v).collect();
        signature(&letters, i).1.len()
    }

    fn phi(&self, i: usize) -> usize {
        let letters: Vec<u32> = row_word_cells(self).iter().map(|&(_, v)| v).collect();
        signature(&letters, i).0.len()
    }
}

/// `b₁ ⊗ b₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: Crystal, B: Crystal> Crystal for Tensor<A, B> {
    fn e(&self, i: usize) -> Option<Self> {
        if self.0.eps(i) > self.1.phi(i) {
            Some(Tensor(self.0.e(i)?, self.1.clone()))
        } else {
            Some(Tensor(self.0.clone(), self.1.e(i)?))
        }
    }

    fn f(&self, i: usize) -> Option<Self> {
        if self.0.eps(i) >= self.1.phi(i) {
            Some(Tensor(self.0.f(i)?, self.1.clone()))
        } else {
            Some(Tensor(self.0.clone(), self.1.f(i)?))
        }
    }

    fn eps(&self, i: usize) -> usize {
        let (e1, e2, p2) = (self.0.eps(i), self.1.eps(i), self.1.phi(i));
        e2 + e1.saturating_sub(p2)
    }

    fn phi(&self, i: usize) -> usize {
        let (e1, p1, p2) = (self.0.eps(i), self.0.phi(i), self.1.phi(i));
        p1 + p2.saturating_sub(e1)
    }
}

/// Rank-checked word operator `ẽ_i`.
pub fn crystal_e(i: usize, w: &Word, rank: Rank) -> Result<Option<Word>> {
    rank.check_index(i)?;
    Ok(w.e(i))
}

/// Rank-checked word operator `f̃_i`.
pub fn crystal_f(i: usize, w: &Word, rank: Rank) -> Result<Option<Word>> {
    rank.check_index(i)?;
    Ok(w.f(i))
}

/// Rank-checked tableau operator `ẽ_i`.
pub fn tableau_e(i: usize, t: &Tableau, rank: Rank) -> Result<Option<Tableau>> {
    rank.check_index(i)?;
    Ok(t.e(i))
}

/// Rank-checked tableau operator `f̃_i`.
pub fn tableau_f(i: usize, t: &Tableau, rank: Rank) -> Result<Option<Tableau>> {
    rank.check_index(i)?;
    Ok(t.f(i))
}

/// `(ε_i, φ_i)` for every `i ∈ [1, 2n−1]`.
pub fn string_data<C: Crystal>(b: &C, rank: Rank) -> Vec<(usize, usize)> {
    (1..rank.m() as usize).map(|i| (b.eps(i), b.phi(i))).collect()
}
