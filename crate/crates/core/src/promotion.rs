//! The promotion operators `pr_{a,b}` and their inverses, the composites
//! `Φ` and `Ψ`, and the promotion formula for `Res`.

use serde::Serialize;

use crate::crystal::Rank;
use crate::error::{Error, Result};
use crate::jdt::{slide_in_in_place, slide_out_in_place};
use crate::shape::Cell;
use crate::tableau::Tableau;

fn check_promotion_interval(t: &Tableau, a: u32, b: u32) -> Result<()> {
    if a == 0 || a > b {
        return Err(Error::InvalidInterval(vec![a, b]));
    }
    t.require_shape()?;
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    Ok(())
}

/// Splits `T` into the part with entries in `[a, b]` and the rest.
fn split_band(t: &Tableau, a: u32, b: u32) -> (Tableau, Tableau) {
    let band = t.filter_entries(|v| (a..=b).contains(&v));
    let rest = t.filter_entries(|v| !(a..=b).contains(&v));
    (band, rest)
}

fn merge(band: Tableau, rest: &Tableau) -> Tableau {
    let mut out = band;
    for (c, v) in rest.iter() {
        out.set(c, v);
    }
    out
}

/// `pr⁻¹_{a,b}(T)`: strip the entries outside `[a, b]`, turn each `a` into
/// `b` and lower every other entry by one, slide the new `b`s outward from
/// right to left, and put the stripped boxes back.
pub fn pr_inv(t: &Tableau, a: u32, b: u32) -> Result<Tableau> {
    check_promotion_interval(t, a, b)?;
    if a == b {
        return Ok(t.clone());
    }
    let (band, rest) = split_band(t, a, b);
    let mut band = band.map_entries(|v| if v == a { b } else { v - 1 });
    // The a-boxes form a horizontal strip, so at most one per column;
    // row-major order breaks any tie top to bottom.
    let mut starts: Vec<Cell> = band.iter().filter(|&(_, v)| v == b).map(|(c, _)| c).collect();
    starts.sort_by_key(|c| (std::cmp::Reverse(c.x), c.y));
    for c in starts {
        slide_out_in_place(&mut band, c);
    }
    Ok(merge(band, &rest))
}

/// `pr_{a,b}(T)`, the inverse of [`pr_inv`]: strip the entries outside
/// `[a, b]`, slide the `b`s inward from left to right, turn them into `a`
/// and raise every other entry by one, and put the stripped boxes back.
pub fn pr(t: &Tableau, a: u32, b: u32) -> Result<Tableau> {
    check_promotion_interval(t, a, b)?;
    if a == b {
        return Ok(t.clone());
    }
    let (mut band, rest) = split_band(t, a, b);
    let mut starts: Vec<Cell> = band.iter().filter(|&(_, v)| v == b).map(|(c, _)| c).collect();
    starts.sort_by_key(|c| (c.x, std::cmp::Reverse(c.y)));
    // A `b` that has reached the inner boundary is the `a` it will become,
    // so it leaves the band before the next one moves.
    let mut ends = Vec::with_capacity(starts.len());
    for c in starts {
        let end = slide_in_in_place(&mut band, c);
        band.remove(end);
        ends.push(end);
    }
    let mut band = band.map_entries(|v| v + 1);
    for c in ends {
        band.set(c, a);
    }
    Ok(merge(band, &rest))
}

/// One promotion factor `pr_{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PromotionFactor {
    pub a: u32,
    pub b: u32,
}

impl std::fmt::Display for PromotionFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "pr_{{{},{}}}", self.a, self.b)
    }
}

/// Which of the two composites to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Bijection {
    Phi,
    Psi,
}

/// The factors of `Φ` or `Ψ` in the order they are applied.
///
/// `Φ_n` is the identity for even `n` and `pr_{n,n̄}` for odd `n`, and
/// `Φ_k = pr_{k+1,k̄} ∘ Φ_{k+1}` for even `k`, `pr_{k,k̄} ∘ Φ_{k+1}` for odd
/// `k`. `Ψ` swaps the roles of even and odd.
pub fn factors(which: Bijection, rank: Rank) -> Vec<PromotionFactor> {
    let n = rank.n() as u32;
    let bar = |k: u32| rank.bar(k);
    // Φ shifts the lower end on even k, Ψ on odd k.
    let shifted = |k: u32| match which {
        Bijection::Phi => k.is_multiple_of(2),
        Bijection::Psi => k % 2 == 1,
    };
    let mut out = Vec::with_capacity(n as usize);
    if !shifted(n) {
        out.push(PromotionFactor { a: n, b: bar(n) });
    }
    for k in (1..n).rev() {
        let a = if shifted(k) { k + 1 } else { k };
        out.push(PromotionFactor { a, b: bar(k) });
    }
    out
}

/// A composite applied step by step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionTrace {
    pub input: Tableau,
    pub steps: Vec<(PromotionFactor, Tableau)>,
}

impl BijectionTrace {
    pub fn output(&self) -> &Tableau {
        self.steps.last().map(|(_, t)| t).unwrap_or(&self.input)
    }
}

/// Applies `Φ` or `Ψ`, recording each intermediate tableau.
pub fn trace(which: Bijection, t: &Tableau, rank: Rank) -> Result<BijectionTrace> {
    rank.check_entries(t)?;
    let mut steps = Vec::new();
    let mut current = t.clone();
    for f in factors(which, rank) {
        current = pr(&current, f.a, f.b)?;
        steps.push((f, current.clone()));
    }
    Ok(BijectionTrace { input: t.clone(), steps })
}

pub fn phi(t: &Tableau, rank: Rank) -> Result<Tableau> {
    Ok(trace(Bijection::Phi, t, rank)?.output().clone())
}

pub fn psi(t: &Tableau, rank: Rank) -> Result<Tableau> {
    Ok(trace(Bijection::Psi, t, rank)?.output().clone())
}

/// Inverse of `Φ` or `Ψ`: the inverse factors in reverse order.
pub fn inverse(which: Bijection, t: &Tableau, rank: Rank) -> Result<Tableau> {
    rank.check_entries(t)?;
    let mut current = t.clone();
    for f in factors(which, rank).into_iter().rev() {
        current = pr_inv(&current, f.a, f.b)?;
    }
    Ok(current)
}

/// `Res_{a,b;c,d}(T)` for `T` with all entries at least `a`, computed by
/// promotion: apply `pr⁻¹_{c−1,d}`, `pr⁻¹_{c−2,d−1}`, …, `pr⁻¹_{b+1,d+b−c+2}`
/// (`c − b − 1` factors), restrict to `[a, b + 1 + d − c]`, and raise the
/// entries of `[b + 1, b + 1 + d − c]` by `c − b − 1`.
///
/// Only the boxes of `T` with entries in `[a, b] ∪ [c, d]` matter; the other
/// boxes may hold any entries of `[b + 1, c − 1]` that keep `T`
/// semistandard.
pub fn res_via_promotion(t: &Tableau, a: u32, b: u32, c: u32, d: u32) -> Result<Tableau> {
    if a == 0 || a > b || b > c || c > d {
        return Err(Error::InvalidInterval(vec![a, b, c, d]));
    }
    if let Some(v) = t.min_entry().filter(|&v| v < a) {
        return Err(Error::EntryOutOfRange { entry: v, lo: a, hi: u32::MAX });
    }
    if c <= b + 1 {
        return Ok(t.filter_entries(|v| v <= d));
    }
    let gap = c - b - 1;
    let mut current = t.clone();
    for j in 0..gap {
        current = pr_inv(&current, c - 1 - j, d - j)?;
    }
    let top = b + 1 + (d - c);
    Ok(current
        .filter_entries(|v| (a..=top).contains(&v))
        .map_entries(|v| if v > b { v + gap } else { v }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt::res;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn promotion_example() {
        let before = t("1,2,3;2,4;4");
        let after = t("1,2,4;3,3;4");
        assert_eq!(pr_inv(&before, 2, 4).unwrap(), after);
        assert_eq!(pr(&after, 2, 4).unwrap(), before);
    }

    #[test]
    fn trivial_promotions() {
        let s = t("1,2,3;2,4;4");
        assert_eq!(pr(&s, 3, 3).unwrap(), s);
        assert_eq!(pr_inv(&s, 3, 3).unwrap(), s);
        assert_eq!(pr(&t("1,1;2"), 5, 6).unwrap(), t("1,1;2"));
        assert!(pr(&s, 4, 2).is_err());
        assert_eq!(pr(&t("2,1"), 1, 2), Err(Error::NotSemistandard));
    }

    #[test]
    fn factor_lists() {
        let show = |w, n| factors(w, r(n)).iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ");
        assert_eq!(show(Bijection::Phi, 2), "pr_{1,4}");
        assert_eq!(show(Bijection::Psi, 2), "pr_{2,3} pr_{2,4}");
        assert_eq!(show(Bijection::Phi, 3), "pr_{3,4} pr_{3,5} pr_{1,6}");
        assert_eq!(show(Bijection::Psi, 3), "pr_{2,5} pr_{2,6}");
    }

    #[test]
    fn phi_example_rank_three() {
        let tr = trace(Bijection::Phi, &t("1,1;2,6;5"), r(3)).unwrap();
        assert_eq!(tr.steps.len(), 3);
        assert_eq!(tr.steps[0].1, t("1,1;2,6;5"));
        assert_eq!(tr.output(), &t("1,2;2,3;4"));
        assert_eq!(inverse(Bijection::Phi, tr.output(), r(3)).unwrap(), t("1,1;2,6;5"));
    }

    #[test]
    fn res_by_promotion_example() {
        let tilde = t("1,2,2,4;3,5,6;6,6");
        assert_eq!(pr_inv(&tilde, 4, 6).unwrap(), t("1,2,2,6;3,4,5;5,5"));
        assert_eq!(pr_inv(&t("1,2,2,6;3,4,5;5,5"), 3, 5).unwrap(), t("1,2,2,6;3,4,4;4,5"));
        assert_eq!(res_via_promotion(&tilde, 1, 2, 5, 6).unwrap(), t("1,2,2;5,6,6;6"));
        let original = t("1,2,2,3;4,5,6;6,6");
        assert_eq!(res_via_promotion(&original, 1, 2, 5, 6).unwrap(), t("1,2,2;5,6,6;6"));
        assert_eq!(res(&original, 1, 2, 5, 6).unwrap(), t("1,2,2;5,6,6;6"));
        assert_eq!(res_via_promotion(&original, 1, 6, 6, 6).unwrap(), original);
        assert!(res_via_promotion(&original, 2, 2, 5, 6).is_err());
    }
}
