//! Explicit descriptions of ĝ-dominant, k-highest and k-lowest weight
//! tableaux in rank `n = 2` (alphabet `[1, 4]`).
//!
//! Besides the crystal-operator conditions, each class is described by an
//! explicit filling pattern. Rows are listed top-down and `λ = (λ₁,…,λ₄)` is
//! the shape:
//!
//! * ĝ-dominant: row 1 is all `1`, row 2 is `2…2 4…4`, row 3 is
//!   `3…3 4…4`, row 4 is all `4`, and the number of `4`s in row 3 is at most
//!   `λ₁ − λ₂`.
//! * k-highest: row 1 is `1^p 2^{λ₁−p}`, row 2 is `2^p 3^{λ₂−p}`, row 3 is
//!   `3^q 4^{λ₃−q}`, row 4 is all `4`; with `x = q − λ₄`, `y = min(p,λ₃) − q`,
//!   `w = λ₁ − λ₂`, `z = λ₂ − max(p,λ₃)` we need `x ≤ w` and `y ≤ z`.
//! * k-lowest: row 1 is all `1`, row 2 is `2…2 3…3 4…4` with `y` threes,
//!   row 3 is `3^{λ₄} 4^{λ₃−λ₄}`, row 4 is all `4`; with `x = λ₃ − λ₄` and
//!   `z = λ₁ − λ₂` we need `0 ≤ x − y ≤ z`.
//!
//! The crystal-operator condition for k-lowest tableaux is implemented as
//! stated, but it does not single out the k-lowest tableaux: `[1;2]` is
//! k-lowest (its `P^AII` is empty) while `f̃₂[1;2] = [1;3]`, and `[4]`
//! satisfies the condition although `P^AII([4]) = [4]`.

use crate::crystal::{Crystal, Rank};
use crate::error::{Error, Result};
use crate::tableau::Tableau;

fn require_rank_two(rank: Rank) -> Result<()> {
    if rank.n() != 2 {
        return Err(Error::RankMismatch { expected: 2, actual: rank.n() });
    }
    Ok(())
}

/// `f̃₁T = ẽ₂T = ẽ₃T = 0` and `φ₂(ẽ₁^max f̃₃^max T) ≤ φ₂(T)`.
pub fn n2_condition_khw(t: &Tableau, rank: Rank) -> Result<bool> {
    require_rank_two(rank)?;
    rank.check_entries(t)?;
    if t.f(1).is_some() || t.e(2).is_some() || t.e(3).is_some() {
        return Ok(false);
    }
    Ok(t.f_max(3).e_max(1).phi(2) <= t.phi(2))
}

/// `ẽ₁T = f̃₂T = f̃₃T = 0` and `φ₂(f̃₁^max ẽ₃^max T) ≥ φ₂(T)`.
pub fn n2_condition_klw(t: &Tableau, rank: Rank) -> Result<bool> {
    require_rank_two(rank)?;
    rank.check_entries(t)?;
    if t.e(1).is_some() || t.f(2).is_some() || t.f(3).is_some() {
        return Ok(false);
    }
    Ok(t.e_max(3).f_max(1).phi(2) >= t.phi(2))
}

/// Row `y` (1-based, top-down) as runs: `(value, length)` pairs.
fn runs(row: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &v in row {
        match out.last_mut() {
            Some((w, len)) if *w == v => *len += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Checks that `row` is `values[0]^{k₀} values[1]^{k₁} …` for some
/// nonnegative `kᵢ`, returning the `kᵢ`.
fn pattern(row: &[u32], values: &[u32]) -> Option<Vec<usize>> {
    let mut counts = vec![0usize; values.len()];
    let mut idx = 0;
    for (v, len) in runs(row) {
        while idx < values.len() && values[idx] != v {
            idx += 1;
        }
        if idx == values.len() {
            return None;
        }
        counts[idx] = len;
        idx += 1;
    }
    Some(counts)
}

struct Rows {
    rows: Vec<Vec<u32>>,
    lambda: [usize; 4],
}

fn rows_of(t: &Tableau, rank: Rank) -> Result<Option<Rows>> {
    require_rank_two(rank)?;
    rank.check_entries(t)?;
    let shape = t.require_shape()?;
    if !t.is_semistandard() || shape.length() > 4 {
        return Ok(None);
    }
    let mut rows = t.rows();
    rows.resize(4, Vec::new());
    let lambda = [0, 1, 2, 3].map(|i| rows[i].len());
    Ok(Some(Rows { rows, lambda }))
}

/// Membership in the explicit ĝ-dominant family.
pub fn in_ghat_dominant_family(t: &Tableau, rank: Rank) -> Result<bool> {
    let Some(Rows { rows, lambda }) = rows_of(t, rank)? else {
        return Ok(false);
    };
    let shapes = (
        pattern(&rows[0], &[1]),
        pattern(&rows[1], &[2, 4]),
        pattern(&rows[2], &[3, 4]),
        pattern(&rows[3], &[4]),
    );
    let (Some(_), Some(_), Some(row3), Some(_)) = shapes else {
        return Ok(false);
    };
    let x = row3[1];
    let y = lambda[0] - lambda[1];
    Ok(x <= y)
}

/// Membership in the explicit k-highest family.
pub fn in_k_highest_family(t: &Tableau, rank: Rank) -> Result<bool> {
    let Some(Rows { rows, lambda }) = rows_of(t, rank)? else {
        return Ok(false);
    };
    let shapes = (
        pattern(&rows[0], &[1, 2]),
        pattern(&rows[1], &[2, 3]),
        pattern(&rows[2], &[3, 4]),
        pattern(&rows[3], &[4]),
    );
    let (Some(row1), Some(row2), Some(row3), Some(_)) = shapes else {
        return Ok(false);
    };
    let p = row1[0];
    if row2[0] != p.min(lambda[1]) || p > lambda[1] {
        return Ok(false);
    }
    let q = row3[0] as i64;
    let [l1, l2, l3, l4] = lambda.map(|v| v as i64);
    let p = p as i64;
    let x = q - l4;
    let y = p.min(l3) - q;
    let w = l1 - l2;
    let z = l2 - p.max(l3);
    Ok(x >= 0 && y >= 0 && x <= w && y <= z)
}

/// Membership in the explicit k-lowest family.
pub fn in_k_lowest_family(t: &Tableau, rank: Rank) -> Result<bool> {
    let Some(Rows { rows, lambda }) = rows_of(t, rank)? else {
        return Ok(false);
    };
    let shapes = (
        pattern(&rows[0], &[1]),
        pattern(&rows[1], &[2, 3, 4]),
        pattern(&rows[2], &[3, 4]),
        pattern(&rows[3], &[4]),
    );
    let (Some(_), Some(row2), Some(row3), Some(_)) = shapes else {
        return Ok(false);
    };
    if row3[0] != lambda[3] {
        return Ok(false);
    }
    let [l1, l2, l3, l4] = lambda.map(|v| v as i64);
    let x = l3 - l4;
    let y = row2[1] as i64;
    let z = l1 - l2;
    Ok(0 <= x - y && x - y <= z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aii::{is_k_highest, is_k_lowest};
    use crate::crystal::is_ghat_dominant;
    use crate::enumerate::enumerate_ssyt;
    use crate::shape::enumerate_partitions;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn r2() -> Rank {
        Rank::new(2).unwrap()
    }

    #[test]
    fn examples() {
        assert!(n2_condition_khw(&Tableau::new(), r2()).unwrap());
        assert!(n2_condition_klw(&Tableau::new(), r2()).unwrap());
        assert!(n2_condition_khw(&t("1,2;2,3;4"), r2()).unwrap());
        assert!(in_k_highest_family(&t("1,2;2,3;4"), r2()).unwrap());
        assert!(n2_condition_khw(&t("1,2,2,2;2,3,3;3,4"), r2()).unwrap());
        assert!(in_k_highest_family(&t("1,2,2,2;2,3,3;3,4"), r2()).unwrap());
        assert_eq!(
            n2_condition_khw(&t("1"), Rank::new(3).unwrap()),
            Err(Error::RankMismatch { expected: 2, actual: 3 })
        );
    }

    #[test]
    fn lowest_condition_is_evaluated_as_stated() {
        assert!(n2_condition_klw(&t("1"), r2()).unwrap());
        assert!(n2_condition_klw(&t("4"), r2()).unwrap());
        assert!(!n2_condition_klw(&t("1;2"), r2()).unwrap());
        assert!(is_k_lowest(&t("1;2"), r2()).unwrap());
        assert!(!is_k_lowest(&t("4"), r2()).unwrap());
    }

    #[test]
    fn lowest_family_examples() {
        for s in ["1", "1;2", "1;4", "1,1;4,4", "1,1,1;2,3;4", "1,1,1;3,4;4", "1,1,1;2,3,4;3,4;4"] {
            assert!(in_k_lowest_family(&t(s), r2()).unwrap(), "{s}");
        }
        for s in ["4", "1;3", "1,1;3,3", "1,1,1;3,3;4", "1,1,1;2,2,2;3,4;4"] {
            assert!(!in_k_lowest_family(&t(s), r2()).unwrap(), "{s}");
        }
    }

    #[test]
    fn conditions_agree_with_algorithms_on_small_shapes() {
        for lambda in enumerate_partitions(6, 4) {
            for s in enumerate_ssyt(&lambda, 4) {
                let khw = is_k_highest(&s, r2()).unwrap();
                assert_eq!(n2_condition_khw(&s, r2()).unwrap(), khw, "{s}");
                assert_eq!(in_k_highest_family(&s, r2()).unwrap(), khw, "{s}");
                let klw = is_k_lowest(&s, r2()).unwrap();
                assert_eq!(in_k_lowest_family(&s, r2()).unwrap(), klw, "{s}");
                let dom = is_ghat_dominant(&s, r2()).unwrap();
                assert_eq!(in_ghat_dominant_family(&s, r2()).unwrap(), dom, "{s}");
            }
        }
    }
}
