//! Batch verification: the model-agreement sweep over every shape up to a
//! given size, and the property suites for bijections, promotion, crystal
//! operators, rectification and the promotion formulas for `Res`.
//!
//! Every check is tallied in a named suite. A suite marked informational is
//! reported but never makes a report fail.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::aii::{lr_aii, staircase, LrDecomposition};
use crate::character::{branching_rule, reassembled_dimension};
use crate::crystal::{is_ghat_dominant, wt_gl, wt_ghat, wt_k, Crystal, Rank, SpWeight, Tensor};
use crate::enumerate::{enumerate_ssyt, enumerate_symplectic, ssyt_count};
use crate::error::{Error, Result};
use crate::insertion::{column_star, insertion_tableau};
use crate::jdt::{rect_with, res, restrict, SkewTableau};
use crate::promotion::{inverse, phi, pr, pr_inv, psi, res_via_promotion, Bijection};
use crate::shape::{enumerate_partitions, is_vertical_strip, Partition};
use crate::tableau::Tableau;
use crate::word::Word;

/// Pass/fail tally of one named family of checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    /// Reported only; never affects the overall verdict.
    pub informational: bool,
    pub first_failure: Option<String>,
}

impl SuiteSummary {
    fn new(name: &str, informational: bool) -> Self {
        SuiteSummary { name: name.to_string(), checked: 0, failures: 0, informational, first_failure: None }
    }

    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn absorb(&mut self, other: SuiteSummary) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

/// An ordered collection of suites, merged by name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Suites(Vec<SuiteSummary>);

impl Suites {
    fn suite(&mut self, name: &str) -> &mut SuiteSummary {
        self.suite_with(name, false)
    }

    fn informational(&mut self, name: &str) -> &mut SuiteSummary {
        self.suite_with(name, true)
    }

    fn suite_with(&mut self, name: &str, informational: bool) -> &mut SuiteSummary {
        let idx = match self.0.iter().position(|s| s.name == name) {
            Some(i) => i,
            None => {
                self.0.push(SuiteSummary::new(name, informational));
                self.0.len() - 1
            }
        };
        &mut self.0[idx]
    }

    fn absorb(&mut self, other: Suites) {
        for s in other.0 {
            let informational = s.informational;
            self.suite_with(&s.name.clone(), informational).absorb(s);
        }
    }

    pub fn get(&self, name: &str) -> Option<&SuiteSummary> {
        self.0.iter().find(|s| s.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &SuiteSummary> {
        self.0.iter()
    }

    /// True iff every non-informational suite passed.
    pub fn pass(&self) -> bool {
        self.0.iter().all(|s| s.informational || s.pass())
    }

    pub fn into_vec(self) -> Vec<SuiteSummary> {
        self.0
    }
}

impl Serialize for Suites {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// The five numbers attached to one `(λ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub lambda: Partition,
    pub mu: Partition,
    /// `#{T ĝ-dominant : wt_ĝ(T) = μ}`.
    pub ghat_dominant: u64,
    /// `#{T k-highest : wt_k(T) = μ}`.
    pub k_highest: u64,
    /// `#{T k-lowest : P^AII(T) has shape μ}`, i.e. `wt_k(T) = −μ`.
    pub k_lowest: u64,
    /// Number of distinct recording tableaux `Q^AII(T)` over the `T` whose
    /// `P^AII(T)` has shape `μ`.
    pub recording: u64,
    /// Multiplicity of the symplectic irreducible `μ` in the restriction.
    pub oracle: u64,
    pub pass: bool,
}

impl CountRow {
    fn finish(mut self) -> Self {
        let v = [self.ghat_dominant, self.k_highest, self.k_lowest, self.recording, self.oracle];
        self.pass = v.iter().all(|&x| x == v[0]);
        self
    }
}

/// `Σ_μ m_μ · #SpT(μ)` against `#SST(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub lambda: Partition,
    pub sst_count: u64,
    pub reassembled: u64,
    pub pass: bool,
}

/// Everything computed for a single shape `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub rows: Vec<CountRow>,
    pub dimension: DimensionRow,
    pub suites: Suites,
}

/// Which families of checks the per-shape sweep runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub bijections: bool,
    pub promotion: bool,
    pub crystal: bool,
    pub rectification: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { bijections: true, promotion: true, crystal: true, rectification: true }
    }
}

fn neg(w: &SpWeight) -> SpWeight {
    SpWeight(w.0.iter().map(|v| -v).collect())
}

/// Runs every check for a single shape `λ`.
pub fn sweep_shape(lambda: &Partition, rank: Rank, options: SweepOptions) -> Result<ShapeReport> {
    let m = rank.m();
    if lambda.length() > m as usize {
        return Err(Error::InvalidInterval(lambda.parts().to_vec()));
    }
    let tableaux = enumerate_ssyt(lambda, m);
    let mut suites = Suites::default();
    let mut ghat: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut highest: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut lowest: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut classes: BTreeMap<Partition, Vec<_>> = BTreeMap::new();
    let mut dominant = Vec::new();
    let mut highest_set = BTreeSet::new();
    let mut lowest_set = BTreeSet::new();

    for t in &tableaux {
        let (p, q) = lr_aii(t)?;
        let mu = p.require_shape()?;
        let is_highest = mu.length() <= rank.n() && p == staircase(&mu, rank, true)?;
        let is_lowest = mu.length() <= rank.n() && p == staircase(&mu, rank, false)?;
        let wk = wt_k(t, rank);
        if is_highest {
            let law = wk == SpWeight::from_partition(&mu, rank.n());
            suites.suite("highest-weight-law").check(law, || format!("{t}: wt_k = {wk}, P^AII shape {mu}"));
            if let Some(w) = wk.to_partition() {
                *highest.entry(w).or_default() += 1;
            }
            highest_set.insert(t.clone());
        }
        if is_lowest {
            let law = neg(&wk) == SpWeight::from_partition(&mu, rank.n());
            suites.suite("lowest-weight-law").check(law, || format!("{t}: wt_k = {wk}, P^AII shape {mu}"));
            *lowest.entry(mu.clone()).or_default() += 1;
            lowest_set.insert(t.clone());
        }
        if is_ghat_dominant(t, rank)? {
            let w = wt_ghat(t, rank);
            let mu = w.to_partition().expect("a dominant path ends at a dominant weight");
            *ghat.entry(mu).or_default() += 1;
            dominant.push(t.clone());
        }
        classes.entry(mu).or_default().push((p, q));
        if options.promotion {
            check_promotion(t, rank, &mut suites)?;
        }
        if options.crystal {
            check_crystal(t, rank, &mut suites);
        }
        if options.rectification {
            check_rectification(t, rank, &mut suites)?;
        }
    }

    let decomposition = LrDecomposition { lambda: lambda.clone(), rank, classes };
    let verdict = decomposition.verify();
    suites.suite("lr-bijection").check(verdict.is_ok(), || format!("λ = {lambda}: {}", verdict.clone().unwrap_err()));
    let recording: BTreeMap<Partition, u64> =
        decomposition.summary().into_iter().map(|s| (s.mu, s.recording_count as u64)).collect();

    if options.bijections {
        check_bijections(&dominant, &highest_set, &lowest_set, lambda, rank, &mut suites)?;
    }

    let (oracle, reassembled) = match branching_rule(lambda, rank) {
        Ok(rule) => {
            let total = reassembled_dimension(&rule, rank);
            suites.suite("oracle-decomposition").check(true, String::new);
            (rule, total)
        }
        Err(e) => {
            suites.suite("oracle-decomposition").check(false, || format!("λ = {lambda}: {e}"));
            (BTreeMap::new(), 0)
        }
    };
    let sst_count = tableaux.len() as u64;
    let dimension = DimensionRow { lambda: lambda.clone(), sst_count, reassembled, pass: sst_count == reassembled };

    let mus: BTreeSet<&Partition> =
        ghat.keys().chain(highest.keys()).chain(lowest.keys()).chain(oracle.keys()).chain(recording.keys()).collect();
    let count = |map: &BTreeMap<Partition, u64>, mu: &Partition| map.get(mu).copied().unwrap_or(0);
    let rows = mus
        .into_iter()
        .filter(|mu| mu.length() <= rank.n())
        .map(|mu| {
            CountRow {
                lambda: lambda.clone(),
                mu: mu.clone(),
                ghat_dominant: count(&ghat, mu),
                k_highest: count(&highest, mu),
                k_lowest: count(&lowest, mu),
                recording: count(&recording, mu),
                oracle: count(&oracle, mu),
                pass: false,
            }
            .finish()
        })
        .collect();
    Ok(ShapeReport { rows, dimension, suites })
}

fn check_bijections(
    dominant: &[Tableau],
    highest: &BTreeSet<Tableau>,
    lowest: &BTreeSet<Tableau>,
    lambda: &Partition,
    rank: Rank,
    suites: &mut Suites,
) -> Result<()> {
    for (which, targets, name) in [(Bijection::Phi, highest, "phi"), (Bijection::Psi, lowest, "psi")] {
        let mut image = BTreeSet::new();
        for t in dominant {
            let u = match which {
                Bijection::Phi => phi(t, rank)?,
                Bijection::Psi => psi(t, rank)?,
            };
            let back = inverse(which, &u, rank)?;
            suites.suite(&format!("{name}-inverse")).check(back == *t, || format!("{t} ↦ {u} ↦ {back}"));
            let (wg, wk) = (wt_ghat(t, rank), wt_k(&u, rank));
            match which {
                Bijection::Phi => {
                    suites.suite("phi-weight-transport").check(wg == wk, || format!("{t} ↦ {u}: wt_ĝ = {wg}, wt_k = {wk}"));
                }
                Bijection::Psi => {
                    suites
                        .informational("psi-weight-transport-literal")
                        .check(wg == wk, || format!("{t} ↦ {u}: wt_ĝ = {wg}, wt_k = {wk}"));
                    suites
                        .suite("psi-weight-transport-w0")
                        .check(wg == neg(&wk), || format!("{t} ↦ {u}: wt_ĝ = {wg}, −wt_k = {}", neg(&wk)));
                }
            }
            image.insert(u);
        }
        suites
            .suite(&format!("{name}-injective"))
            .check(image.len() == dominant.len(), || format!("λ = {lambda}: {} tableaux, {} images", dominant.len(), image.len()));
        let onto = image == *targets;
        suites.suite(&format!("{name}-image")).check(onto, || {
            let stray = image.symmetric_difference(targets).next().map(|t| t.to_string()).unwrap_or_default();
            format!("λ = {lambda}: image differs from the target set at {stray}")
        });
    }
    Ok(())
}

/// Round trips of every `pr_{a,b}` and the three promotion relations.
pub fn check_promotion(t: &Tableau, rank: Rank, suites: &mut Suites) -> Result<()> {
    let m = rank.m();
    for a in 1..=m {
        for b in a + 1..=m {
            let up = pr(t, a, b)?;
            let down = pr_inv(t, a, b)?;
            let ok = up.is_semistandard_within(m)
                && down.is_semistandard_within(m)
                && up.shape() == t.shape()
                && pr_inv(&up, a, b)? == *t
                && pr(&down, a, b)? == *t;
            suites.suite("promotion-roundtrip").check(ok, || format!("{t} with pr_{{{a},{b}}}"));
        }
    }
    for a in 1..m {
        let twice = pr(&pr(t, a, a + 1)?, a, a + 1)?;
        suites.suite("promotion-involution").check(twice == *t, || format!("pr_{{{a},{}}}² {t} = {twice}", a + 1));
    }
    for a in 1..=m {
        for b in a + 1..=m {
            for c in b + 2..=m {
                for d in c + 1..=m {
                    let left = pr(&pr(t, c, d)?, a, b)?;
                    let right = pr(&pr(t, a, b)?, c, d)?;
                    suites
                        .suite("promotion-commutation")
                        .check(left == right, || format!("pr_{{{a},{b}}}, pr_{{{c},{d}}} on {t}: {left} ≠ {right}"));
                }
            }
            for c in b + 1..=m {
                let composite = pr(&pr(t, b, c)?, a, b)?;
                let direct = pr(t, a, c)?;
                suites
                    .suite("promotion-composition")
                    .check(composite == direct, || format!("pr_{{{a},{b}}}∘pr_{{{b},{c}}} {t} = {composite} ≠ {direct}"));
            }
        }
    }
    Ok(())
}

/// Seminormality, weight changes and closure of `SST` under `ẽ_i`, `f̃_i`.
pub fn check_crystal(t: &Tableau, rank: Rank, suites: &mut Suites) {
    let m = rank.m();
    let wt = wt_gl(t, rank);
    for i in 1..m as usize {
        let (eps, ph) = (t.eps(i), t.phi(i));
        let pairing = wt[i - 1] - wt[i];
        suites
            .suite("crystal-seminormal")
            .check(ph as i32 - eps as i32 == pairing, || format!("{t}, i = {i}: φ − ε = {} but ⟨wt, h⟩ = {pairing}", ph as i32 - eps as i32));
        suites.suite("crystal-seminormal").check(t.e_max(i).eps(i) == 0 && t.f_max(i).phi(i) == 0, || {
            format!("{t}, i = {i}: string ends are not extremal")
        });
        for (raise, next) in [(true, t.e(i)), (false, t.f(i))] {
            let expected = if raise { eps } else { ph };
            suites
                .suite("crystal-seminormal")
                .check(next.is_some() == (expected > 0), || format!("{t}, i = {i}: operator defined ≠ string length > 0"));
            let Some(u) = next else { continue };
            let closed = u.is_semistandard_within(m) && u.shape() == t.shape();
            suites.suite("crystal-closure").check(closed, || format!("{t}, i = {i} → {u}"));
            let back = if raise { u.f(i) } else { u.e(i) };
            let strings = if raise { (u.eps(i) + 1, u.phi(i)) == (eps, ph + 1) } else { (u.eps(i), u.phi(i) + 1) == (eps + 1, ph) };
            suites
                .suite("crystal-seminormal")
                .check(back.as_ref() == Some(t) && strings, || format!("{t}, i = {i}: {u} does not step back"));
            let mut shifted = wt.clone();
            let s = if raise { 1 } else { -1 };
            shifted[i - 1] += s;
            shifted[i] -= s;
            let moved = wt_gl(&u, rank);
            suites.suite("crystal-weight").check(moved == shifted, || format!("{t}, i = {i} → {u}: weight {moved:?}"));
        }
    }
}

/// Rectification of every restriction of `T`: independent of the order of
/// inside corners, and inside the Knuth class of the restricted reading
/// word. Also checks the promotion formula for `Res` wherever it applies.
pub fn check_rectification(t: &Tableau, rank: Rank, suites: &mut Suites) -> Result<()> {
    let m = rank.m();
    for a in 1..=m {
        for b in a..=m {
            for c in b..=m {
                for d in c..=m {
                    check_restriction(t, [a, b, c, d], suites)?;
                }
            }
        }
    }
    Ok(())
}

fn skew_reading_word(skew: &SkewTableau) -> Word {
    let mut cells: Vec<_> = skew.entries.iter().collect();
    cells.sort_by_key(|&(c, _)| (std::cmp::Reverse(c.y), c.x));
    Word(cells.into_iter().map(|(_, v)| v).collect())
}

fn check_restriction(t: &Tableau, [a, b, c, d]: [u32; 4], suites: &mut Suites) -> Result<()> {
    let below = t.iter().any(|(_, v)| v < a);
    let inner = t.iter().any(|(_, v)| (a..=b).contains(&v));
    let band = t.iter().any(|(_, v)| b < v && v < c);
    // Holes both below `a` and inside the band leave a support that is not
    // of the form (λ¹ ∖ λ²) ⊔ λ³.
    if below && band {
        return Ok(());
    }
    let at = || format!("{t} on [{a},{b}]∪[{c},{d}]");
    let skew = restrict(t, a, b, c, d)?;
    let first = rect_with(&skew, |_| 0)?;
    let last = rect_with(&skew, |cs| cs.len() - 1)?;
    let mut flip = false;
    let alternating = rect_with(&skew, |cs| {
        flip = !flip;
        if flip { cs.len() - 1 } else { 0 }
    })?;
    let knuth = insertion_tableau(&skew_reading_word(&skew));
    let agree = first == last && first == alternating;
    let in_class = first.is_semistandard() && first.shape().is_some() && knuth == first;
    // With kept boxes inside the hole band the result may depend on the
    // order of the slides; those supports are tallied separately.
    let skew_shaped = !(inner && band);
    let (order_suite, knuth_suite) = if skew_shaped {
        ("rect-order-independence", "rect-knuth-class")
    } else {
        ("rect-order-independence-inner-boxes", "rect-knuth-class-inner-boxes")
    };
    suites
        .suite_with(order_suite, !skew_shaped)
        .check(agree, || format!("{}: {first} / {last} / {alternating}", at()));
    suites.suite_with(knuth_suite, !skew_shaped).check(in_class, || format!("{}: {first} vs {knuth}", at()));
    if !below {
        let direct = res(t, a, b, c, d)?;
        let via = res_via_promotion(t, a, b, c, d)?;
        suites.suite("res-via-promotion").check(via == direct, || format!("{}: {via} ≠ {direct}", at()));
    }
    Ok(())
}

/// The two local identities between promotion and `Res` used to relate
/// neighbouring ranks.
pub fn check_local_identities(t: &Tableau, rank: Rank, suites: &mut Suites) -> Result<()> {
    let bar = |k: u32| rank.bar(k);
    for k in 1..rank.n() as u32 {
        if t.min_entry().is_some_and(|v| v < k) {
            continue;
        }
        let lhs = pr(&pr(t, k + 2, bar(k + 1))?, k + 3, bar(k))?.filter_entries(|v| (k..=k + 3).contains(&v));
        let rhs = res(t, k, k + 1, bar(k + 1), bar(k))?
            .map_entries(|v| if v == bar(k + 1) { k + 2 } else if v == bar(k) { k + 3 } else { v });
        suites.suite("promotion-restriction-local").check(lhs == rhs, || format!("{t}, k = {k}: {lhs} ≠ {rhs}"));
    }
    let lhs = res(&pr_inv(t, 2, bar(1))?, 2, bar(2), bar(2), bar(2))?;
    let rhs = res(t, 3, bar(1), bar(1), bar(1))?.map_entries(|v| v - 1);
    suites.suite("promotion-restriction-shift").check(lhs == rhs, || format!("{t}: {lhs} ≠ {rhs}"));
    Ok(())
}

/// The Pieri law for `C ⊗ S ↦ C * S`: the new boxes form a vertical strip of
/// size `ℓ(C)`, the map is a bijection onto the union of the `SST(μ)` over
/// such strips, and it commutes with every `ẽ_i`, `f̃_i`.
pub fn check_pieri(lambda: &Partition, column_length: usize, rank: Rank, suites: &mut Suites) -> Result<()> {
    let m = rank.m();
    let columns = enumerate_ssyt(&Partition::column(column_length), m);
    let targets: Vec<Partition> = vertical_extensions(lambda, column_length, m as usize);
    let expected: u64 = targets.iter().map(|mu| ssyt_count(mu, m)).sum();
    let mut images = BTreeSet::new();
    let mut total = 0u64;
    for c in &columns {
        for s in enumerate_ssyt(lambda, m) {
            let product = column_star(c, &s)?;
            total += 1;
            let shape = product.require_shape()?;
            suites.suite("pieri-shape").check(
                is_vertical_strip(&shape, lambda) && shape.size() == lambda.size() + column_length as u32,
                || format!("{c} * {s} = {product} has shape {shape}"),
            );
            images.insert(product.clone());
            let pair = Tensor(c.clone(), s.clone());
            for i in 1..m as usize {
                for (raise, moved) in [(true, pair.e(i)), (false, pair.f(i))] {
                    let direct = if raise { product.e(i) } else { product.f(i) };
                    let through = moved.map(|Tensor(c2, s2)| column_star(&c2, &s2)).transpose()?;
                    suites
                        .suite("pieri-crystal")
                        .check(direct == through, || format!("{c} ⊗ {s}, i = {i}, raise = {raise}"));
                }
            }
        }
    }
    let bijective = images.len() as u64 == total && total == expected;
    suites.suite("pieri-bijection").check(bijective, || {
        format!("λ = {lambda}, ℓ(C) = {column_length}: {total} pairs, {} images, {expected} targets", images.len())
    });
    Ok(())
}

fn vertical_extensions(lambda: &Partition, l: usize, max_length: usize) -> Vec<Partition> {
    let rows = (lambda.length() + l).min(max_length);
    let mut out = Vec::new();
    for mask in 0u32..(1 << rows) {
        if mask.count_ones() as usize != l {
            continue;
        }
        let parts: Vec<u32> = (0..rows).map(|y| lambda.part(y + 1) + (mask >> y & 1)).collect();
        if let Ok(mu) = Partition::new(parts) {
            out.push(mu);
        }
    }
    out
}

/// A random semistandard tableau: the insertion tableau of a uniformly
/// random word of length at most `max_len` in `[lo, hi]`.
pub fn random_tableau<R: Rng>(rng: &mut R, lo: u32, hi: u32, max_len: usize) -> Tableau {
    let len = rng.gen_range(0..=max_len);
    insertion_tableau(&Word((0..len).map(|_| rng.gen_range(lo..=hi)).collect()))
}

/// Seeded randomized trials of every tableau-level suite.
pub fn random_suites(rank: Rank, trials: usize, max_len: usize, seed: u64) -> Result<Suites> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rank.m();
    let mut suites = Suites::default();
    for _ in 0..trials {
        let t = random_tableau(&mut rng, 1, m, max_len);
        check_promotion(&t, rank, &mut suites)?;
        check_crystal(&t, rank, &mut suites);
        let mut bounds = [0; 4].map(|_| rng.gen_range(1..=m));
        bounds.sort_unstable();
        check_restriction(&t, bounds, &mut suites)?;
        check_local_identities(&t, rank, &mut suites)?;
        // Tableaux with every entry at least k exercise the local identity
        // away from the bottom of the alphabet.
        let k = rng.gen_range(1..rank.n() as u32);
        let shifted = random_tableau(&mut rng, k, m, max_len);
        check_local_identities(&shifted, rank, &mut suites)?;
        let mut bounds = [0; 4].map(|_| rng.gen_range(k..=m));
        bounds.sort_unstable();
        check_restriction(&shifted, bounds, &mut suites)?;
        let column_length = rng.gen_range(1..=m as usize);
        let mut letters: Vec<u32> = (1..=m).collect();
        for i in (1..letters.len()).rev() {
            letters.swap(i, rng.gen_range(0..=i));
        }
        let mut column: Vec<u32> = letters[..column_length].to_vec();
        column.sort_unstable();
        check_pieri_pair(&Tableau::column(&column), &t, rank, &mut suites)?;
    }
    Ok(suites)
}

fn check_pieri_pair(c: &Tableau, s: &Tableau, rank: Rank, suites: &mut Suites) -> Result<()> {
    let product = column_star(c, s)?;
    let shape = product.require_shape()?;
    let inner = s.require_shape()?;
    suites
        .suite("pieri-shape")
        .check(is_vertical_strip(&shape, &inner) && shape.size() == inner.size() + c.len() as u32, || {
            format!("{c} * {s} = {product}")
        });
    let pair = Tensor(c.clone(), s.clone());
    for i in 1..rank.m() as usize {
        for (raise, moved) in [(true, pair.e(i)), (false, pair.f(i))] {
            let direct = if raise { product.e(i) } else { product.f(i) };
            let through = moved.map(|Tensor(c2, s2)| column_star(&c2, &s2)).transpose()?;
            suites.suite("pieri-crystal").check(direct == through, || format!("{c} ⊗ {s}, i = {i}, raise = {raise}"));
        }
    }
    Ok(())
}

/// Parameters of a full verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub rank: Rank,
    pub max_size: u32,
    /// Upper bound on the number of tableaux enumerated by the sweep.
    pub budget: Option<u64>,
    pub seed: u64,
    pub random_trials: usize,
    pub options: SweepOptions,
}

impl VerifyConfig {
    pub fn new(rank: Rank, max_size: u32) -> Self {
        VerifyConfig { rank, max_size, budget: None, seed: 0, random_trials: 200, options: SweepOptions::default() }
    }
}

/// The outcome of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub max_size: u32,
    pub shapes: usize,
    pub tableaux: u64,
    pub rows: Vec<CountRow>,
    pub dimension: Vec<DimensionRow>,
    pub suites: Suites,
    pub seed: u64,
    pub random_trials: usize,
    pub pass: bool,
}

impl VerificationReport {
    pub fn failing_rows(&self) -> impl Iterator<Item = &CountRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// Total number of tableaux the sweep would enumerate.
pub fn sweep_size(rank: Rank, max_size: u32) -> u64 {
    enumerate_partitions(max_size, rank.m() as usize).iter().map(|l| ssyt_count(l, rank.m())).sum()
}

/// Sweeps every `λ` with `ℓ(λ) ≤ 2n` and `|λ| ≤ max_size` in parallel,
/// merging the per-shape results in shape order, then runs the randomized
/// suites and the Pieri law on the small shapes.
pub fn verify(config: &VerifyConfig) -> Result<VerificationReport> {
    let rank = config.rank;
    let tableaux = sweep_size(rank, config.max_size);
    if let Some(budget) = config.budget {
        if tableaux > budget {
            return Err(Error::BudgetExceeded { needed: tableaux, budget });
        }
    }
    let lambdas = enumerate_partitions(config.max_size, rank.m() as usize);
    let per_shape: Vec<ShapeReport> =
        lambdas.par_iter().map(|l| sweep_shape(l, rank, config.options)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut dimension = Vec::new();
    let mut suites = Suites::default();
    for report in per_shape {
        rows.extend(report.rows);
        dimension.push(report.dimension);
        suites.absorb(report.suites);
    }
    if config.options.crystal {
        for lambda in enumerate_partitions(config.max_size.min(3), rank.m() as usize) {
            for l in 1..=2.min(rank.m() as usize) {
                check_pieri(&lambda, l, rank, &mut suites)?;
            }
        }
    }
    if config.random_trials > 0 {
        suites.absorb(random_suites(rank, config.random_trials, config.max_size.max(1) as usize + 2, config.seed)?);
    }
    let pass = rows.iter().all(|r| r.pass) && dimension.iter().all(|d| d.pass) && suites.pass();
    Ok(VerificationReport {
        n: rank.n(),
        max_size: config.max_size,
        shapes: lambdas.len(),
        tableaux,
        rows,
        dimension,
        suites,
        seed: config.seed,
        random_trials: config.random_trials,
        pass,
    })
}

/// Counts of symplectic tableaux per shape, for reports.
pub fn symplectic_count(mu: &Partition, rank: Rank) -> u64 {
    enumerate_symplectic(mu, rank.n()).len() as u64
}
