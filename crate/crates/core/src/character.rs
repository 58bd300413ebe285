//! Weight-multiset characters and the branching multiplicities they
//! determine, computed independently of the crystal and insertion
//! machinery.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::crystal::{wt_ghat, Rank, SpWeight};
use crate::enumerate::{enumerate_ssyt, enumerate_symplectic};
use crate::error::{Error, Result};
use crate::shape::Partition;
use crate::tableau::Tableau;

/// A finite formal sum of weights with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Character {
    terms: BTreeMap<SpWeight, u64>,
}

impl Character {
    pub fn new() -> Self {
        Character::default()
    }

    pub fn terms(&self) -> &BTreeMap<SpWeight, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, weight: &SpWeight) -> u64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities, i.e. the dimension.
    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn add(&mut self, weight: SpWeight, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(weight).or_default() += multiplicity;
        }
    }

    fn merge(mut self, other: Character) -> Character {
        for (w, m) in other.terms {
            self.add(w, m);
        }
        self
    }

    /// The image under the signed permutation sending coordinate `i` to
    /// coordinate `perm[i]` and multiplying it by `signs[i]`.
    pub fn act(&self, perm: &[usize], signs: &[i32]) -> Character {
        let mut out = Character::new();
        for (w, &m) in &self.terms {
            let mut image = vec![0; w.0.len()];
            for (i, &v) in w.0.iter().enumerate() {
                image[perm[i]] = signs[i] * v;
            }
            out.add(SpWeight(image), m);
        }
        out
    }
}

impl Serialize for Character {
    /// Sorted `[[weight…], multiplicity]` pairs.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, m) in &self.terms {
            seq.serialize_element(&(&w.0, m))?;
        }
        seq.end()
    }
}

fn character_of(tableaux: Vec<Tableau>, weight: impl Fn(&Tableau) -> SpWeight + Sync) -> Character {
    tableaux
        .into_par_iter()
        .fold(Character::new, |mut acc, t| {
            acc.add(weight(&t), 1);
            acc
        })
        .reduce(Character::new, Character::merge)
}

/// The `gl_{2n}`-character of `L(λ)` restricted to the symplectic torus:
/// each `T ∈ SST_{2n}(λ)` contributes its ĝ-weight.
pub fn restricted_gl_character(lambda: &Partition, rank: Rank) -> Character {
    if lambda.length() > 2 * rank.n() {
        return Character::new();
    }
    character_of(enumerate_ssyt(lambda, rank.m()), |t| wt_ghat(t, rank))
}

/// The weight of a symplectic (King) tableau: coordinate `i` is
/// `T[2i − 1] − T[2i]`.
pub fn king_weight(t: &Tableau, rank: Rank) -> SpWeight {
    SpWeight((1..=rank.n() as u32).map(|i| t.count_entry(2 * i - 1) as i32 - t.count_entry(2 * i) as i32).collect())
}

/// The character of the irreducible `sp_{2n}`-module of highest weight `μ`,
/// summed over King tableaux.
pub fn sp_character(mu: &Partition, rank: Rank) -> Character {
    if mu.length() > rank.n() {
        return Character::new();
    }
    character_of(enumerate_symplectic(mu, rank.n()), |t| king_weight(t, rank))
}

/// Writes `χ` as a nonnegative combination of irreducible symplectic
/// characters by repeatedly peeling off the lexicographically greatest
/// weight.
pub fn decompose(chi: &Character, rank: Rank) -> Result<BTreeMap<Partition, u64>> {
    let mut remaining: BTreeMap<SpWeight, i64> = chi.terms.iter().map(|(w, &m)| (w.clone(), m as i64)).collect();
    let mut cache: HashMap<Partition, Character> = HashMap::new();
    let mut out = BTreeMap::new();
    while let Some((top, &m)) = remaining.iter().next_back() {
        let Some(mu) = top.to_partition().filter(|mu| mu.length() <= rank.n()) else {
            return Err(Error::NonDecomposable(format!("leading weight {top} is not dominant")));
        };
        if m < 0 {
            return Err(Error::NonDecomposable(format!("weight {top} has negative coefficient {m}")));
        }
        let irreducible = cache.entry(mu.clone()).or_insert_with(|| sp_character(&mu, rank));
        for (w, &k) in &irreducible.terms {
            let slot = remaining.entry(w.clone()).or_default();
            *slot -= m * k as i64;
            if *slot < 0 {
                return Err(Error::NonDecomposable(format!("weight {w} would become negative while removing {mu}")));
            }
            if *slot == 0 {
                remaining.remove(w);
            }
        }
        out.insert(mu, m as u64);
    }
    Ok(out)
}

/// `[Res L(λ) : L̂(μ)]` for every `μ` that occurs.
pub fn branching_rule(lambda: &Partition, rank: Rank) -> Result<BTreeMap<Partition, u64>> {
    decompose(&restricted_gl_character(lambda, rank), rank)
}

/// `[Res L(λ) : L̂(μ)]`.
pub fn branching_multiplicity(lambda: &Partition, mu: &Partition, rank: Rank) -> Result<u64> {
    Ok(branching_rule(lambda, rank)?.get(mu).copied().unwrap_or(0))
}

/// `Σ_μ m_μ · dim L̂(μ)` for a branching rule; equals `dim L(λ)` exactly
/// when the decomposition is complete.
pub fn reassembled_dimension(rule: &BTreeMap<Partition, u64>, rank: Rank) -> u64 {
    rule.iter().map(|(mu, &m)| m * sp_character(mu, rank).mass()).sum()
}
