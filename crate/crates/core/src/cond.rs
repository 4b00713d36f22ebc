//! Cyclic loop conditions: implication, equivalence, and decomposition into
//! prime conditions.

use std::fmt;

use crate::arith::{factorize, is_prime};
use crate::cycset::CycleSet;
use crate::{Error, Limits, Result};

/// The cyclic loop condition induced by a set of cycle lengths.
///
/// Trivial iff the carrier contains 1 (the associated digraph has a loop).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Condition {
    carrier: CycleSet,
}

impl Condition {
    pub fn new(carrier: CycleSet) -> Self {
        Condition { carrier }
    }

    pub fn carrier(&self) -> &CycleSet {
        &self.carrier
    }

    pub fn is_trivial(&self) -> bool {
        self.carrier.contains(1)
    }

    /// Single implication: holds iff every carrier element of `self` has,
    /// in `other`'s carrier, an element all of whose prime factors divide it.
    ///
    /// This removes the unbounded exponent from the "`b` divides a power of
    /// `a`" criterion: such a power exists iff every prime of `b` divides `a`.
    pub fn implies(&self, other: &Condition) -> bool {
        if other.is_trivial() {
            return true;
        }
        if self.is_trivial() {
            return false;
        }
        self.carrier.lengths().iter().all(|&a| {
            other
                .carrier
                .lengths()
                .iter()
                .any(|&b| factorize(b).iter().all(|&(p, _)| a % p == 0))
        })
    }

    pub fn equivalent(&self, other: &Condition) -> bool {
        self.implies(other) && other.implies(self)
    }

    /// Decompose into the antichain of strongest prime conditions equivalent
    /// to this one: the inclusion-minimal prime parts of the images `C ÷ c`
    /// over all `c` maximal for the carrier.
    pub fn decompose(&self, limits: &Limits) -> Result<Vec<PrimeSet>> {
        if self.is_trivial() {
            return Err(Error::TrivialCondition);
        }
        let images = maximal_images(&self.carrier, limits)?;
        let sets: Vec<PrimeSet> = images.iter().map(|(_, img)| prime_part(img)).collect();
        Ok(minimal_antichain(sets))
    }

    /// The smallest bullet-power exponent `k` with `C^{•k} -> D`, when the
    /// implication holds at all.
    pub fn bullet_witness_bound(&self, other: &Condition) -> Result<Option<u64>> {
        if !self.implies(other) {
            return Ok(None);
        }
        let max_exp: u32 = other
            .carrier
            .lengths()
            .iter()
            .flat_map(|&b| factorize(b).into_iter().map(|(_, e)| e))
            .max()
            .unwrap_or(0);
        let bound = (self.carrier.len() as u64) * u64::from(max_exp.max(1));
        let mut power = self.carrier.clone();
        for k in 1..=bound {
            if power.maps_into(other.carrier()) {
                return Ok(Some(k));
            }
            power = power.bullet(&self.carrier)?;
        }
        // Reachable only for trivial `other` with nontrivial `self` carriers
        // that stabilize early; otherwise a witness always exists within
        // |C| times the largest prime exponent of D.
        Ok(Some(bound))
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.carrier)
    }
}

/// Set implication: `gamma => other` iff every prime condition in the
/// decomposition of `other` is implied by a single member of `gamma`.
pub fn set_implies(gamma: &[Condition], other: &Condition, limits: &Limits) -> Result<bool> {
    if other.is_trivial() {
        return Ok(true);
    }
    for q in other.decompose(limits)? {
        let q = q.to_condition();
        if !gamma.iter().any(|s| s.implies(&q)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A nonempty set of distinct primes: a prime cyclic loop condition, equally
/// a disjoint union of prime cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        primes.sort_unstable();
        primes.dedup();
        if primes.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeSet { primes })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn is_subset_of(&self, other: &PrimeSet) -> bool {
        self.primes.iter().all(|p| other.primes.contains(p))
    }

    /// Prime implication collapses to inclusion: `Σ_P => Σ_Q` iff `P ⊆ Q`.
    pub fn implies(&self, other: &PrimeSet) -> bool {
        self.is_subset_of(other)
    }

    pub fn to_cycle_set(&self) -> CycleSet {
        CycleSet::new(self.primes.iter().copied()).expect("nonempty")
    }

    pub fn to_condition(&self) -> Condition {
        Condition::new(self.to_cycle_set())
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.to_cycle_set())
    }
}

/// One representative `c` per distinct image `C ÷ c` over all `c` maximal for
/// `C`, with the images; candidates range over the divisors of `lcm(C)`.
///
/// `c` is maximal for `C` when `1 ∉ C ÷ c` while dividing any further by a
/// prime of `lcm(C ÷ c)` introduces 1. Checking prime `d` only suffices:
/// `a ÷ (c·d) = (a ÷ (c·p)) ÷ (d/p)`, so the first failure is at a prime.
pub fn maximal_images(c_set: &CycleSet, limits: &Limits) -> Result<Vec<(u64, CycleSet)>> {
    let l = c_set.lcm()?;
    let mut out: Vec<(u64, CycleSet)> = Vec::new();
    for c in crate::arith::divisors(l, limits)? {
        let image = c_set.dotdiv(c);
        if image.contains(1) {
            continue;
        }
        let image_lcm = image.lcm()?;
        let maximal = factorize(image_lcm)
            .iter()
            .all(|&(d, _)| c_set.dotdiv(c * d).contains(1));
        if maximal && !out.iter().any(|(_, img)| *img == image) {
            out.push((c, image));
        }
    }
    Ok(out)
}

/// The `c` values of [`maximal_images`].
pub fn maximal_cs(c_set: &CycleSet, limits: &Limits) -> Result<Vec<u64>> {
    Ok(maximal_images(c_set, limits)?
        .into_iter()
        .map(|(c, _)| c)
        .collect())
}

/// The prime elements of an image set `C ÷ c` for maximal `c`; every element
/// of such an image is a multiple of a prime element, so the prime part
/// carries an equivalent condition.
pub(crate) fn prime_part(image: &CycleSet) -> PrimeSet {
    PrimeSet::new(image.lengths().iter().copied().filter(|&a| is_prime(a)))
        .expect("maximal image contains a prime")
}

/// Keep the inclusion-minimal sets.
pub(crate) fn minimal_antichain(mut sets: Vec<PrimeSet>) -> Vec<PrimeSet> {
    sets.sort();
    sets.dedup();
    let kept: Vec<PrimeSet> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| *t != **s && t.is_subset_of(s)))
        .cloned()
        .collect();
    kept
}

/// Keep the inclusion-maximal sets.
pub(crate) fn maximal_antichain(mut sets: Vec<PrimeSet>) -> Vec<PrimeSet> {
    sets.sort();
    sets.dedup();
    let kept: Vec<PrimeSet> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| *t != **s && s.is_subset_of(t)))
        .cloned()
        .collect();
    kept
}
