//! Satisfaction, fingerprints, pp-constructability comparison, canonical
//! representatives, lattice operations, and Hasse-diagram enumeration.

use crate::arith::lcm;
use crate::cond::{maximal_antichain, maximal_images, prime_part, Condition, PrimeSet};
use crate::cycset::CycleSet;
use crate::{Error, Limits, Result};

/// The finite complement of the set of prime conditions a union of cycles
/// satisfies, represented by its inclusion-maximal antichain.
///
/// The unsatisfied prime sets are exactly the nonempty subsets of the
/// antichain members; an empty antichain is the fingerprint of the loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NpcFingerprint {
    maximal_sets: Vec<PrimeSet>,
}

impl NpcFingerprint {
    pub fn maximal_sets(&self) -> &[PrimeSet] {
        &self.maximal_sets
    }

    pub fn is_empty(&self) -> bool {
        self.maximal_sets.is_empty()
    }

    /// Whether `p` lies in the downward closure, i.e. is unsatisfied.
    pub fn contains(&self, p: &PrimeSet) -> bool {
        self.maximal_sets.iter().any(|m| p.is_subset_of(m))
    }
}

/// Outcome of comparing two unions of cycles in the pp-constructability
/// order; `StrictlyBelow` means the left structure pp-constructs the right
/// one and not conversely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareResult {
    StrictlyBelow,
    StrictlyAbove,
    Equivalent,
    Incomparable,
}

/// Direct satisfaction test: the condition of `d` holds in the polymorphisms
/// of the union of cycles `c_set` iff for every map `h: D -> C` some
/// `a ∈ C` divides `lcm { h(b) ÷ b : b ∈ D }`.
pub fn satisfies(c_set: &CycleSet, d: &Condition, limits: &Limits) -> Result<bool> {
    Ok(satisfies_witness(c_set, d, limits)?.is_none())
}

/// Like [`satisfies`], but on failure returns a counterexample map as
/// `(b, h(b))` pairs.
pub fn satisfies_witness(
    c_set: &CycleSet,
    d: &Condition,
    limits: &Limits,
) -> Result<Option<Vec<(u64, u64)>>> {
    let cs = c_set.lengths();
    let ds = d.carrier().lengths();
    let total = (cs.len() as u128).checked_pow(ds.len() as u32);
    match total {
        Some(t) if t <= limits.max_maps as u128 => {}
        _ => {
            return Err(Error::ResourceExceeded {
                what: "satisfaction map enumeration",
                required: total.unwrap_or(u128::MAX),
                limit: limits.max_maps as u128,
                unit: "maps",
            })
        }
    }
    // odometer over all maps h: D -> C
    let mut h = vec![0usize; ds.len()];
    loop {
        let mut l = 1u64;
        for (i, &b) in ds.iter().enumerate() {
            l = lcm(l, crate::arith::dotdiv(cs[h[i]], b))?;
        }
        if !cs.iter().any(|&a| l.is_multiple_of(a)) {
            let witness = ds.iter().enumerate().map(|(i, &b)| (b, cs[h[i]])).collect();
            return Ok(Some(witness));
        }
        let mut i = 0;
        loop {
            if i == h.len() {
                return Ok(None);
            }
            h[i] += 1;
            if h[i] < cs.len() {
                break;
            }
            h[i] = 0;
            i += 1;
        }
    }
}

/// The fingerprint of unsatisfied prime conditions: the inclusion-maximal
/// prime parts of the images `C ÷ c` over all maximal `c`.
pub fn npc(c_set: &CycleSet, limits: &Limits) -> Result<NpcFingerprint> {
    let images = maximal_images(c_set, limits)?;
    let sets = images.iter().map(|(_, img)| prime_part(img)).collect();
    Ok(NpcFingerprint {
        maximal_sets: maximal_antichain(sets),
    })
}

fn below(b: &NpcFingerprint, c: &NpcFingerprint) -> bool {
    // B pp-constructs C iff every prime condition C fails, B fails too;
    // on antichains: each maximal set of C sits inside one of B's.
    c.maximal_sets
        .iter()
        .all(|s| b.maximal_sets.iter().any(|t| s.is_subset_of(t)))
}

pub fn compare(b: &CycleSet, c: &CycleSet, limits: &Limits) -> Result<CompareResult> {
    let fb = npc(b, limits)?;
    let fc = npc(c, limits)?;
    Ok(compare_fingerprints(&fb, &fc))
}

pub fn compare_fingerprints(fb: &NpcFingerprint, fc: &NpcFingerprint) -> CompareResult {
    match (below(fb, fc), below(fc, fb)) {
        (true, true) => CompareResult::Equivalent,
        (true, false) => CompareResult::StrictlyBelow,
        (false, true) => CompareResult::StrictlyAbove,
        (false, false) => CompareResult::Incomparable,
    }
}

/// Realize an antichain of prime sets as the canonical union of cycles whose
/// fingerprint it is: the divisibility-reduced product (pairwise lcms) of the
/// members viewed as unions of prime cycles; `{1}` for the empty antichain.
fn realize(sets: &[PrimeSet]) -> Result<CycleSet> {
    let mut out = CycleSet::loop_graph();
    for s in sets {
        out = out.times(&s.to_cycle_set())?;
    }
    Ok(out.reduce())
}

/// The canonical representative of the pp-constructability class: square-free
/// lengths, divisibility-reduced, `{1}` for the class of the loop.
pub fn canon(c_set: &CycleSet, limits: &Limits) -> Result<CycleSet> {
    realize(npc(c_set, limits)?.maximal_sets())
}

/// Meet in the strength order of conditions (stronger is higher): the
/// strongest condition implied by both, carried by the union of the two
/// carriers.
pub fn cond_meet(s: &Condition, t: &Condition) -> Result<Condition> {
    let mut lengths = s.carrier().lengths().to_vec();
    lengths.extend_from_slice(t.carrier().lengths());
    Ok(Condition::new(CycleSet::new(lengths)?))
}

/// Join in the strength order of conditions: the weakest condition implying
/// both, carried by the pairwise-product set, radical-normalized.
pub fn cond_join(s: &Condition, t: &Condition) -> Result<Condition> {
    Ok(Condition::new(s.carrier().bullet(t.carrier())?.rad()))
}

/// Meet in the pp-constructability lattice, returned canonically.
pub fn uc_meet(b: &CycleSet, c: &CycleSet, limits: &Limits) -> Result<CycleSet> {
    let mut sets = npc(b, limits)?.maximal_sets.clone();
    sets.extend(npc(c, limits)?.maximal_sets);
    realize(&maximal_antichain(sets))
}

/// Join in the pp-constructability lattice, returned canonically.
pub fn uc_join(b: &CycleSet, c: &CycleSet, limits: &Limits) -> Result<CycleSet> {
    let fb = npc(b, limits)?;
    let fc = npc(c, limits)?;
    // intersection of the two downward closures, generated by the nonempty
    // pairwise intersections of generators
    let mut sets = Vec::new();
    for s in fb.maximal_sets() {
        for t in fc.maximal_sets() {
            let common: Vec<u64> = s
                .primes()
                .iter()
                .copied()
                .filter(|p| t.primes().contains(p))
                .collect();
            if !common.is_empty() {
                sets.push(PrimeSet::new(common)?);
            }
        }
    }
    realize(&maximal_antichain(sets))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HasseKind {
    /// pp-constructability order of unions of cycles over the given primes.
    Unions,
    /// implication order of cyclic loop conditions over the given primes.
    Conditions,
}

/// A finite Hasse diagram; `covers` lists `(lower, upper)` index pairs and
/// nodes are sorted by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseGraph {
    pub kind: HasseKind,
    pub labels: Vec<String>,
    /// Canonical realization of each node as a set of cycle lengths.
    pub carriers: Vec<CycleSet>,
    pub covers: Vec<(usize, usize)>,
}

impl HasseGraph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    /// Whether node `i` lies weakly below node `j` (transitive closure of
    /// the cover relation).
    pub fn leq(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        let mut stack = vec![i];
        let mut seen = vec![false; self.node_count()];
        while let Some(v) = stack.pop() {
            for &(lo, hi) in &self.covers {
                if lo == v && !seen[hi] {
                    if hi == j {
                        return true;
                    }
                    seen[hi] = true;
                    stack.push(hi);
                }
            }
        }
        false
    }
}

/// Every node of both lattices over a fixed prime set is an antichain of
/// nonempty subsets of the primes; enumerate them all and take the
/// transitive reduction of the comparability relation.
pub fn enumerate_hasse(primes: &PrimeSet, kind: HasseKind) -> Result<HasseGraph> {
    let k = primes.primes().len();
    if k > 4 {
        return Err(Error::ResourceExceeded {
            what: "Hasse enumeration",
            required: k as u128,
            limit: 4,
            unit: "primes",
        });
    }
    // the nonempty subsets of the prime set
    let mut subsets: Vec<PrimeSet> = Vec::new();
    for mask in 1u32..(1 << k) {
        let chosen = primes
            .primes()
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        subsets.push(PrimeSet::new(chosen)?);
    }
    // antichains among them, as index masks over `subsets`
    let mut antichains: Vec<Vec<PrimeSet>> = Vec::new();
    'mask: for mask in 0u64..(1 << subsets.len()) {
        let members: Vec<usize> = (0..subsets.len()).filter(|i| mask >> i & 1 == 1).collect();
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                if subsets[i].is_subset_of(&subsets[j]) || subsets[j].is_subset_of(&subsets[i]) {
                    continue 'mask;
                }
            }
        }
        antichains.push(members.iter().map(|&i| subsets[i].clone()).collect());
    }

    // Unions: every antichain is a fingerprint, the empty one is the loop
    // (the top of pp-constructability). Conditions: nonempty antichains are
    // decompositions; the empty antichain slot is reused for the trivial
    // class, the bottom of the strength order.
    let mut nodes: Vec<(String, CycleSet, Vec<PrimeSet>)> = Vec::new();
    for a in antichains {
        let carrier = realize(&a)?;
        let label = match kind {
            HasseKind::Unions => format!("C{}", carrier),
            HasseKind::Conditions => format!("S{}", carrier),
        };
        nodes.push((label, carrier, a));
    }
    nodes.sort();

    let n = nodes.len();
    let is_below = |a: &[PrimeSet], b: &[PrimeSet]| -> bool {
        match kind {
            // A pp-constructs A': generators of A' dominated by A's
            HasseKind::Unions => b.iter().all(|s| a.iter().any(|t| s.is_subset_of(t))),
            // stronger conditions higher: X ≤ Y iff Y implies X, i.e. every
            // prime condition of X weakened from one of Y; the trivial class
            // (empty antichain) is implied by everything, hence the bottom
            HasseKind::Conditions => {
                a.is_empty() || (!b.is_empty() && a.iter().all(|q| b.iter().any(|p| p.is_subset_of(q))))
            }
        }
    };
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = is_below(&nodes[i].2, &nodes[j].2);
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            let direct = !(0..n).any(|m| m != i && m != j && leq[i][m] && leq[m][j]);
            if direct {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    Ok(HasseGraph {
        kind,
        labels: nodes.iter().map(|(l, _, _)| l.clone()).collect(),
        carriers: nodes.into_iter().map(|(_, c, _)| c).collect(),
        covers,
    })
}
