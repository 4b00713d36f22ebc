//! Brute-force verification layer: explicit powers, orbit quotients,
//! homomorphism search, relational powers, and free structures.
//!
//! Everything here recomputes answers from first principles on explicit
//! digraphs, independent of the arithmetic shortcuts, so the two layers can
//! be played against each other.

use std::collections::BTreeMap;

use crate::cond::Condition;
use crate::cycset::CycleSet;
use crate::digraph::Digraph;
use crate::{Error, Limits, Result};

/// The successor permutation of the union-of-cycles digraph of `c_set`,
/// under the same vertex numbering as [`CycleSet::to_digraph`].
fn successor(c_set: &CycleSet) -> Vec<usize> {
    let mut succ = Vec::with_capacity(c_set.vertex_count() as usize);
    let mut offset = 0usize;
    for &a in c_set.lengths() {
        let a = a as usize;
        for k in 0..a {
            succ.push(offset + (k + 1) % a);
        }
        offset += a;
    }
    succ
}

fn checked_pow(base: u64, exp: u64, limit: u64, what: &'static str) -> Result<usize> {
    let mut total: u128 = 1;
    for _ in 0..exp {
        total = total.saturating_mul(base as u128);
        if total > limit as u128 {
            return Err(Error::ResourceExceeded {
                what,
                required: total,
                limit: limit as u128,
                unit: "vertices",
            });
        }
    }
    Ok(total as usize)
}

// tuple t: 𝔻-verts -> ℂ-verts encoded as sum of t[i]·nc^i
fn decode(mut idx: usize, nc: usize, nd: usize, out: &mut [usize]) {
    for slot in out.iter_mut().take(nd) {
        *slot = idx % nc;
        idx /= nc;
    }
}

fn encode(digits: &[usize], nc: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * nc + d)
}

/// The direct power of the digraph of `c_set` with exponent the vertex set
/// of `d_set`: vertices are all tuples, with the componentwise successor
/// edge `t -> t+1`. Labels are attached only while small enough to print.
pub fn power_digraph(c_set: &CycleSet, d_set: &CycleSet, limits: &Limits) -> Result<Digraph> {
    let nc = c_set.vertex_count() as usize;
    let nd = d_set.vertex_count() as usize;
    let total = checked_pow(nc as u64, nd as u64, limits.max_vertices, "power digraph")?;
    let succ = successor(c_set);
    let mut digits = vec![0usize; nd];
    let mut edges = Vec::with_capacity(total);
    for t in 0..total {
        decode(t, nc, nd, &mut digits);
        for d in digits.iter_mut() {
            *d = succ[*d];
        }
        edges.push((t, encode(&digits, nc)));
    }
    let g = Digraph::new(total, edges);
    if total <= 4096 {
        let base = c_set.to_digraph(limits)?;
        let mut labels = Vec::with_capacity(total);
        for t in 0..total {
            decode(t, nc, nd, &mut digits);
            let parts: Vec<&str> = digits.iter().map(|&d| base.label(d).unwrap()).collect();
            labels.push(format!("({})", parts.join(",")));
        }
        Ok(g.with_labels(labels))
    } else {
        Ok(g)
    }
}

/// The power digraph of `C^𝔻` quotiented by the cyclic group generated by
/// the coordinate shift of 𝔻.
#[derive(Debug, Clone)]
pub struct OrbitQuotient {
    base_vertex_count: usize,
    orbit_of: Vec<u32>,
    quotient: Digraph,
}

impl OrbitQuotient {
    pub fn base_vertex_count(&self) -> usize {
        self.base_vertex_count
    }

    pub fn orbit_of(&self, vertex: usize) -> usize {
        self.orbit_of[vertex] as usize
    }

    pub fn orbit_count(&self) -> usize {
        self.quotient.vertex_count()
    }

    pub fn quotient(&self) -> &Digraph {
        &self.quotient
    }
}

/// Quotient the tuples of `C^𝔻` by the coordinate shift `t ↦ t ∘ σ_D`; the
/// edge `orbit(t) -> orbit(t+1)` is well defined because the shift permutes
/// coordinates while `+1` acts on values, so the two actions commute.
pub fn shift_quotient(c_set: &CycleSet, d_set: &CycleSet, limits: &Limits) -> Result<OrbitQuotient> {
    let nc = c_set.vertex_count() as usize;
    let nd = d_set.vertex_count() as usize;
    let total = checked_pow(nc as u64, nd as u64, limits.max_vertices, "shift quotient")?;
    let succ_c = successor(c_set);
    let sigma_d = successor(d_set);

    let shift = |t: usize, digits: &mut Vec<usize>, shifted: &mut Vec<usize>| -> usize {
        decode(t, nc, nd, digits);
        for i in 0..nd {
            shifted[i] = digits[sigma_d[i]];
        }
        encode(shifted, nc)
    };

    const UNASSIGNED: u32 = u32::MAX;
    let mut orbit_of = vec![UNASSIGNED; total];
    let mut reps: Vec<usize> = Vec::new();
    let mut digits = vec![0usize; nd];
    let mut shifted = vec![0usize; nd];
    for start in 0..total {
        if orbit_of[start] != UNASSIGNED {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(start);
        let mut t = start;
        loop {
            orbit_of[t] = id;
            t = shift(t, &mut digits, &mut shifted);
            if t == start {
                break;
            }
        }
    }

    // `+1` acts on values and the shift on coordinates, so the whole orbit
    // of `rep` steps into the orbit of `rep + 1`: one edge per orbit.
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(reps.len());
    for (id, &rep) in reps.iter().enumerate() {
        decode(rep, nc, nd, &mut digits);
        for d in digits.iter_mut() {
            *d = succ_c[*d];
        }
        let t1 = encode(&digits, nc);
        edges.push((id, orbit_of[t1] as usize));
    }
    let orbit_count = reps.len();
    Ok(OrbitQuotient {
        base_vertex_count: total,
        orbit_of,
        quotient: Digraph::new(orbit_count, edges),
    })
}

/// First-principles satisfaction: `Pol(ℂ)` satisfies the condition of `d`
/// iff every cycle of the shift quotient of `C^𝔻` has length divisible by
/// some `a ∈ C` (so that the quotient maps back into ℂ).
pub fn oracle_satisfies(c_set: &CycleSet, d: &Condition, limits: &Limits) -> Result<bool> {
    let q = shift_quotient(c_set, d.carrier(), limits)?;
    let lengths = q.quotient().cycle_lengths()?;
    Ok(lengths
        .iter()
        .all(|&l| c_set.lengths().iter().any(|&a| l % a == 0)))
}

const HOM_SOURCE_LIMIT: usize = 10_000;
const HOM_TARGET_LIMIT: usize = 64;

/// Backtracking homomorphism search, returning the lexicographically least
/// edge-preserving vertex map if any exists.
pub fn find_homomorphism(g: &Digraph, h: &Digraph) -> Result<Option<Vec<usize>>> {
    if g.vertex_count() > HOM_SOURCE_LIMIT || h.vertex_count() > HOM_TARGET_LIMIT {
        return Err(Error::ResourceExceeded {
            what: "homomorphism search",
            required: g.vertex_count().max(h.vertex_count()) as u128,
            limit: HOM_SOURCE_LIMIT as u128,
            unit: "vertices",
        });
    }
    let n = g.vertex_count();
    // edges of g between already-assigned vertices, grouped by the larger
    // endpoint so each is checked as soon as it becomes decidable
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        checks[u.max(v)].push((u, v));
    }
    let mut map = vec![0usize; n];
    let mut v = 0usize;
    let mut candidate = vec![0usize; n + 1];
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    loop {
        if candidate[v] >= h.vertex_count() {
            // exhausted this vertex, backtrack
            if v == 0 {
                return Ok(None);
            }
            candidate[v] = 0;
            v -= 1;
            candidate[v] += 1;
            continue;
        }
        map[v] = candidate[v];
        let ok = checks[v]
            .iter()
            .all(|&(a, b)| h.has_edge(map[a], map[b]));
        if !ok {
            candidate[v] += 1;
            continue;
        }
        v += 1;
        if v == n {
            return Ok(Some(map));
        }
        candidate[v] = 0;
    }
}

/// The `c`-th relational power of the digraph of `c_set`: same vertices,
/// edge `u -> u + c` along each cycle.
pub fn relational_power(c_set: &CycleSet, c: u64, limits: &Limits) -> Result<Digraph> {
    let n = c_set.vertex_count();
    if n > limits.max_vertices {
        return Err(Error::ResourceExceeded {
            what: "relational power",
            required: n as u128,
            limit: limits.max_vertices as u128,
            unit: "vertices",
        });
    }
    let mut edges = Vec::with_capacity(n as usize);
    let mut offset = 0usize;
    for &a in c_set.lengths() {
        let a_us = a as usize;
        let step = (c % a) as usize;
        for k in 0..a_us {
            edges.push((offset + k, offset + (k + step) % a_us));
        }
        offset += a_us;
    }
    Ok(Digraph::new(n as usize, edges))
}

const FREE_POWER_LIMIT: u64 = 20;
const FREE_MAP_LIMIT: u64 = 1 << 20;

/// The free structure of the union of cycles `c_set` generated by `b_set`:
/// vertices are the polymorphisms `f: 𝔹^ℂ -> 𝔹` (maps preserving the
/// componentwise edge relation), with edge `f -> f_{σ_C}` where
/// `f_{σ_C}(t) = f(t ∘ σ_C)`. Non-polymorphism maps are isolated points of
/// the construction and omitted.
pub fn free_structure(b_set: &CycleSet, c_set: &CycleSet) -> Result<Digraph> {
    let nb = b_set.vertex_count() as usize;
    let nc = c_set.vertex_count() as usize;
    let np = checked_pow(nb as u64, nc as u64, FREE_POWER_LIMIT, "free structure power")?;
    let map_count = checked_pow(nb as u64, np as u64, FREE_MAP_LIMIT, "free structure maps")?;

    let succ_b = successor(b_set);
    let sigma_c = successor(c_set);
    // 𝔹^ℂ: tuple t has successor t+1 (componentwise) and shift t∘σ_C
    let mut digits = vec![0usize; nc];
    let mut plus1 = vec![0usize; np];
    let mut shift = vec![0usize; np];
    for t in 0..np {
        decode(t, nb, nc, &mut digits);
        let mut s = vec![0usize; nc];
        for i in 0..nc {
            s[i] = digits[sigma_c[i]];
        }
        shift[t] = encode(&s, nb);
        for d in digits.iter_mut() {
            *d = succ_b[*d];
        }
        plus1[t] = encode(&digits, nb);
    }

    // a map f: tuples -> 𝔹 is a polymorphism iff f(t+1) = succ(f(t)) — the
    // only edges of 𝔹^ℂ are t -> t+1 and of 𝔹 are u -> succ(u)
    let mut f = vec![0usize; np];
    let mut poly_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut polys: Vec<Vec<usize>> = Vec::new();
    for code in 0..map_count {
        let mut rest = code;
        for slot in f.iter_mut() {
            *slot = rest % nb;
            rest /= nb;
        }
        let preserves = (0..np).all(|t| f[plus1[t]] == succ_b[f[t]]);
        if preserves {
            poly_index.insert(f.clone(), polys.len());
            polys.push(f.clone());
        }
    }

    let mut edges = Vec::with_capacity(polys.len());
    for (i, f) in polys.iter().enumerate() {
        let shifted: Vec<usize> = (0..np).map(|t| f[shift[t]]).collect();
        let j = poly_index
            .get(&shifted)
            .expect("shift of a polymorphism is a polymorphism");
        edges.push((i, *j));
    }
    Ok(Digraph::new(polys.len(), edges))
}

/// Whether a digraph known to decompose into cycles plus isolated points is
/// homomorphically equivalent to the union of cycles `c_set`, ignoring the
/// isolated points.
pub fn hom_equivalent_unions(g: &Digraph, c_set: &CycleSet) -> Result<bool> {
    let lengths = g.cycle_lengths()?;
    match CycleSet::new(lengths) {
        Ok(gl) => Ok(gl.hom_equivalent(c_set)),
        Err(Error::EmptySet) => Ok(false), // no cycles at all
        Err(e) => Err(e),
    }
}
