//! Finite sets of cycle lengths.
//!
//! A [`CycleSet`] is the one representation behind both a finite disjoint
//! union of directed cycles and the cyclic loop condition it induces.
//! Multiplicity is deliberately dropped: repeated cycles are homomorphically
//! equivalent to a single copy.

use std::fmt;

use crate::arith::{dotdiv, lcm, rad};
use crate::digraph::Digraph;
use crate::{Error, Limits, Result};

/// A nonempty set of distinct positive cycle lengths, sorted ascending.
///
/// Equality is structural; the canonical sorted-deduplicated form is
/// established at construction time.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleSet {
    lengths: Vec<u64>,
}

impl CycleSet {
    pub fn new(lengths: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut lengths: Vec<u64> = lengths.into_iter().collect();
        if lengths.contains(&0) {
            return Err(Error::ZeroLength);
        }
        lengths.sort_unstable();
        lengths.dedup();
        if lengths.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(CycleSet { lengths })
    }

    /// The loop graph: the top element of the pp-constructability order.
    pub fn loop_graph() -> Self {
        CycleSet { lengths: vec![1] }
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    pub fn contains(&self, a: u64) -> bool {
        self.lengths.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    /// Total number of vertices of the associated digraph.
    pub fn vertex_count(&self) -> u64 {
        self.lengths.iter().sum()
    }

    pub fn lcm(&self) -> Result<u64> {
        self.lengths.iter().try_fold(1u64, |acc, &a| lcm(acc, a))
    }

    /// Elementwise `a / gcd(a, c)`, deduplicated.
    pub fn dotdiv(&self, c: u64) -> CycleSet {
        CycleSet::new(self.lengths.iter().map(|&a| dotdiv(a, c))).expect("nonempty")
    }

    /// Elementwise radical, deduplicated.
    pub fn rad(&self) -> CycleSet {
        CycleSet::new(self.lengths.iter().map(|&a| rad(a))).expect("nonempty")
    }

    /// The set associated to the categorical product: pairwise lcms.
    pub fn times(&self, other: &CycleSet) -> Result<CycleSet> {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for &a in &self.lengths {
            for &b in &other.lengths {
                out.push(lcm(a, b)?);
            }
        }
        CycleSet::new(out)
    }

    /// The set associated to the bullet product: pairwise products.
    pub fn bullet(&self, other: &CycleSet) -> Result<CycleSet> {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for &a in &self.lengths {
            for &b in &other.lengths {
                out.push(a.checked_mul(b).ok_or(Error::Overflow {
                    op: "bullet",
                    a,
                    b,
                })?);
            }
        }
        CycleSet::new(out)
    }

    /// Whether the associated digraph maps homomorphically into `other`'s.
    ///
    /// A cycle of length `a` maps into a cycle of length `b` iff `b | a`, so
    /// this holds iff every length here has a divisor in `other`.
    pub fn maps_into(&self, other: &CycleSet) -> bool {
        self.lengths
            .iter()
            .all(|&a| other.lengths.iter().any(|&b| a % b == 0))
    }

    pub fn hom_equivalent(&self, other: &CycleSet) -> bool {
        self.maps_into(other) && other.maps_into(self)
    }

    /// The unique minimal subset homomorphically equivalent to this set:
    /// drop every length divisible by a distinct retained length.
    pub fn reduce(&self) -> CycleSet {
        let kept: Vec<u64> = self
            .lengths
            .iter()
            .copied()
            .filter(|&a| !self.lengths.iter().any(|&b| b != a && a % b == 0))
            .collect();
        CycleSet::new(kept).expect("minimal elements are never empty")
    }

    /// The explicit digraph: one directed cycle per length, vertices labeled
    /// `(a,k)` with edge `(a,k) -> (a,k+1 mod a)`.
    pub fn to_digraph(&self, limits: &Limits) -> Result<Digraph> {
        let n = self.vertex_count();
        if n > limits.max_vertices {
            return Err(Error::ResourceExceeded {
                what: "cycle digraph",
                required: n as u128,
                limit: limits.max_vertices as u128,
                unit: "vertices",
            });
        }
        let mut edges = Vec::with_capacity(n as usize);
        let mut labels = Vec::with_capacity(n as usize);
        let mut offset = 0usize;
        for &a in &self.lengths {
            let a = a as usize;
            for k in 0..a {
                edges.push((offset + k, offset + (k + 1) % a));
                labels.push(format!("({},{})", a, k));
            }
            offset += a;
        }
        Ok(Digraph::new(n as usize, edges).with_labels(labels))
    }
}

impl fmt::Display for CycleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, "}}")
    }
}

/// Convenience constructor used pervasively in tests.
#[macro_export]
macro_rules! cycset {
    ($($a:expr),+ $(,)?) => {
        $crate::CycleSet::new([$($a),+]).unwrap()
    };
}
