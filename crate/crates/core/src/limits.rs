/// Resource bounds for the enumeration-heavy procedures.
///
/// Every bounded operation takes these explicitly; exceeding a bound is a
/// structured [`crate::Error::ResourceExceeded`], never silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on the number of divisors enumerated per integer.
    pub max_divisors: u64,
    /// Cap on the number of maps `h: D -> C` checked by satisfaction.
    pub max_maps: u64,
    /// Cap on vertices of explicitly constructed digraphs (powers, quotients).
    pub max_vertices: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_divisors: 1_000_000,
            max_maps: 10_000_000,
            max_vertices: 1_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_vertices(mut self, max_vertices: u64) -> Self {
        self.max_vertices = max_vertices;
        self
    }

    pub fn with_max_divisors(mut self, max_divisors: u64) -> Self {
        self.max_divisors = max_divisors;
        self
    }
}
