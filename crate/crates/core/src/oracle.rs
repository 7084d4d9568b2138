//! Brute-force coloring counts.
//!
//! Nothing here touches polynomials: colorings are enumerated as base-λ
//! counters over the vertices, and orbits are built element by element. The
//! results serve as ground truth for the polynomial routes in
//! [`crate::chroma`].

use std::collections::HashSet;

use crate::multigraph::Multigraph;
use crate::permgroup::{is_automorphism, PermGroup, Permutation};
use crate::{Error, Result};

pub const DEFAULT_MAX_VERTICES: usize = 16;

/// Environment variable overriding [`DEFAULT_MAX_VERTICES`].
pub const MAX_VERTICES_ENV: &str = "ORBCHROM_ORACLE_MAX_VERTICES";

/// Enumeration settings. Graphs above `max_vertices` are refused with
/// [`Error::Capacity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub max_vertices: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { max_vertices: DEFAULT_MAX_VERTICES }
    }
}

impl Oracle {
    pub fn new(max_vertices: usize) -> Self {
        Self { max_vertices }
    }

    /// Reads the vertex limit from `ORBCHROM_ORACLE_MAX_VERTICES`, falling
    /// back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_VERTICES_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Self::new)
                .map_err(|_| Error::Parse(format!("{MAX_VERTICES_ENV}={v:?} is not a vertex count"))),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Number of maps `V -> {1..λ}` with distinct colors on every edge.
    pub fn count_proper_colorings(&self, g: &Multigraph, lambda: u64) -> Result<u64> {
        let mut count = 0;
        self.for_each_coloring(g, lambda, |f| {
            if is_proper(g, f) {
                count += 1;
            }
        })?;
        Ok(count)
    }

    /// Number of proper colorings `f` with `f ∘ g = f`.
    pub fn count_fixed_colorings(&self, g: &Multigraph, perm: &Permutation, lambda: u64) -> Result<u64> {
        check_degree(g, perm)?;
        let mut count = 0;
        self.for_each_coloring(g, lambda, |f| {
            if is_proper(g, f) && (0..f.len()).all(|v| f[perm.apply(v)] == f[v]) {
                count += 1;
            }
        })?;
        Ok(count)
    }

    /// Number of classes of proper colorings under `f ~ f ∘ g`, found by
    /// sweeping the colorings and marking each new one's whole orbit.
    pub fn count_coloring_orbits(&self, g: &Multigraph, group: &PermGroup, lambda: u64) -> Result<u64> {
        for perm in group.elements() {
            check_degree(g, perm)?;
            if !is_automorphism(g, perm)? {
                return Err(Error::domain(format!("{perm} is not an automorphism of the graph")));
            }
        }
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut orbits = 0;
        self.for_each_coloring(g, lambda, |f| {
            if !is_proper(g, f) || seen.contains(f) {
                return;
            }
            orbits += 1;
            for perm in group.elements() {
                let image: Vec<u32> = (0..f.len()).map(|v| f[perm.apply(v)]).collect();
                seen.insert(image);
            }
        })?;
        Ok(orbits)
    }

    fn for_each_coloring<F: FnMut(&[u32])>(&self, g: &Multigraph, lambda: u64, mut visit: F) -> Result<()> {
        let n = g.vertex_count();
        if n > self.max_vertices {
            return Err(Error::Capacity {
                what: "vertex count",
                actual: n as u64,
                limit: self.max_vertices as u64,
            });
        }
        if lambda > u32::MAX as u64 || lambda.checked_pow(n as u32).is_none() {
            return Err(Error::Capacity {
                what: "color count",
                actual: lambda,
                limit: (u64::MAX as f64).powf(1.0 / n.max(1) as f64) as u64,
            });
        }
        if n == 0 {
            visit(&[]);
            return Ok(());
        }
        if lambda == 0 {
            return Ok(());
        }
        let top = lambda as u32;
        let mut f = vec![0u32; n];
        loop {
            visit(&f);
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(());
                }
                f[i] += 1;
                if f[i] < top {
                    break;
                }
                f[i] = 0;
                i += 1;
            }
        }
    }
}

fn is_proper(g: &Multigraph, f: &[u32]) -> bool {
    g.edges().iter().all(|&(u, v)| f[u] != f[v])
}

fn check_degree(g: &Multigraph, perm: &Permutation) -> Result<()> {
    if perm.degree() != g.vertex_count() {
        return Err(Error::domain(format!(
            "permutation of degree {} cannot act on a graph with {} vertices",
            perm.degree(),
            g.vertex_count()
        )));
    }
    Ok(())
}

pub fn count_proper_colorings(g: &Multigraph, lambda: u64) -> Result<u64> {
    Oracle::default().count_proper_colorings(g, lambda)
}

pub fn count_fixed_colorings(g: &Multigraph, perm: &Permutation, lambda: u64) -> Result<u64> {
    Oracle::default().count_fixed_colorings(g, perm, lambda)
}

pub fn count_coloring_orbits(g: &Multigraph, group: &PermGroup, lambda: u64) -> Result<u64> {
    Oracle::default().count_coloring_orbits(g, group, lambda)
}
