//! Permutations of `0..n`, their cycle decompositions, and the symmetry
//! groups of the `n`-cycle.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::multigraph::Multigraph;
use crate::{Error, Result};

/// A bijection of `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::domain(format!("{images:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// `r_m`: `v -> (v + m) mod n`.
    pub fn rotation(n: usize, m: usize) -> Result<Self> {
        if m >= n {
            return Err(Error::domain(format!("rotation index {m} outside 0..{n}")));
        }
        Ok(Self { images: (0..n).map(|v| (v + m) % n).collect() })
    }

    /// `s_m`: `v -> (2m - v) mod n`, the reflection whose axis passes
    /// through vertex `m`.
    pub fn reflection_s(n: usize, m: usize) -> Result<Self> {
        if m >= n {
            return Err(Error::domain(format!("reflection index {m} outside 0..{n}")));
        }
        Ok(Self { images: (0..n).map(|v| (2 * m + n - v) % n).collect() })
    }

    /// `s'_m`: `v -> (2m + 1 - v) mod n`, defined for even `n` and
    /// `m < n/2`; the axis crosses the edge `{m, m+1}`.
    pub fn reflection_s_prime(n: usize, m: usize) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(Error::domain(format!("edge reflections need even n, got {n}")));
        }
        if m >= n / 2 {
            return Err(Error::domain(format!("edge reflection index {m} outside 0..{}", n / 2)));
        }
        Ok(Self { images: (0..n).map(|v| (2 * m + 1 + n - v) % n).collect() })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::domain("cannot compose permutations of different degree"));
        }
        Ok(Self { images: other.images.iter().map(|&v| self.images[v]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (v, &w) in self.images.iter().enumerate() {
            images[w] = v;
        }
        Self { images }
    }

    /// Disjoint cycles, fixed points included. Each cycle starts at its
    /// smallest element and cycles are ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.images {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses a whitespace-separated image list such as `"1 2 3 0"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Names an element of the automorphism group of the `n`-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleSymmetry {
    Rotation(usize),
    /// `s_m`
    VertexReflection(usize),
    /// `s'_m`
    EdgeReflection(usize),
}

impl CycleSymmetry {
    pub fn permutation(self, n: usize) -> Result<Permutation> {
        match self {
            CycleSymmetry::Rotation(m) => Permutation::rotation(n, m),
            CycleSymmetry::VertexReflection(m) => Permutation::reflection_s(n, m),
            CycleSymmetry::EdgeReflection(m) => Permutation::reflection_s_prime(n, m),
        }
    }
}

impl fmt::Display for CycleSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleSymmetry::Rotation(m) => write!(f, "r_{m}"),
            CycleSymmetry::VertexReflection(m) => write!(f, "s_{m}"),
            CycleSymmetry::EdgeReflection(m) => write!(f, "s'_{m}"),
        }
    }
}

/// The automorphisms of the `n`-cycle, each with its name.
///
/// `n = 1, 2` give only rotations. Odd `n >= 3` adds `s_0..s_{n-1}`; even
/// `n >= 4` adds `s_0..s_{n/2-1}` and `s'_0..s'_{n/2-1}`.
pub fn cycle_automorphisms(n: usize) -> Result<Vec<(CycleSymmetry, Permutation)>> {
    if n == 0 {
        return Err(Error::domain("the cycle needs at least one vertex"));
    }
    let mut names: Vec<CycleSymmetry> = (0..n).map(CycleSymmetry::Rotation).collect();
    if n >= 3 {
        if n % 2 == 1 {
            names.extend((0..n).map(CycleSymmetry::VertexReflection));
        } else {
            names.extend((0..n / 2).map(CycleSymmetry::VertexReflection));
            names.extend((0..n / 2).map(CycleSymmetry::EdgeReflection));
        }
    }
    names
        .into_iter()
        .map(|s| Ok((s, s.permutation(n)?)))
        .collect()
}

/// A finite permutation group given by its full element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Checks distinctness, identity, closure under composition and inverses.
    pub fn new(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        if let Some(p) = elements.iter().find(|p| p.degree() != degree) {
            return Err(Error::domain(format!(
                "element {p} has degree {}, expected {degree}",
                p.degree()
            )));
        }
        let set: HashSet<&Permutation> = elements.iter().collect();
        if set.len() != elements.len() {
            return Err(Error::domain("group elements must be distinct"));
        }
        if !set.contains(&Permutation::identity(degree)) {
            return Err(Error::domain("group does not contain the identity"));
        }
        for a in &elements {
            if !set.contains(&a.inverse()) {
                return Err(Error::domain(format!("inverse of {a} is missing")));
            }
            for b in &elements {
                if !set.contains(&a.compose(b)?) {
                    return Err(Error::domain(format!("not closed: {a} composed with {b}")));
                }
            }
        }
        Ok(Self { degree, elements })
    }

    pub fn trivial(n: usize) -> Self {
        Self { degree: n, elements: vec![Permutation::identity(n)] }
    }

    /// `{r_0, ..., r_{n-1}}`.
    pub fn rotations(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("rotation group needs n >= 1"));
        }
        let elements = (0..n)
            .map(|m| Permutation::rotation(n, m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, elements)
    }

    /// The full automorphism group of the `n`-cycle (dihedral of order `2n`
    /// once `n >= 3`).
    pub fn automorphisms_of_cycle(n: usize) -> Result<Self> {
        let elements = cycle_automorphisms(n)?.into_iter().map(|(_, p)| p).collect();
        Self::new(n, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }
}

/// Whether `p` maps the edge multiset of `g` onto itself.
pub fn is_automorphism(g: &Multigraph, p: &Permutation) -> Result<bool> {
    if g.vertex_count() != p.degree() {
        return Err(Error::domain(format!(
            "permutation of degree {} cannot act on a graph with {} vertices",
            p.degree(),
            g.vertex_count()
        )));
    }
    let image = Multigraph::with_edges(
        g.vertex_count(),
        g.edges().iter().map(|&(u, v)| (p.apply(u), p.apply(v))),
    )?;
    Ok(image == *g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::gcd;

    #[test]
    fn named_elements() {
        assert_eq!(Permutation::rotation(4, 1).unwrap().images(), &[1, 2, 3, 0]);
        assert_eq!(Permutation::reflection_s(5, 0).unwrap().images(), &[0, 4, 3, 2, 1]);
        assert_eq!(Permutation::reflection_s_prime(4, 0).unwrap().images(), &[1, 0, 3, 2]);
        assert!(Permutation::rotation(4, 4).is_err());
        assert!(Permutation::reflection_s(3, 3).is_err());
        assert!(Permutation::reflection_s_prime(5, 0).is_err());
        assert!(Permutation::reflection_s_prime(6, 3).is_err());
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        let p: Permutation = "1 2 3 0".parse().unwrap();
        assert_eq!(p, Permutation::rotation(4, 1).unwrap());
        assert_eq!(p.to_string(), "1 2 3 0");
        assert!(matches!("1 1".parse::<Permutation>(), Err(Error::Parse(_))));
        assert!(matches!("a b".parse::<Permutation>(), Err(Error::Parse(_))));
    }

    #[test]
    fn compose_and_inverse() {
        let r1 = Permutation::rotation(5, 1).unwrap();
        let r2 = Permutation::rotation(5, 2).unwrap();
        assert_eq!(r1.compose(&r1).unwrap(), r2);
        assert!(r2.compose(&r2.inverse()).unwrap().is_identity());
        let s = Permutation::reflection_s(5, 1).unwrap();
        assert!(s.compose(&s).unwrap().is_identity());
        assert!(r1.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(
            Permutation::rotation(6, 2).unwrap().cycles(),
            vec![vec![0, 2, 4], vec![1, 3, 5]]
        );
        assert_eq!(Permutation::identity(3).cycles(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(
            Permutation::reflection_s(5, 0).unwrap().cycles(),
            vec![vec![0], vec![1, 4], vec![2, 3]]
        );
    }

    #[test]
    fn rotation_cycle_structure() {
        for n in 1..=24 {
            for m in 0..n {
                let cycles = Permutation::rotation(n, m).unwrap().cycles();
                let k = gcd(n as u64, m as u64) as usize;
                assert_eq!(cycles.len(), k, "r_{m} on {n}");
                assert!(cycles.iter().all(|c| c.len() == n / k));
            }
        }
    }

    #[test]
    fn reflection_cycle_counts() {
        for n in 1..=24 {
            for m in 0..n {
                let cycles = Permutation::reflection_s(n, m).unwrap().cycles();
                assert_eq!(cycles.len(), n / 2 + 1, "s_{m} on {n}");
            }
            if n % 2 == 0 {
                for m in 0..n / 2 {
                    let cycles = Permutation::reflection_s_prime(n, m).unwrap().cycles();
                    assert_eq!(cycles.len(), n / 2, "s'_{m} on {n}");
                }
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(PermGroup::rotations(1).unwrap().order(), 1);
        assert_eq!(PermGroup::rotations(3).unwrap().order(), 3);
        let r2 = Permutation::rotation(4, 2).unwrap();
        assert!(r2.compose(&r2).unwrap().is_identity());
        assert_eq!(PermGroup::automorphisms_of_cycle(1).unwrap().order(), 1);
        assert_eq!(
            PermGroup::automorphisms_of_cycle(2).unwrap(),
            PermGroup::rotations(2).unwrap()
        );
        assert_eq!(PermGroup::automorphisms_of_cycle(5).unwrap().order(), 10);
        let named = cycle_automorphisms(6).unwrap();
        let count = |f: fn(&CycleSymmetry) -> bool| named.iter().filter(|(s, _)| f(s)).count();
        assert_eq!(named.len(), 12);
        assert_eq!(count(|s| matches!(s, CycleSymmetry::Rotation(_))), 6);
        assert_eq!(count(|s| matches!(s, CycleSymmetry::VertexReflection(_))), 3);
        assert_eq!(count(|s| matches!(s, CycleSymmetry::EdgeReflection(_))), 3);
        for n in 1..=24 {
            assert_eq!(PermGroup::rotations(n).unwrap().order(), n);
            let expected = if n >= 3 { 2 * n } else { n };
            assert_eq!(PermGroup::automorphisms_of_cycle(n).unwrap().order(), expected);
        }
        assert!(PermGroup::rotations(0).is_err());
        assert!(PermGroup::automorphisms_of_cycle(0).is_err());
    }

    #[test]
    fn group_validation() {
        let id = Permutation::identity(4);
        let r1 = Permutation::rotation(4, 1).unwrap();
        assert!(PermGroup::new(4, vec![id.clone(), r1.clone()]).is_err());
        assert!(PermGroup::new(4, vec![r1.clone()]).is_err());
        assert!(PermGroup::new(4, vec![id.clone(), id.clone()]).is_err());
        assert!(PermGroup::new(3, vec![id]).is_err());
    }

    #[test]
    fn automorphism_checks() {
        let c5 = Multigraph::cycle(5).unwrap();
        assert!(is_automorphism(&c5, &Permutation::rotation(5, 2).unwrap()).unwrap());
        let swap01 = Permutation::new(vec![1, 0, 2, 3]).unwrap();
        assert!(!is_automorphism(&Multigraph::cycle(4).unwrap(), &swap01).unwrap());
        let c1 = Multigraph::cycle(1).unwrap();
        assert!(is_automorphism(&c1, &Permutation::identity(1)).unwrap());
        assert!(is_automorphism(&c5, &Permutation::identity(4)).is_err());
        for n in 1..=24 {
            let g = Multigraph::cycle(n).unwrap();
            for p in PermGroup::automorphisms_of_cycle(n).unwrap().elements() {
                assert!(is_automorphism(&g, p).unwrap(), "{p} on C_{n}");
            }
        }
    }
}
