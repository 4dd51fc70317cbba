//! Finite loopless multigraphs and the constructions used throughout the
//! crate: circulant graphs, cones, joins and cobordisms of circulants.
//!
//! Vertices are dense indices `0..n`. The apex of a cone is always the
//! highest index, so matrix layouts are deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    n: usize,
    /// Keyed by `(u, v)` with `u < v`; multiplicities are at least 1.
    edges: BTreeMap<(usize, usize), u32>,
}

impl Multigraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: BTreeMap::new(),
        }
    }

    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v, 1);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.insert(u - 1, u, 1);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.insert(u, v, 1);
        Ok(())
    }

    fn insert(&mut self, u: usize, v: usize, mult: u32) {
        debug_assert!(u != v && u < self.n && v < self.n);
        *self.edges.entry((u.min(v), u.max(v))).or_insert(0) += mult;
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|&m| m as usize).sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.edges.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Distinct adjacent pairs `(u, v)`, `u < v`, with their multiplicities.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    /// Every edge copy as a separate entry; parallel edges repeat.
    pub fn expanded_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .flat_map(|(uv, m)| std::iter::repeat_n(uv, m as usize))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges()
            .filter(|&((a, b), _)| a == v || b == v)
            .map(|(_, m)| m as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for ((u, v), m) in self.edges() {
            d[u] += m as usize;
            d[v] += m as usize;
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for ((u, v), _) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Laplacian `D - A`, with multiplicities in `A`.
    pub fn laplacian(&self) -> IntMatrix {
        let mut l = IntMatrix::zeros(self.n, self.n);
        for ((u, v), m) in self.edges() {
            let m = BigInt::from(m);
            l[(u, v)] -= &m;
            l[(v, u)] -= &m;
            l[(u, u)] += &m;
            l[(v, v)] += &m;
        }
        l
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Self::empty(self.n);
        for ((u, v), m) in self.edges() {
            g.insert(perm[u], perm[v], m);
        }
        g
    }

    pub fn circulant(spec: &CirculantSpec) -> Self {
        let n = spec.n;
        let mut g = Self::empty(n);
        for &s in &spec.jumps {
            if 2 * s == n {
                for i in 0..s {
                    g.insert(i, i + s, 1);
                }
            } else {
                for i in 0..n {
                    g.insert(i, (i + s) % n, 1);
                }
            }
        }
        g
    }

    /// Adds an apex vertex (index `n`) joined once to every vertex.
    pub fn cone(&self) -> Self {
        let mut g = self.clone();
        g.n += 1;
        for v in 0..self.n {
            g.insert(v, self.n, 1);
        }
        g
    }

    /// Disjoint union of `self` (first) and `other` (shifted) plus every
    /// cross edge.
    pub fn join(&self, other: &Self) -> Self {
        let m = self.n;
        let mut g = self.clone();
        g.n = m + other.n;
        for ((u, v), mult) in other.edges() {
            g.insert(u + m, v + m, mult);
        }
        for u in 0..m {
            for v in 0..other.n {
                g.insert(u, m + v, 1);
            }
        }
        g
    }

    /// Two circulant layers on `0..n` and `n..2n` joined by the matching
    /// `{i, n + i}`.
    pub fn cobordism(spec: &CobordismSpec) -> Self {
        let n = spec.n;
        let lower = Self::circulant(&CirculantSpec {
            n,
            jumps: spec.jumps1.clone(),
        });
        let upper = Self::circulant(&CirculantSpec {
            n,
            jumps: spec.jumps2.clone(),
        });
        let mut g = lower;
        g.n = 2 * n;
        for ((u, v), m) in upper.edges() {
            g.insert(u + n, v + n, m);
        }
        for i in 0..n {
            g.insert(i, n + i, 1);
        }
        g
    }

    /// Wheel `W(n)`: cone over the `n`-cycle.
    pub fn wheel(n: usize) -> Result<Self> {
        Ok(Self::circulant(&CirculantSpec::new(n, vec![1])?).cone())
    }

    /// Möbius ladder `M(n) = C_{2n}(1, n)`.
    pub fn mobius_ladder(n: usize) -> Result<Self> {
        Ok(Self::circulant(&CirculantSpec::new(2 * n, vec![1, n])?))
    }

    /// Prism `Pr(n)`: cobordism of two `n`-cycles.
    pub fn prism(n: usize) -> Result<Self> {
        Ok(Self::cobordism(&CobordismSpec::new(n, vec![1], vec![1])?))
    }
}

/// Circulant graph `C_n(s_1, ..., s_k)` with `1 <= s_1 < ... < s_k <= n/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    n: usize,
    jumps: Vec<usize>,
}

impl CirculantSpec {
    pub const MIN_VERTICES: usize = 3;

    pub fn new(n: usize, jumps: Vec<usize>) -> Result<Self> {
        if n < Self::MIN_VERTICES {
            return Err(Error::InvalidCirculant(format!(
                "need at least {} vertices, got {n}",
                Self::MIN_VERTICES
            )));
        }
        validate_jumps(n, &jumps, 2 * jumps.last().copied().unwrap_or(0) <= n)?;
        Ok(CirculantSpec { n, jumps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn jumps(&self) -> &[usize] {
        &self.jumps
    }

    /// True when `n` is even and the largest jump is `n/2`; that jump
    /// contributes a single edge per vertex and the valency is odd.
    pub fn has_half_jump(&self) -> bool {
        self.jumps.last().is_some_and(|&s| 2 * s == self.n)
    }

    /// `gcd(s_1, ..., s_k, n) == 1`.
    pub fn is_connected(&self) -> bool {
        self.jumps.iter().fold(self.n, |g, &s| g.gcd(&s)) == 1
    }

    pub fn graph(&self) -> Multigraph {
        Multigraph::circulant(self)
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}({})", self.n, join_jumps(&self.jumps))
    }
}

/// Two circulant layers `C_n(jumps1)` and `C_n(jumps2)`, all jumps `< n/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CobordismSpec {
    n: usize,
    jumps1: Vec<usize>,
    jumps2: Vec<usize>,
}

impl CobordismSpec {
    pub fn new(n: usize, jumps1: Vec<usize>, jumps2: Vec<usize>) -> Result<Self> {
        if n < CirculantSpec::MIN_VERTICES {
            return Err(Error::InvalidCirculant(format!(
                "cobordism layers need at least {} vertices, got {n}",
                CirculantSpec::MIN_VERTICES
            )));
        }
        for jumps in [&jumps1, &jumps2] {
            validate_jumps(n, jumps, 2 * jumps.last().copied().unwrap_or(0) < n)?;
        }
        Ok(CobordismSpec { n, jumps1, jumps2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn jumps1(&self) -> &[usize] {
        &self.jumps1
    }

    pub fn jumps2(&self) -> &[usize] {
        &self.jumps2
    }

    pub fn graph(&self) -> Multigraph {
        Multigraph::cobordism(self)
    }
}

impl fmt::Display for CobordismSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "COB{}({}|{})",
            self.n,
            join_jumps(&self.jumps1),
            join_jumps(&self.jumps2)
        )
    }
}

fn validate_jumps(n: usize, jumps: &[usize], max_ok: bool) -> Result<()> {
    if jumps.first() == Some(&0) {
        return Err(Error::InvalidCirculant("jump 0 would create loops".into()));
    }
    if !jumps.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidCirculant(format!(
            "jumps must be strictly increasing, got {jumps:?}"
        )));
    }
    if !max_ok {
        return Err(Error::InvalidCirculant(format!(
            "jump {} out of range for n = {n}",
            jumps.last().copied().unwrap_or(0)
        )));
    }
    Ok(())
}

fn join_jumps(jumps: &[usize]) -> String {
    jumps
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
