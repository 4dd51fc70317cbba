//! Brute-force ground truth for small graphs.
//!
//! Spanning trees and spanning forests are enumerated as acyclic edge
//! subsets by backtracking over the edge list with a rollback union-find.
//! Parallel edges are distinct objects, as they are for the determinant
//! formulas.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const MAX_VERTICES: usize = 11;
pub const MAX_EDGES: usize = 24;

pub fn check_guard(g: &Multigraph) -> Result<()> {
    let (vertices, edges) = (g.n_vertices(), g.edge_count());
    if vertices > MAX_VERTICES || edges > MAX_EDGES {
        return Err(Error::GuardExceeded {
            vertices,
            edges,
            max_vertices: MAX_VERTICES,
            max_edges: MAX_EDGES,
        });
    }
    Ok(())
}

/// Union-find with union by size and no path compression, so that every
/// union can be undone in LIFO order.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
    history: Vec<usize>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.components -= 1;
        self.history.push(b);
        true
    }

    fn rollback(&mut self) {
        let b = self.history.pop().expect("rollback without union");
        let a = self.parent[b];
        self.size[a] -= self.size[b];
        self.parent[b] = b;
        self.components += 1;
    }

    fn root_sizes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.parent.len())
            .filter(|&v| self.parent[v] == v)
            .map(|v| (v, self.size[v]))
    }
}

struct Search<'a, F> {
    edges: &'a [(usize, usize)],
    dsu: RollbackDsu,
    chosen: Vec<usize>,
    /// Stop at `n - 1` chosen edges and report only spanning trees.
    trees_only: bool,
    visit: F,
}

impl<F: FnMut(&[usize], &RollbackDsu)> Search<'_, F> {
    fn run(&mut self, i: usize) {
        if self.trees_only {
            let missing = self.dsu.components - 1;
            if missing == 0 {
                (self.visit)(&self.chosen, &self.dsu);
                return;
            }
            if self.edges.len() - i < missing {
                return;
            }
        } else if i == self.edges.len() {
            (self.visit)(&self.chosen, &self.dsu);
            return;
        }
        let (u, v) = self.edges[i];
        if self.dsu.union(u, v) {
            self.chosen.push(i);
            self.run(i + 1);
            self.chosen.pop();
            self.dsu.rollback();
        }
        self.run(i + 1);
    }
}

fn search(
    n: usize,
    edges: &[(usize, usize)],
    trees_only: bool,
    visit: impl FnMut(&[usize], &RollbackDsu),
) {
    if trees_only && n == 0 {
        return;
    }
    let mut s = Search {
        edges,
        dsu: RollbackDsu::new(n),
        chosen: Vec::new(),
        trees_only,
        visit,
    };
    s.run(0);
}

/// Number of spanning trees by exhaustive enumeration.
pub fn enumerate_spanning_trees(g: &Multigraph) -> Result<u64> {
    check_guard(g)?;
    let mut count = 0u64;
    search(g.n_vertices(), &g.expanded_edges(), true, |_, _| count += 1);
    Ok(count)
}

/// Number of rooted spanning forests: over all acyclic edge subsets
/// (the empty one included), the product of the component sizes.
pub fn enumerate_rooted_forests(g: &Multigraph) -> Result<u64> {
    check_guard(g)?;
    let mut total = 0u64;
    search(g.n_vertices(), &g.expanded_edges(), false, |_, dsu| {
        total += dsu.root_sizes().map(|(_, s)| s as u64).product::<u64>();
    });
    Ok(total)
}

/// A rooted spanning forest: edge indices into `g.expanded_edges()` as a
/// bitmask, and the root vertices as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct RootedForest {
    edges: u64,
    roots: u64,
}

/// Outcome of checking the correspondence between spanning trees of
/// `cone(g)` and rooted spanning forests of `g`: a tree restricts to a
/// forest of `g`, each component rooted where the tree meets the apex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub cone_trees: u64,
    pub rooted_forests: u64,
    pub injective: bool,
    pub surjective: bool,
    /// First violation found, if any.
    pub counterexample: Option<String>,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective && self.cone_trees == self.rooted_forests
    }
}

pub fn bijection_check(g: &Multigraph) -> Result<BijectionReport> {
    check_guard(g)?;
    let cone = g.cone();
    check_guard(&cone)?;
    let n = g.n_vertices();
    let apex = n;
    let g_edges = g.expanded_edges();

    let mut all_forests = HashSet::new();
    search(n, &g_edges, false, |chosen, dsu| {
        let edges = chosen.iter().fold(0u64, |acc, &i| acc | (1 << i));
        let components: Vec<Vec<usize>> = {
            let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
            for v in 0..n {
                by_root.entry(dsu.find(v)).or_default().push(v);
            }
            by_root.into_values().collect()
        };
        let mut root_sets = vec![0u64];
        for comp in &components {
            root_sets = root_sets
                .iter()
                .flat_map(|&r| comp.iter().map(move |&v| r | (1 << v)))
                .collect();
        }
        all_forests.extend(
            root_sets
                .into_iter()
                .map(|roots| RootedForest { edges, roots }),
        );
    });

    // Cone edge i corresponds to the k-th copy of its pair in `g_edges`.
    let cone_edges = cone.expanded_edges();
    let mut copies: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, &uv) in g_edges.iter().enumerate() {
        copies.entry(uv).or_default().push(i);
    }
    let mut seen_copy: HashMap<(usize, usize), usize> = HashMap::new();
    let cone_to_g: Vec<Option<usize>> = cone_edges
        .iter()
        .map(|&(u, v)| {
            if v == apex {
                return None;
            }
            let k = seen_copy.entry((u, v)).or_insert(0);
            *k += 1;
            Some(copies[&(u, v)][*k - 1])
        })
        .collect();

    let mut images = HashSet::new();
    let mut cone_trees = 0u64;
    let mut injective = true;
    let mut counterexample = None;
    search(n + 1, &cone_edges, true, |chosen, _| {
        cone_trees += 1;
        let mut image = RootedForest { edges: 0, roots: 0 };
        for &i in chosen {
            match cone_to_g[i] {
                Some(j) => image.edges |= 1 << j,
                None => image.roots |= 1 << cone_edges[i].0,
            }
        }
        if !all_forests.contains(&image) && counterexample.is_none() {
            counterexample = Some(format!(
                "cone tree {:?} maps to {:?}, which is not a rooted forest of g",
                chosen.iter().map(|&i| cone_edges[i]).collect::<Vec<_>>(),
                describe(&image, &g_edges),
            ));
        }
        if !images.insert(image) {
            injective = false;
            if counterexample.is_none() {
                counterexample = Some(format!(
                    "two cone trees map to {:?}",
                    describe(&image, &g_edges)
                ));
            }
        }
    });

    let surjective = images.is_superset(&all_forests);
    if !surjective && counterexample.is_none() {
        let missed = all_forests
            .difference(&images)
            .next()
            .expect("nonempty difference");
        counterexample = Some(format!(
            "rooted forest {:?} has no preimage",
            describe(missed, &g_edges)
        ));
    }
    Ok(BijectionReport {
        cone_trees,
        rooted_forests: all_forests.len() as u64,
        injective,
        surjective: surjective && images.len() == all_forests.len(),
        counterexample,
    })
}

fn describe(f: &RootedForest, g_edges: &[(usize, usize)]) -> (Vec<(usize, usize)>, Vec<usize>) {
    let edges = (0..g_edges.len())
        .filter(|&i| f.edges >> i & 1 == 1)
        .map(|i| g_edges[i])
        .collect();
    let roots = (0..64).filter(|&v| f.roots >> v & 1 == 1).collect();
    (edges, roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CirculantSpec;

    fn circ(n: usize, jumps: &[usize]) -> Multigraph {
        CirculantSpec::new(n, jumps.to_vec()).unwrap().graph()
    }

    #[test]
    fn spanning_tree_enumeration() {
        assert_eq!(enumerate_spanning_trees(&circ(5, &[1])).unwrap(), 5);
        assert_eq!(
            enumerate_spanning_trees(&Multigraph::complete(4)).unwrap(),
            16
        );
        let dbl = Multigraph::from_edge_list(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(enumerate_spanning_trees(&dbl).unwrap(), 2);
        assert_eq!(enumerate_spanning_trees(&Multigraph::empty(1)).unwrap(), 1);
        assert_eq!(enumerate_spanning_trees(&Multigraph::empty(3)).unwrap(), 0);
    }

    #[test]
    fn rooted_forest_enumeration() {
        assert_eq!(enumerate_rooted_forests(&Multigraph::path(2)).unwrap(), 3);
        assert_eq!(enumerate_rooted_forests(&circ(3, &[1])).unwrap(), 16);
        assert_eq!(enumerate_rooted_forests(&Multigraph::empty(1)).unwrap(), 1);
        assert_eq!(
            enumerate_rooted_forests(&Multigraph::complete(4)).unwrap(),
            125
        );
    }

    #[test]
    fn guard_is_a_hard_error() {
        let big = Multigraph::complete(12);
        assert!(matches!(
            enumerate_spanning_trees(&big),
            Err(Error::GuardExceeded { vertices: 12, .. })
        ));
        let dense = Multigraph::complete(8);
        assert_eq!(dense.edge_count(), 28);
        assert!(enumerate_rooted_forests(&dense).is_err());
        // K6 itself is fine, its cone has 21 edges
        assert!(bijection_check(&Multigraph::complete(6)).is_ok());
    }

    #[test]
    fn bijection_small_cases() {
        for (g, count) in [
            (circ(3, &[1]), 16),
            (Multigraph::empty(1), 1),
            (Multigraph::path(2), 3),
            (
                Multigraph::from_edge_list(3, &[(0, 1), (0, 1), (1, 2)]).unwrap(),
                0,
            ),
        ] {
            let r = bijection_check(&g).unwrap();
            assert!(r.holds(), "{r:?}");
            if count > 0 {
                assert_eq!(r.cone_trees, count);
            }
            assert_eq!(r.rooted_forests, enumerate_rooted_forests(&g).unwrap());
        }
    }
}
