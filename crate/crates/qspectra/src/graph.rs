//! The graph value type and the structural queries everything else
//! conditions on: degree/edge/triangle counts, components, bipartiteness,
//! and the forest/unicyclic/bicyclic classification per component.

use crate::{Error, Result};

/// Hard cap on the order: one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph on vertices `0..n`, adjacency stored as one
/// bitset row per vertex. Immutable by convention once built: constructors
/// and operators return fresh values, queries take `&self`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics above [`MAX_ORDER`]; fallible
    /// callers (family builders, decoders) check first.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds cap {MAX_ORDER}");
        Graph {
            n,
            rows: vec![0; n],
        }
    }

    /// Checked constructor used at public boundaries.
    pub fn with_order(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderCap {
                requested: n,
                cap: MAX_ORDER,
            });
        }
        Ok(Self::empty(n))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u},{v})");
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Neighbor bitset of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[v])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Image of the graph under `perm`, where `perm[v]` is the new label of
    /// vertex `v`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    g.add_edge(perm[u], perm[v]);
                }
            }
        }
        g
    }

    /// True iff `self` and `other` are isomorphic, decided by equality of
    /// canonical codes.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.size() != other.size() {
            return false;
        }
        crate::canon::canonical_form(self) == crate::canon::canonical_form(other)
    }

    /// Vertex sets of the connected components, each sorted ascending,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let mut grown = comp;
                let mut bits = BitIter(comp);
                for v in &mut bits {
                    grown |= self.rows[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(BitIter(comp).collect());
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Triangle count: half-edge sum of common-neighborhood sizes over 3.
    pub fn triangles(&self) -> usize {
        let mut twice3: usize = 0;
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    twice3 += (self.rows[u] & self.rows[v]).count_ones() as usize;
                }
            }
        }
        twice3 / 3
    }

    /// 2-colorability of the component containing the given vertex set.
    fn component_is_bipartite(&self, comp: &[usize]) -> bool {
        let mut color = vec![-1i8; self.n];
        let start = comp[0];
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if color[v] < 0 {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
        true
    }

    /// Classification of each connected component, in component order.
    pub fn component_classes(&self) -> Vec<ComponentClass> {
        self.components()
            .iter()
            .map(|comp| {
                let v = comp.len();
                let e: usize = comp
                    .iter()
                    .map(|&u| self.neighbors(u).filter(|w| comp.contains(w)).count())
                    .sum::<usize>()
                    / 2;
                if e == v - 1 {
                    ComponentClass::Forest
                } else if e == v {
                    if self.unicyclic_cycle_len(comp) % 2 == 1 {
                        ComponentClass::UnicyclicOdd
                    } else {
                        ComponentClass::UnicyclicEven
                    }
                } else if e == v + 1 {
                    ComponentClass::Bicyclic
                } else {
                    ComponentClass::Other
                }
            })
            .collect()
    }

    /// Length of the unique cycle of a unicyclic component: strip degree-one
    /// vertices until only the cycle remains.
    fn unicyclic_cycle_len(&self, comp: &[usize]) -> usize {
        let mut alive: u64 = comp.iter().map(|&v| 1u64 << v).sum();
        loop {
            let mut next = alive;
            for v in BitIter(alive) {
                if (self.rows[v] & alive).count_ones() <= 1 {
                    next &= !(1 << v);
                }
            }
            if next == alive {
                return alive.count_ones() as usize;
            }
            alive = next;
        }
    }

    /// True iff the graph contains a 4-cycle as a subgraph, chords allowed:
    /// two vertices with two or more common neighbors.
    pub fn has_c4_subgraph(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for c in a + 1..n {
                let common = self.rows[a] & self.rows[c] & !(1u64 << a) & !(1u64 << c);
                if common.count_ones() >= 2 {
                    return true;
                }
            }
        }
        false
    }

    /// True iff some 4-subset of vertices induces exactly a 4-cycle,
    /// i.e. every vertex of the subset has exactly two neighbors inside it.
    pub fn has_induced_c4(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let mask = (1u64 << a) | (1 << b) | (1 << c) | (1 << d);
                        if [a, b, c, d]
                            .iter()
                            .all(|&v| (self.rows[v] & mask).count_ones() == 2)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// All structural quantities the spectral invariants condition on.
    pub fn profile(&self) -> StructuralProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        debug_assert_eq!(degrees.iter().sum::<usize>(), 2 * m);
        let comps = self.components();
        let bipartite_components = comps
            .iter()
            .filter(|c| self.component_is_bipartite(c))
            .count();
        let mut sorted = degrees;
        sorted.sort_unstable();
        StructuralProfile {
            n: self.n,
            m,
            degrees: sorted,
            triangles: self.triangles(),
            components: comps.len(),
            bipartite_components,
            classes: self.component_classes(),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Coarse shape of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentClass {
    Forest,
    UnicyclicOdd,
    UnicyclicEven,
    Bicyclic,
    Other,
}

impl std::fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ComponentClass::Forest => "forest",
            ComponentClass::UnicyclicOdd => "unicyclic-odd",
            ComponentClass::UnicyclicEven => "unicyclic-even",
            ComponentClass::Bicyclic => "bicyclic",
            ComponentClass::Other => "other",
        };
        f.write_str(s)
    }
}

/// Order, size, degree multiset (ascending), triangle count, component
/// counts and per-component classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub triangles: usize,
    pub components: usize,
    pub bipartite_components: usize,
    pub classes: Vec<ComponentClass>,
}

impl StructuralProfile {
    pub fn degree_square_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| (d * d) as u64).sum()
    }

    pub fn degree_cube_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| (d * d * d) as u64).sum()
    }
}

/// Iterator over the set bit positions of a word.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Ensure a vertex index is valid for `g`.
pub(crate) fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        Err(Error::VertexIndex {
            index: v,
            order: g.order(),
        })
    } else {
        Ok(())
    }
}
