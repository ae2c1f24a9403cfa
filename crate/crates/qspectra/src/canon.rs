//! Canonical labeling by individualization-refinement.
//!
//! The search refines an ordered partition to equitability, individualizes
//! vertices from the first non-singleton cell, and takes the minimum
//! upper-triangle adjacency bitstring over the discrete leaves. Tie leaves
//! yield automorphisms, which both prune sibling branches (vertices in the
//! same orbit of the prefix-fixing subgroup known so far) and provide the
//! vertex orbits the enumerator's canonical-augmentation test needs.
//!
//! Equal codes hold exactly for isomorphic graphs: a code reconstructs its
//! graph, and the leaf-code set is invariant under relabeling because
//! refinement and cell splitting depend only on counts, never on labels.

use crate::graph::Graph;
use std::collections::HashSet;

/// Label-invariant encoding of a graph: the minimal upper-triangle
/// adjacency bitstring over all labelings reachable by the search, packed
/// big-endian into words. Length depends only on the order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: usize,
    words: Vec<u64>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Upper-triangle bits in column order, one byte per 6 bits with the
    /// graph6 offset, prefixed by the order byte.
    pub fn bytes(&self) -> Vec<u8> {
        let bits = self.n * self.n.saturating_sub(1) / 2;
        let mut out = vec![63 + self.n as u8];
        let mut i = 0;
        while i < bits {
            let mut b = 0u8;
            for k in 0..6 {
                if i + k < bits && self.bit(i + k) {
                    b |= 1 << (5 - k);
                }
            }
            out.push(b + 63);
            i += 6;
        }
        out
    }

    fn bit(&self, idx: usize) -> bool {
        self.words[idx / 64] >> (63 - idx % 64) & 1 == 1
    }
}

/// Full result of the canonical search.
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    pub code: CanonicalCode,
    /// vertex -> canonical position.
    pub labeling: Vec<usize>,
    /// vertex -> smallest vertex in its automorphism orbit.
    pub orbits: Vec<usize>,
    /// Generating set of the automorphism group (vertex -> vertex maps).
    pub generators: Vec<Vec<usize>>,
}

impl CanonicalLabeling {
    /// The vertex occupying the last canonical position.
    pub fn last_position_vertex(&self) -> Option<usize> {
        let n = self.labeling.len();
        if n == 0 {
            return None;
        }
        self.labeling.iter().position(|&p| p == n - 1)
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).code
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    let mut search = Search {
        g,
        n,
        best: None,
        best_perm: Vec::new(),
        gens: Vec::new(),
        gen_seen: HashSet::new(),
    };
    if n == 0 {
        return CanonicalLabeling {
            code: CanonicalCode {
                n: 0,
                words: Vec::new(),
            },
            labeling: Vec::new(),
            orbits: Vec::new(),
            generators: Vec::new(),
        };
    }
    search.node(vec![(0..n).collect()], &mut Vec::new());
    let orbits = orbits_of(n, &search.gens);
    CanonicalLabeling {
        code: CanonicalCode {
            n,
            words: search.best.expect("search visits at least one leaf"),
        },
        labeling: search.best_perm,
        orbits,
        generators: search.gens,
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<Vec<u64>>,
    best_perm: Vec<usize>,
    gens: Vec<Vec<usize>>,
    gen_seen: HashSet<Vec<usize>>,
}

impl Search<'_> {
    fn node(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            let mut perm = vec![0usize; self.n];
            for (pos, cell) in cells.iter().enumerate() {
                perm[cell[0]] = pos;
            }
            self.leaf(perm);
            return;
        }
        let target = cells.iter().position(|c| c.len() > 1).unwrap();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(
                cells[target]
                    .iter()
                    .copied()
                    .filter(|&u| u != v)
                    .collect(),
            );
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.node(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Is `v` in the orbit of an already-explored sibling under the subgroup
    /// generated by the discovered automorphisms that fix the prefix
    /// pointwise? Such subtrees repeat explored ones exactly.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut uf: Vec<usize> = (0..self.n).collect();
        for gen in &self.gens {
            if prefix.iter().all(|&p| gen[p] == p) {
                for (u, &img) in gen.iter().enumerate() {
                    union(&mut uf, u, img);
                }
            }
        }
        let rv = find(&mut uf, v);
        explored.iter().any(|&u| find(&mut uf, u) == rv)
    }

    fn leaf(&mut self, perm: Vec<usize>) {
        let code = code_under(self.g, &perm);
        match &self.best {
            None => {
                self.best = Some(code);
                self.best_perm = perm;
            }
            Some(best) => match code.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best = Some(code);
                    self.best_perm = perm;
                }
                std::cmp::Ordering::Equal => {
                    let mut inv = vec![0usize; self.n];
                    for (v, &p) in self.best_perm.iter().enumerate() {
                        inv[p] = v;
                    }
                    let gamma: Vec<usize> = (0..self.n).map(|u| inv[perm[u]]).collect();
                    if gamma.iter().enumerate().any(|(i, &x)| x != i)
                        && !self.gen_seen.contains(&gamma)
                    {
                        self.gen_seen.insert(gamma.clone());
                        self.gens.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

/// Upper-triangle adjacency bits of the relabeled graph, column order,
/// packed big-endian. `perm` maps vertex -> position.
fn code_under(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut inv = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut words = vec![0u64; bits.div_ceil(64)];
    let mut idx = 0;
    for q in 1..n {
        for p in 0..q {
            if g.has_edge(inv[p], inv[q]) {
                words[idx / 64] |= 1 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    words
}

/// Refine to an equitable ordered partition: repeatedly split cells by
/// neighbor counts into a splitter cell, fragments ordered by ascending
/// count. Everything here depends only on counts, so the refinement
/// commutes with graph isomorphisms.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let mask: u64 = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() <= 1 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c]
                    .iter()
                    .map(|&v| ((g.row(v) & mask).count_ones(), v))
                    .collect();
                if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                    continue;
                }
                keyed.sort_by_key(|&(k, _)| k);
                let mut frags: Vec<Vec<usize>> = Vec::new();
                for (k, v) in keyed {
                    match frags.last_mut() {
                        Some(last) if (g.row(last[0]) & mask).count_ones() == k => last.push(v),
                        _ => frags.push(vec![v]),
                    }
                }
                cells.splice(c..=c, frags);
                continue 'restart;
            }
        }
        break;
    }
}

fn orbits_of(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut uf: Vec<usize> = (0..n).collect();
    for gen in gens {
        for (u, &img) in gen.iter().enumerate() {
            union(&mut uf, u, img);
        }
    }
    // roots are orbit minima by the union rule
    (0..n).map(|v| find(&mut uf, v)).collect()
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        // keep the smaller root so orbit ids are minima
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        uf[hi] = lo;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        permute(&mut items, 0, &mut out);
        out
    }

    fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }

    #[test]
    fn code_is_invariant_under_all_relabelings() {
        let g = families::path(3);
        let codes: HashSet<CanonicalCode> = all_permutations(3)
            .iter()
            .map(|p| canonical_form(&g.relabel(p)))
            .collect();
        assert_eq!(codes.len(), 1);

        let lollipop = crate::FamilySpec::Lollipop(6, 3).build().unwrap();
        let codes: HashSet<CanonicalCode> = all_permutations(6)
            .iter()
            .map(|p| canonical_form(&lollipop.relabel(p)))
            .collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn different_graphs_have_different_codes() {
        let k3 = families::complete(3);
        let p3 = families::path(3);
        assert_ne!(canonical_form(&k3), canonical_form(&p3));

        let a = families::disjoint_union(&[
            families::cycle(4),
            families::path(3),
            families::path(3),
        ])
        .unwrap();
        let b = families::disjoint_union(&[
            families::cycle(6),
            families::complete(2),
            families::complete(2),
        ])
        .unwrap();
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn orbit_structure_of_known_graphs() {
        // star: center fixed, leaves one orbit
        let lab = canonical_labeling(&families::star(5));
        assert_eq!(lab.orbits[0], 0);
        assert!((1..5).all(|v| lab.orbits[v] == lab.orbits[1]));
        assert!(lab.orbits[1] != 0);

        // cycle: vertex-transitive
        let lab = canonical_labeling(&families::cycle(7));
        assert!((0..7).all(|v| lab.orbits[v] == 0));

        // path: endpoints pair up, mirror-symmetric interior
        let lab = canonical_labeling(&families::path(4));
        assert_eq!(lab.orbits[0], lab.orbits[3]);
        assert_eq!(lab.orbits[1], lab.orbits[2]);
        assert_ne!(lab.orbits[0], lab.orbits[1]);
    }

    #[test]
    fn highly_symmetric_graphs_stay_cheap() {
        // would be 10! leaves without automorphism pruning
        let e10 = families::empty(10);
        let lab = canonical_labeling(&e10);
        assert!((0..10).all(|v| lab.orbits[v] == 0));
        let k10 = families::complete(10);
        let lab = canonical_labeling(&k10);
        assert!((0..10).all(|v| lab.orbits[v] == 0));
    }

    #[test]
    fn labeling_reproduces_code() {
        let g = crate::FamilySpec::Kite(6, 4).build().unwrap();
        let lab = canonical_labeling(&g);
        let relabeled = g.relabel(&lab.labeling);
        // the identity labeling of the canonical form gives the same code
        let identity: Vec<usize> = (0..6).collect();
        assert_eq!(code_under(&relabeled, &identity), {
            let CanonicalCode { words, .. } = lab.code.clone();
            words
        });
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = families::complete_bipartite(2, 3);
        let lab = canonical_labeling(&g);
        assert!(!lab.generators.is_empty());
        for gen in &lab.generators {
            assert!(g.relabel(gen) == g, "generator is not an automorphism");
        }
    }
}
