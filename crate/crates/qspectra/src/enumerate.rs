//! Isomorphism-free generation of all simple graphs of a given order by
//! canonical construction paths: a vertex extension is kept only when the
//! new vertex sits in the automorphism orbit of the canonical last vertex,
//! so each isomorphism class is produced from exactly one parent and no
//! global seen-set is needed.
//!
//! Exhaustive cost at a glance (classes per order): 1: 1, 2: 2, 3: 4,
//! 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168.
//! Orders through 9 are desk-scale; 10 is a budgeted run, minutes on a
//! multicore box via [`Enumerator::par_collect_filtered`].

use crate::canon::canonical_labeling;
use crate::graph::Graph;
use crate::{Error, Result};
use std::collections::HashSet;

/// Largest order `generate` will enumerate exhaustively.
pub const EXHAUSTIVE_CAP: usize = 10;

/// Configurable exhaustive generator for one order, optionally restricted
/// to an edge-count range. Yields exactly one representative per
/// isomorphism class, in a deterministic order (children of each parent
/// sorted by canonical code).
#[derive(Debug, Clone)]
pub struct Enumerator {
    n: usize,
    min_edges: usize,
    max_edges: usize,
}

impl Enumerator {
    pub fn new(n: usize) -> Result<Enumerator> {
        if n > EXHAUSTIVE_CAP {
            return Err(Error::Scope {
                requested: n,
                cap: EXHAUSTIVE_CAP,
            });
        }
        Ok(Enumerator {
            n,
            min_edges: 0,
            max_edges: n * n.saturating_sub(1) / 2,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Keep only graphs with exactly `m` edges.
    pub fn edges_exactly(mut self, m: usize) -> Enumerator {
        self.min_edges = m;
        self.max_edges = m;
        self
    }

    /// Keep only graphs whose edge count lies in `lo..=hi`.
    pub fn edge_range(mut self, lo: usize, hi: usize) -> Enumerator {
        self.min_edges = lo;
        self.max_edges = hi;
        self
    }

    /// Sequential run; `f` sees each representative exactly once.
    pub fn run(&self, mut f: impl FnMut(&Graph)) {
        if self.n == 0 {
            if self.min_edges == 0 {
                f(&Graph::empty(0));
            }
            return;
        }
        self.dfs(&Graph::empty(1), 0, &mut f);
    }

    pub fn collect(&self) -> Vec<Graph> {
        let mut out = Vec::new();
        self.run(|g| out.push(g.clone()));
        out
    }

    pub fn collect_where(&self, pred: impl Fn(&Graph) -> bool) -> Vec<Graph> {
        let mut out = Vec::new();
        self.run(|g| {
            if pred(g) {
                out.push(g.clone());
            }
        });
        out
    }

    pub fn count(&self) -> usize {
        let mut c = 0;
        self.run(|_| c += 1);
        c
    }

    /// Parallel run: the generation tree is split at an intermediate order
    /// and the subtrees are explored independently. The result order (and
    /// multiset) is independent of the worker count.
    pub fn par_collect_filtered<T: Send>(
        &self,
        jobs: Option<usize>,
        map: impl Fn(&Graph) -> Option<T> + Sync,
    ) -> Vec<T> {
        use rayon::prelude::*;

        let split_order = self.n.saturating_sub(2).max(1);
        if self.n == 0 || split_order >= self.n {
            let mut out = Vec::new();
            self.run(|g| out.extend(map(g)));
            return out;
        }
        // roots: every class at the split order that can still reach the
        // edge window
        let future = self.max_added_edges(split_order);
        let roots = Enumerator {
            n: split_order,
            min_edges: self.min_edges.saturating_sub(future),
            max_edges: self.max_edges,
        }
        .collect();

        let explore = |root: &Graph| {
            let mut local = Vec::new();
            self.dfs(root, root.size(), &mut |g: &Graph| local.extend(map(g)));
            local
        };
        let merged: Vec<Vec<T>> = match jobs {
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .expect("thread pool")
                .install(|| roots.par_iter().map(explore).collect()),
            None => roots.par_iter().map(explore).collect(),
        };
        merged.into_iter().flatten().collect()
    }

    /// Edges still addable when growing from order `k` to the target.
    fn max_added_edges(&self, k: usize) -> usize {
        (self.n * self.n.saturating_sub(1) - k * k.saturating_sub(1)) / 2
    }

    fn dfs(&self, g: &Graph, edges: usize, f: &mut impl FnMut(&Graph)) {
        let k = g.order();
        if k == self.n {
            if (self.min_edges..=self.max_edges).contains(&edges) {
                f(g);
            }
            return;
        }
        let future_after_child = self.max_added_edges(k + 1);
        let mut accepted: Vec<(crate::canon::CanonicalCode, Graph)> = Vec::new();
        let mut seen = HashSet::new();
        let mut base = Graph::empty(k + 1);
        for (u, v) in g.edges() {
            base.add_edge(u, v);
        }
        for subset in 0u64..(1 << k) {
            let added = subset.count_ones() as usize;
            let child_edges = edges + added;
            if child_edges > self.max_edges
                || child_edges + future_after_child < self.min_edges
            {
                continue;
            }
            let mut child = base.clone();
            for u in crate::graph::BitIter(subset) {
                child.add_edge(u, k);
            }
            let lab = canonical_labeling(&child);
            let last = lab
                .last_position_vertex()
                .expect("nonempty child");
            // canonical-augmentation acceptance: the new vertex must be
            // interchangeable with the canonical deletion vertex
            if !lab.same_orbit(last, k) {
                continue;
            }
            if seen.insert(lab.code.clone()) {
                accepted.push((lab.code, child));
            }
        }
        accepted.sort_by(|a, b| a.0.cmp(&b.0));
        for (_, child) in accepted {
            let e = child.size();
            self.dfs(&child, e, f);
        }
    }
}

/// Convenience wrapper: all graphs of order `n`, optionally filtered to an
/// exact edge count.
pub fn generate(n: usize, edges: Option<usize>) -> Result<Vec<Graph>> {
    let mut e = Enumerator::new(n)?;
    if let Some(m) = edges {
        e = e.edges_exactly(m);
    }
    Ok(e.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    /// Independent oracle: enumerate all labeled graphs on `n` vertices and
    /// dedupe by the minimum adjacency encoding over all permutations.
    pub(crate) fn labeled_dedupe_count(n: usize) -> usize {
        let mut perms = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        permutations(&mut items, 0, &mut perms);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let mut classes = HashSet::new();
        for bits in 0u64..(1 << pairs.len()) {
            let mut g = Graph::empty(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            let min_code = perms
                .iter()
                .map(|p| {
                    let h = g.relabel(p);
                    let mut code: u64 = 0;
                    for (i, &(u, v)) in pairs.iter().enumerate() {
                        if h.has_edge(u, v) {
                            code |= 1 << i;
                        }
                    }
                    code
                })
                .min()
                .unwrap_or(0);
            classes.insert(min_code);
        }
        classes.len()
    }

    fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permutations(items, k + 1, out);
            items.swap(k, i);
        }
    }

    #[test]
    fn counts_match_labeled_dedupe_oracle() {
        for n in 1..=5 {
            let expected = labeled_dedupe_count(n);
            assert_eq!(generate(n, None).unwrap().len(), expected, "order {n}");
        }
    }

    #[test]
    fn single_vertex() {
        assert_eq!(generate(1, None).unwrap().len(), 1);
    }

    #[test]
    fn edge_filtered_counts_sum_to_total() {
        let n = 5;
        let total = generate(n, None).unwrap().len();
        let max = n * (n - 1) / 2;
        let by_edges: Vec<usize> = (0..=max)
            .map(|m| generate(n, Some(m)).unwrap().len())
            .collect();
        assert_eq!(by_edges.iter().sum::<usize>(), total);
        // complement bijection
        for m in 0..=max {
            assert_eq!(by_edges[m], by_edges[max - m]);
        }
    }

    #[test]
    fn edge_filter_agrees_with_post_filter() {
        let n = 5;
        for m in [4usize, 6] {
            let filtered = generate(n, Some(m)).unwrap();
            let post: Vec<Graph> = generate(n, None)
                .unwrap()
                .into_iter()
                .filter(|g| g.size() == m)
                .collect();
            assert_eq!(filtered.len(), post.len());
        }
    }

    #[test]
    fn predicate_filter() {
        let connected = Enumerator::new(5)
            .unwrap()
            .collect_where(|g| g.is_connected());
        assert_eq!(connected.len(), 21);
    }

    #[test]
    fn all_yields_are_pairwise_non_isomorphic() {
        let gs = generate(6, None).unwrap();
        let codes: HashSet<_> = gs.iter().map(canonical_form).collect();
        assert_eq!(codes.len(), gs.len());
    }

    #[test]
    fn parallel_matches_sequential() {
        let e = Enumerator::new(6).unwrap();
        let seq: Vec<_> = e.collect().iter().map(canonical_form).collect();
        let par: Vec<_> = e
            .par_collect_filtered(Some(3), |g| Some(canonical_form(g)))
            .into_iter()
            .collect();
        assert_eq!(seq, par);
    }

    #[test]
    fn scope_error_above_cap() {
        assert!(matches!(
            Enumerator::new(EXHAUSTIVE_CAP + 1),
            Err(Error::Scope { .. })
        ));
    }
}
