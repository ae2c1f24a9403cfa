//! Cospectral-mate hunting over exhaustive enumerations, spectral
//! determination verdicts, the known-determination registry, and the
//! harness for the union-with-independent-edges theorems.

mod registry;
mod theorems;

pub use registry::{registry_lookup, ClaimMatch, REGISTRY};
pub use theorems::{
    union_with_edges, verify_theorem, HypothesisCheck, TheoremId, TheoremInstance, TheoremReport,
    INSTANCE_TABLE,
};

use crate::enumerate::Enumerator;
use crate::graph::{Graph, StructuralProfile};
use crate::graph6::encode_graph6;
use crate::spectra::{charpoly, CharPoly, MatrixKind};
use crate::{Error, Result};

/// The quantities a spectrum determines cheaply (per matrix kind), used to
/// discard candidates before any characteristic polynomial is computed.
/// A `false` answer is always sound: it certifies non-cospectrality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectralDigest {
    pub n: usize,
    pub m: usize,
    /// trace of Q^2 = trace of L^2.
    pub t2: u64,
    /// trace of Q^3.
    pub t3_q: u64,
    /// trace of L^3.
    pub t3_l: u64,
    /// trace of A^3 (six times the triangle count).
    pub t3_a: u64,
    pub components: usize,
    pub bipartite_components: usize,
    /// All degrees equal. Spectrum-determined for every kind: the largest
    /// adjacency eigenvalue meets the average degree exactly when the
    /// all-ones vector is an eigenvector.
    pub regular: bool,
}

impl SpectralDigest {
    pub fn of(g: &Graph) -> SpectralDigest {
        Self::from_profile(&g.profile())
    }

    pub fn from_profile(p: &StructuralProfile) -> SpectralDigest {
        let d2 = p.degree_square_sum();
        let d3 = p.degree_cube_sum();
        let six_t = 6 * p.triangles as u64;
        SpectralDigest {
            n: p.n,
            m: p.m,
            t2: 2 * p.m as u64 + d2,
            t3_q: six_t + 3 * d2 + d3,
            t3_l: 3 * d2 + d3 - six_t,
            t3_a: six_t,
            components: p.components,
            bipartite_components: p.bipartite_components,
            regular: p.degrees.windows(2).all(|w| w[0] == w[1]),
        }
    }

    /// Do two graphs agree on everything the `kind`-spectrum pins down?
    pub fn compatible(&self, other: &SpectralDigest, kind: MatrixKind) -> bool {
        if self.n != other.n || self.m != other.m {
            return false;
        }
        match kind {
            MatrixKind::Q => {
                self.t2 == other.t2
                    && self.t3_q == other.t3_q
                    && self.bipartite_components == other.bipartite_components
            }
            MatrixKind::L => {
                self.t2 == other.t2
                    && self.t3_l == other.t3_l
                    && self.components == other.components
            }
            MatrixKind::A => self.t3_a == other.t3_a && self.regular == other.regular,
        }
    }
}

/// True only if `candidate` matches `target` on the spectrum-determined
/// counting invariants for the chosen matrix; `false` implies the two are
/// not cospectral.
pub fn prefilter(target: &Graph, candidate: &Graph, kind: MatrixKind) -> bool {
    SpectralDigest::of(target).compatible(&SpectralDigest::of(candidate), kind)
}

/// Outcome of an exhaustive mate hunt over a stated scope.
#[derive(Debug, Clone)]
pub struct MateReport {
    pub target_graph6: String,
    pub kind: MatrixKind,
    pub order: usize,
    pub scope: String,
    pub candidates_examined: usize,
    pub prefilter_survivors: usize,
    /// Non-isomorphic graphs with the identical spectrum, as graph6, in
    /// canonical-code order.
    pub mates: Vec<String>,
}

impl MateReport {
    pub fn determined(&self) -> bool {
        self.mates.is_empty()
    }
}

/// Knobs for a hunt. The defaults enumerate only candidates with the
/// target's edge count (sound: cospectral graphs share it) and prefilter
/// before comparing polynomials.
#[derive(Debug, Clone)]
pub struct HuntConfig {
    /// Restrict enumeration to the target's edge count.
    pub edge_filter: bool,
    /// Apply the counting-invariant prefilter before exact comparison.
    pub use_prefilter: bool,
    /// Worker count; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for HuntConfig {
    fn default() -> Self {
        HuntConfig {
            edge_filter: true,
            use_prefilter: true,
            jobs: None,
        }
    }
}

impl HuntConfig {
    /// Full scan: no edge filter, no prefilter; every class at the order is
    /// compared by exact polynomial. Used to validate that the prefilter is
    /// a pure optimization.
    pub fn full_scan() -> Self {
        HuntConfig {
            edge_filter: false,
            use_prefilter: false,
            jobs: None,
        }
    }
}

/// Exhaustively hunt for non-isomorphic graphs with the same
/// `kind`-spectrum as `target` among all isomorphism classes at the
/// target's order.
pub fn hunt_mates(target: &Graph, kind: MatrixKind) -> Result<MateReport> {
    hunt_mates_with(target, kind, &HuntConfig::default())
}

pub fn hunt_mates_with(target: &Graph, kind: MatrixKind, config: &HuntConfig) -> Result<MateReport> {
    let n = target.order();
    let mut enumerator = Enumerator::new(n)?;
    if config.edge_filter {
        enumerator = enumerator.edges_exactly(target.size());
    }
    let target_poly = charpoly(target, kind);
    let target_digest = SpectralDigest::of(target);
    let target_code = crate::canon::canonical_form(target);

    #[derive(Clone)]
    enum Outcome {
        Rejected,
        Survived,
        Mate(Graph),
    }

    let outcomes = enumerator.par_collect_filtered(config.jobs, |g| {
        if config.use_prefilter
            && !target_digest.compatible(&SpectralDigest::of(g), kind)
        {
            return Some(Outcome::Rejected);
        }
        if charpoly(g, kind) == target_poly && crate::canon::canonical_form(g) != target_code {
            Some(Outcome::Mate(g.clone()))
        } else {
            Some(Outcome::Survived)
        }
    });

    let candidates_examined = outcomes.len();
    let mut prefilter_survivors = 0;
    let mut mate_graphs = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Rejected => {}
            Outcome::Survived => prefilter_survivors += 1,
            Outcome::Mate(g) => {
                prefilter_survivors += 1;
                mate_graphs.push(g);
            }
        }
    }
    finish_report(target, kind, target_poly, candidates_examined, prefilter_survivors, mate_graphs, {
        let mut scope = format!("order={n}");
        if config.edge_filter {
            scope.push_str(&format!(";edges={}", target.size()));
        } else {
            scope.push_str(";edges=all");
        }
        scope.push_str(if config.use_prefilter {
            ";prefilter=on"
        } else {
            ";prefilter=off"
        });
        scope
    })
}

/// A pre-enumerated candidate set with digests, reusable across many hunts
/// at the same order.
pub struct CandidatePool {
    order: usize,
    entries: Vec<(Graph, SpectralDigest)>,
}

impl CandidatePool {
    pub fn build(order: usize) -> Result<CandidatePool> {
        let graphs = Enumerator::new(order)?.collect();
        Ok(Self::from_graphs(order, graphs))
    }

    pub fn from_graphs(order: usize, graphs: Vec<Graph>) -> CandidatePool {
        let entries = graphs
            .into_iter()
            .map(|g| {
                let d = SpectralDigest::of(&g);
                (g, d)
            })
            .collect();
        CandidatePool { order, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Hunt against a prebuilt pool instead of enumerating afresh.
pub fn hunt_in_pool(target: &Graph, kind: MatrixKind, pool: &CandidatePool) -> MateReport {
    assert_eq!(target.order(), pool.order, "pool order mismatch");
    let target_poly = charpoly(target, kind);
    let target_digest = SpectralDigest::of(target);
    let target_code = crate::canon::canonical_form(target);
    let mut survivors = 0;
    let mut mate_graphs = Vec::new();
    for (g, digest) in &pool.entries {
        if !target_digest.compatible(digest, kind) {
            continue;
        }
        survivors += 1;
        if charpoly(g, kind) == target_poly && crate::canon::canonical_form(g) != target_code {
            mate_graphs.push(g.clone());
        }
    }
    finish_report(
        target,
        kind,
        target_poly,
        pool.len(),
        survivors,
        mate_graphs,
        format!("order={};edges=all;prefilter=on;pool", pool.order),
    )
    .expect("pool targets are within scope")
}

fn finish_report(
    target: &Graph,
    kind: MatrixKind,
    target_poly: CharPoly,
    candidates_examined: usize,
    prefilter_survivors: usize,
    mut mate_graphs: Vec<Graph>,
    scope: String,
) -> Result<MateReport> {
    // soundness re-verification: exact cospectrality, non-isomorphic to the
    // target and to each other
    let mut codes = std::collections::HashSet::new();
    for g in &mate_graphs {
        assert!(
            charpoly(g, kind) == target_poly,
            "mate fails cospectrality re-verification"
        );
        assert!(
            !g.is_isomorphic(target),
            "mate is isomorphic to the target"
        );
        assert!(
            codes.insert(crate::canon::canonical_form(g)),
            "duplicate mate class"
        );
    }
    // report order is by canonical code, independent of worker scheduling
    mate_graphs.sort_by_key(crate::canon::canonical_form);
    let mates: Vec<String> = mate_graphs
        .iter()
        .map(|g| encode_graph6(g).expect("mates fit graph6"))
        .collect();
    Ok(MateReport {
        target_graph6: encode_graph6(target)?,
        kind,
        order: target.order(),
        scope,
        candidates_examined,
        prefilter_survivors,
        mates,
    })
}

/// Spectral-determination verdict over an explicit scope.
#[derive(Debug, Clone)]
pub enum DqsVerdict {
    /// No mate exists in the full enumeration at the target's order. Since
    /// cospectral graphs share their order, this settles the question.
    DeterminedInScope(MateReport),
    /// At least one witness mate exists.
    NotDetermined(MateReport),
    /// The order exceeds the exhaustive cap; nothing is claimed.
    OutOfScope { order: usize },
}

impl DqsVerdict {
    pub fn is_determined(&self) -> bool {
        matches!(self, DqsVerdict::DeterminedInScope(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            DqsVerdict::DeterminedInScope(_) => "determined-in-scope",
            DqsVerdict::NotDetermined(_) => "not-determined",
            DqsVerdict::OutOfScope { .. } => "out-of-scope",
        }
    }

    pub fn report(&self) -> Option<&MateReport> {
        match self {
            DqsVerdict::DeterminedInScope(r) | DqsVerdict::NotDetermined(r) => Some(r),
            DqsVerdict::OutOfScope { .. } => None,
        }
    }
}

/// Decide whether `target` is determined by its `kind`-spectrum, by
/// exhaustive search at its order.
pub fn verify_dqs(target: &Graph, kind: MatrixKind) -> DqsVerdict {
    verify_dqs_with(target, kind, &HuntConfig::default())
}

pub fn verify_dqs_with(target: &Graph, kind: MatrixKind, config: &HuntConfig) -> DqsVerdict {
    match hunt_mates_with(target, kind, config) {
        Ok(report) if report.determined() => DqsVerdict::DeterminedInScope(report),
        Ok(report) => DqsVerdict::NotDetermined(report),
        Err(Error::Scope { requested, .. }) => DqsVerdict::OutOfScope { order: requested },
        Err(e) => unreachable!("hunt failed unexpectedly: {e}"),
    }
}
