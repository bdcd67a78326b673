//! Greene-Kleitman invariants of weighted acyclic digraphs.
//!
//! For a DAG with nonnegative vertex weights, `M_l` is the maximum total
//! weight of the union of supports of `l` paths (each vertex counted once).
//! The difference sequence `(M_l - M_{l-1})` is weakly decreasing and forms
//! an integer partition whose length is the maximal antichain size.
//!
//! Two independent routes are provided: a min-cost-flow solver
//! ([`max_weight_paths`], [`gk_invariant`]) and a brute-force oracle over
//! maximal paths ([`gk_bruteforce`]). [`antichain_width`] is computed by a
//! third route (reachability closure plus bipartite matching) so the three
//! can cross-check each other.

mod brute;
mod flow;

use std::collections::BTreeSet;

use thiserror::Error;

pub use brute::maximal_paths;

/// Errors raised by graph construction and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),
    #[error("graph contains a cycle: {}", format_cycle(.0))]
    Cycle(Vec<usize>),
    #[error("total vertex weight overflows the solver's integer range")]
    WeightOverflow,
    #[error("path step ({0},{1}) is not an arc")]
    NotAnArc(usize, usize),
    #[error("path tuple contains an empty path")]
    EmptyPath,
    #[error("input too large for the brute-force oracle: {0}")]
    Capacity(String),
}

fn format_cycle(cycle: &[usize]) -> String {
    let mut s = String::new();
    for (i, v) in cycle.iter().enumerate() {
        if i > 0 {
            s.push_str(" -> ");
        }
        s.push_str(&v.to_string());
    }
    s
}

/// A finite acyclic digraph with nonnegative integer vertex weights.
///
/// Construction validates everything the solvers rely on: arc ids in range,
/// no self-loops, no duplicate arcs, acyclicity (a witness cycle is reported
/// otherwise) and a total weight that fits the solver's arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDag {
    weights: Vec<u64>,
    arcs: Vec<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl WeightedDag {
    pub fn new(weights: Vec<u64>, arcs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let n = weights.len();
        let mut seen = BTreeSet::new();
        let mut succ = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateArc(u, v));
            }
            succ[u].push(v);
        }
        for list in &mut succ {
            list.sort_unstable();
        }
        let total: u128 = weights.iter().map(|&w| w as u128).sum();
        if total > i64::MAX as u128 / 4 {
            return Err(GraphError::WeightOverflow);
        }
        let topo = toposort(n, &succ)?;
        Ok(WeightedDag {
            weights,
            arcs,
            succ,
            topo,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Successors of `v`, sorted ascending.
    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.succ[u].binary_search(&v).is_ok()
    }

    /// A topological order fixed at construction time.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }
}

/// Kahn's algorithm; on failure returns a witness cycle extracted from the
/// leftover subgraph.
fn toposort(n: usize, succ: &[Vec<usize>]) -> Result<Vec<usize>, GraphError> {
    let mut indeg = vec![0usize; n];
    for list in succ {
        for &v in list {
            indeg[v] += 1;
        }
    }
    let mut queue: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&v) = queue.iter().next() {
        queue.remove(&v);
        order.push(v);
        for &u in &succ[v] {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                queue.insert(u);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Walk inside the remaining subgraph until a vertex repeats.
    let stuck: Vec<usize> = (0..n).filter(|&v| indeg[v] > 0).collect();
    let mut pos = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut v = stuck[0];
    loop {
        if pos[v] != usize::MAX {
            return Err(GraphError::Cycle(walk[pos[v]..].to_vec()));
        }
        pos[v] = walk.len();
        walk.push(v);
        v = *succ[v]
            .iter()
            .find(|&&u| indeg[u] > 0)
            .expect("every stuck vertex keeps a stuck successor");
    }
}

/// A tuple of paths; the support is the union of the vertices used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTuple {
    paths: Vec<Vec<usize>>,
}

impl PathTuple {
    /// Validates every path against `dag`: nonempty, consecutive pairs arcs.
    pub fn new(dag: &WeightedDag, paths: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        for path in &paths {
            check_path(dag, path)?;
        }
        Ok(PathTuple { paths })
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Union of all vertices used, ascending.
    pub fn support(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.paths.iter().flatten().copied().collect();
        set.into_iter().collect()
    }
}

fn check_path(dag: &WeightedDag, path: &[usize]) -> Result<(), GraphError> {
    if path.is_empty() {
        return Err(GraphError::EmptyPath);
    }
    for &v in path {
        if v >= dag.vertex_count() {
            return Err(GraphError::VertexOutOfRange(v));
        }
    }
    for w in path.windows(2) {
        if !dag.has_arc(w[0], w[1]) {
            return Err(GraphError::NotAnArc(w[0], w[1]));
        }
    }
    Ok(())
}

/// Total weight of the support of `tuple`; each vertex counts once no matter
/// how many paths visit it.
pub fn weight_of(dag: &WeightedDag, tuple: &PathTuple) -> Result<u64, GraphError> {
    for path in tuple.paths() {
        check_path(dag, path)?;
    }
    Ok(tuple.support().iter().map(|&v| dag.weight(v)).sum())
}

/// The sequence `M_0, M_1, .., M_count` of maximum support weights.
pub fn max_weight_profile(dag: &WeightedDag, count: usize) -> Vec<u64> {
    flow::max_gain_profile(dag, count).profile
}

/// `M_l`: the maximum support weight over `l`-tuples of paths.
pub fn max_weight_paths(dag: &WeightedDag, ell: usize) -> u64 {
    *max_weight_profile(dag, ell).last().unwrap()
}

/// The Greene-Kleitman invariant with per-level prefix maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkResult {
    prefix_maxima: Vec<u64>,
    parts: Vec<u64>,
    witnesses: Option<Vec<PathTuple>>,
}

impl GkResult {
    /// `M_0 = 0, M_1, .., M_w` where `w` is the antichain width.
    pub fn prefix_maxima(&self) -> &[u64] {
        &self.prefix_maxima
    }

    /// The difference sequence, one entry per level up to the width.
    /// Trailing entries may be zero when some vertex weights vanish.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// 1-based part accessor, total: reads 0 beyond the width.
    pub fn part(&self, ell: usize) -> u64 {
        if ell == 0 || ell > self.parts.len() {
            0
        } else {
            self.parts[ell - 1]
        }
    }

    /// The antichain width of the underlying graph.
    pub fn width(&self) -> usize {
        self.parts.len()
    }

    /// One optimal tuple per level, when requested.
    pub fn witnesses(&self) -> Option<&[PathTuple]> {
        self.witnesses.as_deref()
    }
}

/// The Greene-Kleitman invariant of `dag`, truncated at the antichain width.
pub fn gk_invariant(dag: &WeightedDag) -> GkResult {
    gk_invariant_inner(dag, false)
}

/// Same as [`gk_invariant`] but also extracts one optimal path tuple per level.
pub fn gk_invariant_with_witnesses(dag: &WeightedDag) -> GkResult {
    gk_invariant_inner(dag, true)
}

fn gk_invariant_inner(dag: &WeightedDag, want_witnesses: bool) -> GkResult {
    let width = antichain_width(dag);
    let run = flow::max_gain_profile_full(dag, width, want_witnesses);
    let parts: Vec<u64> = run.profile.windows(2).map(|w| w[1] - w[0]).collect();
    debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
    debug_assert_eq!(run.profile.last().copied().unwrap_or(0), dag.total_weight());
    GkResult {
        prefix_maxima: run.profile,
        parts,
        witnesses: run.witnesses,
    }
}

/// Exact `M_0..=M_l_max` by enumerating multisets of maximal paths.
///
/// Guarded: refuses graphs with more than 14 vertices or more than 200
/// maximal paths (and bails out if the multiset space still explodes).
pub fn gk_bruteforce(dag: &WeightedDag, ell_max: usize) -> Result<Vec<u64>, GraphError> {
    brute::profile(dag, ell_max)
}

/// Maximum size of a set of vertices with no directed path between any two.
///
/// Computed via the reachability closure and a minimum chain cover by
/// bipartite matching, independently of the flow solver.
pub fn antichain_width(dag: &WeightedDag) -> usize {
    let n = dag.vertex_count();
    if n == 0 {
        return 0;
    }
    let reach = reachability(dag);

    // Dilworth via Fulkerson: width = n - max matching in the bipartite
    // graph whose edges are the strict reachability pairs.
    let mut matched_to: Vec<Option<usize>> = vec![None; n];
    let mut matching = 0;
    let mut visited = vec![false; n];
    for u in 0..n {
        visited.iter_mut().for_each(|x| *x = false);
        if kuhn_augment(u, &reach, &mut matched_to, &mut visited) {
            matching += 1;
        }
    }
    n - matching
}

/// Bit matrix of strict reachability: `reach[u]` has bit `v` set when a
/// nontrivial path `u -> v` exists.
fn reachability(dag: &WeightedDag) -> Vec<Vec<u64>> {
    let n = dag.vertex_count();
    let words = n.div_ceil(64);
    let mut reach = vec![vec![0u64; words]; n];
    for &v in dag.topological_order().iter().rev() {
        let mut row = vec![0u64; words];
        for &s in dag.successors(v) {
            row[s / 64] |= 1 << (s % 64);
            for (w, r) in row.iter_mut().zip(&reach[s]) {
                *w |= *r;
            }
        }
        reach[v] = row;
    }
    reach
}

fn kuhn_augment(
    u: usize,
    reach: &[Vec<u64>],
    matched_to: &mut Vec<Option<usize>>,
    visited: &mut Vec<bool>,
) -> bool {
    let n = matched_to.len();
    for v in 0..n {
        if reach[u][v / 64] >> (v % 64) & 1 == 1 && !visited[v] {
            visited[v] = true;
            if matched_to[v].is_none()
                || kuhn_augment(matched_to[v].unwrap(), reach, matched_to, visited)
            {
                matched_to[v] = Some(u);
                return true;
            }
        }
    }
    false
}

/// Exhaustive antichain width for cross-checks; only for small graphs.
pub fn antichain_width_bruteforce(dag: &WeightedDag) -> Result<usize, GraphError> {
    let n = dag.vertex_count();
    if n > 20 {
        return Err(GraphError::Capacity(format!(
            "{} vertices exceed the subset-enumeration limit of 20",
            n
        )));
    }
    let reach = reachability(dag);
    let comparable = |u: usize, v: usize| {
        reach[u][v / 64] >> (v % 64) & 1 == 1 || reach[v][u / 64] >> (u % 64) & 1 == 1
    };
    let mut best = 0usize;
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        let ok = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| !comparable(u, v)));
        if ok {
            best = members.len();
        }
    }
    Ok(best)
}

#[cfg(test)]
pub(crate) fn sample_dag() -> WeightedDag {
    // 11 vertices, 14 arcs; zero-based ids.
    WeightedDag::new(
        vec![1, 2, 3, 2, 2, 1, 0, 4, 2, 5, 1],
        vec![
            (0, 2),
            (0, 3),
            (0, 7),
            (1, 4),
            (1, 5),
            (2, 6),
            (3, 9),
            (4, 8),
            (5, 8),
            (6, 9),
            (7, 9),
            (7, 10),
            (8, 10),
            (4, 7),
        ],
    )
    .unwrap()
}
