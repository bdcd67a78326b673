//! Brute-force oracle: enumerate multisets of maximal paths.
//!
//! Because weights are nonnegative, extending a path only grows its support,
//! so restricting the search to maximal (source-to-sink) paths never lowers
//! the optimum. Supports are bitmasks; the path list is computed once and
//! reused for every level.

use super::{GraphError, WeightedDag};

const MAX_VERTICES: usize = 14;
const MAX_PATHS: usize = 200;
const MAX_COMBINATIONS: u128 = 20_000_000;

/// All maximal paths (source to sink), in lexicographic vertex order.
pub fn maximal_paths(dag: &WeightedDag) -> Vec<Vec<usize>> {
    let n = dag.vertex_count();
    let mut indeg = vec![0usize; n];
    for &(_, v) in dag.arcs() {
        indeg[v] += 1;
    }
    let mut paths = Vec::new();
    let mut stack = Vec::new();
    for source in (0..n).filter(|&v| indeg[v] == 0) {
        stack.push(source);
        extend(dag, &mut stack, &mut paths);
        stack.pop();
    }
    paths
}

fn extend(dag: &WeightedDag, stack: &mut Vec<usize>, paths: &mut Vec<Vec<usize>>) {
    let v = *stack.last().unwrap();
    if dag.successors(v).is_empty() {
        paths.push(stack.clone());
        return;
    }
    for &u in dag.successors(v) {
        stack.push(u);
        extend(dag, stack, paths);
        stack.pop();
    }
}

pub(super) fn profile(dag: &WeightedDag, ell_max: usize) -> Result<Vec<u64>, GraphError> {
    let n = dag.vertex_count();
    if n > MAX_VERTICES {
        return Err(GraphError::Capacity(format!(
            "{} vertices exceed the oracle limit of {}",
            n, MAX_VERTICES
        )));
    }
    let paths = maximal_paths(dag);
    if paths.len() > MAX_PATHS {
        return Err(GraphError::Capacity(format!(
            "{} maximal paths exceed the oracle limit of {}",
            paths.len(),
            MAX_PATHS
        )));
    }

    // Distinct support masks are all that matter for suprema of unions.
    let mut masks: Vec<u64> = paths
        .iter()
        .map(|p| p.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    masks.sort_unstable();
    masks.dedup();

    let weight_of_mask = |mask: u64| -> u64 {
        (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| dag.weight(v))
            .sum()
    };

    // Suffix maxima of single-mask weights, for a cheap upper bound.
    let weights: Vec<u64> = masks.iter().map(|&m| weight_of_mask(m)).collect();
    let mut suffix_best = vec![0u64; masks.len() + 1];
    for i in (0..masks.len()).rev() {
        suffix_best[i] = suffix_best[i + 1].max(weights[i]);
    }

    let mut out = vec![0u64];
    for ell in 1..=ell_max {
        if masks.is_empty() {
            out.push(0);
            continue;
        }
        if combinations(masks.len() as u128, ell as u128) > MAX_COMBINATIONS {
            return Err(GraphError::Capacity(format!(
                "multisets of {} paths at level {} exceed the enumeration budget",
                masks.len(),
                ell
            )));
        }
        let mut best = 0u64;
        search(
            &masks,
            &suffix_best,
            &weight_of_mask,
            0,
            ell,
            0,
            &mut best,
        );
        out.push(best);
    }
    Ok(out)
}

fn combinations(p: u128, ell: u128) -> u128 {
    // C(p + ell - 1, ell), saturating.
    let mut acc: u128 = 1;
    for i in 0..ell {
        acc = acc.saturating_mul(p + ell - 1 - i);
        acc /= i + 1;
        if acc > MAX_COMBINATIONS * 1000 {
            return u128::MAX;
        }
    }
    acc
}

fn search(
    masks: &[u64],
    suffix_best: &[u64],
    weight_of_mask: &impl Fn(u64) -> u64,
    start: usize,
    slots: usize,
    union: u64,
    best: &mut u64,
) {
    let current = weight_of_mask(union);
    if slots == 0 {
        *best = (*best).max(current);
        return;
    }
    if current + slots as u64 * suffix_best[start] <= *best {
        return;
    }
    for i in start..masks.len() {
        search(
            masks,
            suffix_best,
            weight_of_mask,
            i,
            slots - 1,
            union | masks[i],
            best,
        );
    }
}
