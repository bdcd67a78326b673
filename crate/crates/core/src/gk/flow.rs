//! Max-gain flow formulation of the path-tuple optimum.
//!
//! Each vertex `v` is split into `in(v) -> out(v)` with two parallel arcs: one
//! of capacity 1 carrying the gain `f(v)` and one of capacity `l-1` with gain
//! zero, so a vertex's weight is collected exactly once no matter how many of
//! the `l` unit paths cross it. Original arcs, a super-source into every
//! `in(v)` and every `out(v)` into a super-sink all carry capacity `l` at
//! gain zero. `M_l` is then the maximum-gain flow of value `l`, and running
//! one augmentation at a time yields every prefix `M_1 .. M_l` of the same
//! run.
//!
//! Costs are negated gains; the first potentials come from one relaxation
//! pass in topological order (the zero-flow network is acyclic) and later
//! rounds reuse potentials so Dijkstra only ever sees nonnegative reduced
//! costs. All arithmetic is exact.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{PathTuple, WeightedDag};

const INF: i64 = i64::MAX / 2;

struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

struct Network {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    n: usize,
    source: usize,
    sink: usize,
}

impl Network {
    /// Node layout: `in(v) = v`, `out(v) = n + v`, source `2n`, sink `2n+1`.
    fn build(dag: &WeightedDag, ell: usize) -> Self {
        let n = dag.vertex_count();
        let ell = ell as i64;
        let mut net = Network {
            arcs: Vec::new(),
            adj: vec![Vec::new(); 2 * n + 2],
            n,
            source: 2 * n,
            sink: 2 * n + 1,
        };
        for v in 0..n {
            net.add(net.source, v, ell, 0);
        }
        for v in 0..n {
            net.add(v, n + v, 1, -(dag.weight(v) as i64));
            if ell > 1 {
                net.add(v, n + v, ell - 1, 0);
            }
        }
        for u in 0..n {
            for &v in dag.successors(u) {
                net.add(n + u, v, ell, 0);
            }
        }
        for v in 0..n {
            net.add(n + v, net.sink, ell, 0);
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: i64, cost: i64) {
        let fwd = self.arcs.len();
        self.arcs.push(Arc { to, cap, cost });
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            cost: -cost,
        });
        self.adj[from].push(fwd);
        self.adj[to].push(fwd + 1);
    }

    fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Exact shortest distances from the source over the zero-flow network,
    /// relaxed along a topological order. Seeds the potentials.
    fn initial_potentials(&self, dag: &WeightedDag) -> Vec<i64> {
        let mut order = Vec::with_capacity(self.node_count());
        order.push(self.source);
        for &v in dag.topological_order() {
            order.push(v);
            order.push(self.n + v);
        }
        order.push(self.sink);

        let mut dist = vec![INF; self.node_count()];
        dist[self.source] = 0;
        for &u in &order {
            if dist[u] == INF {
                continue;
            }
            for &i in &self.adj[u] {
                let arc = &self.arcs[i];
                if arc.cap > 0 && dist[u] + arc.cost < dist[arc.to] {
                    dist[arc.to] = dist[u] + arc.cost;
                }
            }
        }
        dist
    }

    /// One unit of augmentation along a shortest reduced-cost path.
    /// Returns the gain of that unit.
    fn augment(&mut self, potential: &mut [i64]) -> u64 {
        let nodes = self.node_count();
        let mut dist = vec![INF; nodes];
        let mut parent: Vec<usize> = vec![usize::MAX; nodes];
        dist[self.source] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, self.source)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &i in &self.adj[u] {
                let arc = &self.arcs[i];
                if arc.cap <= 0 {
                    continue;
                }
                let nd = d + arc.cost + potential[u] - potential[arc.to];
                debug_assert!(arc.cost + potential[u] - potential[arc.to] >= 0);
                if nd < dist[arc.to] {
                    dist[arc.to] = nd;
                    parent[arc.to] = i;
                    heap.push(Reverse((nd, arc.to)));
                }
            }
        }
        debug_assert!(dist[self.sink] < INF, "value-l flow is always feasible");
        for v in 0..nodes {
            if dist[v] < INF {
                potential[v] += dist[v];
            }
        }
        let mut v = self.sink;
        while v != self.source {
            let i = parent[v];
            self.arcs[i].cap -= 1;
            self.arcs[i ^ 1].cap += 1;
            v = self.arcs[i ^ 1].to;
        }
        // With potential[source] pinned at 0, potential[sink] is the real
        // cost of the unit just sent.
        (-potential[self.sink]) as u64
    }

    /// Flow currently on forward arc `i` (even indices are forward).
    fn flow(&self, i: usize) -> i64 {
        self.arcs[i ^ 1].cap
    }

    /// Peels the current value-`k` flow into `k` source-to-sink unit paths,
    /// preferring the smallest next vertex id at every step and moving to the
    /// sink last. Returns the visited original vertices per unit path.
    fn decompose(&self, value: usize) -> Vec<Vec<usize>> {
        let mut residual: Vec<i64> = (0..self.arcs.len())
            .step_by(2)
            .map(|i| self.flow(i))
            .collect();
        let mut paths = Vec::with_capacity(value);
        for _ in 0..value {
            let mut path = Vec::new();
            let mut u = self.source;
            while u != self.sink {
                let &i = self.adj[u]
                    .iter()
                    .filter(|&&i| i % 2 == 0 && residual[i / 2] > 0)
                    .min_by_key(|&&i| self.arcs[i].to)
                    .expect("flow conservation leaves an exit");
                residual[i / 2] -= 1;
                let next = self.arcs[i].to;
                if next < self.n {
                    path.push(next);
                }
                u = next;
            }
            paths.push(path);
        }
        paths
    }
}

pub(super) struct ProfileRun {
    pub profile: Vec<u64>,
    pub witnesses: Option<Vec<PathTuple>>,
}

pub(super) fn max_gain_profile(dag: &WeightedDag, count: usize) -> ProfileRun {
    max_gain_profile_full(dag, count, false)
}

pub(super) fn max_gain_profile_full(
    dag: &WeightedDag,
    count: usize,
    want_witnesses: bool,
) -> ProfileRun {
    if count == 0 || dag.vertex_count() == 0 {
        return ProfileRun {
            profile: vec![0; count + 1],
            witnesses: want_witnesses.then(Vec::new),
        };
    }
    let mut net = Network::build(dag, count);
    let mut potential = net.initial_potentials(dag);
    let mut profile = Vec::with_capacity(count + 1);
    profile.push(0u64);
    let mut witnesses = want_witnesses.then(Vec::new);
    for k in 1..=count {
        let gain = net.augment(&mut potential);
        profile.push(profile[k - 1] + gain);
        if let Some(ws) = witnesses.as_mut() {
            let paths = net.decompose(k);
            ws.push(PathTuple::new(dag, paths).expect("decomposition follows arcs"));
        }
    }
    ProfileRun { profile, witnesses }
}
