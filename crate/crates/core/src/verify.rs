//! The invariant battery behind the `verify` subcommand.
//!
//! Every suite returns a pass/fail result with either summary statistics or
//! a minimal counterexample (shape, element, filling). All randomness comes
//! from one splittable seed so reports are byte-identical across runs.

use std::collections::{BTreeMap, BTreeSet};

use crate::coxeter::CoxeterElement;
use crate::gk::{
    antichain_width, antichain_width_bruteforce, gk_bruteforce, gk_invariant_with_witnesses,
    max_weight_profile, weight_of, WeightedDag,
};
use crate::rng::SplitMix64;
use crate::rsk::{
    coxeter_rsk, gansner_rsk, invert_rsk, special_coxeter, CoxeterRskMap, GansnerMap, RskVariant,
};
use crate::shapes::{Filling, IntervalBipartition, Partition};

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Shapes for the correspondence suites; `None` selects every shape
    /// with at most 6 boxes.
    pub shapes: Option<Vec<Partition>>,
    /// Entry bound for the exhaustive filling enumerations.
    pub max_entry: u64,
    /// Sweep every Coxeter element instead of just the distinguished one
    /// and its inverse.
    pub all_coxeter: bool,
    /// Number of random DAGs for the oracle-equivalence suite.
    pub samples: usize,
    /// Number of random instances for the conservation suite.
    pub conservation_samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            shapes: None,
            max_entry: 2,
            all_coxeter: false,
            samples: 200,
            conservation_samples: 500,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    /// Canonical text form; one line per suite plus the seed header.
    pub fn render(&self) -> String {
        let mut out = format!("seed: {}\n", self.seed);
        for s in &self.suites {
            out.push_str(&format!(
                "[{}] {} — {}\n",
                if s.passed { "PASS" } else { "FAIL" },
                s.name,
                s.detail
            ));
        }
        out.push_str(if self.passed() {
            "verification passed\n"
        } else {
            "verification FAILED\n"
        });
        out
    }
}

pub fn run(options: &VerifyOptions) -> VerifyReport {
    let mut rng = SplitMix64::new(options.seed);
    let shapes = options
        .shapes
        .clone()
        .unwrap_or_else(|| partitions_with_size_at_most(6));
    let suites = vec![
        bipartition_suite(),
        diagonal_suite(),
        gk_oracle_suite(options.samples, &mut rng.split()),
        coxeter_enumeration_suite(),
        ar_quiver_suite(),
        bijectivity_suite(&shapes, options.max_entry, options.all_coxeter),
        conservation_suite(
            &shapes,
            options.max_entry,
            options.all_coxeter,
            options.conservation_samples,
            &mut rng.split(),
        ),
        inverse_suite(options.all_coxeter),
        coincidence_suite(&mut rng.split()),
    ];
    VerifyReport {
        seed: options.seed,
        suites,
    }
}

// ---------------------------------------------------------------- helpers

/// All partitions with at most `max` boxes, in a fixed order.
pub fn partitions_with_size_at_most(max: usize) -> Vec<Partition> {
    fn descend(remaining: usize, cap: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if !parts.is_empty() {
            out.push(Partition::new(parts.clone()).unwrap());
        }
        for next in (1..=cap.min(remaining)).rev() {
            parts.push(next);
            descend(remaining - next, next, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    descend(max, max, &mut Vec::new(), &mut out);
    out.sort_by_key(|p| (p.size(), p.parts().to_vec()));
    out
}

/// All partitions with hook length at most `max`, in a fixed order.
pub fn partitions_with_hook_at_most(max: usize) -> Vec<Partition> {
    fn descend(parts: &mut Vec<usize>, max_len: usize, out: &mut Vec<Partition>) {
        out.push(Partition::new(parts.clone()).unwrap());
        if parts.len() == max_len {
            return;
        }
        for next in (1..=*parts.last().unwrap()).rev() {
            parts.push(next);
            descend(parts, max_len, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    for first in 1..=max {
        let max_len = max + 1 - first;
        descend(&mut vec![first], max_len, &mut out);
    }
    out
}

/// Visits every filling of `shape` with entries in `0..=max_entry`.
pub fn for_each_filling(shape: &Partition, max_entry: u64, mut visit: impl FnMut(&Filling)) {
    let boxes = shape.size();
    let mut values = vec![0u64; boxes];
    loop {
        let mut rows = Vec::with_capacity(shape.len());
        let mut k = 0;
        for &len in shape.parts() {
            rows.push(values[k..k + len].to_vec());
            k += len;
        }
        visit(&Filling::new(shape.clone(), rows).unwrap());
        // odometer
        let mut i = 0;
        loop {
            if i == boxes {
                return;
            }
            if values[i] < max_entry {
                values[i] += 1;
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

/// A random filling with entries in `0..=max_entry`.
pub fn random_filling(shape: &Partition, max_entry: u64, rng: &mut SplitMix64) -> Filling {
    let rows = shape
        .parts()
        .iter()
        .map(|&len| (0..len).map(|_| rng.below(max_entry + 1)).collect())
        .collect();
    Filling::new(shape.clone(), rows).unwrap()
}

/// A random partition with hook length exactly `hook`.
pub fn random_partition_with_hook(hook: usize, rng: &mut SplitMix64) -> Partition {
    let first = 1 + rng.below(hook as u64) as usize;
    let len = hook + 1 - first;
    let mut parts: Vec<usize> = (1..len)
        .map(|_| 1 + rng.below(first as u64) as usize)
        .collect();
    parts.push(first);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts[0] = first;
    Partition::new(parts).unwrap()
}

/// A random DAG on up to `max_vertices` vertices with weights `0..=max_weight`
/// (strictly positive when `positive` is set).
pub fn random_dag(
    max_vertices: usize,
    max_weight: u64,
    positive: bool,
    rng: &mut SplitMix64,
) -> WeightedDag {
    let n = 1 + rng.below(max_vertices as u64) as usize;
    let weights: Vec<u64> = (0..n)
        .map(|_| {
            if positive {
                1 + rng.below(max_weight)
            } else {
                rng.below(max_weight + 1)
            }
        })
        .collect();
    // Arcs respect the identity order, so the graph is acyclic by
    // construction; density varies per instance.
    let density = 15 + rng.below(50);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(100) < density {
                arcs.push((u, v));
            }
        }
    }
    WeightedDag::new(weights, arcs).unwrap()
}

fn fail(name: &str, detail: String) -> SuiteResult {
    SuiteResult {
        name: name.to_string(),
        passed: false,
        detail,
    }
}

fn pass(name: &str, detail: String) -> SuiteResult {
    SuiteResult {
        name: name.to_string(),
        passed: true,
        detail,
    }
}

// ---------------------------------------------------------------- suites

/// Every elementary interval bipartition of an interval `{1..n}`, `n <= 13`,
/// maps to a distinct nonzero partition with hook `n-1`, and
/// `elementary_bipartition` is a two-sided inverse of that assignment.
fn bipartition_suite() -> SuiteResult {
    let name = "shapes/bipartition-roundtrip";
    let mut by_partition: BTreeMap<Vec<usize>, Vec<IntervalBipartition>> = BTreeMap::new();
    for n in 2..=13usize {
        for mask in 0u64..(1 << (n - 2)) {
            let mut b = vec![1usize];
            let mut e = Vec::new();
            for letter in 2..n {
                if mask >> (letter - 2) & 1 == 1 {
                    b.push(letter);
                } else {
                    e.push(letter);
                }
            }
            e.push(n);
            let be = IntervalBipartition::new(b, e).unwrap();
            debug_assert!(be.is_elementary());
            match be.partition() {
                Some(p) => by_partition.entry(p.parts().to_vec()).or_default().push(be),
                None => {
                    return fail(name, format!("elementary bipartition {:?} maps to zero", be));
                }
            }
        }
    }
    let mut checked = 0;
    for lam in partitions_with_hook_at_most(12) {
        let key = lam.parts().to_vec();
        let candidates = match by_partition.get(&key) {
            Some(c) => c,
            None => return fail(name, format!("no elementary bipartition yields {}", lam)),
        };
        if candidates.len() != 1 {
            return fail(
                name,
                format!("{} elementary bipartitions yield {}", candidates.len(), lam),
            );
        }
        let be = lam.elementary_bipartition();
        if be != candidates[0] {
            return fail(name, format!("constructed bipartition differs for {}", lam));
        }
        if be.partition().as_ref() != Some(&lam) {
            return fail(name, format!("round trip fails for {}", lam));
        }
        checked += 1;
    }
    pass(name, format!("{} shapes with hook <= 12", checked))
}

/// Diagonals partition the diagram; apexes dominate; box labels agree with
/// the `b_i <= m < e` condition and ideals equal the condition sets.
fn diagonal_suite() -> SuiteResult {
    let name = "shapes/diagonal-geometry";
    let mut checked = 0;
    for lam in partitions_with_hook_at_most(9) {
        let be = lam.elementary_bipartition();
        let q = be.e().len();
        let mut seen = BTreeSet::new();
        for d in lam.diagonals() {
            let m = d.index();
            let apex = d.apex();
            for &cell in d.boxes() {
                if !seen.insert(cell) {
                    return fail(name, format!("box {} on two diagonals of {}", cell, lam));
                }
                if !cell.le(&apex) {
                    return fail(name, format!("apex of D_{} fails to dominate in {}", m, lam));
                }
                let bi = be.b()[cell.row - 1];
                let ej = be.e()[q - cell.col];
                if !(bi <= m && m < ej) {
                    return fail(name, format!("label condition fails at {} in {}", cell, lam));
                }
            }
            let ideal: Vec<_> = lam.ideal_boxes(apex).unwrap();
            let by_condition: Vec<_> = lam
                .cells()
                .into_iter()
                .filter(|cell| {
                    let bi = be.b()[cell.row - 1];
                    let ej = be.e()[q - cell.col];
                    bi <= m && m < ej
                })
                .collect();
            if ideal != by_condition {
                return fail(
                    name,
                    format!("ideal of D_{} mismatches condition in {}", m, lam),
                );
            }
        }
        if seen.len() != lam.size() {
            return fail(name, format!("diagonals miss boxes of {}", lam));
        }
        checked += 1;
    }
    pass(name, format!("{} shapes with hook <= 9", checked))
}

/// Flow solver versus brute force on random DAGs, plus the partition,
/// length and witness laws.
fn gk_oracle_suite(samples: usize, rng: &mut SplitMix64) -> SuiteResult {
    let name = "gk/oracle-equivalence";
    for instance in 0..samples {
        let positive = instance % 2 == 1;
        let dag = random_dag(9, 9, positive, &mut rng.split());
        let width = antichain_width(&dag);
        match antichain_width_bruteforce(&dag) {
            Ok(w) if w == width => {}
            Ok(w) => {
                return fail(
                    name,
                    format!("instance {}: width {} vs exhaustive {}", instance, width, w),
                )
            }
            Err(e) => return fail(name, format!("instance {}: {}", instance, e)),
        }
        let profile = max_weight_profile(&dag, width + 1);
        let brute = match gk_bruteforce(&dag, width + 1) {
            Ok(b) => b,
            Err(e) => return fail(name, format!("instance {}: {}", instance, e)),
        };
        if profile != brute {
            return fail(
                name,
                format!(
                    "instance {}: solver {:?} vs oracle {:?} on {:?}",
                    instance,
                    profile,
                    brute,
                    (dag.weights(), dag.arcs())
                ),
            );
        }
        let gk = gk_invariant_with_witnesses(&dag);
        let parts = gk.parts();
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return fail(
                name,
                format!("instance {}: parts not sorted {:?}", instance, parts),
            );
        }
        let nonzero = parts.iter().filter(|&&p| p > 0).count();
        if nonzero > width || (positive && nonzero != width) {
            return fail(
                name,
                format!(
                    "instance {}: {} nonzero parts vs width {}",
                    instance, nonzero, width
                ),
            );
        }
        if gk.prefix_maxima().last().copied() != Some(dag.total_weight()) {
            return fail(name, format!("instance {}: M_w misses total weight", instance));
        }
        for (ell, tuple) in gk.witnesses().unwrap().iter().enumerate() {
            if tuple.len() != ell + 1
                || weight_of(&dag, tuple).unwrap() != gk.prefix_maxima()[ell + 1]
            {
                return fail(
                    name,
                    format!("instance {}: witness {} unsound", instance, ell + 1),
                );
            }
        }
    }
    pass(name, format!("{} random DAGs (<= 9 vertices)", samples))
}

/// Element counts, closure under inverse, and (for small degree) agreement
/// of the enumeration with all products of distinct letters.
fn coxeter_enumeration_suite() -> SuiteResult {
    let name = "coxeter/enumeration";
    for n in 2..=10usize {
        let all = CoxeterElement::enumerate(n).unwrap();
        let expected = if n == 2 { 1 } else { 1 << (n - 2) };
        if all.len() != expected {
            return fail(
                name,
                format!("degree {}: {} elements, expected {}", n, all.len(), expected),
            );
        }
        for c in &all {
            let inv = c.inverse();
            if !all.iter().any(|d| d == &inv) {
                return fail(name, format!("degree {}: inverse of {} missing", n, c));
            }
        }
    }
    for n in 2..=6usize {
        let enumerated: BTreeSet<Vec<usize>> = CoxeterElement::enumerate(n)
            .unwrap()
            .iter()
            .map(|c| c.cycle().to_vec())
            .collect();
        let mut letters: Vec<usize> = (1..n).collect();
        let mut products = BTreeSet::new();
        let mut fault = None;
        permutations(&mut letters, 0, &mut |word| {
            match CoxeterElement::from_word(word) {
                Ok(c) => {
                    products.insert(c.cycle().to_vec());
                }
                Err(e) => fault = Some(format!("word {:?} rejected: {}", word, e)),
            }
        });
        if let Some(f) = fault {
            return fail(name, f);
        }
        if products != enumerated {
            return fail(
                name,
                format!("degree {}: products differ from enumeration", n),
            );
        }
    }
    pass(
        name,
        "counts 2^(n-2) for n <= 10; words exhaustive for n <= 6".to_string(),
    )
}

fn permutations(values: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == values.len() {
        visit(values);
        return;
    }
    for i in k..values.len() {
        values.swap(k, i);
        permutations(values, k + 1, visit);
        values.swap(k, i);
    }
}

/// AR quivers for every element of degree <= 9: acyclic, right vertex count,
/// sources/sinks match initial/final letters, every slice has one source and
/// one sink.
fn ar_quiver_suite() -> SuiteResult {
    let name = "coxeter/ar-quiver";
    let mut quivers = 0;
    for n in 2..=9usize {
        for c in CoxeterElement::enumerate(n).unwrap() {
            let q = c.ar_quiver();
            let vertices = q.vertices();
            if vertices.len() != n * (n - 1) / 2 {
                return fail(name, format!("{}: wrong vertex count", c));
            }
            let index = |t: (usize, usize)| vertices.iter().position(|&v| v == t).unwrap();
            let arcs: Vec<(usize, usize)> =
                q.arcs().iter().map(|&(s, t)| (index(s), index(t))).collect();
            if WeightedDag::new(vec![0; vertices.len()], arcs).is_err() {
                return fail(name, format!("{}: quiver not acyclic", c));
            }
            let expected_sources: Vec<_> = c.initials().iter().map(|&i| (i, i + 1)).collect();
            let expected_sinks: Vec<_> = c.finals().iter().map(|&i| (i, i + 1)).collect();
            if q.sources() != expected_sources || q.sinks() != expected_sinks {
                return fail(name, format!("{}: sources/sinks mismatch", c));
            }
            for m in 1..n {
                let slice = q.slice(m).unwrap();
                if slice.vertices().len() != m * (n - m) {
                    return fail(name, format!("{}: slice {} size", c, m));
                }
                let targets: BTreeSet<usize> = slice.arcs().iter().map(|&(_, t)| t).collect();
                let heads: BTreeSet<usize> = slice.arcs().iter().map(|&(s, _)| s).collect();
                let sources = slice.vertices().len() - targets.len();
                let sinks = slice.vertices().len() - heads.len();
                if sources != 1 || sinks != 1 {
                    return fail(
                        name,
                        format!("{}: slice {} has {} sources, {} sinks", c, m, sources, sinks),
                    );
                }
            }
            quivers += 1;
        }
    }
    pass(name, format!("{} quivers, degrees 2..=9", quivers))
}

enum MapKind {
    Gansner(GansnerMap),
    Coxeter(CoxeterRskMap),
}

impl MapKind {
    fn apply(&self, f: &Filling) -> Filling {
        match self {
            MapKind::Gansner(m) => m.apply(f).unwrap(),
            MapKind::Coxeter(m) => m.apply(f).unwrap(),
        }
    }
}

fn maps_for(shape: &Partition, all_coxeter: bool) -> Vec<(String, MapKind)> {
    let mut out: Vec<(String, MapKind)> = vec![(
        "classical".to_string(),
        MapKind::Gansner(GansnerMap::new(shape.clone())),
    )];
    let elements: Vec<CoxeterElement> = if all_coxeter {
        CoxeterElement::enumerate(shape.hook_length() + 1).unwrap()
    } else {
        let c = special_coxeter(shape);
        let inv = c.inverse();
        if inv == c {
            vec![c]
        } else {
            vec![c, inv]
        }
    };
    for c in elements {
        out.push((
            format!("c={}", c),
            MapKind::Coxeter(CoxeterRskMap::new(shape.clone(), c).unwrap()),
        ));
    }
    out
}

/// Forward maps on full filling enumerations: outputs are reverse plane
/// partitions and pairwise distinct per map.
fn bijectivity_suite(shapes: &[Partition], max_entry: u64, all_coxeter: bool) -> SuiteResult {
    let name = "rsk/rpp-and-injectivity";
    let mut maps_run = 0;
    for shape in shapes {
        for (label, map) in maps_for(shape, all_coxeter) {
            let mut outputs = BTreeSet::new();
            let mut violation = None;
            for_each_filling(shape, max_entry, |f| {
                if violation.is_some() {
                    return;
                }
                let g = map.apply(f);
                if !g.is_rpp() {
                    violation = Some(format!(
                        "non-RPP output: shape {}, map {}, filling {:?}",
                        shape,
                        label,
                        f.rows()
                    ));
                } else if !outputs.insert(g.rows().to_vec()) {
                    violation = Some(format!(
                        "collision: shape {}, map {}, filling {:?}",
                        shape,
                        label,
                        f.rows()
                    ));
                }
            });
            if let Some(v) = violation {
                return fail(name, v);
            }
            maps_run += 1;
        }
    }
    pass(
        name,
        format!(
            "{} maps over {} shapes, entries <= {}",
            maps_run,
            shapes.len(),
            max_entry
        ),
    )
}

/// Diagonal sums of the output equal input sums over the matching condition
/// sets, on the exhaustive enumeration and on random larger instances.
fn conservation_suite(
    shapes: &[Partition],
    max_entry: u64,
    all_coxeter: bool,
    samples: usize,
    rng: &mut SplitMix64,
) -> SuiteResult {
    let name = "rsk/diagonal-sum-conservation";
    for shape in shapes {
        for (label, map) in maps_for(shape, all_coxeter) {
            let mut violation = None;
            for_each_filling(shape, max_entry, |f| {
                if violation.is_none() {
                    if let Some(m) = conservation_violation(f, &map.apply(f)) {
                        violation = Some(format!(
                            "diagonal {}: shape {}, map {}, filling {:?}",
                            m,
                            shape,
                            label,
                            f.rows()
                        ));
                    }
                }
            });
            if let Some(v) = violation {
                return fail(name, v);
            }
        }
    }
    for instance in 0..samples {
        let mut sub = rng.split();
        let hook = 1 + sub.below(8) as usize;
        let shape = random_partition_with_hook(hook, &mut sub);
        let elements = CoxeterElement::enumerate(hook + 1).unwrap();
        let c = elements[sub.below(elements.len() as u64) as usize].clone();
        let f = random_filling(&shape, 9, &mut sub);
        let g = coxeter_rsk(&c, &f).unwrap();
        if let Some(m) = conservation_violation(&f, &g) {
            return fail(
                name,
                format!(
                    "diagonal {}: instance {}, shape {}, c={}, filling {:?}",
                    m,
                    instance,
                    shape,
                    c,
                    f.rows()
                ),
            );
        }
        let g = gansner_rsk(&f);
        if let Some(m) = conservation_violation(&f, &g) {
            return fail(
                name,
                format!(
                    "diagonal {}: instance {}, shape {}, classical, filling {:?}",
                    m,
                    instance,
                    shape,
                    f.rows()
                ),
            );
        }
    }
    pass(
        name,
        format!("exhaustive enumeration plus {} random instances", samples),
    )
}

/// The failing diagonal index, if any. The condition set of `m` coincides
/// with the ideal of the diagonal's apex, so one check covers both maps.
pub fn conservation_violation(f: &Filling, g: &Filling) -> Option<usize> {
    let shape = f.shape();
    for d in shape.diagonals() {
        let out: u64 = d.boxes().iter().map(|&c| g.get(c).unwrap()).sum();
        let ideal = shape.ideal_boxes(d.apex()).unwrap();
        let input: u64 = ideal.iter().map(|&c| f.get(c).unwrap()).sum();
        if out != input {
            return Some(d.index());
        }
    }
    None
}

/// Search-based inversion round-trips on every small filling.
fn inverse_suite(all_coxeter: bool) -> SuiteResult {
    let name = "rsk/inverse-roundtrip";
    let shapes = [vec![2, 1], vec![2, 2], vec![3, 1]];
    let mut inversions = 0;
    for parts in shapes {
        let shape = Partition::new(parts).unwrap();
        for (label, map) in maps_for(&shape, all_coxeter) {
            let variant = match &map {
                MapKind::Gansner(_) => RskVariant::Gansner,
                MapKind::Coxeter(m) => RskVariant::Coxeter(m.coxeter().clone()),
            };
            let mut violation = None;
            let mut count = 0;
            for_each_filling(&shape, 2, |f| {
                if violation.is_some() {
                    return;
                }
                let g = map.apply(f);
                match invert_rsk(&variant, &g) {
                    Ok(Some(back)) if &back == f => count += 1,
                    Ok(_) => {
                        violation = Some(format!(
                            "round trip failed: shape {}, map {}, filling {:?}",
                            shape,
                            label,
                            f.rows()
                        ))
                    }
                    Err(e) => violation = Some(format!("{}", e)),
                }
            });
            if let Some(v) = violation {
                return fail(name, v);
            }
            inversions += count;
        }
    }
    pass(name, format!("{} inversions, entries <= 2", inversions))
}

/// The distinguished element and its inverse agree with the classical map;
/// the full degree-9 scan reports every agreeing element.
fn coincidence_suite(rng: &mut SplitMix64) -> SuiteResult {
    let name = "rsk/classical-coincidence";
    let shape = Partition::new(vec![5, 3, 3, 2]).unwrap();
    let reference = Filling::new(
        shape.clone(),
        vec![vec![1, 2, 1, 0, 3], vec![2, 1, 1], vec![2, 1, 3], vec![3, 2]],
    )
    .unwrap();
    let mut fillings = vec![reference];
    for _ in 0..50 {
        fillings.push(random_filling(&shape, 9, rng));
    }
    let classical = GansnerMap::new(shape.clone());
    let expected: Vec<Filling> = fillings
        .iter()
        .map(|f| classical.apply(f).unwrap())
        .collect();

    let c0 = special_coxeter(&shape);
    let c0_inv = c0.inverse();
    let mut agreeing = Vec::new();
    for c in CoxeterElement::enumerate(9).unwrap() {
        let map = CoxeterRskMap::new(shape.clone(), c.clone()).unwrap();
        let agrees = fillings
            .iter()
            .zip(&expected)
            .all(|(f, g)| map.apply(f).unwrap() == *g);
        if agrees {
            agreeing.push(c);
        }
    }
    if !agreeing.contains(&c0) || !agreeing.contains(&c0_inv) {
        return fail(
            name,
            format!(
                "distinguished pair missing from agreeing set {:?}",
                agreeing.iter().map(|c| c.to_string()).collect::<Vec<_>>()
            ),
        );
    }
    let extras = agreeing.len() - if c0 == c0_inv { 1 } else { 2 };
    pass(
        name,
        format!(
            "agreeing elements: {}; distinguished [{}] and inverse present; {} extra",
            agreeing
                .iter()
                .map(|c| format!("[{}]", c))
                .collect::<Vec<_>>()
                .join(" "),
            c0,
            extras
        ),
    )
}
