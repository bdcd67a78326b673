//! The two diagonal-wise correspondences from fillings to reverse plane
//! partitions: the classical one on the box graph of the shape, and the
//! family parametrized by a Coxeter element acting through slices of its
//! AR quiver.
//!
//! Both maps read, for every box `(i, j)` on the `m`th diagonal, the part
//! `u_m - i + 1` of the Greene-Kleitman invariant of an `m`-indexed weighted
//! digraph: the poset ideal of the diagonal's apex inside the box graph, or
//! the `m`th AR slice weighted by the lifted filling.

use thiserror::Error;

use crate::coxeter::{CoxeterElement, CoxeterError, Transposition};
use crate::gk::{max_weight_profile, WeightedDag};
use crate::shapes::{Cell, Filling, IntervalBipartition, Partition, ShapeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RskError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("Coxeter element has degree {got}, shape requires {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("filling has shape {got}, map expects {expected}")]
    FillingShapeMismatch { expected: Partition, got: Partition },
    #[error("input too large for the search-based inverse: {0}")]
    Capacity(String),
}

/// The box graph of a shape: one vertex per box, arcs one step down and one
/// step right.
#[derive(Debug, Clone)]
pub struct ShapeGraph {
    shape: Partition,
    cells: Vec<Cell>,
    row_offsets: Vec<usize>,
    arcs: Vec<(usize, usize)>,
}

impl ShapeGraph {
    pub fn new(shape: &Partition) -> Self {
        let cells = shape.cells();
        let mut row_offsets = Vec::with_capacity(shape.len());
        let mut acc = 0;
        for &len in shape.parts() {
            row_offsets.push(acc);
            acc += len;
        }
        let graph = ShapeGraph {
            shape: shape.clone(),
            cells,
            row_offsets,
            arcs: Vec::new(),
        };
        let mut arcs = Vec::new();
        for (k, cell) in graph.cells.iter().enumerate() {
            let down = Cell::new(cell.row + 1, cell.col);
            if shape.contains(down) {
                arcs.push((k, graph.cell_index(down).unwrap()));
            }
            let right = Cell::new(cell.row, cell.col + 1);
            if shape.contains(right) {
                arcs.push((k, graph.cell_index(right).unwrap()));
            }
        }
        ShapeGraph { arcs, ..graph }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Arcs as index pairs into [`ShapeGraph::cells`].
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn cell_index(&self, cell: Cell) -> Option<usize> {
        self.shape
            .contains(cell)
            .then(|| self.row_offsets[cell.row - 1] + cell.col - 1)
    }

    /// The whole graph as a weighted DAG carrying `f`'s values.
    pub fn to_weighted_dag(&self, f: &Filling) -> Result<WeightedDag, RskError> {
        if f.shape() != &self.shape {
            return Err(RskError::FillingShapeMismatch {
                expected: self.shape.clone(),
                got: f.shape().clone(),
            });
        }
        let weights = self.cells.iter().map(|&c| f.get(c).unwrap()).collect();
        Ok(WeightedDag::new(weights, self.arcs.clone()).expect("box graphs are acyclic"))
    }

    /// The ideal subgraph generated by the apex of the `m`th diagonal:
    /// its boxes plus the induced arcs, reindexed.
    pub fn ideal_subgraph(&self, m: isize) -> Result<IdealSubgraph, RskError> {
        let apex = self.shape.diagonal(m)?.apex();
        let cells = self.shape.ideal_boxes(apex)?;
        Ok((cells.clone(), induced_arcs(&cells)))
    }
}

/// Boxes of an ideal subgraph together with its reindexed arc list.
pub type IdealSubgraph = (Vec<Cell>, Vec<(usize, usize)>);

/// Arcs of the box graph induced on an arbitrary set of boxes, with
/// endpoints reindexed into the given list.
fn induced_arcs(cells: &[Cell]) -> Vec<(usize, usize)> {
    let index = |c: Cell| cells.iter().position(|&x| x == c);
    let mut arcs = Vec::new();
    for (k, cell) in cells.iter().enumerate() {
        for next in [
            Cell::new(cell.row + 1, cell.col),
            Cell::new(cell.row, cell.col + 1),
        ] {
            if let Some(t) = index(next) {
                arcs.push((k, t));
            }
        }
    }
    arcs
}

/// Shared per-diagonal data: the weighted digraph skeleton to solve on and
/// where its parts land in the output.
#[derive(Debug, Clone)]
struct DiagonalStage {
    /// Arc list of the stage graph, reindexed.
    arcs: Vec<(usize, usize)>,
    /// For each stage vertex, the box whose value feeds it (if any).
    cell_of_vertex: Vec<Option<Cell>>,
    /// Boxes of the diagonal, ascending by row.
    diagonal: Vec<Cell>,
    /// Row of the diagonal's apex.
    apex_row: usize,
}

impl DiagonalStage {
    fn write_parts(&self, f: &Filling, g: &mut [Vec<u64>]) {
        let weights: Vec<u64> = self
            .cell_of_vertex
            .iter()
            .map(|c| c.map(|cell| f.get(cell).unwrap()).unwrap_or(0))
            .collect();
        let dag = WeightedDag::new(weights, self.arcs.clone()).expect("stage graphs are acyclic");
        let profile = max_weight_profile(&dag, self.diagonal.len());
        for cell in &self.diagonal {
            let ell = self.apex_row - cell.row + 1;
            g[cell.row - 1][cell.col - 1] = profile[ell] - profile[ell - 1];
        }
    }
}

fn apply_stages(
    shape: &Partition,
    stages: &[DiagonalStage],
    f: &Filling,
) -> Result<Filling, RskError> {
    if f.shape() != shape {
        return Err(RskError::FillingShapeMismatch {
            expected: shape.clone(),
            got: f.shape().clone(),
        });
    }
    let mut rows: Vec<Vec<u64>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    for stage in stages {
        stage.write_parts(f, &mut rows);
    }
    Ok(Filling::new(shape.clone(), rows).unwrap())
}

/// The classical correspondence on a fixed shape, with the per-diagonal
/// ideal subgraphs precomputed so it can be applied to many fillings.
#[derive(Debug, Clone)]
pub struct GansnerMap {
    shape: Partition,
    stages: Vec<DiagonalStage>,
}

impl GansnerMap {
    pub fn new(shape: Partition) -> Self {
        let graph = ShapeGraph::new(&shape);
        let stages = shape
            .diagonals()
            .into_iter()
            .map(|d| {
                let (cells, arcs) = graph.ideal_subgraph(d.index() as isize).unwrap();
                DiagonalStage {
                    arcs,
                    cell_of_vertex: cells.into_iter().map(Some).collect(),
                    apex_row: d.apex().row,
                    diagonal: d.boxes().to_vec(),
                }
            })
            .collect();
        GansnerMap { shape, stages }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn apply(&self, f: &Filling) -> Result<Filling, RskError> {
        apply_stages(&self.shape, &self.stages, f)
    }
}

/// One-shot classical correspondence.
pub fn gansner_rsk(f: &Filling) -> Filling {
    GansnerMap::new(f.shape().clone())
        .apply(f)
        .expect("map built from the filling's own shape")
}

/// A filling of the AR quiver supported on the labels of the shape's boxes:
/// vertex `(b_i, e_{q-j+1})` carries `f(i, j)`, all other pairs carry 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedFilling {
    base: Filling,
    bipartition: IntervalBipartition,
    degree: usize,
    weights: Vec<u64>,
}

fn pair_index(n: usize, x: usize, y: usize) -> usize {
    debug_assert!(1 <= x && x < y && y <= n);
    (x - 1) * n - x * (x - 1) / 2 + (y - x - 1)
}

impl LiftedFilling {
    pub fn new(f: &Filling) -> Self {
        let shape = f.shape();
        let be = shape.elementary_bipartition();
        let n = shape.hook_length() + 1;
        let q = be.e().len();
        let mut weights = vec![0u64; n * (n - 1) / 2];
        for cell in shape.cells() {
            let x = be.b()[cell.row - 1];
            let y = be.e()[q - cell.col];
            weights[pair_index(n, x, y)] = f.get(cell).unwrap();
        }
        LiftedFilling {
            base: f.clone(),
            bipartition: be,
            degree: n,
            weights,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &Filling {
        &self.base
    }

    pub fn bipartition(&self) -> &IntervalBipartition {
        &self.bipartition
    }

    /// The weight on vertex `(x, y)`; zero off the embedded boxes.
    pub fn weight(&self, x: usize, y: usize) -> u64 {
        self.weights[pair_index(self.degree, x, y)]
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Pulls the lift back along the box labelling; returns the base filling.
    pub fn restrict(&self) -> Filling {
        let shape = self.base.shape();
        let q = self.bipartition.e().len();
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (1..=len)
                    .map(|j| {
                        let x = self.bipartition.b()[i];
                        let y = self.bipartition.e()[q - j];
                        self.weight(x, y)
                    })
                    .collect()
            })
            .collect();
        Filling::new(shape.clone(), rows).unwrap()
    }
}

/// The Coxeter-parametrized correspondence for a fixed shape and element,
/// with all AR slices precomputed.
#[derive(Debug, Clone)]
pub struct CoxeterRskMap {
    shape: Partition,
    cox: CoxeterElement,
    stages: Vec<DiagonalStage>,
}

impl CoxeterRskMap {
    /// Requires the element's degree to be `hook_length + 1`.
    pub fn new(shape: Partition, cox: CoxeterElement) -> Result<Self, RskError> {
        let n = shape.hook_length() + 1;
        if cox.degree() != n {
            return Err(RskError::DegreeMismatch {
                expected: n,
                got: cox.degree(),
            });
        }
        let be = shape.elementary_bipartition();
        let q = be.e().len();
        let cell_of = |t: Transposition| -> Option<Cell> {
            let (x, y) = t;
            let i = be.b().binary_search(&x).ok()?;
            let k = be.e().binary_search(&y).ok()?;
            // y = e_{q-j+1} (1-based), so j = q - k with k 0-based.
            Some(Cell::new(i + 1, q - k))
        };
        let quiver = cox.ar_quiver();
        let stages = shape
            .diagonals()
            .into_iter()
            .map(|d| {
                let slice = quiver.slice(d.index()).unwrap();
                DiagonalStage {
                    arcs: slice.arcs().to_vec(),
                    cell_of_vertex: slice.vertices().iter().map(|&t| cell_of(t)).collect(),
                    apex_row: d.apex().row,
                    diagonal: d.boxes().to_vec(),
                }
            })
            .collect();
        Ok(CoxeterRskMap { shape, cox, stages })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn coxeter(&self) -> &CoxeterElement {
        &self.cox
    }

    pub fn apply(&self, f: &Filling) -> Result<Filling, RskError> {
        apply_stages(&self.shape, &self.stages, f)
    }
}

/// One-shot Coxeter-parametrized correspondence.
pub fn coxeter_rsk(cox: &CoxeterElement, f: &Filling) -> Result<Filling, RskError> {
    CoxeterRskMap::new(f.shape().clone(), cox.clone())?.apply(f)
}

/// The Coxeter element whose correspondence coincides with the classical
/// one: `s_i` is final exactly when `i ∈ B` and `i+1 ∈ E`, and an interior
/// `s_i` is initial exactly when `i ∈ E` and `i+1 ∈ B`.
///
/// Realized by orienting each edge `{s_j, s_{j+1}}` of the type-A diagram
/// towards `s_{j+1}` exactly when `j+1 ∈ B`, then composing a smallest-first
/// linear extension of that orientation.
pub fn special_coxeter(shape: &Partition) -> CoxeterElement {
    let be = shape.elementary_bipartition();
    let n = shape.hook_length() + 1;
    let mut in_b = vec![false; n + 1];
    for &x in be.b() {
        in_b[x] = true;
    }
    // s_j -> s_{j+1} (s_j earlier in the word) exactly when j+1 in B, so
    // s_i waits for s_{i-1} when i in B and for s_{i+1} when i+1 in E.
    let mut word: Vec<usize> = Vec::with_capacity(n - 1);
    let mut remaining: Vec<bool> = vec![true; n];
    for _ in 1..n {
        let next = (1..n)
            .find(|&i| {
                remaining[i]
                    && (i == 1 || !remaining[i - 1] || !in_b[i])
                    && (i == n - 1 || !remaining[i + 1] || in_b[i + 1])
            })
            .expect("path orientations always admit a linear extension");
        remaining[next] = false;
        word.push(next);
    }
    let c = CoxeterElement::from_word(&word).expect("word uses each letter once");
    debug_assert!({
        let finals: Vec<usize> = (1..n).filter(|&i| in_b[i] && !in_b[i + 1]).collect();
        c.finals() == finals
    });
    c
}

/// Which forward map to invert.
#[derive(Debug, Clone)]
pub enum RskVariant {
    Gansner,
    Coxeter(CoxeterElement),
}

const INVERT_MAX_BOXES: usize = 9;
const INVERT_MAX_ENTRY: u64 = 12;

/// Finds the unique filling that the chosen map sends to `g`, by bounded
/// depth-first search; `None` when no preimage exists within the bounds.
///
/// Guarded to at most 9 boxes and entries at most 12. Boxes are filled in
/// diagonal-major order with per-box bound `g(apex of the box's diagonal)`,
/// pruning on partial diagonal sums; a candidate is accepted only if the
/// forward map reproduces `g` exactly.
pub fn invert_rsk(variant: &RskVariant, g: &Filling) -> Result<Option<Filling>, RskError> {
    let shape = g.shape().clone();
    if shape.size() > INVERT_MAX_BOXES {
        return Err(RskError::Capacity(format!(
            "{} boxes exceed the inverse-search limit of {}",
            shape.size(),
            INVERT_MAX_BOXES
        )));
    }
    if g.max_entry() > INVERT_MAX_ENTRY {
        return Err(RskError::Capacity(format!(
            "entry {} exceeds the inverse-search limit of {}",
            g.max_entry(),
            INVERT_MAX_ENTRY
        )));
    }

    enum Forward {
        Gansner(GansnerMap),
        Coxeter(CoxeterRskMap),
    }
    let forward = match variant {
        RskVariant::Gansner => Forward::Gansner(GansnerMap::new(shape.clone())),
        RskVariant::Coxeter(c) => {
            Forward::Coxeter(CoxeterRskMap::new(shape.clone(), c.clone())?)
        }
    };
    let apply = |f: &Filling| -> Filling {
        match &forward {
            Forward::Gansner(map) => map.apply(f).unwrap(),
            Forward::Coxeter(map) => map.apply(f).unwrap(),
        }
    };

    let be = shape.elementary_bipartition();
    let q = be.e().len();
    let diagonals = shape.diagonals();
    let hook = shape.hook_length();

    // Diagonal-major box order with per-box caps and diagonal ranges.
    struct Slot {
        cell: Cell,
        bound: u64,
        m_range: (usize, usize),
    }
    let mut slots = Vec::with_capacity(shape.size());
    let mut targets = vec![0u64; hook + 1];
    let mut remaining = vec![0usize; hook + 1];
    for d in &diagonals {
        let bound = g.get(d.apex()).unwrap();
        targets[d.index()] = d.boxes().iter().map(|&c| g.get(c).unwrap()).sum();
        for &cell in d.boxes() {
            let lo = be.b()[cell.row - 1];
            let hi = be.e()[q - cell.col] - 1;
            for r in remaining[lo..=hi].iter_mut() {
                *r += 1;
            }
            slots.push(Slot {
                cell,
                bound,
                m_range: (lo, hi),
            });
        }
    }

    struct Search<'a, F: Fn(&Filling) -> Filling> {
        shape: &'a Partition,
        slots: &'a [Slot],
        targets: &'a [u64],
        forward: F,
        goal: &'a Filling,
        sums: Vec<u64>,
        remaining: Vec<usize>,
        values: Vec<Vec<u64>>,
    }

    impl<F: Fn(&Filling) -> Filling> Search<'_, F> {
        fn run(&mut self, depth: usize) -> Option<Filling> {
            if depth == self.slots.len() {
                let candidate =
                    Filling::new(self.shape.clone(), self.values.clone()).unwrap();
                if (self.forward)(&candidate) == *self.goal {
                    return Some(candidate);
                }
                return None;
            }
            let slot = &self.slots[depth];
            let (lo, hi) = slot.m_range;
            'value: for v in 0..=slot.bound {
                for m in lo..=hi {
                    if self.sums[m] + v > self.targets[m] {
                        // larger v only overshoots more
                        break 'value;
                    }
                    if self.remaining[m] == 1 && self.sums[m] + v != self.targets[m] {
                        continue 'value;
                    }
                }
                for m in lo..=hi {
                    self.sums[m] += v;
                    self.remaining[m] -= 1;
                }
                self.values[slot.cell.row - 1][slot.cell.col - 1] = v;
                if let Some(found) = self.run(depth + 1) {
                    return Some(found);
                }
                for m in lo..=hi {
                    self.sums[m] -= v;
                    self.remaining[m] += 1;
                }
            }
            None
        }
    }

    let mut search = Search {
        shape: &shape,
        slots: &slots,
        targets: &targets,
        forward: apply,
        goal: g,
        sums: vec![0; hook + 1],
        remaining,
        values: shape.parts().iter().map(|&len| vec![0; len]).collect(),
    };
    Ok(search.run(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn filling(parts: &[usize], rows: &[&[u64]]) -> Filling {
        Filling::new(shape(parts), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn reference_input() -> Filling {
        filling(
            &[5, 3, 3, 2],
            &[&[1, 2, 1, 0, 3], &[2, 1, 1], &[2, 1, 3], &[3, 2]],
        )
    }

    fn reference_output() -> Filling {
        filling(
            &[5, 3, 3, 2],
            &[&[1, 3, 4, 4, 7], &[3, 4, 5], &[4, 6, 9], &[8, 10]],
        )
    }

    #[test]
    fn shape_graph_layout() {
        let g = ShapeGraph::new(&shape(&[2, 2]));
        assert_eq!(g.cells().len(), 4);
        assert_eq!(g.arcs().len(), 4);

        let g = ShapeGraph::new(&shape(&[5, 3, 3, 2]));
        assert_eq!(g.cells().len(), 13);
        let (cells, arcs) = g.ideal_subgraph(5).unwrap();
        assert_eq!(cells.len(), 9);
        assert_eq!(arcs.len(), 12); // 3x3 grid

        let g = ShapeGraph::new(&shape(&[1]));
        assert_eq!(g.cells().len(), 1);
        assert!(g.arcs().is_empty());
    }

    #[test]
    fn gansner_reference_grid() {
        assert_eq!(gansner_rsk(&reference_input()), reference_output());
    }

    #[test]
    fn gansner_zero_and_hook_closed_form() {
        let z = Filling::zero(shape(&[4, 2, 1]));
        assert_eq!(gansner_rsk(&z), z);

        for a in 0..3u64 {
            for b in 0..3u64 {
                for c in 0..3u64 {
                    let f = filling(&[2, 1], &[&[a, b], &[c]]);
                    let g = gansner_rsk(&f);
                    assert_eq!(g.rows(), &[vec![a, a + b], vec![a + c]]);
                }
            }
        }
    }

    #[test]
    fn gansner_map_rejects_wrong_shape() {
        let map = GansnerMap::new(shape(&[2, 1]));
        let f = Filling::zero(shape(&[3]));
        assert!(matches!(
            map.apply(&f),
            Err(RskError::FillingShapeMismatch { .. })
        ));
    }

    #[test]
    fn lift_examples() {
        let f = filling(&[2, 1], &[&[1, 2], &[3]]);
        let lift = LiftedFilling::new(&f);
        assert_eq!(lift.degree(), 4);
        assert_eq!(lift.weight(1, 4), 1);
        assert_eq!(lift.weight(1, 2), 2);
        assert_eq!(lift.weight(3, 4), 3);
        for (x, y) in [(1, 3), (2, 3), (2, 4)] {
            assert_eq!(lift.weight(x, y), 0);
        }
        assert_eq!(lift.total(), f.total());
        assert_eq!(lift.restrict(), f);

        let z = Filling::zero(shape(&[3, 2]));
        assert_eq!(LiftedFilling::new(&z).total(), 0);

        let f = reference_input();
        let lift = LiftedFilling::new(&f);
        assert_eq!(lift.weight(5, 6), f.get(Cell::new(3, 3)).unwrap());
    }

    #[test]
    fn coxeter_rsk_small_example() {
        let f = filling(&[2, 1], &[&[1, 2], &[3]]);
        let c = CoxeterElement::from_cycle(&[1, 3, 4, 2]).unwrap();
        let g = coxeter_rsk(&c, &f).unwrap();
        assert_eq!(g.rows(), &[vec![1, 3], vec![4]]);
    }

    #[test]
    fn coxeter_rsk_zero_for_all_elements() {
        let z = Filling::zero(shape(&[2, 2]));
        for c in CoxeterElement::enumerate(4).unwrap() {
            assert_eq!(coxeter_rsk(&c, &z).unwrap(), z);
        }
    }

    #[test]
    fn coxeter_rsk_degree_mismatch() {
        let f = filling(&[2, 1], &[&[1, 2], &[3]]);
        let c = CoxeterElement::from_cycle(&[1, 2, 3]).unwrap();
        assert!(matches!(
            coxeter_rsk(&c, &f),
            Err(RskError::DegreeMismatch {
                expected: 4,
                got: 3
            })
        ));
    }

    #[test]
    fn special_element_examples() {
        assert_eq!(special_coxeter(&shape(&[2, 1])).cycle(), &[1, 3, 4, 2]);
        assert_eq!(special_coxeter(&shape(&[1])).cycle(), &[1, 2]);

        let c = special_coxeter(&shape(&[5, 3, 3, 2]));
        assert_eq!(c.cycle(), &[1, 4, 5, 7, 9, 8, 6, 3, 2]);
        assert_eq!(c.finals(), vec![1, 5, 7]);
        let interior_initials: Vec<usize> = c
            .initials()
            .into_iter()
            .filter(|i| (2..=7).contains(i))
            .collect();
        assert_eq!(interior_initials, vec![3, 6]);
    }

    #[test]
    fn special_element_is_unique_match_in_degree_nine() {
        // Exhaustive filter over all 128 elements: exactly one satisfies the
        // final/initial prescription for this shape.
        let lam = shape(&[5, 3, 3, 2]);
        let be = lam.elementary_bipartition();
        let mut in_b = [false; 10];
        for &x in be.b() {
            in_b[x] = true;
        }
        let finals: Vec<usize> = (1..9).filter(|&i| in_b[i] && !in_b[i + 1]).collect();
        let initials: Vec<usize> = (2..8).filter(|&i| !in_b[i] && in_b[i + 1]).collect();
        let matches: Vec<CoxeterElement> = CoxeterElement::enumerate(9)
            .unwrap()
            .into_iter()
            .filter(|c| {
                c.finals() == finals
                    && c.initials()
                        .into_iter()
                        .filter(|&i| (2..=7).contains(&i))
                        .collect::<Vec<_>>()
                        == initials
            })
            .collect();
        assert_eq!(matches.len(), 1);
        assert_eq!(matches[0], special_coxeter(&lam));
    }

    #[test]
    fn special_element_reproduces_classical_map() {
        let f = reference_input();
        let c = special_coxeter(f.shape());
        assert_eq!(coxeter_rsk(&c, &f).unwrap(), reference_output());
        assert_eq!(coxeter_rsk(&c.inverse(), &f).unwrap(), reference_output());
    }

    #[test]
    fn invert_guard_and_roundtrip() {
        let big = Filling::zero(shape(&[5, 3, 3, 2]));
        assert!(matches!(
            invert_rsk(&RskVariant::Gansner, &big),
            Err(RskError::Capacity(_))
        ));

        let g = filling(&[2, 1], &[&[1, 3], &[4]]);
        let f = invert_rsk(&RskVariant::Gansner, &g).unwrap().unwrap();
        assert_eq!(f.rows(), &[vec![1, 2], vec![3]]);

        let z = Filling::zero(shape(&[2, 1]));
        assert_eq!(invert_rsk(&RskVariant::Gansner, &z).unwrap().unwrap(), z);
    }

    #[test]
    fn invert_coxeter_variant() {
        let c = CoxeterElement::from_cycle(&[1, 3, 4, 2]).unwrap();
        let f = filling(&[2, 1], &[&[2, 0], &[1]]);
        let g = coxeter_rsk(&c, &f).unwrap();
        let back = invert_rsk(&RskVariant::Coxeter(c), &g).unwrap().unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn invert_rejects_unreachable_target() {
        // A non-RPP grid has no preimage.
        let g = filling(&[2, 1], &[&[3, 1], &[0]]);
        assert_eq!(invert_rsk(&RskVariant::Gansner, &g).unwrap(), None);
    }
}
