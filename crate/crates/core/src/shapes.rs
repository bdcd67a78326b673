//! Integer partitions, Ferrers-diagram geometry and fillings.
//!
//! Boxes are addressed as `(row, column)`, both 1-based: the box `(i, j)`
//! belongs to the shape exactly when `j <= parts[i-1]`. Diagonals, hook
//! length and poset ideals all follow from that convention.

use std::fmt;

use thiserror::Error;

/// Errors raised by shape and filling constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("partition must have at least one part")]
    EmptyPartition,
    #[error("partition parts must be positive and weakly decreasing (offending index {index})")]
    NotWeaklyDecreasing { index: usize },
    #[error("diagonal index {m} out of range; valid interval is 1..={max}")]
    DiagonalOutOfRange { m: isize, max: usize },
    #[error("box ({row},{col}) lies outside the shape")]
    CellOutsideShape { row: usize, col: usize },
    #[error("filling rows do not match the shape: {0}")]
    RowMismatch(String),
    #[error("not an interval bipartition: {0}")]
    InvalidBipartition(String),
    #[error("bipartition does not describe this shape")]
    BipartitionMismatch,
}

/// A box of a Ferrers diagram, addressed by 1-based row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Componentwise order on boxes: `self` lies in the ideal generated by `other`.
    pub fn le(&self, other: &Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A nonzero integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is nonempty, positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.is_empty() {
            return Err(ShapeError::EmptyPartition);
        }
        for (k, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(ShapeError::NotWeaklyDecreasing { index: k });
            }
        }
        if *parts.last().unwrap() == 0 {
            let index = parts.iter().position(|&p| p == 0).unwrap();
            return Err(ShapeError::NotWeaklyDecreasing { index });
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// λ_1, the first (largest) part.
    pub fn first(&self) -> usize {
        self.parts[0]
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of boxes in the diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Hook length of the box `(1,1)`: boxes in the first row or first column.
    pub fn hook_length(&self) -> usize {
        self.first() + self.len() - 1
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.len()
            && cell.col <= self.parts[cell.row - 1]
    }

    /// All boxes of the diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }

    /// The `m`th diagonal: boxes with `row - col + λ_1 = m`, ascending by row.
    ///
    /// Nonempty exactly for `1 <= m <= hook_length()`.
    pub fn diagonal(&self, m: isize) -> Result<Diagonal, ShapeError> {
        let max = self.hook_length();
        if m < 1 || m as usize > max {
            return Err(ShapeError::DiagonalOutOfRange { m, max });
        }
        let m = m as usize;
        let mut boxes = Vec::new();
        for i in 1..=self.len() {
            // j = i + λ_1 - m must land inside row i
            let j = i as isize + self.first() as isize - m as isize;
            if j >= 1 && j as usize <= self.parts[i - 1] {
                boxes.push(Cell::new(i, j as usize));
            }
        }
        debug_assert!(!boxes.is_empty());
        debug_assert!(boxes.windows(2).all(|w| w[1].row == w[0].row + 1));
        Ok(Diagonal { index: m, boxes })
    }

    /// All diagonals `D_1 ..= D_h`; they partition the diagram.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        (1..=self.hook_length() as isize)
            .map(|m| self.diagonal(m).unwrap())
            .collect()
    }

    /// Boxes of the poset ideal generated by `apex` (componentwise `<=`).
    pub fn ideal_boxes(&self, apex: Cell) -> Result<Vec<Cell>, ShapeError> {
        if !self.contains(apex) {
            return Err(ShapeError::CellOutsideShape {
                row: apex.row,
                col: apex.col,
            });
        }
        Ok(self.cells().into_iter().filter(|b| b.le(&apex)).collect())
    }

    /// The unique elementary interval bipartition with `partition() == self`.
    ///
    /// Row `i` gets the label `b_i = i + λ_1 - λ_i`; the remaining letters of
    /// `{1, .., hook_length()+1}` form `E`.
    pub fn elementary_bipartition(&self) -> IntervalBipartition {
        let n = self.hook_length() + 1;
        let b: Vec<usize> = (1..=self.len())
            .map(|i| i + self.first() - self.parts[i - 1])
            .collect();
        let mut in_b = vec![false; n + 1];
        for &x in &b {
            in_b[x] = true;
        }
        let e: Vec<usize> = (1..=n).filter(|&x| !in_b[x]).collect();
        let be = IntervalBipartition::new(b, e).expect("construction yields a valid bipartition");
        debug_assert!(be.is_elementary());
        debug_assert_eq!(be.partition().as_ref(), Some(self));
        be
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// One diagonal of a shape, with its boxes listed ascending by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonal {
    index: usize,
    boxes: Vec<Cell>,
}

impl Diagonal {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn boxes(&self) -> &[Cell] {
        &self.boxes
    }

    /// The componentwise-maximal box `(u_m, v_m)`; last in row order.
    pub fn apex(&self) -> Cell {
        *self.boxes.last().unwrap()
    }
}

/// An assignment of a nonnegative integer to every box of a shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<u64>>,
}

impl Filling {
    /// Ragged `rows` must match the shape exactly.
    pub fn new(shape: Partition, rows: Vec<Vec<u64>>) -> Result<Self, ShapeError> {
        if rows.len() != shape.len() {
            return Err(ShapeError::RowMismatch(format!(
                "expected {} rows, got {}",
                shape.len(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.parts()[i] {
                return Err(ShapeError::RowMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    shape.parts()[i]
                )));
            }
        }
        Ok(Filling { shape, rows })
    }

    pub fn zero(shape: Partition) -> Self {
        let rows = shape.parts().iter().map(|&len| vec![0; len]).collect();
        Filling { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Result<u64, ShapeError> {
        if !self.shape.contains(cell) {
            return Err(ShapeError::CellOutsideShape {
                row: cell.row,
                col: cell.col,
            });
        }
        Ok(self.rows[cell.row - 1][cell.col - 1])
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    pub fn max_entry(&self) -> u64 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// True when the filling weakly increases along rows and columns.
    pub fn is_rpp(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if j + 1 < row.len() && row[j + 1] < v {
                    return false;
                }
                if i + 1 < self.rows.len() && j < self.rows[i + 1].len() && self.rows[i + 1][j] < v
                {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", v)?;
            }
        }
        Ok(())
    }
}

/// A set partition `(B, E)` of an integer interval `{i, .., j}`.
///
/// Elementary when `1 ∈ B` and the maximum of the interval lies in `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalBipartition {
    b: Vec<usize>,
    e: Vec<usize>,
}

impl IntervalBipartition {
    pub fn new(b: Vec<usize>, e: Vec<usize>) -> Result<Self, ShapeError> {
        if b.is_empty() {
            return Err(ShapeError::InvalidBipartition("B is empty".into()));
        }
        let mut all: Vec<usize> = b.iter().chain(e.iter()).copied().collect();
        all.sort_unstable();
        for w in all.windows(2) {
            if w[0] == w[1] {
                return Err(ShapeError::InvalidBipartition(format!(
                    "{} occurs in both blocks",
                    w[0]
                )));
            }
        }
        let lo = all[0];
        let hi = *all.last().unwrap();
        if lo == 0 {
            return Err(ShapeError::InvalidBipartition("letters must be positive".into()));
        }
        if hi - lo + 1 != all.len() {
            return Err(ShapeError::InvalidBipartition(format!(
                "union is not the interval {}..={}",
                lo, hi
            )));
        }
        let mut b = b;
        let mut e = e;
        b.sort_unstable();
        e.sort_unstable();
        Ok(IntervalBipartition { b, e })
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn e(&self) -> &[usize] {
        &self.e
    }

    /// Smallest letter of the underlying interval.
    pub fn min(&self) -> usize {
        self.b[0].min(self.e.first().copied().unwrap_or(usize::MAX))
    }

    /// Largest letter of the underlying interval.
    pub fn max(&self) -> usize {
        (*self.b.last().unwrap()).max(self.e.last().copied().unwrap_or(0))
    }

    pub fn is_elementary(&self) -> bool {
        self.b[0] == 1 && self.e.last().copied() == Some(self.max())
    }

    /// The partition with parts `#{e ∈ E | e > b_i}`, or `None` when every
    /// part vanishes (the zero partition is not representable).
    pub fn partition(&self) -> Option<Partition> {
        let mut parts: Vec<usize> = self
            .b
            .iter()
            .map(|&bi| self.e.iter().filter(|&&e| e > bi).count())
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.is_empty() {
            None
        } else {
            Some(Partition::new(parts).expect("counting formula is weakly decreasing"))
        }
    }

    /// The transposition `(b_i, e_{q-j+1})` labelling box `(i, j)`.
    pub fn box_label(&self, shape: &Partition, cell: Cell) -> Result<(usize, usize), ShapeError> {
        if self.partition().as_ref() != Some(shape) {
            return Err(ShapeError::BipartitionMismatch);
        }
        if !shape.contains(cell) {
            return Err(ShapeError::CellOutsideShape {
                row: cell.row,
                col: cell.col,
            });
        }
        let q = self.e.len();
        let x = self.b[cell.row - 1];
        let y = self.e[q - cell.col];
        debug_assert!(x < y, "box existence forces b_i < e_(q-j+1)");
        Ok((x, y))
    }
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

    #[test]
    fn partition_rejects_empty_and_unsorted() {
        assert_eq!(Partition::new(vec![]), Err(ShapeError::EmptyPartition));
        assert!(matches!(
            Partition::new(vec![2, 3]),
            Err(ShapeError::NotWeaklyDecreasing { index: 0 })
        ));
        assert!(matches!(
            Partition::new(vec![2, 0]),
            Err(ShapeError::NotWeaklyDecreasing { .. })
        ));
    }

    #[test]
    fn hook_length_values() {
        assert_eq!(shape(&[5, 3, 3, 2]).hook_length(), 8);
        assert_eq!(shape(&[1]).hook_length(), 1);
        assert_eq!(shape(&[4]).hook_length(), 4);
    }

    #[test]
    fn diagonal_layout() {
        let lam = shape(&[5, 3, 3, 2]);
        let d5 = lam.diagonal(5).unwrap();
        assert_eq!(
            d5.boxes(),
            &[Cell::new(1, 1), Cell::new(2, 2), Cell::new(3, 3)]
        );
        assert_eq!(d5.apex(), Cell::new(3, 3));

        let d1 = lam.diagonal(1).unwrap();
        assert_eq!(d1.boxes(), &[Cell::new(1, 5)]);
        assert_eq!(d1.apex(), Cell::new(1, 5));

        let single = shape(&[1]);
        let d = single.diagonal(1).unwrap();
        assert_eq!(d.boxes(), &[Cell::new(1, 1)]);
    }

    #[test]
    fn diagonal_out_of_range_names_interval() {
        let lam = shape(&[5, 3, 3, 2]);
        let err = lam.diagonal(9).unwrap_err();
        assert_eq!(err, ShapeError::DiagonalOutOfRange { m: 9, max: 8 });
        assert!(err.to_string().contains("1..=8"));
        assert!(lam.diagonal(0).is_err());
    }

    #[test]
    fn diagonals_partition_the_diagram() {
        for parts in [vec![5, 3, 3, 2], vec![4, 4], vec![1], vec![3, 1, 1, 1]] {
            let lam = Partition::new(parts).unwrap();
            let mut seen: Vec<Cell> = lam
                .diagonals()
                .iter()
                .flat_map(|d| d.boxes().to_vec())
                .collect();
            seen.sort();
            let mut all = lam.cells();
            all.sort();
            assert_eq!(seen, all);
            for d in lam.diagonals() {
                let apex = d.apex();
                assert!(d.boxes().iter().all(|b| b.le(&apex)));
            }
        }
    }

    #[test]
    fn ideal_boxes_examples() {
        let lam = shape(&[5, 3, 3, 2]);
        let block = lam.ideal_boxes(Cell::new(3, 3)).unwrap();
        assert_eq!(block.len(), 9);
        assert!(block.iter().all(|b| b.row <= 3 && b.col <= 3));

        let row = lam.ideal_boxes(Cell::new(1, 5)).unwrap();
        assert_eq!(
            row,
            (1..=5).map(|j| Cell::new(1, j)).collect::<Vec<_>>()
        );

        assert_eq!(
            lam.ideal_boxes(Cell::new(1, 1)).unwrap(),
            vec![Cell::new(1, 1)]
        );

        assert!(matches!(
            lam.ideal_boxes(Cell::new(2, 4)),
            Err(ShapeError::CellOutsideShape { row: 2, col: 4 })
        ));
    }

    #[test]
    fn rpp_detection() {
        let yes = filling(
            &[5, 3, 3, 2],
            &[&[0, 3, 5, 5, 7], &[1, 5, 5], &[4, 6, 9], &[4, 10]],
        );
        assert!(yes.is_rpp());

        let no = filling(
            &[5, 3, 3, 2],
            &[&[1, 2, 1, 0, 3], &[2, 1, 1], &[2, 1, 3], &[3, 2]],
        );
        assert!(!no.is_rpp());

        assert!(Filling::zero(shape(&[4, 2, 1])).is_rpp());
    }

    #[test]
    fn filling_rejects_ragged_mismatch() {
        let lam = shape(&[2, 1]);
        assert!(Filling::new(lam.clone(), vec![vec![1, 2]]).is_err());
        assert!(Filling::new(lam, vec![vec![1], vec![2]]).is_err());
    }

    #[test]
    fn bipartition_partition_values() {
        let be = IntervalBipartition::new(vec![1, 2, 4, 8], vec![3, 5, 6, 7, 9]).unwrap();
        assert_eq!(be.partition(), Some(shape(&[5, 5, 4, 1])));

        let be = IntervalBipartition::new(vec![1], vec![2]).unwrap();
        assert_eq!(be.partition(), Some(shape(&[1])));

        let be = IntervalBipartition::new(vec![1, 4, 5, 7], vec![2, 3, 6, 8, 9]).unwrap();
        assert_eq!(be.partition(), Some(shape(&[5, 3, 3, 2])));

        // B dominating E collapses every part to zero.
        let be = IntervalBipartition::new(vec![2, 3], vec![1]).unwrap();
        assert_eq!(be.partition(), None);
    }

    #[test]
    fn bipartition_validation() {
        assert!(IntervalBipartition::new(vec![1, 3], vec![2, 4]).is_ok());
        assert!(IntervalBipartition::new(vec![1, 2], vec![2, 3]).is_err());
        assert!(IntervalBipartition::new(vec![1, 4], vec![2]).is_err());
        assert!(IntervalBipartition::new(vec![], vec![1]).is_err());
    }

    #[test]
    fn elementary_bipartition_examples() {
        let be = shape(&[5, 5, 4, 1]).elementary_bipartition();
        assert_eq!(be.b(), &[1, 2, 4, 8]);
        assert_eq!(be.e(), &[3, 5, 6, 7, 9]);

        let be = shape(&[1]).elementary_bipartition();
        assert_eq!(be.b(), &[1]);
        assert_eq!(be.e(), &[2]);

        let be = shape(&[5, 3, 3, 2]).elementary_bipartition();
        assert_eq!(be.b(), &[1, 4, 5, 7]);
        assert_eq!(be.e(), &[2, 3, 6, 8, 9]);
        assert!(be.is_elementary());
    }

    #[test]
    fn box_label_examples() {
        let lam = shape(&[5, 3, 3, 2]);
        let be = lam.elementary_bipartition();
        assert_eq!(be.box_label(&lam, Cell::new(1, 1)).unwrap(), (1, 9));
        assert_eq!(be.box_label(&lam, Cell::new(3, 3)).unwrap(), (5, 6));

        let lam = shape(&[2, 1]);
        let be = IntervalBipartition::new(vec![1, 3], vec![2, 4]).unwrap();
        assert_eq!(be.box_label(&lam, Cell::new(2, 1)).unwrap(), (3, 4));

        assert!(matches!(
            be.box_label(&lam, Cell::new(2, 2)),
            Err(ShapeError::CellOutsideShape { .. })
        ));
        let other = shape(&[2, 2]);
        assert_eq!(
            be.box_label(&other, Cell::new(1, 1)),
            Err(ShapeError::BipartitionMismatch)
        );
    }

    #[test]
    fn diagonal_bipartition_compatibility() {
        // Boxes of D_m are exactly the pairs with b_i <= m < e_(q-j+1) whose
        // diagonal index is m; the ideal of the apex collects all such pairs.
        for parts in [vec![5, 3, 3, 2], vec![3, 1], vec![2, 2], vec![4]] {
            let lam = Partition::new(parts).unwrap();
            let be = lam.elementary_bipartition();
            let q = be.e().len();
            for d in lam.diagonals() {
                let m = d.index();
                for cell in d.boxes() {
                    let bi = be.b()[cell.row - 1];
                    let ej = be.e()[q - cell.col];
                    assert!(bi <= m && m < ej);
                }
                let ideal = lam.ideal_boxes(d.apex()).unwrap();
                let by_condition: Vec<Cell> = lam
                    .cells()
                    .into_iter()
                    .filter(|cell| {
                        let bi = be.b()[cell.row - 1];
                        let ej = be.e()[q - cell.col];
                        bi <= m && m < ej
                    })
                    .collect();
                assert_eq!(ideal, by_condition);
            }
        }
    }
}
