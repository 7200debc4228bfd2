//! Weak compositions, partitions, compositions and the cell geometry of key
//! and Young diagrams.
//!
//! Rows are numbered from 1 at the bottom and increase upward; columns are
//! numbered from 1 at the left. Column 0 is reserved for the basement of a
//! key diagram and never holds a cell of the diagram itself.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("cannot parse shape {0:?}: expected a parenthesised list such as \"(0,2,1,2)\"")]
    Parse(String),
    #[error("a weak composition needs at least one part")]
    Empty,
    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("cell ({row},{col}) is not in the diagram")]
    CellOutside { row: usize, col: usize },
    #[error("arm is only defined on key diagrams")]
    ArmOnYoung,
    #[error("integer overflow while counting cells")]
    Overflow,
}

/// Sum of parts, aborting on overflow.
pub(crate) fn checked_total(parts: &[usize]) -> usize {
    parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p)).expect("cell count overflowed usize")
}

fn parse_parts(s: &str) -> Result<Vec<usize>, ShapeError> {
    let t = s.trim();
    let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t).trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| ShapeError::Parse(s.to_string()))).collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// A finite sequence of nonnegative integers. Trailing and leading zeros are
/// significant: the length is the number of rows (and variables).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.is_empty() {
            return Err(ShapeError::Empty);
        }
        Ok(Self(parts))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n.max(1)])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of cells of the key diagram.
    pub fn size(&self) -> usize {
        checked_total(&self.0)
    }

    pub fn part(&self, row: usize) -> usize {
        self.0[row - 1]
    }

    /// Remove zero parts, keeping order.
    pub fn flatten(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Nonzero parts sorted into a partition.
    pub fn sort_to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// The j-th part is the number of rows of length at least j.
    pub fn column_lengths(&self) -> Partition {
        let width = self.0.iter().copied().max().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `self >= other` in the prefix-sum order.
    pub fn dominates(&self, other: &WeakComposition) -> Result<bool, ShapeError> {
        if self.len() != other.len() {
            return Err(ShapeError::LengthMismatch(self.len(), other.len()));
        }
        let (mut s, mut o) = (0usize, 0usize);
        for (x, y) in self.0.iter().zip(&other.0) {
            s += x;
            o += y;
            if s < o {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `0^m × self`.
    pub fn pad(&self, m: usize) -> WeakComposition {
        let mut parts = vec![0; m];
        parts.extend_from_slice(&self.0);
        WeakComposition(parts)
    }

    /// Inverse of [`pad`](Self::pad): drops `m` leading parts if they are all zero.
    pub fn unpad(&self, m: usize) -> Option<WeakComposition> {
        if m >= self.len() || self.0[..m].iter().any(|&p| p != 0) {
            return None;
        }
        Some(WeakComposition(self.0[m..].to_vec()))
    }

    /// All weak compositions of the given length and total, in lexicographic order.
    pub fn all(len: usize, total: usize) -> Vec<WeakComposition> {
        fn rec(len: usize, total: usize, cur: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
            if cur.len() + 1 == len {
                cur.push(total);
                out.push(WeakComposition(cur.clone()));
                cur.pop();
                return;
            }
            for first in 0..=total {
                cur.push(first);
                rec(len, total - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if len == 0 {
            return out;
        }
        rec(len, total, &mut Vec::with_capacity(len), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for WeakComposition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<WeakComposition> for Vec<usize> {
    fn from(a: WeakComposition) -> Self {
        a.0
    }
}

impl FromStr for WeakComposition {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_parts(s)?)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A weakly decreasing sequence of positive integers (zeros are dropped).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        checked_total(&self.0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// All partitions of `n` in reverse lexicographic order ((n) first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The partition read as a weak composition of the given length.
    pub fn to_weak(&self, len: usize) -> WeakComposition {
        let mut parts = self.0.clone();
        parts.resize(len.max(parts.len()).max(1), 0);
        WeakComposition(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A sequence of positive integers; may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.contains(&0) {
            return Err(ShapeError::ZeroPart(parts));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        checked_total(&self.0)
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Proper partial sums, i.e. the associated subset of `[size-1]`.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`descent_set`](Self::descent_set) for a composition of `n`.
    pub fn from_descent_set(set: &[usize], n: usize) -> Composition {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in set.iter().chain(std::iter::once(&n)) {
            if d > prev {
                parts.push(d - prev);
                prev = d;
            }
        }
        Composition(parts)
    }

    /// `self` refines `coarser`: equal totals and every partial sum of
    /// `coarser` is a partial sum of `self`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.size() != coarser.size() {
            return false;
        }
        let mine = self.descent_set();
        coarser.descent_set().iter().all(|s| mine.binary_search(s).is_ok())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl FromStr for Composition {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_parts(s)?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DiagramKind {
    Key,
    Young,
}

/// Left-justified rows of cells; `rows[i]` is the length of row `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    kind: DiagramKind,
    rows: Vec<usize>,
}

impl Diagram {
    pub fn key(a: &WeakComposition) -> Self {
        Self { kind: DiagramKind::Key, rows: a.parts().to_vec() }
    }

    pub fn young(lambda: &Partition) -> Self {
        Self { kind: DiagramKind::Young, rows: lambda.parts().to_vec() }
    }

    /// Build from explicit row lengths, validating Young shapes.
    pub fn from_rows(kind: DiagramKind, rows: Vec<usize>) -> Result<Self, ShapeError> {
        match kind {
            DiagramKind::Key => Ok(Self::key(&WeakComposition::new(rows)?)),
            DiagramKind::Young => Ok(Self::young(&Partition::new(rows)?)),
        }
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 || row > self.rows.len() {
            0
        } else {
            self.rows[row - 1]
        }
    }

    pub fn width(&self) -> usize {
        self.rows.iter().copied().max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        checked_total(&self.rows)
    }

    /// The weak composition of a key diagram.
    pub fn shape(&self) -> WeakComposition {
        WeakComposition(if self.rows.is_empty() { vec![0] } else { self.rows.clone() })
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col >= 1 && c.col <= self.row_len(c.row)
    }

    /// Cell of the diagram or, for a key diagram, a basement cell `(r, 0)`.
    pub fn contains_augmented(&self, c: Cell) -> bool {
        self.contains(c) || (self.kind == DiagramKind::Key && c.col == 0 && c.row >= 1 && c.row <= self.num_rows())
    }

    /// Cells row by row, bottom to top, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    /// Leftmost column bottom to top, then the next column to the right.
    pub fn column_reading_order(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for col in 1..=self.width() {
            for row in 1..=self.num_rows() {
                if self.row_len(row) >= col {
                    out.push(Cell::new(row, col));
                }
            }
        }
        out
    }

    /// Key: cells in the row weakly right of `c`. Young: cells in the column weakly above `c`.
    pub fn leg(&self, c: Cell) -> Result<usize, ShapeError> {
        self.check(c)?;
        Ok(match self.kind {
            DiagramKind::Key => self.row_len(c.row) - c.col + 1,
            DiagramKind::Young => (c.row..=self.num_rows()).take_while(|&r| self.row_len(r) >= c.col).count(),
        })
    }

    /// Cells below `c` in its column in weakly shorter rows, plus cells above
    /// `c` one column to the left in strictly shorter rows. For a first-column
    /// cell the column to the left is the basement, which has a cell in every row.
    pub fn arm(&self, c: Cell) -> Result<usize, ShapeError> {
        if self.kind != DiagramKind::Key {
            return Err(ShapeError::ArmOnYoung);
        }
        self.check(c)?;
        let len = self.row_len(c.row);
        let below = (1..c.row).filter(|&r| self.row_len(r) >= c.col && self.row_len(r) <= len).count();
        let above = (c.row + 1..=self.num_rows())
            .filter(|&r| self.contains_augmented(Cell::new(r, c.col - 1)) && self.row_len(r) < len)
            .count();
        Ok(below + above)
    }

    /// Same column, or adjacent columns with the left cell strictly higher.
    /// Basement cells take part as column 0.
    pub fn attacking(u: Cell, v: Cell) -> bool {
        if u == v {
            return false;
        }
        if u.col == v.col {
            return true;
        }
        let (l, r) = if u.col < v.col { (u, v) } else { (v, u) };
        l.col + 1 == r.col && l.row > r.row
    }

    fn check(&self, c: Cell) -> Result<(), ShapeError> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(ShapeError::CellOutside { row: c.row, col: c.col })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn flatten_examples() {
        assert_eq!(wc("(0,2,1,2)").flatten().parts(), &[2, 1, 2]);
        assert!(wc("(0,0,0)").flatten().is_empty());
        assert_eq!(wc("(1,2,0,2)").flatten().parts(), &[1, 2, 2]);
    }

    #[test]
    fn sort_examples() {
        assert_eq!(wc("(2,1,2)").sort_to_partition(), pt("(2,2,1)"));
        assert!(wc("(0,0)").sort_to_partition().is_empty());
        assert_eq!(wc("(3,0,2)").sort_to_partition(), pt("(3,2)"));
    }

    #[test]
    fn refines_examples() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        assert!(c("(1,2,2)").refines(&c("(3,2)")));
        assert!(!c("(1,2,2)").refines(&c("(2,3)")));
        assert!(c("(5)").refines(&c("(5)")));
        assert!(!c("(1,1)").refines(&c("(3)")));
    }

    #[test]
    fn dominates_examples() {
        assert!(wc("(1,2,1,1)").dominates(&wc("(0,2,1,2)")).unwrap());
        assert!(wc("(0,2,1,2)").dominates(&wc("(0,2,1,2)")).unwrap());
        assert!(!wc("(0,2,1,2)").dominates(&wc("(1,2,1,1)")).unwrap());
        assert_eq!(wc("(1,2)").dominates(&wc("(1,2,0)")), Err(ShapeError::LengthMismatch(2, 3)));
    }

    #[test]
    fn conjugate_and_column_lengths() {
        assert_eq!(pt("(2,2,1)").conjugate(), pt("(3,2)"));
        assert_eq!(pt("()").conjugate(), pt("()"));
        assert_eq!(pt("(3,2)").conjugate(), pt("(2,2,1)"));
        assert_eq!(wc("(3,0,2)").column_lengths(), pt("(2,2,1)"));
        assert_eq!(wc("(2,1,2)").column_lengths(), pt("(3,2)"));
        assert_eq!(wc("(4)").column_lengths(), pt("(1,1,1,1)"));
    }

    #[test]
    fn leg_examples() {
        let d = Diagram::key(&wc("(2,1,3,0,0,2)"));
        assert_eq!(d.leg(Cell::new(3, 2)).unwrap(), 2);
        assert_eq!(d.leg(Cell::new(3, 3)).unwrap(), 1);
        assert_eq!(d.leg(Cell::new(4, 1)), Err(ShapeError::CellOutside { row: 4, col: 1 }));
        let y = Diagram::young(&pt("(4,3,1)"));
        assert_eq!(y.leg(Cell::new(2, 1)).unwrap(), 2);
        assert_eq!(y.leg(Cell::new(1, 4)).unwrap(), 1);
    }

    #[test]
    fn arm_examples() {
        assert_eq!(Diagram::key(&wc("(1)")).arm(Cell::new(1, 1)).unwrap(), 0);
        assert_eq!(Diagram::key(&wc("(1,1)")).arm(Cell::new(2, 1)).unwrap(), 1);
        // the first-column cell of the lower row sees the empty basement row above it
        assert_eq!(Diagram::key(&wc("(1,0)")).arm(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(Diagram::young(&pt("(1)")).arm(Cell::new(1, 1)), Err(ShapeError::ArmOnYoung));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(wc(" ( 0, 2,1 ,2 ) ").to_string(), "(0,2,1,2)");
        assert_eq!(wc("3,1").to_string(), "(3,1)");
        assert!("(1,x)".parse::<WeakComposition>().is_err());
        assert_eq!("()".parse::<WeakComposition>(), Err(ShapeError::Empty));
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("(1,0)".parse::<Composition>().is_err());
    }

    #[test]
    fn enumerators() {
        assert_eq!(WeakComposition::all(3, 2).len(), 6);
        assert_eq!(Partition::all(5).len(), 7);
        assert_eq!(Partition::all(0), vec![Partition::default()]);
    }

    #[test]
    fn descent_sets() {
        let c: Composition = "(2,1,2)".parse().unwrap();
        assert_eq!(c.descent_set(), vec![2, 3]);
        assert_eq!(Composition::from_descent_set(&[2, 3], 5), c);
    }
}
