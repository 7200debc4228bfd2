//! Fillings of key and Young diagrams and the statistics defined on them.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::shapes::{Cell, Composition, Diagram, DiagramKind, Partition, ShapeError, WeakComposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillingError {
    #[error("cannot parse filling {0:?}: expected rows like \"1,6;2;3,4,2\"")]
    Parse(String),
    #[error("entries must be positive integers")]
    ZeroEntry,
    #[error("row {row} has {got} entries but the diagram row has {expected} cells")]
    RowMismatch { row: usize, expected: usize, got: usize },
    #[error("operation needs a {0:?} diagram")]
    WrongKind(DiagramKind),
    #[error("filling is not standard")]
    NotStandard,
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// Value assigned to the basement cell of row `r`: larger than every entry,
/// and increasing with the row.
pub(crate) const BASEMENT: usize = usize::MAX / 2;

/// An assignment of a positive integer to every cell of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Filling {
    rows: Vec<Vec<usize>>,
    kind: DiagramKind,
}

impl Filling {
    /// `rows[i]` lists the entries of row `i + 1`, left to right.
    pub fn new(kind: DiagramKind, rows: Vec<Vec<usize>>) -> Result<Self, FillingError> {
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(FillingError::ZeroEntry);
        }
        // validates the shape (Young rows must weakly decrease, key needs a row)
        Diagram::from_rows(kind, rows.iter().map(Vec::len).collect())?;
        Ok(Self { rows, kind })
    }

    /// Fill a given diagram; row lengths must match.
    pub fn on(diagram: &Diagram, rows: Vec<Vec<usize>>) -> Result<Self, FillingError> {
        let expected = diagram.row_lengths();
        for (i, r) in rows.iter().enumerate() {
            let e = expected.get(i).copied().unwrap_or(0);
            if r.len() != e {
                return Err(FillingError::RowMismatch { row: i + 1, expected: e, got: r.len() });
            }
        }
        if rows.len() < expected.len() {
            let i = rows.len();
            return Err(FillingError::RowMismatch { row: i + 1, expected: expected[i], got: 0 });
        }
        Self::new(diagram.kind(), rows)
    }

    /// Parse the text format on a key diagram; the shape is read off the row lengths.
    pub fn parse_key(s: &str) -> Result<Self, FillingError> {
        Self::new(DiagramKind::Key, parse_rows(s)?)
    }

    pub fn parse_young(s: &str) -> Result<Self, FillingError> {
        let mut rows = parse_rows(s)?;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Self::new(DiagramKind::Young, rows)
    }

    pub(crate) fn from_rows_unchecked(kind: DiagramKind, rows: Vec<Vec<usize>>) -> Self {
        Self { rows, kind }
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn diagram(&self) -> Diagram {
        Diagram::from_rows(self.kind, self.rows.iter().map(Vec::len).collect()).expect("validated at construction")
    }

    /// Row lengths as a weak composition.
    pub fn shape(&self) -> WeakComposition {
        WeakComposition::new(self.rows.iter().map(Vec::len).collect()).unwrap_or_else(|_| WeakComposition::zeros(1))
    }

    pub fn young_shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.rows.get(row.wrapping_sub(1)).map_or(0, Vec::len)
    }

    pub fn size(&self) -> usize {
        crate::shapes::checked_total(&self.rows.iter().map(Vec::len).collect::<Vec<_>>())
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col >= 1 && c.col <= self.row_len(c.row)
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        if self.contains(c) {
            Some(self.rows[c.row - 1][c.col - 1])
        } else {
            None
        }
    }

    /// Entry of a diagram cell. Panics outside the diagram.
    pub fn at(&self, c: Cell) -> usize {
        self.rows[c.row - 1][c.col - 1]
    }

    pub(crate) fn set(&mut self, c: Cell, v: usize) {
        self.rows[c.row - 1][c.col - 1] = v;
    }

    /// Entry with the key basement convention: column 0 holds an
    /// infinite value that grows with the row.
    pub(crate) fn value(&self, c: Cell) -> usize {
        if c.col == 0 {
            BASEMENT + c.row
        } else {
            self.at(c)
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| (1..=r.len()).map(move |c| Cell::new(i + 1, c)))
    }

    pub fn column_reading_order(&self) -> Vec<Cell> {
        self.diagram().column_reading_order()
    }

    /// Entries read in column reading order.
    pub fn column_word(&self) -> Vec<usize> {
        self.column_reading_order().into_iter().map(|c| self.at(c)).collect()
    }

    /// Entries are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Cell holding each value of a standard filling; index 0 unused.
    pub fn positions(&self) -> Result<Vec<Cell>, FillingError> {
        if !self.is_standard() {
            return Err(FillingError::NotStandard);
        }
        let mut pos = vec![Cell::new(0, 0); self.size() + 1];
        for c in self.cells() {
            pos[self.at(c)] = c;
        }
        Ok(pos)
    }

    /// `wt[i]` is the number of entries equal to `i + 1`, over `n` values.
    pub fn weight(&self, n: usize) -> Vec<usize> {
        let mut w = vec![0; n];
        for &v in self.rows.iter().flatten() {
            if v > w.len() {
                w.resize(v, 0);
            }
            w[v - 1] += 1;
        }
        w
    }

    /// Shift every row up by `m`, leaving `m` empty rows at the bottom.
    pub fn pad(&self, m: usize) -> Filling {
        let mut rows = vec![Vec::new(); m];
        rows.extend(self.rows.iter().cloned());
        Filling { rows, kind: self.kind }
    }

    fn require(&self, kind: DiagramKind) -> Result<(), FillingError> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(FillingError::WrongKind(kind))
        }
    }
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>, FillingError> {
    let err = || FillingError::Parse(s.to_string());
    s.trim()
        .split(';')
        .map(|row| {
            let row = row.trim();
            if row.is_empty() {
                return Ok(Vec::new());
            }
            row.split(',').map(|e| e.trim().parse::<usize>().map_err(|_| err())).collect()
        })
        .collect()
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Result of the weak descent computation: a weak composition, or virtual
/// when some block would have to sit below row 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeakDescent {
    Virtual,
    Comp(WeakComposition),
}

impl WeakDescent {
    pub fn is_virtual(&self) -> bool {
        matches!(self, WeakDescent::Virtual)
    }

    pub fn composition(&self) -> Option<&WeakComposition> {
        match self {
            WeakDescent::Virtual => None,
            WeakDescent::Comp(c) => Some(c),
        }
    }
}

impl fmt::Display for WeakDescent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeakDescent::Virtual => f.write_str("VIRTUAL"),
            WeakDescent::Comp(c) => c.fmt(f),
        }
    }
}

/// No equal entries in attacking cells, and no first-column entry above its row index.
pub fn is_non_attacking(t: &Filling) -> Result<bool, FillingError> {
    t.require(DiagramKind::Key)?;
    let cells: Vec<Cell> = t.cells().collect();
    for (i, &u) in cells.iter().enumerate() {
        if u.col == 1 && t.at(u) > u.row {
            return Ok(false);
        }
        for &v in &cells[i + 1..] {
            if t.at(u) == t.at(v) && Diagram::attacking(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sum of legs over cells whose entry exceeds the entry to the left.
/// First-column cells compare against the basement and never count.
pub fn maj(t: &Filling) -> usize {
    t.cells().filter(|&c| t.at(c) > t.value(Cell::new(c.row, c.col - 1))).map(|c| t.row_len(c.row) - c.col + 1).sum()
}

/// True when the three cells, listed in `cyc`, are visited in increasing
/// order of value by going around `cyc` cyclically. Ties put `x` last.
fn cyclic_increasing(t: &Filling, cyc: [Cell; 3], x: Cell) -> bool {
    let mut order = cyc;
    order.sort_by_key(|&c| (t.value(c), c == x));
    (0..3).any(|k| (0..3).all(|j| order[j] == cyc[(j + k) % 3]))
}

/// A triple: row-adjacent pair `x = (r,c)`, `y = (r,c+1)` (x may be a basement
/// cell) and a third cell `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Triple {
    pub x: Cell,
    pub y: Cell,
    pub z: Cell,
    pub type_one: bool,
}

impl Triple {
    pub(crate) fn is_coinversion(&self, t: &Filling) -> bool {
        if self.type_one {
            !cyclic_increasing(t, [self.z, self.y, self.x], self.x)
        } else {
            cyclic_increasing(t, [self.x, self.y, self.z], self.x)
        }
    }
}

/// All triples of a key shape.
pub(crate) fn triples(rows: &[usize]) -> Vec<Triple> {
    let n = rows.len();
    let in_aug = |c: Cell| c.row >= 1 && c.row <= n && c.col <= rows[c.row - 1];
    let mut out = Vec::new();
    for r in 1..=n {
        let len = rows[r - 1];
        for c in 0..len {
            let (x, y) = (Cell::new(r, c), Cell::new(r, c + 1));
            for rp in 1..=n {
                let other = rows[rp - 1];
                if rp > r && in_aug(Cell::new(rp, c)) && len > other {
                    out.push(Triple { x, y, z: Cell::new(rp, c), type_one: true });
                }
                if rp < r && c < other && len >= other {
                    out.push(Triple { x, y, z: Cell::new(rp, c + 1), type_one: false });
                }
            }
        }
    }
    out
}

/// Number of co-inversion triples of a key filling.
pub fn coinv(t: &Filling) -> usize {
    let rows: Vec<usize> = t.rows.iter().map(Vec::len).collect();
    triples(&rows).iter().filter(|tr| tr.is_coinversion(t)).count()
}

/// Co-inversions computed from arms, descents and attacking pairs instead of triples.
pub fn coinv_by_formula(t: &Filling) -> Result<usize, FillingError> {
    t.require(DiagramKind::Key)?;
    let d = t.diagram();
    let shape = d.row_lengths();
    let n = shape.len();
    let mut total: i64 = 0;
    for c in t.cells() {
        let arm = d.arm(c)? as i64;
        total += arm;
        if t.at(c) > t.value(Cell::new(c.row, c.col - 1)) {
            total += arm;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if shape[i] <= shape[j] {
                total += 1;
            }
        }
    }
    // column reading order with the basement as column 0
    let mut order: Vec<Cell> = (1..=n).map(|r| Cell::new(r, 0)).collect();
    order.extend(d.column_reading_order());
    for (i, &c) in order.iter().enumerate() {
        for &e in &order[i + 1..] {
            if Diagram::attacking(c, e) && t.value(c) < t.value(e) {
                total -= 1;
            }
        }
    }
    usize::try_from(total).map_err(|_| FillingError::NotStandard)
}

/// Weak descent composition of a standard key filling.
pub fn weak_descent_composition(t: &Filling) -> Result<WeakDescent, FillingError> {
    t.require(DiagramKind::Key)?;
    let pos = t.positions()?;
    let big_n = t.size();
    let n = t.num_rows();
    if big_n == 0 {
        return Ok(WeakDescent::Comp(WeakComposition::zeros(n)));
    }
    // blocks of N..1, broken before i when i+1 is weakly right of i
    let mut blocks: Vec<(usize, usize)> = vec![(big_n, 1)]; // (first element, size)
    for i in (1..big_n).rev() {
        if pos[i + 1].col >= pos[i].col {
            blocks.push((i, 1));
        } else {
            blocks.last_mut().expect("nonempty").1 += 1;
        }
    }
    let mut res = vec![0; n];
    let mut t_prev: Option<i64> = None;
    for (first, size) in blocks {
        let cell = pos[first];
        let row = cell.row as i64;
        let ti = match t_prev {
            None => {
                if cell.col == 1 {
                    row
                } else {
                    n as i64
                }
            }
            Some(p) => {
                if cell.col == 1 {
                    row.min(p - 1)
                } else {
                    p - 1
                }
            }
        };
        if ti <= 0 {
            return Ok(WeakDescent::Virtual);
        }
        res[ti as usize - 1] = size;
        t_prev = Some(ti);
    }
    Ok(WeakDescent::Comp(WeakComposition::new(res)?))
}

/// Legs of cells (not in row 1) whose entry is at most the entry directly below.
pub fn comaj(u: &Filling) -> Result<usize, FillingError> {
    u.require(DiagramKind::Young)?;
    let d = u.diagram();
    let mut s = 0;
    for c in u.cells().filter(|c| c.row > 1) {
        if u.at(c) <= u.at(Cell::new(c.row - 1, c.col)) {
            s += d.leg(c)?;
        }
    }
    Ok(s)
}

/// Inversion triples of a Young filling. Equal entries are compared by the
/// row reading order (top row first, left to right): the earlier one is smaller.
pub fn inv(u: &Filling) -> Result<usize, FillingError> {
    u.require(DiagramKind::Young)?;
    let h = u.rows.len();
    let key = |r: usize, c: usize| (u.rows[r][c], h - r, c);
    let mut s = 0;
    for (ri, row) in u.rows.iter().enumerate() {
        for c1 in 0..row.len() {
            for c2 in c1 + 1..row.len() {
                let (a, b) = (key(ri, c1), key(ri, c2));
                if ri == 0 {
                    s += usize::from(a > b);
                } else {
                    let w = key(ri - 1, c1);
                    // counterclockwise reading u -> w -> v
                    if (b < a && a < w) || (a < w && w < b) || (w < b && b < a) {
                        s += 1;
                    }
                }
            }
        }
    }
    Ok(s)
}

/// `i` is a descent when `i + 1` comes before `i` in the row reading word
/// (rows from top to bottom, each left to right). On standard Young tableaux
/// this is the same as `i + 1` lying weakly left of `i`.
pub fn descent_set(u: &Filling) -> Result<Vec<usize>, FillingError> {
    let pos = u.positions()?;
    let rank = |c: Cell| (std::cmp::Reverse(c.row), c.col);
    Ok((1..u.size()).filter(|&i| rank(pos[i + 1]) < rank(pos[i])).collect())
}

pub fn descent_composition(u: &Filling) -> Result<Composition, FillingError> {
    u.require(DiagramKind::Young)?;
    Ok(Composition::from_descent_set(&descent_set(u)?, u.size()))
}

/// Rows weakly decrease, columns have distinct entries, and whenever `i` sits
/// above `k` in a column with `i < k`, the cell right of `k` holds some `j > i`.
pub fn is_key_tableau(t: &Filling) -> bool {
    if t.kind != DiagramKind::Key {
        return false;
    }
    for row in &t.rows {
        if row.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
    }
    let width = t.rows.iter().map(Vec::len).max().unwrap_or(0);
    for col in 1..=width {
        let column: Vec<(usize, usize)> =
            (1..=t.num_rows()).filter(|&r| t.row_len(r) >= col).map(|r| (r, t.at(Cell::new(r, col)))).collect();
        for (p, &(rk, k)) in column.iter().enumerate() {
            for &(_, i) in &column[p + 1..] {
                if i == k {
                    return false;
                }
                if i < k {
                    match t.get(Cell::new(rk, col + 1)) {
                        Some(j) if j > i => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// Key tableau with every entry at most its row index.
pub fn is_semistandard_key_tableau(t: &Filling) -> bool {
    is_key_tableau(t) && t.cells().all(|c| t.at(c) <= c.row)
}
