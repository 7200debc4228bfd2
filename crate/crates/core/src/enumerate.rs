//! Generators for the tableau and tabloid families, and the standardization maps.
//!
//! Every generator backtracks over the cells in column reading order, checking
//! each constraint as soon as its last cell is filled. Values are tried in
//! increasing order, so output is sorted lexicographically by column reading word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fillings::{self, Filling, FillingError, Triple, WeakDescent};
use crate::shapes::{Cell, Diagram, DiagramKind, Partition, WeakComposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("family {family} is defined on {expected:?} diagrams")]
    WrongKind { family: Family, expected: DiagramKind },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("filling {0} is not in the family {1}")]
    NotInFamily(String, Family),
    #[error("weight {weight} is not admissible for descent {des}")]
    InvalidWeight { weight: String, des: String },
    #[error(transparent)]
    Filling(#[from] FillingError),
}

/// The families that can be listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Semi-standard key tableaux: entries bounded by the row index.
    Sskt,
    /// Standard key tableaux.
    Skt,
    /// Semi-standard key tabloids: non-attacking, entries at most the number
    /// of rows, no co-inversion triples.
    Sskd,
    /// Standard key tabloids: bijective, no co-inversion triples.
    Skd,
    /// Semi-standard Young tableaux with entries at most the given bound.
    Ssyt(usize),
    Syt,
    /// Standard Young tabloids: bijective, no inversion triples.
    Syd,
    /// Every bijective filling of a Young diagram.
    StdFillings,
}

impl Family {
    pub fn kind(self) -> DiagramKind {
        match self {
            Family::Sskt | Family::Skt | Family::Sskd | Family::Skd => DiagramKind::Key,
            _ => DiagramKind::Young,
        }
    }

    pub fn is_standard(self) -> bool {
        matches!(self, Family::Skt | Family::Skd | Family::Syt | Family::Syd | Family::StdFillings)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Sskt => f.write_str("SSKT"),
            Family::Skt => f.write_str("SKT"),
            Family::Sskd => f.write_str("SSKD"),
            Family::Skd => f.write_str("SKD"),
            Family::Ssyt(n) => write!(f, "SSYT({n})"),
            Family::Syt => f.write_str("SYT"),
            Family::Syd => f.write_str("SYD"),
            Family::StdFillings => f.write_str("STD_FILLINGS"),
        }
    }
}

impl FromStr for Family {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let u = s.trim().to_ascii_uppercase();
        Ok(match u.as_str() {
            "SSKT" => Family::Sskt,
            "SKT" => Family::Skt,
            "SSKD" => Family::Sskd,
            "SKD" => Family::Skd,
            "SYT" => Family::Syt,
            "SYD" => Family::Syd,
            "STD_FILLINGS" | "STD" => Family::StdFillings,
            _ => {
                let n = u
                    .strip_prefix("SSYT(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|n| n.trim().parse().ok())
                    .ok_or_else(|| EnumError::UnknownFamily(s.to_string()))?;
                Family::Ssyt(n)
            }
        })
    }
}

#[derive(Debug, Clone, Copy)]
enum Constraint {
    /// Values differ.
    Distinct(Cell, Cell),
    /// `first >= second` (`strict`: `>`).
    Geq(Cell, Cell, bool),
    /// If the upper entry is smaller than the lower one, the cell right of the
    /// lower one must exist and exceed the upper entry.
    KeyColumn {
        lower: Cell,
        upper: Cell,
        right: Option<Cell>,
    },
    NoCoinversion(Triple),
    /// Young row pair `u` left of `v`, with `w` under `u` when not in row 1.
    NoInversion {
        u: Cell,
        v: Cell,
        w: Option<Cell>,
    },
}

impl Constraint {
    fn cells(&self) -> Vec<Cell> {
        match *self {
            Constraint::Distinct(a, b) | Constraint::Geq(a, b, _) => vec![a, b],
            Constraint::KeyColumn { lower, upper, right } => {
                let mut v = vec![lower, upper];
                v.extend(right);
                v
            }
            Constraint::NoCoinversion(t) => vec![t.x, t.y, t.z],
            Constraint::NoInversion { u, v, w } => {
                let mut out = vec![u, v];
                out.extend(w);
                out
            }
        }
    }

    fn holds(&self, t: &Filling) -> bool {
        match *self {
            Constraint::Distinct(a, b) => t.at(a) != t.at(b),
            Constraint::Geq(a, b, strict) => {
                if strict {
                    t.at(a) > t.at(b)
                } else {
                    t.at(a) >= t.at(b)
                }
            }
            Constraint::KeyColumn { lower, upper, right } => {
                let (i, k) = (t.at(upper), t.at(lower));
                i >= k || right.is_some_and(|r| t.at(r) > i)
            }
            Constraint::NoCoinversion(tr) => !tr.is_coinversion(t),
            Constraint::NoInversion { u, v, w } => {
                let (a, b) = (t.at(u), t.at(v));
                match w {
                    None => a < b,
                    Some(w) => {
                        let w = t.at(w);
                        !((b < a && a < w) || (a < w && w < b) || (w < b && b < a))
                    }
                }
            }
        }
    }
}

struct Plan {
    order: Vec<Cell>,
    bound: Vec<usize>,
    standard: bool,
    /// Constraints whose last cell in reading order is at this position.
    checks: Vec<Vec<Constraint>>,
    rows: Vec<usize>,
    kind: DiagramKind,
}

fn plan(family: Family, d: &Diagram) -> Plan {
    let order = d.column_reading_order();
    let pos = |c: Cell| order.iter().position(|&o| o == c);
    let big_n = order.len();
    let n_rows = d.num_rows();
    let rows = d.row_lengths().to_vec();
    let bound = order
        .iter()
        .map(|c| match family {
            Family::Sskt => c.row,
            Family::Sskd => {
                if c.col == 1 {
                    c.row.min(n_rows)
                } else {
                    n_rows
                }
            }
            Family::Ssyt(n) => n,
            _ => big_n,
        })
        .collect();

    let mut cons = Vec::new();
    let cells: Vec<Cell> = d.cells().collect();
    match family {
        Family::Sskd => {
            for (i, &u) in cells.iter().enumerate() {
                for &v in &cells[i + 1..] {
                    if Diagram::attacking(u, v) {
                        cons.push(Constraint::Distinct(u, v));
                    }
                }
            }
            cons.extend(fillings::triples(&rows).into_iter().map(Constraint::NoCoinversion));
        }
        Family::Skd => {
            cons.extend(fillings::triples(&rows).into_iter().map(Constraint::NoCoinversion));
        }
        Family::Sskt | Family::Skt => {
            for &c in &cells {
                if c.col > 1 {
                    cons.push(Constraint::Geq(Cell::new(c.row, c.col - 1), c, false));
                }
            }
            for &lower in &cells {
                for r in lower.row + 1..=n_rows {
                    let upper = Cell::new(r, lower.col);
                    if d.contains(upper) {
                        cons.push(Constraint::Distinct(lower, upper));
                        let right = Cell::new(lower.row, lower.col + 1);
                        cons.push(Constraint::KeyColumn { lower, upper, right: d.contains(right).then_some(right) });
                    }
                }
            }
        }
        Family::Ssyt(_) | Family::Syt => {
            for &c in &cells {
                if c.col > 1 {
                    cons.push(Constraint::Geq(c, Cell::new(c.row, c.col - 1), false));
                }
                if c.row > 1 {
                    cons.push(Constraint::Geq(c, Cell::new(c.row - 1, c.col), true));
                }
            }
        }
        Family::Syd => {
            for &u in &cells {
                for c2 in u.col + 1..=d.row_len(u.row) {
                    let v = Cell::new(u.row, c2);
                    let w = (u.row > 1).then(|| Cell::new(u.row - 1, u.col));
                    cons.push(Constraint::NoInversion { u, v, w });
                }
            }
        }
        Family::StdFillings => {}
    }

    let mut checks = vec![Vec::new(); big_n];
    for c in cons {
        // basement cells are fixed and never enter the order
        let last = c.cells().into_iter().filter(|x| x.col > 0).filter_map(pos).max();
        if let Some(p) = last {
            checks[p].push(c);
        }
    }
    Plan { order, bound, standard: family.is_standard(), checks, rows, kind: d.kind() }
}

/// All members of `family` on the diagram, sorted by column reading word.
pub fn enumerate(family: Family, d: &Diagram) -> Result<Vec<Filling>, EnumError> {
    if d.kind() != family.kind() {
        return Err(EnumError::WrongKind { family, expected: family.kind() });
    }
    Ok(run(&plan(family, d)))
}

fn run(p: &Plan) -> Vec<Filling> {
    let mut grid = Filling::from_rows_unchecked(p.kind, p.rows.iter().map(|&l| vec![0; l]).collect());
    let mut used = vec![false; p.order.len() + 1];
    let mut out = Vec::new();
    fill(p, 0, &mut grid, &mut used, &mut out);
    out
}

fn fill(p: &Plan, k: usize, grid: &mut Filling, used: &mut [bool], out: &mut Vec<Filling>) {
    if k == p.order.len() {
        out.push(grid.clone());
        return;
    }
    let cell = p.order[k];
    for v in 1..=p.bound[k] {
        if p.standard && used[v] {
            continue;
        }
        grid.set(cell, v);
        if p.checks[k].iter().all(|c| c.holds(grid)) {
            if p.standard {
                used[v] = true;
            }
            fill(p, k + 1, grid, used, out);
            if p.standard {
                used[v] = false;
            }
        }
    }
    grid.set(cell, 0);
}

pub fn sskt(a: &WeakComposition) -> Vec<Filling> {
    enumerate(Family::Sskt, &Diagram::key(a)).expect("key family on key diagram")
}

pub fn skt(a: &WeakComposition) -> Vec<Filling> {
    enumerate(Family::Skt, &Diagram::key(a)).expect("key family on key diagram")
}

pub fn sskd(a: &WeakComposition) -> Vec<Filling> {
    enumerate(Family::Sskd, &Diagram::key(a)).expect("key family on key diagram")
}

pub fn skd(a: &WeakComposition) -> Vec<Filling> {
    enumerate(Family::Skd, &Diagram::key(a)).expect("key family on key diagram")
}

/// Every non-attacking filling with entries at most the number of rows.
pub fn non_attacking(a: &WeakComposition) -> Vec<Filling> {
    let d = Diagram::key(a);
    let mut p = plan(Family::Sskd, &d);
    for cs in &mut p.checks {
        cs.retain(|c| !matches!(c, Constraint::NoCoinversion(_)));
    }
    run(&p)
}

pub fn ssyt(lambda: &Partition, n: usize) -> Vec<Filling> {
    enumerate(Family::Ssyt(n), &Diagram::young(lambda)).expect("young family on young diagram")
}

pub fn syt(lambda: &Partition) -> Vec<Filling> {
    enumerate(Family::Syt, &Diagram::young(lambda)).expect("young family on young diagram")
}

pub fn syd(lambda: &Partition) -> Vec<Filling> {
    enumerate(Family::Syd, &Diagram::young(lambda)).expect("young family on young diagram")
}

pub fn std_fillings(lambda: &Partition) -> Vec<Filling> {
    enumerate(Family::StdFillings, &Diagram::young(lambda)).expect("young family on young diagram")
}

/// Whether a key filling belongs to the family (by its defining conditions).
pub fn is_member(family: Family, t: &Filling) -> Result<bool, EnumError> {
    if t.kind() != family.kind() {
        return Err(EnumError::WrongKind { family, expected: family.kind() });
    }
    let n = t.num_rows();
    Ok(match family {
        Family::Sskt => fillings::is_semistandard_key_tableau(t),
        Family::Skt => t.is_standard() && fillings::is_key_tableau(t),
        Family::Sskd => t.cells().all(|c| t.at(c) <= n) && fillings::is_non_attacking(t)? && fillings::coinv(t) == 0,
        Family::Skd => t.is_standard() && fillings::coinv(t) == 0,
        _ => {
            let d = t.diagram();
            enumerate(family, &d)?.contains(t)
        }
    })
}

/// Which of the two standardization settings is in use; both relabel each
/// value class right to left, but membership is checked against different families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StdMode {
    KeyTableau,
    KeyTabloid,
}

impl StdMode {
    fn families(self) -> (Family, Family) {
        match self {
            StdMode::KeyTableau => (Family::Sskt, Family::Skt),
            StdMode::KeyTabloid => (Family::Sskd, Family::Skd),
        }
    }
}

/// Relabel the cells holding 1, then those holding 2, and so on, each value
/// class from right to left, with consecutive integers.
pub fn standardize(t: &Filling, mode: StdMode) -> Result<Filling, EnumError> {
    let (semi, standard) = mode.families();
    if !is_member(semi, t)? && !is_member(standard, t)? {
        return Err(EnumError::NotInFamily(t.to_string(), semi));
    }
    Ok(relabel(t))
}

fn relabel(t: &Filling) -> Filling {
    let mut cells: Vec<Cell> = t.cells().collect();
    cells.sort_by_key(|&c| (t.at(c), std::cmp::Reverse(c.col), c.row));
    let mut s = t.clone();
    for (i, c) in cells.into_iter().enumerate() {
        s.set(c, i + 1);
    }
    s
}

/// The unique filling of weight `b` that standardizes to `s`.
pub fn destandardize(s: &Filling, b: &WeakComposition, mode: StdMode) -> Result<Filling, EnumError> {
    let (semi, standard) = mode.families();
    if !is_member(standard, s)? {
        return Err(EnumError::NotInFamily(s.to_string(), standard));
    }
    let bad = |des: &str| EnumError::InvalidWeight { weight: b.to_string(), des: des.to_string() };
    let des = match fillings::weak_descent_composition(s)? {
        WeakDescent::Virtual => return Err(bad("VIRTUAL")),
        WeakDescent::Comp(d) => d,
    };
    if b.len() != des.len() || !b.dominates(&des).unwrap_or(false) || !b.flatten().refines(&des.flatten()) {
        return Err(bad(&des.to_string()));
    }
    // value v goes to the k with b_1+..+b_{k-1} < v <= b_1+..+b_k
    let mut label = Vec::with_capacity(s.size() + 1);
    label.push(0);
    for (k, &bk) in b.parts().iter().enumerate() {
        label.extend(std::iter::repeat_n(k + 1, bk));
    }
    let mut t = s.clone();
    for c in s.cells() {
        t.set(c, label[s.at(c)]);
    }
    if !is_member(semi, &t)? || relabel(&t) != *s {
        return Err(bad(&des.to_string()));
    }
    Ok(t)
}
