//! Involutions `psi_i` on standard key tabloids, their orbits, and the
//! bijections `phi` (key tableaux to Young tableaux) and `theta` (key
//! tabloids to Young tabloids).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bases::{key_slide_expansion, Basis, Expansion};
use crate::enumerate::{self, Family};
use crate::fillings::{self, Filling, FillingError, WeakDescent};
use crate::polyring::ParamCoeff;
use crate::shapes::{Cell, Diagram, DiagramKind, Partition, WeakComposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualEqError {
    #[error("index {i} out of range: need 1 < i < {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("filling {0} is not in {1}")]
    NotInFamily(String, Family),
    #[error("no member of the class sums to a single key polynomial")]
    NoYamanouchi,
    #[error("several members qualify as the Yamanouchi element: {0:?}")]
    AmbiguousYamanouchi(Vec<String>),
    #[error("class has a virtual member at padding {0}")]
    VirtualMember(usize),
    #[error("expected exactly one inversion-free arrangement, found {0}")]
    ArrangementNotUnique(usize),
    #[error("no standard key tabloid of shape {0} maps to this filling")]
    NoPreimage(String),
    #[error(transparent)]
    Filling(#[from] FillingError),
}

fn require_standard_key(t: &Filling) -> Result<(), DualEqError> {
    if t.kind() != DiagramKind::Key {
        return Err(FillingError::WrongKind(DiagramKind::Key).into());
    }
    if !t.is_standard() {
        return Err(FillingError::NotStandard.into());
    }
    Ok(())
}

/// The involution `psi_i` for `1 < i < n`. Let `b, c, d` be the cells holding
/// `i-1, i, i+1` in column reading order. Nothing happens when `c` holds `i`;
/// otherwise the three values are cycled when `b, d` attack each other or are
/// adjacent in a row, and a single transposition is applied if not.
pub fn psi(i: usize, t: &Filling) -> Result<Filling, DualEqError> {
    require_standard_key(t)?;
    let n = t.size();
    if i < 2 || i + 1 > n {
        return Err(DualEqError::IndexOutOfRange { i, n });
    }
    let pos = t.positions()?;
    let order = t.column_reading_order();
    let rank: HashMap<Cell, usize> = order.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut bcd = [pos[i - 1], pos[i], pos[i + 1]];
    bcd.sort_by_key(|c| rank[c]);
    let [b, c, d] = bcd;
    let mut u = t.clone();
    if t.at(c) == i {
        return Ok(u);
    }
    let row_adjacent = b.row == d.row && b.col.abs_diff(d.col) == 1;
    if Diagram::attacking(b, d) || row_adjacent {
        if t.at(c) == i + 1 {
            u.set(c, i - 1);
            u.set(pos[i - 1], i);
            u.set(pos[i], i + 1);
        } else {
            u.set(c, i + 1);
            u.set(pos[i + 1], i);
            u.set(pos[i], i - 1);
        }
    } else if t.at(c) == i + 1 {
        u.set(pos[i - 1], i);
        u.set(pos[i], i - 1);
    } else {
        u.set(pos[i], i + 1);
        u.set(pos[i + 1], i);
    }
    Ok(u)
}

/// Shift the rows of a filling up by `m`.
pub fn pad(t: &Filling, m: usize) -> Filling {
    t.pad(m)
}

/// Weak descent of a standard key filling is virtual.
pub fn is_virtual(t: &Filling) -> Result<bool, DualEqError> {
    Ok(fillings::weak_descent_composition(t)?.is_virtual())
}

/// An orbit of standard key tabloids under all `psi_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceClass {
    /// Sorted by column reading word.
    pub members: Vec<Filling>,
    pub maj: usize,
    /// Rows added below the shape so that no member is virtual.
    pub padding: usize,
    /// Weak descent of the Yamanouchi member after padding.
    pub stable_label: WeakComposition,
    /// `stable_label` with the padding stripped, or `None` when it has nonzero
    /// parts in the padded rows (the class then contributes nothing unpadded).
    pub key_label: Option<WeakComposition>,
    /// Index in `members` of the Yamanouchi element.
    pub yamanouchi: usize,
}

/// Orbits of `SKD(a)` without annotation, each sorted by column reading word,
/// ordered by their first member.
pub fn orbits(a: &WeakComposition) -> Vec<Vec<Filling>> {
    let all = enumerate::skd(a);
    let n = a.size();
    let mut seen: BTreeSet<Filling> = BTreeSet::new();
    let mut out = Vec::new();
    for start in &all {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start.clone());
        let mut comp = vec![start.clone()];
        let mut stack = vec![start.clone()];
        while let Some(x) = stack.pop() {
            for i in 2..n {
                let y = psi(i, &x).expect("standard key tabloid");
                if seen.insert(y.clone()) {
                    comp.push(y.clone());
                    stack.push(y);
                }
            }
        }
        comp.sort_by_key(Filling::column_word);
        out.push(comp);
    }
    out
}

/// Smallest `m` in `0..=|a|` such that `SKD(0^m x a)` has no virtual element.
pub fn padding_needed(a: &WeakComposition) -> usize {
    let all = enumerate::skd(a);
    (0..=a.size()).find(|&m| all.iter().all(|t| !is_virtual(&t.pad(m)).expect("standard"))).unwrap_or(a.size())
}

fn descent(t: &Filling) -> WeakDescent {
    fillings::weak_descent_composition(t).expect("standard key filling")
}

/// Slide-expansion cache for key polynomials.
#[derive(Default)]
pub struct KeyCache {
    map: HashMap<WeakComposition, Expansion>,
}

impl KeyCache {
    pub fn slide_expansion(&mut self, b: &WeakComposition) -> &Expansion {
        self.map.entry(b.clone()).or_insert_with(|| key_slide_expansion(b))
    }
}

/// The member `T` (of an already padded class) whose weak descent `b`
/// satisfies: the class's slide sum equals `kappa_b`. Returns its index.
pub fn yamanouchi_of_class(members: &[Filling], cache: &mut KeyCache) -> Result<usize, DualEqError> {
    let mut sum = Expansion::new(Basis::Slide);
    let mut des = Vec::with_capacity(members.len());
    for t in members {
        match descent(t) {
            WeakDescent::Virtual => return Err(DualEqError::VirtualMember(0)),
            WeakDescent::Comp(d) => {
                sum.add(d.parts().to_vec(), &ParamCoeff::one());
                des.push(d);
            }
        }
    }
    let mut hits = Vec::new();
    for (k, d) in des.iter().enumerate() {
        if *cache.slide_expansion(d) == sum {
            hits.push(k);
        }
    }
    match hits.as_slice() {
        [] => Err(DualEqError::NoYamanouchi),
        [k] => Ok(*k),
        _ => Err(DualEqError::AmbiguousYamanouchi(hits.iter().map(|&k| members[k].to_string()).collect())),
    }
}

/// All orbits of `SKD(a)`, annotated with maj and key label.
pub fn classes(a: &WeakComposition) -> Result<Vec<EquivalenceClass>, DualEqError> {
    let m = padding_needed(a);
    let mut cache = KeyCache::default();
    let mut out = Vec::new();
    for members in orbits(a) {
        let majs: BTreeSet<usize> = members.iter().map(fillings::maj).collect();
        let maj = *majs.iter().next().expect("nonempty class");
        assert_eq!(majs.len(), 1, "maj must be constant on a class");
        let padded: Vec<Filling> = members.iter().map(|t| t.pad(m)).collect();
        let y = yamanouchi_of_class(&padded, &mut cache).map_err(|e| match e {
            DualEqError::VirtualMember(_) => DualEqError::VirtualMember(m),
            e => e,
        })?;
        let stable_label = descent(&padded[y]).composition().expect("non-virtual").clone();
        let key_label = stable_label.unpad(m);
        out.push(EquivalenceClass { members, maj, padding: m, stable_label, key_label, yamanouchi: y });
    }
    Ok(out)
}

/// Key expansion of `E_a(X;q,0)` read off the classes.
pub fn key_expansion(a: &WeakComposition) -> Result<Expansion, DualEqError> {
    let mut e = Expansion::new(Basis::Key);
    for c in classes(a)? {
        if let Some(l) = c.key_label {
            e.add(l.parts().to_vec(), &ParamCoeff::q_pow(c.maj));
        }
    }
    Ok(e)
}

/// Key expansion of `E_{0^m x a}(X;q,0)` for the padding `m` that removes
/// all virtual elements, labels kept at full length. Returns `(m, expansion)`.
pub fn stable_key_expansion(a: &WeakComposition) -> Result<(usize, Expansion), DualEqError> {
    let cls = classes(a)?;
    let m = cls.first().map_or(0, |c| c.padding);
    let mut e = Expansion::new(Basis::Key);
    for c in cls {
        e.add(c.stable_label.parts().to_vec(), &ParamCoeff::q_pow(c.maj));
    }
    Ok((m, e))
}

/// Drop cells of a standard key tableau into Young shape, sort columns
/// decreasing from bottom to top, then replace `i` by `n - i + 1`.
pub fn phi(t: &Filling) -> Result<Filling, DualEqError> {
    if !enumerate::is_member(Family::Skt, t).map_err(|_| DualEqError::NotInFamily(t.to_string(), Family::Skt))? {
        return Err(DualEqError::NotInFamily(t.to_string(), Family::Skt));
    }
    let n = t.size();
    let lambda = t.shape().sort_to_partition();
    let width = lambda.parts().first().copied().unwrap_or(0);
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    for col in 1..=width {
        let mut column: Vec<usize> =
            (1..=t.num_rows()).filter(|&r| t.row_len(r) >= col).map(|r| t.at(Cell::new(r, col))).collect();
        column.sort_unstable_by(|x, y| y.cmp(x));
        for (r, v) in column.into_iter().enumerate() {
            rows[r].push(n - v + 1);
        }
    }
    Ok(Filling::new(DiagramKind::Young, rows)?)
}

fn young_row_ok(row: &[usize], below: Option<&[usize]>) -> bool {
    for c1 in 0..row.len() {
        for c2 in c1 + 1..row.len() {
            let (a, b) = (row[c1], row[c2]);
            let bad = match below {
                None => a > b,
                Some(bl) => {
                    let w = bl[c1];
                    (b < a && a < w) || (a < w && w < b) || (w < b && b < a)
                }
            };
            if bad {
                return false;
            }
        }
    }
    true
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// The unique standard Young tabloid whose row `i` holds the given set.
pub fn young_tabloid_with_rows(sets: &[Vec<usize>]) -> Result<Filling, DualEqError> {
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(sets.len());
    for set in sets {
        let below = rows.last().map(Vec::as_slice);
        let ok: Vec<Vec<usize>> = permutations(set).into_iter().filter(|p| young_row_ok(p, below)).collect();
        if ok.len() != 1 {
            return Err(DualEqError::ArrangementNotUnique(ok.len()));
        }
        rows.push(ok.into_iter().next().expect("one"));
    }
    Ok(Filling::new(DiagramKind::Young, rows)?)
}

/// Column `i` of a standard key tabloid, complemented by `v -> n - v + 1`,
/// becomes the entry set of row `i` of a standard Young tabloid of shape
/// `conjugate(sort(a))`.
pub fn theta(t: &Filling) -> Result<Filling, DualEqError> {
    if !enumerate::is_member(Family::Skd, t).map_err(|_| DualEqError::NotInFamily(t.to_string(), Family::Skd))? {
        return Err(DualEqError::NotInFamily(t.to_string(), Family::Skd));
    }
    let n = t.size();
    let d = t.diagram();
    let sets: Vec<Vec<usize>> = (1..=d.width())
        .map(|col| {
            let mut s: Vec<usize> =
                (1..=t.num_rows()).filter(|&r| t.row_len(r) >= col).map(|r| n - t.at(Cell::new(r, col)) + 1).collect();
            s.sort_unstable();
            s
        })
        .collect();
    young_tabloid_with_rows(&sets)
}

/// Inverse of [`theta`] on `SKD(a)`.
pub fn theta_inverse(u: &Filling, a: &WeakComposition) -> Result<Filling, DualEqError> {
    enumerate::skd(a)
        .into_iter()
        .find(|t| theta(t).as_ref() == Ok(u))
        .ok_or_else(|| DualEqError::NoPreimage(a.to_string()))
}

/// Involution on `SYD(conjugate(sort(a)))` transported from `psi` through
/// `theta`: `D_i = theta . psi_{n-i+1} . theta^{-1}`.
pub fn d_involution(i: usize, u: &Filling, a: &WeakComposition) -> Result<Filling, DualEqError> {
    let n = u.size();
    if i < 2 || i + 1 > n {
        return Err(DualEqError::IndexOutOfRange { i, n });
    }
    let t = theta_inverse(u, a)?;
    theta(&psi(n - i + 1, &t)?)
}

/// Counts of each class size, for reporting.
pub fn class_size_profile(cls: &[EquivalenceClass]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for c in cls {
        *m.entry(c.members.len()).or_insert(0) += 1;
    }
    m
}

/// Shape of the Young side of `theta`.
pub fn theta_shape(a: &WeakComposition) -> Partition {
    a.sort_to_partition().conjugate()
}
