//! Kostka–Foulkes polynomials `K_{lambda,mu}(t)`, their nonsymmetric
//! refinements `K_{a,b}(q)`, and the identities tying the two together.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bases::{self, label_string, BasesError, Basis, Expansion};
use crate::dualeq::{self, DualEqError};
use crate::fillings::Filling;
use crate::polyring::ParamCoeff;
use crate::shapes::{Partition, WeakComposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KostkaError {
    #[error("class expansion and triangular peeling disagree for {b}: {classes:?} vs {peeled:?}")]
    Inconsistent { b: String, classes: Vec<String>, peeled: Vec<String> },
    #[error(transparent)]
    Bases(#[from] BasesError),
    #[error(transparent)]
    DualEq(#[from] DualEqError),
}

/// Name of the single grading parameter of a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Param {
    Q,
    T,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::Q => "q",
            Param::T => "t",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KostkaKind {
    Symmetric(Partition),
    Nonsymmetric(WeakComposition),
}

/// One column of a Kostka matrix: label -> polynomial in `param`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostkaTable {
    pub kind: KostkaKind,
    pub param: Param,
    entries: BTreeMap<Vec<usize>, ParamCoeff>,
}

impl KostkaTable {
    fn from_expansion(kind: KostkaKind, param: Param, e: &Expansion) -> Self {
        let entries = e.iter().map(|(l, c)| (l.clone(), c.clone())).collect();
        Self { kind, param, entries }
    }

    pub fn get(&self, label: &[usize]) -> ParamCoeff {
        self.entries.get(label).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &ParamCoeff)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Same table with the grading parameter renamed.
    pub fn renamed(&self, param: Param) -> KostkaTable {
        if param == self.param {
            return self.clone();
        }
        let entries = self.entries.iter().map(|(l, c)| (l.clone(), c.swap_qt())).collect();
        KostkaTable { kind: self.kind.clone(), param, entries }
    }

    /// Every coefficient has nonnegative integer coefficients.
    pub fn is_positive(&self) -> bool {
        self.entries.values().all(ParamCoeff::is_nonnegative)
    }

    /// The table at parameter `0`.
    pub fn at_zero(&self) -> BTreeMap<Vec<usize>, i64> {
        self.entries.iter().map(|(l, c)| (l.clone(), c.coefficient(0, 0))).filter(|&(_, c)| c != 0).collect()
    }

    pub fn to_lines(&self) -> Vec<String> {
        self.entries.iter().map(|(l, c)| format!("{} : {}", label_string(l), c)).collect()
    }

    pub fn to_json(&self) -> Value {
        let (kind, shape) = match &self.kind {
            KostkaKind::Symmetric(mu) => ("symmetric", mu.parts().to_vec()),
            KostkaKind::Nonsymmetric(b) => ("nonsymmetric", b.parts().to_vec()),
        };
        let entries: Vec<Value> =
            self.entries.iter().map(|(l, c)| json!({"label": l, "coefficient": c.to_string()})).collect();
        json!({"kind": kind, "shape": shape, "parameter": self.param.to_string(), "entries": entries})
    }
}

impl fmt::Display for KostkaTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.to_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Schur expansion of `H_mu(X;0,t)`, in `|mu|` variables.
pub fn kostka_foulkes(mu: &Partition) -> Result<KostkaTable, KostkaError> {
    let p = bases::hall_littlewood(mu, mu.size());
    let e = bases::expand_in_basis(&p, Basis::Schur)?;
    Ok(KostkaTable::from_expansion(KostkaKind::Symmetric(mu.clone()), Param::T, &e))
}

/// Key expansion of `E_b(X;q,0)` from dual equivalence classes, checked
/// against triangular peeling of the monomial expansion.
pub fn ns_kostka(b: &WeakComposition) -> Result<KostkaTable, KostkaError> {
    let from_classes = dualeq::key_expansion(b)?;
    let peeled = bases::expand_in_basis(&bases::macdonald_q0(b), Basis::Key)?;
    if from_classes != peeled {
        return Err(KostkaError::Inconsistent {
            b: b.to_string(),
            classes: from_classes.to_lines(),
            peeled: peeled.to_lines(),
        });
    }
    Ok(KostkaTable::from_expansion(KostkaKind::Nonsymmetric(b.clone()), Param::Q, &from_classes))
}

/// Class-based table only, without the peeling cross-check.
pub fn ns_kostka_by_classes(b: &WeakComposition) -> Result<KostkaTable, KostkaError> {
    let e = dualeq::key_expansion(b)?;
    Ok(KostkaTable::from_expansion(KostkaKind::Nonsymmetric(b.clone()), Param::Q, &e))
}

/// `K_{c,0^m x b}(q)` for the padding `m` at which no element is virtual.
pub fn ns_kostka_stable(b: &WeakComposition) -> Result<(usize, KostkaTable), KostkaError> {
    let (m, e) = dualeq::stable_key_expansion(b)?;
    Ok((m, KostkaTable::from_expansion(KostkaKind::Nonsymmetric(b.pad(m)), Param::Q, &e)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub label: Vec<usize>,
    pub lhs: ParamCoeff,
    pub rhs: ParamCoeff,
}

impl ComparisonRow {
    pub fn agrees(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn rows_to_json(rows: &[ComparisonRow]) -> Vec<Value> {
    rows.iter()
        .map(|r| json!({"label": r.label, "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string(), "agrees": r.agrees()}))
        .collect()
}

fn rows_to_lines(rows: &[ComparisonRow]) -> Vec<String> {
    rows.iter()
        .map(|r| {
            let mark = if r.agrees() { "ok" } else { "MISMATCH" };
            format!("{} : {} | {} : {}", label_string(&r.label), r.lhs, r.rhs, mark)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementReport {
    pub b: WeakComposition,
    pub mu: Partition,
    /// No class of `SKD(b)` has a virtual Yamanouchi element.
    pub hypothesis: bool,
    /// Only the maj-0 class (the standard key tableaux) is inspected.
    pub hypothesis_skt_only: bool,
    pub virtual_yamanouchi: Vec<Filling>,
    /// One row per `lambda |- |b|`: `K_{lambda,mu}(t)` against the sum of
    /// `K_{a,b}(t)` over `a` with `sort(flat(a)) = lambda'`.
    pub rows: Vec<ComparisonRow>,
    /// The same comparison against the table of `0^m x b` with `m` large
    /// enough that nothing is virtual.
    pub stable_rows: Vec<ComparisonRow>,
}

impl RefinementReport {
    pub fn identity_holds(&self) -> bool {
        self.rows.iter().all(ComparisonRow::agrees)
    }

    /// Fails only when the hypothesis holds and some row disagrees.
    pub fn passes(&self) -> bool {
        !self.hypothesis || self.identity_holds()
    }

    pub fn to_lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("b = {}, mu = {}", self.b, self.mu),
            format!(
                "hypothesis (no virtual Yamanouchi element in SKD(b)): {}",
                if self.hypothesis { "met" } else { "condition not met" }
            ),
        ];
        for t in &self.virtual_yamanouchi {
            out.push(format!("  virtual Yamanouchi element: {t}"));
        }
        out.push("lambda : K_{lambda,mu}(t) | sum K_{a,b}(t) : status".into());
        out.extend(rows_to_lines(&self.rows));
        out.push("after padding by zeros:".into());
        out.extend(rows_to_lines(&self.stable_rows));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "b": self.b.parts(),
            "mu": self.mu.parts(),
            "hypothesis": self.hypothesis,
            "hypothesis_skt_only": self.hypothesis_skt_only,
            "virtual_yamanouchi": self.virtual_yamanouchi.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rows": rows_to_json(&self.rows),
            "stable_rows": rows_to_json(&self.stable_rows),
            "identity_holds": self.identity_holds(),
        })
    }
}

pub fn refinement_check(b: &WeakComposition) -> Result<RefinementReport, KostkaError> {
    let mu = b.column_lengths();
    let mut virtual_yamanouchi = Vec::new();
    let mut hypothesis_skt_only = true;
    for c in dualeq::classes(b)? {
        let y = &c.members[c.yamanouchi];
        if dualeq::is_virtual(y)? {
            if c.maj == 0 {
                hypothesis_skt_only = false;
            }
            virtual_yamanouchi.push(y.clone());
        }
    }
    let hypothesis = virtual_yamanouchi.is_empty();
    let sym = kostka_foulkes(&mu)?;
    let compare = |ns: &KostkaTable| -> Vec<ComparisonRow> {
        let ns = ns.renamed(Param::T);
        Partition::all(b.size())
            .into_iter()
            .map(|lambda| {
                let target = lambda.conjugate();
                let mut rhs = ParamCoeff::zero();
                for (a, k) in ns.entries() {
                    if Partition::from_unsorted(a.clone()) == target {
                        rhs.add_assign(k);
                    }
                }
                ComparisonRow { lhs: sym.get(lambda.parts()), rhs, label: lambda.parts().to_vec() }
            })
            .collect()
    };
    let rows = compare(&ns_kostka(b)?);
    let stable_rows = compare(&ns_kostka_stable(b)?.1);
    Ok(RefinementReport { b: b.clone(), mu, hypothesis, hypothesis_skt_only, virtual_yamanouchi, rows, stable_rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub a: WeakComposition,
    pub padding: usize,
    /// `sum_c K_{c,0^m x a}(q) s_{sort(c)}`.
    pub lhs: Expansion,
    /// `omega` of the Schur expansion of `H_{sort(a)'}(X;0,q)`.
    pub rhs: Expansion,
    pub rows: Vec<ComparisonRow>,
    /// `ns_kostka(0^k x a)` matches the stable table for `k = 1, 2`.
    pub padding_invariant: bool,
}

impl StabilityReport {
    pub fn passes(&self) -> bool {
        self.lhs == self.rhs && self.padding_invariant
    }

    pub fn to_lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("a = {}, stable from padding {}", self.a, self.padding),
            "lambda : limit of E_(0^m x a)(X;q,0) | omega H(X;0,q) : status".into(),
        ];
        out.extend(rows_to_lines(&self.rows));
        out.push(format!("padding invariance (m = 1, 2): {}", if self.padding_invariant { "ok" } else { "MISMATCH" }));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.parts(),
            "padding": self.padding,
            "rows": rows_to_json(&self.rows),
            "padding_invariant": self.padding_invariant,
            "passes": self.passes(),
        })
    }
}

/// Move a stable-table label to padding `k`, if it survives.
fn relabel(label: &[usize], from: usize, to: usize) -> Option<Vec<usize>> {
    if to >= from {
        let mut l = vec![0; to - from];
        l.extend_from_slice(label);
        Some(l)
    } else {
        let cut = from - to;
        label[..cut].iter().all(|&x| x == 0).then(|| label[cut..].to_vec())
    }
}

pub fn stability_check(a: &WeakComposition) -> Result<StabilityReport, KostkaError> {
    let (m, stable) = ns_kostka_stable(a)?;
    let mut lhs = Expansion::new(Basis::Schur);
    for (c, k) in stable.entries() {
        lhs.add(Partition::from_unsorted(c.clone()).parts().to_vec(), k);
    }
    let conj = a.sort_to_partition().conjugate();
    let hl = kostka_foulkes(&conj)?.renamed(Param::Q);
    let mut hl_e = Expansion::new(Basis::Schur);
    for (l, k) in hl.entries() {
        hl_e.add(l.clone(), k);
    }
    let rhs = bases::omega_on_schur(&hl_e)?;

    let mut labels: Vec<Vec<usize>> = lhs.iter().chain(rhs.iter()).map(|(l, _)| l.clone()).collect();
    labels.sort();
    labels.dedup();
    let rows = labels.into_iter().map(|l| ComparisonRow { lhs: lhs.get(&l), rhs: rhs.get(&l), label: l }).collect();

    let mut padding_invariant = true;
    for k in 1..=2 {
        let padded = ns_kostka(&a.pad(k))?;
        let mut expected = BTreeMap::new();
        for (c, q) in stable.entries() {
            if let Some(l) = relabel(c, m, k) {
                expected.insert(l, q.clone());
            }
        }
        let got: BTreeMap<Vec<usize>, ParamCoeff> = padded.entries().map(|(l, q)| (l.clone(), q.clone())).collect();
        padding_invariant &= got == expected;
    }
    Ok(StabilityReport { a: a.clone(), padding: m, lhs, rhs, rows, padding_invariant })
}
