//! Generating polynomials and change of basis.
//!
//! Symmetric and quasisymmetric objects live in a fixed number of variables;
//! identities in degree `d` are faithful once there are at least `d` of them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate;
use crate::fillings::{self, Filling, WeakDescent};
use crate::polyring::{grlex_cmp, ParamCoeff, ParamPoly, PolyError, Rational};
use crate::shapes::{Cell, Composition, Diagram, Partition, WeakComposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasesError {
    #[error("polynomial is not in the span of the {basis} basis; residual {residual}")]
    NotInSpan { basis: Basis, residual: ParamPoly },
    #[error("expected a {expected} expansion, got {got}")]
    WrongBasis { expected: Basis, got: Basis },
    #[error("denominator vanishes at cell {0}")]
    VanishingDenominator(Cell),
    #[error("unknown basis {0:?}")]
    UnknownBasis(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Slide,
    Key,
    Schur,
    Monomial,
    Quasifund,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Slide => "slide",
            Basis::Key => "key",
            Basis::Schur => "schur",
            Basis::Monomial => "monomial",
            Basis::Quasifund => "quasifund",
        })
    }
}

impl FromStr for Basis {
    type Err = BasesError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "slide" => Basis::Slide,
            "key" => Basis::Key,
            "schur" => Basis::Schur,
            "monomial" => Basis::Monomial,
            "quasifund" | "fundamental" => Basis::Quasifund,
            _ => return Err(BasesError::UnknownBasis(s.to_string())),
        })
    }
}

/// Coefficients of a polynomial in one of the bases, indexed by labels
/// (weak compositions, partitions or compositions, stored as plain vectors).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub basis: Basis,
    #[serde(rename = "terms", with = "term_list")]
    coeffs: BTreeMap<Vec<usize>, ParamCoeff>,
}

/// Labels are vectors, so the map is written as `[{"label", "coefficient"}]`.
mod term_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::polyring::ParamCoeff;

    #[derive(Serialize, Deserialize)]
    struct Term {
        label: Vec<usize>,
        coefficient: ParamCoeff,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Vec<usize>, ParamCoeff>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Term> = m.iter().map(|(l, c)| Term { label: l.clone(), coefficient: c.clone() }).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vec<usize>, ParamCoeff>, D::Error> {
        let v = Vec::<Term>::deserialize(d)?;
        let mut m: BTreeMap<Vec<usize>, ParamCoeff> = BTreeMap::new();
        for t in v {
            m.entry(t.label).or_default().add_assign(&t.coefficient);
        }
        m.retain(|_, c| !c.is_zero());
        Ok(m)
    }
}

impl Expansion {
    pub fn new(basis: Basis) -> Self {
        Self { basis, coeffs: BTreeMap::new() }
    }

    pub fn add(&mut self, label: Vec<usize>, c: &ParamCoeff) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(label.clone()).or_default();
        e.add_assign(c);
        if e.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn get(&self, label: &[usize]) -> ParamCoeff {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &ParamCoeff)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamCoeff) -> ParamCoeff) -> Expansion {
        let mut out = Expansion::new(self.basis);
        for (l, c) in &self.coeffs {
            out.add(l.clone(), &f(c));
        }
        out
    }

    /// Sum of coefficient times basis element, in `nvars` variables.
    pub fn to_polynomial(&self, nvars: usize) -> ParamPoly {
        let mut p = ParamPoly::zero(nvars);
        for (l, c) in &self.coeffs {
            let b = basis_element(self.basis, l, nvars);
            p.add_scaled(&b, c).expect("matching variable count");
        }
        p
    }

    /// One `label : coefficient` line per term.
    pub fn to_lines(&self) -> Vec<String> {
        self.coeffs.iter().map(|(l, c)| format!("{} : {}", label_string(l), c)).collect()
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.to_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

pub fn label_string(l: &[usize]) -> String {
    let parts: Vec<String> = l.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// Exponent vectors `b` of length `n`, total `parts.sum()`, whose nonzero parts
/// refine `parts` and, when `dominated` is given, whose prefix sums are at least
/// those of `dominated`.
fn refining_vectors(n: usize, parts: &[usize], dominated: Option<&[usize]>) -> Vec<Vec<usize>> {
    let targets: Vec<usize> = parts
        .iter()
        .scan(0, |s, &p| {
            *s += p;
            Some(*s)
        })
        .collect();
    let total = targets.last().copied().unwrap_or(0);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        n: usize,
        targets: &[usize],
        total: usize,
        dom: Option<&[usize]>,
        sum: usize,
        dom_sum: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = cur.len();
        if k == n {
            if sum == total {
                out.push(cur.clone());
            }
            return;
        }
        let next_target = targets.iter().copied().find(|&t| t > sum).unwrap_or(total);
        for v in 0..=next_target - sum {
            let s = sum + v;
            let ds = dom_sum + dom.map_or(0, |d| d[k]);
            if dom.is_some() && s < ds {
                continue;
            }
            cur.push(v);
            rec(n, targets, total, dom, s, ds, cur, out);
            cur.pop();
        }
    }
    rec(n, &targets, total, dominated, 0, 0, &mut cur, &mut out);
    out
}

/// The fundamental slide polynomial in `len(a)` variables.
pub fn slide(a: &WeakComposition) -> ParamPoly {
    let flat = a.flatten();
    let mut p = ParamPoly::zero(a.len());
    for b in refining_vectors(a.len(), flat.parts(), Some(a.parts())) {
        p.add_int(b, 1, 0, 0);
    }
    p
}

/// Slide polynomial of a weak descent; zero when virtual.
pub fn slide_of(d: &WeakDescent, nvars: usize) -> ParamPoly {
    match d {
        WeakDescent::Virtual => ParamPoly::zero(nvars),
        WeakDescent::Comp(a) => slide(a),
    }
}

/// Fundamental quasisymmetric polynomial in `n` variables.
pub fn quasifund(alpha: &Composition, n: usize) -> ParamPoly {
    let mut p = ParamPoly::zero(n);
    for b in refining_vectors(n, alpha.parts(), None) {
        p.add_int(b, 1, 0, 0);
    }
    p
}

fn weight_vec(t: &Filling, n: usize) -> Vec<usize> {
    t.weight(n)
}

/// Key polynomial as the weight generating function of semi-standard key tableaux.
pub fn key(a: &WeakComposition) -> ParamPoly {
    let mut p = ParamPoly::zero(a.len());
    for t in enumerate::sskt(a) {
        p.add_int(weight_vec(&t, a.len()), 1, 0, 0);
    }
    p
}

/// Multiset of non-virtual weak descents over standard key tableaux: the
/// slide expansion of the key polynomial.
pub fn key_slide_expansion(a: &WeakComposition) -> Expansion {
    let mut e = Expansion::new(Basis::Slide);
    for t in enumerate::skt(a) {
        if let WeakDescent::Comp(d) = des(&t) {
            e.add(d.parts().to_vec(), &ParamCoeff::one());
        }
    }
    e
}

/// Key polynomial assembled from slide polynomials of standard key tableaux.
pub fn key_via_slides(a: &WeakComposition) -> ParamPoly {
    key_slide_expansion(a).to_polynomial(a.len())
}

/// Schur polynomial from semi-standard Young tableaux.
pub fn schur(lambda: &Partition, n: usize) -> ParamPoly {
    let mut p = ParamPoly::zero(n);
    for t in enumerate::ssyt(lambda, n) {
        p.add_int(weight_vec(&t, n), 1, 0, 0);
    }
    p
}

/// Quasisymmetric expansion of a Schur function from standard Young tableaux.
pub fn schur_quasi_expansion(lambda: &Partition) -> Expansion {
    let mut e = Expansion::new(Basis::Quasifund);
    for t in enumerate::syt(lambda) {
        let d = fillings::descent_composition(&t).expect("standard Young filling");
        e.add(d.parts().to_vec(), &ParamCoeff::one());
    }
    e
}

/// Schur polynomial assembled from fundamental quasisymmetric polynomials.
pub fn schur_gessel(lambda: &Partition, n: usize) -> ParamPoly {
    schur_quasi_expansion(lambda).to_polynomial(n)
}

pub(crate) fn des(t: &Filling) -> WeakDescent {
    fillings::weak_descent_composition(t).expect("standard key filling")
}

/// `E_a(X;q,0)` from semi-standard key tabloids.
pub fn macdonald_q0(a: &WeakComposition) -> ParamPoly {
    let mut p = ParamPoly::zero(a.len());
    for t in enumerate::sskd(a) {
        p.add_int(weight_vec(&t, a.len()), 1, fillings::maj(&t), 0);
    }
    p
}

/// Slide expansion of `E_a(X;q,0)` from standard key tabloids; virtual tabloids contribute nothing.
pub fn macdonald_q0_slide_expansion(a: &WeakComposition) -> Expansion {
    let mut e = Expansion::new(Basis::Slide);
    for t in enumerate::skd(a) {
        if let WeakDescent::Comp(d) = des(&t) {
            e.add(d.parts().to_vec(), &ParamCoeff::q_pow(fillings::maj(&t)));
        }
    }
    e
}

pub fn macdonald_q0_via_slides(a: &WeakComposition) -> ParamPoly {
    macdonald_q0_slide_expansion(a).to_polynomial(a.len())
}

/// Quasisymmetric expansion of `H_mu(X;0,t)` over standard Young tabloids.
pub fn hall_littlewood_quasi(mu: &Partition) -> Expansion {
    let mut e = Expansion::new(Basis::Quasifund);
    for u in enumerate::syd(mu) {
        let d = fillings::descent_composition(&u).expect("standard Young filling");
        let cm = fillings::comaj(&u).expect("Young filling");
        e.add(d.parts().to_vec(), &ParamCoeff::t_pow(cm));
    }
    e
}

pub fn hall_littlewood(mu: &Partition, n: usize) -> ParamPoly {
    hall_littlewood_quasi(mu).to_polynomial(n)
}

/// Quasisymmetric expansion of `H_mu(X;q,t)` over all standard fillings.
pub fn macdonald_full_quasi(mu: &Partition) -> Expansion {
    let mut e = Expansion::new(Basis::Quasifund);
    for u in enumerate::std_fillings(mu) {
        let d = fillings::descent_composition(&u).expect("standard Young filling");
        let i = fillings::inv(&u).expect("standard Young filling");
        let j = fillings::comaj(&u).expect("Young filling");
        e.add(d.parts().to_vec(), &ParamCoeff::monomial(1, i, j));
    }
    e
}

pub fn macdonald_full(mu: &Partition, n: usize) -> ParamPoly {
    macdonald_full_quasi(mu).to_polynomial(n)
}

/// Exact value of the full `E_a(X;q,t)` at a point, summing over non-attacking
/// fillings with entries at most `len(a)`. Cells whose entry differs from the
/// entry to their left (the row index for the first column) contribute
/// `(1-t)/(1 - q^leg t^(arm+1))`, with `leg` counting cells weakly right.
pub fn evaluate_e_full(
    a: &WeakComposition,
    x: &[Rational],
    q: &Rational,
    t: &Rational,
) -> Result<Rational, BasesError> {
    let n = a.len();
    if x.len() != n {
        return Err(PolyError::PointLength { expected: n, got: x.len() }.into());
    }
    let d = Diagram::key(a);
    let one = Rational::one();
    let one_minus_t = &one - t;
    // per-cell factor, computed once
    let mut factor: HashMap<Cell, Rational> = HashMap::new();
    for c in d.cells() {
        let leg = d.leg(c).expect("cell of diagram");
        let arm = d.arm(c).expect("key diagram");
        let den = &one - num_traits::pow(q.clone(), leg) * num_traits::pow(t.clone(), arm + 1);
        if den.is_zero() {
            return Err(BasesError::VanishingDenominator(c));
        }
        factor.insert(c, &one_minus_t / den);
    }
    // fillings with equal weight, statistics and factor cells contribute equally
    let cells: Vec<Cell> = d.cells().collect();
    let mut groups: HashMap<(Vec<usize>, usize, usize, Vec<bool>), i64> = HashMap::new();
    for f in enumerate::non_attacking(a) {
        let (maj, coinv) = (fillings::maj(&f), fillings::coinv(&f));
        if (q.is_zero() && maj > 0) || (t.is_zero() && coinv > 0) {
            continue;
        }
        let key_cells = cells
            .iter()
            .map(|&c| {
                let left = if c.col == 1 { c.row } else { f.at(Cell::new(c.row, c.col - 1)) };
                f.at(c) != left
            })
            .collect();
        *groups.entry((f.weight(n), maj, coinv, key_cells)).or_insert(0) += 1;
    }
    let powers = |v: &Rational, k: usize| -> Vec<Rational> {
        std::iter::successors(Some(Rational::one()), |p| Some(p * v)).take(k + 1).collect()
    };
    let size = d.size();
    let xp: Vec<Vec<Rational>> = x.iter().map(|v| powers(v, size)).collect();
    let qp = powers(q, size * size);
    let tp = powers(t, size * size * size);
    let mut mask_product: HashMap<Vec<bool>, Rational> = HashMap::new();
    let mut total = Rational::zero();
    for ((wt, maj, coinv, mask), count) in groups {
        let mut term = &qp[maj] * &tp[coinv];
        if term.is_zero() {
            continue;
        }
        for (p, &e) in xp.iter().zip(&wt) {
            term *= &p[e];
        }
        let m = mask_product.entry(mask).or_insert_with_key(|mask| {
            cells.iter().zip(mask).filter(|(_, &m)| m).fold(Rational::one(), |acc, (c, _)| acc * &factor[c])
        });
        term *= &*m;
        total += term * Rational::from_integer(count.into());
    }
    Ok(total)
}

fn basis_element(basis: Basis, label: &[usize], nvars: usize) -> ParamPoly {
    match basis {
        Basis::Slide => {
            let a = WeakComposition::new(label.to_vec()).expect("nonempty label");
            resize(slide(&a), nvars)
        }
        Basis::Key => {
            let a = WeakComposition::new(label.to_vec()).expect("nonempty label");
            resize(key(&a), nvars)
        }
        Basis::Schur => schur(&Partition::from_unsorted(label.to_vec()), nvars),
        Basis::Quasifund => quasifund(&Composition::new(label.to_vec()).expect("positive parts"), nvars),
        Basis::Monomial => {
            let mut e = label.to_vec();
            e.resize(nvars, 0);
            ParamPoly::monomial(e, ParamCoeff::one())
        }
    }
}

/// Weak-composition labelled polynomials already live in `len(label)` variables.
fn resize(p: ParamPoly, nvars: usize) -> ParamPoly {
    assert_eq!(p.nvars(), nvars, "label length must equal the variable count");
    p
}

/// Order used to pick the term to peel next. For slide and key the
/// distinguished monomial `x^a` of a basis element is the one that is largest
/// when comparing exponents from the last variable backwards; for Schur and
/// quasisymmetric elements it is the graded-lex leading monomial.
fn peel_cmp(basis: Basis, a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    match basis {
        Basis::Slide | Basis::Key => {
            let (da, db): (usize, usize) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| a.iter().rev().cmp(b.iter().rev()))
        }
        _ => grlex_cmp(a, b),
    }
}

fn valid_label(basis: Basis, e: &[usize]) -> Option<Vec<usize>> {
    match basis {
        Basis::Slide | Basis::Key | Basis::Monomial => Some(e.to_vec()),
        Basis::Schur => {
            let end = e.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1);
            let head = &e[..end];
            (head.windows(2).all(|w| w[0] >= w[1])).then(|| head.to_vec())
        }
        Basis::Quasifund => {
            let end = e.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1);
            let head = &e[..end];
            (head.iter().all(|&x| x > 0)).then(|| head.to_vec())
        }
    }
}

/// Triangular peeling: repeatedly take the leading remaining monomial, read
/// it as a basis label, subtract that basis element times its coefficient.
/// Fails with the residual if a leading monomial is not a label or the
/// remainder does not reach zero.
pub fn expand_in_basis(p: &ParamPoly, basis: Basis) -> Result<Expansion, BasesError> {
    let n = p.nvars();
    let mut rest = p.clone();
    let mut out = Expansion::new(basis);
    let mut cache: HashMap<Vec<usize>, ParamPoly> = HashMap::new();
    let limit = 1 + 4 * p.num_terms().max(1) * p.num_terms().max(1);
    for _ in 0..limit {
        let lead = rest.terms().map(|(e, _)| e).max_by(|a, b| peel_cmp(basis, a, b)).cloned();
        let Some(lead) = lead else {
            return Ok(out);
        };
        let c = rest.coefficient(&lead);
        let Some(label) = valid_label(basis, &lead) else {
            return Err(BasesError::NotInSpan { basis, residual: rest });
        };
        let b = cache.entry(label.clone()).or_insert_with(|| basis_element(basis, &label, n));
        if b.coefficient(&lead).is_zero() {
            return Err(BasesError::NotInSpan { basis, residual: rest });
        }
        rest.add_scaled(b, &c.scale(-1))?;
        out.add(label, &c);
    }
    Err(BasesError::NotInSpan { basis, residual: rest })
}

/// `omega s_lambda = s_lambda'` on a Schur expansion.
pub fn omega_on_schur(e: &Expansion) -> Result<Expansion, BasesError> {
    if e.basis != Basis::Schur {
        return Err(BasesError::WrongBasis { expected: Basis::Schur, got: e.basis });
    }
    let mut out = Expansion::new(Basis::Schur);
    for (l, c) in e.iter() {
        out.add(Partition::from_unsorted(l.clone()).conjugate().parts().to_vec(), c);
    }
    Ok(out)
}

fn non_virtual_skt(a: &WeakComposition) -> usize {
    enumerate::skt(a).iter().filter(|t| !des(t).is_virtual()).count()
}

/// The slide expansions of `kappa_a` and `kappa_{0 x a}` have equally many terms.
pub fn is_f_stable(a: &WeakComposition) -> bool {
    non_virtual_skt(a) == non_virtual_skt(&a.pad(1))
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

    fn poly(s: &str, n: usize) -> ParamPoly {
        ParamPoly::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn slide_of_0212() {
        let expected =
            poly("x2^2*x3*x4^2 + x1*x2*x3*x4^2 + x1^2*x3*x4^2 + x1^2*x2*x4^2 + x1^2*x2*x3*x4 + x1^2*x2*x3^2", 4);
        assert_eq!(slide(&wc("(0,2,1,2)")), expected);
        assert_eq!(slide(&wc("(3)")), poly("x1^3", 1));
        assert!(slide_of(&WeakDescent::Virtual, 4).is_zero());
    }

    #[test]
    fn key_of_0212() {
        let a = wc("(0,2,1,2)");
        let sum = ["(1,2,1,1)", "(0,2,2,1)", "(0,2,1,2)", "(1,2,0,2)"]
            .iter()
            .fold(ParamPoly::zero(4), |acc, s| acc.try_add(&slide(&wc(s))).unwrap());
        assert_eq!(sum.total(), 16);
        assert_eq!(key(&a), sum);
        assert_eq!(key_via_slides(&a), sum);
        assert_eq!(key(&wc("(3,0,0)")), poly("x1^3", 3));
    }

    #[test]
    fn quasifund_basics() {
        assert_eq!(quasifund(&"(4)".parse().unwrap(), 1), poly("x1^4", 1));
        let alpha: Composition = "(2,1,2)".parse().unwrap();
        assert_eq!(quasifund(&alpha, 8), slide(&wc("(0,0,0,0,0,2,1,2)")));
        assert_eq!(quasifund(&alpha, 3), slide(&wc("(2,1,2)")));
    }

    #[test]
    fn schur_routes() {
        let s32 = schur(&pt("(3,2)"), 5);
        assert_eq!(schur_gessel(&pt("(3,2)"), 5), s32);
        let labels: Vec<String> = schur_quasi_expansion(&pt("(3,2)")).to_lines();
        assert_eq!(labels, vec!["(1,2,2) : 1", "(1,3,1) : 1", "(2,2,1) : 1", "(2,3) : 1", "(3,2) : 1"]);
        assert_eq!(schur(&pt("(1)"), 3), poly("x1 + x2 + x3", 3));
        assert_eq!(schur(&pt("(1,1)"), 3), poly("x1*x2 + x1*x3 + x2*x3", 3));
    }

    #[test]
    fn macdonald_q0_fixture() {
        let a = wc("(0,2,1,2)");
        let e = macdonald_q0_slide_expansion(&a);
        let mut expected = Expansion::new(Basis::Slide);
        for s in ["(1,2,1,1)", "(0,2,2,1)", "(0,2,1,2)", "(1,2,0,2)"] {
            expected.add(wc(s).parts().to_vec(), &ParamCoeff::one());
        }
        for s in ["(1,1,1,2)", "(1,1,2,1)", "(1,2,1,1)", "(2,1,1,1)"] {
            expected.add(wc(s).parts().to_vec(), &ParamCoeff::q_pow(1));
        }
        assert_eq!(e, expected);
        let m = macdonald_q0(&a);
        assert_eq!(m, e.to_polynomial(4));
        let one = Rational::one();
        assert_eq!(
            m.evaluate(&[one.clone(), one.clone(), one.clone(), one.clone()], &one, &Rational::zero()).unwrap(),
            Rational::from_integer(20.into())
        );
        assert_eq!(m.specialize_q_zero(), key(&a));
    }

    #[test]
    fn hall_littlewood_fixture() {
        let mu = pt("(3,2)");
        let e = hall_littlewood_quasi(&mu);
        let lines = e.to_lines();
        assert_eq!(
            lines,
            vec![
                "(1,2,2) : 1",
                "(1,3,1) : 1",
                "(1,4) : t",
                "(2,2,1) : 1",
                "(2,3) : 1 + t",
                "(3,2) : 1 + t",
                "(4,1) : t",
                "(5) : t^2"
            ]
        );
        let s = expand_in_basis(&hall_littlewood(&mu, 5), Basis::Schur).unwrap();
        assert_eq!(s.to_lines(), vec!["(3,2) : 1", "(4,1) : t", "(5) : t^2"]);
    }

    #[test]
    fn peeling() {
        let a = wc("(0,2,1,2)");
        let k = expand_in_basis(&key(&a), Basis::Key).unwrap();
        assert_eq!(k.to_lines(), vec!["(0,2,1,2) : 1"]);
        let e = expand_in_basis(&macdonald_q0(&a), Basis::Key).unwrap();
        assert_eq!(e.to_lines(), vec!["(0,2,1,2) : 1", "(1,1,1,2) : q"]);
        let sl = expand_in_basis(&key(&a), Basis::Slide).unwrap();
        assert_eq!(sl, key_slide_expansion(&a));
        let bad = poly("x1*x2^2", 2);
        assert!(matches!(expand_in_basis(&bad, Basis::Schur), Err(BasesError::NotInSpan { .. })));
    }

    #[test]
    fn omega() {
        let mut e = Expansion::new(Basis::Schur);
        e.add(vec![3, 2], &ParamCoeff::one());
        let w = omega_on_schur(&e).unwrap();
        assert_eq!(w.to_lines(), vec!["(2,2,1) : 1"]);
        assert_eq!(omega_on_schur(&w).unwrap(), e);
        assert!(omega_on_schur(&Expansion::new(Basis::Key)).is_err());
    }

    #[test]
    fn f_stability() {
        assert!(!is_f_stable(&wc("(0,2,1,2)")));
        assert!(is_f_stable(&wc("(3)")));
        assert!(is_f_stable(&wc("(0,0,0,0,0,2,1,2)")));
    }

    #[test]
    fn e_full_small() {
        let r = |s: &str| crate::polyring::parse_rational(s).unwrap();
        let (x1, x2, q, t) = (r("2/3"), r("5"), r("1/2"), r("3/7"));
        let v = evaluate_e_full(&wc("(1)"), std::slice::from_ref(&x1), &q, &t).unwrap();
        assert_eq!(v, x1);
        // x2 + (1-t)/(1-qt) x1
        let v = evaluate_e_full(&wc("(0,1)"), &[x1.clone(), x2.clone()], &q, &t).unwrap();
        let one = Rational::one();
        assert_eq!(v, &x2 + (&one - &t) / (&one - &q * &t) * &x1);
        assert!(matches!(
            evaluate_e_full(&wc("(0,1)"), &[x1, x2], &one, &one),
            Err(BasesError::VanishingDenominator(_))
        ));
    }
}
