//! Sparse polynomials in `x1..xn` whose coefficients are integer polynomials
//! in two parameters `q` and `t`, with exact rational evaluation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rationals (always reduced, positive denominator).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("expected {expected} values for the variables, got {got}")]
    PointLength { expected: usize, got: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

fn overflow() -> ! {
    panic!("integer overflow in polynomial coefficient")
}

fn add_i64(a: i64, b: i64) -> i64 {
    a.checked_add(b).unwrap_or_else(|| overflow())
}

fn mul_i64(a: i64, b: i64) -> i64 {
    a.checked_mul(b).unwrap_or_else(|| overflow())
}

/// Parse a rational written `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let t = s.trim();
    let r: Rational = t.parse().map_err(|_| PolyError::Parse(s.to_string()))?;
    Ok(r)
}

/// Canonical `p/q` (or `p` for integers).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn pow(base: &Rational, e: usize) -> Rational {
    num_traits::pow(base.clone(), e)
}

/// Integer polynomial in `q` and `t`; keys are `(q-exponent, t-exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParamCoeff {
    terms: BTreeMap<(usize, usize), i64>,
}

impl ParamCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * q^i * t^j`
    pub fn monomial(c: i64, i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn q_pow(i: usize) -> Self {
        Self::monomial(1, i, 0)
    }

    pub fn t_pow(j: usize) -> Self {
        Self::monomial(1, 0, j)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn coefficient(&self, i: usize, j: usize) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, c: i64, i: usize, j: usize) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e = add_i64(*e, c);
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add_assign(&mut self, o: &ParamCoeff) {
        for (&(i, j), &c) in &o.terms {
            self.add_term(c, i, j);
        }
    }

    pub fn scale(&self, k: i64) -> ParamCoeff {
        let mut out = ParamCoeff::zero();
        for (&(i, j), &c) in &self.terms {
            out.add_term(mul_i64(c, k), i, j);
        }
        out
    }

    pub fn mul(&self, o: &ParamCoeff) -> ParamCoeff {
        let mut out = ParamCoeff::zero();
        for (&(i, j), &c) in &self.terms {
            for (&(k, l), &d) in &o.terms {
                out.add_term(mul_i64(c, d), i + k, j + l);
            }
        }
        out
    }

    pub fn evaluate(&self, q: &Rational, t: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(i, j), &c)| {
            acc + Rational::from_integer(BigInt::from(c)) * pow(q, i) * pow(t, j)
        })
    }

    /// Keep only terms free of `q`.
    pub fn specialize_q_zero(&self) -> ParamCoeff {
        Self { terms: self.terms.iter().filter(|(k, _)| k.0 == 0).map(|(&k, &v)| (k, v)).collect() }
    }

    /// Keep only terms free of `t`.
    pub fn specialize_t_zero(&self) -> ParamCoeff {
        Self { terms: self.terms.iter().filter(|(k, _)| k.1 == 0).map(|(&k, &v)| (k, v)).collect() }
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> ParamCoeff {
        Self { terms: self.terms.iter().map(|(&(i, j), &v)| ((j, i), v)).collect() }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Value at `q = t = 1`.
    pub fn sum(&self) -> i64 {
        self.terms.values().fold(0, |a, &c| add_i64(a, c))
    }

    pub fn uses_q(&self) -> bool {
        self.terms.keys().any(|k| k.0 > 0)
    }

    pub fn uses_t(&self) -> bool {
        self.terms.keys().any(|k| k.1 > 0)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, name: &str, e: usize, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        f.write_str(name)
    } else {
        write!(f, "{name}^{e}")
    }
}

/// Writes `c*q^i*t^j` followed by `extra` factors, dropping a unit coefficient
/// unless the term is a bare constant.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: i64,
    i: usize,
    j: usize,
    extra: &[(String, usize)],
    leading: bool,
) -> fmt::Result {
    let abs = c.unsigned_abs();
    if leading {
        if c < 0 {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if c < 0 { " - " } else { " + " })?;
    }
    let bare = i == 0 && j == 0 && extra.iter().all(|(_, e)| *e == 0);
    let mut first = true;
    if abs != 1 || bare {
        write!(f, "{abs}")?;
        first = false;
    }
    write_power(f, "q", i, &mut first)?;
    write_power(f, "t", j, &mut first)?;
    for (name, e) in extra {
        write_power(f, name, *e, &mut first)?;
    }
    Ok(())
}

impl fmt::Display for ParamCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // ascending total degree, then by q-degree
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|(&(i, j), _)| (i + j, std::cmp::Reverse(i)));
        for (n, (&(i, j), &c)) in keys.into_iter().enumerate() {
            write_term(f, c, i, j, &[], n == 0)?;
        }
        Ok(())
    }
}

impl FromStr for ParamCoeff {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p = ParamPoly::parse(s, Some(0))?;
        Ok(p.coefficient(&[]))
    }
}

/// Graded lexicographic comparison with `x1` most significant.
pub fn grlex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let (da, db): (usize, usize) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Sparse polynomial in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, ParamCoeff>,
}

impl ParamPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], ParamCoeff::one())
    }

    /// `coeff * X^exps`; the variable count is `exps.len()`.
    pub fn monomial(exps: Vec<usize>, coeff: ParamCoeff) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, &coeff);
        p
    }

    /// The variable `x_i` (1-based) among `nvars`.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, ParamCoeff::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[usize]) -> ParamCoeff {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &ParamCoeff)> {
        self.terms.iter()
    }

    /// Terms in decreasing graded lexicographic order.
    pub fn terms_grlex(&self) -> Vec<(&Vec<usize>, &ParamCoeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: &ParamCoeff) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length must match the variable count");
        if c.is_zero() {
            return;
        }
        if let Some(e) = self.terms.get_mut(&exps) {
            e.add_assign(c);
            if e.is_zero() {
                self.terms.remove(&exps);
            }
        } else {
            self.terms.insert(exps, c.clone());
        }
    }

    /// Add `c * X^exps` with an integer coefficient.
    pub fn add_int(&mut self, exps: Vec<usize>, c: i64, qi: usize, tj: usize) {
        self.add_term(exps, &ParamCoeff::monomial(c, qi, tj));
    }

    fn check(&self, o: &ParamPoly) -> Result<(), PolyError> {
        if self.nvars == o.nvars {
            Ok(())
        } else {
            Err(PolyError::VarMismatch(self.nvars, o.nvars))
        }
    }

    pub fn try_add(&self, o: &ParamPoly) -> Result<ParamPoly, PolyError> {
        self.check(o)?;
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &ParamPoly) -> Result<ParamPoly, PolyError> {
        self.try_add(&o.scale(&ParamCoeff::constant(-1)))
    }

    pub fn try_mul(&self, o: &ParamPoly) -> Result<ParamPoly, PolyError> {
        self.check(o)?;
        let mut out = ParamPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// In-place `self += k * o`.
    pub fn add_scaled(&mut self, o: &ParamPoly, k: &ParamCoeff) -> Result<(), PolyError> {
        self.check(o)?;
        for (e, c) in &o.terms {
            self.add_term(e.clone(), &c.mul(k));
        }
        Ok(())
    }

    pub fn scale(&self, k: &ParamCoeff) -> ParamPoly {
        let mut out = ParamPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.mul(k));
        }
        out
    }

    pub fn evaluate(&self, x: &[Rational], q: &Rational, t: &Rational) -> Result<Rational, PolyError> {
        if x.len() != self.nvars {
            return Err(PolyError::PointLength { expected: self.nvars, got: x.len() });
        }
        Ok(self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            let mono = e.iter().zip(x).fold(Rational::one(), |m, (&k, xi)| m * pow(xi, k));
            acc + c.evaluate(q, t) * mono
        }))
    }

    fn map_coeffs(&self, f: impl Fn(&ParamCoeff) -> ParamCoeff) -> ParamPoly {
        let mut out = ParamPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &f(c));
        }
        out
    }

    pub fn specialize_q_zero(&self) -> ParamPoly {
        self.map_coeffs(ParamCoeff::specialize_q_zero)
    }

    pub fn specialize_t_zero(&self) -> ParamPoly {
        self.map_coeffs(ParamCoeff::specialize_t_zero)
    }

    pub fn swap_qt(&self) -> ParamPoly {
        self.map_coeffs(ParamCoeff::swap_qt)
    }

    /// Prepend `m` variables that do not occur: `x_i` becomes `x_{i+m}`.
    pub fn shift_vars(&self, m: usize) -> ParamPoly {
        let mut out = ParamPoly::zero(self.nvars + m);
        for (e, c) in &self.terms {
            let mut ne = vec![0; m];
            ne.extend_from_slice(e);
            out.add_term(ne, c);
        }
        out
    }

    /// Coefficient sum at `q = t = 1`, `x = 1`.
    pub fn total(&self) -> i64 {
        self.terms.values().fold(0, |a, c| add_i64(a, c.sum()))
    }

    /// Parse the text format. With `nvars = None` the count is the largest
    /// variable index that occurs (at least 1).
    pub fn parse(s: &str, nvars: Option<usize>) -> Result<ParamPoly, PolyError> {
        let err = || PolyError::Parse(s.to_string());
        let mut raw: Vec<(i64, usize, usize, BTreeMap<usize, usize>)> = Vec::new();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // split into signed terms
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for (k, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 && !compact[..k].ends_with('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(b) => (-1i64, b),
                None => (1i64, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (mut c, mut qi, mut tj) = (sign, 0usize, 0usize);
            let mut xs = BTreeMap::new();
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<usize>().map_err(|_| err())?),
                    None => (factor, 1),
                };
                if let Ok(v) = base.parse::<i64>() {
                    if factor.contains('^') {
                        return Err(err());
                    }
                    c = mul_i64(c, v);
                } else if base == "q" {
                    qi += exp;
                } else if base == "t" {
                    tj += exp;
                } else if let Some(idx) = base.strip_prefix('x') {
                    let idx: usize = idx.parse().map_err(|_| err())?;
                    if idx == 0 {
                        return Err(err());
                    }
                    *xs.entry(idx).or_insert(0) += exp;
                } else {
                    return Err(err());
                }
            }
            raw.push((c, qi, tj, xs));
        }
        let needed = raw.iter().filter_map(|r| r.3.keys().max().copied()).max().unwrap_or(0);
        let n = match nvars {
            Some(n) if n < needed => return Err(err()),
            Some(n) => n,
            None => needed.max(1),
        };
        let mut p = ParamPoly::zero(n);
        for (c, qi, tj, xs) in raw {
            let mut e = vec![0; n];
            for (i, k) in xs {
                e[i - 1] += k;
            }
            p.add_int(e, c, qi, tj);
        }
        Ok(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut leading = true;
        for (e, c) in self.terms_grlex() {
            let xs: Vec<(String, usize)> = e.iter().enumerate().map(|(i, &k)| (format!("x{}", i + 1), k)).collect();
            let mut cs: Vec<_> = c.terms().collect();
            cs.sort_by_key(|&((i, j), _)| (i + j, std::cmp::Reverse(i)));
            for ((i, j), v) in cs {
                write_term(f, v, i, j, &xs, leading)?;
                leading = false;
            }
        }
        Ok(())
    }
}

/// Structured form: `{"nvars": n, "terms": [{"exponents": [...], "coefficient":
/// [{"q": i, "t": j, "c": c}, ...]}, ...]}` with terms in decreasing grlex order
/// and coefficient entries by increasing `(q, t)`.
#[derive(Serialize, Deserialize)]
struct PolyDump {
    nvars: usize,
    terms: Vec<TermDump>,
}

#[derive(Serialize, Deserialize)]
struct TermDump {
    exponents: Vec<usize>,
    coefficient: Vec<CoeffDump>,
}

#[derive(Serialize, Deserialize)]
struct CoeffDump {
    q: usize,
    t: usize,
    c: i64,
}

impl Serialize for ParamCoeff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<CoeffDump> = self.terms().map(|((q, t), c)| CoeffDump { q, t, c }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParamCoeff {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<CoeffDump>::deserialize(d)?;
        let mut out = ParamCoeff::zero();
        for c in v {
            out.add_term(c.c, c.q, c.t);
        }
        Ok(out)
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms_grlex()
            .into_iter()
            .map(|(e, c)| TermDump {
                exponents: e.clone(),
                coefficient: c.terms().map(|((q, t), c)| CoeffDump { q, t, c }).collect(),
            })
            .collect();
        PolyDump { nvars: self.nvars, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParamPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let dump = PolyDump::deserialize(d)?;
        let mut p = ParamPoly::zero(dump.nvars);
        for t in dump.terms {
            if t.exponents.len() != dump.nvars {
                return Err(serde::de::Error::custom("exponent vector length differs from nvars"));
            }
            for c in t.coefficient {
                p.add_int(t.exponents.clone(), c.c, c.q, c.t);
            }
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn adding_zero() {
        let p = ParamPoly::parse("x1^2 + 3*q*x2", None).unwrap();
        assert_eq!(p.try_add(&ParamPoly::zero(2)).unwrap(), p);
    }

    #[test]
    fn product_of_variables() {
        let p = ParamPoly::var(1, 2).try_mul(&ParamPoly::var(2, 2)).unwrap();
        assert_eq!(p.to_string(), "x1*x2");
        assert_eq!(ParamPoly::var(1, 2).try_mul(&ParamPoly::var(1, 3)), Err(PolyError::VarMismatch(2, 3)));
    }

    #[test]
    fn evaluation() {
        let p = ParamPoly::var(1, 2).try_mul(&ParamPoly::var(2, 2)).unwrap();
        assert_eq!(p.evaluate(&[r("1"), r("1")], &r("0"), &r("0")).unwrap(), r("1"));
        let p = ParamPoly::parse("q*x1", None).unwrap();
        assert_eq!(p.evaluate(&[r("2")], &r("3"), &r("0")).unwrap(), r("6"));
        assert!(p.evaluate(&[], &r("3"), &r("0")).is_err());
        let p = ParamPoly::parse("x1 - 1/1*x1", None);
        assert!(p.is_err());
    }

    #[test]
    fn specialization() {
        let p = ParamPoly::parse("x1 + q*x2 + t*x1 + q*t", Some(2)).unwrap();
        assert_eq!(p.specialize_q_zero().to_string(), "x1 + t*x1");
        assert_eq!(p.specialize_t_zero().to_string(), "x1 + q*x2");
        let free = ParamPoly::parse("2*x1*x2 - x2", None).unwrap();
        assert_eq!(free.specialize_q_zero(), free);
        assert_eq!(p.swap_qt().swap_qt(), p);
    }

    #[test]
    fn text_format() {
        let p = ParamPoly::parse("x2^2 + x1*x2 + 2*q^2*t*x1^2 - 1 + x3", None).unwrap();
        assert_eq!(p.to_string(), "2*q^2*t*x1^2 + x1*x2 + x2^2 + x3 - 1");
        assert_eq!(ParamPoly::parse(&p.to_string(), None).unwrap(), p);
        assert_eq!(ParamPoly::zero(3).to_string(), "0");
        assert!(ParamPoly::parse("x0", None).is_err());
        assert!(ParamPoly::parse("y1", None).is_err());
        assert!(ParamPoly::parse("x3", Some(2)).is_err());
    }

    #[test]
    fn coefficient_text() {
        assert_eq!("t + t^2".parse::<ParamCoeff>().unwrap().to_string(), "t + t^2");
        assert_eq!(ParamCoeff::q_pow(1).to_string(), "q");
        assert_eq!(ParamCoeff::one().to_string(), "1");
        assert_eq!(ParamCoeff::constant(-2).to_string(), "-2");
    }

    #[test]
    fn json_round_trip() {
        let p = ParamPoly::parse("x2^2 + 3*q*t^2*x1 - x1*x2", None).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with("{\"nvars\":2,\"terms\":[{\"exponents\":[1,1]"));
        let back: ParamPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn rationals() {
        assert_eq!(format_rational(&r("6/4")), "3/2");
        assert_eq!(format_rational(&r("-4/2")), "-2");
        assert!(parse_rational("1/0x").is_err());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_aborts() {
        let big = ParamCoeff::constant(i64::MAX);
        let _ = big.scale(2);
    }
}
