//! Library results against independent constructions written out here.

use std::collections::BTreeMap;

use demazure::bases;
use demazure::enumerate;
use demazure::kostka;
use demazure::polyring::{ParamCoeff, ParamPoly, Rational};
use demazure::shapes::{Composition, Partition, WeakComposition};
use num_traits::One;

/// Integer polynomial: exponent vector -> coefficient.
type Poly = BTreeMap<Vec<usize>, i64>;

fn add_to(p: &mut Poly, e: Vec<usize>, c: i64) {
    let v = p.entry(e.clone()).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_to(&mut out, e, ca * cb);
        }
    }
    out
}

fn from_lib(p: &ParamPoly) -> Poly {
    let mut out = Poly::new();
    for (e, c) in p.terms() {
        assert!(!c.uses_q() && !c.uses_t());
        add_to(&mut out, e.clone(), c.coefficient(0, 0));
    }
    out
}

/// Isobaric divided difference on variables `i`, `i + 1`.
fn pi(i: usize, f: &Poly) -> Poly {
    let mut out = Poly::new();
    for (e, &c) in f {
        let (p, r) = (e[i], e[i + 1]);
        let mut put = |a: usize, b: usize, s: i64| {
            let mut m = e.clone();
            m[i] = a;
            m[i + 1] = b;
            add_to(&mut out, m, s * c);
        };
        if p >= r {
            for k in 0..=p - r {
                put(p - k, r + k, 1);
            }
        } else {
            for k in 1..r - p {
                put(p + k, r - k, -1);
            }
        }
    }
    out
}

fn demazure_key(a: &[usize]) -> Poly {
    match (0..a.len().saturating_sub(1)).find(|&i| a[i] < a[i + 1]) {
        None => Poly::from([(a.to_vec(), 1)]),
        Some(i) => {
            let mut b = a.to_vec();
            b.swap(i, i + 1);
            pi(i, &demazure_key(&b))
        }
    }
}

fn weak_compositions(max_cells: usize, max_len: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    for n in 1..=max_cells {
        for len in 1..=max_len {
            out.extend(WeakComposition::all(len, n));
        }
    }
    out
}

#[test]
fn key_polynomials_match_divided_differences() {
    let shapes = weak_compositions(5, 4);
    assert!(shapes.len() > 200);
    for a in shapes {
        assert_eq!(from_lib(&bases::key(&a)), demazure_key(a.parts()), "{a}");
    }
}

#[test]
fn e_at_q_zero_and_t_zero_is_the_key_polynomial() {
    for a in weak_compositions(4, 4) {
        let e = bases::macdonald_q0(&a).specialize_q_zero();
        assert_eq!(from_lib(&e), demazure_key(a.parts()), "{a}");
    }
}

fn complete(k: usize, n: usize) -> Poly {
    fn go(k: usize, n: usize, i: usize, e: &mut Vec<usize>, out: &mut Poly) {
        if i + 1 == n {
            e[i] = k;
            add_to(out, e.clone(), 1);
            return;
        }
        for j in 0..=k {
            e[i] = j;
            go(k - j, n, i + 1, e, out);
        }
    }
    let mut out = Poly::new();
    go(k, n, 0, &mut vec![0; n], &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Jacobi-Trudi: `s_lambda = det(h_{lambda_i - i + j})`.
fn jacobi_trudi(lambda: &[usize], n: usize) -> Poly {
    let l = lambda.len();
    let h = |k: i64| if k < 0 { Poly::new() } else { complete(k as usize, n) };
    let mut out = Poly::new();
    for p in permutations(l) {
        let mut term = Poly::from([(vec![0; n], sign(&p))]);
        for (i, &j) in p.iter().enumerate() {
            term = mul(&term, &h(lambda[i] as i64 - i as i64 + j as i64));
        }
        for (e, c) in term {
            add_to(&mut out, e, c);
        }
    }
    out
}

#[test]
fn schur_polynomials_match_jacobi_trudi() {
    for size in 1..=6 {
        for lambda in Partition::all(size) {
            for n in 1..=4 {
                assert_eq!(from_lib(&bases::schur(&lambda, n)), jacobi_trudi(lambda.parts(), n), "{lambda} in {n}");
            }
        }
    }
}

/// Gessel's fundamental quasisymmetric polynomial straight from its definition.
fn gessel(alpha: &[usize], n: usize) -> Poly {
    let k: usize = alpha.iter().sum();
    let mut strict = vec![false; k];
    let mut s = 0;
    for &p in &alpha[..alpha.len() - 1] {
        s += p;
        strict[s] = true;
    }
    fn go(pos: usize, prev: usize, strict: &[bool], n: usize, e: &mut Vec<usize>, out: &mut Poly) {
        if pos == strict.len() {
            add_to(out, e.clone(), 1);
            return;
        }
        let lo = if strict[pos] { prev + 1 } else { prev };
        for v in lo.max(1)..=n {
            e[v - 1] += 1;
            go(pos + 1, v, strict, n, e, out);
            e[v - 1] -= 1;
        }
    }
    let mut out = Poly::new();
    go(0, 1, &strict, n, &mut vec![0; n], &mut out);
    out
}

#[test]
fn fundamental_quasisymmetric_polynomials_match_definition() {
    for size in 1..=5 {
        for len in 1..=size {
            for a in WeakComposition::all(len, size) {
                if a.parts().contains(&0) {
                    continue;
                }
                let alpha = Composition::new(a.parts().to_vec()).unwrap();
                for n in 1..=4 {
                    assert_eq!(from_lib(&bases::quasifund(&alpha, n)), gessel(a.parts(), n), "{alpha} in {n}");
                }
            }
        }
    }
}

/// Semistandard tableaux of shape `lambda` (rows top-down, English) and content `mu`.
fn ssyt_with_content(lambda: &[usize], mu: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(lambda: &[usize], left: &mut Vec<usize>, t: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let r = match (0..lambda.len()).find(|&r| t[r].len() < lambda[r]) {
            None => {
                out.push(t.clone());
                return;
            }
            Some(r) => r,
        };
        let c = t[r].len();
        let lo = t[r].last().copied().unwrap_or(1).max(if r > 0 { t[r - 1][c] + 1 } else { 1 });
        for v in lo..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            t[r].push(v);
            go(lambda, left, t, out);
            t[r].pop();
            left[v - 1] += 1;
        }
    }
    let mut out = Vec::new();
    go(lambda, &mut mu.to_vec(), &mut vec![Vec::new(); lambda.len()], &mut out);
    out
}

/// Lascoux-Schutzenberger charge of a word with partition content.
fn charge(word: &[usize]) -> usize {
    let mut left: Vec<Option<usize>> = word.iter().map(|&v| Some(v)).collect();
    let mut total = 0;
    while left.iter().any(Option::is_some) {
        let top = left.iter().flatten().copied().max().unwrap();
        let mut pos = left.len();
        let mut index = 0;
        for r in 1..=top {
            // scan leftwards from pos, wrapping around once
            let mut found = None;
            for p in (0..pos).rev() {
                if left[p] == Some(r) {
                    found = Some(p);
                    break;
                }
            }
            if found.is_none() {
                if r > 1 {
                    index += 1;
                }
                found = (0..left.len()).rev().find(|&p| left[p] == Some(r));
            }
            let p = found.expect("partition content");
            total += index;
            left[p] = None;
            pos = p;
        }
    }
    total
}

#[test]
fn charge_examples() {
    assert_eq!(charge(&[1, 2]), 1);
    assert_eq!(charge(&[2, 1]), 0);
    assert_eq!(charge(&[1, 1, 1, 2, 2]), 2);
}

#[test]
fn kostka_foulkes_matches_charge() {
    for size in 1..=6 {
        for mu in Partition::all(size) {
            let table = kostka::kostka_foulkes(&mu).unwrap();
            for lambda in Partition::all(size) {
                let mut want = ParamCoeff::zero();
                for t in ssyt_with_content(lambda.parts(), mu.parts()) {
                    let word: Vec<usize> = t.iter().rev().flatten().copied().collect();
                    want.add_term(1, 0, charge(&word));
                }
                assert_eq!(table.get(lambda.parts()), want, "K_{lambda},{mu}");
            }
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn hook_count(lambda: &Partition) -> usize {
    let conj = lambda.conjugate();
    let mut hooks = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= row - j + conj.parts()[j] - i - 1;
        }
    }
    factorial(lambda.size()) / hooks
}

#[test]
fn standard_family_sizes() {
    for a in weak_compositions(6, 5) {
        let n = a.size();
        let cols = a.column_lengths();
        let skd = factorial(n) / cols.parts().iter().map(|&c| factorial(c)).product::<usize>();
        assert_eq!(enumerate::skd(&a).len(), skd, "SKD{a}");
        assert_eq!(enumerate::skt(&a).len(), hook_count(&a.sort_to_partition()), "SKT{a}");
    }
    for size in 1..=6 {
        for lambda in Partition::all(size) {
            let syd = factorial(size) / lambda.parts().iter().map(|&r| factorial(r)).product::<usize>();
            assert_eq!(enumerate::syd(&lambda).len(), syd, "SYD{lambda}");
            assert_eq!(enumerate::syt(&lambda).len(), hook_count(&lambda), "SYT{lambda}");
        }
    }
}

#[test]
fn semistandard_key_tableaux_count_key_at_ones() {
    for a in weak_compositions(5, 4) {
        let at_ones: i64 = demazure_key(a.parts()).values().sum();
        assert_eq!(enumerate::sskt(&a).len() as i64, at_ones, "{a}");
    }
}

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Two-variable facts: `E_(1,0) = x1`, `E_(0,1) = x2 + (1 - t)/(1 - q t) x1`,
/// `E_(1,1) = x1 x2`, and `E_(k) = x1^k` in one variable.
#[test]
fn small_macdonald_polynomials() {
    let pts = [
        ([r("2/3"), r("-5")], r("2/5"), r("-3/4")),
        ([r("7/2"), r("1/9")], r("-3"), r("5/6")),
        ([r("1"), r("1")], r("0"), r("1/2")),
    ];
    let wc = |v: Vec<usize>| WeakComposition::new(v).unwrap();
    for (x, q, t) in pts {
        let e = |a: Vec<usize>| bases::evaluate_e_full(&wc(a), &x, &q, &t).unwrap();
        assert_eq!(e(vec![1, 0]), x[0].clone());
        let want = x[1].clone() + (Rational::one() - &t) / (Rational::one() - &q * &t) * &x[0];
        assert_eq!(e(vec![0, 1]), want);
        assert_eq!(e(vec![1, 1]), &x[0] * &x[1]);
        let one = bases::evaluate_e_full(&wc(vec![3]), &x[..1], &q, &t).unwrap();
        assert_eq!(one, &x[0] * &x[0] * &x[0]);
    }
}
