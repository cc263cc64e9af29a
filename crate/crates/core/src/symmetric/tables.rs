//! Per-degree data shared by all conversions: partition indices, monomial
//! structure constants and transition matrices to and from the `m` basis.
//!
//! Every cache here is write-once per key; a racing duplicate computation
//! produces an identical value, so readers never observe a difference.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Basis;
use crate::partitions::{enumerate, Partition};

pub(crate) struct Cache<K, V>(OnceLock<RwLock<HashMap<K, Arc<V>>>>);

impl<K: Eq + Hash + Clone, V> Cache<K, V> {
    pub(crate) const fn new() -> Self {
        Cache(OnceLock::new())
    }

    pub(crate) fn get_or(&self, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
        let map = self.0.get_or_init(Default::default);
        if let Some(v) = map.read().unwrap().get(key) {
            return v.clone();
        }
        let v = Arc::new(f());
        map.write().unwrap().entry(key.clone()).or_insert(v).clone()
    }
}

/// Partitions of `n`, largest first, with their positions.
pub(crate) struct Index {
    pub parts: Vec<Partition>,
    pub pos: HashMap<Partition, usize>,
}

pub(crate) fn index(n: usize) -> Arc<Index> {
    static C: Cache<usize, Index> = Cache::new();
    C.get_or(&n, || {
        let parts = enumerate(n, None, false);
        let pos = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Index { parts, pos }
    })
}

/// `z_λ = Π_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

/// Structure constants of `m_λ m_μ` in the monomial basis.
pub(crate) fn m_product(lambda: &Partition, mu: &Partition) -> Arc<Vec<(Partition, BigInt)>> {
    static C: Cache<(Partition, Partition), Vec<(Partition, BigInt)>> = Cache::new();
    let key = if lambda <= mu { (lambda.clone(), mu.clone()) } else { (mu.clone(), lambda.clone()) };
    C.get_or(&key, || m_product_raw(&key.0, &key.1))
}

fn m_product_raw(lambda: &Partition, mu: &Partition) -> Vec<(Partition, BigInt)> {
    if lambda.is_empty() {
        return vec![(mu.clone(), BigInt::one())];
    }
    if mu.is_empty() {
        return vec![(lambda.clone(), BigInt::one())];
    }
    // candidate shapes: place each part of μ on a distinct slot of λ padded
    let slots = lambda.len() + mu.len();
    let base = lambda.padded(slots);
    let mut shapes = std::collections::BTreeSet::new();
    let mut cur = base.clone();
    place(mu.parts(), 0, &mut vec![false; slots], &mut cur, &mut shapes);
    shapes
        .into_iter()
        .map(|nu| {
            let c = count_splits(&nu, lambda, mu);
            (nu, BigInt::from(c))
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn place(
    rest: &[usize],
    min_slot: usize,
    used: &mut Vec<bool>,
    cur: &mut Vec<usize>,
    out: &mut std::collections::BTreeSet<Partition>,
) {
    let Some((&p, tail)) = rest.split_first() else {
        out.insert(Partition::from_multiset(cur.clone()));
        return;
    };
    // equal consecutive parts are placed on increasing slots to avoid repeats
    let same_as_next = tail.first() == Some(&p);
    for s in min_slot..used.len() {
        if used[s] {
            continue;
        }
        used[s] = true;
        cur[s] += p;
        place(tail, if same_as_next { s + 1 } else { 0 }, used, cur, out);
        cur[s] -= p;
        used[s] = false;
    }
}

/// Number of vectors `α`, a rearrangement of `λ` padded to `ℓ(ν)`, with
/// `ν - α` a rearrangement of `μ`.
fn count_splits(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    let l = nu.len();
    if lambda.len() > l || mu.len() > l {
        return 0;
    }
    let ms = |p: &Partition| -> Vec<(usize, usize)> {
        let mut m: Vec<(usize, usize)> = Vec::new();
        for v in p.padded(l) {
            match m.iter_mut().find(|e| e.0 == v) {
                Some(e) => e.1 += 1,
                None => m.push((v, 1)),
            }
        }
        m
    };
    fn rec(nu: &[usize], a: &mut Vec<(usize, usize)>, b: &mut Vec<(usize, usize)>) -> u64 {
        let Some((&v, rest)) = nu.split_first() else { return 1 };
        let mut total = 0;
        for i in 0..a.len() {
            let (x, cx) = a[i];
            if cx == 0 || x > v {
                continue;
            }
            let Some(j) = b.iter().position(|e| e.0 == v - x && e.1 > 0) else { continue };
            a[i].1 -= 1;
            b[j].1 -= 1;
            total += rec(rest, a, b);
            a[i].1 += 1;
            b[j].1 += 1;
        }
        total
    }
    rec(nu.parts(), &mut ms(lambda), &mut ms(mu))
}

/// Sparse square matrix over `Q`, rows indexed like [`index`].
pub(crate) type Matrix = Vec<Vec<(usize, BigRational)>>;

fn mul_matrices(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .map(|row| {
            let mut acc = vec![BigRational::zero(); b.len()];
            for (k, x) in row {
                for (j, y) in &b[*k] {
                    acc[*j] += x * y;
                }
            }
            acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
        })
        .collect()
}

fn invert(a: &Matrix) -> Matrix {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); 2 * n]; n];
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row {
            m[i][*j] = v.clone();
        }
        m[i][n + i] = BigRational::one();
    }
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("transition matrix is invertible");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        let prow = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
    }
    m.into_iter()
        .map(|row| row[n..].iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect())
        .collect()
}

/// Expansion in `m` of a product of one-part generators.
fn generator_product(parts: &[usize], generator: impl Fn(usize) -> Vec<(Partition, BigInt)>) -> HashMap<Partition, BigInt> {
    let mut acc: HashMap<Partition, BigInt> = HashMap::from([(Partition::empty(), BigInt::one())]);
    for &k in parts {
        let g = generator(k);
        let mut next: HashMap<Partition, BigInt> = HashMap::new();
        for (a, ca) in &acc {
            for (b, cb) in &g {
                for (nu, c) in m_product(a, b).iter() {
                    *next.entry(nu.clone()).or_insert_with(BigInt::zero) += ca * cb * c;
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        acc = next;
    }
    acc
}

/// Rows: basis element `b_λ`; entries: coefficients of `m_μ`.
pub(crate) fn to_m(basis: Basis, n: usize) -> Arc<Matrix> {
    static C: Cache<(Basis, usize), Matrix> = Cache::new();
    C.get_or(&(basis, n), || {
        let idx = index(n);
        let to_row = |map: HashMap<Partition, BigInt>| -> Vec<(usize, BigRational)> {
            let mut row: Vec<(usize, BigRational)> =
                map.into_iter().map(|(p, c)| (idx.pos[&p], BigRational::from_integer(c))).collect();
            row.sort_by_key(|e| e.0);
            row
        };
        match basis {
            Basis::M => (0..idx.parts.len()).map(|i| vec![(i, BigRational::one())]).collect(),
            Basis::H => idx
                .parts
                .iter()
                .map(|l| to_row(generator_product(l.parts(), |k| index(k).parts.iter().map(|p| (p.clone(), BigInt::one())).collect())))
                .collect(),
            Basis::E => idx
                .parts
                .iter()
                .map(|l| to_row(generator_product(l.parts(), |k| vec![(Partition::column(k), BigInt::one())])))
                .collect(),
            Basis::P => idx
                .parts
                .iter()
                .map(|l| to_row(generator_product(l.parts(), |k| vec![(Partition::row(k), BigInt::one())])))
                .collect(),
            Basis::S => mul_matrices(&s_to_h(n), &to_m(Basis::H, n)),
        }
    })
}

/// Rows: `m_λ`; entries: coefficients in `basis`.
pub(crate) fn from_m(basis: Basis, n: usize) -> Arc<Matrix> {
    static C: Cache<(Basis, usize), Matrix> = Cache::new();
    C.get_or(&(basis, n), || invert(&to_m(basis, n)))
}

/// Rows: `from_λ`; entries: coefficients in `to`.
pub(crate) fn transition(from: Basis, to: Basis, n: usize) -> Arc<Matrix> {
    static C: Cache<(Basis, Basis, usize), Matrix> = Cache::new();
    C.get_or(&(from, to, n), || match (from, to) {
        (_, Basis::M) => (*to_m(from, n)).clone(),
        (Basis::M, _) => (*from_m(to, n)).clone(),
        _ => mul_matrices(&to_m(from, n), &from_m(to, n)),
    })
}

/// Jacobi-Trudi expansion of each `s_λ` in the `h` basis.
fn s_to_h(n: usize) -> Matrix {
    let idx = index(n);
    idx.parts
        .iter()
        .map(|l| {
            let mut row: Vec<(usize, BigRational)> = super::schur::jacobi_trudi_h(l, &Partition::empty())
                .into_iter()
                .map(|(p, c)| (idx.pos[&p], BigRational::from_integer(c)))
                .collect();
            row.sort_by_key(|e| e.0);
            row
        })
        .collect()
}
