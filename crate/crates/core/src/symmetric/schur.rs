//! Determinants whose entries are `h`-basis expansions, and the Schur-type
//! quantities built from them.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{convert, Basis, SymFunc};
use crate::error::{Error, Result};
use crate::partitions::{combine, CombineMode, Partition};
use crate::qt::QTRational;

/// Minimal ring interface for determinant coefficients.
pub(crate) trait Coef: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coef for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coef for QTRational {
    fn zero() -> Self {
        QTRational::zero()
    }
    fn one() -> Self {
        QTRational::one()
    }
    fn is_zero(&self) -> bool {
        QTRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Element of a commutative algebra with basis `h_λ`: products concatenate
/// partitions.
pub(crate) type HExp<T> = BTreeMap<Partition, T>;

fn h_mul<T: Coef>(a: &HExp<T>, b: &HExp<T>, cap: Option<usize>) -> HExp<T> {
    let mut out: HExp<T> = BTreeMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            if cap.is_some_and(|c| pa.size() + pb.size() > c) {
                continue;
            }
            let key = combine(pa, pb, CombineMode::Union);
            let v = ca.mul(cb);
            let e = out.entry(key).or_insert_with(T::zero);
            *e = e.add(&v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn h_add_into<T: Coef>(acc: &mut HExp<T>, x: &HExp<T>, negate: bool) {
    for (p, c) in x {
        let v = if negate { c.neg() } else { c.clone() };
        let e = acc.entry(p.clone()).or_insert_with(T::zero);
        *e = e.add(&v);
    }
    acc.retain(|_, v| !v.is_zero());
}

/// Determinant of a square matrix of `h`-expansions by Laplace expansion
/// along rows, memoized over the set of used columns. With `cap`, terms of
/// degree above it are dropped along the way.
pub(crate) fn det_h<T: Coef>(m: &[Vec<HExp<T>>], cap: Option<usize>) -> HExp<T> {
    let n = m.len();
    assert!(n <= 24, "determinant too large for column-mask memoization");
    let mut memo: HashMap<u32, HExp<T>> = HashMap::new();
    fn rec<T: Coef>(m: &[Vec<HExp<T>>], used: u32, cap: Option<usize>, memo: &mut HashMap<u32, HExp<T>>) -> HExp<T> {
        let n = m.len();
        let row = used.count_ones() as usize;
        if row == n {
            let mut one = BTreeMap::new();
            one.insert(Partition::empty(), T::one());
            return one;
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc: HExp<T> = BTreeMap::new();
        let mut free_before = 0;
        for j in 0..n {
            if used & (1 << j) != 0 {
                continue;
            }
            let entry = &m[row][j];
            if !entry.is_empty() {
                let minor = rec(m, used | (1 << j), cap, memo);
                if !minor.is_empty() {
                    h_add_into(&mut acc, &h_mul(entry, &minor, cap), free_before % 2 == 1);
                }
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    rec(m, 0, cap, &mut memo)
}

/// `h`-expansion of `s_{λ/μ} = det(h_{λ_i - μ_j - i + j})`.
pub(crate) fn jacobi_trudi_h(lambda: &Partition, mu: &Partition) -> HashMap<Partition, BigInt> {
    let n = lambda.len();
    let m: Vec<Vec<HExp<BigInt>>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let k = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                    let mut e = BTreeMap::new();
                    if k >= 0 {
                        e.insert(Partition::row(k as usize), <BigInt as One>::one());
                    }
                    e
                })
                .collect()
        })
        .collect();
    det_h(&m, None).into_iter().collect()
}

/// `e`-expansion of `s_{λ/μ} = det(e_{λ'_i - μ'_j - i + j})`, read with `e`
/// in place of `h`.
#[cfg(test)]
pub(crate) fn dual_jacobi_trudi_e(lambda: &Partition, mu: &Partition) -> HashMap<Partition, BigInt> {
    jacobi_trudi_h(&lambda.conjugate(), &mu.conjugate())
}

/// Skew Schur function `s_{λ/μ}` expanded in the Schur basis.
pub fn skew_schur(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained(mu.to_string(), lambda.to_string()));
    }
    let h = SymFunc::from_terms(
        Basis::H,
        jacobi_trudi_h(lambda, mu).into_iter().map(|(p, c)| (p, QTRational::from_int(c))),
    );
    Ok(convert(&h, Basis::S))
}

/// Littlewood-Richardson coefficients `c^λ_{μν}`, read off from the Schur
/// expansions of the skew functions `s_{λ/μ}`.
pub fn lr_coefficients(lambda: &Partition) -> BTreeMap<(Partition, Partition), BigInt> {
    let mut out = BTreeMap::new();
    for k in 0..=lambda.size() {
        for mu in crate::partitions::enumerate(k, None, false) {
            if !lambda.contains(&mu) {
                continue;
            }
            let sk = skew_schur(lambda, &mu).expect("μ ⊆ λ");
            for (nu, c) in sk.terms() {
                let r = c.as_rational().expect("LR coefficients are integers");
                assert!(r.is_integer() && !r.is_negative(), "LR coefficient {r} is not a nonnegative integer");
                out.insert((mu.clone(), nu.clone()), r.to_integer());
            }
        }
    }
    out
}
