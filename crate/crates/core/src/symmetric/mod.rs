//! Symmetric functions over `Q(q,t)` in the bases `m, h, e, p, s`.
//!
//! Conversions go through the monomial basis using per-degree rational
//! transition matrices that are computed once and shared.

mod polynomial;
mod schur;
pub(crate) mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{combine, enumerate, CombineMode, Partition};
use crate::qt::{MonomialLetter, MonomialSum, QTRational};

pub use polynomial::Polynomial;
pub use schur::{lr_coefficients, skew_schur};
pub(crate) use schur::{det_h, HExp};
#[cfg(test)]
pub(crate) use schur::{dual_jacobi_trudi_e, jacobi_trudi_h};
pub use tables::z_lambda;

/// Basis tag of a [`SymFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Monomial.
    M,
    /// Complete homogeneous.
    H,
    /// Elementary.
    E,
    /// Power sum.
    P,
    /// Schur.
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::H, Basis::E, Basis::P, Basis::S];

    fn is_multiplicative(self) -> bool {
        matches!(self, Basis::H | Basis::E | Basis::P)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::P => "p",
            Basis::S => "s",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// A symmetric function: sparse map from partitions to coefficients in a
/// fixed basis. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, QTRational>,
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.sorted_terms().iter().map(|(p, c)| format!("{c}*{}{p}", self.basis)).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: QTRational,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.sorted_terms().into_iter().map(|(p, c)| TermJson { partition: p.clone(), coeff: c.clone() }).collect();
        SymFuncJson { basis: self.basis, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        Ok(SymFunc::from_terms(j.basis, j.terms.into_iter().map(|t| (t.partition, t.coeff))))
    }
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::term(basis, Partition::empty(), QTRational::one())
    }

    /// `c * b_λ`.
    pub fn term(basis: Basis, lambda: Partition, c: QTRational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, c);
        f
    }

    /// The basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, QTRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, QTRational)>>(basis: Basis, it: I) -> Self {
        let mut f = Self::zero(basis);
        for (p, c) in it {
            f.add_term(p, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: QTRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QTRational> {
        &self.terms
    }

    /// Terms ordered by size, then largest partition first.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &QTRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then(b.0.cmp(a.0)));
        v
    }

    pub fn coeff(&self, lambda: &Partition) -> QTRational {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest size of a partition in the support.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(p, _)| p.size() == d).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &QTRational) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(p, v)| (p.clone(), -v)).collect() }
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, o: &SymFunc) -> SymFunc {
        let o = convert(o, self.basis);
        let mut r = self.clone();
        for (p, c) in o.terms {
            r.add_term(p, c);
        }
        r
    }

    pub fn sub(&self, o: &SymFunc) -> SymFunc {
        self.add(&o.neg())
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&QTRational) -> QTRational) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    /// Same coefficients read in another basis, without conversion.
    pub(crate) fn relabel(&self, basis: Basis) -> SymFunc {
        SymFunc { basis, terms: self.terms.clone() }
    }

    /// Convenience: `h_n`, `e_n`, `p_n`.
    pub fn generator(basis: Basis, n: usize) -> SymFunc {
        SymFunc::basis_element(basis, Partition::row(n))
    }
}

/// Express `f` in the `target` basis.
pub fn convert(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis == target {
        return f.clone();
    }
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &QTRational)>> = BTreeMap::new();
    for (p, c) in &f.terms {
        by_degree.entry(p.size()).or_default().push((p, c));
    }
    let mut out = SymFunc::zero(target);
    for (n, terms) in by_degree {
        let idx = tables::index(n);
        let tr = tables::transition(f.basis, target, n);
        let mut acc: Vec<Option<QTRational>> = vec![None; idx.parts.len()];
        for (p, c) in terms {
            for (j, r) in &tr[idx.pos[p]] {
                accumulate(&mut acc[*j], c.mul_ratio(r));
            }
        }
        for (j, c) in acc.into_iter().enumerate() {
            if let Some(c) = c {
                out.add_term(idx.parts[j].clone(), c);
            }
        }
    }
    out
}

fn accumulate(slot: &mut Option<QTRational>, v: QTRational) {
    match slot {
        Some(x) => *x += &v,
        None => *slot = Some(v),
    }
}

/// Product in the monomial basis via structure constants of orbit sums,
/// returned in the basis of `f`.
pub fn multiply_via_m(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let a = convert(f, Basis::M);
    let b = convert(g, Basis::M);
    let mut out = SymFunc::zero(Basis::M);
    for (pa, ca) in &a.terms {
        for (pb, cb) in &b.terms {
            let c = ca * cb;
            for (nu, k) in tables::m_product(pa, pb).iter() {
                out.add_term(nu.clone(), c.mul_ratio(&BigRational::from_integer(k.clone())));
            }
        }
    }
    convert(&out, f.basis)
}

/// Product of two symmetric functions, returned in the basis of `f`.
///
/// When both factors share a multiplicative basis (`h`, `e` or `p`) the
/// product concatenates indices; otherwise it runs through the monomial basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    if f.basis == g.basis && f.basis.is_multiplicative() {
        let mut out = SymFunc::zero(f.basis);
        for (pa, ca) in &f.terms {
            for (pb, cb) in &g.terms {
                out.add_term(combine(pa, pb, CombineMode::Union), ca * cb);
            }
        }
        return out;
    }
    multiply_via_m(f, g)
}

/// Hall inner product, `<m_λ, h_μ> = δ_{λμ}`.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> QTRational {
    let a = convert(f, Basis::M);
    let b = convert(g, Basis::H);
    let mut acc = QTRational::zero();
    for (p, c) in &a.terms {
        if let Some(d) = b.terms.get(p) {
            acc += &(c * d);
        }
    }
    acc
}

/// The involution `ω` with `ω h_n = e_n`, returned in the basis of `f`.
pub fn omega_involution(f: &SymFunc) -> SymFunc {
    convert(&convert(f, Basis::H).relabel(Basis::E), f.basis)
}

/// Alphabet scaling factor `num / den`, acting on power sums by
/// `p_r -> (p_r[num] / p_r[den]) p_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleFactor {
    pub num: MonomialSum,
    pub den: MonomialSum,
}

impl ScaleFactor {
    pub fn new(num: MonomialSum, den: MonomialSum) -> Self {
        ScaleFactor { num, den }
    }

    /// The factor `1`.
    pub fn unit() -> Self {
        Self::from(MonomialSum::letter(0, 0))
    }

    /// `(1 - t)/(1 - q)`.
    pub fn t_over_q() -> Self {
        let one = MonomialSum::letter(0, 0);
        ScaleFactor::new(&one - &MonomialSum::letter(0, 1), &one - &MonomialSum::letter(1, 0))
    }

    /// `(1 - q)/(1 - t)`.
    pub fn q_over_t() -> Self {
        let f = Self::t_over_q();
        ScaleFactor::new(f.den, f.num)
    }

    /// Scalar by which `p_r` is multiplied.
    pub fn power_coeff(&self, r: usize) -> Result<QTRational> {
        let n = power_sum_value(&self.num, r);
        let d = power_sum_value(&self.den, r);
        n.checked_div(&d).map_err(|_| Error::Pole(format!("p_{r} of the scaling denominator vanishes")))
    }

    pub fn swap_qt(&self) -> Self {
        ScaleFactor::new(self.num.swap_qt(), self.den.swap_qt())
    }
}

impl From<MonomialSum> for ScaleFactor {
    fn from(s: MonomialSum) -> Self {
        ScaleFactor::new(s, MonomialSum::letter(0, 0))
    }
}

/// `p_r` of a finite signed alphabet; an ε-letter `x` gives `(-x)^r`.
pub fn power_sum_value(s: &MonomialSum, r: usize) -> QTRational {
    let r = r as i32;
    let letters = s.letters().into_iter().map(|l| {
        let sign = if l.eps && r % 2 == 1 { -1 } else { 1 };
        MonomialLetter::new(l.a * r, l.b * r, false, l.mult * sign)
    });
    MonomialSum::from_letters(letters).to_qt()
}

/// `f[X · factor]`, returned in the basis of `f`.
pub fn plethysm_scale(f: &SymFunc, factor: &ScaleFactor) -> Result<SymFunc> {
    let p = convert(f, Basis::P);
    let deg = p.degree().unwrap_or(0);
    let coeffs: Vec<QTRational> = (0..=deg).map(|r| if r == 0 { Ok(QTRational::one()) } else { factor.power_coeff(r) }).collect::<Result<_>>()?;
    let scaled = SymFunc::from_terms(
        Basis::P,
        p.terms.iter().map(|(rho, c)| {
            let mut v = c.clone();
            for &r in rho.parts() {
                v *= &coeffs[r];
            }
            (rho.clone(), v)
        }),
    );
    Ok(convert(&scaled, f.basis))
}

/// Distinct rearrangements of `parts` (padded to `n` with zeros).
pub(crate) fn distinct_permutations(lambda: &Partition, n: usize) -> Vec<Vec<u32>> {
    let mut vals: Vec<u32> = lambda.padded(n).into_iter().map(|v| v as u32).collect();
    vals.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(vals.clone());
        // next lexicographic permutation
        let Some(i) = (0..vals.len().saturating_sub(1)).rev().find(|&i| vals[i] < vals[i + 1]) else { break };
        let j = (i + 1..vals.len()).rev().find(|&j| vals[j] > vals[i]).unwrap();
        vals.swap(i, j);
        vals[i + 1..].reverse();
    }
    out
}

/// Restriction to the variables `x_1, ..., x_n`.
pub fn evaluate(f: &SymFunc, n: usize) -> Polynomial {
    let m = convert(f, Basis::M);
    let mut out = Polynomial::zero(n);
    for (lambda, c) in &m.terms {
        if lambda.len() > n {
            continue;
        }
        for e in distinct_permutations(lambda, n) {
            out.add_term(e, c.clone());
        }
    }
    out
}

/// Coefficients of `z^k` in `f(X + z)` for `k <= degree_cap` (default: the
/// degree of `f`), each in the basis of `f`.
pub fn translate(f: &SymFunc, degree_cap: Option<usize>) -> Vec<(usize, SymFunc)> {
    let m = convert(f, Basis::M);
    let cap = degree_cap.unwrap_or_else(|| m.degree().unwrap_or(0));
    let mut by_k: BTreeMap<usize, SymFunc> = BTreeMap::new();
    for (lambda, c) in &m.terms {
        by_k.entry(0).or_insert_with(|| SymFunc::zero(Basis::M)).add_term(lambda.clone(), c.clone());
        let mut seen = Vec::new();
        for (i, &k) in lambda.parts().iter().enumerate() {
            if seen.contains(&k) || k > cap {
                continue;
            }
            seen.push(k);
            let mut rest = lambda.parts().to_vec();
            rest.remove(i);
            let rest = Partition::from_multiset(rest);
            by_k.entry(k).or_insert_with(|| SymFunc::zero(Basis::M)).add_term(rest, c.clone());
        }
    }
    by_k.into_iter().filter(|(_, g)| !g.is_zero()).map(|(k, g)| (k, convert(&g, f.basis))).collect()
}

/// Element of `Λ ⊗ Λ`, keyed by pairs of partitions in a basis pair.
pub type Tensor = BTreeMap<(Partition, Partition), QTRational>;

/// `Δf` expressed in `basis ⊗ basis`, computed from `Δh_n = Σ h_k ⊗ h_{n-k}`.
pub fn coproduct(f: &SymFunc, basis: Basis) -> Tensor {
    let h = convert(f, Basis::H);
    let mut out: Tensor = BTreeMap::new();
    for (lambda, c) in &h.terms {
        let mut acc: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::from([((Partition::empty(), Partition::empty()), BigInt::one())]);
        for &n in lambda.parts() {
            let mut next: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
            for ((a, b), v) in &acc {
                for k in 0..=n {
                    let key = (
                        combine(a, &Partition::row(k), CombineMode::Union),
                        combine(b, &Partition::row(n - k), CombineMode::Union),
                    );
                    *next.entry(key).or_insert_with(BigInt::zero) += v;
                }
            }
            acc = next;
        }
        for (key, v) in acc {
            let e = out.entry(key).or_insert_with(QTRational::zero);
            *e += &c.mul_ratio(&BigRational::from_integer(v));
        }
    }
    out.retain(|_, v| !v.is_zero());
    tensor_convert(&out, Basis::H, basis)
}

/// `a ⊗ b` with both factors in the basis of `a`.
pub fn tensor_product(a: &SymFunc, b: &SymFunc) -> Tensor {
    let b = convert(b, a.basis);
    let mut out: Tensor = BTreeMap::new();
    for (pa, ca) in &a.terms {
        for (pb, cb) in &b.terms {
            out.insert((pa.clone(), pb.clone()), ca * cb);
        }
    }
    out
}

/// Change basis on both tensor factors.
pub fn tensor_convert(t: &Tensor, from: Basis, to: Basis) -> Tensor {
    if from == to {
        return t.clone();
    }
    let mut cache: BTreeMap<Partition, SymFunc> = BTreeMap::new();
    let mut conv = |p: &Partition| -> SymFunc {
        cache.entry(p.clone()).or_insert_with(|| convert(&SymFunc::basis_element(from, p.clone()), to)).clone()
    };
    let mut out: Tensor = BTreeMap::new();
    for ((a, b), c) in t {
        let fa = conv(a);
        let fb = conv(b);
        for (pa, ca) in &fa.terms {
            for (pb, cb) in &fb.terms {
                let e = out.entry((pa.clone(), pb.clone())).or_insert_with(QTRational::zero);
                *e += &(&(c * ca) * cb);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Check `Σ_i P_i(X) Q_i(Y) = Ω(XY · factor)` through total degree `deg` in
/// each alphabet, comparing power-sum coefficients on both sides.
pub fn kernel_check(basis_p: &[SymFunc], basis_q: &[SymFunc], deg: usize, factor: Option<&ScaleFactor>) -> Result<bool> {
    if basis_p.len() != basis_q.len() {
        return Err(Error::IncompleteBasis(format!("{} P-elements but {} Q-elements", basis_p.len(), basis_q.len())));
    }
    let mut per_degree = vec![0usize; deg + 1];
    let mut lhs: Tensor = BTreeMap::new();
    for (fp, fq) in basis_p.iter().zip(basis_q) {
        if !fp.is_homogeneous() || !fq.is_homogeneous() || fp.is_zero() || fq.is_zero() {
            return Err(Error::IncompleteBasis("kernel bases must be nonzero and homogeneous".into()));
        }
        let d = fp.degree().unwrap();
        if fq.degree() != Some(d) {
            return Err(Error::IncompleteBasis(format!("paired elements of degrees {d} and {:?}", fq.degree())));
        }
        if d > deg {
            continue;
        }
        per_degree[d] += 1;
        let a = convert(fp, Basis::P);
        let b = convert(fq, Basis::P);
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                let e = lhs.entry((pa.clone(), pb.clone())).or_insert_with(QTRational::zero);
                *e += &(ca * cb);
            }
        }
    }
    for (d, &count) in per_degree.iter().enumerate() {
        let want = tables::index(d).parts.len();
        if count != want {
            return Err(Error::IncompleteBasis(format!("degree {d} has {count} elements, expected {want}")));
        }
    }
    lhs.retain(|_, v| !v.is_zero());
    let unit = ScaleFactor::unit();
    let factor = factor.unwrap_or(&unit);
    let mut rhs: Tensor = BTreeMap::new();
    for d in 0..=deg {
        for rho in enumerate(d, None, false) {
            let mut v = QTRational::from_ratio(&BigRational::new(BigInt::one(), z_lambda(&rho)));
            for &r in rho.parts() {
                v *= &factor.power_coeff(r)?;
            }
            if !v.is_zero() {
                rhs.insert((rho.clone(), rho), v);
            }
        }
    }
    Ok(lhs == rhs)
}
