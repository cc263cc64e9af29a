//! Delta series, Jabotinsky matrices, and the determinantal bases built from
//! generalized complete symmetric functions.
//!
//! Every function here takes the *seed* `φ` of a basis, the series in
//! `Π_x 1/(1 - φ(z) x) = Σ_n r_n(X) z^n`. The Stirling-type bases are
//! usually named after the reverse series: the basis "of `e^z - 1`" has
//! seed `log(1 + z)`. [`DeltaSeries::seed_of`] performs that translation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{combine, enumerate, CombineMode, Partition};
use crate::qt::QTRational;
use crate::symmetric::{convert, coproduct, det_h, lr_coefficients, tensor_product, z_lambda, Basis, HExp, SymFunc, Tensor};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 12;

/// Truncated power series `Σ_{n=1}^{N} a_n z^n` with zero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSeries {
    // coeffs[i] is the coefficient of z^{i+1}
    coeffs: Vec<BigRational>,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

// Dense truncated series indexed by degree, constant term included.
fn mul_trunc(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl DeltaSeries {
    /// Series with the given coefficients of `z, z^2, ...`; the order is the
    /// number of coefficients.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        DeltaSeries { coeffs }
    }

    /// Coefficients padded with zeros up to `order`.
    pub fn with_order(mut coeffs: Vec<BigRational>, order: usize) -> Result<Self> {
        if coeffs.len() > order {
            return Err(Error::OutOfRange(format!("{} coefficients exceed order {order}", coeffs.len())));
        }
        coeffs.resize(order, BigRational::zero());
        Ok(DeltaSeries { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    fn from_fn(order: usize, f: impl Fn(usize) -> BigRational) -> Self {
        Self::new((1..=order).map(f).collect())
    }

    /// `z`.
    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 1 { BigRational::one() } else { BigRational::zero() })
    }

    /// `e^z - 1`.
    pub fn exp_minus_one(order: usize) -> Self {
        Self::from_fn(order, |n| BigRational::new(BigInt::one(), factorial(n)))
    }

    /// `1 - e^{-z}`.
    pub fn one_minus_exp_neg(order: usize) -> Self {
        Self::from_fn(order, |n| {
            let r = BigRational::new(BigInt::one(), factorial(n));
            if n % 2 == 0 {
                -r
            } else {
                r
            }
        })
    }

    /// `z / (1 - z)`.
    pub fn mobius(order: usize) -> Self {
        Self::from_fn(order, |_| BigRational::one())
    }

    /// `z / (1 + z)`.
    pub fn mobius_inv(order: usize) -> Self {
        Self::from_fn(order, |n| if n % 2 == 0 { -BigRational::one() } else { BigRational::one() })
    }

    /// `log(1 + z)`.
    pub fn log_one_plus(order: usize) -> Self {
        Self::from_fn(order, |n| ratio(if n % 2 == 0 { -1 } else { 1 }, n as i64))
    }

    pub const NAMES: [&'static str; 6] = ["z", "exp-1", "neg-exp", "mobius", "mobius-inv", "log"];

    /// Look up one of [`Self::NAMES`].
    pub fn named(name: &str, order: usize) -> Result<Self> {
        Ok(match name {
            "z" | "identity" => Self::identity(order),
            "exp-1" => Self::exp_minus_one(order),
            "neg-exp" => Self::one_minus_exp_neg(order),
            "mobius" => Self::mobius(order),
            "mobius-inv" => Self::mobius_inv(order),
            "log" => Self::log_one_plus(order),
            _ => return Err(Error::Parse(format!("unknown series {name:?}; expected one of {}", Self::NAMES.join(", ")))),
        })
    }

    /// Seed of the basis named after `label`, i.e. its compositional inverse.
    pub fn seed_of(label: &DeltaSeries) -> Result<Self> {
        label.revert()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `[z^n]`, zero outside `1..=order`.
    pub fn coeff(&self, n: usize) -> BigRational {
        if n == 0 {
            BigRational::zero()
        } else {
            self.coeffs.get(n - 1).cloned().unwrap_or_else(BigRational::zero)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Whether the linear coefficient is invertible.
    pub fn is_delta(&self) -> bool {
        !self.coeff(1).is_zero()
    }

    /// `f(-z)`.
    pub fn reflect(&self) -> Self {
        Self::from_fn(self.order(), |n| if n % 2 == 0 { self.coeff(n) } else { -self.coeff(n) })
    }

    /// `-f(-z)`.
    pub fn neg_reflect(&self) -> Self {
        Self::from_fn(self.order(), |n| if n % 2 == 0 { -self.coeff(n) } else { self.coeff(n) })
    }

    fn dense(&self) -> Vec<BigRational> {
        std::iter::once(BigRational::zero()).chain(self.coeffs.iter().cloned()).collect()
    }

    /// `f^0, f^1, ..., f^kmax` as dense series through the order.
    pub(crate) fn powers(&self, kmax: usize) -> Vec<Vec<BigRational>> {
        let n = self.order();
        let d = self.dense();
        let mut one = vec![BigRational::zero(); n + 1];
        one[0] = BigRational::one();
        let mut out = vec![one];
        for _ in 0..kmax {
            let next = mul_trunc(out.last().unwrap(), &d, n);
            out.push(next);
        }
        out
    }

    /// `self(g(z))` truncated at the common order.
    pub fn compose(&self, g: &DeltaSeries) -> Result<Self> {
        if self.order() != g.order() {
            return Err(Error::SizeMismatch(self.order(), g.order()));
        }
        let n = self.order();
        let pw = g.powers(n);
        let mut out = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            let a = self.coeff(k);
            if a.is_zero() {
                continue;
            }
            for (m, c) in pw[k].iter().enumerate() {
                out[m] += &a * c;
            }
        }
        Ok(Self::new(out.split_off(1)))
    }

    /// Compositional inverse, solved one coefficient at a time.
    pub fn revert(&self) -> Result<Self> {
        if !self.is_delta() {
            return Err(Error::NonInvertible);
        }
        let n = self.order();
        let a1 = self.coeff(1);
        let mut g = Self::new(vec![BigRational::zero(); n]);
        g.coeffs[0] = a1.recip();
        for m in 2..=n {
            // with g_m still zero, [z^m] f(g) collects everything except a1 g_m
            let known = self.compose(&g)?.coeff(m);
            g.coeffs[m - 1] = -known / &a1;
        }
        Ok(g)
    }
}

impl fmt::Display for DeltaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = i + 1;
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if n == 1 {
                f.write_str("z")?;
            } else {
                write!(f, "z^{n}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for DeltaSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson { order: self.order(), coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DeltaSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SeriesJson::deserialize(d)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| BigRational::from_str(s.trim()).map_err(|e| de::Error::custom(format!("bad coefficient {s:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        DeltaSeries::with_order(coeffs, j.order).map_err(de::Error::custom)
    }
}

/// Lower-triangular `α_{nk} = [y^n] f(y)^k`, `1 ≤ k ≤ n ≤ N`.
///
/// With this orientation `jabotinsky(f) * jabotinsky(g) = jabotinsky(g ∘ f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JabotinskyMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl JabotinskyMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry `(n, k)`, 1-based.
    pub fn get(&self, n: usize, k: usize) -> &BigRational {
        &self.entries[n - 1][k - 1]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn mul(&self, o: &JabotinskyMatrix) -> Result<JabotinskyMatrix> {
        let n = self.size();
        if o.size() != n {
            return Err(Error::SizeMismatch(n, o.size()));
        }
        let entries = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &self.entries[i][k] * &o.entries[k][j]).sum()).collect())
            .collect();
        Ok(JabotinskyMatrix { entries })
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() }))
    }
}

pub fn jabotinsky(f: &DeltaSeries) -> JabotinskyMatrix {
    let n = f.order();
    let pw = f.powers(n);
    let entries = (1..=n).map(|row| (1..=n).map(|k| pw[k][row].clone()).collect()).collect();
    JabotinskyMatrix { entries }
}

/// Matrix of the umbral operator `U` of the seed `φ` on the basis
/// `x^n/n!`, `0 ≤ n ≤ N`: column `n` holds `[y^n] φ(y)^k` in row `k`.
pub fn umbral_operator(f: &DeltaSeries) -> Vec<Vec<BigRational>> {
    let n = f.order();
    let pw = f.powers(n);
    (0..=n).map(|k| (0..=n).map(|m| pw[k][m].clone()).collect()).collect()
}

/// Check `D∘U = U∘φ(D)` and `L∘U = L` on `x^n/n!` for `n ≤ N`, where `D` is
/// differentiation and `L` evaluation at zero.
pub fn umbral_characterization_holds(f: &DeltaSeries) -> bool {
    let n = f.order();
    let u = umbral_operator(f);
    // L∘U: constant terms
    if !(0..=n).all(|m| if m == 0 { u[0][m].is_one() } else { u[0][m].is_zero() }) {
        return false;
    }
    for col in 0..=n {
        for row in 0..n {
            let lhs = &u[row + 1][col];
            let rhs: BigRational = (1..=col).map(|j| f.coeff(j) * &u[row][col - j]).sum();
            if *lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn check_degree(f: &DeltaSeries, n: usize) -> Result<()> {
    if n > f.order() {
        return Err(Error::OutOfRange(format!("degree {n} exceeds series order {}", f.order())));
    }
    Ok(())
}

fn to_qt(r: &BigRational) -> QTRational {
    QTRational::from_ratio(r)
}

// r_0, ..., r_upto as h-expansions.
fn generator_exps(f: &DeltaSeries, upto: usize) -> Vec<HExp<QTRational>> {
    let pw = f.powers(upto);
    (0..=upto)
        .map(|n| {
            let mut e = BTreeMap::new();
            if n == 0 {
                e.insert(Partition::empty(), QTRational::one());
            }
            for (k, p) in pw.iter().enumerate().skip(1) {
                if k <= n && !p[n].is_zero() {
                    e.insert(Partition::row(k), to_qt(&p[n]));
                }
            }
            e
        })
        .collect()
}

/// `r_n = Σ_k [z^n] φ(z)^k h_k`, in the `h` basis.
pub fn generalized_h(f: &DeltaSeries, n: usize) -> Result<SymFunc> {
    check_degree(f, n)?;
    Ok(SymFunc::from_terms(Basis::H, generator_exps(f, n).pop().unwrap()))
}

/// `c_n = Σ_k [z^n] (-φ(-z))^k e_k`, in the `e` basis.
pub fn generalized_e(f: &DeltaSeries, n: usize) -> Result<SymFunc> {
    check_degree(f, n)?;
    Ok(SymFunc::from_terms(Basis::E, generator_exps(&f.neg_reflect(), n).pop().unwrap()))
}

fn toeplitz_det(gens: &[HExp<QTRational>], lambda: &Partition, cap: Option<usize>) -> HExp<QTRational> {
    let l = lambda.len();
    let m: Vec<Vec<HExp<QTRational>>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = lambda.part(i) as i64 + j as i64 - i as i64;
                    if k < 0 {
                        BTreeMap::new()
                    } else {
                        gens[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    det_h(&m, cap)
}

/// `det(r_{λ_i + j - i})`, in the `h` basis.
pub fn lr_basis(f: &DeltaSeries, lambda: &Partition) -> Result<SymFunc> {
    check_degree(f, lambda.size())?;
    let gens = generator_exps(f, lambda.size());
    Ok(SymFunc::from_terms(Basis::H, toeplitz_det(&gens, lambda, None)))
}

/// `det(c_{λ'_i + j - i})`, in the `e` basis. Equal to [`lr_basis`].
pub fn lr_basis_by_columns(f: &DeltaSeries, lambda: &Partition) -> Result<SymFunc> {
    check_degree(f, lambda.size())?;
    let gens = generator_exps(&f.neg_reflect(), lambda.size());
    Ok(SymFunc::from_terms(Basis::E, toeplitz_det(&gens, &lambda.conjugate(), None)))
}

/// Structure constants `c_{μν}` in `ΔP_λ = Σ c_{μν} P_μ ⊗ P_ν` for the
/// basis [`lr_basis`].
///
/// `P_μ` is `s_μ` times a nonzero constant plus terms of lower degree, so the
/// constants are peeled off from the top total degree down.
pub fn coproduct_constants(f: &DeltaSeries, lambda: &Partition) -> Result<BTreeMap<(Partition, Partition), BigRational>> {
    let mut expansions: BTreeMap<Partition, SymFunc> = BTreeMap::new();
    let mut schur = |mu: &Partition| -> Result<SymFunc> {
        if let Some(e) = expansions.get(mu) {
            return Ok(e.clone());
        }
        let e = convert(&lr_basis(f, mu)?, Basis::S);
        expansions.insert(mu.clone(), e.clone());
        Ok(e)
    };
    let mut rest: Tensor = coproduct(&schur(lambda)?, Basis::S);
    let mut out = BTreeMap::new();
    while let Some(key) = rest.keys().max_by_key(|(a, b)| a.size() + b.size()).cloned() {
        let (pm, pn) = (schur(&key.0)?, schur(&key.1)?);
        let lead = pm.coeff(&key.0) * pn.coeff(&key.1);
        let c = rest[&key].checked_div(&lead)?;
        for (k, v) in tensor_product(&pm, &pn) {
            let e = rest.entry(k).or_insert_with(QTRational::zero);
            *e -= &(&c * &v);
        }
        rest.retain(|_, v| !v.is_zero());
        let c = c.as_rational().ok_or_else(|| Error::Internal(format!("non-rational constant at {key:?}")))?;
        out.insert(key, c);
    }
    Ok(out)
}

/// Whether the coproduct constants of `lr_basis(f, λ)` are the
/// Littlewood-Richardson coefficients `c^λ_{μν}`.
pub fn lr_property_holds(f: &DeltaSeries, lambda: &Partition) -> Result<bool> {
    let want: BTreeMap<(Partition, Partition), BigRational> =
        lr_coefficients(lambda).into_iter().map(|(k, v)| (k, BigRational::from_integer(v))).collect();
    Ok(coproduct_constants(f, lambda)? == want)
}

/// `Q_λ = det(ρ_{λ_i + j - i})` truncated to degrees `≤ deg`, in the `p`
/// basis, where `Π_y 1/(1 - z g(y)) = Σ ρ_n z^n` and `g` is the reverse of
/// the seed. Pairs to `δ_{λμ}` with [`lr_basis`] under the Hall product.
pub fn dual_basis(f: &DeltaSeries, lambda: &Partition, deg: usize) -> Result<SymFunc> {
    if lambda.size() > deg {
        return Err(Error::OutOfRange(format!("|λ| = {} exceeds degree {deg}", lambda.size())));
    }
    check_degree(f, deg)?;
    let g = f.revert()?;
    let pw = g.powers(deg);
    // p_r[g(Y)] = Σ_m [y^m] g^r p_m
    let plethysm: Vec<HExp<QTRational>> = (0..=deg)
        .map(|r| {
            if r == 0 {
                return BTreeMap::new();
            }
            (r..=deg).filter(|&m| !pw[r][m].is_zero()).map(|m| (Partition::row(m), to_qt(&pw[r][m]))).collect()
        })
        .collect();
    // ρ_n = h_n[g(Y)] = Σ_{μ ⊢ n} Π p_{μ_i}[g(Y)] / z_μ
    let rho: Vec<HExp<QTRational>> = (0..=deg)
        .map(|n| {
            let mut acc: HExp<QTRational> = BTreeMap::new();
            for mu in enumerate(n, None, false) {
                let mut term: HExp<QTRational> = BTreeMap::from([(Partition::empty(), to_qt(&BigRational::new(BigInt::one(), z_lambda(&mu))))]);
                for &r in mu.parts() {
                    let mut next: HExp<QTRational> = BTreeMap::new();
                    for (a, ca) in &term {
                        for (b, cb) in &plethysm[r] {
                            if a.size() + b.size() <= deg {
                                let key = combine(a, b, CombineMode::Union);
                                let e = next.entry(key).or_insert_with(QTRational::zero);
                                *e += &(ca * cb);
                            }
                        }
                    }
                    next.retain(|_, v| !v.is_zero());
                    term = next;
                }
                for (k, v) in term {
                    let e = acc.entry(k).or_insert_with(QTRational::zero);
                    *e += &v;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            acc
        })
        .collect();
    Ok(SymFunc::from_terms(Basis::P, toeplitz_det(&rho, lambda, Some(deg))))
}

/// Coefficients of `s_μ` in the basis elements `P_λ`, for all partitions of
/// sizes `1..=deg`, rows and columns in the order `(1); (2), (1,1); (3), ...`
/// with each size listed from the largest partition down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    index: Vec<Partition>,
    entries: Vec<Vec<BigRational>>,
}

impl TransitionMatrix {
    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    fn pos(&self, p: &Partition) -> Option<usize> {
        self.index.iter().position(|x| x == p)
    }

    /// Entry at row `mu`, column `lambda`; zero outside the index.
    pub fn get(&self, mu: &Partition, lambda: &Partition) -> BigRational {
        match (self.pos(mu), self.pos(lambda)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigRational::zero(),
        }
    }

    pub fn mul(&self, o: &TransitionMatrix) -> Result<TransitionMatrix> {
        if self.index != o.index {
            return Err(Error::SizeMismatch(self.index.len(), o.index.len()));
        }
        let n = self.index.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &self.entries[i][k] * &o.entries[k][j]).sum()).collect())
            .collect();
        Ok(TransitionMatrix { index: self.index.clone(), entries })
    }
}

pub fn transition_matrix(f: &DeltaSeries, deg: usize) -> Result<TransitionMatrix> {
    check_degree(f, deg)?;
    let index: Vec<Partition> = (1..=deg).flat_map(|n| enumerate(n, None, false)).collect();
    let gens = generator_exps(f, deg);
    let n = index.len();
    let mut entries = vec![vec![BigRational::zero(); n]; n];
    for (j, lambda) in index.iter().enumerate() {
        let p = SymFunc::from_terms(Basis::H, toeplitz_det(&gens, lambda, None));
        let s = convert(&p, Basis::S);
        for (mu, c) in s.terms() {
            if let Some(i) = index.iter().position(|x| x == mu) {
                entries[i][j] = c.as_rational().expect("rational seed gives rational entries");
            }
        }
    }
    Ok(TransitionMatrix { index, entries })
}

/// Entries at one-row partitions, `(k, n) ↦ M[(k),(n)] · n!/k!`, for
/// `1 ≤ k, n ≤ deg`.
pub fn stirling_lah_extract(m: &TransitionMatrix, deg: usize) -> Result<Vec<Vec<BigInt>>> {
    (1..=deg)
        .map(|k| {
            (1..=deg)
                .map(|n| {
                    let v = m.get(&Partition::row(k), &Partition::row(n)) * BigRational::new(factorial(n), factorial(k));
                    if v.is_integer() {
                        Ok(v.to_integer())
                    } else {
                        Err(Error::Internal(format!("non-integer entry {v} at ({k},{n})")))
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
#[path = "umbral_tests.rs"]
mod tests;
