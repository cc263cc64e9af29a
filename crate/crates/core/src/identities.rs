//! Resultant functions `W, V, w, v, Θ, Φ`, the split and residue identities
//! built from them, the box factors `H, H̃, G`, and exact verifiers for the
//! Schur and Kawanaka generating-function identities.
//!
//! Resultant functions are generic over [`Field`], so the same code runs on
//! exact rational sample points and on `Q(q,t)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::macdonald::macdonald_p;
use crate::partitions::{b_stat, enumerate, strip_stats, strips, Box, Partition, StripDirection, StripKind};
use crate::qt::{omega_eval, MonomialLetter, MonomialSum, QTRational};
use crate::symmetric::{evaluate, Basis, Polynomial, SymFunc};

/// The field operations the resultant toolkit needs.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// `None` when `o` is zero.
    fn div(&self, o: &Self) -> Option<Self>;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
}

impl Field for QTRational {
    fn zero() -> Self {
        QTRational::zero()
    }
    fn one() -> Self {
        QTRational::one()
    }
    fn from_i64(n: i64) -> Self {
        QTRational::from_int(n)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        QTRational::is_zero(self)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o).ok()
    }
}

fn pole(what: &str) -> Error {
    Error::Pole(what.to_string())
}

fn divide<F: Field>(a: &F, b: &F, what: &str) -> Result<F> {
    a.div(b).ok_or_else(|| pole(what))
}

/// The six pairwise products over two alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResultantKind {
    /// `Π (x - q y/t)/(x - y)`
    W,
    /// `Π (x - t y/q)/(x - y)`
    V,
    /// `w`: `Π (x - y/t)/(x - y/q)`
    #[serde(rename = "w")]
    LowerW,
    /// `v`: `Π (x - t y)/(x - q y)`
    #[serde(rename = "v")]
    LowerV,
    /// `Θ = v W`
    Theta,
    /// `Φ = V w`
    Phi,
}

impl ResultantKind {
    pub const ALL: [ResultantKind; 6] = [
        ResultantKind::W,
        ResultantKind::V,
        ResultantKind::LowerW,
        ResultantKind::LowerV,
        ResultantKind::Theta,
        ResultantKind::Phi,
    ];
}

impl fmt::Display for ResultantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResultantKind::W => "W",
            ResultantKind::V => "V",
            ResultantKind::LowerW => "w",
            ResultantKind::LowerV => "v",
            ResultantKind::Theta => "Theta",
            ResultantKind::Phi => "Phi",
        })
    }
}

impl FromStr for ResultantKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ResultantKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown resultant function {s:?}")))
    }
}

/// `R(X : c Y)`-type product for one of the six kinds. With `eps_q` the
/// parameter `q` is replaced by `-q`; the letters themselves are untouched.
pub fn resultant_fn<F: Field>(kind: ResultantKind, x: &[F], y: &[F], q: &F, t: &F, eps_q: bool) -> Result<F> {
    let q = if eps_q { q.neg() } else { q.clone() };
    let ratio = |a: &F, b: &F| divide(a, b, "resultant parameter");
    // each factor is x - c y; numerator and denominator scalars per kind
    let one = F::one();
    let (nums, dens): (Vec<F>, Vec<F>) = match kind {
        ResultantKind::W => (vec![ratio(&q, t)?], vec![one]),
        ResultantKind::V => (vec![ratio(t, &q)?], vec![one]),
        ResultantKind::LowerW => (vec![ratio(&one, t)?], vec![ratio(&one, &q)?]),
        ResultantKind::LowerV => (vec![t.clone()], vec![q.clone()]),
        ResultantKind::Theta => (vec![t.clone(), ratio(&q, t)?], vec![q.clone(), one]),
        ResultantKind::Phi => (vec![ratio(t, &q)?, ratio(&one, t)?], vec![one.clone(), ratio(&one, &q)?]),
    };
    let mut num = F::one();
    let mut den = F::one();
    for xi in x {
        for yj in y {
            for c in &nums {
                num = num.mul(&xi.sub(&c.mul(yj)));
            }
            for c in &dens {
                den = den.mul(&xi.sub(&c.mul(yj)));
            }
        }
    }
    divide(&num, &den, &format!("{kind} has a vanishing denominator"))
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn split<F: Clone>(x: &[F], part: &[usize]) -> (Vec<F>, Vec<F>) {
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for (i, v) in x.iter().enumerate() {
        if part.contains(&i) {
            inside.push(v.clone());
        } else {
            outside.push(v.clone());
        }
    }
    (inside, outside)
}

fn scaled<F: Field>(c: &F, x: &[F]) -> Vec<F> {
    x.iter().map(|v| c.mul(v)).collect()
}

fn power<F: Field>(x: &F, k: i32) -> Result<F> {
    let mut acc = F::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc.mul(x);
    }
    if k < 0 {
        divide(&F::one(), &acc, "negative power of zero")
    } else {
        Ok(acc)
    }
}

/// `Σ_{X'+X''=X, |X'|=k} (Φ(X' : X'') - Φ(X'' : X'))`.
pub fn phi_split_sum<F: Field>(x: &[F], k: usize, q: &F, t: &F) -> Result<F> {
    if k == 0 || k >= x.len() {
        return Err(Error::OutOfRange(format!("split size {k} for an alphabet of {} letters", x.len())));
    }
    let mut acc = F::zero();
    for part in subsets(x.len(), k) {
        let (a, b) = split(x, &part);
        let fwd = resultant_fn(ResultantKind::Phi, &a, &b, q, t, false)?;
        let bwd = resultant_fn(ResultantKind::Phi, &b, &a, q, t, false)?;
        acc = acc.add(&fwd.sub(&bwd));
    }
    Ok(acc)
}

/// Whether the split sum of `Φ` vanishes exactly.
pub fn check_phi_split<F: Field>(x: &[F], k: usize, q: &F, t: &F) -> Result<bool> {
    Ok(phi_split_sum(x, k, q, t)?.is_zero())
}

/// `(q;t)_s / (t;t)_s` in any field.
fn weight<F: Field>(s: usize, q: &F, t: &F) -> Result<F> {
    let mut acc = F::one();
    let mut tp = F::one();
    for _ in 0..s {
        let num = F::one().sub(&q.mul(&tp));
        tp = tp.mul(t);
        let den = F::one().sub(&tp);
        acc = divide(&acc.mul(&num), &den, "(t;t)_s vanishes")?;
    }
    Ok(acc)
}

/// The two halves of the residue identity, one pair per `s = 0..=k`:
/// `(q;t)_s/(t;t)_s Σ w(z:X'') V(z:t^{s-1}X'') W(z:t^s X') Φ(X':X'')` and
/// `(q;t)_s/(t;t)_s Σ w(z:X') Φ(X'':X')`, summed over `|X'| = k - s`.
pub fn final_identity_terms<F: Field>(a: &[F], k: usize, z: &F, q: &F, t: &F) -> Result<Vec<(F, F)>> {
    if k > a.len() {
        return Err(Error::OutOfRange(format!("k = {k} exceeds the alphabet size {}", a.len())));
    }
    let zs = [z.clone()];
    let mut out = Vec::with_capacity(k + 1);
    for s in 0..=k {
        let c = weight(s, q, t)?;
        let ts = power(t, s as i32)?;
        let ts1 = power(t, s as i32 - 1)?;
        let mut first = F::zero();
        let mut second = F::zero();
        for part in subsets(a.len(), k - s) {
            let (x1, x2) = split(a, &part);
            let f = resultant_fn(ResultantKind::LowerW, &zs, &x2, q, t, false)?
                .mul(&resultant_fn(ResultantKind::V, &zs, &scaled(&ts1, &x2), q, t, false)?)
                .mul(&resultant_fn(ResultantKind::W, &zs, &scaled(&ts, &x1), q, t, false)?)
                .mul(&resultant_fn(ResultantKind::Phi, &x1, &x2, q, t, false)?);
            let g = resultant_fn(ResultantKind::LowerW, &zs, &x1, q, t, false)?
                .mul(&resultant_fn(ResultantKind::Phi, &x2, &x1, q, t, false)?);
            first = first.add(&f);
            second = second.add(&g);
        }
        out.push((c.mul(&first), c.mul(&second)));
    }
    Ok(out)
}

/// Whether the residue identity in `z` holds exactly for the alphabet `a`.
pub fn check_final_identity<F: Field>(a: &[F], k: usize, z: &F, q: &F, t: &F) -> Result<bool> {
    let mut acc = F::zero();
    for (f, g) in final_identity_terms(a, k, z, q, t)? {
        acc = acc.add(&f.sub(&g));
    }
    Ok(acc.is_zero())
}

/// The three box factors of the Kawanaka argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HKind {
    /// `Ω((q - εt) q^a t^l)`
    H,
    /// `Ω((t - εq) q^a t^l)`
    HTilde,
    /// `Ω((t² - q²) q^{2a} t^{2l})`
    G,
}

/// The alphabet whose Ω is the box factor for arm `a` and leg `l`.
pub fn h_alphabet(a: usize, l: usize, kind: HKind) -> MonomialSum {
    let (a, l) = (a as i32, l as i32);
    match kind {
        HKind::H => &MonomialSum::letter(a + 1, l) - &MonomialSum::eps_letter(a, l + 1),
        HKind::HTilde => &MonomialSum::letter(a, l + 1) - &MonomialSum::eps_letter(a + 1, l),
        HKind::G => &MonomialSum::letter(2 * a, 2 * l + 2) - &MonomialSum::letter(2 * a + 2, 2 * l),
    }
}

/// `H_λ(s)`, `H̃_λ(s)` or `G_λ(s)`.
pub fn h_factor(lambda: &Partition, s: Box, kind: HKind) -> Result<QTRational> {
    if !lambda.contains_box(s) {
        return Err(Error::OutOfRange(format!("box ({}, {}) is not in {lambda}", s.row, s.col)));
    }
    let (a, l) = crate::partitions::arm_leg(lambda, s);
    omega_eval(&h_alphabet(a, l, kind))
}

/// `q - εt` and `t - εq`.
fn q_minus_eps_t() -> MonomialSum {
    &MonomialSum::letter(1, 0) - &MonomialSum::eps_letter(0, 1)
}

fn t_minus_eps_q() -> MonomialSum {
    &MonomialSum::letter(0, 1) - &MonomialSum::eps_letter(1, 0)
}

/// `L(λ, μ) = Ω((q - εt) R̃_{λ/μ} + (t - εq) R_{λ/μ})` for a vertical strip `λ/μ`.
pub fn l_term(lambda: &Partition, mu: &Partition) -> Result<QTRational> {
    let st = strip_stats(lambda, mu)?;
    omega_eval(&(&(&q_minus_eps_t() * &st.r_tilde) + &(&t_minus_eps_q() * &st.r)))
}

/// `R(μ, γ) = Ω(-(q - εt) R_{μ/γ} - (t - εq) R̃_{μ/γ})` for a vertical strip `μ/γ`.
pub fn r_term(mu: &Partition, gamma: &Partition) -> Result<QTRational> {
    let st = strip_stats(mu, gamma)?;
    omega_eval(&-&(&(&q_minus_eps_t() * &st.r) + &(&t_minus_eps_q() * &st.r_tilde)))
}

/// `(-q;t)_s / (t;t)_s = Ω((t - εq)(1 + t + ... + t^{s-1}))`.
pub fn minus_q_weight(s: usize) -> QTRational {
    let geo = MonomialSum::from_letters((0..s as i32).map(|i| MonomialLetter::plain(0, i)));
    omega_eval(&(&t_minus_eps_q() * &geo)).expect("no unit letters")
}

/// Both sides of the strip identity
/// `Σ_{λ ∈ Ũ_k(μ)} L(λ, μ) = Σ_s (-q;t)_s/(t;t)_s Σ_{γ ∈ D̃_{k-s}(μ)} R(μ, γ)`.
pub fn lr_proof_sides(mu: &Partition, k: usize) -> Result<(QTRational, QTRational)> {
    let mut lhs = QTRational::zero();
    for lambda in strips(mu, StripKind::Vertical, StripDirection::Add, k) {
        lhs += &l_term(&lambda, mu)?;
    }
    let mut rhs = QTRational::zero();
    for s in 0..=k {
        let mut inner = QTRational::zero();
        for gamma in strips(mu, StripKind::Vertical, StripDirection::Remove, k - s) {
            inner += &r_term(mu, &gamma)?;
        }
        rhs += &(&minus_q_weight(s) * &inner);
    }
    Ok((lhs, rhs))
}

pub fn lr_proof_terms(mu: &Partition, k: usize) -> Result<bool> {
    let (l, r) = lr_proof_sides(mu, k)?;
    Ok(l == r)
}

/// `a_k = q^{μ_k} t^{m-k}` for the `m` nonzero parts of `μ`.
pub fn row_letters(mu: &Partition) -> Vec<QTRational> {
    let m = mu.len();
    mu.parts().iter().enumerate().map(|(i, &p)| QTRational::monomial(1, p as u32, (m - i - 1) as u32)).collect()
}

/// Result of an exact identity check, broken down by total degree in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub n: usize,
    pub deg: usize,
    pub equal: bool,
    pub per_degree: Vec<DegreeCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub d: usize,
    pub equal: bool,
}

fn report(identity: &str, n: usize, deg: usize, lhs: &Polynomial, rhs: &Polynomial) -> IdentityReport {
    let per_degree: Vec<DegreeCheck> = (0..=deg)
        .map(|d| DegreeCheck { d, equal: lhs.homogeneous_part(d as u32) == rhs.homogeneous_part(d as u32) })
        .collect();
    IdentityReport { identity: identity.to_string(), n, deg, equal: per_degree.iter().all(|c| c.equal), per_degree }
}

fn check_args(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("at least one variable is needed".into()));
    }
    Ok(())
}

/// Partitions of size at most `deg` with at most `n` parts.
fn shapes(n: usize, deg: usize) -> impl Iterator<Item = Partition> {
    (0..=deg).flat_map(move |d| enumerate(d, Some(n), false))
}

/// `Σ_{i<j} x_i x_j`-type monomial exponent for a pair.
fn pair_exponent(n: usize, i: usize, j: usize, m: u32) -> Vec<u32> {
    let mut e = vec![0; n];
    e[i] = m;
    e[j] = m;
    e
}

fn single_exponent(n: usize, i: usize, m: u32) -> Vec<u32> {
    let mut e = vec![0; n];
    e[i] = m;
    e
}

/// Truncated product of one-variable and pair series, `Π_i Σ_m a_m x_i^m
/// Π_{i<j} Σ_m b_m (x_i x_j)^m`, through total degree `deg`.
fn product_series(n: usize, deg: usize, single: &[QTRational], pair: &[QTRational]) -> Polynomial {
    let mut acc = Polynomial::one(n);
    for i in 0..n {
        let mut s = Polynomial::zero(n);
        for (m, c) in single.iter().enumerate().take(deg + 1) {
            s.add_term(single_exponent(n, i, m as u32), c.clone());
        }
        acc = acc.mul_truncated(&s, deg as u32);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut s = Polynomial::zero(n);
            for (m, c) in pair.iter().enumerate().take(deg / 2 + 1) {
                s.add_term(pair_exponent(n, i, j, m as u32), c.clone());
            }
            acc = acc.mul_truncated(&s, deg as u32);
        }
    }
    acc
}

/// `Σ_{ℓ(λ) ≤ n} s_λ(x_1..x_n)` and `Π 1/(1 - x_i) Π_{i<j} 1/(1 - x_i x_j)`
/// through total degree `deg`.
pub fn schur_sides(n: usize, deg: usize) -> Result<(Polynomial, Polynomial)> {
    check_args(n)?;
    let mut lhs = Polynomial::zero(n);
    for lambda in shapes(n, deg) {
        lhs = lhs.add(&evaluate(&SymFunc::basis_element(Basis::S, lambda), n));
    }
    let ones = vec![QTRational::one(); deg + 1];
    Ok((lhs, product_series(n, deg, &ones, &ones)))
}

pub fn verify_schur_identity(n: usize, deg: usize) -> Result<IdentityReport> {
    let (l, r) = schur_sides(n, deg)?;
    Ok(report("schur", n, deg, &l, &r))
}

/// `Π_s H_λ(s) = Ω((q - εt) B_λ)`.
pub fn kawanaka_coefficient(lambda: &Partition) -> QTRational {
    omega_eval(&(&q_minus_eps_t() * &b_stat(lambda))).expect("no unit letters")
}

fn kawanaka_lhs(n: usize, deg: usize) -> Polynomial {
    let mut lhs = Polynomial::zero(n);
    for lambda in shapes(n, deg) {
        let c = kawanaka_coefficient(&lambda);
        let p = macdonald_p(&lambda).into_expansion().map_coeffs(|x| x.square_params());
        lhs = lhs.add(&evaluate(&p, n).scale(&c));
    }
    lhs
}

/// `(x; y)_m / (z; y)_m` expanded from its factors, as plain rational functions.
fn pochhammer_ratio(m: usize, num: impl Fn(usize) -> QTRational, den: impl Fn(usize) -> QTRational) -> QTRational {
    let mut acc = QTRational::one();
    for i in 0..m {
        let f = (&QTRational::one() - &num(i)).checked_div(&(&QTRational::one() - &den(i)));
        acc *= &f.expect("denominator factor is a nonconstant binomial");
    }
    acc
}

/// `(-t;q)_m / (q;q)_m`, the coefficient of `x^m` in `(-tx;q)_∞/(x;q)_∞`.
pub fn one_variable_coefficient(m: usize) -> QTRational {
    pochhammer_ratio(m, |i| -&QTRational::monomial(1, i as u32, 1), |i| QTRational::monomial(1, i as u32 + 1, 0))
}

/// `(t²;q²)_m / (q²;q²)_m`, the coefficient of `(x_i x_j)^m` in the pair factor.
pub fn pair_coefficient(m: usize) -> QTRational {
    pochhammer_ratio(m, |i| QTRational::monomial(1, 2 * i as u32, 2), |i| QTRational::monomial(1, 2 * i as u32 + 2, 0))
}

/// Both sides of the Kawanaka identity in `n` variables through total degree
/// `deg`: `Σ_λ Π_s H_λ(s) P_λ(X; q², t²)` and
/// `Π_i (-t x_i;q)_∞/(x_i;q)_∞ Π_{i<j} (t² x_i x_j;q²)_∞/(x_i x_j;q²)_∞`.
pub fn kawanaka_sides(n: usize, deg: usize) -> Result<(Polynomial, Polynomial)> {
    check_args(n)?;
    let single: Vec<QTRational> = (0..=deg).map(one_variable_coefficient).collect();
    let pair: Vec<QTRational> = (0..=deg / 2).map(pair_coefficient).collect();
    Ok((kawanaka_lhs(n, deg), product_series(n, deg, &single, &pair)))
}

pub fn verify_kawanaka(n: usize, deg: usize) -> Result<IdentityReport> {
    let (l, r) = kawanaka_sides(n, deg)?;
    Ok(report("kawanaka", n, deg, &l, &r))
}

fn at_q_minus_t(p: &Polynomial) -> Result<Polynomial> {
    let mut out = Polynomial::zero(p.nvars());
    for (e, c) in p.terms() {
        out.add_term(e.clone(), c.q_to_minus_t()?);
    }
    Ok(out)
}

/// Both Kawanaka sides at `q = -t`, compared with the Schur identity.
pub fn verify_kawanaka_degeneration(n: usize, deg: usize) -> Result<IdentityReport> {
    let (kl, kr) = kawanaka_sides(n, deg)?;
    let (sl, sr) = schur_sides(n, deg)?;
    let kl = at_q_minus_t(&kl)?;
    let kr = at_q_minus_t(&kr)?;
    let mut r = report("kawanaka-at-q=-t", n, deg, &kl, &sl);
    r.equal = r.equal && kr == sr && sl == sr;
    Ok(r)
}

/// Seeded source of small random rationals for exact zero tests.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub const BOUND: i64 = 50;

    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `p/q` with `|p|, |q| <= 50`, nonzero.
    pub fn rational(&mut self) -> BigRational {
        loop {
            let p = self.rng.gen_range(-Self::BOUND..=Self::BOUND);
            let q = self.rng.gen_range(1..=Self::BOUND);
            if p != 0 {
                let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
                return BigRational::new(BigInt::from(p * sign), BigInt::from(q));
            }
        }
    }

    /// `k` pairwise distinct nonzero rationals.
    pub fn distinct(&mut self, k: usize) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = Vec::with_capacity(k);
        while out.len() < k {
            let r = self.rational();
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    /// Run `f` on fresh samples until it gets past every pole, at most
    /// `attempts` times.
    pub fn retry<T>(&mut self, attempts: usize, mut f: impl FnMut(&mut Sampler) -> Result<T>) -> Result<T> {
        let mut last = Error::Pole("no attempts made".into());
        for _ in 0..attempts {
            match f(self) {
                Err(e @ Error::Pole(_)) => last = e,
                other => return other,
            }
        }
        Err(last)
    }
}

/// Number of resampling attempts before a pole is reported.
pub const ATTEMPTS: usize = 20;

/// [`check_phi_split`] at `samples` random points, letters and parameters
/// drawn from `sampler`.
pub fn sample_phi_split(size: usize, k: usize, samples: usize, sampler: &mut Sampler) -> Result<bool> {
    for _ in 0..samples {
        let ok = sampler.retry(ATTEMPTS, |s| {
            let x = s.distinct(size);
            let (q, t) = (s.rational(), s.rational());
            check_phi_split(&x, k, &q, &t)
        })?;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`check_final_identity`] at random points; `z = 1/t` when `z_is_inverse_t`.
pub fn sample_final_identity(size: usize, k: usize, samples: usize, z_is_inverse_t: bool, sampler: &mut Sampler) -> Result<bool> {
    for _ in 0..samples {
        let ok = sampler.retry(ATTEMPTS, |s| {
            let a = s.distinct(size);
            let (q, t) = (s.rational(), s.rational());
            let z = if z_is_inverse_t { t.recip() } else { s.rational() };
            check_final_identity(&a, k, &z, &q, &t)
        })?;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
#[path = "identities_tests.rs"]
mod tests;
