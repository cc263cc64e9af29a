//! Macdonald polynomials `P_λ(X; q, t)` and `Q_λ`, the deformed Hall
//! product, Pieri coefficients and the eigenoperator `D`.
//!
//! `P_λ` is built column by column from the `e_k` Pieri rule, in the
//! monomial basis. The `(q,t)` product is computed in the power-sum basis
//! where it is diagonal.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{
    b_stat, is_horizontal_strip, is_vertical_strip, strip_stats, strips, Partition, StripDirection, StripKind,
};
use crate::qt::{omega_eval, MonomialSum, QTRational};
use crate::symmetric::tables::Cache;
use crate::symmetric::{
    convert, multiply, omega_involution, plethysm_scale, translate, z_lambda, Basis, Polynomial, ScaleFactor, SymFunc,
};

/// `⟨p_ρ, p_ρ⟩_{q,t} = z_ρ Π (1 - q^{ρ_i})/(1 - t^{ρ_i})`.
fn p_weight(rho: &Partition) -> Arc<QTRational> {
    static C: Cache<Partition, QTRational> = Cache::new();
    C.get_or(rho, || {
        let mut w = QTRational::from_ratio(&BigRational::from_integer(z_lambda(rho)));
        for &r in rho.parts() {
            let num = &QTRational::one() - &QTRational::monomial(1, r as u32, 0);
            let den = &QTRational::one() - &QTRational::monomial(1, 0, r as u32);
            w *= &num.checked_div(&den).expect("1 - t^r is nonzero");
        }
        w
    })
}

fn inner_p(a: &SymFunc, b: &SymFunc) -> QTRational {
    debug_assert!(a.basis() == Basis::P && b.basis() == Basis::P);
    let (small, large) = if a.terms().len() <= b.terms().len() { (a, b) } else { (b, a) };
    let mut acc = QTRational::zero();
    for (rho, c) in small.terms() {
        if let Some(d) = large.terms().get(rho) {
            acc += &(&(c * d) * &*p_weight(rho));
        }
    }
    acc
}

/// The deformed Hall product, `⟨p_λ, p_μ⟩_{q,t} = δ_{λμ} z_λ Π (1 - q^{λ_i})/(1 - t^{λ_i})`.
pub fn qt_inner(f: &SymFunc, g: &SymFunc) -> QTRational {
    inner_p(&convert(f, Basis::P), &convert(g, Basis::P))
}

/// `P_λ` in the `m` basis, from the vertical-strip Pieri rule: with `μ` the
/// shape left after deleting the first column of `λ` (length `k`),
/// `P_μ e_k = Σ_ν ψ'_{ν/μ} P_ν` and `λ` is the dominance-largest `ν`.
fn p_in_m(lambda: &Partition) -> Arc<SymFunc> {
    static C: Cache<Partition, SymFunc> = Cache::new();
    C.get_or(lambda, || {
        if lambda.is_empty() {
            return SymFunc::one(Basis::M);
        }
        let k = lambda.len();
        let mu = Partition::from_multiset(lambda.parts().iter().filter(|&&x| x > 1).map(|x| x - 1).collect());
        let e_k = SymFunc::basis_element(Basis::E, Partition::row(k));
        let mut acc = multiply(&p_in_m(&mu), &e_k);
        for nu in strips(&mu, StripKind::Vertical, StripDirection::Add, k) {
            if nu == *lambda {
                continue;
            }
            let c = pieri_coeff(&nu, &mu, PieriKind::PsiPrime).expect("vertical strip");
            acc = acc.sub(&p_in_m(&nu).scale(&c));
        }
        let lead = pieri_coeff(lambda, &mu, PieriKind::PsiPrime).expect("vertical strip");
        acc.scale(&lead.inv().expect("Pieri coefficients are nonzero"))
    })
}

/// `P_λ` with its monomial expansion./// `P_λ` with its monomial expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldP {
    partition: Partition,
    expansion: SymFunc,
}

impl MacdonaldP {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Expansion in the `m` basis.
    pub fn expansion(&self) -> &SymFunc {
        &self.expansion
    }

    pub fn into_expansion(self) -> SymFunc {
        self.expansion
    }
}

pub fn macdonald_p(lambda: &Partition) -> MacdonaldP {
    MacdonaldP { partition: lambda.clone(), expansion: (*p_in_m(lambda)).clone() }
}

/// `⟨P_λ, P_λ⟩_{q,t}`, computed from the power-sum expansion.
pub fn macdonald_norm(lambda: &Partition) -> QTRational {
    static C: Cache<Partition, QTRational> = Cache::new();
    let n = C.get_or(lambda, || {
        let p = convert(&p_in_m(lambda), Basis::P);
        inner_p(&p, &p)
    });
    (*n).clone()
}

/// `Ω((t - q) B_λ) = Π_s (1 - q^{a+1} t^l)/(1 - q^a t^{l+1})`.
pub fn norm_formula(lambda: &Partition) -> QTRational {
    let t_minus_q = &MonomialSum::letter(0, 1) - &MonomialSum::letter(1, 0);
    omega_eval(&(&t_minus_q * &b_stat(lambda))).expect("no unit letters in (t - q) B_λ")
}

/// `Q_λ = P_λ / ⟨P_λ, P_λ⟩_{q,t}`, in the `m` basis.
pub fn macdonald_q(lambda: &Partition) -> SymFunc {
    p_in_m(lambda).scale(&macdonald_norm(lambda).inv().expect("nonzero norm"))
}

/// Coefficients of `f` in the basis `{P_λ}`.
pub fn expand_in_p(f: &SymFunc) -> Result<BTreeMap<Partition, QTRational>> {
    let mut rest = convert(f, Basis::M);
    let mut out = BTreeMap::new();
    // the largest (size, lex) partition is maximal in dominance among the rest
    while let Some((nu, c)) = rest.terms().iter().max_by(|a, b| (a.0.size(), a.0).cmp(&(b.0.size(), b.0))).map(|(p, c)| (p.clone(), c.clone())) {
        rest = rest.sub(&p_in_m(&nu).scale(&c));
        if !rest.coeff(&nu).is_zero() {
            return Err(Error::Internal(format!("leading coefficient of P{nu} is not 1")));
        }
        out.insert(nu, c);
    }
    Ok(out)
}

/// `ω_{q,t} f = ω f[X (1-q)/(1-t)]`.
pub fn omega_qt(f: &SymFunc) -> SymFunc {
    let scaled = plethysm_scale(f, &ScaleFactor::q_over_t()).expect("1 - t^r is nonzero");
    omega_involution(&scaled)
}

/// Exchange `q` and `t` in every coefficient.
pub fn swap_qt(f: &SymFunc) -> SymFunc {
    f.map_coeffs(|c| c.swap_qt())
}

/// `g_n = h_n[X (1-t)/(1-q)]`, the coefficient of `z^n` in `Ω(zX(1-t)/(1-q))`.
pub fn g_gen(n: usize) -> SymFunc {
    let h = if n == 0 { SymFunc::one(Basis::H) } else { SymFunc::basis_element(Basis::H, Partition::row(n)) };
    plethysm_scale(&h, &ScaleFactor::t_over_q()).expect("1 - q^r is nonzero")
}

/// Which of the four Pieri coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieriKind {
    /// `Ω((q - t) C)`, horizontal strips.
    Phi,
    /// `Ω((t - q) C̃)`, horizontal strips.
    Psi,
    /// `Ω((t - q) R)`, vertical strips.
    PhiPrime,
    /// `Ω((q - t) R̃)`, vertical strips.
    PsiPrime,
}

impl PieriKind {
    pub const ALL: [PieriKind; 4] = [PieriKind::Phi, PieriKind::Psi, PieriKind::PhiPrime, PieriKind::PsiPrime];

    pub fn horizontal(self) -> bool {
        matches!(self, PieriKind::Phi | PieriKind::Psi)
    }
}

impl fmt::Display for PieriKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieriKind::Phi => "phi",
            PieriKind::Psi => "psi",
            PieriKind::PhiPrime => "phi-prime",
            PieriKind::PsiPrime => "psi-prime",
        })
    }
}

impl FromStr for PieriKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(PieriKind::Phi),
            "psi" => Ok(PieriKind::Psi),
            "phi-prime" | "phiPrime" | "phi'" => Ok(PieriKind::PhiPrime),
            "psi-prime" | "psiPrime" | "psi'" => Ok(PieriKind::PsiPrime),
            _ => Err(Error::Parse(format!("unknown Pieri kind {s:?}"))),
        }
    }
}

/// Pieri coefficient of the strip `λ/μ`.
pub fn pieri_coeff(lambda: &Partition, mu: &Partition, kind: PieriKind) -> Result<QTRational> {
    let ok = if kind.horizontal() { is_horizontal_strip(lambda, mu) } else { is_vertical_strip(lambda, mu) };
    if !ok {
        let what = if kind.horizontal() { "horizontal" } else { "vertical" };
        return Err(Error::NotAStrip(format!("{lambda}/{mu} is not a {what} strip")));
    }
    let st = strip_stats(lambda, mu)?;
    let q_minus_t = &MonomialSum::letter(1, 0) - &MonomialSum::letter(0, 1);
    let t_minus_q = -&q_minus_t;
    let s = match kind {
        PieriKind::Phi => &q_minus_t * &st.c,
        PieriKind::Psi => &t_minus_q * &st.c_tilde,
        PieriKind::PhiPrime => &t_minus_q * &st.r,
        PieriKind::PsiPrime => &q_minus_t * &st.r_tilde,
    };
    omega_eval(&s)
}

/// Coefficients of `P_μ(X) z^{|λ|-|μ|}` in `P_λ(X + z)`, found by expanding
/// the translated polynomial back in the `P` basis. Ordered by `|λ| - |μ|`.
pub fn recurrence_expand(lambda: &Partition) -> Result<Vec<(Partition, QTRational)>> {
    let p = (*p_in_m(lambda)).clone();
    let mut out = Vec::new();
    for (_, comp) in translate(&p, None) {
        let mut part: Vec<(Partition, QTRational)> = expand_in_p(&comp)?.into_iter().collect();
        part.sort_by(|a, b| b.0.cmp(&a.0));
        out.extend(part);
    }
    Ok(out)
}

/// Coefficients of `P_λ` in `P_μ g_k`.
pub fn pieri_expand(mu: &Partition, k: usize) -> Result<BTreeMap<Partition, QTRational>> {
    expand_in_p(&multiply(&p_in_m(mu), &g_gen(k)))
}

/// `Σ_{i=1}^n q^{λ_i} t^{n-i}`.
pub fn d_eigenvalue(lambda: &Partition, n: usize) -> QTRational {
    let mut acc = QTRational::zero();
    for i in 1..=n {
        acc += &QTRational::monomial(1, lambda.part(i) as u32, (n - i) as u32);
    }
    acc
}

fn linear(n: usize, coeffs: &[(usize, QTRational)]) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for (i, c) in coeffs {
        let mut e = vec![0; n];
        e[*i] = 1;
        p.add_term(e, c.clone());
    }
    p
}

/// `D f = Σ_i Π_{j≠i} (t x_i - x_j)/(x_i - x_j) · f(.., q x_i, ..)` for `f`
/// symmetric in its variables.
pub fn operator_d_apply(f: &Polynomial) -> Result<Polynomial> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.nvars();
    let one = QTRational::one();
    let minus = QTRational::from_int(-1);
    let mut vandermonde = Polynomial::one(n);
    for j in 0..n {
        for k in j + 1..n {
            vandermonde = vandermonde.mul(&linear(n, &[(j, one.clone()), (k, minus.clone())]));
        }
    }
    let mut numerator = Polynomial::zero(n);
    for i in 0..n {
        let mut term = f.scale_var(i, &QTRational::q());
        let mut cofactor = vandermonde.clone();
        for j in (0..n).filter(|&j| j != i) {
            term = term.mul(&linear(n, &[(i, QTRational::t()), (j, minus.clone())]));
            cofactor = cofactor.div_by_difference(i, j).ok_or_else(|| Error::Internal("Vandermonde cofactor".into()))?;
        }
        numerator = numerator.add(&term.mul(&cofactor));
    }
    for j in 0..n {
        for k in j + 1..n {
            numerator = numerator.div_by_difference(j, k).ok_or_else(|| Error::Internal(format!("D f is not divisible by x{} - x{}", j + 1, k + 1)))?;
        }
    }
    Ok(numerator)
}

#[cfg(test)]
#[path = "macdonald_tests.rs"]
mod tests;
