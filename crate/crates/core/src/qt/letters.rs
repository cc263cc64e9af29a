//! Finite signed alphabets of monomials `q^a t^b`, with an ε flag for formal
//! negation, and the multiplicative evaluator Ω on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::ratfunc::QTRational;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// One letter `mult * (ε?) q^a t^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialLetter {
    pub a: i32,
    pub b: i32,
    pub eps: bool,
    pub mult: i64,
}

impl MonomialLetter {
    pub fn new(a: i32, b: i32, eps: bool, mult: i64) -> Self {
        MonomialLetter { a, b, eps, mult }
    }

    /// `q^a t^b` with multiplicity one.
    pub fn plain(a: i32, b: i32) -> Self {
        Self::new(a, b, false, 1)
    }
}

/// A merged multiset of letters, zero multiplicities removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialSum {
    letters: BTreeMap<(i32, i32, bool), i64>,
}

impl MonomialSum {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters<I: IntoIterator<Item = MonomialLetter>>(it: I) -> Self {
        let mut s = Self::empty();
        for l in it {
            s.push(l);
        }
        s
    }

    /// Single plain letter `q^a t^b`.
    pub fn letter(a: i32, b: i32) -> Self {
        Self::from_letters([MonomialLetter::plain(a, b)])
    }

    /// Single ε-letter `ε q^a t^b`.
    pub fn eps_letter(a: i32, b: i32) -> Self {
        Self::from_letters([MonomialLetter::new(a, b, true, 1)])
    }

    pub fn push(&mut self, l: MonomialLetter) {
        if l.mult == 0 {
            return;
        }
        let key = (l.a, l.b, l.eps);
        let e = self.letters.entry(key).or_insert(0);
        *e += l.mult;
        if *e == 0 {
            self.letters.remove(&key);
        }
    }

    pub fn letters(&self) -> Vec<MonomialLetter> {
        self.letters.iter().map(|(&(a, b, eps), &mult)| MonomialLetter { a, b, eps, mult }).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Multiplicity of the letter `(a, b, eps)`, zero if absent.
    pub fn mult_of(&self, a: i32, b: i32, eps: bool) -> i64 {
        self.letters.get(&(a, b, eps)).copied().unwrap_or(0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_letters(self.letters().into_iter().map(|mut l| {
            l.mult *= k;
            l
        }))
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self::from_letters(self.letters().into_iter().map(|l| MonomialLetter { a: l.b, b: l.a, ..l }))
    }

    /// Formal substitution `q -> -q`: letters with odd `q`-exponent flip ε.
    pub fn negate_q(&self) -> Self {
        Self::from_letters(
            self.letters().into_iter().map(|l| MonomialLetter { eps: l.eps ^ (l.a.rem_euclid(2) == 1), ..l }),
        )
    }

    /// Sum of `mult * (±1) q^a t^b` as a Laurent polynomial, returned as a
    /// rational function. ε-letters count with a minus sign.
    pub fn to_qt(&self) -> QTRational {
        let qa = self.letters.keys().map(|k| k.0).min().unwrap_or(0).min(0);
        let tb = self.letters.keys().map(|k| k.1).min().unwrap_or(0).min(0);
        let num = ZPoly::from_terms(self.letters.iter().map(|(&(a, b, eps), &m)| {
            let c = if eps { -m } else { m };
            ((a - qa) as usize, (b - tb) as usize, BigInt::from(c))
        }));
        QTRational::from_parts(num, ZPoly::monomial(BigInt::from(1), (-qa) as usize, (-tb) as usize))
    }
}

impl Add for &MonomialSum {
    type Output = MonomialSum;
    fn add(self, o: &MonomialSum) -> MonomialSum {
        let mut s = self.clone();
        for l in o.letters() {
            s.push(l);
        }
        s
    }
}

impl Neg for &MonomialSum {
    type Output = MonomialSum;
    fn neg(self) -> MonomialSum {
        self.scale(-1)
    }
}

impl Sub for &MonomialSum {
    type Output = MonomialSum;
    fn sub(self, o: &MonomialSum) -> MonomialSum {
        self + &(-o)
    }
}

/// Alphabet product: exponents add, ε flags combine by parity, multiplicities
/// multiply.
impl Mul for &MonomialSum {
    type Output = MonomialSum;
    fn mul(self, o: &MonomialSum) -> MonomialSum {
        let mut s = MonomialSum::empty();
        for x in self.letters() {
            for y in o.letters() {
                s.push(MonomialLetter { a: x.a + y.a, b: x.b + y.b, eps: x.eps ^ y.eps, mult: x.mult * y.mult });
            }
        }
        s
    }
}

impl fmt::Display for MonomialSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .letters()
            .iter()
            .map(|l| format!("{}{}q^{}t^{}", l.mult, if l.eps { "ε" } else { "" }, l.a, l.b))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `1 - x` (or `1 + x` for an ε-letter) with `x = q^a t^b`, cleared of
/// negative exponents: returns `(numerator, denominator monomial)`.
fn binomial_factor(a: i32, b: i32, eps: bool) -> (ZPoly, ZPoly) {
    let sa = (-a).max(0) as usize;
    let sb = (-b).max(0) as usize;
    let one = ZPoly::monomial(BigInt::from(1), sa, sb);
    let x = ZPoly::monomial(BigInt::from(if eps { 1 } else { -1 }), (a + sa as i32) as usize, (b + sb as i32) as usize);
    (one.add(&x), ZPoly::monomial(BigInt::from(1), sa, sb))
}

/// Ω of a finite signed alphabet: `1/(1 - x)^m` per plain letter and
/// `1/(1 + x)^m` per ε-letter.
pub fn omega_eval(s: &MonomialSum) -> Result<QTRational> {
    for l in s.letters() {
        if l.a == 0 && l.b == 0 && !l.eps && l.mult > 0 {
            return Err(Error::Pole(format!("Ω has a pole at the unit letter in {s}")));
        }
    }
    let mut num = ZPoly::one();
    let mut den = ZPoly::one();
    for l in s.letters() {
        if l.a == 0 && l.b == 0 && !l.eps {
            // (1 - 1)^{|m|} in the numerator
            return Ok(QTRational::zero());
        }
        let (f, mono) = binomial_factor(l.a, l.b, l.eps);
        let e = l.mult.unsigned_abs() as u32;
        let fp = f.pow(e);
        let mp = mono.pow(e);
        if l.mult > 0 {
            den = den.mul(&fp);
            num = num.mul(&mp);
        } else {
            num = num.mul(&fp);
            den = den.mul(&mp);
        }
    }
    Ok(QTRational::from_parts(num, den))
}

/// `(x; y)_n = prod_{k<n} (1 - x y^k)` for monomials `x = base` and
/// `y = q^c t^d`; an ε flag on `base` gives `(-x; y)_n`. The multiplicity of
/// `base` is ignored.
pub fn pochhammer(base: MonomialLetter, nome: (i32, i32), n: usize) -> Result<QTRational> {
    let s = MonomialSum::from_letters((0..n as i32).map(|k| {
        MonomialLetter::new(base.a + k * nome.0, base.b + k * nome.1, base.eps, -1)
    }));
    omega_eval(&s)
}

/// `(x; q)_n` with nome `q`.
pub fn q_pochhammer(base: MonomialLetter, n: usize) -> Result<QTRational> {
    pochhammer(base, (1, 0), n)
}
