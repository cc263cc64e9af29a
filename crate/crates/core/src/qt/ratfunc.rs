use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zpoly::{UPoly, ZPoly};
use crate::error::{Error, Result};

/// Sparse polynomial in `q` and `t` with rational coefficients, keyed by
/// `(deg_q, deg_t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl QTPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn monomial(c: BigRational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in it {
            p.add_term(c, i, j);
        }
        p
    }

    pub fn add_term(&mut self, c: BigRational, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Split into an integer polynomial and a positive common denominator.
    fn to_zpoly(&self) -> (ZPoly, BigInt) {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let z = ZPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            (i as usize, j as usize, c.numer() * (&l / c.denom()))
        }));
        (z, l)
    }

    fn from_zpoly(z: &ZPoly) -> Self {
        Self::from_terms(
            z.terms()
                .map(|(i, j, c)| ((i as u32, j as u32), BigRational::from_integer(c.clone()))),
        )
    }
}

/// Element of the field `Q(q,t)` kept in canonical reduced form.
///
/// Numerator and denominator have integer coefficients, no common factor
/// (integers included), and the denominator's lexicographically least
/// `(deg_q, deg_t)` term is positive. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: ZPoly,
    den: ZPoly,
}

/// Field operation selector for [`qt_combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic on canonical rational functions.
pub fn qt_combine(op: QtOp, a: &QTRational, b: &QTRational) -> Result<QTRational> {
    Ok(match op {
        QtOp::Add => a + b,
        QtOp::Sub => a - b,
        QtOp::Mul => a * b,
        QtOp::Div => a.checked_div(b)?,
    })
}

/// Exact substitution `q = q0`, `t = t0`.
pub fn qt_eval(a: &QTRational, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
    a.eval(q0, t0)
}

impl QTRational {
    pub fn zero() -> Self {
        QTRational { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        QTRational { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        QTRational { num: ZPoly::constant(n.into()), den: ZPoly::one() }
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        QTRational {
            num: ZPoly::constant(r.numer().clone()),
            den: ZPoly::constant(r.denom().clone()),
        }
    }

    /// `c * q^i * t^j`.
    pub fn monomial<T: Into<BigInt>>(c: T, i: u32, j: u32) -> Self {
        QTRational { num: ZPoly::monomial(c.into(), i as usize, j as usize), den: ZPoly::one() }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_poly(p: &QTPoly) -> Self {
        let (z, l) = p.to_zpoly();
        Self::from_parts(z, ZPoly::constant(l))
    }

    /// Build `num / den`, reducing to canonical form.
    pub fn new(num: &QTPoly, den: &QTPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (n, ln) = num.to_zpoly();
        let (d, ld) = den.to_zpoly();
        Ok(Self::from_parts(n.scale_int(&ld), d.scale_int(&ln)))
    }

    /// Reduce an integer fraction; `den` must be nonzero.
    pub(crate) fn from_parts(num: ZPoly, den: ZPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let g = ZPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalized(num, den)
    }

    /// Fix integer content and sign of an already coprime pair.
    fn normalized(mut num: ZPoly, mut den: ZPoly) -> Self {
        let c = num.int_content().gcd(&den.int_content());
        if !c.is_one() {
            num = num.div_int(&c);
            den = den.div_int(&c);
        }
        if den.lex_least_coeff().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        QTRational { num, den }
    }

    pub fn numerator(&self) -> QTPoly {
        QTPoly::from_zpoly(&self.num)
    }

    pub fn denominator(&self) -> QTPoly {
        QTPoly::from_zpoly(&self.den)
    }

    pub(crate) fn num_z(&self) -> &ZPoly {
        &self.num
    }

    pub(crate) fn den_z(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(r)` when the value does not depend on `q` or `t`.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Multiply by a rational constant.
    pub fn mul_ratio(&self, r: &BigRational) -> Self {
        if r.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if r.is_one() {
            return self.clone();
        }
        Self::normalized(self.num.scale_int(r.numer()), self.den.scale_int(r.denom()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(Self::normalized(base.num.pow(e), base.den.pow(e)))
    }

    /// Exact value at `q = q0`, `t = t0`.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let d = eval_z(&self.den, q0, t0);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator of {self} vanishes at q={q0}, t={t0}")));
        }
        Ok(eval_z(&self.num, q0, t0) / d)
    }

    /// Substitute `q -> sq * q^a * t^b` and `t -> st * q^c * t^d` with
    /// nonnegative exponents and signs `sq`, `st` (true meaning negative).
    pub fn substitute_monomials(&self, q_to: (bool, u32, u32), t_to: (bool, u32, u32)) -> Self {
        let f = |i: usize, j: usize| {
            let neg = (q_to.0 && i % 2 == 1) ^ (t_to.0 && j % 2 == 1);
            let ni = i * q_to.1 as usize + j * t_to.1 as usize;
            let nj = i * q_to.2 as usize + j * t_to.2 as usize;
            (neg, ni, nj)
        };
        let num = self.num.map_terms(f);
        let den = self.den.map_terms(f);
        if den.is_zero() {
            panic!("monomial substitution annihilated a denominator");
        }
        Self::from_parts(num, den)
    }

    /// Exchange `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        self.substitute_monomials((false, 0, 1), (false, 1, 0))
    }

    /// `(q, t) -> (q^2, t^2)`.
    pub fn square_params(&self) -> Self {
        self.substitute_monomials((false, 2, 0), (false, 0, 2))
    }

    /// `q -> -q`.
    pub fn negate_q(&self) -> Self {
        self.substitute_monomials((true, 1, 0), (false, 0, 1))
    }

    /// `q -> -t`; fails if a denominator vanishes under the substitution.
    pub fn q_to_minus_t(&self) -> Result<Self> {
        let f = |i: usize, j: usize| (i % 2 == 1, 0, i + j);
        let den = self.den.map_terms(f);
        if den.is_zero() {
            return Err(Error::Pole(format!("q = -t is a pole of {self}")));
        }
        Ok(Self::from_parts(self.num.map_terms(f), den))
    }

    /// Substitute arbitrary rational functions for `q` and `t`.
    pub fn substitute(&self, qv: &QTRational, tv: &QTRational) -> Result<Self> {
        let n = subst_z(&self.num, qv, tv);
        let d = subst_z(&self.den, qv, tv);
        n.checked_div(&d).map_err(|_| Error::Pole(format!("substitution into {self}")))
    }

    /// Number of terms in numerator plus denominator; a rough size measure.
    pub fn term_count(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }

    pub(crate) fn den_is_one(&self) -> bool {
        self.den.is_one()
    }
}

fn eval_z(z: &ZPoly, q0: &BigRational, t0: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for row in z.rows().iter().rev() {
        acc *= q0;
        acc += eval_u(row, t0);
    }
    acc
}

fn eval_u(u: &UPoly, t0: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in u.coeffs().iter().rev() {
        acc *= t0;
        acc += BigRational::from_integer(c.clone());
    }
    acc
}

fn subst_z(z: &ZPoly, qv: &QTRational, tv: &QTRational) -> QTRational {
    let mut acc = QTRational::zero();
    for row in z.rows().iter().rev() {
        let mut r = QTRational::zero();
        for c in row.coeffs().iter().rev() {
            r = &(&r * tv) + &QTRational::from_int(c.clone());
        }
        acc = &(&acc * qv) + &r;
    }
    acc
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTRational({self})")
    }
}

impl<'a> Add<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn add(self, o: &QTRational) -> QTRational {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            if self.den.is_one() {
                return QTRational::normalized(n, ZPoly::one());
            }
            return QTRational::from_parts(n, self.den.clone());
        }
        if self.den.is_one() {
            let n = self.num.mul(&o.den).add(&o.num);
            return QTRational::normalized(n, o.den.clone());
        }
        if o.den.is_one() {
            let n = o.num.mul(&self.den).add(&self.num);
            return QTRational::normalized(n, self.den.clone());
        }
        let g = ZPoly::gcd(&self.den, &o.den);
        if g.is_constant() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            if n.is_zero() {
                return QTRational::zero();
            }
            return QTRational::normalized(n, self.den.mul(&o.den));
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let t = self.num.mul(&d1).add(&o.num.mul(&b1));
        if t.is_zero() {
            return QTRational::zero();
        }
        let g2 = ZPoly::gcd(&t, &g);
        let (t, g) = if g2.is_constant() {
            (t, g)
        } else {
            (t.div_exact(&g2).expect("gcd divides"), g.div_exact(&g2).expect("gcd divides"))
        };
        QTRational::normalized(t, b1.mul(&d1).mul(&g))
    }
}

impl<'a> Mul<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn mul(self, o: &QTRational) -> QTRational {
        if self.is_zero() || o.is_zero() {
            return QTRational::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let reduce = |n: &ZPoly, d: &ZPoly| -> (ZPoly, ZPoly) {
            if d.is_one() || n.is_constant() || d.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = ZPoly::gcd(n, d);
            if g.is_constant() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
            }
        };
        let (a, d) = reduce(&self.num, &o.den);
        let (c, b) = reduce(&o.num, &self.den);
        QTRational::normalized(a.mul(&c), b.mul(&d))
    }
}

impl<'a> Sub<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn sub(self, o: &QTRational) -> QTRational {
        self + &(-o)
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QTRational> for QTRational {
            type Output = QTRational;
            fn $m(self, o: QTRational) -> QTRational {
                (&self).$m(&o)
            }
        }
        impl $tr<&QTRational> for QTRational {
            type Output = QTRational;
            fn $m(self, o: &QTRational) -> QTRational {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&QTRational> for QTRational {
    fn add_assign(&mut self, o: &QTRational) {
        *self = &*self + o;
    }
}

impl SubAssign<&QTRational> for QTRational {
    fn sub_assign(&mut self, o: &QTRational) {
        *self = &*self - o;
    }
}

impl MulAssign<&QTRational> for QTRational {
    fn mul_assign(&mut self, o: &QTRational) {
        *self = &*self * o;
    }
}

impl From<i64> for QTRational {
    fn from(n: i64) -> Self {
        QTRational::from_int(n)
    }
}

impl From<BigRational> for QTRational {
    fn from(r: BigRational) -> Self {
        QTRational::from_ratio(&r)
    }
}
