//! Dense integer polynomials: `UPoly` in `t`, and `ZPoly` in `q` with
//! coefficients in `Z[t]`. These carry the numerators and denominators of
//! [`QTRational`](super::QTRational) and supply the gcd used for its canonical
//! form.


use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `t` over `Z`; index `i` holds the coefficient of `t^i`.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct UPoly(Vec<BigInt>);

impl UPoly {
    pub(crate) fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly(c)
    }

    pub(crate) fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub(crate) fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub(crate) fn one() -> Self {
        UPoly(vec![BigInt::one()])
    }

    pub(crate) fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn lc(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// Smallest exponent carrying a nonzero coefficient.
    pub(crate) fn low_degree(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub(crate) fn add(&self, o: &UPoly) -> UPoly {
        let (long, short) = if self.0.len() >= o.0.len() { (self, o) } else { (o, self) };
        let mut c = long.0.clone();
        for (a, b) in c.iter_mut().zip(&short.0) {
            *a += b;
        }
        Self::from_coeffs(c)
    }

    pub(crate) fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub(crate) fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = o.0.get(i);
            c.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => BigInt::zero(),
            });
        }
        Self::from_coeffs(c)
    }

    pub(crate) fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(c)
    }

    pub(crate) fn scale(&self, k: &BigInt) -> UPoly {
        if k.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|c| c * k).collect())
    }

    pub(crate) fn div_int(&self, k: &BigInt) -> UPoly {
        UPoly(self.0.iter().map(|c| c / k).collect())
    }

    /// Multiply by `t^k`.
    pub(crate) fn shift_up(&self, k: usize) -> UPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.0.iter().cloned());
        UPoly(c)
    }

    /// Divide by `t^k`; the caller guarantees divisibility.
    pub(crate) fn shift_down(&self, k: usize) -> UPoly {
        if k == 0 {
            return self.clone();
        }
        UPoly(self.0[k.min(self.0.len())..].to_vec())
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division over `Z[t]`, or `None` if `d` does not divide `self`.
    pub(crate) fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let dd = d.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        if dd == 0 {
            let k = &d.0[0];
            let mut out = Vec::with_capacity(self.0.len());
            for c in &self.0 {
                let (qq, r) = c.div_rem(k);
                if !r.is_zero() {
                    return None;
                }
                out.push(qq);
            }
            return Some(UPoly(out));
        }
        let mut r = self.0.clone();
        let lc = d.lc();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qq, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                if !dc.is_zero() {
                    r[k + j] -= &qq * dc;
                }
            }
            quot[k] = qq;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn prem(a: &UPoly, b: &UPoly) -> UPoly {
        let db = b.degree().unwrap();
        let mut r = a.0.clone();
        let lc = b.lc().clone();
        while r.len() > db && !r.is_empty() {
            let da = r.len() - 1;
            let top = r[da].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (j, bc) in b.0.iter().enumerate() {
                r[da - db + j] -= &top * bc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UPoly(r)
    }

    /// Primitive part with positive leading coefficient.
    pub(crate) fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Greatest common divisor in `Z[t]`, normalized to a positive leading
    /// coefficient.
    pub(crate) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_zero() {
            return b.normalize_sign();
        }
        if b.is_zero() {
            return a.normalize_sign();
        }
        if a == b {
            return a.normalize_sign();
        }
        let ca = a.content();
        let cb = b.content();
        let cg = ca.gcd(&cb);
        if a.is_constant() || b.is_constant() {
            return UPoly::constant(cg);
        }
        let la = a.low_degree().unwrap();
        let lb = b.low_degree().unwrap();
        let shift = la.min(lb);
        let mut x = a.shift_down(la).div_int(&ca);
        let mut y = b.shift_down(lb).div_int(&cb);
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        let g = if let Some(g) = heuristic_ugcd(&x, &y) {
            g
        } else {
            loop {
            if y.is_constant() {
                break UPoly::one();
            }
            if let Some(_) = x.div_exact(&y) {
                break y.primitive();
            }
            let r = UPoly::prem(&x, &y);
            if r.is_zero() {
                break y.primitive();
            }
            x = y;
            y = r.primitive();
            }
        };
        g.scale(&cg).shift_up(shift)
    }

    fn normalize_sign(&self) -> UPoly {
        if !self.is_zero() && self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// Polynomial in `q` with coefficients in `Z[t]`; row `i` is the coefficient
/// of `q^i`. Trailing zero rows are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct ZPoly(Vec<UPoly>);

impl ZPoly {
    pub(crate) fn from_rows(mut rows: Vec<UPoly>) -> Self {
        while rows.last().is_some_and(UPoly::is_zero) {
            rows.pop();
        }
        ZPoly(rows)
    }

    pub(crate) fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub(crate) fn one() -> Self {
        ZPoly(vec![UPoly::one()])
    }

    pub(crate) fn constant(c: BigInt) -> Self {
        Self::from_rows(vec![UPoly::constant(c)])
    }

    pub(crate) fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut rows = vec![UPoly::zero(); i + 1];
        rows[i] = UPoly::constant(c).shift_up(j);
        ZPoly(rows)
    }

    pub(crate) fn from_terms<I: IntoIterator<Item = (usize, usize, BigInt)>>(terms: I) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (i, j, c) in terms {
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            let row = &mut rows[i];
            if row.len() <= j {
                row.resize(j + 1, BigInt::zero());
            }
            row[j] += c;
        }
        Self::from_rows(rows.into_iter().map(UPoly::from_coeffs).collect())
    }

    pub(crate) fn rows(&self) -> &[UPoly] {
        &self.0
    }

    /// Nonzero terms `(deg_q, deg_t, coeff)` in increasing (deg_q, deg_t).
    pub(crate) fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub(crate) fn term_count(&self) -> usize {
        self.terms().count()
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// True when the polynomial is an integer constant (possibly zero).
    pub(crate) fn is_constant(&self) -> bool {
        self.0.is_empty() || (self.0.len() == 1 && self.0[0].is_constant())
    }

    pub(crate) fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.0[0].coeffs()[0].clone())
        } else {
            None
        }
    }

    fn lc_q(&self) -> &UPoly {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// Coefficient of the lexicographically least `(deg_q, deg_t)` term.
    pub(crate) fn lex_least_coeff(&self) -> Option<&BigInt> {
        self.terms().next().map(|(_, _, c)| c)
    }

    pub(crate) fn add(&self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push(match (self.0.get(i), o.0.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => UPoly::zero(),
            });
        }
        Self::from_rows(rows)
    }

    pub(crate) fn neg(&self) -> ZPoly {
        ZPoly(self.0.iter().map(UPoly::neg).collect())
    }

    pub(crate) fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut rows = vec![UPoly::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    rows[i + j] = rows[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_rows(rows)
    }

    pub(crate) fn pow(&self, k: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub(crate) fn scale_int(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly(self.0.iter().map(|r| r.scale(k)).collect())
    }

    pub(crate) fn div_int(&self, k: &BigInt) -> ZPoly {
        ZPoly(self.0.iter().map(|r| r.div_int(k)).collect())
    }

    fn scale_u(&self, k: &UPoly) -> ZPoly {
        Self::from_rows(self.0.iter().map(|r| r.mul(k)).collect())
    }

    fn div_u_exact(&self, k: &UPoly) -> Option<ZPoly> {
        let mut rows = Vec::with_capacity(self.0.len());
        for r in &self.0 {
            rows.push(r.div_exact(k)?);
        }
        Some(Self::from_rows(rows))
    }

    /// Nonnegative gcd of all integer coefficients.
    pub(crate) fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for r in &self.0 {
            for c in r.coeffs() {
                if c.is_zero() {
                    continue;
                }
                g = g.gcd(c);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    /// Content with respect to `q`: gcd in `Z[t]` of all rows.
    fn t_content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for r in &self.0 {
            if r.is_zero() {
                continue;
            }
            g = UPoly::gcd(&g, r);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with respect to `q`, with positive leading coefficient.
    fn primitive_q(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let c = self.t_content();
        let mut p = self.div_u_exact(&c).expect("content divides every row");
        if p.lc_q().lc().is_negative() {
            p = p.neg();
        }
        p
    }

    /// `(min deg_q, min deg_t)` over the nonzero terms.
    pub(crate) fn min_exponents(&self) -> (usize, usize) {
        let qmin = self.0.iter().position(|r| !r.is_zero()).unwrap_or(0);
        let tmin = self.0.iter().filter_map(UPoly::low_degree).min().unwrap_or(0);
        (qmin, tmin)
    }

    /// Multiply by `q^i t^j`.
    pub(crate) fn shift_up(&self, i: usize, j: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut rows = vec![UPoly::zero(); i];
        rows.extend(self.0.iter().map(|r| r.shift_up(j)));
        ZPoly(rows)
    }

    /// Divide by `q^i t^j`; the caller guarantees divisibility.
    pub(crate) fn shift_down(&self, i: usize, j: usize) -> ZPoly {
        Self::from_rows(self.0[i.min(self.0.len())..].iter().map(|r| r.shift_down(j)).collect())
    }

    /// Exact division in `Z[q,t]`, or `None` if `d` does not divide `self`.
    pub(crate) fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if let Some(k) = d.constant_value() {
            let mut rows = Vec::with_capacity(self.0.len());
            for r in &self.0 {
                rows.push(r.div_exact(&UPoly::constant(k.clone()))?);
            }
            return Some(ZPoly(rows));
        }
        let dd = d.0.len() - 1;
        let sd = self.0.len() - 1;
        if sd < dd {
            return None;
        }
        if dd == 0 {
            return self.div_u_exact(&d.0[0]);
        }
        let mut r = self.0.clone();
        let lc = d.lc_q();
        let mut quot = vec![UPoly::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            if r[k + dd].is_zero() {
                continue;
            }
            let c = r[k + dd].div_exact(lc)?;
            for (j, dr) in d.0.iter().enumerate() {
                if !dr.is_zero() {
                    r[k + j] = r[k + j].sub(&c.mul(dr));
                }
            }
            quot[k] = c;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_rows(quot))
    }

    /// Pseudo-remainder in `q`.
    fn prem(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let db = b.0.len() - 1;
        let lc = b.lc_q().clone();
        let mut r = a.0.clone();
        while r.len() > db && !r.is_empty() {
            let da = r.len() - 1;
            let top = r[da].clone();
            for x in r.iter_mut() {
                *x = x.mul(&lc);
            }
            for (j, br) in b.0.iter().enumerate() {
                if !br.is_zero() {
                    r[da - db + j] = r[da - db + j].sub(&top.mul(br));
                }
            }
            while r.last().is_some_and(UPoly::is_zero) {
                r.pop();
            }
        }
        ZPoly(r)
    }

    /// Greatest common divisor in `Z[q,t]`. The sign is unspecified; callers
    /// normalize.
    pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a == b {
            return a.clone();
        }
        if let Some(k) = a.constant_value() {
            return ZPoly::constant(k.gcd(&b.int_content()));
        }
        if let Some(k) = b.constant_value() {
            return ZPoly::constant(k.gcd(&a.int_content()));
        }
        let (qa, ta) = a.min_exponents();
        let (qb, tb) = b.min_exponents();
        let (mq, mt) = (qa.min(qb), ta.min(tb));
        let a = a.shift_down(qa, ta);
        let b = b.shift_down(qb, tb);

        let ca = a.t_content();
        let cb = b.t_content();
        let c = UPoly::gcd(&ca, &cb);
        let pa = a.div_u_exact(&ca).expect("content divides");
        let pb = b.div_u_exact(&cb).expect("content divides");

        let g = if pa.0.len() == 1 || pb.0.len() == 1 {
            ZPoly::one()
        } else if !shares_q_factor(&pa, &pb) {
            ZPoly::one()
        } else if let Some(g) = heuristic_gcd(&pa, &pb) {
            g
        } else {
            let (mut x, mut y) = if pa.0.len() >= pb.0.len() { (pa, pb) } else { (pb, pa) };
            loop {
                if y.0.len() == 1 {
                    break ZPoly::one();
                }
                if x.div_exact(&y).is_some() {
                    break y.primitive_q();
                }
                let r = ZPoly::prem(&x, &y);
                if r.is_zero() {
                    break y.primitive_q();
                }
                x = y;
                y = r.primitive_q();
            }
        };
        g.scale_u(&c).shift_up(mq, mt)
    }

    /// Apply `q^i t^j -> sign * q^(i') t^(j')` term by term.
    pub(crate) fn map_terms<F>(&self, f: F) -> ZPoly
    where
        F: Fn(usize, usize) -> (bool, usize, usize),
    {
        ZPoly::from_terms(self.terms().map(|(i, j, c)| {
            let (neg, ni, nj) = f(i, j);
            (ni, nj, if neg { -c } else { c.clone() })
        }))
    }
}

/// Univariate counterpart of [`heuristic_gcd`] for primitive inputs.
fn heuristic_ugcd(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let bound = |p: &UPoly| p.0.iter().map(|c| c.abs()).max().unwrap_or_default();
    let mut xi = bound(a).min(bound(b)) * 2u32 + 29u32;
    let eval = |p: &UPoly, x: &BigInt| p.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c);
    for _ in 0..4 {
        let g = eval(a, &xi).gcd(&eval(b, &xi));
        let cand = UPoly::from_coeffs(balanced_digits(g, &xi));
        if !cand.is_zero() {
            let cand = cand.primitive();
            if let (Some(ca), Some(cb)) = (a.div_exact(&cand), b.div_exact(&cand)) {
                if ca.is_constant() || cb.is_constant() || !shares_t_factor(&ca, &cb) {
                    return Some(cand);
                }
            }
        }
        xi = xi * 73794u32 / 27011u32;
    }
    None
}

/// False only when `a` and `b` certainly have no common factor of positive
/// degree.
fn shares_t_factor(a: &UPoly, b: &UPoly) -> bool {
    const PRIMES: [u64; 2] = [2_147_483_629, 2_147_483_587];
    for &p in &PRIMES {
        let pb = BigInt::from(p);
        let image = |u: &UPoly| -> Vec<u64> {
            let mut v: Vec<u64> = u.0.iter().map(|c| c.mod_floor(&pb).try_into().unwrap_or(0)).collect();
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        let (ia, ib) = (image(a), image(b));
        if ia.len() != a.0.len() || ib.len() != b.0.len() {
            continue;
        }
        if gcd_mod(ia, ib, p).len() <= 1 {
            return false;
        }
    }
    true
}

fn max_abs(a: &ZPoly) -> BigInt {
    a.terms().map(|(_, _, c)| c.abs()).max().unwrap_or_default()
}

/// Balanced base-`xi` digits of `v`, least significant first.
fn balanced_digits(mut v: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi >> 1u32;
    let mut out = Vec::new();
    while !v.is_zero() {
        let mut d = v.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        v = (v - &d) / xi;
        out.push(d);
    }
    out
}

/// Evaluate at `t = xi1`, then `q = xi2`.
fn kronecker(a: &ZPoly, xi1: &BigInt, xi2: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for row in a.0.iter().rev() {
        let mut r = BigInt::zero();
        for c in row.coeffs().iter().rev() {
            r = r * xi1 + c;
        }
        acc = acc * xi2 + r;
    }
    acc
}

/// Heuristic gcd by evaluation at large integers and balanced digit
/// reconstruction. Inputs are primitive in `q` with a common factor of
/// positive `q`-degree likely. The answer is certified by exact division
/// and a modular coprimality test on the cofactors; `None` means give up.
fn heuristic_gcd(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let mut xi1 = max_abs(a).min(max_abs(b)) * 2u32 + 29u32;
    for _ in 0..4 {
        // bound the q-coefficients after t = xi1
        let row_bound = |p: &ZPoly| {
            p.0.iter()
                .map(|row| row.coeffs().iter().rev().fold(BigInt::zero(), |acc, c| acc * &xi1 + c).abs())
                .max()
                .unwrap_or_default()
        };
        let xi2 = row_bound(a).min(row_bound(b)) * 2u32 + 29u32;
        let g = kronecker(a, &xi1, &xi2).gcd(&kronecker(b, &xi1, &xi2));
        let rows: Vec<UPoly> = balanced_digits(g, &xi2)
            .into_iter()
            .map(|d| UPoly::from_coeffs(balanced_digits(d, &xi1)))
            .collect();
        let cand = ZPoly::from_rows(rows);
        if !cand.is_zero() {
            let cand = cand.primitive_q();
            if let (Some(ca), Some(cb)) = (a.div_exact(&cand), b.div_exact(&cand)) {
                if ca.0.len() == 1 || cb.0.len() == 1 || !shares_q_factor(&ca, &cb) {
                    return Some(cand);
                }
            }
        }
        xi1 = xi1 * 73794u32 / 27011u32;
    }
    None
}

/// Cheap modular test: false only when `a` and `b` certainly have no common
/// factor of positive `q`-degree. Both inputs must be primitive in `q`.
fn shares_q_factor(a: &ZPoly, b: &ZPoly) -> bool {
    const PRIMES: [u64; 2] = [2_147_483_629, 2_147_483_587];
    const POINTS: [u64; 2] = [1_234_567, 7_654_321];
    for (&p, &t0) in PRIMES.iter().zip(POINTS.iter()) {
        let ia = image_mod(a, t0, p);
        let ib = image_mod(b, t0, p);
        // leading coefficients must survive the specialization
        if ia.len() != a.0.len() || ib.len() != b.0.len() {
            continue;
        }
        if gcd_mod(ia, ib, p).len() <= 1 {
            return false;
        }
    }
    true
}

fn image_mod(a: &ZPoly, t0: u64, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = a
        .0
        .iter()
        .map(|row| {
            let mut acc: u64 = 0;
            for c in row.coeffs().iter().rev() {
                let cm = c.mod_floor(&pb);
                let cm: u64 = cm.try_into().unwrap_or(0);
                acc = ((acc as u128 * t0 as u128 + cm as u128) % p as u128) as u64;
            }
            acc
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    while !b.is_empty() {
        // a <- a mod b
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = mulm(*a.last().unwrap(), inv);
            for (j, bc) in b.iter().enumerate() {
                let s = mulm(f, *bc);
                a[shift + j] = (a[shift + j] + p - s) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn zp(terms: &[(usize, usize, i64)]) -> ZPoly {
        ZPoly::from_terms(terms.iter().map(|&(i, j, c)| (i, j, BigInt::from(c))))
    }

    #[test]
    fn univariate_gcd() {
        // (t-1)(t+2) and (t-1)(t-3)
        let a = up(&[-2, 1, 1]);
        let b = up(&[3, -4, 1]);
        assert_eq!(UPoly::gcd(&a, &b), up(&[-1, 1]));
        assert_eq!(UPoly::gcd(&up(&[4, 6]), &up(&[6])), up(&[2]));
        assert_eq!(UPoly::gcd(&up(&[0, 0, 2]), &up(&[0, 4])), up(&[0, 2]));
    }

    #[test]
    fn bivariate_gcd_finds_common_factor() {
        // (1 - q t) * (1 + q) and (1 - q t) * (2 - t)
        let f = zp(&[(0, 0, 1), (1, 1, -1)]);
        let a = f.mul(&zp(&[(0, 0, 1), (1, 0, 1)]));
        let b = f.mul(&zp(&[(0, 0, 2), (0, 1, -1)]));
        let g = ZPoly::gcd(&a, &b);
        assert!(g.div_exact(&f).is_some() && f.div_exact(&g).is_some());
    }

    #[test]
    fn bivariate_gcd_coprime_and_monomial_parts() {
        let a = zp(&[(2, 1, 3)]);
        let b = zp(&[(1, 3, 6), (0, 0, 0)]);
        assert_eq!(ZPoly::gcd(&a, &b), zp(&[(1, 1, 3)]));
        let c = zp(&[(0, 0, 1), (1, 0, -1)]);
        let d = zp(&[(0, 0, 1), (0, 1, -1)]);
        assert!(ZPoly::gcd(&c, &d).is_one() || ZPoly::gcd(&c, &d) == ZPoly::constant(BigInt::from(-1)));
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = zp(&[(0, 0, 1), (2, 0, -1)]); // 1 - q^2
        let b = zp(&[(0, 0, 1), (1, 0, -1)]); // 1 - q
        assert_eq!(a.div_exact(&b), Some(zp(&[(0, 0, 1), (1, 0, 1)])));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(a.div_exact(&zp(&[(0, 0, 2)])), None);
    }
}
