//! Polynomials in `x_1, ..., x_n` with coefficients in `Q(q,t)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::qt::QTRational;

/// Sparse polynomial keyed by exponent vectors of fixed length `nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, QTRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], QTRational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: QTRational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// The variable `x_i`, 0-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, QTRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, QTRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> QTRational {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: QTRational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        self.add(&o.scale(&QTRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QTRational) -> Polynomial {
        let mut r = Polynomial::zero(self.nvars);
        for (e, v) in &self.terms {
            r.add_term(e.clone(), v * c);
        }
        r
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        let mut r = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                r.add_term(e, ca * cb);
            }
        }
        r
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Drop terms of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() <= d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Product truncated at total degree `d`.
    pub fn mul_truncated(&self, o: &Polynomial, d: u32) -> Polynomial {
        let mut r = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            if da > d {
                continue;
            }
            for (eb, cb) in &o.terms {
                if da + eb.iter().sum::<u32>() > d {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                r.add_term(e, ca * cb);
            }
        }
        r
    }

    /// Multiply the coefficient of each monomial by `c^{e_i}`, i.e. substitute
    /// `x_i -> c x_i`.
    pub fn scale_var(&self, i: usize, c: &QTRational) -> Polynomial {
        let mut powers: Vec<QTRational> = vec![QTRational::one()];
        let mut r = Polynomial::zero(self.nvars);
        for (e, v) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * c;
                powers.push(next);
            }
            r.add_term(e.clone(), v * &powers[k]);
        }
        r
    }

    /// Exchange variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Polynomial {
        let mut r = Polynomial::zero(self.nvars);
        for (e, v) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            r.add_term(e, v.clone());
        }
        r
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| &self.swap_vars(i, i + 1) == self)
    }

    /// Exact quotient by `x_i - x_j`, or `None` when it does not divide.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Option<Polynomial> {
        // synthetic division in x_i over the other variables
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().filter(|(e, _)| e[i] > 0).max_by_key(|(e, _)| e[i]).map(|(e, c)| (e.clone(), c.clone())) {
            // leading x_i-power term: c x^e = c x^{e - e_i} (x_i - x_j) + c x^{e - e_i + e_j}
            let mut qe = e.clone();
            qe[i] -= 1;
            quot.add_term(qe.clone(), c.clone());
            rem.add_term(e, -&c);
            let mut ne = qe;
            ne[j] += 1;
            rem.add_term(ne, c);
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
