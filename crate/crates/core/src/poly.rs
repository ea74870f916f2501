//! Sparse multivariate Laurent polynomials with exact integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration
//! order is lexicographic in the declared variable order and serialization
//! is deterministic.  Zero coefficients are never stored.

use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl std::fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                    .collect();
                if mono.is_empty() {
                    format!("{}", c)
                } else {
                    format!("{}*{}", c, mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// Single variable x_i (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0i64; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn monomial(nvars: usize, expt: Vec<i64>, coeff: BigInt) -> Self {
        assert_eq!(expt.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(expt, coeff);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, BigInt)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * k;
        }
        out
    }

    pub fn mul_monomial(&self, e: &[i64]) -> Self {
        assert_eq!(e.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        SparsePoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * BigInt::from(e[i]));
        }
        out
    }

    /// Leading term in lexicographic order (largest exponent vector).
    pub fn leading(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// gcd of all coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        crate::arith::content(self.terms.values())
    }

    /// Componentwise minimum of exponent vectors (the largest monomial
    /// dividing every term).  Zero vector for the zero polynomial.
    pub fn monomial_content(&self) -> Vec<i64> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.clone();
        for e in it {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(ei);
            }
        }
        m
    }

    /// Exact division: `self = q * divisor` returns `Some(q)`, else `None`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        // shift both to nonnegative exponents so lex long division terminates
        let mc_f = self.monomial_content();
        let mc_g = divisor.monomial_content();
        let f0 = self.mul_monomial(&mc_f.iter().map(|x| -x).collect::<Vec<_>>());
        let g0 = divisor.mul_monomial(&mc_g.iter().map(|x| -x).collect::<Vec<_>>());
        let mut rem = f0;
        let mut quot = Self::zero(self.nvars);
        let (lg_e, lg_c) = {
            let (e, c) = g0.leading().unwrap();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (lf_e, lf_c) = {
                let (e, c) = rem.leading().unwrap();
                (e.clone(), c.clone())
            };
            let e: Vec<i64> = lf_e.iter().zip(&lg_e).map(|(a, b)| a - b).collect();
            if e.iter().any(|&x| x < 0) {
                return None;
            }
            let (q, r) = num::Integer::div_rem(&lf_c, &lg_c);
            if !r.is_zero() {
                return None;
            }
            let qt = Self::monomial(self.nvars, e, q);
            rem = rem.sub(&qt.mul(&g0));
            quot = quot.add(&qt);
            // progress: leading term strictly decreased
            if let Some((new_e, _)) = rem.leading() {
                if *new_e >= lf_e {
                    return None;
                }
            }
        }
        let shift: Vec<i64> = mc_f.iter().zip(&mc_g).map(|(a, b)| a - b).collect();
        Some(quot.mul_monomial(&shift))
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (x, &k) in point.iter().zip(e) {
                if k >= 0 {
                    for _ in 0..k {
                        term *= x;
                    }
                } else {
                    for _ in 0..(-k) {
                        term /= x;
                    }
                }
            }
            acc += term;
        }
        acc
    }
}
