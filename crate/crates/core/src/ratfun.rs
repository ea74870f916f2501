//! Rational functions as unreduced fractions of sparse polynomials.
//!
//! Multivariate gcd is deliberately avoided: equality is decided by
//! cross-multiplication, and only the integer content and common monomial
//! factors are normalized away.  The denominator is kept with positive
//! leading (lexicographically largest) coefficient so serialization is
//! canonical for a given representative.

use crate::error::Error;
use crate::poly::SparsePoly;
use crate::Result;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: SparsePoly,
    den: SparsePoly,
}

impl std::fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

impl RationalFunction {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        assert_eq!(num.nvars(), den.nvars());
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        Ok(rf)
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        let n = p.nvars();
        RationalFunction {
            num: p,
            den: SparsePoly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(SparsePoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(SparsePoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        RationalFunction {
            num: SparsePoly::constant(nvars, c.numer().clone()),
            den: SparsePoly::constant(nvars, c.denom().clone()),
        }
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denominator(&self) -> &SparsePoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = SparsePoly::one(self.den.nvars());
            return;
        }
        // cancel common monomial factor
        let mc_n = self.num.monomial_content();
        let mc_d = self.den.monomial_content();
        let common: Vec<i64> = mc_n.iter().zip(&mc_d).map(|(a, b)| -(*a.min(b))).collect();
        if common.iter().any(|&x| x != 0) {
            self.num = self.num.mul_monomial(&common);
            self.den = self.den.mul_monomial(&common);
        }
        // cancel integer content
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() && !g.is_zero() {
            self.num = exact_scale_down(&self.num, &g);
            self.den = exact_scale_down(&self.den, &g);
        }
        // positive leading coefficient for the denominator
        if let Some((_, c)) = self.den.leading() {
            if c.is_negative() {
                self.num = self.num.neg();
                self.den = self.den.neg();
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Quotient-rule derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let num = self
            .num
            .derivative(i)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(i)));
        let den = self.den.mul(&self.den);
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    /// Evaluate at a rational point; `None` if the denominator vanishes.
    pub fn eval(&self, point: &[BigRational]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }
}

fn exact_scale_down(p: &SparsePoly, g: &BigInt) -> SparsePoly {
    SparsePoly::from_terms(p.nvars(), p.terms().map(|(e, c)| (e.clone(), c / g)))
}

/// Equality by cross-multiplication: `f = g` iff `num(f) den(g) = num(g) den(f)`.
pub fn ratfun_equal(f: &RationalFunction, g: &RationalFunction) -> bool {
    f.num.mul(&g.den) == g.num.mul(&f.den)
}
