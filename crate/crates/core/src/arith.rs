//! Small arithmetic helpers over arbitrary-precision integers and rationals.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// A grow-on-demand factorial table; factorial values dominate series
/// generation so they are computed once per run.
#[derive(Default)]
pub struct FactorialTable {
    table: Vec<BigInt>,
}

impl FactorialTable {
    pub fn new() -> Self {
        FactorialTable {
            table: vec![BigInt::one()],
        }
    }

    pub fn get(&mut self, n: u64) -> &BigInt {
        let n = n as usize;
        while self.table.len() <= n {
            let k = self.table.len();
            let next = self.table[k - 1].clone() * k;
            self.table.push(next);
        }
        &self.table[n]
    }
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
pub fn pochhammer(a: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

/// Legendre-style valuation of n! at the prime `l`.
pub fn factorial_valuation(n: u64, l: u64) -> u64 {
    debug_assert!(l >= 2);
    let mut v = 0;
    let mut p = l;
    while p <= n {
        v += n / p;
        match p.checked_mul(l) {
            Some(next) => p = next,
            None => break,
        }
    }
    v
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let ext = a.extended_gcd(b);
    (ext.gcd, ext.x, ext.y)
}

/// gcd of two i64 values, nonnegative.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Divide a 2-vector by the gcd of its entries (zero vector stays zero).
pub fn primitive2(v: [i64; 2]) -> [i64; 2] {
    let g = gcd_i64(v[0], v[1]);
    if g == 0 {
        v
    } else {
        [v[0] / g, v[1] / g]
    }
}

/// 2x2 cross product a x b = a0 b1 - a1 b0, exact over i128.
pub fn cross(a: [i64; 2], b: [i64; 2]) -> i128 {
    a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128
}

/// Dot product of 2-vectors over i128.
pub fn dot(a: [i64; 2], b: [i64; 2]) -> i128 {
    a[0] as i128 * b[0] as i128 + a[1] as i128 * b[1] as i128
}

/// Sign of a BigRational as -1, 0, 1.
pub fn sign_of(r: &BigRational) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Rational from an integer pair.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer content (gcd of a list), nonnegative; zero for an empty list.
pub fn content<'a, I: IntoIterator<Item = &'a BigInt>>(items: I) -> BigInt {
    let mut g = BigInt::zero();
    for it in items {
        g = g.gcd(it);
        if g.is_one() {
            break;
        }
    }
    g
}
