//! Univariate factorial-ratio series: the terms `A_n`, the Landau step
//! function, Landau's integrality criterion, p-adic valuations, and the
//! algebraicity classification of height-one integral ratios into the
//! three infinite families.

use crate::arith::{factorial, factorial_valuation, pochhammer, ratio};
use crate::error::Error;
use crate::Result;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};

/// The data of a series `sum_n prod_i (p_i n + k_i)! / prod_j (q_j n)! z^n`;
/// shifts `k_i` are natural numbers, one per numerator entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialRatioSpec {
    pub p: Vec<u64>,
    pub q: Vec<u64>,
    pub k: Vec<u64>,
}

impl FactorialRatioSpec {
    pub fn new(p: Vec<u64>, q: Vec<u64>, k: Vec<u64>) -> Result<Self> {
        if p.iter().chain(q.iter()).any(|&x| x == 0) {
            return Err(Error::Invalid("p and q entries must be positive".into()));
        }
        let k = if k.is_empty() { vec![0; p.len()] } else { k };
        if k.len() != p.len() {
            return Err(Error::Invalid(
                "need one shift per numerator entry (or none)".into(),
            ));
        }
        Ok(FactorialRatioSpec { p, q, k })
    }

    /// Shift-free spec.
    pub fn central(p: Vec<u64>, q: Vec<u64>) -> Result<Self> {
        Self::new(p, q, vec![])
    }

    pub fn sum_p(&self) -> u64 {
        self.p.iter().sum()
    }

    pub fn sum_q(&self) -> u64 {
        self.q.iter().sum()
    }

    pub fn balanced(&self) -> bool {
        self.sum_p() == self.sum_q()
    }

    fn require_balanced(&self) -> Result<()> {
        if !self.balanced() {
            return Err(Error::Unbalanced {
                sum_p: self.sum_p(),
                sum_q: self.sum_q(),
            });
        }
        Ok(())
    }

    /// Height `d = s - r`.
    pub fn height(&self) -> i64 {
        self.q.len() as i64 - self.p.len() as i64
    }

    pub fn has_shifts(&self) -> bool {
        self.k.iter().any(|&x| x != 0)
    }

    /// Remove common entries of `p` and `q` (as multisets); drops shifts.
    pub fn canceled(&self) -> FactorialRatioSpec {
        let mut q_pool = self.q.clone();
        let mut p_out = Vec::new();
        for &pi in &self.p {
            if let Some(pos) = q_pool.iter().position(|&x| x == pi) {
                q_pool.remove(pos);
            } else {
                p_out.push(pi);
            }
        }
        p_out.sort_unstable();
        q_pool.sort_unstable();
        FactorialRatioSpec {
            k: vec![0; p_out.len()],
            p: p_out,
            q: q_pool,
        }
    }

    /// Divide all entries by their common gcd.
    pub fn gcd_normalized(&self) -> FactorialRatioSpec {
        let mut g: u64 = 0;
        for &x in self.p.iter().chain(self.q.iter()) {
            g = num::integer::gcd(g, x);
        }
        if g <= 1 {
            return self.clone();
        }
        FactorialRatioSpec {
            p: self.p.iter().map(|&x| x / g).collect(),
            q: self.q.iter().map(|&x| x / g).collect(),
            k: self.k.clone(),
        }
    }
}

/// Term `prod_i (p_i n + k_i)! / prod_j (q_j n)!`, exact.
pub fn ratio_term(spec: &FactorialRatioSpec, n: u64) -> BigRational {
    let mut num = BigInt::one();
    for (&pi, &ki) in spec.p.iter().zip(&spec.k) {
        num *= factorial(pi * n + ki);
    }
    let mut den = BigInt::one();
    for &qj in &spec.q {
        den *= factorial(qj * n);
    }
    BigRational::new(num, den)
}

/// Exact piecewise description of the Landau function
/// `L(x) = sum_j {q_j x} - sum_i {p_i x}` on `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LandauProfile {
    /// Sorted breakpoints starting at 0; `values[i]` holds on
    /// `[breakpoints[i], breakpoints[i+1])` (and the last up to 1).
    pub breakpoints: Vec<BigRational>,
    pub values: Vec<i64>,
    pub height: i64,
}

impl LandauProfile {
    pub fn min_value(&self) -> i64 {
        *self.values.iter().min().expect("profile is nonempty")
    }

    /// Value at any rational (uses periodicity).
    pub fn value_at(&self, x: &BigRational) -> i64 {
        let frac = x - x.floor();
        let idx = self
            .breakpoints
            .partition_point(|b| *b <= frac)
            .saturating_sub(1);
        self.values[idx]
    }
}

/// Evaluate `L` at a rational point directly from the definition.
pub fn landau_value(spec: &FactorialRatioSpec, x: &BigRational) -> i64 {
    let mut acc = BigRational::zero();
    for &qj in &spec.q {
        let v = x * BigRational::from(BigInt::from(qj));
        acc += &v - v.floor();
    }
    for &pi in &spec.p {
        let v = x * BigRational::from(BigInt::from(pi));
        acc -= &v - v.floor();
    }
    debug_assert!(acc.is_integer(), "Landau value must be integral when balanced");
    acc.to_integer().to_i64().expect("small value")
}

pub fn landau_profile(spec: &FactorialRatioSpec) -> Result<LandauProfile> {
    spec.require_balanced()?;
    let mut breaks: Vec<BigRational> = vec![BigRational::zero()];
    for &den in spec.p.iter().chain(spec.q.iter()) {
        for l in 1..den {
            breaks.push(ratio(l as i64, den as i64));
        }
    }
    breaks.sort();
    breaks.dedup();
    let values: Vec<i64> = breaks.iter().map(|b| landau_value(spec, b)).collect();
    Ok(LandauProfile {
        breakpoints: breaks,
        values,
        height: spec.height(),
    })
}

/// Landau's criterion: all `A_n` are integers iff `L >= 0` everywhere.
pub fn is_integral(spec: &FactorialRatioSpec) -> Result<bool> {
    if spec.has_shifts() {
        return Err(Error::Invalid(
            "integrality is defined for the shift-free ratios".into(),
        ));
    }
    Ok(landau_profile(spec)?.min_value() >= 0)
}

/// Compare the exact `l`-adic valuation of `A_n` with the Landau sum
/// `sum_{v >= 1} L(n / l^v)`.
pub fn valuation_check(spec: &FactorialRatioSpec, l: u64, n: u64) -> Result<bool> {
    spec.require_balanced()?;
    if spec.has_shifts() {
        return Err(Error::Invalid(
            "valuation identity applies to the shift-free ratios".into(),
        ));
    }
    let mut val: i64 = 0;
    for &pi in &spec.p {
        val += factorial_valuation(pi * n, l) as i64;
    }
    for &qj in &spec.q {
        val -= factorial_valuation(qj * n, l) as i64;
    }
    let mut landau_sum: i64 = 0;
    let mut power = BigInt::from(l);
    let n_big = BigInt::from(n);
    let max_den = spec.p.iter().chain(spec.q.iter()).copied().max().unwrap_or(1);
    loop {
        // L(x) = 0 once x < 1/max_den
        let x = BigRational::new(n_big.clone(), power.clone());
        if x < ratio(1, max_den as i64) {
            break;
        }
        landau_sum += landau_value(spec, &x);
        power *= l;
    }
    Ok(val == landau_sum)
}

/// Algebraicity class of the series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnivariateClass {
    Rational,
    /// `((a+b)n)! / ((an)! (bn)!)`
    AlgebraicFamily1 { a: u64, b: u64 },
    /// `(2(a+b)n)! (bn)! / ((a+b)n)! (2bn)! (an)!`
    AlgebraicFamily2 { a: u64, b: u64 },
    /// `(2an)! (2bn)! / ((an)! (bn)! ((a+b)n)!)`
    AlgebraicFamily3 { a: u64, b: u64 },
    /// Height one and integral but outside the three families: one of the
    /// sporadic cases catalogued elsewhere.
    AlgebraicSporadicCandidate,
    NotAlgebraic,
}

impl UnivariateClass {
    pub fn tag(&self) -> &'static str {
        match self {
            UnivariateClass::Rational => "rational",
            UnivariateClass::AlgebraicFamily1 { .. } => "family1",
            UnivariateClass::AlgebraicFamily2 { .. } => "family2",
            UnivariateClass::AlgebraicFamily3 { .. } => "family3",
            UnivariateClass::AlgebraicSporadicCandidate => "sporadic-candidate",
            UnivariateClass::NotAlgebraic => "not-algebraic",
        }
    }
}

fn multiset_eq(a: &[u64], b: &[u64]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn match_family1(p: &[u64], q: &[u64]) -> Option<(u64, u64)> {
    if p.len() != 1 || q.len() != 2 {
        return None;
    }
    let (a, b) = (q[0].min(q[1]), q[0].max(q[1]));
    if a + b == p[0] && num::integer::gcd(a, b) == 1 {
        Some((a, b))
    } else {
        None
    }
}

fn match_family2(p: &[u64], q: &[u64]) -> Option<(u64, u64)> {
    if p.len() != 2 || q.len() != 3 {
        return None;
    }
    for (x, y) in [(p[0], p[1]), (p[1], p[0])] {
        // x = 2(a+b), y = b
        if x % 2 != 0 {
            continue;
        }
        let apb = x / 2;
        let b = y;
        if apb <= b {
            continue;
        }
        let a = apb - b;
        if num::integer::gcd(a, b) != 1 {
            continue;
        }
        if multiset_eq(q, &[apb, 2 * b, a]) {
            return Some((a, b));
        }
    }
    None
}

fn match_family3(p: &[u64], q: &[u64]) -> Option<(u64, u64)> {
    if p.len() != 2 || q.len() != 3 {
        return None;
    }
    if p[0] % 2 != 0 || p[1] % 2 != 0 {
        return None;
    }
    let (a, b) = ((p[0] / 2).min(p[1] / 2), (p[0] / 2).max(p[1] / 2));
    if num::integer::gcd(a, b) == 1 && multiset_eq(q, &[a, b, a + b]) {
        Some((a, b))
    } else {
        None
    }
}

/// Classify the series: cancel, then (for height one, integral, gcd-one
/// data) match the three families.  Shifts never change the class.
pub fn classify_univariate(spec: &FactorialRatioSpec) -> Result<UnivariateClass> {
    spec.require_balanced()?;
    let canceled = spec.canceled();
    if canceled.p.is_empty() && canceled.q.is_empty() {
        return Ok(UnivariateClass::Rational);
    }
    if canceled.height() != 1 {
        return Ok(UnivariateClass::NotAlgebraic);
    }
    if !is_integral(&canceled)? {
        return Ok(UnivariateClass::NotAlgebraic);
    }
    // normalization can expose new common entries, e.g. {4},{2,2} -> {2},{1,1}
    let normalized = canceled.gcd_normalized().canceled().gcd_normalized();
    if let Some((a, b)) = match_family1(&normalized.p, &normalized.q) {
        return Ok(UnivariateClass::AlgebraicFamily1 { a, b });
    }
    if let Some((a, b)) = match_family2(&normalized.p, &normalized.q) {
        return Ok(UnivariateClass::AlgebraicFamily2 { a, b });
    }
    if let Some((a, b)) = match_family3(&normalized.p, &normalized.q) {
        return Ok(UnivariateClass::AlgebraicFamily3 { a, b });
    }
    Ok(UnivariateClass::AlgebraicSporadicCandidate)
}

/// Hypergeometric parameters of the central series: `alpha = { l / p_i }`,
/// `beta = { l / q_j }` with common values removed pairwise, and
/// `kappa = prod p_i^{p_i} / prod q_j^{q_j}`.
pub fn hyper_params(
    spec: &FactorialRatioSpec,
) -> Result<(Vec<BigRational>, Vec<BigRational>, BigRational)> {
    spec.require_balanced()?;
    let spec = spec.canceled();
    let mut alphas: Vec<BigRational> = Vec::new();
    for &pi in &spec.p {
        for l in 1..=pi {
            alphas.push(ratio(l as i64, pi as i64));
        }
    }
    let mut betas: Vec<BigRational> = Vec::new();
    for &qj in &spec.q {
        for l in 1..=qj {
            betas.push(ratio(l as i64, qj as i64));
        }
    }
    alphas.sort();
    betas.sort();
    // remove common values pairwise
    let mut a_out: Vec<BigRational> = Vec::new();
    for a in alphas {
        if let Some(pos) = betas.iter().position(|b| *b == a) {
            betas.remove(pos);
        } else {
            a_out.push(a);
        }
    }
    let mut kappa = BigRational::one();
    for &pi in &spec.p {
        kappa *= BigRational::from(BigInt::from(pi).pow(pi as u32));
    }
    for &qj in &spec.q {
        kappa /= BigRational::from(BigInt::from(qj).pow(qj as u32));
    }
    Ok((a_out, betas, kappa))
}

/// Oracle used by tests: the coefficient of `z^n` computed from the
/// hypergeometric form.  Gauss multiplication gives
/// `(pn)! = p^{pn} prod_l (l/p)_n`, hence
/// `A_n = kappa^n prod (alpha)_n / prod (beta)_n`.
pub fn hyper_coefficient(
    alphas: &[BigRational],
    betas: &[BigRational],
    kappa: &BigRational,
    n: u64,
) -> BigRational {
    let mut acc = BigRational::one();
    for a in alphas {
        acc *= pochhammer(a, n);
    }
    for b in betas {
        acc /= pochhammer(b, n);
    }
    for _ in 0..n {
        acc *= kappa;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: &[u64], q: &[u64]) -> FactorialRatioSpec {
        FactorialRatioSpec::central(p.to_vec(), q.to_vec()).unwrap()
    }

    #[test]
    fn ratio_term_examples() {
        assert_eq!(ratio_term(&spec(&[2], &[1, 1]), 2), ratio(6, 1));
        assert_eq!(ratio_term(&spec(&[3, 5], &[4, 4]), 0), ratio(1, 1));
        // family (2.7) with a = b = 1 at n = 1: 24 * 1 / (2 * 2 * 1)
        assert_eq!(ratio_term(&spec(&[4, 1], &[2, 2, 1]), 1), ratio(6, 1));
    }

    #[test]
    fn landau_profile_catalan_like() {
        let prof = landau_profile(&spec(&[2], &[1, 1])).unwrap();
        assert_eq!(prof.breakpoints, vec![ratio(0, 1), ratio(1, 2)]);
        assert_eq!(prof.values, vec![0, 1]);
        assert_eq!(prof.height, 1);
    }

    #[test]
    fn landau_profile_negated() {
        let prof = landau_profile(&spec(&[1, 1], &[2])).unwrap();
        assert_eq!(prof.values, vec![0, -1]);
        assert_eq!(prof.height, -1);
        // L(-x) = d - L(x) away from breakpoints
        let s = spec(&[1, 1], &[2]);
        for (num, den) in [(1i64, 3i64), (2, 5), (3, 7), (5, 8)] {
            let x = ratio(num, den);
            assert_eq!(landau_value(&s, &-x.clone()), -1 - landau_value(&s, &x));
        }
    }

    #[test]
    fn landau_profile_canceled_is_zero() {
        let prof = landau_profile(&spec(&[1], &[1])).unwrap();
        assert_eq!(prof.values, vec![0]);
    }

    #[test]
    fn profile_last_interval_equals_height() {
        for s in [
            spec(&[2], &[1, 1]),
            spec(&[4, 1], &[2, 2, 1]),
            spec(&[6, 1], &[3, 2, 2]),
            spec(&[2, 4], &[1, 1, 2, 2]),
        ] {
            let prof = landau_profile(&s).unwrap();
            assert_eq!(*prof.values.last().unwrap() as i64, prof.height);
            assert_eq!(prof.values[0], 0);
        }
    }

    #[test]
    fn profile_bounded_by_height() {
        for s in [spec(&[2], &[1, 1]), spec(&[2, 4], &[1, 1, 2, 2]), spec(&[6, 1], &[3, 2, 2])] {
            let prof = landau_profile(&s).unwrap();
            if prof.height >= 0 {
                assert!(prof.values.iter().all(|&v| v <= prof.height));
            }
        }
    }

    #[test]
    fn integrality_examples() {
        assert!(is_integral(&spec(&[2], &[1, 1])).unwrap());
        assert!(!is_integral(&spec(&[1, 1], &[2])).unwrap());
        assert!(is_integral(&spec(&[3], &[3])).unwrap());
    }

    #[test]
    fn integrality_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut tested = 0;
        while tested < 60 {
            let r = rng.gen_range(1..=3usize);
            let s = rng.gen_range(1..=3usize);
            let p: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=5)).collect();
            let mut q: Vec<u64> = (0..s - 1).map(|_| rng.gen_range(1..=5)).collect();
            let (sp, sq): (u64, u64) = (p.iter().sum(), q.iter().sum());
            if sq >= sp {
                continue;
            }
            q.push(sp - sq);
            let sp = spec(&p, &q);
            let landau_says = is_integral(&sp).unwrap();
            let brute = (0..=300u64).all(|n| ratio_term(&sp, n).is_integer());
            assert_eq!(landau_says, brute, "spec {sp:?}");
            tested += 1;
        }
    }

    #[test]
    fn classify_family_examples() {
        assert_eq!(
            classify_univariate(&spec(&[3], &[1, 2])).unwrap(),
            UnivariateClass::AlgebraicFamily1 { a: 1, b: 2 }
        );
        // the height-two series from the classification section
        assert_eq!(
            classify_univariate(&spec(&[2, 4], &[1, 1, 2, 2])).unwrap(),
            UnivariateClass::NotAlgebraic
        );
        let shifted = FactorialRatioSpec::new(vec![1], vec![1], vec![2]).unwrap();
        assert_eq!(
            classify_univariate(&shifted).unwrap(),
            UnivariateClass::Rational
        );
    }

    #[test]
    fn classify_family_generators() {
        assert_eq!(
            classify_univariate(&spec(&[4, 1], &[2, 2, 1])).unwrap(),
            // family 2 with a = b = 1 cancels and rescales to family 1
            UnivariateClass::AlgebraicFamily1 { a: 1, b: 1 }
        );
        assert_eq!(
            classify_univariate(&spec(&[6, 1], &[3, 2, 2])).unwrap(),
            UnivariateClass::AlgebraicFamily2 { a: 2, b: 1 }
        );
        assert_eq!(
            classify_univariate(&spec(&[4, 6], &[2, 3, 5])).unwrap(),
            UnivariateClass::AlgebraicFamily3 { a: 2, b: 3 }
        );
        // sporadic candidate: a height-one integral ratio outside the families
        assert_eq!(
            classify_univariate(&spec(&[30, 1], &[15, 10, 6])).unwrap(),
            UnivariateClass::AlgebraicSporadicCandidate
        );
    }

    #[test]
    fn classify_invariances() {
        let base = spec(&[3], &[1, 2]);
        let class = classify_univariate(&base).unwrap();
        // padding with equal entries
        assert_eq!(
            classify_univariate(&spec(&[3, 7], &[1, 2, 7])).unwrap(),
            class
        );
        // scaling then gcd normalization
        assert_eq!(classify_univariate(&spec(&[6], &[2, 4])).unwrap(), class);
        // shifts
        let shifted = FactorialRatioSpec::new(vec![3], vec![1, 2], vec![5]).unwrap();
        assert_eq!(classify_univariate(&shifted).unwrap(), class);
    }

    #[test]
    fn hyper_params_examples() {
        let (a, b, k) = hyper_params(&spec(&[2], &[1, 1])).unwrap();
        assert_eq!(a, vec![ratio(1, 2)]);
        assert_eq!(b, vec![ratio(1, 1)]);
        assert_eq!(k, ratio(4, 1));

        let (a, b, k) = hyper_params(&spec(&[1], &[1])).unwrap();
        assert!(a.is_empty() && b.is_empty());
        assert_eq!(k, ratio(1, 1));

        let (a, b, k) = hyper_params(&spec(&[3], &[1, 2])).unwrap();
        assert_eq!(a, vec![ratio(1, 3), ratio(2, 3)]);
        assert_eq!(b, vec![ratio(1, 2), ratio(1, 1)]);
        assert_eq!(k, ratio(27, 4));
    }

    #[test]
    fn hyper_params_match_series_coefficients() {
        for s in [spec(&[2], &[1, 1]), spec(&[3], &[1, 2]), spec(&[4, 1], &[2, 2, 1])] {
            let (a, b, k) = hyper_params(&s).unwrap();
            // number of betas equal to one is the height
            let ones = b.iter().filter(|x| x.is_one()).count() as i64;
            assert_eq!(ones, s.height());
            for n in 0..10u64 {
                assert_eq!(
                    hyper_coefficient(&a, &b, &k, n),
                    ratio_term(&s, n),
                    "spec {s:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn valuation_examples() {
        assert!(valuation_check(&spec(&[2], &[1, 1]), 2, 1).unwrap());
        assert!(valuation_check(&spec(&[3, 5], &[4, 4]), 7, 0).unwrap());
        assert!(valuation_check(&spec(&[4, 1], &[2, 2, 1]), 3, 2).unwrap());
    }

    #[test]
    fn valuation_identity_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let primes = [2u64, 3, 5, 7, 11, 13];
        let mut tested = 0;
        while tested < 30 {
            let r = rng.gen_range(1..=3usize);
            let p: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=6)).collect();
            let sp: u64 = p.iter().sum();
            let mut q = Vec::new();
            let mut left = sp;
            while left > 0 {
                let take = rng.gen_range(1..=left);
                q.push(take);
                left -= take;
            }
            let s = spec(&p, &q);
            for &l in &primes {
                for n in 0..=40u64 {
                    assert!(valuation_check(&s, l, n).unwrap(), "spec {s:?} l={l} n={n}");
                }
            }
            tested += 1;
        }
    }

    #[test]
    fn unbalanced_rejected() {
        let s = spec(&[2], &[1]);
        assert!(landau_profile(&s).is_err());
        assert!(classify_univariate(&s).is_err());
    }
}
