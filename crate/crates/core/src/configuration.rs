//! Lattice configurations and the classification of codimension-two
//! configurations admitting stable rational hypergeometric functions.
//!
//! A configuration is a `d x n` integer matrix whose columns span the
//! full lattice.  Its Gale dual orients a line arrangement; the
//! classification (pyramid / Lawrence / essential Cayley / none) is
//! decided entirely on the reduced Gale dual: zero rows mean pyramids,
//! a complete opposite pairing means Lawrence, and three leftover
//! nonzero rank-2 rows summing to zero mean an essential Cayley
//! configuration.
//!
//! The conventional one-row `(1 1 1)` and the `2 x 4` double-pair block
//! have repeated columns; they are accepted and handled by the same
//! criteria, which is why column distinctness is not enforced here.

use crate::error::Error;
use crate::matrix::{
    hnf, is_primitive, kernel_basis, unimodular_completion, HnfSolver, IntMatrix,
};
use crate::Result;
use num::{BigInt, One, Zero};

/// A configuration of `n` lattice points in `Z^d`, given as the columns of
/// a full-rank `d x n` matrix whose columns span `Z^d`.
#[derive(Clone, Debug)]
pub struct Configuration {
    a: IntMatrix,
    codim: usize,
}

impl Configuration {
    pub fn new(a: IntMatrix) -> Result<Self> {
        let d = a.nrows();
        let n = a.ncols();
        let rank = a.rank();
        if rank < d {
            return Err(Error::RankDeficient { rank, expected: d });
        }
        if !is_primitive(&a) {
            return Err(Error::Invalid(
                "columns do not span the full lattice Z^d".into(),
            ));
        }
        Ok(Configuration { a, codim: n - d })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn npoints(&self) -> usize {
        self.a.ncols()
    }

    pub fn dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn codimension(&self) -> usize {
        self.codim
    }

    /// Canonical Gale dual: kernel basis of the matrix, `n x codim`.
    pub fn gale_dual(&self) -> IntMatrix {
        kernel_basis(&self.a)
    }
}

/// Structural facts reported by [`analyze`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub codimension: usize,
    /// All points lie in a hyperplane off the origin, equivalently the Gale
    /// rows sum to zero.
    pub regular: bool,
    /// Some Gale row vanishes; codimension-zero configurations count as
    /// pyramids (their Gale rows are empty).
    pub pyramid: bool,
}

pub fn analyze(config: &Configuration) -> AnalysisReport {
    let b = config.gale_dual();
    let n = b.nrows();
    let k = b.ncols();
    let regular = (0..k).all(|c| {
        let mut s = BigInt::zero();
        for r in 0..n {
            s += &b[(r, c)];
        }
        s.is_zero()
    });
    let pyramid = (0..n).any(|r| b.row_is_zero(r));
    AnalysisReport {
        codimension: config.codimension(),
        regular,
        pyramid,
    }
}

/// A Cayley splitting `A = {e_1} x A_1 u ... u {e_s} x A_s` found up to a
/// unimodular change of coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyStructure {
    pub s: usize,
    pub r: usize,
    /// Partition of column indices into the groups `A_1, ..., A_s`.
    pub groups: Vec<Vec<usize>>,
    pub essential: bool,
    pub lawrence: bool,
}

impl CayleyStructure {
    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.len()).collect()
    }
}

/// Search for a Cayley splitting.  Group indicator vectors must lie in the
/// row lattice of the matrix and extend to a lattice basis; groups of size
/// one are excluded (they would make the configuration a pyramid).
///
/// When several splittings exist the essential one is preferred, then a
/// Lawrence one, then maximal group count.
pub fn detect_cayley(config: &Configuration) -> Option<CayleyStructure> {
    let a = config.matrix();
    let d = a.nrows();
    let n = a.ncols();
    if n > 20 {
        return None; // subset search is only meant for desk-scale inputs
    }
    let solver = HnfSolver::new(&a.transpose());
    // feasible groups: subsets S, |S| >= 2, with indicator in the row lattice
    let mut groups: Vec<(u32, Vec<BigInt>)> = Vec::new();
    for mask in 1u32..(1 << n) {
        if (mask.count_ones() as usize) < 2 {
            continue;
        }
        let chi: Vec<BigInt> = (0..n)
            .map(|j| {
                if mask & (1 << j) != 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        if let Some(lambda) = solver.solve(&chi) {
            groups.push((mask, lambda));
        }
    }
    // exact covers of the column set by feasible groups
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut covers: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn search(
        covered: u32,
        full: u32,
        groups: &[(u32, Vec<BigInt>)],
        stack: &mut Vec<usize>,
        covers: &mut Vec<Vec<usize>>,
    ) {
        if covers.len() >= 50_000 {
            return;
        }
        if covered == full {
            covers.push(stack.clone());
            return;
        }
        let lowest = (!covered).trailing_zeros();
        for (gi, (mask, _)) in groups.iter().enumerate() {
            if mask & covered != 0 || mask & (1 << lowest) == 0 {
                continue;
            }
            stack.push(gi);
            search(covered | mask, full, groups, stack, covers);
            stack.pop();
        }
    }
    search(0, full, &groups, &mut stack, &mut covers);

    let mut best: Option<CayleyStructure> = None;
    let mut best_key = (false, false, 0usize);
    for cover in &covers {
        let s = cover.len();
        if s > d {
            continue;
        }
        let r = d - s;
        let lambda_rows: Vec<Vec<BigInt>> =
            cover.iter().map(|&gi| groups[gi].1.clone()).collect();
        let lam = IntMatrix::from_bigint_rows(lambda_rows);
        let Some(w) = unimodular_completion(&lam) else {
            continue;
        };
        let transformed = w.mul(a);
        let col_groups: Vec<Vec<usize>> = cover
            .iter()
            .map(|&gi| {
                let mask = groups[gi].0;
                (0..n).filter(|j| mask & (1 << j) != 0).collect()
            })
            .collect();
        let essential = s == r + 1 && minkowski_essential(&transformed, &col_groups, s, r);
        let lawrence = col_groups.iter().all(|g| g.len() == 2);
        let key = (essential, lawrence, s);
        if best.is_none() || key > best_key {
            best_key = key;
            best = Some(CayleyStructure {
                s,
                r,
                groups: col_groups,
                essential,
                lawrence,
            });
        }
    }
    best
}

/// Essentiality: for every proper nonempty subset `I` of the groups, the
/// Minkowski sum of the corresponding `A_i` has affine dimension at least
/// `|I|`; computed as the rank of the union of in-group difference sets.
fn minkowski_essential(
    transformed: &IntMatrix,
    groups: &[Vec<usize>],
    s: usize,
    r: usize,
) -> bool {
    for mask in 1u32..((1u32 << s) - 1) {
        let size = mask.count_ones() as usize;
        let mut diffs: Vec<Vec<BigInt>> = Vec::new();
        for (gi, group) in groups.iter().enumerate() {
            if mask & (1 << gi) == 0 {
                continue;
            }
            let base = group[0];
            for &j in &group[1..] {
                let diff: Vec<BigInt> = (s..s + r)
                    .map(|row| &transformed[(row, j)] - &transformed[(row, base)])
                    .collect();
                diffs.push(diff);
            }
        }
        let rank = if diffs.is_empty() {
            0
        } else {
            IntMatrix::from_bigint_rows(diffs).rank()
        };
        if rank < size {
            return false;
        }
    }
    true
}

/// Maximum matching of opposite rows `b_i = -b_j`, plus the reduced
/// configuration: the unmatched nonzero rows.
pub struct ReducedGale {
    pub reduced: IntMatrix,
    pub pairing: Vec<(usize, usize)>,
    /// Indices of rows kept in `reduced`.
    pub kept: Vec<usize>,
    /// Indices of zero rows (removed but unpaired).
    pub zero_rows: Vec<usize>,
}

pub fn reduced_gale(b: &IntMatrix) -> ReducedGale {
    let n = b.nrows();
    use std::collections::BTreeMap;
    let mut buckets: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
    let mut zero_rows = Vec::new();
    for r in 0..n {
        let row = b.row(r);
        if row.iter().all(|x| x.is_zero()) {
            zero_rows.push(r);
        } else {
            buckets.entry(row).or_default().push(r);
        }
    }
    let mut pairing: Vec<(usize, usize)> = Vec::new();
    let mut paired: Vec<bool> = vec![false; n];
    let keys: Vec<Vec<BigInt>> = buckets.keys().cloned().collect();
    for key in &keys {
        let neg: Vec<BigInt> = key.iter().map(|x| -x.clone()).collect();
        if *key >= neg {
            continue; // handle each {v, -v} once
        }
        let (Some(pos_rows), Some(neg_rows)) = (buckets.get(key), buckets.get(&neg)) else {
            continue;
        };
        // opposite buckets are disjoint, so pairing min counts is a maximum
        // matching between them
        for (&i, &j) in pos_rows.iter().zip(neg_rows.iter()) {
            let (i, j) = if i < j { (i, j) } else { (j, i) };
            pairing.push((i, j));
            paired[i] = true;
            paired[j] = true;
        }
    }
    pairing.sort();
    let kept: Vec<usize> = (0..n)
        .filter(|&r| !paired[r] && !zero_rows.contains(&r))
        .collect();
    let reduced_rows: Vec<Vec<BigInt>> = kept.iter().map(|&r| b.row(r)).collect();
    let reduced = if reduced_rows.is_empty() {
        IntMatrix::zero(0, b.ncols())
    } else {
        IntMatrix::from_bigint_rows(reduced_rows)
    };
    ReducedGale {
        reduced,
        pairing,
        kept,
        zero_rows,
    }
}

/// Outcome of the codimension-two decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Pyramid {
        zero_rows: Vec<usize>,
    },
    Lawrence {
        pairing: Vec<(usize, usize)>,
    },
    CayleyEssential {
        structure: CayleyStructure,
        pairing: Vec<(usize, usize)>,
        /// Row indices of the three-vector reduced configuration.
        triple: Vec<usize>,
    },
    NoStableRational {
        reason: String,
    },
}

impl Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Pyramid { .. } => "pyramid",
            Classification::Lawrence { .. } => "lawrence",
            Classification::CayleyEssential { .. } => "cayley-essential",
            Classification::NoStableRational { .. } => "no-stable-rational",
        }
    }
}

/// Decide whether a codimension-two configuration admits a stable rational
/// hypergeometric function: pyramids defer to their base, Lawrence and
/// essential Cayley configurations do, nothing else does.
pub fn classify_stable_rational(config: &Configuration) -> Result<Classification> {
    if config.codimension() != 2 {
        return Err(Error::WrongCodimension {
            got: config.codimension(),
            expected: 2,
        });
    }
    let b = config.gale_dual();
    let zero_rows: Vec<usize> = (0..b.nrows()).filter(|&r| b.row_is_zero(r)).collect();
    if !zero_rows.is_empty() {
        return Ok(Classification::Pyramid { zero_rows });
    }
    let red = reduced_gale(&b);
    if red.kept.is_empty() {
        return Ok(Classification::Lawrence {
            pairing: red.pairing,
        });
    }
    if red.kept.len() == 3 {
        let rank2 = red.reduced.rank() == 2;
        let sums_zero = (0..2).all(|c| {
            let mut s = BigInt::zero();
            for r in 0..3 {
                s += &red.reduced[(r, c)];
            }
            s.is_zero()
        });
        if rank2 && sums_zero {
            let structure = detect_cayley(config).ok_or_else(|| {
                Error::Invalid(
                    "reduced Gale dual is Cayley-essential but no splitting was found".into(),
                )
            })?;
            if !structure.essential {
                return Err(Error::Invalid(
                    "detected splitting is not essential despite Gale criteria".into(),
                ));
            }
            return Ok(Classification::CayleyEssential {
                structure,
                pairing: red.pairing,
                triple: red.kept,
            });
        }
    }
    let reason = format!(
        "reduced Gale dual has {} rows and is neither empty nor an essential triple",
        red.kept.len()
    );
    Ok(Classification::NoStableRational { reason })
}

/// The canonical Gale dual, exposed as an operation for the CLI.
pub fn gale(config: &Configuration) -> IntMatrix {
    config.gale_dual()
}

/// Hermite form helper re-exported for golden tests of the canonical basis.
pub fn canonical_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(&kernel_basis(m));
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_example() -> Configuration {
        Configuration::new(IntMatrix::from_rows(&[
            vec![1, 1, 0, 0, 0],
            vec![0, 0, 1, 1, 1],
            vec![0, 1, 0, 2, 1],
        ]))
        .unwrap()
    }

    fn lawrence_block() -> Configuration {
        Configuration::new(IntMatrix::from_rows(&[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]))
            .unwrap()
    }

    fn b2_configuration() -> Configuration {
        // kernel is spanned by the columns of B2
        Configuration::new(IntMatrix::from_rows(&[
            vec![1, 0, 2, 0, 0],
            vec![0, 1, 0, 2, 0],
            vec![1, 1, 1, 1, 1],
        ]))
        .unwrap()
    }

    #[test]
    fn analyze_running_example() {
        let rep = analyze(&running_example());
        assert_eq!(
            rep,
            AnalysisReport {
                codimension: 2,
                regular: true,
                pyramid: false
            }
        );
    }

    #[test]
    fn analyze_lawrence_block() {
        let rep = analyze(&lawrence_block());
        assert_eq!(
            rep,
            AnalysisReport {
                codimension: 2,
                regular: true,
                pyramid: false
            }
        );
    }

    #[test]
    fn analyze_identity_codim_zero() {
        let c = Configuration::new(IntMatrix::identity(2)).unwrap();
        assert_eq!(analyze(&c).codimension, 0);
    }

    #[test]
    fn rank_deficient_rejected() {
        let err = Configuration::new(IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]));
        assert!(err.is_err());
    }

    #[test]
    fn cayley_running_example() {
        let s = detect_cayley(&running_example()).unwrap();
        assert_eq!(s.s, 2);
        assert_eq!(s.r, 1);
        assert!(s.essential);
        assert!(!s.lawrence);
        let mut sizes = s.group_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
        let mut groups = s.groups.clone();
        groups.sort();
        assert_eq!(groups, vec![vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn cayley_proposition_7_5_matrix() {
        // the 5 x 7 essential Cayley configuration with s1 = s2 = 1
        let c = Configuration::new(IntMatrix::from_rows(&[
            vec![1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 1],
            vec![1, 0, 0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 1],
        ]))
        .unwrap();
        let s = detect_cayley(&c).unwrap();
        assert_eq!((s.s, s.r), (3, 2));
        assert!(s.essential);
        let mut sizes = s.group_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 3]);
    }

    #[test]
    fn cayley_one_row_convention() {
        let c = Configuration::new(IntMatrix::from_rows(&[vec![1, 1, 1]])).unwrap();
        let s = detect_cayley(&c).unwrap();
        assert_eq!((s.s, s.r), (1, 0));
        assert!(s.essential);
    }

    #[test]
    fn lawrence_block_detected() {
        let s = detect_cayley(&lawrence_block()).unwrap();
        assert!(s.lawrence);
        assert_eq!(s.group_sizes(), vec![2, 2]);
        assert!(!s.essential);
        // codimension of a Lawrence configuration is s - r
        assert_eq!(lawrence_block().codimension(), s.s - s.r);
    }

    #[test]
    fn reduced_gale_paper_dual() {
        let b = IntMatrix::from_rows(&[
            vec![-1, 1],
            vec![1, -1],
            vec![1, 0],
            vec![0, 1],
            vec![-1, -1],
        ]);
        let red = reduced_gale(&b);
        assert_eq!(red.pairing, vec![(0, 1)]);
        assert_eq!(red.kept, vec![2, 3, 4]);
        assert_eq!(
            red.reduced,
            IntMatrix::from_rows(&[vec![1, 0], vec![0, 1], vec![-1, -1]])
        );
        // idempotent
        let again = reduced_gale(&red.reduced);
        assert!(again.pairing.is_empty());
        assert_eq!(again.reduced, red.reduced);
    }

    #[test]
    fn reduced_gale_single_pair() {
        let b = IntMatrix::from_rows(&[vec![1, 0], vec![-1, 0]]);
        let red = reduced_gale(&b);
        assert_eq!(red.pairing, vec![(0, 1)]);
        assert!(red.kept.is_empty());
    }

    #[test]
    fn reduced_gale_b2_unchanged() {
        let b2 = IntMatrix::from_rows(&[
            vec![2, 0],
            vec![0, 2],
            vec![-1, 0],
            vec![0, -1],
            vec![-1, -1],
        ]);
        let red = reduced_gale(&b2);
        assert!(red.pairing.is_empty());
        assert_eq!(red.reduced, b2);
    }

    #[test]
    fn reduced_gale_repeated_rows_maximum_matching() {
        let b = IntMatrix::from_rows(&[vec![1, 0], vec![1, 0], vec![-1, 0]]);
        let red = reduced_gale(&b);
        assert_eq!(red.pairing.len(), 1);
        assert_eq!(red.kept.len(), 1);
        assert_eq!(red.reduced, IntMatrix::from_rows(&[vec![1, 0]]));
    }

    #[test]
    fn classify_three_ways() {
        match classify_stable_rational(&running_example()).unwrap() {
            Classification::CayleyEssential { structure, triple, .. } => {
                assert!(structure.essential);
                assert_eq!(triple.len(), 3);
                // exactly one group of three, the rest pairs
                let mut sizes = structure.group_sizes();
                sizes.sort();
                assert_eq!(sizes, vec![2, 3]);
            }
            other => panic!("expected CayleyEssential, got {other:?}"),
        }
        match classify_stable_rational(&lawrence_block()).unwrap() {
            Classification::Lawrence { pairing } => assert_eq!(pairing.len(), 2),
            other => panic!("expected Lawrence, got {other:?}"),
        }
        match classify_stable_rational(&b2_configuration()).unwrap() {
            Classification::NoStableRational { .. } => {}
            other => panic!("expected NoStableRational, got {other:?}"),
        }
    }

    #[test]
    fn classify_pyramid() {
        let c = Configuration::new(IntMatrix::from_rows(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 1, 1],
        ]))
        .unwrap();
        match classify_stable_rational(&c).unwrap() {
            Classification::Pyramid { zero_rows } => assert_eq!(zero_rows, vec![0]),
            other => panic!("expected Pyramid, got {other:?}"),
        }
    }

    #[test]
    fn classify_rejects_wrong_codimension() {
        let c = Configuration::new(IntMatrix::identity(2)).unwrap();
        assert!(classify_stable_rational(&c).is_err());
    }

    #[test]
    fn classification_invariant_under_unimodular_and_permutation() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let base = running_example();
        let tag0 = classify_stable_rational(&base).unwrap().tag();
        for _ in 0..25 {
            // random unimodular 3x3 from elementary operations
            let mut u = IntMatrix::identity(3);
            for _ in 0..6 {
                let i = rng.gen_range(0..3);
                let mut j = rng.gen_range(0..3);
                while j == i {
                    j = rng.gen_range(0..3);
                }
                let k = BigInt::from(rng.gen_range(-2..=2i64));
                for c in 0..3 {
                    let add = &u[(j, c)] * &k;
                    u[(i, c)] += add;
                }
            }
            let mut perm: Vec<usize> = (0..5).collect();
            perm.shuffle(&mut rng);
            let a = base.matrix();
            let mut pa = IntMatrix::zero(3, 5);
            for (newc, &oldc) in perm.iter().enumerate() {
                for r in 0..3 {
                    pa[(r, newc)] = a[(r, oldc)].clone();
                }
            }
            let ua = u.mul(&pa);
            let c = Configuration::new(ua).unwrap();
            assert_eq!(classify_stable_rational(&c).unwrap().tag(), tag0);
        }
    }
}
