//! Exact integer matrices: Hermite and Smith normal forms, kernel bases,
//! and right-equivalence of planar vector configurations.
//!
//! Conventions: `hnf` is the *column* Hermite normal form, `H = M * U`
//! with `U` unimodular.  Kernel bases are column-spans, canonicalized by
//! a second column Hermite reduction so that Gale duals are reproducible
//! across runs.

use crate::arith::extended_gcd;
use crate::error::Error;
use crate::Result;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Build from rows of i64 entries; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        (0..self.cols).map(|c| self[(r, c)].clone()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = &self[(r, k)] * &other[(k, c)];
                    out[(r, c)] += prod;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        (0..self.cols).all(|c| self[(r, c)].is_zero())
    }

    /// i64 view of a row, panicking on overflow (lattice data is small).
    pub fn row_i64(&self, r: usize) -> Vec<i64> {
        (0..self.cols)
            .map(|c| {
                use num::ToPrimitive;
                self[(r, c)].to_i64().expect("matrix entry exceeds i64")
            })
            .collect()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self[(r, c)].clone();
            self[(r, c)] = v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let add = &self[(r, src)] * k;
            self[(r, dst)] += add;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self[(r, c)].clone();
            self[(r, c)] = v;
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let add = &self[(src, c)] * k;
            self[(dst, c)] += add;
        }
    }

    /// Rank via fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut pr = 0;
        for pc in 0..cols {
            if pr >= rows {
                break;
            }
            // find pivot in column pc at row >= pr
            let Some(piv) = (pr..rows).find(|&r| !m[(r, pc)].is_zero()) else {
                continue;
            };
            m.swap_rows(pr, piv);
            for r in pr + 1..rows {
                for c in pc + 1..cols {
                    let v = (&m[(pr, pc)] * &m[(r, c)] - &m[(r, pc)] * &m[(pr, c)]) / &prev;
                    m[(r, c)] = v;
                }
                m[(r, pc)] = BigInt::zero();
            }
            prev = m[(pr, pc)].clone();
            pr += 1;
            rank += 1;
        }
        rank
    }

    /// Determinant of a square matrix, fraction-free.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for p in 0..n - 1 {
            if m[(p, p)].is_zero() {
                let Some(r) = (p + 1..n).find(|&r| !m[(r, p)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(p, r);
                sign = -sign;
            }
            for r in p + 1..n {
                for c in p + 1..n {
                    let v = (&m[(p, p)] * &m[(r, c)] - &m[(r, p)] * &m[(p, c)]) / &prev;
                    m[(r, c)] = v;
                }
                m[(r, p)] = BigInt::zero();
            }
            prev = m[(p, p)].clone();
        }
        m[(n - 1, n - 1)].clone() * sign
    }
}

/// Column Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `H = M * U`.  Pivots are positive, entries to the left of each pivot
/// are reduced into `[0, pivot)`, and zero columns are pushed to the right.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.ncols());
    let (rows, cols) = (h.rows, h.cols);
    let mut c = 0usize;
    for r in 0..rows {
        if c >= cols {
            break;
        }
        if (c..cols).all(|j| h[(r, j)].is_zero()) {
            continue;
        }
        // gcd-reduce row r over columns >= c until only h[(r, c)] is nonzero
        loop {
            // move smallest nonzero |entry| to column c
            let mut best: Option<usize> = None;
            for j in c..cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(j),
                    Some(b) => {
                        if h[(r, j)].abs() < h[(r, b)].abs() {
                            best = Some(j);
                        }
                    }
                }
            }
            let b = best.expect("nonzero entry exists");
            h.swap_cols(c, b);
            u.swap_cols(c, b);
            let mut done = true;
            for j in c + 1..cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = h[(r, j)].div_floor(&h[(r, c)]);
                h.add_col_multiple(j, c, &(-q.clone()));
                u.add_col_multiple(j, c, &(-q));
                if !h[(r, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_negative() {
            h.negate_col(c);
            u.negate_col(c);
        }
        // reduce entries left of the pivot into [0, pivot)
        for j in 0..c {
            let q = h[(r, j)].div_floor(&h[(r, c)]);
            h.add_col_multiple(j, c, &(-q.clone()));
            u.add_col_multiple(j, c, &(-q));
        }
        c += 1;
    }
    (h, u)
}

/// Basis of the integer kernel `{v : M v = 0}` as the columns of an
/// `n x (n - rank)` matrix, canonicalized by column Hermite reduction.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(m);
    let n = m.ncols();
    let zero_cols: Vec<usize> = (0..n)
        .filter(|&j| (0..m.nrows()).all(|r| h[(r, j)].is_zero()))
        .collect();
    let mut k = IntMatrix::zero(n, zero_cols.len());
    for (out_c, &j) in zero_cols.iter().enumerate() {
        for r in 0..n {
            k[(r, out_c)] = u[(r, j)].clone();
        }
    }
    let (kh, _) = hnf(&k);
    kh
}

/// Smith normal form: `D = U * M * V` with `U`, `V` unimodular and `D`
/// diagonal with divisibility `d1 | d2 | ...`.
pub struct Smith {
    pub d: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith(m: &IntMatrix) -> Smith {
    let mut d = m.clone();
    let mut left = IntMatrix::identity(m.nrows());
    let mut right = IntMatrix::identity(m.ncols());
    let n = m.nrows().min(m.ncols());
    let mut t = 0usize;
    while t < n {
        // find a nonzero pivot in the submatrix from (t, t)
        let mut piv: Option<(usize, usize)> = None;
        for r in t..d.rows {
            for c in t..d.cols {
                if !d[(r, c)].is_zero()
                    && piv.map_or(true, |(pr, pc)| d[(r, c)].abs() < d[(pr, pc)].abs())
                {
                    piv = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = piv else { break };
        d.swap_rows(t, pr);
        left.swap_rows(t, pr);
        d.swap_cols(t, pc);
        right.swap_cols(t, pc);
        // clear row and column t
        let mut dirty = true;
        while dirty {
            dirty = false;
            for r in t + 1..d.rows {
                if d[(r, t)].is_zero() {
                    continue;
                }
                let q = d[(r, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(r, t, &(-q.clone()));
                left.add_row_multiple(r, t, &(-q));
                if !d[(r, t)].is_zero() {
                    // remainder smaller than pivot: swap up and restart
                    d.swap_rows(t, r);
                    left.swap_rows(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..d.cols {
                if d[(t, c)].is_zero() {
                    continue;
                }
                let q = d[(t, c)].div_floor(&d[(t, t)]);
                d.add_col_multiple(c, t, &(-q.clone()));
                right.add_col_multiple(c, t, &(-q));
                if !d[(t, c)].is_zero() {
                    d.swap_cols(t, c);
                    right.swap_cols(t, c);
                    dirty = true;
                }
            }
        }
        // enforce divisibility d[t][t] | d[r][c] for the rest
        let mut redo = false;
        'outer: for r in t + 1..d.rows {
            for c in t + 1..d.cols {
                if !(&d[(r, c)] % &d[(t, t)]).is_zero() {
                    // fold row r into row t and restart this pivot
                    d.add_row_multiple(t, r, &BigInt::one());
                    left.add_row_multiple(t, r, &BigInt::one());
                    redo = true;
                    break 'outer;
                }
            }
        }
        if redo {
            continue;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }
    Smith { d, left, right }
}

/// Invariant factors (nonzero diagonal of the Smith form).
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let s = smith(m);
    let n = m.nrows().min(m.ncols());
    (0..n)
        .map(|i| s.d[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect()
}

/// A full-row-rank integer matrix is primitive when its rows span the full
/// lattice, i.e. all Smith invariant factors are 1.
pub fn is_primitive(m: &IntMatrix) -> bool {
    let facs = invariant_factors(m);
    facs.len() == m.nrows().min(m.ncols()) && facs.iter().all(|f| f.is_one())
}

/// Inverse of a unimodular integer matrix (entries stay integral).
pub fn inverse_unimodular(m: &IntMatrix) -> IntMatrix {
    assert_eq!(m.nrows(), m.ncols());
    let n = m.nrows();
    let det = m.det();
    assert!(det.abs().is_one(), "matrix is not unimodular");
    // adjugate / det with det = ±1
    let mut inv = IntMatrix::zero(n, n);
    for r in 0..n {
        for c in 0..n {
            // cofactor C[c][r]
            let mut sub = IntMatrix::zero(n - 1, n - 1);
            let (mut sr, mut sc);
            sr = 0;
            for i in 0..n {
                if i == c {
                    continue;
                }
                sc = 0;
                for j in 0..n {
                    if j == r {
                        continue;
                    }
                    sub[(sr, sc)] = m[(i, j)].clone();
                    sc += 1;
                }
                sr += 1;
            }
            let mut cof = sub.det();
            if (r + c) % 2 == 1 {
                cof = -cof;
            }
            inv[(r, c)] = cof * &det; // det = ±1: adj / det == adj * det
        }
    }
    inv
}

/// Extend a primitive `s x d` matrix to a unimodular `d x d` matrix whose
/// first `s` rows are the input.  Returns `None` when the input is not
/// primitive.
pub fn unimodular_completion(lam: &IntMatrix) -> Option<IntMatrix> {
    let (s, d) = (lam.nrows(), lam.ncols());
    assert!(s <= d);
    let sm = smith(lam);
    // need D = [I_s | 0]
    for i in 0..s {
        if !sm.d[(i, i)].is_one() {
            return None;
        }
    }
    // lam = left^{-1} [I 0] right^{-1}
    let left_inv = inverse_unimodular(&sm.left);
    let right_inv = inverse_unimodular(&sm.right);
    let mut block = IntMatrix::identity(d);
    for r in 0..s {
        for c in 0..s {
            block[(r, c)] = left_inv[(r, c)].clone();
        }
    }
    let w = block.mul(&right_inv);
    // first s rows of w equal lam by construction
    debug_assert!((0..s).all(|r| (0..d).all(|c| w[(r, c)] == lam[(r, c)])));
    Some(w)
}

/// Precomputed Hermite form of a matrix for repeated integer solves of
/// `M x = b`.
pub struct HnfSolver {
    h: IntMatrix,
    u: IntMatrix,
    rows: usize,
    cols: usize,
}

impl HnfSolver {
    pub fn new(m: &IntMatrix) -> Self {
        let (h, u) = hnf(m);
        HnfSolver {
            h,
            u,
            rows: m.nrows(),
            cols: m.ncols(),
        }
    }

    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(self.rows, b.len());
        let mut y = vec![BigInt::zero(); self.cols];
        let mut resid: Vec<BigInt> = b.to_vec();
        let mut col = 0usize;
        for r in 0..self.rows {
            if col < self.cols && !self.h[(r, col)].is_zero() {
                let (q, rem) = resid[r].div_rem(&self.h[(r, col)]);
                if !rem.is_zero() {
                    return None;
                }
                y[col] = q.clone();
                for rr in 0..self.rows {
                    let sub = &self.h[(rr, col)] * &q;
                    resid[rr] -= sub;
                }
                col += 1;
            } else if !resid[r].is_zero() {
                return None;
            }
        }
        if resid.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let n = self.cols;
        let mut x = vec![BigInt::zero(); n];
        for r in 0..n {
            for c in 0..n {
                if !self.u[(r, c)].is_zero() && !y[c].is_zero() {
                    x[r] += &self.u[(r, c)] * &y[c];
                }
            }
        }
        Some(x)
    }
}

/// Solve `M x = b` over the integers.  Returns one solution if any exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    HnfSolver::new(m).solve(b)
}

/// Right-equivalence of two planar row configurations: searches for a row
/// permutation `pi` and an integer matrix `U` with nonzero determinant such
/// that `B = pi(C) * U`.  With `unimodular` set, only `|det U| = 1` counts.
///
/// Returns `(U, pi)` with `pi[i]` the row of `C` mapped onto row `i` of `B`.
pub fn integer_right_equivalent(
    b: &IntMatrix,
    c: &IntMatrix,
    unimodular: bool,
) -> Result<Option<(IntMatrix, Vec<usize>)>> {
    if b.ncols() != 2 || c.ncols() != 2 {
        return Err(Error::Dimension("right equivalence needs 2 columns".into()));
    }
    if b.nrows() != c.nrows() {
        return Ok(None);
    }
    let (rb, rc) = (b.rank(), c.rank());
    if rb != rc {
        return Ok(None);
    }
    let n = b.nrows();
    match rb {
        0 => Ok(Some((IntMatrix::identity(2), (0..n).collect()))),
        1 => Ok(rank1_equivalence(b, c, unimodular)),
        _ => Ok(rank2_equivalence(b, c, unimodular)),
    }
}

fn rows_equal(m: &IntMatrix, r: usize, v: &[BigInt; 2]) -> bool {
    m[(r, 0)] == v[0] && m[(r, 1)] == v[1]
}

/// Perfect matching between rows of `b` and transformed rows of `c`.
fn match_rows(b: &IntMatrix, c_u: &IntMatrix) -> Option<Vec<usize>> {
    let n = b.nrows();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let want = [b[(i, 0)].clone(), b[(i, 1)].clone()];
            (0..n).filter(|&k| rows_equal(c_u, k, &want)).collect()
        })
        .collect();
    // Kuhn's augmenting-path matching
    let mut matched_c: Vec<Option<usize>> = vec![None; n];
    fn try_match(
        i: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        matched_c: &mut [Option<usize>],
    ) -> bool {
        for &k in &adj[i] {
            if seen[k] {
                continue;
            }
            seen[k] = true;
            if matched_c[k].is_none()
                || try_match(matched_c[k].unwrap(), adj, seen, matched_c)
            {
                matched_c[k] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..n {
        let mut seen = vec![false; n];
        if !try_match(i, &adj, &mut seen, &mut matched_c) {
            return None;
        }
    }
    let mut pi = vec![0usize; n];
    for (k, slot) in matched_c.iter().enumerate() {
        pi[slot.unwrap()] = k;
    }
    Some(pi)
}

fn rank2_equivalence(
    b: &IntMatrix,
    c: &IntMatrix,
    unimodular: bool,
) -> Option<(IntMatrix, Vec<usize>)> {
    let n = b.nrows();
    // two independent rows of b
    let (ba, bb) = {
        let mut found = None;
        'search: for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let det = &b[(i, 0)] * &b[(j, 1)] - &b[(i, 1)] * &b[(j, 0)];
                if !det.is_zero() {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        found?
    };
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let det = &c[(i, 0)] * &c[(j, 1)] - &c[(i, 1)] * &c[(j, 0)];
            if det.is_zero() {
                continue;
            }
            // solve [c_i; c_j] U = [b_ba; b_bb] over the rationals
            let m00 = BigRational::from(c[(i, 0)].clone());
            let m01 = BigRational::from(c[(i, 1)].clone());
            let m10 = BigRational::from(c[(j, 0)].clone());
            let m11 = BigRational::from(c[(j, 1)].clone());
            let dr = BigRational::from(det.clone());
            // inverse of [[m00, m01],[m10, m11]] is 1/det [[m11, -m01],[-m10, m00]]
            let rhs = [
                [
                    BigRational::from(b[(ba, 0)].clone()),
                    BigRational::from(b[(ba, 1)].clone()),
                ],
                [
                    BigRational::from(b[(bb, 0)].clone()),
                    BigRational::from(b[(bb, 1)].clone()),
                ],
            ];
            let mut uq = [
                [BigRational::zero(), BigRational::zero()],
                [BigRational::zero(), BigRational::zero()],
            ];
            for col in 0..2 {
                uq[0][col] = (&m11 * &rhs[0][col] - &m01 * &rhs[1][col]) / &dr;
                uq[1][col] = (-&m10 * &rhs[0][col] + &m00 * &rhs[1][col]) / &dr;
            }
            if !uq.iter().flatten().all(|x| x.is_integer()) {
                continue;
            }
            let mut u = IntMatrix::zero(2, 2);
            for r in 0..2 {
                for cc in 0..2 {
                    u[(r, cc)] = uq[r][cc].to_integer();
                }
            }
            let du = u.det();
            if du.is_zero() {
                continue;
            }
            if unimodular && !du.abs().is_one() {
                continue;
            }
            let cu = c.mul(&u);
            if let Some(pi) = match_rows(b, &cu) {
                return Some((u, pi));
            }
        }
    }
    None
}

fn primitive_direction(m: &IntMatrix) -> Option<(Vec<(usize, BigInt)>, [BigInt; 2])> {
    // all nonzero rows proportional; return scalars and primitive direction
    let n = m.nrows();
    let first = (0..n).find(|&r| !m.row_is_zero(r))?;
    let g = m[(first, 0)].gcd(&m[(first, 1)]);
    let dir = [&m[(first, 0)] / &g, &m[(first, 1)] / &g];
    let mut scalars = Vec::new();
    for r in 0..n {
        if m.row_is_zero(r) {
            continue;
        }
        // m_r = k * dir
        let k = if !dir[0].is_zero() {
            let (q, rem) = m[(r, 0)].div_rem(&dir[0]);
            if !rem.is_zero() {
                return None;
            }
            q
        } else {
            let (q, rem) = m[(r, 1)].div_rem(&dir[1]);
            if !rem.is_zero() {
                return None;
            }
            q
        };
        if &dir[0] * &k != m[(r, 0)] || &dir[1] * &k != m[(r, 1)] {
            return None;
        }
        scalars.push((r, k));
    }
    Some((scalars, dir))
}

fn rank1_equivalence(
    b: &IntMatrix,
    c: &IntMatrix,
    unimodular: bool,
) -> Option<(IntMatrix, Vec<usize>)> {
    let n = b.nrows();
    let zeros_b: Vec<usize> = (0..n).filter(|&r| b.row_is_zero(r)).collect();
    let zeros_c: Vec<usize> = (0..n).filter(|&r| c.row_is_zero(r)).collect();
    if zeros_b.len() != zeros_c.len() {
        return None;
    }
    let (sb, gb) = primitive_direction(b)?;
    let (sc, gc) = primitive_direction(c)?;
    // candidates mu: integer with {beta} = mu * {gamma} as multisets
    let beta0 = &sb[0].1;
    for (_, gamma) in &sc {
        if gamma.is_zero() {
            continue;
        }
        let (mu, rem) = beta0.div_rem(gamma);
        if !rem.is_zero() || mu.is_zero() {
            continue;
        }
        // multiset check
        let mut want: Vec<BigInt> = sb.iter().map(|(_, k)| k.clone()).collect();
        let mut have: Vec<BigInt> = sc.iter().map(|(_, k)| &mu * k).collect();
        want.sort();
        have.sort();
        if want != have {
            continue;
        }
        if unimodular && !mu.abs().is_one() {
            continue;
        }
        // build U with gc * U = mu * gb, det != 0
        // complete gc to unimodular [gc; h], det = 1
        let (g, x, y) = extended_gcd(&gc[0], &gc[1]);
        debug_assert!(g.is_one());
        let h = [-y, x]; // det [gc; h] = gc0*x + gc1*y = 1
        let m = IntMatrix::from_bigint_rows(vec![
            vec![gc[0].clone(), gc[1].clone()],
            vec![h[0].clone(), h[1].clone()],
        ]);
        let m_inv = inverse_unimodular(&m);
        // w with gb x w = 1
        let (g2, x2, y2) = extended_gcd(&gb[0], &gb[1]);
        debug_assert!(g2.is_one());
        let w = [-y2.clone(), x2.clone()];
        let top = [&mu * &gb[0], &mu * &gb[1]];
        let target = IntMatrix::from_bigint_rows(vec![
            vec![top[0].clone(), top[1].clone()],
            vec![w[0].clone(), w[1].clone()],
        ]);
        let u = m_inv.mul(&target);
        let du = u.det();
        if du.is_zero() || (unimodular && !du.abs().is_one()) {
            continue;
        }
        let cu = c.mul(&u);
        if let Some(pi) = match_rows(b, &cu) {
            return Some((u, pi));
        }
    }
    None
}
