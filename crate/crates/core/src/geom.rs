//! Exact planar linear geometry: strict/non-strict feasibility by
//! Fourier-Motzkin elimination, homogeneous cones as intersections of
//! half-planes, and integer convex hulls for Newton polytopes.

use crate::arith::{cross, dot, primitive2, sign_of};
use num::{BigInt, BigRational, One, Zero};

/// Constraint `a x + b y + c  (>|>=)  0`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub strict: bool,
}

impl Constraint {
    pub fn from_i64(a: i64, b: i64, c: i64, strict: bool) -> Self {
        Constraint {
            a: BigRational::from(BigInt::from(a)),
            b: BigRational::from(BigInt::from(b)),
            c: BigRational::from(BigInt::from(c)),
            strict,
        }
    }
}

#[derive(Clone, Debug)]
struct Bound1 {
    // coef * x + cst (>|>=) 0
    coef: BigRational,
    cst: BigRational,
    strict: bool,
}

fn feasible_1d(bounds: &[Bound1]) -> Option<BigRational> {
    let mut lo: Option<(BigRational, bool)> = None; // x (>|>=) value
    let mut hi: Option<(BigRational, bool)> = None;
    for b in bounds {
        match sign_of(&BigRational::from(b.coef.numer().clone())) {
            0 => {
                let s = sign_of(&b.cst);
                if s < 0 || (s == 0 && b.strict) {
                    return None;
                }
            }
            1 => {
                let v = -&b.cst / &b.coef;
                let better = match &lo {
                    None => true,
                    Some((cur, cs)) => v > *cur || (v == *cur && b.strict && !cs),
                };
                if better {
                    lo = Some((v, b.strict));
                }
            }
            _ => {
                let v = -&b.cst / &b.coef;
                let better = match &hi {
                    None => true,
                    Some((cur, cs)) => v < *cur || (v == *cur && b.strict && !cs),
                };
                if better {
                    hi = Some((v, b.strict));
                }
            }
        }
    }
    match (&lo, &hi) {
        (None, None) => Some(BigRational::zero()),
        (Some((l, _)), None) => Some(l + BigRational::one()),
        (None, Some((h, _))) => Some(h - BigRational::one()),
        (Some((l, ls)), Some((h, hs))) => {
            if l < h {
                Some((l + h) / BigRational::from(BigInt::from(2)))
            } else if l == h && !ls && !hs {
                Some(l.clone())
            } else {
                None
            }
        }
    }
}

/// Exact feasibility of a system of planar constraints; returns a witness.
pub fn feasible_point(constraints: &[Constraint]) -> Option<(BigRational, BigRational)> {
    // split on the y coefficient
    let mut x_only: Vec<Bound1> = Vec::new();
    let mut lowers: Vec<&Constraint> = Vec::new(); // b > 0: y >= (-a x - c)/b
    let mut uppers: Vec<&Constraint> = Vec::new(); // b < 0
    for con in constraints {
        match sign_of(&con.b) {
            0 => x_only.push(Bound1 {
                coef: con.a.clone(),
                cst: con.c.clone(),
                strict: con.strict,
            }),
            1 => lowers.push(con),
            _ => uppers.push(con),
        }
    }
    // eliminate y: every (lower, upper) pair gives an x constraint
    for lo in &lowers {
        for up in &uppers {
            // upper(x) - lower(x) (>|>=) 0 where bound(x) = (-a x - c)/b
            let coef = -&up.a / &up.b + &lo.a / &lo.b;
            let cst = -&up.c / &up.b + &lo.c / &lo.b;
            x_only.push(Bound1 {
                coef,
                cst,
                strict: lo.strict || up.strict,
            });
        }
    }
    let x = feasible_1d(&x_only)?;
    // now solve for y at this x
    let y_bounds: Vec<Bound1> = constraints
        .iter()
        .filter(|c| !c.b.is_zero())
        .map(|c| Bound1 {
            coef: c.b.clone(),
            cst: &c.a * &x + &c.c,
            strict: c.strict,
        })
        .collect();
    let y = feasible_1d(&y_bounds)?;
    Some((x, y))
}

/// Closed homogeneous cone in the plane, the intersection of half-planes
/// `{ y : <n, y> >= 0 }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cone2 {
    Full,
    /// `{ y : <normal, y> >= 0 }`
    Half { normal: [i64; 2] },
    /// 2-dimensional pointed cone spanned by two rays, `cross(r1, r2) > 0`.
    Wedge { r1: [i64; 2], r2: [i64; 2] },
    Line { dir: [i64; 2] },
    Ray { dir: [i64; 2] },
    Zero,
}

impl Cone2 {
    pub fn dim(&self) -> usize {
        match self {
            Cone2::Full | Cone2::Half { .. } | Cone2::Wedge { .. } => 2,
            Cone2::Line { .. } | Cone2::Ray { .. } => 1,
            Cone2::Zero => 0,
        }
    }

    /// Extreme/representative ray directions (primitive).
    pub fn rays(&self) -> Vec<[i64; 2]> {
        match self {
            Cone2::Full => vec![],
            Cone2::Half { normal } => {
                let p = [-normal[1], normal[0]];
                vec![primitive2(p), primitive2([-p[0], -p[1]])]
            }
            Cone2::Wedge { r1, r2 } => vec![*r1, *r2],
            Cone2::Line { dir } => vec![*dir, [-dir[0], -dir[1]]],
            Cone2::Ray { dir } => vec![*dir],
            Cone2::Zero => vec![],
        }
    }

    pub fn contains(&self, d: [i64; 2]) -> bool {
        match self {
            Cone2::Full => true,
            Cone2::Half { normal } => dot(*normal, d) >= 0,
            Cone2::Wedge { r1, r2 } => cross(*r1, d) >= 0 && cross(d, *r2) >= 0,
            Cone2::Line { dir } => cross(*dir, d) == 0,
            Cone2::Ray { dir } => cross(*dir, d) == 0 && dot(*dir, d) >= 0,
            Cone2::Zero => d == [0, 0],
        }
    }

    /// An integer direction in the relative interior, when the cone is
    /// 2-dimensional.
    pub fn interior_direction(&self) -> Option<[i64; 2]> {
        match self {
            Cone2::Full => Some([1, 0]),
            Cone2::Half { normal } => Some(*normal),
            Cone2::Wedge { r1, r2 } => Some(primitive2([r1[0] + r2[0], r1[1] + r2[1]])),
            _ => None,
        }
    }
}

/// Intersect half-planes `{ y : <n_i, y> >= 0 }`.
pub fn cone_from_normals(normals: &[[i64; 2]]) -> Cone2 {
    let normals: Vec<[i64; 2]> = normals
        .iter()
        .copied()
        .filter(|n| *n != [0, 0])
        .collect();
    if normals.is_empty() {
        return Cone2::Full;
    }
    // lineality: directions with <n_i, d> = 0 for all i
    let all_parallel = normals
        .windows(2)
        .all(|w| cross(w[0], w[1]) == 0);
    if all_parallel {
        let n0 = primitive2(normals[0]);
        let has_pos = normals.iter().any(|n| dot(*n, n0) > 0);
        let has_neg = normals.iter().any(|n| dot(*n, n0) < 0);
        let dir = primitive2([-n0[1], n0[0]]);
        return match (has_pos, has_neg) {
            (true, true) => Cone2::Line { dir },
            (true, false) => Cone2::Half { normal: n0 },
            (false, true) => Cone2::Half { normal: [-n0[0], -n0[1]] },
            (false, false) => unreachable!("nonzero normals"),
        };
    }
    // pointed case: candidate rays are the boundary directions of each half-plane
    let mut cands: Vec<[i64; 2]> = Vec::new();
    for n in &normals {
        for p in [[-n[1], n[0]], [n[1], -n[0]]] {
            let p = primitive2(p);
            if normals.iter().all(|m| dot(*m, p) >= 0) && !cands.contains(&p) {
                cands.push(p);
            }
        }
    }
    match cands.len() {
        0 => Cone2::Zero,
        1 => Cone2::Ray { dir: cands[0] },
        _ => {
            // all candidates lie in a half-plane; find angular extremes
            let mut right = cands[0];
            let mut left = cands[0];
            for &c in &cands[1..] {
                if cross(c, right) > 0 {
                    right = c;
                }
                if cross(left, c) > 0 {
                    left = c;
                }
            }
            if right == left {
                Cone2::Ray { dir: right }
            } else if cross(right, left) > 0 {
                Cone2::Wedge { r1: right, r2: left }
            } else {
                // antipodal extremes with a 2-D feasible set cannot occur for
                // a pointed intersection; treat as ray pair on a line
                Cone2::Line { dir: right }
            }
        }
    }
}

/// Convex hull of integer points, counterclockwise, no interior collinear
/// points.  Degenerate hulls return 1 (point) or 2 (segment endpoints)
/// vertices.
pub fn convex_hull(points: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts: Vec<[i64; 2]> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cr = |o: [i64; 2], a: [i64; 2], b: [i64; 2]| {
        cross([a[0] - o[0], a[1] - o[1]], [b[0] - o[0], b[1] - o[1]])
    };
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cr(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cr(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.is_empty() {
        // all collinear: keep the two extremes
        vec![pts[0], *pts.last().unwrap()]
    } else {
        lower
    }
}

/// For a vertex `v0` of the hull, the primitive directions of its two
/// adjacent edges, counterclockwise.  For segment hulls one direction is
/// returned; for point hulls none.
pub fn vertex_edge_dirs(hull: &[[i64; 2]], v0: [i64; 2]) -> Option<Vec<[i64; 2]>> {
    let idx = hull.iter().position(|&p| p == v0)?;
    match hull.len() {
        1 => Some(vec![]),
        2 => {
            let other = hull[1 - idx];
            Some(vec![primitive2([other[0] - v0[0], other[1] - v0[1]])])
        }
        n => {
            let next = hull[(idx + 1) % n];
            let prev = hull[(idx + n - 1) % n];
            Some(vec![
                primitive2([next[0] - v0[0], next[1] - v0[1]]),
                primitive2([prev[0] - v0[0], prev[1] - v0[1]]),
            ])
        }
    }
}

/// Smallest-effort integer point `w` with `<nu1, w> <= c1` and `<nu2, w> <= c2`,
/// for independent normals; walks from a rational corner along `-step`.
pub fn integer_point_below(
    nu1: [i64; 2],
    nu2: [i64; 2],
    c1: &BigRational,
    c2: &BigRational,
    step: [i64; 2],
) -> [i64; 2] {
    let det = cross(nu1, nu2);
    assert!(det != 0, "normals must be independent");
    // rational corner r: <nu1, r> = c1, <nu2, r> = c2
    let det_r = BigRational::from(BigInt::from(det));
    let x = (c1 * BigRational::from(BigInt::from(nu2[1]))
        - c2 * BigRational::from(BigInt::from(nu1[1])))
        / &det_r;
    let y = (c2 * BigRational::from(BigInt::from(nu1[0]))
        - c1 * BigRational::from(BigInt::from(nu2[0])))
        / &det_r;
    let mut w = [x.floor().to_integer(), y.floor().to_integer()];
    let evalr = |w: &[BigInt; 2], nu: [i64; 2]| -> BigRational {
        BigRational::from(&w[0] * BigInt::from(nu[0]) + &w[1] * BigInt::from(nu[1]))
    };
    let mut w_big = [w[0].clone(), w[1].clone()];
    let mut guard = 0;
    while evalr(&w_big, nu1) > *c1 || evalr(&w_big, nu2) > *c2 {
        w_big[0] -= BigInt::from(step[0]);
        w_big[1] -= BigInt::from(step[1]);
        guard += 1;
        assert!(guard < 10_000, "corner walk failed to converge");
    }
    use num::ToPrimitive;
    w = [w_big[0].clone(), w_big[1].clone()];
    [w[0].to_i64().unwrap(), w[1].to_i64().unwrap()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn feasibility_simple_wedge() {
        // x > 0, y > 0, x + y < 1
        let cons = vec![
            Constraint::from_i64(1, 0, 0, true),
            Constraint::from_i64(0, 1, 0, true),
            Constraint::from_i64(-1, -1, 1, true),
        ];
        let (x, y) = feasible_point(&cons).unwrap();
        assert!(x > BigRational::zero() && y > BigRational::zero());
        assert!(&x + &y < BigRational::one());
    }

    #[test]
    fn infeasible_system() {
        // x >= 1 and x <= 0
        let cons = vec![
            Constraint::from_i64(1, 0, -1, false),
            Constraint::from_i64(-1, 0, 0, false),
        ];
        assert!(feasible_point(&cons).is_none());
        // boundary point allowed when both weak: x >= 1, x <= 1
        let cons2 = vec![
            Constraint::from_i64(1, 0, -1, false),
            Constraint::from_i64(-1, 0, 1, false),
        ];
        let (x, _) = feasible_point(&cons2).unwrap();
        assert_eq!(x, ratio(1, 1));
    }

    #[test]
    fn strict_closure_boundary_rejected() {
        let cons = vec![
            Constraint::from_i64(1, 0, -1, true),
            Constraint::from_i64(-1, 0, 1, false),
        ];
        assert!(feasible_point(&cons).is_none());
    }

    #[test]
    fn running_example_all_negative_region() {
        // l1 = x2 - x1 - 1 < 0 etc: negated forms
        let forms: [[i64; 3]; 5] = [
            [-1, 1, -1],
            [1, -1, 0],
            [1, 0, 0],
            [0, 1, 0],
            [-1, -1, -1],
        ];
        let cons: Vec<Constraint> = forms
            .iter()
            .map(|f| Constraint::from_i64(-f[0], -f[1], -f[2], true))
            .collect();
        let (x, y) = feasible_point(&cons).unwrap();
        for f in &forms {
            let v = ratio(f[0], 1) * &x + ratio(f[1], 1) * &y + ratio(f[2], 1);
            assert!(v < BigRational::zero());
        }
    }

    #[test]
    fn cone_quadrant() {
        let c = cone_from_normals(&[[1, 0], [0, 1]]);
        assert_eq!(c, Cone2::Wedge { r1: [1, 0], r2: [0, 1] });
        assert_eq!(c.dim(), 2);
        assert!(c.contains([3, 5]));
        assert!(!c.contains([-1, 2]));
        assert_eq!(c.interior_direction(), Some([1, 1]));
    }

    #[test]
    fn cone_degenerate_cases() {
        assert_eq!(cone_from_normals(&[]), Cone2::Full);
        assert_eq!(
            cone_from_normals(&[[1, 0]]),
            Cone2::Half { normal: [1, 0] }
        );
        assert_eq!(
            cone_from_normals(&[[1, 0], [-1, 0]]),
            Cone2::Line { dir: [0, 1] }
        );
        // opposite wedges meet in a ray
        let c = cone_from_normals(&[[1, 0], [-1, 1]]);
        assert_eq!(c.dim(), 2);
        let r = cone_from_normals(&[[1, 0], [-1, 0], [0, 1]]);
        assert_eq!(r, Cone2::Ray { dir: [0, 1] });
        assert_eq!(cone_from_normals(&[[1, 0], [-1, 0], [0, 1], [0, -1]]), Cone2::Zero);
    }

    #[test]
    fn cone_running_example_sigma1() {
        // sigma(I1) = {m1 >= m2 >= 0}: recession normals -b1 = (1,-1), -b5 = (1,1),
        // +b2 = (1,-1), +b3 = (1,0), +b4 = (0,1)
        let c = cone_from_normals(&[[1, -1], [1, -1], [1, 0], [0, 1], [1, 1]]);
        match c {
            Cone2::Wedge { r1, r2 } => {
                let mut rs = [r1, r2];
                rs.sort();
                assert_eq!(rs, [[1, 0], [1, 1]]);
            }
            other => panic!("expected wedge, got {other:?}"),
        }
    }

    #[test]
    fn hull_square_and_segment() {
        let h = convex_hull(&[[0, 0], [2, 0], [2, 2], [0, 2], [1, 1]]);
        assert_eq!(h.len(), 4);
        assert!(h.contains(&[0, 0]) && h.contains(&[2, 2]));
        let s = convex_hull(&[[0, 0], [1, 1], [2, 2], [3, 3]]);
        assert_eq!(s, vec![[0, 0], [3, 3]]);
    }

    #[test]
    fn corner_point_dominates() {
        let w = integer_point_below([1, 0], [0, 1], &ratio(5, 2), &ratio(-3, 2), [1, 1]);
        assert!(w[0] <= 2 && w[1] <= -2);
    }
}
