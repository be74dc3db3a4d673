//! The three supported curves — projective line, elliptic in short
//! Weierstrass form, and Hermitian — with exactly one place at infinity
//! each, plus everything the code constructions need from them: rational
//! point enumeration, the elliptic group law, graded bases of the function
//! spaces L(m·P∞), and evaluation-support bookkeeping (x-fibers and the
//! derivative values h'(α) used by the function-based duals).

use std::collections::HashMap;
use std::sync::Arc;

use crate::gf::{Fe, Field};
use crate::{Error, Result};

/// An affine rational point. Points on the line carry no y.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    pub x: Fe,
    pub y: Option<Fe>,
}

impl Point {
    pub fn affine(x: Fe, y: Fe) -> Point {
        Point { x, y: Some(y) }
    }

    pub fn on_line(x: Fe) -> Point {
        Point { x, y: None }
    }
}

/// Point of the elliptic group, including the identity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EcPoint {
    Infinity,
    Affine(Fe, Fe),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// P^1; affine coordinate x, one point at infinity.
    Line,
    /// y^2 = x^3 + ax + b, nonsingular, odd characteristic.
    Elliptic { a: Fe, b: Fe },
    /// y^{q0} + y = x^{q0+1} over GF(q0^2).
    Hermitian { q0: u32 },
}

/// One basis function of L(m·P∞): the monomial x^a y^b with its pole order
/// at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub x_exp: u32,
    pub y_exp: u32,
    pub pole_order: usize,
}

/// A graded basis of L(m·P∞), sorted by strictly increasing pole order.
#[derive(Clone, Debug)]
pub struct RrBasis {
    pub m: usize,
    pub monomials: Vec<Monomial>,
}

impl RrBasis {
    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    /// The basis element of highest pole order.
    pub fn top(&self) -> &Monomial {
        self.monomials.last().expect("basis contains at least 1")
    }
}

#[derive(Clone)]
pub struct Curve {
    field: Arc<Field>,
    family: Family,
    genus: usize,
}

impl Curve {
    pub fn line(field: Arc<Field>) -> Curve {
        Curve {
            field,
            family: Family::Line,
            genus: 0,
        }
    }

    pub fn elliptic(field: Arc<Field>, a: Fe, b: Fe) -> Result<Curve> {
        field.el(a.0 as u64)?;
        field.el(b.0 as u64)?;
        // Nonsingular iff 4a^3 + 27b^2 != 0.
        let f = &field;
        let disc = f.add(
            f.mul(f.from_int(4), f.pow(a, 3)),
            f.mul(f.from_int(27), f.pow(b, 2)),
        );
        if disc.is_zero() {
            return Err(Error::BadCurve(format!(
                "y^2 = x^3 + {}x + {} is singular (4a^3 + 27b^2 = 0)",
                a.0, b.0
            )));
        }
        Ok(Curve {
            field,
            family: Family::Elliptic { a, b },
            genus: 1,
        })
    }

    pub fn hermitian(field: Arc<Field>, q0: u32) -> Result<Curve> {
        if q0 < 2 || q0 as u64 * q0 as u64 != field.q() as u64 {
            return Err(Error::BadCurve(format!(
                "Hermitian curve needs q = q0^2; got q0 = {q0} over GF({})",
                field.q()
            )));
        }
        let genus = (q0 as usize) * (q0 as usize - 1) / 2;
        Ok(Curve {
            field,
            family: Family::Hermitian { q0 },
            genus,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Each supported curve has exactly one place at infinity.
    pub fn places_at_infinity(&self) -> usize {
        1
    }

    pub fn contains(&self, p: &Point) -> bool {
        let f = &self.field;
        if p.x.0 >= f.q() {
            return false;
        }
        match (&self.family, p.y) {
            (Family::Line, None) => true,
            (Family::Line, Some(_)) => false,
            (Family::Elliptic { a, b }, Some(y)) => {
                y.0 < f.q() && f.mul(y, y) == self.elliptic_rhs(p.x, *a, *b)
            }
            (Family::Hermitian { q0 }, Some(y)) => {
                y.0 < f.q()
                    && f.add(f.pow(y, *q0 as u64), y) == f.pow(p.x, *q0 as u64 + 1)
            }
            (_, None) => false,
        }
    }

    fn elliptic_rhs(&self, x: Fe, a: Fe, b: Fe) -> Fe {
        let f = &self.field;
        f.add(f.add(f.pow(x, 3), f.mul(a, x)), b)
    }

    /// All affine rational points, ordered by ascending (x, y) index.
    pub fn enumerate_points(&self) -> Vec<Point> {
        let f = &self.field;
        match &self.family {
            Family::Line => f.elements().map(Point::on_line).collect(),
            Family::Elliptic { a, b } => {
                let mut out = Vec::new();
                for x in f.elements() {
                    let rhs = self.elliptic_rhs(x, *a, *b);
                    if rhs.is_zero() {
                        out.push(Point::affine(x, Fe::ZERO));
                    } else if let Some(r) = f.sqrt(rhs) {
                        let s = f.neg(r);
                        let (lo, hi) = if r.0 < s.0 { (r, s) } else { (s, r) };
                        out.push(Point::affine(x, lo));
                        out.push(Point::affine(x, hi));
                    }
                }
                out
            }
            Family::Hermitian { q0 } => {
                // y -> y^{q0} + y is q0-to-1 onto the subfield of norms;
                // bucket once, then look fibers up per x.
                let mut buckets: HashMap<Fe, Vec<Fe>> = HashMap::new();
                for y in f.elements() {
                    buckets
                        .entry(f.add(f.pow(y, *q0 as u64), y))
                        .or_default()
                        .push(y);
                }
                let mut out = Vec::new();
                for x in f.elements() {
                    if let Some(ys) = buckets.get(&f.pow(x, *q0 as u64 + 1)) {
                        for &y in ys {
                            out.push(Point::affine(x, y));
                        }
                    }
                }
                out
            }
        }
    }

    /// Number of rational points including the place at infinity.
    pub fn point_count(&self) -> u64 {
        self.enumerate_points().len() as u64 + 1
    }

    fn ec_params(&self) -> Result<(Fe, Fe)> {
        match self.family {
            Family::Elliptic { a, b } => Ok((a, b)),
            _ => Err(Error::Unsupported(
                "the group law is defined on elliptic curves only".into(),
            )),
        }
    }

    fn ec_contains(&self, p: EcPoint) -> bool {
        match p {
            EcPoint::Infinity => true,
            EcPoint::Affine(x, y) => self.contains(&Point::affine(x, y)),
        }
    }

    /// Chord-tangent addition.
    pub fn ec_add(&self, p: EcPoint, q: EcPoint) -> Result<EcPoint> {
        let (a, _) = self.ec_params()?;
        if !self.ec_contains(p) || !self.ec_contains(q) {
            return Err(Error::PointOffCurve(format!("{p:?} or {q:?}")));
        }
        let f = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (EcPoint::Infinity, _) => return Ok(q),
            (_, EcPoint::Infinity) => return Ok(p),
            (EcPoint::Affine(x1, y1), EcPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let s = if x1 != x2 {
            f.div(f.sub(y2, y1), f.sub(x2, x1))?
        } else if y1 == f.neg(y2) {
            return Ok(EcPoint::Infinity);
        } else {
            // Tangent: (3x^2 + a) / 2y. y1 != 0 here since y1 = -y1 was
            // excluded above.
            let num = f.add(f.mul(f.from_int(3), f.mul(x1, x1)), a);
            f.div(num, f.mul(f.from_int(2), y1))?
        };
        let x3 = f.sub(f.sub(f.mul(s, s), x1), x2);
        let y3 = f.sub(f.mul(s, f.sub(x1, x3)), y1);
        Ok(EcPoint::Affine(x3, y3))
    }

    pub fn ec_neg(&self, p: EcPoint) -> EcPoint {
        match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine(x, y) => EcPoint::Affine(x, self.field.neg(y)),
        }
    }

    /// n·P by double-and-add.
    pub fn ec_scalar_mul(&self, n: u64, p: EcPoint) -> Result<EcPoint> {
        let mut acc = EcPoint::Infinity;
        let mut base = p;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.ec_add(acc, base)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.ec_add(base, base)?;
            }
        }
        Ok(acc)
    }

    /// The unique monomial x^a y^b with pole order exactly `n`, if `n` is a
    /// pole number (non-gap) of the Weierstrass semigroup at infinity.
    pub fn monomial_for_pole(&self, n: usize) -> Option<Monomial> {
        let mono = |x_exp: usize, y_exp: usize| Monomial {
            x_exp: x_exp as u32,
            y_exp: y_exp as u32,
            pole_order: n,
        };
        match self.family {
            Family::Line => Some(mono(n, 0)),
            Family::Elliptic { .. } => {
                if n == 1 {
                    None
                } else if n % 2 == 0 {
                    Some(mono(n / 2, 0))
                } else {
                    Some(mono((n - 3) / 2, 1))
                }
            }
            Family::Hermitian { q0 } => {
                let q0 = q0 as usize;
                let b = n % q0;
                if n < b * (q0 + 1) {
                    return None;
                }
                Some(mono((n - b * (q0 + 1)) / q0, b))
            }
        }
    }

    pub fn is_pole_number(&self, n: usize) -> bool {
        self.monomial_for_pole(n).is_some()
    }

    /// The graded monomial basis of L(m·P∞).
    pub fn rr_basis(&self, m: usize) -> RrBasis {
        let monomials: Vec<Monomial> = (0..=m)
            .filter_map(|n| self.monomial_for_pole(n))
            .collect();
        debug_assert!(
            m + 1 < 2 * self.genus || monomials.len() == m + 1 - self.genus,
            "dimension must be m - g + 1 once m >= 2g - 1"
        );
        RrBasis { m, monomials }
    }

    /// Value of a basis monomial at an affine point.
    pub fn evaluate(&self, mono: &Monomial, p: &Point) -> Fe {
        let f = &self.field;
        let xv = f.pow(p.x, mono.x_exp as u64);
        if mono.y_exp == 0 {
            return xv;
        }
        let y = p.y.expect("monomials in y require a point with y");
        f.mul(xv, f.pow(y, mono.y_exp as u64))
    }

    pub fn fmt_point(&self, p: &Point) -> String {
        match p.y {
            None => self.field.fmt_el(p.x),
            Some(y) => format!("({} : {})", self.field.fmt_el(p.x), self.field.fmt_el(y)),
        }
    }
}

/// How to pick the evaluation support.
#[derive(Clone, Debug)]
pub enum SupportRecipe {
    /// Every affine rational point, in enumeration order.
    AllAffine,
    /// Only affine points lying in complete x-fibers (for elliptic curves
    /// this drops the y = 0 points); `take` keeps the first so many fibers.
    CompleteFibers { take: Option<usize> },
    /// P, 2P, …, count·P in the elliptic group.
    Multiples { base: Point, count: usize },
    Explicit(Vec<Point>),
}

/// An x-fiber of the support: which support indices share the coordinate α.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub alpha: Fe,
    pub members: Vec<usize>,
}

/// An ordered list of distinct affine points with fiber bookkeeping.
#[derive(Clone)]
pub struct Support {
    field: Arc<Field>,
    points: Vec<Point>,
    fibers: Vec<Fiber>,
    fiber_complete: bool,
}

impl Support {
    /// Wrap an explicit point list. All points must be distinct, affine,
    /// and on the curve.
    pub fn new(curve: &Curve, points: &[Point]) -> Result<Support> {
        if points.is_empty() {
            return Err(Error::BadSupport("support is empty".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for p in points {
            if !curve.contains(p) {
                return Err(Error::PointOffCurve(curve.fmt_point(p)));
            }
            if !seen.insert(*p) {
                return Err(Error::BadSupport(format!(
                    "duplicate point {}",
                    curve.fmt_point(p)
                )));
            }
        }
        let mut fibers: Vec<Fiber> = Vec::new();
        for (i, p) in points.iter().enumerate() {
            match fibers.iter_mut().find(|f| f.alpha == p.x) {
                Some(f) => f.members.push(i),
                None => fibers.push(Fiber {
                    alpha: p.x,
                    members: vec![i],
                }),
            }
        }
        let full = match curve.family() {
            Family::Line => 1,
            Family::Elliptic { .. } => 2,
            Family::Hermitian { q0 } => *q0 as usize,
        };
        let fiber_complete = fibers.iter().all(|f| f.members.len() == full);
        Ok(Support {
            field: curve.field().clone(),
            points: points.to_vec(),
            fibers,
            fiber_complete,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    /// Does every x-fiber of the support contain all points of the curve
    /// above it (all in complete pairs/cosets)?
    pub fn fiber_complete(&self) -> bool {
        self.fiber_complete
    }

    /// h'(α) where h = Π over fiber x-values (x − α_j): the product of
    /// (α − α_j) over the other fibers. Defined for fiber-complete supports.
    pub fn h_prime(&self, alpha: Fe) -> Result<Fe> {
        if !self.fiber_complete {
            return Err(Error::FiberIncomplete(
                "h' is used only with fiber-complete supports".into(),
            ));
        }
        if !self.fibers.iter().any(|f| f.alpha == alpha) {
            return Err(Error::BadSupport(format!(
                "α index {} is not a fiber of this support",
                alpha.0
            )));
        }
        let f = &self.field;
        let mut acc = Fe::ONE;
        for fb in &self.fibers {
            if fb.alpha != alpha {
                acc = f.mul(acc, f.sub(alpha, fb.alpha));
            }
        }
        Ok(acc)
    }
}

/// Materialize a support recipe on a curve.
pub fn make_support(curve: &Curve, recipe: &SupportRecipe) -> Result<Support> {
    match recipe {
        SupportRecipe::AllAffine => Support::new(curve, &curve.enumerate_points()),
        SupportRecipe::CompleteFibers { take } => {
            let all = Support::new(curve, &curve.enumerate_points())?;
            let full = match curve.family() {
                Family::Line => 1,
                Family::Elliptic { .. } => 2,
                Family::Hermitian { q0 } => *q0 as usize,
            };
            let mut kept = Vec::new();
            let mut taken = 0usize;
            for fb in all.fibers() {
                if fb.members.len() != full {
                    continue;
                }
                if let Some(t) = take {
                    if taken == *t {
                        break;
                    }
                }
                taken += 1;
                kept.extend(fb.members.iter().map(|&i| all.points()[i]));
            }
            if let Some(t) = take {
                if taken < *t {
                    return Err(Error::BadSupport(format!(
                        "asked for {t} complete fibers but the curve only has {taken}"
                    )));
                }
            }
            Support::new(curve, &kept)
        }
        SupportRecipe::Multiples { base, count } => {
            let y = base
                .y
                .ok_or_else(|| Error::BadSupport("multiples need an affine base point".into()))?;
            let base_ec = EcPoint::Affine(base.x, y);
            let mut pts = Vec::with_capacity(*count);
            let mut cur = EcPoint::Infinity;
            for i in 1..=*count {
                cur = curve.ec_add(cur, base_ec)?;
                match cur {
                    EcPoint::Infinity => {
                        return Err(Error::BadSupport(format!(
                            "{i}·P is the point at infinity; the base has order {i}"
                        )))
                    }
                    EcPoint::Affine(x, y) => pts.push(Point::affine(x, y)),
                }
            }
            Support::new(curve, &pts)
        }
        SupportRecipe::Explicit(pts) => Support::new(curve, pts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn gf9_curve() -> Curve {
        // y^2 = x^3 + x over GF(9)
        let f = make_field(3, 2).unwrap();
        Curve::elliptic(f, Fe::ONE, Fe::ZERO).unwrap()
    }

    fn gf19_curve() -> Curve {
        // y^2 = x^3 - x + 4 over GF(19)
        let f = make_field(19, 1).unwrap();
        Curve::elliptic(f.clone(), f.from_int(-1), f.from_int(4)).unwrap()
    }

    fn herm3_curve() -> Curve {
        let f = make_field(3, 2).unwrap();
        Curve::hermitian(f, 3).unwrap()
    }

    #[test]
    fn point_counts() {
        assert_eq!(gf9_curve().point_count(), 16);
        assert_eq!(gf19_curve().point_count(), 23);
        assert_eq!(herm3_curve().point_count(), 28);
        let line = Curve::line(make_field(3, 2).unwrap());
        assert_eq!(line.point_count(), 10);
    }

    #[test]
    fn enumeration_is_sorted_and_on_curve() {
        for c in [gf9_curve(), gf19_curve(), herm3_curve()] {
            let pts = c.enumerate_points();
            for p in &pts {
                assert!(c.contains(p));
            }
            let keys: Vec<(u32, u32)> = pts.iter().map(|p| (p.x.0, p.y.unwrap().0)).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(keys, sorted);
        }
    }

    #[test]
    fn theta_power_points_lie_on_gf9_curve() {
        let c = gf9_curve();
        let f = c.field().clone();
        let tp = |k: u64| f.theta_pow(k);
        let pts = [
            (Fe::ONE, tp(2)),
            (Fe::ONE, tp(6)),
            (Fe(2), Fe::ONE),
            (Fe(2), Fe(2)),
            (tp(1), Fe::ONE),
            (tp(1), Fe(2)),
            (tp(7), tp(2)),
            (tp(7), tp(6)),
        ];
        for (x, y) in pts {
            assert!(c.contains(&Point::affine(x, y)), "({}, {})", x.0, y.0);
        }
    }

    #[test]
    fn hasse_bound_holds_for_every_nonsingular_curve() {
        for f in [make_field(3, 2).unwrap(), make_field(11, 1).unwrap()] {
            let q = f.q() as f64;
            let bound = 2.0 * q.sqrt();
            for a in f.elements() {
                for b in f.elements() {
                    let Ok(c) = Curve::elliptic(f.clone(), a, b) else {
                        continue;
                    };
                    let n = c.point_count() as f64;
                    assert!(
                        (n - (q + 1.0)).abs() <= bound + 1e-9,
                        "a={} b={} gives {n} points",
                        a.0,
                        b.0
                    );
                }
            }
        }
    }

    #[test]
    fn group_law_against_collinearity_oracle() {
        // P, Q, -(P+Q) must lie on a common line; that is the defining
        // geometric property, independent of the slope formulas.
        let c = gf19_curve();
        let f = c.field().clone();
        let pts = c.enumerate_points();
        for p in &pts {
            for q in &pts {
                let pp = EcPoint::Affine(p.x, p.y.unwrap());
                let qq = EcPoint::Affine(q.x, q.y.unwrap());
                let sum = c.ec_add(pp, qq).unwrap();
                assert!(c.ec_contains(sum));
                let EcPoint::Affine(x3, y3) = c.ec_neg(sum) else {
                    // P + Q = ∞ means Q = -P: vertical line, fine.
                    assert_eq!(qq, c.ec_neg(pp));
                    continue;
                };
                let (x1, y1) = (p.x, p.y.unwrap());
                let (x2, y2) = (q.x, q.y.unwrap());
                if x1 == x2 && y1 != y2 {
                    unreachable!("handled by the infinity branch");
                }
                if pp == qq {
                    // Tangency: slope s satisfies 2·y1·s = 3·x1^2 + a.
                    if y1.is_zero() {
                        continue;
                    }
                    let s = f
                        .div(f.sub(y3, y1), f.sub(x3, x1))
                        .unwrap_or(Fe::ZERO);
                    let lhs = f.mul(f.mul(f.from_int(2), y1), s);
                    let rhs = f.add(f.mul(f.from_int(3), f.mul(x1, x1)), f.from_int(-1));
                    if x3 != x1 {
                        assert_eq!(lhs, rhs);
                    }
                } else {
                    // Chord: (y2-y1)(x3-x1) = (y3-y1)(x2-x1).
                    let lhs = f.mul(f.sub(y2, y1), f.sub(x3, x1));
                    let rhs = f.mul(f.sub(y3, y1), f.sub(x2, x1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn doubling_the_reference_point() {
        let c = gf19_curve();
        let p = EcPoint::Affine(Fe::ZERO, Fe(2));
        assert_eq!(
            c.ec_scalar_mul(2, p).unwrap(),
            EcPoint::Affine(Fe(6), Fe(9))
        );
        // The group has 23 points (prime), so P has order 23.
        assert_eq!(c.ec_scalar_mul(23, p).unwrap(), EcPoint::Infinity);
        for n in 1..23 {
            assert_ne!(c.ec_scalar_mul(n, p).unwrap(), EcPoint::Infinity);
        }
    }

    #[test]
    fn group_law_is_associative_and_lagrange_holds() {
        let c = gf9_curve();
        let mut all = vec![EcPoint::Infinity];
        all.extend(
            c.enumerate_points()
                .iter()
                .map(|p| EcPoint::Affine(p.x, p.y.unwrap())),
        );
        assert_eq!(all.len(), 16);
        for &p in &all {
            assert_eq!(c.ec_scalar_mul(16, p).unwrap(), EcPoint::Infinity);
            for &q in &all {
                assert_eq!(c.ec_add(p, q).unwrap(), c.ec_add(q, p).unwrap());
                for &r in &all {
                    let ab_c = c.ec_add(c.ec_add(p, q).unwrap(), r).unwrap();
                    let a_bc = c.ec_add(p, c.ec_add(q, r).unwrap()).unwrap();
                    assert_eq!(ab_c, a_bc);
                }
            }
        }
    }

    #[test]
    fn group_law_rejects_off_curve_points() {
        let c = gf9_curve();
        let bad = EcPoint::Affine(Fe::ONE, Fe::ONE);
        assert!(matches!(
            c.ec_add(bad, EcPoint::Infinity),
            Err(Error::PointOffCurve(_))
        ));
        let line = Curve::line(make_field(3, 2).unwrap());
        assert!(line.ec_add(EcPoint::Infinity, EcPoint::Infinity).is_err());
    }

    #[test]
    fn pole_numbers_match_the_semigroups() {
        let e = gf9_curve();
        assert!(!e.is_pole_number(1));
        for n in [0, 2, 3, 4, 5, 6, 7] {
            assert!(e.is_pole_number(n));
        }
        let h = herm3_curve();
        // Semigroup generated by 3 and 4: gaps exactly {1, 2, 5}.
        let gaps: Vec<usize> = (0..=20).filter(|&n| !h.is_pole_number(n)).collect();
        assert_eq!(gaps, vec![1, 2, 5]);
        assert_eq!(gaps.len(), h.genus());
        let l = Curve::line(make_field(3, 2).unwrap());
        assert!((0..=20).all(|n| l.is_pole_number(n)));
    }

    #[test]
    fn graded_bases_are_the_expected_monomials() {
        let mono = |m: &Monomial| (m.x_exp, m.y_exp, m.pole_order);
        let e = gf9_curve().rr_basis(3);
        assert_eq!(
            e.monomials.iter().map(mono).collect::<Vec<_>>(),
            vec![(0, 0, 0), (1, 0, 2), (0, 1, 3)]
        );
        let h = herm3_curve().rr_basis(6);
        assert_eq!(
            h.monomials.iter().map(mono).collect::<Vec<_>>(),
            vec![(0, 0, 0), (1, 0, 3), (0, 1, 4), (2, 0, 6)]
        );
        let l = Curve::line(make_field(3, 1).unwrap()).rr_basis(2);
        assert_eq!(
            l.monomials.iter().map(mono).collect::<Vec<_>>(),
            vec![(0, 0, 0), (1, 0, 1), (2, 0, 2)]
        );
    }

    #[test]
    fn basis_dimensions_follow_riemann_roch() {
        for c in [
            Curve::line(make_field(3, 2).unwrap()),
            gf9_curve(),
            herm3_curve(),
        ] {
            let g = c.genus();
            for m in 0..=14 {
                let basis = c.rr_basis(m);
                // Pole orders strictly increase and respect m.
                let orders: Vec<usize> =
                    basis.monomials.iter().map(|mo| mo.pole_order).collect();
                assert!(orders.windows(2).all(|w| w[0] < w[1]));
                assert!(orders.iter().all(|&o| o <= m));
                if m >= 2 * g {
                    assert_eq!(basis.dimension(), m + 1 - g, "genus {g}, m = {m}");
                }
                // Pole order decomposes over the x/y orders.
                let (ox, oy) = match c.family() {
                    Family::Line => (1, 0),
                    Family::Elliptic { .. } => (2, 3),
                    Family::Hermitian { q0 } => (*q0 as usize, *q0 as usize + 1),
                };
                for mo in &basis.monomials {
                    assert_eq!(
                        mo.pole_order,
                        mo.x_exp as usize * ox + mo.y_exp as usize * oy
                    );
                }
            }
        }
    }

    #[test]
    fn evaluation_satisfies_curve_equations() {
        let c = gf9_curve();
        let f = c.field().clone();
        let x3 = Monomial { x_exp: 3, y_exp: 0, pole_order: 6 };
        let x1 = Monomial { x_exp: 1, y_exp: 0, pole_order: 2 };
        let y2 = Monomial { x_exp: 0, y_exp: 2, pole_order: 6 };
        for p in c.enumerate_points() {
            let lhs = c.evaluate(&y2, &p);
            let rhs = f.add(c.evaluate(&x3, &p), c.evaluate(&x1, &p));
            assert_eq!(lhs, rhs);
            let one = Monomial { x_exp: 0, y_exp: 0, pole_order: 0 };
            assert_eq!(c.evaluate(&one, &p), Fe::ONE);
        }
    }

    #[test]
    fn support_fibers_and_completeness() {
        let c = gf9_curve();
        let all = make_support(&c, &SupportRecipe::AllAffine).unwrap();
        assert_eq!(all.len(), 15);
        assert!(!all.fiber_complete()); // three y = 0 points sit alone

        let paired = make_support(&c, &SupportRecipe::CompleteFibers { take: None }).unwrap();
        assert_eq!(paired.len(), 12);
        assert!(paired.fiber_complete());
        assert_eq!(paired.fibers().len(), 6);
        for p in paired.points() {
            assert!(!p.y.unwrap().is_zero());
        }

        let h = herm3_curve();
        let five = make_support(&h, &SupportRecipe::CompleteFibers { take: Some(5) }).unwrap();
        assert_eq!(five.len(), 15);
        assert!(five.fiber_complete());
        assert!(five.fibers().iter().all(|f| f.members.len() == 3));
        assert!(matches!(
            make_support(&h, &SupportRecipe::CompleteFibers { take: Some(10) }),
            Err(Error::BadSupport(_))
        ));

        let c19 = gf19_curve();
        let mult = make_support(
            &c19,
            &SupportRecipe::Multiples { base: Point::affine(Fe::ZERO, Fe(2)), count: 6 },
        )
        .unwrap();
        assert_eq!(mult.len(), 6);
        assert!(!mult.fiber_complete()); // consecutive multiples never pair up
        assert!(matches!(
            make_support(
                &c19,
                &SupportRecipe::Multiples { base: Point::affine(Fe::ZERO, Fe(2)), count: 23 },
            ),
            Err(Error::BadSupport(_))
        ));
    }

    #[test]
    fn support_rejects_bad_input() {
        let c = gf9_curve();
        assert!(matches!(
            Support::new(&c, &[]),
            Err(Error::BadSupport(_))
        ));
        let p = Point::affine(Fe::ZERO, Fe::ZERO);
        assert!(matches!(
            Support::new(&c, &[p, p]),
            Err(Error::BadSupport(_))
        ));
        assert!(matches!(
            Support::new(&c, &[Point::affine(Fe::ONE, Fe::ONE)]),
            Err(Error::PointOffCurve(_))
        ));
        // Line points must not carry y; curve points must.
        let l = Curve::line(c.field().clone());
        assert!(Support::new(&l, &[p]).is_err());
        assert!(Support::new(&c, &[Point::on_line(Fe::ZERO)]).is_err());
    }

    #[test]
    fn h_prime_matches_polynomial_derivative() {
        // Oracle: expand h(x) = Π (x - α_j), differentiate coefficient-wise,
        // evaluate. Must equal the pairwise-difference product.
        let c = gf9_curve();
        let f = c.field().clone();
        let sup = make_support(&c, &SupportRecipe::CompleteFibers { take: None }).unwrap();
        let alphas: Vec<Fe> = sup.fibers().iter().map(|fb| fb.alpha).collect();
        // coefficients of h, constant first
        let mut h = vec![Fe::ONE];
        for &a in &alphas {
            let mut next = vec![Fe::ZERO; h.len() + 1];
            for (i, &ci) in h.iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], ci);
                next[i] = f.sub(next[i], f.mul(ci, a));
            }
            h = next;
        }
        let dh: Vec<Fe> = (1..h.len())
            .map(|i| f.mul(f.from_int(i as i64), h[i]))
            .collect();
        for &a in &alphas {
            let mut val = Fe::ZERO;
            for &c in dh.iter().rev() {
                val = f.add(f.mul(val, a), c);
            }
            assert_eq!(sup.h_prime(a).unwrap(), val);
        }
        // Not a fiber of the support:
        let outside = (0..9).map(Fe).find(|x| !alphas.contains(x)).unwrap();
        assert!(sup.h_prime(outside).is_err());
    }

    #[test]
    fn h_prime_line_frozen_values() {
        let f = make_field(3, 1).unwrap();
        let l = Curve::line(f);
        let pts: Vec<Point> = (0..3).map(|i| Point::on_line(Fe(i))).collect();
        let sup = Support::new(&l, &pts).unwrap();
        // h = x(x-1)(x-2), h'(α) = 2 for every α in GF(3).
        for i in 0..3 {
            assert_eq!(sup.h_prime(Fe(i)).unwrap(), Fe(2));
        }
    }

    #[test]
    fn hermitian_fiber_power_sums_are_one() {
        // Σ_{y in fiber} y^{q0-1} = 1 for every x-fiber: the identity the
        // function-based dual constants rely on.
        let h = herm3_curve();
        let f = h.field().clone();
        let sup = make_support(&h, &SupportRecipe::AllAffine).unwrap();
        assert_eq!(sup.fibers().len(), 9);
        for fb in sup.fibers() {
            let mut s = Fe::ZERO;
            for &i in &fb.members {
                let y = sup.points()[i].y.unwrap();
                s = f.add(s, f.pow(y, 2));
            }
            assert_eq!(s, Fe::ONE, "fiber over α index {}", fb.alpha.0);
        }
    }

    #[test]
    fn hermitian_requires_square_field() {
        assert!(Curve::hermitian(make_field(3, 1).unwrap(), 3).is_err());
        assert!(Curve::hermitian(make_field(3, 2).unwrap(), 9).is_err());
        assert!(Curve::hermitian(make_field(5, 2).unwrap(), 5).is_ok());
    }

    #[test]
    fn singular_curves_are_rejected() {
        let f = make_field(3, 1).unwrap();
        // y^2 = x^3: 4a^3 + 27b^2 = 0.
        assert!(Curve::elliptic(f.clone(), Fe::ZERO, Fe::ZERO).is_err());
        let g = make_field(19, 1).unwrap();
        // 4a^3 + 27b^2 = 0 with a = -3, b = 2: 4·(-27) + 27·4 = 0.
        assert!(Curve::elliptic(g.clone(), g.from_int(-3), g.from_int(2)).is_err());
        assert!(Curve::elliptic(g.clone(), g.from_int(-1), g.from_int(4)).is_ok());
    }
}
