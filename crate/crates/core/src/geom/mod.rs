//! Primitive geometric objects and the exact constructions and predicates
//! every higher module composes.
//!
//! Circles are stored by equation coefficients (`x² + y² + 2gx + 2fy + h`),
//! not center+radius, so the Hagge constructions stay radical-free: every
//! point produced from rational input is again rational. Lines and conics on
//! the rational backend are normalized to coprime integer coefficients with
//! a positive leading coefficient, which makes serialization and equality
//! bit-stable.

mod conic;

pub use conic::{nullspace, Conic};

use crate::numeric::{Backend, Scalar};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("coincident points")]
    CoincidentPoints,
    #[error("parallel lines")]
    ParallelLines,
    #[error("coincident lines")]
    CoincidentLines,
    #[error("point does not lie on the circle")]
    PointNotOnCircle,
    #[error("point does not lie on the line")]
    PointNotOnLine,
    #[error("collinear points")]
    CollinearPoints,
    #[error("duplicate points")]
    DuplicatePoints,
    #[error("degenerate configuration")]
    DegenerateConfiguration,
    #[error("conic has no center")]
    ParabolicConic,
    #[error("concentric circles")]
    ConcentricCircles,
    #[error("collinear circle centers")]
    CollinearCenters,
    #[error("point does not lie on the circumcircle")]
    PointNotOnCircumcircle,
    #[error("degenerate triangle")]
    DegenerateTriangle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Point {
        assert_eq!(x.backend(), y.backend(), "point coordinates must share a backend");
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Point {
        Point::new(Scalar::int(x), Scalar::int(y))
    }

    pub fn backend(&self) -> Backend {
        self.x.backend()
    }

    pub fn to_float_backend(&self) -> Point {
        Point::new(self.x.to_float_backend(), self.y.to_float_backend())
    }

    pub fn dist_sq(&self, other: &Point) -> Scalar {
        (&self.x - &other.x).sq() + (&self.y - &other.y).sq()
    }

    /// Coordinate-wise coincidence: exact on rationals, tolerance-based on
    /// floats (unlike `==`, which uses the tight machine epsilon).
    pub fn coincides(&self, other: &Point) -> bool {
        (&self.x - &other.x).is_negligible() && (&self.y - &other.y).is_negligible()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("x", &self.x.to_string())?;
        map.serialize_entry("y", &self.y.to_string())?;
        map.end()
    }
}

/// `ax + by + c = 0` with `(a, b) ≠ (0, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl Line {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Line {
        assert!(
            !(a.is_zero() && b.is_zero()),
            "line must have a nonzero direction"
        );
        let mut coeffs = [a, b, c];
        normalize_coeffs(&mut coeffs);
        let [a, b, c] = coeffs;
        Line { a, b, c }
    }

    pub fn backend(&self) -> Backend {
        self.a.backend()
    }

    pub fn through(p: &Point, q: &Point) -> Result<Line, GeomError> {
        if p == q {
            return Err(GeomError::CoincidentPoints);
        }
        let a = &p.y - &q.y;
        let b = &q.x - &p.x;
        let c = &p.x * &q.y - &q.x * &p.y;
        Ok(Line::new(a, b, c))
    }

    pub fn eval(&self, p: &Point) -> Scalar {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_negligible()
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_negligible()
    }

    pub fn is_perpendicular(&self, other: &Line) -> bool {
        (&self.a * &other.a + &self.b * &other.b).is_negligible()
    }

    pub fn intersect(&self, other: &Line) -> Result<Point, GeomError> {
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero() {
            return if self == other {
                Err(GeomError::CoincidentLines)
            } else {
                Err(GeomError::ParallelLines)
            };
        }
        let x = (&self.b * &other.c - &other.b * &self.c) / &det;
        let y = (&other.a * &self.c - &self.a * &other.c) / &det;
        Ok(Point::new(x, y))
    }

    /// Direction vector `(b, -a)`.
    pub fn direction(&self) -> (Scalar, Scalar) {
        (self.b.clone(), -&self.a)
    }

    pub fn parallel_through(&self, p: &Point) -> Line {
        let c = -(&self.a * &p.x + &self.b * &p.y);
        Line::new(self.a.clone(), self.b.clone(), c)
    }

    pub fn perpendicular_through(&self, p: &Point) -> Line {
        let a = self.b.clone();
        let b = -&self.a;
        let c = -(&a * &p.x + &b * &p.y);
        Line::new(a, b, c)
    }

    pub fn foot_of_perpendicular(&self, p: &Point) -> Point {
        let t = self.eval(p) / (self.a.sq() + self.b.sq());
        Point::new(&p.x - &(&t * &self.a), &p.y - &(&t * &self.b))
    }

    /// Reflection across this line; an exact involution on rational input.
    pub fn reflect(&self, p: &Point) -> Point {
        let two = Scalar::from_int(2, p.backend());
        let t = &two * &(self.eval(p) / (self.a.sq() + self.b.sq()));
        Point::new(&p.x - &(&t * &self.a), &p.y - &(&t * &self.b))
    }

    /// Same line up to scale; tolerance-based on the float backend.
    pub fn coincides(&self, other: &Line) -> bool {
        det2(&self.a, &self.b, &other.a, &other.b).is_negligible()
            && det2(&self.a, &self.c, &other.a, &other.c).is_negligible()
            && det2(&self.b, &self.c, &other.b, &other.c).is_negligible()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.a.to_string(), self.b.to_string(), self.c.to_string()].serialize(serializer)
    }
}

/// `x² + y² + 2gx + 2fy + h = 0`; the leading coefficient is pinned, so the
/// representation is already canonical.
#[derive(Debug, Clone, PartialEq)]
pub struct Circle {
    pub g: Scalar,
    pub f: Scalar,
    pub h: Scalar,
}

impl Circle {
    pub fn new(g: Scalar, f: Scalar, h: Scalar) -> Circle {
        Circle { g, f, h }
    }

    pub fn backend(&self) -> Backend {
        self.g.backend()
    }

    pub fn center(&self) -> Point {
        Point::new(-&self.g, -&self.f)
    }

    pub fn radius_sq(&self) -> Scalar {
        self.g.sq() + self.f.sq() - &self.h
    }

    pub fn eval(&self, p: &Point) -> Scalar {
        let two = Scalar::from_int(2, p.backend());
        p.x.sq() + p.y.sq() + &two * &self.g * &p.x + &two * &self.f * &p.y + &self.h
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_negligible()
    }

    /// Circle through three pairwise distinct, non-collinear points, solved
    /// as an exact 3×3 linear system in (g, f, h).
    pub fn through(p: &Point, q: &Point, r: &Point) -> Result<Circle, GeomError> {
        if p == q || q == r || p == r {
            return Err(GeomError::DuplicatePoints);
        }
        if collinear(p, q, r) {
            return Err(GeomError::CollinearPoints);
        }
        let backend = p.backend();
        let two = Scalar::from_int(2, backend);
        let one = Scalar::one(backend);
        // 2g·x + 2f·y + h = -(x² + y²) for each point.
        let rows = [p, q, r].map(|pt| {
            [
                &two * &pt.x,
                &two * &pt.y,
                one.clone(),
                -(pt.x.sq() + pt.y.sq()),
            ]
        });
        let det = det3(
            [&rows[0][0], &rows[0][1], &rows[0][2]],
            [&rows[1][0], &rows[1][1], &rows[1][2]],
            [&rows[2][0], &rows[2][1], &rows[2][2]],
        );
        let sub = |col: usize| {
            let pick = |row: &[Scalar; 4], j: usize| {
                if j == col {
                    row[3].clone()
                } else {
                    row[j].clone()
                }
            };
            det3(
                [&pick(&rows[0], 0), &pick(&rows[0], 1), &pick(&rows[0], 2)],
                [&pick(&rows[1], 0), &pick(&rows[1], 1), &pick(&rows[1], 2)],
                [&pick(&rows[2], 0), &pick(&rows[2], 1), &pick(&rows[2], 2)],
            )
        };
        Ok(Circle::new(sub(0) / &det, sub(1) / &det, sub(2) / &det))
    }

    /// Circle with diameter `pq`: `(x-p)·(x-q) + (y-p)·(y-q) = 0`.
    pub fn on_diameter(p: &Point, q: &Point) -> Circle {
        let two = Scalar::from_int(2, p.backend());
        Circle::new(
            -(&p.x + &q.x) / &two,
            -(&p.y + &q.y) / &two,
            &p.x * &q.x + &p.y * &q.y,
        )
    }

    /// The other intersection of `l` with the circle, given one intersection.
    /// Returns `known` itself exactly when `l` is tangent there.
    pub fn second_intersection(&self, l: &Line, known: &Point) -> Result<Point, GeomError> {
        if !self.contains(known) {
            return Err(GeomError::PointNotOnCircle);
        }
        if !l.contains(known) {
            return Err(GeomError::PointNotOnLine);
        }
        let (dx, dy) = l.direction();
        let two = Scalar::from_int(2, known.backend());
        let c2 = dx.sq() + dy.sq();
        let c1 = &two * &((&known.x + &self.g) * &dx + (&known.y + &self.f) * &dy);
        let t = -&c1 / &c2;
        Ok(Point::new(&known.x + &(&t * &dx), &known.y + &(&t * &dy)))
    }

    /// Same circle equation; tolerance-based on the float backend.
    pub fn coincides(&self, other: &Circle) -> bool {
        (&self.g - &other.g).is_negligible()
            && (&self.f - &other.f).is_negligible()
            && (&self.h - &other.h).is_negligible()
    }

    pub fn to_conic(&self) -> Conic {
        let backend = self.backend();
        let two = Scalar::from_int(2, backend);
        Conic::new([
            Scalar::one(backend),
            Scalar::zero(backend),
            Scalar::one(backend),
            &two * &self.g,
            &two * &self.f,
            self.h.clone(),
        ])
    }
}

impl fmt::Display for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[1, {}, {}, {}]", self.g, self.f, self.h)
    }
}

impl Serialize for Circle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.g.to_string(), self.f.to_string(), self.h.to_string()].serialize(serializer)
    }
}

/// Radical axis: the difference of the two normalized circle equations.
pub fn radical_axis(c1: &Circle, c2: &Circle) -> Result<Line, GeomError> {
    let a = &c1.g - &c2.g;
    let b = &c1.f - &c2.f;
    if a.is_zero() && b.is_zero() {
        return Err(GeomError::ConcentricCircles);
    }
    let two = Scalar::from_int(2, c1.backend());
    Ok(Line::new(&two * &a, &two * &b, &c1.h - &c2.h))
}

pub fn radical_center(c1: &Circle, c2: &Circle, c3: &Circle) -> Result<Point, GeomError> {
    let l12 = radical_axis(c1, c2)?;
    let l13 = radical_axis(c1, c3)?;
    l12.intersect(&l13).map_err(|_| GeomError::CollinearCenters)
}

/// Ordered vertex triple with nonzero signed area.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Triangle, GeomError> {
        if collinear(&a, &b, &c) {
            return Err(GeomError::DegenerateTriangle);
        }
        Ok(Triangle { a, b, c })
    }

    pub fn backend(&self) -> Backend {
        self.a.backend()
    }

    pub fn vertices(&self) -> [&Point; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Twice the signed area (the orientation determinant).
    pub fn signed_area_x2(&self) -> Scalar {
        orient(&self.a, &self.b, &self.c)
    }

    /// Side opposite A, i.e. line BC; similarly for the others.
    pub fn side_a(&self) -> Line {
        Line::through(&self.b, &self.c).expect("triangle vertices are distinct")
    }

    pub fn side_b(&self) -> Line {
        Line::through(&self.c, &self.a).expect("triangle vertices are distinct")
    }

    pub fn side_c(&self) -> Line {
        Line::through(&self.a, &self.b).expect("triangle vertices are distinct")
    }

    pub fn sides(&self) -> [Line; 3] {
        [self.side_a(), self.side_b(), self.side_c()]
    }

    pub fn map(&self, mut f: impl FnMut(&Point) -> Point) -> Result<Triangle, GeomError> {
        Triangle::new(f(&self.a), f(&self.b), f(&self.c))
    }

    pub fn to_float_backend(&self) -> Triangle {
        Triangle {
            a: self.a.to_float_backend(),
            b: self.b.to_float_backend(),
            c: self.c.to_float_backend(),
        }
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

pub fn midpoint(p: &Point, q: &Point) -> Point {
    let two = Scalar::from_int(2, p.backend());
    Point::new((&p.x + &q.x) / &two, (&p.y + &q.y) / &two)
}

/// `p + t·(q - p)`; `t = 1/2` is the midpoint.
pub fn divide(p: &Point, q: &Point, t: &Scalar) -> Point {
    Point::new(&p.x + &(t * &(&q.x - &p.x)), &p.y + &(t * &(&q.y - &p.y)))
}

/// `2·center - p`.
pub fn half_turn(p: &Point, center: &Point) -> Point {
    let two = Scalar::from_int(2, p.backend());
    Point::new(&(&two * &center.x) - &p.x, &(&two * &center.y) - &p.y)
}

/// `center + k·(p - center)`.
pub fn dilate(p: &Point, center: &Point, k: &Scalar) -> Point {
    Point::new(
        &center.x + &(k * &(&p.x - &center.x)),
        &center.y + &(k * &(&p.y - &center.y)),
    )
}

/// Orientation determinant of the triple (twice the signed area of pqr).
pub fn orient(p: &Point, q: &Point, r: &Point) -> Scalar {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    orient(p, q, r).is_negligible()
}

/// Three lines sharing a common (finite) point.
pub fn concurrent(l1: &Line, l2: &Line, l3: &Line) -> bool {
    let pairs = [(l1, l2, l3), (l1, l3, l2), (l2, l3, l1)];
    for (a, b, third) in pairs {
        match a.intersect(b) {
            Ok(p) => return third.contains(&p),
            Err(GeomError::CoincidentLines) => continue,
            Err(_) => continue,
        }
    }
    // All three pairwise parallel or coincident: concurrent only if equal.
    l1 == l2 && l2 == l3
}

/// Lifted-circle determinant test, translated to `p` first so the float
/// backend can compare the residual against the row magnitudes.
pub fn concyclic(p: &Point, q: &Point, r: &Point, s: &Point) -> bool {
    let lift = |pt: &Point| {
        let dx = &pt.x - &p.x;
        let dy = &pt.y - &p.y;
        let sq = dx.sq() + dy.sq();
        [dx, dy, sq]
    };
    let rows = [lift(q), lift(r), lift(s)];
    let det = det3(
        [&rows[0][0], &rows[0][1], &rows[0][2]],
        [&rows[1][0], &rows[1][1], &rows[1][2]],
        [&rows[2][0], &rows[2][1], &rows[2][2]],
    );
    match det {
        Scalar::Rational(_) => det.is_zero(),
        Scalar::Float(d) => {
            let scale: f64 = rows
                .iter()
                .map(|row| row.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max))
                .product();
            d.abs() <= 1e-9 * scale.max(1.0)
        }
    }
}

pub fn parallel(l1: &Line, l2: &Line) -> bool {
    l1.is_parallel(l2)
}

/// Line through the feet of the perpendiculars from a circumcircle point to
/// the sidelines. At a vertex the construction degenerates (two of the feet
/// coincide with the vertex); the line through the two distinct feet is
/// returned rather than an error.
pub fn simson_line(tri: &Triangle, p: &Point) -> Result<Line, GeomError> {
    let circum = Circle::through(&tri.a, &tri.b, &tri.c).map_err(|_| GeomError::DegenerateTriangle)?;
    if !circum.contains(p) {
        return Err(GeomError::PointNotOnCircumcircle);
    }
    let feet: Vec<Point> = tri.sides().iter().map(|s| s.foot_of_perpendicular(p)).collect();
    debug_assert!(collinear(&feet[0], &feet[1], &feet[2]));
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if feet[i] != feet[j] {
            return Line::through(&feet[i], &feet[j]);
        }
    }
    Err(GeomError::DegenerateConfiguration)
}

pub fn det2(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Scalar {
    a * d - b * c
}

pub fn det3(r0: [&Scalar; 3], r1: [&Scalar; 3], r2: [&Scalar; 3]) -> Scalar {
    r0[0] * &det2(r1[1], r1[2], r2[1], r2[2]) - r0[1] * &det2(r1[0], r1[2], r2[0], r2[2])
        + r0[2] * &det2(r1[0], r1[1], r2[0], r2[1])
}

pub fn det4(rows: &[[Scalar; 4]; 4]) -> Scalar {
    let mut acc = Scalar::zero(rows[0][0].backend());
    for col in 0..4 {
        let mut minor_rows: Vec<[&Scalar; 3]> = Vec::with_capacity(3);
        for row in &rows[1..] {
            let mut m: Vec<&Scalar> = Vec::with_capacity(3);
            for (j, v) in row.iter().enumerate() {
                if j != col {
                    m.push(v);
                }
            }
            minor_rows.push([m[0], m[1], m[2]]);
        }
        let minor = det3(minor_rows[0], minor_rows[1], minor_rows[2]);
        let term = &rows[0][col] * &minor;
        if col % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

/// Normalize a coefficient vector in place. Rational backend: clear
/// denominators, divide by the integer gcd, and flip signs so the first
/// nonzero coefficient is positive. Float backend: scale to unit Euclidean
/// norm with the same sign convention.
pub(crate) fn normalize_coeffs(coeffs: &mut [Scalar]) {
    match coeffs[0].backend() {
        Backend::Rational => {
            let rationals: Vec<BigRational> = coeffs
                .iter()
                .map(|s| s.as_rational().expect("rational backend").clone())
                .collect();
            let mut lcm = BigInt::one();
            for r in &rationals {
                lcm = lcm.lcm(r.denom());
            }
            let ints: Vec<BigInt> = rationals
                .iter()
                .map(|r| r.numer() * (&lcm / r.denom()))
                .collect();
            let mut gcd = BigInt::zero();
            for i in &ints {
                gcd = gcd.gcd(i);
            }
            if gcd.is_zero() {
                return;
            }
            let flip = ints
                .iter()
                .find(|i| !i.is_zero())
                .map(|i| i.is_negative())
                .unwrap_or(false);
            for (slot, mut v) in coeffs.iter_mut().zip(ints.into_iter()) {
                v /= &gcd;
                if flip {
                    v = -v;
                }
                *slot = Scalar::Rational(BigRational::from_integer(v));
            }
        }
        Backend::Float => {
            let norm: f64 = coeffs.iter().map(|s| s.to_f64().powi(2)).sum::<f64>().sqrt();
            if norm == 0.0 {
                return;
            }
            let flip = coeffs
                .iter()
                .map(|s| s.to_f64())
                .find(|v| v.abs() > 1e-12)
                .map(|v| v < 0.0)
                .unwrap_or(false);
            let scale = if flip { -1.0 / norm } else { 1.0 / norm };
            for slot in coeffs.iter_mut() {
                *slot = Scalar::Float(slot.to_f64() * scale);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: &str, y: &str) -> Point {
        Point::new(
            Scalar::parse(x, Backend::Rational).unwrap(),
            Scalar::parse(y, Backend::Rational).unwrap(),
        )
    }

    #[test]
    fn line_through_points() {
        let l = Line::through(&Point::int(0, 0), &Point::int(1, 1)).unwrap();
        // x - y = 0 up to normalization.
        assert!(l.contains(&Point::int(5, 5)));
        assert_eq!(l, Line::new(Scalar::int(1), Scalar::int(-1), Scalar::int(0)));

        // Vertical side of the coordinate model at v=1, w=2: x + 4 = 0.
        let l = Line::through(&Point::int(-4, 2), &Point::int(-4, 4)).unwrap();
        assert_eq!(l, Line::new(Scalar::int(1), Scalar::int(0), Scalar::int(4)));

        assert_eq!(
            Line::through(&Point::int(2, 3), &Point::int(2, 3)),
            Err(GeomError::CoincidentPoints)
        );
    }

    #[test]
    fn intersect_lines() {
        let x_axis = Line::new(Scalar::int(0), Scalar::int(1), Scalar::int(0));
        let y_axis = Line::new(Scalar::int(1), Scalar::int(0), Scalar::int(0));
        assert_eq!(x_axis.intersect(&y_axis).unwrap(), Point::int(0, 0));

        // y = -2x - 12 against y = -x; meets at (-12, 12).
        let l1 = Line::new(Scalar::int(2), Scalar::int(1), Scalar::int(12));
        let l2 = Line::new(Scalar::int(1), Scalar::int(1), Scalar::int(0));
        assert_eq!(l1.intersect(&l2).unwrap(), Point::int(-12, 12));

        let v1 = Line::new(Scalar::int(1), Scalar::int(0), Scalar::int(-1));
        let v2 = Line::new(Scalar::int(1), Scalar::int(0), Scalar::int(-2));
        assert_eq!(v1.intersect(&v2), Err(GeomError::ParallelLines));
        assert_eq!(v1.intersect(&v1), Err(GeomError::CoincidentLines));
    }

    #[test]
    fn reflect_in_line() {
        // Oracle: doubling the foot of the perpendicular.
        let l = Line::new(Scalar::int(3), Scalar::int(4), Scalar::int(-12));
        let p = Point::int(4, 3);
        let foot = l.foot_of_perpendicular(&p);
        let expected = half_turn(&p, &foot);
        let r = l.reflect(&p);
        assert_eq!(r, expected);
        assert_eq!(r, pt("28/25", "-21/25"));
        assert_eq!(l.reflect(&r), p);

        let diag = Line::new(Scalar::int(1), Scalar::int(-1), Scalar::int(0));
        assert_eq!(diag.reflect(&Point::int(-16, 0)), Point::int(0, -16));

        let on = Point::int(0, 3);
        assert_eq!(l.reflect(&on), on);
    }

    #[test]
    fn second_intersection_on_circle() {
        // x² + y² - 4x - 3y = 0 with the line y = (3/4)x through the origin.
        let c = Circle::new(Scalar::int(-2), Scalar::ratio(-3, 2), Scalar::int(0));
        let l = Line::new(Scalar::int(3), Scalar::int(-4), Scalar::int(0));
        let d = c.second_intersection(&l, &Point::int(0, 0)).unwrap();
        assert_eq!(d, Point::int(4, 3));
        // Swapping known and result is an involution.
        assert_eq!(c.second_intersection(&l, &d).unwrap(), Point::int(0, 0));

        // Off-circle known point is reported.
        assert_eq!(
            c.second_intersection(&l, &Point::int(1, 1)),
            Err(GeomError::PointNotOnCircle)
        );

        // Tangent line returns the point of tangency.
        let unit = Circle::new(Scalar::int(0), Scalar::int(0), Scalar::int(-1));
        let tangent = Line::new(Scalar::int(1), Scalar::int(0), Scalar::int(-1));
        assert_eq!(
            unit.second_intersection(&tangent, &Point::int(1, 0)).unwrap(),
            Point::int(1, 0)
        );
    }

    #[test]
    fn circle_through_three_points() {
        let c = Circle::through(&pt("28/25", "-21/25"), &pt("36/73", "123/73"), &pt("34/13", "12/13"))
            .unwrap();
        assert_eq!(c.g, Scalar::parse("-32/25", Backend::Rational).unwrap());
        assert_eq!(c.f, Scalar::parse("-27/50", Backend::Rational).unwrap());
        assert_eq!(c.h, Scalar::int(0));
        // The circle passes through the orthocenter of the 3-4-5 fixture.
        assert!(c.contains(&Point::int(0, 0)));

        let c = Circle::through(&Point::int(0, -12), &Point::int(4, -8), &Point::int(8, -8)).unwrap();
        assert_eq!(c.g, Scalar::int(-6));
        assert_eq!(c.f, Scalar::int(14));
        assert_eq!(c.h, Scalar::int(192));

        assert_eq!(
            Circle::through(&Point::int(0, 0), &Point::int(1, 1), &Point::int(2, 2)),
            Err(GeomError::CollinearPoints)
        );
        assert_eq!(
            Circle::through(&Point::int(0, 0), &Point::int(0, 0), &Point::int(2, 3)),
            Err(GeomError::DuplicatePoints)
        );
    }

    #[test]
    fn radical_axis_and_center() {
        let unit = Circle::new(Scalar::int(0), Scalar::int(0), Scalar::int(-1));
        let shifted = Circle::new(Scalar::int(-1), Scalar::int(0), Scalar::int(0));
        let axis = radical_axis(&unit, &shifted).unwrap();
        assert_eq!(axis, Line::new(Scalar::int(2), Scalar::int(0), Scalar::int(-1)));
        // Radical axis is perpendicular to the line of centers.
        let centers = Line::through(&unit.center(), &shifted.center()).unwrap();
        assert!(axis.is_perpendicular(&centers));

        let concentric = Circle::new(Scalar::int(0), Scalar::int(0), Scalar::int(-4));
        assert_eq!(radical_axis(&unit, &concentric), Err(GeomError::ConcentricCircles));

        let third = Circle::new(Scalar::int(0), Scalar::int(-1), Scalar::int(0));
        let rc = radical_center(&unit, &shifted, &third).unwrap();
        assert_eq!(rc, Point::new(Scalar::ratio(1, 2), Scalar::ratio(1, 2)));
        for pair in [(&unit, &shifted), (&unit, &third), (&shifted, &third)] {
            assert!(radical_axis(pair.0, pair.1).unwrap().contains(&rc));
        }
    }

    #[test]
    fn predicate_basics() {
        assert!(collinear(&pt("28/25", "-21/25"), &pt("4/3", "1"), &pt("36/25", "48/25")));
        assert!(concyclic(
            &Point::int(0, 0),
            &Point::int(1, 0),
            &Point::int(0, 1),
            &Point::int(1, 1)
        ));
        let l1 = Line::new(Scalar::int(1), Scalar::int(0), Scalar::int(0));
        let l2 = Line::new(Scalar::int(0), Scalar::int(1), Scalar::int(0));
        let l3 = Line::new(Scalar::int(1), Scalar::int(1), Scalar::int(-1));
        assert!(!concurrent(&l1, &l2, &l3));
        let l3 = Line::new(Scalar::int(1), Scalar::int(1), Scalar::int(0));
        assert!(concurrent(&l1, &l2, &l3));
    }

    #[test]
    fn affine_helpers() {
        assert_eq!(
            midpoint(&Point::int(0, 0), &pt("28/25", "-21/25")),
            pt("14/25", "-21/50")
        );
        assert_eq!(dilate(&Point::int(-8, 0), &Point::int(0, 0), &Scalar::int(2)), Point::int(-16, 0));
        assert_eq!(
            half_turn(&pt("18/25", "24/25"), &pt("1", "3/4")),
            pt("32/25", "27/50")
        );
        let t = Scalar::ratio(1, 2);
        assert_eq!(
            divide(&Point::int(0, 0), &Point::int(4, 6), &t),
            Point::int(2, 3)
        );
    }

    #[test]
    fn simson_line_cases() {
        let tri = Triangle::new(Point::int(0, 0), Point::int(4, 0), Point::int(0, 3)).unwrap();
        let l = simson_line(&tri, &Point::int(4, 3)).unwrap();
        for side in tri.sides() {
            assert!(l.contains(&side.foot_of_perpendicular(&Point::int(4, 3))));
        }
        assert_eq!(simson_line(&tri, &Point::int(1, 1)), Err(GeomError::PointNotOnCircumcircle));
        // Vertex case degenerates but does not crash.
        assert!(simson_line(&tri, &tri.b).is_ok());
    }

    #[test]
    fn line_normalization_is_canonical() {
        let l1 = Line::new(Scalar::ratio(1, 2), Scalar::ratio(-1, 3), Scalar::int(1));
        let l2 = Line::new(Scalar::int(-3), Scalar::int(2), Scalar::int(-6));
        assert_eq!(l1, l2);
        assert_eq!(l1.a, Scalar::int(3));
    }
}
