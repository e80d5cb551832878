//! Classical triangle centers, circles, and isogonal conjugation.
//!
//! Everything here is an exact rational map except the incenter and Nagel
//! point, whose barycentric weights involve side lengths. Those two fall
//! back to the float backend unless all three side lengths happen to be
//! rational (3-4-5-style triangles), in which case they stay exact.

use crate::geom::{collinear, midpoint, orient, Circle, GeomError, Line, Point, Triangle};
use crate::numeric::{NumericError, Scalar};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CentersError {
    #[error("Euler line is undefined for an equilateral triangle")]
    EquilateralEulerLine,
    #[error("point lies on a sideline")]
    OnSideline,
    #[error("point lies on the circumcircle; conjugate is at infinity")]
    OnCircumcircle {
        /// Common direction of the parallels through the vertices.
        direction: (Scalar, Scalar),
    },
    #[error("side lengths are irrational; use the float backend")]
    RationalBackendUnsupported,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

pub fn centroid(tri: &Triangle) -> Point {
    let three = Scalar::from_int(3, tri.backend());
    Point::new(
        (&tri.a.x + &tri.b.x + &tri.c.x) / &three,
        (&tri.a.y + &tri.b.y + &tri.c.y) / &three,
    )
}

pub fn circumcircle(tri: &Triangle) -> Circle {
    Circle::through(&tri.a, &tri.b, &tri.c).expect("triangle vertices are not collinear")
}

pub fn circumcenter(tri: &Triangle) -> Point {
    circumcircle(tri).center()
}

pub fn orthocenter(tri: &Triangle) -> Point {
    let alt_b = tri.side_b().perpendicular_through(&tri.b);
    let alt_c = tri.side_c().perpendicular_through(&tri.c);
    alt_b.intersect(&alt_c).expect("altitudes of a proper triangle meet")
}

pub fn nine_point_center(tri: &Triangle) -> Point {
    midpoint(&circumcenter(tri), &orthocenter(tri))
}

pub fn nine_point_circle(tri: &Triangle) -> Circle {
    Circle::through(
        &midpoint(&tri.b, &tri.c),
        &midpoint(&tri.c, &tri.a),
        &midpoint(&tri.a, &tri.b),
    )
    .expect("side midpoints are not collinear")
}

pub fn medial_triangle(tri: &Triangle) -> Triangle {
    Triangle::new(
        midpoint(&tri.b, &tri.c),
        midpoint(&tri.c, &tri.a),
        midpoint(&tri.a, &tri.b),
    )
    .expect("medial triangle of a proper triangle")
}

pub fn euler_line(tri: &Triangle) -> Result<Line, CentersError> {
    let o = circumcenter(tri);
    let h = orthocenter(tri);
    Line::through(&o, &h).map_err(|_| CentersError::EquilateralEulerLine)
}

/// Altitude through the given vertex index (0 = A, 1 = B, 2 = C).
///
/// Built as the perpendicular from the vertex to the opposite side, so it is
/// well defined even when the vertex coincides with the orthocenter.
pub fn altitude(tri: &Triangle, vertex: usize) -> Line {
    let (v, side) = match vertex {
        0 => (&tri.a, tri.side_a()),
        1 => (&tri.b, tri.side_b()),
        2 => (&tri.c, tri.side_c()),
        _ => panic!("vertex index out of range"),
    };
    side.perpendicular_through(v)
}

/// Isogonal conjugate of `p`: exact rational map via barycentric weights
/// (a²/α : b²/β : c²/γ). An involution away from the sidelines and the
/// circumcircle; on the circumcircle the conjugate recedes to infinity and
/// the error carries the common direction of the parallels through A, B, C.
pub fn isogonal_conjugate(tri: &Triangle, p: &Point) -> Result<Point, CentersError> {
    let alpha = orient(p, &tri.b, &tri.c);
    let beta = orient(&tri.a, p, &tri.c);
    let gamma = orient(&tri.a, &tri.b, p);
    if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
        return Err(CentersError::OnSideline);
    }
    let a_sq = tri.b.dist_sq(&tri.c);
    let b_sq = tri.c.dist_sq(&tri.a);
    let c_sq = tri.a.dist_sq(&tri.b);
    let wa = &a_sq * &(&beta * &gamma);
    let wb = &b_sq * &(&gamma * &alpha);
    let wc = &c_sq * &(&alpha * &beta);
    let sum = &wa + &wb + &wc;
    let combine = |f: &dyn Fn(&Point) -> &Scalar| {
        &wa * f(&tri.a) + &wb * f(&tri.b) + &wc * f(&tri.c)
    };
    let x = combine(&|pt| &pt.x);
    let y = combine(&|pt| &pt.y);
    if sum.is_zero() {
        // Weights sum to zero exactly when p is on the circumcircle; the
        // zero-sum combination is then a translation-invariant direction.
        return Err(CentersError::OnCircumcircle { direction: (x, y) });
    }
    Ok(Point::new(x / &sum, y / &sum))
}

pub fn symmedian_point(tri: &Triangle) -> Point {
    isogonal_conjugate(tri, &centroid(tri)).expect("centroid is interior")
}

fn side_lengths(tri: &Triangle) -> Result<[Scalar; 3], CentersError> {
    let squares = [
        tri.b.dist_sq(&tri.c),
        tri.c.dist_sq(&tri.a),
        tri.a.dist_sq(&tri.b),
    ];
    let mut out = Vec::with_capacity(3);
    for s in squares {
        match s.sqrt() {
            Ok(v) => out.push(v),
            Err(NumericError::IrrationalInRationalBackend) => {
                return Err(CentersError::RationalBackendUnsupported)
            }
            Err(_) => return Err(CentersError::RationalBackendUnsupported),
        }
    }
    Ok(out.try_into().expect("three side lengths"))
}

/// Incenter, barycentric (a : b : c). Float backend in general; exact when
/// all three side lengths are rational.
pub fn incenter(tri: &Triangle) -> Result<Point, CentersError> {
    let [a, b, c] = side_lengths(tri)?;
    let sum = &a + &b + &c;
    Ok(Point::new(
        (&a * &tri.a.x + &b * &tri.b.x + &c * &tri.c.x) / &sum,
        (&a * &tri.a.y + &b * &tri.b.y + &c * &tri.c.y) / &sum,
    ))
}

/// Nagel point, barycentric (s-a : s-b : s-c), same backend rule as
/// [`incenter`].
pub fn nagel_point(tri: &Triangle) -> Result<Point, CentersError> {
    let [a, b, c] = side_lengths(tri)?;
    let two = Scalar::from_int(2, tri.backend());
    let s = (&a + &b + &c) / &two;
    let wa = &s - &a;
    let wb = &s - &b;
    let wc = &s - &c;
    let sum = &wa + &wb + &wc;
    Ok(Point::new(
        (&wa * &tri.a.x + &wb * &tri.b.x + &wc * &tri.c.x) / &sum,
        (&wa * &tri.a.y + &wb * &tri.b.y + &wc * &tri.c.y) / &sum,
    ))
}

/// True when `p` lies on one of the three sidelines (extended).
pub fn on_sideline(tri: &Triangle, p: &Point) -> bool {
    collinear(p, &tri.b, &tri.c) || collinear(&tri.a, p, &tri.c) || collinear(&tri.a, &tri.b, p)
}
