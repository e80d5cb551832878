//! Indirect similarities, perspective triangle pairs, orthologic and
//! paralogic centers, rectangular-hyperbola bookkeeping, and the audit of
//! the closed-form coordinate model with the similarity center at the
//! orthocenter.
//!
//! An indirect (orientation-reversing) similarity is the conjugate-linear
//! map `z ↦ a·conj(z) + b`. With |a|² ≠ 1 it has a unique fixed point, the
//! double point of inverse similarity. All of that is exact rational
//! arithmetic; only axis directions (arg(a)/2) are irrational and live on
//! the float backend.

mod audit;
mod double_point;
mod suite;

pub use audit::oracle8;
pub use double_point::double_point_from_hyperbolas;
pub use suite::verify_speckman_suite;

use crate::centers::{self, CentersError};
use crate::geom::{dilate, Circle, Conic, GeomError, Line, Point, Triangle};
use crate::numeric::{Complex, NumericError, Scalar};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpeckmanError {
    #[error("similarity ratio is 1; no unique fixed point")]
    RatioOne,
    #[error("degenerate point pair")]
    DegeneratePair,
    #[error("invalid dilation ratio (k must avoid 0 and ±1)")]
    InvalidRatio,
    #[error("triangles are not in perspective")]
    NotPerspective,
    #[error("perspective at infinity; joins are parallel")]
    ParallelPerspective { direction: (Scalar, Scalar) },
    #[error("corresponding sides are parallel; axis at infinity")]
    ParallelSides,
    #[error("triangles are not indirectly similar")]
    NotIndirectlySimilar,
    #[error("orthologic concurrency failed")]
    NotOrthologic,
    #[error("paralogic concurrency failed")]
    NotParalogic,
    #[error("point does not lie on the circle")]
    PointNotOnCircle,
    #[error("no real second intersection of the hyperbola pair")]
    NoRealSecondIntersection,
    #[error("degenerate model parameters")]
    DegenerateParameters,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Centers(#[from] CentersError),
}

/// Orientation-reversing similarity `z ↦ a·conj(z) + b`.
#[derive(Debug, Clone, PartialEq)]
pub struct IndirectSimilarity {
    pub multiplier: Complex,
    pub offset: Complex,
    /// Unique fixed point; `None` exactly when `|a|² = 1`.
    pub center: Option<Point>,
    /// `|a|²`, the squared similarity ratio, exact.
    pub ratio_sq: Scalar,
}

fn as_complex(p: &Point) -> Complex {
    Complex::new(p.x.clone(), p.y.clone())
}

fn as_point(z: &Complex) -> Point {
    Point::new(z.re.clone(), z.im.clone())
}

impl IndirectSimilarity {
    /// The conjugate-linear map sending `a ↦ a1`, `b ↦ b1` (no fixed-point
    /// requirement; the center is populated only when the ratio is not 1).
    pub fn from_pair_images(
        a: &Point,
        a1: &Point,
        b: &Point,
        b1: &Point,
    ) -> Result<IndirectSimilarity, SpeckmanError> {
        if a == b {
            return Err(SpeckmanError::DegeneratePair);
        }
        let za = as_complex(a);
        let zb = as_complex(b);
        let za1 = as_complex(a1);
        let zb1 = as_complex(b1);
        let multiplier = za1.sub(&zb1).div(&za.conj().sub(&zb.conj()))?;
        let offset = za1.sub(&multiplier.mul(&za.conj()));
        let ratio_sq = multiplier.norm_sq();
        let one = Scalar::one(ratio_sq.backend());
        let center = if ratio_sq == one {
            None
        } else {
            // Fixed point of z = a·conj(z) + b as a real 2×2 system.
            let det = &one - &ratio_sq;
            let (ra, ia) = (&multiplier.re, &multiplier.im);
            let (rb, ib) = (&offset.re, &offset.im);
            // (1 - ra)x - ia·y = rb ; -ia·x + (1 + ra)y = ib.
            let x = ((&one + ra) * rb + ia * ib) / &det;
            let y = (ia * rb + (&one - ra) * ib) / &det;
            Some(Point::new(x, y))
        };
        Ok(IndirectSimilarity { multiplier, offset, center, ratio_sq })
    }

    pub fn apply(&self, p: &Point) -> Point {
        let z = as_complex(p).conj();
        as_point(&self.multiplier.mul(&z).add(&self.offset))
    }

    pub fn apply_triangle(&self, tri: &Triangle) -> Result<Triangle, GeomError> {
        Triangle::new(self.apply(&tri.a), self.apply(&tri.b), self.apply(&tri.c))
    }

    /// Composition with itself: the direct similarity
    /// `z ↦ a·conj(a)·z + a·conj(b) + b`.
    pub fn squared_map(&self, p: &Point) -> Point {
        self.apply(&self.apply(p))
    }
}

/// The unique conjugate-linear map `A ↦ A1`, `B ↦ B1`, with a fixed point
/// (errors with [`SpeckmanError::RatioOne`] when the ratio is 1).
pub fn similarity_from_pairs(
    a: &Point,
    a1: &Point,
    b: &Point,
    b1: &Point,
) -> Result<IndirectSimilarity, SpeckmanError> {
    let sim = IndirectSimilarity::from_pair_images(a, a1, b, b1)?;
    if sim.center.is_none() {
        return Err(SpeckmanError::RatioOne);
    }
    Ok(sim)
}

/// The indirect similarity carrying `t1` to `t2` vertex-by-vertex, when one
/// exists (exact conjugate-map consistency test on the third vertex).
pub fn indirect_similarity_between(
    t1: &Triangle,
    t2: &Triangle,
) -> Result<IndirectSimilarity, SpeckmanError> {
    let sim = IndirectSimilarity::from_pair_images(&t1.a, &t2.a, &t1.b, &t2.b)?;
    if !sim.apply(&t1.c).coincides(&t2.c) {
        return Err(SpeckmanError::NotIndirectlySimilar);
    }
    Ok(sim)
}

/// Common point of `AA'`, `BB'`, `CC'`. Concurrency at infinity (all three
/// joins parallel) is reported with the shared direction.
pub fn perspector(t1: &Triangle, t2: &Triangle) -> Result<Point, SpeckmanError> {
    let joins: Vec<Line> = t1
        .vertices()
        .iter()
        .zip(t2.vertices())
        .map(|(p, q)| Line::through(p, q))
        .collect::<Result<_, _>>()
        .map_err(|_| SpeckmanError::DegeneratePair)?;
    match joins[0].intersect(&joins[1]) {
        Ok(p) => {
            if joins[2].contains(&p) {
                Ok(p)
            } else {
                Err(SpeckmanError::NotPerspective)
            }
        }
        Err(_) => {
            if joins[0].is_parallel(&joins[2]) && joins[1].is_parallel(&joins[2]) {
                Err(SpeckmanError::ParallelPerspective { direction: joins[0].direction() })
            } else {
                Err(SpeckmanError::NotPerspective)
            }
        }
    }
}

/// Desargues axis of two perspective triangles: the line through the
/// intersections of corresponding sides, verified collinear exactly.
pub fn desargues_axis(t1: &Triangle, t2: &Triangle) -> Result<Line, SpeckmanError> {
    perspector(t1, t2)?;
    let mut meets = Vec::with_capacity(3);
    for (s1, s2) in t1.sides().iter().zip(t2.sides().iter()) {
        match s1.intersect(s2) {
            Ok(p) => meets.push(p),
            Err(_) => return Err(SpeckmanError::ParallelSides),
        }
    }
    if !crate::geom::collinear(&meets[0], &meets[1], &meets[2]) {
        return Err(SpeckmanError::NotPerspective);
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if meets[i] != meets[j] {
            return Line::through(&meets[i], &meets[j]).map_err(SpeckmanError::from);
        }
    }
    Err(SpeckmanError::ParallelSides)
}

/// Orthologic centers of an indirectly similar pair.
///
/// First center: the common point of the perpendiculars from the vertices
/// of `t2` onto the corresponding sides of `t1`; it lies on the circumcircle
/// of `t2`. Second center: the symmetric construction, on the circumcircle
/// of `t1`. Failure of either concurrency or circle membership for a
/// genuinely similar pair is a suite failure, reported as `NotOrthologic`.
pub fn orthologic_centers(t1: &Triangle, t2: &Triangle) -> Result<(Point, Point), SpeckmanError> {
    indirect_similarity_between(t1, t2)?;
    let first = concurrent_point(
        &t1.sides()
            .iter()
            .zip(t2.vertices())
            .map(|(side, v)| side.perpendicular_through(v))
            .collect::<Vec<_>>(),
    )
    .ok_or(SpeckmanError::NotOrthologic)?;
    let second = concurrent_point(
        &t2.sides()
            .iter()
            .zip(t1.vertices())
            .map(|(side, v)| side.perpendicular_through(v))
            .collect::<Vec<_>>(),
    )
    .ok_or(SpeckmanError::NotOrthologic)?;
    if !centers::circumcircle(t2).contains(&first) || !centers::circumcircle(t1).contains(&second) {
        return Err(SpeckmanError::NotOrthologic);
    }
    Ok((first, second))
}

/// Paralogic center (metapole) of `t1` with respect to `t2`: the common
/// point of the lines through A, B, C parallel to YZ, ZX, XY. Lies on the
/// circumcircle of `t1`.
pub fn paralogic_center(t1: &Triangle, t2: &Triangle) -> Result<Point, SpeckmanError> {
    let lines: Vec<Line> = t2
        .sides()
        .iter()
        .zip(t1.vertices())
        .map(|(side, v)| side.parallel_through(v))
        .collect();
    let s = concurrent_point(&lines).ok_or(SpeckmanError::NotParalogic)?;
    if !centers::circumcircle(t1).contains(&s) {
        return Err(SpeckmanError::NotParalogic);
    }
    Ok(s)
}

/// Common point of three lines, if they concur at a finite point.
fn concurrent_point(lines: &[Line]) -> Option<Point> {
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        if let Ok(p) = lines[i].intersect(&lines[j]) {
            return lines[k].contains(&p).then_some(p);
        }
    }
    None
}

/// Inscribe a triangle indirectly similar to `tri` in the circle `c`:
/// through `t` draw parallels to the three altitudes of `tri`; the second
/// intersections are the vertices. `t` is then an orthologic center of the
/// pair.
pub fn similar_from_circle(tri: &Triangle, c: &Circle, t: &Point) -> Result<Triangle, SpeckmanError> {
    if !c.contains(t) {
        return Err(SpeckmanError::PointNotOnCircle);
    }
    let mut verts = Vec::with_capacity(3);
    for i in 0..3 {
        let alt = centers::altitude(tri, i);
        let through_t = alt.parallel_through(t);
        verts.push(c.second_intersection(&through_t, t)?);
    }
    let [x, y, z]: [Point; 3] = verts.try_into().expect("three vertices");
    Triangle::new(x, y, z).map_err(SpeckmanError::from)
}

/// Configuration of an indirectly similar, perspective pair whose double
/// point of inverse similarity sits at the base triangle's orthocenter.
#[derive(Debug, Clone)]
pub struct SpeckmanConfig {
    pub tri: Triangle,
    pub image: Triangle,
    pub sim: IndirectSimilarity,
    /// Perspector of the pair.
    pub q: Point,
    /// Orthocenter of `tri` (also the fixed point of `sim` in this family).
    pub h: Point,
    /// Orthocenter of `image` (coincides with `h` here, computed
    /// constructively).
    pub h_image: Point,
    /// Rectangular hyperbola through A, B, C, H, Q.
    pub hyp: Conic,
    /// Rectangular hyperbola through X, Y, Z, h, Q.
    pub hyp_image: Conic,
    /// Centers of the two hyperbolas.
    pub m: Point,
    pub m_image: Point,
    /// Paralogic centers: `s` of `tri` w.r.t. `image` (on circumcircle of
    /// `tri`), `s_image` the other way round.
    pub s: Point,
    pub s_image: Point,
    /// Orthologic centers: `d` on the circumcircle of `tri`, `d_image` on
    /// the circle of `image`.
    pub d: Point,
    pub d_image: Point,
    pub circ: Circle,
    pub circ_image: Circle,
}

/// Reflect `tri` in the axis through its orthocenter with slope `m_slope`,
/// after dilating about the orthocenter by `k` (k ∉ {0, ±1}). The image is
/// always in perspective with `tri`.
pub fn build_speckman_through_h(
    tri: &Triangle,
    m_slope: &Scalar,
    k: &Scalar,
) -> Result<SpeckmanConfig, SpeckmanError> {
    let backend = tri.backend();
    let one = Scalar::one(backend);
    if k.is_zero() || *k == one || *k == -&one {
        return Err(SpeckmanError::InvalidRatio);
    }
    let h = centers::orthocenter(tri);
    // Axis y - h_y = m·(x - h_x).
    let axis = Line::new(
        m_slope.clone(),
        -&one,
        &h.y - &(m_slope * &h.x),
    );
    let image = tri.map(|p| axis.reflect(&dilate(p, &h, k)))?;
    let sim = similarity_from_pairs(&tri.a, &image.a, &tri.b, &image.b)?;
    debug_assert!(sim.apply(&tri.c).coincides(&image.c));
    debug_assert!(sim.center.as_ref().is_some_and(|c| c.coincides(&h)));
    let q = perspector(tri, &image)?;
    let h_image = centers::orthocenter(&image);
    let hyp = Conic::through_five([&tri.a, &tri.b, &tri.c, &h, &q])?;
    let hyp_image = Conic::through_five([&image.a, &image.b, &image.c, &h_image, &q])?;
    let m = hyp.center()?;
    let m_image = hyp_image.center()?;
    let s = paralogic_center(tri, &image)?;
    let s_image = paralogic_center(&image, tri)?;
    let (d_image, d) = orthologic_centers(tri, &image)?;
    let circ = centers::circumcircle(tri);
    let circ_image = centers::circumcircle(&image);
    Ok(SpeckmanConfig {
        tri: tri.clone(),
        image,
        sim,
        q,
        h,
        h_image,
        hyp,
        hyp_image,
        m,
        m_image,
        s,
        s_image,
        d,
        d_image,
        circ,
        circ_image,
    })
}
