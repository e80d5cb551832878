//! The circle of a triangle and an interior pivot: second intersections of
//! the cevians with the circumcircle, reflected in the sides, always lie on
//! a circle through the orthocenter. This module builds that configuration
//! and verifies its properties exactly.

use crate::centers::{
    self, altitude, centroid, circumcircle, incenter, isogonal_conjugate, medial_triangle,
    nagel_point, nine_point_center, nine_point_circle, orthocenter, symmedian_point, CentersError,
};
use crate::geom::{
    collinear, divide, half_turn, midpoint, Circle, Conic, GeomError, Line, Point, Triangle,
};
use crate::numeric::{Backend, Scalar};
use crate::report::{Check, CheckReport};
use crate::speckman::{indirect_similarity_between, SpeckmanError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HaggeError {
    #[error("pivot lies on the circumcircle; construct the double Simson line instead")]
    POnCircumcircle,
    #[error("pivot lies on a sideline")]
    POnSideline,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Centers(#[from] CentersError),
}

/// The pivot at the orthocenter collapses the circle to the point H; that
/// forced limit is a separate outcome, not an error.
#[derive(Debug, Clone)]
pub enum HaggeOutcome {
    Config(Box<HaggeConfig>),
    PointCircle(Point),
}

#[derive(Debug, Clone)]
pub struct HaggeConfig {
    pub tri: Triangle,
    pub p: Point,
    /// Second intersections of AP, BP, CP with the circumcircle.
    pub d: Point,
    pub e: Point,
    pub f: Point,
    /// Their reflections in BC, CA, AB.
    pub u: Point,
    pub v: Point,
    pub w: Point,
    /// The circle through U, V, W (contains H).
    pub sigma: Circle,
    /// Second intersections of the altitudes with `sigma`, from H.
    pub x: Point,
    pub y: Point,
    pub z: Point,
    pub h: Point,
    /// Isogonal conjugate of the pivot.
    pub pg: Point,
    /// Center of `sigma`.
    pub qc: Point,
    pub circ: Circle,
}

pub fn build_hagge(tri: &Triangle, p: &Point) -> Result<HaggeOutcome, HaggeError> {
    if centers::on_sideline(tri, p) {
        return Err(HaggeError::POnSideline);
    }
    let circ = circumcircle(tri);
    if circ.contains(p) {
        return Err(HaggeError::POnCircumcircle);
    }
    let h = orthocenter(tri);
    if p == &h {
        return Ok(HaggeOutcome::PointCircle(h));
    }
    let second = |vertex: &Point| -> Result<Point, HaggeError> {
        let line = Line::through(vertex, p)?;
        Ok(circ.second_intersection(&line, vertex)?)
    };
    let d = second(&tri.a)?;
    let e = second(&tri.b)?;
    let f = second(&tri.c)?;
    let u = tri.side_a().reflect(&d);
    let v = tri.side_b().reflect(&e);
    let w = tri.side_c().reflect(&f);
    let sigma = Circle::through(&u, &v, &w)?;
    debug_assert!(sigma.contains(&h));
    let on_altitude = |i: usize| -> Result<Point, HaggeError> {
        Ok(sigma.second_intersection(&altitude(tri, i), &h)?)
    };
    let x = on_altitude(0)?;
    let y = on_altitude(1)?;
    let z = on_altitude(2)?;
    let pg = isogonal_conjugate(tri, p)?;
    let qc = sigma.center();
    Ok(HaggeOutcome::Config(Box::new(HaggeConfig {
        tri: tri.clone(),
        p: p.clone(),
        d,
        e,
        f,
        u,
        v,
        w,
        sigma,
        x,
        y,
        z,
        h,
        pg,
        qc,
        circ,
    })))
}

/// Center of the circle as a half-turn of the pivot's isogonal conjugate
/// about the nine-point center.
pub fn peiser_center(tri: &Triangle, p: &Point) -> Result<Point, CentersError> {
    let pg = isogonal_conjugate(tri, p)?;
    Ok(half_turn(&pg, &nine_point_center(tri)))
}

fn backend_name(b: Backend) -> &'static str {
    match b {
        Backend::Rational => "rational",
        Backend::Float => "float",
    }
}

pub fn verify_hagge_suite(cfg: &HaggeConfig) -> CheckReport {
    let instance = serde_json::json!({
        "triangle": &cfg.tri,
        "p": &cfg.p,
    });
    let mut report = CheckReport::new(instance, backend_name(cfg.tri.backend()));
    let checks = &mut report.checks;

    checks.push(Check::new(
        "h_on_circle",
        "the circle through the three reflections passes through the orthocenter",
        cfg.sigma.contains(&cfg.h),
    ));

    checks.push(Check::new(
        "pivot_lines_straight",
        "each reflection, the pivot, and the matching altitude point are collinear",
        collinear(&cfg.u, &cfg.p, &cfg.x)
            && collinear(&cfg.v, &cfg.p, &cfg.y)
            && collinear(&cfg.w, &cfg.p, &cfg.z),
    ));

    checks.push(Check::new(
        "center_by_half_turn",
        "the circle center is the half-turn of the pivot's isogonal conjugate about the nine-point center",
        peiser_center(&cfg.tri, &cfg.p)
            .map(|c| c == cfg.qc)
            .unwrap_or(false),
    ));

    let o = cfg.circ.center();
    checks.push(Check::new(
        "parallelogram",
        "the conjugate point, orthocenter, circle center, and circumcenter form a parallelogram",
        midpoint(&cfg.pg, &cfg.qc) == midpoint(&cfg.h, &o),
    ));

    let npc = nine_point_circle(&cfg.tri);
    checks.push(Check::new(
        "midpoints_on_nine_point_circle",
        "the midpoints of each vertex and its reflected point lie on the nine-point circle",
        npc.contains(&midpoint(&cfg.tri.a, &cfg.u))
            && npc.contains(&midpoint(&cfg.tri.b, &cfg.v))
            && npc.contains(&midpoint(&cfg.tri.c, &cfg.w)),
    ));

    // The line through the conjugate point and the centroid meets the circle
    // at the far end of the diameter through H: tested as incidence of the
    // antipode 2·Qc − H on that line.
    let g = centroid(&cfg.tri);
    let antipode = half_turn(&cfg.h, &cfg.qc);
    if cfg.pg == g {
        checks.push(Check::with_detail(
            "conjugate_line_through_antipode",
            "the conjugate-centroid line passes through the antipode of H",
            true,
            "conjugate point coincides with the centroid; the line is undefined and the claim vacuous",
        ));
    } else {
        checks.push(Check::new(
            "conjugate_line_through_antipode",
            "the conjugate-centroid line passes through the antipode of H",
            Line::through(&cfg.pg, &g)
                .map(|l| l.contains(&antipode))
                .unwrap_or(false),
        ));
    }

    // Axis points: each side of UVW meets the corresponding altitude; the
    // three meets are collinear with the pivot.
    {
        let pass = (|| -> Option<bool> {
            let vw = Line::through(&cfg.v, &cfg.w).ok()?;
            let wu = Line::through(&cfg.w, &cfg.u).ok()?;
            let uv = Line::through(&cfg.u, &cfg.v).ok()?;
            let u1 = vw.intersect(&altitude(&cfg.tri, 0)).ok()?;
            let v1 = wu.intersect(&altitude(&cfg.tri, 1)).ok()?;
            let w1 = uv.intersect(&altitude(&cfg.tri, 2)).ok()?;
            Some(
                collinear(&u1, &v1, &w1)
                    && collinear(&u1, &v1, &cfg.p)
                    && collinear(&u1, &w1, &cfg.p),
            )
        })()
        .unwrap_or(false);
        checks.push(Check::new(
            "axis_points_collinear_with_pivot",
            "the sides of the reflected triangle meet the altitudes in three points collinear with the pivot",
            pass,
        ));
    }

    let xyz = Triangle::new(cfg.x.clone(), cfg.y.clone(), cfg.z.clone());
    let uvw = Triangle::new(cfg.u.clone(), cfg.v.clone(), cfg.w.clone());
    let def = Triangle::new(cfg.d.clone(), cfg.e.clone(), cfg.f.clone());
    checks.push(Check::new(
        "indirectly_similar_pairs",
        "the base is indirectly similar to the altitude triangle, and the cevian triangle to the reflected one",
        match (&xyz, &uvw, &def) {
            (Ok(xyz), Ok(uvw), Ok(def)) => {
                indirect_similarity_between(&cfg.tri, xyz).is_ok()
                    && indirect_similarity_between(def, uvw).is_ok()
            }
            _ => false,
        },
    ));

    checks.push(Check::new(
        "one_similarity_fixes_pivot",
        "a single indirect similarity carries all six base points to their partners and fixes the pivot",
        match &xyz {
            Ok(xyz) => match indirect_similarity_between(&cfg.tri, xyz) {
                Ok(sim) => {
                    sim.apply(&cfg.d).coincides(&cfg.u)
                        && sim.apply(&cfg.e).coincides(&cfg.v)
                        && sim.apply(&cfg.f).coincides(&cfg.w)
                        && sim.apply(&cfg.p).coincides(&cfg.p)
                        && sim.center.as_ref().is_some_and(|c| c.coincides(&cfg.p))
                }
                Err(_) => false,
            },
            Err(_) => false,
        },
    ));

    report
}

/// Conic through the six ratio-`t` points of the segments DU, EV, FW, AX,
/// BY, CZ: fitted on five, verified on the sixth.
pub fn midpoint_conic(cfg: &HaggeConfig, t: &Scalar) -> Result<Conic, HaggeError> {
    let pts = [
        divide(&cfg.d, &cfg.u, t),
        divide(&cfg.e, &cfg.v, t),
        divide(&cfg.f, &cfg.w, t),
        divide(&cfg.tri.a, &cfg.x, t),
        divide(&cfg.tri.b, &cfg.y, t),
        divide(&cfg.tri.c, &cfg.z, t),
    ];
    let conic = Conic::through_five([&pts[0], &pts[1], &pts[2], &pts[3], &pts[4]])?;
    if !conic.contains(&pts[5]) {
        return Err(HaggeError::Geom(GeomError::DegenerateConfiguration));
    }
    Ok(conic)
}

/// Reflections of a circumcircle point in the three sides are collinear on
/// a line through H, parallel to the pedal line of the same point.
pub fn double_simson(tri: &Triangle, p: &Point) -> Result<Line, HaggeError> {
    let circ = circumcircle(tri);
    if !circ.contains(p) {
        return Err(HaggeError::Geom(GeomError::PointNotOnCircumcircle));
    }
    let refl: Vec<Point> = tri.sides().iter().map(|s| s.reflect(p)).collect();
    debug_assert!(collinear(&refl[0], &refl[1], &refl[2]));
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if refl[i] != refl[j] {
            return Ok(Line::through(&refl[i], &refl[j])?);
        }
    }
    Err(HaggeError::Geom(GeomError::DegenerateConfiguration))
}

fn circle_of(tri: &Triangle, p: &Point) -> Result<Circle, HaggeError> {
    match build_hagge(tri, p)? {
        HaggeOutcome::Config(cfg) => Ok(cfg.sigma),
        HaggeOutcome::PointCircle(h) => {
            Ok(Circle::on_diameter(&h, &h))
        }
    }
}

/// The three classical special pivots: incenter, symmedian point, and the
/// centroid against the medial triangle.
pub fn special_cases(tri: &Triangle) -> Result<CheckReport, HaggeError> {
    let instance = serde_json::json!({ "triangle": tri });
    let mut report = CheckReport::new(instance, backend_name(tri.backend()));

    // Incenter pivot: the circle contains the Nagel point and H–Na is a
    // diameter. Side lengths may be irrational, in which case this check
    // runs on the float backend.
    {
        let (work, note): (Triangle, Option<&str>) = match incenter(tri) {
            Ok(_) => (tri.clone(), None),
            Err(CentersError::RationalBackendUnsupported) => {
                (tri.to_float_backend(), Some("irrational side lengths; verified on the float backend"))
            }
            Err(_) => (tri.to_float_backend(), Some("incenter unavailable; float fallback")),
        };
        let pass = (|| -> Option<bool> {
            let i = incenter(&work).ok()?;
            let na = nagel_point(&work).ok()?;
            let h = orthocenter(&work);
            let sigma = circle_of(&work, &i).ok()?;
            Some(sigma.contains(&na) && sigma.center().coincides(&midpoint(&h, &na)))
        })()
        .unwrap_or(false);
        let anchor = "the incenter circle contains the Nagel point with the orthocenter opposite it";
        report.checks.push(match note {
            Some(n) => Check::with_detail("incenter_circle", anchor, pass, n),
            None => Check::new("incenter_circle", anchor, pass),
        });
    }

    // Symmedian pivot: the circle on the centroid-orthocenter diameter.
    {
        let g = centroid(tri);
        let h = orthocenter(tri);
        let pass = (|| -> Option<bool> {
            let k = symmedian_point(tri);
            let sigma = circle_of(tri, &k).ok()?;
            Some(sigma.coincides(&Circle::on_diameter(&g, &h)))
        })()
        .unwrap_or(false);
        report.checks.push(Check::new(
            "orthocentroidal_circle",
            "the symmedian-point circle is the circle on the centroid-orthocenter diameter",
            pass,
        ));
    }

    // Centroid pivot against the medial triangle: the circle on the
    // circumcenter-symmedian diameter of the original triangle.
    {
        let pass = (|| -> Option<bool> {
            let med = medial_triangle(tri);
            let g = centroid(tri);
            let o = circumcircle(tri).center();
            let k = symmedian_point(tri);
            let sigma = circle_of(&med, &g).ok()?;
            Some(sigma.coincides(&Circle::on_diameter(&o, &k)))
        })()
        .unwrap_or(false);
        report.checks.push(Check::new(
            "brocard_circle",
            "the centroid circle of the medial triangle is the circle on the circumcenter-symmedian diameter",
            pass,
        ));
    }

    Ok(report)
}

impl From<SpeckmanError> for HaggeError {
    fn from(e: SpeckmanError) -> HaggeError {
        match e {
            SpeckmanError::Geom(g) => HaggeError::Geom(g),
            SpeckmanError::Centers(c) => HaggeError::Centers(c),
            _ => HaggeError::Geom(GeomError::DegenerateConfiguration),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> Triangle {
        Triangle::new(Point::int(0, 0), Point::int(4, 0), Point::int(0, 3)).unwrap()
    }

    fn pt(x: &str, y: &str) -> Point {
        Point::new(
            Scalar::parse(x, Backend::Rational).unwrap(),
            Scalar::parse(y, Backend::Rational).unwrap(),
        )
    }

    fn t1_config() -> HaggeConfig {
        let tri = t1();
        let g = centroid(&tri);
        match build_hagge(&tri, &g).unwrap() {
            HaggeOutcome::Config(cfg) => *cfg,
            HaggeOutcome::PointCircle(_) => panic!("centroid is not the orthocenter here"),
        }
    }

    #[test]
    fn t1_fixture_values() {
        let cfg = t1_config();
        assert_eq!(cfg.d, Point::int(4, 3));
        assert_eq!(cfg.e, pt("-36/73", "123/73"));
        assert_eq!(cfg.f, pt("34/13", "-12/13"));
        assert_eq!(cfg.u, pt("28/25", "-21/25"));
        assert_eq!(cfg.v, pt("36/73", "123/73"));
        assert_eq!(cfg.w, pt("34/13", "12/13"));
        assert_eq!(
            cfg.sigma,
            Circle::new(
                Scalar::parse("-32/25", Backend::Rational).unwrap(),
                Scalar::parse("-27/50", Backend::Rational).unwrap(),
                Scalar::int(0)
            )
        );
        assert!(cfg.sigma.contains(&cfg.h));
        assert_eq!(cfg.qc, pt("32/25", "27/50"));
        assert_eq!(cfg.qc, peiser_center(&cfg.tri, &cfg.p).unwrap());
        assert_eq!(cfg.x, pt("36/25", "48/25"));
    }

    #[test]
    fn t1_suite_passes() {
        let report = verify_hagge_suite(&t1_config());
        let failed: Vec<&str> =
            report.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        assert!(failed.is_empty(), "failing checks: {failed:?}");
        assert_eq!(report.checks.len(), 9);
    }

    #[test]
    fn build_error_cases() {
        let tri = t1();
        assert_eq!(build_hagge(&tri, &Point::int(4, 3)).err(), Some(HaggeError::POnCircumcircle));
        assert_eq!(build_hagge(&tri, &Point::int(2, 0)).err(), Some(HaggeError::POnSideline));
        match build_hagge(&tri, &Point::int(0, 0)) {
            Err(HaggeError::POnSideline) => {}
            other => panic!("vertex pivot: {other:?}"),
        }
        // Orthocenter pivot on a triangle whose orthocenter is interior.
        let acute = Triangle::new(Point::int(0, 0), Point::int(6, 0), Point::int(2, 5)).unwrap();
        let h = orthocenter(&acute);
        match build_hagge(&acute, &h).unwrap() {
            HaggeOutcome::PointCircle(p) => assert_eq!(p, h),
            HaggeOutcome::Config(_) => panic!("expected the point circle"),
        }
    }

    #[test]
    fn circumcenter_pivot_concentric() {
        // Pivot at O: the conjugate is H and the circle is concentric with
        // the circumcircle.
        let tri = Triangle::new(Point::int(0, 0), Point::int(6, 0), Point::int(2, 5)).unwrap();
        let o = circumcircle(&tri).center();
        let center = peiser_center(&tri, &o).unwrap();
        assert_eq!(center, o);
        match build_hagge(&tri, &o).unwrap() {
            HaggeOutcome::Config(cfg) => assert_eq!(cfg.qc, o),
            HaggeOutcome::PointCircle(_) => panic!("O is not H for this triangle"),
        }
    }

    #[test]
    fn midpoint_conic_ratios() {
        let cfg = t1_config();
        for t in [Scalar::ratio(1, 2), Scalar::ratio(1, 3), Scalar::ratio(2, 5)] {
            midpoint_conic(&cfg, &t).unwrap();
        }
        // The endpoints reproduce the two circles.
        let at0 = midpoint_conic(&cfg, &Scalar::int(0)).unwrap();
        assert_eq!(at0, cfg.circ.to_conic());
        let at1 = midpoint_conic(&cfg, &Scalar::int(1)).unwrap();
        assert_eq!(at1, cfg.sigma.to_conic());
    }

    #[test]
    fn double_simson_t1() {
        let tri = t1();
        let p = Point::int(4, 3);
        let line = double_simson(&tri, &p).unwrap();
        assert!(line.contains(&Point::int(0, 0)));
        let simson = crate::geom::simson_line(&tri, &p).unwrap();
        assert!(line.is_parallel(&simson));
        // Interior point is rejected.
        assert!(double_simson(&tri, &Point::int(1, 1)).is_err());
        // Vertex degeneracy still yields a line.
        double_simson(&tri, &tri.c.clone()).unwrap();
    }

    #[test]
    fn special_cases_t1_exact() {
        let report = special_cases(&t1()).unwrap();
        let failed: Vec<&str> =
            report.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        assert!(failed.is_empty(), "failing checks: {failed:?}");
        // 3-4-5 sides are rational, so the incenter check stays exact.
        let inc = report.checks.iter().find(|c| c.name == "incenter_circle").unwrap();
        assert!(inc.detail.is_none());
    }

    #[test]
    fn special_cases_float_fallback() {
        let scalene = Triangle::new(Point::int(0, 0), Point::int(5, 1), Point::int(1, 4)).unwrap();
        let report = special_cases(&scalene).unwrap();
        assert!(report.passed());
        let inc = report.checks.iter().find(|c| c.name == "incenter_circle").unwrap();
        assert!(inc.detail.is_some());
    }
}
