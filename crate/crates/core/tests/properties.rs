//! Property-based checks of the kernel invariants: exact arithmetic laws,
//! involutions, and the conic/circle identities the higher suites rely on.

use hagge_core::centers::{
    centroid, circumcenter, circumcircle, isogonal_conjugate, medial_triangle, orthocenter,
};
use hagge_core::generate;
use hagge_core::geom::{
    half_turn, radical_axis, Circle, Conic, Line, Point, Triangle,
};
use hagge_core::numeric::Backend;
use hagge_core::Scalar;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=50).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_filter_map("degenerate", |(a, b, c)| Triangle::new(a, b, c).ok())
}

/// Exact 6×6 determinant by fraction-free elimination; the independent
/// incidence oracle for the five-point conic fit.
fn det6(rows: &mut [[Scalar; 6]; 6]) -> Scalar {
    let mut sign = 1i64;
    let mut det = Scalar::ratio(1, 1);
    for col in 0..6 {
        let pivot = (col..6).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else {
            return Scalar::ratio(0, 1);
        };
        if p != col {
            rows.swap(p, col);
            sign = -sign;
        }
        let pv = rows[col][col].clone();
        det = &det * &pv;
        for r in (col + 1)..6 {
            let factor = &rows[r][col] / &pv;
            for c in col..6 {
                rows[r][c] = &rows[r][c] - &(&factor * &rows[col][c]);
            }
        }
    }
    &det * &Scalar::ratio(sign, 1)
}

fn incidence_row(p: &Point) -> [Scalar; 6] {
    [
        &p.x * &p.x,
        &p.x * &p.y,
        &p.y * &p.y,
        p.x.clone(),
        p.y.clone(),
        Scalar::ratio(1, 1),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn rational_arithmetic_is_exact(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // Normalized representation is canonical: equal values print equally.
        let double = &(&a + &a) / &Scalar::ratio(2, 1);
        prop_assert_eq!(double.to_string(), a.to_string());
    }

    #[test]
    fn reflection_is_an_involution(tri in triangle(), p in point()) {
        for side in tri.sides() {
            prop_assert_eq!(side.reflect(&side.reflect(&p)), p.clone());
        }
    }

    #[test]
    fn circle_through_is_exactly_incident(tri in triangle()) {
        let c = Circle::through(&tri.a, &tri.b, &tri.c).unwrap();
        for v in tri.vertices() {
            prop_assert!(c.eval(v).is_zero());
        }
    }

    #[test]
    fn second_intersection_is_an_involution(tri in triangle(), seed in any::<u64>()) {
        let mut rng = generate::rng_for(seed);
        let circ = circumcircle(&tri);
        let p = generate::random_circumcircle_point(&mut rng, &tri);
        let q = generate::random_circumcircle_point(&mut rng, &tri);
        prop_assume!(p != q);
        let l = Line::through(&p, &q).unwrap();
        let back = circ.second_intersection(&l, &p).unwrap();
        prop_assert!(circ.eval(&back).is_zero());
        prop_assert!(l.contains(&back));
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(circ.second_intersection(&l, &back).unwrap(), p);
    }

    #[test]
    fn radical_axis_is_perpendicular_to_center_line(t1 in triangle(), t2 in triangle()) {
        let c1 = circumcircle(&t1);
        let c2 = circumcircle(&t2);
        prop_assume!(c1.center() != c2.center());
        let axis = radical_axis(&c1, &c2).unwrap();
        let centers = Line::through(&c1.center(), &c2.center()).unwrap();
        prop_assert!(axis.is_perpendicular(&centers));
    }

    #[test]
    fn euler_relation_and_medial_orthocenter(tri in triangle()) {
        let g = centroid(&tri);
        let h = orthocenter(&tri);
        let o = circumcenter(&tri);
        // H - G = 2 (G - O).
        let two = Scalar::ratio(2, 1);
        prop_assert_eq!(&h.x - &g.x, &two * &(&g.x - &o.x));
        prop_assert_eq!(&h.y - &g.y, &two * &(&g.y - &o.y));
        prop_assert_eq!(orthocenter(&medial_triangle(&tri)), o);
    }

    #[test]
    fn five_point_hyperbola_meets_the_circumcircle_again(seed in any::<u64>()) {
        let mut rng = generate::rng_for(seed);
        let (tri, p, cfg) = generate::random_hagge(&mut rng);
        let h = orthocenter(&tri);
        let conic = Conic::through_five([&tri.a, &tri.b, &tri.c, &h, &p]).unwrap();
        prop_assert!(conic.is_rectangular());
        // The hyperbola and the circumcircle share A, B, C; their fourth
        // common point is the half-turn of H about the hyperbola's center.
        let fourth = half_turn(&h, &conic.center().unwrap());
        prop_assert!(conic.eval(&fourth).is_zero());
        prop_assert!(cfg.circ.eval(&fourth).is_zero());

        // Independent oracle: the 6×6 incidence determinant with the fourth
        // point appended vanishes exactly.
        let mut rows = [
            incidence_row(&tri.a),
            incidence_row(&tri.b),
            incidence_row(&tri.c),
            incidence_row(&h),
            incidence_row(&p),
            incidence_row(&fourth),
        ];
        prop_assert!(det6(&mut rows).is_zero());
    }
}

proptest! {
    // Heavier constructions get fewer cases; each still runs on every
    // `cargo test` invocation.
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn isogonal_conjugation_is_an_involution(seed in any::<u64>()) {
        let mut rng = generate::rng_for(seed);
        // 200 pairs in total across the proptest cases would be slow here;
        // each case checks a dozen fresh (triangle, point) draws instead.
        for _ in 0..13 {
            let (tri, p, _) = generate::random_hagge(&mut rng);
            let pg = isogonal_conjugate(&tri, &p).unwrap();
            prop_assert_eq!(isogonal_conjugate(&tri, &pg).unwrap(), p);
        }
    }

    #[test]
    fn speckman_perspector_always_exists(seed in any::<u64>()) {
        let mut rng = generate::rng_for(seed);
        let (_, _, _, cfg) = generate::random_speckman_h(&mut rng);
        // The builder already located the perspector; cross-check it joins
        // all three vertex pairs.
        for (v, v_img) in cfg.tri.vertices().iter().zip(cfg.image.vertices().iter()) {
            let join = Line::through(v, v_img).unwrap();
            prop_assert!(join.contains(&cfg.q));
        }
    }

    #[test]
    fn similarity_from_two_pairs_maps_the_third(seed in any::<u64>()) {
        let mut rng = generate::rng_for(seed);
        let (_, _, _, cfg) = generate::random_speckman_h(&mut rng);
        let sim = hagge_core::speckman::similarity_from_pairs(
            &cfg.tri.a,
            &cfg.image.a,
            &cfg.tri.b,
            &cfg.image.b,
        )
        .unwrap();
        prop_assert_eq!(sim.apply(&cfg.tri.c), cfg.image.c.clone());
    }

    #[test]
    fn midpoint_conic_respects_the_half_turn_symmetry(seed in any::<u64>()) {
        let mut rng = generate::rng_for(seed);
        let (_, _, cfg) = generate::random_hagge(&mut rng);
        let t = Scalar::ratio(1, 2);
        let conic = hagge_core::hagge::midpoint_conic(&cfg, &t).unwrap();
        // The six ratio-1/2 points all satisfy the fitted conic, and the
        // conic is symmetric about its own center.
        let m = hagge_core::geom::divide(&cfg.e, &cfg.v, &t);
        prop_assert!(conic.eval(&m).is_zero());
        if let Ok(center) = conic.center() {
            prop_assert!(conic.eval(&half_turn(&m, &center)).is_zero());
        }
    }
}

#[test]
fn backend_parity_on_the_fixture() {
    // The same script-level construction in both backends agrees to within
    // the float tolerance.
    let tri = Triangle::new(Point::int(0, 0), Point::int(4, 0), Point::int(0, 3)).unwrap();
    let exact = circumcircle(&tri);
    let float = circumcircle(&tri.to_float_backend());
    assert!((exact.g.to_f64() - float.g.to_f64()).abs() < 1e-12);
    assert!((exact.f.to_f64() - float.f.to_f64()).abs() < 1e-12);
    assert!((exact.h.to_f64() - float.h.to_f64()).abs() < 1e-12);
    let _ = Backend::Float;
}
