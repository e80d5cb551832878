//! General conics `Ax² + Bxy + Cy² + Dx + Ey + F = 0`.
//!
//! Rectangularity and asymptote-parallelism are decided on the quadratic
//! part only, so the tests stay radical-free.

use super::{det2, normalize_coeffs, GeomError, Line, Point};
use crate::numeric::{Backend, Scalar};
use serde::{Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct Conic {
    /// `[A, B, C, D, E, F]`, normalized.
    pub coeffs: [Scalar; 6],
}

impl Conic {
    pub fn new(mut coeffs: [Scalar; 6]) -> Conic {
        assert!(
            coeffs[..5].iter().any(|c| !c.is_zero()),
            "conic coefficients must not be all zero"
        );
        normalize_coeffs(&mut coeffs);
        Conic { coeffs }
    }

    pub fn backend(&self) -> Backend {
        self.coeffs[0].backend()
    }

    pub fn a(&self) -> &Scalar {
        &self.coeffs[0]
    }
    pub fn b(&self) -> &Scalar {
        &self.coeffs[1]
    }
    pub fn c(&self) -> &Scalar {
        &self.coeffs[2]
    }
    pub fn d(&self) -> &Scalar {
        &self.coeffs[3]
    }
    pub fn e(&self) -> &Scalar {
        &self.coeffs[4]
    }
    pub fn f(&self) -> &Scalar {
        &self.coeffs[5]
    }

    pub fn eval(&self, p: &Point) -> Scalar {
        let [a, b, c, d, e, f] = &self.coeffs;
        a * &p.x.sq() + b * &(&p.x * &p.y) + c * &p.y.sq() + d * &p.x + e * &p.y + f
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_negligible()
    }

    /// The unique conic through five points, as the nullspace of the 5×6
    /// incidence matrix. More than a one-dimensional nullspace (four
    /// collinear points, duplicate points, ...) is degenerate.
    pub fn through_five(points: [&Point; 5]) -> Result<Conic, GeomError> {
        let backend = points[0].backend();
        let rows: Vec<Vec<Scalar>> = points.iter().map(|p| conic_row(p)).collect();
        let basis = nullspace(rows, 6, backend);
        if basis.len() != 1 {
            return Err(GeomError::DegenerateConfiguration);
        }
        let v = basis.into_iter().next().unwrap();
        let coeffs: [Scalar; 6] = v.try_into().expect("six coefficients");
        if coeffs[..5].iter().all(|c| c.is_zero()) {
            return Err(GeomError::DegenerateConfiguration);
        }
        Ok(Conic::new(coeffs))
    }

    /// Center of a central conic: the zero of the gradient.
    pub fn center(&self) -> Result<Point, GeomError> {
        let [a, b, c, d, e, _] = &self.coeffs;
        let two = Scalar::from_int(2, self.backend());
        // 2A x + B y + D = 0, B x + 2C y + E = 0.
        let a11 = &two * a;
        let a22 = &two * c;
        let det = det2(&a11, b, b, &a22);
        if det.is_zero() {
            return Err(GeomError::ParabolicConic);
        }
        let x = det2(&-d, b, &-e, &a22) / &det;
        let y = det2(&a11, &-d, b, &-e) / &det;
        Ok(Point::new(x, y))
    }

    /// Perpendicular asymptotes, i.e. trace-free quadratic part.
    pub fn is_rectangular(&self) -> bool {
        (self.a() + self.c()).is_negligible()
    }

    /// Parallel asymptotes: proportional quadratic parts, tested as exact
    /// cross products so no square roots appear.
    pub fn quadratic_parts_proportional(&self, other: &Conic) -> bool {
        let (a1, b1, c1) = (self.a(), self.b(), self.c());
        let (a2, b2, c2) = (other.a(), other.b(), other.c());
        det2(a1, b1, a2, b2).is_negligible()
            && det2(a1, c1, a2, c2).is_negligible()
            && det2(b1, c1, b2, c2).is_negligible()
    }

    /// The other intersection of a line with the conic through a known point
    /// of both. The line must not be parallel to an asymptote direction
    /// (the quadratic term must survive).
    pub fn second_intersection(&self, l: &Line, known: &Point) -> Result<Point, GeomError> {
        if !self.contains(known) {
            return Err(GeomError::PointNotOnCircle);
        }
        if !l.contains(known) {
            return Err(GeomError::PointNotOnLine);
        }
        let (dx, dy) = l.direction();
        let [a, b, c, d, e, _] = &self.coeffs;
        let two = Scalar::from_int(2, known.backend());
        let c2 = a * &dx.sq() + b * &(&dx * &dy) + c * &dy.sq();
        if c2.is_zero() {
            return Err(GeomError::DegenerateConfiguration);
        }
        let c1 = &two * a * &known.x * &dx
            + b * &(&known.x * &dy + &known.y * &dx)
            + &two * c * &known.y * &dy
            + d * &dx
            + e * &dy;
        let t = -&c1 / &c2;
        Ok(Point::new(&known.x + &(&t * &dx), &known.y + &(&t * &dy)))
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeffs;
        write!(f, "[{}, {}, {}, {}, {}, {}]", c[0], c[1], c[2], c[3], c[4], c[5])
    }
}

impl Serialize for Conic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

/// Incidence row `[x², xy, y², x, y, 1]` for a point.
pub(crate) fn conic_row(p: &Point) -> Vec<Scalar> {
    vec![
        p.x.sq(),
        &p.x * &p.y,
        p.y.sq(),
        p.x.clone(),
        p.y.clone(),
        Scalar::one(p.backend()),
    ]
}

/// Basis of the nullspace of a (rows × cols) matrix by Gaussian elimination.
/// Exact on the rational backend; on the float backend pivots are chosen by
/// magnitude and entries below 1e-10 are treated as zero.
pub fn nullspace(mut rows: Vec<Vec<Scalar>>, cols: usize, backend: Backend) -> Vec<Vec<Scalar>> {
    const FLOAT_RANK_EPS: f64 = 1e-10;
    let is_pivotable = |s: &Scalar| match backend {
        Backend::Rational => !s.is_zero(),
        Backend::Float => s.to_f64().abs() > FLOAT_RANK_EPS,
    };
    let nrows = rows.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        // Pick a pivot row: first usable for rationals, largest for floats.
        let mut pivot = None;
        match backend {
            Backend::Rational => {
                for (i, row) in rows.iter().enumerate().take(nrows).skip(r) {
                    if is_pivotable(&row[col]) {
                        pivot = Some(i);
                        break;
                    }
                }
            }
            Backend::Float => {
                let mut best = FLOAT_RANK_EPS;
                for (i, row) in rows.iter().enumerate().take(nrows).skip(r) {
                    let mag = row[col].to_f64().abs();
                    if mag > best {
                        best = mag;
                        pivot = Some(i);
                    }
                }
            }
        }
        let Some(p) = pivot else { continue };
        rows.swap(r, p);
        let inv = Scalar::one(backend) / rows[r][col].clone();
        for c in col..cols {
            let v = &rows[r][c] * &inv;
            rows[r][c] = v;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for c in col..cols {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![Scalar::zero(backend); cols];
        v[fc] = Scalar::one(backend);
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&rows[ri][fc];
        }
        basis.push(v);
    }
    basis
}
