//! A small line-oriented construction language.
//!
//! ```text
//! point A = (0, 0)
//! point B = (4, 0)
//! point C = (0, 3)
//! triangle T = A B C
//! point P = centroid(T)
//! let Hc = hagge_circle(T, P)
//! assert on_circle(Hc, orthocenter(T))
//! draw Hc
//! ```
//!
//! Statements execute in order; assertion and construction failures are
//! collected per statement instead of aborting the run.

use crate::centers;
use crate::geom::{self, Circle, Conic, Line, Point, Triangle};
use crate::hagge;
use crate::numeric::{Backend, Scalar};
use crate::report::{Check, CheckReport};
use crate::speckman;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScriptError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown name `{name}` at line {line}")]
    UnknownName { line: usize, name: String },
    #[error("`{name}` takes {expected} arguments, got {got} (line {line})")]
    Arity { line: usize, name: String, expected: usize, got: usize },
    #[error("`{name}` used before definition at line {line}")]
    UseBeforeDef { line: usize, name: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Arg {
    Ident(String),
    Literal(Scalar),
    /// Nested construction call, e.g. `orthocenter(T)` inside an assert.
    Call(Call),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Call {
    pub name: String,
    pub args: Vec<Arg>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Point { name: String, coords: Option<(Scalar, Scalar)>, call: Option<Call> },
    Triangle { name: String, vertices: [String; 3] },
    Let { name: String, call: Call },
    Assert { call: Call },
    Draw { name: String, style: Option<String> },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Program {
    pub statements: Vec<Statement>,
}

const CONSTRUCTIONS: &[(&str, usize)] = &[
    ("centroid", 1),
    ("orthocenter", 1),
    ("circumcenter", 1),
    ("circumcircle", 1),
    ("nine_point_circle", 1),
    ("medial", 1),
    ("isogonal", 2),
    ("reflect", 2),
    ("line", 2),
    ("intersect", 2),
    ("midpoint", 2),
    ("divide", 3),
    ("second_intersection", 3),
    ("hagge", 2),
    ("hagge_circle", 2),
    ("double_simson", 2),
    ("perspector", 2),
    ("desargues_axis", 2),
    ("orthologic", 2),
    ("paralogic", 2),
    ("conic5", 5),
    ("speckman_h", 3),
];

const PREDICATES: &[(&str, usize)] = &[
    ("collinear", 3),
    ("concurrent", 3),
    ("concyclic", 4),
    ("on_circle", 2),
    ("on_conic", 2),
    ("equal", 2),
    ("parallel", 2),
    ("perpendicular", 2),
];

fn arity_of(name: &str) -> Option<usize> {
    CONSTRUCTIONS
        .iter()
        .chain(PREDICATES.iter())
        .find(|(n, _)| *n == name)
        .map(|(_, a)| *a)
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Cursor<'a> {
    line: &'a str,
    lineno: usize,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: &'a str, lineno: usize) -> Cursor<'a> {
        Cursor { line, lineno, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.line[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.line.len() - trimmed.len();
    }

    fn error(&self, msg: impl Into<String>) -> ScriptError {
        ScriptError::Syntax { line: self.lineno, col: self.pos + 1, msg: msg.into() }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.rest().is_empty() || self.rest().starts_with('#')
    }

    fn expect(&mut self, token: char) -> Result<(), ScriptError> {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn ident(&mut self) -> Result<String, ScriptError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|(_, c)| !(c.is_alphanumeric() || *c == '_' || *c == '\''))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if end == 0 || !rest.starts_with(|c: char| c.is_alphabetic() || c == '_') {
            return Err(self.error("expected an identifier"));
        }
        self.pos += end;
        Ok(rest[..end].to_string())
    }

    fn scalar(&mut self) -> Result<Scalar, ScriptError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|(_, c)| !(c.is_ascii_digit() || matches!(c, '-' | '+' | '/' | '.')))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error("expected a number"));
        }
        let text = &rest[..end];
        let value = Scalar::parse(text, Backend::Rational)
            .map_err(|_| self.error(format!("cannot parse number `{text}`")))?;
        self.pos += end;
        Ok(value)
    }

    fn call(&mut self, name: String) -> Result<Call, ScriptError> {
        self.expect('(')?;
        let mut args = Vec::new();
        if self.peek() != Some(')') {
            loop {
                args.push(self.arg()?);
                match self.peek() {
                    Some(',') => self.expect(',')?,
                    Some(')') => break,
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
        }
        self.expect(')')?;
        if let Some(expected) = arity_of(&name) {
            if expected != args.len() {
                return Err(ScriptError::Arity {
                    line: self.lineno,
                    name,
                    expected,
                    got: args.len(),
                });
            }
        } else {
            return Err(ScriptError::UnknownName { line: self.lineno, name });
        }
        Ok(Call { name, args })
    }

    fn arg(&mut self) -> Result<Arg, ScriptError> {
        match self.peek() {
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.ident()?;
                if self.rest().starts_with('(') {
                    Ok(Arg::Call(self.call(name)?))
                } else {
                    Ok(Arg::Ident(name))
                }
            }
            _ => Ok(Arg::Literal(self.scalar()?)),
        }
    }
}

pub fn parse_script(text: &str) -> Result<Program, ScriptError> {
    let mut statements = Vec::new();
    let mut defined: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let mut cur = Cursor::new(raw, lineno);
        if cur.at_end() {
            continue;
        }
        let keyword = cur.ident()?;
        let stmt = match keyword.as_str() {
            "point" => {
                let name = cur.ident()?;
                cur.expect('=')?;
                if cur.peek() == Some('(') {
                    cur.expect('(')?;
                    let x = cur.scalar()?;
                    cur.expect(',')?;
                    let y = cur.scalar()?;
                    cur.expect(')')?;
                    Statement::Point { name, coords: Some((x, y)), call: None }
                } else {
                    let callee = cur.ident()?;
                    let call = cur.call(callee)?;
                    Statement::Point { name, coords: None, call: Some(call) }
                }
            }
            "triangle" => {
                let name = cur.ident()?;
                cur.expect('=')?;
                let a = cur.ident()?;
                let b = cur.ident()?;
                let c = cur.ident()?;
                Statement::Triangle { name, vertices: [a, b, c] }
            }
            "let" => {
                let name = cur.ident()?;
                cur.expect('=')?;
                let callee = cur.ident()?;
                let call = cur.call(callee)?;
                Statement::Let { name, call }
            }
            "assert" => {
                let callee = cur.ident()?;
                let call = cur.call(callee)?;
                if !PREDICATES.iter().any(|(n, _)| *n == call.name) {
                    return Err(ScriptError::UnknownName { line: lineno, name: call.name });
                }
                Statement::Assert { call }
            }
            "draw" => {
                let name = cur.ident()?;
                let style = if cur.at_end() { None } else { Some(cur.ident()?) };
                Statement::Draw { name, style }
            }
            other => {
                return Err(cur.error(format!(
                    "expected `point`, `triangle`, `let`, `assert`, or `draw`, found `{other}`"
                )))
            }
        };
        if !cur.at_end() {
            return Err(cur.error("trailing input"));
        }
        check_names(&stmt, &defined, lineno)?;
        if let Some(name) = stmt.defines() {
            if defined.iter().any(|d| d == name) {
                return Err(ScriptError::Syntax {
                    line: lineno,
                    col: 1,
                    msg: format!("`{name}` is already defined; names are single-assignment"),
                });
            }
            defined.push(name.to_string());
        }
        statements.push(stmt);
    }
    Ok(Program { statements })
}

impl Statement {
    fn defines(&self) -> Option<&str> {
        match self {
            Statement::Point { name, .. }
            | Statement::Triangle { name, .. }
            | Statement::Let { name, .. } => Some(name),
            Statement::Assert { .. } | Statement::Draw { .. } => None,
        }
    }
}

fn check_names(stmt: &Statement, defined: &[String], line: usize) -> Result<(), ScriptError> {
    let check = |name: &str| -> Result<(), ScriptError> {
        if defined.iter().any(|d| d == name) {
            Ok(())
        } else {
            Err(ScriptError::UseBeforeDef { line, name: name.to_string() })
        }
    };
    fn walk(
        call: &Call,
        check: &dyn Fn(&str) -> Result<(), ScriptError>,
    ) -> Result<(), ScriptError> {
        for arg in &call.args {
            match arg {
                Arg::Ident(name) => check(name)?,
                Arg::Call(inner) => walk(inner, check)?,
                Arg::Literal(_) => {}
            }
        }
        Ok(())
    }
    match stmt {
        Statement::Point { call: Some(call), .. }
        | Statement::Let { call, .. }
        | Statement::Assert { call } => walk(call, &check),
        Statement::Point { .. } => Ok(()),
        Statement::Triangle { vertices, .. } => {
            vertices.iter().try_for_each(|v| check(v))
        }
        Statement::Draw { name, .. } => check(name),
    }
}

// ---------------------------------------------------------------------------
// Serialization (canonical form; parse → serialize → parse is the identity)
// ---------------------------------------------------------------------------

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Ident(name) => write!(f, "{name}"),
            Arg::Literal(s) => write!(f, "{s}"),
            Arg::Call(call) => write!(f, "{call}"),
        }
    }
}

impl fmt::Display for Call {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        for (i, arg) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{arg}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Point { name, coords: Some((x, y)), .. } => {
                write!(f, "point {name} = ({x}, {y})")
            }
            Statement::Point { name, call: Some(call), .. } => {
                write!(f, "point {name} = {call}")
            }
            Statement::Point { name, .. } => write!(f, "point {name} = <invalid>"),
            Statement::Triangle { name, vertices } => {
                write!(f, "triangle {name} = {} {} {}", vertices[0], vertices[1], vertices[2])
            }
            Statement::Let { name, call } => write!(f, "let {name} = {call}"),
            Statement::Assert { call } => write!(f, "assert {call}"),
            Statement::Draw { name, style: Some(style) } => write!(f, "draw {name} {style}"),
            Statement::Draw { name, style: None } => write!(f, "draw {name}"),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for stmt in &self.statements {
            writeln!(f, "{stmt}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Point(Point),
    Line(Line),
    Circle(Circle),
    Conic(Conic),
    Triangle(Triangle),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Circle(_) => "circle",
            Value::Conic(_) => "conic",
            Value::Triangle(_) => "triangle",
        }
    }

    fn describe(&self) -> String {
        match self {
            Value::Scalar(s) => s.to_string(),
            Value::Point(p) => format!("({}, {})", p.x, p.y),
            Value::Line(l) => format!("[{}, {}, {}]", l.a, l.b, l.c),
            Value::Circle(c) => format!("circle[g={}, f={}, h={}]", c.g, c.f, c.h),
            Value::Conic(c) => {
                let cs: Vec<String> = c.coeffs.iter().map(|s| s.to_string()).collect();
                format!("conic[{}]", cs.join(", "))
            }
            Value::Triangle(t) => format!(
                "triangle[({}, {}) ({}, {}) ({}, {})]",
                t.a.x, t.a.y, t.b.x, t.b.y, t.c.x, t.c.y
            ),
        }
    }
}

/// Name → value bindings in definition order, plus the draw list.
#[derive(Debug, Clone, Default)]
pub struct Environment {
    pub values: Vec<(String, Value)>,
    pub draws: Vec<(String, Option<String>)>,
}

impl Environment {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

struct Evaluator {
    backend: Backend,
    env: Environment,
}

type EvalResult = Result<Value, String>;

impl Evaluator {
    fn scalar(&self, s: &Scalar) -> Scalar {
        match self.backend {
            Backend::Rational => s.clone(),
            Backend::Float => s.to_float_backend(),
        }
    }

    fn arg(&self, arg: &Arg) -> EvalResult {
        match arg {
            Arg::Literal(s) => Ok(Value::Scalar(self.scalar(s))),
            Arg::Ident(name) => self
                .env
                .get(name)
                .cloned()
                .ok_or_else(|| format!("`{name}` is not defined")),
            Arg::Call(call) => self.call(call),
        }
    }

    fn point(&self, arg: &Arg) -> Result<Point, String> {
        match self.arg(arg)? {
            Value::Point(p) => Ok(p),
            other => Err(format!("expected a point, got a {}", other.kind())),
        }
    }

    fn line(&self, arg: &Arg) -> Result<Line, String> {
        match self.arg(arg)? {
            Value::Line(l) => Ok(l),
            other => Err(format!("expected a line, got a {}", other.kind())),
        }
    }

    fn circle(&self, arg: &Arg) -> Result<Circle, String> {
        match self.arg(arg)? {
            Value::Circle(c) => Ok(c),
            other => Err(format!("expected a circle, got a {}", other.kind())),
        }
    }

    fn conic(&self, arg: &Arg) -> Result<Conic, String> {
        match self.arg(arg)? {
            Value::Conic(c) => Ok(c),
            Value::Circle(c) => Ok(c.to_conic()),
            other => Err(format!("expected a conic, got a {}", other.kind())),
        }
    }

    fn triangle(&self, arg: &Arg) -> Result<Triangle, String> {
        match self.arg(arg)? {
            Value::Triangle(t) => Ok(t),
            other => Err(format!("expected a triangle, got a {}", other.kind())),
        }
    }

    fn number(&self, arg: &Arg) -> Result<Scalar, String> {
        match self.arg(arg)? {
            Value::Scalar(s) => Ok(s),
            other => Err(format!("expected a scalar, got a {}", other.kind())),
        }
    }

    fn call(&self, call: &Call) -> EvalResult {
        let a = &call.args;
        let err = |e: &dyn std::fmt::Display| e.to_string();
        match call.name.as_str() {
            "centroid" => Ok(Value::Point(centers::centroid(&self.triangle(&a[0])?))),
            "orthocenter" => Ok(Value::Point(centers::orthocenter(&self.triangle(&a[0])?))),
            "circumcenter" => Ok(Value::Point(centers::circumcenter(&self.triangle(&a[0])?))),
            "circumcircle" => Ok(Value::Circle(centers::circumcircle(&self.triangle(&a[0])?))),
            "nine_point_circle" => {
                Ok(Value::Circle(centers::nine_point_circle(&self.triangle(&a[0])?)))
            }
            "medial" => Ok(Value::Triangle(centers::medial_triangle(&self.triangle(&a[0])?))),
            "isogonal" => centers::isogonal_conjugate(&self.triangle(&a[0])?, &self.point(&a[1])?)
                .map(Value::Point)
                .map_err(|e| err(&e)),
            "reflect" => Ok(Value::Point(self.line(&a[0])?.reflect(&self.point(&a[1])?))),
            "line" => Line::through(&self.point(&a[0])?, &self.point(&a[1])?)
                .map(Value::Line)
                .map_err(|e| err(&e)),
            "intersect" => self
                .line(&a[0])?
                .intersect(&self.line(&a[1])?)
                .map(Value::Point)
                .map_err(|e| err(&e)),
            "midpoint" => Ok(Value::Point(geom::midpoint(&self.point(&a[0])?, &self.point(&a[1])?))),
            "divide" => Ok(Value::Point(geom::divide(
                &self.point(&a[0])?,
                &self.point(&a[1])?,
                &self.number(&a[2])?,
            ))),
            "second_intersection" => self
                .circle(&a[0])?
                .second_intersection(&self.line(&a[1])?, &self.point(&a[2])?)
                .map(Value::Point)
                .map_err(|e| err(&e)),
            "hagge" | "hagge_circle" => {
                let tri = self.triangle(&a[0])?;
                let p = self.point(&a[1])?;
                match hagge::build_hagge(&tri, &p).map_err(|e| err(&e))? {
                    hagge::HaggeOutcome::Config(cfg) => {
                        if call.name == "hagge" {
                            Triangle::new(cfg.x, cfg.y, cfg.z)
                                .map(Value::Triangle)
                                .map_err(|e| err(&e))
                        } else {
                            Ok(Value::Circle(cfg.sigma))
                        }
                    }
                    hagge::HaggeOutcome::PointCircle(_) => {
                        Err("the circle degenerates to the orthocenter".to_string())
                    }
                }
            }
            "double_simson" => hagge::double_simson(&self.triangle(&a[0])?, &self.point(&a[1])?)
                .map(Value::Line)
                .map_err(|e| err(&e)),
            "perspector" => speckman::perspector(&self.triangle(&a[0])?, &self.triangle(&a[1])?)
                .map(Value::Point)
                .map_err(|e| err(&e)),
            "desargues_axis" => {
                speckman::desargues_axis(&self.triangle(&a[0])?, &self.triangle(&a[1])?)
                    .map(Value::Line)
                    .map_err(|e| err(&e))
            }
            "orthologic" => {
                speckman::orthologic_centers(&self.triangle(&a[0])?, &self.triangle(&a[1])?)
                    .map(|(first, _)| Value::Point(first))
                    .map_err(|e| err(&e))
            }
            "paralogic" => {
                speckman::paralogic_center(&self.triangle(&a[0])?, &self.triangle(&a[1])?)
                    .map(Value::Point)
                    .map_err(|e| err(&e))
            }
            "conic5" => {
                let pts: Vec<Point> =
                    a.iter().map(|arg| self.point(arg)).collect::<Result<_, _>>()?;
                Conic::through_five([&pts[0], &pts[1], &pts[2], &pts[3], &pts[4]])
                    .map(Value::Conic)
                    .map_err(|e| err(&e))
            }
            "speckman_h" => {
                let tri = self.triangle(&a[0])?;
                let m = self.number(&a[1])?;
                let k = self.number(&a[2])?;
                speckman::build_speckman_through_h(&tri, &m, &k)
                    .map(|cfg| Value::Triangle(cfg.image))
                    .map_err(|e| err(&e))
            }
            other => Err(format!("unknown construction `{other}`")),
        }
    }

    /// Returns (pass, description-of-both-sides).
    fn predicate(&self, call: &Call) -> Result<(bool, String), String> {
        let a = &call.args;
        match call.name.as_str() {
            "collinear" => {
                let (p, q, r) = (self.point(&a[0])?, self.point(&a[1])?, self.point(&a[2])?);
                let pass = geom::collinear(&p, &q, &r);
                Ok((pass, format!("orientation of {}, {}, {} is {}",
                    Value::Point(p.clone()).describe(),
                    Value::Point(q.clone()).describe(),
                    Value::Point(r.clone()).describe(),
                    geom::orient(&p, &q, &r))))
            }
            "concurrent" => {
                let (l1, l2, l3) = (self.line(&a[0])?, self.line(&a[1])?, self.line(&a[2])?);
                let pass = geom::concurrent(&l1, &l2, &l3);
                Ok((pass, format!("lines {}, {}, {}",
                    Value::Line(l1).describe(),
                    Value::Line(l2).describe(),
                    Value::Line(l3).describe())))
            }
            "concyclic" => {
                let pts: Vec<Point> =
                    a.iter().map(|arg| self.point(arg)).collect::<Result<_, _>>()?;
                let pass = geom::concyclic(&pts[0], &pts[1], &pts[2], &pts[3]);
                let desc: Vec<String> =
                    pts.iter().map(|p| Value::Point(p.clone()).describe()).collect();
                Ok((pass, format!("points {}", desc.join(", "))))
            }
            "on_circle" => {
                let c = self.circle(&a[0])?;
                let p = self.point(&a[1])?;
                let residue = c.eval(&p);
                Ok((c.contains(&p), format!(
                    "{} evaluated at {} gives {}",
                    Value::Circle(c.clone()).describe(),
                    Value::Point(p).describe(),
                    residue)))
            }
            "on_conic" => {
                let c = self.conic(&a[0])?;
                let p = self.point(&a[1])?;
                let residue = c.eval(&p);
                Ok((c.contains(&p), format!(
                    "{} evaluated at {} gives {}",
                    Value::Conic(c.clone()).describe(),
                    Value::Point(p).describe(),
                    residue)))
            }
            "equal" => {
                let lhs = self.arg(&a[0])?;
                let rhs = self.arg(&a[1])?;
                let pass = match (&lhs, &rhs) {
                    (Value::Circle(x), Value::Circle(y)) => x.coincides(y),
                    (Value::Line(x), Value::Line(y)) => x.coincides(y),
                    (Value::Point(x), Value::Point(y)) => x.coincides(y),
                    _ => lhs == rhs,
                };
                Ok((pass, format!("{} versus {}", lhs.describe(), rhs.describe())))
            }
            "parallel" => {
                let (l1, l2) = (self.line(&a[0])?, self.line(&a[1])?);
                let pass = l1.is_parallel(&l2);
                Ok((pass, format!("{} and {}",
                    Value::Line(l1).describe(), Value::Line(l2).describe())))
            }
            "perpendicular" => {
                let (l1, l2) = (self.line(&a[0])?, self.line(&a[1])?);
                let pass = l1.is_perpendicular(&l2);
                Ok((pass, format!("{} and {}",
                    Value::Line(l1).describe(), Value::Line(l2).describe())))
            }
            other => Err(format!("unknown predicate `{other}`")),
        }
    }
}

pub fn run_program(prog: &Program, backend: Backend) -> (CheckReport, Environment) {
    let backend_name = match backend {
        Backend::Rational => "rational",
        Backend::Float => "float",
    };
    let mut report = CheckReport::new(
        serde_json::json!({ "script": prog.to_string() }),
        backend_name,
    );
    let mut ev = Evaluator { backend, env: Environment::default() };

    for (idx, stmt) in prog.statements.iter().enumerate() {
        let check_name = format!("stmt_{idx}");
        let anchor = stmt.to_string();
        let fail = |report: &mut CheckReport, detail: String| {
            report.checks.push(Check::with_detail(&check_name, &anchor, false, detail));
        };
        match stmt {
            Statement::Point { name, coords: Some((x, y)), .. } => {
                let p = Point::new(ev.scalar(x), ev.scalar(y));
                ev.env.values.push((name.clone(), Value::Point(p)));
            }
            Statement::Point { name, call: Some(call), .. } => match ev.call(call) {
                Ok(Value::Point(p)) => ev.env.values.push((name.clone(), Value::Point(p))),
                Ok(other) => fail(&mut report, format!("expected a point, got a {}", other.kind())),
                Err(e) => fail(&mut report, e),
            },
            Statement::Point { .. } => fail(&mut report, "invalid point statement".to_string()),
            Statement::Triangle { name, vertices } => {
                let pts: Result<Vec<Point>, String> = vertices
                    .iter()
                    .map(|v| ev.point(&Arg::Ident(v.clone())))
                    .collect();
                match pts.and_then(|p| {
                    Triangle::new(p[0].clone(), p[1].clone(), p[2].clone())
                        .map_err(|e| e.to_string())
                }) {
                    Ok(t) => ev.env.values.push((name.clone(), Value::Triangle(t))),
                    Err(e) => fail(&mut report, e),
                }
            }
            Statement::Let { name, call } => match ev.call(call) {
                Ok(v) => ev.env.values.push((name.clone(), v)),
                Err(e) => fail(&mut report, e),
            },
            Statement::Assert { call } => match ev.predicate(call) {
                Ok((pass, detail)) => {
                    report.checks.push(Check::with_detail(&check_name, &anchor, pass, detail));
                }
                Err(e) => fail(&mut report, e),
            },
            Statement::Draw { name, style } => {
                if ev.env.get(name).is_some() {
                    ev.env.draws.push((name.clone(), style.clone()));
                } else {
                    fail(&mut report, format!("`{name}` is not defined"));
                }
            }
        }
    }
    (report, ev.env)
}
