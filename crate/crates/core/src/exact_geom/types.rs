use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("coincident points")]
    CoincidentPoints,
    #[error("{}", if *.identical { "identical lines" } else { "parallel lines" })]
    ParallelLines { identical: bool },
    #[error("collinear points")]
    CollinearPoints,
    #[error("point not on circle")]
    PointNotOnCircle,
    #[error("point not on line")]
    PointNotOnLine,
    #[error("identical circles")]
    CirclesIdentical,
    #[error("pole or polar at infinity (center degeneracy)")]
    CenterDegenerate,
    #[error("degenerate: {0}")]
    Degenerate(String),
}

impl GeomError {
    pub fn degenerate(what: impl Into<String>) -> Self {
        GeomError::Degenerate(what.into())
    }
}

pub type GeomResult<T> = Result<T, GeomError>;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, other: &Point) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn dist2(&self, other: &Point) -> Scalar {
        (self - other).norm2()
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new((&self.x + &other.x).half(), (&self.y + &other.y).half())
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    /// Rotation by +90°.
    pub fn perp(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }

    pub fn translate(&self, dx: &Scalar, dy: &Scalar) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }

    pub fn to_complex(&self) -> Complex {
        Complex::new(self.x.clone(), self.y.clone())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

/// Line `a·x + b·y + c = 0`, stored as a coprime integer triple whose first
/// nonzero coefficient is positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Line {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Line {
    /// Canonicalizes the triple. Fails if `a = b = 0`.
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> GeomResult<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(GeomError::degenerate("line with a = b = 0"));
        }
        let lcm = [&a, &b, &c]
            .iter()
            .fold(BigInt::from(1), |acc, s| acc.lcm(s.denom()));
        let ints: Vec<BigInt> = [&a, &b, &c]
            .iter()
            .map(|s| s.numer() * (&lcm / s.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let lead = if !ints[0].is_zero() { &ints[0] } else { &ints[1] };
        if lead.is_negative() {
            g = -g;
        }
        let mut it = ints.into_iter().map(|n| Scalar::from_bigints(n / &g, BigInt::from(1)));
        Ok(Line {
            a: it.next().unwrap(),
            b: it.next().unwrap(),
            c: it.next().unwrap(),
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> GeomResult<Self> {
        Line::new(a.into(), b.into(), c.into())
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn normal(&self) -> Point {
        Point::new(self.a.clone(), self.b.clone())
    }

    pub fn direction(&self) -> Point {
        Point::new(self.b.clone(), -&self.a)
    }

    /// `a·x + b·y + c`; zero iff `p` lies on the line.
    pub fn eval(&self, p: &Point) -> Scalar {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x + {}y + {} = 0]", self.a, self.b, self.c)
    }
}

impl<'de> Deserialize<'de> for Line {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: Scalar,
            b: Scalar,
            c: Scalar,
        }
        let raw = Raw::deserialize(deserializer)?;
        let line = Line::new(raw.a.clone(), raw.b.clone(), raw.c.clone())
            .map_err(serde::de::Error::custom)?;
        if line.a != raw.a || line.b != raw.b || line.c != raw.c {
            return Err(serde::de::Error::custom("line coefficients not canonical"));
        }
        Ok(line)
    }
}

/// Circle `x² + y² + d·x + e·y + f = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circle {
    pub d: Scalar,
    pub e: Scalar,
    pub f: Scalar,
}

impl Circle {
    pub fn new(d: Scalar, e: Scalar, f: Scalar) -> Self {
        Circle { d, e, f }
    }

    pub fn from_center_radius2(center: &Point, radius2: &Scalar) -> Self {
        Circle {
            d: -(&center.x + &center.x),
            e: -(&center.y + &center.y),
            f: center.norm2() - radius2,
        }
    }

    pub fn center(&self) -> Point {
        Point::new(-self.d.half(), -self.e.half())
    }

    pub fn radius2(&self) -> Scalar {
        self.d.square() / Scalar::from_int(4) + self.e.square() / Scalar::from_int(4) - &self.f
    }

    /// Power of `p`; zero iff `p` lies on the circle.
    pub fn power(&self, p: &Point) -> Scalar {
        p.norm2() + &self.d * &p.x + &self.e * &p.y + &self.f
    }
}

impl fmt::Debug for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[x² + y² + {}x + {}y + {} = 0]", self.d, self.e, self.f)
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Complex {
    pub re: Scalar,
    pub im: Scalar,
}

impl Complex {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        Complex { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        Complex::new(re, Scalar::zero())
    }

    pub fn one() -> Self {
        Complex::real(Scalar::one())
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm2(&self) -> Scalar {
        self.re.square() + self.im.square()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn checked_div(&self, rhs: &Complex) -> Option<Complex> {
        let n = rhs.norm2();
        if n.is_zero() {
            return None;
        }
        let num = self * &rhs.conj();
        Some(Complex::new(&num.re / &n, &num.im / &n))
    }

    pub fn to_point(&self) -> Point {
        Point::new(self.re.clone(), self.im.clone())
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Angle between two lines modulo π, as the projective class `(cross : dot)`
/// of their direction vectors.
#[derive(Clone, Serialize, Deserialize)]
pub struct DirectedAngleClass {
    pub cross: Scalar,
    pub dot: Scalar,
}

impl DirectedAngleClass {
    pub fn negate(&self) -> Self {
        DirectedAngleClass {
            cross: -&self.cross,
            dot: self.dot.clone(),
        }
    }

    /// `cross₁·dot₂ − cross₂·dot₁`; zero iff the classes agree.
    pub fn discrepancy(&self, other: &Self) -> Scalar {
        &self.cross * &other.dot - &other.cross * &self.dot
    }

    /// Tangent of the angle, `None` at 90°.
    pub fn tan(&self) -> Option<Scalar> {
        self.dot.recip().map(|r| &self.cross * &r)
    }
}

impl PartialEq for DirectedAngleClass {
    fn eq(&self, other: &Self) -> bool {
        self.discrepancy(other).is_zero()
    }
}

impl Eq for DirectedAngleClass {}

impl fmt::Debug for DirectedAngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∠({} : {})", self.cross, self.dot)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}
