#![allow(dead_code)]

use brocard::exact_geom::{collinear, Point, Scalar};
use proptest::prelude::*;

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| Scalar::ratio(n, d))
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn point() -> impl Strategy<Value = Point> {
    (scalar(), scalar()).prop_map(|(x, y)| Point::new(x, y))
}

pub fn triangle() -> impl Strategy<Value = [Point; 3]> {
    [point(), point(), point()].prop_filter("non-degenerate triangle", |[a, b, c]| !collinear(a, b, c))
}

/// Circumcenter from the closed form, independent of the kernel's circle code.
pub fn circumcenter_oracle(a: &Point, b: &Point, c: &Point) -> Point {
    let two = Scalar::from_int(2);
    let d = two * (&a.x * &(&b.y - &c.y) + &b.x * &(&c.y - &a.y) + &c.x * &(&a.y - &b.y));
    let (na, nb, nc) = (a.norm2(), b.norm2(), c.norm2());
    let ux = &na * &(&b.y - &c.y) + &nb * &(&c.y - &a.y) + &nc * &(&a.y - &b.y);
    let uy = &na * &(&c.x - &b.x) + &nb * &(&a.x - &c.x) + &nc * &(&b.x - &a.x);
    Point::new(&ux / &d, &uy / &d)
}

/// Intersection of lines `p1p2` and `p3p4` by Cramer's rule.
pub fn meet_oracle(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> Point {
    let d1 = p2 - p1;
    let d2 = p4 - p3;
    let den = d1.cross(&d2);
    let t = (p3 - p1).cross(&d2) / den;
    p1 + &d1.scale(&t)
}
