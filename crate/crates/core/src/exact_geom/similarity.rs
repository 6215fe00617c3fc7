use super::types::{Complex, GeomError, GeomResult, Point};

/// Orientation-reversing similarity `z ↦ alpha·z̄ + beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSimilarity {
    pub alpha: Complex,
    pub beta: Complex,
}

impl InverseSimilarity {
    /// The unique map sending `src1 ↦ dst1` and `src2 ↦ dst2`.
    pub fn fit(src1: &Point, dst1: &Point, src2: &Point, dst2: &Point) -> GeomResult<Self> {
        if src1 == src2 {
            return Err(GeomError::CoincidentPoints);
        }
        let (s1, s2) = (src1.to_complex(), src2.to_complex());
        let (d1, d2) = (dst1.to_complex(), dst2.to_complex());
        let alpha = (&d1 - &d2)
            .checked_div(&(&s1 - &s2).conj())
            .expect("distinct sources");
        let beta = &d1 - &(&alpha * &s1.conj());
        Ok(InverseSimilarity { alpha, beta })
    }

    pub fn apply(&self, p: &Point) -> Point {
        (&(&self.alpha * &p.to_complex().conj()) + &self.beta).to_point()
    }

    pub fn verify(&self, src: &Point, dst: &Point) -> bool {
        self.apply(src) == *dst
    }

    /// `apply(src) − dst`.
    pub fn residual(&self, src: &Point, dst: &Point) -> Point {
        &self.apply(src) - dst
    }

    /// False when `alpha = 0`, i.e. both targets coincide.
    pub fn is_proper(&self) -> bool {
        !self.alpha.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::predicates::orientation;
    use crate::exact_geom::scalar::Scalar;
    use crate::exact_geom::types::Orientation;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn conjugation() {
        let f = InverseSimilarity::fit(&pt(0, 0), &pt(0, 0), &pt(1, 0), &pt(1, 0)).unwrap();
        assert_eq!(f.alpha, Complex::one());
        assert_eq!(f.beta, Complex::real(Scalar::zero()));
        assert!(f.verify(&pt(0, 1), &pt(0, -1)));
    }

    #[test]
    fn vertical_reflection() {
        let f = InverseSimilarity::fit(&pt(0, 0), &pt(0, 0), &pt(0, 1), &pt(0, 1)).unwrap();
        assert_eq!(f.alpha, Complex::real(Scalar::from_int(-1)));
        assert_eq!(f.beta, Complex::real(Scalar::zero()));
        assert!(f.verify(&pt(3, 2), &pt(-3, 2)));
    }

    #[test]
    fn coincident_sources() {
        assert_eq!(
            InverseSimilarity::fit(&pt(1, 1), &pt(0, 0), &pt(1, 1), &pt(2, 0)),
            Err(GeomError::CoincidentPoints)
        );
    }

    #[test]
    fn flips_orientation() {
        let f = InverseSimilarity::fit(&pt(0, 0), &pt(3, 1), &pt(2, 0), &pt(5, 4)).unwrap();
        let (a, b, c) = (pt(0, 0), pt(2, 0), pt(1, 3));
        assert_eq!(orientation(&a, &b, &c), Orientation::CounterClockwise);
        assert_eq!(
            orientation(&f.apply(&a), &f.apply(&b), &f.apply(&c)),
            Orientation::Clockwise
        );
    }
}
