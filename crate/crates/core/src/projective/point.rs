use crate::error::{Error, Result};
use crate::ring::{Interval, QuadExt, QuarticElem};

/// A point of real projective space with exact homogeneous coordinates in
/// `Q[β][√d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub coords: Vec<QuadExt>,
}

impl ProjPoint {
    pub fn new(coords: Vec<QuadExt>) -> Result<Self> {
        if coords.iter().all(QuadExt::is_zero) {
            return Err(Error::InvalidArgument(
                "all homogeneous coordinates are zero".into(),
            ));
        }
        Ok(ProjPoint { coords })
    }

    /// Point with coordinates in `Q[β]`.
    pub fn from_base(coords: &[QuarticElem]) -> Result<Self> {
        let zero = QuarticElem::zero();
        Self::new(
            coords
                .iter()
                .map(|x| QuadExt::from_base(x.clone(), &zero))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn intervals(&self, prec: u32) -> Vec<Interval> {
        self.coords.iter().map(|c| c.interval(prec)).collect()
    }

    fn radicand(&self) -> Option<&QuarticElem> {
        self.coords.iter().find(|c| !c.v.is_zero()).map(|c| &c.d)
    }

    /// Exact proportionality test. Over a common radicand the 2×2 minors
    /// are compared; otherwise both points are scaled so that the same
    /// coordinate is `1` and the coordinates are compared as values.
    pub fn same_point(&self, o: &Self) -> Result<bool> {
        if self.dim() != o.dim() {
            return Err(Error::DimensionMismatch(self.dim(), o.dim()));
        }
        let compatible = match (self.radicand(), o.radicand()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        if compatible {
            let n = self.dim();
            for i in 0..n {
                for j in i + 1..n {
                    let m = &(&self.coords[i] * &o.coords[j]) - &(&self.coords[j] * &o.coords[i]);
                    if !m.is_zero() {
                        return Ok(false);
                    }
                }
            }
            return Ok(true);
        }
        let i0 = self
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero point");
        if o.coords[i0].is_zero() {
            return Ok(false);
        }
        let (si, oi) = (self.coords[i0].inv()?, o.coords[i0].inv()?);
        Ok(self
            .coords
            .iter()
            .zip(&o.coords)
            .all(|(x, y)| (x * &si).value_eq(&(y * &oi))))
    }
}

fn sq(x: &Interval) -> Interval {
    let a = x.abs();
    &a * &a
}

/// Chordal distance `‖p ∧ q‖ / (‖p‖‖q‖)` (sine of the angle between the
/// lines), as a validated enclosure.
pub fn proj_dist(p: &ProjPoint, q: &ProjPoint, prec: u32) -> Result<Interval> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch(p.dim(), q.dim()));
    }
    let a = p.intervals(prec);
    let b = q.intervals(prec);
    let n = a.len();
    let mut wedge = Interval::zero();
    for i in 0..n {
        for j in i + 1..n {
            let m = &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
            wedge = &wedge + &sq(&m);
        }
    }
    let na = a.iter().fold(Interval::zero(), |acc, x| &acc + &sq(x));
    let nb = b.iter().fold(Interval::zero(), |acc, x| &acc + &sq(x));
    let denom = &na * &nb;
    let ratio = match denom.inv() {
        Some(inv) => &wedge * &inv,
        None => return Err(Error::InvalidArgument("zero vector".into())),
    };
    let one = crate::ring::rat(1);
    let clipped = Interval::new(
        ratio
            .lo
            .clone()
            .max(num_traits::Zero::zero())
            .min(one.clone()),
        ratio.hi.clone().min(one).max(num_traits::Zero::zero()),
    );
    Ok(clipped.sqrt(prec))
}

/// Squared chordal distance between two points with coordinates in `Q[β]`,
/// exact.
pub fn chordal_sq(p: &[QuarticElem; 2], q: &[QuarticElem; 2]) -> QuarticElem {
    let det = &(&p[0] * &q[1]) - &(&p[1] * &q[0]);
    let np = &(&p[0] * &p[0]) + &(&p[1] * &p[1]);
    let nq = &(&q[0] * &q[0]) + &(&q[1] * &q[1]);
    let den = &np * &nq;
    &(&det * &det) * &den.inv().expect("nonzero vectors")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Rational};

    fn pt(x: i64, y: i64) -> ProjPoint {
        ProjPoint::from_base(&[QuarticElem::from_int(x), QuarticElem::from_int(y)]).unwrap()
    }

    #[test]
    fn distance_examples() {
        let d = proj_dist(&pt(1, 0), &pt(0, 1), 64).unwrap();
        assert!(d.contains(&rat(1)));
        let d = proj_dist(&pt(1, 1), &pt(1, -1), 64).unwrap();
        assert!(d.contains(&rat(1)));
        let d = proj_dist(&pt(2, 3), &pt(4, 6), 64).unwrap();
        assert!(d.hi < Rational::new(1.into(), (1u64 << 30).into()));
        assert!(pt(2, 3).same_point(&pt(4, 6)).unwrap());
        assert!(!pt(2, 3).same_point(&pt(4, 5)).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let p3 =
            ProjPoint::from_base(&[QuarticElem::one(), QuarticElem::one(), QuarticElem::one()])
                .unwrap();
        assert_eq!(
            proj_dist(&pt(1, 0), &p3, 64),
            Err(Error::DimensionMismatch(2, 3))
        );
        assert!(ProjPoint::from_base(&[QuarticElem::zero(), QuarticElem::zero()]).is_err());
    }
}
