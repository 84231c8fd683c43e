//! Dense univariate polynomials over Q, used behind the Laurent ring for
//! exact division, gcd and cyclotomic reduction.

use num_rational::BigRational;
use num_traits::Zero;

use super::LaurentPoly;

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(pub(crate) Vec<BigRational>);

impl UPoly {
    pub(crate) fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub(crate) fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    /// Splits a Laurent polynomial as `q^shift * poly` with `poly(0) != 0`.
    pub(crate) fn split_laurent(p: &LaurentPoly) -> (i64, UPoly) {
        let Some(lo) = p.min_exp() else {
            return (0, UPoly::zero());
        };
        let hi = p.max_exp().unwrap();
        let mut c = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, v) in p.iter() {
            c[(e - lo) as usize] = v.clone();
        }
        (lo, UPoly::from_coeffs(c))
    }

    pub(crate) fn to_laurent(&self, shift: i64) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    #[cfg(test)]
    pub(crate) fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(c)
    }

    pub(crate) fn scale(&self, s: &BigRational) -> UPoly {
        if s.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|c| c * s).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub(crate) fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.leading().unwrap().recip();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    pub(crate) fn monic(&self) -> UPoly {
        match self.leading() {
            None => UPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub(crate) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_coeffs(
            c.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[1, 0, 3, 2]);
        let b = p(&[1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(
            UPoly::from_coeffs(
                q.mul(&b)
                    .0
                    .iter()
                    .zip(r.0.iter().chain(std::iter::repeat(&BigRational::zero())))
                    .map(|(x, y)| x + y)
                    .collect()
            ),
            a
        );
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = p(&[-2, -1, 1]);
        let b = p(&[3, 4, 1]);
        assert_eq!(UPoly::gcd(&a, &b), p(&[1, 1]));
        assert_eq!(UPoly::gcd(&p(&[2]), &p(&[0, 1])), p(&[1]));
    }
}
