use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::owned_binops;
use super::upoly::UPoly;
use super::{LaurentPoly, RingError};

/// An element of the field Q(q), kept as a reduced fraction of Laurent
/// polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and leading coefficient one, coprime to the numerator.
/// Powers of `q` and rational constants live in the numerator. Derived
/// equality is therefore equality in the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn q_pow(k: i64) -> Self {
        LaurentPoly::q_pow(k).into()
    }

    pub fn from_i64(n: i64) -> Self {
        LaurentPoly::from_i64(n).into()
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (sd, d) = UPoly::split_laurent(&den);
        if d.degree() == Some(0) {
            let c = d.0[0].recip();
            return RatFunc {
                num: num.scale(&c).shift(-sd),
                den: LaurentPoly::one(),
            };
        }
        let (sn, n) = UPoly::split_laurent(&num);
        let g = UPoly::gcd(&n, &d);
        let (n, d) = if g.degree() == Some(0) {
            (n, d)
        } else {
            (n.divrem(&g).0, d.divrem(&g).0)
        };
        let lc = d.leading().unwrap().recip();
        RatFunc {
            num: n.scale(&lc).to_laurent(sn - sd),
            den: d.scale(&lc).to_laurent(0),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        RatFunc {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Evaluates at a rational point that is not a pole.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q);
        (!d.is_zero()).then(|| self.num.eval(q) / d)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl From<&LaurentPoly> for RatFunc {
    fn from(p: &LaurentPoly) -> Self {
        p.clone().into()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc {
                num: &self.num * &rhs.num,
                den: LaurentPoly::one(),
            };
        }
        RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::inv`] for a checked path.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero in Q(q)")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
        } else {
            *self = &*self - rhs;
        }
    }
}

owned_binops!(RatFunc);

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(k: i64) -> LaurentPoly {
        LaurentPoly::q_pow(k)
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let a = RatFunc::new(&lp(2) - &lp(-2), &lp(1) - &lp(-1)).unwrap();
        assert!(a.is_laurent());
        assert_eq!(a.to_laurent().unwrap(), &lp(1) + &lp(-1));
        // 1/(q+q^-1) has a genuine denominator q^2 + 1
        let b = RatFunc::new(LaurentPoly::one(), &lp(1) + &lp(-1)).unwrap();
        assert!(!b.is_laurent());
        assert_eq!(b.denom(), &(&lp(2) + &lp(0)));
        assert_eq!(b.numer(), &lp(1));
        assert_eq!(&b * &RatFunc::from(&lp(1) + &lp(-1)), RatFunc::one());
    }

    #[test]
    fn field_ops_agree_with_evaluation() {
        let a = RatFunc::new(&lp(3) + &lp(0), &lp(1) - &lp(-2)).unwrap();
        let b = RatFunc::new(&lp(-1) - &lp(2), &lp(2) + &lp(1)).unwrap();
        let x = BigRational::new(3.into(), 7.into());
        let (ea, eb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        assert_eq!((&a + &b).eval(&x).unwrap(), &ea + &eb);
        assert_eq!((&a - &b).eval(&x).unwrap(), &ea - &eb);
        assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
        assert_eq!((&a / &b).eval(&x).unwrap(), &ea / &eb);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(RatFunc::zero().inv().is_err());
    }
}
