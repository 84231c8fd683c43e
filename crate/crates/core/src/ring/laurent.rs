use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::upoly::UPoly;
use super::RingError;

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Stored sparsely; zero coefficients are never kept, so derived equality is
/// equality in the ring.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// The deformation parameter itself.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    pub fn monomial(c: BigRational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True for `c * q^k` with `c != 0`: exactly the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Ascending `(exponent, coefficient)` pairs.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes a nonzero rational for `q`.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        assert!(!q.is_zero(), "Laurent polynomial evaluated at q = 0");
        self.terms
            .iter()
            .map(|(e, c)| c * pow_signed(q, *e))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Exact quotient in the Laurent ring, or an error when `den` does not
    /// divide `self`.
    pub fn divide_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_unit() {
            let (e, c) = den.iter().next().unwrap();
            return Ok(self.scale(&c.recip()).shift(-e));
        }
        let (sn, n) = UPoly::split_laurent(self);
        let (sd, d) = UPoly::split_laurent(den);
        let (quot, rem) = n.divrem(&d);
        if !rem.is_zero() {
            return Err(RingError::InexactDivision {
                num: self.to_string(),
                den: den.to_string(),
            });
        }
        Ok(quot.to_laurent(sn - sd))
    }
}

fn pow_signed(q: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// `num/den` or `num` when the denominator is one.
pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn divide_exact(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly, RingError> {
    num.divide_exact(den)
}

impl fmt::Display for LaurentPoly {
    /// Canonical text: descending exponents, `c*q^k` terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let qpart = match *e {
                0 => None,
                1 => Some("q".to_string()),
                k => Some(format!("q^{k}")),
            };
            match qpart {
                None => write!(f, "{}", fmt_rational(&a))?,
                Some(qs) if a.is_one() => write!(f, "{qs}")?,
                Some(qs) => write!(f, "{}*{qs}", fmt_rational(&a))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = crate::parse::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse_laurent(s)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: i64,
    num: String,
    den: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<JsonTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| JsonTerm {
                exp: *e,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = Vec::<JsonTerm>::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for t in v {
            let num: BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            out.add_term(t.exp, BigRational::new(num, den));
        }
        Ok(out)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

macro_rules! owned_binops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_binops;

owned_binops!(LaurentPoly);

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }
    fn qi(k: i64) -> LaurentPoly {
        LaurentPoly::q_pow(k)
    }

    #[test]
    fn zero_coefficients_are_stripped() {
        let p = &q() - &q();
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn divide_exact_examples() {
        let num = &qi(2) - &qi(-2);
        let den = &q() - &qi(-1);
        assert_eq!(num.divide_exact(&den).unwrap(), &q() + &qi(-1));
        assert_eq!(den.divide_exact(&den).unwrap(), LaurentPoly::one());
        // q^{x-2} - q^{2-x} at x = 5 is [3]_q (q - q^-1)
        let num = &qi(3) - &qi(-3);
        assert_eq!(
            num.divide_exact(&den).unwrap(),
            &(&qi(2) + &LaurentPoly::one()) + &qi(-2)
        );
    }

    #[test]
    fn divide_exact_rejects_remainder_and_zero() {
        let den = &q() + &LaurentPoly::one();
        assert!(matches!(
            q().divide_exact(&den),
            Err(RingError::InexactDivision { .. })
        ));
        assert!(matches!(
            q().divide_exact(&LaurentPoly::zero()),
            Err(RingError::DivisionByZero)
        ));
    }

    #[test]
    fn display_is_descending() {
        let p = LaurentPoly::from_terms([
            (-1, BigRational::new((-3).into(), 2.into())),
            (2, BigRational::one()),
            (0, BigRational::from_integer(5.into())),
        ]);
        assert_eq!(p.to_string(), "q^2 + 5 - 3/2*q^-1");
        assert_eq!((-&q()).to_string(), "-q");
    }

    #[test]
    fn json_shape() {
        let p = &qi(2) - &qi(-1).scale(&BigRational::new(1.into(), 3.into()));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"exp":2,"num":"1","den":"1"},{"exp":-1,"num":"-1","den":"3"}]"#
        );
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
