use num_rational::BigRational;
use num_traits::{One, Zero};

use super::upoly::UPoly;
use super::LaurentPoly;

/// The m-th cyclotomic polynomial, from `qᵐ − 1 = ∏_{d | m} Φ_d(q)`.
pub(crate) fn cyclotomic(m: u32) -> UPoly {
    assert!(m >= 1);
    let mut c = vec![BigRational::zero(); m as usize + 1];
    c[0] = -BigRational::one();
    c[m as usize] = BigRational::one();
    let mut p = UPoly::from_coeffs(c);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (quot, rem) = p.divrem(&cyclotomic(d));
        debug_assert!(rem.is_zero());
        p = quot;
    }
    p
}

/// Whether `p` vanishes at every primitive m-th root of unity.
///
/// Decided exactly: the primitive m-th roots are the roots of Φ_m, which is
/// irreducible over Q, so `p` vanishes at one of them iff at all of them iff
/// Φ_m divides the polynomial part of `p`.
pub fn vanishes_at_root_of_unity(p: &LaurentPoly, m: u32) -> bool {
    assert!(m >= 1, "root of unity order must be positive");
    if p.is_zero() {
        return true;
    }
    let (_, poly) = UPoly::split_laurent(p);
    poly.divrem(&cyclotomic(m)).1.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(k: i64) -> LaurentPoly {
        LaurentPoly::q_pow(k)
    }

    #[test]
    fn small_cyclotomics() {
        let ints = |v: &[i64]| {
            UPoly::from_coeffs(
                v.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect(),
            )
        };
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn examples() {
        assert!(vanishes_at_root_of_unity(&(&qp(2) - &qp(-2)), 4));
        assert!(!vanishes_at_root_of_unity(&(&qp(1) + &qp(-1)), 3));
        assert!(vanishes_at_root_of_unity(&LaurentPoly::zero(), 7));
    }

    #[test]
    fn q_to_the_m_minus_one() {
        for m in 1..=12u32 {
            assert!(vanishes_at_root_of_unity(&(&qp(m as i64) - &qp(0)), m));
        }
    }
}
