use std::fmt;

use serde::{Deserialize, Serialize};

use super::{LaurentPoly, RingError};

/// Exponent vector `(γ₁, γ₂, γ₃, γ₄)` for monomials in four variables.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct MultiIndex(pub [u32; 4]);

impl MultiIndex {
    pub const ZERO: MultiIndex = MultiIndex([0; 4]);

    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        MultiIndex([a, b, c, d])
    }

    /// Unit vector along axis `i` (0-based).
    pub fn unit(i: usize) -> Self {
        let mut m = [0; 4];
        m[i] = 1;
        MultiIndex(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    /// Componentwise difference, `None` if any component would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        let mut out = [0; 4];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0)) {
            *o = a.checked_sub(b)?;
        }
        Some(MultiIndex(out))
    }

    /// All exponent vectors of total degree exactly `d`, ascending.
    pub fn of_degree(d: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d - a - b {
                    out.push(MultiIndex([a, b, c, d - a - b - c]));
                }
            }
        }
        out.sort();
        out
    }

    /// All exponent vectors of total degree at most `d`, ascending.
    pub fn up_to_degree(d: u32) -> Vec<MultiIndex> {
        let mut out: Vec<_> = (0..=d).flat_map(MultiIndex::of_degree).collect();
        out.sort();
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Symmetric q-integer `[n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹)` for `n ≥ 0`.
pub fn q_int(n: i64) -> Result<LaurentPoly, RingError> {
    if n < 0 {
        return Err(RingError::NegativeQInt(n));
    }
    Ok(q_int_signed(n))
}

/// `[n]_q` for any integer, using `[−n]_q = −[n]_q`.
pub fn q_int_signed(n: i64) -> LaurentPoly {
    let m = n.abs();
    let p = LaurentPoly::from_terms((0..m).map(|j| (m - 1 - 2 * j, num_traits::One::one())));
    if n < 0 {
        -p
    } else {
        p
    }
}

/// `[n]_q! = [1]_q [2]_q ⋯ [n]_q`.
pub fn q_factorial_single(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| &acc * &q_int_signed(k))
}

/// `[γ]_q! = [γ₁]_q! [γ₂]_q! [γ₃]_q! [γ₄]_q!`.
pub fn q_factorial(g: &MultiIndex) -> LaurentPoly {
    g.0.iter()
        .fold(LaurentPoly::one(), |acc, &n| &acc * &q_factorial_single(n))
}

/// `[n]_q [n−1]_q ⋯ [n−k+1]_q`; zero when `k > n`.
pub fn q_falling(n: u32, k: u32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    ((n - k + 1)..=n).fold(LaurentPoly::one(), |acc, j| &acc * &q_int_signed(j as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(k: i64) -> LaurentPoly {
        LaurentPoly::q_pow(k)
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(0).unwrap(), LaurentPoly::zero());
        assert_eq!(q_int(1).unwrap(), LaurentPoly::one());
        assert_eq!(q_int(2).unwrap(), &qp(1) + &qp(-1));
        assert_eq!(q_int(3).unwrap(), &(&qp(2) + &qp(0)) + &qp(-2));
        assert!(matches!(q_int(-1), Err(RingError::NegativeQInt(-1))));
        assert_eq!(q_int_signed(-2), -(&qp(1) + &qp(-1)));
    }

    #[test]
    fn q_int_times_q_minus_inverse() {
        let d = &qp(1) - &qp(-1);
        for n in 0..=20 {
            assert_eq!(&q_int(n).unwrap() * &d, &qp(n) - &qp(-n), "n = {n}");
        }
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(&MultiIndex::ZERO), LaurentPoly::one());
        assert_eq!(q_factorial(&MultiIndex::new(2, 0, 0, 0)), &qp(1) + &qp(-1));
        assert_eq!(
            q_factorial(&MultiIndex::new(1, 1, 1, 1)),
            LaurentPoly::one()
        );
    }

    #[test]
    fn falling_matches_factorial_ratio() {
        for n in 0..7 {
            for k in 0..=n {
                let lhs = &q_falling(n, k) * &q_factorial_single(n - k);
                assert_eq!(lhs, q_factorial_single(n));
            }
        }
    }

    #[test]
    fn compositions_count() {
        for d in 0..8u32 {
            let n = MultiIndex::of_degree(d).len() as u32;
            assert_eq!(n, (d + 1) * (d + 2) * (d + 3) / 6);
        }
    }
}
