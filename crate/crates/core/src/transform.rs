//! The divided-powers transform between functionals on the `w`-algebra and
//! polynomials, and the duals of right multiplication.
//!
//! `Ψ_f = Σ_γ f(w^γ) z^γ / [γ]_q!`. Under `Ψ` the dual of right
//! multiplication by `w₀` becomes a q-difference operator, given in closed
//! form by [`right_dual_closed`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::aq::{center_element, AqElement};
use crate::par;
use crate::qcalc::{Poly4, QOperator};
use crate::ring::{q_factorial, LaurentPoly, MultiIndex, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("unknown dual generator `{0}`; expected 1, 2, 3, 4 or box")]
    UnknownGenerator(String),
}

/// A finitely supported functional `w^γ ↦ f(w^γ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualFunctional {
    values: BTreeMap<MultiIndex, RatFunc>,
}

impl DualFunctional {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The functional equal to one on `w^γ` and zero elsewhere.
    pub fn indicator(g: MultiIndex) -> Self {
        Self::from_values([(g, RatFunc::one())])
    }

    pub fn from_values<I: IntoIterator<Item = (MultiIndex, RatFunc)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (g, c) in it {
            out.add(g, c);
        }
        out
    }

    fn add(&mut self, g: MultiIndex, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let slot = self.values.entry(g).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.values.remove(&g);
        }
    }

    pub fn value(&self, g: &MultiIndex) -> RatFunc {
        self.values.get(g).cloned().unwrap_or_default()
    }

    pub fn values(&self) -> impl Iterator<Item = (&MultiIndex, &RatFunc)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest total degree in the support.
    pub fn max_degree(&self) -> Option<u32> {
        self.values.keys().map(MultiIndex::degree).max()
    }

    /// `f(a)` for an arbitrary element, by linearity.
    pub fn eval(&self, a: &AqElement) -> RatFunc {
        let mut out = RatFunc::zero();
        for (g, c) in a.terms() {
            if let Some(v) = self.values.get(g) {
                out += &(v * &RatFunc::from(c));
            }
        }
        out
    }
}

/// `Ψ_f`.
pub fn psi(f: &DualFunctional) -> Poly4 {
    Poly4::from_terms(f.values.iter().map(|(g, c)| {
        let fact = RatFunc::from(q_factorial(g));
        (*g, c / &fact)
    }))
}

/// The inverse of [`psi`].
pub fn psi_inv(p: &Poly4) -> DualFunctional {
    DualFunctional::from_values(
        p.terms()
            .map(|(g, c)| (*g, c * &RatFunc::from(q_factorial(g)))),
    )
}

/// `((w₀ᴿ)† f)(w^γ) = f(w^γ w₀)`, computed with the normal-ordering engine.
pub fn right_dual_bruteforce(w0: &AqElement, f: &DualFunctional) -> DualFunctional {
    let (Some(top), Some(low)) = (f.max_degree(), w0.degrees().first().copied()) else {
        return DualFunctional::zero();
    };
    if low > top {
        return DualFunctional::zero();
    }
    DualFunctional::from_values(
        MultiIndex::up_to_degree(top - low)
            .into_iter()
            .map(|g| (g, f.eval(&(&AqElement::monomial(g) * w0)))),
    )
}

/// Generators with a closed-form dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DualGen {
    W1,
    W2,
    W3,
    W4,
    /// The center element `w₁w₄ − q w₂w₃`, whose dual is the wave operator.
    Box,
}

impl DualGen {
    pub const ALL: [DualGen; 5] = [
        DualGen::W1,
        DualGen::W2,
        DualGen::W3,
        DualGen::W4,
        DualGen::Box,
    ];

    pub fn element(self) -> AqElement {
        match self {
            DualGen::W1 => AqElement::w(1),
            DualGen::W2 => AqElement::w(2),
            DualGen::W3 => AqElement::w(3),
            DualGen::W4 => AqElement::w(4),
            DualGen::Box => center_element(),
        }
    }
}

impl fmt::Display for DualGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DualGen::W1 => "1",
            DualGen::W2 => "2",
            DualGen::W3 => "3",
            DualGen::W4 => "4",
            DualGen::Box => "box",
        };
        write!(f, "{s}")
    }
}

impl FromStr for DualGen {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, TransformError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" | "w1" => Ok(DualGen::W1),
            "2" | "w2" => Ok(DualGen::W2),
            "3" | "w3" => Ok(DualGen::W3),
            "4" | "w4" => Ok(DualGen::W4),
            "box" | "omega" => Ok(DualGen::Box),
            _ => Err(TransformError::UnknownGenerator(s.to_string())),
        }
    }
}

/// `□ = K₂K₃[∂₁][∂₄] − q[∂₂][∂₃]`.
pub fn wave_operator() -> QOperator {
    let a = QOperator::k(2, 1)
        .compose(&QOperator::k(3, 1))
        .compose(&QOperator::d(1))
        .compose(&QOperator::d(4));
    let b = QOperator::d(2).compose(&QOperator::d(3));
    &a - &b.scale(&LaurentPoly::q())
}

/// Closed forms of the duals:
/// `w₄ ↦ [∂₄]`, `w₂ ↦ K₄[∂₂]`, `w₃ ↦ K₄[∂₃]`,
/// `w₁ ↦ K₂K₃K₄²[∂₁] + (1 − q⁻²) z₄K₄□`, `Ω ↦ □`.
pub fn right_dual_closed(g: DualGen) -> QOperator {
    let k4 = QOperator::k(4, 1);
    match g {
        DualGen::W4 => QOperator::d(4),
        DualGen::W2 => k4.compose(&QOperator::d(2)),
        DualGen::W3 => k4.compose(&QOperator::d(3)),
        DualGen::Box => wave_operator(),
        DualGen::W1 => {
            let first = QOperator::k(2, 1)
                .compose(&QOperator::k(3, 1))
                .compose(&QOperator::k(4, 2))
                .compose(&QOperator::d(1));
            let c = &LaurentPoly::one() - &LaurentPoly::q_pow(-2);
            let second = QOperator::z(4)
                .compose(&k4)
                .compose(&wave_operator())
                .scale(&c);
            &first + &second
        }
    }
}

/// Result of comparing a closed form against the brute-force dual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCheck {
    pub generator: DualGen,
    pub degree: u32,
    pub checked: usize,
    /// Indicator supports where the two sides differ.
    #[serde(serialize_with = "crate::ser::display_vec")]
    pub failures: Vec<MultiIndex>,
}

impl DualCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `Ψ((w₀ᴿ)† f)` with `closed(Ψ f)` for every indicator of degree
/// at most `degree`.
pub fn verify_dual(g: DualGen, degree: u32) -> DualCheck {
    let w0 = g.element();
    let op = right_dual_closed(g);
    let supports = MultiIndex::up_to_degree(degree);
    let ok = par::map(&supports, |d| {
        let f = DualFunctional::indicator(*d);
        psi(&right_dual_bruteforce(&w0, &f)) == op.apply(&psi(&f))
    });
    DualCheck {
        generator: g,
        degree,
        checked: supports.len(),
        failures: supports
            .iter()
            .zip(ok)
            .filter(|(_, ok)| !ok)
            .map(|(d, _)| *d)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q_int_signed;

    fn mi(a: u32, b: u32, c: u32, d: u32) -> MultiIndex {
        MultiIndex::new(a, b, c, d)
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi(&DualFunctional::indicator(MultiIndex::ZERO)),
            Poly4::one()
        );
        let two = RatFunc::from(q_int_signed(2));
        assert_eq!(
            psi(&DualFunctional::indicator(mi(2, 0, 0, 0))),
            Poly4::term(mi(2, 0, 0, 0), RatFunc::one() / two)
        );
        assert!(psi(&DualFunctional::zero()).is_zero());
    }

    #[test]
    fn psi_round_trip() {
        let f = DualFunctional::from_values([
            (mi(3, 1, 0, 2), RatFunc::q_pow(2)),
            (mi(0, 2, 2, 0), RatFunc::from_i64(-5)),
        ]);
        assert_eq!(psi_inv(&psi(&f)), f);
    }

    #[test]
    fn bruteforce_examples() {
        let g = right_dual_bruteforce(&AqElement::w(4), &DualFunctional::indicator(mi(0, 0, 0, 1)));
        assert_eq!(g, DualFunctional::indicator(MultiIndex::ZERO));
        let g = right_dual_bruteforce(&AqElement::w(1), &DualFunctional::indicator(mi(1, 0, 0, 1)));
        assert_eq!(g.value(&mi(0, 0, 0, 1)), RatFunc::one());
        assert_eq!(g.value(&mi(1, 0, 0, 0)), RatFunc::zero());
        let f = DualFunctional::from_values([(mi(1, 2, 0, 0), RatFunc::q_pow(1))]);
        assert_eq!(right_dual_bruteforce(&AqElement::one(), &f), f);
    }

    #[test]
    fn w1_dual_reads_off_w4_w1() {
        // w₄w₁ = w₁w₄ − (q − q⁻¹) w₂w₃
        let g = right_dual_bruteforce(&AqElement::w(1), &DualFunctional::indicator(mi(0, 1, 1, 0)));
        let expected = -RatFunc::from(crate::ring::q_minus_qinv());
        assert_eq!(g.value(&mi(0, 0, 0, 1)), expected);
    }

    #[test]
    fn closed_forms_low_degree() {
        for g in DualGen::ALL {
            assert!(verify_dual(g, 3).passed(), "{g}");
        }
        assert!(verify_dual(DualGen::W1, 0).passed());
    }

    #[test]
    fn duals_compose() {
        for (a, b) in [(1u8, 4u8), (2, 3), (4, 1), (3, 2)] {
            let (wa, wb) = (AqElement::w(a), AqElement::w(b));
            for d in MultiIndex::up_to_degree(4) {
                let f = DualFunctional::indicator(d);
                let lhs = right_dual_bruteforce(&(&wa * &wb), &f);
                let rhs = right_dual_bruteforce(&wa, &right_dual_bruteforce(&wb, &f));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn generator_names() {
        assert_eq!("box".parse::<DualGen>().unwrap(), DualGen::Box);
        assert_eq!("3".parse::<DualGen>().unwrap(), DualGen::W3);
        assert!("5".parse::<DualGen>().is_err());
    }
}
