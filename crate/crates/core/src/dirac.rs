//! The quantized Dirac operators `D±` as 2×2 matrices of q-difference
//! operators.
//!
//! Matrices act on row vectors: `(M f)_k = Σ_j M_{jk}(f_j)`, so the product
//! `AB` means "apply `A`, then `B`" and `(AB)_{ik} = Σ_j B_{jk} ∘ A_{ij}`.
//! This is the convention under which the matrix of the intertwiner reads
//! off the duals of right multiplication in the displayed positions.

use std::fmt;

use serde::Serialize;

use crate::aq::AqElement;
use crate::par;
use crate::qcalc::{Poly4, Poly4Vec2, QOperator};
use crate::ring::{LaurentPoly, MultiIndex, RatFunc};
use crate::transform::{psi, right_dual_closed, wave_operator, DualFunctional, DualGen};

/// Which of the two operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Plus,
    Minus,
}

impl std::str::FromStr for Which {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" | "+" => Ok(Which::Plus),
            "minus" | "-" => Ok(Which::Minus),
            _ => Err(format!("expected plus or minus, got `{s}`")),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            if *self == Which::Plus {
                "plus"
            } else {
                "minus"
            }
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpMatrix2(pub [[QOperator; 2]; 2]);

impl OpMatrix2 {
    pub fn entry(&self, i: usize, j: usize) -> &QOperator {
        &self.0[i][j]
    }

    pub fn diagonal(a: QOperator, b: QOperator) -> Self {
        OpMatrix2([[a, QOperator::zero()], [QOperator::zero(), b]])
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        OpMatrix2(self.0.clone().map(|row| row.map(|e| e.scale(c))))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &OpMatrix2) -> OpMatrix2 {
        let entry = |i: usize, k: usize| {
            (0..2).fold(QOperator::zero(), |acc, j| {
                &acc + &other.0[j][k].compose(&self.0[i][j])
            })
        };
        OpMatrix2([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn apply(&self, v: &Poly4Vec2) -> Poly4Vec2 {
        let comp =
            |k: usize| (0..2).fold(Poly4::zero(), |acc, j| acc + self.0[j][k].apply(&v.0[j]));
        Poly4Vec2::new(comp(0), comp(1))
    }

    /// Entrywise equality as operators on polynomials.
    pub fn equivalent(&self, other: &OpMatrix2) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.0[i][j].equivalent(&other.0[i][j])))
    }
}

impl fmt::Display for OpMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..2 {
            for j in 0..2 {
                writeln!(f, "[{},{}] {}", i + 1, j + 1, self.0[i][j])?;
            }
        }
        Ok(())
    }
}

/// `D⁺ = [[w₂†, w₄†], [−q⁻¹w₁†, −q⁻¹w₃†]]`.
pub fn dirac_plus() -> OpMatrix2 {
    build(DualGen::W2, DualGen::W3)
}

/// `D⁻`: `D⁺` with the roles of `w₂` and `w₃` exchanged.
pub fn dirac_minus() -> OpMatrix2 {
    build(DualGen::W3, DualGen::W2)
}

pub fn dirac(which: Which) -> OpMatrix2 {
    match which {
        Which::Plus => dirac_plus(),
        Which::Minus => dirac_minus(),
    }
}

fn build(top: DualGen, bottom: DualGen) -> OpMatrix2 {
    let m = -LaurentPoly::q_pow(-1);
    OpMatrix2([
        [right_dual_closed(top), right_dual_closed(DualGen::W4)],
        [
            right_dual_closed(DualGen::W1).scale(&m),
            right_dual_closed(bottom).scale(&m),
        ],
    ])
}

/// The second-order part of the `(2,1)` entry: `−q⁻¹(1 − q⁻²) z₄K₄□`.
pub fn extra_term() -> QOperator {
    let c = &(&LaurentPoly::one() - &LaurentPoly::q_pow(-2)) * &-LaurentPoly::q_pow(-1);
    QOperator::z(4)
        .compose(&QOperator::k(4, 1))
        .compose(&wave_operator())
        .scale(&c)
}

/// `−q⁻¹ diag(□, □)`.
pub fn factorization_target() -> OpMatrix2 {
    OpMatrix2::diagonal(wave_operator(), wave_operator()).scale(&-LaurentPoly::q_pow(-1))
}

fn monomial_vectors(degree: u32) -> Vec<Poly4Vec2> {
    MultiIndex::up_to_degree(degree)
        .into_iter()
        .flat_map(|a| (0..2).map(move |s| Poly4Vec2::basis(s, Poly4::monomial(a))))
        .collect()
}

fn describe(v: &Poly4Vec2) -> String {
    format!("({}, {})", v.0[0], v.0[1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub plus_minus_exact: bool,
    pub minus_plus_exact: bool,
    pub products_commute: bool,
    pub degree: u32,
    pub monomials_checked: usize,
    pub monomial_failures: Vec<String>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.plus_minus_exact
            && self.minus_plus_exact
            && self.products_commute
            && self.monomial_failures.is_empty()
    }
}

/// `D⁺D⁻ = D⁻D⁺ = −q⁻¹ diag(□, □)`, both on canonical forms and by applying
/// the factors one after the other to every monomial vector.
pub fn factorization_check(degree: u32) -> FactorizationReport {
    let (p, m) = (dirac_plus(), dirac_minus());
    let target = factorization_target();
    let pm = p.then(&m);
    let mp = m.then(&p);
    let vs = monomial_vectors(degree);
    let ok = par::map(&vs, |v| {
        let t = target.apply(v);
        m.apply(&p.apply(v)) == t && p.apply(&m.apply(v)) == t
    });
    FactorizationReport {
        plus_minus_exact: pm.equivalent(&target),
        minus_plus_exact: mp.equivalent(&target),
        products_commute: pm.equivalent(&mp),
        degree,
        monomials_checked: vs.len(),
        monomial_failures: vs
            .iter()
            .zip(ok)
            .filter(|(_, ok)| !ok)
            .map(|(v, _)| describe(v))
            .collect(),
    }
}

/// A functional on `{w^γ} ∪ {w^γ F}`: slot 0 on `p₁(w)`, slot 1 on `p₂(w)F`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VectorDualFunctional(pub [DualFunctional; 2]);

impl VectorDualFunctional {
    pub fn indicator(slot: usize, g: MultiIndex) -> Self {
        let mut v = Self::default();
        v.0[slot] = DualFunctional::indicator(g);
        v
    }

    pub fn psi(&self) -> Poly4Vec2 {
        Poly4Vec2::new(psi(&self.0[0]), psi(&self.0[1]))
    }
}

/// `f ↦ f_{u₀}` via `w`-algebra products. For `D⁺`:
/// `f_{u₀}(p₁ + p₂F_ν) = f([p₁w₂ + p₂w₄] − q⁻¹[p₁w₁ + p₂w₃]F_μ)`;
/// `D⁻` exchanges `w₂ ↔ w₃` and `μ ↔ ν`.
pub fn intertwine_bruteforce(f: &VectorDualFunctional, which: Which) -> VectorDualFunctional {
    let (a, b) = match which {
        Which::Plus => (2, 3),
        Which::Minus => (3, 2),
    };
    let top = f.0.iter().filter_map(DualFunctional::max_degree).max();
    let Some(top) = top else {
        return VectorDualFunctional::default();
    };
    let m = RatFunc::q_pow(-1);
    let eval = |d: &MultiIndex, first: u8, second: u8| {
        let wd = AqElement::monomial(*d);
        let x = f.0[0].eval(&(&wd * &AqElement::w(first)));
        let y = f.0[1].eval(&(&wd * &AqElement::w(second)));
        &x - &(&m * &y)
    };
    let support = if top == 0 {
        Vec::new()
    } else {
        MultiIndex::up_to_degree(top - 1)
    };
    VectorDualFunctional([
        DualFunctional::from_values(support.iter().map(|d| (*d, eval(d, a, 1)))),
        DualFunctional::from_values(support.iter().map(|d| (*d, eval(d, 4, b)))),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntertwineReport {
    pub which: Which,
    pub degree: u32,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IntertwineReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `Ψ(f_{u₀}) = D(Ψ f)` for every vector indicator of degree ≤ `degree`.
pub fn intertwine_check(degree: u32, which: Which) -> IntertwineReport {
    let d = dirac(which);
    let cases: Vec<(usize, MultiIndex)> = MultiIndex::up_to_degree(degree)
        .into_iter()
        .flat_map(|g| [(0, g), (1, g)])
        .collect();
    let ok = par::map(&cases, |(s, g)| {
        let f = VectorDualFunctional::indicator(*s, *g);
        intertwine_bruteforce(&f, which).psi() == d.apply(&f.psi())
    });
    IntertwineReport {
        which,
        degree,
        checked: cases.len(),
        failures: cases
            .iter()
            .zip(ok)
            .filter(|(_, ok)| !ok)
            .map(|((s, g), _)| format!("slot {} at {g}", s + 1))
            .collect(),
    }
}

/// Every entry is first order in the differences, except for the extra
/// `□`-term in position `(2,1)`, which is second order throughout.
pub fn first_order_structure(which: Which) -> bool {
    let d = dirac(which);
    let first_order = |op: &QOperator| op.terms().all(|(k, _)| k.diff_order() == 1);
    let extra = extra_term();
    let rest = d.entry(1, 0) - &extra;
    first_order(d.entry(0, 0))
        && first_order(d.entry(0, 1))
        && first_order(d.entry(1, 1))
        && first_order(&rest)
        && !extra.is_zero()
        && extra.terms().all(|(k, _)| k.diff_order() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(a: u32, b: u32, c: u32, d: u32) -> Poly4 {
        Poly4::monomial(MultiIndex::new(a, b, c, d))
    }

    #[test]
    fn entries() {
        let p = dirac_plus();
        let mn = dirac_minus();
        assert_eq!(p.entry(0, 1), &QOperator::d(4));
        assert_eq!(
            mn.entry(0, 0),
            &QOperator::k(4, 1).compose(&QOperator::d(3))
        );
        let m = -LaurentPoly::q_pow(-1);
        assert_eq!(
            mn.entry(1, 1),
            &QOperator::k(4, 1).compose(&QOperator::d(2)).scale(&m)
        );
        assert_eq!(p.entry(1, 0), mn.entry(1, 0));
        let c = Poly4Vec2::basis(0, Poly4::one());
        assert!(p.apply(&c).is_zero());
    }

    #[test]
    fn sampled_products() {
        let (p, m) = (dirac_plus(), dirac_minus());
        let v = Poly4Vec2::basis(0, mono(1, 0, 0, 1));
        let r = m.apply(&p.apply(&v));
        assert_eq!(
            r,
            Poly4Vec2::basis(0, Poly4::term(MultiIndex::ZERO, -RatFunc::q_pow(-1)))
        );
        let v = Poly4Vec2::basis(1, mono(0, 1, 1, 0));
        assert_eq!(m.apply(&p.apply(&v)), Poly4Vec2::basis(1, Poly4::one()));
    }

    #[test]
    fn factorization_low_degree() {
        let r = factorization_check(3);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn then_matches_sequential_application() {
        let (p, m) = (dirac_plus(), dirac_minus());
        let pm = p.then(&m);
        for v in monomial_vectors(3) {
            assert_eq!(pm.apply(&v), m.apply(&p.apply(&v)));
        }
    }

    #[test]
    fn intertwiner_low_degree() {
        assert!(intertwine_check(2, Which::Plus).passed());
        assert!(intertwine_check(2, Which::Minus).passed());
        assert!(intertwine_check(0, Which::Plus).passed());
    }

    #[test]
    fn intertwiner_constants() {
        // p₁ = 1: f_{u₀} reads f on w₂ and −q⁻¹ f on w₁F_μ
        let f = VectorDualFunctional([
            DualFunctional::indicator(MultiIndex::new(0, 1, 0, 0)),
            DualFunctional::indicator(MultiIndex::new(1, 0, 0, 0)),
        ]);
        let g = intertwine_bruteforce(&f, Which::Plus);
        assert_eq!(
            g.0[0].value(&MultiIndex::ZERO),
            &RatFunc::one() - &RatFunc::q_pow(-1)
        );
        assert!(
            intertwine_bruteforce(&VectorDualFunctional::default(), Which::Plus).0[0].is_zero()
        );
    }

    #[test]
    fn structure() {
        assert!(first_order_structure(Which::Plus));
        assert!(first_order_structure(Which::Minus));
    }
}
