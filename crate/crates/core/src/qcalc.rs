//! q-difference operators on polynomials in `z₁..z₄`.
//!
//! A [`QOperator`] is stored as `Σ c · z^α ∘ K^δ ∘ [∂]^γ`. On each axis the
//! three symbols obey
//!
//! ```text
//! [∂ᵢ] zᵢ = q zᵢ [∂ᵢ] + Kᵢ      Kᵢ zᵢ = q⁻¹ zᵢ Kᵢ      Kᵢ [∂ᵢ] = q [∂ᵢ] Kᵢ
//! ```
//!
//! and symbols on different axes commute. These rules give a unique normal
//! form for the abstract algebra, but that algebra does not act faithfully on
//! polynomials: `(q − q⁻¹) zᵢ[∂ᵢ] = Kᵢ⁻¹ − Kᵢ` holds as operators. Operator
//! equality is therefore decided on [`CanonicalOp`], which eliminates every
//! `zᵢ…[∂ᵢ]` pair using that relation and is faithful.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::Serialize;
use thiserror::Error;

use crate::aq::fmt_sum;
use crate::ring::{owned_binops, q_falling, q_minus_qinv, LaurentPoly, MultiIndex, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QcalcError {
    #[error("axis {0} is not in 1..=4")]
    AxisOutOfRange(usize),
}

fn check_axis(i: usize) -> Result<usize, QcalcError> {
    if (1..=4).contains(&i) {
        Ok(i - 1)
    } else {
        Err(QcalcError::AxisOutOfRange(i))
    }
}

/// A polynomial `Σ c_α z^α` with coefficients in Q(q).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly4 {
    terms: BTreeMap<MultiIndex, RatFunc>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(MultiIndex::ZERO)
    }

    pub fn monomial(a: MultiIndex) -> Self {
        Self::term(a, RatFunc::one())
    }

    pub fn term(a: MultiIndex, c: RatFunc) -> Self {
        let mut p = Self::zero();
        p.add_term(a, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, RatFunc)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (a, c) in it {
            p.add_term(a, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, a: MultiIndex, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(a).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &MultiIndex) -> RatFunc {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(a, v)| (*a, v * c)))
    }
}

impl<'a> Add<&'a Poly4> for &'a Poly4 {
    type Output = Poly4;
    fn add(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(*a, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly4> for &'a Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: &Poly4) -> Poly4 {
        self + &(-rhs)
    }
}

impl Neg for &Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        Poly4::from_terms(self.terms.iter().map(|(a, c)| (*a, -c)))
    }
}

impl Add for Poly4 {
    type Output = Poly4;
    fn add(self, rhs: Poly4) -> Poly4 {
        &self + &rhs
    }
}

impl Sub for Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: Poly4) -> Poly4 {
        &self - &rhs
    }
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<&MultiIndex> = self.terms.keys().collect();
        fmt_sum(
            f,
            self.terms.iter().map(|(a, c)| (*a == MultiIndex::ZERO, c)),
            |f, i| crate::aq::fmt_monomial(f, "z_", keys[i]),
        )
    }
}

impl fmt::Debug for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly4({self})")
    }
}

/// A `C²`-valued polynomial, one [`Poly4`] per component.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Poly4Vec2(pub [Poly4; 2]);

impl Poly4Vec2 {
    pub fn new(first: Poly4, second: Poly4) -> Self {
        Poly4Vec2([first, second])
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `p` placed in component `slot` (0 or 1).
    pub fn basis(slot: usize, p: Poly4) -> Self {
        let mut v = Self::zero();
        v.0[slot] = p;
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly4::is_zero)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Poly4Vec2([self.0[0].scale(c), self.0[1].scale(c)])
    }
}

/// Index of one normal-form term `z^α ∘ K^δ ∘ [∂]^γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OpKey {
    pub z: MultiIndex,
    pub k: [i32; 4],
    pub d: MultiIndex,
}

impl OpKey {
    pub const IDENTITY: OpKey = OpKey {
        z: MultiIndex::ZERO,
        k: [0; 4],
        d: MultiIndex::ZERO,
    };

    /// Total order of the difference part `Σ γᵢ`.
    pub fn diff_order(&self) -> u32 {
        self.d.degree()
    }

    fn axis(&self, i: usize) -> AxisTerm {
        AxisTerm {
            z: self.z.get(i),
            k: self.k[i],
            d: self.d.get(i),
        }
    }

    fn from_axes(axes: [AxisTerm; 4]) -> OpKey {
        OpKey {
            z: MultiIndex(std::array::from_fn(|i| axes[i].z)),
            k: std::array::from_fn(|i| axes[i].k),
            d: MultiIndex(std::array::from_fn(|i| axes[i].d)),
        }
    }

    /// Acts on `z^β`; `None` when a difference factor annihilates it.
    fn apply(&self, beta: &MultiIndex) -> Option<(MultiIndex, LaurentPoly)> {
        let lowered = beta.checked_sub(&self.d)?;
        let mut c = LaurentPoly::one();
        let mut scale_exp = 0i64;
        for i in 0..4 {
            c = &c * &q_falling(beta.get(i), self.d.get(i));
            scale_exp -= self.k[i] as i64 * lowered.get(i) as i64;
        }
        Some((lowered.add(&self.z), c.shift(scale_exp)))
    }
}

impl fmt::Display for OpKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (sym, vals) in [
            ("z_", self.z.0.map(|x| x as i64)),
            ("K_", self.k.map(|x| x as i64)),
            ("d_", self.d.0.map(|x| x as i64)),
        ] {
            for (i, &e) in vals.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{sym}{}", i + 1)),
                    e => parts.push(format!("{sym}{}^{e}", i + 1)),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("."))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct AxisTerm {
    z: u32,
    k: i32,
    d: u32,
}

type AxisSum = Vec<(AxisTerm, LaurentPoly)>;

static AXIS_MUL_CACHE: Lazy<RwLock<HashMap<(AxisTerm, AxisTerm), AxisSum>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Normal form of the single-axis product `(z^a K^k ∂^d)(z^a' K^k' ∂^d')`.
fn axis_mul(l: AxisTerm, r: AxisTerm) -> AxisSum {
    if let Some(hit) = AXIS_MUL_CACHE.read().get(&(l, r)) {
        return hit.clone();
    }
    let out = compute_axis_mul(l, r);
    AXIS_MUL_CACHE.write().insert((l, r), out.clone());
    out
}

fn compute_axis_mul(l: AxisTerm, r: AxisTerm) -> AxisSum {
    if l.d == 0 {
        // K^k z^a' = q^{-k a'} z^a' K^k
        let t = AxisTerm {
            z: l.z + r.z,
            k: l.k + r.k,
            d: r.d,
        };
        return vec![(t, LaurentPoly::q_pow(-(l.k as i64) * r.z as i64))];
    }
    if r.z == 0 {
        // ∂^d K^k' = q^{-d k'} K^k' ∂^d
        let t = AxisTerm {
            z: l.z,
            k: l.k + r.k,
            d: l.d + r.d,
        };
        return vec![(t, LaurentPoly::q_pow(-(l.d as i64) * r.k as i64))];
    }
    // peel one ∂ z pair: ∂ z = q z ∂ + K
    let left = AxisTerm { d: l.d - 1, ..l };
    let right = AxisTerm { z: r.z - 1, ..r };
    let z_d = AxisTerm { z: 1, k: 0, d: 1 };
    let k1 = AxisTerm { z: 0, k: 1, d: 0 };
    let mut acc: HashMap<AxisTerm, LaurentPoly> = HashMap::new();
    for (mid, coeff) in [(z_d, LaurentPoly::q()), (k1, LaurentPoly::one())] {
        for (t1, c1) in axis_mul(left, mid) {
            for (t2, c2) in axis_mul(t1, right) {
                *acc.entry(t2).or_default() += &(&(&coeff * &c1) * &c2);
            }
        }
    }
    let mut out: AxisSum = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|(t, _)| (t.z, t.k, t.d));
    out
}

/// A q-difference operator in normal form with Laurent coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QOperator {
    terms: BTreeMap<OpKey, LaurentPoly>,
}

impl QOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self::term(OpKey::IDENTITY, c)
    }

    pub fn term(key: OpKey, c: LaurentPoly) -> Self {
        let mut op = Self::zero();
        op.add_term(key, c);
        op
    }

    pub fn from_terms<I: IntoIterator<Item = (OpKey, LaurentPoly)>>(it: I) -> Self {
        let mut op = Self::zero();
        for (k, c) in it {
            op.add_term(k, c);
        }
        op
    }

    fn add_term(&mut self, key: OpKey, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn single_axis(i: usize, t: AxisTerm) -> Result<Self, QcalcError> {
        let i = check_axis(i)?;
        let mut key = OpKey::IDENTITY;
        key.z.0[i] = t.z;
        key.k[i] = t.k;
        key.d.0[i] = t.d;
        Ok(Self::term(key, LaurentPoly::one()))
    }

    /// The q-derivative `[∂/∂zᵢ]_q`: `zᵢⁿ ↦ [n]_q zᵢⁿ⁻¹`.
    pub fn qdiff(i: usize) -> Result<Self, QcalcError> {
        Self::single_axis(i, AxisTerm { z: 0, k: 0, d: 1 })
    }

    /// The scaling operator `Kᵢ`: `z^α ↦ q^{−αᵢ} z^α`.
    pub fn scaling(i: usize) -> Result<Self, QcalcError> {
        Self::scaling_pow(i, 1)
    }

    /// `Kᵢ^e` for any integer `e`.
    pub fn scaling_pow(i: usize, e: i32) -> Result<Self, QcalcError> {
        Self::single_axis(i, AxisTerm { z: 0, k: e, d: 0 })
    }

    /// Multiplication by `zᵢ`.
    pub fn mul_z(i: usize) -> Result<Self, QcalcError> {
        Self::single_axis(i, AxisTerm { z: 1, k: 0, d: 0 })
    }

    pub(crate) fn d(i: usize) -> Self {
        Self::qdiff(i).expect("axis in range")
    }

    pub(crate) fn k(i: usize, e: i32) -> Self {
        Self::scaling_pow(i, e).expect("axis in range")
    }

    pub(crate) fn z(i: usize) -> Self {
        Self::mul_z(i).expect("axis in range")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OpKey, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    /// `self ∘ other` in normal form.
    pub fn compose(&self, other: &QOperator) -> QOperator {
        let mut out = QOperator::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let coeff = c1 * c2;
                for (key, c) in compose_keys(k1, k2) {
                    out.add_term(key, &coeff * &c);
                }
            }
        }
        out
    }

    pub fn apply(&self, p: &Poly4) -> Poly4 {
        let mut out = Poly4::zero();
        for (beta, pc) in p.terms() {
            for (key, c) in &self.terms {
                if let Some((target, f)) = key.apply(beta) {
                    out.add_term(target, pc * &RatFunc::from(&(c * &f)));
                }
            }
        }
        out
    }

    /// Faithful normal form; see the module docs.
    pub fn canonical(&self) -> CanonicalOp {
        let mut out = CanonicalOp::default();
        for (key, c) in &self.terms {
            let per_axis: Vec<Vec<(AxisTerm, RatFunc)>> =
                (0..4).map(|i| canonical_axis(key.axis(i))).collect();
            let mut partial: Vec<([AxisTerm; 4], RatFunc)> =
                vec![([AxisTerm { z: 0, k: 0, d: 0 }; 4], RatFunc::from(c))];
            for (i, choices) in per_axis.iter().enumerate() {
                let mut next = Vec::with_capacity(partial.len() * choices.len());
                for (axes, pc) in &partial {
                    for (t, tc) in choices {
                        let mut axes = *axes;
                        axes[i] = *t;
                        next.push((axes, pc * tc));
                    }
                }
                partial = next;
            }
            for (axes, c) in partial {
                out.add_term(OpKey::from_axes(axes), c);
            }
        }
        out
    }

    /// Equality as operators on polynomials.
    pub fn equivalent(&self, other: &QOperator) -> bool {
        (self - other).canonical().is_zero()
    }
}

fn compose_keys(k1: &OpKey, k2: &OpKey) -> Vec<(OpKey, LaurentPoly)> {
    let mut partial: Vec<([AxisTerm; 4], LaurentPoly)> =
        vec![([AxisTerm { z: 0, k: 0, d: 0 }; 4], LaurentPoly::one())];
    for i in 0..4 {
        let prods = axis_mul(k1.axis(i), k2.axis(i));
        let mut next = Vec::with_capacity(partial.len() * prods.len());
        for (axes, pc) in &partial {
            for (t, tc) in &prods {
                let mut axes = *axes;
                axes[i] = *t;
                next.push((axes, pc * tc));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(axes, c)| (OpKey::from_axes(axes), c))
        .collect()
}

/// Rewrites `z^a K^k ∂^d` with `a, d ≥ 1` using
/// `z K^k ∂ = q^k K^k z∂ = q^k (K^{k−1} − K^{k+1}) / (q − q⁻¹)`.
fn canonical_axis(t: AxisTerm) -> Vec<(AxisTerm, RatFunc)> {
    if t.z == 0 || t.d == 0 {
        return vec![(t, RatFunc::one())];
    }
    let factor =
        RatFunc::new(LaurentPoly::q_pow(t.k as i64), q_minus_qinv()).expect("q - q^-1 is nonzero");
    let lower = AxisTerm {
        z: t.z - 1,
        k: t.k - 1,
        d: t.d - 1,
    };
    let upper = AxisTerm {
        k: t.k + 1,
        ..lower
    };
    let mut out = Vec::new();
    for (src, sign) in [(lower, RatFunc::one()), (upper, -RatFunc::one())] {
        for (u, c) in canonical_axis(src) {
            out.push((u, &(&factor * &sign) * &c));
        }
    }
    out
}

impl<'a> Add<&'a QOperator> for &'a QOperator {
    type Output = QOperator;
    fn add(self, rhs: &QOperator) -> QOperator {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a QOperator> for &'a QOperator {
    type Output = QOperator;
    fn sub(self, rhs: &QOperator) -> QOperator {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QOperator> for &'a QOperator {
    type Output = QOperator;
    /// Composition.
    fn mul(self, rhs: &QOperator) -> QOperator {
        self.compose(rhs)
    }
}

impl Neg for &QOperator {
    type Output = QOperator;
    fn neg(self) -> QOperator {
        QOperator::from_terms(self.terms.iter().map(|(k, c)| (*k, -c)))
    }
}

owned_binops!(QOperator);

impl fmt::Display for QOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<&OpKey> = self.terms.keys().collect();
        fmt_sum(
            f,
            self.terms.iter().map(|(k, c)| (*k == OpKey::IDENTITY, c)),
            |f, i| write!(f, "{}", keys[i]),
        )
    }
}

impl fmt::Debug for QOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QOperator({self})")
    }
}

/// Faithful normal form: no axis carries both `zᵢ` and `[∂ᵢ]`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct CanonicalOp {
    terms: BTreeMap<OpKey, RatFunc>,
}

impl CanonicalOp {
    fn add_term(&mut self, key: OpKey, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OpKey, &RatFunc)> {
        self.terms.iter()
    }

    pub fn apply(&self, p: &Poly4) -> Poly4 {
        let mut out = Poly4::zero();
        for (beta, pc) in p.terms() {
            for (key, c) in &self.terms {
                if let Some((target, f)) = key.apply(beta) {
                    out.add_term(target, &(pc * c) * &RatFunc::from(f));
                }
            }
        }
        out
    }
}

impl fmt::Display for CanonicalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<&OpKey> = self.terms.keys().collect();
        fmt_sum(
            f,
            self.terms.iter().map(|(k, c)| (*k == OpKey::IDENTITY, c)),
            |f, i| write!(f, "{}", keys[i]),
        )
    }
}

impl fmt::Debug for CanonicalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalOp({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q_int;

    fn mono(a: u32, b: u32, c: u32, d: u32) -> Poly4 {
        Poly4::monomial(MultiIndex::new(a, b, c, d))
    }

    #[test]
    fn qdiff_examples() {
        let r = QOperator::d(4).apply(&mono(0, 0, 0, 3));
        assert_eq!(
            r,
            Poly4::term(MultiIndex::new(0, 0, 0, 2), q_int(3).unwrap().into())
        );
        assert!(QOperator::d(1).apply(&mono(0, 1, 0, 0)).is_zero());
        assert_eq!(QOperator::d(2).apply(&mono(0, 1, 0, 0)), Poly4::one());
    }

    #[test]
    fn scaling_examples() {
        assert_eq!(
            QOperator::k(2, 1).apply(&mono(0, 2, 1, 0)),
            Poly4::term(MultiIndex::new(0, 2, 1, 0), RatFunc::q_pow(-2))
        );
        assert_eq!(QOperator::k(1, 1).apply(&Poly4::one()), Poly4::one());
        assert_eq!(
            QOperator::k(4, 1).apply(&mono(0, 0, 0, 1)),
            Poly4::term(MultiIndex::new(0, 0, 0, 1), RatFunc::q_pow(-1))
        );
    }

    #[test]
    fn scaling_from_difference_and_multiplication() {
        for i in 1..=4 {
            let lhs = &QOperator::d(i).compose(&QOperator::z(i))
                - &QOperator::z(i)
                    .compose(&QOperator::d(i))
                    .scale(&LaurentPoly::q());
            assert_eq!(lhs, QOperator::k(i, 1), "axis {i}");
        }
    }

    #[test]
    fn compose_examples() {
        let a = &QOperator::d(3) + &QOperator::z(1).scale(&LaurentPoly::q());
        assert_eq!(QOperator::identity().compose(&a), a);
        let mixed = QOperator::k(1, 1).compose(&QOperator::d(2));
        assert_eq!(mixed.len(), 1);
        let (key, c) = mixed.terms().next().unwrap();
        assert!(c.is_one());
        assert_eq!(key.k, [1, 0, 0, 0]);
        assert_eq!(key.d, MultiIndex::new(0, 1, 0, 0));
    }

    #[test]
    fn apply_examples() {
        assert!(QOperator::zero().apply(&mono(1, 2, 0, 1)).is_zero());
        let dd = QOperator::d(4).compose(&QOperator::d(4));
        assert_eq!(
            dd.apply(&mono(0, 0, 0, 2)),
            Poly4::scalar_poly(q_int(2).unwrap())
        );
    }

    #[test]
    fn axis_out_of_range() {
        assert_eq!(QOperator::qdiff(0), Err(QcalcError::AxisOutOfRange(0)));
        assert_eq!(QOperator::scaling(5), Err(QcalcError::AxisOutOfRange(5)));
    }

    #[test]
    fn z_d_relation_is_only_an_operator_identity() {
        // (q - q^-1) z∂ and K^-1 - K differ as normal forms but act identically
        let lhs = QOperator::z(2)
            .compose(&QOperator::d(2))
            .scale(&q_minus_qinv());
        let rhs = &QOperator::k(2, -1) - &QOperator::k(2, 1);
        assert_ne!(lhs, rhs);
        assert!(lhs.equivalent(&rhs));
    }

    #[test]
    fn display_uses_grammar_symbols() {
        let op = &QOperator::k(2, 1)
            .compose(&QOperator::k(3, 1))
            .compose(&QOperator::d(1))
            .compose(&QOperator::d(4))
            - &QOperator::d(2)
                .compose(&QOperator::d(3))
                .scale(&LaurentPoly::q());
        assert_eq!(op.to_string(), "(-q)*d_2.d_3 + K_2.K_3.d_1.d_4");
    }

    impl Poly4 {
        fn scalar_poly(c: LaurentPoly) -> Poly4 {
            Poly4::term(MultiIndex::ZERO, c.into())
        }
    }
}
