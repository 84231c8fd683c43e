//! The quadratic algebra generated by `w₁, w₂, w₃, w₄`.
//!
//! Defining relations, oriented toward the normal order `w₁ < w₂ < w₃ < w₄`:
//!
//! ```text
//! w₂w₁ = q⁻¹ w₁w₂      w₃w₁ = q⁻¹ w₁w₃      w₄w₃ = q⁻¹ w₃w₄
//! w₄w₂ = q⁻¹ w₂w₄      w₃w₂ = w₂w₃          w₄w₁ = w₁w₄ − (q − q⁻¹) w₂w₃
//! ```
//!
//! Elements are stored on the basis `w^γ = w₁^γ₁ w₂^γ₂ w₃^γ₃ w₄^γ₄`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use thiserror::Error;

use crate::ring::{owned_binops, q_minus_qinv, LaurentPoly, MultiIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AqError {
    #[error("generator index {0} is not in 1..=4")]
    GeneratorOutOfRange(u8),
}

/// An unordered product of generators, given by their indices `1..=4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AqWord(Vec<u8>);

impl AqWord {
    pub fn new(indices: Vec<u8>) -> Result<Self, AqError> {
        if let Some(&bad) = indices.iter().find(|&&i| !(1..=4).contains(&i)) {
            return Err(AqError::GeneratorOutOfRange(bad));
        }
        Ok(AqWord(indices))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Every word of length `n`.
    pub fn all_of_length(n: usize) -> Vec<AqWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=4u8).map(move |g| {
                        let mut w = w.clone();
                        w.push(g);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(AqWord).collect()
    }
}

/// A normal-ordered element `Σ c_γ w^γ`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AqElement {
    terms: BTreeMap<MultiIndex, LaurentPoly>,
}

impl AqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(MultiIndex::ZERO)
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self::term(MultiIndex::ZERO, c)
    }

    pub fn monomial(g: MultiIndex) -> Self {
        Self::term(g, LaurentPoly::one())
    }

    pub fn term(g: MultiIndex, c: LaurentPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(g, c);
        e
    }

    /// The generator `wᵢ`, `i ∈ 1..=4`.
    pub fn generator(i: u8) -> Result<Self, AqError> {
        if !(1..=4).contains(&i) {
            return Err(AqError::GeneratorOutOfRange(i));
        }
        Ok(Self::monomial(MultiIndex::unit(i as usize - 1)))
    }

    pub(crate) fn w(i: u8) -> Self {
        Self::generator(i).expect("generator index in range")
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, LaurentPoly)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (g, c) in it {
            e.add_term(g, c);
        }
        e
    }

    fn add_term(&mut self, g: MultiIndex, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &MultiIndex) -> LaurentPoly {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, v)| (*g, v * c)))
    }

    /// Total degrees occurring in this element, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(MultiIndex::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(g, _)| g.degree() == d)
                .map(|(g, c)| (*g, c.clone())),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Multiplies by `w_k` on the right.
    fn mul_generator(&self, k: u8) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            for (h, d) in monomial_times_generator(*g, k).terms {
                out.add_term(h, c * &d);
            }
        }
        out
    }
}

static RIGHT_MUL_CACHE: Lazy<RwLock<HashMap<(MultiIndex, u8), AqElement>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `w^γ · w_k` in normal form.
fn monomial_times_generator(g: MultiIndex, k: u8) -> AqElement {
    if let Some(hit) = RIGHT_MUL_CACHE.read().get(&(g, k)) {
        return hit.clone();
    }
    let out = compute_monomial_times_generator(g, k);
    RIGHT_MUL_CACHE.write().insert((g, k), out.clone());
    out
}

fn compute_monomial_times_generator(g: MultiIndex, k: u8) -> AqElement {
    let shifted = g.add(&MultiIndex::unit(k as usize - 1));
    let d = g.get(3) as i64;
    match k {
        4 => AqElement::monomial(shifted),
        // w₄ᵈ w₃ = q⁻ᵈ w₃ w₄ᵈ;  w₃ commutes with w₂ and w₄ᵈ w₂ = q⁻ᵈ w₂ w₄ᵈ
        2 | 3 => AqElement::term(shifted, LaurentPoly::q_pow(-d)),
        1 => {
            let Some(last) = (1..4).rev().find(|&i| g.get(i) > 0) else {
                return AqElement::monomial(shifted);
            };
            let prefix = AqElement::monomial(g.checked_sub(&MultiIndex::unit(last)).unwrap());
            match last {
                3 => {
                    // m' w₄ w₁ = m' w₁ w₄ − (q − q⁻¹) m' w₂ w₃
                    let a = prefix.mul_generator(1).mul_generator(4);
                    let b = prefix.mul_generator(2).mul_generator(3);
                    &a - &b.scale(&q_minus_qinv())
                }
                _ => {
                    // w₂w₁ = q⁻¹w₁w₂, w₃w₁ = q⁻¹w₁w₃
                    prefix
                        .mul_generator(1)
                        .mul_generator(last as u8 + 1)
                        .scale(&LaurentPoly::q_pow(-1))
                }
            }
        }
        _ => unreachable!("generator index checked by caller"),
    }
}

/// Normal form of a word in the generators.
pub fn normal_order(word: &AqWord) -> AqElement {
    word.0
        .iter()
        .fold(AqElement::one(), |acc, &k| acc.mul_generator(k))
}

/// Which inversion the rewriting engine resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Normal form by rewriting adjacent inversions with the six oriented
/// relations. Independent of [`normal_order`]; the two agree iff the
/// rewriting system is confluent on the words tried.
pub fn normal_order_rewriting(word: &AqWord, strategy: Strategy) -> AqElement {
    let mut memo = HashMap::new();
    rewrite(&word.0, strategy, &mut memo)
}

fn rewrite(word: &[u8], strategy: Strategy, memo: &mut HashMap<Vec<u8>, AqElement>) -> AqElement {
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let mut inversions = (0..word.len().saturating_sub(1)).filter(|&i| word[i] > word[i + 1]);
    let pos = match strategy {
        Strategy::Leftmost => inversions.next(),
        Strategy::Rightmost => inversions.next_back(),
    };
    let out = match pos {
        None => {
            let mut g = [0u32; 4];
            for &l in word {
                g[l as usize - 1] += 1;
            }
            AqElement::monomial(MultiIndex(g))
        }
        Some(i) => {
            let splice = |pair: [u8; 2]| {
                let mut w = word.to_vec();
                w[i] = pair[0];
                w[i + 1] = pair[1];
                w
            };
            let qinv = LaurentPoly::q_pow(-1);
            match (word[i], word[i + 1]) {
                (4, 1) => {
                    let a = rewrite(&splice([1, 4]), strategy, memo);
                    let b = rewrite(&splice([2, 3]), strategy, memo);
                    &a - &b.scale(&q_minus_qinv())
                }
                (3, 2) => rewrite(&splice([2, 3]), strategy, memo),
                (a, b) => rewrite(&splice([b, a]), strategy, memo).scale(&qinv),
            }
        }
    };
    memo.insert(word.to_vec(), out.clone());
    out
}

/// `ab − ba`.
pub fn commutator(a: &AqElement, b: &AqElement) -> AqElement {
    &(a * b) - &(b * a)
}

/// `Ω = w₁w₄ − q w₂w₃`, central in the algebra.
pub fn center_element() -> AqElement {
    AqElement::from_terms([
        (MultiIndex::new(1, 0, 0, 1), LaurentPoly::one()),
        (MultiIndex::new(0, 1, 1, 0), -LaurentPoly::q()),
    ])
}

impl<'a> Mul<&'a AqElement> for &'a AqElement {
    type Output = AqElement;
    fn mul(self, rhs: &AqElement) -> AqElement {
        let mut out = AqElement::zero();
        for (h, d) in &rhs.terms {
            let mut partial = self.clone();
            for (i, &n) in h.0.iter().enumerate() {
                for _ in 0..n {
                    partial = partial.mul_generator(i as u8 + 1);
                }
            }
            for (g, c) in partial.terms {
                out.add_term(g, &c * d);
            }
        }
        out
    }
}

impl<'a> Add<&'a AqElement> for &'a AqElement {
    type Output = AqElement;
    fn add(self, rhs: &AqElement) -> AqElement {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(*g, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a AqElement> for &'a AqElement {
    type Output = AqElement;
    fn sub(self, rhs: &AqElement) -> AqElement {
        self + &(-rhs)
    }
}

impl Neg for &AqElement {
    type Output = AqElement;
    fn neg(self) -> AqElement {
        AqElement::from_terms(self.terms.iter().map(|(g, c)| (*g, -c)))
    }
}

owned_binops!(AqElement);

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, sym: &str, g: &MultiIndex) -> fmt::Result {
    let mut first = true;
    for (i, &e) in g.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{sym}{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Writes `Σ coeff * basis` in the expression grammar.
pub(crate) fn fmt_sum<'a, C, I, F>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
    mut basis: F,
) -> fmt::Result
where
    C: fmt::Display + 'a,
    I: Iterator<Item = (bool, &'a C)>,
    F: FnMut(&mut fmt::Formatter<'_>, usize) -> fmt::Result,
{
    // items are (basis element is the unit, coefficient)
    let mut any = false;
    for (idx, (unit_basis, c)) in terms.enumerate() {
        let s = c.to_string();
        let (neg, plain) = match s.as_str() {
            "1" => (false, true),
            "-1" => (true, true),
            _ => (false, false),
        };
        if any {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        } else if neg {
            write!(f, "-")?;
        }
        any = true;
        match (plain, unit_basis) {
            (true, true) => write!(f, "1")?,
            (true, false) => basis(f, idx)?,
            (false, true) => write!(f, "({s})")?,
            (false, false) => {
                write!(f, "({s})*")?;
                basis(f, idx)?;
            }
        }
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for AqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<&MultiIndex> = self.terms.keys().collect();
        fmt_sum(
            f,
            self.terms.iter().map(|(g, c)| (*g == MultiIndex::ZERO, c)),
            |f, i| fmt_monomial(f, "w", keys[i]),
        )
    }
}

impl fmt::Debug for AqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AqElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(i: u8) -> AqElement {
        AqElement::w(i)
    }
    fn qp(k: i64) -> LaurentPoly {
        LaurentPoly::q_pow(k)
    }
    fn word(v: &[u8]) -> AqWord {
        AqWord::new(v.to_vec()).unwrap()
    }

    #[test]
    fn normal_order_examples() {
        assert_eq!(
            normal_order(&word(&[2, 1])),
            AqElement::term(MultiIndex::new(1, 1, 0, 0), qp(-1))
        );
        assert_eq!(
            normal_order(&word(&[1, 1])),
            AqElement::monomial(MultiIndex::new(2, 0, 0, 0))
        );
        assert_eq!(
            normal_order(&word(&[4, 1])),
            &AqElement::monomial(MultiIndex::new(1, 0, 0, 1))
                - &AqElement::term(MultiIndex::new(0, 1, 1, 0), q_minus_qinv())
        );
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            &w(2) * &w(1),
            AqElement::term(MultiIndex::new(1, 1, 0, 0), qp(-1))
        );
        let a = &w(3) + &w(4).scale(&qp(2));
        assert_eq!(&AqElement::one() * &a, a);
        let lhs = &w(4).pow(2) * &w(1);
        let expected = &AqElement::monomial(MultiIndex::new(1, 0, 0, 2))
            - &AqElement::term(MultiIndex::new(0, 1, 1, 1), &qp(1) - &qp(-3));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(
            commutator(&w(1), &w(4)),
            AqElement::term(MultiIndex::new(0, 1, 1, 0), q_minus_qinv())
        );
        assert!(commutator(&w(2), &w(3)).is_zero());
        let a = &w(1) * &w(3) + w(2);
        assert!(commutator(&a, &a).is_zero());
    }

    #[test]
    fn center_commutes_with_generators() {
        let omega = center_element();
        for i in 1..=4 {
            assert!(commutator(&omega, &w(i)).is_zero(), "w{i}");
        }
    }

    #[test]
    fn out_of_range_generator() {
        assert_eq!(
            AqWord::new(vec![1, 5]),
            Err(AqError::GeneratorOutOfRange(5))
        );
        assert_eq!(
            AqElement::generator(0),
            Err(AqError::GeneratorOutOfRange(0))
        );
    }

    #[test]
    fn length_three_words_are_confluent() {
        for wd in AqWord::all_of_length(3) {
            let l = normal_order_rewriting(&wd, Strategy::Leftmost);
            let r = normal_order_rewriting(&wd, Strategy::Rightmost);
            assert_eq!(l, r, "{:?}", wd);
            assert_eq!(l, normal_order(&wd), "{:?}", wd);
        }
    }

    #[test]
    fn display() {
        let e = &(&w(1) * &w(4)) - &(&w(2) * &w(3)).scale(&qp(1));
        assert_eq!(e.to_string(), "(-q)*w2*w3 + w1*w4");
        assert_eq!(AqElement::zero().to_string(), "0");
        assert_eq!(AqElement::scalar(qp(2)).to_string(), "(q^2)");
    }
}
