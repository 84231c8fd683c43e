use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::aq::AqElement;
use crate::ring::{owned_binops, q_minus_qinv, MultiIndex, RatFunc};

use super::free::{FreeElement, Word};
use super::serre::reduce_word;
use super::{pairing_with_weight, Root};

/// `F_w · K^k · E_v` with `F_w`, `E_v` quotient-basis words.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UqMonomial {
    pub f: Word,
    pub k: [i32; 3],
    pub e: Word,
}

impl UqMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.f.is_empty() && self.e.is_empty() && self.k == [0; 3]
    }
}

impl fmt::Display for UqMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut sep = "";
        if !self.f.is_empty() {
            self.f.fmt_with(f, 'F')?;
            sep = "*";
        }
        for r in Root::ALL {
            match self.k[r.index()] {
                0 => {}
                1 => {
                    write!(f, "{sep}K{}", r.suffix())?;
                    sep = "*";
                }
                e => {
                    write!(f, "{sep}K{}^{e}", r.suffix())?;
                    sep = "*";
                }
            }
        }
        if !self.e.is_empty() {
            write!(f, "{sep}")?;
            self.e.fmt_with(f, 'E')?;
        }
        Ok(())
    }
}

/// An element of the algebra in `F · K · E` order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct UqElement {
    terms: BTreeMap<UqMonomial, RatFunc>,
}

impl UqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::term(UqMonomial::one(), c)
    }

    pub fn term(m: UqMonomial, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn f(r: Root) -> Self {
        Self::term(
            UqMonomial {
                f: Word::letter(r),
                ..Default::default()
            },
            RatFunc::one(),
        )
    }

    pub fn e(r: Root) -> Self {
        Self::term(
            UqMonomial {
                e: Word::letter(r),
                ..Default::default()
            },
            RatFunc::one(),
        )
    }

    pub fn k(r: Root, exp: i32) -> Self {
        let mut k = [0; 3];
        k[r.index()] = exp;
        Self::term(
            UqMonomial {
                k,
                ..Default::default()
            },
            RatFunc::one(),
        )
    }

    /// Embeds a combination of `F`-words, reducing each modulo the Serre ideal.
    pub fn from_free(x: &FreeElement) -> Self {
        let mut out = Self::zero();
        for (w, c) in x.terms() {
            out.add_reduced(w, [0; 3], &Word::empty(), c);
        }
        out
    }

    /// The `F`-word part, if `self` has no `K` or `E` factors.
    pub fn to_free(&self) -> Option<FreeElement> {
        let mut out = FreeElement::zero();
        for (m, c) in &self.terms {
            if m.k != [0; 3] || !m.e.is_empty() {
                return None;
            }
            out.add_term(m.f.clone(), c.clone());
        }
        Some(out)
    }

    pub fn from_terms<I: IntoIterator<Item = (UqMonomial, RatFunc)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: UqMonomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Adds `c · F_f K^k E_e` after reducing both words.
    fn add_reduced(&mut self, f: &Word, k: [i32; 3], e: &Word, c: &RatFunc) {
        let fr = reduce_word(f);
        let er = reduce_word(e);
        for (fw, fc) in fr.terms() {
            let fc = fc * c;
            for (ew, ec) in er.terms() {
                self.add_term(
                    UqMonomial {
                        f: fw.clone(),
                        k,
                        e: ew.clone(),
                    },
                    &fc * ec,
                );
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UqMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &UqMonomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, v)| (m.clone(), v * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    fn mul_f(&self, j: Root) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (m2, d) in monomial_times_f(m, j).terms {
                out.add_term(m2, c * &d);
            }
        }
        out
    }

    fn mul_k(&self, v: [i32; 3]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            // E K^v = q^{-Σ vᵢ (αᵢ, wt E)} K^v E
            let shift: i64 = Root::ALL
                .iter()
                .map(|&r| v[r.index()] as i64 * pairing_with_weight(r, &m.e.0))
                .sum();
            let mut k = m.k;
            for i in 0..3 {
                k[i] += v[i];
            }
            out.add_term(
                UqMonomial {
                    f: m.f.clone(),
                    k,
                    e: m.e.clone(),
                },
                c.shift(-shift),
            );
        }
        out
    }

    fn mul_e(&self, j: Root) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_reduced(&m.f, m.k, &m.e.concat(&Word::letter(j)), c);
        }
        out
    }

    fn mul_monomial(&self, m: &UqMonomial) -> Self {
        let mut acc = self.clone();
        for &r in &m.f.0 {
            acc = acc.mul_f(r);
        }
        if m.k != [0; 3] {
            acc = acc.mul_k(m.k);
        }
        for &r in &m.e.0 {
            acc = acc.mul_e(r);
        }
        acc
    }
}

static F_CACHE: Lazy<RwLock<HashMap<(UqMonomial, Root), UqElement>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `F_w K^k E_v · F_j` in normal order.
fn monomial_times_f(m: &UqMonomial, j: Root) -> UqElement {
    if let Some(hit) = F_CACHE.read().get(&(m.clone(), j)) {
        return hit.clone();
    }
    let mut out = UqElement::zero();
    // E_v F_j = F_j E_v + Σ_p e₁…e_{p−1} [e_p, F_j] e_{p+1}…
    let qq = RatFunc::from(q_minus_qinv())
        .inv()
        .expect("q - q^-1 is nonzero");
    for p in 0..m.e.len() {
        if m.e.0[p] != j {
            continue;
        }
        let prefix = &m.e.0[..p];
        let rest: Vec<Root> = m.e.0[..p].iter().chain(&m.e.0[p + 1..]).copied().collect();
        let rest = Word(rest);
        let pw = pairing_with_weight(j, prefix);
        for s in [1i32, -1] {
            // prefix · K_j^s = q^{-s (α_j, wt prefix)} K_j^s · prefix
            let mut k = m.k;
            k[j.index()] += s;
            let c = qq.shift(-(s as i64) * pw);
            let c = if s == 1 { c } else { -c };
            out.add_reduced(&m.f, k, &rest, &c);
        }
    }
    // K^k F_j = q^{-Σ kᵢ (αᵢ, α_j)} F_j K^k
    let kshift: i64 = Root::ALL
        .iter()
        .map(|&r| m.k[r.index()] as i64 * r.pairing(j))
        .sum();
    out.add_reduced(
        &m.f.concat(&Word::letter(j)),
        m.k,
        &m.e,
        &RatFunc::q_pow(-kshift),
    );
    F_CACHE.write().insert((m.clone(), j), out.clone());
    out
}

impl<'a> Mul<&'a UqElement> for &'a UqElement {
    type Output = UqElement;
    fn mul(self, rhs: &UqElement) -> UqElement {
        let mut out = UqElement::zero();
        for (m, c) in &rhs.terms {
            for (m2, d) in self.mul_monomial(m).terms {
                out.add_term(m2, &d * c);
            }
        }
        out
    }
}

impl<'a> Add<&'a UqElement> for &'a UqElement {
    type Output = UqElement;
    fn add(self, rhs: &UqElement) -> UqElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a UqElement> for &'a UqElement {
    type Output = UqElement;
    fn sub(self, rhs: &UqElement) -> UqElement {
        self + &(-rhs)
    }
}

impl Neg for &UqElement {
    type Output = UqElement;
    fn neg(self) -> UqElement {
        UqElement::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), -c)))
    }
}

owned_binops!(UqElement);

impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<&UqMonomial> = self.terms.keys().collect();
        crate::aq::fmt_sum(
            f,
            self.terms.iter().map(|(m, c)| (m.is_one(), c)),
            |f, i| write!(f, "{}", keys[i]),
        )
    }
}

impl fmt::Debug for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UqElement({self})")
    }
}

/// The image of `wᵢ`:
/// `w₁ = F_β`, `w₂ = F_μF_β − qF_βF_μ`, `w₃ = F_νF_β − qF_βF_ν`,
/// `w₄ = F_μw₃ − qw₃F_μ`.
pub fn w_generator(i: u8) -> Option<UqElement> {
    use Root::*;
    let f = UqElement::f;
    let q = RatFunc::q_pow(1);
    let w3 = || &(&f(Nu) * &f(Beta)) - &(&f(Beta) * &f(Nu)).scale(&q);
    Some(match i {
        1 => f(Beta),
        2 => &(&f(Mu) * &f(Beta)) - &(&f(Beta) * &f(Mu)).scale(&q),
        3 => w3(),
        4 => &(&f(Mu) * &w3()) - &(&w3() * &f(Mu)).scale(&q),
        _ => return None,
    })
}

static W_CACHE: Lazy<RwLock<HashMap<MultiIndex, UqElement>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

pub(crate) fn w_monomial(g: MultiIndex) -> UqElement {
    if let Some(hit) = W_CACHE.read().get(&g) {
        return hit.clone();
    }
    let out = match (0..4).rev().find(|&i| g.get(i) > 0) {
        None => UqElement::one(),
        Some(i) => {
            let prev = w_monomial(g.checked_sub(&MultiIndex::unit(i)).unwrap());
            &prev * &w_generator(i as u8 + 1).unwrap()
        }
    };
    W_CACHE.write().insert(g, out.clone());
    out
}

/// The algebra map `w_i ↦ w_generator(i)`.
pub fn w_embed(x: &AqElement) -> UqElement {
    let mut out = UqElement::zero();
    for (g, c) in x.terms() {
        let c = RatFunc::from(c);
        for (m, d) in w_monomial(*g).terms {
            out.add_term(m, &d * &c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aq::AqWord;
    use crate::ring::{q_int_signed, LaurentPoly};
    use Root::*;

    fn f(r: Root) -> UqElement {
        UqElement::f(r)
    }
    fn e(r: Root) -> UqElement {
        UqElement::e(r)
    }
    fn k(r: Root, x: i32) -> UqElement {
        UqElement::k(r, x)
    }
    fn qp(n: i64) -> RatFunc {
        RatFunc::q_pow(n)
    }

    #[test]
    fn cartan_relations() {
        for i in Root::ALL {
            assert_eq!(&k(i, 1) * &k(i, -1), UqElement::one());
            for j in Root::ALL {
                let p = i.pairing(j);
                assert_eq!(&k(i, 1) * &f(j), (&f(j) * &k(i, 1)).scale(&qp(-p)));
                assert_eq!(&k(i, 1) * &e(j), (&e(j) * &k(i, 1)).scale(&qp(p)));
            }
        }
    }

    #[test]
    fn e_f_commutators() {
        let inv = RatFunc::from(q_minus_qinv()).inv().unwrap();
        for i in Root::ALL {
            for j in Root::ALL {
                let lhs = &(&e(i) * &f(j)) - &(&f(j) * &e(i));
                let rhs = if i == j {
                    (&k(i, 1) - &k(i, -1)).scale(&inv)
                } else {
                    UqElement::zero()
                };
                assert_eq!(lhs, rhs, "{i} {j}");
            }
        }
    }

    #[test]
    fn associativity_on_mixed_products() {
        let a = &(&e(Beta) * &f(Mu)) + &k(Nu, -1);
        let b = &(&f(Beta) * &e(Mu)) - &f(Nu);
        let c = &(&e(Mu) * &e(Beta)) + &(&k(Beta, 1) * &f(Beta));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn e_serre_relations_hold() {
        let two = RatFunc::from(q_int_signed(2));
        let x = &(&(&e(Mu) * &e(Mu)) * &e(Beta)) - &(&(&e(Mu) * &e(Beta)) * &e(Mu)).scale(&two);
        let x = &x + &(&(&e(Beta) * &e(Mu)) * &e(Mu));
        assert!(x.is_zero());
    }

    #[test]
    fn embedding_respects_quadratic_relations() {
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                let lhs = &w_generator(a).unwrap() * &w_generator(b).unwrap();
                let rhs = w_embed(&crate::aq::normal_order(&AqWord::new(vec![a, b]).unwrap()));
                assert_eq!(lhs, rhs, "w{a} w{b}");
            }
        }
    }

    #[test]
    fn f_mu_skew_commutes_with_w2() {
        let w2 = w_generator(2).unwrap();
        assert_eq!(&f(Mu) * &w2, (&w2 * &f(Mu)).scale(&qp(-1)));
    }

    #[test]
    fn e_mu_on_w2() {
        // exact: E_μ w₂ = w₂ E_μ + w₁ K_μ⁻¹
        let (w1, w2) = (w_generator(1).unwrap(), w_generator(2).unwrap());
        assert_eq!(&e(Mu) * &w2, &(&w2 * &e(Mu)) + &(&w1 * &k(Mu, -1)));
    }

    #[test]
    fn display_format() {
        let x = &(&f(Mu) * &k(Mu, -1)) * &e(Beta);
        assert_eq!(x.to_string(), "Fm*Km^-1*Eb");
        assert_eq!(
            UqElement::scalar(LaurentPoly::q().into()).to_string(),
            "(q)"
        );
    }
}
