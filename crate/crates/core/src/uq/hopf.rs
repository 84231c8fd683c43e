//! Coproduct, antipode and counit:
//!
//! ```text
//! Δ(E) = E⊗1 + K⊗E    Δ(F) = F⊗K⁻¹ + 1⊗F    Δ(K) = K⊗K
//! S(E) = −K⁻¹E        S(F) = −FK            S(K) = K⁻¹
//! ε(E) = ε(F) = 0     ε(K) = 1
//! ```

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use crate::ring::RatFunc;

use super::element::{UqElement, UqMonomial};
use super::Root;

/// An element of `U ⊗ U` on the product of the monomial bases.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    terms: BTreeMap<(UqMonomial, UqMonomial), RatFunc>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::pure(&UqElement::one(), &UqElement::one())
    }

    /// `a ⊗ b`.
    pub fn pure(a: &UqElement, b: &UqElement) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term(ma.clone(), mb.clone(), ca * cb);
            }
        }
        out
    }

    fn add_term(&mut self, a: UqMonomial, b: UqMonomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for ((a, b), d) in &self.terms {
            out.add_term(a.clone(), b.clone(), d * c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UqMonomial, &UqMonomial, &RatFunc)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    /// `Σ c · g(aᵢ) · h(bᵢ)`, collapsing the tensor with a product.
    pub fn contract<G, H>(&self, g: G, h: H) -> UqElement
    where
        G: Fn(&UqElement) -> UqElement,
        H: Fn(&UqElement) -> UqElement,
    {
        let mut out = UqElement::zero();
        for ((a, b), c) in &self.terms {
            let ga = g(&UqElement::term(a.clone(), RatFunc::one()));
            let hb = h(&UqElement::term(b.clone(), RatFunc::one()));
            out = &out + &(&ga * &hb).scale(c);
        }
        out
    }
}

impl<'a> Mul<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    fn mul(self, rhs: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((a, b), c) in &self.terms {
            let ea = UqElement::term(a.clone(), RatFunc::one());
            let eb = UqElement::term(b.clone(), RatFunc::one());
            for ((x, y), d) in &rhs.terms {
                let left = &ea * &UqElement::term(x.clone(), RatFunc::one());
                let right = &eb * &UqElement::term(y.clone(), RatFunc::one());
                let cd = c * d;
                for (ml, cl) in left.terms() {
                    for (mr, cr) in right.terms() {
                        out.add_term(ml.clone(), mr.clone(), &(&cd * cl) * cr);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }
}

fn delta_e(r: Root) -> Tensor {
    &Tensor::pure(&UqElement::e(r), &UqElement::one())
        + &Tensor::pure(&UqElement::k(r, 1), &UqElement::e(r))
}

fn delta_f(r: Root) -> Tensor {
    &Tensor::pure(&UqElement::f(r), &UqElement::k(r, -1))
        + &Tensor::pure(&UqElement::one(), &UqElement::f(r))
}

fn delta_k(k: [i32; 3]) -> Tensor {
    let m = UqMonomial {
        k,
        ..Default::default()
    };
    let e = UqElement::term(m, RatFunc::one());
    Tensor::pure(&e, &e)
}

fn coproduct_monomial(m: &UqMonomial) -> Tensor {
    let mut acc = Tensor::one();
    for &r in &m.f.0 {
        acc = &acc * &delta_f(r);
    }
    if m.k != [0; 3] {
        acc = &acc * &delta_k(m.k);
    }
    for &r in &m.e.0 {
        acc = &acc * &delta_e(r);
    }
    acc
}

/// `Δ`, extended as an algebra map.
pub fn coproduct(x: &UqElement) -> Tensor {
    let mut out = Tensor::zero();
    for (m, c) in x.terms() {
        for ((a, b), d) in coproduct_monomial(m).terms {
            out.add_term(a, b, &d * c);
        }
    }
    out
}

fn antipode_monomial(m: &UqMonomial) -> UqElement {
    // S is an anti-homomorphism: S(F K E) = S(E) S(K) S(F), letters reversed
    let mut acc = UqElement::one();
    for &r in m.e.0.iter().rev() {
        acc = &acc * &(-&(&UqElement::k(r, -1) * &UqElement::e(r)));
    }
    let kinv = UqMonomial {
        k: m.k.map(|x| -x),
        ..Default::default()
    };
    acc = &acc * &UqElement::term(kinv, RatFunc::one());
    for &r in m.f.0.iter().rev() {
        acc = &acc * &(-&(&UqElement::f(r) * &UqElement::k(r, 1)));
    }
    acc
}

/// The antipode `S`.
pub fn antipode(x: &UqElement) -> UqElement {
    let mut out = UqElement::zero();
    for (m, c) in x.terms() {
        out = &out + &antipode_monomial(m).scale(c);
    }
    out
}

/// The counit `ε`.
pub fn counit(x: &UqElement) -> RatFunc {
    let mut out = RatFunc::zero();
    for (m, c) in x.terms() {
        if m.f.is_empty() && m.e.is_empty() {
            out += c;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{q_int_signed, q_minus_qinv};
    use Root::*;

    fn samples() -> Vec<UqElement> {
        let (f, e, k) = (UqElement::f, UqElement::e, UqElement::k);
        vec![
            f(Mu),
            e(Beta),
            k(Nu, -1),
            &f(Beta) * &f(Mu),
            &(&e(Mu) * &f(Mu)) + &k(Beta, 1),
            &(&f(Nu) * &k(Mu, 1)) * &e(Beta),
        ]
    }

    #[test]
    fn antipode_axiom() {
        // m(S ⊗ id)Δ = m(id ⊗ S)Δ = ε
        for x in samples() {
            let eps = UqElement::scalar(counit(&x));
            let d = coproduct(&x);
            assert_eq!(d.contract(antipode, UqElement::clone), eps, "{x}");
            assert_eq!(d.contract(UqElement::clone, antipode), eps, "{x}");
        }
    }

    #[test]
    fn counit_axiom() {
        for x in samples() {
            let d = coproduct(&x);
            let left = d.contract(|a| UqElement::scalar(counit(a)), UqElement::clone);
            let right = d.contract(UqElement::clone, |b| UqElement::scalar(counit(b)));
            assert_eq!(left, x);
            assert_eq!(right, x);
        }
    }

    #[test]
    fn coproduct_respects_relations() {
        let inv = RatFunc::from(q_minus_qinv()).inv().unwrap();
        // Δ(E_μ)Δ(F_μ) − Δ(F_μ)Δ(E_μ) = Δ((K_μ − K_μ⁻¹)/(q − q⁻¹))
        let lhs = &(&delta_e(Mu) * &delta_f(Mu)) + &neg(&(&delta_f(Mu) * &delta_e(Mu)));
        let kk = (&UqElement::k(Mu, 1) - &UqElement::k(Mu, -1)).scale(&inv);
        assert_eq!(lhs, coproduct(&kk));
        // Serre relation in F_μ, F_β
        let two = RatFunc::from(q_int_signed(2));
        let (a, b) = (delta_f(Mu), delta_f(Beta));
        let s = &(&(&(&a * &a) * &b) + &neg(&(&(&a * &b) * &a)).scale(&two)) + &(&(&b * &a) * &a);
        assert!(s.is_zero());
    }

    #[test]
    fn coproduct_is_multiplicative() {
        let xs = samples();
        for x in &xs[..3] {
            for y in &xs[3..] {
                assert_eq!(coproduct(&(x * y)), &coproduct(x) * &coproduct(y));
            }
        }
    }

    fn neg(t: &Tensor) -> Tensor {
        t.scale(&-RatFunc::one())
    }
}
