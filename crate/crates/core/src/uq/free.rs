use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::{owned_binops, RatFunc};

use super::Root;

/// A word in three letters, one per simple root. Ordered lexicographically
/// with `μ < ν < β`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Root>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(r: Root) -> Self {
        Word(vec![r])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Letter counts `(#μ, #ν, #β)`.
    pub fn multidegree(&self) -> [u8; 3] {
        let mut m = [0u8; 3];
        for r in &self.0 {
            m[r.index()] += 1;
        }
        m
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Every word with the given letter counts, ascending.
    pub fn all_with_multidegree(md: [u8; 3]) -> Vec<Word> {
        fn go(rem: [u8; 3], prefix: &mut Vec<Root>, out: &mut Vec<Word>) {
            if rem == [0, 0, 0] {
                out.push(Word(prefix.clone()));
                return;
            }
            for r in Root::ALL {
                if rem[r.index()] > 0 {
                    let mut next = rem;
                    next[r.index()] -= 1;
                    prefix.push(r);
                    go(next, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(md, &mut Vec::new(), &mut out);
        out
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, kind: char) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let r = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == r {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{kind}{}", r.suffix())?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// All multidegrees `(a, b, c)` with `a + b + c = d`.
pub(crate) fn multidegrees_of_total(d: u8) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// A linear combination of words with coefficients in Q(q).
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FreeElement {
    pub(crate) terms: BTreeMap<Word, RatFunc>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, RatFunc::one())
    }

    pub fn term(w: Word, c: RatFunc) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, RatFunc)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    pub(crate) fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    /// Splits into homogeneous components by multidegree.
    pub fn components(&self) -> BTreeMap<[u8; 3], FreeElement> {
        let mut out: BTreeMap<[u8; 3], FreeElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.multidegree())
                .or_default()
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// `self − c · other`, in place.
    pub(crate) fn sub_scaled(&mut self, c: &RatFunc, other: &FreeElement) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), -(c * v));
        }
    }
}

impl<'a> Add<&'a FreeElement> for &'a FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a FreeElement> for &'a FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FreeElement> for &'a FreeElement {
    type Output = FreeElement;
    /// Concatenation product.
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.concat(b), c * d);
            }
        }
        out
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        FreeElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), -c)))
    }
}

owned_binops!(FreeElement);

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<&Word> = self.terms.keys().collect();
        crate::aq::fmt_sum(
            f,
            self.terms.iter().map(|(w, c)| (w.is_empty(), c)),
            |f, i| keys[i].fmt_with(f, 'F'),
        )
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(Word::all_with_multidegree([1, 1, 1]).len(), 6);
        assert_eq!(Word::all_with_multidegree([2, 2, 2]).len(), 90);
        assert_eq!(Word::all_with_multidegree([0, 0, 0]), vec![Word::empty()]);
        let ws = Word::all_with_multidegree([2, 0, 1]);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn letter_order() {
        assert!(Word(vec![Root::Mu, Root::Beta]) < Word(vec![Root::Beta, Root::Mu]));
        assert!(Root::Mu < Root::Nu && Root::Nu < Root::Beta);
    }
}
