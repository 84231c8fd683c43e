//! The action of the Levi part `U_q(su(2) ⊕ su(2))` on the `w`-subalgebra.
//!
//! `k ⋆ w = Σ k₍₂₎ w S(k₍₁₎)`, read in the generalized Verma quotient:
//! `E`-tails vanish, `K`-tails act by one, and the Levi `F_μ`, `F_ν` tails
//! are dropped after rewriting on the basis `w^γ F_μ^i F_ν^j`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::Serialize;

use crate::aq::AqElement;
use crate::ring::{MultiIndex, RatFunc};

use super::element::{w_embed, w_monomial, UqElement};
use super::free::{FreeElement, Word};
use super::hopf::{antipode, coproduct};
use super::serre::{ideal_component, SerreConvention};
use super::{Generator, Root, UqError};

/// A generator of the Levi factor: `E`, `F` or `K^±1` for `μ` or `ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StarGenerator(Generator);

impl StarGenerator {
    pub fn new(g: Generator) -> Result<Self, UqError> {
        let root = match g {
            Generator::E(r) | Generator::F(r) => r,
            Generator::K(r, e) if e == 1 || e == -1 => r,
            Generator::K(..) => return Err(UqError::NotLeviGenerator(g.to_string())),
        };
        if root == Root::Beta {
            return Err(UqError::NotLeviGenerator(g.to_string()));
        }
        Ok(StarGenerator(g))
    }

    pub fn generator(self) -> Generator {
        self.0
    }

    /// All eight Levi generators.
    pub fn all() -> Vec<StarGenerator> {
        Generator::all()
            .into_iter()
            .filter_map(|g| StarGenerator::new(g).ok())
            .collect()
    }
}

impl std::fmt::Display for StarGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarResult {
    /// True when the unprojected value already lies in the `w`-span.
    pub exact: bool,
    #[serde(serialize_with = "crate::ser::display")]
    pub value: AqElement,
}

/// Coordinates on `{w^γ F_μ^i F_ν^j}`, keyed by `(γ, i, j)`.
pub type LeviCoordinates = BTreeMap<(MultiIndex, u32, u32), RatFunc>;

/// Echelon form of the PBW-type basis of one multidegree, with each row
/// remembering which combination of basis vectors produced it.
struct LeviBasis {
    labels: Vec<(MultiIndex, u32, u32)>,
    rows: BTreeMap<Word, (FreeElement, Vec<RatFunc>)>,
}

impl LeviBasis {
    fn build(md: [u8; 3]) -> Result<Self, UqError> {
        let [a, b, c] = md.map(u32::from);
        let mut labels = Vec::new();
        for g4 in 0..=a.min(b).min(c) {
            for g2 in 0..=(a - g4).min(c - g4) {
                for g3 in 0..=(b - g4).min(c - g4 - g2) {
                    let g1 = c - g4 - g2 - g3;
                    labels.push((MultiIndex::new(g1, g2, g3, g4), a - g4 - g2, b - g4 - g3));
                }
            }
        }
        labels.sort();
        let n = labels.len();
        if n != ideal_component(SerreConvention::Standard, md).quotient_dimension() {
            return Err(UqError::PbwMismatch(md));
        }
        let mut basis = LeviBasis {
            labels,
            rows: BTreeMap::new(),
        };
        for idx in 0..n {
            let (g, i, j) = basis.labels[idx];
            let mut v = w_monomial(g);
            v = &v * &UqElement::f(Root::Mu).pow(i);
            v = &v * &UqElement::f(Root::Nu).pow(j);
            let v = v.to_free().expect("products of F only");
            let mut combo = vec![RatFunc::zero(); n];
            combo[idx] = RatFunc::one();
            let (red, combo) = basis.reduce(v, combo);
            let Some((lead, lc)) = red.terms().next_back() else {
                return Err(UqError::PbwMismatch(md));
            };
            let lead = lead.clone();
            let inv = lc.inv().expect("nonzero pivot");
            let combo = combo.iter().map(|x| x * &inv).collect();
            basis.rows.insert(lead, (red.scale(&inv), combo));
        }
        Ok(basis)
    }

    fn reduce(&self, mut x: FreeElement, mut combo: Vec<RatFunc>) -> (FreeElement, Vec<RatFunc>) {
        let mut cursor: Option<Word> = None;
        loop {
            let next = match &cursor {
                None => x.terms.keys().next_back().cloned(),
                Some(c) => x
                    .terms
                    .range(..c.clone())
                    .next_back()
                    .map(|(w, _)| w.clone()),
            };
            let Some(w) = next else { break };
            if let Some((row, rc)) = self.rows.get(&w) {
                let c = x.coeff(&w);
                x.sub_scaled(&c, row);
                for (slot, r) in combo.iter_mut().zip(rc) {
                    *slot -= &(&c * r);
                }
            }
            cursor = Some(w);
        }
        (x, combo)
    }

    /// Coordinates of a reduced `x` of this multidegree.
    fn solve(&self, x: &FreeElement) -> LeviCoordinates {
        let zero = vec![RatFunc::zero(); self.labels.len()];
        let (rest, combo) = self.reduce(x.clone(), zero);
        debug_assert!(rest.is_zero(), "basis spans the component");
        self.labels
            .iter()
            .zip(combo)
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (*l, -c))
            .collect()
    }
}

static LEVI: Lazy<RwLock<HashMap<[u8; 3], Arc<LeviBasis>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn levi_basis(md: [u8; 3]) -> Result<Arc<LeviBasis>, UqError> {
    if let Some(hit) = LEVI.read().get(&md) {
        return Ok(hit.clone());
    }
    let built = Arc::new(LeviBasis::build(md)?);
    Ok(LEVI.write().entry(md).or_insert(built).clone())
}

/// Rewrites an element of the negative part on `{w^γ F_μ^i F_ν^j}`.
pub fn levi_decompose(x: &FreeElement) -> Result<LeviCoordinates, UqError> {
    let reduced = crate::uq::serre_reduce(x);
    let mut out = LeviCoordinates::new();
    for (md, part) in reduced.components() {
        out.extend(levi_basis(md)?.solve(&part));
    }
    Ok(out)
}

fn w_part(coords: &LeviCoordinates) -> Result<AqElement, UqError> {
    let mut out = AqElement::zero();
    for ((g, i, j), c) in coords {
        if *i == 0 && *j == 0 {
            let lc = c
                .to_laurent()
                .ok_or_else(|| UqError::NonLaurent(c.to_string()))?;
            out = &out + &AqElement::term(*g, lc);
        }
    }
    Ok(out)
}

/// The preimage under [`w_embed`] of an element lying in the `w`-span.
pub fn to_w_basis(x: &UqElement) -> Result<AqElement, UqError> {
    let free = x
        .to_free()
        .ok_or_else(|| UqError::NotInWSpan(x.to_string()))?;
    let coords = levi_decompose(&free)?;
    if coords.keys().any(|(_, i, j)| *i != 0 || *j != 0) {
        return Err(UqError::NotInWSpan(x.to_string()));
    }
    w_part(&coords)
}

/// Image in the generalized Verma quotient: drops `E`-tails, sets `K` to one.
fn verma_projection(x: &UqElement) -> FreeElement {
    let mut out = FreeElement::zero();
    for (m, c) in x.terms() {
        if m.e.is_empty() {
            out.add_term(m.f.clone(), c.clone());
        }
    }
    out
}

/// `k ⋆ w`.
pub fn star_act(k: StarGenerator, w: &AqElement) -> Result<StarResult, UqError> {
    let image = w_embed(w);
    let delta = coproduct(&k.generator().to_element());
    let mut value = UqElement::zero();
    for (a, b, c) in delta.terms() {
        let a = UqElement::term(a.clone(), RatFunc::one());
        let b = UqElement::term(b.clone(), RatFunc::one());
        value = &value + &(&(&b * &image) * &antipode(&a)).scale(c);
    }
    if let Ok(exact) = to_w_basis(&value) {
        return Ok(StarResult {
            exact: true,
            value: exact,
        });
    }
    let coords = levi_decompose(&verma_projection(&value))?;
    Ok(StarResult {
        exact: false,
        value: w_part(&coords)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::LaurentPoly;

    fn w(i: u8) -> AqElement {
        AqElement::w(i)
    }
    fn star(g: &str, x: &AqElement) -> AqElement {
        star_act(StarGenerator::new(g.parse().unwrap()).unwrap(), x)
            .unwrap()
            .value
    }

    #[test]
    fn basic_table() {
        assert_eq!(star("Fm", &w(1)), w(2));
        assert_eq!(star("Fm", &w(3)), w(4));
        assert!(star("Fm", &w(2)).is_zero());
        assert!(star("Fm", &w(4)).is_zero());
        assert_eq!(star("Em", &w(2)), w(1));
        assert_eq!(star("Em", &w(4)), w(3));
        assert!(star("Em", &w(1)).is_zero());
        assert!(star("Em", &w(3)).is_zero());
        assert_eq!(star("Km", &w(1)), w(1).scale(&LaurentPoly::q()));
        assert_eq!(star("Km", &w(2)), w(2).scale(&LaurentPoly::q_pow(-1)));
    }

    #[test]
    fn nu_mirror() {
        assert_eq!(star("Fn", &w(1)), w(3));
        assert_eq!(star("Fn", &w(2)), w(4));
        assert_eq!(star("En", &w(3)), w(1));
    }

    #[test]
    fn beta_is_not_levi() {
        assert!(StarGenerator::new(Generator::F(Root::Beta)).is_err());
        assert_eq!(StarGenerator::all().len(), 8);
    }

    #[test]
    fn decomposition_round_trip() {
        // F_μ w₁ = w₂ + q w₁ F_μ
        let x = (&UqElement::f(Root::Mu) * &UqElement::f(Root::Beta))
            .to_free()
            .unwrap();
        let coords = levi_decompose(&x).unwrap();
        assert_eq!(coords.len(), 2);
        assert_eq!(coords[&(MultiIndex::new(0, 1, 0, 0), 0, 0)], RatFunc::one());
        assert_eq!(
            coords[&(MultiIndex::new(1, 0, 0, 0), 1, 0)],
            RatFunc::q_pow(1)
        );
    }

    #[test]
    fn to_w_basis_inverts_embedding() {
        let a = &(&w(1) * &w(4)) + &w(3).scale(&LaurentPoly::q_pow(2));
        assert_eq!(to_w_basis(&w_embed(&a)).unwrap(), a);
        assert!(to_w_basis(&UqElement::f(Root::Mu)).is_err());
    }
}
