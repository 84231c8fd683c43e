use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::Serialize;

use crate::par;
use crate::ring::{q_int_signed, RatFunc};

use super::free::{multidegrees_of_total, FreeElement, Word};
use super::Root;

/// Sign of the middle term in the cubic Serre relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SerreConvention {
    /// `F_i²F_j − (q+q⁻¹) F_iF_jF_i + F_jF_i² = 0`.
    Standard,
    /// `F_i²F_j + (q+q⁻¹) F_iF_jF_i + F_jF_i² = 0`. Kept only so the choice
    /// of sign stays testable.
    Flipped,
}

fn cubic(i: Root, j: Root, convention: SerreConvention) -> FreeElement {
    let two = q_int_signed(2);
    let middle = match convention {
        SerreConvention::Standard => -two,
        SerreConvention::Flipped => two,
    };
    FreeElement::from_terms([
        (Word(vec![i, i, j]), RatFunc::one()),
        (Word(vec![i, j, i]), middle.into()),
        (Word(vec![j, i, i]), RatFunc::one()),
    ])
}

/// The generating relations of the ideal: four cubic relations for the
/// adjacent pairs `(ν,β)`, `(μ,β)`, `(β,ν)`, `(β,μ)` and the commutation
/// `F_νF_μ = F_μF_ν` for the non-adjacent pair.
pub fn serre_relations(convention: SerreConvention) -> Vec<FreeElement> {
    use Root::*;
    vec![
        cubic(Nu, Beta, convention),
        cubic(Mu, Beta, convention),
        cubic(Beta, Nu, convention),
        cubic(Beta, Mu, convention),
        FreeElement::from_terms([
            (Word(vec![Nu, Mu]), RatFunc::one()),
            (Word(vec![Mu, Nu]), -RatFunc::one()),
        ]),
    ]
}

/// Echelon basis of the ideal inside one multidegree component of the free
/// algebra. Each row is keyed by its largest word and has coefficient one
/// there; the words that are never a pivot form the quotient basis.
#[derive(Debug)]
pub struct IdealComponent {
    multidegree: [u8; 3],
    convention: SerreConvention,
    rows: BTreeMap<Word, FreeElement>,
    n_words: usize,
}

impl IdealComponent {
    fn build(convention: SerreConvention, md: [u8; 3]) -> Self {
        let mut comp = IdealComponent {
            multidegree: md,
            convention,
            rows: BTreeMap::new(),
            n_words: Word::all_with_multidegree(md).len(),
        };
        for rel in serre_relations(convention) {
            let rmd = rel.terms().next().unwrap().0.multidegree();
            if (0..3).any(|i| rmd[i] > md[i]) {
                continue;
            }
            let rest = [md[0] - rmd[0], md[1] - rmd[1], md[2] - rmd[2]];
            for x in Word::all_with_multidegree(rest) {
                for split in 0..=x.len() {
                    let u = FreeElement::word(Word(x.0[..split].to_vec()));
                    let v = FreeElement::word(Word(x.0[split..].to_vec()));
                    comp.insert(&(&u * &rel) * &v);
                }
            }
        }
        comp
    }

    fn insert(&mut self, row: FreeElement) {
        let red = self.reduce(&row);
        let Some((lead, c)) = red.terms().next_back() else {
            return;
        };
        let lead = lead.clone();
        let inv = c.inv().expect("nonzero leading coefficient");
        self.rows.insert(lead, red.scale(&inv));
    }

    /// Coordinates of `x` on the quotient basis. `x` must lie in this
    /// component's multidegree.
    pub fn reduce(&self, x: &FreeElement) -> FreeElement {
        let mut x = x.clone();
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
            if let Some(row) = self.rows.get(&w) {
                let c = x.coeff(&w);
                x.sub_scaled(&c, row);
            }
            cursor = Some(w);
        }
        x
    }

    pub fn multidegree(&self) -> [u8; 3] {
        self.multidegree
    }

    pub fn convention(&self) -> SerreConvention {
        self.convention
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn quotient_dimension(&self) -> usize {
        self.n_words - self.rows.len()
    }

    /// Quotient-basis words: for each coset the lexicographically earliest
    /// representative.
    pub fn standard_words(&self) -> Vec<Word> {
        Word::all_with_multidegree(self.multidegree)
            .into_iter()
            .filter(|w| !self.rows.contains_key(w))
            .collect()
    }
}

type ComponentCache = HashMap<(SerreConvention, [u8; 3]), Arc<IdealComponent>>;

static COMPONENTS: Lazy<RwLock<ComponentCache>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// The (cached) ideal component for one multidegree.
pub fn ideal_component(convention: SerreConvention, md: [u8; 3]) -> Arc<IdealComponent> {
    if let Some(hit) = COMPONENTS.read().get(&(convention, md)) {
        return hit.clone();
    }
    let built = Arc::new(IdealComponent::build(convention, md));
    COMPONENTS
        .write()
        .entry((convention, md))
        .or_insert(built)
        .clone()
}

/// Builds every missing component in `mds`, in parallel when enabled.
pub fn prefetch(convention: SerreConvention, mds: &[[u8; 3]]) {
    let missing: Vec<[u8; 3]> = {
        let cache = COMPONENTS.read();
        mds.iter()
            .filter(|md| !cache.contains_key(&(convention, **md)))
            .copied()
            .collect()
    };
    let built = par::map(&missing, |md| {
        Arc::new(IdealComponent::build(convention, *md))
    });
    let mut cache = COMPONENTS.write();
    for (md, comp) in missing.into_iter().zip(built) {
        cache.entry((convention, md)).or_insert(comp);
    }
}

/// Reduces modulo the Serre ideal (standard convention): coordinates on the
/// quotient basis, zero exactly when `x` lies in the ideal.
pub fn serre_reduce(x: &FreeElement) -> FreeElement {
    serre_reduce_with(SerreConvention::Standard, x)
}

pub fn serre_reduce_with(convention: SerreConvention, x: &FreeElement) -> FreeElement {
    let mut out = FreeElement::zero();
    for (md, part) in x.components() {
        let red = ideal_component(convention, md).reduce(&part);
        for (w, c) in red.terms {
            out.add_term(w, c);
        }
    }
    out
}

static WORD_CACHE: Lazy<RwLock<HashMap<Word, FreeElement>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Reduced form of a single word under the standard convention.
pub(crate) fn reduce_word(w: &Word) -> FreeElement {
    if let Some(hit) = WORD_CACHE.read().get(w) {
        return hit.clone();
    }
    let out = ideal_component(SerreConvention::Standard, w.multidegree())
        .reduce(&FreeElement::word(w.clone()));
    WORD_CACHE.write().insert(w.clone(), out.clone());
    out
}

/// Dimension of the total-degree-`d` component of the quotient.
pub fn graded_dimension(d: u8) -> usize {
    graded_dimension_with(SerreConvention::Standard, d)
}

pub fn graded_dimension_with(convention: SerreConvention, d: u8) -> usize {
    let mds = multidegrees_of_total(d);
    prefetch(convention, &mds);
    mds.iter()
        .map(|md| ideal_component(convention, *md).quotient_dimension())
        .sum()
}
