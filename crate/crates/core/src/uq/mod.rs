//! A fragment of `U_q(sl₄)` adapted to `su(2,2)`: simple roots `μ`, `β`, `ν`
//! with `β` the middle node of the A₃ diagram.
//!
//! The negative part is the free algebra on `F_μ, F_ν, F_β` modulo the
//! quantum Serre ideal, reduced degree by degree with exact linear algebra
//! over Q(q). Full elements are straightened to `F · K · E` order.

mod element;
mod free;
mod hopf;
mod serre;
mod star;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use element::{w_embed, w_generator, UqElement, UqMonomial};
pub(crate) use free::multidegrees_of_total;
pub use free::{FreeElement, Word};
pub use hopf::{antipode, coproduct, counit, Tensor};
pub use serre::{
    graded_dimension, graded_dimension_with, ideal_component, prefetch, serre_reduce,
    serre_reduce_with, serre_relations, IdealComponent, SerreConvention,
};
pub use star::{levi_decompose, star_act, to_w_basis, LeviCoordinates, StarGenerator, StarResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UqError {
    #[error("element is not in the span of the w-monomials: {0}")]
    NotInWSpan(String),
    #[error("coefficient {0} is not a Laurent polynomial")]
    NonLaurent(String),
    #[error("{0} does not belong to U_q(su(2) x su(2))")]
    NotLeviGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("PBW basis mismatch in multidegree {0:?}")]
    PbwMismatch([u8; 3]),
}

/// A simple root. The derived order `μ < ν < β` is the letter order used to
/// pick quotient-basis words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Root {
    Mu,
    Nu,
    Beta,
}

impl Root {
    pub const ALL: [Root; 3] = [Root::Mu, Root::Nu, Root::Beta];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Symmetrised Cartan pairing `(αᵢ, αⱼ)` of A₃ with `β` in the middle.
    pub fn pairing(self, other: Root) -> i64 {
        use Root::*;
        match (self, other) {
            (a, b) if a == b => 2,
            (Mu, Nu) | (Nu, Mu) => 0,
            _ => -1,
        }
    }

    pub fn suffix(self) -> char {
        match self {
            Root::Mu => 'm',
            Root::Nu => 'n',
            Root::Beta => 'b',
        }
    }

    fn from_suffix(c: char) -> Option<Root> {
        match c {
            'm' => Some(Root::Mu),
            'n' => Some(Root::Nu),
            'b' => Some(Root::Beta),
            _ => None,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Root::Mu => "mu",
            Root::Nu => "nu",
            Root::Beta => "beta",
        };
        write!(f, "{s}")
    }
}

/// `(α, Σ letters)` for a word of simple roots.
pub(crate) fn pairing_with_weight(a: Root, letters: &[Root]) -> i64 {
    letters.iter().map(|&l| a.pairing(l)).sum()
}

/// One of the generators `E_i`, `F_i`, `K_i^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E(Root),
    F(Root),
    K(Root, i32),
}

impl Generator {
    pub fn to_element(self) -> UqElement {
        match self {
            Generator::E(r) => UqElement::e(r),
            Generator::F(r) => UqElement::f(r),
            Generator::K(r, e) => UqElement::k(r, e),
        }
    }

    pub fn all() -> Vec<Generator> {
        Root::ALL
            .iter()
            .flat_map(|&r| {
                [
                    Generator::E(r),
                    Generator::F(r),
                    Generator::K(r, 1),
                    Generator::K(r, -1),
                ]
            })
            .collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(r) => write!(f, "E{}", r.suffix()),
            Generator::F(r) => write!(f, "F{}", r.suffix()),
            Generator::K(r, 1) => write!(f, "K{}", r.suffix()),
            Generator::K(r, e) => write!(f, "K{}^{e}", r.suffix()),
        }
    }
}

impl FromStr for Generator {
    type Err = UqError;

    /// `Em`, `Fb`, `Kn`, `Km^-1`, ...
    fn from_str(s: &str) -> Result<Self, UqError> {
        let bad = || UqError::UnknownGenerator(s.to_string());
        let t = s.trim();
        let (head, exp) = match t.split_once('^') {
            Some((h, e)) => (h, Some(e.trim().parse::<i32>().map_err(|_| bad())?)),
            None => (t, None),
        };
        let mut chars = head.chars();
        let (Some(kind), Some(suffix), None) = (chars.next(), chars.next(), chars.next()) else {
            return Err(bad());
        };
        let root = Root::from_suffix(suffix).ok_or_else(bad)?;
        match (kind, exp) {
            ('E', None) => Ok(Generator::E(root)),
            ('F', None) => Ok(Generator::F(root)),
            ('K', e) => Ok(Generator::K(root, e.unwrap_or(1))),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_pairing_matches_k_f_relations() {
        // K_ν F_β = q F_β K_ν, K_μ F_β = q F_β K_μ, K_β F_β = q⁻² F_β K_β
        assert_eq!(-Root::Nu.pairing(Root::Beta), 1);
        assert_eq!(-Root::Mu.pairing(Root::Beta), 1);
        assert_eq!(-Root::Beta.pairing(Root::Beta), -2);
        assert_eq!(Root::Mu.pairing(Root::Nu), 0);
    }

    #[test]
    fn generator_parsing() {
        assert_eq!(
            "Km^-1".parse::<Generator>().unwrap(),
            Generator::K(Root::Mu, -1)
        );
        assert_eq!("Fn".parse::<Generator>().unwrap(), Generator::F(Root::Nu));
        assert_eq!("Eb".parse::<Generator>().unwrap(), Generator::E(Root::Beta));
        assert!("Fx".parse::<Generator>().is_err());
        assert!("F".parse::<Generator>().is_err());
        for g in Generator::all() {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
    }
}
