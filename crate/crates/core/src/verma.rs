//! Verma modules over the uq engine and the singular-vector test for the
//! intertwiner `u₀⁺ = w₂ − q⁻¹ w₁F_μ`.

use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::aq::AqElement;
use crate::par;
use crate::ring::{vanishes_at_root_of_unity, RatFunc};
use crate::uq::{
    ideal_component, w_embed, FreeElement, Generator, Root, SerreConvention, UqElement, Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VermaError {
    #[error("weight {0} is not of the form (1, 0, x)")]
    NotChiOne(Weight),
    #[error("coefficient {0} is not a Laurent polynomial")]
    NonLaurent(String),
}

/// Exponents `(m, n, x)` of the character on `K_μ, K_ν, K_β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight {
    pub m: i64,
    pub n: i64,
    pub x: i64,
}

impl Weight {
    pub fn new(m: i64, n: i64, x: i64) -> Self {
        Weight { m, n, x }
    }

    /// The weights `(1, 0, x)` on which the intertwiner is defined.
    pub fn chi_one(x: i64) -> Self {
        Weight::new(1, 0, x)
    }

    fn get(&self, r: Root) -> i64 {
        match r {
            Root::Mu => self.m,
            Root::Nu => self.n,
            Root::Beta => self.x,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.n, self.x)
    }
}

/// How a character `χ(K_i) = q^{λᵢ}` acts on the highest weight vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `K_i v = q^{−λᵢ} v`: the induced module twists by `χ⁻¹`.
    #[default]
    Twisted,
    /// `K_i v = q^{λᵢ} v`.
    Plain,
}

impl Convention {
    fn k_exponent(self, w: &Weight, r: Root) -> i64 {
        match self {
            Convention::Twisted => -w.get(r),
            Convention::Plain => w.get(r),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Twisted => "twisted",
            Convention::Plain => "plain",
        })
    }
}

impl std::str::FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "twisted" => Ok(Convention::Twisted),
            "plain" => Ok(Convention::Plain),
            _ => Err(format!(
                "unknown convention `{s}`; expected twisted or plain"
            )),
        }
    }
}

/// `Σ c_w F_w v_λ`, on quotient-basis words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VermaVector(#[serde(serialize_with = "crate::ser::display")] pub FreeElement);

impl VermaVector {
    pub fn highest() -> Self {
        VermaVector(FreeElement::word(Word::empty()))
    }

    pub fn from_uq(x: &UqElement) -> Option<Self> {
        x.to_free()
            .map(|f| VermaVector(crate::uq::serre_reduce(&f)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &RatFunc> {
        self.0.terms().map(|(_, c)| c)
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "({})v", self.0)
        }
    }
}

/// `u · v_λ`: straighten, let `E` kill `v_λ`, evaluate `K` through `λ`.
pub fn act_element(u: &UqElement, v: &VermaVector, w: &Weight, conv: Convention) -> VermaVector {
    let x = u * &UqElement::from_free(&v.0);
    let mut out = FreeElement::zero();
    for (m, c) in x.terms() {
        if !m.e.is_empty() {
            continue;
        }
        let exp: i64 = Root::ALL
            .iter()
            .map(|&r| m.k[r.index()] as i64 * conv.k_exponent(w, r))
            .sum();
        out = &out + &FreeElement::term(m.f.clone(), c.shift(exp));
    }
    VermaVector(out)
}

pub fn act(g: Generator, v: &VermaVector, w: &Weight, conv: Convention) -> VermaVector {
    act_element(&g.to_element(), v, w, conv)
}

/// `u₀⁺ = w₂ − q⁻¹ w₁F_μ`.
pub fn u0_plus() -> UqElement {
    u0_with(2, Root::Mu)
}

/// `u₀⁻ = w₃ − q⁻¹ w₁F_ν`, the mirror under `μ ↔ ν`.
pub fn u0_minus() -> UqElement {
    u0_with(3, Root::Nu)
}

fn u0_with(i: u8, r: Root) -> UqElement {
    let wi = w_embed(&AqElement::w(i));
    let w1f = &w_embed(&AqElement::w(1)) * &UqElement::f(r);
    &wi - &w1f.scale(&RatFunc::q_pow(-1))
}

/// Raising operators applied to `u₀ v_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularValues {
    #[serde(rename = "E_mu")]
    pub e_mu: VermaVector,
    #[serde(rename = "E_nu")]
    pub e_nu: VermaVector,
    #[serde(rename = "E_beta")]
    pub e_beta: VermaVector,
    #[serde(rename = "E_mu_squared")]
    pub e_mu_squared: VermaVector,
}

pub fn singular_test(u0: &UqElement, w: &Weight, conv: Convention) -> SingularValues {
    let v = act_element(u0, &VermaVector::highest(), w, conv);
    let e = |r: Root, v: &VermaVector| act(Generator::E(r), v, w, conv);
    let e_mu = e(Root::Mu, &v);
    SingularValues {
        e_mu_squared: e(Root::Mu, &e_mu),
        e_mu,
        e_nu: e(Root::Nu, &v),
        e_beta: e(Root::Beta, &v),
    }
}

/// Orders `m ≥ 3` at whose primitive roots every coefficient vanishes.
///
/// `q = ±1` (orders 1 and 2) is excluded: there the algebra degenerates and
/// `q − q⁻¹` is not invertible.
pub fn root_of_unity_orders(v: &VermaVector, max_order: u64) -> Result<Vec<u64>, VermaError> {
    let coeffs = v
        .coefficients()
        .map(|c| {
            c.to_laurent()
                .ok_or_else(|| VermaError::NonLaurent(c.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((3..=max_order)
        .filter(|&m| {
            coeffs
                .iter()
                .all(|c| vanishes_at_root_of_unity(c, m as u32))
        })
        .collect())
}

/// One scanned value of `x` for the weight `(1, 0, x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub x: i64,
    #[serde(flatten)]
    pub values: SingularValues,
    /// `E_β(u₀v)` vanishes identically in `q`.
    pub generic_vanishing: bool,
    pub root_of_unity_orders: Vec<u64>,
    pub minimal_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularReport {
    pub convention: Convention,
    pub x: i64,
    #[serde(rename = "E_mu")]
    pub e_mu: VermaVector,
    #[serde(rename = "E_nu")]
    pub e_nu: VermaVector,
    #[serde(rename = "E_beta")]
    pub e_beta: VermaVector,
    #[serde(rename = "E_mu_squared")]
    pub e_mu_squared: VermaVector,
    pub scan: [i64; 2],
    pub vanishing_x: Vec<i64>,
    pub root_of_unity_orders: Vec<u64>,
    pub rows: Vec<ScanRow>,
}

fn max_order_for(x: i64) -> u64 {
    24.max((2 * x - 4).unsigned_abs())
}

pub fn scan_row(u0: &UqElement, x: i64, conv: Convention) -> Result<ScanRow, VermaError> {
    let values = singular_test(u0, &Weight::chi_one(x), conv);
    let generic_vanishing = values.e_beta.is_zero();
    let orders = if generic_vanishing {
        Vec::new()
    } else {
        root_of_unity_orders(&values.e_beta, max_order_for(x))?
    };
    Ok(ScanRow {
        x,
        generic_vanishing,
        minimal_order: orders.first().copied(),
        root_of_unity_orders: orders,
        values,
    })
}

/// Singular-vector test for `u₀⁺` at `x`, plus a scan over `range`.
pub fn singular_report(
    x: i64,
    range: RangeInclusive<i64>,
    conv: Convention,
) -> Result<SingularReport, VermaError> {
    let u0 = u0_plus();
    let xs: Vec<i64> = range.clone().collect();
    let rows = par::map(&xs, |&x| scan_row(&u0, x, conv))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let here = match rows.iter().find(|r| r.x == x) {
        Some(r) => r.clone(),
        None => scan_row(&u0, x, conv)?,
    };
    Ok(SingularReport {
        convention: conv,
        x,
        e_mu: here.values.e_mu,
        e_nu: here.values.e_nu,
        e_beta: here.values.e_beta,
        e_mu_squared: here.values.e_mu_squared,
        scan: [*range.start(), *range.end()],
        vanishing_x: rows
            .iter()
            .filter(|r| r.generic_vanishing)
            .map(|r| r.x)
            .collect(),
        root_of_unity_orders: here.root_of_unity_orders,
        rows,
    })
}

/// `(1, 0, x) ↦ (0, 1, x + 1)`.
pub fn target_weight(w: &Weight) -> Result<Weight, VermaError> {
    if w.m != 1 || w.n != 0 {
        return Err(VermaError::NotChiOne(*w));
    }
    Ok(Weight::new(0, 1, w.x + 1))
}

/// Checks, for every quotient-basis vector `F_w v` of degree at most
/// `max_degree`, that `K_i` acts by the weight predicted from the letters
/// of `w`.
pub fn weight_compatibility(max_degree: u8, w: &Weight, conv: Convention) -> bool {
    (0..=max_degree)
        .flat_map(crate::uq::multidegrees_of_total)
        .flat_map(|md| ideal_component(SerreConvention::Standard, md).standard_words())
        .all(|word| {
            let v = VermaVector(FreeElement::word(word.clone()));
            Root::ALL.iter().all(|&r| {
                let exp = conv.k_exponent(w, r) - crate::uq::pairing_with_weight(r, &word.0);
                act(Generator::K(r, 1), &v, w, conv)
                    == VermaVector(FreeElement::term(word.clone(), RatFunc::q_pow(exp)))
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q_int_signed;

    fn fv(letters: &[Root]) -> VermaVector {
        VermaVector(FreeElement::word(Word(letters.to_vec())))
    }

    #[test]
    fn act_examples() {
        let w = Weight::new(0, 0, 3);
        let t = Convention::Twisted;
        assert!(act(Generator::E(Root::Beta), &VermaVector::highest(), &w, t).is_zero());
        let r = act(Generator::E(Root::Beta), &fv(&[Root::Beta]), &w, t);
        assert_eq!(
            r,
            VermaVector(FreeElement::term(Word::empty(), q_int_signed(-3).into()))
        );
        let r = act(Generator::K(Root::Beta, 1), &fv(&[Root::Mu]), &w, t);
        assert_eq!(
            r,
            VermaVector(FreeElement::term(
                Word(vec![Root::Mu]),
                RatFunc::q_pow(1 - 3)
            ))
        );
    }

    #[test]
    fn u0_plus_expansion() {
        use Root::*;
        // w₂ − q⁻¹ w₁F_μ = F_μF_β − (q + q⁻¹) F_βF_μ
        let f = UqElement::f;
        let two = RatFunc::from(q_int_signed(2));
        let expected = &(&f(Mu) * &f(Beta)) - &(&f(Beta) * &f(Mu)).scale(&two);
        assert_eq!(u0_plus(), expected);
    }

    #[test]
    fn e_beta_is_a_q_integer() {
        for x in 0..=6 {
            let s = singular_test(&u0_plus(), &Weight::chi_one(x), Convention::Twisted);
            let expected = FreeElement::term(Word(vec![Root::Mu]), q_int_signed(x - 2).into());
            assert_eq!(s.e_beta.0, expected, "x = {x}");
            assert!(s.e_nu.is_zero());
            assert!(s.e_mu_squared.is_zero());
        }
    }

    #[test]
    fn plain_convention_shifts_the_condition() {
        let s = singular_test(&u0_plus(), &Weight::chi_one(2), Convention::Plain);
        assert!(!s.e_beta.is_zero());
    }

    #[test]
    fn report_scan() {
        let r = singular_report(3, 0..=6, Convention::Twisted).unwrap();
        assert_eq!(r.vanishing_x, vec![2]);
        let orders: Vec<Vec<u64>> = r
            .rows
            .iter()
            .map(|row| row.root_of_unity_orders.clone())
            .collect();
        assert_eq!(orders[0], vec![4]);
        assert_eq!(orders[5], vec![3, 6]);
        assert_eq!(orders[6], vec![4, 8]);
    }

    #[test]
    fn target_weights() {
        assert_eq!(
            target_weight(&Weight::chi_one(2)).unwrap(),
            Weight::new(0, 1, 3)
        );
        assert_eq!(
            target_weight(&Weight::chi_one(0)).unwrap(),
            Weight::new(0, 1, 1)
        );
        assert!(target_weight(&Weight::new(0, 0, 1)).is_err());
    }

    #[test]
    fn weights_agree() {
        assert!(weight_compatibility(
            3,
            &Weight::new(1, 0, 4),
            Convention::Twisted
        ));
        assert!(weight_compatibility(
            2,
            &Weight::new(-2, 3, 1),
            Convention::Plain
        ));
    }
}
