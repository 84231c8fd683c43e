//! Named verification suites with deterministic, machine-readable reports.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::aq::{
    center_element, commutator, normal_order, normal_order_rewriting, AqElement, AqWord, Strategy,
};
use crate::dirac::{
    dirac_minus, dirac_plus, factorization_check, first_order_structure, intertwine_check, Which,
};
use crate::ring::{q_int_signed, q_minus_qinv, LaurentPoly, MultiIndex, RatFunc};
use crate::transform::{
    right_dual_bruteforce, right_dual_closed, verify_dual, wave_operator, DualFunctional, DualGen,
};
use crate::uq::{
    graded_dimension, serre_reduce_with, star_act, w_embed, FreeElement, Root, SerreConvention,
    StarGenerator, UqElement, Word,
};
use crate::verma::{singular_report, u0_plus, Convention};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    Unknown(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    AqRelations,
    AqPowerIdentity,
    SerreOracle,
    Dims,
    StarTable,
    RecordedIdentities,
    DualClosedForms,
    Box,
    DiracFactorization,
    DiracIntertwine,
    SingularVector,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::AqRelations,
        Suite::AqPowerIdentity,
        Suite::SerreOracle,
        Suite::Dims,
        Suite::StarTable,
        Suite::RecordedIdentities,
        Suite::DualClosedForms,
        Suite::Box,
        Suite::DiracFactorization,
        Suite::DiracIntertwine,
        Suite::SingularVector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AqRelations => "aq-relations",
            Suite::AqPowerIdentity => "aq-power-identity",
            Suite::SerreOracle => "serre-oracle",
            Suite::Dims => "dims",
            Suite::StarTable => "star-table",
            Suite::RecordedIdentities => "recorded-identities",
            Suite::DualClosedForms => "dual-closed-forms",
            Suite::Box => "box",
            Suite::DiracFactorization => "dirac-factorization",
            Suite::DiracIntertwine => "dirac-intertwine",
            Suite::SingularVector => "singular-vector",
        }
    }

    /// The bound used when none is given; `None` for suites without one.
    pub fn default_degree(self) -> Option<u32> {
        match self {
            Suite::AqPowerIdentity => Some(8),
            Suite::Dims | Suite::DualClosedForms | Suite::Box => Some(6),
            Suite::DiracFactorization => Some(5),
            Suite::DiracIntertwine => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;
    fn from_str(s: &str) -> Result<Self, SuiteError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::Unknown(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Witness or computed value; empty when there is nothing to add.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite {}", self.suite)?;
        if let Some(d) = self.degree {
            write!(f, " (degree {d})")?;
        }
        writeln!(f, ": {}", if self.passed { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, passed: bool, detail: impl fmt::Display) {
        self.0.push(Check {
            name: name.into(),
            passed,
            detail: detail.to_string(),
        });
    }

    /// Records that `value` is zero, showing it when it is not.
    fn zero<T: fmt::Display>(&mut self, name: impl Into<String>, is_zero: bool, value: &T) {
        let detail = if is_zero {
            String::new()
        } else {
            value.to_string()
        };
        self.add(name, is_zero, detail);
    }
}

/// Runs one suite. `degree` overrides the suite's default bound.
pub fn run_suite(suite: Suite, degree: Option<u32>) -> Report {
    let degree = degree
        .or(suite.default_degree())
        .filter(|_| suite.default_degree().is_some());
    let mut c = Checks(Vec::new());
    match suite {
        Suite::AqRelations => aq_relations(&mut c),
        Suite::AqPowerIdentity => aq_power_identity(&mut c, degree.unwrap()),
        Suite::SerreOracle => serre_oracle(&mut c),
        Suite::Dims => dims(&mut c, degree.unwrap()),
        Suite::StarTable => star_table(&mut c),
        Suite::RecordedIdentities => recorded_identities(&mut c),
        Suite::DualClosedForms => dual_closed_forms(&mut c, degree.unwrap()),
        Suite::Box => box_suite(&mut c, degree.unwrap()),
        Suite::DiracFactorization => dirac_factorization(&mut c, degree.unwrap()),
        Suite::DiracIntertwine => dirac_intertwine(&mut c, degree.unwrap()),
        Suite::SingularVector => singular_vector(&mut c),
    }
    Report {
        suite: suite.name().to_string(),
        degree,
        passed: c.0.iter().all(|x| x.passed),
        checks: c.0,
    }
}

fn w(i: u8) -> AqElement {
    AqElement::w(i)
}

fn qp(k: i64) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

/// The six defining relations as `lhs − rhs`, written with the products in
/// the order they are displayed.
fn aq_relation_list() -> Vec<(&'static str, AqElement)> {
    let q = LaurentPoly::q();
    vec![
        (
            "w1w2 = q w2w1",
            &(&w(1) * &w(2)) - &(&w(2) * &w(1)).scale(&q),
        ),
        (
            "w1w3 = q w3w1",
            &(&w(1) * &w(3)) - &(&w(3) * &w(1)).scale(&q),
        ),
        (
            "w3w4 = q w4w3",
            &(&w(3) * &w(4)) - &(&w(4) * &w(3)).scale(&q),
        ),
        (
            "w2w4 = q w4w2",
            &(&w(2) * &w(4)) - &(&w(4) * &w(2)).scale(&q),
        ),
        ("w2w3 = w3w2", commutator(&w(2), &w(3))),
        (
            "w1w4 - w4w1 = (q - q^-1) w2w3",
            &commutator(&w(1), &w(4)) - &(&w(2) * &w(3)).scale(&q_minus_qinv()),
        ),
    ]
}

fn aq_relations(c: &mut Checks) {
    for (name, r) in aq_relation_list() {
        c.zero(name, r.is_zero(), &r);
    }
    let omega = center_element();
    c.add(
        "center element is w1*w4 - q*w2*w3",
        omega.to_string() == "(-q)*w2*w3 + w1*w4",
        &omega,
    );
    for i in 1..=4 {
        let k = commutator(&omega, &w(i));
        c.zero(format!("[center, w{i}] = 0"), k.is_zero(), &k);
    }
    let words = AqWord::all_of_length(3);
    let confluent = words.iter().all(|wd| {
        let l = normal_order_rewriting(wd, Strategy::Leftmost);
        l == normal_order_rewriting(wd, Strategy::Rightmost) && l == normal_order(wd)
    });
    c.add(
        "rewriting confluent on all length-3 words",
        confluent,
        format!("{} words", words.len()),
    );
    let flat = (0..=6u32).all(|d| {
        let products: std::collections::BTreeSet<MultiIndex> = AqWord::all_of_length(d as usize)
            .iter()
            .flat_map(|wd| {
                normal_order(wd)
                    .terms()
                    .map(|(g, _)| *g)
                    .collect::<Vec<_>>()
            })
            .collect();
        products.len() == MultiIndex::of_degree(d).len()
    });
    c.add(
        "normal forms span the compositions through degree 6",
        flat,
        "",
    );
}

fn aq_power_identity(c: &mut Checks, max_n: u32) {
    for n in 1..=max_n {
        let lhs = &w(4).pow(n) * &w(1);
        let coeff = &LaurentPoly::q() - &qp(1 - 2 * n as i64);
        let rhs = &(&w(1) * &w(4).pow(n)) - &(&(&w(2) * &w(3)) * &w(4).pow(n - 1)).scale(&coeff);
        let diff = &lhs - &rhs;
        c.zero(format!("N = {n}"), diff.is_zero(), &diff);
    }
}

/// `w₁..w₄` as unreduced free-algebra elements.
fn free_w(i: u8) -> FreeElement {
    use Root::*;
    let f = |r| FreeElement::word(Word::letter(r));
    let q = RatFunc::q_pow(1);
    let w3 = || &(&f(Nu) * &f(Beta)) - &(&f(Beta) * &f(Nu)).scale(&q);
    match i {
        1 => f(Beta),
        2 => &(&f(Mu) * &f(Beta)) - &(&f(Beta) * &f(Mu)).scale(&q),
        3 => w3(),
        _ => &(&f(Mu) * &w3()) - &(&w3() * &f(Mu)).scale(&q),
    }
}

fn free_relation_list() -> Vec<(&'static str, FreeElement)> {
    let q = RatFunc::q_pow(1);
    let fw = free_w;
    vec![
        (
            "w1w2 = q w2w1",
            &(&fw(1) * &fw(2)) - &(&fw(2) * &fw(1)).scale(&q),
        ),
        (
            "w1w3 = q w3w1",
            &(&fw(1) * &fw(3)) - &(&fw(3) * &fw(1)).scale(&q),
        ),
        (
            "w3w4 = q w4w3",
            &(&fw(3) * &fw(4)) - &(&fw(4) * &fw(3)).scale(&q),
        ),
        (
            "w2w4 = q w4w2",
            &(&fw(2) * &fw(4)) - &(&fw(4) * &fw(2)).scale(&q),
        ),
        ("w2w3 = w3w2", &(&fw(2) * &fw(3)) - &(&fw(3) * &fw(2))),
        (
            "w1w4 - w4w1 = (q - q^-1) w2w3",
            &(&(&fw(1) * &fw(4)) - &(&fw(4) * &fw(1)))
                - &(&fw(2) * &fw(3)).scale(&q_minus_qinv().into()),
        ),
    ]
}

fn serre_oracle(c: &mut Checks) {
    let rels = free_relation_list();
    for (name, r) in &rels {
        let red = serre_reduce_with(SerreConvention::Standard, r);
        c.zero(format!("{name} in the Serre ideal"), red.is_zero(), &red);
    }
    // w2w3 = w3w3, a misreading of w2w3 = w3w2, is not in the ideal
    let literal = &(&free_w(2) * &free_w(3)) - &(&free_w(3) * &free_w(3));
    let red = serre_reduce_with(SerreConvention::Standard, &literal);
    c.add("literal w2w3 = w3w3 is rejected", !red.is_zero(), "");
    // with the flipped middle sign some relation leaves the ideal
    let failing: Vec<&str> = rels
        .iter()
        .filter(|(_, r)| !serre_reduce_with(SerreConvention::Flipped, r).is_zero())
        .map(|(n, _)| *n)
        .collect();
    c.add(
        "flipped Serre signs reject some w relation",
        !failing.is_empty(),
        failing.join("; "),
    );
    recorded_identities(c);
}

/// Coefficients of `1/((1−t)³(1−t²)²(1−t³))`.
fn positive_root_series(n: usize) -> Vec<u64> {
    let mut s = vec![0u64; n + 1];
    s[0] = 1;
    for h in [1usize, 1, 1, 2, 2, 3] {
        for i in h..=n {
            s[i] += s[i - h];
        }
    }
    s
}

fn dims(c: &mut Checks, max: u32) {
    let expected = positive_root_series(max as usize);
    for (d, e) in expected.iter().enumerate() {
        let got = graded_dimension(d as u8);
        c.add(
            format!("degree {d}"),
            got as u64 == *e,
            format!("{got} (expected {e})"),
        );
    }
}

fn star_case(c: &mut Checks, g: &str, i: u8, expected: AqElement) {
    let gen = StarGenerator::new(g.parse().unwrap()).unwrap();
    match star_act(gen, &w(i)) {
        Ok(r) => c.add(
            format!("{g} * w{i} = {expected}"),
            r.value == expected,
            format!(
                "got {}{}",
                r.value,
                if r.exact {
                    ""
                } else {
                    " (in the Verma quotient)"
                }
            ),
        ),
        Err(e) => c.add(format!("{g} * w{i} = {expected}"), false, e),
    }
}

fn star_table(c: &mut Checks) {
    let z = AqElement::zero;
    let (q, qi) = (LaurentPoly::q(), qp(-1));
    // (generator, w index, expected) for μ; the ν rows swap 2 ↔ 3
    let table: Vec<(&str, u8, AqElement)> = vec![
        ("Fm", 1, w(2)),
        ("Fm", 3, w(4)),
        ("Fm", 2, z()),
        ("Fm", 4, z()),
        ("Em", 2, w(1)),
        ("Em", 4, w(3)),
        ("Em", 1, z()),
        ("Em", 3, z()),
        ("Km", 1, w(1).scale(&q)),
        ("Km", 3, w(3).scale(&q)),
        ("Km", 2, w(2).scale(&qi)),
        ("Km", 4, w(4).scale(&qi)),
    ];
    let swap = |i: u8| match i {
        2 => 3,
        3 => 2,
        i => i,
    };
    let swap_el = |a: &AqElement| {
        AqElement::from_terms(
            a.terms()
                .map(|(g, c)| (MultiIndex::new(g.0[0], g.0[2], g.0[1], g.0[3]), c.clone())),
        )
    };
    for (g, i, e) in &table {
        star_case(c, g, *i, e.clone());
    }
    for (g, i, e) in &table {
        star_case(c, &g.replace('m', "n"), swap(*i), swap_el(e));
    }
    // inverse Cartan elements act by the inverse weight
    star_case(c, "Km^-1", 1, w(1).scale(&qi));
    star_case(c, "Kn^-1", 4, w(4).scale(&q));
}

fn recorded_identities(c: &mut Checks) {
    use Root::*;
    let (f, e, k) = (UqElement::f, UqElement::e, UqElement::k);
    let wu = |i: u8| w_embed(&w(i));
    let qi = RatFunc::q_pow(-1);
    let d = &(&f(Mu) * &wu(2)) - &(&wu(2) * &f(Mu)).scale(&qi);
    c.zero("F_mu w2 = q^-1 w2 F_mu", d.is_zero(), &d);
    let d = &(&f(Nu) * &wu(3)) - &(&wu(3) * &f(Nu)).scale(&qi);
    c.zero("F_nu w3 = q^-1 w3 F_nu", d.is_zero(), &d);
    for (r, i, name) in [
        (Mu, 2u8, "E_mu w2 = w1 K_mu^-1"),
        (Nu, 3, "E_nu w3 = w1 K_nu^-1"),
    ] {
        let lhs = &e(r) * &wu(i);
        let d = &lhs - &(&wu(1) * &k(r, -1));
        // what remains must end in a raising operator
        let rest_in_e_ideal = d.terms().all(|(m, _)| !m.e.is_empty());
        c.add(format!("{name} modulo U E"), rest_in_e_ideal, &d);
        let exact = &d - &(&wu(i) * &e(r));
        c.zero(format!("{name} + w{i} E exactly"), exact.is_zero(), &exact);
    }
}

fn dual_closed_forms(c: &mut Checks, degree: u32) {
    for g in [
        DualGen::W1,
        DualGen::W2,
        DualGen::W3,
        DualGen::W4,
        DualGen::Box,
    ] {
        let r = verify_dual(g, degree);
        let detail = if r.passed() {
            format!("{} indicators; {}", r.checked, right_dual_closed(g))
        } else {
            format!(
                "fails at {:?}",
                r.failures.iter().map(|m| m.to_string()).collect::<Vec<_>>()
            )
        };
        c.add(format!("dual of {}", g.element()), r.passed(), detail);
    }
}

fn box_suite(c: &mut Checks, degree: u32) {
    let b = right_dual_closed(DualGen::Box);
    c.add(
        "closed form is K_2.K_3.d_1.d_4 - q d_2.d_3",
        b == wave_operator(),
        &b,
    );
    let r = verify_dual(DualGen::Box, degree);
    c.add(
        "box agrees with the dual of w1*w4 - q*w2*w3",
        r.passed(),
        format!("{} indicators", r.checked),
    );
    // the dual of the center equals the dual of its defining expression
    let omega = center_element();
    let expr = &(&w(1) * &w(4)) - &(&w(2) * &w(3)).scale(&LaurentPoly::q());
    let same = MultiIndex::up_to_degree(degree.min(4))
        .into_iter()
        .all(|g| {
            let f = DualFunctional::indicator(g);
            right_dual_bruteforce(&omega, &f) == right_dual_bruteforce(&expr, &f)
        });
    c.add("center element matches its defining product", same, "");
}

fn dirac_factorization(c: &mut Checks, degree: u32) {
    let r = factorization_check(degree);
    c.add(
        "D+D- = -q^-1 diag(box, box) exactly",
        r.plus_minus_exact,
        "",
    );
    c.add(
        "D-D+ = -q^-1 diag(box, box) exactly",
        r.minus_plus_exact,
        "",
    );
    c.add("D+D- = D-D+", r.products_commute, "");
    c.add(
        "monomial sweep",
        r.monomial_failures.is_empty(),
        format!(
            "{} vectors; failures: {:?}",
            r.monomials_checked, r.monomial_failures
        ),
    );
    c.add(
        "(2,1) entries agree",
        dirac_plus().entry(1, 0) == dirac_minus().entry(1, 0),
        "",
    );
    c.add(
        "first-order entries apart from the box term",
        first_order_structure(Which::Plus) && first_order_structure(Which::Minus),
        "",
    );
}

fn dirac_intertwine(c: &mut Checks, degree: u32) {
    for which in [Which::Plus, Which::Minus] {
        let r = intertwine_check(degree, which);
        c.add(
            format!("intertwiner matches D {which}"),
            r.passed(),
            format!("{} indicators; failures: {:?}", r.checked, r.failures),
        );
    }
}

fn singular_vector(c: &mut Checks) {
    use Root::*;
    let f = UqElement::f;
    let two = RatFunc::from(q_int_signed(2));
    let expansion = &(&f(Mu) * &f(Beta)) - &(&f(Beta) * &f(Mu)).scale(&two);
    c.add(
        "u0 = Fm*Fb - (q + q^-1)*Fb*Fm",
        u0_plus() == expansion,
        u0_plus(),
    );
    let report = match singular_report(2, 0..=6, Convention::Twisted) {
        Ok(r) => r,
        Err(e) => return c.add("scan", false, e),
    };
    c.add("convention", true, "twisted");
    for row in &report.rows {
        let x = row.x;
        c.add(
            format!("x = {x}: E_nu u0 v = 0"),
            row.values.e_nu.is_zero(),
            &row.values.e_nu,
        );
        c.add(
            format!("x = {x}: E_mu^2 u0 v = 0"),
            row.values.e_mu_squared.is_zero(),
            &row.values.e_mu_squared,
        );
        let expected = FreeElement::term(Word::letter(Mu), q_int_signed(x - 2).into());
        c.add(
            format!("x = {x}: E_beta u0 v = [x-2] Fm v"),
            row.values.e_beta.0 == expected,
            &row.values.e_beta,
        );
        if x != 2 {
            let n = (2 * x - 4).unsigned_abs();
            let predicted: Vec<u64> = (3..=n).filter(|m| n % m == 0).collect();
            c.add(
                format!("x = {x}: vanishes at orders dividing {}", 2 * x - 4),
                row.root_of_unity_orders == predicted,
                format!("{:?}", row.root_of_unity_orders),
            );
        }
    }
    c.add(
        "generic vanishing exactly at x = 2",
        report.vanishing_x == vec![2],
        format!("{:?}", report.vanishing_x),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series() {
        assert_eq!(positive_root_series(3), vec![1, 3, 8, 17]);
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for s in [
            Suite::AqRelations,
            Suite::StarTable,
            Suite::RecordedIdentities,
        ] {
            let r = run_suite(s, None);
            assert!(r.passed, "{r}");
        }
    }
}
