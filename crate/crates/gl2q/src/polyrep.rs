//! The representation space `V = C[x_{(m,n)} : (m,n) ∈ Z²]` and the
//! free-field operators acting on it.
//!
//! A family `X` of lower-triangular SL2 matrices twists the Weyl
//! generators, `P_A = a_A ∂_A` and `Q_A = c_A ∂_A + d_A x_A`, and the
//! matrix generators act through operators built from `P` and `Q`:
//! `e21` is `Q` itself, `e11`/`e22` are twisted sums of `Q·P`, `e12` is
//! cubic (one `Q` after two `P`s) plus a `mu`-multiple of `P`, and the
//! degree operators are exponent-weighted sums of `Q·P`. The formally
//! infinite sums collapse on each monomial because `P_A` kills any
//! monomial without `x_A`, so everything here is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::LieElement;
use crate::qtorus::DegVar;
use crate::scalar::{GaussianRational, Scalar};

/// A variable index `(m, n)`. Ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Idx {
    pub m: i64,
    pub n: i64,
}

impl Idx {
    pub fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    pub fn shift(self, a: i64, b: i64) -> Self {
        Self {
            m: self.m + a,
            n: self.n + b,
        }
    }
}

impl fmt::Display for Idx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

impl fmt::Debug for Idx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One lower-triangular SL2 entry. Invariants: `a·d = 1`, `a ≠ 0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct XEntry {
    pub a: GaussianRational,
    pub c: GaussianRational,
    pub d: GaussianRational,
}

impl XEntry {
    pub fn identity() -> Self {
        Self {
            a: GaussianRational::from_int(1),
            c: GaussianRational::from_int(0),
            d: GaussianRational::from_int(1),
        }
    }

    pub fn validate(&self) -> Result<(), XFamilyError> {
        if self.a.is_zero() {
            return Err(XFamilyError::ZeroA);
        }
        let prod = &self.a * &self.d;
        if prod != GaussianRational::from_int(1) {
            return Err(XFamilyError::DeterminantNotOne {
                a: self.a.to_string(),
                d: self.d.to_string(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum XFamilyError {
    #[error("entry has a = 0")]
    ZeroA,
    #[error("entry has a*d != 1 (a = {a}, d = {d})")]
    DeterminantNotOne { a: String, d: String },
}

/// A choice of SL2 entry per index; indices absent from a table fall
/// back to the identity entry.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum XFamily {
    Identity,
    Constant(XEntry),
    Table { entries: Vec<XTableEntry> },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct XTableEntry {
    pub m: i64,
    pub n: i64,
    #[serde(flatten)]
    pub entry: XEntry,
}

impl XFamily {
    /// Constant family with rational `a`, `c` and `d = 1/a` supplied by the caller.
    pub fn constant(a: GaussianRational, c: GaussianRational, d: GaussianRational) -> Self {
        let fam = XFamily::Constant(XEntry { a, c, d });
        fam.validate().expect("invalid constant X entry");
        fam
    }

    pub fn validate(&self) -> Result<(), XFamilyError> {
        match self {
            XFamily::Identity => Ok(()),
            XFamily::Constant(e) => e.validate(),
            XFamily::Table { entries } => entries.iter().try_for_each(|t| t.entry.validate()),
        }
    }

    pub fn entry(&self, idx: Idx) -> XEntry {
        match self {
            XFamily::Identity => XEntry::identity(),
            XFamily::Constant(e) => e.clone(),
            XFamily::Table { entries } => entries
                .iter()
                .find(|t| t.m == idx.m && t.n == idx.n)
                .map(|t| t.entry.clone())
                .unwrap_or_else(XEntry::identity),
        }
    }
}

/// A commutative monomial: map from variable index to positive exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<Idx, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(idx: Idx) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert(idx, 1);
        Self { exps }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Idx, u32)>) -> Self {
        let mut exps = BTreeMap::new();
        for (idx, e) in pairs {
            if e > 0 {
                *exps.entry(idx).or_insert(0) += e;
            }
        }
        Self { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, idx: Idx) -> u32 {
        self.exps.get(&idx).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Idx, &u32)> {
        self.exps.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = Idx> + '_ {
        self.exps.keys().copied()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Smallest variable present, if any.
    pub fn first_var(&self) -> Option<Idx> {
        self.exps.keys().next().copied()
    }

    pub fn mul_var(&self, idx: Idx) -> Self {
        let mut out = self.clone();
        *out.exps.entry(idx).or_insert(0) += 1;
        out
    }

    /// Divide by `x_idx`; `None` when the variable is absent.
    pub fn div_var(&self, idx: Idx) -> Option<Self> {
        let mut out = self.clone();
        match out.exps.get_mut(&idx) {
            Some(e) if *e > 1 => {
                *e -= 1;
                Some(out)
            }
            Some(_) => {
                out.exps.remove(&idx);
                Some(out)
            }
            None => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Self {
        let mut out = self.clone();
        for (&idx, &e) in &other.exps {
            *out.exps.entry(idx).or_insert(0) += e;
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(idx, &e)| {
                if e == 1 {
                    format!("x[{},{}]", idx.m, idx.n)
                } else {
                    format!("x[{},{}]^{}", idx.m, idx.n, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial over the Scalar ring. Invariant: no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(idx: Idx) -> Self {
        Self::term(Monomial::var(idx), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coefficient(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn insert_add(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (m, coeff) in &self.terms {
            out.insert_add(m.clone(), coeff * c);
        }
        out
    }

    pub fn scale_gaussian(&self, g: &GaussianRational) -> Self {
        let mut out = Self::zero();
        for (m, coeff) in &self.terms {
            out.insert_add(m.clone(), coeff.scale(g));
        }
        out
    }

    /// Multiplication by the variable `x_idx`.
    pub fn mul_var(&self, idx: Idx) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.insert_add(m.mul_var(idx), c.clone());
        }
        out
    }

    /// Partial derivative in `x_idx`.
    pub fn differentiate(&self, idx: Idx) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(idx);
            if e > 0 {
                let reduced = m.div_var(idx).expect("exponent checked");
                out.insert_add(reduced, c.scale_int(e as i64));
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.insert_add(m.clone(), c.clone());
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let body = if m.is_one() {
                format!("({c})")
            } else if c.is_one() {
                m.to_string()
            } else {
                format!("({c})*{m}")
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `P_A = a_A ∂_A`.
pub fn apply_p(a: Idx, f: &Polynomial, x: &XFamily) -> Polynomial {
    f.differentiate(a).scale_gaussian(&x.entry(a).a)
}

/// `Q_A = c_A ∂_A + d_A x_A`.
pub fn apply_q(a: Idx, f: &Polynomial, x: &XFamily) -> Polynomial {
    let e = x.entry(a);
    let mut out = f.differentiate(a).scale_gaussian(&e.c);
    out += &f.mul_var(a).scale_gaussian(&e.d);
    out
}

/// `x_A = a_A Q_A − c_A P_A`, the inverse change of generators.
pub fn recover_multiplication(a: Idx, f: &Polynomial, x: &XFamily) -> Polynomial {
    let e = x.entry(a);
    &apply_q(a, f, x).scale_gaussian(&e.a) - &apply_p(a, f, x).scale_gaussian(&e.c)
}

fn e12_on_monomial(m1: i64, n1: i64, mono: &Monomial, coeff: &Scalar, x: &XFamily) -> Polynomial {
    let mut out = Polynomial::zero();
    // -q^{-m1*n1} * mu * P_{(-m1,-n1)}
    let f = Polynomial::term(mono.clone(), coeff.clone());
    let p_term = apply_p(Idx::new(-m1, -n1), &f, x);
    out += &p_term.scale(&-(&Scalar::q_pow(-m1 * n1) * &Scalar::mu()));
    // -sum over ordered pairs: Q_{(m+m'+m1, n+n'+n1)} P_{(m,n)} P_{(m',n')},
    // weighted by q^{n1*m' + n*m1 + n*m'}; the second partial shows up when
    // the two indices coincide.
    for second in mono.support() {
        let after_second = apply_p(second, &f, x);
        if after_second.is_zero() {
            continue;
        }
        for (inner_mono, inner_coeff) in after_second.terms() {
            for first in inner_mono.support() {
                let inner = Polynomial::term(inner_mono.clone(), inner_coeff.clone());
                let after_first = apply_p(first, &inner, x);
                if after_first.is_zero() {
                    continue;
                }
                let q_exp = n1 * second.m + first.n * m1 + first.n * second.m;
                let target = Idx::new(first.m + second.m + m1, first.n + second.n + n1);
                let contrib = apply_q(target, &after_first, x).scale(&Scalar::q_pow(q_exp));
                out += &contrib.neg();
            }
        }
    }
    out
}

fn qp_sum_on_monomial(
    m1: i64,
    n1: i64,
    mono: &Monomial,
    coeff: &Scalar,
    x: &XFamily,
    q_exp_of: impl Fn(Idx) -> i64,
) -> Polynomial {
    let mut out = Polynomial::zero();
    let f = Polynomial::term(mono.clone(), coeff.clone());
    for a in mono.support() {
        let after_p = apply_p(a, &f, x);
        if after_p.is_zero() {
            continue;
        }
        let target = Idx::new(a.m + m1, a.n + n1);
        out += &apply_q(target, &after_p, x).scale(&Scalar::q_pow(q_exp_of(a)));
    }
    out
}

/// The operator for `E_ij(s^{m1} t^{n1})` applied to `f`.
pub fn apply_e(i: u8, j: u8, m1: i64, n1: i64, f: &Polynomial, x: &XFamily) -> Polynomial {
    let mut out = Polynomial::zero();
    match (i, j) {
        (2, 1) => {
            return apply_q(Idx::new(m1, n1), f, x);
        }
        (1, 2) => {
            for (mono, coeff) in f.terms() {
                out += &e12_on_monomial(m1, n1, mono, coeff, x);
            }
        }
        (1, 1) => {
            for (mono, coeff) in f.terms() {
                out += &qp_sum_on_monomial(m1, n1, mono, coeff, x, |a| a.n * m1).neg();
            }
            if (m1, n1) == (0, 0) {
                out += &f.scale(&Scalar::mu().scale(&GaussianRational::from_ratio(-1, 2)));
            }
        }
        (2, 2) => {
            for (mono, coeff) in f.terms() {
                out += &qp_sum_on_monomial(m1, n1, mono, coeff, x, |a| a.m * n1);
            }
            if (m1, n1) == (0, 0) {
                out += &f.scale(&Scalar::mu().scale(&GaussianRational::from_ratio(1, 2)));
            }
        }
        _ => panic!("matrix position out of range: ({i},{j})"),
    }
    out
}

/// The degree operator: exponent-weighted sum of `Q_A P_A` over the support.
pub fn apply_d(which: DegVar, f: &Polynomial, x: &XFamily) -> Polynomial {
    let mut out = Polynomial::zero();
    for (mono, coeff) in f.terms() {
        let single = Polynomial::term(mono.clone(), coeff.clone());
        for a in mono.support() {
            let weight = match which {
                DegVar::S => a.m,
                DegVar::T => a.n,
            };
            if weight == 0 {
                continue;
            }
            let qp = apply_q(a, &apply_p(a, &single, x), x);
            out += &qp.scale(&Scalar::from_int(weight));
        }
    }
    out
}

/// The representation map applied to `f`: matrix terms act through
/// [`apply_e`], derivations through [`apply_d`], central elements as zero.
pub fn pi_apply(el: &LieElement, f: &Polynomial, x: &XFamily) -> Polynomial {
    let mut out = Polynomial::zero();
    for (&((i, j), (m, n)), c) in el.matrix_terms() {
        out += &apply_e(i, j, m, n, f, x).scale(c);
    }
    if !el.ds.is_zero() {
        out += &apply_d(DegVar::S, f, x).scale(&el.ds);
    }
    if !el.dt.is_zero() {
        out += &apply_d(DegVar::T, f, x).scale(&el.dt);
    }
    out
}

/// True iff `π(x)π(y)f − π(y)π(x)f = π([x,y])f` exactly.
pub fn check_homomorphism(
    xe: &LieElement,
    ye: &LieElement,
    f: &Polynomial,
    x: &XFamily,
) -> bool {
    let lhs = &pi_apply(xe, &pi_apply(ye, f, x), x) - &pi_apply(ye, &pi_apply(xe, f, x), x);
    let rhs = pi_apply(&xe.bracket(ye), f, x);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ix(m: i64, n: i64) -> Idx {
        Idx::new(m, n)
    }

    fn constant_x() -> XFamily {
        XFamily::constant(
            GaussianRational::from_int(2),
            GaussianRational::from_int(3),
            GaussianRational::from_ratio(1, 2),
        )
    }

    #[test]
    fn p_is_scaled_derivative() {
        let id = XFamily::Identity;
        let f = Polynomial::term(Monomial::from_pairs([(ix(0, 0), 2)]), Scalar::one());
        let got = apply_p(ix(0, 0), &f, &id);
        assert_eq!(got, Polynomial::var(ix(0, 0)).scale(&Scalar::from_int(2)));
        assert!(apply_p(ix(1, 0), &Polynomial::var(ix(0, 1)), &id).is_zero());

        let xf = constant_x();
        let got = apply_p(ix(1, 1), &Polynomial::var(ix(1, 1)), &xf);
        assert_eq!(got, Polynomial::constant(Scalar::from_int(2)));
    }

    #[test]
    fn q_on_one_and_on_var() {
        let id = XFamily::Identity;
        assert_eq!(apply_q(ix(2, -1), &Polynomial::one(), &id), Polynomial::var(ix(2, -1)));

        let all_ones = XFamily::constant(
            GaussianRational::from_int(1),
            GaussianRational::from_int(1),
            GaussianRational::from_int(1),
        );
        let got = apply_q(ix(0, 0), &Polynomial::var(ix(0, 0)), &all_ones);
        let expected = &Polynomial::one()
            + &Polynomial::term(Monomial::from_pairs([(ix(0, 0), 2)]), Scalar::one());
        assert_eq!(got, expected);
    }

    #[test]
    fn multiplication_recovery_identity() {
        let xf = constant_x();
        let f = &Polynomial::var(ix(1, 0)) + &Polynomial::term(
            Monomial::from_pairs([(ix(0, 1), 2), (ix(1, 0), 1)]),
            Scalar::i(),
        );
        for a in [ix(1, 0), ix(0, 1), ix(-1, 2)] {
            assert_eq!(recover_multiplication(a, &f, &xf), f.mul_var(a));
        }
    }

    #[test]
    fn weyl_relations_on_samples() {
        let xf = constant_x();
        let f = &Polynomial::term(
            Monomial::from_pairs([(ix(0, 0), 2), (ix(1, -1), 1)]),
            Scalar::one(),
        ) + &Polynomial::var(ix(1, -1));
        let pairs = [(ix(0, 0), ix(1, -1)), (ix(0, 0), ix(0, 0)), (ix(2, 2), ix(0, 0))];
        for (a, b) in pairs {
            let pq = apply_p(a, &apply_q(b, &f, &xf), &xf);
            let qp = apply_q(b, &apply_p(a, &f, &xf), &xf);
            let comm = &pq - &qp;
            let expected = if a == b { f.clone() } else { Polynomial::zero() };
            assert_eq!(comm, expected, "[P_{a}, Q_{b}]");

            let pp = &apply_p(a, &apply_p(b, &f, &xf), &xf) - &apply_p(b, &apply_p(a, &f, &xf), &xf);
            assert!(pp.is_zero());
            let qq = &apply_q(a, &apply_q(b, &f, &xf), &xf) - &apply_q(b, &apply_q(a, &f, &xf), &xf);
            assert!(qq.is_zero());
        }
    }

    #[test]
    fn e11_and_e22_on_vacuum() {
        let id = XFamily::Identity;
        let half_mu = Scalar::mu().scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(
            apply_e(1, 1, 0, 0, &Polynomial::one(), &id),
            Polynomial::constant(-half_mu.clone())
        );
        assert_eq!(
            apply_e(2, 2, 0, 0, &Polynomial::one(), &id),
            Polynomial::constant(half_mu)
        );
        assert!(apply_e(1, 1, 1, 0, &Polynomial::one(), &id).is_zero());
    }

    #[test]
    fn e12_kills_vacuum_e21_creates() {
        let id = XFamily::Identity;
        for (m, n) in [(0, 0), (1, -2), (-1, 1)] {
            assert!(apply_e(1, 2, m, n, &Polynomial::one(), &id).is_zero());
            assert_eq!(
                apply_e(2, 1, m, n, &Polynomial::one(), &id),
                Polynomial::var(ix(m, n))
            );
        }
    }

    #[test]
    fn degree_operators_are_diagonal() {
        let id = XFamily::Identity;
        let v = Polynomial::var(ix(2, 3));
        assert_eq!(apply_d(DegVar::S, &v, &id), v.scale(&Scalar::from_int(2)));
        assert_eq!(apply_d(DegVar::T, &v, &id), v.scale(&Scalar::from_int(3)));
        assert!(apply_d(DegVar::S, &Polynomial::one(), &id).is_zero());

        // eigenvalue is the exponent-weighted sum, also for non-identity X
        let xf = constant_x();
        let mono = Monomial::from_pairs([(ix(2, 3), 2), (ix(-1, 1), 1)]);
        let f = Polynomial::term(mono, Scalar::one());
        assert_eq!(apply_d(DegVar::S, &f, &xf), f.scale(&Scalar::from_int(3)));
        assert_eq!(apply_d(DegVar::T, &f, &xf), f.scale(&Scalar::from_int(7)));
    }

    #[test]
    fn e12_example_by_hand() {
        // e12(0,0) on x_{(0,0)}^2 with identity X: -2*mu*x - 2*x
        let id = XFamily::Identity;
        let f = Polynomial::term(Monomial::from_pairs([(ix(0, 0), 2)]), Scalar::one());
        let got = apply_e(1, 2, 0, 0, &f, &id);
        let x = Polynomial::var(ix(0, 0));
        let expected = &x.scale(&Scalar::mu().scale_int(-2)) + &x.scale(&Scalar::from_int(-2));
        assert_eq!(got, expected);
    }

    #[test]
    fn pi_of_central_is_zero() {
        let id = XFamily::Identity;
        let f = Polynomial::var(ix(1, 1));
        assert!(pi_apply(&LieElement::central_s(), &f, &id).is_zero());
        assert!(pi_apply(&LieElement::central_t(), &f, &id).is_zero());
    }

    #[test]
    fn pi_of_trace_kills_vacuum() {
        let id = XFamily::Identity;
        let trace = LieElement::generator(1, 1, 0, 0) + LieElement::generator(2, 2, 0, 0);
        assert!(pi_apply(&trace, &Polynomial::one(), &id).is_zero());
    }

    #[test]
    fn homomorphism_hand_example() {
        // x = E12(s), y = E21(s^-1), f = 1: both sides equal -mu
        let id = XFamily::Identity;
        let xe = LieElement::generator(1, 2, 1, 0);
        let ye = LieElement::generator(2, 1, -1, 0);
        let f = Polynomial::one();
        let lhs = &pi_apply(&xe, &pi_apply(&ye, &f, &id), &id)
            - &pi_apply(&ye, &pi_apply(&xe, &f, &id), &id);
        assert_eq!(lhs, Polynomial::constant(-Scalar::mu()));
        assert!(check_homomorphism(&xe, &ye, &f, &id));
    }

    #[test]
    fn e21_operators_commute() {
        let xf = constant_x();
        let a = LieElement::generator(2, 1, 1, 1);
        let b = LieElement::generator(2, 1, -2, 0);
        let f = Polynomial::var(ix(0, 0));
        assert!(check_homomorphism(&a, &b, &f, &xf));
    }

    #[test]
    fn homomorphism_with_derivations() {
        let xf = constant_x();
        let f = Polynomial::term(
            Monomial::from_pairs([(ix(1, 0), 1), (ix(0, 1), 1)]),
            Scalar::one(),
        );
        let cases = [
            (LieElement::derivation_s(), LieElement::generator(1, 2, 1, 1)),
            (LieElement::derivation_t(), LieElement::generator(1, 1, 0, 2)),
            (LieElement::derivation_s(), LieElement::derivation_t()),
        ];
        for (a, b) in cases {
            assert!(check_homomorphism(&a, &b, &f, &xf), "a={a}, b={b}");
        }
    }

    #[test]
    fn homomorphism_e12_pairs() {
        // the cubic-operator bracket [e12, e12] = 0 is the hard case
        let xf = constant_x();
        let f = Polynomial::term(
            Monomial::from_pairs([(ix(1, 0), 2), (ix(-1, 1), 1)]),
            Scalar::one(),
        );
        let a = LieElement::generator(1, 2, 1, 1);
        let b = LieElement::generator(1, 2, -1, 2);
        assert!(check_homomorphism(&a, &b, &f, &xf));
    }

    #[test]
    fn homomorphism_e12_e21_degree_two() {
        let xf = constant_x();
        let f = Polynomial::term(
            Monomial::from_pairs([(ix(0, 0), 1), (ix(1, -1), 1)]),
            Scalar::one(),
        );
        let a = LieElement::generator(1, 2, 1, 0);
        let b = LieElement::generator(2, 1, -1, 0);
        assert!(check_homomorphism(&a, &b, &f, &xf));
    }

    #[test]
    fn xfamily_validation() {
        let bad = XFamily::Constant(XEntry {
            a: GaussianRational::from_int(2),
            c: GaussianRational::from_int(0),
            d: GaussianRational::from_int(1),
        });
        assert!(bad.validate().is_err());
        assert!(constant_x().validate().is_ok());
    }
}
