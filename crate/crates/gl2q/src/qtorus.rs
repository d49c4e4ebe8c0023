//! The quantum 2-torus: the unital algebra on `s^{±1}, t^{±1}` with the
//! relation `t·s = q·s·t`, together with the constant-term functional κ,
//! the two degree maps, and the bar conjugation `λ·s^m·t^n ↦ λ̄·q^{mn}·s^{-m}·t^{-n}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::scalar::Scalar;

/// Which of the two degree maps to apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegVar {
    S,
    T,
}

/// A finite combination of monomials `s^m t^n` with [`Scalar`] coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TorusElement {
    terms: BTreeMap<(i64, i64), Scalar>,
}

impl TorusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    /// `s^m t^n`.
    pub fn monomial(m: i64, n: i64) -> Self {
        Self::term(m, n, Scalar::one())
    }

    /// `c · s^m t^n`.
    pub fn term(m: i64, n: i64, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((m, n), c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: i64, n: i64) -> Scalar {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(Scalar::zero)
    }

    fn insert_add(&mut self, key: (i64, i64), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (&key, coeff) in &self.terms {
            out.insert_add(key, coeff * c);
        }
        out
    }

    /// κ: the coefficient of `s^0 t^0`.
    pub fn kappa(&self) -> Scalar {
        self.coefficient(0, 0)
    }

    /// Degree map: multiplies each monomial by its `s`- (or `t`-) exponent.
    pub fn deg(&self, which: DegVar) -> Self {
        let mut out = Self::zero();
        for (&(m, n), c) in &self.terms {
            let factor = match which {
                DegVar::S => m,
                DegVar::T => n,
            };
            out.insert_add((m, n), c.scale_int(factor));
        }
        out
    }

    /// Bar conjugation, antilinear: `λ s^m t^n ↦ λ̄ q^{mn} s^{-m} t^{-n}`.
    /// Of order two whenever `q q̄ = 1`, which the Scalar ring guarantees.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero();
        for (&(m, n), c) in &self.terms {
            out.insert_add((-m, -n), &c.conj() * &Scalar::q_pow(m * n));
        }
        out
    }
}

impl Add for &TorusElement {
    type Output = TorusElement;
    fn add(self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.insert_add(key, c.clone());
        }
        out
    }
}

impl Add for TorusElement {
    type Output = TorusElement;
    fn add(self, rhs: TorusElement) -> TorusElement {
        &self + &rhs
    }
}

impl AddAssign<&TorusElement> for TorusElement {
    fn add_assign(&mut self, rhs: &TorusElement) {
        for (&key, c) in &rhs.terms {
            self.insert_add(key, c.clone());
        }
    }
}

impl Sub for &TorusElement {
    type Output = TorusElement;
    fn sub(self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.insert_add(key, -c.clone());
        }
        out
    }
}

impl Neg for TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        let terms = self.terms.into_iter().map(|(k, c)| (k, -c)).collect();
        TorusElement { terms }
    }
}

/// Bilinear extension of `(s^{m1}t^{n1})(s^{m2}t^{n2}) = q^{n1·m2} s^{m1+m2} t^{n1+n2}`.
impl Mul for &TorusElement {
    type Output = TorusElement;
    fn mul(self, rhs: &TorusElement) -> TorusElement {
        let mut out = TorusElement::zero();
        for (&(m1, n1), c1) in &self.terms {
            for (&(m2, n2), c2) in &rhs.terms {
                let twist = Scalar::q_pow(n1 * m2);
                out.insert_add((m1 + m2, n1 + n2), &(c1 * c2) * &twist);
            }
        }
        out
    }
}

impl Mul for TorusElement {
    type Output = TorusElement;
    fn mul(self, rhs: TorusElement) -> TorusElement {
        &self * &rhs
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(m, n), c) in &self.terms {
            let mono = match (m, n) {
                (0, 0) => "1".to_string(),
                (m, 0) => format!("s^{m}"),
                (0, n) => format!("t^{n}"),
                (m, n) => format!("s^{m} t^{n}"),
            };
            let body = if c.is_one() {
                mono
            } else if (mono == "1").then_some(()).is_some() {
                format!("({c})")
            } else {
                format!("({c})*{mono}")
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

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TorusTermJson {
    m: i64,
    n: i64,
    coeff: Scalar,
}

impl Serialize for TorusElement {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (&(m, n), c) in &self.terms {
            seq.serialize_element(&TorusTermJson {
                m,
                n,
                coeff: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TorusElement {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Vec::<TorusTermJson>::deserialize(de)?;
        let mut out = TorusElement::zero();
        for t in v {
            out.insert_add((t.m, t.n), t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(m: i64, n: i64) -> TorusElement {
        TorusElement::monomial(m, n)
    }

    #[test]
    fn t_times_s_is_q_st() {
        let ts = &mono(0, 1) * &mono(1, 0);
        assert_eq!(ts, TorusElement::term(1, 1, Scalar::q_pow(1)));
    }

    #[test]
    fn st_squared() {
        let st = mono(1, 1);
        let sq = &st * &st;
        assert_eq!(sq, TorusElement::term(2, 2, Scalar::q_pow(1)));
    }

    #[test]
    fn s_times_s_inverse() {
        assert_eq!(&mono(1, 0) * &mono(-1, 0), TorusElement::one());
    }

    #[test]
    fn kappa_picks_constant_term() {
        assert!(mono(2, -1).kappa().is_zero());
        let x = TorusElement::term(0, 0, Scalar::q_pow(3));
        assert_eq!(x.kappa(), Scalar::q_pow(3));
    }

    #[test]
    fn kappa_is_tracelike_on_monomials() {
        for (m1, n1) in [(1, 2), (-3, 1), (0, -2), (2, 2)] {
            for (m2, n2) in [(-1, -2), (3, -1), (0, 2), (-2, -2)] {
                let a = mono(m1, n1);
                let b = mono(m2, n2);
                assert_eq!((&a * &b).kappa(), (&b * &a).kappa(), "({m1},{n1}),({m2},{n2})");
            }
        }
    }

    #[test]
    fn degree_maps() {
        assert_eq!(mono(3, 1).deg(DegVar::S), mono(3, 1).scale(&Scalar::from_int(3)));
        assert!(mono(3, 0).deg(DegVar::T).is_zero());
        let x = &mono(2, 5) + &mono(-1, 3).scale(&Scalar::q_pow(2));
        assert_eq!(x.deg(DegVar::S).deg(DegVar::T), x.deg(DegVar::T).deg(DegVar::S));
    }

    #[test]
    fn bar_of_st() {
        // bar(st) = q * s^-1 t^-1
        assert_eq!(mono(1, 1).bar(), TorusElement::term(-1, -1, Scalar::q_pow(1)));
    }

    #[test]
    fn bar_is_involution() {
        let x = TorusElement::term(2, -3, Scalar::i()) + TorusElement::term(-1, 4, Scalar::q_pow(2));
        assert_eq!(x.bar().bar(), x);
        assert_eq!(TorusElement::one().bar(), TorusElement::one());
    }

    #[test]
    fn bar_is_antiautomorphism() {
        let a = TorusElement::term(1, 2, Scalar::i()) + mono(-1, 0);
        let b = mono(2, -1) + TorusElement::term(0, 1, Scalar::q_pow(-1));
        assert_eq!((&a * &b).bar(), &b.bar() * &a.bar());
    }

    #[test]
    fn degree_maps_are_derivations() {
        let a = mono(1, 2) + mono(-2, 0);
        let b = mono(0, 1) + mono(3, -1);
        let lhs = (&a * &b).deg(DegVar::S);
        let rhs = &(&a.deg(DegVar::S) * &b) + &(&a * &b.deg(DegVar::S));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn associativity_spot_checks() {
        let a = mono(1, 1) + mono(-1, 2);
        let b = mono(2, -1);
        let c = mono(-3, 0) + TorusElement::term(1, 0, Scalar::i());
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}
