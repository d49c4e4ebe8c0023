//! The extended affine Lie algebra: 2x2 matrices over the quantum torus,
//! centrally extended by `c_s`, `c_t` and enlarged by the degree
//! derivations `d_s`, `d_t`.
//!
//! Brackets of matrix generators carry central corrections; the
//! derivations act by the exponent of the coordinate monomial. The module
//! also provides the symmetric invariant form and the antilinear
//! anti-involution `omega`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::qtorus::TorusElement;
use crate::scalar::Scalar;

/// Key for one matrix-part term: position `(i, j)` with `i, j ∈ {1, 2}`
/// and the torus monomial exponents `(m, n)`.
pub type GenKey = ((u8, u8), (i64, i64));

/// An element of the extended algebra: a finite combination of
/// `E_ij(s^m t^n)` plus central and derivation components.
///
/// Invariant: `matrix` stores no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    matrix: BTreeMap<GenKey, Scalar>,
    pub cs: Scalar,
    pub ct: Scalar,
    pub ds: Scalar,
    pub dt: Scalar,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The generator `E_ij(s^m t^n)`. Panics unless `i, j ∈ {1, 2}`.
    pub fn generator(i: u8, j: u8, m: i64, n: i64) -> Self {
        assert!((1..=2).contains(&i) && (1..=2).contains(&j));
        let mut el = Self::zero();
        el.matrix.insert(((i, j), (m, n)), Scalar::one());
        el
    }

    /// `E_ij(a)` for a general torus element `a`.
    pub fn matrix_of(i: u8, j: u8, a: &TorusElement) -> Self {
        assert!((1..=2).contains(&i) && (1..=2).contains(&j));
        let mut el = Self::zero();
        for (&(m, n), c) in a.terms() {
            el.insert_add(((i, j), (m, n)), c.clone());
        }
        el
    }

    pub fn central_s() -> Self {
        Self {
            cs: Scalar::one(),
            ..Self::zero()
        }
    }

    pub fn central_t() -> Self {
        Self {
            ct: Scalar::one(),
            ..Self::zero()
        }
    }

    pub fn derivation_s() -> Self {
        Self {
            ds: Scalar::one(),
            ..Self::zero()
        }
    }

    pub fn derivation_t() -> Self {
        Self {
            dt: Scalar::one(),
            ..Self::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_empty()
            && self.cs.is_zero()
            && self.ct.is_zero()
            && self.ds.is_zero()
            && self.dt.is_zero()
    }

    pub fn matrix_terms(&self) -> impl Iterator<Item = (&GenKey, &Scalar)> {
        self.matrix.iter()
    }

    fn insert_add(&mut self, key: GenKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.matrix.get_mut(&key) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.matrix.remove(&key);
                }
            }
            None => {
                self.matrix.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (&key, coeff) in &self.matrix {
            out.insert_add(key, coeff * c);
        }
        out.cs = &self.cs * c;
        out.ct = &self.ct * c;
        out.ds = &self.ds * c;
        out.dt = &self.dt * c;
        out
    }

    /// The Lie bracket. On matrix generators:
    ///
    /// `[E_ij(s^{m1}t^{n1}), E_kl(s^{m2}t^{n2})]
    ///    = δ_jk q^{n1·m2} E_il(..) − δ_il q^{n2·m1} E_kj(..)
    ///    + δ_jk δ_il δ_{m1+m2,0} δ_{n1+n2,0} q^{n1·m2} (m1·c_s + n1·c_t)`
    ///
    /// with the derivations acting by `[d_s, E_ij(s^m t^n)] = m·E_ij(s^m t^n)`
    /// and `[d_t, ·] = n·(·)`; central elements bracket to zero.
    pub fn bracket(&self, other: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (&((i, j), (m1, n1)), a) in &self.matrix {
            for (&((k, l), (m2, n2)), b) in &other.matrix {
                let coeff = a * b;
                let sum = (m1 + m2, n1 + n2);
                if j == k {
                    let tw = &coeff * &Scalar::q_pow(n1 * m2);
                    out.insert_add(((i, l), sum), tw);
                }
                if i == l {
                    let tw = &coeff * &Scalar::q_pow(n2 * m1);
                    out.insert_add(((k, j), sum), -tw);
                }
                if j == k && i == l && sum == (0, 0) {
                    let tw = &coeff * &Scalar::q_pow(n1 * m2);
                    out.cs += &tw.scale_int(m1);
                    out.ct += &tw.scale_int(n1);
                }
            }
        }
        // derivation action on the other side's matrix part
        for (&((i, j), (m, n)), b) in &other.matrix {
            let c = &(&self.ds.scale_int(m) + &self.dt.scale_int(n)) * b;
            out.insert_add(((i, j), (m, n)), c);
        }
        for (&((i, j), (m, n)), a) in &self.matrix {
            let c = &(&other.ds.scale_int(m) + &other.dt.scale_int(n)) * a;
            out.insert_add(((i, j), (m, n)), -c);
        }
        out
    }

    /// The antilinear anti-involution: `E_ij(a) ↦ (−1)^{i+j} E_ji(ā)`,
    /// fixing `c_s, c_t, d_s, d_t`; coefficients are conjugated.
    pub fn omega(&self) -> LieElement {
        let mut out = LieElement::zero();
        for (&((i, j), (m, n)), c) in &self.matrix {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let coeff = &c.conj() * &Scalar::q_pow(m * n);
            out.insert_add(((j, i), (-m, -n)), coeff.scale_int(sign));
        }
        out.cs = self.cs.conj();
        out.ct = self.ct.conj();
        out.ds = self.ds.conj();
        out.dt = self.dt.conj();
        out
    }

    /// The symmetric invariant bilinear form:
    /// `(E_ij(a), E_kl(b)) = δ_jk δ_il κ(ab)`, `(c_s, d_s) = (c_t, d_t) = 1`,
    /// every other pairing of the c/d generators zero.
    pub fn invariant_form(&self, other: &LieElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (&((i, j), (m1, n1)), a) in &self.matrix {
            for (&((k, l), (m2, n2)), b) in &other.matrix {
                if j == k && i == l && m1 + m2 == 0 && n1 + n2 == 0 {
                    acc += &(&(a * b) * &Scalar::q_pow(n1 * m2));
                }
            }
        }
        acc += &(&self.cs * &other.ds);
        acc += &(&self.ct * &other.dt);
        acc += &(&self.ds * &other.cs);
        acc += &(&self.dt * &other.ct);
        acc
    }
}

/// True iff `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` exactly.
pub fn check_jacobi(x: &LieElement, y: &LieElement, z: &LieElement) -> bool {
    let a = x.bracket(&y.bracket(z));
    let b = y.bracket(&z.bracket(x));
    let c = z.bracket(&x.bracket(y));
    (&(&a + &b) + &c).is_zero()
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (&key, c) in &rhs.matrix {
            out.insert_add(key, c.clone());
        }
        out.cs += &rhs.cs;
        out.ct += &rhs.ct;
        out.ds += &rhs.ds;
        out.dt += &rhs.dt;
        out
    }
}

impl Add for LieElement {
    type Output = LieElement;
    fn add(self, rhs: LieElement) -> LieElement {
        &self + &rhs
    }
}

impl AddAssign<&LieElement> for LieElement {
    fn add_assign(&mut self, rhs: &LieElement) {
        for (&key, c) in &rhs.matrix {
            self.insert_add(key, c.clone());
        }
        self.cs += &rhs.cs;
        self.ct += &rhs.ct;
        self.ds += &rhs.ds;
        self.dt += &rhs.dt;
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        self + &rhs.clone().neg()
    }
}

impl Neg for LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement {
            matrix: self.matrix.into_iter().map(|(k, c)| (k, -c)).collect(),
            cs: -self.cs,
            ct: -self.ct,
            ds: -self.ds,
            dt: -self.dt,
        }
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (&((i, j), (m, n)), c) in &self.matrix {
            let gen = format!("E{i}{j}[{m},{n}]");
            parts.push(if c.is_one() {
                gen
            } else {
                format!("({c})*{gen}")
            });
        }
        for (c, name) in [
            (&self.cs, "cs"),
            (&self.ct, "ct"),
            (&self.ds, "ds"),
            (&self.dt, "dt"),
        ] {
            if !c.is_zero() {
                parts.push(if c.is_one() {
                    name.to_string()
                } else {
                    format!("({c})*{name}")
                });
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
