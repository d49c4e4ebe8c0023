//! The exact coefficient ring: Gaussian rationals extended by a Laurent
//! variable `q` and a polynomial variable `mu`.
//!
//! Every element is a finite sum of terms `λ · q^k · mu^d` with `λ` a
//! Gaussian rational, `k ∈ ℤ`, `d ≥ 0`. Conjugation sends `q ↦ q⁻¹`
//! (the unit-modulus assumption `q·q̄ = 1` baked in), fixes `mu`, and
//! conjugates `λ`. Keeping `q` and `mu` formal lets every identity be
//! checked for generic parameters; numeric specialization happens only
//! through [`NumericSpec`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A complex number with rational real and imaginary parts.
///
/// `BigRational` keeps denominators positive and in lowest terms, so
/// structural equality is canonical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `p/q` as a real Gaussian rational. Panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<'a> Add<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        Self {
            re: self.re + &rhs.re,
            im: self.im + &rhs.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        Self {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self).mul(rhs);
    }
}

fn fmt_rational(r: &BigRational) -> String {
    r.to_string()
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.re.is_zero() {
            parts.push(fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            let im = if self.im.is_one() {
                "i".to_string()
            } else if (-self.im.clone()).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", fmt_rational(&self.im))
            };
            if parts.is_empty() || im.starts_with('-') {
                parts.push(im);
            } else {
                parts.push(format!("+{im}"));
            }
        }
        write!(f, "{}", parts.concat())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses literals like `"2"`, `"-1/2"`, `"i"`, `"3/4i"`, `"1/2+1/3i"`,
/// `"1-2i"`. Whitespace is ignored.
impl FromStr for GaussianRational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty literal".into());
        }
        // Split into at most two signed chunks.
        let mut chunks: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (pos, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && pos != 0 && !cur.is_empty() && !cur.ends_with('/') {
                chunks.push(std::mem::take(&mut cur));
                if ch == '-' {
                    cur.push('-');
                }
            } else {
                cur.push(ch);
            }
        }
        chunks.push(cur);
        if chunks.len() > 2 {
            return Err(format!("too many terms in complex literal '{s}'"));
        }
        let mut out = GaussianRational::zero();
        for chunk in chunks {
            let (imag, body) = match chunk.strip_suffix('i') {
                Some(rest) => (true, rest),
                None => (false, chunk.as_str()),
            };
            let body = match body {
                "" | "+" => "1",
                "-" => "-1",
                b => b,
            };
            let r = BigRational::from_str(body)
                .map_err(|e| format!("bad rational '{body}' in '{s}': {e}"))?;
            if imag {
                out.im += r;
            } else {
                out.re += r;
            }
        }
        Ok(out)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A term key: exponent of `q` and degree in `mu`.
pub type TermKey = (i64, u32);

/// Element of the coefficient ring `(ℚ[i])[q^{±1}][mu]`.
///
/// Canonical form: no stored term has a zero coefficient, so structural
/// equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<TermKey, GaussianRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_gaussian(GaussianRational::one())
    }

    pub fn i() -> Self {
        Self::from_gaussian(GaussianRational::i())
    }

    pub fn from_gaussian(g: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !g.is_zero() {
            terms.insert((0, 0), g);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gaussian(GaussianRational::from_int(n))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_gaussian(GaussianRational::from_ratio(p, q))
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::term(k, 0, GaussianRational::one())
    }

    /// `mu`.
    pub fn mu() -> Self {
        Self::term(0, 1, GaussianRational::one())
    }

    /// `mu^d`.
    pub fn mu_pow(d: u32) -> Self {
        Self::term(0, d, GaussianRational::one())
    }

    /// `λ · q^k · mu^d`.
    pub fn term(q_exp: i64, mu_deg: u32, coeff: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((q_exp, mu_deg), coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .is_some_and(|c| c.re.is_one() && c.im.is_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &GaussianRational)> {
        self.terms.iter()
    }

    /// The coefficient of `q^0 mu^0`.
    pub fn constant_part(&self) -> GaussianRational {
        self.terms.get(&(0, 0)).cloned().unwrap_or_default()
    }

    /// True when the element is free of `q` and `mu`.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(k, d)| k == 0 && d == 0)
    }

    /// Degree in `mu`, or `None` for the zero element.
    pub fn mu_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, d)| d).max()
    }

    /// The coefficient of `mu^d`, as an element free of `mu`.
    pub fn mu_coefficient(&self, d: u32) -> Scalar {
        let terms = self
            .terms
            .iter()
            .filter(|&(&(_, deg), _)| deg == d)
            .map(|(&(k, _), c)| ((k, 0), c.clone()))
            .collect();
        Scalar { terms }
    }

    fn insert_add(&mut self, key: TermKey, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// Conjugation: `q ↦ q⁻¹`, `mu` fixed, Gaussian coefficients conjugated.
    pub fn conj(&self) -> Self {
        let mut out = Scalar::zero();
        for (&(k, d), c) in &self.terms {
            out.insert_add((-k, d), c.conj());
        }
        out
    }

    pub fn scale(&self, g: &GaussianRational) -> Self {
        let mut out = Scalar::zero();
        for (&key, c) in &self.terms {
            out.insert_add(key, c * g);
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&GaussianRational::from_int(n))
    }

    /// Exact specialization at one of the four unit-modulus Gaussian
    /// rational points for `q` and a rational `mu`.
    pub fn eval_exact(&self, q: ExactQ, mu: &BigRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (&(k, d), c) in &self.terms {
            let mut t = c * &q.pow(k);
            let mp = rational_pow(mu, d);
            t = &t * &GaussianRational::new(mp, BigRational::zero());
            acc += &t;
        }
        acc
    }

    /// Floating specialization under a [`NumericSpec`]. Exact points go
    /// through exact arithmetic first.
    pub fn eval(&self, spec: &NumericSpec) -> Complex64 {
        match spec.q {
            QValue::Exact(p) => self.eval_exact(p, &spec.mu).to_complex64(),
            QValue::RootOfUnity { numerator, order } => {
                let mu = spec.mu.to_f64().unwrap_or(f64::NAN);
                let mut acc = Complex64::new(0.0, 0.0);
                for (&(k, d), c) in &self.terms {
                    let q_k = root_of_unity_pow(numerator, order, k);
                    acc += c.to_complex64() * q_k * mu.powi(d as i32);
                }
                acc
            }
        }
    }
}

fn rational_pow(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `e^{2πi·numerator·k / order}` with the phase reduced mod `order` first.
fn root_of_unity_pow(numerator: i64, order: u64, k: i64) -> Complex64 {
    let order_i = order as i128;
    let phase = ((numerator as i128 * k as i128) % order_i + order_i) % order_i;
    let angle = 2.0 * std::f64::consts::PI * (phase as f64) / (order as f64);
    Complex64::from_polar(1.0, angle)
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl<'a, 'b> Add<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'b Scalar) -> Scalar {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.insert_add(key, c.clone());
        }
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (&key, c) in &rhs.terms {
            self.insert_add(key, c.clone());
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl<'a, 'b> Sub<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'b Scalar) -> Scalar {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.insert_add(key, c.clone().neg());
        }
        out
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (&key, c) in &rhs.terms {
            self.insert_add(key, c.clone().neg());
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let terms = self
            .terms
            .into_iter()
            .map(|(k, c)| (k, c.neg()))
            .collect();
        Scalar { terms }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (&(k1, d1), c1) in &self.terms {
            for (&(k2, d2), c2) in &rhs.terms {
                out.insert_add((k1 + k2, d1 + d2), c1 * c2);
            }
        }
        out
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = (&*self) * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // mu-major, then ascending q exponent
        let mut keys: Vec<&TermKey> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut first = true;
        for &&(k, d) in &keys {
            let c = &self.terms[&(k, d)];
            let mut factors: Vec<String> = Vec::new();
            let coeff_str = c.to_string();
            let is_plain_one = coeff_str == "1";
            let is_plain_neg_one = coeff_str == "-1";
            if k != 0 {
                factors.push(if k == 1 {
                    "q".into()
                } else {
                    format!("q^{k}")
                });
            }
            if d != 0 {
                factors.push(if d == 1 {
                    "mu".into()
                } else {
                    format!("mu^{d}")
                });
            }
            let body = if factors.is_empty() {
                coeff_str.clone()
            } else if is_plain_one {
                factors.join("*")
            } else if is_plain_neg_one {
                format!("-{}", factors.join("*"))
            } else {
                let c_disp = if c.is_real() || c.re.is_zero() {
                    coeff_str.clone()
                } else {
                    format!("({coeff_str})")
                };
                format!("{}*{}", c_disp, factors.join("*"))
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(stripped) = body.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// JSON shape: [{"q": k, "mu": d, "re": "p/q", "im": "p/q"}, ...]
#[derive(Serialize, Deserialize)]
struct TermJson {
    q: i64,
    mu: u32,
    re: String,
    im: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(&(k, d), c)| TermJson {
                q: k,
                mu: d,
                re: c.re.to_string(),
                im: c.im.to_string(),
            })
            .collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(de)?;
        let mut out = Scalar::zero();
        for t in v {
            let re = BigRational::from_str(&t.re).map_err(D::Error::custom)?;
            let im = BigRational::from_str(&t.im).map_err(D::Error::custom)?;
            out.insert_add((t.q, t.mu), GaussianRational::new(re, im));
        }
        Ok(out)
    }
}

/// The four unit-modulus Gaussian rational points.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ExactQ {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "i")]
    I,
    #[serde(rename = "-i")]
    MinusI,
}

impl ExactQ {
    pub fn pow(self, k: i64) -> GaussianRational {
        // i^r for r in 0..4
        let i_pow = |r: i64| match r.rem_euclid(4) {
            0 => GaussianRational::from_int(1),
            1 => GaussianRational::i(),
            2 => GaussianRational::from_int(-1),
            _ => GaussianRational::i().neg(),
        };
        match self {
            ExactQ::One => GaussianRational::from_int(1),
            ExactQ::MinusOne => i_pow(2 * k),
            ExactQ::I => i_pow(k),
            ExactQ::MinusI => i_pow(-k),
        }
    }

    pub const ALL: [ExactQ; 4] = [ExactQ::One, ExactQ::MinusOne, ExactQ::I, ExactQ::MinusI];
}

impl FromStr for ExactQ {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "1" => Ok(ExactQ::One),
            "-1" => Ok(ExactQ::MinusOne),
            "i" => Ok(ExactQ::I),
            "-i" => Ok(ExactQ::MinusI),
            other => Err(format!("expected one of 1, -1, i, -i; got '{other}'")),
        }
    }
}

impl fmt::Display for ExactQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExactQ::One => "1",
            ExactQ::MinusOne => "-1",
            ExactQ::I => "i",
            ExactQ::MinusI => "-i",
        };
        write!(f, "{s}")
    }
}

/// Where `q` gets specialized: an exact point or `e^{2πi·numerator/order}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum QValue {
    ExactPoint(ExactQ),
    RootOfUnity { numerator: i64, order: u64 },
}

impl QValue {
    pub fn is_exact(&self) -> bool {
        matches!(self, QValue::ExactPoint(_))
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QValue::ExactPoint(p) => write!(f, "{p}"),
            QValue::RootOfUnity { numerator, order } => {
                write!(f, "e^(2*pi*i*{numerator}/{order})")
            }
        }
    }
}

/// Numeric specialization: `q` value, rational `mu`, and the tolerance
/// used by floating-point positivity verdicts.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NumericSpec {
    pub q: QValue,
    #[serde(with = "rational_string")]
    pub mu: BigRational,
    pub tolerance: f64,
}

impl NumericSpec {
    pub fn exact(q: ExactQ, mu: BigRational) -> Self {
        Self {
            q: QValue::ExactPoint(q),
            mu,
            tolerance: 1e-9,
        }
    }

    pub fn root_of_unity(numerator: i64, order: u64, mu: BigRational) -> Self {
        assert!(order >= 1, "order must be >= 1");
        Self {
            q: QValue::RootOfUnity { numerator, order },
            mu,
            tolerance: 1e-9,
        }
    }

    pub fn q_complex(&self) -> Complex64 {
        match self.q {
            QValue::ExactPoint(p) => p.pow(1).to_complex64(),
            QValue::RootOfUnity { numerator, order } => root_of_unity_pow(numerator, order, 1),
        }
    }
}

pub(crate) mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(de)?;
        BigRational::from_str(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> Scalar {
        Scalar::q_pow(k)
    }

    #[test]
    fn add_cancels_inverse() {
        let r = &q(1) + &q(1).neg();
        assert!(r.is_zero());
    }

    #[test]
    fn add_disjoint_terms() {
        let r = &Scalar::mu() + &q(2);
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.terms[&(0, 1)], GaussianRational::from_int(1));
        assert_eq!(r.terms[&(2, 0)], GaussianRational::from_int(1));
    }

    #[test]
    fn add_like_terms() {
        let half_q = Scalar::term(1, 0, GaussianRational::from_ratio(1, 2));
        assert_eq!(&half_q + &half_q, q(1));
    }

    #[test]
    fn mul_cancels_exponents() {
        assert_eq!(&q(1) * &q(-1), Scalar::one());
    }

    #[test]
    fn mul_i_mu_squared() {
        let imu = Scalar::mu().scale(&GaussianRational::i());
        let r = &imu * &imu;
        assert_eq!(r, Scalar::mu_pow(2).scale_int(-1));
    }

    #[test]
    fn mul_difference_of_squares() {
        let one_plus_q = &Scalar::one() + &q(1);
        let one_minus_q = &Scalar::one() - &q(1);
        assert_eq!(&one_plus_q * &one_minus_q, &Scalar::one() - &q(2));
    }

    #[test]
    fn conj_q_cubed() {
        assert_eq!(q(3).conj(), q(-3));
    }

    #[test]
    fn conj_i_mu() {
        let imu = Scalar::mu().scale(&GaussianRational::i());
        assert_eq!(imu.conj(), imu.clone().neg());
    }

    #[test]
    fn conj_is_involution() {
        let s = Scalar::term(3, 2, GaussianRational::new(
            BigRational::new(BigInt::from(2), BigInt::from(3)),
            BigRational::new(BigInt::from(-1), BigInt::from(5)),
        )) + Scalar::q_pow(-1);
        assert_eq!(s.conj().conj(), s);
    }

    #[test]
    fn conj_is_ring_homomorphism() {
        let a = &q(2) + &Scalar::mu().scale(&GaussianRational::i());
        let b = &q(-1) - &Scalar::from_ratio(1, 2);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn eval_exact_points() {
        let spec = NumericSpec::exact(ExactQ::I, BigRational::one());
        let r = q(2).eval(&spec);
        assert_eq!(r, Complex64::new(-1.0, 0.0));

        let spec = NumericSpec::exact(ExactQ::One, BigRational::from_integer(BigInt::from(3)));
        assert_eq!(Scalar::mu_pow(2).eval(&spec), Complex64::new(9.0, 0.0));
    }

    #[test]
    fn eval_eighth_root() {
        let spec = NumericSpec::root_of_unity(1, 8, BigRational::zero());
        let r = q(1).eval(&spec);
        let expected = Complex64::new(0.5f64.sqrt(), 0.5f64.sqrt());
        assert!((r - expected).norm() < 1e-12);
    }

    #[test]
    fn eval_commutes_with_mul_exact() {
        let a = &q(3) + &Scalar::mu();
        let b = &q(-2) + &Scalar::i();
        let spec = NumericSpec::exact(ExactQ::MinusI, BigRational::from_integer(BigInt::from(2)));
        let lhs = (&a * &b).eval(&spec);
        let rhs = a.eval(&spec) * b.eval(&spec);
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn eval_conj_is_complex_conj() {
        let a = &q(3).scale(&GaussianRational::i()) + &Scalar::mu();
        for spec in [
            NumericSpec::exact(ExactQ::I, BigRational::from_integer(BigInt::from(2))),
            NumericSpec::root_of_unity(3, 7, BigRational::from_integer(BigInt::from(2))),
        ] {
            let lhs = a.conj().eval(&spec);
            let rhs = a.eval(&spec).conj();
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn gaussian_literal_parsing() {
        let cases = [
            ("2", GaussianRational::from_int(2)),
            ("-1/2", GaussianRational::from_ratio(-1, 2)),
            ("i", GaussianRational::i()),
            ("-i", GaussianRational::i().neg()),
            (
                "1/2+1/3i",
                GaussianRational::new(
                    BigRational::new(BigInt::from(1), BigInt::from(2)),
                    BigRational::new(BigInt::from(1), BigInt::from(3)),
                ),
            ),
            ("1 - 2i", GaussianRational::new(
                BigRational::one(),
                BigRational::from_integer(BigInt::from(-2)),
            )),
        ];
        for (text, expected) in cases {
            assert_eq!(text.parse::<GaussianRational>().unwrap(), expected, "{text}");
        }
    }

    #[test]
    fn scalar_json_round_trip() {
        let s = Scalar::term(-2, 1, GaussianRational::from_ratio(3, 4))
            + Scalar::term(0, 0, GaussianRational::i());
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"q\""));
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display_is_readable() {
        let s = Scalar::mu_pow(2).scale_int(2) + Scalar::mu().scale_int(2);
        assert_eq!(s.to_string(), "2*mu^2 + 2*mu");
        assert_eq!(Scalar::q_pow(-1).to_string(), "q^-1");
        assert_eq!(Scalar::zero().to_string(), "0");
    }
}
