//! Degree-based indices: the classical Zagreb sums, the Narumi-Katayama
//! product and the two multiplicative Zagreb indices, kept exact.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tolerance for log-domain comparisons of non-integer powers.
pub const LOG_TOLERANCE: f64 = 1e-9;

/// Positive rational exponent `c = num / den`, always reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponent {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Exponent {
    pub const ONE: Exponent = Exponent { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidExponent(format!("{num}/{den} is not positive")));
        }
        let g = gcd(num, den);
        Ok(Exponent { num: num / g, den: den / g })
    }

    pub fn integer(c: u64) -> Result<Self> {
        Self::new(c, 1)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Default for Exponent {
    fn default() -> Self {
        Exponent::ONE
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidExponent(s.to_string());
        let (num, den) = match s.trim().split_once('/') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Exponent::new(num, den)
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexKind {
    Pi1c,
    Pi2,
}

/// A fully specified multiplicative index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Index {
    Pi1(Exponent),
    Pi2,
}

impl Index {
    pub fn kind(&self) -> IndexKind {
        match self {
            Index::Pi1(_) => IndexKind::Pi1c,
            Index::Pi2 => IndexKind::Pi2,
        }
    }

    pub fn evaluate(&self, g: &Graph) -> IndexValue {
        match *self {
            Index::Pi1(c) => multiplicative_zagreb_1(g, c),
            Index::Pi2 => multiplicative_zagreb_2(g),
        }
    }

    pub fn of_degrees(&self, degrees: &[usize]) -> IndexValue {
        match *self {
            Index::Pi1(c) => pi1_of_degrees(degrees, c),
            Index::Pi2 => pi2_of_degrees(degrees),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Pi1(c) => write!(f, "pi1[c={c}]"),
            Index::Pi2 => write!(f, "pi2"),
        }
    }
}

/// `(prod base^exp)^power`, stored factored. Bases of 1 are dropped.
#[derive(Clone, Debug)]
pub struct IndexValue {
    base: BTreeMap<u64, u64>,
    power: Exponent,
}

impl IndexValue {
    pub fn from_factors<I>(factors: I, power: Exponent) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut base = BTreeMap::new();
        for (b, e) in factors {
            if b != 1 && e != 0 {
                *base.entry(b).or_insert(0) += e;
            }
        }
        IndexValue { base, power }
    }

    pub fn one() -> Self {
        IndexValue { base: BTreeMap::new(), power: Exponent::ONE }
    }

    pub fn power(&self) -> Exponent {
        self.power
    }

    /// Factors of the integer under the power.
    pub fn base_factors(&self) -> Vec<(u64, u64)> {
        self.base.iter().map(|(&b, &e)| (b, e)).collect()
    }

    /// Factors of the value itself; exponents are scaled by an integer power.
    /// For a non-integer power these are the base factors.
    pub fn factors(&self) -> Vec<(u64, u64)> {
        let scale = if self.power.is_integer() { self.power.num } else { 1 };
        self.base.iter().map(|(&b, &e)| (b, e * scale)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.base.contains_key(&0)
    }

    /// The integer under the power.
    pub fn base_value(&self) -> BigUint {
        self.base.iter().fold(BigUint::one(), |acc, (&b, &e)| acc * Pow::pow(BigUint::from(b), e))
    }

    /// The exact value; `None` when the power is not an integer.
    pub fn exact(&self) -> Option<BigUint> {
        self.power.is_integer().then(|| Pow::pow(self.base_value(), self.power.num))
    }

    /// Natural logarithm of the value; `None` for zero.
    pub fn log_value(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        let s: f64 = self.base.iter().map(|(&b, &e)| e as f64 * (b as f64).ln()).sum();
        Some(self.power.as_f64() * s)
    }

    /// Exact ordering when available: both powers integral, or equal powers
    /// (then `x -> x^c` is strictly increasing and the bases decide).
    pub fn cmp_exact(&self, other: &Self) -> Option<Ordering> {
        if self.power == other.power {
            return Some(self.base_value().cmp(&other.base_value()));
        }
        match (self.exact(), other.exact()) {
            (Some(a), Some(b)) => Some(a.cmp(&b)),
            _ => None,
        }
    }

    /// Log-domain ordering; differences within `tol` count as equal.
    pub fn cmp_log(&self, other: &Self, tol: f64) -> Ordering {
        match (self.log_value(), other.log_value()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) if (a - b).abs() <= tol => Ordering::Equal,
            (Some(a), Some(b)) => a.partial_cmp(&b).expect("finite logs"),
        }
    }

    /// Exact ordering, falling back to the log domain.
    pub fn compare(&self, other: &Self) -> Ordering {
        self.cmp_exact(other).unwrap_or_else(|| self.cmp_log(other, LOG_TOLERANCE))
    }
}

impl PartialEq for IndexValue {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "({})^({})", self.base_value(), self.power),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IndexValue", 4)?;
        st.serialize_field("factors", &self.factors().iter().map(|&(b, e)| [b, e]).collect::<Vec<_>>())?;
        st.serialize_field("log", &self.log_value())?;
        st.serialize_field("exact", &self.exact().map(|v| v.to_string()))?;
        st.serialize_field("power", &self.power)?;
        st.end()
    }
}

fn degree_counts(degrees: &[usize]) -> BTreeMap<u64, u64> {
    let mut counts = BTreeMap::new();
    for &d in degrees {
        *counts.entry(d as u64).or_insert(0) += 1;
    }
    counts
}

/// `prod d^c` for a degree list.
pub fn pi1_of_degrees(degrees: &[usize], c: Exponent) -> IndexValue {
    IndexValue::from_factors(degree_counts(degrees), c)
}

/// `prod d^d` for a degree list (`0^0 = 1`).
pub fn pi2_of_degrees(degrees: &[usize]) -> IndexValue {
    IndexValue::from_factors(degree_counts(degrees).into_iter().map(|(d, cnt)| (d, d * cnt)), Exponent::ONE)
}

/// `M1 = sum d(v)^2`.
pub fn first_zagreb(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

/// `M2 = sum over edges d(u) d(v)`.
pub fn second_zagreb(g: &Graph) -> u64 {
    g.edges().map(|(u, v)| (g.degree(u) * g.degree(v)) as u64).sum()
}

/// `NK = prod d(v)`; zero when some vertex is isolated.
pub fn narumi_katayama(g: &Graph) -> BigUint {
    g.degrees().iter().fold(BigUint::one(), |acc, &d| acc * BigUint::from(d))
}

/// First multiplicative Zagreb index `prod d(v)^c`.
pub fn multiplicative_zagreb_1(g: &Graph, c: Exponent) -> IndexValue {
    pi1_of_degrees(&g.degrees(), c)
}

/// Second multiplicative Zagreb index, via the vertex form `prod d(v)^d(v)`.
pub fn multiplicative_zagreb_2(g: &Graph) -> IndexValue {
    pi2_of_degrees(&g.degrees())
}

/// Second multiplicative Zagreb index, via the edge form `prod d(u) d(v)`.
pub fn multiplicative_zagreb_2_edge_form(g: &Graph) -> IndexValue {
    IndexValue::from_factors(
        g.edges().flat_map(|(u, v)| [(g.degree(u) as u64, 1), (g.degree(v) as u64, 1)]),
        Exponent::ONE,
    )
}

/// Orders two first-index values that share the exponent. Only the
/// underlying integers are compared, so no floating point is involved.
pub fn compare_pi1(a: &IndexValue, b: &IndexValue) -> Result<Ordering> {
    if a.power != b.power {
        return Err(Error::ExponentMismatch(a.power.to_string(), b.power.to_string()));
    }
    Ok(a.base_value().cmp(&b.base_value()))
}

/// `x / (x + m)`.
pub fn fact1_ratio(x: u64, m: u64) -> BigRational {
    assert!(m > 0, "m must be positive");
    BigRational::new(x.into(), (x + m).into())
}

/// `x^x / (x + m)^(x + m)` with `0^0 = 1`.
pub fn fact2_ratio(x: u64, m: u64) -> BigRational {
    assert!(m > 0, "m must be positive");
    let num = if x == 0 { BigUint::one() } else { Pow::pow(BigUint::from(x), x) };
    let den = Pow::pow(BigUint::from(x + m), x + m);
    BigRational::new(num.into(), den.into())
}

/// `ln` of a big integer, accurate for values far beyond `f64` range.
pub fn ln_biguint(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (v >> shift).to_f64().expect("64-bit mantissa");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
