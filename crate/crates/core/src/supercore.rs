//! Parities, weights, Koszul signs and exact scalars.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `p` or `p/q`, always reduced.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// (−1)^e
pub fn sign_pow(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Self {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// (−1)^{|a||b|}
    pub fn sign_with(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl std::iter::Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::Even, |a, b| a + b)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Sign picked up by transposing two adjacent factors of the superexterior algebra:
/// −(−1)^{|a||b|}, i.e. −1 unless both are odd.
pub fn swap_sign(a: Parity, b: Parity) -> i64 {
    -a.sign_with(b)
}

/// Sign accumulated by moving every element of `right` leftwards past every element of `left`.
pub fn koszul_sign(left: &[Parity], right: &[Parity]) -> i64 {
    right
        .iter()
        .flat_map(|r| left.iter().map(move |l| swap_sign(*l, *r)))
        .product()
}

/// The formal symbols a weight is written in, e.g. ε₁…ε_m, δ₁…δ_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymbolSystem {
    pub name: String,
    pub symbols: Vec<String>,
}

impl SymbolSystem {
    pub fn standard(m: usize, n: usize) -> Arc<Self> {
        let symbols = (1..=m)
            .map(|i| format!("ε{i}"))
            .chain((1..=n).map(|j| format!("δ{j}")))
            .collect();
        Arc::new(SymbolSystem { name: format!("ε{m}δ{n}"), symbols })
    }

    pub fn epsilon(n: usize) -> Arc<Self> {
        let symbols = (1..=n).map(|i| format!("ε{i}")).collect();
        Arc::new(SymbolSystem { name: format!("ε{n}"), symbols })
    }

    pub fn formal(name: &str, symbols: &[&str]) -> Arc<Self> {
        Arc::new(SymbolSystem {
            name: name.to_string(),
            symbols: symbols.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }
}

/// A torus weight: exact rational coefficients over a symbol system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    tag: Arc<SymbolSystem>,
    coeffs: Vec<Rational>,
}

impl Weight {
    pub fn new(tag: Arc<SymbolSystem>, coeffs: Vec<Rational>) -> Self {
        assert_eq!(tag.len(), coeffs.len(), "weight length does not match its symbol system");
        Weight { tag, coeffs }
    }

    pub fn from_ints(tag: Arc<SymbolSystem>, coeffs: &[i64]) -> Self {
        Weight::new(tag, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(tag: Arc<SymbolSystem>) -> Self {
        let coeffs = vec![Rational::zero(); tag.len()];
        Weight { tag, coeffs }
    }

    /// The weight of a single symbol.
    pub fn unit(tag: Arc<SymbolSystem>, index: usize) -> Self {
        let mut w = Weight::zero(tag);
        w.coeffs[index] = Rational::one();
        w
    }

    pub fn tag(&self) -> &Arc<SymbolSystem> {
        &self.tag
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight { tag: self.tag.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Re-express in a smaller symbol system, dropping symbols it lacks. Fails if a dropped
    /// symbol carries a nonzero coefficient.
    pub fn restrict(&self, target: &Arc<SymbolSystem>) -> Option<Weight> {
        for (sym, c) in self.tag.symbols.iter().zip(&self.coeffs) {
            if target.index_of(sym).is_none() && !c.is_zero() {
                return None;
            }
        }
        self.embed(target)
    }

    /// Re-express in a system containing every symbol that carries a nonzero coefficient.
    pub fn embed(&self, target: &Arc<SymbolSystem>) -> Option<Weight> {
        let mut out = Weight::zero(target.clone());
        for (sym, c) in self.tag.symbols.iter().zip(&self.coeffs) {
            match target.index_of(sym) {
                Some(i) => out.coeffs[i] = c.clone(),
                None if c.is_zero() => {}
                None => return None,
            }
        }
        Some(out)
    }

    pub fn label(&self) -> String {
        let mut out = String::new();
        for (sym, c) in self.tag.symbols.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&format_rational(&a));
            }
            out.push_str(sym);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.tag.cmp(&other.tag).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &'a Weight) -> Weight {
        assert_eq!(self.tag, rhs.tag, "adding weights from different symbol systems");
        Weight {
            tag: self.tag.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &'a Weight) -> Weight {
        assert_eq!(self.tag, rhs.tag, "subtracting weights from different symbol systems");
        Weight {
            tag: self.tag.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { tag: self.tag.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// Integer image of a weight, scaled by a common denominator; cheap to hash and add.
pub type WeightKey = Box<[i64]>;

/// Converts weights of one symbol system to [`WeightKey`]s and back.
#[derive(Clone, Debug)]
pub struct Keyer {
    tag: Arc<SymbolSystem>,
    denom: i64,
}

impl Keyer {
    pub fn new<'a>(tag: Arc<SymbolSystem>, weights: impl IntoIterator<Item = &'a Weight>) -> Self {
        let mut denom = BigInt::one();
        for w in weights {
            for c in &w.coeffs {
                denom = denom.lcm(c.denom());
            }
        }
        Keyer { tag, denom: denom.to_i64().expect("weight denominators overflow i64") }
    }

    pub fn key(&self, w: &Weight) -> WeightKey {
        debug_assert_eq!(w.tag, self.tag);
        w.coeffs
            .iter()
            .map(|c| {
                let scaled = c * Rational::from_integer(BigInt::from(self.denom));
                assert!(scaled.is_integer(), "weight not on the keyed lattice");
                scaled.to_integer().to_i64().expect("weight coefficient overflows i64")
            })
            .collect()
    }

    pub fn zero(&self) -> WeightKey {
        vec![0; self.tag.len()].into_boxed_slice()
    }

    pub fn weight(&self, key: &[i64]) -> Weight {
        Weight {
            tag: self.tag.clone(),
            coeffs: key.iter().map(|&c| ratio(c, self.denom)).collect(),
        }
    }
}

pub fn key_add(a: &mut [i64], b: &[i64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

pub fn key_sub(a: &mut [i64], b: &[i64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_examples() {
        use Parity::*;
        assert_eq!(koszul_sign(&[Even], &[Even]), -1);
        assert_eq!(koszul_sign(&[Odd], &[Odd]), 1);
        assert_eq!(koszul_sign(&[Even, Odd], &[Odd]), -1);
        assert_eq!(koszul_sign(&[], &[Odd, Even]), 1);
    }

    #[test]
    fn half_integral_weights_are_exact() {
        let tag = SymbolSystem::formal("F4", &["ε1", "ε2", "ε3", "ε4"]);
        let half = ratio(1, 2);
        let w = Weight::new(tag.clone(), vec![half.clone(), half.clone(), half.clone(), half]);
        let twice = &w + &w;
        assert_eq!(twice, Weight::from_ints(tag.clone(), &[1, 1, 1, 1]));
        assert_eq!(w.label(), "1/2ε1+1/2ε2+1/2ε3+1/2ε4");
        let keyer = Keyer::new(tag, [&w]);
        assert_eq!(&*keyer.key(&w), &[1, 1, 1, 1]);
        assert_eq!(keyer.weight(&keyer.key(&w)), w);
    }

    #[test]
    fn systems_are_not_confused() {
        let a = Weight::zero(SymbolSystem::standard(3, 2));
        let b = Weight::zero(SymbolSystem::standard(2, 3));
        assert_ne!(a, b);
    }

    #[test]
    fn restrict_and_embed() {
        let big = SymbolSystem::standard(3, 3);
        let small = SymbolSystem::standard(2, 3);
        let w = Weight::from_ints(big.clone(), &[1, -1, 0, 0, 0, 1]);
        let r = w.restrict(&small).unwrap();
        assert_eq!(r.label(), "ε1-ε2+δ3");
        assert_eq!(r.embed(&big).unwrap(), w);
        let bad = Weight::from_ints(big, &[0, 0, 1, 0, 0, 0]);
        assert!(bad.restrict(&small).is_none());
    }

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-3", "7/2", "-1/3"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_none());
    }
}
