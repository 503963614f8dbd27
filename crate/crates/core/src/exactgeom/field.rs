//! Exact arithmetic in the real quadratic field Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An element `a + b√5` with rational `a` and `b`.
///
/// Both components are kept as reduced [`BigRational`]s, so structural
/// equality and hashing coincide with numerical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    a: BigRational,
    b: BigRational,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl FieldElement {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        FieldElement { a, b }
    }

    /// `an/ad + (bn/bd)√5` from machine integers.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        FieldElement::new(ratio(an, ad), ratio(bn, bd))
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_rational(a: BigRational) -> Self {
        FieldElement::new(a, BigRational::zero())
    }

    pub fn zero() -> Self {
        FieldElement::default()
    }

    pub fn one() -> Self {
        FieldElement::from_int(1)
    }

    pub fn sqrt5() -> Self {
        FieldElement::new(BigRational::zero(), BigRational::one())
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn tau() -> Self {
        FieldElement::from_ratios(1, 2, 1, 2)
    }

    /// Rational part.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √5.
    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b√5`.
    pub fn conjugate(&self) -> Self {
        FieldElement::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - ratio(5, 1) * &self.b * &self.b
    }

    /// Exact sign, decided without floating point.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // Mixed signs: the larger of a² and 5b² wins.
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = ratio(5, 1) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        let n = self.norm();
        if n.is_zero() {
            // a² = 5b² only has the trivial rational solution.
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        FieldElement::new(&self.a * k, &self.b * k)
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let five = ratio(5, 1);
        FieldElement::new(
            &self.a * &rhs.a + five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(-self.a, -self.b)
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl fmt::Display for FieldElement {
    /// Renders as `a`, `b√5` or `a+b√5` / `a-b√5`, rationals as `n/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn surd(f: &mut fmt::Formatter<'_>, b: &BigRational) -> fmt::Result {
            if b.is_one() {
                write!(f, "√5")
            } else {
                write!(f, "{b}√5")
            }
        }
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_negative() {
                    write!(f, "-")?;
                }
                surd(f, &self.b.abs())
            }
            (false, false) => {
                write!(f, "{}{}", self.a, if self.b.is_negative() { "-" } else { "+" })?;
                surd(f, &self.b.abs())
            }
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a rational literal: `n`, `n/d` or a finite decimal `i.f`.
fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let n: BigInt = digits.parse().ok()?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(n, d);
        return Some(if neg { -r } else { r });
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

impl FromStr for FieldElement {
    type Err = Error;

    /// Accepts `tau`, rationals (`3`, `-2/7`, `1.25`), surds (`√5`, `1/2√5`,
    /// `sqrt5`, `r5`) and sums such as `1/2+1/2√5` or `2-√5`.
    fn from_str(input: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not an element of Q(√5): {input:?}"));
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = s.to_ascii_lowercase();
        if lower == "tau" || lower == "phi" || lower == "τ" || lower == "φ" {
            return Ok(FieldElement::tau());
        }
        let s = s.replace("sqrt5", "√5").replace("sqrt(5)", "√5").replace("r5", "√5");
        if s.is_empty() {
            return Err(bad());
        }
        // Split into signed terms at +/- that do not start the string.
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in s.char_indices() {
            if i > start && (c == '+' || c == '-') {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        if terms.len() > 2 {
            return Err(bad());
        }
        let mut value = FieldElement::zero();
        let mut seen_rational = false;
        let mut seen_surd = false;
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            let signed = |r: BigRational| if sign < 0 { -r } else { r };
            if let Some(coef) = body.strip_suffix("√5") {
                if seen_surd {
                    return Err(bad());
                }
                seen_surd = true;
                let coef = coef.trim_end_matches('*');
                let c = if coef.is_empty() {
                    BigRational::one()
                } else {
                    parse_rational(coef).ok_or_else(bad)?
                };
                value.b = signed(c);
            } else {
                if seen_rational {
                    return Err(bad());
                }
                seen_rational = true;
                value.a = signed(parse_rational(body).ok_or_else(bad)?);
            }
        }
        Ok(value)
    }
}

/// Serialized as the exact literal, e.g. `"1/2+1/2√5"`.
impl serde::Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FieldElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
