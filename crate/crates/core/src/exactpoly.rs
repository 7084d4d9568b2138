//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A polynomial in one variable with coefficients in the rationals.
///
/// Coefficients are stored in ascending order of degree. The highest stored
/// coefficient is never zero, so the zero polynomial has no coefficients at
/// all, and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from small integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// `(x - 1)^d`, expanded.
    pub fn shifted_power(d: u32) -> Self {
        Self::from_ints(&[-1, 1]).pow(d)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    /// Least common multiple of the coefficient denominators (1 for the zero
    /// polynomial) together with the integer coefficients it produces.
    pub fn to_common_denominator(&self) -> (BigInt, Vec<BigInt>) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        (den, ints)
    }

    pub fn from_common_denominator(den: &BigInt, coeffs: &[BigInt]) -> Result<Self> {
        if !den.is_positive() {
            return Err(Error::domain("common denominator must be positive"));
        }
        Ok(Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::new(c.clone(), den.clone()))
                .collect(),
        ))
    }

    /// `{"den": D, "coeffs": [c0, c1, ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    /// Human-readable form with descending powers.
    ///
    /// A non-trivial common denominator `D` is pulled out front as `(1/D)(...)`.
    /// With `ascii` the variable is written `x` and minus signs as `-`;
    /// otherwise `λ` and `−`.
    pub fn render(&self, ascii: bool) -> String {
        let (var, minus) = if ascii { ("x", "-") } else { ("\u{3bb}", "\u{2212}") };
        if self.is_zero() {
            return "0".to_string();
        }
        let (den, ints) = self.to_common_denominator();
        let mut out = String::new();
        for (i, c) in ints.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push_str(minus);
                }
            } else {
                out.push_str(if c.is_negative() { " " } else { " + " });
                if c.is_negative() {
                    out.push_str(minus);
                    out.push(' ');
                }
            }
            if i == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        if den.is_one() {
            out
        } else {
            format!("(1/{den})({out})")
        }
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        RationalPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        -&self
    }
}

impl std::iter::Sum for RationalPoly {
    fn sum<I: Iterator<Item = RationalPoly>>(iter: I) -> Self {
        iter.fold(RationalPoly::zero(), |acc, p| &acc + &p)
    }
}

/// Wire form: `{"den": D, "coeffs": [c0, c1, ...]}` with integer entries,
/// where `D` is the lcm of the reduced coefficient denominators.
#[derive(Serialize, Deserialize)]
struct PolyWire {
    den: serde_json::Number,
    coeffs: Vec<serde_json::Number>,
}

fn big_to_number(v: &BigInt) -> serde_json::Number {
    v.to_string().parse().expect("decimal integers are valid JSON numbers")
}

fn number_to_big(n: &serde_json::Number) -> std::result::Result<BigInt, String> {
    n.to_string()
        .parse::<BigInt>()
        .map_err(|_| format!("expected an integer, found {n}"))
}

impl Serialize for RationalPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (den, ints) = self.to_common_denominator();
        PolyWire {
            den: big_to_number(&den),
            coeffs: ints.iter().map(big_to_number).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = PolyWire::deserialize(deserializer)?;
        let den = number_to_big(&wire.den).map_err(D::Error::custom)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(number_to_big)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        RationalPoly::from_common_denominator(&den, &coeffs).map_err(D::Error::custom)
    }
}
