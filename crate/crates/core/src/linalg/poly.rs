use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LinalgError;

/// Dense univariate polynomial over the integers, coefficients in ascending
/// degree. The coefficient vector never ends in a zero; the zero polynomial
/// has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x + c`.
    pub fn x_plus<C: Into<BigInt>>(c: C) -> Self {
        Self::new(vec![c.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient `q` with `self = divisor * q` exactly.
    ///
    /// Fails with `InexactDivision` when the remainder is nonzero or when a
    /// long-division step would leave the integers.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LinalgError> {
        let (q, r) = self.div_rem_integral(divisor)?;
        if !r.is_zero() {
            return Err(LinalgError::InexactDivision(format!(
                "({self}) / ({divisor}) leaves remainder {r}"
            )));
        }
        Ok(q)
    }

    /// Long division staying inside the integers; stops with an error as soon
    /// as the leading coefficient of the running remainder is not divisible by
    /// the divisor's leading coefficient.
    fn div_rem_integral(&self, divisor: &Self) -> Result<(Self, Self), LinalgError> {
        let Some(dd) = divisor.degree() else {
            return Err(LinalgError::InexactDivision("division by the zero polynomial".into()));
        };
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(LinalgError::InexactDivision(format!(
                    "({self}) / ({divisor}): coefficient {top} not divisible by {lead}"
                )));
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Largest coefficient bit length.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.abs().bits()).max().unwrap_or(0)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;

            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Mul<&BigInt> for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, k: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<String>,
}

fn parse_coeffs<E: serde::de::Error>(coeffs: &[String]) -> Result<Vec<BigInt>, E> {
    coeffs.iter().map(|s| s.parse::<BigInt>().map_err(E::custom)).collect()
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr { coeffs: self.coeffs.iter().map(BigInt::to_string).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        Ok(IntPolynomial::new(parse_coeffs(&repr.coeffs)?))
    }
}

/// A product of polynomial factors with multiplicities, kept unexpanded so
/// closed forms print the way they were assembled.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FactoredPoly {
    factors: Vec<(IntPolynomial, u64)>,
}

impl FactoredPoly {
    pub fn new() -> Self {
        FactoredPoly { factors: Vec::new() }
    }

    /// Appends `factor^mult`. A zero multiplicity contributes nothing and is
    /// dropped, which lets closed forms pass exponents such as `(α−1)(β−1)`
    /// straight through.
    pub fn with(mut self, factor: IntPolynomial, mult: u64) -> Self {
        self.push(factor, mult);
        self
    }

    pub fn push(&mut self, factor: IntPolynomial, mult: u64) {
        if mult > 0 {
            self.factors.push((factor, mult));
        }
    }

    pub fn factors(&self) -> &[(IntPolynomial, u64)] {
        &self.factors
    }

    /// Degree of the expansion, `Σ mult·deg`. `None` if any factor is zero.
    pub fn degree(&self) -> Option<usize> {
        self.factors
            .iter()
            .map(|(f, m)| f.degree().map(|d| d * (*m as usize)))
            .sum()
    }

    pub fn expand(&self) -> IntPolynomial {
        self.factors.iter().fold(IntPolynomial::one(), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (p, m) in &self.factors {
            write!(f, "({p})")?;
            if *m != 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactoredPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct FactorRepr {
    coeffs: Vec<String>,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct FactoredRepr {
    factors: Vec<FactorRepr>,
}

impl Serialize for FactoredPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FactoredRepr {
            factors: self
                .factors
                .iter()
                .map(|(p, m)| FactorRepr {
                    coeffs: p.coeffs.iter().map(BigInt::to_string).collect(),
                    mult: *m,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactoredPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = FactoredRepr::deserialize(d)?;
        let mut out = FactoredPoly::new();
        for fr in repr.factors {
            if fr.mult == 0 {
                return Err(D::Error::custom("factor multiplicity must be positive"));
            }
            out.push(IntPolynomial::new(parse_coeffs(&fr.coeffs)?), fr.mult);
        }
        Ok(out)
    }
}
