//! Truncated power series in one variable `q` with exact rational coefficients,
//! and the q-Pochhammer products built on top of them.
//!
//! A [`Series`] of order `N` stores exactly the coefficients of `q^0 ..= q^N`.
//! Binary operations require both operands to have the same order; use
//! [`Series::truncate`] to bring a longer series down first.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Add,
    Sub,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `coeff * q^exp`, which is the zero series when `exp > order`.
    pub fn monomial(coeff: BigRational, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Builds a series from its coefficient list; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Series { coeffs }
    }

    pub fn from_integers<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            values
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Shortens the series to `order`. Extending is not possible since the
    /// dropped information does not exist.
    pub fn truncate(&self, order: usize) -> Result<Series> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                lhs: self.order(),
                rhs: order,
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, rhs: &Series) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch {
                lhs: self.order(),
                rhs: rhs.order(),
            });
        }
        Ok(())
    }

    pub fn combine(&self, rhs: &Series, op: CombineOp) -> Result<Series> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| match op {
                CombineOp::Add => a + b,
                CombineOp::Sub => a - b,
            })
            .collect();
        Ok(Series { coeffs })
    }

    pub fn add(&self, rhs: &Series) -> Result<Series> {
        self.combine(rhs, CombineOp::Add)
    }

    pub fn sub(&self, rhs: &Series) -> Result<Series> {
        self.combine(rhs, CombineOp::Sub)
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Series) -> Result<Series> {
        self.check_order(rhs)?;
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    pub fn scale(&self, factor: &BigRational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `q^k`, dropping whatever falls past the order.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        if k <= n {
            out[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse up to the order. Requires a nonzero constant term.
    pub fn invert(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let n = self.order();
        let inv_c0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv_c0.clone());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &out[k - j];
                }
            }
            out.push(-(acc * &inv_c0));
        }
        Ok(Series { coeffs: out })
    }

    /// In-place multiplication by the binomial `1 - sign * q^exp`.
    pub fn mul_binomial(&mut self, sign: Sign, exp: usize) {
        let n = self.order();
        if exp == 0 {
            let factor = BigRational::one() - sign.value();
            for c in &mut self.coeffs {
                *c *= &factor;
            }
            return;
        }
        for i in (exp..=n).rev() {
            let lower = self.coeffs[i - exp].clone();
            match sign {
                Sign::Plus => self.coeffs[i] -= lower,
                Sign::Minus => self.coeffs[i] += lower,
            }
        }
    }

    /// In-place division by the binomial `1 - sign * q^exp`.
    pub fn div_binomial(&mut self, sign: Sign, exp: usize) -> Result<()> {
        let n = self.order();
        if exp == 0 {
            let factor = BigRational::one() - sign.value();
            if factor.is_zero() {
                return Err(Error::NotAUnit);
            }
            let inv = factor.recip();
            for c in &mut self.coeffs {
                *c *= &inv;
            }
            return Ok(());
        }
        for i in exp..=n {
            let lower = self.coeffs[i - exp].clone();
            match sign {
                Sign::Plus => self.coeffs[i] += lower,
                Sign::Minus => self.coeffs[i] -= lower,
            }
        }
        Ok(())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Integer coefficients, or `None` if some coefficient is a proper fraction.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Integer coefficients as `i64`; convenient in tests.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.to_integers()?.iter().map(ToPrimitive::to_i64).collect()
    }

    /// True when the series has nonnegative integer coefficients, as every
    /// counting series must.
    pub fn is_counting(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => s.trim().parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(c))?;
        }
        f.write_str("]")
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} requires {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad coefficient `{s}`"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Series { coeffs })
    }
}

/// The sign in `(∓q^a; q^t)`: `Plus` gives factors `1 - q^e`, `Minus` gives `1 + q^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> BigRational {
        match self {
            Sign::Plus => BigRational::one(),
            Sign::Minus => -BigRational::one(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(u32),
    Unbounded,
}

/// A q-Pochhammer symbol `(sign q^start; q^step)_count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PochSpec {
    pub sign: Sign,
    pub start: u32,
    pub step: u32,
    pub count: Count,
}

impl PochSpec {
    /// `(q^start; q^step)_∞`
    pub fn inf(start: u32, step: u32) -> Self {
        PochSpec {
            sign: Sign::Plus,
            start,
            step,
            count: Count::Unbounded,
        }
    }

    /// `(-q^start; q^step)_∞`
    pub fn neg_inf(start: u32, step: u32) -> Self {
        PochSpec {
            sign: Sign::Minus,
            ..Self::inf(start, step)
        }
    }

    /// `(q^start; q^step)_count`
    pub fn finite(start: u32, step: u32, count: u32) -> Self {
        PochSpec {
            sign: Sign::Plus,
            start,
            step,
            count: Count::Finite(count),
        }
    }

    /// `(-q^start; q^step)_count`
    pub fn neg_finite(start: u32, step: u32, count: u32) -> Self {
        PochSpec {
            sign: Sign::Minus,
            ..Self::finite(start, step, count)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.step == 0 {
            return Err(Error::InvalidPochSpec("step must be at least 1".into()));
        }
        if self.count == Count::Unbounded && self.start == 0 && self.sign == Sign::Plus {
            return Err(Error::InvalidPochSpec(
                "(1; q^t)_inf is identically zero".into(),
            ));
        }
        Ok(())
    }

    /// Factor exponents that can influence a series truncated at `order`.
    /// A zero exponent is always reported since it contributes a constant.
    fn exponents(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        let limit = match self.count {
            Count::Finite(n) => n as usize,
            Count::Unbounded => usize::MAX,
        };
        (0..limit)
            .map(move |k| self.start as usize + k * self.step as usize)
            .take_while(move |&e| e == 0 || e <= order)
    }
}

impl fmt::Display for PochSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => "",
            Sign::Minus => "-",
        };
        let count = match self.count {
            Count::Finite(n) => n.to_string(),
            Count::Unbounded => "inf".to_string(),
        };
        write!(f, "({sign}q^{}; q^{})_{count}", self.start, self.step)
    }
}

/// Expands `spec` as a series truncated at `order`.
pub fn pochhammer(spec: &PochSpec, order: usize) -> Result<Series> {
    spec.validate()?;
    let mut s = Series::one(order);
    for e in spec.exponents(order) {
        s.mul_binomial(spec.sign, e);
    }
    Ok(s)
}

/// Multiplies `acc` by `spec` (or divides when `divide` is set) in place.
fn apply_pochhammer(acc: &mut Series, spec: &PochSpec, divide: bool) -> Result<()> {
    spec.validate()?;
    let order = acc.order();
    for e in spec.exponents(order) {
        if divide {
            acc.div_binomial(spec.sign, e)?;
        } else {
            acc.mul_binomial(spec.sign, e);
        }
    }
    Ok(())
}

/// `∏ numerator / ∏ denominator`, truncated at `order`.
pub fn product_expr(numerator: &[PochSpec], denominator: &[PochSpec], order: usize) -> Result<Series> {
    let mut acc = Series::one(order);
    for spec in numerator {
        apply_pochhammer(&mut acc, spec, false)?;
    }
    for spec in denominator {
        apply_pochhammer(&mut acc, spec, true)?;
    }
    Ok(acc)
}
