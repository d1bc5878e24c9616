//! Exact arithmetic in Q(q), the field of rational functions in the quantum
//! parameter.
//!
//! A [`Scalar`] is kept in a canonical form `q^unit * num/den` where `num` and
//! `den` are integer polynomials in `q` with nonzero constant terms, reduced so
//! that `gcd(num, den) = 1` in Z[q] (including integer content) and the leading
//! coefficient of `den` is positive.  Two scalars are equal iff their
//! representations are identical, so equality is a structural check.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
}

/// Dense integer polynomial in `q`.  Coefficient `i` is the coefficient of
/// `q^i`; the vector carries no trailing zeros and the zero polynomial is the
/// empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// `q^n` for `n >= 0`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Lowest index with a nonzero coefficient; 0 for the zero polynomial.
    pub fn trailing_degree(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Divide by `q^n`; the lowest `n` coefficients must be zero.
    fn shift_down(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        debug_assert!(self.coeffs[..n].iter().all(|c| c.is_zero()));
        Poly::new(self.coeffs[n..].to_vec())
    }

    fn shift_up(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num::integer::gcd(g, c.clone());
        }
        g
    }

    fn primitive_part(&self) -> Poly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Poly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder of `self` by `other` (primitive PRS step).
    fn pseudo_rem(&self, other: &Poly) -> Poly {
        debug_assert!(!other.is_zero());
        let mut rem = self.clone();
        let d = other.degree();
        let lc = other.leading();
        while !rem.is_zero() && rem.degree() >= d {
            let k = rem.degree() - d;
            // lc * rem - rem.leading() * q^k * other
            let scaled_rem = Poly::new(rem.coeffs.iter().map(|c| c * &lc).collect());
            let sub = other.shift_up(k);
            let rl = rem.leading();
            let sub = Poly::new(sub.coeffs.iter().map(|c| c * &rl).collect());
            rem = scaled_rem.sub(&sub);
            if !rem.is_zero() && rem.degree() == d + k {
                // leading terms must have cancelled
                unreachable!("pseudo-division failed to reduce degree");
            }
        }
        rem
    }

    /// gcd in Z[q], including integer content, normalized to positive leading
    /// coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.positive_leading();
        }
        if other.is_zero() {
            return self.positive_leading();
        }
        let content = num::integer::gcd(self.content(), other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        let g = a.positive_leading();
        Poly::new(g.coeffs.iter().map(|c| c * &content).collect())
    }

    fn positive_leading(&self) -> Poly {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact division; panics if `other` does not divide `self` in Q[q] with
    /// an integer quotient.  Only called with divisors obtained from `gcd`.
    pub fn div_exact(&self, other: &Poly) -> Poly {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Poly::zero();
        }
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let d = other.degree();
        let lc = BigRational::from_integer(other.leading());
        let mut quot = vec![BigRational::zero(); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, oc) in other.coeffs.iter().enumerate() {
                let t = &c * BigRational::from_integer(oc.clone());
                rem[k + j] = &rem[k + j] - t;
            }
            quot[k] = c;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Poly::new(
            quot.into_iter()
                .map(|c| {
                    assert!(c.is_integer(), "non-integer quotient in exact division");
                    c.to_integer()
                })
                .collect(),
        )
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        acc
    }
}

/// An element of Q(q) in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    unit_exponent: i64,
    numerator: Poly,
    denominator: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            unit_exponent: 0,
            numerator: Poly::zero(),
            denominator: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::normalize_parts(Poly::constant(BigInt::from(n)), Poly::one(), 0)
    }

    /// `q^e`.
    pub fn q_power(e: i64) -> Self {
        Scalar {
            unit_exponent: e,
            numerator: Poly::one(),
            denominator: Poly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.unit_exponent == 0 && self.numerator == Poly::one() && self.denominator == Poly::one()
    }

    pub fn unit_exponent(&self) -> i64 {
        self.unit_exponent
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// Canonical form of `q^unit * num/den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalize_parts(num, den, 0))
    }

    fn normalize_parts(num: Poly, den: Poly, unit: i64) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        let tn = num.trailing_degree();
        let td = den.trailing_degree();
        let num = num.shift_down(tn);
        let den = den.shift_down(td);
        let unit = unit + tn as i64 - td as i64;
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Scalar {
            unit_exponent: unit,
            numerator: num,
            denominator: den,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.unit_exponent.min(other.unit_exponent);
        let a = self
            .numerator
            .shift_up((self.unit_exponent - e) as usize)
            .mul(&other.denominator);
        let b = other
            .numerator
            .shift_up((other.unit_exponent - e) as usize)
            .mul(&self.denominator);
        Scalar::normalize_parts(a.add(&b), self.denominator.mul(&other.denominator), e)
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            unit_exponent: if self.is_zero() { 0 } else { self.unit_exponent },
            numerator: self.numerator.neg(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        Scalar::normalize_parts(
            self.numerator.mul(&other.numerator),
            self.denominator.mul(&other.denominator),
            self.unit_exponent + other.unit_exponent,
        )
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        Ok(Scalar::normalize_parts(
            self.numerator.mul(&other.denominator),
            self.denominator.mul(&other.numerator),
            self.unit_exponent - other.unit_exponent,
        ))
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        Scalar::one().div(self)
    }

    /// The q-integer `[n]_{q^d} = (q^{nd} - q^{-nd})/(q^d - q^{-d})`.
    pub fn q_integer(n: i64, d: u64) -> Scalar {
        if n == 0 {
            return Scalar::zero();
        }
        let (n_abs, sign) = if n > 0 { (n, 1) } else { (-n, -1) };
        // geometric sum q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
        let mut acc = Scalar::zero();
        for k in 0..n_abs {
            acc = acc.add(&Scalar::q_power((n_abs - 1 - 2 * k) * d as i64));
        }
        if sign < 0 {
            acc = acc.neg();
        }
        acc
    }

    /// q-binomial coefficient `[m choose k]_{q^d}`.
    pub fn q_binomial(m: i64, k: i64, d: u64) -> Scalar {
        assert!(k >= 0 && m >= k);
        let mut acc = Scalar::one();
        for j in 0..k {
            acc = acc
                .mul(&Scalar::q_integer(m - j, d))
                .div(&Scalar::q_integer(j + 1, d))
                .expect("q-integer denominators are nonzero");
        }
        acc
    }

    /// Numeric value at `q = q0`.  `q0` must be nonzero and off the poles.
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if q0.is_zero() {
            return Err(ScalarError::Pole("0".into()));
        }
        let den = self.denominator.eval(q0);
        if den.is_zero() {
            return Err(ScalarError::Pole(q0.to_string()));
        }
        let mut val = self.numerator.eval(q0) / den;
        let e = self.unit_exponent;
        let p = q0_pow(q0, e.unsigned_abs());
        if e >= 0 {
            val *= p;
        } else {
            val /= p;
        }
        Ok(val)
    }
}

fn q0_pow(q0: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= q0;
    }
    acc
}

fn fmt_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for i in (0..=p.degree()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = c.abs();
        if i == 0 {
            write!(f, "{}", a)?;
        } else {
            if !a.is_one() {
                write!(f, "{}*", a)?;
            }
            if i == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{}", i)?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

struct PolyDisplay<'a>(&'a Poly);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self.0, f)
    }
}

impl fmt::Display for Scalar {
    /// Renders in the textual scalar syntax; re-parsing yields the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = vec![];
        if self.unit_exponent != 0 {
            if self.unit_exponent == 1 {
                parts.push("q".into());
            } else {
                parts.push(format!("q^{}", self.unit_exponent));
            }
        }
        let num_simple = self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        let num_is_one = self.numerator == Poly::one();
        if !num_is_one || parts.is_empty() || !self.denominator.is_one() {
            if num_simple {
                parts.push(format!("{}", PolyDisplay(&self.numerator)));
            } else {
                parts.push(format!("({})", PolyDisplay(&self.numerator)));
            }
        }
        let mut out = parts.join("*");
        if !self.denominator.is_one() {
            let den_simple = self
                .denominator
                .coeffs()
                .iter()
                .filter(|c| !c.is_zero())
                .count()
                <= 1;
            if den_simple && self.denominator.degree() == 0 {
                out = format!("{}/{}", out, PolyDisplay(&self.denominator));
            } else {
                out = format!("{}/({})", out, PolyDisplay(&self.denominator));
            }
        }
        write!(f, "{}", out)
    }
}

impl Poly {
    fn is_one(&self) -> bool {
        *self == Poly::one()
    }
}
