//! Elements of the quadratic field K = Q(sqrt(d)).
//!
//! A [`QuadElem`] is `a + b*sqrt(d)` with exact rational `a`, `b` and a
//! validated squarefree discriminant `d` (never 0 or 1). `a` is called the
//! real part and `b` the imaginary part regardless of the sign of `d`.
//!
//! Values are immutable; every operation returns a fresh element. Elements
//! interoperate arithmetically only when their discriminants match, and the
//! binary operators treat a mismatch as a programming error (panic). The
//! `checked_*` methods report it as [`Error::DiscMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::factor::is_squarefree;
use crate::rational::{self, BigRational};
use crate::{Error, Result};

/// A validated field discriminant: squarefree and not 0 or 1.
///
/// Constructing a `Disc` checks squarefreeness once; elements built from it
/// need no further validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Disc(i64);

impl Disc {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::InvalidDisc { value: d });
        }
        if !is_squarefree(&BigInt::from(d))? {
            return Err(Error::InvalidDisc { value: d });
        }
        Ok(Disc(d))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// True when d ≡ 1 (mod 4), the case with half-integer ring elements.
    pub fn is_one_mod_four(self) -> bool {
        self.0.rem_euclid(4) == 1
    }
}

impl fmt::Display for Disc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element a + b*sqrt(d) of Q(sqrt(d)).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    re: BigRational,
    im: BigRational,
    disc: Disc,
}

impl QuadElem {
    pub fn new(re: BigRational, im: BigRational, disc: Disc) -> Self {
        QuadElem { re, im, disc }
    }

    /// The rational element a + 0*sqrt(d).
    pub fn from_rational(re: BigRational, disc: Disc) -> Self {
        QuadElem::new(re, BigRational::zero(), disc)
    }

    pub fn from_int(n: i64, disc: Disc) -> Self {
        QuadElem::from_rational(rational::int(n), disc)
    }

    pub fn zero(disc: Disc) -> Self {
        QuadElem::from_int(0, disc)
    }

    pub fn one(disc: Disc) -> Self {
        QuadElem::from_int(1, disc)
    }

    /// The generator sqrt(d) itself.
    pub fn sqrt_d(disc: Disc) -> Self {
        QuadElem::new(BigRational::zero(), BigRational::one(), disc)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn disc(&self) -> Disc {
        self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True when the element lies in Q, i.e. its imaginary part is 0.
    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// True when both coordinates are rational integers.
    pub fn is_integral_rational(&self) -> bool {
        self.im.is_zero() && self.re.denom().is_one()
    }

    /// The conjugate a - b*sqrt(d). An involution that fixes Q.
    pub fn conj(&self) -> QuadElem {
        QuadElem::new(self.re.clone(), -self.im.clone(), self.disc)
    }

    /// The field norm N(a + b*sqrt(d)) = a^2 - d*b^2, a rational number.
    ///
    /// Multiplicative: N(xy) = N(x)N(y), and N(x) = x * conj(x).
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re - BigRational::from_integer(BigInt::from(self.disc.0)) * &self.im * &self.im
    }

    /// Sum of the element and its conjugate, i.e. 2a.
    pub fn trace(&self) -> BigRational {
        &self.re + &self.re
    }

    pub fn checked_add(&self, rhs: &QuadElem) -> Result<QuadElem> {
        self.same_disc(rhs)?;
        Ok(QuadElem::new(&self.re + &rhs.re, &self.im + &rhs.im, self.disc))
    }

    pub fn checked_sub(&self, rhs: &QuadElem) -> Result<QuadElem> {
        self.same_disc(rhs)?;
        Ok(QuadElem::new(&self.re - &rhs.re, &self.im - &rhs.im, self.disc))
    }

    pub fn checked_mul(&self, rhs: &QuadElem) -> Result<QuadElem> {
        self.same_disc(rhs)?;
        let d = BigRational::from_integer(BigInt::from(self.disc.0));
        let re = &self.re * &rhs.re + &d * &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Ok(QuadElem::new(re, im, self.disc))
    }

    /// Exact field division. Fails on a zero divisor or mismatched field.
    pub fn checked_div(&self, rhs: &QuadElem) -> Result<QuadElem> {
        self.same_disc(rhs)?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // norm(rhs) != 0 for nonzero rhs: d squarefree and not a square
        // means a^2 = d*b^2 has no nonzero rational solutions.
        let n = rhs.norm();
        let conj = rhs.conj();
        let prod = self.checked_mul(&conj)?;
        Ok(QuadElem::new(prod.re / &n, prod.im / &n, self.disc))
    }

    /// k-th power by repeated squaring; `pow(0)` is 1.
    pub fn pow(&self, k: u32) -> QuadElem {
        let mut base = self.clone();
        let mut acc = QuadElem::one(self.disc);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, s: &BigRational) -> QuadElem {
        QuadElem::new(&self.re * s, &self.im * s, self.disc)
    }

    /// Height of the element: the largest magnitude among the numerators and
    /// denominators of its coordinates. Used to pick orbit representatives.
    pub fn height(&self) -> BigInt {
        let mut h = self.re.numer().abs();
        for v in [self.re.denom().clone(), self.im.numer().abs(), self.im.denom().clone()] {
            if v > h {
                h = v;
            }
        }
        h
    }

    fn same_disc(&self, rhs: &QuadElem) -> Result<()> {
        if self.disc != rhs.disc {
            return Err(Error::DiscMismatch { left: self.disc.0, right: rhs.disc.0 });
        }
        Ok(())
    }

    /// Canonical text rendering: `a/b + c/e*sqrt(d)` with reduced fractions
    /// and zero parts omitted; the zero element renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sqrt_part = |coeff: &BigRational| format!("{}*sqrt({})", rational::render(coeff), self.disc.0);
        if self.im.is_zero() {
            rational::render(&self.re)
        } else if self.re.is_zero() {
            if self.im.is_negative() {
                format!("-{}", sqrt_part(&-self.im.clone()))
            } else {
                sqrt_part(&self.im)
            }
        } else {
            let op = if self.im.is_negative() { '-' } else { '+' };
            format!("{} {} {}", rational::render(&self.re), op, sqrt_part(&self.im.abs()))
        }
    }

    /// Parses the rendering above plus human-writable variants: integers,
    /// fractions `n/m`, the token `sqrt(d)`, `+`, `-`, `*`, any whitespace.
    /// The discriminant inside `sqrt(...)` must match `disc`.
    pub fn parse(input: &str, disc: Disc) -> Result<QuadElem> {
        Parser::new(input, disc).parse()
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &QuadElem) -> QuadElem {
                self.$checked(rhs).expect("operands from different fields")
            }
        }
        impl $trait for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.re.clone(), -self.im.clone(), self.disc)
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    disc: Disc,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, disc: Disc) -> Self {
        Parser { chars: src.chars().peekable(), disc, src }
    }

    fn parse(mut self) -> Result<QuadElem> {
        let v = self.expr()?;
        self.skip_ws();
        if self.chars.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in `{}`", self.src))
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.chars.peek() == Some(&c) {
            self.chars.next();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QuadElem> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QuadElem> {
        let mut acc = self.atom()?;
        while self.eat('*') {
            acc = acc.checked_mul(&self.atom()?)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<QuadElem> {
        self.skip_ws();
        if self.eat('-') {
            return Ok(-self.atom()?);
        }
        if self.eat('(') {
            let v = self.expr()?;
            if !self.eat(')') {
                return Err(self.err("expected `)`"));
            }
            return Ok(v);
        }
        match self.chars.peek() {
            Some('s') => self.sqrt_atom(),
            Some(c) if c.is_ascii_digit() => self.number_atom(),
            _ => Err(self.err("expected a number or sqrt(...)")),
        }
    }

    fn sqrt_atom(&mut self) -> Result<QuadElem> {
        for expected in "sqrt".chars() {
            if self.chars.next() != Some(expected) {
                return Err(self.err("expected `sqrt`"));
            }
        }
        if !self.eat('(') {
            return Err(self.err("expected `(` after sqrt"));
        }
        let neg = self.eat('-');
        let mut digits = self.digits()?;
        if neg {
            digits = -digits;
        }
        if !self.eat(')') {
            return Err(self.err("expected `)` after sqrt argument"));
        }
        let d: i64 = digits.try_into().map_err(|_| self.err("sqrt argument out of range"))?;
        if d != self.disc.value() {
            return Err(self.err(&format!("sqrt({d}) does not match field discriminant {}", self.disc)));
        }
        Ok(QuadElem::sqrt_d(self.disc))
    }

    fn number_atom(&mut self) -> Result<QuadElem> {
        let num = self.digits()?;
        self.skip_ws();
        // lookahead: `/` starts a fraction only when followed by digits
        if self.chars.peek() == Some(&'/') {
            self.chars.next();
            let den = self.digits()?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(QuadElem::from_rational(BigRational::new(num, den), self.disc));
        }
        Ok(QuadElem::from_rational(BigRational::from_integer(num), self.disc))
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        if s.is_empty() {
            return Err(self.err("expected digits"));
        }
        Ok(s.parse().expect("digit string parses"))
    }
}
