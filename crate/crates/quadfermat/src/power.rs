//! Closed forms for Re((a + b*sqrt(d))^p) and Im((a + b*sqrt(d))^p), and the
//! decision procedure for when either part vanishes.
//!
//! The vanishing verdicts are computed from arithmetic conditions on (a, b, d,
//! p) alone, never by evaluating the power, so they can be cross-checked
//! against [`power_parts`], which evaluates the binomial expansion exactly.
//! The condition table:
//!
//! * p = 2: Im vanishes iff a = 0 or b = 0; Re vanishes iff a = ±b and d = -1.
//! * p = 3: Im vanishes iff b = 0 or (a = ±b and d = -3); Re vanishes iff
//!   a = 0 or (a = ±3b and d = -3).
//! * p > 3: Im vanishes iff b = 0; Re vanishes iff a = 0.
//!
//! Rational a, b are handled by clearing denominators: the verdict for (a, b)
//! equals the verdict for the integer pair (a1*b2, a2*b1).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::factor::is_prime;
use crate::quad::{Disc, QuadElem};
use crate::rational::BigRational;
use crate::{Error, Result};

/// Which component of the power is under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Re,
    Im,
}

/// The exact real and imaginary parts of (a + b*sqrt(d))^p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerParts {
    pub re_part: BigRational,
    pub im_part: BigRational,
}

impl PowerParts {
    /// Reassembles the element the parts describe.
    pub fn to_elem(&self, disc: Disc) -> QuadElem {
        QuadElem::new(self.re_part.clone(), self.im_part.clone(), disc)
    }
}

/// The structural reason a component vanishes, when the condition table pins
/// one down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForcedShape {
    AZero,
    BZero,
    AZeroOrBZero,
    PlusMinusEqualDMinusOne,
    PlusMinusEqualDMinusThree,
    TripleRatioDMinusThree,
    ZeroElement,
}

impl std::fmt::Display for ForcedShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ForcedShape::AZero => "a=0",
            ForcedShape::BZero => "b=0",
            ForcedShape::AZeroOrBZero => "a=0 or b=0",
            ForcedShape::PlusMinusEqualDMinusOne => "a=±b and d=-1",
            ForcedShape::PlusMinusEqualDMinusThree => "a=±b and d=-3",
            ForcedShape::TripleRatioDMinusThree => "a=±3b and d=-3",
            ForcedShape::ZeroElement => "a=b=0",
        };
        f.write_str(s)
    }
}

/// The outcome of the vanishing decision for one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishVerdict {
    pub which: Part,
    pub vanishes: bool,
    pub forced_shape: Option<ForcedShape>,
}

/// How the p-th power of an element sits relative to Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerClass {
    /// e^p lies in Q (its imaginary part is 0).
    InQ,
    /// e^p is a nonzero rational multiple of sqrt(d).
    PureSqrtD,
    /// e^p has both parts nonzero.
    Mixed,
}

impl std::fmt::Display for PowerClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PowerClass::InQ => "in-q",
            PowerClass::PureSqrtD => "pure-sqrt-d",
            PowerClass::Mixed => "mixed",
        };
        f.write_str(s)
    }
}

/// Evaluates Re and Im of (a + b*sqrt(d))^p by the binomial expansion:
///
/// Re = sum over even j of C(p,j) a^(p-j) b^j d^(j/2),
/// Im = sum over odd j of C(p,j) a^(p-j) b^j d^((j-1)/2).
///
/// Accepts any positive exponent so it can serve as an oracle; agrees with
/// `QuadElem::pow` componentwise.
pub fn power_parts(a: &BigRational, b: &BigRational, disc: Disc, p: u32) -> PowerParts {
    // (a + b sqrt d)^p = (a1 b2 + a2 b1 sqrt d)^p / (a2 b2)^p
    let ai = a.numer() * b.denom();
    let bi = a.denom() * b.numer();
    let (re, im) = integer_power_parts(&ai, &bi, disc.value(), p);
    let den = (a.denom() * b.denom()).pow(p);
    PowerParts {
        re_part: BigRational::new(re, den.clone()),
        im_part: BigRational::new(im, den),
    }
}

/// Integer-coordinate core of [`power_parts`].
fn integer_power_parts(a: &BigInt, b: &BigInt, d: i64, p: u32) -> (BigInt, BigInt) {
    let n = p as usize;
    let mut b_pows = Vec::with_capacity(n + 1);
    b_pows.push(BigInt::one());
    for _ in 0..n {
        b_pows.push(b_pows.last().unwrap() * b);
    }
    // a_pows[j] = a^(p-j)
    let mut a_pows = vec![BigInt::one(); n + 1];
    for j in (0..n).rev() {
        a_pows[j] = &a_pows[j + 1] * a;
    }
    let d_big = BigInt::from(d);
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    let mut binom = BigInt::one();
    let mut d_pow = BigInt::one();
    for j in 0..=n {
        let term = &binom * &a_pows[j] * &b_pows[j] * &d_pow;
        if j % 2 == 0 {
            re += term;
        } else {
            im += term;
            d_pow *= &d_big;
        }
        if j < n {
            // C(p, j+1) = C(p, j) (p - j) / (j + 1), exactly
            binom = binom * BigInt::from(p - j as u32) / BigInt::from(j as u32 + 1);
        }
    }
    (re, im)
}

/// Decides whether Re or Im of (a + b*sqrt(d))^p vanishes, from the condition
/// table alone.
///
/// `p` must be prime (any prime, including 2 and 3). Rational inputs are
/// reduced to the integer pair (a1*b2, a2*b1) first; the verdict is invariant
/// under that reduction. The zero element is reported as vanishing on both
/// components with shape `a=b=0`.
pub fn vanish_decide(
    which: Part,
    a: &BigRational,
    b: &BigRational,
    disc: Disc,
    p: u32,
) -> Result<VanishVerdict> {
    if !is_prime(&BigInt::from(p)) {
        return Err(Error::NotPrime { value: u64::from(p) });
    }
    let ai = a.numer() * b.denom();
    let bi = a.denom() * b.numer();
    Ok(vanish_decide_int(which, &ai, &bi, disc.value(), p))
}

fn vanish_decide_int(which: Part, a: &BigInt, b: &BigInt, d: i64, p: u32) -> VanishVerdict {
    let verdict = |vanishes, shape| VanishVerdict { which, vanishes, forced_shape: shape };
    if a.is_zero() && b.is_zero() {
        return verdict(true, Some(ForcedShape::ZeroElement));
    }
    let abs_eq = a.abs() == b.abs();
    let triple = a.abs() == BigInt::from(3) * b.abs();
    match (p, which) {
        (2, Part::Im) => {
            if a.is_zero() || b.is_zero() {
                verdict(true, Some(ForcedShape::AZeroOrBZero))
            } else {
                verdict(false, None)
            }
        }
        (2, Part::Re) => {
            if d == -1 && abs_eq {
                verdict(true, Some(ForcedShape::PlusMinusEqualDMinusOne))
            } else {
                verdict(false, None)
            }
        }
        (3, Part::Im) => {
            if b.is_zero() {
                verdict(true, Some(ForcedShape::BZero))
            } else if d == -3 && abs_eq {
                verdict(true, Some(ForcedShape::PlusMinusEqualDMinusThree))
            } else {
                verdict(false, None)
            }
        }
        (3, Part::Re) => {
            if a.is_zero() {
                verdict(true, Some(ForcedShape::AZero))
            } else if d == -3 && triple {
                verdict(true, Some(ForcedShape::TripleRatioDMinusThree))
            } else {
                verdict(false, None)
            }
        }
        (_, Part::Im) => {
            if b.is_zero() {
                verdict(true, Some(ForcedShape::BZero))
            } else {
                verdict(false, None)
            }
        }
        (_, Part::Re) => {
            if a.is_zero() {
                verdict(true, Some(ForcedShape::AZero))
            } else {
                verdict(false, None)
            }
        }
    }
}

/// Classifies e^p against Q: in Q, a pure rational multiple of sqrt(d), or
/// mixed. Decided via [`vanish_decide`] on the reduced integer form, not by
/// evaluating the power.
pub fn rational_power_test(e: &QuadElem, p: u32) -> Result<PowerClass> {
    let im = vanish_decide(Part::Im, e.re(), e.im(), e.disc(), p)?;
    if im.vanishes {
        return Ok(PowerClass::InQ);
    }
    let re = vanish_decide(Part::Re, e.re(), e.im(), e.disc(), p)?;
    if re.vanishes {
        // Im(e^p) != 0 here, so e^p is nonzero.
        return Ok(PowerClass::PureSqrtD);
    }
    Ok(PowerClass::Mixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn d(v: i64) -> Disc {
        Disc::new(v).unwrap()
    }

    #[test]
    fn power_parts_examples() {
        let pp = power_parts(&int(1), &int(1), d(-3), 3);
        assert_eq!((pp.re_part, pp.im_part), (int(-8), int(0)));

        let pp = power_parts(&int(3), &int(1), d(-3), 3);
        assert_eq!((pp.re_part, pp.im_part), (int(0), int(24)));

        let pp = power_parts(&ratio(5, 3), &int(0), d(7), 4);
        assert_eq!((pp.re_part, pp.im_part), (ratio(625, 81), int(0)));
    }

    #[test]
    fn vanish_examples() {
        let v = vanish_decide(Part::Im, &int(1), &int(1), d(-3), 3).unwrap();
        assert!(v.vanishes);
        assert_eq!(v.forced_shape, Some(ForcedShape::PlusMinusEqualDMinusThree));

        let v = vanish_decide(Part::Re, &int(1), &int(1), d(-1), 2).unwrap();
        assert!(v.vanishes);
        assert_eq!(v.forced_shape, Some(ForcedShape::PlusMinusEqualDMinusOne));

        let v = vanish_decide(Part::Im, &int(2), &int(3), d(5), 7).unwrap();
        assert!(!v.vanishes);

        assert!(matches!(
            vanish_decide(Part::Im, &int(1), &int(1), d(5), 6),
            Err(Error::NotPrime { value: 6 })
        ));
    }

    #[test]
    fn power_class_examples() {
        let e = QuadElem::new(int(1), int(1), d(-3));
        assert_eq!(rational_power_test(&e, 3).unwrap(), PowerClass::InQ);

        let e = QuadElem::new(int(0), int(1), d(7));
        assert_eq!(rational_power_test(&e, 5).unwrap(), PowerClass::PureSqrtD);

        let e = QuadElem::new(int(1), int(1), d(2));
        assert_eq!(rational_power_test(&e, 5).unwrap(), PowerClass::Mixed);

        let zero = QuadElem::zero(d(2));
        assert_eq!(rational_power_test(&zero, 5).unwrap(), PowerClass::InQ);
    }

    #[test]
    fn denominator_clearing_preserves_verdict() {
        let cases = [
            (ratio(2, 3), ratio(2, 3), -1, 2),
            (ratio(1, 2), ratio(-1, 2), -3, 3),
            (ratio(3, 4), ratio(1, 4), -3, 3),
            (ratio(5, 7), ratio(-3, 2), 2, 5),
        ];
        for (a, b, dd, p) in cases {
            for part in [Part::Re, Part::Im] {
                let direct = vanish_decide(part, &a, &b, d(dd), p).unwrap();
                let ai = a.numer() * b.denom();
                let bi = a.denom() * b.numer();
                let cleared = vanish_decide(
                    part,
                    &BigRational::from_integer(ai),
                    &BigRational::from_integer(bi),
                    d(dd),
                    p,
                )
                .unwrap();
                assert_eq!(direct.vanishes, cleared.vanishes);
            }
        }
    }

    proptest! {
        #[test]
        fn parts_match_pow(
            an in -30i64..=30, ad in 1i64..=8,
            bn in -30i64..=30, bd in 1i64..=8,
            dd in prop::sample::select(vec![-7i64, -5, -3, -1, 2, 3, 5, 10, 13]),
            p in 1u32..=11,
        ) {
            let a = ratio(an, ad);
            let b = ratio(bn, bd);
            let e = QuadElem::new(a.clone(), b.clone(), d(dd));
            let pp = power_parts(&a, &b, d(dd), p);
            prop_assert_eq!(pp.to_elem(d(dd)), e.pow(p));
        }

        #[test]
        fn verdicts_match_evaluation(
            an in -20i64..=20, ad in 1i64..=4,
            bn in -20i64..=20, bd in 1i64..=4,
            dd in prop::sample::select(vec![-7i64, -5, -3, -1, 2, 3, 5, 10]),
            p in prop::sample::select(vec![2u32, 3, 5, 7]),
        ) {
            let a = ratio(an, ad);
            let b = ratio(bn, bd);
            let pp = power_parts(&a, &b, d(dd), p);
            let im = vanish_decide(Part::Im, &a, &b, d(dd), p).unwrap();
            let re = vanish_decide(Part::Re, &a, &b, d(dd), p).unwrap();
            prop_assert_eq!(im.vanishes, pp.im_part.is_zero());
            prop_assert_eq!(re.vanishes, pp.re_part.is_zero());
        }
    }
}
