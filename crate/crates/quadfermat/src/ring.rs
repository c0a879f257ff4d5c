//! The ring of integers O_K of K = Q(sqrt(d)): integral basis, membership,
//! coprimality predicates, and the unit group.
//!
//! The integral basis is {1, w} with w = sqrt(d) for d ≡ 2, 3 (mod 4) and
//! w = (1 + sqrt(d))/2 for d ≡ 1 (mod 4). Coprimality of x and y is the
//! ideal-theoretic statement (x, y) = O_K, decided by reducing the Z-module
//! spanned by {x, x·w, y, y·w} to Hermite normal form and checking that its
//! index in O_K is 1. The norm-gcd test is kept as the cheap one-way
//! certificate it is: coprime norms imply coprime elements, never conversely
//! (1 + i and 1 - i are the standard counterexample).
//!
//! For d > 0 the fundamental unit is computed exactly from the purely periodic
//! continued fraction of (b + sqrt(D))/2, where D is the field discriminant
//! and b is the largest integer of D's parity below sqrt(D).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::quad::{Disc, QuadElem};
use crate::rational::BigRational;
use crate::{Error, Result};

/// Shape of the second basis element of O_K.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaKind {
    /// w = sqrt(d), for d ≡ 2, 3 (mod 4).
    SqrtD,
    /// w = (1 + sqrt(d))/2, for d ≡ 1 (mod 4).
    HalfOnePlusSqrtD,
}

/// A ring of integers, determined by the field discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingDesc {
    disc: Disc,
    omega_kind: OmegaKind,
}

impl RingDesc {
    pub fn new(disc: Disc) -> Self {
        let omega_kind = if disc.is_one_mod_four() {
            OmegaKind::HalfOnePlusSqrtD
        } else {
            OmegaKind::SqrtD
        };
        RingDesc { disc, omega_kind }
    }

    pub fn disc(&self) -> Disc {
        self.disc
    }

    pub fn omega_kind(&self) -> OmegaKind {
        self.omega_kind
    }

    /// The basis element w as a field element.
    pub fn omega(&self) -> QuadElem {
        match self.omega_kind {
            OmegaKind::SqrtD => QuadElem::sqrt_d(self.disc),
            OmegaKind::HalfOnePlusSqrtD => QuadElem::new(
                BigRational::new(BigInt::one(), BigInt::from(2)),
                BigRational::new(BigInt::one(), BigInt::from(2)),
                self.disc,
            ),
        }
    }

    /// Header text declaring the basis, used by the CLI unit listing.
    pub fn omega_header(&self) -> String {
        match self.omega_kind {
            OmegaKind::SqrtD => format!("w = sqrt({})", self.disc),
            OmegaKind::HalfOnePlusSqrtD => format!("w = (1+sqrt({}))/2", self.disc),
        }
    }
}

/// An element u + v*w of O_K in the integral basis {1, w}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OkElem {
    u: BigInt,
    v: BigInt,
    ring: RingDesc,
}

impl OkElem {
    pub fn new(u: BigInt, v: BigInt, ring: RingDesc) -> Self {
        OkElem { u, v, ring }
    }

    pub fn from_ints(u: i64, v: i64, ring: RingDesc) -> Self {
        OkElem::new(BigInt::from(u), BigInt::from(v), ring)
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn ring(&self) -> RingDesc {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn one(ring: RingDesc) -> Self {
        OkElem::new(BigInt::one(), BigInt::zero(), ring)
    }

    /// Embeds into the field K.
    pub fn to_quad(&self) -> QuadElem {
        let u = BigRational::from_integer(self.u.clone());
        let v = BigRational::from_integer(self.v.clone());
        match self.ring.omega_kind {
            OmegaKind::SqrtD => QuadElem::new(u, v, self.ring.disc),
            OmegaKind::HalfOnePlusSqrtD => {
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                QuadElem::new(u + &v * &half, v * half, self.ring.disc)
            }
        }
    }

    /// The conjugate, expressed in the same basis.
    pub fn conj(&self) -> OkElem {
        match self.ring.omega_kind {
            // conj(u + v sqrt d) = u - v sqrt d
            OmegaKind::SqrtD => OkElem::new(self.u.clone(), -self.v.clone(), self.ring),
            // conj(w) = 1 - w
            OmegaKind::HalfOnePlusSqrtD => {
                OkElem::new(&self.u + &self.v, -self.v.clone(), self.ring)
            }
        }
    }

    /// The field norm, an ordinary integer for ring elements.
    pub fn norm(&self) -> BigInt {
        let d = BigInt::from(self.ring.disc.value());
        match self.ring.omega_kind {
            OmegaKind::SqrtD => &self.u * &self.u - d * &self.v * &self.v,
            OmegaKind::HalfOnePlusSqrtD => {
                // N(u + v w) = u^2 + u v + v^2 (1 - d)/4
                let q = (BigInt::one() - d) / BigInt::from(4);
                &self.u * &self.u + &self.u * &self.v + q * &self.v * &self.v
            }
        }
    }

    pub fn mul(&self, rhs: &OkElem) -> Result<OkElem> {
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch);
        }
        let d = BigInt::from(self.ring.disc.value());
        let (u, v) = match self.ring.omega_kind {
            OmegaKind::SqrtD => (
                &self.u * &rhs.u + &d * &self.v * &rhs.v,
                &self.u * &rhs.v + &self.v * &rhs.u,
            ),
            // w^2 = (d-1)/4 + w
            OmegaKind::HalfOnePlusSqrtD => {
                let q = (d - BigInt::one()) / BigInt::from(4);
                (
                    &self.u * &rhs.u + q * &self.v * &rhs.v,
                    &self.u * &rhs.v + &self.v * &rhs.u + &self.v * &rhs.v,
                )
            }
        };
        Ok(OkElem::new(u, v, self.ring))
    }

    pub fn neg(&self) -> OkElem {
        OkElem::new(-self.u.clone(), -self.v.clone(), self.ring)
    }

    /// True when the element is invertible in O_K, i.e. has norm ±1.
    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Inverse of a unit: ±conj, with the sign of the norm.
    pub fn unit_inverse(&self) -> Result<OkElem> {
        if !self.is_unit() {
            return Err(Error::ContractViolation(format!(
                "{} is not a unit of O_K",
                self.render()
            )));
        }
        let c = self.conj();
        Ok(if self.norm().is_one() { c } else { c.neg() })
    }

    /// Renders in the basis declared by [`RingDesc::omega_header`]:
    /// `u + v*w` with zero parts omitted, `0` for zero.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        if self.v.is_zero() {
            return self.u.to_string();
        }
        let w_part = format!("{}*w", self.v.abs());
        if self.u.is_zero() {
            if self.v.is_negative() {
                format!("-{w_part}")
            } else {
                w_part
            }
        } else {
            let op = if self.v.is_negative() { '-' } else { '+' };
            format!("{} {} {}", self.u, op, w_part)
        }
    }
}

impl fmt::Display for OkElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Description of the unit group O_K^×.
///
/// For d < 0 the group is finite and `roots_of_unity` is all of it; for d > 0
/// it is {±1} times the powers of `fundamental`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroupDesc {
    pub roots_of_unity: Vec<OkElem>,
    pub fundamental: Option<OkElem>,
}

/// Decides membership of a field element in O_K and returns its basis
/// coordinates when it belongs.
pub fn ok_membership(e: &QuadElem) -> Option<OkElem> {
    let ring = RingDesc::new(e.disc());
    match ring.omega_kind {
        OmegaKind::SqrtD => {
            if e.re().denom().is_one() && e.im().denom().is_one() {
                Some(OkElem::new(e.re().numer().clone(), e.im().numer().clone(), ring))
            } else {
                None
            }
        }
        OmegaKind::HalfOnePlusSqrtD => {
            // e = u + v w  <=>  v = 2 Im(e) and u = Re(e) - Im(e) are integers
            let v = e.im() + e.im();
            let u = e.re() - e.im();
            if v.denom().is_one() && u.denom().is_one() {
                Some(OkElem::new(u.numer().clone(), v.numer().clone(), ring))
            } else {
                None
            }
        }
    }
}

/// The norm certificate: gcd over Z of |N(x)| and |N(y)| is 1.
///
/// `true` is a sufficient condition for coprimality of x and y in O_K; `false`
/// decides nothing (coprime elements can share a norm factor).
pub fn norm_coprime(x: &OkElem, y: &OkElem) -> Result<bool> {
    check_pair(x, y)?;
    Ok(x.norm().gcd(&y.norm()).is_one())
}

/// Ideal-theoretic coprimality: (x, y) = O_K.
///
/// Computed from the Hermite normal form of the Z-module spanned by
/// {x, x·w, y, y·w}; the pair is coprime exactly when that module has index 1
/// in O_K.
pub fn ideal_coprime(x: &OkElem, y: &OkElem) -> Result<bool> {
    check_pair(x, y)?;
    Ok(pair_ideal_index(x, y).is_one())
}

/// Index of the ideal (x, y) as a sublattice of O_K.
pub fn pair_ideal_index(x: &OkElem, y: &OkElem) -> BigInt {
    let rows = vec![
        basis_coords(x),
        basis_coords(&mul_by_omega(x)),
        basis_coords(y),
        basis_coords(&mul_by_omega(y)),
    ];
    lattice_index(rows)
}

/// Lifts integer coprimality: gcd_Z(a, b) = 1. By the norm certificate this
/// forces coprimality of a and b in every O_K.
pub fn int_coprime_lift(a: &BigInt, b: &BigInt) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput { what: "coprimality operand" });
    }
    Ok(a.gcd(b).is_one())
}

/// The three-way norm condition gcd_Z(a, N(y), N(z)) = 1.
///
/// A `false` here certifies that pairwise coprimality of {a, y, z} fails or is
/// undetermined; used as a fast filter.
pub fn triple_norm_condition(a: &BigInt, y: &OkElem, z: &OkElem) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroInput { what: "coefficient" });
    }
    check_pair(y, z)?;
    Ok(a.gcd(&y.norm()).gcd(&z.norm()).is_one())
}

/// The fundamental unit of O_K for a real field, d > 1 squarefree: the
/// smallest unit greater than 1.
///
/// Exact continued-fraction computation; the returned element always has norm
/// ±1 and infinite order.
pub fn fundamental_unit(disc: Disc) -> Result<OkElem> {
    let d = disc.value();
    if d <= 1 {
        return Err(Error::InvalidDisc { value: d });
    }
    let ring = RingDesc::new(disc);

    // Field discriminant D and the purely periodic start (b + sqrt(D))/2.
    let big_d: BigInt = if disc.is_one_mod_four() {
        BigInt::from(d)
    } else {
        BigInt::from(4) * BigInt::from(d)
    };
    let isqrt = big_d.sqrt();
    let b = if (&isqrt - &big_d).is_even() { isqrt.clone() } else { &isqrt - 1 };

    let two = BigInt::from(2);
    let mut p = b.clone();
    let mut q = two.clone();
    // convergent denominators q_{k-2}, q_{k-1}
    let mut q_prev2 = BigInt::one();
    let mut q_prev1 = BigInt::zero();
    loop {
        let a = (&p + &isqrt).div_floor(&q);
        let q_new = &a * &q_prev1 + &q_prev2;
        q_prev2 = std::mem::replace(&mut q_prev1, q_new);
        p = a * &q - p;
        q = (&big_d - &p * &p) / q;
        if p == b && q == two {
            break;
        }
    }

    // unit = q_{l-1} * (b + sqrt(D))/2 + q_{l-2}, rewritten in the basis
    let unit = if disc.is_one_mod_four() {
        let u = &q_prev1 * ((&b - BigInt::one()) / &two) + &q_prev2;
        OkElem::new(u, q_prev1, ring)
    } else {
        let u = &q_prev1 * (&b / &two) + &q_prev2;
        OkElem::new(u, q_prev1, ring)
    };
    debug_assert!(unit.is_unit());
    Ok(unit)
}

/// The unit group description: full finite group for d < 0, {±1} plus the
/// fundamental unit for d > 0.
pub fn unit_group(disc: Disc) -> Result<UnitGroupDesc> {
    let ring = RingDesc::new(disc);
    let one = OkElem::one(ring);
    if disc.value() > 0 {
        return Ok(UnitGroupDesc {
            roots_of_unity: vec![one.clone(), one.neg()],
            fundamental: Some(fundamental_unit(disc)?),
        });
    }
    let roots = match disc.value() {
        // ±1, ±i
        -1 => vec![(1, 0), (-1, 0), (0, 1), (0, -1)],
        // ±1, ±w, ±w^2 with w a primitive cube root of unity; in the basis
        // {1, (1+sqrt(-3))/2} these are (±1, 0), ±(-1, 1), ±(0, 1)
        -3 => vec![(1, 0), (-1, 0), (-1, 1), (1, -1), (0, -1), (0, 1)],
        _ => vec![(1, 0), (-1, 0)],
    };
    Ok(UnitGroupDesc {
        roots_of_unity: roots.into_iter().map(|(u, v)| OkElem::from_ints(u, v, ring)).collect(),
        fundamental: None,
    })
}

/// Enumerates units: the full group for d < 0; for d > 0 the set
/// {±fundamental^k : |k| <= n_max}.
pub fn units(disc: Disc, n_max: u32) -> Result<Vec<OkElem>> {
    let group = unit_group(disc)?;
    if disc.value() < 0 {
        return Ok(group.roots_of_unity);
    }
    let fundamental = group.fundamental.expect("real field has a fundamental unit");
    let inverse = fundamental.unit_inverse()?;
    let ring = fundamental.ring();
    let mut out = vec![OkElem::one(ring), OkElem::one(ring).neg()];
    let mut pos = OkElem::one(ring);
    let mut neg = OkElem::one(ring);
    for _ in 1..=n_max {
        pos = pos.mul(&fundamental)?;
        neg = neg.mul(&inverse)?;
        out.push(pos.clone());
        out.push(pos.neg());
        out.push(neg.clone());
        out.push(neg.neg());
    }
    Ok(out)
}

fn check_pair(x: &OkElem, y: &OkElem) -> Result<()> {
    if x.ring != y.ring {
        return Err(Error::RingMismatch);
    }
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroInput { what: "coprimality operand" });
    }
    Ok(())
}

fn basis_coords(x: &OkElem) -> (BigInt, BigInt) {
    (x.u.clone(), x.v.clone())
}

/// Multiplication by the basis element w, in coordinates.
fn mul_by_omega(x: &OkElem) -> OkElem {
    let d = BigInt::from(x.ring.disc.value());
    match x.ring.omega_kind {
        // (u + v sqrt d) sqrt d = v d + u sqrt d
        OmegaKind::SqrtD => OkElem::new(&x.v * d, x.u.clone(), x.ring),
        // (u + v w) w = v (d-1)/4 + (u + v) w
        OmegaKind::HalfOnePlusSqrtD => {
            let q = (d - BigInt::one()) / BigInt::from(4);
            OkElem::new(&x.v * q, &x.u + &x.v, x.ring)
        }
    }
}

/// Index in Z^2 of the lattice spanned by the given rows, via integer row
/// reduction to upper-triangular (Hermite) form. Zero when the rank is
/// deficient.
pub(crate) fn lattice_index(mut rows: Vec<(BigInt, BigInt)>) -> BigInt {
    // eliminate the first column down to a single nonzero pivot
    loop {
        let mut pivot: Option<usize> = None;
        for (i, r) in rows.iter().enumerate() {
            if !r.0.is_zero() && pivot.is_none_or(|p| r.0.abs() < rows[p].0.abs()) {
                pivot = Some(i);
            }
        }
        let Some(p) = pivot else {
            return BigInt::zero();
        };
        let mut done = true;
        let (pivot_a, pivot_b) = rows[p].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == p || row.0.is_zero() {
                continue;
            }
            let q = row.0.div_floor(&pivot_a);
            row.0 -= &q * &pivot_a;
            row.1 -= &q * &pivot_b;
            if !row.0.is_zero() {
                done = false;
            }
        }
        if done {
            let h11 = rows[p].0.abs();
            let mut h22 = BigInt::zero();
            for (i, r) in rows.iter().enumerate() {
                if i != p {
                    h22 = h22.gcd(&r.1);
                }
            }
            return h11 * h22;
        }
    }
}
