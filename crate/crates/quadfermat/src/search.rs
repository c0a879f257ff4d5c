//! Bounded-height exhaustive search for solutions and the theorem
//! verification harnesses built on it.
//!
//! A [`SearchBox`] fixes a finite set of candidate components (rationals,
//! ring integers, or general field elements of bounded height); [`search`]
//! tests every triple from that set against the equation, classifies the
//! hits, and reports a verdict for the no-solutions-outside-Q statement.
//!
//! The scan is embarrassingly parallel: the outer component index partitions
//! the box into disjoint rows that are processed independently (rayon, when
//! the `parallel` feature is on) and merged in index order, so reports are
//! identical for every worker count, including the sequential fallback.

use std::fmt;
use std::time::{Duration, Instant};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{
    change_of_variables, classify_solution, curve_constant, forward_map, EquationSpec,
    SolutionClass, SolutionTriple,
};
use crate::quad::{Disc, QuadElem};
use crate::rational::BigRational;
use crate::ring::{self, OkElem, RingDesc};
use crate::{Error, Result};

/// Which component values a search enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Rationals n/m in lowest terms with |n| <= H, 1 <= m <= H.
    RationalOnly,
    /// Ring integers u + v*w with |u|, |v| <= H.
    OkOnly,
    /// Field elements a + b*sqrt(d) with both coordinates rationals of
    /// height <= H.
    FullK,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scope::RationalOnly => "rational",
            Scope::OkOnly => "ok",
            Scope::FullK => "full-k",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "rational" => Scope::RationalOnly,
            "ok" => Scope::OkOnly,
            "full-k" => Scope::FullK,
            _ => return Err(Error::Parse(format!("unknown scope `{s}`"))),
        })
    }
}

/// A finite search region plus reporting options.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    pub height: u32,
    pub scope: Scope,
    pub skip_trivial: bool,
    /// Disable orbit grouping and list every hit.
    pub raw: bool,
}

impl SearchBox {
    pub fn new(height: u32, scope: Scope) -> Self {
        SearchBox { height: height.max(1), scope, skip_trivial: false, raw: false }
    }

    pub fn skip_trivial(mut self, yes: bool) -> Self {
        self.skip_trivial = yes;
        self
    }

    pub fn raw(mut self, yes: bool) -> Self {
        self.raw = yes;
        self
    }

    /// The candidate component values, in the fixed lexicographic order the
    /// scan uses.
    pub fn components(&self, disc: Disc) -> Vec<QuadElem> {
        match self.scope {
            Scope::RationalOnly => rational_set(self.height)
                .into_iter()
                .map(|q| QuadElem::from_rational(q, disc))
                .collect(),
            Scope::OkOnly => {
                let ring = RingDesc::new(disc);
                let h = i64::from(self.height);
                let mut out = Vec::new();
                for u in -h..=h {
                    for v in -h..=h {
                        out.push(OkElem::from_ints(u, v, ring).to_quad());
                    }
                }
                out
            }
            Scope::FullK => {
                let rats = rational_set(self.height);
                let mut out = Vec::with_capacity(rats.len() * rats.len());
                for re in &rats {
                    for im in &rats {
                        out.push(QuadElem::new(re.clone(), im.clone(), disc));
                    }
                }
                out
            }
        }
    }

    /// Number of triples the scan will test, as a completeness check: n^3,
    /// or (n-1)^3 when triples containing a zero component are skipped.
    pub fn predicted_triples(&self, disc: Disc) -> u64 {
        let n = self.components(disc).len() as u64;
        let m = if self.skip_trivial { n - 1 } else { n };
        m * m * m
    }
}

/// Rationals of height <= H in lowest terms, ordered by (numerator,
/// denominator).
fn rational_set(height: u32) -> Vec<BigRational> {
    let h = i64::from(height);
    let mut out = Vec::new();
    for num in -h..=h {
        for den in 1..=h {
            if num.unsigned_abs().gcd(&den.unsigned_abs()) == 1 {
                out.push(crate::rational::ratio(num, den));
            }
        }
    }
    out
}

/// Verdict of a search against the no-solutions-outside-Q statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    /// A nontrivial solution that is not a K-scalar multiple of a rational
    /// one was found for an equation with BC != ±1.
    CounterexampleFound,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Consistent => "consistent",
            Verdict::CounterexampleFound => "counterexample-found",
        };
        f.write_str(s)
    }
}

/// One reported solution. In grouped mode a hit represents a whole orbit of
/// solutions related by a common K-scalar, with the smallest-height member as
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub triple: SolutionTriple,
    pub orbit_size: u64,
}

/// Outcome of an exhaustive scan.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub equation: EquationSpec,
    pub sbox: SearchBox,
    pub hits: Vec<SearchHit>,
    /// Total number of solutions before orbit grouping.
    pub raw_hits: u64,
    /// Number of triples actually tested.
    pub enumerated: u64,
    pub elapsed: Duration,
    pub verdict: Verdict,
}

/// Exhaustively scans the box for solutions of the equation.
///
/// Every reported hit satisfies the equation exactly (classification
/// re-substitutes as its precondition check). The verdict is
/// [`Verdict::CounterexampleFound`] only if a nontrivial hit is not
/// projectively rational while BC != ±1; an empty hit list is a normal
/// outcome.
pub fn search(eq: &EquationSpec, sbox: &SearchBox) -> SearchReport {
    let start = Instant::now();
    let components = sbox.components(eq.disc());
    let n = components.len();
    let skip = sbox.skip_trivial;

    let term_a: Vec<QuadElem> = powers_scaled(&components, eq.p(), eq.a());
    let term_b: Vec<QuadElem> = powers_scaled(&components, eq.p(), eq.b());
    let term_c: Vec<QuadElem> = powers_scaled(&components, eq.p(), eq.c());
    let zero = QuadElem::zero(eq.disc());

    // hit indices plus the number of triples a row tested
    type RowResult = (Vec<(usize, usize, usize)>, u64);
    let scan_row = |i: usize| -> RowResult {
        let mut found = Vec::new();
        let mut tested = 0u64;
        if skip && components[i].is_zero() {
            return (found, tested);
        }
        for j in 0..n {
            if skip && components[j].is_zero() {
                continue;
            }
            let partial = &term_a[i] + &term_b[j];
            let want = &zero - &partial;
            for (k, tc) in term_c.iter().enumerate() {
                if skip && components[k].is_zero() {
                    continue;
                }
                tested += 1;
                if *tc == want {
                    found.push((i, j, k));
                }
            }
        }
        (found, tested)
    };

    #[cfg(feature = "parallel")]
    let rows: Vec<RowResult> = (0..n).into_par_iter().map(scan_row).collect();
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<RowResult> = (0..n).map(scan_row).collect();

    let mut enumerated = 0u64;
    let mut triples = Vec::new();
    for (found, tested) in rows {
        enumerated += tested;
        for (i, j, k) in found {
            let t = classify_solution(eq, &components[i], &components[j], &components[k])
                .expect("scan only yields exact solutions");
            triples.push(t);
        }
    }

    let raw_hits = triples.len() as u64;
    let verdict = if !eq.bc_is_unit()
        && triples.iter().any(|t| {
            !matches!(t.class, SolutionClass::TrivialZero | SolutionClass::TrivialAbUnit)
                && !projectively_rational(t)
        }) {
        Verdict::CounterexampleFound
    } else {
        Verdict::Consistent
    };

    let hits = if sbox.raw {
        triples.into_iter().map(|triple| SearchHit { triple, orbit_size: 1 }).collect()
    } else {
        group_orbits(triples)
    };

    SearchReport {
        equation: eq.clone(),
        sbox: *sbox,
        hits,
        raw_hits,
        enumerated,
        elapsed: start.elapsed(),
        verdict,
    }
}

fn powers_scaled(components: &[QuadElem], p: u32, coeff: &BigInt) -> Vec<QuadElem> {
    let c = BigRational::from_integer(coeff.clone());
    components.iter().map(|e| e.pow(p).scale(&c)).collect()
}

/// Groups solutions related by a common K-scalar, keeping the
/// smallest-height member of each orbit (enumeration order breaks ties).
fn group_orbits(triples: Vec<SolutionTriple>) -> Vec<SearchHit> {
    use std::collections::HashMap;

    let mut order: Vec<(QuadElem, QuadElem, QuadElem)> = Vec::new();
    let mut groups: HashMap<(QuadElem, QuadElem, QuadElem), SearchHit> = HashMap::new();
    for triple in triples {
        let key = orbit_key(&triple);
        match groups.get_mut(&key) {
            None => {
                order.push(key.clone());
                groups.insert(key, SearchHit { triple, orbit_size: 1 });
            }
            Some(hit) => {
                hit.orbit_size += 1;
                if triple_height(&triple) < triple_height(&hit.triple) {
                    hit.triple = triple;
                }
            }
        }
    }
    order.into_iter().map(|k| groups.remove(&k).expect("key recorded")).collect()
}

/// Canonical orbit label: the triple scaled so its first nonzero component
/// is 1.
fn orbit_key(t: &SolutionTriple) -> (QuadElem, QuadElem, QuadElem) {
    let lead = [&t.x, &t.y, &t.z].into_iter().find(|e| !e.is_zero());
    match lead {
        None => (t.x.clone(), t.y.clone(), t.z.clone()),
        Some(lead) => (
            t.x.checked_div(lead).expect("lead is nonzero"),
            t.y.checked_div(lead).expect("lead is nonzero"),
            t.z.checked_div(lead).expect("lead is nonzero"),
        ),
    }
}

fn triple_height(t: &SolutionTriple) -> BigInt {
    t.x.height().max(t.y.height()).max(t.z.height())
}

/// True when the triple is a K-scalar multiple of a rational triple, i.e.
/// rational as a projective solution. A common irrational factor does not
/// make a solution genuinely non-rational: the homogeneous equation cannot
/// tell the two apart.
pub fn projectively_rational(t: &SolutionTriple) -> bool {
    let lead = match [&t.x, &t.y, &t.z].into_iter().find(|e| !e.is_zero()) {
        None => return true,
        Some(lead) => lead,
    };
    [&t.x, &t.y, &t.z].into_iter().all(|e| {
        e.checked_div(lead).map(|r| r.is_rational()).unwrap_or(false)
    })
}

/// Generates verified conjugate-unit solution families for BC = ±1.
///
/// For each nonrational z in O_K of coordinate height <= `height` and each
/// unit u (exponents bounded by `unit_range` for real fields), the candidate
/// y = u·conj(z) makes T = B·y^p + C·z^p rational exactly when a solution
/// (1, y, z) of A·x^p + B·y^p + C·z^p = 0 with A = -T exists. Pairs are
/// emitted only when A is a nonzero p-th-powerfree integer and the solution
/// verifies by substitution.
pub fn gen_conjugate_family(
    b: &BigInt,
    c: &BigInt,
    p: u32,
    disc: Disc,
    height: u32,
    unit_range: u32,
) -> Result<Vec<(EquationSpec, SolutionTriple)>> {
    if !(b * c).abs().is_one() {
        return Err(Error::ContractViolation("family generation needs BC = ±1".to_string()));
    }
    let ring = RingDesc::new(disc);
    let units = ring::units(disc, unit_range)?;
    let b_rat = BigRational::from_integer(b.clone());
    let c_rat = BigRational::from_integer(c.clone());

    let h = i64::from(height);
    let mut out = Vec::new();
    for zu in -h..=h {
        for zv in -h..=h {
            let z = OkElem::from_ints(zu, zv, ring);
            let z_quad = z.to_quad();
            if z_quad.is_zero() || z_quad.is_rational() {
                continue;
            }
            let zp = z_quad.pow(p);
            for u in &units {
                let y = u.mul(&z.conj())?;
                let y_quad = y.to_quad();
                let t = &y_quad.pow(p).scale(&b_rat) + &zp.scale(&c_rat);
                if !t.is_rational() || t.is_zero() {
                    continue;
                }
                debug_assert!(t.re().denom().is_one(), "O_K value with rational part is integral");
                let a = -t.re().numer().clone();
                let eq = match EquationSpec::new(a, b.clone(), c.clone(), p, disc) {
                    Ok(eq) => eq,
                    Err(Error::NotPowerfree { .. }) => continue,
                    Err(e) => return Err(e),
                };
                let one = QuadElem::one(disc);
                debug_assert!(eq.is_solution(&one, &y_quad, &z_quad));
                let triple = classify_solution(&eq, &one, &y_quad, &z_quad)?;
                out.push((eq, triple));
            }
        }
    }
    Ok(out)
}

/// Checks the trivial-solution statement on the box: every solution with
/// xyz = 0 is either (0, 0, 0) or, when the matching coefficient product is
/// ±1, of the shape (x, ±x, 0) up to component position.
///
/// The same norm argument is applied symmetrically to all three zero
/// positions; any asymmetric finding returns false rather than being
/// assumed away.
pub fn verify_trivial_lemma(eq: &EquationSpec, height: u32) -> bool {
    let sbox = SearchBox::new(height, Scope::FullK);
    let components = sbox.components(eq.disc());
    for x in &components {
        for y in &components {
            for z in &components {
                let zeros =
                    usize::from(x.is_zero()) + usize::from(y.is_zero()) + usize::from(z.is_zero());
                if zeros == 0 || !eq.is_solution(x, y, z) {
                    continue;
                }
                let ok = match (x.is_zero(), y.is_zero(), z.is_zero()) {
                    (true, true, true) => true,
                    // one zero component: product of the two live
                    // coefficients must be a unit and the live components
                    // must agree up to sign
                    (false, false, true) => eq.ab_is_unit() && (x == y || *x == -y),
                    (false, true, false) => eq.ac_is_unit() && (x == z || *x == -z),
                    (true, false, false) => eq.bc_is_unit() && (y == z || *y == -z),
                    // two zeros force the third to vanish, so a surviving
                    // component is a violation
                    _ => false,
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Maps every verified nontrivial sample through the curve and checks
/// Re(Y)·Im(Y) = 0 exactly.
///
/// Unverified samples (non-solutions or trivial triples) are a contract
/// violation; an exact failure of the product identity returns `Ok(false)`.
pub fn verify_mn_theorem(samples: &[(EquationSpec, SolutionTriple)]) -> Result<bool> {
    for (eq, t) in samples {
        if t.x.is_zero() || t.y.is_zero() || t.z.is_zero() || !eq.is_solution(&t.x, &t.y, &t.z) {
            return Err(Error::ContractViolation(
                "mn-theorem samples must be verified nontrivial solutions".to_string(),
            ));
        }
        let pt = forward_map(eq, &t.x, &t.y, &t.z)?;
        if !(pt.y.re() * pt.y.im()).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Randomized check of the change-of-variables identity: for random x, y, z
/// over K and random integer A, B with C solved from the equation, the mapped
/// point satisfies Y^2 - X^p = A^2(BC)^(p-1)/4 exactly.
///
/// Deterministic for a fixed seed. Returns false on the first failing trial.
pub fn map_identity_trials(
    p: u32,
    disc: Disc,
    trials: u32,
    height: u32,
    seed: u64,
) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = i64::from(height.max(1));
    let rand_rat = |rng: &mut ChaCha8Rng| {
        crate::rational::ratio(rng.gen_range(-h..=h), rng.gen_range(1..=h))
    };
    let rand_coeff = |rng: &mut ChaCha8Rng| {
        let sign = if rng.gen::<bool>() { 1 } else { -1 };
        rng.gen_range(1..=10) * sign
    };
    let mut done = 0;
    while done < trials {
        let x = QuadElem::new(rand_rat(&mut rng), rand_rat(&mut rng), disc);
        let y = QuadElem::new(rand_rat(&mut rng), rand_rat(&mut rng), disc);
        let z = QuadElem::new(rand_rat(&mut rng), rand_rat(&mut rng), disc);
        if x.is_zero() || z.is_zero() {
            continue;
        }
        let a = QuadElem::from_int(rand_coeff(&mut rng), disc);
        let b = QuadElem::from_int(rand_coeff(&mut rng), disc);
        // C = -(A x^p + B y^p) / z^p, an element of K in general
        let c = (-&(&(&a * &x.pow(p)) + &(&b * &y.pow(p)))).checked_div(&z.pow(p))?;
        if c.is_zero() {
            continue;
        }
        let (big_x, big_y) = change_of_variables(&b, &c, p, &x, &y, &z)?;
        let alpha = curve_constant(&a, &b, &c, p);
        if &(&big_y * &big_y) - &big_x.pow(p) != alpha {
            return Ok(false);
        }
        done += 1;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn eq(a: i64, b: i64, c: i64, p: u32, d: i64) -> EquationSpec {
        EquationSpec::from_ints(a, b, c, p, d).unwrap()
    }

    fn disc(v: i64) -> Disc {
        Disc::new(v).unwrap()
    }

    #[test]
    fn rational_set_is_reduced_and_complete() {
        let set = rational_set(2);
        assert_eq!(set.len(), 7); // 0, ±1, ±2, ±1/2
        let set = rational_set(3);
        assert_eq!(set.len(), 15);
        for q in &set {
            assert!(q.numer().abs() <= BigInt::from(3));
            assert!(*q.denom() <= BigInt::from(3));
        }
    }

    #[test]
    fn search_finds_rational_solution() {
        let e = eq(2, 1, 1, 5, 2);
        let sbox = SearchBox::new(2, Scope::RationalOnly);
        let report = search(&e, &sbox);
        assert_eq!(report.enumerated, 7 * 7 * 7);
        assert_eq!(report.enumerated, sbox.predicted_triples(disc(2)));
        assert!(report
            .hits
            .iter()
            .any(|h| h.triple.class == SolutionClass::Rational
                && h.triple.x == QuadElem::from_int(-1, disc(2))
                && h.triple.y == QuadElem::one(disc(2))
                && h.triple.z == QuadElem::one(disc(2))));
        assert_eq!(report.verdict, Verdict::Consistent);
    }

    #[test]
    fn search_reports_trivial_zero_when_not_skipping() {
        let e = eq(2, 3, 5, 5, 2);
        let report = search(&e, &SearchBox::new(1, Scope::RationalOnly));
        assert!(report
            .hits
            .iter()
            .any(|h| h.triple.class == SolutionClass::TrivialZero));
        // (-1, -1, 1): -2 - 3 + 5 = 0, a genuine rational solution
        assert!(report
            .hits
            .iter()
            .any(|h| h.triple.class == SolutionClass::Rational));

        // 2 x^5 + 3 y^5 + 7 z^5 has no hits over {±1}
        let e = eq(2, 3, 7, 5, 2);
        let report = search(&e, &SearchBox::new(1, Scope::RationalOnly).skip_trivial(true));
        assert!(report.hits.is_empty());
        assert_eq!(report.enumerated, 2 * 2 * 2);
    }

    #[test]
    fn search_consistent_for_non_unit_bc() {
        // BC = 6: the corollary says no genuinely irrational solutions, but
        // K-scalar multiples of rational ones (e.g. sqrt(2)·(1, 1, -1)) do
        // appear and must not be mistaken for counterexamples
        let e = eq(1, 2, 3, 5, 2);
        let report = search(&e, &SearchBox::new(2, Scope::FullK).skip_trivial(true));
        assert!(!report.hits.is_empty());
        for h in &report.hits {
            assert!(projectively_rational(&h.triple), "hit {:?}", h.triple);
        }
        assert!(report
            .hits
            .iter()
            .any(|h| !h.triple.x.is_rational() || !h.triple.y.is_rational()));
        assert_eq!(report.verdict, Verdict::Consistent);
    }

    #[test]
    fn search_finds_conjugate_unit_solution_in_ok_scope() {
        let e = eq(-82, 1, 1, 5, 2);
        let report = search(&e, &SearchBox::new(2, Scope::OkOnly).skip_trivial(true));
        assert!(report
            .hits
            .iter()
            .any(|h| h.triple.class == SolutionClass::ConjugateUnit));
        assert_eq!(report.verdict, Verdict::Consistent);
    }

    #[test]
    fn orbit_grouping_collapses_scalar_multiples() {
        let e = eq(2, 1, 1, 5, 2);
        let grouped = search(&e, &SearchBox::new(3, Scope::RationalOnly).skip_trivial(true));
        let raw = search(&e, &SearchBox::new(3, Scope::RationalOnly).skip_trivial(true).raw(true));
        assert!(raw.hits.len() > grouped.hits.len());
        assert_eq!(raw.raw_hits, grouped.raw_hits);
        let total: u64 = grouped.hits.iter().map(|h| h.orbit_size).sum();
        assert_eq!(total, raw.raw_hits);
        // representative of the (-1, 1, 1) orbit is the height-1 member
        let rep = grouped
            .hits
            .iter()
            .find(|h| h.triple.x == QuadElem::from_int(-1, disc(2)))
            .expect("orbit present");
        assert!(rep.orbit_size >= 2);
    }

    #[test]
    fn family_worked_examples() {
        let fam = gen_conjugate_family(&BigInt::one(), &BigInt::one(), 5, disc(2), 1, 1).unwrap();
        assert!(fam.iter().any(|(e, t)| {
            e.a() == &BigInt::from(-82)
                && t.y == QuadElem::new(int(1), int(-1), disc(2))
                && t.z == QuadElem::new(int(1), int(1), disc(2))
        }));
        for (e, t) in &fam {
            assert!(e.is_solution(&t.x, &t.y, &t.z));
            assert_eq!(t.class, SolutionClass::ConjugateUnit);
        }

        let fam =
            gen_conjugate_family(&BigInt::one(), &BigInt::one(), 5, disc(-1), 1, 0).unwrap();
        assert!(fam.iter().any(|(e, _)| e.a() == &BigInt::from(8)));

        assert!(gen_conjugate_family(&BigInt::from(2), &BigInt::one(), 5, disc(2), 1, 1).is_err());
    }

    #[test]
    fn family_members_map_to_pure_irrational_y() {
        let fam = gen_conjugate_family(&BigInt::one(), &BigInt::one(), 5, disc(2), 2, 1).unwrap();
        assert!(!fam.is_empty());
        for (e, t) in &fam {
            let pt = forward_map(e, &t.x, &t.y, &t.z).unwrap();
            assert!(pt.y.re().is_zero());
            assert_eq!(t.y.norm().abs(), t.z.norm().abs());
            assert!(crate::curve::mn_identities_hold(e, &t.x, &t.y, &t.z, &pt));
        }
    }

    #[test]
    fn point_class_is_consistent_with_solution_class() {
        use crate::curve::PointClass;

        let mut cases: Vec<(EquationSpec, SolutionTriple)> = Vec::new();
        let rational_eq = eq(2, 1, 1, 5, 2);
        for h in search(&rational_eq, &SearchBox::new(2, Scope::RationalOnly).skip_trivial(true)).hits {
            cases.push((rational_eq.clone(), h.triple));
        }
        let conj_eq = eq(-82, 1, 1, 5, 2);
        for h in search(&conj_eq, &SearchBox::new(2, Scope::OkOnly).skip_trivial(true).raw(true)).hits {
            cases.push((conj_eq.clone(), h.triple));
        }
        cases.extend(gen_conjugate_family(&BigInt::one(), &BigInt::one(), 5, disc(-1), 2, 0).unwrap());
        assert!(!cases.is_empty());

        for (e, t) in &cases {
            if t.x.is_zero() {
                continue;
            }
            let pt = forward_map(e, &t.x, &t.y, &t.z).unwrap();
            match t.class {
                SolutionClass::Rational => assert!(matches!(
                    pt.y_class,
                    PointClass::YRational | PointClass::YZero
                )),
                SolutionClass::ConjugateUnit => assert!(matches!(
                    pt.y_class,
                    PointClass::YPureIrrational | PointClass::YZero
                )),
                _ => {}
            }
            assert_ne!(pt.y_class, PointClass::YMixed, "nontrivial solution mapped to mixed Y");
        }
    }

    #[test]
    fn trivial_lemma_examples() {
        assert!(verify_trivial_lemma(&eq(1, -1, 5, 5, 2), 2));
        assert!(verify_trivial_lemma(&eq(2, 3, 5, 5, 2), 2));
        assert!(verify_trivial_lemma(&eq(1, 1, 1, 5, -1), 1));
    }

    #[test]
    fn mn_theorem_on_families_and_rational_hits() {
        let mut samples = gen_conjugate_family(&BigInt::one(), &BigInt::one(), 5, disc(2), 2, 1).unwrap();
        let e = eq(2, 1, 1, 5, 2);
        let report = search(&e, &SearchBox::new(2, Scope::RationalOnly).skip_trivial(true));
        for h in report.hits {
            samples.push((e.clone(), h.triple));
        }
        assert!(verify_mn_theorem(&samples).unwrap());

        // a fabricated non-solution is rejected up front
        let bad = SolutionTriple {
            x: QuadElem::one(disc(2)),
            y: QuadElem::one(disc(2)),
            z: QuadElem::one(disc(2)),
            class: SolutionClass::Generic,
        };
        assert!(verify_mn_theorem(&[(e, bad)]).is_err());
    }

    #[test]
    fn map_identity_small_run() {
        assert!(map_identity_trials(5, disc(2), 50, 6, 7).unwrap());
        assert!(map_identity_trials(7, disc(-3), 25, 5, 11).unwrap());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn reports_identical_across_worker_counts() {
        let e = eq(1, 2, 3, 5, 2);
        let sbox = SearchBox::new(1, Scope::FullK);
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| search(&e, &sbox))
        };
        let a = run(1);
        let b = run(2);
        let c = run(8);
        assert_eq!(a.hits, b.hits);
        assert_eq!(b.hits, c.hits);
        assert_eq!(a.enumerated, c.enumerated);
        assert_eq!(a.verdict, c.verdict);
    }
}
