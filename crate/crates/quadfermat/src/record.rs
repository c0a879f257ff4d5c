//! The line-oriented interchange format and CSV export.
//!
//! Every record is one line of `|`-separated fields, the first field naming
//! the record kind and the rest being `key=value` pairs. Field values use the
//! canonical renderings of their types (elements as `a/b + c/e*sqrt(d)`,
//! classes as kebab-case tags), which contain no `|` or `=`, so the format
//! needs no quoting. All numeric output is exact.
//!
//! ```text
//! solution|A=-82|B=1|C=1|p=5|d=2|x=1|y=1 - 1*sqrt(2)|z=1 + 1*sqrt(2)|class=conjugate-unit|prediction=conjugate-unit-shape
//! point|A=-82|B=1|C=1|p=5|d=2|X=1|Y=-29*sqrt(2)|class=y-pure-irrational|prediction=conjugate-unit-shape
//! search-summary|A=1|B=2|C=3|p=5|d=2|scope=full-k|height=2|skip-trivial=true|raw=false|enumerated=110592|raw-hits=20|orbits=1|verdict=consistent
//! ```
//!
//! Solution records written by a search carry a trailing `orbit=N` field with
//! the orbit size. Parsing a solution record re-validates it: the triple must
//! satisfy the equation and re-classify to the declared class, so replayed
//! fixtures cannot smuggle in unverified data.

use num_bigint::BigInt;

use crate::curve::{classify_point, forward_map, EquationSpec, Prediction, SolutionTriple};
use crate::curve::{CurvePoint, SolutionClass};
use crate::quad::{Disc, QuadElem};
use crate::search::{SearchHit, SearchReport};
use crate::{Error, Result};

/// Renders a solution record. The prediction field is the point-class
/// prediction of the mapped curve point when the solution is nontrivial (and
/// `none` otherwise); `orbit` appends the orbit size when given.
pub fn solution_record(eq: &EquationSpec, t: &SolutionTriple, orbit: Option<u64>) -> String {
    let prediction = solution_prediction(eq, t)
        .map(|p| p.to_string())
        .unwrap_or_else(|| "none".to_string());
    let mut line = format!(
        "solution|A={}|B={}|C={}|p={}|d={}|x={}|y={}|z={}|class={}|prediction={}",
        eq.a(),
        eq.b(),
        eq.c(),
        eq.p(),
        eq.disc(),
        t.x.render(),
        t.y.render(),
        t.z.render(),
        t.class,
        prediction,
    );
    if let Some(n) = orbit {
        line.push_str(&format!("|orbit={n}"));
    }
    line
}

/// The prediction attached to a solution: the point classification of its
/// image on the curve, when the map applies.
pub fn solution_prediction(eq: &EquationSpec, t: &SolutionTriple) -> Option<Prediction> {
    if t.x.is_zero() || t.y.is_zero() || t.z.is_zero() {
        return None;
    }
    let pt = forward_map(eq, &t.x, &t.y, &t.z).ok()?;
    classify_point(eq, &pt).ok()
}

/// Renders a point record.
pub fn point_record(eq: &EquationSpec, pt: &CurvePoint, prediction: Prediction) -> String {
    format!(
        "point|A={}|B={}|C={}|p={}|d={}|X={}|Y={}|class={}|prediction={}",
        eq.a(),
        eq.b(),
        eq.c(),
        eq.p(),
        eq.disc(),
        pt.x.render(),
        pt.y.render(),
        pt.y_class,
        prediction,
    )
}

/// Renders the summary line of a search report. Wall time is deliberately
/// absent: the serialized report is byte-identical across runs and worker
/// counts.
pub fn search_summary_record(r: &SearchReport) -> String {
    format!(
        "search-summary|A={}|B={}|C={}|p={}|d={}|scope={}|height={}|skip-trivial={}|raw={}|enumerated={}|raw-hits={}|orbits={}|verdict={}",
        r.equation.a(),
        r.equation.b(),
        r.equation.c(),
        r.equation.p(),
        r.equation.disc(),
        r.sbox.scope,
        r.sbox.height,
        r.sbox.skip_trivial,
        r.sbox.raw,
        r.enumerated,
        r.raw_hits,
        r.hits.len(),
        r.verdict,
    )
}

/// Full structured-records serialization of a report: one solution line per
/// hit, then the summary line.
pub fn render_search_report(r: &SearchReport) -> String {
    let mut out = String::new();
    for SearchHit { triple, orbit_size } in &r.hits {
        out.push_str(&solution_record(&r.equation, triple, Some(*orbit_size)));
        out.push('\n');
    }
    out.push_str(&search_summary_record(r));
    out.push('\n');
    out
}

/// CSV export: one row per hit.
pub fn search_report_csv(r: &SearchReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["A", "B", "C", "p", "d", "x", "y", "z", "class", "prediction", "orbit"])
        .map_err(|e| Error::Parse(e.to_string()))?;
    for SearchHit { triple: t, orbit_size } in &r.hits {
        let prediction = solution_prediction(&r.equation, t)
            .map(|p| p.to_string())
            .unwrap_or_else(|| "none".to_string());
        w.write_record([
            r.equation.a().to_string(),
            r.equation.b().to_string(),
            r.equation.c().to_string(),
            r.equation.p().to_string(),
            r.equation.disc().to_string(),
            t.x.render(),
            t.y.render(),
            t.z.render(),
            t.class.to_string(),
            prediction,
            orbit_size.to_string(),
        ])
        .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Splits any record line into its kind and `key=value` fields.
pub fn split_record(line: &str) -> Result<(&str, Vec<(&str, &str)>)> {
    let mut parts = line.trim_end_matches('\n').split('|');
    let kind = parts.next().filter(|k| !k.is_empty()).ok_or_else(|| {
        Error::Parse("empty record line".to_string())
    })?;
    let mut fields = Vec::new();
    for part in parts {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("malformed field `{part}`")))?;
        fields.push((k, v));
    }
    Ok((kind, fields))
}

fn field<'a>(fields: &[(&'a str, &'a str)], key: &str) -> Result<&'a str> {
    fields
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

/// Parses and re-validates a solution record.
///
/// The equation is rebuilt through full validation, the triple is checked to
/// satisfy it, and the declared class must match re-classification.
pub fn parse_solution_record(
    line: &str,
) -> Result<(EquationSpec, SolutionTriple, Option<u64>)> {
    let (kind, fields) = split_record(line)?;
    if kind != "solution" {
        return Err(Error::Parse(format!("expected a solution record, got `{kind}`")));
    }
    let int = |key: &str| -> Result<BigInt> {
        field(&fields, key)?
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer in field `{key}`")))
    };
    let p: u32 = field(&fields, "p")?
        .parse()
        .map_err(|_| Error::Parse("bad exponent field".to_string()))?;
    let d: i64 = field(&fields, "d")?
        .parse()
        .map_err(|_| Error::Parse("bad discriminant field".to_string()))?;
    let disc = Disc::new(d)?;
    let eq = EquationSpec::new(int("A")?, int("B")?, int("C")?, p, disc)?;
    let x = QuadElem::parse(field(&fields, "x")?, disc)?;
    let y = QuadElem::parse(field(&fields, "y")?, disc)?;
    let z = QuadElem::parse(field(&fields, "z")?, disc)?;
    let declared: SolutionClass = field(&fields, "class")?.parse()?;
    let triple = crate::curve::classify_solution(&eq, &x, &y, &z)?;
    if triple.class != declared {
        return Err(Error::Parse(format!(
            "declared class `{declared}` does not match recomputed `{}`",
            triple.class
        )));
    }
    let orbit = match fields.iter().find(|(k, _)| *k == "orbit") {
        None => None,
        Some((_, v)) => Some(
            v.parse::<u64>()
                .map_err(|_| Error::Parse("bad orbit field".to_string()))?,
        ),
    };
    Ok((eq, triple, orbit))
}
