//! JSON forms of fibrations, curves and reports.
//!
//! Integers are arbitrary precision; floats are rejected on input and never
//! produced. Objects serialize with sorted keys, so output is byte-stable.
//!
//! ```json
//! {"fiber": {"genus": 1, "boundary": 1}, "base": {"genus": 0, "boundary": 1},
//!  "cycles": [{"sign": 1, "curve": {"class": "nonsep", "hom": [1, 0], "label": "a"}}],
//!  "bundle": []}
//! ```
//!
//! Separating classes are written `{"sep": [[g1, b1], [g2, b2]]}`; bundle
//! generators as `{"matrix": [[...]], "perm": [1-based images], "label": ...}`.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::catalog::Catalog;
use crate::curves::{CurveClass, Side};
use crate::error::{Error, Result};
use crate::fibration::{
    BaseSurface, InvariantReport, LefschetzFibration, MeridianPlan, Reduction, Sign, SignedCycle,
    UniversalityReport, Verdict, WitnessOutcome,
};
use crate::homology::{HomologyClass, SurfaceSpec};
use crate::mapping::{BundleGen, Curve, Handedness, Letter, MCWord};
use crate::matrix::IntMatrix;
use crate::oracle::{Certificate, Obstruction, SurjectivityVerdict};
use crate::perm::Perm;

/// Pretty JSON with a trailing newline.
pub fn to_pretty_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::input(format!("malformed JSON: {e}")))
}

pub fn big(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal is a JSON number"))
}

fn big_vec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

// ---- reading helpers ------------------------------------------------------

fn object<'a>(v: &'a Value, what: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::input(format!("{what} must be an object")))?;
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::input(format!("unknown field '{k}' in {what}")));
    }
    Ok(obj)
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::input(format!("{what} is missing '{key}'")))
}

fn integer(v: &Value, what: &str) -> Result<BigInt> {
    let n = v
        .as_number()
        .ok_or_else(|| Error::input(format!("{what} must be an integer")))?;
    let s = n.as_str();
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::input(format!("{what} must be an integer, got {s}")));
    }
    BigInt::from_str(s).map_err(|_| Error::input(format!("{what} must be an integer, got {s}")))
}

fn small(v: &Value, what: &str) -> Result<usize> {
    let n = integer(v, what)?;
    usize::try_from(&n)
        .ok()
        .filter(|&x| x <= 1 << 20)
        .ok_or_else(|| Error::input(format!("{what} must be a small non-negative integer, got {n}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::input(format!("{what} must be an array")))
}

fn string<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| Error::input(format!("{what} must be a string")))
}

fn int_vec(v: &Value, what: &str) -> Result<Vec<BigInt>> {
    array(v, what)?.iter().map(|x| integer(x, what)).collect()
}

// ---- surfaces and curves --------------------------------------------------

fn surface_json(genus: usize, boundary: usize) -> Value {
    json!({"genus": genus, "boundary": boundary})
}

fn read_pair(v: &Value, what: &str) -> Result<(usize, usize)> {
    let obj = object(v, what, &["genus", "boundary"])?;
    Ok((
        small(field(obj, "genus", what)?, "genus")?,
        small(field(obj, "boundary", what)?, "boundary")?,
    ))
}

pub fn class_to_json(cls: &CurveClass) -> Value {
    match cls {
        CurveClass::NonSeparating => json!("nonsep"),
        CurveClass::Separating { side_a, side_b } => json!({
            "sep": [[side_a.genus, side_a.boundary], [side_b.genus, side_b.boundary]]
        }),
    }
}

fn class_from_json(v: &Value) -> Result<CurveClass> {
    if let Some(s) = v.as_str() {
        return match s {
            "nonsep" => Ok(CurveClass::NonSeparating),
            _ => Err(Error::input(format!("unknown curve class '{s}'"))),
        };
    }
    let obj = object(v, "curve class", &["sep"])?;
    let sides = array(field(obj, "sep", "curve class")?, "sep")?;
    let side = |x: &Value| -> Result<Side> {
        let p = array(x, "sep side")?;
        if p.len() != 2 {
            return Err(Error::input("a sep side is [genus, boundary]"));
        }
        Ok(Side::new(small(&p[0], "side genus")?, small(&p[1], "side boundary")?))
    };
    if sides.len() != 2 {
        return Err(Error::input("sep needs exactly two sides"));
    }
    let (x, y) = (side(&sides[0])?, side(&sides[1])?);
    if x > y {
        return Err(Error::input("sep sides must be listed in increasing order"));
    }
    Ok(CurveClass::separating(x, y))
}

pub fn curve_to_json(c: &Curve) -> Value {
    json!({
        "class": class_to_json(&c.cls()),
        "hom": big_vec(&c.hom().coords),
        "label": c.label(),
    })
}

pub fn curve_from_json(surface: SurfaceSpec, v: &Value) -> Result<Curve> {
    let obj = object(v, "curve", &["class", "hom", "label"])?;
    let cls = class_from_json(field(obj, "class", "curve")?)?;
    let hom = HomologyClass {
        coords: int_vec(field(obj, "hom", "curve")?, "hom")?,
    };
    let label = string(field(obj, "label", "curve")?, "label")?;
    Curve::new(surface, cls, hom, label)
}

// ---- fibrations -----------------------------------------------------------

fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| big_vec(r)).collect())
}

fn matrix_from_json(v: &Value, n: usize) -> Result<IntMatrix> {
    let rows = array(v, "matrix")?;
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| int_vec(r, "matrix row")).collect::<Result<_>>()?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::input(format!("bundle matrix must be {n}x{n}")));
    }
    Ok(IntMatrix::from_rows(n, &rows))
}

pub fn bundle_to_json(g: &BundleGen) -> Value {
    json!({
        "matrix": matrix_to_json(g.matrix()),
        "perm": g.perm().one_based(),
        "label": g.label(),
    })
}

fn bundle_from_json(surface: SurfaceSpec, v: &Value) -> Result<BundleGen> {
    let obj = object(v, "bundle generator", &["matrix", "perm", "label"])?;
    let matrix = matrix_from_json(field(obj, "matrix", "bundle generator")?, surface.rank())?;
    let perm: Vec<usize> = array(field(obj, "perm", "bundle generator")?, "perm")?
        .iter()
        .map(|x| small(x, "perm entry"))
        .collect::<Result<_>>()?;
    let label = string(field(obj, "label", "bundle generator")?, "label")?;
    BundleGen::new(surface, matrix, Perm::from_one_based(&perm)?, label)
}

pub fn fibration_to_json(f: &LefschetzFibration) -> Value {
    json!({
        "fiber": surface_json(f.fiber().genus, f.fiber().boundary),
        "base": surface_json(f.base().genus(), f.base().boundary()),
        "cycles": f.cycles().iter().map(|c| json!({
            "sign": c.sign.value(),
            "curve": curve_to_json(&c.curve),
        })).collect::<Vec<_>>(),
        "bundle": f.bundle().iter().map(bundle_to_json).collect::<Vec<_>>(),
    })
}

pub fn fibration_from_json(v: &Value) -> Result<LefschetzFibration> {
    let what = "fibration";
    let obj = object(v, what, &["fiber", "base", "cycles", "bundle"])?;
    let (g, b) = read_pair(field(obj, "fiber", what)?, "fiber")?;
    let fiber = SurfaceSpec::new(g, b);
    let (h, d) = read_pair(field(obj, "base", what)?, "base")?;
    let base = BaseSurface::new(h, d)?;
    let cycles = array(field(obj, "cycles", what)?, "cycles")?
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let o = object(c, "cycle", &["sign", "curve"])?;
            let sign = integer(field(o, "sign", "cycle")?, "sign")?;
            let sign = i64::try_from(&sign)
                .ok()
                .and_then(|s| Sign::from_i64(s).ok())
                .ok_or_else(|| Error::input(format!("cycle {}: sign must be 1 or -1", i + 1)))?;
            let curve = curve_from_json(fiber, field(o, "curve", "cycle")?)
                .map_err(|e| Error::input(format!("cycle {}: {e}", i + 1)))?;
            Ok(SignedCycle::new(curve, sign))
        })
        .collect::<Result<Vec<_>>>()?;
    let bundle = match obj.get("bundle") {
        None => Vec::new(),
        Some(v) => array(v, "bundle")?
            .iter()
            .map(|g| bundle_from_json(fiber, g))
            .collect::<Result<Vec<_>>>()?,
    };
    LefschetzFibration::new(fiber, base, cycles, bundle)
}

pub fn parse_fibration(text: &str) -> Result<LefschetzFibration> {
    fibration_from_json(&parse_json(text)?)
}

pub fn write_fibration(f: &LefschetzFibration) -> String {
    to_pretty_string(&fibration_to_json(f))
}

// ---- words and plans ------------------------------------------------------

pub fn word_to_json(w: &MCWord) -> Value {
    Value::Array(
        w.letters()
            .iter()
            .map(|l| match l {
                Letter::Twist(t) => json!({
                    "curve": curve_to_json(&t.curve),
                    "handed": match t.handed {
                        Handedness::Right => "right",
                        Handedness::Left => "left",
                    },
                }),
                Letter::Bundle { gen, inverse } => json!({"bundle": gen.label(), "inverse": inverse}),
            })
            .collect(),
    )
}

pub fn plan_to_json(plan: &MeridianPlan) -> Value {
    Value::Array(
        plan.entries
            .iter()
            .map(|e| {
                json!({
                    "source": e.source + 1,
                    "degree": e.degree.value(),
                    "conjugator": word_to_json(&e.conjugator),
                    "conjugator_name": e.conjugator.name(),
                })
            })
            .collect(),
    )
}

pub fn witness_to_json(w: &WitnessOutcome) -> Value {
    match w {
        WitnessOutcome::Immersion(p) => json!({"result": "immersion", "plan": plan_to_json(p)}),
        WitnessOutcome::Plan(p) => json!({"result": "plan", "plan": plan_to_json(p)}),
        WitnessOutcome::Unknown { unmatched } => json!({
            "result": "unknown",
            "unmatched": unmatched.iter().map(|i| i + 1).collect::<Vec<_>>(),
        }),
    }
}

// ---- reports --------------------------------------------------------------

pub fn invariants_to_json(r: &InvariantReport) -> Value {
    json!({
        "euler": r.euler,
        "h1_free_rank": r.h1_free_rank,
        "h1_torsion": big_vec(&r.h1_torsion),
        "h2_rank": r.h2_rank,
        "signs": {"positive": r.positive, "negative": r.negative},
        "allowable": r.allowable,
    })
}

fn certificate_to_json(c: &Certificate) -> Value {
    match c {
        Certificate::TrivialGroup => json!({"kind": "trivial_group"}),
        Certificate::AnnulusCore => json!({"kind": "annulus_core"}),
        Certificate::PantsBoundaryTwists => json!({"kind": "pants_boundary_twists"}),
        Certificate::TorusPair { first, second } => {
            json!({"kind": "torus_pair", "curves": [first, second]})
        }
        Certificate::StandardConfiguration { genus } => {
            json!({"kind": "standard_configuration", "genus": genus})
        }
    }
}

fn obstruction_kind(o: &Obstruction) -> &'static str {
    match o {
        Obstruction::NoTwists => "no_twists",
        Obstruction::CentralTwistsOnly => "central_twists_only",
        Obstruction::MissingBoundaryTwist { .. } => "missing_boundary_twist",
        Obstruction::ModPSpan { .. } => "mod_p_span",
        Obstruction::ModPReducible { .. } => "mod_p_reducible",
        Obstruction::ModPClosure { .. } => "mod_p_closure",
    }
}

pub fn surjectivity_to_json(v: &SurjectivityVerdict) -> Value {
    match v {
        SurjectivityVerdict::Certified(c) => json!({"verdict": "certified", "certificate": certificate_to_json(c)}),
        SurjectivityVerdict::Obstructed(o) => json!({
            "verdict": "obstructed",
            "obstruction": obstruction_kind(o),
            "reason": o.to_string(),
        }),
        SurjectivityVerdict::Unknown => json!({"verdict": "unknown"}),
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Unknown => "unknown",
    }
}

pub fn universality_to_json(r: &UniversalityReport) -> Value {
    json!({
        "cond_perm": r.cond_perm,
        "cond_lef": surjectivity_to_json(&r.cond_lef),
        "cond2": r.cond2,
        "cond2strong": r.cond2strong,
        "missing_classes": r.missing_classes.iter().map(class_to_json).collect::<Vec<_>>(),
        "single_sign_classes": r.single_sign_classes.iter().map(class_to_json).collect::<Vec<_>>(),
        "universal": verdict_str(r.universal),
        "strongly_universal": verdict_str(r.strongly_universal),
    })
}

pub fn reduction_to_json(r: &Reduction) -> Value {
    json!({
        "fibration": fibration_to_json(&r.fibration),
        "exhausted": r.exhausted,
        "steps": r.steps.iter().map(|s| json!({
            "generator": s.generator_name,
            "fiber_before": surface_json(s.fiber_before.genus, s.fiber_before.boundary),
            "removed": {"sign": s.removed.sign.value(), "curve": curve_to_json(&s.removed.curve)},
        })).collect::<Vec<_>>(),
    })
}

pub fn census_to_json(surface: SurfaceSpec, classes: Option<&[CurveClass]>) -> Value {
    let mut v = json!({
        "genus": surface.genus,
        "boundary": surface.boundary,
        "count": crate::curves::class_count(surface),
    });
    if let Some(classes) = classes {
        v["classes"] = Value::Array(classes.iter().map(class_to_json).collect());
    }
    v
}

pub fn catalog_to_json(cat: &Catalog) -> Value {
    let s = cat.surface();
    json!({
        "fiber": surface_json(s.genus, s.boundary),
        "curves": cat.curves().iter().map(curve_to_json).collect::<Vec<_>>(),
    })
}

/// The shipped catalog file: one entry per genus `1..=6` on `F_{g,1}`.
pub const CATALOG_DATA: &str = include_str!("../data/generator_catalog.json");

pub fn catalogs_to_json(max_genus: usize) -> Result<Value> {
    let cats = (1..=max_genus)
        .map(|g| Ok(catalog_to_json(&Catalog::genus(g)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({"catalogs": cats}))
}

/// Parses the shipped catalog file into curve lists.
pub fn load_catalog_data(text: &str) -> Result<Vec<(SurfaceSpec, Vec<Curve>)>> {
    let v = parse_json(text)?;
    let obj = object(&v, "catalog file", &["catalogs"])?;
    array(field(obj, "catalogs", "catalog file")?, "catalogs")?
        .iter()
        .map(|entry| {
            let o = object(entry, "catalog", &["fiber", "curves"])?;
            let (g, b) = read_pair(field(o, "fiber", "catalog")?, "fiber")?;
            let s = SurfaceSpec::new(g, b);
            let curves = array(field(o, "curves", "catalog")?, "curves")?
                .iter()
                .map(|c| curve_from_json(s, c))
                .collect::<Result<Vec<_>>>()?;
            Ok((s, curves))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::{p_g, u_10, u_11, u_g1};

    #[test]
    fn round_trip_is_byte_stable() {
        for f in [u_11().unwrap(), u_10().unwrap(), u_g1(3).unwrap(), p_g(2).unwrap()] {
            let text = write_fibration(&f);
            let back = parse_fibration(&text).unwrap();
            assert_eq!(back, f);
            assert_eq!(write_fibration(&back), text);
            assert!(text.ends_with("}\n"));
        }
    }

    #[test]
    fn keys_are_sorted() {
        let text = write_fibration(&u_11().unwrap());
        let base = text.find("\"base\"").unwrap();
        let bundle = text.find("\"bundle\"").unwrap();
        let cycles = text.find("\"cycles\"").unwrap();
        let fiber = text.find("\"fiber\"").unwrap();
        assert!(base < bundle && bundle < cycles && cycles < fiber);
    }

    #[test]
    fn rejects_bad_input() {
        let good = write_fibration(&u_11().unwrap());
        let v = parse_json(&good).unwrap();
        let mut extra = v.clone();
        extra["colour"] = json!("red");
        assert!(fibration_from_json(&extra).is_err());
        let float = good.replacen("\"sign\": -1", "\"sign\": -1.0", 1);
        assert!(parse_fibration(&float).is_err());
        let bad_hom = good.replacen("\"label\": \"a\"", "\"label\": \"a\", \"x\": 1", 1);
        assert!(parse_fibration(&bad_hom).is_err());
        let mut wrong_sign = v.clone();
        wrong_sign["cycles"][0]["sign"] = json!(2);
        assert!(fibration_from_json(&wrong_sign).is_err());
        let mut not_simple = v.clone();
        not_simple["cycles"][0]["curve"]["hom"] = json!([2, 0]);
        assert!(fibration_from_json(&not_simple).is_err());
        assert!(parse_fibration("{").is_err());
    }

    #[test]
    fn big_integers_survive() {
        let s = SurfaceSpec::new(1, 1);
        let huge: BigInt = BigInt::from(10).pow(40) + 1;
        let c = Curve::new(
            s,
            CurveClass::NonSeparating,
            HomologyClass { coords: vec![huge.clone(), BigInt::from(1)] },
            "h",
        )
        .unwrap();
        let f = LefschetzFibration::over_disk(s, vec![SignedCycle::new(c, Sign::Positive)]).unwrap();
        let text = write_fibration(&f);
        assert!(text.contains(&huge.to_string()));
        assert_eq!(parse_fibration(&text).unwrap(), f);
    }

    /// Rewrites the shipped catalog; run with `--ignored` after changing the catalog.
    #[test]
    #[ignore]
    fn regenerate_catalog_data() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/generator_catalog.json");
        std::fs::write(path, to_pretty_string(&catalogs_to_json(6).unwrap())).unwrap();
    }

    #[test]
    fn shipped_catalog_matches_generated() {
        let shipped = load_catalog_data(CATALOG_DATA).unwrap();
        assert_eq!(shipped.len(), 6);
        for (g, (s, curves)) in (1..=6).zip(&shipped) {
            let cat = Catalog::genus(g).unwrap();
            assert_eq!(*s, cat.surface());
            assert_eq!(curves.as_slice(), cat.curves());
        }
        assert_eq!(to_pretty_string(&catalogs_to_json(6).unwrap()), CATALOG_DATA);
    }
}
