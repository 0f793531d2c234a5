use std::collections::BTreeMap;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cohint::bunih::{gl_degree, ih_series_with, special_face_census_bun, BunCalculator, CurveSpec};
use cohint::cohi::{act, check_integrality_bg, induction, symmetric_induction, DEGREE_CAP};
use cohint::facelat::{
    arrangement, central_rank, chambers_in_face, sign_representation, special_faces_with, Bounds, Chamber, Face,
    Provenance,
};
use cohint::linalg::Subspace;
use cohint::poly::Poly;
use cohint::quiverbps::{bps_series, integrality_report, parity_consistent, PolyVerdict, QuiverSpec};
use cohint::repsym::{
    decompose_irreducibles, decompose_virtual, irreducible_character, is_orthogonal, is_orthogonal_virtual,
    is_weyl_invariant, self_dual_indicator,
};
use cohint::rootdata::{relative_weyl, GroupSpec, RootDatum, WeylGroup, DEFAULT_WEYL_BOUND};
use cohint::series::Laurent;
use cohint::{rat, Rat};

use crate::report::Table;
use crate::schema::{parse_rat, BgDoc, BunDoc, CohiDoc, GoldenDoc, QuiverDoc, RepDoc};
use crate::CliError;

/// A finished computation. A violation still carries its result.
pub struct Done {
    pub result: Value,
    pub table: Table,
    pub violation: Option<String>,
}

impl Done {
    fn ok(result: Value, table: Table) -> Self {
        Done { result, table, violation: None }
    }
}

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(p.terms().iter().map(|(e, c)| json!({ "exp": e, "coeff": c.to_string() })).collect())
}

fn provenance(p: Provenance) -> &'static str {
    match p {
        Provenance::Weight => "weight",
        Provenance::Root => "root",
        Provenance::Both => "both",
    }
}

fn require_invariant(rd: &RootDatum, v: &cohint::repsym::WeightMultiset) -> Result<(), CliError> {
    if is_weyl_invariant(rd, v) {
        Ok(())
    } else {
        Err(CliError::Invalid(format!("weights {v} are not stable under the Weyl group")))
    }
}

pub fn faces(raw: &str, bounds: Bounds) -> Result<Done, CliError> {
    let (rd, v) = RepDoc::load(raw)?;
    require_invariant(&rd, &v)?;
    let arr = arrangement(&rd, &v);
    if arr.len() > bounds.max_hyperplanes {
        return Err(CliError::Invalid(format!("{} hyperplanes exceed --max-hyperplanes", arr.len())));
    }
    let w = WeylGroup::new(&rd)?;
    let mut table = Table::new(&["face", "dim", "aut_order", "sign_character", "chambers"]);
    let mut faces = Vec::new();
    for (i, f) in special_faces_with(&rd, &v, &w).iter().enumerate() {
        let sign = sign_representation(&rd, &v, &f.face, &f.aut, bounds)?;
        let chambers = chambers_in_face(&f.face, bounds)?.len();
        let sign_text = if sign.is_trivial() { "trivial".to_string() } else { format!("{:?}", sign.values) };
        table.push(vec![
            i.to_string(),
            f.face.dim().to_string(),
            f.aut.order().to_string(),
            sign_text,
            chambers.to_string(),
        ]);
        faces.push(json!({
            "dim": f.face.dim(),
            "basis": f.face.subspace().basis().iter().map(|b| rats(b)).collect::<Vec<_>>(),
            "aut_order": f.aut.order(),
            "stabilizer_order": f.aut.stabilizer_order,
            "fixer_order": f.aut.fixer_order,
            "sign_character": sign.values,
            "sign_trivial": sign.is_trivial(),
            "chambers": chambers,
            "numerically_symmetric": f.face.is_numerically_symmetric(&v),
            "warning": sign.warning,
        }));
    }
    let hyperplanes: Vec<Value> = arr
        .hyperplanes()
        .iter()
        .map(|h| json!({ "covector": h.covector, "provenance": provenance(h.provenance) }))
        .collect();
    let result = json!({
        "group": rd.label(),
        "rank": rd.rank(),
        "central_rank": central_rank(&rd, &v),
        "arrangement": hyperplanes,
        "faces": faces,
    });
    Ok(Done::ok(result, table))
}

pub fn sym(raw: &str) -> Result<Done, CliError> {
    let (rd, v) = RepDoc::load(raw)?;
    require_invariant(&rd, &v)?;
    let genuine = v.is_genuine();
    let parts = if genuine { decompose_irreducibles(&rd, &v)? } else { decompose_virtual(&rd, &v)? };
    let symmetric = v.is_numerically_symmetric();
    let orthogonal = match (symmetric, genuine) {
        (false, _) => None,
        (true, true) => Some(is_orthogonal(&rd, &v)?),
        (true, false) => Some(is_orthogonal_virtual(&rd, &v)?),
    };
    let mut table = Table::new(&["highest_weight", "multiplicity", "dim", "self_duality"]);
    let mut decomposition = Vec::new();
    for p in &parts {
        let dim = irreducible_character(&rd, &p.highest_weight).dim();
        let kind = self_dual_indicator(&rd, &p.highest_weight).to_string();
        table.push(vec![format!("{:?}", p.highest_weight), p.multiplicity.to_string(), dim.to_string(), kind.clone()]);
        decomposition.push(json!({
            "highest_weight": p.highest_weight,
            "multiplicity": p.multiplicity,
            "dim": dim,
            "self_duality": kind,
        }));
    }
    let result = json!({
        "group": rd.label(),
        "dim": v.dim(),
        "virtual": !genuine,
        "symmetric": symmetric,
        "orthogonal": orthogonal,
        "decomposition": decomposition,
    });
    Ok(Done::ok(result, table))
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> Poly {
    let count = rng.gen_range(1..=4);
    let terms = (0..count)
        .map(|_| {
            let degree = rng.gen_range(0..=max_degree);
            let mut e = vec![0u32; n];
            for _ in 0..degree {
                e[rng.gen_range(0..n)] += 1;
            }
            (e, rat(rng.gen_range(-5..=5)))
        })
        .collect::<Vec<_>>();
    Poly::from_terms(n, terms)
}

pub fn cohi(raw: &str, bounds: Bounds, seed: u64) -> Result<Done, CliError> {
    let doc = CohiDoc::load(raw)?;
    let rd = doc.group.root_datum()?;
    let v = crate::schema::weights(rd.rank(), &doc.weights)?;
    require_invariant(&rd, &v)?;
    let n = rd.rank();
    let subspace = match &doc.face {
        None => Subspace::full(n),
        Some(rows) => {
            if rows.iter().any(|r| r.len() != n) {
                return Err(CliError::Invalid(format!("face vectors must have {n} entries")));
            }
            Subspace::span_int(n, rows)
        }
    };
    let face = Face::new(&rd, &v, subspace);
    let w = WeylGroup::new(&rd)?;
    let f = doc.polynomial(n)?;

    let mut table = Table::new(&["exp", "coeff"]);
    let mut result = serde_json::Map::new();
    result.insert("group".into(), json!(rd.label()));
    result.insert("face_dim".into(), json!(face.dim()));
    if !doc.polynomial.is_empty() || doc.battery.is_none() {
        let out = if doc.symmetric {
            if doc.chamber.is_some() {
                return Err(CliError::Invalid("`chamber` is chosen automatically when `symmetric` is set".into()));
            }
            symmetric_induction(&rd, &v, &face, &f, &w, bounds)?
        } else {
            let chamber = match &doc.chamber {
                Some(p) => {
                    let point = p.iter().map(|x| parse_rat(x)).collect::<Result<Vec<_>, _>>()?;
                    if point.len() != n {
                        return Err(CliError::Invalid(format!("chamber point must have {n} entries")));
                    }
                    Chamber::at_point(&face, point)?
                }
                None => chambers_in_face(&face, bounds)?.remove(0),
            };
            induction(&rd, &v, &face, &chamber, &f, &w)?
        };
        for (e, c) in out.output.terms() {
            table.push(vec![format!("{e:?}"), c.to_string()]);
        }
        let chamber_id = chambers_in_face(&face, bounds)?.iter().position(|c| c.signs() == out.chamber.signs());
        result.insert("result".into(), poly_json(&out.output));
        result.insert("chamber_id".into(), json!(chamber_id));
        result.insert("shift".into(), json!(out.shift));
        result.insert("chamber_point".into(), json!(rats(out.chamber.point())));
        result.insert("chamber_signs".into(), json!(out.chamber.signs()));
    }
    if let Some(b) = &doc.battery {
        if b.polynomials > 500 || b.max_degree > 12 {
            return Err(CliError::Invalid("battery limited to 500 polynomials of degree ≤ 12".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let aut = relative_weyl(&w, face.subspace());
        let sign = sign_representation(&rd, &v, &face, &aut, bounds)?;
        let levi = cohint::rootdata::levi_of_subspace(&rd, face.subspace())?;
        let mut nonzero = 0;
        for _ in 0..b.polynomials {
            let p = random_poly(&mut rng, n, b.max_degree);
            // Project onto the sign-isotypic part, after symmetrizing over W_L.
            let p = levi.weyl.iter().fold(Poly::zero(n), |acc, g| acc + act(&g.inverse, &p));
            let f = aut.elements.iter().zip(&sign.values).fold(Poly::zero(n), |acc, (g, &s)| {
                acc + act(&g.representative.inverse, &p).scale(&if s == 1 { Rat::one() } else { -Rat::one() })
            });
            let out = symmetric_induction(&rd, &v, &face, &f, &w, bounds)?;
            if !out.output.is_zero() {
                nonzero += 1;
            }
        }
        result.insert(
            "battery".into(),
            json!({ "seed": seed, "polynomials": b.polynomials, "max_degree": b.max_degree, "nonzero": nonzero, "passed": true }),
        );
    }
    Ok(Done::ok(Value::Object(result), table))
}

pub fn bg_check(raw: &str) -> Result<Done, CliError> {
    let doc = BgDoc::load(raw)?;
    if doc.degree_bound > DEGREE_CAP {
        return Err(CliError::Invalid(format!("degree_bound exceeds {DEGREE_CAP}")));
    }
    let rd = doc.group.root_datum()?;
    let reports = check_integrality_bg(&rd, doc.degree_bound)?;
    let mut table = Table::new(&["degree", "source_dim", "image_dim", "target_dim", "invariant", "pass"]);
    let mut rows = Vec::new();
    for r in &reports {
        table.push(vec![
            r.degree.to_string(),
            r.source_dim.to_string(),
            r.image_dim.to_string(),
            r.target_dim.to_string(),
            r.image_invariant.to_string(),
            r.passes().to_string(),
        ]);
        rows.push(json!({
            "degree": r.degree,
            "source_dim": r.source_dim,
            "image_dim": r.image_dim,
            "target_dim": r.target_dim,
            "image_invariant": r.image_invariant,
            "pass": r.passes(),
        }));
    }
    let failing: Vec<u32> = reports.iter().filter(|r| !r.passes()).map(|r| r.degree).collect();
    let violation = (!failing.is_empty()).then(|| format!("integrality fails in degrees {failing:?}"));
    let result =
        json!({ "group": rd.label(), "degree_bound": doc.degree_bound, "passed": failing.is_empty(), "degrees": rows });
    Ok(Done { result, table, violation })
}

/// `s^k` printed as a power of `q`.
fn q_power(k: i64) -> String {
    match k {
        0 => "1".into(),
        k if k % 2 == 0 => format!("q^{}", k / 2),
        k => format!("q^({k}/2)"),
    }
}

fn laurent_text(l: &Laurent) -> String {
    if l.is_zero() {
        return "0".into();
    }
    l.terms()
        .map(|(k, c)| if c.is_one() { q_power(k) } else { format!("{c}*{}", q_power(k)) })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn gamma_key(g: &[u32]) -> String {
    g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn bps(raw: &str, gamma_max: &[u32], window: u32, golden: Option<&str>) -> Result<Done, CliError> {
    let q: QuiverSpec = QuiverDoc::load(raw)?;
    let gamma_max = resolve_gamma_max(q.vertices(), gamma_max)?;
    let b = bps_series(&q, &gamma_max, window)?;
    let verdicts = integrality_report(&q, &gamma_max, window)?;
    let mut table = Table::new(&["gamma", "omega", "polynomial", "integer"]);
    let mut rows = Vec::new();
    let mut problems = Vec::new();
    for v in &verdicts {
        let o = &b.omega[&v.gamma];
        let known = o.known_part();
        let verdict = match v.polynomial {
            PolyVerdict::Polynomial => "polynomial",
            PolyVerdict::NotPolynomial => "not-polynomial",
            PolyVerdict::Inconclusive => "inconclusive",
        };
        if !parity_consistent(&q, &v.gamma, o) && v.integer_coefficients {
            problems.push(format!("Ω_{{{}}} has the wrong parity", gamma_key(&v.gamma)));
        }
        if b.symmetric && (v.polynomial == PolyVerdict::NotPolynomial || !v.integer_coefficients) {
            problems.push(format!("Ω_{{{}}} of a symmetric quiver is not an integer polynomial", gamma_key(&v.gamma)));
        }
        table.push(vec![gamma_key(&v.gamma), laurent_text(&known), verdict.into(), v.integer_coefficients.to_string()]);
        rows.push(json!({
            "gamma": v.gamma,
            "omega": known
                .terms()
                .map(|(k, c)| json!({ "gamma": v.gamma, "half_power": k, "coeff": c.to_string() }))
                .collect::<Vec<_>>(),
            "omega_text": laurent_text(&known),
            "known_below_half_power": o.prec(),
            "polynomial": verdict,
            "integer_coefficients": v.integer_coefficients,
        }));
    }
    if let Some(text) = golden {
        let doc = GoldenDoc::load(text)?;
        for (key, terms) in &doc.omega {
            let gamma: Vec<u32> = key
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| CliError::Invalid(format!("bad γ `{key}` in golden file"))))
                .collect::<Result<_, _>>()?;
            let expect = Laurent::from_terms(
                terms.iter().map(|(k, c)| parse_rat(c).map(|c| (*k, c))).collect::<Result<Vec<_>, _>>()?,
                None,
            );
            match b.omega.get(&gamma) {
                None => return Err(CliError::Invalid(format!("golden γ = {key} lies outside --gamma-max"))),
                Some(o) if o.known_part() != expect => problems.push(format!(
                    "Ω_{{{key}}} = {} differs from the golden value {}",
                    laurent_text(&o.known_part()),
                    laurent_text(&expect)
                )),
                Some(_) => {}
            }
        }
    }
    let result = json!({
        "vertices": q.vertices(),
        "symmetric": b.symmetric,
        "warning": b.warning,
        "gamma_max": gamma_max,
        "window_q_powers": window,
        "omega": rows,
    });
    let violation = (!problems.is_empty()).then(|| problems.join("; "));
    Ok(Done { result, table, violation })
}

pub const MAX_GAMMA: u32 = 8;
pub const MAX_WINDOW: u32 = 200;

pub fn resolve_gamma_max(vertices: usize, given: &[u32]) -> Result<Vec<u32>, CliError> {
    let g = match given.len() {
        0 => vec![3; vertices],
        1 => vec![given[0]; vertices],
        n if n == vertices => given.to_vec(),
        n => return Err(CliError::Invalid(format!("--gamma-max has {n} entries for {vertices} vertices"))),
    };
    if g.iter().any(|&x| x > MAX_GAMMA) {
        return Err(CliError::Invalid(format!("--gamma-max entries are limited to {MAX_GAMMA}")));
    }
    Ok(g)
}

pub fn bun_ih(raw: &str) -> Result<Done, CliError> {
    let doc = BunDoc::load(raw)?;
    let calc = BunCalculator::new(CurveSpec::new(doc.g, doc.n)?);
    let ss = calc.ss(doc.r, doc.d);
    let ss_json = json!({
        "coefficients": (0..=doc.n).map(|k| ss.coeff(k).to_string()).collect::<Vec<_>>(),
        "known_through": doc.n,
    });
    let rd = RootDatum::new(&GroupSpec::gl(doc.r as usize))?;
    let census = special_face_census_bun(&rd, doc.g, &gl_degree(doc.r as usize, doc.d))?;
    let census_json: Vec<Value> = census
        .iter()
        .map(|row| {
            json!({
                "partition": row.partition,
                "face_dim": row.face_dim,
                "relative_weyl_order": row.relative_weyl_order,
                "sign": row.sign_description(),
                "admissible": row.lift.is_some(),
                "lift": row.lift.as_ref().map(|l| l.lift.clone()),
            })
        })
        .collect();
    let mut table = Table::new(&["k", "b_k"]);
    let mut result: BTreeMap<&str, Value> = BTreeMap::new();
    result.insert("r", json!(doc.r));
    result.insert("d", json!(doc.d));
    result.insert("g", json!(doc.g));
    result.insert("ss_series", ss_json);
    result.insert("census", Value::Array(census_json));
    let violation = match ih_series_with(&calc, doc.r, doc.d) {
        Ok(ih) => {
            for (k, b) in ih.betti.iter().enumerate() {
                table.push(vec![k.to_string(), b.to_string()]);
            }
            let display = ih
                .polynomial
                .terms()
                .map(|(k, c)| {
                    let c = if k > 0 && c.is_one() { String::new() } else { c.to_string() };
                    match k {
                        0 => c,
                        1 => format!("{c}t"),
                        _ => format!("{c}t^{k}"),
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ");
            result.insert(
                "ih_polynomial",
                json!({ "betti": ih.betti, "degree": ih.betti.len() - 1, "display": display }),
            );
            None
        }
        Err(e) if e.is_invariant_violation() => {
            result.insert("ih_polynomial", Value::Null);
            Some(e.to_string())
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Done { result: serde_json::to_value(result).expect("serializable"), table, violation })
}

pub fn weyl_bound() -> usize {
    DEFAULT_WEYL_BOUND
}

/// A golden document for the known part of every Ω in a `bps` result.
pub fn golden_from(result: &Value) -> String {
    let mut omega = BTreeMap::new();
    for row in result["omega"].as_array().into_iter().flatten() {
        let gamma: Vec<String> = row["gamma"].as_array().into_iter().flatten().map(|x| x.to_string()).collect();
        let terms: Vec<Value> =
            row["omega"].as_array().into_iter().flatten().map(|t| json!([t["half_power"], t["coeff"]])).collect();
        omega.insert(gamma.join(","), terms);
    }
    let mut s = serde_json::to_string_pretty(&json!({ "schema": crate::schema::SCHEMA, "omega": omega }))
        .expect("golden documents serialize");
    s.push('\n');
    s
}
