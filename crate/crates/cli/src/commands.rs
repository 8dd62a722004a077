use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use absub::jordan::{JordanMap, Report};
use absub::matalg::{parse_algebra_file, MatalgError};
use absub::oml::{standard, Oml, OmlError};
use absub::pipeline::{
    diagnostic_candidates, instances, run_pipeline, verify_claims, verify_uniqueness, PipelineError, PipelineOptions,
    TheoremInstance,
};
use absub::poset::{enumerate_order_isos, PosetError};
use absub::reconstruct::{has_4element_block, parse_oml_any, reconstruct_oml_isos, BsubIso, ReconstructError};

pub const OK: u8 = 0;
pub const FAIL: u8 = 1;
pub const PARSE: u8 = 2;

/// What a command prints in either output format, and its exit code.
pub struct Output {
    pub code: u8,
    pub lines: Vec<String>,
    pub json: Value,
}

impl Output {
    fn new(code: u8, lines: Vec<String>, json: Value) -> Self {
        Output { code, lines, json }
    }

    fn error(code: u8, msg: String) -> Self {
        Output { code, lines: vec![format!("error: {msg}")], json: json!({ "error": msg }) }
    }
}

fn read(path: &Path) -> Result<String, Output> {
    fs::read_to_string(path).map_err(|e| Output::error(PARSE, format!("{}: {e}", path.display())))
}

fn poset_code(e: &PosetError) -> u8 {
    match e {
        PosetError::Parse { .. } | PosetError::DuplicateElement(_) | PosetError::UnknownElement(_) => PARSE,
        _ => FAIL,
    }
}

fn oml_code(e: &OmlError) -> u8 {
    match e {
        OmlError::Parse { .. } | OmlError::UnknownName(_) => PARSE,
        OmlError::Poset(p) => poset_code(p),
        _ => FAIL,
    }
}

fn reconstruct_code(e: &ReconstructError) -> u8 {
    match e {
        ReconstructError::Parse { .. } => PARSE,
        ReconstructError::Oml(o) => oml_code(o),
        ReconstructError::Poset(p) => poset_code(p),
        _ => FAIL,
    }
}

fn pipeline_code(e: &PipelineError) -> u8 {
    match e {
        PipelineError::Parse { .. } | PipelineError::Io { .. } | PipelineError::Matalg(MatalgError::Parse { .. }) => {
            PARSE
        }
        PipelineError::Poset(p) => poset_code(p),
        _ => FAIL,
    }
}

fn load_oml(path: &Path, max: usize) -> Result<Oml, Output> {
    let text = read(path)?;
    let oml = parse_oml_any(&text).map_err(|e| Output::error(oml_code(&e), format!("{}: {e}", path.display())))?;
    if oml.len() > max {
        return Err(Output::error(
            FAIL,
            format!("{} has {} elements, above --max-size {max}", path.display(), oml.len()),
        ));
    }
    Ok(oml)
}

fn is_algebra_file(text: &str) -> bool {
    text.lines().any(|l| l.trim_start().starts_with("summands:"))
}

pub fn verify(path: &Path) -> Output {
    let text = match read(path) {
        Ok(t) => t,
        Err(o) => return o,
    };
    if is_algebra_file(&text) {
        return match parse_algebra_file(&text) {
            Ok(file) => {
                let dims = file.algebra.summand_dims().to_vec();
                let free = file.algebra.is_type_i2_free();
                Output::new(
                    OK,
                    vec![
                        format!("algebra with summands {dims:?}"),
                        format!("{} partitions of unity, {} elements", file.partitions.len(), file.elements.len()),
                        format!("2x2 summands: {}", if free { "none" } else { "present" }),
                        "OK".into(),
                    ],
                    json!({ "kind": "algebra", "summands": dims, "partitions": file.partitions.len(),
                            "elements": file.elements.len(), "type_i2_free": free, "valid": true }),
                )
            }
            Err(e @ MatalgError::Parse { .. }) => Output::error(PARSE, e.to_string()),
            Err(e) => Output::new(
                FAIL,
                vec![format!("FAIL: {e}")],
                json!({ "kind": "algebra", "valid": false, "witness": e.to_string() }),
            ),
        };
    }
    match parse_oml_any(&text) {
        Ok(oml) => {
            let blocks = oml.blocks();
            Output::new(
                OK,
                vec![
                    format!("orthomodular lattice with {} elements and {} blocks", oml.len(), blocks.len()),
                    format!("boolean: {}", if oml.is_boolean() { "yes" } else { "no" }),
                    "OK".into(),
                ],
                json!({ "kind": "oml", "elements": oml.len(), "blocks": blocks.len(),
                        "boolean": oml.is_boolean(), "valid": true }),
            )
        }
        Err(e) if oml_code(&e) == PARSE => Output::error(PARSE, e.to_string()),
        Err(e) => Output::new(
            FAIL,
            vec![format!("FAIL: {e}")],
            json!({ "kind": "oml", "valid": false, "witness": e.to_string() }),
        ),
    }
}

pub fn bsub(path: &Path, dot: Option<&Path>, max: usize) -> Output {
    let oml = match load_oml(path, max) {
        Ok(o) => o,
        Err(o) => return o,
    };
    let b = oml.boolean_subalgebras();
    let mut lines = vec![format!("{} Boolean subalgebras", b.len())];
    let labels: Vec<String> = b.subalgebras.iter().map(|s| s.label(&oml)).collect();
    lines.extend(labels.iter().cloned());
    let covers: Vec<(String, String)> =
        b.poset.covers().into_iter().map(|(x, y)| (labels[x].clone(), labels[y].clone())).collect();
    lines.push(format!("{} cover pairs", covers.len()));
    lines.extend(covers.iter().map(|(x, y)| format!("{x} < {y}")));
    if let Some(dot) = dot {
        if let Err(e) = fs::write(dot, b.poset.to_dot("bsub")) {
            return Output::error(FAIL, format!("{}: {e}", dot.display()));
        }
        lines.push(format!("wrote {}", dot.display()));
    }
    Output::new(OK, lines, json!({ "count": b.len(), "subalgebras": labels, "covers": covers }))
}

pub fn iso(left: &Path, right: &Path, max: usize) -> Output {
    let (a, b) = match (load_oml(left, max), load_oml(right, max)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let lattice_isos = enumerate_order_isos(a.order(), b.order()).into_iter().filter(|k| a.is_iso(&b, k.map())).count();
    let (ba, bb) = (a.boolean_subalgebras(), b.boolean_subalgebras());
    let bsub_isos = enumerate_order_isos(&ba.poset, &bb.poset).len();
    let yn = |n: usize| if n > 0 { "yes" } else { "no" };
    let lines = vec![
        format!("lattices isomorphic: {} ({lattice_isos} isomorphisms)", yn(lattice_isos)),
        format!("BSub posets isomorphic: {} ({bsub_isos} isomorphisms)", yn(bsub_isos)),
    ];
    let code = if lattice_isos > 0 { OK } else { FAIL };
    Output::new(code, lines, json!({ "lattice_isomorphisms": lattice_isos, "bsub_isomorphisms": bsub_isos }))
}

pub fn reconstruct(path: &Path, max: usize) -> Output {
    let text = match read(path) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let j = match BsubIso::parse(&text, path.parent()) {
        Ok(j) => j,
        Err(e) => return Output::error(reconstruct_code(&e), e.to_string()),
    };
    if j.left().len() > max || j.right().len() > max {
        return Output::error(FAIL, format!("lattice size above --max-size {max}"));
    }
    let small = has_4element_block(j.left()) || has_4element_block(j.right());
    let sols = match reconstruct_oml_isos(&j) {
        Ok(s) => s,
        Err(ReconstructError::NoSolution) => Vec::new(),
        Err(e) => return Output::error(reconstruct_code(&e), e.to_string()),
    };
    let described: Vec<String> = sols.iter().map(|k| k.describe(j.left(), j.right())).collect();
    let mut lines = vec![format!("{} lattice isomorphism(s) induce the map", sols.len())];
    lines.extend(described.iter().map(|d| format!("  {d}")));
    if small {
        lines.push("note: a lattice has a 4-element block, so uniqueness is not expected".into());
    }
    let code = if sols.len() == 1 { OK } else { FAIL };
    Output::new(code, lines, json!({ "count": sols.len(), "solutions": described, "four_element_blocks": small }))
}

fn report_json(r: &Report) -> Value {
    r.checks.iter().map(|c| json!({ "property": c.property, "passed": c.passed, "witness": c.witness })).collect()
}

fn map_lines(t: &TheoremInstance, map: &JordanMap) -> Vec<String> {
    let mut lines = Vec::new();
    for (name, p) in t.source().entries() {
        if p.len() < 2 || t.source().entries().iter().any(|(_, q)| q != p && p.is_coarsening_of(q)) {
            continue;
        }
        for a in p.atoms() {
            match map.apply(a) {
                Some(y) => lines.push(format!("  {name}: {a} -> {y}")),
                None => lines.push(format!("  {name}: {a} -> undefined")),
            }
        }
    }
    lines
}

fn instance_outcome(t: &TheoremInstance, opts: PipelineOptions) -> Result<(Vec<String>, Value, bool), PipelineError> {
    let run = run_pipeline(t, opts)?;
    let claims = verify_claims(t, &run.map);
    let unique = verify_uniqueness(t, &run.stages, &run.map);
    let mut lines: Vec<String> = run.steps().to_vec();
    lines.push("F on maximal fragment entries:".into());
    lines.extend(map_lines(t, &run.map));
    lines.extend(claims.checks.iter().map(ToString::to_string));
    lines.extend(unique.checks.iter().map(ToString::to_string));
    let passed = claims.passed() && unique.passed();
    lines.push(if passed { "PASS".into() } else { "FAIL".into() });
    let json = json!({ "steps": run.steps(), "claims": report_json(&claims),
                       "uniqueness": report_json(&unique), "passed": passed });
    Ok((lines, json, passed))
}

fn candidate_lines(t: &TheoremInstance, opts: PipelineOptions) -> Result<(Vec<String>, Value), PipelineError> {
    let (_, cands) = diagnostic_candidates(t, opts)?;
    let mut lines = vec![format!("{} candidate maps", cands.len())];
    let mut items = Vec::new();
    for (i, c) in cands.iter().enumerate() {
        lines.push(format!("candidate {}: {}", i + 1, c.description));
        match &c.map {
            Ok(m) => {
                lines.extend(map_lines(t, m));
                let claims = verify_claims(t, m);
                lines.extend(claims.checks.iter().map(|x| format!("  {x}")));
                items.push(json!({ "k": c.description, "claims": report_json(&claims) }));
            }
            Err(e) => {
                lines.push(format!("  no consistent linear extension: {e}"));
                items.push(json!({ "k": c.description, "error": e.to_string() }));
            }
        }
    }
    Ok((lines, json!({ "candidates": items })))
}

pub fn pipeline(path: &Path, diagnostic: bool, max: usize) -> Output {
    let text = match read(path) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let t = match TheoremInstance::parse(&text, path.parent()) {
        Ok(t) => t,
        Err(e) => return Output::error(pipeline_code(&e), e.to_string()),
    };
    let opts = PipelineOptions { max_lattice: max };
    match instance_outcome(&t, opts) {
        Ok((lines, json, passed)) => Output::new(if passed { OK } else { FAIL }, lines, json),
        Err(e @ PipelineError::AmbiguousReconstruction { .. }) => {
            let PipelineError::AmbiguousReconstruction { count, candidates } = &e else { unreachable!() };
            let mut lines = vec![format!("error: {e}")];
            lines.extend(candidates.iter().enumerate().map(|(i, c)| format!("candidate {}: {c}", i + 1)));
            let mut json = json!({ "error": "AmbiguousReconstruction", "count": count, "candidates": candidates });
            if diagnostic {
                match candidate_lines(&t, opts) {
                    Ok((more, detail)) => {
                        lines.extend(more);
                        json["diagnostic"] = detail;
                    }
                    Err(e) => return Output::error(pipeline_code(&e), e.to_string()),
                }
                return Output::new(OK, lines, json);
            }
            Output::new(FAIL, lines, json)
        }
        Err(e) => Output::error(pipeline_code(&e), e.to_string()),
    }
}

/// Bell numbers from the Bell triangle.
fn bell_numbers(n: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("non-empty")];
        for x in &row {
            let v = next.last().expect("non-empty") + x;
            next.push(v);
        }
        row = next;
        out.push(row[0]);
    }
    out
}

pub fn bell_check(n: usize, max: usize) -> Output {
    let bell = bell_numbers(n);
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for (k, &b) in bell.iter().enumerate().skip(1) {
        if 1usize.checked_shl(k as u32).is_none_or(|size| size > max) {
            return Output::error(FAIL, format!("boolean({k}) is above --max-size {max}"));
        }
        let count = standard("boolean", k).expect("valid").boolean_subalgebras().len() as u64;
        let agree = count == b;
        ok &= agree;
        lines.push(format!(
            "boolean({k}): {count} Boolean subalgebras, Bell({k}) = {b} {}",
            if agree { "PASS" } else { "FAIL" }
        ));
        rows.push(json!({ "n": k, "bsub": count, "bell": b, "passed": agree }));
    }
    Output::new(if ok { OK } else { FAIL }, lines, json!({ "rows": rows, "passed": ok }))
}

pub fn counterexample(out: Option<&Path>, max: usize) -> Output {
    let t = instances::two_by_two_counterexample();
    let mut lines = vec!["2x2 matrices, diagonal and rotated partitions, identity map on the fragment".to_string()];
    if let Some(p) = out {
        if let Err(e) = fs::write(p, t.to_text()) {
            return Output::error(FAIL, format!("{}: {e}", p.display()));
        }
        lines.push(format!("wrote {}", p.display()));
    }
    let opts = PipelineOptions { max_lattice: max };
    match candidate_lines(&t, opts) {
        Ok((more, json)) => {
            let count = json["candidates"].as_array().map_or(0, Vec::len);
            lines.extend(more);
            let shown = count > 1;
            lines.push(if shown {
                format!("reconstruction is ambiguous: {count} candidates")
            } else {
                "reconstruction was not ambiguous".to_string()
            });
            let mut json = json;
            json["ambiguous"] = shown.into();
            Output::new(if shown { OK } else { FAIL }, lines, json)
        }
        Err(e) => Output::error(pipeline_code(&e), e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_triangle() {
        assert_eq!(bell_numbers(6), vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn error_codes() {
        assert_eq!(oml_code(&OmlError::Parse { line: 1, msg: String::new() }), PARSE);
        assert_eq!(oml_code(&OmlError::NoBounds), FAIL);
        assert_eq!(pipeline_code(&PipelineError::Io { path: "x".into(), msg: "y".into() }), PARSE);
        assert_eq!(pipeline_code(&PipelineError::AmbiguousReconstruction { count: 4, candidates: vec![] }), FAIL);
    }
}
