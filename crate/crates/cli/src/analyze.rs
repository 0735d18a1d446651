use std::time::Instant;

use lapcode::codes::{
    code_from_simplex, is_cyclic, is_mds, minimum_distance_exhaustive, rate, self_relation, verify_code_duality,
    weight_distribution,
};
use lapcode::simplex::{dual_vertex_matrix, hstar, is_reflexive_cofactor, is_reflexive_hibi, is_unimodal};
use lapcode::{Error, Graph, LaplacianSimplex, Limits, MdsStatus};
use serde_json::{json, Map, Value};

use crate::json::{big, float, ubig, uint, uints};

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub fast: bool,
    pub no_distance: bool,
    pub no_duality: bool,
    pub no_timing: bool,
    pub require_code: bool,
}

pub const CSV_HEADER: [&str; 17] = [
    "construction",
    "n",
    "m",
    "tau",
    "volume",
    "hstar",
    "reflexive",
    "unimodal",
    "modulus",
    "cardinality",
    "dimension",
    "distance",
    "mds",
    "cyclic",
    "self_relation",
    "rate",
    "duality_passed",
];

fn mds_name(m: MdsStatus) -> &'static str {
    match m {
        MdsStatus::Yes => "yes",
        MdsStatus::No => "no",
        MdsStatus::NotApplicable => "not-applicable",
    }
}

pub fn analyze(g: &Graph, construction: &str, opts: Options, limits: &Limits) -> Result<Value, Error> {
    let start = Instant::now();
    let s = LaplacianSimplex::new(g)?;
    let cert = is_reflexive_cofactor(&s);
    if opts.require_code && !cert.reflexive {
        return Err(Error::NotReflexive);
    }
    let h = hstar(&s)?;
    let mut report = Map::new();
    report.insert(
        "graph".into(),
        json!({
            "n": g.n(),
            "m": g.edge_count(),
            "construction": construction,
            "edges": g.edges().map(|(u, v)| json!([u, v])).collect::<Vec<_>>(),
        }),
    );
    report.insert("tau".into(), big(s.tau()));
    report.insert("volume".into(), big(&s.volume()));
    report.insert("hstar".into(), uints(h.coefficients()));
    report.insert(
        "reflexive".into(),
        json!({ "value": cert.reflexive, "cofactor": cert.reflexive, "palindromic": is_reflexive_hibi(&h) }),
    );
    report.insert("unimodal".into(), Value::Bool(is_unimodal(&h)));
    let mut dual = Value::Null;
    let mut code = Value::Null;
    let mut duality = Value::Null;
    if cert.reflexive && !opts.fast {
        let v = dual_vertex_matrix(&s)?;
        dual = Value::Array(
            v.to_rows()
                .iter()
                .map(|r| Value::Array(r.iter().map(big).collect()))
                .collect(),
        );
        let c = code_from_simplex(&s)?;
        let r = rate(&c);
        let mut block = Map::new();
        block.insert("modulus".into(), uint(c.modulus()));
        block.insert("cardinality".into(), ubig(&c.cardinality()));
        block.insert("dimension".into(), c.dimension().map_or(Value::Null, |k| k.into()));
        block.insert("log_cardinality".into(), float(r.to_f64() * c.length() as f64));
        block.insert("rate".into(), Value::String(r.to_string()));
        block.insert("rate_value".into(), float(r.to_f64()));
        block.insert("cyclic".into(), Value::Bool(is_cyclic(&c)));
        block.insert("self_relation".into(), Value::String(self_relation(&c)?.to_string()));
        if opts.no_distance {
            block.insert("distance".into(), Value::Null);
            block.insert("mds".into(), Value::Null);
            block.insert("weight_distribution".into(), Value::Null);
        } else {
            block.insert("distance".into(), uint(minimum_distance_exhaustive(&c, limits)?));
            block.insert("mds".into(), Value::String(mds_name(is_mds(&c)?).into()));
            block.insert("weight_distribution".into(), uints(&weight_distribution(&c)?));
        }
        code = Value::Object(block);
        if !opts.no_duality {
            let d = verify_code_duality(&s, limits)?;
            duality = json!({
                "passed": d.passed,
                "dual_lambda_count": uint(d.dual_lambda_count),
                "expected_count": big(&d.expected_count),
                "cardinality_product_ok": d.cardinality_product_ok,
            });
        }
    }
    report.insert("dual_vertex_matrix".into(), dual);
    report.insert("code".into(), code);
    report.insert("duality".into(), duality);
    if !opts.no_timing {
        report.insert("timing_ms".into(), uint(start.elapsed().as_millis() as u64));
    }
    Ok(Value::Object(report))
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Array(xs)) => xs.iter().map(|x| cell(Some(x))).collect::<Vec<_>>().join(" "),
        Some(other) => other.to_string(),
    }
}

/// One CSV record in `CSV_HEADER` order.
pub fn csv_record(report: &Value) -> Vec<String> {
    let code = &report["code"];
    vec![
        cell(report["graph"].get("construction")),
        cell(report["graph"].get("n")),
        cell(report["graph"].get("m")),
        cell(report.get("tau")),
        cell(report.get("volume")),
        cell(report.get("hstar")),
        cell(report["reflexive"].get("value")),
        cell(report.get("unimodal")),
        cell(code.get("modulus")),
        cell(code.get("cardinality")),
        cell(code.get("dimension")),
        cell(code.get("distance")),
        cell(code.get("mds")),
        cell(code.get("cyclic")),
        cell(code.get("self_relation")),
        cell(code.get("rate")),
        cell(report["duality"].get("passed")),
    ]
}
