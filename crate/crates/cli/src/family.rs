use lapcode::families::{asymptotic_report, rate_family_scan, whisker_hstar, DistanceSource, Family};
use lapcode::graphs::{parse_construct, whisker};
use lapcode::simplex::hstar;
use lapcode::{Error, LaplacianSimplex, Limits};
use serde_json::{json, Value};

use crate::json::{float, ubig, uint, uints};

/// A header plus rows, rendered as CSV or as a JSON array of objects.
#[derive(Clone, Debug)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    Value::Object(
                        self.header
                            .iter()
                            .map(|h| h.to_string())
                            .zip(r.iter().cloned())
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn to_records(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| match v {
                        Value::Null => String::new(),
                        Value::String(s) => s.clone(),
                        Value::Array(xs) => xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
                        other => other.to_string(),
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn rate_table(a: usize, b: usize, ns: &[usize]) -> Result<Table, Error> {
    let rows = rate_family_scan(a, b, ns)?;
    Ok(Table {
        header: vec![
            "n",
            "vertices",
            "reflexive",
            "cardinality",
            "formula",
            "formula_holds",
            "rate",
            "rate_value",
        ],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    json!(r.n),
                    json!(r.vertices),
                    json!(r.reflexive),
                    ubig(&r.cardinality),
                    ubig(&r.formula),
                    json!(r.formula_holds()),
                    Value::String(r.rate.to_string()),
                    float(r.rate.to_f64()),
                ]
            })
            .collect(),
    })
}

pub fn default_lengths(family: Family) -> Vec<usize> {
    match family {
        Family::Trees | Family::Complete => (3..=12).collect(),
        Family::OddCycles => (3..=21).step_by(2).collect(),
        Family::WstarPrime => vec![7, 11, 13, 17, 19, 23],
    }
}

pub fn asymptotic_table(family: Family, lengths: &[usize], limits: &Limits) -> Result<Table, Error> {
    let rows = asymptotic_report(family, lengths, limits)?;
    Ok(Table {
        header: vec![
            "length",
            "rate",
            "rate_value",
            "distance",
            "relative_distance",
            "source",
        ],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    json!(r.length),
                    Value::String(r.rate.to_string()),
                    float(r.rate.to_f64()),
                    r.distance.map_or(Value::Null, uint),
                    r.relative_distance.map_or(Value::Null, float),
                    Value::String(
                        match r.source {
                            DistanceSource::Enumerated => "enumerated",
                            DistanceSource::Formula => "formula",
                            DistanceSource::Unknown => "unknown",
                        }
                        .into(),
                    ),
                ]
            })
            .collect(),
    })
}

/// Predicted `h*` of `W_k(G)` next to the computed one, when the latter is
/// within the enumeration guard.
pub fn whisker_table(expr: &str, k: usize) -> Result<Table, Error> {
    let g = parse_construct(expr)?;
    let base = hstar(&LaplacianSimplex::new(&g)?)?;
    let predicted = whisker_hstar(&base, k)?;
    let computed = match hstar(&LaplacianSimplex::new(&whisker(&g, k)?)?) {
        Ok(h) => Some(h),
        Err(Error::GuardExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Table {
        header: vec![
            "construction",
            "k",
            "base_hstar",
            "predicted_hstar",
            "computed_hstar",
            "agree",
        ],
        rows: vec![vec![
            Value::String(expr.into()),
            json!(k),
            uints(base.coefficients()),
            uints(predicted.coefficients()),
            computed.as_ref().map_or(Value::Null, |h| uints(h.coefficients())),
            computed.as_ref().map_or(Value::Null, |h| Value::Bool(*h == predicted)),
        ]],
    })
}
