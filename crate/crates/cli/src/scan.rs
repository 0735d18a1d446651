use lapcode::codes::{code_from_simplex, is_mds, self_relation};
use lapcode::graphs::{canonical_form, enumerate_connected};
use lapcode::simplex::{hstar, is_unimodal};
use lapcode::{Error, Graph, LaplacianSimplex, MdsStatus, SelfRelation};

pub const MAX_ORDER: usize = 7;

pub const CSV_HEADER: [&str; 11] = [
    "key",
    "n",
    "m",
    "edges",
    "tau",
    "reflexive",
    "unimodal",
    "hstar",
    "code_cardinality",
    "self_relation",
    "mds",
];

#[derive(Clone, Copy, Debug, Default)]
pub struct Filters {
    pub reflexive: bool,
    pub non_unimodal: bool,
    pub self_dual: bool,
    pub mds: bool,
}

#[derive(Clone, Debug)]
pub struct Row {
    n: usize,
    key: Vec<u64>,
    record: Vec<String>,
}

fn analyze_class(g: &Graph, filters: Filters) -> Result<Option<Row>, Error> {
    let s = LaplacianSimplex::new(g)?;
    let reflexive = s.is_reflexive();
    let h = hstar(&s)?;
    let unimodal = is_unimodal(&h);
    if (filters.reflexive || filters.self_dual || filters.mds) && !reflexive {
        return Ok(None);
    }
    if filters.non_unimodal && unimodal {
        return Ok(None);
    }
    let (mut cardinality, mut relation, mut mds) = (String::new(), String::new(), String::new());
    if reflexive {
        let c = code_from_simplex(&s)?;
        let rel = self_relation(&c)?;
        if filters.self_dual && rel != SelfRelation::SelfDual {
            return Ok(None);
        }
        let status = is_mds(&c)?;
        if filters.mds && status != MdsStatus::Yes {
            return Ok(None);
        }
        cardinality = c.cardinality().to_string();
        relation = rel.to_string();
        mds = match status {
            MdsStatus::Yes => "yes",
            MdsStatus::No => "no",
            MdsStatus::NotApplicable => "not-applicable",
        }
        .into();
    }
    let canon = canonical_form(g)?;
    let hs: Vec<String> = h.coefficients().iter().map(u64::to_string).collect();
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    Ok(Some(Row {
        n: g.n(),
        key: canon.key.clone(),
        record: vec![
            canon.key_hex(),
            g.n().to_string(),
            g.edge_count().to_string(),
            edges.join(" "),
            s.tau().to_string(),
            reflexive.to_string(),
            unimodal.to_string(),
            hs.join(" "),
            cardinality,
            relation,
            mds,
        ],
    }))
}

/// Rows for every connected class with `lo <= n <= hi`, sorted by order then
/// canonical key.
pub fn scan(lo: usize, hi: usize, filters: Filters) -> Result<Vec<Vec<String>>, Error> {
    if hi > MAX_ORDER || lo > hi || lo == 0 {
        return Err(Error::ParameterOutOfRange(format!(
            "scan range {lo}..{hi} must satisfy 1 <= A <= B <= {MAX_ORDER}"
        )));
    }
    let mut graphs = Vec::new();
    for n in lo..=hi {
        graphs.extend(enumerate_connected(n)?);
    }
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(graphs.len().max(1));
    let chunk = graphs.len().div_ceil(workers).max(1);
    let results: Vec<Result<Vec<Row>, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = graphs
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut rows = Vec::new();
                    for g in part {
                        if let Some(r) = analyze_class(g, filters)? {
                            rows.push(r);
                        }
                    }
                    Ok(rows)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    rows.sort_by(|a, b| (a.n, &a.key).cmp(&(b.n, &b.key)));
    Ok(rows.into_iter().map(|r| r.record).collect())
}
