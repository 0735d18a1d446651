use lapcode::graphs::enumerate_connected;
use lapcode::simplex::{
    build_simplex, hstar, is_reflexive_cofactor, is_reflexive_hibi, lambda_set, parallelepiped_lambda,
};
use lapcode::{Error, Graph, LambdaSet, LaplacianSimplex, Limits};
use num_bigint::BigInt;

pub const MAX_ORDER: usize = 6;

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub lines: Vec<String>,
    pub failures: Vec<String>,
}

fn geometric(s: &LaplacianSimplex, corrupt: bool, limits: &Limits) -> Result<LambdaSet, Error> {
    let mut v = s.vertex_matrix().clone();
    if corrupt {
        let x = v.get(0, 0) + BigInt::from(1);
        v.set(0, 0, x);
    }
    parallelepiped_lambda(&v, limits)
}

fn check_graph(g: &Graph, corrupt: bool, limits: &Limits) -> Result<Vec<String>, Error> {
    let mut problems = Vec::new();
    let s = LaplacianSimplex::new(g)?;
    let kernel = lambda_set(&s)?;
    match geometric(&s, corrupt, limits) {
        Ok(oracle) if oracle == kernel => {}
        Ok(oracle) => problems.push(format!(
            "{g}: kernel and oracle differ ({})",
            kernel.first_difference(&oracle).unwrap_or_default()
        )),
        Err(e) => problems.push(format!("{g}: oracle failed: {e}")),
    }
    let cofactor = is_reflexive_cofactor(&s).reflexive;
    if cofactor != is_reflexive_hibi(&hstar(&s)?) {
        problems.push(format!("{g}: reflexivity criteria disagree"));
    }
    for i in 1..g.n() {
        if lambda_set(&build_simplex(g, i)?)? != kernel {
            problems.push(format!("{g}: Λ depends on deleted column {i}"));
        }
    }
    Ok(problems)
}

/// Oracle equivalence, reflexivity agreement and column-deletion invariance
/// on every connected class with `2 <= n <= n_max`. `corrupt` perturbs the
/// matrix fed to the geometric oracle.
pub fn oracle_check(n_max: usize, corrupt: bool, limits: &Limits) -> Result<Summary, Error> {
    if !(2..=MAX_ORDER).contains(&n_max) {
        return Err(Error::ParameterOutOfRange(format!(
            "--n-max must be in 2..={MAX_ORDER}, got {n_max}"
        )));
    }
    let mut summary = Summary::default();
    for n in 2..=n_max {
        let classes = enumerate_connected(n)?;
        let before = summary.failures.len();
        for g in &classes {
            summary.failures.extend(check_graph(g, corrupt, limits)?);
        }
        summary.lines.push(format!(
            "n={n}: {} classes, {} failures",
            classes.len(),
            summary.failures.len() - before
        ));
    }
    Ok(summary)
}
