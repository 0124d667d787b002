//! Report assembly and the JSON/CSV/DOT emitters. All outputs are
//! byte-deterministic for identical inputs: struct field order is fixed,
//! collections are sorted, and nothing is timestamped.

use serde::Serialize;

use bentgraph::{
    check_srg, component_count, fourier, published_example_discrepancy, signed_walsh,
    spectrum_symmetry_report, srg_lambda_eq_mu_for_set, BooleanFunction, CayleyGraph, SrgOutcome,
    SrgParams, VectorialFunction,
};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Warning {
    pub kind: String,
    pub message: String,
}

impl Warning {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        Warning {
            kind: kind.to_string(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: Option<u64>,
    pub lambda_eq_mu: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub function_id: String,
    pub n: usize,
    pub support_size: u64,
    pub nonlinearity: u64,
    pub is_bent: bool,
    pub bent_reason: Option<String>,
    pub fourier_numerators: Vec<i64>,
    /// The eigenvalue multiset, sorted descending.
    pub eigenvalues: Vec<i64>,
    pub components: u64,
    pub connected: bool,
    pub spectrum_symmetric: bool,
    pub graph: Option<GraphReport>,
    pub warnings: Vec<Warning>,
}

/// Internal consistency failures; these map to exit code 3 and are never
/// expected to fire.
#[derive(Debug)]
pub struct InvariantViolation(pub String);

/// Builds the full analysis report. `run_graph_analysis` is false when the
/// arity exceeds the counting limit; the graph section is then skipped with
/// a warning instead of refusing the whole analysis.
pub fn build_analysis(
    function_id: &str,
    f: &BooleanFunction,
    run_graph_analysis: bool,
    counting_limit: usize,
) -> Result<AnalysisReport, InvariantViolation> {
    let spectrum = fourier(f);
    let walsh = signed_walsh(f);
    let verdict = f.bent_verdict();
    let graph = CayleyGraph::from_function(f);

    let mut eigenvalues = spectrum.numerators().to_vec();
    eigenvalues.sort_unstable_by(|a, b| b.cmp(a));

    let mut warnings = Vec::new();
    if f.value(0) {
        warnings.push(Warning::new(
            "loops",
            "support contains the zero point: every vertex carries a loop; \
             graph analysis runs on the loop-free connection set",
        ));
    }

    let symmetry = spectrum_symmetry_report(&graph);

    let graph_report = if run_graph_analysis {
        let check = srg_lambda_eq_mu_for_set(&f.support());
        match &check.params {
            Some(p) => {
                if let Some(d) = published_example_discrepancy(p) {
                    warnings.push(Warning::new("paper_discrepancy", d.to_string()));
                }
                Some(GraphReport {
                    v: p.v,
                    k: p.k,
                    lambda: p.lambda,
                    mu: p.mu,
                    lambda_eq_mu: check.holds,
                })
            }
            None => {
                if let SrgOutcome::NotSrg(violation) = check_srg(&CayleyGraph::from_connection_set(
                    f.support().without_zero(),
                )) {
                    warnings.push(Warning::new("not_srg", violation.to_string()));
                }
                None
            }
        }
    } else {
        warnings.push(Warning::new(
            "guard",
            format!(
                "graph analysis skipped: arity {} exceeds the counting limit {counting_limit}; \
                 raise it with --limit",
                f.arity()
            ),
        ));
        None
    };

    let report = AnalysisReport {
        function_id: function_id.to_string(),
        n: f.arity(),
        support_size: f.weight(),
        nonlinearity: walsh.nonlinearity(),
        is_bent: verdict.is_bent(),
        bent_reason: verdict.reason(),
        fourier_numerators: spectrum.numerators().to_vec(),
        eigenvalues,
        components: component_count(&graph),
        connected: symmetry.connected,
        spectrum_symmetric: symmetry.spectrum_symmetric,
        graph: graph_report,
        warnings,
    };

    if report.support_size as i64 != report.fourier_numerators[0] {
        return Err(InvariantViolation(
            "support size disagrees with the zero Fourier numerator".to_string(),
        ));
    }
    if run_graph_analysis && !f.value(0) && f.arity() % 2 == 0 {
        let graph_lambda_eq_mu = report.graph.as_ref().is_some_and(|g| g.lambda_eq_mu);
        if graph_lambda_eq_mu != report.is_bent {
            return Err(InvariantViolation(format!(
                "bent verdict ({}) disagrees with the graph lambda=mu verdict ({})",
                report.is_bent, graph_lambda_eq_mu
            )));
        }
    }
    Ok(report)
}

/// Spectrum CSV: one row per index, columns index,i_bits,lambda_i.
pub fn spectrum_csv(report: &AnalysisReport) -> String {
    let mut out = String::from("index,i_bits,lambda_i\n");
    for (i, lambda) in report.fourier_numerators.iter().enumerate() {
        out.push_str(&format!("{i},{:0width$b},{lambda}\n", i, width = report.n));
    }
    out
}

/// DOT export: one node per vertex labeled with its n-bit string, loops as
/// self-edges, undirected edges with u < w, everything in ascending order.
pub fn dot_graph(g: &CayleyGraph) -> String {
    let n = g.arity();
    let label = |u: usize| format!("{u:0n$b}");
    let mut out = String::from("graph cayley {\n");
    for u in 0..g.vertex_count() {
        out.push_str(&format!("  \"{}\";\n", label(u)));
    }
    if g.has_loops() {
        for u in 0..g.vertex_count() {
            out.push_str(&format!("  \"{0}\" -- \"{0}\";\n", label(u)));
        }
    }
    for (u, w) in g.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", label(u), label(w)));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamsReport {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: Option<u64>,
}

impl From<&SrgParams> for ParamsReport {
    fn from(p: &SrgParams) -> Self {
        ParamsReport {
            v: p.v,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictReport {
    pub n: usize,
    pub plus: ParamsReport,
    pub minus: ParamsReport,
    pub warnings: Vec<Warning>,
}

pub fn build_predict(n: usize, plus: &SrgParams, minus: &SrgParams) -> PredictReport {
    let mut warnings = Vec::new();
    for p in [plus, minus] {
        if let Some(d) = published_example_discrepancy(p) {
            warnings.push(Warning::new("paper_discrepancy", d.to_string()));
        }
    }
    PredictReport {
        n,
        plus: plus.into(),
        minus: minus.into(),
        warnings,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SubsetEntry {
    pub selector: usize,
    pub indices: Vec<usize>,
    pub support_size: u64,
    pub srg: Option<ParamsReport>,
    pub lambda_eq_mu: bool,
    pub supports_match: bool,
    pub dropped_loop: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VectorialReport {
    pub function_ids: Vec<String>,
    pub n: usize,
    pub m: usize,
    pub is_vectorial_bent: bool,
    pub witness: Option<usize>,
    pub min_combination_nonlinearity: u64,
    pub subsets: Vec<SubsetEntry>,
    pub warnings: Vec<Warning>,
}

pub fn build_vectorial(function_ids: Vec<String>, vf: &VectorialFunction) -> VectorialReport {
    let check = bentgraph::vectorial_bent_check(vf);
    let reports = bentgraph::support_regularity_report(vf);
    let mut warnings = Vec::new();
    if vf.components().iter().any(|c| c.value(0)) {
        warnings.push(Warning::new(
            "loops",
            "at least one component maps 0 to 1; affected subset graphs drop the zero point",
        ));
    }
    let subsets = reports
        .iter()
        .map(|r| SubsetEntry {
            selector: r.selector,
            indices: r.indices.clone(),
            support_size: r.support_size,
            srg: r.check.params.as_ref().map(ParamsReport::from),
            lambda_eq_mu: r.check.holds,
            supports_match: r.supports_match,
            dropped_loop: r.check.dropped_loop,
        })
        .collect();
    VectorialReport {
        function_ids,
        n: vf.arity(),
        m: vf.output_arity(),
        is_vectorial_bent: check.bent,
        witness: check.witness,
        min_combination_nonlinearity: bentgraph::min_combination_nonlinearity(vf),
        subsets,
        warnings,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerateReport {
    pub n: usize,
    pub count: usize,
}

/// Enumeration CSV listing: index,truth_table_hex,support_size.
pub fn enumerate_csv(functions: &[BooleanFunction]) -> String {
    let mut out = String::from("index,truth_table_hex,support_size\n");
    for (i, f) in functions.iter().enumerate() {
        out.push_str(&format!(
            "{i},{},{}\n",
            f.to_hex_string().expect("enumeration arity is at least 2"),
            f.weight()
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratedFunction {
    pub kind: String,
    pub n: usize,
    pub seed: Option<u64>,
    /// Spec string accepted by `analyze` and `graph`.
    pub function_id: String,
    pub truth_table_bits: String,
    pub truth_table_hex: Option<String>,
    pub support_size: u64,
    pub is_bent: bool,
}

pub fn describe_function(kind: &str, seed: Option<u64>, f: &BooleanFunction) -> GeneratedFunction {
    let hex = f.to_hex_string();
    let function_id = match &hex {
        Some(h) => format!("h:{h}"),
        None => format!("b:{}", f.to_bit_string()),
    };
    GeneratedFunction {
        kind: kind.to_string(),
        n: f.arity(),
        seed,
        function_id,
        truth_table_bits: f.to_bit_string(),
        truth_table_hex: hex,
        support_size: f.weight(),
        is_bent: f.is_bent(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratedVectorial {
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub components: Vec<GeneratedFunction>,
    pub is_vectorial_bent: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    out.push('\n');
    out
}
