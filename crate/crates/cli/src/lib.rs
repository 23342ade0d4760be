//! Command implementations behind the `graphprod` binary.
//!
//! Every command returns a [`Report`]: a deterministic JSON document holding
//! the command's result and the agreement checks it ran.

use std::collections::BTreeMap;
use std::path::Path;

use graphprod::commutators::{freeness_report, realize_generator};
use graphprod::groupalg::{quillen_check, Budgets};
use graphprod::lie::{graph_lie_dims, graph_restricted_lie_dims, p_power_axiom_check};
use graphprod::ncalg::{graph_product_series, EdgeSign};
use graphprod::{AlgebraKind, AlgebraPresentation, Error, GroupElement, GroupSpec, Order, SimplicialComplex};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn from_core(err: Error, context: &str) -> Self {
        let code = match err {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::BadCoefficient { .. } | Error::NegativeExponent { .. } => EXIT_VERIFY,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: format!("{context}: {err}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// On-disk description of a complex: vertex count, facets (1-based) and an optional name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl ComplexDocument {
    pub fn parse(text: &str) -> CliResult<Self> {
        let doc: Self = serde_json::from_str(text).map_err(|e| CliError::input(format!("complex document: {e}")))?;
        for facet in &doc.facets {
            let mut sorted = facet.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(CliError::input(format!("facet {facet:?} repeats a vertex")));
            }
        }
        Ok(doc)
    }

    pub fn complex(&self) -> CliResult<SimplicialComplex> {
        if self.m == 0 {
            return Err(CliError::input("complex document: m must be positive"));
        }
        SimplicialComplex::from_facets(self.m, &self.facets).map_err(|e| CliError::from_core(e, "complex document"))
    }

    pub fn from_complex(k: &SimplicialComplex, name: Option<String>) -> Self {
        Self {
            m: k.vertex_count(),
            facets: k.facets(),
            name,
        }
    }
}

/// A parsed input file together with its raw bytes (for the digest).
#[derive(Debug, Clone)]
pub struct Input {
    pub path: String,
    pub bytes: Vec<u8>,
    pub document: ComplexDocument,
    pub complex: SimplicialComplex,
}

impl Input {
    pub fn read(path: &Path) -> CliResult<Self> {
        let bytes = std::fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let text =
            String::from_utf8(bytes.clone()).map_err(|_| CliError::input(format!("{}: not UTF-8", path.display())))?;
        Self::from_text(&path.display().to_string(), &text)
    }

    pub fn from_text(path: &str, text: &str) -> CliResult<Self> {
        let document = ComplexDocument::parse(text).map_err(|e| CliError::input(format!("{path}: {}", e.message)))?;
        let complex = document
            .complex()
            .map_err(|e| CliError::input(format!("{path}: {}", e.message)))?;
        Ok(Self {
            path: path.to_string(),
            bytes: text.as_bytes().to_vec(),
            document,
            complex,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Output of one invocation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub arguments: BTreeMap<String, Value>,
    pub inputs_digest: String,
    pub seed: u64,
    pub result: Value,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    fn new(command: &str, inputs: &[&Input], seed: u64) -> Self {
        let mut hasher = Sha256::new();
        for input in inputs {
            hasher.update(&input.bytes);
        }
        Self {
            command: command.to_string(),
            arguments: BTreeMap::new(),
            inputs_digest: hex::encode(hasher.finalize()),
            seed,
            result: Value::Null,
            checks: Vec::new(),
            pass: true,
            timing_ms: None,
        }
    }

    fn arg(mut self, key: &str, value: impl Serialize) -> Self {
        self.arguments
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }

    fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            pass,
        });
        self.pass &= pass;
    }

    pub fn check_passed(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_PASS
        } else {
            EXIT_VERIFY
        }
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("serializable")
        } else {
            serde_json::to_string(self).expect("serializable")
        }
    }
}

/// Face counts, flagness, missing faces, chordality, and one-skeleton checks.
pub fn cmd_analyze(input: &Input, seed: u64) -> CliResult<Report> {
    let k = &input.complex;
    let mut report = Report::new("analyze", &[input], seed).arg("file", &input.path);
    let skeleton = k.one_skeleton();
    let clique = SimplicialComplex::clique_complex(&skeleton);
    let presentations_equal = [AlgebraKind::Poly, AlgebraKind::Ext, AlgebraKind::Trunc]
        .iter()
        .all(|&kind| {
            AlgebraPresentation::from_complex(k, kind, 2).ok()
                == AlgebraPresentation::from_complex(&clique, kind, 2).ok()
        });
    report.result = json!({
        "name": input.document.name,
        "m": k.vertex_count(),
        "f_vector": k.f_vector(),
        "face_count": k.faces().len(),
        "facets": k.facets(),
        "missing_faces": k.missing_faces(),
        "flag": k.is_flag(),
        "chordal": skeleton.is_chordal(),
        "edges": skeleton.edges(),
        "equals_clique_complex": clique == *k,
        "presentation_matches_clique_complex": presentations_equal,
    });
    report.check("presentation_matches_clique_complex", presentations_equal);
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct HilbertArgs {
    pub algebra: AlgebraKind,
    pub p: u64,
    pub degree: usize,
    pub oracle: bool,
    pub max_words: usize,
}

pub fn cmd_hilbert(input: &Input, args: &HilbertArgs, seed: u64) -> CliResult<Report> {
    let mut report = Report::new("hilbert", &[input], seed)
        .arg("file", &input.path)
        .arg("algebra", format!("{:?}", args.algebra).to_lowercase())
        .arg("p", args.p)
        .arg("degree", args.degree)
        .arg("oracle", args.oracle)
        .arg("max_words", args.max_words);
    let pres = AlgebraPresentation::from_complex(&input.complex, args.algebra, args.p)
        .map_err(|e| CliError::from_core(e, "presentation"))?;
    let series = pres
        .hilbert_series_formula(args.degree)
        .map_err(|e| CliError::from_core(e, "clique formula"))?;
    let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
    let mut result = json!({ "coefficients": coeffs, "series": series.to_string() });
    if args.oracle {
        let mut rows = Vec::new();
        for n in 0..=args.degree {
            let brute = pres
                .graded_dim_bruteforce(n, args.max_words)
                .map_err(|e| CliError::from_core(e, &format!("brute force at degree {n}")))?;
            let agree = brute == series.coeff(n) as u128;
            report.check(format!("degree_{n}"), agree);
            rows.push(json!({ "degree": n, "formula": series.coeff(n).to_string(), "bruteforce": brute.to_string(), "agree": agree }));
        }
        result["oracle"] = Value::Array(rows);
    }
    report.result = result;
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct LieArgs {
    pub p: Option<u64>,
    pub degree: usize,
    pub verify_group_oracle: bool,
    pub budgets: Budgets,
}

pub fn cmd_lie_dims(input: &Input, args: &LieArgs, seed: u64) -> CliResult<Report> {
    let mut report = Report::new("lie-dims", &[input], seed)
        .arg("file", &input.path)
        .arg("p", args.p)
        .arg("degree", args.degree)
        .arg("verify_group_oracle", args.verify_group_oracle)
        .arg("max_words", args.budgets.max_words)
        .arg("max_ball", args.budgets.max_ball);
    let k = &input.complex;
    let dims = match args.p {
        Some(p) => graph_restricted_lie_dims(k, p, args.degree),
        None => graph_lie_dims(k, args.degree),
    }
    .map_err(|e| CliError::from_core(e, "dimension extraction"))?;
    let dims: Vec<String> = dims.as_slice().iter().map(|d| d.to_string()).collect();
    let mut result = json!({
        "kind": if args.p.is_some() { "restricted" } else { "ordinary" },
        "dims": dims,
    });
    if args.verify_group_oracle {
        let p = args
            .p
            .ok_or_else(|| CliError::input("--verify-group-oracle needs --p"))?;
        let check =
            quillen_check(k, p, args.degree, args.budgets).map_err(|e| CliError::from_core(e, "group oracle"))?;
        let rows: Vec<Value> = check
            .rows
            .iter()
            .map(|r| {
                json!({
                    "degree": r.degree,
                    "oracle": r.oracle.to_string(),
                    "bruteforce": r.bruteforce.to_string(),
                    "formula": r.formula.to_string(),
                    "stabilized": r.stabilized,
                    "truncation": r.truncation,
                    "monotone": r.monotone,
                })
            })
            .collect();
        for r in &check.rows {
            report.check(format!("three_way_degree_{}", r.degree), r.agrees());
        }
        result["group_oracle"] = Value::Array(rows);
        result["group_oracle_pass"] = Value::Bool(check.pass());
    }
    report.result = result;
    Ok(report)
}

pub fn cmd_comm_gens(input: &Input, seed: u64) -> CliResult<Report> {
    let k = &input.complex;
    let mut report = Report::new("comm-gens", &[input], seed).arg("file", &input.path);
    let gens = freeness_report(k);
    let spec = GroupSpec::coxeter(k.clone());
    let mut realized = Vec::new();
    let mut members = true;
    for d in &gens.descriptors {
        let g = realize_generator(&spec, d).map_err(|e| CliError::from_core(e, "realize"))?;
        members &= g.is_in_commutator_subgroup() && !g.is_identity();
        realized.push(json!({
            "descriptor": d.to_string(),
            "k": d.k_list,
            "j": d.j,
            "i": d.i,
            "normal_form": g.to_string(),
        }));
    }
    report.result = json!({
        "generators": realized,
        "count": gens.count,
        "homology_sum": gens.homology_sum,
        "chordal": gens.chordal,
        "free": gens.free_verdict,
        "algebra_free": gens.algebra_free_verdict,
    });
    report.check("count_equals_homology_sum", gens.counts_agree());
    report.check("generators_in_commutator_subgroup", members);
    Ok(report)
}

/// Parses `2`, `inf`, or a comma-separated list of those.
pub fn parse_orders(text: &str, m: usize) -> CliResult<Vec<Order>> {
    let one = |s: &str| -> CliResult<Order> {
        match s.trim() {
            "inf" | "infinity" | "0" => Ok(Order::Infinite),
            t => {
                let n: u32 = t.parse().map_err(|_| CliError::input(format!("bad order {t:?}")))?;
                Order::finite(n).map_err(|e| CliError::from_core(e, "orders"))
            }
        }
    };
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() == 1 {
        return Ok(vec![one(parts[0])?; m]);
    }
    if parts.len() != m {
        return Err(CliError::input(format!("expected {m} orders, got {}", parts.len())));
    }
    parts.into_iter().map(one).collect()
}

pub fn cmd_word(input: &Input, orders: &str, word: &str, seed: u64) -> CliResult<Report> {
    let k = &input.complex;
    let mut report = Report::new("word", &[input], seed)
        .arg("file", &input.path)
        .arg("orders", orders)
        .arg("word", word);
    let spec = GroupSpec::new(k.clone(), parse_orders(orders, k.vertex_count())?)
        .map_err(|e| CliError::from_core(e, "orders"))?;
    let g = GroupElement::parse(&spec, word).map_err(|e| CliError::from_core(e, "word"))?;
    report.result = json!({
        "normal_form": g.to_string(),
        "identity": g.is_identity(),
        "word_length": g.word_length(),
        "abelianization": g.abelianization(),
        "in_commutator_subgroup": g.is_in_commutator_subgroup(),
    });
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct SubstArgs {
    pub p: u64,
    pub degree: usize,
    pub max_words: usize,
}

/// Substitution complex, plus a Hilbert series check when all parts are simplices.
pub fn cmd_subst(outer: &Input, parts: &[Input], args: &SubstArgs, seed: u64) -> CliResult<Report> {
    let mut all: Vec<&Input> = vec![outer];
    all.extend(parts.iter());
    let part_paths: Vec<&str> = parts.iter().map(|p| p.path.as_str()).collect();
    let mut report = Report::new("subst", &all, seed)
        .arg("file", &outer.path)
        .arg("parts", part_paths)
        .arg("p", args.p)
        .arg("degree", args.degree);
    let k = &outer.complex;
    let complexes: Vec<SimplicialComplex> = parts.iter().map(|p| p.complex.clone()).collect();
    let sub = k
        .substitute(&complexes)
        .map_err(|e| CliError::from_core(e, "substitution"))?;
    let doc = ComplexDocument::from_complex(&sub, None);
    let mut result = json!({ "complex": doc, "flag": sub.is_flag() });

    let simplices = complexes
        .iter()
        .all(|c| *c == SimplicialComplex::simplex(c.vertex_count()));
    if simplices {
        let pres = AlgebraPresentation::from_complex(&sub, AlgebraKind::Trunc, args.p)
            .map_err(|e| CliError::from_core(e, "presentation"))?;
        let formula = pres
            .hilbert_series_formula(args.degree)
            .map_err(|e| CliError::from_core(e, "clique formula"))?;
        // generators block by block, edges inside blocks and between blocks joined in K
        let sizes: Vec<usize> = complexes.iter().map(|c| c.vertex_count()).collect();
        let mut block_of = Vec::new();
        for (b, &n) in sizes.iter().enumerate() {
            block_of.extend(std::iter::repeat_n(b + 1, n));
        }
        let total = block_of.len();
        let mut edges = Vec::new();
        for x in 1..=total {
            for y in x + 1..=total {
                let (bx, by) = (block_of[x - 1], block_of[y - 1]);
                if bx == by || k.contains(&[bx, by]) {
                    edges.push((x, y));
                }
            }
        }
        let graph_product = AlgebraPresentation::new(
            total,
            args.p,
            vec![Some(args.p as u32); total],
            &edges,
            EdgeSign::Commute,
        )
        .map_err(|e| CliError::from_core(e, "presentation"))?;
        // outer graph product of the parts' Hilbert series
        let vertex = AlgebraKind::Trunc.vertex_series(args.p as u32, args.degree);
        let part_series = sizes
            .iter()
            .map(|&n| {
                (0..n).try_fold(graphprod::IntegerPowerSeries::one(args.degree), |acc, _| {
                    acc.checked_mul(&vertex)
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::from_core(e, "part series"))?;
        let outer_series = graph_product_series(&k.one_skeleton(), &part_series)
            .map_err(|e| CliError::from_core(e, "outer series"))?;
        let mut rows = Vec::new();
        for n in 0..=args.degree {
            let brute = graph_product
                .graded_dim_bruteforce(n, args.max_words)
                .map_err(|e| CliError::from_core(e, &format!("brute force at degree {n}")))?;
            let (f, o) = (formula.coeff(n), outer_series.coeff(n));
            let agree = f as u128 == brute && f == o;
            report.check(format!("hilbert_degree_{n}"), agree);
            rows.push(json!({
                "degree": n,
                "substitution_formula": f.to_string(),
                "graph_product_bruteforce": brute.to_string(),
                "outer_graph_product": o.to_string(),
                "agree": agree,
            }));
        }
        result["hilbert_check"] = Value::Array(rows);
    }
    report.result = result;
    Ok(report)
}

/// Randomized check of the restricted p-power axioms in a free associative algebra.
pub fn cmd_axioms(p: u64, trials: usize, seed: u64) -> CliResult<Report> {
    let mut report = Report::new("axioms", &[], seed).arg("p", p).arg("trials", trials);
    let pass = p_power_axiom_check(p, trials, seed).map_err(|e| CliError::from_core(e, "axioms"))?;
    report.result = json!({ "trials": trials, "pass": pass });
    report.check("p_power_axioms", pass);
    Ok(report)
}
