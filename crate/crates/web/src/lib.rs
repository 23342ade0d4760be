//! Browser bindings for the graph product toolkit.
//!
//! Every export takes and returns JSON strings, so the page needs no bundler.
//! Errors come back as `{"error": "..."}`.

use graphprod::lie::{graph_lie_dims, graph_restricted_lie_dims};
use graphprod::words::parse_word;
use graphprod::{AlgebraKind, AlgebraPresentation, GroupElement, GroupSpec, Order, SimplicialComplex};
use serde::Deserialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest degree the page may ask for.
pub const MAX_DEGREE: usize = 24;

#[derive(Deserialize)]
struct Document {
    m: usize,
    facets: Vec<Vec<usize>>,
}

fn parse_complex(text: &str) -> Result<SimplicialComplex, String> {
    let doc: Document = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc.m == 0 {
        return Err("m must be positive".into());
    }
    SimplicialComplex::from_facets(doc.m, &doc.facets).map_err(|e| e.to_string())
}

fn render(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

pub fn analyze(complex: &str) -> Result<Value, String> {
    let k = parse_complex(complex)?;
    let skeleton = k.one_skeleton();
    Ok(json!({
        "m": k.vertex_count(),
        "f_vector": k.f_vector(),
        "facets": k.facets(),
        "edges": skeleton.edges(),
        "missing_faces": k.missing_faces(),
        "flag": k.is_flag(),
        "chordal": skeleton.is_chordal(),
        "commutator_generators": graphprod::commutators::homology_count(&k),
    }))
}

/// Hilbert series of the algebra and dimensions of its Lie algebra, degrees 1..=degree.
pub fn graded_dims(complex: &str, algebra: &str, p: u64, degree: usize) -> Result<Value, String> {
    let k = parse_complex(complex)?;
    if degree > MAX_DEGREE {
        return Err(format!("degree at most {MAX_DEGREE}"));
    }
    let kind: AlgebraKind = algebra.parse()?;
    let pres = AlgebraPresentation::from_complex(&k, kind, p).map_err(|e| e.to_string())?;
    let series = pres.hilbert_series_formula(degree).map_err(|e| e.to_string())?;
    let lie = match kind {
        AlgebraKind::Trunc => graph_restricted_lie_dims(&k, p, degree).map(Some),
        AlgebraKind::Poly => graph_lie_dims(&k, degree).map(Some),
        AlgebraKind::Ext => Ok(None),
    }
    .map_err(|e| e.to_string())?;
    let text = |xs: &[i128]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    Ok(json!({
        "hilbert": text(series.coeffs()),
        "lie": lie.map(|d| d.as_slice().iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        "series": series.to_string(),
    }))
}

/// Normal form of `word` in the graph product of cyclic groups of order `order` (0 for infinite).
pub fn reduce(complex: &str, order: u32, word: &str) -> Result<Value, String> {
    let k = parse_complex(complex)?;
    let order = if order == 0 {
        Order::Infinite
    } else {
        Order::finite(order).map_err(|e| e.to_string())?
    };
    let spec = GroupSpec::new(k.clone(), vec![order; k.vertex_count()]).map_err(|e| e.to_string())?;
    let raw = parse_word(word).map_err(|e| e.to_string())?;
    let g = GroupElement::normal_form(&spec, &raw).map_err(|e| e.to_string())?;
    Ok(json!({
        "normal_form": g.to_string(),
        "identity": g.is_identity(),
        "word_length": g.word_length(),
        "abelianization": g.abelianization(),
        "in_commutator_subgroup": g.is_in_commutator_subgroup(),
    }))
}

#[wasm_bindgen]
pub fn analyze_complex(complex: &str) -> String {
    render(analyze(complex))
}

#[wasm_bindgen]
pub fn hilbert_and_lie(complex: &str, algebra: &str, p: u32, degree: u32) -> String {
    render(graded_dims(complex, algebra, p as u64, degree as usize))
}

#[wasm_bindgen]
pub fn reduce_word(complex: &str, order: u32, word: &str) -> String {
    render(reduce(complex, order, word))
}
