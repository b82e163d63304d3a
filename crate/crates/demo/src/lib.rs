//! Browser bindings for three small views: a polygon drawing, the `Z(J)`
//! explorer on `I_26`, and a finite-volume summary for a named diagram.
//!
//! Every export has a plain Rust twin returning `Result<String, String>` so
//! it can be tested natively.

use serde_json::json;
use wasm_bindgen::prelude::*;

use triflect::diagram::{i26, indices, shape_name};
use triflect::polygon::{edge_integrals, equal_weights, regular_points, DEFAULT_TOL};
use triflect::polytope::{certify, critical_shapes, real_form};
use triflect::CoxeterDiagram;

fn parse_list(s: &str) -> Result<Option<Vec<f64>>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(None);
    }
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| format!("not a number: {t}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// SVG and edge data for weights `mu` and prevertices `z`. Either list may
/// be empty: equal weights and the regular prevertices for `n` are used.
pub fn polygon_json(n: usize, mu: &str, z: &str) -> Result<String, String> {
    let mu = parse_list(mu)?;
    let z = parse_list(z)?;
    let n = mu.as_ref().or(z.as_ref()).map_or(n, Vec::len);
    if n < 4 {
        return Err("need at least 4 vertices".into());
    }
    let mu = mu.unwrap_or_else(|| equal_weights(n));
    let z = z.unwrap_or_else(|| regular_points(n));
    if mu.len() != z.len() {
        return Err(format!("{} weights but {} prevertices", mu.len(), z.len()));
    }
    let d = edge_integrals(&z, &mu, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let (r1, r2) = d.closure_residuals();
    Ok(json!({
        "svg": d.to_svg(),
        "lengths": d.lengths,
        "area": d.area,
        "residuals": [r1, r2],
    })
    .to_string())
}

/// `J`, `Z(J)` and `Z(Z(J))` on `I_26` with their shapes. Labels are
/// separated by spaces or commas.
pub fn zperp_json(labels: &str) -> Result<String, String> {
    let d = i26();
    let names: Vec<&str> = labels.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
    let j = d.mask_of_labels(&names).map_err(|e| e.to_string())?;
    let z = d.zperp(j);
    let zz = d.zperp(z);
    let view = |m| {
        json!({
            "labels": d.labels_of(m),
            "shape": if m == 0 { "empty".to_string() } else { shape_name(&d, m) },
        })
    };
    Ok(json!({"j": view(j), "z": view(z), "zz": view(zz), "closed": zz == j}).to_string())
}

/// Labels of `I_26` with their colors and neighbors, for drawing.
pub fn i26_json() -> String {
    let d = i26();
    let nodes: Vec<_> = (0..d.len())
        .map(|i| {
            json!({
                "label": d.label(i),
                "point": d.color(i).map(|c| c == triflect::diagram::Color::Black),
                "neighbors": indices(d.neighbors(i)).iter().map(|&k| d.label(k)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!(nodes).to_string()
}

/// Finite-volume test and cusp orbits for a diagram given by name or in the
/// text format.
pub fn vinberg_json(diagram: &str) -> Result<String, String> {
    let d = if diagram.contains("nodes:") {
        CoxeterDiagram::parse_text(diagram)
    } else {
        CoxeterDiagram::by_name(diagram.trim())
    }
    .map_err(|e| e.to_string())?;
    let space = real_form(&d).map_err(|e| e.to_string())?;
    let c = certify(&space, None).map_err(|e| e.to_string())?;
    let orbits: Vec<_> = c.orbits.iter().map(|o| json!({"shape": o.shape, "size": o.size})).collect();
    Ok(json!({
        "nodes": d.len(),
        "dimension": c.dimension,
        "signature": c.signature,
        "critical": critical_shapes(&c),
        "finite_volume": c.verdict,
        "cusps": c.ideal_vertices.len(),
        "orbits": orbits,
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = polygon)]
pub fn polygon_js(n: usize, mu: &str, z: &str) -> Result<String, JsError> {
    js(polygon_json(n, mu, z))
}

#[wasm_bindgen(js_name = zperp)]
pub fn zperp_js(labels: &str) -> Result<String, JsError> {
    js(zperp_json(labels))
}

#[wasm_bindgen(js_name = i26Nodes)]
pub fn i26_js() -> String {
    i26_json()
}

#[wasm_bindgen(js_name = vinberg)]
pub fn vinberg_js(diagram: &str) -> Result<String, JsError> {
    js(vinberg_json(diagram))
}
