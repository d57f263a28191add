//! WebAssembly bindings for the browser demo. Every export takes plain text
//! and returns a JSON string; failures come back as `{"error": "..."}`.

use std::sync::Arc;

use braidhooks::homomesy::{big_phi_inverse, braid_hooks_count, homomesy_report, window_table, OrbitMode};
use braidhooks::tableaux::{
    braid_hooks, crossings, enumerate_capped, inverse_promotion_path, promotion, promotion_path, Shape, Tableau,
};
use braidhooks::words::{parse_letters, Word};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest number of tableaux the orbit view will enumerate.
pub const ORBIT_CAP: usize = 5000;

fn respond(result: braidhooks::Result<Value>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e.to_string() })).to_string()
}

/// Sliding paths, crossings and braid hooks of a tableau given in text form
/// (one row per line, `.` for empty columns on the left).
#[wasm_bindgen]
pub fn paths(text: &str) -> String {
    respond(paths_value(text))
}

fn paths_value(text: &str) -> braidhooks::Result<Value> {
    let t = Tableau::parse_text(text)?;
    let crossings: Vec<Value> = crossings(&t)
        .iter()
        .map(|c| json!({ "cell": c.cell, "k": c.k, "x": c.x, "y": c.y, "direction": c.direction }))
        .collect();
    Ok(json!({
        "tableau": t.to_json(),
        "promotion_path": promotion_path(&t).positions(&t),
        "inverse_promotion_path": inverse_promotion_path(&t).positions(&t),
        "crossings": crossings,
        "braid_hooks": braid_hooks(&t),
        "promotion": promotion(&t).to_text(),
    }))
}

/// Orbit averages of the braid hook count over all tableaux of `shape`
/// (such as `right:4,3,2,1`) under `group` (`dihedral`, `gyration`, ...).
#[wasm_bindgen]
pub fn orbits(shape: &str, group: &str) -> String {
    respond(orbits_value(shape, group))
}

fn orbits_value(shape: &str, group: &str) -> braidhooks::Result<Value> {
    let mode = OrbitMode::parse(group)?;
    let shape = Arc::new(Shape::parse(shape)?);
    let all = enumerate_capped(&shape, ORBIT_CAP)?;
    let report = homomesy_report(&all, mode, "braid-hooks", braid_hooks_count, |t| t.to_text())?;
    Ok(report.to_json())
}

/// Moving-window table of a reduced word and its preimage under the braid map.
#[wasm_bindgen]
pub fn window(word: &str) -> String {
    respond(window_value(word))
}

fn window_value(word: &str) -> braidhooks::Result<Value> {
    let letters = parse_letters(word)?;
    let rank = letters.iter().copied().max().unwrap_or(0) as usize + 1;
    let w = Word::new(letters, rank)?;
    let table = window_table(&w);
    let preimage = big_phi_inverse(&w).ok().map(|(k, v)| json!({ "k": k, "word": v.to_string() }));
    Ok(json!({
        "word": w.to_string(),
        "rows": table.rows,
        "balanced": table.balanced_position(),
        "preimage": preimage,
    }))
}
