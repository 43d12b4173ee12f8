//! Shared plumbing for the `ctsing` binary: built-in fixtures, fixture
//! verification, and text/JSON rendering of core results.

pub mod fixtures;

use ctsing_core::algebra::{algebra_from_potential, Algebra, Relation};
use ctsing_core::classifier::cross_validate_classified;
use ctsing_core::dynkin::DEFAULT_MAX_RANK;
use ctsing_core::recognition::{classify, Classification};
use ctsing_core::Quiver;

use fixtures::Fixture;

/// Rank bound for type detection, overridable via `CTSING_MAX_RANK`.
pub fn max_rank() -> usize {
    std::env::var("CTSING_MAX_RANK")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_RANK)
}

/// Check one fixture against its frozen polynomial, over every
/// orientation of its undirected edges.  Also checks the JSON
/// round-trip.  Returns the orientation count on success.
pub fn verify_fixture(f: &Fixture) -> Result<usize, String> {
    let file = f.quiver_file();
    let text = file.to_json_string();
    let reparsed = ctsing_core::io::QuiverFile::parse(&text)
        .map_err(|e| format!("{}: round-trip parse failed: {e}", f.label))?;
    if reparsed.to_json_string() != text {
        return Err(format!("{}: JSON round-trip is not lossless", f.label));
    }
    let expected = f.expected_polynomial();
    let quivers = file
        .orientations()
        .map_err(|e| format!("{}: {e}", f.label))?;
    if quivers.is_empty() {
        return Err(format!("{}: no valid orientation", f.label));
    }
    for (i, q) in quivers.iter().enumerate() {
        let algebra =
            algebra_from_potential(q).map_err(|e| format!("{}[{i}]: {e}", f.label))?;
        let cartan = algebra
            .cartan_matrix()
            .map_err(|e| format!("{}[{i}]: {e}", f.label))?;
        let poly = ctsing_core::linalg::associated_polynomial(&cartan)
            .map_err(|e| format!("{}[{i}]: {e}", f.label))?;
        if poly != expected {
            return Err(format!(
                "{}[{i}]: got {}, expected {}",
                f.label,
                poly.factored_string(),
                expected.factored_string()
            ));
        }
    }
    Ok(quivers.len())
}

fn branch_json(branches: &[(usize, ctsing_core::recognition::RootedTypeA)]) -> serde_json::Value {
    serde_json::Value::Array(
        branches
            .iter()
            .map(|(at, b)| {
                serde_json::json!({
                    "attached_at": at,
                    "vertices": b.quiver().vertex_count(),
                    "triangles": b.triangle_count(),
                })
            })
            .collect(),
    )
}

pub fn classification_json(c: &Classification) -> serde_json::Value {
    let base = serde_json::json!({ "family": c.family_name() });
    let mut obj = base.as_object().cloned().unwrap();
    match c {
        Classification::TypeA { triangles } => {
            obj.insert("triangles".into(), (*triangles).into());
        }
        Classification::TypeDI { a, b, c: root, branch, .. } => {
            obj.insert("pendants".into(), serde_json::json!([a, b]));
            obj.insert("branch_root".into(), (*root).into());
            obj.insert("branch_triangles".into(), branch.triangle_count().into());
        }
        Classification::TypeDII { skeleton, branches }
        | Classification::TypeDIII { skeleton, branches } => {
            obj.insert("core_vertices".into(), serde_json::json!(skeleton.central));
            obj.insert("branches".into(), branch_json(branches));
        }
        Classification::TypeDIV { skeleton, d_q, branches } => {
            obj.insert("m".into(), skeleton.m.into());
            obj.insert("spikes".into(), serde_json::json!(skeleton.spikes));
            obj.insert("d_q".into(), (*d_q).into());
            obj.insert("branches".into(), branch_json(branches));
        }
        Classification::TypeE { rank } => {
            obj.insert("rank".into(), (*rank).into());
        }
    }
    serde_json::Value::Object(obj)
}

pub fn classification_text(c: &Classification) -> String {
    match c {
        Classification::TypeA { triangles } => {
            format!("type A, {triangles} oriented triangle(s)")
        }
        Classification::TypeDI { a, b, c: root, branch, .. } => format!(
            "type D family I: pendants {a}, {b} at branch root {root}; branch has {} triangle(s)",
            branch.triangle_count()
        ),
        Classification::TypeDII { branches, .. } => format!(
            "type D family II: glued triangle pair, {} branch(es)",
            branches.len()
        ),
        Classification::TypeDIII { branches, .. } => format!(
            "type D family III: oriented 4-cycle core, {} branch(es)",
            branches.len()
        ),
        Classification::TypeDIV { skeleton, d_q, branches } => format!(
            "type D family IV: skeleton Q({}, {:?}), d_Q = {d_q}, {} branch(es)",
            skeleton.m,
            skeleton.spikes,
            branches.len()
        ),
        Classification::TypeE { rank } => format!("type E, rank {rank}"),
    }
}

/// `v0 -> v1 -> ... -> vk` rendering of a path.
pub fn path_string(a: &Algebra, p: &ctsing_core::algebra::Path) -> String {
    let mut s = p.source.to_string();
    for &arrow in &p.arrows {
        s.push_str(&format!(" -> {}", a.arrows()[arrow].1));
    }
    s
}

pub fn relation_string(a: &Algebra, r: &Relation) -> String {
    let mut out = String::new();
    for (i, (c, p)) in r.terms.iter().enumerate() {
        let sign = if *c < 0 { "- " } else if i > 0 { "+ " } else { "" };
        if i > 0 {
            out.push(' ');
        }
        out.push_str(sign);
        if c.abs() != 1 {
            out.push_str(&format!("{}*", c.abs()));
        }
        out.push('(');
        out.push_str(&path_string(a, p));
        out.push(')');
    }
    out
}

/// Classify and cross-validate in one step with the default pipeline.
pub fn report_for(q: &Quiver) -> ctsing_core::Result<ctsing_core::classifier::InvariantReport> {
    let c = classify(q, max_rank())?;
    cross_validate_classified(q, &c)
}
