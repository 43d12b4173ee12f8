//! JSON quiver interchange.
//!
//! ```json
//! {
//!   "vertices": ["1", "2", "3"],
//!   "arrows": [["1", "2"]],
//!   "edges": [["2", "3"]]
//! }
//! ```
//!
//! `arrows` are directed; `edges` are orientation-free and must be
//! resolved before a [`Quiver`] can be built — either by the default
//! first-to-second reading or by enumerating all orientations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// Most orientations ever enumerated (2^8 edges).
pub const MAX_ORIENTATIONS: usize = 256;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<(String, String)>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

impl QuiverFile {
    pub fn parse(text: &str) -> Result<QuiverFile> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for v in &self.vertices {
            if !seen.insert(v) {
                return Err(Error::Parse(format!("duplicate vertex {v:?}")));
            }
        }
        for (s, t) in self.arrows.iter().chain(self.edges.iter()) {
            for name in [s, t] {
                if !seen.contains(name) {
                    return Err(Error::Parse(format!("unknown vertex {name:?}")));
                }
            }
        }
        Ok(())
    }

    pub fn from_quiver(q: &Quiver, labels: Option<&[String]>) -> QuiverFile {
        let names: Vec<String> = match labels {
            Some(l) => l.to_vec(),
            None => (0..q.vertex_count()).map(|v| v.to_string()).collect(),
        };
        let mut arrows: Vec<(String, String)> = q
            .arrows()
            .into_iter()
            .map(|(s, t)| (names[s].clone(), names[t].clone()))
            .collect();
        arrows.sort();
        QuiverFile {
            vertices: names,
            arrows,
            edges: vec![],
        }
    }

    fn index_of(&self, name: &str) -> usize {
        self.vertices.iter().position(|v| v == name).unwrap()
    }

    /// Directed quiver; fails when orientation-free edges are present.
    pub fn to_quiver(&self) -> Result<Quiver> {
        if !self.edges.is_empty() {
            return Err(Error::Parse(
                "quiver has undirected edges; choose an orientation".into(),
            ));
        }
        self.oriented(0)
    }

    /// Read each edge as an arrow from its first to its second vertex.
    pub fn to_quiver_default_orientation(&self) -> Result<Quiver> {
        self.oriented(0)
    }

    fn oriented(&self, mask: usize) -> Result<Quiver> {
        let mut arrows: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .map(|(s, t)| (self.index_of(s), self.index_of(t)))
            .collect();
        for (k, (x, y)) in self.edges.iter().enumerate() {
            let (a, b) = (self.index_of(x), self.index_of(y));
            if mask & (1 << k) == 0 {
                arrows.push((a, b));
            } else {
                arrows.push((b, a));
            }
        }
        Quiver::from_arrows(self.vertices.len(), &arrows)
    }

    /// Every orientation of the undirected edges (2-cycle-producing ones
    /// are dropped), deduplicated up to nothing — callers canonicalise.
    pub fn orientations(&self) -> Result<Vec<Quiver>> {
        let e = self.edges.len();
        let total = 1usize << e;
        if total > MAX_ORIENTATIONS {
            return Err(Error::TooManyOrientations(total, MAX_ORIENTATIONS));
        }
        let mut out = Vec::new();
        for mask in 0..total {
            if let Ok(q) = self.oriented(mask) {
                out.push(q);
            }
        }
        Ok(out)
    }

    /// Stable serialization: vertices in input order, arrows sorted.
    pub fn to_json_string(&self) -> String {
        let mut copy = self.clone();
        copy.arrows.sort();
        copy.edges.sort();
        serde_json::to_string_pretty(&copy).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_build() {
        let text = r#"{"vertices": ["a", "b", "c"],
                       "arrows": [["a", "b"], ["b", "c"]]}"#;
        let f = QuiverFile::parse(text).unwrap();
        let q = f.to_quiver().unwrap();
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.arrow_count(0, 1), 1);
        assert_eq!(q.arrow_count(1, 2), 1);
    }

    #[test]
    fn edges_require_orientation() {
        let text = r#"{"vertices": ["a", "b"], "edges": [["a", "b"]]}"#;
        let f = QuiverFile::parse(text).unwrap();
        assert!(f.to_quiver().is_err());
        assert_eq!(f.orientations().unwrap().len(), 2);
        let q = f.to_quiver_default_orientation().unwrap();
        assert_eq!(q.arrow_count(0, 1), 1);
    }

    #[test]
    fn rejects_bad_names_and_duplicates() {
        assert!(QuiverFile::parse(r#"{"vertices": ["a", "a"]}"#).is_err());
        assert!(
            QuiverFile::parse(r#"{"vertices": ["a"], "arrows": [["a", "z"]]}"#).is_err()
        );
    }

    #[test]
    fn roundtrip_is_stable() {
        let q = Quiver::from_arrows(3, &[(2, 1), (0, 1)]).unwrap();
        let f = QuiverFile::from_quiver(&q, None);
        let text = f.to_json_string();
        let back = QuiverFile::parse(&text).unwrap().to_quiver().unwrap();
        assert_eq!(back, q);
        assert_eq!(QuiverFile::parse(&text).unwrap().to_json_string(), text);
    }

    #[test]
    fn orientation_cap() {
        let names: Vec<String> = (0..10).map(|i| i.to_string()).collect();
        let edges: Vec<(String, String)> = (0..9)
            .map(|i| (names[i].clone(), names[i + 1].clone()))
            .collect();
        let f = QuiverFile {
            vertices: names,
            arrows: vec![],
            edges,
        };
        assert!(matches!(
            f.orientations(),
            Err(Error::TooManyOrientations(512, 256))
        ));
    }
}
