//! Built-in representative quivers with their frozen expected values.
//!
//! Each exceptional-type table row is transcribed once from its picture
//! into arrow/edge lists over vertices labeled "1".."n"; the expected
//! associated polynomial is attached so a transcription slip fails
//! loudly.  Undirected edges carry the original drawing's orientation
//! freedom: verification checks every orientation.
//!
//! `det` is the Cartan determinant; `monic` holds the ascending
//! coefficients of the monic factor, so the expected polynomial is
//! `det * monic`.

use ctsing_core::io::QuiverFile;
use ctsing_core::linalg::IntPolynomial;
use ctsing_core::Quiver;
use num::BigInt;

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub label: &'static str,
    pub n: usize,
    pub arrows: &'static [(usize, usize)],
    /// Orientation-free edges (drawn without arrowheads in the source
    /// pictures; any orientation gives the same invariants).
    pub edges: &'static [(usize, usize)],
    pub det: i64,
    /// Ascending coefficients of the monic factor of the expected
    /// associated polynomial.
    pub monic: &'static [i64],
    pub note: &'static str,
}

impl Fixture {
    pub fn expected_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_i64(self.monic).scale(&BigInt::from(self.det))
    }

    pub fn quiver_file(&self) -> QuiverFile {
        let vertices: Vec<String> = (1..=self.n).map(|i| i.to_string()).collect();
        let name = |i: usize| (i + 1).to_string();
        QuiverFile {
            arrows: self.arrows.iter().map(|&(s, t)| (name(s), name(t))).collect(),
            edges: self.edges.iter().map(|&(x, y)| (name(x), name(y))).collect(),
            vertices,
        }
    }

    /// Default orientation (each edge read first-to-second).
    pub fn quiver(&self) -> Quiver {
        self.quiver_file()
            .to_quiver_default_orientation()
            .expect("fixture is well-formed")
    }

    /// Every orientation of the undirected edges.
    pub fn orientations(&self) -> Vec<Quiver> {
        self.quiver_file().orientations().expect("fixture is small")
    }
}

pub const E6: [Fixture; 6] = [
    Fixture {
        label: "E6-1",
        n: 6,
        arrows: &[],
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
        det: 1,
        monic: &[1, -1, 0, 1, 0, -1, 1],
        note: "hereditary orientation of the rank-6 exceptional diagram",
    },
    Fixture {
        label: "E6-2",
        n: 6,
        arrows: &[(0, 1), (1, 5), (5, 0)],
        edges: &[(1, 2), (2, 3), (1, 4)],
        det: 2,
        monic: &[1, 0, -1, 2, -1, 0, 1],
        note: "one triangle, three hanging edges",
    },
    Fixture {
        label: "E6-3",
        n: 6,
        arrows: &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 2)],
        edges: &[(0, 1), (4, 5)],
        det: 2,
        monic: &[1, 0, -2, 4, -2, 0, 1],
        note: "two triangles sharing an arrow",
    },
    Fixture {
        label: "E6-4",
        n: 6,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 0)],
        edges: &[(3, 4), (2, 5)],
        det: 3,
        monic: &[1, 0, 0, 1, 0, 0, 1],
        note: "chordless oriented 4-cycle with two pendants",
    },
    Fixture {
        label: "E6-5",
        n: 6,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        edges: &[(3, 5)],
        det: 4,
        monic: &[1, 0, 1, 0, 1, 0, 1],
        note: "chordless oriented 5-cycle with one pendant",
    },
    Fixture {
        label: "E6-6",
        n: 6,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 1), (1, 5), (5, 0)],
        edges: &[(1, 4)],
        det: 4,
        monic: &[1, 1, -1, 2, -1, 1, 1],
        note: "two triangles meeting at a vertex, one pendant",
    },
];

pub const E7: [Fixture; 14] = [
    Fixture {
        label: "E7-1",
        n: 7,
        arrows: &[],
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)],
        det: 1,
        monic: &[-1, 1, 0, -1, 1, 0, -1, 1],
        note: "hereditary orientation of the rank-7 exceptional diagram",
    },
    Fixture {
        label: "E7-2",
        n: 7,
        arrows: &[(0, 1), (1, 5), (5, 0)],
        edges: &[(1, 2), (2, 3), (1, 4), (3, 6)],
        det: 2,
        monic: &[-1, 0, 1, -2, 2, -1, 0, 1],
        note: "E6-2 extended by one chain vertex",
    },
    Fixture {
        label: "E7-3",
        n: 7,
        arrows: &[(0, 1), (1, 5), (5, 0)],
        edges: &[(1, 2), (2, 3), (2, 4), (3, 6)],
        det: 2,
        monic: &[-1, 0, 1, -1, 1, -1, 0, 1],
        note: "triangle with a branching tree",
    },
    Fixture {
        label: "E7-4",
        n: 7,
        arrows: &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 2)],
        edges: &[(0, 1), (4, 5), (5, 6)],
        det: 2,
        monic: &[-1, 0, 2, -4, 4, -2, 0, 1],
        note: "E6-3 extended by one chain vertex",
    },
    Fixture {
        label: "E7-5",
        n: 7,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 0)],
        edges: &[(3, 4), (2, 5), (5, 6)],
        det: 3,
        monic: &[-1, 0, 0, 0, 0, 0, 0, 1],
        note: "E6-4 extended by one chain vertex",
    },
    Fixture {
        label: "E7-6",
        n: 7,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        edges: &[(3, 5), (5, 6)],
        det: 4,
        monic: &[-1, 0, -1, 1, -1, 1, 0, 1],
        note: "E6-5 extended by one chain vertex",
    },
    Fixture {
        label: "E7-7",
        n: 7,
        arrows: &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 1)],
        edges: &[(5, 6)],
        det: 4,
        monic: &[-1, 0, -1, 2, -2, 1, 0, 1],
        note: "triangle fused to a 4-cycle, one pendant",
    },
    Fixture {
        label: "E7-8",
        n: 7,
        arrows: &[(0, 1), (1, 6), (6, 0), (2, 3), (3, 4), (4, 2)],
        edges: &[(1, 2), (1, 5)],
        det: 4,
        monic: &[-1, -1, 1, -1, 1, -1, 1, 1],
        note: "two triangles joined by an edge",
    },
    Fixture {
        label: "E7-9",
        n: 7,
        arrows: &[(0, 1), (0, 2), (2, 3), (1, 3), (3, 0), (3, 5), (5, 6), (6, 3)],
        edges: &[(1, 4)],
        det: 4,
        monic: &[-1, -1, 1, 1, -1, -1, 1, 1],
        note: "two 3-cycles through a shared path plus a triangle",
    },
    Fixture {
        label: "E7-10",
        n: 7,
        arrows: &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 2), (4, 6), (6, 5), (5, 4)],
        edges: &[(0, 1)],
        det: 4,
        monic: &[-1, -1, 2, -2, 2, -2, 1, 1],
        note: "E6-3 core with a third triangle",
    },
    Fixture {
        label: "E7-11",
        n: 7,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
        edges: &[(3, 6)],
        det: 5,
        monic: &[-1, 0, -1, 1, -1, 1, 0, 1],
        note: "chordless oriented 6-cycle with one pendant",
    },
    Fixture {
        label: "E7-12",
        n: 7,
        arrows: &[
            (0, 1),
            (1, 4),
            (4, 3),
            (3, 0),
            (5, 1),
            (4, 5),
            (5, 6),
            (6, 4),
            (1, 2),
            (2, 5),
        ],
        edges: &[],
        det: 6,
        monic: &[-1, 0, -1, 0, 0, 1, 0, 1],
        note: "named quiver A_104 (vertex labels 1-7 as pictured)",
    },
    Fixture {
        label: "E7-13",
        n: 7,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 5), (5, 6), (6, 2)],
        edges: &[(3, 4)],
        det: 6,
        monic: &[-1, -1, 0, 1, -1, 0, 1, 1],
        note: "4-cycle and triangle sharing a vertex, one pendant",
    },
    Fixture {
        label: "E7-14",
        n: 7,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 5), (5, 6), (6, 3)],
        edges: &[],
        det: 8,
        monic: &[-1, -1, -1, 1, -1, 1, 1, 1],
        note: "5-cycle and triangle sharing a vertex",
    },
];

pub const E8: [Fixture; 15] = [
    Fixture {
        label: "E8-1",
        n: 8,
        arrows: &[],
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)],
        det: 1,
        monic: &[1, -1, 0, 1, -1, 1, 0, -1, 1],
        note: "hereditary orientation of the rank-8 exceptional diagram",
    },
    Fixture {
        label: "E8-2",
        n: 8,
        arrows: &[(0, 1), (1, 5), (5, 0)],
        edges: &[(1, 2), (2, 3), (1, 4), (3, 6), (6, 7)],
        det: 2,
        monic: &[1, 0, -1, 2, -2, 2, -1, 0, 1],
        note: "E7-2 extended by one chain vertex",
    },
    Fixture {
        label: "E8-3",
        n: 8,
        arrows: &[(0, 1), (1, 5), (5, 0)],
        edges: &[(1, 2), (2, 3), (3, 4), (3, 6), (6, 7)],
        det: 2,
        monic: &[1, 0, -1, 1, 0, 1, -1, 0, 1],
        note: "triangle with a long branching tree",
    },
    Fixture {
        label: "E8-4",
        n: 8,
        arrows: &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 2)],
        edges: &[(0, 1), (4, 5), (5, 6), (6, 7)],
        det: 2,
        monic: &[1, 0, -2, 4, -4, 4, -2, 0, 1],
        note: "E7-4 extended by one chain vertex",
    },
    Fixture {
        label: "E8-5",
        n: 8,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 0)],
        edges: &[(3, 4), (2, 5), (5, 6), (6, 7)],
        det: 3,
        monic: &[1, 0, 0, 0, 1, 0, 0, 0, 1],
        note: "chordless oriented 4-cycle with two chains",
    },
    Fixture {
        label: "E8-6",
        n: 8,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        edges: &[(3, 5), (5, 6), (6, 7)],
        det: 4,
        monic: &[1, 0, 1, -1, 2, -1, 1, 0, 1],
        note: "E7-6 extended by one chain vertex",
    },
    Fixture {
        label: "E8-7",
        n: 8,
        arrows: &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 1)],
        edges: &[(5, 6), (7, 0)],
        det: 4,
        monic: &[1, 0, 1, -2, 4, -2, 1, 0, 1],
        note: "E7-7 extended by one chain vertex",
    },
    Fixture {
        label: "E8-8",
        n: 8,
        arrows: &[(0, 1), (1, 7), (7, 0), (3, 4), (4, 5), (5, 3)],
        edges: &[(1, 2), (2, 3), (1, 6)],
        det: 4,
        monic: &[1, 1, -1, 1, 0, 1, -1, 1, 1],
        note: "two triangles joined by a length-2 chain",
    },
    Fixture {
        label: "E8-9",
        n: 8,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 1), (1, 4), (4, 0)],
        edges: &[(2, 5), (5, 6), (2, 7)],
        det: 4,
        monic: &[1, 1, -1, 0, 2, 0, -1, 1, 1],
        note: "two triangles at a vertex with a branching tree",
    },
    Fixture {
        label: "E8-10",
        n: 8,
        arrows: &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 2), (5, 6), (6, 7), (7, 5)],
        edges: &[(0, 1), (4, 5)],
        det: 4,
        monic: &[1, 1, -2, 2, 0, 2, -2, 1, 1],
        note: "fused triangle pair linked to a third triangle",
    },
    Fixture {
        label: "E8-11",
        n: 8,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
        edges: &[(3, 6), (7, 0)],
        det: 5,
        monic: &[1, 0, 1, 0, 1, 0, 1, 0, 1],
        note: "chordless oriented 6-cycle with two pendants",
    },
    Fixture {
        label: "E8-12",
        n: 8,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)],
        edges: &[(4, 7)],
        det: 6,
        monic: &[1, 0, 1, 1, 0, 1, 1, 0, 1],
        note: "named quiver A_15: chordless oriented 7-cycle with one pendant",
    },
    Fixture {
        label: "E8-13",
        n: 8,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 0), (5, 6), (6, 7), (7, 5)],
        edges: &[(3, 4), (2, 5)],
        det: 6,
        monic: &[1, 1, 0, 0, 2, 0, 0, 1, 1],
        note: "4-cycle linked by an edge to a triangle, one pendant",
    },
    Fixture {
        label: "E8-14",
        n: 8,
        arrows: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 5)],
        edges: &[(3, 5)],
        det: 8,
        monic: &[1, 1, 1, 0, 2, 0, 1, 1, 1],
        note: "5-cycle linked by an edge to a triangle",
    },
    Fixture {
        label: "E8-15",
        n: 8,
        arrows: &[(0, 1), (1, 7), (7, 0), (2, 3), (3, 1), (2, 4), (4, 5), (5, 2), (1, 2)],
        edges: &[(1, 6)],
        det: 8,
        monic: &[1, 2, 0, 0, 2, 0, 0, 2, 1],
        // The source picture draws 1-2 without an arrowhead, but that
        // stroke closes the third triangle: reversing it leaves the
        // finite mutation classes entirely, so it is stored directed.
        note: "three triangles around a central vertex, one pendant",
    },
];

/// A_104 with an extra vertex 8 and arrow 8->7; mutation-equivalent to
/// A_15 and carries the same associated polynomial.
pub const A_319: Fixture = Fixture {
    label: "A_319",
    n: 8,
    arrows: &[
        (0, 1),
        (1, 4),
        (4, 3),
        (3, 0),
        (5, 1),
        (4, 5),
        (5, 6),
        (6, 4),
        (1, 2),
        (2, 5),
        (7, 6),
    ],
    edges: &[],
    det: 6,
    monic: &[1, 0, 1, 1, 0, 1, 1, 0, 1],
    note: "named quiver A_319 (vertex labels 1-8 as pictured)",
};

/// All built-in fixtures, sorted by label.
pub fn all() -> Vec<&'static Fixture> {
    let mut v: Vec<&'static Fixture> = E6.iter().chain(E7.iter()).chain(E8.iter()).collect();
    v.push(&A_319);
    v.sort_by_key(|f| f.label);
    v
}

/// Look a fixture up by label or by a named-quiver alias.
pub fn by_name(name: &str) -> Option<&'static Fixture> {
    match name {
        "A_104" => Some(&E7[11]),
        "A_15" => Some(&E8[11]),
        "A_319" => Some(&A_319),
        _ => all().into_iter().find(|f| f.label == name),
    }
}
