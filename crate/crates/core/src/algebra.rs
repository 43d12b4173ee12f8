//! Bound quiver algebras and their Cartan matrices, by exact path-ideal
//! closure.
//!
//! Relations are linear combinations of parallel paths.  Two sources are
//! implemented: derivatives of the potential given by the sum of all
//! chordless oriented cycles, and the explicit family presentations of
//! the recognised cluster-tilted types.  The Cartan entry `C[i][j]` is
//! the dimension of `e_i A e_j` read with left-to-right composition:
//! classes of paths `i -> ... -> j` modulo the relation ideal.

use std::collections::{BTreeMap, HashMap};

use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::quiver::Quiver;
use crate::recognition::{Classification, SkeletonD};

/// A path is a source vertex plus a (possibly empty) list of composable
/// arrow ids; `target` is tracked explicitly so trivial paths work.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Linear combination of parallel paths (same source and target), with
/// integer coefficients.  A single-term relation kills its path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
}

impl Relation {
    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }
}

/// A quiver together with arrow ids and admissible relations.
#[derive(Debug, Clone)]
pub struct Algebra {
    quiver: Quiver,
    arrows: Vec<(usize, usize)>,
    relations: Vec<Relation>,
}

/// Dimensions of the path-class spaces, with chosen representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathBasis {
    /// `dims[i][j]` = dim of classes of paths `i -> j`.
    pub dims: Vec<Vec<usize>>,
    /// Representative paths per `(source, target)` block, shortest first.
    pub representatives: BTreeMap<(usize, usize), Vec<Path>>,
    /// First length at which the ideal absorbed every path.
    pub terminal_length: usize,
}

/// Arrow ids of `q` in lexicographic `(source, target)` order; requires a
/// simply-laced quiver so the id of an arrow is determined by its ends.
fn arrow_ids(q: &Quiver) -> Result<Vec<(usize, usize)>> {
    if !q.is_simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    Ok(q.arrows())
}

impl Algebra {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Algebra> {
        let arrows = arrow_ids(&quiver)?;
        for r in &relations {
            if r.terms.is_empty() {
                return Err(Error::Parse("empty relation".into()));
            }
            let (s, t) = (r.source(), r.target());
            for (_, p) in &r.terms {
                if p.source != s || p.target != t || p.len() < 2 {
                    return Err(Error::Parse(
                        "relation terms must be parallel paths of length >= 2".into(),
                    ));
                }
                let mut at = p.source;
                for &a in &p.arrows {
                    let (x, y) = arrows[a];
                    if x != at {
                        return Err(Error::Parse("non-composable path in relation".into()));
                    }
                    at = y;
                }
                if at != p.target {
                    return Err(Error::Parse("path target mismatch in relation".into()));
                }
            }
        }
        Ok(Algebra {
            quiver,
            arrows,
            relations,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    fn arrows_from(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.quiver.vertex_count()];
        for (id, &(s, _)) in self.arrows.iter().enumerate() {
            out[s].push(id);
        }
        out
    }

    /// Cartan matrix: dimensions of the path-class blocks.
    pub fn cartan_matrix(&self) -> Result<IntMatrix> {
        let basis = self.path_basis()?;
        IntMatrix::from_usize(&basis.dims)
    }

    /// Quotient dimensions by truncated echelon closure with
    /// longest-path pivoting, raising the truncation degree until the
    /// top layer of paths is entirely absorbed by the ideal.
    pub fn path_basis(&self) -> Result<PathBasis> {
        self.closure(false)
    }

    /// Independent check route: same truncation and stopping rule, but
    /// Gaussian elimination pivots on the smallest path index instead of
    /// the largest, so the two routes walk different echelon bases.
    pub fn path_basis_dense(&self) -> Result<PathBasis> {
        self.closure(true)
    }

    fn closure(&self, dense: bool) -> Result<PathBasis> {
        let max_len = 4 * self.quiver.vertex_count().max(1);
        // Work modulo R^cut (all paths of length >= cut set to zero) for
        // growing cut.  When every path of length cut-1 already vanishes
        // in that truncation, R^(cut-1) lies in the ideal: multiplying
        // R^(cut-1) <= I + R^cut on the right by R pushes the remainder
        // into ever higher powers, and the relations rewrite long paths
        // into strictly shorter ones, so no R-adic residue is possible.
        // The truncated quotient then equals the algebra itself.
        //
        // The truncation is essential with inhomogeneous (binomial)
        // relations: certifying that a length-L path lies in the ideal
        // can require products whose longest raw term is far longer than
        // L, and those terms are exactly what R^cut absorbs.
        for cut in 2..=max_len + 1 {
            if let Some(basis) = self.truncated_closure(cut, dense)? {
                return Ok(basis);
            }
        }
        Err(Error::ClosureDiverged(max_len))
    }

    /// Quotient of `kQ / (I + R^cut)`; `Some` only when the top layer
    /// (paths of length `cut - 1`) is entirely absorbed, which certifies
    /// that the truncation is already the full quotient.
    fn truncated_closure(&self, cut: usize, dense: bool) -> Result<Option<PathBasis>> {
        // Raw path counts can grow exponentially in quivers with several
        // overlapping cycles; cap them instead of exhausting memory.
        const PATH_CAP: usize = 2_000_000;
        let n = self.quiver.vertex_count();
        let from = self.arrows_from();

        // Paths of length < cut, with a global index per (source, target)
        // block that is monotone in path length.
        let mut index: HashMap<Path, usize> = HashMap::new();
        let mut block_sizes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let register = |paths: &[Path],
                        index: &mut HashMap<Path, usize>,
                        block_sizes: &mut BTreeMap<(usize, usize), usize>| {
            for p in paths {
                let size = block_sizes.entry((p.source, p.target)).or_default();
                index.insert(p.clone(), *size);
                *size += 1;
            }
        };
        let mut by_len: Vec<Vec<Path>> = vec![(0..n)
            .map(|v| Path {
                source: v,
                target: v,
                arrows: vec![],
            })
            .collect()];
        register(&by_len[0], &mut index, &mut block_sizes);
        let mut total = n;
        for l in 1..cut {
            let mut next = Vec::new();
            for p in &by_len[l - 1] {
                for &a in &from[p.target] {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: p.source,
                        target: self.arrows[a].1,
                        arrows,
                    });
                }
            }
            total += next.len();
            if total > PATH_CAP {
                return Err(Error::ClosureDiverged(l));
            }
            register(&next, &mut index, &mut block_sizes);
            by_len.push(next);
        }

        // Echelon rows per block, keyed by pivot index: the largest index
        // (longest path) for the incremental route, the smallest for the
        // dense check route.
        let mut echelon: BTreeMap<(usize, usize), BTreeMap<usize, BTreeMap<usize, BigRational>>> =
            BTreeMap::new();

        let reduce = |rows: &BTreeMap<usize, BTreeMap<usize, BigRational>>,
                      mut v: BTreeMap<usize, BigRational>|
         -> BTreeMap<usize, BigRational> {
            loop {
                let pivot = if dense {
                    v.keys().next().copied()
                } else {
                    v.keys().next_back().copied()
                };
                let Some(p) = pivot else { break };
                let Some(row) = rows.get(&p) else { break };
                let f = v[&p].clone();
                for (k, c) in row {
                    let delta = &f * c;
                    let e = v.entry(*k).or_insert_with(BigRational::zero);
                    *e -= delta;
                    if e.is_zero() {
                        v.remove(k);
                    }
                }
            }
            v
        };

        // Greedy extreme-key reduction is a complete membership test:
        // every vector in the row span has its extreme index at some
        // pivot, so stalling on a pivotless extreme key proves the vector
        // is outside the span.

        let insert_row = |rows: &mut BTreeMap<usize, BTreeMap<usize, BigRational>>,
                          v: BTreeMap<usize, BigRational>| {
            let mut v = reduce(rows, v);
            let pivot = if dense {
                v.keys().next().copied()
            } else {
                v.keys().next_back().copied()
            };
            if let Some(p) = pivot {
                let lead = v[&p].clone();
                for c in v.values_mut() {
                    *c /= &lead;
                }
                rows.insert(p, v);
            }
        };

        // Ideal generators u r v, with terms of length >= cut dropped
        // (they are zero in the truncation).
        for r in &self.relations {
            let min_term = r.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
            if min_term >= cut {
                continue;
            }
            let extra = cut - 1 - min_term;
            for lu in 0..=extra {
                for lv in 0..=extra - lu {
                    for u in by_len[lu].iter().filter(|u| u.target == r.source()) {
                        for v in by_len[lv].iter().filter(|v| v.source == r.target()) {
                            let mut vec: BTreeMap<usize, BigRational> = BTreeMap::new();
                            for (c, p) in &r.terms {
                                if lu + p.len() + lv >= cut {
                                    continue;
                                }
                                let mut arrows = u.arrows.clone();
                                arrows.extend_from_slice(&p.arrows);
                                arrows.extend_from_slice(&v.arrows);
                                let full = Path {
                                    source: u.source,
                                    target: v.target,
                                    arrows,
                                };
                                let idx = index[&full];
                                let e = vec.entry(idx).or_insert_with(BigRational::zero);
                                *e += BigRational::from_integer((*c).into());
                                if e.is_zero() {
                                    vec.remove(&idx);
                                }
                            }
                            if !vec.is_empty() {
                                let rows = echelon.entry((u.source, v.target)).or_default();
                                insert_row(rows, vec);
                            }
                        }
                    }
                }
            }
        }

        // Certificate: every path of length cut - 1 reduces to zero.
        let top_absorbed = by_len[cut - 1].iter().all(|p| {
            let rows = match echelon.get(&(p.source, p.target)) {
                Some(r) => r,
                None => return false,
            };
            let v = BTreeMap::from([(index[p], BigRational::one())]);
            reduce(rows, v).is_empty()
        });
        if !top_absorbed && !by_len[cut - 1].is_empty() {
            return Ok(None);
        }
        let terminal = cut - 1;

        // Quotient dimensions and representatives: paths whose index is
        // not a pivot survive as a basis.  The certificate guarantees
        // none of them has length cut - 1.
        let mut dims = vec![vec![0usize; n]; n];
        let mut reps: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for p in by_len.iter().flatten() {
            let rows = echelon.get(&(p.source, p.target));
            let is_pivot = rows.is_some_and(|rows| rows.contains_key(&index[p]));
            if !is_pivot {
                debug_assert!(p.len() < terminal);
                reps.entry((p.source, p.target)).or_default().push(p.clone());
            }
        }
        for (&(s, t), kept) in &reps {
            dims[s][t] = kept.len();
        }
        Ok(Some(PathBasis {
            dims,
            representatives: reps,
            terminal_length: terminal,
        }))
    }
}

/// Relations from the potential: the sum of all chordless oriented
/// cycles.  The cyclic derivative with respect to an arrow `a` is the sum
/// of the complementary paths of the chordless cycles through `a`.
pub fn relations_from_potential(q: &Quiver) -> Result<Vec<Relation>> {
    let arrows = arrow_ids(q)?;
    let arrow_id: HashMap<(usize, usize), usize> = arrows
        .iter()
        .enumerate()
        .map(|(id, &a)| (a, id))
        .collect();
    let cycles = q.chordless_cycles();
    let mut out = Vec::new();
    for &(x, y) in arrows.iter() {
        let mut terms = Vec::new();
        for cycle in &cycles {
            let len = cycle.len();
            let Some(pos) = (0..len).find(|&p| cycle[p] == x && cycle[(p + 1) % len] == y) else {
                continue;
            };
            // Complementary path y -> ... -> x around the cycle.
            let mut path_arrows = Vec::with_capacity(len - 1);
            for step in 1..len {
                let u = cycle[(pos + step) % len];
                let v = cycle[(pos + step + 1) % len];
                path_arrows.push(arrow_id[&(u, v)]);
            }
            terms.push((
                1i64,
                Path {
                    source: y,
                    target: x,
                    arrows: path_arrows,
                },
            ));
        }
        if !terms.is_empty() {
            out.push(Relation { terms });
        }
    }
    Ok(out)
}

/// Convenience: the algebra of `q` with potential-derived relations.
pub fn algebra_from_potential(q: &Quiver) -> Result<Algebra> {
    let relations = relations_from_potential(q)?;
    Algebra::new(q.clone(), relations)
}

/// Zero relations for an oriented triangle `x -> y -> z -> x`: the three
/// length-2 paths around it.
fn triangle_relations(q: &Quiver, x: usize, y: usize, z: usize) -> Result<Vec<Relation>> {
    let cyc = if q.arrow_count(x, y) > 0 {
        [x, y, z]
    } else {
        [x, z, y]
    };
    (0..3)
        .map(|p| {
            let path = path_through(q, &[cyc[p], cyc[(p + 1) % 3], cyc[(p + 2) % 3]])?;
            Ok(Relation {
                terms: vec![(1, path)],
            })
        })
        .collect()
}

/// Relations of the cyclic skeleton `Q(m, spikes)` read inside `q`:
/// paths into and out of each spike tip vanish, the detour through a
/// spike tip equals the long way around the central cycle, and at
/// spikeless positions the long way around vanishes on its own.
fn skeleton_relations(q: &Quiver, s: &SkeletonD) -> Result<Vec<Relation>> {
    let m = s.m;
    let around = |from_pos: usize| -> Vec<usize> {
        // Central vertices from position `from_pos + 1` all the way
        // around to position `from_pos` (m - 1 arrows).
        (0..m).map(|step| s.central[(from_pos + 1 + step) % m]).collect()
    };
    let mut out = Vec::new();
    let spike_set: std::collections::BTreeSet<usize> = s.spikes.iter().copied().collect();
    for (j, &i) in s.spikes.iter().enumerate() {
        let tip = s.spike_vertices[j];
        let u = s.central[i - 1];
        let v = s.central[i % m];
        out.push(Relation {
            terms: vec![(1, path_through(q, &[u, v, tip])?)],
        });
        out.push(Relation {
            terms: vec![(1, path_through(q, &[tip, u, v])?)],
        });
        out.push(Relation {
            terms: vec![
                (1, path_through(q, &[v, tip, u])?),
                (-1, path_through(q, &around(i - 1))?),
            ],
        });
    }
    for i in 1..=m {
        if !spike_set.contains(&i) {
            out.push(Relation {
                terms: vec![(1, path_through(q, &around(i - 1))?)],
            });
        }
    }
    Ok(out)
}

/// The explicit presentation of a classified cluster-tilted algebra:
/// triangle relations on every branch triangle plus the skeleton
/// relations of the core.  Not available for type E.
pub fn relations_explicit(q: &Quiver, c: &Classification) -> Result<Vec<Relation>> {
    let skeleton: Option<&SkeletonD> = match c {
        Classification::TypeA { .. } | Classification::TypeDI { .. } => None,
        Classification::TypeDII { skeleton, .. }
        | Classification::TypeDIII { skeleton, .. }
        | Classification::TypeDIV { skeleton, .. } => Some(skeleton),
        Classification::TypeE { .. } => return Err(Error::ExplicitRelationsUnavailable),
    };
    let core: std::collections::BTreeSet<usize> = skeleton
        .map(|s| {
            s.central
                .iter()
                .chain(s.spike_vertices.iter())
                .copied()
                .collect()
        })
        .unwrap_or_default();
    let mut out = Vec::new();
    for (x, y, z) in q.triangles() {
        if core.contains(&x) && core.contains(&y) && core.contains(&z) {
            continue;
        }
        out.extend(triangle_relations(q, x, y, z)?);
    }
    if let Some(s) = skeleton {
        out.extend(skeleton_relations(q, s)?);
    }
    Ok(out)
}

/// The algebra of a classified quiver with its explicit presentation.
pub fn algebra_from_classification(q: &Quiver, c: &Classification) -> Result<Algebra> {
    Algebra::new(q.clone(), relations_explicit(q, c)?)
}

/// Build a path from a vertex sequence, looking up each consecutive
/// arrow.  Fails if some arrow is missing.
pub fn path_through(q: &Quiver, vertices: &[usize]) -> Result<Path> {
    let arrows = arrow_ids(q)?;
    let arrow_id: HashMap<(usize, usize), usize> = arrows
        .iter()
        .enumerate()
        .map(|(id, &a)| (a, id))
        .collect();
    let mut ids = Vec::with_capacity(vertices.len().saturating_sub(1));
    for w in vertices.windows(2) {
        let id = arrow_id
            .get(&(w[0], w[1]))
            .ok_or_else(|| Error::Parse(format!("no arrow {} -> {}", w[0], w[1])))?;
        ids.push(*id);
    }
    Ok(Path {
        source: vertices[0],
        target: *vertices.last().unwrap(),
        arrows: ids,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn cartan_i64(a: &Algebra) -> Vec<Vec<i64>> {
        let c = a.cartan_matrix().unwrap();
        (0..c.size())
            .map(|i| {
                (0..c.size())
                    .map(|j| {
                        let e = c.entry(i, j).clone();
                        i64::try_from(e).unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn hereditary_linear_a3_cartan() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let a = algebra_from_potential(&q).unwrap();
        assert!(a.relations().is_empty());
        assert_eq!(
            cartan_i64(&a),
            vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]
        );
    }

    #[test]
    fn triangle_relations_and_cartan() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let rels = relations_from_potential(&q).unwrap();
        // One zero relation per arrow: the complementary length-2 path.
        assert_eq!(rels.len(), 3);
        assert!(rels.iter().all(|r| r.terms.len() == 1 && r.max_len() == 2));
        let a = Algebra::new(q, rels).unwrap();
        let basis = a.path_basis().unwrap();
        assert_eq!(basis.terminal_length, 2);
        assert_eq!(
            cartan_i64(&a),
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]
        );
        let c = a.cartan_matrix().unwrap();
        assert_eq!(c.determinant(), BigInt::from(2));
    }

    #[test]
    fn dense_route_agrees_on_triangle_with_tail() {
        let q = Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let a = algebra_from_potential(&q).unwrap();
        let b1 = a.path_basis().unwrap();
        let b2 = a.path_basis_dense().unwrap();
        assert_eq!(b1.dims, b2.dims);
        assert_eq!(b1.terminal_length, b2.terminal_length);
    }

    #[test]
    fn four_cycle_algebra() {
        // Chordless oriented 4-cycle: each arrow gets a zero relation of
        // length 3.  Classes: trivial paths, arrows, and length-2 paths.
        let q = Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let a = algebra_from_potential(&q).unwrap();
        assert_eq!(a.relations().len(), 4);
        let c = cartan_i64(&a);
        // Distance-3 blocks vanish: the length-3 paths are the relations.
        assert_eq!(
            c,
            vec![
                vec![1, 1, 1, 0],
                vec![0, 1, 1, 1],
                vec![1, 0, 1, 1],
                vec![1, 1, 0, 1]
            ]
        );
        let m = a.cartan_matrix().unwrap();
        assert_eq!(m.determinant(), BigInt::from(3));
    }

    #[test]
    fn binomial_relation_identifies_paths() {
        // Two triangles sharing the arrow 0 -> 1 (cluster-tilted D4 core):
        // the shared arrow's derivative is a binomial relation.
        let q =
            Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)]).unwrap();
        let rels = relations_from_potential(&q).unwrap();
        let binomials: Vec<_> = rels.iter().filter(|r| r.terms.len() == 2).collect();
        assert_eq!(binomials.len(), 1);
        let a = algebra_from_potential(&q).unwrap();
        let basis = a.path_basis().unwrap();
        // The two length-2 paths 1 -> 0 are identified, not killed.
        assert_eq!(basis.dims[1][0], 1);
        let dense = a.path_basis_dense().unwrap();
        assert_eq!(basis.dims, dense.dims);
    }

    #[test]
    fn path_through_builds_and_rejects() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let p = path_through(&q, &[0, 1, 2]).unwrap();
        assert_eq!(p.len(), 2);
        assert!(path_through(&q, &[2, 1]).is_err());
    }

    #[test]
    fn acyclic_terminates_at_path_exhaustion() {
        let q = Quiver::from_arrows(2, &[(0, 1)]).unwrap();
        let a = algebra_from_potential(&q).unwrap();
        let basis = a.path_basis().unwrap();
        assert_eq!(basis.terminal_length, 2);
        assert_eq!(basis.dims, vec![vec![1, 1], vec![0, 1]]);
    }
}
