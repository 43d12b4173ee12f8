//! Recognition of mutation classes of simply-laced Dynkin diagrams.
//!
//! Type A is decided structurally: a connected quiver is mutation
//! equivalent to A_n exactly when its only underlying cycles are
//! pairwise edge-disjoint oriented triangles and every vertex
//! neighbourhood matches one of nine local shapes (at most two triangles
//! through a vertex, at most four neighbours, etc.).  Types D and E are
//! decided by membership in the seed's mutation class, which is
//! enumerated once per rank and cached.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::quiver::{MutationClass, Quiver};

/// Default bound on the rank accepted by [`detect_dynkin`].
pub const DEFAULT_MAX_RANK: usize = 9;

/// Cap used when enumerating seed classes; ranks up to 9 stay far below it.
const SEED_CLASS_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
    NotFiniteDynkin,
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
            DynkinType::NotFiniteDynkin => write!(f, "not finite Dynkin"),
        }
    }
}

/// Linearly oriented Dynkin seed quiver of the given type and rank.
pub fn seed_quiver(t: char, n: usize) -> Result<Quiver> {
    let ok = match t {
        'A' => n >= 1,
        'D' => n >= 4,
        'E' => (6..=8).contains(&n),
        _ => false,
    };
    if !ok {
        return Err(Error::RankTooLarge(n, 0));
    }
    let mut arrows: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    if t == 'D' {
        // Replace the last chain arrow by a fork at vertex n-3.
        arrows.pop();
        arrows.pop();
        arrows.push((n - 3, n - 2));
        arrows.push((n - 3, n - 1));
    } else if t == 'E' {
        // Chain 0..n-2 with vertex n-1 hanging off vertex 2.
        arrows.pop();
        arrows.push((2, n - 1));
    }
    Quiver::from_arrows(n, &arrows)
}

fn seed_class(t: char, n: usize) -> Result<Arc<MutationClass>> {
    static CACHE: OnceLock<Mutex<HashMap<(char, usize), Arc<MutationClass>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&(t, n)) {
        return Ok(c.clone());
    }
    let class = seed_quiver(t, n)?.mutation_class(SEED_CLASS_CAP)?;
    if !class.complete {
        return Err(Error::ClassCapExceeded(SEED_CLASS_CAP));
    }
    let arc = Arc::new(class);
    cache
        .lock()
        .unwrap()
        .insert((t, n), arc.clone());
    Ok(arc)
}

/// The nine admissible vertex neighbourhoods, as quivers with the centre
/// at vertex 0.  The first three are also the admissible root shapes of a
/// rooted quiver of type A.
fn neighborhood_shapes() -> &'static [Quiver] {
    static SHAPES: OnceLock<Vec<Quiver>> = OnceLock::new();
    SHAPES.get_or_init(|| {
        let mk = |n, arrows: &[(usize, usize)]| Quiver::from_arrows(n, arrows).unwrap();
        vec![
            // one arrow in / one arrow out
            mk(2, &[(1, 0)]),
            mk(2, &[(0, 1)]),
            // on one oriented triangle
            mk(3, &[(0, 1), (1, 2), (2, 0)]),
            // two neighbours, no arrow between them
            mk(3, &[(1, 0), (2, 0)]),
            mk(3, &[(0, 1), (0, 2)]),
            mk(3, &[(1, 0), (0, 2)]),
            // triangle plus one extra arrow
            mk(4, &[(0, 1), (1, 2), (2, 0), (3, 0)]),
            mk(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]),
            // two triangles meeting only at the centre
            mk(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
        ]
    })
}

/// Does `q` with distinguished vertex 0 match `shape` with its centre at
/// vertex 0, under some bijection fixing the centres?
fn matches_shape(q: &Quiver, shape: &Quiver) -> bool {
    let n = q.vertex_count();
    if n != shape.vertex_count() || q.arrow_total() != shape.arrow_total() {
        return false;
    }
    let rest: Vec<usize> = (1..n).collect();
    permutations_match(q, shape, &rest)
}

fn permutations_match(q: &Quiver, shape: &Quiver, rest: &[usize]) -> bool {
    let n = q.vertex_count();
    let mut idx: Vec<usize> = (0..rest.len()).collect();
    loop {
        let mut perm = vec![0usize; n];
        for (slot, &i) in idx.iter().enumerate() {
            perm[slot + 1] = rest[i];
        }
        if (0..n).all(|i| (0..n).all(|j| q.arrow_count(perm[i], perm[j]) == shape.arrow_count(i, j)))
        {
            return true;
        }
        if !next_permutation(&mut idx) {
            return false;
        }
    }
}

fn next_permutation(idx: &mut [usize]) -> bool {
    let n = idx.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && idx[i - 1] >= idx[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while idx[j] <= idx[i - 1] {
        j -= 1;
    }
    idx.swap(i - 1, j);
    idx[i..].reverse();
    true
}

/// Neighbourhood of `v`: the induced subquiver on `v` and its neighbours,
/// with `v` first.
fn neighborhood(q: &Quiver, v: usize) -> Result<Quiver> {
    let mut verts = vec![v];
    verts.extend(q.neighbors(v));
    q.induced(&verts)
}

/// Does vertex 0 of `q` (assumed a quiver of mutation type A) have one of
/// the three root shapes: a single arrow in, a single arrow out, or
/// sitting on one oriented triangle?
pub fn has_root_shape(q: &Quiver, v: usize) -> bool {
    match neighborhood(q, v) {
        Ok(nb) => neighborhood_shapes()[..3]
            .iter()
            .any(|s| matches_shape(&nb, s)),
        Err(_) => false,
    }
}

/// Structural test for mutation type A.
pub fn is_mutation_type_a(q: &Quiver) -> bool {
    let n = q.vertex_count();
    if n == 0 || !q.is_connected() || !q.is_simply_laced() {
        return false;
    }
    if n == 1 {
        return true;
    }
    let tris = q.triangles();
    // Every underlying cycle must be one of the oriented triangles, which
    // must be pairwise edge-disjoint: then the cycle space has dimension
    // exactly the number of triangles.
    if q.edge_total() != n - 1 + tris.len() {
        return false;
    }
    let mut tri_edges = std::collections::HashSet::new();
    for &(i, j, k) in &tris {
        for (x, y) in [(i, j), (j, k), (i, k)] {
            let e = (x.min(y), x.max(y));
            if !tri_edges.insert(e) {
                return false;
            }
        }
    }
    (0..n).all(|v| match neighborhood(q, v) {
        Ok(nb) => neighborhood_shapes().iter().any(|s| matches_shape(&nb, s)),
        Err(_) => false,
    })
}

/// Decide whether `q` is mutation equivalent to a simply-laced Dynkin
/// diagram of rank at most `max_rank`.
pub fn detect_dynkin(q: &Quiver, max_rank: usize) -> Result<DynkinType> {
    let n = q.vertex_count();
    if n == 0 {
        return Ok(DynkinType::NotFiniteDynkin);
    }
    if !q.is_connected() || !q.is_simply_laced() {
        // Any quiver with a multiple arrow mutates to arbitrarily large
        // multiplicities, so it cannot be of finite type.
        return Ok(DynkinType::NotFiniteDynkin);
    }
    if is_mutation_type_a(q) {
        return Ok(DynkinType::A(n));
    }
    if n > max_rank {
        return Err(Error::RankTooLarge(n, max_rank));
    }
    if (6..=8).contains(&n) {
        let c = q.canonical_form()?;
        if seed_class('E', n)?.contains(&c) {
            return Ok(DynkinType::E(n));
        }
    }
    if n >= 4 {
        let c = q.canonical_form()?;
        if seed_class('D', n)?.contains(&c) {
            return Ok(DynkinType::D(n));
        }
    }
    Ok(DynkinType::NotFiniteDynkin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_chains_are_type_a() {
        for n in 1..=8 {
            let q = seed_quiver('A', n).unwrap();
            assert_eq!(detect_dynkin(&q, 9).unwrap(), DynkinType::A(n), "A{n}");
        }
    }

    #[test]
    fn triangle_chain_is_type_a() {
        // Two edge-disjoint triangles joined at a vertex.
        let q = Quiver::from_arrows(
            5,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
        )
        .unwrap();
        assert!(is_mutation_type_a(&q));
    }

    #[test]
    fn four_cycle_is_not_type_a_but_is_type_d() {
        let q = Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_mutation_type_a(&q));
        assert_eq!(detect_dynkin(&q, 9).unwrap(), DynkinType::D(4));
    }

    #[test]
    fn dynkin_seeds_detect_as_themselves() {
        assert_eq!(
            detect_dynkin(&seed_quiver('D', 5).unwrap(), 9).unwrap(),
            DynkinType::D(5)
        );
        assert_eq!(
            detect_dynkin(&seed_quiver('E', 6).unwrap(), 9).unwrap(),
            DynkinType::E(6)
        );
    }

    #[test]
    fn double_arrow_is_not_finite() {
        let q = Quiver::from_arrows(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(detect_dynkin(&q, 9).unwrap(), DynkinType::NotFiniteDynkin);
    }

    #[test]
    fn disconnected_is_not_finite() {
        let q = Quiver::from_arrows(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(detect_dynkin(&q, 9).unwrap(), DynkinType::NotFiniteDynkin);
    }

    #[test]
    fn rank_bound_is_enforced() {
        // Rank-10 quiver that is not type A forces class enumeration,
        // which the bound rejects.
        let mut arrows: Vec<(usize, usize)> = (0..9).map(|i| (i, i + 1)).collect();
        arrows.push((9, 0));
        let q = Quiver::from_arrows(10, &arrows).unwrap();
        assert!(matches!(
            detect_dynkin(&q, 9),
            Err(Error::RankTooLarge(10, 9))
        ));
    }

    #[test]
    fn d4_class_size_matches_known_count() {
        let class = seed_quiver('D', 4).unwrap().mutation_class(1000).unwrap();
        assert!(class.complete);
        // D4: 6 quivers up to isomorphism.
        assert_eq!(class.len(), 6);
    }

    #[test]
    fn root_shapes() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(has_root_shape(&q, 0));
        assert!(has_root_shape(&q, 2));
        // Middle vertex has shape in-out, which is not a root shape.
        assert!(!has_root_shape(&q, 1));
        let t = Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(has_root_shape(&t, 0));
    }
}
