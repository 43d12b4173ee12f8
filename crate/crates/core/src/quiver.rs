//! Quivers (finite directed multigraphs without loops or 2-cycles) and
//! Fomin–Zelevinsky mutation.
//!
//! A quiver is stored as an `n x n` multiplicity matrix `a`, where
//! `a[i][j]` is the number of arrows `i -> j`.  The no-loop / no-2-cycle
//! invariants are enforced by every constructor, so the skew-symmetric
//! exchange matrix `b[i][j] = a[i][j] - a[j][i]` carries exactly the same
//! information.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Largest rank for which canonical forms are computed.  Permutation
/// search is exponential; everything in this crate lives well below this.
pub const CANONICAL_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    a: Vec<Vec<u32>>,
}

impl Quiver {
    /// Quiver on `n` vertices with no arrows.
    pub fn new(n: usize) -> Self {
        Quiver {
            n,
            a: vec![vec![0; n]; n],
        }
    }

    /// Build from a list of arrows (repeats give multiplicities).
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut a = vec![vec![0u32; n]; n];
        for &(i, j) in arrows {
            if i >= n {
                return Err(Error::VertexOutOfRange(i, n));
            }
            if j >= n {
                return Err(Error::VertexOutOfRange(j, n));
            }
            a[i][j] += 1;
        }
        Self::from_matrix(a)
    }

    /// Build from a multiplicity matrix, validating the invariants.
    pub fn from_matrix(a: Vec<Vec<u32>>) -> Result<Self> {
        let n = a.len();
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(row.len(), n));
            }
            if row[i] != 0 {
                return Err(Error::LoopArrow(i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if a[i][j] > 0 && a[j][i] > 0 {
                    return Err(Error::TwoCycle(i, j));
                }
            }
        }
        Ok(Quiver { n, a })
    }

    /// Inverse of [`exchange_matrix`]: positive entries above the diagonal
    /// become arrow multiplicities.
    pub fn from_exchange_matrix(b: &[Vec<i64>]) -> Result<Self> {
        let n = b.len();
        let mut a = vec![vec![0u32; n]; n];
        for i in 0..n {
            if b[i].len() != n {
                return Err(Error::DimensionMismatch(b[i].len(), n));
            }
            for j in 0..n {
                if b[i][j] != -b[j][i] {
                    return Err(Error::NotSkewSymmetric(i, j));
                }
                if b[i][j] > 0 {
                    a[i][j] = u32::try_from(b[i][j]).map_err(|_| Error::MultiplicityTooLarge)?;
                }
            }
        }
        Self::from_matrix(a)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Multiplicity of arrows `i -> j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> u32 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &Vec<Vec<u32>> {
        &self.a
    }

    /// Arrows with multiplicity, each repeated arrow listed once per copy,
    /// in lexicographic `(source, target)` order.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for _ in 0..self.a[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn arrow_total(&self) -> usize {
        self.a.iter().flatten().map(|&m| m as usize).sum()
    }

    /// True when every multiplicity is at most 1.
    pub fn is_simply_laced(&self) -> bool {
        self.a.iter().flatten().all(|&m| m <= 1)
    }

    /// Vertices adjacent to `v` in the underlying graph.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&w| self.a[v][w] > 0 || self.a[w][v] > 0)
            .collect()
    }

    /// Number of underlying edges, counting multiplicity.
    pub fn edge_total(&self) -> usize {
        self.arrow_total()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subquiver induced on `vertices` (which must be distinct); vertex `k`
    /// of the result is `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Quiver> {
        let m = vertices.len();
        let mut a = vec![vec![0u32; m]; m];
        for (p, &i) in vertices.iter().enumerate() {
            if i >= self.n {
                return Err(Error::VertexOutOfRange(i, self.n));
            }
            for (q, &j) in vertices.iter().enumerate() {
                a[p][q] = self.a[i][j];
            }
        }
        Quiver::from_matrix(a)
    }

    /// Relabel vertices: vertex `v` of the result is `perm[v]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Quiver {
        assert_eq!(perm.len(), self.n);
        let mut a = vec![vec![0u32; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                a[i][j] = self.a[perm[i]][perm[j]];
            }
        }
        Quiver { n: self.n, a }
    }

    /// Skew-symmetric exchange matrix `b[i][j] = a[i][j] - a[j][i]`.
    pub fn exchange_matrix(&self) -> Vec<Vec<i64>> {
        let mut b = vec![vec![0i64; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                b[i][j] = self.a[i][j] as i64 - self.a[j][i] as i64;
            }
        }
        b
    }

    /// Fomin–Zelevinsky mutation at `k`: add an arrow `i -> j` for every
    /// path `i -> k -> j`, reverse all arrows at `k`, then cancel 2-cycles
    /// maximally.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        if k >= self.n {
            return Err(Error::VertexOutOfRange(k, self.n));
        }
        let n = self.n;
        let mut net = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                net[i][j] = self.a[i][j] as i64;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && i != k && j != k {
                    net[i][j] += self.a[i][k] as i64 * self.a[k][j] as i64;
                }
            }
        }
        for i in 0..n {
            if i != k {
                net[i][k] = self.a[k][i] as i64;
                net[k][i] = self.a[i][k] as i64;
            }
        }
        let mut a = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let d = net[i][j] - net[j][i];
                let (src, dst, m) = if d >= 0 { (i, j, d) } else { (j, i, -d) };
                a[src][dst] = u32::try_from(m).map_err(|_| Error::MultiplicityTooLarge)?;
            }
        }
        Ok(Quiver { n, a })
    }

    /// Oriented 3-cycles `(i, j, k)` with `i` minimal, reported once per
    /// cyclic orbit.  Only meaningful for simply-laced quivers.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if j <= i || self.a[i][j] == 0 {
                    continue;
                }
                for k in 0..self.n {
                    if k > i && self.a[j][k] > 0 && self.a[k][i] > 0 {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles().len()
    }

    /// Chordless oriented cycles, as vertex sequences rotated to start at
    /// their smallest vertex and sorted by (length, sequence).  A cycle is
    /// chordless when its vertex set induces no arrows beyond the cycle
    /// arrows.
    pub fn chordless_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.n];
        for s in 0..self.n {
            path.push(s);
            on_path[s] = true;
            self.chordless_dfs(s, s, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
            path.pop();
        }
        out.sort_by_key(|c| (c.len(), c.clone()));
        out
    }

    fn chordless_dfs(
        &self,
        start: usize,
        v: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for w in 0..self.n {
            if self.a[v][w] == 0 {
                continue;
            }
            if w == start {
                if path.len() >= 3 && self.is_chordless(path) {
                    out.push(path.clone());
                }
                continue;
            }
            // Start each cycle at its smallest vertex so every cycle is
            // found exactly once.
            if w < start || on_path[w] {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            self.chordless_dfs(start, w, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }

    fn is_chordless(&self, cycle: &[usize]) -> bool {
        let len = cycle.len();
        for (p, &x) in cycle.iter().enumerate() {
            for (q, &y) in cycle.iter().enumerate() {
                if x == y {
                    continue;
                }
                let is_cycle_arrow = q == (p + 1) % len;
                if self.a[x][y] > 0 && !is_cycle_arrow {
                    return false;
                }
                if is_cycle_arrow && self.a[x][y] > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Canonical form under vertex relabelling: two quivers get equal
    /// canonical forms exactly when they are isomorphic.
    pub fn canonical_form(&self) -> Result<CanonicalQuiver> {
        if self.n > CANONICAL_BOUND {
            return Err(Error::CanonicalBound(self.n, CANONICAL_BOUND));
        }
        if self.a.iter().flatten().any(|&m| m > u8::MAX as u32) {
            return Err(Error::MultiplicityTooLarge);
        }
        let mut best: Option<Vec<u8>> = None;
        let mut perm = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.canonical_search(&mut perm, &mut used, &mut best);
        Ok(CanonicalQuiver {
            n: self.n,
            code: best.unwrap_or_default(),
        })
    }

    /// Backtracking minimisation of the layered serialisation: once the
    /// first `k` images are fixed, the first `k^2` code bytes are
    /// determined, so prefixes worse than the incumbent prune the whole
    /// subtree.  (Plain row-major order has no such prefix property.)
    /// The full prefix is compared against the *current* incumbent each
    /// time, since the incumbent can improve mid-subtree.
    fn canonical_search(&self, perm: &mut Vec<usize>, used: &mut [bool], best: &mut Option<Vec<u8>>) {
        let k = perm.len();
        if k == self.n {
            let code = self.layered_code(perm);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        for v in 0..self.n {
            if used[v] {
                continue;
            }
            perm.push(v);
            used[v] = true;
            let ok = match best {
                None => true,
                Some(b) => {
                    let prefix = self.layered_code(perm);
                    prefix.as_slice() <= &b[..prefix.len()]
                }
            };
            if ok {
                self.canonical_search(perm, used, best);
            }
            used[v] = false;
            perm.pop();
        }
    }

    /// Bytes contributed by layer `k`: row `k` restricted to columns
    /// `0..=k`, then column `k` restricted to rows `0..k`, all in the
    /// permuted matrix.
    fn layer_bytes(&self, perm: &[usize], k: usize) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 * k + 1);
        for j in 0..=k {
            out.push(self.a[perm[k]][perm[j]] as u8);
        }
        for i in 0..k {
            out.push(self.a[perm[i]][perm[k]] as u8);
        }
        out
    }

    /// Serialisation of the (possibly partial) permuted matrix, layer by
    /// layer.
    fn layered_code(&self, perm: &[usize]) -> Vec<u8> {
        let mut code = Vec::with_capacity(perm.len() * perm.len());
        for k in 0..perm.len() {
            code.extend(self.layer_bytes(perm, k));
        }
        code
    }

    /// Enumerate the mutation class up to isomorphism by breadth-first
    /// search: mutate at vertices in ascending order, canonicalise, keep
    /// new classes.  Stops after `cap` classes and reports completeness.
    pub fn mutation_class(&self, cap: usize) -> Result<MutationClass> {
        let seed = self.canonical_form()?;
        let mut members = BTreeSet::from([seed.clone()]);
        let mut queue = VecDeque::from([seed.clone()]);
        let mut complete = true;
        'bfs: while let Some(c) = queue.pop_front() {
            let q = c.quiver();
            for k in 0..self.n {
                let m = q.mutate(k)?.canonical_form()?;
                if members.contains(&m) {
                    continue;
                }
                if members.len() >= cap {
                    complete = false;
                    break 'bfs;
                }
                members.insert(m.clone());
                queue.push_back(m);
            }
        }
        Ok(MutationClass {
            seed,
            members,
            complete,
        })
    }
}

/// Canonical representative of an isomorphism class of quivers.  The code
/// is the lexicographically minimal layered serialisation of the
/// multiplicity matrix over all vertex orders; its total ordering makes
/// mutation classes storable in ordered sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalQuiver {
    n: usize,
    code: Vec<u8>,
}

impl CanonicalQuiver {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    /// Rebuild the (canonically labelled) quiver from the code.
    pub fn quiver(&self) -> Quiver {
        let n = self.n;
        let mut a = vec![vec![0u32; n]; n];
        let mut pos = 0;
        for k in 0..n {
            for j in 0..=k {
                a[k][j] = self.code[pos] as u32;
                pos += 1;
            }
            for i in 0..k {
                a[i][k] = self.code[pos] as u32;
                pos += 1;
            }
        }
        Quiver { n, a }
    }
}

/// A mutation class enumerated up to isomorphism.
#[derive(Debug, Clone)]
pub struct MutationClass {
    pub seed: CanonicalQuiver,
    pub members: BTreeSet<CanonicalQuiver>,
    /// False when enumeration stopped at the cap.
    pub complete: bool,
}

impl MutationClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &CanonicalQuiver) -> bool {
        self.members.contains(c)
    }
}
