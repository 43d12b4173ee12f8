//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line.  All comparisons are exact — integer and rational
//! arithmetic throughout, zero tolerance.

use std::collections::{BTreeMap, BTreeSet};

use num::BigInt;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use ctsing::fixtures;
use ctsing_core::algebra::{
    algebra_from_classification, algebra_from_potential,
};
use ctsing_core::classifier::{
    cross_validate_classified, cross_validate_with_priority, singularity_invariant,
    SingularityInvariant, DET_TRACE_TABLE,
};
use ctsing_core::dynkin::{seed_quiver, DEFAULT_MAX_RANK};
use ctsing_core::linalg::{associated_polynomial, asymmetry, IntPolynomial};
use ctsing_core::recognition::{build_skeleton, classify, Classification, FAMILY_PRIORITY};
use ctsing_core::Quiver;

fn pass(n: usize, msg: &str) {
    println!("PASS criterion {n}: {msg}");
}

fn fail(n: usize, msg: &str) -> ! {
    println!("FAIL criterion {n}: {msg}");
    panic!("criterion {n} failed: {msg}");
}

/// (det, chi, polynomial) of one quiver via the potential pipeline.
fn numbers(q: &Quiver) -> (BigInt, BigInt, IntPolynomial) {
    let algebra = algebra_from_potential(q).expect("potential algebra");
    let cartan = algebra.cartan_matrix().expect("cartan");
    let det = cartan.determinant();
    let (s, _) = asymmetry(&cartan).expect("asymmetry");
    let trace = s.trace().to_integer();
    let chi = if trace < BigInt::from(0) { -trace } else { BigInt::from(0) };
    let poly = associated_polynomial(&cartan).expect("polynomial");
    (det, chi, poly)
}

#[test]
fn criterion_1_table_polynomials() {
    let start = std::time::Instant::now();
    let mut checked = 0usize;
    for f in fixtures::all() {
        if let Err(e) = ctsing::verify_fixture(f) {
            fail(1, &format!("fixture mismatch: {e}"));
        }
        checked += 1;
    }
    if checked != 36 {
        fail(1, &format!("expected 36 fixtures, found {checked}"));
    }
    pass(
        1,
        &format!(
            "all 36 table representatives reproduce their printed polynomials \
             over every edge orientation ({:.1?})",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_2_e6_class_closure() {
    let seed = seed_quiver('E', 6).unwrap();
    let class = seed.mutation_class(100_000).unwrap();
    if class.len() != 67 || !class.complete {
        fail(2, &format!("E6 class has {} members", class.len()));
    }
    let mut keys: BTreeSet<(BigInt, BigInt)> = BTreeSet::new();
    let mut polys: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let table_keys: BTreeSet<(BigInt, BigInt)> = DET_TRACE_TABLE
        .iter()
        .map(|&(d, t, _)| (BigInt::from(d), BigInt::from(t)))
        .collect();
    for member in class.members.iter() {
        let q = member.quiver();
        let (det, chi, poly) = numbers(&q);
        let key = (det, chi);
        if !table_keys.contains(&key) {
            fail(2, &format!("member key {key:?} is not a table key"));
        }
        keys.insert(key);
        polys.insert(poly.coeffs().to_vec());
    }
    let expected_keys: BTreeSet<(BigInt, BigInt)> = [(1, 0), (2, 0), (3, 0), (4, 0), (4, 1)]
        .iter()
        .map(|&(d, t)| (BigInt::from(d), BigInt::from(t)))
        .collect();
    if keys != expected_keys {
        fail(2, &format!("singularity-class keys {keys:?}"));
    }
    let expected_polys: BTreeSet<Vec<BigInt>> = fixtures::E6
        .iter()
        .map(|f| f.expected_polynomial().coeffs().to_vec())
        .collect();
    if polys != expected_polys {
        fail(
            2,
            &format!("found {} derived classes, expected the 6 table rows", polys.len()),
        );
    }
    pass(
        2,
        "E6 mutation class (67 members) closes on the table: 6 derived classes \
         (exactly the table polynomials), 5 singularity classes",
    );
}

#[test]
fn criterion_3_type_a_theorem() {
    let mut members = 0usize;
    let mut det_exceptions = Vec::new();
    for n in 3..=7usize {
        let class = seed_quiver('A', n).unwrap().mutation_class(100_000).unwrap();
        for member in class.members.iter() {
            let q = member.quiver();
            let c = classify(&q, DEFAULT_MAX_RANK).unwrap();
            let t = match c {
                Classification::TypeA { triangles } => triangles,
                _ => fail(3, &format!("A{n} member classified as {}", c.family_name())),
            };
            if t != q.triangle_count() {
                fail(3, "triangle count disagrees with classification");
            }
            let inv = singularity_invariant(&c).unwrap();
            if inv != SingularityInvariant::new(vec![3; t]) {
                fail(3, &format!("A{n} member invariant {inv} != {t} copies of S_3"));
            }
            let report = cross_validate_classified(&q, &c).unwrap();
            if !report.agreement {
                fail(3, &format!("A{n} member: pipelines disagree"));
            }
            // det = 2^t is measured, not asserted: exceptions are logged.
            if report.det != BigInt::from(2).pow(t as u32) {
                det_exceptions.push((n, t, report.det.clone()));
            }
            members += 1;
        }
    }
    for (n, t, det) in &det_exceptions {
        println!("  criterion 3 note: A{n} member with t={t} has det {det} != 2^t");
    }
    pass(
        3,
        &format!(
            "{members} members of A3..A7: invariant = t(Q) copies of S_3, pipelines agree \
             ({} det=2^t exception(s) logged)",
            det_exceptions.len()
        ),
    );
}

#[test]
fn criterion_4_skeleton_sweep() {
    let mut swept = 0usize;
    for m in 3..=5usize {
        for mask in 0u32..(1 << m) {
            let spikes: Vec<usize> = (1..=m).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let (q, skel) = build_skeleton(m, &spikes).unwrap();
            let expected = SingularityInvariant::new(vec![m + skel.d_q()]);
            let rank = DEFAULT_MAX_RANK.max(q.vertex_count());
            let c = classify(&q, rank).unwrap();
            let inv = singularity_invariant(&c).unwrap();
            if inv != expected {
                fail(
                    4,
                    &format!("Q({m}, {spikes:?}): invariant {inv}, expected {expected}"),
                );
            }
            let report = cross_validate_classified(&q, &c).unwrap();
            if !report.agreement {
                fail(4, &format!("Q({m}, {spikes:?}): pipelines disagree"));
            }
            swept += 1;
        }
    }
    pass(
        4,
        &format!(
            "{swept} skeleta Q(m, spikes), m in 3..=5, all spike subsets: \
             invariant = {{m + d_Q}} including Q(m, {{}}) -> {{m}} and full spikes -> {{2m}}"
        ),
    );
}

#[test]
fn criterion_5_type_d_faithfulness() {
    let reversed: Vec<_> = FAMILY_PRIORITY.iter().copied().rev().collect();
    let mut members = 0usize;
    let mut families: BTreeMap<&'static str, usize> = BTreeMap::new();
    for n in 4..=6usize {
        let class = seed_quiver('D', n).unwrap().mutation_class(100_000).unwrap();
        for member in class.members.iter() {
            let q = member.quiver();
            let c = classify(&q, DEFAULT_MAX_RANK).unwrap();
            let name = c.family_name();
            if !name.starts_with("D-") {
                fail(5, &format!("D{n} member classified as {name}"));
            }
            *families.entry(name).or_default() += 1;
            let reglued = ctsing_core::recognition::reglue(&c).unwrap();
            if reglued.canonical_form().unwrap() != q.canonical_form().unwrap() {
                fail(5, &format!("D{n} member: reglue is not isomorphic to the input"));
            }
            let fwd = cross_validate_with_priority(&q, DEFAULT_MAX_RANK, &FAMILY_PRIORITY).unwrap();
            let rev = cross_validate_with_priority(&q, DEFAULT_MAX_RANK, &reversed).unwrap();
            if fwd.resolved() != rev.resolved() || fwd.det != rev.det || fwd.chi != rev.chi {
                fail(5, &format!("D{n} member: priority order changes the invariant"));
            }
            if !fwd.agreement {
                fail(5, &format!("D{n} member: pipelines disagree"));
            }
            members += 1;
        }
    }
    pass(
        5,
        &format!(
            "{members} members of D4..D6 all land in the four families {:?}, \
             reglue reproduces each up to isomorphism, priority order is immaterial",
            families
        ),
    );
}

#[test]
fn criterion_6_dual_oracle_cartan() {
    let mut checked = 0usize;
    let mut quivers: Vec<Quiver> = Vec::new();
    for n in 3..=7usize {
        let class = seed_quiver('A', n).unwrap().mutation_class(100_000).unwrap();
        quivers.extend(class.members.iter().map(|m| m.quiver()));
    }
    for n in 4..=6usize {
        let class = seed_quiver('D', n).unwrap().mutation_class(100_000).unwrap();
        quivers.extend(class.members.iter().map(|m| m.quiver()));
    }
    // Larger type-D cores with branches: every skeleton from the sweep.
    for m in 3..=5usize {
        for mask in 0u32..(1 << m) {
            let spikes: Vec<usize> = (1..=m).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let (q, _) = build_skeleton(m, &spikes).unwrap();
            if q.vertex_count() <= 8 {
                quivers.push(q);
            }
        }
    }
    for q in &quivers {
        let c = classify(q, DEFAULT_MAX_RANK).unwrap();
        let from_potential = algebra_from_potential(q).unwrap();
        let explicit = algebra_from_classification(q, &c).unwrap();
        let c1 = from_potential.cartan_matrix().unwrap();
        let c2 = explicit.cartan_matrix().unwrap();
        if c1.rows() != c2.rows() {
            fail(
                6,
                &format!("{} on {} vertices: potential and explicit Cartan differ",
                    c.family_name(), q.vertex_count()),
            );
        }
        let incremental = from_potential.path_basis().unwrap();
        let dense = from_potential.path_basis_dense().unwrap();
        if incremental.dims != dense.dims {
            fail(6, "incremental and dense closure bases differ");
        }
        checked += 1;
    }
    pass(
        6,
        &format!(
            "{checked} A/D quivers (<= 8 vertices): potential-derived and explicit \
             relations give identical Cartan matrices; both closure routes agree"
        ),
    );
}

#[test]
fn criterion_7_property_suite() {
    const TRIALS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0xC75_1A6);
    let seeds: Vec<Quiver> = {
        let mut s = Vec::new();
        for n in 2..=8 {
            s.push(seed_quiver('A', n).unwrap());
        }
        for n in 4..=8 {
            s.push(seed_quiver('D', n).unwrap());
        }
        for n in 6..=8 {
            s.push(seed_quiver('E', n).unwrap());
        }
        s
    };
    let start = std::time::Instant::now();
    let mut integral_checked: BTreeSet<Vec<u8>> = BTreeSet::new();
    for trial in 0..TRIALS {
        let mut q = seeds[rng.random_range(0..seeds.len())].clone();
        let n = q.vertex_count();
        for _ in 0..rng.random_range(0..12) {
            q = q.mutate(rng.random_range(0..n)).unwrap();
        }
        let k = rng.random_range(0..n);
        let mutated = q.mutate(k).unwrap();
        // No loops or 2-cycles by construction; involution.
        if mutated.mutate(k).unwrap() != q {
            fail(7, &format!("trial {trial}: mutation at {k} is not an involution"));
        }
        // Exchange-matrix oracle.
        let b = q.exchange_matrix();
        let mut expected = vec![vec![0i64; n]; n];
        for (i, row) in expected.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = if i == k || j == k {
                    -b[i][j]
                } else {
                    b[i][j] + b[i][k].signum() * 0i64.max(b[i][k] * b[k][j])
                };
            }
        }
        if mutated.exchange_matrix() != expected {
            fail(7, &format!("trial {trial}: exchange-matrix formula violated"));
        }
        // Canonical form is permutation-invariant.
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        if q.permuted(&perm).canonical_form().unwrap() != q.canonical_form().unwrap() {
            fail(7, &format!("trial {trial}: canonical form not permutation-invariant"));
        }
        // Asymmetry integrality, once per isomorphism class encountered.
        let code = q.canonical_form().unwrap().code().to_vec();
        if integral_checked.insert(code) {
            let algebra = algebra_from_potential(&q).unwrap();
            let cartan = algebra.cartan_matrix().unwrap();
            let (_, integral) = asymmetry(&cartan).unwrap();
            if !integral {
                fail(7, &format!("trial {trial}: asymmetry matrix is not integral"));
            }
        }
    }
    pass(
        7,
        &format!(
            "{TRIALS} randomized mutation trials: involution, exchange-formula oracle, \
             canonical invariance; asymmetry integral on {} distinct classes ({:.1?})",
            integral_checked.len(),
            start.elapsed()
        ),
    );
}
