//! The singularity invariant: which cyclic Nakayama components make up
//! the stable category of Gorenstein projectives.
//!
//! Two independent pipelines produce it.  The structural one reads it
//! off the classification (so many triangle components `S_3`, plus the
//! core's own component).  The numerical one computes the Cartan matrix,
//! its determinant and the normalized trace of its asymmetry
//! `S = C (C^T)^{-1}`, and looks the pair up in the ten-row table.
//! `cross_validate` runs both and compares.
//!
//! Note on the trace statistic: the lookup key is
//! `chi = max(0, -trace(S))`, which equals `#components - 1` for
//! nonempty invariants and 0 for the trivial one.  The literal trace of
//! `S` is `1 - #components` throughout (e.g. +1 for hereditary
//! algebras, whose table row is keyed (1, 0)).

use num::bigint::BigInt;
use num::{Signed, Zero};

use crate::algebra::algebra_from_potential;
use crate::error::{Error, Result};
use crate::linalg::{asymmetry, associated_polynomial, IntMatrix, IntPolynomial};
use crate::recognition::{classify, classify_with_priority, Classification, DFamily};
use crate::quiver::Quiver;

/// Multiset of component sizes: `{l_1, ..., l_k}` meaning the invariant
/// is the disjoint union of the stable module categories of the
/// self-injective Nakayama algebras `S_{l_i}` (cyclic quiver on `l_i`
/// vertices, radical-square-zero style truncation at length `l_i - 1`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SingularityInvariant {
    components: Vec<usize>,
}

impl SingularityInvariant {
    pub fn new(mut components: Vec<usize>) -> SingularityInvariant {
        components.sort_unstable();
        SingularityInvariant { components }
    }

    pub fn trivial() -> SingularityInvariant {
        SingularityInvariant { components: vec![] }
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }
}

impl std::fmt::Display for SingularityInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "S_{l}")?;
        }
        write!(f, "}}")
    }
}

/// Result of the (det, chi) table lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableLookup {
    Found(SingularityInvariant),
    NotInTable,
}

/// The ten-key lookup table relating `(det C, chi)` to the invariant.
pub const DET_TRACE_TABLE: [(i64, i64, &[usize]); 10] = [
    (1, 0, &[]),
    (2, 0, &[3]),
    (3, 0, &[4]),
    (4, 0, &[5]),
    (4, 1, &[3, 3]),
    (5, 0, &[6]),
    (6, 0, &[7]),
    (6, 1, &[3, 4]),
    (8, 1, &[3, 5]),
    (8, 2, &[3, 3, 3]),
];

pub fn invariant_from_det_trace(det: &BigInt, chi: &BigInt) -> TableLookup {
    for &(d, t, comps) in DET_TRACE_TABLE.iter() {
        if det == &BigInt::from(d) && chi == &BigInt::from(t) {
            return TableLookup::Found(SingularityInvariant::new(comps.to_vec()));
        }
    }
    TableLookup::NotInTable
}

/// The component-count corollary: nonempty invariants have `chi + 1`
/// components; the trivial invariant has `chi = 0`.
pub fn component_count_check(inv: &SingularityInvariant, chi: &BigInt) -> bool {
    if inv.is_trivial() {
        chi.is_zero()
    } else {
        BigInt::from(inv.components.len()) == chi + 1
    }
}

/// Structural invariant of a classification.  Branch triangles each
/// contribute an `S_3`; the core contributes its own component.  Not
/// defined for type E (no structural formula; use the table).
pub fn singularity_invariant(c: &Classification) -> Result<SingularityInvariant> {
    let mut comps = Vec::new();
    let branch_triangles = |branches: &[(usize, crate::recognition::RootedTypeA)]| -> usize {
        branches.iter().map(|(_, b)| b.triangle_count()).sum()
    };
    match c {
        Classification::TypeA { triangles } => comps.extend(std::iter::repeat(3).take(*triangles)),
        Classification::TypeDI { branch, .. } => {
            comps.extend(std::iter::repeat(3).take(branch.triangle_count()))
        }
        Classification::TypeDII { branches, .. } => {
            comps.extend(std::iter::repeat(3).take(branch_triangles(branches) + 1))
        }
        Classification::TypeDIII { branches, .. } => {
            comps.extend(std::iter::repeat(3).take(branch_triangles(branches)));
            comps.push(4);
        }
        Classification::TypeDIV {
            skeleton,
            d_q,
            branches,
        } => {
            comps.extend(std::iter::repeat(3).take(branch_triangles(branches)));
            comps.push(skeleton.m + d_q);
        }
        Classification::TypeE { .. } => return Err(Error::StructuralInvariantUnavailable),
    }
    Ok(SingularityInvariant::new(comps))
}

/// Everything the two pipelines produce for one quiver.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub family: &'static str,
    /// Structural invariant; absent for type E.
    pub structural: Option<SingularityInvariant>,
    pub det: BigInt,
    /// Literal trace of `S`.
    pub trace: BigInt,
    /// Normalized trace `max(0, -trace)`: the table key.
    pub chi: BigInt,
    pub polynomial: IntPolynomial,
    pub asymmetry_integral: bool,
    pub table: TableLookup,
    /// True when the available pipelines do not contradict each other.
    pub agreement: bool,
    /// Diagnostic only: `det == prod(l - 1)` over the components.
    pub det_product_diagnostic: Option<bool>,
    /// Diagnostic only: `chi == max(0, #components - 1)`.
    pub trace_count_diagnostic: Option<bool>,
}

impl InvariantReport {
    /// The invariant this report settles on: structural when available,
    /// otherwise the table lookup.
    pub fn resolved(&self) -> Option<&SingularityInvariant> {
        match (&self.structural, &self.table) {
            (Some(s), _) => Some(s),
            (None, TableLookup::Found(t)) => Some(t),
            (None, TableLookup::NotInTable) => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let inv_json = |inv: &SingularityInvariant| {
            serde_json::Value::Array(
                inv.components()
                    .iter()
                    .map(|&l| serde_json::Value::from(l))
                    .collect(),
            )
        };
        serde_json::json!({
            "family": self.family,
            "structural": self.structural.as_ref().map(inv_json),
            "det": self.det.to_string(),
            "trace": self.trace.to_string(),
            "chi": self.chi.to_string(),
            "polynomial": self.polynomial.factored_string(),
            "polynomial_expanded": self.polynomial.expanded_string(),
            "asymmetry_integral": self.asymmetry_integral,
            "table": match &self.table {
                TableLookup::Found(t) => Some(inv_json(t)),
                TableLookup::NotInTable => None,
            },
            "agreement": self.agreement,
            "det_product_diagnostic": self.det_product_diagnostic,
            "trace_count_diagnostic": self.trace_count_diagnostic,
        })
    }

    pub fn to_text(&self) -> String {
        let fmt_inv = |inv: &SingularityInvariant| inv.to_string();
        let mut out = String::new();
        out.push_str(&format!("family:      {}\n", self.family));
        out.push_str(&format!("polynomial:  {}\n", self.polynomial.factored_string()));
        out.push_str(&format!("det:         {}\n", self.det));
        out.push_str(&format!("trace:       {} (chi = {})\n", self.trace, self.chi));
        out.push_str(&format!(
            "structural:  {}\n",
            self.structural
                .as_ref()
                .map(&fmt_inv)
                .unwrap_or_else(|| "-".into())
        ));
        out.push_str(&format!(
            "table:       {}\n",
            match &self.table {
                TableLookup::Found(t) => fmt_inv(t),
                TableLookup::NotInTable => "not in table".into(),
            }
        ));
        out.push_str(&format!("agreement:   {}\n", self.agreement));
        out
    }
}

fn chi_of(trace: &BigInt) -> BigInt {
    let neg = -trace;
    if neg.is_negative() {
        BigInt::zero()
    } else {
        neg
    }
}

/// Run both pipelines on `q` and compare.
pub fn cross_validate(q: &Quiver, max_rank: usize) -> Result<InvariantReport> {
    let classification = classify(q, max_rank)?;
    cross_validate_classified(q, &classification)
}

/// As [`cross_validate`], but with the type-D families matched in the
/// given priority order.
pub fn cross_validate_with_priority(
    q: &Quiver,
    max_rank: usize,
    priority: &[DFamily],
) -> Result<InvariantReport> {
    let classification = classify_with_priority(q, max_rank, priority)?;
    cross_validate_classified(q, &classification)
}

pub fn cross_validate_classified(
    q: &Quiver,
    classification: &Classification,
) -> Result<InvariantReport> {
    let structural = singularity_invariant(classification).ok();
    let algebra = algebra_from_potential(q)?;
    let cartan = algebra.cartan_matrix()?;
    let report = report_from_cartan(classification.family_name(), structural, &cartan)?;
    Ok(report)
}

/// Numerical half of the report, given a Cartan matrix.
pub fn report_from_cartan(
    family: &'static str,
    structural: Option<SingularityInvariant>,
    cartan: &IntMatrix,
) -> Result<InvariantReport> {
    let det = cartan.determinant();
    if det.is_zero() {
        return Err(Error::SingularCartan);
    }
    let (s, integral) = asymmetry(cartan)?;
    let trace_rat = s.trace();
    if !num::One::is_one(trace_rat.denom()) {
        return Err(Error::NonIntegralAsymmetry);
    }
    let trace = trace_rat.to_integer();
    let chi = chi_of(&trace);
    let polynomial = associated_polynomial(cartan)?;
    let table = invariant_from_det_trace(&det, &chi);
    let agreement = match (&structural, &table) {
        (Some(s), TableLookup::Found(t)) => s == t,
        // Outside the table's range there is nothing to contradict.
        (Some(_), TableLookup::NotInTable) => true,
        (None, TableLookup::Found(_)) => true,
        (None, TableLookup::NotInTable) => false,
    };
    let reference = match (&structural, &table) {
        (Some(s), _) => Some(s.clone()),
        (None, TableLookup::Found(t)) => Some(t.clone()),
        _ => None,
    };
    let det_product_diagnostic = reference.as_ref().map(|inv| {
        let prod: BigInt = inv
            .components()
            .iter()
            .map(|&l| BigInt::from(l as i64 - 1))
            .product();
        prod == det
    });
    let trace_count_diagnostic = reference.as_ref().map(|inv| {
        let expect = BigInt::from(inv.components().len().saturating_sub(1));
        expect == chi
    });
    Ok(InvariantReport {
        family,
        structural,
        det,
        trace,
        chi,
        polynomial,
        asymmetry_integral: integral,
        table,
        agreement,
        det_product_diagnostic,
        trace_count_diagnostic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::recognition::build_skeleton;

    #[test]
    fn table_is_injective_on_outputs() {
        let mut seen = std::collections::HashSet::new();
        for &(_, _, comps) in DET_TRACE_TABLE.iter() {
            assert!(seen.insert(comps), "duplicate invariant {comps:?}");
        }
    }

    #[test]
    fn table_lookup_hits_and_misses() {
        let found = invariant_from_det_trace(&BigInt::from(8), &BigInt::from(1));
        assert_eq!(
            found,
            TableLookup::Found(SingularityInvariant::new(vec![3, 5]))
        );
        assert_eq!(
            invariant_from_det_trace(&BigInt::from(7), &BigInt::from(0)),
            TableLookup::NotInTable
        );
    }

    #[test]
    fn component_count_checks() {
        let inv = SingularityInvariant::new(vec![3, 5]);
        assert!(component_count_check(&inv, &BigInt::from(1)));
        assert!(component_count_check(
            &SingularityInvariant::trivial(),
            &BigInt::zero()
        ));
        assert!(!component_count_check(
            &SingularityInvariant::new(vec![3, 3, 3]),
            &BigInt::from(1)
        ));
    }

    #[test]
    fn triangle_cross_validation() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = cross_validate(&q, 9).unwrap();
        assert_eq!(r.family, "A");
        assert_eq!(r.det, BigInt::from(2));
        assert_eq!(r.trace, BigInt::zero());
        assert_eq!(r.chi, BigInt::zero());
        assert_eq!(
            r.structural,
            Some(SingularityInvariant::new(vec![3]))
        );
        assert!(r.agreement);
        assert!(r.asymmetry_integral);
        assert_eq!(r.det_product_diagnostic, Some(true));
        assert_eq!(r.trace_count_diagnostic, Some(true));
    }

    #[test]
    fn hereditary_d5_cross_validation() {
        let q = crate::dynkin::seed_quiver('D', 5).unwrap();
        let r = cross_validate(&q, 9).unwrap();
        assert_eq!(r.family, "D-I");
        assert_eq!(r.det, BigInt::from(1));
        // Literal trace of S is +1 for hereditary algebras; chi is 0.
        assert_eq!(r.trace, BigInt::from(1));
        assert_eq!(r.chi, BigInt::zero());
        assert_eq!(r.structural, Some(SingularityInvariant::trivial()));
        assert!(r.agreement);
    }

    #[test]
    fn bare_skeleton_invariant() {
        let (q, _) = build_skeleton(4, &[]).unwrap();
        let r = cross_validate(&q, 9).unwrap();
        assert_eq!(r.det, BigInt::from(3));
        assert_eq!(r.chi, BigInt::zero());
        assert_eq!(r.structural, Some(SingularityInvariant::new(vec![4])));
        assert!(r.agreement);
    }

    #[test]
    fn report_serialization() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = cross_validate(&q, 9).unwrap();
        let j = r.to_json();
        assert_eq!(j["det"], "2");
        assert_eq!(j["agreement"], true);
        let text = r.to_text();
        assert!(text.contains("det:         2"));
    }
}
