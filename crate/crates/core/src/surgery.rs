//! Per-Spin^c Floer homology of large integer surgeries and the knot
//! Floer table of the surgery-core knot.
//!
//! For `n`-surgery with `n` at least twice the genus, the homology in
//! Spin^c slot `m` is carried by the hook complex `max(i, j - m) = 0`,
//! filtered in two steps by the sub part `i < 0, j = m` with quotient
//! `i = 0, j <= m`. Results are exposed only inside the proven range;
//! smaller coefficients raise [`Error::SlopeTooSmall`].
//!
//! Spin^c labels are integers modulo `n`. The displayed summation range
//! `[-floor(n/2) + 1, floor(n/2)]` has `n - 1` elements for odd `n`, so
//! computations canonicalize labels into the length-`n` window
//! `[-ceil(n/2) + 1, floor(n/2)]`, where every residue has exactly one
//! representative; reports surface both conventions.

use std::collections::BTreeMap;

use crate::cfk::{BifilteredComplex, RegionSpec};
use crate::error::{Error, Result};

/// The displayed per-Spin^c summation range `[-floor(n/2) + 1,
/// floor(n/2)]`, ascending. The left endpoint is clamped so the range
/// always contains 0 (for `n = 1` the displayed bounds cross).
pub fn spinc_range(n: i64) -> Vec<i64> {
    assert!(n >= 1);
    let hi = n / 2;
    let lo = (-(n / 2) + 1).min(hi);
    (lo..=hi).collect()
}

/// The length-`n` window `[-ceil(n/2) + 1, floor(n/2)]`: a complete set
/// of residue representatives modulo `n`, ascending.
pub fn spinc_window(n: i64) -> Vec<i64> {
    assert!(n >= 1);
    (-((n + 1) / 2) + 1..=n / 2).collect()
}

/// The representative of `m` modulo `n` inside the length-`n` window.
pub fn canonical_m(m: i64, n: i64) -> i64 {
    assert!(n >= 1);
    let r = m.rem_euclid(n);
    if r > n / 2 {
        r - n
    } else {
        r
    }
}

/// A Spin^c label for an `n`-surgery, normalized into the length-`n`
/// window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpincIndex {
    pub m: i64,
    pub n: i64,
}

impl SpincIndex {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Validation(format!(
                "surgery coefficient must be positive, got {n}"
            )));
        }
        if canonical_m(m, n) != m {
            return Err(Error::Validation(format!(
                "Spin^c label {m} is outside the length-{n} window"
            )));
        }
        Ok(SpincIndex { m, n })
    }
}

/// One row of the core table: ranks of the sub and quotient groups in
/// Spin^c slot `m` together with their relative Alexander gradings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreRow {
    pub m: i64,
    pub rank_sub: usize,
    pub rank_quot: usize,
    pub rel_a_sub: i64,
    pub rel_a_quot: i64,
}

/// Knot Floer homology of the surgery core: one row per Spin^c slot in
/// the length-`n` window. Relative Alexander gradings use the baseline
/// `rel_a_sub(0) = 0`; rows satisfy `rel_a_sub(m) = -m` and
/// `rel_a_quot(m) = -m - n`, so sub gradings differ by `-(i - j)` across
/// slots and each quotient group sits `n` below its sub group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreHfkTable {
    pub n: i64,
    pub rows: Vec<CoreRow>,
}

impl CoreHfkTable {
    pub fn total_rank(&self) -> usize {
        self.rows.iter().map(|r| r.rank_sub + r.rank_quot).sum()
    }
}

/// Checks the validity gate `n >= 2 * genus` and returns the genus.
pub fn validity_gate(complex: &BifilteredComplex, n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::Validation(format!(
            "surgery coefficient must be positive, got {n}"
        )));
    }
    let genus = complex.genus()?;
    if n < 2 * genus {
        return Err(Error::SlopeTooSmall { n, gate: 2 * genus });
    }
    Ok(genus)
}

/// Homology ranks of the hook complex in Spin^c slot `m` of `n`-surgery,
/// keyed by two-step filtration level (0 = sub part, 1 = quotient part).
pub fn hf_hat_surgery(complex: &BifilteredComplex, n: i64, m: i64) -> Result<BTreeMap<i64, usize>> {
    validity_gate(complex, n)?;
    complex
        .extract(RegionSpec::Hook(canonical_m(m, n)))
        .homology_ranks()
}

/// Total homology rank of the hook complex at slot `m`; the slot is used
/// as given, without reduction modulo any `n`.
pub fn hook_rank(complex: &BifilteredComplex, m: i64) -> usize {
    complex
        .extract(RegionSpec::Hook(m))
        .total_homology_rank()
        .expect("hook complexes of a valid complex are valid")
}

/// Recomputes the hook rank at slot `m` through the two-step truncation
/// route: the hook is the quotient of `max(i, j - m) <= 0` by
/// `max(i, j - m) <= -1`, and exactness of the associated short exact
/// sequence gives `rank H(quotient) = rank H(total) - rank H(sub) +
/// 2 * rank(connecting map)`. Both truncations are cut at the same depth,
/// which leaves the quotient untouched.
pub fn hook_rank_oracle(complex: &BifilteredComplex, m: i64) -> Result<usize> {
    use crate::f2::{F2Matrix, GradedF2Complex, GradedGenerator};

    let max_a = complex
        .generators()
        .iter()
        .map(|g| g.alexander)
        .max()
        .unwrap_or(0);
    let max_h = complex
        .arrows()
        .iter()
        .map(|a| a.h as i64)
        .max()
        .unwrap_or(0);
    let floor = (m - max_a).min(0) - max_h - 1;

    // Translates (x, i) with floor <= i <= min(0, m - A(x)) form the
    // truncated total complex; the sub complex additionally satisfies
    // i <= -1 and j <= m - 1.
    let mut members: Vec<(usize, i64)> = Vec::new();
    let mut slot: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for (g_idx, g) in complex.generators().iter().enumerate() {
        let top = (m - g.alexander).min(0);
        for i in floor..=top {
            slot.insert((g_idx, i), members.len());
            members.push((g_idx, i));
        }
    }
    let generators: Vec<GradedGenerator> = members
        .iter()
        .map(|&(g_idx, i)| {
            let g = &complex.generators()[g_idx];
            GradedGenerator {
                label: BifilteredComplex::translate_label(&g.label, i),
                grading: g.alexander + i,
                maslov: g.maslov,
            }
        })
        .collect();
    let mut boundary = F2Matrix::zero(members.len(), members.len());
    for a in complex.arrows() {
        let src = complex.index_of(&a.src).unwrap();
        let dst = complex.index_of(&a.dst).unwrap();
        for (&(g_idx, i), &src_pos) in &slot {
            if g_idx != src {
                continue;
            }
            if let Some(&dst_pos) = slot.get(&(dst, i - a.h as i64)) {
                boundary.toggle(dst_pos, src_pos);
            }
        }
    }
    let total = GradedF2Complex::new(generators, boundary).expect("truncation labels are unique");
    let sub_labels: std::collections::BTreeSet<String> = members
        .iter()
        .filter(|&&(g_idx, i)| {
            let a = complex.generators()[g_idx].alexander;
            i <= -1 && a + i < m
        })
        .map(|&(g_idx, i)| {
            BifilteredComplex::translate_label(&complex.generators()[g_idx].label, i)
        })
        .collect();
    let sub_rank = {
        let keep: Vec<usize> = members
            .iter()
            .enumerate()
            .filter(|(_, &(g_idx, i))| {
                let a = complex.generators()[g_idx].alexander;
                i <= -1 && a + i < m
            })
            .map(|(pos, _)| pos)
            .collect();
        let mut sub_boundary = F2Matrix::zero(keep.len(), keep.len());
        let pos_of: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        for (p, &j) in keep.iter().enumerate() {
            for &i in total.boundary().column(j) {
                if let Some(&q) = pos_of.get(&i) {
                    sub_boundary.toggle(q, p);
                }
            }
        }
        let gens = keep
            .iter()
            .map(|&i| total.generators()[i].clone())
            .collect();
        GradedF2Complex::new(gens, sub_boundary)
            .expect("truncation labels are unique")
            .total_homology_rank()?
    };
    let connecting = total.connecting_homomorphism(&sub_labels)?;
    let total_rank = total.total_homology_rank()?;
    Ok(total_rank - sub_rank + 2 * connecting.matrix.rank())
}

/// The core table for `n`-surgery: per-slot sub and quotient homology
/// ranks with their relative Alexander gradings.
pub fn core_hfk_table(complex: &BifilteredComplex, n: i64) -> Result<CoreHfkTable> {
    validity_gate(complex, n)?;
    let rows = spinc_window(n)
        .into_iter()
        .map(|m| {
            let rank_sub = complex
                .extract(RegionSpec::HookSub(m))
                .total_homology_rank()
                .expect("hook strata of a valid complex are valid");
            let rank_quot = complex
                .extract(RegionSpec::HookQuot(m))
                .total_homology_rank()
                .expect("hook strata of a valid complex are valid");
            CoreRow {
                m,
                rank_sub,
                rank_quot,
                rel_a_sub: -m,
                rel_a_quot: -m - n,
            }
        })
        .collect();
    Ok(CoreHfkTable { n, rows })
}

/// Rank-equality certificate: true when the total core knot Floer rank
/// equals the total surgery homology rank, summed over the window. For a
/// fibered input this certifies that the bottom-subcomplex inclusion is
/// injective on homology for both ambient orientations.
pub fn lspace_certificate(complex: &BifilteredComplex, n: i64) -> Result<bool> {
    if !complex.is_fibered_like()? {
        return Err(Error::NotFibered(
            "the rank certificate needs a fibered-like complex".into(),
        ));
    }
    let table = core_hfk_table(complex, n)?;
    let surgery_sum: usize = spinc_window(n)
        .into_iter()
        .map(|m| hook_rank(complex, m))
        .sum();
    Ok(table.total_rank() == surgery_sum)
}
