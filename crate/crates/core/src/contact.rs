//! (Non)vanishing criteria for contact invariants of open books and of
//! surgery cores.
//!
//! The verdicts encode exactly the logical strength of the underlying
//! criteria: an if-and-only-if kernel test at integral slopes at least
//! twice the genus, a one-directional implication at non-integral
//! rational slopes, and silence below twice the genus. The ambient
//! complex is taken to be the input itself; any orientation-reversal
//! bookkeeping is the caller's responsibility when preparing input.

use std::collections::BTreeSet;
use std::fmt;

use crate::cfk::{BifilteredComplex, RegionSpec};
use crate::error::{Error, Result};
use crate::f2::ConnectingMap;
use crate::farey::{surgery_path, FareyPath, Slope};
use crate::surgery::validity_gate;

/// Outcome of a contact-invariant decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Nonvanishing,
    Vanishing,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Nonvanishing => write!(f, "NONVANISHING"),
            Status::Vanishing => write!(f, "VANISHING"),
            Status::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

/// Kernel-rank evidence for a decided verdict: the ranks of the
/// connecting map and, when the kernel is nontrivial, a witness cycle in
/// the input generator basis (translate labels).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelEvidence {
    pub domain_rank: usize,
    pub map_rank: usize,
    pub kernel_rank: usize,
    pub witness: Option<Vec<String>>,
}

impl KernelEvidence {
    fn from_map(total: &crate::f2::GradedF2Complex, map: &ConnectingMap) -> Self {
        let witness = map
            .kernel_witnesses()
            .first()
            .map(|cycle| total.cycle_labels(cycle));
        KernelEvidence {
            domain_rank: map.quotient_classes.len(),
            map_rank: map.matrix.rank(),
            kernel_rank: map.kernel_rank(),
            witness,
        }
    }
}

/// Structured evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A kernel computation decided the verdict.
    Kernel(KernelEvidence),
    /// Nonvanishing at an integral slope propagated along a Legendrian
    /// surgery plan to a rational slope.
    LegendrianPlan {
        base: KernelEvidence,
        path: FareyPath,
    },
    /// The criteria do not decide; the reason is recorded.
    Reason(String),
}

/// A decision together with its evidence. Decided verdicts always carry
/// kernel-rank evidence; undecided ones carry the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub certificate: Certificate,
}

/// The connecting homomorphism of
/// `0 -> F(top-1) -> vertical complex -> top slice -> 0`
/// together with its kernel rank. The domain has rank one for
/// fibered-like inputs, so the kernel rank is 0 or 1.
#[derive(Debug, Clone)]
pub struct DeltaStar {
    pub map: ConnectingMap,
    pub kernel_rank: usize,
    pub genus: i64,
}

fn require_fibered(complex: &BifilteredComplex) -> Result<i64> {
    if !complex.is_fibered_like()? {
        return Err(Error::NotFibered(
            "top filtration slice does not have rank one".into(),
        ));
    }
    complex.genus()
}

pub fn delta_star(complex: &BifilteredComplex) -> Result<DeltaStar> {
    let genus = require_fibered(complex)?;
    let total = complex.extract(RegionSpec::Vertical);
    let sub: BTreeSet<String> = complex
        .extract(RegionSpec::FiltSub(genus - 1))
        .generators()
        .iter()
        .map(|g| g.label.clone())
        .collect();
    let map = total.connecting_homomorphism(&sub)?;
    let kernel_rank = map.kernel_rank();
    Ok(DeltaStar {
        map,
        kernel_rank,
        genus,
    })
}

/// True when the inclusion of the bottom filtered subcomplex is nonzero
/// on homology, decided through the dual criterion: the top-slice
/// connecting homomorphism has nontrivial kernel.
pub fn contact_invariant_nonzero(complex: &BifilteredComplex) -> Result<bool> {
    Ok(delta_star(complex)?.kernel_rank > 0)
}

/// Verdict for the core of `n`-surgery, `n >= 2 * genus`: nonvanishing
/// exactly when the connecting homomorphism of
/// `0 -> {i < 0, j = -g} -> {i <= 0, j = -g} -> {i = 0, j = -g} -> 0`
/// has nontrivial kernel. The value of `n` is not consulted beyond the
/// validity gate.
pub fn core_contact_nonzero(complex: &BifilteredComplex, n: i64) -> Result<Verdict> {
    let genus = require_fibered(complex)?;
    validity_gate(complex, n)?;
    let total = complex.extract(RegionSpec::HorizClosed(-genus));
    let sub: BTreeSet<String> = complex
        .extract(RegionSpec::HorizRay(-genus))
        .generators()
        .iter()
        .map(|g| g.label.clone())
        .collect();
    let map = total.connecting_homomorphism(&sub)?;
    let evidence = KernelEvidence::from_map(&total, &map);
    let status = if evidence.kernel_rank > 0 {
        Status::Nonvanishing
    } else {
        Status::Vanishing
    };
    Ok(Verdict {
        status,
        certificate: Certificate::Kernel(evidence),
    })
}

/// Verdict for `p/q`-surgery on the binding.
///
/// Below `2 * genus` the criteria are silent. At integral slopes the
/// kernel test decides both ways. At non-integral slopes with a
/// nonvanishing integral invariant, the verdict propagates along the
/// Legendrian surgery plan from `floor(p/q)` to `p/q`; with a vanishing
/// integral invariant the implication gives no information.
pub fn slope_verdict(complex: &BifilteredComplex, p: i64, q: i64) -> Result<Verdict> {
    if p <= 0 || q <= 0 {
        return Err(Error::NonPositiveSlope(format!(
            "surgery slope must be positive, got {p}/{q}"
        )));
    }
    if num::integer::gcd(p, q) != 1 {
        return Err(Error::NonCoprime { p, q });
    }
    let genus = require_fibered(complex)?;
    if p < 2 * genus * q {
        return Ok(Verdict {
            status: Status::Unknown,
            certificate: Certificate::Reason("below proven range".into()),
        });
    }
    if q == 1 {
        return core_contact_nonzero(complex, p);
    }
    let n = p.div_euclid(q);
    let delta = delta_star(complex)?;
    if delta.kernel_rank > 0 {
        let total = complex.extract(RegionSpec::Vertical);
        let base = KernelEvidence::from_map(&total, &delta.map);
        let path = surgery_path(n, Slope::new(p, q)?)?;
        Ok(Verdict {
            status: Status::Nonvanishing,
            certificate: Certificate::LegendrianPlan { base, path },
        })
    } else {
        Ok(Verdict {
            status: Status::Unknown,
            certificate: Certificate::Reason(
                "vanishing invariant at the integral slope: the rational-slope criterion is one-directional".into(),
            ),
        })
    }
}
