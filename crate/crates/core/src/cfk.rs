//! Bifiltered knot complexes: modeling, parsing, the staircase corpus,
//! and stratum extraction.
//!
//! A [`BifilteredComplex`] is a finite presentation of a knot's full
//! Floer complex over GF(2)[U], stored on the `i = 0` slice: generators
//! carry an Alexander grading and arrows carry a horizontal drop `h`
//! (the exponent of the `U`-decoration). The translate of a generator
//! `x` to column `i` sits at filtration point `(i, A(x) + i)`; an arrow
//! `x -> y` with drop `h` connects `(x, i)` to `(y, i - h)`. Regions in
//! the `(i, j)`-plane are materialized by [`BifilteredComplex::extract`],
//! which keeps an arrow exactly when both endpoints lie in the region.
//!
//! # File format `cfk v1`
//!
//! UTF-8, line oriented; `#` starts a comment, blank lines are ignored.
//!
//! ```text
//! cfk v1
//! generator <ident> A=<int> [M=<int>]
//! arrow <src> <dst> h=<uint>
//! ```
//!
//! Identifiers match `[A-Za-z0-9_]+`. Either all generators carry `M` or
//! none. Duplicate generator idents or duplicate arrow triples are
//! errors; a repeated arrow line never cancels silently.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::f2::{F2Matrix, GradedF2Complex, GradedGenerator};

/// One generator of a bifiltered complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub alexander: i64,
    pub maslov: Option<i64>,
}

/// One arrow of the differential; `h` is the horizontal drop. The
/// vertical drop `A(src) - A(dst) + h` must be nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub src: String,
    pub dst: String,
    pub h: u64,
}

/// Handedness of a staircase complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hand {
    Right,
    Left,
}

impl fmt::Display for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hand::Right => write!(f, "right"),
            Hand::Left => write!(f, "left"),
        }
    }
}

/// A region of the `(i, j)`-plane used for stratum extraction. Every
/// region admits at most one translate per generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionSpec {
    /// `i = 0`: the vertical complex, computing the ambient homology.
    Vertical,
    /// `i = 0, j <= s`: the filtration subcomplex `F(s)`.
    FiltSub(i64),
    /// `i = 0, j = s`: one associated-graded slice.
    HfkSlice(i64),
    /// `i < 0, j = s`: the open horizontal ray.
    HorizRay(i64),
    /// `i <= 0, j = s`: the closed horizontal complex.
    HorizClosed(i64),
    /// `max(i, j - m) = 0`: the hook complex computing the homology of a
    /// large surgery in one Spin^c slot, graded by its two-step
    /// filtration level (0 on the sub part, 1 on the quotient part).
    Hook(i64),
    /// `i < 0, j = m`: the sub part of the hook.
    HookSub(i64),
    /// `i = 0, j <= m`: the quotient part of the hook.
    HookQuot(i64),
}

/// Finite bifiltered complex with validated invariants: unique labels,
/// nonnegative drops, even two-step path counts (the `U`-bookkeeping form
/// of `d^2 = 0`), and Maslov steps of exactly one when gradings are
/// present.
#[derive(Debug, Clone)]
pub struct BifilteredComplex {
    generators: Vec<Generator>,
    arrows: Vec<Arrow>,
    index: BTreeMap<String, usize>,
}

impl BifilteredComplex {
    pub fn new(generators: Vec<Generator>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.label.clone(), i).is_some() {
                return Err(Error::Validation(format!(
                    "duplicate generator label '{}'",
                    g.label
                )));
            }
        }
        let with_maslov = generators.iter().filter(|g| g.maslov.is_some()).count();
        if with_maslov != 0 && with_maslov != generators.len() {
            return Err(Error::Validation(
                "either all generators carry M or none".into(),
            ));
        }
        let mut seen_arrows = BTreeSet::new();
        for a in &arrows {
            let src = *index
                .get(&a.src)
                .ok_or_else(|| Error::Validation(format!("arrow source '{}' unknown", a.src)))?;
            let dst = *index
                .get(&a.dst)
                .ok_or_else(|| Error::Validation(format!("arrow target '{}' unknown", a.dst)))?;
            if !seen_arrows.insert((src, dst, a.h)) {
                return Err(Error::Validation(format!(
                    "duplicate arrow {} -> {} h={}",
                    a.src, a.dst, a.h
                )));
            }
            let v = generators[src].alexander - generators[dst].alexander + a.h as i64;
            if v < 0 {
                return Err(Error::Validation(format!(
                    "arrow {} -> {} h={} has negative vertical drop {v}",
                    a.src, a.dst, a.h
                )));
            }
            if let (Some(ms), Some(mt)) = (generators[src].maslov, generators[dst].maslov) {
                if ms - mt != 1 {
                    return Err(Error::Validation(format!(
                        "arrow {} -> {} changes M by {}, expected 1",
                        a.src,
                        a.dst,
                        ms - mt
                    )));
                }
            }
        }
        let complex = BifilteredComplex {
            generators,
            arrows,
            index,
        };
        complex.check_u_squared()?;
        Ok(complex)
    }

    /// `d^2 = 0` with `U`-bookkeeping: for every ordered generator pair
    /// `(x, z)` and every total drop `H`, the number of two-arrow paths
    /// `x -> y -> z` with `h1 + h2 = H` must be even.
    fn check_u_squared(&self) -> Result<()> {
        let n = self.generators.len();
        let mut outgoing: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        for a in &self.arrows {
            outgoing[self.index[&a.src]].push((self.index[&a.dst], a.h));
        }
        for x in 0..n {
            let mut counts: BTreeMap<(usize, u64), usize> = BTreeMap::new();
            for &(y, h1) in &outgoing[x] {
                for &(z, h2) in &outgoing[y] {
                    *counts.entry((z, h1 + h2)).or_insert(0) += 1;
                }
            }
            for ((z, h), count) in counts {
                if count % 2 == 1 {
                    return Err(Error::Validation(format!(
                        "d^2 != 0: {} two-step paths from '{}' to '{}' with total drop {h}",
                        count, self.generators[x].label, self.generators[z].label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// The staircase complex of the `(2, 2k+1)` torus knot, in the chosen
    /// handedness. Generators are `g<a>` (or `gm<|a|>` for negative `a`)
    /// with Alexander grading `a` running from `k` down to `-k`.
    ///
    /// Right: `d(g_a) = g_{a-1} + U g_{a+1}` for `a = k-1, k-3, ...,
    /// -(k-1)`. Left: `d(g_a) = g_{a-1} + U g_{a+1}` for `a = k, k-2,
    /// ..., -k`, with the terms leaving the grading range omitted. Maslov
    /// gradings put the top generator at 0 and drop by one along every
    /// arrow.
    pub fn staircase(k: u32, hand: Hand) -> Self {
        assert!(k >= 1, "staircase needs k >= 1");
        let k = k as i64;
        let label = |a: i64| {
            if a < 0 {
                format!("gm{}", -a)
            } else {
                format!("g{a}")
            }
        };
        let generators: Vec<Generator> = (-k..=k)
            .rev()
            .map(|a| Generator {
                label: label(a),
                alexander: a,
                maslov: Some(match hand {
                    Hand::Right => (k - a).rem_euclid(2),
                    Hand::Left => -(k - a).rem_euclid(2),
                }),
            })
            .collect();
        let mut arrows = Vec::new();
        let sources: Vec<i64> = match hand {
            Hand::Right => (0..)
                .map(|t| k - 1 - 2 * t)
                .take_while(|&a| a >= -(k - 1))
                .collect(),
            Hand::Left => (0..).map(|t| k - 2 * t).take_while(|&a| a >= -k).collect(),
        };
        for a in sources {
            if a > -k {
                arrows.push(Arrow {
                    src: label(a),
                    dst: label(a - 1),
                    h: 0,
                });
            }
            if a < k {
                arrows.push(Arrow {
                    src: label(a),
                    dst: label(a + 1),
                    h: 1,
                });
            }
        }
        BifilteredComplex::new(generators, arrows).expect("staircases are valid by construction")
    }

    /// Parses a `cfk v1` document; invalid input is rejected, never
    /// repaired.
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators: Vec<Generator> = Vec::new();
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut labels = BTreeSet::new();
        let mut triples = BTreeSet::new();
        let mut header_seen = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            if !header_seen {
                if line != "cfk v1" {
                    return Err(Error::Parse {
                        line: lineno,
                        reason: format!("expected 'cfk v1' header, found '{line}'"),
                    });
                }
                header_seen = true;
                continue;
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("generator") => {
                    let label = parse_ident(tokens.next(), lineno)?;
                    if !labels.insert(label.clone()) {
                        return Err(Error::Parse {
                            line: lineno,
                            reason: format!("duplicate generator '{label}'"),
                        });
                    }
                    let alexander = parse_keyed(tokens.next(), "A", lineno)?;
                    let maslov = match tokens.next() {
                        Some(t) => Some(parse_keyed(Some(t), "M", lineno)?),
                        None => None,
                    };
                    if tokens.next().is_some() {
                        return Err(Error::Parse {
                            line: lineno,
                            reason: "unexpected trailing tokens".into(),
                        });
                    }
                    generators.push(Generator {
                        label,
                        alexander,
                        maslov,
                    });
                }
                Some("arrow") => {
                    let src = parse_ident(tokens.next(), lineno)?;
                    let dst = parse_ident(tokens.next(), lineno)?;
                    let h = parse_keyed(tokens.next(), "h", lineno)?;
                    if h < 0 {
                        return Err(Error::Parse {
                            line: lineno,
                            reason: format!("h must be nonnegative, found {h}"),
                        });
                    }
                    if tokens.next().is_some() {
                        return Err(Error::Parse {
                            line: lineno,
                            reason: "unexpected trailing tokens".into(),
                        });
                    }
                    if !triples.insert((src.clone(), dst.clone(), h)) {
                        return Err(Error::Parse {
                            line: lineno,
                            reason: format!("duplicate arrow {src} {dst} h={h}"),
                        });
                    }
                    arrows.push(Arrow {
                        src,
                        dst,
                        h: h as u64,
                    });
                }
                Some(other) => {
                    return Err(Error::Parse {
                        line: lineno,
                        reason: format!("unknown directive '{other}'"),
                    })
                }
                None => unreachable!(),
            }
        }
        if !header_seen {
            return Err(Error::Parse {
                line: 1,
                reason: "empty document, expected 'cfk v1' header".into(),
            });
        }
        BifilteredComplex::new(generators, arrows)
    }

    /// Serializes to the `cfk v1` format; `parse` round-trips it.
    pub fn to_cfk_v1(&self) -> String {
        let mut out = String::from("cfk v1\n");
        for g in &self.generators {
            out.push_str(&format!("generator {} A={}", g.label, g.alexander));
            if let Some(m) = g.maslov {
                out.push_str(&format!(" M={m}"));
            }
            out.push('\n');
        }
        for a in &self.arrows {
            out.push_str(&format!("arrow {} {} h={}\n", a.src, a.dst, a.h));
        }
        out
    }

    /// The `i`-coordinate of the unique translate of a generator with the
    /// given Alexander grading inside the region, when one exists.
    fn region_translate(region: RegionSpec, a: i64) -> Option<i64> {
        match region {
            RegionSpec::Vertical => Some(0),
            RegionSpec::FiltSub(s) => (a <= s).then_some(0),
            RegionSpec::HfkSlice(s) => (a == s).then_some(0),
            RegionSpec::HorizRay(s) => {
                let i = s - a;
                (i < 0).then_some(i)
            }
            RegionSpec::HorizClosed(s) => {
                let i = s - a;
                (i <= 0).then_some(i)
            }
            RegionSpec::Hook(m) => Some(if a <= m { 0 } else { m - a }),
            RegionSpec::HookSub(m) => (a > m).then_some(m - a),
            RegionSpec::HookQuot(m) => (a <= m).then_some(0),
        }
    }

    fn region_grading(region: RegionSpec, a: i64, i: i64) -> i64 {
        match region {
            RegionSpec::Hook(m) => {
                if a <= m {
                    1
                } else {
                    0
                }
            }
            RegionSpec::HookSub(_) => 0,
            RegionSpec::HookQuot(_) => 1,
            _ => a + i,
        }
    }

    /// Label of the translate `(x, i)`; the `i = 0` translate keeps the
    /// original label.
    pub fn translate_label(label: &str, i: i64) -> String {
        if i == 0 {
            label.to_string()
        } else {
            format!("{label}@{i}")
        }
    }

    /// Materializes the subquotient complex carried by a region. The
    /// grading of a translate `(x, i)` is its `j`-coordinate `A(x) + i`,
    /// except on the hook family where it is the two-step filtration
    /// level. An arrow is retained exactly when both endpoint translates
    /// lie in the region; each region is a difference of order ideals in
    /// the `(i, j)` order, so the result is a valid complex.
    pub fn extract(&self, region: RegionSpec) -> GradedF2Complex {
        let mut members: Vec<(usize, i64)> = Vec::new();
        let mut slot: BTreeMap<usize, (usize, i64)> = BTreeMap::new();
        for (g_idx, g) in self.generators.iter().enumerate() {
            if let Some(i) = Self::region_translate(region, g.alexander) {
                slot.insert(g_idx, (members.len(), i));
                members.push((g_idx, i));
            }
        }
        let generators: Vec<GradedGenerator> = members
            .iter()
            .map(|&(g_idx, i)| {
                let g = &self.generators[g_idx];
                GradedGenerator {
                    label: Self::translate_label(&g.label, i),
                    grading: Self::region_grading(region, g.alexander, i),
                    maslov: g.maslov,
                }
            })
            .collect();
        let mut boundary = F2Matrix::zero(members.len(), members.len());
        for a in &self.arrows {
            let src = self.index[&a.src];
            let dst = self.index[&a.dst];
            if let (Some(&(src_pos, src_i)), Some(&(dst_pos, dst_i))) =
                (slot.get(&src), slot.get(&dst))
            {
                if src_i - a.h as i64 == dst_i {
                    boundary.toggle(dst_pos, src_pos);
                }
            }
        }
        GradedF2Complex::new(generators, boundary).expect("extracted labels are unique")
    }

    pub fn alexander_range(&self) -> Option<(i64, i64)> {
        let min = self.generators.iter().map(|g| g.alexander).min()?;
        let max = self.generators.iter().map(|g| g.alexander).max()?;
        Some((min, max))
    }

    /// Ranks of the associated-graded homology, slice by slice; slices of
    /// rank zero are omitted.
    pub fn hfk_ranks(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        if let Some((lo, hi)) = self.alexander_range() {
            for s in lo..=hi {
                let rank = self
                    .extract(RegionSpec::HfkSlice(s))
                    .total_homology_rank()
                    .expect("slices of a valid complex are valid");
                if rank > 0 {
                    out.insert(s, rank);
                }
            }
        }
        out
    }

    /// The top Alexander grading with nonzero slice homology.
    pub fn genus(&self) -> Result<i64> {
        self.hfk_ranks()
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::EmptyHomology)
    }

    /// True when the top nonzero slice has rank one, the homological
    /// fingerprint of a fibered binding.
    pub fn is_fibered_like(&self) -> Result<bool> {
        let ranks = self.hfk_ranks();
        match ranks.iter().next_back() {
            Some((_, &rank)) => Ok(rank == 1),
            None => Err(Error::EmptyHomology),
        }
    }

    /// The horizontal slice `{j = 0, i = s}`: translates `(x, s)` with
    /// `A(x) = -s`, keeping arrows with both endpoints in the slice.
    fn horizontal_slice(&self, s: i64) -> GradedF2Complex {
        let mut members: Vec<usize> = Vec::new();
        let mut slot: BTreeMap<usize, usize> = BTreeMap::new();
        for (g_idx, g) in self.generators.iter().enumerate() {
            if g.alexander == -s {
                slot.insert(g_idx, members.len());
                members.push(g_idx);
            }
        }
        let generators: Vec<GradedGenerator> = members
            .iter()
            .map(|&g_idx| {
                let g = &self.generators[g_idx];
                GradedGenerator {
                    label: Self::translate_label(&g.label, s),
                    grading: 0,
                    maslov: g.maslov,
                }
            })
            .collect();
        let mut boundary = F2Matrix::zero(members.len(), members.len());
        for a in &self.arrows {
            if a.h != 0 {
                continue;
            }
            if let (Some(&sp), Some(&dp)) =
                (slot.get(&self.index[&a.src]), slot.get(&self.index[&a.dst]))
            {
                boundary.toggle(dp, sp);
            }
        }
        GradedF2Complex::new(generators, boundary).expect("slice labels are unique")
    }

    /// Compares vertical and horizontal slice homology ranks; equality
    /// for all parameters is the rank-level trace of the flip symmetry
    /// between the vertical and horizontal complexes.
    pub fn check_flip_symmetry(&self) -> bool {
        let Some((lo, hi)) = self.alexander_range() else {
            return true;
        };
        let span = lo.abs().max(hi.abs());
        for s in -span..=span {
            let vertical = self
                .extract(RegionSpec::HfkSlice(s))
                .total_homology_rank()
                .expect("slices of a valid complex are valid");
            let horizontal = self
                .horizontal_slice(s)
                .total_homology_rank()
                .expect("slices of a valid complex are valid");
            if vertical != horizontal {
                return false;
            }
        }
        true
    }
}

fn parse_ident(token: Option<&str>, line: usize) -> Result<String> {
    let t = token.ok_or_else(|| Error::Parse {
        line,
        reason: "missing identifier".into(),
    })?;
    if t.is_empty() || !t.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::Parse {
            line,
            reason: format!("invalid identifier '{t}'"),
        });
    }
    Ok(t.to_string())
}

fn parse_keyed(token: Option<&str>, key: &str, line: usize) -> Result<i64> {
    let t = token.ok_or_else(|| Error::Parse {
        line,
        reason: format!("missing {key}=<int>"),
    })?;
    let value = t.strip_prefix(key).and_then(|s| s.strip_prefix('='));
    match value.and_then(|v| v.parse::<i64>().ok()) {
        Some(v) => Ok(v),
        None => Err(Error::Parse {
            line,
            reason: format!("expected {key}=<int>, found '{t}'"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrows_of(c: &BifilteredComplex) -> Vec<(String, String, u64)> {
        c.arrows()
            .iter()
            .map(|a| (a.src.clone(), a.dst.clone(), a.h))
            .collect()
    }

    #[test]
    fn parse_single_generator() {
        let c = BifilteredComplex::parse("cfk v1\ngenerator a A=0\n").unwrap();
        assert_eq!(c.generators().len(), 1);
        assert_eq!(c.generators()[0].alexander, 0);
    }

    #[test]
    fn parse_right_trefoil_document() {
        let text = "\
cfk v1
# right-handed trefoil staircase
generator g1 A=1
generator g0 A=0
generator gm1 A=-1
arrow g0 gm1 h=0
arrow g0 g1 h=1
";
        let c = BifilteredComplex::parse(text).unwrap();
        assert_eq!(c.generators().len(), 3);
        assert_eq!(c.arrows().len(), 2);
    }

    #[test]
    fn parse_rejects_negative_vertical_drop() {
        let text = "cfk v1\ngenerator a A=0\ngenerator b A=2\narrow a b h=1\n";
        let err = BifilteredComplex::parse(text).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn parse_rejects_duplicate_arrow() {
        let text = "cfk v1\ngenerator a A=1\ngenerator b A=0\narrow a b h=0\narrow a b h=0\n";
        assert!(matches!(
            BifilteredComplex::parse(text),
            Err(Error::Parse { line: 5, .. })
        ));
    }

    #[test]
    fn parse_rejects_mixed_maslov() {
        let text = "cfk v1\ngenerator a A=1 M=0\ngenerator b A=0\n";
        assert!(BifilteredComplex::parse(text).is_err());
    }

    #[test]
    fn round_trip_through_format() {
        let c = BifilteredComplex::staircase(3, Hand::Left);
        let reparsed = BifilteredComplex::parse(&c.to_cfk_v1()).unwrap();
        assert_eq!(c.generators(), reparsed.generators());
        assert_eq!(arrows_of(&c), arrows_of(&reparsed));
    }

    #[test]
    fn staircase_one_right_shape() {
        let c = BifilteredComplex::staircase(1, Hand::Right);
        assert_eq!(
            arrows_of(&c),
            vec![
                ("g0".into(), "gm1".into(), 0),
                ("g0".into(), "g1".into(), 1)
            ]
        );
    }

    #[test]
    fn staircase_two_right_shape() {
        let c = BifilteredComplex::staircase(2, Hand::Right);
        assert_eq!(
            arrows_of(&c),
            vec![
                ("g1".into(), "g0".into(), 0),
                ("g1".into(), "g2".into(), 1),
                ("gm1".into(), "gm2".into(), 0),
                ("gm1".into(), "g0".into(), 1),
            ]
        );
    }

    #[test]
    fn staircase_two_left_shape() {
        let c = BifilteredComplex::staircase(2, Hand::Left);
        assert_eq!(
            arrows_of(&c),
            vec![
                ("g2".into(), "g1".into(), 0),
                ("g0".into(), "gm1".into(), 0),
                ("g0".into(), "g1".into(), 1),
                ("gm2".into(), "gm1".into(), 1),
            ]
        );
    }

    #[test]
    fn top_slice_of_staircase_is_free() {
        let c = BifilteredComplex::staircase(1, Hand::Right);
        let slice = c.extract(RegionSpec::HfkSlice(1));
        assert_eq!(slice.len(), 1);
        assert!(slice.boundary().is_zero());
    }

    #[test]
    fn hook_sub_slices_of_left_two_staircase() {
        let c = BifilteredComplex::staircase(2, Hand::Left);
        let s1 = c.extract(RegionSpec::HookSub(1));
        assert_eq!(s1.len(), 1);
        assert_eq!(s1.generators()[0].label, "g2@-1");
        assert_eq!(s1.total_homology_rank().unwrap(), 1);
        let s2 = c.extract(RegionSpec::HookSub(2));
        assert!(s2.is_empty());
        assert_eq!(s2.total_homology_rank().unwrap(), 0);
    }

    #[test]
    fn hfk_ranks_of_staircases() {
        let one = BifilteredComplex::staircase(1, Hand::Right);
        assert_eq!(one.hfk_ranks(), BTreeMap::from([(1, 1), (0, 1), (-1, 1)]));
        let two = BifilteredComplex::staircase(2, Hand::Right);
        assert_eq!(
            two.hfk_ranks(),
            BTreeMap::from([(2, 1), (1, 1), (0, 1), (-1, 1), (-2, 1)])
        );
        let single = BifilteredComplex::parse("cfk v1\ngenerator a A=0\n").unwrap();
        assert_eq!(single.hfk_ranks(), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn genus_and_fiberedness() {
        let two = BifilteredComplex::staircase(2, Hand::Right);
        assert_eq!(two.genus().unwrap(), 2);
        assert!(two.is_fibered_like().unwrap());
        let one = BifilteredComplex::staircase(1, Hand::Left);
        assert_eq!(one.genus().unwrap(), 1);
        assert!(one.is_fibered_like().unwrap());

        let doubled = BifilteredComplex::new(
            vec![
                Generator {
                    label: "a".into(),
                    alexander: 3,
                    maslov: None,
                },
                Generator {
                    label: "b".into(),
                    alexander: 3,
                    maslov: None,
                },
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(doubled.genus().unwrap(), 3);
        assert!(!doubled.is_fibered_like().unwrap());
    }

    #[test]
    fn genus_of_fully_acyclic_complex_is_an_error() {
        let c = BifilteredComplex::new(
            vec![
                Generator {
                    label: "a".into(),
                    alexander: 0,
                    maslov: None,
                },
                Generator {
                    label: "b".into(),
                    alexander: 0,
                    maslov: None,
                },
            ],
            vec![Arrow {
                src: "a".into(),
                dst: "b".into(),
                h: 0,
            }],
        )
        .unwrap();
        assert!(matches!(c.genus(), Err(Error::EmptyHomology)));
    }

    #[test]
    fn flip_symmetry_on_corpus_and_counterexample() {
        for k in 1..=5 {
            assert!(BifilteredComplex::staircase(k, Hand::Right).check_flip_symmetry());
            assert!(BifilteredComplex::staircase(k, Hand::Left).check_flip_symmetry());
        }
        let single = BifilteredComplex::parse("cfk v1\ngenerator a A=0\n").unwrap();
        assert!(single.check_flip_symmetry());
        let skewed =
            BifilteredComplex::parse("cfk v1\ngenerator a A=2\ngenerator b A=0\n").unwrap();
        assert!(!skewed.check_flip_symmetry());
    }

    #[test]
    fn filtration_sub_at_genus_is_whole_vertical_complex() {
        let c = BifilteredComplex::staircase(3, Hand::Right);
        let g = c.genus().unwrap();
        let all = c.extract(RegionSpec::Vertical);
        let sub = c.extract(RegionSpec::FiltSub(g));
        assert_eq!(all.generators(), sub.generators());
        assert_eq!(all.boundary(), sub.boundary());
    }

    #[test]
    fn u_squared_bookkeeping_rejects_odd_paths() {
        // a -> b -> c is a single two-step path with total drop 0.
        let gens = ["a", "b", "c"]
            .iter()
            .enumerate()
            .map(|(i, l)| Generator {
                label: l.to_string(),
                alexander: 2 - i as i64,
                maslov: None,
            })
            .collect();
        let arrows = vec![
            Arrow {
                src: "a".into(),
                dst: "b".into(),
                h: 0,
            },
            Arrow {
                src: "b".into(),
                dst: "c".into(),
                h: 0,
            },
        ];
        assert!(matches!(
            BifilteredComplex::new(gens, arrows),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn extracted_regions_are_valid_complexes() {
        for k in 1..=4 {
            for hand in [Hand::Right, Hand::Left] {
                let c = BifilteredComplex::staircase(k, hand);
                for m in -4..=4 {
                    for region in [
                        RegionSpec::Vertical,
                        RegionSpec::FiltSub(m),
                        RegionSpec::HfkSlice(m),
                        RegionSpec::HorizRay(m),
                        RegionSpec::HorizClosed(m),
                        RegionSpec::Hook(m),
                        RegionSpec::HookSub(m),
                        RegionSpec::HookQuot(m),
                    ] {
                        c.extract(region).validate().unwrap();
                    }
                }
            }
        }
    }
}
