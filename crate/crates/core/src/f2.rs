//! Exact linear algebra and homology over the field with two elements.
//!
//! Everything downstream reduces to three computations: ranks of sparse
//! GF(2) matrices, homology of integer-graded complexes whose structure
//! is filtered by the grading, and connecting homomorphisms of the short
//! exact sequence attached to a subcomplex. Arithmetic is exact, the
//! pivot rule is fixed (lowest row index), and homology bases are
//! reported as explicit cycle representatives in the input generator
//! basis so downstream kernel checks can be verified independently.
//!
//! Homology is graded by filtration level: a class is counted in grading
//! `s` when it admits a cycle representative supported on generators of
//! grading at most `s`, and in no lower level. Summed over `s` this is
//! the homology of the total complex.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

fn xor_into(target: &mut BTreeSet<usize>, other: &BTreeSet<usize>) {
    for &x in other {
        if !target.remove(&x) {
            target.insert(x);
        }
    }
}

/// Sparse matrix over GF(2), stored column-major. An entry is either
/// present (1) or absent (0); duplicate positions cannot be represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    columns: Vec<BTreeSet<usize>>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            columns: vec![BTreeSet::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zero(n, n);
        for i in 0..n {
            m.columns[i].insert(i);
        }
        m
    }

    /// Builds a matrix from explicit positions. Out-of-bounds or duplicate
    /// positions are rejected.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut m = F2Matrix::zero(rows, cols);
        for (r, c) in entries {
            if r >= rows || c >= cols {
                return Err(Error::Validation(format!(
                    "matrix entry ({r}, {c}) outside {rows} x {cols}"
                )));
            }
            if !m.columns[c].insert(r) {
                return Err(Error::Validation(format!(
                    "duplicate matrix entry ({r}, {c})"
                )));
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.columns[c].contains(&r)
    }

    /// Flips the entry at `(r, c)`.
    pub fn toggle(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.columns.len());
        if !self.columns[c].insert(r) {
            self.columns[c].remove(&r);
        }
    }

    pub fn column(&self, c: usize) -> &BTreeSet<usize> {
        &self.columns[c]
    }

    /// All positions holding 1, sorted by `(row, col)`.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&r| (r, c)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Matrix-vector product; `v` is the set of column indices with a 1.
    pub fn apply(&self, v: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &j in v {
            xor_into(&mut out, &self.columns[j]);
        }
        out
    }

    /// `self * rhs`.
    pub fn matmul(&self, rhs: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols(), rhs.rows());
        let mut out = F2Matrix::zero(self.rows, rhs.cols());
        for (j, col) in rhs.columns.iter().enumerate() {
            out.columns[j] = self.apply(col);
        }
        out
    }

    /// Rank over GF(2), by column elimination with the lowest set row as
    /// pivot.
    pub fn rank(&self) -> usize {
        let mut pivots: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for col in &self.columns {
            let mut c = col.clone();
            while let Some(&p) = c.first() {
                match pivots.get(&p) {
                    Some(other) => xor_into(&mut c, other),
                    None => {
                        pivots.insert(p, c);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// A basis of the kernel, each vector given as the set of column
    /// indices summing to zero.
    pub fn kernel_basis(&self) -> Vec<BTreeSet<usize>> {
        kernel_of_selected(self, &(0..self.cols()).collect::<Vec<_>>())
    }

    /// Solves `self * x = rhs`, returning the set of column indices of one
    /// solution, or `None` when `rhs` is outside the column span.
    pub fn solve(&self, rhs: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
        let mut pivots: BTreeMap<usize, (BTreeSet<usize>, BTreeSet<usize>)> = BTreeMap::new();
        for (j, col) in self.columns.iter().enumerate() {
            let mut c = col.clone();
            let mut combo = BTreeSet::from([j]);
            while let Some(&p) = c.first() {
                match pivots.get(&p) {
                    Some((pc, pcombo)) => {
                        xor_into(&mut c, pc);
                        xor_into(&mut combo, pcombo);
                    }
                    None => {
                        pivots.insert(p, (c, combo));
                        break;
                    }
                }
            }
        }
        let mut r = rhs.clone();
        let mut combo = BTreeSet::new();
        while let Some(&p) = r.first() {
            let (pc, pcombo) = pivots.get(&p)?;
            xor_into(&mut r, pc);
            xor_into(&mut combo, pcombo);
        }
        Some(combo)
    }
}

/// Kernel of the submatrix formed by the given columns, returned as sets
/// of original column indices, in a deterministic order.
fn kernel_of_selected(m: &F2Matrix, cols: &[usize]) -> Vec<BTreeSet<usize>> {
    let mut pivots: BTreeMap<usize, (BTreeSet<usize>, BTreeSet<usize>)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for &j in cols {
        let mut c = m.columns[j].clone();
        let mut combo = BTreeSet::from([j]);
        loop {
            match c.first().copied() {
                None => {
                    kernel.push(combo);
                    break;
                }
                Some(p) => match pivots.get(&p) {
                    Some((pc, pcombo)) => {
                        xor_into(&mut c, pc);
                        xor_into(&mut combo, pcombo);
                    }
                    None => {
                        pivots.insert(p, (c, combo));
                        break;
                    }
                },
            }
        }
    }
    kernel
}

/// Incremental span with membership testing. Pivot is the lowest set
/// index of the stored reduced vectors.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, BTreeSet<usize>>,
}

impl Echelon {
    fn reduce(&self, v: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut r = v.clone();
        while let Some(&p) = r.first() {
            match self.pivots.get(&p) {
                Some(pc) => xor_into(&mut r, pc),
                None => break,
            }
        }
        r
    }

    fn contains(&self, v: &BTreeSet<usize>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v` if independent of the current span; reports whether the
    /// span grew.
    fn insert(&mut self, v: &BTreeSet<usize>) -> bool {
        let r = self.reduce(v);
        match r.first().copied() {
            None => false,
            Some(p) => {
                self.pivots.insert(p, r);
                true
            }
        }
    }
}

/// One generator of a graded complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedGenerator {
    pub label: String,
    pub grading: i64,
    pub maslov: Option<i64>,
}

/// A finite chain complex over GF(2) with an integer grading per
/// generator. Column `j` of the boundary records the differential of
/// generator `j`.
#[derive(Debug, Clone)]
pub struct GradedF2Complex {
    generators: Vec<GradedGenerator>,
    boundary: F2Matrix,
}

/// Result of the `d^2 = 0` check, with the first violating pair
/// `(source, reached)` when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSquaredReport {
    pub ok: bool,
    pub violation: Option<(String, String)>,
}

/// One homology class: its filtration grading, the common Maslov grading
/// of the representative when defined, and an explicit cycle given by
/// generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyClass {
    pub grading: i64,
    pub maslov: Option<i64>,
    pub cycle: BTreeSet<usize>,
}

/// The connecting homomorphism of `0 -> sub -> total -> quotient -> 0`,
/// as a matrix in the reported homology bases. Rows index `sub_classes`,
/// columns index `quotient_classes`; cycles are index sets into the total
/// complex's generators.
#[derive(Debug, Clone)]
pub struct ConnectingMap {
    pub matrix: F2Matrix,
    pub sub_classes: Vec<HomologyClass>,
    pub quotient_classes: Vec<HomologyClass>,
}

impl ConnectingMap {
    pub fn kernel_rank(&self) -> usize {
        self.quotient_classes.len() - self.matrix.rank()
    }

    /// Kernel basis as explicit cycles in the total complex's generator
    /// indices (combinations of quotient-basis representatives).
    pub fn kernel_witnesses(&self) -> Vec<BTreeSet<usize>> {
        self.matrix
            .kernel_basis()
            .into_iter()
            .map(|combo| {
                let mut cycle = BTreeSet::new();
                for j in combo {
                    xor_into(&mut cycle, &self.quotient_classes[j].cycle);
                }
                cycle
            })
            .collect()
    }
}

impl GradedF2Complex {
    /// Shape and label checks only; homological invariants are verified by
    /// [`GradedF2Complex::validate`] and by every operation that needs them.
    pub fn new(generators: Vec<GradedGenerator>, boundary: F2Matrix) -> Result<Self> {
        if boundary.rows() != generators.len() || boundary.cols() != generators.len() {
            return Err(Error::Validation(format!(
                "boundary is {} x {} for {} generators",
                boundary.rows(),
                boundary.cols(),
                generators.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.label.as_str()) {
                return Err(Error::Validation(format!(
                    "duplicate generator label '{}'",
                    g.label
                )));
            }
        }
        Ok(GradedF2Complex {
            generators,
            boundary,
        })
    }

    pub fn generators(&self) -> &[GradedGenerator] {
        &self.generators
    }

    pub fn boundary(&self) -> &F2Matrix {
        &self.boundary
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.label == label)
    }

    /// True iff the boundary squares to zero; the diagnostic names the
    /// first pair `(x, z)` with an odd number of two-step paths.
    pub fn check_d_squared(&self) -> DSquaredReport {
        let square = self.boundary.matmul(&self.boundary);
        for c in 0..square.cols() {
            if let Some(&r) = square.column(c).first() {
                return DSquaredReport {
                    ok: false,
                    violation: Some((
                        self.generators[c].label.clone(),
                        self.generators[r].label.clone(),
                    )),
                };
            }
        }
        DSquaredReport {
            ok: true,
            violation: None,
        }
    }

    /// Checks `d^2 = 0` and, when Maslov gradings are present, that every
    /// boundary entry drops Maslov by exactly one.
    pub fn validate(&self) -> Result<()> {
        let report = self.check_d_squared();
        if let Some((x, z)) = report.violation {
            return Err(Error::InvalidComplex(format!(
                "d^2 != 0: generator '{x}' reaches '{z}' an odd number of times"
            )));
        }
        let with_maslov = self
            .generators
            .iter()
            .filter(|g| g.maslov.is_some())
            .count();
        if with_maslov != 0 && with_maslov != self.generators.len() {
            return Err(Error::InvalidComplex(
                "either all generators carry a Maslov grading or none".into(),
            ));
        }
        if with_maslov == self.generators.len() {
            for (r, c) in self.boundary.entries() {
                let ms = self.generators[c].maslov.unwrap();
                let mt = self.generators[r].maslov.unwrap();
                if ms - mt != 1 {
                    return Err(Error::InvalidComplex(format!(
                        "boundary entry '{}' -> '{}' changes Maslov by {}",
                        self.generators[c].label,
                        self.generators[r].label,
                        ms - mt
                    )));
                }
            }
        }
        Ok(())
    }

    /// Total homology rank over GF(2).
    pub fn total_homology_rank(&self) -> Result<usize> {
        self.validate()?;
        Ok(self.len() - 2 * self.boundary.rank())
    }

    /// Homology classes with explicit cycle representatives, ordered by
    /// grading. A class appears at the lowest grading `s` admitting a
    /// representative supported on generators of grading at most `s`.
    pub fn homology_basis(&self) -> Result<Vec<HomologyClass>> {
        self.validate()?;
        let mut span = Echelon::default();
        for col in &self.boundary.columns {
            span.insert(col);
        }
        let mut gradings: Vec<i64> = self.generators.iter().map(|g| g.grading).collect();
        gradings.sort_unstable();
        gradings.dedup();
        let mut classes = Vec::new();
        for s in gradings {
            let cols: Vec<usize> = (0..self.len())
                .filter(|&j| self.generators[j].grading <= s)
                .collect();
            for cycle in kernel_of_selected(&self.boundary, &cols) {
                if !span.contains(&cycle) {
                    span.insert(&cycle);
                    classes.push(HomologyClass {
                        grading: s,
                        maslov: self.maslov_of(&cycle),
                        cycle,
                    });
                }
            }
        }
        Ok(classes)
    }

    /// Homology ranks per grading; gradings with rank zero are omitted.
    pub fn homology_ranks(&self) -> Result<BTreeMap<i64, usize>> {
        let mut out = BTreeMap::new();
        for class in self.homology_basis()? {
            *out.entry(class.grading).or_insert(0) += 1;
        }
        Ok(out)
    }

    fn maslov_of(&self, cycle: &BTreeSet<usize>) -> Option<i64> {
        let mut values = cycle.iter().map(|&i| self.generators[i].maslov);
        match values.next() {
            Some(Some(first)) if values.all(|m| m == Some(first)) => Some(first),
            _ => None,
        }
    }

    /// Restriction to a subset of generators (ascending indices); only
    /// boundary entries with both endpoints in the subset survive.
    fn restrict(&self, keep: &[usize]) -> GradedF2Complex {
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut boundary = F2Matrix::zero(keep.len(), keep.len());
        for (p, &j) in keep.iter().enumerate() {
            for &i in self.boundary.column(j) {
                if let Some(&q) = pos.get(&i) {
                    boundary.toggle(q, p);
                }
            }
        }
        GradedF2Complex {
            generators: keep.iter().map(|&i| self.generators[i].clone()).collect(),
            boundary,
        }
    }

    /// The connecting homomorphism `H(quotient) -> H(sub)` of the short
    /// exact sequence determined by a subcomplex spanned by the given
    /// generator labels: a quotient class `[z]` maps to `[d(lift of z)]`,
    /// which is independent of the choices involved.
    pub fn connecting_homomorphism(&self, sub: &BTreeSet<String>) -> Result<ConnectingMap> {
        self.validate()?;
        let mut sub_idx = BTreeSet::new();
        for label in sub {
            match self.index_of(label) {
                Some(i) => {
                    sub_idx.insert(i);
                }
                None => return Err(Error::UnknownGenerator(label.clone())),
            }
        }
        for &j in &sub_idx {
            for &i in self.boundary.column(j) {
                if !sub_idx.contains(&i) {
                    return Err(Error::NotASubcomplex {
                        src: self.generators[j].label.clone(),
                        dst: self.generators[i].label.clone(),
                    });
                }
            }
        }
        let sub_keep: Vec<usize> = sub_idx.iter().copied().collect();
        let quot_keep: Vec<usize> = (0..self.len()).filter(|i| !sub_idx.contains(i)).collect();
        let sub_complex = self.restrict(&sub_keep);
        let quot_complex = self.restrict(&quot_keep);
        let sub_classes_local = sub_complex.homology_basis()?;
        let quot_classes_local = quot_complex.homology_basis()?;

        // Columns 0..k are the sub homology representatives, the rest are
        // sub boundaries; solving against this span expresses a sub cycle
        // in the reported basis, uniquely modulo boundaries.
        let k = sub_classes_local.len();
        let n_sub = sub_keep.len();
        let mut express = F2Matrix::zero(n_sub, k + n_sub);
        for (c, class) in sub_classes_local.iter().enumerate() {
            for &i in &class.cycle {
                express.toggle(i, c);
            }
        }
        for j in 0..n_sub {
            for &i in sub_complex.boundary.column(j) {
                express.toggle(i, k + j);
            }
        }

        let mut matrix = F2Matrix::zero(k, quot_classes_local.len());
        for (c, class) in quot_classes_local.iter().enumerate() {
            let lift: BTreeSet<usize> = class.cycle.iter().map(|&i| quot_keep[i]).collect();
            let image = self.boundary.apply(&lift);
            let mut image_sub = BTreeSet::new();
            for i in image {
                if !sub_idx.contains(&i) {
                    return Err(Error::InvalidComplex(format!(
                        "quotient cycle boundary escapes the subcomplex at '{}'",
                        self.generators[i].label
                    )));
                }
                image_sub.insert(sub_idx.iter().position(|&s| s == i).unwrap());
            }
            let combo = express.solve(&image_sub).ok_or_else(|| {
                Error::InvalidComplex("connecting image is not a cycle of the subcomplex".into())
            })?;
            for j in combo {
                if j < k {
                    matrix.toggle(j, c);
                }
            }
        }

        let to_total = |classes: Vec<HomologyClass>, keep: &[usize]| {
            classes
                .into_iter()
                .map(|cls| HomologyClass {
                    grading: cls.grading,
                    maslov: cls.maslov,
                    cycle: cls.cycle.iter().map(|&i| keep[i]).collect(),
                })
                .collect::<Vec<_>>()
        };
        Ok(ConnectingMap {
            matrix,
            sub_classes: to_total(sub_classes_local, &sub_keep),
            quotient_classes: to_total(quot_classes_local, &quot_keep),
        })
    }

    /// Formats a cycle as its generator labels, sorted by index.
    pub fn cycle_labels(&self, cycle: &BTreeSet<usize>) -> Vec<String> {
        cycle
            .iter()
            .map(|&i| self.generators[i].label.clone())
            .collect()
    }
}
