//! Shared helpers for integration tests: seeded random complexes and a
//! brute-force homology oracle that enumerates the full chain group.
//!
//! Each test target compiles this module separately and uses a subset.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use openbook_core::cfk::{Arrow, BifilteredComplex, Generator};
use openbook_core::f2::{F2Matrix, GradedF2Complex, GradedGenerator};
use rand::prelude::*;
use rand::rngs::StdRng;

/// Homology ranks per grading by exhaustive enumeration: for each level
/// `s`, the image of the cycles supported at grading <= s inside total
/// homology grows by the reported rank. Independent of the reduction
/// code under test.
pub fn brute_force_ranks(c: &GradedF2Complex) -> BTreeMap<i64, usize> {
    let n = c.len();
    assert!(n <= 16, "oracle is exponential in the generator count");
    let cols: Vec<u32> = (0..n)
        .map(|j| {
            c.boundary()
                .column(j)
                .iter()
                .fold(0u32, |acc, &r| acc | 1 << r)
        })
        .collect();
    let bound = |z: u32| -> u32 {
        (0..n)
            .filter(|&j| z >> j & 1 == 1)
            .fold(0u32, |acc, j| acc ^ cols[j])
    };
    let mut image = HashSet::new();
    for z in 0..1u32 << n {
        image.insert(bound(z));
    }
    let log2 = |count: usize| -> i64 {
        assert!(count.is_power_of_two());
        count.trailing_zeros() as i64
    };
    let mut gradings: Vec<i64> = c.generators().iter().map(|g| g.grading).collect();
    gradings.sort_unstable();
    gradings.dedup();
    let mut out = BTreeMap::new();
    let mut prev = 0i64;
    for &s in &gradings {
        let mask: u32 = (0..n)
            .filter(|&j| c.generators()[j].grading <= s)
            .fold(0, |acc, j| acc | 1 << j);
        let cycles = (0..1u32 << n)
            .filter(|&z| z & !mask == 0 && bound(z) == 0)
            .count();
        let boundaries = image.iter().filter(|&&b| b & !mask == 0).count();
        let dim = log2(cycles) - log2(boundaries);
        if dim > prev {
            out.insert(s, (dim - prev) as usize);
        }
        prev = dim;
    }
    out
}

/// A random graded complex: random gradings, then a shuffled stream of
/// grading-respecting candidate entries, each kept when the boundary
/// still squares to zero.
pub fn random_graded_complex(rng: &mut StdRng, max_n: usize) -> GradedF2Complex {
    let n = rng.gen_range(1..=max_n);
    let gradings: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for j in 0..n {
        for i in 0..n {
            if i != j && gradings[i] <= gradings[j] {
                candidates.push((i, j));
            }
        }
    }
    candidates.shuffle(rng);
    let mut boundary = F2Matrix::zero(n, n);
    for (i, j) in candidates {
        if rng.gen_bool(0.4) {
            boundary.toggle(i, j);
            if !boundary.matmul(&boundary).is_zero() {
                boundary.toggle(i, j);
            }
        }
    }
    let generators = (0..n)
        .map(|k| GradedGenerator {
            label: format!("e{k}"),
            grading: gradings[k],
            maslov: None,
        })
        .collect();
    GradedF2Complex::new(generators, boundary).unwrap()
}

/// A random valid bifiltered complex, built by greedily accepting random
/// arrows that keep every constructor invariant.
pub fn random_bifiltered(rng: &mut StdRng, max_n: usize) -> BifilteredComplex {
    let n = rng.gen_range(1..=max_n);
    let gens: Vec<Generator> = (0..n)
        .map(|k| Generator {
            label: format!("x{k}"),
            alexander: rng.gen_range(-3..=3),
            maslov: None,
        })
        .collect();
    let mut candidates: Vec<(usize, usize, u64)> = Vec::new();
    for s in 0..n {
        for d in 0..n {
            if s == d {
                continue;
            }
            for h in 0..=3i64 {
                let v = gens[s].alexander - gens[d].alexander + h;
                if (0..=4).contains(&v) {
                    candidates.push((s, d, h as u64));
                }
            }
        }
    }
    candidates.shuffle(rng);
    let mut arrows: Vec<Arrow> = Vec::new();
    for (s, d, h) in candidates {
        if !rng.gen_bool(0.3) {
            continue;
        }
        let mut trial = arrows.clone();
        trial.push(Arrow {
            src: gens[s].label.clone(),
            dst: gens[d].label.clone(),
            h,
        });
        if BifilteredComplex::new(gens.clone(), trial.clone()).is_ok() {
            arrows = trial;
        }
    }
    BifilteredComplex::new(gens, arrows).unwrap()
}
