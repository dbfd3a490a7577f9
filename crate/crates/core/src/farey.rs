//! Exact slope arithmetic on the Farey tessellation.
//!
//! Slopes are reduced fractions `p/q` with `q >= 0`, where `1/0` is the
//! slope at infinity. Two slopes are neighbors when the determinant of
//! their coordinates is `+-1`; the mediant of neighbors is the third
//! vertex of the tessellation triangle between them. `surgery_path`
//! descends the Stern-Brocot bracket from an integer slope to a rational
//! target and records, for each advancing step, the slope of the leaf on
//! which a Legendrian surgery is performed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An exact slope `p/q` in lowest terms, including the infinite slope
/// `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Reduces `p/q` and normalizes the sign into the numerator. The
    /// denominator must be nonzero; use [`Slope::infinity`] for `1/0`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Validation(
                "slope denominator is zero; use the infinite slope 1/0 explicitly".into(),
            ));
        }
        let g = gcd(p, q).max(1);
        let sign = if q < 0 { -1 } else { 1 };
        Ok(Slope {
            p: sign * p / g,
            q: sign * q / g,
        })
    }

    pub fn integer(n: i64) -> Self {
        Slope { p: n, q: 1 }
    }

    pub fn infinity() -> Self {
        Slope { p: 1, q: 0 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // q >= 0 throughout, so cross-multiplication preserves order;
        // 1/0 compares above every finite slope.
        (self.p as i128 * other.q as i128).cmp(&(other.p as i128 * self.q as i128))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Validation(format!("invalid slope component '{t}'")))
        };
        match s.split_once('/') {
            Some((num, den)) => {
                let p = parse_int(num)?;
                let q = parse_int(den)?;
                if q == 0 {
                    if p == 1 {
                        Ok(Slope::infinity())
                    } else {
                        Err(Error::Validation(format!(
                            "slope '{s}' has zero denominator; only 1/0 is allowed"
                        )))
                    }
                } else {
                    Slope::new(p, q)
                }
            }
            None => Ok(Slope::integer(parse_int(s)?)),
        }
    }
}

/// `(p1 + p2) / (q1 + q2)`, reduced. For Farey neighbors the sum is
/// already in lowest terms.
pub fn mediant(s: Slope, t: Slope) -> Slope {
    let p = s.p + t.p;
    let q = s.q + t.q;
    let g = gcd(p, q).max(1);
    Slope { p: p / g, q: q / g }
}

/// True iff there is a tessellation edge between the two slopes.
pub fn is_neighbor(s: Slope, t: Slope) -> bool {
    (s.p * t.q - t.p * s.q).abs() == 1
}

/// A descent through the tessellation from an integer slope to a rational
/// target. `back_slopes` starts at `n/1` and ends at the target;
/// `surgeries` records one leaf slope per advancing step, so
/// `back_slopes[k+1] = mediant(back_slopes[k], surgeries[k])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyPath {
    pub back_slopes: Vec<Slope>,
    pub surgeries: Vec<Slope>,
}

impl FareyPath {
    pub fn target(&self) -> Slope {
        *self.back_slopes.last().expect("path has a start slope")
    }
}

/// Shortest tessellation descent from `n/1` to `target`.
///
/// Maintains the neighbor bracket `(lo, hi)` initialized to `(n/1, 1/0)`;
/// each mediant at or below the target advances `lo` and emits a surgery
/// at the current `hi`, every other mediant tightens `hi`.
pub fn surgery_path(n: i64, target: Slope) -> Result<FareyPath> {
    if n < 1 {
        return Err(Error::NonPositiveSlope(format!(
            "start slope must be a positive integer, got {n}"
        )));
    }
    let start = Slope::integer(n);
    if target.is_infinite() || target <= start {
        return Err(Error::SlopeNotAbove {
            target: target.to_string(),
            from: n,
        });
    }
    let mut lo = start;
    let mut hi = Slope::infinity();
    let mut back_slopes = vec![lo];
    let mut surgeries = Vec::new();
    while lo != target {
        let c = mediant(lo, hi);
        if c <= target {
            surgeries.push(hi);
            back_slopes.push(c);
            lo = c;
        } else {
            hi = c;
        }
    }
    Ok(FareyPath {
        back_slopes,
        surgeries,
    })
}

/// Converts `p/q` surgery into `n`-surgery followed by surgery on a
/// meridian with the returned coefficient `q/(q*n - p)`; the result is
/// negative exactly when the target slope exceeds `n`.
pub fn slam_dunk(target: Slope, n: i64) -> Result<Slope> {
    if n < 1 {
        return Err(Error::NonPositiveSlope(format!(
            "intermediate surgery coefficient must be positive, got {n}"
        )));
    }
    if target.is_infinite() || target.q < 1 {
        return Err(Error::Validation(format!(
            "slam dunk requires a finite slope, got {target}"
        )));
    }
    let den = target.q * n - target.p;
    if den == 0 {
        return Err(Error::Indeterminate {
            p: target.p,
            q: target.q,
            n,
        });
    }
    Slope::new(target.q, den)
}
