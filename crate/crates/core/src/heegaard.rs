//! Combinatorial Alexander-grading arithmetic from relative periodic
//! domains, the winding-region distinctness check, and cable order
//! arithmetic.
//!
//! A domain model stores region multiplicities and, for each generator,
//! the four regions meeting at each of its coordinates. The point measure
//! of a generator is the sum over coordinates of the average of the four
//! corner multiplicities; differences of point measures compute relative
//! Alexander gradings. Whether a supplied model is a genuine relative
//! periodic domain in the fiber class cannot be checked here and is a
//! trust boundary of the caller.

use std::collections::BTreeMap;

use num::rational::Ratio;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Regions-with-multiplicities description of a relative periodic domain,
/// with generators given by corner multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicDomainModel {
    regions: Vec<(String, i64)>,
    region_index: BTreeMap<String, usize>,
    generators: Vec<DomainGenerator>,
}

/// One generator: each coordinate names the four regions meeting at that
/// intersection point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainGenerator {
    pub label: String,
    pub corners: Vec<[usize; 4]>,
}

impl PeriodicDomainModel {
    pub fn new(
        regions: Vec<(String, i64)>,
        generators: Vec<(String, Vec<[String; 4]>)>,
    ) -> Result<Self> {
        let mut region_index = BTreeMap::new();
        for (i, (name, _)) in regions.iter().enumerate() {
            if region_index.insert(name.clone(), i).is_some() {
                return Err(Error::Validation(format!("duplicate region '{name}'")));
            }
        }
        let mut resolved = Vec::new();
        let mut seen = BTreeMap::new();
        let mut coordinate_count: Option<usize> = None;
        for (label, corners) in generators {
            if seen.insert(label.clone(), ()).is_some() {
                return Err(Error::Validation(format!(
                    "duplicate generator label '{label}'"
                )));
            }
            match coordinate_count {
                None => coordinate_count = Some(corners.len()),
                Some(k) if k != corners.len() => {
                    return Err(Error::Validation(format!(
                        "generator '{label}' has {} coordinates, expected {k}",
                        corners.len()
                    )))
                }
                _ => {}
            }
            let mut indexed = Vec::new();
            for quad in &corners {
                let mut ids = [0usize; 4];
                for (slot, name) in quad.iter().enumerate() {
                    ids[slot] = *region_index
                        .get(name.as_str())
                        .ok_or_else(|| Error::Validation(format!("unknown region '{name}'")))?;
                }
                indexed.push(ids);
            }
            resolved.push(DomainGenerator {
                label,
                corners: indexed,
            });
        }
        Ok(PeriodicDomainModel {
            regions,
            region_index,
            generators: resolved,
        })
    }

    /// Parses the `domain v1` format. Lines: `domain v1`, then
    /// `region <ident> mult=<int>` and
    /// `generator <ident> corners=<r1,r2,r3,r4>[;<r1,r2,r3,r4>]*`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut regions: Vec<(String, i64)> = Vec::new();
        let mut generators: Vec<(String, Vec<[String; 4]>)> = Vec::new();
        let mut header_seen = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            if !header_seen {
                if line != "domain v1" {
                    return Err(Error::Parse {
                        line: lineno,
                        reason: format!("expected 'domain v1' header, found '{line}'"),
                    });
                }
                header_seen = true;
                continue;
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("region") => {
                    let name = ident(tokens.next(), lineno)?;
                    let mult = keyed_int(tokens.next(), "mult", lineno)?;
                    if tokens.next().is_some() {
                        return Err(trailing(lineno));
                    }
                    regions.push((name, mult));
                }
                Some("generator") => {
                    let name = ident(tokens.next(), lineno)?;
                    let spec = tokens.next().ok_or_else(|| Error::Parse {
                        line: lineno,
                        reason: "missing corners=...".into(),
                    })?;
                    let value = spec.strip_prefix("corners=").ok_or_else(|| Error::Parse {
                        line: lineno,
                        reason: format!("expected corners=..., found '{spec}'"),
                    })?;
                    if tokens.next().is_some() {
                        return Err(trailing(lineno));
                    }
                    let mut corners = Vec::new();
                    for quad in value.split(';') {
                        let parts: Vec<&str> = quad.split(',').collect();
                        if parts.len() != 4 {
                            return Err(Error::Parse {
                                line: lineno,
                                reason: format!("corner '{quad}' must name exactly four regions"),
                            });
                        }
                        corners.push([
                            parts[0].trim().to_string(),
                            parts[1].trim().to_string(),
                            parts[2].trim().to_string(),
                            parts[3].trim().to_string(),
                        ]);
                    }
                    generators.push((name, corners));
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
                reason: "empty document, expected 'domain v1' header".into(),
            });
        }
        PeriodicDomainModel::new(regions, generators)
    }

    pub fn regions(&self) -> &[(String, i64)] {
        &self.regions
    }

    pub fn generators(&self) -> &[DomainGenerator] {
        &self.generators
    }

    fn generator(&self, label: &str) -> Result<&DomainGenerator> {
        self.generators
            .iter()
            .find(|g| g.label == label)
            .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    /// Sum over coordinates of the average of the four corner
    /// multiplicities.
    pub fn point_measure(&self, label: &str) -> Result<Rational> {
        let gen = self.generator(label)?;
        let mut total = Rational::new(0, 1);
        for quad in &gen.corners {
            let sum: i64 = quad.iter().map(|&r| self.regions[r].1).sum();
            total += Rational::new(sum, 4);
        }
        Ok(total)
    }

    /// `point_measure(x) - point_measure(y)`: the relative Alexander
    /// grading when the model represents a domain in the fiber class.
    /// Non-integer values are reported, not rejected.
    pub fn alexander_difference(&self, x: &str, y: &str) -> Result<Rational> {
        Ok(self.point_measure(x)? - self.point_measure(y)?)
    }

    /// Every region multiplicity scaled by `R`, as for the domain of a
    /// cable built from `R` parallel copies of the fiber.
    pub fn scaled_measure(&self, r: i64) -> PeriodicDomainModel {
        let mut out = self.clone();
        for (_, mult) in &mut out.regions {
            *mult *= r;
        }
        out
    }
}

fn ident(token: Option<&str>, line: usize) -> Result<String> {
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

fn keyed_int(token: Option<&str>, key: &str, line: usize) -> Result<i64> {
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

fn trailing(line: usize) -> Error {
    Error::Parse {
        line,
        reason: "unexpected trailing tokens".into(),
    }
}

/// Longitude/meridian winding data near a surgery curve. When the framing
/// pair `(p, b)` is supplied it must satisfy `p*a - q*b = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindingParams {
    pub a: i64,
    pub q: i64,
    pub framing: Option<(i64, i64)>,
}

impl WindingParams {
    pub fn new(a: i64, q: i64, framing: Option<(i64, i64)>) -> Result<Self> {
        if a < 1 || q < 1 {
            return Err(Error::Validation(format!(
                "winding parameters must be positive, got a={a}, q={q}"
            )));
        }
        if let Some((p, b)) = framing {
            if p * a - q * b != -1 {
                return Err(Error::Validation(format!(
                    "framing relation p*a - q*b = -1 fails: {p}*{a} - {q}*{b} = {}",
                    p * a - q * b
                )));
            }
        }
        Ok(WindingParams { a, q, framing })
    }
}

/// Outcome of the winding-region distinctness search: either no collision
/// exists in the open box `0 < r_lambda < a`, `0 < r_mu < q`, or a witness
/// pair with `r_lambda * q = r_mu * a` is returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindingCheck {
    pub distinct: bool,
    pub witness: Option<(i64, i64)>,
}

/// Searches the open box for a pair `(r_lambda, r_mu)` with
/// `r_lambda * q = r_mu * a`. Distinctness holds exactly when `a` and `q`
/// are coprime.
pub fn winding_distinct(a: i64, q: i64) -> WindingCheck {
    assert!(a >= 1 && q >= 1, "winding parameters must be positive");
    for r_lambda in 1..a {
        if (r_lambda * q) % a == 0 {
            let r_mu = r_lambda * q / a;
            if r_mu > 0 && r_mu < q {
                return WindingCheck {
                    distinct: false,
                    witness: Some((r_lambda, r_mu)),
                };
            }
        }
    }
    WindingCheck {
        distinct: true,
        witness: None,
    }
}

/// Order and copy count for the `(P, Pn+1)` cable of a knot of order `p`:
/// the cable has order `p/gcd(P, p)` and its fiber class uses
/// `P/gcd(P, p)` parallel copies of the original fiber.
pub fn cable_arithmetic(p: i64, cable_p: i64) -> (i64, i64) {
    assert!(p >= 1 && cable_p >= 1);
    let g = {
        let (mut a, mut b) = (cable_p, p);
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };
    (p / g, cable_p / g)
}
