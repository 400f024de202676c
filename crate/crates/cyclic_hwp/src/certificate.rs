//! Certificates: base cycles plus optional maps and verification summaries, in JSON or a
//! line-oriented text form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::completion::BaseCycleSet;
use crate::error::{Error, Result};
use crate::group::{LiftedCycle, Vertex};
use crate::params::Params;
use crate::signmap::SignMap;
use crate::verify::CoverageReport;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertParams {
    pub ell: u32,
    pub n: u32,
    #[serde(rename = "M")]
    pub long_len: u32,
    pub v: u32,
    pub r: u32,
    pub r_prime: u32,
}

impl From<&Params> for CertParams {
    fn from(p: &Params) -> Self {
        CertParams {
            ell: p.ell,
            n: p.n,
            long_len: p.long_len,
            v: p.order,
            r: p.short_factors,
            r_prime: p.long_factors,
        }
    }
}

/// Sign maps as `{x: value}` over `[1, ell*n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Maps {
    pub f: BTreeMap<i64, i8>,
    pub phi: BTreeMap<i64, i8>,
    #[serde(rename = "F")]
    pub big_f: BTreeMap<i64, i8>,
    #[serde(rename = "G")]
    pub big_g: BTreeMap<i64, i8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportSummary {
    pub ok: bool,
    pub missing: usize,
    pub duplicated: usize,
    pub transversality_failures: usize,
}

impl From<&CoverageReport> for ReportSummary {
    fn from(r: &CoverageReport) -> Self {
        ReportSummary {
            ok: r.ok,
            missing: r.missing.len(),
            duplicated: r.duplicated.len(),
            transversality_failures: r.transversality_failures.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verification {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<ReportSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full: Option<ReportSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub schema_version: String,
    pub params: CertParams,
    pub short_base_cycles: Vec<Vec<Vertex>>,
    pub long_base_cycles: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maps: Option<Maps>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

fn canonical_list(cycles: &[LiftedCycle]) -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = cycles.iter().map(|c| c.canonical().0).collect();
    out.sort();
    out
}

impl Certificate {
    /// Cycles are stored in canonical rotation and sorted, so equal sets give equal files.
    pub fn from_base(base: &BaseCycleSet, with_maps: bool) -> Self {
        let maps = base
            .provenance
            .as_ref()
            .filter(|_| with_maps)
            .map(|pr| Maps {
                f: pr.f.to_table(),
                phi: pr.phi.to_table(),
                big_f: pr.big_f.to_table(),
                big_g: pr.big_g.to_table(),
            });
        Certificate {
            schema_version: SCHEMA_VERSION.to_string(),
            params: CertParams::from(&base.params),
            short_base_cycles: canonical_list(&base.shorts),
            long_base_cycles: canonical_list(&base.longs),
            maps,
            verification: None,
        }
    }

    /// Validated parameters; rejects versions, inconsistent constants and out-of-range residues.
    pub fn params(&self) -> Result<Params> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema(format!(
                "schema version {:?}, expected {SCHEMA_VERSION:?}",
                self.schema_version
            )));
        }
        let p = Params::new(self.params.ell, self.params.n)
            .map_err(|e| Error::Schema(format!("parameters rejected: {e}")))?;
        if CertParams::from(&p) != self.params {
            return Err(Error::Schema(
                "derived constants do not match ell and n".into(),
            ));
        }
        for v in self
            .short_base_cycles
            .iter()
            .chain(&self.long_base_cycles)
            .flatten()
        {
            if !v.in_range(&p) {
                return Err(Error::Schema(format!(
                    "vertex {v} is not a canonical residue pair"
                )));
            }
        }
        Ok(p)
    }

    pub fn to_base(&self) -> Result<BaseCycleSet> {
        let params = self.params()?;
        if let Some(m) = &self.maps {
            for table in [&m.f, &m.phi, &m.big_f, &m.big_g] {
                SignMap::from_table(&params, table).map_err(|e| match e {
                    Error::Schema(s) => Error::Schema(s),
                    other => Error::Schema(other.to_string()),
                })?;
            }
        }
        let lift = |l: &Vec<Vec<Vertex>>| l.iter().map(|c| LiftedCycle(c.clone())).collect();
        Ok(BaseCycleSet {
            params,
            shorts: lift(&self.short_base_cycles),
            longs: lift(&self.long_base_cycles),
            provenance: None,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate is always serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cert: Certificate = serde_json::from_str(text).map_err(|e| {
            if e.is_data() {
                Error::Schema(e.to_string())
            } else {
                Error::Parse {
                    line: e.line(),
                    column: e.column(),
                    message: e.to_string(),
                }
            }
        })?;
        cert.params()?;
        Ok(cert)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let p = &self.params;
        let _ = writeln!(s, "hwp-certificate {}", self.schema_version);
        let _ = writeln!(
            s,
            "params ell={} n={} M={} v={} r={} r_prime={}",
            p.ell, p.n, p.long_len, p.v, p.r, p.r_prime
        );
        for (tag, list) in [
            ("short", &self.short_base_cycles),
            ("long", &self.long_base_cycles),
        ] {
            for c in list {
                s.push_str(tag);
                for v in c {
                    let _ = write!(s, " {},{}", v.0, v.1);
                }
                s.push('\n');
            }
        }
        if let Some(m) = &self.maps {
            for (tag, table) in [
                ("f", &m.f),
                ("phi", &m.phi),
                ("F", &m.big_f),
                ("G", &m.big_g),
            ] {
                let _ = write!(s, "map {tag}");
                for (x, v) in table {
                    let _ = write!(s, " {x}:{v}");
                }
                s.push('\n');
            }
        }
        if let Some(ver) = &self.verification {
            for (tag, r) in [("base", &ver.base), ("full", &ver.full)] {
                if let Some(r) = r {
                    let _ = writeln!(
                        s,
                        "verification {tag} ok={} missing={} duplicated={} faults={}",
                        r.ok, r.missing, r.duplicated, r.transversality_failures
                    );
                }
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, head) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
        let version = head
            .strip_prefix("hwp-certificate ")
            .ok_or_else(|| parse_err(1, 1, "expected `hwp-certificate <version>`"))?
            .trim()
            .to_string();
        let mut params = None;
        let mut shorts = Vec::new();
        let mut longs = Vec::new();
        let mut maps: BTreeMap<String, BTreeMap<i64, i8>> = BTreeMap::new();
        let mut verification = Verification::default();
        let mut any_verification = false;
        for (idx, line) in lines {
            let row = idx + 1;
            let mut words = Tokens::new(line);
            let (col, tag) = words.next_word().expect("line is nonblank");
            match tag {
                "params" => {
                    let mut kv = BTreeMap::new();
                    while let Some((c, w)) = words.next_word() {
                        let (k, v) = w
                            .split_once('=')
                            .ok_or_else(|| parse_err(row, c, "expected key=value"))?;
                        kv.insert(k.to_string(), parse_num::<u32>(v, row, c + k.len() + 1)?);
                    }
                    let get = |k: &str| {
                        kv.get(k)
                            .copied()
                            .ok_or_else(|| Error::Schema(format!("params line lacks {k}")))
                    };
                    if kv.len() != 6 {
                        return Err(Error::Schema(
                            "params line must have exactly six fields".into(),
                        ));
                    }
                    params = Some(CertParams {
                        ell: get("ell")?,
                        n: get("n")?,
                        long_len: get("M")?,
                        v: get("v")?,
                        r: get("r")?,
                        r_prime: get("r_prime")?,
                    });
                }
                "short" | "long" => {
                    let mut cycle = Vec::new();
                    while let Some((c, w)) = words.next_word() {
                        let (a, b) = w
                            .split_once(',')
                            .ok_or_else(|| parse_err(row, c, "expected a,b"))?;
                        cycle.push(Vertex(
                            parse_num(a, row, c)?,
                            parse_num(b, row, c + a.len() + 1)?,
                        ));
                    }
                    if tag == "short" {
                        shorts.push(cycle)
                    } else {
                        longs.push(cycle)
                    }
                }
                "map" => {
                    let (c, name) = words
                        .next_word()
                        .ok_or_else(|| parse_err(row, line.len() + 1, "missing map name"))?;
                    if !matches!(name, "f" | "phi" | "F" | "G") {
                        return Err(parse_err(row, c, "unknown map name"));
                    }
                    let mut table = BTreeMap::new();
                    while let Some((c, w)) = words.next_word() {
                        let (x, v) = w
                            .split_once(':')
                            .ok_or_else(|| parse_err(row, c, "expected x:value"))?;
                        table.insert(parse_num(x, row, c)?, parse_num(v, row, c + x.len() + 1)?);
                    }
                    maps.insert(name.to_string(), table);
                }
                "verification" => {
                    let (c, level) = words
                        .next_word()
                        .ok_or_else(|| parse_err(row, line.len() + 1, "missing level"))?;
                    let mut kv = BTreeMap::new();
                    while let Some((c, w)) = words.next_word() {
                        let (k, v) = w
                            .split_once('=')
                            .ok_or_else(|| parse_err(row, c, "expected key=value"))?;
                        kv.insert(k, (v, c + k.len() + 1));
                    }
                    let num = |k: &str| -> Result<usize> {
                        let (v, c) = kv
                            .get(k)
                            .ok_or_else(|| Error::Schema(format!("verification line lacks {k}")))?;
                        parse_num(v, row, *c)
                    };
                    let ok = match kv.get("ok") {
                        Some(("true", _)) => true,
                        Some(("false", _)) => false,
                        Some((_, c)) => return Err(parse_err(row, *c, "expected true or false")),
                        None => return Err(Error::Schema("verification line lacks ok".into())),
                    };
                    let summary = ReportSummary {
                        ok,
                        missing: num("missing")?,
                        duplicated: num("duplicated")?,
                        transversality_failures: num("faults")?,
                    };
                    match level {
                        "base" => verification.base = Some(summary),
                        "full" => verification.full = Some(summary),
                        _ => return Err(parse_err(row, c, "unknown verification level")),
                    }
                    any_verification = true;
                }
                _ => return Err(parse_err(row, col, &format!("unknown record `{tag}`"))),
            }
        }
        let maps = if maps.is_empty() {
            None
        } else {
            let mut take = |k: &str| {
                maps.remove(k)
                    .ok_or_else(|| Error::Schema(format!("map {k} missing")))
            };
            Some(Maps {
                f: take("f")?,
                phi: take("phi")?,
                big_f: take("F")?,
                big_g: take("G")?,
            })
        };
        let cert = Certificate {
            schema_version: version,
            params: params.ok_or_else(|| Error::Schema("no params line".into()))?,
            short_base_cycles: shorts,
            long_base_cycles: longs,
            maps,
            verification: any_verification.then_some(verification),
        };
        cert.params()?;
        Ok(cert)
    }

    /// JSON if the first non-blank character is `{`, text otherwise.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim_start().chars().next() {
            None => Err(parse_err(1, 1, "empty input")),
            Some('{') => Self::from_json(text),
            Some(_) => Self::from_text(text),
        }
    }
}

fn parse_err(line: usize, column: usize, message: &str) -> Error {
    Error::Parse {
        line,
        column,
        message: message.to_string(),
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize, column: usize) -> Result<T> {
    s.parse()
        .map_err(|_| parse_err(line, column, &format!("`{s}` is not a valid integer")))
}

/// Whitespace-separated words with their 1-based columns.
struct Tokens<'a> {
    line: &'a str,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(line: &'a str) -> Self {
        Tokens { line, pos: 0 }
    }

    fn next_word(&mut self) -> Option<(usize, &'a str)> {
        let rest = &self.line[self.pos..];
        let start = self.pos + (rest.len() - rest.trim_start().len());
        if start >= self.line.len() {
            return None;
        }
        let len = self.line[start..]
            .find(char::is_whitespace)
            .unwrap_or(self.line.len() - start);
        self.pos = start + len;
        Some((start + 1, &self.line[start..start + len]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::assemble;

    fn cert() -> Certificate {
        let p = Params::new(9, 5).unwrap();
        let mut c = Certificate::from_base(&assemble(&p).unwrap(), true);
        c.verification = Some(Verification {
            base: Some(ReportSummary {
                ok: true,
                missing: 0,
                duplicated: 0,
                transversality_failures: 0,
            }),
            full: None,
        });
        c
    }

    #[test]
    fn round_trips() {
        let c = cert();
        let json = c.to_json();
        let back = Certificate::from_json(&json).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), json);
        let text = c.to_text();
        assert_eq!(Certificate::from_text(&text).unwrap(), c);
        assert_eq!(
            Certificate::parse(&text).unwrap(),
            Certificate::parse(&json).unwrap()
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            Certificate::parse(""),
            Err(Error::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            Certificate::from_json(""),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Certificate::parse("{\"schema_version\": "),
            Err(Error::Parse { line: 1, .. })
        ));
        let mut c = cert();
        c.short_base_cycles[0][0] = Vertex(91, 0);
        assert!(matches!(
            Certificate::from_json(&c.to_json()),
            Err(Error::Schema(_))
        ));
        let mut c = cert();
        c.schema_version = "0".into();
        assert!(matches!(
            Certificate::parse(&c.to_text()),
            Err(Error::Schema(_))
        ));
        let extra = cert().to_json().replacen('{', "{\"extra\": 1,", 1);
        assert!(matches!(
            Certificate::from_json(&extra),
            Err(Error::Schema(_))
        ));
        let bad = cert().to_text().replacen("short 0,0", "short 0;0", 1);
        assert!(matches!(
            Certificate::from_text(&bad),
            Err(Error::Parse {
                line: 3,
                column: 7,
                ..
            })
        ));
    }
}
