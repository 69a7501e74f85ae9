//! Regression corpus: line-oriented cases with expected values and their
//! provenance.
//!
//! ```text
//! case  t4-t5-t11-m-squared
//! ring  4,5,11
//! ideal mpow:2
//! option trials=8
//! expect check.elias=true            # published
//! expect check.type_ideal=3          # derived: brute-force socle count
//! ```
//!
//! Expected keys are dotted paths into one of the sections `info`, `check`,
//! `indices`, `gll`, `gorenstein`, `extension` and `cover` (the last needs a
//! `cover <expr>` line). A section that fails to evaluate is the object
//! `{"error": "<Kind>"}`. Every `expect` carries a provenance: `published`,
//! `trivial`, or `derived: <oracle>`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde_json::{json, Value};

use crate::error::CliError;
use crate::parse::{parse_ideal, parse_ring, IdealExpr, Ring};
use crate::report::{self, expected_value, lookup, SearchOptions};

pub const BUNDLED: &str = include_str!("../corpus/worked_examples.corpus");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Published,
    Trivial,
    Derived { oracle: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub line: usize,
    pub key: String,
    pub value: String,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorpusCase {
    pub name: String,
    pub line: usize,
    pub ring: String,
    pub ideal: Option<String>,
    pub cover: Option<String>,
    pub options: BTreeMap<String, String>,
    pub expectations: Vec<Expectation>,
}

const SECTIONS: [&str; 7] = ["info", "check", "indices", "gll", "gorenstein", "extension", "cover"];
const OPTIONS: [&str; 4] = ["trials", "seed", "smax", "truncation"];

fn corpus_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Corpus {
        line,
        message: message.into(),
    }
}

fn provenance(line: usize, note: &str) -> Result<Provenance, CliError> {
    let note = note.trim();
    let missing_oracle = || corpus_error(line, "derived values must name their oracle");
    match note.split_once(':') {
        Some((tag, oracle)) if tag.trim() == "derived" => match oracle.trim() {
            "" => Err(missing_oracle()),
            oracle => Ok(Provenance::Derived {
                oracle: oracle.to_string(),
            }),
        },
        None if note == "published" => Ok(Provenance::Published),
        None if note == "trivial" => Ok(Provenance::Trivial),
        None if note == "derived" => Err(missing_oracle()),
        _ => Err(corpus_error(line, format!("unknown provenance '{note}'"))),
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusCase>, CliError> {
    let mut cases: Vec<CorpusCase> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (keyword, rest) = trimmed
            .split_once(char::is_whitespace)
            .map_or((trimmed, ""), |(k, r)| (k, r.trim()));
        if keyword == "case" {
            if rest.is_empty() {
                return Err(corpus_error(line, "case needs a name"));
            }
            cases.push(CorpusCase {
                name: rest.to_string(),
                line,
                ..CorpusCase::default()
            });
            continue;
        }
        let case = cases
            .last_mut()
            .ok_or_else(|| corpus_error(line, format!("'{keyword}' before the first case")))?;
        match keyword {
            "ring" => case.ring = rest.to_string(),
            "ideal" => case.ideal = Some(rest.to_string()),
            "cover" => case.cover = Some(rest.to_string()),
            "option" => {
                let (k, v) = rest
                    .split_once('=')
                    .ok_or_else(|| corpus_error(line, "option needs key=value"))?;
                if !OPTIONS.contains(&k.trim()) {
                    return Err(corpus_error(line, format!("unknown option '{}'", k.trim())));
                }
                case.options.insert(k.trim().to_string(), v.trim().to_string());
            }
            "expect" => {
                let (body, note) = rest
                    .split_once('#')
                    .ok_or_else(|| corpus_error(line, "expected value without provenance"))?;
                let (key, value) = body
                    .split_once('=')
                    .ok_or_else(|| corpus_error(line, "expect needs key=value"))?;
                let key = key.trim().to_string();
                let section = key.split('.').next().unwrap_or_default();
                if !SECTIONS.contains(&section) {
                    return Err(corpus_error(line, format!("unknown section '{section}'")));
                }
                case.expectations.push(Expectation {
                    line,
                    key,
                    value: value.trim().to_string(),
                    provenance: provenance(line, note)?,
                });
            }
            other => return Err(corpus_error(line, format!("unknown keyword '{other}'"))),
        }
    }
    for case in &cases {
        if case.ring.is_empty() {
            return Err(corpus_error(case.line, format!("case '{}' has no ring", case.name)));
        }
    }
    Ok(cases)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseOutcome {
    pub name: String,
    pub checked: usize,
    /// One line per mismatch.
    pub failures: Vec<String>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn parse_option<T: std::str::FromStr>(case: &CorpusCase, key: &str) -> Result<Option<T>, CliError> {
    case.options
        .get(key)
        .map(|v| {
            v.parse()
                .map_err(|_| corpus_error(case.line, format!("bad value for option '{key}'")))
        })
        .transpose()
}

fn section_value(
    section: &str,
    ring: &Ring,
    ideal: Option<&IdealExpr>,
    cover: Option<&IdealExpr>,
    options: &SearchOptions,
) -> Result<Value, CliError> {
    let need = |e: Option<&IdealExpr>, what: &str| {
        e.cloned()
            .ok_or_else(|| CliError::Unsupported(format!("section needs an {what} line")))
    };
    let to_json = |v: Result<Value, serde_json::Error>| v.map_err(|e| CliError::Unsupported(e.to_string()));
    match section {
        "info" => to_json(serde_json::to_value(report::info(ring)?)),
        "check" => to_json(serde_json::to_value(report::check(ring, &need(ideal, "ideal")?, options)?)),
        "indices" => to_json(serde_json::to_value(report::indices(ring, options)?)),
        "gll" => to_json(serde_json::to_value(report::gll(ring, options)?)),
        "gorenstein" => to_json(serde_json::to_value(report::gorenstein(ring, &need(ideal, "ideal")?)?)),
        "extension" => to_json(serde_json::to_value(report::extension(ring)?)),
        "cover" => to_json(serde_json::to_value(report::cover(
            ring,
            &need(ideal, "ideal")?,
            &need(cover, "cover")?,
        )?)),
        other => Err(CliError::Unsupported(format!("section '{other}'"))),
    }
}

/// Runs one case. Parse failures of the case's own ring or ideal are
/// reported as mismatches, not as errors of the whole run.
pub fn run_case(case: &CorpusCase, seed: u64) -> CaseOutcome {
    let mut outcome = CaseOutcome {
        name: case.name.clone(),
        checked: case.expectations.len(),
        failures: Vec::new(),
    };
    let prepared = (|| -> Result<_, CliError> {
        let ring = parse_ring(&case.ring)?;
        let ideal = case.ideal.as_deref().map(|s| parse_ideal(s, &ring)).transpose()?;
        let cover = case.cover.as_deref().map(|s| parse_ideal(s, &ring)).transpose()?;
        let options = SearchOptions {
            s_max: parse_option(case, "smax")?,
            trials: parse_option(case, "trials")?.unwrap_or(0),
            seed: parse_option(case, "seed")?.unwrap_or(seed),
            truncation: parse_option(case, "truncation")?,
        };
        Ok((ring, ideal, cover, options))
    })();
    let (ring, ideal, cover, options) = match prepared {
        Ok(p) => p,
        Err(e) => {
            outcome.failures.push(format!("line {}: {e}", case.line));
            return outcome;
        }
    };
    let mut sections: BTreeMap<&str, Value> = BTreeMap::new();
    for exp in &case.expectations {
        let (section, path) = exp.key.split_once('.').unwrap_or((exp.key.as_str(), ""));
        let doc = sections.entry(section).or_insert_with(|| {
            section_value(section, &ring, ideal.as_ref(), cover.as_ref(), &options)
                .unwrap_or_else(|e| json!({ "error": e.kind() }))
        });
        let expected = expected_value(&exp.value);
        match lookup(doc, path) {
            Some(actual) if *actual == expected => {}
            Some(actual) => outcome.failures.push(format!(
                "line {}: {}\n    expected {expected}\n    actual   {actual}",
                exp.line, exp.key
            )),
            None => outcome.failures.push(format!(
                "line {}: {} missing from {doc}",
                exp.line, exp.key
            )),
        }
    }
    outcome
}

/// Runs the cases on up to `jobs` threads; outcomes come back in corpus
/// order.
pub fn run_corpus(cases: &[CorpusCase], jobs: usize, seed: u64) -> Vec<CaseOutcome> {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<CaseOutcome>>> = Mutex::new(vec![None; cases.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, cases.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(case) = cases.get(i) else { break };
                let outcome = run_case(case, seed);
                results.lock().expect("no poisoned worker")[i] = Some(outcome);
            });
        }
    });
    results
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|o| o.expect("every case ran"))
        .collect()
}
