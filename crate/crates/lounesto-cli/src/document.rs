//! Spinor documents: JSON lines or CSV rows of 8 reals (re/im interleaved).

use std::io::Read;
use std::path::Path;

use lounesto::{Rep, SpinorC4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub momentum: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinorDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<Rep>,
    pub components: [[f64; 2]; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl SpinorDocument {
    pub fn from_spinor(psi: &SpinorC4, metadata: Option<Metadata>) -> Self {
        // Adding 0.0 turns -0.0 into 0.0.
        Self { rep: Some(psi.rep), components: psi.components.map(|z| [z.re + 0.0, z.im + 0.0]), metadata }
    }

    /// The spinor in its own representation, or `default` when untagged.
    pub fn spinor(&self, default: Rep) -> SpinorC4 {
        let c = self.components.map(|[re, im]| Complex64::new(re, im));
        SpinorC4::new(c, self.rep.unwrap_or(default))
    }

    /// Copy with the representation tag filled in.
    pub fn resolved(&self, default: Rep) -> Self {
        Self { rep: Some(self.rep.unwrap_or(default)), ..self.clone() }
    }

    fn validate(self, path: &str, line: usize) -> Result<Self, CliError> {
        if self.components.iter().flatten().all(|x| x.is_finite()) {
            Ok(self)
        } else {
            Err(CliError::Parse { path: path.into(), line, message: "non-finite component".into() })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    /// JSON lines unless the path ends in .csv or the first character is not '{'.
    Auto,
    Jsonl,
    Csv,
}

fn read_text(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.into(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Reads every document in `path` ("-" for stdin).
pub fn read_documents(path: &str, format: InputFormat) -> Result<Vec<SpinorDocument>, CliError> {
    let text = read_text(path)?;
    let csv = match format {
        InputFormat::Csv => true,
        InputFormat::Jsonl => false,
        InputFormat::Auto => {
            Path::new(path).extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
                || text.trim_start().chars().next().is_some_and(|c| c != '{')
        }
    };
    if csv {
        parse_csv(path, &text)
    } else {
        parse_jsonl(path, &text)
    }
}

pub fn parse_jsonl(path: &str, text: &str) -> Result<Vec<SpinorDocument>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str::<SpinorDocument>(l)
                .map_err(|e| CliError::Parse { path: path.into(), line: i + 1, message: e.to_string() })
                .and_then(|d| d.validate(path, i + 1))
        })
        .collect()
}

/// Rows of 8 reals; a leading row whose first field is not a number is a header.
pub fn parse_csv(path: &str, text: &str) -> Result<Vec<SpinorDocument>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let parse_err = |line: usize, message: String| CliError::Parse { path: path.into(), line, message };
        let record = record.map_err(|e| parse_err(k + 1, e.to_string()))?;
        let line = record.position().map_or(k + 1, |p| p.line() as usize);
        if k == 0 && record.get(0).is_some_and(|f| f.parse::<f64>().is_err()) {
            continue;
        }
        if record.len() != 8 {
            return Err(parse_err(line, format!("expected 8 columns, found {}", record.len())));
        }
        let mut x = [0.0; 8];
        for (slot, field) in x.iter_mut().zip(record.iter()) {
            *slot = field.parse().map_err(|e| parse_err(line, format!("'{field}': {e}")))?;
        }
        let doc = SpinorDocument {
            rep: None,
            components: std::array::from_fn(|r| [x[2 * r], x[2 * r + 1]]),
            metadata: None,
        };
        out.push(doc.validate(path, line)?);
    }
    Ok(out)
}
