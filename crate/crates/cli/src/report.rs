//! Claim records and the JSON and text reports built from them.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Exploratory,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Exploratory => "exploratory",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s {
            "pass" => Some(Status::Pass),
            "fail" => Some(Status::Fail),
            "skipped" => Some(Status::Skipped),
            "exploratory" => Some(Status::Exploratory),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub description: String,
    pub source: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub wall_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub exploratory: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub claims: Vec<ClaimRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(claims: Vec<ClaimRecord>) -> Report {
        let mut summary = Summary::default();
        for c in &claims {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Exploratory => summary.exploratory += 1,
            }
        }
        Report {
            version: REPORT_VERSION.to_string(),
            claims,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Report, ReportParseError> {
        let r: Report = serde_json::from_str(s).map_err(|e| ReportParseError(e.to_string()))?;
        if r.version != REPORT_VERSION {
            return Err(ReportParseError(format!("unsupported report version {}", r.version)));
        }
        Ok(r)
    }

    /// Tab-separated table with a header line, one row per claim, and a
    /// summary line. Values are compact JSON so the table parses back.
    pub fn to_text(&self) -> String {
        let rows: Vec<[String; 8]> = self
            .claims
            .iter()
            .map(|c| {
                [
                    c.id.clone(),
                    c.status.as_str().to_string(),
                    c.source.clone(),
                    c.wall_ms.to_string(),
                    c.expected.to_string(),
                    c.computed.to_string(),
                    c.reason.clone().unwrap_or_default(),
                    c.description.clone(),
                ]
            })
            .collect();
        let header = ["id", "status", "source", "ms", "expected", "computed", "reason", "description"];
        let mut width = header.map(str::len);
        for r in &rows {
            for (w, cell) in width.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(width).enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(cell);
                } else {
                    let _ = write!(s, "{cell:<w$}\t");
                }
            }
            s.trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&line(&header.map(String::from)));
        out.push('\n');
        for r in &rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} skipped, {} exploratory",
            s.pass, s.fail, s.skipped, s.exploratory
        );
        out
    }

    /// Inverse of [`Report::to_text`].
    pub fn from_text(s: &str) -> Result<Report, ReportParseError> {
        let err = |n: usize, m: &str| ReportParseError(format!("line {n}: {m}"));
        let mut lines = s.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.starts_with("id") => {}
            _ => return Err(err(1, "missing header")),
        }
        let mut claims = Vec::new();
        let mut summary = None;
        for (n, l) in lines {
            let n = n + 1;
            if let Some(rest) = l.strip_prefix("summary: ") {
                let nums: Vec<usize> = rest
                    .split(", ")
                    .map(|p| p.split(' ').next().unwrap_or("").parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| err(n, "bad summary"))?;
                if nums.len() != 4 {
                    return Err(err(n, "bad summary"));
                }
                summary = Some(Summary {
                    pass: nums[0],
                    fail: nums[1],
                    skipped: nums[2],
                    exploratory: nums[3],
                });
                continue;
            }
            let cells: Vec<&str> = l.splitn(8, '\t').map(str::trim_end).collect();
            if cells.len() != 8 {
                return Err(err(n, "expected 8 columns"));
            }
            let json = |c: &str| serde_json::from_str::<Value>(c).map_err(|e| err(n, &e.to_string()));
            claims.push(ClaimRecord {
                id: cells[0].to_string(),
                status: Status::parse(cells[1]).ok_or_else(|| err(n, "bad status"))?,
                source: cells[2].to_string(),
                wall_ms: cells[3].parse().map_err(|_| err(n, "bad time"))?,
                expected: json(cells[4])?,
                computed: json(cells[5])?,
                reason: (!cells[6].is_empty()).then(|| cells[6].to_string()),
                description: cells[7].to_string(),
            });
        }
        let r = Report::new(claims);
        match summary {
            Some(s) if s == r.summary => Ok(r),
            Some(_) => Err(ReportParseError("summary does not match the rows".into())),
            None => Err(ReportParseError("missing summary line".into())),
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cannot read report: {0}")]
pub struct ReportParseError(pub String);
