//! Line-oriented check reports.
//!
//! Every validator and model check in the crate funnels its outcome through
//! [`Report`]: a list of `(status, check-id, detail)` triples.  Reports render
//! one line per check as `STATUS<TAB>check-id<TAB>detail`, sorted by check id,
//! so two runs over the same inputs produce byte-identical text.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Undecided,
    Info,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
            Status::Info => "INFO",
            Status::Error => "ERROR",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub status: Status,
    pub id: String,
    pub detail: String,
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.status, self.id, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn new() -> Self {
        Report { lines: Vec::new() }
    }

    pub fn push(&mut self, status: Status, id: impl Into<String>, detail: impl Into<String>) {
        self.lines.push(ReportLine { status, id: id.into(), detail: detail.into() });
    }

    pub fn pass(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.push(Status::Pass, id, detail);
    }

    pub fn fail(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.push(Status::Fail, id, detail);
    }

    pub fn undecided(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.push(Status::Undecided, id, detail);
    }

    pub fn info(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.push(Status::Info, id, detail);
    }

    pub fn error(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.push(Status::Error, id, detail);
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    /// True when no line is FAIL or ERROR.  UNDECIDED lines do not fail a
    /// report; callers that need strictness check [`Report::fully_decided`].
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| !matches!(l.status, Status::Fail | Status::Error))
    }

    pub fn fully_decided(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Undecided)
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.lines.iter().find(|l| l.id == id).map(|l| l.status)
    }

    /// Render sorted by check id (ties broken by status then detail).
    pub fn render(&self) -> String {
        let mut lines = self.lines.clone();
        lines.sort_by(|a, b| {
            a.id.cmp(&b.id).then(a.status.cmp(&b.status)).then(a.detail.cmp(&b.detail))
        });
        let mut out = String::new();
        for l in &lines {
            out.push_str(&format!("{}\t{}\t{}\n", l.status, l.id, l.detail));
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
