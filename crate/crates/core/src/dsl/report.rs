use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Meta {
    pub seed: u64,
    pub samples: usize,
    pub version: String,
}

/// One check outcome. `verdict` is `pass`, `generic-pass`, `fail` or `error`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub name: String,
    pub verdict: String,
    pub witness: Vec<String>,
    pub certificate: Vec<String>,
    pub ms: f64,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.verdict == "pass" || self.verdict == "generic-pass"
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub meta: Meta,
    pub checks: Vec<Record>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "geolab {}  seed {}  samples {}\n",
            self.meta.version, self.meta.seed, self.meta.samples
        );
        let w = self.checks.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.checks {
            out.push_str(&format!("{:<w$}  {:<12}  {} ms\n", r.name, r.verdict, r.ms));
            for x in &r.witness {
                out.push_str(&format!("    witness: {x}\n"));
            }
            for x in &r.certificate {
                out.push_str(&format!("    cert: {x}\n"));
            }
        }
        let failed = self.checks.iter().filter(|r| !r.passed()).count();
        out.push_str(&format!("{} checks, {failed} not passing\n", self.checks.len()));
        out
    }

    /// 0 when every verdict passes, 1 otherwise. Under `strict`,
    /// `generic-pass` counts as a failure.
    pub fn exit_code(&self, strict: bool) -> i32 {
        let ok = self
            .checks
            .iter()
            .all(|r| r.verdict == "pass" || (!strict && r.verdict == "generic-pass"));
        if ok {
            0
        } else {
            1
        }
    }
}
