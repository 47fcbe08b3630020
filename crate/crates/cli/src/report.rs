//! Report schema shared by every subcommand. Keys serialize in a fixed
//! order (struct fields as declared, map keys sorted), so the same
//! invocation always produces byte-identical output.

use graphspectra::graph::Graph;
use serde::Serialize;
use serde_json::Value;

#[derive(Serialize)]
pub struct Config {
    pub tol: f64,
    pub seed: u64,
    pub jobs: usize,
}

#[derive(Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn of(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().to_vec() }
    }
}

#[derive(Serialize)]
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub details: Value,
}

impl CheckResult {
    pub fn new(name: &str, ok: bool, details: Value) -> Self {
        CheckResult { name: name.into(), ok, details }
    }

    pub fn pass(name: &str, details: Value) -> Self {
        Self::new(name, true, details)
    }

    /// Failure result; the reproduction graph rides along in the details
    /// so a failing report is actionable on its own.
    pub fn fail(name: &str, mut details: Value, repro: Option<&Graph>) -> Self {
        if let (Some(g), Value::Object(map)) = (repro, &mut details) {
            map.insert("graph".into(), Value::String(g.to_edge_list_string()));
        }
        Self::new(name, false, details)
    }
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub config: Config,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.results.iter().all(|r| r.ok)
    }

    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}
