//! Graph sources for subcommands: a file in either supported format, or a
//! family spec like `tadpole:3,5`. Errors out of this module are usage
//! errors and map to exit code 2.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use graphspectra::graph::{family, petersen, read_graph, FamilyKind, Graph, GraphFormat};

#[derive(Clone, Copy, ValueEnum)]
pub enum FormatArg {
    /// graph6 text, one graph per line (first line is used).
    G6,
    /// Edge-list document: "n m" header, then one "u v" line per edge.
    Edges,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::G6 => GraphFormat::Graph6,
            FormatArg::Edges => GraphFormat::EdgeList,
        }
    }
}

#[derive(Args)]
pub struct GraphArgs {
    /// Read the graph from this file.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "family")]
    pub input: Option<PathBuf>,

    /// Format of the --in file.
    #[arg(long, value_enum, default_value_t = FormatArg::Edges)]
    pub format: FormatArg,

    /// Build the graph from a family spec, e.g. "tadpole:3,5" or "petersen".
    #[arg(long, value_name = "NAME[:P1,P2,...]")]
    pub family: Option<String>,
}

impl GraphArgs {
    pub fn load(&self) -> Result<Graph, String> {
        match self.load_optional()? {
            Some(g) => Ok(g),
            None => Err("no graph given: pass --in FILE or --family SPEC".into()),
        }
    }

    pub fn load_optional(&self) -> Result<Option<Graph>, String> {
        match (&self.input, &self.family) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
                read_graph(&text, self.format.into())
                    .map_err(|e| format!("{}: {}", path.display(), e))
                    .map(Some)
            }
            (None, Some(spec)) => graph_from_spec(spec).map(Some),
            (None, None) => Ok(None),
        }
    }
}

pub fn graph_from_spec(spec: &str) -> Result<Graph, String> {
    let (name, params_text) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let params: Vec<usize> = match params_text {
        Some(p) => p
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad family parameter {:?} in {:?}", s, spec))
            })
            .collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let kind = match name {
        "theta" => FamilyKind::Theta,
        "dumbbell" => FamilyKind::Dumbbell,
        "barbell" => FamilyKind::Barbell,
        "spider" => FamilyKind::Spider,
        "tadpole" => FamilyKind::Tadpole,
        "path" => FamilyKind::Path,
        "cycle" => FamilyKind::Cycle,
        "complete" => FamilyKind::Complete,
        "star" => FamilyKind::Star,
        "petersen" => {
            if params.is_empty() {
                return Ok(petersen());
            }
            return Err(format!("petersen takes no parameters, got {:?}", spec));
        }
        other => {
            return Err(format!(
                "unknown family {:?}; known: theta, dumbbell, barbell, spider, \
                 tadpole, path, cycle, complete, star, petersen",
                other
            ));
        }
    };
    family(kind, &params).map_err(|e| e.to_string())
}
