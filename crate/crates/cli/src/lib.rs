//! Command-line front end for `infgon`.
//!
//! Every subcommand reads its inputs, calls one library operation and prints
//! JSON, or a human rendering with `--pretty`. Persisted windows and friezes
//! carry a `"format": "infgon/1"` tag.

pub mod io;
pub mod render;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use infgon::arc::{arc_to_module, ext_dimension, extension_middle, ar_sequence};
use infgon::cluster::{cluster_variable, coefficient_frieze, crossing_string, initial_seed, submodule_count};
use infgon::frieze::{frieze_from_quiddity, frieze_from_window, fountain_frieze_from_quiddities, FriezeKind};
use infgon::sequences::{penrose_decode, penrose_encode, x_sequence, y_sequence, BinarySeq};
use infgon::{Arc, IntFrieze, TriangulationWindow};

use crate::io::{parse_arc, parse_list, read_document, to_document, CliError};
use crate::render::{highlight_ones, render_frieze, render_window, Format, Geometry, RenderSpec};

#[derive(Debug, Parser)]
#[command(name = "infgon", version, about = "Triangulations of the completed infinity-gon, friezes and cluster variables")]
pub struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WindowArg {
    /// Window document (JSON).
    #[arg(long, alias = "from-window")]
    pub window: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Right,
    Left,
    Cc,
    Fountain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Window,
    Frieze,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a window and re-emit it in normal form.
    Validate(WindowArg),
    /// Flip one arc of a window.
    Mutate {
        #[command(flatten)]
        input: WindowArg,
        #[arg(long, value_parser = parse_arc)]
        arc: Arc,
    },
    /// The x-word and y-sequence at the fountain.
    Sequence(WindowArg),
    /// Apply or undo the `1 -> 10` substitution.
    Penrose {
        #[arg(long, conflicts_with = "decode", required_unless_present = "decode")]
        encode: Option<String>,
        #[arg(long)]
        decode: Option<String>,
    },
    /// The integral frieze of a window or of a quiddity row.
    Frieze {
        #[arg(long, alias = "from-window", conflicts_with_all = ["quiddity", "input"])]
        window: Option<PathBuf>,
        /// Quiddity row, e.g. 3,1,2,2,1
        #[arg(long, value_parser = parse_list, conflicts_with = "input")]
        quiddity: Option<std::vec::Vec<u64>>,
        /// A previously saved frieze document.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "right")]
        kind: KindArg,
        /// Fountain, or first index of the row.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        start: i64,
        /// Row to the left of the fountain for `--kind fountain`.
        #[arg(long, value_parser = parse_list)]
        left_quiddity: Option<std::vec::Vec<u64>>,
    },
    /// The frieze of cluster variables with boundary coefficients.
    ClusterFrieze {
        #[command(flatten)]
        input: WindowArg,
        /// Set every variable to 1.
        #[arg(long)]
        specialize_ones: bool,
    },
    /// Crossing string, submodule count and cluster variable of an arc.
    Chi {
        #[command(flatten)]
        input: WindowArg,
        #[arg(long, value_parser = parse_arc)]
        arc: Arc,
    },
    /// The graded module of an arc, and its extensions with another.
    Module {
        #[arg(long, value_parser = parse_arc)]
        arc: Arc,
        #[arg(long, value_parser = parse_arc)]
        with: Option<Arc>,
    },
    /// Draw a window or its frieze.
    Render {
        #[arg(long, alias = "from-window", required_unless_present = "frieze")]
        window: Option<PathBuf>,
        /// A saved frieze document.
        #[arg(long, conflicts_with = "window")]
        frieze: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
        #[arg(long, value_enum, default_value = "line")]
        geometry: Geometry,
        #[arg(long, default_value_t = 40.0)]
        scale: f64,
        #[arg(long)]
        no_labels: bool,
        #[arg(long, value_enum, default_value = "window")]
        target: Target,
    },
}

fn color_enabled() -> bool {
    std::env::var_os("INFGON_NO_COLOR").is_none()
}

fn json_line(v: &Value) -> String {
    v.to_string()
}

fn window_out(w: &TriangulationWindow, pretty: bool) -> Result<String, CliError> {
    if pretty {
        Ok(render_window(w, RenderSpec { format: Format::Text, ..RenderSpec::default() }))
    } else {
        to_document(w)
    }
}

fn frieze_out(f: &IntFrieze, pretty: bool) -> Result<String, CliError> {
    if pretty {
        let grid = f.text_grid();
        Ok(if color_enabled() { highlight_ones(&grid) } else { grid })
    } else {
        to_document(f)
    }
}

fn int_frieze(
    window: Option<PathBuf>,
    quiddity: Option<Vec<u64>>,
    input: Option<PathBuf>,
    kind: KindArg,
    start: i64,
    left: Option<Vec<u64>>,
) -> Result<IntFrieze, CliError> {
    if let Some(path) = window {
        let w: TriangulationWindow = read_document(&path)?;
        return Ok(frieze_from_window(&w)?);
    }
    if let Some(path) = input {
        return read_document(&path);
    }
    let q = quiddity.ok_or_else(|| CliError::new("Usage", "one of --window, --quiddity or --input is required"))?;
    let f = match kind {
        KindArg::Right => frieze_from_quiddity(&q, FriezeKind::RightHalf { r: start })?,
        KindArg::Left => frieze_from_quiddity(&q, FriezeKind::LeftHalf { l: start })?,
        KindArg::Cc => frieze_from_quiddity(&q, FriezeKind::FiniteCC { m: q.len() })?,
        KindArg::Fountain => {
            let left = left.ok_or_else(|| CliError::new("Usage", "--kind fountain needs --left-quiddity"))?;
            fountain_frieze_from_quiddities(&left, &q, start)?
        }
    };
    Ok(f)
}

/// Runs one command and returns what it would print.
pub fn run(cli: Cli) -> Result<String, CliError> {
    let pretty = cli.pretty;
    let text = match cli.command {
        Command::Validate(WindowArg { window }) => {
            let w: TriangulationWindow = read_document(&window)?;
            w.validate()?;
            window_out(&w, pretty)?
        }
        Command::Mutate { input, arc } => {
            let w: TriangulationWindow = read_document(&input.window)?;
            window_out(&w.flip(arc)?, pretty)?
        }
        Command::Sequence(WindowArg { window }) => {
            let w: TriangulationWindow = read_document(&window)?;
            let (x, y) = (x_sequence(&w)?, y_sequence(&w)?);
            if pretty {
                let ys: Vec<String> = y.values().iter().map(i64::to_string).collect();
                format!("x = {x}\ny = {}\n", ys.join(" "))
            } else {
                json_line(&json!({ "x": x.to_string(), "y": y.values() }))
            }
        }
        Command::Penrose { encode, decode } => {
            let word = match (encode, decode) {
                (Some(s), _) => penrose_encode(&s.parse::<BinarySeq>()?),
                (None, Some(t)) => penrose_decode(&t.parse::<BinarySeq>()?)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            if pretty {
                format!("{word}\n")
            } else {
                json_line(&json!({ "word": word.to_string() }))
            }
        }
        Command::Frieze { window, quiddity, input, kind, start, left_quiddity } => {
            let f = int_frieze(window, quiddity, input, kind, start, left_quiddity)?;
            frieze_out(&f, pretty)?
        }
        Command::ClusterFrieze { input, specialize_ones } => {
            let w: TriangulationWindow = read_document(&input.window)?;
            let f = coefficient_frieze(&w)?;
            if specialize_ones {
                frieze_out(&f.map(|p| p.specialize_ones()), pretty)?
            } else if pretty {
                f.text_grid()
            } else {
                to_document(&f)?
            }
        }
        Command::Chi { input, arc } => {
            let w: TriangulationWindow = read_document(&input.window)?;
            let cs = crossing_string(&w, arc)?;
            let count = submodule_count(&cs);
            let var = cluster_variable(&initial_seed(&w), arc)?;
            if pretty {
                format!("{var}\n")
            } else {
                json_line(&json!({
                    "crossing": cs,
                    "count": count.to_string(),
                    "variable": var,
                    "display": var.to_string(),
                }))
            }
        }
        Command::Module { arc, with } => {
            let module = arc_to_module(arc);
            let mut out = json!({ "arc": arc, "module": module, "display": module.to_string() });
            if let Ok(seq) = ar_sequence(arc) {
                out["ar_sequence"] = json!(seq);
            }
            if let Some(other) = with {
                out["with"] = json!(other);
                out["ext"] = json!(ext_dimension(arc, other));
                if let Ok(mid) = extension_middle(arc, other) {
                    out["middle"] = json!(mid);
                }
            }
            if pretty {
                format!("{module}\n")
            } else {
                json_line(&out)
            }
        }
        Command::Render { window, frieze, format, geometry, scale, no_labels, target } => {
            let spec = RenderSpec { format, geometry, scale, labels: !no_labels };
            match (window, frieze) {
                (Some(path), _) => {
                    let w: TriangulationWindow = read_document(&path)?;
                    match target {
                        Target::Window => render_window(&w, spec),
                        Target::Frieze => render_frieze(&frieze_from_window(&w)?, format),
                    }
                }
                (None, Some(path)) => render_frieze(&read_document::<IntFrieze>(&path)?, format),
                (None, None) => unreachable!("clap requires one of them"),
            }
        }
    };
    match cli.out {
        Some(path) => {
            fs::write(&path, &text).map_err(|e| CliError::new("Io", format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
