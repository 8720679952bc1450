//! The `fanplan` command line. [`run`] takes the argument list and returns the
//! exit code with everything that would go to stdout and stderr.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::construct::{
    glued_k5_family, k13h_drawing, k2_family, k7_drawing, nonfanplanar_2planar, reduce_one_planarity,
};
use crate::crossing::{k5_support_check, outerplanar_decomposition, shortest_odd_cycle, CrossingGraph};
use crate::decide::{
    decide_outer_fan_planar, decide_two_layer_fan_planar, max_outer_edges, max_two_layer_edges, Answer,
    SearchBudget,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{export, load_drawing, parse_edge_list, write_edge_list, DrawingRef, ExportFormat, Witness};
use crate::outer::{CircularOrder, OuterDrawing};
use crate::topo::{max_crossings_per_edge, validate_fan_planar, TopoDrawing};
use crate::two_layer::{two_layer_to_circular, TwoLayerOrder};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fanplan", version, about = "Fan-planar graph drawings: deciders, validators, generators")]
struct Cli {
    /// Print machine-readable JSON reports.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a graph has an outer or 2-layer fan-planar drawing.
    Decide {
        model: Model,
        edgelist: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the witness order as JSON to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a drawing (drawing JSON or coordinate file) for fan-planarity.
    Validate { drawing: PathBuf },
    /// Structural reports.
    Analyze {
        #[command(subcommand)]
        what: AnalyzeCmd,
    },
    /// Generate graphs and drawings.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
        #[arg(long, global = true)]
        format: Option<Format>,
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
    /// Compare an edge count with the density bound of a class.
    Audit {
        #[command(subcommand)]
        what: AuditCmd,
    },
    /// Exhaustive maximum edge counts.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Model {
    Outer,
    TwoLayer,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Stop after this many orders (or search nodes, for oracles).
    #[arg(long, global = true)]
    budget_orders: Option<u64>,
    /// Stop after this many seconds.
    #[arg(long, global = true)]
    time_limit: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget> {
        let time = match self.time_limit {
            Some(s) if !(s.is_finite() && s > 0.0) => {
                return Err(Error::Precondition(format!("time limit must be positive, got {s}")))
            }
            s => s.map(Duration::from_secs_f64),
        };
        SearchBudget::new(self.budget_orders, time)
    }
}

#[derive(Debug, Subcommand)]
enum AnalyzeCmd {
    /// Crossing graph of a drawing, or of an edge list under `--order` or `--top/--bottom`.
    CrossingGraph {
        input: PathBuf,
        /// Circular vertex order, comma separated; the input is then an edge list.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["top", "bottom"])]
        order: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', requires = "bottom")]
        top: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', requires = "top")]
        bottom: Option<Vec<usize>>,
    },
}

#[derive(Debug, Subcommand)]
enum GenCmd {
    /// `h` K5 blocks glued along edges (3h+2 vertices, 9h+1 edges).
    GluedK5 { h: usize },
    /// K_{2,n-2} with its 2-layer order.
    K2 { n: usize },
    /// A drawing of K_{1,3,h}.
    K13h { h: usize },
    /// A 2-planar fan-planar drawing of K7.
    K7,
    /// A 2-planar drawing that is not fan-planar.
    Counterexample,
    /// The gadget graph replacing every edge by two K7s and a spanning edge.
    Reduce { edgelist: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Json,
    Dot,
    Svg,
}

#[derive(Debug, Subcommand)]
enum AuditCmd {
    Density {
        edgelist: PathBuf,
        #[arg(long)]
        class: Class,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Class {
    Outer,
    TwoLayer,
    Fan,
}

#[derive(Debug, Subcommand)]
enum OracleCmd {
    MaxOuter { n: usize },
    MaxTwoLayer { n1: usize, n2: usize },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: i32,
    text: String,
    json: Value,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome { code, stdout, stderr };
        }
    };
    match dispatch(cli.command) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: if cli.json {
                format!("{}\n", r.json)
            } else {
                r.text
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: if cli.json {
                format!("{}\n", json!({ "error": e.to_string() }))
            } else {
                String::new()
            },
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))
}

fn with_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn load_graph(path: &Path) -> Result<Graph> {
    with_file(path, parse_edge_list(&read(path)?))
}

fn dispatch(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Decide {
            model,
            edgelist,
            budget,
            witness,
        } => decide(model, &edgelist, budget.budget()?, witness.as_deref()),
        Command::Validate { drawing } => validate(&drawing),
        Command::Analyze {
            what: AnalyzeCmd::CrossingGraph { input, order, top, bottom },
        } => analyze(&input, order, top.zip(bottom)),
        Command::Gen { what, format, output } => gen(what, format, output.as_deref()),
        Command::Audit {
            what: AuditCmd::Density { edgelist, class },
        } => audit(&edgelist, class),
        Command::Oracle { what, budget } => oracle(what, budget.budget()?),
    }
}

fn answer_code(a: Answer) -> i32 {
    match a {
        Answer::Yes => EXIT_YES,
        Answer::No => EXIT_NO,
        Answer::Unknown => EXIT_UNKNOWN,
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn decide(model: Model, path: &Path, budget: SearchBudget, out: Option<&Path>) -> Result<Report> {
    let g = load_graph(path)?;
    let (answer, explored, w) = match model {
        Model::Outer => {
            let d = decide_outer_fan_planar(&g, budget);
            (d.answer, d.explored, d.witness.map(|order| Witness::Outer { order }))
        }
        Model::TwoLayer => {
            let d = decide_two_layer_fan_planar(&g, budget);
            (d.answer, d.explored, d.witness.as_ref().map(Witness::two_layer))
        }
    };
    let model_name = match model {
        Model::Outer => "outer",
        Model::TwoLayer => "two-layer",
    };
    let mut text = format!("{model_name} fan-planar: {}\nexplored: {explored}\n", answer.as_str());
    match &w {
        Some(Witness::Outer { order }) => writeln!(text, "witness order: {order}").unwrap(),
        Some(Witness::TwoLayer { top, bottom }) => {
            writeln!(text, "witness top: {}\nwitness bottom: {}", join(top), join(bottom)).unwrap()
        }
        None => {}
    }
    if let (Some(p), Some(w)) = (out, &w) {
        write(p, &format!("{}\n", w.to_json()))?;
    }
    Ok(Report {
        code: answer_code(answer),
        text,
        json: json!({
            "model": model_name,
            "answer": answer,
            "explored": explored,
            "witness": w,
        }),
    })
}

fn validate(path: &Path) -> Result<Report> {
    let d = with_file(path, load_drawing(&read(path)?))?;
    let violations = validate_fan_planar(&d);
    let max_cr = max_crossings_per_edge(&d);
    let g = d.graph();
    let mut text = format!(
        "vertices: {}\nedges: {}\ncrossings: {}\nmax crossings per edge: {max_cr}\n",
        g.n(),
        g.m(),
        d.crossing_count()
    );
    if violations.is_empty() {
        text.push_str("fan-planar: yes\n");
    } else {
        writeln!(text, "fan-planar: no ({} violations)", violations.len()).unwrap();
        for v in &violations {
            writeln!(text, "  {v}").unwrap();
        }
    }
    Ok(Report {
        code: if violations.is_empty() { EXIT_YES } else { EXIT_NO },
        text,
        json: json!({
            "vertices": g.n(),
            "edges": g.m(),
            "crossings": d.crossing_count(),
            "max_crossings_per_edge": max_cr,
            "fan_planar": violations.is_empty(),
            "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }),
    })
}

fn analyze(path: &Path, order: Option<Vec<usize>>, layers: Option<(Vec<usize>, Vec<usize>)>) -> Result<Report> {
    let text_in = read(path)?;
    let mut outer = None;
    let cg = if let Some(order) = order {
        let g = with_file(path, parse_edge_list(&text_in))?;
        let d = OuterDrawing::new(g, CircularOrder::new(order)?)?;
        let cg = CrossingGraph::from_outer(&d);
        outer = Some(d);
        cg
    } else if let Some((top, bottom)) = layers {
        let g = with_file(path, parse_edge_list(&text_in))?;
        let t = TwoLayerOrder::new(top, bottom)?;
        let cg = CrossingGraph::from_two_layer(&g, &t)?;
        outer = Some(OuterDrawing::new(g, two_layer_to_circular(&t))?);
        cg
    } else {
        CrossingGraph::from_topo(&with_file(path, load_drawing(&text_in))?)
    };
    let odd = shortest_odd_cycle(&cg);
    let mut text = format!(
        "nodes: {}\ncrossing pairs: {}\nisolated: {}\nbipartite: {}\n",
        cg.len(),
        cg.pair_count(),
        cg.isolated().len(),
        odd.is_none()
    );
    let mut j = json!({
        "nodes": cg.len(),
        "crossing_pairs": cg.pair_count(),
        "isolated": cg.isolated().len(),
        "bipartite": odd.is_none(),
    });
    if let Some(r) = &odd {
        let cycle: Vec<String> = r.cycle.iter().map(|e| e.to_string()).collect();
        writeln!(text, "shortest odd cycle: length {} [{}]", r.length, cycle.join(" ")).unwrap();
        j["odd_cycle"] = json!({ "length": r.length, "cycle": r.cycle, "support": r.support });
        if let (Some(d), 5) = (&outer, r.length) {
            let k5 = k5_support_check(d, r)?;
            writeln!(text, "support induces K5: {k5}").unwrap();
            j["support_induces_k5"] = json!(k5);
        }
    } else if let Some(d) = &outer {
        let (e1, e2) = outerplanar_decomposition(d)?;
        writeln!(text, "outerplanar parts: {} + {}", e1.len(), e2.len()).unwrap();
        j["outerplanar_parts"] = json!([e1.len(), e2.len()]);
    }
    Ok(Report {
        code: EXIT_YES,
        text,
        json: j,
    })
}

/// What a generator produced, before formatting.
enum Generated {
    Outer { drawing: OuterDrawing, comments: Vec<String> },
    Topo { drawing: TopoDrawing, comments: Vec<String> },
    Reduction { graph: Graph, gadgets: Value },
}

fn gen(what: GenCmd, format: Option<Format>, output: Option<&Path>) -> Result<Report> {
    let generated = match what {
        GenCmd::GluedK5 { h } => {
            let f = glued_k5_family(h)?;
            let comments = vec![
                format!("glued K5 family, h = {h}"),
                format!("order: {}", join(f.witness.as_slice())),
            ];
            Generated::Outer {
                drawing: OuterDrawing::new(f.graph, f.witness)?,
                comments,
            }
        }
        GenCmd::K2 { n } => {
            let (g, t) = k2_family(n)?;
            let comments = vec![
                format!("K_(2,{})", n - 2),
                format!("top: {}", join(t.top())),
                format!("bottom: {}", join(t.bottom())),
            ];
            Generated::Outer {
                drawing: OuterDrawing::new(g, two_layer_to_circular(&t))?,
                comments,
            }
        }
        GenCmd::K13h { h } => {
            if h == 0 {
                return Err(Error::Precondition("h must be at least 1".into()));
            }
            Generated::Topo {
                drawing: k13h_drawing(h),
                comments: vec![format!("K_(1,3,{h})")],
            }
        }
        GenCmd::K7 => Generated::Topo {
            drawing: k7_drawing(),
            comments: vec!["K7, 2-planar and fan-planar".into()],
        },
        GenCmd::Counterexample => Generated::Topo {
            drawing: nonfanplanar_2planar().1,
            comments: vec!["2-planar, not fan-planar".into()],
        },
        GenCmd::Reduce { edgelist } => {
            let g = load_graph(&edgelist)?;
            let r = reduce_one_planarity(&g);
            Generated::Reduction {
                graph: r.graph,
                gadgets: json!(r.gadget_map),
            }
        }
    };
    let (graph, default) = match &generated {
        Generated::Reduction { graph, .. } => (graph.clone(), Format::Edgelist),
        Generated::Outer { drawing, .. } => (drawing.graph().clone(), Format::Edgelist),
        Generated::Topo { drawing, .. } => (drawing.graph().clone(), Format::Json),
    };
    let format = format.unwrap_or(default);
    let body = match (&generated, format) {
        (Generated::Outer { drawing, comments }, Format::Edgelist) => write_edge_list(drawing.graph(), comments),
        (Generated::Topo { drawing, comments }, Format::Edgelist) => write_edge_list(drawing.graph(), comments),
        (Generated::Reduction { graph, .. }, Format::Edgelist) => write_edge_list(graph, &[]),
        (Generated::Reduction { graph, gadgets }, Format::Json) => {
            format!(
                "{}\n",
                serde_json::to_string_pretty(&json!({
                    "vertices": graph.n(),
                    "edges": graph.edges(),
                    "gadgets": gadgets,
                }))
                .unwrap()
            )
        }
        (Generated::Reduction { .. }, f) => {
            return Err(Error::Unsupported(format!("{f:?} output for a reduction")));
        }
        (Generated::Outer { drawing, .. }, f) => export(DrawingRef::Outer(drawing), export_format(f))?,
        (Generated::Topo { drawing, .. }, f) => export(DrawingRef::Topo(drawing), export_format(f))?,
    };
    let summary = json!({ "vertices": graph.n(), "edges": graph.m() });
    match output {
        Some(p) => {
            write(p, &body)?;
            Ok(Report {
                code: EXIT_YES,
                text: format!("wrote {} ({} vertices, {} edges)\n", p.display(), graph.n(), graph.m()),
                json: summary,
            })
        }
        None => Ok(Report {
            code: EXIT_YES,
            text: body,
            json: summary,
        }),
    }
}

fn export_format(f: Format) -> ExportFormat {
    match f {
        Format::Json => ExportFormat::Json,
        Format::Dot => ExportFormat::Dot,
        Format::Svg => ExportFormat::Svg,
        Format::Edgelist => unreachable!("edge lists are written directly"),
    }
}

/// Edge-count bound of a class on `n` vertices; below 3 vertices every simple graph qualifies.
pub fn density_bound(class_bound: (i64, i64), n: usize) -> usize {
    if n < 3 {
        return n * n.saturating_sub(1) / 2;
    }
    let (a, b) = class_bound;
    (a * n as i64 - b) as usize
}

fn audit(path: &Path, class: Class) -> Result<Report> {
    let g = load_graph(path)?;
    let (name, coeffs) = match class {
        Class::Outer => ("outer", (3, 5)),
        Class::TwoLayer => ("two-layer", (2, 4)),
        Class::Fan => ("fan", (5, 10)),
    };
    let (n, m) = (g.n(), g.m());
    let bound = density_bound(coeffs, n);
    let within = m <= bound;
    let status = if m == bound {
        "tight"
    } else if within {
        "within"
    } else {
        "exceeded"
    };
    let formula = format!("{}n-{}", coeffs.0, coeffs.1);
    Ok(Report {
        code: if within { EXIT_YES } else { EXIT_NO },
        text: format!("class: {name}\nn: {n}\nm: {m}\nbound ({formula}): {bound}\nstatus: {status}\n"),
        json: json!({
            "class": name,
            "n": n,
            "m": m,
            "bound": bound,
            "formula": formula,
            "within": within,
            "tight": m == bound,
        }),
    })
}

fn oracle(what: OracleCmd, budget: SearchBudget) -> Result<Report> {
    let (label, result) = match what {
        OracleCmd::MaxOuter { n } => (format!("max outer fan-planar edges, n = {n}"), max_outer_edges(n, budget)),
        OracleCmd::MaxTwoLayer { n1, n2 } => (
            format!("max 2-layer fan-planar edges, layers {n1}+{n2}"),
            max_two_layer_edges(n1, n2, budget),
        ),
    };
    match result {
        Ok(v) => Ok(Report {
            code: EXIT_YES,
            text: format!("{label}: {v}\n"),
            json: json!({ "value": v, "exhausted": false }),
        }),
        Err(Error::BudgetExhausted { lower_bound }) => Ok(Report {
            code: EXIT_UNKNOWN,
            text: format!("{label}: unknown (budget exhausted, at least {lower_bound})\n"),
            json: json!({ "value": null, "lower_bound": lower_bound, "exhausted": true }),
        }),
        Err(e) => Err(e),
    }
}
