mod input;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use emn::embedding::{
    euler_report, exhaustive_genus, trace_faces, triangular_corner_count, write_rot,
};
use emn::graph::{generate_family, write_graph6};
use emn::harness::{
    enumerate_connected_graphs, run_lemma_suite, run_theorem_suite, Corpus, Entry, SurfaceChoice,
    TheoremConfig,
};
use emn::matching::{constrained_perfect_matching, has_property_emn};
use emn::surfaces::surfaces_with_chi;
use emn::{
    EmbeddingError, EmnQuery, EmnVerdict, EulerReport, Family, Graph, Matching, Rational,
    SearchBudget, Surface, SurfaceKind,
};

use input::{parse_edges, read_rot, GraphInput};

pub enum Failure {
    Usage(String),
    Input(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Budget(m) => m,
        }
    }
}

fn embedding_failure(e: EmbeddingError) -> Failure {
    match e {
        EmbeddingError::SearchTooLarge { .. } | EmbeddingError::Timeout { .. } => {
            Failure::Budget(e.to_string())
        }
        other => Failure::Input(other.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Matching extendability and surface embedding checks for small graphs.
#[derive(Debug, Parser)]
#[command(name = "emn", version)]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for corpus scans.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Budget {
    /// Cap on partial rotation assignments visited by a genus search.
    #[arg(long, default_value_t = 5_000_000)]
    max_rotations: u64,
    /// Wall-clock limit per genus search, in seconds (0 disables it).
    #[arg(long, default_value_t = 60)]
    timeout_secs: u64,
}

impl Budget {
    fn budget(&self) -> SearchBudget {
        let b = SearchBudget::new(self.max_rotations);
        if self.timeout_secs == 0 {
            b
        } else {
            b.with_timeout(Duration::from_secs(self.timeout_secs))
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct KindFlag {
    #[arg(long)]
    orientable: bool,
    #[arg(long)]
    non_orientable: bool,
}

#[derive(Debug, Args)]
struct SurfaceArgs {
    #[command(flatten)]
    kind: KindFlag,
    /// Genus g of S_g, or crosscap number of N_g.
    #[arg(long)]
    genus: u32,
}

impl SurfaceArgs {
    fn surface(&self) -> Result<Surface, Failure> {
        let kind = if self.kind.orientable { SurfaceKind::Orientable } else { SurfaceKind::NonOrientable };
        Surface::new(kind, self.genus).map_err(|e| Failure::Usage(e.to_string()))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide property E(m,n).
    EmnCheck {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Decide m-extendability, i.e. E(m,0).
    Extendable {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        m: usize,
    },
    /// Find a perfect matching containing the forced edges and avoiding the forbidden ones.
    Pm {
        #[command(flatten)]
        input: GraphInput,
        /// Edges such as `0-1,2-3`.
        #[arg(long, default_value = "")]
        forced: String,
        #[arg(long, default_value = "")]
        forbidden: String,
    },
    /// Trace faces and Euler contributions of an embedding.
    Faces {
        #[arg(long, value_name = "PATH")]
        rot: String,
    },
    /// Minimum genus by exhaustive search.
    Genus {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "orientable")]
        kind: SurfaceKind,
        #[command(flatten)]
        budget: Budget,
    },
    /// Smallest k such that no graph on the surface is k-extendable.
    Mu {
        #[command(flatten)]
        surface: SurfaceArgs,
    },
    /// Vertex count from which graphs on the surface are not E(k-1,1).
    Threshold {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        k: i64,
    },
    /// Check floor(c) <= mu for one surface or a range of characteristics.
    Claim3 {
        /// A single surface such as `S2` or `N3`.
        #[arg(long)]
        surface: Option<Surface>,
        #[arg(long, default_value_t = -200, allow_hyphen_values = true)]
        chi_min: i64,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        chi_max: i64,
    },
    /// Generate a named graph, e.g. `complete:5` or `join-counterexample:3`.
    Gen {
        #[arg(long)]
        family: Family,
    },
    /// All connected graphs on n vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        min_degree: Option<usize>,
    },
    /// Check the extendability lemmas over a corpus.
    VerifyLemmas {
        #[command(flatten)]
        input: GraphInput,
        /// Without an input, scan all connected graphs up to this many vertices.
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        #[arg(long, default_value_t = 1)]
        max_n: usize,
    },
    /// Check the surface bounds over a corpus of graphs and embeddings.
    VerifyTheorems {
        #[command(flatten)]
        input: GraphInput,
        /// Embeddings to check as given; repeatable.
        #[arg(long, value_name = "PATH")]
        rot: Vec<String>,
        /// Also scan all connected graphs on exactly this many vertices.
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long)]
        min_degree: Option<usize>,
        /// Embed on this surface or a simpler one instead of searching for the minimum.
        #[arg(long)]
        surface: Option<Surface>,
        #[arg(long, default_value = "orientable")]
        kind: SurfaceKind,
        #[arg(long, default_value_t = 6)]
        max_k: i64,
        #[command(flatten)]
        budget: Budget,
    },
}

struct Out {
    format: Format,
    lines: Vec<String>,
}

impl Out {
    fn emit(&mut self, value: Value, table: impl Into<String>) {
        self.lines.push(match self.format {
            Format::Json => value.to_string(),
            Format::Table => table.into(),
        });
    }
}

fn pairs(m: &Matching) -> String {
    m.edges().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

fn verdict_line(g: &Graph, q: EmnQuery, v: &EmnVerdict) -> String {
    let g6 = write_graph6(g);
    match v {
        EmnVerdict::Holds => format!("{g6}\t{q}\tHolds"),
        EmnVerdict::Fails { witness } => {
            format!("{g6}\t{q}\tFails\tM={{{}}} N={{{}}}", pairs(&witness.m), pairs(&witness.n))
        }
        EmnVerdict::NotApplicable { reason } => format!("{g6}\t{q}\tNotApplicable\t{reason}"),
    }
}

fn check_all(input: &GraphInput, q: EmnQuery, out: &mut Out) -> Result<u8, Failure> {
    let graphs = input.read()?;
    let mut status = 0;
    for g in &graphs {
        let v = has_property_emn(g, q);
        if v.fails() {
            status = 1;
        }
        out.emit(serde_json::to_value(&v).expect("verdicts serialize"), verdict_line(g, q, &v));
    }
    Ok(status)
}

fn run(cli: Cli, out: &mut Out) -> Result<u8, Failure> {
    match cli.command {
        Command::EmnCheck { input, m, n } => check_all(&input, EmnQuery::new(m, n), out),
        Command::Extendable { input, m } => check_all(&input, EmnQuery::new(m, 0), out),
        Command::Pm { input, forced, forbidden } => {
            let forced = parse_edges(&forced).map_err(Failure::Usage)?;
            let forbidden = parse_edges(&forbidden).map_err(Failure::Usage)?;
            let forced = Matching::new(forced).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut status = 0;
            for g in input.read()? {
                let found = constrained_perfect_matching(&g, &forced, &forbidden)
                    .map_err(|e| Failure::Input(e.to_string()))?;
                match found {
                    Some(f) => out.emit(
                        json!({ "status": "present", "matching": f }),
                        format!("{}\tpresent\t{}", write_graph6(&g), pairs(&f)),
                    ),
                    None => {
                        status = 1;
                        out.emit(json!({ "status": "absent" }), format!("{}\tabsent", write_graph6(&g)));
                    }
                }
            }
            Ok(status)
        }
        Command::Faces { rot } => {
            let map = read_rot(&rot)?;
            let faces = trace_faces(&map).map_err(embedding_failure)?;
            let report: EulerReport = euler_report(&map).map_err(embedding_failure)?;
            let corners: Vec<(usize, usize)> = (0..map.vertex_count())
                .map(|v| triangular_corner_count(&map, v).expect("v is a vertex"))
                .collect();
            let walks: Vec<&Vec<usize>> = faces.faces.iter().map(|f| &f.walk).collect();
            let mut table = format!(
                "V={} E={} F={} chi={} surface={}\n",
                report.vertices,
                report.edges,
                report.faces,
                report.chi,
                report.surface()
            );
            for v in 0..map.vertex_count() {
                let mark = if report.control_points.contains(&v) { " control" } else { "" };
                table.push_str(&format!(
                    "{v}\tphi={}\t(x,y)=({},{}){mark}\n",
                    report.phi[v], corners[v].0, corners[v].1
                ));
            }
            out.emit(
                json!({ "report": report, "faces": walks, "triangular_corners": corners }),
                table.trim_end(),
            );
            Ok(0)
        }
        Command::Genus { input, kind, budget } => {
            for g in input.read()? {
                let r = exhaustive_genus(&g, kind, budget.budget()).map_err(embedding_failure)?;
                let rot = write_rot(&r.witness);
                out.emit(
                    json!({
                        "genus": r.genus,
                        "surface": r.surface.to_string(),
                        "explored": r.explored,
                        "witness": rot,
                    }),
                    format!("{}\t{}\tgenus {}\n{}", write_graph6(&g), r.surface, r.genus, rot.trim_end()),
                );
            }
            Ok(0)
        }
        Command::Mu { surface } => {
            let s = surface.surface()?;
            out.emit(json!({ "surface": s.to_string(), "chi": s.chi(), "mu": s.mu() }), s.mu().to_string());
            Ok(0)
        }
        Command::Threshold { surface, k } => {
            let s = surface.surface()?;
            let t = s.theorem2_threshold(k).map_err(|e| Failure::Usage(e.to_string()))?;
            out.emit(json!({ "surface": s.to_string(), "k": k, "threshold": t }), t.to_string());
            Ok(0)
        }
        Command::Claim3 { surface, chi_min, chi_max } => {
            let surfaces = match surface {
                Some(s) => vec![s],
                None => surfaces_with_chi(chi_min, chi_max),
            };
            let mut status = 0;
            for s in surfaces {
                let c: Rational = s.c_constant().map_err(|e| Failure::Usage(e.to_string()))?;
                let holds = s.claim3_holds().map_err(|e| Failure::Usage(e.to_string()))?;
                if !holds {
                    status = 1;
                }
                let floor = c.floor().to_integer();
                out.emit(
                    json!({
                        "surface": s.to_string(),
                        "chi": s.chi(),
                        "mu": s.mu(),
                        "c": c.to_string(),
                        "floor_c": floor,
                        "holds": holds,
                    }),
                    format!("{s}\tchi={}\tc={c}\tfloor={floor}\tmu={}\t{}", s.chi(), s.mu(), if holds { "ok" } else { "VIOLATED" }),
                );
            }
            Ok(status)
        }
        Command::Gen { family } => {
            let g = generate_family(&family).map_err(|e| Failure::Usage(e.to_string()))?;
            let g6 = write_graph6(&g);
            out.emit(
                json!({ "family": family.to_string(), "graph6": g6, "vertices": g.vertex_count(), "edges": g.edge_count() }),
                g6.clone(),
            );
            Ok(0)
        }
        Command::Enumerate { n, min_degree } => {
            let graphs = enumerate_connected_graphs(n, min_degree).map_err(|e| Failure::Usage(e.to_string()))?;
            for g in graphs {
                let g6 = write_graph6(&g);
                out.emit(json!({ "graph6": g6 }), g6.clone());
            }
            Ok(0)
        }
        Command::VerifyLemmas { input, max_vertices, max_m, max_n } => {
            let corpus = if input.is_given() {
                Corpus::new(input.input.clone().unwrap_or_else(|| "--g6".into()), input.read()?)
            } else {
                Corpus::enumerated(1, max_vertices, None).map_err(|e| Failure::Usage(e.to_string()))?
            };
            let report = run_lemma_suite(&corpus, max_m, max_n);
            out.emit(serde_json::to_value(&report).expect("reports serialize"), report.to_table().trim_end());
            Ok(u8::from(!report.passed()))
        }
        Command::VerifyTheorems { input, rot, vertices, min_degree, surface, kind, max_k, budget } => {
            let mut corpus = Corpus::new("", Vec::new());
            let mut parts = Vec::new();
            for path in &rot {
                let map = read_rot(path)?;
                corpus.push(Entry { graph: map.graph().clone(), map: Some(map) });
            }
            if !rot.is_empty() {
                parts.push(format!("{} rot files", rot.len()));
            }
            if input.is_given() {
                for graph in input.read()? {
                    corpus.push(Entry { graph, map: None });
                }
                parts.push(input.input.clone().unwrap_or_else(|| "--g6".into()));
            }
            if let Some(n) = vertices {
                for graph in enumerate_connected_graphs(n, min_degree).map_err(|e| Failure::Usage(e.to_string()))? {
                    corpus.push(Entry { graph, map: None });
                }
                let degree = min_degree.map(|d| format!(", min degree {d}")).unwrap_or_default();
                parts.push(format!("connected graphs on {n} vertices{degree}"));
            }
            if corpus.is_empty() && parts.is_empty() {
                return Err(Failure::Usage("give --rot, --g6, --in or --vertices".into()));
            }
            corpus.description = parts.join(" + ");
            let config = TheoremConfig {
                surface: match surface {
                    Some(s) => SurfaceChoice::AtMost(s),
                    None => SurfaceChoice::Minimal(kind),
                },
                budget: budget.budget(),
                max_k,
            };
            let report = run_theorem_suite(&corpus, &config);
            out.emit(serde_json::to_value(&report).expect("reports serialize"), report.to_table().trim_end());
            Ok(u8::from(!report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build_global() {
        eprintln!("emn: cannot start worker pool: {e}");
        return ExitCode::from(2);
    }
    let mut out = Out { format: cli.format, lines: Vec::new() };
    let result = run(cli, &mut out);
    for line in &out.lines {
        println!("{line}");
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("emn: error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
