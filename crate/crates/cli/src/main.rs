use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wheelforge::coloring::k_color;
use wheelforge::embedding::{for_each_disc_embedding, is_disc_planar, is_planar, Planarity};
use wheelforge::graph::{canonical_form, emit_graph6, parse_graph6};
use wheelforge::harness::corpus::parse_corpus;
use wheelforge::harness::{verify_lemma, verify_lemma_with_certificates, Bounds, Corpus, LemmaId, Verdict};
use wheelforge::linkage::{solve_two_linkage, LinkageInstance, LinkageResult};
use wheelforge::obstructions::{catalog_to_json, enumerate_obstructions_with, match_obstruction, DegreeFilter};
use wheelforge::separations::{enumerate_k_separations, planar_side_separations, CutEdges};
use wheelforge::subdivision::find_k5_subdivision;
use wheelforge::wheels::{find_good_wheels, is_extendable, wheel_at, Extension};
use wheelforge::{Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "wheelforge", version, about = "Wheels, disc embeddings, linkages and K5-subdivisions in small graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Input file, or `-` for stdin. Graph commands default to stdin.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Input format; detected from the first character when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Boundary vertices, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    boundary: Option<Vec<usize>>,
    /// Output directory for certificates.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// One compact JSON record per line instead of pretty JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Linkage terminals s1,s2,t1,t2.
    #[arg(long, global = true, value_delimiter = ',')]
    terminals: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Planarity with a rotation system, or a failure note.
    Planarity,
    /// Disc embedding with the boundary on the outer face.
    DiscPlanarity {
        /// Require the boundary in the given cyclic order.
        #[arg(long)]
        cyclic: bool,
    },
    /// k-separations, optionally only those with a disc-planar side.
    Separations {
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        min_side: usize,
        /// Only sides that embed in a disc with the cut on the boundary.
        #[arg(long)]
        planar_side: bool,
    },
    /// Wheels good for the boundary, over every disc embedding.
    Wheels,
    /// Extendability of the wheel at a center.
    Extend {
        #[arg(long)]
        center: usize,
        /// Boundary vertices that must end a path.
        #[arg(long, value_delimiter = ',')]
        mandatory: Vec<usize>,
    },
    /// Two disjoint paths s1-t1, s2-t2 or an ordered disc embedding.
    Linkage,
    /// A K5-subdivision certificate.
    K5,
    /// A proper coloring with at most k colors.
    Color {
        #[arg(long, default_value_t = 4)]
        k: u8,
    },
    /// The obstruction catalog; with --input, match graphs against it.
    Obstructions {
        #[arg(long, default_value_t = 4)]
        max_interior: usize,
        /// Drop configurations with an interior degree-3 vertex.
        #[arg(long)]
        strict: bool,
    },
    /// Run a lemma suite and print its report.
    Verify {
        lemma: String,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        max_interior: Option<usize>,
        /// Random order-(nmax+1) hosts added to L2LINK.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        strict: bool,
    },
}

/// Failure that maps to exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.global.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

/// Whether every record was positive.
fn run(cli: &Cli) -> Result<bool, Usage> {
    let g = &cli.global;
    let mut out = Output { compact: g.json, records: Vec::new() };
    let ok = match &cli.command {
        Command::Verify { lemma, nmax, max_interior, samples, strict } => {
            let id: LemmaId = lemma.parse()?;
            let mut bounds = Bounds { seed: g.seed, ..Bounds::default() };
            if let Some(n) = nmax {
                bounds.nmax = *n;
            }
            if let Some(m) = max_interior {
                bounds.max_interior = *m;
            }
            if let Some(s) = samples {
                bounds.samples = *s;
            }
            if *strict {
                bounds.filter = DegreeFilter::Strict;
            }
            if let Some(b) = &g.boundary {
                // Supplied configurations carry their boundary as 0..b.
                if b.iter().copied().ne(0..b.len()) {
                    return Err(Usage("for verify, --boundary must be 0,1,..,b-1".into()));
                }
                bounds.boundary = b.len();
            }
            let corpus = match &g.input {
                Some(_) => Corpus::Graphs(read_graphs(g)?),
                None => Corpus::Generated,
            };
            let report = if g.out.is_some() {
                verify_lemma_with_certificates(id, &corpus, &bounds)?
            } else {
                verify_lemma(id, &corpus, &bounds)?
            };
            if let Some(dir) = &g.out {
                report.write_certificates(dir)?;
            }
            out.push(serde_json::to_value(&report).map_err(Error::from)?);
            report.verdict == Verdict::Pass
        }
        Command::Obstructions { max_interior, strict } => {
            let filter = if *strict { DegreeFilter::Strict } else { DegreeFilter::Flagged };
            let catalog = enumerate_obstructions_with(*max_interior, filter)?;
            if g.input.is_some() {
                let boundary = g.boundary.clone().unwrap_or_else(|| (0..5).collect());
                let mut all = true;
                for h in read_graphs(g)? {
                    let id = match_obstruction(&catalog, &h, &boundary);
                    all &= id.is_some();
                    out.push(json!({ "graph": emit_graph6(&h)?, "match": id }));
                }
                all
            } else {
                let entries = catalog_to_json(&catalog);
                if let Some(dir) = &g.out {
                    std::fs::create_dir_all(dir).map_err(Error::from)?;
                    for e in &entries {
                        let body = serde_json::to_string_pretty(e).map_err(Error::from)?;
                        std::fs::write(dir.join(format!("{}.json", e.id)), body).map_err(Error::from)?;
                    }
                }
                out.push(json!({ "filter": filter, "max_interior": max_interior, "count": entries.len(), "entries": entries }));
                true
            }
        }
        cmd => {
            let mut all = true;
            for h in read_graphs(g)? {
                let (positive, record) = per_graph(cmd, g, &h)?;
                if let Some(dir) = &g.out {
                    std::fs::create_dir_all(dir).map_err(Error::from)?;
                    let id = canonical_form(&h, g.boundary.as_deref())?;
                    let body = serde_json::to_string_pretty(&record).map_err(Error::from)?;
                    std::fs::write(dir.join(format!("{id}.json")), body).map_err(Error::from)?;
                }
                all &= positive;
                out.push(record);
            }
            all
        }
    };
    out.flush();
    Ok(ok)
}

fn per_graph(cmd: &Command, g: &Global, h: &Graph) -> Result<(bool, Value), Usage> {
    let g6 = emit_graph6(h)?;
    let boundary = || g.boundary.clone().unwrap_or_default();
    Ok(match cmd {
        Command::Planarity => match is_planar(h) {
            Planarity::Planar(e) => (true, json!({ "graph": g6, "planar": true, "embedding": e.to_json() })),
            Planarity::NonPlanar { note } => (false, json!({ "graph": g6, "planar": false, "note": note })),
        },
        Command::DiscPlanarity { cyclic } => {
            let b = boundary();
            match is_disc_planar(h, &b, *cyclic)? {
                Some(e) => (true, json!({ "graph": g6, "disc_planar": true, "embedding": e.to_json() })),
                None => (false, json!({ "graph": g6, "disc_planar": false })),
            }
        }
        Command::Separations { k, min_side, planar_side } => {
            let seps: Vec<Value> = if *planar_side {
                planar_side_separations(h, *k, *min_side, CutEdges::Side1)
                    .map(|p| json!({ "separation": p.separation.to_json(), "embedding": p.embedding.to_json(), "map": p.map }))
                    .collect()
            } else {
                enumerate_k_separations(h, *k, *min_side, CutEdges::Side1)
                    .map(|s| serde_json::to_value(s.to_json()).expect("separations serialize"))
                    .collect()
            };
            (!seps.is_empty(), json!({ "graph": g6, "k": k, "separations": seps }))
        }
        Command::Wheels => {
            let b = required_boundary(g)?;
            let t: VertexSet = b.iter().collect();
            let mut found = Vec::new();
            let mut wheel_free = None;
            for_each_disc_embedding(h, &b, |e| {
                let good = find_good_wheels(e, t);
                if good.is_empty() && wheel_free.is_none() {
                    wheel_free = Some(e.to_json());
                }
                for w in good {
                    if !found.contains(&w) {
                        found.push(w);
                    }
                }
                true
            })?;
            let mut record = json!({ "graph": g6, "good_wheels": found });
            if let Some(e) = &wheel_free {
                record["wheel_free_embedding"] = serde_json::to_value(e).map_err(Error::from)?;
            }
            (wheel_free.is_none() && !found.is_empty(), record)
        }
        Command::Extend { center, mandatory } => {
            let b = required_boundary(g)?;
            let Some(e) = is_disc_planar(h, &b, false)? else {
                return Err(Usage("graph has no disc embedding with the boundary on the outer face".into()));
            };
            let Some(wheel) = wheel_at(&e, *center)?.wheel() else {
                return Err(Usage(format!("no wheel at {center} in the embedding found")));
            };
            let s: VertexSet = mandatory.iter().collect();
            match is_extendable(&e, &wheel, &b, s)? {
                Extension::Paths(p) => (true, json!({ "graph": g6, "wheel": wheel, "extendable": true, "paths": p.paths })),
                Extension::Blocked { cut } => (
                    false,
                    json!({ "graph": g6, "wheel": wheel, "extendable": false,
                            "cut": cut.vertices.to_vec(), "direct_edges": cut.direct_edges }),
                ),
            }
        }
        Command::Linkage => {
            let t = g.terminals.as_deref().unwrap_or_default();
            let terminals: [usize; 4] =
                t.try_into().map_err(|_| Usage("--terminals needs exactly four vertices s1,s2,t1,t2".into()))?;
            let inst = LinkageInstance::new(h.clone(), terminals)?;
            let r = solve_two_linkage(&inst)?;
            let paths = matches!(r, LinkageResult::Paths(_));
            (paths, json!({ "graph": g6, "terminals": terminals, "result": r.to_json() }))
        }
        Command::K5 => match find_k5_subdivision(h)? {
            Some(c) => (true, json!({ "graph": g6, "k5_subdivision": true, "certificate": c.to_json() })),
            None => (false, json!({ "graph": g6, "k5_subdivision": false })),
        },
        Command::Color { k } => match k_color(h, *k)? {
            Some(c) => (true, json!({ "graph": g6, "colorable": true, "k": k, "coloring": c.colors })),
            None => (false, json!({ "graph": g6, "colorable": false, "k": k })),
        },
        Command::Obstructions { .. } | Command::Verify { .. } => unreachable!("handled by run"),
    })
}

fn required_boundary(g: &Global) -> Result<Vec<usize>, Usage> {
    g.boundary.clone().ok_or_else(|| Usage("--boundary is required".into()))
}

fn read_graphs(g: &Global) -> Result<Vec<Graph>, Usage> {
    let path = g.input.as_deref().unwrap_or("-");
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(Error::from)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{path}: {e}")))?;
    }
    if matches!(g.format, Some(Format::Json)) && !text.trim_start().starts_with(['[', '{']) {
        return Err(Usage("--format json but the input is not JSON".into()));
    }
    let graphs = match g.format {
        None | Some(Format::Json) => parse_corpus(&text)?,
        Some(Format::Graph6) => {
            text.lines().map(str::trim).filter(|l| !l.is_empty()).map(parse_graph6).collect::<Result<_, _>>()?
        }
    };
    if graphs.is_empty() {
        return Err(Usage(format!("no graphs in {path}")));
    }
    Ok(graphs)
}

struct Output {
    compact: bool,
    records: Vec<Value>,
}

impl Output {
    fn push(&mut self, v: Value) {
        self.records.push(v);
    }

    fn flush(self) {
        if self.compact {
            for r in &self.records {
                println!("{r}");
            }
        } else if self.records.len() == 1 {
            println!("{}", serde_json::to_string_pretty(&self.records[0]).expect("values serialize"));
        } else {
            println!("{}", serde_json::to_string_pretty(&self.records).expect("values serialize"));
        }
    }
}
