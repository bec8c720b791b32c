use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use blockerlab::bipartite::{bipartition_certificate, solve_bipartite_contraction_blocker};
use blockerlab::blocker::{BlockerQuery, BlockerSet, Operation};
use blockerlab::cotree::build_cotree;
use blockerlab::graph::io::{parse_graph, write_graph};
use blockerlab::graph::{recognize_bipartite, recognize_chordal, recognize_cograph, Graph};
use blockerlab::mono::{
    min_mono_edges_deficiency, min_mono_edges_fixed_h, mono_to_edge_deletion_witness, Colouring,
};
use blockerlab::oracle::{
    brute_blocker, graph_catalogue, GraphClass, SearchOptions, DEFAULT_BUDGET,
};
use blockerlab::params::{
    alpha_bipartite, alpha_chordal, alpha_exact, chi_exact, mu_bipartite, omega_exact,
    tau_from_alpha, ParameterKind, ParameterValue,
};
use blockerlab::reductions::{
    build_chordal_gadget, build_mss_gadget, build_vc_gadget, parse_mss, parse_sat, write_mss,
    write_sat, GadgetMap,
};
use blockerlab::report::{
    digest_text, graph_digest, verify, BlockerReport, CatalogueReport, CotreeReport, MonoReport,
    ParameterReport, ReductionReport, ReportBody, RunReport,
};

const BUDGET_VAR: &str = "BLOCKERLAB_BUDGET";

/// Blocker problems on small graphs: exact solvers, oracles and reduction gadgets.
#[derive(Parser)]
#[command(name = "blockerlab", version)]
struct Cli {
    /// Worker threads for partitioned subset enumeration.
    #[arg(long, default_value_t = 1, global = true)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact parameter value with witness.
    Param {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "auto")]
        class: ParamClass,
        graph: PathBuf,
    },
    /// Cotree of a cograph as an s-expression.
    Cotree { graph: PathBuf },
    /// Decide a blocker instance, using the bipartite solver where it applies.
    Blocker {
        #[command(flatten)]
        q: QueryArgs,
        #[arg(long, value_enum, default_value = "auto")]
        class: BlockerClass,
    },
    /// Minimum monochromatic edges on a cograph.
    #[command(disable_help_flag = true)]
    Mono {
        #[arg(long, value_enum)]
        mode: MonoMode,
        /// Palette size for `fixed-h`.
        #[arg(short = 'h')]
        h: Option<usize>,
        /// Deficiency below χ for `deficiency`.
        #[arg(short = 'd')]
        d: Option<usize>,
        graph: PathBuf,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Build a reduction gadget from a source instance.
    Reduce {
        #[arg(value_enum)]
        reduction: ReduceKind,
        instance: PathBuf,
        /// Cover size to carry over (vc2cb only).
        #[arg(short = 'k')]
        k: Option<usize>,
        /// Also write the gadget graph to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive blocker search.
    Oracle {
        #[command(flatten)]
        q: QueryArgs,
    },
    /// Every connected graph of a class up to n vertices, up to isomorphism.
    Catalogue {
        #[arg(long, value_parser = parse_class)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        /// Recorded in the report; the catalogue itself is exhaustive.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory to write one graph file per member.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a JSON report against its graph.
    Verify {
        report: PathBuf,
        /// Input graph; for reduction reports, the gadget graph.
        graph: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct QueryArgs {
    #[arg(long, value_enum)]
    op: OpArg,
    #[arg(long, value_enum)]
    param: BlockerParam,
    #[arg(short = 'k')]
    k: usize,
    #[arg(short = 'd')]
    d: usize,
    graph: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Alpha,
    Omega,
    Chi,
    Mu,
    Tau,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamClass {
    Auto,
    Bipartite,
    Chordal,
    Cograph,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BlockerClass {
    Auto,
    Bipartite,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Contract,
    DeleteVertices,
    DeleteEdges,
}

#[derive(Clone, Copy, ValueEnum)]
enum BlockerParam {
    Alpha,
    Omega,
    Chi,
}

#[derive(Clone, Copy, ValueEnum)]
enum MonoMode {
    FixedH,
    Deficiency,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    Vc2cb,
    Sat2chordal,
    Mss2mono,
}

impl ReduceKind {
    fn name(self) -> &'static str {
        match self {
            ReduceKind::Vc2cb => "vc2cb",
            ReduceKind::Sat2chordal => "sat2chordal",
            ReduceKind::Mss2mono => "mss2mono",
        }
    }
}

impl From<OpArg> for Operation {
    fn from(o: OpArg) -> Self {
        match o {
            OpArg::Contract => Operation::Contract,
            OpArg::DeleteVertices => Operation::DeleteVertices,
            OpArg::DeleteEdges => Operation::DeleteEdges,
        }
    }
}

impl From<BlockerParam> for ParameterKind {
    fn from(p: BlockerParam) -> Self {
        match p {
            BlockerParam::Alpha => ParameterKind::Alpha,
            BlockerParam::Omega => ParameterKind::Omega,
            BlockerParam::Chi => ParameterKind::Chi,
        }
    }
}

fn parse_class(s: &str) -> Result<GraphClass, String> {
    s.parse::<GraphClass>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let capacity = e.chain().any(|c| {
                c.downcast_ref::<blockerlab::Error>()
                    .is_some_and(|e| e.is_capacity())
            });
            ExitCode::from(if capacity { 3 } else { 2 })
        }
    }
}

struct Ctx {
    opts: SearchOptions,
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if cli.threads == 0 {
        bail!("--threads must be at least 1");
    }
    if cli.threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .context("starting the thread pool")?;
    }
    let ctx = Ctx {
        opts: SearchOptions {
            budget: budget_from_env()?,
            parallel: cli.threads > 1,
        },
    };
    match cli.command {
        Command::Param { kind, class, graph } => cmd_param(kind, class, &graph),
        Command::Cotree { graph } => cmd_cotree(&graph),
        Command::Blocker { q, class } => cmd_blocker(&ctx, &q, class),
        Command::Mono {
            mode, h, d, graph, ..
        } => cmd_mono(mode, h, d, &graph),
        Command::Reduce {
            reduction,
            instance,
            k,
            out,
        } => cmd_reduce(reduction, &instance, k, out.as_deref()),
        Command::Oracle { q } => cmd_oracle(&ctx, &q),
        Command::Catalogue {
            class,
            n,
            seed,
            out,
        } => cmd_catalogue(class, n, seed, out.as_deref()),
        Command::Verify { report, graph } => cmd_verify(&report, graph.as_deref()),
    }
}

fn budget_from_env() -> anyhow::Result<u64> {
    let Ok(raw) = std::env::var(BUDGET_VAR) else {
        return Ok(DEFAULT_BUDGET);
    };
    let raw = raw.trim();
    if let Ok(b) = raw.parse::<u64>() {
        return Ok(b);
    }
    match raw.parse::<f64>() {
        Ok(f) if f.is_finite() && f >= 0.0 && f.fract() == 0.0 && f <= u64::MAX as f64 => {
            Ok(f as u64)
        }
        _ => bail!("{BUDGET_VAR}={raw:?} is not a non-negative integer"),
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = read_text(path)?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(
    subcommand: &str,
    digest: Option<String>,
    start: Instant,
    body: ReportBody,
) -> anyhow::Result<()> {
    let report = RunReport {
        subcommand: subcommand.to_string(),
        input_digest: digest,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        body,
    };
    print_json(&report)
}

/// Pretty JSON on stdout; a closed pipe is not an error.
fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    let res = serde_json::to_writer_pretty(&mut out, value)
        .map_err(std::io::Error::from)
        .and_then(|()| writeln!(out));
    match res {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(e).context("writing the report")
        }
        _ => Ok(()),
    }
}

fn decision(answer: bool) -> ExitCode {
    if answer {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_param(kind: KindArg, class: ParamClass, path: &Path) -> anyhow::Result<ExitCode> {
    let g = load_graph(path)?;
    let start = Instant::now();
    let (class_name, cert) = match class {
        ParamClass::Auto => ("auto", None),
        ParamClass::Bipartite => ("bipartite", Some(recognize_bipartite(&g))),
        ParamClass::Chordal => ("chordal", Some(recognize_chordal(&g))),
        ParamClass::Cograph => ("cograph", Some(recognize_cograph(&g))),
    };
    if let Some(c) = &cert {
        if !c.is_member() {
            bail!("graph is not {class_name}: {c:?}");
        }
    }
    let bip = recognize_bipartite(&g);
    let alpha = || -> anyhow::Result<ParameterValue> {
        if bip.is_member() {
            return Ok(alpha_bipartite(&g, &bip)?);
        }
        let chordal = recognize_chordal(&g);
        if chordal.is_member() {
            return Ok(alpha_chordal(&g, &chordal)?);
        }
        Ok(alpha_exact(&g)?)
    };
    let value = match kind {
        KindArg::Alpha => alpha()?,
        KindArg::Omega => omega_exact(&g)?,
        KindArg::Chi => chi_exact(&g)?,
        KindArg::Tau => tau_from_alpha(&g, &alpha()?)?,
        KindArg::Mu => mu_bipartite(
            &g,
            &bipartition_certificate(&g).context("matching number needs a bipartite graph")?,
        )?,
    };
    value.validate(&g)?;
    let body = ReportBody::Parameter(ParameterReport {
        class: class_name.into(),
        value,
    });
    emit("param", Some(graph_digest(&g)), start, body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_cotree(path: &Path) -> anyhow::Result<ExitCode> {
    let g = load_graph(path)?;
    let start = Instant::now();
    let t = build_cotree(&g)?;
    let body = ReportBody::Cotree(CotreeReport {
        cotree: t.to_string(),
        chi: t.stats().chi[t.root()],
    });
    emit("cotree", Some(graph_digest(&g)), start, body)?;
    Ok(ExitCode::SUCCESS)
}

fn blocker_body(q: &QueryArgs, solver: &str) -> BlockerReport {
    BlockerReport {
        operation: q.op.into(),
        parameter: q.param.into(),
        solver: solver.into(),
        k: q.k,
        d: q.d,
        answer: false,
        witness_edges: None,
        witness_vertices: None,
        minimal: None,
        route: None,
        values: BTreeMap::new(),
    }
}

fn fill_witness(b: &mut BlockerReport, w: Option<BlockerSet>) {
    match w {
        Some(BlockerSet::Edges(e)) => b.witness_edges = Some(e),
        Some(BlockerSet::Vertices(v)) => b.witness_vertices = Some(v),
        None => {}
    }
}

fn cmd_blocker(ctx: &Ctx, q: &QueryArgs, class: BlockerClass) -> anyhow::Result<ExitCode> {
    let g = load_graph(&q.graph)?;
    let op: Operation = q.op.into();
    let param: ParameterKind = q.param.into();
    let fits = op == Operation::Contract && param == ParameterKind::Alpha;
    let use_bipartite = match class {
        BlockerClass::General => false,
        BlockerClass::Bipartite => {
            if !fits {
                bail!("the bipartite solver handles contraction with alpha only");
            }
            bipartition_certificate(&g)?;
            true
        }
        BlockerClass::Auto => fits && recognize_bipartite(&g).is_member() && g.is_connected(),
    };
    if !use_bipartite {
        return run_oracle(ctx, q, g, "blocker");
    }
    let start = Instant::now();
    let out = solve_bipartite_contraction_blocker(&g, q.k, q.d, ctx.opts)?;
    let mut b = blocker_body(q, "bipartite");
    b.answer = out.answer;
    b.route = Some(out.route);
    let after = out.witness.as_ref().map(|w| w.claimed_alpha_after);
    fill_witness(&mut b, out.witness.map(|w| BlockerSet::Edges(w.edges)));
    b.set_values(out.alpha_before, after);
    emit(
        "blocker",
        Some(graph_digest(&g)),
        start,
        ReportBody::Blocker(b),
    )?;
    Ok(decision(out.answer))
}

fn run_oracle(ctx: &Ctx, q: &QueryArgs, g: Graph, subcommand: &str) -> anyhow::Result<ExitCode> {
    let digest = graph_digest(&g);
    let start = Instant::now();
    let query = BlockerQuery::new(g, q.op.into(), q.param.into(), q.k, q.d)?;
    let ans = brute_blocker(&query, ctx.opts)?;
    let mut b = blocker_body(q, "oracle");
    b.answer = ans.answer;
    b.minimal = ans.answer.then_some(ans.minimal);
    fill_witness(&mut b, ans.witness);
    b.set_values(ans.before, ans.after);
    emit(subcommand, Some(digest), start, ReportBody::Blocker(b))?;
    Ok(decision(ans.answer))
}

fn cmd_oracle(ctx: &Ctx, q: &QueryArgs) -> anyhow::Result<ExitCode> {
    let g = load_graph(&q.graph)?;
    run_oracle(ctx, q, g, "oracle")
}

fn cmd_mono(
    mode: MonoMode,
    h: Option<usize>,
    d: Option<usize>,
    path: &Path,
) -> anyhow::Result<ExitCode> {
    let g = load_graph(path)?;
    let start = Instant::now();
    let t = build_cotree(&g)?;
    let chi = t.stats().chi[t.root()];
    let (mode_name, palette, d, (count, colouring)): (
        &str,
        usize,
        Option<usize>,
        (usize, Colouring),
    ) = match mode {
        MonoMode::FixedH => {
            let h = h.context("--mode fixed-h needs -h")?;
            ("fixed-h", h, None, min_mono_edges_fixed_h(&t, h)?)
        }
        MonoMode::Deficiency => {
            let d = d.context("--mode deficiency needs -d")?;
            if d >= chi {
                bail!("deficiency {d} leaves no colours (χ = {chi})");
            }
            (
                "deficiency",
                chi - d,
                Some(d),
                min_mono_edges_deficiency(&t, d)?,
            )
        }
    };
    let deleted = mono_to_edge_deletion_witness(&g, &colouring)?;
    let body = ReportBody::Mono(MonoReport {
        mode: mode_name.into(),
        h: palette,
        d,
        chi,
        min_mono_edges: count,
        colouring: colouring.colours().to_vec(),
        deleted_edges: deleted,
    });
    emit("mono", Some(graph_digest(&g)), start, body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(
    kind: ReduceKind,
    path: &Path,
    k: Option<usize>,
    out: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let text = read_text(path)?;
    let parse_ctx = || format!("parsing {}", path.display());
    let start = Instant::now();
    let (instance, graph, gadget, k, target) = match kind {
        ReduceKind::Vc2cb => {
            let src = parse_graph(&text).with_context(parse_ctx)?;
            let (h, gm) = build_vc_gadget(&src)?;
            (write_graph(&src), h, GadgetMap::Vc(gm), k, None)
        }
        ReduceKind::Sat2chordal => {
            if k.is_some() {
                bail!("-k applies to vc2cb only; the SAT instance carries its own bound");
            }
            let sat = parse_sat(&text).with_context(parse_ctx)?;
            let (h, gm) = build_chordal_gadget(&sat)?;
            (
                write_sat(&sat),
                h,
                GadgetMap::Chordal(gm),
                Some(sat.k()),
                None,
            )
        }
        ReduceKind::Mss2mono => {
            if k.is_some() {
                bail!("-k applies to vc2cb only");
            }
            let mss = parse_mss(&text).with_context(parse_ctx)?;
            let (h, gm) = build_mss_gadget(&mss)?;
            let target = gm.target_display();
            (write_mss(&mss), h, GadgetMap::Mss(gm), None, Some(target))
        }
    };
    let graph_text = write_graph(&graph);
    if let Some(out) = out {
        std::fs::write(out, &graph_text).with_context(|| format!("writing {}", out.display()))?;
    }
    let digest = digest_text(&instance);
    let body = ReportBody::Reduction(ReductionReport {
        reduction: kind.name().into(),
        instance,
        k,
        graph: graph_text,
        gadget,
        target,
    });
    emit("reduce", Some(digest), start, body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalogue(
    class: GraphClass,
    n: usize,
    seed: u64,
    out: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let start = Instant::now();
    let graphs = graph_catalogue(class, n)?;
    let texts: Vec<String> = graphs.iter().map(write_graph).collect();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, t) in texts.iter().enumerate() {
            let file = dir.join(format!("{class}-{i:04}.graph"));
            std::fs::write(&file, t).with_context(|| format!("writing {}", file.display()))?;
        }
    }
    let body = ReportBody::Catalogue(CatalogueReport {
        class,
        n,
        seed,
        count: texts.len(),
        graphs: texts,
    });
    emit("catalogue", None, start, body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(report: &Path, graph: Option<&Path>) -> anyhow::Result<ExitCode> {
    let text = read_text(report)?;
    let report: RunReport =
        serde_json::from_str(&text).context("report is not valid JSON for a run report")?;
    let g = graph.map(load_graph).transpose()?;
    let verdict = verify(&report, g.as_ref())?;
    print_json(&verdict)?;
    for p in &verdict.problems {
        eprintln!("mismatch: {p}");
    }
    Ok(decision(verdict.ok))
}
