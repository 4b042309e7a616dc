use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use taut_core::ar::{tau, tau_inverse};
use taut_core::document::Document;
use taut_core::error::Error;
use taut_core::extension::{
    compare_hasse, one_point_extension, prop34_data, theorem31_check, transfer_homs, SplitExtension,
};
use taut_core::linalg::set_prime;
use taut_core::presentation::{to_dsl, Algebra};
use taut_core::rep::{cosyzygy, loewy_label, set_seed, Representation};
use taut_core::tautilt::{export_dot, hasse, HasseQuiver, SttPair, Verdict};

mod table;

use table::Table;

#[derive(Parser, Debug)]
#[command(
    name = "taut",
    version,
    about = "Support τ-tilting pairs and their transfer along split-by-nilpotent extensions"
)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunConfig {
    /// Characteristic of the ground field.
    #[arg(long, global = true, default_value_t = 32003)]
    prime: u64,
    /// Seed for the randomized splitting steps.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 10_000)]
    node_cap: usize,
    /// Longest path explored when closing the ideal.
    #[arg(long, global = true, default_value_t = 30)]
    max_len: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a file and build every algebra and extension in it.
    Validate { file: PathBuf },
    /// τM, τ⁻¹M and Ω⁻¹M in Loewy notation.
    Tau {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        module: String,
    },
    #[command(subcommand)]
    Stt(SttCommand),
    #[command(subcommand)]
    Ext(ExtCommand),
    #[command(subcommand)]
    Ope(OpeCommand),
}

#[derive(Subcommand, Debug)]
enum SttCommand {
    /// All basic support τ-tilting pairs, one per line.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// The Hasse quiver, as Graphviz source.
    Hasse {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<String>,
        /// Output file; stdout if omitted.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Draw the pairs that transfer along this extension dashed.
        #[arg(long, value_name = "EXT")]
        highlight_transfer: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum ExtCommand {
    /// Transfer table for one pair or for every pair of the base.
    Check {
        file: PathBuf,
        #[arg(long)]
        ext: String,
        /// `T;P` as module expressions over the base, e.g. `P(2) + S(3); P(1)`.
        #[arg(long, conflicts_with = "all")]
        pair: Option<String>,
        #[arg(long)]
        all: bool,
        /// Use τ⁻¹Ω⁻¹T in place of T ⊗ E.
        #[arg(long)]
        cluster_tilted: bool,
    },
    /// Match the transferring parts of the two Hasse quivers.
    CompareHasse {
        file: PathBuf,
        #[arg(long)]
        ext: String,
        #[arg(long)]
        dot_base: Option<PathBuf>,
        #[arg(long)]
        dot_total: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum OpeCommand {
    /// Print the one-point extension Λ[M] in the description language.
    Build {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        module: String,
        #[arg(long, default_value = "a")]
        vertex: String,
    },
}

enum Failure {
    Usage(String),
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Core(e) => match e {
                Error::NodeCapExceeded(_) => 3,
                Error::TheoremViolation(_) | Error::MismatchedArrow(_) | Error::MutationAmbiguous(_) => 4,
                _ => 2,
            },
        }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let file = command_file(&cli.command).display().to_string();
            match &f {
                Failure::Usage(m) | Failure::Input(m) => eprintln!("taut: {m}"),
                Failure::Core(Error::Parse(p)) => eprintln!("{file}:{p}"),
                Failure::Core(e @ (Error::TheoremViolation(_) | Error::MismatchedArrow(_))) => {
                    eprintln!("THEOREM VIOLATION: {e}")
                }
                Failure::Core(e) => eprintln!("taut: {file}: {e}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn command_file(c: &Command) -> &Path {
    match c {
        Command::Validate { file } | Command::Tau { file, .. } => file,
        Command::Stt(SttCommand::Enumerate { file, .. } | SttCommand::Hasse { file, .. }) => file,
        Command::Ext(ExtCommand::Check { file, .. } | ExtCommand::CompareHasse { file, .. }) => file,
        Command::Ope(OpeCommand::Build { file, .. }) => file,
    }
}

fn run(cli: &Cli) -> Outcome {
    let cfg = &cli.config;
    set_prime(cfg.prime)?;
    set_seed(cfg.seed);
    let doc = load(command_file(&cli.command), cfg.max_len)?;
    if cfg.format == Format::Dot && !matches!(cli.command, Command::Stt(SttCommand::Hasse { .. })) {
        return Err(Failure::Usage("--format dot only applies to `stt hasse`".into()));
    }
    match &cli.command {
        Command::Validate { .. } => validate(&doc, cfg),
        Command::Tau { algebra, module, .. } => tau_cmd(&doc, cfg, algebra.as_deref(), module),
        Command::Stt(SttCommand::Enumerate { algebra, .. }) => enumerate(&doc, cfg, algebra.as_deref()),
        Command::Stt(SttCommand::Hasse { algebra, dot, highlight_transfer, .. }) => {
            hasse_cmd(&doc, cfg, algebra.as_deref(), dot.as_deref(), highlight_transfer.as_deref())
        }
        Command::Ext(ExtCommand::Check { ext, pair, all, cluster_tilted, .. }) => {
            if pair.is_none() && !all {
                return Err(Failure::Usage("`ext check` needs --pair or --all".into()));
            }
            ext_check(&doc, cfg, doc.extension(ext)?, pair.as_deref(), *cluster_tilted)
        }
        Command::Ext(ExtCommand::CompareHasse { ext, dot_base, dot_total, .. }) => {
            compare_cmd(cfg, doc.extension(ext)?, dot_base.as_deref(), dot_total.as_deref())
        }
        Command::Ope(OpeCommand::Build { algebra, module, vertex, .. }) => {
            let lambda = pick(&doc, algebra.as_deref())?;
            let m = doc.module(lambda, module)?;
            let op = one_point_extension(lambda, &m, vertex, cfg.max_len)?;
            print!("{}", to_dsl(op.ext.total()));
            Ok(())
        }
    }
}

fn pick<'a>(doc: &'a Document, name: Option<&str>) -> Outcome<&'a Algebra> {
    if name.is_none() && doc.algebras().len() > 1 {
        let names: Vec<&str> = doc.algebras().iter().map(|a| a.name()).collect();
        return Err(Failure::Usage(format!("several algebras declared ({}), pass --algebra", names.join(", "))));
    }
    Ok(doc.algebra_or_only(name)?)
}

fn load(path: &Path, max_len: usize) -> Outcome<Document> {
    let src = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Document::parse(&src, max_len)?)
}

fn write_out(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_json(v: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn label(m: &Representation) -> String {
    loewy_label(m).unwrap_or_else(|_| "?".into())
}

fn validate(doc: &Document, cfg: &RunConfig) -> Outcome {
    #[derive(Serialize)]
    struct AlgebraInfo {
        name: String,
        vertices: usize,
        arrows: usize,
        relations: usize,
        dim: usize,
        loewy_length: usize,
    }
    #[derive(Serialize)]
    struct ExtensionInfo {
        name: String,
        base: String,
        total: String,
        e_dim: usize,
    }
    let algebras: Vec<AlgebraInfo> = doc
        .algebras()
        .iter()
        .map(|a| AlgebraInfo {
            name: a.name().to_string(),
            vertices: a.vertex_count(),
            arrows: a.quiver().arrows().len(),
            relations: a.relations().len(),
            dim: a.dim(),
            loewy_length: a.loewy_length(),
        })
        .collect();
    let extensions: Vec<ExtensionInfo> = doc
        .extensions()
        .iter()
        .map(|e| ExtensionInfo {
            name: e.name().to_string(),
            base: e.base().name().to_string(),
            total: e.total().name().to_string(),
            e_dim: e.e_dim(),
        })
        .collect();
    if cfg.format == Format::Json {
        print_json(&serde_json::json!({ "algebras": algebras, "extensions": extensions }));
        return Ok(());
    }
    for a in &algebras {
        println!(
            "algebra {}: {} vertices, {} arrows, {} relations, dim {}, Loewy length {}",
            a.name, a.vertices, a.arrows, a.relations, a.dim, a.loewy_length
        );
    }
    for e in &extensions {
        println!("extension {}: {} ⊂ {}, dim E = {}", e.name, e.base, e.total, e.e_dim);
    }
    Ok(())
}

fn tau_cmd(doc: &Document, cfg: &RunConfig, algebra: Option<&str>, module: &str) -> Outcome {
    let alg = pick(doc, algebra)?;
    let m = doc.module(alg, module)?;
    let rows = [
        ("M", label(&m)),
        ("τM", label(&tau(&m)?)),
        ("τ⁻¹M", label(&tau_inverse(&m)?)),
        ("Ω⁻¹M", label(&cosyzygy(&m))),
    ];
    if cfg.format == Format::Json {
        let obj: serde_json::Map<String, serde_json::Value> =
            rows.iter().map(|(k, v)| (k.to_string(), serde_json::Value::from(v.clone()))).collect();
        print_json(&obj);
    } else {
        for (k, v) in rows {
            println!("{k} = {v}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// Enough of a representation to rebuild it exactly.
#[derive(Serialize)]
struct ModuleJson {
    dims: Vec<usize>,
    maps: Vec<MatrixJson>,
}

impl ModuleJson {
    fn new(m: &Representation) -> ModuleJson {
        ModuleJson {
            dims: m.dims().to_vec(),
            maps: m
                .maps()
                .iter()
                .map(|a| MatrixJson {
                    rows: a.rows(),
                    cols: a.cols(),
                    entries: a.entries().iter().map(|x| x.value()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct PairJson {
    #[serde(rename = "T")]
    t: Vec<String>,
    #[serde(rename = "P")]
    p: Vec<String>,
    verdict: String,
    #[serde(rename = "homTE")]
    hom_te: Option<usize>,
    #[serde(rename = "homPE")]
    hom_pe: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    induced: Option<InducedJson>,
    #[serde(rename = "tensorE", skip_serializing_if = "Option::is_none")]
    tensor_e: Option<String>,
    modules: Vec<ModuleJson>,
}

#[derive(Serialize)]
struct InducedJson {
    #[serde(rename = "T")]
    t: Vec<String>,
    #[serde(rename = "P")]
    p: Vec<String>,
    verdict: String,
}

fn p_names(pair: &SttPair) -> Vec<String> {
    let q = pair.algebra().quiver();
    pair.p_vertices().iter().map(|&v| q.vertex_name(v).to_string()).collect()
}

fn verdict_text(v: &Verdict) -> String {
    match v.rejection {
        None => "stt".into(),
        Some(r) => r.to_string(),
    }
}

fn enumerate(doc: &Document, cfg: &RunConfig, algebra: Option<&str>) -> Outcome {
    let alg = pick(doc, algebra)?;
    let h = hasse(alg, cfg.node_cap)?;
    if cfg.format == Format::Json {
        let pairs: Vec<PairJson> = h
            .nodes()
            .iter()
            .map(|n| PairJson {
                t: n.summand_labels(),
                p: p_names(n),
                verdict: "stt".into(),
                hom_te: None,
                hom_pe: None,
                induced: None,
                tensor_e: None,
                modules: n.summands().iter().map(ModuleJson::new).collect(),
            })
            .collect();
        print_json(&serde_json::json!({ "algebra": alg.name(), "pairs": pairs }));
        return Ok(());
    }
    let mut t = Table::new(&["#", "T", "P"]);
    for (i, n) in h.nodes().iter().enumerate() {
        let p = if n.p_vertices().is_empty() { "0".into() } else { n.p_label() };
        t.row(vec![format!("T{}", i + 1), n.t_label(), p]);
    }
    print!("{t}");
    Ok(())
}

/// The Hasse quiver of whichever side of `ext` `alg` is, with the
/// transferring nodes marked.
fn transfer_view(ext: &SplitExtension, alg: &Algebra, cap: usize) -> Outcome<(HasseQuiver, Vec<bool>)> {
    let cmp = compare_hasse(ext, cap)?;
    if alg.same(ext.base()) {
        let lit = cmp.base_highlight();
        Ok((cmp.base, lit))
    } else if alg.same(ext.total()) {
        let lit = cmp.total_highlight();
        Ok((cmp.total, lit))
    } else {
        Err(Failure::Usage(format!("{} is neither side of {}", alg.name(), ext.name())))
    }
}

fn hasse_cmd(
    doc: &Document,
    cfg: &RunConfig,
    algebra: Option<&str>,
    dot: Option<&Path>,
    highlight: Option<&str>,
) -> Outcome {
    let ext = highlight.map(|e| doc.extension(e)).transpose()?;
    let alg = match (algebra, ext) {
        (None, Some(e)) => e.base(),
        _ => pick(doc, algebra)?,
    };
    let (h, lit) = match ext {
        Some(e) => transfer_view(e, alg, cfg.node_cap)?,
        None => {
            let h = hasse(alg, cfg.node_cap)?;
            let n = h.nodes().len();
            (h, vec![false; n])
        }
    };
    let marked = |i: usize| lit[i];
    let text = export_dot(&h, ext.map(|_| &marked as &dyn Fn(usize) -> bool));
    match dot {
        Some(path) => {
            write_out(path, &text)?;
            if cfg.format == Format::Json {
                print_json(&serde_json::json!({
                    "algebra": alg.name(),
                    "nodes": h.nodes().len(),
                    "arrows": h.arrows().len(),
                    "highlighted": lit.iter().filter(|&&b| b).count(),
                }));
            } else {
                println!("{}: {} nodes, {} arrows", alg.name(), h.nodes().len(), h.arrows().len());
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn ext_check(
    doc: &Document,
    cfg: &RunConfig,
    ext: &SplitExtension,
    pair: Option<&str>,
    cluster_tilted: bool,
) -> Outcome {
    let base = ext.base();
    let inputs: Vec<(Representation, Representation)> = match pair {
        Some(spec) => {
            let (t, p) = spec.split_once(';').unwrap_or((spec, "0"));
            let p = if p.trim().is_empty() { "0" } else { p };
            vec![(doc.module(base, t)?, doc.module(base, p)?)]
        }
        None => hasse(base, cfg.node_cap)?.nodes().iter().map(|n| (n.t().clone(), n.p_module())).collect(),
    };

    let mut rows = Vec::new();
    for (i, (t, p)) in inputs.iter().enumerate() {
        let r = theorem31_check(ext, t, p)?;
        let (te, hom_te, hom_pe, predicted) = if cluster_tilted {
            let d = prop34_data(r.base.pair.t())?;
            let (a, b) = transfer_homs(&r.base.pair, &d)?;
            let predicted = r.base.is_stt() && a == 0 && b == 0;
            if predicted != r.induced.is_stt() {
                return Err(Error::TheoremViolation(format!(
                    "{}: τ⁻¹Ω⁻¹T predicts {predicted}, direct check says {} (is {} tilted?)",
                    r.base.pair.label(),
                    r.induced.is_stt(),
                    base.name()
                ))
                .into());
            }
            (d, a, b, predicted)
        } else {
            (r.tensor_e.clone(), r.hom_te, r.hom_pe, r.predicted())
        };
        let verdict = if !r.base.is_stt() {
            format!("not stt: {}", verdict_text(&r.base))
        } else if hom_pe != 0 {
            "fails: Hom(P, T⊗E) ≠ 0".into()
        } else if hom_te != 0 {
            "fails: Hom(T⊗E, τT) ≠ 0".into()
        } else {
            debug_assert!(predicted);
            "transfers".into()
        };
        rows.push((i, r, te, hom_te, hom_pe, verdict));
    }

    let te_head = if cluster_tilted { "τ⁻¹Ω⁻¹T" } else { "T⊗E" };
    if cfg.format == Format::Json {
        let pairs: Vec<PairJson> = rows
            .iter()
            .map(|(_, r, te, a, b, v)| PairJson {
                t: r.base.pair.summand_labels(),
                p: p_names(&r.base.pair),
                verdict: v.clone(),
                hom_te: Some(*a),
                hom_pe: Some(*b),
                induced: Some(InducedJson {
                    t: r.induced.pair.summand_labels(),
                    p: p_names(&r.induced.pair),
                    verdict: verdict_text(&r.induced),
                }),
                tensor_e: Some(label(te)),
                modules: r.base.pair.summands().iter().map(ModuleJson::new).collect(),
            })
            .collect();
        print_json(&serde_json::json!({
            "algebra": base.name(),
            "extension": ext.name(),
            "total": ext.total().name(),
            "pairs": pairs,
        }));
        return Ok(());
    }
    let hom_te_head = format!("Hom({te_head}, τT)");
    let hom_pe_head = format!("Hom(P, {te_head})");
    let mut t = Table::new(&["#", "T", "P", "T̃", te_head, &hom_te_head, &hom_pe_head, "verdict"]);
    for (i, r, te, a, b, v) in &rows {
        let pair = &r.base.pair;
        let p = if pair.p_vertices().is_empty() { "0".into() } else { pair.p_label() };
        let tt = r.induced.pair.t_label();
        t.row(vec![format!("T{}", i + 1), pair.t_label(), p, tt, label(te), a.to_string(), b.to_string(), v.clone()]);
    }
    print!("{t}");
    Ok(())
}

fn compare_cmd(cfg: &RunConfig, ext: &SplitExtension, dot_base: Option<&Path>, dot_total: Option<&Path>) -> Outcome {
    let cmp = compare_hasse(ext, cfg.node_cap)?;
    let (bl, tl) = (cmp.base_highlight(), cmp.total_highlight());
    if let Some(path) = dot_base {
        write_out(path, &export_dot(&cmp.base, Some(&|i: usize| bl[i])))?;
    }
    if let Some(path) = dot_total {
        write_out(path, &export_dot(&cmp.total, Some(&|i: usize| tl[i])))?;
    }
    let matching: Vec<(String, String)> =
        cmp.nodes.iter().map(|&(i, j)| (cmp.base.nodes()[i].label(), cmp.total.nodes()[j].label())).collect();
    if cfg.format == Format::Json {
        print_json(&serde_json::json!({
            "extension": ext.name(),
            "base": { "algebra": ext.base().name(), "nodes": cmp.base.nodes().len(), "arrows": cmp.base.arrows().len() },
            "total": { "algebra": ext.total().name(), "nodes": cmp.total.nodes().len(), "arrows": cmp.total.arrows().len() },
            "fQ": { "nodes": cmp.nodes.len(), "arrows": cmp.arrows.len() },
            "matching": matching,
            "mismatches": 0,
        }));
        return Ok(());
    }
    println!(
        "{}: {} nodes, {} arrows; {}: {} nodes, {} arrows",
        ext.base().name(),
        cmp.base.nodes().len(),
        cmp.base.arrows().len(),
        ext.total().name(),
        cmp.total.nodes().len(),
        cmp.total.arrows().len()
    );
    println!("fQ: {} nodes, {} arrows on each side, 0 mismatches", cmp.nodes.len(), cmp.arrows.len());
    let mut t = Table::new(&[ext.base().name(), ext.total().name()]);
    for (a, b) in matching {
        t.row(vec![a, b]);
    }
    print!("{t}");
    Ok(())
}
