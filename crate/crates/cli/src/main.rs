//! `graphoids` command-line front end.
//!
//! Machine-readable output goes to stdout as JSON (or DOT where asked for),
//! a short human summary goes to stderr. Exit codes: 0 when the queried
//! property holds, 1 when it is violated, 2 on input or usage errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand};
use graphoids::distributions::generate::{generate, parse_blocks, GeneratorKind, GeneratorParams};
use graphoids::distributions::Model;
use graphoids::experiment::{run_experiment, ExperimentConfig, Suite};
use graphoids::graphoid::{ClosureCheck, DEFAULT_CLOSURE_CAP};
use graphoids::instantiated::{
    check_propositional_transitivity, check_unification, InstantiatedModel, DEFAULT_PROPTRANS_CAP,
};
use graphoids::network::{parse_ordering, DEFAULT_TRAIL_CAP};
use graphoids::simnet::{compose, SimilarityGraph, DEFAULT_SIMNET_CAP};
use graphoids::unrelatedness::{
    interaction_matrix, pairs, transitivity_violation, verdict_report, PairVerdict, DEFAULT_PARTITION_CAP,
};
use graphoids::{BeliefNetwork, DependencyModel, IndependenceOracle, Triplet, Universe, VarSet};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "graphoids",
    version,
    about = "Independence models, belief networks and unrelatedness checks"
)]
struct Cli {
    /// Suppress the human summary on stderr.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Explicit dependency models.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Probability distributions.
    #[command(subcommand)]
    Dist(DistCmd),
    /// Belief networks.
    #[command(subcommand)]
    Bn(BnCmd),
    /// Unrelatedness of variable pairs.
    #[command(subcommand)]
    Analyze(AnalyzeCmd),
    /// Axiom checks on distributions.
    #[command(subcommand)]
    Axiom(AxiomCmd),
    /// Similarity networks.
    #[command(subcommand)]
    Simnet(SimnetCmd),
    /// Seeded verification suites.
    #[command(subcommand)]
    Experiment(ExperimentCmd),
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Print the closure of a model under the graphoid axioms.
    Close {
        #[arg(long)]
        model: PathBuf,
        /// Largest universe the closure accepts.
        #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
        cap: usize,
    },
    /// Check that a model is closed, printing a violated axiom instance if not.
    Check {
        #[arg(long)]
        model: PathBuf,
    },
}

#[derive(Subcommand)]
enum DistCmd {
    /// Generate a distribution.
    Gen {
        /// spb-random, spb-block-product, gaussian-random, gaussian-block or
        /// named-example:{parity,pair-copy,m1-product,markov-chain}.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Block partition for the block kinds, e.g. `a,b|c,d`.
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long, default_value_t = 16)]
        weight_max: u64,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Decide `I(X, Y; Z)`, or its value-level form with `--at`.
    Indep {
        #[arg(long)]
        dist: PathBuf,
        #[command(flatten)]
        triplet: TripletArgs,
        /// Values for Z, e.g. `c=0,d=1`. Tabular only.
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

#[derive(Subcommand)]
enum BnCmd {
    /// Build a network from a model or distribution along an ordering.
    Build {
        #[command(flatten)]
        source: Source,
        /// Print DOT instead of network JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Decide d-separation of X and Y by Z.
    Dsep {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        triplet: TripletArgs,
        /// Also list every active trail.
        #[arg(long)]
        trails: bool,
    },
    /// Connected components of the network.
    Components {
        #[command(flatten)]
        source: Source,
    },
    /// DOT rendering of the network.
    Dot {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum AnalyzeCmd {
    /// Independence, uncoupledness and disconnectedness of one pair.
    Pair {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Largest universe the partition scan accepts.
        #[arg(long, default_value_t = DEFAULT_PARTITION_CAP)]
        cap: usize,
    },
    /// Every pair, plus separability of the whole model.
    Separability {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = DEFAULT_PARTITION_CAP)]
        cap: usize,
    },
    /// Transitivity of the interaction relation.
    Transitivity {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum AxiomCmd {
    /// Scan every instance of propositional transitivity.
    Proptrans {
        #[arg(long)]
        dist: PathBuf,
        /// Restrict the scan to one pair; every pair otherwise.
        #[arg(long, requires = "b")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
        #[arg(long, default_value_t = DEFAULT_PROPTRANS_CAP)]
        cap: usize,
        /// Allow tabular distributions with zero cells.
        #[arg(long)]
        explore_nonpositive: bool,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Check that Gaussian conditional covariances ignore the conditioning values.
    Unification {
        #[arg(long)]
        dist: PathBuf,
        /// Conditioning values tried for each variable of Z.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "-1,0,1")]
        grid: Vec<f64>,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

#[derive(Subcommand)]
enum SimnetCmd {
    /// Build local networks per similarity edge and compose them.
    Compose {
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        /// Shared ordering, hypothesis first.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SIMNET_CAP)]
        cap: usize,
        /// Print the global network as DOT instead of the report.
        #[arg(long)]
        dot: bool,
    },
    /// Check a similarity graph against a distribution.
    Validate {
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Run one suite.
    Run {
        /// thm1, thm3, thm4, thm5-spb, thm5-gauss, thm6, thm7, lemma2,
        /// lemma8 or counterexamples.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tolerance: Option<f64>,
        /// Overrides every universe-size cap.
        #[arg(long)]
        cap: Option<usize>,
        /// Orderings compared per fixture in thm3.
        #[arg(long)]
        orderings: Option<usize>,
    },
}

/// Where an independence oracle comes from. Dependency models are closed on
/// load.
#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
struct Source {
    /// Dependency model JSON.
    #[arg(long, group = "source")]
    model: Option<PathBuf>,
    /// Distribution JSON.
    #[arg(long, group = "source")]
    dist: Option<PathBuf>,
    /// Belief network JSON.
    #[arg(long, group = "source")]
    net: Option<PathBuf>,
    /// Ordering used when a network is built, e.g. `a,b,c`.
    #[arg(long, conflicts_with = "net")]
    order: Option<String>,
    /// Tolerance for Gaussian distributions.
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Args)]
struct TripletArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    x: Vec<String>,
    #[arg(long, value_delimiter = ',', required = true)]
    y: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    z: Vec<String>,
}

impl TripletArgs {
    fn resolve(&self, u: &Universe) -> anyhow::Result<Triplet> {
        Ok(Triplet::new(u.set(&self.x)?, u.set(&self.y)?, u.set(&self.z)?)?)
    }
}

enum Loaded {
    Model(DependencyModel),
    Dist(Model),
    Net(BeliefNetwork),
}

impl Loaded {
    fn oracle(&self) -> &dyn IndependenceOracle {
        match self {
            Loaded::Model(m) => m,
            Loaded::Dist(d) => d,
            Loaded::Net(n) => n,
        }
    }
}

struct Output {
    stdout: String,
    summary: String,
    holds: bool,
}

impl Output {
    fn json(value: &impl serde::Serialize, summary: String, holds: bool) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("output serializes");
        stdout.push('\n');
        Output { stdout, summary, holds }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_model(path: &Path, cap: usize) -> anyhow::Result<DependencyModel> {
    let m = DependencyModel::from_json(&read(path)?).with_context(|| format!("loading {}", path.display()))?;
    Ok(m.close(cap)?)
}

fn load_dist(path: &Path, tolerance: Option<f64>) -> anyhow::Result<Model> {
    let m = Model::from_json(&read(path)?).with_context(|| format!("loading {}", path.display()))?;
    Ok(match (m, tolerance) {
        (Model::Gaussian(g), Some(t)) => Model::Gaussian(g.with_tolerance(t)),
        (m, _) => m,
    })
}

impl Source {
    fn load(&self) -> anyhow::Result<Loaded> {
        if let Some(p) = &self.model {
            Ok(Loaded::Model(load_model(p, DEFAULT_CLOSURE_CAP)?))
        } else if let Some(p) = &self.dist {
            Ok(Loaded::Dist(load_dist(p, self.tolerance)?))
        } else if let Some(p) = &self.net {
            let net = BeliefNetwork::from_json(&read(p)?).with_context(|| format!("loading {}", p.display()))?;
            Ok(Loaded::Net(net))
        } else {
            bail!("one of --model, --dist or --net is required")
        }
    }

    fn network(&self) -> anyhow::Result<BeliefNetwork> {
        let loaded = self.load()?;
        if let Loaded::Net(net) = loaded {
            return Ok(net);
        }
        let oracle = loaded.oracle();
        let ordering = match &self.order {
            Some(spec) => parse_ordering(oracle.universe(), spec)?,
            None => oracle.universe().ids().collect(),
        };
        Ok(BeliefNetwork::build(oracle, &ordering)?)
    }
}

fn edge_list(net: &BeliefNetwork) -> Vec<String> {
    let u = net.universe();
    net.edges()
        .iter()
        .map(|e| format!("{}->{}", u.name(e.from), u.name(e.to)))
        .collect()
}

fn set_json(u: &Universe, s: VarSet) -> serde_json::Value {
    json!(u.set_names(s))
}

fn model_cmd(cmd: ModelCmd) -> anyhow::Result<Output> {
    match cmd {
        ModelCmd::Close { model, cap } => {
            let closed = load_model(&model, cap)?;
            let summary = format!("closure has {} non-trivial statements", closed.len());
            Ok(Output::json(&closed.to_file(), summary, true))
        }
        ModelCmd::Check { model } => {
            let m = DependencyModel::from_json(&read(&model)?)?;
            match m.check_closed() {
                ClosureCheck::Closed => Ok(Output::json(&json!({ "closed": true }), "model is closed".into(), true)),
                ClosureCheck::Violated(v) => {
                    let summary = format!("not closed: {} demands {}", v.axiom, v.missing.display(m.universe()));
                    let body = json!({ "closed": false, "violation": v.to_json(m.universe()) });
                    Ok(Output::json(&body, summary, false))
                }
            }
        }
    }
}

fn dist_cmd(cmd: DistCmd) -> anyhow::Result<Output> {
    match cmd {
        DistCmd::Gen {
            kind,
            n,
            seed,
            blocks,
            weight_max,
            epsilon,
            tolerance,
        } => {
            let kind: GeneratorKind = kind.parse()?;
            let mut params = GeneratorParams {
                weight_max,
                epsilon,
                ..GeneratorParams::default()
            };
            if let Some(t) = tolerance {
                params.tolerance = t;
            }
            if let Some(spec) = blocks {
                let universe = match kind {
                    GeneratorKind::GaussianRandom | GeneratorKind::GaussianBlock => Universe::numbered("x", n)?,
                    _ => Universe::letters(n)?,
                };
                params.blocks = Some(parse_blocks(&spec, &universe)?);
            }
            let model = generate(kind, n, seed, &params)?;
            let mut stdout = model.to_json();
            stdout.push('\n');
            let summary = format!("{kind} over {} variables, seed {seed}", model.universe().len());
            Ok(Output {
                stdout,
                summary,
                holds: true,
            })
        }
        DistCmd::Indep {
            dist,
            triplet,
            at,
            tolerance,
        } => {
            let model = load_dist(&dist, tolerance)?;
            let u = model.universe().clone();
            let t = triplet.resolve(&u)?;
            let independent = match (&at, &model) {
                (None, _) => model.independent_sets(t.x(), t.y(), t.z())?,
                (Some(spec), Model::Tabular(p)) => {
                    let pairs = parse_assignment(spec)?;
                    p.independent_at(t.x(), t.y(), t.z(), &p.assignment(&pairs)?)?
                }
                (Some(_), Model::Gaussian(_)) => bail!("--at needs a tabular distribution"),
            };
            let mut body = json!({
                "X": set_json(&u, t.x()),
                "Y": set_json(&u, t.y()),
                "Z": set_json(&u, t.z()),
                "independent": independent,
            });
            if let Some(spec) = &at {
                body["at"] = json!(spec);
            }
            let summary = format!(
                "{} {}",
                t.display(&u),
                if independent { "holds" } else { "does not hold" }
            );
            Ok(Output::json(&body, summary, independent))
        }
    }
}

/// Splits `c=(1,0),d=1` on the commas outside parentheses.
fn parse_assignment(spec: &str) -> anyhow::Result<Vec<(String, String)>> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in spec.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&spec[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&spec[start..]);
    parts
        .into_iter()
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| anyhow!("expected name=value, got `{kv}`"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn bn_cmd(cmd: BnCmd) -> anyhow::Result<Output> {
    match cmd {
        BnCmd::Build { source, dot } => {
            let net = source.network()?;
            let summary = format!("edges: {}", edge_list(&net).join(", "));
            if dot {
                Ok(Output {
                    stdout: net.to_dot(),
                    summary,
                    holds: true,
                })
            } else {
                Ok(Output::json(&net.to_file(), summary, true))
            }
        }
        BnCmd::Dsep {
            source,
            triplet,
            trails,
        } => {
            let net = source.network()?;
            let u = net.universe();
            let t = triplet.resolve(u)?;
            let separated = net.d_separated(t.x(), t.y(), t.z())?;
            let mut body = json!({
                "X": set_json(u, t.x()),
                "Y": set_json(u, t.y()),
                "Z": set_json(u, t.z()),
                "d_separated": separated,
            });
            if trails {
                let found = net.enumerate_active_trails(t.x(), t.y(), t.z(), DEFAULT_TRAIL_CAP)?;
                body["active_trails"] = json!(found.iter().map(|tr| tr.display(u).to_string()).collect::<Vec<_>>());
            }
            let summary = format!(
                "{} {} d-separated",
                t.display(u),
                if separated { "is" } else { "is not" }
            );
            Ok(Output::json(&body, summary, separated))
        }
        BnCmd::Components { source } => {
            let net = source.network()?;
            let u = net.universe();
            let comps: Vec<Vec<String>> = net.connected_components().into_iter().map(|c| u.set_names(c)).collect();
            let summary = comps
                .iter()
                .map(|c| format!("{{{}}}", c.join(",")))
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Output::json(&json!({ "components": comps }), summary, true))
        }
        BnCmd::Dot { source } => {
            let net = source.network()?;
            Ok(Output {
                stdout: net.to_dot(),
                summary: format!("{} edges", net.edges().len()),
                holds: true,
            })
        }
    }
}

fn analyze_cmd(cmd: AnalyzeCmd) -> anyhow::Result<Output> {
    match cmd {
        AnalyzeCmd::Pair { source, a, b, cap } => {
            let loaded = source.load()?;
            let oracle = loaded.oracle();
            let u = oracle.universe();
            let (a, b) = (u.id(&a)?, u.id(&b)?);
            if a == b {
                bail!("--a and --b must name different variables");
            }
            let v = PairVerdict::compute(oracle, a, b, cap)?;
            let out = v.to_json(u);
            let summary = format!(
                "{} / {}: totally independent {}, totally uncoupled {}, totally disconnected {}",
                out.a, out.b, out.totally_independent, out.totally_uncoupled, out.totally_disconnected
            );
            Ok(Output::json(&out, summary, v.consistent()))
        }
        AnalyzeCmd::Separability { source, cap } => {
            let loaded = source.load()?;
            let report = verdict_report(loaded.oracle(), cap)?;
            let mut summary = String::from("pair      indep  uncoupled  disconnected\n");
            for p in &report.pairs {
                let _ = writeln!(
                    summary,
                    "{:<9} {:<6} {:<10} {}",
                    format!("{},{}", p.a, p.b),
                    p.totally_independent,
                    p.totally_uncoupled,
                    p.totally_disconnected
                );
            }
            let _ = write!(
                summary,
                "separable: {}, transitive: {}",
                report.separable, report.transitive
            );
            let holds = report.separable;
            Ok(Output::json(&report, summary, holds))
        }
        AnalyzeCmd::Transitivity { source } => {
            let loaded = source.load()?;
            let oracle = loaded.oracle();
            let u = oracle.universe();
            let matrix = interaction_matrix(oracle);
            let interacting: Vec<[&str; 2]> = pairs(u)
                .into_iter()
                .filter(|(a, b)| matrix[a.index()][b.index()])
                .map(|(a, b)| [u.name(a), u.name(b)])
                .collect();
            let violation = transitivity_violation(oracle).map(|(a, b, c)| [u.name(a), u.name(b), u.name(c)]);
            let summary = match &violation {
                None => "interaction is transitive".to_string(),
                Some([a, b, c]) => format!("{a} interacts with {b}, {b} with {c}, but not {a} with {c}"),
            };
            let body = json!({
                "transitive": violation.is_none(),
                "interacting_pairs": interacting,
                "counterexample": violation,
            });
            Ok(Output::json(&body, summary, violation.is_none()))
        }
    }
}

fn axiom_cmd(cmd: AxiomCmd) -> anyhow::Result<Output> {
    match cmd {
        AxiomCmd::Proptrans {
            dist,
            a,
            b,
            cap,
            explore_nonpositive,
            tolerance,
        } => {
            let model = load_dist(&dist, tolerance)?;
            if let Model::Tabular(p) = &model {
                if !explore_nonpositive && !p.is_strictly_positive() {
                    bail!("distribution has zero cells; pass --explore-nonpositive to scan it anyway");
                }
            }
            let u = model.universe().clone();
            let targets = match (a, b) {
                (Some(a), Some(b)) => vec![(u.id(&a)?, u.id(&b)?)],
                _ => pairs(&u),
            };
            let m = InstantiatedModel::from(model);
            let reports = targets
                .into_iter()
                .map(|(a, b)| check_propositional_transitivity(&m, a, b, cap))
                .collect::<graphoids::Result<Vec<_>>>()?;
            let pass = reports.iter().all(|r| r.pass);
            let hits: u64 = reports.iter().map(|r| r.antecedent_hits).sum();
            let checked: u64 = reports.iter().map(|r| r.checked_instances).sum();
            let skipped: u64 = reports.iter().map(|r| r.skipped).sum();
            let summary = format!(
                "{} pairs, {checked} instances, {hits} with all antecedents, {skipped} skipped: {}",
                reports.len(),
                if pass { "holds" } else { "violated" }
            );
            Ok(Output::json(
                &json!({ "pass": pass, "reports": reports }),
                summary,
                pass,
            ))
        }
        AxiomCmd::Unification {
            dist,
            grid,
            max_size,
            tolerance,
        } => {
            let g = load_dist(&dist, tolerance)?.into_gaussian()?;
            let report = check_unification(&g, &grid, max_size)?;
            let summary = format!(
                "{} conditioning sets, max deviation {:e}",
                report.checked_sets, report.max_deviation
            );
            let pass = report.pass;
            Ok(Output::json(&report, summary, pass))
        }
    }
}

fn simnet_cmd(cmd: SimnetCmd) -> anyhow::Result<Output> {
    match cmd {
        SimnetCmd::Compose {
            dist,
            graph,
            order,
            cap,
            dot,
        } => {
            let p = load_dist(&dist, None)?.into_tabular()?;
            let graph = SimilarityGraph::from_json(&read(&graph)?)?;
            let ordering = order.map(|o| parse_ordering(p.universe(), &o)).transpose()?;
            let (global, report) = compose(&p, &graph, ordering.as_deref(), cap)?;
            let summary = format!(
                "{} local networks, global edges: {}; equivalence {}",
                report.locals.len(),
                report
                    .global
                    .edges
                    .iter()
                    .map(|[a, b]| format!("{a}->{b}"))
                    .collect::<Vec<_>>()
                    .join(", "),
                match (report.equivalence_expected, report.equivalent) {
                    (_, true) => "holds",
                    (true, false) => "violated",
                    (false, false) => "fails (not expected: restriction is not binary and positive)",
                }
            );
            let pass = report.pass();
            if dot {
                Ok(Output {
                    stdout: global.to_dot(),
                    summary,
                    holds: pass,
                })
            } else {
                Ok(Output::json(&report, summary, pass))
            }
        }
        SimnetCmd::Validate { dist, graph } => {
            let p = load_dist(&dist, None)?.into_tabular()?;
            let graph = SimilarityGraph::from_json(&read(&graph)?)?;
            let resolved = graph.resolve(&p)?;
            let domain = p.domain(resolved.h);
            let positive = p.is_strictly_positive();
            let body = json!({
                "hypothesis": graph.hypothesis,
                "pairs": resolved.pairs.iter().map(|&(i, j)| [&domain[i], &domain[j]]).collect::<Vec<_>>(),
                "strictly_positive": positive,
            });
            let summary = format!(
                "{} similarity edges over {} values{}",
                resolved.pairs.len(),
                domain.len(),
                if positive { "" } else { "; distribution has zero cells" }
            );
            Ok(Output::json(&body, summary, positive))
        }
    }
}

fn experiment_cmd(cmd: ExperimentCmd) -> anyhow::Result<Output> {
    let ExperimentCmd::Run {
        suite,
        n,
        trials,
        seed,
        tolerance,
        cap,
        orderings,
    } = cmd;
    let suite: Suite = suite.parse()?;
    let mut cfg = ExperimentConfig::new(suite, n, trials, seed);
    if let Some(t) = tolerance {
        cfg.tolerance = t;
    }
    if let Some(c) = cap {
        cfg.closure_cap = c;
        cfg.enumeration_cap = c;
        cfg.partition_cap = c;
        cfg.proptrans_cap = c;
    }
    cfg.orderings = orderings;
    let report = run_experiment(&cfg)?;
    let summary = format!(
        "{suite} n={n} trials={} seed={seed}: {} ({} checks, {} antecedent hits, {} skipped) in {:.2}s",
        report.trials.len(),
        if report.pass { "pass" } else { "FAIL" },
        report.checks,
        report.antecedent_hits,
        report.skipped,
        report.wall_time.as_secs_f64()
    );
    let pass = report.pass;
    Ok(Output::json(&report, summary, pass))
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Model(c) => model_cmd(c),
        Command::Dist(c) => dist_cmd(c),
        Command::Bn(c) => bn_cmd(c),
        Command::Analyze(c) => analyze_cmd(c),
        Command::Axiom(c) => axiom_cmd(c),
        Command::Simnet(c) => simnet_cmd(c),
        Command::Experiment(c) => experiment_cmd(c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.json;
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if !quiet {
                eprintln!("{}", out.summary);
            }
            ExitCode::from(if out.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
