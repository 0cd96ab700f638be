use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use recolor::io::{
    parse_coloring, parse_hypergraph, parse_trace, trace_to_path, write_coloring, write_hypergraph,
    write_trace, write_trace_csv,
};
use recolor::montecarlo;
use recolor_core::core_peel::{order_is_certified, residual_core};
use recolor_core::experiments::{
    plan_montecarlo, probe_density, probe_independent_set_bound, ProbeMode, Verdict,
};
use recolor_core::independence::{
    is_maximal_independent_in, witness_count, EXACT_COLORABILITY_CAP,
};
use recolor_core::sampling::coloring_from_sequence;
use recolor_core::{
    beta_core, connect, extend_to_mis, falsify_alpha_beta, gamma_stats, generate_hnm, generate_hnp,
    greedy_sequence, is_alpha_beta_colorable_exact, max_independent_set_exact, params_from_d,
    verify_path, Color, Colorability, ColorabilityWitness, Coloring, EdgeSpec, GammaOptions,
    Hypergraph, MonteCarloConfig, PathVerdict, ReconfigOptions, Strategy, VertexSet,
};

/// Reconfiguration of proper colorings of k-uniform hypergraphs.
///
/// Vertices are 1..=n, colors 1..=q. All logarithms are natural.
#[derive(Parser, Debug)]
#[command(name = "recolor", version)]
struct Cli {
    /// Master seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Ascending,
    Random,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Ascending => Strategy::Ascending,
            StrategyArg::Random => Strategy::SeededRandom,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// alpha, beta, m0, n0, p and m from the expected degree d.
    ///
    /// alpha = ((k-1)d / (ln d - 5(k-1) ln ln d))^(1/(k-1)), beta = 3 (ln d)^(3k),
    /// m0 = n/alpha, n0 = 16 m0 (ln d)^2, p = d / C(n-1,k-1), m = round(dn/k).
    Params {
        /// Expected degree.
        #[arg(long, conflicts_with = "ln_d", required_unless_present = "ln_d")]
        d: Option<f64>,
        /// Natural log of the expected degree, for very large d.
        #[arg(long)]
        ln_d: Option<f64>,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u64,
    },
    /// Sample H(n,m;k) or H(n,p;k).
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        edges: EdgeArgs,
    },
    /// beta-core and certified peeling order.
    Core {
        graph: PathBuf,
        #[arg(long)]
        beta: usize,
    },
    /// A maximal (or with --maximum, maximum) independent set.
    Mis {
        graph: PathBuf,
        /// Comma-separated vertices the set must contain.
        #[arg(long, value_delimiter = ',')]
        include: Vec<u32>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Ascending)]
        strategy: StrategyArg,
        /// Exact maximum independent set (small n only).
        #[arg(long, conflicts_with = "include")]
        maximum: bool,
    },
    /// A greedy sequence of alpha maximal independent sets and its residual.
    Greedy {
        graph: PathBuf,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Random)]
        strategy: StrategyArg,
        /// Write the resulting good greedy coloring here when the residual is coreless.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// (alpha,beta)-colorability: exact for small n, witness search otherwise.
    Certify {
        graph: PathBuf,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        /// Random greedy sequences tried when n is too large for exact search.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Use the witness search even when exact search is possible.
        #[arg(long)]
        heuristic: bool,
    },
    /// Recoloring path between two proper colorings, as a trace.
    Connect {
        graph: PathBuf,
        from: PathBuf,
        to: PathBuf,
        #[arg(long)]
        q: Color,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        #[arg(long, default_value_t = recolor_core::reconfig::DEFAULT_STEP_CAP)]
        step_cap: usize,
    },
    /// Replay a trace and check every step.
    Verify {
        graph: PathBuf,
        start: PathBuf,
        trace: PathBuf,
        #[arg(long)]
        q: Color,
        /// Also require the trace to end at this coloring.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Brute-force statistics of the recoloring graph (tiny instances).
    Gamma {
        graph: PathBuf,
        #[arg(long)]
        q: Color,
        /// Print the component-size histogram as CSV.
        #[arg(long)]
        histogram: bool,
        #[arg(long, default_value_t = GammaOptions::default().space_budget)]
        space_budget: u64,
        #[arg(long, default_value_t = GammaOptions::default().diameter_budget)]
        diameter_budget: u64,
    },
    /// Monte-Carlo residual-core trials on H(n,m;k).
    Montecarlo {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, conflicts_with = "d", required_unless_present = "d")]
        m: Option<u64>,
        /// Expected degree; m = round(dn/k). alpha and beta default to the formula values.
        #[arg(long)]
        d: Option<f64>,
        #[arg(long)]
        alpha: Option<u64>,
        #[arg(long)]
        beta: Option<u64>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Also connect two random colorings per coreless trial and record the path length.
        #[arg(long)]
        paths: bool,
        /// Add a wall-time column (not reproducible).
        #[arg(long)]
        timing: bool,
        /// Run trials on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Probes of the independent-set and density bounds.
    Probe {
        graph: PathBuf,
        #[arg(long)]
        d: f64,
        /// Density threshold L; with --n0, look for S with |S| <= n0 spanning >= L|S| edges.
        #[arg(long)]
        ratio: Option<f64>,
        #[arg(long)]
        n0: Option<f64>,
        /// Heuristic search with this many runs instead of exact search.
        #[arg(long)]
        trials: Option<u64>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct EdgeArgs {
    /// Exact number of edges.
    #[arg(long)]
    m: Option<u64>,
    /// Independent edge probability.
    #[arg(long)]
    p: Option<f64>,
    /// Expected degree; m = round(dn/k).
    #[arg(long)]
    d: Option<f64>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Hypergraph> {
    parse_hypergraph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_coloring(path: &Path) -> Result<Coloring> {
    parse_coloring(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn joined(set: &VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::BoundRespected => "bound-respected",
        Verdict::BoundViolated => "bound-violated",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn witness_text(s: &mut String, w: &ColorabilityWitness) {
    for (i, set) in w.sequence.sets.iter().enumerate() {
        let _ = writeln!(s, "V{} {}", i + 1, joined(set));
    }
    let _ = writeln!(s, "residual {}", joined(&w.sequence.residual));
    let _ = writeln!(s, "core {}", joined(&w.core_vertices));
}

/// Main output plus whether the command's check passed.
struct Output {
    text: String,
    ok: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let csv = cli.format == Format::Csv;
    let mut s = String::new();
    match &cli.cmd {
        Cmd::Params { d, ln_d, k, n } => {
            let d = match (d, ln_d) {
                (Some(d), _) => *d,
                (None, Some(l)) => l.exp(),
                (None, None) => unreachable!("clap requires one of --d, --ln-d"),
            };
            let p = params_from_d(d, *k, *n)?;
            let rows: [(&str, String); 11] = [
                ("d", p.d.to_string()),
                ("k", p.k.to_string()),
                ("n", p.n.to_string()),
                ("alpha_real", p.alpha_real.to_string()),
                ("alpha", p.alpha.to_string()),
                ("beta_real", p.beta_real.to_string()),
                ("beta", p.beta.to_string()),
                ("m0", p.m0.to_string()),
                ("n0", p.n0.to_string()),
                ("p", p.p.to_string()),
                ("m", p.m.to_string()),
            ];
            if csv {
                let _ = writeln!(s, "{}", rows.iter().map(|r| r.0).collect::<Vec<_>>().join(","));
                let _ = writeln!(s, "{}", rows.iter().map(|r| r.1.as_str()).collect::<Vec<_>>().join(","));
            } else {
                for (key, val) in rows {
                    let _ = writeln!(s, "{key} {val}");
                }
            }
        }
        Cmd::Gen { n, k, edges } => {
            let h = match (edges.m, edges.p, edges.d) {
                (Some(m), _, _) => generate_hnm(*n, m, *k, cli.seed)?,
                (_, Some(p), _) => generate_hnp(*n, p, *k, cli.seed)?,
                (_, _, Some(d)) => {
                    if !(d >= 0.0) {
                        bail!("d must be non-negative");
                    }
                    let m = (d * *n as f64 / *k as f64 + 0.5).floor() as u64;
                    generate_hnm(*n, m, *k, cli.seed)?
                }
                _ => unreachable!("clap requires one of --m, --p, --d"),
            };
            s = write_hypergraph(&h);
        }
        Cmd::Core { graph, beta } => {
            let h = load_graph(graph)?;
            let peel = beta_core(&h, *beta, &h.all_vertices())?;
            let certified = order_is_certified(&h, *beta, &peel);
            if csv {
                s.push_str("vertex,in_core,order_position\n");
                let mut pos = vec![None; h.n() as usize + 1];
                for (i, &v) in peel.order.iter().enumerate() {
                    pos[v as usize] = Some(i + 1);
                }
                for v in h.vertices() {
                    let p = pos[v as usize].map(|p| p.to_string()).unwrap_or_default();
                    let _ = writeln!(s, "{v},{},{p}", u8::from(peel.core.contains(v)));
                }
            } else {
                let _ = writeln!(s, "core_size {}", peel.core.len());
                let _ = writeln!(s, "core {}", joined(&peel.core));
                let order: Vec<String> = peel.order.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "order {}", order.join(" "));
                let _ = writeln!(s, "order_certified {certified}");
            }
            return Ok(Output {
                text: s,
                ok: certified,
            });
        }
        Cmd::Mis {
            graph,
            include,
            strategy,
            maximum,
        } => {
            let h = load_graph(graph)?;
            let all = h.all_vertices();
            let set = if *maximum {
                max_independent_set_exact(&h)?
            } else {
                let mut seed_set = VertexSet::empty(h.n());
                for &v in include {
                    if v == 0 || v > h.n() {
                        bail!("vertex {v} out of range 1..={}", h.n());
                    }
                    seed_set.insert(v);
                }
                extend_to_mis(&h, &all, &seed_set, (*strategy).into(), cli.seed)?
            };
            debug_assert!(is_maximal_independent_in(&h, &set, &all));
            if csv {
                s.push_str("vertex\n");
                for v in set.iter() {
                    let _ = writeln!(s, "{v}");
                }
            } else {
                let _ = writeln!(s, "size {}", set.len());
                let _ = writeln!(s, "set {}", joined(&set));
            }
        }
        Cmd::Greedy {
            graph,
            alpha,
            beta,
            strategy,
            coloring_out,
        } => {
            let h = load_graph(graph)?;
            let seq = greedy_sequence(&h, *alpha, (*strategy).into(), cli.seed);
            let core = residual_core(&h, *beta, &seq.residual);
            if csv {
                s.push_str("vertex,class\n");
                let mut class = vec![0usize; h.n() as usize + 1];
                for (i, set) in seq.sets.iter().enumerate() {
                    for v in set.iter() {
                        class[v as usize] = i + 1;
                    }
                }
                for v in h.vertices() {
                    let _ = writeln!(s, "{v},{}", class[v as usize]);
                }
            } else {
                for (i, set) in seq.sets.iter().enumerate() {
                    let _ = writeln!(s, "V{} {}", i + 1, joined(set));
                }
                let _ = writeln!(s, "residual_size {}", seq.residual.len());
                let _ = writeln!(s, "residual {}", joined(&seq.residual));
                let _ = writeln!(s, "residual_core_size {}", core.len());
            }
            if let Some(path) = coloring_out {
                if !core.is_empty() {
                    bail!("residual has a non-empty {beta}-core; no good greedy coloring");
                }
                let c = coloring_from_sequence(&h, &seq, *beta)
                    .context("first-fit coloring of the residual failed")?;
                fs::write(path, write_coloring(&c))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
        Cmd::Certify {
            graph,
            alpha,
            beta,
            trials,
            heuristic,
        } => {
            let h = load_graph(graph)?;
            let exact = !*heuristic && h.n() <= EXACT_COLORABILITY_CAP;
            let (verdict, witness) = if exact {
                match is_alpha_beta_colorable_exact(&h, *alpha, *beta, EXACT_COLORABILITY_CAP)? {
                    Colorability::Colorable => ("colorable", None),
                    Colorability::NotColorable(w) => ("not-colorable", Some(w)),
                }
            } else {
                match falsify_alpha_beta(&h, *alpha, *beta, *trials, cli.seed) {
                    Some(w) => ("not-colorable", Some(w)),
                    None => ("inconclusive", None),
                }
            };
            let mode = if exact { "exact" } else { "heuristic" };
            let hits = (!exact).then(|| witness_count(&h, *alpha, *beta, *trials, cli.seed));
            if csv {
                s.push_str("mode,alpha,beta,verdict,trials,witnesses\n");
                let t = if exact {
                    String::new()
                } else {
                    trials.to_string()
                };
                let w = hits.map(|c| c.to_string()).unwrap_or_default();
                let _ = writeln!(s, "{mode},{alpha},{beta},{verdict},{t},{w}");
            } else {
                let _ = writeln!(s, "mode {mode}");
                let _ = writeln!(s, "verdict {verdict}");
                if let Some(c) = hits {
                    let _ = writeln!(s, "witnesses {c} of {trials}");
                }
                if let Some(w) = &witness {
                    witness_text(&mut s, w);
                }
            }
        }
        Cmd::Connect {
            graph,
            from,
            to,
            q,
            alpha,
            beta,
            step_cap,
        } => {
            let h = load_graph(graph)?;
            let a = load_coloring(from)?;
            let b = load_coloring(to)?;
            let opts = ReconfigOptions {
                step_cap: *step_cap,
            };
            let path = connect(&h, &a, &b, *q, *alpha, *beta, &opts)?;
            let st = &path.stats;
            eprintln!(
                "steps {} inter_moves {} core_moves {} core_detours {} final_moves {} final_depth {} max_inter_recolors {}",
                path.len(),
                st.inter_moves,
                st.core_moves,
                st.core_detours,
                st.final_moves,
                st.final_depth,
                st.max_inter_recolors
            );
            s = if csv {
                write_trace_csv(&path)
            } else {
                write_trace(&path)
            };
        }
        Cmd::Verify {
            graph,
            start,
            trace,
            q,
            target,
        } => {
            let h = load_graph(graph)?;
            let a = load_coloring(start)?;
            let lines = parse_trace(&read(trace)?)?;
            let path = trace_to_path(&a, &lines)?;
            let ok = match verify_path(&h, &path, *q) {
                PathVerdict::Valid { end, steps } => match target.as_deref() {
                    Some(t) if load_coloring(t)? != end => {
                        let _ =
                            writeln!(s, "invalid: ends away from the target after {steps} steps");
                        false
                    }
                    _ => {
                        let _ = writeln!(s, "valid {steps} steps");
                        true
                    }
                },
                PathVerdict::Invalid { index, violation } => {
                    match index {
                        Some(i) => {
                            let _ = writeln!(s, "invalid at step {}: {violation:?}", i + 1);
                        }
                        None => {
                            let _ = writeln!(s, "invalid start: {violation:?}");
                        }
                    }
                    false
                }
            };
            return Ok(Output { text: s, ok });
        }
        Cmd::Gamma {
            graph,
            q,
            histogram,
            space_budget,
            diameter_budget,
        } => {
            let h = load_graph(graph)?;
            let opts = GammaOptions {
                space_budget: *space_budget,
                diameter_budget: *diameter_budget,
            };
            let g = gamma_stats(&h, *q, &opts)?;
            let diameter = g.diameter.map(|d| d.to_string());
            if *histogram {
                s.push_str("component_size,count\n");
                let mut i = 0;
                while i < g.component_sizes.len() {
                    let size = g.component_sizes[i];
                    let j = i + g.component_sizes[i..]
                        .iter()
                        .take_while(|&&x| x == size)
                        .count();
                    let _ = writeln!(s, "{size},{}", j - i);
                    i = j;
                }
            } else if csv {
                s.push_str("num_colorings,num_components,largest_component,diameter,connected\n");
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    g.num_colorings,
                    g.num_components,
                    g.component_sizes.first().copied().unwrap_or(0),
                    diameter.unwrap_or_default(),
                    g.connected
                );
            } else {
                let _ = writeln!(s, "num_colorings {}", g.num_colorings);
                let _ = writeln!(s, "num_components {}", g.num_components);
                let _ = writeln!(
                    s,
                    "largest_component {}",
                    g.component_sizes.first().copied().unwrap_or(0)
                );
                let _ = writeln!(s, "diameter {}", diameter.as_deref().unwrap_or("unknown"));
                let _ = writeln!(s, "connected {}", g.connected);
            }
        }
        Cmd::Montecarlo {
            n,
            k,
            m,
            d,
            alpha,
            beta,
            trials,
            paths,
            timing,
            serial,
        } => {
            let edges = match (m, d) {
                (Some(m), _) => EdgeSpec::Edges(*m),
                (None, Some(d)) => EdgeSpec::Degree(*d),
                (None, None) => unreachable!("clap requires one of --m, --d"),
            };
            let plan = plan_montecarlo(&MonteCarloConfig {
                n: *n,
                k: *k,
                edges,
                alpha: *alpha,
                beta: *beta,
                trials: *trials,
                seed: cli.seed,
                path_probe: *paths,
            })?;
            let recs = montecarlo::run(&plan, !*serial, *timing)?;
            s = if csv {
                montecarlo::to_csv(&recs, *timing)
            } else {
                montecarlo::summary(&plan, &recs)
            };
        }
        Cmd::Probe {
            graph,
            d,
            ratio,
            n0,
            trials,
        } => {
            let h = load_graph(graph)?;
            let mode = match trials {
                Some(t) => ProbeMode::Heuristic {
                    trials: *t,
                    seed: cli.seed,
                },
                None => ProbeMode::Exact,
            };
            let ind = probe_independent_set_bound(&h, *d, mode)?;
            let dens = match (ratio, n0) {
                (Some(l), Some(n0)) => Some(probe_density(&h, *n0, *l, mode)),
                (None, None) => None,
                _ => bail!("--ratio and --n0 go together"),
            };
            if csv {
                s.push_str("probe,bound,found,verdict\n");
                let _ = writeln!(
                    s,
                    "independent_set,{},{},{}",
                    ind.bound,
                    ind.best.len(),
                    verdict_name(ind.verdict)
                );
                if let (Some(dp), Some(l)) = (&dens, ratio) {
                    let _ = writeln!(s, "density,{l},{},{}", dp.ratio, verdict_name(dp.verdict));
                }
            } else {
                let _ = writeln!(s, "independent_set_bound {}", ind.bound);
                let _ = writeln!(s, "largest_independent_set {}", ind.best.len());
                let _ = writeln!(s, "independent_set_verdict {}", verdict_name(ind.verdict));
                if let Some(dp) = &dens {
                    let _ = writeln!(s, "densest_set {}", joined(&dp.densest));
                    let _ = writeln!(s, "densest_edges {}", dp.edges);
                    let _ = writeln!(s, "densest_ratio {}", dp.ratio);
                    let _ = writeln!(s, "density_verdict {}", verdict_name(dp.verdict));
                }
            }
        }
    }
    Ok(s.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(p) => fs::write(p, &out.text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{}", out.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
