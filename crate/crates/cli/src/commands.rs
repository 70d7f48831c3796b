//! Argument definitions and subcommand bodies.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::RngCore;

use coopsec::bounds::{
    exact_single_tx_iud_eve, exact_single_tx_poisson_eve, ub_asymptotic, ub_iud_iud,
    ub_poisson_tx_iud_eve,
};
use coopsec::keyexchange::{simulate_exchange, PreSecret};
use coopsec::{ChannelParams, Deployment, Engine, Point, ProcessSpec, Scenario, SeedStream};
use coopsec::{StrategyConfig, StrategyKind, SweepAxis};

use crate::figures::{run_figure, FIGURE_IDS};
use crate::record::{format_real, header_line, RunRecord};

#[derive(Debug, Parser)]
#[command(
    name = "coopsec",
    version,
    about = "Secrecy coverage by cooperative transmitting"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Monte Carlo trials per estimate
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Master seed
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads (0 = one per core); never changes results
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Path-loss exponent
    #[arg(long, global = true, default_value_t = 4.0)]
    pub beta: f64,
    /// Transmit power
    #[arg(long, global = true, default_value_t = 1.0)]
    pub power: f64,
    /// Noise variance
    #[arg(long, global = true, default_value_t = 1.0)]
    pub noise: f64,
    /// Jammer power (defaults to the transmit power)
    #[arg(long = "jam-power", global = true)]
    pub jam_power: Option<f64>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl GlobalArgs {
    pub fn channel(&self) -> Result<ChannelParams, CliError> {
        ChannelParams::new(
            self.power,
            self.noise,
            self.beta,
            self.jam_power.unwrap_or(self.power),
        )
        .map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate P{Cs>0} for one scenario
    Sim(ScenarioArgs),
    /// Estimate P{Cs>0} along one parameter axis
    Sweep {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Parameter to vary: tx, eve, beta, power, noise, jam-power
        #[arg(long)]
        axis: SweepAxis,
        /// Comma-separated values for the axis
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        values: Vec<f64>,
    },
    /// Evaluate a closed-form value or bound
    Bound(BoundArgs),
    /// Emit the full parameter grid for one figure
    Figure {
        /// Figure number, 2 to 7
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=7))]
        id: u8,
    },
    /// Run the key exchange once and print a transcript
    KeyxDemo(KeyxArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ScenarioArgs {
    /// Transmitter process: iud:<n>, poisson:<rate>, hex:<n>, square:<n>
    #[arg(long)]
    pub tx: ProcessSpec,
    /// Eavesdropper process: iud:<n>, poisson:<rate>, hex:<n>, square:<n>
    #[arg(long)]
    pub eve: ProcessSpec,
    /// direct, coop-tx, best-relay or best-jammer
    #[arg(long, default_value = "coop-tx")]
    pub strategy: StrategyKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundSelector {
    /// 1/(1+n_E): one IUD transmitter, IUD eavesdroppers
    Eq3,
    /// 1-(n_E/(1+n_E))^n_T: IUD transmitters and eavesdroppers
    Eq4,
    /// 1-e^-k: asymptote with n_T/n_E = k
    Eq5,
    /// 1-e^(-lambda_T/(1+n_E)): Poisson transmitters, IUD eavesdroppers
    Eq6,
    /// (1-e^-lambda_E)/lambda_E: one IUD transmitter, Poisson eavesdroppers
    Sec3c,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    pub which: BoundSelector,
    #[arg(long)]
    pub nt: Option<usize>,
    #[arg(long)]
    pub ne: Option<usize>,
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long = "lambda-t")]
    pub lambda_t: Option<f64>,
    #[arg(long = "lambda-e")]
    pub lambda_e: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct KeyxArgs {
    /// Transmitter process used when no explicit points are given
    #[arg(long, default_value = "iud:4")]
    pub tx: ProcessSpec,
    /// Eavesdropper process used when no explicit points are given
    #[arg(long, default_value = "iud:3")]
    pub eve: ProcessSpec,
    /// Explicit transmitter position `x,y` (repeatable)
    #[arg(long = "tx-at", value_parser = parse_point)]
    pub tx_at: Vec<Point>,
    /// Explicit eavesdropper position `x,y` (repeatable)
    #[arg(long = "eve-at", value_parser = parse_point)]
    pub eve_at: Vec<Point>,
    /// Explicit receiver position `x,y`
    #[arg(long, value_parser = parse_point)]
    pub receiver: Option<Point>,
    /// Length of the random pre-secret in octets
    #[arg(long = "presecret-len", default_value_t = 64)]
    pub presecret_len: usize,
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y but got `{s}`"))?;
    let coord = |v: &str| {
        v.trim()
            .parse::<f64>()
            .ok()
            .filter(|c| c.is_finite())
            .ok_or_else(|| format!("bad coordinate `{v}`"))
    };
    Ok(Point::new(coord(x)?, coord(y)?))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad invocation; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Failure while running; exit code 1.
    #[error(transparent)]
    Runtime(#[from] anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl From<coopsec::Error> for CliError {
    fn from(e: coopsec::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let text = render(cli)?;
    match &cli.global.out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Produces the full output of a command line as text.
pub fn render(cli: &Cli) -> Result<String, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Sim(args) => cmd_sim(g, args),
        Command::Sweep {
            scenario,
            axis,
            values,
        } => cmd_sweep(g, scenario, *axis, values),
        Command::Bound(args) => cmd_bound(args),
        Command::Figure { id } => cmd_figure(g, *id),
        Command::KeyxDemo(args) => cmd_keyx_demo(g, args),
    }
}

fn scenario(g: &GlobalArgs, args: &ScenarioArgs) -> Result<Scenario, CliError> {
    Ok(Scenario::new(
        args.tx,
        args.eve,
        StrategyConfig::new(args.strategy, g.channel()?),
    ))
}

fn csv(rows: impl IntoIterator<Item = RunRecord>) -> String {
    let mut out = header_line(&[]);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_csv_row());
        out.push('\n');
    }
    out
}

pub fn cmd_sim(g: &GlobalArgs, args: &ScenarioArgs) -> Result<String, CliError> {
    let s = scenario(g, args)?;
    let est = Engine::new(g.threads)?.estimate(&s, g.trials, g.seed)?;
    Ok(csv([RunRecord::new(&s, &est)]))
}

pub fn cmd_sweep(
    g: &GlobalArgs,
    args: &ScenarioArgs,
    axis: SweepAxis,
    values: &[f64],
) -> Result<String, CliError> {
    let base = scenario(g, args)?;
    // validate every point before spending time on estimates
    for &v in values {
        axis.apply(&base, v)
            .map_err(|e| CliError::Usage(format!("--values {v}: {e}")))?;
    }
    let rows = Engine::new(g.threads)?.sweep(&base, axis, values, g.trials, g.seed)?;
    Ok(csv(rows
        .iter()
        .map(|r| RunRecord::new(&r.scenario, &r.estimate))))
}

pub fn cmd_bound(args: &BoundArgs) -> Result<String, CliError> {
    fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
        v.ok_or_else(|| CliError::Usage(format!("missing required parameter {flag}")))
    }
    fn nonneg(v: f64, flag: &str) -> Result<f64, CliError> {
        if v >= 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err(CliError::Usage(format!(
                "{flag} must be finite and nonnegative"
            )))
        }
    }
    let value = match args.which {
        BoundSelector::Eq3 => exact_single_tx_iud_eve(need(args.ne, "--ne")?),
        BoundSelector::Eq4 => {
            let nt = need(args.nt, "--nt")?;
            if nt == 0 {
                return Err(CliError::Usage("--nt must be at least 1".into()));
            }
            ub_iud_iud(nt, need(args.ne, "--ne")?)
        }
        BoundSelector::Eq5 => ub_asymptotic(nonneg(need(args.k, "--k")?, "--k")?),
        BoundSelector::Eq6 => ub_poisson_tx_iud_eve(
            nonneg(need(args.lambda_t, "--lambda-t")?, "--lambda-t")?,
            need(args.ne, "--ne")?,
        ),
        BoundSelector::Sec3c => {
            exact_single_tx_poisson_eve(nonneg(need(args.lambda_e, "--lambda-e")?, "--lambda-e")?)
        }
    };
    Ok(format!("{}\n", format_real(value.value)))
}

pub fn cmd_figure(g: &GlobalArgs, id: u8) -> Result<String, CliError> {
    let engine = Engine::new(g.threads)?;
    let table = run_figure(id, g.channel()?, &engine, g.trials, g.seed)?.ok_or_else(|| {
        CliError::Usage(format!(
            "unknown figure {id}; expected {}..={}",
            FIGURE_IDS.start(),
            FIGURE_IDS.end()
        ))
    })?;
    Ok(table.to_csv())
}

fn fmt_point(p: &Point) -> String {
    format!("({}, {})", format_real(p.x), format_real(p.y))
}

pub fn cmd_keyx_demo(g: &GlobalArgs, args: &KeyxArgs) -> Result<String, CliError> {
    let explicit = !args.tx_at.is_empty() || !args.eve_at.is_empty() || args.receiver.is_some();
    let deployment = if explicit {
        let receiver = args
            .receiver
            .ok_or_else(|| CliError::Usage("explicit positions need --receiver".into()))?;
        Deployment::new(args.tx_at.clone(), args.eve_at.clone(), receiver)
    } else {
        let s = Scenario::new(
            args.tx,
            args.eve,
            StrategyConfig::new(StrategyKind::CoopTransmit, ChannelParams::default()),
        );
        let (tx, eve, rx) = s.realise(0, g.seed);
        Deployment::new(tx, eve, rx)
    };
    let mut secret = vec![0u8; args.presecret_len];
    SeedStream::new(g.seed, 3).rng().fill_bytes(&mut secret);
    let out = simulate_exchange(&deployment, &PreSecret(secret.clone()))?;

    let mut t = String::new();
    t.push_str(&format!("seed: {}\n", g.seed));
    t.push_str(&format!("receiver: {}\n", fmt_point(&deployment.receiver)));
    for (i, e) in deployment.eavesdroppers.iter().enumerate() {
        t.push_str(&format!("eavesdropper {}: {}\n", i + 1, fmt_point(e)));
    }
    for (i, tx) in deployment.transmitters.iter().enumerate() {
        t.push_str(&format!(
            "transmitter {}: {} block {} ({} octets) intercepted: {}\n",
            i + 1,
            fmt_point(tx),
            hex::encode(&out.blocks.blocks[i]),
            out.blocks.blocks[i].len(),
            if out.intercepted[i] { "yes" } else { "no" },
        ));
    }
    t.push_str(&format!("presecret: {}\n", hex::encode(&secret)));
    t.push_str(&format!("receiver key: {}\n", out.receiver_key));
    t.push_str(&format!(
        "adversary key: {}\n",
        out.adversary_key
            .map_or("none".to_string(), |k| k.to_string())
    ));
    t.push_str(&format!(
        "verdict: {}\n",
        if out.secure { "secure" } else { "compromised" }
    ));
    Ok(t)
}
