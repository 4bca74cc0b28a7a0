use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use agcodes::cli::{self, ExportKind, Render};
use agcodes::config::{parse_range, ConfigFile, Format, RunConfig};

#[derive(Parser)]
#[command(name = "agcodes", about = "One-point AG codes on Y^q + Y = X^m and their quantum parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Genus, defining conditions, point counts and maximality.
    CurveInfo(Common),
    /// Dimension, distance and self-orthogonality of C_L(D, sP) per s.
    Code(Common),
    /// Formula and constructed quantum parameter tables.
    Quantum(Common),
    /// Run the claim registry.
    Verify(Common),
    /// Write the generator, parity-check or stabilizer matrix of one code.
    Export {
        #[command(flatten)]
        common: Common,
        /// generator | parity-check | stabilizer
        #[arg(long, default_value = "generator")]
        matrix: String,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// paper | full-affine | hermitian
    #[arg(long)]
    mode: Option<String>,
    /// Pole bounds, a..b inclusive.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Values of r, a..b inclusive.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Work cap per distance search.
    #[arg(long)]
    budget: Option<u64>,
    /// table | json | csv
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Key-value (TOML) config file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Common {
    fn resolve(&self) -> Result<RunConfig> {
        let mut file = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                ConfigFile::parse(&text)?
            }
            None => ConfigFile::default(),
        };
        file.p = self.p.or(file.p);
        file.n = self.n.or(file.n);
        file.m = self.m.or(file.m);
        file.mode = self.mode.clone().or(file.mode);
        if file.p.is_none() {
            bail!("--p is required (or a config file with p)");
        }
        let mut cfg = RunConfig::from_file(&file)?;
        if let Some(s) = &self.s {
            cfg.s_range = Some(parse_range(s)?);
        }
        if let Some(r) = &self.r {
            cfg.r_range = Some(parse_range(r)?);
        }
        if let Some(b) = self.budget {
            cfg.budget = b;
        }
        if let Some(f) = &self.format {
            cfg.format = f.parse()?;
        }
        Ok(cfg)
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::CurveInfo(c) => {
            let cfg = c.resolve()?;
            c.emit(&cli::cmd_curve_info(&cfg)?.render(cfg.format))
        }
        Command::Code(c) => {
            let cfg = c.resolve()?;
            c.emit(&cli::cmd_code(&cfg)?.render(cfg.format))
        }
        Command::Quantum(c) => {
            let cfg = c.resolve()?;
            c.emit(&cli::cmd_quantum(&cfg)?.render(cfg.format))
        }
        Command::Verify(c) => {
            let cfg = c.resolve()?;
            c.emit(&cli::cmd_verify(&cfg)?.render(cfg.format))
        }
        Command::Export { common, matrix } => {
            let cfg = common.resolve()?;
            let kind = match matrix.as_str() {
                "generator" => ExportKind::Generator,
                "parity-check" => ExportKind::ParityCheck,
                "stabilizer" => ExportKind::Stabilizer,
                other => bail!("unknown matrix {other:?}"),
            };
            let s = match cfg.s_range.clone() {
                Some(r) if r.start() == r.end() => *r.start(),
                _ => bail!("export needs a single --s value"),
            };
            let m = cli::cmd_export(&cfg, s, kind)?;
            let text = match cfg.format {
                Format::Csv => m.to_csv(),
                _ => m.to_json() + "\n",
            };
            common.emit(&text)
        }
    }
}

fn main() -> ExitCode {
    // Refuted claims are findings and still exit 0; only failures exit nonzero.
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
