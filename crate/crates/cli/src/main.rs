//! `bjsym`: reports on Birkhoff-James orthogonality and approximate symmetry.
//!
//! Exit status is 0 on success, 2 on bad input or unmet preconditions, and 3
//! when a computed witness fails its independent re-check.

mod args;
mod commands;
mod report;

use std::process::ExitCode;

use bjsym::sampling::SampleConfig;
use bjsym::{AnySpace, Error};
use clap::Parser;
use serde_json::Value;

use args::{Cli, Command, Format};

fn run(cli: &Cli) -> bjsym::Result<Value> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Precondition(format!("--threads: {e}")))?;
    }
    if cli.samples == 0 {
        return Err(Error::Precondition("--samples must be positive".into()));
    }
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Precondition(format!("--tol must be positive, got {t}")));
        }
    }
    let cfg = SampleConfig {
        samples: cli.samples,
        refine: cli.refine,
        seed: cli.seed,
        ..SampleConfig::default()
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let name = cli.command.name();
    let (space, result) = match &cli.command {
        Command::Catalog(_) => (Value::Null, commands::catalog_list()),
        Command::Op(c) => (Value::Null, commands::op(c, &cfg, cli.tol)?),
        cmd => {
            let (space, source) =
                commands::load_space(cli.space.as_deref(), cli.catalog.as_deref(), cli.tol)?;
            let result = match &space {
                AnySpace::Exact(p) => dispatch(p.as_ref(), cmd, &cfg)?,
                AnySpace::Float(s) => dispatch(s.as_ref(), cmd, &cfg)?,
            };
            (commands::describe(&space, &source), result)
        }
    };
    let mut resolution = report::sample_config(&cfg);
    resolution["seed"] = cli.seed.into();
    let mut out = report::envelope(&name, &argv, space, cli.seed, result);
    out["sampling"] = resolution;
    Ok(out)
}

fn dispatch<S: bjsym::Scalar, N: bjsym::NormedSpace<S> + ?Sized>(
    space: &N,
    cmd: &Command,
    cfg: &SampleConfig,
) -> bjsym::Result<Value> {
    match cmd {
        Command::Space(_) => Ok(commands::space_info(space)),
        Command::Ortho(c) => commands::ortho(space, c),
        Command::Props(c) => commands::props(space, c, cfg),
        Command::Symmetry(c) => commands::symmetry(space, c, cfg),
        Command::Catalog(_) | Command::Op(_) => unreachable!("handled without a space"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            let text = match cli.format {
                Format::Json => report::render_json(&v),
                Format::Text => report::render_text(&v),
            };
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Verification(_) => 3,
                _ => 2,
            })
        }
    }
}
