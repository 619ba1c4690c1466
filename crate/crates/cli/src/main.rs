use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hadaut_core::codes::COUNT_LIMIT;
use hadaut_core::io::{ingest, parse_artifact, verify_artifact, Artifact};
use hadaut_core::pipeline::{
    analyze, certify, classify, write_classification, CertificateCache, ClassifyOptions, CodeKind,
};
use hadaut_core::search::ReductionPolicy;

#[derive(Parser)]
#[command(name = "hadaut", version, about = "Hadamard designs and matrices with an automorphism of prime order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduce {
    None,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Classify designs 2-(2p+1, p, (p-1)/2) and matrices of order 2p+2.
    Classify {
        #[arg(short, long)]
        p: u32,
        #[arg(long, value_enum, default_value = "full")]
        reduce: Reduce,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory for representatives and the manifest.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Minimum weights and automorphism-order histograms.
    Analyze {
        #[arg(long, value_delimiter = ',', default_value = "c2,c3,c5,c2prime")]
        codes: Vec<String>,
        /// Largest enumeration attempted when counting minimum-weight words.
        #[arg(long, default_value_t = COUNT_LIMIT)]
        count_limit: f64,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Parse and verify files.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Canonical fingerprints and automorphism group orders.
    Canon {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Classify { p, reduce, jobs, output } => {
            let reduction = match reduce {
                Reduce::None => ReductionPolicy::NONE,
                Reduce::Full => ReductionPolicy::FULL,
            };
            let r = classify(p, ClassifyOptions { reduction, jobs, ..Default::default() })?;
            let (d, h) = r.counts();
            println!("p={p} raw={} designs={d} matrices={h} time={:.1?}", r.raw_solutions, r.elapsed);
            if let Some(dir) = output {
                let m = write_classification(&r, &dir)?;
                println!("manifest {}", m.display());
            }
            Ok(true)
        }
        Command::Analyze { codes, count_limit, files } => {
            let kinds = codes.iter().map(|c| c.parse::<CodeKind>()).collect::<Result<Vec<_>, _>>()?;
            let inputs = files
                .iter()
                .map(|f| Ok((f.display().to_string(), ingest(f).with_context(|| f.display().to_string())?)))
                .collect::<Result<Vec<_>>>()?;
            print!("{}", analyze(&inputs, &kinds, count_limit)?);
            Ok(true)
        }
        Command::Verify { files } => {
            let mut ok = true;
            for f in &files {
                match ingest(f) {
                    Ok(a) => println!("ok\t{}\t{}", f.display(), describe(&a)),
                    Err(e) => {
                        ok = false;
                        println!("FAIL\t{}\t{e}", f.display());
                    }
                }
            }
            Ok(ok)
        }
        Command::Canon { files } => {
            let mut cache = CertificateCache::from_env();
            let mut classes: BTreeMap<String, Vec<String>> = BTreeMap::new();
            let mut ok = true;
            for f in &files {
                let bytes = std::fs::read(f).with_context(|| f.display().to_string())?;
                let key = CertificateCache::input_key(&bytes);
                let line = match cache.get(&key) {
                    Some((digest, order)) => Some((digest.clone(), order.clone())),
                    None => {
                        let parsed = std::str::from_utf8(&bytes)
                            .map_err(anyhow::Error::from)
                            .and_then(|t| Ok(parse_artifact(t)?))
                            .and_then(|a| verify_artifact(&a).map(|_| a).map_err(Into::into));
                        match parsed {
                            Ok(a) => certify(&a).map(|(d, o)| {
                                cache.insert(key, d.clone(), o.to_string());
                                (d, o.to_string())
                            }),
                            Err(e) => {
                                ok = false;
                                println!("FAIL\t{}\t{e}", f.display());
                                continue;
                            }
                        }
                    }
                };
                match line {
                    Some((digest, order)) => {
                        println!("{}\t{digest}\t{order}", f.display());
                        classes.entry(digest).or_default().push(f.display().to_string());
                    }
                    None => println!("{}\tquadruple files have no canonical form", f.display()),
                }
            }
            cache.save()?;
            if files.len() > 1 {
                println!("{} classes among {} files", classes.len(), files.len());
            }
            Ok(ok)
        }
    }
}

fn describe(a: &Artifact) -> String {
    match a {
        Artifact::Hadamard(h) => format!("hadamard order {}", h.order()),
        Artifact::Design(d) => format!("design v={} b={}", d.points(), d.blocks()),
        Artifact::Quadruples(q) => format!("{} quadruples", q.len()),
    }
}
