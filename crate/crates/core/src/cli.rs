//! The `sbd` command line. `run` takes its arguments and output streams
//! explicitly so it can be driven from tests.
//!
//! Exit codes: 0 success, 2 parse error, 3 domain error, 4 internal
//! invariant violation.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::contfrac::{evaluate, parse_terms, standard_expansion, CfSequence};
use crate::diagram::{funnel, render_svg, verify_hatcher, Diagram, Overlay, SvgOptions};
use crate::error::Error;
use crate::lines::LineFamily;
use crate::links::{canonical_form, schubert_equivalent};
use crate::rational::{nu, ExtendedRational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "sbd",
    about = "Continued fractions on the Stern-Brocot diagram",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate "[a0;a1,...,an]" exactly
    Eval {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    /// Standard continued fraction of p/q
    Expand {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Funnel over p/q, with the convergent checks
    Funnel {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[command(flatten)]
        out: OutputArgs,
        #[arg(long = "max-denom", default_value_t = 60)]
        max_denom: u64,
    },
    /// Line family of a pattern with one hole, e.g. "[0;3,_,4]"
    Lines {
        pattern: String,
        #[arg(long, default_value = "-10..10", allow_hyphen_values = true)]
        range: String,
        #[command(flatten)]
        out: OutputArgs,
        #[arg(long = "max-denom", default_value_t = 60)]
        max_denom: u64,
        /// Also mark the family sharing the same lines
        #[arg(long)]
        partner: bool,
    },
    /// Draw a window of the diagram
    Diagram {
        #[arg(long, default_value = "0..1", allow_hyphen_values = true)]
        window: String,
        #[arg(long = "max-denom", default_value_t = 60)]
        max_denom: u64,
        #[arg(long)]
        svg: PathBuf,
    },
    /// Two-bridge link fractions
    Link {
        #[command(subcommand)]
        op: LinkOp,
    },
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Print a JSON report on stdout
    #[arg(long, conflicts_with = "svg")]
    pub json: bool,
    /// Write an SVG figure to this path
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum LinkOp {
    /// Canonical representative of the class of p/q
    Canon {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[arg(long)]
        json: bool,
    },
    /// Schubert equivalence of two fractions
    Eq {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_parse() {
                EXIT_PARSE
            } else if e.is_invariant() {
                EXIT_INVARIANT
            } else {
                EXIT_DOMAIN
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Eval { sequence } => {
            let seq: CfSequence = sequence.parse()?;
            writeln!(out, "{}", evaluate(&seq))?;
        }
        Command::Expand { value } => {
            let x: ExtendedRational = value.parse()?;
            writeln!(out, "{}", standard_expansion(&x)?)?;
        }
        Command::Funnel {
            value,
            out: o,
            max_denom,
        } => cmd_funnel(&value, &o, max_denom, out, err)?,
        Command::Lines {
            pattern,
            range,
            out: o,
            max_denom,
            partner,
        } => cmd_lines(&pattern, &range, &o, max_denom, partner, out)?,
        Command::Diagram {
            window,
            max_denom,
            svg,
        } => {
            let (lo, hi) = parse_window(&window)?;
            let d = Diagram::build(&lo, &hi, max_denom)?;
            std::fs::write(&svg, render_svg(&d, &[], &SvgOptions::default()))?;
            writeln!(
                out,
                "wrote {} ({} vertices, {} edges, {} triangles)",
                svg.display(),
                d.vertices().len(),
                d.edges().len(),
                d.triangles().len()
            )?;
        }
        Command::Link { op } => match op {
            LinkOp::Canon { value, json } => {
                let x: ExtendedRational = value.parse()?;
                let c = canonical_form(&x)?;
                if json {
                    print_json(out, &c)?;
                } else {
                    writeln!(out, "{} {}", c.canonical, c.sequence)?;
                }
            }
            LinkOp::Eq { a, b } => {
                let a: ExtendedRational = a.parse()?;
                let b: ExtendedRational = b.parse()?;
                writeln!(out, "{}", schubert_equivalent(&a, &b)?)?;
            }
        },
    }
    Ok(())
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_funnel(
    value: &str,
    o: &OutputArgs,
    max_denom: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let alpha: ExtendedRational = value.parse()?;
    let f = funnel(&alpha)?;
    let report = verify_hatcher(f.terms())?;
    // clause lines go to stderr when stdout carries JSON
    let log: &mut dyn Write = if o.json { err } else { &mut *out };
    if !o.json {
        writeln!(log, "funnel {} = {}", f.base(), f.terms())?;
        for t in f.triangles() {
            writeln!(log, "  triangle {} {} {}", t[0], t[1], t[2])?;
        }
        for (v, k) in f.indices() {
            writeln!(log, "  index {v} = {k}")?;
        }
    }
    for c in &report.clauses {
        let status = if c.passed { "PASS" } else { "FAIL" };
        writeln!(log, "clause {} {status}: {}", c.clause, c.statement)?;
        for why in &c.failures {
            writeln!(log, "  {why}")?;
        }
    }
    if o.json {
        print_json(out, &f.report())?;
    }
    if let Some(path) = &o.svg {
        let floor = alpha.floor().expect("finite");
        let lo = ExtendedRational::integer(floor.clone());
        let hi = ExtendedRational::integer(floor + 1);
        let den = max_denom.max(alpha.denom().try_into().unwrap_or(u64::MAX));
        let d = Diagram::build(&lo, &hi, den)?;
        let svg = render_svg(
            &d,
            &[
                Overlay::funnel(f.clone()),
                Overlay::points(vec![nu(&alpha)], "#d62728"),
            ],
            &SvgOptions::default(),
        );
        std::fs::write(path, svg)?;
        writeln!(err, "wrote {}", path.display())?;
    }
    Ok(())
}

fn cmd_lines(
    pattern: &str,
    range: &str,
    o: &OutputArgs,
    max_denom: u64,
    with_partner: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let f = LineFamily::from_pattern(&parse_terms(pattern)?)?;
    let ms = parse_range(range)?;
    let report = f.report(ms.clone())?;
    if o.json {
        print_json(out, &report)?;
    } else {
        write!(out, "{report}")?;
    }
    if let Some(path) = &o.svg {
        let (plus, minus) = f.lines()?;
        let gamma_floor = f.gamma().floor().expect("finite");
        let lo = ExtendedRational::integer(gamma_floor.clone());
        let hi = ExtendedRational::integer(gamma_floor + 1);
        let d = Diagram::build(&lo, &hi, max_denom)?;
        let mut overlays = vec![
            Overlay::line(plus),
            Overlay::line(minus),
            Overlay::points(ms.clone().map(|m| nu(&f.alpha_m(m))).collect(), "#ff69b4"),
        ];
        if with_partner {
            let g = f.partner()?;
            overlays.push(Overlay::points(
                ms.map(|m| nu(&g.alpha_m(m))).collect(),
                "#ffd700",
            ));
        }
        std::fs::write(path, render_svg(&d, &overlays, &SvgOptions::default()))?;
    }
    Ok(())
}

/// `LO..HI`, both inclusive.
fn parse_range(s: &str) -> Result<RangeInclusive<i64>, Error> {
    let bad = || Error::Parse(format!("expected LO..HI, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn parse_window(s: &str) -> Result<(ExtendedRational, ExtendedRational), Error> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("expected lo..hi, got {s:?}")))?;
    Ok((lo.parse()?, hi.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-5..5").unwrap(), -5..=5);
        assert_eq!(parse_range("3..3").unwrap(), 3..=3);
        assert!(parse_range("5..-5").is_err());
        assert!(parse_range("1-5").is_err());
    }

    #[test]
    fn windows() {
        let (lo, hi) = parse_window("-1/2..3/2").unwrap();
        assert_eq!(lo.to_string(), "-1/2");
        assert_eq!(hi.to_string(), "3/2");
        assert!(parse_window("0,1").is_err());
    }
}
