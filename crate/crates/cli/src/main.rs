//! Command-line frontend.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a set that is not a
//! rational distance set, 2 on usage, parse, or precondition failures.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result, bail};
use clap::{Parser, Subcommand, ValueEnum};

use hyperdist::construct::{
    RationalDistanceSet, extend_three, extend_three_unchecked, four_point_set, three_point_set,
};
use hyperdist::json::{ReportJson, SetJson};
use hyperdist::surface::embed;
use hyperdist::{Conic, ConicPoint, Curve, CurvePoint, Rational, distance};

mod svg;

#[derive(Parser)]
#[command(
    name = "hyperdist",
    version,
    about = "Rational distance sets on hyperbolas a*x*y + b*x + c*y + d = 0, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a rational distance set from three curve points
    Gen {
        /// Conic coefficients as four comma-separated rationals
        #[arg(long, value_name = "a,b,c,d")]
        conic: String,
        /// Three projective points on Y^2 Z = X^3 - D^2 X Z^2
        #[arg(long, num_args = 3, value_name = "X:Y:Z")]
        points: Vec<String>,
        /// Emit a four-point set instead of three
        #[arg(long)]
        four: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Extend a rational distance set of three conic points to four
    Extend {
        #[arg(long, value_name = "a,b,c,d")]
        conic: String,
        /// Three conic points as comma-separated coordinate pairs
        #[arg(long, num_args = 3, value_name = "x,y")]
        points: Vec<String>,
        /// Skip verifying that the input triple has rational distances
        #[arg(long)]
        unchecked: bool,
    },
    /// Verify a point-set document; exit 0 iff it is a rational distance set
    Verify {
        file: PathBuf,
    },
    /// Enumerate curve points of bounded naive height
    Search {
        /// Curve parameter D
        d: String,
        /// Bound on |m| / e^2 for abscissae x = m / e^2
        #[arg(long, default_value_t = hyperdist::elliptic::DEFAULT_HEIGHT_BOUND)]
        height: u64,
        /// Bound on e
        #[arg(long, default_value_t = hyperdist::elliptic::DEFAULT_DENOM_BOUND)]
        denom: u32,
    },
    /// Reproduce the built-in worked example on x*y + 12 = 0 and plot it
    PaperExample {
        /// Directory for the emitted SVG files
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Render a point-set document as an SVG plot
    Plot {
        file: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Gen {
            conic,
            points,
            four,
            format,
        } => cmd_gen(&conic, &points, four, format),
        Command::Extend {
            conic,
            points,
            unchecked,
        } => cmd_extend(&conic, &points, unchecked),
        Command::Verify { file } => cmd_verify(&file),
        Command::Search { d, height, denom } => cmd_search(&d, height, denom),
        Command::PaperExample { out_dir } => cmd_paper_example(&out_dir),
        Command::Plot { file, output } => cmd_plot(&file, &output),
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    Ok(s.trim().parse::<Rational>()?)
}

fn parse_conic(s: &str) -> Result<Conic> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        bail!("conic must be four comma-separated rationals, got '{s}'");
    }
    let a = parse_rational(parts[0])?;
    let b = parse_rational(parts[1])?;
    let c = parse_rational(parts[2])?;
    let d = parse_rational(parts[3])?;
    Ok(Conic::new(a, b, c, d)?)
}

fn parse_curve_point(s: &str) -> Result<CurvePoint> {
    Ok(s.trim().parse::<CurvePoint>()?)
}

fn parse_conic_point(conic: &Conic, s: &str) -> Result<ConicPoint> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        bail!("point must be two comma-separated rationals, got '{s}'");
    }
    let x = parse_rational(parts[0])?;
    let y = parse_rational(parts[1])?;
    Ok(conic.point(x, y)?)
}

fn emit_set(set: &RationalDistanceSet, format: OutputFormat) -> Result<()> {
    if set.degenerate() {
        eprintln!("warning: degenerate set: some generated points coincide");
    }
    match format {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&SetJson::from_set(set))?);
        }
        OutputFormat::Csv => {
            for (idx, p) in set.points().iter().enumerate() {
                println!("point,{},{},{}", idx + 1, p.x(), p.y());
            }
            for pair in &set.report().pairs {
                let d = pair.distance.as_ref().expect("constructed sets are rational");
                println!("distance,{},{},{}", pair.i, pair.j, d);
            }
        }
    }
    Ok(())
}

fn cmd_gen(conic: &str, points: &[String], four: bool, format: OutputFormat) -> Result<ExitCode> {
    let conic = parse_conic(conic)?;
    if points.len() != 3 {
        bail!("expected exactly three curve points");
    }
    let q1 = parse_curve_point(&points[0])?;
    let q2 = parse_curve_point(&points[1])?;
    let q3 = parse_curve_point(&points[2])?;
    let set = if four {
        four_point_set(&conic, &q1, &q2, &q3)?
    } else {
        three_point_set(&conic, &q1, &q2, &q3)?
    };
    emit_set(&set, format)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_extend(conic: &str, points: &[String], unchecked: bool) -> Result<ExitCode> {
    let conic = parse_conic(conic)?;
    if points.len() != 3 {
        bail!("expected exactly three conic points");
    }
    let p1 = parse_conic_point(&conic, &points[0])?;
    let p2 = parse_conic_point(&conic, &points[1])?;
    let p3 = parse_conic_point(&conic, &points[2])?;
    let (p4, degenerate) = if unchecked {
        extend_three_unchecked(&conic, &p1, &p2, &p3)?
    } else {
        extend_three(&conic, &p1, &p2, &p3)?
    };
    if degenerate {
        eprintln!("warning: degenerate extension: the fourth point coincides with an input point");
    }
    println!(
        "{}",
        serde_json::to_string(&[p4.x().clone(), p4.y().clone()])?
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(file: &Path) -> Result<ExitCode> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let doc: SetJson = serde_json::from_str(&text).context("malformed point-set document")?;
    let conic = doc.conic.to_conic()?;
    let report = distance::verify_set(&conic, &doc.coords());
    println!(
        "{}",
        serde_json::to_string_pretty(&ReportJson::from_report(&report))?
    );
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_search(d: &str, height: u64, denom: u32) -> Result<ExitCode> {
    let curve = Curve::new(parse_rational(d)?)?;
    for point in curve.find_points(height, denom) {
        println!("{point}");
    }
    Ok(ExitCode::SUCCESS)
}

fn chord_labels(set: &RationalDistanceSet) -> Vec<(usize, usize, String)> {
    set.report()
        .pairs
        .iter()
        .filter(|p| p.i != p.j)
        .map(|p| {
            let label = match &p.distance {
                Some(d) => format!("|P{} - P{}| = {}", p.i, p.j, d),
                None => format!("|P{} - P{}| irrational", p.i, p.j),
            };
            (p.i, p.j, label)
        })
        .collect()
}

fn cmd_paper_example(out_dir: &Path) -> Result<ExitCode> {
    let conic = Conic::new(
        Rational::from(1),
        Rational::from(0),
        Rational::from(0),
        Rational::from(12),
    )?;
    let q1 = parse_curve_point("12:36:1")?;
    let q2 = parse_curve_point("50:35:8")?;
    let q3 = parse_curve_point("377844:2065932:12167")?;
    let curve = conic.curve();

    let three = three_point_set(&conic, &q1, &q2, &q3)?;
    let four = four_point_set(&conic, &q1, &q2, &q3)?;

    let mut out = String::new();
    out.push_str(&format!(
        "conic: a = {}, b = {}, c = {}, d = {}\n",
        conic.a(),
        conic.b(),
        conic.c(),
        conic.d()
    ));
    out.push_str(&format!("D = {}\n", conic.curve_d()));
    out.push_str("curve points:\n");
    for (idx, q) in [&q1, &q2, &q3].into_iter().enumerate() {
        out.push_str(&format!("  Q{} = {}\n", idx + 1, q));
    }
    out.push_str("surface points ((u:v:w), T):\n");
    for (idx, q) in [&q1, &q2, &q3].into_iter().enumerate() {
        out.push_str(&format!("  S{} = {}\n", idx + 1, embed(&curve, q)?));
    }
    for (title, set) in [("three-point set:\n", &three), ("four-point set:\n", &four)] {
        out.push_str(title);
        for (idx, p) in set.points().iter().enumerate() {
            out.push_str(&format!("  P{} = {}\n", idx + 1, p));
        }
        for pair in &set.report().pairs {
            let d = pair.distance.as_ref().expect("worked example is rational");
            out.push_str(&format!("  |P{} - P{}| = {}\n", pair.i, pair.j, d));
        }
    }

    fs::create_dir_all(out_dir)
        .with_context(|| format!("creating {}", out_dir.display()))?;
    for (name, set) in [
        ("paper-example-3pt.svg", &three),
        ("paper-example-4pt.svg", &four),
    ] {
        let path = out_dir.join(name);
        let rendered = svg::render(&conic, &set.coords(), &chord_labels(set));
        fs::write(&path, rendered).with_context(|| format!("writing {}", path.display()))?;
        out.push_str(&format!("wrote {}\n", path.display()));
    }

    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_plot(file: &Path, output: &Path) -> Result<ExitCode> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let doc: SetJson = serde_json::from_str(&text).context("malformed point-set document")?;
    let conic = doc.conic.to_conic()?;
    let coords = doc.coords();
    if let Some((x, y)) = coords.iter().find(|(x, y)| !conic.contains(x, y)) {
        bail!("point ({x}, {y}) is not on the conic");
    }
    let report = distance::verify_set(&conic, &coords);
    let chords = report
        .pairs
        .iter()
        .map(|p| {
            let label = match &p.distance {
                Some(d) => format!("|P{} - P{}| = {}", p.i, p.j, d),
                None => format!("|P{} - P{}| irrational", p.i, p.j),
            };
            (p.i, p.j, label)
        })
        .collect::<Vec<_>>();
    let rendered = svg::render(&conic, &coords, &chords);
    fs::write(output, rendered).with_context(|| format!("writing {}", output.display()))?;
    Ok(ExitCode::SUCCESS)
}
