use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wmds_core::cli::{self, Command, InputDocument, Options, Output};

/// Exact combinatorics of weak Mori dream spaces: Gale duality, GKZ
/// chambers, fan censuses, sharp completions and MMP classification.
#[derive(Parser)]
#[command(name = "wmds", version, about)]
struct WmdsCli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Gale-dual pair of matrices.
    Gale(CommonArgs),
    /// Classify the fan matrix (F) and weight matrix (W).
    Classify(CommonArgs),
    /// Pseudo-effective, movable and nef cones.
    Cones(CommonArgs),
    /// Full GKZ decomposition (cells, chambers, face relations).
    Gkz(CommonArgs),
    /// Chambers of the moving cone.
    Chambers(CommonArgs),
    /// Census of simplicial fans on the rays.
    Fans(CommonArgs),
    /// Filling-cell detection for the ambient fan.
    Fillable(CommonArgs),
    /// Sharp completion along a chamber (requires --chamber).
    Complete(CommonArgs),
    /// Chamber-walk classification of a divisor class (requires --class).
    Mmp(CommonArgs),
    /// Small modification targets: one per chamber.
    Sqm(CommonArgs),
    /// Anticanonical class with big/movable verdicts.
    Anticanonical(CommonArgs),
    /// Combined report.
    Report(CommonArgs),
    /// SVG cross-section of the GKZ decomposition (rank 2 or 3).
    Plot(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input document (TOML).
    #[arg(short = 'i', long = "input")]
    input: PathBuf,
    /// Restrict the gkz command to the moving cone.
    #[arg(long)]
    mov: bool,
    /// Chamber selector (1-based) for complete.
    #[arg(long)]
    chamber: Option<usize>,
    /// Divisor class "a,b,..." for mmp.
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// Turn domain negatives (not fillable, not effective) into exit code 1.
    #[arg(long)]
    strict: bool,
    /// Write the output to a file instead of stdout.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = WmdsCli::parse();
    let (command, args) = match cli.command {
        Cmd::Gale(a) => (Command::Gale, a),
        Cmd::Classify(a) => (Command::Classify, a),
        Cmd::Cones(a) => (Command::Cones, a),
        Cmd::Gkz(a) => (Command::Gkz, a),
        Cmd::Chambers(a) => (Command::Chambers, a),
        Cmd::Fans(a) => (Command::Fans, a),
        Cmd::Fillable(a) => (Command::Fillable, a),
        Cmd::Complete(a) => (Command::Complete, a),
        Cmd::Mmp(a) => (Command::Mmp, a),
        Cmd::Sqm(a) => (Command::Sqm, a),
        Cmd::Anticanonical(a) => (Command::Anticanonical, a),
        Cmd::Report(a) => (Command::Report, a),
        Cmd::Plot(a) => (Command::Plot, a),
    };
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let document = match InputDocument::parse(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let options = Options {
        mov_only: args.mov,
        chamber: args.chamber,
        class: args.class.clone(),
    };
    let result = match cli::run(command, &document, &options) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(cli::exit_code(&e) as u8);
        }
    };
    let rendered = match &result.output {
        Output::Svg(svg) => svg.clone(),
        Output::Report(report) => {
            if args.format == "json" {
                report.to_json()
            } else {
                report.to_text()
            }
        }
    };
    if let Some(path) = &args.output {
        if let Err(e) = std::fs::write(path, rendered.as_bytes()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        let mut stdout = std::io::stdout().lock();
        if stdout.write_all(rendered.as_bytes()).is_err() {
            return ExitCode::from(2);
        }
    }
    if result.negative && args.strict {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
