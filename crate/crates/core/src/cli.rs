//! Command-line front end. Exit status is 0 when the requested report
//! passes, 1 when it fails and 2 on input or usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::findim::post::{
    check_posthopf_iso, h4_scaling, sweedler_h4, verify_findim_file, verify_post_hopf_findim, verify_post_hopf_solved,
    FindimJson,
};
use crate::findim::rrb::RrbJson;
use crate::findim::{matched, rrb};
use crate::kernel::{int, parse_rational, LinComb, Rational};
use crate::liepbw::{liepbw_pipeline, LiePbwJson};
use crate::posthopf::{full_suite, Grafting, Magma, Mutation, PostHopfTrunc, TableMagma};
use crate::report::Report;
use crate::trees::{graft_left, graft_unordered, parse_forest, OrderedTree, TreeLetter, UnorderedTree};
use crate::ybe::verify_ybe;

#[derive(Parser, Debug)]
#[command(name = "posthopf", version, about = "Exact post-Hopf algebra computations and verification suites")]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Left grafting τ ↷ ω of two trees.
    Graft {
        tau: String,
        omega: String,
        /// Graft non-planar trees and collect equal shapes.
        #[arg(long)]
        unordered: bool,
    },
    /// Grossman-Larson product X ∗ Y of two forests.
    Gl {
        x: String,
        y: String,
        /// Truncation degree; defaults to the total degree of the inputs.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        unordered: bool,
    },
    /// Braid relation and compatibility suites for R.
    Ybe {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Alphabet::Ordered)]
        alphabet: Alphabet,
        #[arg(long, default_value_t = Mutation::None)]
        mutate: Mutation,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Alphabet {
    Ordered,
    Unordered,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum InverseChoice {
    /// Solve for the convolution inverse by linear algebra.
    Solved,
    /// Use the table of ▷ with parameter −a.
    NegA,
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Post-Hopf, subadjacent, brace and post-Lie suites on forests.
    PosthopfTrees {
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Alphabet::Ordered)]
        alphabet: Alphabet,
        #[arg(long, default_value_t = Mutation::None)]
        mutate: Mutation,
        /// Extend a magma table read from a JSON file instead of grafting.
        #[arg(long)]
        magma: Option<PathBuf>,
    },
    /// Sweedler's algebra with the post-Hopf product ▷_a.
    H4 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value_t = InverseChoice::Solved)]
        inverse: InverseChoice,
    },
    /// A Hopf algebra by structure constants, with an optional post-product.
    Findim { file: PathBuf },
    /// Every suite derived from a relative Rota-Baxter operator.
    Rrb { file: PathBuf },
    /// Matched pair, double crossproduct and twist of a relative Rota-Baxter operator.
    MatchedPair { file: PathBuf },
    /// Lie-level operator, its lift to enveloping algebras and the graph.
    Liepbw {
        file: PathBuf,
        /// Overrides the degree stored in the file.
        #[arg(long)]
        degree: Option<usize>,
    },
}

/// Runs the command, writing results to `out`. Returns whether the
/// requested computation succeeded and, for suites, passed.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Graft { tau, omega, unordered } => {
            let line = if *unordered {
                let (t, o): (UnorderedTree, UnorderedTree) = (tau.parse()?, omega.parse()?);
                graft_unordered(&t, &o).to_string()
            } else {
                let (t, o): (OrderedTree, OrderedTree) = (tau.parse()?, omega.parse()?);
                graft_left(&t, &o).to_string()
            };
            writeln!(out, "{line}")?;
            Ok(true)
        }
        Command::Gl { x, y, degree, unordered } => {
            let line = if *unordered {
                gl_line::<UnorderedTree>(x, y, *degree)?
            } else {
                gl_line::<OrderedTree>(x, y, *degree)?
            };
            writeln!(out, "{line}")?;
            Ok(true)
        }
        Command::Ybe { degree, alphabet, mutate } => {
            let report = match alphabet {
                Alphabet::Ordered => verify_ybe(&tree_algebra::<OrderedTree>(*degree, *mutate, None)?, *degree)?,
                Alphabet::Unordered => verify_ybe(&tree_algebra::<UnorderedTree>(*degree, *mutate, None)?, *degree)?,
            };
            emit(out, &report, cli.json)
        }
        Command::Verify { suite } => {
            let report = run_suite(suite)?;
            emit(out, &report, cli.json)
        }
    }
}

fn gl_line<L: TreeLetter + std::str::FromStr<Err = Error>>(x: &str, y: &str, degree: Option<usize>) -> Result<String> {
    let (x, y) = (parse_forest::<L>(x)?, parse_forest::<L>(y)?);
    let total = x.degree() + y.degree();
    let ph = PostHopfTrunc::<L>::new(Arc::new(Grafting), degree.unwrap_or(total));
    Ok(ph.gl_product(&LinComb::basis(x), &LinComb::basis(y))?.to_string())
}

fn tree_algebra<L>(degree: usize, mutation: Mutation, magma: Option<&Path>) -> Result<PostHopfTrunc<L>>
where
    L: TreeLetter + crate::kernel::Graded + std::str::FromStr<Err = Error>,
{
    let magma: Arc<dyn Magma<L>> = match magma {
        Some(p) => Arc::new(TableMagma::<L>::load(p)?),
        None => Arc::new(Grafting),
    };
    Ok(PostHopfTrunc::new(magma, degree + 1).with_mutation(mutation))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// Evaluates one `verify` suite.
pub fn run_suite(suite: &Suite) -> Result<Report> {
    match suite {
        Suite::PosthopfTrees { degree, alphabet, mutate, magma } => match alphabet {
            Alphabet::Ordered => full_suite(&tree_algebra::<OrderedTree>(*degree, *mutate, magma.as_deref())?, *degree),
            Alphabet::Unordered => full_suite(&tree_algebra::<UnorderedTree>(*degree, *mutate, magma.as_deref())?, *degree),
        },
        Suite::H4 { a, inverse } => Ok(h4_report(&parse_rational(a)?, *inverse)),
        Suite::Findim { file } => verify_findim_file(&read_json::<FindimJson>(file)?),
        Suite::Rrb { file } => {
            let r = read_json::<RrbJson>(file)?.load()?;
            matched::rrb_pipeline(&r)
        }
        Suite::MatchedPair { file } => {
            let r = read_json::<RrbJson>(file)?.load()?;
            matched_pair_report(&r)
        }
        Suite::Liepbw { file, degree } => {
            let (r, d) = read_json::<LiePbwJson>(file)?.load()?;
            liepbw_pipeline(&r, degree.unwrap_or(d))
        }
    }
}

/// Post-Hopf axioms of `(H4, ▷_a)` with the chosen inverse, and for
/// `a ≠ 0` the isomorphism `x ↦ ax` onto `(H4, ▷_1)`.
pub fn h4_report(a: &Rational, inverse: InverseChoice) -> Report {
    let (h, t) = sweedler_h4(a);
    let mut report = Report::new(format!("H4 with ▷_{a}"));
    let axioms = match inverse {
        InverseChoice::Solved => verify_post_hopf_solved(&h, &t),
        InverseChoice::NegA => verify_post_hopf_findim(&h, &t, &sweedler_h4(&-a.clone()).1),
    };
    report.absorb(axioms);
    if *a != int(0) {
        let (_, t1) = sweedler_h4(&int(1));
        report.absorb(check_posthopf_iso(&h4_scaling(a), (&h, &t), (&h, &t1)));
    }
    report
}

/// Matched-pair axioms and, when they hold, the double crossproduct and
/// the twist onto the smash product.
pub fn matched_pair_report(r: &rrb::RelativeRb) -> Result<Report> {
    let mut report = Report::new(format!("matched pair from {} -> {}", r.k.name(), r.h.name()));
    let (right, mp) = matched::matched_pair_from_rrb(r)?;
    let ok = mp.pass;
    report.absorb(mp);
    if ok {
        let kt = r.descendent_unchecked();
        let dcp = crate::findim::FinDimHopf::unchecked(matched::double_crossproduct_parts(&kt, &r.h, &r.act, &right));
        report.absorb(crate::findim::verify_hopf(&dcp));
        report.absorb(matched::twist_check(r, &dcp));
    }
    Ok(report)
}

fn emit(out: &mut dyn Write, report: &Report, json: bool) -> Result<bool> {
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(report.pass)
}

/// Parses `args` and runs; the returned code is the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    ExitCode::from(run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["posthopf"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn graft_commands() {
        let (code, out, _) = call(&["graft", "()", "()"]);
        assert_eq!((code, out.trim()), (0, "(())"));
        let (code, out, _) = call(&["graft", "--unordered", "(())", "(()()())"]);
        assert_eq!(code, 0);
        // root of the corolla once, each of its three leaves equally
        assert_eq!(out.trim(), "3*(((()))()()) + ((())()()())");
        let (code, _, err) = call(&["graft", "(()", "()"]);
        assert_eq!(code, 2);
        assert!(err.contains("parse error"));
    }

    #[test]
    fn gl_command() {
        let (code, out, _) = call(&["gl", "()", "()"]);
        assert_eq!(code, 0);
        let v: LinComb<crate::trees::Forest> = out.trim().parse().unwrap();
        let expected: LinComb<crate::trees::Forest> = "() () + (())".parse().unwrap();
        assert_eq!(v, expected);
        assert_eq!(call(&["gl", "", "(())"]).1.trim(), "(())");
        assert_eq!(call(&["gl", "(())", ""]).1.trim(), "(())");
        let (code, _, err) = call(&["gl", "(())", "()", "--degree", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("cutoff"));
    }

    #[test]
    fn ybe_and_h4() {
        assert_eq!(call(&["ybe", "--degree", "0"]).0, 0);
        assert_eq!(call(&["ybe", "--degree", "2", "--alphabet", "unordered"]).0, 0);
        assert_eq!(call(&["ybe", "--degree", "2", "--mutate", "subadjacent-antipode"]).0, 1);
        assert_eq!(call(&["verify", "h4", "--a", "1"]).0, 0);
        assert_eq!(call(&["verify", "h4", "--a", "-3"]).0, 0);
        let (code, out, _) = call(&["verify", "h4", "--a", "2", "--inverse", "neg-a", "--json"]);
        assert_eq!(code, 1);
        let report: Report = serde_json::from_str(&out).unwrap();
        assert!(!report.pass);
        assert_eq!(call(&["verify", "h4", "--a", "0", "--inverse", "neg-a"]).0, 0);
    }
}
