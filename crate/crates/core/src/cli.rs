//! Command-line front end.
//!
//! Every command writes to the given output; [`run`] returns the process
//! exit status (0 success, 1 domain failure, 2 usage error).

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::coxeter::{
    canonical_form, enumerate_fc, format_word, is_fc_reduced, parse_word, CoxeterGraph, FcElement,
    GraphKind, Word,
};
use crate::diagram::{
    factor_into_simples, from_generator_word, parse_diagram, print_diagram, render_diagram,
    validate_admissible, AdmissibleDiagram,
};
use crate::error::Error;
use crate::heap::{is_type_i, is_type_ii, n_value, render_heap};
use crate::starops::{
    apply_weak_star, candidate_moves, classified_irreducibles, is_irreducible,
    reduce_to_irreducible,
};
use crate::theta::{inverse_theta, theta_monomial, verify_faithfulness};
use crate::tl::{normalize_word, tl_multiply, TLElement};
use crate::verify::run_all;

/// Default seed of the randomized acceptance checks.
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(
    name = "affine-tl",
    version,
    about = "Temperley-Lieb algebras of affine type C and their decorated diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Coxeter graph kind.
    #[arg(long, global = true, default_value = "caffine")]
    pub graph: GraphKind,
    /// Rank parameter of the graph.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// A word in the generators, e.g. "1 2 1".
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// Several words separated by semicolons.
    #[arg(long, global = true)]
    pub words: Option<String>,
    /// Length bound for enumerations and sweeps.
    #[arg(long, global = true)]
    pub max_len: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also draw diagrams as text pictures.
    #[arg(long, global = true)]
    pub render: bool,
    /// Diagram file to read (diagram and theta commands).
    #[arg(long, global = true)]
    pub input: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// List the fully commutative elements up to --max-len.
    Enumerate,
    /// Decide whether --word is a fully commutative reduced word.
    FcCheck,
    /// Show the heap of --word: canonical rows, picture, n-value and type.
    Heap,
    /// Show the weak star moves defined on --word and a reduction to an
    /// irreducible element.
    Star,
    /// Test --word for irreducibility, or list the classified irreducible
    /// elements up to --max-len.
    Irreducible,
    /// Normalize --word, or multiply the monomials of --words, in the
    /// Temperley-Lieb algebra.
    TlMul,
    /// Compute the diagram of --word, or validate and factor --input.
    Diagram,
    /// Compute θ(b_w) for --word, invert θ on --input, or sweep up to
    /// --max-len.
    Theta,
    /// Run the acceptance suite.
    Verify,
}

/// Errors that end a command.
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::fmt::Error> for Failure {
    fn from(e: std::fmt::Error) -> Self {
        Failure::Domain(Error::InvariantViolation(e.to_string()))
    }
}

type CmdResult = std::result::Result<bool, Failure>;

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the exit status.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            }
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let mut text = String::new();
    let result = dispatch(cli, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

impl Cli {
    fn graph(&self) -> std::result::Result<CoxeterGraph, Failure> {
        let n = self
            .n
            .ok_or_else(|| Failure::Usage("--n is required".into()))?;
        Ok(CoxeterGraph::new(self.graph, n)?)
    }

    fn word(&self) -> std::result::Result<Word, Failure> {
        let w = self
            .word
            .as_deref()
            .ok_or_else(|| Failure::Usage("--word is required".into()))?;
        Ok(parse_word(w)?)
    }

    fn element(&self, graph: &CoxeterGraph) -> std::result::Result<FcElement, Failure> {
        Ok(canonical_form(graph, &self.word()?)?)
    }

    fn max_len(&self) -> std::result::Result<usize, Failure> {
        self.max_len
            .ok_or_else(|| Failure::Usage("--max-len is required".into()))
    }

    fn read_diagram(&self) -> std::result::Result<Option<crate::diagram::RawDiagram>, Failure> {
        let Some(path) = &self.input else {
            return Ok(None);
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        Ok(Some(parse_diagram(&text)?))
    }
}

fn word_text(e: &FcElement) -> String {
    if e.is_identity() {
        "e".into()
    } else {
        format_word(&e.word())
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> CmdResult {
    match cli.command {
        Command::Enumerate => enumerate(cli, out),
        Command::FcCheck => {
            let g = cli.graph()?;
            let fc = is_fc_reduced(&g, &cli.word()?)?;
            writeln!(
                out,
                "{}",
                if fc {
                    "fully commutative"
                } else {
                    "not fully commutative"
                }
            )?;
            Ok(true)
        }
        Command::Heap => heap(cli, out),
        Command::Star => star(cli, out),
        Command::Irreducible => irreducible(cli, out),
        Command::TlMul => tl_mul(cli, out),
        Command::Diagram => diagram(cli, out),
        Command::Theta => theta(cli, out),
        Command::Verify => {
            let results = run_all(cli.seed);
            for r in &results {
                match cli.format {
                    Format::Text => writeln!(out, "{r}")?,
                    Format::Tsv => writeln!(
                        out,
                        "{}\t{}\t{}\t{}",
                        r.id,
                        if r.passed { "pass" } else { "fail" },
                        r.name,
                        r.detail
                    )?,
                }
            }
            Ok(results.iter().all(|r| r.passed))
        }
    }
}

fn enumerate(cli: &Cli, out: &mut String) -> CmdResult {
    let g = cli.graph()?;
    let elements = enumerate_fc(&g, cli.max_len()?);
    if cli.format == Format::Tsv {
        writeln!(out, "length\tword\trows")?;
    }
    for e in &elements {
        match cli.format {
            Format::Text => writeln!(out, "{}", word_text(e))?,
            Format::Tsv => writeln!(out, "{}\t{}\t{}", e.len(), word_text(e), e)?,
        }
    }
    Ok(true)
}

fn heap(cli: &Cli, out: &mut String) -> CmdResult {
    let g = cli.graph()?;
    let e = cli.element(&g)?;
    writeln!(out, "rows: {e}")?;
    let picture = render_heap(&e);
    if !picture.is_empty() {
        writeln!(out, "{picture}")?;
    }
    if !e.is_identity() {
        writeln!(out, "n-value: {}", n_value(&e)?)?;
    }
    if g.kind() == GraphKind::Caffine {
        match (is_type_i(&e), is_type_ii(&e)) {
            (Some(d), _) => writeln!(out, "type I: {d}")?,
            (None, Some(d)) => writeln!(out, "type II: {d}")?,
            (None, None) => writeln!(out, "neither type I nor type II")?,
        }
    }
    Ok(true)
}

fn star(cli: &Cli, out: &mut String) -> CmdResult {
    let g = cli.graph()?;
    let e = cli.element(&g)?;
    for m in candidate_moves(&g) {
        if let Some(u) = apply_weak_star(&e, &m) {
            writeln!(out, "{m} -> {}", word_text(&u))?;
        }
    }
    let trace = reduce_to_irreducible(&e);
    writeln!(
        out,
        "reduction: {} move(s) to {}",
        trace.moves.len(),
        word_text(&trace.end)
    )?;
    Ok(true)
}

fn irreducible(cli: &Cli, out: &mut String) -> CmdResult {
    let g = cli.graph()?;
    if cli.word.is_some() {
        let e = cli.element(&g)?;
        writeln!(
            out,
            "{}",
            if is_irreducible(&e) {
                "irreducible"
            } else {
                "reducible"
            }
        )?;
        return Ok(true);
    }
    for e in classified_irreducibles(&g, cli.max_len()?)? {
        writeln!(out, "{}", word_text(&e))?;
    }
    Ok(true)
}

fn tl_mul(cli: &Cli, out: &mut String) -> CmdResult {
    let g = cli.graph()?;
    if let Some(words) = &cli.words {
        let mut product = TLElement::one(g);
        for w in words.split(';') {
            let m = normalize_word(&g, &parse_word(w)?)?;
            product = tl_multiply(&product, &TLElement::from_monomial(&m))?;
        }
        writeln!(out, "{product}")?;
        return Ok(true);
    }
    let m = normalize_word(&g, &cli.word()?)?;
    match cli.format {
        Format::Text => writeln!(out, "{m}")?,
        Format::Tsv => writeln!(
            out,
            "{}\t{}\t{}",
            m.two_exp,
            m.delta_exp,
            format_word(&m.element.word())
        )?,
    }
    Ok(true)
}

fn show_diagram(cli: &Cli, d: &AdmissibleDiagram, out: &mut String) -> std::fmt::Result {
    write!(out, "{}", print_diagram(d.raw()))?;
    if cli.render {
        writeln!(out, "{}", render_diagram(d))?;
    }
    Ok(())
}

fn diagram(cli: &Cli, out: &mut String) -> CmdResult {
    if let Some(raw) = cli.read_diagram()? {
        let violations = validate_admissible(&raw)?;
        if !violations.is_empty() {
            for v in &violations {
                writeln!(out, "violation: {v}")?;
            }
            return Ok(false);
        }
        let d = AdmissibleDiagram::new(raw)?;
        writeln!(out, "admissible, a-value {}", d.a_value())?;
        writeln!(
            out,
            "factorization: {}",
            format_word(&factor_into_simples(&d)?)
        )?;
        if cli.render {
            writeln!(out, "{}", render_diagram(&d))?;
        }
        return Ok(true);
    }
    let g = cli.graph()?;
    let r = from_generator_word(&g, &cli.word()?)?;
    writeln!(out, "scalar: 2^{} d^{}", r.two_exp, r.delta_exp)?;
    show_diagram(cli, &r.diagram, out)?;
    Ok(true)
}

fn theta(cli: &Cli, out: &mut String) -> CmdResult {
    let g = cli.graph()?;
    if let Some(raw) = cli.read_diagram()? {
        let d = AdmissibleDiagram::new(raw)?;
        writeln!(out, "{}", word_text(&inverse_theta(&g, &d)?))?;
        return Ok(true);
    }
    if cli.word.is_some() {
        let e = cli.element(&g)?;
        show_diagram(cli, &theta_monomial(&e)?, out)?;
        return Ok(true);
    }
    let report = verify_faithfulness(&g, cli.max_len()?)?;
    writeln!(out, "{report}")?;
    Ok(report.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_args(
            std::iter::once("affine-tl").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn fc_check_verdicts() {
        let (code, out, _) = run_cli(&[
            "fc-check",
            "--graph",
            "caffine",
            "--n",
            "3",
            "--word",
            "1 3 2 1 2",
        ]);
        assert_eq!((code, out.as_str()), (0, "not fully commutative\n"));
        let (_, out, _) = run_cli(&["fc-check", "--n", "3", "--word", "1 2 1 3 2"]);
        assert_eq!(out, "fully commutative\n");
    }

    #[test]
    fn tl_mul_doubles() {
        let (code, out, _) = run_cli(&[
            "tl-mul", "--graph", "caffine", "--n", "4", "--word", "1 2 1 2",
        ]);
        assert_eq!((code, out.as_str()), (0, "2 * b[1 2]\n"));
        let (_, out, _) = run_cli(&["tl-mul", "--n", "4", "--words", "1 2; 1 2"]);
        assert_eq!(out, "2 * b[1 2]\n");
        let (_, out, _) = run_cli(&["tl-mul", "--n", "4", "--word", "3 3", "--format", "tsv"]);
        assert_eq!(out, "0\t1\t3\n");
    }

    #[test]
    fn enumerate_b2() {
        let (code, out, _) = run_cli(&["enumerate", "--graph", "b", "--n", "2", "--max-len", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 7);
        assert_eq!(out.lines().next(), Some("e"));
    }

    #[test]
    fn usage_and_domain_errors() {
        assert_eq!(run_cli(&["enumerate", "--n", "2"]).0, 2);
        assert_eq!(run_cli(&["bogus"]).0, 2);
        assert_eq!(run_cli(&["heap", "--n", "3", "--word", "1 1"]).0, 1);
        assert_eq!(
            run_cli(&["diagram", "--graph", "a", "--n", "3", "--word", "1"]).0,
            1
        );
    }
}
