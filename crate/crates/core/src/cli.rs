//! The `rectify` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::auto::{Factor, FactoredAuto};
use crate::document::CertificateDocument;
use crate::embedding::{verify_certificate, Embedding};
use crate::error::Error;
use crate::poly::{LaurentPoly, Var};
use crate::recipes::{combinatorial_coeffs, run_recipe, Recipe};
use crate::residual::clear_denominators;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INAPPLICABLE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rectify", version, about = "Rectify embeddings (t^n, t^m, t^l + t) of the line in 3-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a certificate for an embedding given as "X,Y,Z" in t.
    Embed {
        embedding: String,
        /// auto, trivial, craighero3, craighero4, br-general[:b], br-n4, kuroda[:a,c,l,s]
        #[arg(long, default_value = "auto")]
        recipe: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a JSON certificate from scratch.
    Verify { path: PathBuf },
    /// Print the coefficients alpha_i (and beta for even m).
    Coeffs { m: u32 },
    /// Run a built-in example.
    Demo {
        #[arg(value_parser = ["nagata"])]
        name: String,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::InvalidArgument(_) | Error::InvalidEmbedding(_) | Error::XNotMonomial(_) => EXIT_USAGE,
            e if e.is_inapplicable() => EXIT_INAPPLICABLE,
            _ => EXIT_VERIFICATION,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Runs the command line `argv` (including the program name) and returns the
/// exit code.
pub fn run_cli<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Embed { embedding, recipe, json, out: path } => embed(&embedding, &recipe, json, path, out),
        Command::Verify { path } => verify(&path, out),
        Command::Coeffs { m } => coeffs(m, out),
        Command::Demo { .. } => demo_nagata(out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::usage(e)
}

fn embed(input: &str, recipe: &str, json: bool, path: Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    let recipe: Recipe = recipe.parse()?;
    let e: Embedding = input.parse()?;
    let cert = run_recipe(&e, recipe)?;
    if let Err(reasons) = verify_certificate(&cert) {
        return Err(Failure { code: EXIT_VERIFICATION, message: reasons.join("; ") });
    }
    let text = if json { CertificateDocument::from_certificate(&cert).to_json() + "\n" } else { cert.to_string() };
    match path {
        Some(p) => std::fs::write(&p, text).map_err(io),
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

fn verify(path: &PathBuf, out: &mut dyn Write) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let cert = CertificateDocument::from_json(&text)?.to_certificate()?;
    match verify_certificate(&cert) {
        Ok(()) => writeln!(out, "verified: {}", cert.embedding).map_err(io),
        Err(reasons) => {
            Err(Failure { code: EXIT_VERIFICATION, message: format!("certificate rejected: {}", reasons.join("; ")) })
        }
    }
}

fn coeffs(m: u32, out: &mut dyn Write) -> Result<(), Failure> {
    let c = combinatorial_coeffs(m).map_err(Failure::usage)?;
    let alphas: Vec<String> = c.alphas.iter().map(ToString::to_string).collect();
    writeln!(out, "alpha = [{}]", alphas.join(", ")).map_err(io)?;
    if m.is_multiple_of(2) {
        writeln!(out, "beta = {}", c.beta).map_err(io)?;
    }
    writeln!(out, "sum_i alpha_i t^i (1 + t)^(m - 2i) = {}", c.lhs()).map_err(io)
}

fn write_triple(out: &mut dyn Write, name: &str, a: &FactoredAuto) -> Result<(), Failure> {
    let [x, y, z] = a.to_triple()?;
    writeln!(out, "{name} = ({x}, {y}, {z})").map_err(io)
}

fn demo_nagata(out: &mut dyn Write) -> Result<(), Failure> {
    let p = |s: &str| s.parse::<LaurentPoly>().expect("literal polynomial");
    let alpha = FactoredAuto::new(vec![Factor::elem(Var::Z, p("-y^2/x"))?]);
    let beta = FactoredAuto::new(vec![Factor::elem(Var::Y, p("x^2*z"))?]);
    writeln!(out, "alpha = (x, y, z - y^2/x), beta = (x, y + x^2*z, z)").map_err(io)?;
    let r = clear_denominators(&alpha.then(&beta), Var::Z, None)?;
    writeln!(out, "gamma = (x, y, z + {})", r.correction).map_err(io)?;
    write_triple(out, "gamma beta alpha", &r.cleared)?;

    let alpha0 = FactoredAuto::new(vec![Factor::elem(Var::Z, p("-y^2/x^2"))?]);
    let beta0 = FactoredAuto::new(vec![Factor::elem(Var::Y, p("x^3*z"))?]);
    writeln!(out).map_err(io)?;
    writeln!(out, "alpha0 = (x, y, z - y^2/x^2), beta0 = (x, y + x^3*z, z)").map_err(io)?;
    let r = clear_denominators(&alpha0.then(&beta0).then(&alpha0.invert()), Var::Z, None)?;
    writeln!(out, "gamma = (x, y, z + {})", r.correction).map_err(io)?;
    write_triple(out, "gamma alpha0^-1 beta0 alpha0", &r.cleared)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["rectify"];
        argv.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_cli(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn coeffs_one() {
        let (code, out, _) = run(&["coeffs", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("alpha = [1]\n"));
    }

    #[test]
    fn json_then_verify() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c3.json");
        let (code, _, _) = run(&["embed", "t^3,t^4,t^5+t", "--json", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        let (code, out, _) = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{out}");

        let tampered = std::fs::read_to_string(&path).unwrap().replace("\"coordinate\": \"", "\"coordinate\": \"2*");
        std::fs::write(&path, tampered).unwrap();
        assert_eq!(run(&["verify", path.to_str().unwrap()]).0, 3);
    }

    #[test]
    fn open_case_exit_code() {
        let (code, out, err) = run(&["embed", "t^5,t^6,t^7+t"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("no recipe applies") && err.contains("br-n4"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["embed", "t^2,t^3"]).0, 1);
        assert_eq!(run(&["embed", "t^2,t^3,t^4+t", "--recipe", "nope"]).0, 1);
        assert_eq!(run(&["frobnicate"]).0, 1);
        assert_eq!(run(&["coeffs", "0"]).0, 1);
        assert_eq!(run(&["verify", "/nonexistent/cert.json"]).0, 1);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn pinned_recipe() {
        let (code, out, _) = run(&["embed", "t^5,t^7,t^9+t", "--recipe", "br-general:2"]);
        assert_eq!(code, 0);
        assert!(out.contains("coordinate:"));
        assert_eq!(run(&["embed", "t^5,t^7,t^9+t", "--recipe", "craighero3"]).0, 2);
    }

    #[test]
    fn demo() {
        let (code, out, _) = run(&["demo", "nagata"]);
        assert_eq!(code, 0);
        assert!(out.contains("gamma = (x, y, z + 2*y^3/x)"), "{out}");
    }
}
