//! Command-line front end: parses expressions in the shared grammar,
//! dispatches to the library, and prints human-readable or JSON reports.
//!
//! Exit codes: 0 = verified / member, 1 = refuted / non-member (with a
//! witness in the output), 2 = error.

use crate::albert::{
    certify_sidentity, glennie_g8_from_data, replay_certificate, SIdentityVerdict,
};
use crate::diassoc::{bar, involution, Var};
use crate::diterm::{expand_jordan, expand_jordan_di, psi_alg};
use crate::grassmann::sigma;
use crate::membership::{
    herm_decompose, is_jordan_dipolynomial, macdonald_check, symmetric_check, DiMembership,
    MacdonaldReport, DEFAULT_DEGREE_BOUND,
};
use crate::parse::{parse_algterm_poly, parse_dipolynomial, parse_diterm_poly, VarOrder};
use crate::speciality::{ideal_component, quotient_speciality_check, verify_exceptional_quotient};
use crate::{Error, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "dijord",
    about = "Computer algebra for Jordan dialgebras over exact rationals",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Generator total order, e.g. `x,y,z`; unlisted names follow in
    /// order of first appearance.
    #[arg(long, global = true, default_value = "x,y,z")]
    order: String,

    /// Seed for all randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Degree bound guarding span enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BOUND)]
    bound: usize,

    /// Emit a JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Read expressions from a file, one per line; `#` starts a comment.
    #[arg(long, global = true)]
    file: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a term polynomial through the Jordan product rewriting
    /// (dialgebra terms via `|>`/`<|`, algebra terms via `.`).
    Expand { expr: Vec<String> },
    /// Apply the sign-placement map toward a distinguished variable.
    Psi {
        expr: Vec<String>,
        /// Variable every operation sign should point at.
        #[arg(long, default_value = "z")]
        var: String,
    },
    /// Erase central-letter marks: image in the free associative algebra.
    Bar { expr: Vec<String> },
    /// Apply the involution (reverse words and the mark).
    Star { expr: Vec<String> },
    /// Reduce in the Grassmann dialgebra; nonzero images witness
    /// non-membership in the Jordan part.
    Grassmann { expr: Vec<String> },
    /// Decide membership in the Jordan dipolynomials; members get a
    /// re-expanding certificate, non-members a residual.
    IsJordan { expr: Vec<String> },
    /// Decompose a symmetric dipolynomial over generators and marked
    /// tetrads under the Jordan diproduct.
    HermDecompose { expr: Vec<String> },
    /// Does the dialgebra term polynomial vanish under expansion (hold in
    /// all special Jordan dialgebras)?
    HoldsSpecial { expr: Vec<String> },
    /// For input linear in the distinguished variable: holding in the
    /// special Jordan dialgebras implies holding in all of them.
    Macdonald {
        expr: Vec<String>,
        #[arg(long, default_value = "z")]
        var: String,
    },
    /// Rank and basis of a graded component of the ideal generated by the
    /// given elements inside the two-generator Jordan dialgebra.
    Ideal {
        /// Generators, separated by `;`.
        #[arg(long)]
        gens: String,
        #[arg(long)]
        degree: usize,
    },
    /// Is the quotient of the two-generator special Jordan dialgebra by
    /// the given ideal special? (marked-tetrad criterion)
    QuotientSpecial {
        #[arg(long)]
        gens: String,
    },
    /// Certify the degree-5 exceptional quotient construction end to end.
    VerifyTheorem3,
    /// Certify a multilinear s-identity candidate (default: the stored
    /// linearization of Glennie's identity).
    CertifySid { expr: Vec<String> },
    /// Evaluate an algebra term polynomial at seeded random Hermitian
    /// 3x3 octonion matrices.
    EvalAlbert { expr: Vec<String> },
}

fn order_from_flag(flag: &str) -> VarOrder {
    let names: Vec<&str> = flag
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .collect();
    VarOrder::new(&names)
}

fn gather_inputs(args: &[String], file: &Option<std::path::PathBuf>) -> Result<Vec<String>> {
    let mut out = Vec::new();
    if !args.is_empty() {
        out.push(args.join(" "));
    }
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Internal(format!("cannot read {}: {}", path.display(), e)))?;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                out.push(line.to_string());
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Internal("no input expression given".into()));
    }
    Ok(out)
}

struct Report {
    json: bool,
    payload: Vec<serde_json::Value>,
}

impl Report {
    fn new(json: bool) -> Self {
        Report {
            json,
            payload: Vec::new(),
        }
    }

    fn emit(&mut self, text: String, value: serde_json::Value) {
        if self.json {
            self.payload.push(value);
        } else {
            println!("{}", text);
        }
    }

    fn finish(self) {
        if self.json {
            let v = if self.payload.len() == 1 {
                self.payload.into_iter().next().unwrap()
            } else {
                serde_json::Value::Array(self.payload)
            };
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
    }
}

/// Runs one parsed invocation; the returned code is the process exit
/// status.
pub fn run(cli: Cli) -> i32 {
    let mut report = Report::new(cli.json);
    let code = match dispatch(&cli, &mut report) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    };
    report.finish();
    code
}

fn resolve_var(order: &mut VarOrder, name: &str) -> Var {
    order.resolve(name)
}

fn dispatch(cli: &Cli, report: &mut Report) -> Result<i32> {
    let mut worst = 0;
    match &cli.command {
        Command::Expand { expr } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                // dialgebra terms if the dialgebra ops appear, otherwise
                // nonassociative algebra terms
                if input.contains('.') && !input.contains("|>") && !input.contains("<|") {
                    let f = parse_algterm_poly(&input, &mut order)?;
                    let out = expand_jordan(&f);
                    report.emit(
                        out.display(),
                        json!({"input": input, "expansion": out.display()}),
                    );
                } else {
                    let f = parse_diterm_poly(&input, &mut order)?;
                    let out = expand_jordan_di(&f);
                    report.emit(
                        out.display(),
                        json!({"input": input, "expansion": out.display()}),
                    );
                }
            }
        }
        Command::Psi { expr, var } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let z = resolve_var(&mut order, var);
                let f = parse_algterm_poly(&input, &mut order)?;
                let out = psi_alg(&f, &z)?;
                report.emit(
                    out.display(),
                    json!({"input": input, "var": var, "image": out.display()}),
                );
            }
        }
        Command::Bar { expr } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let f = parse_dipolynomial(&input, &mut order)?;
                let out = bar(&f);
                report.emit(
                    out.display(),
                    json!({"input": input, "bar": out.display()}),
                );
            }
        }
        Command::Star { expr } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let f = parse_dipolynomial(&input, &mut order)?;
                let out = involution(&f);
                report.emit(
                    out.display(),
                    json!({"input": input, "star": out.display()}),
                );
            }
        }
        Command::Grassmann { expr } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let f = parse_dipolynomial(&input, &mut order)?;
                let out = sigma(&f);
                report.emit(
                    out.display(),
                    json!({"input": input, "image": out.display(), "zero": out.is_zero()}),
                );
            }
        }
        Command::IsJordan { expr } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let f = parse_dipolynomial(&input, &mut order)?;
                match is_jordan_dipolynomial(&f, cli.bound)? {
                    DiMembership::Member { preimage } => {
                        report.emit(
                            format!("member; certificate: {}", preimage.display()),
                            json!({"input": input, "member": true,
                                   "certificate": preimage.display()}),
                        );
                    }
                    DiMembership::NonMember { residual } => {
                        let witness = sigma(&f);
                        report.emit(
                            format!(
                                "non-member; residual: {}; Grassmann image: {}",
                                residual.display(),
                                witness.display()
                            ),
                            json!({"input": input, "member": false,
                                   "residual": residual.display(),
                                   "grassmann_image": witness.display()}),
                        );
                        worst = worst.max(1);
                    }
                }
            }
        }
        Command::HermDecompose { expr } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let f = parse_dipolynomial(&input, &mut order)?;
                if !symmetric_check(&f) {
                    return Err(Error::Internal(
                        "input is not fixed by the involution".into(),
                    ));
                }
                let d = herm_decompose(&f, cli.bound)?;
                let lines: Vec<String> = d
                    .terms
                    .iter()
                    .map(|(c, t)| format!("{} * {}", c, t))
                    .collect();
                report.emit(
                    lines.join("\n"),
                    json!({"input": input, "terms": lines,
                           "uses_tetrad": d.uses_tetrad()}),
                );
            }
        }
        Command::HoldsSpecial { expr } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let f = parse_diterm_poly(&input, &mut order)?;
                let out = expand_jordan_di(&f);
                if out.is_zero() {
                    report.emit(
                        "holds in all special Jordan dialgebras".into(),
                        json!({"input": input, "holds": true}),
                    );
                } else {
                    report.emit(
                        format!("fails; expansion: {}", out.display()),
                        json!({"input": input, "holds": false,
                               "expansion": out.display()}),
                    );
                    worst = worst.max(1);
                }
            }
        }
        Command::Macdonald { expr, var } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let z = resolve_var(&mut order, var);
                let f = parse_diterm_poly(&input, &mut order)?;
                match macdonald_check(&f, &z)? {
                    MacdonaldReport::IdentityOfAll => {
                        report.emit(
                            "identity of all Jordan dialgebras".into(),
                            json!({"input": input, "identity_of_all": true}),
                        );
                    }
                    MacdonaldReport::NotSpecialIdentity { expansion } => {
                        report.emit(
                            format!(
                                "fails in special Jordan dialgebras; expansion: {}",
                                expansion.display()
                            ),
                            json!({"input": input, "identity_of_all": false,
                                   "expansion": expansion.display()}),
                        );
                        worst = worst.max(1);
                    }
                }
            }
        }
        Command::Ideal { gens, degree } => {
            let mut order = order_from_flag(&cli.order);
            let x = resolve_var(&mut order, "x");
            let y = resolve_var(&mut order, "y");
            let generators = parse_generators(gens, &mut order)?;
            let comp = ideal_component(&x, &y, &generators, *degree, cli.bound)?;
            let lines: Vec<String> = comp.iter().map(|p| p.display()).collect();
            report.emit(
                format!("rank {}\n{}", comp.len(), lines.join("\n")),
                json!({"degree": degree, "rank": comp.len(), "basis": lines}),
            );
        }
        Command::QuotientSpecial { gens } => {
            let mut order = order_from_flag(&cli.order);
            let x = resolve_var(&mut order, "x");
            let y = resolve_var(&mut order, "y");
            let generators = parse_generators(gens, &mut order)?;
            let r = quotient_speciality_check(&x, &y, &generators, cli.bound)?;
            let verdicts: Vec<serde_json::Value> = r
                .verdicts
                .iter()
                .map(|v| {
                    json!({"generator": v.generator_index,
                           "x_tetrad_in_ideal": v.x_tetrad_in_ideal,
                           "y_tetrad_in_ideal": v.y_tetrad_in_ideal,
                           "residual": v.residual.as_ref().map(|p| p.display())})
                })
                .collect();
            if r.special {
                report.emit(
                    "quotient is special".into(),
                    json!({"special": true, "verdicts": verdicts}),
                );
            } else {
                report.emit(
                    "quotient is NOT special (marked tetrad escapes the ideal)".into(),
                    json!({"special": false, "verdicts": verdicts}),
                );
                worst = worst.max(1);
            }
        }
        Command::VerifyTheorem3 => {
            let mut order = order_from_flag(&cli.order);
            let x = resolve_var(&mut order, "x");
            let y = resolve_var(&mut order, "y");
            let cert = verify_exceptional_quotient(&x, &y)?;
            let ok = cert.verified();
            report.emit(
                format!(
                    "k = {}\nf = {}\nclosed form matches: {}; symmetric: {}; \
                     degree-5 ideal rank: {}; f outside ideal: {}\n{}",
                    cert.k.display(),
                    cert.f.display(),
                    cert.f_matches_closed_form,
                    cert.f_symmetric,
                    cert.ideal_rank_deg5,
                    cert.f_outside_ideal,
                    if ok {
                        "quotient is exceptional"
                    } else {
                        "verification FAILED"
                    }
                ),
                json!({"k": cert.k.display(), "f": cert.f.display(),
                       "closed_form_matches": cert.f_matches_closed_form,
                       "symmetric": cert.f_symmetric,
                       "ideal_rank_deg5": cert.ideal_rank_deg5,
                       "f_outside_ideal": cert.f_outside_ideal,
                       "exceptional": ok}),
            );
            if !ok {
                worst = worst.max(1);
            }
        }
        Command::CertifySid { expr } => {
            let mut order = order_from_flag(&cli.order);
            let g = if expr.is_empty() && cli.file.is_none() {
                let stored = glennie_g8_from_data()?;
                let x = resolve_var(&mut order, "x");
                let y = resolve_var(&mut order, "y");
                let z = resolve_var(&mut order, "z");
                let g = crate::diterm::linearize(&stored, &x, 3)?;
                let g = crate::diterm::linearize(&g, &y, 3)?;
                crate::diterm::linearize(&g, &z, 2)?
            } else {
                let input = gather_inputs(expr, &cli.file)?.join(" + ");
                parse_algterm_poly(&input, &mut order)?
            };
            let cert = certify_sidentity(&g, cli.seed)?;
            let replayed = replay_certificate(&g, &cert)?;
            let verdict = cert.verdict();
            let text = match verdict {
                SIdentityVerdict::SIdentity => format!(
                    "s-identity certified: special side vanishes, witness \
                     evaluates nonzero (replayed: {}), all {} sign placements \
                     hold specially and separate",
                    replayed,
                    cert.dialgebra_side.len()
                ),
                SIdentityVerdict::NotSpecialIdentity => {
                    "not an identity of special Jordan algebras (expansion is nonzero)"
                        .to_string()
                }
                SIdentityVerdict::Inconclusive => {
                    "inconclusive: special side vanishes but no separating witness \
                     was found; this is NOT a refutation"
                        .to_string()
                }
            };
            report.emit(
                text,
                json!({"verdict": format!("{:?}", verdict),
                       "special_side_zero": cert.special_side_zero,
                       "witness": cert.witness,
                       "witness_replayed": replayed,
                       "dialgebra_side": cert.dialgebra_side}),
            );
            if verdict != SIdentityVerdict::SIdentity {
                worst = worst.max(1);
            }
        }
        Command::EvalAlbert { expr } => {
            for input in gather_inputs(expr, &cli.file)? {
                let mut order = order_from_flag(&cli.order);
                let f = parse_algterm_poly(&input, &mut order)?;
                let value = crate::albert::eval_at_random(&f, cli.seed);
                let coords: Vec<String> = value.to_coords().iter().map(|c| c.to_string()).collect();
                let zero = value.is_zero();
                report.emit(
                    format!(
                        "value {}: [{}]",
                        if zero { "zero" } else { "nonzero" },
                        coords.join(", ")
                    ),
                    json!({"input": input, "zero": zero, "value": coords}),
                );
            }
        }
    }
    Ok(worst)
}

fn parse_generators(gens: &str, order: &mut VarOrder) -> Result<Vec<crate::diassoc::Dipolynomial>> {
    gens.split(';')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| parse_dipolynomial(s, order))
        .collect()
}

/// Entry point used by the binary: parses arguments and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            // clap handles --help/--version with success codes
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(args: &[&str]) -> i32 {
        let mut full = vec!["dijord"];
        full.extend_from_slice(args);
        main_with_args(full)
    }

    #[test]
    fn exit_codes_match_semantics() {
        assert_eq!(code(&["expand", "(x |> y)"]), 0);
        assert_eq!(code(&["is-jordan", "x *> y"]), 0);
        assert_eq!(code(&["is-jordan", "x^ x y z + z y x x^"]), 1);
        assert_eq!(code(&["holds-special", "(x |> y) - (y <| x)"]), 0);
        assert_eq!(code(&["holds-special", "(x |> y) - (y |> x)"]), 1);
        assert_eq!(code(&["macdonald", "(x *> z) - (z *> x)", "--var", "z"]), 1);
        assert_eq!(code(&["macdonald", "x |> y", "--var", "z"]), 2);
        assert_eq!(code(&["expand", "x |> y |> z"]), 2);
        assert_eq!(code(&["quotient-special", "--gens", "x^"]), 0);
        assert_eq!(code(&["verify-theorem3"]), 0);
        assert_eq!(code(&["no-such-command"]), 2);
    }

    #[test]
    fn order_flag_reaches_parser() {
        // with z declared first, z < x, so the displayed normal form
        // differs; both invocations must still succeed
        assert_eq!(code(&["grassmann", "x^ x y z", "--order", "z,y,x"]), 0);
        assert_eq!(code(&["star", "x y^ z", "--order", "z,y,x"]), 0);
    }
}
