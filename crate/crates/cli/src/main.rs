mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use snowkit::kkohnert::enumerate_kkd;
use snowkit::schubert::{expand_grothendieck_into_lascoux, expand_top_into_snowy_basis};
use snowkit::verify::{run_suite, Suite};
use snowkit::{
    grothendieck, lascoux, qbell, Diagram, Error, Permutation, Polynomial, SnowDiagram, SnowLabel,
    WeakComposition,
};

use output::{polynomial_doc, series_doc, Kind, OutputDocument};

#[derive(Parser)]
#[command(
    name = "snowkit",
    version,
    about = "Grothendieck and Lascoux polynomials, snow diagrams and rajcodes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grothendieck polynomial of a permutation (e.g. 1324 or 1,3,2,4)
    Groth {
        perm: String,
        /// Print only the top b-degree component
        #[arg(long)]
        top: bool,
        /// Print only the b^0 part (the Schubert polynomial)
        #[arg(long, conflicts_with = "top")]
        schubert: bool,
        #[arg(long)]
        json: bool,
    },
    /// Lascoux polynomial of a weak composition (e.g. 0,2,1)
    Lascoux {
        comp: String,
        #[arg(long)]
        top: bool,
        /// Print only the b^0 part (the key polynomial)
        #[arg(long, conflicts_with = "top")]
        key: bool,
        #[arg(long)]
        json: bool,
    },
    /// Top b-degree component of a Grothendieck or Lascoux polynomial
    Top {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        json: bool,
    },
    /// Snow diagram of a Rothe diagram, key diagram or explicit cells
    Snow {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long)]
        json: bool,
    },
    /// Rajcode and raj
    Rajcode {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long)]
        json: bool,
    },
    /// K-Kohnert diagrams of a weak composition
    Kkd {
        comp: String,
        /// Print only the number of diagrams
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Shadow lines of a permutation
    Shadow {
        perm: String,
        /// Print only the turning points, ordered by column
        #[arg(long)]
        turning: bool,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert series coefficients of V-hat_n, or of V-hat up to q^LIMIT
    Hilb {
        #[arg(required_unless_present = "limit", conflicts_with = "limit")]
        n: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Expand the top Grothendieck polynomial into top Lascoux polynomials
    Expand {
        perm: String,
        /// Ambient size (defaults to the number of entries given)
        #[arg(long)]
        n: Option<usize>,
        /// Expand the full Grothendieck polynomial into Lascoux polynomials
        #[arg(long)]
        lascoux: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites: tables, rajcode-equiv, top-las, psw, kkohnert, shadow, qbell, all
    Verify {
        suite: String,
        scale: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PolyInput {
    #[arg(long)]
    perm: Option<String>,
    #[arg(long)]
    comp: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DiagramInput {
    #[arg(long)]
    perm: Option<String>,
    #[arg(long)]
    comp: Option<String>,
    /// Cells as r,c;r,c;...
    #[arg(long)]
    cells: Option<String>,
}

enum Failure {
    Usage(Error),
    Compute(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::AmbientTooSmall { .. } => Failure::Usage(e),
            other => Failure::Compute(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(json: bool, doc: OutputDocument, text: impl FnOnce() -> String) {
    if json {
        println!("{}", doc.to_json());
    } else {
        let text = text();
        if text.ends_with('\n') {
            print!("{text}");
        } else {
            println!("{text}");
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Groth {
            perm,
            top,
            schubert,
            json,
        } => {
            let (w, _) = Permutation::parse_with_size(&perm)?;
            let full = grothendieck(&w);
            print_polynomial(
                &full,
                top,
                schubert,
                json,
                json!({ "permutation": w.to_string() }),
            )
        }
        Command::Lascoux {
            comp,
            top,
            key,
            json,
        } => {
            let alpha: WeakComposition = comp.parse()?;
            let full = lascoux(&alpha);
            print_polynomial(
                &full,
                top,
                key,
                json,
                json!({ "composition": alpha.to_string() }),
            )
        }
        Command::Top { input, json } => {
            let (full, extra) = match (&input.perm, &input.comp) {
                (Some(p), _) => {
                    let (w, _) = Permutation::parse_with_size(p)?;
                    (grothendieck(&w), json!({ "permutation": w.to_string() }))
                }
                (_, Some(c)) => {
                    let alpha: WeakComposition = c.parse()?;
                    (lascoux(&alpha), json!({ "composition": alpha.to_string() }))
                }
                _ => unreachable!("clap requires one input"),
            };
            print_polynomial(&full, true, false, json, extra)
        }
        Command::Snow { input, json } => {
            let (snow, code, raj) = snow_of(&input)?;
            let doc = OutputDocument::new(Kind::Diagram, snow_payload(&snow, &code, raj));
            emit(json, doc, || {
                format!("{}{code} raj={raj}", snow.render_ascii())
            });
            Ok(())
        }
        Command::Rajcode { input, json } => {
            let (_, code, raj) = snow_of(&input)?;
            let doc = OutputDocument::new(
                Kind::Composition,
                json!({ "rajcode": code.entries(), "raj": raj }),
            );
            emit(json, doc, || format!("{code} raj={raj}"));
            Ok(())
        }
        Command::Kkd { comp, count, json } => {
            let alpha: WeakComposition = comp.parse()?;
            let all = enumerate_kkd(&alpha);
            let diagrams: Vec<Value> = all
                .iter()
                .map(|d| {
                    let cells: Vec<Value> = d.cells().map(|(r, c, g)| json!([r, c, g])).collect();
                    json!({ "cells": cells, "weight": d.weight().entries(), "excess": d.excess() })
                })
                .collect();
            let doc = OutputDocument::new(
                Kind::Diagram,
                json!({ "composition": alpha.to_string(), "count": all.len(), "diagrams": diagrams }),
            );
            emit(json, doc, || {
                if count {
                    return all.len().to_string();
                }
                all.iter()
                    .map(|d| format!("ex={} wt={} cells={}\n", d.excess(), d.weight(), d))
                    .collect()
            });
            Ok(())
        }
        Command::Shadow {
            perm,
            turning,
            json,
        } => {
            let (w, n) = Permutation::parse_with_size(&perm)?;
            let lines = w.shadow_lines(n)?;
            let mut points: Vec<(u32, u32)> = w.turning_points(n)?.into_iter().collect();
            points.sort_by_key(|&(r, c)| (c, r));
            let fmt_points = |ps: &[(u32, u32)]| {
                ps.iter()
                    .map(|(r, c)| format!("({r},{c})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let doc = OutputDocument::new(
                Kind::Diagram,
                json!({
                    "lines": lines.iter().map(|l| l.points().to_vec()).collect::<Vec<_>>(),
                    "turning_points": points,
                }),
            );
            emit(json, doc, || {
                if turning {
                    return fmt_points(&points);
                }
                let mut out: String = lines
                    .iter()
                    .enumerate()
                    .map(|(i, l)| format!("L{}: {}\n", i + 1, fmt_points(l.points())))
                    .collect();
                out.push_str(&format!("turning: {}", fmt_points(&points)));
                out
            });
            Ok(())
        }
        Command::Hilb { n, limit, json } => {
            let h = match (n, limit) {
                (_, Some(limit)) => qbell::hilb_v_truncated(limit),
                (Some(0), _) => {
                    return Err(Failure::Usage(Error::Parse("n must be at least 1".into())))
                }
                (Some(n), _) => qbell::hilb_vn(n),
                _ => unreachable!("clap requires n or --limit"),
            };
            emit(json, series_doc(&h), || {
                h.coeffs()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            });
            Ok(())
        }
        Command::Expand {
            perm,
            n,
            lascoux: full,
            json,
        } => {
            let (w, given) = Permutation::parse_with_size(&perm)?;
            let n = n.unwrap_or(given);
            if n < w.len() {
                return Err(Error::AmbientTooSmall {
                    ambient: n,
                    len: w.len(),
                }
                .into());
            }
            let rows: Vec<(String, String)> = if full {
                expand_grothendieck_into_lascoux(&w, n)?
                    .iter()
                    .map(|(a, c)| (a.to_string(), c.to_string()))
                    .collect()
            } else {
                let top = snowkit::top_grothendieck(&w);
                expand_top_into_snowy_basis(&top, n)?
                    .iter()
                    .map(|(a, c)| (a.to_string(), c.to_string()))
                    .collect()
            };
            let terms: Vec<Value> = rows
                .iter()
                .map(|(a, c)| json!({ "composition": a, "coeff": c }))
                .collect();
            let doc = OutputDocument::new(
                Kind::Composition,
                json!({ "permutation": w.to_string(), "n": n, "full": full, "terms": terms }),
            );
            emit(json, doc, || {
                rows.iter().map(|(a, c)| format!("{a} {c}\n")).collect()
            });
            Ok(())
        }
        Command::Verify { suite, scale, json } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, scale)).collect();
            let passed = reports.iter().all(|r| r.passed());
            let payload: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite.name(),
                        "scale": r.scale,
                        "passed": r.passed(),
                        "elapsed_seconds": r.elapsed.as_secs_f64(),
                        "checks": r.checks.iter().map(|c| json!({
                            "name": c.name, "passed": c.passed, "detail": c.detail,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc =
                OutputDocument::new(Kind::Report, json!({ "passed": passed, "suites": payload }));
            emit(json, doc, || {
                let mut out: String = reports.iter().map(|r| format!("{r}\n")).collect();
                out.push_str(if passed {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                });
                out
            });
            if passed {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

fn print_polynomial(
    full: &Polynomial,
    top: bool,
    bottom: bool,
    json: bool,
    extra: Value,
) -> Result<(), Failure> {
    let p = if top {
        full.top_component()?.1
    } else if bottom {
        full.beta_component(0)
    } else {
        full.clone()
    };
    emit(json, polynomial_doc(&p, extra), || p.to_string());
    Ok(())
}

fn snow_of(input: &DiagramInput) -> Result<(SnowDiagram, WeakComposition, u32), Failure> {
    if let Some(p) = &input.perm {
        let (w, n) = Permutation::parse_with_size(p)?;
        let snow = Diagram::rothe(&w).snow();
        let code = w.rajcode(n)?;
        let raj = code.size();
        return Ok((snow, code, raj));
    }
    let d: Diagram = match (&input.comp, &input.cells) {
        (Some(c), _) => c.parse::<WeakComposition>()?.key_diagram(),
        (_, Some(cells)) => cells.parse()?,
        _ => unreachable!("clap requires one input"),
    };
    let snow = d.snow();
    let code = snow.weight();
    let raj = snow.raj();
    Ok((snow, code, raj))
}

fn snow_payload(snow: &SnowDiagram, code: &WeakComposition, raj: u32) -> Value {
    let cells: Vec<Value> = snow
        .labeled_cells()
        .into_iter()
        .map(|((r, c), label)| {
            let label = match label {
                SnowLabel::Plain => "plain",
                SnowLabel::DarkCloud => "dark_cloud",
                SnowLabel::Snowflake => "snowflake",
            };
            json!([r, c, label])
        })
        .collect();
    json!({ "cells": cells, "rajcode": code.entries(), "raj": raj, "render": snow.render_ascii() })
}
