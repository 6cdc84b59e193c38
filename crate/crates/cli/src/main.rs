//! `fusionq`: exact computations around sl2 fusion products.
//!
//! Subcommands compute restricted/unrestricted Kostka polynomials,
//! q-supernomials, Verlinde products, tableau charge polynomials, graded
//! characters of fusion products and coinvariant spaces, componentwise
//! ideal fusion, and run the cross-identity verification sweeps.
//!
//! Exit codes: 0 on success, 1 on computation errors or failed
//! verification, 2 on usage errors.

mod verify;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use fusionq_core::fusion::{
    self, build_filtration, componentwise_ideal_fuse, irrep_factors, top_of_ideal,
    ComponentwiseIdeal, GradedCharacter,
};
use fusionq_core::gordon;
use fusionq_core::kostka;
use fusionq_core::linalg::Rat;
use fusionq_core::qseries::QPoly;
use fusionq_core::tableaux;
use fusionq_core::verlinde;
use serde::Serialize;
use std::process::ExitCode;
use verify::{Identity, SweepConfig};

const SCHEMA: &str = "fusionq/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CoinvMode {
    Graded,
    Filtered,
}

#[derive(Parser)]
#[command(
    name = "fusionq",
    about = "Exact Kostka polynomials, Verlinde fusion rules and sl2 fusion-product characters",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Level-restricted Kostka polynomial.
    Rkostka {
        /// Level k (defaults to the length of --m; when given, --m is
        /// zero-padded to length k).
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        l: usize,
        /// Comma-separated multiplicities m_1,...,m_k.
        #[arg(long)]
        m: String,
    },
    /// Unrestricted Kostka polynomial.
    Kostka {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: String,
    },
    /// q-supernomial coefficient.
    Supernomial {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: String,
    },
    /// Product of basis classes in the level-k Verlinde algebra.
    Verlinde {
        #[arg(long)]
        level: usize,
        /// Comma-separated weights, e.g. 1,1,2.
        #[arg(long)]
        word: String,
        /// Print only the coefficient of the class `[l]`.
        #[arg(long)]
        coef: Option<usize>,
    },
    /// Semistandard tableaux and the charge polynomial.
    Tableaux {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: String,
        /// Also list the tableaux.
        #[arg(long)]
        list: bool,
    },
    /// Graded character of the fusion product of irreducibles.
    FusionChar {
        #[arg(long)]
        m: String,
        /// Comma-separated rational points (default: deterministic pool).
        #[arg(long)]
        points: Option<String>,
    },
    /// Coinvariant character of the fusion product.
    Coinv {
        #[arg(long)]
        m: String,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value = "graded")]
        mode: CoinvMode,
        #[arg(long)]
        points: Option<String>,
    },
    /// Dual symmetric-polynomial space character.
    Gordon {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: String,
        /// Also list a basis of the solution space.
        #[arg(long)]
        list_basis: bool,
        /// Variable cap (cost guard).
        #[arg(long, default_value_t = gordon::DEFAULT_VARIABLE_CAP)]
        cap: usize,
    },
    /// Fuse componentwise ideals at given points.
    IdealFuse {
        /// JSON file holding one ideal (replicated) or a list of ideals.
        #[arg(long)]
        spec: std::path::PathBuf,
        #[arg(long)]
        points: String,
        /// Take the collision top of the fused ideal.
        #[arg(long)]
        top: bool,
    },
    /// Verify cross-module identities over a sweep grid.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        /// Bound on |m| (clamped to the hard cap 10).
        #[arg(long)]
        max_size: Option<usize>,
        /// Bound on the level k.
        #[arg(long)]
        level: Option<usize>,
    },
}

#[derive(Debug)]
struct CliError(String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn parse_usize_list(input: &str, what: &str) -> Result<Vec<usize>, CliError> {
    if input.trim().is_empty() {
        return Ok(Vec::new());
    }
    input
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| CliError(format!("bad {what} entry {part:?}: {e}")))
        })
        .collect()
}

fn parse_point_list(input: &str) -> Result<Vec<Rat>, CliError> {
    input
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<Rat>()
                .map_err(|e| CliError(format!("bad point {part:?}: {e}")))
        })
        .collect()
}

/// m for restricted commands: length implies k unless --level zero-pads.
fn resolve_multiplicities(m: &str, level: Option<usize>) -> Result<(usize, Vec<usize>), CliError> {
    let mut m = parse_usize_list(m, "multiplicity")?;
    let k = match level {
        Some(k) => {
            if m.len() > k {
                return Err(CliError(format!(
                    "multiplicity vector has length {} but the level is {k}",
                    m.len()
                )));
            }
            m.resize(k, 0);
            k
        }
        None => m.len(),
    };
    Ok((k, m))
}

fn seed_from_env() -> Result<Option<u64>, CliError> {
    match std::env::var("FUSIONQ_SEED") {
        Ok(value) => value
            .parse::<u64>()
            .map(Some)
            .map_err(|e| CliError(format!("bad FUSIONQ_SEED {value:?}: {e}"))),
        Err(_) => Ok(None),
    }
}

fn points_for(n: usize, explicit: Option<&str>) -> Result<Vec<Rat>, CliError> {
    match explicit {
        Some(list) => {
            let points = parse_point_list(list)?;
            if points.len() != n {
                return Err(CliError(format!(
                    "expected {n} points, got {}",
                    points.len()
                )));
            }
            Ok(points)
        }
        None => Ok(fusion::point_set(n, seed_from_env()?)?),
    }
}

// --- output helpers ---

#[derive(Serialize)]
struct PolyOutput {
    schema: &'static str,
    coeffs: Vec<String>,
}

fn print_poly(format: Format, poly: &QPoly) {
    match format {
        Format::Json => {
            let out = PolyOutput {
                schema: SCHEMA,
                coeffs: poly.dense_coeffs().iter().map(|c| c.to_string()).collect(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Tsv => {
            let cells: Vec<String> = poly.dense_coeffs().iter().map(|c| c.to_string()).collect();
            println!("{}", cells.join("\t"));
        }
        Format::Pretty => println!("{poly}"),
    }
}

#[derive(Serialize)]
struct CharacterEntry {
    degree: usize,
    weight: i64,
    dim: usize,
}

#[derive(Serialize)]
struct CharacterOutput {
    schema: &'static str,
    points: Vec<String>,
    character: Vec<CharacterEntry>,
}

fn rat_display(r: &Rat) -> String {
    if *r.denom() == num_bigint::BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn print_character(format: Format, points: &[Rat], character: &GradedCharacter) {
    let entries: Vec<CharacterEntry> = character
        .entries()
        .map(|(degree, weight, dim)| CharacterEntry {
            degree,
            weight,
            dim,
        })
        .collect();
    match format {
        Format::Json => {
            let out = CharacterOutput {
                schema: SCHEMA,
                points: points.iter().map(rat_display).collect(),
                character: entries,
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Tsv => {
            for e in entries {
                println!("{}\t{}\t{}", e.degree, e.weight, e.dim);
            }
        }
        Format::Pretty => {
            let point_list: Vec<String> = points.iter().map(rat_display).collect();
            println!("points: {}", point_list.join(", "));
            println!("degree  weight  dim");
            for e in entries {
                println!("{:>6}  {:>6}  {:>3}", e.degree, e.weight, e.dim);
            }
            println!("q-series by weight:");
            for w in character.weights() {
                println!("  weight {w}: {}", character.weight_series(w));
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Rkostka { level, l, m } => {
            let (k, m) = resolve_multiplicities(&m, level)?;
            let poly = kostka::restricted_kostka(k, l, &m)?;
            print_poly(format, &poly);
        }
        Command::Kostka { l, m } => {
            let m = parse_usize_list(&m, "multiplicity")?;
            print_poly(format, &kostka::unrestricted_kostka(l, &m));
        }
        Command::Supernomial { l, m } => {
            let m = parse_usize_list(&m, "multiplicity")?;
            print_poly(format, &kostka::supernomial(l, &m));
        }
        Command::Verlinde { level, word, coef } => {
            let word = parse_usize_list(&word, "weight")?;
            match coef {
                Some(l) => {
                    let c = verlinde::fusion_coefficient(level, &word, l)?;
                    println!("{c}");
                }
                None => {
                    let product = verlinde::verlinde_word_product(level, &word)?;
                    let coeffs: Vec<String> =
                        product.coeffs().iter().map(|c| c.to_string()).collect();
                    match format {
                        Format::Json => {
                            let out = PolyOutput {
                                schema: SCHEMA,
                                coeffs,
                            };
                            println!("{}", serde_json::to_string(&out).expect("serializable"));
                        }
                        Format::Tsv => println!("{}", coeffs.join("\t")),
                        Format::Pretty => {
                            let terms: Vec<String> = coeffs
                                .iter()
                                .enumerate()
                                .filter(|(_, c)| c.as_str() != "0")
                                .map(|(l, c)| format!("{c}[{l}]"))
                                .collect();
                            if terms.is_empty() {
                                println!("0");
                            } else {
                                println!("{}", terms.join(" + "));
                            }
                        }
                    }
                }
            }
        }
        Command::Tableaux { l, m, list } => {
            let m = parse_usize_list(&m, "multiplicity")?;
            let size = kostka::weighted_size(&m);
            let poly = tableaux::kostka_via_charge(l, &m)?;
            let shape: Vec<usize> = if l <= size && (size - l).is_multiple_of(2) {
                [(size + l) / 2, (size - l) / 2]
                    .into_iter()
                    .filter(|&x| x > 0)
                    .collect()
            } else {
                Vec::new()
            };
            let tabs = tableaux::enumerate_tableaux(&shape, &tableaux::content_partition(&m));
            #[derive(Serialize)]
            struct TableauxOutput {
                schema: &'static str,
                count: usize,
                coeffs: Vec<String>,
                #[serde(skip_serializing_if = "Option::is_none")]
                tableaux: Option<Vec<Vec<Vec<usize>>>>,
            }
            let listing = list.then(|| tabs.iter().map(|t| t.rows().to_vec()).collect::<Vec<_>>());
            match format {
                Format::Json => {
                    let out = TableauxOutput {
                        schema: SCHEMA,
                        count: tabs.len(),
                        coeffs: poly.dense_coeffs().iter().map(|c| c.to_string()).collect(),
                        tableaux: listing,
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
                Format::Tsv => {
                    let cells: Vec<String> =
                        poly.dense_coeffs().iter().map(|c| c.to_string()).collect();
                    println!("{}\t{}", tabs.len(), cells.join("\t"));
                }
                Format::Pretty => {
                    println!("count: {}", tabs.len());
                    println!("polynomial: {poly}");
                    if let Some(listing) = listing {
                        for rows in listing {
                            let rendered: Vec<String> = rows
                                .iter()
                                .map(|r| {
                                    r.iter()
                                        .map(|x| x.to_string())
                                        .collect::<Vec<_>>()
                                        .join(" ")
                                })
                                .collect();
                            println!("[{}]", rendered.join(" / "));
                        }
                    }
                }
            }
        }
        Command::FusionChar { m, points } => {
            let m = parse_usize_list(&m, "multiplicity")?;
            let n: usize = m.iter().sum();
            let points = points_for(n, points.as_deref())?;
            let factors = irrep_factors(&m, &points);
            let character = fusion::fusion_character(&factors)?;
            print_character(format, &points, &character);
        }
        Command::Coinv {
            m,
            level,
            l,
            mode,
            points,
        } => {
            let (k, m) = resolve_multiplicities(&m, Some(level))?;
            let n: usize = m.iter().sum();
            let points = points_for(n, points.as_deref())?;
            let factors = irrep_factors(&m, &points);
            let filtration = build_filtration(&factors)?;
            let poly = match mode {
                CoinvMode::Graded => filtration.graded_coinvariant_character(k, l)?,
                CoinvMode::Filtered => filtration.filtered_coinvariant_character(k, l)?,
            };
            print_poly(format, &poly);
        }
        Command::Gordon {
            level,
            l,
            m,
            list_basis,
            cap,
        } => {
            let (k, m) = resolve_multiplicities(&m, Some(level))?;
            let solution = gordon::solve_dual_space_with_cap(k, l, &m, cap)?;
            let poly = solution.character();
            if !list_basis {
                print_poly(format, &poly);
            } else {
                #[derive(Serialize)]
                struct BasisTerm {
                    partition: Vec<usize>,
                    coeff: String,
                }
                #[derive(Serialize)]
                struct BasisComponent {
                    degree: usize,
                    polynomials: Vec<Vec<BasisTerm>>,
                }
                #[derive(Serialize)]
                struct GordonOutput {
                    schema: &'static str,
                    coeffs: Vec<String>,
                    basis: Vec<BasisComponent>,
                }
                let basis: Vec<BasisComponent> = solution
                    .components
                    .iter()
                    .filter(|c| !c.solutions.is_empty())
                    .map(|c| BasisComponent {
                        degree: c.degree,
                        polynomials: c
                            .solutions
                            .iter()
                            .map(|sol| {
                                c.partitions
                                    .iter()
                                    .zip(sol)
                                    .filter(|(_, coeff)| **coeff != fusionq_core::linalg::rat(0))
                                    .map(|(partition, coeff)| BasisTerm {
                                        partition: partition.clone(),
                                        coeff: rat_display(coeff),
                                    })
                                    .collect()
                            })
                            .collect(),
                    })
                    .collect();
                match format {
                    Format::Json => {
                        let out = GordonOutput {
                            schema: SCHEMA,
                            coeffs: poly.dense_coeffs().iter().map(|c| c.to_string()).collect(),
                            basis,
                        };
                        println!("{}", serde_json::to_string(&out).expect("serializable"));
                    }
                    Format::Tsv | Format::Pretty => {
                        println!("character: {poly}");
                        for comp in basis {
                            for poly_terms in comp.polynomials {
                                let rendered: Vec<String> = poly_terms
                                    .iter()
                                    .map(|t| {
                                        format!(
                                            "{} * m[{}]",
                                            t.coeff,
                                            t.partition
                                                .iter()
                                                .map(|p| p.to_string())
                                                .collect::<Vec<_>>()
                                                .join(",")
                                        )
                                    })
                                    .collect();
                                println!("degree {}: {}", comp.degree, rendered.join(" + "));
                            }
                        }
                    }
                }
            }
        }
        Command::IdealFuse { spec, points, top } => {
            let text = std::fs::read_to_string(&spec)
                .map_err(|e| CliError(format!("cannot read {}: {e}", spec.display())))?;
            let points = parse_point_list(&points)?;
            let ideals: Vec<ComponentwiseIdeal> =
                match serde_json::from_str::<serde_json::Value>(&text)? {
                    serde_json::Value::Array(items) => items
                        .into_iter()
                        .map(serde_json::from_value)
                        .collect::<Result<_, _>>()?,
                    object => {
                        let one: ComponentwiseIdeal = serde_json::from_value(object)?;
                        vec![one; points.len()]
                    }
                };
            // revalidate after deserialization
            let ideals: Vec<ComponentwiseIdeal> = ideals
                .into_iter()
                .map(|i| ComponentwiseIdeal::new(i.p_e, i.p_h, i.p_f))
                .collect::<Result<_, _>>()?;
            let mut fused = componentwise_ideal_fuse(&ideals, &points)?;
            if top {
                fused = top_of_ideal(&fused);
            }
            #[derive(Serialize)]
            struct IdealOutput {
                schema: &'static str,
                #[serde(flatten)]
                ideal: ComponentwiseIdeal,
            }
            match format {
                Format::Json => {
                    let out = IdealOutput {
                        schema: SCHEMA,
                        ideal: fused,
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
                Format::Tsv | Format::Pretty => println!("{fused}"),
            }
        }
        Command::Verify {
            identity,
            max_size,
            level,
        } => {
            let config = SweepConfig {
                identities: vec![identity],
                max_level: level,
                max_size,
                seed: seed_from_env()?,
            };
            let reports = verify::verify_suite(&config);
            let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct VerifyOutput<'a> {
                        schema: &'static str,
                        identity: &'static str,
                        total: usize,
                        failed: usize,
                        reports: &'a [verify::VerificationReport],
                    }
                    let out = VerifyOutput {
                        schema: SCHEMA,
                        identity: identity.name(),
                        total: reports.len(),
                        failed: failed.len(),
                        reports: &reports,
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
                Format::Tsv => {
                    for r in &reports {
                        println!(
                            "{}\t{}\t{}\t{}\t{}",
                            r.identity,
                            r.params,
                            r.left,
                            r.right,
                            if r.pass { "pass" } else { "FAIL" }
                        );
                    }
                }
                Format::Pretty => {
                    for r in &reports {
                        println!("{r}");
                    }
                    println!(
                        "{}: {} cases, {} failed",
                        identity.name(),
                        reports.len(),
                        failed.len()
                    );
                }
            }
            if let Some(first) = failed.first() {
                eprintln!(
                    "first counterexample: {} {} left={} right={}",
                    first.identity, first.params, first.left, first.right
                );
                return Err(CliError(format!(
                    "{} of {} cases failed",
                    failed.len(),
                    reports.len()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code: u8 = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            // clap renders help to stdout, errors to stderr
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
