//! `krull-kit`: command-line front end for `krull-core`.
//!
//! Input files declare lattices, rings and morphisms (see [`syntax`]);
//! commands select them by name. Exit codes: 0 the value was computed or
//! the property holds, 1 the property fails, 2 parse or usage error, 3 a
//! resource cap was hit.

pub mod commands;
pub mod session;
pub mod syntax;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use krull_core::dimension::TupleSpace;
use krull_core::error::KrullError;
use krull_core::rings::{CompRing, Elem};
use serde_json::json;

use commands::{Caps, CmdResult, Emit, Report, EXIT_USAGE};
use session::{eval_chain, eval_term, Session};
use syntax::{parse_chain, parse_term, ParseError};

#[derive(Parser, Debug)]
#[command(name = "krull-kit", version, about = "Exact constructive Krull dimension for lattices and rings")]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized steps; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on enumerated lattice elements.
    #[arg(long, global = true, default_value_t = 1 << 14)]
    pub max_elements: usize,
    /// Cap on the length of relative-collapse element lists.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_k: usize,
    /// Cap on cofactor degrees in certificate searches.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_degree: u32,
    /// Cap on exponents in certificate searches.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_exp: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lattice commands.
    #[command(subcommand)]
    Lat(LatCommand),
    /// Morphism commands.
    #[command(subcommand)]
    Morph(MorphCommand),
    /// Ring commands.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Checks reflexivity, monotonicity, cut and distributivity of a lattice's order.
    CheckLaws(LatticeArgs),
    /// Parses a file and prints it back in normal form.
    Print {
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    pub file: PathBuf,
    /// Lattice name; optional when the file declares one lattice.
    #[arg(long)]
    pub lattice: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Space {
    Irreducibles,
    Generators,
    All,
    Increasing,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EmitArg {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum LatCommand {
    /// Krull dimension, or `dim <= k` with witnesses.
    Dim {
        #[command(flatten)]
        l: LatticeArgs,
        #[arg(long, allow_negative_numbers = true)]
        leq: Option<isize>,
        #[arg(long, value_enum, default_value_t = Space::Irreducibles)]
        space: Space,
    },
    /// Does an idealistic chain collapse?
    Collapse {
        #[command(flatten)]
        l: LatticeArgs,
        /// Chain text, e.g. `{ a ; b } | { ; c }`.
        #[arg(long)]
        chain: String,
    },
    /// Saturation of an idealistic chain.
    Saturate {
        #[command(flatten)]
        l: LatticeArgs,
        #[arg(long)]
        chain: String,
    },
    /// Materializes the Krull lattice of order `l`.
    Kr {
        #[command(flatten)]
        l: LatticeArgs,
        #[arg(long, default_value_t = 1)]
        order: usize,
        #[arg(long, value_enum, default_value_t = EmitArg::Text)]
        emit: EmitArg,
    },
    /// Prime ideals and their inclusions.
    Spec {
        #[command(flatten)]
        l: LatticeArgs,
    },
    /// Difference-chain normal forms in the Boolean envelope.
    Espanol {
        #[command(flatten)]
        l: LatticeArgs,
        /// A lattice term; its normal form is printed.
        #[arg(long)]
        element: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct MorphismArgs {
    pub file: PathBuf,
    /// Morphism name; optional when the file declares one morphism.
    #[arg(long)]
    pub morphism: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum MorphCommand {
    /// Lying over (lyo), going up (gu), going down (gd).
    Check {
        #[command(flatten)]
        m: MorphismArgs,
        #[arg(long, value_delimiter = ',', default_value = "lyo,gu,gd")]
        props: Vec<String>,
    },
    /// Relative dimension, or `reldim <= n`.
    Reldim {
        #[command(flatten)]
        m: MorphismArgs,
        #[arg(long, allow_negative_numbers = true)]
        leq: Option<isize>,
    },
}

#[derive(Args, Debug)]
pub struct RingArgs {
    /// Input file declaring rings.
    pub file: Option<PathBuf>,
    /// A ring declared in the file, or a ring spec such as `poly(QQ,[x,y])`.
    #[arg(long)]
    pub ring: String,
}

#[derive(Subcommand, Debug)]
pub enum RingCommand {
    /// Does the elementary chain of the sequence collapse?
    Singular {
        #[command(flatten)]
        r: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
    },
    /// Searches for a collapse certificate.
    FindCert {
        #[command(flatten)]
        r: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
    },
    /// Verifies a certificate `{"m":[..],"a":[..]}` by expansion.
    VerifyCert {
        #[command(flatten)]
        r: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        #[arg(long)]
        cert: String,
    },
    /// `U ⊢ J` in the Zariski lattice.
    ZarEntails {
        #[command(flatten)]
        r: RingArgs,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        u: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        j: String,
    },
    /// Glues local certificates over comaximal moduli into one over the ring.
    Glue {
        #[command(flatten)]
        r: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        #[arg(long, allow_hyphen_values = true)]
        moduli: String,
    },
}

/// Failure before a command ran: a parse error with position, or a usage error.
enum Setup {
    Parse(ParseError),
    Lib(KrullError),
}

impl From<ParseError> for Setup {
    fn from(e: ParseError) -> Self {
        Setup::Parse(e)
    }
}

impl From<KrullError> for Setup {
    fn from(e: KrullError) -> Self {
        Setup::Lib(e)
    }
}

fn load(path: &PathBuf) -> Result<Session, Setup> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| KrullError::input(format!("cannot read {}: {e}", path.display())))?;
    Ok(Session::parse(&src)?)
}

/// Splits at top-level commas.
fn split_list(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

fn ring_of(r: &RingArgs) -> Result<CompRing, Setup> {
    if let Some(path) = &r.file {
        if let Some(ring) = load(path)?.ring(&r.ring) {
            return Ok(ring.clone());
        }
    }
    Ok(CompRing::parse(&r.ring)?)
}

fn elems(ring: &CompRing, list: &str) -> Result<Vec<Elem>, Setup> {
    Ok(split_list(list)
        .into_iter()
        .map(|s| ring.parse_elem(s))
        .collect::<Result<Vec<_>, _>>()?)
}

impl Cli {
    pub fn caps(&self) -> Caps {
        Caps {
            max_elements: self.max_elements,
            max_k: self.max_k,
            max_degree: self.max_degree,
            max_exp: self.max_exp,
        }
    }

    fn dispatch(&self) -> Result<CmdResult, Setup> {
        let caps = self.caps();
        let lattice = |a: &LatticeArgs| -> Result<_, Setup> { Ok(load(&a.file)?.lattice(a.lattice.as_deref(), caps.max_elements)?) };
        Ok(match &self.command {
            Command::Lat(cmd) => match cmd {
                LatCommand::Dim { l, leq, space } => {
                    let space = match space {
                        Space::Irreducibles => TupleSpace::Irreducibles,
                        Space::Generators => TupleSpace::Generators,
                        Space::All => TupleSpace::AllElements,
                        Space::Increasing => TupleSpace::IncreasingElements,
                    };
                    commands::lat_dim(&lattice(l)?, *leq, space, &caps)
                }
                LatCommand::Collapse { l, chain } => {
                    let lat = lattice(l)?;
                    let c = eval_chain(&lat, &parse_chain(chain)?)?;
                    commands::lat_collapse(&lat, &c)
                }
                LatCommand::Saturate { l, chain } => {
                    let lat = lattice(l)?;
                    let c = eval_chain(&lat, &parse_chain(chain)?)?;
                    commands::lat_saturate(&lat, &c, &caps)
                }
                LatCommand::Kr { l, order, emit } => {
                    let emit = match emit {
                        EmitArg::Text => Emit::Text,
                        EmitArg::Json => Emit::Json,
                        EmitArg::Dot => Emit::Dot,
                    };
                    commands::lat_kr(&lattice(l)?, *order, emit, &caps)
                }
                LatCommand::Spec { l } => commands::lat_spec(&lattice(l)?, &caps),
                LatCommand::Espanol { l, element } => {
                    let lat = lattice(l)?;
                    let e = match element {
                        Some(t) => Some(eval_term(&lat, &parse_term(t)?)?),
                        None => None,
                    };
                    commands::lat_espanol(&lat, e.as_ref(), &caps)
                }
            },
            Command::Morph(cmd) => match cmd {
                MorphCommand::Check { m, props } => {
                    let alpha = load(&m.file)?.morphism(m.morphism.as_deref(), caps.max_elements)?;
                    commands::morph_check(&alpha, props, &caps)
                }
                MorphCommand::Reldim { m, leq } => {
                    let alpha = load(&m.file)?.morphism(m.morphism.as_deref(), caps.max_elements)?;
                    commands::morph_reldim(&alpha, *leq, &caps)
                }
            },
            Command::Ring(cmd) => match cmd {
                RingCommand::Singular { r, seq } => {
                    let ring = ring_of(r)?;
                    commands::ring_singular(&ring, &elems(&ring, seq)?)
                }
                RingCommand::FindCert { r, seq } => {
                    let ring = ring_of(r)?;
                    commands::ring_find_cert(&ring, &elems(&ring, seq)?, &caps)
                }
                RingCommand::VerifyCert { r, seq, cert } => {
                    let ring = ring_of(r)?;
                    commands::ring_verify_cert(&ring, &elems(&ring, seq)?, cert)
                }
                RingCommand::ZarEntails { r, u, j } => {
                    let ring = ring_of(r)?;
                    commands::ring_zar_entails(&ring, &elems(&ring, u)?, &elems(&ring, j)?)
                }
                RingCommand::Glue { r, seq, moduli } => {
                    let ring = ring_of(r)?;
                    commands::ring_glue(&ring, &elems(&ring, seq)?, &elems(&ring, moduli)?, &caps)
                }
            },
            Command::CheckLaws(l) => commands::check_laws(&lattice(l)?, &caps),
            Command::Print { file } => {
                let s = load(file)?;
                Ok(Report {
                    code: 0,
                    text: s.print().trim_end().to_string(),
                    json: json!({"source": s.print()}),
                })
            }
        })
    }

    /// Runs the command and returns the final report, with the seed echoed.
    pub fn run(&self) -> Report {
        let mut r = match self.dispatch() {
            Ok(Ok(r)) => r,
            Ok(Err(e)) | Err(Setup::Lib(e)) => Report::from_error(&e),
            Err(Setup::Parse(e)) => Report {
                code: EXIT_USAGE,
                text: format!("error: {e}"),
                json: json!({"error": e}),
            },
        };
        if let Some(obj) = r.json.as_object_mut() {
            obj.insert("seed".into(), json!(self.seed));
        }
        if self.seed != 0 {
            r.text = format!("seed = {}\n{}", self.seed, r.text);
        }
        r
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Command-line errors become exit code 2.
pub fn run_args<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => cli.run(),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            Report {
                code,
                text: e.to_string().trim_end().to_string(),
                json: json!({"error": {"code": "usage", "message": e.to_string()}}),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_splitting() {
        assert_eq!(split_list("6, 10"), vec!["6", "10"]);
        assert_eq!(split_list("(x+1)*(y,z)"), vec!["(x+1)*(y,z)"]);
        assert!(split_list("").is_empty());
    }
}
