//! The `sl2coh` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification mismatch,
//! 3 internal inconsistency in the spectral path.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::characters::{decompose, irreducible_character, Character};
use crate::classification::{
    corollary2_witnesses, h1_closed_form, h2_family_of, verify_sweep, VerificationReport,
};
use crate::error::Error;
use crate::ext_one::{cline_ext1, list_ext1_partners};
use crate::spectral::{e2_report, h1_via_ss, h2_via_ss, SSReport};
use crate::weights::{PrimeChar, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "sl2coh",
    version,
    about = "Ext^1, H^1 and H^2 of irreducible SL2-modules in characteristic p",
    after_help = "Weights are decimal integers or digit literals such as [3,2,1]@5 (little-endian base p).\n\
                  Character commands (char, decompose) expand the full character and are meant for\n\
                  weights up to roughly 10^5."
)]
pub struct Cli {
    /// Characteristic of the ground field
    #[arg(short = 'p', long = "prime", global = true)]
    prime: Option<String>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Worker threads for `verify` (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// dim H^1(G, L(r))
    H1 {
        #[arg(short = 'r')]
        r: String,
    },
    /// dim H^2(G, L(r)) and its family
    H2 {
        #[arg(short = 'r')]
        r: String,
    },
    /// dim Ext^1_G(L(r), L(s))
    Ext1 {
        #[arg(short = 'r')]
        r: String,
        #[arg(short = 's')]
        s: String,
    },
    /// Low-degree E2 page of the LHS spectral sequence for L(r)
    E2page {
        #[arg(short = 'r')]
        r: String,
    },
    /// Formal character of L(r), or of L(r) ⊗ L(s)
    Char {
        #[arg(short = 'r')]
        r: String,
        #[arg(short = 's')]
        s: Option<String>,
    },
    /// Composition factors of L(r), or of L(r) ⊗ L(s)
    Decompose {
        #[arg(short = 'r')]
        r: String,
        #[arg(short = 's')]
        s: Option<String>,
    },
    /// All r with Ext^1(L(r), L(s)) != 0 and at most --max digits
    Partners {
        #[arg(short = 's')]
        s: String,
        /// Digit bound (default: digits of s plus one)
        #[arg(long = "max")]
        max: Option<usize>,
    },
    /// Weights W with H^1(G, W) != 0 and Ext^1(W, L(r)) != 0
    Witnesses {
        #[arg(short = 'r')]
        r: String,
    },
    /// h0, h1, h2 for every weight up to --max
    Table {
        #[arg(long = "max")]
        max: u64,
    },
    /// Cross-check every closed form against the spectral sequence
    Verify {
        #[arg(long = "max")]
        max: u64,
        /// Also check Ext^1 for all pairs up to this bound
        #[arg(long = "pairs")]
        pairs: Option<u64>,
    },
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DimJson {
    pub p: u32,
    pub r: String,
    pub dim: u8,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct H2Json {
    pub p: u32,
    pub r: String,
    pub dim: u8,
    pub family: Option<String>,
    pub base: Option<String>,
    pub e: Option<usize>,
    pub twist: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Ext1Json {
    pub dim: u8,
    pub witness_k: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EntryJson {
    pub n: u32,
    pub m: u32,
    pub dim: u8,
    pub coeff: String,
    pub why: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct E2PageJson {
    pub p: u32,
    pub r: String,
    pub entries: Vec<EntryJson>,
    pub h1: u8,
    pub h2: u8,
    pub parity: String,
}

impl From<&SSReport> for E2PageJson {
    fn from(rep: &SSReport) -> Self {
        E2PageJson {
            p: rep.p().get(),
            r: rep.weight.to_decimal(),
            entries: rep
                .entries
                .iter()
                .map(|e| EntryJson {
                    n: e.n,
                    m: e.m,
                    dim: e.dim,
                    coeff: e.coefficient.clone(),
                    why: e.justification.to_string(),
                })
                .collect(),
            h1: rep.h1,
            h2: rep.h2,
            parity: rep.parity.as_str().to_string(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CharJson {
    pub p: u32,
    pub dimension: u64,
    pub character: Vec<(i64, u64)>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecomposeJson {
    pub p: u32,
    pub factors: Vec<(String, u64)>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PartnersJson {
    pub p: u32,
    pub s: String,
    pub max_digits: usize,
    pub partners: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessesJson {
    pub p: u32,
    pub r: String,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableRow {
    pub p: u32,
    pub weight: String,
    pub digits: String,
    pub h0: u8,
    pub h1: u8,
    pub h2: u8,
    pub h2_family: Option<String>,
    pub h2_twist: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyJson {
    pub p: u32,
    pub max_weight: u64,
    pub pair_max: Option<u64>,
    pub weights_checked: u64,
    pub pairs_checked: u64,
    pub h1_positive: Vec<String>,
    pub h2_positive: Vec<String>,
    pub mismatches: Vec<String>,
}

impl From<&VerificationReport> for VerifyJson {
    fn from(rep: &VerificationReport) -> Self {
        VerifyJson {
            p: rep.p.get(),
            max_weight: rep.max_weight,
            pair_max: rep.pair_max,
            weights_checked: rep.weights_checked,
            pairs_checked: rep.pairs_checked,
            h1_positive: rep.h1_positive.iter().map(u64::to_string).collect(),
            h2_positive: rep.h2_positive.iter().map(u64::to_string).collect(),
            mismatches: rep.mismatches.iter().map(ToString::to_string).collect(),
        }
    }
}

enum Failure {
    Usage(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInconsistency(_) | Error::MixedParity(_) => {
                Failure::Inconsistent(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn dim_word(dim: u8) -> String {
    if dim == 0 {
        "0".to_string()
    } else {
        format!("K (dim {dim})")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Parses `argv` (including the program name) and runs one command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Inconsistent(msg)) => {
            let _ = writeln!(err, "internal inconsistency: {msg}");
            EXIT_INCONSISTENT
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let p: PrimeChar = cli
        .prime
        .as_deref()
        .ok_or_else(|| Failure::Usage("missing required flag -p <prime>".into()))?
        .parse()?;
    let weight = |s: &str| Weight::parse(s, p);
    let fmt = cli.format;

    match &cli.command {
        Command::H1 { r } => {
            let r = weight(r)?;
            let dim = h1_via_ss(&r)?;
            if dim != h1_closed_form(&r) {
                return Err(Failure::Inconsistent(format!(
                    "h1 paths disagree on L({r})"
                )));
            }
            match fmt {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json(&DimJson {
                        p: p.get(),
                        r: r.to_decimal(),
                        dim
                    })
                )?,
                _ => writeln!(out, "H1(SL2, L({r})) = {}", dim_word(dim))?,
            }
        }
        Command::H2 { r } => {
            let r = weight(r)?;
            let dim = h2_via_ss(&r)?;
            let fam = h2_family_of(&r);
            if dim != u8::from(fam.is_some()) {
                return Err(Failure::Inconsistent(format!(
                    "h2 paths disagree on L({r})"
                )));
            }
            match fmt {
                OutputFormat::Json => {
                    let doc = H2Json {
                        p: p.get(),
                        r: r.to_decimal(),
                        dim,
                        family: fam.as_ref().map(|f| match f.kind {
                            crate::classification::H2Kind::TwoFamily { .. } => {
                                "2p-2+(2p-2)p^e".to_string()
                            }
                            k => k.to_string(),
                        }),
                        base: fam.as_ref().map(|f| f.base_weight.to_decimal()),
                        e: fam.as_ref().and_then(|f| match f.kind {
                            crate::classification::H2Kind::TwoFamily { e } => Some(e),
                            _ => None,
                        }),
                        twist: fam.as_ref().map(|f| f.twist),
                    };
                    writeln!(out, "{}", json(&doc))?
                }
                _ => match fam {
                    Some(f) => writeln!(
                        out,
                        "H2(SL2, L({r})) = {}, family {}, twist {}",
                        dim_word(dim),
                        f.kind,
                        f.twist
                    )?,
                    None => writeln!(out, "H2(SL2, L({r})) = 0")?,
                },
            }
        }
        Command::Ext1 { r, s } => {
            let (r, s) = (weight(r)?, weight(s)?);
            let ext = cline_ext1(&r, &s)?;
            let spectral = crate::spectral::ext1_via_ss(&r, &s)?;
            if spectral != ext.dim {
                return Err(Failure::Inconsistent(format!(
                    "Ext1 paths disagree on L({r}), L({s})"
                )));
            }
            match fmt {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json(&Ext1Json {
                        dim: ext.dim,
                        witness_k: ext.witness_k
                    })
                )?,
                _ => match ext.witness_k {
                    Some(k) => {
                        writeln!(out, "Ext1(L({r}), L({s})) = {}, k = {k}", dim_word(ext.dim))?
                    }
                    None => writeln!(out, "Ext1(L({r}), L({s})) = 0")?,
                },
            }
        }
        Command::E2page { r } => {
            let r = weight(r)?;
            let rep = e2_report(&r)?;
            match fmt {
                OutputFormat::Json => writeln!(out, "{}", json(&E2PageJson::from(&rep)))?,
                _ => {
                    writeln!(out, "E2 page for L({r}) = L({}) at p = {p}", r.to_literal())?;
                    writeln!(out, "  n m  dim  why        coefficient")?;
                    for e in &rep.entries {
                        writeln!(
                            out,
                            "  {} {}  {:>3}  {:<9}  {}",
                            e.n, e.m, e.dim, e.justification, e.coefficient
                        )?;
                    }
                    writeln!(
                        out,
                        "h1 = {}, h2 = {}, parity = {}",
                        rep.h1,
                        rep.h2,
                        rep.parity.as_str()
                    )?;
                }
            }
        }
        Command::Char { r, s } => {
            let c = module_character(&weight(r)?, s.as_deref().map(weight).transpose()?)?;
            match fmt {
                OutputFormat::Json => {
                    let doc = CharJson {
                        p: p.get(),
                        dimension: c.dimension(),
                        character: c.support().iter().rev().map(|(&w, &m)| (w, m)).collect(),
                    };
                    writeln!(out, "{}", json(&doc))?
                }
                _ => writeln!(out, "{c}")?,
            }
        }
        Command::Decompose { r, s } => {
            let c = module_character(&weight(r)?, s.as_deref().map(weight).transpose()?)?;
            let factors = decompose(&c)?;
            match fmt {
                OutputFormat::Json => {
                    let doc = DecomposeJson {
                        p: p.get(),
                        factors: factors
                            .iter()
                            .rev()
                            .map(|(w, &m)| (w.to_decimal(), m))
                            .collect(),
                    };
                    writeln!(out, "{}", json(&doc))?
                }
                _ => {
                    let parts: Vec<String> = factors
                        .iter()
                        .rev()
                        .map(|(w, m)| format!("L({w}):{m}"))
                        .collect();
                    writeln!(out, "{}", parts.join(", "))?
                }
            }
        }
        Command::Partners { s, max } => {
            let s = weight(s)?;
            let max_digits = max.unwrap_or(s.len() + 1);
            let partners = list_ext1_partners(&s, max_digits)?;
            let names: Vec<String> = partners.iter().map(Weight::to_decimal).collect();
            match fmt {
                OutputFormat::Json => {
                    let doc = PartnersJson {
                        p: p.get(),
                        s: s.to_decimal(),
                        max_digits,
                        partners: names,
                    };
                    writeln!(out, "{}", json(&doc))?
                }
                _ => writeln!(out, "{}", names.join(" "))?,
            }
        }
        Command::Witnesses { r } => {
            let r = weight(r)?;
            let names: Vec<String> = corollary2_witnesses(&r)
                .iter()
                .map(Weight::to_decimal)
                .collect();
            match fmt {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json(&WitnessesJson {
                        p: p.get(),
                        r: r.to_decimal(),
                        witnesses: names
                    })
                )?,
                _ => writeln!(out, "{}", names.join(" "))?,
            }
        }
        Command::Table { max } => {
            let rows = (0..=*max)
                .map(|n| table_row(&Weight::from_u64(n, p)))
                .collect::<Result<Vec<_>, Failure>>()?;
            match fmt {
                OutputFormat::Json => writeln!(out, "{}", json(&rows))?,
                _ => {
                    writeln!(out, "p,weight,digits,h0,h1,h2,h2_family,h2_twist")?;
                    for row in &rows {
                        writeln!(
                            out,
                            "{},{},{},{},{},{},{},{}",
                            row.p,
                            row.weight,
                            csv_field(&row.digits),
                            row.h0,
                            row.h1,
                            row.h2,
                            csv_field(row.h2_family.as_deref().unwrap_or("")),
                            row.h2_twist.map(|t| t.to_string()).unwrap_or_default()
                        )?;
                    }
                }
            }
        }
        Command::Verify { max, pairs } => {
            let rep = match cli.jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Failure::Usage(e.to_string()))?
                    .install(|| verify_sweep(p, *max, *pairs)),
                None => verify_sweep(p, *max, *pairs),
            };
            match fmt {
                OutputFormat::Json => writeln!(out, "{}", json(&VerifyJson::from(&rep)))?,
                _ => {
                    let mut line = format!("checked {} weights", rep.weights_checked);
                    if rep.pair_max.is_some() {
                        line += &format!(" and {} pairs", rep.pairs_checked);
                    }
                    writeln!(out, "{line}, {} mismatches", rep.mismatches.len())?;
                    for m in &rep.mismatches {
                        writeln!(out, "  {m}")?;
                    }
                }
            }
            return Ok(verify_exit_code(&rep));
        }
    }
    Ok(EXIT_OK)
}

pub fn verify_exit_code(rep: &VerificationReport) -> i32 {
    if rep.has_inconsistency() {
        EXIT_INCONSISTENT
    } else if rep.is_clean() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn module_character(r: &Weight, s: Option<Weight>) -> Result<Character, Error> {
    let c = irreducible_character(r)?;
    match s {
        Some(s) => c.tensor(&irreducible_character(&s)?),
        None => Ok(c),
    }
}

fn table_row(w: &Weight) -> Result<TableRow, Failure> {
    let fam = h2_family_of(w);
    Ok(TableRow {
        p: w.p().get(),
        weight: w.to_decimal(),
        digits: format!(
            "[{}]",
            w.digits()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
        h0: u8::from(w.is_zero()),
        h1: h1_via_ss(w)?,
        h2: h2_via_ss(w)?,
        h2_family: fam.as_ref().map(|f| f.kind.to_string()),
        h2_twist: fam.as_ref().map(|f| f.twist),
    })
}
