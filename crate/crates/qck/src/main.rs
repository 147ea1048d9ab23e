//! `qck`: command-line surface for the quasicrystals library.
//!
//! Subcommands: explore, congruent, classify, normalize, identity,
//! validate, embed. Every command is a thin adapter over a library call;
//! output is deterministic, human-readable by default and machine-readable
//! with `--json`.
//!
//! Exit codes: 0 success / positive result, 1 negative result,
//! 2 usage or parse error, 3 vertex budget exceeded, 4 invalid data.
//! The environment variable `QCK_BUDGET` overrides the default vertex
//! budget of 1,000,000.

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasicrystals::hypoplactic::{
    check_identity, classical_congruent_a, embed_a_to_c, embed_c_to_c, inv_signature,
    is_commutative, is_idempotent, normal_form_c2, C2Family, HypoError,
};
use quasicrystals::qc_core::{is_seminormal, standard_a, standard_c, validate_quasicrystal};
use quasicrystals::qgraph::{congruent, explore, export_dot, export_json, GraphError};
use quasicrystals::rootsys::{validate_root_axioms, RootData};
use quasicrystals::word_monoid::{word_class, word_wt};
use quasicrystals::{Alphabet, QuasiCrystalTable, Word};

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_BUDGET: i32 = 3;
const EXIT_INVALID: i32 = 4;

#[derive(Parser)]
#[command(name = "qck", version, about = "Quasi-crystal explorer for types A and C")]
struct Cli {
    /// Emit machine-readable JSON instead of prose.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sweeps (accepted for reproducibility; the
    /// current commands are fully deterministic).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker count for parallel sweeps (current commands run on one).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetKind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedKind {
    /// Type-A source into type-C target of size n.
    A2c,
    /// Type-C source of size n−1 into type-C target of size n.
    C2c,
}

#[derive(Args)]
struct AlphabetArgs {
    /// Alphabet family.
    #[arg(long = "type", value_enum)]
    kind: AlphabetKind,
    /// Alphabet size n (n ≥ 2).
    #[arg(long)]
    rank: usize,
}

impl AlphabetArgs {
    fn alphabet(&self) -> Result<Alphabet, CmdError> {
        let a = match self.kind {
            AlphabetKind::A => Alphabet::a(self.rank),
            AlphabetKind::C => Alphabet::c(self.rank),
        };
        a.map_err(|e| CmdError::Parse(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Explore the connected component of a word and export its graph.
    Explore {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// The word, as space/comma-separated signed integers.
        #[arg(long)]
        word: String,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: ExportFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Decide whether two words are hypoplactically congruent.
    Congruent {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Left word.
        #[arg(long)]
        left: String,
        /// Right word.
        #[arg(long)]
        right: String,
        /// Use the classical Knuth/quartic rewriting oracle (type A only).
        #[arg(long)]
        classical: bool,
    },
    /// Classify a word: highest/lowest weight, isolated, commutative,
    /// idempotent, weight, and (type C) inversion signature.
    Classify {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// The word.
        #[arg(long)]
        word: String,
    },
    /// Compute the rank-2 type-C normal form of a word.
    Normalize {
        /// Alphabet size; must be 2.
        #[arg(long, default_value = "2")]
        rank: usize,
        /// The word.
        #[arg(long)]
        word: String,
    },
    /// Check an identity between abstract words up to a substitution bound.
    Identity {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Left abstract word over variables, e.g. "xyxyxy".
        #[arg(long)]
        lhs: String,
        /// Right abstract word over variables.
        #[arg(long)]
        rhs: String,
        /// Maximum substituted word length per variable.
        #[arg(long = "max-len", default_value = "1")]
        max_len: usize,
    },
    /// Validate the root-system axioms and the standard quasi-crystal of a
    /// named type, or an explicit table from a JSON file.
    Validate {
        /// Alphabet family (named-type validation).
        #[arg(long = "type", value_enum, required_unless_present = "table")]
        kind: Option<AlphabetKind>,
        /// Alphabet size n ≥ 2 (named-type validation).
        #[arg(long, required_unless_present = "table")]
        rank: Option<usize>,
        /// Validate an explicit quasi-crystal table from this JSON file.
        #[arg(long, conflicts_with_all = ["kind", "rank"])]
        table: Option<std::path::PathBuf>,
    },
    /// Embed a word through the hypoplactic-monoid embeddings.
    Embed {
        /// Which embedding.
        #[arg(long, value_enum)]
        kind: EmbedKind,
        /// Target alphabet size n (n ≥ 3); the source alphabet size is
        /// n−1 for both embeddings.
        #[arg(long)]
        rank: usize,
        /// The source word.
        #[arg(long)]
        word: String,
    },
}

enum CmdError {
    Parse(String),
    Budget(String),
    Invalid(String),
}

impl CmdError {
    fn exit_code(&self) -> i32 {
        match self {
            CmdError::Parse(_) => EXIT_PARSE,
            CmdError::Budget(_) => EXIT_BUDGET,
            CmdError::Invalid(_) => EXIT_INVALID,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Parse(m) | CmdError::Budget(m) | CmdError::Invalid(m) => m,
        }
    }
}

impl From<GraphError> for CmdError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::BudgetExceeded(_) => CmdError::Budget(e.to_string()),
            GraphError::MismatchedAlphabet => CmdError::Invalid(e.to_string()),
        }
    }
}

impl From<HypoError> for CmdError {
    fn from(e: HypoError) -> Self {
        match e {
            HypoError::Graph(g) => g.into(),
            HypoError::Word(w) => CmdError::Parse(w.to_string()),
            HypoError::BadPattern(_) => CmdError::Parse(e.to_string()),
            HypoError::InvalidPair(_)
            | HypoError::RankTooSmall(_)
            | HypoError::UnsupportedAlphabet => CmdError::Invalid(e.to_string()),
        }
    }
}

fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word, CmdError> {
    Word::parse(alphabet.clone(), text).map_err(|e| CmdError::Parse(e.to_string()))
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CmdError> {
    match &cli.command {
        Command::Explore {
            alphabet,
            word,
            format,
            out,
        } => {
            let w = parse_word(&alphabet.alphabet()?, word)?;
            let component = explore(&w)?;
            let text = match format {
                ExportFormat::Dot => export_dot(&component),
                ExportFormat::Json => export_json(&component),
            };
            match out {
                Some(path) => std::fs::write(path, text)
                    .map_err(|e| CmdError::Invalid(format!("cannot write output: {e}")))?,
                None => println!("{text}"),
            }
            Ok(EXIT_OK)
        }
        Command::Congruent {
            alphabet,
            left,
            right,
            classical,
        } => {
            let a = alphabet.alphabet()?;
            let u = parse_word(&a, left)?;
            let v = parse_word(&a, right)?;
            let verdict = if *classical {
                classical_congruent_a(&u, &v)?
            } else {
                congruent(&u, &v)?
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({"congruent": verdict, "classical": classical})
                );
            } else {
                println!("{}", if verdict { "congruent" } else { "not congruent" });
            }
            Ok(if verdict { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Classify { alphabet, word } => {
            let a = alphabet.alphabet()?;
            let w = parse_word(&a, word)?;
            let class = word_class(&w);
            let wt = word_wt(&w);
            let inv = match a {
                Alphabet::C(_) => Some(inv_signature(&w).map_err(CmdError::from)?.delta),
                _ => None,
            };
            let commutative = is_commutative(&w);
            let idempotent = is_idempotent(&w);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "word": w.letters,
                        "weight": wt.0,
                        "highest_weight": class.highest_weight,
                        "lowest_weight": class.lowest_weight,
                        "isolated": class.isolated,
                        "commutative": commutative,
                        "idempotent": idempotent,
                        "inv": inv,
                    })
                );
            } else {
                println!("word: {}", w.pretty());
                println!("weight: {wt}");
                println!("highest_weight: {}", class.highest_weight);
                println!("lowest_weight: {}", class.lowest_weight);
                println!("isolated: {}", class.isolated);
                println!("commutative: {commutative}");
                println!("idempotent: {idempotent}");
                if let Some(delta) = inv {
                    let s: Vec<String> = delta.iter().map(|d| d.to_string()).collect();
                    println!("inv: ({})", s.join(","));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Normalize { rank, word } => {
            if *rank != 2 {
                return Err(CmdError::Invalid(
                    "normal forms are defined only for alphabet size 2".into(),
                ));
            }
            let a = Alphabet::c(2).map_err(|e| CmdError::Parse(e.to_string()))?;
            let w = parse_word(&a, word)?;
            let nf = normal_form_c2(&w)?;
            let family = match nf.family {
                C2Family::Power1 => "power1",
                C2Family::Family2121 => "2121",
                C2Family::Family12bar1 => "12bar1",
                C2Family::Family12bar2bar1 => "12bar2bar1",
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "family": family,
                        "params": nf.params,
                        "word": nf.word.letters,
                    })
                );
            } else {
                println!("family: {family}");
                let s: Vec<String> = nf.params.iter().map(|p| p.to_string()).collect();
                println!("params: ({})", s.join(","));
                println!("word: {}", nf.word);
            }
            Ok(EXIT_OK)
        }
        Command::Identity {
            alphabet,
            lhs,
            rhs,
            max_len,
        } => {
            let a = alphabet.alphabet()?;
            let result = check_identity(lhs, rhs, &a, *max_len)?;
            match result {
                None => {
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({"holds_up_to_bound": true, "max_len": max_len})
                        );
                    } else {
                        println!("holds up to bound (max substitution length {max_len})");
                    }
                    Ok(EXIT_OK)
                }
                Some(subst) => {
                    if cli.json {
                        let map: serde_json::Map<String, serde_json::Value> = subst
                            .iter()
                            .map(|(v, w)| {
                                (v.to_string(), serde_json::to_value(&w.letters).unwrap())
                            })
                            .collect();
                        println!(
                            "{}",
                            serde_json::json!({"holds_up_to_bound": false, "counterexample": map})
                        );
                    } else {
                        println!("counterexample:");
                        for (v, w) in &subst {
                            println!("  {v} = {}", w.pretty());
                        }
                    }
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Validate { kind, rank, table } => {
            if let Some(path) = table {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CmdError::Invalid(format!("cannot read table: {e}")))?;
                let t = QuasiCrystalTable::from_json(&text)
                    .map_err(|e| CmdError::Invalid(e.to_string()))?;
                let report = validate_quasicrystal(&t);
                let seminormal = report.passed() && is_seminormal(&t);
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "quasicrystal": report.passed(),
                            "seminormal": seminormal,
                            "violations": report.violations,
                        })
                    );
                } else {
                    println!("quasicrystal: {}", report.passed());
                    println!("seminormal: {seminormal}");
                    for v in &report.violations {
                        println!("violated clause ({}): {}", v.clause, v.witness);
                    }
                }
                return Ok(if report.passed() { EXIT_OK } else { EXIT_NEGATIVE });
            }
            let (kind, rank) = (kind.expect("required by clap"), rank.expect("required"));
            let (root, table) = match kind {
                AlphabetKind::A => (
                    RootData::type_a(rank).map_err(|e| CmdError::Parse(e.to_string()))?,
                    standard_a(rank).map_err(|e| CmdError::Parse(e.to_string()))?,
                ),
                AlphabetKind::C => (
                    RootData::type_c(rank).map_err(|e| CmdError::Parse(e.to_string()))?,
                    standard_c(rank).map_err(|e| CmdError::Parse(e.to_string()))?,
                ),
            };
            let roots = root
                .generate_roots()
                .map_err(|e| CmdError::Invalid(e.to_string()))?;
            let axiom_report = validate_root_axioms(&root, &roots);
            let qc_report = validate_quasicrystal(&table);
            let seminormal = qc_report.passed() && is_seminormal(&table);
            let ok = axiom_report.passed() && qc_report.passed() && seminormal;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "root_axioms": axiom_report.passed(),
                        "root_violations": axiom_report.violations,
                        "quasicrystal": qc_report.passed(),
                        "qc_violations": qc_report.violations,
                        "seminormal": seminormal,
                    })
                );
            } else {
                println!("root axioms: {}", axiom_report.passed());
                for v in &axiom_report.violations {
                    println!("violated {}: {}", v.axiom, v.witness);
                }
                println!("standard quasicrystal: {}", qc_report.passed());
                for v in &qc_report.violations {
                    println!("violated clause ({}): {}", v.clause, v.witness);
                }
                println!("seminormal: {seminormal}");
            }
            Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Embed { kind, rank, word } => {
            let src = match kind {
                EmbedKind::A2c => Alphabet::a(rank.saturating_sub(1)),
                EmbedKind::C2c => Alphabet::c(rank.saturating_sub(1)),
            }
            .map_err(|e| CmdError::Parse(e.to_string()))?;
            let w = parse_word(&src, word)?;
            let image = match kind {
                EmbedKind::A2c => embed_a_to_c(&w, *rank)?,
                EmbedKind::C2c => embed_c_to_c(&w, *rank)?,
            };
            if cli.json {
                println!("{}", serde_json::json!({"word": image.letters}));
            } else {
                println!("{image}");
            }
            Ok(EXIT_OK)
        }
    }
}
