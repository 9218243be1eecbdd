//! Scriptable command-line surface over the word/tree library.
//!
//! Exit codes: 0 on success (including a `check` that prints `true`),
//! 1 when `check` prints `false` or `selftest` reports a failure, and
//! 2 for usage or input errors. Output is byte-identical across runs
//! for identical inputs.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use updown::patterns::Variant;
use updown::selftest;
use updown::slope_ideal::TermOrder;
use updown::trees::DecreasingTree;
use updown::words::Word;
use updown::{
    brute_force_words, count_words, degree_count_table, euler_number, generators, is_primitive,
    is_word, phi, psi, strip, tree_words, wrap, CountMethod,
};

#[derive(Parser)]
#[command(
    name = "updown",
    version,
    about = "Primitive G-/R-words, decreasing 012-trees, and slope-ideal generators"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Cap the internal thread pool at K threads
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    G,
    R,
}

impl VariantArg {
    fn variant(self) -> Variant {
        match self {
            VariantArg::G => Variant::G,
            VariantArg::R => Variant::R,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Scan the pruned permutation space
    Brute,
    /// Map decreasing trees through the bijection
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Words,
    Trees,
    Euler,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grlex,
    Revlex,
}

impl OrderArg {
    fn order(self) -> TermOrder {
        match self {
            OrderArg::Grlex => TermOrder::Grlex,
            OrderArg::Revlex => TermOrder::Revlex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a word is a G-word or R-word, printing true/false
    Check {
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Also require primitivity
        #[arg(long)]
        primitive: bool,
        /// Word in compact form (digits 1-9) or comma-separated
        word: String,
    },
    /// List the primitive words on {1, ..., n}, one per line
    Enumerate {
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Word length (brute is practical to about 11, tree to about 13)
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
    },
    /// Convert a trimmed word to its decreasing 012-tree or back
    Map {
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Word to convert to bracket notation
        #[arg(
            long,
            value_name = "WORD",
            conflicts_with = "tree_to_word",
            required_unless_present = "tree_to_word"
        )]
        word_to_tree: Option<String>,
        /// Tree in bracket notation to convert to a word
        #[arg(long, value_name = "BRACKET")]
        tree_to_word: Option<String>,
        /// Work with full primitive words instead of trimmed ones
        #[arg(long)]
        wrapped: bool,
    },
    /// Print a single count: words, trees, or the updown number
    ///
    /// `trees` materializes the full tree set (practical to about n =
    /// 13); `euler` evaluates the recurrence exactly (n up to 38).
    Count {
        #[arg(long, value_enum)]
        what: WhatArg,
        #[arg(long)]
        n: u32,
        /// Required for --what words, rejected otherwise
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Counting method for --what words (default: tree)
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// List initial-ideal generators, or their per-degree counts
    Ideal {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        order: OrderArg,
        /// Restrict the listing to one degree
        #[arg(long)]
        degree: Option<u32>,
        /// Print the degree table instead of the monomials
        #[arg(long)]
        table: bool,
    },
    /// Run the built-in verification suites up to a size cap
    Selftest {
        #[arg(long, default_value_t = 9)]
        max_n: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if k == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
        {
            eprintln!("error: could not configure {k} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command, cli.format) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_word(text: &str) -> Result<Word, String> {
    text.parse()
        .map_err(|e| format!("invalid word '{text}': {e}"))
}

fn parse_tree(text: &str) -> Result<DecreasingTree, String> {
    DecreasingTree::parse_bracket(text).map_err(|e| format!("invalid tree '{text}': {e}"))
}

fn run(command: Command, format: Format) -> Result<ExitCode, String> {
    match command {
        Command::Check {
            variant,
            primitive,
            word,
        } => {
            let v = variant.variant();
            let parsed = parse_word(&word)?;
            let verdict = if primitive {
                is_primitive(v, &parsed)
            } else {
                is_word(v, &parsed)
            }
            .map_err(|e| format!("word '{word}': {e}"))?;
            match format {
                Format::Plain => println!("{verdict}"),
                Format::Json => println!("{}", json!({ "result": verdict })),
            }
            Ok(if verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Enumerate { variant, n, method } => {
            let v = variant.variant();
            let words = match method {
                MethodArg::Brute => brute_force_words(v, n),
                MethodArg::Tree => tree_words(v, n),
            }
            .map_err(|e| e.to_string())?;
            match format {
                Format::Plain => {
                    for word in &words {
                        println!("{word}");
                    }
                }
                Format::Json => {
                    let texts: Vec<String> = words.iter().map(Word::to_string).collect();
                    println!("{}", json!(texts));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Map {
            variant,
            word_to_tree,
            tree_to_word,
            wrapped,
        } => {
            let v = variant.variant();
            let output = match (word_to_tree, tree_to_word) {
                (Some(text), None) => {
                    let mut word = parse_word(&text)?;
                    if wrapped {
                        word = strip(&word).map_err(|e| format!("word '{text}': {e}"))?;
                    }
                    let tree = phi(v, &word).map_err(|e| format!("word '{text}': {e}"))?;
                    tree.to_bracket()
                }
                (None, Some(text)) => {
                    let tree = parse_tree(&text)?;
                    let word = psi(v, &tree);
                    if wrapped {
                        wrap(&word).to_string()
                    } else {
                        word.to_string()
                    }
                }
                _ => unreachable!("clap enforces exactly one direction"),
            };
            match format {
                Format::Plain => println!("{output}"),
                Format::Json => println!("{}", json!(output)),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Count {
            what,
            n,
            variant,
            method,
        } => {
            // counts above u64 (euler at large n) travel as strings so
            // the JSON stays exact
            let (count_text, payload) = match what {
                WhatArg::Words => {
                    let v = variant
                        .ok_or("count --what words needs --variant g|r")?
                        .variant();
                    let method = match method.unwrap_or(MethodArg::Tree) {
                        MethodArg::Brute => CountMethod::Brute,
                        MethodArg::Tree => CountMethod::Tree,
                    };
                    let rec = count_words(v, n, method).map_err(|e| e.to_string())?;
                    (
                        rec.count.to_string(),
                        json!({
                            "what": "words",
                            "n": n,
                            "variant": v.to_string().to_lowercase(),
                            "method": match method {
                                CountMethod::Brute => "brute",
                                CountMethod::Tree => "tree",
                            },
                            "count": rec.count,
                        }),
                    )
                }
                WhatArg::Trees => {
                    reject_word_flags(variant, method, "trees")?;
                    let labels: Vec<u32> = (1..=n).collect();
                    let count = updown::enumerate_trees(&labels)
                        .map_err(|e| e.to_string())?
                        .len();
                    (
                        count.to_string(),
                        json!({ "what": "trees", "n": n, "count": count }),
                    )
                }
                WhatArg::Euler => {
                    reject_word_flags(variant, method, "euler")?;
                    if n > 38 {
                        return Err(format!(
                            "--n {n}: updown numbers overflow exact 128-bit arithmetic beyond 38"
                        ));
                    }
                    let count = euler_number(n);
                    (
                        count.to_string(),
                        json!({ "what": "euler", "n": n, "count": count.to_string() }),
                    )
                }
            };
            match format {
                Format::Plain => println!("{count_text}"),
                Format::Json => println!("{payload}"),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Ideal {
            n,
            order,
            degree,
            table,
        } => {
            let ord = order.order();
            if table {
                let counts = degree_count_table(n, ord);
                match format {
                    Format::Plain => {
                        for (d, count) in counts.entries() {
                            if degree.is_none() || degree == Some(*d) {
                                println!("{d} {count}");
                            }
                        }
                    }
                    Format::Json => {
                        let entries: serde_json::Map<String, serde_json::Value> = counts
                            .entries()
                            .iter()
                            .filter(|(d, _)| degree.is_none() || degree == Some(**d))
                            .map(|(d, c)| (d.to_string(), json!(c.to_string())))
                            .collect();
                        println!(
                            "{}",
                            json!({ "n": n, "order": ord.to_string(), "table": entries })
                        );
                    }
                }
            } else {
                let monomials = generators(n, ord);
                let selected: Vec<String> = monomials
                    .iter()
                    .filter(|m| degree.is_none_or(|d| m.degree() == d as usize))
                    .map(|m| m.to_string())
                    .collect();
                match format {
                    Format::Plain => {
                        for text in &selected {
                            println!("{text}");
                        }
                    }
                    Format::Json => println!("{}", json!(selected)),
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Selftest { max_n } => {
            let outcomes = selftest::run_all(max_n);
            let all_passed = outcomes.iter().all(|o| o.passed);
            match format {
                Format::Plain => {
                    for o in &outcomes {
                        let tag = if o.passed { "PASS" } else { "FAIL" };
                        println!("{tag} {}: {}", o.suite, o.detail);
                    }
                }
                Format::Json => {
                    let entries: Vec<serde_json::Value> = outcomes
                        .iter()
                        .map(|o| {
                            json!({
                                "suite": o.suite,
                                "passed": o.passed,
                                "detail": o.detail,
                            })
                        })
                        .collect();
                    println!("{}", json!(entries));
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn reject_word_flags(
    variant: Option<VariantArg>,
    method: Option<MethodArg>,
    what: &str,
) -> Result<(), String> {
    if variant.is_some() {
        return Err(format!("--variant does not apply to count --what {what}"));
    }
    if method.is_some() {
        return Err(format!("--method does not apply to count --what {what}"));
    }
    Ok(())
}
