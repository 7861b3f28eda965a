//! Command-line front end. Exit codes: 0 success, 1 domain error (or a
//! negative `eq`/`oracle-eq` verdict), 2 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hekise::{
    canon, enumerate, graph, oracle, rewrite,
    word::{cmp_words, Word},
    OrderPolicy, OrientedGraph, Strategy,
};

const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;
const DEFAULT_MAX_STATES: usize = 1_000_000;
const ALL_FORMS_BUDGET: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "hekise",
    version,
    about = "Canonical forms in Hecke-Kiselman monoids"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Seed for randomized strategies.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Total order on vertices used for lexicographic choices.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Label)]
    order: OrderArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    /// Lexicographic on labels.
    Label,
    /// Declaration order.
    Declaration,
}

impl From<OrderArg> for OrderPolicy {
    fn from(arg: OrderArg) -> OrderPolicy {
        match arg {
            OrderArg::Label => OrderPolicy::LabelLexicographic,
            OrderArg::Declaration => OrderPolicy::DeclarationOrder,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that a graph file is a valid simple oriented graph.
    Validate { graph: PathBuf },
    /// Rewrite a word to a normal form.
    Normalize {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'w', long = "word")]
        words: Vec<String>,
        /// Print each applied cancellation.
        #[arg(long)]
        trace: bool,
        /// Print every reachable normal form instead.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Leftmost)]
        strategy: StrategyArg,
    },
    /// Print the canonical form of a word.
    Canon {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'w', long = "word")]
        words: Vec<String>,
    },
    /// Decide monoid equality of two words (exit 0 iff equal).
    Eq {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'w', long = "word")]
        words: Vec<String>,
    },
    /// Count monoid elements.
    Count {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// Element budget (default from HEKISE_MAX_ELEMENTS or 1000000).
        #[arg(long)]
        max: Option<usize>,
    },
    /// List all elements as canonical forms, sorted by (length, lex).
    Enumerate {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Write the left-Cayley graph of a finite monoid in DOT format.
    Cayley {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Decide equality by brute force over the presentation.
    OracleEq {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'w', long = "word")]
        words: Vec<String>,
        /// Word-length cap for the search (default: input length + 4).
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: usize,
    },
    /// Exhaustively check local confluence modulo commutation.
    Selfcheck {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// Check all words up to this length.
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Leftmost,
    Random,
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(1)
        }
    }
}

// behave like a regular unix tool when the output pipe closes early
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let policy: OrderPolicy = cli.order.into();
    match cli.command {
        Command::Validate { graph } => {
            let g = load_graph(&graph, policy)?;
            println!(
                "valid: {} vertices, {} arrows",
                g.vertex_count(),
                g.arrows().len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Normalize {
            graph,
            words,
            trace,
            all,
            strategy,
        } => {
            let g = load_graph(&graph, policy)?;
            let w = one_word(&words, &g)?;
            if all {
                let forms = rewrite::all_normal_forms(&w, &g, ALL_FORMS_BUDGET)
                    .map_err(|e| e.to_string())?;
                let mut sorted: Vec<&Word> = forms.iter().collect();
                sorted.sort_by(|x, y| cmp_words(&g, x, y));
                match cli.format {
                    Format::Plain => {
                        for form in sorted {
                            println!("{}", form.to_text(&g));
                        }
                    }
                    Format::Json => {
                        let list: Vec<String> =
                            sorted.iter().map(|form| form.to_text(&g)).collect();
                        println!(
                            "{}",
                            json!({
                                "graph": graph.display().to_string(),
                                "input": w.to_text(&g),
                                "normal_forms": list,
                            })
                        );
                    }
                }
                return Ok(ExitCode::SUCCESS);
            }
            let strategy = match strategy {
                StrategyArg::Leftmost => Strategy::LeftmostRightFirst,
                StrategyArg::Random => Strategy::RandomSeeded(cli.seed),
            };
            let (nf, steps) = rewrite::normalize(&w, &g, strategy);
            match cli.format {
                Format::Plain => {
                    if trace {
                        for line in trace_lines(&steps, &g) {
                            println!("{line}");
                        }
                    }
                    println!("{}", nf.to_text(&g));
                }
                Format::Json => {
                    println!(
                        "{}",
                        json!({
                            "graph": graph.display().to_string(),
                            "input": w.to_text(&g),
                            "result": nf.to_text(&g),
                            "length": nf.len(),
                            "trace": trace_json(&steps, &g),
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon { graph, words } => {
            let g = load_graph(&graph, policy)?;
            let w = one_word(&words, &g)?;
            let (_, steps) = rewrite::normalize(&w, &g, Strategy::LeftmostRightFirst);
            let form = canon::canonicalize(&w, &g);
            match cli.format {
                Format::Plain => println!("{}", form.to_text(&g)),
                Format::Json => println!(
                    "{}",
                    json!({
                        "graph": graph.display().to_string(),
                        "input": w.to_text(&g),
                        "canonical": form.to_text(&g),
                        "length": form.len(),
                        "trace": trace_json(&steps, &g),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq { graph, words } => {
            let g = load_graph(&graph, policy)?;
            let (u, v) = two_words(&words, &g)?;
            let cu = canon::canonicalize(&u, &g);
            let cv = canon::canonicalize(&v, &g);
            let equal = cu == cv;
            match cli.format {
                Format::Plain => {
                    println!("{}", cu.to_text(&g));
                    println!("{}", cv.to_text(&g));
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "graph": graph.display().to_string(),
                        "equal": equal,
                        "left": cu.to_text(&g),
                        "right": cv.to_text(&g),
                    })
                ),
            }
            Ok(if equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Count { graph, max } => {
            let g = load_graph(&graph, policy)?;
            let budget = element_budget(max)?;
            let census = enumerate::enumerate_elements(&g, budget);
            match cli.format {
                Format::Plain => {
                    if census.is_complete() {
                        println!("{}", census.len());
                    } else {
                        println!(">= {} (truncated)", census.len());
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "graph": graph.display().to_string(),
                        "count": census.len(),
                        "complete": census.is_complete(),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { graph, max } => {
            let g = load_graph(&graph, policy)?;
            let budget = element_budget(max)?;
            let census = enumerate::enumerate_elements(&g, budget);
            if !census.is_complete() {
                return Err(format!(
                    "IncompleteCensus: >= {} elements, raise --max",
                    census.len()
                ));
            }
            match cli.format {
                Format::Plain => {
                    for e in census.elements() {
                        println!("{}", e.to_text(&g));
                    }
                }
                Format::Json => {
                    let list: Vec<String> =
                        census.elements().iter().map(|e| e.to_text(&g)).collect();
                    println!(
                        "{}",
                        json!({
                            "graph": graph.display().to_string(),
                            "count": census.len(),
                            "elements": list,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cayley { graph, output, max } => {
            let g = load_graph(&graph, policy)?;
            let budget = element_budget(max)?;
            let census = enumerate::enumerate_elements(&g, budget);
            let dot = enumerate::cayley_dot(&census, &g).map_err(|e| e.to_string())?;
            std::fs::write(&output, dot)
                .map_err(|e| format!("cannot write {}: {e}", output.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleEq {
            graph,
            words,
            max_len,
            max_states,
        } => {
            let g = load_graph(&graph, policy)?;
            let (u, v) = two_words(&words, &g)?;
            let max_len = max_len.unwrap_or_else(|| u.len().max(v.len()) + 4);
            let verdict = oracle::oracle_equal(&u, &v, &g, max_len, max_states);
            match cli.format {
                Format::Plain => println!("{verdict}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "graph": graph.display().to_string(),
                        "verdict": verdict.to_string(),
                        "max_len": max_len,
                    })
                ),
            }
            Ok(match verdict {
                oracle::OracleVerdict::Equal => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            })
        }
        Command::Selfcheck { graph, max_len } => {
            let g = load_graph(&graph, policy)?;
            match rewrite::check_local_confluence(&g, max_len) {
                Ok(checked) => {
                    println!("selfcheck: PASS ({checked} words up to length {max_len})");
                    Ok(ExitCode::SUCCESS)
                }
                Err(cx) => {
                    println!(
                        "selfcheck: FAIL (condition {}, word {})",
                        cx.condition,
                        cx.word.to_text(&g)
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn load_graph(path: &Path, policy: OrderPolicy) -> Result<OrientedGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    graph::parse_graph(&text, policy).map_err(|e| e.to_string())
}

fn one_word(words: &[String], g: &OrientedGraph) -> Result<Word, String> {
    if words.len() != 1 {
        usage_error("expected exactly one -w <word>");
    }
    Word::parse(&words[0], g).map_err(|e| e.to_string())
}

fn two_words(words: &[String], g: &OrientedGraph) -> Result<(Word, Word), String> {
    if words.len() != 2 {
        usage_error("expected exactly two -w <word> arguments");
    }
    let u = Word::parse(&words[0], g).map_err(|e| e.to_string())?;
    let v = Word::parse(&words[1], g).map_err(|e| e.to_string())?;
    Ok((u, v))
}

fn usage_error(message: &str) -> ! {
    eprintln!("usage error: {message}");
    std::process::exit(2);
}

fn element_budget(flag: Option<usize>) -> Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("HEKISE_MAX_ELEMENTS") {
        Ok(raw) => match raw.parse::<usize>() {
            Ok(n) => Ok(n),
            Err(_) => {
                usage_error("HEKISE_MAX_ELEMENTS must be a non-negative integer");
            }
        },
        Err(_) => Ok(DEFAULT_MAX_ELEMENTS),
    }
}

fn trace_lines(trace: &rewrite::RewriteTrace, g: &OrientedGraph) -> Vec<String> {
    trace
        .steps()
        .iter()
        .map(|(site, word)| {
            format!(
                "{} {} @ ({},{}) => {}",
                site.kind,
                g.label(site.letter),
                site.outer_left,
                site.outer_right,
                word.to_text(g)
            )
        })
        .collect()
}

fn trace_json(trace: &rewrite::RewriteTrace, g: &OrientedGraph) -> serde_json::Value {
    trace
        .steps()
        .iter()
        .map(|(site, word)| {
            json!({
                "kind": site.kind.to_string(),
                "letter": g.label(site.letter),
                "at": [site.outer_left, site.outer_right],
                "word": word.to_text(g),
            })
        })
        .collect::<Vec<_>>()
        .into()
}
