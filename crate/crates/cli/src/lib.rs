//! The `codelens` command line, callable in-process for tests.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 syntax error under
//! `--strict`, 3 parse timeout. Standard output carries only the converted
//! bytes; every diagnostic goes to standard error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use codelens_core::corpus;
use codelens_core::{
    convert, train_bpe, ConvertError, ConvertOptions, Language, OutputFormat, RepresentationKind, SourceUnit,
    Vocabulary,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_STRICT: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "codelens", version, about = "Convert source code to tokens, ASTs, data-flow and control-flow graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert one file (or `-` for standard input).
    Convert {
        #[arg(long)]
        lang: Language,
        #[arg(long)]
        repr: RepresentationKind,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        /// Fail with exit code 2 on any syntax error.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        pretty: bool,
        /// Vocabulary file for `--repr tokens`.
        #[arg(long, env = "CODELENS_VOCAB")]
        vocab: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        input: String,
    },
    /// Train a BPE vocabulary on the given files.
    TrainVocab {
        #[arg(long)]
        merges: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// List the bundled examples for a language.
    Examples {
        #[arg(long)]
        lang: Language,
    },
}

/// Runs the command line with `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Convert { lang, repr, format, strict, pretty, vocab, out, input } => {
            run_convert(lang, repr, format, strict, pretty, vocab, out, &input, stdin, stdout)
        }
        Command::TrainVocab { merges, out, paths } => run_train(merges, &out, &paths),
        Command::Examples { lang } => {
            let mut text = String::new();
            for e in corpus::examples(lang) {
                text.push_str(&format!("{}\t{}\n", e.id, e.title));
            }
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::usage(e.to_string()))
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<ConvertError> for Failure {
    fn from(e: ConvertError) -> Self {
        match &e {
            ConvertError::StrictModeSyntaxError { diagnostics } => {
                let first = diagnostics.first().map_or(String::new(), |d| {
                    format!(": {}:{}: {}", d.span.start_line + 1, d.span.start_col + 1, d.message)
                });
                Failure { code: EXIT_STRICT, message: format!("{e}{first}") }
            }
            ConvertError::Timeout => Failure { code: EXIT_TIMEOUT, message: e.to_string() },
            ConvertError::Oversize { .. } | ConvertError::Internal(_) => Failure::usage(e.to_string()),
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_convert(
    lang: Language,
    repr: RepresentationKind,
    format: OutputFormat,
    strict: bool,
    pretty: bool,
    vocab: Option<PathBuf>,
    out: Option<PathBuf>,
    input: &str,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    if format == OutputFormat::Dot && !repr.is_graph() {
        return Err(Failure::usage(format!("--format dot is not available for {repr}")));
    }
    let mut bytes = Vec::new();
    if input == "-" {
        stdin.read_to_end(&mut bytes).map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
    } else {
        bytes = fs::read(input).map_err(|e| Failure::usage(format!("reading {input}: {e}")))?;
    }
    let unit = SourceUnit::from_bytes(lang, bytes)
        .map_err(|_| Failure::usage(format!("{input} is not valid UTF-8")))?
        .with_origin(input);
    let vocab = match vocab {
        Some(path) if repr == RepresentationKind::Tokens => Some(Arc::new(
            Vocabulary::load(&path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        )),
        _ => None,
    };
    let options = ConvertOptions { strict, pretty, vocab, ..ConvertOptions::default() };
    let conversion = convert(&unit, repr, &options)?;
    let output = conversion.output(format).expect("format checked against representation");
    match out {
        Some(path) => fs::write(&path, output).map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => stdout.write_all(output).map_err(|e| Failure::usage(e.to_string())),
    }
}

fn run_train(merges: usize, out: &PathBuf, paths: &[PathBuf]) -> Result<(), Failure> {
    let mut corpus = Vec::with_capacity(paths.len());
    for path in paths {
        corpus.push(fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?);
    }
    let vocab = train_bpe(&corpus, merges).map_err(|e| Failure::usage(e.to_string()))?;
    vocab.save(out).map_err(|e| Failure::usage(format!("{}: {e}", out.display())))
}
