use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use tabsieve::symfunc::{phi_adjoint, plethysm_coefficient, plethysm_power, schur_product};
use tabsieve::verify::{signs_consistent, sweep, SweepBounds, Theorem, VerificationReport};
use tabsieve::{
    apply_e, apply_f, demote, enumerate_eytab, enumerate_pytab, enumerate_ribbon_tableaux,
    enumerate_ssyt, enumerate_yamanouchi_domino, evacuate, lr_coefficient, promote, rectify,
    Composition, Partition, SchurExpansion, SkewTableau,
};

const PARSE_FAILURE: u8 = 2;
const PRECONDITION_FAILURE: u8 = 3;

#[derive(Parser)]
#[command(name = "tabsieve", version, about = "Tableau dynamics, crystals, ribbons and plethysm")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List tableaux in canonical order, then a count line.
    Enumerate {
        #[command(subcommand)]
        what: Enumerate,
    },
    /// Littlewood–Richardson numbers, products and plethysms in the Schur basis.
    Coeff {
        #[command(subcommand)]
        what: Coeff,
    },
    /// Apply one map to a tableau such as `1,2/3` (`.` marks skew cells).
    Apply {
        #[command(subcommand)]
        what: Apply,
    },
    /// Check a theorem on every instance within the bounds.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum Enumerate {
    /// Semistandard tableaux of a (skew) shape with given content.
    Ssyt {
        #[arg(long)]
        shape: Partition,
        #[arg(long, default_value = "-")]
        inner: Partition,
        #[arg(long)]
        content: Composition,
    },
    /// Tableaux counted by the evacuation theorem, on the alphabet 1..=2m.
    Eytab {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        mu: Partition,
        /// Defaults to the number of parts of mu.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Tableaux counted by the promotion theorem, on the alphabet 1..=mn.
    Pytab {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        n: usize,
        /// Defaults to the number of parts of mu.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Semistandard r-ribbon tableaux.
    Ribbon {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        content: Composition,
    },
    /// Domino tableaux with a Yamanouchi reading word.
    Yamdomino {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        content: Composition,
    },
}

#[derive(Subcommand)]
enum Coeff {
    /// c^lam_{mu,nu}.
    Lr {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        lam: Partition,
    },
    /// s_mu · s_nu.
    Product {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// p_k ∘ s_mu.
    Plethysm {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        mu: Partition,
    },
    /// The adjoint of p_k ∘ applied to s_lam.
    Phi {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lam: Partition,
    },
    /// ⟨p_{n/d}^d ∘ s_mu, s_lam⟩.
    PlethCoeff {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lam: Partition,
    },
}

#[derive(Subcommand)]
enum Apply {
    Promote(OnAlphabet),
    Demote(OnAlphabet),
    Evacuate(OnAlphabet),
    /// Raising operator e_i.
    E(Operator),
    /// Lowering operator f_i.
    F(Operator),
    Rectify {
        #[arg(long)]
        tab: SkewTableau,
    },
}

#[derive(Args)]
struct OnAlphabet {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    tab: SkewTableau,
}

#[derive(Args)]
struct Operator {
    #[arg(long)]
    i: usize,
    /// Alphabet size; defaults to the larger of i+1 and the largest entry.
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    tab: SkewTableau,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    theorem: TheoremArg,
    /// Largest |lam| swept [default: 6].
    #[arg(long)]
    max_weight: Option<usize>,
    /// Largest m swept [default: 2].
    #[arg(long)]
    m: Option<usize>,
    /// Largest n swept by promotion checks [default: 3].
    #[arg(long)]
    n: Option<usize>,
    /// Largest |mu| swept by promotion checks.
    #[arg(long)]
    max_mu: Option<usize>,
    /// File of `key = value` lines giving the bounds; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Mainevac,
    Mainprom,
    Corprom,
    Stembridge,
    Rhoades,
    LrEytab,
    LrPytab,
    All,
}

impl TheoremArg {
    fn theorems(self) -> Vec<Theorem> {
        match self {
            TheoremArg::Mainevac => vec![Theorem::Mainevac],
            TheoremArg::Mainprom => vec![Theorem::Mainprom],
            TheoremArg::Corprom => vec![Theorem::Corprom],
            TheoremArg::Stembridge => vec![Theorem::Stembridge],
            TheoremArg::Rhoades => vec![Theorem::Rhoades],
            TheoremArg::LrEytab => vec![Theorem::LrEytab],
            TheoremArg::LrPytab => vec![Theorem::LrPytab],
            TheoremArg::All => Theorem::ALL.to_vec(),
        }
    }
}

struct Out {
    sink: Box<dyn Write>,
    format: Format,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) -> io::Result<()> {
        writeln!(self.sink, "{}", s.as_ref())
    }

    fn items<T: ToString>(&mut self, kind: &str, items: &[T]) -> io::Result<()> {
        for t in items {
            let t = t.to_string();
            match self.format {
                Format::Json => self.line(format!("{{\"{kind}\":{}}}", json_string(&t)))?,
                Format::Tsv => self.line(format!("{kind}\t{t}"))?,
                Format::Text => self.line(t)?,
            }
        }
        match self.format {
            Format::Json => self.line(format!("{{\"count\":{}}}", items.len())),
            Format::Tsv => self.line(format!("count\t{}", items.len())),
            Format::Text => self.line(format!("count {}", items.len())),
        }
    }

    fn value(&mut self, v: impl ToString) -> io::Result<()> {
        let v = v.to_string();
        match self.format {
            Format::Json => self.line(format!("{{\"result\":{}}}", json_string(&v))),
            _ => self.line(v),
        }
    }
}

fn json_string(s: &str) -> String {
    serde_json::Value::String(s.to_string()).to_string()
}

fn default_m(mu: &Partition, m: Option<usize>) -> usize {
    m.unwrap_or(mu.len().max(1))
}

fn run_enumerate(what: Enumerate, out: &mut Out) -> anyhow::Result<()> {
    match what {
        Enumerate::Ssyt { shape, inner, content } => {
            out.items("tableau", &enumerate_ssyt(&shape, &inner, &content)?)?
        }
        Enumerate::Eytab { shape, mu, m } => {
            let m = default_m(&mu, m);
            out.items("tableau", &enumerate_eytab(&shape, &mu, m)?)?
        }
        Enumerate::Pytab { shape, mu, n, m } => {
            let m = default_m(&mu, m);
            out.items("tableau", &enumerate_pytab(&shape, &mu, m, n)?)?
        }
        Enumerate::Ribbon { shape, r, content } => {
            out.items("ribbon_tableau", &enumerate_ribbon_tableaux(&shape, r, &content)?)?
        }
        Enumerate::Yamdomino { shape, content } => {
            out.items("ribbon_tableau", &enumerate_yamanouchi_domino(&shape, &content)?)?
        }
    }
    Ok(())
}

fn run_coeff(what: Coeff, out: &mut Out) -> anyhow::Result<()> {
    match what {
        Coeff::Lr { mu, nu, lam } => out.value(lr_coefficient(&mu, &nu, &lam))?,
        Coeff::Product { mu, nu } => {
            out.value(schur_product(&SchurExpansion::schur(mu), &SchurExpansion::schur(nu)))?
        }
        Coeff::Plethysm { k, mu } => {
            positive("k", k)?;
            out.value(plethysm_power(k, &SchurExpansion::schur(mu)))?
        }
        Coeff::Phi { k, lam } => {
            positive("k", k)?;
            out.value(phi_adjoint(k, &lam))?
        }
        Coeff::PlethCoeff { n, d, mu, lam } => {
            positive("n", n)?;
            out.value(plethysm_coefficient(n, d, &mu, &lam)?)?
        }
    }
    Ok(())
}

fn positive(name: &str, v: usize) -> tabsieve::Result<()> {
    if v == 0 {
        return Err(tabsieve::Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

fn run_apply(what: Apply, out: &mut Out) -> anyhow::Result<()> {
    let image = match what {
        Apply::Promote(a) => Some(promote(&a.tab, a.s)?),
        Apply::Demote(a) => Some(demote(&a.tab, a.s)?),
        Apply::Evacuate(a) => Some(evacuate(&a.tab, a.s)?),
        Apply::E(op) => apply_e(&op.tab, op.i, operator_alphabet(&op))?,
        Apply::F(op) => apply_f(&op.tab, op.i, operator_alphabet(&op))?,
        Apply::Rectify { tab } => Some(rectify(&tab)),
    };
    match image {
        Some(t) => out.value(t)?,
        None => out.value("VANISH")?,
    }
    Ok(())
}

fn operator_alphabet(op: &Operator) -> usize {
    op.s.unwrap_or((op.i + 1).max(op.tab.max_entry() as usize))
}

fn bounds(args: &VerifyArgs) -> anyhow::Result<SweepBounds> {
    let mut b = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            SweepBounds::from_config_str(&text)?
        }
        None => SweepBounds::default(),
    };
    if let Some(w) = args.max_weight {
        b.max_weight = w;
    }
    if let Some(m) = args.m {
        b.max_m = m;
    }
    if let Some(n) = args.n {
        b.max_n = n;
    }
    if args.max_mu.is_some() {
        b.max_mu = args.max_mu;
    }
    b.validate()?;
    Ok(b)
}

fn text_report(r: &VerificationReport) -> String {
    let i = &r.inputs;
    let mut s = format!("{} lam={} mu={} m={}", r.theorem, i.lam, i.mu, i.m);
    for (name, v) in [("n", i.n), ("d", i.d), ("ell", i.ell)] {
        if let Some(v) = v {
            s.push_str(&format!(" {name}={v}"));
        }
    }
    let verdict = if r.pass { "ok" } else { "FAIL" };
    s + &format!(": lhs {} rhs {} ({}·{}) {verdict}", r.lhs, r.rhs, r.sign, r.coefficient)
}

/// Returns whether every instance passed.
fn run_verify(args: VerifyArgs, out: &mut Out) -> anyhow::Result<bool> {
    let b = bounds(&args)?;
    if out.format == Format::Tsv {
        out.line(VerificationReport::tsv_header())?;
    }
    let mut all_ok = true;
    for theorem in args.theorem.theorems() {
        let reports = sweep(theorem, &b)?;
        for r in &reports {
            match out.format {
                Format::Json => out.line(r.to_json())?,
                Format::Tsv => out.line(r.to_tsv())?,
                Format::Text => out.line(text_report(r))?,
            }
        }
        let failed = reports.iter().filter(|r| !r.pass).count();
        let consistent = signs_consistent(&reports);
        all_ok &= failed == 0 && consistent;
        let mut summary = format!("{}: {} of {} pass", theorem.name(), reports.len() - failed, reports.len());
        if !consistent {
            summary.push_str(", inconsistent signs");
        }
        eprintln!("{summary}");
    }
    Ok(all_ok)
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("TF_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("TF_THREADS must be a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<tabsieve::Error>() {
        Some(tabsieve::Error::Parse(_)) => PARSE_FAILURE,
        Some(_) => PRECONDITION_FAILURE,
        None => 1,
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut out = Out { sink, format: cli.format };
    let ok = match cli.command {
        Command::Enumerate { what } => run_enumerate(what, &mut out).map(|_| true),
        Command::Coeff { what } => run_coeff(what, &mut out).map(|_| true),
        Command::Apply { what } => run_apply(what, &mut out).map(|_| true),
        Command::Verify(args) => run_verify(args, &mut out),
    }?;
    out.sink.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(PARSE_FAILURE);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
