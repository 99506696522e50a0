use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use idealcalc::cohomology::{comparison_module, deficiency_module, default_window, projective_dim, top_cohomology_window};
use idealcalc::corpus::{resolve, IdealFile};
use idealcalc::groebner::GbOptions;
use idealcalc::homology::tor;
use idealcalc::ideal::Ideal;
use idealcalc::resolution::{free_resolution, BettiTable, ResolutionInvariants};
use idealcalc::theorems::{self, Verdict};
use idealcalc::{Error, Field, Result};

#[derive(Parser)]
#[command(name = "idealcalc", version, about = "Ideals, resolutions, deficiency modules and generator bounds over F_p")]
struct Cli {
    /// Coefficient prime.
    #[arg(long, global = true, env = "IDEALCALC_PRIME", default_value_t = 32003)]
    prime: u32,
    /// Seed for general linear forms and fuzz instances.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Largest lcm degree Buchberger may reach.
    #[arg(long, global = true, default_value_t = 40)]
    degree_guard: u32,
    /// Extra degrees added on both sides of the default top-cohomology window.
    #[arg(long, global = true, default_value_t = 0)]
    window_padding: i32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hilbert series, ν, α, Betti table, CM flag and deficiency modules.
    Invariants { file: String },
    /// Product against intersection, (I ∩ J)/IJ, Tor_1 and the Serre check.
    Compare { first: String, second: String },
    /// Minimal free resolution of S/I.
    Resolve {
        file: String,
        #[arg(long)]
        csv: bool,
    },
    /// H^i_*(V); the top cohomology is reported on its default window.
    Cohomology {
        file: String,
        #[arg(long = "i")]
        index: usize,
    },
    /// Runs one checker on the given ideals.
    Verify {
        theorem: String,
        files: Vec<String>,
        #[arg(long, default_value = ".")]
        witness_dir: PathBuf,
    },
    /// Runs a seeded campaign of random instances.
    Fuzz {
        theorem: String,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value = ".")]
        witness_dir: PathBuf,
    },
}

struct Session {
    field: Field,
    opts: GbOptions,
    seed: u64,
    window_padding: i32,
    format: Format,
}

impl Session {
    fn load(&self, arg: &str) -> Result<(IdealFile, Ideal)> {
        let f = resolve(arg, self.field)?;
        let i = Ideal::with_options(&f.ring, f.generators.clone(), self.opts)?;
        Ok((f, i))
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DegreeGuard { .. } => 3,
        Error::NotDisjoint { .. }
        | Error::Precondition(_)
        | Error::Uncertified
        | Error::GenericityUncertain { .. }
        | Error::DimensionMismatch { .. }
        | Error::RingMismatch
        | Error::ZeroIdeal
        | Error::DegenerateDraw { .. } => 4,
        _ => 2,
    }
}

/// `[index, degree, count]` triples.
fn betti_rows(b: &BettiTable) -> Value {
    json!(b.entries.iter().map(|(&(j, d), &c)| json!([j, d, c])).collect::<Vec<_>>())
}

fn invariants(s: &Session, arg: &str) -> Result<Value> {
    let (f, i) = s.load(arg)?;
    let res = free_resolution(&i)?;
    let inv = ResolutionInvariants::of(&i, &res)?;
    let h = i.hilbert_series()?;
    let mut deficiency = Vec::new();
    let n = i.ring().nvars() - 1;
    let d = projective_dim(&i)?;
    if i.is_saturated()? {
        for k in 1..n {
            if k as i64 > d {
                break;
            }
            match deficiency_module(&i, k) {
                Ok(m) => deficiency.push(serde_json::to_value(m.export(k as i64)).unwrap()),
                Err(Error::Uncertified) => deficiency.push(json!({ "index": k, "finiteLength": false })),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(json!({
        "name": f.name(),
        "prime": s.field.characteristic(),
        "seed": s.seed,
        "ring": f.ring.names(),
        "generators": i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "hilbertNumerator": h.numerator,
        "krullDim": h.krull_dim(),
        "degree": h.degree(),
        "saturated": i.is_saturated()?,
        "invariants": inv,
        "betti": betti_rows(&res.betti()),
        "deficiencyModules": deficiency,
    }))
}

fn compare(s: &Session, a: &str, b: &str) -> Result<Value> {
    let (_, i) = s.load(a)?;
    let (_, j) = s.load(b)?;
    let c = comparison_module(&i, &j)?;
    let t = tor(&i, &j, 1)?;
    let serre = theorems::verify_serre(&i, &j)?;
    Ok(json!({
        "prime": s.field.characteristic(),
        "seed": s.seed,
        "productEqualsIntersection": c.is_zero(),
        "comparisonModule": c.export(1),
        "tor1": t.export(1),
        "serre": serre,
    }))
}

fn resolve_cmd(s: &Session, arg: &str, csv: bool) -> Result<String> {
    let (_, i) = s.load(arg)?;
    let res = free_resolution(&i)?;
    let b = res.betti();
    Ok(match (csv, s.format) {
        (true, _) | (_, Format::Csv) => b.to_csv(),
        (_, Format::Text) => b.to_text(),
        _ => {
            let v = json!({
                "prime": s.field.characteristic(),
                "seed": s.seed,
                "twists": res.twists,
                "betti": betti_rows(&b),
                "regularity": res.regularity(),
                "length": res.length(),
            });
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
    })
}

fn cohomology(s: &Session, arg: &str, k: usize) -> Result<Value> {
    let (_, i) = s.load(arg)?;
    let module = match deficiency_module(&i, k) {
        Ok(m) => serde_json::to_value(m.export(k as i64)).unwrap(),
        Err(Error::Uncertified) => {
            let (lo, hi) = default_window(&i)?;
            let (lo, hi) = (lo - s.window_padding, hi + s.window_padding);
            let top = top_cohomology_window(&i, lo, hi)?;
            let mut v = serde_json::to_value(top.export(k as i64)).unwrap();
            v["window"] = json!([lo, hi]);
            v
        }
        Err(e) => return Err(e),
    };
    Ok(json!({ "prime": s.field.characteristic(), "seed": s.seed, "module": module }))
}

fn write_witness(dir: &PathBuf, name: &str, v: &Value) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("idealcalc-witness-{name}.json"));
    std::fs::write(&path, serde_json::to_string_pretty(v).unwrap() + "\n")?;
    eprintln!("witness written to {}", path.display());
    Ok(())
}

fn run(cli: &Cli) -> Result<(String, u8)> {
    let field = Field::new(cli.prime)?;
    let opts = GbOptions { degree_guard: cli.degree_guard, ..GbOptions::default() };
    let s = Session { field, opts, seed: cli.seed, window_padding: cli.window_padding, format: cli.format };
    let pretty = |v: &Value| serde_json::to_string_pretty(v).unwrap() + "\n";
    match &cli.cmd {
        Cmd::Invariants { file } => Ok((pretty(&invariants(&s, file)?), 0)),
        Cmd::Compare { first, second } => Ok((pretty(&compare(&s, first, second)?), 0)),
        Cmd::Resolve { file, csv } => Ok((resolve_cmd(&s, file, *csv)?, 0)),
        Cmd::Cohomology { file, index } => Ok((pretty(&cohomology(&s, file, *index)?), 0)),
        Cmd::Verify { theorem, files, witness_dir } => {
            if !theorems::THEOREM_IDS.contains(&theorem.as_str()) {
                return Err(Error::UnknownTheorem(theorem.clone()));
            }
            let ideals = files.iter().map(|f| s.load(f).map(|x| x.1)).collect::<Result<Vec<_>>>()?;
            let report = theorems::verify(theorem, &ideals, s.seed)?;
            let v = serde_json::to_value(&report).unwrap();
            let code = if report.verdict == Verdict::Violated {
                write_witness(witness_dir, theorem, &v)?;
                5
            } else {
                0
            };
            Ok((pretty(&v), code))
        }
        Cmd::Fuzz { theorem, count, witness_dir } => {
            let summary = theorems::fuzz(theorem, *count, s.seed, field)?;
            let violations: Vec<_> = summary.violations().cloned().collect();
            let v = json!({
                "theoremId": summary.theorem_id,
                "count": summary.count,
                "seed": summary.seed,
                "prime": summary.prime,
                "holds": summary.holds,
                "violated": summary.violated,
                "notApplicable": summary.not_applicable,
                "errors": summary.errors,
                "violations": violations,
            });
            let code = if violations.is_empty() {
                0
            } else {
                write_witness(witness_dir, theorem, &json!(violations))?;
                5
            };
            Ok((pretty(&v), code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
