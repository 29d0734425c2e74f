use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hopfbench::catalog::{self, Scope, Source};
use hopfbench::freealg::{parse_poly, PolyEnv};
use hopfbench::gf::{make_field, Field};
use hopfbench::harness::{
    self, fault_campaign, summarize, summary_table, verify_iso_criteria, verify_nichols_suite,
    Sampling, Suite,
};
use hopfbench::hopf::{
    build_hopf, check_axioms, iso_search, BuildOptions, HopfAlgebra, IsoOptions, PresentationFile,
};
use hopfbench::nichols::{nichols_dims, BraidedSpace, DEFAULT_BUDGET};
use hopfbench::rewrite::{complete, default_degree_cap};

#[derive(Parser)]
#[command(name = "hopfbench", version, about = "Build and check small pointed Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the arithmetic data of GF(p^k).
    FieldInfo { p: u32, k: u32 },
    /// Normal form of a polynomial modulo the completed relations.
    Nf { file: PathBuf, poly: String },
    /// Dimension of the presented algebra.
    Dim { file: PathBuf },
    /// Build the Hopf structure and run the axiom checks.
    HopfCheck { file: PathBuf },
    /// Dimension and basis of P_{g,h} for words g, h in grouplike generators.
    Skewprim { file: PathBuf, g: String, h: String },
    /// Group generated by the grouplike generators, or all group-likes.
    Grouplikes {
        file: PathBuf,
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
    },
    /// Graded dimensions of a Nichols algebra.
    Nichols {
        spec: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value = "2,1", value_parser = parse_field)]
        field: Field,
    },
    /// Inspect the family catalog.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Sweep families: a scope (t4.2, t3.7, lemmas, all) or a family id.
    Verify {
        scope: String,
        #[arg(long, value_parser = parse_field)]
        field: Field,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = harness::DEFAULT_SEED)]
        seed: u64,
        /// Also fault-inject one member of every family.
        #[arg(long)]
        faults: bool,
    },
    /// Search for Hopf isomorphisms between two presentations.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// Compare a family's isomorphism criterion with exhaustive search.
    IsoCriteria {
        id: String,
        #[arg(long, value_parser = parse_field)]
        field: Field,
    },
    /// Run an identity suite (jacobson, lemma210, lemma211).
    Identities {
        suite: String,
        #[arg(long, value_parser = parse_field)]
        field: Field,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = harness::DEFAULT_SEED)]
        seed: u64,
    },
    /// Run the fixed Nichols-dimension targets for a characteristic.
    NicholsSuite {
        #[arg(long, value_parser = parse_field)]
        field: Field,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List {
        #[arg(default_value = "all")]
        scope: String,
    },
    Show { id: String },
}

fn parse_field(s: &str) -> Result<Field, String> {
    let (p, k) = s.split_once(',').ok_or("expected p,k")?;
    let p = p.trim().parse().map_err(|_| "bad p")?;
    let k = k.trim().parse().map_err(|_| "bad k")?;
    make_field(p, k).map_err(|e| e.to_string())
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    Scope::parse(s).ok_or_else(|| format!("unknown scope {s:?}"))
}

fn load_hopf(file: &PathBuf) -> Result<HopfAlgebra, String> {
    let p = PresentationFile::load(file)
        .and_then(|pf| pf.to_presentation())
        .map_err(|e| e.to_string())?;
    build_hopf(&p, &BuildOptions::default()).map_err(|e| e.to_string())
}

fn run(cmd: Cmd) -> Result<bool, String> {
    match cmd {
        Cmd::FieldInfo { p, k } => {
            let f = make_field(p, k).map_err(|e| e.to_string())?;
            println!("field {f}");
            println!("order {}", f.order());
            println!("modulus {:?} (constant term first)", f.modulus());
            println!("generator {}", f.generator());
            Ok(true)
        }
        Cmd::Nf { file, poly } => {
            let pres = PresentationFile::load(&file)
                .and_then(|pf| pf.to_presentation())
                .map_err(|e| e.to_string())?;
            let f = &pres.field;
            let (sys, status) = complete(
                &pres.alphabet,
                f,
                &pres.relations,
                default_degree_cap(&pres.relations),
            )
            .map_err(|e| format!("{e:?}"))?;
            let q = parse_poly(&poly, &pres.alphabet, &PolyEnv::default(), f)
                .map_err(|e| e.to_string())?;
            println!("{}", pres.alphabet.fmt_poly(&sys.normal_form(&q)));
            println!("completion {status:?}");
            Ok(true)
        }
        Cmd::Dim { file } => {
            let pres = PresentationFile::load(&file)
                .and_then(|pf| pf.to_presentation())
                .map_err(|e| e.to_string())?;
            let (sys, status) = complete(
                &pres.alphabet,
                &pres.field,
                &pres.relations,
                default_degree_cap(&pres.relations),
            )
            .map_err(|e| format!("{e:?}"))?;
            let (basis, closed) = sys.enumerate_basis(1 << 14);
            if closed {
                println!("dim {}", basis.len());
            } else {
                println!("dim > {} (basis did not close)", basis.len());
            }
            println!("completion {status:?}");
            Ok(closed)
        }
        Cmd::HopfCheck { file } => {
            let h = load_hopf(&file)?;
            let rep = check_axioms(&h);
            println!("dim {}", h.dim());
            for (axiom, witness) in &rep.results {
                match witness {
                    None => println!("PASS {axiom}"),
                    Some(w) => println!("FAIL {axiom}: {w}"),
                }
            }
            Ok(rep.all_pass())
        }
        Cmd::Skewprim { file, g, h } => {
            let hopf = load_hopf(&file)?;
            let a = &hopf.presentation.alphabet;
            let gv = hopf.algebra.word_vec(&a.word(&g).map_err(|e| e.to_string())?);
            let hv = hopf.algebra.word_vec(&a.word(&h).map_err(|e| e.to_string())?);
            let space = hopf
                .skew_primitive_space(&gv, &hv)
                .map_err(|e| e.to_string())?;
            println!("dim P_{{{g},{h}}} = {}", space.len());
            for v in &space {
                println!("  {}", hopf.algebra.fmt_vec(v));
            }
            Ok(true)
        }
        Cmd::Grouplikes {
            file,
            enumerate,
            budget,
        } => {
            let h = load_hopf(&file)?;
            let elems = if enumerate {
                h.enumerate_grouplikes(budget).map_err(|e| e.to_string())?
            } else {
                h.group_elements()
            };
            println!("{} group-like elements", elems.len());
            for v in &elems {
                println!("  {}", h.algebra.fmt_vec(v));
            }
            Ok(true)
        }
        Cmd::Nichols { spec, nmax, field } => {
            let v = BraidedSpace::parse(&spec, &field).map_err(|e| e.to_string())?;
            let d = nichols_dims(&v, nmax, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            println!("graded {:?}", d.graded);
            println!(
                "total {}{}",
                d.total,
                if d.closed { "" } else { " (lower bound)" }
            );
            Ok(true)
        }
        Cmd::Catalog { cmd } => match cmd {
            CatalogCmd::List { scope } => {
                let fams = catalog::list_families(parse_scope(&scope)?);
                for fam in &fams {
                    let params: Vec<String> = fam
                        .params
                        .iter()
                        .map(|p| format!("{} in {}", p.name, p.domain))
                        .collect();
                    println!(
                        "{:<12} {:<20} {:<9} dim {:<4} {}",
                        fam.id,
                        fam.label.as_deref().unwrap_or("-"),
                        fam.group,
                        fam.dim.to_string(),
                        params.join(", ")
                    );
                }
                for src in [Source::T42, Source::T37, Source::Lemma] {
                    let n = fams.iter().filter(|f| f.source == src).count();
                    if n > 0 {
                        println!("{src} families: {n}");
                    }
                }
                Ok(true)
            }
            CatalogCmd::Show { id } => {
                print!("{}", catalog::export_toml(&id).map_err(|e| e.to_string())?);
                Ok(true)
            }
        },
        Cmd::Verify {
            scope,
            field,
            sample,
            seed,
            faults,
        } => {
            let sampling = sample.map(|n| Sampling::Sample { n, seed });
            let reports = match Scope::parse(&scope) {
                Some(s) => harness::verify_scope(s, &field, sampling),
                None => {
                    let fam = catalog::family(&scope).map_err(|e| e.to_string())?;
                    let s = sampling.unwrap_or_else(|| Sampling::policy(fam, &field));
                    harness::verify_family(fam, &field, s)
                }
            }
            .map_err(|e| e.to_string())?;
            for r in &reports {
                println!("{}", r.record());
            }
            print!("{}", summary_table(&summarize(&reports)));
            let mut ok = reports.iter().all(|r| r.passed());
            if faults {
                let s = Scope::parse(&scope).unwrap_or(Scope::All);
                for r in fault_campaign(s, &field) {
                    println!("{}", r.record());
                    ok &= r.passed();
                }
            }
            Ok(ok)
        }
        Cmd::Iso { file1, file2, all } => {
            let h1 = load_hopf(&file1)?;
            let h2 = load_hopf(&file2)?;
            let opts = IsoOptions {
                first_only: !all,
                ..Default::default()
            };
            let found = iso_search(&h1, &h2, &opts).map_err(|e| e.to_string())?;
            if found.is_empty() {
                println!("not isomorphic");
            }
            for m in &found {
                println!("{}", m.describe(&h1, &h2));
            }
            Ok(true)
        }
        Cmd::IsoCriteria { id, field } => {
            let fam = catalog::family(&id).map_err(|e| e.to_string())?;
            let rep = verify_iso_criteria(fam, &field).map_err(|e| e.to_string())?;
            for line in rep.records() {
                println!("{line}");
            }
            println!("{}", rep.summary());
            Ok(rep.agreement() && rep.oracle_symmetric())
        }
        Cmd::Identities {
            suite,
            field,
            trials,
            seed,
        } => {
            let s = Suite::parse(&suite).ok_or_else(|| format!("unknown suite {suite:?}"))?;
            let rep = harness::verify_identity_suite(s, &field, trials, seed);
            for a in &rep.algebras {
                println!("algebra {a}");
            }
            for w in &rep.failures {
                println!("FAIL {w}");
            }
            println!("{}", rep.record());
            Ok(rep.passed())
        }
        Cmd::NicholsSuite { field } => {
            let checks = verify_nichols_suite(&field);
            for c in &checks {
                println!("{}", c.record());
            }
            Ok(checks.iter().all(|c| c.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
