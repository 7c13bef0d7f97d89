use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_herm::exactfield::{fmt_q, fmt_q_vec, parse_q, parse_q_vec};
use hecke_herm::jantzen::diagonalize_with;
use hecke_herm::langdata::{a_character, f_decompose, hkl_regular, is_discrete_series, is_tempered};
use hecke_herm::modforms::restrict_to;
use hecke_herm::verify::{verify_b2_subregular, verify_g2_subregular, verify_identities, verify_regular};
use hecke_herm::wchars::copy_vectors;
use hecke_herm::{
    CharTable, Error, GramFamily, InducedDatum, InducedModule, Normalization, Report, RootSystem,
    SigmaKind, WeylGroup, Q,
};

#[derive(Parser)]
#[command(name = "hecke-herm", version, about = "Hermitian forms on graded Hecke algebra modules")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for Gram entries and verify pipelines.
    #[arg(long, env = "HECKE_HERM_JOBS", global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Gram matrix of the invariant form on an induced module, over Q(t).
    Gram {
        #[command(flatten)]
        module: ModuleArgs,
        /// T: standard basis; R: intertwiner basis.
        #[arg(long, default_value = "T")]
        basis: String,
        /// raw, identity, auto, or a comma-separated vector of T-coordinates.
        #[arg(long, default_value = "auto")]
        norm: String,
    },
    /// Jantzen filtration and signatures at t0.
    Jantzen {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        t0: String,
        /// Restrict to the copies of one W-type.
        #[arg(long)]
        wtype: Option<String>,
        /// Side offset for the signature comparison at t0 ± delta.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Hermitian KL table at a regular dominant central character.
    HklRegular {
        #[arg(value_name = "TYPE")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Weights of an induced module at t0 with their Langlands data.
    Weights {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        t0: String,
    },
    /// Character table of the Weyl group.
    CharTable {
        #[arg(value_name = "TYPE")]
        group: String,
    },
    /// Reproduction pipelines with pass/fail reports.
    Verify {
        #[command(subcommand)]
        which: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Regular {
        #[arg(value_name = "TYPE")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    B2Subregular,
    G2Subregular,
    Identities {
        #[arg(value_name = "TYPE", default_value = "B2")]
        group: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1/3,1/7")]
        nu0: String,
        #[arg(long, allow_hyphen_values = true, default_value = "2/5,-1/11")]
        dir: String,
    },
}

#[derive(Args)]
struct ModuleArgs {
    /// A1, A2, B2, G2, ...
    #[arg(value_name = "TYPE")]
    group: String,
    #[arg(long, allow_hyphen_values = true)]
    nu0: String,
    #[arg(long, allow_hyphen_values = true)]
    dir: String,
    /// Simple roots of the Levi, 1-based and comma-separated.
    #[arg(long, default_value = "")]
    levi: String,
    /// Character of the Levi: triv or st.
    #[arg(long, default_value = "triv")]
    sigma: String,
    /// Parameters k on the simple roots.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
}

impl ModuleArgs {
    fn group(&self) -> Result<Arc<WeylGroup>, Error> {
        let k = self.k.as_deref().map(parse_q_vec).transpose()?;
        let rs = RootSystem::with_parameters(&self.group, k.as_deref())?;
        Ok(Arc::new(WeylGroup::new(rs)))
    }

    fn module(&self) -> Result<InducedModule, Error> {
        let g = self.group()?;
        let levi = self
            .levi
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| match s.trim().parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::Parse(format!("bad Levi index {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let datum = InducedDatum {
            levi,
            sigma: SigmaKind::parse(&self.sigma)?,
            nu0: g.root_system().parse_weight(&self.nu0)?,
            dir: g.root_system().parse_weight(&self.dir)?,
        };
        InducedModule::new(g, &datum)
    }
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(format: Format, json: serde_json::Value, tsv: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("json")),
        Format::Tsv => print!("{}", tsv()),
    }
}

fn gram_tsv(g: &GramFamily) -> String {
    let mut out = format!("basis\t{}\n", g.basis.join("\t"));
    for (i, label) in g.basis.iter().enumerate() {
        let row: Vec<String> = g.entries.row(i).iter().map(|f| f.to_text()).collect();
        out.push_str(&format!("{label}\t{}\n", row.join("\t")));
    }
    out
}

fn parse_norm(s: &str) -> Result<Normalization, Error> {
    Ok(match s {
        "raw" => Normalization::Raw,
        "identity" => Normalization::IdentityVector,
        "auto" => Normalization::Auto,
        v => Normalization::Vector(parse_q_vec(v)?),
    })
}

fn report_out(format: Format, r: &Report) -> Result<(), Failure> {
    emit(format, r.to_json(), || r.to_tsv());
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Gram { module, basis, norm } => {
            let m = module.module()?;
            let g = m.gram_family(&parse_norm(&norm)?)?;
            let g = match basis.as_str() {
                "T" | "t" => g,
                "R" | "r" => m.to_r_basis(&g)?,
                other => return Err(Failure::Usage(format!("unknown basis {other:?}; use T or R"))),
            };
            emit(format, g.to_json(), || gram_tsv(&g));
        }
        Cmd::Jantzen {
            module,
            t0,
            wtype,
            delta,
        } => {
            let m = module.module()?;
            let t0 = parse_q(&t0)?;
            let delta = delta.as_deref().map(parse_q).transpose()?;
            let mut g = m.gram_family(&Normalization::Auto)?;
            if let Some(mu) = wtype {
                let table = CharTable::for_group(m.group())?;
                let vs = copy_vectors(&m, &table, &mu)?;
                let labels = (0..vs.len()).map(|i| format!("{mu}#{}", i + 1)).collect();
                g = restrict_to(&g, &vs, labels);
            }
            let report = diagonalize_with(&g, &t0, delta)?;
            emit(format, report.to_json(), || report.to_tsv());
        }
        Cmd::HklRegular { group, s } => {
            let g = Arc::new(WeylGroup::from_label(&group)?);
            let s = g.root_system().parse_weight(&s)?;
            let t = hkl_regular(&g, &s)?;
            emit(format, t.to_json(), || t.to_tsv());
            if !t.verdict {
                return Err(Failure::Mismatch);
            }
        }
        Cmd::Weights { module, t0 } => {
            let m = module.module()?;
            let rs = m.group().root_system();
            let t0: Q = parse_q(&t0)?;
            let ws = a_character(&m, &t0);
            let all: Vec<Vec<Q>> = ws.iter().map(|w| w.0.clone()).collect();
            let mut rows = vec![];
            for (w, mult) in &ws {
                let d = f_decompose(rs, w)?;
                rows.push((w.clone(), *mult, d));
            }
            let tempered = is_tempered(rs, &all)?;
            let ds = is_discrete_series(rs, &all)?;
            let json = serde_json::json!({
                "t0": fmt_q(&t0),
                "tempered": tempered,
                "discrete_series": ds,
                "weights": rows.iter().map(|(w, mult, d)| serde_json::json!({
                    "weight": fmt_q_vec(w),
                    "multiplicity": mult,
                    "levi": d.levi.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "positive_part": fmt_q_vec(&d.positive_part),
                })).collect::<Vec<_>>(),
            });
            emit(format, json, || {
                let mut out = String::from("weight\tmultiplicity\tlevi\tpositive_part\n");
                for (w, mult, d) in &rows {
                    let levi: Vec<String> = d.levi.iter().map(|i| (i + 1).to_string()).collect();
                    out.push_str(&format!(
                        "{}\t{mult}\t{}\t{}\n",
                        fmt_q_vec(w),
                        levi.join(","),
                        fmt_q_vec(&d.positive_part)
                    ));
                }
                out
            });
        }
        Cmd::CharTable { group } => {
            let t = CharTable::from_label(&group)?;
            emit(format, serde_json::to_value(&t).expect("json"), || t.to_tsv());
        }
        Cmd::Verify { which } => {
            let r = match which {
                VerifyCmd::Regular { group, s } => {
                    let rs = RootSystem::new(&group)?;
                    verify_regular(&group, &rs.parse_weight(&s)?)?
                }
                VerifyCmd::B2Subregular => verify_b2_subregular()?,
                VerifyCmd::G2Subregular => verify_g2_subregular()?,
                VerifyCmd::Identities { group, nu0, dir } => {
                    let rs = RootSystem::new(&group)?;
                    verify_identities(&group, &rs.parse_weight(&nu0)?, &rs.parse_weight(&dir)?)?
                }
            };
            report_out(format, &r)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
