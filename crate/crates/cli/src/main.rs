use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qmoments::families::{family_closed, family_recur, FamilyId};
use qmoments::moments::{catalan, has_series_route, moment_vector, CatalanVariant, MomentRoute};
use qmoments::qkernel::RatFunc;
use qmoments::qseries::{series_e, series_f, series_g, series_g_q, series_h_g, TruncSeries, ZParam, DEFAULT_ORDER};
use qmoments::verify::{run_suite, Mode, Selector};
use qmoments::{Error, Var};

#[derive(Parser)]
#[command(name = "qmoments", version, about = "Exact q-analogue polynomial families, their moments and identity checks")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyRoute {
    Closed,
    Recur,
}

#[derive(Clone, Copy, ValueEnum)]
enum MomentsRoute {
    Triangle,
    Expand,
    Series,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Symbolic,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    /// `E^(m)(u)`
    E,
    /// `G(u, z, q)`
    G,
    /// `F(u, z, q)`
    F,
    /// `(u; q^2)_∞`
    Gq,
    /// `(u; q^2)_∞ / (qu; q^2)_∞`
    H,
    /// `G(qu, q) / G(u, q)`
    GRatio,
}

#[derive(Subcommand)]
enum Command {
    /// Print p_n of a catalog family.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
        /// A rational value, or `sym`.
        #[arg(long, default_value = "sym")]
        z: ZParam,
        /// A rational value, or `sym`.
        #[arg(long, default_value = "sym")]
        s: ZParam,
        #[arg(long, value_enum, default_value_t = FamilyRoute::Closed)]
        route: FamilyRoute,
    },
    /// Print Λ(x^(mn)) for n = 0..=N.
    Moments {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value = "sym")]
        z: ZParam,
        #[arg(long, default_value = "sym")]
        s: ZParam,
        #[arg(long, value_enum, default_value_t = MomentsRoute::All)]
        route: MomentsRoute,
    },
    /// Print the n-th number of a Catalan variant.
    Catalan {
        #[arg(long)]
        variant: CatalanVariant,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long)]
        n: usize,
    },
    /// Run registered identity checks.
    Verify {
        /// `all`, a section (s1..s5, final, misc, or `classical` for s1) or comma-separated ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = VerifyMode::Symbolic)]
        mode: VerifyMode,
        /// Seed for sampled mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall times in the output.
        #[arg(long)]
        timings: bool,
        /// Print the registered ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print a named series truncated at `--order`.
    Series {
        #[arg(long, value_enum)]
        name: SeriesName,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value = "sym")]
        z: ZParam,
    },
}

/// Usage-level failure (exit 2) or a failed check (exit 1).
enum Fail {
    Usage(String),
    Check,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Usage(e.to_string())
    }
}

impl From<qmoments::KernelError> for Fail {
    fn from(e: qmoments::KernelError) -> Fail {
        Fail::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Check) => ExitCode::from(1),
    }
}

fn family_id(name: &str, m: Option<u32>, z: &ZParam, s: &ZParam) -> Result<FamilyId, Error> {
    let mut id = FamilyId::parse(name)?;
    if let Some(m) = m {
        id = id.with_m(m)?;
    }
    id.with_z(z.clone())?.with_s(s.clone())
}

fn strings(values: &[RatFunc]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn json_line(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json value"))
}

/// `index,value` rows with a header.
fn csv_rows(header: &str, rows: &[String]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record([header, "value"]).expect("in-memory write");
    for (i, r) in rows.iter().enumerate() {
        w.write_record([i.to_string().as_str(), r]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn run(cli: &Cli) -> Result<String, Fail> {
    let fmt = cli.format;
    match &cli.command {
        Command::Family { name, n, m, z, s, route } => {
            let id = family_id(name, *m, z, s)?;
            let p = match route {
                FamilyRoute::Closed => family_closed(&id, *n)?,
                FamilyRoute::Recur => family_recur(&id, *n)?,
            };
            let value = p.to_string();
            Ok(match fmt {
                Format::Text => format!("{value}\n"),
                Format::Json => json_line(json!({"family": id.to_string(), "n": n, "value": value})),
                Format::Csv => format!("family,n,value\n\"{id}\",{n},\"{value}\"\n"),
            })
        }
        Command::Moments { family, n, m, z, s, route } => {
            let id = family_id(family, *m, z, s)?;
            let routes: Vec<MomentRoute> = match route {
                MomentsRoute::Triangle => vec![MomentRoute::Triangle],
                MomentsRoute::Expand => vec![MomentRoute::Expand],
                MomentsRoute::Series => vec![MomentRoute::Series],
                MomentsRoute::All => MomentRoute::ALL
                    .into_iter()
                    .filter(|r| match r {
                        MomentRoute::Triangle => id.name.is_three_term(),
                        MomentRoute::Series => has_series_route(id.name),
                        MomentRoute::Expand => true,
                    })
                    .collect(),
            };
            let mut computed = Vec::new();
            for r in &routes {
                computed.push((*r, moment_vector(&id, *n, *r)?.render()));
            }
            let agree = computed.windows(2).all(|w| w[0].1 == w[1].1);
            let out = match fmt {
                Format::Text => {
                    let mut s = String::new();
                    for (r, vals) in &computed {
                        s.push_str(&format!("[{r}]\n"));
                        for (i, v) in vals.iter().enumerate() {
                            s.push_str(&format!("{i}: {v}\n"));
                        }
                    }
                    if computed.len() > 1 {
                        s.push_str(if agree { "routes agree\n" } else { "routes DISAGREE\n" });
                    }
                    s
                }
                Format::Json => {
                    let map: serde_json::Map<String, Value> =
                        computed.iter().map(|(r, v)| (r.name().to_string(), json!(v))).collect();
                    json_line(json!({"family": id.to_string(), "n": n, "routes": map, "agree": agree}))
                }
                Format::Csv => {
                    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
                    w.write_record(["route", "n", "value"]).expect("in-memory write");
                    for (r, vals) in &computed {
                        for (i, v) in vals.iter().enumerate() {
                            w.write_record([r.name(), i.to_string().as_str(), v]).expect("in-memory write");
                        }
                    }
                    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
                }
            };
            if !agree {
                print!("{out}");
                return Err(Fail::Check);
            }
            Ok(out)
        }
        Command::Catalan { variant, m, n } => {
            let values = strings(&catalan(*variant, *m, *n)?);
            Ok(match fmt {
                Format::Text => format!("{}\n", values[*n]),
                Format::Json => json_line(json!({
                    "variant": variant.name(), "m": m, "n": n, "value": values[*n], "values": values,
                })),
                Format::Csv => csv_rows("n", &values),
            })
        }
        Command::Verify { suite, order, mode, seed, timings, list } => {
            if *list {
                let ids: Vec<&str> = qmoments::verify::registry().iter().map(|c| c.id).collect();
                return Ok(match fmt {
                    Format::Json => json_line(json!(ids)),
                    _ => ids.iter().map(|i| format!("{i}\n")).collect(),
                });
            }
            let mode = match mode {
                VerifyMode::Symbolic => Mode::Symbolic,
                VerifyMode::Sampled => Mode::Sampled { seed: *seed },
            };
            let report = run_suite(&Selector::parse(suite)?, *order, mode)?;
            let out = match fmt {
                Format::Text => report.to_text(*timings),
                Format::Json => format!("{}\n", report.to_json(*timings)),
                Format::Csv => report.to_csv(),
            };
            if report.all_passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Fail::Check)
            }
        }
        Command::Series { name, order, m, z } => {
            let zr = z.as_ratfunc(Var::Z);
            let one = RatFunc::one();
            let s: TruncSeries = match name {
                SeriesName::E => series_e(*m, *order),
                SeriesName::G => series_g(&one, &zr, *order)?,
                SeriesName::F => series_f(&one, &zr, *order)?,
                SeriesName::Gq => series_g_q(&one, *order),
                SeriesName::H => series_h_g(*order).0,
                SeriesName::GRatio => series_h_g(*order).1,
            };
            let values = s.render();
            Ok(match fmt {
                Format::Text => values.iter().enumerate().map(|(i, v)| format!("u^{i}: {v}\n")).collect(),
                Format::Json => json_line(json!(values)),
                Format::Csv => csv_rows("n", &values),
            })
        }
    }
}
