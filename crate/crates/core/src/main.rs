use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use gradlie::algebra::derivations::flatten_map;
use gradlie::algebra::{graded_derivations, validate, Family, GradedLieAlgebra, NilpotentGradedAlgebra};
use gradlie::cohomology::{class_stabilizer_dim, cohomology_dims, h1_negative_test, max_stabilizer_probe, CohomologyClass, H2};
use gradlie::distribution::{
    classify_rank4, genericity_test, growth_vector_at, model_fields, symbol_at, FieldsJson, PolyVectorField, SymbolFamily,
};
use gradlie::linalg::{sparse, SparseVec, Subspace, Q};
use gradlie::prolongation::{compare_with_algebra, tanaka_prolong};
use gradlie::rational::{matrix_from_strings, parse_dense, parse_q};
use gradlie::reproduce::{expected, reproduce, Row, PROBE_TRIALS};
use gradlie::subalgebra::{gap_scan, subspace_stabilizer_dim, verify_subalgebra, witness_bk, witness_catalog, GradedSubalgebra};
use gradlie::Error;

/// Exact computations with graded semisimple Lie algebras.
///
/// ALGEBRA arguments take a built-in name (`g2`, `so4`, `so-split-3`,
/// `sp6`, `sp21`, `elliptic`, `hyperbolic`, …) or a path to algebra JSON.
#[derive(Parser)]
#[command(name = "gradlie", version)]
struct Cli {
    /// Indented JSON, and a table for reproduce-paper.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Master seed for randomized searches.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Random trials: gap scan (default 10000) or stabilizer probe (default 32).
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the algebra JSON of a built-in family.
    Build {
        family: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Validate an algebra (exit 1 if a check fails).
    Check { algebra: String },
    /// dim H^q(g₋, g) by homogeneity, with the H¹ negativity flag.
    Cohomology {
        algebra: String,
        #[arg(long, default_value_t = 2)]
        q: usize,
    },
    /// Tanaka prolongation of the negative part with der₀ or a given a₀.
    Prolong {
        algebra: String,
        /// JSON list of square matrices; column j is the image of e_j.
        #[arg(long)]
        a0: Option<PathBuf>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Catalog of maximal proper graded subalgebras, or b^k for so-split.
    Witness {
        algebra: String,
        #[arg(long)]
        bk: Option<usize>,
    },
    /// Stabilizer in g₀ of an H² class, of a subspace, or the probe maximum.
    Stabilizer {
        algebra: String,
        #[arg(long, conflicts_with_all = ["subspace", "probe"])]
        class: Option<PathBuf>,
        /// JSON list of coordinate rows in the component of --degree.
        #[arg(long, requires = "degree", conflicts_with = "probe")]
        subspace: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i32>,
        #[arg(long)]
        probe: bool,
    },
    /// Randomized search for proper graded subalgebras in a dimension gap.
    ScanGap {
        algebra: String,
        /// Open interval; defaults to the reference value for built-ins.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        forbidden: Option<Vec<usize>>,
    },
    /// Growth vector, symbol and genericity of a distribution.
    Analyze {
        /// Fields JSON file.
        #[arg(required_unless_present = "model")]
        fields: Option<PathBuf>,
        /// Use the flat model of this algebra's negative part.
        #[arg(long, conflicts_with = "fields")]
        model: Option<String>,
        /// Comma-separated rational coordinates; the origin by default.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long, value_parser = parse_symbol_family)]
        family: Option<SymbolFamily>,
        #[arg(long)]
        depth_cap: Option<usize>,
        /// Print the fields JSON instead of the analysis.
        #[arg(long)]
        emit_fields: bool,
    },
    /// Recompute the reference values and compare.
    ReproducePaper {
        /// Family keys (g2, so3, so4, so5, sp6, sp21); all by default.
        #[arg(long)]
        family: Vec<String>,
    },
}

fn parse_symbol_family(s: &str) -> Result<SymbolFamily, String> {
    match s {
        "so_n" | "so-n" | "so" => Ok(SymbolFamily::SoN),
        "g2" => Ok(SymbolFamily::G2),
        "rank4" => Ok(SymbolFamily::Rank4),
        _ => Err(format!("unknown symbol family {s:?} (so_n, g2, rank4)")),
    }
}

/// Report plus whether every verified property held.
struct Outcome {
    report: Value,
    ok: bool,
    text: Option<String>,
}

fn ok(report: impl Serialize) -> gradlie::Result<Outcome> {
    Ok(Outcome {
        report: serde_json::to_value(report)?,
        ok: true,
        text: None,
    })
}

fn read(path: &Path) -> gradlie::Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn load_unchecked(spec: &str) -> gradlie::Result<GradedLieAlgebra> {
    if let Ok(f) = Family::from_alias(spec, None) {
        return f.build();
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Error::Input(format!("{spec:?} is neither a built-in algebra nor a file")));
    }
    GradedLieAlgebra::from_json(&read(path)?)
}

fn load(spec: &str) -> gradlie::Result<GradedLieAlgebra> {
    let g = load_unchecked(spec)?;
    g.require_valid()?;
    Ok(g)
}

fn json_file<T: serde::de::DeserializeOwned>(path: &Path) -> gradlie::Result<T> {
    Ok(serde_json::from_str(&read(path)?)?)
}

fn run(cli: &Cli) -> gradlie::Result<Outcome> {
    match &cli.command {
        Command::Build { family, n } => {
            let g = Family::from_alias(family, *n)?.build()?;
            ok(g.to_json_value())
        }
        Command::Check { algebra } => {
            let g = load_unchecked(algebra)?;
            let r = validate(&g);
            Ok(Outcome {
                ok: r.passed(),
                report: serde_json::to_value(&r)?,
                text: None,
            })
        }
        Command::Cohomology { algebra, q } => {
            let g = load(algebra)?;
            let t = cohomology_dims(&g, *q)?;
            let mut v = serde_json::to_value(&t)?;
            v["h1_negative"] = json!(h1_negative_test(&g)?);
            ok(v)
        }
        Command::Prolong { algebra, a0, max_degree } => prolong(algebra, a0.as_deref(), *max_degree),
        Command::Witness { algebra, bk } => {
            let g = load(algebra)?;
            let list: Vec<(String, GradedSubalgebra)> = match bk {
                Some(k) => vec![(format!("b^{k}"), witness_bk(&g, *k)?)],
                None => witness_catalog(&g)?.into_iter().map(|w| (w.name, w.subalgebra)).collect(),
            };
            let mut all = true;
            let rows: Vec<Value> = list
                .iter()
                .map(|(name, b)| {
                    let r = verify_subalgebra(b);
                    all &= r.closed;
                    json!({"name": name, "dim": r.dim, "profile": r.profile, "closed": r.closed,
                           "proper": r.proper, "subalgebra": b.to_json()})
                })
                .collect();
            Ok(Outcome {
                report: json!(rows),
                ok: all,
                text: None,
            })
        }
        Command::Stabilizer {
            algebra,
            class,
            subspace,
            degree,
            probe,
        } => {
            let g = load(algebra)?;
            if let Some(path) = class {
                let c: CohomologyClass = json_file(path)?;
                let h2 = H2::compute(&g)?;
                ok(json!({"q": c.q, "homogeneity": c.homogeneity, "stabilizer_dim": class_stabilizer_dim(&h2, &c)?}))
            } else if let Some(path) = subspace {
                let d = degree.expect("required by clap");
                let rows: Vec<Vec<String>> = json_file(path)?;
                let idx = g.component(d);
                let mut vs: Vec<SparseVec<Q>> = Vec::new();
                for r in &rows {
                    if r.len() != idx.len() {
                        return Err(Error::Input(format!("row of length {} for g_{d} of dimension {}", r.len(), idx.len())));
                    }
                    let dense = parse_dense(r)?;
                    vs.push(sparse::collect(dense.into_iter().enumerate().map(|(p, c)| (idx[p], c))));
                }
                let w = Subspace::span(g.dim(), &vs);
                ok(json!({"degree": d, "subspace_dim": w.dim(), "stabilizer_dim": subspace_stabilizer_dim(&g, d, &w)?}))
            } else if *probe {
                let h2 = H2::compute(&g)?;
                ok(max_stabilizer_probe(&h2, cli.seed, cli.trials.unwrap_or(PROBE_TRIALS))?)
            } else {
                Err(Error::Input("give one of --class, --subspace or --probe".into()))
            }
        }
        Command::ScanGap { algebra, forbidden } => {
            let g = load(algebra)?;
            let interval = match forbidden {
                Some(v) => (v[0], v[1]),
                None => default_gap(&g)?,
            };
            let s = gap_scan(&g, interval, cli.trials.unwrap_or(10_000), cli.seed)?;
            Ok(Outcome {
                ok: s.violations.is_empty(),
                report: json!({"algebra": g.name(), "forbidden": interval, "trials": cli.trials.unwrap_or(10_000),
                               "seed": cli.seed, "histogram": s.histogram, "full": s.full, "violations": s.violations}),
                text: None,
            })
        }
        Command::Analyze {
            fields,
            model,
            point,
            family,
            depth_cap,
            emit_fields,
        } => {
            let f: Vec<PolyVectorField> = match (fields, model) {
                (Some(path), _) => json_file::<FieldsJson>(path)?.to_fields()?,
                (None, Some(spec)) => model_fields(&NilpotentGradedAlgebra::negative_part_of(&load(spec)?)?),
                (None, None) => unreachable!("enforced by clap"),
            };
            if *emit_fields {
                return ok(FieldsJson::from_fields(&f)?);
            }
            analyze(&f, point.as_deref(), *family, *depth_cap)
        }
        Command::ReproducePaper { family } => {
            let keys = (!family.is_empty()).then_some(family.as_slice());
            let trials = cli.trials.unwrap_or(10_000);
            let rows = reproduce(keys, cli.seed, trials)?;
            let all = rows.iter().all(|r| r.pass);
            Ok(Outcome {
                text: Some(table(&rows)),
                report: json!({"seed": cli.seed, "trials": trials, "passed": all, "rows": rows}),
                ok: all,
            })
        }
    }
}

fn default_gap(g: &GradedLieAlgebra) -> gradlie::Result<(usize, usize)> {
    let exp = expected()?;
    exp.families
        .iter()
        .filter(|f| f.algebra == g.name())
        .flat_map(|f| &f.checks)
        .find_map(|c| c.forbidden)
        .ok_or_else(|| Error::Input(format!("no reference gap for {}; pass --forbidden", g.name())))
}

fn prolong(algebra: &str, a0: Option<&Path>, max_degree: Option<usize>) -> gradlie::Result<Outcome> {
    let g = load(algebra)?;
    let nilpotent = g.degrees().iter().all(|&d| d < 0);
    let n = if nilpotent {
        NilpotentGradedAlgebra::new(g.clone())?
    } else {
        NilpotentGradedAlgebra::negative_part_of(&g)?
    };
    let space = match a0 {
        Some(path) => {
            let mats: Vec<Vec<Vec<String>>> = json_file(path)?;
            let flat = mats
                .iter()
                .map(|m| {
                    let m = matrix_from_strings(m)?;
                    if m.nrows() != n.dim() || m.ncols() != n.dim() {
                        return Err(Error::Input(format!("a0 matrices must be {0}x{0}", n.dim())));
                    }
                    Ok(flatten_map(&m))
                })
                .collect::<gradlie::Result<Vec<_>>>()?;
            Subspace::span(n.dim() * n.dim(), &flat)
        }
        None => graded_derivations(&n, 0).space,
    };
    let r = tanaka_prolong(&n, &space, max_degree.unwrap_or(2 * n.k() as usize + 1))?;
    let dims: BTreeMap<String, usize> = r.component_dims.iter().map(|(d, v)| (d.to_string(), *v)).collect();
    let mut report = json!({"dims": dims, "total": r.total(), "terminated": r.terminated});
    if let Some(t) = r.truncated_at {
        report["truncated_at"] = json!(t);
    }
    let mut all = true;
    if !nilpotent {
        let c = compare_with_algebra(&r, &g);
        all = c.passed;
        report["matches_algebra"] = json!(c.passed);
        report["mismatches"] = json!(c.mismatches);
    }
    Ok(Outcome {
        report,
        ok: all,
        text: None,
    })
}

fn detect_symbol_family(dims: &[usize]) -> Option<SymbolFamily> {
    match dims {
        [2, 1, 2] => Some(SymbolFamily::G2),
        [4, 3] => Some(SymbolFamily::Rank4),
        [n, m] if n * n.saturating_sub(1) / 2 == *m => Some(SymbolFamily::SoN),
        _ => None,
    }
}

fn analyze(
    fields: &[PolyVectorField],
    point: Option<&str>,
    family: Option<SymbolFamily>,
    depth_cap: Option<usize>,
) -> gradlie::Result<Outcome> {
    let m = fields.first().map_or(0, PolyVectorField::num_vars);
    let x: Vec<Q> = match point {
        Some(s) => s.split(',').map(parse_q).collect::<gradlie::Result<_>>()?,
        None => vec![Q::from_integer(0.into()); m],
    };
    let growth = growth_vector_at(fields, &x, depth_cap.unwrap_or(m.max(1)))?;
    let generating = growth.is_bracket_generating(m);
    let mut report = json!({"vars": m, "growth": growth, "bracket_generating": generating});
    if !generating {
        return Ok(Outcome {
            report,
            ok: false,
            text: None,
        });
    }
    let s = symbol_at(fields, &x)?;
    let dims: Vec<usize> = (1..=s.k()).map(|d| s.component(-d).len()).collect();
    report["symbol"] = json!({"dims": dims, "valid": validate(&s).passed(), "algebra": s.to_json_value()});
    let mut all = true;
    if let Some(fam) = family.or_else(|| detect_symbol_family(&dims)) {
        let r = genericity_test(&s, fam);
        all &= r.passed || family.is_none();
        report["genericity"] = serde_json::to_value(&r)?;
    }
    if dims == [4, 3] {
        report["rank4"] = serde_json::to_value(classify_rank4(&s)?)?;
    }
    Ok(Outcome {
        report,
        ok: all,
        text: None,
    })
}

fn table(rows: &[Row]) -> String {
    let mut out = format!("{:<6} {:>2}  {:<28} {:<24} {:<24} {}\n", "family", "#", "quantity", "expected", "computed", "");
    for r in rows {
        out.push_str(&format!(
            "{:<6} {:>2}  {:<28} {:<24} {:<24} {}\n",
            r.family,
            r.criterion,
            r.quantity,
            r.expected.to_string(),
            r.computed.to_string(),
            if r.pass { "pass" } else { "FAIL" }
        ));
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    out.push_str(&format!("{} rows, {} failed\n", rows.len(), failed));
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            let body = match (&o.text, cli.pretty) {
                (Some(t), true) => t.clone(),
                (_, true) => serde_json::to_string_pretty(&o.report).expect("serializable") + "\n",
                (_, false) => serde_json::to_string(&o.report).expect("serializable") + "\n",
            };
            let written = match &cli.output {
                Some(p) => fs::write(p, &body).map_err(Error::from),
                None => {
                    print!("{body}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("{}", json!({"error": e.to_string()}));
                return ExitCode::from(2);
            }
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string()}));
            ExitCode::from(2)
        }
    }
}
