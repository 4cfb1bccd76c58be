use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ehrhart::checks::{
    certify_equality, ehrhart_check, grunbaum_check, grunbaum_facet_cuts, milman_pajor_check,
    minkowski_combined_check, proof_trace, r_invariant, shrink_to_barycenter, CheckReport, Status,
};
use ehrhart::corpus::{
    emit_polytopes, emit_report, enumerate_fano_2d, parse_polytopes, reflexive_polygons, scan,
    seed_from_env, CheckKind, PolytopeRecord, RandomPolytopes,
};
use ehrhart::kernel::{barycenter, rational, volume};
use ehrhart::lattice::{
    are_equivalent, dual_polytope, lattice_points_of, normal_form, root_symmetry_check,
};
use ehrhart::toric::toric_report;
use ehrhart::{Error, HalfSpace, Point, VPolytope};

#[derive(Parser)]
#[command(
    name = "ehrhart",
    version,
    about = "Exact lattice polytope computations and volume-bound checks"
)]
struct Cli {
    /// Read blocks as `dim` rows of `nverts` columns.
    #[arg(long, global = true)]
    transpose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Polar dual of each polytope.
    Dual { file: PathBuf },
    /// Exact volume
    Volume { file: PathBuf },
    /// Exact barycenter
    Barycenter { file: PathBuf },
    /// Lattice points, or interior ones with --strict.
    LatticePoints {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// R(K) and the boundary point behind the origin
    RInvariant { file: PathBuf },
    /// R(K)(K - b_K).
    Shrink { file: PathBuf },
    /// Unimodular normal form
    NormalForm { file: PathBuf },
    /// Unimodular equivalence of the first polytope in each file.
    Equiv { a: PathBuf, b: PathBuf },
    /// Run one named check on every polytope.
    Check { check: String, file: PathBuf },
    /// Grünbaum inequality for a half-space `a1,...,an;c` meaning <a, x> <= c.
    Grunbaum {
        #[arg(long, allow_hyphen_values = true)]
        halfspace: String,
        file: PathBuf,
    },
    /// Volume chain for K inside the dual of the lattice polytope Q.
    ProofTrace {
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        k: PathBuf,
    },
    /// Unimodular map onto (n+1)Δn when one exists
    CertifyEquality { file: PathBuf },
    /// Degree, Kähler–Einstein criterion and degree bounds of a Fano polytope
    ToricReport { file: PathBuf },
    /// Polygons whose only interior lattice point is the origin.
    EnumFano {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long)]
        reflexive: bool,
    },
    /// Run a comma-separated list of checks (or `all`) over a corpus.
    Scan {
        #[arg(long, default_value = "all")]
        checks: String,
        file: PathBuf,
        /// Print only the summary.
        #[arg(long)]
        summary_only: bool,
    },
    /// Random rational polytopes seeded by EHRHART_SEED.
    Random {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        extra_points: usize,
        #[arg(long, default_value = "2")]
        radius: String,
    },
}

/// Exit status: 0 ok, 1 a check reported a violation, 2 bad input or usage.
struct Outcome {
    violation: bool,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn read_records(path: &Path, transpose: bool) -> Result<Vec<PolytopeRecord>, String> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| e.to_string())?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    parse_polytopes(&text, transpose).map_err(|e| format!("{}: {e}", path.display()))
}

fn polytopes(path: &Path, transpose: bool) -> Result<Vec<(String, VPolytope)>, String> {
    read_records(path, transpose)?
        .into_iter()
        .map(|r| r.polytope().map(|p| (r.id, p)).map_err(|e| e.to_string()))
        .collect()
}

fn first_polytope(path: &Path, transpose: bool) -> Result<VPolytope, String> {
    polytopes(path, transpose)?
        .into_iter()
        .next()
        .map(|(_, p)| p)
        .ok_or_else(|| format!("{}: no polytope", path.display()))
}

fn parse_halfspace(text: &str) -> Result<HalfSpace, Error> {
    let (normal, offset) = text
        .split_once(';')
        .ok_or_else(|| usage("half-space must look like `a1,...,an;c`"))?;
    let coords = normal
        .split(',')
        .map(|t| rational::parse(t).ok_or_else(|| usage(format!("bad number `{t}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let offset = rational::parse(offset).ok_or_else(|| usage(format!("bad number `{offset}`")))?;
    HalfSpace::new(Point::new(coords), offset)
}

fn print_report(id: &str, report: &CheckReport, out: &mut Outcome) {
    out.violation |= report.status == Status::Violation;
    println!("{}", emit_report(id, report));
}

fn emit_single(id: &str, p: &VPolytope) {
    print!(
        "{}",
        emit_polytopes(&[PolytopeRecord::from_polytope(id, p)])
    );
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let t = cli.transpose;
    let mut out = Outcome { violation: false };
    let per = |file: &Path,
               f: &mut dyn FnMut(&str, &VPolytope) -> Result<(), Error>|
     -> Result<(), String> {
        for (id, p) in polytopes(file, t)? {
            f(&id, &p).map_err(|e| format!("{id}: {e}"))?;
        }
        Ok(())
    };

    match cli.command {
        Command::Dual { file } => per(&file, &mut |id, p| {
            emit_single(id, &dual_polytope(p)?);
            Ok(())
        })?,
        Command::Volume { file } => per(&file, &mut |id, p| {
            println!("{id}\t{}", volume(p));
            Ok(())
        })?,
        Command::Barycenter { file } => per(&file, &mut |id, p| {
            println!("{id}\t{}", barycenter(p));
            Ok(())
        })?,
        Command::LatticePoints { file, strict } => per(&file, &mut |id, p| {
            for m in lattice_points_of(p, strict) {
                println!("{id}\t{m}");
            }
            Ok(())
        })?,
        Command::RInvariant { file } => per(&file, &mut |id, p| {
            let r = r_invariant(p)?;
            match &r.boundary_point {
                Some(x) => println!(
                    "{id}\t{}\tbarycenter {}\tboundary {x}",
                    r.value, r.barycenter
                ),
                None => println!("{id}\t{}\tbarycenter {}", r.value, r.barycenter),
            }
            Ok(())
        })?,
        Command::Shrink { file } => per(&file, &mut |id, p| {
            emit_single(id, &shrink_to_barycenter(p)?);
            Ok(())
        })?,
        Command::NormalForm { file } => per(&file, &mut |id, p| {
            let nf = normal_form(p)?;
            let n = nf.vertices.len();
            let points: Vec<Point> = (0..nf.vertices[0].len())
                .map(|j| Point::new((0..n).map(|i| nf.vertices[i][j].clone().into()).collect()))
                .collect();
            print!("{}", emit_polytopes(&[PolytopeRecord::new(id, points)]));
            Ok(())
        })?,
        Command::Equiv { a, b } => {
            let pa = first_polytope(&a, t)?;
            let pb = first_polytope(&b, t)?;
            match are_equivalent(&pa, &pb).map_err(|e| e.to_string())? {
                Some(f) => println!("equivalent\t{f}"),
                None => println!("not equivalent"),
            }
        }
        Command::Check { check, file } => {
            let run_check: fn(&VPolytope) -> CheckReport = match check.as_str() {
                "ehrhart" => ehrhart_check,
                "milman-pajor" => milman_pajor_check,
                "minkowski" => minkowski_combined_check,
                "grunbaum" => grunbaum_facet_cuts,
                "root-symmetry" => root_symmetry_check,
                other => return Err(format!("unknown check `{other}`")),
            };
            for (id, p) in polytopes(&file, t)? {
                print_report(&id, &run_check(&p), &mut out);
            }
        }
        Command::Grunbaum { halfspace, file } => {
            let h = parse_halfspace(&halfspace).map_err(|e| e.to_string())?;
            for (id, p) in polytopes(&file, t)? {
                print_report(&id, &grunbaum_check(&p, &h), &mut out);
            }
        }
        Command::ProofTrace { q, k } => {
            let q = first_polytope(&q, t)?;
            let k = first_polytope(&k, t)?;
            for (i, trace) in proof_trace(&k, &q)
                .map_err(|e| e.to_string())?
                .iter()
                .enumerate()
            {
                print_report(&format!("v{i}"), &trace.to_check_report(), &mut out);
            }
        }
        Command::CertifyEquality { file } => per(&file, &mut |id, p| {
            match certify_equality(p)? {
                Some(f) => println!("{id}\tequality\t{f}"),
                None => println!("{id}\tno equality"),
            }
            Ok(())
        })?,
        Command::ToricReport { file } => {
            for (id, p) in polytopes(&file, t)? {
                let report = toric_report(&p).map_err(|e| format!("{id}: {e}"))?;
                print_report(&id, &report.to_check_report(), &mut out);
            }
        }
        Command::EnumFano {
            dim,
            bound,
            reflexive,
        } => {
            if dim != 2 {
                return Err(format!(
                    "enumeration is implemented for dimension 2, not {dim}"
                ));
            }
            if bound < 1 {
                return Err("bound must be positive".into());
            }
            let list = if reflexive {
                reflexive_polygons(bound)
            } else {
                enumerate_fano_2d(bound)
            };
            let records: Vec<PolytopeRecord> = list
                .iter()
                .enumerate()
                .map(|(i, p)| PolytopeRecord::from_polytope(format!("fano2d-{:02}", i + 1), p))
                .collect();
            print!("{}", emit_polytopes(&records));
        }
        Command::Scan {
            checks,
            file,
            summary_only,
        } => {
            let checks = CheckKind::parse_list(&checks).map_err(|e| e.to_string())?;
            let records = read_records(&file, t)?;
            let summary = scan(&records, &checks);
            if !summary_only {
                for (id, r) in &summary.reports {
                    println!("{}", emit_report(id, r));
                }
            }
            eprintln!("records: {}", summary.records);
            for (check, counts) in &summary.counts {
                let parts: Vec<String> = counts.iter().map(|(s, c)| format!("{s}={c}")).collect();
                eprintln!("{check}: {}", parts.join(" "));
            }
            for (label, slot) in [
                ("max volume", &summary.max_volume),
                ("max degree", &summary.max_degree),
                ("min R", &summary.min_r),
            ] {
                if let Some((id, v)) = slot {
                    eprintln!("{label}: {v} ({id})");
                }
            }
            for (id, check) in &summary.violations {
                eprintln!("violation: {id} {check}");
            }
            for e in &summary.errors {
                eprintln!("error: {} {}: {}", e.id, e.check, e.error);
            }
            match summary.exit_code() {
                0 => {}
                1 => out.violation = true,
                _ => return Err(format!("{} record errors", summary.errors.len())),
            }
        }
        Command::Random {
            dim,
            count,
            extra_points,
            radius,
        } => {
            let radius =
                rational::parse(&radius).ok_or_else(|| format!("bad radius `{radius}`"))?;
            let records: Vec<PolytopeRecord> =
                RandomPolytopes::new(seed_from_env(), (dim, dim), extra_points, radius)
                    .take(count)
                    .enumerate()
                    .map(|(i, p)| PolytopeRecord::from_polytope(format!("random-{}", i + 1), &p))
                    .collect();
            print!("{}", emit_polytopes(&records));
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome { violation: true }) => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
