use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use xiao_ledger::lattice;
use xiao_ledger::ledger::{self, VerifyOptions};
use xiao_ledger::monodromy::{self, BranchedCover, DEFAULT_MAX_GROUP_ORDER};
use xiao_ledger::numerology::{self, CoverParams};
use xiao_ledger::quartic;

#[derive(Parser)]
#[command(version, about = "Exact claim ledger for dihedral-cover Xiao fibrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every claim and print the report.
    Verify {
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        /// Restrict to one case: g2p5, g4p3, g3p3 or general.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_GROUP_ORDER)]
        max_group_order: usize,
    },
    /// Genera, self-intersection, fibre class and Xiao data for (g, p).
    Numerology {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        degree: u64,
    },
    /// Genera and monodromy group of a branched cover of the line.
    Monodromy {
        #[command(flatten)]
        source: CoverSource,
        #[arg(long, default_value_t = DEFAULT_MAX_GROUP_ORDER)]
        max_group_order: usize,
    },
    /// Dump an intersection lattice with its named classes as JSON.
    Lattice {
        #[arg(long, value_enum)]
        case: LatticeCase,
    },
    /// Certificates for a plane curve.
    Quartic {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum)]
        check: QuarticCheck,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CoverSource {
    /// Dihedral cover with parameters G P.
    #[arg(long, num_args = 2, value_names = ["G", "P"])]
    dihedral: Option<Vec<u64>>,
    /// Cover description file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeCase {
    G3Product,
    G3Sym2,
    G2Product,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuarticCheck {
    Smooth,
    Flexes,
}

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Verify { format, only, seed, max_group_order } => {
            let options = VerifyOptions { only, seed, max_group_order, corrupt_gram: false };
            let report = ledger::verify_paper(&options)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Markdown => print!("{}", report.to_markdown()),
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Numerology { genus, degree } => numerology_cmd(genus, degree),
        Command::Monodromy { source, max_group_order } => monodromy_cmd(source, max_group_order),
        Command::Lattice { case } => lattice_cmd(case),
        Command::Quartic { poly, check, seed } => quartic_cmd(&poly, check, seed),
    }
}

fn numerology_cmd(g: u64, p: u64) -> CliResult {
    let params = CoverParams::new(g, p)?;
    let (g_c, g_d) = numerology::cover_genera(params);
    println!("g_C = {g_c}");
    println!("g_D = {g_d}");
    println!("gamma^2 = {}", numerology::gamma_self_intersection(params));
    match numerology::psi_fiber_class(params) {
        numerology::FiberClass::Finite => println!("fiber: finite"),
        numerology::FiberClass::PositiveDimensional(Some(d)) => println!("fiber dim {d}"),
        numerology::FiberClass::PositiveDimensional(None) => println!("fiber: positive-dimensional"),
    }
    let (dim_h, dim_m) = numerology::moduli_dims(params);
    println!("dim H = {dim_h}, dim M = {dim_m}");
    let xiao = numerology::xiao_report(g_c, 2 * g_d)?;
    println!(
        "Xiao bound {} (q_rel = {}: is_xiao {}, meets_ceiling {})",
        xiao_ledger::render_rational(&xiao.bound),
        2 * g_d,
        xiao.is_xiao,
        xiao.meets_ceiling
    );
    Ok(ExitCode::SUCCESS)
}

fn monodromy_cmd(source: CoverSource, max: usize) -> CliResult {
    let cover: BranchedCover = match (&source.dihedral, &source.file) {
        (Some(gp), _) => monodromy::build_dihedral_cover(gp[0], gp[1])?,
        (None, Some(path)) => monodromy::parse_cover(&std::fs::read_to_string(path)?)?,
        (None, None) => unreachable!("clap enforces one source"),
    };
    println!(
        "degree {}, base genus {}, {} branch points",
        cover.degree(),
        cover.base_genus(),
        cover.monodromy().len()
    );
    println!("genus = {}", cover.rh_genus()?);
    let group = cover.generated_group(max)?;
    println!("group: {:?} of order {}", group.classification(), group.order());
    println!("Galois closure genus = {}", cover.galois_closure_genus(max)?);
    if let Some(rotations) = group.rotation_subgroup() {
        println!("rotation quotient genus = {}", cover.quotient_genus(&rotations, max)?);
    }
    for (i, profile) in cover.ramification_profile().iter().enumerate() {
        let shown: Vec<String> = profile.iter().map(usize::to_string).collect();
        println!("branch {}: [{}]", i + 1, shown.join(", "));
    }
    Ok(ExitCode::SUCCESS)
}

fn lattice_cmd(case: LatticeCase) -> CliResult {
    let dump = match case {
        LatticeCase::G3Product => {
            let dxd = lattice::product_with_diagonal_lattice(3)?;
            let data = lattice::branch_class(3)?;
            dxd.dump(&[("X_P", &data.x_p), ("H", &data.h), ("B", &data.b), ("L", &data.l)])
        }
        LatticeCase::G3Sym2 => {
            let sym2 = lattice::symmetric_square_lattice(3)?;
            let data = lattice::branch_class(3)?;
            sym2.dump(&[
                ("tau_D_P", &data.tau_d_p),
                ("tau_delta", &data.tau_delta),
                ("tau_diagonal", &data.tau_diagonal),
            ])
        }
        LatticeCase::G2Product => {
            let dxd = lattice::product_with_diagonal_lattice(2)?;
            let c = dxd.class_from_intersections(&[2, 2, 8])?;
            dxd.dump(&[("C_P", &c)])
        }
    };
    println!("{}", serde_json::to_string_pretty(&dump)?);
    Ok(ExitCode::SUCCESS)
}

fn quartic_cmd(poly: &str, check: QuarticCheck, seed: u64) -> CliResult {
    let f = quartic::parse_form(poly)?;
    println!("curve: {f}");
    match check {
        QuarticCheck::Smooth => println!("smooth: {}", quartic::is_smooth(&f)),
        QuarticCheck::Flexes => {
            let cert = quartic::flexes_all_simple(&f, seed)?;
            println!("all_simple: {}", cert.all_simple);
            println!("flex_degree: {}", cert.flex_degree);
            println!("distinct_flex_points: {}", cert.distinct_flex_points);
            println!("projections tried: {}", cert.attempts);
        }
    }
    Ok(ExitCode::SUCCESS)
}
