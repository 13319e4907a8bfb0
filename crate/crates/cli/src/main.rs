use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use frieze::image::{read_pgm, transform_image, write_pgm, Transform};
use frieze::table::{print_table, verify_table, DEFAULT_SEED};
use frieze::{
    classify_image, compose, from_generators, generate, parse_motif, rasterize, render_svg, wrap_report,
    wrap_texture, FriezeGroup, Motif, Scalar, StripIsometry, Tolerance, TypeTag,
};

#[derive(Parser)]
#[command(name = "frieze", version, about = "Frieze groups: composition, classification, synthesis and detection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print A ∘ B (B applied first), e.g. `compose "R(3)" "V(1)"`.
    Compose { a: StripIsometry, b: StripIsometry },
    /// Close a set of generators and print the resulting frieze group.
    ClassifyGens {
        #[arg(required = true)]
        generators: Vec<StripIsometry>,
    },
    /// Stamp a motif with a standard group and write SVG and/or PGM output.
    Generate {
        /// Motif file, or `builtin` for the asymmetric flag.
        #[arg(long, default_value = "builtin")]
        motif: String,
        /// Type tag: alias (p2mg), notation (<T,R,V,S'>) or name (TRVSg).
        #[arg(long)]
        tag: TypeTag,
        /// Period; defaults to the motif cell width (2 for the builtin motif).
        #[arg(long)]
        period: Option<Scalar>,
        /// Half-turn or mirror anchor of the standard group.
        #[arg(long, default_value = "0")]
        anchor: Scalar,
        /// Number of periods.
        #[arg(long, default_value_t = 4)]
        copies: u32,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        pgm: Option<PathBuf>,
        /// Pixels per model unit.
        #[arg(long, default_value_t = 32)]
        px: u32,
        #[arg(long, default_value_t = 1)]
        supersample: u32,
    },
    /// Detect the frieze type of a binary PGM strip.
    Detect {
        image: PathBuf,
        #[arg(long, default_value_t = 0.02)]
        eta: f64,
        #[arg(long, default_value_t = 10)]
        delta: u8,
    },
    /// Resample an image: scale_uniform, scale_x, scale_y or shear_x.
    Transform {
        image: PathBuf,
        #[arg(long)]
        op: String,
        #[arg(long)]
        k: Scalar,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Report the cylinder symmetries of n periods of a frieze type.
    Wrap {
        #[arg(long)]
        tag: TypeTag,
        #[arg(long)]
        n: u32,
        /// One-period texture to replicate around the cylinder.
        #[arg(long, requires = "output")]
        texture: Option<PathBuf>,
        #[arg(short, long, requires = "texture")]
        output: Option<PathBuf>,
    },
    /// Check every multiplication-table cell against the canonical-form oracle.
    VerifyTable {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the full and compact multiplication tables.
    PrintTable,
}

type Failure = Box<dyn std::error::Error>;

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_motif(source: &str, period: Option<Scalar>) -> Result<Motif, Failure> {
    if source == "builtin" {
        let cell = period.unwrap_or(Scalar::integer(2));
        return Ok(Motif::asymmetric_flag(cell, Scalar::ONE));
    }
    let m = parse_motif(&read(Path::new(source))?)?;
    Ok(m)
}

/// Runs one command, returning the text for stdout and whether it succeeded.
fn run(cmd: Command) -> Result<(String, bool), Failure> {
    let out = match cmd {
        Command::Compose { a, b } => compose(&a, &b).to_string(),
        Command::ClassifyGens { generators } => {
            let g = from_generators(&generators)?;
            format!("{g} {}", g.tag().notation())
        }
        Command::Generate {
            motif,
            tag,
            period,
            anchor,
            copies,
            svg,
            pgm,
            px,
            supersample,
        } => {
            let m = load_motif(&motif, period)?;
            let g = FriezeGroup::standard(tag, period.unwrap_or(m.cell_width), anchor)?;
            let scene = generate(&m, &g, copies)?;
            let mut lines = vec![format!("{g} copies={copies} placements={}", scene.placed.len())];
            if let Some(path) = svg {
                write(&path, render_svg(&scene).as_bytes())?;
                lines.push(format!("wrote {}", path.display()));
            }
            if let Some(path) = pgm {
                let mut img = rasterize(&scene, px, supersample)?;
                img.comments.push(format!("{g}"));
                write(&path, &write_pgm(&img))?;
                lines.push(format!("wrote {} ({}x{})", path.display(), img.width(), img.height()));
            }
            lines.join("\n")
        }
        Command::Detect { image, eta, delta } => {
            let img = read_pgm(&read(&image)?)?;
            classify_image(&img, Tolerance::new(eta, delta))?.to_string()
        }
        Command::Transform { image, op, k, output } => {
            let img = read_pgm(&read(&image)?)?;
            let out = transform_image(&img, Transform::parse(&op, k)?)?;
            write(&output, &write_pgm(&out))?;
            format!("wrote {} ({}x{})", output.display(), out.width(), out.height())
        }
        Command::Wrap { tag, n, texture, output } => {
            if n == 0 {
                return Err("n must be at least 1".into());
            }
            let mut text = wrap_report(tag, n).to_string();
            if let (Some(tex), Some(path)) = (texture, output) {
                let img = read_pgm(&read(&tex)?)?;
                let ring = wrap_texture(&img, n);
                write(&path, &write_pgm(&ring))?;
                text.push_str(&format!("\nwrote {} ({}x{})", path.display(), ring.width(), ring.height()));
            }
            text
        }
        Command::VerifyTable { seed } => {
            let report = verify_table(seed);
            let ok = report.all_passed();
            return Ok((report.to_string().trim_end().to_string(), ok));
        }
        Command::PrintTable => print_table().trim_end().to_string(),
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
