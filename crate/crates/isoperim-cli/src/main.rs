//! Command-line frontend for the isoperim library.

mod export;
mod render;
mod setfile;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use isoperim::boxes::LatticeBox;
use isoperim::classify::{excess_of_set, is_dead, is_efficient, is_minimal, is_uniquely_minimal};
use isoperim::graphmin::{build_graph, classify_component_of_box, enumerate_minimal_classes};
use isoperim::oracle::{survey, verify_characterization};
use isoperim::wangwang::ww;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "isoperim",
    version,
    about = "Vertex-isoperimetric minimal sets in the planar integer lattice",
    after_help = "Set ISOPERIM_THREADS to size the worker pool (default 1, 0 = all cores)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the greedy minimal set of the given size
    Ww {
        n: usize,
        /// Emit the set file JSON instead of a vertex list
        #[arg(long)]
        json: bool,
    },
    /// Decide whether the set in a JSON file is minimal
    Check { file: PathBuf },
    /// Report the closed-form quantities of a box
    Box {
        /// "B:a,b" (corner form), "Bhat:a,b" (cornerless form), or raw
        /// bounds "a,b,c,d" in rotated coordinates
        shape: String,
    },
    /// Enumerate the minimal congruence classes of one size
    Enum {
        n: usize,
        /// Print only how many classes there are
        #[arg(long, conflicts_with = "json")]
        count_only: bool,
        /// Emit JSON instead of one line per class
        #[arg(long)]
        json: bool,
    },
    /// Export the minimal-class graph up to a grading
    Graph {
        n_max: usize,
        /// Emit Graphviz DOT instead of JSON
        #[arg(long)]
        dot: bool,
        /// Write to a file instead of standard output
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Summarize the graph component of a dead box analytically
    Component {
        /// Box shape, as for the box subcommand
        shape: String,
    },
    /// Survey brute-force ground truth on small sizes
    Oracle {
        n: usize,
        /// Check the characterization against every candidate of size n;
        /// exits with status 2 on any disagreement
        #[arg(long)]
        verify: bool,
    },
    /// Draw a set from a JSON file
    Render {
        file: PathBuf,
        /// Emit SVG instead of text
        #[arg(long)]
        svg: bool,
        /// Also draw the enclosing-box cells missing from the set
        #[arg(long)]
        show_enc: bool,
        /// Write to a file instead of standard output
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn parse_box_shape(shape: &str) -> Result<LatticeBox> {
    fn parse_pair(text: &str) -> Result<(i64, i64)> {
        let fields: Vec<&str> = text.split(',').collect();
        if fields.len() != 2 {
            bail!("expected two comma-separated integers, got {text:?}");
        }
        Ok((fields[0].trim().parse()?, fields[1].trim().parse()?))
    }

    if let Some(rest) = shape.strip_prefix("Bhat:") {
        let (alpha, beta) = parse_pair(rest)?;
        return Ok(LatticeBox::cornerless_form(alpha, beta)?);
    }
    if let Some(rest) = shape.strip_prefix("B:") {
        let (alpha, beta) = parse_pair(rest)?;
        return Ok(LatticeBox::corner_form(alpha, beta)?);
    }
    let fields: Vec<&str> = shape.split(',').collect();
    if fields.len() != 4 {
        bail!(
            "box shape must be \"B:a,b\", \"Bhat:a,b\", or four bounds \"a,b,c,d\", got {shape:?}"
        );
    }
    let mut bounds = [0i64; 4];
    for (slot, field) in bounds.iter_mut().zip(&fields) {
        *slot = field
            .trim()
            .parse()
            .with_context(|| format!("bad bound {field:?}"))?;
    }
    Ok(LatticeBox::new(bounds[0], bounds[1], bounds[2], bounds[3])?)
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Ww { n, json } => {
            let set = ww(n)?;
            if json {
                println!("{}", setfile::SetFile::from_set(&set).to_json());
            } else {
                for v in set.iter() {
                    println!("{},{}", v.x, v.y);
                }
            }
        }
        Command::Check { file } => {
            let set = setfile::load(&file)?;
            if is_minimal(&set)? {
                println!("minimal");
            } else {
                println!("not minimal (E = {})", excess_of_set(&set)?);
            }
        }
        Command::Box { shape } => {
            let b = parse_box_shape(&shape)?;
            let cells = b.vertices();
            println!("bounds: {b}");
            println!("standard form: {}", b.standard_form());
            println!("size: {}", b.size());
            println!("boundary: {}", b.boundary_size());
            println!("excess: {}", b.excess());
            let minimal = b.excess() >= 0;
            println!("minimal: {minimal}");
            if minimal {
                println!("efficient: {}", is_efficient(&cells)?);
                println!("dead: {}", is_dead(&cells)?);
                println!("uniquely minimal: {}", is_uniquely_minimal(&cells)?);
            }
        }
        Command::Enum { n, count_only, json } => {
            let classes = enumerate_minimal_classes(n)?;
            if count_only {
                println!("{}", classes.len());
            } else if json {
                println!("{}", enum_json(n, &classes));
            } else {
                for class in &classes {
                    println!("{}", class_line(class));
                }
            }
        }
        Command::Graph { n_max, dot, output } => {
            let graph = build_graph(n_max)?;
            let text = if dot {
                export::graph_dot(&graph)
            } else {
                format!("{}\n", export::graph_json(&graph))
            };
            emit(output.as_ref(), &text)?;
        }
        Command::Component { shape } => {
            let b = parse_box_shape(&shape)?;
            let summary = classify_component_of_box(&b)?;
            if summary.isolated {
                println!(
                    "isolated; grading {}; height {}",
                    summary.grading_min, summary.height
                );
            } else {
                println!(
                    "gradings {}-{}; height {}",
                    summary.grading_min, summary.grading_max, summary.height
                );
            }
        }
        Command::Oracle { n, verify } => {
            if verify {
                return oracle_verify(n);
            }
            for report in survey(n)? {
                let mut line = format!(
                    "size {}: min boundary {}, classes {}",
                    report.size, report.min_boundary, report.minimal_class_count
                );
                if let Some(split) = report.best_split_boundary {
                    line.push_str(&format!(", split bound {split}"));
                }
                println!("{line}");
            }
        }
        Command::Render {
            file,
            svg,
            show_enc,
            output,
        } => {
            let set = setfile::load(&file)?;
            let text = if svg {
                render::svg(&set, show_enc)?
            } else {
                render::ascii(&set, show_enc)?
            };
            emit(output.as_ref(), &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn class_line(class: &isoperim::graphmin::MinClass) -> String {
    let verts = class
        .canonical
        .iter()
        .map(|v| format!("{},{}", v.x, v.y))
        .collect::<Vec<_>>()
        .join(";");
    let mut line = verts;
    let flags = class.flags;
    for (on, name) in [
        (flags.efficient, "efficient"),
        (flags.uniquely_minimal, "uniquely-minimal"),
        (flags.dead, "dead"),
        (flags.mortal, "mortal"),
        (!flags.connected, "disconnected"),
    ] {
        if on {
            line.push(' ');
            line.push_str(name);
        }
    }
    line
}

fn enum_json(n: usize, classes: &[isoperim::graphmin::MinClass]) -> String {
    use serde::Serialize;

    #[derive(Serialize)]
    struct ClassExport {
        vertices: Vec<(i64, i64)>,
        dead: bool,
        mortal: bool,
        efficient: bool,
        uniquely_minimal: bool,
        connected: bool,
    }

    #[derive(Serialize)]
    struct EnumExport {
        n: usize,
        classes: Vec<ClassExport>,
    }

    let export = EnumExport {
        n,
        classes: classes
            .iter()
            .map(|c| ClassExport {
                vertices: c.canonical.iter().map(|v| (v.x, v.y)).collect(),
                dead: c.flags.dead,
                mortal: c.flags.mortal,
                efficient: c.flags.efficient,
                uniquely_minimal: c.flags.uniquely_minimal,
                connected: c.flags.connected,
            })
            .collect(),
    };
    serde_json::to_string(&export).expect("enumerations always serialize")
}

fn oracle_verify(n: usize) -> Result<ExitCode> {
    let report = verify_characterization(n)?;
    if report.is_clean() {
        println!(
            "size {}: {} candidates, min boundary {}, all routes agree, classes match",
            report.size, report.candidates, report.min_boundary
        );
        return Ok(ExitCode::SUCCESS);
    }
    for d in &report.discrepancies {
        eprintln!(
            "disagreement on {:?}: ground {}, enclosure {}, cones {}, excess {}",
            d.set, d.ground_truth, d.enclosure_route, d.cone_route, d.excess_route
        );
    }
    if !report.classes_match {
        eprintln!("size {}: brute-force class list differs from enumeration", n);
    }
    Ok(ExitCode::from(2))
}

fn configure_threads() -> Result<()> {
    let threads = match std::env::var("ISOPERIM_THREADS") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| anyhow!("ISOPERIM_THREADS must be a thread count, got {text:?}"))?,
        Err(_) => 1,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("initializing the worker pool")?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes, not usage errors.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Err(err) = configure_threads() {
        eprintln!("error: {err:#}");
        return ExitCode::from(1);
    }
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
