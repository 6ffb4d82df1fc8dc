use std::collections::HashMap;
use std::fs;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use tiling_billiards::arnoux_yoccoz::{ay_conjugacy_report, conjugacy_deviation, solve_cubic_root};
use tiling_billiards::atlas::{increasing_loops, TauSequence};
use tiling_billiards::comoving::comoving_sample;
use tiling_billiards::cubic::AyCubic;
use tiling_billiards::export::TrajectoryExport;
use tiling_billiards::iet::{tiling_orbit, IetVerdict};
use tiling_billiards::rauzy::rauzy_gasket_expand;
use tiling_billiards::scalar::{parse_angle, Rational};
use tiling_billiards::trajectory::{trace, trace_symbolic};
use tiling_billiards::{ChordState, Scalar, TilingModel, TriangleAngles, TriangleCoord};
use tiling_billiards_render::{render_pet, render_plane, write_atlas, RenderOptions};
use tiling_billiards_service::ServiceConfig;

#[derive(Parser)]
#[command(name = "tbl", version, about = "Tiling billiards on triangle tilings")]
struct Cli {
    /// key=value file supplying defaults (exact, max_crossings, width_px,
    /// stroke_width, port, tau_c, tau_subdivisions, atlas_x)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AngleArgs {
    /// Radians or a rational multiple of pi such as "pi*2/7"
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
}

impl AngleArgs {
    fn parse<S: Scalar>(&self) -> Result<TriangleAngles<S>> {
        Ok(TriangleAngles::new(parse_angle(&self.alpha)?, parse_angle(&self.beta)?, parse_angle(&self.gamma)?)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Trace a trajectory from the origin tile and write it as JSON
    Trace {
        #[command(flatten)]
        angles: AngleArgs,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        max_crossings: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a trajectory JSON file as SVG
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long)]
        tree: bool,
    },
    /// Print the orbit of the edge-crossing map
    Iet {
        #[command(flatten)]
        angles: AngleArgs,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        x0: String,
        #[arg(long, default_value_t = 100)]
        steps: usize,
    },
    /// Draw the polygon exchange diagram
    Pet {
        #[command(flatten)]
        angles: AngleArgs,
        #[arg(long)]
        svg: PathBuf,
        /// Overlay comoving labels: GRID_N WORD_LEN
        #[arg(long, num_args = 2, value_names = ["GRID_N", "WORD_LEN"])]
        comoving: Option<Vec<usize>>,
    },
    /// Arnoux-Yoccoz checks
    Ay {
        #[arg(long)]
        check_conjugacy: bool,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Rauzy gasket expansion or the trajectory atlas of a gasket point
    Rauzy {
        /// x1,x2,x3 or "ay" for (a, a², a³)
        #[arg(long, default_value = "ay")]
        point: String,
        #[arg(long, conflicts_with = "atlas")]
        expand: Option<usize>,
        #[arg(long, requires = "outdir")]
        atlas: bool,
        /// Range k1..k2 of the τ sequence
        #[arg(long, default_value = "1..12")]
        taus: String,
        #[arg(long)]
        outdir: Option<PathBuf>,
    },
    /// Start the HTTP service
    Serve {
        #[arg(long)]
        port: Option<u16>,
    },
}

struct Config {
    values: HashMap<String, String>,
    exact: bool,
}

impl Config {
    fn load(path: Option<&Path>) -> Result<Self> {
        let mut values = HashMap::new();
        if let Some(path) = path {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            for (n, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let Some((k, v)) = line.split_once('=') else {
                    bail!("{}:{}: expected key=value", path.display(), n + 1);
                };
                values.insert(k.trim().to_string(), v.trim().trim_matches('"').to_string());
            }
        }
        let truthy = |v: &str| matches!(v, "1" | "true" | "yes");
        let exact = std::env::var("TBL_EXACT").map(|v| truthy(&v)).unwrap_or(false)
            || values.get("exact").is_some_and(|v| truthy(v));
        Ok(Self { values, exact })
    }

    fn get<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T> {
        match self.values.get(key) {
            Some(v) => v.parse().map_err(|_| anyhow::anyhow!("bad value {v:?} for {key}")),
            None => Ok(default),
        }
    }

    fn render_options(&self) -> Result<RenderOptions> {
        let d = RenderOptions::default();
        Ok(RenderOptions { width_px: self.get("width_px", d.width_px)?, stroke_width: self.get("stroke_width", d.stroke_width)?, ..d })
    }
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn parse_point(text: &str) -> Result<[f64; 3]> {
    if text == "ay" {
        let a = solve_cubic_root();
        return Ok([a, a * a, a * a * a]);
    }
    let parts: Vec<f64> = text.split(',').map(|p| p.trim().parse()).collect::<std::result::Result<_, _>>()?;
    let [a, b, c] = parts[..] else { bail!("expected three comma-separated coordinates") };
    Ok([a, b, c])
}

fn parse_range(text: &str) -> Result<(u32, u32)> {
    let (a, b) = text.split_once("..").context("expected k1..k2")?;
    let (a, b): (u32, u32) = (a.trim().parse()?, b.trim().parse()?);
    if b < a {
        bail!("empty τ range {text}");
    }
    Ok((a, b))
}

fn run_trace(cfg: &Config, angles: &AngleArgs, tau: &str, x: &str, max: Option<usize>, out: Option<&Path>) -> Result<()> {
    let max = max.unwrap_or(cfg.get("max_crossings", 10_000)?);
    if cfg.exact {
        let exact: TriangleAngles<Rational> = angles.parse()?;
        let symbolic = trace_symbolic(&exact, ChordState::new(parse_angle(x)?, parse_angle(tau)?), max)?;
        eprintln!("exact verdict: {:?}", symbolic.verdict);
    }
    let tiling = TilingModel::new(angles.parse::<f64>()?);
    let t = trace(&tiling, TriangleCoord::ORIGIN, ChordState::new(parse_angle(x)?, parse_angle(tau)?), max)?;
    eprintln!("verdict: {:?}", t.verdict);
    write_or_print(out, &TrajectoryExport::new(&tiling, &t, max)?.to_json())
}

fn run_iet(cfg: &Config, angles: &AngleArgs, tau: &str, x0: &str, steps: usize) -> Result<()> {
    fn print<S: Scalar>(angles: &AngleArgs, tau: &str, x0: &str, steps: usize) -> Result<()> {
        let a: TriangleAngles<S> = angles.parse()?;
        let orbit = tiling_orbit(&a, ChordState::new(parse_angle(x0)?, parse_angle(tau)?), steps)?;
        for (k, x) in orbit.states.iter().enumerate() {
            let side = orbit.sides.get(k).map_or(String::new(), |s| s.letter().to_string());
            println!("{k}\t{x}\t{side}");
        }
        match orbit.verdict {
            IetVerdict::PeriodicIet { period } => println!("verdict: periodic, period {period}"),
            IetVerdict::Aperiodic { cutoff } => println!("verdict: no return within {cutoff} steps"),
            IetVerdict::VertexHit { step } => println!("verdict: vertex hit at step {step}"),
        }
        Ok(())
    }
    if cfg.exact {
        print::<Rational>(angles, tau, x0, steps)
    } else {
        print::<f64>(angles, tau, x0, steps)
    }
}

fn run_pet(cfg: &Config, angles: &AngleArgs, svg: &Path, comoving: Option<&[usize]>) -> Result<()> {
    let real: TriangleAngles<f64> = angles.parse()?;
    let grid = match comoving {
        Some(&[n, len]) => {
            let grid =
                if cfg.exact { comoving_sample(&angles.parse::<Rational>()?, n, len)? } else { comoving_sample(&real, n, len)? };
            for (word, count) in &grid.classes {
                eprintln!("{word}\t{count}");
            }
            eprintln!("{} labels", grid.label_count());
            Some(grid)
        }
        _ => None,
    };
    fs::write(svg, render_pet(&real, &cfg.render_options()?, grid.as_ref())?)?;
    Ok(())
}

fn run_rauzy(cfg: &Config, point: &str, expand: Option<usize>, atlas: bool, taus: &str, outdir: Option<&Path>) -> Result<()> {
    if atlas {
        let (k1, k2) = parse_range(taus)?;
        let seq = TauSequence {
            c: cfg.get("tau_c", 1.0)?,
            subdivisions: cfg.get("tau_subdivisions", 1)?,
            first: k1,
            count: k2 - k1 + 1,
        };
        let dir = outdir.context("--atlas needs --outdir")?;
        let report = write_atlas(
            parse_point(point)?,
            cfg.get("atlas_x", 4.85)?,
            &seq.values(),
            cfg.get("max_crossings", 100_000)?,
            dir,
            &cfg.render_options()?,
        )?;
        print!("{}", report.stats);
        let periods: Vec<String> = increasing_loops(&report.items).iter().filter_map(|i| i.period()).map(|p| p.to_string()).collect();
        println!("increasing loops: {}", periods.join(", "));
        return Ok(());
    }
    let iters = expand.unwrap_or(20);
    if cfg.exact && point == "ay" {
        let a = AyCubic::a();
        let start = [a, a * a, a * a * a];
        let e = rauzy_gasket_expand(start, iters)?;
        let digits: Vec<String> = e.digits.iter().map(usize::to_string).collect();
        println!("digits: {}", digits.join(""));
        println!("verdict: {:?}", e.verdict);
        let fixed = e.points.iter().all(|p| {
            let mut s = *p;
            s.sort_by(|u, v| v.partial_cmp(u).unwrap());
            s == start
        });
        println!("fixed point: {fixed}");
        return Ok(());
    }
    let e = rauzy_gasket_expand(parse_point(point)?, iters)?;
    println!("{}", serde_json::to_string_pretty(&e)?);
    Ok(())
}

#[tokio::main]
async fn main() -> Result<()> {
    tracing_subscriber::fmt().with_writer(std::io::stderr).init();
    let cli = Cli::parse();
    let cfg = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Trace { angles, tau, x, max_crossings, out } => run_trace(&cfg, &angles, &tau, &x, max_crossings, out.as_deref()),
        Command::Render { input, svg, tree } => {
            let text = fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let (tiling, t) = TrajectoryExport::from_json(&text)?.retrace()?;
            let options = RenderOptions { show_tree: tree, ..cfg.render_options()? };
            fs::write(&svg, render_plane(&t, &tiling, &options)?)?;
            Ok(())
        }
        Command::Iet { angles, tau, x0, steps } => run_iet(&cfg, &angles, &tau, &x0, steps),
        Command::Pet { angles, svg, comoving } => run_pet(&cfg, &angles, &svg, comoving.as_deref()),
        Command::Ay { check_conjugacy, samples } => {
            if !check_conjugacy {
                bail!("nothing to do; pass --check-conjugacy");
            }
            let report = ay_conjugacy_report(samples);
            let control = conjugacy_deviation(&TriangleAngles::equilateral(), samples);
            println!("{}", serde_json::to_string_pretty(&serde_json::json!({ "arnouxYoccoz": report, "equilateralControl": control }))?);
            Ok(())
        }
        Command::Rauzy { point, expand, atlas, taus, outdir } => run_rauzy(&cfg, &point, expand, atlas, &taus, outdir.as_deref()),
        Command::Serve { port } => {
            let port = port.unwrap_or(cfg.get("port", 8080)?);
            let config = ServiceConfig { max_crossings_cap: cfg.get("max_crossings_cap", 200_000)?, ..ServiceConfig::default() };
            tiling_billiards_service::serve(SocketAddr::from(([0, 0, 0, 0], port)), config).await?;
            Ok(())
        }
    }
}
