//! Command-line front end: signal generation, axis validation, transforms
//! over CSV files, engine benchmarking, and a null-spectrum search.
//!
//! Exit codes: 0 success (or validation PASS), 1 usage or parse error,
//! 2 invalid axis, 3 degenerate-axis misuse. Data goes to standard output;
//! diagnostics go to standard error.

mod signal_file;

use std::fs::File;
use std::io::{self, BufReader, Read};
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cqft::random::{random_real_signal, random_signal};
use cqft::{
    cqdft, cqdft2, cqfft, cqfft2, exp_axis, max_relative_error, sample_diagnostics, Axis, CQuat,
    Cplx, Direction, Error, SampleDiagnostics, Side, Signal1d, Signal2d, TransformSpec,
    DEFAULT_TOL,
};

use signal_file::{read_signal, write_signal};

#[derive(Parser)]
#[command(
    name = "cqft",
    version,
    about = "Discrete Fourier transforms of complexified-quaternion signals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a pure complexified quaternion is a usable transform axis
    ValidateAxis {
        /// Vector part as 6 reals: x_re,x_im,y_re,y_im,z_re,z_im
        #[arg(allow_hyphen_values = true)]
        axis: String,
        /// Validation tolerance
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Write a test signal to standard output
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Number of samples
        n: usize,
        /// RNG seed; required for random
        #[arg(long)]
        seed: Option<u64>,
        /// Axis for expwave as 6 reals (default: the unit i direction)
        #[arg(long, allow_hyphen_values = true)]
        axis: Option<String>,
        /// Frequency in bins for expwave
        #[arg(long, default_value_t = 1)]
        freq: usize,
    },
    /// Transform a signal file (use - for standard input)
    Transform {
        input: String,
        /// Axis as 6 reals x_re,x_im,y_re,y_im,z_re,z_im, or the literal I
        #[arg(long, allow_hyphen_values = true)]
        axis: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
        direction: DirectionArg,
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
        /// Axis-validation and diagnostic tolerance
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Treat the input as a 2-D grid, e.g. --dims 8x8 (overrides the file header)
        #[arg(long)]
        dims: Option<String>,
    },
    /// Compare wall time of the direct and fast engines
    Bench {
        /// Comma-separated signal lengths
        #[arg(long, default_value = "256,1024,4096")]
        sizes: String,
        /// Timed repetitions per engine and size (median is reported)
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Emit machine-readable CSV instead of a table
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Axis as 6 reals (default: i + j + k + (j - k)I)
        #[arg(long, allow_hyphen_values = true)]
        axis: Option<String>,
    },
    /// Transform random real-quaternion signals and hunt for null spectrum samples
    ExploreNull {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Signal length per trial
        #[arg(long, default_value_t = 64)]
        n: usize,
        /// Base seed; trial t uses seed + t
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Axis as 6 reals (default: i + j + k + (j - k)I)
        #[arg(long, allow_hyphen_values = true)]
        axis: Option<String>,
        /// Null-detection tolerance
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum DirectionArg {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum EngineArg {
    Fast,
    Direct,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum GenKind {
    Delta,
    Constant,
    Random,
    Expwave,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Direction {
        match d {
            DirectionArg::Forward => Direction::Forward,
            DirectionArg::Inverse => Direction::Inverse,
        }
    }
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::InvalidAxis | Error::DegenerateBasis => 2,
            Error::DegenerateAxisMisuse => 3,
            _ => 1,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(msg: String) -> Failure {
        Failure::usage(msg)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            std::process::exit(f.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::ValidateAxis { axis, tol } => cmd_validate_axis(&axis, tol),
        Command::Gen {
            kind,
            n,
            seed,
            axis,
            freq,
        } => cmd_gen(kind, n, seed, axis.as_deref(), freq),
        Command::Transform {
            input,
            axis,
            side,
            direction,
            engine,
            tol,
            dims,
        } => cmd_transform(&input, &axis, side, direction, engine, tol, dims.as_deref()),
        Command::Bench {
            sizes,
            reps,
            csv,
            seed,
            axis,
        } => cmd_bench(&sizes, reps, csv, seed, axis.as_deref()),
        Command::ExploreNull {
            trials,
            n,
            seed,
            axis,
            tol,
        } => cmd_explore_null(trials, n, seed, axis.as_deref(), tol),
    }
}

/// i + j + k + (j - k)I: a complex axis with unit seminorm, used when no
/// axis flag is given.
fn default_axis() -> CQuat {
    CQuat::new(
        Cplx::new(0.0, 0.0),
        Cplx::new(1.0, 0.0),
        Cplx::new(1.0, 1.0),
        Cplx::new(1.0, -1.0),
    )
}

fn parse_pure_axis(s: &str) -> Result<CQuat, Failure> {
    let fields: Vec<&str> = s.split(',').map(str::trim).collect();
    if fields.len() != 6 {
        return Err(Failure::usage(format!(
            "axis must be 6 comma-separated reals, found {} fields",
            fields.len()
        )));
    }
    let mut v = [0.0f64; 6];
    for (k, field) in fields.iter().enumerate() {
        v[k] = field
            .parse()
            .map_err(|_| Failure::usage(format!("unparseable axis component {field:?}")))?;
        if !v[k].is_finite() {
            return Err(Failure::usage(format!(
                "non-finite axis component {field:?}"
            )));
        }
    }
    Ok(CQuat::new(
        Cplx::new(0.0, 0.0),
        Cplx::new(v[0], v[1]),
        Cplx::new(v[2], v[3]),
        Cplx::new(v[4], v[5]),
    ))
}

fn parse_axis(s: &str) -> Result<Axis, Failure> {
    if s.trim() == "I" {
        return Ok(Axis::DegenerateI);
    }
    parse_pure_axis(s).map(Axis::Root)
}

fn format_cplx(c: Cplx) -> String {
    format!("{:.16e} + {:.16e} I", c.re, c.im)
}

fn cmd_validate_axis(axis: &str, tol: f64) -> Result<i32, Failure> {
    let q = parse_pure_axis(axis)?;
    let re = q.re_part();
    let im = q.im_part();
    let pass = q.is_root_of_minus_one(tol);
    println!("seminorm: {}", format_cplx(q.seminorm()));
    println!("inner(re, im): {:.16e}", re.dot(im));
    println!(
        "normsq(re) - normsq(im): {:.16e}",
        re.norm_sqr() - im.norm_sqr()
    );
    println!("{}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { 0 } else { 2 })
}

fn cmd_gen(
    kind: GenKind,
    n: usize,
    seed: Option<u64>,
    axis: Option<&str>,
    freq: usize,
) -> Result<i32, Failure> {
    if n == 0 {
        return Err(Failure::usage("n must be at least 1"));
    }
    let samples: Vec<CQuat> = match kind {
        GenKind::Delta => {
            let mut v = vec![CQuat::ZERO; n];
            v[0] = CQuat::ONE;
            v
        }
        GenKind::Constant => vec![CQuat::ONE; n],
        GenKind::Random => {
            let seed = seed.ok_or_else(|| Failure::usage("--seed is required for random"))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_signal(&mut rng, n)
        }
        GenKind::Expwave => {
            let mu = match axis {
                Some(s) => parse_pure_axis(s)?,
                None => CQuat::I,
            };
            (0..n)
                .map(|i| {
                    let m = (freq as u128 * i as u128 % n as u128) as f64;
                    exp_axis(mu, std::f64::consts::TAU * m / n as f64).map_err(Failure::from)
                })
                .collect::<Result<_, _>>()?
        }
    };
    let stdout = io::stdout();
    write_signal(&mut stdout.lock(), &samples, None)?;
    Ok(0)
}

fn parse_dims(s: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = s.split('x').collect();
    if parts.len() != 2 {
        return Err(Failure::usage("dims must be ROWSxCOLS, e.g. 8x8"));
    }
    let r = parts[0]
        .parse()
        .map_err(|_| Failure::usage("bad row count in dims"))?;
    let c = parts[1]
        .parse()
        .map_err(|_| Failure::usage("bad column count in dims"))?;
    Ok((r, c))
}

fn describe(diag: &SampleDiagnostics, label: &str, tol: f64) -> String {
    let mut line = format!(
        "{label}: {} samples, {} zero, {} null (tol {tol:.1e})",
        diag.total, diag.zero_count, diag.null_count
    );
    if let Some((idx, ratio)) = diag.min_ratio {
        line.push_str(&format!("; min seminorm ratio {ratio:.3e} at index {idx}"));
    }
    line
}

fn cmd_transform(
    input: &str,
    axis: &str,
    side: SideArg,
    direction: DirectionArg,
    engine: EngineArg,
    tol: f64,
    dims: Option<&str>,
) -> Result<i32, Failure> {
    let parsed = if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        read_signal(text.as_bytes())?
    } else {
        read_signal(BufReader::new(
            File::open(input).map_err(|e| Failure::usage(format!("cannot open {input}: {e}")))?,
        ))?
    };
    let spec = TransformSpec {
        axis: parse_axis(axis)?,
        side: side.into(),
        direction: direction.into(),
        tol,
    };
    let dims = match dims {
        Some(s) => Some(parse_dims(s)?),
        None => parsed.dims,
    };
    eprintln!(
        "{}",
        describe(&sample_diagnostics(&parsed.samples, tol), "input", tol)
    );
    let (out_samples, out_dims) = match dims {
        None => {
            let f = Signal1d::new(parsed.samples)?;
            let out = match engine {
                EngineArg::Fast => cqfft(&f, &spec)?,
                EngineArg::Direct => cqdft(&f, &spec)?,
            };
            (out.into_samples(), None)
        }
        Some((r, c)) => {
            let f = Signal2d::new(r, c, parsed.samples)?;
            let out = match engine {
                EngineArg::Fast => cqfft2(&f, &spec)?,
                EngineArg::Direct => cqdft2(&f, &spec)?,
            };
            (out.into_samples(), Some((r, c)))
        }
    };
    eprintln!(
        "{}",
        describe(&sample_diagnostics(&out_samples, tol), "output", tol)
    );
    let stdout = io::stdout();
    write_signal(&mut stdout.lock(), &out_samples, out_dims)?;
    Ok(0)
}

fn median(mut times: Vec<Duration>) -> Duration {
    times.sort();
    times[times.len() / 2]
}

fn time_runs<F: FnMut()>(reps: usize, mut f: F) -> Duration {
    let times: Vec<Duration> = (0..reps)
        .map(|_| {
            let t0 = Instant::now();
            f();
            t0.elapsed()
        })
        .collect();
    median(times)
}

fn cmd_bench(
    sizes: &str,
    reps: usize,
    csv: bool,
    seed: u64,
    axis: Option<&str>,
) -> Result<i32, Failure> {
    if reps == 0 {
        return Err(Failure::usage("--reps must be at least 1"));
    }
    let sizes: Vec<usize> = sizes
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Failure::usage(format!("bad size {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    let mu = match axis {
        Some(s) => parse_pure_axis(s)?,
        None => default_axis(),
    };
    let spec = TransformSpec::new(mu, Side::Left, Direction::Forward);
    if csv {
        println!("n,direct_s,fast_s,ratio,agreement");
    } else {
        println!(
            "{:>8}  {:>12}  {:>12}  {:>10}  {:>10}",
            "N", "direct (s)", "fast (s)", "fast/direct", "agreement"
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &n in &sizes {
        let f = Signal1d::new(random_signal(&mut rng, n)).unwrap();
        let direct_out = cqdft(&f, &spec)?;
        let fast_out = cqfft(&f, &spec)?;
        let agreement = max_relative_error(direct_out.samples(), fast_out.samples());
        if agreement > 1e-9 {
            return Err(Failure::usage(format!(
                "engines disagree at N={n}: relative error {agreement:.3e}"
            )));
        }
        let direct_t = time_runs(reps, || {
            cqdft(&f, &spec).unwrap();
        });
        let fast_t = time_runs(reps, || {
            cqfft(&f, &spec).unwrap();
        });
        let ratio = fast_t.as_secs_f64() / direct_t.as_secs_f64();
        if csv {
            println!(
                "{n},{:.6e},{:.6e},{:.6e},{:.3e}",
                direct_t.as_secs_f64(),
                fast_t.as_secs_f64(),
                ratio,
                agreement
            );
        } else {
            println!(
                "{:>8}  {:>12.6}  {:>12.6}  {:>10.4}  {:>10.3e}",
                n,
                direct_t.as_secs_f64(),
                fast_t.as_secs_f64(),
                ratio,
                agreement
            );
        }
    }
    Ok(0)
}

fn cmd_explore_null(
    trials: u64,
    n: usize,
    seed: u64,
    axis: Option<&str>,
    tol: f64,
) -> Result<i32, Failure> {
    if trials == 0 {
        return Err(Failure::usage("--trials must be at least 1"));
    }
    if n == 0 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    let mu = match axis {
        Some(s) => parse_pure_axis(s)?,
        None => default_axis(),
    };
    let spec = TransformSpec::new(mu, Side::Left, Direction::Forward).with_tol(tol);
    println!(
        "trials: {trials}, n: {n}, base seed: {seed}, tol: {tol:.1e}, axis: {},{},{},{},{},{}",
        mu.x.re, mu.x.im, mu.y.re, mu.y.im, mu.z.re, mu.z.im
    );
    let mut best: Option<(f64, u64, usize)> = None;
    let mut hits = 0usize;
    for t in 0..trials {
        let trial_seed = seed.wrapping_add(t);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let f = Signal1d::new(random_real_signal(&mut rng, n)).unwrap();
        let spectrum = cqfft(&f, &spec)?;
        let diag = sample_diagnostics(spectrum.samples(), tol);
        if let Some((idx, ratio)) = diag.min_ratio {
            if best.is_none_or(|(r, _, _)| ratio < r) {
                best = Some((ratio, trial_seed, idx));
            }
        }
        if diag.null_count > 0 || diag.zero_count > 0 {
            // cross-check every flagged sample against the direct engine
            let direct = cqdft(&f, &spec)?;
            for (idx, q) in spectrum.samples().iter().enumerate() {
                if q.is_zero() || q.is_null(tol) {
                    hits += 1;
                    let confirmed = direct.samples()[idx].is_null(tol);
                    println!(
                        "null spectrum sample: seed {trial_seed}, index {idx}, |seminorm| {:.3e}, direct engine {}",
                        q.seminorm().norm(),
                        if confirmed { "confirms" } else { "DISAGREES" }
                    );
                }
            }
        }
    }
    match best {
        Some((ratio, trial_seed, idx)) => println!(
            "min seminorm ratio over all spectra: {ratio:.6e} (seed {trial_seed}, index {idx})"
        ),
        None => println!("all spectrum samples were exactly zero"),
    }
    println!("near-null spectrum samples found: {hits}");
    Ok(0)
}
