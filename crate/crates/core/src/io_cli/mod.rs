//! Command-line front end: configuration, reports and file emission.
//!
//! Exit codes: 0 success, 2 configuration or validation error, 3 domain
//! error (including "no feasible sample"), 4 I/O error.

pub mod args;
pub mod config;
pub mod report;
pub mod svg;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;

use crate::coupler_curve::{trace_curve, CouplerPoint};
use crate::error::{Error, Result};
use crate::fourbar::{pose, solve_output_angle, LinkageParams};

use args::{Cli, Command, GlobalArgs, PointArgs, TraceFormat};
use config::{parse_config, JobConfig, SweepRange};
use report::{fmt_num, sweep_rows, write_sweep_csv, write_trace_csv, AnalysisReport, SexticReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Input-angle range used by `trace` and `sextic` without a sweep block.
pub const DEFAULT_TRACE_RANGE: (f64, f64) = (-3.0, 3.0);
pub const DEFAULT_TRACE_SAMPLES: usize = 401;
/// Input-angle range used by `animate` without a sweep block.
pub const DEFAULT_ANIMATE_RANGE: (f64, f64) =
    (-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2);

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Validation(_) | Error::InvalidLinkage(_) | Error::NonFinite(_) => {
            EXIT_CONFIG
        }
        Error::Io(_) => EXIT_IO,
        _ => EXIT_DOMAIN,
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "mink4r: {e}");
            exit_code(&e)
        }
    }
}

/// Merge the config file (if any) with command-line overrides.
pub fn job_config(g: &GlobalArgs) -> Result<JobConfig> {
    let mut cfg = match &g.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            parse_config(&text)?
        }
        None => {
            let missing: Vec<&str> = [("--a", g.a), ("--b", g.b), ("--g", g.g), ("--h", g.h)]
                .iter()
                .filter(|(_, v)| v.is_none())
                .map(|(n, _)| *n)
                .collect();
            if !missing.is_empty() {
                return Err(Error::Validation(format!(
                    "no --config given and missing {}",
                    missing.join(", ")
                )));
            }
            JobConfig::new(LinkageParams {
                a: 0.0,
                b: 0.0,
                g: 0.0,
                h: 0.0,
            })
        }
    };
    let p = &mut cfg.params;
    for (slot, v) in [
        (&mut p.a, g.a),
        (&mut p.b, g.b),
        (&mut p.g, g.g),
        (&mut p.h, g.h),
    ] {
        if let Some(v) = v {
            *slot = v;
        }
    }
    if let Some(m) = g.mode {
        cfg.mode = m.into();
    }
    if let Some(t) = g.tol {
        cfg.tol = t;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn emit(out: &Option<PathBuf>, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => stdout.write_all(bytes).map_err(Error::from),
    }
}

fn coupler_point(cfg: &JobConfig, pa: &PointArgs) -> Result<CouplerPoint> {
    let base = cfg.point;
    let x = pa.px.or(base.map(|p| p.x));
    let y = pa.py.or(base.map(|p| p.y));
    match (x, y) {
        (Some(x), Some(y)) if x.is_finite() && y.is_finite() => Ok(CouplerPoint::new(x, y)),
        _ => Err(Error::Validation(
            "a coupler point is required: --px and --py, or \"point\" in the config".into(),
        )),
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    let cfg = job_config(g)?;
    let p = cfg.params;
    let opts = cfg.solver_options();
    match &cli.command {
        Command::Analyze => {
            let r = AnalysisReport::new(&p, cfg.tol)?;
            let text = if g.json { r.to_json() } else { r.to_text() };
            emit(&g.out, text.as_bytes(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            theta_lo,
            theta_hi,
            steps,
        } => {
            let base = cfg.sweep;
            let range = match (
                theta_lo.or(base.map(|s| s.lo)),
                theta_hi.or(base.map(|s| s.hi)),
                steps.or(base.map(|s| s.steps)),
            ) {
                (Some(lo), Some(hi), Some(steps)) => SweepRange { lo, hi, steps },
                _ => return Err(Error::Validation(
                    "sweep needs --theta-lo, --theta-hi and --steps, or \"sweep\" in the config"
                        .into(),
                )),
            };
            range.validate()?;
            let rows = sweep_rows(&p, &range, &opts);
            let mut buf = Vec::new();
            write_sweep_csv(&rows, &mut buf)?;
            emit(&g.out, &buf, stdout)?;
            if rows.iter().all(|r| r.solution.is_none()) {
                let _ = writeln!(stderr, "mink4r: no feasible sample in the sweep");
                return Ok(EXIT_DOMAIN);
            }
            Ok(EXIT_OK)
        }
        Command::Trace {
            point,
            format,
            samples,
        } => {
            let pt = coupler_point(&cfg, point)?;
            let (lo, hi) = cfg.sweep.map_or(DEFAULT_TRACE_RANGE, |s| (s.lo, s.hi));
            let n = samples
                .or(cfg.sweep.map(|s| s.steps))
                .unwrap_or(DEFAULT_TRACE_SAMPLES);
            let trace = trace_curve(&p, &pt, lo, hi, n, &opts)?;
            let mut buf = Vec::new();
            match format {
                TraceFormat::Csv => write_trace_csv(&trace, &mut buf)?,
                TraceFormat::Svg => {
                    let title = format!(
                        "mink4r trace a={} b={} g={} h={} point=({}, {})",
                        fmt_num(p.a),
                        fmt_num(p.b),
                        fmt_num(p.g),
                        fmt_num(p.h),
                        fmt_num(pt.x),
                        fmt_num(pt.y)
                    );
                    buf = svg::trace_svg(&p, &trace, &title).into_bytes();
                }
            }
            emit(&g.out, &buf, stdout)?;
            if trace.skipped > 0 {
                let _ = writeln!(stderr, "mink4r: {} solutions skipped", trace.skipped);
            }
            if trace.point_count() == 0 {
                let _ = writeln!(stderr, "mink4r: no feasible sample in the trace");
                return Ok(EXIT_DOMAIN);
            }
            Ok(EXIT_OK)
        }
        Command::Sextic { point, samples } => {
            let pt = coupler_point(&cfg, point)?;
            let range = cfg.sweep.map_or(DEFAULT_TRACE_RANGE, |s| (s.lo, s.hi));
            let r = SexticReport::new(&p, &pt, range, *samples, &opts)?;
            let text = if g.json { r.to_json() } else { r.to_text() };
            emit(&g.out, text.as_bytes(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Animate { frames, out_dir } => {
            let range = cfg.sweep.map_or(DEFAULT_ANIMATE_RANGE, |s| (s.lo, s.hi));
            let written = animate(&cfg, *frames, range, out_dir)?;
            let _ = writeln!(
                stdout,
                "{written} of {frames} frames written to {}",
                out_dir.display()
            );
            Ok(if written == 0 { EXIT_DOMAIN } else { EXIT_OK })
        }
    }
}

/// Write `frame_NNNN.svg` for every feasible frame and `manifest.csv` with
/// one row per frame. Returns the number of SVG files written.
pub fn animate(cfg: &JobConfig, frames: usize, range: (f64, f64), out_dir: &Path) -> Result<usize> {
    if frames == 0 {
        return Err(Error::Validation("--frames must be at least 1".into()));
    }
    if range.0.is_nan() || range.1.is_nan() || range.0 > range.1 {
        return Err(Error::Validation("animation range needs lo <= hi".into()));
    }
    let p = cfg.params;
    let opts = cfg.solver_options();
    let thetas: Vec<f64> = (0..frames)
        .map(|i| {
            if frames == 1 {
                range.0
            } else if i + 1 == frames {
                range.1
            } else {
                range.0 + (range.1 - range.0) * i as f64 / (frames - 1) as f64
            }
        })
        .collect();
    let mut poses = Vec::with_capacity(frames);
    for &theta in &thetas {
        let res = solve_output_angle(&p, theta, &opts).map(|mut s| {
            s.sort_by_key(|s| (s.root, s.branch));
            s.first().copied()
        });
        poses.push(res.map(|s| s.map(|sol| (sol, pose(&p, theta, &sol)))));
    }
    let vp = svg::Viewport::fit(poses.iter().flat_map(|r| match r {
        Ok(Some((_, ps))) => vec![
            (ps.o.x, ps.o.y),
            (ps.a.x, ps.a.y),
            (ps.b.x, ps.b.y),
            (ps.c.x, ps.c.y),
        ],
        _ => vec![],
    }));

    fs::create_dir_all(out_dir).map_err(|e| Error::Io(format!("{}: {e}", out_dir.display())))?;
    let mut manifest = csv::Writer::from_writer(Vec::new());
    manifest.write_record(["frame", "theta", "status", "root", "branch", "file"])?;
    let mut written = 0;
    for (i, (theta, res)) in thetas.iter().zip(&poses).enumerate() {
        let (status, root, branch, file) = match res {
            Ok(Some((sol, ps))) => {
                let name = format!("frame_{i:04}.svg");
                let title = format!("frame {i} theta={}", fmt_num(*theta));
                let path = out_dir.join(&name);
                fs::write(&path, svg::frame_svg(&p, ps, &vp, &title))
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                written += 1;
                ("ok", sol.root.as_str(), sol.branch.as_str(), name)
            }
            Ok(None) => ("infeasible", "", "", String::new()),
            Err(Error::BranchingPoint { .. }) => ("branching", "", "", String::new()),
            Err(Error::LightlikeOutput) => ("lightlike", "", "", String::new()),
            Err(e) => return Err(e.clone()),
        };
        manifest.write_record([
            i.to_string(),
            fmt_num(*theta),
            status.into(),
            root.into(),
            branch.into(),
            file,
        ])?;
    }
    let bytes = manifest
        .into_inner()
        .map_err(|e| Error::Io(e.to_string()))?;
    let path = out_dir.join("manifest.csv");
    fs::write(&path, bytes).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(written)
}
