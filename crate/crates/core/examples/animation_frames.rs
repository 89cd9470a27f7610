//! Write SVG frames of a moving linkage into a temporary directory.

use mink4r::fourbar::LinkageParams;
use mink4r::io_cli::animate;
use mink4r::io_cli::config::JobConfig;

fn main() -> mink4r::Result<()> {
    let cfg = JobConfig::new(LinkageParams::new(1.2, 0.4, 0.4, 0.4)?);
    let dir = std::env::temp_dir().join("mink4r_frames");
    let n = animate(&cfg, 16, (-2.5, 2.5), &dir)?;
    println!("{n} frames in {}", dir.display());
    print!(
        "{}",
        std::fs::read_to_string(dir.join("manifest.csv")).unwrap_or_default()
    );
    Ok(())
}
