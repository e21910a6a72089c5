//! Writes the built-in webs and flux systems as JSON input files.
//!
//! `cargo run --example export_fixtures -- DIR` (default `fixtures`).

use std::path::PathBuf;

use plueckerlab::cli::files::{FluxFile, WebFile};
use plueckerlab::fixtures;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(dir.join("webs"))?;
    std::fs::create_dir_all(dir.join("flux"))?;
    for f in fixtures::corpus() {
        let text = WebFile::from_web(&f.web, Some(f.name), Some(f.note)).to_json();
        std::fs::write(dir.join("webs").join(format!("{}.json", f.name)), text + "\n")?;
    }
    for (name, note, sys) in fixtures::flux_corpus() {
        let text = FluxFile::from_system(&sys, Some(name), Some(note)).to_json();
        std::fs::write(dir.join("flux").join(format!("{name}.json")), text + "\n")?;
    }
    println!("wrote fixtures to {}", dir.display());
    Ok(())
}
