//! Drives the `wschub` front end in process.

use wschub::cli::run_from_args;

pub fn run_example() -> wschub::Result<()> {
    let dir = std::env::temp_dir().join(format!("wschub-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).ok();
    let path = dir.join("lg.json");
    std::fs::write(&path, r#"{"preset": "lg24", "chi": [8, -1, -1]}"#).ok();
    let p = path.to_string_lossy().to_string();
    for args in [
        vec!["wschub", "describe", "--config", &p],
        vec!["wschub", "multiply", "--config", &p, "--u", "w1", "--v", "w1", "--out", "json"],
        vec!["wschub", "certify", "--config", &p, "--u", "w1", "--v", "w2", "--basepoint", "w0"],
    ] {
        let out = run_from_args(args.clone());
        println!("$ {}  (exit {})\n{}{}", args.join(" "), out.code, out.stdout, out.stderr);
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("command line example");
}
