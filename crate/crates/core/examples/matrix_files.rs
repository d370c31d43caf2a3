// Matrix files and the command-line entry point, driven in-process.

use skewtrace::cli::run_command;
use skewtrace::{parse_matrix, serialize_matrix, write_matrix, AnyMatrix, Rational, SkewMatrix};

pub fn run_example() -> skewtrace::Result<()> {
    let dir = std::env::temp_dir().join(format!("skewtrace-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| skewtrace::Error::Io(e.to_string()))?;

    let j = SkewMatrix::<Rational>::standard(2);
    let text = serialize_matrix(j.as_matrix());
    println!("{text}");
    assert_eq!(parse_matrix(&text)?, AnyMatrix::Rational(j.as_matrix().clone()));

    let path = dir.join("J4.json");
    write_matrix(&path, j.as_matrix())?;
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(
        ["skewtrace", "pf", "--input", path.to_str().unwrap(), "--method", "traces"],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    assert_eq!(code, 0);

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"dim":2,"scalar_mode":"rational","entries":["0","1/0","-1","0"]}"#)
        .map_err(|e| skewtrace::Error::Io(e.to_string()))?;
    let code = run_command(["skewtrace", "pf", "--input", bad.to_str().unwrap()], &mut out, &mut err);
    print!("exit {code}: {}", String::from_utf8_lossy(&err));
    assert_eq!(code, 2);

    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
