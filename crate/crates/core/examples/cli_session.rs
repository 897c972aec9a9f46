// Driving the `hw` command from code.
//
// `cargo run --example cli_session`

use std::error::Error;

use highwater::cli::run_command;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sessions: [&[&str]; 3] = [
        &["hw", "eval", "a(0)*a(1)"],
        &["hw", "char-poly", "--index", "2", "--field", "gf:7"],
        &["hw", "closure", "--gens", "a(0), a(1)", "--sweeps", "3"],
    ];
    for argv in sessions {
        let out = run_command(argv.iter().copied());
        println!("$ {}\n{}", argv.join(" "), out.stdout);
        if out.status != 0 {
            return Err(format!("exit {}: {}", out.status, out.stderr).into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
