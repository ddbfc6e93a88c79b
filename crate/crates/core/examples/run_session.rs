//! Runs a session text through the batch runner and prints the table and JSON lines.

use idealclose::cli::{run_text, RunOptions};

const SESSION: &str = "\
ring R = poly(F2; x, y | x^2, x*y, y^2)
ideal M = (x, y) in R
compute vop(M)
check semiprime vop on family(M) expect violation
check exhaustive frob on lattice(R)
compare frob radical on lattice(R) expect <=
report reductions frob M in R
";

fn main() {
    let outcome = run_text(SESSION, &RunOptions::default());
    print!("{}", outcome.table());
    print!("{}", outcome.jsonl());
    std::process::exit(outcome.exit_code);
}
