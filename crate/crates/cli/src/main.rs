// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

fn main() {
    let outcome = pdedit_cli::run_command(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.status);
}
