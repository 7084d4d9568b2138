use std::io;

fn main() {
    let code = orbital_chromatic::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
