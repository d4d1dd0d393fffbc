use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = {
        let stdin = std::io::stdin();
        let stdout = std::io::stdout();
        let stderr = std::io::stderr();
        let code = domino::cli::run(
            &argv,
            &mut stdin.lock(),
            &mut stdout.lock(),
            &mut stderr.lock(),
        );
        let _ = stdout.lock().flush();
        code
    };
    std::process::exit(code);
}
