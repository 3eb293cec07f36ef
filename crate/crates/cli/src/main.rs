use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let spec = match spantree_cli::parse_args(std::env::args_os()) {
        Ok(spec) => spec,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                spantree_cli::EXIT_USAGE as u8
            } else {
                0
            });
        }
    };
    let code = spantree_cli::run(&spec, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
