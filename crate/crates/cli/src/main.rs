use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut io = compedge_cli::Io {
        stdin: &mut stdin.lock(),
        stdout: &mut stdout.lock(),
        stderr: &mut io::stderr(),
    };
    let code = compedge_cli::run(std::env::args_os(), &mut io);
    ExitCode::from(code as u8)
}
