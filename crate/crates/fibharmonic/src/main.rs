use std::process::ExitCode;

fn main() -> ExitCode {
    // Die quietly when a pipe closes early (e.g. `fibharmonic list | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    fibharmonic::cli::run()
}
