fn main() {
    // die quietly when stdout is a closed pipe (e.g. `nestex corpus | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(nestex::cli::run(std::env::args()));
}
