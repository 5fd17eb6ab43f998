//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use treedist::selftest::{run_all, Config};

/// Keep freed memory in the process. By default glibc maps every large
/// array fresh and unmaps it on free, so the scaling check would mostly time
/// page faults on the large input.
fn retain_heap() {
    #[cfg(all(target_os = "linux", target_env = "gnu"))]
    unsafe {
        libc::mallopt(libc::M_MMAP_THRESHOLD, 32 << 20);
        libc::mallopt(libc::M_TRIM_THRESHOLD, 256 << 20);
    }
}

fn main() {
    retain_heap();
    let outcomes = run_all(&Config::default());
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
