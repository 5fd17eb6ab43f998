//! Library half of the `treedist` command: subcommand logic and the JSON
//! report types, kept apart from argument parsing so they can be tested.

pub mod commands;
pub mod report;

pub use commands::{exit, Failure, Input};

/// Keeps freed memory in the process instead of returning it to the OS,
/// so timing runs are not dominated by fresh page faults.
pub fn retain_heap() {
    #[cfg(all(target_os = "linux", target_env = "gnu"))]
    unsafe {
        libc::mallopt(libc::M_MMAP_THRESHOLD, 32 << 20);
        libc::mallopt(libc::M_TRIM_THRESHOLD, 256 << 20);
    }
}
