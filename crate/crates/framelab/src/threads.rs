//! Worker-pool plumbing. `FRAMELAB_THREADS` caps parallelism for the
//! subset/pattern fan-out in `minors` and `erasure`.

use once_cell::sync::OnceCell;

static POOL: OnceCell<Option<rayon::ThreadPool>> = OnceCell::new();

fn pool() -> &'static Option<rayon::ThreadPool> {
    POOL.get_or_init(|| {
        let threads = std::env::var("FRAMELAB_THREADS")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&t| t >= 1)?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .ok()
    })
}

/// Run `f` inside the configured pool (or rayon's global pool when
/// FRAMELAB_THREADS is unset).
pub(crate) fn run<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match pool() {
        Some(p) => p.install(f),
        None => f(),
    }
}
