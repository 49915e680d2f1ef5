//! Threaded extremal scan. The index range is cut into chunks handed out
//! round-robin; [`ScanResult::merge`] is order-independent, so the answer is
//! identical to the sequential scan for any thread count.

use safeset_core::solvers::scan::{scan_range, tournament_count, MAX_SCAN_N};
use safeset_core::solvers::{extremal_scan, ScanResult};
use safeset_core::Result;

pub fn parallel_scan(n: usize, k: usize, allow_n7: bool, threads: usize) -> Result<ScanResult> {
    if threads <= 1 || n > MAX_SCAN_N || n == 0 {
        return extremal_scan(n, k, allow_n7);
    }
    // run the argument checks once up front
    if n == MAX_SCAN_N && !allow_n7 {
        return extremal_scan(n, k, false);
    }
    let total = tournament_count(n);
    let chunks = (threads as u64 * 8).min(total);
    let bounds = |c: u64| c * total / chunks;
    std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads as u64)
            .map(|t| {
                scope.spawn(move || {
                    let mut acc: Option<ScanResult> = None;
                    let mut c = t;
                    while c < chunks {
                        let part = scan_range(n, k, bounds(c)..bounds(c + 1))?;
                        acc = Some(match acc {
                            Some(a) => a.merge(part),
                            None => part,
                        });
                        c += threads as u64;
                    }
                    Ok::<_, safeset_core::Error>(acc)
                })
            })
            .collect();
        let mut result: Option<ScanResult> = None;
        for w in workers {
            if let Some(part) = w.join().expect("scan worker panicked")? {
                result = Some(match result {
                    Some(r) => r.merge(part),
                    None => part,
                });
            }
        }
        Ok(result.expect("at least one chunk"))
    })
}
