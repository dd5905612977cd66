//! Deterministic parallel sweeps: a fixed domain is split into contiguous
//! ranges, one per worker, and per-range results are concatenated in range
//! order. The output is identical for every worker count.

use std::ops::Range;

/// Split `0..total` into `workers` contiguous ranges (first ranges get the
/// remainder), run `f` on each range, and concatenate results in order.
pub fn partitioned<T, F>(total: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<usize>) -> Vec<T> + Sync,
{
    let workers = workers.max(1);
    let ranges = split_ranges(total, workers);
    if workers == 1 || total == 0 {
        return ranges.into_iter().flat_map(&f) .collect();
    }
    let mut slots: Vec<Option<Vec<T>>> = ranges.iter().map(|_| None).collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for range in ranges {
            let f = &f;
            handles.push(scope.spawn(move || f(range)));
        }
        for (slot, handle) in slots.iter_mut().zip(handles) {
            *slot = Some(handle.join().expect("worker panicked"));
        }
    });
    slots.into_iter().flatten().flatten().collect()
}

/// The contiguous ranges `partitioned` uses.
pub fn split_ranges(total: usize, workers: usize) -> Vec<Range<usize>> {
    let workers = workers.max(1).min(total.max(1));
    let base = total / workers;
    let extra = total % workers;
    let mut out = Vec::with_capacity(workers);
    let mut start = 0;
    for w in 0..workers {
        let len = base + usize::from(w < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}
