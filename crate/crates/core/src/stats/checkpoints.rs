/// `start, start·factor, start·factor², …` up to and including `max`.
///
/// `max` itself is always appended when the progression skips over it.
pub fn geometric_checkpoints(start: u64, factor: u64, max: u64) -> Vec<u64> {
    assert!(
        start >= 1 && factor >= 2,
        "geometric checkpoints need start >= 1 and factor >= 2"
    );
    let mut out = Vec::new();
    let mut n = start;
    while n <= max {
        out.push(n);
        match n.checked_mul(factor) {
            Some(next) => n = next,
            None => break,
        }
    }
    if max >= start && out.last() != Some(&max) {
        out.push(max);
    }
    out
}

/// Sorted union of checkpoint lists, zeros dropped.
pub fn merge_checkpoints(lists: &[&[u64]]) -> Vec<u64> {
    let mut all: Vec<u64> = lists
        .iter()
        .flat_map(|l| l.iter().copied())
        .filter(|&n| n > 0)
        .collect();
    all.sort_unstable();
    all.dedup();
    all
}
