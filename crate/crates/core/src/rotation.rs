//! Lexicographically least rotation of a cyclic sequence (Booth's algorithm).

/// Start offset of the lexicographically least rotation of `xs`.
///
/// Among equal least rotations (periodic input) the smallest offset is returned.
pub(crate) fn least_rotation<T: Ord>(xs: &[T]) -> usize {
    let n = xs.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &xs[i % n];
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != usize::MAX && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = if i == usize::MAX { 0 } else { i + 1 };
        }
    }
    k % n
}

pub(crate) fn rotated<T: Clone>(xs: &[T], start: usize) -> Vec<T> {
    xs[start..].iter().chain(&xs[..start]).cloned().collect()
}

pub(crate) fn canonical_rotation<T: Ord + Clone>(xs: &[T]) -> Vec<T> {
    rotated(xs, least_rotation(xs))
}

/// True iff `b` is a rotation of `a`.
pub(crate) fn is_rotation<T: Eq>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|k| a[k..].iter().chain(&a[..k]).eq(b)))
}
