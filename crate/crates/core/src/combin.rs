//! Subset enumeration over bitmasks.

/// `C(n, k)` saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All `k`-subsets of `{0, .., n-1}` as masks, in increasing numeric order
/// (Gosper's hack). Requires `n <= 63`.
pub fn masks_of_size(n: u32, k: u32) -> impl Iterator<Item = u64> {
    assert!(n <= 63, "mask enumeration supports at most 63 elements");
    let limit = 1u64 << n;
    let mut next = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let x = next?;
        next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let y = (((r ^ x) >> 2) / c) | r;
            (y < limit).then_some(y)
        };
        Some(x)
    })
}

/// The `rank`-th `k`-subset of `{0, .., n-1}` in the order of
/// [`masks_of_size`] (colexicographic). Requires `rank < C(n, k)`.
pub fn unrank_mask(n: u32, k: u32, mut rank: u64) -> u64 {
    debug_assert!(rank < binomial(n as u64, k as u64));
    let mut mask = 0u64;
    let mut top = n;
    for i in (1..=k).rev() {
        // largest c < top with C(c, i) <= rank
        let mut c = top - 1;
        while binomial(c as u64, i as u64) > rank {
            c -= 1;
        }
        mask |= 1 << c;
        rank -= binomial(c as u64, i as u64);
        top = c;
    }
    mask
}
