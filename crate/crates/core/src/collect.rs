//! Deduplicating accumulators used by the pairwise enumerators.

/// Sorted, deduplicated accumulation in bounded blocks.
///
/// Values are buffered; each full block is sorted, deduplicated and merged
/// into the accumulated result, so peak memory tracks the result size rather
/// than the number of pushes.
pub(crate) struct SortedCollector<T> {
    buf: Vec<T>,
    acc: Vec<T>,
    block: usize,
}

const BLOCK: usize = 1 << 22;

impl<T: Ord> SortedCollector<T> {
    pub(crate) fn new(expected: u128) -> Self {
        let cap = expected.min(BLOCK as u128) as usize;
        SortedCollector {
            buf: Vec::with_capacity(cap),
            acc: Vec::new(),
            block: BLOCK,
        }
    }

    #[inline]
    pub(crate) fn push(&mut self, v: T) {
        self.buf.push(v);
        if self.buf.len() >= self.block {
            self.flush();
        }
    }

    fn flush(&mut self) {
        if self.buf.is_empty() {
            return;
        }
        self.buf.sort_unstable();
        self.buf.dedup();
        if self.acc.is_empty() {
            std::mem::swap(&mut self.acc, &mut self.buf);
            return;
        }
        let left = std::mem::take(&mut self.acc);
        let right = std::mem::take(&mut self.buf);
        self.acc = merge_dedup(left, right);
        self.buf = Vec::with_capacity(self.block.min(self.acc.len().max(16)));
    }

    pub(crate) fn finish(mut self) -> Vec<T> {
        self.flush();
        self.acc
    }
}

fn merge_dedup<T: Ord>(left: Vec<T>, right: Vec<T>) -> Vec<T> {
    let mut out = Vec::with_capacity(left.len() + right.len());
    let mut l = left.into_iter().peekable();
    let mut r = right.into_iter().peekable();
    loop {
        let take_left = match (l.peek(), r.peek()) {
            (Some(a), Some(b)) => match a.cmp(b) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    r.next();
                    true
                }
            },
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let v = if take_left { l.next() } else { r.next() };
        out.extend(v);
    }
    out
}

/// Dense presence bitmap over the integer interval `[lo, lo + len)`.
pub(crate) struct Bitmap {
    lo: i64,
    words: Vec<u64>,
}

impl Bitmap {
    pub(crate) fn new(lo: i64, len: u64) -> Self {
        // one spare word so shifted ORs never need a bounds branch
        let n = (len as usize).div_ceil(64) + 1;
        Bitmap {
            lo,
            words: vec![0; n],
        }
    }

    /// Bitmap holding exactly the sorted values `vals`.
    pub(crate) fn from_sorted(vals: &[i64]) -> Self {
        let lo = vals[0];
        let len = (vals[vals.len() - 1] - lo) as u64 + 1;
        let mut bm = Bitmap::new(lo, len);
        for &v in vals {
            bm.set(v);
        }
        bm
    }

    #[inline]
    pub(crate) fn set(&mut self, v: i64) {
        let i = (v - self.lo) as u64;
        self.words[(i >> 6) as usize] |= 1u64 << (i & 63);
    }

    /// ORs `src`, translated so its first bit lands on `bit_offset`.
    pub(crate) fn or_shifted(&mut self, src: &Bitmap, bit_offset: u64) {
        let ws = (bit_offset >> 6) as usize;
        let bs = (bit_offset & 63) as u32;
        let n = src.words.len() - 1;
        let dst = &mut self.words[ws..ws + n + 1];
        if bs == 0 {
            for (d, s) in dst.iter_mut().zip(&src.words[..n]) {
                *d |= *s;
            }
        } else {
            let mut carry = 0u64;
            for (d, &s) in dst.iter_mut().zip(&src.words[..n]) {
                *d |= (s << bs) | carry;
                carry = s >> (64 - bs);
            }
            dst[n] |= carry;
        }
    }

    pub(crate) fn words(&self) -> usize {
        self.words.len()
    }

    pub(crate) fn into_values(self) -> Vec<i64> {
        let count: u32 = self.words.iter().map(|w| w.count_ones()).sum();
        let mut out = Vec::with_capacity(count as usize);
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as i64;
                out.push(self.lo + (wi as i64) * 64 + b);
                w &= w - 1;
            }
        }
        out
    }
}

/// Integer accumulator that picks a bitmap or a sort-merge strategy.
pub(crate) enum IntCollector {
    Dense(Bitmap),
    Sorted(SortedCollector<i64>),
}

impl IntCollector {
    /// `lo..=hi` must bound every value that will be pushed.
    pub(crate) fn new(lo: i64, hi: i64, pushes: u128, max_bitmap_bits: u64) -> Self {
        let width = (hi as i128 - lo as i128 + 1) as u128;
        // a bitmap costs a scan over its words; sorting costs ~log2(pushes) per push
        if width <= max_bitmap_bits as u128 && width / 64 <= pushes.saturating_mul(8) + 4096 {
            IntCollector::Dense(Bitmap::new(lo, width as u64))
        } else {
            IntCollector::Sorted(SortedCollector::new(pushes))
        }
    }

    #[inline]
    pub(crate) fn push(&mut self, v: i64) {
        match self {
            IntCollector::Dense(bm) => bm.set(v),
            IntCollector::Sorted(c) => c.push(v),
        }
    }

    pub(crate) fn finish(self) -> Vec<i64> {
        match self {
            IntCollector::Dense(bm) => bm.into_values(),
            IntCollector::Sorted(c) => c.finish(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_collector_merges_blocks() {
        let mut c = SortedCollector::new(10);
        c.block = 3;
        for v in [5, 1, 5, 3, 1, 9, 0, 3, 7, 7] {
            c.push(v);
        }
        assert_eq!(c.finish(), vec![0, 1, 3, 5, 7, 9]);
    }

    #[test]
    fn bitmap_shifted_or() {
        let src = Bitmap::from_sorted(&[0, 1, 63, 64, 130]);
        let mut dst = Bitmap::new(-10, 400);
        dst.or_shifted(&src, 5);
        dst.or_shifted(&src, 64);
        assert_eq!(
            dst.into_values(),
            vec![-5, -4, 54, 55, 58, 59, 117, 118, 125, 184]
        );
    }
}
