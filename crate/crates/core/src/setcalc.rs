//! One-dimensional set calculus: sums, differences, products, ratios,
//! squares, dilates, iterated combinations and representation counts.
//!
//! Every pairwise enumeration checks its pair count against [`Limits`]
//! before allocating. Integer inputs take a fast path (dense bitmap, shifted
//! bitmap ORs, or sort-merge on `i64`) that yields exactly the same sets as
//! the generic rational path; see [`combine_rational`].

use serde::{Deserialize, Serialize};

use crate::collect::{Bitmap, IntCollector, SortedCollector};
use crate::error::{Error, Result};
use crate::numset::NumSet;
use crate::scalar::Scalar;

pub const DEFAULT_MAX_PAIRS: u64 = 500_000_000;
pub const DEFAULT_MAX_BITMAP_BITS: u64 = 1 << 31;

/// Feasibility thresholds shared by every enumerating operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest number of element pairs (or tuples) an operation may enumerate.
    pub max_pairs: u64,
    /// Largest integer range a dense presence bitmap may cover.
    pub max_bitmap_bits: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: DEFAULT_MAX_PAIRS,
            max_bitmap_bits: DEFAULT_MAX_BITMAP_BITS,
        }
    }
}

impl Limits {
    pub fn check_pairs(&self, what: &str, pairs: u128) -> Result<()> {
        if pairs > self.max_pairs as u128 {
            Err(Error::Infeasible {
                what: what.to_string(),
                pairs,
                limit: self.max_pairs,
            })
        } else {
            Ok(())
        }
    }
}

/// A pairwise operation on scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn name(self) -> &'static str {
        match self {
            BinOp::Add => "sumset",
            BinOp::Sub => "difference_set",
            BinOp::Mul => "product_set",
            BinOp::Div => "ratio_set",
        }
    }

    fn commutative(self) -> bool {
        matches!(self, BinOp::Add | BinOp::Mul)
    }

    /// Panics on division by zero; callers validate divisors first.
    fn apply(self, x: &Scalar, y: &Scalar) -> Scalar {
        match self {
            BinOp::Add => x + y,
            BinOp::Sub => x - y,
            BinOp::Mul => x * y,
            BinOp::Div => x.checked_div(y).expect("divisor checked nonzero"),
        }
    }
}

fn validate(op: BinOp, x: &NumSet, y: &NumSet, lim: &Limits) -> Result<bool> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySet);
    }
    if op == BinOp::Div && y.contains_zero() {
        return Err(Error::ZeroDivisor);
    }
    let same = op.commutative() && x == y;
    lim.check_pairs(op.name(), x.len() as u128 * y.len() as u128)?;
    Ok(same)
}

/// `{x op y : x ∈ X, y ∈ Y}`.
pub fn combine(op: BinOp, x: &NumSet, y: &NumSet, lim: &Limits) -> Result<NumSet> {
    let same = validate(op, x, y, lim)?;
    if op != BinOp::Div {
        if let (Some(xs), Some(ys)) = (x.as_ints(), y.as_ints()) {
            if let Some(v) = combine_ints(op, xs, ys, same, lim) {
                return Ok(NumSet::from_sorted_ints(v));
            }
        }
    }
    Ok(combine_generic(op, x, y, same))
}

/// Same contract as [`combine`] but always enumerates exact rationals,
/// bypassing every integer fast path. Used as the equivalence oracle.
pub fn combine_rational(op: BinOp, x: &NumSet, y: &NumSet, lim: &Limits) -> Result<NumSet> {
    validate(op, x, y, lim)?;
    Ok(combine_generic(op, x, y, false))
}

fn combine_generic(op: BinOp, x: &NumSet, y: &NumSet, same: bool) -> NumSet {
    let xs = x.to_vec();
    let ys = y.to_vec();
    let mut out = SortedCollector::new(xs.len() as u128 * ys.len() as u128);
    for (i, a) in xs.iter().enumerate() {
        let start = if same { i } else { 0 };
        for b in &ys[start..] {
            out.push(op.apply(a, b));
        }
    }
    NumSet::from_sorted_scalars(out.finish())
}

/// Integer enumeration; `None` when the result range leaves `i64`.
pub(crate) fn combine_ints(
    op: BinOp,
    xs: &[i64],
    ys: &[i64],
    same: bool,
    lim: &Limits,
) -> Option<Vec<i64>> {
    let (x0, x1) = (xs[0] as i128, xs[xs.len() - 1] as i128);
    let (y0, y1) = (ys[0] as i128, ys[ys.len() - 1] as i128);
    let (lo, hi) = match op {
        BinOp::Add => (x0 + y0, x1 + y1),
        BinOp::Sub => (x0 - y1, x1 - y0),
        BinOp::Mul => {
            let c = [x0 * y0, x0 * y1, x1 * y0, x1 * y1];
            (*c.iter().min().unwrap(), *c.iter().max().unwrap())
        }
        BinOp::Div => return None,
    };
    let lo = i64::try_from(lo).ok()?;
    let hi = i64::try_from(hi).ok()?;
    let width = (hi as i128 - lo as i128 + 1) as u128;
    let pairs = if same {
        let n = xs.len() as u128;
        n * (n + 1) / 2
    } else {
        xs.len() as u128 * ys.len() as u128
    };

    if matches!(op, BinOp::Add | BinOp::Sub) && width <= lim.max_bitmap_bits as u128 {
        // translate a bitmap of Y once per x when that beats per-pair writes
        let src_words = ((y1 - y0) as u128 + 1).div_ceil(64) + 1;
        if (xs.len() as u128) * src_words < pairs {
            return Some(shifted_or(op, xs, ys, lo, width as u64));
        }
    }

    if matches!(op, BinOp::Add | BinOp::Sub)
        && pairs >= 1 << 16
        && (width / SWEEP_WINDOW as u128 + 1) * (xs.len() as u128) < pairs
    {
        return Some(windowed_sweep(op, xs, ys, same && op == BinOp::Add));
    }

    let mut out = IntCollector::new(lo, hi, pairs, lim.max_bitmap_bits);
    match op {
        BinOp::Add => each_pair(xs, ys, same, |a, b| out.push(a + b)),
        BinOp::Sub => each_pair(xs, ys, same, |a, b| out.push(a - b)),
        BinOp::Mul => each_pair(xs, ys, same, |a, b| out.push(a * b)),
        BinOp::Div => unreachable!(),
    }
    Some(out.finish())
}

#[inline]
fn each_pair(xs: &[i64], ys: &[i64], same: bool, mut f: impl FnMut(i64, i64)) {
    for (i, &a) in xs.iter().enumerate() {
        let start = if same { i } else { 0 };
        for &b in &ys[start..] {
            f(a, b);
        }
    }
}

const SWEEP_WINDOW: u64 = 1 << 21;

/// `X ± Y` swept over output windows small enough to stay in cache. Each `x`
/// keeps a cursor into the (sorted) second operand.
fn windowed_sweep(op: BinOp, xs: &[i64], ys: &[i64], upper_only: bool) -> Vec<i64> {
    let ys: Vec<i64> = match op {
        BinOp::Add => ys.to_vec(),
        _ => ys.iter().rev().map(|&y| -y).collect(),
    };
    let mut cursor: Vec<usize> = if upper_only {
        (0..xs.len()).collect()
    } else {
        vec![0; xs.len()]
    };
    let mut window = vec![0u64; (SWEEP_WINDOW / 64) as usize];
    let mut out = Vec::new();
    // each window starts at the smallest pending value
    while let Some(w_lo) = xs
        .iter()
        .zip(&cursor)
        .filter(|(_, &j)| j < ys.len())
        .map(|(&x, &j)| x + ys[j])
        .min()
    {
        let w_hi = w_lo.saturating_add(SWEEP_WINDOW as i64);
        for (&x, j) in xs.iter().zip(cursor.iter_mut()) {
            while *j < ys.len() {
                let v = x + ys[*j];
                if v >= w_hi {
                    break;
                }
                let off = (v - w_lo) as usize;
                window[off >> 6] |= 1 << (off & 63);
                *j += 1;
            }
        }
        for (k, w) in window.iter_mut().enumerate() {
            let mut bits = std::mem::take(w);
            while bits != 0 {
                out.push(w_lo + (k as i64) * 64 + bits.trailing_zeros() as i64);
                bits &= bits - 1;
            }
        }
    }
    out
}

fn shifted_or(op: BinOp, xs: &[i64], ys: &[i64], lo: i64, width: u64) -> Vec<i64> {
    let src = match op {
        BinOp::Add => Bitmap::from_sorted(ys),
        _ => {
            let neg: Vec<i64> = ys.iter().rev().map(|&y| -y).collect();
            Bitmap::from_sorted(&neg)
        }
    };
    let first = match op {
        BinOp::Add => ys[0],
        _ => -ys[ys.len() - 1],
    };
    let mut dst = Bitmap::new(lo, width + 64 * src.words() as u64);
    for &x in xs {
        dst.or_shifted(&src, (x + first - lo) as u64);
    }
    dst.into_values()
}

pub fn sumset(x: &NumSet, y: &NumSet, lim: &Limits) -> Result<NumSet> {
    combine(BinOp::Add, x, y, lim)
}

pub fn difference_set(x: &NumSet, y: &NumSet, lim: &Limits) -> Result<NumSet> {
    combine(BinOp::Sub, x, y, lim)
}

pub fn product_set(x: &NumSet, y: &NumSet, lim: &Limits) -> Result<NumSet> {
    combine(BinOp::Mul, x, y, lim)
}

/// `{x / y}`; `Y` must not contain zero.
pub fn ratio_set(x: &NumSet, y: &NumSet, lim: &Limits) -> Result<NumSet> {
    combine(BinOp::Div, x, y, lim)
}

/// `{x²}`.
pub fn square_set(x: &NumSet) -> Result<NumSet> {
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(xs) = x.as_ints() {
        let sq: Option<Vec<i64>> = xs.iter().map(|&v| v.checked_mul(v)).collect();
        if let Some(sq) = sq {
            return Ok(NumSet::from_ints(sq));
        }
    }
    Ok(NumSet::from_scalars(x.iter().map(|v| v.square())))
}

/// `{c·x}`; a zero factor collapses a nonempty set to `{0}`.
pub fn dilate(x: &NumSet, c: &Scalar) -> NumSet {
    if let (Some(xs), Some(ci)) = (x.as_ints(), c.to_i64()) {
        let scaled: Option<Vec<i64>> = xs.iter().map(|&v| v.checked_mul(ci)).collect();
        if let Some(v) = scaled {
            return NumSet::from_ints(v);
        }
    }
    NumSet::from_scalars(x.iter().map(|v| c * &v))
}

/// `{-x}`.
pub fn negate(x: &NumSet) -> NumSet {
    dilate(x, &Scalar::from_int(-1))
}

/// `mS − nS`: the m-fold sumset of `S` minus the n-fold sumset of `S`,
/// folded left as `((S + S) + …) − S − …`.
///
/// Every intermediate step is sized up front from the bound
/// `|kS| ≤ min(|S|^k, k·(max S − min S) + 1)` (the second term only for
/// integer sets), so an infeasible request fails before anything is built.
pub fn iterated_combination(m: u32, n: u32, s: &NumSet, lim: &Limits) -> Result<NumSet> {
    if m + n == 0 {
        return Err(Error::Domain("m + n must be at least 1".into()));
    }
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let size = s.len() as u128;
    let span = s
        .integer_universe()
        .map(|(lo, hi)| (hi as i128 - lo as i128) as u128);
    let mut bound = size;
    for k in 2..=(m + n) as u128 {
        let pairs = bound.saturating_mul(size);
        lim.check_pairs("iterated_combination", pairs)?;
        bound = pairs;
        if let Some(span) = span {
            bound = bound.min(span.saturating_mul(k).saturating_add(1));
        }
    }

    let (mut acc, adds, subs) = if m > 0 {
        (s.clone(), m - 1, n)
    } else {
        (negate(s), 0, n - 1)
    };
    for _ in 0..adds {
        acc = sumset(&acc, s, lim)?;
    }
    for _ in 0..subs {
        acc = difference_set(&acc, s, lim)?;
    }
    Ok(acc)
}

/// `|{(a, b) ∈ A × A : a − b = d}|`.
pub fn rep_count(a: &NumSet, d: &Scalar) -> u64 {
    if let Some(xs) = a.as_ints() {
        let Some(di) = d.to_i64() else { return 0 };
        return xs
            .iter()
            .filter(|&&x| {
                x.checked_sub(di)
                    .is_some_and(|t| xs.binary_search(&t).is_ok())
            })
            .count() as u64;
    }
    a.iter().filter(|x| a.contains(&(x - d))).count() as u64
}

/// Every `d ∈ A − A` with its representation count, in increasing `d`.
pub fn difference_histogram(a: &NumSet, lim: &Limits) -> Result<Vec<(Scalar, u64)>> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = a.len() as u128;
    lim.check_pairs("difference_histogram", n * n)?;
    if let Some(xs) = a.as_ints() {
        let diffs: Option<Vec<i64>> = xs
            .iter()
            .flat_map(|&x| xs.iter().map(move |&y| x.checked_sub(y)))
            .collect();
        if let Some(mut diffs) = diffs {
            diffs.sort_unstable();
            return Ok(run_lengths(diffs.into_iter())
                .map(|(d, c)| (Scalar::from_int(d), c))
                .collect());
        }
    }
    let xs = a.to_vec();
    let mut diffs: Vec<Scalar> = xs
        .iter()
        .flat_map(|x| xs.iter().map(move |y| x - y))
        .collect();
    diffs.sort_unstable();
    Ok(run_lengths(diffs.into_iter()).collect())
}

fn run_lengths<T: PartialEq>(it: impl Iterator<Item = T>) -> impl Iterator<Item = (T, u64)> {
    let mut it = it.peekable();
    std::iter::from_fn(move || {
        let v = it.next()?;
        let mut c = 1;
        while it.peek() == Some(&v) {
            it.next();
            c += 1;
        }
        Some((v, c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> NumSet {
        NumSet::from_ints(v.iter().copied())
    }

    fn rats(v: &[&str]) -> NumSet {
        v.iter().map(|s| s.parse::<Scalar>().unwrap()).collect()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(
            sumset(&ints(&[0, 1]), &ints(&[0, 1]), &lim()).unwrap(),
            ints(&[0, 1, 2])
        );
        let sq = ints(&[0, 1, 4, 9]);
        assert_eq!(
            sumset(&sq, &sq, &lim()).unwrap(),
            ints(&[0, 1, 2, 4, 5, 8, 9, 10, 13, 18])
        );
        let y = rats(&["-1/2", "3", "7/3"]);
        let shifted = sumset(&rats(&["5/4"]), &y, &lim()).unwrap();
        assert_eq!(shifted, rats(&["3/4", "17/4", "43/12"]));
    }

    #[test]
    fn difference_set_examples() {
        let a = ints(&[0, 1, 2, 3]);
        assert_eq!(
            difference_set(&a, &a, &lim()).unwrap(),
            NumSet::from_ints(-3..=3)
        );
        let c = rats(&["2/7"]);
        assert_eq!(difference_set(&c, &c, &lim()).unwrap(), ints(&[0]));
        assert_eq!(
            difference_set(&ints(&[0, 1]), &ints(&[0, 1]), &lim()).unwrap(),
            ints(&[-1, 0, 1])
        );
    }

    #[test]
    fn product_and_ratio_examples() {
        let a = ints(&[1, 2]);
        assert_eq!(product_set(&a, &a, &lim()).unwrap(), ints(&[1, 2, 4]));
        assert_eq!(
            product_set(&ints(&[0]), &ints(&[3, 5, 9]), &lim()).unwrap(),
            ints(&[0])
        );
        assert_eq!(
            product_set(&ints(&[-1, 1]), &ints(&[-1, 1]), &lim()).unwrap(),
            ints(&[-1, 1])
        );
        assert_eq!(ratio_set(&a, &a, &lim()).unwrap(), rats(&["1/2", "1", "2"]));
        let c = rats(&["-5/3"]);
        assert_eq!(ratio_set(&c, &c, &lim()).unwrap(), ints(&[1]));
        let g = ints(&[1, 2, 4]);
        assert_eq!(
            ratio_set(&g, &g, &lim()).unwrap(),
            rats(&["1/4", "1/2", "1", "2", "4"])
        );
    }

    #[test]
    fn ratio_rejects_zero_divisor() {
        let err = ratio_set(&ints(&[1]), &ints(&[0, 1]), &lim()).unwrap_err();
        assert!(matches!(err, Error::ZeroDivisor));
        assert_eq!(err.to_string(), "zero divisor element");
    }

    #[test]
    fn empty_inputs_are_domain_errors() {
        let e = NumSet::empty();
        assert!(matches!(
            sumset(&e, &ints(&[1]), &lim()),
            Err(Error::EmptySet)
        ));
        assert!(matches!(square_set(&e), Err(Error::EmptySet)));
        assert!(matches!(
            iterated_combination(1, 1, &e, &lim()),
            Err(Error::EmptySet)
        ));
    }

    #[test]
    fn feasibility_guard_names_pair_count() {
        let tight = Limits {
            max_pairs: 16,
            ..Limits::default()
        };
        let a = NumSet::from_ints(0..4);
        assert!(sumset(&a, &a, &tight).is_ok());
        let b = NumSet::from_ints(0..5);
        match sumset(&a, &b, &tight).unwrap_err() {
            Error::Infeasible { pairs, limit, .. } => assert_eq!((pairs, limit), (20, 16)),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn square_examples() {
        assert_eq!(
            square_set(&NumSet::from_ints(-2..=2)).unwrap(),
            ints(&[0, 1, 4])
        );
        assert_eq!(
            square_set(&NumSet::from_ints(-3..=3)).unwrap(),
            ints(&[0, 1, 4, 9])
        );
        assert_eq!(square_set(&ints(&[0])).unwrap(), ints(&[0]));
        // symmetric sets containing 0 square to (|X| + 1) / 2 elements
        let x = rats(&["-3/2", "-1", "0", "1", "3/2"]);
        assert_eq!(square_set(&x).unwrap().len(), 3);
    }

    #[test]
    fn square_overflow_falls_back_to_rationals() {
        let big = ints(&[i64::MAX, 3]);
        let sq = square_set(&big).unwrap();
        assert_eq!(sq.len(), 2);
        assert_eq!(sq.integer_universe(), None);
        assert_eq!(sq.max().unwrap(), Scalar::from_int(i64::MAX).square());
    }

    #[test]
    fn dilate_examples() {
        let g = ints(&[1, 2, 4]);
        assert_eq!(dilate(&g, &Scalar::from_int(2)), ints(&[2, 4, 8]));
        assert_eq!(dilate(&g, &Scalar::one()), g);
        assert_eq!(dilate(&g, &Scalar::zero()), ints(&[0]));
        let a = ints(&[0, 2, 7]);
        let d = difference_set(&a, &a, &lim()).unwrap();
        assert_eq!(negate(&d), d);
        assert_eq!(
            dilate(&g, &"1/2".parse().unwrap()),
            rats(&["1/2", "1", "2"])
        );
    }

    #[test]
    fn iterated_combination_examples() {
        let s = ints(&[0, 1, 3]);
        assert_eq!(
            iterated_combination(1, 1, &s, &lim()).unwrap(),
            NumSet::from_ints(-3..=3)
        );
        assert_eq!(iterated_combination(1, 0, &s, &lim()).unwrap(), s);
        assert_eq!(
            iterated_combination(2, 0, &ints(&[0, 1]), &lim()).unwrap(),
            ints(&[0, 1, 2])
        );
        assert_eq!(
            iterated_combination(0, 1, &s, &lim()).unwrap(),
            ints(&[-3, -1, 0])
        );
        assert_eq!(
            iterated_combination(0, 2, &ints(&[0, 1]), &lim()).unwrap(),
            ints(&[-2, -1, 0])
        );
        assert!(matches!(
            iterated_combination(0, 0, &s, &lim()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn iterated_combination_refuses_before_building() {
        let tight = Limits {
            max_pairs: 1000,
            ..Limits::default()
        };
        // rational set: no range bound, so |S|^k grows until the guard trips
        let s: NumSet = (1..=10).map(|k| Scalar::new(1, k).unwrap()).collect();
        assert!(iterated_combination(1, 1, &s, &tight).is_ok());
        assert!(iterated_combination(2, 1, &s, &tight).is_ok());
        assert!(matches!(
            iterated_combination(2, 2, &s, &tight),
            Err(Error::Infeasible { pairs: 10_000, .. })
        ));
    }

    #[test]
    fn rep_count_examples() {
        let a = ints(&[0, 1, 2, 3]);
        assert_eq!(rep_count(&a, &Scalar::from_int(1)), 3);
        assert_eq!(rep_count(&a, &Scalar::zero()), 4);
        assert_eq!(rep_count(&a, &Scalar::from_int(5)), 0);
        assert_eq!(rep_count(&a, &"1/2".parse().unwrap()), 0);
        let r = rats(&["0", "1/2", "1"]);
        assert_eq!(rep_count(&r, &"1/2".parse().unwrap()), 2);
    }

    #[test]
    fn histogram_totals() {
        let a = ints(&[0, 1, 2, 3]);
        let h = difference_histogram(&a, &lim()).unwrap();
        let expected: Vec<(Scalar, u64)> =
            [(-3, 1), (-2, 2), (-1, 3), (0, 4), (1, 3), (2, 2), (3, 1)]
                .iter()
                .map(|&(d, c)| (Scalar::from_int(d), c))
                .collect();
        assert_eq!(h, expected);
    }

    #[test]
    fn dense_shift_path_matches_pairs() {
        // dense enough that shifted ORs are chosen
        let a = NumSet::from_ints((0..3000).filter(|v| v % 3 != 1));
        let b = NumSet::from_ints((100..2000).filter(|v| v % 5 != 2));
        for op in [BinOp::Add, BinOp::Sub] {
            let fast = combine(op, &a, &b, &lim()).unwrap();
            let slow = combine_rational(op, &a, &b, &lim()).unwrap();
            assert_eq!(fast, slow, "{op:?}");
        }
    }

    #[test]
    fn windowed_sweep_matches_pairs() {
        let spread = |n: i64, m: i64| -> Vec<i64> {
            (0..n)
                .map(|i| (i * i * m) % 50_000_000 - 9_000_000)
                .collect()
        };
        let mut xs = spread(400, 7919);
        let mut ys = spread(300, 104_729);
        xs.sort_unstable();
        xs.dedup();
        ys.sort_unstable();
        ys.dedup();
        for op in [BinOp::Add, BinOp::Sub] {
            let expect: std::collections::BTreeSet<i64> = xs
                .iter()
                .flat_map(|&x| {
                    ys.iter()
                        .map(move |&y| if op == BinOp::Add { x + y } else { x - y })
                })
                .collect();
            let got = windowed_sweep(op, &xs, &ys, false);
            assert_eq!(got, expect.into_iter().collect::<Vec<_>>(), "{op:?}");
        }
        let expect: std::collections::BTreeSet<i64> = xs
            .iter()
            .flat_map(|&x| xs.iter().map(move |&y| x + y))
            .collect();
        assert_eq!(
            windowed_sweep(BinOp::Add, &xs, &xs, true),
            expect.into_iter().collect::<Vec<_>>()
        );
    }

    #[test]
    fn sparse_ranges_use_sort_path() {
        let a = ints(&[-4_000_000_000_000, 0, 17, 5_000_000_000]);
        let b = ints(&[3, 1 << 40]);
        for op in [BinOp::Add, BinOp::Sub, BinOp::Mul] {
            assert_eq!(
                combine(op, &a, &b, &lim()).unwrap(),
                combine_rational(op, &a, &b, &lim()).unwrap()
            );
        }
    }

    #[test]
    fn overflowing_ranges_fall_back() {
        let a = ints(&[i64::MAX - 1, i64::MAX]);
        let s = sumset(&a, &a, &lim()).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.integer_universe(), None);
    }
}
