//! Desk-scale instance families behind `verify --exhaustive-small`.

use fewdist::geometry::PointSet;
use fewdist::NumSet;

/// All subsets of `universe` whose size lies in `sizes`, ordered by bitmask.
pub fn int_subsets(universe: &[i64], sizes: std::ops::RangeInclusive<usize>) -> Vec<NumSet> {
    (0u32..1 << universe.len())
        .filter(|m| sizes.contains(&(m.count_ones() as usize)))
        .map(|m| {
            NumSet::from_ints(
                (0..universe.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| universe[i]),
            )
        })
        .collect()
}

pub fn range(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).collect()
}

/// Subsets of the `side × side` integer grid with at most `max` points.
pub fn grid_subsets(side: i64, min: usize, max: usize) -> Vec<PointSet> {
    let grid: Vec<(i64, i64)> = (0..side)
        .flat_map(|x| (0..side).map(move |y| (x, y)))
        .collect();
    (0u64..1 << grid.len())
        .filter(|m| (min..=max).contains(&(m.count_ones() as usize)))
        .map(|m| {
            PointSet::from_int_points((0..grid.len()).filter(|i| m >> i & 1 == 1).map(|i| grid[i]))
        })
        .collect()
}

pub fn set_label(a: &NumSet) -> String {
    let items: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn points_label(p: &PointSet) -> String {
    let items: Vec<String> = p.iter().map(|pt| format!("({},{})", pt.x, pt.y)).collect();
    format!("{{{}}}", items.join(","))
}
