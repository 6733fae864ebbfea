//! Planar point sets: squared-distance sets, slope sets, collinearity, rich
//! lines `a − b = d` of a grid `A × A`, vector sumsets and the origin-line
//! construction `{(s₁s, s₂s)}` used for sum-product lower bounds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use num_integer::Integer;
use serde::Serialize;

use crate::collect::{IntCollector, SortedCollector};
use crate::error::{Error, Result};
use crate::numset::NumSet;
use crate::scalar::Scalar;
use crate::setcalc::{self, BinOp, Limits};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    pub fn quadrant(&self) -> Option<Quadrant> {
        let (px, py) = (self.x.is_positive(), self.y.is_positive());
        let (nx, ny) = (self.x.is_negative(), self.y.is_negative());
        match () {
            _ if px && py => Some(Quadrant::I),
            _ if nx && py => Some(Quadrant::II),
            _ if nx && ny => Some(Quadrant::III),
            _ if px && ny => Some(Quadrant::IV),
            _ => None,
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Open quadrants of the plane, counterclockwise from the positive one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Quadrant {
    I,
    II,
    III,
    IV,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::I, Quadrant::II, Quadrant::III, Quadrant::IV];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// A finite set of points in lexicographic `(x, y)` order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Int(Vec<(i64, i64)>),
    Rat(Vec<Point>),
}

impl PointSet {
    pub fn from_points<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        let mut v: Vec<Point> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self::from_sorted_points(v)
    }

    pub fn from_int_points<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut v: Vec<(i64, i64)> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        PointSet { repr: Repr::Int(v) }
    }

    fn from_sorted_points(v: Vec<Point>) -> Self {
        let ints: Option<Vec<(i64, i64)>> = v
            .iter()
            .map(|p| Some((p.x.to_i64()?, p.y.to_i64()?)))
            .collect();
        match ints {
            Some(ints) => PointSet {
                repr: Repr::Int(ints),
            },
            None => PointSet { repr: Repr::Rat(v) },
        }
    }

    /// `A × B`.
    pub fn cartesian(a: &NumSet, b: &NumSet, lim: &Limits) -> Result<PointSet> {
        lim.check_pairs("cartesian product", a.len() as u128 * b.len() as u128)?;
        if let (Some(xs), Some(ys)) = (a.as_ints(), b.as_ints()) {
            let v = xs
                .iter()
                .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
                .collect();
            return Ok(PointSet { repr: Repr::Int(v) });
        }
        let ys = b.to_vec();
        Ok(PointSet::from_sorted_points(
            a.iter()
                .flat_map(|x| ys.iter().map(move |y| Point::new(x.clone(), y.clone())))
                .collect(),
        ))
    }

    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Int(v) => v.len(),
            Repr::Rat(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = Point> + '_> {
        match &self.repr {
            Repr::Int(v) => Box::new(v.iter().map(|&(x, y)| Point::from_ints(x, y))),
            Repr::Rat(v) => Box::new(v.iter().cloned()),
        }
    }

    pub fn to_vec(&self) -> Vec<Point> {
        self.iter().collect()
    }

    pub fn as_int_points(&self) -> Option<&[(i64, i64)]> {
        match &self.repr {
            Repr::Int(v) => Some(v),
            Repr::Rat(_) => None,
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match &self.repr {
            Repr::Int(v) => match (p.x.to_i64(), p.y.to_i64()) {
                (Some(x), Some(y)) => v.binary_search(&(x, y)).is_ok(),
                _ => false,
            },
            Repr::Rat(v) => v.binary_search(p).is_ok(),
        }
    }

    /// Parses the point file format: one `x,y` per line, `#` comments.
    pub fn parse(text: &str) -> Result<PointSet> {
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            let (x, y) = line
                .split_once(',')
                .ok_or_else(|| err(format!("expected \"x,y\", got {line:?}")))?;
            let x: Scalar = x.parse().map_err(|e: Error| err(e.to_string()))?;
            let y: Scalar = y.parse().map_err(|e: Error| err(e.to_string()))?;
            out.push(Point::new(x, y));
        }
        Ok(PointSet::from_points(out))
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<PointSet> {
        PointSet::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_text(&self) -> String {
        self.iter().map(|p| format!("{},{}\n", p.x, p.y)).collect()
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        PointSet::from_points(iter)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Direction of a line: a rational slope or the vertical direction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(Scalar),
    Infinity,
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(s) => write!(f, "{s}"),
            Slope::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `{|p − q|² : p, q ∈ P}`.
pub fn distance_set(p: &PointSet, lim: &Limits) -> Result<NumSet> {
    if p.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = p.len() as u128;
    lim.check_pairs("distance_set", n * n)?;
    if let Some(pts) = p.as_int_points() {
        if let Some(v) = int_distances(pts, lim) {
            return Ok(NumSet::from_sorted_ints(v));
        }
    }
    let pts = p.to_vec();
    let mut out = SortedCollector::new(n * (n + 1) / 2);
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i..] {
            let dx = &a.x - &b.x;
            let dy = &a.y - &b.y;
            out.push(dx.square() + dy.square());
        }
    }
    Ok(NumSet::from_sorted_scalars(out.finish()))
}

fn int_distances(pts: &[(i64, i64)], lim: &Limits) -> Option<Vec<i64>> {
    let (mut x0, mut x1, mut y0, mut y1) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for &(x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let (sx, sy) = ((x1 as i128 - x0 as i128), (y1 as i128 - y0 as i128));
    let max = i64::try_from(sx * sx + sy * sy).ok()?;
    let n = pts.len() as u128;
    let mut out = IntCollector::new(0, max, n * (n + 1) / 2, lim.max_bitmap_bits);
    for (i, &(ax, ay)) in pts.iter().enumerate() {
        for &(bx, by) in &pts[i..] {
            let (dx, dy) = (ax - bx, ay - by);
            out.push(dx * dx + dy * dy);
        }
    }
    Some(out.finish())
}

/// `Δ(A × A)` computed as `D² + D²` with `D = A − A`.
pub fn product_distance_set(a: &NumSet, lim: &Limits) -> Result<NumSet> {
    let d = setcalc::difference_set(a, a, lim)?;
    let d2 = setcalc::square_set(&d)?;
    setcalc::sumset(&d2, &d2, lim)
}

/// Directions of all pairs of distinct points, vertical pairs included.
pub fn slope_set(p: &PointSet, lim: &Limits) -> Result<BTreeSet<Slope>> {
    if p.len() < 2 {
        return Err(Error::Domain("slope set needs at least two points".into()));
    }
    let n = p.len() as u128;
    lim.check_pairs("slope_set", n * (n - 1) / 2)?;
    let mut out = BTreeSet::new();
    if let Some(pts) = p.as_int_points() {
        let mut vertical = false;
        let mut fracs = SortedCollector::new(n * (n - 1) / 2);
        for (i, &(ax, ay)) in pts.iter().enumerate() {
            for &(bx, by) in &pts[i + 1..] {
                let (dx, dy) = (bx as i128 - ax as i128, by as i128 - ay as i128);
                if dx == 0 {
                    vertical = true;
                } else {
                    let g = dx.gcd(&dy);
                    fracs.push((dy / g * dx.signum(), dx.abs() / g));
                }
            }
        }
        out.extend(
            fracs.finish().into_iter().map(|(num, den)| {
                Slope::Finite(Scalar::new(num, den).expect("positive denominator"))
            }),
        );
        if vertical {
            out.insert(Slope::Infinity);
        }
        return Ok(out);
    }
    let pts = p.to_vec();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            out.insert(slope_between(a, b));
        }
    }
    Ok(out)
}

/// Slope of the line through two distinct points.
pub fn slope_between(a: &Point, b: &Point) -> Slope {
    match (&b.y - &a.y).checked_div(&(&b.x - &a.x)) {
        Some(s) => Slope::Finite(s),
        None => Slope::Infinity,
    }
}

/// Whether every point lies on one line; sets of at most two points are.
pub fn is_collinear(p: &PointSet) -> bool {
    if p.len() <= 2 {
        return true;
    }
    if let Some(pts) = p.as_int_points() {
        let (ox, oy) = (pts[0].0 as i128, pts[0].1 as i128);
        let (ux, uy) = (pts[1].0 as i128 - ox, pts[1].1 as i128 - oy);
        return pts[2..]
            .iter()
            .all(|&(x, y)| ux * (y as i128 - oy) == uy * (x as i128 - ox));
    }
    let pts = p.to_vec();
    let (o, u) = (&pts[0], &pts[1]);
    let (ux, uy) = (&u.x - &o.x, &u.y - &o.y);
    pts[2..]
        .iter()
        .all(|q| &ux * &(&q.y - &o.y) == &uy * &(&q.x - &o.x))
}

/// A line `a − b = d` through the grid `A × A` with its witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct RichLine {
    pub d: Scalar,
    /// Witnesses `(a, b) ∈ A × A` with `a − b = d`.
    pub points: Vec<Point>,
    /// Pigeonhole guarantee `(|A|² − |A|) / (|A − A| − 1)`.
    pub bound: Scalar,
    /// Representation counts of every nonzero difference.
    pub histogram: Vec<(Scalar, u64)>,
}

impl RichLine {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

/// The nonzero difference with the most representations in `A − A`.
///
/// Ties go to the smallest `(|numerator|, denominator)` with the positive
/// sign preferred, which makes the choice deterministic.
pub fn rich_line(a: &NumSet, lim: &Limits) -> Result<RichLine> {
    if a.len() < 2 {
        return Err(Error::Domain("rich line needs |A| >= 2".into()));
    }
    let histogram: Vec<(Scalar, u64)> = setcalc::difference_histogram(a, lim)?
        .into_iter()
        .filter(|(d, _)| !d.is_zero())
        .collect();
    let (d, _) = histogram
        .iter()
        .max_by(|(d1, c1), (d2, c2)| c1.cmp(c2).then_with(|| tie_key(d2).cmp(&tie_key(d1))))
        .expect("|A| >= 2 gives a nonzero difference");
    let d = d.clone();
    let points: Vec<Point> = a
        .iter()
        .filter_map(|b| {
            let top = &b + &d;
            a.contains(&top).then(|| Point::new(top, b))
        })
        .collect::<PointSet>()
        .to_vec();
    let n = a.len() as i64;
    let bound = Scalar::new(n * n - n, histogram.len() as i64)?;
    Ok(RichLine {
        d,
        points,
        bound,
        histogram,
    })
}

fn tie_key(d: &Scalar) -> (num_bigint::BigInt, num_bigint::BigInt, bool) {
    (
        d.numer().magnitude().clone().into(),
        d.denom().clone(),
        d.is_negative(),
    )
}

/// `{p + q : p ∈ P, q ∈ Q}`.
pub fn pointset_sumset(p: &PointSet, q: &PointSet, lim: &Limits) -> Result<PointSet> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptySet);
    }
    lim.check_pairs("pointset_sumset", p.len() as u128 * q.len() as u128)?;
    let same = p == q;
    if let (Some(ps), Some(qs)) = (p.as_int_points(), q.as_int_points()) {
        if let Some(v) = int_point_sumset(ps, qs, same, lim) {
            return Ok(PointSet { repr: Repr::Int(v) });
        }
    }
    let (ps, qs) = (p.to_vec(), q.to_vec());
    let mut out = SortedCollector::new(ps.len() as u128 * qs.len() as u128);
    for (i, a) in ps.iter().enumerate() {
        let start = if same { i } else { 0 };
        for b in &qs[start..] {
            out.push(Point::new(&a.x + &b.x, &a.y + &b.y));
        }
    }
    Ok(PointSet::from_sorted_points(out.finish()))
}

/// Packs each point as `x·W + y` (after translation) with `W` wide enough
/// that key sums never carry between coordinates, so the vector sumset is
/// an integer sumset of keys.
fn int_point_sumset(
    ps: &[(i64, i64)],
    qs: &[(i64, i64)],
    same: bool,
    lim: &Limits,
) -> Option<Vec<(i64, i64)>> {
    let bounds = |v: &[(i64, i64)]| {
        let x0 = v[0].0 as i128;
        let x1 = v[v.len() - 1].0 as i128;
        let y0 = v.iter().map(|p| p.1).min().unwrap() as i128;
        let y1 = v.iter().map(|p| p.1).max().unwrap() as i128;
        (x0, x1, y0, y1)
    };
    let (px0, px1, py0, py1) = bounds(ps);
    let (qx0, qx1, qy0, qy1) = bounds(qs);
    let w = (py1 - py0) + (qy1 - qy0) + 1;
    let top = ((px1 - px0) + (qx1 - qx0)) * w + w - 1;
    if top > i64::MAX as i128 {
        return None;
    }
    let keys = |v: &[(i64, i64)], x0: i128, y0: i128| -> Vec<i64> {
        v.iter()
            .map(|&(x, y)| ((x as i128 - x0) * w + (y as i128 - y0)) as i64)
            .collect()
    };
    let kp = keys(ps, px0, py0);
    let kq = if same { kp.clone() } else { keys(qs, qx0, qy0) };
    let sums = setcalc::combine_ints(BinOp::Add, &kp, &kq, same, lim)?;
    let (x0, y0) = (px0 + qx0, py0 + qy0);
    sums.into_iter()
        .map(|k| {
            let k = k as i128;
            let x = i64::try_from(k / w + x0).ok()?;
            let y = i64::try_from(k % w + y0).ok()?;
            Some((x, y))
        })
        .collect()
}

/// A line through the origin and the points of a construction lying on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OriginLine {
    pub slope: Scalar,
    pub points: usize,
    /// Point counts in quadrants I, II, III, IV.
    pub quadrant_counts: [usize; 4],
}

#[derive(Clone, Debug)]
pub struct SolymosiConstruction {
    pub points: PointSet,
    /// One record per slope in `S/S`, in increasing slope order.
    pub lines: Vec<OriginLine>,
}

/// Builds `P = {(s₁s, s₂s) : s₁, s₂, s ∈ S}` and groups it into lines
/// through the origin, one per ratio in `S/S`.
pub fn solymosi_construct(s: &NumSet, lim: &Limits) -> Result<SolymosiConstruction> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if s.contains_zero() {
        return Err(Error::Domain("0 in S: ratio set undefined".into()));
    }
    let n = s.len() as u128;
    lim.check_pairs("solymosi_construct", n * n * n)?;
    let points = match s.as_ints().and_then(int_construction) {
        Some(v) => PointSet::from_int_points(v),
        None => {
            let xs = s.to_vec();
            let mut pts = Vec::with_capacity((n * n * n) as usize);
            for s1 in &xs {
                for s2 in &xs {
                    for t in &xs {
                        pts.push(Point::new(s1 * t, s2 * t));
                    }
                }
            }
            PointSet::from_points(pts)
        }
    };
    let lines = origin_lines(&points)?;
    Ok(SolymosiConstruction { points, lines })
}

fn int_construction(xs: &[i64]) -> Option<Vec<(i64, i64)>> {
    let mut out = Vec::with_capacity(xs.len().pow(3));
    for &s1 in xs {
        for &s2 in xs {
            for &t in xs {
                out.push((s1.checked_mul(t)?, s2.checked_mul(t)?));
            }
        }
    }
    Some(out)
}

/// Groups the points of `p` (none on the y-axis) by their line through the
/// origin.
pub fn origin_lines(p: &PointSet) -> Result<Vec<OriginLine>> {
    let mut lines: BTreeMap<Scalar, OriginLine> = BTreeMap::new();
    for pt in p.iter() {
        let slope =
            pt.y.checked_div(&pt.x)
                .ok_or_else(|| Error::Precondition("point on axis".into()))?;
        let q = pt
            .quadrant()
            .ok_or_else(|| Error::Precondition("point on axis".into()))?;
        let line = lines.entry(slope.clone()).or_insert_with(|| OriginLine {
            slope,
            points: 0,
            quadrant_counts: [0; 4],
        });
        line.points += 1;
        line.quadrant_counts[q.index()] += 1;
    }
    Ok(lines.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> NumSet {
        NumSet::from_ints(v.iter().copied())
    }

    fn pts(v: &[(i64, i64)]) -> PointSet {
        PointSet::from_int_points(v.iter().copied())
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn slope(s: &str) -> Slope {
        Slope::Finite(s.parse().unwrap())
    }

    #[test]
    fn distance_set_examples() {
        let tri = pts(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(distance_set(&tri, &lim()).unwrap(), ints(&[0, 1, 2]));
        assert_eq!(distance_set(&pts(&[(5, -7)]), &lim()).unwrap(), ints(&[0]));
        let a = NumSet::from_ints(0..4);
        let grid = PointSet::cartesian(&a, &a, &lim()).unwrap();
        assert_eq!(
            distance_set(&grid, &lim()).unwrap(),
            ints(&[0, 1, 2, 4, 5, 8, 9, 10, 13, 18])
        );
    }

    #[test]
    fn rational_distance_set() {
        let p = PointSet::parse("0,0\n1/2,0\n0,1/3\n").unwrap();
        let d = distance_set(&p, &lim()).unwrap();
        let expected: NumSet = ["0", "1/9", "1/4", "13/36"]
            .iter()
            .map(|s| s.parse::<Scalar>().unwrap())
            .collect();
        assert_eq!(d, expected);
    }

    #[test]
    fn product_distance_examples() {
        assert_eq!(
            product_distance_set(&ints(&[0, 1]), &lim()).unwrap(),
            ints(&[0, 1, 2])
        );
        assert_eq!(
            product_distance_set(&ints(&[0, 1, 2]), &lim()).unwrap(),
            ints(&[0, 1, 2, 4, 5, 8])
        );
        assert_eq!(
            product_distance_set(&NumSet::from_ints(0..4), &lim()).unwrap(),
            ints(&[0, 1, 2, 4, 5, 8, 9, 10, 13, 18])
        );
    }

    #[test]
    fn slope_set_examples() {
        let tri = pts(&[(0, 0), (1, 0), (0, 1)]);
        let s = slope_set(&tri, &lim()).unwrap();
        assert_eq!(
            s,
            [slope("0"), slope("-1"), Slope::Infinity]
                .into_iter()
                .collect()
        );
        let vert = slope_set(&pts(&[(2, 0), (2, 5)]), &lim()).unwrap();
        assert_eq!(vert.into_iter().collect::<Vec<_>>(), vec![Slope::Infinity]);
        let line = PointSet::parse("0,0\n1/2,1/3\n3,2\n-6,-4\n").unwrap();
        assert_eq!(slope_set(&line, &lim()).unwrap().len(), 1);
        assert!(slope_set(&pts(&[(1, 1)]), &lim()).is_err());
    }

    #[test]
    fn int_and_rational_slopes_agree() {
        let p = pts(&[(0, 0), (3, 1), (-2, 5), (4, 4), (4, -6), (7, 2)]);
        let rational = {
            let v = p.to_vec();
            let mut out = BTreeSet::new();
            for (i, a) in v.iter().enumerate() {
                for b in &v[i + 1..] {
                    out.insert(slope_between(a, b));
                }
            }
            out
        };
        assert_eq!(slope_set(&p, &lim()).unwrap(), rational);
    }

    #[test]
    fn collinearity() {
        assert!(is_collinear(&pts(&[(0, 0), (1, 1), (2, 2)])));
        assert!(!is_collinear(&pts(&[(0, 0), (1, 0), (0, 1)])));
        assert!(is_collinear(&pts(&[(0, 0), (9, -4)])));
        assert!(is_collinear(&pts(&[])));
        assert!(is_collinear(
            &PointSet::parse("0,1\n0,1/2\n0,-7\n").unwrap()
        ));
        assert!(!is_collinear(
            &PointSet::parse("0,0\n1/2,1/3\n1,2/3\n1,1\n").unwrap()
        ));
    }

    #[test]
    fn rich_line_examples() {
        let r = rich_line(&NumSet::from_ints(0..4), &lim()).unwrap();
        assert_eq!(r.d, Scalar::from_int(1));
        assert_eq!(r.points, pts(&[(1, 0), (2, 1), (3, 2)]).to_vec());
        assert_eq!(r.bound, Scalar::from_int(2));
        assert_eq!(r.histogram.len(), 6);

        let r = rich_line(&ints(&[0, 1]), &lim()).unwrap();
        assert_eq!((r.d.clone(), r.count()), (Scalar::from_int(1), 1));

        let ap = NumSet::from_ints((0..9).map(|k| 5 + 7 * k));
        let r = rich_line(&ap, &lim()).unwrap();
        assert_eq!((r.d.clone(), r.count()), (Scalar::from_int(7), 8));

        assert!(rich_line(&ints(&[4]), &lim()).is_err());
    }

    #[test]
    fn rich_line_tie_break_prefers_small_numerator() {
        // every nonzero difference occurs exactly once
        let a: NumSet = ["0", "1/2", "1/3"]
            .iter()
            .map(|s| s.parse::<Scalar>().unwrap())
            .collect();
        let r = rich_line(&a, &lim()).unwrap();
        assert_eq!(r.d.to_string(), "1/2");
    }

    #[test]
    fn pointset_sumset_examples() {
        let q = pts(&[(3, 4), (-1, 2), (0, 9)]);
        assert_eq!(pointset_sumset(&pts(&[(0, 0)]), &q, &lim()).unwrap(), q);
        let diag = pts(&[(0, 0), (1, 1)]);
        assert_eq!(
            pointset_sumset(&diag, &diag, &lim()).unwrap(),
            pts(&[(0, 0), (1, 1), (2, 2)])
        );
        let c = solymosi_construct(&ints(&[1, 2]), &lim()).unwrap();
        assert!(pointset_sumset(&c.points, &c.points, &lim()).unwrap().len() >= 8);
    }

    #[test]
    fn int_point_sumset_matches_rational() {
        let p = pts(&[(-3, 7), (0, 0), (2, -5), (2, 11), (9, 1)]);
        let q = pts(&[(1, 1), (-4, 0), (6, -2)]);
        for (a, b) in [(&p, &q), (&p, &p), (&q, &p)] {
            let fast = pointset_sumset(a, b, &lim()).unwrap();
            let mut slow: Vec<Point> = Vec::new();
            for x in a.iter() {
                for y in b.iter() {
                    slow.push(Point::new(&x.x + &y.x, &x.y + &y.y));
                }
            }
            assert_eq!(fast, PointSet::from_points(slow));
        }
    }

    #[test]
    fn solymosi_examples() {
        let c = solymosi_construct(&ints(&[1, 2]), &lim()).unwrap();
        assert_eq!(c.points.len(), 7);
        let slopes: Vec<String> = c.lines.iter().map(|l| l.slope.to_string()).collect();
        assert_eq!(slopes, ["1/2", "1", "2"]);
        assert!(c
            .lines
            .iter()
            .all(|l| l.quadrant_counts == [l.points, 0, 0, 0]));

        let c = solymosi_construct(&ints(&[-3]), &lim()).unwrap();
        assert_eq!(c.points, pts(&[(9, 9)]));
        assert_eq!(c.lines.len(), 1);
        assert_eq!(c.lines[0].slope, Scalar::one());

        let s = ints(&[1, 2, 3]);
        let c = solymosi_construct(&s, &lim()).unwrap();
        let ratios = setcalc::ratio_set(&s, &s, &lim()).unwrap();
        assert_eq!(c.lines.len(), 7);
        assert_eq!(
            c.lines.iter().map(|l| l.slope.clone()).collect::<NumSet>(),
            ratios
        );
        assert!(c.lines.iter().all(|l| l.points >= 3));

        assert!(matches!(
            solymosi_construct(&ints(&[0, 1]), &lim()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn parse_points() {
        let p = PointSet::parse("# grid\n1,2\n 1/2 , -3\n1,2\n").unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.contains(&Point::new("1/2".parse().unwrap(), Scalar::from_int(-3))));
        assert!(matches!(
            PointSet::parse("1,2\n3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
