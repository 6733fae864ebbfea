//! Finite sets of exact scalars in canonical order.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite, deduplicated, increasingly ordered set of [`Scalar`]s.
///
/// Sets whose elements are all integers fitting in an `i64` are stored as
/// plain integers; that representation is canonical, so two equal sets always
/// compare equal regardless of how they were built. The integer form is what
/// [`NumSet::integer_universe`] exposes to the fast paths.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumSet {
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Int(Vec<i64>),
    Rat(Vec<Scalar>),
}

impl NumSet {
    pub fn empty() -> Self {
        NumSet {
            repr: Repr::Int(Vec::new()),
        }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut v: Vec<i64> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        NumSet { repr: Repr::Int(v) }
    }

    pub fn from_scalars<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        let mut v: Vec<Scalar> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self::from_sorted_scalars(v)
    }

    /// `v` must be strictly increasing.
    pub(crate) fn from_sorted_ints(v: Vec<i64>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        NumSet { repr: Repr::Int(v) }
    }

    /// `v` must be strictly increasing.
    pub(crate) fn from_sorted_scalars(v: Vec<Scalar>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        let ints: Option<Vec<i64>> = v.iter().map(Scalar::to_i64).collect();
        match ints {
            Some(ints) => NumSet {
                repr: Repr::Int(ints),
            },
            None => NumSet { repr: Repr::Rat(v) },
        }
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

    pub fn iter(&self) -> Iter<'_> {
        match &self.repr {
            Repr::Int(v) => Iter::Int(v.iter()),
            Repr::Rat(v) => Iter::Rat(v.iter()),
        }
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        self.iter().collect()
    }

    /// The elements as integers, when every element is an `i64`.
    pub fn as_ints(&self) -> Option<&[i64]> {
        match &self.repr {
            Repr::Int(v) => Some(v),
            Repr::Rat(_) => None,
        }
    }

    /// Integer bounds `(lo, hi)` valid for every element; `None` unless the
    /// set is nonempty and integral.
    pub fn integer_universe(&self) -> Option<(i64, i64)> {
        match &self.repr {
            Repr::Int(v) if !v.is_empty() => Some((v[0], v[v.len() - 1])),
            _ => None,
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match &self.repr {
            Repr::Int(v) => x.to_i64().is_some_and(|i| v.binary_search(&i).is_ok()),
            Repr::Rat(v) => v.binary_search(x).is_ok(),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Scalar::zero())
    }

    pub fn min(&self) -> Option<Scalar> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<Scalar> {
        match &self.repr {
            Repr::Int(v) => v.last().map(|&i| Scalar::from_int(i)),
            Repr::Rat(v) => v.last().cloned(),
        }
    }

    pub fn is_subset(&self, other: &NumSet) -> bool {
        self.len() <= other.len() && self.iter().all(|x| other.contains(&x))
    }

    /// The set with element `x` removed.
    pub fn without(&self, x: &Scalar) -> NumSet {
        match &self.repr {
            Repr::Int(v) => NumSet::from_sorted_ints(
                v.iter()
                    .copied()
                    .filter(|&i| x.to_i64() != Some(i))
                    .collect(),
            ),
            Repr::Rat(v) => {
                NumSet::from_sorted_scalars(v.iter().filter(|s| *s != x).cloned().collect())
            }
        }
    }

    /// Parses the set file format: one scalar per line, `#` comments, blank
    /// lines skipped, duplicates removed.
    pub fn parse(text: &str) -> Result<NumSet> {
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let s: Scalar = line.parse().map_err(|e: Error| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
            out.push(s);
        }
        Ok(NumSet::from_scalars(out))
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<NumSet> {
        NumSet::parse(&std::fs::read_to_string(path)?)
    }

    /// Renders the set in the set file format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for x in self.iter() {
            s.push_str(&x.to_string());
            s.push('\n');
        }
        s
    }
}

impl FromIterator<Scalar> for NumSet {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        NumSet::from_scalars(iter)
    }
}

impl FromIterator<i64> for NumSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        NumSet::from_ints(iter)
    }
}

impl fmt::Debug for NumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub enum Iter<'a> {
    Int(std::slice::Iter<'a, i64>),
    Rat(std::slice::Iter<'a, Scalar>),
}

impl Iterator for Iter<'_> {
    type Item = Scalar;

    fn next(&mut self) -> Option<Scalar> {
        match self {
            Iter::Int(it) => it.next().map(|&i| Scalar::from_int(i)),
            Iter::Rat(it) => it.next().cloned(),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match self {
            Iter::Int(it) => it.size_hint(),
            Iter::Rat(it) => it.size_hint(),
        }
    }
}

impl ExactSizeIterator for Iter<'_> {}
