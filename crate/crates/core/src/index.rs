//! Index lists, permutation enumeration with inversion counts, and pair
//! classes with the row-keyed update operation.
//!
//! All indices are 1-based.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Longest base accepted by [`enumerate_permutations`].
pub const MAX_PERMUTATION_LEN: usize = 8;

/// A tuple of positive indices.
///
/// Lists built with [`IndexList::ordered`] are strictly increasing; lists built
/// with [`IndexList::new`] may be unordered and may repeat.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IndexList(Vec<usize>);

impl IndexList {
    /// A general list: any order, repetition allowed, every entry ≥ 1.
    pub fn new(items: Vec<usize>) -> Result<Self> {
        if items.contains(&0) {
            return Err(Error::Domain("index lists are 1-based; found 0".into()));
        }
        Ok(IndexList(items))
    }

    /// A strictly increasing list of positive indices.
    pub fn ordered(items: Vec<usize>) -> Result<Self> {
        let list = IndexList::new(items)?;
        if !list.is_ordered() {
            return Err(Error::Domain(format!(
                "index list {list} is not strictly increasing"
            )));
        }
        Ok(list)
    }

    /// A list without repetition, in any order.
    pub fn distinct(items: Vec<usize>) -> Result<Self> {
        let list = IndexList::new(items)?;
        if !list.is_distinct() {
            return Err(Error::Domain(format!("index list {list} repeats an index")));
        }
        Ok(list)
    }

    pub fn empty() -> Self {
        IndexList(Vec::new())
    }

    /// `(lo, lo+1, ..., hi)`; empty when `hi < lo`.
    pub fn range(lo: usize, hi: usize) -> Self {
        assert!(lo >= 1, "index lists are 1-based");
        IndexList((lo..=hi).collect())
    }

    /// `N_n = (1, ..., n)`.
    pub fn first(n: usize) -> Self {
        IndexList::range(1, n)
    }

    pub fn is_ordered(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_distinct(&self) -> bool {
        self.0.iter().all_unique()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    /// Ordered union of two ordered lists.
    pub fn union(&self, other: &IndexList) -> IndexList {
        IndexList(self.0.iter().chain(&other.0).copied().sorted().dedup().collect())
    }

    pub fn intersection(&self, other: &IndexList) -> IndexList {
        IndexList(self.0.iter().copied().filter(|x| other.contains(*x)).collect())
    }

    pub fn difference(&self, other: &IndexList) -> IndexList {
        IndexList(self.0.iter().copied().filter(|x| !other.contains(*x)).collect())
    }

    /// `N_n \ self`.
    pub fn complement(&self, n: usize) -> IndexList {
        IndexList::first(n).difference(self)
    }

    /// The ordered list obtained by inserting `x` at its sorted position.
    pub fn with(&self, x: usize) -> IndexList {
        self.union(&IndexList(vec![x]))
    }

    /// The list with `x` appended at the end, keeping listed order.
    pub fn appended(&self, x: usize) -> IndexList {
        let mut v = self.0.clone();
        v.push(x);
        IndexList(v)
    }
}

impl Deref for IndexList {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for IndexList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl FromStr for IndexList {
    type Err = Error;

    /// Parses `(1,3,4)`; `()` is the empty list. Parentheses are optional.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: format!("{msg} in index list {s:?}"),
        };
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .map(|r| r.strip_suffix(')').ok_or_else(|| bad("missing ')'")))
            .transpose()?
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(IndexList::empty());
        }
        let items = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad("bad index")))
            .collect::<Result<Vec<_>>>()?;
        IndexList::new(items)
    }
}

/// Parses several lists separated by `;`, e.g. `(1,3,4);(1,4,5)`.
pub fn parse_list_of_lists(s: &str) -> Result<Vec<IndexList>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(str::parse).collect()
}

/// One arrangement of a base list together with its inversion count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationWithSign {
    pub arrangement: Vec<usize>,
    pub inversions: usize,
}

impl PermutationWithSign {
    /// `(-1)^inversions`.
    pub fn sign(&self) -> i8 {
        if self.inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Number of pairs `a < b` with `items[a] > items[b]`.
pub fn count_inversions(items: &[usize]) -> usize {
    items
        .iter()
        .enumerate()
        .map(|(a, x)| items[a + 1..].iter().filter(|y| x > y).count())
        .sum()
}

/// All `k!` arrangements of `base` in lexicographic order, each carrying its
/// inversion count relative to the sorted base.
pub fn enumerate_permutations(base: &IndexList) -> Result<Vec<PermutationWithSign>> {
    if base.len() > MAX_PERMUTATION_LEN {
        return Err(Error::Capacity {
            what: "permutation base length",
            got: base.len(),
            limit: MAX_PERMUTATION_LEN,
        });
    }
    if !base.is_distinct() {
        return Err(Error::Domain(format!(
            "permutation base {base} repeats an index"
        )));
    }
    let sorted = base.iter().copied().sorted().collect::<Vec<_>>();
    let k = sorted.len();
    Ok(sorted
        .into_iter()
        .permutations(k)
        .map(|arrangement| {
            let inversions = count_inversions(&arrangement);
            PermutationWithSign {
                arrangement,
                inversions,
            }
        })
        .collect())
}

/// An equivalence class of `(row, col)` pairs with pairwise distinct rows.
///
/// Pairs are kept in insertion order (that order is what gets displayed), but
/// equality compares the canonical form sorted by row.
#[derive(Clone, Debug, Default, Eq)]
pub struct PairClass(Vec<(usize, usize)>);

impl PairClass {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(Error::Domain("pair indices are 1-based; found 0".into()));
        }
        if !pairs.iter().map(|p| p.0).all_unique() {
            return Err(Error::Domain(
                "pair class rows must be pairwise distinct".into(),
            ));
        }
        Ok(PairClass(pairs))
    }

    pub fn empty() -> Self {
        PairClass(Vec::new())
    }

    /// `[(1,1), ..., (t,t)]`.
    pub fn diagonal(t: usize) -> Self {
        PairClass((1..=t).map(|k| (k, k)).collect())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rows(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.0).collect()
    }

    pub fn cols(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.1).collect()
    }

    pub fn has_repeated_column(&self) -> bool {
        !self.0.iter().map(|p| p.1).all_unique()
    }

    pub fn canonical(&self) -> Vec<(usize, usize)> {
        self.0.iter().copied().sorted().collect()
    }

    /// The `←` update: each `(u, v)` of `update`, in order, replaces the pair
    /// whose row is `u` or is appended when no such row exists.
    pub fn arrow(&self, update: &PairClass) -> PairClass {
        let mut out = self.0.clone();
        for &(u, v) in &update.0 {
            match out.iter_mut().find(|p| p.0 == u) {
                Some(p) => p.1 = v,
                None => out.push((u, v)),
            }
        }
        PairClass(out)
    }
}

impl PartialEq for PairClass {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0.iter().map(|(i, j)| format!("({i},{j})")).join(",")
        )
    }
}

impl FromStr for PairClass {
    type Err = Error;

    /// Parses `[(2,1),(3,3)]`; `[]` is the empty class.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: format!("{msg} in pair class {s:?}"),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected [...]"))?
            .trim();
        if inner.is_empty() {
            return Ok(PairClass::empty());
        }
        let mut pairs = Vec::new();
        let mut rest = inner;
        loop {
            let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let (body, tail) = open.split_once(')').ok_or_else(|| bad("missing ')'"))?;
            let (i, j) = body.split_once(',').ok_or_else(|| bad("expected (i,j)"))?;
            let i = i.trim().parse().map_err(|_| bad("bad row index"))?;
            let j = j.trim().parse().map_err(|_| bad("bad column index"))?;
            pairs.push((i, j));
            let tail = tail.trim_start();
            if tail.is_empty() {
                break;
            }
            rest = tail
                .strip_prefix(',')
                .ok_or_else(|| bad("expected ','"))?
                .trim_start();
        }
        PairClass::new(pairs)
    }
}
