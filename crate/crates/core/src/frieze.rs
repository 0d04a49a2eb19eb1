//! Friezes indexed by pairs `a <= b` of marked points: finite Conway–Coxeter
//! friezes, half-friezes on either side of a fountain, and fountain friezes
//! whose entries across the fountain are left undefined.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arc::Arc;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::triangulation::TriangulationWindow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FriezeKind {
    /// Conway–Coxeter frieze of an `m`-gon.
    FiniteCC { m: usize },
    /// Half-frieze to the right of a fountain at `r`.
    RightHalf { r: i64 },
    /// Half-frieze to the left of a fountain at `l`.
    LeftHalf { l: i64 },
    /// Left and right half-friezes glued at `f`.
    Fountain { f: i64 },
}

impl FriezeKind {
    fn shifted(self, by: i64) -> Self {
        match self {
            FriezeKind::FiniteCC { m } => FriezeKind::FiniteCC { m },
            FriezeKind::RightHalf { r } => FriezeKind::RightHalf { r: r + by },
            FriezeKind::LeftHalf { l } => FriezeKind::LeftHalf { l: l + by },
            FriezeKind::Fountain { f } => FriezeKind::Fountain { f: f + by },
        }
    }

    pub(crate) fn for_window(w: &TriangulationWindow) -> Self {
        match w.fountain() {
            None => FriezeKind::FiniteCC { m: w.point_count() },
            Some(f) if f == w.lo() => FriezeKind::RightHalf { r: f },
            Some(f) if f == w.hi() => FriezeKind::LeftHalf { l: f },
            Some(f) => FriezeKind::Fountain { f },
        }
    }
}

/// Entries `m[a,b]` for `lo <= a <= b <= hi`, minus the hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezeArray<T> {
    kind: FriezeKind,
    lo: i64,
    hi: i64,
    entries: BTreeMap<(i64, i64), T>,
}

pub type IntFrieze = FriezeArray<BigInt>;

impl<T> FriezeArray<T> {
    pub fn kind(&self) -> FriezeKind {
        self.kind
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// True for `(a, b)` with `a < f < b`.
    pub fn in_hole(&self, a: i64, b: i64) -> bool {
        matches!(self.kind, FriezeKind::Fountain { f } if a < f && f < b)
    }

    pub fn get(&self, a: i64, b: i64) -> Result<&T> {
        if self.in_hole(a, b) {
            return Err(Error::FountainCrossing(Arc::finite(a, b)));
        }
        self.entries.get(&(a, b)).ok_or(Error::UndefinedEntry(a, b))
    }

    /// Defined entries `((a, b), m[a,b])`, row by row.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), &T)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    /// Defined entries off the diagonal.
    pub fn off_diagonal(&self) -> impl Iterator<Item = ((i64, i64), &T)> {
        self.entries().filter(|((a, b), _)| a < b)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> FriezeArray<U> {
        FriezeArray {
            kind: self.kind,
            lo: self.lo,
            hi: self.hi,
            entries: self.entries.iter().map(|(&k, v)| (k, f(v))).collect(),
        }
    }

    /// Overwrite one entry; meant for building corrupted fixtures.
    pub fn set(&mut self, a: i64, b: i64, value: T) {
        self.entries.insert((a, b), value);
    }

    pub(crate) fn from_entries(kind: FriezeKind, lo: i64, hi: i64, entries: BTreeMap<(i64, i64), T>) -> Self {
        FriezeArray { kind, lo, hi, entries }
    }
}

impl<T: Clone> FriezeArray<T> {
    /// Quiddity row `m[a,a+2]`. For a Conway–Coxeter frieze the two
    /// wrap-around values are recovered by glide symmetry, giving all `m`.
    pub fn quiddity(&self) -> Vec<T> {
        let mut q: Vec<T> = (self.lo..=self.hi - 2).filter_map(|a| self.get(a, a + 2).ok().cloned()).collect();
        if let FriezeKind::FiniteCC { .. } = self.kind {
            q.extend(self.get(self.lo, self.hi - 1).ok().cloned());
            q.extend(self.get(self.lo + 1, self.hi).ok().cloned());
        }
        q
    }

    /// Cells where `m[a,b] m[a+1,b+1] - m[a+1,b] m[a,b+1]` differs from
    /// `rhs(a, b)`, over every diamond with all four entries defined.
    pub fn diamond_defects(&self, rhs: impl Fn(i64, i64) -> T) -> Vec<(i64, i64)>
    where
        T: PartialEq,
        for<'x> &'x T: Mul<&'x T, Output = T>,
        T: Sub<Output = T>,
    {
        let mut bad = Vec::new();
        for a in self.lo..self.hi {
            for b in a + 1..self.hi {
                let cells = [(a, b), (a + 1, b + 1), (a + 1, b), (a, b + 1)];
                let vals: Vec<&T> = cells.iter().filter_map(|&(i, j)| self.get(i, j).ok()).collect();
                if vals.len() == 4 && (vals[0] * vals[1]) - (vals[2] * vals[3]) != rhs(a, b) {
                    bad.push((a, b));
                }
            }
        }
        bad
    }

    /// Staircase table: one row per `a`, columns `lo..=hi`, hole cells as `·`.
    pub fn text_grid(&self) -> String
    where
        T: fmt::Display,
    {
        let cell = |a: i64, b: i64| -> String {
            if b < a {
                String::new()
            } else if self.in_hole(a, b) {
                "·".to_string()
            } else {
                self.entries.get(&(a, b)).map_or_else(|| "?".to_string(), |v| v.to_string())
            }
        };
        let width = (self.lo..=self.hi)
            .flat_map(|a| (a..=self.hi).map(move |b| (a, b)))
            .map(|(a, b)| cell(a, b).chars().count())
            .chain((self.lo..=self.hi).map(|c| c.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = (self.lo..=self.hi).map(|c| c.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        let pad = |s: &str, n: usize| format!("{}{s}", " ".repeat(n.saturating_sub(s.chars().count())));
        out.push_str(&pad("", label));
        out.push_str(" |");
        for c in self.lo..=self.hi {
            out.push(' ');
            out.push_str(&pad(&c.to_string(), width));
        }
        out.push('\n');
        out.push_str(&"-".repeat(label + 2 + (width + 1) * (self.hi - self.lo + 1) as usize));
        out.push('\n');
        for a in self.lo..self.hi {
            let mut line = format!("{} |", pad(&a.to_string(), label));
            for b in self.lo..=self.hi {
                line.push(' ');
                line.push_str(&pad(&cell(a, b), width));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

pub fn shift_frieze<T: Clone>(f: &FriezeArray<T>, by: i64) -> FriezeArray<T> {
    FriezeArray {
        kind: f.kind.shifted(by),
        lo: f.lo + by,
        hi: f.hi + by,
        entries: f.entries.iter().map(|(&(a, b), v)| ((a + by, b + by), v.clone())).collect(),
    }
}

/// Fill the triangle `lo <= a <= b <= hi` from `q[i] = m[lo+i, lo+i+2]`
/// by anti-diagonals, up to `b - a <= max_gap`.
fn fill(lo: i64, hi: i64, q: &[BigInt], max_gap: i64) -> Result<BTreeMap<(i64, i64), BigInt>> {
    let mut m = BTreeMap::new();
    for a in lo..=hi {
        m.insert((a, a), BigInt::zero());
        if a < hi {
            m.insert((a, a + 1), BigInt::one());
        }
    }
    for (i, v) in q.iter().enumerate() {
        let a = lo + i as i64;
        if !v.is_positive() {
            return Err(Error::NonPositiveEntry(a, a + 2));
        }
        m.insert((a, a + 2), v.clone());
    }
    for d in 3..=max_gap.min(hi - lo) {
        for a in lo..=hi - d {
            let b = a + d;
            let num = &m[&(a, b - 1)] * &m[&(a + 1, b)] - BigInt::one();
            let (v, r) = num.div_rem(&m[&(a + 1, b - 1)]);
            if !r.is_zero() {
                return Err(Error::NonIntegralEntry(a, b));
            }
            if !v.is_positive() {
                return Err(Error::NonPositiveEntry(a, b));
            }
            m.insert((a, b), v);
        }
    }
    Ok(m)
}

/// Builds a frieze from its quiddity row.
///
/// For `RightHalf { r }` the row starts at `m[r, r+2]`; for `LeftHalf { l }`
/// it ends at `m[l-2, l]`; for `FiniteCC { m }` it is the cyclic row of an
/// `m`-gon labelled `0..m`. Fountain friezes need both sides, see
/// [`fountain_frieze_from_quiddities`].
pub fn frieze_from_quiddity(q: &[u64], kind: FriezeKind) -> Result<IntFrieze> {
    let big: Vec<BigInt> = q.iter().map(|&v| BigInt::from(v)).collect();
    let n = q.len() as i64;
    match kind {
        FriezeKind::RightHalf { r } => Ok(FriezeArray { kind, lo: r, hi: r + n + 1, entries: fill(r, r + n + 1, &big, n + 1)? }),
        FriezeKind::LeftHalf { l } => {
            let lo = l - n - 1;
            Ok(FriezeArray { kind, lo, hi: l, entries: fill(lo, l, &big, n + 1)? })
        }
        FriezeKind::FiniteCC { m } => {
            if m < 3 || q.len() != m {
                return Err(Error::DoesNotClose);
            }
            let m = m as i64;
            let strip: Vec<BigInt> = (0..2 * m - 2).map(|i| big[(i % m) as usize].clone()).collect();
            let filled = fill(0, 2 * m - 1, &strip, m - 1)?;
            if (0..=m).any(|a| !filled[&(a, a + m - 1)].is_one()) {
                return Err(Error::DoesNotClose);
            }
            let entries = filled.into_iter().filter(|&((_, b), _)| b < m).collect();
            Ok(FriezeArray { kind, lo: 0, hi: m - 1, entries })
        }
        FriezeKind::Fountain { f } => Err(Error::BadWindow { lo: f, hi: f, fountain: Some(f) }),
    }
}

/// Fountain frieze at `f` from the quiddity rows left and right of `f`.
pub fn fountain_frieze_from_quiddities(left: &[u64], right: &[u64], f: i64) -> Result<IntFrieze> {
    let l = frieze_from_quiddity(left, FriezeKind::LeftHalf { l: f })?;
    let r = frieze_from_quiddity(right, FriezeKind::RightHalf { r: f })?;
    let mut entries = l.entries;
    entries.extend(r.entries);
    Ok(FriezeArray { kind: FriezeKind::Fountain { f }, lo: l.lo, hi: r.hi, entries })
}

/// Integral frieze whose quiddity counts triangles at each vertex.
pub fn frieze_from_window(w: &TriangulationWindow) -> Result<IntFrieze> {
    let mut entries = BTreeMap::new();
    for (u, v) in w.regions() {
        let q = (u..=v - 2).map(|a| w.quiddity_at(a + 1).map(BigInt::from)).collect::<Result<Vec<_>>>()?;
        entries.extend(fill(u, v, &q, v - u)?);
    }
    for p in w.lo()..=w.hi() {
        entries.insert((p, p), BigInt::zero());
    }
    Ok(FriezeArray { kind: FriezeKind::for_window(w), lo: w.lo(), hi: w.hi(), entries })
}

/// Checks that `m[a,b] = 1` exactly when `(a, b)` is an arc of `w`.
pub fn entry_one_iff_arc(f: &IntFrieze, w: &TriangulationWindow) -> Result<()> {
    for a in w.lo()..w.hi() {
        for b in a + 1..=w.hi() {
            if f.in_hole(a, b) {
                continue;
            }
            let one = f.get(a, b)?.is_one();
            if one != w.contains(&Arc::finite(a, b)) {
                return Err(Error::Mismatch(a, b));
            }
        }
    }
    Ok(())
}

/// Number of rows strictly between the rows of ones of a Conway–Coxeter
/// frieze.
pub fn width(f: &IntFrieze) -> Option<usize> {
    match f.kind {
        FriezeKind::FiniteCC { m } => m.checked_sub(3),
        _ => None,
    }
}

#[derive(Serialize, Deserialize)]
struct FriezeRepr<V> {
    kind: FriezeKind,
    lo: i64,
    hi: i64,
    entries: Vec<(i64, i64, V)>,
}

/// `{"kind": {...}, "lo": .., "hi": .., "entries": [[a, b, "value"], ...]}`.
impl Serialize for FriezeArray<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FriezeRepr {
            kind: self.kind,
            lo: self.lo,
            hi: self.hi,
            entries: self.entries.iter().map(|(&(a, b), v)| (a, b, v.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FriezeArray<BigInt> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FriezeRepr::<String>::deserialize(d)?;
        let entries = r
            .entries
            .into_iter()
            .map(|(a, b, v)| v.parse::<BigInt>().map(|v| ((a, b), v)))
            .collect::<std::result::Result<_, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(FriezeArray { kind: r.kind, lo: r.lo, hi: r.hi, entries })
    }
}

impl Serialize for FriezeArray<LaurentPoly> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FriezeRepr {
            kind: self.kind,
            lo: self.lo,
            hi: self.hi,
            entries: self.entries.iter().map(|(&(a, b), v)| (a, b, v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FriezeArray<LaurentPoly> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FriezeRepr::<LaurentPoly>::deserialize(d)?;
        let entries = r.entries.into_iter().map(|(a, b, v)| ((a, b), v)).collect();
        Ok(FriezeArray { kind: r.kind, lo: r.lo, hi: r.hi, entries })
    }
}
