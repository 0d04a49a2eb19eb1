//! 01-words attached to fountains, their behaviour under mutation, and the
//! `1 ↦ 10` substitution onto words without consecutive ones.
//!
//! Position `n` (counted from 1) of the x-word of a fountain at `f` records
//! whether the arc `(f, f+n+1)` is present. The y-sequence lists the
//! relative endpoints of the fountain arcs, starting with `y_0 = 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arc::Arc;
use crate::error::{Error, Result};
use crate::triangulation::TriangulationWindow;

/// A finite word over `{0, 1}` whose first letter has index `origin`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinarySeq {
    word: Vec<u8>,
    origin: i64,
}

impl BinarySeq {
    pub fn new(word: Vec<u8>, origin: i64) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&l| l > 1) {
            return Err(Error::InvalidLetter(char::from_digit(u32::from(bad), 10).unwrap_or('?')));
        }
        Ok(BinarySeq { word, origin })
    }

    /// Word starting at index 1.
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        BinarySeq { word: bits.into_iter().map(u8::from).collect(), origin: 1 }
    }

    pub fn with_origin(mut self, origin: i64) -> Self {
        self.origin = origin;
        self
    }

    pub fn letters(&self) -> &[u8] {
        &self.word
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Letter at absolute index `n`.
    pub fn get(&self, n: i64) -> Option<u8> {
        usize::try_from(n - self.origin).ok().and_then(|i| self.word.get(i).copied())
    }

    /// Absolute indices of the ones.
    pub fn ones(&self) -> impl Iterator<Item = i64> + '_ {
        self.word.iter().enumerate().filter(|(_, &l)| l == 1).map(|(i, _)| self.origin + i as i64)
    }

    fn toggled(&self, n: i64) -> Self {
        let mut out = self.clone();
        let i = (n - self.origin) as usize;
        out.word[i] ^= 1;
        out
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.word {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for BinarySeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(BinarySeq { word, origin: 1 })
    }
}

#[derive(Serialize, Deserialize)]
struct SeqRepr {
    word: String,
    origin: i64,
}

impl Serialize for BinarySeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeqRepr { word: self.to_string(), origin: self.origin }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinarySeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SeqRepr::deserialize(d)?;
        let seq: BinarySeq = r.word.parse().map_err(serde::de::Error::custom)?;
        Ok(seq.with_origin(r.origin))
    }
}

/// Strictly increasing positive integers, `values[0]` being `y_0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GapSeq(Vec<i64>);

impl GapSeq {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let increasing = values.windows(2).all(|w| w[0] < w[1]);
        if !increasing || values.first().is_some_and(|&v| v < 1) {
            return Err(Error::NotStrictlyIncreasing);
        }
        Ok(GapSeq(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

/// x-word read off at the point `p`: letter `n` is 1 iff `(p, p+n+1)` is an
/// arc of the window.
pub fn x_sequence_at(w: &TriangulationWindow, p: i64) -> BinarySeq {
    let len = (w.hi() - p - 1).max(0);
    BinarySeq::from_bits((1..=len).map(|n| w.contains(&Arc::finite(p, p + n + 1))))
}

pub fn x_sequence(w: &TriangulationWindow) -> Result<BinarySeq> {
    let f = w.fountain().ok_or(Error::NoFountain)?;
    Ok(x_sequence_at(w, f))
}

pub fn y_sequence(w: &TriangulationWindow) -> Result<GapSeq> {
    Ok(x_to_y(&x_sequence(w)?))
}

pub fn x_to_y(x: &BinarySeq) -> GapSeq {
    GapSeq(std::iter::once(1).chain(x.ones().map(|n| n + 1)).collect())
}

/// Inverse of [`x_to_y`] on words of the given length starting at index 1.
pub fn y_to_x(y: &GapSeq, length: usize) -> BinarySeq {
    BinarySeq::from_bits((1..=length as i64).map(|n| y.0.binary_search(&(n + 1)).is_ok()))
}

/// How a mutation changes the right x-word of a fountain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MutationEffect {
    Unchanged,
    /// The letter at this (relative, 1-based) position toggles.
    FlipAt(i64),
}

/// Predicts the change in the x-word caused by flipping `arc`:
/// a fountain arc `(f, f+y)` clears position `y-1`; an arc joining
/// consecutive fountain endpoints sets position `ℓ-1`, `ℓ` being the apex of
/// its inner triangle; every other arc leaves the word alone.
pub fn predict_mutation_effect(w: &TriangulationWindow, arc: Arc) -> Result<MutationEffect> {
    let f = w.fountain().ok_or(Error::NoFountain)?;
    let quad = w.quadrilateral_of(arc)?;
    let (a, b) = arc.ends().expect("window arcs are finite");
    if a == f {
        return Ok(MutationEffect::FlipAt(b - f - 1));
    }
    let (_, a2) = w.fountain_arc_sets()?;
    if a2.contains(&arc) {
        return Ok(MutationEffect::FlipAt(quad.inner_apex - f - 1));
    }
    Ok(MutationEffect::Unchanged)
}

/// Apply a predicted effect to a word.
pub fn apply_effect(x: &BinarySeq, effect: MutationEffect) -> BinarySeq {
    match effect {
        MutationEffect::Unchanged => x.clone(),
        MutationEffect::FlipAt(n) => x.toggled(n),
    }
}

/// Letter-by-letter comparison of two words over their common index range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordComparison {
    /// Number of indices present in both words.
    pub overlap: usize,
    /// Absolute indices in the overlap where the words disagree.
    pub differences: Vec<i64>,
    /// Letters of the first word outside the overlap.
    pub left_tail: usize,
    /// Letters of the second word outside the overlap.
    pub right_tail: usize,
}

pub fn compare_words(s: &BinarySeq, t: &BinarySeq) -> WordComparison {
    let start = s.origin.max(t.origin);
    let end = (s.origin + s.len() as i64).min(t.origin + t.len() as i64);
    let overlap = (end - start).max(0) as usize;
    let differences = (start..end).filter(|&n| s.get(n) != t.get(n)).collect();
    WordComparison {
        overlap,
        differences,
        left_tail: s.len() - overlap,
        right_tail: t.len() - overlap,
    }
}

/// Window-scale stand-in for "differ in finitely many places": the words
/// disagree in at most `threshold` positions of their overlap.
pub fn sequences_differ_finitely(s: &BinarySeq, t: &BinarySeq, threshold: usize) -> bool {
    compare_words(s, t).differences.len() <= threshold
}

pub fn has_consecutive_ones(s: &BinarySeq) -> bool {
    s.word.windows(2).any(|w| w == [1, 1])
}

/// No two consecutive fountain endpoints `y_n, y_{n+1}` with `n ≥ 1` are
/// adjacent, i.e. the x-word has no consecutive ones.
pub fn is_special_window(w: &TriangulationWindow) -> Result<bool> {
    Ok(!has_consecutive_ones(&x_sequence(w)?))
}

/// Like [`specialize`], also returning the positions that were cleared.
pub fn specialize_traced(w: &TriangulationWindow) -> Result<(TriangulationWindow, Vec<i64>)> {
    let f = w.fountain().ok_or(Error::NoFountain)?;
    let mut cur = w.clone();
    let mut cleared = Vec::new();
    loop {
        let x = x_sequence(&cur)?;
        let Some(i) = x.word.windows(2).position(|p| p == [1, 1]) else {
            return Ok((cur, cleared));
        };
        // later letter of the pair, relative position i+2
        let pos = x.origin + i as i64 + 1;
        let arc = Arc::finite(f, f + pos + 1);
        if f + pos + 1 == cur.hi() {
            cur = cur.extend_right()?;
        }
        cur = cur.flip(arc)?;
        cleared.push(pos);
    }
}

/// Removes consecutive ones from the right x-word by mutating at the later
/// fountain arc of each adjacent pair. When that arc is the window's closing
/// arc the window first grows by one point on the right.
pub fn specialize(w: &TriangulationWindow) -> Result<TriangulationWindow> {
    specialize_traced(w).map(|(out, _)| out)
}

/// `(left x-word, right x-word)` of a fountain window.
pub fn psi(w: &TriangulationWindow) -> Result<(BinarySeq, BinarySeq)> {
    let f = w.fountain().ok_or(Error::NoFountain)?;
    Ok(psi_at(w, f))
}

/// Both x-words read at an arbitrary designated point `p`.
pub fn psi_at(w: &TriangulationWindow, p: i64) -> (BinarySeq, BinarySeq) {
    (x_sequence_at(&w.mirror(), -p), x_sequence_at(w, p))
}

pub fn penrose_encode(s: &BinarySeq) -> BinarySeq {
    let word = s.word.iter().flat_map(|&l| if l == 1 { vec![1, 0] } else { vec![0] }).collect();
    BinarySeq { word, origin: s.origin }
}

/// Inverse of [`penrose_encode`]. A trailing bare `1` is read as a truncated
/// `10`.
pub fn penrose_decode(t: &BinarySeq) -> Result<BinarySeq> {
    let mut word = Vec::with_capacity(t.len());
    let mut i = 0;
    while i < t.word.len() {
        match (t.word[i], t.word.get(i + 1)) {
            (0, _) => {
                word.push(0);
                i += 1;
            }
            (_, Some(1)) => return Err(Error::ConsecutiveOnes(t.origin + i as i64)),
            (_, _) => {
                word.push(1);
                i += 2;
            }
        }
    }
    Ok(BinarySeq { word, origin: t.origin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::fixtures::{fan, fin, running};

    fn word(s: &str) -> BinarySeq {
        s.parse().unwrap()
    }

    #[test]
    fn x_and_y_of_running_example() {
        let w = running();
        assert_eq!(x_sequence(&w).unwrap(), word("0100011"));
        assert_eq!(y_sequence(&w).unwrap().values(), &[1, 3, 7, 8]);
        assert_eq!(x_sequence(&fan(0, 5)).unwrap(), word("1111"));
        assert_eq!(y_sequence(&fan(0, 5)).unwrap().values(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn conversions() {
        assert_eq!(x_to_y(&word("10000100101")).values(), &[1, 2, 7, 10, 12]);
        assert_eq!(x_to_y(&word("0100011")).values(), &[1, 3, 7, 8]);
        assert_eq!(x_to_y(&word("0000")).values(), &[1]);
        let y = GapSeq::new(vec![1, 3, 7, 8]).unwrap();
        assert_eq!(y_to_x(&y, 7), word("0100011"));
        assert!(GapSeq::new(vec![1, 3, 3]).is_err());
    }

    #[test]
    fn mutation_predictions() {
        let w = running();
        let e = predict_mutation_effect(&w, fin(0, 3)).unwrap();
        assert_eq!(e, MutationEffect::FlipAt(2));
        assert_eq!(apply_effect(&x_sequence(&w).unwrap(), e), word("0000011"));
        assert_eq!(x_sequence(&w.flip(fin(0, 3)).unwrap()).unwrap(), word("0000011"));

        let e = predict_mutation_effect(&w, fin(3, 7)).unwrap();
        assert_eq!(e, MutationEffect::FlipAt(4));
        assert_eq!(x_sequence(&w.flip(fin(3, 7)).unwrap()).unwrap(), word("0101011"));

        assert_eq!(predict_mutation_effect(&w, fin(3, 5)).unwrap(), MutationEffect::Unchanged);
        assert_eq!(predict_mutation_effect(&w, fin(1, 3)).unwrap(), MutationEffect::FlipAt(1));
        assert_eq!(predict_mutation_effect(&w, fin(6, 7)), Err(Error::NotMutableHere(fin(6, 7))));
    }

    #[test]
    fn comparisons() {
        let c = compare_words(&word("0100011"), &word("0000011"));
        assert_eq!(c.differences, vec![2]);
        assert!(sequences_differ_finitely(&word("0100011"), &word("0000011"), 1));
        let s = word("0100011");
        assert_eq!(compare_words(&s, &s).differences.len(), 0);
        let alt = BinarySeq::from_bits((0..100).map(|i| i % 2 == 0));
        let zero = BinarySeq::from_bits((0..100).map(|_| false));
        assert_eq!(compare_words(&alt, &zero).differences.len(), 50);
        assert!(!sequences_differ_finitely(&alt, &zero, 49));

        let c = compare_words(&word("0100011"), &word("01000101"));
        assert_eq!((c.overlap, c.left_tail, c.right_tail), (7, 0, 1));
        assert_eq!(c.differences, vec![7]);
    }

    #[test]
    fn specialization() {
        let w = running();
        assert!(!is_special_window(&w).unwrap());
        let (s, cleared) = specialize_traced(&w).unwrap();
        assert_eq!(cleared, vec![7]);
        let x = x_sequence(&s).unwrap();
        assert!(!has_consecutive_ones(&x));
        assert_eq!(&x.letters()[..7], word("0100010").letters());
        assert!(is_special_window(&s).unwrap());

        let (s, cleared) = specialize_traced(&fan(0, 5)).unwrap();
        assert_eq!(cleared, vec![2, 4]);
        let c = compare_words(&word("1111"), &x_sequence(&s).unwrap());
        assert_eq!(c.differences, vec![2, 4]);

        let sq = TriangulationWindow::new(0, 3, None, [fin(0, 2), fin(0, 3)]).unwrap();
        assert_eq!(specialize(&sq), Err(Error::NoFountain));
    }

    #[test]
    fn psi_examples() {
        let (l, r) = psi(&fan(-5, 5)).unwrap();
        assert_eq!((l, r), (word("1111"), word("1111")));

        let w = TriangulationWindow::new(-5, 3, Some(0), [fin(-5, 0), fin(-3, 0), fin(-5, -3), fin(-3, -1), fin(0, 2), fin(0, 3)]).unwrap();
        let (l, r) = psi(&w).unwrap();
        let (ml, mr) = psi(&w.mirror()).unwrap();
        assert_eq!((ml, mr), (r, l));
    }

    #[test]
    fn penrose_examples() {
        assert_eq!(penrose_encode(&word("110")), word("10100"));
        assert_eq!(penrose_decode(&word("10100")).unwrap(), word("110"));
        assert_eq!(penrose_decode(&word("110")), Err(Error::ConsecutiveOnes(1)));
        assert_eq!(penrose_decode(&word("0101")).unwrap(), word("011"));
        assert!(!has_consecutive_ones(&word("0101")));
        assert!(has_consecutive_ones(&word("0110")));
        assert!(!has_consecutive_ones(&word("")));
    }

    #[test]
    fn seq_json_shape() {
        let s = serde_json::to_string(&word("0100011")).unwrap();
        assert_eq!(s, r#"{"word":"0100011","origin":1}"#);
        let back: BinarySeq = serde_json::from_str(&s).unwrap();
        assert_eq!(back, word("0100011"));
    }
}
