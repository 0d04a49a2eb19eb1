//! Arcs of the completed ∞-gon and the dictionary with graded maximal
//! Cohen–Macaulay modules over `S = C[x, y]/(x²)`, graded by `deg x = 1`,
//! `deg y = -1`.
//!
//! Every indecomposable module is one of `S(j)`, `(x, y^k)(j)` or `C[y](j)`,
//! and each one is matched with exactly one arc:
//!
//! | arc          | module                  |
//! |--------------|-------------------------|
//! | `(a, a+1)`   | `S(-a)`                 |
//! | `(a, b)`     | `(x, y^{b-a-1})(1-b)`   |
//! | `(a, ∞)`     | `C[y](-a)`              |
//!
//! Shifts follow `M(j)_d = M_{d+j}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A marked point: an integer or the accumulation point `∞`.
///
/// `Infinity` is declared last so the derived order puts it above every
/// integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MarkedPoint {
    Finite(i64),
    Infinity,
}

impl MarkedPoint {
    pub fn finite(self) -> Option<i64> {
        match self {
            MarkedPoint::Finite(v) => Some(v),
            MarkedPoint::Infinity => None,
        }
    }
}

impl From<i64> for MarkedPoint {
    fn from(v: i64) -> Self {
        MarkedPoint::Finite(v)
    }
}

impl fmt::Display for MarkedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkedPoint::Finite(v) => write!(f, "{v}"),
            MarkedPoint::Infinity => f.write_str("∞"),
        }
    }
}

impl Serialize for MarkedPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MarkedPoint::Finite(v) => s.serialize_i64(*v),
            MarkedPoint::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for MarkedPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(MarkedPoint::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(MarkedPoint::Infinity),
            Raw::Str(s) => Err(de::Error::custom(format!("expected integer or \"inf\", got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcKind {
    Boundary,
    FiniteInternal,
    Infinite,
}

/// An arc `(a, b)` with `a < b`; `a` is always finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    a: i64,
    b: MarkedPoint,
}

impl Arc {
    pub fn new(a: i64, b: impl Into<MarkedPoint>) -> Result<Self> {
        let b = b.into();
        if MarkedPoint::Finite(a) < b {
            Ok(Arc { a, b })
        } else {
            Err(Error::InvalidArc { a: a.to_string(), b: b.to_string() })
        }
    }

    /// Finite arc `(a, b)`.
    ///
    /// Panics if `a >= b`; use [`Arc::new`] for untrusted input.
    pub fn finite(a: i64, b: i64) -> Self {
        assert!(a < b, "arc ({a}, {b}) needs a < b");
        Arc { a, b: MarkedPoint::Finite(b) }
    }

    pub fn infinite(a: i64) -> Self {
        Arc { a, b: MarkedPoint::Infinity }
    }

    pub fn boundary(a: i64) -> Self {
        Arc::finite(a, a + 1)
    }

    pub fn start(&self) -> i64 {
        self.a
    }

    pub fn end(&self) -> MarkedPoint {
        self.b
    }

    /// Both endpoints, if the arc is finite.
    pub fn ends(&self) -> Option<(i64, i64)> {
        self.b.finite().map(|b| (self.a, b))
    }

    pub fn kind(&self) -> ArcKind {
        match self.b {
            MarkedPoint::Infinity => ArcKind::Infinite,
            MarkedPoint::Finite(b) if b == self.a + 1 => ArcKind::Boundary,
            MarkedPoint::Finite(_) => ArcKind::FiniteInternal,
        }
    }

    pub fn is_boundary(&self) -> bool {
        self.kind() == ArcKind::Boundary
    }

    pub fn is_infinite(&self) -> bool {
        self.b == MarkedPoint::Infinity
    }

    pub fn has_endpoint(&self, v: i64) -> bool {
        self.a == v || self.b == MarkedPoint::Finite(v)
    }

    /// Translate both finite endpoints by `by`.
    pub fn shifted(&self, by: i64) -> Self {
        let b = match self.b {
            MarkedPoint::Finite(b) => MarkedPoint::Finite(b + by),
            MarkedPoint::Infinity => MarkedPoint::Infinity,
        };
        Arc { a: self.a + by, b }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.a)?;
        t.serialize_element(&self.b)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a, b) = <(i64, MarkedPoint)>::deserialize(d)?;
        Arc::new(a, b).map_err(de::Error::custom)
    }
}

pub fn classify_arc(arc: Arc) -> ArcKind {
    arc.kind()
}

/// Strict interleaving `a < c < b < d` or `c < a < d < b`, with `∞` as the
/// largest point. Two infinite arcs never cross.
pub fn crossing(p: Arc, q: Arc) -> bool {
    let (a, b) = (MarkedPoint::Finite(p.a), p.b);
    let (c, d) = (MarkedPoint::Finite(q.a), q.b);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Symbolic descriptor of an indecomposable graded MCM module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GradedModuleDesc {
    /// `S(j)`
    Projective { j: i64 },
    /// `(x, y^k)(j)`, `k ≥ 1`
    Ideal { k: i64, j: i64 },
    /// `C[y](j)`
    #[serde(rename = "cy")]
    CY { j: i64 },
}

impl GradedModuleDesc {
    pub fn validate(self) -> Result<Self> {
        match self {
            GradedModuleDesc::Ideal { k, .. } if k < 1 => Err(Error::InvalidModule(self)),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for GradedModuleDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GradedModuleDesc::Projective { j } => write!(f, "S({j})"),
            GradedModuleDesc::Ideal { k, j } => write!(f, "(x,y^{k})({j})"),
            GradedModuleDesc::CY { j } => write!(f, "C[y]({j})"),
        }
    }
}

pub fn arc_to_module(arc: Arc) -> GradedModuleDesc {
    match arc.b {
        MarkedPoint::Infinity => GradedModuleDesc::CY { j: -arc.a },
        MarkedPoint::Finite(b) if b == arc.a + 1 => GradedModuleDesc::Projective { j: -arc.a },
        MarkedPoint::Finite(b) => GradedModuleDesc::Ideal { k: b - arc.a - 1, j: 1 - b },
    }
}

pub fn module_to_arc(desc: GradedModuleDesc) -> Result<Arc> {
    match desc.validate()? {
        GradedModuleDesc::Projective { j } => Ok(Arc::finite(-j, 1 - j)),
        GradedModuleDesc::Ideal { k, j } => Ok(Arc::finite(-j - k, 1 - j)),
        GradedModuleDesc::CY { j } => Ok(Arc::infinite(-j)),
    }
}

/// Internal degree of `y^k` inside `(x, y^k)(j)`, i.e. `-k - j`.
///
/// This is zero exactly for the arcs `(0, b)`.
pub fn min_y_degree(desc: GradedModuleDesc) -> Result<i64> {
    match desc.validate()? {
        GradedModuleDesc::Ideal { k, j } => Ok(-k - j),
        other => Err(Error::NotIdeal(other)),
    }
}

/// Polynomial in the commuting variables `x`, `y` with small integer
/// coefficients, keyed by `(deg_x, deg_y)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BiPoly(BTreeMap<(u32, u32), i64>);

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn monomial(coeff: i64, x: u32, y: u32) -> Self {
        let mut p = BiPoly::zero();
        if coeff != 0 {
            p.0.insert((x, y), coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.0.iter().map(|(&(x, y), &c)| (x, y, c))
    }

    fn add_term(&mut self, x: u32, y: u32, c: i64) {
        let e = self.0.entry((x, y)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&(x, y));
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (x, y, c) in other.terms() {
            out.add_term(x, y, c);
        }
        out
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (x1, y1, c1) in self.terms() {
            for (x2, y2, c2) in other.terms() {
                out.add_term(x1 + x2, y1 + y2, c1 * c2);
            }
        }
        out
    }

    /// Degree under `deg x = 1`, `deg y = -1`, if homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.0.keys().map(|&(x, y)| x as i64 - y as i64);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (x, y, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if c.abs() != 1 || (x == 0 && y == 0) {
                parts.push(c.abs().to_string());
            }
            match x {
                0 => {}
                1 => parts.push("x".into()),
                n => parts.push(format!("x^{n}")),
            }
            match y {
                0 => {}
                1 => parts.push("y".into()),
                n => parts.push(format!("y^{n}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

pub type BiMatrix = Vec<Vec<BiPoly>>;

fn mat_mul(p: &BiMatrix, q: &BiMatrix) -> BiMatrix {
    let n = p.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(BiPoly::zero(), |acc, l| acc.add(&p[i][l].mul(&q[l][j]))))
                .collect()
        })
        .collect()
}

/// Graded matrix factorization
/// `F_src --B--> F_mid --A--> F_tgt` of `x²`, each free module a sum of
/// shifted copies `C[x, y](s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub a: BiMatrix,
    pub b: BiMatrix,
    pub source_shifts: Vec<i64>,
    pub middle_shifts: Vec<i64>,
    pub target_shifts: Vec<i64>,
}

impl MatrixFactorization {
    pub fn size(&self) -> usize {
        self.a.len()
    }

    /// `A·B = B·A = x²·I`, checked by polynomial multiplication.
    pub fn check_product(&self) -> bool {
        let n = self.size();
        let expected: BiMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BiPoly::monomial(1, 2, 0) } else { BiPoly::zero() })
                    .collect()
            })
            .collect();
        mat_mul(&self.a, &self.b) == expected && mat_mul(&self.b, &self.a) == expected
    }

    /// Every nonzero entry is homogeneous of the degree forced by the shifts,
    /// so both maps are degree-0 maps of graded free modules.
    pub fn is_graded(&self) -> bool {
        let ok = |m: &BiMatrix, from: &[i64], to: &[i64]| {
            m.iter().enumerate().all(|(i, row)| {
                row.iter().enumerate().all(|(j, e)| {
                    e.is_zero() || e.degree() == Some(to[i] - from[j])
                })
            })
        };
        ok(&self.b, &self.source_shifts, &self.middle_shifts)
            && ok(&self.a, &self.middle_shifts, &self.target_shifts)
    }
}

pub fn matrix_factorization(desc: GradedModuleDesc) -> Result<MatrixFactorization> {
    let shift = |v: &[i64], j: i64| v.iter().map(|s| s + j).collect::<Vec<_>>();
    Ok(match desc.validate()? {
        GradedModuleDesc::Projective { j } => MatrixFactorization {
            a: vec![vec![BiPoly::monomial(1, 2, 0)]],
            b: vec![vec![BiPoly::monomial(1, 0, 0)]],
            source_shifts: shift(&[-2], j),
            middle_shifts: shift(&[-2], j),
            target_shifts: shift(&[0], j),
        },
        GradedModuleDesc::CY { j } => MatrixFactorization {
            a: vec![vec![BiPoly::monomial(1, 1, 0)]],
            b: vec![vec![BiPoly::monomial(1, 1, 0)]],
            source_shifts: shift(&[-2], j),
            middle_shifts: shift(&[-1], j),
            target_shifts: shift(&[0], j),
        },
        GradedModuleDesc::Ideal { k, j } => {
            let yk = k as u32;
            let m = vec![
                vec![BiPoly::monomial(1, 1, 0), BiPoly::monomial(1, 0, yk)],
                vec![BiPoly::zero(), BiPoly::monomial(-1, 1, 0)],
            ];
            MatrixFactorization {
                a: m.clone(),
                b: m,
                source_shifts: shift(&[-2, k - 1], j),
                middle_shifts: shift(&[-1, k], j),
                target_shifts: shift(&[0, k + 1], j),
            }
        }
    })
}

/// Which of the three extension families produces `0 → N → E → M → 0`.
fn extension_family(m: Arc, n: Arc) -> Option<Vec<Arc>> {
    match (m.ends(), n.ends()) {
        (Some((c, d)), Some((a, b))) if a < c && c < b && b < d => {
            Some(vec![Arc::finite(a, d), Arc::finite(c, b)])
        }
        (Some((a, b)), Some((c, d))) if a < c && c < b && b < d => {
            Some(vec![Arc::finite(a, c), Arc::finite(b, d)])
        }
        // 0 → (b,∞) → (a,b) ⊕ (c,∞) → (a,c) → 0
        (Some((a, c)), None) if a < n.a && n.a < c => {
            Some(vec![Arc::finite(a, n.a), Arc::infinite(c)])
        }
        // 0 → (a,c) → (a,∞) ⊕ (b,c) → (b,∞) → 0
        (None, Some((a, c))) if a < m.a && m.a < c => {
            Some(vec![Arc::infinite(a), Arc::finite(m.a, c)])
        }
        // 0 → (b,∞) → (a,b) → (a,∞) → 0
        (None, None) if m.a < n.a => Some(vec![Arc::finite(m.a, n.a)]),
        _ => None,
    }
}

/// `dim Ext¹(M, N)`, which is 0 or 1.
pub fn ext_dimension(m: Arc, n: Arc) -> u8 {
    u8::from(extension_family(m, n).is_some())
}

/// Middle term of the nonsplit extension `0 → N → E → M → 0`, sorted.
pub fn extension_middle(m: Arc, n: Arc) -> Result<Vec<Arc>> {
    let mut mid = extension_family(m, n).ok_or(Error::NoExtension { m, n })?;
    mid.sort();
    Ok(mid)
}

/// A three-term sequence `0 → start → middle → end → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortExactSequence {
    pub start: Arc,
    pub middle: Vec<Arc>,
    pub end: Arc,
}

fn require_internal(arc: Arc) -> Result<(i64, i64)> {
    match (arc.kind(), arc.ends()) {
        (ArcKind::FiniteInternal, Some(ends)) => Ok(ends),
        _ => Err(Error::NoTranslate(arc)),
    }
}

/// `τ(a, b) = (a-1, b-1)`.
pub fn ar_translate(arc: Arc) -> Result<Arc> {
    let (a, b) = require_internal(arc)?;
    Ok(Arc::finite(a - 1, b - 1))
}

/// `τ⁻¹(a, b) = (a+1, b+1)`.
pub fn ar_translate_inverse(arc: Arc) -> Result<Arc> {
    let (a, b) = require_internal(arc)?;
    Ok(Arc::finite(a + 1, b + 1))
}

/// The almost split sequence ending at `(a, b)`. Boundary arcs in the middle
/// are kept: they are the projective-injective objects.
pub fn ar_sequence(arc: Arc) -> Result<ShortExactSequence> {
    let (a, b) = require_internal(arc)?;
    Ok(ShortExactSequence {
        start: Arc::finite(a - 1, b - 1),
        middle: vec![Arc::finite(a - 1, b), Arc::finite(a, b - 1)],
        end: arc,
    })
}

/// `0 → (a,b) → (a-1,a) ⊕ (b-1,b) → (a-1,b-1) → 0`.
pub fn exchange_sequence(arc: Arc) -> Result<ShortExactSequence> {
    let (a, b) = require_internal(arc)?;
    Ok(ShortExactSequence {
        start: arc,
        middle: vec![Arc::finite(a - 1, a), Arc::finite(b - 1, b)],
        end: Arc::finite(a - 1, b - 1),
    })
}

/// Targets of the irreducible maps out of `arc` in the AR-quiver.
///
/// Finite arcs map to `(a+1, b)` and `(a, b+1)` (the former only when it is
/// still an arc); infinite arcs only to `(a+1, ∞)`. No irreducible map joins
/// the finite and infinite components.
pub fn irreducible_successors(arc: Arc) -> Vec<Arc> {
    match arc.ends() {
        None => vec![Arc::infinite(arc.a + 1)],
        Some((a, b)) => {
            let mut out = Vec::with_capacity(2);
            if a + 1 < b {
                out.push(Arc::finite(a + 1, b));
            }
            out.push(Arc::finite(a, b + 1));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(a: i64, b: i64) -> Arc {
        Arc::finite(a, b)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_arc(fin(2, 3)), ArcKind::Boundary);
        assert_eq!(classify_arc(fin(0, 3)), ArcKind::FiniteInternal);
        assert_eq!(classify_arc(Arc::infinite(5)), ArcKind::Infinite);
    }

    #[test]
    fn arc_validation() {
        assert!(Arc::new(3, 3).is_err());
        assert!(Arc::new(4, 3).is_err());
        assert_eq!(Arc::new(3, MarkedPoint::Infinity).unwrap(), Arc::infinite(3));
        assert!(MarkedPoint::Infinity > MarkedPoint::Finite(i64::MAX));
    }

    #[test]
    fn crossing_examples() {
        assert!(crossing(fin(0, 3), fin(1, 4)));
        assert!(!crossing(fin(0, 3), fin(1, 3)));
        assert!(crossing(fin(1, 4), Arc::infinite(2)));
        assert!(!crossing(Arc::infinite(1), Arc::infinite(2)));
        assert!(!crossing(fin(0, 3), fin(0, 3)));
    }

    #[test]
    fn dictionary_examples() {
        assert_eq!(arc_to_module(fin(0, 3)), GradedModuleDesc::Ideal { k: 2, j: -2 });
        assert_eq!(arc_to_module(fin(2, 3)), GradedModuleDesc::Projective { j: -2 });
        assert_eq!(arc_to_module(Arc::infinite(5)), GradedModuleDesc::CY { j: -5 });
        assert_eq!(module_to_arc(GradedModuleDesc::Projective { j: 3 }).unwrap(), fin(-3, -2));
        assert_eq!(module_to_arc(GradedModuleDesc::Ideal { k: 2, j: -2 }).unwrap(), fin(0, 3));
        assert_eq!(module_to_arc(GradedModuleDesc::CY { j: 0 }).unwrap(), Arc::infinite(0));
        assert!(module_to_arc(GradedModuleDesc::Ideal { k: 0, j: 0 }).is_err());
    }

    #[test]
    fn min_y_degree_examples() {
        assert_eq!(min_y_degree(GradedModuleDesc::Ideal { k: 2, j: -2 }).unwrap(), 0);
        assert_eq!(min_y_degree(GradedModuleDesc::Ideal { k: 1, j: 0 }).unwrap(), -1);
        let d = GradedModuleDesc::Ideal { k: 3, j: -4 };
        assert_eq!(min_y_degree(d).unwrap(), 1);
        assert_eq!(module_to_arc(d).unwrap(), fin(1, 5));
        assert_eq!(
            min_y_degree(GradedModuleDesc::CY { j: 0 }),
            Err(Error::NotIdeal(GradedModuleDesc::CY { j: 0 }))
        );
    }

    #[test]
    fn matrix_factorization_examples() {
        let mf = matrix_factorization(GradedModuleDesc::Ideal { k: 1, j: 0 }).unwrap();
        assert_eq!(mf.a[0][0].to_string(), "x");
        assert_eq!(mf.a[0][1].to_string(), "y");
        assert!(mf.a[1][0].is_zero());
        assert_eq!(mf.a[1][1].to_string(), "-x");
        assert_eq!(mf.a, mf.b);
        assert_eq!(mf.source_shifts, vec![-2, 0]);
        assert_eq!(mf.middle_shifts, vec![-1, 1]);
        assert_eq!(mf.target_shifts, vec![0, 2]);
        assert!(mf.check_product() && mf.is_graded());

        let p = matrix_factorization(GradedModuleDesc::Projective { j: 0 }).unwrap();
        assert_eq!((p.b[0][0].to_string(), p.a[0][0].to_string()), ("1".into(), "x^2".into()));
        assert!(p.check_product() && p.is_graded());

        let c = matrix_factorization(GradedModuleDesc::CY { j: 0 }).unwrap();
        assert_eq!((c.b[0][0].to_string(), c.a[0][0].to_string()), ("x".into(), "x".into()));
        assert!(c.check_product() && c.is_graded());
    }

    #[test]
    fn extension_examples() {
        assert_eq!(ext_dimension(fin(2, 5), fin(0, 3)), 1);
        assert_eq!(ext_dimension(fin(0, 3), fin(1, 3)), 0);
        assert_eq!(ext_dimension(Arc::infinite(3), Arc::infinite(5)), 1);
        assert_eq!(ext_dimension(Arc::infinite(5), Arc::infinite(3)), 0);

        assert_eq!(extension_middle(fin(2, 5), fin(0, 3)).unwrap(), vec![fin(0, 5), fin(2, 3)]);
        assert_eq!(extension_middle(fin(0, 3), fin(2, 5)).unwrap(), vec![fin(0, 2), fin(3, 5)]);
        assert_eq!(
            extension_middle(Arc::infinite(3), Arc::infinite(5)).unwrap(),
            vec![fin(3, 5)]
        );
        assert_eq!(
            extension_middle(fin(0, 3), fin(1, 3)),
            Err(Error::NoExtension { m: fin(0, 3), n: fin(1, 3) })
        );
    }

    #[test]
    fn mixed_extensions() {
        // a=0 < b=2 < c=5
        assert_eq!(
            extension_middle(fin(0, 5), Arc::infinite(2)).unwrap(),
            vec![fin(0, 2), Arc::infinite(5)]
        );
        assert_eq!(
            extension_middle(Arc::infinite(2), fin(0, 5)).unwrap(),
            vec![Arc::infinite(0), fin(2, 5)]
        );
        assert_eq!(ext_dimension(fin(0, 2), Arc::infinite(2)), 0);
    }

    #[test]
    fn ar_examples() {
        assert_eq!(ar_translate(fin(2, 5)).unwrap(), fin(1, 4));
        assert_eq!(ar_translate(fin(0, 2)).unwrap(), fin(-1, 1));
        assert_eq!(ar_translate(Arc::infinite(3)), Err(Error::NoTranslate(Arc::infinite(3))));

        let s = ar_sequence(fin(0, 2)).unwrap();
        assert_eq!((s.start, s.middle.clone(), s.end), (fin(-1, 1), vec![fin(-1, 2), fin(0, 1)], fin(0, 2)));
        let s = ar_sequence(fin(3, 7)).unwrap();
        assert_eq!((s.start, s.middle.clone(), s.end), (fin(2, 6), vec![fin(2, 7), fin(3, 6)], fin(3, 7)));
        assert!(ar_sequence(fin(5, 6)).is_err());

        let e = exchange_sequence(fin(1, 4)).unwrap();
        assert_eq!((e.start, e.middle.clone(), e.end), (fin(1, 4), vec![fin(0, 1), fin(3, 4)], fin(0, 3)));
        let e = exchange_sequence(fin(0, 2)).unwrap();
        assert_eq!((e.start, e.middle.clone(), e.end), (fin(0, 2), vec![fin(-1, 0), fin(1, 2)], fin(-1, 1)));
        assert!(exchange_sequence(fin(2, 3)).is_err());
    }

    #[test]
    fn irreducible_maps() {
        assert_eq!(irreducible_successors(fin(0, 2)), vec![fin(1, 2), fin(0, 3)]);
        assert_eq!(irreducible_successors(fin(0, 1)), vec![fin(0, 2)]);
        assert_eq!(irreducible_successors(Arc::infinite(4)), vec![Arc::infinite(5)]);
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&Arc::infinite(3)).unwrap();
        assert_eq!(s, r#"[3,"inf"]"#);
        let a: Arc = serde_json::from_str("[0,3]").unwrap();
        assert_eq!(a, fin(0, 3));
        assert!(serde_json::from_str::<Arc>("[3,1]").is_err());
        assert!(serde_json::from_str::<Arc>(r#"["inf",1]"#).is_err());
    }
}
