//! Finite windows onto triangulations of the ∞-gon.
//!
//! A window covers the marked points `lo..=hi`. Without a fountain it is a
//! triangulated polygon closed by the arc `(lo, hi)`. With a fountain at `f`
//! the infinite arc `(f, ∞)` is implied, nothing may pass over `f`, and the
//! window splits into the two polygons `lo..=f` and `f..=hi`, closed by
//! `(lo, f)` and `(f, hi)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arc::{crossing, Arc};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangulationWindow {
    lo: i64,
    hi: i64,
    fountain: Option<i64>,
    arcs: BTreeSet<Arc>,
}

/// The quadrilateral around a diagonal and the diagonal it flips to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadrilateral {
    /// Corners in increasing order.
    pub vertices: [i64; 4],
    /// Apex of the triangle on the inner side (between the arc's endpoints).
    pub inner_apex: i64,
    /// Apex of the triangle on the outer side.
    pub outer_apex: i64,
    pub partner: Arc,
}

impl TriangulationWindow {
    /// Builds a window without any checks. Use [`TriangulationWindow::new`]
    /// unless the point is to feed [`TriangulationWindow::validate`].
    pub fn from_parts(lo: i64, hi: i64, fountain: Option<i64>, arcs: impl IntoIterator<Item = Arc>) -> Self {
        TriangulationWindow { lo, hi, fountain, arcs: arcs.into_iter().collect() }
    }

    /// Inserts the boundary arcs and validates.
    pub fn new(lo: i64, hi: i64, fountain: Option<i64>, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        if lo >= hi {
            return Err(Error::BadWindow { lo, hi, fountain });
        }
        let mut w = Self::from_parts(lo, hi, fountain, arcs);
        w.arcs.extend((lo..hi).map(Arc::boundary));
        w.validate()?;
        Ok(w)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn fountain(&self) -> Option<i64> {
        self.fountain
    }

    /// All arcs, boundary arcs included, in increasing order.
    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.contains(arc)
    }

    fn has(&self, u: i64, v: i64) -> bool {
        u != v && self.arcs.contains(&Arc::finite(u.min(v), u.max(v)))
    }

    fn ends(arc: &Arc) -> (i64, i64) {
        arc.ends().expect("windows only hold finite arcs")
    }

    /// Number of marked points.
    pub fn point_count(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    /// The closed polygons `(u, v)` the window decomposes into.
    pub fn regions(&self) -> Vec<(i64, i64)> {
        match self.fountain {
            None => vec![(self.lo, self.hi)],
            Some(f) => [(self.lo, f), (f, self.hi)].into_iter().filter(|(u, v)| u < v).collect(),
        }
    }

    /// Arcs bounding the window from the outside; they cannot be mutated here.
    pub fn closing_arcs(&self) -> Vec<Arc> {
        self.regions().into_iter().map(|(u, v)| Arc::finite(u, v)).collect()
    }

    /// True if `arc` passes over the fountain point.
    pub fn crosses_fountain(&self, arc: &Arc) -> bool {
        match (self.fountain, arc.ends()) {
            (Some(f), Some((a, b))) => a < f && f < b,
            (Some(f), None) => arc.start() < f,
            _ => false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = (self.lo, self.hi);
        if lo >= hi || self.fountain.is_some_and(|f| f < lo || f > hi) {
            return Err(Error::BadWindow { lo, hi, fountain: self.fountain });
        }
        for arc in &self.arcs {
            let Some((a, b)) = arc.ends() else {
                return Err(Error::InfiniteArcInWindow(*arc));
            };
            if a < lo || b > hi {
                return Err(Error::OutOfWindow { arc: *arc, lo, hi });
            }
        }
        if let Some(i) = (lo..hi).find(|&i| !self.arcs.contains(&Arc::boundary(i))) {
            return Err(Error::MissingBoundary(i));
        }
        if let Some(f) = self.fountain {
            if let Some(arc) = self.arcs.iter().find(|a| self.crosses_fountain(a)) {
                return Err(Error::CrossingPair(*arc, Arc::infinite(f)));
            }
        }
        let arcs: Vec<Arc> = self.arcs.iter().copied().filter(|a| !a.is_boundary()).collect();
        for (i, p) in arcs.iter().enumerate() {
            if let Some(q) = arcs[i + 1..].iter().find(|q| crossing(*p, **q)) {
                return Err(Error::CrossingPair(*p, *q));
            }
        }
        if let Some(missing) = self.closing_arcs().into_iter().find(|a| !self.arcs.contains(a)) {
            return Err(Error::NotClosed(missing));
        }
        for arc in &arcs {
            let face = self.face_below(arc);
            if face.len() != 3 {
                return Err(Error::WrongCount(face));
            }
        }
        Ok(())
    }

    /// Vertices of the face directly below `arc` (on the side of the points
    /// between its endpoints), in increasing order.
    fn face_below(&self, arc: &Arc) -> Vec<i64> {
        let (a, b) = Self::ends(arc);
        let mut face = vec![a];
        let mut v = a;
        while v != b {
            let next = (v + 1..=b)
                .rev()
                .find(|&w| (v, w) != (a, b) && self.has(v, w))
                .expect("boundary arcs guarantee a step");
            face.push(next);
            v = next;
        }
        face
    }

    /// All triangles, as increasing vertex triples.
    pub fn triangles(&self) -> BTreeSet<[i64; 3]> {
        self.arcs
            .iter()
            .filter(|a| !a.is_boundary())
            .filter_map(|arc| {
                let face = self.face_below(arc);
                (face.len() == 3).then(|| [face[0], face[1], face[2]])
            })
            .collect()
    }

    fn triangle_count_at(&self, v: i64) -> u64 {
        self.triangles().iter().filter(|t| t.contains(&v)).count() as u64
    }

    /// Number of triangles at `v`; only defined where the star of `v` lies in
    /// the window.
    pub fn quiddity_at(&self, v: i64) -> Result<u64> {
        if v <= self.lo || v >= self.hi || self.fountain == Some(v) {
            return Err(Error::IncompleteAtVertex(v));
        }
        Ok(self.triangle_count_at(v))
    }

    /// Treats the window as a finite polygon and returns its cyclic quiddity
    /// sequence `q[i] = #triangles at lo+i+1` (indices mod the vertex count),
    /// i.e. the entries `m[lo+i, lo+i+2]`.
    pub fn polygon_quiddity(&self) -> Result<Vec<u64>> {
        if self.regions().len() != 1 {
            return Err(Error::FountainCrossing(Arc::finite(self.lo, self.hi)));
        }
        let m = self.point_count() as i64;
        Ok((0..m).map(|i| self.triangle_count_at(self.lo + (i + 1) % m)).collect())
    }

    pub fn quadrilateral_of(&self, arc: Arc) -> Result<Quadrilateral> {
        if !self.arcs.contains(&arc) || arc.is_boundary() || self.closing_arcs().contains(&arc) {
            return Err(Error::NotMutableHere(arc));
        }
        let (a, b) = Self::ends(&arc);
        let inner_apex = self.face_below(&arc)[1];
        let outer_apex = (self.lo..a)
            .chain(b + 1..=self.hi)
            .find(|&d| self.has(d, a) && self.has(d, b))
            .ok_or(Error::NotMutableHere(arc))?;
        let mut vertices = [a, b, inner_apex, outer_apex];
        vertices.sort_unstable();
        let partner = Arc::finite(inner_apex.min(outer_apex), inner_apex.max(outer_apex));
        Ok(Quadrilateral { vertices, inner_apex, outer_apex, partner })
    }

    /// Replaces `arc` by the other diagonal of its quadrilateral.
    pub fn flip(&self, arc: Arc) -> Result<Self> {
        let quad = self.quadrilateral_of(arc)?;
        let mut next = self.clone();
        next.arcs.remove(&arc);
        next.arcs.insert(quad.partner);
        next.validate()?;
        Ok(next)
    }

    /// Arcs whose quadrilateral lies inside the window.
    pub fn mutable_arcs(&self) -> Vec<Arc> {
        self.arcs.iter().copied().filter(|a| self.quadrilateral_of(*a).is_ok()).collect()
    }

    /// Fountain arcs `(f, b)` and the arcs `(y_n, y_{n+1})` joining
    /// consecutive fountain-arc endpoints, starting from `y_0 = f + 1`.
    pub fn fountain_arc_sets(&self) -> Result<(BTreeSet<Arc>, BTreeSet<Arc>)> {
        let f = self.fountain.ok_or(Error::NoFountain)?;
        let a1: BTreeSet<Arc> = self.arcs.iter().copied().filter(|a| a.start() == f).collect();
        let ends: Vec<i64> = a1.iter().map(|a| Self::ends(a).1).collect();
        let a2 = ends.windows(2).map(|w| Arc::finite(w[0], w[1])).collect();
        Ok((a1, a2))
    }

    /// Reflection `(a, b) ↦ (-b, -a)`.
    pub fn mirror(&self) -> Self {
        TriangulationWindow {
            lo: -self.hi,
            hi: -self.lo,
            fountain: self.fountain.map(|f| -f),
            arcs: self
                .arcs
                .iter()
                .map(|arc| {
                    let (a, b) = Self::ends(arc);
                    Arc::finite(-b, -a)
                })
                .collect(),
        }
    }

    pub fn shifted(&self, by: i64) -> Self {
        TriangulationWindow {
            lo: self.lo + by,
            hi: self.hi + by,
            fountain: self.fountain.map(|f| f + by),
            arcs: self.arcs.iter().map(|a| a.shifted(by)).collect(),
        }
    }

    /// Appends the marked point `hi + 1` together with the arcs
    /// `(hi, hi+1)` and `(c, hi+1)` where `c` is the start of the old closing
    /// arc on the right. The result is again closed.
    pub(crate) fn extend_right(&self) -> Result<Self> {
        let c = match self.fountain {
            Some(f) if f < self.hi => f,
            Some(_) => return Err(Error::NotMutableHere(Arc::finite(self.lo, self.hi))),
            None => self.lo,
        };
        let mut next = self.clone();
        next.hi += 1;
        next.arcs.insert(Arc::boundary(self.hi));
        next.arcs.insert(Arc::finite(c, self.hi + 1));
        next.validate()?;
        Ok(next)
    }
}

#[derive(Serialize, Deserialize)]
struct WindowRepr {
    lo: i64,
    hi: i64,
    fountain: Option<i64>,
    arcs: Vec<Arc>,
}

impl Serialize for TriangulationWindow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WindowRepr { lo: self.lo, hi: self.hi, fountain: self.fountain, arcs: self.arcs.iter().copied().collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TriangulationWindow {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WindowRepr::deserialize(d)?;
        TriangulationWindow::new(r.lo, r.hi, r.fountain, r.arcs).map_err(serde::de::Error::custom)
    }
}

/// Every triangulation of the polygon `lo..=hi`, as sets of arcs including
/// the sides and the closing arc.
pub fn polygon_triangulations(lo: i64, hi: i64) -> Vec<BTreeSet<Arc>> {
    assert!(lo < hi);
    if hi == lo + 1 {
        return vec![BTreeSet::from([Arc::boundary(lo)])];
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        let left = polygon_triangulations(lo, apex);
        let right = polygon_triangulations(apex, hi);
        for l in &left {
            for r in &right {
                let mut t: BTreeSet<Arc> = l.union(r).copied().collect();
                t.insert(Arc::finite(lo, hi));
                out.push(t);
            }
        }
    }
    out
}

/// Every valid window on `lo..=hi` with the given fountain designation.
pub fn all_windows(lo: i64, hi: i64, fountain: Option<i64>) -> Vec<TriangulationWindow> {
    let regions: Vec<(i64, i64)> = match fountain {
        None => vec![(lo, hi)],
        Some(f) => [(lo, f), (f, hi)].into_iter().filter(|(u, v)| u < v).collect(),
    };
    let mut acc: Vec<BTreeSet<Arc>> = vec![BTreeSet::new()];
    for (u, v) in regions {
        let parts = polygon_triangulations(u, v);
        acc = acc
            .iter()
            .flat_map(|base| parts.iter().map(move |p| base.union(p).copied().collect()))
            .collect();
    }
    acc.into_iter()
        .map(|arcs| TriangulationWindow::new(lo, hi, fountain, arcs).expect("generated windows are valid"))
        .collect()
}
