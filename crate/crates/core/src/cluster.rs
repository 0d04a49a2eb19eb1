//! Cluster variables with coefficients, computed by Ptolemy flips from the
//! seed of a triangulation window, and the string-module count that matches
//! their value at `x = 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arc::{crossing, Arc};
use crate::error::{Error, Result};
use crate::frieze::{FriezeArray, FriezeKind};
use crate::laurent::LaurentPoly;
use crate::triangulation::TriangulationWindow;

/// A window together with a Laurent polynomial on each of its arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterSeed {
    window: TriangulationWindow,
    assignment: BTreeMap<Arc, LaurentPoly>,
}

impl ClusterSeed {
    pub fn window(&self) -> &TriangulationWindow {
        &self.window
    }

    pub fn assignment(&self) -> &BTreeMap<Arc, LaurentPoly> {
        &self.assignment
    }

    pub fn value(&self, arc: &Arc) -> Option<&LaurentPoly> {
        self.assignment.get(arc)
    }
}

/// Each arc of `w` carries its own variable.
pub fn initial_seed(w: &TriangulationWindow) -> ClusterSeed {
    ClusterSeed {
        window: w.clone(),
        assignment: w.arcs().iter().map(|&a| (a, LaurentPoly::var(a))).collect(),
    }
}

/// Flips `arc`; the new diagonal gets `(p_ab p_cd + p_bc p_ad) / p_old`
/// for the quadrilateral `a < b < c < d`.
pub fn flip_seed(s: &ClusterSeed, arc: Arc) -> Result<ClusterSeed> {
    let quad = s.window.quadrilateral_of(arc)?;
    let [a, b, c, d] = quad.vertices;
    let p = |u: i64, v: i64| &s.assignment[&Arc::finite(u, v)];
    let numerator = &(p(a, b) * p(c, d)) + &(p(b, c) * p(a, d));
    let value = numerator.exact_div(&s.assignment[&arc])?;
    let window = s.window.flip(arc)?;
    let mut assignment = s.assignment.clone();
    assignment.remove(&arc);
    assignment.insert(quad.partner, value);
    Ok(ClusterSeed { window, assignment })
}

/// Which side of `gamma = (a, b)` a shared endpoint lies on: `Near` for
/// `a < v < b`, `Far` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Near,
    Far,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Joint {
    pub vertex: i64,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingString {
    pub gamma: Arc,
    /// Arcs crossed by `gamma`, in order from its left endpoint.
    pub crossed: Vec<Arc>,
    /// Shared endpoint of each consecutive pair in `crossed`.
    pub joints: Vec<Joint>,
}

fn check_inside(w: &TriangulationWindow, gamma: Arc) -> Result<(i64, i64)> {
    let (a, b) = gamma.ends().ok_or(Error::IncompleteCrossings(gamma))?;
    if a < w.lo() || b > w.hi() {
        return Err(Error::IncompleteCrossings(gamma));
    }
    if w.crosses_fountain(&gamma) {
        return Err(Error::FountainCrossing(gamma));
    }
    Ok((a, b))
}

/// With arcs drawn as half-circles over the real line, the crossing point of
/// `(p, q)` with `(a, b)` has abscissa `(ab - pq) / (a + b - p - q)`.
fn crossing_abscissa(a: i64, b: i64, arc: &Arc) -> (i128, i128) {
    let (p, q) = arc.ends().expect("window arcs are finite");
    let num = i128::from(a) * i128::from(b) - i128::from(p) * i128::from(q);
    let den = i128::from(a + b - p - q);
    if den < 0 {
        (-num, -den)
    } else {
        (num, den)
    }
}

pub fn crossing_string(w: &TriangulationWindow, gamma: Arc) -> Result<CrossingString> {
    let (a, b) = check_inside(w, gamma)?;
    let mut crossed: Vec<Arc> = w.arcs().iter().copied().filter(|&arc| crossing(arc, gamma)).collect();
    crossed.sort_by(|x, y| {
        let (nx, dx) = crossing_abscissa(a, b, x);
        let (ny, dy) = crossing_abscissa(a, b, y);
        (nx * dy).cmp(&(ny * dx))
    });
    let joints = crossed
        .windows(2)
        .map(|pair| {
            let (p, q) = pair[0].ends().expect("finite");
            let vertex = if pair[1].has_endpoint(p) { p } else { q };
            debug_assert!(pair[1].has_endpoint(vertex));
            let side = if a < vertex && vertex < b { Side::Near } else { Side::Far };
            Joint { vertex, side }
        })
        .collect();
    Ok(CrossingString { gamma, crossed, joints })
}

/// Number of subsets `I` of the crossed positions such that a `Near` joint
/// between `i` and `i+1` forces `i ∈ I ⇒ i+1 ∈ I`, and a `Far` joint forces
/// `i+1 ∈ I ⇒ i ∈ I`.
pub fn submodule_count(cs: &CrossingString) -> BigInt {
    if cs.crossed.is_empty() {
        return BigInt::from(1);
    }
    // (last position out, last position in)
    let (mut out, mut inn) = (BigInt::from(1), BigInt::from(1));
    for joint in &cs.joints {
        (out, inn) = match joint.side {
            Side::Near => (out.clone(), &out + &inn),
            Side::Far => (&out + &inn, inn.clone()),
        };
    }
    out + inn
}

/// Value of `gamma` obtained by flipping, again and again, the first diagonal
/// that `gamma` crosses.
pub fn cluster_variable(s0: &ClusterSeed, gamma: Arc) -> Result<LaurentPoly> {
    check_inside(&s0.window, gamma)?;
    let mut seed = s0.clone();
    loop {
        if let Some(v) = seed.assignment.get(&gamma) {
            return Ok(v.clone());
        }
        let cs = crossing_string(&seed.window, gamma)?;
        let first = *cs.crossed.first().ok_or(Error::IncompleteCrossings(gamma))?;
        seed = flip_seed(&seed, first)?;
    }
}

/// The frieze of cluster variables of every arc of `w`, with the boundary
/// variables as coefficients.
pub fn coefficient_frieze(w: &TriangulationWindow) -> Result<FriezeArray<LaurentPoly>> {
    let seed = initial_seed(w);
    let mut entries = BTreeMap::new();
    for a in w.lo()..=w.hi() {
        entries.insert((a, a), LaurentPoly::zero());
        for b in a + 1..=w.hi() {
            let gamma = Arc::finite(a, b);
            if w.crosses_fountain(&gamma) {
                continue;
            }
            entries.insert((a, b), cluster_variable(&seed, gamma)?);
        }
    }
    Ok(FriezeArray::from_entries(FriezeKind::for_window(w), w.lo(), w.hi(), entries))
}

/// Quadruples `a < b < c < d` where `p_ac p_bd ≠ p_ab p_cd + p_bc p_ad`,
/// over all quadruples with the six values defined.
pub fn plucker_defects(f: &FriezeArray<LaurentPoly>) -> Vec<[i64; 4]> {
    let mut bad = Vec::new();
    let (lo, hi) = (f.lo(), f.hi());
    for a in lo..=hi {
        for b in a + 1..=hi {
            for c in b + 1..=hi {
                for d in c + 1..=hi {
                    let p = |u, v| f.get(u, v).ok();
                    let vals = [p(a, c), p(b, d), p(a, b), p(c, d), p(b, c), p(a, d)];
                    if let [Some(ac), Some(bd), Some(ab), Some(cd), Some(bc), Some(ad)] = vals {
                        if ac * bd != &(ab * cd) + &(bc * ad) {
                            bad.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
    }
    bad
}

/// Right-hand side of the diamond rule with coefficients: `x[a,a+1] x[b,b+1]`.
pub fn boundary_coefficient(a: i64, b: i64) -> LaurentPoly {
    &LaurentPoly::var(Arc::boundary(a)) * &LaurentPoly::var(Arc::boundary(b))
}
