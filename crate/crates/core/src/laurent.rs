//! Sparse Laurent polynomials over ℤ in variables `x[a,b]` indexed by arcs.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arc::Arc;
use crate::error::{Error, Result};

/// A Laurent monomial: sorted `(variable, exponent)` pairs, exponents nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Arc, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(arc: Arc) -> Self {
        Monomial(vec![(arc, 1)])
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (Arc, i64)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in exps {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn exponents(&self) -> &[(Arc, i64)] {
        &self.0
    }

    pub fn exponent(&self, v: &Arc) -> i64 {
        self.0.binary_search_by(|(a, _)| a.cmp(v)).map_or(0, |i| self.0[i].1)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn combine(&self, other: &Monomial, sign: i64) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let ord = match (self.0.get(i), other.0.get(j)) {
                (Some(p), Some(q)) => p.0.cmp(&q.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((other.0[j].0, sign * other.0[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.0[i].1 + sign * other.0[j].1;
                    if e != 0 {
                        out.push((self.0[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }
}

/// Graded lexicographic: total degree first, then the exponent of the
/// smallest variable where the two differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let q = self.div(other);
            match q.0.first() {
                None => Ordering::Equal,
                Some(&(_, e)) => e.cmp(&0),
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x[{},{}]", v.start(), v.end())?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(arc: Arc) -> Self {
        Self::term(Monomial::var(arc), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, m: &Monomial, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        (0..n).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Variables appearing in any term.
    pub fn variables(&self) -> Vec<Arc> {
        let mut vs: Vec<Arc> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Monomial whose exponent in each variable is the minimum over all terms.
    fn min_monomial(&self) -> Monomial {
        let vars = self.variables();
        Monomial::from_exponents(
            vars.iter().map(|v| (*v, self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0))),
        )
    }

    /// The unique `r` with `q * r == self`.
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let mp = self.min_monomial();
        let mq = q.min_monomial();
        let p0 = self.scale(&mp.inverse(), &BigInt::one());
        let q0 = q.scale(&mq.inverse(), &BigInt::one());
        let (lm, lc) = q0.leading().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");

        let mut rem = p0;
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(&lm);
            let (c, r) = rc.div_rem(&lc);
            if !m.0.iter().all(|&(_, e)| e >= 0) || !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            rem = &rem - &q0.scale(&m, &c);
            quot.add_term(m, c);
        }
        Ok(quot.scale(&mp.div(&mq), &BigInt::one()))
    }

    /// Value at `x[a,b] = 1` for every variable: the sum of the coefficients.
    pub fn specialize_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&(_, e)| e >= 0))
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<Arc> for LaurentPoly {
    fn from(arc: Arc) -> Self {
        LaurentPoly::var(arc)
    }
}

/// Highest term first, e.g. `x[0,1]^2*x[1,2]^-1 - 2*x[0,3] + 3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    exponents: Vec<(Arc, i64)>,
}

/// A list of `{"coeff": "<integer>", "exponents": [[[a, b], e], ...]}`,
/// highest term first.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermRepr { coeff: c.to_string(), exponents: m.0.clone() })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            out.add_term(Monomial::from_exponents(t.exponents), c);
        }
        Ok(out)
    }
}

/// Shorthand for the variable `x[a,b]`.
pub fn x(a: i64, b: i64) -> LaurentPoly {
    LaurentPoly::var(Arc::finite(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::constant(n)
    }

    #[test]
    fn ring_examples() {
        assert!((&x(0, 1) + &-x(0, 1)).is_zero());
        let p = &(&x(0, 1) + &x(1, 2)) * &(&x(0, 1) - &x(1, 2));
        assert_eq!(p, &x(0, 1).pow(2) - &x(1, 2).pow(2));
        assert_eq!(&p * &LaurentPoly::one(), p);
    }

    #[test]
    fn division_examples() {
        let xy = &x(0, 1) * &x(1, 2);
        assert_eq!(xy.exact_div(&x(0, 1)).unwrap(), x(1, 2));
        let ptolemy = &(&x(0, 1) * &x(2, 3)) + &(&x(1, 2) * &x(0, 3));
        let x02_inv = LaurentPoly::term(Monomial::var(Arc::finite(0, 2)).inverse(), 1);
        // monomials are units
        assert_eq!(ptolemy.exact_div(&x(0, 2)).unwrap(), &ptolemy * &x02_inv);
        assert_eq!(ptolemy.exact_div(&(&x(0, 2) + &x(1, 3))), Err(Error::NonExactDivision));
        assert_eq!(ptolemy.exact_div(&(&x(0, 1) + &x(1, 2))), Err(Error::NonExactDivision));
        assert_eq!(ptolemy.exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
        let sq = &(&x(0, 1) + &x(1, 2)).pow(2) * &x02_inv;
        assert_eq!(sq.exact_div(&(&x(0, 1) + &x(1, 2))).unwrap(), &(&x(0, 1) + &x(1, 2)) * &x02_inv);
        assert_eq!(c(6).exact_div(&c(4)), Err(Error::NonExactDivision));
    }

    #[test]
    fn specialization_and_signs() {
        let ptolemy = &(&x(0, 1) * &x(2, 3)) + &(&x(1, 2) * &x(0, 3));
        assert_eq!(ptolemy.specialize_ones(), BigInt::from(2));
        assert_eq!(LaurentPoly::zero().specialize_ones(), BigInt::zero());
        assert_eq!((&c(5) * &x(0, 4)).specialize_ones(), BigInt::from(5));
        assert!((&x(0, 1) + &x(1, 2)).has_positive_coefficients());
        assert!(!(&x(0, 1) - &x(1, 2)).has_positive_coefficients());
        assert!(LaurentPoly::zero().has_positive_coefficients());
    }

    #[test]
    fn display_and_order() {
        let inv = LaurentPoly::term(Monomial::from_exponents([(Arc::finite(0, 1), 2), (Arc::finite(1, 2), -1)]), 1);
        let p = &(&inv + &c(3)) - &(&c(2) * &x(0, 3));
        assert_eq!(p.to_string(), "x[0,1]^2*x[1,2]^-1 - 2*x[0,3] + 3");
        let s = &x(0, 1).pow(2) + &(&x(0, 1) * &x(1, 2));
        assert_eq!(s.to_string(), "x[0,1]^2 + x[0,1]*x[1,2]");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = &(&c(-7) * &x(0, 1).pow(3)) + &LaurentPoly::term(Monomial::var(Arc::infinite(2)).inverse(), 5);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"coeff":"-7","exponents":[[[0,1],3]]},{"coeff":"5","exponents":[[[2,"inf"],-1]]}]"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        let var = (0i64..4).prop_map(|a| Arc::finite(a, a + 2));
        let mono = prop::collection::vec((var, -2i64..=3), 0..3);
        prop::collection::vec((mono, -5i64..=5), 0..5).prop_map(|ts| {
            ts.into_iter()
                .fold(LaurentPoly::zero(), |acc, (m, k)| &acc + &LaurentPoly::term(Monomial::from_exponents(m), k))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
            prop_assert_eq!(&p + &LaurentPoly::zero(), p.clone());
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn specialization_is_a_homomorphism(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!((&p * &q).specialize_ones(), p.specialize_ones() * q.specialize_ones());
            prop_assert_eq!((&p + &q).specialize_ones(), p.specialize_ones() + q.specialize_ones());
        }

        #[test]
        fn division_round_trip(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
        }
    }
}
