use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A polynomial in `b₁, b₂, b₃, b₄` with rational coefficients, keyed by
/// exponent tuples. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<CoefTerm>", try_from = "Vec<CoefTerm>")]
pub struct CoefPoly {
    terms: BTreeMap<[u32; 4], BigRational>,
}

#[derive(Clone, Serialize, Deserialize)]
struct CoefTerm {
    b: [u32; 4],
    c: String,
}

impl From<CoefPoly> for Vec<CoefTerm> {
    fn from(p: CoefPoly) -> Self {
        p.terms
            .into_iter()
            .map(|(b, c)| CoefTerm { b, c: c.to_string() })
            .collect()
    }
}

impl TryFrom<Vec<CoefTerm>> for CoefPoly {
    type Error = String;
    fn try_from(v: Vec<CoefTerm>) -> Result<Self, String> {
        let mut p = CoefPoly::zero();
        for t in v {
            let c: BigRational = t.c.parse().map_err(|_| format!("bad rational {:?}", t.c))?;
            p.add_term(t.b, c);
        }
        Ok(p)
    }
}

impl CoefPoly {
    pub fn zero() -> CoefPoly {
        CoefPoly::default()
    }

    pub fn one() -> CoefPoly {
        CoefPoly::from_integer(1)
    }

    pub fn from_integer(c: i64) -> CoefPoly {
        CoefPoly::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(c: BigRational) -> CoefPoly {
        CoefPoly::monomial([0; 4], c)
    }

    pub fn monomial(exps: [u32; 4], c: BigRational) -> CoefPoly {
        let mut p = CoefPoly::zero();
        p.add_term(exps, c);
        p
    }

    /// The indeterminate `b_k`.
    ///
    /// # Panics
    ///
    /// If `k` is not in `1..=4`.
    pub fn b(k: usize) -> CoefPoly {
        assert!((1..=4).contains(&k), "b_{k} does not exist");
        let mut e = [0; 4];
        e[k - 1] = 1;
        CoefPoly::monomial(e, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant().is_some_and(|c| c.is_one())
    }

    /// The value when `self` has no `b`-dependence.
    pub fn constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: [u32; 4]) -> BigRational {
        self.terms.get(&exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exps: [u32; 4], c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> CoefPoly {
        if c.is_zero() {
            return CoefPoly::zero();
        }
        CoefPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitutes numbers for `b₁..b₄`.
    pub fn evaluate(&self, b: &[BigRational; 4]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (bi, ei) in b.iter().zip(e) {
                t *= num_traits::pow(bi.clone(), *ei as usize);
            }
            acc += t;
        }
        acc
    }
}

impl fmt::Display for CoefPoly {
    /// Terms by exponent tuple, lexicographically descending, e.g.
    /// `b1^2 - 3/2*b2*b4 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| power(&format!("b{}", i + 1), k))
                    .collect();
                scaled(c, &vars.join("*"))
            })
            .collect();
        f.write_str(&join_signed(&terms))
    }
}

impl fmt::Debug for CoefPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoefPoly({self})")
    }
}

pub(crate) fn power(var: &str, k: u32) -> String {
    if k == 1 {
        var.to_string()
    } else {
        format!("{var}^{k}")
    }
}

/// `c*m`, with `1*m` and `-1*m` shortened and an empty `m` meaning 1.
fn scaled(c: &BigRational, m: &str) -> String {
    if m.is_empty() {
        c.to_string()
    } else if c.is_one() {
        m.to_string()
    } else if c.is_negative() && (-c).is_one() {
        format!("-{m}")
    } else {
        format!("{c}*{m}")
    }
}

pub(crate) fn join_signed(terms: &[String]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => out.push_str(t),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

impl<'a> Add<&'a CoefPoly> for &'a CoefPoly {
    type Output = CoefPoly;
    fn add(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CoefPoly> for CoefPoly {
    fn add_assign(&mut self, rhs: &CoefPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&CoefPoly> for CoefPoly {
    fn sub_assign(&mut self, rhs: &CoefPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'a> Sub<&'a CoefPoly> for &'a CoefPoly {
    type Output = CoefPoly;
    fn sub(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        CoefPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<'a> Mul<&'a CoefPoly> for &'a CoefPoly {
    type Output = CoefPoly;
    fn mul(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = CoefPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(CoefPoly, Add add, Sub sub, Mul mul);

impl Neg for CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn display_orders_terms() {
        let p = &(&CoefPoly::b(1) * &CoefPoly::b(1)) - &CoefPoly::b(2).scale(&q(3, 2));
        let p = &p + &CoefPoly::one();
        assert_eq!(p.to_string(), "b1^2 - 3/2*b2 + 1");
        assert_eq!(CoefPoly::zero().to_string(), "0");
        assert_eq!((-CoefPoly::b(4)).to_string(), "-b4");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &CoefPoly::b(3) - &CoefPoly::b(3);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn evaluate_and_serde() {
        let p = &(&CoefPoly::b(1) * &CoefPoly::b(4)) + &CoefPoly::from_integer(2);
        let b = [q(3, 1), q(0, 1), q(0, 1), q(-1, 2)];
        assert_eq!(p.evaluate(&b), q(1, 2));
        let json = serde_json::to_string(&p).unwrap();
        let back: CoefPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
