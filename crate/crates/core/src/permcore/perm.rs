//! Permutations of `{1..n}` for `n <= 16`.
//!
//! Composition is right-to-left: `p * q` applies `q` first, then `p`.
//! Points are 1-based at every public boundary; the image array is stored
//! 0-based internally with unused slots padded by the identity so that the
//! derived ordering is lexicographic on image arrays for a fixed degree.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= MAX_DEGREE, "degree {degree} above {MAX_DEGREE}");
        let mut images = [0u8; MAX_DEGREE];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Perm {
            degree: degree as u8,
            images,
        }
    }

    /// Builds a permutation from its 1-based image list: `images[i-1]` is the
    /// image of point `i`.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeLimit {
                what: "permutations",
                degree: n,
                limit: MAX_DEGREE,
            });
        }
        let mut p = Perm::identity(n);
        let mut seen = [false; MAX_DEGREE];
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(Error::InvalidPerm(format!("image {img} out of range 1..={n}")));
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::InvalidPerm(format!("image {img} repeated")));
            }
            p.images[i] = (img - 1) as u8;
        }
        Ok(p)
    }

    pub(crate) fn from_zero_based(images: &[usize]) -> Perm {
        let mut p = Perm::identity(images.len());
        for (i, &img) in images.iter().enumerate() {
            p.images[i] = img as u8;
        }
        p
    }

    /// Parses cycle notation such as `(1,2,3,4)(5,6,7,8)` on `degree` points.
    /// Whitespace is ignored; `()` and the empty string denote the identity.
    pub fn parse(input: &str, degree: usize) -> Result<Perm> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if degree > MAX_DEGREE {
            return Err(Error::DegreeLimit {
                what: "permutations",
                degree,
                limit: MAX_DEGREE,
            });
        }
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut result = Perm::identity(degree);
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| err("expected '('"))?;
            let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let cycle_text = &body[..close];
            rest = &body[close + 1..];
            if cycle_text.is_empty() {
                continue;
            }
            let mut points = Vec::new();
            for tok in cycle_text.split(',') {
                let pt: usize = tok.parse().map_err(|_| err("bad point"))?;
                if pt == 0 || pt > degree {
                    return Err(err(&format!("point {pt} outside 1..={degree}")));
                }
                if points.contains(&pt) {
                    return Err(err(&format!("point {pt} repeated in a cycle")));
                }
                points.push(pt);
            }
            let mut cycle = Perm::identity(degree);
            for (k, &pt) in points.iter().enumerate() {
                let next = points[(k + 1) % points.len()];
                cycle.images[pt - 1] = (next - 1) as u8;
            }
            // Cycles are written left to right and applied right to left.
            result = result * cycle;
        }
        Ok(result)
    }

    /// Like [`Perm::parse`], using the largest point mentioned as the degree.
    pub fn parse_minimal(input: &str) -> Result<Perm> {
        let max = input
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Perm::parse(input, max)
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.degree());
        self.images[i - 1] as usize + 1
    }

    pub(crate) fn apply0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images[..self.degree()]
            .iter()
            .map(|&x| x as usize + 1)
            .collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[i] = self.images[other.images[i] as usize];
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[self.images[i] as usize] = i as u8;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|i| self.images[i] as usize == i)
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer_lcm)
    }

    /// `g * self * g⁻¹`.
    pub fn conjugated_by(&self, g: &Perm) -> Perm {
        *g * *self * g.inverse()
    }

    pub fn moved_points(&self) -> usize {
        (0..self.degree())
            .filter(|&i| self.images[i] as usize != i)
            .count()
    }

    /// Nontrivial cycles, each starting at its smallest point, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Embeds into a larger degree, fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree() && degree <= MAX_DEGREE);
        let mut out = *self;
        out.degree = degree as u8;
        out
    }
}

fn num_integer_lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl Mul for Perm {
    type Output = Perm;

    /// Right-to-left composition. Panics on a degree mismatch; use
    /// [`Perm::compose`] for a checked version.
    fn mul(self, rhs: Perm) -> Perm {
        match self.compose(&rhs) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }
}

impl<'a> Mul<&'a Perm> for &'a Perm {
    type Output = Perm;

    fn mul(self, rhs: &'a Perm) -> Perm {
        *self * *rhs
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree)
    }
}

/// Serialized as `{"degree": n, "cycles": "(1,2)(3,4)"}`.
#[derive(Serialize, Deserialize)]
struct PermRepr {
    degree: usize,
    cycles: String,
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermRepr {
            degree: self.degree(),
            cycles: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Perm, D::Error> {
        let repr = PermRepr::deserialize(d)?;
        Perm::parse(&repr.cycles, repr.degree).map_err(serde::de::Error::custom)
    }
}

/// All permutations of degree `n` in lexicographic order of image arrays.
pub fn all_perms(n: usize) -> impl Iterator<Item = Perm> {
    use itertools::Itertools;
    (0..n)
        .permutations(n)
        .map(|imgs| Perm::from_zero_based(&imgs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p8(s: &str) -> Perm {
        Perm::parse(s, 8).unwrap()
    }

    #[test]
    fn compose_identity() {
        let p = p8("(1,5,2)(3,8)");
        assert_eq!(Perm::identity(8).compose(&p).unwrap(), p);
    }

    #[test]
    fn square_of_double_four_cycle() {
        let tau = p8("(1,2,3,4)(5,6,7,8)");
        assert_eq!(tau * tau, p8("(1,3)(2,4)(5,7)(6,8)"));
    }

    #[test]
    fn point_chase_right_to_left() {
        let r2 = p8("(1,3)(2,6)(4,8)(5,7)");
        let s2 = p8("(1,4)(2,5)(3,8)(6,7)");
        let t = p8("(1,7)(2,8)(3,5)(4,6)");
        let prod = r2.compose(&s2.compose(&t).unwrap()).unwrap();
        // 1 -t-> 7 -s2-> 6 -r2-> 2
        assert_eq!(prod.apply(1), 2);
        assert_eq!(prod.order(), 2);
    }

    #[test]
    fn mismatched_degree_is_an_error() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(1,2)", 4).unwrap();
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Perm::identity(5).inverse(), Perm::identity(5));
        let c = Perm::parse("(1,2,3,4)", 4).unwrap();
        assert_eq!(c.inverse(), Perm::parse("(1,4,3,2)", 4).unwrap());
        let s3 = p8("(1,7)(2,3)(4,8)(5,6)");
        assert_eq!(s3.inverse(), s3);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = p8(" ( 1 , 2 , 3 , 4 ) ( 5,6,7,8 ) ");
        assert_eq!(p.to_string(), "(1,2,3,4)(5,6,7,8)");
        assert_eq!(Perm::identity(8).to_string(), "()");
        assert_eq!(p8("()"), Perm::identity(8));
        assert_eq!(p8(""), Perm::identity(8));
        // overlapping cycles compose right to left
        let q = Perm::parse("(1,2)(2,3)", 3).unwrap();
        assert_eq!(q, Perm::parse("(1,2,3)", 3).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(Perm::parse("(1,9)", 8).is_err());
        assert!(Perm::parse("(1,2", 8).is_err());
        assert!(Perm::parse("(1,1)", 8).is_err());
        assert!(Perm::parse("1,2", 8).is_err());
        assert!(Perm::parse("(a,b)", 8).is_err());
    }

    #[test]
    fn from_images_validates() {
        assert!(Perm::from_images(&[2, 1, 3]).is_ok());
        assert!(Perm::from_images(&[2, 2, 3]).is_err());
        assert!(Perm::from_images(&[0, 1]).is_err());
        assert!(Perm::from_images(&[1; 17]).is_err());
    }

    #[test]
    fn lexicographic_order_and_enumeration() {
        let all: Vec<Perm> = all_perms(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Perm::identity(4));
    }

    #[test]
    fn serde_uses_cycle_notation() {
        let p = p8("(1,2)(3,5)(4,6)(7,8)");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"degree":8,"cycles":"(1,2)(3,5)(4,6)(7,8)"}"#);
        let back: Perm = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}
