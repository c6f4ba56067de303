use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::permcore::Perm;
use crate::quartic::coef::{forward_owned, join_signed, power, CoefPoly};

/// Polynomial in `α₂, α₃, α₄`, keyed by `[i₂, i₃, i₄]`, not yet reduced.
type Tri = BTreeMap<[u32; 3], CoefPoly>;

fn tri_add(p: &mut Tri, e: [u32; 3], c: CoefPoly) {
    if c.is_zero() {
        return;
    }
    match p.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn tri_mul(a: &Tri, b: &Tri) -> Tri {
    let mut out = Tri::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            tri_add(&mut out, [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
        }
    }
    out
}

fn tri_const(c: CoefPoly) -> Tri {
    let mut p = Tri::new();
    tri_add(&mut p, [0; 3], c);
    p
}

/// `α_i` with `α₁` replaced by `b₁ − α₂ − α₃ − α₄`.
fn tri_alpha(i: usize) -> Tri {
    let mut p = Tri::new();
    match i {
        1 => {
            tri_add(&mut p, [0; 3], CoefPoly::b(1));
            for k in 0..3 {
                let mut e = [0; 3];
                e[k] = 1;
                tri_add(&mut p, e, CoefPoly::from_integer(-1));
            }
        }
        2..=4 => {
            let mut e = [0; 3];
            e[i - 2] = 1;
            tri_add(&mut p, e, CoefPoly::one());
        }
        _ => panic!("α_{i} does not exist"),
    }
    p
}

/// Rewriting rules `α₂² → rule[0]`, `α₃³ → rule[1]`, `α₄⁴ → rule[2]`.
struct Relations {
    rules: [Tri; 3],
}

const BOUNDS: [u32; 3] = [2, 3, 4];

/// Synthetic division of `Σ coeffs[k] X^k` by `X − root`; returns the quotient.
fn divide_linear(coeffs: &[Tri], root: &Tri) -> Vec<Tri> {
    let d = coeffs.len() - 1;
    let mut q = vec![Tri::new(); d];
    let mut carry = coeffs[d].clone();
    for k in (0..d).rev() {
        q[k] = carry.clone();
        let mut next = coeffs[k].clone();
        for (e, c) in tri_mul(&carry, root) {
            tri_add(&mut next, e, c);
        }
        carry = next;
    }
    q
}

/// Evaluates `Σ coeffs[k] X^k` at `X = x`.
fn evaluate_at(coeffs: &[Tri], x: &Tri) -> Tri {
    let mut acc = Tri::new();
    for c in coeffs.iter().rev() {
        acc = tri_mul(&acc, x);
        for (e, v) in c {
            tri_add(&mut acc, *e, v.clone());
        }
    }
    acc
}

fn quartic_coeffs() -> Vec<Tri> {
    let b = |k| CoefPoly::b(k);
    vec![
        tri_const(b(4)),
        tri_const(-b(3)),
        tri_const(b(2)),
        tri_const(-b(1)),
        tri_const(CoefPoly::one()),
    ]
}

fn build_relations() -> Relations {
    let p = quartic_coeffs();
    let cubic = divide_linear(&p, &tri_alpha(4));
    let quadratic = divide_linear(&cubic, &tri_alpha(3));
    // Each relation is monic: X^k = X^k − f(X).
    let rule = |f: &[Tri], var: usize| {
        let x = tri_alpha(var + 2);
        let mut r = Tri::new();
        let mut lead = [0; 3];
        lead[var] = BOUNDS[var];
        tri_add(&mut r, lead, CoefPoly::one());
        for (e, c) in evaluate_at(f, &x) {
            tri_add(&mut r, e, -c);
        }
        debug_assert!(r.keys().all(|e| e[var] < BOUNDS[var]));
        r
    };
    Relations {
        rules: [rule(&quadratic, 0), rule(&cubic, 1), rule(&p, 2)],
    }
}

fn relations() -> &'static Relations {
    static REL: OnceLock<Relations> = OnceLock::new();
    REL.get_or_init(|| {
        let rel = build_relations();
        for j in 1..=4 {
            let r = reduce(evaluate_at(&quartic_coeffs(), &tri_alpha(j)), &rel);
            assert!(r.is_empty(), "P(α_{j}) does not reduce to 0");
        }
        rel
    })
}

fn reduce(mut p: Tri, rel: &Relations) -> Tri {
    for var in 0..3 {
        loop {
            let hits: Vec<[u32; 3]> = p
                .keys()
                .filter(|e| e[var] >= BOUNDS[var])
                .copied()
                .collect();
            if hits.is_empty() {
                break;
            }
            for e in hits {
                let Some(c) = p.remove(&e) else { continue };
                let mut rest = e;
                rest[var] -= BOUNDS[var];
                for (re, rc) in &rel.rules[var] {
                    tri_add(
                        &mut p,
                        [rest[0] + re[0], rest[1] + re[1], rest[2] + re[2]],
                        &c * rc,
                    );
                }
            }
        }
    }
    p
}

/// A basis monomial `α₄^{i₄} α₃^{i₃} α₂^{i₂}` with `i₄ ≤ 3, i₃ ≤ 2, i₂ ≤ 1`.
/// Ordered by `(i₄, i₃, i₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u32; 3]", try_from = "[u32; 3]")]
pub struct Monomial {
    i4: u32,
    i3: u32,
    i2: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i4: 0, i3: 0, i2: 0 };

    pub fn new(i4: u32, i3: u32, i2: u32) -> Option<Monomial> {
        (i4 < 4 && i3 < 3 && i2 < 2).then_some(Monomial { i4, i3, i2 })
    }

    pub fn i2(&self) -> u32 {
        self.i2
    }

    pub fn i3(&self) -> u32 {
        self.i3
    }

    pub fn i4(&self) -> u32 {
        self.i4
    }

    /// All 24 basis monomials in ascending order.
    pub fn all() -> Vec<Monomial> {
        let mut v = Vec::with_capacity(24);
        for i4 in 0..4 {
            for i3 in 0..3 {
                for i2 in 0..2 {
                    v.push(Monomial { i4, i3, i2 });
                }
            }
        }
        v
    }

    fn key(&self) -> [u32; 3] {
        [self.i2, self.i3, self.i4]
    }

    fn from_key(e: [u32; 3]) -> Monomial {
        Monomial::new(e[2], e[1], e[0]).expect("reduced exponent")
    }
}

impl From<Monomial> for [u32; 3] {
    fn from(m: Monomial) -> Self {
        [m.i4, m.i3, m.i2]
    }
}

impl TryFrom<[u32; 3]> for Monomial {
    type Error = String;
    fn try_from(e: [u32; 3]) -> Result<Self, String> {
        Monomial::new(e[0], e[1], e[2]).ok_or_else(|| format!("{e:?} is not a basis monomial"))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("a4", self.i4), ("a3", self.i3), ("a2", self.i2)]
            .iter()
            .filter(|(_, k)| *k > 0)
            .map(|(v, k)| power(v, *k))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A polynomial in `α₁, …, α₄` over [`CoefPoly`], before normalization.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootPoly {
    terms: BTreeMap<[u32; 4], CoefPoly>,
}

impl RootPoly {
    pub fn zero() -> RootPoly {
        RootPoly::default()
    }

    pub fn constant(c: CoefPoly) -> RootPoly {
        RootPoly::monomial([0; 4], c)
    }

    pub fn from_integer(c: i64) -> RootPoly {
        RootPoly::constant(CoefPoly::from_integer(c))
    }

    pub fn monomial(exps: [u32; 4], c: CoefPoly) -> RootPoly {
        let mut p = RootPoly::zero();
        p.add_term(exps, c);
        p
    }

    /// # Panics
    ///
    /// If `i` is not in `1..=4`.
    pub fn alpha(i: usize) -> RootPoly {
        assert!((1..=4).contains(&i), "α_{i} does not exist");
        let mut e = [0; 4];
        e[i - 1] = 1;
        RootPoly::monomial(e, CoefPoly::one())
    }

    /// The elementary symmetric polynomial `e_k(α₁, …, α₄)`.
    pub fn elementary_symmetric(k: usize) -> RootPoly {
        let mut p = RootPoly::zero();
        for mask in 0u32..16 {
            if mask.count_ones() as usize == k {
                let e = [0, 1, 2, 3].map(|i| (mask >> i) & 1);
                p.add_term(e, CoefPoly::one());
            }
        }
        p
    }

    /// `P(α_j) = α_j⁴ − b₁α_j³ + b₂α_j² − b₃α_j + b₄`.
    pub fn quartic_at(j: usize) -> RootPoly {
        let x = RootPoly::alpha(j);
        let mut acc = RootPoly::constant(CoefPoly::b(4));
        let coeffs = [-CoefPoly::b(3), CoefPoly::b(2), -CoefPoly::b(1), CoefPoly::one()];
        let mut xp = RootPoly::from_integer(1);
        for c in coeffs {
            xp = &xp * &x;
            acc = &acc + &(&xp * &RootPoly::constant(c));
        }
        acc
    }

    pub fn add_term(&mut self, exps: [u32; 4], c: CoefPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &CoefPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, k: u32) -> RootPoly {
        (0..k).fold(RootPoly::from_integer(1), |acc, _| &acc * self)
    }
}

impl<'a> Add<&'a RootPoly> for &'a RootPoly {
    type Output = RootPoly;
    fn add(self, rhs: &RootPoly) -> RootPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a RootPoly> for &'a RootPoly {
    type Output = RootPoly;
    fn sub(self, rhs: &RootPoly) -> RootPoly {
        self + &(-rhs)
    }
}

impl Neg for &RootPoly {
    type Output = RootPoly;
    fn neg(self) -> RootPoly {
        RootPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a RootPoly> for &'a RootPoly {
    type Output = RootPoly;
    fn mul(self, rhs: &RootPoly) -> RootPoly {
        let mut out = RootPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

forward_owned!(RootPoly, Add add, Sub sub, Mul mul);

/// An element of `K̃ = k(α₁, α₂, α₃, α₄)` in normal form: a combination of
/// the 24 basis [`Monomial`]s with [`CoefPoly`] coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(Monomial, CoefPoly)>", try_from = "Vec<(Monomial, CoefPoly)>")]
pub struct FieldElt {
    terms: BTreeMap<Monomial, CoefPoly>,
}

impl From<FieldElt> for Vec<(Monomial, CoefPoly)> {
    fn from(x: FieldElt) -> Self {
        x.terms.into_iter().collect()
    }
}

impl TryFrom<Vec<(Monomial, CoefPoly)>> for FieldElt {
    type Error = String;
    fn try_from(v: Vec<(Monomial, CoefPoly)>) -> Result<Self, String> {
        Ok(FieldElt::from_terms(v))
    }
}

impl FieldElt {
    pub fn zero() -> FieldElt {
        FieldElt::default()
    }

    pub fn one() -> FieldElt {
        FieldElt::from_coef(CoefPoly::one())
    }

    pub fn from_integer(c: i64) -> FieldElt {
        FieldElt::from_coef(CoefPoly::from_integer(c))
    }

    pub fn from_coef(c: CoefPoly) -> FieldElt {
        FieldElt::from_terms([(Monomial::ONE, c)])
    }

    /// Sums the given terms; the basis monomials make this a normal form.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, CoefPoly)>) -> FieldElt {
        let mut x = FieldElt::zero();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let slot = x.terms.entry(m).or_default();
            *slot += &c;
            if slot.is_zero() {
                x.terms.remove(&m);
            }
        }
        x
    }

    /// The root `α_i` in normal form.
    pub fn alpha(i: usize) -> FieldElt {
        FieldElt::from_tri(&tri_alpha(i))
    }

    fn from_tri(p: &Tri) -> FieldElt {
        FieldElt {
            terms: p.iter().map(|(e, c)| (Monomial::from_key(*e), c.clone())).collect(),
        }
    }

    fn to_tri(&self) -> Tri {
        self.terms.iter().map(|(m, c)| (m.key(), c.clone())).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CoefPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: Monomial) -> CoefPoly {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient when `self` lies in `k(b₁, …, b₄)`.
    pub fn as_coef(&self) -> Option<CoefPoly> {
        match self.terms.len() {
            0 => Some(CoefPoly::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &CoefPoly) -> FieldElt {
        FieldElt::from_terms(self.terms.iter().map(|(m, x)| (*m, x * c)))
    }

    pub fn pow(&self, k: u32) -> FieldElt {
        (0..k).fold(FieldElt::one(), |acc, _| &acc * self)
    }

    /// Substitutes numbers for `b₁..b₄` in every coefficient. The result
    /// still lives in the 24-dimensional algebra spanned by the basis.
    pub fn specialize(&self, b: &[BigRational; 4]) -> FieldElt {
        FieldElt::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (*m, CoefPoly::from_rational(c.evaluate(b)))),
        )
    }
}

/// Rewrites `p` in the basis `α₄^{i₄} α₃^{i₃} α₂^{i₂}`: `α₁ = b₁ − α₂ − α₃ − α₄`,
/// then `α₂²`, `α₃³`, `α₄⁴` are reduced by the quadratic cofactor
/// `P(X)/((X − α₄)(X − α₃))`, the cubic cofactor `P(X)/(X − α₄)` and `P`.
pub fn normal_form(p: &RootPoly) -> FieldElt {
    let a1 = tri_alpha(1);
    let mut a1_pows = vec![tri_const(CoefPoly::one())];
    let mut acc = Tri::new();
    for (e, c) in p.terms() {
        while a1_pows.len() <= e[0] as usize {
            let next = tri_mul(a1_pows.last().unwrap(), &a1);
            a1_pows.push(next);
        }
        for (k, v) in &a1_pows[e[0] as usize] {
            tri_add(&mut acc, [k[0] + e[1], k[1] + e[2], k[2] + e[3]], v * c);
        }
    }
    FieldElt::from_tri(&reduce(acc, relations()))
}

/// The field automorphism `α_i ↦ α_{g(i)}`.
///
/// # Panics
///
/// If `g` does not have degree 4.
pub fn galois_act(g: &Perm, x: &FieldElt) -> FieldElt {
    assert_eq!(g.degree(), 4, "galois_act needs a permutation of the 4 roots");
    if g.is_identity() {
        return x.clone();
    }
    let images: Vec<Tri> = (2..=4).map(|j| tri_alpha(g.apply(j))).collect();
    let mut pows: Vec<Vec<Tri>> = images.iter().map(|_| vec![tri_const(CoefPoly::one())]).collect();
    let mut acc = Tri::new();
    for (m, c) in x.terms() {
        let mut t = tri_const(c.clone());
        for (var, k) in m.key().into_iter().enumerate() {
            while pows[var].len() <= k as usize {
                let next = tri_mul(pows[var].last().unwrap(), &images[var]);
                pows[var].push(next);
            }
            t = tri_mul(&t, &pows[var][k as usize]);
        }
        for (e, v) in t {
            tri_add(&mut acc, e, v);
        }
    }
    FieldElt::from_tri(&reduce(acc, relations()))
}

/// `Δ = ∏_{i<j} (α_i − α_j)`, a square root of the discriminant.
pub fn sqrt_disc() -> FieldElt {
    let mut p = RootPoly::from_integer(1);
    for i in 1..=4 {
        for j in i + 1..=4 {
            p = &p * &(&RootPoly::alpha(i) - &RootPoly::alpha(j));
        }
    }
    normal_form(&p)
}

impl fmt::Display for FieldElt {
    /// Monomials by `(i₄, i₃, i₂)` descending; coefficients with more than
    /// one term are parenthesized, e.g. `a4^2*a2 - b1*a4^2 + (b2 - b1^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let cs = if c.len() > 1 {
                    format!("({c})")
                } else {
                    c.to_string()
                };
                if *m == Monomial::ONE {
                    cs
                } else if cs == "1" {
                    m.to_string()
                } else if cs == "-1" {
                    format!("-{m}")
                } else {
                    format!("{cs}*{m}")
                }
            })
            .collect();
        f.write_str(&join_signed(&terms))
    }
}

impl fmt::Debug for FieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElt({self})")
    }
}

impl<'a> Add<&'a FieldElt> for &'a FieldElt {
    type Output = FieldElt;
    fn add(self, rhs: &FieldElt) -> FieldElt {
        FieldElt::from_terms(self.terms.iter().chain(&rhs.terms).map(|(m, c)| (*m, c.clone())))
    }
}

impl<'a> Sub<&'a FieldElt> for &'a FieldElt {
    type Output = FieldElt;
    fn sub(self, rhs: &FieldElt) -> FieldElt {
        self + &(-rhs)
    }
}

impl Neg for &FieldElt {
    type Output = FieldElt;
    fn neg(self) -> FieldElt {
        FieldElt {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a FieldElt> for &'a FieldElt {
    type Output = FieldElt;
    fn mul(self, rhs: &FieldElt) -> FieldElt {
        FieldElt::from_tri(&reduce(tri_mul(&self.to_tri(), &rhs.to_tri()), relations()))
    }
}

forward_owned!(FieldElt, Add add, Sub sub, Mul mul);

impl Neg for FieldElt {
    type Output = FieldElt;
    fn neg(self) -> FieldElt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf_alpha(i: usize) -> FieldElt {
        normal_form(&RootPoly::alpha(i))
    }

    #[test]
    fn basis_has_24_monomials() {
        let all = Monomial::all();
        assert_eq!(all.len(), 24);
        assert!(Monomial::new(4, 0, 0).is_none());
        assert!(Monomial::new(3, 2, 1).is_some());
    }

    #[test]
    fn roots_satisfy_the_quartic() {
        for j in 1..=4 {
            assert!(normal_form(&RootPoly::quartic_at(j)).is_zero(), "P(α_{j})");
        }
    }

    #[test]
    fn elementary_symmetric_functions() {
        for k in 1..=4 {
            let e = normal_form(&RootPoly::elementary_symmetric(k));
            assert_eq!(e, FieldElt::from_coef(CoefPoly::b(k)), "e_{k}");
        }
    }

    #[test]
    fn alpha_one_is_eliminated() {
        let a1 = nf_alpha(1);
        assert_eq!(a1.to_string(), "-a4 - a3 - a2 + b1");
        assert_eq!(nf_alpha(4).to_string(), "a4");
    }

    #[test]
    fn galois_action_on_roots() {
        let g = Perm::parse("(1,3)", 4).unwrap();
        assert_eq!(galois_act(&g, &nf_alpha(1)), nf_alpha(3));
        let h = Perm::parse("(2,3)", 4).unwrap();
        assert_eq!(galois_act(&h, &nf_alpha(1)), nf_alpha(1));
        let c = Perm::parse("(1,2,3,4)", 4).unwrap();
        for i in 1..=4 {
            assert_eq!(galois_act(&c, &nf_alpha(i)), nf_alpha(c.apply(i)));
        }
    }

    #[test]
    fn discriminant_square_root() {
        let d = sqrt_disc();
        let t = Perm::parse("(1,2)", 4).unwrap();
        assert_eq!(galois_act(&t, &d), -&d);
        let c = Perm::parse("(2,3,4)", 4).unwrap();
        assert_eq!(galois_act(&c, &d), d);
        let d2 = &d * &d;
        assert!(d2.as_coef().is_some());
    }

    #[test]
    fn serde_round_trip() {
        let x = &sqrt_disc() + &nf_alpha(1);
        let json = serde_json::to_string(&x).unwrap();
        let back: FieldElt = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<FieldElt>(r#"[[[4,0,0],[]]]"#).is_err());
    }
}
