#![allow(dead_code)]

use hopf_galois::gpstruct::{build_lambda, fixed_field_subgroup, stable_subgroups, GPContext, HGStructure};
use hopf_galois::permcore::all_perms;
use hopf_galois::quartic::{galois_act, normal_form, CoefPoly, FieldElt, Monomial, RootPoly};
use hopf_galois::regenum::{
    enumerate_regular8, holomorph, normalized_by, normalized_by_via_holomorph, CayleyTable,
};
use hopf_galois::{IsoType8, Perm, PermGroup};
use rand::seq::SliceRandom;
use rand::Rng;

pub const STRUCTURES: &str = include_str!("../../golden/structures.txt");
pub const ACTION_TABLE: &str = include_str!("../../golden/action_table.txt");
pub const STABLE_TABLE: &str = include_str!("../../golden/stable_table.txt");
pub const PREIMAGE_TABLES: &str = include_str!("../../golden/preimage_tables.txt");
pub const EXPANSIONS: &str = include_str!("../../golden/expansions.txt");

pub fn p(s: &str, degree: usize) -> Perm {
    Perm::parse(s, degree).unwrap()
}

pub fn s4() -> PermGroup {
    PermGroup::parse("(1,2,3,4); (1,2)", 4).unwrap()
}

pub fn three_cycle() -> PermGroup {
    PermGroup::parse("(2,3,4)", 4).unwrap()
}

/// `λ` for `S₄` on the cosets of `⟨(2,3,4)⟩`, relabeled so that
/// `λ(τ) = (1,2,3,4)(5,6,7,8)` and `λ(σ) = (1,2)(3,5)(4,6)(7,8)`.
pub fn context() -> GPContext {
    let raw = build_lambda(&s4(), &three_cycle()).unwrap();
    let target = [p("(1,2,3,4)(5,6,7,8)", 8), p("(1,2)(3,5)(4,6)(7,8)", 8)];
    raw.canonical_relabel(&target).unwrap().1
}

pub type Named = Vec<(String, Perm)>;

/// `(label, named generators)` per line of the structure list.
pub fn golden_structures() -> Vec<(String, Named)> {
    STRUCTURES
        .lines()
        .filter(|l| !l.is_empty())
        .map(|line| {
            let mut cols = line.split('\t');
            let label = cols.next().unwrap().to_string();
            let gens = cols
                .map(|c| {
                    let (n, cyc) = c.split_once(" = ").unwrap();
                    (n.to_string(), p(cyc, 8))
                })
                .collect();
            (label, gens)
        })
        .collect()
}

pub fn structure(label: &str, gens: &Named) -> HGStructure {
    HGStructure {
        label: label.to_string(),
        group: PermGroup::new(8, gens.iter().map(|(_, g)| *g).collect()).unwrap(),
        type_name: "C2xC2xC2".into(),
    }
}

/// Evaluates a word such as `r_3s_3t_3`, `τ^2` or `Id` as a left-to-right
/// product of named generators.
pub fn word(text: &str, gens: &Named, degree: usize) -> Perm {
    let mut acc = Perm::identity(degree);
    if text == "Id" || text == "1_G" {
        return acc;
    }
    let mut rest = text;
    while !rest.is_empty() {
        let (name, g) = gens
            .iter()
            .filter(|(n, _)| rest.starts_with(n.as_str()))
            .max_by_key(|(n, _)| n.len())
            .unwrap_or_else(|| panic!("no generator at {rest:?} in {text:?}"));
        rest = &rest[name.len()..];
        let mut k = 1;
        if let Some(after) = rest.strip_prefix('^') {
            let digits: String = after.chars().take_while(char::is_ascii_digit).collect();
            k = digits.parse().unwrap();
            rest = &after[digits.len()..];
        }
        for _ in 0..k {
            acc = acc * *g;
        }
    }
    acc
}

pub fn subgroup_from_words(text: &str, gens: &Named) -> PermGroup {
    let inner = text.trim_start_matches('⟨').trim_end_matches('⟩');
    let elts = inner.split(", ").map(|w| word(w, gens, 8)).collect();
    PermGroup::new(8, elts).unwrap()
}

/// Evaluates an expansion line (`a4^3 + b1*a3*a2 - b3`, integer
/// coefficients) at integer roots, with `b_k` the elementary symmetric
/// functions of the roots.
pub fn evaluate_expansion(line: &str, roots: [i128; 4]) -> i128 {
    let b = elementary(roots);
    let mut total = 0i128;
    let mut sign = 1i128;
    for token in line.split(' ') {
        match token {
            "+" => sign = 1,
            "-" => sign = -1,
            term => {
                let (sign_here, term) = match term.strip_prefix('-') {
                    Some(t) => (-sign, t),
                    None => (sign, term),
                };
                let mut value = sign_here;
                for factor in term.split('*') {
                    let (base, exp) = factor.split_once('^').unwrap_or((factor, "1"));
                    let exp: u32 = exp.parse().unwrap();
                    let v = match base.as_bytes()[0] {
                        b'a' => roots[usize::from(base.as_bytes()[1] - b'1')],
                        b'b' => b[usize::from(base.as_bytes()[1] - b'1')],
                        _ => base.parse::<i128>().unwrap(),
                    };
                    value *= v.pow(exp);
                }
                total += value;
            }
        }
    }
    total
}

pub fn elementary(r: [i128; 4]) -> [i128; 4] {
    let mut e = [0i128; 4];
    for mask in 1u32..16 {
        let k = mask.count_ones() as usize;
        let prod: i128 = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| r[i]).product();
        e[k - 1] += prod;
    }
    e
}

/// Order of `Aut(T)` by brute force over bijections fixing the identity
/// (element 0 of the table).
pub fn automorphism_count(table: &CayleyTable) -> usize {
    let n = table.order();
    let mut count = 0;
    for f in all_perms(n) {
        let f = |x: usize| f.apply(x + 1) - 1;
        if f(0) != 0 {
            continue;
        }
        let hom = (0..n).all(|a| (0..n).all(|b| f(table.mul(a, b)) == table.mul(f(a), f(b))));
        if hom {
            count += 1;
        }
    }
    count
}

pub fn random_perm<R: Rng>(rng: &mut R, degree: usize) -> Perm {
    let mut images: Vec<usize> = (1..=degree).collect();
    images.shuffle(rng);
    Perm::from_images(&images).unwrap()
}

fn random_coef<R: Rng>(rng: &mut R) -> CoefPoly {
    let c = CoefPoly::from_integer(rng.gen_range(-3..=3));
    if rng.gen_bool(0.3) {
        &c * &CoefPoly::b(rng.gen_range(1..=4))
    } else {
        c
    }
}

pub fn random_root_poly<R: Rng>(rng: &mut R) -> RootPoly {
    let mut p = RootPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let e = [0; 4].map(|_: u32| rng.gen_range(0..=3));
        p.add_term(e, random_coef(rng));
    }
    p
}

pub fn random_field_elt<R: Rng>(rng: &mut R) -> FieldElt {
    let basis = Monomial::all();
    FieldElt::from_terms((0..rng.gen_range(1..=3)).map(|_| (*basis.choose(rng).unwrap(), random_coef(rng))))
}

pub fn lift(x: &FieldElt) -> RootPoly {
    let mut p = RootPoly::zero();
    for (m, c) in x.terms() {
        p.add_term([0, m.i2(), m.i3(), m.i4()], c.clone());
    }
    p
}

pub fn check_holomorph_equivalence(n: &PermGroup, l: &PermGroup) -> Result<bool, String> {
    let direct = normalized_by(n, l).map_err(|e| e.to_string())?;
    let via = normalized_by_via_holomorph(n, l).map_err(|e| e.to_string())?;
    let brute = l.elements().iter().all(|g| n.conjugate_by(g).same_elements(n));
    if direct != via || direct != brute {
        return Err(format!("disagree: direct {direct}, holomorph {via}, brute {brute}"));
    }
    Ok(direct)
}

/// A random regular subgroup of `S₈` and a subgroup that normalizes it half
/// of the time.
pub fn random_pair<R: Rng>(rng: &mut R) -> (PermGroup, PermGroup) {
    let ty = *IsoType8::ALL.choose(rng).unwrap();
    let rho = CayleyTable::order8(ty).right_regular().unwrap();
    let n = rho.conjugate_by(&random_perm(rng, 8));
    let count = rng.gen_range(1..=2);
    let gens: Vec<Perm> = if rng.gen_bool(0.5) {
        let norm = n.normalizer_in_sym().unwrap();
        (0..count).map(|_| *norm.elements().choose(rng).unwrap()).collect()
    } else {
        (0..count).map(|_| random_perm(rng, 8)).collect()
    };
    let l = PermGroup::with_cap(8, gens, 40_320).unwrap();
    (n, l)
}

/// `|class| · |Hol(T)| = 8!` and `N_{S₈}(ρ(T)) = Hol(T)` in order.
pub fn check_orbit_stabilizer(ty: IsoType8) -> Result<(), String> {
    let table = CayleyTable::order8(ty);
    let class = enumerate_regular8(ty).map_err(|e| e.to_string())?.members.len();
    let hol = holomorph(&table).map_err(|e| e.to_string())?.order();
    let norm = table.right_regular().unwrap().normalizer_in_sym().unwrap().order();
    if class * hol != 40_320 || norm != hol {
        return Err(format!("{ty}: class {class}, |Hol| {hol}, |normalizer| {norm}"));
    }
    Ok(())
}

pub fn check_normal_form(p: &RootPoly, q: &RootPoly) -> Result<(), String> {
    let (np, nq) = (normal_form(p), normal_form(q));
    if normal_form(&lift(&np)) != np {
        return Err(format!("not idempotent on {np}"));
    }
    if normal_form(&(p + q)) != &np + &nq {
        return Err("sum".into());
    }
    if normal_form(&(p * q)) != &np * &nq {
        return Err("product".into());
    }
    Ok(())
}

pub fn check_elementary_symmetric() -> Result<(), String> {
    for k in 1..=4 {
        let e = normal_form(&RootPoly::elementary_symmetric(k));
        if e != FieldElt::from_coef(CoefPoly::b(k)) {
            return Err(format!("e_{k} = {e}"));
        }
    }
    Ok(())
}

/// `g(h(x)) = (gh)(x)` and `g(x·y) = g(x)·g(y)`.
pub fn check_galois_hom(g: &Perm, h: &Perm, x: &FieldElt, y: &FieldElt) -> Result<(), String> {
    if galois_act(g, &galois_act(h, x)) != galois_act(&(*g * *h), x) {
        return Err(format!("composition fails for {g}, {h}"));
    }
    if galois_act(g, &(x * y)) != &galois_act(g, x) * &galois_act(g, y) {
        return Err(format!("multiplicativity fails for {g}"));
    }
    Ok(())
}

/// `S ⊆ T ⟹ G_S ⊆ G_T`, `[G : G_S] = n/|S|`, and `G_S ⊇ G'`.
pub fn check_stable_lattice(ctx: &GPContext, s: &HGStructure) -> Result<usize, String> {
    let stable = stable_subgroups(ctx, s).map_err(|e| e.to_string())?;
    let g = ctx.group().order();
    for a in &stable {
        let gs = fixed_field_subgroup(ctx, &a.subgroup).map_err(|e| e.to_string())?;
        if g / gs.order() != ctx.degree() / a.subgroup.order() || a.degree_over_k != g / gs.order() {
            return Err(format!("{}: degree formula fails for a subgroup of order {}", s.label, a.subgroup.order()));
        }
        if !ctx.subgroup().is_subgroup_of(&gs) {
            return Err(format!("{}: G' not inside G_S", s.label));
        }
        for b in &stable {
            if a.subgroup.is_subgroup_of(&b.subgroup) && !a.fixed_group.is_subgroup_of(&b.fixed_group) {
                return Err(format!("{}: inclusion not reversed", s.label));
            }
        }
    }
    Ok(stable.len())
}
