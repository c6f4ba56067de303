use std::collections::{BTreeMap, VecDeque};

use crate::permcore::{Perm, PermGroup};

/// Names every element of a group as a shortest word in named generators,
/// found breadth-first with generators tried in order. Words are products
/// read left to right (`"r_3s_3"` is `r₃·s₃`), runs of one generator are
/// written as powers, and the identity is `"Id"`.
#[derive(Clone, Debug)]
pub struct Naming {
    order: Vec<(Perm, String)>,
    index: BTreeMap<Perm, usize>,
}

impl Naming {
    pub fn new(generators: &[(String, Perm)]) -> Naming {
        let degree = generators.first().map_or(1, |(_, p)| p.degree());
        let id = Perm::identity(degree);
        let mut words: Vec<(Perm, Vec<usize>)> = vec![(id, Vec::new())];
        let mut index = BTreeMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for (gi, (_, g)) in generators.iter().enumerate() {
                let next = words[i].0 * *g;
                if index.contains_key(&next) {
                    continue;
                }
                let mut w = words[i].1.clone();
                w.push(gi);
                index.insert(next, words.len());
                queue.push_back(words.len());
                words.push((next, w));
            }
        }
        let order = words
            .into_iter()
            .map(|(p, w)| (p, spell(generators, &w)))
            .collect();
        Naming { order, index }
    }

    pub fn name(&self, p: &Perm) -> Option<&str> {
        self.index.get(p).map(|&i| self.order[i].1.as_str())
    }

    /// The name, or the cycle notation when `p` is outside the group.
    pub fn name_or_cycles(&self, p: &Perm) -> String {
        self.name(p).map_or_else(|| p.to_string(), str::to_string)
    }

    /// Elements in naming order: identity, generators, then longer words.
    pub fn elements(&self) -> impl Iterator<Item = (&Perm, &str)> {
        self.order.iter().map(|(p, n)| (p, n.as_str()))
    }

    /// `⟨x, y, …⟩` with generators picked greedily in naming order.
    pub fn subgroup_name(&self, sub: &PermGroup) -> String {
        let mut chosen: Vec<Perm> = Vec::new();
        let mut span = PermGroup::trivial(sub.degree());
        for (p, _) in &self.order {
            if span.order() == sub.order() {
                break;
            }
            if sub.contains(p) && !span.contains(p) {
                chosen.push(*p);
                span = PermGroup::new(sub.degree(), chosen.clone()).expect("subgroup of a named group");
            }
        }
        let names: Vec<String> = chosen.iter().map(|p| self.name_or_cycles(p)).collect();
        format!("⟨{}⟩", names.join(", "))
    }
}

fn spell(generators: &[(String, Perm)], word: &[usize]) -> String {
    if word.is_empty() {
        return "Id".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let run = word[i..].iter().take_while(|&&g| g == word[i]).count();
        out.push_str(&generators[word[i]].0);
        if run > 1 {
            out.push_str(&format!("^{run}"));
        }
        i += run;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_of_an_elementary_abelian_group() {
        let gens: Vec<(String, Perm)> = [
            ("r_3", "(1,6)(2,4)(3,8)(5,7)"),
            ("s_3", "(1,7)(2,3)(4,8)(5,6)"),
            ("t_3", "(1,8)(2,5)(3,6)(4,7)"),
        ]
        .iter()
        .map(|(n, c)| (n.to_string(), Perm::parse(c, 8).unwrap()))
        .collect();
        let naming = Naming::new(&gens);
        let names: Vec<&str> = naming.elements().map(|(_, n)| n).collect();
        assert_eq!(
            names,
            ["Id", "r_3", "s_3", "t_3", "r_3s_3", "r_3t_3", "s_3t_3", "r_3s_3t_3"]
        );
    }

    #[test]
    fn powers_are_compressed() {
        let gens = vec![
            ("τ".to_string(), Perm::parse("(1,2,3,4)", 4).unwrap()),
            ("σ".to_string(), Perm::parse("(1,2)", 4).unwrap()),
        ];
        let naming = Naming::new(&gens);
        assert_eq!(naming.name(&Perm::parse("(1,3)(2,4)", 4).unwrap()), Some("τ^2"));
        let st = Perm::parse("(1,2)", 4).unwrap() * Perm::parse("(1,2,3,4)", 4).unwrap();
        assert_eq!(naming.name(&st), Some("στ"));
        let sub = PermGroup::parse("(1,2); (1,3)(2,4)", 4).unwrap();
        assert_eq!(naming.subgroup_name(&sub), "⟨σ, τ^2⟩");
    }
}
