//! Abstract finite groups given by Cayley tables.
//!
//! Text format: line `k` holds row `k` of the table as space-separated
//! 1-based element indices; element 1 is the identity.

use std::fmt;

use crate::error::{Error, Result};
use crate::permcore::{IsoType8, Perm, PermGroup, MAX_DEGREE};

#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    // 0-based: rows[a][b] = a*b
    rows: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn parse(text: &str) -> Result<CayleyTable> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .ok()
                            .and_then(|v| v.checked_sub(1))
                            .ok_or_else(|| Error::InvalidTable(format!("bad entry {tok:?}")))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CayleyTable::from_rows(rows)
    }

    /// Validates a 0-based table: square, identity at index 0, Latin,
    /// associative.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<CayleyTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > MAX_DEGREE {
            return Err(Error::SizeLimit {
                what: "Cayley tables",
                order: n,
                limit: MAX_DEGREE,
            });
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {} has {} entries", a + 1, row.len())));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTable(format!("row {} is not a permutation", a + 1)));
                }
            }
        }
        for a in 0..n {
            if rows[0][a] != a || rows[a][0] != a {
                return Err(Error::InvalidTable("element 1 is not the identity".into()));
            }
            let col: std::collections::HashSet<usize> = (0..n).map(|b| rows[b][a]).collect();
            if col.len() != n {
                return Err(Error::InvalidTable(format!("column {} repeats", a + 1)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(CayleyTable { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// 0-based product.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Left translations `x ↦ g·x` as permutations of the `order` points.
    pub fn left_regular(&self) -> Result<PermGroup> {
        let n = self.order();
        let gens = (0..n)
            .map(|g| Perm::from_zero_based(&(0..n).map(|x| self.mul(g, x)).collect::<Vec<_>>()))
            .collect();
        PermGroup::new(n, gens)
    }

    /// Right translations `x ↦ x·g`.
    pub fn right_regular(&self) -> Result<PermGroup> {
        let n = self.order();
        let gens = (0..n)
            .map(|g| Perm::from_zero_based(&(0..n).map(|x| self.mul(x, g)).collect::<Vec<_>>()))
            .collect();
        PermGroup::new(n, gens)
    }

    /// Multiplication table of a regular permutation group, with element `x`
    /// the unique member sending point 1 to point `x`. Under this labelling
    /// the group's own action is left translation.
    pub fn of_regular_group(group: &PermGroup) -> Result<CayleyTable> {
        if !group.is_regular() {
            return Err(Error::NotRegular);
        }
        let n = group.degree();
        let mut by_point = vec![Perm::identity(n); n];
        for g in group.elements() {
            by_point[g.apply(1) - 1] = *g;
        }
        let rows = (0..n)
            .map(|x| (0..n).map(|y| by_point[x].apply0(y)).collect())
            .collect();
        CayleyTable::from_rows(rows)
    }

    pub fn cyclic(n: usize) -> CayleyTable {
        CayleyTable::from_rows((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
            .expect("cyclic table is valid")
    }

    /// Dihedral group of order `2m`: element `k` is `r^k` for `k < m` and
    /// `s r^(k-m)` otherwise.
    pub fn dihedral(m: usize) -> CayleyTable {
        let n = 2 * m;
        let split = |x: usize| (x % m, x / m);
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let (ka, fa) = split(a);
                        let (kb, fb) = split(b);
                        // (r^ka s^fa)(r^kb s^fb) with s r = r^-1 s
                        let k = if fa == 0 { (ka + kb) % m } else { (ka + m - kb) % m };
                        k + m * ((fa + fb) % 2)
                    })
                    .collect()
            })
            .collect();
        CayleyTable::from_rows(rows).expect("dihedral table is valid")
    }

    pub fn direct_product(&self, other: &CayleyTable) -> CayleyTable {
        let m = other.order();
        let n = self.order() * m;
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.mul(a / m, b / m) * m + other.mul(a % m, b % m))
                    .collect()
            })
            .collect();
        CayleyTable::from_rows(rows).expect("product table is valid")
    }

    /// The shipped fixture for an order-8 type.
    pub fn order8(ty: IsoType8) -> CayleyTable {
        let text = match ty {
            IsoType8::C8 => include_str!("../../fixtures/c8.txt"),
            IsoType8::C2xC4 => include_str!("../../fixtures/c2xc4.txt"),
            IsoType8::C2xC2xC2 => include_str!("../../fixtures/c2xc2xc2.txt"),
            IsoType8::D8 => include_str!("../../fixtures/d8.txt"),
            IsoType8::Q8 => include_str!("../../fixtures/q8.txt"),
        };
        CayleyTable::parse(text).expect("fixture tables are valid")
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable(order {})", self.order())
    }
}

/// A named isomorphism type of small group.
#[derive(Clone, Debug)]
pub struct GroupType {
    pub name: String,
    pub table: CayleyTable,
}

/// Every isomorphism type of group of order `n`, for `1 <= n <= 8`.
pub fn types_of_order(n: usize) -> Result<Vec<GroupType>> {
    let ty = |name: &str, table: CayleyTable| GroupType {
        name: name.to_string(),
        table,
    };
    Ok(match n {
        1 | 2 | 3 | 5 | 7 => vec![ty(&format!("C{n}"), CayleyTable::cyclic(n))],
        4 => vec![
            ty("C4", CayleyTable::cyclic(4)),
            ty("C2xC2", CayleyTable::cyclic(2).direct_product(&CayleyTable::cyclic(2))),
        ],
        6 => vec![ty("C6", CayleyTable::cyclic(6)), ty("S3", CayleyTable::dihedral(3))],
        8 => IsoType8::ALL
            .iter()
            .map(|t| ty(t.name(), CayleyTable::order8(*t)))
            .collect(),
        _ => return Err(Error::UnsupportedDegree(n)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::{are_isomorphic, order8_type};

    #[test]
    fn fixtures_match_their_types() {
        for ty in IsoType8::ALL {
            let table = CayleyTable::order8(ty);
            assert_eq!(order8_type(&table.left_regular().unwrap()).unwrap(), ty);
            assert_eq!(order8_type(&table.right_regular().unwrap()).unwrap(), ty);
        }
    }

    #[test]
    fn fixtures_agree_with_constructions() {
        let c2 = CayleyTable::cyclic(2);
        let built = [
            (IsoType8::C8, CayleyTable::cyclic(8)),
            (IsoType8::C2xC4, c2.direct_product(&CayleyTable::cyclic(4))),
            (IsoType8::C2xC2xC2, c2.direct_product(&c2).direct_product(&c2)),
            (IsoType8::D8, CayleyTable::dihedral(4)),
        ];
        for (ty, table) in built {
            let a = CayleyTable::order8(ty).left_regular().unwrap();
            let b = table.left_regular().unwrap();
            assert!(are_isomorphic(&a, &b).unwrap(), "{ty}");
        }
    }

    #[test]
    fn text_round_trip() {
        let t = CayleyTable::order8(IsoType8::Q8);
        assert_eq!(CayleyTable::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(CayleyTable::parse("").is_err());
        assert!(CayleyTable::parse("1 2\n2 2").is_err());
        assert!(CayleyTable::parse("2 1\n1 2").is_err());
        assert!(CayleyTable::parse("1 2\n2").is_err());
        assert!(CayleyTable::parse("1 x\n2 1").is_err());
        // Latin square with identity that is not associative (order 5 loop).
        let loop5 = "1 2 3 4 5\n2 1 4 5 3\n3 5 1 2 4\n4 3 5 1 2\n5 4 2 3 1";
        assert!(CayleyTable::parse(loop5).is_err());
    }

    #[test]
    fn regular_group_table_has_left_action() {
        let n = PermGroup::parse(
            "(1,6)(2,4)(3,8)(5,7); (1,7)(2,3)(4,8)(5,6); (1,8)(2,5)(3,6)(4,7)",
            8,
        )
        .unwrap();
        let table = CayleyTable::of_regular_group(&n).unwrap();
        assert_eq!(table.left_regular().unwrap(), n);
    }

    #[test]
    fn type_catalog_sizes() {
        let counts: Vec<usize> = (1..=8).map(|n| types_of_order(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5]);
        assert!(types_of_order(9).is_err());
    }
}
