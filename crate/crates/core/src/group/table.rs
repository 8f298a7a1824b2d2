use std::fmt::Write as _;

use super::FiniteGroup;
use crate::{Error, Result};

/// Largest order stored as a dense Cayley table.
pub const DENSE_ORDER_CAP: usize = 5000;

/// A finite group stored as a dense Cayley table, identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<u16>,
    inv: Vec<u16>,
    gens: Vec<usize>,
}

impl GroupTable {
    /// Tabulates `mul` on `0..order`. Index 0 must be the identity.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if order > DENSE_ORDER_CAP {
            return Err(Error::OrderCap { order, cap: DENSE_ORDER_CAP });
        }
        let mut mult = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let c = mul(a, b);
                if c >= order {
                    return Err(Error::InvalidTable(format!("product {a}*{b} = {c} out of range")));
                }
                mult.push(c as u16);
            }
        }
        Self::from_table(order, mult)
    }

    fn from_table(order: usize, mult: Vec<u16>) -> Result<Self> {
        for a in 0..order {
            if mult[a] as usize != a || mult[a * order] as usize != a {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        // Latin square check: every row and column is a permutation.
        let mut seen = vec![0u32; order];
        for a in 0..order {
            let stamp = a as u32 + 1;
            for b in 0..order {
                let c = mult[a * order + b] as usize;
                if seen[c] == stamp {
                    return Err(Error::InvalidTable(format!("row {a} repeats {c}")));
                }
                seen[c] = stamp;
            }
        }
        seen.fill(0);
        for b in 0..order {
            let stamp = b as u32 + 1;
            for a in 0..order {
                let c = mult[a * order + b] as usize;
                if seen[c] == stamp {
                    return Err(Error::InvalidTable(format!("column {b} repeats {c}")));
                }
                seen[c] = stamp;
            }
        }
        let mut inv = vec![0u16; order];
        for a in 0..order {
            let b = (0..order).find(|&b| mult[a * order + b] == 0).expect("latin square");
            inv[a] = b as u16;
        }
        let mut t = GroupTable { order, mult, inv, gens: Vec::new() };
        t.check_associativity()?;
        t.gens = super::greedy_generators(&t, 0..order);
        Ok(t)
    }

    /// Exhaustive for small orders, a deterministic sample of triples otherwise.
    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::InvalidTable(format!("not associative at ({a},{b},{c})")));
            }
            Ok(())
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
            for _ in 0..20_000 {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                let a = (x % n as u64) as usize;
                let b = ((x >> 21) % n as u64) as usize;
                let c = ((x >> 42) % n as u64) as usize;
                check(a, b, c)?;
            }
        }
        Ok(())
    }

    /// Parses a Cayley table: first line the order `N`, then `N` rows of `N`
    /// whitespace-separated 0-based indices. If the identity is not index 0 it
    /// is swapped into place.
    pub fn parse_cayley(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let order: usize = tokens
            .next()
            .ok_or_else(|| Error::InvalidTable("missing order".into()))?
            .parse()
            .map_err(|e| Error::InvalidTable(format!("bad order: {e}")))?;
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if order > DENSE_ORDER_CAP {
            return Err(Error::OrderCap { order, cap: DENSE_ORDER_CAP });
        }
        let mut raw = Vec::with_capacity(order * order);
        for tok in tokens.by_ref().take(order * order) {
            let v: usize = tok.parse().map_err(|e| Error::InvalidTable(format!("bad entry {tok:?}: {e}")))?;
            if v >= order {
                return Err(Error::InvalidTable(format!("entry {v} out of range")));
            }
            raw.push(v);
        }
        if raw.len() != order * order {
            return Err(Error::InvalidTable(format!("expected {} entries, got {}", order * order, raw.len())));
        }
        if tokens.next().is_some() {
            return Err(Error::InvalidTable("trailing entries".into()));
        }
        let e = (0..order)
            .find(|&e| (0..order).all(|x| raw[e * order + x] == x && raw[x * order + e] == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let relabel = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
        Self::from_fn(order, |a, b| relabel(raw[relabel(a) * order + relabel(b)]))
    }

    pub fn to_cayley(&self) -> String {
        let mut s = format!("{}\n", self.order);
        for a in 0..self.order {
            for b in 0..self.order {
                if b > 0 {
                    s.push(' ');
                }
                write!(s, "{}", self.mul(a, b)).unwrap();
            }
            s.push('\n');
        }
        s
    }

    /// Dense table of a subgroup of `g`, listed by `elements` (ascending, so
    /// the identity comes first). Local index `i` corresponds to `elements[i]`.
    pub fn from_subgroup<G: FiniteGroup + ?Sized>(g: &G, elements: &[usize]) -> Result<Self> {
        if elements.first() != Some(&0) {
            return Err(Error::InvalidArgument("subgroup listing must start with the identity".into()));
        }
        let mut local = std::collections::HashMap::with_capacity(elements.len());
        for (i, &x) in elements.iter().enumerate() {
            local.insert(x, i);
        }
        let n = elements.len();
        if n > DENSE_ORDER_CAP {
            return Err(Error::OrderCap { order: n, cap: DENSE_ORDER_CAP });
        }
        let mut mult = Vec::with_capacity(n * n);
        for &a in elements {
            for &b in elements {
                let c = g.mul(a, b);
                let &i = local.get(&c).ok_or_else(|| Error::InvalidArgument("elements are not closed".into()))?;
                mult.push(i as u16);
            }
        }
        Self::from_table(n, mult)
    }
}

impl FiniteGroup for GroupTable {
    fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral};

    #[test]
    fn rejects_bad_tables() {
        assert!(GroupTable::parse_cayley("2\n0 1\n1 1\n").is_err());
        assert!(GroupTable::parse_cayley("2\n0 1\n1 0\n1").is_err());
        assert!(GroupTable::parse_cayley("2\n0 1\n1").is_err());
        assert!(GroupTable::parse_cayley("").is_err());
        // Latin square without identity.
        assert!(GroupTable::parse_cayley("2\n1 0\n1 0\n").is_err());
        // Latin square with identity but not associative (order-5 loop).
        let loop5 = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        assert!(GroupTable::parse_cayley(loop5).is_err());
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // C3 written with identity at index 2.
        let t = GroupTable::parse_cayley("3\n1 2 0\n2 0 1\n0 1 2\n").unwrap();
        assert_eq!(t.order(), 3);
        for a in 0..3 {
            assert_eq!(t.mul(0, a), a);
            assert_eq!(t.mul(a, t.inv(a)), 0);
        }
    }

    #[test]
    fn cayley_round_trip() {
        let d = dihedral(10).unwrap();
        let back = GroupTable::parse_cayley(&d.to_cayley()).unwrap();
        assert_eq!(d, back);
    }

    #[test]
    fn subgroup_table_matches_parent() {
        let c = cyclic(12).unwrap();
        let elems = vec![0, 3, 6, 9];
        let t = GroupTable::from_subgroup(&c, &elems).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(elems[t.mul(a, b)], c.mul(elems[a], elems[b]));
            }
        }
        assert!(GroupTable::from_subgroup(&c, &[0, 5]).is_err());
    }

    #[test]
    fn order_cap() {
        assert!(matches!(cyclic(DENSE_ORDER_CAP + 1), Err(Error::OrderCap { .. })));
    }
}
