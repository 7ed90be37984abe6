//! Roots of definite lattices and the decomposition of the root system
//! into irreducible ADE components.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::RatMatrix;
use crate::{Error, Result};

use super::enumerate::{positive_gram, vectors_of_norm};
use super::lattice::Lattice;

/// Norm-2 vectors in the root-positive sign, canonically sorted.
pub fn roots(l: &Lattice) -> Result<Vec<Vec<i64>>> {
    let g = positive_gram(l).ok_or_else(|| Error::Invalid("lattice is not definite".into()))?;
    Ok(vectors_of_norm(&g, 2).expect("definite"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    E,
    D,
    A,
    /// Roots of a component matching no ADE count for its rank.
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn identify(rank: usize, count: usize) -> Component {
        let family = match (rank, count) {
            (r, c) if c == r * (r + 1) => Family::A,
            (r, c) if r >= 4 && c == 2 * r * (r - 1) => Family::D,
            (6, 72) | (7, 126) | (8, 240) => Family::E,
            _ => Family::Unknown,
        };
        Component { family, rank }
    }

    pub fn root_count(&self) -> Option<usize> {
        let r = self.rank;
        match self.family {
            Family::A => Some(r * (r + 1)),
            Family::D => Some(2 * r * (r - 1)),
            Family::E => [(6, 72), (7, 126), (8, 240)].iter().find(|(k, _)| *k == r).map(|(_, c)| *c),
            Family::Unknown => None,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Unknown => write!(f, "?{}", self.rank),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    /// Sorted: E before D before A, larger rank first.
    pub components: Vec<Component>,
    pub root_count: usize,
}

impl RootSystem {
    pub fn from_components(mut components: Vec<Component>) -> RootSystem {
        components.sort_by(|a, b| a.family.cmp(&b.family).then(b.rank.cmp(&a.rank)));
        let root_count = components.iter().filter_map(|c| c.root_count()).sum();
        RootSystem { components, root_count }
    }

    /// Parse a label such as `E6^2+A2^2` or `E6+A2+E8`; `0` is empty.
    pub fn parse(label: &str) -> Result<RootSystem> {
        if label.trim() == "0" {
            return Ok(RootSystem::from_components(vec![]));
        }
        let mut comps = Vec::new();
        for t in label.split('+') {
            let t = t.trim();
            let (body, pow) = match t.split_once('^') {
                Some((b, p)) => (b, p.parse::<usize>().map_err(|_| Error::Invalid(format!("bad power in {t}")))?),
                None => (t, 1),
            };
            let family = match body.chars().next() {
                Some('A') => Family::A,
                Some('D') => Family::D,
                Some('E') => Family::E,
                _ => return Err(Error::Invalid(format!("bad component {t}"))),
            };
            let rank = body[1..].parse::<usize>().map_err(|_| Error::Invalid(format!("bad rank in {t}")))?;
            comps.extend(std::iter::repeat_n(Component { family, rank }, pow));
        }
        Ok(RootSystem::from_components(comps))
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let k = self.components[i..].iter().take_while(|d| **d == c).count();
            parts.push(if k == 1 { c.to_string() } else { format!("{c}^{k}") });
            i += k;
        }
        parts.join("+")
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Components are the classes of roots under "not orthogonal"; each is
/// identified by the rank of its span and its size.
pub fn root_system(l: &Lattice) -> Result<RootSystem> {
    let rs = roots(l)?;
    let n = rs.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if l.pair(&rs[i], &rs[j]) != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(i);
    }
    let comps = classes
        .values()
        .map(|idx| {
            let rows: Vec<Vec<i64>> = idx.iter().map(|&i| rs[i].clone()).collect();
            let rank = RatMatrix::from_i64(&rows).rank();
            Component::identify(rank, idx.len())
        })
        .collect();
    Ok(RootSystem::from_components(comps))
}
