//! Small permutations as index tables, plus cycle-notation parsing over
//! arbitrary label sets.

use crate::error::{Error, Result};

/// A permutation of `0..n` stored as an image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds from an image table, rejecting non-bijective input.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: u16) -> u16 {
        self.images[i as usize]
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm { images: inv }
    }

    /// `self` after `other`: (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    /// All n! permutations of `0..n` in lexicographic order of image tables.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u16> = (0..n as u16).collect();
        loop {
            out.push(Perm {
                images: cur.clone(),
            });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [u16]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Parses disjoint-cycle notation like `"(a b)(c d e)"` over the given
/// labels. Fixed points may be omitted; the empty string is the identity.
pub fn parse_cycles(s: &str, labels: &[String]) -> Result<Perm> {
    let index_of = |lbl: &str| -> Result<u16> {
        labels
            .iter()
            .position(|l| l == lbl)
            .map(|i| i as u16)
            .ok_or_else(|| Error::UnknownLabel(lbl.to_string()))
    };
    let mut images: Vec<u16> = (0..labels.len() as u16).collect();
    let mut moved = vec![false; labels.len()];
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Perm { images });
    }
    let mut rest = s;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(Error::MalformedDocument(format!(
                "expected `(` in cycle notation near `{rest}`"
            )));
        }
        let close = rest.find(')').ok_or_else(|| {
            Error::MalformedDocument(format!("unbalanced `(` in cycle notation `{s}`"))
        })?;
        let body = &rest[1..close];
        rest = &rest[close + 1..];
        let cycle: Vec<u16> = body
            .split_whitespace()
            .map(index_of)
            .collect::<Result<_>>()?;
        if cycle.len() < 2 {
            continue; // explicit fixed point
        }
        for w in 0..cycle.len() {
            let from = cycle[w] as usize;
            let to = cycle[(w + 1) % cycle.len()];
            if moved[from] {
                return Err(Error::NotAPermutation(format!(
                    "label `{}` appears twice in `{s}`",
                    labels[from]
                )));
            }
            moved[from] = true;
            images[from] = to;
        }
    }
    Perm::from_images(images)
}

/// Formats a permutation in disjoint-cycle notation over `labels`,
/// omitting fixed points; identity prints as `()`.
pub fn format_cycles(p: &Perm, labels: &[String]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p.apply(start as u16) as usize == start {
            continue;
        }
        out.push('(');
        let mut cur = start;
        let mut first = true;
        while !seen[cur] {
            seen[cur] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&labels[cur]);
            first = false;
            cur = p.apply(cur as u16) as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_format_roundtrip() {
        let lb = labels(&["x", "y", "z"]);
        let p = parse_cycles("(x y z)", &lb).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(format_cycles(&p, &lb), "(x y z)");
        let id = parse_cycles("", &lb).unwrap();
        assert!(id.is_identity());
        assert_eq!(format_cycles(&id, &lb), "()");
    }

    #[test]
    fn parse_rejects_repeats() {
        let lb = labels(&["a", "b"]);
        assert!(parse_cycles("(a b)(a b)", &lb).is_err());
        assert!(parse_cycles("(a q)", &lb).is_err());
    }

    #[test]
    fn all_permutations_count() {
        assert_eq!(Perm::all(3).len(), 6);
        assert_eq!(Perm::all(1).len(), 1);
    }

    #[test]
    fn compose_order() {
        let lb = labels(&["a", "b", "c"]);
        let f = parse_cycles("(a b)", &lb).unwrap();
        let g = parse_cycles("(b c)", &lb).unwrap();
        // (f.compose(g))(b) = f(g(b)) = f(c) = c
        assert_eq!(f.compose(&g).apply(1), 2);
    }
}
