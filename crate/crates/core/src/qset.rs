//! Finite quadratic sets `(X, r)` stored as exhaustive pair tables, the
//! induced left/right actions, and the pointwise structural predicates.
//!
//! The map `r(x, y) = (x ▸ y, x ◂ y)` is kept as a total table on the
//! square of the carrier. Bijectivity of `r` is deliberately *not* an
//! invariant: degenerate tables load fine so they can be diagnosed, and
//! operations that need an honest bijection state it as a prerequisite.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::report::{CheckOptions, ConditionReport, Witness};

/// Index into the carrier of a particular [`QuadraticSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub u16);

impl ElementId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// The names of the nine structural predicates, in canonical report order.
pub const PREDICATE_NAMES: [&str; 9] = [
    "bijective",
    "involutive",
    "square_free",
    "left_nondegenerate",
    "right_nondegenerate",
    "nondegenerate",
    "left_2cancellative",
    "right_2cancellative",
    "2cancellative",
];

/// A finite carrier together with a total map `r : X² -> X²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSet {
    name: String,
    labels: Vec<String>,
    /// `table[x * n + y] = r(x, y)`.
    table: Vec<(ElementId, ElementId)>,
}

impl QuadraticSet {
    pub fn new(name: &str, labels: Vec<String>, table: Vec<(ElementId, ElementId)>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::MalformedDocument("empty carrier".into()));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(Error::MalformedDocument("empty label".into()));
            }
            if !seen.insert(l.clone()) {
                return Err(Error::MalformedDocument(format!("duplicate label `{l}`")));
            }
        }
        if table.len() != n * n {
            return Err(Error::MalformedDocument(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        for &(a, b) in &table {
            if a.idx() >= n || b.idx() >= n {
                return Err(Error::MalformedDocument("table entry out of range".into()));
            }
        }
        Ok(QuadraticSet {
            name: name.to_string(),
            labels,
            table,
        })
    }

    /// Builds the table from a closure on element ids.
    pub fn from_fn(
        name: &str,
        labels: Vec<String>,
        f: impl Fn(ElementId, ElementId) -> (ElementId, ElementId),
    ) -> Result<Self> {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n as u16 {
            for y in 0..n as u16 {
                table.push(f(ElementId(x), ElementId(y)));
            }
        }
        QuadraticSet::new(name, labels, table)
    }

    /// The trivial solution `r(x, y) = (y, x)`.
    pub fn trivial(name: &str, labels: Vec<String>) -> Result<Self> {
        QuadraticSet::from_fn(name, labels, |x, y| (y, x))
    }

    /// The identity map, degenerate on carriers of size >= 2.
    pub fn identity(name: &str, labels: Vec<String>) -> Result<Self> {
        QuadraticSet::from_fn(name, labels, |x, y| (x, y))
    }

    /// Permutational map `r(x, y) = (g(y), f(x))`.
    pub fn permutational(name: &str, labels: Vec<String>, f: &Perm, g: &Perm) -> Result<Self> {
        if f.len() != labels.len() || g.len() != labels.len() {
            return Err(Error::NotAPermutation(
                "permutation size does not match carrier".into(),
            ));
        }
        QuadraticSet::from_fn(name, labels, |x, y| {
            (ElementId(g.apply(y.0)), ElementId(f.apply(x.0)))
        })
    }

    /// Builds the unique `lri` table from a family of left actions:
    /// `r(x, y) = (L_x(y), L_y^{-1}(x))`. This is the convention used for
    /// square-free solutions where right actions are inverse left actions.
    pub fn from_left_actions(name: &str, labels: Vec<String>, left: &[Perm]) -> Result<Self> {
        let n = labels.len();
        if left.len() != n || left.iter().any(|p| p.len() != n) {
            return Err(Error::NotAPermutation(
                "need one carrier permutation per element".into(),
            ));
        }
        let inv: Vec<Perm> = left.iter().map(|p| p.inverse()).collect();
        QuadraticSet::from_fn(name, labels, |x, y| {
            (
                ElementId(left[x.idx()].apply(y.0)),
                ElementId(inv[y.idx()].apply(x.0)),
            )
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x.idx()]
    }

    pub fn element(&self, label: &str) -> Result<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| ElementId(i as u16))
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.labels.len() as u16).map(ElementId)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ElementId, ElementId)> + Clone + '_ {
        let n = self.labels.len() as u16;
        (0..n).flat_map(move |x| (0..n).map(move |y| (ElementId(x), ElementId(y))))
    }

    pub fn apply_r(&self, x: ElementId, y: ElementId) -> (ElementId, ElementId) {
        self.table[x.idx() * self.size() + y.idx()]
    }

    /// `x ▸ y` (the paper's left action `L_x(y)`).
    pub fn left_action(&self, x: ElementId, y: ElementId) -> ElementId {
        self.apply_r(x, y).0
    }

    /// `x ◂ y = R_y(x)`; note the argument order matches `apply_r`.
    pub fn right_action(&self, x: ElementId, y: ElementId) -> ElementId {
        self.apply_r(x, y).1
    }

    /// Both action families as explicit tables.
    pub fn action_maps(&self) -> ActionMaps {
        let n = self.size();
        let mut left = vec![vec![0u16; n]; n];
        let mut right = vec![vec![0u16; n]; n];
        for (x, y) in self.pairs() {
            let (u, v) = self.apply_r(x, y);
            left[x.idx()][y.idx()] = u.0;
            right[y.idx()][x.idx()] = v.0;
        }
        ActionMaps { left, right }
    }

    /// The inverse table, if `r` is bijective.
    pub fn inverse_table(&self) -> Result<QuadraticSet> {
        let n = self.size();
        let mut inv = vec![None; n * n];
        for (x, y) in self.pairs() {
            let (u, v) = self.apply_r(x, y);
            let slot = &mut inv[u.idx() * n + v.idx()];
            if slot.is_some() {
                return Err(Error::PrerequisiteFailed("bijective".into()));
            }
            *slot = Some((x, y));
        }
        let table = inv
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::PrerequisiteFailed("bijective".into()))?;
        QuadraticSet::new(&format!("{}^-1", self.name), self.labels.clone(), table)
    }

    /// Renames the carrier through `phi`: the image set has
    /// `r'(phi x, phi y) = (phi u, phi v)` where `r(x, y) = (u, v)`.
    pub fn relabel(&self, phi: &Perm, new_labels: Vec<String>) -> Result<QuadraticSet> {
        let n = self.size();
        if phi.len() != n || new_labels.len() != n {
            return Err(Error::NotAPermutation("relabeling size mismatch".into()));
        }
        let inv = phi.inverse();
        QuadraticSet::from_fn(&self.name, new_labels, |x, y| {
            let (u, v) = self.apply_r(
                ElementId(inv.apply(x.0)),
                ElementId(inv.apply(y.0)),
            );
            (ElementId(phi.apply(u.0)), ElementId(phi.apply(v.0)))
        })
    }

    fn witness_pair(&self, x: ElementId, y: ElementId, lhs: String, rhs: String) -> Witness {
        Witness {
            tuple: vec![self.label(x).to_string(), self.label(y).to_string()],
            lhs,
            rhs,
        }
    }

    pub fn is_bijective(&self) -> bool {
        self.inverse_table().is_ok()
    }

    pub fn is_involutive(&self) -> bool {
        self.pairs().all(|(x, y)| {
            let (u, v) = self.apply_r(x, y);
            self.apply_r(u, v) == (x, y)
        })
    }

    pub fn is_square_free(&self) -> bool {
        self.elements().all(|x| self.apply_r(x, x) == (x, x))
    }

    pub fn is_left_nondegenerate(&self) -> bool {
        let n = self.size();
        self.elements().all(|x| {
            let imgs: BTreeSet<_> = self.elements().map(|y| self.left_action(x, y)).collect();
            imgs.len() == n
        })
    }

    pub fn is_right_nondegenerate(&self) -> bool {
        let n = self.size();
        self.elements().all(|y| {
            let imgs: BTreeSet<_> = self.elements().map(|x| self.right_action(x, y)).collect();
            imgs.len() == n
        })
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.is_left_nondegenerate() && self.is_right_nondegenerate()
    }

    /// The forward `r`-cycle through `(x, y)`. Requires a bijective table
    /// so the orbit closes.
    pub fn pair_orbit(&self, x: ElementId, y: ElementId) -> Result<PairOrbit> {
        if !self.is_bijective() {
            return Err(Error::PrerequisiteFailed("bijective".into()));
        }
        let start = (x, y);
        let mut cycle = vec![start];
        let mut cur = self.apply_r(x, y);
        while cur != start {
            cycle.push(cur);
            cur = self.apply_r(cur.0, cur.1);
        }
        Ok(PairOrbit {
            start,
            length: cycle.len(),
            cycle,
        })
    }

    /// The set of pairs with `r(x, y) = (x, y)`.
    pub fn fixed_pairs(&self) -> FixedPairSet {
        FixedPairSet {
            pairs: self
                .pairs()
                .filter(|&(x, y)| self.apply_r(x, y) == (x, y))
                .collect(),
        }
    }

    /// Runs the named structural predicate, reporting minimal witnesses.
    pub fn predicate(&self, which: &str) -> ConditionReport {
        self.predicate_with(which, CheckOptions::default())
    }

    pub fn predicate_with(&self, which: &str, opts: CheckOptions) -> ConditionReport {
        let cap = opts.witness_cap;
        match which {
            "bijective" => {
                let n = self.size();
                let mut seen: Vec<Option<(ElementId, ElementId)>> = vec![None; n * n];
                let mut ws = Vec::new();
                for (x, y) in self.pairs() {
                    let (u, v) = self.apply_r(x, y);
                    let slot = &mut seen[u.idx() * n + v.idx()];
                    if let Some((px, py)) = *slot {
                        if ws.len() < cap {
                            ws.push(self.witness_pair(
                                x,
                                y,
                                format!("r({}, {})", self.label(x), self.label(y)),
                                format!(
                                    "r({}, {}) = ({}, {})",
                                    self.label(px),
                                    self.label(py),
                                    self.label(u),
                                    self.label(v)
                                ),
                            ));
                        }
                    } else {
                        *slot = Some((x, y));
                    }
                }
                ConditionReport::from_witnesses(which, ws, cap)
            }
            "involutive" => {
                let mut ws = Vec::new();
                for (x, y) in self.pairs() {
                    let (u, v) = self.apply_r(x, y);
                    let back = self.apply_r(u, v);
                    if back != (x, y) {
                        ws.push(self.witness_pair(
                            x,
                            y,
                            format!("r2({}, {}) = ({}, {})", self.label(x), self.label(y), self.label(back.0), self.label(back.1)),
                            format!("({}, {})", self.label(x), self.label(y)),
                        ));
                        if ws.len() >= cap {
                            break;
                        }
                    }
                }
                ConditionReport::from_witnesses(which, ws, cap)
            }
            "square_free" => {
                let mut ws = Vec::new();
                for x in self.elements() {
                    let (u, v) = self.apply_r(x, x);
                    if (u, v) != (x, x) {
                        ws.push(self.witness_pair(
                            x,
                            x,
                            format!("r({0}, {0}) = ({1}, {2})", self.label(x), self.label(u), self.label(v)),
                            format!("({0}, {0})", self.label(x)),
                        ));
                        if ws.len() >= cap {
                            break;
                        }
                    }
                }
                ConditionReport::from_witnesses(which, ws, cap)
            }
            "left_nondegenerate" => self.nondeg_report(which, true, cap),
            "right_nondegenerate" => self.nondeg_report(which, false, cap),
            "nondegenerate" => {
                let l = self.nondeg_report("left_nondegenerate", true, cap);
                let r = self.nondeg_report("right_nondegenerate", false, cap);
                let mut ws = l.witnesses;
                ws.extend(r.witnesses);
                ConditionReport::from_witnesses(which, ws, cap)
            }
            "left_2cancellative" => self.cancellative_report(which, Side::Left, cap),
            "right_2cancellative" => self.cancellative_report(which, Side::Right, cap),
            "2cancellative" => self.cancellative_report(which, Side::Both, cap),
            other => ConditionReport::skipped(other, "unknown predicate"),
        }
    }

    fn nondeg_report(&self, name: &str, left: bool, cap: usize) -> ConditionReport {
        let mut ws = Vec::new();
        'outer: for a in self.elements() {
            let mut seen = vec![Option::<ElementId>::None; self.size()];
            for b in self.elements() {
                let img = if left {
                    self.left_action(a, b)
                } else {
                    self.right_action(b, a)
                };
                if let Some(prev) = seen[img.idx()] {
                    let (map, arg1, arg2) = if left {
                        (format!("L_{}", self.label(a)), prev, b)
                    } else {
                        (format!("R_{}", self.label(a)), prev, b)
                    };
                    ws.push(Witness {
                        tuple: vec![self.label(a).to_string()],
                        lhs: format!("{map}({}) = {map}({})", self.label(arg1), self.label(arg2)),
                        rhs: format!("two preimages of {}", self.label(img)),
                    });
                    if ws.len() >= cap {
                        break 'outer;
                    }
                    break;
                }
                seen[img.idx()] = Some(b);
            }
        }
        ConditionReport::from_witnesses(name, ws, cap)
    }

    fn cancellative_report(&self, name: &str, side: Side, cap: usize) -> ConditionReport {
        if !self.is_bijective() {
            return ConditionReport::skipped(name, "prerequisite failed: bijective");
        }
        let mut ws = Vec::new();
        'outer: for (x, y) in self.pairs() {
            let mut cur = self.apply_r(x, y);
            let mut k = 1usize;
            while cur != (x, y) {
                let left_violation = cur.0 == x && cur.1 != y;
                let right_violation = cur.1 == y && cur.0 != x;
                let hit = match side {
                    Side::Left => left_violation,
                    Side::Right => right_violation,
                    Side::Both => left_violation || right_violation,
                };
                if hit {
                    let power = if k == 1 { String::new() } else { format!("^{k}") };
                    ws.push(self.witness_pair(
                        x,
                        y,
                        format!(
                            "r{power}({}, {}) = ({}, {})",
                            self.label(x),
                            self.label(y),
                            self.label(cur.0),
                            self.label(cur.1)
                        ),
                        format!("fixes one coordinate of ({}, {})", self.label(x), self.label(y)),
                    ));
                    if ws.len() >= cap {
                        break 'outer;
                    }
                    break;
                }
                cur = self.apply_r(cur.0, cur.1);
                k += 1;
            }
        }
        ConditionReport::from_witnesses(name, ws, cap)
    }

    /// The `T` map of involutive right-nondegenerate sets satisfying `r1`:
    /// `T(y) = R_y^{-1}(y)`, together with a report checking
    /// `R_x^{-1} . T = T . L_x` for every `x`.
    pub fn t_map(&self) -> Result<(Vec<ElementId>, ConditionReport)> {
        let mut missing = Vec::new();
        if !self.is_involutive() {
            missing.push("involutive");
        }
        if !self.is_right_nondegenerate() {
            missing.push("right_nondegenerate");
        }
        if !crate::conditions::check_condition(self, crate::conditions::ConditionId::R1).holds {
            missing.push("r1");
        }
        if !missing.is_empty() {
            return Err(Error::PrerequisiteFailed(missing.join(", ")));
        }
        let n = self.size();
        // R_y as a permutation for each y, then T(y) = R_y^{-1}(y).
        let mut right_inv = Vec::with_capacity(n);
        for y in self.elements() {
            let images: Vec<u16> = self.elements().map(|x| self.right_action(x, y).0).collect();
            right_inv.push(Perm::from_images(images)?.inverse());
        }
        let t: Vec<ElementId> = self
            .elements()
            .map(|y| ElementId(right_inv[y.idx()].apply(y.0)))
            .collect();
        let mut ws = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                let lhs = ElementId(right_inv[x.idx()].apply(t[y.idx()].0));
                let rhs = t[self.left_action(x, y).idx()];
                if lhs != rhs {
                    ws.push(self.witness_pair(
                        x,
                        y,
                        format!("R_{}^-1(T({})) = {}", self.label(x), self.label(y), self.label(lhs)),
                        format!("T(L_{}({})) = {}", self.label(x), self.label(y), self.label(rhs)),
                    ));
                }
            }
        }
        let report = ConditionReport::from_witnesses("t_map_intertwines", ws, DEFAULT_WITNESS_CAP_LOCAL);
        Ok((t, report))
    }
}

const DEFAULT_WITNESS_CAP_LOCAL: usize = crate::report::DEFAULT_WITNESS_CAP;

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
    Both,
}

impl fmt::Display for QuadraticSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (|X| = {})", self.name, self.size())
    }
}

/// Left and right action tables: `left[x][y] = x ▸ y`, `right[y][x] = R_y(x)`.
pub struct ActionMaps {
    pub left: Vec<Vec<u16>>,
    pub right: Vec<Vec<u16>>,
}

/// Forward `r`-orbit of a pair.
#[derive(Debug, Clone)]
pub struct PairOrbit {
    pub start: (ElementId, ElementId),
    pub cycle: Vec<(ElementId, ElementId)>,
    pub length: usize,
}

/// All `r`-fixed pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPairSet {
    pub pairs: BTreeSet<(ElementId, ElementId)>,
}

impl FixedPairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// The order-6 permutation example: `rho = (x y z)`, `r(a, b) = (rho(b), a)`.
    pub(crate) fn rho_example() -> QuadraticSet {
        let lb = labels(&["x", "y", "z"]);
        let rho = parse_cycles("(x y z)", &lb).unwrap();
        let id = Perm::identity(3);
        QuadraticSet::permutational("rho_example", lb, &id, &rho).unwrap()
    }

    #[test]
    fn trivial_solution_basics() {
        let qs = QuadraticSet::trivial("t", labels(&["a", "b"])).unwrap();
        let a = qs.element("a").unwrap();
        let b = qs.element("b").unwrap();
        assert_eq!(qs.apply_r(a, b), (b, a));
        assert_eq!(qs.left_action(a, b), b);
        assert_eq!(qs.right_action(a, b), a);
        for p in PREDICATE_NAMES {
            assert!(qs.predicate(p).holds, "{p} should hold on the trivial solution");
        }
        assert_eq!(qs.pair_orbit(a, b).unwrap().length, 2);
        let fixed = qs.fixed_pairs();
        assert_eq!(fixed.pairs, [(a, a), (b, b)].into_iter().collect());
    }

    #[test]
    fn action_maps_mirror_the_table() {
        let qs = rho_example();
        let maps = qs.action_maps();
        for (x, y) in qs.pairs() {
            assert_eq!(maps.left[x.idx()][y.idx()], qs.left_action(x, y).0);
            assert_eq!(maps.right[y.idx()][x.idx()], qs.right_action(x, y).0);
        }
    }

    #[test]
    fn identity_map_is_degenerate() {
        let qs = QuadraticSet::identity("id", labels(&["a", "b"])).unwrap();
        assert!(!qs.predicate("nondegenerate").holds);
        assert!(qs.predicate("bijective").holds);
        assert_eq!(qs.fixed_pairs().len(), 4);
    }

    #[test]
    fn rho_example_matches_worked_values() {
        let qs = rho_example();
        let (x, y, z) = (
            qs.element("x").unwrap(),
            qs.element("y").unwrap(),
            qs.element("z").unwrap(),
        );
        assert_eq!(qs.apply_r(x, y), (z, x));
        assert_eq!(qs.left_action(x, y), z);
        assert_eq!(qs.right_action(x, y), x);
        assert_eq!(qs.pair_orbit(x, x).unwrap().length, 6);
        assert_eq!(qs.pair_orbit(x, y).unwrap().length, 3);
        assert!(!qs.predicate("involutive").holds);
        assert!(qs.predicate("nondegenerate").holds);
        let rep = qs.predicate("right_2cancellative");
        assert!(!rep.holds);
        assert_eq!(rep.witnesses[0].lhs, "r(x, x) = (y, x)");
    }

    #[test]
    fn cancellativity_requires_bijective() {
        let lb = labels(&["a", "b"]);
        let a = ElementId(0);
        let table = vec![(a, a); 4];
        let qs = QuadraticSet::new("bad", lb, table).unwrap();
        let rep = qs.predicate("2cancellative");
        assert!(!rep.holds);
        assert!(rep.skipped.is_some());
    }

    #[test]
    fn t_map_on_trivial_and_permutational() {
        let qs = QuadraticSet::trivial("t", labels(&["a", "b"])).unwrap();
        let (t, rep) = qs.t_map().unwrap();
        assert!(rep.holds);
        assert!(t.iter().enumerate().all(|(i, e)| e.idx() == i));

        // symmetric permutational: f = g^{-1}, g = (x y z); T = f^{-1} = g.
        let lb = labels(&["x", "y", "z"]);
        let g = parse_cycles("(x y z)", &lb).unwrap();
        let f = g.inverse();
        let qs = QuadraticSet::permutational("p", lb, &f, &g).unwrap();
        let (t, rep) = qs.t_map().unwrap();
        assert!(rep.holds);
        for i in 0..3u16 {
            assert_eq!(t[i as usize].0, f.inverse().apply(i));
        }

        let rho = rho_example();
        assert!(matches!(rho.t_map(), Err(Error::PrerequisiteFailed(_))));
    }

    #[test]
    fn relabel_conjugates_table() {
        let qs = rho_example();
        let lb = labels(&["p", "q", "r"]);
        let phi = parse_cycles("(x y)", qs.labels()).unwrap();
        let re = qs.relabel(&phi, lb).unwrap();
        // r(x, y) = (z, x) means r'(phi x, phi y) = (phi z, phi x): r'(q, p) = (r, q).
        let (p, q, r) = (
            re.element("p").unwrap(),
            re.element("q").unwrap(),
            re.element("r").unwrap(),
        );
        assert_eq!(re.apply_r(q, p), (r, q));
    }
}
