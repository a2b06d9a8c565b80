//! Regular extensions `Z = X ⊔ Y` of two disjoint solutions from ground
//! actions, the mixed conditions on them, strong twisted unions, the
//! double construction, matched pairs of the associated monoids and the
//! factorization of `S(Z, r)`, plus brute-force enumeration of ground
//! actions.

use std::collections::HashMap;

use itertools::Itertools;

use crate::conditions::{self, check_local, ConditionId};
use crate::doc::{FamilyDoc, ground_from_family_choice};
use crate::error::{Error, Result};
use crate::monoid::{
    act_left_with, act_right_with, word_str, LetterActions, TruncatedMonoid, Word,
};
use crate::par;
use crate::perm::Perm;
use crate::qset::{ElementId, QuadraticSet};
use crate::report::{CheckOptions, ClauseReport, ConditionReport, SuiteReport, Witness};

/// Ground action tables of `Y` on `X`: `left[alpha][x] = alpha ▸ x` (in X)
/// and `right[alpha][x] = alpha ◂ x` (in Y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundActions {
    pub left: Vec<Vec<u16>>,
    pub right: Vec<Vec<u16>>,
}

impl GroundActions {
    pub fn new(left: Vec<Vec<u16>>, right: Vec<Vec<u16>>) -> Self {
        GroundActions { left, right }
    }

    /// The identity-like ground actions of the trivial extension.
    pub fn trivial(x_size: usize, y_size: usize) -> Self {
        GroundActions {
            left: (0..y_size).map(|_| (0..x_size as u16).collect()).collect(),
            right: (0..y_size).map(|a| vec![a as u16; x_size]).collect(),
        }
    }

    #[allow(clippy::needless_range_loop)]
    pub fn from_entries(
        x_part: &QuadraticSet,
        y_part: &QuadraticSet,
        entries: &[crate::doc::GroundEntry],
    ) -> Result<Self> {
        let (nx, ny) = (x_part.size(), y_part.size());
        let mut left = vec![vec![u16::MAX; nx]; ny];
        let mut right = vec![vec![u16::MAX; nx]; ny];
        for e in entries {
            let a = y_part.element(&e.alpha)?;
            let x = x_part.element(&e.x)?;
            if left[a.idx()][x.idx()] != u16::MAX {
                return Err(Error::DuplicateEntry(e.alpha.clone(), e.x.clone()));
            }
            left[a.idx()][x.idx()] = x_part.element(&e.left)?.0;
            right[a.idx()][x.idx()] = y_part.element(&e.right)?.0;
        }
        for a in 0..ny {
            for x in 0..nx {
                if left[a][x] == u16::MAX {
                    return Err(Error::IncompleteTable(
                        y_part.labels()[a].clone(),
                        x_part.labels()[x].clone(),
                    ));
                }
            }
        }
        Ok(GroundActions { left, right })
    }

    /// From one permutation of `X` per `alpha` (the action `alpha ▸ ·`) and
    /// one permutation of `Y` per `x` (the action `· ◂ x`).
    pub fn from_permutations(
        x_part: &QuadraticSet,
        y_part: &QuadraticSet,
        left: &[Perm],
        right: &[Perm],
    ) -> Result<Self> {
        let (nx, ny) = (x_part.size(), y_part.size());
        if left.len() != ny || right.len() != nx {
            return Err(Error::MalformedDocument(
                "need |Y| left and |X| right permutations".into(),
            ));
        }
        Ok(GroundActions {
            left: left.iter().map(|p| p.images().to_vec()).collect(),
            right: (0..ny as u16)
                .map(|a| (0..nx).map(|x| right[x].apply(a)).collect())
                .collect(),
        })
    }

    /// Regularity: `(alpha, x) -> (alpha ▸ x, alpha ◂ x)` is a bijection
    /// onto `X × Y`.
    pub fn regularity_witness(&self) -> Option<(usize, usize, usize, usize)> {
        let ny = self.left.len();
        let nx = if ny == 0 { 0 } else { self.left[0].len() };
        let mut seen: HashMap<(u16, u16), (usize, usize)> = HashMap::new();
        for a in 0..ny {
            for x in 0..nx {
                let img = (self.left[a][x], self.right[a][x]);
                if let Some(&(pa, px)) = seen.get(&img) {
                    return Some((a, x, pa, px));
                }
                seen.insert(img, (a, x));
            }
        }
        None
    }
}

/// The mixed conditions on a regular extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedConditionId {
    Ml1,
    Mr1,
    Ml2,
    Mr2,
    Ml1a,
    Mr1a,
    Ml2w,
    Mr2w,
    Stu,
    Csla,
    Csra,
    MixedWeakCyclic,
    FixedPairL,
    FixedPairR,
}

pub const MIXED_CONDITION_IDS: [MixedConditionId; 14] = [
    MixedConditionId::Ml1,
    MixedConditionId::Mr1,
    MixedConditionId::Ml2,
    MixedConditionId::Mr2,
    MixedConditionId::Ml1a,
    MixedConditionId::Mr1a,
    MixedConditionId::Ml2w,
    MixedConditionId::Mr2w,
    MixedConditionId::Stu,
    MixedConditionId::Csla,
    MixedConditionId::Csra,
    MixedConditionId::MixedWeakCyclic,
    MixedConditionId::FixedPairL,
    MixedConditionId::FixedPairR,
];

impl MixedConditionId {
    pub fn tag(self) -> &'static str {
        match self {
            MixedConditionId::Ml1 => "ml1",
            MixedConditionId::Mr1 => "mr1",
            MixedConditionId::Ml2 => "ml2",
            MixedConditionId::Mr2 => "mr2",
            MixedConditionId::Ml1a => "ml1a",
            MixedConditionId::Mr1a => "mr1a",
            MixedConditionId::Ml2w => "ml2w",
            MixedConditionId::Mr2w => "mr2w",
            MixedConditionId::Stu => "stu",
            MixedConditionId::Csla => "csla",
            MixedConditionId::Csra => "csra",
            MixedConditionId::MixedWeakCyclic => "mixed_weak_cyclic",
            MixedConditionId::FixedPairL => "fixed_pair_l",
            MixedConditionId::FixedPairR => "fixed_pair_r",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        MIXED_CONDITION_IDS.iter().copied().find(|c| c.tag() == s)
    }
}

/// A regular extension: the two parts, the ground actions, the derived
/// accompanying actions, and the assembled quadratic set on `X ⊔ Y`.
#[derive(Debug, Clone)]
pub struct ExtensionSet {
    x_part: QuadraticSet,
    y_part: QuadraticSet,
    ground: GroundActions,
    /// `acc_left[x][alpha] = x ▷ alpha` (in Y), `acc_right[x][alpha] = x ◁ alpha` (in X).
    acc_left: Vec<Vec<u16>>,
    acc_right: Vec<Vec<u16>>,
    assembled: QuadraticSet,
}

/// Builds and validates a regular extension.
#[allow(clippy::needless_range_loop)]
pub fn build_extension(
    x_part: &QuadraticSet,
    y_part: &QuadraticSet,
    ground: GroundActions,
) -> Result<ExtensionSet> {
    for l in x_part.labels() {
        if y_part.labels().contains(l) {
            return Err(Error::CarrierOverlap(l.clone()));
        }
    }
    let (nx, ny) = (x_part.size(), y_part.size());
    if ground.left.len() != ny
        || ground.right.len() != ny
        || ground.left.iter().any(|row| row.len() != nx)
        || ground.right.iter().any(|row| row.len() != nx)
    {
        return Err(Error::MalformedDocument("ground tables have wrong shape".into()));
    }
    for a in 0..ny {
        for x in 0..nx {
            if (ground.left[a][x] as usize) >= nx || (ground.right[a][x] as usize) >= ny {
                return Err(Error::MalformedDocument("ground entry out of range".into()));
            }
        }
    }
    if let Some((a, x, pa, px)) = ground.regularity_witness() {
        return Err(Error::NotRegular(format!(
            "({}, {}) and ({}, {}) share an image",
            y_part.labels()[a],
            x_part.labels()[x],
            y_part.labels()[pa],
            x_part.labels()[px]
        )));
    }
    // accompanying actions: the inverse of (alpha, x) -> (alpha ▸ x, alpha ◂ x)
    let mut acc_left = vec![vec![0u16; ny]; nx];
    let mut acc_right = vec![vec![0u16; ny]; nx];
    for a in 0..ny {
        for x in 0..nx {
            let (u, b) = (ground.left[a][x] as usize, ground.right[a][x] as usize);
            acc_left[u][b] = a as u16;
            acc_right[u][b] = x as u16;
        }
    }
    let mut labels = x_part.labels().to_vec();
    labels.extend_from_slice(y_part.labels());
    let off = nx as u16;
    let assembled = QuadraticSet::from_fn("extension", labels, |a, b| {
        let (ai, bi) = (a.0, b.0);
        match (ai < off, bi < off) {
            (true, true) => {
                let (u, v) = x_part.apply_r(ElementId(ai), ElementId(bi));
                (ElementId(u.0), ElementId(v.0))
            }
            (false, false) => {
                let (u, v) = y_part.apply_r(ElementId(ai - off), ElementId(bi - off));
                (ElementId(u.0 + off), ElementId(v.0 + off))
            }
            (false, true) => (
                ElementId(ground.left[(ai - off) as usize][bi as usize]),
                ElementId(ground.right[(ai - off) as usize][bi as usize] + off),
            ),
            (true, false) => (
                ElementId(acc_left[ai as usize][(bi - off) as usize] + off),
                ElementId(acc_right[ai as usize][(bi - off) as usize]),
            ),
        }
    })?;
    let mut ext = ExtensionSet {
        x_part: x_part.clone(),
        y_part: y_part.clone(),
        ground,
        acc_left,
        acc_right,
        assembled,
    };
    let name = format!("{}+{}", x_part.name(), y_part.name());
    ext.assembled.set_name(&name);
    Ok(ext)
}

impl ExtensionSet {
    pub fn x_part(&self) -> &QuadraticSet {
        &self.x_part
    }

    pub fn y_part(&self) -> &QuadraticSet {
        &self.y_part
    }

    pub fn ground(&self) -> &GroundActions {
        &self.ground
    }

    pub fn assembled(&self) -> &QuadraticSet {
        &self.assembled
    }

    pub fn set_name(&mut self, name: &str) {
        self.assembled.set_name(name);
    }

    fn nx(&self) -> usize {
        self.x_part.size()
    }

    fn ny(&self) -> usize {
        self.y_part.size()
    }

    fn x_el(&self, x: usize) -> ElementId {
        ElementId(x as u16)
    }

    fn y_el(&self, a: usize) -> ElementId {
        ElementId((a + self.nx()) as u16)
    }

    /// Ground tables in the `[Y][X]` orientation used by the word-action
    /// helpers.
    pub fn ground_letter_actions(&self) -> LetterActions {
        LetterActions {
            left: self.ground.left.clone(),
            right: self.ground.right.clone(),
        }
    }

    /// Accompanying tables in the `[X][Y]` orientation.
    pub fn accompanying_letter_actions(&self) -> LetterActions {
        LetterActions {
            left: self.acc_left.clone(),
            right: self.acc_right.clone(),
        }
    }

    fn z_witness(&self, tuple: &[ElementId], lhs: ElementId, rhs: ElementId) -> Witness {
        let z = &self.assembled;
        Witness {
            tuple: tuple.iter().map(|&e| z.label(e).to_string()).collect(),
            lhs: z.label(lhs).to_string(),
            rhs: z.label(rhs).to_string(),
        }
    }

    /// Exhaustively checks one mixed condition.
    pub fn check_mixed(&self, cond: MixedConditionId) -> ConditionReport {
        self.check_mixed_with(cond, CheckOptions::default())
    }

    pub fn check_mixed_with(&self, cond: MixedConditionId, opts: CheckOptions) -> ConditionReport {
        let cap = opts.witness_cap;
        let z = &self.assembled;
        let l = |a, b| z.left_action(a, b);
        let r = |a, b| z.right_action(a, b);
        let xs: Vec<ElementId> = (0..self.nx()).map(|i| self.x_el(i)).collect();
        let ys: Vec<ElementId> = (0..self.ny()).map(|i| self.y_el(i)).collect();
        let mut ws: Vec<Witness> = Vec::new();
        let push = |w: Witness, ws: &mut Vec<Witness>| -> bool {
            ws.push(w);
            ws.len() >= cap
        };
        let renamed = |mut rep: ConditionReport| {
            rep.name = cond.tag().to_string();
            rep
        };
        match cond {
            // plain restrictions of l1/r1/l2/r2 to mixed positions
            MixedConditionId::Ml1 => return renamed(self.local_range(ConditionId::L1, &ys, &ys, &xs, opts)),
            MixedConditionId::Mr1 => return renamed(self.local_range(ConditionId::R1, &ys, &xs, &xs, opts)),
            MixedConditionId::Ml2 => return renamed(self.local_range(ConditionId::L2, &ys, &xs, &xs, opts)),
            MixedConditionId::Mr2 => return renamed(self.local_range(ConditionId::R2, &ys, &ys, &xs, opts)),
            MixedConditionId::Ml1a => return renamed(self.local_range(ConditionId::L1, &ys, &xs, &xs, opts)),
            MixedConditionId::Mr1a => return renamed(self.local_range(ConditionId::R1, &ys, &ys, &xs, opts)),
            MixedConditionId::Ml2w => {
                'outer: for &a in &ys {
                    for &x in &xs {
                        for &y in &xs {
                            let act = |p: (ElementId, ElementId)| (l(a, p.0), l(r(a, p.0), p.1));
                            let lhs = act(z.apply_r(x, y));
                            let rhs = act((x, y));
                            if !self.same_x_orbit(lhs, rhs) {
                                let w = Witness {
                                    tuple: vec![
                                        z.label(a).to_string(),
                                        z.label(x).to_string(),
                                        z.label(y).to_string(),
                                    ],
                                    lhs: format!("({}, {})", z.label(lhs.0), z.label(lhs.1)),
                                    rhs: format!("no r_X power of ({}, {})", z.label(rhs.0), z.label(rhs.1)),
                                };
                                if push(w, &mut ws) {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            MixedConditionId::Mr2w => {
                'outer: for &x in &xs {
                    for &a in &ys {
                        for &b in &ys {
                            let act = |p: (ElementId, ElementId)| (r(p.0, l(p.1, x)), r(p.1, x));
                            let lhs = act(z.apply_r(a, b));
                            let rhs = act((a, b));
                            if !self.same_y_orbit(lhs, rhs) {
                                let w = Witness {
                                    tuple: vec![
                                        z.label(x).to_string(),
                                        z.label(a).to_string(),
                                        z.label(b).to_string(),
                                    ],
                                    lhs: format!("({}, {})", z.label(lhs.0), z.label(lhs.1)),
                                    rhs: format!("no r_Y power of ({}, {})", z.label(rhs.0), z.label(rhs.1)),
                                };
                                if push(w, &mut ws) {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            MixedConditionId::Stu => {
                'outer: for &a in &ys {
                    for &x in &xs {
                        for &y in &xs {
                            let lhs = l(r(a, y), x);
                            let rhs = l(a, x);
                            if lhs != rhs
                                && push(self.z_witness(&[a, y, x], lhs, rhs), &mut ws) {
                                    break 'outer;
                                }
                        }
                        for &b in &ys {
                            let lhs = r(a, l(b, x));
                            let rhs = r(a, x);
                            if lhs != rhs
                                && push(self.z_witness(&[a, b, x], lhs, rhs), &mut ws) {
                                    break 'outer;
                                }
                        }
                    }
                }
            }
            MixedConditionId::Csla => {
                'outer: for &x in &xs {
                    for &y in &xs {
                        for &a in &ys {
                            let lhs = l(l(y, a), l(y, x));
                            let rhs = l(l(a, y), l(a, x));
                            if lhs != rhs
                                && push(self.z_witness(&[x, y, a], lhs, rhs), &mut ws) {
                                    break 'outer;
                                }
                        }
                    }
                }
            }
            MixedConditionId::Csra => {
                'outer: for &a in &ys {
                    for &b in &ys {
                        for &x in &xs {
                            let lhs = r(r(a, b), r(x, b));
                            let rhs = r(r(a, x), r(b, x));
                            if lhs != rhs
                                && push(self.z_witness(&[a, b, x], lhs, rhs), &mut ws) {
                                    break 'outer;
                                }
                        }
                    }
                }
            }
            MixedConditionId::MixedWeakCyclic => {
                if !(self.x_part.is_square_free() && self.y_part.is_square_free()) {
                    return ConditionReport::skipped(
                        cond.tag(),
                        "hypothesis failed: both parts square-free",
                    );
                }
                'outer: for &a in &ys {
                    for &x in &xs {
                        let lhs = l(r(a, x), x);
                        let rhs = l(a, x);
                        if lhs != rhs
                            && push(self.z_witness(&[a, x], lhs, rhs), &mut ws) {
                                break 'outer;
                            }
                        let lhs = r(a, l(a, x));
                        let rhs = r(a, x);
                        if lhs != rhs
                            && push(self.z_witness(&[a, x], lhs, rhs), &mut ws) {
                                break 'outer;
                            }
                    }
                }
            }
            MixedConditionId::FixedPairL => {
                'outer: for &x in &xs {
                    for &y in &xs {
                        if z.apply_r(x, y) != (x, y) {
                            continue;
                        }
                        for &a in &ys {
                            let img = (l(a, x), l(r(a, x), y));
                            if z.apply_r(img.0, img.1) != img {
                                let w = Witness {
                                    tuple: vec![
                                        z.label(a).to_string(),
                                        z.label(x).to_string(),
                                        z.label(y).to_string(),
                                    ],
                                    lhs: format!("r_X({}, {})", z.label(img.0), z.label(img.1)),
                                    rhs: "a fixed pair".to_string(),
                                };
                                if push(w, &mut ws) {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            MixedConditionId::FixedPairR => {
                'outer: for &a in &ys {
                    for &b in &ys {
                        if z.apply_r(a, b) != (a, b) {
                            continue;
                        }
                        for &x in &xs {
                            let img = (r(a, l(b, x)), r(b, x));
                            if z.apply_r(img.0, img.1) != img {
                                let w = Witness {
                                    tuple: vec![
                                        z.label(a).to_string(),
                                        z.label(b).to_string(),
                                        z.label(x).to_string(),
                                    ],
                                    lhs: format!("r_Y({}, {})", z.label(img.0), z.label(img.1)),
                                    rhs: "a fixed pair".to_string(),
                                };
                                if push(w, &mut ws) {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
        ConditionReport::from_witnesses(cond.tag(), ws, cap)
    }

    /// Restriction of a three-variable condition to given position ranges.
    pub fn local_range(
        &self,
        cond: ConditionId,
        first: &[ElementId],
        second: &[ElementId],
        third: &[ElementId],
        opts: CheckOptions,
    ) -> ConditionReport {
        let z = &self.assembled;
        let mut ws = Vec::new();
        'outer: for &a in first {
            for &b in second {
                for &c in third {
                    if !check_local(z, cond, (a, b, c)) {
                        ws.push(Witness {
                            tuple: vec![
                                z.label(a).to_string(),
                                z.label(b).to_string(),
                                z.label(c).to_string(),
                            ],
                            lhs: format!("{} instance", cond.tag()),
                            rhs: "violated".to_string(),
                        });
                        if ws.len() >= opts.witness_cap {
                            break 'outer;
                        }
                    }
                }
            }
        }
        let name = format!("{}({:?})", cond.tag(), (first.len(), second.len(), third.len()));
        ConditionReport::from_witnesses(&name, ws, opts.witness_cap)
    }

    fn same_x_orbit(&self, p: (ElementId, ElementId), q: (ElementId, ElementId)) -> bool {
        same_orbit(&self.x_part, p, q)
    }

    fn same_y_orbit(&self, p: (ElementId, ElementId), q: (ElementId, ElementId)) -> bool {
        let off = self.nx() as u16;
        let drop = |e: ElementId| ElementId(e.0 - off);
        same_orbit(
            &self.y_part,
            (drop(p.0), drop(p.1)),
            (drop(q.0), drop(q.1)),
        )
    }

    pub fn xs(&self) -> Vec<ElementId> {
        (0..self.nx()).map(|i| self.x_el(i)).collect()
    }

    pub fn ys(&self) -> Vec<ElementId> {
        (0..self.ny()).map(|i| self.y_el(i)).collect()
    }
}

/// True iff `q` is reachable from `p` by iterating the part's `r` (in
/// either direction; the walk closes on bijective tables and is cycle
/// guarded otherwise).
fn same_orbit(part: &QuadraticSet, p: (ElementId, ElementId), q: (ElementId, ElementId)) -> bool {
    if p == q {
        return true;
    }
    let mut cur = part.apply_r(p.0, p.1);
    let mut steps = part.size() * part.size() + 1;
    while cur != p && steps > 0 {
        if cur == q {
            return true;
        }
        cur = part.apply_r(cur.0, cur.1);
        steps -= 1;
    }
    false
}

/// The canonical double of a braided set: the extension of `(X, r)` by a
/// disjoint relabeled copy, with ground actions given by `r`'s own
/// actions. Always passes the YBE.
pub fn double_braided_set(qs: &QuadraticSet) -> Result<ExtensionSet> {
    if !conditions::holds(qs, ConditionId::Ybe) {
        return Err(Error::PrerequisiteFailed(format!(
            "double_braided_set requires a braided set (ybe fails on {})",
            qs.name()
        )));
    }
    let copy_labels: Vec<String> = qs.labels().iter().map(|l| format!("{l}'")).collect();
    let copy = QuadraticSet::new(
        &format!("{}'", qs.name()),
        copy_labels,
        qs.pairs().map(|(x, y)| qs.apply_r(x, y)).collect(),
    )?;
    let acts = LetterActions::of(qs);
    let ground = GroundActions::new(acts.left.clone(), acts.right.clone());
    let mut ext = build_extension(qs, &copy, ground)?;
    ext.set_name(&format!("double({})", qs.name()));
    Ok(ext)
}

/// Per-element verdicts of whether the cross actions are automorphisms of
/// the opposite part.
#[derive(Debug, Clone)]
pub struct AutomorphismActionReport {
    pub y_on_x: Vec<(String, bool)>,
    pub x_on_y: Vec<(String, bool)>,
}

impl AutomorphismActionReport {
    pub fn all_y_on_x(&self) -> bool {
        self.y_on_x.iter().all(|(_, b)| *b)
    }

    pub fn all_x_on_y(&self) -> bool {
        self.x_on_y.iter().all(|(_, b)| *b)
    }
}

/// For every `alpha` checks whether `alpha ▸ ·` lies in `Aut(X, r_X)`, and
/// for every `x` whether `x ▷ ·` lies in `Aut(Y, r_Y)`.
pub fn automorphism_action_check(ext: &ExtensionSet) -> AutomorphismActionReport {
    let is_auto = |part: &QuadraticSet, map: &[u16]| -> bool {
        part.pairs().all(|(x, y)| {
            let (u, v) = part.apply_r(x, y);
            part.apply_r(ElementId(map[x.idx()]), ElementId(map[y.idx()]))
                == (ElementId(map[u.idx()]), ElementId(map[v.idx()]))
        })
    };
    let y_on_x = ext
        .y_part()
        .labels()
        .iter()
        .enumerate()
        .map(|(a, lbl)| (lbl.clone(), is_auto(ext.x_part(), &ext.ground().left[a])))
        .collect();
    let x_on_y = ext
        .x_part()
        .labels()
        .iter()
        .enumerate()
        .map(|(x, lbl)| (lbl.clone(), is_auto(ext.y_part(), &ext.acc_left[x])))
        .collect();
    AutomorphismActionReport { y_on_x, x_on_y }
}

/// Strong-twisted-union verdict, with the cycle-set style criteria when
/// the hypotheses for them hold.
#[derive(Debug, Clone)]
pub struct StuReport {
    /// action assignments respect the degree-2 relations of T (= ml1)
    pub respects_t_relations: bool,
    /// and of S (= mr1)
    pub respects_s_relations: bool,
    pub stu: ConditionReport,
    pub is_stu: bool,
    pub ybe: bool,
    pub csla: Option<ConditionReport>,
    pub csra: Option<ConditionReport>,
    /// `ybe <=> csla & csra`, verified when the proposition's hypotheses
    /// (strong twisted union, lri, 2-cancellative parts, cancellation on
    /// length-3 monomials) are all satisfied.
    pub prop_cross_check: Option<bool>,
}

pub fn strong_twisted_union_report(ext: &ExtensionSet) -> Result<StuReport> {
    let ml1 = ext.check_mixed(MixedConditionId::Ml1).holds;
    let mr1 = ext.check_mixed(MixedConditionId::Mr1).holds;
    let stu = ext.check_mixed(MixedConditionId::Stu);
    let is_stu = ml1 && mr1 && stu.holds;
    let ybe = conditions::holds(ext.assembled(), ConditionId::Ybe);
    let lri = conditions::holds(ext.assembled(), ConditionId::Lri);
    let mut csla = None;
    let mut csra = None;
    let mut cross = None;
    if lri {
        let a = ext.check_mixed(MixedConditionId::Csla);
        let b = ext.check_mixed(MixedConditionId::Csra);
        if is_stu
            && ext.x_part().predicate("2cancellative").holds
            && ext.y_part().predicate("2cancellative").holds
        {
            let tm = TruncatedMonoid::build(ext.assembled().clone(), 3)?;
            if tm.cancellation_test(3)?.holds {
                cross = Some(ybe == (a.holds && b.holds));
            }
        }
        csla = Some(a);
        csra = Some(b);
    }
    Ok(StuReport {
        respects_t_relations: ml1,
        respects_s_relations: mr1,
        stu,
        is_stu,
        ybe,
        csla,
        csra,
        prop_cross_check: cross,
    })
}

/// The extension-level theorem suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionSuiteId {
    Bz,
    BCancellative,
    MatchedPairSt,
    FactorizationBellaT2,
    TrivialParts,
    TheoremDSquarefree,
}

pub const EXTENSION_SUITE_IDS: [ExtensionSuiteId; 6] = [
    ExtensionSuiteId::Bz,
    ExtensionSuiteId::BCancellative,
    ExtensionSuiteId::MatchedPairSt,
    ExtensionSuiteId::FactorizationBellaT2,
    ExtensionSuiteId::TrivialParts,
    ExtensionSuiteId::TheoremDSquarefree,
];

impl ExtensionSuiteId {
    pub fn tag(self) -> &'static str {
        match self {
            ExtensionSuiteId::Bz => "BZ",
            ExtensionSuiteId::BCancellative => "B_cancellative",
            ExtensionSuiteId::MatchedPairSt => "matched_pair_ST",
            ExtensionSuiteId::FactorizationBellaT2 => "factorization_bellaT2",
            ExtensionSuiteId::TrivialParts => "trivial_parts",
            ExtensionSuiteId::TheoremDSquarefree => "theoremD_squarefree",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        EXTENSION_SUITE_IDS.iter().copied().find(|c| c.tag() == s)
    }
}

fn iff(name: &str, a: bool, b: bool) -> ClauseReport {
    ClauseReport::with_detail(name, a == b, format!("{a} <=> {b}"))
}

pub fn verify_extension_theorem(
    ext: &ExtensionSet,
    which: ExtensionSuiteId,
    max_degree: usize,
) -> Result<SuiteReport> {
    let z_ybe = || conditions::holds(ext.assembled(), ConditionId::Ybe);
    let mc = |c| ext.check_mixed(c).holds;
    match which {
        ExtensionSuiteId::Bz => {
            let sides = mc(MixedConditionId::Ml1)
                && mc(MixedConditionId::Mr1)
                && mc(MixedConditionId::Ml2)
                && mc(MixedConditionId::Mr2);
            let clauses = vec![iff("ybe(Z) <=> ml1 & mr1 & ml2 & mr2", z_ybe(), sides)];
            Ok(SuiteReport::new(which.tag(), true, vec![], clauses))
        }
        ExtensionSuiteId::BCancellative => {
            let mut notes = vec![];
            let hyp_parts = ext.x_part().predicate("2cancellative").holds
                && ext.y_part().predicate("2cancellative").holds;
            if !hyp_parts {
                notes.push("parts are not 2-cancellative".to_string());
            }
            let tm = TruncatedMonoid::build(ext.assembled().clone(), 3)?;
            let cancel3 = tm.cancellation_test(3)?.holds;
            if !cancel3 {
                notes.push("U lacks cancellation on length-3 monomials".to_string());
            }
            if !(hyp_parts && cancel3) {
                return Ok(SuiteReport::new(which.tag(), false, notes, vec![]));
            }
            let weak = mc(MixedConditionId::Ml1)
                && mc(MixedConditionId::Mr1)
                && mc(MixedConditionId::Ml1a)
                && mc(MixedConditionId::Mr1a);
            let clauses = vec![
                iff("ybe(Z) <=> ml1 & mr1 & ml1a & mr1a", z_ybe(), weak),
                iff(
                    "mr1 & ml1a <=> ml2",
                    mc(MixedConditionId::Mr1) && mc(MixedConditionId::Ml1a),
                    mc(MixedConditionId::Ml2),
                ),
                iff(
                    "ml1 & mr1a <=> mr2",
                    mc(MixedConditionId::Ml1) && mc(MixedConditionId::Mr1a),
                    mc(MixedConditionId::Mr2),
                ),
            ];
            Ok(SuiteReport::new(which.tag(), true, notes, clauses))
        }
        ExtensionSuiteId::MatchedPairSt => {
            let report = matched_pair_st(ext, max_degree)?;
            Ok(report)
        }
        ExtensionSuiteId::FactorizationBellaT2 => factorization_suite(ext, max_degree),
        ExtensionSuiteId::TrivialParts => {
            let trivially = |p: &QuadraticSet| {
                p.pairs().all(|(x, y)| p.apply_r(x, y) == (y, x))
            };
            if !(trivially(ext.x_part()) && trivially(ext.y_part())) {
                return Ok(SuiteReport::new(
                    which.tag(),
                    false,
                    vec!["both parts must be trivial solutions".into()],
                    vec![],
                ));
            }
            let z = ext.assembled();
            let l = |a, b| z.left_action(a, b);
            let r = |a, b| z.right_action(a, b);
            let xs = ext.xs();
            let ys = ext.ys();
            let ml1a_rhs = ys.iter().all(|&a| {
                xs.iter()
                    .all(|&x| xs.iter().all(|&y| l(r(a, x), y) == l(a, y)))
            });
            let mr1_rhs = ys.iter().all(|&a| {
                xs.iter()
                    .all(|&x| xs.iter().all(|&y| r(r(a, x), y) == r(r(a, y), x)))
            });
            let mr1a_rhs = ys.iter().all(|&a| {
                ys.iter()
                    .all(|&b| xs.iter().all(|&x| r(a, l(b, x)) == r(a, x)))
            });
            let ml1_rhs = ys.iter().all(|&a| {
                ys.iter()
                    .all(|&b| xs.iter().all(|&x| l(a, l(b, x)) == l(b, l(a, x))))
            });
            let stu = strong_twisted_union_report(ext)?;
            let clauses = vec![
                iff("ml1a <=> (a◂x) ▸ y = a ▸ y", mc(MixedConditionId::Ml1a), ml1a_rhs),
                iff("mr1 <=> (a◂x)◂y = (a◂y)◂x", mc(MixedConditionId::Mr1), mr1_rhs),
                iff("mr1a <=> a◂(b▸x) = a◂x", mc(MixedConditionId::Mr1a), mr1a_rhs),
                iff("ml1 <=> a▸(b▸x) = b▸(a▸x)", mc(MixedConditionId::Ml1), ml1_rhs),
                iff("ybe(Z) <=> strong twisted union", z_ybe(), stu.is_stu),
            ];
            Ok(SuiteReport::new(which.tag(), true, vec![], clauses))
        }
        ExtensionSuiteId::TheoremDSquarefree => {
            let mut notes = vec![];
            let parts_ok = ext.x_part().is_nondegenerate()
                && ext.x_part().is_involutive()
                && conditions::holds(ext.x_part(), ConditionId::Ybe)
                && ext.y_part().is_nondegenerate()
                && ext.y_part().is_involutive()
                && conditions::holds(ext.y_part(), ConditionId::Ybe);
            if !parts_ok {
                notes.push("parts must be nondegenerate involutive solutions".into());
            }
            let matched = mc(MixedConditionId::Ml1)
                && mc(MixedConditionId::Mr1)
                && mc(MixedConditionId::Ml2w)
                && mc(MixedConditionId::Mr2w);
            if !matched {
                notes.push("(S, T) is not a matched pair (ml1/mr1/ml2w/mr2w)".into());
            }
            if !(parts_ok && matched) {
                return Ok(SuiteReport::new(which.tag(), false, notes, vec![]));
            }
            let fixed = mc(MixedConditionId::FixedPairL) && mc(MixedConditionId::FixedPairR);
            let mut clauses = vec![iff("ybe(Z) <=> fixed pairs preserved", z_ybe(), fixed)];
            let sf = ext.x_part().is_square_free() && ext.y_part().is_square_free();
            if sf {
                clauses.push(iff(
                    "ybe(Z) <=> mixed weak cyclic",
                    z_ybe(),
                    mc(MixedConditionId::MixedWeakCyclic),
                ));
                if z_ybe() {
                    clauses.push(ClauseReport::new(
                        "solution => square-free with lri",
                        ext.assembled().is_square_free()
                            && conditions::holds(ext.assembled(), ConditionId::Lri),
                    ));
                }
            }
            Ok(SuiteReport::new(which.tag(), true, notes, clauses))
        }
    }
}

/// Builds the graded matched pair `(S, T)` from the ground actions at
/// truncation and checks it against the weak mixed conditions.
fn matched_pair_st(ext: &ExtensionSet, n: usize) -> Result<SuiteReport> {
    let s = TruncatedMonoid::build(ext.x_part().clone(), n)?;
    let t = TruncatedMonoid::build(ext.y_part().clone(), n)?;
    let ground = ext.ground_letter_actions();
    let acc = ext.accompanying_letter_actions();

    let ml = |a: &Word, u: &Word| act_left_with(&ground.left, &ground.right, a, u);
    let mr = |a: &Word, u: &Word| act_right_with(&ground.left, &ground.right, a, u);

    // Side A: the word-level actions are well defined on classes and the
    // matched-pair identities hold classwise, including the lara
    // relations for strongness.
    let mut well_defined = true;
    let mut axioms = true;
    let mut lara = true;
    let mut detail = String::new();

    let s_words = |d: usize| words_at(ext.x_part().size(), d);
    let t_words = |d: usize| words_at(ext.y_part().size(), d);

    'wd: for da in 0..=n {
        for du in 0..=(n - da) {
            for a in t_words(da) {
                for u in s_words(du) {
                    // value-side replacements in u
                    for i in 0..du.saturating_sub(1) {
                        let u2 = replace_at(ext.x_part(), &u, i);
                        if !s.word_equal(&ml(&a, &u), &ml(&a, &u2))?
                            || !t.word_equal(&mr(&a, &u), &mr(&a, &u2))?
                        {
                            well_defined = false;
                            detail = format!(
                                "replacement in {} changes the image under {}",
                                word_str(ext.x_part(), &u),
                                word_str(ext.y_part(), &a)
                            );
                            break 'wd;
                        }
                    }
                    // actor-side replacements in a
                    for i in 0..da.saturating_sub(1) {
                        let a2 = replace_at(ext.y_part(), &a, i);
                        if !s.word_equal(&ml(&a, &u), &ml(&a2, &u))?
                            || !t.word_equal(&mr(&a, &u), &mr(&a2, &u))?
                        {
                            well_defined = false;
                            detail = format!(
                                "replacement in {} changes its action on {}",
                                word_str(ext.y_part(), &a),
                                word_str(ext.x_part(), &u)
                            );
                            break 'wd;
                        }
                    }
                }
            }
        }
    }

    'ax: for da in 0..=n {
        for db in 0..=(n - da) {
            for dc in 0..=(n - da - db) {
                for a in t_words(da) {
                    for b in t_words(db) {
                        for u in s_words(dc) {
                            let ab = [a.as_slice(), b.as_slice()].concat();
                            if !s.word_equal(&ml(&ab, &u), &ml(&a, &ml(&b, &u)))? {
                                axioms = false;
                                break 'ax;
                            }
                            let rhs = [mr(&a, &ml(&b, &u)), mr(&b, &u)].concat();
                            if !t.word_equal(&mr(&ab, &u), &rhs)? {
                                axioms = false;
                                break 'ax;
                            }
                        }
                    }
                }
                for a in t_words(da) {
                    for u in s_words(db) {
                        for v in s_words(dc) {
                            let uv = [u.as_slice(), v.as_slice()].concat();
                            if !t.word_equal(&mr(&a, &uv), &mr(&mr(&a, &u), &v))? {
                                axioms = false;
                                break 'ax;
                            }
                            let rhs = [ml(&a, &u), ml(&mr(&a, &u), &v)].concat();
                            if !s.word_equal(&ml(&a, &uv), &rhs)? {
                                axioms = false;
                                break 'ax;
                            }
                        }
                    }
                }
            }
        }
    }

    let tl = |u: &Word, a: &Word| act_left_with(&acc.left, &acc.right, u, a);
    let tr = |u: &Word, a: &Word| act_right_with(&acc.left, &acc.right, u, a);
    'lara: for da in 0..=n {
        for du in 0..=(n - da) {
            for a in t_words(da) {
                for u in s_words(du) {
                    let p = ml(&a, &u);
                    let q = mr(&a, &u);
                    if !t.word_equal(&tl(&p, &q), &a)? || !s.word_equal(&tr(&p, &q), &u)? {
                        lara = false;
                        break 'lara;
                    }
                    let sa = tl(&u, &a);
                    let sb = tr(&u, &a);
                    if !s.word_equal(&ml(&sa, &sb), &u)? || !t.word_equal(&mr(&sa, &sb), &a)? {
                        lara = false;
                        break 'lara;
                    }
                }
            }
        }
    }

    let side_a = well_defined && axioms && lara;
    let side_b = ext.check_mixed(MixedConditionId::Ml1).holds
        && ext.check_mixed(MixedConditionId::Mr1).holds
        && ext.check_mixed(MixedConditionId::Ml2w).holds
        && ext.check_mixed(MixedConditionId::Mr2w).holds;
    let mut clauses = vec![iff(
        "graded strong matched pair <=> ml1 & mr1 & ml2w & mr2w",
        side_a,
        side_b,
    )];
    if !detail.is_empty() {
        clauses.push(ClauseReport::with_detail("well-definedness witness", true, detail));
    }
    Ok(SuiteReport::new(
        ExtensionSuiteId::MatchedPairSt.tag(),
        true,
        vec![],
        clauses,
    ))
}

/// The factorization characterisation: unique `u.a` normal forms in the
/// truncated `U = S(Z, r)` and the `(S, U)`, `(U, T)` matched pairs.
fn factorization_suite(ext: &ExtensionSet, n: usize) -> Result<SuiteReport> {
    let tag = ExtensionSuiteId::FactorizationBellaT2.tag();
    if !conditions::holds(ext.assembled(), ConditionId::Ybe) {
        return Ok(SuiteReport::new(
            tag,
            false,
            vec!["extension does not obey the YBE".into()],
            vec![],
        ));
    }
    let u_tm = TruncatedMonoid::build(ext.assembled().clone(), n)?;
    let s_tm = TruncatedMonoid::build(ext.x_part().clone(), n)?;
    let t_tm = TruncatedMonoid::build(ext.y_part().clone(), n)?;
    let nx = ext.x_part().size() as u16;

    // every U-class has a constant (deg_X, deg_Y) signature and the map
    // (S-class, T-class) -> class of u.a is bijective per signature
    let mut normal_forms_ok = true;
    let mut detail = String::new();
    'nf: for d in 0..=n {
        let mut per_sig: HashMap<(usize, usize), usize> = HashMap::new();
        for class in u_tm.classes_at_degree(d)? {
            let sig = |w: &Word| {
                let k = w.iter().filter(|e| e.0 < nx).count();
                (k, w.len() - k)
            };
            let s0 = sig(&class.canonical);
            if class.members.iter().any(|m| sig(m) != s0) {
                normal_forms_ok = false;
                detail = format!("class of {} mixes degrees", word_str(ext.assembled(), &class.canonical));
                break 'nf;
            }
            *per_sig.entry(s0).or_insert(0) += 1;
        }
        for k in 0..=d {
            let l = d - k;
            let expected = s_tm.classes_at_degree(k)?.len() * t_tm.classes_at_degree(l)?.len();
            let got = per_sig.get(&(k, l)).copied().unwrap_or(0);
            if expected != got {
                normal_forms_ok = false;
                detail = format!("at degree ({k}, {l}): {got} classes, expected {expected}");
                break 'nf;
            }
            // distinct normal forms denote distinct classes
            let mut seen: HashMap<(usize, u32), (Word, Word)> = HashMap::new();
            for cs in s_tm.classes_at_degree(k)? {
                for ct in t_tm.classes_at_degree(l)? {
                    let shifted: Word = ct
                        .canonical
                        .iter()
                        .map(|e| ElementId(e.0 + nx))
                        .collect();
                    let w = [cs.canonical.as_slice(), shifted.as_slice()].concat();
                    let id = u_tm.class_id(&w)?;
                    if let Some((pu, pa)) = seen.get(&id) {
                        normal_forms_ok = false;
                        detail = format!(
                            "normal forms {}.{} and {}.{} collide",
                            word_str(ext.x_part(), pu),
                            word_str(ext.y_part(), pa),
                            word_str(ext.x_part(), &cs.canonical),
                            word_str(ext.y_part(), &ct.canonical),
                        );
                        break 'nf;
                    }
                    seen.insert(id, (cs.canonical.clone(), ct.canonical.clone()));
                }
            }
        }
    }

    // (S, U) and (U, T) matched pairs with the actions of U = S(Z, r)
    let mut su_ok = true;
    let mut ut_ok = true;
    let z_words = |d: usize| words_at(ext.assembled().size(), d);
    let x_words_shift: Vec<Vec<Word>> = (0..=n).map(|d| words_at(ext.x_part().size(), d)).collect();
    let y_words_shift: Vec<Vec<Word>> = (0..=n)
        .map(|d| {
            words_at(ext.y_part().size(), d)
                .into_iter()
                .map(|w| w.into_iter().map(|e| ElementId(e.0 + nx)).collect())
                .collect()
        })
        .collect();
    'su: for dw in 0..=n {
        for du in 0..=(n - dw) {
            for dv in 0..=(n - dw - du) {
                for w in z_words(dw) {
                    for u in &x_words_shift[du] {
                        for v in &x_words_shift[dv] {
                            // ML2 for (S, U): ^w(uv) = ^w u . ^{w^u}v
                            let uv = [u.as_slice(), v.as_slice()].concat();
                            let lhs = u_tm.act_left(&w, &uv);
                            let rhs = [
                                u_tm.act_left(&w, u),
                                u_tm.act_left(&u_tm.act_right(&w, u), v),
                            ]
                            .concat();
                            if !u_tm.word_equal(&lhs, &rhs)? {
                                su_ok = false;
                                break 'su;
                            }
                        }
                    }
                    for a in &y_words_shift[du] {
                        for b in &y_words_shift[dv] {
                            // MR2 for (U, T): (ab)^w = a^{^b w} . b^w
                            let ab = [a.as_slice(), b.as_slice()].concat();
                            let lhs = u_tm.act_right(&ab, &w);
                            let rhs = [
                                u_tm.act_right(a, &u_tm.act_left(b, &w)),
                                u_tm.act_right(b, &w),
                            ]
                            .concat();
                            if !u_tm.word_equal(&lhs, &rhs)? {
                                ut_ok = false;
                                break 'su;
                            }
                        }
                    }
                }
            }
        }
    }

    let mut clauses = vec![ClauseReport::new("unique u.a normal forms", normal_forms_ok)];
    if !detail.is_empty() {
        clauses.push(ClauseReport::with_detail("normal-form witness", normal_forms_ok, detail));
    }
    clauses.push(ClauseReport::new("(S, U) matched-pair identities", su_ok));
    clauses.push(ClauseReport::new("(U, T) matched-pair identities", ut_ok));
    Ok(SuiteReport::new(tag, true, vec![], clauses))
}

fn words_at(size: usize, degree: usize) -> Vec<Word> {
    let count = size.pow(degree as u32);
    (0..count)
        .map(|mut k| {
            let mut w = vec![ElementId(0); degree];
            for slot in w.iter_mut().rev() {
                *slot = ElementId((k % size) as u16);
                k /= size;
            }
            w
        })
        .collect()
}

fn replace_at(part: &QuadraticSet, w: &Word, i: usize) -> Word {
    let mut out = w.clone();
    let (u, v) = part.apply_r(w[i], w[i + 1]);
    out[i] = u;
    out[i + 1] = v;
    out
}

/// Filters for extension enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtFilter {
    Ybe,
    SquareFree,
    Involutive,
    Lri,
    Stu,
}

impl ExtFilter {
    pub fn tag(self) -> &'static str {
        match self {
            ExtFilter::Ybe => "ybe",
            ExtFilter::SquareFree => "square_free",
            ExtFilter::Involutive => "involutive",
            ExtFilter::Lri => "lri",
            ExtFilter::Stu => "stu",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            ExtFilter::Ybe,
            ExtFilter::SquareFree,
            ExtFilter::Involutive,
            ExtFilter::Lri,
            ExtFilter::Stu,
        ]
        .into_iter()
        .find(|f| f.tag() == s)
    }

    pub fn passes(self, ext: &ExtensionSet) -> bool {
        match self {
            ExtFilter::Ybe => conditions::holds(ext.assembled(), ConditionId::Ybe),
            ExtFilter::SquareFree => ext.assembled().is_square_free(),
            ExtFilter::Involutive => ext.assembled().is_involutive(),
            ExtFilter::Lri => conditions::holds(ext.assembled(), ConditionId::Lri),
            ExtFilter::Stu => ext.check_mixed(MixedConditionId::Stu).holds,
        }
    }
}

pub const DEFAULT_FULL_TABLE_BUDGET: usize = 9;

/// All regular ground-action tables for the pair, in lexicographic order
/// of their flattened image tuples.
pub fn all_regular_grounds(
    x_part: &QuadraticSet,
    y_part: &QuadraticSet,
    budget: usize,
) -> Result<Vec<GroundActions>> {
    let m = x_part.size() * y_part.size();
    if m > budget {
        return Err(Error::BudgetExceeded(format!(
            "|X|*|Y| = {m} exceeds the full-table budget {budget}"
        )));
    }
    // codomain pairs (x, alpha) in lexicographic order
    let codomain: Vec<(u16, u16)> = (0..x_part.size() as u16)
        .flat_map(|x| (0..y_part.size() as u16).map(move |a| (x, a)))
        .collect();
    let ny = y_part.size();
    let nx = x_part.size();
    let mut out = Vec::new();
    for perm in (0..m).permutations(m) {
        let mut left = vec![vec![0u16; nx]; ny];
        let mut right = vec![vec![0u16; nx]; ny];
        // domain slots (alpha, x) in lexicographic order
        for (slot, &img) in perm.iter().enumerate() {
            let (a, x) = (slot / nx, slot % nx);
            let (u, b) = codomain[img];
            left[a][x] = u;
            right[a][x] = b;
        }
        out.push(GroundActions { left, right });
    }
    Ok(out)
}

/// Enumerates regular extensions in full-table mode, yielding those whose
/// assembled set passes every filter, in canonical order.
pub fn enumerate_full_table<'a>(
    x_part: &'a QuadraticSet,
    y_part: &'a QuadraticSet,
    filters: &'a [ExtFilter],
    budget: usize,
) -> Result<impl Iterator<Item = ExtensionSet> + 'a> {
    let grounds = all_regular_grounds(x_part, y_part, budget)?;
    Ok(grounds.into_iter().filter_map(move |g| {
        let ext = build_extension(x_part, y_part, g).ok()?;
        filters.iter().all(|f| f.passes(&ext)).then_some(ext)
    }))
}

/// Enumerates extensions from a candidate-family document: the Cartesian
/// product of the factors' candidate lists in input order, keeping the
/// regular ones that pass every filter.
pub fn enumerate_family<'a>(
    x_part: &'a QuadraticSet,
    y_part: &'a QuadraticSet,
    doc: &'a FamilyDoc,
    filters: &'a [ExtFilter],
) -> impl Iterator<Item = ExtensionSet> + 'a {
    doc.factors
        .iter()
        .map(|f| f.candidates.iter().collect::<Vec<_>>())
        .multi_cartesian_product()
        .filter_map(move |choice| {
            let ground = ground_from_family_choice(x_part, y_part, &choice, doc.lri).ok()?;
            let ext = build_extension(x_part, y_part, ground).ok()?;
            filters.iter().all(|f| f.passes(&ext)).then_some(ext)
        })
}

/// Parallel count of family combinations passing the filters, plus the
/// total number of regular combinations.
pub fn count_family(
    x_part: &QuadraticSet,
    y_part: &QuadraticSet,
    doc: &FamilyDoc,
    filters: &[ExtFilter],
) -> (usize, usize) {
    let choices: Vec<Vec<&crate::doc::FamilyCandidate>> = doc
        .factors
        .iter()
        .map(|f| f.candidates.iter().collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect();
    let flags = par::map_collect(choices, |choice| {
        let Ok(ground) = ground_from_family_choice(x_part, y_part, choice, doc.lri) else {
            return (false, false);
        };
        let Ok(ext) = build_extension(x_part, y_part, ground) else {
            return (false, false);
        };
        (true, filters.iter().all(|f| f.passes(&ext)))
    });
    let regular = flags.iter().filter(|(r, _)| *r).count();
    let passing = flags.iter().filter(|(_, p)| *p).count();
    (regular, passing)
}

/// Letter-level mixed actions of a strong matched pair `(S, T)`, with the
/// accompanying inverse pair; used by the M3-monoid extension checks.
#[derive(Debug, Clone)]
pub struct MixedPairActions {
    /// `left[t][s]`, `right[t][s]`: T acting on S / S acting back.
    pub mixed: LetterActions,
    /// `left[s][t] = s ▷ t`, `right[s][t] = s ◁ t`.
    pub acc: LetterActions,
}

impl MixedPairActions {
    /// Self-actions of one braided set (the quantum-double case).
    pub fn self_actions(qs: &QuadraticSet) -> Result<Self> {
        let inv = qs.inverse_table()?;
        Ok(MixedPairActions {
            mixed: LetterActions::of(qs),
            acc: LetterActions::of(&inv),
        })
    }

    /// The ground and accompanying actions of a regular extension, with
    /// `T = Y`, `S = X`.
    pub fn from_ground(ext: &ExtensionSet) -> Self {
        MixedPairActions {
            mixed: ext.ground_letter_actions(),
            acc: ext.accompanying_letter_actions(),
        }
    }

    /// Negative control: perturbs one entry of the mixed left table.
    pub fn corrupted(mut self) -> Self {
        let row = &mut self.mixed.left[0];
        let n = row.len() as u16;
        row[0] = (row[0] + 1) % n;
        self
    }
}

/// Checks the regular-extension conditions for M3-monoids on truncations:
/// the four explicit identities (ml1a, lr3a, mr1a, lr3b), agreement of the
/// composition formula for `r_U` with the extended-action definition, and
/// the braided verdict for `U = S ⋈ T`.
pub fn m3_extension_check(
    s_tm: &TruncatedMonoid,
    t_tm: &TruncatedMonoid,
    pair: &MixedPairActions,
    n: usize,
) -> Result<SuiteReport> {
    let tag = "m3_extension";
    let ml = |a: &Word, u: &Word| act_left_with(&pair.mixed.left, &pair.mixed.right, a, u);
    let mr = |a: &Word, u: &Word| act_right_with(&pair.mixed.left, &pair.mixed.right, a, u);
    let tl = |u: &Word, a: &Word| act_left_with(&pair.acc.left, &pair.acc.right, u, a);
    let tr = |u: &Word, a: &Word| act_right_with(&pair.acc.left, &pair.acc.right, u, a);
    let sl = |u: &Word, v: &Word| s_tm.act_left(u, v);
    let sr = |u: &Word, v: &Word| s_tm.act_right(u, v);
    let ttl = |a: &Word, b: &Word| t_tm.act_left(a, b);
    let ttr = |a: &Word, b: &Word| t_tm.act_right(a, b);

    // strong-pair hypothesis: lara relations at truncation
    let mut lara = true;
    'lara: for da in 0..=n {
        for du in 0..=(n - da) {
            for a in all_reps(t_tm, da)? {
                for u in all_reps(s_tm, du)? {
                    let p = ml(&a, &u);
                    let q = mr(&a, &u);
                    if !t_tm.word_equal(&tl(&p, &q), &a)? || !s_tm.word_equal(&tr(&p, &q), &u)? {
                        lara = false;
                        break 'lara;
                    }
                }
            }
        }
    }
    if !lara {
        return Ok(SuiteReport::new(
            tag,
            false,
            vec!["pair actions are not a strong matched pair (lara fails)".into()],
            vec![],
        ));
    }

    let mut ml1a = true;
    let mut lr3a = true;
    let mut mr1a = true;
    let mut lr3b = true;
    'ids: for da in 0..=n {
        for db in 0..=(n - da) {
            for dc in 0..=(n - da - db) {
                for a in all_reps(t_tm, da)? {
                    for u in all_reps(s_tm, db)? {
                        for v in all_reps(s_tm, dc)? {
                            // ml1a: ^{^a u}(^{a^u}v) = ^a(^u v)
                            let lhs = sl(&ml(&a, &u), &ml(&mr(&a, &u), &v));
                            let rhs = ml(&a, &sl(&u, &v));
                            if !s_tm.word_equal(&lhs, &rhs)? {
                                ml1a = false;
                                break 'ids;
                            }
                            // lr3a: (^a u)^{(^{a^u}v)} = ^{(a^{^u v})}(u^v)
                            let lhs = sr(&ml(&a, &u), &ml(&mr(&a, &u), &v));
                            let rhs = ml(&mr(&a, &sl(&u, &v)), &sr(&u, &v));
                            if !s_tm.word_equal(&lhs, &rhs)? {
                                lr3a = false;
                                break 'ids;
                            }
                        }
                    }
                    for b in all_reps(t_tm, db)? {
                        for u in all_reps(s_tm, dc)? {
                            // mr1a: (a^b)^u = (a^{^b u})^{b^u}
                            let lhs = mr(&ttr(&a, &b), &u);
                            let rhs = ttr(&mr(&a, &ml(&b, &u)), &mr(&b, &u));
                            if !t_tm.word_equal(&lhs, &rhs)? {
                                mr1a = false;
                                break 'ids;
                            }
                            // lr3b: (^a b)^{(^{a^b}u)} = ^{(a^{^b u})}(b^u)
                            let lhs = mr(&ttl(&a, &b), &ml(&ttr(&a, &b), &u));
                            let rhs = ttl(&mr(&a, &ml(&b, &u)), &mr(&b, &u));
                            if !t_tm.word_equal(&lhs, &rhs)? {
                                lr3b = false;
                                break 'ids;
                            }
                        }
                    }
                }
            }
        }
    }

    // r_U: composition formula vs extended-action definition, plus the
    // YBE for r_U on bounded normal-form triples
    let r_u = |u: &Word, a: &Word, v: &Word, b: &Word| -> (Word, Word, Word, Word) {
        let m = ml(a, v);
        let nw = mr(a, v);
        let s2 = sr(u, &m);
        let t2 = ttl(&nw, b);
        (sl(u, &m), tl(&s2, &t2), tr(&s2, &t2), ttr(&nw, b))
    };
    let r_u_composed = |u: &Word, a: &Word, v: &Word, b: &Word| -> (Word, Word, Word, Word) {
        // r^{23}_{T,S}
        let (p2, p3) = (ml(a, v), mr(a, v));
        // r^{12}_S
        let (q1, q2) = (sl(u, &p2), sr(u, &p2));
        // r^{34}_T
        let (q3, q4) = (ttl(&p3, b), ttr(&p3, b));
        // (r^{23}_{T,S})^{-1}
        let (w2, w3) = (tl(&q2, &q3), tr(&q2, &q3));
        (q1, w2, w3, q4)
    };
    let mut composition_agrees = true;
    let mut u_ybe = true;
    let mut dbl: Vec<(Word, Word)> = Vec::new();
    for du in 0..=n {
        for da in 0..=(n - du) {
            for u in all_reps(s_tm, du)? {
                for a in all_reps(t_tm, da)? {
                    dbl.push((u.clone(), a));
                }
            }
        }
    }
    'comp: for (u, a) in &dbl {
        for (v, b) in &dbl {
            if u.len() + a.len() + v.len() + b.len() > n {
                continue;
            }
            let lhs = r_u(u, a, v, b);
            let rhs = r_u_composed(u, a, v, b);
            let eq = s_tm.word_equal(&lhs.0, &rhs.0)?
                && t_tm.word_equal(&lhs.1, &rhs.1)?
                && s_tm.word_equal(&lhs.2, &rhs.2)?
                && t_tm.word_equal(&lhs.3, &rhs.3)?;
            if !eq {
                composition_agrees = false;
                break 'comp;
            }
        }
    }
    // YBE for r_U over triples of double elements within total degree n
    let r_u_pairs = |x: &(Word, Word), y: &(Word, Word)| -> ((Word, Word), (Word, Word)) {
        let (a, b, c, d) = r_u(&x.0, &x.1, &y.0, &y.1);
        ((a, b), (c, d))
    };
    'ybe: for w1 in &dbl {
        for w2 in &dbl {
            for w3 in &dbl {
                let deg = w1.0.len() + w1.1.len() + w2.0.len() + w2.1.len() + w3.0.len() + w3.1.len();
                if deg > n {
                    continue;
                }
                let chain = |order12: bool| -> [(Word, Word); 3] {
                    let mut t = [w1.clone(), w2.clone(), w3.clone()];
                    let steps: [usize; 3] = if order12 { [0, 1, 0] } else { [1, 0, 1] };
                    for &pos in &steps {
                        let (a, b) = r_u_pairs(&t[pos].clone(), &t[pos + 1].clone());
                        t[pos] = a;
                        t[pos + 1] = b;
                    }
                    t
                };
                let lhs = chain(true);
                let rhs = chain(false);
                for k in 0..3 {
                    if !(s_tm.word_equal(&lhs[k].0, &rhs[k].0)?
                        && t_tm.word_equal(&lhs[k].1, &rhs[k].1)?)
                    {
                        u_ybe = false;
                        break 'ybe;
                    }
                }
            }
        }
    }

    let clauses = vec![
        ClauseReport::new("ml1a", ml1a),
        ClauseReport::new("lr3a", lr3a),
        ClauseReport::new("mr1a", mr1a),
        ClauseReport::new("lr3b", lr3b),
        ClauseReport::new("r_U composition formula agrees", composition_agrees),
        ClauseReport::new("r_U obeys the YBE", u_ybe),
    ];
    Ok(SuiteReport::new(tag, true, vec![], clauses))
}

fn all_reps(tm: &TruncatedMonoid, degree: usize) -> Result<Vec<Word>> {
    Ok(tm
        .classes_at_degree(degree)?
        .iter()
        .map(|c| c.canonical.clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn trivial(name: &str, names: &[&str]) -> QuadraticSet {
        QuadraticSet::trivial(name, labels(names)).unwrap()
    }

    #[test]
    fn trivial_extension_is_braided() {
        let x = trivial("x", &["a", "b"]);
        let y = trivial("y", &["c"]);
        let ext = build_extension(&x, &y, GroundActions::trivial(2, 1)).unwrap();
        assert!(conditions::holds(ext.assembled(), ConditionId::Ybe));
        for cond in MIXED_CONDITION_IDS {
            assert!(ext.check_mixed(cond).holds, "{}", cond.tag());
        }
        let rep = automorphism_action_check(&ext);
        assert!(rep.all_y_on_x() && rep.all_x_on_y());
    }

    #[test]
    fn carrier_overlap_and_regularity_errors() {
        let x = trivial("x", &["a", "b"]);
        let y = trivial("y", &["a"]);
        assert!(matches!(
            build_extension(&x, &y, GroundActions::trivial(2, 1)),
            Err(Error::CarrierOverlap(_))
        ));
        let y = trivial("y", &["c"]);
        let ground = GroundActions::new(vec![vec![0, 0]], vec![vec![0, 0]]);
        assert!(matches!(
            build_extension(&x, &y, ground),
            Err(Error::NotRegular(_))
        ));
    }

    #[test]
    fn full_table_enumeration_trivial_ab_c() {
        let x = trivial("x", &["a", "b"]);
        let y = trivial("y", &["c"]);
        let all: Vec<_> = enumerate_full_table(&x, &y, &[], DEFAULT_FULL_TABLE_BUDGET)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 2);
        let ybe: Vec<_> = enumerate_full_table(&x, &y, &[ExtFilter::Ybe], DEFAULT_FULL_TABLE_BUDGET)
            .unwrap()
            .collect();
        assert_eq!(ybe.len(), 2);
        for ext in &ybe {
            let suite = verify_extension_theorem(ext, ExtensionSuiteId::Bz, 3).unwrap();
            assert!(suite.passed());
            let stu = strong_twisted_union_report(ext).unwrap();
            assert_eq!(stu.ybe, stu.is_stu);
        }
    }

    #[test]
    fn bz_biconditional_on_2x2_family() {
        let x = trivial("x", &["a", "b"]);
        let y = trivial("y", &["c", "d"]);
        let mut total = 0;
        for ext in enumerate_full_table(&x, &y, &[], DEFAULT_FULL_TABLE_BUDGET).unwrap() {
            total += 1;
            let suite = verify_extension_theorem(&ext, ExtensionSuiteId::Bz, 2).unwrap();
            assert!(suite.passed(), "BZ fails on a regular extension");
            let tp = verify_extension_theorem(&ext, ExtensionSuiteId::TrivialParts, 2).unwrap();
            assert_ne!(tp.verdict, crate::report::SuiteVerdict::Failed);
        }
        assert_eq!(total, 24);
    }

    #[test]
    fn double_of_braided_sets() {
        let x = trivial("x", &["a", "b"]);
        let d = double_braided_set(&x).unwrap();
        assert_eq!(d.assembled().size(), 4);
        assert!(conditions::holds(d.assembled(), ConditionId::Ybe));
        let id = QuadraticSet::identity("i", labels(&["a", "b"])).unwrap();
        assert!(double_braided_set(&id).is_ok());
        let lb = labels(&["x", "y", "z"]);
        let g = crate::perm::parse_cycles("(x z y)", &lb).unwrap();
        let f = crate::perm::parse_cycles("(x z)", &lb).unwrap();
        let bad = QuadraticSet::permutational("nb", lb, &f, &g).unwrap();
        assert!(matches!(
            double_braided_set(&bad),
            Err(Error::PrerequisiteFailed(_))
        ));
    }

    #[test]
    fn m3_extension_quantum_double() {
        let x = trivial("x", &["a", "b"]);
        let tm = TruncatedMonoid::build(x.clone(), 2).unwrap();
        let pair = MixedPairActions::self_actions(&x).unwrap();
        let rep = m3_extension_check(&tm, &tm, &pair, 2).unwrap();
        assert!(rep.passed(), "{:?}", rep);
        let bad = MixedPairActions::self_actions(&x).unwrap().corrupted();
        let rep = m3_extension_check(&tm, &tm, &bad, 2).unwrap();
        assert!(!rep.passed());
    }
}
