//! The degree-truncated monoid of a quadratic set: words up to a fixed
//! degree, congruence classes as orbits of the length-preserving
//! replacements, the extended left/right actions on words, and the
//! verification machinery for the matched-pair, M3, LR3 and braided-monoid
//! properties at truncation.
//!
//! The relations `xy = r(xy)` preserve length, so word equality at degree
//! `n` is decidable by closing each word under the replacement maps
//! `r_i` and their inverses inside the finite set `X^n`. Classes are built
//! once per degree with a union-find and memoized; every later query is a
//! table lookup.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::par;
use crate::qset::{ElementId, QuadraticSet};
use crate::report::{CheckOptions, ConditionReport, Witness};

/// A word in the free monoid over the carrier; empty = identity.
pub type Word = Vec<ElementId>;

/// (canonical member, alternative member) of one congruence class.
type RepPair = (Word, Word);

pub fn word_of(ids: &[u16]) -> Word {
    ids.iter().map(|&i| ElementId(i)).collect()
}

pub fn word_str(qs: &QuadraticSet, w: &[ElementId]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter()
            .map(|&x| qs.label(x))
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// One congruence class: all words of a fixed degree reachable from each
/// other by replacements; `canonical` is the lexicographic minimum.
#[derive(Debug, Clone)]
pub struct CongruenceClass {
    pub degree: usize,
    pub members: Vec<Word>,
    pub canonical: Word,
}

struct Stratum {
    /// class id per word rank (mixed-radix index into `X^n`).
    class_of: Vec<u32>,
    classes: Vec<CongruenceClass>,
}

/// Letter-level action tables: `left[a][b] = a ▸ b`, `right[a][b] = a ◂ b`
/// (so `right[a][b]` is the second component of `r(a, b)`).
#[derive(Debug, Clone)]
pub struct LetterActions {
    pub left: Vec<Vec<u16>>,
    pub right: Vec<Vec<u16>>,
}

impl LetterActions {
    pub fn of(qs: &QuadraticSet) -> Self {
        let n = qs.size();
        let mut left = vec![vec![0u16; n]; n];
        let mut right = vec![vec![0u16; n]; n];
        for (x, y) in qs.pairs() {
            let (u, v) = qs.apply_r(x, y);
            left[x.idx()][y.idx()] = u.0;
            right[x.idx()][y.idx()] = v.0;
        }
        LetterActions { left, right }
    }
}

/// `^a u` for mixed letter tables: the actor `a` ranges over one carrier,
/// `u` over another; `left[t][s]`, `right[t][s]` give the letter actions.
/// With both carriers equal and the tables from `r` this is the word
/// action of the associated monoid on itself.
pub fn act_left_with(left: &[Vec<u16>], right: &[Vec<u16>], a: &[ElementId], u: &[ElementId]) -> Word {
    let mut out: Word = u.to_vec();
    for &x in a.iter().rev() {
        let mut cur = x.0;
        for slot in out.iter_mut() {
            let y = slot.0;
            *slot = ElementId(left[cur as usize][y as usize]);
            cur = right[cur as usize][y as usize];
        }
    }
    out
}

/// `a^u` for mixed letter tables; degree of the result is `|a|`.
pub fn act_right_with(left: &[Vec<u16>], right: &[Vec<u16>], a: &[ElementId], u: &[ElementId]) -> Word {
    let mut out: Word = a.to_vec();
    for &y in u.iter() {
        let mut cur = y.0;
        for slot in out.iter_mut().rev() {
            let z = slot.0;
            *slot = ElementId(right[z as usize][cur as usize]);
            cur = left[z as usize][cur as usize];
        }
    }
    out
}

/// Report of the matched-pair and M3/LR3 axioms at truncation.
#[derive(Debug, Clone)]
pub struct MatchedPairReport {
    pub base_braided: bool,
    pub axioms: Vec<ConditionReport>,
}

impl MatchedPairReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.holds)
    }

    pub fn axiom(&self, name: &str) -> Option<&ConditionReport> {
        self.axioms.iter().find(|a| a.name == name)
    }
}

/// Report of the braided-monoid checks at truncation.
#[derive(Debug, Clone)]
pub struct BraidedMonoidReport {
    pub checks: Vec<ConditionReport>,
}

impl BraidedMonoidReport {
    pub fn check(&self, name: &str) -> Option<&ConditionReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

const DEFAULT_WORD_BUDGET: usize = 2_000_000;

/// Degree-truncated associated monoid `S(X, r)`.
pub struct TruncatedMonoid {
    base: QuadraticSet,
    max_degree: usize,
    strata: Vec<Stratum>,
    acts: LetterActions,
    /// letter actions of `(X, r^{-1})`, present when `r` is bijective;
    /// they drive the accompanying actions and the strongness check.
    inv_acts: Option<LetterActions>,
    braided: bool,
}

impl TruncatedMonoid {
    pub fn build(base: QuadraticSet, max_degree: usize) -> Result<Self> {
        Self::build_with_budget(base, max_degree, DEFAULT_WORD_BUDGET)
    }

    pub fn build_with_budget(base: QuadraticSet, max_degree: usize, budget: usize) -> Result<Self> {
        let n = base.size();
        let mut total: usize = 0;
        for d in 0..=max_degree {
            let count = n.checked_pow(d as u32).ok_or_else(|| {
                Error::BudgetExceeded(format!("|X|^{d} overflows"))
            })?;
            total = total.checked_add(count).ok_or_else(|| {
                Error::BudgetExceeded("word count overflows".into())
            })?;
        }
        if total > budget {
            return Err(Error::BudgetExceeded(format!(
                "{total} words at degree <= {max_degree} exceeds budget {budget}"
            )));
        }
        let acts = LetterActions::of(&base);
        let inv_acts = base.inverse_table().ok().map(|inv| LetterActions::of(&inv));
        let braided = crate::conditions::holds(&base, crate::conditions::ConditionId::Ybe);
        let mut strata = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            strata.push(build_stratum(&base, &acts, d));
        }
        Ok(TruncatedMonoid {
            base,
            max_degree,
            strata,
            acts,
            inv_acts,
            braided,
        })
    }

    pub fn base(&self) -> &QuadraticSet {
        &self.base
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn base_braided(&self) -> bool {
        self.braided
    }

    pub fn letter_actions(&self) -> &LetterActions {
        &self.acts
    }

    fn rank(&self, w: &[ElementId]) -> usize {
        let n = self.base.size();
        w.iter().fold(0usize, |acc, &x| acc * n + x.idx())
    }

    fn stratum(&self, degree: usize) -> Result<&Stratum> {
        self.strata.get(degree).ok_or(Error::DegreeExceeded {
            degree,
            max: self.max_degree,
        })
    }

    pub fn class_id(&self, w: &[ElementId]) -> Result<(usize, u32)> {
        let s = self.stratum(w.len())?;
        Ok((w.len(), s.class_of[self.rank(w)]))
    }

    /// True iff the words have equal degree and lie in the same
    /// replacement orbit.
    pub fn word_equal(&self, u: &[ElementId], v: &[ElementId]) -> Result<bool> {
        if u.len() != v.len() {
            // still validate both degrees are within the truncation
            self.stratum(u.len())?;
            self.stratum(v.len())?;
            return Ok(false);
        }
        let s = self.stratum(u.len())?;
        Ok(s.class_of[self.rank(u)] == s.class_of[self.rank(v)])
    }

    pub fn classes_at_degree(&self, degree: usize) -> Result<&[CongruenceClass]> {
        Ok(&self.stratum(degree)?.classes)
    }

    pub fn canonical(&self, w: &[ElementId]) -> Result<&Word> {
        let (d, c) = self.class_id(w)?;
        Ok(&self.strata[d].classes[c as usize].canonical)
    }

    /// Class representatives at a degree: the canonical word of each class.
    fn reps(&self, degree: usize) -> Vec<Word> {
        self.strata[degree]
            .classes
            .iter()
            .map(|c| c.canonical.clone())
            .collect()
    }

    fn ensure_braided(&self, op: &str) -> Result<()> {
        if self.braided {
            Ok(())
        } else {
            Err(Error::PrerequisiteFailed(format!(
                "{op} requires a braided base (ybe fails on {})",
                self.base.name()
            )))
        }
    }

    /// `^a u`; requires a braided base for the result to be well defined
    /// on classes, and both degrees within the truncation.
    pub fn ext_left_action(&self, a: &[ElementId], u: &[ElementId]) -> Result<Word> {
        self.ensure_braided("ext_left_action")?;
        self.stratum(a.len())?;
        self.stratum(u.len())?;
        Ok(self.act_left(a, u))
    }

    /// `a^u`, with the same prerequisites.
    pub fn ext_right_action(&self, a: &[ElementId], u: &[ElementId]) -> Result<Word> {
        self.ensure_braided("ext_right_action")?;
        self.stratum(a.len())?;
        self.stratum(u.len())?;
        Ok(self.act_right(a, u))
    }

    /// Unchecked word actions (used internally, also on non-braided bases
    /// where the verification suites report the failures).
    pub(crate) fn act_left(&self, a: &[ElementId], u: &[ElementId]) -> Word {
        act_left_with(&self.acts.left, &self.acts.right, a, u)
    }

    pub(crate) fn act_right(&self, a: &[ElementId], u: &[ElementId]) -> Word {
        act_right_with(&self.acts.left, &self.acts.right, a, u)
    }

    /// Accompanying actions built from `(X, r^{-1})`: `u ▷ a` and `u ◁ a`.
    pub fn acc_left(&self, u: &[ElementId], a: &[ElementId]) -> Result<Word> {
        let inv = self
            .inv_acts
            .as_ref()
            .ok_or_else(|| Error::PrerequisiteFailed("bijective".into()))?;
        Ok(act_left_with(&inv.left, &inv.right, u, a))
    }

    pub fn acc_right(&self, u: &[ElementId], a: &[ElementId]) -> Result<Word> {
        let inv = self
            .inv_acts
            .as_ref()
            .ok_or_else(|| Error::PrerequisiteFailed("bijective".into()))?;
        Ok(act_right_with(&inv.left, &inv.right, u, a))
    }

    /// `r_S(u, v) = (^u v, u^v)` on representatives.
    pub fn r_s_apply(&self, u: &[ElementId], v: &[ElementId]) -> Result<(Word, Word)> {
        self.ensure_braided("r_s_apply")?;
        Ok((self.act_left(u, v), self.act_right(u, v)))
    }

    fn witness(&self, tuple: &[&[ElementId]], lhs: &[ElementId], rhs: &[ElementId]) -> Witness {
        Witness {
            tuple: tuple.iter().map(|w| word_str(&self.base, w)).collect(),
            lhs: word_str(&self.base, lhs),
            rhs: word_str(&self.base, rhs),
        }
    }

    /// Cancellation on monomials of the given length (2 or 3), decided
    /// classwise: members of one class that share a prefix letter must
    /// have congruent tails, and dually.
    pub fn cancellation_test(&self, length: usize) -> Result<ConditionReport> {
        let name = format!("cancellation_length_{length}");
        if length < 2 || length > self.max_degree {
            return Err(Error::DegreeExceeded {
                degree: length,
                max: self.max_degree,
            });
        }
        let cap = CheckOptions::default().witness_cap;
        let mut ws = Vec::new();
        for class in &self.strata[length].classes {
            // left cancellation: equal first letter forces congruent tails
            for i in 0..class.members.len() {
                for j in (i + 1)..class.members.len() {
                    let (a, b) = (&class.members[i], &class.members[j]);
                    if a[0] == b[0] && !self.word_equal(&a[1..], &b[1..])? {
                        ws.push(self.witness(&[a, b], &a[1..], &b[1..]));
                    }
                    let last = length - 1;
                    if a[last] == b[last] && !self.word_equal(&a[..last], &b[..last])? {
                        ws.push(self.witness(&[a, b], &a[..last], &b[..last]));
                    }
                    if ws.len() >= cap {
                        return Ok(ConditionReport::from_witnesses(&name, ws, cap));
                    }
                }
            }
        }
        Ok(ConditionReport::from_witnesses(&name, ws, cap))
    }

    /// Replacement compatibility of the word actions: actor-side
    /// invariance (`^{r_i(a)}u = ^a u`) and value-side commuting
    /// (`^a(r_i(u)) = r_i(^a u)`), in both directions. These are exact
    /// word equalities in the free monoid for a braided base, and imply
    /// that the actions descend to congruence classes.
    pub fn verify_action_well_defined(&self) -> ConditionReport {
        let cap = CheckOptions::default().witness_cap;
        let name = "action_well_defined";
        let mut tuples: Vec<(Word, Word, usize)> = Vec::new();
        for da in 0..=self.max_degree {
            for du in 0..=self.max_degree.saturating_sub(da) {
                if du < 2 && da < 2 {
                    continue;
                }
                for a in self.words_at(da) {
                    for u in self.words_at(du) {
                        let m = da.max(du);
                        for i in 0..m.saturating_sub(1) {
                            tuples.push((a.clone(), u.clone(), i));
                        }
                    }
                }
            }
        }
        let ws = par::collect_some(tuples, |(a, u, i)| {
            let i = *i;
            if i + 1 < u.len() {
                // value-side, left action
                let left1 = self.act_left(a, &self.replace_at(u, i));
                let left2 = self.replace_at(&self.act_left(a, u), i);
                if left1 != left2 {
                    return Some(self.witness(&[a, u], &left1, &left2));
                }
                // actor-side, right action
                let r1 = self.act_right(a, &self.replace_at(u, i));
                let r2 = self.act_right(a, u);
                if r1 != r2 {
                    return Some(self.witness(&[a, u], &r1, &r2));
                }
            }
            if i + 1 < a.len() {
                // actor-side, left action
                let l1 = self.act_left(&self.replace_at(a, i), u);
                let l2 = self.act_left(a, u);
                if l1 != l2 {
                    return Some(self.witness(&[a, u], &l1, &l2));
                }
                // value-side, right action
                let r1 = self.act_right(&self.replace_at(a, i), u);
                let r2 = self.replace_at(&self.act_right(a, u), i);
                if r1 != r2 {
                    return Some(self.witness(&[a, u], &r1, &r2));
                }
            }
            None
        });
        ConditionReport::from_witnesses(name, ws, cap)
    }

    fn replace_at(&self, w: &[ElementId], i: usize) -> Word {
        replaced(&self.base, w, i)
    }

    fn words_at(&self, degree: usize) -> Vec<Word> {
        let n = self.base.size();
        let count = n.pow(degree as u32);
        (0..count)
            .map(|mut k| {
                let mut w = vec![ElementId(0); degree];
                for slot in w.iter_mut().rev() {
                    *slot = ElementId((k % n) as u16);
                    k /= n;
                }
                w
            })
            .collect()
    }

    /// Checks ML0/MR0/ML1/MR1/ML2/MR2 plus M3 and LR3 classwise on all
    /// representative tuples of total degree within the truncation.
    ///
    /// Each identity is evaluated with the left-hand side on canonical
    /// representatives and the right-hand side on alternative members of
    /// the same classes (where the classes have more than one word), so a
    /// passing verdict certifies both the identity and its independence
    /// of representative choice.
    pub fn verify_matched_pair(&self, max_degree: usize) -> Result<MatchedPairReport> {
        let n = max_degree.min(self.max_degree);
        let cap = CheckOptions::default().witness_cap;
        let mut axioms = Vec::new();

        // ML0/MR0: unit laws.
        let mut unit_ws = Vec::new();
        for d in 0..=n {
            for a in self.reps(d) {
                let e: Word = Vec::new();
                if !self.act_left(&a, &e).is_empty() || !self.act_right(&e, &a).is_empty() {
                    unit_ws.push(self.witness(&[&a], &e, &e));
                }
                if self.act_left(&e, &a) != a {
                    unit_ws.push(self.witness(&[&a], &self.act_left(&e, &a), &a));
                }
                if self.act_right(&a, &e) != a {
                    unit_ws.push(self.witness(&[&a], &self.act_right(&a, &e), &a));
                }
            }
        }
        axioms.push(ConditionReport::from_witnesses("ML0", unit_ws.clone(), cap));
        axioms.push(ConditionReport::from_witnesses("MR0", unit_ws, cap));

        let triples = self.paired_triples(n);
        let check3 = |name: &str,
                      f: &(dyn Fn(&Word, &Word, &Word) -> Word + Sync)|
         -> ConditionReport {
            let ws = par::collect_some(triples.clone(), |((a, a2), (b, b2), (u, u2))| {
                let lhs = f(a, b, u);
                let rhs = f(a2, b2, u2);
                match self.word_equal(&lhs, &rhs) {
                    Ok(true) => None,
                    _ => Some(self.witness(&[a, b, u], &lhs, &rhs)),
                }
            });
            ConditionReport::from_witnesses(name, ws, cap)
        };

        // each axiom is stated as "this expression is a class invariant";
        // for ML1/MR1 the two association orders are already equal as free
        // words, so the class-level content is representative independence
        axioms.push(check3("ML1", &|a, b, u| {
            let ab = [a.as_slice(), b.as_slice()].concat();
            self.act_left(&ab, u)
        }));
        axioms.push(check3("MR1", &|a, u, v| {
            let uv = [u.as_slice(), v.as_slice()].concat();
            self.act_right(a, &uv)
        }));
        axioms.push(check3("ML2", &|a, u, v| {
            // ^a u . ^{a^u}v, compared against ^a(uv) on other members
            [
                self.act_left(a, u),
                self.act_left(&self.act_right(a, u), v),
            ]
            .concat()
        }));
        axioms.push(check3("MR2", &|a, b, u| {
            [
                self.act_right(a, &self.act_left(b, u)),
                self.act_right(b, u),
            ]
            .concat()
        }));

        // M3: uv = ^u v . u^v in the monoid (cross-representative).
        let pairs = self.paired_pairs(n);
        let m3_ws = par::collect_some(pairs, |((u, u2), (v, v2))| {
            let lhs = [u.as_slice(), v.as_slice()].concat();
            let rhs = [self.act_left(u2, v2), self.act_right(u2, v2)].concat();
            match self.word_equal(&lhs, &rhs) {
                Ok(true) => None,
                _ => Some(self.witness(&[u, v], &lhs, &rhs)),
            }
        });
        axioms.push(ConditionReport::from_witnesses("M3", m3_ws, cap));

        // LR3 has genuinely different sides even on fixed representatives.
        let ws = par::collect_some(triples.clone(), |((a, a2), (w, w2), (b, b2))| {
            let p = self.act_left(a, w);
            let q = self.act_left(&self.act_right(a, w), b);
            let lhs = self.act_right(&p, &q);
            let s = self.act_right(a2, &self.act_left(w2, b2));
            let t = self.act_right(w2, b2);
            let rhs = self.act_left(&s, &t);
            match self.word_equal(&lhs, &rhs) {
                Ok(true) => None,
                _ => Some(self.witness(&[a, w, b], &lhs, &rhs)),
            }
        });
        axioms.push(ConditionReport::from_witnesses("LR3", ws, cap));

        Ok(MatchedPairReport {
            base_braided: self.braided,
            axioms,
        })
    }

    /// (canonical, alternative-member) pairs per class; the alternative
    /// defaults to the canonical word for singleton classes.
    fn rep_pairs(&self, degree: usize) -> Vec<RepPair> {
        self.strata[degree]
            .classes
            .iter()
            .map(|c| {
                let alt = c.members.get(1).unwrap_or(&c.members[0]).clone();
                (c.canonical.clone(), alt)
            })
            .collect()
    }

    fn paired_pairs(&self, n: usize) -> Vec<(RepPair, RepPair)> {
        let mut out = Vec::new();
        for du in 0..=n {
            for dv in 0..=(n - du) {
                for u in self.rep_pairs(du) {
                    for v in self.rep_pairs(dv) {
                        out.push((u.clone(), v));
                    }
                }
            }
        }
        out
    }

    fn paired_triples(&self, n: usize) -> Vec<(RepPair, RepPair, RepPair)> {
        let mut out = Vec::new();
        for da in 0..=n {
            for db in 0..=(n - da) {
                for dc in 0..=(n - da - db) {
                    for a in self.rep_pairs(da) {
                        for b in self.rep_pairs(db) {
                            for c in self.rep_pairs(dc) {
                                out.push((a.clone(), b.clone(), c.clone()));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Braided-monoid checks at truncation. `checks` selects among
    /// `ybe`, `strong`, `nondegenerate`, `involutive`; the involutivity
    /// check verifies the transfer theorem and therefore must equal the
    /// base verdict, so it reports against `involutive(base)`.
    pub fn verify_braided_monoid(&self, max_degree: usize, checks: &[&str]) -> Result<BraidedMonoidReport> {
        let n = max_degree.min(self.max_degree);
        let cap = CheckOptions::default().witness_cap;
        let mut out = Vec::new();
        for &which in checks {
            match which {
                "ybe" => {
                    let triples = self.paired_triples(n);
                    let ws = par::collect_some(triples, |((u, u2), (v, v2), (w, w2))| {
                        let lhs = self.rs_chain(u, v, w, true);
                        let rhs = self.rs_chain(u2, v2, w2, false);
                        for k in 0..3 {
                            match self.word_equal(&lhs[k], &rhs[k]) {
                                Ok(true) => {}
                                _ => return Some(self.witness(&[u, v, w], &lhs[k], &rhs[k])),
                            }
                        }
                        None
                    });
                    out.push(ConditionReport::from_witnesses("ybe", ws, cap));
                }
                "strong" => {
                    if self.inv_acts.is_none() {
                        out.push(ConditionReport::skipped("strong", "base not bijective"));
                        continue;
                    }
                    let pairs = self.paired_pairs(n);
                    let ws = par::collect_some(pairs, |((a, _), (u, _))| {
                        // lara: ^a u ▷ a^u = a; ^a u ◁ a^u = u;
                        //       ^{u▷a}(u◁a) = u; (u▷a)^{u◁a} = a.
                        let p = self.act_left(a, u);
                        let q = self.act_right(a, u);
                        let c1 = self.acc_left(&p, &q).ok()?;
                        if !self.word_equal(&c1, a).ok()? {
                            return Some(self.witness(&[a, u], &c1, a));
                        }
                        let c2 = self.acc_right(&p, &q).ok()?;
                        if !self.word_equal(&c2, u).ok()? {
                            return Some(self.witness(&[a, u], &c2, u));
                        }
                        let s = self.acc_left(u, a).ok()?;
                        let t = self.acc_right(u, a).ok()?;
                        let c3 = self.act_left(&s, &t);
                        if !self.word_equal(&c3, u).ok()? {
                            return Some(self.witness(&[u, a], &c3, u));
                        }
                        let c4 = self.act_right(&s, &t);
                        if !self.word_equal(&c4, a).ok()? {
                            return Some(self.witness(&[u, a], &c4, a));
                        }
                        None
                    });
                    out.push(ConditionReport::from_witnesses("strong", ws, cap));
                }
                "nondegenerate" => {
                    let mut ws = Vec::new();
                    'nd: for da in 0..=n {
                        for du in 1..=(n - da) {
                            for a in self.reps(da) {
                                let mut seen: HashMap<u32, Word> = HashMap::new();
                                for u in self.reps(du) {
                                    let img = self.act_left(&a, &u);
                                    let (_, cid) = self.class_id(&img)?;
                                    if let Some(prev) = seen.get(&cid) {
                                        ws.push(self.witness(&[&a, &u], prev, &u));
                                        if ws.len() >= cap {
                                            break 'nd;
                                        }
                                    } else {
                                        seen.insert(cid, u.clone());
                                    }
                                }
                                // right: b -> b^a over classes of each degree
                                let mut seen_r: HashMap<u32, Word> = HashMap::new();
                                for b in self.reps(du) {
                                    let img = self.act_right(&b, &a);
                                    let (_, cid) = self.class_id(&img)?;
                                    if let Some(prev) = seen_r.get(&cid) {
                                        ws.push(self.witness(&[&a, &b], prev, &b));
                                        if ws.len() >= cap {
                                            break 'nd;
                                        }
                                    } else {
                                        seen_r.insert(cid, b.clone());
                                    }
                                }
                            }
                        }
                    }
                    out.push(ConditionReport::from_witnesses("nondegenerate", ws, cap));
                }
                "involutive" => {
                    if !self.base.is_involutive() {
                        out.push(ConditionReport::skipped("involutive", "base not involutive"));
                        continue;
                    }
                    let pairs = self.paired_pairs(n);
                    let ws = par::collect_some(pairs, |((u, u2), (v, v2))| {
                        let p = self.act_left(u2, v2);
                        let q = self.act_right(u2, v2);
                        let back_u = self.act_left(&p, &q);
                        if !self.word_equal(&back_u, u).ok()? {
                            return Some(self.witness(&[u, v], &back_u, u));
                        }
                        let back_v = self.act_right(&p, &q);
                        if !self.word_equal(&back_v, v).ok()? {
                            return Some(self.witness(&[u, v], &back_v, v));
                        }
                        None
                    });
                    out.push(ConditionReport::from_witnesses("involutive", ws, cap));
                }
                other => {
                    out.push(ConditionReport::skipped(other, "unknown braided-monoid check"));
                }
            }
        }
        Ok(BraidedMonoidReport { checks: out })
    }

    fn rs_chain(&self, u: &Word, v: &Word, w: &Word, first12: bool) -> [Word; 3] {
        let mut t = [u.clone(), v.clone(), w.clone()];
        let steps: [usize; 3] = if first12 { [0, 1, 0] } else { [1, 0, 1] };
        for &pos in &steps {
            let (a, b) = (t[pos].clone(), t[pos + 1].clone());
            t[pos] = self.act_left(&a, &b);
            t[pos + 1] = self.act_right(&a, &b);
        }
        t
    }

    /// The triple-product characterisation: extends the self-actions to
    /// `(S, S ⋈ S)` and `(S ⋈ S, S)` matched pairs and verifies their
    /// axioms, plus agreement of the two iterated products on triples.
    pub fn verify_triple_product(&self, max_degree: usize) -> Result<MatchedPairReport> {
        let n = max_degree.min(self.max_degree);
        let cap = CheckOptions::default().witness_cap;
        let mut axioms = Vec::new();

        // pairs (u, a) of S ⋈ S with |u| + |a| <= n, as representative words
        let mut dbl: Vec<(Word, Word)> = Vec::new();
        for du in 0..=n {
            for da in 0..=(n - du) {
                for u in self.reps(du) {
                    for a in self.reps(da) {
                        dbl.push((u.clone(), a));
                    }
                }
            }
        }
        let singles: Vec<Word> = (0..=n).flat_map(|d| self.reps(d)).collect();

        // left action of S⋈S on S: ^{(u,a)}v = ^{ua}v
        let dl = |u: &Word, a: &Word, v: &Word| -> Word {
            self.act_left(&[u.as_slice(), a.as_slice()].concat(), v)
        };
        // right action of S on S⋈S: (u,a)^v = (u^{^a v}, a^v)
        let dr = |u: &Word, a: &Word, v: &Word| -> (Word, Word) {
            (
                self.act_right(u, &self.act_left(a, v)),
                self.act_right(a, v),
            )
        };
        // product in S⋈S
        let prod = |u: &Word, a: &Word, v: &Word, b: &Word| -> (Word, Word) {
            (
                [u.as_slice(), &self.act_left(a, v)].concat(),
                [self.act_right(a, v), b.to_vec()].concat(),
            )
        };

        // (S, S⋈S) matched pair axioms on bounded tuples
        let mut tuples: Vec<(RepPair, RepPair, Word)> = Vec::new();
        for (u, a) in &dbl {
            for (v, b) in &dbl {
                for w in &singles {
                    if u.len() + a.len() + v.len() + b.len() + w.len() <= n {
                        tuples.push(((u.clone(), a.clone()), (v.clone(), b.clone()), w.clone()));
                    }
                }
            }
        }
        let ws = par::collect_some(tuples.clone(), |((u, a), (v, b), w)| {
            // ML1: ^{(u,a)(v,b)}w = ^{(u,a)}(^{(v,b)}w)
            let (pu, pa) = prod(u, a, v, b);
            let lhs = dl(&pu, &pa, w);
            let rhs = dl(u, a, &dl(v, b, w));
            if !self.word_equal(&lhs, &rhs).ok()? {
                return Some(self.witness(&[u, a, v, b, w], &lhs, &rhs));
            }
            // MR2: ((u,a)(v,b))^w = (u,a)^{^{(v,b)}w} . (v,b)^w
            let (l1, l2) = dr(&pu, &pa, w);
            let (x1, x2) = dr(u, a, &dl(v, b, w));
            let (y1, y2) = dr(v, b, w);
            let (r1, r2) = prod(&x1, &x2, &y1, &y2);
            if !(self.word_equal(&l1, &r1).ok()? && self.word_equal(&l2, &r2).ok()?) {
                let lw = [l1.as_slice(), l2.as_slice()].concat();
                let rw = [r1.as_slice(), r2.as_slice()].concat();
                return Some(self.witness(&[u, a, v, b, w], &lw, &rw));
            }
            None
        });
        axioms.push(ConditionReport::from_witnesses("S_DxS_matched_pair", ws, cap));

        // (S⋈S, S) matched pair: ^w(u,a) = (^w u, ^{w^u}a); w^{(u,a)} = w^{ua}
        let el = |w: &Word, u: &Word, a: &Word| -> (Word, Word) {
            (
                self.act_left(w, u),
                self.act_left(&self.act_right(w, u), a),
            )
        };
        let er = |w: &Word, u: &Word, a: &Word| -> Word {
            self.act_right(w, &[u.as_slice(), a.as_slice()].concat())
        };
        let ws = par::collect_some(tuples, |((u, a), (v, b), w)| {
            // MR1: w^{(u,a)(v,b)} = (w^{(u,a)})^{(v,b)}
            let (pu, pa) = prod(u, a, v, b);
            let lhs = er(w, &pu, &pa);
            let rhs = er(&er(w, u, a), v, b);
            if !self.word_equal(&lhs, &rhs).ok()? {
                return Some(self.witness(&[w, u, a, v, b], &lhs, &rhs));
            }
            // ML2: ^w((u,a)(v,b)) = ^w(u,a) . ^{w^{(u,a)}}(v,b)
            let (l1, l2) = el(w, &pu, &pa);
            let (x1, x2) = el(w, u, a);
            let (y1, y2) = el(&er(w, u, a), v, b);
            let (r1, r2) = prod(&x1, &x2, &y1, &y2);
            if !(self.word_equal(&l1, &r1).ok()? && self.word_equal(&l2, &r2).ok()?) {
                let lw = [l1.as_slice(), l2.as_slice()].concat();
                let rw = [r1.as_slice(), r2.as_slice()].concat();
                return Some(self.witness(&[w, u, a, v, b], &lw, &rw));
            }
            None
        });
        axioms.push(ConditionReport::from_witnesses("DxS_S_matched_pair", ws, cap));

        // agreement of the two iterated products on S x S x S
        type Triple = (Word, Word, Word);
        let mut triples6: Vec<(Triple, Triple)> = Vec::new();
        let flat: Vec<(Word, Word, Word)> = {
            let mut v = Vec::new();
            for d1 in 0..=n {
                for d2 in 0..=(n - d1) {
                    for d3 in 0..=(n - d1 - d2) {
                        for a in self.reps(d1) {
                            for b in self.reps(d2) {
                                for c in self.reps(d3) {
                                    v.push((a.clone(), b.clone(), c.clone()));
                                }
                            }
                        }
                    }
                }
            }
            v
        };
        for t1 in &flat {
            for t2 in &flat {
                let deg = t1.0.len() + t1.1.len() + t1.2.len() + t2.0.len() + t2.1.len() + t2.2.len();
                if deg <= n {
                    triples6.push((t1.clone(), t2.clone()));
                }
            }
        }
        let ws = par::collect_some(triples6, |((u1, a1, v1), (u2, a2, v2))| {
            // ((u1,a1),v1) . ((u2,a2),v2) in (S⋈S)⋈S
            let (m1, m2) = el(v1, u2, a2); // ^{v1}(u2,a2)
            let (p1, p2) = prod(u1, a1, &m1, &m2);
            let p3 = [er(v1, u2, a2), v2.clone()].concat();
            // (u1,(a1,v1)) . (u2,(a2,v2)) in S⋈(S⋈S)
            let q1 = [u1.as_slice(), &dl(a1, v1, u2)].concat();
            let (t1, t2) = dr(a1, v1, u2); // (a1,v1)^{u2}
            let (q2, q3) = prod(&t1, &t2, a2, v2);
            for (lhs, rhs) in [(&p1, &q1), (&p2, &q2), (&p3, &q3)] {
                match self.word_equal(lhs, rhs) {
                    Ok(true) => {}
                    _ => return Some(self.witness(&[u1, a1, v1, u2, a2, v2], lhs, rhs)),
                }
            }
            None
        });
        axioms.push(ConditionReport::from_witnesses("iterated_products_agree", ws, cap));

        Ok(MatchedPairReport {
            base_braided: self.braided,
            axioms,
        })
    }
}

#[allow(clippy::needless_range_loop)]
fn build_stratum(base: &QuadraticSet, acts: &LetterActions, degree: usize) -> Stratum {
    let n = base.size();
    let count = n.pow(degree as u32);
    let mut uf = UnionFind::new(count);
    if degree >= 2 {
        let mut word = vec![0u16; degree];
        for rank in 0..count {
            let mut k = rank;
            for slot in word.iter_mut().rev() {
                *slot = (k % n) as u16;
                k /= n;
            }
            // union with every single replacement image; symmetric closure
            // of these edges is exactly the orbit relation
            for i in 0..degree - 1 {
                let (x, y) = (word[i] as usize, word[i + 1] as usize);
                let (u, v) = (acts.left[x][y], acts.right[x][y]);
                let stride = n.pow((degree - 2 - i) as u32);
                let old = (word[i] as usize) * n * stride + (word[i + 1] as usize) * stride;
                let new = (u as usize) * n * stride + (v as usize) * stride;
                let other = rank - old + new;
                uf.union(rank, other);
            }
        }
    }
    // group members per root, in lexicographic (= rank) order
    let mut root_to_class: HashMap<usize, u32> = HashMap::new();
    let mut classes: Vec<CongruenceClass> = Vec::new();
    let mut class_of = vec![0u32; count];
    for rank in 0..count {
        let root = uf.find(rank);
        let id = *root_to_class.entry(root).or_insert_with(|| {
            classes.push(CongruenceClass {
                degree,
                members: Vec::new(),
                canonical: Vec::new(),
            });
            (classes.len() - 1) as u32
        });
        class_of[rank] = id;
        let mut w = vec![ElementId(0); degree];
        let mut k = rank;
        for slot in w.iter_mut().rev() {
            *slot = ElementId((k % n) as u16);
            k /= n;
        }
        classes[id as usize].members.push(w);
    }
    for c in classes.iter_mut() {
        c.canonical = c.members[0].clone();
    }
    Stratum { class_of, classes }
}


fn replaced(base: &QuadraticSet, w: &[ElementId], i: usize) -> Word {
    let mut out = w.to_vec();
    let (u, v) = base.apply_r(w[i], w[i + 1]);
    out[i] = u;
    out[i + 1] = v;
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A double cross product `S ⋈ T` on normal forms `(u, a)` with the
/// product `(u, a)(v, b) = (u . ^a v, a^v . b)`, for externally supplied
/// mixed letter actions.
pub struct DoubleProduct<'a> {
    pub s: &'a TruncatedMonoid,
    pub t: &'a TruncatedMonoid,
    pub actions: LetterActions,
}

impl<'a> DoubleProduct<'a> {
    /// Verifies the matched-pair axioms for the mixed actions and the
    /// associativity of the product on all normal-form triples of total
    /// degree within `max_degree`; the first violated identity aborts the
    /// construction.
    pub fn build(
        s: &'a TruncatedMonoid,
        t: &'a TruncatedMonoid,
        actions: LetterActions,
        max_degree: usize,
    ) -> Result<Self> {
        let dp = DoubleProduct { s, t, actions };
        dp.verify(max_degree)?;
        Ok(dp)
    }

    pub fn act_left(&self, a: &[ElementId], u: &[ElementId]) -> Word {
        act_left_with(&self.actions.left, &self.actions.right, a, u)
    }

    pub fn act_right(&self, a: &[ElementId], u: &[ElementId]) -> Word {
        act_right_with(&self.actions.left, &self.actions.right, a, u)
    }

    pub fn product(&self, x: (&Word, &Word), y: (&Word, &Word)) -> (Word, Word) {
        (
            [x.0.as_slice(), &self.act_left(x.1, y.0)].concat(),
            [self.act_right(x.1, y.0), y.1.clone()].concat(),
        )
    }

    fn verify(&self, max_degree: usize) -> Result<()> {
        let n = max_degree;
        // the extended actions must descend to congruence classes: every
        // single replacement, on either side of either action, must keep
        // the image in the same class
        for da in 0..=n.min(self.t.max_degree()) {
            for du in 0..=(n - da).min(self.s.max_degree()) {
                for a in self.t.words_at(da) {
                    for u in self.s.words_at(du) {
                        for i in 0..du.saturating_sub(1) {
                            let u2 = replaced(self.s.base(), &u, i);
                            if !self.s.word_equal(&self.act_left(&a, &u), &self.act_left(&a, &u2))?
                                || !self.t.word_equal(&self.act_right(&a, &u), &self.act_right(&a, &u2))?
                            {
                                return Err(Error::AxiomViolation(format!(
                                    "action not constant on the class of {}",
                                    word_str(self.s.base(), &u)
                                )));
                            }
                        }
                        for i in 0..da.saturating_sub(1) {
                            let a2 = replaced(self.t.base(), &a, i);
                            if !self.s.word_equal(&self.act_left(&a, &u), &self.act_left(&a2, &u))?
                                || !self.t.word_equal(&self.act_right(&a, &u), &self.act_right(&a2, &u))?
                            {
                                return Err(Error::AxiomViolation(format!(
                                    "actors {} and {} in one class act differently",
                                    word_str(self.t.base(), &a),
                                    word_str(self.t.base(), &a2)
                                )));
                            }
                        }
                    }
                }
            }
        }
        // mixed matched-pair identities (free-level ML1/MR1 shapes descend
        // to classes only if these hold), walked by degree split so the
        // work stays proportional to the tuples actually in range
        for (da, db, du) in degree_splits3(n, self.t.max_degree(), self.t.max_degree(), self.s.max_degree()) {
            for a in self.t.reps(da) {
                for b in self.t.reps(db) {
                    for u in self.s.reps(du) {
                        let ab = [a.as_slice(), b.as_slice()].concat();
                        let lhs = self.act_left(&ab, &u);
                        let rhs = self.act_left(&a, &self.act_left(&b, &u));
                        if !self.s.word_equal(&lhs, &rhs)? {
                            return Err(Error::AxiomViolation(format!(
                                "ML1 fails at ({}, {}, {})",
                                word_str(self.t.base(), &a),
                                word_str(self.t.base(), &b),
                                word_str(self.s.base(), &u)
                            )));
                        }
                        let lhs = self.act_right(&ab, &u);
                        let rhs = [
                            self.act_right(&a, &self.act_left(&b, &u)),
                            self.act_right(&b, &u),
                        ]
                        .concat();
                        if !self.t.word_equal(&lhs, &rhs)? {
                            return Err(Error::AxiomViolation(format!(
                                "MR2 fails at ({}, {}, {})",
                                word_str(self.t.base(), &a),
                                word_str(self.t.base(), &b),
                                word_str(self.s.base(), &u)
                            )));
                        }
                    }
                }
            }
        }
        for (da, du, dv) in degree_splits3(n, self.t.max_degree(), self.s.max_degree(), self.s.max_degree()) {
            for a in self.t.reps(da) {
                for u in self.s.reps(du) {
                    for v in self.s.reps(dv) {
                        let uv = [u.as_slice(), v.as_slice()].concat();
                        let lhs = self.act_right(&a, &uv);
                        let rhs = self.act_right(&self.act_right(&a, &u), &v);
                        if !self.t.word_equal(&lhs, &rhs)? {
                            return Err(Error::AxiomViolation(format!(
                                "MR1 fails at ({}, {}, {})",
                                word_str(self.t.base(), &a),
                                word_str(self.s.base(), &u),
                                word_str(self.s.base(), &v)
                            )));
                        }
                        let lhs = self.act_left(&a, &uv);
                        let rhs = [
                            self.act_left(&a, &u),
                            self.act_left(&self.act_right(&a, &u), &v),
                        ]
                        .concat();
                        if !self.s.word_equal(&lhs, &rhs)? {
                            return Err(Error::AxiomViolation(format!(
                                "ML2 fails at ({}, {}, {})",
                                word_str(self.t.base(), &a),
                                word_str(self.s.base(), &u),
                                word_str(self.s.base(), &v)
                            )));
                        }
                    }
                }
            }
        }
        // associativity of the double-product on bounded normal-form
        // triples, iterated per degree split
        let buckets = self.pairs_by_total_degree(n);
        for (d1, d2, d3) in degree_splits3(n, n, n, n) {
            for (u, a) in &buckets[d1] {
                for (v, b) in &buckets[d2] {
                    for (w, c) in &buckets[d3] {
                    let left = {
                        let p = self.product((u, a), (v, b));
                        self.product((&p.0, &p.1), (w, c))
                    };
                    let right = {
                        let q = self.product((v, b), (w, c));
                        self.product((u, a), (&q.0, &q.1))
                    };
                    if !(self.s.word_equal(&left.0, &right.0)? && self.t.word_equal(&left.1, &right.1)?) {
                        return Err(Error::AxiomViolation(format!(
                            "associativity fails at (({}, {}), ({}, {}), ({}, {}))",
                            word_str(self.s.base(), u),
                            word_str(self.t.base(), a),
                            word_str(self.s.base(), v),
                            word_str(self.t.base(), b),
                            word_str(self.s.base(), w),
                            word_str(self.t.base(), c)
                        )));
                    }
                    }
                }
            }
        }
        Ok(())
    }

    /// Class-representative normal forms `(u, a)` grouped by total degree
    /// `|u| + |a|`, so triple loops can walk exact degree splits.
    fn pairs_by_total_degree(&self, n: usize) -> Vec<Vec<(Word, Word)>> {
        let mut out: Vec<Vec<(Word, Word)>> = vec![Vec::new(); n + 1];
        for du in 0..=n.min(self.s.max_degree()) {
            for da in 0..=(n - du).min(self.t.max_degree()) {
                for u in self.s.reps(du) {
                    for a in self.t.reps(da) {
                        out[du + da].push((u.clone(), a));
                    }
                }
            }
        }
        out
    }
}

/// All `(d1, d2, d3)` with `d1 + d2 + d3 <= n` within the per-slot caps.
fn degree_splits3(n: usize, c1: usize, c2: usize, c3: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for d1 in 0..=n.min(c1) {
        for d2 in 0..=(n - d1).min(c2) {
            for d3 in 0..=(n - d1 - d2).min(c3) {
                out.push((d1, d2, d3));
            }
        }
    }
    out
}
