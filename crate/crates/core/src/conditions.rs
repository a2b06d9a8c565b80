//! Checkers for the named conditions on a quadratic set (l1, r1, lr3, the
//! invariance conditions l2/r2, cyclic conditions, lri, cycle-set
//! conditions and the YBE itself), the full classification profile, and
//! executable suites for the equivalence theorems relating them.
//!
//! The suites never assume a theorem: both sides of every biconditional
//! are evaluated independently on the given set, and a clause failing on
//! an input whose hypotheses hold is reported as a hard failure.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::monoid::TruncatedMonoid;
use crate::qset::{ElementId, QuadraticSet, PREDICATE_NAMES};
use crate::report::{CheckOptions, ClauseReport, ConditionReport, SuiteReport, Witness};

/// The closed set of named conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionId {
    L1,
    R1,
    Lr3,
    L2,
    R2,
    Cl1,
    Cl2,
    Cr1,
    Cr2,
    Lri,
    Csl,
    Csr,
    WeakCyclic,
    Cyclic,
    Ybe,
}

pub const CONDITION_IDS: [ConditionId; 15] = [
    ConditionId::L1,
    ConditionId::R1,
    ConditionId::Lr3,
    ConditionId::L2,
    ConditionId::R2,
    ConditionId::Cl1,
    ConditionId::Cl2,
    ConditionId::Cr1,
    ConditionId::Cr2,
    ConditionId::Lri,
    ConditionId::Csl,
    ConditionId::Csr,
    ConditionId::WeakCyclic,
    ConditionId::Cyclic,
    ConditionId::Ybe,
];

impl ConditionId {
    pub fn tag(self) -> &'static str {
        match self {
            ConditionId::L1 => "l1",
            ConditionId::R1 => "r1",
            ConditionId::Lr3 => "lr3",
            ConditionId::L2 => "l2",
            ConditionId::R2 => "r2",
            ConditionId::Cl1 => "cl1",
            ConditionId::Cl2 => "cl2",
            ConditionId::Cr1 => "cr1",
            ConditionId::Cr2 => "cr2",
            ConditionId::Lri => "lri",
            ConditionId::Csl => "csl",
            ConditionId::Csr => "csr",
            ConditionId::WeakCyclic => "weak_cyclic",
            ConditionId::Cyclic => "cyclic",
            ConditionId::Ybe => "ybe",
        }
    }

    pub fn parse(s: &str) -> Option<ConditionId> {
        CONDITION_IDS.iter().copied().find(|c| c.tag() == s)
    }

    fn arity(self) -> usize {
        match self {
            ConditionId::Cl1
            | ConditionId::Cl2
            | ConditionId::Cr1
            | ConditionId::Cr2
            | ConditionId::Lri => 2,
            _ => 3,
        }
    }
}

/// A single triple instance of a three-variable condition.
pub type LocalTriple = (ElementId, ElementId, ElementId);

fn fmt_pair(qs: &QuadraticSet, p: (ElementId, ElementId)) -> String {
    format!("({}, {})", qs.label(p.0), qs.label(p.1))
}

fn fmt_triple(qs: &QuadraticSet, t: (ElementId, ElementId, ElementId)) -> String {
    format!("({}, {}, {})", qs.label(t.0), qs.label(t.1), qs.label(t.2))
}

fn r12(
    qs: &QuadraticSet,
    (x, y, z): (ElementId, ElementId, ElementId),
) -> (ElementId, ElementId, ElementId) {
    let (u, v) = qs.apply_r(x, y);
    (u, v, z)
}

fn r23(
    qs: &QuadraticSet,
    (x, y, z): (ElementId, ElementId, ElementId),
) -> (ElementId, ElementId, ElementId) {
    let (u, v) = qs.apply_r(y, z);
    (x, u, v)
}

pub(crate) fn ybe_sides(
    qs: &QuadraticSet,
    t: (ElementId, ElementId, ElementId),
) -> (
    (ElementId, ElementId, ElementId),
    (ElementId, ElementId, ElementId),
) {
    let lhs = r12(qs, r23(qs, r12(qs, t)));
    let rhs = r23(qs, r12(qs, r23(qs, t)));
    (lhs, rhs)
}

/// Evaluates one instance of a three-variable condition; for `ybe` it
/// compares the two composites at the given triple.
pub fn check_local(qs: &QuadraticSet, cond: ConditionId, t: LocalTriple) -> bool {
    local_violation(qs, cond, t).is_none()
}

/// When the instance fails, the rendered (lhs, rhs) values.
fn local_violation(qs: &QuadraticSet, cond: ConditionId, t: LocalTriple) -> Option<(String, String)> {
    let l = |a, b| qs.left_action(a, b);
    let r = |a, b| qs.right_action(a, b);
    let (x, y, z) = t;
    let mismatch_el = |lhs: ElementId, rhs: ElementId| {
        if lhs == rhs {
            None
        } else {
            Some((qs.label(lhs).to_string(), qs.label(rhs).to_string()))
        }
    };
    let mismatch_pair = |lhs: (ElementId, ElementId), rhs: (ElementId, ElementId)| {
        if lhs == rhs {
            None
        } else {
            Some((fmt_pair(qs, lhs), fmt_pair(qs, rhs)))
        }
    };
    match cond {
        ConditionId::L1 => mismatch_el(l(x, l(y, z)), l(l(x, y), l(r(x, y), z))),
        ConditionId::R1 => mismatch_el(r(r(x, y), z), r(r(x, l(y, z)), r(y, z))),
        ConditionId::Lr3 => mismatch_el(r(l(x, y), l(r(x, y), z)), l(r(x, l(y, z)), r(y, z))),
        ConditionId::L2 => mismatch_pair(
            qs.apply_r(l(x, y), l(r(x, y), z)),
            (l(x, l(y, z)), l(r(x, l(y, z)), r(y, z))),
        ),
        ConditionId::R2 => mismatch_pair(
            qs.apply_r(r(x, l(y, z)), r(y, z)),
            (r(l(x, y), l(r(x, y), z)), r(r(x, y), z)),
        ),
        ConditionId::Ybe => {
            let (lhs, rhs) = ybe_sides(qs, t);
            if lhs == rhs {
                None
            } else {
                Some((fmt_triple(qs, lhs), fmt_triple(qs, rhs)))
            }
        }
        // two-variable conditions ignore z
        ConditionId::Cl1 => mismatch_el(l(r(y, x), x), l(y, x)),
        ConditionId::Cr1 => mismatch_el(r(x, l(x, y)), r(x, y)),
        ConditionId::Cl2 => mismatch_el(l(l(x, y), x), l(y, x)),
        ConditionId::Cr2 => mismatch_el(r(x, r(y, x)), r(x, y)),
        ConditionId::Lri => {
            let a = r(l(x, y), x);
            if a != y {
                return Some((
                    format!("({}>{})^{} = {}", qs.label(x), qs.label(y), qs.label(x), qs.label(a)),
                    qs.label(y).to_string(),
                ));
            }
            let b = l(x, r(y, x));
            mismatch_el(b, y)
        }
        ConditionId::Csl => mismatch_el(l(l(y, z), l(y, x)), l(l(z, y), l(z, x))),
        ConditionId::Csr => mismatch_el(r(r(x, y), r(z, y)), r(r(x, z), r(y, z))),
        // composites fall back to their first violated part
        ConditionId::WeakCyclic => local_violation(qs, ConditionId::Cl1, t)
            .or_else(|| local_violation(qs, ConditionId::Cr1, t)),
        ConditionId::Cyclic => [ConditionId::Cl1, ConditionId::Cl2, ConditionId::Cr1, ConditionId::Cr2]
            .into_iter()
            .find_map(|c| local_violation(qs, c, t)),
    }
}

/// Exhaustively checks a condition over all required tuples.
pub fn check_condition(qs: &QuadraticSet, cond: ConditionId) -> ConditionReport {
    check_condition_with(qs, cond, CheckOptions::default())
}

pub fn check_condition_with(qs: &QuadraticSet, cond: ConditionId, opts: CheckOptions) -> ConditionReport {
    let cap = opts.witness_cap;
    match cond {
        ConditionId::WeakCyclic => {
            return conjunction(qs, cond.tag(), &[ConditionId::Cl1, ConditionId::Cr1], opts)
        }
        ConditionId::Cyclic => {
            return conjunction(
                qs,
                cond.tag(),
                &[ConditionId::Cl1, ConditionId::Cl2, ConditionId::Cr1, ConditionId::Cr2],
                opts,
            )
        }
        _ => {}
    }
    let mut ws: Vec<Witness> = Vec::new();
    if cond.arity() == 2 {
        'outer2: for x in qs.elements() {
            for y in qs.elements() {
                if let Some((lhs, rhs)) = local_violation(qs, cond, (x, y, x)) {
                    ws.push(Witness {
                        tuple: vec![qs.label(x).to_string(), qs.label(y).to_string()],
                        lhs,
                        rhs,
                    });
                    if ws.len() >= cap {
                        break 'outer2;
                    }
                }
            }
        }
    } else {
        'outer3: for x in qs.elements() {
            for y in qs.elements() {
                for z in qs.elements() {
                    if let Some((lhs, rhs)) = local_violation(qs, cond, (x, y, z)) {
                        ws.push(Witness {
                            tuple: vec![
                                qs.label(x).to_string(),
                                qs.label(y).to_string(),
                                qs.label(z).to_string(),
                            ],
                            lhs,
                            rhs,
                        });
                        if ws.len() >= cap {
                            break 'outer3;
                        }
                    }
                }
            }
        }
    }
    ConditionReport::from_witnesses(cond.tag(), ws, cap)
}

fn conjunction(qs: &QuadraticSet, name: &str, parts: &[ConditionId], opts: CheckOptions) -> ConditionReport {
    let mut ws = Vec::new();
    for &p in parts {
        let rep = check_condition_with(qs, p, opts);
        for mut w in rep.witnesses {
            w.lhs = format!("[{}] {}", p.tag(), w.lhs);
            ws.push(w);
        }
    }
    ConditionReport::from_witnesses(name, ws, opts.witness_cap)
}

pub fn holds(qs: &QuadraticSet, cond: ConditionId) -> bool {
    check_condition(qs, cond).holds
}

/// The full profile: every structural predicate and every named condition.
#[derive(Debug, Clone)]
pub struct Profile {
    pub name: String,
    pub size: usize,
    pub predicates: Vec<ConditionReport>,
    pub conditions: Vec<ConditionReport>,
}

impl Profile {
    pub fn get(&self, name: &str) -> Option<&ConditionReport> {
        self.predicates
            .iter()
            .chain(self.conditions.iter())
            .find(|r| r.name == name)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.get(name).map(|r| r.holds).unwrap_or(false)
    }

    /// Canonical pretty-printed JSON, byte-stable for golden tests.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serialization")
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("name", &self.name)?;
        map.serialize_entry("size", &self.size)?;
        map.serialize_entry("predicates", &OrderedReports(&self.predicates))?;
        map.serialize_entry("conditions", &OrderedReports(&self.conditions))?;
        map.end()
    }
}

struct OrderedReports<'a>(&'a [ConditionReport]);

impl Serialize for OrderedReports<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for rep in self.0 {
            map.serialize_entry(&rep.name, &ReportBody(rep))?;
        }
        map.end()
    }
}

struct ReportBody<'a>(&'a ConditionReport);

impl Serialize for ReportBody<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = 1 + usize::from(!self.0.witnesses.is_empty()) + usize::from(self.0.skipped.is_some());
        let mut map = serializer.serialize_map(Some(n))?;
        map.serialize_entry("holds", &self.0.holds)?;
        if !self.0.witnesses.is_empty() {
            map.serialize_entry("witnesses", &self.0.witnesses)?;
        }
        if let Some(s) = &self.0.skipped {
            map.serialize_entry("skipped", s)?;
        }
        map.end()
    }
}

/// Evaluates every predicate and condition in one deterministic pass.
pub fn classify(qs: &QuadraticSet) -> Profile {
    classify_with(qs, CheckOptions::default())
}

pub fn classify_with(qs: &QuadraticSet, opts: CheckOptions) -> Profile {
    Profile {
        name: qs.name().to_string(),
        size: qs.size(),
        predicates: PREDICATE_NAMES
            .iter()
            .map(|p| qs.predicate_with(p, opts))
            .collect(),
        conditions: CONDITION_IDS
            .iter()
            .map(|&c| check_condition_with(qs, c, opts))
            .collect(),
    }
}

/// The executable equivalence/implication suites of the theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteId {
    LemmaYbe,
    L2Decomposition,
    QuantumBinomial,
    LriTwoOfThree,
    CyclicEquivalenceUnderLri,
    SquarefreeImplications,
    CslSymmetric,
    CslL1Identities,
    CancellativeLemma,
}

pub const SUITE_IDS: [SuiteId; 9] = [
    SuiteId::LemmaYbe,
    SuiteId::L2Decomposition,
    SuiteId::QuantumBinomial,
    SuiteId::LriTwoOfThree,
    SuiteId::CyclicEquivalenceUnderLri,
    SuiteId::SquarefreeImplications,
    SuiteId::CslSymmetric,
    SuiteId::CslL1Identities,
    SuiteId::CancellativeLemma,
];

impl SuiteId {
    pub fn tag(self) -> &'static str {
        match self {
            SuiteId::LemmaYbe => "lemma_ybe",
            SuiteId::L2Decomposition => "l2_decomposition",
            SuiteId::QuantumBinomial => "quantum_binomial",
            SuiteId::LriTwoOfThree => "lri_two_of_three",
            SuiteId::CyclicEquivalenceUnderLri => "cyclic_equivalence_under_lri",
            SuiteId::SquarefreeImplications => "squarefree_implications",
            SuiteId::CslSymmetric => "csl_symmetric",
            SuiteId::CslL1Identities => "csl_l1_identities",
            SuiteId::CancellativeLemma => "cancellative_lemma",
        }
    }

    pub fn parse(s: &str) -> Option<SuiteId> {
        SUITE_IDS.iter().copied().find(|c| c.tag() == s)
    }
}

fn implies(name: &str, a: bool, b: bool) -> ClauseReport {
    ClauseReport::with_detail(name, !a || b, format!("{a} => {b}"))
}

fn iff(name: &str, a: bool, b: bool) -> ClauseReport {
    ClauseReport::with_detail(name, a == b, format!("{a} <=> {b}"))
}

/// Runs one equivalence suite on the set, checking hypotheses first.
pub fn equivalence_suite(qs: &QuadraticSet, suite: SuiteId) -> SuiteReport {
    use ConditionId::*;
    let c = |id| holds(qs, id);
    match suite {
        SuiteId::LemmaYbe => {
            let clauses = vec![iff("ybe <=> l1 & r1 & lr3", c(Ybe), c(L1) && c(R1) && c(Lr3))];
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
        SuiteId::L2Decomposition => {
            let clauses = vec![
                iff("l2 <=> l1 & lr3", c(L2), c(L1) && c(Lr3)),
                iff("r2 <=> r1 & lr3", c(R2), c(R1) && c(Lr3)),
            ];
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
        SuiteId::QuantumBinomial => {
            let hyp = qs.is_nondegenerate() && qs.is_involutive() && qs.is_square_free();
            if !hyp {
                return SuiteReport::new(
                    suite.tag(),
                    false,
                    vec!["requires a quantum binomial set (nondegenerate, involutive, square-free)".into()],
                    vec![],
                );
            }
            let vals = [c(Ybe), c(L1), c(L2), c(R1), c(R2), c(Lr3), c(Csl)];
            let all_equal = vals.iter().all(|&v| v == vals[0]);
            let mut clauses = vec![ClauseReport::with_detail(
                "ybe <=> l1 <=> l2 <=> r1 <=> r2 <=> lr3 <=> csl",
                all_equal,
                format!("{vals:?}"),
            )];
            clauses.push(implies(
                "solution => cyclic & lri",
                vals[0] && all_equal,
                c(Cyclic) && c(Lri),
            ));
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
        SuiteId::LriTwoOfThree => {
            let a = qs.is_involutive();
            let b = qs.is_nondegenerate() && c(Cyclic);
            let l = c(Lri);
            let clauses = vec![
                implies("involutive & (nondeg & cyclic) => lri", a && b, l),
                implies("(nondeg & cyclic) & lri => involutive", b && l, a),
                implies("involutive & lri => nondeg & cyclic", a && l, b),
            ];
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
        SuiteId::CyclicEquivalenceUnderLri => {
            if !c(Lri) {
                return SuiteReport::new(suite.tag(), false, vec!["requires lri".into()], vec![]);
            }
            let vals = [c(Cl1), c(Cl2), c(Cr1), c(Cr2)];
            let all_equal = vals.iter().all(|&v| v == vals[0]);
            let clauses = vec![
                ClauseReport::with_detail("cl1 <=> cl2 <=> cr1 <=> cr2", all_equal, format!("{vals:?}")),
                iff("each <=> cyclic", vals[0] && all_equal, c(Cyclic)),
            ];
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
        SuiteId::SquarefreeImplications => {
            let hyp = qs.is_nondegenerate() && qs.is_square_free();
            if !hyp {
                return SuiteReport::new(
                    suite.tag(),
                    false,
                    vec!["requires nondegenerate & square-free".into()],
                    vec![],
                );
            }
            let mut clauses = vec![
                implies("l1 => cl1", c(L1), c(Cl1)),
                implies("r1 => cr1", c(R1), c(Cr1)),
                implies("lr3 => cl1 & cr1", c(Lr3), c(Cl1) && c(Cr1)),
                implies("csl => cl2", c(Csl), c(Cl2)),
                implies("csr => cr2", c(Csr), c(Cr2)),
            ];
            let any = c(L1) || c(R1) || c(Lr3) || c(Csl) || c(Csr);
            if any {
                clauses.push(iff("involutive <=> lri", qs.is_involutive(), c(Lri)));
            }
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
        SuiteId::CslSymmetric => {
            let hyp = qs.is_nondegenerate() && qs.is_involutive() && qs.is_square_free();
            if !hyp {
                return SuiteReport::new(
                    suite.tag(),
                    false,
                    vec!["requires a quantum binomial set".into()],
                    vec![],
                );
            }
            let symmetric = c(Ybe); // involutive already holds
            let mut clauses = vec![iff("symmetric <=> csl", symmetric, c(Csl))];
            if symmetric {
                clauses.push(ClauseReport::new("symmetric => cyclic & lri", c(Cyclic) && c(Lri)));
            }
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
        SuiteId::CslL1Identities => {
            let hyp = qs.is_involutive() && c(Lri);
            if !hyp {
                return SuiteReport::new(
                    suite.tag(),
                    false,
                    vec!["requires involutive & lri".into()],
                    vec![],
                );
            }
            let mut clauses = vec![
                ClauseReport::new("nondegenerate & cyclic", qs.is_nondegenerate() && c(Cyclic)),
                iff("csl <=> l1", c(Csl), c(L1)),
            ];
            if c(Csl) {
                let l = |a, b| qs.left_action(a, b);
                let r = |a, b| qs.right_action(a, b);
                let mut ok = true;
                'outer: for x in qs.elements() {
                    for y in qs.elements() {
                        for z in qs.elements() {
                            // (x ▸ z)^y = ^{x^y}(z^{y^x}) and ^x(z^y) = (^{^y x}z)^{^x y}
                            let first = r(l(x, z), y) == l(r(x, y), r(z, r(y, x)));
                            let second = l(x, r(z, y)) == r(l(l(y, x), z), l(x, y));
                            if !first || !second {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
                clauses.push(ClauseReport::new("csl => twisted action identities", ok));
            }
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
        SuiteId::CancellativeLemma => {
            let two_canc = qs.predicate("2cancellative");
            if !two_canc.holds {
                return SuiteReport::new(
                    suite.tag(),
                    false,
                    vec!["requires a 2-cancellative set".into()],
                    vec![],
                );
            }
            let tm = match TruncatedMonoid::build(qs.clone(), 3) {
                Ok(tm) => tm,
                Err(e) => {
                    return SuiteReport::new(suite.tag(), false, vec![format!("monoid truncation failed: {e}")], vec![])
                }
            };
            let len3 = tm.cancellation_test(3).expect("degree 3 available");
            if !len3.holds {
                return SuiteReport::new(
                    suite.tag(),
                    false,
                    vec!["monoid lacks cancellation on monomials of length 3".into()],
                    vec![],
                );
            }
            let braided = c(Ybe);
            let mut clauses = vec![
                iff("l2 <=> r2", c(L2), c(R2)),
                iff("l2 <=> l1 & r1", c(L2), c(L1) && c(R1)),
                iff("l1 & r1 <=> braided", c(L1) && c(R1), braided),
            ];
            if qs.is_nondegenerate() && qs.is_involutive() {
                clauses.push(iff("l1 <=> r1", c(L1), c(R1)));
                clauses.push(iff("l1 <=> symmetric", c(L1), braided));
            }
            SuiteReport::new(suite.tag(), true, vec![], clauses)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;
    use crate::perm::Perm;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn rho_example() -> QuadraticSet {
        let lb = labels(&["x", "y", "z"]);
        let rho = parse_cycles("(x y z)", &lb).unwrap();
        QuadraticSet::permutational("rho_example", lb, &Perm::identity(3), &rho).unwrap()
    }

    /// The permutational set with L = (x z y), R = (x z): obeys l1 and r1
    /// but not the YBE.
    fn l1r1_example() -> QuadraticSet {
        let lb = labels(&["x", "y", "z"]);
        let g = parse_cycles("(x z y)", &lb).unwrap();
        let f = parse_cycles("(x z)", &lb).unwrap();
        QuadraticSet::permutational("l1r1_not_ybe", lb, &f, &g).unwrap()
    }

    #[test]
    fn trivial_satisfies_everything() {
        let qs = QuadraticSet::trivial("t", labels(&["a", "b"])).unwrap();
        for id in CONDITION_IDS {
            assert!(holds(&qs, id), "{} should hold", id.tag());
        }
    }

    #[test]
    fn rho_example_profile() {
        let qs = rho_example();
        assert!(holds(&qs, ConditionId::Ybe));
        assert!(holds(&qs, ConditionId::L1));
        assert!(holds(&qs, ConditionId::R1));
        assert!(holds(&qs, ConditionId::Cyclic));
        assert!(!holds(&qs, ConditionId::Lri));
        let profile = classify(&qs);
        assert!(profile.holds("ybe"));
        assert!(profile.holds("nondegenerate"));
        assert!(!profile.holds("2cancellative"));
        assert!(!profile.holds("involutive"));
    }

    #[test]
    fn l1r1_example_fails_ybe_at_xyz() {
        let qs = l1r1_example();
        assert!(holds(&qs, ConditionId::L1));
        assert!(holds(&qs, ConditionId::R1));
        let rep = check_condition(&qs, ConditionId::Ybe);
        assert!(!rep.holds);
        let (x, y, z) = (
            qs.element("x").unwrap(),
            qs.element("y").unwrap(),
            qs.element("z").unwrap(),
        );
        assert!(!check_local(&qs, ConditionId::Ybe, (x, y, z)));
        // worked orbit: xy -> xz under r
        assert_eq!(qs.apply_r(x, y), (x, z));
        let suite = equivalence_suite(&qs, SuiteId::LemmaYbe);
        assert!(suite.passed());
        assert!(!holds(&qs, ConditionId::Lr3));
    }

    #[test]
    fn local_checks_agree_with_global() {
        for qs in [
            rho_example(),
            l1r1_example(),
            QuadraticSet::trivial("t", labels(&["a", "b", "c"])).unwrap(),
            QuadraticSet::identity("i", labels(&["a", "b"])).unwrap(),
        ] {
            for cond in [ConditionId::L1, ConditionId::R1, ConditionId::Lr3, ConditionId::L2, ConditionId::R2, ConditionId::Ybe] {
                let global = holds(&qs, cond);
                let all_local = qs.elements().all(|x| {
                    qs.elements()
                        .all(|y| qs.elements().all(|z| check_local(&qs, cond, (x, y, z))))
                });
                assert_eq!(global, all_local, "{} on {}", cond.tag(), qs.name());
            }
        }
    }

    #[test]
    fn suites_run_on_catalog_shapes() {
        let qs = QuadraticSet::trivial("t", labels(&["a", "b"])).unwrap();
        for id in SUITE_IDS {
            let rep = equivalence_suite(&qs, id);
            assert_ne!(rep.verdict, crate::report::SuiteVerdict::Failed, "{}", id.tag());
        }
        // the permutational counterexample must not break any suite either
        let qs = l1r1_example();
        for id in SUITE_IDS {
            let rep = equivalence_suite(&qs, id);
            assert_ne!(rep.verdict, crate::report::SuiteVerdict::Failed, "{}", id.tag());
        }
    }
}
