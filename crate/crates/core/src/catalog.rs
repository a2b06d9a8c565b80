//! The built-in catalog of concrete solutions and extensions, with
//! pinned classification profiles for regression checking.
//!
//! Data note for the `sec5_*` entries: the 12-element set is pinned as
//! the unique lri completion `r(a, b) = (L_a(b), L_b^{-1}(a))` of its
//! twelve left-action permutations, where each of the three families
//! x1..x4, y1..y4, z1..z4 is shifted by its own index 4-cycle (cross
//! actions move indices, never families). This completion is square-free,
//! involutive and non-degenerate and reproduces the reference products
//! such as `r(x1, x2) = (x4, x3)`; unit tests pin a sample from every
//! family block. The extensions r1, r2, r3 are generated from their
//! ground-action documents with right actions completed by `R = L^{-1}`.

use std::collections::BTreeMap;

use crate::doc::{FamilyCandidate, FamilyDoc, FamilyFactor, PathOrInline, SolutionDoc};
use crate::error::{Error, Result};
use crate::extension::{build_extension, ExtensionSet, GroundActions};
use crate::perm::{format_cycles, parse_cycles, Perm};
use crate::qset::QuadraticSet;

/// One catalog entry: a key, a human description, and the pinned
/// classification profile in canonical JSON.
pub struct CatalogEntry {
    pub key: &'static str,
    pub description: &'static str,
    pub expected_profile: &'static str,
}

pub const KEYS: [&str; 14] = [
    "trivial_ab",
    "trivial_c",
    "trivial_cd",
    "identity_ab",
    "sec22_rho",
    "sec22_l1r1",
    "perm_sym_3",
    "invol_nonbraided_3",
    "sec4_identity_ext",
    "sec5_X",
    "sec5_Y",
    "sec5_Z1",
    "sec5_Z2",
    "sec5_Z3",
];

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            key: "trivial_ab",
            description: "trivial solution r(x, y) = (y, x) on {a, b}",
            expected_profile: include_str!("../../../data/profiles/trivial_ab.json"),
        },
        CatalogEntry {
            key: "trivial_c",
            description: "trivial solution on the singleton {c}",
            expected_profile: include_str!("../../../data/profiles/trivial_c.json"),
        },
        CatalogEntry {
            key: "trivial_cd",
            description: "trivial solution on {c, d}",
            expected_profile: include_str!("../../../data/profiles/trivial_cd.json"),
        },
        CatalogEntry {
            key: "identity_ab",
            description: "identity map on {a, b}: braided but degenerate",
            expected_profile: include_str!("../../../data/profiles/identity_ab.json"),
        },
        CatalogEntry {
            key: "sec22_rho",
            description: "r(a, b) = (rho(b), a) with rho = (x y z): braided, order 6, not 2-cancellative",
            expected_profile: include_str!("../../../data/profiles/sec22_rho.json"),
        },
        CatalogEntry {
            key: "sec22_l1r1",
            description: "permutational map with L = (x z y), R = (x z): obeys l1 and r1 but not the YBE",
            expected_profile: include_str!("../../../data/profiles/sec22_l1r1.json"),
        },
        CatalogEntry {
            key: "perm_sym_3",
            description: "permutational symmetric solution with g = (x y z), f = g^{-1}",
            expected_profile: include_str!("../../../data/profiles/perm_sym_3.json"),
        },
        CatalogEntry {
            key: "invol_nonbraided_3",
            description: "involutive nondegenerate (hence 2-cancellative) 3-element set that fails the YBE",
            expected_profile: include_str!("../../../data/profiles/invol_nonbraided_3.json"),
        },
        CatalogEntry {
            key: "sec4_identity_ext",
            description: "identity-glued union of trivial {a, b} and {c}: bijective extension that is not regular and fails the YBE",
            expected_profile: include_str!("../../../data/profiles/sec4_identity_ext.json"),
        },
        CatalogEntry {
            key: "sec5_X",
            description: "12-element square-free symmetric solution with three linked index-cycled families",
            expected_profile: include_str!("../../../data/profiles/sec5_X.json"),
        },
        CatalogEntry {
            key: "sec5_Y",
            description: "6-element square-free symmetric solution: two trivial 3-blocks exchanged by 3-cycles",
            expected_profile: include_str!("../../../data/profiles/sec5_Y.json"),
        },
        CatalogEntry {
            key: "sec5_Z1",
            description: "18-element extension r1 of sec5_X by sec5_Y (8-cycle gluing, opposite z-shifts)",
            expected_profile: include_str!("../../../data/profiles/sec5_Z1.json"),
        },
        CatalogEntry {
            key: "sec5_Z2",
            description: "18-element extension r2 of sec5_X by sec5_Y (two 4-cycles, half z-action)",
            expected_profile: include_str!("../../../data/profiles/sec5_Z2.json"),
        },
        CatalogEntry {
            key: "sec5_Z3",
            description: "18-element extension r3 of sec5_X by sec5_Y (transposition gluing; acts by automorphisms)",
            expected_profile: include_str!("../../../data/profiles/sec5_Z3.json"),
        },
    ]
}

pub fn entry(key: &str) -> Result<CatalogEntry> {
    entries()
        .into_iter()
        .find(|e| e.key == key)
        .ok_or_else(|| Error::UnknownLabel(format!("catalog key `{key}`")))
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// The 12-element carrier x1..x4, y1..y4, z1..z4.
fn sec5_x_labels() -> Vec<String> {
    let mut lb = numbered("x", 4);
    lb.extend(numbered("y", 4));
    lb.extend(numbered("z", 4));
    lb
}

fn sec5_y_labels() -> Vec<String> {
    let mut lb = numbered("a", 3);
    lb.extend(numbered("b", 3));
    lb
}

fn sec5_x() -> QuadraticSet {
    let lb = sec5_x_labels();
    let p = |s: &str| parse_cycles(s, &lb).expect("valid cycles");
    let sigma_tau = p("(y1 y2 y3 y4)(z1 z2 z3 z4)");
    let rho_tau_inv = p("(x1 x2 x3 x4)(z1 z4 z3 z2)");
    let rho_sigma = p("(x1 x2 x3 x4)(y1 y2 y3 y4)");
    let mut left = Vec::with_capacity(12);
    for i in 0..4 {
        let swap = if i % 2 == 0 { p("(x2 x4)") } else { p("(x1 x3)") };
        left.push(sigma_tau.compose(&swap));
    }
    for i in 0..4 {
        let swap = if i % 2 == 0 { p("(y2 y4)") } else { p("(y1 y3)") };
        left.push(rho_tau_inv.compose(&swap));
    }
    for i in 0..4 {
        let swap = if i % 2 == 0 { p("(z2 z4)") } else { p("(z1 z3)") };
        left.push(rho_sigma.compose(&swap));
    }
    QuadraticSet::from_left_actions("sec5_X", lb, &left).expect("valid table")
}

fn sec5_y() -> QuadraticSet {
    let lb = sec5_y_labels();
    let g = parse_cycles("(b1 b2 b3)", &lb).expect("valid cycles");
    let f = parse_cycles("(a1 a2 a3)", &lb).expect("valid cycles");
    let left: Vec<Perm> = (0..6).map(|i| if i < 3 { g.clone() } else { f.clone() }).collect();
    QuadraticSet::from_left_actions("sec5_Y", lb, &left).expect("valid table")
}

/// Ground-action cycle strings for the three extensions, in the
/// `L_<label>` shorthand with lri completion.
pub fn sec5_ground_actions(which: usize) -> BTreeMap<String, String> {
    let (on_x_a, on_x_b, on_y_xy, on_y_z): (&str, &str, &str, &str) = match which {
        1 => (
            "(x1 y1 x2 y2 x3 y3 x4 y4)(z1 z2 z3 z4)",
            "(x1 y1 x2 y2 x3 y3 x4 y4)(z1 z4 z3 z2)",
            "(a1 b1 a2 b2 a3 b3)",
            "(a1 a2 a3)(b1 b2 b3)",
        ),
        2 => (
            "(x1 y1 x3 y3)(x2 y2 x4 y4)(z1 z3)(z2 z4)",
            "(x1 y1 x3 y3)(x2 y2 x4 y4)",
            "(a1 b1)(a2 b2)(a3 b3)",
            "(a1 a3 a2)(b1 b3 b2)",
        ),
        3 => (
            "(x1 y1)(x2 y2)(x3 y3)(x4 y4)(z1 z2)(z3 z4)",
            "(x1 y1)(x2 y2)(x3 y3)(x4 y4)(z1 z2)(z3 z4)",
            "(b3 a3 b2 a2 b1 a1)",
            "()",
        ),
        _ => panic!("extension index must be 1, 2 or 3"),
    };
    let mut map = BTreeMap::new();
    for i in 1..=3 {
        map.insert(format!("L_a{i}"), on_x_a.to_string());
        map.insert(format!("L_b{i}"), on_x_b.to_string());
    }
    for j in 1..=4 {
        map.insert(format!("L_x{j}"), on_y_xy.to_string());
        map.insert(format!("L_y{j}"), on_y_xy.to_string());
        map.insert(format!("L_z{j}"), on_y_z.to_string());
    }
    map
}

fn sec5_extension(which: usize) -> Result<ExtensionSet> {
    let x = sec5_x();
    let y = sec5_y();
    let actions = sec5_ground_actions(which);
    let ground = crate::doc::ground_actions_from_cycles(&x, &y, &actions, true)?;
    let mut ext = build_extension(&x, &y, ground)?;
    ext.set_name(&format!("sec5_Z{which}"));
    Ok(ext)
}

/// A catalog payload: the solution itself, and the extension structure
/// when the entry is one.
pub struct CatalogPayload {
    pub qset: QuadraticSet,
    pub extension: Option<ExtensionSet>,
}

pub fn build(key: &str) -> Result<CatalogPayload> {
    let plain = |qs: QuadraticSet| CatalogPayload {
        qset: qs,
        extension: None,
    };
    Ok(match key {
        "trivial_ab" => plain(QuadraticSet::trivial("trivial_ab", labels(&["a", "b"]))?),
        "trivial_c" => plain(QuadraticSet::trivial("trivial_c", labels(&["c"]))?),
        "trivial_cd" => plain(QuadraticSet::trivial("trivial_cd", labels(&["c", "d"]))?),
        "identity_ab" => plain(QuadraticSet::identity("identity_ab", labels(&["a", "b"]))?),
        "sec22_rho" => {
            let lb = labels(&["x", "y", "z"]);
            let rho = parse_cycles("(x y z)", &lb)?;
            plain(QuadraticSet::permutational(
                "sec22_rho",
                lb,
                &Perm::identity(3),
                &rho,
            )?)
        }
        "sec22_l1r1" => {
            let lb = labels(&["x", "y", "z"]);
            let g = parse_cycles("(x z y)", &lb)?;
            let f = parse_cycles("(x z)", &lb)?;
            plain(QuadraticSet::permutational("sec22_l1r1", lb, &f, &g)?)
        }
        "perm_sym_3" => {
            let lb = labels(&["x", "y", "z"]);
            let g = parse_cycles("(x y z)", &lb)?;
            let f = g.inverse();
            plain(QuadraticSet::permutational("perm_sym_3", lb, &f, &g)?)
        }
        "invol_nonbraided_3" => {
            let lb = labels(&["x", "y", "z"]);
            let table_spec: [((u16, u16), (u16, u16)); 9] = [
                ((0, 0), (0, 0)),
                ((0, 1), (2, 0)),
                ((0, 2), (1, 1)),
                ((1, 0), (2, 2)),
                ((1, 1), (0, 2)),
                ((1, 2), (1, 2)),
                ((2, 0), (0, 1)),
                ((2, 1), (2, 1)),
                ((2, 2), (1, 0)),
            ];
            let table = table_spec
                .iter()
                .map(|&(_, (u, v))| (crate::qset::ElementId(u), crate::qset::ElementId(v)))
                .collect();
            plain(QuadraticSet::new("invol_nonbraided_3", lb, table)?)
        }
        "sec4_identity_ext" => {
            // trivial on {a, b} and on {c}, identity on mixed pairs:
            // a bijective extension without the regular shape
            let lb = labels(&["a", "b", "c"]);
            let qs = QuadraticSet::from_fn("sec4_identity_ext", lb, |x, y| {
                let both_x = x.0 < 2 && y.0 < 2;
                let both_y = x.0 == 2 && y.0 == 2;
                if both_x || both_y {
                    (y, x)
                } else {
                    (x, y)
                }
            })?;
            plain(qs)
        }
        "sec5_X" => plain(sec5_x()),
        "sec5_Y" => plain(sec5_y()),
        "sec5_Z1" | "sec5_Z2" | "sec5_Z3" => {
            let which = key.as_bytes()[key.len() - 1] - b'0';
            let ext = sec5_extension(which as usize)?;
            CatalogPayload {
                qset: ext.assembled().clone(),
                extension: Some(ext),
            }
        }
        other => return Err(Error::UnknownLabel(format!("catalog key `{other}`"))),
    })
}

/// Keys whose solution passes the YBE (used by the monoid-theorem sweeps).
pub fn braided_keys() -> Vec<&'static str> {
    KEYS.iter()
        .copied()
        .filter(|k| {
            let payload = build(k).expect("catalog entry builds");
            crate::conditions::holds(&payload.qset, crate::conditions::ConditionId::Ybe)
        })
        .collect()
}

/// The candidate-family document for extensions of `sec5_X` by `sec5_Y`:
/// admissible gluing actions for the x/y families, the paired z-actions,
/// and the return actions on the 6-element part. The Cartesian product of
/// the three factors is the documented search space.
pub fn sec5_family_doc() -> FamilyDoc {
    let xl = sec5_x_labels();
    let yl = sec5_y_labels();
    let px = |s: &str| parse_cycles(s, &xl).expect("valid cycles");
    let py = |s: &str| parse_cycles(s, &yl).expect("valid cycles");
    let fx = |p: &Perm| format_cycles(p, &xl);
    let fy = |p: &Perm| format_cycles(p, &yl);

    // gluing actions on x u y: the 8-cycle powers, the two 4-cycle pairs,
    // and the four transposition matchings
    let theta = px("(x1 y1 x2 y2 x3 y3 x4 y4)");
    let mut xy_parts: Vec<Perm> = vec![];
    for k in [1usize, 3, 5, 7] {
        let mut p = Perm::identity(12);
        for _ in 0..k {
            p = theta.compose(&p);
        }
        xy_parts.push(p);
    }
    let vartheta = px("(x1 y1 x3 y3)(x2 y2 x4 y4)");
    xy_parts.push(vartheta.clone());
    xy_parts.push(vartheta.inverse());
    let sigma = px("(y1 y2 y3 y4)");
    for i in 0..4usize {
        let mut s = Perm::identity(12);
        for _ in 0..i {
            s = sigma.compose(&s);
        }
        // (x_j sigma^i(y_j)) for all j
        let mut images: Vec<u16> = (0..12).collect();
        for j in 0..4u16 {
            let yj = s.apply(4 + j);
            images[j as usize] = yj;
            images[yj as usize] = j;
        }
        xy_parts.push(Perm::from_images(images).expect("involution"));
    }

    // paired z-actions (alpha part, beta part)
    let tau = px("(z1 z2 z3 z4)");
    let z_pairs: Vec<(Perm, Perm)> = vec![
        (tau.clone(), tau.inverse()),
        (tau.inverse(), tau.clone()),
        (px("(z1 z2)(z3 z4)"), px("(z1 z2)(z3 z4)")),
        (px("(z1 z4)(z2 z3)"), px("(z1 z4)(z2 z3)")),
        (px("(z1 z3)"), px("(z1 z3)")),
        (px("(z2 z4)"), px("(z2 z4)")),
        (px("(z1 z3)(z2 z4)"), Perm::identity(12)),
        (Perm::identity(12), px("(z1 z3)(z2 z4)")),
    ];

    let mut factor1 = Vec::new();
    for xy in &xy_parts {
        for (za, zb) in &z_pairs {
            let a_act = fx(&xy.compose(za));
            let b_act = fx(&xy.compose(zb));
            let mut cand: FamilyCandidate = BTreeMap::new();
            for i in 1..=3 {
                cand.insert(format!("a{i}"), a_act.clone());
                cand.insert(format!("b{i}"), b_act.clone());
            }
            factor1.push(cand);
        }
    }

    // return actions of the x/y families on the 6-element part
    let pi = py("(a1 b1 a2 b2 a3 b3)");
    let mut xy_on_y: Vec<Perm> = vec![];
    for k in [1usize, 3, 5] {
        let mut p = Perm::identity(6);
        for _ in 0..k {
            p = pi.compose(&p);
        }
        xy_on_y.push(p);
    }
    let g = py("(b1 b2 b3)");
    for k in 0..3usize {
        let mut gp = Perm::identity(6);
        for _ in 0..k {
            gp = g.compose(&gp);
        }
        let mut images: Vec<u16> = (0..6).collect();
        for i in 0..3u16 {
            let bi = gp.apply(3 + i);
            images[i as usize] = bi;
            images[bi as usize] = i;
        }
        xy_on_y.push(Perm::from_images(images).expect("involution"));
    }
    let mut factor2 = Vec::new();
    for p in &xy_on_y {
        let s = fy(p);
        let mut cand: FamilyCandidate = BTreeMap::new();
        for j in 1..=4 {
            cand.insert(format!("x{j}"), s.clone());
            cand.insert(format!("y{j}"), s.clone());
        }
        factor2.push(cand);
    }

    // return actions of the z family
    let fg = py("(a1 a2 a3)(b1 b2 b3)");
    let mut factor3 = Vec::new();
    for k in 0..3usize {
        let mut p = Perm::identity(6);
        for _ in 0..k {
            p = fg.compose(&p);
        }
        let s = fy(&p);
        let mut cand: FamilyCandidate = BTreeMap::new();
        for j in 1..=4 {
            cand.insert(format!("z{j}"), s.clone());
        }
        factor3.push(cand);
    }

    FamilyDoc {
        x_solution: PathOrInline::Inline(SolutionDoc::from_qset(&sec5_x())),
        y_solution: PathOrInline::Inline(SolutionDoc::from_qset(&sec5_y())),
        lri: true,
        factors: vec![
            FamilyFactor { candidates: factor1 },
            FamilyFactor { candidates: factor2 },
            FamilyFactor { candidates: factor3 },
        ],
    }
}

/// The ground actions of one named extension, for reuse in tests.
pub fn sec5_ground(which: usize) -> Result<GroundActions> {
    let x = sec5_x();
    let y = sec5_y();
    crate::doc::ground_actions_from_cycles(&x, &y, &sec5_ground_actions(which), true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_build() {
        for key in KEYS {
            let payload = build(key).unwrap();
            assert!(!payload.qset.labels().is_empty(), "{key}");
        }
    }

    #[test]
    fn sec5_x_matches_listed_products() {
        let x = sec5_x();
        let el = |s: &str| x.element(s).unwrap();
        // r(x1, x2) = (x4, x3) and friends
        assert_eq!(x.apply_r(el("x1"), el("x2")), (el("x4"), el("x3")));
        assert_eq!(x.apply_r(el("x1"), el("x4")), (el("x2"), el("x3")));
        assert_eq!(x.apply_r(el("x3"), el("x2")), (el("x4"), el("x1")));
        assert_eq!(x.apply_r(el("x1"), el("x3")), (el("x3"), el("x1")));
        assert_eq!(x.apply_r(el("y1"), el("y2")), (el("y4"), el("y3")));
        assert_eq!(x.apply_r(el("z3"), el("z4")), (el("z2"), el("z1")));
        // mixed families: r(x_i, y_j) = (y_{j+1}, x_{i-1}) etc.
        assert_eq!(x.apply_r(el("x1"), el("y2")), (el("y3"), el("x4")));
        assert_eq!(x.apply_r(el("y2"), el("z3")), (el("z2"), el("y1")));
        assert_eq!(x.apply_r(el("z2"), el("y3")), (el("y4"), el("z3")));
        assert!(x.is_square_free());
        assert!(x.is_involutive());
        assert!(x.is_nondegenerate());
    }

    #[test]
    fn sec5_extensions_build_as_regular() {
        for which in 1..=3 {
            let ext = sec5_extension(which).unwrap();
            assert_eq!(ext.assembled().size(), 18);
        }
    }

    #[test]
    fn sec5_r1_ground_values() {
        let ext = sec5_extension(1).unwrap();
        let z = ext.assembled();
        let el = |s: &str| z.element(s).unwrap();
        // a1 ◂ x1 = b3, and b3 ▸ z1 = z4 while a1 ▸ z1 = z2
        assert_eq!(z.right_action(el("a1"), el("x1")), el("b3"));
        assert_eq!(z.left_action(el("b3"), el("z1")), el("z4"));
        assert_eq!(z.left_action(el("a1"), el("z1")), el("z2"));
    }

    #[test]
    fn family_doc_has_documented_shape() {
        let doc = sec5_family_doc();
        assert_eq!(doc.factors[0].candidates.len(), 80);
        assert_eq!(doc.factors[1].candidates.len(), 6);
        assert_eq!(doc.factors[2].candidates.len(), 3);
    }
}
