#![allow(dead_code)]

//! Shared test oracles, kept independent of the implementation paths they
//! cross-check.

use braided::perm::Perm;
use braided::qset::{ElementId, QuadraticSet};

/// Brute-force isomorphism oracle: tries every bijection of the carriers.
pub fn iso_oracle(a: &QuadraticSet, b: &QuadraticSet) -> bool {
    if a.size() != b.size() {
        return false;
    }
    Perm::all(a.size()).into_iter().any(|p| {
        a.pairs().all(|(x, y)| {
            let (u, v) = a.apply_r(x, y);
            b.apply_r(ElementId(p.apply(x.0)), ElementId(p.apply(y.0)))
                == (ElementId(p.apply(u.0)), ElementId(p.apply(v.0)))
        })
    })
}

/// Every square-free bijective table on the given labels, enumerated as
/// the permutations of the off-diagonal pairs (the diagonal is pinned by
/// square-freeness).
pub fn square_free_bijections(labels: &[&str]) -> Vec<QuadraticSet> {
    let n = labels.len();
    let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let off_diag: Vec<(u16, u16)> = (0..n as u16)
        .flat_map(|x| (0..n as u16).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    Perm::all(off_diag.len())
        .into_iter()
        .enumerate()
        .map(|(k, p)| {
            let table: Vec<(ElementId, ElementId)> = (0..n as u16)
                .flat_map(|x| (0..n as u16).map(move |y| (x, y)))
                .map(|(x, y)| {
                    if x == y {
                        (ElementId(x), ElementId(y))
                    } else {
                        let slot = off_diag.iter().position(|&q| q == (x, y)).unwrap();
                        let (u, v) = off_diag[p.apply(slot as u16) as usize];
                        (ElementId(u), ElementId(v))
                    }
                })
                .collect();
            QuadraticSet::new(&format!("sf_{k}"), owned.clone(), table).unwrap()
        })
        .collect()
}

/// Independent enumeration of quantum binomial sets on 3 elements through
/// left/right action tables: square-freeness forces each `L_x`, `R_x` to
/// fix `x`, leaving two choices per element and side.
pub fn quantum_binomial_3_by_actions() -> Vec<QuadraticSet> {
    let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let fixing: Vec<Vec<Perm>> = (0..3u16)
        .map(|i| {
            Perm::all(3)
                .into_iter()
                .filter(|p| p.apply(i) == i)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut k = 0;
    for lx in &fixing[0] {
        for ly in &fixing[1] {
            for lz in &fixing[2] {
                for rx in &fixing[0] {
                    for ry in &fixing[1] {
                        for rz in &fixing[2] {
                            let left = [lx, ly, lz];
                            let right = [rx, ry, rz];
                            let qs = QuadraticSet::from_fn(
                                &format!("qb_{k}"),
                                labels.clone(),
                                |x, y| {
                                    (
                                        ElementId(left[x.idx()].apply(y.0)),
                                        ElementId(right[y.idx()].apply(x.0)),
                                    )
                                },
                            )
                            .unwrap();
                            k += 1;
                            if qs.is_bijective() && qs.is_involutive() {
                                out.push(qs);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
