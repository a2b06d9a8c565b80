//! The action graph Γ(X, r) with acting-element edge labels, orbit
//! decomposition under the generated left action, deterministic DOT
//! export, and complete isomorphism/automorphism search over solution
//! tables with invariant pruning.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::qset::{ElementId, QuadraticSet};

/// Labeled digraph: an arc `x -> y` with label `z` whenever `z ▸ x = y`.
/// Self-loops (`z ▸ x = x`) are kept internally and filtered on access,
/// matching the drawing convention.
#[derive(Debug, Clone)]
pub struct LabeledDigraph {
    pub vertices: Vec<String>,
    arcs: Vec<(u16, u16, u16)>,
}

impl LabeledDigraph {
    /// Proper edges (self-loops omitted).
    pub fn edges(&self) -> impl Iterator<Item = (u16, u16, u16)> + '_ {
        self.arcs.iter().copied().filter(|&(s, t, _)| s != t)
    }

    /// All arcs including self-loops.
    pub fn arcs(&self) -> &[(u16, u16, u16)] {
        &self.arcs
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }
}

/// Builds Γ from the left action. Defined for every table; when `lri`
/// fails the caller may note which action is drawn.
pub fn gamma_graph(qs: &QuadraticSet) -> LabeledDigraph {
    let mut arcs = Vec::new();
    for x in qs.elements() {
        for z in qs.elements() {
            let y = qs.left_action(z, x);
            arcs.push((x.0, y.0, z.0));
        }
    }
    arcs.sort_unstable();
    LabeledDigraph {
        vertices: qs.labels().to_vec(),
        arcs,
    }
}

/// Orbit partition of the carrier under the group generated by the left
/// actions (equivalently, the weakly connected components of `x -> z ▸ x`
/// when the actions are not permutations).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<ElementId>>,
}

impl OrbitPartition {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn block_of(&self, x: ElementId) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&x))
            .expect("partition covers the carrier")
    }
}

pub fn orbit_partition(qs: &QuadraticSet) -> OrbitPartition {
    let n = qs.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in qs.elements() {
        for z in qs.elements() {
            let y = qs.left_action(z, x);
            let (a, b) = (find(&mut parent, x.idx()), find(&mut parent, y.idx()));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<ElementId>> = BTreeMap::new();
    for x in qs.elements() {
        let root = find(&mut parent, x.idx());
        blocks.entry(root).or_default().push(x);
    }
    OrbitPartition {
        blocks: blocks.into_values().collect(),
    }
}

/// DOT export options.
#[derive(Debug, Clone, Copy)]
pub struct DotOptions {
    pub include_self_loops: bool,
    pub show_labels: bool,
}

impl Default for DotOptions {
    fn default() -> Self {
        DotOptions {
            include_self_loops: false,
            show_labels: true,
        }
    }
}

/// Deterministic DOT rendering: vertices in canonical order, one edge
/// statement per (source, target) with the merged label list.
pub fn export_dot(g: &LabeledDigraph, options: DotOptions) -> String {
    let mut out = String::from("digraph G {\n");
    for v in &g.vertices {
        out.push_str(&format!("  \"{v}\";\n"));
    }
    let mut merged: BTreeMap<(u16, u16), Vec<u16>> = BTreeMap::new();
    for &(s, t, z) in g.arcs() {
        if s == t && !options.include_self_loops {
            continue;
        }
        merged.entry((s, t)).or_default().push(z);
    }
    for ((s, t), labels) in merged {
        let src = &g.vertices[s as usize];
        let dst = &g.vertices[t as usize];
        if options.show_labels {
            let list = labels
                .iter()
                .map(|&z| g.vertices[z as usize].as_str())
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!("  \"{src}\" -> \"{dst}\" [label=\"{list}\"];\n"));
        } else {
            out.push_str(&format!("  \"{src}\" -> \"{dst}\";\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// A bijection witnessing `(phi x phi) . r1 = r2 . (phi x phi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub map: Perm,
}

impl IsoWitness {
    pub fn render(&self, from: &QuadraticSet, to: &QuadraticSet) -> Vec<(String, String)> {
        from.labels()
            .iter()
            .enumerate()
            .map(|(i, l)| {
                (
                    l.clone(),
                    to.labels()[self.map.apply(i as u16) as usize].clone(),
                )
            })
            .collect()
    }
}

const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// Per-vertex invariant used to prune the search.
fn vertex_profiles(qs: &QuadraticSet) -> Vec<Vec<u64>> {
    let g = gamma_graph(qs);
    let orbits = orbit_partition(qs);
    let n = qs.size();
    let mut profile = vec![vec![0u64; 8]; n];
    for x in qs.elements() {
        let i = x.idx();
        profile[i][0] = u64::from(qs.apply_r(x, x) == (x, x));
        profile[i][1] = qs
            .elements()
            .filter(|&y| qs.apply_r(x, y) == (x, y))
            .count() as u64;
        profile[i][2] = qs
            .elements()
            .filter(|&y| qs.apply_r(y, x) == (y, x))
            .count() as u64;
        profile[i][5] = orbits.blocks[orbits.block_of(x)].len() as u64;
    }
    for (s, t, z) in g.edges() {
        profile[s as usize][3] += 1;
        profile[t as usize][4] += 1;
        profile[z as usize][6] += 1;
    }
    // left-action cycle structure: number of fixed points of L_x
    for x in qs.elements() {
        profile[x.idx()][7] = qs
            .elements()
            .filter(|&y| qs.left_action(x, y) == y)
            .count() as u64;
    }
    profile
}

struct IsoSearch<'a> {
    qs1: &'a QuadraticSet,
    qs2: &'a QuadraticSet,
    candidates: Vec<Vec<u16>>,
    budget: u64,
    nodes: u64,
}

impl<'a> IsoSearch<'a> {
    fn new(qs1: &'a QuadraticSet, qs2: &'a QuadraticSet, budget: u64) -> Option<Self> {
        if qs1.size() != qs2.size() {
            return None;
        }
        let p1 = vertex_profiles(qs1);
        let p2 = vertex_profiles(qs2);
        let mut sorted1 = p1.clone();
        let mut sorted2 = p2.clone();
        sorted1.sort();
        sorted2.sort();
        if sorted1 != sorted2 {
            return None;
        }
        let candidates = p1
            .iter()
            .map(|prof| {
                (0..qs2.size() as u16)
                    .filter(|&j| &p2[j as usize] == prof)
                    .collect()
            })
            .collect();
        Some(IsoSearch {
            qs1,
            qs2,
            candidates,
            budget,
            nodes: 0,
        })
    }

    /// Complete consistency check of the partial map on all pairs whose
    /// endpoints are assigned; forced images are propagated by the caller
    /// through plain assignment order, so a full check at the leaves
    /// keeps the search exact.
    fn consistent(&self, map: &[Option<u16>], newly: u16) -> bool {
        let x = ElementId(newly);
        let phi_x = map[newly as usize].unwrap();
        for y in self.qs1.elements() {
            let Some(phi_y) = map[y.idx()] else { continue };
            for (a, b, pa, pb) in [
                (x, y, phi_x, phi_y),
                (y, x, phi_y, phi_x),
            ] {
                let (u, v) = self.qs1.apply_r(a, b);
                let (p, q) = self.qs2.apply_r(ElementId(pa), ElementId(pb));
                if let Some(pu) = map[u.idx()] {
                    if pu != p.0 {
                        return false;
                    }
                }
                if let Some(pv) = map[v.idx()] {
                    if pv != q.0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search_all(
        &mut self,
        map: &mut Vec<Option<u16>>,
        used: &mut Vec<bool>,
        depth: u16,
        out: &mut Vec<Perm>,
        stop_at_first: bool,
    ) -> Result<()> {
        if depth as usize == self.qs1.size() {
            let images: Vec<u16> = map.iter().map(|m| m.unwrap()).collect();
            if let Ok(p) = Perm::from_images(images) {
                // full verification at the leaf
                let ok = self.qs1.pairs().all(|(x, y)| {
                    let (u, v) = self.qs1.apply_r(x, y);
                    self.qs2
                        .apply_r(ElementId(p.apply(x.0)), ElementId(p.apply(y.0)))
                        == (ElementId(p.apply(u.0)), ElementId(p.apply(v.0)))
                });
                if ok {
                    out.push(p);
                }
            }
            return Ok(());
        }
        let cands = self.candidates[depth as usize].clone();
        for img in cands {
            if used[img as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.nodes));
            }
            map[depth as usize] = Some(img);
            used[img as usize] = true;
            if self.consistent(map, depth) {
                self.search_all(map, used, depth + 1, out, stop_at_first)?;
                if stop_at_first && !out.is_empty() {
                    map[depth as usize] = None;
                    used[img as usize] = false;
                    return Ok(());
                }
            }
            map[depth as usize] = None;
            used[img as usize] = false;
        }
        Ok(())
    }
}

/// Exact isomorphism search; returns a witness iff one exists.
pub fn find_isomorphism(qs1: &QuadraticSet, qs2: &QuadraticSet) -> Result<Option<IsoWitness>> {
    find_isomorphism_with_budget(qs1, qs2, DEFAULT_SEARCH_BUDGET)
}

pub fn find_isomorphism_with_budget(
    qs1: &QuadraticSet,
    qs2: &QuadraticSet,
    budget: u64,
) -> Result<Option<IsoWitness>> {
    let Some(mut search) = IsoSearch::new(qs1, qs2, budget) else {
        return Ok(None);
    };
    let mut map = vec![None; qs1.size()];
    let mut used = vec![false; qs1.size()];
    let mut out = Vec::new();
    search.search_all(&mut map, &mut used, 0, &mut out, true)?;
    Ok(out.into_iter().next().map(|map| IsoWitness { map }))
}

/// All automorphisms for small carriers; above `generator_threshold`
/// returns a generating set (the stabilizer-chain transversal generators).
pub fn automorphisms(qs: &QuadraticSet) -> Result<Vec<IsoWitness>> {
    automorphisms_with(qs, 12, DEFAULT_SEARCH_BUDGET)
}

pub fn automorphisms_with(
    qs: &QuadraticSet,
    generator_threshold: usize,
    budget: u64,
) -> Result<Vec<IsoWitness>> {
    if qs.size() <= generator_threshold {
        let Some(mut search) = IsoSearch::new(qs, qs, budget) else {
            return Ok(vec![]);
        };
        let mut map = vec![None; qs.size()];
        let mut used = vec![false; qs.size()];
        let mut out = Vec::new();
        search.search_all(&mut map, &mut used, 0, &mut out, false)?;
        return Ok(out.into_iter().map(|map| IsoWitness { map }).collect());
    }
    // stabilizer chain: for each base point, one witness per reachable image
    let mut gens: BTreeSet<Vec<u16>> = BTreeSet::new();
    for base in 0..qs.size() as u16 {
        for img in 0..qs.size() as u16 {
            if img == base {
                continue;
            }
            let Some(mut search) = IsoSearch::new(qs, qs, budget) else {
                return Ok(vec![]);
            };
            // pin the prefix: identity on 0..base, base -> img
            let mut map: Vec<Option<u16>> = vec![None; qs.size()];
            let mut used = vec![false; qs.size()];
            let mut ok = true;
            for k in 0..base {
                map[k as usize] = Some(k);
                used[k as usize] = true;
                if !search.candidates[k as usize].contains(&k) {
                    ok = false;
                    break;
                }
            }
            if !ok || used[img as usize] || !search.candidates[base as usize].contains(&img) {
                continue;
            }
            map[base as usize] = Some(img);
            used[img as usize] = true;
            let mut consistent = true;
            for k in 0..=base {
                if !search.consistent(&map, k) {
                    consistent = false;
                    break;
                }
            }
            if !consistent {
                continue;
            }
            let mut out = Vec::new();
            search.search_all(&mut map, &mut used, base + 1, &mut out, true)?;
            if let Some(p) = out.into_iter().next() {
                gens.insert(p.images().to_vec());
            }
        }
    }
    Ok(gens
        .into_iter()
        .map(|images| IsoWitness {
            map: Perm::from_images(images).expect("witness is a permutation"),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn rho_example() -> QuadraticSet {
        let lb = labels(&["x", "y", "z"]);
        let rho = parse_cycles("(x y z)", &lb).unwrap();
        QuadraticSet::permutational("rho_example", lb, &Perm::identity(3), &rho).unwrap()
    }

    #[test]
    fn trivial_graph_has_no_edges() {
        let qs = QuadraticSet::trivial("t", labels(&["a", "b"])).unwrap();
        let g = gamma_graph(&qs);
        assert_eq!(g.edge_count(), 0);
        let dot = export_dot(&g, DotOptions::default());
        assert!(dot.contains("\"a\";"));
        assert!(!dot.contains("->"));
        let orbits = orbit_partition(&qs);
        assert_eq!(orbits.block_sizes(), vec![1, 1]);
    }

    #[test]
    fn rho_graph_is_single_labeled_cycle() {
        let qs = rho_example();
        let g = gamma_graph(&qs);
        // every label carries x -> y -> z -> x
        assert_eq!(g.edge_count(), 9);
        let dot = export_dot(&g, DotOptions::default());
        assert!(dot.contains("\"x\" -> \"y\" [label=\"x,y,z\"];"));
        let orbits = orbit_partition(&qs);
        assert_eq!(orbits.block_sizes(), vec![3]);
    }

    #[test]
    fn isomorphism_finds_relabeling() {
        let qs = rho_example();
        let phi = parse_cycles("(x z)", qs.labels()).unwrap();
        let re = qs.relabel(&phi, labels(&["x", "y", "z"])).unwrap();
        let w = find_isomorphism(&qs, &re).unwrap().expect("isomorphic");
        // verify the witness really conjugates the tables
        for (x, y) in qs.pairs() {
            let (u, v) = qs.apply_r(x, y);
            let img = re.apply_r(ElementId(w.map.apply(x.0)), ElementId(w.map.apply(y.0)));
            assert_eq!(img, (ElementId(w.map.apply(u.0)), ElementId(w.map.apply(v.0))));
        }
        let id = find_isomorphism(&qs, &qs).unwrap().expect("identity");
        let _ = id;
        let other = QuadraticSet::trivial("t", labels(&["x", "y", "z"])).unwrap();
        assert!(find_isomorphism(&qs, &other).unwrap().is_none());
    }

    #[test]
    fn automorphism_group_of_trivial_is_symmetric() {
        let qs = QuadraticSet::trivial("t", labels(&["a", "b", "c"])).unwrap();
        let autos = automorphisms(&qs).unwrap();
        assert_eq!(autos.len(), 6);
        // gamma edges are invariant under automorphisms (vacuous here)
        let qs = rho_example();
        let autos = automorphisms(&qs).unwrap();
        let g = gamma_graph(&qs);
        let edges: BTreeSet<_> = g.edges().collect();
        for a in &autos {
            for &(s, t, z) in &g.arcs().to_vec() {
                if s == t {
                    continue;
                }
                let mapped = (a.map.apply(s), a.map.apply(t), a.map.apply(z));
                assert!(edges.contains(&mapped));
            }
        }
    }
}
