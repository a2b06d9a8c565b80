//! Interchange documents: solution files, ground-action files for
//! extensions, and candidate-family files for the permutation-family
//! enumeration mode. All are JSON with a canonical writer so files are
//! reproducible byte for byte.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::GroundActions;
use crate::perm::{format_cycles, parse_cycles, Perm};
use crate::qset::QuadraticSet;

/// Solution document. Exactly one of `r`, `permutational`, `trivial`,
/// `identity` must be present; `r` must list each input pair exactly once.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub name: String,
    pub elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<TableEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutational: Option<PermutationalSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trivial: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableEntry {
    #[serde(rename = "in")]
    pub input: [String; 2],
    pub out: [String; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermutationalSpec {
    pub f: String,
    pub g: String,
}

impl SolutionDoc {
    pub fn to_qset(&self) -> Result<QuadraticSet> {
        let labels = self.elements.clone();
        let n = labels.len();
        let forms = [
            self.r.is_some(),
            self.permutational.is_some(),
            self.trivial == Some(true),
            self.identity == Some(true),
        ];
        if forms.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::MalformedDocument(
                "need exactly one of `r`, `permutational`, `trivial`, `identity`".into(),
            ));
        }
        if let Some(spec) = &self.permutational {
            let f = parse_cycles(&spec.f, &labels)?;
            let g = parse_cycles(&spec.g, &labels)?;
            return QuadraticSet::permutational(&self.name, labels, &f, &g);
        }
        if self.trivial == Some(true) {
            return QuadraticSet::trivial(&self.name, labels);
        }
        if self.identity == Some(true) {
            return QuadraticSet::identity(&self.name, labels);
        }
        let entries = self.r.as_ref().expect("checked above");
        let probe = QuadraticSet::identity(&self.name, labels.clone())?;
        let mut table = vec![None; n * n];
        for e in entries {
            let x = probe.element(&e.input[0])?;
            let y = probe.element(&e.input[1])?;
            let u = probe.element(&e.out[0])?;
            let v = probe.element(&e.out[1])?;
            let slot = &mut table[x.idx() * n + y.idx()];
            if slot.is_some() {
                return Err(Error::DuplicateEntry(e.input[0].clone(), e.input[1].clone()));
            }
            *slot = Some((u, v));
        }
        let mut full = Vec::with_capacity(n * n);
        for (i, slot) in table.into_iter().enumerate() {
            match slot {
                Some(p) => full.push(p),
                None => {
                    return Err(Error::IncompleteTable(
                        labels[i / n].clone(),
                        labels[i % n].clone(),
                    ))
                }
            }
        }
        QuadraticSet::new(&self.name, labels, full)
    }

    /// Canonical full-table form of a set, entries in input-pair order.
    pub fn from_qset(qs: &QuadraticSet) -> SolutionDoc {
        let entries = qs
            .pairs()
            .map(|(x, y)| {
                let (u, v) = qs.apply_r(x, y);
                TableEntry {
                    input: [qs.label(x).to_string(), qs.label(y).to_string()],
                    out: [qs.label(u).to_string(), qs.label(v).to_string()],
                }
            })
            .collect();
        SolutionDoc {
            name: qs.name().to_string(),
            elements: qs.labels().to_vec(),
            r: Some(entries),
            permutational: None,
            trivial: None,
            identity: None,
        }
    }
}

pub fn load_solution_str(json: &str) -> Result<QuadraticSet> {
    let doc: SolutionDoc =
        serde_json::from_str(json).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    doc.to_qset()
}

pub fn load_solution_path(path: &Path) -> Result<QuadraticSet> {
    load_solution_str(&std::fs::read_to_string(path)?)
}

pub fn solution_to_canonical_json(qs: &QuadraticSet) -> String {
    serde_json::to_string_pretty(&SolutionDoc::from_qset(qs)).expect("solution serialization")
}

/// Either a path to another document or the document inline.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathOrInline {
    Path(String),
    Inline(SolutionDoc),
}

impl PathOrInline {
    pub fn resolve(&self, base_dir: Option<&Path>) -> Result<QuadraticSet> {
        match self {
            PathOrInline::Inline(doc) => doc.to_qset(),
            PathOrInline::Path(p) => {
                let path = match base_dir {
                    Some(dir) if Path::new(p).is_relative() => dir.join(p),
                    _ => Path::new(p).to_path_buf(),
                };
                load_solution_path(&path)
            }
        }
    }
}

/// Ground-actions document for a regular extension `Z = X ⊔ Y`.
///
/// Either an explicit `ground` list with one entry per `(alpha, x)` pair
/// (`left` = alpha ▸ x, `right` = alpha ◂ x), or an `actions` map of
/// cycle strings: `L_<alpha>` over the X-carrier for each alpha, together
/// with `R_<x>` over the Y-carrier for each x — or, when `lri` is set,
/// `L_<x>` over the Y-carrier, the right actions then being the inverses
/// `R_x = L_x^{-1}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroundDoc {
    pub x_solution: PathOrInline,
    pub y_solution: PathOrInline,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<GroundEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actions: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub lri: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroundEntry {
    pub alpha: String,
    pub x: String,
    pub left: String,
    pub right: String,
}

impl GroundDoc {
    pub fn resolve(&self, base_dir: Option<&Path>) -> Result<(QuadraticSet, QuadraticSet, GroundActions)> {
        let x_part = self.x_solution.resolve(base_dir)?;
        let y_part = self.y_solution.resolve(base_dir)?;
        let ground = match (&self.ground, &self.actions) {
            (Some(entries), None) => {
                GroundActions::from_entries(&x_part, &y_part, entries)?
            }
            (None, Some(actions)) => {
                ground_actions_from_cycles(&x_part, &y_part, actions, self.lri)?
            }
            _ => {
                return Err(Error::MalformedDocument(
                    "need exactly one of `ground`, `actions`".into(),
                ))
            }
        };
        Ok((x_part, y_part, ground))
    }
}

pub fn ground_actions_from_cycles(
    x_part: &QuadraticSet,
    y_part: &QuadraticSet,
    actions: &BTreeMap<String, String>,
    lri: bool,
) -> Result<GroundActions> {
    let nx = x_part.size();
    let ny = y_part.size();
    let mut left: Vec<Option<Perm>> = vec![None; ny]; // per alpha, over X
    let mut right: Vec<Option<Perm>> = vec![None; nx]; // per x, over Y
    for (key, cycles) in actions {
        if let Some(lbl) = key.strip_prefix("L_") {
            if let Ok(alpha) = y_part.element(lbl) {
                left[alpha.idx()] = Some(parse_cycles(cycles, x_part.labels())?);
                continue;
            }
            if let Ok(x) = x_part.element(lbl) {
                if !lri {
                    return Err(Error::MalformedDocument(format!(
                        "`{key}` gives a left action of an X-element; set `lri` to derive right actions"
                    )));
                }
                right[x.idx()] = Some(parse_cycles(cycles, y_part.labels())?.inverse());
                continue;
            }
            return Err(Error::UnknownLabel(lbl.to_string()));
        }
        if let Some(lbl) = key.strip_prefix("R_") {
            let x = x_part.element(lbl)?;
            right[x.idx()] = Some(parse_cycles(cycles, y_part.labels())?);
            continue;
        }
        return Err(Error::MalformedDocument(format!(
            "action key `{key}` must start with `L_` or `R_`"
        )));
    }
    let left: Vec<Perm> = left
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::MalformedDocument(format!(
            "missing `L_{}`",
            y_part.labels()[i]
        ))))
        .collect::<Result<_>>()?;
    let right: Vec<Perm> = right
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::MalformedDocument(format!(
            "missing `R_{}` (or `L_{}` with lri)",
            x_part.labels()[i],
            x_part.labels()[i]
        ))))
        .collect::<Result<_>>()?;
    GroundActions::from_permutations(x_part, y_part, &left, &right)
}

pub fn load_ground_path(path: &Path) -> Result<(QuadraticSet, QuadraticSet, GroundActions)> {
    let doc: GroundDoc = serde_json::from_str(&std::fs::read_to_string(path)?)
        .map_err(|e| Error::MalformedDocument(e.to_string()))?;
    doc.resolve(path.parent())
}

/// One candidate assignment inside a family factor: carrier label -> cycle
/// string (Y-labels act on X; X-labels act on Y, as left actions under
/// `lri` or as right actions otherwise).
pub type FamilyCandidate = BTreeMap<String, String>;

/// Candidate-family document for `permutation_family` enumeration: the
/// Cartesian product of the factors' candidate lists is enumerated in
/// input order. Jointly the factors must assign an action to every
/// element of both carriers exactly once.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub x_solution: PathOrInline,
    pub y_solution: PathOrInline,
    #[serde(default)]
    pub lri: bool,
    pub factors: Vec<FamilyFactor>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyFactor {
    pub candidates: Vec<FamilyCandidate>,
}

pub fn load_family_path(path: &Path) -> Result<(QuadraticSet, QuadraticSet, FamilyDoc)> {
    let doc: FamilyDoc = serde_json::from_str(&std::fs::read_to_string(path)?)
        .map_err(|e| Error::MalformedDocument(e.to_string()))?;
    let x = doc.x_solution.resolve(path.parent())?;
    let y = doc.y_solution.resolve(path.parent())?;
    Ok((x, y, doc))
}

/// Builds ground actions from one family combination.
pub fn ground_from_family_choice(
    x_part: &QuadraticSet,
    y_part: &QuadraticSet,
    choice: &[&FamilyCandidate],
    lri: bool,
) -> Result<GroundActions> {
    let mut merged: BTreeMap<String, String> = BTreeMap::new();
    for cand in choice {
        for (label, cycles) in cand.iter() {
            let key = format!("L_{label}");
            if merged.insert(key.clone(), cycles.clone()).is_some() {
                return Err(Error::MalformedDocument(format!(
                    "family factors assign `{label}` twice"
                )));
            }
        }
    }
    if !lri {
        // X-labels give right actions directly
        let mut rekeyed = BTreeMap::new();
        for (key, val) in merged {
            let label = key.trim_start_matches("L_").to_string();
            if x_part.element(&label).is_ok() {
                rekeyed.insert(format!("R_{label}"), val);
            } else {
                rekeyed.insert(key, val);
            }
        }
        return ground_actions_from_cycles(x_part, y_part, &rekeyed, false);
    }
    ground_actions_from_cycles(x_part, y_part, &merged, true)
}

/// Renders a permutation of the X-carrier as a cycle string (used when
/// echoing enumerated ground actions).
pub fn cycles_over(qs: &QuadraticSet, p: &Perm) -> String {
    format_cycles(p, qs.labels())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_forms_load() {
        let qs = load_solution_str(
            r#"{"name":"t","elements":["a","b"],"trivial":true}"#,
        )
        .unwrap();
        assert!(qs.is_involutive());
        let qs = load_solution_str(
            r#"{"name":"p","elements":["x","y","z"],
                "permutational":{"f":"(x z)","g":"(x z y)"}}"#,
        )
        .unwrap();
        let x = qs.element("x").unwrap();
        let y = qs.element("y").unwrap();
        let z = qs.element("z").unwrap();
        assert_eq!(qs.apply_r(x, y), (x, z));
    }

    #[test]
    fn full_table_round_trip() {
        let qs = load_solution_str(r#"{"name":"t","elements":["a","b"],"trivial":true}"#).unwrap();
        let json = solution_to_canonical_json(&qs);
        let back = load_solution_str(&json).unwrap();
        assert_eq!(qs, back);
    }

    #[test]
    fn table_validation_errors() {
        let missing = r#"{"name":"m","elements":["a","b"],"r":[
            {"in":["a","a"],"out":["a","a"]},
            {"in":["b","a"],"out":["a","b"]},
            {"in":["b","b"],"out":["b","b"]}]}"#;
        assert!(matches!(
            load_solution_str(missing),
            Err(Error::IncompleteTable(a, b)) if a == "a" && b == "b"
        ));
        let dup = r#"{"name":"d","elements":["a","b"],"r":[
            {"in":["a","a"],"out":["a","a"]},
            {"in":["a","a"],"out":["b","b"]},
            {"in":["a","b"],"out":["b","a"]},
            {"in":["b","a"],"out":["a","b"]},
            {"in":["b","b"],"out":["b","b"]}]}"#;
        assert!(matches!(load_solution_str(dup), Err(Error::DuplicateEntry(_, _))));
        let unknown = r#"{"name":"u","elements":["a"],"r":[{"in":["a","q"],"out":["a","a"]}]}"#;
        assert!(matches!(load_solution_str(unknown), Err(Error::UnknownLabel(_))));
    }
}
