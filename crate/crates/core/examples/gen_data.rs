//! Regenerates the canonical data files (solution documents, ground
//! actions, the candidate-family document, pinned classification profiles
//! and golden DOT exports) from the in-code catalog.
//!
//! Run from the workspace root: `cargo run -p braided --example gen_data`

use std::fs;
use std::path::Path;

use braided::catalog;
use braided::conditions;
use braided::doc::{self, GroundDoc, PathOrInline};
use braided::graph::{export_dot, gamma_graph, DotOptions};

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    for dir in ["solutions", "ground", "families", "profiles", "golden"] {
        fs::create_dir_all(root.join(dir)).expect("create data dir");
    }

    for key in catalog::KEYS {
        let payload = catalog::build(key).expect("catalog entry");
        let solution = doc::solution_to_canonical_json(&payload.qset);
        fs::write(root.join(format!("solutions/{key}.json")), &solution).expect("write solution");
        let profile = conditions::classify(&payload.qset);
        fs::write(root.join(format!("profiles/{key}.json")), profile.to_canonical_json())
            .expect("write profile");
        let ybe = profile.holds("ybe");
        println!("{key:<20} ybe={ybe}");
    }

    for which in 1..=3usize {
        let ground = GroundDoc {
            x_solution: PathOrInline::Path("../solutions/sec5_X.json".into()),
            y_solution: PathOrInline::Path("../solutions/sec5_Y.json".into()),
            ground: None,
            actions: Some(catalog::sec5_ground_actions(which)),
            lri: true,
        };
        let json = serde_json::to_string_pretty(&ground).expect("serialize ground");
        fs::write(root.join(format!("ground/sec5_ground_r{which}.json")), json)
            .expect("write ground");
    }

    let family = catalog::sec5_family_doc();
    fs::write(
        root.join("families/sec5_families.json"),
        serde_json::to_string_pretty(&family).expect("serialize family"),
    )
    .expect("write family");

    for key in ["sec5_Z1", "sec5_Z3"] {
        let payload = catalog::build(key).expect("catalog entry");
        let dot = export_dot(&gamma_graph(&payload.qset), DotOptions::default());
        fs::write(root.join(format!("golden/{key}_gamma.dot")), dot).expect("write dot");
    }

    println!("data files regenerated under {}", root.display());
}
