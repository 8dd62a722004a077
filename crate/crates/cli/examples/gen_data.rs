//! Writes the sample input files under `data/`.
//!
//! cargo run -p absub-cli --example gen_data

use std::fs;
use std::path::Path;

use absub::jordan::JordanMap;
use absub::matalg::{AlgebraFile, FinDimAlgebra};
use absub::oml::{standard, GreechieDiagram};
use absub::pipeline::{instances, TheoremInstance};
use absub::reconstruct::BsubIso;

const PENTAGON: &str = "\
# the pentagon N5 with the only order-reversing candidate complements
elements 0 a b c 1
le 0 a
le a b
le b 1
le 0 c
le c 1
ortho 0 1
ortho a c
ortho b b
";

const MALFORMED: &str = "\
elements 0 a a' 1
le 0 a
leq a 1
";

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap_or_else(|e| panic!("{name}: {e}"));
    println!("wrote {name}");
}

fn algebra_text(t: &absub::matalg::AbelianFragment) -> String {
    let mut file = AlgebraFile::new(t.algebra().clone());
    file.partitions = t.entries().to_vec();
    file.to_text()
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    fs::create_dir_all(&dir).expect("data directory");

    for (file, name, n) in [("mo2.oml", "mo", 2), ("mo3.oml", "mo", 3), ("boolean3.oml", "boolean", 3)] {
        write(&dir, file, &standard(name, n).expect("standard lattice").to_text());
    }
    let b4 = GreechieDiagram::new(
        ["a", "b", "c", "d"].map(String::from).to_vec(),
        vec![["a", "b", "c", "d"].map(String::from).to_vec()],
    )
    .expect("diagram");
    write(&dir, "boolean4.grc", &b4.to_text());
    let hsum = GreechieDiagram::new(
        ["a1", "b1", "c1", "a2", "b2", "c2"].map(String::from).to_vec(),
        vec![["a1", "b1", "c1"].map(String::from).to_vec(), ["a2", "b2", "c2"].map(String::from).to_vec()],
    )
    .expect("diagram");
    write(&dir, "hsum_b8_2.grc", &hsum.to_text());
    write(&dir, "pentagon.oml", PENTAGON);
    write(&dir, "malformed.oml", MALFORMED);

    let mo2 = standard("mo", 2).expect("mo2");
    write(&dir, "mo2_identity.bsubiso", &BsubIso::identity(&mo2).to_text());
    let h = hsum.paste().expect("pasting");
    write(&dir, "hsum_b8_2_identity.bsubiso", &BsubIso::identity(&h).to_text());

    for dims in [vec![3], vec![3, 1]] {
        let alg = FinDimAlgebra::new(dims.clone()).expect("dims");
        let tag: Vec<String> = dims.iter().map(ToString::to_string).collect();
        for (name, g) in instances::named_maps(&alg) {
            let t = instances::round_trip(&alg, &g);
            write(&dir, &format!("{name}_m{}.inst", tag.join("_")), &t.to_text());
        }
    }
    write(&dir, "counterexample_m2.inst", &instances::two_by_two_counterexample().to_text());

    let alg = FinDimAlgebra::new(vec![3]).expect("dims");
    let g = JordanMap::ad(&alg, &instances::cyclic_permutation(&alg)).expect("unitary");
    let t = instances::round_trip(&alg, &g);
    write(&dir, "permutation_m3_source.alg", &algebra_text(t.source()));
    write(&dir, "permutation_m3_target.alg", &algebra_text(t.target()));
    let mut linked = String::from("source permutation_m3_source.alg\ntarget permutation_m3_target.alg\n");
    for (name, _) in t.source().entries() {
        linked.push_str(&format!("fmap {name} {}\n", t.f().apply_name(name).expect("total")));
    }
    assert_eq!(TheoremInstance::parse(&linked, Some(&dir)).expect("re-parses"), t);
    write(&dir, "permutation_m3_files.inst", &linked);
    write(&dir, "missing_algebra.inst", "source no_such_file.alg\ntarget no_such_file.alg\n");
}
