use std::collections::BTreeSet;

use proptest::prelude::*;

use absub::jordan::{decompose_jordan, JordanMap};
use absub::matalg::{
    jordan_product, parse_algebra_file, spectral_decompose, AbelianFragment, AlgElement, AlgebraFile, FinDimAlgebra,
    GaussScalar, Matrix, PartitionOfUnity, Span,
};
use absub::oml::{standard, Oml};
use absub::pipeline::{instances, run_pipeline, PipelineOptions, TheoremInstance};
use absub::poset::{enumerate_order_isos, Poset};
use absub::reconstruct::{reconstruct_oml_isos, BsubIso};

fn scalar() -> impl Strategy<Value = GaussScalar> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| GaussScalar::complex((a, b), (c, d)))
}

fn element(alg: FinDimAlgebra) -> impl Strategy<Value = AlgElement> {
    let d = alg.dim();
    prop::collection::vec(scalar(), d).prop_map(move |c| alg.from_coords(&c))
}

fn dims31() -> FinDimAlgebra {
    FinDimAlgebra::new(vec![3, 1]).unwrap()
}

/// A coarsening of the diagonal partition of dims(3,1), given block labels.
fn coarsening(labels: &[usize]) -> PartitionOfUnity {
    let alg = dims31();
    let diag = instances::diagonal_partition(&alg);
    let groups: BTreeSet<usize> = labels.iter().copied().collect();
    let groups: Vec<Vec<usize>> =
        groups.iter().map(|g| (0..labels.len()).filter(|&i| labels[i] == *g).collect()).collect();
    diag.merge(&groups)
}

fn relabel(l: &Oml, perm: &[usize]) -> Oml {
    let n = l.len();
    let mut names = vec![String::new(); n];
    let mut leq = vec![vec![false; n]; n];
    let mut ortho = vec![0; n];
    for x in 0..n {
        names[perm[x]] = format!("{}~", l.name(x));
        ortho[perm[x]] = perm[l.ortho(x)];
        for y in 0..n {
            leq[perm[x]][perm[y]] = l.leq(x, y);
        }
    }
    Oml::verify(Poset::from_relation(names, leq).unwrap(), ortho).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lambda_is_a_unital_star_homomorphism(
        labels in prop::collection::vec(0usize..4, 4),
        a in prop::collection::vec(scalar(), 4),
        b in prop::collection::vec(scalar(), 4),
    ) {
        let p = coarsening(&labels);
        let k = p.len();
        let (a, b) = (&a[..k], &b[..k]);
        let la = p.lambda_embed(a).unwrap();
        let lb = p.lambda_embed(b).unwrap();
        let prod: Vec<GaussScalar> = a.iter().zip(b).map(|(x, y)| x * y).collect();
        let sum: Vec<GaussScalar> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        let conj: Vec<GaussScalar> = a.iter().map(GaussScalar::conj).collect();
        prop_assert_eq!(&la * &lb, p.lambda_embed(&prod).unwrap());
        prop_assert_eq!(&la + &lb, p.lambda_embed(&sum).unwrap());
        prop_assert_eq!(la.adjoint(), p.lambda_embed(&conj).unwrap());
        prop_assert_eq!(p.lambda_embed(&vec![GaussScalar::one(); k]).unwrap(), dims31().identity());
    }

    #[test]
    fn psi_has_one_projection_per_subset_of_atoms(labels in prop::collection::vec(0usize..4, 4)) {
        let p = coarsening(&labels);
        let psi = p.psi_project();
        prop_assert_eq!(psi.len(), 1 << p.len());
        prop_assert!(psi.iter().all(AlgElement::is_projection));
        prop_assert!(psi.iter().all(|x| psi.iter().all(|y| x.commutes_with(y))));
        prop_assert_eq!(psi.iter().collect::<BTreeSet<_>>().len(), psi.len());
    }

    #[test]
    fn jordan_product_commutes(a in element(dims31()), b in element(dims31())) {
        prop_assert_eq!(jordan_product(&a, &b).unwrap(), jordan_product(&b, &a).unwrap());
        let sq = jordan_product(&a, &a).unwrap();
        prop_assert_eq!(sq, &a * &a);
    }

    #[test]
    fn algebra_files_round_trip(xs in prop::collection::vec(element(dims31()), 0..4)) {
        let alg = dims31();
        let mut file = AlgebraFile::new(alg.clone());
        file.partitions.push(("diag".into(), instances::diagonal_partition(&alg)));
        file.partitions.push(("rot".into(), instances::rotated_partition(&alg)));
        for (i, x) in xs.into_iter().enumerate() {
            file.elements.push((format!("x{i}"), x));
        }
        prop_assert_eq!(parse_algebra_file(&file.to_text()).unwrap(), file);
    }

    #[test]
    fn spectral_decomposition_recovers_the_element(
        vals in prop::collection::btree_set((-12i64..=12, 1i64..=5), 3),
        unitary in 0usize..3,
    ) {
        let alg = FinDimAlgebra::new(vec![3]).unwrap();
        let vals: Vec<GaussScalar> = vals.into_iter().map(|(n, d)| GaussScalar::ratio(n, d)).collect();
        let distinct: BTreeSet<String> = vals.iter().map(ToString::to_string).collect();
        prop_assume!(distinct.len() == 3);
        let d = alg.element(vec![Matrix::diag(&vals)]).unwrap();
        let u = match unitary {
            0 => alg.identity(),
            1 => instances::rotation(&alg),
            _ => instances::cyclic_permutation(&alg),
        };
        let x = &(&u * &d) * &u.adjoint();
        let s = spectral_decompose(&x).unwrap();
        prop_assert_eq!(s.value(), x);
        prop_assert_eq!(s.partition().len(), 3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn decomposition_labels_survive_inner_automorphisms(map in 0usize..4, unitary in 0usize..2) {
        let alg = dims31();
        let (name, g) = instances::named_maps(&alg).swap_remove(map);
        let u = if unitary == 0 { instances::rotation(&alg) } else { instances::cyclic_permutation(&alg) };
        let ad = JordanMap::ad(&alg, &u).unwrap();
        let before = decompose_jordan(&g).unwrap();
        let after = decompose_jordan(&g.then(&ad).unwrap()).unwrap();
        prop_assert_eq!(&before.labels, &after.labels, "{}", name);
        let after = decompose_jordan(&ad.then(&g).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn reconstruction_finds_the_relabelling(perm in Just((0..14).collect::<Vec<usize>>()).prop_shuffle()) {
        let l = standard("horizontal_sum_b8", 2).unwrap();
        let m = relabel(&l, &perm);
        let j = BsubIso::induced_by(&l, &m, &perm).unwrap();
        let found = reconstruct_oml_isos(&j).unwrap();
        prop_assert_eq!(found.len(), 1);
        prop_assert_eq!(&found[0].map, &perm);
    }

    #[test]
    fn random_posets_have_identity_automorphism(edges in prop::collection::vec((0usize..6, 0usize..6), 0..10)) {
        let names: Vec<String> = (0..6).map(|i| format!("v{i}")).collect();
        let mut leq = vec![vec![false; 6]; 6];
        for (a, b) in edges {
            if a < b {
                leq[a][b] = true;
            }
        }
        let p = Poset::from_relation(names, leq).unwrap();
        let isos = enumerate_order_isos(&p, &p);
        prop_assert!(isos.iter().any(|k| k.map().iter().enumerate().all(|(i, &j)| i == j)));
        for k in &isos {
            let back = k.then(&k.inverse()).unwrap();
            prop_assert!(back.map().iter().enumerate().all(|(i, &j)| i == j));
            for x in 0..6 {
                for y in 0..6 {
                    prop_assert_eq!(p.leq(x, y), p.leq(k.apply(x), k.apply(y)));
                }
            }
        }
        for ideal in p.ideals() {
            let m = &ideal.members;
            prop_assert!(m.iter().all(|&x| p.down_set(x).iter().all(|y| m.contains(y))));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3))]

    #[test]
    fn pipeline_ignores_fragment_order(order in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let alg = FinDimAlgebra::new(vec![3]).unwrap();
        let g = JordanMap::ad(&alg, &instances::rotation(&alg)).unwrap();
        let frag = instances::diagonal_plus_rotated(&alg);
        prop_assert_eq!(frag.len(), order.len());
        let shuffled: Vec<_> = order.iter().map(|&i| frag.entries()[i].clone()).collect();
        let frag = AbelianFragment::new(&alg, shuffled).unwrap();
        let t = TheoremInstance::induced(&g, &frag).unwrap();
        let run = run_pipeline(&t, PipelineOptions::default()).unwrap();
        let span = Span::of(&alg, &frag.projections());
        prop_assert!(run.map.domain().same_as(&span));
        prop_assert!(run.map.agrees_with_on(&g, &span.basis()));
    }
}
