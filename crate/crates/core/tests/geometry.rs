use std::sync::Arc;

use hurwitz_core::arcs::Chart;
use hurwitz_core::mutation::{braid_act, hurwitz_generator, hurwitz_of_dissection, BraidWord, Dissection};
use hurwitz_core::perm::HurwitzSystem;
use hurwitz_core::surface::skeleton_from_hurwitz;

fn chart(m: usize, pairs: &[(usize, usize)]) -> Arc<Chart> {
    let h = HurwitzSystem::from_pairs(m, pairs).unwrap();
    Arc::new(Chart::new(skeleton_from_hurwitz(&h).unwrap()).unwrap())
}

fn charts() -> Vec<(&'static str, Arc<Chart>)> {
    vec![
        ("disk2", chart(2, &[(1, 2)])),
        ("disk3", chart(3, &[(1, 2), (2, 3)])),
        ("disk4", chart(4, &[(1, 2), (2, 3), (3, 4)])),
        ("annulus", chart(2, &[(1, 2), (1, 2)])),
        ("torus1", chart(2, &[(1, 2), (1, 2), (1, 2)])),
        ("g1b2", chart(2, &[(1, 2); 4])),
        ("disk3-split", chart(3, &[(1, 2), (2, 3), (1, 2)])),
    ]
}

#[test]
fn reference_dissection_reproduces_its_chart() {
    for (name, c) in charts() {
        let d = Dissection::reference(c.clone());
        assert!(d.validate().is_valid(), "{name}: {}", d.validate());
        assert_eq!(&d.skeleton().unwrap(), c.skeleton(), "{name}");
        for a in d.arcs() {
            assert!(c.embedded(a), "{name}");
        }
    }
}

#[test]
fn arcs_of_small_disks() {
    let c = chart(3, &[(1, 2), (2, 3)]);
    for l in 0..4 {
        assert_eq!(c.enumerate_arcs(l + 1).len(), 3, "bound {l}");
    }
    let c = chart(4, &[(1, 2), (2, 3), (3, 4)]);
    assert_eq!(c.enumerate_arcs(4).len(), 6);
}

#[test]
fn generators_act_and_invert() {
    for (name, c) in charts() {
        let d = Dissection::reference(c);
        let h = d.hurwitz().unwrap();
        for g in 1..d.n() as i32 {
            for s in [g, -g] {
                let (e, _) = braid_act(&d, &BraidWord(vec![s])).unwrap();
                assert_eq!(
                    hurwitz_of_dissection(&e).unwrap(),
                    hurwitz_generator(&h, s).unwrap(),
                    "{name} {s}"
                );
                let (back, _) = braid_act(&e, &BraidWord(vec![-s])).unwrap();
                assert_eq!(back, d, "{name} {s}");
            }
        }
    }
}

#[test]
fn braid_relations_from_reference() {
    for (name, c) in charts() {
        let d = Dissection::reference(c);
        for i in 1..d.n() as i32 - 1 {
            let (l, _) = braid_act(&d, &BraidWord(vec![i, i + 1, i])).unwrap();
            let (r, _) = braid_act(&d, &BraidWord(vec![i + 1, i, i + 1])).unwrap();
            assert_eq!(l, r, "{name} {i}");
        }
    }
}
