use std::sync::Arc;

use hurwitz_core::arcs::{Chart, MutationCase};
use hurwitz_core::deck::{twist_dissection, DeckInvolution};
use hurwitz_core::fukaya::{
    hom_dim, index_symmetry_check, is_exceptional_sequence, quiver_of, GradingData, HomDim, IntersectionIndex,
    SequenceViolation,
};
use hurwitz_core::mutation::{braid_act, BraidWord, Dissection};
use hurwitz_core::orbit::{explore, separate, SeparationCertificate};
use hurwitz_core::perm::HurwitzSystem;
use hurwitz_core::surface::skeleton_from_hurwitz;
use hurwitz_core::Error;

fn chart(m: usize, pairs: &[(usize, usize)]) -> Arc<Chart> {
    let h = HurwitzSystem::from_pairs(m, pairs).unwrap();
    Arc::new(Chart::new(skeleton_from_hurwitz(&h).unwrap()).unwrap())
}

fn g1b2() -> Arc<Chart> {
    chart(2, &[(1, 2); 4])
}

#[test]
fn square_has_one_crossing_pair() {
    let c = chart(4, &[(1, 2), (2, 3), (3, 4)]);
    let arcs = c.enumerate_arcs(4);
    assert_eq!(arcs.len(), 6);
    let crossing = (0..6)
        .flat_map(|i| ((i + 1)..6).map(move |j| (i, j)))
        .filter(|&(i, j)| c.crosses(&arcs[i], &arcs[j]))
        .count();
    assert_eq!(crossing, 1);
}

#[test]
fn annulus_arc_counts() {
    let c = chart(2, &[(1, 2), (1, 2)]);
    let counts: Vec<usize> = (0..5).map(|b| c.enumerate_arcs(b).len()).collect();
    assert_eq!(counts, vec![2, 4, 4, 6, 6]);
}

#[test]
fn null_homotopic_words_are_not_arcs() {
    let c = chart(3, &[(1, 2), (2, 3)]);
    let a = c.reference_arc(0);
    let w = a.word().clone();
    let mut trivial = w.clone();
    trivial.end = trivial.start;
    assert!(c.arc(&trivial).is_err());
    assert_eq!(c.arc(&w).unwrap(), a);
}

#[test]
fn mutation_cases() {
    let d = Dissection::reference(chart(3, &[(1, 2), (2, 3)]));
    let (_, case) = d.apply_generator(1).unwrap();
    assert_eq!(case, MutationCase::OneCommonEndpoint);
    let d = Dissection::reference(chart(2, &[(1, 2), (1, 2)]));
    let (_, case) = d.apply_generator(1).unwrap();
    assert_eq!(case, MutationCase::TwoCommonEndpoints);
    let d = Dissection::reference(chart(4, &[(1, 2), (3, 4), (2, 3)]));
    let (_, case) = d.apply_generator(1).unwrap();
    assert_eq!(case, MutationCase::Disjoint);
}

#[test]
fn genus_one_quiver() {
    let d = Dissection::reference(g1b2());
    let sk = d.skeleton().unwrap();
    let g = GradingData::zero(4);
    let q = quiver_of(&sk, &g).unwrap();
    assert_eq!(q.vertices, 4);
    let names: Vec<&str> = q.arrows.iter().map(|a| a.name.as_str()).collect();
    assert_eq!(names, ["a1", "b1", "c1", "a2", "b2", "c2"]);
    assert_eq!(q.relations.len(), 4);
    match hom_dim(&sk, &g, 0, 1).unwrap() {
        HomDim::Finite { total, by_degree } => {
            assert_eq!(total, 2);
            assert_eq!(by_degree.get(&0), Some(&2));
        }
        HomDim::Infinite => panic!("finite expected"),
    }
    assert_eq!(hom_dim(&sk, &g, 0, 3).unwrap().total(), Some(2));
    assert_eq!(hom_dim(&sk, &g, 2, 0).unwrap().total(), Some(0));
    assert!(hom_dim(&sk, &g, 0, 4).is_err());
}

#[test]
fn arrow_degrees_follow_the_grading() {
    let d = Dissection::reference(g1b2());
    let sk = d.skeleton().unwrap();
    let text = "a1 1\nb1 0\nc1 -2\na2 0\nb2 3\nc2 0\n";
    let g = GradingData::parse(&sk, text).unwrap();
    let q = quiver_of(&sk, &g).unwrap();
    let degrees: Vec<i64> = q.arrows.iter().map(|a| a.degree).collect();
    assert_eq!(degrees, [1, 0, -2, 0, 3, 0]);
    assert!(GradingData::parse(&sk, "a1 1\n").is_err());
    let err = GradingData::parse(&sk, "a1 x\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 1, .. }));
}

#[test]
fn sequence_violations() {
    let c = chart(3, &[(1, 2), (2, 3)]);
    let d = Dissection::reference(c.clone());
    assert_eq!(is_exceptional_sequence(&d), Ok(()));
    let swapped = Dissection::new(c.clone(), vec![d.arcs()[1].clone(), d.arcs()[0].clone()]);
    let err = is_exceptional_sequence(&swapped).unwrap_err();
    assert!(matches!(err, SequenceViolation::Backward { from: 2, to: 1, .. }), "{err}");
    assert!(err.to_string().starts_with("order:"));
    let short = Dissection::new(c, vec![d.arcs()[0].clone()]);
    assert!(matches!(
        is_exceptional_sequence(&short),
        Err(SequenceViolation::Fullness { expected: 2, found: 1 })
    ));
}

#[test]
fn intersection_indices_sum_to_one() {
    assert!(index_symmetry_check(IntersectionIndex(3), IntersectionIndex(-2)));
    assert!(!index_symmetry_check(IntersectionIndex(0), IntersectionIndex(0)));
}

#[test]
fn deck_involution_and_twists() {
    assert!(matches!(
        DeckInvolution::of_double_cover(&chart(3, &[(1, 2), (2, 3)])),
        Err(Error::Domain(_))
    ));
    let c = g1b2();
    let deck = DeckInvolution::of_double_cover(&c).unwrap();
    let base = Dissection::reference(c);
    assert!(deck.fixes_dissection(&base));
    let twisted = twist_dissection(&base, 0, 1).unwrap();
    assert!(twisted.validate().is_valid());
    assert_eq!(deck.moved_arcs(&twisted), vec![1, 2, 3, 4]);
    assert_eq!(twisted.hurwitz().unwrap(), base.hurwitz().unwrap());
    assert_eq!(twist_dissection(&twisted, 0, -1).unwrap(), base);
    let both = twist_dissection(&twisted, 1, 1).unwrap();
    assert!(deck.fixes_dissection(&both));
}

#[test]
fn explore_limits() {
    let d = Dissection::reference(chart(4, &[(1, 2), (2, 3), (3, 4)]));
    let full = explore(&d, 10, 1000).unwrap();
    assert!(full.complete);
    assert_eq!(full.states.len(), 16);
    for s in &full.states {
        assert_eq!(braid_act(&d, &s.word).unwrap().0, s.dissection);
    }
    let capped = explore(&d, 10, 5).unwrap();
    assert!(!capped.complete);
    assert_eq!(capped.states.len(), 5);
    let shallow = explore(&d, 1, 1000).unwrap();
    assert!(!shallow.complete);
    assert_eq!(shallow.states.len(), 5);
}

#[test]
fn separation() {
    let c = g1b2();
    let d = Dissection::reference(c.clone());
    let (e, _) = braid_act(&d, &BraidWord(vec![2, 2, -3])).unwrap();
    match separate(&d, &e, 6, 100_000).unwrap() {
        SeparationCertificate::Path(w) => assert_eq!(braid_act(&d, &w).unwrap().0, e),
        other => panic!("{other}"),
    }
    assert_eq!(separate(&d, &e, 1, 100_000).unwrap().kind(), "inconclusive");
    let other = Dissection::reference(chart(3, &[(1, 2), (2, 3)]));
    assert!(matches!(separate(&d, &other, 4, 1000), Err(Error::Domain(_))));
    let disk = chart(3, &[(1, 2), (2, 3), (1, 2), (1, 3)]);
    let a = Dissection::reference(disk);
    let (b, _) = braid_act(&a, &BraidWord(vec![1])).unwrap();
    assert_eq!(separate(&a, &b, 4, 1000).unwrap().kind(), "path");
}
