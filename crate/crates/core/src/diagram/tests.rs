use super::*;
use crate::bracket::jones;
use crate::diagram::build::torus_2;
use crate::diagram::random::{positive_diagram, signed_diagram};
use proptest::prelude::*;

const FIG8_PD: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const TREFOIL_PD: &str = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";

/// Pairs of edges that lie on the same two faces and whose removal separates
/// the crossings: prime decomposition points, found by exhaustive search.
fn decomposing_pairs(d: &Diagram) -> usize {
    let faces = d.faces();
    let edges = d.edges();
    let n = d.crossing_count();
    let sides = |e: End| {
        let a = faces.corner_face[e.crossing][e.slot as usize];
        let b = faces.corner_face[e.crossing][((e.slot + 3) % 4) as usize];
        (a.min(b), a.max(b))
    };
    let mut count = 0;
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (e, f) = (edges[i], edges[j]);
            if sides(e) != sides(f) || sides(e).0 == sides(e).1 {
                continue;
            }
            let (e2, f2) = (d.link(e), d.link(f));
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                for s in 0..4u8 {
                    let here = End::new(x, s);
                    if [e, e2, f, f2].contains(&here) {
                        continue;
                    }
                    let y = d.link(here).crossing;
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if seen.iter().any(|&b| !b) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn pd_round_trip_and_jones() {
    let d = Diagram::parse_pd(FIG8_PD).unwrap();
    assert_eq!(d.crossing_count(), 4);
    assert_eq!(d.writhe(), 0);
    let again = Diagram::parse_pd(&d.to_pd()).unwrap();
    assert_eq!(again.canonical_code(), d.canonical_code());
    assert_eq!(jones(&d, 1 << 10).unwrap().to_list_notation(), "(1 -1 [1] -1 1)");
    let t = Diagram::parse_pd(TREFOIL_PD).unwrap();
    assert_eq!(t.writhe().abs(), 3);
}

#[test]
fn pd_errors() {
    assert_eq!(Diagram::parse_pd("X[1,2,1,2]"), Err(DiagramError::NonPlanar));
    assert!(matches!(Diagram::parse_pd("X[1,2,3]"), Err(DiagramError::Parse(_))));
    assert!(matches!(Diagram::parse_pd("X[1,2,3,4]"), Err(DiagramError::DanglingLabel(_))));
    assert!(matches!(Diagram::parse_pd("hello"), Err(DiagramError::Parse(_))));
    assert_eq!(Diagram::parse_pd("PD[]").unwrap().crossing_count(), 0);
}

#[test]
fn braid_closures() {
    let d = Diagram::from_braid(&Braid::parse("3: 1 -2 1 -2").unwrap());
    assert_eq!(d.crossing_count(), 4);
    assert_eq!(d.component_count(), 1);
    assert!(Braid::parse("2: 2").is_err());
    assert_eq!(Diagram::from_braid(&Braid::parse("3: 1 1").unwrap()).component_count(), 3);
}

#[test]
fn connected_sums_count_primes() {
    let t = torus_2(3);
    let f = Diagram::parse_pd(FIG8_PD).unwrap();
    assert_eq!(t.prime_factor_count().unwrap(), 1);
    assert_eq!(t.connected_sum(&f).unwrap().prime_factor_count().unwrap(), 2);
    let three = t.connected_sum(&f).unwrap().connected_sum(&t.mirror()).unwrap();
    assert_eq!(three.prime_factor_count().unwrap(), 3);
    assert_eq!(three.crossing_count(), 10);
    let kinked = t.add_kink(End::new(0, 2), Sign::Negative).unwrap();
    assert_eq!(kinked.prime_factor_count(), Err(DiagramError::NotReduced { crossing: 3 }));
    assert_eq!(Diagram::unlink(2).prime_factor_count(), Err(DiagramError::NotConnected));
}

#[test]
fn kinks_are_nugatory() {
    let t = torus_2(3);
    for sign in [Sign::Positive, Sign::Negative] {
        let k = t.add_kink(End::new(1, 2), sign).unwrap();
        k.validate().unwrap();
        assert_eq!(k.nugatory_crossings(), vec![3]);
        assert_eq!(k.writhe(), 3 + sign.value());
        assert_eq!(jones(&k, 1 << 10).unwrap(), jones(&t, 1 << 10).unwrap());
        assert_eq!(k.remove_nugatory().canonical_code(), t.canonical_code());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pd_round_trip(seed in 0u64..100_000, c in 2usize..12) {
        let d = signed_diagram(seed, c).unwrap();
        let e = Diagram::parse_pd(&d.to_pd()).unwrap();
        prop_assert_eq!(e.canonical_code(), d.canonical_code());
        prop_assert_eq!(e.writhe(), d.writhe());
    }

    #[test]
    fn switch_and_mirror_are_involutions(seed in 0u64..100_000, c in 2usize..12) {
        let d = signed_diagram(seed, c).unwrap();
        for x in 0..c {
            let s = d.switch(x).unwrap();
            prop_assert_eq!(s.sign(x), d.sign(x).flip());
            prop_assert_eq!(s.switch(x).unwrap(), d.clone());
        }
        prop_assert_eq!(d.mirror().mirror(), d.clone());
        prop_assert_eq!(d.mirror().writhe(), -d.writhe());
    }

    #[test]
    fn faces_of_connected_diagrams(seed in 0u64..100_000, c in 2usize..14) {
        let d = positive_diagram(seed, c).unwrap();
        prop_assert!(d.is_connected());
        prop_assert_eq!(d.faces().faces.len(), c + 2);
        let corners: usize = d.faces().faces.iter().map(|f| f.len()).sum();
        prop_assert_eq!(corners, 4 * c);
    }

    #[test]
    fn prime_count_matches_exhaustive_search(seeds in proptest::collection::vec((0u64..100_000, 2usize..7), 1..4)) {
        let parts: Vec<Diagram> = seeds.iter().map(|&(s, c)| positive_diagram(s, c).unwrap()).collect();
        let mut sum = parts[0].clone();
        for p in &parts[1..] {
            sum = sum.connected_sum(p).unwrap();
        }
        // each part contributes its own prime factors; a part with no decomposing pair is prime
        let by_parts: usize = parts.iter().map(|p| p.prime_factor_count().unwrap()).sum();
        prop_assert_eq!(sum.prime_factor_count().unwrap(), by_parts);
        for (p, f) in parts.iter().zip(parts.iter().map(|p| p.prime_factor_count().unwrap())) {
            prop_assert_eq!(f == 1, decomposing_pairs(p) == 0);
        }
        prop_assert_eq!(decomposing_pairs(&sum) == 0, by_parts == 1);
    }
}
