mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{coherent_suite, deloop_choices, monoidal_suite, mutate, Table};
use twogroups::diagram::{
    evaluate, generator_count, iprime_diagram, normalise, random_walk, replay, validate_diagram, zigzag1_diagram,
    zigzag2_diagram, Cell, Diagram, Rule, Wire, ALL_RULES,
};
use twogroups::fincat::{product_category, validate_category, FinCategory, MorId, ObjId};
use twogroups::group::FinGroup;
use twogroups::monoidal::validate_monoidal;
use twogroups::twogroup::{check_inv_functorial, skeletal_cyclic, zigzag1_holds, zigzag2_holds, CoherentData};

fn start_diagram(k: usize) -> Diagram {
    match k % 6 {
        0 => Diagram::wire(Wire::Down),
        1 => Diagram::wire(Wire::Up),
        2 => Diagram::identity(vec![]),
        3 => iprime_diagram(),
        4 => zigzag1_diagram(&iprime_diagram()).unwrap(),
        _ => zigzag2_diagram(&iprime_diagram()).unwrap(),
    }
}

fn walk(seed: u64, start: usize, steps: usize, rules: &[Rule]) -> (Diagram, Diagram, twogroups::diagram::RewriteTrace) {
    let d = start_diagram(start);
    let cap = generator_count(&d) + 4;
    let (end, trace) = random_walk(&d, steps, cap, rules, &mut StdRng::seed_from_u64(seed));
    (d, end, trace)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>(), start in 0usize..6, steps in 0usize..8) {
        let (_, d, _) = walk(seed, start, steps, &ALL_RULES);
        let n = normalise(&d);
        prop_assert!(validate_diagram(&n));
        prop_assert_eq!(normalise(&n), n.clone());
        prop_assert_eq!(generator_count(&n), generator_count(&d));
    }

    #[test]
    fn traces_replay_exactly(seed in any::<u64>(), start in 0usize..6, steps in 0usize..10) {
        let (d, end, trace) = walk(seed, start, steps, &ALL_RULES);
        prop_assert_eq!(replay(&d, &trace).unwrap(), end);
        let text = trace.to_string();
        prop_assert_eq!(replay(&d, &text.parse().unwrap()).unwrap(), normalise(&replay(&d, &trace).unwrap()));
    }

    #[test]
    fn identity_layers_do_not_change_values(seed in any::<u64>(), start in 0usize..6, at in 0usize..8) {
        let (_, d, _) = walk(seed, start, 4, &ALL_RULES);
        let at = at % (d.layers.len() + 1);
        let wires = d.boundary(at);
        let mut padded = d.clone();
        padded.layers.insert(at, wires.iter().map(|&w| Cell::Id(w)).collect());
        prop_assert!(validate_diagram(&padded));
        let g = skeletal_cyclic(3, 1);
        for x in g.monoidal().objects() {
            prop_assert_eq!(
                evaluate(&d, g.monoidal(), g.data(), x).unwrap(),
                evaluate(&padded, g.monoidal(), g.data(), x).unwrap()
            );
        }
    }

    #[test]
    fn rewriting_preserves_values(seed in any::<u64>(), start in 0usize..6, steps in 1usize..8) {
        let (d, end, _) = walk(seed, start, steps, &ALL_RULES);
        for (name, g) in coherent_suite() {
            for x in g.monoidal().objects() {
                let a = evaluate(&d, g.monoidal(), g.data(), x).unwrap();
                let b = evaluate(&end, g.monoidal(), g.data(), x).unwrap();
                prop_assert_eq!(a, b, "{} at {}", name, x);
            }
        }
    }

    #[test]
    fn rewriting_needs_only_invertibility(seed in any::<u64>(), start in 0usize..6, steps in 1usize..8, i in 0usize..5, e in 0usize..5) {
        // the rules never use the zig-zag identities, so any invertible i, e will do
        let (d, end, _) = walk(seed, start, steps, &ALL_RULES);
        let (m, ch) = twogroups::twogroup::deloop_abelian(&FinGroup::cyclic(5), i, e).unwrap();
        let x = ObjId(0);
        prop_assert_eq!(evaluate(&d, &m, &ch, x).unwrap(), evaluate(&end, &m, &ch, x).unwrap());
    }

    #[test]
    fn products_of_categories_are_categories(a in 1usize..4, b in 1usize..4, kind in 0usize..3) {
        let left = FinCategory::deloop(&FinGroup::cyclic(a));
        let right = match kind {
            0 => FinCategory::discrete(b),
            1 => FinCategory::arrow_category(),
            _ => FinCategory::deloop(&FinGroup::cyclic(b)),
        };
        let p = product_category(&left, &right);
        prop_assert!(validate_category(&p).passed());
        prop_assert_eq!(p.object_count(), left.object_count() * right.object_count());
        prop_assert_eq!(p.morphism_count(), left.morphism_count() * right.morphism_count());
    }

    #[test]
    fn single_mutations_are_detected(which in 0usize..9, table in 0usize..4, index in any::<usize>(), value in any::<usize>()) {
        let (name, m) = &monoidal_suite()[which];
        let table = [Table::TensorMor, Table::Assoc, Table::Lunit, Table::Runit][table];
        let value = value % m.base().morphism_count();
        if let Some(result) = mutate(m, table, index, value) {
            // either the tables no longer type-check, or some law fails
            if let Ok(bad) = result {
                prop_assert!(!validate_monoidal(&bad).passed(), "{} {:?}", name, table);
            }
        }
    }

    #[test]
    fn zigzags_agree_under_perturbation(n in 2usize..5, p in 1usize..3, obj in 0usize..4, di in 0usize..4, de in 0usize..4) {
        // change the unit and counit labels of one object of a skeletal instance
        let g = skeletal_cyclic(n, p);
        let (m, d) = (g.monoidal(), g.data());
        let x = obj % n;
        let relabel = |f: MorId, by: usize| MorId((f.0 / n + by) % n * n + f.0 % n);
        let mut units = d.unit_table().to_vec();
        let mut counits = d.counit_table().to_vec();
        units[x] = relabel(units[x], di);
        counits[x] = relabel(counits[x], de);
        let d2 = CoherentData::new(m, d.duals().to_vec(), units, counits).unwrap();
        let ox = ObjId(x);
        let z1 = zigzag1_holds(m, &d2, ox);
        let z2 = zigzag2_holds(m, &d2, ox);
        prop_assert_eq!(z1, z2);
        let all = m.objects().all(|y| zigzag1_holds(m, &d2, y));
        prop_assert_eq!(all, check_inv_functorial(m, &d2).passed());
    }
}

#[test]
fn deloop_zigzags_match_inv_functoriality() {
    for n in [3, 5] {
        for (i, e, m, d) in deloop_choices(n) {
            let x = ObjId(0);
            let z1 = zigzag1_holds(&m, &d, x);
            assert_eq!(z1, zigzag2_holds(&m, &d, x), "Z{n} i={i} e={e}");
            assert_eq!(z1, check_inv_functorial(&m, &d).passed(), "Z{n} i={i} e={e}");
        }
    }
}
