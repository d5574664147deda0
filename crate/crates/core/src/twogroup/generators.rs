//! Instance generators.

use std::sync::Arc;

use super::{CoherentData, CoherentTwoGroup, CrossedModule};
use crate::fincat::{FinCategory, MorArrow, MorId, ObjId};
use crate::group::FinGroup;
use crate::monoidal::MonoidalStructure;
use crate::report::StructureError;

/// The discrete strict 2-group of a group: objects are elements, tensor is
/// the group law, every structure map and every `i`, `e` is an identity,
/// and `x̄ = x⁻¹`.
pub fn from_group(g: &FinGroup) -> CoherentTwoGroup {
    let n = g.order();
    let table: Vec<usize> = (0..n * n).map(|k| g.mul(k / n, k % n)).collect();
    let m = MonoidalStructure::discrete_strict(n, &table, g.identity())
        .expect("group tables give a well-typed structure");
    let unit_id = MorId(g.identity());
    let data = CoherentData::new(
        &m,
        g.elements().map(|a| ObjId(g.inv(a))).collect(),
        vec![unit_id; n],
        vec![unit_id; n],
    )
    .expect("group duals are well typed");
    CoherentTwoGroup::new(m, data)
}

/// One object, morphisms the elements of an abelian group, tensor equal to
/// composition, all structure maps zero. The chosen `i` and `e` are the
/// given elements.
pub fn deloop_abelian(
    a: &FinGroup,
    i: usize,
    e: usize,
) -> Result<(MonoidalStructure, CoherentData), StructureError> {
    if !a.is_abelian() {
        return Err(StructureError::Precondition(format!(
            "{} is not abelian, so the interchange law fails",
            a.name()
        )));
    }
    let n = a.order();
    if i >= n || e >= n {
        return Err(StructureError::Precondition(format!(
            "unit or counit choice out of range for {}",
            a.name()
        )));
    }
    let base = Arc::new(FinCategory::deloop(a));
    let zero = MorId(a.identity());
    let tensor_mor = (0..n * n).map(|k| MorId(a.mul(k / n, k % n))).collect();
    let m = MonoidalStructure::from_tables(
        base,
        vec![ObjId(0)],
        tensor_mor,
        ObjId(0),
        vec![zero],
        vec![zero],
        vec![zero],
    )?;
    let d = CoherentData::new(&m, vec![ObjId(0)], vec![MorId(i)], vec![MorId(e)])?;
    Ok((m, d))
}

/// Base category and tensor tables of the strict 2-group of a crossed
/// module. Morphism `h * |G| + g` is `(h, g): g -> t(h) g`.
fn crossed_tables(x: &CrossedModule) -> (Arc<FinCategory>, Vec<ObjId>, Vec<MorId>) {
    let (g, h) = (x.base_group(), x.fibre_group());
    let (ng, nh) = (g.order(), h.order());
    let m = ng * nh;
    let mor = |hh: usize, gg: usize| MorId(hh * ng + gg);
    let arrows = (0..m)
        .map(|k| {
            let (hh, gg) = (k / ng, k % ng);
            MorArrow {
                dom: ObjId(gg),
                cod: ObjId(g.mul(x.t(hh), gg)),
            }
        })
        .collect::<Vec<_>>();
    let identity = g.elements().map(|gg| mor(h.identity(), gg)).collect();
    let mut compose = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            let (h1, g1) = (p / ng, p % ng);
            let (h2, g2) = (q / ng, q % ng);
            compose.push((g2 == g.mul(x.t(h1), g1)).then(|| mor(h.mul(h2, h1), g1)));
        }
    }
    let base = Arc::new(FinCategory::new(ng, arrows, identity, compose).expect("crossed module category is well formed"));
    let tensor_ob = (0..ng * ng).map(|k| ObjId(g.mul(k / ng, k % ng))).collect();
    let mut tensor_mor = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            let (h1, g1) = (p / ng, p % ng);
            let (h2, g2) = (q / ng, q % ng);
            tensor_mor.push(mor(h.mul(h1, x.act(g1, h2)), g.mul(g1, g2)));
        }
    }
    (base, tensor_ob, tensor_mor)
}

/// The strict 2-group presented by a crossed module: objects `G`, a
/// morphism `g -> t(h) g` for every `h`, composition multiplying labels on
/// the left, tensor `(h1, g1)⊗(h2, g2) = (h1 α(g1, h2), g1 g2)`. Duals are
/// group inverses and `i`, `e` are identities.
pub fn from_crossed_module(x: &CrossedModule) -> CoherentTwoGroup {
    let g = x.base_group();
    let n = g.order();
    let (base, tensor_ob, tensor_mor) = crossed_tables(x);
    let ids: Vec<MorId> = base.identities().to_vec();
    let assoc = (0..n * n * n)
        .map(|k| ids[g.mul(g.mul(k / (n * n), (k / n) % n), k % n)])
        .collect();
    let m = MonoidalStructure::from_tables(base, tensor_ob, tensor_mor, ObjId(g.identity()), assoc, ids.clone(), ids.clone())
        .expect("crossed module structure is well typed");
    let unit_id = ids[g.identity()];
    let data = CoherentData::new(
        &m,
        g.elements().map(|a| ObjId(g.inv(a))).collect(),
        vec![unit_id; n],
        vec![unit_id; n],
    )
    .expect("group duals are well typed");
    CoherentTwoGroup::new(m, data)
}

/// A skeletal, non-strict 2-group with objects and automorphism labels both
/// in `Z/n` and associator given by the 3-cocycle
/// `ω(a, b, c) = p · a · ⌊(b + c) / n⌋ mod n`. Unitors are trivial.
/// Coherent data: `x̄ = -x`, `i = 0`, `e = -ω(x, x̄, x)`.
pub fn skeletal_cyclic(n: usize, p: usize) -> CoherentTwoGroup {
    assert!(n > 0, "skeletal 2-group of order 0");
    let zn = || FinGroup::cyclic(n);
    let x = CrossedModule::from_names(zn().name(), zn().name(), "trivial", "trivial")
        .expect("trivial crossed module");
    let (base, tensor_ob, tensor_mor) = crossed_tables(&x);
    let omega = |a: usize, b: usize, c: usize| (p % n) * a * ((b + c) / n) % n;
    // morphism (label, g) has index label * n + g
    let mor = |label: usize, g: usize| MorId(label * n + g);
    let assoc = (0..n * n * n)
        .map(|k| {
            let (a, b, c) = (k / (n * n), (k / n) % n, k % n);
            mor(omega(a, b, c), (a + b + c) % n)
        })
        .collect();
    let ids: Vec<MorId> = base.identities().to_vec();
    let m = MonoidalStructure::from_tables(base, tensor_ob, tensor_mor, ObjId(0), assoc, ids.clone(), ids)
        .expect("skeletal structure is well typed");
    let dual = |a: usize| (n - a) % n;
    let data = CoherentData::new(
        &m,
        (0..n).map(|a| ObjId(dual(a))).collect(),
        vec![mor(0, 0); n],
        (0..n).map(|a| mor((n - omega(a, dual(a), a)) % n, 0)).collect(),
    )
    .expect("skeletal duals are well typed");
    CoherentTwoGroup::new(m, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{is_strict, validate_monoidal};
    use crate::twogroup::validate_coherent;

    #[test]
    fn group_instances() {
        for name in ["Z2", "Z3", "S3"] {
            let g = from_group(&FinGroup::by_name(name).unwrap());
            assert_eq!(g.monoidal().object_count(), FinGroup::by_name(name).unwrap().order());
            assert!(validate_coherent(&g).passed(), "{name}");
        }
    }

    #[test]
    fn deloop_requires_abelian() {
        assert!(deloop_abelian(&FinGroup::symmetric3(), 0, 0).is_err());
        assert!(deloop_abelian(&FinGroup::cyclic(3), 3, 0).is_err());
    }

    #[test]
    fn degenerate_crossed_modules() {
        let x = CrossedModule::from_names("Z2", "1", "trivial", "trivial").unwrap();
        let a = from_crossed_module(&x);
        let b = from_group(&FinGroup::cyclic(2));
        assert_eq!(a, b);

        let x = CrossedModule::from_names("1", "Z3", "trivial", "trivial").unwrap();
        let a = from_crossed_module(&x);
        let (m, d) = deloop_abelian(&FinGroup::cyclic(3), 0, 0).unwrap();
        assert_eq!(a.monoidal(), &m);
        assert_eq!(a.data(), &d);
    }

    #[test]
    fn crossed_module_instances() {
        let x = CrossedModule::from_names("Z2", "Z2", "id", "trivial").unwrap();
        let g = from_crossed_module(&x);
        assert_eq!(g.monoidal().object_count(), 2);
        assert_eq!(g.monoidal().base().morphism_count(), 4);
        assert!(is_strict(g.monoidal()));
        assert!(validate_coherent(&g).passed());

        let x = CrossedModule::from_names("S3", "S3", "id", "conj").unwrap();
        let g = from_crossed_module(&x);
        assert!(validate_coherent(&g).passed());
    }

    #[test]
    fn skeletal_instances_are_coherent_and_not_strict() {
        for (n, p) in [(2, 1), (3, 1), (3, 2), (4, 1)] {
            let g = skeletal_cyclic(n, p);
            assert!(validate_monoidal(g.monoidal()).passed(), "n={n} p={p}");
            assert!(validate_coherent(&g).passed(), "n={n} p={p}");
            assert!(!is_strict(g.monoidal()));
        }
        assert!(is_strict(skeletal_cyclic(3, 0).monoidal()));
    }
}
