#![allow(dead_code)]

use twogroups::fincat::{MorId, ObjId};
use twogroups::group::FinGroup;
use twogroups::monoidal::MonoidalStructure;
use twogroups::report::StructureError;
use twogroups::twogroup::{
    deloop_abelian, from_crossed_module, from_group, skeletal_cyclic, CoherentData, CoherentTwoGroup, CrossedModule,
};

/// Every coherent instance the generators produce, with a label.
pub fn coherent_suite() -> Vec<(String, CoherentTwoGroup)> {
    let mut out = Vec::new();
    for g in ["Z2", "Z3", "S3", "Z4"] {
        out.push((format!("group:{g}"), from_group(&FinGroup::by_name(g).unwrap())));
    }
    for n in 2..=5 {
        // in a delooping the zig-zags read i + e = 0
        let (m, d) = deloop_abelian(&FinGroup::cyclic(n), 1, n - 1).unwrap();
        out.push((format!("deloop:Z{n}:1:{}", n - 1), CoherentTwoGroup::new(m, d)));
    }
    for (g, h, t, a) in [("Z2", "Z2", "id", "trivial"), ("S3", "S3", "id", "conj"), ("Z3", "Z3", "trivial", "trivial")] {
        let x = CrossedModule::from_names(g, h, t, a).unwrap();
        out.push((format!("xmod:{g}:{h}:{t}:{a}"), from_crossed_module(&x)));
    }
    for (n, p) in [(2, 1), (3, 1), (3, 2), (4, 1)] {
        out.push((format!("skeletal:Z{n}:{p}"), skeletal_cyclic(n, p)));
    }
    out
}

/// The monoidal structures required to pass the coherence suite.
pub fn monoidal_suite() -> Vec<(String, MonoidalStructure)> {
    let mut out = Vec::new();
    for g in ["Z2", "Z3", "S3", "Z4"] {
        out.push((format!("group:{g}"), from_group(&FinGroup::by_name(g).unwrap()).into_parts().0));
    }
    for n in 2..=5 {
        out.push((format!("deloop:Z{n}"), deloop_abelian(&FinGroup::cyclic(n), 0, 0).unwrap().0));
    }
    let x = CrossedModule::from_names("Z2", "Z2", "id", "trivial").unwrap();
    out.push(("xmod:Z2:Z2:id:trivial".into(), from_crossed_module(&x).into_parts().0));
    out
}

/// Which structure table to perturb.
#[derive(Clone, Copy, Debug)]
pub enum Table {
    TensorMor,
    Assoc,
    Lunit,
    Runit,
}

/// Rebuilds `m` with one entry of one table replaced. `None` if the new
/// value equals the old one.
pub fn mutate(m: &MonoidalStructure, table: Table, index: usize, value: usize) -> Option<Result<MonoidalStructure, StructureError>> {
    let c = m.base();
    let tensor_ob: Vec<ObjId> = m.objects().flat_map(|x| m.objects().map(move |y| (x, y))).map(|(x, y)| m.tensor_ob(x, y)).collect();
    let mut tensor_mor: Vec<MorId> = c.morphisms().flat_map(|f| c.morphisms().map(move |g| (f, g))).map(|(f, g)| m.tensor_mor(f, g)).collect();
    let mut assoc = m.assoc_table().to_vec();
    let mut lunit = m.lunit_table().to_vec();
    let mut runit = m.runit_table().to_vec();
    let slot = match table {
        Table::TensorMor => &mut tensor_mor,
        Table::Assoc => &mut assoc,
        Table::Lunit => &mut lunit,
        Table::Runit => &mut runit,
    };
    let i = index % slot.len();
    if slot[i] == MorId(value) {
        return None;
    }
    slot[i] = MorId(value);
    Some(MonoidalStructure::from_tables(c.clone(), tensor_ob, tensor_mor, m.unit(), assoc, lunit, runit))
}

/// All `(i, e)` choices on the delooping of `Z/n`.
pub fn deloop_choices(n: usize) -> Vec<(usize, usize, MonoidalStructure, CoherentData)> {
    let mut out = Vec::new();
    for i in 0..n {
        for e in 0..n {
            let (m, d) = deloop_abelian(&FinGroup::cyclic(n), i, e).unwrap();
            out.push((i, e, m, d));
        }
    }
    out
}
