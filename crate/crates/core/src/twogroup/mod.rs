//! Weak and coherent 2-groups: weak-inverse search, zig-zag identities and
//! the contravariant functors `⁻¹`, `*` and the covariant `inv`.

mod crossed;
mod generators;

use std::sync::Arc;

pub use crossed::CrossedModule;
pub use generators::{deloop_abelian, from_crossed_module, from_group, skeletal_cyclic};

use crate::fincat::{FinFunctor, MorId, ObjId};
use crate::monoidal::{validate_monoidal, MonoidalStructure};
use crate::report::{Law, StructureError, ValidationReport};

/// A chosen dual `x̄` for every object with `i_x: 1 -> x⊗x̄` and
/// `e_x: x̄⊗x -> 1`. Construction checks typing only; invertibility and the
/// zig-zag identities are laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentData {
    dual: Vec<ObjId>,
    unit_i: Vec<MorId>,
    counit_e: Vec<MorId>,
}

impl CoherentData {
    pub fn new(
        m: &MonoidalStructure,
        dual: Vec<ObjId>,
        unit_i: Vec<MorId>,
        counit_e: Vec<MorId>,
    ) -> Result<Self, StructureError> {
        let n = m.object_count();
        let c = m.base();
        for (table, len) in [("dual", dual.len()), ("unit_i", unit_i.len()), ("counit_e", counit_e.len())] {
            if len != n {
                return Err(StructureError::TableSize {
                    table,
                    expected: n,
                    found: len,
                });
            }
        }
        if let Some((index, d)) = dual.iter().enumerate().find(|(_, d)| d.0 >= n) {
            return Err(StructureError::DanglingObject {
                table: "dual",
                index,
                value: d.0,
                count: n,
            });
        }
        for (table, data) in [("unit_i", &unit_i), ("counit_e", &counit_e)] {
            if let Some((index, f)) = data.iter().enumerate().find(|(_, f)| f.0 >= c.morphism_count()) {
                return Err(StructureError::DanglingMorphism {
                    table,
                    index,
                    value: f.0,
                    count: c.morphism_count(),
                });
            }
        }
        for x in m.objects() {
            let xd = dual[x.0];
            let i = c.arrow(unit_i[x.0]);
            if i.dom != m.unit() || i.cod != m.tensor_ob(x, xd) {
                return Err(StructureError::Mistyped {
                    table: "unit_i",
                    index: x.0,
                    detail: format!("expected 1 -> {x}⊗{xd}"),
                });
            }
            let e = c.arrow(counit_e[x.0]);
            if e.dom != m.tensor_ob(xd, x) || e.cod != m.unit() {
                return Err(StructureError::Mistyped {
                    table: "counit_e",
                    index: x.0,
                    detail: format!("expected {xd}⊗{x} -> 1"),
                });
            }
        }
        Ok(Self {
            dual,
            unit_i,
            counit_e,
        })
    }

    pub fn dual(&self, x: ObjId) -> ObjId {
        self.dual[x.0]
    }

    pub fn unit_i(&self, x: ObjId) -> MorId {
        self.unit_i[x.0]
    }

    pub fn counit_e(&self, x: ObjId) -> MorId {
        self.counit_e[x.0]
    }

    pub fn duals(&self) -> &[ObjId] {
        &self.dual
    }

    pub fn unit_table(&self) -> &[MorId] {
        &self.unit_i
    }

    pub fn counit_table(&self) -> &[MorId] {
        &self.counit_e
    }

    /// Copy with `i_x` replaced; typing is the caller's responsibility.
    pub(crate) fn with_units(&self, unit_i: Vec<MorId>) -> Self {
        Self {
            dual: self.dual.clone(),
            unit_i,
            counit_e: self.counit_e.clone(),
        }
    }
}

/// Witness that `y` is a weak inverse of `x`: `gamma: x⊗y -> 1` and
/// `xi: y⊗x -> 1`, both isomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeakInverse {
    pub inverse: ObjId,
    pub gamma: MorId,
    pub xi: MorId,
}

/// A monoidal structure certified to have weakly invertible objects and
/// invertible morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakTwoGroup {
    monoidal: MonoidalStructure,
    certificates: Vec<WeakInverse>,
}

impl WeakTwoGroup {
    pub fn monoidal(&self) -> &MonoidalStructure {
        &self.monoidal
    }

    pub fn certificate(&self, x: ObjId) -> WeakInverse {
        self.certificates[x.0]
    }

    pub fn certificates(&self) -> &[WeakInverse] {
        &self.certificates
    }

    /// Builds a weak 2-group from given certificates after checking them.
    pub fn with_certificates(
        monoidal: MonoidalStructure,
        certificates: Vec<WeakInverse>,
    ) -> Result<Self, ValidationReport> {
        let mut report = ValidationReport::new();
        let c = monoidal.base();
        for f in c.morphisms() {
            report.check(Law::MorphismInvertible, monoidal.inverse(f).is_some(), || vec![f.0]);
        }
        if certificates.len() != monoidal.object_count() {
            report.fail(Law::WeakInverse, vec![certificates.len()]);
            return Err(report);
        }
        for (x, w) in monoidal.objects().zip(&certificates) {
            let ok = w.inverse.0 < monoidal.object_count()
                && w.gamma.0 < c.morphism_count()
                && w.xi.0 < c.morphism_count()
                && c.dom(w.gamma) == monoidal.tensor_ob(x, w.inverse)
                && c.cod(w.gamma) == monoidal.unit()
                && c.dom(w.xi) == monoidal.tensor_ob(w.inverse, x)
                && c.cod(w.xi) == monoidal.unit()
                && monoidal.inverse(w.gamma).is_some()
                && monoidal.inverse(w.xi).is_some();
            report.check(Law::WeakInverse, ok, || vec![x.0]);
        }
        if report.passed() {
            Ok(Self {
                monoidal,
                certificates,
            })
        } else {
            Err(report)
        }
    }
}

/// A monoidal structure with chosen adjoint-equivalence data. Construction
/// checks typing only; [`validate_coherent`] checks the laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentTwoGroup {
    monoidal: MonoidalStructure,
    data: CoherentData,
}

impl CoherentTwoGroup {
    pub fn new(monoidal: MonoidalStructure, data: CoherentData) -> Self {
        Self { monoidal, data }
    }

    pub fn monoidal(&self) -> &MonoidalStructure {
        &self.monoidal
    }

    pub fn data(&self) -> &CoherentData {
        &self.data
    }

    pub fn into_parts(self) -> (MonoidalStructure, CoherentData) {
        (self.monoidal, self.data)
    }
}

/// First weak inverse in index order: ascending `y`, then ascending
/// morphism ids for `gamma` and `xi`.
pub fn find_weak_inverse(m: &MonoidalStructure, x: ObjId) -> Option<WeakInverse> {
    let c = m.base();
    m.objects().find_map(|y| {
        let gamma = c
            .hom(m.tensor_ob(x, y), m.unit())
            .find(|&f| m.inverse(f).is_some())?;
        let xi = c
            .hom(m.tensor_ob(y, x), m.unit())
            .find(|&f| m.inverse(f).is_some())?;
        Some(WeakInverse {
            inverse: y,
            gamma,
            xi,
        })
    })
}

/// Certifies `m` as a weak 2-group, or reports the monoidal-law failures,
/// the non-invertible morphisms and the objects without weak inverse.
pub fn check_weak_2group(m: &MonoidalStructure) -> Result<WeakTwoGroup, ValidationReport> {
    let mut report = validate_monoidal(m);
    for f in m.base().morphisms() {
        report.check(Law::MorphismInvertible, m.inverse(f).is_some(), || vec![f.0]);
    }
    let mut certificates = Vec::new();
    for x in m.objects() {
        let found = find_weak_inverse(m, x);
        report.check(Law::WeakInverse, found.is_some(), || vec![x.0]);
        certificates.extend(found);
    }
    if report.passed() {
        Ok(WeakTwoGroup {
            monoidal: m.clone(),
            certificates,
        })
    } else {
        Err(report)
    }
}

/// `ℓ_x · r_x⁻¹ = (i_x⊗1)·a_{x,x̄,x}·(1⊗e_x)` as maps `1⊗x -> x⊗1`.
pub fn zigzag1_holds(m: &MonoidalStructure, d: &CoherentData, x: ObjId) -> bool {
    let xd = d.dual(x);
    let left = m.inverse(m.runit(x)).and_then(|ri| m.compose(m.lunit(x), ri));
    let right = m.seq(&[
        m.right_whisker(d.unit_i(x), x),
        m.assoc(x, xd, x),
        m.left_whisker(x, d.counit_e(x)),
    ]);
    left.is_some() && left == right
}

/// `r_x̄ · ℓ_x̄⁻¹ = (1⊗i_x)·a⁻¹_{x̄,x,x̄}·(e_x⊗1)` as maps `x̄⊗1 -> 1⊗x̄`.
pub fn zigzag2_holds(m: &MonoidalStructure, d: &CoherentData, x: ObjId) -> bool {
    let xd = d.dual(x);
    let left = m.inverse(m.lunit(xd)).and_then(|li| m.compose(m.runit(xd), li));
    let right = m.inverse(m.assoc(xd, x, xd)).and_then(|ai| {
        m.seq(&[
            m.left_whisker(xd, d.unit_i(x)),
            ai,
            m.right_whisker(d.counit_e(x), xd),
        ])
    });
    left.is_some() && left == right
}

/// Both zig-zag identities at every object.
pub fn check_zigzags(m: &MonoidalStructure, d: &CoherentData) -> ValidationReport {
    let mut report = ValidationReport::new();
    for x in m.objects() {
        report.check(Law::ZigZag1, zigzag1_holds(m, d, x), || vec![x.0]);
    }
    for x in m.objects() {
        report.check(Law::ZigZag2, zigzag2_holds(m, d, x), || vec![x.0]);
    }
    report
}

/// Monoidal laws, invertibility of every morphism and of every `i_x`, `e_x`,
/// and both zig-zag identities.
pub fn validate_coherent_parts(m: &MonoidalStructure, d: &CoherentData) -> ValidationReport {
    let mut report = validate_monoidal(m);
    for f in m.base().morphisms() {
        report.check(Law::MorphismInvertible, m.inverse(f).is_some(), || vec![f.0]);
    }
    for x in m.objects() {
        report.check(Law::UnitInvertible, m.inverse(d.unit_i(x)).is_some(), || vec![x.0]);
        report.check(Law::CounitInvertible, m.inverse(d.counit_e(x)).is_some(), || {
            vec![x.0]
        });
    }
    report.merge(check_zigzags(m, d));
    report
}

pub fn validate_coherent(g: &CoherentTwoGroup) -> ValidationReport {
    validate_coherent_parts(&g.monoidal, &g.data)
}

fn not_invertible(f: MorId) -> StructureError {
    StructureError::Precondition(format!("morphism {f} is not invertible"))
}

/// The contravariant functor `⁻¹: C^op -> C`, identity on objects.
pub fn inverse_functor(m: &MonoidalStructure) -> Result<FinFunctor, StructureError> {
    let c = m.base();
    let mor_map = c
        .morphisms()
        .map(|f| m.inverse(f).ok_or_else(|| not_invertible(f)))
        .collect::<Result<Vec<_>, _>>()?;
    FinFunctor::new(Arc::new(c.opposite()), c.clone(), c.objects().collect(), mor_map)
}

/// `*(f)` for `f: x -> y`, a morphism `ȳ -> x̄`:
/// `r⁻¹_ȳ ; 1⊗i_x ; 1⊗(f⊗1_x̄) ; a⁻¹_{ȳ,y,x̄} ; e_y⊗1 ; ℓ_x̄`.
pub fn star(m: &MonoidalStructure, d: &CoherentData, f: MorId) -> Option<MorId> {
    let c = m.base();
    let (x, y) = (c.dom(f), c.cod(f));
    let (xd, yd) = (d.dual(x), d.dual(y));
    m.seq(&[
        m.inverse(m.runit(yd))?,
        m.left_whisker(yd, d.unit_i(x)),
        m.left_whisker(yd, m.right_whisker(f, xd)),
        m.inverse(m.assoc(yd, y, xd))?,
        m.right_whisker(d.counit_e(y), xd),
        m.lunit(xd),
    ])
}

/// `inv(f) = *(f⁻¹)`, a morphism `x̄ -> ȳ` for `f: x -> y`.
pub fn inv(m: &MonoidalStructure, d: &CoherentData, f: MorId) -> Option<MorId> {
    star(m, d, m.inverse(f)?)
}

/// The contravariant functor `*: C^op -> C`, `x ↦ x̄`.
pub fn star_functor(m: &MonoidalStructure, d: &CoherentData) -> Result<FinFunctor, StructureError> {
    let c = m.base();
    let mor_map = c
        .morphisms()
        .map(|f| {
            star(m, d, f).ok_or_else(|| {
                StructureError::Precondition(format!("star is undefined at morphism {f}"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    FinFunctor::new(Arc::new(c.opposite()), c.clone(), d.duals().to_vec(), mor_map)
}

/// The covariant functor `inv = * ∘ ⁻¹`.
pub fn inv_functor(m: &MonoidalStructure, d: &CoherentData) -> Result<FinFunctor, StructureError> {
    let c = m.base();
    let mor_map = c
        .morphisms()
        .map(|f| inv(m, d, f).ok_or_else(|| not_invertible(f)))
        .collect::<Result<Vec<_>, _>>()?;
    FinFunctor::new(c.clone(), c.clone(), d.duals().to_vec(), mor_map)
}

/// `inv(1_x) = 1_x̄` for every object and `inv(fg) = inv(f)·inv(g)` for every
/// composable pair.
pub fn check_inv_functorial(m: &MonoidalStructure, d: &CoherentData) -> ValidationReport {
    let c = m.base();
    let mut report = ValidationReport::new();
    for x in c.objects() {
        let ok = inv(m, d, c.identity(x)) == Some(c.identity(d.dual(x)));
        report.check(Law::InvIdentity, ok, || vec![x.0]);
    }
    for f in c.morphisms() {
        for g in c.morphisms() {
            if let Some(fg) = c.compose(f, g) {
                let lhs = inv(m, d, fg);
                let rhs = inv(m, d, f).zip(inv(m, d, g)).and_then(|(a, b)| c.compose(a, b));
                report.check(Law::InvComposition, lhs.is_some() && lhs == rhs, || {
                    vec![f.0, g.0]
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_functor;
    use crate::group::FinGroup;

    fn z3(i: usize, e: usize) -> (MonoidalStructure, CoherentData) {
        deloop_abelian(&FinGroup::cyclic(3), i, e).unwrap()
    }

    #[test]
    fn weak_2group_examples() {
        let g = from_group(&FinGroup::cyclic(2));
        let w = check_weak_2group(g.monoidal()).unwrap();
        assert_eq!(w.certificate(ObjId(1)).inverse, ObjId(1));
        assert!(w.certificates().iter().all(|c| g.monoidal().base().is_identity(c.gamma)));

        let (m, _) = z3(0, 0);
        let w = check_weak_2group(&m).unwrap();
        assert_eq!(w.certificate(ObjId(0)).inverse, ObjId(0));

        let monoid = MonoidalStructure::discrete_strict(2, &[0, 1, 1, 1], 0).unwrap();
        assert!(validate_monoidal(&monoid).passed());
        assert_eq!(find_weak_inverse(&monoid, ObjId(1)), None);
        let report = check_weak_2group(&monoid).unwrap_err();
        assert_eq!(report.violations_of(Law::WeakInverse).count(), 1);
        assert_eq!(report.violations[0].witness, vec![1]);
    }

    #[test]
    fn weak_inverse_of_unit() {
        let g = from_crossed_module(&CrossedModule::from_names("Z2", "Z2", "id", "trivial").unwrap());
        let m = g.monoidal();
        let w = find_weak_inverse(m, m.unit()).unwrap();
        assert_eq!(w.inverse, m.unit());
        let c = m.base();
        assert_eq!(c.dom(w.gamma), m.tensor_ob(m.unit(), m.unit()));
        assert_eq!(c.cod(w.gamma), m.unit());
    }

    #[test]
    fn zigzag_examples() {
        let g = from_group(&FinGroup::cyclic(2));
        assert!(check_zigzags(g.monoidal(), g.data()).passed());
        let (m, d) = z3(1, 2);
        assert!(check_zigzags(&m, &d).passed());
        assert!(validate_coherent_parts(&m, &d).passed());
        let (m, d) = z3(1, 1);
        let report = validate_coherent_parts(&m, &d);
        let laws: Vec<Law> = report.violations.iter().map(|v| v.law).collect();
        assert_eq!(laws, vec![Law::ZigZag1, Law::ZigZag2]);
    }

    #[test]
    fn data_typing_is_structural() {
        let g = from_group(&FinGroup::cyclic(3));
        let m = g.monoidal();
        // i_1 must be 1 -> 1⊗2 = 0, so morphism 1 is mistyped
        let err = CoherentData::new(m, vec![ObjId(0), ObjId(2), ObjId(1)], vec![MorId(0), MorId(1), MorId(0)], vec![MorId(0); 3]);
        assert!(matches!(err, Err(StructureError::Mistyped { table: "unit_i", index: 1, .. })));
    }

    #[test]
    fn inverse_functor_examples() {
        let (m, _) = z3(0, 0);
        let f = inverse_functor(&m).unwrap();
        assert_eq!(f.mor(MorId(0)), MorId(0));
        assert_eq!(f.mor(MorId(1)), MorId(2));
        // (1·1)⁻¹ = 2⁻¹ = 1 and 1⁻¹·1⁻¹ = 2+2 = 1
        assert_eq!(f.mor(MorId(2)), MorId(1));
        assert!(validate_functor(&f).passed());
    }

    #[test]
    fn star_and_inv_in_deloop() {
        for (i, e) in [(1, 2), (1, 1), (0, 0), (2, 2)] {
            let (m, d) = z3(i, e);
            for f in 0..3 {
                assert_eq!(star(&m, &d, MorId(f)), Some(MorId((i + f + e) % 3)));
                assert_eq!(inv(&m, &d, MorId(f)), Some(MorId((i + 3 - f + e) % 3)));
            }
        }
        let (m, d) = z3(1, 2);
        let star_f = star_functor(&m, &d).unwrap();
        assert!(validate_functor(&star_f).passed());
        let inv_f = inv_functor(&m, &d).unwrap();
        assert!(validate_functor(&inv_f).passed());
    }

    #[test]
    fn inv_on_group_instance() {
        let g = from_group(&FinGroup::cyclic(2));
        let f = inv_functor(g.monoidal(), g.data()).unwrap();
        assert_eq!(f.ob_map(), &[ObjId(0), ObjId(1)]);
        assert_eq!(f.mor_map(), &[MorId(0), MorId(1)]);
        assert!(check_inv_functorial(g.monoidal(), g.data()).passed());
    }

    #[test]
    fn inv_functoriality_tracks_second_zigzag() {
        for i in 0..3 {
            for e in 0..3 {
                let (m, d) = z3(i, e);
                let report = check_inv_functorial(&m, &d);
                assert_eq!(report.checked_count(Law::InvComposition), 9);
                assert_eq!(report.passed(), zigzag2_holds(&m, &d, ObjId(0)), "i={i} e={e}");
            }
        }
    }
}
