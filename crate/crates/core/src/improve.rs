//! Improving a weak 2-group to a coherent one by replacing each unit `i_x`
//! with a composite `i'_x` that satisfies the zig-zag identities.

use thiserror::Error;

use crate::fincat::{MorId, ObjId};
use crate::homomorphism::MonoidalFunctor;
use crate::monoidal::{validate_monoidal, MonoidalStructure};
use crate::report::{Law, StructureError, ValidationReport};
use crate::twogroup::{validate_coherent, CoherentData, CoherentTwoGroup, WeakInverse, WeakTwoGroup};

/// A chosen weak inverse with invertible `i`, `e` per object, not assumed
/// to satisfy the zig-zag identities. Same shape as [`CoherentData`].
pub type InverseChoice = CoherentData;

#[derive(Debug, Error)]
pub enum ImproveError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("improvement violated a law; this is a bug:\n{}", .0.render())]
    Internal(ValidationReport),
}

/// Takes `x̄` and `e_x = ξ` from each certificate and `i_x = γ⁻¹`.
pub fn choose_inverse_data(w: &WeakTwoGroup) -> InverseChoice {
    let m = w.monoidal();
    let certs = w.certificates();
    CoherentData::new(
        m,
        certs.iter().map(|c| c.inverse).collect(),
        certs
            .iter()
            .map(|c| m.inverse(c.gamma).expect("certified witnesses are invertible"))
            .collect(),
        certs.iter().map(|c| c.xi).collect(),
    )
    .expect("certificates give well-typed data")
}

/// `i'_x = i ; 1⊗ℓ⁻¹ ; 1⊗(e⁻¹⊗1) ; 1⊗a_{x̄,x,x̄} ; a⁻¹_{x,x̄,x⊗x̄} ; i⁻¹⊗1 ; a⁻¹_{1,x,x̄} ; ℓ⊗1`.
pub fn improved_unit(m: &MonoidalStructure, ch: &InverseChoice, x: ObjId) -> Option<MorId> {
    let xd = ch.dual(x);
    let i = ch.unit_i(x);
    let e = ch.counit_e(x);
    let x_xd = m.tensor_ob(x, xd);
    m.seq(&[
        i,
        m.left_whisker(x, m.inverse(m.lunit(xd))?),
        m.left_whisker(x, m.right_whisker(m.inverse(e)?, xd)),
        m.left_whisker(x, m.assoc(xd, x, xd)),
        m.inverse(m.assoc(x, xd, x_xd))?,
        m.right_whisker(m.inverse(i)?, x_xd),
        m.inverse(m.assoc(m.unit(), x, xd))?,
        m.right_whisker(m.lunit(x), xd),
    ])
}

/// Keeps the structure, duals and counits and replaces every unit by
/// [`improved_unit`]. The result is validated; a failure is reported as
/// [`ImproveError::Internal`] with the full report.
pub fn improve(m: &MonoidalStructure, ch: &InverseChoice) -> Result<CoherentTwoGroup, ImproveError> {
    let pre = validate_monoidal(m);
    if !pre.passed() {
        return Err(StructureError::Precondition(format!(
            "structure is not monoidal:\n{}",
            pre.render()
        ))
        .into());
    }
    if let Some(f) = m.base().morphisms().find(|&f| m.inverse(f).is_none()) {
        return Err(StructureError::Precondition(format!("morphism {f} is not invertible")).into());
    }
    let units = m
        .objects()
        .map(|x| {
            improved_unit(m, ch, x).ok_or_else(|| {
                StructureError::Mistyped {
                    table: "unit_i",
                    index: x.0,
                    detail: "improved unit composite is ill typed".into(),
                }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let data = ch.with_units(units);
    let g = CoherentTwoGroup::new(m.clone(), data);
    let report = validate_coherent(&g);
    if report.passed() {
        Ok(g)
    } else {
        Err(ImproveError::Internal(report))
    }
}

/// Certificates `(x̄, i⁻¹, e)` from the chosen data.
pub fn forget(g: &CoherentTwoGroup) -> Result<WeakTwoGroup, ValidationReport> {
    let (m, d) = (g.monoidal(), g.data());
    let mut certificates = Vec::with_capacity(m.object_count());
    let mut report = ValidationReport::new();
    for x in m.objects() {
        match m.inverse(d.unit_i(x)) {
            Some(gamma) => certificates.push(WeakInverse {
                inverse: d.dual(x),
                gamma,
                xi: d.counit_e(x),
            }),
            None => report.fail(Law::UnitInvertible, vec![x.0]),
        }
    }
    if !report.passed() {
        return Err(report);
    }
    WeakTwoGroup::with_certificates(m.clone(), certificates)
}

/// The identity functor, with identity `F₂` and `F₀`, viewed as a
/// homomorphism between two choices of dual data on one structure.
pub fn roundtrip_homomorphism(g: &CoherentTwoGroup, g2: &CoherentTwoGroup) -> Result<MonoidalFunctor, StructureError> {
    if g.monoidal() != g2.monoidal() {
        return Err(StructureError::Mismatch(
            "round trip needs the same underlying structure".into(),
        ));
    }
    Ok(MonoidalFunctor::identity(g.monoidal()))
}
