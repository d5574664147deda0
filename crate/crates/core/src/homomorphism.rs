//! Weak monoidal functors, monoidal natural transformations, and the
//! comparison isomorphism `F₋₁: (F x)‾ -> F(x̄)` between chosen duals.

use crate::fincat::{validate_functor, validate_nat, FinFunctor, MorId, NatTransform, ObjId};
use crate::monoidal::MonoidalStructure;
use crate::report::{Law, StructureError, ValidationReport};
use crate::twogroup::CoherentData;

/// A functor between the underlying categories with `F₂(x, y): Fx⊗Fy -> F(x⊗y)`
/// and `F₀: 1' -> F(1)`. `f2` is indexed by `x * n + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalFunctor {
    source: MonoidalStructure,
    target: MonoidalStructure,
    functor: FinFunctor,
    f2: Vec<MorId>,
    f0: MorId,
}

impl MonoidalFunctor {
    /// Checks table sizes, ranges and the typing of `F₂` and `F₀`.
    pub fn new(
        source: MonoidalStructure,
        target: MonoidalStructure,
        ob_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
        f2: Vec<MorId>,
        f0: MorId,
    ) -> Result<Self, StructureError> {
        let functor = FinFunctor::new(source.base().clone(), target.base().clone(), ob_map, mor_map)?;
        let n = source.object_count();
        let d = target.base();
        if f2.len() != n * n {
            return Err(StructureError::TableSize {
                table: "F2",
                expected: n * n,
                found: f2.len(),
            });
        }
        for (table, index, f) in f2
            .iter()
            .enumerate()
            .map(|(k, &f)| ("F2", k, f))
            .chain(std::iter::once(("F0", 0, f0)))
        {
            if f.0 >= d.morphism_count() {
                return Err(StructureError::DanglingMorphism {
                    table,
                    index,
                    value: f.0,
                    count: d.morphism_count(),
                });
            }
        }
        for x in source.objects() {
            for y in source.objects() {
                let f = f2[x.0 * n + y.0];
                let dom = target.tensor_ob(functor.ob(x), functor.ob(y));
                let cod = functor.ob(source.tensor_ob(x, y));
                if d.dom(f) != dom || d.cod(f) != cod {
                    return Err(StructureError::Mistyped {
                        table: "F2",
                        index: x.0 * n + y.0,
                        detail: format!("expected {dom} -> {cod}"),
                    });
                }
            }
        }
        let unit_image = functor.ob(source.unit());
        if d.dom(f0) != target.unit() || d.cod(f0) != unit_image {
            return Err(StructureError::Mistyped {
                table: "F0",
                index: 0,
                detail: format!("expected {} -> {unit_image}", target.unit()),
            });
        }
        Ok(Self {
            source,
            target,
            functor,
            f2,
            f0,
        })
    }

    /// The identity functor with identity `F₂` and `F₀`.
    pub fn identity(m: &MonoidalStructure) -> Self {
        let c = m.base();
        let f2 = m
            .objects()
            .flat_map(|x| m.objects().map(move |y| (x, y)))
            .map(|(x, y)| m.id(m.tensor_ob(x, y)))
            .collect();
        Self {
            source: m.clone(),
            target: m.clone(),
            functor: FinFunctor::identity(c.clone()),
            f2,
            f0: m.id(m.unit()),
        }
    }

    pub fn source(&self) -> &MonoidalStructure {
        &self.source
    }

    pub fn target(&self) -> &MonoidalStructure {
        &self.target
    }

    pub fn functor(&self) -> &FinFunctor {
        &self.functor
    }

    pub fn ob(&self, x: ObjId) -> ObjId {
        self.functor.ob(x)
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.functor.mor(f)
    }

    pub fn f2(&self, x: ObjId, y: ObjId) -> MorId {
        self.f2[x.0 * self.source.object_count() + y.0]
    }

    pub fn f2_table(&self) -> &[MorId] {
        &self.f2
    }

    pub fn f0(&self) -> MorId {
        self.f0
    }
}

/// Functoriality, naturality and invertibility of `F₂`, invertibility of
/// `F₀`, the associativity square and both unit squares.
pub fn validate_monoidal_functor(fm: &MonoidalFunctor) -> ValidationReport {
    let (s, t) = (&fm.source, &fm.target);
    let c = s.base();
    let mut report = validate_functor(&fm.functor);
    for f in c.morphisms() {
        for g in c.morphisms() {
            let (x, y) = (c.dom(f), c.dom(g));
            let (x2, y2) = (c.cod(f), c.cod(g));
            let left = t.compose(t.tensor_mor(fm.mor(f), fm.mor(g)), fm.f2(x2, y2));
            let right = t.compose(fm.f2(x, y), fm.mor(s.tensor_mor(f, g)));
            report.check(Law::F2Natural, left.is_some() && left == right, || vec![f.0, g.0]);
        }
    }
    for x in s.objects() {
        for y in s.objects() {
            report.check(Law::F2Invertible, t.inverse(fm.f2(x, y)).is_some(), || {
                vec![x.0, y.0]
            });
        }
    }
    report.check(Law::F0Invertible, t.inverse(fm.f0).is_some(), Vec::new);
    for x in s.objects() {
        for y in s.objects() {
            for z in s.objects() {
                let (fx, fy, fz) = (fm.ob(x), fm.ob(y), fm.ob(z));
                let left = t.seq(&[
                    t.right_whisker(fm.f2(x, y), fz),
                    fm.f2(s.tensor_ob(x, y), z),
                    fm.mor(s.assoc(x, y, z)),
                ]);
                let right = t.seq(&[
                    t.assoc(fx, fy, fz),
                    t.left_whisker(fx, fm.f2(y, z)),
                    fm.f2(x, s.tensor_ob(y, z)),
                ]);
                report.check(Law::FunctorAssoc, left.is_some() && left == right, || {
                    vec![x.0, y.0, z.0]
                });
            }
        }
    }
    for x in s.objects() {
        let fx = fm.ob(x);
        let left = t.seq(&[
            t.right_whisker(fm.f0, fx),
            fm.f2(s.unit(), x),
            fm.mor(s.lunit(x)),
        ]);
        report.check(Law::LeftUnitSquare, left == Some(t.lunit(fx)), || vec![x.0]);
        let right = t.seq(&[
            t.left_whisker(fx, fm.f0),
            fm.f2(x, s.unit()),
            fm.mor(s.runit(x)),
        ]);
        report.check(Law::RightUnitSquare, right == Some(t.runit(fx)), || vec![x.0]);
    }
    report
}

/// A natural transformation between parallel monoidal functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalNatTransform {
    source: MonoidalFunctor,
    target: MonoidalFunctor,
    nat: NatTransform,
}

impl MonoidalNatTransform {
    pub fn new(source: MonoidalFunctor, target: MonoidalFunctor, components: Vec<MorId>) -> Result<Self, StructureError> {
        if source.source != target.source || source.target != target.target {
            return Err(StructureError::Mismatch(
                "monoidal transformation between non-parallel functors".into(),
            ));
        }
        let nat = NatTransform::new(source.functor.clone(), target.functor.clone(), components)?;
        Ok(Self { source, target, nat })
    }

    pub fn nat(&self) -> &NatTransform {
        &self.nat
    }
}

/// Naturality plus `(θ_x⊗θ_y)·G₂ = F₂·θ_{x⊗y}` and `F₀·θ_1 = G₀`.
pub fn validate_monoidal_nat(t: &MonoidalNatTransform) -> ValidationReport {
    let (f, g) = (&t.source, &t.target);
    let (s, d) = (&f.source, &f.target);
    let theta = |x: ObjId| t.nat.component(x);
    let mut report = validate_nat(&t.nat);
    for x in s.objects() {
        for y in s.objects() {
            let left = d.compose(d.tensor_mor(theta(x), theta(y)), g.f2(x, y));
            let right = d.compose(f.f2(x, y), theta(s.tensor_ob(x, y)));
            report.check(Law::MonNatTensor, left.is_some() && left == right, || {
                vec![x.0, y.0]
            });
        }
    }
    let unit = d.compose(f.f0, theta(s.unit()));
    report.check(Law::MonNatUnit, unit == Some(g.f0), Vec::new);
    report
}

/// `F` followed by `G`, with `F₂ = G₂(Fx, Fy) ; G(F₂(x, y))` and
/// `F₀ = G₀ ; G(F₀)`.
pub fn compose_monoidal_functors(f: &MonoidalFunctor, g: &MonoidalFunctor) -> Result<MonoidalFunctor, StructureError> {
    if f.target != g.source {
        return Err(StructureError::Mismatch(
            "composing monoidal functors with different middle structures".into(),
        ));
    }
    let e = &g.target;
    let s = &f.source;
    let mut f2 = Vec::with_capacity(f.f2.len());
    for x in s.objects() {
        for y in s.objects() {
            let comp = e
                .compose(g.f2(f.ob(x), f.ob(y)), g.mor(f.f2(x, y)))
                .ok_or_else(|| StructureError::Mismatch(format!("composite F2 at ({x}, {y}) is ill typed")))?;
            f2.push(comp);
        }
    }
    let f0 = e
        .compose(g.f0, g.mor(f.f0))
        .ok_or_else(|| StructureError::Mismatch("composite F0 is ill typed".into()))?;
    let functor = f.functor.then(&g.functor)?;
    MonoidalFunctor::new(
        s.clone(),
        e.clone(),
        functor.ob_map().to_vec(),
        functor.mor_map().to_vec(),
        f2,
        f0,
    )
}

/// Image of a weak inverse: returns `(F₂·F(ξ)·F₀⁻¹, F₂·F(γ)·F₀⁻¹)`, maps
/// `Fy⊗Fx -> 1'` and `Fx⊗Fy -> 1'`.
pub fn preserved_weak_inverse(
    fm: &MonoidalFunctor,
    x: ObjId,
    y: ObjId,
    gamma: MorId,
    xi: MorId,
) -> Result<(MorId, MorId), StructureError> {
    let (s, t) = (&fm.source, &fm.target);
    let c = s.base();
    if c.dom(gamma) != s.tensor_ob(x, y) || c.cod(gamma) != s.unit() {
        return Err(StructureError::Mistyped {
            table: "gamma",
            index: gamma.0,
            detail: "expected x⊗y -> 1".into(),
        });
    }
    if c.dom(xi) != s.tensor_ob(y, x) || c.cod(xi) != s.unit() {
        return Err(StructureError::Mistyped {
            table: "xi",
            index: xi.0,
            detail: "expected y⊗x -> 1".into(),
        });
    }
    let f0_inv = t
        .inverse(fm.f0)
        .ok_or_else(|| StructureError::Precondition("F0 is not invertible".into()))?;
    let ill = || StructureError::Mismatch("preserved weak inverse is ill typed".into());
    let left = t.seq(&[fm.f2(y, x), fm.mor(xi), f0_inv]).ok_or_else(ill)?;
    let right = t.seq(&[fm.f2(x, y), fm.mor(gamma), f0_inv]).ok_or_else(ill)?;
    Ok((left, right))
}

/// Source and target chosen duals for the `F₋₁` constructions.
#[derive(Clone, Copy, Debug)]
pub struct DualPair<'a> {
    pub source: &'a CoherentData,
    pub target: &'a CoherentData,
}

fn inverse_of(m: &MonoidalStructure, f: MorId) -> Result<MorId, StructureError> {
    m.inverse(f)
        .ok_or_else(|| StructureError::Precondition(format!("morphism {f} is not invertible")))
}

fn finish(path: Option<MorId>) -> Result<MorId, StructureError> {
    path.ok_or_else(|| StructureError::Mismatch("F-1 composite is ill typed".into()))
}

/// Legs shared by both unit-based constructions: `d̄⊗1' -> F(x̄)` through
/// `1⊗F₀ ; 1⊗F(i_x) ; 1⊗F₂⁻¹ ; a⁻¹ ; e⊗1 ; ℓ`.
fn unit_tail(fm: &MonoidalFunctor, duals: DualPair<'_>, x: ObjId) -> Result<Vec<MorId>, StructureError> {
    let t = &fm.target;
    let fx = fm.ob(x);
    let db = duals.target.dual(fx);
    let xd = duals.source.dual(x);
    let fxd = fm.ob(xd);
    Ok(vec![
        t.left_whisker(db, fm.f0),
        t.left_whisker(db, fm.mor(duals.source.unit_i(x))),
        t.left_whisker(db, inverse_of(t, fm.f2(x, xd))?),
        inverse_of(t, t.assoc(db, fx, fxd))?,
        t.right_whisker(duals.target.counit_e(fx), fxd),
        t.lunit(fxd),
    ])
}

/// `F₋₁` through the counit of the target:
/// `ℓ⁻¹ ; e⁻¹⊗1 ; a ; 1⊗i⁻¹ ; 1⊗F₀ ; 1⊗F(i_x) ; 1⊗F₂⁻¹ ; a⁻¹ ; e⊗1 ; ℓ`.
pub fn f_minus_one_f1(fm: &MonoidalFunctor, duals: DualPair<'_>, x: ObjId) -> Result<MorId, StructureError> {
    let t = &fm.target;
    let fx = fm.ob(x);
    let db = duals.target.dual(fx);
    let mut path = vec![
        inverse_of(t, t.lunit(db))?,
        t.right_whisker(inverse_of(t, duals.target.counit_e(fx))?, db),
        t.assoc(db, fx, db),
        t.left_whisker(db, inverse_of(t, duals.target.unit_i(fx))?),
    ];
    path.extend(unit_tail(fm, duals, x)?);
    finish(t.seq(&path))
}

/// `F₋₁` with the first four legs of [`f_minus_one_f1`] replaced by `r⁻¹`.
pub fn f_minus_one_f1_prime(fm: &MonoidalFunctor, duals: DualPair<'_>, x: ObjId) -> Result<MorId, StructureError> {
    let t = &fm.target;
    let db = duals.target.dual(fm.ob(x));
    let mut path = vec![inverse_of(t, t.runit(db))?];
    path.extend(unit_tail(fm, duals, x)?);
    finish(t.seq(&path))
}

/// `F₋₁` through the counit of the source:
/// `r⁻¹ ; 1⊗i ; a⁻¹ ; e⊗1 ; F₀⊗1 ; F(e_x⁻¹)⊗1 ; F₂⁻¹⊗1 ; a ; 1⊗i⁻¹ ; r`.
pub fn f_minus_one_f2(fm: &MonoidalFunctor, duals: DualPair<'_>, x: ObjId) -> Result<MorId, StructureError> {
    let (s, t) = (&fm.source, &fm.target);
    let fx = fm.ob(x);
    let db = duals.target.dual(fx);
    let xd = duals.source.dual(x);
    let fxd = fm.ob(xd);
    let i_t = duals.target.unit_i(fx);
    let path = [
        inverse_of(t, t.runit(db))?,
        t.left_whisker(db, i_t),
        inverse_of(t, t.assoc(db, fx, db))?,
        t.right_whisker(duals.target.counit_e(fx), db),
        t.right_whisker(fm.f0, db),
        t.right_whisker(fm.mor(inverse_of(s, duals.source.counit_e(x))?), db),
        t.right_whisker(inverse_of(t, fm.f2(xd, x))?, db),
        t.assoc(fxd, fx, db),
        t.left_whisker(fxd, inverse_of(t, i_t)?),
        t.runit(fxd),
    ];
    finish(t.seq(&path))
}

/// `i_{Fx} ; (1⊗F₋₁) ; F₂ = F₀ ; F(i_x)`.
pub fn check_h1(fm: &MonoidalFunctor, duals: DualPair<'_>, x: ObjId, fm1: MorId) -> bool {
    let t = &fm.target;
    let fx = fm.ob(x);
    let xd = duals.source.dual(x);
    let left = t.seq(&[duals.target.unit_i(fx), t.left_whisker(fx, fm1), fm.f2(x, xd)]);
    let right = t.compose(fm.f0, fm.mor(duals.source.unit_i(x)));
    left.is_some() && left == right
}

/// `(F₋₁⊗1) ; F₂ ; F(e_x) = e_{Fx} ; F₀`.
pub fn check_h2(fm: &MonoidalFunctor, duals: DualPair<'_>, x: ObjId, fm1: MorId) -> bool {
    let t = &fm.target;
    let fx = fm.ob(x);
    let xd = duals.source.dual(x);
    let left = t.seq(&[t.right_whisker(fm1, fx), fm.f2(xd, x), fm.mor(duals.source.counit_e(x))]);
    let right = t.compose(duals.target.counit_e(fx), fm.f0);
    left.is_some() && left == right
}
