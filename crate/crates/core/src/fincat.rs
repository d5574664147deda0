//! Finite categories, functors and natural transformations as fully
//! tabulated data.
//!
//! Composition is written in diagrammatic order: `compose(f, g)` is the
//! composite `fg` of `f: x -> y` followed by `g: y -> z`.

use std::fmt;
use std::sync::Arc;

use crate::group::FinGroup;
use crate::report::{Law, StructureError, ValidationReport};

/// Index of an object within one category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

/// Index of a morphism within one category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Domain and codomain of one morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MorArrow {
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A finite category with a dense composition table.
///
/// Construction checks that the tables are well formed (ids in range,
/// identities typed `x -> x`, `compose` defined exactly on composable pairs
/// and correctly typed). The category laws are checked separately by
/// [`validate_category`] so that law violations come with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: usize,
    arrows: Vec<MorArrow>,
    identity: Vec<MorId>,
    compose: Vec<Option<MorId>>,
}

impl FinCategory {
    pub fn new(
        objects: usize,
        arrows: Vec<MorArrow>,
        identity: Vec<MorId>,
        compose: Vec<Option<MorId>>,
    ) -> Result<Self, StructureError> {
        let m = arrows.len();
        for (i, a) in arrows.iter().enumerate() {
            for o in [a.dom, a.cod] {
                if o.0 >= objects {
                    return Err(StructureError::DanglingObject {
                        table: "morphisms",
                        index: i,
                        value: o.0,
                        count: objects,
                    });
                }
            }
        }
        if identity.len() != objects {
            return Err(StructureError::TableSize {
                table: "identity",
                expected: objects,
                found: identity.len(),
            });
        }
        for (x, &id) in identity.iter().enumerate() {
            if id.0 >= m {
                return Err(StructureError::DanglingMorphism {
                    table: "identity",
                    index: x,
                    value: id.0,
                    count: m,
                });
            }
            let a = arrows[id.0];
            if a.dom.0 != x || a.cod.0 != x {
                return Err(StructureError::Mistyped {
                    table: "identity",
                    index: x,
                    detail: format!("morphism {} is {} -> {}", id, a.dom, a.cod),
                });
            }
        }
        if compose.len() != m * m {
            return Err(StructureError::TableSize {
                table: "compose",
                expected: m * m,
                found: compose.len(),
            });
        }
        for f in 0..m {
            for g in 0..m {
                let idx = f * m + g;
                let composable = arrows[f].cod == arrows[g].dom;
                match (compose[idx], composable) {
                    (None, false) => {}
                    (None, true) => {
                        return Err(StructureError::Mistyped {
                            table: "compose",
                            index: idx,
                            detail: format!("composable pair ({f}, {g}) has no composite"),
                        })
                    }
                    (Some(h), false) => {
                        return Err(StructureError::Mistyped {
                            table: "compose",
                            index: idx,
                            detail: format!("non-composable pair ({f}, {g}) has composite {h}"),
                        })
                    }
                    (Some(h), true) => {
                        if h.0 >= m {
                            return Err(StructureError::DanglingMorphism {
                                table: "compose",
                                index: idx,
                                value: h.0,
                                count: m,
                            });
                        }
                        if arrows[h.0].dom != arrows[f].dom || arrows[h.0].cod != arrows[g].cod {
                            return Err(StructureError::Mistyped {
                                table: "compose",
                                index: idx,
                                detail: format!("composite of ({f}, {g}) has the wrong type"),
                            });
                        }
                    }
                }
            }
        }
        Ok(Self {
            objects,
            arrows,
            identity,
            compose,
        })
    }

    /// The discrete category on `n` objects.
    pub fn discrete(n: usize) -> Self {
        let arrows = (0..n)
            .map(|x| MorArrow {
                dom: ObjId(x),
                cod: ObjId(x),
            })
            .collect();
        let identity = (0..n).map(MorId).collect();
        let compose = (0..n * n)
            .map(|k| (k / n == k % n).then_some(MorId(k / n)))
            .collect();
        Self::new(n, arrows, identity, compose).expect("discrete category is well formed")
    }

    pub fn terminal() -> Self {
        Self::discrete(1)
    }

    /// One object whose morphisms are the group elements; `compose(f, g) = f*g`.
    pub fn deloop(group: &FinGroup) -> Self {
        let n = group.order();
        let o = ObjId(0);
        let arrows = vec![MorArrow { dom: o, cod: o }; n];
        let compose = (0..n * n)
            .map(|k| Some(MorId(group.mul(k / n, k % n))))
            .collect();
        Self::new(1, arrows, vec![MorId(group.identity())], compose)
            .expect("delooping is well formed")
    }

    /// Two objects and a single non-identity arrow `0 -> 1`.
    pub fn arrow_category() -> Self {
        let arrows = vec![
            MorArrow { dom: ObjId(0), cod: ObjId(0) },
            MorArrow { dom: ObjId(1), cod: ObjId(1) },
            MorArrow { dom: ObjId(0), cod: ObjId(1) },
        ];
        let c = |v: usize| Some(MorId(v));
        #[rustfmt::skip]
        let compose = vec![
            c(0), None, c(2),
            None, c(1), None,
            None, c(2), None,
        ];
        Self::new(2, arrows, vec![MorId(0), MorId(1)], compose).expect("arrow category is well formed")
    }

    /// The opposite category: same ids, reversed arrows.
    pub fn opposite(&self) -> Self {
        let m = self.arrows.len();
        let arrows = self
            .arrows
            .iter()
            .map(|a| MorArrow { dom: a.cod, cod: a.dom })
            .collect();
        let compose = (0..m * m).map(|k| self.compose[(k % m) * m + k / m]).collect();
        Self {
            objects: self.objects,
            arrows,
            identity: self.identity.clone(),
            compose,
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + Clone {
        (0..self.objects).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> + Clone {
        (0..self.arrows.len()).map(MorId)
    }

    pub fn arrow(&self, f: MorId) -> MorArrow {
        self.arrows[f.0]
    }

    pub fn arrows(&self) -> &[MorArrow] {
        &self.arrows
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.arrows[f.0].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.arrows[f.0].cod
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identity[x.0]
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identity
    }

    pub fn compose_table(&self) -> &[Option<MorId>] {
        &self.compose
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.dom(f).0] == f
    }

    /// `fg`, or `None` when `cod f != dom g`.
    pub fn compose(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.compose[f.0 * self.arrows.len() + g.0]
    }

    /// Composite of a path in diagrammatic order; `None` if any step is not composable.
    pub fn compose_all(&self, path: &[MorId]) -> Option<MorId> {
        let (first, rest) = path.split_first()?;
        rest.iter().try_fold(*first, |acc, &g| self.compose(acc, g))
    }

    /// Morphisms with the given domain and codomain, in index order.
    pub fn hom(&self, dom: ObjId, cod: ObjId) -> impl Iterator<Item = MorId> + '_ {
        self.morphisms()
            .filter(move |&f| self.dom(f) == dom && self.cod(f) == cod)
    }
}

/// Checks associativity and both unit laws exhaustively.
pub fn validate_category(c: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::new();
    for f in c.morphisms() {
        let (x, y) = (c.dom(f), c.cod(f));
        report.check(Law::LeftIdentity, c.compose(c.identity(x), f) == Some(f), || {
            vec![f.0]
        });
        report.check(Law::RightIdentity, c.compose(f, c.identity(y)) == Some(f), || {
            vec![f.0]
        });
    }
    for f in c.morphisms() {
        for g in c.morphisms().filter(|&g| c.dom(g) == c.cod(f)) {
            let fg = c.compose(f, g);
            for h in c.morphisms().filter(|&h| c.dom(h) == c.cod(g)) {
                let left = fg.and_then(|fg| c.compose(fg, h));
                let right = c.compose(g, h).and_then(|gh| c.compose(f, gh));
                report.check(Law::Associativity, left.is_some() && left == right, || {
                    vec![f.0, g.0, h.0]
                });
            }
        }
    }
    report
}

/// The product category. Objects and morphisms are pairs indexed
/// lexicographically: `(c, d) -> c * |D| + d`.
pub fn product_category(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let (cn, dn) = (c.object_count(), d.object_count());
    let (cm, dm) = (c.morphism_count(), d.morphism_count());
    let ob = |x: ObjId, y: ObjId| ObjId(x.0 * dn + y.0);
    let mut arrows = Vec::with_capacity(cm * dm);
    for f in c.morphisms() {
        for g in d.morphisms() {
            arrows.push(MorArrow {
                dom: ob(c.dom(f), d.dom(g)),
                cod: ob(c.cod(f), d.cod(g)),
            });
        }
    }
    let mut identity = Vec::with_capacity(cn * dn);
    for x in c.objects() {
        for y in d.objects() {
            identity.push(MorId(c.identity(x).0 * dm + d.identity(y).0));
        }
    }
    let m = cm * dm;
    let mut compose = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            let (f1, g1) = (MorId(p / dm), MorId(p % dm));
            let (f2, g2) = (MorId(q / dm), MorId(q % dm));
            compose.push(match (c.compose(f1, f2), d.compose(g1, g2)) {
                (Some(f), Some(g)) => Some(MorId(f.0 * dm + g.0)),
                _ => None,
            });
        }
    }
    FinCategory {
        objects: cn * dn,
        arrows,
        identity,
        compose,
    }
}

/// Exhaustive two-sided inverse search.
pub fn is_isomorphism(c: &FinCategory, f: MorId) -> Option<MorId> {
    let (x, y) = (c.dom(f), c.cod(f));
    c.hom(y, x).find(|&g| {
        c.compose(f, g) == Some(c.identity(x)) && c.compose(g, f) == Some(c.identity(y))
    })
}

fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor given by its object and morphism tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinFunctor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    ob_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl FinFunctor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        ob_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Result<Self, StructureError> {
        if ob_map.len() != source.object_count() {
            return Err(StructureError::TableSize {
                table: "ob_map",
                expected: source.object_count(),
                found: ob_map.len(),
            });
        }
        if mor_map.len() != source.morphism_count() {
            return Err(StructureError::TableSize {
                table: "mor_map",
                expected: source.morphism_count(),
                found: mor_map.len(),
            });
        }
        if let Some((i, o)) = ob_map
            .iter()
            .enumerate()
            .find(|(_, o)| o.0 >= target.object_count())
        {
            return Err(StructureError::DanglingObject {
                table: "ob_map",
                index: i,
                value: o.0,
                count: target.object_count(),
            });
        }
        if let Some((i, f)) = mor_map
            .iter()
            .enumerate()
            .find(|(_, f)| f.0 >= target.morphism_count())
        {
            return Err(StructureError::DanglingMorphism {
                table: "mor_map",
                index: i,
                value: f.0,
                count: target.morphism_count(),
            });
        }
        Ok(Self {
            source,
            target,
            ob_map,
            mor_map,
        })
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        let ob_map = c.objects().collect();
        let mor_map = c.morphisms().collect();
        Self {
            source: c.clone(),
            target: c,
            ob_map,
            mor_map,
        }
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn ob(&self, x: ObjId) -> ObjId {
        self.ob_map[x.0]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    pub fn ob_map(&self) -> &[ObjId] {
        &self.ob_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FinFunctor) -> Result<FinFunctor, StructureError> {
        if !same_category(&self.target, &next.source) {
            return Err(StructureError::Mismatch(
                "functor composition: target of the first is not the source of the second".into(),
            ));
        }
        Ok(FinFunctor {
            source: self.source.clone(),
            target: next.target.clone(),
            ob_map: self.ob_map.iter().map(|&x| next.ob(x)).collect(),
            mor_map: self.mor_map.iter().map(|&f| next.mor(f)).collect(),
        })
    }
}

/// Checks typing, identity preservation and composition preservation.
pub fn validate_functor(func: &FinFunctor) -> ValidationReport {
    let (c, d) = (&*func.source, &*func.target);
    let mut report = ValidationReport::new();
    for f in c.morphisms() {
        let image = func.mor(f);
        let typed = d.dom(image) == func.ob(c.dom(f)) && d.cod(image) == func.ob(c.cod(f));
        report.check(Law::FunctorTyping, typed, || vec![f.0]);
    }
    for x in c.objects() {
        let ok = func.mor(c.identity(x)) == d.identity(func.ob(x));
        report.check(Law::FunctorIdentity, ok, || vec![x.0]);
    }
    for f in c.morphisms() {
        for g in c.morphisms() {
            if let Some(fg) = c.compose(f, g) {
                let image = d.compose(func.mor(f), func.mor(g));
                report.check(Law::FunctorComposition, image == Some(func.mor(fg)), || {
                    vec![f.0, g.0]
                });
            }
        }
    }
    report
}

/// A natural transformation between parallel functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransform {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<MorId>,
}

impl NatTransform {
    pub fn new(source: FinFunctor, target: FinFunctor, components: Vec<MorId>) -> Result<Self, StructureError> {
        if !same_category(&source.source, &target.source) || !same_category(&source.target, &target.target) {
            return Err(StructureError::Mismatch(
                "natural transformation between non-parallel functors".into(),
            ));
        }
        let n = source.source.object_count();
        if components.len() != n {
            return Err(StructureError::TableSize {
                table: "components",
                expected: n,
                found: components.len(),
            });
        }
        let m = source.target.morphism_count();
        if let Some((i, f)) = components.iter().enumerate().find(|(_, f)| f.0 >= m) {
            return Err(StructureError::DanglingMorphism {
                table: "components",
                index: i,
                value: f.0,
                count: m,
            });
        }
        Ok(Self {
            source,
            target,
            components,
        })
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }
}

/// Checks component typing and every naturality square.
pub fn validate_nat(t: &NatTransform) -> ValidationReport {
    let (f, g) = (&t.source, &t.target);
    let (c, d) = (&*f.source, &*f.target);
    let mut report = ValidationReport::new();
    for x in c.objects() {
        let comp = t.component(x);
        let ok = d.dom(comp) == f.ob(x) && d.cod(comp) == g.ob(x);
        report.check(Law::NatTyping, ok, || vec![x.0]);
    }
    for h in c.morphisms() {
        let (x, y) = (c.dom(h), c.cod(h));
        let left = d.compose(t.component(x), g.mor(h));
        let right = d.compose(f.mor(h), t.component(y));
        report.check(Law::Naturality, left.is_some() && left == right, || vec![h.0]);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> FinCategory {
        FinCategory::deloop(&FinGroup::cyclic(3))
    }

    #[test]
    fn trivial_categories_validate() {
        assert!(validate_category(&FinCategory::terminal()).passed());
        assert!(validate_category(&z3()).passed());
        assert!(validate_category(&FinCategory::arrow_category()).passed());
        assert!(validate_category(&FinCategory::deloop(&FinGroup::symmetric3())).passed());
    }

    #[test]
    fn patched_composition_is_caught_with_a_triple() {
        let c = z3();
        let mut table = c.compose_table().to_vec();
        table[3 + 1] = Some(MorId(0));
        let patched = FinCategory::new(1, c.arrows().to_vec(), c.identities().to_vec(), table).unwrap();
        let report = validate_category(&patched);
        assert!(!report.passed());
        // brute force: every triple whose two bracketings disagree under the patched table
        let comp = |a: usize, b: usize| if (a, b) == (1, 1) { 0 } else { (a + b) % 3 };
        let mut expected = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for d in 0..3 {
                    if comp(comp(a, b), d) != comp(a, comp(b, d)) {
                        expected.push(vec![a, b, d]);
                    }
                }
            }
        }
        let found: Vec<_> = report
            .violations_of(Law::Associativity)
            .map(|v| v.witness.clone())
            .collect();
        assert_eq!(found, expected);
        assert!(!report.has_violation(Law::LeftIdentity));
    }

    #[test]
    fn malformed_tables_are_structural() {
        let c = z3();
        let err = FinCategory::new(1, c.arrows().to_vec(), vec![MorId(7)], c.compose_table().to_vec());
        assert!(matches!(err, Err(StructureError::DanglingMorphism { .. })));
        let err = FinCategory::new(1, c.arrows().to_vec(), vec![MorId(0)], vec![Some(MorId(0)); 4]);
        assert!(matches!(err, Err(StructureError::TableSize { .. })));
    }

    #[test]
    fn products() {
        let z2 = FinCategory::deloop(&FinGroup::cyclic(2));
        let p = product_category(&z2, &z2);
        assert_eq!(p.object_count(), 1);
        assert_eq!(p.morphism_count(), 4);
        // (1,0)(1,1) = (0,1)
        assert_eq!(p.compose(MorId(2), MorId(3)), Some(MorId(1)));
        assert!(validate_category(&p).passed());

        let q = product_category(&z2, &FinCategory::discrete(2));
        assert_eq!(q.object_count(), 2);
        assert!(validate_category(&q).passed());

        let c = FinCategory::arrow_category();
        let t = product_category(&FinCategory::terminal(), &c);
        assert_eq!(t, c);
    }

    #[test]
    fn functor_examples() {
        let c = Arc::new(z3());
        assert!(validate_functor(&FinFunctor::identity(c.clone())).passed());
        let doubling = FinFunctor::new(c.clone(), c.clone(), vec![ObjId(0)], vec![MorId(0), MorId(2), MorId(1)]).unwrap();
        let report = validate_functor(&doubling);
        assert!(report.passed());
        assert_eq!(report.checked_count(Law::FunctorComposition), 9);
        let constant = FinFunctor::new(c.clone(), c.clone(), vec![ObjId(0)], vec![MorId(1); 3]).unwrap();
        assert!(validate_functor(&constant).has_violation(Law::FunctorIdentity));
        let short = FinFunctor::new(c.clone(), c, vec![ObjId(0)], vec![MorId(1)]);
        assert!(matches!(short, Err(StructureError::TableSize { .. })));
    }

    #[test]
    fn nat_examples() {
        let c = Arc::new(z3());
        let id = FinFunctor::identity(c.clone());
        let t = NatTransform::new(id.clone(), id.clone(), vec![MorId(0)]).unwrap();
        assert!(validate_nat(&t).passed());
        let t = NatTransform::new(id.clone(), id.clone(), vec![MorId(1)]).unwrap();
        let report = validate_nat(&t);
        assert!(report.passed());
        assert_eq!(report.checked_count(Law::Naturality), 3);

        let s3g = FinGroup::symmetric3();
        let s3 = Arc::new(FinCategory::deloop(&s3g));
        let id = FinFunctor::identity(s3.clone());
        let t = NatTransform::new(id.clone(), id.clone(), vec![MorId(3)]).unwrap();
        let report = validate_nat(&t);
        let failing: Vec<usize> = report.violations.iter().map(|v| v.witness[0]).collect();
        let expected: Vec<usize> = s3g.elements().filter(|&f| s3g.mul(3, f) != s3g.mul(f, 3)).collect();
        assert_eq!(failing, expected);
        assert!(!failing.is_empty());

        let missing = NatTransform::new(id.clone(), id, vec![]);
        assert!(matches!(missing, Err(StructureError::TableSize { .. })));
    }

    #[test]
    fn isomorphisms() {
        let c = z3();
        assert_eq!(is_isomorphism(&c, MorId(0)), Some(MorId(0)));
        assert_eq!(is_isomorphism(&c, MorId(1)), Some(MorId(2)));
        let a = FinCategory::arrow_category();
        assert_eq!(is_isomorphism(&a, MorId(2)), None);
        assert_eq!(is_isomorphism(&a, MorId(1)), Some(MorId(1)));
    }

    #[test]
    fn opposite_reverses() {
        let a = FinCategory::arrow_category();
        let op = a.opposite();
        assert_eq!(op.dom(MorId(2)), ObjId(1));
        assert!(validate_category(&op).passed());
        let s3 = FinCategory::deloop(&FinGroup::symmetric3());
        let op = s3.opposite();
        assert_eq!(op.compose(MorId(1), MorId(3)), s3.compose(MorId(3), MorId(1)));
    }
}
