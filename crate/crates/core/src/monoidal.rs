//! Weak monoidal structure on a finite category and exhaustive checks of
//! its coherence laws.

use std::sync::Arc;

use crate::fincat::{
    product_category, validate_category, validate_functor, FinCategory, FinFunctor, MorId, ObjId,
};
use crate::report::{Law, StructureError, ValidationReport};

/// Tensor, unit and structure isomorphisms on a [`FinCategory`].
///
/// `assoc` is indexed by `x * n^2 + y * n + z` and each component has type
/// `(x⊗y)⊗z -> x⊗(y⊗z)`. `lunit[x]: 1⊗x -> x`, `runit[x]: x⊗1 -> x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalStructure {
    base: Arc<FinCategory>,
    tensor: FinFunctor,
    unit: ObjId,
    assoc: Vec<MorId>,
    lunit: Vec<MorId>,
    runit: Vec<MorId>,
    inverse: Vec<Option<MorId>>,
}

impl MonoidalStructure {
    /// Assembles a structure, checking table sizes, ranges and the typing of
    /// every structure component. Laws are checked by [`validate_monoidal`].
    pub fn new(
        base: Arc<FinCategory>,
        tensor: FinFunctor,
        unit: ObjId,
        assoc: Vec<MorId>,
        lunit: Vec<MorId>,
        runit: Vec<MorId>,
    ) -> Result<Self, StructureError> {
        let product = product_category(&base, &base);
        if **tensor.source() != product || **tensor.target() != *base {
            return Err(StructureError::Mismatch(
                "tensor must be a functor from base x base to base".into(),
            ));
        }
        let n = base.object_count();
        let m = base.morphism_count();
        if unit.0 >= n {
            return Err(StructureError::DanglingObject {
                table: "unit",
                index: 0,
                value: unit.0,
                count: n,
            });
        }
        for (table, data, expected) in [
            ("assoc", &assoc, n * n * n),
            ("lunit", &lunit, n),
            ("runit", &runit, n),
        ] {
            if data.len() != expected {
                return Err(StructureError::TableSize {
                    table,
                    expected,
                    found: data.len(),
                });
            }
            if let Some((index, f)) = data.iter().enumerate().find(|(_, f)| f.0 >= m) {
                return Err(StructureError::DanglingMorphism {
                    table,
                    index,
                    value: f.0,
                    count: m,
                });
            }
        }
        let t = |x: usize, y: usize| tensor.ob(ObjId(x * n + y));
        let typed = |table: &'static str, index: usize, f: MorId, dom: ObjId, cod: ObjId| {
            let a = base.arrow(f);
            if a.dom == dom && a.cod == cod {
                Ok(())
            } else {
                Err(StructureError::Mistyped {
                    table,
                    index,
                    detail: format!(
                        "morphism {f} is {} -> {}, expected {dom} -> {cod}",
                        a.dom, a.cod
                    ),
                })
            }
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let k = x * n * n + y * n + z;
                    typed("assoc", k, assoc[k], t(t(x, y).0, z), t(x, t(y, z).0))?;
                }
            }
            typed("lunit", x, lunit[x], t(unit.0, x), ObjId(x))?;
            typed("runit", x, runit[x], t(x, unit.0), ObjId(x))?;
        }
        let inverse = base
            .morphisms()
            .map(|f| crate::fincat::is_isomorphism(&base, f))
            .collect();
        Ok(Self {
            base,
            tensor,
            unit,
            assoc,
            lunit,
            runit,
            inverse,
        })
    }

    /// Same as [`MonoidalStructure::new`] but takes the tensor as raw tables
    /// over the lexicographically indexed product.
    pub fn from_tables(
        base: Arc<FinCategory>,
        tensor_ob: Vec<ObjId>,
        tensor_mor: Vec<MorId>,
        unit: ObjId,
        assoc: Vec<MorId>,
        lunit: Vec<MorId>,
        runit: Vec<MorId>,
    ) -> Result<Self, StructureError> {
        let product = Arc::new(product_category(&base, &base));
        let tensor = FinFunctor::new(product, base.clone(), tensor_ob, tensor_mor)?;
        Self::new(base, tensor, unit, assoc, lunit, runit)
    }

    /// The discrete category on `0..n` with tensor given by a multiplication
    /// table and every structure map an identity. The table is not required
    /// to be a group; a failing law shows up in validation.
    pub fn discrete_strict(n: usize, table: &[usize], unit: usize) -> Result<Self, StructureError> {
        let base = Arc::new(FinCategory::discrete(n));
        if table.len() != n * n {
            return Err(StructureError::TableSize {
                table: "multiplication",
                expected: n * n,
                found: table.len(),
            });
        }
        let tensor_ob: Vec<ObjId> = table.iter().map(|&v| ObjId(v)).collect();
        let tensor_mor: Vec<MorId> = table.iter().map(|&v| MorId(v)).collect();
        let assoc = (0..n * n * n)
            .map(|k| {
                let (x, y, z) = (k / (n * n), (k / n) % n, k % n);
                MorId(table.get(table[x * n + y] * n + z).copied().unwrap_or(n))
            })
            .collect();
        let ids = (0..n).map(MorId).collect::<Vec<_>>();
        Self::from_tables(base, tensor_ob, tensor_mor, ObjId(unit), assoc, ids.clone(), ids)
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn tensor(&self) -> &FinFunctor {
        &self.tensor
    }

    pub fn unit(&self) -> ObjId {
        self.unit
    }

    pub fn object_count(&self) -> usize {
        self.base.object_count()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + Clone {
        self.base.objects()
    }

    pub fn tensor_ob(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor.ob(ObjId(x.0 * self.object_count() + y.0))
    }

    pub fn tensor_mor(&self, f: MorId, g: MorId) -> MorId {
        self.tensor.mor(MorId(f.0 * self.base.morphism_count() + g.0))
    }

    pub fn assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> MorId {
        let n = self.object_count();
        self.assoc[x.0 * n * n + y.0 * n + z.0]
    }

    pub fn lunit(&self, x: ObjId) -> MorId {
        self.lunit[x.0]
    }

    pub fn runit(&self, x: ObjId) -> MorId {
        self.runit[x.0]
    }

    pub fn assoc_table(&self) -> &[MorId] {
        &self.assoc
    }

    pub fn lunit_table(&self) -> &[MorId] {
        &self.lunit
    }

    pub fn runit_table(&self) -> &[MorId] {
        &self.runit
    }

    pub fn id(&self, x: ObjId) -> MorId {
        self.base.identity(x)
    }

    /// The two-sided inverse of `f`, if any.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        self.inverse[f.0]
    }

    pub fn all_invertible(&self) -> bool {
        self.inverse.iter().all(Option::is_some)
    }

    pub fn compose(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.base.compose(f, g)
    }

    /// Composite of a path in diagrammatic order.
    pub fn seq(&self, path: &[MorId]) -> Option<MorId> {
        self.base.compose_all(path)
    }

    /// `f ⊗ 1_x`.
    pub fn right_whisker(&self, f: MorId, x: ObjId) -> MorId {
        self.tensor_mor(f, self.id(x))
    }

    /// `1_x ⊗ f`.
    pub fn left_whisker(&self, x: ObjId, f: MorId) -> MorId {
        self.tensor_mor(self.id(x), f)
    }
}

/// For every object 4-tuple,
/// `(a_{x,y,z}⊗1)·a_{x,y⊗z,w}·(1⊗a_{y,z,w}) = a_{x⊗y,z,w}·a_{x,y,z⊗w}`.
pub fn check_pentagon(m: &MonoidalStructure) -> ValidationReport {
    let mut report = ValidationReport::new();
    for x in m.objects() {
        for y in m.objects() {
            let xy = m.tensor_ob(x, y);
            for z in m.objects() {
                let yz = m.tensor_ob(y, z);
                for w in m.objects() {
                    let zw = m.tensor_ob(z, w);
                    let left = m.seq(&[
                        m.right_whisker(m.assoc(x, y, z), w),
                        m.assoc(x, yz, w),
                        m.left_whisker(x, m.assoc(y, z, w)),
                    ]);
                    let right = m.seq(&[m.assoc(xy, z, w), m.assoc(x, y, zw)]);
                    report.check(Law::Pentagon, left.is_some() && left == right, || {
                        vec![x.0, y.0, z.0, w.0]
                    });
                }
            }
        }
    }
    report
}

/// For every object pair, `a_{x,1,y}·(1⊗ℓ_y) = r_x⊗1_y`.
pub fn check_triangle(m: &MonoidalStructure) -> ValidationReport {
    let mut report = ValidationReport::new();
    let one = m.unit();
    for x in m.objects() {
        for y in m.objects() {
            let left = m.compose(m.assoc(x, one, y), m.left_whisker(x, m.lunit(y)));
            let right = m.right_whisker(m.runit(x), y);
            report.check(Law::Triangle, left == Some(right), || vec![x.0, y.0]);
        }
    }
    report
}

/// Naturality of `a`, `ℓ` and `r` over all morphisms.
pub fn check_structure_naturality(m: &MonoidalStructure) -> ValidationReport {
    let c = m.base();
    let mut report = ValidationReport::new();
    for f in c.morphisms() {
        for g in c.morphisms() {
            let fg = m.tensor_mor(f, g);
            for h in c.morphisms() {
                let (x, y, z) = (c.dom(f), c.dom(g), c.dom(h));
                let (x2, y2, z2) = (c.cod(f), c.cod(g), c.cod(h));
                let left = m.compose(m.tensor_mor(fg, h), m.assoc(x2, y2, z2));
                let right = m.compose(m.assoc(x, y, z), m.tensor_mor(f, m.tensor_mor(g, h)));
                report.check(Law::AssocNatural, left.is_some() && left == right, || {
                    vec![f.0, g.0, h.0]
                });
            }
        }
    }
    for f in c.morphisms() {
        let (x, y) = (c.dom(f), c.cod(f));
        let left = m.compose(m.left_whisker(m.unit(), f), m.lunit(y));
        let right = m.compose(m.lunit(x), f);
        report.check(Law::LunitNatural, left.is_some() && left == right, || vec![f.0]);
        let left = m.compose(m.right_whisker(f, m.unit()), m.runit(y));
        let right = m.compose(m.runit(x), f);
        report.check(Law::RunitNatural, left.is_some() && left == right, || vec![f.0]);
    }
    report
}

/// Every component of `a`, `ℓ`, `r` is an isomorphism. Witnesses are
/// `[0, x, y, z]` for the associator, `[1, x]` for `ℓ` and `[2, x]` for `r`.
pub fn check_structure_invertible(m: &MonoidalStructure) -> ValidationReport {
    let mut report = ValidationReport::new();
    for x in m.objects() {
        for y in m.objects() {
            for z in m.objects() {
                let ok = m.inverse(m.assoc(x, y, z)).is_some();
                report.check(Law::StructureInvertible, ok, || vec![0, x.0, y.0, z.0]);
            }
        }
        let ok = m.inverse(m.lunit(x)).is_some();
        report.check(Law::StructureInvertible, ok, || vec![1, x.0]);
        let ok = m.inverse(m.runit(x)).is_some();
        report.check(Law::StructureInvertible, ok, || vec![2, x.0]);
    }
    report
}

/// Category laws of the base, functoriality of the tensor (which includes
/// the interchange law), naturality and invertibility of the structure
/// maps, pentagon and triangle.
pub fn validate_monoidal(m: &MonoidalStructure) -> ValidationReport {
    let mut report = validate_category(m.base());
    report.merge(validate_functor(m.tensor()));
    report.merge(check_structure_naturality(m));
    report.merge(check_structure_invertible(m));
    report.merge(check_pentagon(m));
    report.merge(check_triangle(m));
    report
}

pub fn is_strict(m: &MonoidalStructure) -> bool {
    let c = m.base();
    m.assoc_table()
        .iter()
        .chain(m.lunit_table())
        .chain(m.runit_table())
        .all(|&f| c.is_identity(f))
}

/// A formal bracketed word of objects and units.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bracketing {
    Unit,
    Leaf(ObjId),
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn node(a: Bracketing, b: Bracketing) -> Self {
        Bracketing::Node(Box::new(a), Box::new(b))
    }

    /// The left-parenthesised, unit-free word on `leaves`; `Unit` when empty.
    pub fn left_comb(leaves: &[ObjId]) -> Self {
        let mut iter = leaves.iter();
        let Some(&first) = iter.next() else {
            return Bracketing::Unit;
        };
        iter.fold(Bracketing::Leaf(first), |acc, &x| {
            Bracketing::node(acc, Bracketing::Leaf(x))
        })
    }

    /// Object leaves in order, units dropped.
    pub fn leaves(&self) -> Vec<ObjId> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<ObjId>) {
        match self {
            Bracketing::Unit => {}
            Bracketing::Leaf(x) => out.push(*x),
            Bracketing::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Evaluates the word to an object.
    pub fn object(&self, m: &MonoidalStructure) -> ObjId {
        match self {
            Bracketing::Unit => m.unit(),
            Bracketing::Leaf(x) => *x,
            Bracketing::Node(a, b) => m.tensor_ob(a.object(m), b.object(m)),
        }
    }
}

/// The canonical structural isomorphism from `tree` to the left-parenthesised
/// unit-free form of its leaves. Built recursively: normalise both halves,
/// then merge the right normal form into the left one by repeated `a⁻¹`,
/// removing a unit with `ℓ` or `r` when one side is empty. `None` only if the
/// tables are ill typed.
pub fn canon(m: &MonoidalStructure, tree: &Bracketing) -> Option<MorId> {
    match tree {
        Bracketing::Unit => Some(m.id(m.unit())),
        Bracketing::Leaf(x) => Some(m.id(*x)),
        Bracketing::Node(a, b) => {
            let (ca, cb) = (canon(m, a)?, canon(m, b)?);
            let (la, lb) = (a.leaves(), b.leaves());
            m.compose(m.tensor_mor(ca, cb), merge(m, &la, &lb)?)
        }
    }
}

/// `LP(la) ⊗ LP(lb) -> LP(la ++ lb)` where `LP` is the left comb.
fn merge(m: &MonoidalStructure, la: &[ObjId], lb: &[ObjId]) -> Option<MorId> {
    let lp = |w: &[ObjId]| Bracketing::left_comb(w).object(m);
    match (la.is_empty(), lb) {
        (_, []) => Some(m.runit(lp(la))),
        (true, _) => Some(m.lunit(lp(lb))),
        (false, [_]) => Some(m.id(m.tensor_ob(lp(la), lp(lb)))),
        (false, [init @ .., w]) => {
            let assoc_inv = m.inverse(m.assoc(lp(la), lp(init), *w))?;
            m.compose(assoc_inv, m.right_whisker(merge(m, la, init)?, *w))
        }
    }
}

/// One formal structural move applied at some subtree.
fn moves(m: &MonoidalStructure, tree: &Bracketing) -> Vec<(Bracketing, Option<MorId>)> {
    let mut out = Vec::new();
    match tree {
        Bracketing::Unit | Bracketing::Leaf(_) => {}
        Bracketing::Node(a, b) => {
            if let Bracketing::Node(a1, a2) = &**a {
                let f = m.assoc(a1.object(m), a2.object(m), b.object(m));
                let t = Bracketing::node((**a1).clone(), Bracketing::node((**a2).clone(), (**b).clone()));
                out.push((t, Some(f)));
            }
            if let Bracketing::Node(b1, b2) = &**b {
                let f = m.inverse(m.assoc(a.object(m), b1.object(m), b2.object(m)));
                let t = Bracketing::node(Bracketing::node((**a).clone(), (**b1).clone()), (**b2).clone());
                out.push((t, f));
            }
            if **a == Bracketing::Unit {
                out.push(((**b).clone(), Some(m.lunit(b.object(m)))));
            }
            if **b == Bracketing::Unit {
                out.push(((**a).clone(), Some(m.runit(a.object(m)))));
            }
            for (t, f) in moves(m, a) {
                let g = f.map(|f| m.right_whisker(f, b.object(m)));
                out.push((Bracketing::node(t, (**b).clone()), g));
            }
            for (t, f) in moves(m, b) {
                let g = f.map(|f| m.left_whisker(a.object(m), f));
                out.push((Bracketing::node((**a).clone(), t), g));
            }
        }
    }
    out
}

fn bracketings(word: &[Bracketing]) -> Vec<Bracketing> {
    if word.len() == 1 {
        return vec![word[0].clone()];
    }
    let mut out = Vec::new();
    for split in 1..word.len() {
        for l in bracketings(&word[..split]) {
            for r in bracketings(&word[split..]) {
                out.push(Bracketing::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Spot check of Mac Lane coherence: over every bracketed word of length
/// `1..=max_len` in the objects and a formal unit, every single structural
/// move commutes with [`canon`]. Since `canon` picks one path to the normal
/// form, this makes any two structural paths between the same bracketings
/// agree. Witness: the word (units written as `object_count`) then the move
/// index.
pub fn check_coherence(m: &MonoidalStructure, max_len: usize) -> ValidationReport {
    let n = m.object_count();
    let mut alphabet: Vec<Bracketing> = m.objects().map(Bracketing::Leaf).collect();
    alphabet.push(Bracketing::Unit);
    let mut report = ValidationReport::new();
    let mut words: Vec<Vec<Bracketing>> = vec![vec![]];
    for _ in 0..max_len {
        words = words
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |a| {
                    let mut w = w.clone();
                    w.push(a.clone());
                    w
                })
            })
            .collect();
        for word in &words {
            let code: Vec<usize> = word
                .iter()
                .map(|b| match b {
                    Bracketing::Leaf(x) => x.0,
                    _ => n,
                })
                .collect();
            for tree in bracketings(word) {
                let start = canon(m, &tree);
                for (k, (next, f)) in moves(m, &tree).into_iter().enumerate() {
                    let via = f.and_then(|f| canon(m, &next).and_then(|c| m.compose(f, c)));
                    report.check(Law::Coherence, start.is_some() && start == via, || {
                        let mut w = code.clone();
                        w.push(k);
                        w
                    });
                }
            }
        }
    }
    report
}
