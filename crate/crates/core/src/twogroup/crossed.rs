use crate::group::FinGroup;
use crate::report::StructureError;

/// A crossed module `t: H -> G` with a left action `α` of `G` on `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    g: FinGroup,
    h: FinGroup,
    t: Vec<usize>,
    action: Vec<usize>,
}

fn invalid(what: &str) -> StructureError {
    StructureError::Precondition(format!("not a crossed module: {what}"))
}

impl CrossedModule {
    /// `action[g * |H| + h] = α(g, h)`. Checks that `t` is a homomorphism,
    /// `α` is an action by automorphisms, equivariance
    /// `t(α(g,h)) = g t(h) g⁻¹` and the Peiffer identity
    /// `α(t(h), h') = h h' h⁻¹`.
    pub fn new(g: FinGroup, h: FinGroup, t: Vec<usize>, action: Vec<usize>) -> Result<Self, StructureError> {
        let (ng, nh) = (g.order(), h.order());
        if !h.is_homomorphism_to(&g, &t) {
            return Err(invalid("t is not a homomorphism"));
        }
        if action.len() != ng * nh || action.iter().any(|&v| v >= nh) {
            return Err(invalid("action table has the wrong shape"));
        }
        let act = |a: usize, b: usize| action[a * nh + b];
        for a in g.elements() {
            let row = &action[a * nh..(a + 1) * nh];
            if !h.is_homomorphism_to(&h, row) {
                return Err(invalid("some α(g, -) is not an endomorphism"));
            }
            let mut seen = vec![false; nh];
            for &v in row {
                seen[v] = true;
            }
            if seen.contains(&false) {
                return Err(invalid("some α(g, -) is not bijective"));
            }
        }
        for b in h.elements() {
            if act(g.identity(), b) != b {
                return Err(invalid("the identity does not act trivially"));
            }
            for a1 in g.elements() {
                for a2 in g.elements() {
                    if act(g.mul(a1, a2), b) != act(a1, act(a2, b)) {
                        return Err(invalid("α is not a left action"));
                    }
                }
                if t[act(a1, b)] != g.mul(g.mul(a1, t[b]), g.inv(a1)) {
                    return Err(invalid("equivariance fails"));
                }
            }
            for b2 in h.elements() {
                if act(t[b], b2) != h.mul(h.mul(b, b2), h.inv(b)) {
                    return Err(invalid("the Peiffer identity fails"));
                }
            }
        }
        Ok(Self { g, h, t, action })
    }

    /// Builds from short names: groups as accepted by [`FinGroup::by_name`],
    /// `t` one of `id` or `trivial`, the action one of `trivial` or `conj`.
    /// `id` and `conj` need `G = H`.
    pub fn from_names(g: &str, h: &str, t: &str, action: &str) -> Result<Self, StructureError> {
        let unknown = |s: &str| StructureError::Precondition(format!("unknown group `{s}`"));
        let gg = FinGroup::by_name(g).ok_or_else(|| unknown(g))?;
        let hh = FinGroup::by_name(h).ok_or_else(|| unknown(h))?;
        let same = gg == hh;
        let tmap = match t {
            "trivial" => vec![gg.identity(); hh.order()],
            "id" if same => hh.elements().collect(),
            "id" => return Err(invalid("t = id needs G = H")),
            other => return Err(StructureError::Precondition(format!("unknown map `{other}`"))),
        };
        let mut act = Vec::with_capacity(gg.order() * hh.order());
        for a in gg.elements() {
            for b in hh.elements() {
                act.push(match action {
                    "trivial" => b,
                    "conj" if same => gg.mul(gg.mul(a, b), gg.inv(a)),
                    "conj" => return Err(invalid("conjugation action needs G = H")),
                    other => {
                        return Err(StructureError::Precondition(format!("unknown action `{other}`")))
                    }
                });
            }
        }
        Self::new(gg, hh, tmap, act)
    }

    pub fn base_group(&self) -> &FinGroup {
        &self.g
    }

    pub fn fibre_group(&self) -> &FinGroup {
        &self.h
    }

    pub fn t(&self, h: usize) -> usize {
        self.t[h]
    }

    pub fn act(&self, g: usize, h: usize) -> usize {
        self.action[g * self.h.order() + h]
    }
}
