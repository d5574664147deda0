use super::{Cell, Diagram, DiagramError, Wire};
use crate::fincat::{MorId, ObjId};
use crate::improve::InverseChoice;
use crate::monoidal::{canon, Bracketing, MonoidalStructure};

fn eval_err(msg: impl Into<String>) -> DiagramError {
    DiagramError::Eval(msg.into())
}

/// Interprets `d` in `m`, with `Down` as `x` and `Up` as its chosen dual.
///
/// Boundaries are read as left-parenthesised words with units removed. A
/// layer is the left-nested tensor of its cells, conjugated by the
/// canonical isomorphisms between that bracketing and the boundary words.
pub fn evaluate(d: &Diagram, m: &MonoidalStructure, ch: &InverseChoice, x: ObjId) -> Result<MorId, DiagramError> {
    if !super::validate_diagram(d) {
        return Err(eval_err("diagram is ill formed"));
    }
    if x.0 >= m.object_count() {
        return Err(eval_err(format!("object {x} out of range")));
    }
    let xd = ch.dual(x);
    let obj = |w: Wire| match w {
        Wire::Down => x,
        Wire::Up => xd,
    };
    let (i, e) = (ch.unit_i(x), ch.counit_e(x));
    let inv = |f: MorId, what: &str| m.inverse(f).ok_or_else(|| eval_err(format!("{what} is not invertible")));
    let (i_inv, e_inv) = (inv(i, "i")?, inv(e, "e")?);
    let pair = |ws: &[Wire]| Bracketing::node(Bracketing::Leaf(obj(ws[0])), Bracketing::Leaf(obj(ws[1])));
    let cell_data = |c: Cell| -> (Bracketing, MorId, Bracketing) {
        match c {
            Cell::Id(w) => (Bracketing::Leaf(obj(w)), m.id(obj(w)), Bracketing::Leaf(obj(w))),
            Cell::CupI => (Bracketing::Unit, i, pair(c.outputs())),
            Cell::CupE => (Bracketing::Unit, e_inv, pair(c.outputs())),
            Cell::CapE => (pair(c.inputs()), e, Bracketing::Unit),
            Cell::CapI => (pair(c.inputs()), i_inv, Bracketing::Unit),
        }
    };
    let typing = || eval_err("composite is ill typed");
    let top_word: Vec<ObjId> = d.top.iter().map(|&w| obj(w)).collect();
    let mut acc = m.id(Bracketing::left_comb(&top_word).object(m));
    for layer in &d.layers {
        let mut cells = layer.iter().map(|&c| cell_data(c));
        let (t, f, b) = match cells.next() {
            None => (Bracketing::Unit, m.id(m.unit()), Bracketing::Unit),
            Some(first) => cells.fold(first, |(t, f, b), (t2, f2, b2)| {
                (Bracketing::node(t, t2), m.tensor_mor(f, f2), Bracketing::node(b, b2))
            }),
        };
        let into = m.inverse(canon(m, &t).ok_or_else(typing)?).ok_or_else(typing)?;
        let out = canon(m, &b).ok_or_else(typing)?;
        acc = m.seq(&[acc, into, f, out]).ok_or_else(typing)?;
    }
    Ok(acc)
}
