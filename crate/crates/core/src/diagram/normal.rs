//! Compaction normal form.
//!
//! Generators float upward one layer at a time until blocked, and layers
//! made only of identity cells are dropped. A cap floats when both of its
//! strands come from consecutive identity cells directly above. A cup floats
//! when its gap in the layer above is a single cell boundary: not between
//! the two legs of a cup, and not at a gap where a cap sits. The second
//! condition keeps a cup that hangs under a cap distinct from one beside it.

use super::{Cell, Diagram, Layer};

pub(crate) fn offsets(layer: &[Cell], outputs: bool) -> Vec<usize> {
    let mut acc = 0;
    let mut out = Vec::with_capacity(layer.len() + 1);
    out.push(0);
    for c in layer {
        acc += if outputs { c.outputs().len() } else { c.inputs().len() };
        out.push(acc);
    }
    out
}

/// Insertion index in `layer` for a zero-width cell at output gap `g`, if
/// exactly one index sits at that gap.
pub(crate) fn unique_output_slot(layer: &[Cell], g: usize) -> Option<usize> {
    let off = offsets(layer, true);
    let mut slots = off.iter().enumerate().filter(|&(_, &o)| o == g).map(|(t, _)| t);
    let first = slots.next()?;
    slots.next().is_none().then_some(first)
}

/// Index of the cell producing output strand `s` of `layer`, with the
/// position of `s` among that cell's outputs.
pub(crate) fn producer(layer: &[Cell], s: usize) -> Option<(usize, usize)> {
    let mut acc = 0;
    for (u, c) in layer.iter().enumerate() {
        let n = c.outputs().len();
        if s < acc + n {
            return Some((u, s - acc));
        }
        acc += n;
    }
    None
}

fn try_float(layers: &mut [Layer], k: usize, c: usize) -> bool {
    let cell = layers[k][c];
    if cell.is_cap() {
        let s = offsets(&layers[k], false)[c];
        let Some((u, 0)) = producer(&layers[k - 1], s) else {
            return false;
        };
        let above = &layers[k - 1];
        if !(above[u].is_id() && above.get(u + 1).is_some_and(|n| n.is_id())) {
            return false;
        }
        layers[k - 1].splice(u..u + 2, [cell]);
        layers[k].remove(c);
        true
    } else if cell.is_cup() {
        let g = offsets(&layers[k], false)[c];
        let Some(t) = unique_output_slot(&layers[k - 1], g) else {
            return false;
        };
        layers[k - 1].insert(t, cell);
        let outs = cell.outputs();
        layers[k].splice(c..c + 1, [Cell::Id(outs[0]), Cell::Id(outs[1])]);
        true
    } else {
        false
    }
}

fn drop_identity_layers(layers: &mut Vec<Layer>) {
    layers.retain(|layer| !layer.iter().all(|c| c.is_id()));
}

fn step(layers: &mut [Layer]) -> bool {
    for k in 1..layers.len() {
        for c in 0..layers[k].len() {
            if try_float(layers, k, c) {
                return true;
            }
        }
    }
    false
}

/// The normal form of a valid diagram. Idempotent, and preserves the
/// boundaries and the multiset of generators.
pub fn normalise(d: &Diagram) -> Diagram {
    let mut layers = d.layers.clone();
    drop_identity_layers(&mut layers);
    while step(&mut layers) {
        drop_identity_layers(&mut layers);
    }
    Diagram {
        top: d.top.clone(),
        layers,
        bottom: d.bottom.clone(),
    }
}
