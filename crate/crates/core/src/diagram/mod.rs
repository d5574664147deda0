//! String diagrams on a single object `x` and its chosen dual, drawn with
//! the unit `i`, counit `e` and their inverses as cups and caps.
//!
//! A diagram is a stack of layers read top to bottom. Each layer is a word
//! of cells whose inputs concatenate to the layer's top boundary and whose
//! outputs concatenate to its bottom boundary.

mod eval;
mod normal;
mod rules;
mod search;
mod walk;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use eval::evaluate;
pub use normal::normalise;
pub use rules::{apply_rule, generator_count, rewrite_rules, successors, Direction, Rule, RuleInfo, Site, Step, ALL_RULES};
pub use walk::random_walk;
pub use search::{equivalent, equivalent_with_stats, replay, RewriteTrace, SearchOutcome, DEFAULT_MAX_STEPS, EXTRA_GENERATORS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("boundaries differ: {0}")]
    BoundaryMismatch(String),
    #[error("ill-formed diagram: {0}")]
    Invalid(String),
    #[error("rule {rule} does not match at {site}")]
    NoMatch { rule: String, site: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("evaluation failed: {0}")]
    Eval(String),
}

/// A strand: `Down` carries `x`, `Up` carries `x̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wire {
    Down,
    Up,
}

impl Wire {
    pub fn symbol(self) -> &'static str {
        match self {
            Wire::Down => "-",
            Wire::Up => "+",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "-" => Some(Wire::Down),
            "+" => Some(Wire::Up),
            _ => None,
        }
    }
}

/// One cell of a layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Id(Wire),
    /// `i: 1 -> x⊗x̄`
    CupI,
    /// `e⁻¹: 1 -> x̄⊗x`
    CupE,
    /// `e: x̄⊗x -> 1`
    CapE,
    /// `i⁻¹: x⊗x̄ -> 1`
    CapI,
}

const DOWN_UP: &[Wire] = &[Wire::Down, Wire::Up];
const UP_DOWN: &[Wire] = &[Wire::Up, Wire::Down];

impl Cell {
    pub fn inputs(self) -> &'static [Wire] {
        match self {
            Cell::Id(Wire::Down) => &[Wire::Down],
            Cell::Id(Wire::Up) => &[Wire::Up],
            Cell::CupI | Cell::CupE => &[],
            Cell::CapE => UP_DOWN,
            Cell::CapI => DOWN_UP,
        }
    }

    pub fn outputs(self) -> &'static [Wire] {
        match self {
            Cell::Id(Wire::Down) => &[Wire::Down],
            Cell::Id(Wire::Up) => &[Wire::Up],
            Cell::CupI => DOWN_UP,
            Cell::CupE => UP_DOWN,
            Cell::CapE | Cell::CapI => &[],
        }
    }

    pub fn is_id(self) -> bool {
        matches!(self, Cell::Id(_))
    }

    pub fn is_cup(self) -> bool {
        matches!(self, Cell::CupI | Cell::CupE)
    }

    pub fn is_cap(self) -> bool {
        matches!(self, Cell::CapE | Cell::CapI)
    }

    pub fn mnemonic(self) -> &'static str {
        match self {
            Cell::Id(Wire::Down) => "ID-",
            Cell::Id(Wire::Up) => "ID+",
            Cell::CupI => "CUPI",
            Cell::CupE => "CUPE'",
            Cell::CapE => "CAPE",
            Cell::CapI => "CAPI'",
        }
    }

    pub fn from_mnemonic(s: &str) -> Option<Self> {
        Some(match s {
            "ID-" => Cell::Id(Wire::Down),
            "ID+" => Cell::Id(Wire::Up),
            "CUPI" => Cell::CupI,
            "CUPE'" => Cell::CupE,
            "CAPE" => Cell::CapE,
            "CAPI'" => Cell::CapI,
            _ => return None,
        })
    }
}

pub type Layer = Vec<Cell>;

fn layer_inputs(layer: &[Cell]) -> Vec<Wire> {
    layer.iter().flat_map(|c| c.inputs().iter().copied()).collect()
}

fn layer_outputs(layer: &[Cell]) -> Vec<Wire> {
    layer.iter().flat_map(|c| c.outputs().iter().copied()).collect()
}

/// A layered diagram. Fields are public so that ill-formed diagrams can be
/// represented and rejected by [`validate_diagram`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    pub top: Vec<Wire>,
    pub layers: Vec<Layer>,
    pub bottom: Vec<Wire>,
}

/// Checks that consecutive boundaries match.
pub fn validate_diagram(d: &Diagram) -> bool {
    let mut current = d.top.clone();
    for layer in &d.layers {
        if layer_inputs(layer) != current {
            return false;
        }
        current = layer_outputs(layer);
    }
    current == d.bottom
}

impl Diagram {
    /// Builds and validates.
    pub fn new(top: Vec<Wire>, layers: Vec<Layer>, bottom: Vec<Wire>) -> Result<Self, DiagramError> {
        let d = Self { top, layers, bottom };
        if validate_diagram(&d) {
            Ok(d)
        } else {
            Err(DiagramError::Invalid("layer boundaries do not match".into()))
        }
    }

    /// Builds from a top boundary and layers, deriving the bottom.
    pub fn from_layers(top: Vec<Wire>, layers: Vec<Layer>) -> Result<Self, DiagramError> {
        let mut current = top.clone();
        for (k, layer) in layers.iter().enumerate() {
            if layer_inputs(layer) != current {
                return Err(DiagramError::Invalid(format!("layer {k} does not fit the boundary above it")));
            }
            current = layer_outputs(layer);
        }
        Ok(Self {
            top,
            layers,
            bottom: current,
        })
    }

    /// The identity on a word of wires: no layers.
    pub fn identity(wires: Vec<Wire>) -> Self {
        Self {
            top: wires.clone(),
            layers: Vec::new(),
            bottom: wires,
        }
    }

    pub fn wire(w: Wire) -> Self {
        Self::identity(vec![w])
    }

    /// A single cell as a one-layer diagram.
    pub fn cell(c: Cell) -> Self {
        Self {
            top: c.inputs().to_vec(),
            layers: vec![vec![c]],
            bottom: c.outputs().to_vec(),
        }
    }

    /// Vertical composite: `self` on top of `below`.
    pub fn then(&self, below: &Diagram) -> Result<Self, DiagramError> {
        if self.bottom != below.top {
            return Err(DiagramError::BoundaryMismatch(
                "bottom of the upper diagram is not the top of the lower one".into(),
            ));
        }
        let mut layers = self.layers.clone();
        layers.extend(below.layers.iter().cloned());
        Ok(Self {
            top: self.top.clone(),
            layers,
            bottom: below.bottom.clone(),
        })
    }

    /// Horizontal composite, padding the shorter side with identity layers.
    pub fn beside(&self, right: &Diagram) -> Self {
        let depth = self.layers.len().max(right.layers.len());
        let pad = |d: &Diagram, k: usize| -> Layer {
            match d.layers.get(k) {
                Some(layer) => layer.clone(),
                None => d.bottom.iter().map(|&w| Cell::Id(w)).collect(),
            }
        };
        let layers = (0..depth)
            .map(|k| {
                let mut layer = pad(self, k);
                layer.extend(pad(right, k));
                layer
            })
            .collect();
        let mut top = self.top.clone();
        top.extend(&right.top);
        let mut bottom = self.bottom.clone();
        bottom.extend(&right.bottom);
        Self { top, layers, bottom }
    }

    /// Wires at boundary `b`: `0` is the top, `b` is below layer `b - 1`.
    pub fn boundary(&self, b: usize) -> Vec<Wire> {
        if b == 0 {
            self.top.clone()
        } else {
            layer_outputs(&self.layers[b - 1])
        }
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }
}

/// The unit `i'` built from `i`, `e⁻¹` and `i⁻¹`: a cup whose right leg
/// makes an extra zig-zag. Top is empty, bottom is `(x, x̄)`.
pub fn iprime_diagram() -> Diagram {
    use Cell::*;
    use Wire::*;
    Diagram::new(
        vec![],
        vec![vec![CupI], vec![Id(Down), CupE, Id(Up)], vec![CapI, Id(Down), Id(Up)]],
        vec![Down, Up],
    )
    .expect("i' diagram is well formed")
}

/// `(u ⊗ 1_x) ; (1_x ⊗ e)`, the left side of the first zig-zag identity for a unit `u`.
pub fn zigzag1_diagram(unit: &Diagram) -> Result<Diagram, DiagramError> {
    let top = unit.beside(&Diagram::wire(Wire::Down));
    top.then(&Diagram::wire(Wire::Down).beside(&Diagram::cell(Cell::CapE)))
}

/// `(1_x̄ ⊗ u) ; (e ⊗ 1_x̄)`, the left side of the second zig-zag identity for a unit `u`.
pub fn zigzag2_diagram(unit: &Diagram) -> Result<Diagram, DiagramError> {
    let top = Diagram::wire(Wire::Up).beside(unit);
    top.then(&Diagram::cell(Cell::CapE).beside(&Diagram::wire(Wire::Up)))
}

fn write_wires(f: &mut fmt::Formatter<'_>, head: &str, wires: &[Wire]) -> fmt::Result {
    f.write_str(head)?;
    for w in wires {
        write!(f, " {}", w.symbol())?;
    }
    writeln!(f)
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_wires(f, "TOP", &self.top)?;
        for layer in &self.layers {
            f.write_str("LAYER")?;
            for c in layer {
                write!(f, " {}", c.mnemonic())?;
            }
            writeln!(f)?;
        }
        write_wires(f, "BOTTOM", &self.bottom)
    }
}

impl FromStr for Diagram {
    type Err = DiagramError;

    /// Reads `TOP`, any number of `LAYER` lines and `BOTTOM`. Blank lines and
    /// `#` comments are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut top = None;
        let mut bottom = None;
        let mut layers = Vec::new();
        for (n, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| DiagramError::Parse { line: n + 1, msg };
            let mut tokens = line.split_whitespace();
            let head = tokens.next().unwrap_or_default();
            let wires = |tokens: std::str::SplitWhitespace<'_>| {
                tokens
                    .map(|t| Wire::parse(t).ok_or_else(|| err(format!("unknown wire `{t}`"))))
                    .collect::<Result<Vec<_>, _>>()
            };
            match head {
                "TOP" if top.is_none() => top = Some(wires(tokens)?),
                "BOTTOM" if bottom.is_none() => bottom = Some(wires(tokens)?),
                "LAYER" if top.is_some() && bottom.is_none() => {
                    let layer = tokens
                        .map(|t| Cell::from_mnemonic(t).ok_or_else(|| err(format!("unknown cell `{t}`"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    layers.push(layer);
                }
                other => return Err(err(format!("unexpected `{other}`"))),
            }
        }
        let missing = |what: &str| DiagramError::Parse {
            line: 0,
            msg: format!("missing {what} line"),
        };
        let d = Diagram {
            top: top.ok_or_else(|| missing("TOP"))?,
            layers,
            bottom: bottom.ok_or_else(|| missing("BOTTOM"))?,
        };
        if validate_diagram(&d) {
            Ok(d)
        } else {
            Err(DiagramError::Invalid("layer boundaries do not match".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Cell::*;
    use Wire::*;

    #[test]
    fn validation_examples() {
        assert!(validate_diagram(&Diagram::wire(Down)));
        let cup = Diagram {
            top: vec![],
            layers: vec![vec![CupI]],
            bottom: vec![Down, Up],
        };
        assert!(validate_diagram(&cup));
        let wrong = Diagram {
            bottom: vec![Up, Down],
            ..cup
        };
        assert!(!validate_diagram(&wrong));
    }

    #[test]
    fn iprime_shape() {
        let d = iprime_diagram();
        assert!(validate_diagram(&d));
        let generators = d.layers.iter().flatten().filter(|c| !c.is_id()).count();
        assert_eq!(generators, 3);
        assert_eq!(d.top, vec![]);
        assert_eq!(d.bottom, vec![Down, Up]);
    }

    #[test]
    fn zigzag_builders() {
        let z1 = zigzag1_diagram(&iprime_diagram()).unwrap();
        assert_eq!(
            z1.layers,
            vec![
                vec![CupI, Id(Down)],
                vec![Id(Down), CupE, Id(Up), Id(Down)],
                vec![CapI, Id(Down), Id(Up), Id(Down)],
                vec![Id(Down), CapE],
            ]
        );
        let z2 = zigzag2_diagram(&iprime_diagram()).unwrap();
        assert_eq!(z2.top, vec![Up]);
        assert_eq!(z2.bottom, vec![Up]);
        assert_eq!(z2.layers[3], vec![CapE, Id(Up)]);
    }

    #[test]
    fn text_round_trip() {
        let d = zigzag2_diagram(&iprime_diagram()).unwrap();
        let text = d.to_string();
        assert!(text.starts_with("TOP +\nLAYER ID+ CUPI\n"));
        assert_eq!(text.parse::<Diagram>().unwrap(), d);
        let empty = Diagram::identity(vec![]);
        assert_eq!(empty.to_string().parse::<Diagram>().unwrap(), empty);
        assert!("TOP -\nLAYER CUPI\nBOTTOM -".parse::<Diagram>().is_err());
        assert!("TOP -\nLAYER BOGUS\nBOTTOM -".parse::<Diagram>().is_err());
    }
}
