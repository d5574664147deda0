//! The six local rewrite rules, their match sites, and rule application.
//!
//! Every application normalises its result, so rules act on compaction
//! normal forms. Each rule is used forwards (simplifying) and backwards.

use std::fmt;
use std::str::FromStr;

use super::normal::{normalise, offsets, producer};
use super::{layer_outputs, Cell, Diagram, DiagramError, Layer, Wire};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// cup `i` closed by cap `i⁻¹` ↔ nothing
    LoopI,
    /// cup `e⁻¹` closed by cap `e` ↔ nothing
    LoopE,
    /// cap `e` above cup `e⁻¹` at its gap ↔ strands `x̄, x`
    CancelE,
    /// cap `i⁻¹` above cup `i` at its gap ↔ strands `x, x̄`
    CancelI,
    /// cap `e` beside cup `e⁻¹` ↔ cap `e` above cup `e⁻¹`
    SlideE,
    /// cap `i⁻¹` beside cup `i` ↔ cap `i⁻¹` above cup `i`
    SlideI,
}

pub const ALL_RULES: [Rule; 6] = [
    Rule::LoopI,
    Rule::LoopE,
    Rule::CancelE,
    Rule::CancelI,
    Rule::SlideE,
    Rule::SlideI,
];

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::LoopI => "LOOP_I",
            Rule::LoopE => "LOOP_E",
            Rule::CancelE => "CANCEL_E",
            Rule::CancelI => "CANCEL_I",
            Rule::SlideE => "SLIDE_E",
            Rule::SlideI => "SLIDE_I",
        }
    }

    /// The cap and the cup the rule is about.
    fn pair(self) -> (Cell, Cell) {
        match self {
            Rule::LoopI | Rule::CancelI | Rule::SlideI => (Cell::CapI, Cell::CupI),
            Rule::LoopE | Rule::CancelE | Rule::SlideE => (Cell::CapE, Cell::CupE),
        }
    }

    /// Rules that only use invertibility of `i` and `e` with no sideways move.
    pub fn is_loop_or_cancel(self) -> bool {
        !matches!(self, Rule::SlideE | Rule::SlideI)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Rule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        ALL_RULES
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        })
    }
}

/// Where a rule applies. Layers and cells are 0-based; boundary `b` lies
/// above layer `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Site {
    /// The cap at `(layer, cell)`, whose two strands rise to a single cup.
    Loop { layer: usize, cell: usize },
    /// The cap at `(layer, upper)` and the cup at `(layer + 1, lower)` in its gap.
    Stacked { layer: usize, upper: usize, lower: usize },
    /// The cap at `(layer, cell)` with a cup directly to its left or right,
    /// either in the same layer or higher up with its legs running straight down.
    Adjacent { layer: usize, cell: usize, cup_left: bool },
    /// Gap `gap` of boundary `boundary`.
    Gap { boundary: usize, gap: usize },
    /// Strands `strand` and `strand + 1` of boundary `boundary`.
    Strands { boundary: usize, strand: usize },
    /// As `Stacked`, merged into one layer with the cup on the given side.
    Merge { layer: usize, upper: usize, lower: usize, cup_left: bool },
}

fn side(left: bool) -> &'static str {
    if left {
        "left"
    } else {
        "right"
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Site::Loop { layer, cell } => write!(f, "loop {layer} {cell}"),
            Site::Stacked { layer, upper, lower } => write!(f, "stacked {layer} {upper} {lower}"),
            Site::Adjacent { layer, cell, cup_left } => write!(f, "adjacent {layer} {cell} {}", side(cup_left)),
            Site::Gap { boundary, gap } => write!(f, "gap {boundary} {gap}"),
            Site::Strands { boundary, strand } => write!(f, "strands {boundary} {strand}"),
            Site::Merge { layer, upper, lower, cup_left } => {
                write!(f, "merge {layer} {upper} {lower} {}", side(cup_left))
            }
        }
    }
}

impl FromStr for Site {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let num = |i: usize| -> Result<usize, String> {
            tokens
                .get(i)
                .ok_or_else(|| format!("site `{s}` is too short"))?
                .parse()
                .map_err(|_| format!("bad number in site `{s}`"))
        };
        let flag = |i: usize| match tokens.get(i) {
            Some(&"left") => Ok(true),
            Some(&"right") => Ok(false),
            _ => Err(format!("expected left or right in site `{s}`")),
        };
        let (site, len) = match tokens.first().copied() {
            Some("loop") => (Site::Loop { layer: num(1)?, cell: num(2)? }, 3),
            Some("stacked") => (Site::Stacked { layer: num(1)?, upper: num(2)?, lower: num(3)? }, 4),
            Some("adjacent") => (Site::Adjacent { layer: num(1)?, cell: num(2)?, cup_left: flag(3)? }, 4),
            Some("gap") => (Site::Gap { boundary: num(1)?, gap: num(2)? }, 3),
            Some("strands") => (Site::Strands { boundary: num(1)?, strand: num(2)? }, 3),
            Some("merge") => (
                Site::Merge { layer: num(1)?, upper: num(2)?, lower: num(3)?, cup_left: flag(4)? },
                5,
            ),
            _ => return Err(format!("unknown site `{s}`")),
        };
        if tokens.len() != len {
            return Err(format!("trailing tokens in site `{s}`"));
        }
        Ok(site)
    }
}

/// One rule application.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub rule: Rule,
    pub direction: Direction,
    pub site: Site,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.rule, self.direction, self.site)
    }
}

impl FromStr for Step {
    type Err = String;
    /// `RULE fwd|bwd SITE...`
    fn from_str(s: &str) -> Result<Self, String> {
        let mut parts = s.trim().splitn(3, char::is_whitespace);
        let rule = parts.next().unwrap_or_default().parse()?;
        let direction = match parts.next() {
            Some("fwd") => Direction::Forward,
            Some("bwd") => Direction::Backward,
            _ => return Err(format!("expected fwd or bwd in `{s}`")),
        };
        let site = parts.next().unwrap_or_default().parse()?;
        Ok(Step { rule, direction, site })
    }
}

/// A rule with its two sides as small typed diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleInfo {
    pub rule: Rule,
    pub lhs: Diagram,
    pub rhs: Diagram,
}

/// The six rules. Forward application at the obvious site turns `lhs` into `rhs`.
pub fn rewrite_rules() -> Vec<RuleInfo> {
    ALL_RULES
        .into_iter()
        .map(|rule| {
            let (cap, cup) = rule.pair();
            let strands = cap.inputs().to_vec();
            let stacked = Diagram::new(strands.clone(), vec![vec![cap], vec![cup]], strands.clone())
                .expect("stacked pair is typed");
            let (lhs, rhs) = match rule {
                Rule::LoopI | Rule::LoopE => (
                    Diagram::new(vec![], vec![vec![cup], vec![cap]], vec![]).expect("loop is typed"),
                    Diagram::identity(vec![]),
                ),
                Rule::CancelE | Rule::CancelI => (stacked, Diagram::identity(strands)),
                Rule::SlideE | Rule::SlideI => (
                    Diagram::new(
                        [strands.clone(), vec![]].concat(),
                        vec![vec![cap, cup]],
                        cup.outputs().to_vec(),
                    )
                    .expect("side by side pair is typed"),
                    stacked,
                ),
            };
            RuleInfo { rule, lhs, rhs }
        })
        .collect()
}

/// Number of cup and cap cells.
pub fn generator_count(d: &Diagram) -> usize {
    d.layers.iter().flatten().filter(|c| !c.is_id()).count()
}

fn no_match(step: &Step) -> DiagramError {
    DiagramError::NoMatch {
        rule: format!("{} {}", step.rule, step.direction),
        site: step.site.to_string(),
    }
}

/// Follows input strand `s` of layer `k` upward through identity cells.
/// Returns the identity cells passed and the generator reached with the
/// output position, or `None` at the top boundary.
fn trace_up(layers: &[Layer], k: usize, s: usize) -> (Vec<(usize, usize)>, Option<(usize, usize, usize)>) {
    let mut trail = Vec::new();
    let (mut k, mut s) = (k, s);
    while k > 0 {
        let (u, pos) = producer(&layers[k - 1], s).expect("strand exists in a valid diagram");
        if layers[k - 1][u].is_id() {
            trail.push((k - 1, u));
            s = offsets(&layers[k - 1], false)[u];
            k -= 1;
        } else {
            return (trail, Some((k - 1, u, pos)));
        }
    }
    (trail, None)
}

/// Cup cell reached by strands `s` and `s + 1` at the input of layer `k`,
/// with every identity cell on the way.
fn cup_above(layers: &[Layer], k: usize, s: usize, cup: Cell) -> Option<Vec<(usize, usize)>> {
    let (mut t0, g0) = trace_up(layers, k, s);
    let (t1, g1) = trace_up(layers, k, s + 1);
    match (g0, g1) {
        (Some((l0, u0, 0)), Some((l1, u1, 1))) if (l0, u0) == (l1, u1) && layers[l0][u0] == cup => {
            t0.extend(t1);
            t0.push((l0, u0));
            Some(t0)
        }
        _ => None,
    }
}

fn remove_cells(layers: &mut [Layer], mut cells: Vec<(usize, usize)>) {
    cells.sort_unstable();
    for &(k, c) in cells.iter().rev() {
        layers[k].remove(c);
    }
}

fn id_layer(wires: &[Wire]) -> Layer {
    wires.iter().map(|&w| Cell::Id(w)).collect()
}

fn finish(d: &Diagram, layers: Vec<Layer>) -> Diagram {
    normalise(&Diagram {
        top: d.top.clone(),
        layers,
        bottom: d.bottom.clone(),
    })
}

fn cell_at(d: &Diagram, layer: usize, cell: usize) -> Option<Cell> {
    d.layers.get(layer)?.get(cell).copied()
}

/// Checks the stacked configuration: cap at `(layer, upper)`, cup at
/// `(layer + 1, lower)` starting at the cap's output gap.
fn stacked_ok(d: &Diagram, rule: Rule, layer: usize, upper: usize, lower: usize) -> bool {
    let (cap, cup) = rule.pair();
    if cell_at(d, layer, upper) != Some(cap) || cell_at(d, layer + 1, lower) != Some(cup) {
        return false;
    }
    offsets(&d.layers[layer], true)[upper] == offsets(&d.layers[layer + 1], false)[lower]
}

/// Applies one step and returns the normalised result.
pub fn apply_rule(d: &Diagram, step: &Step) -> Result<Diagram, DiagramError> {
    let (cap, cup) = step.rule.pair();
    let fail = || no_match(step);
    let mut layers = d.layers.clone();
    use Direction::*;
    use Rule::*;
    match (step.rule, step.direction, step.site) {
        (LoopI | LoopE, Forward, Site::Loop { layer, cell }) => {
            if cell_at(d, layer, cell) != Some(cap) {
                return Err(fail());
            }
            let s = offsets(&layers[layer], false)[cell];
            let mut doomed = cup_above(&layers, layer, s, cup).ok_or_else(fail)?;
            doomed.push((layer, cell));
            remove_cells(&mut layers, doomed);
        }
        (LoopI | LoopE, Backward, Site::Gap { boundary, gap }) => {
            if boundary > layers.len() {
                return Err(fail());
            }
            let wires = d.boundary(boundary);
            if gap > wires.len() {
                return Err(fail());
            }
            let mut first = id_layer(&wires);
            first.insert(gap, cup);
            let mut second = id_layer(&wires);
            second.splice(gap..gap, [cap]);
            layers.splice(boundary..boundary, [first, second]);
        }
        (CancelE | CancelI, Forward, Site::Stacked { layer, upper, lower }) => {
            if !stacked_ok(d, step.rule, layer, upper, lower) {
                return Err(fail());
            }
            let ins = cap.inputs();
            layers[layer].splice(upper..upper + 1, [Cell::Id(ins[0]), Cell::Id(ins[1])]);
            let outs = cup.outputs();
            layers[layer + 1].splice(lower..lower + 1, [Cell::Id(outs[0]), Cell::Id(outs[1])]);
        }
        (CancelE | CancelI, Backward, Site::Strands { boundary, strand }) => {
            if boundary > layers.len() {
                return Err(fail());
            }
            let wires = d.boundary(boundary);
            if wires.get(strand..strand + 2) != Some(cap.inputs()) {
                return Err(fail());
            }
            let mut first = id_layer(&wires);
            first.splice(strand..strand + 2, [cap]);
            let mut second = id_layer(&layer_outputs(&first));
            second.insert(strand, cup);
            layers.splice(boundary..boundary, [first, second]);
        }
        (SlideE | SlideI, Forward, Site::Adjacent { layer, cell, cup_left }) => {
            if cell_at(d, layer, cell) != Some(cap) {
                return Err(fail());
            }
            let neighbour = if cup_left { cell.checked_sub(1) } else { Some(cell + 1) };
            let mut doomed = if neighbour.and_then(|n| cell_at(d, layer, n)) == Some(cup) {
                vec![(layer, neighbour.expect("checked above"))]
            } else {
                // cup higher up, legs entering this layer as the two
                // identity cells next to the cap
                let (a, b) = if cup_left {
                    (cell.checked_sub(2).ok_or_else(fail)?, cell - 1)
                } else {
                    (cell + 1, cell + 2)
                };
                let row = &layers[layer];
                if !(row.get(a).is_some_and(|c| c.is_id()) && row.get(b).is_some_and(|c| c.is_id())) {
                    return Err(fail());
                }
                let s = offsets(row, false)[a];
                let mut trail = cup_above(&layers, layer, s, cup).ok_or_else(fail)?;
                trail.push((layer, a));
                trail.push((layer, b));
                trail
            };
            let cap_pos = cell - doomed.iter().filter(|&&(k, c)| k == layer && c < cell).count();
            doomed.sort_unstable();
            remove_cells(&mut layers, std::mem::take(&mut doomed));
            let gap = offsets(&layers[layer], true)[cap_pos];
            let mut below = id_layer(&layer_outputs(&layers[layer]));
            below.insert(gap, cup);
            layers.insert(layer + 1, below);
        }
        (SlideE | SlideI, Backward, Site::Merge { layer, upper, lower, cup_left }) => {
            if !stacked_ok(d, step.rule, layer, upper, lower) {
                return Err(fail());
            }
            let outs = cup.outputs();
            layers[layer + 1].splice(lower..lower + 1, [Cell::Id(outs[0]), Cell::Id(outs[1])]);
            let at = if cup_left { upper } else { upper + 1 };
            layers[layer].insert(at, cup);
        }
        _ => return Err(fail()),
    }
    Ok(finish(d, layers))
}

/// Every site at which `rule` could apply in direction `dir`. Sites are
/// candidates; [`apply_rule`] decides.
fn candidate_sites(d: &Diagram, rule: Rule, dir: Direction) -> Vec<Site> {
    let (cap, cup) = rule.pair();
    let mut sites = Vec::new();
    let caps = || {
        d.layers
            .iter()
            .enumerate()
            .flat_map(move |(k, row)| row.iter().enumerate().filter(move |(_, &c)| c == cap).map(move |(c, _)| (k, c)))
    };
    let cups_below = |k: usize, c: usize| -> Vec<usize> {
        let Some(next) = d.layers.get(k + 1) else {
            return vec![];
        };
        let gap = offsets(&d.layers[k], true)[c];
        let inn = offsets(next, false);
        next.iter()
            .enumerate()
            .filter(|&(v, &cell)| cell == cup && inn[v] == gap)
            .map(|(v, _)| v)
            .collect()
    };
    match (rule, dir) {
        (Rule::LoopI | Rule::LoopE, Direction::Forward) => {
            sites.extend(caps().map(|(layer, cell)| Site::Loop { layer, cell }));
        }
        (Rule::LoopI | Rule::LoopE, Direction::Backward) => {
            for boundary in 0..=d.layers.len() {
                for gap in 0..=d.boundary(boundary).len() {
                    sites.push(Site::Gap { boundary, gap });
                }
            }
        }
        (Rule::CancelE | Rule::CancelI, Direction::Forward) => {
            for (layer, upper) in caps() {
                for lower in cups_below(layer, upper) {
                    sites.push(Site::Stacked { layer, upper, lower });
                }
            }
        }
        (Rule::CancelE | Rule::CancelI, Direction::Backward) => {
            for boundary in 0..=d.layers.len() {
                let wires = d.boundary(boundary);
                for strand in 0..wires.len().saturating_sub(1) {
                    if &wires[strand..strand + 2] == cap.inputs() {
                        sites.push(Site::Strands { boundary, strand });
                    }
                }
            }
        }
        (Rule::SlideE | Rule::SlideI, Direction::Forward) => {
            for (layer, cell) in caps() {
                for cup_left in [true, false] {
                    sites.push(Site::Adjacent { layer, cell, cup_left });
                }
            }
        }
        (Rule::SlideE | Rule::SlideI, Direction::Backward) => {
            for (layer, upper) in caps() {
                for lower in cups_below(layer, upper) {
                    for cup_left in [true, false] {
                        sites.push(Site::Merge { layer, upper, lower, cup_left });
                    }
                }
            }
        }
    }
    sites
}

/// All one-step rewrites of `d` that change it, in a fixed order, keeping
/// only results with at most `max_generators` cups and caps.
pub fn successors(d: &Diagram, max_generators: usize) -> Vec<(Step, Diagram)> {
    let mut out = Vec::new();
    for rule in ALL_RULES {
        for direction in [Direction::Forward, Direction::Backward] {
            for site in candidate_sites(d, rule, direction) {
                let step = Step { rule, direction, site };
                if let Ok(next) = apply_rule(d, &step) {
                    if next != *d && generator_count(&next) <= max_generators {
                        out.push((step, next));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{iprime_diagram, validate_diagram, zigzag1_diagram};
    use Cell::*;
    use Wire::*;

    fn step(rule: Rule, direction: Direction, site: Site) -> Step {
        Step { rule, direction, site }
    }

    #[test]
    fn rules_rewrite_lhs_to_rhs() {
        let sites = [
            Site::Loop { layer: 1, cell: 0 },
            Site::Loop { layer: 1, cell: 0 },
            Site::Stacked { layer: 0, upper: 0, lower: 0 },
            Site::Stacked { layer: 0, upper: 0, lower: 0 },
            Site::Adjacent { layer: 0, cell: 0, cup_left: false },
            Site::Adjacent { layer: 0, cell: 0, cup_left: false },
        ];
        for (info, site) in rewrite_rules().into_iter().zip(sites) {
            assert!(validate_diagram(&info.lhs) && validate_diagram(&info.rhs));
            assert_eq!(info.lhs.top, info.rhs.top, "{}", info.rule);
            assert_eq!(info.lhs.bottom, info.rhs.bottom, "{}", info.rule);
            let got = apply_rule(&normalise(&info.lhs), &step(info.rule, Direction::Forward, site)).unwrap();
            assert_eq!(got, normalise(&info.rhs), "{}", info.rule);
        }
    }

    #[test]
    fn loop_removal_and_insertion() {
        let lp = Diagram::new(vec![], vec![vec![CupI], vec![CapI]], vec![]).unwrap();
        let gone = apply_rule(&lp, &step(Rule::LoopI, Direction::Forward, Site::Loop { layer: 1, cell: 0 })).unwrap();
        assert_eq!(gone, Diagram::identity(vec![]));

        let wire = Diagram::wire(Down);
        let grown = apply_rule(&wire, &step(Rule::LoopI, Direction::Backward, Site::Gap { boundary: 0, gap: 0 })).unwrap();
        assert_eq!(grown.layers, vec![vec![CupI, Id(Down)], vec![CapI, Id(Down)]]);
        assert!(validate_diagram(&grown));
    }

    #[test]
    fn wrong_site_is_rejected() {
        let wire = Diagram::wire(Down);
        let bad = step(Rule::CancelE, Direction::Forward, Site::Stacked { layer: 0, upper: 0, lower: 0 });
        assert!(matches!(apply_rule(&wire, &bad), Err(DiagramError::NoMatch { .. })));
        let bad = step(Rule::CancelE, Direction::Backward, Site::Strands { boundary: 0, strand: 0 });
        assert!(apply_rule(&wire, &bad).is_err());
        let mismatched = step(Rule::LoopI, Direction::Forward, Site::Gap { boundary: 0, gap: 0 });
        assert!(apply_rule(&wire, &mismatched).is_err());
    }

    #[test]
    fn slide_on_first_zigzag() {
        let z = normalise(&zigzag1_diagram(&iprime_diagram()).unwrap());
        let slid = apply_rule(&z, &step(Rule::SlideE, Direction::Forward, Site::Adjacent { layer: 1, cell: 2, cup_left: true })).unwrap();
        assert_eq!(
            slid.layers,
            vec![
                vec![CupI, Id(Down)],
                vec![Id(Down), CapE],
                vec![Id(Down), CupE],
                vec![CapI, Id(Down)],
            ]
        );
        // and back again
        let back = apply_rule(&slid, &step(Rule::SlideE, Direction::Backward, Site::Merge { layer: 1, upper: 1, lower: 1, cup_left: true })).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn text_forms_round_trip() {
        let sites = [
            Site::Loop { layer: 1, cell: 2 },
            Site::Stacked { layer: 0, upper: 1, lower: 2 },
            Site::Adjacent { layer: 3, cell: 0, cup_left: true },
            Site::Gap { boundary: 2, gap: 0 },
            Site::Strands { boundary: 1, strand: 1 },
            Site::Merge { layer: 1, upper: 1, lower: 0, cup_left: false },
        ];
        for site in sites {
            assert_eq!(site.to_string().parse::<Site>().unwrap(), site);
            let s = step(Rule::SlideI, Direction::Backward, site);
            assert_eq!(s.to_string().parse::<Step>().unwrap(), s);
        }
        assert!("loop 1".parse::<Site>().is_err());
        assert!("NOPE fwd gap 0 0".parse::<Step>().is_err());
    }
}
