//! Bounded bidirectional search for rewrite traces.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::normal::normalise;
use super::rules::{apply_rule, generator_count, successors, Step};
use super::{Diagram, DiagramError};

pub const DEFAULT_MAX_STEPS: usize = 64;

/// Size-increasing steps may add at most this many cups and caps beyond
/// the larger endpoint.
pub const EXTRA_GENERATORS: usize = 4;

/// A replayable list of steps. Diagrams along the way are in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteTrace {
    pub steps: Vec<Step>,
}

impl RewriteTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for RewriteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "STEP {s}")?;
        }
        Ok(())
    }
}

impl FromStr for RewriteTrace {
    type Err = DiagramError;
    /// One `STEP ...` line per step; blank lines and `#` comments ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::new();
        for (n, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| DiagramError::Parse { line: n + 1, msg };
            let rest = line
                .strip_prefix("STEP")
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| err("expected STEP".into()))?;
            steps.push(rest.parse().map_err(err)?);
        }
        Ok(Self { steps })
    }
}

/// Applies the steps to the normal form of `d`.
pub fn replay(d: &Diagram, trace: &RewriteTrace) -> Result<Diagram, DiagramError> {
    trace
        .steps
        .iter()
        .try_fold(normalise(d), |cur, step| apply_rule(&cur, step))
}

/// Counters from one search, for reporting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    pub visited: usize,
    pub depth_reached: usize,
}

struct Side {
    nodes: Vec<Diagram>,
    parent: Vec<Option<(usize, Step)>>,
    index: HashMap<Diagram, usize>,
    frontier: std::ops::Range<usize>,
    depth: usize,
}

impl Side {
    fn new(root: Diagram) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Self {
            nodes: vec![root],
            parent: vec![None],
            index,
            frontier: 0..1,
            depth: 0,
        }
    }

    /// Steps from the root to node `k`.
    fn path_from_root(&self, mut k: usize) -> Vec<Step> {
        let mut steps = Vec::new();
        while let Some((p, s)) = self.parent[k] {
            steps.push(s);
            k = p;
        }
        steps.reverse();
        steps
    }

    /// Steps from `start` back to the root, where `start` was reached from
    /// node `k`. Each forward step is undone by finding a step that leads
    /// back; `None` if some step has no inverse within the bound.
    fn path_to_root(&self, start: &Diagram, mut k: usize, cap: usize) -> Option<Vec<Step>> {
        let mut steps = Vec::new();
        let mut cur = start.clone();
        loop {
            let target = &self.nodes[k];
            if cur != *target {
                let (s, _) = successors(&cur, cap).into_iter().find(|(_, n)| n == target)?;
                steps.push(s);
                cur = target.clone();
            }
            match self.parent[k] {
                Some((p, _)) => k = p,
                None => return Some(steps),
            }
        }
    }
}

/// Searches for a trace from `d1` to `d2` with at most `max_steps` steps.
/// `Ok(None)` means the bound was exhausted, which proves nothing.
pub fn equivalent(d1: &Diagram, d2: &Diagram, max_steps: usize) -> Result<Option<RewriteTrace>, DiagramError> {
    equivalent_with_stats(d1, d2, max_steps).map(|(t, _)| t)
}

/// As [`equivalent`], also returning search counters.
pub fn equivalent_with_stats(
    d1: &Diagram,
    d2: &Diagram,
    max_steps: usize,
) -> Result<(Option<RewriteTrace>, SearchOutcome), DiagramError> {
    for d in [d1, d2] {
        if !super::validate_diagram(d) {
            return Err(DiagramError::Invalid("layer boundaries do not match".into()));
        }
    }
    if d1.top != d2.top || d1.bottom != d2.bottom {
        return Err(DiagramError::BoundaryMismatch(
            "the two diagrams have different top or bottom words".into(),
        ));
    }
    let (n1, n2) = (normalise(d1), normalise(d2));
    if n1 == n2 {
        let stats = SearchOutcome { visited: 1, depth_reached: 0 };
        return Ok((Some(RewriteTrace::default()), stats));
    }
    let cap = generator_count(&n1).max(generator_count(&n2)) + EXTRA_GENERATORS;
    let mut a = Side::new(n1);
    let mut b = Side::new(n2);
    let stats = |a: &Side, b: &Side| SearchOutcome {
        visited: a.nodes.len() + b.nodes.len(),
        depth_reached: a.depth + b.depth,
    };
    while a.depth + b.depth < max_steps {
        let forward = a.frontier.len() <= b.frontier.len();
        let (grow, other) = if forward { (&mut a, &b) } else { (&mut b, &a) };
        if grow.frontier.is_empty() {
            break;
        }
        let start = grow.nodes.len();
        for k in grow.frontier.clone() {
            let here = grow.nodes[k].clone();
            for (step, next) in successors(&here, cap) {
                if grow.index.contains_key(&next) {
                    continue;
                }
                if let Some(&j) = other.index.get(&next) {
                    let found = if forward {
                        let mut steps = grow.path_from_root(k);
                        steps.push(step);
                        other.path_to_root(&next, j, cap).map(|tail| {
                            steps.extend(tail);
                            steps
                        })
                    } else {
                        let mut steps = other.path_from_root(j);
                        grow.path_to_root(&next, k, cap).map(|tail| {
                            steps.extend(tail);
                            steps
                        })
                    };
                    if let Some(steps) = found {
                        let trace = RewriteTrace { steps };
                        let depth = trace.len();
                        let mut s = stats(&a, &b);
                        s.depth_reached = depth;
                        return Ok((Some(trace), s));
                    }
                }
                grow.index.insert(next.clone(), grow.nodes.len());
                grow.nodes.push(next);
                grow.parent.push(Some((k, step)));
            }
        }
        grow.frontier = start..grow.nodes.len();
        grow.depth += 1;
    }
    Ok((None, stats(&a, &b)))
}
