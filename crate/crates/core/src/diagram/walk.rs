use rand::Rng;

use super::rules::{successors, Rule};
use super::search::RewriteTrace;
use super::{normalise, Diagram};

/// A random walk of at most `steps` rule applications from the normal form
/// of `start`, restricted to `rules` and to at most `max_generators` cups
/// and caps. Stops early if no step applies. The returned trace replays
/// from `start` to the returned diagram.
pub fn random_walk<R: Rng + ?Sized>(
    start: &Diagram,
    steps: usize,
    max_generators: usize,
    rules: &[Rule],
    rng: &mut R,
) -> (Diagram, RewriteTrace) {
    let mut cur = normalise(start);
    let mut trace = RewriteTrace::default();
    for _ in 0..steps {
        let options: Vec<_> = successors(&cur, max_generators)
            .into_iter()
            .filter(|(s, _)| rules.contains(&s.rule))
            .collect();
        if options.is_empty() {
            break;
        }
        let (step, next) = options[rng.gen_range(0..options.len())].clone();
        trace.steps.push(step);
        cur = next;
    }
    (cur, trace)
}
