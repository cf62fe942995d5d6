use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BraidWord, MarkovMove};

/// A start braid and the braids reached by applying moves one at a time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovOrbit {
    pub start: BraidWord,
    pub steps: Vec<(MarkovMove, BraidWord)>,
}

impl MarkovOrbit {
    /// Every braid in the orbit, start first.
    pub fn braids(&self) -> impl Iterator<Item = &BraidWord> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|(_, b)| b))
    }

    pub fn moves(&self) -> impl Iterator<Item = &MarkovMove> {
        self.steps.iter().map(|(m, _)| m)
    }
}

impl fmt::Display for MarkovOrbit {
    /// One move per line, each followed by the braid it produces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "start [{}] on {} strands",
            self.start,
            self.start.strands()
        )?;
        for (mv, b) in &self.steps {
            writeln!(f, "{mv:<14} -> [{b}] on {} strands", b.strands())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Conjugate,
    Stabilize,
    Destabilize,
}

/// Random walk of `depth` Markov moves, deterministic in `seed`. Each step
/// picks a move type uniformly among those legal at the current braid, then
/// a random generator or sign. The walk stops early only when no move is legal.
pub fn random_markov_orbit(
    start: &BraidWord,
    depth: usize,
    max_strands: usize,
    seed: u64,
) -> MarkovOrbit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = start.clone();
    let mut steps = Vec::with_capacity(depth);
    for _ in 0..depth {
        let n = current.strands();
        let mut kinds = Vec::with_capacity(3);
        if n >= 2 {
            kinds.push(Kind::Conjugate);
        }
        if n < max_strands {
            kinds.push(Kind::Stabilize);
        }
        if current.is_destabilizable() {
            kinds.push(Kind::Destabilize);
        }
        let Some(kind) = kinds.choose(&mut rng) else {
            break;
        };
        let mv = match kind {
            Kind::Conjugate => {
                let i = rng.gen_range(1..n as i32);
                MarkovMove::Conjugate(if rng.gen_bool(0.5) { i } else { -i })
            }
            Kind::Stabilize => MarkovMove::Stabilize {
                positive: rng.gen_bool(0.5),
            },
            Kind::Destabilize => MarkovMove::Destabilize,
        };
        current = mv.apply(&current).expect("only legal moves are chosen");
        steps.push((mv, current.clone()));
    }
    MarkovOrbit {
        start: start.clone(),
        steps,
    }
}
