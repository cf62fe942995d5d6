use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use super::{artin_automorphism, BraidWord, MarkovMove};
use crate::freegroup::Endomorphism;

/// Bounds for [`search_markov_path`]. Nodes with more strands or letters than
/// allowed are never entered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_strands: usize,
    pub max_length: usize,
    pub max_depth: usize,
    /// Hard cap on distinct visited nodes; hitting it is an error rather than a bounded no.
    pub max_nodes: usize,
    /// Signed generator indices to conjugate by. `None` means every σ_i^±1 of the current braid group.
    pub conjugators: Option<Vec<i32>>,
}

impl SearchLimits {
    pub fn new(max_strands: usize, max_length: usize, max_depth: usize) -> Self {
        SearchLimits {
            max_strands,
            max_length,
            max_depth,
            max_nodes: 2_000_000,
            conjugators: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Moves that carry the start braid to one equal (as a braid) to the goal.
    Found(Vec<MarkovMove>),
    NotFoundWithinBounds {
        visited: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search visited {visited} nodes, exceeding the node limit")]
    LimitExceeded { visited: usize },
}

struct Node {
    braid: BraidWord,
    depth: usize,
    parent: Option<(Endomorphism, MarkovMove)>,
}

/// Breadth-first search over Markov moves: conjugation by single letters,
/// stabilization of either sign and destabilization. Nodes are identified by
/// the Artin image, so braid-equal words are visited once. The found path is
/// shortest within the bounds.
pub fn search_markov_path(
    start: &BraidWord,
    goal: &BraidWord,
    limits: &SearchLimits,
) -> Result<SearchOutcome, SearchError> {
    let goal_key = artin_automorphism(goal);
    let start_key = artin_automorphism(start);
    if start_key == goal_key {
        return Ok(SearchOutcome::Found(Vec::new()));
    }

    let mut seen: HashMap<Endomorphism, Node> = HashMap::new();
    let mut queue: VecDeque<Endomorphism> = VecDeque::new();
    seen.insert(
        start_key.clone(),
        Node {
            braid: start.freely_reduced(),
            depth: 0,
            parent: None,
        },
    );
    queue.push_back(start_key);

    while let Some(key) = queue.pop_front() {
        let (braid, depth) = {
            let node = &seen[&key];
            (node.braid.clone(), node.depth)
        };
        if depth >= limits.max_depth {
            continue;
        }
        for mv in candidate_moves(&braid, limits) {
            let Ok(next) = mv.apply(&braid) else { continue };
            if next.strands() > limits.max_strands || next.len() > limits.max_length {
                continue;
            }
            let next_key = artin_automorphism(&next);
            if seen.contains_key(&next_key) {
                continue;
            }
            let done = next_key == goal_key;
            seen.insert(
                next_key.clone(),
                Node {
                    braid: next,
                    depth: depth + 1,
                    parent: Some((key.clone(), mv)),
                },
            );
            if done {
                return Ok(SearchOutcome::Found(trace_back(&seen, next_key)));
            }
            if seen.len() > limits.max_nodes {
                return Err(SearchError::LimitExceeded {
                    visited: seen.len(),
                });
            }
            queue.push_back(next_key);
        }
    }
    Ok(SearchOutcome::NotFoundWithinBounds {
        visited: seen.len(),
    })
}

fn candidate_moves(beta: &BraidWord, limits: &SearchLimits) -> Vec<MarkovMove> {
    let n = beta.strands() as i32;
    let mut moves: Vec<MarkovMove> = match &limits.conjugators {
        Some(set) => set
            .iter()
            .filter(|k| **k != 0 && k.abs() < n)
            .map(|&k| MarkovMove::Conjugate(k))
            .collect(),
        None => (1..n)
            .flat_map(|i| [MarkovMove::Conjugate(i), MarkovMove::Conjugate(-i)])
            .collect(),
    };
    if beta.is_destabilizable() {
        moves.push(MarkovMove::Destabilize);
    }
    moves.push(MarkovMove::Stabilize { positive: true });
    moves.push(MarkovMove::Stabilize { positive: false });
    moves
}

fn trace_back(seen: &HashMap<Endomorphism, Node>, mut key: Endomorphism) -> Vec<MarkovMove> {
    let mut path = Vec::new();
    while let Some((parent, mv)) = &seen[&key].parent {
        path.push(*mv);
        key = parent.clone();
    }
    path.reverse();
    path
}
