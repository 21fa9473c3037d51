use super::Dfa;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Result of the aperiodicity test. `Unknown` is returned when the
/// transition monoid exceeds the element cap, never a guess.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Aperiodicity {
    Yes,
    No,
    Unknown,
}

/// Decide whether the language of a minimal complete DFA is aperiodic
/// (counter-free, first-order definable).
///
/// The transition monoid is built by closing the letter transformations
/// under composition. The monoid, and hence the language, is aperiodic iff
/// the powers of every element stabilize at an idempotent (`t^i = t^{i+1}`
/// for some i); an eventual period ≥ 2 means some element generates a
/// nontrivial group, and `No` is returned.
pub fn is_aperiodic(d: &Dfa, monoid_cap: usize) -> Aperiodicity {
    let n = d.num_states();
    let k = d.alphabet().len();
    let identity: Vec<u32> = (0..n as u32).collect();
    let generators: Vec<Vec<u32>> = (0..k)
        .map(|c| (0..n).map(|q| d.step_sym(q, c) as u32).collect())
        .collect();

    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut elements: Vec<Vec<u32>> = Vec::new();
    index.insert(identity.clone(), 0);
    elements.push(identity);
    let mut at = 0;
    while at < elements.len() {
        let current = elements[at].clone();
        for g in &generators {
            let next: Vec<u32> = current.iter().map(|&q| g[q as usize]).collect();
            if !index.contains_key(&next) {
                if elements.len() >= monoid_cap {
                    return Aperiodicity::Unknown;
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        at += 1;
    }

    let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { a.iter().map(|&q| b[q as usize]).collect() };
    for t in &elements {
        // powers of t repeat within |monoid|+1 steps
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut power = t.clone();
        let mut i = 1;
        loop {
            if let Some(&first) = seen.get(&power) {
                if i - first >= 2 {
                    return Aperiodicity::No;
                }
                break;
            }
            seen.insert(power.clone(), i);
            power = compose(&power, t);
            i += 1;
        }
    }
    Aperiodicity::Yes
}
