//! Workloads shared by the benchmarks.

use conseq_core::{chain_elements, chain_system, Language, LogicSystem};

/// A chain `s0 -> s1 -> ... -> s{lambda}`.
pub fn chain(lambda: usize) -> LogicSystem {
    chain_system(&chain_elements("s", lambda).expect("valid names")).expect("valid chain")
}

/// A mixed ternary system with `rules` rules `(a_i, l_i) => b_i` over
/// `3 * rules` symbols.
pub fn mixed_ternary(rules: usize) -> LogicSystem {
    let a: Vec<String> = (0..rules).map(|i| format!("a{i}")).collect();
    let b: Vec<String> = (0..rules).map(|i| format!("b{i}")).collect();
    let l: Vec<String> = (0..rules).map(|i| format!("l{i}")).collect();
    let language = Language::new(a.iter().chain(&b), &l).expect("valid language");
    LogicSystem::new(
        language,
        (0..rules).map(|i| ([a[i].as_str(), l[i].as_str()], b[i].as_str())),
    )
    .expect("valid system")
}

/// A layered system over `width * depth` symbols where every symbol of layer
/// `k + 1` needs two symbols of layer `k`.
pub fn layered(width: usize, depth: usize) -> LogicSystem {
    let name = |layer: usize, i: usize| format!("n{layer}_{i}");
    let names: Vec<String> = (0..depth)
        .flat_map(|k| (0..width).map(move |i| name(k, i)))
        .collect();
    let language = Language::new(&names, Vec::<&str>::new()).expect("valid language");
    let mut rules = Vec::new();
    for k in 0..depth - 1 {
        for i in 0..width {
            rules.push((vec![name(k, i), name(k, (i + 1) % width)], name(k + 1, i)));
        }
    }
    LogicSystem::new(language, rules).expect("valid system")
}
