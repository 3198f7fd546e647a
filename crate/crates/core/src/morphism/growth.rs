//! Growth of `|φ^i(c)|` from the strongly connected components of the
//! letter-dependency graph.
//!
//! For every letter `c`, `|φ^i(c)| = Θ(i^e p^i)` where `p` is the largest
//! Perron root among components reachable from `c` and `e + 1` is the
//! largest number of components with root `p` on one path from `c`.

use std::collections::HashMap;

use serde::Serialize;

use super::Morphism;
use crate::analysis::run_count;

/// Bracket width at which Perron-root iteration stops.
pub const ROOT_TOLERANCE: f64 = 1e-9;
/// Two growth rates are equal when they differ by at most this fraction.
pub const RATE_RELATIVE_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthClass {
    NotGrowing,
    QuasiUniform,
    PolynomiallyDivergent,
    ExponentiallyDivergent,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LetterGrowth {
    pub letter: char,
    pub bounded: bool,
    pub exponent: usize,
    pub rate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub letters: Vec<LetterGrowth>,
    pub class: GrowthClass,
}

impl GrowthReport {
    pub fn letter(&self, c: char) -> Option<&LetterGrowth> {
        self.letters.iter().find(|l| l.letter == c)
    }

    pub fn is_growing(&self) -> bool {
        self.class != GrowthClass::NotGrowing
    }
}

struct Components {
    /// Component id of every letter.
    of: Vec<usize>,
    /// Members of every component, in reverse topological order.
    members: Vec<Vec<usize>>,
    succ: Vec<Vec<usize>>,
}

fn edges(m: &Morphism) -> Vec<Vec<usize>> {
    let k = m.size();
    (0..k).map(|a| (0..k).filter(|&b| m.incidence()[b][a] > 0).collect()).collect()
}

fn tarjan(adj: &[Vec<usize>]) -> Components {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        of: Vec<usize>,
        members: Vec<Vec<usize>>,
    }

    fn visit(s: &mut State<'_>, v: usize) {
        s.index[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for &w in &s.adj[v] {
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            let id = s.members.len();
            let mut comp = Vec::new();
            loop {
                let w = s.stack.pop().expect("v is on the stack");
                s.on_stack[w] = false;
                s.of[w] = id;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            s.members.push(comp);
        }
    }

    let k = adj.len();
    let mut s = State {
        adj,
        index: vec![None; k],
        low: vec![0; k],
        on_stack: vec![false; k],
        stack: Vec::new(),
        next: 0,
        of: vec![0; k],
        members: Vec::new(),
    };
    for v in 0..k {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    let mut succ = vec![Vec::new(); s.members.len()];
    for (v, targets) in adj.iter().enumerate() {
        for &w in targets {
            let (cv, cw) = (s.of[v], s.of[w]);
            if cv != cw && !succ[cv].contains(&cw) {
                succ[cv].push(cw);
            }
        }
    }
    Components { of: s.of, members: s.members, succ }
}

/// Perron root of an irreducible nonnegative matrix, from Collatz–Wielandt
/// bounds on `I + A` (which is primitive, so power iteration converges).
fn perron_root(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut x = vec![1.0f64; n];
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for _ in 0..1_000_000 {
        let y: Vec<f64> = (0..n).map(|i| x[i] + (0..n).map(|j| a[i][j] * x[j]).sum::<f64>()).collect();
        let ratios = (0..n).map(|i| y[i] / x[i]);
        lo = ratios.clone().fold(f64::INFINITY, f64::min);
        hi = ratios.fold(0.0, f64::max);
        if hi - lo <= ROOT_TOLERANCE * 1e-3 * hi {
            break;
        }
        let norm = y.iter().cloned().fold(0.0, f64::max);
        x = y.into_iter().map(|v| v / norm).collect();
    }
    (lo + hi) / 2.0 - 1.0
}

fn component_roots(m: &Morphism, comps: &Components, adj: &[Vec<usize>]) -> Vec<f64> {
    comps
        .members
        .iter()
        .map(|members| {
            let cyclic = members.len() > 1 || adj[members[0]].contains(&members[0]);
            if !cyclic {
                return 0.0;
            }
            let sub: Vec<Vec<f64>> =
                members.iter().map(|&b| members.iter().map(|&a| m.incidence()[b][a] as f64).collect()).collect();
            // An irreducible integer matrix has root 1 exactly when every
            // column sums to 1, i.e. it permutes its letters cyclically.
            let permutation = (0..members.len()).all(|j| sub.iter().map(|row| row[j]).sum::<f64>() == 1.0);
            if permutation {
                1.0
            } else {
                perron_root(&sub)
            }
        })
        .collect()
}

fn same_rate(x: f64, p: f64) -> bool {
    if p == 1.0 || x == 1.0 {
        return x == p;
    }
    (x - p).abs() <= RATE_RELATIVE_TOLERANCE * p
}

fn letter_growth(m: &Morphism) -> Vec<LetterGrowth> {
    let adj = edges(m);
    let comps = tarjan(&adj);
    let roots = component_roots(m, &comps, &adj);
    let nc = comps.members.len();

    // reverse topological order: successors come first
    let mut reach: Vec<Vec<bool>> = vec![vec![false; nc]; nc];
    for c in 0..nc {
        reach[c][c] = true;
        for &s in &comps.succ[c] {
            let row = reach[s].clone();
            for (t, r) in row.into_iter().enumerate() {
                reach[c][t] |= r;
            }
        }
    }

    (0..m.size())
        .map(|a| {
            let ca = comps.of[a];
            let rate = (0..nc).filter(|&c| reach[ca][c]).map(|c| roots[c]).fold(0.0, f64::max);
            let mut chain = vec![0usize; nc];
            for c in 0..nc {
                let best = comps.succ[c].iter().map(|&s| chain[s]).max().unwrap_or(0);
                chain[c] = best + usize::from(same_rate(roots[c], rate));
            }
            let exponent = chain[ca].saturating_sub(1);
            LetterGrowth { letter: m.alphabet().letter(a as u8), bounded: rate == 1.0 && exponent == 0, exponent, rate }
        })
        .collect()
}

/// Letters `c` for which `|φ^i(c)|` stays bounded.
pub fn bounded_letters(m: &Morphism) -> Vec<u8> {
    letter_growth(m).iter().enumerate().filter(|(_, g)| g.bounded).map(|(r, _)| r as u8).collect()
}

pub fn classify_growth(m: &Morphism) -> GrowthReport {
    let letters = letter_growth(m);
    let class = if letters.iter().any(|g| g.bounded) {
        GrowthClass::NotGrowing
    } else {
        let p = letters[0].rate;
        if letters.iter().all(|g| same_rate(g.rate, p)) {
            if letters.iter().all(|g| g.exponent == 0) {
                GrowthClass::QuasiUniform
            } else {
                GrowthClass::PolynomiallyDivergent
            }
        } else {
            GrowthClass::ExponentiallyDivergent
        }
    };
    GrowthReport { letters, class }
}

/// Whether `r(φ^i(c))` stays bounded in `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunBoundedness {
    pub letter: char,
    pub run_bounded: bool,
    /// Largest run count observed.
    pub bound: usize,
    /// Decided from a finite window of iterates rather than exactly.
    pub empirical: bool,
}

/// Iterates examined for growing letters.
const RUN_WINDOW: usize = 20;

/// Bounded letters are decided exactly by walking `φ^i(c)` until the
/// sequence of words cycles. For growing letters the run counts of
/// `φ^i(c)`, `i <= 20` (within `cap`), must be constant over the second half
/// of the window; the verdict is flagged empirical.
pub fn run_boundedness(m: &Morphism, c: u8, cap: usize) -> RunBoundedness {
    let letter = m.alphabet().letter(c);
    let growth = &letter_growth(m)[c as usize];
    if growth.bounded {
        let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
        let mut w = vec![c];
        let mut bound = 0;
        while !seen.contains_key(&w) {
            bound = bound.max(run_count(&w));
            let next = m.apply(&w);
            seen.insert(w, seen.len());
            w = next;
        }
        return RunBoundedness { letter, run_bounded: true, bound, empirical: false };
    }
    let mut counts = Vec::new();
    let mut w = vec![c];
    for _ in 0..=RUN_WINDOW {
        counts.push(run_count(&w));
        let next_len: usize = w.iter().map(|&x| m.image(x).len()).sum();
        if next_len > cap {
            break;
        }
        w = m.apply(&w);
    }
    let bound = counts.iter().copied().max().unwrap_or(1);
    let half = &counts[counts.len() / 2..];
    let stable = counts.len() >= 8 && half.iter().all(|&r| r == half[0]);
    RunBoundedness { letter, run_bounded: stable, bound, empirical: true }
}
