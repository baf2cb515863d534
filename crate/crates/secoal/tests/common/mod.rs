//! Shared helpers for the integration suites: deliberately naive
//! re-implementations of every solver (no caches, no pruning, no bound
//! shortcuts) plus corpus loading. These are the independent oracles the
//! optimized library is measured against, so nothing here may call into
//! the solver internals it checks.

use std::path::PathBuf;

use secoal::graph::Graph;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpora")
        .join(name)
}

pub fn load_corpus_graphs(name: &str) -> Vec<Graph> {
    let text = std::fs::read_to_string(corpus_path(name)).expect("corpus file readable");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Graph::from_graph6(l).expect("corpus line parses"))
        .collect()
}

pub fn naive_is_dominating(g: &Graph, s: &[usize]) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in s {
        covered[v] = true;
        for u in 0..g.n() {
            if g.has_edge(u, v) {
                covered[u] = true;
            }
        }
    }
    covered.into_iter().all(|c| c)
}

pub fn naive_is_secure_dominating(g: &Graph, s: &[usize]) -> bool {
    if !naive_is_dominating(g, s) {
        return false;
    }
    for u in 0..g.n() {
        if s.contains(&u) {
            continue;
        }
        let mut defended = false;
        for &v in s {
            if !g.has_edge(u, v) {
                continue;
            }
            let swapped: Vec<usize> = s
                .iter()
                .copied()
                .filter(|&x| x != v)
                .chain(std::iter::once(u))
                .collect();
            if naive_is_dominating(g, &swapped) {
                defended = true;
                break;
            }
        }
        if !defended {
            return false;
        }
    }
    true
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

pub fn naive_domination_number(g: &Graph) -> usize {
    for k in 1..=g.n() {
        if subsets_of_size(g.n(), k)
            .iter()
            .any(|s| naive_is_dominating(g, s))
        {
            return k;
        }
    }
    unreachable!("the full vertex set dominates")
}

pub fn naive_secure_domination_number(g: &Graph) -> usize {
    for k in 1..=g.n() {
        if subsets_of_size(g.n(), k)
            .iter()
            .any(|s| naive_is_secure_dominating(g, s))
        {
            return k;
        }
    }
    unreachable!("the full vertex set is secure dominating")
}

/// Every set partition of 0..n, generated by plain recursion.
pub fn all_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(n: usize, pos: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if pos == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..cur.len() {
            cur[i].push(pos);
            rec(n, pos + 1, cur, out);
            cur[i].pop();
        }
        cur.push(vec![pos]);
        rec(n, pos + 1, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut out);
    out
}

fn naive_sec_partition_valid(g: &Graph, parts: &[Vec<usize>]) -> bool {
    let sd: Vec<bool> = parts
        .iter()
        .map(|p| naive_is_secure_dominating(g, p))
        .collect();
    parts.iter().enumerate().all(|(i, p)| {
        if sd[i] {
            p.len() == 1 && g.degree(p[0]) == g.n() - 1
        } else {
            parts.iter().enumerate().any(|(j, q)| {
                if i == j || sd[j] {
                    return false;
                }
                let union: Vec<usize> = p.iter().chain(q.iter()).copied().collect();
                naive_is_secure_dominating(g, &union)
            })
        }
    })
}

fn naive_c_partition_valid(g: &Graph, parts: &[Vec<usize>]) -> bool {
    let dom: Vec<bool> = parts.iter().map(|p| naive_is_dominating(g, p)).collect();
    parts.iter().enumerate().all(|(i, p)| {
        if dom[i] {
            p.len() == 1
        } else {
            parts.iter().enumerate().any(|(j, q)| {
                if i == j || dom[j] {
                    return false;
                }
                let union: Vec<usize> = p.iter().chain(q.iter()).copied().collect();
                naive_is_dominating(g, &union)
            })
        }
    })
}

pub fn naive_sec_number(g: &Graph) -> usize {
    all_partitions(g.n())
        .iter()
        .filter(|p| naive_sec_partition_valid(g, p))
        .map(|p| p.len())
        .max()
        .expect("every graph admits a valid partition")
}

pub fn naive_coalition_number(g: &Graph) -> usize {
    all_partitions(g.n())
        .iter()
        .filter(|p| naive_c_partition_valid(g, p))
        .map(|p| p.len())
        .max()
        .expect("every graph admits a valid partition")
}
