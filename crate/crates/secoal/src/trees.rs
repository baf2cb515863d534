//! Non-isomorphic tree enumeration for the tree corpora.
//!
//! Labeled trees come from exhaustive Prüfer sequences; duplicates collapse
//! through a center-rooted canonical code. Orders are capped at
//! [`TREE_ENUM_CAP`]: the labeled space is n^(n-2), which stays at desk
//! scale only for small n.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order accepted by [`all_trees`].
pub const TREE_ENUM_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeEnumError {
    #[error("tree enumeration capped at order {cap}, got {n}")]
    CapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decodes a Prüfer sequence of length n-2 over 0..n into tree edges.
fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len(), n - 2);
    let mut deg = vec![1usize; n];
    for &x in seq {
        deg[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| deg[v] == 1).expect("a leaf always remains");
        edges.push((leaf, x));
        deg[leaf] = 0;
        deg[x] -= 1;
    }
    let mut last = (0..n).filter(|&v| deg[v] == 1);
    let (a, b) = (last.next().expect("two ends"), last.next().expect("two ends"));
    edges.push((a, b));
    edges
}

/// The one or two middle vertices left after repeatedly stripping leaves.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    while remaining > 2 {
        let leaves: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] <= 1).collect();
        for v in leaves {
            alive[v] = false;
            remaining -= 1;
            for u in g.neighbors(v).iter() {
                if alive[u] {
                    deg[u] -= 1;
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

fn rooted_code(g: &Graph, v: usize, parent: Option<usize>, out: &mut String) {
    out.push('(');
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| {
            let mut s = String::new();
            rooted_code(g, u, Some(v), &mut s);
            s
        })
        .collect();
    kids.sort();
    for k in kids {
        out.push_str(&k);
    }
    out.push(')');
}

/// Canonical code of a tree: the smaller of the codes rooted at its centers.
pub(crate) fn tree_canonical_code(g: &Graph) -> String {
    tree_centers(g)
        .into_iter()
        .map(|c| {
            let mut s = String::new();
            rooted_code(g, c, None, &mut s);
            s
        })
        .min()
        .expect("every tree has a center")
}

/// All non-isomorphic trees of order exactly `n`, in first-seen Prüfer
/// order. Counts match the classical tree census (1, 1, 1, 2, 3, 6, 11,
/// 23, 47, 106 for n = 1..=10).
pub fn all_trees(n: usize) -> Result<Vec<Graph>, TreeEnumError> {
    if n > TREE_ENUM_CAP {
        return Err(TreeEnumError::CapExceeded {
            n,
            cap: TREE_ENUM_CAP,
        });
    }
    if n == 0 {
        return Err(TreeEnumError::Graph(GraphError::EmptyOrder));
    }
    if n == 1 {
        return Ok(vec![Graph::from_edges(1, &[])?]);
    }
    if n == 2 {
        return Ok(vec![Graph::from_edges(2, &[(0, 1)])?]);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let tree = Graph::from_edges(n, &prufer_decode(n, &seq))?;
        if seen.insert(tree_canonical_code(&tree)) {
            out.push(tree);
        }
        // odometer over the n^(n-2) sequences
        let mut pos = n - 2;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
        }
    }
}

/// All non-isomorphic trees of orders `1..=n`.
pub fn trees_up_to(n: usize) -> Result<Vec<Graph>, TreeEnumError> {
    if n > TREE_ENUM_CAP {
        return Err(TreeEnumError::CapExceeded {
            n,
            cap: TREE_ENUM_CAP,
        });
    }
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(all_trees(k)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, is_isomorphic, GraphKind};

    #[test]
    fn prufer_decode_known_sequence() {
        // all-same sequence yields a star on the repeated vertex
        let edges = prufer_decode(5, &[2, 2, 2]);
        let g = Graph::from_edges(5, &edges).unwrap();
        assert_eq!(g.degree(2), 4);
        assert_eq!(g.m(), 4);
    }

    #[test]
    fn census_counts() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(all_trees(n).unwrap().len(), count, "order {n}");
        }
    }

    #[test]
    fn order_five_trees_are_path_fork_star() {
        let trees = all_trees(5).unwrap();
        assert_eq!(trees.len(), 3);
        let mut degs: Vec<Vec<usize>> = trees.iter().map(|t| t.degree_sequence()).collect();
        degs.sort();
        assert_eq!(
            degs,
            vec![
                vec![1, 1, 1, 1, 4], // star
                vec![1, 1, 1, 2, 3], // fork
                vec![1, 1, 2, 2, 2], // path
            ]
        );
    }

    #[test]
    fn enumerated_trees_are_trees_and_distinct() {
        for n in 3..=7 {
            let trees = all_trees(n).unwrap();
            for t in &trees {
                assert!(t.is_tree());
            }
            for (i, a) in trees.iter().enumerate() {
                for b in &trees[i + 1..] {
                    assert!(!is_isomorphic(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn canonical_code_is_isomorphism_invariant() {
        let p6 = generate(GraphKind::Path, 6).unwrap();
        let relabeled = p6.permuted(&[3, 5, 0, 2, 4, 1]);
        assert_eq!(tree_canonical_code(&p6), tree_canonical_code(&relabeled));
        let s6 = generate(GraphKind::Star, 6).unwrap();
        assert_ne!(tree_canonical_code(&p6), tree_canonical_code(&s6));
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            all_trees(11),
            Err(TreeEnumError::CapExceeded { n: 11, cap: 10 })
        ));
        assert_eq!(trees_up_to(4).unwrap().len(), 5);
    }
}
