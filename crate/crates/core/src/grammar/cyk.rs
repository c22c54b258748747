// SPDX-License-Identifier: Apache-2.0

use super::{Cfg, Production};

/// Node of a derivation tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub nonterminal: usize,
    /// Index into [`Cfg::productions`].
    pub production: usize,
    /// Half-open range of the derived word covered by this node.
    pub span: (usize, usize),
    pub depth: usize,
    pub children: Vec<usize>,
    /// The letter, for nodes applying a terminal production.
    pub letter: Option<char>,
}

/// A derivation tree stored in pre-order; node `0` is the root and the
/// subtree of node `v` occupies a contiguous id range starting at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTree {
    nodes: Vec<TreeNode>,
    subtree_end: Vec<usize>,
}

impl DerivationTree {
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    /// Ids of the strict descendants of `id`.
    pub fn descendants(&self, id: usize) -> std::ops::Range<usize> {
        id + 1..self.subtree_end[id]
    }

    /// The word formed by the leaves, left to right.
    pub fn yield_word(&self) -> Vec<char> {
        self.nodes.iter().filter_map(|n| n.letter).collect()
    }

    pub fn height(&self) -> usize {
        self.nodes.iter().map(|n| n.depth + 1).max().unwrap_or(0)
    }
}

/// Back pointers `(production, split)` per span start and nonterminal.
type BackRow = Vec<Vec<Option<(usize, usize)>>>;

/// CYK membership. Returns a derivation tree of `word` when it belongs to the
/// language.
///
/// Ties are broken by production order, then by the leftmost split point, so
/// the tree is a function of the grammar and the word.
pub fn cyk_membership(g: &Cfg, word: &[char]) -> Option<DerivationTree> {
    let n = word.len();
    let prods = g.productions();
    if n == 0 {
        let idx = prods.iter().position(|p| *p == Production::Empty)?;
        return Some(DerivationTree {
            nodes: vec![TreeNode {
                nonterminal: g.start(),
                production: idx,
                span: (0, 0),
                depth: 0,
                children: Vec::new(),
                letter: None,
            }],
            subtree_end: vec![1],
        });
    }
    let t = g.num_nonterminals();
    // back[len - 1][i][v] = (production, split) for word[i..i + len]
    let mut back: Vec<BackRow> = Vec::with_capacity(n);
    back.push(
        (0..n)
            .map(|i| {
                let mut cell = vec![None; t];
                for (pi, p) in prods.iter().enumerate() {
                    if let Production::Terminal { head, letter } = *p {
                        if letter == word[i] && cell[head].is_none() {
                            cell[head] = Some((pi, 1));
                        }
                    }
                }
                cell
            })
            .collect(),
    );
    for len in 2..=n {
        let mut row = Vec::with_capacity(n - len + 1);
        for i in 0..=n - len {
            let mut cell = vec![None; t];
            for (pi, p) in prods.iter().enumerate() {
                if let Production::Binary { head, left, right } = *p {
                    if cell[head].is_some() {
                        continue;
                    }
                    for k in 1..len {
                        if back[k - 1][i][left].is_some() && back[len - k - 1][i + k][right].is_some() {
                            cell[head] = Some((pi, k));
                            break;
                        }
                    }
                }
            }
            row.push(cell);
        }
        back.push(row);
    }
    back[n - 1][0][g.start()]?;

    let mut tree = DerivationTree { nodes: Vec::new(), subtree_end: Vec::new() };
    build(g, &back, &mut tree, g.start(), 0, n, 0);
    Some(tree)
}

fn build(
    g: &Cfg,
    back: &[BackRow],
    tree: &mut DerivationTree,
    v: usize,
    i: usize,
    len: usize,
    depth: usize,
) -> usize {
    let (pi, k) = back[len - 1][i][v].expect("entry derived by CYK");
    let id = tree.nodes.len();
    tree.nodes.push(TreeNode {
        nonterminal: v,
        production: pi,
        span: (i, i + len),
        depth,
        children: Vec::new(),
        letter: None,
    });
    tree.subtree_end.push(0);
    match g.productions()[pi] {
        Production::Terminal { letter, .. } => tree.nodes[id].letter = Some(letter),
        Production::Binary { left, right, .. } => {
            let l = build(g, back, tree, left, i, k, depth + 1);
            let r = build(g, back, tree, right, i + k, len - k, depth + 1);
            tree.nodes[id].children = vec![l, r];
        }
        Production::Empty => unreachable!("ε only derives the empty word"),
    }
    tree.subtree_end[id] = tree.nodes.len();
    id
}
