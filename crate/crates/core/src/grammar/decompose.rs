// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigUint;

use super::{cyk_membership, Cfg, DerivationTree};
use crate::error::{Error, Result};

/// A factorization `w = s_1 u_1 s_2 u_2 … s_k u_k s_{k+1}` in which all the
/// `u_i` can be pumped simultaneously without leaving the language, and
/// whose static skeleton `s_1 … s_{k+1}` is short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactDecomposition {
    /// `s_1 … s_{k+1}`.
    pub statics: Vec<Vec<char>>,
    /// `u_1 … u_k`, all nonempty.
    pub pumps: Vec<Vec<char>>,
    pub word: Vec<char>,
    /// Pump pairs `(ancestor, descendant)` as derivation-tree node ids.
    pub pump_pairs: Vec<(usize, usize)>,
    /// Nonterminal count of the grammar the decomposition was built from.
    pub num_nonterminals: usize,
}

impl CompactDecomposition {
    /// Number of pumpable parts, `k`.
    pub fn k(&self) -> usize {
        self.pumps.len()
    }

    /// `|w(0)|`, the total length of the static parts.
    pub fn static_len(&self) -> usize {
        self.statics.iter().map(Vec::len).sum()
    }

    /// `w(ℓ) = s_1 u_1^ℓ … s_k u_k^ℓ s_{k+1}`.
    pub fn pumped(&self, ell: usize) -> Vec<char> {
        let mut out = Vec::new();
        for (s, u) in self.statics.iter().zip(&self.pumps) {
            out.extend_from_slice(s);
            for _ in 0..ell {
                out.extend_from_slice(u);
            }
        }
        out.extend_from_slice(self.statics.last().expect("k + 1 static parts"));
        out
    }

    /// `|w(0)| ≤ 2^T` and `k ≤ 2^{T+1} - 2`.
    pub fn satisfies_bounds(&self) -> bool {
        let t = self.num_nonterminals as u32;
        let two = BigUint::from(2u32);
        BigUint::from(self.static_len()) <= two.pow(t)
            && BigUint::from(self.k()) + 2u32 <= two.pow(t + 1)
    }

    /// The concatenation of the parts equals the source word.
    pub fn is_consistent(&self) -> bool {
        self.statics.len() == self.pumps.len() + 1 && self.pumped(1) == self.word
    }
}

enum Piece {
    Static(char),
    Pump(Vec<char>),
}

/// Builds a compact decomposition of `word` from its CYK derivation tree.
///
/// The tree is traversed depth first in pre-order, children left to right.
/// At a node `v` labelled `A` that has a strict descendant also labelled `A`,
/// the deepest such descendant `u` (leftmost among equally deep ones) forms a
/// pump pair with `v`: the letters of `v` left of `u` and right of `u` become
/// pumpable parts, and the traversal continues at `u`, skipping everything
/// else below `v`. Empty pumpable parts are dropped since pumping them is the
/// identity.
pub fn compact_decomposition(g: &Cfg, word: &[char]) -> Result<CompactDecomposition> {
    let tree = cyk_membership(g, word)
        .ok_or_else(|| Error::Precondition("the word is not generated by the grammar".into()))?;
    let mut pieces = Vec::new();
    let mut pairs = Vec::new();
    emit(&tree, 0, word, &mut pieces, &mut pairs);

    let mut statics = Vec::new();
    let mut pumps = Vec::new();
    let mut current = Vec::new();
    for piece in pieces {
        match piece {
            Piece::Static(a) => current.push(a),
            Piece::Pump(u) if u.is_empty() => {}
            Piece::Pump(u) => {
                statics.push(std::mem::take(&mut current));
                pumps.push(u);
            }
        }
    }
    statics.push(current);
    Ok(CompactDecomposition {
        statics,
        pumps,
        word: word.to_vec(),
        pump_pairs: pairs,
        num_nonterminals: g.num_nonterminals(),
    })
}

fn deepest_same_label(tree: &DerivationTree, v: usize) -> Option<usize> {
    let label = tree.node(v).nonterminal;
    let mut best: Option<usize> = None;
    for u in tree.descendants(v) {
        if tree.node(u).nonterminal == label && best.is_none_or(|b| tree.node(u).depth > tree.node(b).depth) {
            best = Some(u);
        }
    }
    best
}

fn emit(tree: &DerivationTree, v: usize, word: &[char], out: &mut Vec<Piece>, pairs: &mut Vec<(usize, usize)>) {
    let node = tree.node(v);
    if let Some(a) = node.letter {
        out.push(Piece::Static(a));
        return;
    }
    if let Some(u) = deepest_same_label(tree, v) {
        pairs.push((v, u));
        let (vs, ve) = node.span;
        let (us, ue) = tree.node(u).span;
        out.push(Piece::Pump(word[vs..us].to_vec()));
        emit(tree, u, word, out, pairs);
        out.push(Piece::Pump(word[ue..ve].to_vec()));
    } else {
        for &c in &node.children {
            emit(tree, c, word, out, pairs);
        }
    }
}

/// `w(ℓ)` for a decomposition.
pub fn pump(d: &CompactDecomposition, ell: usize) -> Vec<char> {
    d.pumped(ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, word};

    #[test]
    fn anbn_decomposition_pumps() {
        let g = fixtures::anbn_grammar();
        // the fresh start symbol keeps "aabb" free of repetitions; one more
        // level brings the first pump pair
        for w in ["aabb", "aaabbb", "aaaabbbb"] {
            let d = compact_decomposition(&g, &word(w)).unwrap();
            assert!(d.is_consistent());
            assert!(d.satisfies_bounds());
            assert_eq!(pump(&d, 1), word(w));
            for ell in 0..4 {
                assert!(cyk_membership(&g, &pump(&d, ell)).is_some(), "ℓ = {ell}");
            }
        }
        let d = compact_decomposition(&g, &word("aaabbb")).unwrap();
        assert!(d.k() > 0);
        assert!(pump(&d, 3).len() > 6);
    }

    #[test]
    fn no_repetition_means_no_pumps() {
        let g = fixtures::anbn_grammar();
        let d = compact_decomposition(&g, &word("ab")).unwrap();
        assert_eq!(d.k(), 0);
        assert_eq!(d.statics, vec![word("ab")]);
        assert_eq!(pump(&d, 0), word("ab"));
    }

    #[test]
    fn hash_word_splits_around_marker() {
        let g = fixtures::a_hash_b_grammar();
        let d = compact_decomposition(&g, &word("aa#bb")).unwrap();
        assert!(d.is_consistent());
        assert!(d.pumps.iter().all(|u| !u.contains(&'#')));
        assert!(d.pumps.iter().any(|u| u.contains(&'a')));
        assert!(d.pumps.iter().any(|u| u.contains(&'b')));
        for ell in 0..4 {
            assert!(cyk_membership(&g, &pump(&d, ell)).is_some());
        }
    }

    #[test]
    fn non_member_is_rejected() {
        let g = fixtures::anbn_grammar();
        assert!(matches!(compact_decomposition(&g, &word("ba")), Err(Error::Precondition(_))));
    }
}
