use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::family::{align, SetFamily};

/// Bipartite `t`-intersection compatibility between two families over a
/// shared ground set.
#[derive(Clone, Debug)]
pub struct BicliqueInstance {
    pub left: SetFamily,
    pub right: SetFamily,
    pub t: usize,
    /// `adjacency[i]` holds the right members that `t`-intersect left member `i`.
    pub adjacency: Vec<BitSet>,
    /// `transposed[j]` holds the left members that `t`-intersect right member `j`.
    pub transposed: Vec<BitSet>,
}

impl BicliqueInstance {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BitSet::count).sum()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    /// Right members compatible with every left member in `a`.
    pub fn common_right(&self, a: &[usize]) -> BitSet {
        common(&self.adjacency, a, self.right.len())
    }

    /// Left members compatible with every right member in `b`.
    pub fn common_left(&self, b: &[usize]) -> BitSet {
        common(&self.transposed, b, self.left.len())
    }

    /// The same instance with the sides swapped.
    pub fn transpose(&self) -> BicliqueInstance {
        BicliqueInstance {
            left: self.right.clone(),
            right: self.left.clone(),
            t: self.t,
            adjacency: self.transposed.clone(),
            transposed: self.adjacency.clone(),
        }
    }
}

fn common(adj: &[BitSet], sel: &[usize], width: usize) -> BitSet {
    let mut out = BitSet::new_filled(width);
    for &i in sel {
        out.intersect_with(&adj[i]);
    }
    out
}

/// Adjacency lists `adj[i]` over `right` for each member of `left`.
pub(crate) fn adjacency(left: &SetFamily, right: &SetFamily, t: usize) -> Vec<BitSet> {
    left.members()
        .iter()
        .map(|a| {
            let mut row = BitSet::new_empty(right.len());
            for (j, b) in right.members().iter().enumerate() {
                if a.bits().intersects_at_least(b.bits(), t) {
                    row.insert(j);
                }
            }
            row
        })
        .collect()
}

/// Builds the compatibility instance, aligning ground sets by label first
/// when the families were built separately.
pub fn build_instance(left: &SetFamily, right: &SetFamily, t: usize) -> Result<BicliqueInstance> {
    if t < 1 {
        return Err(Error::param("t must be at least 1"));
    }
    let (left, right) = align(left, right)?;
    let adjacency = adjacency(&left, &right, t);
    let mut transposed = vec![BitSet::new_empty(left.len()); right.len()];
    for (i, row) in adjacency.iter().enumerate() {
        for j in row.iter() {
            transposed[j].insert(i);
        }
    }
    Ok(BicliqueInstance {
        left,
        right,
        t,
        adjacency,
        transposed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_family;
    use crate::generators::gen_level;

    #[test]
    fn level_6_2_has_135_edges() {
        let f = gen_level(6, 2).unwrap();
        let inst = build_instance(&f, &f, 1).unwrap();
        assert_eq!(inst.adjacency.len(), 15);
        assert_eq!(inst.edge_count(), 135);
    }

    #[test]
    fn tiny_instances() {
        let (f, _) = build_family(&["1", "2"], &[vec![0, 1]]).unwrap();
        assert_eq!(build_instance(&f, &f, 1).unwrap().edge_count(), 1);
        let g = gen_level(5, 2).unwrap();
        assert_eq!(build_instance(&g, &g, 3).unwrap().edge_count(), 0);
    }

    #[test]
    fn transposed_view_is_consistent() {
        let f = gen_level(5, 2).unwrap();
        let g = gen_level(5, 3).unwrap();
        let inst = build_instance(&f, &g, 2).unwrap();
        for i in 0..f.len() {
            for j in 0..g.len() {
                assert_eq!(
                    inst.adjacency[i].contains(j),
                    inst.transposed[j].contains(i)
                );
            }
        }
    }

    #[test]
    fn cross_ground_alignment_by_label() {
        let (a, _) = build_family(&["x", "y"], &[vec![0, 1]]).unwrap();
        let (b, _) = build_family(&["y", "z"], &[vec![0, 1], vec![1]]).unwrap();
        let inst = build_instance(&a, &b, 1).unwrap();
        assert_eq!(inst.edge_count(), 1);
        assert!(build_instance(&a, &b, 0).is_err());
    }
}
