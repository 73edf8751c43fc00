//! Linear-time d-separation by reachability over (node, direction) states.

use std::collections::VecDeque;

use super::BeliefNetwork;
use crate::error::Result;
use crate::triplet::Triplet;
use crate::varset::{VarSet, VariableId};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    /// Entered from a child, moving against edge direction.
    Up,
    /// Entered from a parent, moving along edge direction.
    Down,
}

impl BeliefNetwork {
    /// True iff no trail between `x` and `y` is active given `z`.
    pub fn d_separated(&self, x: VarSet, y: VarSet, z: VarSet) -> Result<bool> {
        let t = Triplet::new(x, y, z)?;
        self.universe().check_set(t.variables())?;
        Ok(self.d_separated_unchecked(x, y, z))
    }

    pub(crate) fn d_separated_unchecked(&self, x: VarSet, y: VarSet, z: VarSet) -> bool {
        if x.is_empty() || y.is_empty() {
            return true;
        }
        // a head-to-head node passes iff it is in z or has a descendant in z,
        // i.e. iff it is in the ancestral closure of z
        let opens_collider = self.ancestral_closure(z);
        let n = self.universe().len();
        let mut seen = vec![[false; 2]; n];
        let mut queue: VecDeque<(VariableId, Dir)> = x.iter().map(|v| (v, Dir::Up)).collect();
        let slot = |d: Dir| if d == Dir::Up { 0 } else { 1 };

        while let Some((v, d)) = queue.pop_front() {
            if std::mem::replace(&mut seen[v.index()][slot(d)], true) {
                continue;
            }
            let in_z = z.contains(v);
            if !in_z && y.contains(v) {
                return false;
            }
            match d {
                Dir::Up => {
                    if !in_z {
                        queue.extend(self.parents(v).iter().map(|p| (p, Dir::Up)));
                        queue.extend(self.children(v).iter().map(|c| (c, Dir::Down)));
                    }
                }
                Dir::Down => {
                    if !in_z {
                        queue.extend(self.children(v).iter().map(|c| (c, Dir::Down)));
                    }
                    if opens_collider.contains(v) {
                        queue.extend(self.parents(v).iter().map(|p| (p, Dir::Up)));
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::varset::Universe;

    /// Network from `(parent, child)` name pairs over `names`, ordered
    /// topologically with ties broken by universe order.
    pub(crate) fn net(names: &[&str], edges: &[(&str, &str)]) -> BeliefNetwork {
        let u = Universe::new(names.iter().copied()).unwrap();
        let mut parents = vec![VarSet::EMPTY; u.len()];
        for (p, c) in edges {
            let c = u.id(c).unwrap();
            parents[c.index()] = parents[c.index()].with(u.id(p).unwrap());
        }
        let mut placed = VarSet::EMPTY;
        let mut ordering = Vec::new();
        while placed != u.all() {
            let next = u
                .ids()
                .find(|v| !placed.contains(*v) && parents[v.index()].is_subset(placed))
                .expect("edges form a DAG");
            placed = placed.with(next);
            ordering.push(next);
        }
        BeliefNetwork::from_parts(u, ordering, parents).unwrap()
    }

    fn sep(n: &BeliefNetwork, x: &[&str], y: &[&str], z: &[&str]) -> bool {
        let u = n.universe();
        n.d_separated(u.set(x).unwrap(), u.set(y).unwrap(), u.set(z).unwrap())
            .unwrap()
    }

    #[test]
    fn collider() {
        let n = net(&["a", "b", "c"], &[("a", "c"), ("b", "c")]);
        assert!(sep(&n, &["a"], &["b"], &[]));
        assert!(!sep(&n, &["a"], &["b"], &["c"]));
    }

    #[test]
    fn collider_with_descendant() {
        let n = net(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("c", "d")]);
        assert!(!sep(&n, &["a"], &["b"], &["d"]));
        assert!(sep(&n, &["a"], &["b"], &[]));
    }

    #[test]
    fn chain() {
        let n = net(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert!(sep(&n, &["a"], &["c"], &["b"]));
        assert!(!sep(&n, &["a"], &["c"], &[]));
    }

    #[test]
    fn fork_and_overlap_error() {
        let n = net(&["a", "b", "c"], &[("b", "a"), ("b", "c")]);
        assert!(sep(&n, &["a"], &["c"], &["b"]));
        assert!(!sep(&n, &["a"], &["c"], &[]));
        let u = n.universe();
        assert!(n
            .d_separated(u.set(&["a"]).unwrap(), u.set(&["a"]).unwrap(), VarSet::EMPTY)
            .is_err());
    }
}
