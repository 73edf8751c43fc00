//! Naive enumeration of active trails. Exponential; kept as an independent
//! check on the reachability-based d-separation.

use std::fmt;

use super::BeliefNetwork;
use crate::error::{Error, Result};
use crate::triplet::Triplet;
use crate::varset::{Universe, VarSet, VariableId};

pub const DEFAULT_TRAIL_CAP: usize = 1_000_000;

/// A directed link `from -> to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: VariableId,
    pub to: VariableId,
}

/// Alternating nodes and links: `nodes[i]` and `nodes[i + 1]` are the
/// endpoints of `edges[i]`, in either direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trail {
    pub nodes: Vec<VariableId>,
    pub edges: Vec<Edge>,
}

impl Trail {
    pub fn display<'a>(&'a self, universe: &'a Universe) -> TrailDisplay<'a> {
        TrailDisplay { trail: self, universe }
    }

    /// Nodes with two consecutive edges pointing into them.
    pub fn head_to_head_nodes(&self) -> Vec<VariableId> {
        self.edges
            .windows(2)
            .zip(&self.nodes[1..])
            .filter(|(w, &v)| w[0].to == v && w[1].to == v)
            .map(|(_, &v)| v)
            .collect()
    }
}

pub struct TrailDisplay<'a> {
    trail: &'a Trail,
    universe: &'a Universe,
}

impl fmt::Display for TrailDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.trail;
        write!(f, "{}", self.universe.name(t.nodes[0]))?;
        for (e, &next) in t.edges.iter().zip(&t.nodes[1..]) {
            let arrow = if e.to == next { "->" } else { "<-" };
            write!(f, "{arrow}{}", self.universe.name(next))?;
        }
        Ok(())
    }
}

struct Search<'a> {
    net: &'a BeliefNetwork,
    edges: Vec<Edge>,
    y: VarSet,
    z: VarSet,
    /// `descendants[v]` includes v itself.
    reaches_z: Vec<bool>,
    used: Vec<bool>,
    nodes: Vec<VariableId>,
    path: Vec<usize>,
    found: Vec<Trail>,
    steps: usize,
    cap: usize,
}

impl Search<'_> {
    fn interior_ok(&self, v: VariableId, incoming: Edge, outgoing: Edge) -> bool {
        let head_to_head = incoming.to == v && outgoing.to == v;
        if head_to_head {
            self.reaches_z[v.index()]
        } else {
            !self.z.contains(v)
        }
    }

    fn extend(&mut self, at: VariableId) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            return Err(Error::Capacity {
                what: "trail enumeration",
                requested: self.steps,
                limit: self.cap,
            });
        }
        if !self.path.is_empty() && self.y.contains(at) {
            self.found.push(Trail {
                nodes: self.nodes.clone(),
                edges: self.path.iter().map(|&i| self.edges[i]).collect(),
            });
        }
        for i in 0..self.edges.len() {
            if self.used[i] {
                continue;
            }
            let e = self.edges[i];
            let next = if e.from == at {
                e.to
            } else if e.to == at {
                e.from
            } else {
                continue;
            };
            if let Some(&last) = self.path.last() {
                if !self.interior_ok(at, self.edges[last], e) {
                    continue;
                }
            }
            self.used[i] = true;
            self.path.push(i);
            self.nodes.push(next);
            self.extend(next)?;
            self.nodes.pop();
            self.path.pop();
            self.used[i] = false;
        }
        Ok(())
    }
}

impl BeliefNetwork {
    /// Every edge-simple trail from a node in `x` to a node in `y` that is
    /// active given `z`. Empty iff `x` and `y` are d-separated by `z`.
    pub fn enumerate_active_trails(&self, x: VarSet, y: VarSet, z: VarSet, cap: usize) -> Result<Vec<Trail>> {
        let t = Triplet::new(x, y, z)?;
        self.universe().check_set(t.variables())?;
        let reaches_z = self
            .universe()
            .ids()
            .map(|v| z.contains(v) || !self.descendants(v).is_disjoint(z))
            .collect();
        let mut search = Search {
            net: self,
            edges: self.edges(),
            y,
            z,
            reaches_z,
            used: Vec::new(),
            nodes: Vec::new(),
            path: Vec::new(),
            found: Vec::new(),
            steps: 0,
            cap,
        };
        search.used = vec![false; search.edges.len()];
        for start in x.iter() {
            search.nodes = vec![start];
            search.extend(start)?;
        }
        debug_assert!(search.net.universe().len() == self.universe().len());
        Ok(search.found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::dsep::tests::net;

    fn trails(n: &BeliefNetwork, x: &[&str], y: &[&str], z: &[&str]) -> Vec<String> {
        let u = n.universe();
        n.enumerate_active_trails(
            u.set(x).unwrap(),
            u.set(y).unwrap(),
            u.set(z).unwrap(),
            DEFAULT_TRAIL_CAP,
        )
        .unwrap()
        .iter()
        .map(|t| t.display(u).to_string())
        .collect()
    }

    #[test]
    fn collider_given_c() {
        let n = net(&["a", "b", "c"], &[("a", "c"), ("b", "c")]);
        assert_eq!(trails(&n, &["a"], &["b"], &["c"]), ["a->c<-b"]);
        assert!(trails(&n, &["a"], &["b"], &[]).is_empty());
    }

    #[test]
    fn chain_given_middle_is_blocked() {
        let n = net(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert!(trails(&n, &["a"], &["c"], &["b"]).is_empty());
        assert_eq!(trails(&n, &["a"], &["c"], &[]), ["a->b->c"]);
    }

    #[test]
    fn diamond_has_two_trails() {
        let n = net(&["a", "b", "c", "d"], &[("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")]);
        let mut t = trails(&n, &["a"], &["d"], &[]);
        t.sort();
        assert_eq!(t, ["a->b->d", "a->c->d"]);
    }

    #[test]
    fn head_to_head_detection() {
        let n = net(&["a", "b", "c"], &[("a", "c"), ("b", "c")]);
        let u = n.universe();
        let t = n
            .enumerate_active_trails(
                u.set(&["a"]).unwrap(),
                u.set(&["b"]).unwrap(),
                u.set(&["c"]).unwrap(),
                DEFAULT_TRAIL_CAP,
            )
            .unwrap();
        assert_eq!(t[0].head_to_head_nodes(), vec![u.id("c").unwrap()]);
    }

    #[test]
    fn cap_is_enforced() {
        let n = net(&["a", "b", "c", "d"], &[("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")]);
        let u = n.universe();
        let err = n
            .enumerate_active_trails(u.set(&["a"]).unwrap(), u.set(&["d"]).unwrap(), VarSet::EMPTY, 2)
            .unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }
}
