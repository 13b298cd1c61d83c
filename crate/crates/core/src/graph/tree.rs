use std::collections::{BTreeMap, VecDeque};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// A tree with a designated root.
///
/// Children are kept in ascending identifier order, so for binary trees
/// `children(v)[0]` is the left child and `children(v)[1]` the right one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    graph: Graph,
    root: Vertex,
    parent: BTreeMap<Vertex, Vertex>,
    children: BTreeMap<Vertex, Vec<Vertex>>,
    depth: BTreeMap<Vertex, usize>,
}

impl RootedTree {
    pub fn new(graph: Graph, root: Vertex) -> Result<RootedTree> {
        if !graph.contains(root) {
            return Err(Error::UnknownVertex(root));
        }
        if !graph.is_tree() {
            return Err(Error::NotAForest);
        }
        let mut parent = BTreeMap::new();
        let mut children: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        let mut depth = BTreeMap::from([(root, 0)]);
        let mut q = VecDeque::from([root]);
        while let Some(u) = q.pop_front() {
            let kids: Vec<Vertex> = graph
                .neighbors(u)
                .iter()
                .copied()
                .filter(|w| parent.get(&u) != Some(w))
                .collect();
            for &w in &kids {
                parent.insert(w, u);
                depth.insert(w, depth[&u] + 1);
                q.push_back(w);
            }
            children.insert(u, kids);
        }
        Ok(RootedTree { graph, root, parent, children, depth })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent.get(&v).copied()
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        self.children.get(&v).map_or(&[], |c| c.as_slice())
    }

    pub fn left_child(&self, v: Vertex) -> Option<Vertex> {
        self.children(v).first().copied()
    }

    pub fn right_child(&self, v: Vertex) -> Option<Vertex> {
        self.children(v).get(1).copied()
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[&v]
    }

    pub fn height(&self) -> usize {
        self.depth.values().copied().max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.children(v).is_empty()
    }

    /// Vertices at the given depth, ascending.
    pub fn level(&self, d: usize) -> Vec<Vertex> {
        self.depth.iter().filter(|(_, &x)| x == d).map(|(&v, _)| v).collect()
    }

    /// Whether `a` lies on the path from `d` to the root (a vertex is its own ancestor).
    pub fn is_ancestor(&self, a: Vertex, d: Vertex) -> bool {
        let mut cur = d;
        loop {
            if cur == a {
                return true;
            }
            match self.parent(cur) {
                Some(p) => cur = p,
                None => return false,
            }
        }
    }

    /// Tree path from `u` down to its descendant `d`, inclusive.
    pub fn downward_path(&self, u: Vertex, d: Vertex) -> Option<Vec<Vertex>> {
        let mut path = vec![d];
        let mut cur = d;
        while cur != u {
            cur = self.parent(cur)?;
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// Unique tree path between any two vertices.
    pub fn path_between(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut up = vec![u];
        let mut down = vec![v];
        let (mut a, mut b) = (u, v);
        while self.depth(a) > self.depth(b) {
            a = self.parent[&a];
            up.push(a);
        }
        while self.depth(b) > self.depth(a) {
            b = self.parent[&b];
            down.push(b);
        }
        while a != b {
            a = self.parent[&a];
            b = self.parent[&b];
            up.push(a);
            down.push(b);
        }
        down.pop();
        down.reverse();
        up.extend(down);
        up
    }

    /// Descendants of `v` including `v`, in preorder.
    pub fn subtree(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            for &c in self.children(u).iter().rev() {
                stack.push(c);
            }
        }
        out
    }

    /// DFS preorder from the root, children visited in ascending order.
    pub fn preorder(&self) -> Vec<Vertex> {
        self.subtree(self.root)
    }
}
