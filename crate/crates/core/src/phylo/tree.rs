use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::cluster::Cluster;
use super::universe::{Label, LabelUniverse};
use crate::error::{Error, Result};

/// Index into a tree's node arena.
pub type NodeId = usize;

/// A node record in the arena.
#[derive(Debug, Clone)]
pub struct Node {
    parent: Option<NodeId>,
    children: Vec<NodeId>,
    label: Option<Label>,
    /// Position of this node inside `parent.children`.
    slot: usize,
    removed: bool,
}

/// A rooted, unordered, multifurcating, leaf-labeled tree.
///
/// Nodes live in an arena and are addressed by [`NodeId`]. Deleting a node
/// leaves a tombstone so that ids held by callers stay valid; [`Tree::compact`]
/// renumbers the live nodes densely.
///
/// Every internal node of a tree handed out by the public API has at least
/// two children. Unary nodes only appear inside algorithm internals.
#[derive(Debug, Clone)]
pub struct Tree {
    universe: Arc<LabelUniverse>,
    nodes: Vec<Node>,
    root: NodeId,
}

impl Tree {
    /// A tree consisting of a single unlabeled root.
    pub(crate) fn with_root(universe: Arc<LabelUniverse>) -> Self {
        Self {
            universe,
            nodes: vec![Node {
                parent: None,
                children: Vec::new(),
                label: None,
                slot: 0,
                removed: false,
            }],
            root: 0,
        }
    }

    /// A tree whose only node is the leaf `label`.
    pub fn leaf(universe: Arc<LabelUniverse>, label: Label) -> Self {
        let mut t = Self::with_root(universe);
        t.nodes[0].label = Some(label);
        t
    }

    /// Every label of the universe attached directly to the root.
    pub fn star(universe: Arc<LabelUniverse>) -> Self {
        let n = universe.len();
        Self::star_over(universe, 0..n)
    }

    /// The given labels attached directly to the root; a single label gives a
    /// one-node tree.
    pub fn star_over<I: IntoIterator<Item = Label>>(
        universe: Arc<LabelUniverse>,
        labels: I,
    ) -> Self {
        let labels: Vec<Label> = labels.into_iter().collect();
        if labels.len() == 1 {
            return Self::leaf(universe, labels[0]);
        }
        let mut t = Self::with_root(universe);
        for l in labels {
            t.add_child(0, Some(l));
        }
        t
    }

    pub fn universe(&self) -> &LabelUniverse {
        &self.universe
    }

    pub fn universe_arc(&self) -> &Arc<LabelUniverse> {
        &self.universe
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.nodes[v].parent
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.nodes[v].children
    }

    pub fn label(&self, v: NodeId) -> Option<Label> {
        self.nodes[v].label
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.nodes[v].children.is_empty()
    }

    pub fn is_alive(&self, v: NodeId) -> bool {
        v < self.nodes.len() && !self.nodes[v].removed
    }

    /// Size of the arena, tombstones included. Per-node side tables should
    /// be sized by this.
    pub fn arena_len(&self) -> usize {
        self.nodes.len()
    }

    /// Number of live nodes.
    pub fn node_count(&self) -> usize {
        self.nodes.iter().filter(|n| !n.removed).count()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Appends a fresh node under `parent`.
    pub(crate) fn add_child(&mut self, parent: NodeId, label: Option<Label>) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(Node {
            parent: None,
            children: Vec::new(),
            label,
            slot: 0,
            removed: false,
        });
        self.attach(parent, id);
        id
    }

    pub(crate) fn attach(&mut self, parent: NodeId, child: NodeId) {
        debug_assert!(self.nodes[child].parent.is_none());
        let slot = self.nodes[parent].children.len();
        self.nodes[parent].children.push(child);
        let c = &mut self.nodes[child];
        c.parent = Some(parent);
        c.slot = slot;
    }

    /// Unlinks `child` from its parent in O(1); sibling order may change.
    pub(crate) fn detach(&mut self, child: NodeId) {
        let Some(p) = self.nodes[child].parent.take() else {
            return;
        };
        let slot = self.nodes[child].slot;
        let siblings = &mut self.nodes[p].children;
        siblings.swap_remove(slot);
        if let Some(&moved) = siblings.get(slot) {
            self.nodes[moved].slot = slot;
        }
    }

    /// Builds a tree from a parent array; `parents[root] == None`. Child
    /// order follows node order.
    pub(crate) fn from_parents(
        universe: Arc<LabelUniverse>,
        parents: &[Option<NodeId>],
        labels: &[Option<Label>],
    ) -> Self {
        let mut nodes: Vec<Node> = labels
            .iter()
            .map(|&label| Node {
                parent: None,
                children: Vec::new(),
                label,
                slot: 0,
                removed: false,
            })
            .collect();
        let mut root = 0;
        for (v, p) in parents.iter().enumerate() {
            match *p {
                Some(p) => {
                    nodes[v].slot = nodes[p].children.len();
                    nodes[v].parent = Some(p);
                    nodes[p].children.push(v);
                }
                None => root = v,
            }
        }
        Self {
            universe,
            nodes,
            root,
        }
    }

    /// Live nodes, parents before children.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.nodes[v].children.iter().rev());
        }
        out
    }

    /// Live nodes, children before parents.
    pub fn postorder(&self) -> Vec<NodeId> {
        let mut out = self.preorder();
        out.reverse();
        out
    }

    /// Leaf labels in preorder.
    pub fn leaf_labels(&self) -> Vec<Label> {
        self.preorder()
            .into_iter()
            .filter_map(|v| self.nodes[v].label.filter(|_| self.is_leaf(v)))
            .collect()
    }

    /// Label ordinal → leaf node, over the whole universe.
    pub fn leaf_map(&self) -> Vec<Option<NodeId>> {
        let mut map = vec![None; self.universe.len()];
        for v in self.preorder() {
            if let Some(l) = self.nodes[v].label {
                map[l] = Some(v);
            }
        }
        map
    }

    /// Leaf counts of every subtree, indexed by arena id (0 for tombstones).
    pub fn leaf_counts(&self) -> Vec<usize> {
        let mut size = vec![0usize; self.nodes.len()];
        for v in self.postorder() {
            size[v] = if self.is_leaf(v) {
                1
            } else {
                self.nodes[v].children.iter().map(|&c| size[c]).sum()
            };
        }
        size
    }

    pub fn leaf_set(&self) -> Cluster {
        Cluster::from_labels(self.universe.len(), self.leaf_labels())
    }

    /// Λ(T[v]).
    pub fn cluster_of(&self, v: NodeId) -> Cluster {
        let mut c = Cluster::empty(self.universe.len());
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            if let Some(l) = self.nodes[u].label.filter(|_| self.is_leaf(u)) {
                c.insert(l);
            }
            stack.extend_from_slice(&self.nodes[u].children);
        }
        c
    }

    /// The cluster of every live node, indexed by arena id; tombstones get an
    /// empty cluster.
    pub fn node_clusters(&self) -> Vec<Cluster> {
        let width = self.universe.len();
        let mut out = vec![Cluster::empty(width); self.nodes.len()];
        for v in self.postorder() {
            if self.is_leaf(v) {
                if let Some(l) = self.nodes[v].label {
                    out[v].insert(l);
                }
            } else {
                let mut c = Cluster::empty(width);
                for &ch in &self.nodes[v].children {
                    c.union_with(&out[ch]);
                }
                out[v] = c;
            }
        }
        out
    }

    /// C(T): one cluster per node, trivial clusters included.
    pub fn cluster_collection(&self) -> BTreeSet<Cluster> {
        let clusters = self.node_clusters();
        self.preorder()
            .into_iter()
            .map(|v| clusters[v].clone())
            .collect()
    }

    /// Non-trivial clusters only.
    pub fn nontrivial_clusters(&self) -> BTreeSet<Cluster> {
        self.cluster_collection()
            .into_iter()
            .filter(|c| !c.is_trivial())
            .collect()
    }

    /// Makes all children of `v` children of its parent and removes `v`.
    /// Cost is proportional to the number of children of `v`.
    pub fn delete_node(&mut self, v: NodeId) -> Result<()> {
        if !self.is_alive(v) {
            return Err(Error::InvalidNode("node was removed"));
        }
        let Some(p) = self.nodes[v].parent else {
            return Err(Error::InvalidNode("cannot delete the root"));
        };
        if self.is_leaf(v) {
            return Err(Error::InvalidNode("cannot delete a leaf"));
        }
        self.detach(v);
        let children = core::mem::take(&mut self.nodes[v].children);
        for c in children {
            self.nodes[c].parent = None;
            self.attach(p, c);
        }
        self.nodes[v].removed = true;
        Ok(())
    }

    /// Creates a new child `u` of `v` that adopts the children in `xs`.
    /// `xs` must be a proper subset of `v`'s children with at least two
    /// members.
    pub fn insert_node(&mut self, v: NodeId, xs: &[NodeId]) -> Result<NodeId> {
        if !self.is_alive(v) || self.is_leaf(v) {
            return Err(Error::InvalidNode(
                "insertion point must be a live internal node",
            ));
        }
        if xs.len() < 2 {
            return Err(Error::InvalidNode("need at least two children to regroup"));
        }
        let mut seen = BTreeSet::new();
        for &x in xs {
            if !self.is_alive(x) || self.nodes[x].parent != Some(v) || !seen.insert(x) {
                return Err(Error::InvalidNode(
                    "regrouped nodes must be distinct children of v",
                ));
            }
        }
        if xs.len() >= self.nodes[v].children.len() {
            return Err(Error::InvalidNode(
                "regrouped children must be a proper subset",
            ));
        }
        Ok(self.regroup(v, xs))
    }

    /// Unchecked [`Tree::insert_node`].
    pub(crate) fn regroup(&mut self, v: NodeId, xs: &[NodeId]) -> NodeId {
        let u = self.add_child(v, None);
        for &x in xs {
            self.detach(x);
            self.attach(u, x);
        }
        u
    }

    /// Copy with live nodes renumbered densely in preorder. Returns the copy
    /// and the old → new id map.
    pub fn compact(&self) -> (Tree, Vec<Option<NodeId>>) {
        let order = self.preorder();
        let mut map = vec![None; self.nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            map[old] = Some(new);
        }
        let parents: Vec<Option<NodeId>> = order
            .iter()
            .map(|&v| self.nodes[v].parent.map(|p| map[p].unwrap()))
            .collect();
        let labels: Vec<Option<Label>> = order.iter().map(|&v| self.nodes[v].label).collect();
        let t = Tree::from_parents(self.universe.clone(), &parents, &labels);
        (t, map)
    }

    /// Copy keeping the root, the leaves and the internal nodes flagged in
    /// `keep` (indexed by arena id), renumbered as in [`Tree::compact`].
    pub(crate) fn contract(&self, keep: &[bool]) -> (Tree, Vec<Option<NodeId>>) {
        let mut t = self.clone();
        for v in self.preorder() {
            if !keep[v] && v != self.root && !self.is_leaf(v) {
                t.delete_node(v).expect("live internal non-root node");
            }
        }
        t.compact()
    }

    /// The subtree rooted at `v` as its own tree, plus the new → old id map.
    pub fn subtree(&self, v: NodeId) -> (Tree, Vec<NodeId>) {
        let mut order = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend(self.nodes[u].children.iter().rev());
        }
        let mut local = alloc::collections::BTreeMap::new();
        for (i, &u) in order.iter().enumerate() {
            local.insert(u, i);
        }
        let parents: Vec<Option<NodeId>> = order
            .iter()
            .map(|&u| {
                if u == v {
                    None
                } else {
                    self.nodes[u].parent.map(|p| local[&p])
                }
            })
            .collect();
        let labels: Vec<Option<Label>> = order.iter().map(|&u| self.nodes[u].label).collect();
        (
            Tree::from_parents(self.universe.clone(), &parents, &labels),
            order,
        )
    }

    /// Checks the structural invariants: consistent links, distinct leaf
    /// labels on every leaf, no labels on internal nodes' behalf, and at
    /// least two children per internal node.
    pub fn validate(&self) -> Result<()> {
        let mut seen = vec![false; self.universe.len()];
        let order = self.preorder();
        if order.len() != self.node_count() {
            return Err(Error::InvalidNode("unreachable live nodes"));
        }
        for &v in &order {
            let node = &self.nodes[v];
            if node.removed {
                return Err(Error::InvalidNode("tombstone reachable from root"));
            }
            for (i, &c) in node.children.iter().enumerate() {
                if self.nodes[c].parent != Some(v) || self.nodes[c].slot != i {
                    return Err(Error::InvalidNode("inconsistent parent/child links"));
                }
            }
            if node.children.is_empty() {
                let Some(l) = node.label else {
                    return Err(Error::InvalidNode("unlabeled leaf"));
                };
                if core::mem::replace(&mut seen[l], true) {
                    return Err(Error::DuplicateLabel(self.universe.name(l).into()));
                }
            } else if node.children.len() < 2 {
                return Err(Error::InvalidNode(
                    "internal node with fewer than two children",
                ));
            }
        }
        Ok(())
    }
}

/// True iff the two trees have the same cluster collection.
pub fn trees_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.cluster_collection() == b.cluster_collection()
}

/// True iff `c` is compatible with every cluster of `t`. Runs one bottom-up
/// pass over `t` counting members of `c` below each node.
pub fn cluster_compatible_with_tree(c: &Cluster, t: &Tree) -> bool {
    let total = c.len();
    let mut inside = vec![0usize; t.arena_len()];
    let mut size = vec![0usize; t.arena_len()];
    for v in t.postorder() {
        if t.is_leaf(v) {
            size[v] = 1;
            inside[v] = usize::from(t.label(v).is_some_and(|l| c.contains(l)));
        } else {
            for &ch in t.children(v) {
                size[v] += size[ch];
                inside[v] += inside[ch];
            }
        }
        // crossing: meets c, is not inside c, does not contain c
        if inside[v] > 0 && inside[v] < size[v] && inside[v] < total {
            return false;
        }
    }
    true
}
