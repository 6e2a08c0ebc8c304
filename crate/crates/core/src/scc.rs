//! Strongly connected components of the attack graph.

use crate::argset::ArgSet;
use crate::framework::Framework;

/// An SCC partition whose component ids follow a topological order of the
/// condensation: an attack from component `i` to component `j ≠ i` implies
/// `i < j`.
#[derive(Clone, Debug)]
pub struct Sccs {
    components: Vec<ArgSet>,
    component_of: Vec<Option<usize>>,
}

impl Sccs {
    pub fn components(&self) -> &[ArgSet] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Component id of `a`, or `None` if `a` was outside the universe.
    pub fn component_of(&self, a: usize) -> Option<usize> {
        self.component_of[a]
    }

    pub fn component(&self, id: usize) -> &ArgSet {
        &self.components[id]
    }
}

pub fn sccs(f: &Framework) -> Sccs {
    sccs_within(f, &f.all())
}

/// SCCs of the projection of `f` on `universe` (iterative Tarjan).
pub fn sccs_within(f: &Framework, universe: &ArgSet) -> Sccs {
    const UNSEEN: usize = usize::MAX;
    let n = f.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;

    let succ = |v: usize| -> Vec<usize> { f.targets(v).intersection(universe).to_vec() };

    for root in universe {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, successors, next successor position)
        let mut work: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        work.push((root, succ(root), 0));

        while let Some((v, ws, pos)) = work.last_mut() {
            let v = *v;
            if *pos < ws.len() {
                let w = ws[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, succ(w), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some((parent, _, _)) = work.last() {
                low[*parent] = low[*parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                found.push(comp);
            }
        }
    }

    // Tarjan emits sinks first.
    found.reverse();
    let mut component_of = vec![None; n];
    let components = found
        .into_iter()
        .enumerate()
        .map(|(id, comp)| {
            for &a in &comp {
                component_of[a] = Some(id);
            }
            ArgSet::from_indices(n, comp)
        })
        .collect();
    Sccs {
        components,
        component_of,
    }
}
