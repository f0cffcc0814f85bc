//! Finite membership structures and audits of the class and topology
//! axioms over them.
//!
//! A structure is a digraph on nodes `0..n` where an edge `[i, j]` means
//! `i ∈ j`; cycles are allowed. Nodes flagged as atoms have no elements;
//! every other node is a set. A class is a subset of the nodes, and a class
//! is `T`-closed when it is empty or the extension of some set node.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hf_universe::innermodel::InterpretationContext;
use crate::hf_universe::object::HfObject;
use crate::positive_core::enumerate::for_each_formula;
use crate::positive_core::formula::{Formula, Var};

/// Largest number of nonempty set nodes for which the second topology
/// axiom is checked over every subfamily.
pub const MAX_FAMILY_NODES: usize = 20;

/// The JSON form `{"nodes": n, "atom": [...], "edges": [[i, j], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub nodes: usize,
    pub atom: Vec<bool>,
    pub edges: Vec<[usize; 2]>,
}

/// A validated membership digraph, optionally carrying node labels and a
/// rank for each node together with a rank bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipStructure {
    atom: Vec<bool>,
    /// `ext[j]` lists the `i` with `i ∈ j`, sorted.
    ext: Vec<Vec<usize>>,
    pub labels: Option<Vec<String>>,
    ranks: Option<(Vec<usize>, usize)>,
    zero_rank: usize,
}

impl MembershipStructure {
    pub fn new(atom: Vec<bool>, edges: &[[usize; 2]]) -> Result<Self> {
        let n = atom.len();
        let mut ext = vec![Vec::new(); n];
        for &[i, j] in edges {
            if i >= n || j >= n {
                return Err(Error::Precondition(format!("edge [{i}, {j}] mentions a node outside 0..{n}")));
            }
            if atom[j] {
                return Err(Error::Precondition(format!("atom node {j} has element {i}")));
            }
            ext[j].push(i);
        }
        for e in &mut ext {
            e.sort_unstable();
            e.dedup();
        }
        Ok(MembershipStructure { atom, ext, labels: None, ranks: None, zero_rank: 0 })
    }

    pub fn from_file(file: &StructureFile) -> Result<Self> {
        if file.atom.len() != file.nodes {
            return Err(Error::Precondition(format!("{} atom flags for {} nodes", file.atom.len(), file.nodes)));
        }
        Self::new(file.atom.clone(), &file.edges)
    }

    pub fn to_file(&self) -> StructureFile {
        let edges = self.ext.iter().enumerate().flat_map(|(j, e)| e.iter().map(move |&i| [i, j])).collect();
        StructureFile { nodes: self.len(), atom: self.atom.clone(), edges }
    }

    /// The real membership relation on a list of distinct objects.
    pub fn from_hf(objects: &[HfObject]) -> Self {
        let atom = objects.iter().map(HfObject::is_atom).collect();
        let mut edges = Vec::new();
        for (j, y) in objects.iter().enumerate() {
            for (i, x) in objects.iter().enumerate() {
                if y.contains(x) {
                    edges.push([i, j]);
                }
            }
        }
        let mut s = Self::new(atom, &edges).expect("atoms have no elements");
        s.labels = Some(objects.iter().map(|o| o.to_string()).collect());
        s
    }

    /// The structure a context induces: nodes are `W⊕`, the elements of
    /// `B⊕` are atoms, and `x ∈ y` iff `y ∉ B` and `x ∈_Z Φ(y)`. Node ranks
    /// are recorded so that missing classes of rank above the bound are
    /// reported as out of bound.
    pub fn from_context(ctx: &InterpretationContext) -> Self {
        let nodes: Vec<HfObject> = ctx.w_plus().elements().to_vec();
        let atom: Vec<bool> = nodes.iter().map(|x| ctx.b.contains(x)).collect();
        let mut edges = Vec::new();
        for (j, y) in nodes.iter().enumerate() {
            if atom[j] {
                continue;
            }
            if let Some(image) = ctx.phi_of(y) {
                for (i, x) in nodes.iter().enumerate() {
                    if ctx.zero.elem(x, image) {
                        edges.push([i, j]);
                    }
                }
            }
        }
        let mut s = Self::new(atom, &edges).expect("atoms have no elements");
        s.labels = Some(nodes.iter().map(|o| o.to_string()).collect());
        let ranks = nodes.iter().map(HfObject::rank).collect();
        s.ranks = Some((ranks, ctx.rank_bound));
        s.zero_rank = ctx.zero.value().rank();
        s
    }

    pub fn len(&self) -> usize {
        self.atom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atom.is_empty()
    }

    pub fn is_atom(&self, i: usize) -> bool {
        self.atom[i]
    }

    pub fn extension(&self, i: usize) -> &[usize] {
        &self.ext[i]
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.as_ref().map_or_else(|| format!("node {i}"), |l| l[i].clone())
    }

    fn set_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| !self.atom[i])
    }

    /// A set node with exactly this extension.
    pub fn node_with_extension(&self, class: &[usize]) -> Option<usize> {
        self.set_nodes().find(|&j| self.ext[j] == class)
    }

    /// Whether a sorted class is empty or a set node's extension.
    pub fn is_t_closed(&self, class: &[usize]) -> bool {
        class.is_empty() || self.node_with_extension(class).is_some()
    }

    fn is_superset_node(&self, sup: usize, sub: usize) -> bool {
        !self.atom[sup] && self.ext[sub].iter().all(|x| self.ext[sup].binary_search(x).is_ok())
    }

    /// The zero condition on a node, using digraph edges: no element of
    /// `z` is a set whose extension contains that of `z`.
    pub fn is_zero_node(&self, z: usize) -> bool {
        !self.ext[z].iter().any(|&e| self.is_superset_node(e, z))
    }

    /// Whether a missing class would need an object above the rank bound.
    fn beyond_bound(&self, class: &[usize]) -> bool {
        match &self.ranks {
            Some((ranks, bound)) => {
                let top = class.iter().map(|&i| ranks[i] + 1).max().unwrap_or(0);
                top.max(self.zero_rank) > *bound
            }
            None => false,
        }
    }
}

/// Verdict counts for one axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub out_of_bound: usize,
    pub vacuous: usize,
    pub witness: Option<String>,
}

impl AxiomVerdict {
    fn new(axiom: &'static str) -> Self {
        AxiomVerdict { axiom, ..Default::default() }
    }

    /// `"fail"` if any instance failed, `"vacuous"` if no instance was
    /// decided, `"pass"` otherwise.
    pub fn status(&self) -> &'static str {
        if self.fail > 0 {
            "fail"
        } else if self.pass == 0 && self.out_of_bound == 0 {
            "vacuous"
        } else {
            "pass"
        }
    }

    fn pass(&mut self) {
        self.pass += 1;
    }

    fn fail(&mut self, witness: impl FnOnce() -> String) {
        self.fail += 1;
        if self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    /// Records a class that must be `T`-closed.
    fn require_closed(&mut self, m: &MembershipStructure, class: &[usize], witness: impl FnOnce() -> String) {
        if m.is_t_closed(class) {
            self.pass();
        } else if m.beyond_bound(class) {
            self.out_of_bound += 1;
        } else {
            self.fail(witness);
        }
    }
}

/// Per-axiom verdicts for one structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub nodes: usize,
    pub axioms: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn get(&self, axiom: &str) -> Option<&AxiomVerdict> {
        self.axioms.iter().find(|a| a.axiom == axiom)
    }
}

fn fmt_class(m: &MembershipStructure, class: &[usize]) -> String {
    let parts: Vec<String> = class.iter().map(|&i| m.label(i)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn merge(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Checks the class axioms, the topology axioms, the exponential and
/// additivity axioms, `V ∈ V`, and bounded positive specification for
/// every formula of AST size at most `depth` in two free variables.
pub fn audit_axioms(m: &MembershipStructure, depth: usize) -> Result<AxiomReport> {
    let n = m.len();
    let sets: Vec<usize> = m.set_nodes().collect();
    let t: Vec<usize> = sets.iter().copied().filter(|&j| !m.ext[j].is_empty()).collect();
    let mut out = Vec::new();

    let mut ext = AxiomVerdict::new("extensionality");
    for (k, &x) in sets.iter().enumerate() {
        for &y in &sets[k + 1..] {
            if m.ext[x] == m.ext[y] {
                ext.fail(|| format!("{} and {} have the same elements", m.label(x), m.label(y)));
            } else {
                ext.pass();
            }
        }
    }
    out.push(ext);

    let mut atoms = AxiomVerdict::new("atoms");
    for i in (0..n).filter(|&i| m.atom[i]) {
        if m.ext[i].is_empty() {
            atoms.pass();
        } else {
            atoms.fail(|| format!("atom {} has elements", m.label(i)));
        }
    }
    out.push(atoms);

    let mut nontrivial = AxiomVerdict::new("nontriviality");
    if n >= 2 {
        nontrivial.pass();
    } else {
        nontrivial.fail(|| format!("only {n} node(s)"));
    }
    out.push(nontrivial);

    let mut t1 = AxiomVerdict::new("T1");
    for a in 0..n {
        t1.require_closed(m, &[a], || format!("{{{}}} is not a set", m.label(a)));
    }
    out.push(t1);

    let mut second = AxiomVerdict::new("2nd topology");
    if t.len() > MAX_FAMILY_NODES {
        return Err(Error::Guard { what: "nonempty set nodes", value: t.len(), limit: MAX_FAMILY_NODES });
    }
    for mask in 1u32..1 << t.len() {
        let members: Vec<usize> = (0..t.len()).filter(|i| mask >> i & 1 == 1).map(|i| t[i]).collect();
        let meet: Vec<usize> = m.ext[members[0]]
            .iter()
            .copied()
            .filter(|x| members[1..].iter().all(|&j| m.ext[j].binary_search(x).is_ok()))
            .collect();
        second.require_closed(m, &meet, || format!("⋂ of {} is not closed", fmt_class(m, &members)));
    }
    out.push(second);

    let mut third = AxiomVerdict::new("3rd topology");
    for &a in &t {
        for &b in &t {
            let u = merge(&m.ext[a], &m.ext[b]);
            third.require_closed(m, &u, || format!("{} ∪ {} is not a set", m.label(a), m.label(b)));
        }
    }
    out.push(third);

    let mut exponential = AxiomVerdict::new("exponential");
    let closed: Vec<Option<usize>> = std::iter::once(None).chain(t.iter().map(|&j| Some(j))).collect();
    for &a in &closed {
        for &b in &closed {
            let ea: &[usize] = a.map_or(&[], |j| &m.ext[j]);
            let eb: &[usize] = b.map_or(&[], |j| &m.ext[j]);
            let class: Vec<usize> = t
                .iter()
                .copied()
                .filter(|&c| {
                    m.ext[c].iter().all(|x| ea.binary_search(x).is_ok())
                        && m.ext[c].iter().any(|x| eb.binary_search(x).is_ok())
                })
                .collect();
            exponential.require_closed(m, &class, || {
                let name = |s: Option<usize>| s.map_or("∅".to_string(), |j| m.label(j));
                format!("□{} ∩ ◊{} is not closed", name(a), name(b))
            });
        }
    }
    out.push(exponential);

    let mut additivity = AxiomVerdict::new("additivity");
    additivity.vacuous += 1;
    out.push(additivity);

    let mut universal = AxiomVerdict::new("V ∈ V");
    let everything: Vec<usize> = (0..n).collect();
    match m.node_with_extension(&everything) {
        Some(v) if (0..n).any(|j| m.ext[j].contains(&v)) => universal.pass(),
        _ => universal.fail(|| "no set node contains every node".into()),
    }
    out.push(universal);

    out.push(audit_specification(m, depth)?);
    Ok(AxiomReport { nodes: n, axioms: out })
}

fn audit_specification(m: &MembershipStructure, depth: usize) -> Result<AxiomVerdict> {
    let mut v = AxiomVerdict::new("BPF specification");
    let n = m.len();
    let sets: Vec<usize> = m.set_nodes().collect();
    let mut error = None;
    for_each_formula(depth, 2, 0, &mut |phi| {
        for &c in &sets {
            for b in 0..n {
                let mut class = Vec::new();
                for &x in &m.ext[c] {
                    match eval_on_structure(m, &phi, &[x, b], &mut Vec::new()) {
                        Ok(true) => class.push(x),
                        Ok(false) => {}
                        Err(e) => {
                            error = Some(e);
                            return false;
                        }
                    }
                }
                v.require_closed(m, &class, || {
                    format!("{{x ∈ {} | {phi}}} with x2 = {} is not closed", m.label(c), m.label(b))
                });
            }
        }
        true
    });
    match error {
        Some(e) => Err(e),
        None => Ok(v),
    }
}

/// Satisfaction of a bounded positive formula in the structure, with free
/// variables assigned nodes.
pub fn eval_on_structure(
    m: &MembershipStructure,
    phi: &Formula,
    env: &[usize],
    bound: &mut Vec<(String, usize)>,
) -> Result<bool> {
    let look = |v: &Var, bound: &Vec<(String, usize)>| -> Result<usize> {
        match v {
            Var::Free(i) => {
                env.get(i.wrapping_sub(1)).copied().ok_or_else(|| Error::Precondition(format!("x{i} is unassigned")))
            }
            Var::Bound(name) => bound
                .iter()
                .rev()
                .find(|(b, _)| b == name)
                .map(|(_, x)| *x)
                .ok_or_else(|| Error::Precondition(format!("unbound variable {name}"))),
        }
    };
    Ok(match phi {
        Formula::Member(a, b) => {
            let (x, y) = (look(a, bound)?, look(b, bound)?);
            m.ext[y].binary_search(&x).is_ok()
        }
        Formula::Equal(a, b) => look(a, bound)? == look(b, bound)?,
        Formula::And(p, q) => eval_on_structure(m, p, env, bound)? && eval_on_structure(m, q, env, bound)?,
        Formula::Or(p, q) => eval_on_structure(m, p, env, bound)? || eval_on_structure(m, q, env, bound)?,
        Formula::ExistsIn(z, v, body) | Formula::ForallIn(z, v, body) => {
            let range = m.ext[look(v, bound)?].clone();
            let exists = matches!(phi, Formula::ExistsIn(..));
            let mut result = !exists;
            for x in range {
                bound.push((z.clone(), x));
                let r = eval_on_structure(m, body, env, bound);
                bound.pop();
                if r? == exists {
                    result = exists;
                    break;
                }
            }
            result
        }
        Formula::ForallParam(..) => {
            return Err(Error::Precondition("class quantifiers are not evaluated on structures".into()))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf_universe::object::cumulative_level;

    #[test]
    fn cumulative_level_three() {
        let m = MembershipStructure::from_hf(&cumulative_level(3));
        let r = audit_axioms(&m, 1).unwrap();
        assert_eq!(r.get("extensionality").unwrap().status(), "pass");
        assert_eq!(r.get("atoms").unwrap().status(), "vacuous");
        assert_eq!(r.get("nontriviality").unwrap().status(), "pass");
        let t1 = r.get("T1").unwrap();
        assert_eq!(t1.status(), "fail");
        // The singleton {{{∅}}} of rank 4 is missing.
        assert_eq!(t1.witness.as_deref(), Some("{{{{}}}} is not a set"));
    }

    #[test]
    fn self_membered_node() {
        let m = MembershipStructure::new(vec![false], &[[0, 0]]).unwrap();
        let r = audit_axioms(&m, 1).unwrap();
        assert_eq!(r.get("extensionality").unwrap().status(), "vacuous");
        assert_eq!(r.get("nontriviality").unwrap().status(), "fail");
        assert_eq!(r.get("V ∈ V").unwrap().status(), "pass");
    }

    #[test]
    fn two_atoms() {
        let m = MembershipStructure::new(vec![true, true], &[]).unwrap();
        let r = audit_axioms(&m, 2).unwrap();
        assert_eq!(r.get("atoms").unwrap().status(), "pass");
        assert_eq!(r.get("2nd topology").unwrap().status(), "vacuous");
        assert!(MembershipStructure::new(vec![true, false], &[[1, 0]]).is_err());
    }

    #[test]
    fn zero_nodes() {
        // q ∈ q, s = {q}: q is a superset of s.
        let m = MembershipStructure::new(vec![false, false], &[[0, 0], [0, 1]]).unwrap();
        assert!(!m.is_zero_node(1));
        let m = MembershipStructure::from_hf(&cumulative_level(3));
        assert!((0..m.len()).all(|i| m.is_zero_node(i)));
    }

    #[test]
    fn file_round_trip() {
        let m = MembershipStructure::from_hf(&cumulative_level(3));
        let json = serde_json::to_string(&m.to_file()).unwrap();
        let back: StructureFile = serde_json::from_str(&json).unwrap();
        let m2 = MembershipStructure::from_file(&back).unwrap();
        assert_eq!(m2.to_file(), m.to_file());
    }
}
