//! Canonical hereditarily finite sets over named atoms.
//!
//! An [`HfObject`] is either an atom or a finite set of objects. Sets keep
//! their elements deduplicated and sorted by the canonical structural order
//! (atoms before sets, atoms by name, sets by size and then
//! lexicographically by elements), so extensional equality is structural
//! equality. Nodes are reference counted and carry a cached hash and rank,
//! which makes cloning cheap and lets equality tests short-circuit.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
enum Kind {
    Atom(Box<str>),
    Set(Box<[HfObject]>),
}

#[derive(Debug)]
struct Node {
    kind: Kind,
    hash: u64,
    rank: usize,
}

/// A canonical hereditarily finite set or atom.
#[derive(Clone)]
pub struct HfObject(Arc<Node>);

impl HfObject {
    /// The atom `#name`.
    pub fn atom(name: &str) -> Self {
        let mut h = DefaultHasher::new();
        0u8.hash(&mut h);
        name.hash(&mut h);
        HfObject(Arc::new(Node { kind: Kind::Atom(name.into()), hash: h.finish(), rank: 0 }))
    }

    /// The empty set.
    pub fn empty() -> Self {
        Self::from_canonical(Vec::new())
    }

    /// The set of the given elements, deduplicated and sorted.
    pub fn set(elements: impl IntoIterator<Item = HfObject>) -> Self {
        let mut v: Vec<HfObject> = elements.into_iter().collect();
        v.sort();
        v.dedup();
        Self::from_canonical(v)
    }

    /// Builds a set from elements that are already sorted and deduplicated.
    fn from_canonical(v: Vec<HfObject>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]), "elements not canonical");
        let mut h = DefaultHasher::new();
        1u8.hash(&mut h);
        v.len().hash(&mut h);
        let mut rank = 0;
        for e in &v {
            e.0.hash.hash(&mut h);
            rank = rank.max(e.0.rank);
        }
        HfObject(Arc::new(Node { kind: Kind::Set(v.into_boxed_slice()), hash: h.finish(), rank: rank + 1 }))
    }

    /// The singleton `{x}`.
    pub fn singleton(x: HfObject) -> Self {
        Self::from_canonical(vec![x])
    }

    /// The unordered pair `{x, y}`.
    pub fn pair_set(x: HfObject, y: HfObject) -> Self {
        Self::set([x, y])
    }

    /// The Kuratowski pair `⟨x, y⟩ = {{x}, {x, y}}`.
    pub fn kpair(x: HfObject, y: HfObject) -> Self {
        let sx = Self::singleton(x.clone());
        let sxy = Self::pair_set(x, y);
        Self::set([sx, sxy])
    }

    /// The left-nested tuple `⟨x1, …, xn⟩ = ⟨⟨x1, …, x(n−1)⟩, xn⟩`; a
    /// one-element tuple is its element.
    pub fn tuple(items: &[HfObject]) -> Self {
        assert!(!items.is_empty(), "tuples have at least one component");
        let mut acc = items[0].clone();
        for x in &items[1..] {
            acc = Self::kpair(acc, x.clone());
        }
        acc
    }

    /// Decodes a Kuratowski pair.
    pub fn as_kpair(&self) -> Option<(HfObject, HfObject)> {
        let e = self.elements();
        match e.len() {
            // {{x}} = ⟨x, x⟩
            1 => {
                let inner = e[0].elements();
                if !e[0].is_atom() && inner.len() == 1 {
                    Some((inner[0].clone(), inner[0].clone()))
                } else {
                    None
                }
            }
            2 => {
                let (s, t) = if e[0].len() == 1 { (&e[0], &e[1]) } else { (&e[1], &e[0]) };
                if s.is_atom() || t.is_atom() || s.len() != 1 || t.len() != 2 {
                    return None;
                }
                let x = &s.elements()[0];
                let te = t.elements();
                let y = if &te[0] == x {
                    &te[1]
                } else if &te[1] == x {
                    &te[0]
                } else {
                    return None;
                };
                Some((x.clone(), y.clone()))
            }
            _ => None,
        }
    }

    /// Decodes a left-nested tuple of the given arity.
    pub fn as_tuple(&self, arity: usize) -> Option<Vec<HfObject>> {
        assert!(arity >= 1);
        if arity == 1 {
            return Some(vec![self.clone()]);
        }
        let (head, last) = self.as_kpair()?;
        let mut v = head.as_tuple(arity - 1)?;
        v.push(last);
        Some(v)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self.0.kind, Kind::Atom(_))
    }

    pub fn is_set(&self) -> bool {
        !self.is_atom()
    }

    /// The atom's name, if this is an atom.
    pub fn atom_name(&self) -> Option<&str> {
        match &self.0.kind {
            Kind::Atom(n) => Some(n),
            Kind::Set(_) => None,
        }
    }

    /// Elements in canonical order; atoms have none.
    pub fn elements(&self) -> &[HfObject] {
        match &self.0.kind {
            Kind::Atom(_) => &[],
            Kind::Set(v) => v,
        }
    }

    /// Number of elements; atoms have none. Emptiness is tested with
    /// [`HfObject::is_empty_set`], which is false for atoms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.elements().len()
    }

    /// Whether this is the empty set (atoms are not).
    pub fn is_empty_set(&self) -> bool {
        self.is_set() && self.len() == 0
    }

    /// Rank: atoms have rank 0 and a set has rank one more than the largest
    /// rank of its elements, so `∅` has rank 1 and the cumulative level
    /// `U_r` consists of the pure sets of rank at most `r`.
    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn contains(&self, x: &HfObject) -> bool {
        self.elements().binary_search(x).is_ok()
    }

    /// Extensional inclusion of element lists (atoms count as empty).
    pub fn is_subset(&self, other: &HfObject) -> bool {
        let (a, b) = (self.elements(), other.elements());
        if a.len() > b.len() {
            return false;
        }
        let mut j = 0;
        for x in a {
            while j < b.len() && b[j] < *x {
                j += 1;
            }
            if j == b.len() || b[j] != *x {
                return false;
            }
            j += 1;
        }
        true
    }

    /// Union of the element lists, as a set.
    pub fn union(&self, other: &HfObject) -> HfObject {
        let (a, b) = (self.elements(), other.elements());
        let mut v = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    v.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    v.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    v.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        v.extend_from_slice(&a[i..]);
        v.extend_from_slice(&b[j..]);
        Self::from_canonical(v)
    }

    /// Intersection of the element lists, as a set.
    pub fn intersection(&self, other: &HfObject) -> HfObject {
        Self::from_canonical(self.elements().iter().filter(|x| other.contains(x)).cloned().collect())
    }

    /// Elements of `self` not in `other`, as a set.
    pub fn difference(&self, other: &HfObject) -> HfObject {
        Self::from_canonical(self.elements().iter().filter(|x| !other.contains(x)).cloned().collect())
    }

    /// `self ∪ {x}`.
    pub fn with(&self, x: HfObject) -> HfObject {
        self.union(&Self::singleton(x))
    }

    /// Union of the elements' element lists.
    pub fn big_union(&self) -> HfObject {
        Self::set(self.elements().iter().flat_map(|e| e.elements().iter().cloned()))
    }

    /// Elements satisfying a predicate, as a set.
    pub fn filter(&self, mut keep: impl FnMut(&HfObject) -> bool) -> HfObject {
        Self::from_canonical(self.elements().iter().filter(|x| keep(x)).cloned().collect())
    }

    /// Every atom occurring anywhere inside this object, sorted.
    pub fn atoms(&self) -> Vec<HfObject> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<HfObject>) {
        if self.is_atom() {
            out.push(self.clone());
        }
        for e in self.elements() {
            e.collect_atoms(out);
        }
    }

    /// Writes the object, using `<a, b>` for Kuratowski pairs when `pairs`
    /// is set.
    fn write(&self, f: &mut fmt::Formatter<'_>, pairs: bool) -> fmt::Result {
        if let Some(name) = self.atom_name() {
            return write!(f, "#{name}");
        }
        if pairs {
            if let Some((x, y)) = self.as_kpair() {
                write!(f, "<")?;
                x.write(f, pairs)?;
                write!(f, ", ")?;
                y.write(f, pairs)?;
                return write!(f, ">");
            }
        }
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            e.write(f, pairs)?;
        }
        write!(f, "}}")
    }

    /// Text form with `<a, b>` sugar for every Kuratowski pair.
    pub fn to_pair_string(&self) -> String {
        format!("{self:#}")
    }
}

impl PartialEq for HfObject {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.hash == other.0.hash && self.cmp(other) == Ordering::Equal)
    }
}

impl Eq for HfObject {}

impl Hash for HfObject {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash.hash(state);
    }
}

impl Ord for HfObject {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        match (&self.0.kind, &other.0.kind) {
            (Kind::Atom(a), Kind::Atom(b)) => a.cmp(b),
            (Kind::Atom(_), Kind::Set(_)) => Ordering::Less,
            (Kind::Set(_), Kind::Atom(_)) => Ordering::Greater,
            (Kind::Set(a), Kind::Set(b)) => a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())),
        }
    }
}

impl PartialOrd for HfObject {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Plain text form; the alternate flag (`{:#}`) prints Kuratowski pairs as
/// `<a, b>`.
impl fmt::Display for HfObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, f.alternate())
    }
}

impl fmt::Debug for HfObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

impl FromStr for HfObject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_hf(s)
    }
}

/// Parses the text format: atoms `#name`, sets `{e1, e2, ...}` and pairs
/// `<a, b>`, which expand to Kuratowski pairs. Elements may appear in any
/// order and with repetitions.
pub fn parse_hf(text: &str) -> Result<HfObject> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let v = p.object()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn object(&mut self) -> Result<HfObject> {
        self.ws();
        match self.s.get(self.pos) {
            Some(b'#') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.err("empty atom name"));
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                Ok(HfObject::atom(name))
            }
            Some(b'{') => {
                self.pos += 1;
                let mut items = Vec::new();
                if self.eat(b'}') {
                    return Ok(HfObject::empty());
                }
                loop {
                    items.push(self.object()?);
                    if self.eat(b'}') {
                        break;
                    }
                    self.expect(b',')?;
                }
                Ok(HfObject::set(items))
            }
            Some(b'<') => {
                self.pos += 1;
                let mut items = vec![self.object()?];
                while self.eat(b',') {
                    items.push(self.object()?);
                }
                self.expect(b'>')?;
                if items.len() < 2 {
                    return Err(self.err("a tuple needs at least two components"));
                }
                Ok(HfObject::tuple(&items))
            }
            Some(_) => Err(self.err("expected '#', '{' or '<'")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// A node of a raw, possibly shared description of an HF object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawNode {
    Atom(String),
    Set(Vec<usize>),
}

/// Canonicalizes the object at `root` of a node table in which sets refer
/// to their elements by index. Cyclic descriptions are rejected, since HF
/// objects are well-founded.
pub fn canonicalize(nodes: &[RawNode], root: usize) -> Result<HfObject> {
    let mut memo: Vec<Option<HfObject>> = vec![None; nodes.len()];
    let mut on_stack = vec![false; nodes.len()];
    build_raw(nodes, root, &mut memo, &mut on_stack)
}

fn build_raw(
    nodes: &[RawNode],
    i: usize,
    memo: &mut Vec<Option<HfObject>>,
    on_stack: &mut Vec<bool>,
) -> Result<HfObject> {
    let node = nodes.get(i).ok_or_else(|| Error::Precondition(format!("node {i} does not exist")))?;
    if let Some(v) = &memo[i] {
        return Ok(v.clone());
    }
    if on_stack[i] {
        return Err(Error::Precondition(format!("cyclic description through node {i}")));
    }
    on_stack[i] = true;
    let v = match node {
        RawNode::Atom(name) => HfObject::atom(name),
        RawNode::Set(children) => {
            let mut items = Vec::with_capacity(children.len());
            for &c in children {
                items.push(build_raw(nodes, c, memo, on_stack)?);
            }
            HfObject::set(items)
        }
    };
    on_stack[i] = false;
    memo[i] = Some(v.clone());
    Ok(v)
}

/// The cumulative level `U_r`: `U_0 = ∅` and `U_(r+1) = □U_r ∪ {∅}`,
/// which on hereditarily finite sets is the full power set of `U_r`.
/// Sorted canonically. `U_4` has 16 elements and `U_5` has 65536.
pub fn cumulative_level(r: usize) -> Vec<HfObject> {
    let mut level: Vec<HfObject> = Vec::new();
    for _ in 0..r {
        level = power_set(&level);
    }
    level
}

/// Every subset of `items` as a set, sorted canonically.
pub fn power_set(items: &[HfObject]) -> Vec<HfObject> {
    assert!(items.len() <= 20, "power set too large");
    let mut out: Vec<HfObject> = (0u32..1 << items.len())
        .map(|mask| HfObject::set((0..items.len()).filter(|i| mask >> i & 1 == 1).map(|i| items[i].clone())))
        .collect();
    out.sort();
    out
}
