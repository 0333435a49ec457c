use std::collections::BTreeMap;

use thiserror::Error;

/// Errors raised while validating or constructing a finite category.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FincatError {
    #[error("composition is not associative on the triple (h={h}, g={g}, f={f})")]
    NonAssociative { h: usize, g: usize, f: usize },
    #[error("identity axiom fails for object {object} against morphism {morphism}")]
    BadIdentity { object: usize, morphism: usize },
    #[error("dangling index: {what} {index} out of range")]
    DanglingIndex { what: &'static str, index: usize },
    #[error("composition table disagrees with sources/targets at (g={g}, f={f})")]
    BadComposite { g: usize, f: usize },
    #[error("size budget exceeded: {0}")]
    SizeBudgetExceeded(String),
    #[error("category is not a poset: parallel morphisms {first} and {second}")]
    NotAPoset { first: usize, second: usize },
    #[error("object map and morphism map are not functorial: {0}")]
    NotAFunctor(String),
    #[error("presheaf action violates {0}")]
    BadPresheaf(String),
    #[error("bimodule actions do not commute: {0}")]
    BadBimodule(String),
}

/// Raw data for one morphism: source, target and a display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismData {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

/// A finite category stored as dense index tables.
///
/// Objects and morphisms are indices; `compose` is defined exactly on the
/// composable pairs and every axiom is checked exhaustively on construction
/// via [`FinCategory::check`].
#[derive(Debug, Clone)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identity: Vec<usize>,
    is_identity: Vec<bool>,
    /// Sorted table of ((g, f), g_after_f) for composable pairs tgt(f) = src(g).
    compose: Vec<((u32, u32), u32)>,
    /// Outgoing/incoming morphism indices per object, for iteration.
    out_of: Vec<Vec<usize>>,
    into_of: Vec<Vec<usize>>,
}

impl FinCategory {
    /// Validates raw tables and returns the category, or the first violated axiom.
    pub fn check(
        objects: Vec<String>,
        morphisms: Vec<MorphismData>,
        identity: Vec<usize>,
        compose: BTreeMap<(usize, usize), usize>,
        max_morphisms: usize,
    ) -> Result<FinCategory, FincatError> {
        if morphisms.len() > max_morphisms {
            return Err(FincatError::SizeBudgetExceeded(format!(
                "{} morphisms exceed the cap of {max_morphisms}",
                morphisms.len()
            )));
        }
        let n_obj = objects.len();
        let n_mor = morphisms.len();
        for (i, m) in morphisms.iter().enumerate() {
            if m.src >= n_obj {
                return Err(FincatError::DanglingIndex { what: "source of morphism", index: i });
            }
            if m.tgt >= n_obj {
                return Err(FincatError::DanglingIndex { what: "target of morphism", index: i });
            }
        }
        if identity.len() != n_obj {
            return Err(FincatError::DanglingIndex { what: "identity table length", index: identity.len() });
        }
        for (o, &e) in identity.iter().enumerate() {
            if e >= n_mor {
                return Err(FincatError::DanglingIndex { what: "identity morphism", index: e });
            }
            if morphisms[e].src != o || morphisms[e].tgt != o {
                return Err(FincatError::BadIdentity { object: o, morphism: e });
            }
        }
        // compose must be defined exactly on composable pairs
        for (&(g, f), &c) in &compose {
            if g >= n_mor || f >= n_mor || c >= n_mor {
                return Err(FincatError::DanglingIndex { what: "compose entry", index: c });
            }
            if morphisms[f].tgt != morphisms[g].src {
                return Err(FincatError::BadComposite { g, f });
            }
            if morphisms[c].src != morphisms[f].src || morphisms[c].tgt != morphisms[g].tgt {
                return Err(FincatError::BadComposite { g, f });
            }
        }
        let mut out_of = vec![Vec::new(); n_obj];
        let mut into_of = vec![Vec::new(); n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            out_of[m.src].push(i);
            into_of[m.tgt].push(i);
        }
        for f in 0..n_mor {
            for &g in &out_of[morphisms[f].tgt] {
                if !compose.contains_key(&(g, f)) {
                    return Err(FincatError::BadComposite { g, f });
                }
            }
        }
        // identities are two-sided units
        for f in 0..n_mor {
            let e_src = identity[morphisms[f].src];
            let e_tgt = identity[morphisms[f].tgt];
            if compose[&(f, e_src)] != f {
                return Err(FincatError::BadIdentity { object: morphisms[f].src, morphism: f });
            }
            if compose[&(e_tgt, f)] != f {
                return Err(FincatError::BadIdentity { object: morphisms[f].tgt, morphism: f });
            }
        }
        // associativity on all composable triples
        for f in 0..n_mor {
            for &g in &out_of[morphisms[f].tgt] {
                let gf = compose[&(g, f)];
                for &h in &out_of[morphisms[g].tgt] {
                    let hg = compose[&(h, g)];
                    if compose[&(h, gf)] != compose[&(hg, f)] {
                        return Err(FincatError::NonAssociative { h, g, f });
                    }
                }
            }
        }
        let mut is_identity = vec![false; n_mor];
        for &e in &identity {
            is_identity[e] = true;
        }
        let compose = compose
            .into_iter()
            .map(|((g, f), c)| ((g as u32, f as u32), c as u32))
            .collect();
        Ok(FinCategory { objects, morphisms, identity, is_identity, compose, out_of, into_of })
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_label(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, m: usize) -> &MorphismData {
        &self.morphisms[m]
    }

    pub fn src(&self, m: usize) -> usize {
        self.morphisms[m].src
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.morphisms[m].tgt
    }

    pub fn identity_of(&self, o: usize) -> usize {
        self.identity[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.is_identity[m]
    }

    /// g ∘ f for tgt(f) = src(g).
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose
            .binary_search_by_key(&(g as u32, f as u32), |&(k, _)| k)
            .ok()
            .map(|i| self.compose[i].1 as usize)
    }

    pub fn morphisms_from(&self, o: usize) -> &[usize] {
        &self.out_of[o]
    }

    pub fn morphisms_into(&self, o: usize) -> &[usize] {
        &self.into_of[o]
    }

    /// All morphisms a → b.
    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        self.out_of[a].iter().copied().filter(|&m| self.morphisms[m].tgt == b).collect()
    }

    /// The opposite category; morphism indices are preserved.
    pub fn opposite(&self) -> FinCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| MorphismData { src: m.tgt, tgt: m.src, label: m.label.clone() })
            .collect::<Vec<_>>();
        let compose = self.compose.iter().map(|&((g, f), c)| ((f, g), c)).collect();
        let mut out_of = vec![Vec::new(); self.objects.len()];
        let mut into_of = vec![Vec::new(); self.objects.len()];
        for (i, m) in morphisms.iter().enumerate() {
            out_of[m.src].push(i);
            into_of[m.tgt].push(i);
        }
        FinCategory {
            objects: self.objects.clone(),
            morphisms,
            identity: self.identity.clone(),
            is_identity: self.is_identity.clone(),
            compose,
            out_of,
            into_of,
        }
    }

    /// Connected components of the underlying undirected zig-zag graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = crate::fincat::UnionFind::new(self.objects.len());
        for m in &self.morphisms {
            uf.union(m.src, m.tgt);
        }
        uf.groups()
    }

    /// True if the zig-zag graph on objects is connected (and nonempty).
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The terminal category: one object, one identity.
    pub fn terminal() -> FinCategory {
        let mut b = CatBuilder::new();
        b.add_object("*");
        b.build_with(|_, _| unreachable!()).expect("terminal category")
    }

    /// The empty category.
    pub fn empty() -> FinCategory {
        FinCategory {
            objects: Vec::new(),
            morphisms: Vec::new(),
            identity: Vec::new(),
            is_identity: Vec::new(),
            compose: Vec::new(),
            out_of: Vec::new(),
            into_of: Vec::new(),
        }
    }

    /// The discrete category on n objects.
    pub fn discrete(n: usize) -> FinCategory {
        let mut b = CatBuilder::new();
        for i in 0..n {
            b.add_object(format!("{i}"));
        }
        b.build_with(|_, _| unreachable!()).expect("discrete category")
    }

    /// The arrow category 0 → 1.
    pub fn arrow() -> FinCategory {
        let mut b = CatBuilder::new();
        let a = b.add_object("0");
        let c = b.add_object("1");
        b.add_morphism(a, c, "f");
        b.build_with(|_, _| unreachable!()).expect("arrow category")
    }

    /// The free category on a directed graph given by edges (src, tgt).
    ///
    /// Finite only when the graph is acyclic; an error reports a cycle.
    pub fn free_on_graph(
        n_objects: usize,
        edges: &[(usize, usize)],
        max_morphisms: usize,
    ) -> Result<FinCategory, FincatError> {
        // morphisms = paths; enumerate by breadth-first extension
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
        struct Path {
            src: usize,
            tgt: usize,
            edges: Vec<usize>,
        }
        let mut paths: Vec<Path> = (0..n_objects)
            .map(|o| Path { src: o, tgt: o, edges: vec![] })
            .collect();
        let mut frontier: Vec<Path> = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (ei, &(s, t)) in edges.iter().enumerate() {
                    if s == p.tgt {
                        let mut e2 = p.edges.clone();
                        e2.push(ei);
                        if e2.len() > n_objects.max(1) * edges.len().max(1) {
                            return Err(FincatError::SizeBudgetExceeded(
                                "graph appears cyclic: path length exceeds bound".into(),
                            ));
                        }
                        next.push(Path { src: p.src, tgt: t, edges: e2 });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            if paths.len() > max_morphisms {
                return Err(FincatError::SizeBudgetExceeded(format!(
                    "free category exceeds {max_morphisms} morphisms"
                )));
            }
            frontier = next;
        }
        paths.sort();
        let mut b = CatBuilder::new();
        for i in 0..n_objects {
            b.add_object(format!("{i}"));
        }
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for p in &paths {
            if p.edges.is_empty() {
                index.insert(p.edges.clone(), b.identity_index(p.src));
            } else {
                let label = p.edges.iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join(".");
                index.insert(p.edges.clone(), b.add_morphism(p.src, p.tgt, label));
            }
        }
        let by_index: BTreeMap<usize, Vec<usize>> =
            index.iter().map(|(k, &v)| (v, k.clone())).collect();
        b.build_with(|g, f| {
            let mut e = by_index[&f].clone();
            e.extend(by_index[&g].iter().copied());
            index[&e]
        })
    }
}

/// Incremental builder: add objects and non-identity morphisms, then close
/// composition with a callback computing g ∘ f on the declared indices.
pub struct CatBuilder {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identity: Vec<usize>,
    max_morphisms: usize,
}

impl CatBuilder {
    pub fn new() -> CatBuilder {
        CatBuilder {
            objects: Vec::new(),
            morphisms: Vec::new(),
            identity: Vec::new(),
            max_morphisms: crate::budget::Budget::default().max_morphisms,
        }
    }

    pub fn with_cap(max_morphisms: usize) -> CatBuilder {
        CatBuilder { max_morphisms, ..CatBuilder::new() }
    }

    /// Adds an object together with its identity morphism; returns the object index.
    pub fn add_object(&mut self, label: impl Into<String>) -> usize {
        let o = self.objects.len();
        let label = label.into();
        self.objects.push(label.clone());
        let m = self.morphisms.len();
        self.morphisms.push(MorphismData { src: o, tgt: o, label: format!("id:{label}") });
        self.identity.push(m);
        o
    }

    /// Adds a non-identity morphism; returns its index.
    pub fn add_morphism(&mut self, src: usize, tgt: usize, label: impl Into<String>) -> usize {
        let m = self.morphisms.len();
        self.morphisms.push(MorphismData { src, tgt, label: label.into() });
        m
    }

    pub fn identity_index(&self, o: usize) -> usize {
        self.identity[o]
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    /// Closes the composition table. `compose(g, f)` is called only on
    /// composable pairs where neither side is an identity.
    pub fn build_with(
        self,
        mut compose_fn: impl FnMut(usize, usize) -> usize,
    ) -> Result<FinCategory, FincatError> {
        let mut table = BTreeMap::new();
        let n = self.morphisms.len();
        let ids: Vec<bool> = {
            let mut v = vec![false; n];
            for &e in &self.identity {
                v[e] = true;
            }
            v
        };
        for g in 0..n {
            for f in 0..n {
                if self.morphisms[f].tgt != self.morphisms[g].src {
                    continue;
                }
                let c = if ids[f] {
                    g
                } else if ids[g] {
                    f
                } else {
                    compose_fn(g, f)
                };
                table.insert((g, f), c);
            }
        }
        FinCategory::check(self.objects, self.morphisms, self.identity, table, self.max_morphisms)
    }
}

impl Default for CatBuilder {
    fn default() -> Self {
        CatBuilder::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category_is_valid() {
        let c = FinCategory::terminal();
        assert_eq!(c.object_count(), 1);
        assert_eq!(c.morphism_count(), 1);
    }

    #[test]
    fn arrow_category_is_valid() {
        let c = FinCategory::arrow();
        assert_eq!(c.object_count(), 2);
        assert_eq!(c.morphism_count(), 3);
        assert_eq!(c.hom(0, 1).len(), 1);
    }

    #[test]
    fn perturbed_monoid_table_reports_nonassociativity() {
        // Z/3 as a one-object category, with one composite redirected.
        let objects = vec!["*".to_string()];
        let labels = ["e", "a", "b"];
        let morphisms = (0..3)
            .map(|i| MorphismData { src: 0, tgt: 0, label: labels[i].into() })
            .collect::<Vec<_>>();
        let mut compose = BTreeMap::new();
        for g in 0..3usize {
            for f in 0..3usize {
                compose.insert((g, f), (g + f) % 3);
            }
        }
        compose.insert((1, 1), 0); // a∘a should be b
        let err = FinCategory::check(objects, morphisms, vec![0], compose, 100).unwrap_err();
        match err {
            FincatError::NonAssociative { .. } => {}
            other => panic!("expected NonAssociative, got {other:?}"),
        }
    }

    #[test]
    fn free_category_on_a_dag() {
        // 0 -> 1 -> 2 plus a direct edge 0 -> 2: five non-identity paths
        let c = FinCategory::free_on_graph(3, &[(0, 1), (1, 2), (0, 2)], 1000).unwrap();
        assert_eq!(c.morphism_count(), 3 + 4);
        assert_eq!(c.hom(0, 2).len(), 2);
    }

    #[test]
    fn empty_category_is_legal() {
        let c = FinCategory::empty();
        assert_eq!(c.object_count(), 0);
        assert!(c.components().is_empty());
    }
}
