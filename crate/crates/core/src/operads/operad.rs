use std::collections::BTreeMap;

use crate::optrees::OperadClass;
use crate::ordinals::{all_maps, all_quasibijections, NOrdinal, OrdinalMap};

use super::collection::{colours, Collection, OperadError};

/// A multiplication table for one structure map: dims[0] is the size of the
/// outer value, dims[1..] the fiber values in fiber order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTable {
    pub dims: Vec<usize>,
    pub data: Vec<usize>,
}

impl MultTable {
    pub fn index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.dims.len());
        let mut idx = 0usize;
        for (i, &x) in tuple.iter().enumerate() {
            debug_assert!(x < self.dims[i]);
            idx = idx * self.dims[i] + x;
        }
        idx
    }

    pub fn get(&self, tuple: &[usize]) -> usize {
        self.data[self.index(tuple)]
    }

    pub fn tuples(&self) -> Tuples {
        Tuples { dims: self.dims.clone(), cur: None }
    }
}

/// Iterator over all mixed-radix tuples for a dimension vector.
pub struct Tuples {
    dims: Vec<usize>,
    cur: Option<Vec<usize>>,
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        match &mut self.cur {
            None => {
                if self.dims.iter().any(|&d| d == 0) {
                    return None;
                }
                self.cur = Some(vec![0; self.dims.len()]);
                self.cur.clone()
            }
            Some(cur) => {
                let mut i = self.dims.len();
                loop {
                    if i == 0 {
                        return None;
                    }
                    i -= 1;
                    cur[i] += 1;
                    if cur[i] < self.dims[i] {
                        break;
                    }
                    cur[i] = 0;
                }
                Some(cur.clone())
            }
        }
    }
}

/// All structure-map indices of a class: ordinal maps between in-budget
/// colours, surjective for the constant-free and normal classes.
pub fn class_maps(depth: usize, max_size: usize, class: OperadClass) -> Vec<OrdinalMap> {
    let cols = colours(depth, max_size, class);
    let mut out = Vec::new();
    for s in &cols {
        for t in &cols {
            for f in all_maps(t, s) {
                let ok = match class {
                    OperadClass::General => true,
                    OperadClass::ConstantFree | OperadClass::Normal => f.is_surjective(),
                };
                if ok {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// An n-operad: a collection with a unit and one multiplication table per
/// in-budget structure map, validated against the unit and associativity
/// axioms and against the carrier's quasibijection action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NOperadAlg {
    pub carrier: Collection,
    pub unit: usize,
    mult: BTreeMap<OrdinalMap, MultTable>,
}

impl NOperadAlg {
    pub fn depth(&self) -> usize {
        self.carrier.depth
    }

    pub fn class(&self) -> OperadClass {
        self.carrier.class
    }

    pub fn max_size(&self) -> usize {
        self.carrier.max_size
    }

    pub fn value(&self, t: &NOrdinal) -> usize {
        self.carrier.value(t)
    }

    pub fn mult(&self, sigma: &OrdinalMap, outer: usize, inners: &[usize]) -> usize {
        let table = &self.mult[sigma];
        let mut tuple = Vec::with_capacity(1 + inners.len());
        tuple.push(outer);
        tuple.extend_from_slice(inners);
        table.get(&tuple)
    }

    pub fn mult_tables(&self) -> &BTreeMap<OrdinalMap, MultTable> {
        &self.mult
    }
}

/// Validates raw operad data; the error carries a replayable witness naming
/// the first failing axiom instance.
pub fn check_operad(
    carrier: Collection,
    unit: usize,
    mult: BTreeMap<OrdinalMap, MultTable>,
) -> Result<NOperadAlg, OperadError> {
    let depth = carrier.depth;
    let class = carrier.class;
    let max_size = carrier.max_size;
    let terminal = NOrdinal::terminal(depth);
    if class == OperadClass::Normal && carrier.value(&terminal) != 1 {
        return Err(OperadError::IllTyped(
            "the normal class forces a singleton at the terminal ordinal".into(),
        ));
    }
    if unit >= carrier.value(&terminal) {
        return Err(OperadError::IllTyped("unit out of range".into()));
    }
    let maps = class_maps(depth, max_size, class);
    for sigma in &maps {
        let table = mult
            .get(sigma)
            .ok_or_else(|| OperadError::IllTyped(format!("missing multiplication at {sigma:?}")))?;
        let mut dims = vec![carrier.value(sigma.target())];
        for i in 0..sigma.target().size() {
            dims.push(carrier.value(&sigma.fiber(i)));
        }
        if table.dims != dims {
            return Err(OperadError::IllTyped(format!("wrong table dimensions at {sigma:?}")));
        }
        let out = carrier.value(sigma.source());
        let expected: usize = dims.iter().product();
        if table.data.len() != expected || table.data.iter().any(|&v| v >= out) {
            return Err(OperadError::IllTyped(format!("ill-typed table at {sigma:?}")));
        }
    }
    let alg = NOperadAlg { carrier, unit, mult };
    // unit axioms
    for t in alg.carrier.colour_list() {
        let id = OrdinalMap::identity(&t);
        let units = vec![alg.unit; t.size()];
        for a in 0..alg.value(&t) {
            if alg.mult(&id, a, &units) != a {
                return Err(OperadError::AxiomFailure(format!(
                    "identity unit law fails at colour {t:?}, element {a}"
                )));
            }
        }
        let bang = OrdinalMap::to_terminal(&t);
        if alg.class() == OperadClass::General || bang.is_surjective() {
            for a in 0..alg.value(&t) {
                if alg.mult(&bang, alg.unit, &[a]) != a {
                    return Err(OperadError::AxiomFailure(format!(
                        "terminal unit law fails at colour {t:?}, element {a}"
                    )));
                }
            }
        }
    }
    // the carrier action must be the unit-padded multiplication
    for s in alg.carrier.colour_list() {
        for t in alg.carrier.colour_list() {
            for q in all_quasibijections(&t, &s) {
                let units = vec![alg.unit; s.size()];
                for b in 0..alg.value(&s) {
                    if alg.carrier.act(&q, b) != alg.mult(&q, b, &units) {
                        return Err(OperadError::AxiomFailure(format!(
                            "carrier action disagrees with multiplication at {q:?}, element {b}"
                        )));
                    }
                }
            }
        }
    }
    // associativity on every in-budget composable pair and element tuple
    let maps = class_maps(depth, max_size, class);
    for sigma in &maps {
        for omega in &maps {
            if sigma.target() != omega.source() {
                continue;
            }
            let delta = sigma.then(omega);
            let r = omega.target();
            let s = omega.source();
            // element dimensions: c, (b_j)_{j in R}, (a_i)_{i in S}
            let mut dims = vec![alg.value(r)];
            for j in 0..r.size() {
                dims.push(alg.value(&omega.fiber(j)));
            }
            for i in 0..s.size() {
                dims.push(alg.value(&sigma.fiber(i)));
            }
            let iter = MultTable { dims: dims.clone(), data: Vec::new() };
            for tuple in iter.tuples() {
                let c = tuple[0];
                let b: Vec<usize> = tuple[1..1 + r.size()].to_vec();
                let a: Vec<usize> = tuple[1 + r.size()..].to_vec();
                // route one: multiply along omega, then along sigma
                let s_elem = alg.mult(omega, c, &b);
                let r1 = alg.mult(sigma, s_elem, &a);
                // route two: restrict sigma to each omega-fiber, then delta
                let mut u = Vec::with_capacity(r.size());
                for j in 0..r.size() {
                    let sigma_j = sigma.restrict_to_fiber(omega, j);
                    let local: Vec<usize> =
                        omega.fiber_elements(j).iter().map(|&i| a[i]).collect();
                    u.push(alg.mult(&sigma_j, b[j], &local));
                }
                let r2 = alg.mult(&delta, c, &u);
                if r1 != r2 {
                    return Err(OperadError::AxiomFailure(format!(
                        "associativity fails: sigma={sigma:?} omega={omega:?} tuple={tuple:?} \
                         routes {r1} vs {r2}"
                    )));
                }
            }
        }
    }
    Ok(alg)
}

/// The terminal operad: every value a singleton.
pub fn terminal_operad(depth: usize, max_size: usize, class: OperadClass) -> NOperadAlg {
    let carrier = Collection::constant(depth, max_size, class, 1);
    let mut mult = BTreeMap::new();
    for sigma in class_maps(depth, max_size, class) {
        let mut dims = vec![1usize];
        dims.extend((0..sigma.target().size()).map(|_| 1));
        let len: usize = dims.iter().product();
        mult.insert(sigma, MultTable { dims, data: vec![0; len] });
    }
    check_operad(carrier, 0, mult).expect("the terminal operad is valid")
}

/// The mod-m sum operad: every value Z/m, multiplication adds all inputs.
pub fn sum_operad(
    depth: usize,
    max_size: usize,
    class: OperadClass,
    modulus: usize,
) -> NOperadAlg {
    assert!(modulus >= 1);
    let terminal = NOrdinal::terminal(depth);
    let cols = colours(depth, max_size, class);
    let values: BTreeMap<NOrdinal, usize> = cols
        .iter()
        .map(|t| {
            let n = if class == OperadClass::Normal && *t == terminal { 1 } else { modulus };
            (t.clone(), n)
        })
        .collect();
    // for the normal class the terminal value collapses to the singleton,
    // which stays a valid quotient of the sum structure
    let size_at = |t: &NOrdinal| values[t];
    let mut action = BTreeMap::new();
    for s in &cols {
        for t in &cols {
            for q in all_quasibijections(t, s) {
                let f = (0..size_at(s)).map(|x| x % size_at(t)).collect();
                action.insert(q, f);
            }
        }
    }
    let carrier =
        Collection::check(depth, max_size, class, values.clone(), action).expect("sum carrier");
    let mut mult = BTreeMap::new();
    for sigma in class_maps(depth, max_size, class) {
        let mut dims = vec![size_at(sigma.target())];
        for i in 0..sigma.target().size() {
            dims.push(size_at(&sigma.fiber(i)));
        }
        let iter = MultTable { dims: dims.clone(), data: Vec::new() };
        let mut data = Vec::new();
        for tuple in iter.tuples() {
            data.push(tuple.iter().sum::<usize>() % size_at(sigma.source()));
        }
        mult.insert(sigma, MultTable { dims, data });
    }
    check_operad(carrier, 0, mult).expect("the sum operad is valid")
}

/// Restriction of an operad along a suspension: the value at T is the value
/// at the suspended ordinal, with all structure restricted accordingly.
pub fn suspend_restrict(alg: &NOperadAlg, p: usize) -> Result<NOperadAlg, OperadError> {
    let depth_above = alg.depth();
    if depth_above < 2 || p > depth_above - 1 {
        return Err(OperadError::IllTyped(format!(
            "suspension index {p} out of range for depth {depth_above}"
        )));
    }
    let depth = depth_above - 1;
    let max_size = alg.max_size();
    let class = alg.class();
    let cols = colours(depth, max_size, class);
    let values: BTreeMap<NOrdinal, usize> =
        cols.iter().map(|t| (t.clone(), alg.value(&t.suspend(p)))).collect();
    let mut action = BTreeMap::new();
    for s in &cols {
        for t in &cols {
            for q in all_quasibijections(t, s) {
                let sq = q.suspend(p);
                let f = (0..alg.value(&sq.target()))
                    .map(|x| alg.carrier.act(&sq, x))
                    .collect();
                action.insert(q, f);
            }
        }
    }
    let carrier = Collection::check(depth, max_size, class, values, action)?;
    let mut mult = BTreeMap::new();
    for sigma in class_maps(depth, max_size, class) {
        let table = alg.mult_tables()[&sigma.suspend(p)].clone();
        mult.insert(sigma, table);
    }
    check_operad(carrier, alg.unit, mult)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_operad_is_valid_in_every_class() {
        for class in [OperadClass::General, OperadClass::ConstantFree, OperadClass::Normal] {
            let a = terminal_operad(2, 3, class);
            assert_eq!(a.value(&NOrdinal::terminal(2)), 1);
        }
    }

    #[test]
    fn sum_operad_is_valid_and_perturbation_fails() {
        let a = sum_operad(2, 3, OperadClass::General, 2);
        // redirect one multiplication entry and revalidate
        let mut mult = a.mult_tables().clone();
        let key = mult
            .iter()
            .find(|(k, t)| k.source().size() >= 2 && t.data.iter().any(|&v| v == 1))
            .map(|(k, _)| k.clone())
            .expect("a perturbable table");
        let table = mult.get_mut(&key).unwrap();
        let pos = table.data.iter().position(|&v| v == 1).unwrap();
        table.data[pos] = 0;
        let err = check_operad(a.carrier.clone(), a.unit, mult).unwrap_err();
        assert!(matches!(err, OperadError::AxiomFailure(_)), "{err:?}");
    }

    #[test]
    fn suspension_restriction_of_terminal_is_terminal() {
        let a3 = terminal_operad(3, 3, OperadClass::Normal);
        for p in 0..=2 {
            let a2 = suspend_restrict(&a3, p).unwrap();
            assert_eq!(a2, terminal_operad(2, 3, OperadClass::Normal));
        }
    }

    #[test]
    fn suspension_restriction_of_the_sum_operad_is_valid() {
        let a3 = sum_operad(3, 3, OperadClass::General, 3);
        for p in 0..=2 {
            let a2 = suspend_restrict(&a3, p).unwrap();
            for t in a2.carrier.colour_list() {
                assert_eq!(a2.value(&t), a3.value(&t.suspend(p)));
            }
        }
    }
}
