//! Three-valued Łukasiewicz algebras: a common interface, a table-driven
//! finite implementation, and exhaustive law checkers.
//!
//! An algebra here is a De Morgan algebra `(meet, join, neg, one)` with a
//! possibility operator `nabla` satisfying
//!
//! ```text
//! ~x v Nx = 1        x ^ ~x = ~x ^ Nx        N(x ^ y) = Nx ^ Ny
//! ```
//!
//! Necessity is always derived as `delta = ~N~` and never stored.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::Partition;
use crate::report::{Check, Counterexample, Report, Witness};
use crate::rough::{enumerate_b_star, RoughSet};

/// Operations of a finite three-valued Łukasiewicz algebra.
///
/// The checkers in this module quantify over [`elements`](Self::elements),
/// so implementations must list every element exactly once.
pub trait ThreeValuedAlgebra {
    type Elem: Clone + PartialEq;

    fn elements(&self) -> &[Self::Elem];
    fn meet(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn nabla(&self, x: &Self::Elem) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Printable form of an element for counterexamples.
    fn witness(&self, x: &Self::Elem) -> Witness;

    fn zero(&self) -> Self::Elem {
        self.neg(&self.one())
    }

    fn delta(&self, x: &Self::Elem) -> Self::Elem {
        self.neg(&self.nabla(&self.neg(x)))
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.meet(x, y) == *x
    }

    /// Heyting implication `~Nx v y v (N~x ^ Ny)`.
    fn implies(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let a = self.neg(&self.nabla(x));
        let b = self.meet(&self.nabla(&self.neg(x)), &self.nabla(y));
        self.join(&self.join(&a, y), &b)
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        self.elements().contains(x)
    }
}

fn cx<A: ThreeValuedAlgebra + ?Sized>(a: &A, bindings: &[(&str, &A::Elem)]) -> Counterexample {
    bindings
        .iter()
        .fold(Counterexample::default(), |c, (n, e)| c.with(n, a.witness(e)))
}

/// Every law of a three-valued Łukasiewicz algebra, each as its own check.
///
/// Lattice laws (including bounds with `0 = ~1`), both distributive laws,
/// the De Morgan involution, and the three possibility-operator conditions.
/// A `closure` check confirms every operation lands back in the element list.
pub fn check_axioms<A: ThreeValuedAlgebra + ?Sized>(a: &A) -> Report {
    let els = a.elements();
    let one = a.one();
    let zero = a.zero();

    let mut closure = Check::new("closure");
    closure.record(a.contains(&one), Counterexample::default);
    for x in els {
        closure.record(a.contains(&a.neg(x)) && a.contains(&a.nabla(x)), || cx(a, &[("x", x)]));
        for y in els {
            closure.record(a.contains(&a.meet(x, y)) && a.contains(&a.join(x, y)), || {
                cx(a, &[("x", x), ("y", y)])
            });
        }
    }

    let mut idempotent = Check::new("idempotence");
    let mut bounds = Check::new("bounds");
    let mut double_neg = Check::new("double_negation");
    let mut nabla_em = Check::new("nabla_excluded_middle");
    let mut nabla_kleene = Check::new("nabla_meet_negation");
    for x in els {
        let c = || cx(a, &[("x", x)]);
        idempotent.record(a.meet(x, x) == *x && a.join(x, x) == *x, c);
        bounds.record(
            a.meet(x, &one) == *x && a.join(x, &zero) == *x && a.meet(x, &zero) == zero && a.join(x, &one) == one,
            c,
        );
        double_neg.record(a.neg(&a.neg(x)) == *x, c);
        let nx = a.neg(x);
        let nabx = a.nabla(x);
        nabla_em.record(a.join(&nx, &nabx) == one, c);
        nabla_kleene.record(a.meet(x, &nx) == a.meet(&nx, &nabx), c);
    }

    let mut meet_comm = Check::new("meet_commutative");
    let mut join_comm = Check::new("join_commutative");
    let mut absorption = Check::new("absorption");
    let mut de_morgan = Check::new("de_morgan");
    let mut nabla_mult = Check::new("nabla_multiplicative");
    for x in els {
        for y in els {
            let c = || cx(a, &[("x", x), ("y", y)]);
            meet_comm.record(a.meet(x, y) == a.meet(y, x), c);
            join_comm.record(a.join(x, y) == a.join(y, x), c);
            absorption.record(a.meet(x, &a.join(x, y)) == *x && a.join(x, &a.meet(x, y)) == *x, c);
            de_morgan.record(a.neg(&a.meet(x, y)) == a.join(&a.neg(x), &a.neg(y)), c);
            nabla_mult.record(a.nabla(&a.meet(x, y)) == a.meet(&a.nabla(x), &a.nabla(y)), c);
        }
    }

    let mut meet_assoc = Check::new("meet_associative");
    let mut join_assoc = Check::new("join_associative");
    let mut distributive = Check::new("distributivity");
    for x in els {
        for y in els {
            let xy_meet = a.meet(x, y);
            let xy_join = a.join(x, y);
            for z in els {
                let c = || cx(a, &[("x", x), ("y", y), ("z", z)]);
                meet_assoc.record(a.meet(&xy_meet, z) == a.meet(x, &a.meet(y, z)), c);
                join_assoc.record(a.join(&xy_join, z) == a.join(x, &a.join(y, z)), c);
                distributive.record(
                    a.meet(x, &a.join(y, z)) == a.join(&xy_meet, &a.meet(x, z))
                        && a.join(x, &a.meet(y, z)) == a.meet(&xy_join, &a.join(x, z)),
                    c,
                );
            }
        }
    }

    [
        closure,
        meet_comm,
        join_comm,
        meet_assoc,
        join_assoc,
        absorption,
        idempotent,
        bounds,
        distributive,
        double_neg,
        de_morgan,
        nabla_em,
        nabla_kleene,
        nabla_mult,
    ]
    .into_iter()
    .collect()
}

/// Elements fixed by the possibility operator.
pub fn invariant_elements<A: ThreeValuedAlgebra + ?Sized>(a: &A) -> Vec<A::Elem> {
    a.elements().iter().filter(|x| a.nabla(x) == **x).cloned().collect()
}

/// Elements with a lattice complement.
pub fn complemented_elements<A: ThreeValuedAlgebra + ?Sized>(a: &A) -> Vec<A::Elem> {
    let (zero, one) = (a.zero(), a.one());
    a.elements()
        .iter()
        .filter(|x| a.elements().iter().any(|y| a.meet(x, y) == zero && a.join(x, y) == one))
        .cloned()
        .collect()
}

/// Closure-operator properties of `nabla` and the identification of its
/// fixed points with the complemented elements.
pub fn derived_operator_checks<A: ThreeValuedAlgebra + ?Sized>(a: &A) -> Report {
    let els = a.elements();
    let mut extensive = Check::new("nabla_extensive");
    let mut idempotent = Check::new("nabla_idempotent");
    for x in els {
        let c = || cx(a, &[("x", x)]);
        extensive.record(a.leq(x, &a.nabla(x)), c);
        idempotent.record(a.nabla(&a.nabla(x)) == a.nabla(x), c);
    }
    let mut additive = Check::new("nabla_additive");
    for x in els {
        for y in els {
            additive.record(a.nabla(&a.join(x, y)) == a.join(&a.nabla(x), &a.nabla(y)), || {
                cx(a, &[("x", x), ("y", y)])
            });
        }
    }
    let invariant = invariant_elements(a);
    let complemented = complemented_elements(a);
    let mut boolean = Check::new("invariant_are_complemented");
    for x in els {
        boolean.record(invariant.contains(x) == complemented.contains(x), || cx(a, &[("x", x)]));
    }
    [extensive, idempotent, additive, boolean].into_iter().collect()
}

/// `Nx = Ny` and `Dx = Dy` imply `x = y`.
pub fn check_determination<A: ThreeValuedAlgebra + ?Sized>(a: &A) -> Check {
    let els = a.elements();
    let keys: Vec<_> = els.iter().map(|x| (a.nabla(x), a.delta(x))).collect();
    let mut check = Check::new("determination");
    for (i, x) in els.iter().enumerate() {
        for (j, y) in els.iter().enumerate() {
            check.record(keys[i] != keys[j] || x == y, || cx(a, &[("x", x), ("y", y)]));
        }
    }
    check
}

/// `x ^ ~x <= y v ~y`.
pub fn check_kleene<A: ThreeValuedAlgebra + ?Sized>(a: &A) -> Check {
    let els = a.elements();
    let mut check = Check::new("kleene");
    for x in els {
        let low = a.meet(x, &a.neg(x));
        for y in els {
            check.record(a.leq(&low, &a.join(y, &a.neg(y))), || cx(a, &[("x", x), ("y", y)]));
        }
    }
    check
}

/// `x ^ z <= y` iff `z <= (x => y)`.
pub fn check_residuation<A: ThreeValuedAlgebra + ?Sized>(a: &A) -> Check {
    let els = a.elements();
    let mut check = Check::new("residuation");
    for x in els {
        for y in els {
            let imp = a.implies(x, y);
            for z in els {
                check.record(a.leq(&a.meet(x, z), y) == a.leq(z, &imp), || {
                    cx(a, &[("x", x), ("y", y), ("z", z)])
                });
            }
        }
    }
    check
}

/// The element fixed by negation, if the algebra has one.
pub fn find_center<A: ThreeValuedAlgebra + ?Sized>(a: &A) -> Option<A::Elem> {
    a.elements().iter().find(|x| a.neg(x) == **x).cloned()
}

/// `~c = c` and `x = (Dx v c) ^ Nx` for every `x`.
pub fn check_center_law<A: ThreeValuedAlgebra + ?Sized>(a: &A, c: &A::Elem) -> Check {
    let mut check = Check::new("center_law");
    check.record(a.neg(c) == *c, || cx(a, &[("c", c)]));
    for x in a.elements() {
        let rebuilt = a.meet(&a.join(&a.delta(x), c), &a.nabla(x));
        check.record(rebuilt == *x, || cx(a, &[("x", x), ("c", c)]));
    }
    check
}

/// A finite algebra given by operation tables over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    neg: Vec<usize>,
    nabla: Vec<usize>,
    one: usize,
    indices: Vec<usize>,
}

impl FiniteAlgebra {
    /// Validates that every table is total and closed over the element indices.
    pub fn new(
        names: Vec<String>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
        neg: Vec<usize>,
        nabla: Vec<usize>,
        one: usize,
    ) -> Result<Self, Error> {
        let n = names.len();
        let bad = |m: String| Err(Error::MalformedAlgebra(m));
        if n == 0 {
            return bad("no elements".into());
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return bad(format!("duplicate element {name}"));
            }
        }
        for (label, table) in [("meet", &meet), ("join", &join)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return bad(format!("{label} table is not {n}x{n}"));
            }
            if table.iter().flatten().any(|&v| v >= n) {
                return bad(format!("{label} table entry out of range"));
            }
        }
        for (label, table) in [("neg", &neg), ("nabla", &nabla)] {
            if table.len() != n {
                return bad(format!("{label} table has {} entries, expected {n}", table.len()));
            }
            if table.iter().any(|&v| v >= n) {
                return bad(format!("{label} table entry out of range"));
            }
        }
        if one >= n {
            return bad("one out of range".into());
        }
        Ok(FiniteAlgebra {
            names,
            meet,
            join,
            neg,
            nabla,
            one,
            indices: (0..n).collect(),
        })
    }

    /// Builds the tables by evaluating operations on element indices.
    pub fn from_fns(
        names: Vec<String>,
        meet: impl Fn(usize, usize) -> usize,
        join: impl Fn(usize, usize) -> usize,
        neg: impl Fn(usize) -> usize,
        nabla: impl Fn(usize) -> usize,
        one: usize,
    ) -> Result<Self, Error> {
        let n = names.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
        };
        let meet_t = table(&meet);
        let join_t = table(&join);
        Self::new(
            names,
            meet_t,
            join_t,
            (0..n).map(neg).collect(),
            (0..n).map(nabla).collect(),
            one,
        )
    }

    /// Chain of `k` elements with the order-reversing negation; `k` is 2 or 3.
    fn chain(names: &[&str], nabla: &[usize]) -> Self {
        let k = names.len();
        Self::from_fns(
            names.iter().map(|s| s.to_string()).collect(),
            |i, j| i.min(j),
            |i, j| i.max(j),
            |i| k - 1 - i,
            |i| nabla[i],
            k - 1,
        )
        .expect("chain tables are well formed")
    }

    /// The Boolean algebra `{0, 1}` with `nabla` the identity.
    pub fn two_chain() -> Self {
        Self::chain(&["0", "1"], &[0, 1])
    }

    /// The chain `0 < c < 1` with `~c = c`, `N0 = 0`, `Nc = N1 = 1`.
    pub fn three_chain() -> Self {
        Self::chain(&["0", "c", "1"], &[0, 2, 2])
    }

    /// Componentwise product; element `(i, j)` has index `i * b.len() + j`.
    pub fn product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Self {
        let m = b.len();
        let names = a
            .names
            .iter()
            .flat_map(|x| b.names.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let split = |i: usize| (i / m, i % m);
        Self::from_fns(
            names,
            |i, j| {
                let ((a1, b1), (a2, b2)) = (split(i), split(j));
                a.meet[a1][a2] * m + b.meet[b1][b2]
            },
            |i, j| {
                let ((a1, b1), (a2, b2)) = (split(i), split(j));
                a.join[a1][a2] * m + b.join[b1][b2]
            },
            |i| a.neg[i / m] * m + b.neg[i % m],
            |i| a.nabla[i / m] * m + b.nabla[i % m],
            a.one * m + b.one,
        )
        .expect("product of well-formed tables is well formed")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, Error> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn meet_table(&self) -> &[Vec<usize>] {
        &self.meet
    }

    pub fn join_table(&self) -> &[Vec<usize>] {
        &self.join
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    pub fn nabla_table(&self) -> &[usize] {
        &self.nabla
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    pub fn zero_index(&self) -> usize {
        self.neg[self.one]
    }

    /// Same tables with a replaced possibility operator; used to build
    /// deliberately broken fixtures.
    pub fn with_nabla(&self, nabla: Vec<usize>) -> Result<Self, Error> {
        Self::new(
            self.names.clone(),
            self.meet.clone(),
            self.join.clone(),
            self.neg.clone(),
            nabla,
            self.one,
        )
    }

    /// Searches for an isomorphism `self -> other` by backtracking; returns the
    /// image index of each element.
    pub fn isomorphism_to(&self, other: &FiniteAlgebra) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let mut map = alloc::vec![usize::MAX; self.len()];
        let mut used = alloc::vec![false; self.len()];
        if self.extend_iso(other, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_iso(&self, other: &Self, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == self.len() {
            return check_embedding(self, other, map).passed();
        }
        for cand in 0..other.len() {
            if used[cand] {
                continue;
            }
            map[i] = cand;
            if self.consistent(other, i, map) {
                used[cand] = true;
                if self.extend_iso(other, i + 1, map, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        map[i] = usize::MAX;
        false
    }

    // Checks every constraint among the already-assigned prefix `0..=i`.
    fn consistent(&self, other: &Self, i: usize, map: &[usize]) -> bool {
        let image = |x: usize| (map[x] != usize::MAX).then_some(map[x]);
        let agrees = |x: usize, y: usize| image(x).is_none_or(|ix| ix == y);
        if i == self.one && map[i] != other.one {
            return false;
        }
        for x in 0..=i {
            if !agrees(self.neg[x], other.neg[map[x]]) || !agrees(self.nabla[x], other.nabla[map[x]]) {
                return false;
            }
            for y in 0..=i {
                if !agrees(self.meet[x][y], other.meet[map[x]][map[y]])
                    || !agrees(self.join[x][y], other.join[map[x]][map[y]])
                {
                    return false;
                }
            }
        }
        true
    }
}

impl ThreeValuedAlgebra for FiniteAlgebra {
    type Elem = usize;

    fn elements(&self) -> &[usize] {
        &self.indices
    }

    fn meet(&self, x: &usize, y: &usize) -> usize {
        self.meet[*x][*y]
    }

    fn join(&self, x: &usize, y: &usize) -> usize {
        self.join[*x][*y]
    }

    fn neg(&self, x: &usize) -> usize {
        self.neg[*x]
    }

    fn nabla(&self, x: &usize) -> usize {
        self.nabla[*x]
    }

    fn one(&self) -> usize {
        self.one
    }

    fn witness(&self, x: &usize) -> Witness {
        Witness::Element(self.names[*x].clone())
    }

    fn contains(&self, x: &usize) -> bool {
        *x < self.len()
    }
}

/// Checks that `map` is an injective map `src -> dst` preserving meet, join,
/// negation, possibility and one.
pub fn check_embedding(src: &FiniteAlgebra, dst: &FiniteAlgebra, map: &[usize]) -> Report {
    let w = |x: usize| Witness::Element(src.names[x].clone());
    let c1 = |x| Counterexample::default().with("x", w(x));
    let c2 = |x, y| c1(x).with("y", w(y));
    let mut total = Check::new("map_total");
    total.record(
        map.len() == src.len() && map.iter().all(|&m| m < dst.len()),
        Counterexample::default,
    );
    if !total.passed() {
        return [total].into_iter().collect();
    }
    let mut injective = Check::new("injective");
    let mut meet = Check::new("preserves_meet");
    let mut join = Check::new("preserves_join");
    let mut neg = Check::new("preserves_neg");
    let mut nabla = Check::new("preserves_nabla");
    let mut one = Check::new("preserves_one");
    one.record(map[src.one] == dst.one, Counterexample::default);
    for x in 0..src.len() {
        neg.record(map[src.neg[x]] == dst.neg[map[x]], || c1(x));
        nabla.record(map[src.nabla[x]] == dst.nabla[map[x]], || c1(x));
        for y in 0..src.len() {
            injective.record(x == y || map[x] != map[y], || c2(x, y));
            meet.record(map[src.meet[x][y]] == dst.meet[map[x]][map[y]], || c2(x, y));
            join.record(map[src.join[x][y]] == dst.join[map[x]][map[y]], || c2(x, y));
        }
    }
    [total, injective, meet, join, neg, nabla, one].into_iter().collect()
}

/// Canonical element name of a rough set: `({lower},{upper})`.
pub fn rough_set_name(p: &Partition, r: &RoughSet) -> String {
    format!(
        "({{{}}},{{{}}})",
        p.names(r.lower()).join(","),
        p.names(r.upper()).join(",")
    )
}

/// Tabulates the algebra of rough sets of `p`, elements in the order of
/// [`enumerate_b_star`].
pub fn import_rough_algebra(p: &Partition, bound: usize) -> Result<FiniteAlgebra, Error> {
    let elements = enumerate_b_star(p, bound)?;
    let index: BTreeMap<&RoughSet, usize> = elements.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let lookup = |r: RoughSet| -> Result<usize, Error> {
        index
            .get(&r)
            .copied()
            .ok_or_else(|| Error::MalformedAlgebra(format!("{} is not a rough set", rough_set_name(p, &r))))
    };
    let n = elements.len();
    let mut meet = alloc::vec![alloc::vec![0; n]; n];
    let mut join = alloc::vec![alloc::vec![0; n]; n];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            meet[i][j] = lookup(x.meet(y)?)?;
            join[i][j] = lookup(x.join(y)?)?;
        }
    }
    let neg = elements
        .iter()
        .map(|x| lookup(x.negation()))
        .collect::<Result<_, _>>()?;
    let nabla = elements
        .iter()
        .map(|x| lookup(x.possibility()))
        .collect::<Result<_, _>>()?;
    let one = lookup(RoughSet::one(p))?;
    let names = elements.iter().map(|r| rough_set_name(p, r)).collect();
    FiniteAlgebra::new(names, meet, join, neg, nabla, one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::numbered_universe;
    use alloc::vec;

    fn names(a: &FiniteAlgebra, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| a.name(x).to_string()).collect()
    }

    #[test]
    fn chains_pass() {
        for a in [FiniteAlgebra::two_chain(), FiniteAlgebra::three_chain()] {
            let r = check_axioms(&a);
            assert!(r.passed(), "{:?}", r.first_failure());
            assert!(derived_operator_checks(&a).passed());
        }
    }

    #[test]
    fn distributivity_covers_all_triples() {
        let r = check_axioms(&FiniteAlgebra::three_chain());
        assert_eq!(r.get("distributivity").unwrap().cases, 27);
    }

    #[test]
    fn corrupted_nabla_fails_excluded_middle_at_center() {
        let bad = FiniteAlgebra::three_chain().with_nabla(vec![0, 1, 2]).unwrap();
        let r = check_axioms(&bad);
        let failures: Vec<_> = r
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(failures, vec!["nabla_excluded_middle"]);
        let cx = r.get("nabla_excluded_middle").unwrap().counterexample.clone().unwrap();
        assert_eq!(cx.get("x"), Some(&Witness::Element("c".into())));
    }

    #[test]
    fn malformed_tables_rejected() {
        let a = FiniteAlgebra::three_chain();
        assert!(a.with_nabla(vec![0, 1]).is_err());
        assert!(a.with_nabla(vec![0, 1, 3]).is_err());
        assert!(FiniteAlgebra::new(vec![], vec![], vec![], vec![], vec![], 0).is_err());
        assert!(FiniteAlgebra::new(
            vec!["a".into(), "a".into()],
            vec![vec![0, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 1]],
            vec![1, 0],
            vec![0, 1],
            1
        )
        .is_err());
    }

    #[test]
    fn invariant_elements_are_the_complemented_ones() {
        let c3 = FiniteAlgebra::three_chain();
        assert_eq!(names(&c3, &invariant_elements(&c3)), vec!["0", "1"]);
        assert_eq!(complemented_elements(&c3), invariant_elements(&c3));

        let c2 = FiniteAlgebra::two_chain();
        assert_eq!(invariant_elements(&c2), vec![0, 1]);

        let sq = FiniteAlgebra::product(&c3, &c3);
        assert!(check_axioms(&sq).passed());
        assert!(derived_operator_checks(&sq).passed());
        // pairs of {0,1} coordinates
        assert_eq!(
            names(&sq, &invariant_elements(&sq)),
            vec!["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
        );
        assert_eq!(complemented_elements(&sq), invariant_elements(&sq));
    }

    #[test]
    fn structural_laws_on_fixtures() {
        let c3 = FiniteAlgebra::three_chain();
        for a in [
            FiniteAlgebra::two_chain(),
            c3.clone(),
            FiniteAlgebra::product(&c3, &FiniteAlgebra::two_chain()),
            FiniteAlgebra::product(&c3, &c3),
        ] {
            assert!(check_determination(&a).passed());
            assert!(check_kleene(&a).passed());
            assert!(check_residuation(&a).passed());
        }
        assert_eq!(find_center(&c3), Some(1));
        assert!(check_center_law(&c3, &1).passed());
        assert_eq!(find_center(&FiniteAlgebra::two_chain()), None);
    }

    #[test]
    fn heyting_on_three_chain() {
        let c3 = FiniteAlgebra::three_chain();
        // Gödel implication on a chain: 1 if x <= y else y.
        for x in 0..3 {
            for y in 0..3 {
                let expected = if x <= y { 2 } else { y };
                assert_eq!(c3.implies(&x, &y), expected, "{x} => {y}");
            }
        }
    }

    #[test]
    fn isomorphism_search() {
        let c3 = FiniteAlgebra::three_chain();
        let c2 = FiniteAlgebra::two_chain();
        let a = FiniteAlgebra::product(&c3, &c2);
        let b = FiniteAlgebra::product(&c2, &c3);
        let iso = a.isomorphism_to(&b).unwrap();
        assert!(check_embedding(&a, &b, &iso).passed());
        assert!(c3.isomorphism_to(&FiniteAlgebra::product(&c2, &c2)).is_none());
        // same size, different structure
        let bool4 = FiniteAlgebra::product(&c2, &c2);
        let broken = bool4.with_nabla(vec![3, 3, 3, 3]).unwrap();
        assert!(bool4.isomorphism_to(&broken).is_none());
    }

    #[test]
    fn imported_rough_algebras() {
        let two = Partition::indiscrete(numbered_universe(2)).unwrap();
        let a = import_rough_algebra(&two, 12).unwrap();
        assert_eq!(a.len(), 3);
        assert!(a.isomorphism_to(&FiniteAlgebra::three_chain()).is_some());
        assert_eq!(a.names(), &["({},{})", "({},{1,2})", "({1,2},{1,2})"]);

        for n in 1..=4 {
            let p = Partition::discrete(numbered_universe(n)).unwrap();
            let b = import_rough_algebra(&p, 12).unwrap();
            assert_eq!(b.len(), 1 << n);
            assert!(b.nabla_table().iter().enumerate().all(|(i, &v)| i == v));
            assert_eq!(complemented_elements(&b).len(), 1 << n);
            assert!(check_axioms(&b).passed());
        }

        let fixture = Partition::from_blocks(numbered_universe(5), &[vec![0, 1], vec![2], vec![3, 4]]).unwrap();
        let f = import_rough_algebra(&fixture, 12).unwrap();
        assert_eq!(f.len(), 18);
        assert!(check_axioms(&f).passed());
        assert!(derived_operator_checks(&f).passed());
    }
}
