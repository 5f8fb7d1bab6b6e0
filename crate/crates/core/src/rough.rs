//! The algebra of rough sets of an approximation space.
//!
//! A rough set is the pair `(LX, MX)` of approximations of some `X`. The
//! pairs of closed sets `(b1, b2)` with `b1 ⊆ b2` form a larger, centered
//! algebra (the Moisil pairs); rough sets are the sub-collection of pairs that
//! some `X` actually realizes. A pair is realizable exactly when every block
//! in `b2 \ b1` has at least two objects; the tests confirm this against
//! brute-force enumeration.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::approximation::{closed_elements, is_closed, lower_of, upper_of};
use crate::error::Error;
use crate::lukasiewicz::{check_center_law, check_determination, check_kleene, check_residuation, ThreeValuedAlgebra};
use crate::partition::Partition;
use crate::report::{Check, Counterexample, Report, Witness};
use crate::set::{all_subsets, ObjectSet};

/// A pair of closed sets with `first ⊆ second`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoisilPair {
    first: ObjectSet,
    second: ObjectSet,
}

impl MoisilPair {
    pub fn new(p: &Partition, first: ObjectSet, second: ObjectSet) -> Result<Self, Error> {
        p.check_set(&first)?;
        p.check_set(&second)?;
        if !is_closed(p, &first) || !is_closed(p, &second) || !first.is_subset(&second) {
            return Err(Error::NotMoisilPair);
        }
        Ok(MoisilPair { first, second })
    }

    pub fn first(&self) -> &ObjectSet {
        &self.first
    }

    pub fn second(&self) -> &ObjectSet {
        &self.second
    }

    /// `(∅, Ob)`, the unique element equal to its own negation.
    pub fn center(p: &Partition) -> Self {
        MoisilPair {
            first: p.empty_set(),
            second: p.full_set(),
        }
    }

    pub fn zero(p: &Partition) -> Self {
        MoisilPair {
            first: p.empty_set(),
            second: p.empty_set(),
        }
    }

    pub fn one(p: &Partition) -> Self {
        MoisilPair {
            first: p.full_set(),
            second: p.full_set(),
        }
    }

    pub fn meet(&self, other: &Self) -> Result<Self, Error> {
        self.first.check_universe(&other.first)?;
        Ok(MoisilPair {
            first: &self.first & &other.first,
            second: &self.second & &other.second,
        })
    }

    pub fn join(&self, other: &Self) -> Result<Self, Error> {
        self.first.check_universe(&other.first)?;
        Ok(MoisilPair {
            first: &self.first | &other.first,
            second: &self.second | &other.second,
        })
    }

    /// Complement-swap `(¬second, ¬first)`.
    pub fn negation(&self) -> Self {
        MoisilPair {
            first: self.second.complement(),
            second: self.first.complement(),
        }
    }

    pub fn possibility(&self) -> Self {
        MoisilPair {
            first: self.second.clone(),
            second: self.second.clone(),
        }
    }

    pub fn necessity(&self) -> Self {
        MoisilPair {
            first: self.first.clone(),
            second: self.first.clone(),
        }
    }

    /// Componentwise inclusion.
    pub fn is_below(&self, other: &Self) -> bool {
        self.first.is_subset(&other.first) && self.second.is_subset(&other.second)
    }

    /// `~Nx v y v (N~x ^ Ny)`.
    pub fn implication(&self, other: &Self) -> Result<Self, Error> {
        let a = self.possibility().negation();
        let b = self.negation().possibility().meet(&other.possibility())?;
        a.join(other)?.join(&b)
    }

    fn witness(&self, p: &Partition) -> Witness {
        Witness::Pair {
            lower: p.names(&self.first),
            upper: p.names(&self.second),
        }
    }
}

/// True when some `X` has `(LX, MX) = pair`: every block inside
/// `second \ first` has at least two objects.
pub fn is_realizable(p: &Partition, pair: &MoisilPair) -> bool {
    let boundary = &pair.second - &pair.first;
    p.blocks()
        .iter()
        .zip(p.block_sets())
        .all(|(block, set)| block.len() >= 2 || !set.is_subset(&boundary))
}

/// A rough set `(LX, MX)`. Equality is equality of the pair; the
/// approximated set itself is not kept.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RoughSet(MoisilPair);

impl RoughSet {
    /// Accepts a pair only if some set realizes it.
    pub fn from_pair(p: &Partition, pair: MoisilPair) -> Result<Self, Error> {
        if is_realizable(p, &pair) {
            Ok(RoughSet(pair))
        } else {
            Err(Error::NotRealizable)
        }
    }

    pub fn lower(&self) -> &ObjectSet {
        &self.0.first
    }

    pub fn upper(&self) -> &ObjectSet {
        &self.0.second
    }

    pub fn as_pair(&self) -> &MoisilPair {
        &self.0
    }

    pub fn zero(p: &Partition) -> Self {
        RoughSet(MoisilPair::zero(p))
    }

    pub fn one(p: &Partition) -> Self {
        RoughSet(MoisilPair::one(p))
    }

    pub fn meet(&self, other: &Self) -> Result<Self, Error> {
        self.0.meet(&other.0).map(RoughSet)
    }

    pub fn join(&self, other: &Self) -> Result<Self, Error> {
        self.0.join(&other.0).map(RoughSet)
    }

    pub fn negation(&self) -> Self {
        RoughSet(self.0.negation())
    }

    pub fn possibility(&self) -> Self {
        RoughSet(self.0.possibility())
    }

    pub fn necessity(&self) -> Self {
        RoughSet(self.0.necessity())
    }

    pub fn implication(&self, other: &Self) -> Result<Self, Error> {
        self.0.implication(&other.0).map(RoughSet)
    }

    pub fn is_below(&self, other: &Self) -> bool {
        self.0.is_below(&other.0)
    }
}

/// `(LX, MX)`.
pub fn rough_of(p: &Partition, x: &ObjectSet) -> Result<RoughSet, Error> {
    p.check_set(x)?;
    Ok(rough_of_unchecked(p, x))
}

pub(crate) fn rough_of_unchecked(p: &Partition, x: &ObjectSet) -> RoughSet {
    RoughSet(MoisilPair {
        first: lower_of(p, x),
        second: upper_of(p, x),
    })
}

/// The center `(∅, Ob)` of the rough-set algebra, present only when every
/// block has at least two objects.
pub fn center(p: &Partition) -> Option<RoughSet> {
    RoughSet::from_pair(p, MoisilPair::center(p)).ok()
}

/// All rough sets of `p`, deduplicated, in order of the first subset (by
/// characteristic mask) that realizes each.
pub fn enumerate_b_star(p: &Partition, bound: usize) -> Result<Vec<RoughSet>, Error> {
    p.check_bound(bound)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in all_subsets(p.len()) {
        let r = rough_of_unchecked(p, &x);
        if seen.insert(r.clone()) {
            out.push(r);
        }
    }
    Ok(out)
}

/// All pairs of closed sets `(b1, b2)` with `b1 ⊆ b2`, ordered by `b1` then
/// `b2` in [`closed_elements`] order.
pub fn moisil_pairs(p: &Partition) -> Result<Vec<MoisilPair>, Error> {
    let closed = closed_elements(p)?;
    let mut out = Vec::new();
    for b1 in &closed {
        for b2 in &closed {
            if b1.is_subset(b2) {
                out.push(MoisilPair {
                    first: b1.clone(),
                    second: b2.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The rough sets of a partition with their algebra operations.
pub struct RoughAlgebra<'p> {
    partition: &'p Partition,
    elements: Vec<RoughSet>,
}

impl<'p> RoughAlgebra<'p> {
    pub fn new(p: &'p Partition, bound: usize) -> Result<Self, Error> {
        Ok(RoughAlgebra {
            partition: p,
            elements: enumerate_b_star(p, bound)?,
        })
    }

    pub fn partition(&self) -> &Partition {
        self.partition
    }
}

impl ThreeValuedAlgebra for RoughAlgebra<'_> {
    type Elem = RoughSet;

    fn elements(&self) -> &[RoughSet] {
        &self.elements
    }

    fn meet(&self, x: &RoughSet, y: &RoughSet) -> RoughSet {
        x.meet(y).expect("elements share a universe")
    }

    fn join(&self, x: &RoughSet, y: &RoughSet) -> RoughSet {
        x.join(y).expect("elements share a universe")
    }

    fn neg(&self, x: &RoughSet) -> RoughSet {
        x.negation()
    }

    fn nabla(&self, x: &RoughSet) -> RoughSet {
        x.possibility()
    }

    fn one(&self) -> RoughSet {
        RoughSet::one(self.partition)
    }

    fn witness(&self, x: &RoughSet) -> Witness {
        x.0.witness(self.partition)
    }

    fn leq(&self, x: &RoughSet, y: &RoughSet) -> bool {
        x.is_below(y)
    }
}

/// All Moisil pairs over the closed sets of a partition.
pub struct MoisilAlgebra<'p> {
    partition: &'p Partition,
    elements: Vec<MoisilPair>,
}

impl<'p> MoisilAlgebra<'p> {
    pub fn new(p: &'p Partition) -> Result<Self, Error> {
        Ok(MoisilAlgebra {
            partition: p,
            elements: moisil_pairs(p)?,
        })
    }
}

impl ThreeValuedAlgebra for MoisilAlgebra<'_> {
    type Elem = MoisilPair;

    fn elements(&self) -> &[MoisilPair] {
        &self.elements
    }

    fn meet(&self, x: &MoisilPair, y: &MoisilPair) -> MoisilPair {
        x.meet(y).expect("elements share a universe")
    }

    fn join(&self, x: &MoisilPair, y: &MoisilPair) -> MoisilPair {
        x.join(y).expect("elements share a universe")
    }

    fn neg(&self, x: &MoisilPair) -> MoisilPair {
        x.negation()
    }

    fn nabla(&self, x: &MoisilPair) -> MoisilPair {
        x.possibility()
    }

    fn one(&self) -> MoisilPair {
        MoisilPair::one(self.partition)
    }

    fn witness(&self, x: &MoisilPair) -> Witness {
        x.witness(self.partition)
    }

    fn leq(&self, x: &MoisilPair, y: &MoisilPair) -> bool {
        x.is_below(y)
    }
}

/// The determination principle over every pair of rough sets of `p`.
pub fn verify_determination(p: &Partition, bound: usize) -> Result<Report, Error> {
    let b = RoughAlgebra::new(p, bound)?;
    Ok([check_determination(&b)].into_iter().collect())
}

/// Structure shared by the rough sets and the Moisil pairs of `p`:
/// determination, the Kleene law, Heyting residuation, the center law on the
/// Moisil pairs, and the realizability characterization.
pub fn verify_rough_structure(p: &Partition, bound: usize) -> Result<Report, Error> {
    let b = RoughAlgebra::new(p, bound)?;
    let m = MoisilAlgebra::new(p)?;
    let mut report = Report::new();
    report.push(check_determination(&b));
    report.push(check_kleene(&b));
    report.push(check_residuation(&b));
    let mut det_m = check_determination(&m);
    det_m.name = "moisil_determination".into();
    report.push(det_m);
    let mut center_m = check_center_law(&m, &MoisilPair::center(p));
    center_m.name = "moisil_center_law".into();
    report.push(center_m);

    let mut center_b = Check::new("center_presence");
    let has_center = b.elements.contains(&RoughSet(MoisilPair::center(p)));
    center_b.record(
        has_center == p.blocks().iter().all(|blk| blk.len() >= 2) && has_center == center(p).is_some(),
        Counterexample::default,
    );
    report.push(center_b);

    let mut realizable = Check::new("realizability");
    for pair in &m.elements {
        let brute = b.elements.iter().any(|r| r.0 == *pair);
        realizable.record(brute == is_realizable(p, pair), || {
            Counterexample::default().with("x", pair.witness(p))
        });
    }
    report.push(realizable);
    Ok(report)
}

/// Closure of the rough sets under the operations, their embedding in the
/// Moisil pairs, and agreement of the operations with their set-level
/// definitions.
pub fn verify_rough_operations(p: &Partition, bound: usize) -> Result<Report, Error> {
    let b = RoughAlgebra::new(p, bound)?;
    let pairs: BTreeSet<MoisilPair> = moisil_pairs(p)?.into_iter().collect();
    let els: BTreeSet<&RoughSet> = b.elements.iter().collect();

    let mut subset = Check::new("subset_of_moisil_pairs");
    for r in &b.elements {
        subset.record(pairs.contains(&r.0), || {
            Counterexample::default().with("x", b.witness(r))
        });
    }

    let mut closed = Check::new("closure");
    for x in &b.elements {
        let w = || Counterexample::default().with("x", b.witness(x));
        closed.record(
            els.contains(&x.negation()) && els.contains(&x.possibility()) && els.contains(&x.necessity()),
            w,
        );
        for y in &b.elements {
            closed.record(els.contains(&b.meet(x, y)) && els.contains(&b.join(x, y)), || {
                w().with("y", b.witness(y))
            });
        }
    }

    // (L¬X, M¬X) against the complement-swap, and the necessity definitions
    let mut negation = Check::new("negation_forms");
    let mut necessity = Check::new("necessity_forms");
    for x in all_subsets(p.len()) {
        let r = rough_of_unchecked(p, &x);
        let direct = rough_of_unchecked(p, &x.complement());
        let w = || Counterexample::default().with("X", Witness::Set(p.names(&x)));
        negation.record(r.negation() == direct, w);
        necessity.record(
            r.necessity() == r.negation().possibility().negation() && r.necessity() == b.delta(&r),
            w,
        );
    }
    Ok([subset, closed, negation, necessity].into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lukasiewicz::{check_axioms, find_center};
    use crate::partition::{all_partitions, numbered_universe};
    use alloc::vec;

    fn fixture() -> Partition {
        Partition::from_blocks(numbered_universe(5), &[vec![0, 1], vec![2], vec![3, 4]]).unwrap()
    }

    fn set(p: &Partition, names: &[&str]) -> ObjectSet {
        p.set_of(names.iter().copied()).unwrap()
    }

    fn rs(p: &Partition, lower: &[&str], upper: &[&str]) -> RoughSet {
        let pair = MoisilPair::new(p, set(p, lower), set(p, upper)).unwrap();
        RoughSet::from_pair(p, pair).unwrap()
    }

    #[test]
    fn rough_of_fixture() {
        let p = fixture();
        assert_eq!(
            rough_of(&p, &set(&p, &["1", "3"])).unwrap(),
            rs(&p, &["3"], &["1", "2", "3"])
        );
        assert_eq!(rough_of(&p, &p.empty_set()).unwrap(), RoughSet::zero(&p));
        assert_eq!(
            rough_of(&p, &set(&p, &["2", "4"])).unwrap(),
            rs(&p, &[], &["1", "2", "4", "5"])
        );
        assert!(rough_of(&p, &ObjectSet::empty(3)).is_err());
    }

    #[test]
    fn lattice_operations() {
        let p = fixture();
        let a = rough_of(&p, &set(&p, &["1", "3"])).unwrap();
        let b = rough_of(&p, &set(&p, &["2", "4"])).unwrap();
        let (zero, one) = (RoughSet::zero(&p), RoughSet::one(&p));
        assert_eq!(a.meet(&b).unwrap(), rs(&p, &[], &["1", "2"]));
        assert_eq!(a.meet(&one).unwrap(), a);
        assert_eq!(a.meet(&zero).unwrap(), zero);
        assert_eq!(a.join(&b).unwrap(), rs(&p, &["3"], &["1", "2", "3", "4", "5"]));
        assert_eq!(a.join(&zero).unwrap(), a);
        assert_eq!(a.join(&one).unwrap(), one);

        let q = Partition::discrete(numbered_universe(4)).unwrap();
        assert_eq!(
            a.meet(&RoughSet::one(&q)),
            Err(Error::UniverseMismatch { left: 5, right: 4 })
        );
    }

    #[test]
    fn unary_operations() {
        let p = fixture();
        let a = rs(&p, &["3"], &["1", "2", "3"]);
        let expected = rs(&p, &["4", "5"], &["1", "2", "4", "5"]);
        assert_eq!(a.negation(), expected);
        // direct (L¬X, M¬X) with X = {1,3}
        assert_eq!(rough_of(&p, &set(&p, &["2", "4", "5"])).unwrap(), expected);
        assert_eq!(a.negation().negation(), a);
        assert_eq!(RoughSet::zero(&p).negation(), RoughSet::one(&p));

        assert_eq!(a.possibility(), rs(&p, &["1", "2", "3"], &["1", "2", "3"]));
        assert_eq!(RoughSet::zero(&p).possibility(), RoughSet::zero(&p));
        assert_eq!(a.possibility().possibility(), a.possibility());

        assert_eq!(a.necessity(), rs(&p, &["3"], &["3"]));
        assert_eq!(a.necessity(), a.negation().possibility().negation());
        assert_eq!(RoughSet::one(&p).necessity(), RoughSet::one(&p));
        assert!(a.necessity().is_below(&a) && a.is_below(&a.possibility()));
    }

    #[test]
    fn implication() {
        let p = fixture();
        let a = rs(&p, &["3"], &["1", "2", "3"]);
        let b = rs(&p, &[], &["1", "2", "4", "5"]);
        let one = RoughSet::one(&p);
        assert_eq!(a.implication(&a).unwrap(), one);
        for x in enumerate_b_star(&p, 12).unwrap() {
            assert_eq!(RoughSet::zero(&p).implication(&x).unwrap(), one);
        }
        assert_eq!(
            a.implication(&b).unwrap(),
            rs(&p, &["1", "2", "4", "5"], &["1", "2", "4", "5"])
        );
    }

    #[test]
    fn b_star_sizes() {
        let p = fixture();
        let all = enumerate_b_star(&p, 12).unwrap();
        // independent count: distinct pairs over all 32 subsets
        let brute: BTreeSet<(Vec<usize>, Vec<usize>)> = all_subsets(5)
            .map(|x| (lower_of(&p, &x).iter().collect(), upper_of(&p, &x).iter().collect()))
            .collect();
        assert_eq!(brute.len(), 18);
        assert_eq!(all.len(), 18);
        // 3 choices per block of size >= 2, 2 per singleton
        assert_eq!(3usize.pow(2) * 2usize.pow(1), 18);

        let two = Partition::indiscrete(numbered_universe(2)).unwrap();
        let all = enumerate_b_star(&two, 12).unwrap();
        assert_eq!(
            all,
            vec![RoughSet::zero(&two), rs(&two, &[], &["1", "2"]), RoughSet::one(&two)]
        );

        let d = Partition::discrete(numbered_universe(4)).unwrap();
        let all = enumerate_b_star(&d, 12).unwrap();
        assert_eq!(all.len(), 16);
        assert!(all.iter().all(|r| r.lower() == r.upper()));

        assert!(enumerate_b_star(&Partition::discrete(numbered_universe(7)).unwrap(), 6).is_err());
    }

    #[test]
    fn count_formula_over_all_small_partitions() {
        for n in 0..=6 {
            for p in all_partitions(numbered_universe(n)) {
                let big = p.blocks().iter().filter(|b| b.len() >= 2).count() as u32;
                let single = p.blocks().len() as u32 - big;
                let expected = 3usize.pow(big) * 2usize.pow(single);
                assert_eq!(enumerate_b_star(&p, 12).unwrap().len(), expected);
            }
        }
    }

    #[test]
    fn moisil_pairs_of_fixture() {
        let p = fixture();
        let pairs = moisil_pairs(&p).unwrap();
        assert_eq!(pairs.len(), 27);
        let unrealizable = MoisilPair::new(&p, p.empty_set(), set(&p, &["3"])).unwrap();
        assert!(pairs.contains(&unrealizable));
        assert!(!is_realizable(&p, &unrealizable));
        assert_eq!(RoughSet::from_pair(&p, unrealizable), Err(Error::NotRealizable));
        // no subset has L = ∅, M = {3}
        assert!(all_subsets(5).all(|x| {
            let r = rough_of_unchecked(&p, &x);
            !(r.lower().is_empty() && *r.upper() == set(&p, &["3"]))
        }));
        assert!(pairs.contains(&MoisilPair::center(&p)));
        assert!(center(&p).is_none());
        assert!(MoisilPair::new(&p, set(&p, &["1"]), p.full_set()).is_err());
        assert!(MoisilPair::new(&p, p.full_set(), p.empty_set()).is_err());
    }

    #[test]
    fn center_exists_when_blocks_are_large() {
        let p = Partition::from_blocks(numbered_universe(4), &[vec![0, 1], vec![2, 3]]).unwrap();
        let c = center(&p).unwrap();
        let b = RoughAlgebra::new(&p, 12).unwrap();
        assert_eq!(find_center(&b), Some(c.clone()));
        assert!(check_center_law(&b, &c).passed());
    }

    #[test]
    fn determination() {
        let p = fixture();
        assert!(verify_determination(&p, 12).unwrap().passed());
        assert!(check_determination(&MoisilAlgebra::new(&p).unwrap()).passed());
        let r = verify_rough_structure(&p, 12).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(r.get("moisil_determination").unwrap().cases, 27 * 27);
    }

    #[test]
    fn axioms_on_every_small_partition() {
        for n in 0..=5 {
            for p in all_partitions(numbered_universe(n)) {
                let b = RoughAlgebra::new(&p, 12).unwrap();
                let r = check_axioms(&b);
                assert!(r.passed(), "{:?}", r.first_failure());
                // 3^blocks pairs; triples get expensive past four objects
                if n <= 4 {
                    assert!(check_axioms(&MoisilAlgebra::new(&p).unwrap()).passed());
                }
                assert!(verify_rough_operations(&p, 12).unwrap().passed());
                assert!(verify_rough_structure(&p, 12).unwrap().passed());
            }
        }
    }
}
