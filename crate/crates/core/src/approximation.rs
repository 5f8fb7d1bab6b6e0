//! Upper and lower approximations over a partition, and exhaustive checks of
//! the monadic Boolean algebra laws they satisfy.
//!
//! `upper` is the existential quantifier M (union of the blocks meeting a
//! set) and `lower` its dual L (union of the blocks inside a set). Their fixed
//! points, the closed sets, are exactly the unions of blocks.

use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::Partition;
use crate::report::{Check, Counterexample, Report, Witness};
use crate::set::{all_subsets, ObjectSet};

/// Default universe size up to which laws are checked over all subsets.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 12;

/// Union of the blocks of `p` that meet `a`.
pub fn upper(p: &Partition, a: &ObjectSet) -> Result<ObjectSet, Error> {
    p.check_set(a)?;
    Ok(upper_of(p, a))
}

/// Union of the blocks of `p` contained in `a`.
pub fn lower(p: &Partition, a: &ObjectSet) -> Result<ObjectSet, Error> {
    p.check_set(a)?;
    Ok(lower_of(p, a))
}

/// Complement within the universe.
pub fn complement(a: &ObjectSet) -> ObjectSet {
    a.complement()
}

pub(crate) fn upper_of(p: &Partition, a: &ObjectSet) -> ObjectSet {
    let mut out = p.empty_set();
    for b in p.block_sets() {
        if b.intersects(a) {
            out = &out | b;
        }
    }
    out
}

pub(crate) fn lower_of(p: &Partition, a: &ObjectSet) -> ObjectSet {
    let mut out = p.empty_set();
    for b in p.block_sets() {
        if b.is_subset(a) {
            out = &out | b;
        }
    }
    out
}

/// True when `a` is a union of blocks.
pub fn is_closed(p: &Partition, a: &ObjectSet) -> bool {
    p.block_sets().iter().all(|b| b.is_subset(a) || !b.intersects(a))
}

/// All unions of blocks; bit `i` of the position selects block `i`.
pub fn closed_elements(p: &Partition) -> Result<Vec<ObjectSet>, Error> {
    let k = p.blocks().len();
    if k >= 32 {
        return Err(Error::UniverseTooLarge { size: k, bound: 31 });
    }
    Ok((0..1u64 << k)
        .map(|mask| {
            let mut s = p.empty_set();
            for (i, b) in p.block_sets().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    s = &s | b;
                }
            }
            s
        })
        .collect())
}

pub(crate) fn set_witness(p: &Partition, s: &ObjectSet) -> Witness {
    Witness::Set(p.names(s))
}

fn cx1(p: &Partition, a: &ObjectSet) -> Counterexample {
    Counterexample::default().with("A", set_witness(p, a))
}

fn cx2(p: &Partition, a: &ObjectSet, b: &ObjectSet) -> Counterexample {
    cx1(p, a).with("B", set_witness(p, b))
}

/// Checks M0, M1 and M2 for `op` over every subset (pair) of the universe of `p`.
///
/// Also checks `block_closure`: every `op(A)` is a union of blocks of `p`.
/// The monadic laws alone do not tie an operator to a partition (the
/// identity satisfies them), so this check is what catches such operators.
pub fn check_monadic_operator<F>(p: &Partition, bound: usize, op: F) -> Result<Report, Error>
where
    F: Fn(&ObjectSet) -> ObjectSet,
{
    p.check_bound(bound)?;
    let subsets: Vec<ObjectSet> = all_subsets(p.len()).collect();
    let images: Vec<ObjectSet> = subsets.iter().map(&op).collect();

    let mut m0 = Check::new("M0");
    let empty = p.empty_set();
    m0.record(op(&empty).is_empty(), || cx1(p, &empty));

    let mut m1 = Check::new("M1");
    let mut closure = Check::new("block_closure");
    for (a, ma) in subsets.iter().zip(&images) {
        m1.record(a.is_subset(ma), || cx1(p, a));
        closure.record(is_closed(p, ma), || cx1(p, a));
    }

    let mut m2 = Check::new("M2");
    for (a, ma) in subsets.iter().zip(&images) {
        for (b, mb) in subsets.iter().zip(&images) {
            let lhs = op(&(a & mb));
            m2.record(lhs == ma & mb, || cx2(p, a, b));
        }
    }
    Ok([m0, m1, m2, closure].into_iter().collect())
}

/// M0, M1, M2 and block closure for the upper approximation of `p`.
pub fn check_monadic_axioms(p: &Partition, bound: usize) -> Result<Report, Error> {
    check_monadic_operator(p, bound, |a| upper_of(p, a))
}

/// Exhaustive checks of the remaining approximation laws: duality, the
/// sandwich `LA ⊆ A ⊆ MA`, idempotence, monotonicity, distribution over
/// union/intersection, and closure of the closed sets under the Boolean
/// operations.
pub fn check_approximation_laws(p: &Partition, bound: usize) -> Result<Report, Error> {
    p.check_bound(bound)?;
    let subsets: Vec<ObjectSet> = all_subsets(p.len()).collect();
    let mut duality = Check::new("duality");
    let mut sandwich = Check::new("lower_within_upper");
    let mut idempotent = Check::new("idempotence");
    for a in &subsets {
        let (la, ma) = (lower_of(p, a), upper_of(p, a));
        duality.record(la == upper_of(p, &a.complement()).complement(), || cx1(p, a));
        sandwich.record(la.is_subset(a) && a.is_subset(&ma), || cx1(p, a));
        idempotent.record(upper_of(p, &ma) == ma && lower_of(p, &la) == la, || cx1(p, a));
    }

    let mut monotone = Check::new("monotonicity");
    let mut distributes = Check::new("distribution");
    for a in &subsets {
        let (la, ma) = (lower_of(p, a), upper_of(p, a));
        for b in &subsets {
            let (lb, mb) = (lower_of(p, b), upper_of(p, b));
            if a.is_subset(b) {
                monotone.record(ma.is_subset(&mb) && la.is_subset(&lb), || cx2(p, a, b));
            }
            distributes.record(
                upper_of(p, &(a | b)) == &ma | &mb && lower_of(p, &(a & b)) == &la & &lb,
                || cx2(p, a, b),
            );
        }
    }

    let closed = closed_elements(p)?;
    let mut subalgebra = Check::new("closed_subalgebra");
    subalgebra.record(
        closed.contains(&p.empty_set()) && closed.contains(&p.full_set()),
        Counterexample::default,
    );
    for x in &closed {
        subalgebra.record(closed.contains(&x.complement()), || cx1(p, x));
        for y in &closed {
            subalgebra.record(closed.contains(&(x & y)) && closed.contains(&(x | y)), || cx2(p, x, y));
        }
    }
    Ok([duality, sandwich, idempotent, monotone, distributes, subalgebra]
        .into_iter()
        .collect())
}
