//! Rough equality as a congruence on the powerset, the quotient algebra it
//! induces, and three-valued membership functions.
//!
//! Two sets are congruent when they have the same lower and upper
//! approximations. The powerset carries two modified operations,
//!
//! ```text
//! A ∩̇ B = MA ∩ B ∩ (A ∪ M¬B)
//! A ⊎ B = LA ∪ B ∪ (A ∩ L¬B)
//! ```
//!
//! which together with complement and M pass to the quotient.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::approximation::{lower_of, set_witness, upper_of};
use crate::error::Error;
use crate::lukasiewicz::{check_axioms, check_embedding, import_rough_algebra, rough_set_name, FiniteAlgebra};
use crate::partition::Partition;
use crate::report::{Check, Counterexample, Report, Witness};
use crate::rough::{enumerate_b_star, rough_of_unchecked, RoughSet};
use crate::set::{all_subsets, ObjectSet};

/// A membership grade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreeValue {
    Zero,
    Half,
    One,
}

impl ThreeValue {
    pub fn max(self, other: Self) -> Self {
        Ord::max(self, other)
    }

    pub fn min(self, other: Self) -> Self {
        Ord::min(self, other)
    }

    /// `1 - x`.
    pub fn complement(self) -> Self {
        match self {
            ThreeValue::Zero => ThreeValue::One,
            ThreeValue::Half => ThreeValue::Half,
            ThreeValue::One => ThreeValue::Zero,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ThreeValue::Zero => "0",
            ThreeValue::Half => "1/2",
            ThreeValue::One => "1",
        }
    }
}

impl fmt::Display for ThreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `MA ∩ B ∩ (A ∪ M¬B)`.
pub fn cap_dot(p: &Partition, a: &ObjectSet, b: &ObjectSet) -> Result<ObjectSet, Error> {
    p.check_set(a)?;
    p.check_set(b)?;
    Ok(cap_dot_of(p, a, b))
}

/// `LA ∪ B ∪ (A ∩ L¬B)`.
pub fn uplus(p: &Partition, a: &ObjectSet, b: &ObjectSet) -> Result<ObjectSet, Error> {
    p.check_set(a)?;
    p.check_set(b)?;
    Ok(uplus_of(p, a, b))
}

fn cap_dot_of(p: &Partition, a: &ObjectSet, b: &ObjectSet) -> ObjectSet {
    let tail = a | &upper_of(p, &b.complement());
    &(&upper_of(p, a) & b) & &tail
}

fn uplus_of(p: &Partition, a: &ObjectSet, b: &ObjectSet) -> ObjectSet {
    let tail = a & &lower_of(p, &b.complement());
    &(&lower_of(p, a) | b) | &tail
}

/// Same lower and same upper approximation.
pub fn congruent(p: &Partition, a: &ObjectSet, b: &ObjectSet) -> Result<bool, Error> {
    p.check_set(a)?;
    p.check_set(b)?;
    Ok(lower_of(p, a) == lower_of(p, b) && upper_of(p, a) == upper_of(p, b))
}

/// A class of congruent sets, identified by its approximation pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClass {
    /// First member in characteristic-mask order.
    pub representative: ObjectSet,
    pub signature: RoughSet,
}

/// The quotient algebra together with its classes (same indexing).
#[derive(Clone, Debug)]
pub struct Quotient {
    pub classes: Vec<CongruenceClass>,
    pub algebra: FiniteAlgebra,
}

struct Classes {
    subsets: Vec<ObjectSet>,
    class_of: Vec<usize>,
    classes: Vec<CongruenceClass>,
}

fn classify(p: &Partition, bound: usize) -> Result<Classes, Error> {
    p.check_bound(bound)?;
    let subsets: Vec<ObjectSet> = all_subsets(p.len()).collect();
    let mut index: BTreeMap<RoughSet, usize> = BTreeMap::new();
    let mut classes = Vec::new();
    let mut class_of = Vec::with_capacity(subsets.len());
    for a in &subsets {
        let sig = rough_of_unchecked(p, a);
        let next = classes.len();
        let c = *index.entry(sig.clone()).or_insert(next);
        if c == next {
            classes.push(CongruenceClass {
                representative: a.clone(),
                signature: sig,
            });
        }
        class_of.push(c);
    }
    Ok(Classes {
        subsets,
        class_of,
        classes,
    })
}

impl Classes {
    fn of(&self, s: &ObjectSet) -> usize {
        self.class_of[s.as_mask().expect("exhaustive universes fit a mask") as usize]
    }
}

type SetOp<'a> = &'a dyn Fn(&ObjectSet, &ObjectSet) -> ObjectSet;

/// The quotient of the powerset of `p` by rough equality.
///
/// Tables are built from class representatives; each is then checked
/// against every choice of representatives, and a disagreement is reported
/// as [`Error::NotWellDefined`].
pub fn quotient_algebra(p: &Partition, bound: usize) -> Result<Quotient, Error> {
    let cl = classify(p, bound)?;
    let k = cl.classes.len();
    let reps: Vec<&ObjectSet> = cl.classes.iter().map(|c| &c.representative).collect();
    let meet_op = |a: &ObjectSet, b: &ObjectSet| cap_dot_of(p, a, b);
    let join_op = |a: &ObjectSet, b: &ObjectSet| uplus_of(p, a, b);
    let table = |op: SetOp| -> Vec<Vec<usize>> {
        (0..k)
            .map(|i| (0..k).map(|j| cl.of(&op(reps[i], reps[j]))).collect())
            .collect()
    };
    let meet = table(&meet_op);
    let join = table(&join_op);
    let neg: Vec<usize> = reps.iter().map(|a| cl.of(&a.complement())).collect();
    let nabla: Vec<usize> = reps.iter().map(|a| cl.of(&upper_of(p, a))).collect();

    for (i, a) in cl.subsets.iter().enumerate() {
        let ca = cl.class_of[i];
        if cl.of(&a.complement()) != neg[ca] {
            return Err(Error::NotWellDefined("negation".into()));
        }
        if cl.of(&upper_of(p, a)) != nabla[ca] {
            return Err(Error::NotWellDefined("nabla".into()));
        }
        for (j, b) in cl.subsets.iter().enumerate() {
            let cb = cl.class_of[j];
            if cl.of(&meet_op(a, b)) != meet[ca][cb] {
                return Err(Error::NotWellDefined("cap_dot".into()));
            }
            if cl.of(&join_op(a, b)) != join[ca][cb] {
                return Err(Error::NotWellDefined("uplus".into()));
            }
        }
    }
    let one = cl.of(&p.full_set());
    let names = cl.classes.iter().map(|c| rough_set_name(p, &c.signature)).collect();
    let algebra = FiniteAlgebra::new(names, meet, join, neg, nabla, one)?;
    Ok(Quotient {
        classes: cl.classes,
        algebra,
    })
}

fn cx2(p: &Partition, a: &ObjectSet, b: &ObjectSet) -> Counterexample {
    Counterexample::default()
        .with("A", set_witness(p, a))
        .with("B", set_witness(p, b))
}

/// Rough equality is an equivalence and a congruence for `∩̇`, `⊎`, `¬`, `M`:
/// congruent arguments give congruent results, over every pair of pairs.
pub fn verify_congruence(p: &Partition, bound: usize) -> Result<Report, Error> {
    let cl = classify(p, bound)?;
    let n = cl.subsets.len();
    let mut equivalence = Check::new("equivalence");
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&cl.subsets[i], &cl.subsets[j]);
            let eq = congruent(p, a, b)?;
            equivalence.record(
                eq == congruent(p, b, a)? && congruent(p, a, a)? && eq == (cl.class_of[i] == cl.class_of[j]),
                || cx2(p, a, b),
            );
        }
    }

    // members of each class, to range over all congruent replacements
    let mut members: Vec<Vec<usize>> = alloc::vec![Vec::new(); cl.classes.len()];
    for (i, &c) in cl.class_of.iter().enumerate() {
        members[c].push(i);
    }
    let mut unary = Check::new("congruence_neg_upper");
    for class in &members {
        let a0 = &cl.subsets[class[0]];
        for &i in class {
            let a = &cl.subsets[i];
            unary.record(
                cl.of(&a.complement()) == cl.of(&a0.complement()) && cl.of(&upper_of(p, a)) == cl.of(&upper_of(p, a0)),
                || cx2(p, a0, a),
            );
        }
    }
    let mut cap = Check::new("congruence_cap_dot");
    let mut cup = Check::new("congruence_uplus");
    for ca in &members {
        for cb in &members {
            let (a0, b0) = (&cl.subsets[ca[0]], &cl.subsets[cb[0]]);
            let (m0, j0) = (cl.of(&cap_dot_of(p, a0, b0)), cl.of(&uplus_of(p, a0, b0)));
            for &i in ca {
                for &j in cb {
                    let (a, b) = (&cl.subsets[i], &cl.subsets[j]);
                    cap.record(cl.of(&cap_dot_of(p, a, b)) == m0, || cx2(p, a, b));
                    cup.record(cl.of(&uplus_of(p, a, b)) == j0, || cx2(p, a, b));
                }
            }
        }
    }
    Ok([equivalence, unary, cap, cup].into_iter().collect())
}

/// The four approximation identities for a given pair of operations.
///
/// With `∩̇` and `⊎` all four hold; passing plain `∩`/`∪` is a useful
/// negative control.
pub fn check_distribution_with(
    p: &Partition,
    bound: usize,
    meet_op: impl Fn(&ObjectSet, &ObjectSet) -> ObjectSet,
    join_op: impl Fn(&ObjectSet, &ObjectSet) -> ObjectSet,
) -> Result<Report, Error> {
    p.check_bound(bound)?;
    let mut m_meet = Check::new("upper_of_cap_dot");
    let mut m_join = Check::new("upper_of_uplus");
    let mut l_meet = Check::new("lower_of_cap_dot");
    let mut l_join = Check::new("lower_of_uplus");
    for a in all_subsets(p.len()) {
        let (la, ma) = (lower_of(p, &a), upper_of(p, &a));
        for b in all_subsets(p.len()) {
            let (lb, mb) = (lower_of(p, &b), upper_of(p, &b));
            let (x, y) = (meet_op(&a, &b), join_op(&a, &b));
            let c = || cx2(p, &a, &b);
            m_meet.record(upper_of(p, &x) == &ma & &mb, c);
            m_join.record(upper_of(p, &y) == &ma | &mb, c);
            l_meet.record(lower_of(p, &x) == &la & &lb, c);
            l_join.record(lower_of(p, &y) == &la | &lb, c);
        }
    }
    Ok([m_meet, m_join, l_meet, l_join].into_iter().collect())
}

/// `M(A ∩̇ B) = MA ∩ MB`, `M(A ⊎ B) = MA ∪ MB`, `L(A ∩̇ B) = LA ∩ LB`,
/// `L(A ⊎ B) = LA ∪ LB` for all `A`, `B`.
pub fn verify_distribution_identities(p: &Partition, bound: usize) -> Result<Report, Error> {
    check_distribution_with(p, bound, |a, b| cap_dot_of(p, a, b), |a, b| uplus_of(p, a, b))
}

/// The map `|A| -> (LA, MA)` is a bijection from the quotient onto the rough
/// sets and an isomorphism of the tabulated algebras.
pub fn quotient_iso_b_star(p: &Partition, bound: usize) -> Result<Report, Error> {
    let q = quotient_algebra(p, bound)?;
    let b_star = enumerate_b_star(p, bound)?;
    let target = import_rough_algebra(p, bound)?;
    let mut bijection = Check::new("signature_bijection");
    let mut map = Vec::with_capacity(q.classes.len());
    for c in &q.classes {
        let pos = b_star.iter().position(|r| *r == c.signature);
        bijection.record(pos.is_some(), || {
            Counterexample::default().with("A", set_witness(p, &c.representative))
        });
        map.push(pos.unwrap_or(usize::MAX));
    }
    bijection.record(q.classes.len() == b_star.len(), Counterexample::default);
    let mut report: Report = [bijection].into_iter().collect();
    if report.passed() {
        report.extend(check_embedding(&q.algebra, &target, &map));
    }
    Ok(report)
}

/// The quotient algebra satisfies every Łukasiewicz law.
pub fn verify_quotient_axioms(p: &Partition, bound: usize) -> Result<Report, Error> {
    Ok(check_axioms(&quotient_algebra(p, bound)?.algebra))
}

/// `μ_A(x)`: 1 in the lower approximation, 1/2 in the boundary, 0 outside.
pub fn membership(p: &Partition, a: &ObjectSet, x: usize) -> Result<ThreeValue, Error> {
    p.check_set(a)?;
    if x >= p.len() {
        return Err(Error::IndexOutOfRange { index: x, len: p.len() });
    }
    Ok(grade(&lower_of(p, a), &upper_of(p, a), x))
}

/// Grades of every object, in universe order.
pub fn membership_all(p: &Partition, a: &ObjectSet) -> Result<Vec<ThreeValue>, Error> {
    p.check_set(a)?;
    let (l, m) = (lower_of(p, a), upper_of(p, a));
    Ok((0..p.len()).map(|x| grade(&l, &m, x)).collect())
}

fn grade(lower: &ObjectSet, upper: &ObjectSet, x: usize) -> ThreeValue {
    if lower.contains(x) {
        ThreeValue::One
    } else if upper.contains(x) {
        ThreeValue::Half
    } else {
        ThreeValue::Zero
    }
}

/// For all `A`, `B`, `x`: the grade of `x` in `A ⊎ B` is the max of its
/// grades, in `A ∩̇ B` the min, and in `¬A` one minus its grade in `A`.
pub fn verify_membership_extension(p: &Partition, bound: usize) -> Result<Report, Error> {
    p.check_bound(bound)?;
    let subsets: Vec<ObjectSet> = all_subsets(p.len()).collect();
    let grades: Vec<Vec<ThreeValue>> = subsets.iter().map(|a| membership_all(p, a)).collect::<Result<_, _>>()?;
    let at = |s: &ObjectSet| &grades[s.as_mask().expect("exhaustive universes fit a mask") as usize];
    let cx3 = |a: &ObjectSet, b: &ObjectSet, x: usize| cx2(p, a, b).with("x", Witness::Object(p.universe()[x].clone()));
    let mut max_law = Check::new("uplus_is_max");
    let mut min_law = Check::new("cap_dot_is_min");
    let mut neg_law = Check::new("complement_is_one_minus");
    for (i, a) in subsets.iter().enumerate() {
        let ga = &grades[i];
        let gn = at(&a.complement());
        for x in 0..p.len() {
            neg_law.record(gn[x] == ga[x].complement(), || {
                Counterexample::default()
                    .with("A", set_witness(p, a))
                    .with("x", Witness::Object(p.universe()[x].clone()))
            });
        }
        for (j, b) in subsets.iter().enumerate() {
            let gb = &grades[j];
            let gu = at(&uplus_of(p, a, b));
            let gc = at(&cap_dot_of(p, a, b));
            for x in 0..p.len() {
                max_law.record(gu[x] == ga[x].max(gb[x]), || cx3(a, b, x));
                min_law.record(gc[x] == ga[x].min(gb[x]), || cx3(a, b, x));
            }
        }
    }
    let mut full = Check::new("all_one_iff_full");
    for (i, a) in subsets.iter().enumerate() {
        let all_one = grades[i].iter().all(|&g| g == ThreeValue::One);
        full.record(all_one == a.is_full(), || {
            Counterexample::default().with("A", set_witness(p, a))
        });
    }
    Ok([max_law, min_law, neg_law, full].into_iter().collect())
}

/// `(L(X ∩̇ Y), M(X ∩̇ Y))` is the meet of the rough sets of `X` and `Y`, and
/// likewise `⊎` gives the join; also checks the two alternative closed forms
/// of `∩̇` and `⊎`.
pub fn verify_set_level_operations(p: &Partition, bound: usize) -> Result<Report, Error> {
    p.check_bound(bound)?;
    let mut meet = Check::new("rough_of_cap_dot_is_meet");
    let mut join = Check::new("rough_of_uplus_is_join");
    let mut forms = Check::new("alternative_forms");
    for x in all_subsets(p.len()) {
        let rx = rough_of_unchecked(p, &x);
        let (mx, lx) = (upper_of(p, &x), lower_of(p, &x));
        for y in all_subsets(p.len()) {
            let ry = rough_of_unchecked(p, &y);
            let u = cap_dot_of(p, &x, &y);
            let v = uplus_of(p, &x, &y);
            let c = || cx2(p, &x, &y);
            meet.record(rough_of_unchecked(p, &u) == rx.meet(&ry)?, c);
            join.record(rough_of_unchecked(p, &v) == rx.join(&ry)?, c);
            let (my_neg, ly_neg) = (upper_of(p, &y.complement()), lower_of(p, &y.complement()));
            let u_alt = &(&x & &y) | &(&(&mx & &y) & &my_neg);
            let v_alt = &(&x | &y) & &(&(&lx | &y) | &ly_neg);
            forms.record(u == u_alt && v == v_alt, c);
        }
    }
    Ok([meet, join, forms].into_iter().collect())
}
