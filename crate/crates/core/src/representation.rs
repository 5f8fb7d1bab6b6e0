//! Representation of a finite three-valued Łukasiewicz algebra as an algebra
//! of rough sets.
//!
//! The approximation space is the set of prime filters of the algebra,
//! partitioned by comparability (every maximal chain has one or two filters).
//! An element `x` maps to `h(x) = (L s(x), M s(x))` where `s(x)` is the set of
//! prime filters containing `x`.

use alloc::format;
use alloc::vec::Vec;

use crate::approximation::{lower_of, upper_of};
use crate::error::Error;
use crate::lukasiewicz::{check_axioms, check_embedding, import_rough_algebra, FiniteAlgebra, ThreeValuedAlgebra};
use crate::partition::Partition;
use crate::report::{Check, Counterexample, Report, Witness};
use crate::rough::{rough_of_unchecked, RoughSet};
use crate::set::ObjectSet;

/// Upper limit for subset-enumerating prime filters.
pub const DEFAULT_MAX_ELEMENTS: usize = 16;

/// A prime filter, as a set of element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeFilter(ObjectSet);

impl PrimeFilter {
    pub fn new(a: &FiniteAlgebra, members: ObjectSet) -> Result<Self, Error> {
        if is_prime_filter(a, &members) {
            Ok(PrimeFilter(members))
        } else {
            Err(Error::NotPrimeFilter)
        }
    }

    pub fn members(&self) -> &ObjectSet {
        &self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }
}

/// Contains one, excludes zero, is upward closed and meet closed, and
/// contains `x` or `y` whenever it contains `x v y`.
pub fn is_prime_filter(a: &FiniteAlgebra, s: &ObjectSet) -> bool {
    let n = a.len();
    if s.universe_len() != n || !s.contains(a.one_index()) || s.contains(a.zero_index()) {
        return false;
    }
    for x in s.iter() {
        for y in 0..n {
            if a.leq(&x, &y) && !s.contains(y) {
                return false;
            }
            if s.contains(y) && !s.contains(a.meet(&x, &y)) {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if s.contains(a.join(&x, &y)) && !s.contains(x) && !s.contains(y) {
                return false;
            }
        }
    }
    true
}

fn canonical(mut filters: Vec<PrimeFilter>) -> Vec<PrimeFilter> {
    filters.sort_by(|p, q| p.0.count().cmp(&q.0.count()).then_with(|| p.0.iter().cmp(q.0.iter())));
    filters
}

fn up_set(a: &FiniteAlgebra, j: usize) -> ObjectSet {
    ObjectSet::from_indices(a.len(), (0..a.len()).filter(|&x| a.leq(&j, &x))).expect("indices in range")
}

/// The prime filters of `a`, smallest first (ties broken by member indices).
///
/// In a finite distributive lattice these are exactly the principal filters
/// of join-irreducible elements; `a` should pass [`check_axioms`].
pub fn prime_filters(a: &FiniteAlgebra) -> Vec<PrimeFilter> {
    let n = a.len();
    let zero = a.zero_index();
    let irreducible =
        (0..n).filter(|&j| j != zero && (0..n).all(|x| (0..n).all(|y| a.join(&x, &y) != j || x == j || y == j)));
    canonical(
        irreducible
            .map(|j| up_set(a, j))
            .filter(|s| is_prime_filter(a, s))
            .map(PrimeFilter)
            .collect(),
    )
}

/// Prime filters by testing every subset of the elements, skipping subsets
/// that are not upward closed before the costlier tests.
pub fn prime_filters_exhaustive(a: &FiniteAlgebra, max_elements: usize) -> Result<Vec<PrimeFilter>, Error> {
    let n = a.len();
    let bound = max_elements.min(30);
    if n > bound {
        return Err(Error::AlgebraTooLarge { size: n, bound });
    }
    let ups: Vec<u64> = (0..n).map(|x| up_set(a, x).as_mask().expect("n < 64")).collect();
    let (one, zero) = (1u64 << a.one_index(), 1u64 << a.zero_index());
    let mut out = Vec::new();
    for mask in 0..1u64 << n {
        if mask & one == 0 || mask & zero != 0 {
            continue;
        }
        let upward = (0..n).all(|x| mask >> x & 1 == 0 || ups[x] & !mask == 0);
        if !upward {
            continue;
        }
        let s = ObjectSet::from_mask(n, mask);
        if is_prime_filter(a, &s) {
            out.push(PrimeFilter(s));
        }
    }
    Ok(canonical(out))
}

/// `g(P)`: the complement of `{~p : p in P}`.
pub fn involution(a: &FiniteAlgebra, p: &PrimeFilter) -> Result<PrimeFilter, Error> {
    if !is_prime_filter(a, &p.0) {
        return Err(Error::NotPrimeFilter);
    }
    Ok(involution_unchecked(a, p))
}

fn involution_unchecked(a: &FiniteAlgebra, p: &PrimeFilter) -> PrimeFilter {
    let mut negated = ObjectSet::empty(a.len());
    for x in p.0.iter() {
        negated.insert(a.neg(&x));
    }
    PrimeFilter(negated.complement())
}

/// Names `P1`, `P2`, ... for a list of filters.
pub fn filter_names(filters: &[PrimeFilter]) -> Vec<alloc::string::String> {
    (1..=filters.len()).map(|i| format!("P{i}")).collect()
}

/// Groups the filters into connected components of the comparability order.
pub fn comparability_relation(filters: &[PrimeFilter]) -> Partition {
    let k = filters.len();
    let mut label: Vec<usize> = (0..k).collect();
    // union of comparable pairs, relabelling to the smaller component id
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..k {
            for j in 0..k {
                if (filters[i].is_subset(&filters[j]) || filters[j].is_subset(&filters[i])) && label[j] > label[i] {
                    label[j] = label[i];
                    changed = true;
                }
            }
        }
    }
    Partition::from_labels(filter_names(filters), &label).expect("filter names are distinct")
}

/// `s(x)`: the filters containing `x`.
pub fn stone_map(a: &FiniteAlgebra, filters: &[PrimeFilter], x: usize) -> Result<ObjectSet, Error> {
    if x >= a.len() {
        return Err(Error::UnknownElement(format!("#{x}")));
    }
    Ok(stone(filters, x))
}

fn stone(filters: &[PrimeFilter], x: usize) -> ObjectSet {
    ObjectSet::from_indices(filters.len(), (0..filters.len()).filter(|&i| filters[i].contains(x)))
        .expect("indices in range")
}

/// An algebra represented over its prime-filter space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub filters: Vec<PrimeFilter>,
    pub space: Partition,
    /// `h(x)` for every element index `x`.
    pub embedding: Vec<RoughSet>,
}

/// Builds the prime-filter space of `a` and the map `h`.
pub fn represent(a: &FiniteAlgebra) -> Result<Representation, Error> {
    if let Some(failed) = check_axioms(a).first_failure() {
        return Err(Error::AxiomsFailed(failed.name.clone()));
    }
    let filters = prime_filters(a);
    let space = comparability_relation(&filters);
    let embedding = (0..a.len())
        .map(|x| rough_of_unchecked(&space, &stone(&filters, x)))
        .collect();
    Ok(Representation {
        filters,
        space,
        embedding,
    })
}

impl Representation {
    fn filter_witness(&self, i: usize) -> Witness {
        Witness::Object(self.space.universe()[i].clone())
    }

    /// Checks that `h` is an injective homomorphism, with injectivity also
    /// certified through the pairs `(s(Dx), s(Nx))`, and that `h` embeds `a`
    /// into the tabulated rough-set algebra of the space.
    pub fn verify_embedding(&self, a: &FiniteAlgebra, bound: usize) -> Result<Report, Error> {
        let els = a.elements();
        let h = &self.embedding;
        let ex = |x: usize| Witness::Element(a.name(x).into());
        let c1 = |x| Counterexample::default().with("x", ex(x));
        let c2 = |x, y| c1(x).with("y", ex(y));

        let mut injective = Check::new("h_injective");
        let mut det_route = Check::new("h_injective_by_determination");
        let keys: Vec<(ObjectSet, ObjectSet)> = els
            .iter()
            .map(|x| (stone(&self.filters, a.delta(x)), stone(&self.filters, a.nabla(x))))
            .collect();
        let mut meet = Check::new("h_preserves_meet");
        let mut join = Check::new("h_preserves_join");
        let mut neg = Check::new("h_preserves_neg");
        let mut nabla = Check::new("h_preserves_nabla");
        let mut one = Check::new("h_preserves_one");
        one.record(h[a.one_index()] == RoughSet::one(&self.space), Counterexample::default);
        for &x in els {
            neg.record(h[a.neg(&x)] == h[x].negation(), || c1(x));
            nabla.record(h[a.nabla(&x)] == h[x].possibility(), || c1(x));
            for &y in els {
                injective.record(x == y || h[x] != h[y], || c2(x, y));
                det_route.record(x == y || keys[x] != keys[y], || c2(x, y));
                meet.record(h[a.meet(&x, &y)] == h[x].meet(&h[y])?, || c2(x, y));
                join.record(h[a.join(&x, &y)] == h[x].join(&h[y])?, || c2(x, y));
            }
        }
        let mut report: Report = [injective, det_route, meet, join, neg, nabla, one]
            .into_iter()
            .collect();

        let target = import_rough_algebra(&self.space, bound)?;
        let mut image = Check::new("h_image_in_rough_algebra");
        let mut map = Vec::with_capacity(a.len());
        for &x in els {
            let name = crate::lukasiewicz::rough_set_name(&self.space, &h[x]);
            let idx = target.index_of(&name).ok();
            image.record(idx.is_some(), || c1(x));
            map.push(idx.unwrap_or(usize::MAX));
        }
        let image_ok = image.passed();
        report.push(image);
        if image_ok {
            report.extend(check_embedding(a, &target, &map).scoped("into_rough_algebra"));
        }
        Ok(report)
    }
}

/// Properties of the filter space and of the maps `s` and `h` used by the
/// representation: `g` is an order-reversing involution on prime filters
/// that respects the chains; chains have at most two filters; `s` is an
/// injective lattice homomorphism preserving 0 and 1; the six identities
/// relating `s`, `L`, `M`, `N` and `D`; and how `N` and `D` move elements between comparable filters.
pub fn verify_representation_identities(a: &FiniteAlgebra, rep: &Representation) -> Report {
    let filters = &rep.filters;
    let space = &rep.space;
    let k = filters.len();
    let n = a.len();
    let fw = |i: usize| rep.filter_witness(i);
    let ew = |x: usize| Witness::Element(a.name(x).into());
    let cp = |i| Counterexample::default().with("P", fw(i));
    let cpq = |i, j| cp(i).with("Q", fw(j));
    let cx = |x| Counterexample::default().with("x", ew(x));
    let cpx = |i, x| cp(i).with("x", ew(x));

    let g: Vec<PrimeFilter> = filters.iter().map(|p| involution_unchecked(a, p)).collect();
    let g_index: Vec<Option<usize>> = g.iter().map(|q| filters.iter().position(|p| p == q)).collect();

    let mut g_prime = Check::new("g_prime");
    let mut g_invol = Check::new("g_involution");
    let mut comparable = Check::new("p_and_g_comparable");
    let mut g_blocks = Check::new("g_preserves_chains");
    for i in 0..k {
        g_prime.record(g_index[i].is_some(), || cp(i));
        let gg = involution_unchecked(a, &g[i]);
        g_invol.record(gg == filters[i], || cp(i));
        comparable.record(g[i].is_subset(&filters[i]) || filters[i].is_subset(&g[i]), || cp(i));
        g_blocks.record(
            g_index[i].is_some_and(|j| space.class_of(j) == space.class_of(i)),
            || cp(i),
        );
    }
    let mut reversing = Check::new("g_order_reversing");
    let mut respects = Check::new("relation_respects_g");
    for i in 0..k {
        for j in 0..k {
            if filters[i].is_subset(&filters[j]) {
                reversing.record(g[j].is_subset(&g[i]), || cpq(i, j));
            }
            if space.class_of(i) == space.class_of(j) {
                let ok = match (g_index[i], g_index[j]) {
                    (Some(gi), Some(gj)) => space.class_of(gi) == space.class_of(gj),
                    _ => false,
                };
                respects.record(ok, || cpq(i, j));
            }
        }
    }
    let mut chains = Check::new("chains_at_most_two");
    for block in space.blocks() {
        let is_chain = block.iter().all(|&i| {
            block
                .iter()
                .all(|&j| filters[i].is_subset(&filters[j]) || filters[j].is_subset(&filters[i]))
        });
        chains.record(block.len() <= 2 && is_chain, || cp(block[0]));
    }

    let s: Vec<ObjectSet> = (0..n).map(|x| stone(filters, x)).collect();
    let mut s_inj = Check::new("stone_injective");
    let mut s_hom = Check::new("stone_homomorphism");
    s_hom.record(
        s[a.zero_index()].is_empty() && s[a.one_index()].is_full(),
        Counterexample::default,
    );
    for x in 0..n {
        for y in 0..n {
            let c = || cx(x).with("y", ew(y));
            s_inj.record(x == y || s[x] != s[y], c);
            s_hom.record(
                s[a.meet(&x, &y)] == &s[x] & &s[y] && s[a.join(&x, &y)] == &s[x] | &s[y],
                c,
            );
        }
    }

    let mut upper_nabla_closed = Check::new("upper_of_nabla_is_closed");
    let mut upper_is_nabla = Check::new("upper_is_stone_of_nabla");
    let mut lower_delta_closed = Check::new("lower_of_delta_is_closed");
    let mut lower_is_delta = Check::new("lower_is_stone_of_delta");
    let mut neg_nabla = Check::new("stone_of_neg_nabla_is_outside_upper");
    let mut neg_delta = Check::new("stone_of_neg_delta_is_outside_lower");
    for x in 0..n {
        let (nx, dx) = (a.nabla(&x), a.delta(&x));
        let c = || cx(x);
        upper_nabla_closed.record(upper_of(space, &s[nx]) == s[nx], c);
        upper_is_nabla.record(upper_of(space, &s[x]) == s[nx], c);
        lower_delta_closed.record(lower_of(space, &s[dx]) == s[dx], c);
        lower_is_delta.record(lower_of(space, &s[x]) == s[dx], c);
        neg_nabla.record(
            s[a.neg(&nx)] == s[nx].complement() && s[a.neg(&nx)] == upper_of(space, &s[x]).complement(),
            c,
        );
        neg_delta.record(
            s[a.neg(&dx)] == s[dx].complement() && s[a.neg(&dx)] == lower_of(space, &s[x]).complement(),
            c,
        );
    }

    let mut nabla_lifts = Check::new("nabla_lifts_in_upper_filters");
    let mut delta_stays = Check::new("delta_stays_in_lower_filters");
    for i in 0..k {
        if !g[i].is_subset(&filters[i]) {
            continue;
        }
        for x in 0..n {
            if filters[i].contains(a.nabla(&x)) {
                nabla_lifts.record(filters[i].contains(x), || cpx(i, x));
            }
            if g[i].contains(x) {
                delta_stays.record(g[i].contains(a.delta(&x)), || cpx(i, x));
            }
        }
    }

    [
        g_prime,
        g_invol,
        reversing,
        comparable,
        chains,
        g_blocks,
        respects,
        s_inj,
        s_hom,
        upper_nabla_closed,
        upper_is_nabla,
        lower_delta_closed,
        lower_is_delta,
        neg_nabla,
        neg_delta,
        nabla_lifts,
        delta_stays,
    ]
    .into_iter()
    .collect()
}
