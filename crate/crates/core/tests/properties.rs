use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rand::Rng;

use mcds_core::dense::{phase_two_member, DenseParams};
use mcds_core::family::{enumerate_downward_closed, enumerate_upward_closed, FamilySpec};
use mcds_core::generate::{random_connected, random_good_instance, random_tree, rng_from_seed};
use mcds_core::kernel::low_degree_count;
use mcds_core::oracle::{oracle_enumerate, oracle_extensions};
use mcds_core::probe::{greedy_probe_traced, ProbeParams};
use mcds_core::sparse::{reduce_instance, SparsePlan};
use mcds_core::{
    is_cds, is_minimal_cds, is_minimal_extension, low_degree_set, Fraction, Graph, VertexSet,
};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let s = VertexSet::from_iter_in(n, (0..n).filter(|&v| bits[v]));
            (g.clone(), s)
        })
    })
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |mask| {
        let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
        graph_from_bits(n, &bits)
    })
}

fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(move |m| VertexSet::from_mask(n, m))
}

// adjacency-matrix reference implementations

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

fn naive_components(m: &[Vec<bool>], alive: &[bool]) -> usize {
    let n = m.len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if !alive[s] || label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = count;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if m[u][v] && alive[v] && label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    count
}

fn naive_cds(m: &[Vec<bool>], s: &[bool]) -> bool {
    let n = m.len();
    let dominated = (0..n).all(|v| s[v] || (0..n).any(|u| s[u] && m[u][v]));
    let size = s.iter().filter(|&&b| b).count();
    dominated && size > 0 && naive_components(m, s) == 1
}

fn naive_cut_vertices(g: &Graph) -> Vec<usize> {
    let m = matrix(g);
    let n = g.n();
    let all = vec![true; n];
    let base = naive_components(&m, &all);
    (0..n)
        .filter(|&v| {
            let mut alive = all.clone();
            alive[v] = false;
            naive_components(&m, &alive) > base
        })
        .collect()
}

#[test]
fn cut_vertices_match_quadratic_reference() {
    for n in 0..=7 {
        for g in all_graphs(n) {
            assert_eq!(g.cut_vertices().to_vec(), naive_cut_vertices(&g), "{g:?}");
        }
    }
    let mut rng = rng_from_seed(1);
    for _ in 0..300 {
        let g = mcds_core::generate::gnp(8, rng.gen_range(0.1..0.6), &mut rng).unwrap();
        assert_eq!(g.cut_vertices().to_vec(), naive_cut_vertices(&g));
    }
}

#[test]
fn cds_predicate_matches_reference() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            let m = matrix(&g);
            for s in all_subsets(n) {
                let bits: Vec<bool> = (0..n).map(|v| s.contains(v)).collect();
                assert_eq!(is_cds(&g, &s), naive_cds(&m, &bits), "{g:?} {s:?}");
            }
        }
    }
}

#[test]
fn oracle_output_passes_reference_minimality() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let m = matrix(&g);
            let bits = |s: &VertexSet| (0..n).map(|v| s.contains(v)).collect::<Vec<bool>>();
            let found: HashSet<VertexSet> = oracle_enumerate(&g).unwrap().into_iter().collect();
            for s in all_subsets(n) {
                let cds = naive_cds(&m, &bits(&s));
                // minimal iff no proper subset is a CDS
                let minimal = cds
                    && all_subsets(n)
                        .filter(|t| t.is_subset(&s) && *t != s)
                        .all(|t| !naive_cds(&m, &bits(&t)));
                assert_eq!(found.contains(&s), minimal, "{g:?} {s:?}");
            }
        }
    }
}

#[test]
fn empty_extension_is_minimal_cds() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let e = g.empty_set();
            for s in all_subsets(n) {
                assert_eq!(
                    is_minimal_extension(&g, &e, &e, &s).unwrap(),
                    is_minimal_cds(&g, &s)
                );
            }
        }
    }
}

#[test]
fn empty_extensions_match_enumeration() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let e = g.empty_set();
            assert_eq!(
                oracle_extensions(&g, &e, &e).unwrap(),
                oracle_enumerate(&g).unwrap()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn contraction_merges_neighborhoods(g in arb_graph(10), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let (h, map) = g.contract_edge(u, v).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        let w = map.image(u).unwrap();
        prop_assert_eq!(map.image(v), Some(w));
        let expected: BTreeSet<usize> = g
            .neighbors(u)
            .union(g.neighbors(v))
            .iter()
            .filter(|&x| x != u && x != v)
            .map(|x| map.image(x).unwrap())
            .collect();
        let got: BTreeSet<usize> = h.neighbors(w).iter().collect();
        prop_assert_eq!(got, expected);
        for (a, b) in g.edges() {
            if (a, b) != (u, v) {
                let (x, y) = (map.image(a).unwrap(), map.image(b).unwrap());
                prop_assert!(x == y || h.has_edge(x, y));
            }
        }
        prop_assert!(h.edge_count() < g.edge_count());
    }

    #[test]
    fn low_set_shrinks_as_s_grows((g, s) in arb_graph_and_set(12), drop in any::<u64>()) {
        let sub = VertexSet::from_iter_in(g.n(), s.iter().filter(|&v| drop >> (v % 64) & 1 == 0));
        prop_assert!(low_degree_set(&g, &s).is_subset(&low_degree_set(&g, &sub)));
    }

    #[test]
    fn phase_two_family_is_downward_closed((g, s) in arb_graph_and_set(12), drop in any::<u64>()) {
        let mut member = phase_two_member(&g, &DenseParams::default());
        let sub = VertexSet::from_iter_in(g.n(), s.iter().filter(|&v| drop >> (v % 64) & 1 == 0));
        if member(&s) {
            prop_assert!(member(&sub));
        }
    }

    #[test]
    fn probe_postconditions(
        g in arb_graph(12),
        ell in 1usize..=12,
        extra in 0usize..=11,
        num in 0u64..=10,
    ) {
        let h = (ell + extra).min(12);
        let params = ProbeParams::new(ell, h, Fraction::new(num, 10).unwrap()).unwrap();
        let (result, trace) = greedy_probe_traced(&g, &params);
        prop_assert!(result.check(&g, &params).is_ok());
        prop_assert!(trace.potentials.windows(2).all(|w| w[1] < w[0]));
        prop_assert_eq!(trace.potentials.len(), trace.added.len() + 1);
        prop_assert!(trace.added.len() <= g.n() * ell);
        let (again, _) = greedy_probe_traced(&g, &params);
        prop_assert_eq!(again, result);
    }
}

/// A path with a few pendant leaves and chords: almost every vertex is a cut vertex.
fn near_path<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let spine = n - n / 20;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    for leaf in spine..n {
        edges.push((rng.gen_range(0..spine), leaf));
    }
    for _ in 0..rng.gen_range(0..3) {
        let (a, b) = (rng.gen_range(0..spine), rng.gen_range(0..spine));
        if a != b {
            edges.push((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn many_cut_vertices_force_degree_two() {
    let mut rng = rng_from_seed(6);
    let mut binding = 0;
    for i in 0..500 {
        let n = rng.gen_range(1..=200);
        let g = match i % 3 {
            0 => near_path(n, &mut rng),
            1 => random_tree(n, &mut rng),
            _ => random_connected(n, rng.gen_range(0.0..0.02), &mut rng).unwrap(),
        };
        let cuts = g.cut_vertices().len() as i64;
        let deg2 = (0..n).filter(|&v| g.degree(v) == 2).count() as i64;
        // (1 - 7 alpha) n with alpha = 1 - cuts / n
        let bound = 7 * cuts - 6 * n as i64;
        assert!(deg2 >= bound, "n={n} cuts={cuts} deg2={deg2}");
        if bound > 0 {
            binding += 1;
        }
    }
    assert!(binding > 50, "only {binding} graphs with a positive bound");
}

#[test]
fn large_minimal_cds_have_many_low_vertices() {
    let mut rng = rng_from_seed(12);
    let mut checked = 0;
    for n in 3..=12 {
        for _ in 0..25 {
            let p = rng.gen_range(0.05..0.5);
            let g = random_connected(n, p, &mut rng).unwrap();
            for s in oracle_enumerate(&g).unwrap() {
                if 10 * s.len() >= 4 * n {
                    assert!(20 * low_degree_count(&g, &s) >= n);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn independent_inner_tree_vertices_are_a_minority() {
    let mut rng = rng_from_seed(13);
    for _ in 0..300 {
        let n = rng.gen_range(2..=50);
        let t = random_tree(n, &mut rng);
        let inner: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 2).collect();
        for _ in 0..10 {
            let mut s = t.empty_set();
            for &v in &inner {
                if rng.gen_bool(0.6) && !t.neighbors(v).intersects(&s) {
                    s.insert(v);
                }
            }
            assert!(s.len() <= n - s.len());
        }
    }
}

#[test]
fn reduction_preserves_extensions() {
    let mut rng = rng_from_seed(21);
    let mut bounded = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let gi = random_good_instance(n, rng.gen_range(0.1..0.7), &mut rng).unwrap();
        let inst = &gi.instance;
        let red = reduce_instance(inst, &gi.heavy, &gi.rest).unwrap();
        assert!(red.is_excellent());
        let before = oracle_extensions(&inst.graph, &inst.included, &inst.excluded).unwrap();
        let r = &red.instance;
        let after = oracle_extensions(&r.graph, &r.included, &r.excluded).unwrap();
        let lifted: BTreeSet<VertexSet> = after.iter().map(|s| red.lift(s)).collect();
        let before: BTreeSet<VertexSet> = before.into_iter().collect();
        assert_eq!(lifted, before, "{inst:?}");
        if !r.included.is_empty() {
            let bound = r.decided().len();
            assert!(after.iter().all(|s| s.len() <= bound));
            bounded += 1;
        }
    }
    assert!(bounded > 300);
}

#[test]
fn sparse_branches_never_repeat() {
    let mut rng = rng_from_seed(30);
    for _ in 0..100 {
        let g = mcds_core::generate::gnp(10, 0.25, &mut rng).unwrap();
        let params = ProbeParams::new(3, 100, Fraction::from_parts(1, 4)).unwrap();
        let mcds_core::ProbeResult::Partition { low, heavy, rest } =
            mcds_core::greedy_probe(&g, &params)
        else {
            continue;
        };
        let Ok(plan) = SparsePlan::new(&g, &low, &heavy, &rest, params.ell) else {
            continue;
        };
        let all: Vec<VertexSet> = plan.iter().collect();
        let unique: HashSet<&VertexSet> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
    }
}

// families

/// Union of principal ideals (downward) or filters (upward) generated by `gens`.
fn monotone_member(gens: Vec<VertexSet>, upward: bool) -> impl FnMut(&VertexSet) -> bool + Clone {
    move |s: &VertexSet| {
        gens.iter().any(|g| {
            if upward {
                g.is_subset(s)
            } else {
                s.is_subset(g)
            }
        })
    }
}

fn arb_generators() -> impl Strategy<Value = (VertexSet, Vec<VertexSet>, bool)> {
    (1usize..=12, 0usize..=4, any::<bool>(), 0usize..=3).prop_flat_map(|(n, k, upward, gap)| {
        let universe_n = n + gap;
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), k).prop_map(
            move |rows| {
                // universe uses ids 0..n of a larger id space
                let universe = VertexSet::from_iter_in(universe_n, 0..n);
                let gens = rows
                    .iter()
                    .map(|r| VertexSet::from_iter_in(universe_n, (0..n).filter(|&v| r[v])))
                    .collect();
                (universe, gens, upward)
            },
        )
    })
}

fn brute_family(
    universe: &VertexSet,
    mut member: impl FnMut(&VertexSet) -> bool,
) -> BTreeSet<VertexSet> {
    let elems = universe.to_vec();
    (0..1u64 << elems.len())
        .map(|m| {
            VertexSet::from_iter_in(
                universe.universe(),
                elems
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, &v)| v),
            )
        })
        .filter(|s| member(s))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn family_matches_brute_force((universe, gens, upward) in arb_generators(), seed in any::<u64>()) {
        let member = monotone_member(gens, upward);
        let expected = brute_family(&universe, member.clone());

        let calls = std::cell::Cell::new(0usize);
        let counting = |s: &VertexSet| {
            calls.set(calls.get() + 1);
            member.clone()(s)
        };
        let mut emitted = Vec::new();
        let mut worst_gap = 0;
        let mut last = 0;
        let bound = 2 * universe.len() + 2;
        if upward {
            for s in enumerate_upward_closed(&universe, counting) {
                worst_gap = worst_gap.max(calls.get() - last);
                last = calls.get();
                emitted.push(s);
            }
        } else {
            for s in enumerate_downward_closed(&universe, counting) {
                worst_gap = worst_gap.max(calls.get() - last);
                last = calls.get();
                emitted.push(s);
            }
        }
        prop_assert!(worst_gap <= bound, "gap {} > {}", worst_gap, bound);
        prop_assert!(calls.get() - last <= bound);
        let unique: BTreeSet<VertexSet> = emitted.iter().cloned().collect();
        prop_assert_eq!(unique.len(), emitted.len());
        prop_assert_eq!(&unique, &expected);

        // element order changes the sequence only
        let mut order = universe.to_vec();
        let mut rng = rng_from_seed(seed);
        rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng);
        let spec = if upward {
            FamilySpec::upward(universe.clone(), member.clone())
        } else {
            FamilySpec::downward(universe.clone(), member.clone())
        };
        let permuted: BTreeSet<VertexSet> = spec.with_order(order).into_iter().collect();
        prop_assert_eq!(permuted, expected);
    }
}
